from fractions import Fraction
from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from pinwheel_lattice.intlinalg import determinant, hermite_rows, integer_kernel, solve_rational

small = st.integers(-5, 5)


def test_determinant_basic():
    assert determinant([]) == 1
    assert determinant([[2]]) == 2
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[1, 2], [2, 4]]) == 0
    assert determinant([[-4, 1], [1, 0]]) == -1


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_determinant_matches_cofactor(m):
    a, b, c = m
    expected = (a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
                + a[2] * (b[0] * c[1] - b[1] * c[0]))
    assert determinant(m) == expected


def test_hermite_identifies_equal_lattices():
    assert hermite_rows([(1, 2), (2, 1)]) == hermite_rows([(1, 2), (3, 3)])
    assert hermite_rows([(2, 0), (0, 2)]) != hermite_rows([(1, 1), (1, -1)])
    assert hermite_rows([(0, 0, 0)]) == []


@given(st.lists(st.tuples(small, small, small), min_size=1, max_size=5), st.lists(small, min_size=5, max_size=5))
def test_hermite_invariant_under_row_operations(gens, coeffs):
    extra = tuple(sum(c * g[i] for c, g in zip(coeffs, gens)) for i in range(3))
    assert hermite_rows(gens, 3) == hermite_rows(list(gens) + [extra], 3)


@settings(max_examples=50)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=2))
def test_kernel_is_complete_on_a_box(a):
    ker = integer_kernel(a, 4)
    for v in ker:
        assert all(sum(r[i] * v[i] for i in range(4)) == 0 for r in a)
    span = hermite_rows(ker, 4)
    for x in product(range(-2, 3), repeat=4):
        if all(sum(r[i] * x[i] for i in range(4)) == 0 for r in a) and any(x):
            assert hermite_rows(list(span) + [x], 4) == span


def test_solve_rational():
    assert solve_rational([[2, 1], [1, 3]], [Fraction(3), Fraction(4)]) == (Fraction(1), Fraction(1))
