"""``pinwheel-lattice`` command-line interface.

Data goes to stdout as JSON; diagnostics go to stderr.  Exit codes: 0 when
a question was evaluated (whatever the answer), 1 when a replication fact
fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .cache import cached_enumerate
from .cones import is_monotone, kahler_cone_x5_special, symplectic_cone_contains
from .enumeration import (
    EnumQuery,
    audin_admissible,
    classify_exceptional,
    disjoint_rp2_class_pairs,
)
from .errors import ParseError, PinwheelError
from .lattice import Chart, PeriodVector, get_chart, parse_rational, reduce_mod, std_chart
from .pinwheels import (
    blowup_target,
    del_pezzo_rp2_pair_must_intersect,
    l31_exists,
    l31_solve,
    l31_witness,
    rp2_complement_map,
    rp2_disjoinable,
    rp2_exists_H,
    rp2_exists_sum,
    transport_rp2_blowdown,
    transport_rp2_blowup,
    two_rp2_witness,
)
from .reflections import canonicalize, canonicalize_mod, same_orbit
from .serialization import (
    certificate_to_json,
    class_to_json,
    delpezzo_to_json,
    dumps,
    error_doc,
    periods_to_json,
    report_to_json,
    result_doc,
    verdict_to_json,
)


class UsageError(PinwheelError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rationals(text: str, n: int | None = None) -> list:
    parts = [p for p in text.split(",")]
    if n is not None and len(parts) != n:
        raise ParseError(f"expected {n} comma-separated values, got {len(parts)}: {text!r}")
    return [parse_rational(p) for p in parts]


def _chart(name: str) -> Chart:
    return get_chart(name)


def _periods(args) -> PeriodVector:
    chart = _chart(args.manifold)
    return PeriodVector(chart, tuple(_rationals(args.periods, chart.rank)))


def _x3(args):
    if get_chart(args.manifold) != std_chart(3):
        raise PinwheelError(f"this command needs --manifold X3, got {args.manifold}")
    vals = _rationals(args.periods, 4)
    return vals[0], vals[1:]


def _cache_kwargs(args) -> dict:
    return {"root": Path(args.cache_dir) if args.cache_dir else None, "use_cache": not args.no_cache,
            "workers": args.workers}


# --------------------------------------------------------------------------- #
# handlers; each returns a JSON document

def cmd_cone(args) -> dict:
    if args.action == "check":
        return verdict_to_json(symplectic_cone_contains(_periods(args)))
    if args.action == "monotone":
        return result_doc(is_monotone(_periods(args)))
    mt = _rationals(args.mu_tilde, 4)
    return verdict_to_json(kahler_cone_x5_special(parse_rational(args.alpha), parse_rational(args.beta), mt))


def cmd_enumerate(args) -> dict:
    a = args.action
    if a == "exceptional":
        classes = cached_enumerate(EnumQuery(args.k, -1, 1), **_cache_kwargs(args))
        return result_doc([str(c) for c in classes], families=[classify_exceptional(c).label for c in classes],
                          chart=std_chart(args.k).name)
    if a == "spheres":
        n = -args.square
        if n < 1:
            raise PinwheelError("--square must be negative")
        classes = cached_enumerate(EnumQuery(args.k, -n, 2 - n), **_cache_kwargs(args))
        reps = sorted({canonicalize(c)[0] for c in classes}, key=lambda c: c.coeffs)
        return result_doc([str(r) for r in reps], chart=std_chart(args.k).name)
    if a == "invariants":
        classes = cached_enumerate(EnumQuery(args.k, args.square, args.c1), **_cache_kwargs(args))
        return result_doc([str(c) for c in classes], chart=std_chart(args.k).name)
    if a == "audin":
        rows = audin_admissible(args.k)
        return result_doc([str(m) for m, _ in rows], families=[f.label for _, f in rows],
                          chart=std_chart(args.k).name)
    pairs = disjoint_rp2_class_pairs(args.k)
    return result_doc([[str(x), str(y)] for x, y in pairs], chart=std_chart(args.k).name)


def _lambda_or_ab(args):
    if args.lam is not None:
        if args.a is not None or args.b is not None:
            raise UsageError("give either --lambda or --a/--b")
        return parse_rational(args.lam), 1
    if args.a is None:
        raise UsageError("give --lambda or --a (and optionally --b)")
    return parse_rational(args.a), parse_rational(args.b) if args.b is not None else 1


def cmd_pinwheel(args) -> dict:
    a = args.action
    if a in ("disjoinable", "exists-sum", "exists-h"):
        h, mu = _x3(args)
        fn = {"disjoinable": rp2_disjoinable, "exists-sum": rp2_exists_sum, "exists-h": rp2_exists_H}[a]
        return result_doc(fn(h, mu))
    if a == "witness":
        h, mu = _x3(args)
        return report_to_json(two_rp2_witness(h, mu))
    if a == "l31":
        return result_doc(l31_exists(*_lambda_or_ab(args)))
    if a == "l31-witness":
        return report_to_json(l31_witness(*_lambda_or_ab(args)))
    if a == "l31-solve":
        a_, b_ = _lambda_or_ab(args)
        p = l31_solve(a_, b_, parse_rational(args.eps1), parse_rational(args.eps2))
        return result_doc(periods_to_json(p))
    if a == "delpezzo":
        return delpezzo_to_json(del_pezzo_rp2_pair_must_intersect(args.k))
    target = blowup_target(args.manifold, [p for p in args.pinwheels.split(";") if p.strip()])
    return result_doc(target.name)


def cmd_canonicalize(args) -> dict:
    chart = _chart(args.manifold)
    a = chart.parse(args.cls)
    if args.mod is not None:
        m = reduce_mod(a, args.mod)
        c = canonicalize_mod(m)
        doc = result_doc(str(c), coeffs=list(c.coeffs), modulus=args.mod)
        if args.same_as is not None:
            doc["same_orbit"] = canonicalize_mod(reduce_mod(chart.parse(args.same_as), args.mod)) == c
        return doc
    c, cert = canonicalize(a)
    doc = result_doc(str(c), **{"class": class_to_json(c), "certificate": certificate_to_json(cert)})
    if args.same_as is not None:
        ok, cert2 = same_orbit(a, chart.parse(args.same_as))
        doc["same_orbit"] = ok
        doc["same_orbit_certificate"] = certificate_to_json(cert2) if cert2 else None
    return doc


def cmd_transport(args) -> dict:
    if args.action == "blowup":
        return result_doc(list(transport_rp2_blowup(_rationals(args.mu, 3), parse_rational(args.eps))))
    if args.action == "blowdown":
        mu, eps = transport_rp2_blowdown(_rationals(args.mu_tilde, 4))
        return result_doc({"mu": list(mu), "eps": eps})
    img = rp2_complement_map(std_chart(3).parse(args.cls))
    return result_doc(str(img), **{"class": class_to_json(img)})


def cmd_replicate(args) -> tuple[dict | None, int]:
    from .replicate import groups, run

    if args.only is not None and args.only not in groups():
        raise UsageError(f"unknown group {args.only!r}; choose from {', '.join(groups())}")
    report = run(seed=args.seed, only=args.only)
    s = report["summary"]
    print(f"replicate: {s['passed']}/{s['total']} facts pass", file=sys.stderr)
    for f in report["facts"]:
        if not f["pass"]:
            print(f"  FAIL {f['id']}: expected {f['expected']!r}, computed {f['computed']!r}", file=sys.stderr)
    code = 0 if s["failed"] == 0 else 1
    if args.out is None:
        return report, code
    try:
        Path(args.out).write_text(dumps(report))
    except OSError as e:
        print(dumps(error_doc(e)), end="")
        return None, 2
    return None, code


# --------------------------------------------------------------------------- #

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pinwheel-lattice", description="Exact lattice and cone computations for Lagrangian pinwheels.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    cone = sub.add_parser("cone", help="cone membership")
    cs = cone.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name in ("check", "monotone"):
        q = cs.add_parser(name)
        q.add_argument("--manifold", required=True, help="X0..X8, CP2 or S2xS2")
        q.add_argument("--periods", required=True, help="comma-separated p/q values")
    q = cs.add_parser("kahler-x5")
    q.add_argument("--alpha", required=True)
    q.add_argument("--beta", required=True)
    q.add_argument("--mu-tilde", required=True, help="four comma-separated values")

    en = sub.add_parser("enumerate", help="class enumeration")
    es = en.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name in ("exceptional", "spheres", "invariants", "audin", "pairs"):
        q = es.add_parser(name)
        q.add_argument("--k", type=int, required=True)
        q.add_argument("--no-cache", action="store_true")
        q.add_argument("--cache-dir")
        q.add_argument("--workers", type=int, default=1)
        if name in ("spheres", "invariants"):
            q.add_argument("--square", type=int, required=True)
        if name == "invariants":
            q.add_argument("--c1", type=int, required=True)

    pw = sub.add_parser("pinwheel", help="pinwheel decision procedures")
    ps = pw.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name in ("disjoinable", "exists-sum", "exists-h", "witness"):
        q = ps.add_parser(name)
        q.add_argument("--manifold", default="X3")
        q.add_argument("--periods", required=True, help="h,mu1,mu2,mu3")
    for name in ("l31", "l31-witness", "l31-solve"):
        q = ps.add_parser(name)
        q.add_argument("--lambda", dest="lam")
        q.add_argument("--a")
        q.add_argument("--b")
        if name == "l31-solve":
            q.add_argument("--eps1", required=True)
            q.add_argument("--eps2", required=True)
    q = ps.add_parser("delpezzo")
    q.add_argument("--k", type=int, required=True)
    q = ps.add_parser("blowup-target")
    q.add_argument("--manifold", required=True)
    q.add_argument("--pinwheels", required=True, help="semicolon-separated, e.g. 'L(2,1);L(2,1)'")

    cn = sub.add_parser("canonicalize", help="orbit canonical forms")
    cn.add_argument("--manifold", default="X3")
    cn.add_argument("--class", dest="cls", required=True)
    cn.add_argument("--mod", type=int)
    cn.add_argument("--same-as")

    tr = sub.add_parser("transport", help="period transport and the complement map")
    ts = tr.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = ts.add_parser("blowup")
    q.add_argument("--mu", required=True)
    q.add_argument("--eps", required=True)
    q = ts.add_parser("blowdown")
    q.add_argument("--mu-tilde", required=True)
    q = ts.add_parser("complement")
    q.add_argument("--class", dest="cls", required=True)

    rp = sub.add_parser("replicate", help="run every recorded fact and write a report")
    rp.add_argument("--out")
    rp.add_argument("--seed", type=int, default=0)
    rp.add_argument("--only")
    return p


_HANDLERS = {
    "cone": cmd_cone,
    "enumerate": cmd_enumerate,
    "pinwheel": cmd_pinwheel,
    "canonicalize": cmd_canonicalize,
    "transport": cmd_transport,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "replicate":
            doc, code = cmd_replicate(args)
        else:
            doc, code = _HANDLERS[args.command](args), 0
    except (PinwheelError, ValueError) as e:
        print(dumps(error_doc(e)), end="")
        print(f"error: {e}", file=sys.stderr)
        return 2
    if doc is not None:
        print(dumps(doc), end="")
    return code


if __name__ == "__main__":
    sys.exit(main())
