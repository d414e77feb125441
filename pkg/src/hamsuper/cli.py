"""Command-line interface: build algebras, verify them, solve, round-trip.

Exit codes are a stable contract: 0 success / all checks pass, 1 check or
schema failure, 2 usage or parameter error.  All numeric output is printed
as canonical residues in [0, p), and identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import bidersolve, lsa, weights, wittham
from .superspace import Space

CHECKS = ("jacobi", "perfect", "center", "grading", "weights", "lemma45")


def _parse_t(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError("--t expects a comma-separated list of integers, got %r" % text)


def _add_params(ap: argparse.ArgumentParser) -> None:
    ap.add_argument("--p", type=int, required=True, help="odd prime > 2")
    ap.add_argument("--m", type=int, required=True, help="number of even variables (even, >= 2)")
    ap.add_argument("--n", type=int, required=True, help="number of odd variables (even, >= 2)")
    ap.add_argument("--t", type=str, required=True,
                    help="comma-separated divided-power heights, one per even variable")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hamsuper",
        description="Exact Hamiltonian Lie superalgebras over GF(p) and their "
                    "skew-symmetric super-biderivations.")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct the algebras and print dimensions")
    _add_params(b)
    b.add_argument("--out", type=str, default=None, help="write the algebra JSON here")

    v = sub.add_parser("verify", help="run structural checks")
    _add_params(v)
    v.add_argument("--check", action="append", choices=CHECKS + ("all",), default=None,
                   help="check to run (repeatable; default all)")

    s = sub.add_parser("solve", help="solve for superderivations or super-biderivations")
    _add_params(s)
    s.add_argument("--target", choices=("bider", "der"), default="bider")
    s.add_argument("--parity", choices=("even", "odd", "both"), default="both")
    s.add_argument("--method", choices=bidersolve.METHODS, default="direct")
    s.add_argument("--out", type=str, default=None, help="write the report JSON here")

    r = sub.add_parser("roundtrip", help="import an algebra JSON, re-export, compare")
    r.add_argument("--in", dest="input", type=str, required=True, help="algebra JSON file")
    return ap


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_build(args) -> int:
    space = Space(args.p, args.m, args.n, _parse_t(args.t))
    hbar = wittham.build_hbar(args.p, args.m, args.n, space.t)
    H = wittham.build_h(args.p, args.m, args.n, space.t, hbar=hbar)
    torus = weights.torus_basis(H)
    print("dim Lambda = %d" % len(space.basis))
    print("dim W      = %d" % (space.s * len(space.basis)))
    print("dim Hbar   = %d" % hbar.dim)
    print("dim H      = %d" % H.dim)
    print("dim T_H    = %d" % len(torus))
    print("grading:")
    by_degree = {}
    for z in H.zdegrees:
        by_degree[z] = by_degree.get(z, 0) + 1
    for z in sorted(by_degree):
        print("  degree %d: dim %d" % (z, by_degree[z]))
    if args.out is not None:
        _emit(lsa.to_json_text(H), args.out)
        print("wrote %s" % args.out)
    return 0


def _run_checks(H, selected: List[str]) -> bool:
    ok = True
    for name in selected:
        if name == "jacobi":
            rep = lsa.jacobi_check(H)
            good, detail = rep.ok, (rep.message or "all triples clean")
        elif name == "perfect":
            sub, _ = lsa.derived_subalgebra(H)
            good = sub.dim == H.dim
            detail = "derived dim %d of %d" % (sub.dim, H.dim)
        elif name == "center":
            z = lsa.center(H)
            good = not z
            detail = "center dim %d" % len(z)
        elif name == "grading":
            bad = [(i, j, k) for (i, j), row in H.constants.items() for k in row
                   if H.zdegrees[k] != H.zdegrees[i] + H.zdegrees[j]]
            lo, hi = min(H.zdegrees), max(H.zdegrees)
            good = not bad and lo >= -1
            detail = "degrees %d..%d, %d additivity violations" % (lo, hi, len(bad))
        elif name == "weights":
            dec = weights.decompose(H)
            good = dec.total() == H.dim
            detail = "%d weight spaces, dims sum to %d" % (len(dec.spaces), dec.total())
        elif name == "lemma45":
            rep45 = weights.lemma_weight_report(H)
            good = True
            geom = H.geom
            for i in range(1, geom.space.m + 1):
                want = {H.monomials.index(m) for m in H.monomials
                        if m.degree == 1 and m.alpha[i - 1] == 1}
                good = good and want <= set(weights.lemma_weight_space(H, "eps_i", i))
            for j in range(geom.space.m + 1, geom.space.s + 1):
                want = {H.monomials.index(m) for m in H.monomials
                        if m.degree == 1 and m.u == (j,)}
                good = good and want <= set(weights.lemma_weight_space(H, "odd_j", None, j))
            agree = sum(1 for v in rep45.values() if v["agree"])
            detail = "%d/%d families agree with computed eigenspaces" % (agree, len(rep45))
        else:  # pragma: no cover
            raise ValueError("unknown check %r" % name)
        print("check %-7s: %s (%s)" % (name, "pass" if good else "FAIL", detail))
        ok = ok and good
    return ok


def cmd_verify(args) -> int:
    H = wittham.build_h(args.p, args.m, args.n, _parse_t(args.t))
    selected = args.check or ["all"]
    if "all" in selected:
        selected = list(CHECKS)
    ok = _run_checks(H, selected)
    return 0 if ok else 1


def cmd_solve(args) -> int:
    H = wittham.build_h(args.p, args.m, args.n, _parse_t(args.t))
    parities = {"even": (0,), "odd": (1,), "both": (0, 1)}[args.parity]
    if args.target == "der":
        doc = {"algebra": {"p": args.p, "m": args.m, "n": args.n, "t": list(_parse_t(args.t))},
               "dim_der": {}}
        for gamma in parities:
            sols = bidersolve.solve_derivations(H, gamma)
            doc["dim_der"]["even" if gamma == 0 else "odd"] = len(sols)
        text = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
        _emit(text, args.out)
        if args.out is not None:
            print("wrote %s" % args.out)
        return 0
    report = bidersolve.verify_theorem(H, methods=(args.method,))
    text = json.dumps(report.to_json_dict(), sort_keys=True, separators=(",", ":")) + "\n"
    _emit(text, args.out)
    if args.out is not None:
        print("wrote %s" % args.out)
    return 0 if report.ok else 1


def cmd_roundtrip(args) -> int:
    try:
        with open(args.input) as fh:
            text = fh.read()
    except OSError as exc:
        print("cannot read %s: %s" % (args.input, exc), file=sys.stderr)
        return 1
    try:
        L = lsa.from_json_text(text)
        once = lsa.to_json_text(L)
        twice = lsa.to_json_text(lsa.from_json_text(once))
    except (lsa.SchemaViolation, lsa.InvariantViolation) as exc:
        print("import rejected: %s" % exc, file=sys.stderr)
        return 1
    if once != twice:
        print("round trip is not the identity", file=sys.stderr)
        return 1
    print("round trip ok (%d basis elements, %d bracket pairs)"
          % (L.dim, len(L.constants)))
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    handlers = {"build": cmd_build, "verify": cmd_verify,
                "solve": cmd_solve, "roundtrip": cmd_roundtrip}
    try:
        return handlers[args.command](args)
    except ValueError as exc:
        print("parameter error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
