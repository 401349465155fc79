"""Command line surface: single-value queries, verification suites, CSV
tables, grid rendering, and zero-point dumps.

Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
errors (argparse's default).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from . import bpd, lgv, macdonald, maximize
from .errors import SchubspecError
from .permutations import Permutation, multi_layered
from .rings import catalan


@dataclass
class Check:
    name: str
    expected: object
    got: object

    @property
    def passed(self) -> bool:
        return self.expected == self.got

    def row(self) -> dict:
        return {
            "check": self.name,
            "expected": repr(self.expected),
            "got": repr(self.got),
            "pass": self.passed,
        }


def _emit_report(checks: list[Check], as_json: bool) -> int:
    failures = [c for c in checks if not c.passed]
    if as_json:
        payload = {
            "checks": [c.row() for c in checks],
            "passed": len(checks) - len(failures),
            "failed": len(failures),
        }
        print(json.dumps(payload, indent=2))
    else:
        for c in checks:
            mark = "ok  " if c.passed else "FAIL"
            print(f"{mark} {c.name}: expected={c.expected} got={c.got}")
        print(f"{len(checks) - len(failures)}/{len(checks)} checks passed")
    return 1 if failures else 0


def _suite_catalan(args) -> list[Check]:
    checks = []
    for n in range(4, args.n_max + 1):
        k = n // 2
        expected = catalan(k - 1) ** 2 if n % 2 == 0 else catalan(k - 1) * catalan(k)
        via_det = lgv.double_layer_factor(1, (n - 2) // 2, n % 2)
        checks.append(Check(f"det value n={n}", expected, via_det))
        if n <= min(args.guard, bpd.ENUMERATION_GUARD):
            w = multi_layered(2, (2, n - 2))
            value = bpd.root_specialization(w, 2, 1, guard=args.guard)
            checks.append(Check(f"grid value n={n}", expected, value.modulus))
    return checks


def _suite_factorization(args) -> list[Check]:
    checks = []
    for m in range(1, args.m_max + 1):
        for p in range(1, args.p_max + 1):
            for r in (0, 1):
                expected = (
                    lgv.layer_factor(m, p) ** (2 - r) * lgv.layer_factor(m, p + r) ** r
                )
                got = lgv.double_layer_factor(m, p, r)
                checks.append(Check(f"factorization m={m} p={p} r={r}", expected, got))
    return checks


def _suite_multilayer(args) -> list[Check]:
    checks = []
    for k in range(1, args.k_max + 1):
        for n0 in range(2, args.n_max + 1):
            for r in range(k):
                expected = catalan(n0 - 1) ** (k - r) * catalan(n0) ** r
                got = lgv.multi_layer_factor(k, 1, n0 - 1, r)
                checks.append(Check(f"multi value k={k} n0={n0} r={r}", expected, got))
                n = k * n0 + r
                if k <= 3 and n <= min(args.guard, bpd.ENUMERATION_GUARD):
                    w = multi_layered(k, (k, k * (n0 - 1) + r))
                    value = bpd.root_specialization(w, k, 1, guard=args.guard)
                    checks.append(
                        Check(f"grid value k={k} n0={n0} r={r}", expected, value.modulus)
                    )
    return checks


def _zero_point_forms(rows: tuple[int, ...], t: int, m: int, odd: bool) -> set:
    cells = {(i, j) for i, length in enumerate(rows, 1) for j in range(1, length + 1)}
    n = len(rows)
    if not odd:
        if t % 2 == 1:
            return {(i, j) for (i, j) in cells if i > t and i % 2 == 0 and j % 2 == 1}
        return {(i, j) for (i, j) in cells if i > t and i % 2 == 1 and j % 2 == 1}
    out = {(i, j) for (i, j) in cells if t < i < n and (i + t) % 2 == 1 and j % 2 == 0}
    if t % 2 == 1:
        out.add((n, 2 * m))
    return out


def _suite_zeropoints(args) -> list[Check]:
    checks = []
    for n in range(4, args.n_max + 1):
        for m in range(1, (n - 2) // 2 + 1):
            p, r = (n - 2 * m) // 2, n % 2
            if p < 1:
                continue
            graph = lgv.build_double(m, p, r)
            for t in range(1, 2 * m + 1):
                got = graph.zero_points(t)
                want = _zero_point_forms(graph.shape.rows, t, m, r == 1)
                checks.append(
                    Check(f"zero set n={n} m={m} T_{t}", sorted(want), sorted(got))
                )
                closure_ok = all(
                    (i, j) in got
                    for (i, j) in {
                        (i, j)
                        for i, length in enumerate(graph.shape.rows, 1)
                        for j in range(1, length + 1)
                    }
                    if (i - 2, j) in got and (i, j + 2) in got
                )
                checks.append(Check(f"closure n={n} m={m} T_{t}", True, closure_ok))
    return checks


def _suite_macdonald(args) -> list[Check]:
    import itertools

    checks = []
    for n in range(2, min(args.n_max, 5) + 1):
        mismatches = 0
        for word in itertools.permutations(range(1, n + 1)):
            w = Permutation(word)
            if macdonald.q_specialization_from_words(w, guard=16) != bpd.q_specialization(w):
                mismatches += 1
        checks.append(Check(f"all of S_{n} agree", 0, mismatches))
    if args.n_max >= 6:
        rng = random.Random(2024)
        mismatches = 0
        for _ in range(args.samples):
            word = list(range(1, 7))
            rng.shuffle(word)
            w = Permutation(word)
            if macdonald.q_specialization_from_words(w, guard=16) != bpd.q_specialization(w):
                mismatches += 1
        checks.append(Check(f"{args.samples} random S_6 agree", 0, mismatches))
    return checks


def _suite_conjectures(args) -> tuple[list[Check], list[str]]:
    checks = []
    notes = []
    for n in range(1, args.n_max + 1):
        u = maximize.max_over_symmetric_group(n)
        v = maximize.max_layered(n)
        notes.append(
            f"n={n}: u(n)={u.value} v(n)={v.value} equal={u.value == v.value} "
            f"argmaxes_layered={u.all_layered} argmax_count={len(u.argmaxes)}"
        )
        for k in range(1, args.k_max + 1):
            if n < 2:
                continue
            uk = maximize.max_root_over_symmetric_group(n, k)
            vk = maximize.max_multi_layered(n, k)
            if isinstance(uk.squared, int):
                checks.append(
                    Check(
                        f"sandwich v_k^2 <= u_k^2 <= u^2 (n={n}, k={k})",
                        True,
                        vk.value**2 <= uk.squared <= u.value**2,
                    )
                )
                notes.append(
                    f"n={n} k={k}: u_k^2={uk.squared} v_k={vk.value} "
                    f"equal={uk.squared == vk.value**2} "
                    f"argmaxes_multi_layered={uk.all_multi_layered}"
                )
    return checks, notes


def _cmd_spec(args) -> int:
    w = Permutation.from_string(args.perm)
    if args.q_mode == "one":
        value = bpd.principal_specialization(w, guard=args.guard)
        print(json.dumps({"upsilon": str(value)}) if args.json else value)
        return 0
    if args.q_mode == "poly":
        poly = bpd.q_specialization(w, guard=args.guard)
        if args.json:
            print(json.dumps({"coefficients": poly.serialize()}))
        else:
            print(json.dumps(poly.serialize()))
        return 0
    k = args.k if args.k is not None else args.q_root[0]
    j = args.j if args.j is not None else args.q_root[1]
    value = bpd.root_specialization(w, k, j, guard=args.guard)
    if args.json:
        payload = {
            "k": k,
            "j": j,
            "squared": str(value.squared)
            if isinstance(value.squared, int)
            else list(value.squared.coeffs),
            "modulus": None if value.modulus is None else str(value.modulus),
            "float_modulus": value.float_modulus,
        }
        print(json.dumps(payload))
    elif value.modulus is not None:
        print(value.modulus)
    elif isinstance(value.squared, int):
        print(f"squared={value.squared} float_modulus={value.float_modulus:.12g}")
    else:
        print(
            f"squared_coeffs={list(value.squared.coeffs)} "
            f"float_modulus={value.float_modulus:.12g}"
        )
    return 0


def _cmd_verify(args) -> int:
    suite = args.suite
    if suite == "catalan":
        return _emit_report(_suite_catalan(args), args.json)
    if suite == "factorization":
        return _emit_report(_suite_factorization(args), args.json)
    if suite == "multilayer":
        return _emit_report(_suite_multilayer(args), args.json)
    if suite == "zeropoints":
        return _emit_report(_suite_zeropoints(args), args.json)
    if suite == "macdonald":
        return _emit_report(_suite_macdonald(args), args.json)
    checks, notes = _suite_conjectures(args)
    if not args.json:
        for note in notes:
            print(f"note {note}")
    else:
        print(json.dumps({"notes": notes, "checks": [c.row() for c in checks]}, indent=2))
        return 1 if any(not c.passed for c in checks) else 0
    return _emit_report(checks, args.json)


def _cmd_table(args) -> int:
    rows = []
    if args.target == "v":
        header = "n,value,log2_ratio,argmax"
        for n in range(1, args.n_max + 1):
            record = (
                maximize.max_layered(n)
                if args.mode == "exact"
                else maximize.max_layered_log(n)
            )
            rows.append(_table_row(record, with_k=False))
    else:
        header = "n,k,value,log2_ratio,argmax"
        k = 2 if args.target == "vtilde" else args.k
        if args.target == "vk" and k is None:
            print("table vk requires --k", file=sys.stderr)
            return 2
        start = max(2, k)
        for n in range(start, args.n_max + 1):
            record = (
                maximize.max_doubly_layered(n)
                if args.target == "vtilde"
                else maximize.max_multi_layered(n, k)
            )
            rows.append(_table_row(record, with_k=True))
    print(header)
    for row in rows:
        print(row)
    return 0


def _table_row(record: maximize.MaxRecord, with_k: bool) -> str:
    value = str(record.value) if record.value is not None else ""
    ratio = f"{record.log2_value / (record.n * record.n):.12g}"
    argmax = "+".join(str(b) for b in record.argmax)
    if with_k:
        return f"{record.n},{record.k},{value},{ratio},{argmax}"
    return f"{record.n},{value},{ratio},{argmax}"


def _cmd_bpd(args) -> int:
    w = Permutation.from_string(args.perm)
    if args.all:
        grids = sorted(
            bpd.enumerate_bpds(w, guard=args.guard), key=lambda g: g.serialize()
        )
        for idx, grid in enumerate(grids):
            if idx:
                print()
            print(grid.render())
        print(f"# {len(grids)} grids", file=sys.stderr)
    else:
        print(bpd.rothe_bpd(w).render())
    return 0


def _cmd_zeropoints(args) -> int:
    n = args.n
    m = args.m
    p, r = (n - 2 * m) // 2, n % 2
    if p < 1 or 2 * m + 2 * p + r != n:
        print(f"no double staircase with n={n}, m={m}", file=sys.stderr)
        return 2
    graph = lgv.build_double(m, p, r)
    payload: dict = {"shape": graph.shape.serialize()}
    for t in range(1, 2 * m + 1):
        zeros = sorted(graph.zero_points(t))
        payload[f"T_{t}"] = [list(c) for c in zeros]
        if not args.json:
            cells = " ".join(f"({i},{j})" for i, j in zeros)
            print(f"T_{t}: {cells}")
    if args.json:
        print(json.dumps(payload))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubspec",
        description="Exact Schubert polynomial specializations at roots of unity",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=0,
        help="advisory worker count; the pure-Python engines run single-threaded "
        "and produce identical output for any value",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    spec = sub.add_parser("spec", help="evaluate one permutation")
    spec.add_argument("perm", help="one-line notation, e.g. 1,4,3,2")
    spec.add_argument("q_mode", choices=["one", "poly", "root"])
    spec.add_argument("k", nargs="?", type=int, default=None)
    spec.add_argument("j", nargs="?", type=int, default=None)
    spec.add_argument("--q-root", nargs=2, type=int, default=(2, 1), metavar=("K", "J"))
    spec.add_argument("--guard", type=int, default=bpd.ENUMERATION_GUARD)
    spec.add_argument("--json", action="store_true")
    spec.set_defaults(func=_cmd_spec)

    verify = sub.add_parser("verify", help="run a named verification suite")
    verify.add_argument(
        "suite",
        choices=[
            "catalan",
            "factorization",
            "multilayer",
            "zeropoints",
            "macdonald",
            "conjectures",
        ],
    )
    verify.add_argument("--n-max", type=int, default=None)
    verify.add_argument("--m-max", type=int, default=4)
    verify.add_argument("--p-max", type=int, default=6)
    verify.add_argument("--k-max", type=int, default=3)
    verify.add_argument("--samples", type=int, default=25)
    verify.add_argument("--guard", type=int, default=bpd.ENUMERATION_GUARD)
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=_cmd_verify)

    table = sub.add_parser("table", help="emit a CSV of layered maxima")
    table.add_argument("target", choices=["v", "vtilde", "vk"])
    table.add_argument("n_max", type=int)
    table.add_argument("--mode", choices=["exact", "log"], default="exact")
    table.add_argument("--k", type=int, default=None)
    table.set_defaults(func=_cmd_table)

    grid = sub.add_parser("bpd", help="render bumpless pipe dream grids")
    grid.add_argument("perm")
    grid.add_argument("--all", action="store_true", help="render the full set")
    grid.add_argument("--guard", type=int, default=bpd.ENUMERATION_GUARD)
    grid.set_defaults(func=_cmd_bpd)

    zeros = sub.add_parser("zeropoints", help="dump zero-point sets")
    zeros.add_argument("n", type=int)
    zeros.add_argument("--m", type=int, default=1)
    zeros.add_argument("--json", action="store_true")
    zeros.set_defaults(func=_cmd_zeropoints)
    return parser


_SUITE_DEFAULT_N = {
    "catalan": 14,
    "factorization": 6,
    "multilayer": 5,
    "zeropoints": 12,
    "macdonald": 6,
    "conjectures": 6,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 0:
        parser.error("--threads must be >= 0")
    if getattr(args, "suite", None) is not None and args.n_max is None:
        args.n_max = _SUITE_DEFAULT_N[args.suite]
    try:
        return args.func(args)
    except SchubspecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
