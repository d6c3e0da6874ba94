"""Command-line interface: analysis, decomposition, construction, tables,
Pauli certification, and fidelity sweeps over the shared file formats.

Exit codes: 0 on success, 1 on domain errors (bad codes, violated
preconditions, budget), 2 on usage errors (argparse).
"""

from __future__ import annotations

import argparse
import itertools
import os
import sys
from fractions import Fraction

import numpy as np

from .errors import EaqecneError, FormatError
from .gf import SUPPORTED_ORDERS, field, quadratic_field
from . import addcodes as ac
from . import eaqec, fidelity as fid, linalg, pauli, symplectic as sp


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("EAQECNE_THREADS", "1")))
    except ValueError:
        return 1


def _load_code(path: str, symplectic_input: bool) -> ac.AdditiveCode:
    F, M = linalg.load_matrix(path)
    if symplectic_input:
        if F.order not in SUPPORTED_ORDERS:
            raise FormatError(
                f"symplectic input needs a base-field order from "
                f"{SUPPORTED_ORDERS}, got {F.order}")
        if M.shape[1] % 2:
            raise FormatError("symplectic input needs an even column count")
        return ac.AdditiveCode.from_preimage(quadratic_field(F), M)
    if not F.is_quadratic:
        raise FormatError(
            f"code files need a quadratic-extension order, got {F.order}; "
            "pass --symplectic for base-field preimage matrices")
    return ac.AdditiveCode.from_generators(F, M, n=M.shape[1])


def format_analysis(params: eaqec.EAQECCParams, l: int, m: int,
                    compute_d: bool) -> str:
    q = params.q
    d_part = "" if params.d is None else f",{params.d}"
    if params.c == 0:
        line = f"[[{params.n},{params.k}{d_part}]]_{q} c=0 l={l} m={m}"
    else:
        line = f"[[{params.n},{params.k}{d_part};{params.c}]]_{q} l={l} m={m}"
    if compute_d and params.d is None:
        line += " d=undefined"
    return line


def cmd_analyze(args) -> int:
    code = _load_code(args.codefile, args.symplectic)
    compute_d = not args.no_distance
    params = eaqec.eaqec_params(code, compute_d, budget=args.budget)
    print(format_analysis(params, params.l, code.m, compute_d))
    return 0


def cmd_decompose(args) -> int:
    code = _load_code(args.codefile, args.symplectic)
    dec = ac.radical_decompose(code)
    print(f"q2={code.field.order} n={code.n} m={code.m} l={dec.l} c={dec.c}")
    if args.symplectic:
        F = code.base_field
        print(sp.dump_preimage(F, dec.radical.preimage,
                               ("radical basis",)), end="")
        print(sp.dump_preimage(F, dec.complement.preimage,
                               ("complement basis",)), end="")
    else:
        print(linalg.dump_matrix(code.field, dec.radical.generators,
                                 comments=("radical generators",)), end="")
        print(linalg.dump_matrix(code.field, dec.complement.generators,
                                 comments=("complement generators",)), end="")
    return 0


def cmd_mindist(args) -> int:
    code = _load_code(args.codefile, args.symplectic)
    strategy = "partitioned" if (args.partitioned or args.threads > 1) else "full"
    res = ac.min_weight_detail(code, budget=args.budget, strategy=strategy,
                               threads=args.threads)
    d = "undefined" if res.is_undefined(code.n) else str(res.weight)
    print(f"d={d} enumerated={res.examined}")
    return 0


def cmd_combine(args) -> int:
    fa, G = linalg.load_matrix(args.G)
    fb, G2 = linalg.load_matrix(args.G2)
    fc, E = linalg.load_matrix(args.E)
    if not (fa is fb is fc):
        raise FormatError("G, G2, E must share one field order")
    if not fa.is_quadratic:
        raise FormatError("combine expects matrices over a quadratic extension")
    _, report = eaqec.combine_construct(fa, G, G2, E,
                                        compute_d=not args.no_distance,
                                        budget=args.budget)
    for line in report.lines():
        print(line)
    return 0


def _parse_ints(text: str, count: int, what: str) -> list[int | None]:
    parts = text.split(",")
    if len(parts) != count:
        raise FormatError(f"{what} needs {count} comma-separated values")
    out = []
    for tok in parts:
        tok = tok.strip()
        out.append(None if tok in ("?", "") else int(tok))
    return out


def cmd_match(args) -> int:
    n, k, d, c = _parse_ints(args.alice, 4, "--alice")
    m, kb, db = _parse_ints(args.bob, 3, "--bob")
    alice = eaqec.EAQECCParams(q=args.q, n=n, k=k, c=c, d=d)
    bob = eaqec.QECCParams(q=args.q, n=m, k=kb, d=db)
    print(f"match={eaqec.classify_match(alice, bob)}")
    return 0


def cmd_tables(args) -> int:
    ms = tuple(int(t) for t in args.family_m.split(","))
    print(eaqec.tables_csv(ms), end="")
    return 0


def cmd_fidelity(args) -> int:
    N, d = _parse_ints(args.c, 2, "--c")
    n, da = _parse_ints(args.ea, 2, "--ea")
    m, db = _parse_ints(args.b, 2, "--b")
    lam = Fraction(args.lam)
    if lam > 1:
        print(f"warning: degradation coefficient {args.lam} exceeds 1",
              file=sys.stderr)
    grid = fid.parse_grid(args.grid)
    curve = fid.sweep((N, d), ((n, da), (m, db)), lam, grid)
    text = fid.curve_csv(curve)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {len(curve.rows)} rows to {args.csv}")
    else:
        print(text, end="")
    return 0


def cmd_verify_pauli(args) -> int:
    p, n = args.p, args.n
    F = field(p)
    rng = np.random.default_rng(args.seed)
    failures = 0

    def report(name: str, detail: str, ok: bool):
        nonlocal failures
        if not ok:
            failures += 1
        print(f"{name} p={p} n={n} {detail} {'pass' if ok else 'FAIL'}")

    classes = [(x, z) for x in _tuples(p, n) for z in _tuples(p, n)]
    exhaustive = len(classes) ** 2 <= args.samples ** 2 and len(classes) ** 2 <= 10000
    if exhaustive:
        ok = True
        for x, z in classes:
            for x2, z2 in classes:
                g = pauli.PauliLabel(p, n, 0, x, z)
                h = pauli.PauliLabel(p, n, 0, x2, z2)
                s = pauli.commutation_phase(g, h)
                if s != sp.symp_inner(F, g.symplectic_image(), h.symplectic_image()):
                    ok = False
        report("commutation-law", f"pairs={len(classes) ** 2} mode=exhaustive", ok)
    else:
        ok = True
        for _ in range(args.samples):
            g = pauli.random_label(p, n, rng)
            h = pauli.random_label(p, n, rng)
            s = pauli.commutation_phase(g, h)
            if s != sp.symp_inner(F, g.symplectic_image(), h.symplectic_image()):
                ok = False
        report("commutation-law", f"pairs={args.samples} mode=random", ok)

    ok = True
    for _ in range(args.sets):
        m = int(rng.integers(1, n + 1))
        labels = pauli.random_stabilizer_labels(p, n, m, rng)
        if pauli.codespace_dim(labels) != p ** (n - m):
            ok = False
    report("projector-rank", f"sets={args.sets}", ok)
    return 1 if failures else 0


def _tuples(p: int, n: int):
    return list(itertools.product(range(p), repeat=n))


def cmd_print_field(args) -> int:
    orders = [args.order] if args.order else \
        sorted(set(SUPPORTED_ORDERS) | {q * q for q in SUPPORTED_ORDERS})
    for order in orders:
        F = field(order)
        if F.base is None:
            print(f"GF({order}): prime field, elements 0..{order - 1}")
        else:
            print(f"GF({order}) = GF({F.base.order})[x]/({F.modulus_str()})"
                  f", encoding index = sum(coeff_i * {F.base.order}^i)")
        if F.is_quadratic:
            print(f"  beta=x (index {F.beta}), beta^q index {F.beta_conj}, "
                  f"beta^2-beta^(2q) index {F.alt_normalizer}")
        if args.order:
            for a in range(F.order):
                print(f"  {a}: {F.poly_str(a)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eaqecne",
        description="q-ary entanglement-assisted quantum codes with noisy "
                    "ebits: analysis, construction, certification, fidelity.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_budget(p):
        p.add_argument("--budget", type=int, default=ac.DEFAULT_BUDGET,
                       help="enumeration word cap (default 2^30)")

    def add_symplectic(p):
        p.add_argument("--symplectic", action="store_true",
                       help="input file is a base-field preimage matrix "
                            "with 2n columns")

    p = sub.add_parser("analyze", help="EA parameters of a code file")
    p.add_argument("codefile")
    p.add_argument("--no-distance", action="store_true")
    add_symplectic(p)
    add_budget(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decompose", help="radical/complement split of a code")
    p.add_argument("codefile")
    add_symplectic(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("mindist", help="minimum weight by exhaustive enumeration")
    p.add_argument("codefile")
    p.add_argument("--partitioned", action="store_true",
                   help="partition by the leading coefficient digit")
    p.add_argument("--threads", type=int, default=_default_threads())
    add_symplectic(p)
    add_budget(p)
    p.set_defaults(func=cmd_mindist)

    p = sub.add_parser("combine", help="stack (G|0),(G2|E) and report")
    p.add_argument("G")
    p.add_argument("G2")
    p.add_argument("E")
    p.add_argument("--no-distance", action="store_true")
    add_budget(p)
    p.set_defaults(func=cmd_combine)

    p = sub.add_parser("match", help="classify an Alice/Bob parameter pair")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--alice", required=True, metavar="n,k,d,c")
    p.add_argument("--bob", required=True, metavar="m,kb,db")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("tables", help="published parameter families as CSV")
    p.add_argument("--family-m", default="2,3,4",
                   help="instantiations of the binary family parameter")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("fidelity", help="channel-fidelity sweep as CSV")
    p.add_argument("--c", required=True, metavar="N,d")
    p.add_argument("--ea", required=True, metavar="n,d")
    p.add_argument("--b", required=True, metavar="m,db")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="ebit degradation coefficient p_b/p_a")
    p.add_argument("--grid", required=True, metavar="start:stop:steps")
    p.add_argument("--csv", help="write the CSV here instead of stdout")
    p.set_defaults(func=cmd_fidelity)

    p = sub.add_parser("verify-pauli", help="certify commutation and "
                                            "projector-rank laws")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--sets", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_pauli)

    p = sub.add_parser("print-field", help="modulus table and element encodings")
    p.add_argument("--order", type=int)
    p.set_defaults(func=cmd_print_field)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EaqecneError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
