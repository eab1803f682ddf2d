"""Command-line interface: construct, encode, decode, simulate, params, oracle.

Exit codes: 0 success, 1 invalid input, 2 internal assertion.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from . import gf2
from .code import CodeError, GGCode, code_from_profile
from .decode import decode_one
from .formats import (
    SpecError,
    dump_code_spec,
    dump_field_matrix,
    dump_word_matrix,
    dump_words,
    load_word_matrices,
    load_words,
    parse_code_spec,
)
from .galois import gf_make_ctx
from .ileave import InterleavedCode, joint_decode, radius_joint, radius_joint_even, radius_unique
from .oracles import oracle_decode_exhaustive, oracle_min_distance
from .params import CSV_FIELDS as PARAM_FIELDS
from .params import format_table, paper_table1, params_table
from .simulate import SimConfig, results_csv, simulate


def _bool(s: str) -> bool:
    if s.lower() in ("1", "true", "yes", "on"):
        return True
    if s.lower() in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"not a boolean: {s!r}")


def _int_list(s: str) -> List[int]:
    return [int(tok) for tok in s.split(",") if tok.strip()]


def _profile(s: str) -> dict:
    """'1:52,2:52' -> {1: 52, 2: 52}"""
    out = {}
    for tok in s.split(","):
        deg, _, count = tok.partition(":")
        out[int(deg)] = int(count)
    return out


def _add_code_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("code (either --spec or the inline parameters)")
    g.add_argument("--spec", type=Path, help="code-spec file")
    g.add_argument("--m", type=int, help="extension degree for an inline code")
    g.add_argument("--profile", type=_profile, help="locator degrees and counts, e.g. 1:52,2:52")
    g.add_argument("--r", type=int, help="degree of the random irreducible Goppa polynomial")
    g.add_argument("--code-seed", type=int, default=0, help="seed for the inline Goppa polynomial")


def _load_code(args) -> GGCode:
    if args.spec is not None:
        return parse_code_spec(args.spec.read_text()).build()
    if args.m is None or args.profile is None or args.r is None:
        raise SpecError("give --spec, or all of --m, --profile and --r")
    return code_from_profile(gf_make_ctx(args.m), args.profile, args.r, args.code_seed)


def _write(path: Optional[Path], text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text)


def summary(code: GGCode, ws: Sequence[int]) -> dict:
    b = code.bounds
    out = {
        "n": code.n,
        "k": code.k,
        "r": code.r,
        "m": code.m,
        "l": code.l,
        "locator_degrees": list(code.locators.degrees),
        "separable": code.separable,
        "goppa": code.goppa.to_hex(),
        "effective_goppa": code.effective_goppa.to_hex(),
        "bounds": {k: str(v) for k, v in b.as_dict().items()},
        "bounds_floor": b.floors(),
        "t_sep": radius_unique(code),
        "t_max": {str(w): radius_joint(code, w) for w in ws},
    }
    if code.all_even:
        out["t_even_max"] = {str(w): radius_joint_even(code, w) for w in ws}
    if code.locators.rescaled:
        out["rescaled_locators"] = list(code.locators.rescaled)
    return out


def cmd_construct(args) -> int:
    code = _load_code(args)
    out: Path = args.out
    out.mkdir(parents=True, exist_ok=True)
    (out / "code.spec").write_text(dump_code_spec(code))
    (out / "H.txt").write_text(dump_field_matrix(code.H))
    (out / "Htilde.txt").write_text(dump_field_matrix(code.Htilde))
    (out / "Hbin.txt").write_text(gf2.dump_matrix(code.Hbin, code.n))
    (out / "generator.txt").write_text(gf2.dump_matrix(code.generator, code.n))
    info = summary(code, args.w)
    try:
        T = code.systematic_public_key()
        (out / "pk_T.txt").write_text(gf2.dump_matrix(T, code.k))
        info["systematic"] = True
        info["pk_bytes_packed"] = -(-(code.n - code.k) * code.k // 8)
    except CodeError:
        info["systematic"] = False
    (out / "summary.json").write_text(json.dumps(info, indent=2, sort_keys=True) + "\n")
    print(json.dumps(info, sort_keys=True))
    return 0


def cmd_encode(args) -> int:
    code = _load_code(args)
    if args.input is not None:
        msgs = load_words(args.input.read_text(), code.k)
    else:
        rng = random.Random(args.seed)
        msgs = [rng.getrandbits(code.k) for _ in range(args.count)]
    _write(args.out, dump_words([code.encode(m) for m in msgs], code.n))
    return 0


def cmd_decode(args) -> int:
    code = _load_code(args)
    text = args.input.read_text()
    out = []
    failures = 0
    if args.w == 1:
        for word in load_words(text, code.n):
            res = decode_one(word, code)
            if res.ok:
                out.append(gf2.row_to_hex(res.codeword.rows[0], code.n))
            else:
                failures += 1
                out.append("FAIL " + res.reason)
        _write(args.out, "\n".join(out) + "\n")
    else:
        ic = InterleavedCode(code, args.w)
        for R in load_word_matrices(text):
            res = joint_decode(R, ic, args.fallback_rowwise)
            if res.ok:
                out.append(dump_word_matrix(res.codeword))
            else:
                failures += 1
                out.append(f"FAIL {res.reason}\n")
        _write(args.out, "".join(out))
    if failures:
        print(f"{failures} word(s) could not be decoded", file=sys.stderr)
    return 0


def cmd_simulate(args) -> int:
    code = _load_code(args)
    results = []
    for w in args.w:
        for t in args.t:
            cfg = SimConfig(w=w, t=t, trials=args.trials, seed=args.seed, fallback_rowwise=args.fallback_rowwise)
            results.append(simulate(code, cfg, args.jobs))
    _write(args.out, results_csv(results))
    return 0


def cmd_params(args) -> int:
    rows = paper_table1() if args.paper_table1 else []
    rows += params_table(args.row or [])
    if not rows:
        raise SpecError("give --row n,m,l,r or --paper-table1")
    for p in rows:
        if not p.feasible:
            print(f"warning: n={p.n} exceeds the number of locators of degree <= {p.l} over GF(2^{p.m})", file=sys.stderr)
    sys.stdout.write(format_table(rows))
    if args.out is not None:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=PARAM_FIELDS, lineterminator="\n")
        writer.writeheader()
        for p in rows:
            writer.writerow({f: getattr(p, f) if f != "printed_pk" or p.printed_pk is not None else "" for f in PARAM_FIELDS})
        args.out.write_text(buf.getvalue())
    return 0


def cmd_oracle(args) -> int:
    code = _load_code(args)
    if args.kind == "min-distance":
        d = oracle_min_distance(code)
        ceil = code.bounds.ceilings()
        print(json.dumps({"min_distance": d, "bounds_ceil": ceil, "ok": all(d >= v for v in ceil.values())}))
        return 0
    tmax = radius_unique(code) if args.tmax is None else args.tmax
    rep = oracle_decode_exhaustive(code, tmax)
    print(json.dumps({
        "tmax": tmax,
        "patterns": rep.patterns,
        "counterexamples": rep.failures,
        "examples": [[gf2.row_to_hex(e, code.n), what] for e, what in rep.counterexamples[:5]],
    }))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ggc", description="Binary (interleaved) generalized Goppa codes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build H, Hbin, generator and a summary")
    _add_code_args(p)
    p.add_argument("--out", type=Path, required=True, help="output directory")
    p.add_argument("--w", type=_int_list, default=[1, 2, 3], help="interleaving orders for t_max")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("encode", help="encode messages (hex, k bits per line)")
    _add_code_args(p)
    p.add_argument("--in", dest="input", type=Path, help="message file")
    p.add_argument("--count", type=int, default=1, help="random messages when --in is absent")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode words (w=1) or interleaved blocks (w>1)")
    _add_code_args(p)
    p.add_argument("--in", dest="input", type=Path, required=True)
    p.add_argument("--w", type=int, default=1)
    p.add_argument("--fallback-rowwise", type=_bool, default=True)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="Monte-Carlo burst-error decoding, CSV output")
    _add_code_args(p)
    p.add_argument("--w", type=_int_list, default=[1])
    p.add_argument("--t", type=_int_list, required=True, help="error column counts, comma separated")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--fallback-rowwise", type=_bool, default=True)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("params", help="parameter and public-key size table")
    p.add_argument("--row", type=lambda s: tuple(_int_list(s)), action="append", help="n,m,l,r")
    p.add_argument("--paper-table1", action="store_true", help="emit the nine reference rows")
    p.add_argument("--out", type=Path, help="CSV output")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("oracle", help="brute-force distance or decoding checks")
    _add_code_args(p)
    p.add_argument("--kind", choices=("min-distance", "decode"), required=True)
    p.add_argument("--tmax", type=int, help="max error weight (default t_sep)")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, CodeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
