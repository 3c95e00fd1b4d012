"""Command-line front end.

Exit codes: 0 success, 1 ``verify`` on a non-codeword, 2 usage/validation
error, 3 uncorrectable received word.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

import numpy as np

from . import __doc__ as _pkg_doc
from .code import build_code, check_disjoint, encode, from_config, is_codeword, to_config
from .decoder import DecodeOptions, Kind, decode
from .error_model import GlobalError, inject
from .errors import Burst2DError
from .simulation import simulate
from .transform import BitGrid, ffft, orbits

EXIT_OK, EXIT_NOT_CODEWORD, EXIT_USAGE, EXIT_UNCORRECTABLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_indices(text: str) -> list[tuple[int, int]]:
    """``"0,0;1,0;0,1"`` -> [(0, 0), (1, 0), (0, 1)]."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            a, b = chunk.split(",")
            out.append((int(a), int(b)))
        except ValueError:
            raise UsageError(f"bad index {chunk!r}; expected 'theta,phi'") from None
    return out


def _read_grid(path: str) -> BitGrid:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return BitGrid.from_text(text)
    except OSError as exc:
        raise UsageError(f"cannot read grid {path}: {exc}") from None
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_code(path: str):
    try:
        cfg = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read code config {path}: {exc}") from None
    return from_config(cfg)


def cmd_codegen(args) -> int:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        code = build_code(args.n, args.m, parse_indices(args.zeros), parse_indices(args.indicator))
    pats = code.patterns
    disjoint = bool(code.zeros.closure) and all(
        check_disjoint(code, a, b) for i, a in enumerate(pats) for b in pats[i + 1 :]
    )
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    cfg = to_config(code)
    if args.out:
        Path(args.out).write_text(json.dumps(cfg, indent=2) + "\n")
    summary = {
        "closure": cfg["closure"],
        "zero_orbits": [[list(i) for i in o] for o in code.zero_orbits],
        "message_orbits": [[list(i) for i in o] for o in code.message_orbits],
        "k_bits": code.k_bits,
        "disjoint": disjoint,
        "warnings": [str(w.message) for w in caught],
    }
    print(json.dumps(summary))
    return EXIT_OK


def cmd_encode(args) -> int:
    code = _load_code(args.code)
    if args.random:
        bits = np.random.default_rng(args.seed).integers(0, 2, size=code.k_bits).tolist()
    elif args.bits is not None:
        if set(args.bits) - {"0", "1"}:
            raise UsageError("--bits must be a string of 0/1")
        bits = [int(b) for b in args.bits]
    else:
        raise UsageError("give --bits or --random")
    grid = encode(code, bits)
    _write(args.out, grid.to_text())
    if args.show_spectrum:
        stream = sys.stderr if args.out in (None, "-") else sys.stdout
        stream.write(ffft(grid, code.roots, code.field).format(code.field))
    return EXIT_OK


def _parse_errors(spec: str) -> list[GlobalError]:
    p = Path(spec)
    try:
        text = p.read_text() if not spec.lstrip().startswith("[") and p.exists() else spec
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"malformed error spec: {exc}") from None
    if not isinstance(data, list):
        raise UsageError("error spec must be a JSON list")
    return [GlobalError.from_json(e) for e in data]


def cmd_inject(args) -> int:
    grid = _read_grid(args.inp)
    errors = _parse_errors(args.errors)
    _write(args.out, inject(grid, errors, wrap=not args.bounded).to_text())
    return EXIT_OK


def cmd_decode(args) -> int:
    code = _load_code(args.code)
    r = _read_grid(args.inp)
    if r.shape != (code.n, code.m):
        raise UsageError(f"grid is {r.shape[0]}x{r.shape[1]}, code is {code.n}x{code.m}")
    out = decode(r, code, DecodeOptions(mu_max=args.mu_max, prefer_min_bursts=args.prefer_min_bursts))
    if args.json:
        print(json.dumps(out.to_json(), sort_keys=True))
    else:
        print(out.summary())
        if out.grid is not None:
            sys.stdout.write(out.grid.to_text())
    if out.grid is not None and args.out:
        Path(args.out).write_text(out.grid.to_text())
    return EXIT_UNCORRECTABLE if out.kind is Kind.UNCORRECTABLE else EXIT_OK


def cmd_verify(args) -> int:
    code = _load_code(args.code)
    g = _read_grid(args.inp)
    ok = is_codeword(code, g)
    print("codeword" if ok else "not a codeword")
    return EXIT_OK if ok else EXIT_NOT_CODEWORD


def cmd_simulate(args) -> int:
    code = _load_code(args.code)
    opts = DecodeOptions(mu_max=args.mu_max, prefer_min_bursts=args.prefer_min_bursts)
    try:
        report = simulate(code, args.trials, args.seed, args.error_class, args.placement, opts, args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(report.to_json())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="burst2d", description=_pkg_doc)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("codegen", help="build a code from its zero set and write its config")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--zeros", default="", help='declared zeros, e.g. "0,0;1,0;0,1"')
    p.add_argument("--indicator", default="", help="indicator subset of the zeros")
    p.add_argument("--out", help="config JSON path")
    p.set_defaults(func=cmd_codegen)

    p = sub.add_parser("encode", help="encode message bits into a codeword grid")
    p.add_argument("--code", required=True)
    p.add_argument("--bits")
    p.add_argument("--random", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--show-spectrum", action="store_true")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("inject", help="XOR error bursts into a grid")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--errors", required=True, help='JSON file or inline, e.g. \'[{"pattern":"h2","at":[0,3]}]\'')
    p.add_argument("--bounded", action="store_true", help="reject bursts that cross the boundary")
    p.add_argument("--out")
    p.set_defaults(func=cmd_inject)

    p = sub.add_parser("decode", help="decode a received grid")
    p.add_argument("--code", required=True)
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--mu-max", type=int, default=3)
    p.add_argument("--prefer-min-bursts", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="write the corrected grid here")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("verify", help="check codeword membership")
    p.add_argument("--code", required=True)
    p.add_argument("--in", dest="inp", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="Monte-Carlo encode/inject/decode run")
    p.add_argument("--code", required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--error-class", default="both", help="h2 | v2 | both | multi:h2:2 | h<w> | v<w>")
    p.add_argument("--placement", choices=("cyclic", "bounded"), default="cyclic")
    p.add_argument("--mu-max", type=int, default=3)
    p.add_argument("--prefer-min-bursts", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_simulate)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, Burst2DError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
