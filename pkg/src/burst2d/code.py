"""Code definition by common zeros, and the frequency-domain encoder.

A code is fixed by a set of frequency indices (t, p) at which every
codeword's spectrum vanishes.  Binary codewords force whole doubling orbits
to vanish, so the code is defined by the orbit closure of the declared set;
the remaining orbits carry message bits.  An orbit of size d carries d bits
as one element of the subfield GF(2^d), placed on its representative and
squared along the orbit.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Iterable, Sequence

from .error_model import (
    ErrorPattern,
    _roots_of,
    pattern_value,
    placements,
    registered_patterns,
    validate_pattern,
)
from .errors import (
    ConfigError,
    DimensionMismatchError,
    IndexOutOfRangeError,
    IndicatorNotAZeroError,
    IndicatorNotPatternRootError,
    InternalNonBinaryError,
    LengthMismatchError,
    NonBinaryResultError,
)
from .galois import Field, build_field, field_for_lambda, required_lambda
from .transform import (
    BitGrid,
    ConjugacyOrbit,
    Index,
    RootPair,
    SpectrumGrid,
    evaluate,
    ffft,
    iffft,
    make_roots,
    orbit_of,
    orbits,
)


class CodeDesignWarning(UserWarning):
    """A zero set that builds fine but cannot correct what it is meant to."""


@dataclass(frozen=True)
class ZeroSet:
    declared: tuple[Index, ...]
    closure: frozenset[Index]
    indicator: tuple[Index, ...]

    @property
    def non_indicator(self) -> tuple[Index, ...]:
        return tuple(z for z in self.declared if z not in self.indicator)


@dataclass(frozen=True, eq=False)
class Code2D:
    n: int
    m: int
    field: Field
    roots: RootPair
    zeros: ZeroSet
    message_orbits: tuple[ConjugacyOrbit, ...]
    orbit_bases: dict = dc_field(repr=False)
    patterns: tuple[ErrorPattern, ...] = ()

    @property
    def k_bits(self) -> int:
        return sum(o.size for o in self.message_orbits)

    @property
    def zero_orbits(self) -> list[ConjugacyOrbit]:
        return [o for o in orbits(self.n, self.m) if o.representative in self.zeros.closure]

    def pattern(self, name: str) -> ErrorPattern:
        for p in self.patterns:
            if p.name == name:
                return p
        raise KeyError(name)


def closure_of(indices: Iterable[Index], n: int, m: int) -> frozenset[Index]:
    out: set[Index] = set()
    for idx in indices:
        out.update(orbit_of(idx, n, m).members)
    return frozenset(out)


def _subfield_basis(field: Field, d: int) -> tuple[int, ...]:
    # polynomial basis 1, s, ..., s^(d-1) of GF(2^d), s a generator of its unit group
    s = field.subfield_generator(d)
    return tuple(field.pow(s, k) for k in range(d))


def _check_index(idx, n: int, m: int) -> Index:
    try:
        t, p = (int(v) for v in idx)
    except (TypeError, ValueError) as exc:
        raise IndexOutOfRangeError(f"bad frequency index {idx!r}") from exc
    if not (0 <= t < n and 0 <= p < m):
        raise IndexOutOfRangeError(f"index ({t},{p}) outside {n}x{m}")
    return t, p


def build_code(
    n: int,
    m: int,
    declared_zeros: Sequence[Index] = (),
    indicator: Sequence[Index] = (),
    patterns: Sequence[ErrorPattern] | None = None,
    primitive_poly: int | None = None,
    warn: bool = True,
) -> Code2D:
    """Build a code from declared common zeros and an indicator subset.

    ``patterns`` defaults to the registered patterns that fit an n x m grid.
    Disjointness failures between pattern pairs are reported as
    CodeDesignWarning rather than errors.
    """
    if primitive_poly is None:
        fld = build_field(n, m)
    else:
        fld = field_for_lambda(required_lambda(n, m), primitive_poly)
    roots = make_roots(fld, n, m)

    declared: list[Index] = []
    for z in declared_zeros:
        z = _check_index(z, n, m)
        if z not in declared:
            declared.append(z)
    ind: list[Index] = []
    for z in indicator:
        z = _check_index(z, n, m)
        if z not in declared:
            raise IndicatorNotAZeroError(f"indicator {z} is not a declared zero")
        if z not in ind:
            ind.append(z)

    if patterns is None:
        pats = tuple(p for p in registered_patterns() if p.fits(n, m))
    else:
        pats = tuple(patterns)
    for p in pats:
        validate_pattern(p, n, m)

    if ind:
        root_sets = [_roots_of(p, fld, roots) for p in pats]
        for z in ind:
            if not any(z in rs for rs in root_sets):
                raise IndicatorNotPatternRootError(
                    f"indicator {z} is not a root of any pattern in {[p.name for p in pats]}"
                )

    closure = closure_of(declared, n, m)
    msg_orbits = tuple(o for o in orbits(n, m) if o.representative not in closure)
    bases = {d: _subfield_basis(fld, d) for d in sorted({o.size for o in msg_orbits})}
    code = Code2D(
        n=n,
        m=m,
        field=fld,
        roots=roots,
        zeros=ZeroSet(tuple(declared), closure, tuple(ind)),
        message_orbits=msg_orbits,
        orbit_bases=bases,
        patterns=pats,
    )
    if warn:
        _warn_design(code)
    return code


def _warn_design(code: Code2D) -> None:
    if not code.zeros.closure:
        warnings.warn("empty zero set: no error correction", CodeDesignWarning, stacklevel=3)
        return
    for p1, p2 in combinations(code.patterns, 2):
        if not check_disjoint(code, p1, p2):
            warnings.warn(
                f"syndromes of {p1.name} and {p2.name} collide on this zero set",
                CodeDesignWarning,
                stacklevel=3,
            )


def _pack(basis: Sequence[int], bits: Sequence[int]) -> int:
    v = 0
    for b, g in zip(bits, basis):
        if b:
            v ^= g
    return v


def _unpack(basis: Sequence[int], value: int) -> list[int]:
    """Coordinates of ``value`` in ``basis`` over GF(2) (Gaussian elimination)."""
    # rows: (vector, coordinate mask)
    rows = [(g, 1 << k) for k, g in enumerate(basis)]
    pivots: list[tuple[int, int]] = []
    for vec, tag in rows:
        for pv, ptag in pivots:
            if vec ^ pv < vec:
                vec, tag = vec ^ pv, tag ^ ptag
        if vec:
            pivots.append((vec, tag))
            pivots.sort(reverse=True)
    coord = 0
    for pv, ptag in pivots:
        if value ^ pv < value:
            value, coord = value ^ pv, coord ^ ptag
    if value:
        raise ValueError("value is not in the span of the basis")
    return [(coord >> k) & 1 for k in range(len(basis))]


def message_spectrum(code: Code2D, bits: Sequence[int]) -> SpectrumGrid:
    bits = [int(b) for b in bits]
    if len(bits) != code.k_bits:
        raise LengthMismatchError(f"message has {len(bits)} bits, code expects {code.k_bits}")
    if any(b not in (0, 1) for b in bits):
        raise ValueError("message bits must be 0 or 1")
    f = code.field
    spec = [[0] * code.m for _ in range(code.n)]
    pos = 0
    for orb in code.message_orbits:
        v = _pack(code.orbit_bases[orb.size], bits[pos : pos + orb.size])
        pos += orb.size
        for t, p in orb.members:
            spec[t][p] = v
            v = f.mul(v, v)
    return SpectrumGrid(spec)


def encode(code: Code2D, bits: Sequence[int]) -> BitGrid:
    spec = message_spectrum(code, bits)
    try:
        return iffft(spec, code.roots, code.field)
    except NonBinaryResultError as exc:  # pragma: no cover - conjugacy guard
        raise InternalNonBinaryError(str(exc)) from exc


def extract_message(code: Code2D, grid: BitGrid) -> list[int]:
    """Inverse of ``encode`` on codewords."""
    if not is_codeword(code, grid):
        raise ValueError("grid is not a codeword")
    spec = ffft(grid, code.roots, code.field)
    out: list[int] = []
    for orb in code.message_orbits:
        out.extend(_unpack(code.orbit_bases[orb.size], spec[orb.representative]))
    return out


def is_codeword(code: Code2D, grid: BitGrid) -> bool:
    if grid.shape != (code.n, code.m):
        raise DimensionMismatchError(f"grid {grid.shape} vs code {code.n}x{code.m}")
    ones = grid.ones()
    return all(evaluate(ones, t, p, code.field, code.roots) == 0 for t, p in code.zeros.closure)


def placement_syndromes(code: Code2D, p: ErrorPattern, wrap: bool = True) -> dict[Index, tuple[int, ...]]:
    """Syndrome vector over the declared zeros for every placement of ``p``."""
    f, r = code.field, code.roots
    lg, lb = f.log(r.gamma), f.log(r.beta)
    bvals = [pattern_value(p, t, q, f, r) for t, q in code.zeros.declared]
    out = {}
    for i, j in placements(p, code.n, code.m, wrap):
        out[(i, j)] = tuple(
            f.mul(f.antilog(lg * i * t + lb * j * q), bv)
            for (t, q), bv in zip(code.zeros.declared, bvals)
        )
    return out


def check_disjoint(code: Code2D, p1: ErrorPattern, p2: ErrorPattern) -> bool:
    """True iff no placement of p1 shares its syndrome with any placement of p2."""
    s1 = set(placement_syndromes(code, p1).values())
    s2 = set(placement_syndromes(code, p2).values())
    return not (s1 & s2)


def to_config(code: Code2D) -> dict:
    return {
        "n": code.n,
        "m": code.m,
        "lambda": code.field.lam,
        "primitive_poly": code.field.primitive_poly,
        "declared_zeros": [list(z) for z in code.zeros.declared],
        "indicator_zeros": [list(z) for z in code.zeros.indicator],
        "closure": [list(z) for z in sorted(code.zeros.closure)],
        "k_bits": code.k_bits,
        "orbit_bases": {str(d): list(b) for d, b in code.orbit_bases.items()},
    }


def from_config(cfg: dict, warn: bool = False) -> Code2D:
    """Rebuild a code from its config, checking the derived fields it carries."""
    try:
        n, m = int(cfg["n"]), int(cfg["m"])
        code = build_code(
            n,
            m,
            [tuple(z) for z in cfg.get("declared_zeros", [])],
            [tuple(z) for z in cfg.get("indicator_zeros", [])],
            primitive_poly=cfg.get("primitive_poly"),
            warn=warn,
        )
    except (KeyError, TypeError) as exc:
        raise ConfigError(f"malformed code config: {exc}") from exc
    expect = to_config(code)
    for key in ("lambda", "primitive_poly", "closure", "k_bits", "orbit_bases"):
        if key in cfg and cfg[key] != expect[key]:
            raise ConfigError(f"config field {key!r} does not match the rebuilt code")
    return code
