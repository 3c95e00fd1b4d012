"""Local/global error patterns, their root sets and error injection."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import DimensionMismatchError, PatternError
from .galois import Field
from .transform import BitGrid, Index, RootPair, SpectrumGrid, evaluate, ffft


@dataclass(frozen=True)
class ErrorPattern:
    """Local error shape b(x, y); ``support`` holds the (row, col) offsets of its monomials."""

    name: str
    support: frozenset[Index]

    def __post_init__(self):
        if (0, 0) not in self.support:
            raise PatternError(f"pattern {self.name!r}: constant term must be 1, i.e. (0,0) in support")
        if any(a < 0 or b < 0 for a, b in self.support):
            raise PatternError(f"pattern {self.name!r}: offsets must be non-negative")

    @property
    def height(self) -> int:
        return max(a for a, _ in self.support) + 1

    @property
    def width(self) -> int:
        return max(b for _, b in self.support) + 1

    def cells(self, pos: Index, n: int, m: int, wrap: bool = True) -> list[Index]:
        i, j = pos
        if not wrap and (i + self.height > n or j + self.width > m):
            raise PatternError(f"{self.name} at {pos} crosses the {n}x{m} boundary")
        return sorted(((i + a) % n, (j + b) % m) for a, b in self.support)

    def fits(self, n: int, m: int) -> bool:
        return self.height <= n and self.width <= m

    def __str__(self):
        return self.name


def horizontal(width: int = 2) -> ErrorPattern:
    """1 x width burst, b(x, y) = 1 + y + ... + y^(width-1)."""
    return ErrorPattern(f"h{width}", frozenset((0, k) for k in range(width)))


def vertical(height: int = 2) -> ErrorPattern:
    """height x 1 burst, b(x, y) = 1 + x + ... + x^(height-1)."""
    return ErrorPattern(f"v{height}", frozenset((k, 0) for k in range(height)))


def single() -> ErrorPattern:
    return ErrorPattern("e1", frozenset({(0, 0)}))


H2 = horizontal(2)
V2 = vertical(2)

_REGISTRY: dict[str, ErrorPattern] = {}


def validate_pattern(p: ErrorPattern, n: int, m: int) -> None:
    """Reject shapes that do not fit an n x m code or are full-row/full-column bursts."""
    if not p.fits(n, m):
        raise PatternError(f"pattern {p.name} ({p.height}x{p.width}) does not fit a {n}x{m} code")
    if p.support == frozenset((0, k) for k in range(m)) and m > 1:
        raise PatternError(f"pattern {p.name}: a full-row burst (width m={m}) is undetectable")
    if p.support == frozenset((k, 0) for k in range(n)) and n > 1:
        raise PatternError(f"pattern {p.name}: a full-column burst (height n={n}) is undetectable")


def register_pattern(p: ErrorPattern, replace: bool = False) -> ErrorPattern:
    if p.name in _REGISTRY and not replace and _REGISTRY[p.name] != p:
        raise PatternError(f"pattern name {p.name!r} already registered")
    _REGISTRY[p.name] = p
    return p


def unregister_pattern(name: str) -> None:
    _REGISTRY.pop(name, None)


def registered_patterns() -> list[ErrorPattern]:
    return list(_REGISTRY.values())


register_pattern(H2)
register_pattern(V2)

_NAME_RE = re.compile(r"^([hv])(\d+)$")


def get_pattern(name: str) -> ErrorPattern:
    """Registry lookup; unregistered ``h<w>`` / ``v<w>`` names are built on the fly."""
    if name in _REGISTRY:
        return _REGISTRY[name]
    mt = _NAME_RE.match(name)
    if mt and int(mt.group(2)) >= 1:
        w = int(mt.group(2))
        return horizontal(w) if mt.group(1) == "h" else vertical(w)
    if name == "e1":
        return single()
    raise PatternError(f"unknown error pattern {name!r}")


@dataclass(frozen=True)
class GlobalError:
    """x^i y^j b(x, y): a local pattern anchored at ``position``."""

    pattern: ErrorPattern
    position: Index

    def cells(self, n: int, m: int, wrap: bool = True) -> list[Index]:
        return self.pattern.cells(self.position, n, m, wrap)

    def mask(self, n: int, m: int, wrap: bool = True) -> BitGrid:
        return BitGrid.from_positions(n, m, self.cells(n, m, wrap))

    def to_json(self) -> dict:
        return {"pattern": self.pattern.name, "at": list(self.position)}

    @classmethod
    def from_json(cls, obj) -> "GlobalError":
        try:
            name, at = obj["pattern"], obj["at"]
            i, j = (int(v) for v in at)
        except (KeyError, TypeError, ValueError) as exc:
            raise PatternError(f"malformed error entry {obj!r}") from exc
        return cls(get_pattern(str(name)), (i, j))


def placements(p: ErrorPattern, n: int, m: int, wrap: bool = True) -> list[Index]:
    """All anchor positions for ``p``; bounded placement keeps the shape inside the grid."""
    if wrap:
        return [(i, j) for i in range(n) for j in range(m)]
    return [(i, j) for i in range(n - p.height + 1) for j in range(m - p.width + 1)]


def error_mask(errors: Iterable[GlobalError], n: int, m: int, wrap: bool = True) -> BitGrid:
    cells: list[Index] = []
    for e in errors:
        cells.extend(e.cells(n, m, wrap))
    # from_positions XORs repeated cells, so overlapping bursts cancel where they meet
    return BitGrid.from_positions(n, m, cells)


def inject(grid: BitGrid, errors: Iterable[GlobalError], wrap: bool = True) -> BitGrid:
    """r = c + e over GF(2)."""
    n, m = grid.shape
    mask = error_mask(errors, n, m, wrap)
    if mask.shape != grid.shape:
        raise DimensionMismatchError("error mask does not match grid")
    return grid ^ mask


def pattern_value(p: ErrorPattern, t: int, p_idx: int, field: Field, roots: RootPair) -> int:
    """b(gamma^t, beta^p)."""
    return evaluate(sorted(p.support), t, p_idx, field, roots)


def _roots_of(p: ErrorPattern, field: Field, roots: RootPair) -> set[Index]:
    return {
        (t, q)
        for t in range(roots.n)
        for q in range(roots.m)
        if pattern_value(p, t, q, field, roots) == 0
    }


def pattern_roots(p: ErrorPattern, code) -> set[Index]:
    """Frequency indices (t, p) where b(gamma^t, beta^p) = 0."""
    return _roots_of(p, code.field, code.roots)


def error_spectrum(errors: Iterable[GlobalError], code, wrap: bool = True) -> SpectrumGrid:
    return ffft(error_mask(errors, code.n, code.m, wrap), code.roots, code.field)


def closed_form_spectrum(errors: Iterable[GlobalError], code) -> SpectrumGrid:
    """Sum over errors of gamma^(i t) beta^(j p) b(gamma^t, beta^p), entry by entry."""
    f, r = code.field, code.roots
    lg, lb = f.log(r.gamma), f.log(r.beta)
    out = [[0] * code.m for _ in range(code.n)]
    for e in errors:
        i, j = e.position
        for t in range(code.n):
            for q in range(code.m):
                shift = f.antilog(lg * i * t + lb * j * q)
                out[t][q] ^= f.mul(shift, pattern_value(e.pattern, t, q, f, r))
    return SpectrumGrid(out)
