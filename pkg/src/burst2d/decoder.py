"""Transform-domain decoding of predefined burst patterns.

The received word is evaluated at the declared zeros.  The three indicator
zeros (0,0), (1,0), (0,1) tell which of the horizontal 1x2 / vertical 2x1
combinations occurred; the error positions then come from matching the
syndrome against every candidate placement.  When all indicators vanish
but the syndrome does not, the decoder looks for several bursts of one
registered type.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import NamedTuple

from .code import Code2D, is_codeword, placement_syndromes
from .error_model import H2, V2, ErrorPattern, GlobalError, error_mask, pattern_value, placements
from .errors import AmbiguousSolutionError, DimensionMismatchError, MissingIndicatorsError, NoSolutionError
from .transform import BitGrid, Index, evaluate

INDICATOR_TRIPLE: tuple[Index, ...] = ((0, 0), (1, 0), (0, 1))

_CASE4 = {
    (True, True, True): "r(1,1)!=0, r(g,1)!=0, r(1,b)!=0",
    (True, True, False): "r(1,1)!=0, r(g,1)!=0, r(1,b)=0",
    (True, False, True): "r(1,1)!=0, r(g,1)=0, r(1,b)!=0",
    (True, False, False): "r(1,1)!=0, r(g,1)=0, r(1,b)=0",
}


@dataclass(frozen=True)
class Syndrome:
    """R[t,p] at each declared zero; equals the error spectrum there."""

    entries: dict

    def vector(self, code: Code2D) -> tuple[int, ...]:
        return tuple(self.entries[z] for z in code.zeros.declared)

    def is_zero(self) -> bool:
        return not any(self.entries.values())

    def __getitem__(self, idx: Index) -> int:
        return self.entries[idx]


def compute_syndrome(r: BitGrid, code: Code2D) -> Syndrome:
    if r.shape != (code.n, code.m):
        raise DimensionMismatchError(f"grid {r.shape} vs code {code.n}x{code.m}")
    ones = r.ones()
    return Syndrome({z: evaluate(ones, *z, code.field, code.roots) for z in code.zeros.declared})


def has_indicator_triple(code: Code2D) -> bool:
    return all(z in code.zeros.indicator for z in INDICATOR_TRIPLE)


@dataclass(frozen=True)
class Classification:
    flags: tuple[int, int] | None = None  # (c1, c2)
    proceed: bool = False  # all indicators zero: go to the multi-burst search
    reason: str = ""  # set for an uncorrectable indicator signature


def classify(s: Syndrome, code: Code2D) -> Classification:
    if not has_indicator_triple(code):
        raise MissingIndicatorsError("code lacks indicator zeros (0,0), (1,0), (0,1)")
    nz = tuple(s[z] != 0 for z in INDICATOR_TRIPLE)
    if nz[0]:
        return Classification(reason="Case 4 indicator signature: " + _CASE4[nz])
    if nz[1] and nz[2]:
        return Classification(flags=(1, 1))
    if nz[2]:
        return Classification(flags=(1, 0))
    if nz[1]:
        return Classification(flags=(0, 1))
    return Classification(proceed=True)


class SingleSolution(NamedTuple):
    horizontal: Index | None  # (k1, l1)
    vertical: Index | None  # (k2, l2)

    def errors(self) -> list[GlobalError]:
        out = []
        if self.horizontal is not None:
            out.append(GlobalError(H2, self.horizontal))
        if self.vertical is not None:
            out.append(GlobalError(V2, self.vertical))
        return out


@lru_cache(maxsize=32)
def _syndrome_table(code: Code2D, p: ErrorPattern) -> dict[Index, tuple[int, ...]]:
    return placement_syndromes(code, p)


def _xor(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x ^ y for x, y in zip(a, b))


def solve_single_combination(s: Syndrome, c1: int, c2: int, code: Code2D) -> SingleSolution:
    """Find the unique (k1,l1)/(k2,l2) whose combined 1x2/2x1 spectrum equals the syndrome."""
    if not (c1 or c2):
        raise NoSolutionError("no pattern flagged")
    target = s.vector(code)
    if not any(target):
        raise NoSolutionError("zero syndrome: nothing to locate")
    hs = _syndrome_table(code, H2)
    vs = _syndrome_table(code, V2)
    if c1 and c2:
        found = [
            SingleSolution(h, v)
            for h, hv in hs.items()
            for v, vv in vs.items()
            if _xor(hv, vv) == target
        ]
    elif c1:
        found = [SingleSolution(h, None) for h, hv in hs.items() if hv == target]
    else:
        found = [SingleSolution(None, v) for v, vv in vs.items() if vv == target]
    if not found:
        raise NoSolutionError(f"no placement matches the syndrome for (c1,c2)=({c1},{c2})")
    if len(found) > 1:
        found.sort(key=lambda sol: (sol.horizontal or (-1, -1), sol.vertical or (-1, -1)))
        raise AmbiguousSolutionError(
            f"{len(found)} placements share the syndrome for (c1,c2)=({c1},{c2})", found
        )
    return found[0]


def solve_multi_burst(s: Syndrome, pattern: ErrorPattern, mu: int, code: Code2D) -> tuple[Index, ...]:
    """Start positions of ``mu`` non-overlapping bursts of ``pattern`` matching the syndrome.

    Where b(gamma^t, beta^p) != 0 the syndrome is divided by it, leaving the
    sum of the anchor monomials gamma^(i t) beta^(j p); those reduced values
    are what the search matches.  Where b vanishes the syndrome must vanish too.
    """
    if mu < 1:
        raise ValueError("mu must be positive")
    target = s.vector(code)
    if not any(target):
        raise NoSolutionError("zero syndrome: nothing to locate")
    f, r = code.field, code.roots
    lg, lb = f.log(r.gamma), f.log(r.beta)
    decl = code.zeros.declared
    div = [pattern_value(pattern, t, q, f, r) for t, q in decl]
    if any(d == 0 and target[k] for k, d in enumerate(div)):
        raise NoSolutionError(f"syndrome nonzero where {pattern.name} has a root")
    keep = [k for k, d in enumerate(div) if d]
    reduced = tuple(f.div(target[k], div[k]) for k in keep)

    places = placements(pattern, code.n, code.m)
    mono = {
        pos: tuple(f.antilog(lg * pos[0] * decl[k][0] + lb * pos[1] * decl[k][1]) for k in keep)
        for pos in places
    }
    by_value: dict[tuple[int, ...], list[Index]] = {}
    for pos, v in mono.items():
        by_value.setdefault(v, []).append(pos)
    cells = {pos: set(pattern.cells(pos, code.n, code.m)) for pos in places}
    zero = tuple(0 for _ in keep)

    found: list[tuple[Index, ...]] = []
    for head in combinations(places, mu - 1):
        acc = zero
        used: set[Index] = set()
        ok = True
        for pos in head:
            if used & cells[pos]:
                ok = False
                break
            used |= cells[pos]
            acc = _xor(acc, mono[pos])
        if not ok:
            continue
        last_floor = head[-1] if head else None
        for pos in by_value.get(_xor(acc, reduced), ()):
            if last_floor is not None and pos <= last_floor:
                continue
            if used & cells[pos]:
                continue
            found.append(head + (pos,))
    if not found:
        raise NoSolutionError(f"no {mu} x {pattern.name} placement matches the syndrome")
    found.sort()
    if len(found) > 1:
        raise AmbiguousSolutionError(
            f"{len(found)} sets of {mu} x {pattern.name} bursts share the syndrome", found
        )
    return found[0]


class Kind(str, enum.Enum):
    CLEAN = "clean"
    CORRECTED = "corrected"
    UNCORRECTABLE = "uncorrectable"


@dataclass(frozen=True)
class DecodeOptions:
    mu_max: int = 3
    prefer_min_bursts: bool = False


@dataclass(frozen=True)
class DecodeOutcome:
    kind: Kind
    grid: BitGrid | None = None
    flipped: frozenset = frozenset()
    classification: tuple[int, int] | None = None
    pattern: str | None = None
    mu: int | None = None
    positions: tuple = ()
    reason: str = ""
    candidates: tuple = ()

    @property
    def ok(self) -> bool:
        return self.kind is not Kind.UNCORRECTABLE

    def summary(self) -> str:
        if self.kind is Kind.CLEAN:
            return "Clean"
        if self.kind is Kind.UNCORRECTABLE:
            return f"Uncorrectable; {self.reason}"
        flipped = "".join(f"({i},{j})" for i, j in sorted(self.flipped))
        if self.classification is not None:
            c1, c2 = self.classification
            return f"Corrected; c1={c1} c2={c2}; flipped {flipped}"
        at = ",".join(f"({i},{j})" for i, j in self.positions)
        return f"Corrected; pattern {self.pattern} ×{self.mu} at {at}; flipped {flipped}"

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "classification": list(self.classification) if self.classification else None,
            "pattern": self.pattern,
            "mu": self.mu,
            "positions": [list(p) for p in self.positions],
            "flipped": [list(p) for p in sorted(self.flipped)],
            "reason": self.reason,
            "grid": self.grid.to_text() if self.grid is not None else None,
        }


def _uncorrectable(reason: str, **kw) -> DecodeOutcome:
    return DecodeOutcome(Kind.UNCORRECTABLE, reason=reason, **kw)


def _apply(r: BitGrid, code: Code2D, errors: list[GlobalError], **kw) -> DecodeOutcome:
    mask = error_mask(errors, code.n, code.m)
    fixed = r ^ mask
    if not is_codeword(code, fixed):
        return _uncorrectable("correction does not yield a codeword", **kw)
    return DecodeOutcome(Kind.CORRECTED, fixed, frozenset(mask.ones()), **kw)


def _multi_burst(r: BitGrid, s: Syndrome, code: Code2D, opts: DecodeOptions) -> DecodeOutcome:
    sols: list[tuple[int, str, tuple[Index, ...]]] = []
    for mu in range(1, opts.mu_max + 1):
        for p in code.patterns:
            try:
                sols.append((mu, p.name, solve_multi_burst(s, p, mu, code)))
            except NoSolutionError:
                pass
            except AmbiguousSolutionError as exc:
                sols.extend((mu, p.name, c) for c in exc.candidates)
        if opts.prefer_min_bursts and sols:
            break
    if not sols:
        return _uncorrectable(f"no combination of up to {opts.mu_max} same-type bursts matches the syndrome")
    if len(sols) > 1:
        return _uncorrectable(
            f"ambiguous: {len(sols)} same-type burst sets share the syndrome",
            candidates=tuple(sols),
        )
    mu, name, pos = sols[0]
    pat = code.pattern(name)
    return _apply(r, code, [GlobalError(pat, q) for q in pos], pattern=name, mu=mu, positions=pos)


def decode(r: BitGrid, code: Code2D, options: DecodeOptions | None = None) -> DecodeOutcome:
    opts = options or DecodeOptions()
    s = compute_syndrome(r, code)
    if s.is_zero():
        return DecodeOutcome(Kind.CLEAN, r)

    if has_indicator_triple(code):
        cls = classify(s, code)
        if cls.reason:
            return _uncorrectable(cls.reason)
        if cls.flags is not None:
            c1, c2 = cls.flags
            try:
                sol = solve_single_combination(s, c1, c2, code)
            except NoSolutionError as exc:
                return _uncorrectable(str(exc), classification=cls.flags)
            except AmbiguousSolutionError as exc:
                return _uncorrectable(
                    "ambiguous: " + str(exc), classification=cls.flags, candidates=tuple(exc.candidates)
                )
            pos = tuple(p for p in sol if p is not None)
            return _apply(r, code, sol.errors(), classification=cls.flags, positions=pos)
        return _multi_burst(r, s, code, opts)

    if any(s[z] for z in code.zeros.indicator):
        return _uncorrectable("nonzero indicator syndrome and no indicator triple to classify it")
    return _multi_burst(r, s, code, opts)
