"""Brute-force references: codeword enumeration, naive evaluation, exhaustive decoding.

Nothing here touches the transform or decoder paths beyond ``encode``, which
enumeration cross-checks against a direct filter over all grids.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .code import Code2D, encode
from .error_model import ErrorPattern, GlobalError, error_mask, placements
from .errors import AmbiguousSolutionError, EnumerationMismatchError, NoSolutionError, TooLargeError
from .galois import Field
from .transform import BitGrid

DEFAULT_LIMIT = 1 << 20


def naive_eval(grid: BitGrid, x: int, y: int, field: Field) -> int:
    """sum c[i,j] x^i y^j, term by term."""
    acc = 0
    n, m = grid.shape
    for i in range(n):
        for j in range(m):
            if grid[i, j]:
                acc ^= field.mul(field.pow(x, i), field.pow(y, j))
    return acc


@dataclass
class CodebookTable:
    codewords: list[BitGrid]
    by_syndrome: dict = field(default_factory=dict)

    def __post_init__(self):
        self._ints = {g.to_int() for g in self.codewords}

    def __contains__(self, grid: BitGrid) -> bool:
        return grid.to_int() in self._ints

    def __len__(self) -> int:
        return len(self.codewords)


def _filtered_codewords(code: Code2D) -> list[BitGrid]:
    f, r = code.field, code.roots
    points = [(f.pow(r.gamma, t), f.pow(r.beta, p)) for t, p in sorted(code.zeros.closure)]
    out = []
    for value in range(1 << (code.n * code.m)):
        g = BitGrid.from_int(code.n, code.m, value)
        if all(naive_eval(g, x, y, f) == 0 for x, y in points):
            out.append(g)
    return out


def _encoded_codewords(code: Code2D) -> list[BitGrid]:
    k = code.k_bits
    return [encode(code, bits) for bits in product((0, 1), repeat=k)]


def enumerate_codewords(code: Code2D, limit: int = DEFAULT_LIMIT) -> CodebookTable:
    """All codewords, found twice: by filtering every grid and by encoding every message."""
    if 1 << (code.n * code.m) > limit:
        raise TooLargeError(f"2^{code.n * code.m} grids exceed the enumeration limit {limit}")
    a = _filtered_codewords(code)
    b = _encoded_codewords(code)
    sa, sb = {g.to_int() for g in a}, {g.to_int() for g in b}
    if sa != sb or len(b) != len(sb):
        raise EnumerationMismatchError(
            f"filter found {len(sa)} codewords, encoder produced {len(sb)} distinct of {len(b)}"
        )
    return CodebookTable(sorted(a, key=BitGrid.to_int))


@lru_cache(maxsize=8)
def cached_codebook(code: Code2D) -> CodebookTable:
    return enumerate_codewords(code)


def single_class(p: ErrorPattern, n: int, m: int, wrap: bool = True) -> list[list[GlobalError]]:
    return [[GlobalError(p, pos)] for pos in placements(p, n, m, wrap)]


def _disjoint(errs: Sequence[GlobalError], n: int, m: int) -> bool:
    seen: set = set()
    for e in errs:
        cells = set(e.cells(n, m))
        if seen & cells:
            return False
        seen |= cells
    return True


def pair_class(
    p1: ErrorPattern, p2: ErrorPattern, n: int, m: int, disjoint: bool = True, overlapping: bool = False
) -> list[list[GlobalError]]:
    """One burst of each type; ``overlapping`` selects only the pairs that share a cell."""
    out = []
    for a in placements(p1, n, m):
        for b in placements(p2, n, m):
            errs = [GlobalError(p1, a), GlobalError(p2, b)]
            dj = _disjoint(errs, n, m)
            if overlapping and not dj:
                out.append(errs)
            elif not overlapping and (dj or not disjoint):
                out.append(errs)
    return out


def same_type_class(p: ErrorPattern, mu: int, n: int, m: int) -> list[list[GlobalError]]:
    """``mu`` non-overlapping bursts of ``p``, unordered."""
    out = []
    for pos in combinations(placements(p, n, m), mu):
        errs = [GlobalError(p, q) for q in pos]
        if _disjoint(errs, n, m):
            out.append(errs)
    return out


def exhaustive_decode(
    r: BitGrid, code: Code2D, error_class: Iterable[Sequence[GlobalError]], include_empty: bool = True
) -> tuple[BitGrid, list[GlobalError]]:
    """The unique error mask in the class that turns ``r`` into a codeword.

    Configurations with the same mask count once; returns (mask, one config).
    """
    book = cached_codebook(code)
    n, m = code.n, code.m
    configs: Iterator[Sequence[GlobalError]] = iter(error_class)
    hits: dict[int, tuple[BitGrid, list[GlobalError]]] = {}
    if include_empty and r in book:
        hits[0] = (BitGrid.zeros(n, m), [])
    for errs in configs:
        mask = error_mask(errs, n, m)
        if (r ^ mask) in book:
            hits.setdefault(mask.to_int(), (mask, list(errs)))
    if not hits:
        raise NoSolutionError("no configuration in the class explains the received word")
    if len(hits) > 1:
        raise AmbiguousSolutionError(
            f"{len(hits)} distinct masks explain the received word",
            [hits[k][0] for k in sorted(hits)],
        )
    return next(iter(hits.values()))
