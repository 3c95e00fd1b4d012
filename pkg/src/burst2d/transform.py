"""Binary/spectral grids and the 2D finite field Fourier transform pair.

A BitGrid c of shape n x m is the bivariate polynomial sum c[i,j] x^i y^j.
Its spectrum is C[t,p] = c(gamma^t, beta^p), with gamma, beta of orders n
and m.  Binary grids have spectra that are closed under the doubling map
(t, p) -> (2t mod n, 2p mod m): C[2t,2p] = C[t,p]^2.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DimensionMismatchError, NonBinaryResultError, OrderMismatchError
from .galois import Field

Index = tuple[int, int]


class BitGrid:
    """Immutable n x m array over GF(2)."""

    __slots__ = ("bits",)

    def __init__(self, bits):
        arr = np.array(bits, dtype=np.uint8, copy=True)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("BitGrid needs a non-empty 2D array")
        if arr.size and arr.max() > 1:
            raise ValueError("BitGrid entries must be 0 or 1")
        arr.setflags(write=False)
        self.bits = arr

    @classmethod
    def zeros(cls, n: int, m: int) -> "BitGrid":
        return cls(np.zeros((n, m), dtype=np.uint8))

    @classmethod
    def from_positions(cls, n: int, m: int, positions: Iterable[Index]) -> "BitGrid":
        arr = np.zeros((n, m), dtype=np.uint8)
        for i, j in positions:
            arr[i % n, j % m] ^= 1
        return cls(arr)

    @classmethod
    def from_text(cls, text: str) -> "BitGrid":
        rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not rows or len({len(r) for r in rows}) != 1 or any(set(r) - {"0", "1"} for r in rows):
            raise ValueError("grid text must be equal-length rows of '0'/'1'")
        return cls([[int(ch) for ch in r] for r in rows])

    @classmethod
    def from_int(cls, n: int, m: int, value: int) -> "BitGrid":
        """Row-major bits, bit k of ``value`` -> cell (k // m, k % m)."""
        flat = [(value >> k) & 1 for k in range(n * m)]
        return cls(np.array(flat, dtype=np.uint8).reshape(n, m))

    def to_text(self) -> str:
        return "".join("".join(str(b) for b in row) + "\n" for row in self.bits)

    def to_int(self) -> int:
        return sum(int(b) << k for k, b in enumerate(self.bits.ravel()))

    @property
    def shape(self) -> tuple[int, int]:
        return self.bits.shape

    @property
    def n(self) -> int:
        return self.bits.shape[0]

    @property
    def m(self) -> int:
        return self.bits.shape[1]

    def ones(self) -> list[Index]:
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(self.bits))]

    def weight(self) -> int:
        return int(self.bits.sum())

    def shift(self, di: int, dj: int) -> "BitGrid":
        """Cyclic shift, i.e. multiplication by x^di y^dj."""
        return BitGrid(np.roll(self.bits, (di, dj), axis=(0, 1)))

    def __xor__(self, other: "BitGrid") -> "BitGrid":
        if self.shape != other.shape:
            raise DimensionMismatchError(f"{self.shape} vs {other.shape}")
        return BitGrid(self.bits ^ other.bits)

    def __getitem__(self, idx: Index) -> int:
        return int(self.bits[idx])

    def __eq__(self, other):
        if not isinstance(other, BitGrid):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.bits, other.bits))

    def __hash__(self):
        return hash((self.shape, self.bits.tobytes()))

    def __repr__(self):
        return "BitGrid(%s)" % "/".join("".join(map(str, r)) for r in self.bits)


class SpectrumGrid:
    """Immutable n x m array of GF(2^lam) elements (ints)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        arr = np.array(coeffs, dtype=np.int64, copy=True)
        if arr.ndim != 2:
            raise ValueError("SpectrumGrid needs a 2D array")
        arr.setflags(write=False)
        self.coeffs = arr

    @classmethod
    def zeros(cls, n: int, m: int) -> "SpectrumGrid":
        return cls(np.zeros((n, m), dtype=np.int64))

    @property
    def shape(self) -> tuple[int, int]:
        return self.coeffs.shape

    def __getitem__(self, idx: Index) -> int:
        return int(self.coeffs[idx])

    def __add__(self, other: "SpectrumGrid") -> "SpectrumGrid":
        return SpectrumGrid(self.coeffs ^ other.coeffs)

    def zero_indices(self) -> set[Index]:
        return {(int(t), int(p)) for t, p in zip(*np.nonzero(self.coeffs == 0))}

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def __eq__(self, other):
        if not isinstance(other, SpectrumGrid):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.shape, self.coeffs.tobytes()))

    def format(self, field: Field) -> str:
        return "\n".join(" ".join(field.fmt(int(v)) for v in row) for row in self.coeffs) + "\n"


@dataclass(frozen=True)
class RootPair:
    gamma: int
    beta: int
    n: int
    m: int


def make_roots(field: Field, n: int, m: int) -> RootPair:
    """gamma = alpha^((2^lam-1)/n), beta = alpha^((2^lam-1)/m), orders checked."""
    if field.order % n or field.order % m:
        raise DimensionMismatchError(f"{n} and {m} must divide 2^{field.lam}-1")
    gamma = field.antilog(field.order // n)
    beta = field.antilog(field.order // m)
    for root, k in ((gamma, n), (beta, m)):
        if field.pow(root, k) != 1 or any(field.pow(root, e) == 1 for e in range(1, k)):
            raise OrderMismatchError(f"root {field.fmt(root)} does not have order {k}")
    return RootPair(gamma, beta, n, m)


def _root_logs(field: Field, roots: RootPair) -> tuple[int, int]:
    return field.log(roots.gamma), field.log(roots.beta)


def _check_dims(shape, roots: RootPair):
    if tuple(shape) != (roots.n, roots.m):
        raise DimensionMismatchError(f"grid {tuple(shape)} vs roots for {roots.n}x{roots.m}")


def evaluate(ones: Sequence[Index], t: int, p: int, field: Field, roots: RootPair) -> int:
    """Value at (gamma^t, beta^p) of the polynomial with the given support."""
    lg, lb = _root_logs(field, roots)
    acc = 0
    for i, j in ones:
        acc ^= field.antilog(lg * i * t + lb * j * p)
    return acc


def ffft(grid: BitGrid, roots: RootPair, field: Field) -> SpectrumGrid:
    _check_dims(grid.shape, roots)
    n, m = roots.n, roots.m
    ones = grid.ones()
    out = np.zeros((n, m), dtype=np.int64)
    for t in range(n):
        for p in range(m):
            out[t, p] = evaluate(ones, t, p, field, roots)
    return SpectrumGrid(out)


def iffft(spec: SpectrumGrid, roots: RootPair, field: Field) -> BitGrid:
    _check_dims(spec.shape, roots)
    n, m = roots.n, roots.m
    # 1 / ((n mod 2)(m mod 2)); both odd here, so this is 1
    scale = field.inv(field.mul(n % 2, m % 2))
    lg, lb = _root_logs(field, roots)
    nz = [(t, p, int(spec.coeffs[t, p])) for t in range(n) for p in range(m) if spec.coeffs[t, p]]
    out = np.zeros((n, m), dtype=np.uint8)
    for i in range(n):
        for j in range(m):
            acc = 0
            for t, p, v in nz:
                acc ^= field.mul(v, field.antilog(-(lg * i * t + lb * j * p)))
            acc = field.mul(acc, scale)
            if acc > 1:
                raise NonBinaryResultError(
                    f"inverse transform entry ({i},{j}) = {field.fmt(acc)} is not binary"
                )
            out[i, j] = acc
    return BitGrid(out)


@dataclass(frozen=True)
class ConjugacyOrbit:
    members: tuple[Index, ...]

    @property
    def representative(self) -> Index:
        return self.members[0]

    @property
    def size(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Index]:
        return iter(self.members)

    def __contains__(self, idx) -> bool:
        return idx in self.members


def double(idx: Index, n: int, m: int) -> Index:
    return (2 * idx[0]) % n, (2 * idx[1]) % m


def orbit_of(idx: Index, n: int, m: int) -> ConjugacyOrbit:
    seen = [idx]
    nxt = double(idx, n, m)
    while nxt != idx:
        seen.append(nxt)
        nxt = double(nxt, n, m)
    # rotate so the lexicographically smallest member leads; doubling order kept
    k = seen.index(min(seen))
    return ConjugacyOrbit(tuple(seen[k:] + seen[:k]))


def orbits(n: int, m: int) -> list[ConjugacyOrbit]:
    """Partition of all n*m frequency indices into doubling orbits."""
    out, covered = [], set()
    for t in range(n):
        for p in range(m):
            if (t, p) not in covered:
                orb = orbit_of((t, p), n, m)
                covered.update(orb.members)
                out.append(orb)
    return out


def check_conjugate(spec: SpectrumGrid, field: Field) -> bool:
    n, m = spec.shape
    return all(
        field.pow(spec[t, p], 2) == spec[double((t, p), n, m)] for t in range(n) for p in range(m)
    )
