"""Exit criteria.  Each test prints one PASS/FAIL line in the terminal summary."""
import json
import time

import numpy as np
import pytest

from burst2d import H2, V2, BitGrid, Kind, check_conjugate, check_disjoint, decode, encode, ffft, iffft, inject
from burst2d.cli import main
from burst2d.code import build_code, to_config
from burst2d.decoder import compute_syndrome, solve_multi_burst
from burst2d.error_model import GlobalError, horizontal
from burst2d.errors import AmbiguousSolutionError
from burst2d.oracle import (
    _encoded_codewords,
    _filtered_codewords,
    cached_codebook,
    exhaustive_decode,
    pair_class,
    same_type_class,
    single_class,
)

pytestmark = pytest.mark.acceptance


class Clock:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        if exc[0] is None:
            assert self.elapsed < self.limit, f"took {self.elapsed:.2f}s, limit {self.limit}s"


def test_c01_reference_grid_transform(ex1_grid, ex1_code):
    """01 reference 3x5 grid: spectral zeros, conjugacy, bit-exact inverse"""
    with Clock(1.0):
        spec = ffft(ex1_grid, ex1_code.roots, ex1_code.field)
        assert spec.zero_indices() == {(0, 0), (1, 1), (1, 4), (2, 2), (2, 3)}
        assert check_conjugate(spec, ex1_code.field)
        assert iffft(spec, ex1_code.roots, ex1_code.field) == ex1_grid


def test_c02_single_combination_decodes(ex2_code, r1, r2):
    """02 r1 -> (1,1) at (0,0),(0,2); r2 -> (1,0) at (1,2); both back to zero"""
    with Clock(1.0):
        z = BitGrid.zeros(3, 5)
        a = decode(r1, ex2_code)
        assert a.kind is Kind.CORRECTED and a.classification == (1, 1)
        assert a.positions == ((0, 0), (0, 2)) and a.grid == z
        b = decode(r2, ex2_code)
        assert b.kind is Kind.CORRECTED and b.classification == (1, 0)
        assert b.positions == ((1, 2),) and b.grid == z


def test_c03_two_burst_regression(ex1_code, r3):
    """03 two h2 bursts located uniquely at {(0,3),(2,0)}"""
    with Clock(1.0):
        s = compute_syndrome(r3, ex1_code)
        assert set(solve_multi_burst(s, H2, 2, ex1_code)) == {(0, 3), (2, 0)}


def test_c04_oracle_equivalence(ex2_code):
    """04 encoder vs brute-force codebook, decoder vs exhaustive decoder"""
    with Clock(300.0):
        filtered = {g.to_int() for g in _filtered_codewords(ex2_code)}
        encoded = [g.to_int() for g in _encoded_codewords(ex2_code)]
        assert len(encoded) == len(set(encoded)) == 16
        assert filtered == set(encoded)

        cls = single_class(H2, 3, 5) + single_class(V2, 3, 5) + pair_class(H2, V2, 3, 5)
        compared = disagree = 0
        for sent in cached_codebook(ex2_code).codewords:
            for errs in cls:
                r = inject(sent, errs)
                try:
                    mask, _ = exhaustive_decode(r, ex2_code, cls)
                except AmbiguousSolutionError:
                    assert decode(r, ex2_code).kind is Kind.UNCORRECTABLE
                    continue
                compared += 1
                out = decode(r, ex2_code)
                if out.kind is not Kind.CORRECTED or out.grid != r ^ mask:
                    disagree += 1
        assert compared > 0 and disagree == 0


def test_c05_disjoint_syndromes(ex2_code):
    """05 no h2/v2 syndrome collision over all 15x15 placements"""
    with Clock(10.0):
        assert check_disjoint(ex2_code, H2, V2)


def test_c06_full_row_burst(ex2_code):
    """06 1x5 burst gives an all-zero spectrum and decodes Clean; 1x4 is detected"""
    with Clock(1.0):
        z = BitGrid.zeros(3, 5)
        four = inject(z, [GlobalError(horizontal(4), (1, 0))])
        assert not compute_syndrome(four, ex2_code).is_zero()
        row = inject(z, [GlobalError(horizontal(5), (1, 0))])
        spec = ffft(row, ex2_code.roots, ex2_code.field)
        assert spec.is_zero(), f"nonzero spectrum at {sorted(set(np.ndindex(3, 5)) - spec.zero_indices())}"
        assert decode(row, ex2_code).kind is Kind.CLEAN


def test_c07_overlap_never_miscorrects(ex2_code):
    """07 overlapping h2/v2 on every codeword: zero silent miscorrections"""
    with Clock(60.0):
        overlaps = pair_class(H2, V2, 3, 5, overlapping=True)
        bad = 0
        for sent in cached_codebook(ex2_code).codewords:
            for errs in overlaps:
                out = decode(inject(sent, errs), ex2_code)
                if out.kind is not Kind.UNCORRECTABLE and out.grid != sent:
                    bad += 1
        assert bad == 0


def test_c08_two_burst_uniqueness(ex1_code):
    """08 every non-overlapping h2 pair on the 3x5 code is located uniquely"""
    with Clock(60.0):
        z = BitGrid.zeros(3, 5)
        ambiguous = 0
        configs = same_type_class(H2, 2, 3, 5)
        for errs in configs:
            s = compute_syndrome(inject(z, errs), ex1_code)
            try:
                assert solve_multi_burst(s, H2, 2, ex1_code) == tuple(sorted(e.position for e in errs))
            except AmbiguousSolutionError:
                ambiguous += 1
        assert ambiguous == 0, f"{ambiguous} of {len(configs)} pairs are ambiguous"


def test_c09_transform_properties():
    """09 round trip, linearity, Frobenius additivity, conjugacy on 500+ random grids each"""
    with Clock(10.0):
        rng = np.random.default_rng(2024)
        for n, m in [(3, 5), (5, 3), (7, 9)]:
            code = build_code(n, m, warn=False)
            f, roots = code.field, code.roots

            def rand():
                return BitGrid(rng.integers(0, 2, size=(n, m)))

            for _ in range(500 if (n, m) == (3, 5) else 170):
                a, b = rand(), rand()
                sa, sb = ffft(a, roots, f), ffft(b, roots, f)
                assert iffft(sa, roots, f) == a
                sab = ffft(a ^ b, roots, f)
                assert sab == sa + sb
                for t in range(n):
                    for p in range(m):
                        assert f.mul(sab[t, p], sab[t, p]) == f.mul(sa[t, p], sa[t, p]) ^ f.mul(sb[t, p], sb[t, p])
                assert check_conjugate(sa, f)


def test_c10_simulation_determinism(ex2_code, tmp_path, capsys):
    """10 simulate: identical JSON across runs and worker counts"""
    with Clock(30.0):
        cfg = tmp_path / "code.json"
        cfg.write_text(json.dumps(to_config(ex2_code)))
        outs = []
        for workers in ("1", "1", "4"):
            assert main(["simulate", "--code", str(cfg), "--trials", "1000", "--seed", "11",
                         "--workers", workers]) == 0
            outs.append(capsys.readouterr().out.encode())
        assert outs[0] == outs[1] == outs[2]
        assert json.loads(outs[0])["trials"] == 1000
