"""Exit criteria. Run with ``pytest tests/test_acceptance.py -s`` to see the
PASS/FAIL summary lines."""

import math
import time
from contextlib import contextmanager

import pytest

from hilbertdim.cli import main
from hilbertdim.optimizer import (
    best_equipartition,
    best_particle_count,
    measurement_threshold,
    mixed_vs_pure_exponent,
    sweep_series,
)
from hilbertdim.oracle import count_by_generating_function, enumerate_occupancies
from hilbertdim.packing import bosonic_dim, capped_dim, equipartition_dim, fermionic_dim

from conftest import GOLDEN


@contextmanager
def criterion(label, budget_s):
    start = time.perf_counter()
    ok = False
    detail = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        detail = f"{elapsed:.3f}s / {budget_s}s"
        assert elapsed < budget_s, f"{label} took {elapsed:.2f}s, budget {budget_s}s"
        ok = True
    finally:
        print(f"\n{'PASS' if ok else 'FAIL'}  {label:<55} {detail}")


def test_ac1_paper_values():
    with criterion("AC1 paper values 64, 81, 924 (exact)", 1):
        assert equipartition_dim(12, 2, "qudit") == 64
        assert equipartition_dim(12, 3, "qudit") == 81
        assert fermionic_dim(12, 6) == 924


def test_ac2_threshold():
    with criterion("AC2 threshold(1.5) = 20.65 +/- 0.01", 1):
        assert abs(measurement_threshold(1.5) - 20.65) <= 0.01


def test_ac3_qutrit_optimality():
    with criterion("AC3 qutrits optimal; ln(x)/x peaks at 3", 1):
        for n in range(6, 61, 6):
            assert best_equipartition(n, "qudit")[0] == 3
        values = {x: math.log(x) / x for x in range(2, 101)}
        assert all(values[3] > v for x, v in values.items() if x != 3)


def test_ac4_mixed_inferiority():
    with criterion("AC4 exp(m*y3 + b) < 1 and increasing in y3", 1):
        checked = 0
        for n_prime in range(1, 101):
            valid = [y3 for y3 in range(n_prime // 3 + 1) if (n_prime - 3 * y3) % 2 == 0]
            exps = [math.exp(mixed_vs_pure_exponent(n_prime, y3)) for y3 in valid]
            assert all(e < 1 for e in exps)
            assert all(a < b for a, b in zip(exps, exps[1:]))
            checked += len(valid)
        assert checked > 0


def test_ac5_oracle_grid():
    with criterion("AC5 nested sum = enumeration = generating function", 30):
        tuples = 0
        for x in range(1, 9):
            for z in range(1, 5):
                for k in range(0, 17):
                    d = capped_dim(x, k, z)
                    assert d == len(enumerate_occupancies(x, k, z)), (x, k, z)
                    assert d == count_by_generating_function(x, k, z), (x, k, z)
                    tuples += 1
        assert tuples >= 500
        for x in range(1, 9):
            for k in range(0, 9):
                assert capped_dim(x, k, 1) == math.comb(x, k)
                for z in range(max(k, 1), max(k, 1) + 3):
                    assert capped_dim(x, k, z) == math.comb(x + k - 1, x - 1)


def test_ac6_sweep_golden(capsys):
    with criterion("AC6 sweep -n 12 byte-exact golden CSV", 5):
        assert main(["sweep", "-n", "12", "--format", "csv"]) == 0
        out = capsys.readouterr().out
        golden = (GOLDEN / "sweep_n12.csv").read_bytes()
        assert out.encode() == golden
        rows = [line.split(",") for line in out.splitlines()[1:]]
        assert sorted({int(r[1]) for r in rows}) == [2, 3, 4, 6, 12]
        by_series = {}
        for s, x, _, _, d in rows:
            by_series.setdefault(s, []).append(int(d))
        assert by_series["qudit"] == [64, 81, 64, 36, 12]
        assert by_series["fermionic"] == [64, 81, 216, 400, 924]
        points = [2, 3, 4, 6, 12]
        assert by_series["capped"] == [count_by_generating_function(x, x, 2) ** (12 // x) for x in points]
        assert by_series["spin"] == [count_by_generating_function(2 * x, x, 1) ** (12 // x) for x in points]


def test_ac7_particle_argmax():
    with criterion("AC7 argmax k = floor(x/2) (z=1), k = x (z=2)", 5):
        for x in range(1, 31):
            assert best_particle_count(x, 1)[0] == x // 2
        for x in range(1, 13):
            assert best_particle_count(x, 2)[0] == x


def test_ac8_monotone_and_dominance():
    with criterion("AC8 bosonic monotone; spin >= capped >= fermionic", 5):
        for x in range(1, 11):
            for k in range(0, 20):
                if x >= 2:
                    assert bosonic_dim(x, k + 1) > bosonic_dim(x, k)
        for n in (12, 24):
            t = sweep_series(n)
            spin, capped, fermi = t.series("spin"), t.series("capped"), t.series("fermionic")
            assert spin.keys() == capped.keys() == fermi.keys()
            for x in spin:
                assert spin[x] >= capped[x] >= fermi[x], (n, x)
