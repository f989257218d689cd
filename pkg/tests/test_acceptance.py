"""Acceptance gate: twelve end-to-end checks, one pass/fail line each.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion lines.
Each check is an exact finite identity or inequality suite; runtime-limited
checks are timed with perf_counter against their stated budgets.
"""

import json
import time
from fractions import Fraction

import pytest

import repgrowth.cli as cli
from repgrowth.char_table import (
    builtin_table,
    decompose,
    first_power_containing,
    min_power_containing_regular,
    regular_character,
    regular_tensor_check,
    tensor_power_char,
)
from repgrowth.growth import GrowthSeries, estimate, fekete_check
from repgrowth.markov import (
    IntegerRingMap,
    decay_rate,
    p_of_map,
    p_of_tensor_by,
    q_of,
)
from repgrowth.modular_fusion import (
    basis_vector,
    fuse,
    fuse_basis,
    jordan_oracle,
    tensor_power,
    ts_series_modular,
)
from repgrowth.partitions import hook_syt_count, weyl_dimension
from repgrowth.pieri import tensor_power_decomposition, trivial_multiplicity, ts_series_sl
from repgrowth.torus import (
    bernstein_zero_bound,
    diagonal_zero_count,
    zero_weight_probability,
)

CATALAN_12 = (1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012)


def _report(num: int, description: str, ok: bool) -> None:
    print(f"criterion {num:02d} {'PASS' if ok else 'FAIL'}: {description}")
    assert ok, f"criterion {num:02d}: {description}"


def test_criterion_01_catalan_identity():
    start = time.perf_counter()
    series = ts_series_sl(2, 12)
    expected = tuple(hook_syt_count((k, k)) for k in range(1, 13))
    elapsed = time.perf_counter() - start
    ok = series.values == CATALAN_12 == expected and elapsed < 1.0
    _report(1, "SL_2 trivial-summand series is Catalan through k=12", ok)


def test_criterion_02_pieri_oracle_equivalence():
    start = time.perf_counter()
    ok = True
    for m in (2, 3, 4):
        for n in range(11):
            decomp = tensor_power_decomposition(m, n)
            total = 0
            for lam, mult in decomp.mults.items():
                shape = tuple(x for x in lam.parts if x)
                if mult != hook_syt_count(shape):
                    ok = False
                total += mult * weyl_dimension(lam)
            if total != m**n:
                ok = False
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 5.0
    _report(2, "Pieri multiplicities = SYT counts and dimensions sum to m^n", ok)


def test_criterion_03_fekete_supermultiplicativity():
    start = time.perf_counter()
    ok = all(fekete_check(ts_series_sl(m, 10)) for m in (2, 3))
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1.0
    _report(3, "a_{l+k} >= a_l * a_k for SL_2 and SL_3 series to max=10", ok)


def test_criterion_04_growth_lower_bound_trend():
    start = time.perf_counter()
    lowers = [estimate(ts_series_sl(2, k)).lower for k in range(1, 13)]
    monotone = all(b >= a - 1e-9 for a, b in zip(lowers, lowers[1:]))
    ok = lowers[-1] >= 1.66 and monotone
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1.0
    _report(4, "SL_2 lower bound >= 1.66 at max=12 and monotone in horizon", ok)


def test_criterion_05_fusion_oracle_total_verification():
    start = time.perf_counter()
    ok = all(
        fuse_basis(p, m, n) == jordan_oracle(p, m, n)
        for p in (2, 3, 5, 7)
        for m in range(p)
        for n in range(p)
    )
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 10.0
    _report(5, "closed-form fusion matches Jordan-block oracle, p in {2,3,5,7}", ok)


def test_criterion_06_ring_map_example_regression():
    s = IntegerRingMap(2, ((2, 1), (0, 1)))
    p_s = p_of_map(s)
    p_s2 = p_of_map(s.compose(s))
    f = Fraction
    ok = (
        s.compose(s).rows == ((4, 3), (0, 1))
        and p_s.rows == ((f(1), f(1, 3)), (f(0), f(2, 3)))
        and p_s2.rows == ((f(1), f(3, 5)), (f(0), f(2, 5)))
        and p_s2 != p_s @ p_s
    )
    _report(6, "P([[2,1],[0,1]]) regression and P(S^2) != P(S)^2", ok)


def test_criterion_07_tensor_by_multiplicativity():
    ok = True
    for p in (2, 3, 5):
        for a in range(p):
            for b in range(p):
                va, vb = basis_vector(p, a), basis_vector(p, b)
                if p_of_tensor_by(va) @ p_of_tensor_by(vb) != p_of_tensor_by(fuse(va, vb)):
                    ok = False
        v1 = basis_vector(p, 1)
        mat = p_of_tensor_by(v1)
        vec = q_of(basis_vector(p, 0))
        for n in range(1, 11):
            vec = mat.apply(vec)
            if vec != q_of(tensor_power(v1, n)):
                ok = False
    _report(7, "P(x a)P(x b) = P(x a*b) on basis pairs; trajectory matches q", ok)


def test_criterion_08_projective_decay_bound():
    ok = True
    for p in (3, 5):
        rate = decay_rate(basis_vector(p, 1))
        for n in range(1, 9):
            power = tensor_power(basis_vector(p, 1), (p - 1) * n)
            nonproj = sum(
                (i + 1) * c for i, c in enumerate(power.coeffs[: p - 1])
            )
            if Fraction(nonproj, power.dimension) > rate**n:
                ok = False
    series = ts_series_modular(basis_vector(3, 1), step=2, max_k=15)
    ok = ok and series.values == (1,) * 15 and estimate(series).lower < 2
    _report(8, "non-projective mass <= decay_rate^n; p=3 TS stays 1 to n=15", ok)


def test_criterion_09_bernstein_suite():
    start = time.perf_counter()
    ok = True
    for weights in ((2, -1), (1, 1, -1), (3, -1, -1)):
        for n in range(1, 61):
            prob = zero_weight_probability(weights, n)
            bound = bernstein_zero_bound(weights, n).value
            if float(prob) > bound + 1e-12:
                ok = False
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 2.0
    _report(9, "exact zero-weight probability <= Bernstein bound, n <= 60", ok)


def _equal_occupancy_dp(m: int, n: int) -> int:
    states = {(0,) * m: 1}
    for _ in range(m * n):
        nxt: dict[tuple[int, ...], int] = {}
        for counts, ways in states.items():
            for i in range(m):
                if counts[i] < n:
                    bumped = counts[:i] + (counts[i] + 1,) + counts[i + 1 :]
                    nxt[bumped] = nxt.get(bumped, 0) + ways
        states = nxt
    return states.get((n,) * m, 0)


def test_criterion_10_weight_zero_consistency():
    ok = all(
        diagonal_zero_count(m, n) == _equal_occupancy_dp(m, n)
        for m in range(1, 5)
        for n in range(7)
    )
    ok = ok and all(
        diagonal_zero_count(m, n) >= trivial_multiplicity(m, m * n)
        for m in range(1, 4)
        for n in range(7)
    )
    _report(10, "diagonal count = occupancy DP and >= trivial multiplicity", ok)


def test_criterion_11_symmetric_group_suite():
    start = time.perf_counter()
    table = builtin_table("s3")
    std = table.irreps[table.irrep_index("std")]
    firsts = tuple(
        first_power_containing(table, std, table.irrep_index(name), table.group_order)
        for name in ("triv", "sign", "std")
    )
    mults = decompose(table, tensor_power_char(std, 1) * regular_character(table))
    ok = (
        firsts == (2, 2, 1)
        and regular_tensor_check(table, std)
        and mults == (2, 2, 4)
        and mults[table.trivial_index] == 2
        and min_power_containing_regular(table, std) == 2
    )
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1.0
    _report(11, "S3 std: first powers (2,2,1); regular check; min power 2", ok)


def test_criterion_12_cli_determinism(capsys, monkeypatch, tmp_path):
    table_path = tmp_path / "s3.tbl"
    table_path.write_text(
        "6 3\n1 3 2\ntriv 1 1 1\nsign 1 -1 1\nstd 2 0 -1\n", encoding="utf-8"
    )
    commands = [
        ["pieri", "--m", "2", "--n", "4"],
        ["pieri", "--m", "2", "--n", "0"],
        ["pieri", "--m", "2", "--n", "4", "--canonical"],
        ["pieri", "--m", "3", "--n", "6", "--csv"],
        ["pieri", "--m", "2", "--n", "4", "--json"],
        ["ts", "sl", "--m", "2", "--max", "12"],
        ["ts", "sl", "--m", "3", "--max", "6", "--csv"],
        ["ts", "sl", "--m", "2", "--max", "6", "--json"],
        ["ts", "modular", "--p", "3", "--seed", "V1", "--step", "2", "--max", "6"],
        ["ts", "modular", "--p", "2", "--seed", "V1", "--step", "1", "--max", "3"],
        ["fusion", "--p", "3", "1", "1"],
        ["fusion", "--p", "5", "3", "3", "--oracle"],
        ["fusion", "--p", "7", "0", "4"],
        ["fusion", "--p", "5", "2", "3", "--json"],
        ["markov", "--p", "2", "--example"],
        ["markov", "--p", "3", "--seed", "V1", "--power", "2"],
        ["markov", "--p", "5", "--seed", "V1", "--power", "3", "--json"],
        ["torus", "--weights", "2,-1", "--n", "3"],
        ["torus", "--weights", "1,-1", "--n", "4"],
        ["torus", "--diagonal", "--m", "3", "--n", "2"],
        ["torus", "--weights", "2,-1", "--n", "30", "--json"],
        ["chartab", str(table_path), "decompose", "--irrep", "std", "--power", "2"],
        ["chartab", str(table_path), "first-power", "--irrep", "std", "--target", "sign"],
        ["chartab", str(table_path), "regular-check", "--irrep", "std"],
        ["chartab", str(table_path), "min-regular", "--irrep", "std"],
    ]
    ok = True
    for argv in commands:
        runs = []
        for _ in range(2):
            code = cli.main(argv)
            out = capsys.readouterr().out
            runs.append((code, out.encode("utf-8")))
            if code != 0:
                ok = False
        if runs[0] != runs[1]:
            ok = False
        if argv[-1] == "--json":
            json.loads(runs[0][1].decode("utf-8"))
    monkeypatch.setattr(cli, "jordan_oracle", lambda p, m, n: basis_vector(p, 0))
    code = cli.main(["fusion", "--p", "5", "3", "3", "--oracle"])
    out = capsys.readouterr().out
    ok = ok and code == 1 and out.endswith("| DISAGREE\n")
    _report(12, "documented commands byte-identical twice; fault exits 1", ok)
