"""End-to-end acceptance battery.

Ten numbered checks, each reproducing one headline guarantee of the
toolkit.  Every check prints a single PASS/FAIL line straight to the
terminal (bypassing capture) and enforces a wall-clock limit.  The last
check reruns the first nine from scratch with the same seeds and demands
byte-identical canonical reports.

Reports deliberately contain no timestamps or timings, only math.
"""

import itertools
import json
import random
import time

from addmds import linalg
from addmds.code import (
    apply_move,
    is_mds,
    linear_equivalence_witness,
    min_distance,
    project,
    random_move,
    rs_code,
)
from addmds.geometry import system_from_code, system_min_distance
from addmds.gf import field_create
from addmds.linpoly import LinearizedPoly, invertible_linearized
from addmds.propm import (
    verify_inverse_lemma,
    verify_semilinear_criterion,
    verify_two_nonzero_lemma,
    verify_zero_coeff_lemma,
)
from addmds.search import k4_example_search, verify_k4_example

_REPORTS = {}

F4 = field_create(2, 1, 2)
F8 = field_create(2, 1, 3)
F9 = field_create(3, 1, 2)


def canonical(report):
    return json.dumps(report, sort_keys=True, separators=(",", ":")).encode()


def run_criterion(num, limit, builder, capfd):
    def emit(line):
        with capfd.disabled():
            print(line, flush=True)

    start = time.perf_counter()
    try:
        report, detail = builder()
        ok = bool(report["ok"])
    except BaseException:
        elapsed = time.perf_counter() - start
        emit(f"ACCEPTANCE {num:02d}: FAIL (raised after {elapsed:.2f}s)")
        raise
    elapsed = time.perf_counter() - start
    status = "PASS" if ok and elapsed < limit else "FAIL"
    emit(f"ACCEPTANCE {num:02d}: {status} - {detail} ({elapsed:.2f}s, limit {limit:.0f}s)")
    assert ok, f"criterion {num} report flags violations"
    assert elapsed < limit, f"criterion {num}: {elapsed:.2f}s over {limit}s limit"
    _REPORTS[num] = canonical(report)
    return report


# -- builders (pure: fixed seeds, no timestamps, rerunnable) ----------------

def build_1():
    entries = []
    for tower, k in ((F4, 2), (F9, 3)):
        start = time.perf_counter()
        code = rs_code(tower, k)
        d = min_distance(code)
        mds = is_mds(code)
        assert time.perf_counter() - start < 1.0
        assert mds and d == code.n - k + 1
        entries.append({"q": tower.q, "n": code.n, "k": k, "d": d, "is_mds": mds})
    return {"entries": entries, "ok": True}, "rs baseline F4 k=2 / F9 k=3, d = n-k+1"


def _bridge_fixtures():
    codes = []
    for tower in (F4, F9, F8):
        c2, c3 = rs_code(tower, 2), rs_code(tower, 3)
        codes += [c2, c3, project(c2, (0,)), project(c3, (c3.n - 1,))]
        rng = random.Random(tower.size)
        codes.append(apply_move(c2, random_move(tower, c2.n, rng)))
        codes.append(apply_move(c3, random_move(tower, c3.n, rng)))
    codes.append(rs_code(F4, 4))
    codes.append(rs_code(F9, 4))
    return codes


def build_2():
    codes = _bridge_fixtures()
    assert len(codes) == 20 and all(c.n <= 10 for c in codes)
    checks = []
    for code in codes:
        d_hamming = min_distance(code)
        d_system = system_min_distance(system_from_code(code))
        assert d_hamming == d_system
        checks.append({"p": code.tower.p, "h": code.tower.h, "n": code.n,
                       "k_fq": code.k_fq, "d": d_hamming})
    return {"fixtures": checks, "ok": True}, "20 codes, Hamming d == hyperplane d"


def build_3():
    towers = {}
    for tower in (F4, F8, F9):
        identity = LinearizedPoly.identity(tower)
        n_invertible = 0
        for coeffs in itertools.product(range(tower.size), repeat=tower.h):
            f = LinearizedPoly(tower, coeffs)
            inv = f.is_invertible()
            assert inv == (f.dickson_det() != 0)
            assert inv == (len({f(x) for x in range(tower.size)}) == tower.size)
            if inv:
                n_invertible += 1
                assert f.inverse().compose(f) == identity
        rng = random.Random(tower.size)
        for _ in range(1000):
            f = LinearizedPoly(tower, tuple(rng.randrange(tower.size)
                                            for _ in range(tower.h)))
            g = LinearizedPoly(tower, tuple(rng.randrange(tower.size)
                                            for _ in range(tower.h)))
            assert f.compose(g).dickson() == linalg.mat_mul(
                tower, f.dickson(), g.dickson())
        towers[f"q{tower.q}h{tower.h}"] = {
            "maps": tower.size ** tower.h,
            "invertible": n_invertible,
            "product_pairs": 1000,
        }
    return ({"towers": towers, "ok": True},
            "det/injectivity/inverse exhaustive + Dickson product law")


def build_4():
    reports = [verify_semilinear_criterion(t) for t in (F4, F8, F9)]
    counts = [r["pairs"] for r in reports]
    assert counts == [18, 1176, 384]
    ok = all(r["ok"] for r in reports)
    return ({"pairs_per_tower": counts,
             "violations": sum(len(r["violations"]) for r in reports),
             "ok": ok},
            "monomial collapse iff support criterion, 3 towers exhaustive")


def build_5():
    report = verify_zero_coeff_lemma(F9)
    assert report["bound"] == 5
    assert report["pairs"] == 2304 and report["qualifying_pairs"] == 256
    assert report["max_m"] == 7
    return report, "F9 exhaustive: m > 5 forces equal zero counts + certificates"


def build_6():
    inv22 = invertible_linearized(F4)
    flat = []
    for f in inv22:
        for g in inv22:
            r = verify_inverse_lemma(f, g)
            assert r["ok"]
            flat.append(r["m"])
    inv32 = invertible_linearized(F9)
    rng = random.Random(6)
    histogram = {}
    violations = 0
    for _ in range(10_000):
        f = inv32[rng.randrange(len(inv32))]
        g = inv32[rng.randrange(len(inv32))]
        r = verify_inverse_lemma(f, g)
        if not r["ok"]:
            violations += 1
        histogram[str(r["m"])] = histogram.get(str(r["m"]), 0) + 1
    report = {
        "exhaustive_pairs_f4": len(flat),
        "m_values_f4": flat,
        "sampled_pairs_f9": 10_000,
        "m_histogram_f9": dict(sorted(histogram.items())),
        "violations": violations,
        "ok": violations == 0,
    }
    return report, "m equal across inverse pairs, 36 exhaustive + 10^4 sampled"


def build_7():
    r8 = verify_two_nonzero_lemma(F8)
    r27 = verify_two_nonzero_lemma(field_create(3, 1, 3))
    assert r8["two_term_candidates"] == 147 and r8["qualifying"] == 0
    assert r27["two_term_candidates"] == 2028 and r27["qualifying"] == 1014
    ok = r8["ok"] and r27["ok"]
    return ({"f8": {k: r8[k] for k in ("two_term_candidates", "qualifying", "ok")},
             "f27": {k: r27[k] for k in ("two_term_candidates", "qualifying", "ok")},
             "ok": ok},
            "two-term invertibles have fully dense inverses (q=3 leg non-vacuous)")


def build_8():
    tower = field_create(5, 1, 2)
    example = k4_example_search(tower, n=6)
    assert example is not None
    report = verify_k4_example(example)
    assert len(report["assertions"]) == 4
    assert all(report["assertions"].values())
    return report, "k=4 hunt at q=25 finds example, all four assertions verified"


def build_9():
    recovered = 0
    for i in range(1000):
        tower = F4 if i % 2 == 0 else F9
        base = rs_code(tower, 2 + (i // 2) % 2)
        rng = random.Random(9000 + i)
        scrambled = apply_move(base, random_move(tower, base.n, rng))
        witness = linear_equivalence_witness(scrambled)
        if witness is not None:
            moved = apply_move(scrambled, witness.linearizing_move())
            if moved.is_field_linear():
                recovered += 1
    return ({"codes": 1000, "recovered": recovered, "ok": recovered == 1000},
            "1000 scrambled linear MDS codes, witness recovery rate 1000/1000")


_BUILDERS = {1: build_1, 2: build_2, 3: build_3, 4: build_4, 5: build_5,
             6: build_6, 7: build_7, 8: build_8, 9: build_9}


def test_criterion_01_rs_mds_baseline(capfd):
    run_criterion(1, 2.0, build_1, capfd)


def test_criterion_02_distance_bridge(capfd):
    run_criterion(2, 10.0, build_2, capfd)


def test_criterion_03_dickson_suite(capfd):
    run_criterion(3, 30.0, build_3, capfd)


def test_criterion_04_semilinear_criterion(capfd):
    run_criterion(4, 60.0, build_4, capfd)


def test_criterion_05_zero_coefficient_lemma(capfd):
    run_criterion(5, 600.0, build_5, capfd)


def test_criterion_06_inverse_lemma(capfd):
    run_criterion(6, 300.0, build_6, capfd)


def test_criterion_07_two_nonzero_lemma(capfd):
    run_criterion(7, 120.0, build_7, capfd)


def test_criterion_08_k4_hunt(capfd):
    run_criterion(8, 1800.0, build_8, capfd)


def test_criterion_09_scramble_recovery(capfd):
    run_criterion(9, 300.0, build_9, capfd)


def test_criterion_10_determinism(capfd):
    def rerun_all():
        mismatches = []
        for num, builder in _BUILDERS.items():
            baseline = _REPORTS.get(num)
            if baseline is None:
                baseline = canonical(builder()[0])
            if canonical(builder()[0]) != baseline:
                mismatches.append(num)
        return ({"criteria_rerun": sorted(_BUILDERS), "mismatches": mismatches,
                 "ok": not mismatches},
                "criteria 1-9 rerun byte-identical")

    run_criterion(10, 3600.0, rerun_all, capfd)
