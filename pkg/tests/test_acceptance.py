"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line; the lines are printed in the pytest
terminal summary (see conftest.py) and when this file is run directly:

    python tests/test_acceptance.py
"""

from __future__ import annotations

import math
import random
import time
import xml.etree.ElementTree as ET

import pytest

from dets2.cli import main
from dets2.core import (
    MONOMIALS,
    TRIPLES,
    Configuration,
    Vec2,
    det_s2_direct,
    det_s2_inner_product,
    det_s2_via_matrix,
)
from dets2.realizability import build_system_matrix, classify, config_from_angles, lambda_of
from dets2.sampling import random_config, random_rational, random_realizable, random_vec, with_equal_triple
from dets2.svg import SVG_NS
from dets2.symmetry import LinearMap2, act_linear_map, act_permutation, all_permutations, permutation_sign
from dets2.universality import build_constraint_matrix, canonical_coefficients, match_sign, solve_uniqueness, support

from conftest import FIXTURES, GOLDEN, W_CONFIG

SEED = 20261016
RESULTS: dict[int, tuple[bool, str, str]] = {}

SINE_TOL = 1e-9
BUDGET_W_CONFIG_S = 1e-3
BUDGET_EQUIVALENCE_S = 5.0
BUDGET_DICHOTOMY_S = 30.0
BUDGET_UNIQUENESS_S = 1.0


def record(n: int, label: str, ok: bool, detail: str = "") -> None:
    RESULTS[n] = (ok, label, detail)
    print(f"{'PASS' if ok else 'FAIL'}  [{n:2d}] {label}  {detail}")
    assert ok, f"criterion {n} failed: {label} {detail}"


def best_time(fn, repeats: int = 5) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def edge_identities(c, lam, quad) -> bool:
    return all(
        quad[j] - quad[i] == c[i, j].scale(lambda_of(lam, i, j))
        for i in range(1, 5)
        for j in range(i + 1, 5)
    )


def test_01_w_config_value():
    values = [f(W_CONFIG) for f in (det_s2_direct, det_s2_inner_product, det_s2_via_matrix)]
    elapsed = best_time(lambda: [f(W_CONFIG) for f in (det_s2_direct, det_s2_inner_product, det_s2_via_matrix)])
    ok = values == [1, 1, 1] and elapsed < BUDGET_W_CONFIG_S
    record(1, "w-config evaluates to 1 by all three formulas", ok, f"values={[str(v) for v in values]} t={elapsed * 1e3:.3f}ms")


def test_02_formula_equivalence():
    rng = random.Random(SEED + 2)
    configs = [random_config(rng) for _ in range(1000)]
    t0 = time.perf_counter()
    failures = 0
    for c in configs:
        d = det_s2_direct(c)
        if not (d == det_s2_inner_product(c) == det_s2_via_matrix(c)):
            failures += 1
    elapsed = time.perf_counter() - t0
    ok = failures == 0 and elapsed < BUDGET_EQUIVALENCE_S
    record(2, "three formulas agree exactly on 1000 random configs", ok, f"failures={failures} t={elapsed:.2f}s")


def test_03_vanishing_property():
    rng = random.Random(SEED + 3)
    failures = 0
    for triple in TRIPLES:
        for _ in range(250):
            if det_s2_direct(with_equal_triple(rng, triple)) != 0:
                failures += 1
    record(3, "equal triple forces det = 0 (4 x 250 configs)", failures == 0, f"failures={failures}")


def _random_sl2(rng):
    while True:
        a = random_rational(rng, nonzero=True)
        b, c = random_rational(rng), random_rational(rng)
        t = LinearMap2(a, b, c, (1 + b * c) / a)
        if t.det() == 1:
            return t


def test_04_group_laws():
    rng = random.Random(SEED + 4)
    perms = all_permutations()
    sign_fail = 0
    for _ in range(100):
        c = random_config(rng)
        d = det_s2_direct(c)
        for s in perms:
            if det_s2_direct(act_permutation(s, c)) != permutation_sign(s) * d:
                sign_fail += 1
    cube_fail = 0
    for _ in range(100):
        t = LinearMap2(*(random_rational(rng) for _ in range(4)))
        c = random_config(rng)
        if det_s2_direct(act_linear_map(t, c)) != t.det() ** 3 * det_s2_direct(c):
            cube_fail += 1
    sl2_fail = 0
    for _ in range(100):
        t = _random_sl2(rng)
        c = random_config(rng)
        if det_s2_direct(act_linear_map(t, c)) != det_s2_direct(c):
            sl2_fail += 1
    ok = sign_fail == cube_fail == sl2_fail == 0
    record(4, "sign law (24 x 100), det(T)^3 law (100), SL2 invariance (100)", ok,
           f"failures sign={sign_fail} cube={cube_fail} sl2={sl2_fail}")


def test_05_realizability_dichotomy():
    rng = random.Random(SEED + 5)
    t0 = time.perf_counter()
    generic_fail = generic_det_zero = 0
    for _ in range(500):
        c = random_config(rng)
        det_zero = det_s2_direct(c) == 0
        generic_det_zero += det_zero
        if det_zero != (classify(c).rank <= 5):
            generic_fail += 1
    realizable_fail = 0
    for _ in range(500):
        c, lam = random_realizable(rng)
        result = classify(c)
        ok = (
            det_s2_direct(c) == 0
            and result.rank <= 5
            and result.realizable
            and len(result.quadrilaterals) == len(result.lambda_basis) >= 1
            and all(edge_identities(c, l, q) for l, q in zip(result.lambda_basis, result.quadrilaterals))
            and build_system_matrix(c).apply(lam) == [0] * 8
        )
        realizable_fail += not ok
    elapsed = time.perf_counter() - t0
    ok = generic_fail == 0 and realizable_fail == 0 and elapsed < BUDGET_DICHOTOMY_S
    record(5, "det = 0 iff rank <= 5; rescaled point configs reconstruct exactly", ok,
           f"generic_fail={generic_fail} (det=0 in {generic_det_zero}/500) "
           f"realizable_fail={realizable_fail} t={elapsed:.2f}s")


def test_06_row_dependences():
    rng = random.Random(SEED + 6)
    failures = 0
    for _ in range(500):
        r = build_system_matrix(random_config(rng)).to_rows()
        for a, b, c, d in ((0, 2, 4, 6), (1, 3, 5, 7)):
            if any(x - y + z - w != 0 for x, y, z, w in zip(r[a], r[b], r[c], r[d])):
                failures += 1
    record(6, "R1-R3+R5-R7 = 0 and R2-R4+R6-R8 = 0 on 500 configs", failures == 0, f"failures={failures}")


def test_07_uniqueness():
    t0 = time.perf_counter()
    m = build_constraint_matrix()
    dim, gen = solve_uniqueness()
    elapsed = time.perf_counter() - t0
    canonical = canonical_coefficients()
    sign = match_sign(gen, canonical) if gen is not None else None
    ok = (
        (m.rows, m.cols) == (128, 64)
        and dim == 1
        and len(support(gen)) == 12
        and {x for x in gen if x != 0} <= {1, -1}
        and set(support(gen)) == {w for _, w in MONOMIALS}
        and sign in (1, -1)
        and elapsed < BUDGET_UNIQUENESS_S
    )
    record(7, "128x64 constraints, nullity 1, generator = +-(12-term table)", ok,
           f"dim={dim} sign={sign} t={elapsed:.3f}s")


def test_08_sine_product_law():
    rng = random.Random(SEED + 8)
    worst = 0.0
    for _ in range(100):
        theta = [rng.uniform(0, 2 * math.pi) for _ in range(4)]
        c, predicted = config_from_angles(theta)
        worst = max(worst, abs(det_s2_direct(c) - predicted))
    record(8, "sin(p1) sin(2 p2) sin(p3) law on 100 angle quadruples", worst <= SINE_TOL, f"max_err={worst:.2e}")


def _perp(rng, v: Vec2) -> Vec2:
    return Vec2(-v.beta, v.alpha).scale(random_rational(rng, nonzero=True))


def test_09_perpendicular_family():
    rng = random.Random(SEED + 9)
    failures = 0
    for _ in range(100):
        v1, v2, v3 = (random_vec(rng, nonzero=True) for _ in range(3))
        c = Configuration.from_pairs(
            {(1, 2): v1, (1, 3): v2, (1, 4): v3, (2, 3): _perp(rng, v3), (2, 4): _perp(rng, v2), (3, 4): _perp(rng, v1)}
        )
        if det_s2_direct(c) != 0 or det_s2_inner_product(c) != 0:
            failures += 1
    record(9, "perpendicular family vanishes (100 samples)", failures == 0, f"failures={failures}")


def _run_cli(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def test_10_cli_contract(capsys, tmp_path):
    problems = []
    for name in ("w_config", "v_config", "unit_square"):
        path = FIXTURES / f"{name}.json"
        for argv, gold in (
            (["eval", path], f"eval_{name}.txt"),
            (["eval", path, "--all-formulas"], f"eval_all_{name}.txt"),
            (["solve", path], f"solve_{name}.txt"),
        ):
            code, out = _run_cli(capsys, *argv)
            if code != 0 or out != (GOLDEN / gold).read_text(encoding="utf-8"):
                problems.append(gold)
    code, out = _run_cli(capsys, "uniqueness")
    if code != 0 or out != (GOLDEN / "uniqueness.txt").read_text(encoding="utf-8"):
        problems.append("uniqueness")
    if _run_cli(capsys, "eval", FIXTURES / "missing_key.json")[0] != 1:
        problems.append("missing key exit code")
    if _run_cli(capsys, "solve", FIXTURES / "float_config.json")[0] != 1:
        problems.append("float solve exit code")
    for name in ("unit_square", "v_config"):
        code, _ = _run_cli(capsys, "solve", FIXTURES / f"{name}.json", "--svg", tmp_path / f"{name}.svg")
        try:
            root = ET.parse(tmp_path / f"{name}-0.svg").getroot()
            ns = {"svg": SVG_NS}
            counts = (len(root.findall(".//svg:circle", ns)), len(root.findall(".//svg:line", ns)))
        except (OSError, ET.ParseError) as exc:
            counts = repr(exc)
        if code != 0 or counts != (4, 6):
            problems.append(f"svg {name}: {counts}")
    record(10, "CLI golden files, exit codes, SVG structure", not problems, f"problems={problems}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
