"""Acceptance gate: seven end-to-end criteria, one verdict line each.

Each test prints its PASS/FAIL line outside pytest's capture so the
verdicts are visible in any run.  Randomized criteria use fixed seeds;
timed criteria assert their wall-clock budget.
"""

import random
import time
from fractions import Fraction
from math import gcd

import pytest

from lotpref.axioms import (
    check_continuity,
    check_convexity,
    check_ip,
    check_line_order,
    check_translation,
)
from lotpref.errors import (
    NotInAffineHull,
    RankDeficient,
    UnorientedRepresentation,
)
from lotpref.geometry import affine_coefficients, affine_rank
from lotpref.grids import GridSpec, enumerate_grid, fixed_denominator_lattice
from lotpref.lotteries import OutcomeSpace, degenerate, embed, make_lottery, uniform
from lotpref.oracles import (
    ComparisonResult,
    ExpectedUtilityOracle,
    UtilityFunction,
)
from lotpref.representation import (
    ElicitationInput,
    classify,
    construct_ip_via_solvability,
    elicit,
    generate_indifferent_points,
    indifference_certificate,
    replay_certificate,
)

F = Fraction
INDIFF = ComparisonResult.INDIFFERENT

SPACE = OutcomeSpace.of_size(3)
U012 = UtilityFunction.of(SPACE, [0, 1, 2])
EU = ExpectedUtilityOracle(U012)
FIXTURE_POINTS = (
    uniform(SPACE),
    make_lottery(SPACE, ["5/12", "1/6", "5/12"]),
)
FIXTURE_REP = elicit(ElicitationInput(
    indifferent=FIXTURE_POINTS,
    strict=(degenerate(SPACE, 2), degenerate(SPACE, 0)),
))


def _verdict(capsys, label, check):
    try:
        check()
    except BaseException:
        with capsys.disabled():
            print(f"{label}: FAIL")
        raise
    with capsys.disabled():
        print(f"{label}: PASS")


def _gauge(values):
    """The canonical form elicit pins: u(x0) = 0, coprime integers."""
    shifted = [v - values[0] for v in values]
    g = 0
    for s in shifted:
        g = gcd(g, abs(s))
    return tuple(F(s // g) for s in shifted)


def _random_utility(rng, size):
    while True:
        values = [rng.randint(-9, 9) for _ in range(size)]
        if len(set(values)) > 1:
            return values


def test_criterion_1_round_trip_exactness(capsys):
    def check():
        rng = random.Random(1201)
        start = time.perf_counter()
        for _ in range(100):
            n = rng.randint(1, 6)
            values = _random_utility(rng, n + 1)
            space = OutcomeSpace.of_size(n + 1)
            u = UtilityFunction.of(space, values)
            points, _ = generate_indifferent_points(u)
            best = max(range(len(values)), key=lambda i: values[i])
            worst = min(range(len(values)), key=lambda i: values[i])
            rep = elicit(ElicitationInput(
                indifferent=points,
                strict=(degenerate(space, best), degenerate(space, worst)),
            ))
            assert rep.oriented
            assert rep.utility.values == _gauge(values)
        assert time.perf_counter() - start < 1.0

    _verdict(capsys, "criterion 1 round-trip exactness", check)


def test_criterion_2_grid_equivalence(capsys):
    def check():
        start = time.perf_counter()
        lattice = fixed_denominator_lattice(SPACE, 12)
        assert len(lattice) == 91
        pairs = 0
        for i, a in enumerate(lattice):
            for b in lattice[i + 1:]:
                pairs += 1
                forward = classify(FIXTURE_REP, a, b)
                backward = classify(FIXTURE_REP, b, a)
                assert forward is EU.compare(b, a)
                assert backward is EU.compare(a, b)
        assert pairs == 4095
        assert time.perf_counter() - start < 1.0

    _verdict(capsys, "criterion 2 grid equivalence", check)


def test_criterion_3_indifference_geometry(capsys):
    def check():
        for bound in range(1, 9):
            grid = GridSpec(SPACE, bound)
            for checker in (check_convexity, check_translation, check_line_order):
                verdict = checker(EU, grid)
                assert verdict.no_violation_found, (checker.__name__, bound)
                assert verdict.witness is None

    _verdict(capsys, "criterion 3 indifference geometry", check)


def test_criterion_4_certificate_coverage(capsys):
    def check():
        hull = [embed(pt).coords for pt in FIXTURE_POINTS]
        targets = []
        for g in enumerate_grid(GridSpec(SPACE, 12)):
            try:
                affine_coefficients(embed(g).coords, hull)
            except NotInAffineHull:
                continue
            targets.append(g)
        assert len(targets) == 24
        branches = set()
        for target in targets:
            cert = indifference_certificate(target, FIXTURE_POINTS)
            branches.add(cert.branch)
            assert replay_certificate(cert, EU).ok, target
        assert branches == {"convex", "reduction"}
        special = indifference_certificate(
            make_lottery(SPACE, ["1/2", "0", "1/2"]), FIXTURE_POINTS)
        assert special.branch == "reduction"
        assert special.coefficients == (-1, 2)
        assert special.alpha_star == F(2, 3)

    _verdict(capsys, "criterion 4 certificate coverage", check)


def test_criterion_5_example_reproduction(capsys):
    def check():
        from lotpref.oracles import HybridExampleOracle

        hybrid = HybridExampleOracle(SPACE)
        found = check_ip(hybrid, GridSpec(SPACE, 2))
        assert found.no_violation_found
        assert found.found.points == (
            make_lottery(SPACE, ["1/2", "0", "1/2"]),
            make_lottery(SPACE, ["1/2", "1/2", "0"]),
        )
        grid8 = GridSpec(SPACE, 8)
        for kind in ("mixture", "archimedean", "solvability", "grid-openness"):
            verdict = check_continuity(hybrid, kind, grid8)
            assert verdict.violated, kind
            assert verdict.witness is not None
            assert verdict.witness.replay(hybrid), kind
        from lotpref.axioms import check_independence

        grid6 = GridSpec(SPACE, 6)
        assert check_independence(
            hybrid, grid6, variant="betweenness").no_violation_found
        assert check_independence(hybrid, grid6).violated

    _verdict(capsys, "criterion 5 example reproduction", check)


def test_criterion_6_construction(capsys):
    def check():
        rng = random.Random(4817)
        start = time.perf_counter()
        for _ in range(50):
            n = rng.randint(1, 5)
            size = n + 1
            values = _random_utility(rng, size)
            space = OutcomeSpace.of_size(size)
            oracle = ExpectedUtilityOracle(UtilityFunction.of(space, values))
            p = degenerate(space, max(range(size), key=lambda i: values[i]))
            r = degenerate(space, min(range(size), key=lambda i: values[i]))
            q = uniform(space)
            points = construct_ip_via_solvability(oracle, p, q, r)
            assert len(points) == n
            embedded = [embed(x).coords for x in points]
            assert affine_rank(embedded) == n - 1
            for a in range(n):
                for b in range(a + 1, n):
                    assert oracle.compare(points[a], points[b]) is INDIFF
            for endpoint in (p, r):
                with pytest.raises(NotInAffineHull):
                    affine_coefficients(embed(endpoint).coords, embedded)
        assert time.perf_counter() - start < 5.0

    _verdict(capsys, "criterion 6 construction via solvability", check)


def test_criterion_7_degenerate_handling(capsys):
    def check():
        flat = UtilityFunction.of(SPACE, [7, 7, 7])
        points, _ = generate_indifferent_points(flat)
        assert len(points) == SPACE.n
        oracle = ExpectedUtilityOracle(flat)
        for a in points:
            for b in points:
                assert oracle.compare(a, b) is INDIFF
        with pytest.raises(RankDeficient):
            elicit(ElicitationInput(indifferent=(uniform(SPACE), uniform(SPACE))))
        rep = elicit(ElicitationInput(indifferent=FIXTURE_POINTS))
        assert not rep.oriented
        with pytest.raises(UnorientedRepresentation):
            classify(rep, uniform(SPACE), degenerate(SPACE, 2))

    _verdict(capsys, "criterion 7 degenerate handling", check)
