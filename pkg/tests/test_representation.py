import dataclasses
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lotpref.errors import (
    EmptyInput,
    InconsistentStrictPair,
    NoSolveCapability,
    NotInAffineHull,
    PreconditionViolated,
    RankDeficient,
    SpaceMismatch,
    UnorientedRepresentation,
    WrongCount,
)
from lotpref.lotteries import (
    OutcomeSpace,
    degenerate,
    embed,
    make_lottery,
    mix,
    uniform,
)
from lotpref.oracles import (
    ComparisonResult,
    ExpectedUtilityOracle,
    LexicographicOracle,
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
SPACE = OutcomeSpace.of_size(3)
U012 = UtilityFunction.of(SPACE, [0, 1, 2])
EU = ExpectedUtilityOracle(U012)

# Two lotteries with expected payoff 1 under u = (0, 1, 2); they span
# the indifference hyperplane through the uniform lottery.
P1 = uniform(SPACE)
P2 = make_lottery(SPACE, ["5/12", "1/6", "5/12"])


def lot(*weights):
    return make_lottery(SPACE, list(weights))


# ---- elicit ----------------------------------------------------------------


def test_elicit_recovers_utility():
    data = ElicitationInput(
        indifferent=(P1, P2),
        strict=(degenerate(SPACE, 2), degenerate(SPACE, 0)),
    )
    rep = elicit(data)
    assert rep.utility.values == (0, 1, 2)
    assert rep.orientation == 1
    assert rep.oriented
    assert rep.hyperplane.normal == (1, 2)


def test_elicit_flipped_strict_pair():
    data = ElicitationInput(
        indifferent=(P1, P2),
        strict=(degenerate(SPACE, 0), degenerate(SPACE, 2)),
    )
    rep = elicit(data)
    assert rep.utility.values == (0, -1, -2)
    assert rep.orientation == -1


def test_elicit_without_strict_pair_is_unoriented():
    rep = elicit(ElicitationInput(indifferent=(P1, P2)))
    assert not rep.oriented
    assert rep.orientation == 1
    with pytest.raises(UnorientedRepresentation):
        classify(rep, uniform(SPACE), degenerate(SPACE, 2))


def test_elicit_rejects_strict_endpoint_on_plane():
    data = ElicitationInput(
        indifferent=(P1, P2),
        strict=(lot("1/2", 0, "1/2"), degenerate(SPACE, 0)),
    )
    with pytest.raises(InconsistentStrictPair):
        elicit(data)


def test_elicit_rejects_equal_offsets():
    # Both endpoints have expected payoff 3/2: no direction separates them.
    data = ElicitationInput(
        indifferent=(P1, P2),
        strict=(lot(0, "1/2", "1/2"), lot("1/4", 0, "3/4")),
    )
    with pytest.raises(InconsistentStrictPair):
        elicit(data)


def test_elicit_count_and_rank_checks():
    with pytest.raises(WrongCount):
        elicit(ElicitationInput(indifferent=(P1, P2, lot("1/2", 0, "1/2"))))
    with pytest.raises(RankDeficient):
        elicit(ElicitationInput(indifferent=(P1, P1)))
    one = OutcomeSpace.of_size(1)
    with pytest.raises(EmptyInput):
        elicit(ElicitationInput(indifferent=(uniform(one),)))


def test_elicitation_input_validation():
    with pytest.raises(EmptyInput):
        ElicitationInput(indifferent=())
    other = uniform(OutcomeSpace.of_size(4))
    with pytest.raises(SpaceMismatch):
        ElicitationInput(indifferent=(P1, other))
    with pytest.raises(SpaceMismatch):
        ElicitationInput(indifferent=(P1, P2), strict=(other, other))


# ---- classify ---------------------------------------------------------------


def test_classify_matches_oracle():
    rep = elicit(ElicitationInput(
        indifferent=(P1, P2),
        strict=(degenerate(SPACE, 2), degenerate(SPACE, 0)),
    ))
    ref = uniform(SPACE)
    assert classify(rep, ref, degenerate(SPACE, 2)) is ComparisonResult.STRICTLY_BETTER
    assert classify(rep, ref, degenerate(SPACE, 0)) is ComparisonResult.STRICTLY_WORSE
    assert classify(rep, ref, lot("1/2", 0, "1/2")) is ComparisonResult.INDIFFERENT
    with pytest.raises(SpaceMismatch):
        classify(rep, ref, uniform(OutcomeSpace.of_size(2)))


# ---- generation -------------------------------------------------------------


def test_generate_frozen_construction():
    points, construction = generate_indifferent_points(U012)
    assert points == (P1, P2)
    assert construction.matrix == ((0, 1, 2), (1, 1, 1))
    assert construction.mean_utility == 1
    assert construction.base == P1
    assert construction.basis == ((1, -2, 1),)
    assert construction.step == F(1, 12)


def test_generate_points_satisfy_contract():
    points, _ = generate_indifferent_points(U012)
    assert len(points) == SPACE.n
    for a in points:
        for b in points:
            assert EU.compare(a, b) is ComparisonResult.INDIFFERENT


def test_generate_constant_utility():
    # A constant payoff has a bigger kernel; only the first n - 1
    # directions are walked, so the count stays at n.
    points, construction = generate_indifferent_points(
        UtilityFunction.of(SPACE, [5, 5, 5]))
    assert len(points) == 2
    assert construction.basis == ((-1, 1, 0),)
    assert points[1].weights == (F(1, 6), F(1, 2), F(1, 3))


def test_generate_two_outcomes():
    two = OutcomeSpace.of_size(2)
    points, construction = generate_indifferent_points(
        UtilityFunction.of(two, [0, 1]))
    assert points == (uniform(two),)
    assert construction.basis == ()
    assert construction.step == 0


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=6))
def test_generate_then_elicit_round_trip(values):
    space = OutcomeSpace.of_size(len(values))
    u = UtilityFunction.of(space, values)
    points, _ = generate_indifferent_points(u)
    assert len(points) == space.n
    oracle = ExpectedUtilityOracle(u)
    for a in points:
        for b in points:
            assert oracle.compare(a, b) is ComparisonResult.INDIFFERENT
    if len(set(values)) == 1:
        return  # a constant payoff has no strict pair to orient with
    best = max(range(len(values)), key=lambda i: values[i])
    worst = min(range(len(values)), key=lambda i: values[i])
    rep = elicit(ElicitationInput(
        indifferent=points,
        strict=(degenerate(space, best), degenerate(space, worst)),
    ))
    # The elicited utility must be the original up to a positive affine
    # map: differences from outcome 0 stay proportional, same sign.
    v = rep.utility.values
    shifted = [x - values[0] for x in values]
    for i in range(len(values)):
        for j in range(len(values)):
            assert v[i] * shifted[j] == v[j] * shifted[i]
    lead = next((i for i in range(len(values)) if shifted[i] != 0))
    assert (v[lead] > 0) == (shifted[lead] > 0)


# ---- construction via solvability -------------------------------------------


def test_construct_ip_frozen():
    points = construct_ip_via_solvability(
        EU, degenerate(SPACE, 2), lot("1/2", 0, "1/2"), degenerate(SPACE, 0))
    assert points == (lot("1/2", 0, "1/2"), degenerate(SPACE, 1))


def test_construct_ip_off_segment_anchor():
    # q is not on [p, r]; the anchor comes from one solve call.
    points = construct_ip_via_solvability(
        EU, degenerate(SPACE, 2), uniform(SPACE), degenerate(SPACE, 0))
    assert points[0] == lot("1/2", 0, "1/2")
    assert len(points) == 2


def test_construct_ip_contract():
    points = construct_ip_via_solvability(
        EU, degenerate(SPACE, 2), uniform(SPACE), degenerate(SPACE, 0))
    embedded = [embed(x).coords for x in points]
    for a in points:
        for b in points:
            assert EU.compare(a, b) is ComparisonResult.INDIFFERENT
    for endpoint in (degenerate(SPACE, 2), degenerate(SPACE, 0)):
        with pytest.raises(NotInAffineHull):
            from lotpref.geometry import affine_coefficients
            affine_coefficients(embed(endpoint).coords, embedded)


def test_construct_ip_rejections():
    lex = LexicographicOracle(SPACE)
    with pytest.raises(NoSolveCapability):
        construct_ip_via_solvability(
            lex, degenerate(SPACE, 0), uniform(SPACE), degenerate(SPACE, 2))
    with pytest.raises(PreconditionViolated):
        construct_ip_via_solvability(
            EU, degenerate(SPACE, 0), uniform(SPACE), degenerate(SPACE, 2))
    with pytest.raises(PreconditionViolated):
        construct_ip_via_solvability(
            EU, degenerate(SPACE, 2), degenerate(SPACE, 0), uniform(SPACE))
    with pytest.raises(SpaceMismatch):
        construct_ip_via_solvability(
            EU, degenerate(SPACE, 2), uniform(OutcomeSpace.of_size(4)),
            degenerate(SPACE, 0))


# ---- certificates ------------------------------------------------------------


def test_certificate_convex_branch():
    target = mix(P1, P2, F(1, 2))
    cert = indifference_certificate(target, (P1, P2))
    assert cert.branch == "convex"
    assert cert.coefficients == (F(1, 2), F(1, 2))
    assert len(cert.steps) == 1
    assert cert.steps[0].result == target
    replay = replay_certificate(cert, EU)
    assert replay.ok
    assert replay.failures() == ()


def test_certificate_trivial_convex():
    cert = indifference_certificate(P1, (P1, P2))
    assert cert.branch == "convex"
    assert cert.coefficients == (1, 0)
    assert cert.steps == ()
    assert replay_certificate(cert, EU).ok


def test_certificate_reduction_branch_frozen():
    target = lot("1/2", 0, "1/2")
    cert = indifference_certificate(target, (P1, P2))
    assert cert.branch == "reduction"
    assert cert.coefficients == (-1, 2)
    assert cert.k_star == 0
    assert cert.lambda_star == 1
    assert cert.alpha_star == F(2, 3)
    assert cert.mean.weights == (F(3, 8), F(1, 4), F(3, 8))
    assert cert.reduced.weights == (F(5, 12), F(1, 6), F(5, 12))
    assert cert.reduced_coefficients == (0, 1)
    assert cert.ia_rhs.weights == (F(4, 9), F(1, 9), F(4, 9))
    replay = replay_certificate(cert, EU)
    assert replay.ok


def test_certificate_tampering_is_caught():
    target = lot("1/2", 0, "1/2")
    cert = indifference_certificate(target, (P1, P2))
    bad_alpha = dataclasses.replace(cert, alpha_star=F(1, 3))
    replay = replay_certificate(bad_alpha, EU)
    assert not replay.ok
    assert any("pullback" in f for f in replay.failures())
    bad_coeffs = dataclasses.replace(cert, coefficients=(F(0), F(1)))
    assert not replay_certificate(bad_coeffs, EU).ok


def test_certificate_wrong_oracle_fails_replay():
    # The arithmetic still checks out, but the class is not indifferent
    # under a different ranking.
    target = mix(P1, P2, F(1, 2))
    cert = indifference_certificate(target, (P1, P2))
    lex = LexicographicOracle(SPACE)
    replay = replay_certificate(cert, lex)
    assert not replay.ok
    assert "points pairwise indifferent" in replay.failures()


def test_certificate_rejections():
    with pytest.raises(EmptyInput):
        indifference_certificate(P1, ())
    with pytest.raises(SpaceMismatch):
        indifference_certificate(uniform(OutcomeSpace.of_size(4)), (P1, P2))
    with pytest.raises(NotInAffineHull):
        indifference_certificate(degenerate(SPACE, 2), (P1, P2))


@given(st.integers(-4, 2))
def test_certificate_sound_along_the_level_line(c):
    # Points of expected payoff 1 form the segment (z, 1-2z, z); sliding
    # the coefficient on P2 across [-4, 2] stays inside the simplex and
    # exercises both branches.
    z = F(1, 3) + F(c, 12)
    target = lot(z, 1 - 2 * z, z)
    cert = indifference_certificate(target, (P1, P2))
    assert cert.branch == ("convex" if 0 <= c <= 1 else "reduction")
    assert replay_certificate(cert, EU).ok
