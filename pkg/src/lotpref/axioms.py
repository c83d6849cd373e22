"""Axiom falsifiers over finite lottery grids.

Every checker scans a deterministic grid for a counterexample and
returns an AxiomVerdict: Violated with a witness, or NoViolationFound
with the exhausted budget.  A non-finding is evidence at that budget,
never proof; the verdict says which budget it means.

Witness integrity is double-route: the scans run on an integer-encoded
copy of the grid (compiled kernels when available), and every hit is
then re-evaluated through the oracle's own exact Fraction path before
it is returned.  A witness object can always replay itself against the
oracle that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _kernels as kernels
from .geometry import affine_rank
from .grids import GridSpec, dyadic_alphas, enumerate_grid, rationals_between
from .lotteries import Lottery, embed, mix
from .oracles import ComparisonResult, PreferenceOracle

__all__ = [
    "DEFAULT_DEPTH",
    "Budget",
    "AxiomVerdict",
    "CycleWitness",
    "IndependenceWitness",
    "BetweennessWitness",
    "ConvexityWitness",
    "TranslationWitness",
    "LineOrderWitness",
    "MixtureWitness",
    "ArchimedeanWitness",
    "SolvabilityScanWitness",
    "SolveContractWitness",
    "OpennessWitness",
    "IPFound",
    "IPExhausted",
    "check_weak_order",
    "check_independence",
    "check_ip",
    "check_continuity",
    "check_convexity",
    "check_translation",
    "check_line_order",
    "CONTINUITY_KINDS",
]

# Dyadic refinement budget for the continuity probes.  Deep enough that
# a linear oracle's smallest grid margin dwarfs 2^-depth, so the probes
# cannot manufacture a false boundary at desk scale.
DEFAULT_DEPTH = 24

CONTINUITY_KINDS = ("grid-openness", "mixture", "archimedean", "solvability")

INDIFF = ComparisonResult.INDIFFERENT
BETTER = ComparisonResult.STRICTLY_BETTER


@dataclass(frozen=True)
class Budget:
    """What the scan exhausted: the grid, and where applicable the
    candidate-weight denominator bound and the dyadic probe depth."""

    grid: GridSpec
    candidate_bound: int | None = None
    depth: int | None = None


@dataclass(frozen=True)
class AxiomVerdict:
    axiom: str
    violated: bool
    budget: Budget
    witness: object | None = None
    found: "IPFound | None" = None
    route: str | None = None

    @property
    def no_violation_found(self) -> bool:
        return not self.violated


# ---- witnesses --------------------------------------------------------------


@dataclass(frozen=True)
class CycleWitness:
    """Transitivity failure: p >= q and q >= r but p < r."""

    kind = "weak-order"
    p: Lottery
    q: Lottery
    r: Lottery
    pq: ComparisonResult
    qr: ComparisonResult
    pr: ComparisonResult

    def replay(self, oracle: PreferenceOracle) -> bool:
        return (oracle.compare(self.p, self.q) is self.pq
                and oracle.compare(self.q, self.r) is self.qr
                and oracle.compare(self.p, self.r) is self.pr
                and self.pq.weakly_better
                and self.qr.weakly_better
                and not self.pr.weakly_better)


@dataclass(frozen=True)
class IndependenceWitness:
    """Common mixing with r at weight alpha changes how p ranks vs q."""

    kind = "independence"
    p: Lottery
    q: Lottery
    r: Lottery
    alpha: Fraction
    before: ComparisonResult
    after: ComparisonResult

    def replay(self, oracle: PreferenceOracle) -> bool:
        mp = mix(self.p, self.r, self.alpha)
        mq = mix(self.q, self.r, self.alpha)
        return (oracle.compare(self.p, self.q) is self.before
                and oracle.compare(mp, mq) is self.after
                and self.before is not self.after)


@dataclass(frozen=True)
class BetweennessWitness:
    """p >= q, yet their mixture escapes the preference interval."""

    kind = "betweenness"
    p: Lottery
    q: Lottery
    alpha: Fraction
    pq: ComparisonResult
    upper: ComparisonResult
    lower: ComparisonResult

    def replay(self, oracle: PreferenceOracle) -> bool:
        m = mix(self.p, self.q, self.alpha)
        return (oracle.compare(self.p, self.q) is self.pq
                and oracle.compare(self.p, m) is self.upper
                and oracle.compare(m, self.q) is self.lower
                and self.pq.weakly_better
                and not (self.upper.weakly_better and self.lower.weakly_better))


@dataclass(frozen=True)
class ConvexityWitness:
    """Two members of an indifference class mix to a non-member."""

    kind = "convexity"
    p: Lottery
    q1: Lottery
    q2: Lottery
    alpha: Fraction
    observed: ComparisonResult

    def replay(self, oracle: PreferenceOracle) -> bool:
        m = mix(self.q1, self.q2, self.alpha)
        return (oracle.compare(self.q1, self.p) is INDIFF
                and oracle.compare(self.q2, self.p) is INDIFF
                and oracle.compare(m, self.p) is self.observed
                and self.observed is not INDIFF)


@dataclass(frozen=True)
class TranslationWitness:
    """r ~ p, but shifting r by (q - p) leaves q's indifference class."""

    kind = "translation"
    p: Lottery
    q: Lottery
    r: Lottery
    translated: Lottery
    observed: ComparisonResult

    def replay(self, oracle: PreferenceOracle) -> bool:
        shifted = tuple(
            rw + qw - pw for rw, qw, pw in
            zip(self.r.weights, self.q.weights, self.p.weights))
        return (oracle.compare(self.r, self.p) is INDIFF
                and shifted == self.translated.weights
                and oracle.compare(self.translated, self.q) is self.observed
                and self.observed is not INDIFF)


_LINE_RELATIONS = {
    kernels.LINE_Q_BEATS_POINT: "q-vs-point",
    kernels.LINE_P_BEATS_POINT: "p-vs-point",
    kernels.LINE_POINT_BEATS_Q: "point-vs-q",
    kernels.LINE_POINT_BEATS_P: "point-vs-p",
}


@dataclass(frozen=True)
class LineOrderWitness:
    """A point on the line through p > q compares the wrong way.

    relation names which of the expected strict comparisons failed;
    every expectation in the case table is strictly-better, so observed
    is anything else.
    """

    kind = "line-order"
    p: Lottery
    q: Lottery
    t: Fraction
    point: Lottery
    relation: str
    observed: ComparisonResult

    def _pair(self):
        if self.relation == "q-vs-point":
            return (self.q, self.point)
        if self.relation == "p-vs-point":
            return (self.p, self.point)
        if self.relation == "point-vs-q":
            return (self.point, self.q)
        return (self.point, self.p)

    def replay(self, oracle: PreferenceOracle) -> bool:
        along = tuple(
            qw + self.t * (pw - qw)
            for pw, qw in zip(self.p.weights, self.q.weights))
        first, second = self._pair()
        return (oracle.compare(self.p, self.q) is BETTER
                and along == self.point.weights
                and oracle.compare(first, second) is self.observed
                and self.observed is not BETTER)


@dataclass(frozen=True)
class MixtureWitness:
    """The weak upper set {alpha : mix(p, r, alpha) >= q} excludes
    alpha_star although every dyadic probe on one side belongs to it."""

    kind = "mixture"
    p: Lottery
    q: Lottery
    r: Lottery
    alpha_star: Fraction
    side: int  # +1: probes above alpha_star; -1: below
    boundary: ComparisonResult
    depth: int

    def replay(self, oracle: PreferenceOracle) -> bool:
        at_star = oracle.compare(mix(self.p, self.r, self.alpha_star), self.q)
        if at_star is not self.boundary or at_star.weakly_better:
            return False
        checked = False
        step = Fraction(1)
        for _ in range(self.depth):
            step = step / 2
            alpha = self.alpha_star + self.side * step
            if not 0 <= alpha <= 1:
                continue
            if not oracle.compare(mix(self.p, self.r, alpha), self.q).weakly_better:
                return False
            checked = True
        return checked


@dataclass(frozen=True)
class ArchimedeanWitness:
    """p > q > r, but no probed interior weight works on one side."""

    kind = "archimedean"
    p: Lottery
    q: Lottery
    r: Lottery
    side: str  # "beta": no small weight keeps q above the mixture
    depth: int

    def replay(self, oracle: PreferenceOracle) -> bool:
        if oracle.compare(self.p, self.q) is not BETTER:
            return False
        if oracle.compare(self.q, self.r) is not BETTER:
            return False
        step = Fraction(1)
        for _ in range(self.depth):
            step = step / 2
            if self.side == "beta":
                if oracle.compare(self.q, mix(self.p, self.r, step)) is BETTER:
                    return False
            else:
                if oracle.compare(mix(self.p, self.r, 1 - step), self.q) is BETTER:
                    return False
        return True


@dataclass(frozen=True)
class SolvabilityScanWitness:
    """p >= q >= r, and no candidate weight up to the bound solves."""

    kind = "solvability"
    p: Lottery
    q: Lottery
    r: Lottery
    candidate_bound: int

    def replay(self, oracle: PreferenceOracle) -> bool:
        if not oracle.compare(self.p, self.q).weakly_better:
            return False
        if not oracle.compare(self.q, self.r).weakly_better:
            return False
        for alpha in rationals_between(Fraction(0), Fraction(1), self.candidate_bound):
            if oracle.compare(mix(self.p, self.r, alpha), self.q) is INDIFF:
                return False
        return True


@dataclass(frozen=True)
class SolveContractWitness:
    """The oracle's own solve() returned a weight that does not solve."""

    kind = "solvability"
    p: Lottery
    q: Lottery
    r: Lottery
    alpha: Fraction
    observed: ComparisonResult

    def replay(self, oracle: PreferenceOracle) -> bool:
        if oracle.solve(self.p, self.q, self.r) != self.alpha:
            return False
        result = oracle.compare(mix(self.p, self.r, self.alpha), self.q)
        return result is self.observed and result is not INDIFF


@dataclass(frozen=True)
class OpennessWitness:
    """q compares strictly against p, yet every dyadic step from q
    toward w (which sits strictly on the other side) stays on w's side:
    the strict set containing q is not open at q along this segment."""

    kind = "grid-openness"
    p: Lottery
    q: Lottery
    w: Lottery
    side: int
    depth: int

    def replay(self, oracle: PreferenceOracle) -> bool:
        if oracle.compare(self.q, self.p).sign != self.side or self.side == 0:
            return False
        if oracle.compare(self.w, self.p).sign != -self.side:
            return False
        step = Fraction(1)
        for _ in range(self.depth):
            step = step / 2
            probe = mix(self.w, self.q, step)
            if oracle.compare(probe, self.p).sign != -self.side:
                return False
        return True


@dataclass(frozen=True)
class IPFound:
    """A spanning indifferent set: n points of embedded affine rank n-1."""

    points: tuple[Lottery, ...]
    rank: int


@dataclass(frozen=True)
class IPExhausted:
    """The grid holds no spanning indifferent set; search evidence."""

    kind = "ip-exhausted"
    grid_size: int
    classes: int
    best_size: int

    def replay(self, oracle: PreferenceOracle) -> bool:
        return True  # nothing recorded beyond the exhausted search


# ---- shared plumbing --------------------------------------------------------


def _encoded(oracle: PreferenceOracle, grid: GridSpec):
    lots = enumerate_grid(grid)
    nums, den = kernels.encode_lotteries(lots)
    spec = kernels.encode_oracle(oracle)
    if spec is None:
        space = oracle.space

        def callback(pn, pd, qn, qd):
            p = Lottery(space, tuple(Fraction(a, pd) for a in pn))
            q = Lottery(space, tuple(Fraction(a, qd) for a in qn))
            return oracle.compare(p, q).sign

        spec = ("callback", (callback,))
    return lots, nums, den, spec


def _confirm(witness, oracle) -> object:
    if not witness.replay(oracle):
        raise RuntimeError(
            "scan backend and oracle disagree on a witness; "
            f"refusing to report it: {witness!r}")
    return witness


def _pairs(alphas) -> list[tuple[int, int]]:
    return [(a.numerator, a.denominator) for a in alphas]


# ---- checkers ---------------------------------------------------------------


def check_weak_order(oracle: PreferenceOracle, grid: GridSpec) -> AxiomVerdict:
    """Scan all grid triples for a transitivity failure.

    Completeness needs no scan: compare is total by contract.
    """
    lots, nums, den, spec = _encoded(oracle, grid)
    hit = kernels.scan_transitivity(spec, nums, den)
    budget = Budget(grid=grid)
    if hit is None:
        return AxiomVerdict("weak-order", False, budget)
    i, j, k = hit
    p, q, r = lots[i], lots[j], lots[k]
    witness = CycleWitness(
        p=p, q=q, r=r,
        pq=oracle.compare(p, q),
        qr=oracle.compare(q, r),
        pr=oracle.compare(p, r))
    return AxiomVerdict("weak-order", True, budget, witness=_confirm(witness, oracle))


def check_independence(oracle: PreferenceOracle, grid: GridSpec,
                       variant: str = "independence") -> AxiomVerdict:
    """Falsify mixture independence, or its betweenness weakening.

    independence: mixing p and q with a common r at any dyadic weight
    must not change their ranking.  betweenness: a mixture of p >= q
    must stay weakly between them.
    """
    lots, nums, den, spec = _encoded(oracle, grid)
    budget = Budget(grid=grid, candidate_bound=grid.denominator_bound)
    if variant == "independence":
        alphas = dyadic_alphas(grid.denominator_bound)
        hit = kernels.scan_independence(spec, nums, den, _pairs(alphas))
        if hit is None:
            return AxiomVerdict("independence", False, budget)
        i, j, k, ai = hit
        p, q, r, alpha = lots[i], lots[j], lots[k], alphas[ai]
        witness = IndependenceWitness(
            p=p, q=q, r=r, alpha=alpha,
            before=oracle.compare(p, q),
            after=oracle.compare(mix(p, r, alpha), mix(q, r, alpha)))
        return AxiomVerdict("independence", True, budget,
                            witness=_confirm(witness, oracle))
    if variant == "betweenness":
        alphas = dyadic_alphas(grid.denominator_bound, interior_only=True)
        hit = kernels.scan_betweenness(spec, nums, den, _pairs(alphas))
        if hit is None:
            return AxiomVerdict("betweenness", False, budget)
        i, j, ai = hit
        p, q, alpha = lots[i], lots[j], alphas[ai]
        m = mix(p, q, alpha)
        witness = BetweennessWitness(
            p=p, q=q, alpha=alpha,
            pq=oracle.compare(p, q),
            upper=oracle.compare(p, m),
            lower=oracle.compare(m, q))
        return AxiomVerdict("betweenness", True, budget,
                            witness=_confirm(witness, oracle))
    raise ValueError(f"unknown independence variant {variant!r}")


def check_ip(oracle: PreferenceOracle, grid: GridSpec) -> AxiomVerdict:
    """Search the grid for n mutually indifferent lotteries spanning a
    hyperplane (embedded affine rank n-1).

    Found means NoViolationFound carrying the points; an exhausted grid
    is reported as Violated in the falsifier sense.  Classes grow
    greedily in enumeration order; a found set is re-verified pairwise
    against the oracle, independently of the greedy bookkeeping.
    """
    lots = enumerate_grid(grid)
    n = grid.space.n
    budget = Budget(grid=grid)
    if n == 0:
        return AxiomVerdict("ip", False, budget, found=IPFound((), -1))

    classes: list[dict] = []
    best_size = 0
    for lot in lots:
        home = None
        for cls in classes:
            if oracle.compare(lot, cls["rep"]) is INDIFF:
                home = cls
                break
        if home is None:
            home = {"rep": lot, "span": [lot], "coords": [embed(lot).coords],
                    "rank": 0}
            classes.append(home)
        else:
            trial = home["coords"] + [embed(lot).coords]
            if affine_rank(trial) > home["rank"]:
                home["span"].append(lot)
                home["coords"] = trial
                home["rank"] += 1
        best_size = max(best_size, len(home["span"]))
        if len(home["span"]) == n and home["rank"] == n - 1:
            points = tuple(home["span"])
            pairwise = all(
                oracle.compare(points[a], points[b]) is INDIFF
                for a in range(n) for b in range(a + 1, n))
            if pairwise and affine_rank([embed(x).coords for x in points]) == n - 1:
                return AxiomVerdict(
                    "ip", False, budget, found=IPFound(points, n - 1))
            # An intransitive oracle can assemble a pseudo-class that
            # fails the honest re-check; keep scanning other classes.
    witness = IPExhausted(
        grid_size=len(lots), classes=len(classes), best_size=best_size)
    return AxiomVerdict("ip", True, budget, witness=witness)


def check_continuity(oracle: PreferenceOracle, kind: str, grid: GridSpec,
                     depth: int = DEFAULT_DEPTH) -> AxiomVerdict:
    """Falsify one member of the continuity family.

    grid-openness: a strict set with a segment of the opposite strict
    set converging into one of its points.  mixture: a boundary weight
    excluded from a weak upper set its neighbors belong to.
    archimedean: a strict sandwich with one side immune to every probed
    interior weight.  solvability: a weak sandwich nothing solves; for
    oracles with the solve capability this verifies the capability's
    answers instead of scanning (an exact weight need not sit on the
    candidate grid).
    """
    lots, nums, den, spec = _encoded(oracle, grid)
    d = grid.denominator_bound

    if kind == "grid-openness":
        budget = Budget(grid=grid, depth=depth)
        hit = kernels.scan_openness(spec, nums, den, depth)
        if hit is None:
            return AxiomVerdict(kind, False, budget)
        i, j, k = hit
        p, q, w = lots[i], lots[j], lots[k]
        witness = OpennessWitness(
            p=p, q=q, w=w, side=oracle.compare(q, p).sign, depth=depth)
        return AxiomVerdict(kind, True, budget, witness=_confirm(witness, oracle))

    if kind == "mixture":
        stars = rationals_between(Fraction(0), Fraction(1), 2 * d)
        budget = Budget(grid=grid, candidate_bound=2 * d, depth=depth)
        hit = kernels.scan_mixture(spec, nums, den, _pairs(stars), depth)
        if hit is None:
            return AxiomVerdict(kind, False, budget)
        i, j, k, si, side = hit
        p, q, r = lots[i], lots[j], lots[k]
        alpha_star = stars[si]
        witness = MixtureWitness(
            p=p, q=q, r=r, alpha_star=alpha_star, side=side,
            boundary=oracle.compare(mix(p, r, alpha_star), q), depth=depth)
        return AxiomVerdict(kind, True, budget, witness=_confirm(witness, oracle))

    if kind == "archimedean":
        budget = Budget(grid=grid, depth=depth)
        hit = kernels.scan_archimedean(spec, nums, den, depth)
        if hit is None:
            return AxiomVerdict(kind, False, budget)
        i, j, k, side_code = hit
        side = "beta" if side_code == kernels.ARCH_SIDE_BETA else "alpha"
        witness = ArchimedeanWitness(
            p=lots[i], q=lots[j], r=lots[k], side=side, depth=depth)
        return AxiomVerdict(kind, True, budget, witness=_confirm(witness, oracle))

    if kind == "solvability":
        if oracle.has_solve:
            budget = Budget(grid=grid)
            enc = kernels.encode_oracle(oracle)
            if enc is not None and enc[0] == "eu":
                hit = kernels.scan_solvability_solve(list(enc[1]), nums, den)
                if hit is None:
                    return AxiomVerdict(kind, False, budget, route="solve-contract")
                i, j, k, a, b = hit
                p, q, r = lots[i], lots[j], lots[k]
                alpha = Fraction(a, b)
            else:
                hit = None
                for i, p in enumerate(lots):
                    for j, q in enumerate(lots):
                        if not oracle.compare(p, q).weakly_better:
                            continue
                        for k, r in enumerate(lots):
                            if not oracle.compare(q, r).weakly_better:
                                continue
                            alpha = oracle.solve(p, q, r)
                            if oracle.compare(mix(p, r, alpha), q) is not INDIFF:
                                hit = (p, q, r, alpha)
                                break
                        if hit:
                            break
                    if hit:
                        break
                if hit is None:
                    return AxiomVerdict(kind, False, budget, route="solve-contract")
                p, q, r, alpha = hit
            witness = SolveContractWitness(
                p=p, q=q, r=r, alpha=alpha,
                observed=oracle.compare(mix(p, r, alpha), q))
            return AxiomVerdict(kind, True, budget, route="solve-contract",
                                witness=_confirm(witness, oracle))
        alphas = rationals_between(Fraction(0), Fraction(1), d)
        budget = Budget(grid=grid, candidate_bound=d)
        hit = kernels.scan_solvability_scan(spec, nums, den, _pairs(alphas))
        if hit is None:
            return AxiomVerdict(kind, False, budget, route="alpha-scan")
        i, j, k = hit
        witness = SolvabilityScanWitness(
            p=lots[i], q=lots[j], r=lots[k], candidate_bound=d)
        return AxiomVerdict(kind, True, budget, route="alpha-scan",
                            witness=_confirm(witness, oracle))

    raise ValueError(f"unknown continuity kind {kind!r}; "
                     f"expected one of {CONTINUITY_KINDS}")


def check_convexity(oracle: PreferenceOracle, grid: GridSpec) -> AxiomVerdict:
    """Indifference classes must be closed under mixing."""
    lots, nums, den, spec = _encoded(oracle, grid)
    d = grid.denominator_bound
    alphas = rationals_between(Fraction(0), Fraction(1), d)
    budget = Budget(grid=grid, candidate_bound=d)
    hit = kernels.scan_convexity(spec, nums, den, _pairs(alphas))
    if hit is None:
        return AxiomVerdict("convexity", False, budget)
    i, j, k, ai = hit
    p, q1, q2, alpha = lots[i], lots[j], lots[k], alphas[ai]
    witness = ConvexityWitness(
        p=p, q1=q1, q2=q2, alpha=alpha,
        observed=oracle.compare(mix(q1, q2, alpha), p))
    return AxiomVerdict("convexity", True, budget,
                        witness=_confirm(witness, oracle))


def check_translation(oracle: PreferenceOracle, grid: GridSpec) -> AxiomVerdict:
    """Indifference must survive translation: r ~ p implies
    r + (q - p) ~ q whenever the shift stays inside the simplex."""
    lots, nums, den, spec = _encoded(oracle, grid)
    budget = Budget(grid=grid)
    hit = kernels.scan_translation(spec, nums, den)
    if hit is None:
        return AxiomVerdict("translation", False, budget)
    i, j, k = hit
    p, q, r = lots[i], lots[j], lots[k]
    translated = Lottery(p.space, tuple(
        rw + qw - pw for rw, qw, pw in zip(r.weights, q.weights, p.weights)))
    witness = TranslationWitness(
        p=p, q=q, r=r, translated=translated,
        observed=oracle.compare(translated, q))
    return AxiomVerdict("translation", True, budget,
                        witness=_confirm(witness, oracle))


def check_line_order(oracle: PreferenceOracle, grid: GridSpec) -> AxiomVerdict:
    """For p > q, points along their line must rank by the case table:
    behind q they lose to q, between they sit strictly between, and
    beyond p they beat p."""
    lots, nums, den, spec = _encoded(oracle, grid)
    d = grid.denominator_bound
    budget = Budget(grid=grid, candidate_bound=d)
    hit = kernels.scan_line_order(spec, nums, den, d)
    if hit is None:
        return AxiomVerdict("line-order", False, budget)
    i, j, a, b, rel_code = hit
    p, q = lots[i], lots[j]
    t = Fraction(a, b)
    point = Lottery(p.space, tuple(
        qw + t * (pw - qw) for pw, qw in zip(p.weights, q.weights)))
    relation = _LINE_RELATIONS[rel_code]
    witness = LineOrderWitness(p=p, q=q, t=t, point=point, relation=relation,
                               observed=_observe_line(oracle, p, q, point, relation))
    return AxiomVerdict("line-order", True, budget,
                        witness=_confirm(witness, oracle))


def _observe_line(oracle, p, q, point, relation) -> ComparisonResult:
    if relation == "q-vs-point":
        return oracle.compare(q, point)
    if relation == "p-vs-point":
        return oracle.compare(p, point)
    if relation == "point-vs-q":
        return oracle.compare(point, q)
    return oracle.compare(point, p)
