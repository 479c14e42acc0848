"""Randomized experiments against the structural claims of the package.

Samplers produce exact rational ideals inside a prescribed lex basin and
re-check their own output; experiment runners aggregate seeded trials
into reports.  Identical seeds reproduce identical reports, including
the exact failure strings.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .groebner import (
    Ideal,
    intersect_comaximal,
    monomial_ideal,
    normal_form,
    reduced_groebner_basis,
    staircase_of,
    tall_point_ideal,
    torus_limit,
    vanishing_ideal,
)
from .orders import et_row_partition, leq_et, leq_punc, build_poset
from .poly import Polynomial, X1, X2
from .staircase import StandardSet, enumerate_staircases, sum1, sum2


class SamplingError(RuntimeError):
    """A sampler ran out of rejection budget."""


@dataclass(frozen=True)
class BasinSampleSpec:
    """What to sample: a target staircase plus a support constraint.

    support_constraint is 'origin', 'x1_axis', 'horizontal_line' (with
    `line` set to the rational x2 level) or 'free'."""

    target: StandardSet
    support_constraint: str = "origin"
    line: object = None
    seed: int = 0
    max_rejections: int = 50

    def __post_init__(self):
        if self.support_constraint not in ("origin", "x1_axis", "horizontal_line", "free"):
            raise ValueError(f"unknown support constraint {self.support_constraint!r}")
        if (self.line is not None) != (self.support_constraint == "horizontal_line"):
            raise ValueError("`line` is set exactly for horizontal_line support")
        if self.max_rejections < 1:
            raise ValueError("max_rejections must be at least 1")
        if self.target.cardinality == 0:
            raise ValueError("target must be nonempty")


def _rand_fraction(rng, num_bound=20, den_bound=10, nonzero=False):
    while True:
        f = Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))
        if f or not nonzero:
            return f


def _distinct_fractions(rng, count, num_bound=20, den_bound=10):
    out = []
    guard = 0
    while len(out) < count:
        f = _rand_fraction(rng, num_bound, den_bound)
        if f not in out:
            out.append(f)
        guard += 1
        if guard > 100 * count + 100:
            raise SamplingError("could not draw distinct rationals")
    return out


def _rand_shift_poly(rng, variable, max_degree, allow_constant):
    # a small polynomial in the given variable, zero constant term unless
    # allowed; at least one nonzero coefficient
    lo = 0 if allow_constant else 1
    degree = rng.randint(lo, max(lo, max_degree))
    coeffs = {}
    for _ in range(rng.randint(1, 2)):
        b = rng.randint(lo, max(lo, degree))
        coeffs[b] = _rand_fraction(rng, nonzero=True)
    exp = (lambda b: (0, b)) if variable == 2 else (lambda b: (b, 0))
    return Polynomial({exp(b): c for b, c in coeffs.items()})


def _substituted(elements, image1, image2):
    return Ideal(tuple(g.compose(image1, image2) for g in elements))


def _origin_sample(target, rng, max_rejections):
    # walk through the basin with origin-preserving triangular substitutions
    elements = reduced_groebner_basis(monomial_ideal(target)).elements
    rejections = 0
    wanted = rng.randint(2, 4)
    done = 0
    h = max(2, target.height)
    while done < wanted:
        if rng.random() < 0.6:
            image1 = X1 + _rand_shift_poly(rng, 2, min(h, 3), False)
            image2 = X2
        else:
            image1 = X1
            image2 = X2 + _rand_shift_poly(rng, 1, 2, False)
        candidate = _substituted(elements, image1, image2)
        gb = reduced_groebner_basis(candidate)
        if gb.staircase == target:
            elements = gb.elements
            done += 1
        else:
            rejections += 1
            if rejections > max_rejections:
                raise SamplingError(
                    f"no basin sample for cols{target.cols()} within budget"
                )
    return elements


def _translated(elements, dx, dy):
    image1 = X1 - Polynomial.constant(dx) if dx else X1
    image2 = X2 - Polynomial.constant(dy) if dy else X2
    if dx or dy:
        return _substituted(elements, image1, image2).generators
    return elements


def _axis_sample(target, rng, max_rejections):
    # several tall or fat points at distinct abscissas on the x1-axis
    cols = list(target.cols())
    rejections = 0
    while True:
        rng.shuffle(cols)
        k = rng.randint(1, len(cols))
        cuts = sorted(rng.sample(range(1, len(cols)), k - 1)) if k > 1 else []
        groups = [
            cols[lo:hi]
            for lo, hi in zip([0] + cuts, cuts + [len(cols)])
        ]
        abscissas = _distinct_fractions(rng, len(groups))
        factors = []
        for group, z in zip(groups, abscissas):
            part = StandardSet.from_columns(group)
            elements = _origin_sample(part, rng, max_rejections)
            factors.append(Ideal(_translated(elements, z, 0)))
        if len(factors) == 1:
            ideal = factors[0]
        else:
            ideal = intersect_comaximal(factors)
        gb = reduced_groebner_basis(ideal)
        if gb.staircase == target:
            return gb.elements
        rejections += 1
        if rejections > max_rejections:
            raise SamplingError(
                f"no axis sample for cols{target.cols()} within budget"
            )


def _free_sample(target, rng, max_rejections):
    # the etale configuration: |row_i| points on a private horizontal line
    rows = target.rows()
    rejections = 0
    while True:
        lines = _distinct_fractions(rng, len(rows))
        points = []
        for width, lam in zip(rows, lines):
            for x in _distinct_fractions(rng, width):
                points.append((x, lam))
        ideal = vanishing_ideal(points)
        gb = reduced_groebner_basis(ideal)
        if gb.staircase == target:
            return gb.elements
        rejections += 1
        if rejections > max_rejections:
            raise SamplingError(
                f"no point configuration for cols{target.cols()} within budget"
            )


def _supports_origin(gb_elements, n):
    data = list(gb_elements)
    for i in range(n + 1):
        if not normal_form(Polynomial.monomial((i, n - i)), data).is_zero():
            return False
    return True


def _supports_line(gb_elements, n, level):
    shifted = (X2 - Polynomial.constant(level)) ** n
    return normal_form(shifted, list(gb_elements)).is_zero()


def sample_basin_ideal(spec: BasinSampleSpec) -> Ideal:
    """Draw an exact ideal whose staircase is spec.target and whose support
    satisfies the constraint.  Raises SamplingError when the rejection
    budget runs out."""
    rng = random.Random(f"sample:{spec.seed}")
    target = spec.target
    if spec.support_constraint == "origin":
        elements = _origin_sample(target, rng, spec.max_rejections)
    elif spec.support_constraint == "x1_axis":
        elements = _axis_sample(target, rng, spec.max_rejections)
    elif spec.support_constraint == "horizontal_line":
        elements = _axis_sample(target, rng, spec.max_rejections)
        elements = _translated(elements, 0, Fraction(spec.line))
        elements = reduced_groebner_basis(Ideal(elements)).elements
    else:
        elements = _free_sample(target, rng, spec.max_rejections)
    ideal = Ideal(elements)
    gb = reduced_groebner_basis(ideal)
    n = target.cardinality
    if gb.staircase != target:
        raise SamplingError("sampler output fails its own staircase recheck")
    if spec.support_constraint == "origin" and not _supports_origin(gb.elements, n):
        raise SamplingError("sampler output fails the origin support recheck")
    if spec.support_constraint == "x1_axis" and not _supports_line(gb.elements, n, 0):
        raise SamplingError("sampler output fails the axis support recheck")
    if spec.support_constraint == "horizontal_line" and not _supports_line(
        gb.elements, n, Fraction(spec.line)
    ):
        raise SamplingError("sampler output fails the line support recheck")
    return ideal


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class ExperimentReport:
    """Outcome of a seeded experiment suite."""

    experiment_name: str
    seed: int
    cases_run: int
    cases_passed: int
    failures: tuple

    @property
    def passed(self) -> bool:
        return self.cases_passed == self.cases_run

    def to_json(self) -> str:
        return json.dumps(
            {
                "experiment_name": self.experiment_name,
                "seed": self.seed,
                "cases_run": self.cases_run,
                "cases_passed": self.cases_passed,
                "failures": [
                    {"case": c, "expected": e, "observed": o}
                    for c, e, o in self.failures
                ],
            },
            sort_keys=True,
        )

    def to_text(self) -> str:
        lines = [
            f"experiment: {self.experiment_name}",
            f"seed:       {self.seed}",
            f"cases:      {self.cases_run} run, {self.cases_passed} passed, "
            f"{self.cases_run - self.cases_passed} failed",
        ]
        if self.failures:
            width_c = max(len(c) for c, _, _ in self.failures)
            width_e = max(len(e) for _, e, _ in self.failures)
            for c, e, o in self.failures:
                lines.append(
                    f"  FAIL {c.ljust(width_c)}  expected {e.ljust(width_e)}"
                    f"  observed {o}"
                )
        return "\n".join(lines) + "\n"


class _Recorder:
    def __init__(self, experiment, seed):
        self.experiment_name = experiment
        self.seed = seed
        self.run = 0
        self.passed = 0
        self.failures = []

    def record(self, case, ok, expected, observed):
        self.run += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append((case, expected, observed))

    def sampling_failure(self, case, exc):
        self.run += 1
        self.failures.append((case, "a sample", f"SamplingError: {exc}"))

    def report(self) -> ExperimentReport:
        return ExperimentReport(
            self.experiment_name,
            self.seed,
            self.run,
            self.passed,
            tuple(self.failures),
        )


def _trial_rng(experiment, seed, trial):
    return random.Random(f"{experiment}:{seed}:{trial}")


def _label(s: StandardSet) -> str:
    return "cols(" + ",".join(str(h) for h in s.cols()) + ")"


def _random_staircase(rng, n):
    return rng.choice(enumerate_staircases(n))


def _split_total(rng, n, max_parts):
    k = rng.randint(2, min(n, max_parts))
    cuts = sorted(rng.sample(range(1, n), k - 1))
    return [hi - lo for lo, hi in zip([0] + cuts, cuts + [n])]


# ---------------------------------------------------------------------------
# experiment suites


def run_prop1(trials: int, n_max: int = 8, seed: int = 0) -> ExperimentReport:
    """Intersections across distinct points of the x1-axis merge columns.

    Each trial intersects independently sampled one-point ideals sitting
    at distinct abscissas and compares the staircase of the intersection
    with the direction-1 sum of the factor staircases."""
    rec = _Recorder("prop1", seed)
    for trial in range(trials):
        rng = _trial_rng("prop1", seed, trial)
        n = rng.randint(2, n_max)
        parts = _split_total(rng, n, 4)
        targets = [_random_staircase(rng, p) for p in parts]
        case = f"trial={trial} factors=" + "+".join(_label(t) for t in targets)
        expected = sum1(targets)
        try:
            abscissas = _distinct_fractions(rng, len(parts))
            factors = []
            for t, z in zip(targets, abscissas):
                elements = _origin_sample(t, rng, 50)
                factors.append(Ideal(_translated(elements, z, 0)))
            observed = staircase_of(intersect_comaximal(factors))
        except SamplingError as exc:
            rec.sampling_failure(case, exc)
            continue
        rec.record(case, observed == expected, _label(expected), _label(observed))
    return rec.report()


def run_prop2(trials: int, n_max: int = 8, seed: int = 0) -> ExperimentReport:
    """Intersections across distinct horizontal lines merge rows."""
    rec = _Recorder("prop2", seed)
    for trial in range(trials):
        rng = _trial_rng("prop2", seed, trial)
        n = rng.randint(2, n_max)
        parts = _split_total(rng, n, 3)
        targets = [_random_staircase(rng, p) for p in parts]
        case = f"trial={trial} factors=" + "+".join(_label(t) for t in targets)
        expected = sum2(targets)
        try:
            levels = _distinct_fractions(rng, len(parts))
            factors = []
            for t, lam in zip(targets, levels):
                elements = _axis_sample(t, rng, 50)
                factors.append(Ideal(_translated(elements, 0, lam)))
            observed = staircase_of(intersect_comaximal(factors))
        except SamplingError as exc:
            rec.sampling_failure(case, exc)
            continue
        rec.record(case, observed == expected, _label(expected), _label(observed))
    return rec.report()


def run_divisibility(trials: int, n_max: int = 8, seed: int = 0) -> ExperimentReport:
    """Basis elements of axis-supported ideals are divisible by the x2
    power of their own leading term."""
    rec = _Recorder("divisibility", seed)
    for trial in range(trials):
        rng = _trial_rng("divisibility", seed, trial)
        n = rng.randint(2, n_max)
        target = _random_staircase(rng, n)
        case = f"trial={trial} basin={_label(target)}"
        try:
            elements = _axis_sample(target, rng, 50)
        except SamplingError as exc:
            rec.sampling_failure(case, exc)
            continue
        bad = None
        for g in elements:
            a2 = g.leading_exponent()[1]
            if any(e[1] < a2 for e, _ in g.terms):
                bad = g
                break
        rec.record(
            case,
            bad is None,
            "every term divisible by the leading x2 power",
            "ok" if bad is None else f"violated by a basis element",
        )
    return rec.report()


def run_et_closure(a: StandardSet, b: StandardSet, seed: int = 0) -> ExperimentReport:
    """Merge the lines of a point configuration for a onto fewer lines as
    prescribed by a row partition witnessing leq_et(a, b); the collided
    configuration must land in the basin of b."""
    witness = et_row_partition(a, b)
    if witness is None:
        raise ValueError("run_et_closure needs leq_et(a, b) to hold")
    rec = _Recorder("et_closure", seed)
    rng = _trial_rng("et_closure", seed, 0)
    case = f"{_label(a)}->{_label(b)}"
    for attempt in range(20):
        levels = _distinct_fractions(rng, len(witness))
        points = []
        collision = False
        for block, lam in zip(witness, levels):
            used = set()
            for width in block:
                xs = _distinct_fractions(rng, width)
                if any(x in used for x in xs):
                    collision = True
                    break
                used.update(xs)
                points.extend((x, lam) for x in xs)
            if collision:
                break
        if collision:
            continue
        observed = staircase_of(vanishing_ideal(points))
        rec.record(case, observed == b, _label(b), _label(observed))
        return rec.report()
    rec.sampling_failure(case, "persistent point collisions while merging")
    return rec.report()


def run_et_closure_covers(n_max: int = 6, seed: int = 0) -> ExperimentReport:
    """run_et_closure across every cover of the row merging poset up to
    n_max, one case per cover."""
    rec = _Recorder("et_closure_covers", seed)
    for n in range(2, n_max + 1):
        poset = build_poset(n, "et")
        for i, j in poset.covers:
            a, b = poset.elements[i], poset.elements[j]
            sub = run_et_closure(a, b, seed=seed + 7919 * n + i * 101 + j)
            for case, e, o in sub.failures:
                rec.record(f"n={n} {case}", False, e, o)
            if sub.passed:
                rec.record(f"n={n} {_label(a)}->{_label(b)}", True, "", "")
    return rec.report()


def run_punc_consistency(trials: int, n_max: int = 6, seed: int = 0) -> ExperimentReport:
    """Torus limits of origin-supported basin ideals under weights with
    0 < n*v1 <= v2 land in basins above the source in the column
    breaking order."""
    rec = _Recorder("punc_consistency", seed)
    for trial in range(trials):
        rng = _trial_rng("punc", seed, trial)
        n = rng.randint(2, n_max)
        target = _random_staircase(rng, n)
        v1 = rng.randint(1, 3)
        v2 = n * v1 + rng.randint(0, 4)
        case = f"trial={trial} basin={_label(target)} v=({v1},{v2})"
        try:
            elements = _origin_sample(target, rng, 50)
        except SamplingError as exc:
            rec.sampling_failure(case, exc)
            continue
        limit = torus_limit(Ideal(elements), (v1, v2))
        monomial = all(len(g.terms) == 1 for g in limit.generators)
        observed = staircase_of(limit)
        ok = monomial and leq_punc(target, observed)
        rec.record(
            case,
            ok,
            f"a monomial ideal above {_label(target)}",
            _label(observed) + ("" if monomial else ", not monomial"),
        )
    return rec.report()


def run_torus_calibration(trials: int, n_max: int = 6, seed: int = 0) -> ExperimentReport:
    """Weights (-(n+1), -1) must send every sampled ideal back to the
    monomial ideal of its own staircase."""
    rec = _Recorder("torus_calibration", seed)
    for trial in range(trials):
        rng = _trial_rng("calibration", seed, trial)
        n = rng.randint(2, n_max)
        target = _random_staircase(rng, n)
        mode = rng.choice(["origin", "x1_axis", "free"])
        case = f"trial={trial} basin={_label(target)} mode={mode}"
        try:
            if mode == "origin":
                elements = _origin_sample(target, rng, 50)
            elif mode == "x1_axis":
                elements = _axis_sample(target, rng, 50)
            else:
                elements = _free_sample(target, rng, 50)
        except SamplingError as exc:
            rec.sampling_failure(case, exc)
            continue
        limit = torus_limit(Ideal(elements), (-(n + 1), -1))
        expected = reduced_groebner_basis(monomial_ideal(target)).elements
        observed = reduced_groebner_basis(limit).elements
        rec.record(
            case,
            observed == expected,
            f"the monomial ideal of {_label(target)}",
            _label(staircase_of(limit))
            + ("" if all(len(g.terms) == 1 for g in limit.generators) else ", not monomial"),
        )
    return rec.report()


def run_single_column_density(n: int, trials: int, seed: int = 0) -> ExperimentReport:
    """Ideals generated by x1 plus a constant-free polynomial in x2 and by
    x2^n all sit in the single-column basin at the origin."""
    if n < 1:
        raise ValueError("n must be positive")
    rec = _Recorder("single_column_density", seed)
    column = StandardSet([n])
    for trial in range(trials):
        rng = _trial_rng("single_column", seed, trial)
        coeffs = [Fraction(0)] + [
            _rand_fraction(rng) for _ in range(n - 1)
        ]
        ideal = tall_point_ideal(n, coeffs)
        gb = reduced_groebner_basis(ideal)
        case = f"trial={trial}"
        ok = gb.staircase == column and _supports_origin(gb.elements, n)
        rec.record(
            case,
            ok,
            f"{_label(column)} at the origin",
            _label(gb.staircase) if gb.staircase else "infinite",
        )
    return rec.report()
