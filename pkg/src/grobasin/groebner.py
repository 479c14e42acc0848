"""Reduced Groebner bases for bivariate ideals over the rationals.

Everything is exact.  The default order is lexicographic with x1 > x2;
torus limits additionally use weight orders refined by lex.  Zero
dimensional ideals hand back the staircase under their leading terms,
which is how ideals meet the combinatorics in the rest of the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Polynomial, format_polynomial, parse_polynomial
from .staircase import StandardSet


class NotZeroDimensional(ValueError):
    """The staircase of the ideal is infinite."""


class LimitDoesNotExist(ValueError):
    """The requested torus limit leaves the Hilbert scheme."""


def _lex_key(exp):
    return exp


def _weight_key(v):
    v1, v2 = v

    def key(exp):
        return (-(exp[0] * v1 + exp[1] * v2), exp)

    return key


@dataclass(frozen=True)
class Ideal:
    """A finite generating set; zero generators are dropped on entry."""

    generators: tuple

    def __init__(self, generators):
        gens = tuple(g for g in generators if not g.is_zero())
        if not gens:
            raise ValueError("ideal needs at least one nonzero generator")
        object.__setattr__(self, "generators", gens)


@dataclass(frozen=True)
class ReducedGroebnerBasis:
    """Monic, tail-reduced, lex-sorted basis plus its staircase.

    staircase is None exactly when the leading terms leave infinitely
    many monomials under the stairs."""

    elements: tuple
    staircase: object

    @property
    def is_zero_dimensional(self) -> bool:
        return self.staircase is not None


def _nf_terms(terms, basis_data, key):
    # terms: dict exponent -> coefficient, consumed; returns remainder dict
    work = dict(terms)
    remainder = {}
    while work:
        exp = max(work, key=key)
        coeff = work.pop(exp)
        if coeff == 0:
            continue
        for lt, lc, gterms in basis_data:
            if exp[0] >= lt[0] and exp[1] >= lt[1]:
                shift = (exp[0] - lt[0], exp[1] - lt[1])
                factor = coeff / lc
                for e, c in gterms:
                    ne = (e[0] + shift[0], e[1] + shift[1])
                    if ne == exp:
                        continue
                    val = work.get(ne, Fraction(0)) - factor * c
                    if val:
                        work[ne] = val
                    else:
                        work.pop(ne, None)
                break
        else:
            remainder[exp] = coeff
    return remainder


def _basis_data(polys, key):
    data = []
    for g in polys:
        lt, lc = g.leading_under(key)
        data.append((lt, lc, g.terms))
    return data


def normal_form(f: Polynomial, basis, key=None) -> Polynomial:
    """Remainder of f on division by a reduced basis.

    Accepts a ReducedGroebnerBasis or any iterable of nonzero
    polynomials."""
    if hasattr(basis, "elements"):
        basis = basis.elements
    key = key or _lex_key
    return Polynomial(_nf_terms(dict(f.terms), _basis_data(basis, key), key))


def _spoly(f, g, key):
    (lf, cf), (lg, cg) = f.leading_under(key), g.leading_under(key)
    lcm = (max(lf[0], lg[0]), max(lf[1], lg[1]))
    left = f.term_multiple((lcm[0] - lf[0], lcm[1] - lf[1]), 1 / cf)
    right = g.term_multiple((lcm[0] - lg[0], lcm[1] - lg[1]), 1 / cg)
    return left - right


def _buchberger(gens, key):
    basis = [g for g in gens if not g.is_zero()]
    if not basis:
        raise ValueError("ideal needs at least one nonzero generator")
    pairs = {(i, j) for i in range(len(basis)) for j in range(i)}

    def lcm_of(i, j):
        li = basis[i].leading_under(key)[0]
        lj = basis[j].leading_under(key)[0]
        return (max(li[0], lj[0]), max(li[1], lj[1]))

    while pairs:
        i, j = min(pairs, key=lambda p: (key(lcm_of(*p)), p))
        pairs.remove((i, j))
        li = basis[i].leading_under(key)[0]
        lj = basis[j].leading_under(key)[0]
        lcm = (max(li[0], lj[0]), max(li[1], lj[1]))
        if lcm == (li[0] + lj[0], li[1] + lj[1]):
            continue
        s = _spoly(basis[i], basis[j], key)
        h = normal_form(s, basis, key)
        if not h.is_zero():
            basis.append(h)
            pairs.update((len(basis) - 1, k) for k in range(len(basis) - 1))
    return _interreduce(basis, key)


def _interreduce(basis, key):
    def divides(a, b):
        return a[0] <= b[0] and a[1] <= b[1]

    ordered = sorted(basis, key=lambda g: key(g.leading_under(key)[0]))
    minimal = []
    for g in ordered:
        lt = g.leading_under(key)[0]
        if any(divides(m.leading_under(key)[0], lt) for m in minimal):
            continue
        minimal.append(g)
    reduced = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        h = normal_form(g, others, key) if others else g
        reduced.append(h.monic())
    reduced.sort(key=lambda g: key(g.leading_under(key)[0]))
    return reduced


def _staircase_from_corners(corners):
    pure1 = [e for e in corners if e[1] == 0]
    pure2 = [e for e in corners if e[0] == 0]
    if not pure1 or not pure2:
        return None
    width = min(e[0] for e in pure1)
    heights = [
        min(e[1] for e in corners if e[0] <= j) for j in range(width)
    ]
    return StandardSet(heights)


def reduced_groebner_basis(ideal: Ideal) -> ReducedGroebnerBasis:
    """The unique reduced lex Groebner basis of the ideal."""
    elements = _buchberger(ideal.generators, _lex_key)
    corners = {g.leading_exponent() for g in elements}
    return ReducedGroebnerBasis(tuple(elements), _staircase_from_corners(corners))


def staircase_of(ideal: Ideal) -> StandardSet:
    """Staircase under the lex leading terms; requires finite complement."""
    gb = reduced_groebner_basis(ideal)
    if gb.staircase is None:
        raise NotZeroDimensional("ideal is not zero-dimensional")
    return gb.staircase


def monomial_ideal(s: StandardSet) -> Ideal:
    """The monomial ideal whose staircase is s."""
    return Ideal(
        tuple(Polynomial.monomial(e) for e in sorted(s.outer_corners()))
    )


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    """Generated by all pairwise products of generators."""
    return Ideal(tuple(f * g for f in a.generators for g in b.generators))


def intersect_comaximal(ideals) -> Ideal:
    """Intersection of pairwise comaximal zero-dimensional ideals.

    Computed as the iterated product, compacting with a Groebner basis at
    each step.  The staircase cardinality of the result must equal the sum
    over the factors; a mismatch means the supports were not disjoint and
    raises ValueError.
    """
    ideals = list(ideals)
    if not ideals:
        raise ValueError("need at least one ideal")
    total = 0
    for i in ideals:
        total += staircase_of(i).cardinality
    current = reduced_groebner_basis(ideals[0]).elements
    for nxt in ideals[1:]:
        nxt_gb = reduced_groebner_basis(nxt).elements
        product = Ideal(tuple(f * g for f in current for g in nxt_gb))
        current = reduced_groebner_basis(product).elements
    result = Ideal(current)
    if staircase_of(result).cardinality != total:
        raise ValueError("supports not disjoint")
    return result


def point_ideal(point) -> Ideal:
    a, b = Fraction(point[0]), Fraction(point[1])
    return Ideal(
        (
            Polynomial({(1, 0): 1, (0, 0): -a}),
            Polynomial({(0, 1): 1, (0, 0): -b}),
        )
    )


def vanishing_ideal(points) -> Ideal:
    """Ideal of a finite set of distinct rational points."""
    pts = [(Fraction(p[0]), Fraction(p[1])) for p in points]
    if len(set(pts)) != len(pts):
        raise ValueError("points must be distinct")
    if not pts:
        raise ValueError("need at least one point")
    return intersect_comaximal(point_ideal(p) for p in pts)


def tall_point_ideal(height: int, coefficients) -> Ideal:
    """A point of multiplicity `height` squeezed onto the x1-axis.

    Generated by x1 + sum of c_b x2^b for b below height, and x2^height.
    The support is the single point (-c_0, 0)."""
    coeffs = [Fraction(c) for c in coefficients]
    if height < 1:
        raise ValueError("height must be positive")
    if len(coeffs) != height:
        raise ValueError("need exactly `height` coefficients")
    first = {(1, 0): Fraction(1)}
    for b, c in enumerate(coeffs):
        if c:
            first[(0, b)] = c
    return Ideal((Polynomial(first), Polynomial.monomial((0, height))))


def torus_scale(f: Polynomial, t, v) -> Polynomial:
    """Scale each term by t to the power of its v-weight; t must be nonzero."""
    t = Fraction(t)
    if t == 0:
        raise ValueError("t must be nonzero")
    v1, v2 = v
    return Polynomial(
        {e: c * t ** (e[0] * v1 + e[1] * v2) for e, c in f.terms}
    )


def _initial_form(terms, v):
    v1, v2 = v
    w0 = min(e[0] * v1 + e[1] * v2 for e in terms)
    return Polynomial(
        {e: c for e, c in terms.items() if e[0] * v1 + e[1] * v2 == w0}
    )


def _nullspace(matrix, ncols):
    # matrix: list of rows (lists of Fractions); basis of the null space
    m = [row[:] for row in matrix]
    pivots = {}
    r = 0
    for c in range(ncols):
        hit = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if hit is None:
            continue
        m[r], m[hit] = m[hit], m[r]
        scale = m[r][c]
        m[r] = [x / scale for x in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c] != 0:
                factor = m[k][c]
                m[k] = [x - factor * y for x, y in zip(m[k], m[r])]
        pivots[c] = r
        r += 1
    basis = []
    for c in range(ncols):
        if c in pivots:
            continue
        vec = [Fraction(0)] * ncols
        vec[c] = Fraction(1)
        for pc, pr in pivots.items():
            vec[pc] = -m[pr][c]
        basis.append(vec)
    return basis


def _echelon_initial_forms(vectors, v):
    # vectors: list of dicts exponent -> Fraction; echelonize with pivots
    # minimal in (v-weight, lex) and return the v-minimal parts
    v1, v2 = v

    def tau(e):
        return (e[0] * v1 + e[1] * v2, e)

    basis = []
    for vec in vectors:
        vec = {e: c for e, c in vec.items() if c}
        while vec:
            pivot = min(vec, key=tau)
            hit = next((b for b in basis if b[0] == pivot), None)
            if hit is None:
                break
            factor = vec[pivot] / hit[1][pivot]
            for e, c in hit[1].items():
                val = vec.get(e, Fraction(0)) - factor * c
                if val:
                    vec[e] = val
                else:
                    vec.pop(e, None)
        if vec:
            basis.append((min(vec, key=tau), vec))
    return [_initial_form(vec, v) for _, vec in basis]


def _punctual_limit(gb: ReducedGroebnerBasis, v) -> Ideal:
    n = gb.staircase.cardinality
    data = _basis_data(gb.elements, _lex_key)
    stairs = sorted(gb.staircase.points())
    index = {e: k for k, e in enumerate(stairs)}

    def nf_vector(exp):
        rem = _nf_terms({exp: Fraction(1)}, data, _lex_key)
        vec = [Fraction(0)] * n
        for e, c in rem.items():
            vec[index[e]] = c
        return vec

    for i in range(n + 1):
        rem = _nf_terms({(i, n - i): Fraction(1)}, data, _lex_key)
        if rem:
            raise LimitDoesNotExist(
                "limit does not exist in the Hilbert scheme: "
                "ideal is not supported at the origin"
            )
    monos = [(i, j) for i in range(n) for j in range(n - i)]
    columns = [nf_vector(mexp) for mexp in monos]
    rows = [[col[s] for col in columns] for s in range(n)]
    kernel = _nullspace(rows, len(monos))
    vectors = [
        {monos[k]: c for k, c in enumerate(vec) if c} for vec in kernel
    ]
    forms = _echelon_initial_forms(vectors, v)
    gens = forms + [
        Polynomial.monomial((i, n - i)) for i in range(n + 1)
    ]
    return Ideal(tuple(gens))


def torus_limit(ideal: Ideal, v) -> Ideal:
    """Flat limit of the weight-v torus flow at t = 0.

    Generated by the v-minimal parts of a Groebner basis for the order
    "v-weight ascending, ties by lex".  Weights with both entries <= 0
    work for any zero-dimensional ideal; other weights require support at
    the origin.  The result is returned by its reduced lex basis; if its
    staircase cardinality differs from the input's, the limit left the
    Hilbert scheme and LimitDoesNotExist is raised.
    """
    v1, v2 = int(v[0]), int(v[1])
    gb = reduced_groebner_basis(ideal)
    if gb.staircase is None:
        raise NotZeroDimensional("ideal is not zero-dimensional")
    n = gb.staircase.cardinality
    if v1 <= 0 and v2 <= 0:
        weighted = _buchberger(ideal.generators, _weight_key((v1, v2)))
        candidate = Ideal(
            tuple(_initial_form(dict(g.terms), (v1, v2)) for g in weighted)
        )
    else:
        candidate = _punctual_limit(gb, (v1, v2))
    limit_gb = reduced_groebner_basis(candidate)
    if limit_gb.staircase is None or limit_gb.staircase.cardinality != n:
        raise LimitDoesNotExist("limit does not exist in the Hilbert scheme")
    return Ideal(limit_gb.elements)


def parse_ideal_text(text: str) -> Ideal:
    """One generator per line; blank lines are skipped."""
    gens = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            gens.append(parse_polynomial(line))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if not gens:
        raise ValueError("no generators found")
    return Ideal(tuple(gens))


def format_ideal(polys) -> str:
    """One canonical generator per line."""
    return "\n".join(format_polynomial(g) for g in polys) + "\n"
