"""Assembly of the zeta function: per-cone local factors L and lattice
sums S, their product-sum, and candidate-pole extraction.

The prime p is a fixed integer, so everything is an exact rational
function in t = p^(-s). Exponentials p^(a*s+b) turn into p^b * t^(-a);
the factor p^(a*s+b) - 1 is kept symbolically as an ExpFactor (a, b) for
display and becomes (p^b - t^a)/t^a when expanded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cones import ConePartition, RationalCone, simplicial_decompose
from .errors import DegeneracyError, InternalConsistencyError
from .ratfun import Poly, RationalFunction


def sigma(k):
    return sum(k)


@dataclass(frozen=True)
class ExpFactor:
    """The denominator factor p^(a*s+b) - 1."""

    a: int  # coefficient of s (nonnegative)
    b: int  # constant part

    def __post_init__(self):
        if (self.a, self.b) == (0, 0):
            raise ValueError("p^0 - 1 would be the zero factor")

    def as_ratfun(self, p):
        # (p^b - t^a) / t^a
        return RationalFunction(self.numerator_poly(p), Poly.t_power(self.a))

    def numerator_poly(self, p):
        if self.a == 0:
            return Poly.const(p**self.b - 1)
        return Poly({0: p**self.b, self.a: -1})

    def render(self, p):
        s_part = f"{p}^({self.a}s+{self.b})" if self.b >= 0 \
            else f"{p}^({self.a}s{self.b})"
        if self.a == 0:
            s_part = f"{p}^{self.b}"
        return f"({s_part}-1)"


@dataclass(frozen=True)
class FactoredPiece:
    """sum of coeff * p^(a*s+b) terms over a product of ExpFactors."""

    terms: tuple  # of (coeff, a, b)
    factors: tuple  # of ExpFactor

    def expand(self, p):
        a_total = sum(f.a for f in self.factors)
        num = Poly({})
        for coeff, a, b in self.terms:
            if a > a_total:
                raise InternalConsistencyError(
                    "numerator exponent escapes the denominator t-power")
            num = num + Poly({a_total - a: coeff * Fraction(p)**b})
        den = Poly.const(1)
        for f in self.factors:
            den = den * f.numerator_poly(p)
        return RationalFunction(num, den)

    def to_json(self):
        return {"terms": [[c, a, b] for c, a, b in self.terms],
                "factors": [[f.a, f.b] for f in self.factors]}


@dataclass
class ZetaRational:
    reduced: RationalFunction
    factored: tuple = ()  # FactoredPieces whose sum expands to `reduced`
    notes: tuple = ()

    def evaluate(self, tval):
        return self.reduced.evaluate(tval)

    def verify_factored(self, p):
        if not self.factored:
            return True
        total = RationalFunction.const(0)
        for piece in self.factored:
            total = total + piece.expand(p)
        return total == self.reduced

    def to_json(self):
        out = self.reduced.to_json()
        if self.factored:
            out["factored"] = [piece.to_json() for piece in self.factored]
        if self.notes:
            out["notes"] = list(self.notes)
        return out


@dataclass(frozen=True)
class CandidatePole:
    value: Fraction
    source: str


def evaluate_at(z: ZetaRational, tval):
    """Exact evaluation of the reduced form at a rational t."""
    return z.reduced.evaluate(tval)


# -- the S factor -------------------------------------------------------


def s_delta(cone: RationalCone, mf, mg, p) -> ZetaRational:
    """Lattice sum over N^n intersect the relatively open cone.

    mf and mg are the weight functions of the two polyhedra (mg is the
    zero function in trivial-measure mode). Uses the closed form over a
    half-open simplicial decomposition; the zero-dimensional cone
    contributes 1.
    """
    if cone.dim == 0:
        piece = FactoredPiece(((1, 0, 0),), ())
        return ZetaRational(RationalFunction.const(1), (piece,))
    pieces = []
    total = RationalFunction.const(0)
    for sp in simplicial_decompose(cone):
        exps = [(mf(k), mg(k) + sigma(k)) for k in sp.rays]
        _check_linear(sp.rays, exps, mf, mg)
        factors = tuple(ExpFactor(a, b) for a, b in exps)
        terms = tuple(sorted((1, mf(h), mg(h) + sigma(h))
                             for h in sp.pp_points))
        piece = FactoredPiece(terms, factors)
        pieces.append(piece)
        total = total + piece.expand(p)
    return ZetaRational(total, tuple(pieces))


def _check_linear(rays, exps, mf, mg):
    w = tuple(sum(col) for col in zip(*rays))
    if mf(w) != sum(a for a, _ in exps):
        raise InternalConsistencyError("weight is not linear on the piece")
    if mg(w) + sigma(w) != sum(b for _, b in exps):
        raise InternalConsistencyError("measure weight is not linear on the piece")


# -- the L factors ------------------------------------------------------


def l_delta_ideal(counts, p, n) -> ZetaRational:
    """Local factor of the monomial-ideal formula; constant in s.

    The relevant count is the number of torus zeros of the restricted
    measure polynomial, stored as counts.P (the f side, a monomial
    ideal, never vanishes on the torus).
    """
    value = Fraction((p - 1)**n, p**n) - Fraction(counts.P, p**(n - 1) * (p + 1))
    return ZetaRational(RationalFunction.const(value))


def l_delta_single(counts, p, n) -> ZetaRational:
    """Four-term local factor for a single polynomial with measure."""
    return _l_delta(counts, p, n, 1)


def l_delta_mapping(counts, p, n, t_count) -> ZetaRational:
    """Four-term local factor for a mapping with t_count components."""
    return _l_delta(counts, p, n, t_count)


def _l_delta(counts, p, n, tc) -> ZetaRational:
    one = RationalFunction.const(1)
    t = RationalFunction(Poly.t_power(1))
    ptc_minus_t = RationalFunction(Poly({0: p**tc, 1: -1}))
    total = RationalFunction.const((p - 1)**n)
    if counts.N:
        total = total - Fraction(p**tc * counts.N) * (one - t) / ptc_minus_t
    if counts.P:
        total = total - RationalFunction.const(Fraction(counts.P * p, p + 1))
    if counts.Q:
        qnum = RationalFunction(
            Poly({0: p**(tc - 1) * (p + 1), 1: -(p**(tc - 1) + 1)}))
        total = total - Fraction(p * counts.Q, p + 1) * qnum / ptc_minus_t
    total = Fraction(1, p**n) * total
    return ZetaRational(total)


# -- assembly -----------------------------------------------------------


@dataclass
class ConeTerm:
    cone: RationalCone
    counts: object
    L: ZetaRational
    S: ZetaRational


def cone_terms(mode, partition: ConePartition, counts, mf, mg, p, t_count=1):
    """Per-cone (L, S) data in partition order."""
    out = []
    for cone, ct in zip(partition.cones, counts):
        if mode == "ideal":
            L = l_delta_ideal(ct, p, partition.n)
        elif mode == "single":
            L = l_delta_single(ct, p, partition.n)
        else:
            L = l_delta_mapping(ct, p, partition.n, t_count)
        S = s_delta(cone, mf, mg, p)
        out.append(ConeTerm(cone, ct, L, S))
    return out


def assemble(mode, partition, counts, mf, mg, p, t_count=1,
             degeneracy_reports=(), override=False) -> ZetaRational:
    """Z(s) = sum over cones of L * S, as a reduced rational function in t.

    Refuses when any supplied degeneracy report carries witnesses, unless
    `override` forces the computation (the result is then watermarked as
    resting on an unverified hypothesis).
    """
    notes = []
    bad = [r for r in degeneracy_reports if not r.ok]
    if bad:
        if not override:
            raise DegeneracyError(bad[0])
        notes.append("unverified hypothesis: non-degeneracy fails; "
                     "formula output is not certified")
    terms = cone_terms(mode, partition, counts, mf, mg, p, t_count)
    total = RationalFunction.const(0)
    for term in terms:
        total = total + term.L.reduced * term.S.reduced
    _check_no_pole_at_origin(total)
    return ZetaRational(total, notes=tuple(notes))


def _check_no_pole_at_origin(rf: RationalFunction):
    # Z is bounded as Re(s) -> +infinity, so t = 0 cannot be a pole.
    if not rf.is_zero() and rf.den.coeffs[0] == 0:
        raise InternalConsistencyError(
            "residual negative power of t survived reduction")


def display_factors(mode, terms, t_count=1):
    """Distinct ExpFactors over all cones, for the common-denominator view."""
    factors = []
    for term in terms:
        for piece in term.S.factored:
            for f in piece.factors:
                if f not in factors:
                    factors.append(f)
    if mode in ("single", "mapping") and any(
            term.counts.N or term.counts.Q for term in terms):
        lf = ExpFactor(1, t_count)
        if lf not in factors:
            factors.append(lf)
    return sorted(factors, key=lambda f: (f.a, f.b))


def common_denominator_form(z: ZetaRational, factors, p):
    """(numerator Poly over Q, constant_divisor) with
    z = numerator / (constant_divisor * prod factors), or None when the
    reduced denominator does not divide that product."""
    den = Poly.const(p + 1)
    for f in factors:
        den = den * f.numerator_poly(p)
    try:
        cof = den.exact_div(z.reduced.den)
    except ValueError:
        return None
    return z.reduced.num * cof, p + 1


# -- candidate poles ----------------------------------------------------


def candidate_poles(partition: ConePartition, mf, mg, mode, t_count=1):
    """Real parts -(mg(k)+sigma(k))/mf(k) over primitive ray generators,
    plus the L-factor candidate -t_count in single/mapping mode."""
    found = {}
    for ray in partition.rays():
        m = mf(ray)
        if m == 0:
            continue
        value = Fraction(-(mg(ray) + sigma(ray)), m)
        found.setdefault(value, []).append(f"ray {ray}")
    if mode in ("single", "mapping"):
        value = Fraction(-t_count)
        found.setdefault(value, []).append("L-factor")
    return [CandidatePole(v, "; ".join(found[v])) for v in sorted(found)]
