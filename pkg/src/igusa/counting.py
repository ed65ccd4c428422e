"""Exhaustive torus counting over (F_p^x)^n and non-degeneracy checks.

Every count is an exact enumeration of the (p-1)^n points with nonzero
coordinates; a size guard refuses anything beyond 10^8 points. All
non-degeneracy conditions are congruences mod p, so checking residues
on the torus is equivalent to checking units of the p-adic integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import SizeGuardError
from .newton import NewtonPolyhedron, face_restriction
from .polynomials import IntegerPolynomial, PolynomialMapping

ENUMERATION_LIMIT = 10**8


@dataclass(frozen=True)
class CountTriple:
    """Counts over (F_p^x)^n: N (f side vanishes only), P (measure side
    vanishes only), Q (both vanish)."""

    N: int
    P: int
    Q: int


@dataclass(frozen=True)
class DegeneracyReport:
    ok: bool
    witnesses: tuple  # of (identifier, point, failed condition)

    def to_json(self):
        return {"ok": self.ok,
                "witnesses": [{"where": str(w[0]), "point": list(w[1]),
                               "condition": w[2]} for w in self.witnesses]}


def _torus(p, n):
    if (p - 1)**n > ENUMERATION_LIMIT:
        raise SizeGuardError(
            f"({p}-1)^{n} torus points exceed the limit {ENUMERATION_LIMIT}")
    return itertools.product(range(1, p), repeat=n)


def _vanishes(obj, point, p):
    if isinstance(obj, PolynomialMapping):
        return all(c.evaluate_mod(point, p) == 0 for c in obj.components)
    return obj.evaluate_mod(point, p) == 0


def _components(obj):
    if isinstance(obj, PolynomialMapping):
        return obj.components
    return (obj,)


def count_triple(fpart, gpart, p) -> CountTriple:
    """Exact (N, P, Q) for face restrictions fpart and gpart.

    fpart may be None (a side that never vanishes on the torus, as for
    monomial ideals); likewise gpart (trivial measure). A mapping
    vanishes when every component does.
    """
    n = fpart.n if fpart is not None else gpart.n
    N = P = Q = 0
    for a in _torus(p, n):
        fzero = fpart is not None and _vanishes(fpart, a, p)
        gzero = gpart is not None and _vanishes(gpart, a, p)
        if fzero and gzero:
            Q += 1
        elif fzero:
            N += 1
        elif gzero:
            P += 1
    return CountTriple(N, P, Q)


def rank_mod_p(rows, p):
    """Rank of an integer matrix over F_p by row reduction."""
    rows = [[x % p for x in row] for row in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    pivot_row = 0
    for col in range(cols):
        pivot = next((r for r in range(pivot_row, len(rows))
                      if rows[r][col]), None)
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        inv = pow(rows[pivot_row][col], p - 2, p)
        rows[pivot_row] = [x * inv % p for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p
                           for x, y in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        rank += 1
    return rank


def _jacobian_rows(polys, point, p):
    return [[poly.partial_derivative(i).evaluate_mod(point, p)
             for i in range(1, poly.n + 1)] for poly in polys]


def check_nondegenerate_single(f: IntegerPolynomial, p) -> DegeneracyReport:
    """For every face of the Newton polyhedron (the whole polyhedron
    included), the face polynomial has no singular torus zero mod p."""
    gamma = NewtonPolyhedron.of(f)
    witnesses = []
    for face in gamma.enumerate_faces():
        ftau = face_restriction(f, face)
        for a in _torus(p, f.n):
            if ftau.evaluate_mod(a, p):
                continue
            if rank_mod_p(_jacobian_rows([ftau], a, p), p) == 0:
                witnesses.append((face_name(face), a,
                                  "face polynomial has a singular torus zero"))
    return DegeneracyReport(not witnesses, tuple(witnesses))


def check_strong_nondegenerate(ff: PolynomialMapping, p) -> DegeneracyReport:
    """At every common torus zero of the face restrictions of all
    components, the Jacobian has rank min(t, n) mod p."""
    gamma = NewtonPolyhedron.of(ff)
    target = min(ff.t, ff.n)
    witnesses = []
    for face in gamma.enumerate_faces():
        parts = [face_restriction(c, face) for c in ff.components]
        for a in _torus(p, ff.n):
            if any(part.evaluate_mod(a, p) for part in parts):
                continue
            if rank_mod_p(_jacobian_rows(parts, a, p), p) < target:
                witnesses.append((face_name(face), a,
                                  f"Jacobian rank below {target}"))
    return DegeneracyReport(not witnesses, tuple(witnesses))


def check_pair_nondegenerate(fside, g, partition, p) -> DegeneracyReport:
    """At every common torus zero of the two face restrictions on a cone
    of the pair partition, the stacked Jacobian of (fside components, g)
    has full rank (2 for a polynomial side, t+1 for a mapping) mod p."""
    t = fside.t if isinstance(fside, PolynomialMapping) else 1
    n = g.n
    if n < t + 1:
        raise ValueError(f"need n >= {t + 1} variables, got {n}")
    gamma_f, gamma_g = partition.polyhedra
    witnesses = []
    for cone in partition.cones:
        face_f, face_g = cone.labels
        fparts = [face_restriction(c, face_f) for c in _components(fside)]
        gpart = face_restriction(g, face_g)
        if gpart.is_zero() or len(gpart.terms) == 1:
            continue  # a monomial never vanishes on the torus
        for a in _torus(p, n):
            if gpart.evaluate_mod(a, p):
                continue
            if any(part.evaluate_mod(a, p) for part in fparts):
                continue
            rows = _jacobian_rows(fparts + [gpart], a, p)
            if rank_mod_p(rows, p) < t + 1:
                witnesses.append((cone_name(cone), a,
                                  f"stacked Jacobian rank below {t + 1}"))
    return DegeneracyReport(not witnesses, tuple(witnesses))


def face_name(face):
    pts = ",".join(str(tuple(pt)) for pt in sorted(face.touching))
    rec = ",".join(map(str, sorted(face.recession)))
    return f"face[dim={face.dim}; touching={pts}; recession={{{rec}}}]"


def cone_name(cone):
    rays = ",".join(str(tuple(r)) for r in cone.rays)
    return f"cone[dim={cone.dim}; rays={rays}]"
