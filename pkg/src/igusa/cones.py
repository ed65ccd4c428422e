"""Cone partitions of R_+^n, simplicial decomposition and multiplicities.

Single partitions come straight from the facet structure of one Newton
polyhedron: one relatively open cone per face, spanned by the normals of
the facets containing that face. Pair partitions are the common
refinement of two such fans, computed as the fan of the Minkowski sum
polyhedron (support = all pairwise sums) and relabeled with the pair of
first-meet-locus faces of an interior witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from .errors import InternalConsistencyError
from .newton import NewtonPolyhedron


@dataclass(frozen=True)
class RationalCone:
    rays: tuple  # primitive integer vectors, strictly positively spanning
    dim: int
    labels: tuple  # (Face,) for single partitions, (Face, Face) for pairs

    def witness(self):
        """A lattice point in the relatively open cone (origin for dim 0)."""
        if not self.rays:
            return tuple([0] * _arity(self))
        return tuple(sum(col) for col in zip(*self.rays))

    def to_json(self):
        out = {"rays": [list(r) for r in self.rays], "dim": self.dim}
        if len(self.labels) == 1:
            out["labels"] = {"tau": self.labels[0].to_json()}
        else:
            out["labels"] = {"tau": self.labels[0].to_json(),
                             "tau_prime": self.labels[1].to_json()}
        return out


def _arity(cone):
    if cone.rays:
        return len(cone.rays[0])
    if cone.labels:
        face = cone.labels[0]
        return max(len(pt) for pt in face.touching)
    raise ValueError("cannot infer ambient dimension of an empty cone")


@dataclass(frozen=True)
class SimplicialPiece:
    rays: tuple  # linearly independent primitive vectors
    mult: int
    pp_points: tuple  # lattice points of the half-open parallelepiped


class ConePartition:
    """Finite list of relatively open cones partitioning R_+^n."""

    def __init__(self, cones, n, kind, polyhedra):
        self.cones = list(cones)
        self.n = n
        self.kind = kind  # "single" | "pair"
        self.polyhedra = tuple(polyhedra)

    def labels_at(self, k):
        return tuple(poly.first_meet_locus(k) for poly in self.polyhedra)

    def classify(self, k):
        """The unique cone whose relatively open set contains k."""
        if any(x < 0 for x in k):
            raise ValueError("classification is defined on R_+^n only")
        labels = self.labels_at(k)
        for cone in self.cones:
            if cone.labels == labels:
                return cone
        raise InternalConsistencyError(
            f"no cone matches the labels of {k}; the partition is incomplete")

    def rays(self):
        """All distinct primitive ray generators appearing in the partition."""
        seen = []
        for cone in self.cones:
            for ray in cone.rays:
                if ray not in seen:
                    seen.append(ray)
        return sorted(seen)


def _angular_sort(cones, n):
    """Deterministic presentation order: origin cone first; in the plane,
    sweep counterclockwise from the first axis; otherwise sort by rays."""
    def key(cone):
        if cone.dim == 0:
            return (0,)
        w = cone.witness()
        if n == 2:
            from fractions import Fraction
            slope = Fraction(w[1], w[0]) if w[0] else Fraction(10**9)
            return (1, slope, cone.dim)
        return (1, cone.rays)
    return sorted(cones, key=key)


def partition_single(gamma: NewtonPolyhedron) -> ConePartition:
    """The partition D of R_+^n: one relatively open cone per face."""
    cones = []
    for face in gamma.enumerate_faces():
        normals = [normal for normal, _, _ in gamma.facets_containing(face)]
        dim = linalg.rank([list(v) for v in normals]) if normals else 0
        if dim != gamma.n - face.dim:
            raise InternalConsistencyError(
                f"cone dimension {dim} != n - dim(face) = {gamma.n - face.dim}")
        cones.append(RationalCone(tuple(sorted(normals)), dim, (face,)))
    return ConePartition(_angular_sort(cones, gamma.n), gamma.n,
                         "single", (gamma,))


def partition_pair(gamma1: NewtonPolyhedron,
                   gamma2: NewtonPolyhedron) -> ConePartition:
    """Common refinement of the two fans, labeled with face pairs.

    The refinement is the fan of the Minkowski sum polyhedron, whose
    support is the set of pairwise sums of the two supports.
    """
    if gamma1.n != gamma2.n:
        raise ValueError("polyhedra live in different dimensions")
    sums = {linalg.vec_add(a, b)
            for a in gamma1.support for b in gamma2.support}
    combined = NewtonPolyhedron(sums, gamma1.n)
    cones = []
    for cone in partition_single(combined).cones:
        w = cone.witness()
        labels = (gamma1.first_meet_locus(w), gamma2.first_meet_locus(w))
        cones.append(RationalCone(cone.rays, cone.dim, labels))
    return ConePartition(cones, gamma1.n, "pair", (gamma1, gamma2))


# -- multiplicities and parallelepiped points ---------------------------


def multiplicity(rays):
    """Index of Z k_1 + ... + Z k_r in the lattice points of their span."""
    rays = [tuple(map(int, r)) for r in rays]
    if linalg.rank([list(r) for r in rays]) != len(rays):
        raise ValueError("rays are linearly dependent")
    factors = linalg.smith_invariant_factors(rays)
    out = 1
    for f in factors:
        out *= f
    return out


def parallelepiped_points(rays):
    """Integer points sum lambda_j k_j with all 0 <= lambda_j < 1.

    Includes the origin; the count equals multiplicity(rays). Enumerated
    by scanning the bounding box and solving for lambda exactly.
    """
    rays = [tuple(map(int, r)) for r in rays]
    if linalg.rank([list(r) for r in rays]) != len(rays):
        raise ValueError("rays are linearly dependent")
    n = len(rays[0])
    bounds = [max(1, sum(abs(r[i]) for r in rays)) for i in range(n)]
    points = []
    for h in itertools.product(*(range(b) for b in bounds)):
        lam = linalg.solve_columns(rays, h)
        if lam is None:
            continue
        if all(0 <= x < 1 for x in lam):
            points.append(tuple(h))
    points.sort()
    expected = multiplicity(rays)
    if len(points) != expected:
        raise InternalConsistencyError(
            f"parallelepiped count {len(points)} != multiplicity {expected}")
    return points


# -- simplicial decomposition ------------------------------------------


def _span_complement(rays):
    """Primitive basis of the orthogonal complement of span(rays)."""
    return linalg.kernel_basis([list(r) for r in rays])


def _cone_facet_normals(rays):
    """Supporting hyperplanes through 0 of the closed cone, within its span.

    Returns primitive h with h . r >= 0 for all rays and tight set of
    rank dim-1. Assumes dim(cone) >= 1.
    """
    d = linalg.rank([list(r) for r in rays])
    if d == 1:
        return []
    complement = _span_complement(rays)
    seen = {}
    for combo in itertools.combinations(range(len(rays)), d - 1):
        sub = [rays[i] for i in combo]
        if linalg.rank([list(r) for r in sub]) != d - 1:
            continue
        kernel = linalg.kernel_basis(
            [list(r) for r in sub] + [list(c) for c in complement])
        if len(kernel) != 1:
            continue
        h = kernel[0]
        dots = [linalg.vec_dot(h, r) for r in rays]
        if all(x <= 0 for x in dots):
            h = tuple(-x for x in h)
            dots = [-x for x in dots]
        if any(x < 0 for x in dots):
            continue
        tight = [rays[i] for i, x in enumerate(dots) if x == 0]
        if linalg.rank([list(r) for r in tight]) != d - 1:
            continue
        seen[h] = h
    return sorted(seen)


def _pull_triangulate(rays, idx):
    """Triangulate the closed cone on rays[idx] by pulling the first ray.

    Returns frozensets of ray indices, each spanning a full-dimensional
    simplicial subcone; the result is a face-to-face triangulation using
    no new rays.
    """
    sub = [rays[i] for i in idx]
    d = linalg.rank([list(r) for r in sub])
    if len(idx) == d:
        return {frozenset(idx)}
    v = idx[0]
    simplices = set()
    for h in _cone_facet_normals(sub):
        if linalg.vec_dot(h, rays[v]) <= 0:
            continue  # facet contains (or is behind) the pulled ray
        tight = [i for i in idx if linalg.vec_dot(h, rays[i]) == 0]
        for simplex in _pull_triangulate(rays, tight):
            simplices.add(simplex | {v})
    return simplices


def simplicial_decompose(cone: RationalCone):
    """Half-open disjoint cover of the relatively open cone by relatively
    open simplicial pieces whose rays come from the parent.

    Already-simplicial cones come back as a single identity piece. For
    the rest, a pulling triangulation (first ray in input order) is
    computed and every simplex face whose relative interior lies inside
    the parent's relative interior becomes a piece.
    """
    if cone.dim < 1:
        raise ValueError("decomposition needs a cone of dimension >= 1")
    rays = list(cone.rays)
    if len(rays) == cone.dim:
        return [_make_piece(tuple(rays))]
    parent_facets = _cone_facet_normals(rays)
    simplices = _pull_triangulate(rays, list(range(len(rays))))
    pieces = set()
    for simplex in simplices:
        for size in range(1, len(simplex) + 1):
            for subset in itertools.combinations(sorted(simplex), size):
                pieces.add(subset)
    kept = []
    for subset in sorted(pieces):
        w = tuple(sum(col) for col in zip(*(rays[i] for i in subset)))
        if all(linalg.vec_dot(h, w) > 0 for h in parent_facets):
            kept.append(_make_piece(tuple(rays[i] for i in subset)))
    return kept


def _make_piece(rays):
    return SimplicialPiece(rays, multiplicity(rays),
                           tuple(parallelepiped_points(rays)))
