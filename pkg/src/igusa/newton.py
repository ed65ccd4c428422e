"""Newton polyhedra: weight minima, first meet loci, facets and faces.

A polyhedron here is always conv(support) + R_+^n for a finite support in
N^n not containing the origin. Faces are identified by the pair
(touching support points, unbounded coordinate directions), which pins a
face down exactly because the recession cone is the full orthant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg


@dataclass(frozen=True)
class Face:
    touching: frozenset  # support points lying on the face
    recession: frozenset  # 1-based coordinate directions, k_i = 0
    dim: int

    def contains_face(self, other):
        return (other.touching <= self.touching
                and other.recession <= self.recession)

    def to_json(self):
        return {
            "touching": sorted(map(list, self.touching)),
            "recession": sorted(self.recession),
            "dim": self.dim,
        }


def _unit(n, i):
    e = [0] * n
    e[i] = 1
    return tuple(e)


class NewtonPolyhedron:
    """Gamma = conv(support) + R_+^n, queried through its support points."""

    def __init__(self, support, n):
        support = frozenset(tuple(int(e) for e in pt) for pt in support)
        if not support:
            raise ValueError("support must be nonempty")
        for pt in support:
            if len(pt) != n:
                raise ValueError(f"support point {pt} has wrong arity")
            if any(e < 0 for e in pt):
                raise ValueError(f"negative entry in support point {pt}")
            if not any(pt):
                raise ValueError("origin in support (f(0) != 0 or improper ideal)")
        self.support = support
        self.n = n
        self._support_list = sorted(support)
        self._facets = None
        self._faces = None

    @classmethod
    def of(cls, obj):
        """Polyhedron of a polynomial, mapping or monomial ideal spec."""
        return cls(obj.support, obj.n)

    # -- weight queries -------------------------------------------------

    def m_value(self, k):
        """min over the support of the scalar product k . omega."""
        self._check_weight(k)
        return min(linalg.vec_dot(k, pt) for pt in self._support_list)

    def first_meet_locus(self, k):
        """The face of Gamma on which k attains its minimum."""
        self._check_weight(k)
        m = self.m_value(k)
        touching = frozenset(pt for pt in self.support
                             if linalg.vec_dot(k, pt) == m)
        recession = frozenset(i + 1 for i in range(self.n) if k[i] == 0)
        return Face(touching, recession, self._face_dim(touching, recession))

    def whole_face(self):
        return Face(self.support, frozenset(range(1, self.n + 1)), self.n)

    def _check_weight(self, k):
        if len(k) != self.n:
            raise ValueError(f"weight {k} has wrong arity")
        if any(x < 0 for x in k):
            raise ValueError(f"negative entry in weight {k}")

    def _face_dim(self, touching, recession):
        base = next(iter(touching))
        vectors = [linalg.vec_sub(pt, base) for pt in touching if pt != base]
        vectors += [_unit(self.n, i - 1) for i in recession]
        return linalg.rank(vectors)

    # -- facet structure ------------------------------------------------

    def facet_normals(self):
        """Minimal inequality description: list of (primitive normal, offset).

        Gamma = {x in R_+^n : k_j . x >= offset_j for all j}; each normal
        is the unique primitive inward vector of one facet.
        """
        if self._facets is None:
            self._facets = self._compute_facets()
        return [(normal, offset) for normal, offset, _ in self._facets]

    def facets(self):
        """Like facet_normals but also yields the facet Face objects."""
        if self._facets is None:
            self._facets = self._compute_facets()
        return list(self._facets)

    def _compute_facets(self):
        n = self.n
        if n == 1:
            m = min(pt[0] for pt in self.support)
            face = self.first_meet_locus((1,))
            return [((1,), m, face)]
        units = [_unit(n, i) for i in range(n)]
        seen = {}
        for base in self._support_list:
            pool = [linalg.vec_sub(pt, base)
                    for pt in self._support_list if pt != base]
            pool += units
            for combo in itertools.combinations(pool, n - 1):
                if linalg.rank(list(combo)) != n - 1:
                    continue
                kernel = linalg.kernel_basis(list(combo))
                if len(kernel) != 1:
                    continue
                normal = kernel[0]
                if all(x <= 0 for x in normal):
                    normal = tuple(-x for x in normal)
                if any(x < 0 for x in normal) or not any(normal):
                    continue
                if normal in seen:
                    continue
                face = self.first_meet_locus(normal)
                if face.dim == n - 1:
                    seen[normal] = (normal, self.m_value(normal), face)
        return sorted(seen.values())

    def enumerate_faces(self):
        """Every face of Gamma met by some k >= 0, the whole polyhedron included.

        Faces are found as first meet loci of sums of facet-normal subsets;
        every face arises this way, so this sweeps out one witness per cone of the
        fan, hence one witness per face.
        """
        if self._faces is not None:
            return list(self._faces)
        facets = self.facets()
        normals = [normal for normal, _, _ in facets]
        found = {}
        for size in range(len(normals) + 1):
            for combo in itertools.combinations(normals, size):
                k = tuple(sum(col) for col in zip(*combo)) if combo \
                    else tuple([0] * self.n)
                face = self.first_meet_locus(k)
                found.setdefault((face.touching, face.recession), face)
        self._faces = sorted(
            found.values(),
            key=lambda f: (-f.dim, sorted(f.touching), sorted(f.recession)))
        return list(self._faces)

    def facets_containing(self, face):
        return [(normal, offset, ffac) for normal, offset, ffac in self.facets()
                if ffac.contains_face(face)]

    def has_face(self, face):
        return any(f.touching == face.touching and f.recession == face.recession
                   for f in self.enumerate_faces())

    def contains_point(self, x):
        """Membership via the facet inequalities (x must also be >= 0)."""
        if any(v < 0 for v in x):
            return False
        return all(linalg.vec_dot(normal, x) >= offset
                   for normal, offset in self.facet_normals())

    def contains_point_by_support(self, x):
        """Independent membership oracle: x in conv(support) + R_+^n.

        Equivalent to the existence of a convex combination y of support
        points with y <= x coordinatewise. Decided exactly by enumerating
        the vertices of the feasibility polytope
        {lambda >= 0, sum lambda = 1, sum lambda * support <= x}.
        Desk scale only (small supports, n <= 3).
        """
        if any(v < 0 for v in x):
            return False
        return _convex_below(self._support_list, x)


def _convex_below(points, x):
    """Is some convex combination of `points` coordinatewise <= x?

    Vertex enumeration with exact rationals: a vertex of the feasible set
    has |active lambdas| = |tight coordinates| + 1; solve each square
    system and accept any solution meeting every constraint.
    """
    from fractions import Fraction

    n = len(x)
    idx = list(range(len(points)))
    for tight_coords in itertools.chain.from_iterable(
            itertools.combinations(range(n), r) for r in range(n + 1)):
        for free in itertools.combinations(idx, len(tight_coords) + 1):
            rows = [[Fraction(1)] * len(free)]
            rhs = [Fraction(1)]
            for c in tight_coords:
                rows.append([Fraction(points[i][c]) for i in free])
                rhs.append(Fraction(x[c]))
            cols = [list(tuple(rows[r][j] for r in range(len(rows))))
                    for j in range(len(free))]
            if linalg.rank(cols) != len(free):
                continue
            sol = linalg.solve_columns(cols, rhs)
            if sol is None or any(s < 0 for s in sol):
                continue
            y = [sum(sol[j] * points[i][c] for j, i in enumerate(free))
                 for c in range(n)]
            if all(yc <= xc for yc, xc in zip(y, x)):
                return True
    return False


def face_restriction(poly, face, polyhedron=None):
    """Terms of `poly` whose exponents lie on the given face.

    When `polyhedron` is supplied, the face is validated against it.
    """
    if polyhedron is not None and not polyhedron.has_face(face):
        raise ValueError("face does not belong to the given polyhedron")
    return poly.restrict_to_exponents(face.touching)
