"""Newton polyhedra: weights, first meet loci, facets, faces, membership."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from igusa.newton import Face, NewtonPolyhedron, face_restriction
from igusa.polynomials import parse_polynomial

from conftest import example_ideal, example_measure


def gamma_I():
    return NewtonPolyhedron.of(example_ideal())


def gamma_g():
    return NewtonPolyhedron.of(example_measure())


class TestWeights:
    def test_m_values_of_ray_generators(self):
        gI, gg = gamma_I(), gamma_g()
        table = {(1, 0): (2, 1), (3, 1): (11, 8), (1, 1): (5, 6),
                 (1, 2): (7, 8), (0, 1): (1, 2)}
        for k, (mi, mg) in table.items():
            assert gI.m_value(k) == mi
            assert gg.m_value(k) == mg

    def test_m_value_of_pp_point(self):
        assert gamma_I().m_value((2, 1)) == 8
        assert gamma_g().m_value((2, 1)) == 7

    def test_negative_weight_rejected(self):
        with pytest.raises(ValueError):
            gamma_I().m_value((-1, 0))

    @given(st.tuples(st.integers(0, 9), st.integers(0, 9)),
           st.tuples(st.integers(0, 9), st.integers(0, 9)))
    def test_m_superadditive(self, k1, k2):
        # min of a sum dominates the sum of mins
        g = gamma_g()
        k = tuple(a + b for a, b in zip(k1, k2))
        assert g.m_value(k) >= g.m_value(k1) + g.m_value(k2)

    def test_origin_in_support_rejected(self):
        with pytest.raises(ValueError):
            NewtonPolyhedron({(0, 0), (1, 0)}, 2)


class TestFirstMeetLocus:
    def test_zero_weight_meets_everything(self):
        g = gamma_I()
        face = g.first_meet_locus((0, 0))
        assert face.touching == g.support
        assert face.dim == 2

    def test_interior_weight_meets_vertex(self):
        face = gamma_I().first_meet_locus((2, 1))
        assert face.touching == {(3, 2)}
        assert face.dim == 0

    def test_facet_weight_meets_edge(self):
        face = gamma_I().first_meet_locus((3, 1))
        assert face.touching == {(3, 2), (2, 5)}
        assert face.dim == 1
        face = gamma_I().first_meet_locus((1, 2))
        assert face.touching == {(5, 1), (3, 2)}
        assert face.dim == 1

    def test_axis_weight_has_recession(self):
        face = gamma_I().first_meet_locus((1, 0))
        assert face.recession == {2}
        assert face.touching == {(2, 5)}
        assert face.dim == 1

    def test_face_containment_order(self):
        g = gamma_I()
        vertex = g.first_meet_locus((2, 1))
        edge = g.first_meet_locus((3, 1))
        assert edge.contains_face(vertex)
        assert not vertex.contains_face(edge)


class TestFacets:
    def test_example_facets(self):
        # inward normals with offsets, one per facet
        assert gamma_I().facet_normals() == [
            ((0, 1), 1), ((1, 0), 2), ((1, 2), 7), ((3, 1), 11)]
        assert gamma_g().facet_normals() == [
            ((0, 1), 2), ((1, 0), 1), ((1, 1), 6)]

    def test_one_dimensional(self):
        g = NewtonPolyhedron({(3,)}, 1)
        assert g.facet_normals() == [((1,), 3)]

    def test_three_dimensional_simplex(self):
        g = NewtonPolyhedron.of(parse_polynomial("x + y + z", 3))
        normals = [n for n, _ in g.facet_normals()]
        assert (1, 1, 1) in normals
        assert set(normals) >= {(1, 0, 0), (0, 1, 0), (0, 0, 1)}

    def test_enumerate_faces_closed_under_facets(self):
        g = gamma_I()
        faces = g.enumerate_faces()
        assert any(f.dim == 2 and f.touching == g.support for f in faces)
        for _, _, facet in g.facets():
            assert g.has_face(facet)

    def test_facets_containing_vertex(self):
        g = gamma_I()
        vertex = g.first_meet_locus((2, 1))
        normals = [n for n, _, _ in g.facets_containing(vertex)]
        assert sorted(normals) == [(1, 2), (3, 1)]


class TestMembership:
    grid = list(itertools.product(range(9), repeat=2))

    def test_facet_description_matches_support_oracle(self):
        for g in (gamma_I(), gamma_g()):
            for x in self.grid:
                assert g.contains_point(x) == g.contains_point_by_support(x)

    def test_support_points_inside(self):
        g = gamma_I()
        for pt in g.support:
            assert g.contains_point(pt)

    def test_negative_outside(self):
        assert not gamma_I().contains_point((-1, 3))

    @settings(max_examples=50)
    @given(st.sets(st.tuples(st.integers(0, 5), st.integers(0, 5)),
                   min_size=1, max_size=4).filter(
                       lambda s: (0, 0) not in s))
    def test_random_supports_agree(self, support):
        g = NewtonPolyhedron(support, 2)
        for x in itertools.product(range(7), repeat=2):
            assert g.contains_point(x) == g.contains_point_by_support(x)


class TestFaceRestriction:
    def test_restriction_keeps_face_terms(self):
        g = gamma_g()
        f = example_measure()
        edge = g.first_meet_locus((1, 1))
        assert face_restriction(f, edge, g) == f

        axis = g.first_meet_locus((0, 1))
        assert face_restriction(f, axis, g).terms == {(4, 2): 1}

    def test_restriction_validates_face(self):
        bogus = Face(frozenset({(9, 9)}), frozenset(), 0)
        with pytest.raises(ValueError):
            face_restriction(example_measure(), bogus, gamma_g())
