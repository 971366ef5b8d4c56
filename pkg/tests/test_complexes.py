import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circm import (
    Complex,
    alpha,
    circulant,
    deletion,
    faces,
    family_f_vector,
    f_vector,
    independence_complex,
    interval_circulant,
    is_well_covered,
    link,
    restrict,
)
from circm.complexes import h_from_f

from conftest import brute_independent_sets, brute_maximal_independent_sets, downward_closure


small_circulants = st.integers(min_value=2, max_value=9).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.sets(st.integers(min_value=1, max_value=n // 2), max_size=n // 2),
    )
)


def build(params):
    n, s = params
    return circulant(n, sorted(s))


class TestComplexValidation:
    def test_rejects_non_antichain(self):
        with pytest.raises(ValueError):
            Complex(3, frozenset({frozenset({1}), frozenset({1, 2})}))

    def test_rejects_out_of_range_vertex(self):
        with pytest.raises(ValueError):
            Complex(2, frozenset({frozenset({3})}))

    def test_from_facets_reduce(self):
        c = Complex.from_facets(3, [[1], [1, 2]], reduce=True)
        assert c.facets == frozenset({frozenset({1, 2})})

    def test_empty_complex(self):
        c = Complex.from_facets(0, [[]])
        assert c.dim() == -1
        assert faces(c) == frozenset({frozenset()})

    def test_has_face(self):
        c = Complex.from_facets(3, [[1, 2], [3]])
        assert c.has_face([1])
        assert c.has_face([])
        assert not c.has_face([1, 3])


class TestFaceEnumeration:
    def test_faces_is_downward_closure(self):
        c = Complex.from_facets(4, [[1, 2, 3], [3, 4]])
        assert faces(c) == downward_closure(set(c.facets))

    def test_f_vector_simplex(self):
        c = Complex.from_facets(3, [[1, 2, 3]])
        fh = f_vector(c)
        assert fh.f == (1, 3, 3, 1)
        assert fh.h == (1, 0, 0, 0)

    def test_f_vector_cycle(self):
        # hollow triangle: an unfilled cycle on three vertices
        c = Complex.from_facets(3, [[1, 2], [2, 3], [1, 3]])
        fh = f_vector(c)
        assert fh.f == (1, 3, 3)
        assert fh.h == (1, 1, 1)

    def test_h_from_f_alternating_sum(self):
        # h_{D+1} equals the reduced Euler characteristic up to sign
        f = (1, 7, 14, 7)
        h = h_from_f(f)
        assert h == (1, 4, 3, -1)
        assert sum(h) == f[-1]


class TestIndependenceComplex:
    @given(small_circulants)
    @settings(max_examples=40, deadline=None)
    def test_facets_are_maximal_independent_sets(self, params):
        g = build(params)
        c = independence_complex(g)
        assert set(c.facets) == brute_maximal_independent_sets(g)

    @given(small_circulants)
    @settings(max_examples=25, deadline=None)
    def test_faces_are_exactly_independent_sets(self, params):
        g = build(params)
        assert faces(independence_complex(g)) == brute_independent_sets(g)

    def test_hexagon_complement_pairing(self):
        # maximal independent sets of C6(2,3) are the six cyclically adjacent pairs
        c = independence_complex(circulant(6, [2, 3]))
        assert c.facets == frozenset(frozenset({i, i % 6 + 1}) for i in range(1, 7))

    def test_alpha_and_well_covered(self):
        assert alpha(circulant(7, [1])) == 3
        assert is_well_covered(circulant(7, [1]))
        assert not is_well_covered(circulant(8, [1]))


class TestClosedFormFVector:
    @pytest.mark.parametrize("n,d", [(7, 1), (11, 2), (15, 3), (6, 2), (4, 2)])
    def test_matches_enumeration(self, n, d):
        assert family_f_vector(n, d).f == f_vector(independence_complex(interval_circulant(n, d))).f

    def test_known_values(self):
        assert family_f_vector(7, 1).f == (1, 7, 14, 7)
        assert family_f_vector(11, 2).f == (1, 11, 33, 22)
        assert family_f_vector(15, 3).f == (1, 15, 60, 50)

    def test_dimension_formula(self):
        for n, d in [(7, 1), (11, 2), (20, 4)]:
            assert family_f_vector(n, d).dim == n // (d + 1) - 1

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            family_f_vector(3, 2)


class TestSubcomplexOperations:
    def setup_method(self):
        self.c = independence_complex(circulant(8, [1, 2]))

    def test_link_definition(self):
        for face in [frozenset({1}), frozenset({1, 4})]:
            lk = link(self.c, face)
            expected = {g for g in faces(self.c) if not (g & face) and (g | face) in faces(self.c)}
            assert faces(lk) == expected

    def test_link_of_empty_face(self):
        lk = link(self.c, [])
        assert lk.facets == self.c.facets

    def test_deletion_definition(self):
        d = deletion(self.c, 1)
        assert faces(d) == {g for g in faces(self.c) if 1 not in g}

    def test_restrict_definition(self):
        w = frozenset({1, 2, 4, 5, 7})
        r = restrict(self.c, w)
        assert faces(r) == {g for g in faces(self.c) if g <= w}

    def test_link_rejects_non_face(self):
        with pytest.raises(ValueError):
            link(self.c, [1, 2])

    @given(small_circulants, st.data())
    @settings(max_examples=25, deadline=None)
    def test_restrict_commutes_with_induced_subgraph(self, params, data):
        from circm import induced_subgraph

        g = build(params)
        w = data.draw(st.sets(st.sampled_from(list(g.labels)), min_size=1))
        lhs = restrict(independence_complex(g), w)
        rhs = independence_complex(induced_subgraph(g, w))
        assert faces(lhs) == faces(rhs)


class TestFamilyIntegrality:
    @pytest.mark.parametrize("n", range(4, 21))
    def test_counts_are_integers_and_positive(self, n):
        for d in range(1, n // 2 + 1):
            fh = family_f_vector(n, d)
            assert all(x > 0 for x in fh.f)
            assert fh.f[1] == n
            if fh.dim >= 1:
                assert fh.f[2] == n * (n - 2 * d - 1) // 2 or d * 2 + 1 > n
