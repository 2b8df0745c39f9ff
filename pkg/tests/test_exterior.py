"""Exterior core: normal form, wedge, contraction, primitive splitting, ranks."""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import oracle_contraction3, oracle_vector_wedge
from torelli import (Multivector, Sym2Element, SymplecticSpace, Vector,
                     contraction3, delta, intersection, is_primitive,
                     primitive_basis, primitive_rank, primitive_rank_two_ways,
                     project_primitive, sym_product, wedge)
from torelli.exterior import isotropic_spanning_wedges


def rational():
    return st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))


def vectors(genus=3):
    space = SymplecticSpace(genus)
    return st.builds(lambda cs: Vector(space, cs),
                     st.lists(rational(), min_size=2 * genus, max_size=2 * genus))


def rand_vector(space, rng):
    return Vector(space, [Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                          for _ in range(space.dim)])


def rand_mv(space, degree, rng, nterms=5):
    tuples = space.basis_tuples(degree)
    picks = rng.sample(tuples, min(nterms, len(tuples)))
    return Multivector(space, degree,
                       {t: Fraction(rng.randint(-4, 4), rng.randint(1, 2)) for t in picks})


class TestSpace:
    def test_genus_bounds(self):
        with pytest.raises(ValueError):
            SymplecticSpace(1)
        with pytest.raises(TypeError):
            SymplecticSpace("3")
        assert SymplecticSpace(2).dim == 4

    def test_labels_round_trip(self):
        sp = SymplecticSpace(3)
        assert sp.labels() == ["a1", "a2", "a3", "b1", "b2", "b3"]
        for i in range(sp.dim):
            assert sp.index(sp.label(i)) == i
        with pytest.raises(ValueError):
            sp.index("a4")
        with pytest.raises(ValueError):
            sp.index("c1")

    def test_basis_pairing_table(self):
        sp = SymplecticSpace(2)
        assert sp.basis_pairing(0, 2) == 1
        assert sp.basis_pairing(2, 0) == -1
        assert sp.basis_pairing(0, 1) == 0
        assert sp.basis_pairing(0, 3) == 0

    def test_float_rejected(self):
        sp = SymplecticSpace(2)
        with pytest.raises(TypeError):
            sp.vector([0.5, 0, 0, 0])
        with pytest.raises(TypeError):
            0.5 * sp.a(1)


class TestIntersection:
    def test_standard_values(self):
        sp = SymplecticSpace(3)
        assert intersection(sp.a(1), sp.b(1)) == 1
        assert intersection(sp.b(1), sp.a(1)) == -1
        assert intersection(sp.a(1), sp.b(2)) == 0
        assert intersection(sp.a(2), sp.a(3)) == 0

    @given(vectors(), vectors())
    @settings(max_examples=40, deadline=None)
    def test_antisymmetric(self, u, v):
        assert intersection(u, v) == -intersection(v, u)

    @given(vectors(), vectors(), vectors(), rational())
    @settings(max_examples=40, deadline=None)
    def test_bilinear(self, u, v, w, s):
        assert intersection(u + s * v, w) == intersection(u, w) + s * intersection(v, w)


class TestNormalForm:
    def test_unsorted_tuple_normalizes_with_sign(self):
        sp = SymplecticSpace(3)
        x = Multivector(sp, 3, {(1, 4, 0): Fraction(1)})
        assert x == Multivector.basis(sp, (0, 1, 4))
        y = Multivector(sp, 3, {(4, 1, 0): Fraction(1)})
        assert y == -1 * Multivector.basis(sp, (0, 1, 4))

    def test_repeated_index_is_zero(self):
        sp = SymplecticSpace(2)
        assert Multivector(sp, 2, {(1, 1): Fraction(5)}).is_zero()

    def test_no_zero_coefficients_stored(self):
        sp = SymplecticSpace(2)
        x = Multivector(sp, 2, {(0, 1): Fraction(1), (0, 2): Fraction(0)})
        assert x.support() == [(0, 1)]
        assert (x - x).terms == {}

    def test_keys_strictly_increasing(self):
        sp = SymplecticSpace(3)
        rng = random.Random(0)
        for _ in range(20):
            x = rand_mv(sp, 3, rng)
            assert all(t[0] < t[1] < t[2] for t in x.terms)

    def test_coefficient_lookup_any_order(self):
        sp = SymplecticSpace(3)
        x = Multivector.basis(sp, (0, 1, 4))
        assert x.coefficient((0, 1, 4)) == 1
        assert x.coefficient((1, 0, 4)) == -1
        assert x.coefficient((0, 0, 4)) == 0

    def test_degree_guards(self):
        sp = SymplecticSpace(2)
        with pytest.raises(ValueError):
            Multivector(sp, 4, {})
        with pytest.raises(ValueError):
            Multivector(sp, 2, {(0, 1, 2): Fraction(1)})
        with pytest.raises(ValueError):
            Multivector(sp, 2, {(0, 9): Fraction(1)})

    def test_vector_multivector_round_trip(self):
        sp = SymplecticSpace(3)
        rng = random.Random(1)
        for _ in range(10):
            v = rand_vector(sp, rng)
            assert v.to_multivector().to_vector() == v
        with pytest.raises(ValueError):
            rand_mv(sp, 2, rng).to_vector()

    def test_space_mismatch_rejected(self):
        with pytest.raises(ValueError):
            SymplecticSpace(2).a(1) + SymplecticSpace(3).a(1)


class TestWedge:
    def test_sign_bookkeeping_example(self):
        sp = SymplecticSpace(3)
        x = wedge(Multivector.basis(sp, (0, 1)), Multivector.basis(sp, (4,)))
        assert x == Multivector.basis(sp, (0, 1, 4))
        y = wedge(Multivector.basis(sp, (4,)), Multivector.basis(sp, (0, 1)))
        assert y == Multivector.basis(sp, (0, 1, 4))  # even crossing count

    def test_matches_determinant_oracle(self):
        sp = SymplecticSpace(3)
        rng = random.Random(2)
        for _ in range(25):
            u, v, w = (rand_vector(sp, rng) for _ in range(3))
            assert wedge(u, v) == oracle_vector_wedge(u, v)
            assert wedge(u, v, w) == oracle_vector_wedge(u, v, w)

    @given(vectors())
    @settings(max_examples=40, deadline=None)
    def test_alternating(self, u):
        assert wedge(u, u).is_zero()

    @given(vectors(), vectors(), vectors(), rational())
    @settings(max_examples=40, deadline=None)
    def test_bilinear(self, u, v, w, s):
        assert wedge(u + s * v, w) == wedge(u, w) + s * wedge(v, w)

    def test_graded_commutation(self):
        sp = SymplecticSpace(3)
        rng = random.Random(3)
        for _ in range(15):
            x1 = rand_mv(sp, 1, rng)
            y2 = rand_mv(sp, 2, rng)
            assert wedge(x1, y2) == wedge(y2, x1)  # (-1)^(1*2) = +1
            u, v = rand_vector(sp, rng), rand_vector(sp, rng)
            assert wedge(u, v) == -1 * wedge(v, u)

    def test_associative_on_vectors(self):
        sp = SymplecticSpace(4)
        rng = random.Random(4)
        for _ in range(15):
            u, v, w = (rand_vector(sp, rng) for _ in range(3))
            assert wedge(wedge(u, v), w) == wedge(u, wedge(v, w))

    def test_degree_overflow(self):
        sp = SymplecticSpace(2)
        two = delta(sp)
        with pytest.raises(ValueError, match="overflow"):
            wedge(two, two)
        with pytest.raises(ValueError, match="overflow"):
            wedge(wedge(sp.a(1), sp.b(1), sp.a(2)), sp.b(2))


class TestDelta:
    def test_expansion(self):
        sp = SymplecticSpace(2)
        assert delta(sp) == Multivector(sp, 2, {(0, 2): 1, (1, 3): 1})

    def test_contraction_normalization_all_genera(self):
        """contraction3(delta ^ v) = (g-1) v, the projector's scaling."""
        for g in (2, 3, 4):
            sp = SymplecticSpace(g)
            d = delta(sp)
            for i in range(sp.dim):
                v = sp.basis_vector(i)
                assert contraction3(wedge(d, v)) == (g - 1) * v


class TestContraction3:
    def test_hand_examples(self):
        sp = SymplecticSpace(3)
        assert contraction3(wedge(sp.a(1), sp.a(2), sp.a(3))).is_zero()
        assert contraction3(wedge(sp.a(1), sp.a(2), sp.b(2))) == sp.a(1)
        assert contraction3(wedge(sp.a(1), sp.b(1), sp.a(2))) == sp.a(2)

    def test_matches_dense_oracle(self):
        for g in (2, 3):
            sp = SymplecticSpace(g)
            rng = random.Random(5 + g)
            for _ in range(20):
                x = rand_mv(sp, 3, rng)
                assert contraction3(x) == oracle_contraction3(x)

    def test_linear(self):
        sp = SymplecticSpace(3)
        rng = random.Random(6)
        for _ in range(10):
            x, y = rand_mv(sp, 3, rng), rand_mv(sp, 3, rng)
            s = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
            assert contraction3(x + s * y) == contraction3(x) + s * contraction3(y)

    def test_well_defined_under_slot_permutation(self):
        sp = SymplecticSpace(3)
        rng = random.Random(7)
        for _ in range(10):
            u, v, w = (rand_vector(sp, rng) for _ in range(3))
            base = contraction3(wedge(u, v, w))
            assert contraction3(wedge(v, w, u)) == base
            assert contraction3(wedge(v, u, w)) == -1 * base

    def test_degree_guard(self):
        sp = SymplecticSpace(2)
        with pytest.raises(ValueError):
            contraction3(delta(sp))


class TestProjector:
    def test_golden_example(self):
        sp = SymplecticSpace(3)
        x = wedge(sp.a(1), sp.a(2), sp.b(2))
        expected = (Fraction(1, 2) * wedge(sp.a(1), sp.a(2), sp.b(2))
                    - Fraction(1, 2) * wedge(sp.a(1), sp.a(3), sp.b(3)))
        assert project_primitive(x) == expected

    def test_idempotent_and_kills_contraction(self):
        for g in (2, 3, 4):
            sp = SymplecticSpace(g)
            rng = random.Random(10 + g)
            for _ in range(25):
                x = rand_mv(sp, 3, rng)
                p = project_primitive(x)
                assert contraction3(p).is_zero()
                assert project_primitive(p) == p

    def test_fixes_primitives_kills_delta_wedge(self):
        sp = SymplecticSpace(3)
        iso = wedge(sp.a(1), sp.a(2), sp.a(3))
        assert project_primitive(iso) == iso
        rng = random.Random(11)
        for _ in range(10):
            v = rand_vector(sp, rng)
            assert project_primitive(wedge(delta(sp), v)).is_zero()

    def test_unique_decomposition(self):
        """x = primitive + delta ^ w with w = contraction3(x)/(g-1), exactly once."""
        sp = SymplecticSpace(4)
        rng = random.Random(12)
        for _ in range(15):
            x = rand_mv(sp, 3, rng)
            p = project_primitive(x)
            w = Fraction(1, sp.genus - 1) * contraction3(x)
            assert p + wedge(delta(sp), w) == x
            # the complement piece determines w: delta ^ w = 0 forces w = 0
            if not w.is_zero():
                assert not wedge(delta(sp), w).is_zero()

    def test_everything_degenerate_at_genus_two(self):
        sp = SymplecticSpace(2)
        rng = random.Random(13)
        for _ in range(10):
            assert project_primitive(rand_mv(sp, 3, rng)).is_zero()

    def test_is_primitive(self):
        sp = SymplecticSpace(3)
        assert is_primitive(wedge(sp.a(1), sp.a(2), sp.b(3)))
        assert not is_primitive(wedge(sp.a(1), sp.a(2), sp.b(2)))


class TestPrimitiveRank:
    def test_frozen_values_two_ways(self):
        for g, expected in ((2, 0), (3, 14), (4, 48)):
            sp = SymplecticSpace(g)
            r1, r2 = primitive_rank_two_ways(sp)
            assert r1 == r2 == expected == comb(2 * g, 3) - 2 * g
            assert primitive_rank(sp) == expected

    def test_primitive_basis_spans(self):
        sp = SymplecticSpace(3)
        basis = primitive_basis(sp)
        assert len(basis) == 14
        assert all(is_primitive(x) for x in basis)

    def test_isotropic_family_is_primitive(self):
        for g in (2, 3, 4):
            sp = SymplecticSpace(g)
            for x in isotropic_spanning_wedges(sp):
                assert is_primitive(x)


class TestSym2:
    def test_product_normalization(self):
        sp = SymplecticSpace(2)
        s = sym_product(sp.a(1), sp.b(1))
        assert s == sym_product(sp.b(1), sp.a(1))
        assert s.terms == {(0, 2): Fraction(1)}
        sq = sym_product(sp.a(1), sp.a(1))
        assert sq.terms == {(0, 0): Fraction(1)}

    def test_bilinear(self):
        sp = SymplecticSpace(3)
        rng = random.Random(14)
        for _ in range(10):
            u, v, w = (rand_vector(sp, rng) for _ in range(3))
            s = Fraction(rng.randint(-3, 3))
            assert sym_product(u + s * v, w) == sym_product(u, w) + s * sym_product(v, w)

    def test_algebra_ops(self):
        sp = SymplecticSpace(2)
        s = sym_product(sp.a(1), sp.b(2))
        assert (s - s).is_zero()
        assert (2 * s).terms[(0, 3)] == 2
        assert Sym2Element.zero(sp).is_zero()
