"""The randomized identity suite and its samplers."""

from __future__ import annotations

import random
from math import gcd

import pytest

from torelli import SymplecticSpace, intersection, is_primitive
from torelli.checks import (random_bounding_pair, random_multivector,
                            random_primitive, random_primitive_integral_vector,
                            random_sym2, random_transvection, random_vector,
                            respecify, run_invariant_checks)

EXPECTED_CHECKS = (
    "action-unipotent",
    "bounding-pair-trivial-on-homology",
    "contraction-well-defined",
    "johnson-contraction-genus-multiple",
    "johnson-cross-side-identity",
    "johnson-respec-invariant",
    "omega3-antisymmetric",
    "omega3-primitive-gram-rank",
    "omega3-q2-transvection-invariant",
    "omega3-splitting-orthogonal",
    "phi-sees-only-primitive-part",
    "phi-symmetric",
    "phi-transvection-equivariant",
    "primitive-rank-two-ways",
    "projector-idempotent",
    "projector-kills-contraction",
    "projector-normalization",
    "q2-represents-pairing",
    "q2-symmetric",
    "render-parse-round-trip",
    "splitting-reconstructs",
    "transvection-symplectic",
    "variation-linear-in-top",
    "variation-nontrivial-on-builtin-pair",
    "wedge-alternating",
    "wedge-associative",
    "wedge-bilinear",
    "wedge-graded-commutation",
)


class TestSuite:
    def test_every_check_passes_at_reference_genus(self):
        verdicts = run_invariant_checks(genus=3, seed=0, rounds=6)
        assert all(v.passed for v in verdicts), \
            [v.name for v in verdicts if not v.passed]
        assert tuple(v.name for v in verdicts) == EXPECTED_CHECKS

    @pytest.mark.parametrize("genus,seed", [(2, 1), (3, 7), (4, 2)])
    def test_passes_across_genera_and_seeds(self, genus, seed):
        verdicts = run_invariant_checks(genus=genus, seed=seed, rounds=4)
        assert all(v.passed for v in verdicts), \
            [v.name for v in verdicts if not v.passed]

    def test_deterministic_in_seed(self):
        a = run_invariant_checks(genus=3, seed=5, rounds=3)
        b = run_invariant_checks(genus=3, seed=5, rounds=3)
        assert a == b


class TestSamplers:
    def test_vectors_land_in_space(self):
        sp = SymplecticSpace(3)
        rng = random.Random(70)
        for _ in range(20):
            assert random_vector(sp, rng).space == sp
            v = random_primitive_integral_vector(sp, rng)
            assert not v.is_zero()
            assert gcd(*(int(c) for c in v.coords)) == 1

    def test_primitive_sampler(self):
        sp = SymplecticSpace(3)
        rng = random.Random(71)
        for _ in range(15):
            assert is_primitive(random_primitive(sp, rng))

    def test_multivector_degrees(self):
        sp = SymplecticSpace(2)
        rng = random.Random(72)
        for degree in (1, 2, 3):
            assert random_multivector(sp, degree, rng).degree == degree

    def test_sym2_symmetric_keys(self):
        sp = SymplecticSpace(3)
        rng = random.Random(73)
        for _ in range(10):
            s = random_sym2(sp, rng)
            assert all(i <= j for i, j in s.terms)

    def test_transvection_directions_nonzero(self):
        sp = SymplecticSpace(3)
        rng = random.Random(74)
        for _ in range(20):
            t = random_transvection(sp, rng)
            assert not t.direction.is_zero()

    def test_bounding_pairs_always_valid(self):
        rng = random.Random(75)
        for g in (2, 3, 4, 5):
            sp = SymplecticSpace(g)
            for _ in range(10):
                b = random_bounding_pair(sp, rng)
                assert b.side1.genus + b.side2.genus + 1 == g
                assert (b.side1.d + b.side2.d).is_zero()
                for e, f in b.side1.pairs + b.side2.pairs:
                    assert intersection(e, f) == 1

    def test_respecify_keeps_boundary_up_to_swap(self):
        sp = SymplecticSpace(3)
        rng = random.Random(76)
        b = random_bounding_pair(sp, rng)
        same = respecify(b, rng)
        assert same.side1.d == b.side1.d
        swapped = respecify(b, rng, swap=True)
        assert swapped.side1.d == b.side2.d
