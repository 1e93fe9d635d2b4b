# tests/ring_extract/test_ring_extract.py

import pytest

from cohomod.errors import ResolutionTooShortError
from cohomod.modres import Cocycle, cup_product
from cohomod.ring_extract import (
    advance,
    elab_restrictions,
    extract,
    hilbert_audit,
    presentation,
    to_cocycle,
    to_polynomial,
)

# ==============================================================================
# A. Generators and relations
# ==============================================================================


class TestExtract:
    """Presentations read off the resolution degree by degree."""

    def test_cyclic_two(self, z2, caps):
        state = extract(z2, 4, caps)
        assert state.base.generators == (("x1", 1),)
        assert state.relations == ()
        assert state.base.hilbert(4) == [1, 1, 1, 1, 1]

    def test_klein(self, klein, caps):
        state = extract(klein, 3, caps)
        assert state.base.degrees == (1, 1)
        assert state.relations == ()
        assert state.base.hilbert(3) == [1, 2, 3, 4]

    def test_cyclic_four(self, z4, caps):
        state = extract(z4, 3, caps)
        assert state.base.generators == (("x1", 1), ("x2", 2))
        x1 = state.base.gen(0)
        assert state.relations == (x1 * x1,)

    def test_dihedral(self, d8, caps):
        state = extract(d8, 3, caps)
        assert state.base.degrees == (1, 1, 2)
        assert len(state.relations) == 1
        assert state.relations[0].homogeneous_degree() == 2

    def test_quaternion(self, q8, caps):
        state = extract(q8, 4, caps)
        assert state.base.degrees == (1, 1, 4)
        assert sorted(r.homogeneous_degree() for r in state.relations) == [2, 3]
        assert state.base.hilbert(4) == [1, 2, 2, 1, 1]

    def test_odd_prime(self, z3, caps):
        state = extract(z3, 4, caps)
        assert state.base.degrees == (1, 2)
        assert state.base.hilbert(4) == [1, 1, 1, 1, 1]

    def test_advance_matches_direct_extraction(self, klein, caps):
        short = extract(klein, 3, caps)
        stepped = advance(extract(klein, 1, caps), 3, short.resolution)
        assert stepped.base.generators == short.base.generators
        assert stepped.through == 3

    def test_advance_needs_resolution(self, klein, caps):
        state = extract(klein, 2, caps)
        with pytest.raises(ResolutionTooShortError):
            advance(state, 3)

    def test_presentation(self, klein, caps):
        tau = presentation(extract(klein, 2, caps))
        assert tau.N == 2
        assert tau.base.degrees == (1, 1)


class TestCorrespondence:
    """Moving between polynomials and cocycles."""

    def test_products_agree_with_cup_products(self, klein, caps):
        state = extract(klein, 2, caps)
        x1, x2 = state.base.gen(0), state.base.gen(1)
        a, b = (g.cocycle(2) for g in state.generators)
        assert to_cocycle(state, x1 * x2, 2) == cup_product(a, b, state.resolution)

    def test_to_polynomial_inverts_to_cocycle(self, d8, caps):
        state = extract(d8, 3, caps)
        for z in Cocycle.basis(3, state.resolution):
            poly = to_polynomial(state, z.vector, 3)
            assert to_cocycle(state, poly, 3) == z

    def test_beyond_extraction(self, klein, caps):
        state = extract(klein, 2, caps)
        with pytest.raises(ResolutionTooShortError):
            to_polynomial(state, [1, 0, 0, 0], 3)
        with pytest.raises(ResolutionTooShortError):
            to_cocycle(state, state.base.gen(0), 3)


# ==============================================================================
# B. Restriction data and audits
# ==============================================================================


class TestRestrictions:
    """Images of the generators on maximal elementary abelian subgroups."""

    def test_cyclic_four(self, z4, caps):
        state = extract(z4, 2, caps)
        (data,) = elab_restrictions(state, caps)
        assert data.rank == 1
        x1_image, x2_image = data.generator_images
        assert x1_image.is_zero()
        assert not x2_image.is_zero()

    def test_dihedral(self, d8, caps):
        state = extract(d8, 3, caps)
        data = elab_restrictions(state, caps)
        assert len(data) == 2
        for e in data:
            assert e.rank == 2
            assert len(e.generator_images) == 3
            assert len(e.subgroups) == 3
            assert all(w.rank == 1 for w in e.subgroups)

    def test_cache_reused(self, klein, caps):
        cache = {}
        state = extract(klein, 2, caps)
        elab_restrictions(state, caps, cache)
        size = len(cache)
        elab_restrictions(state, caps, cache)
        assert len(cache) == size


class TestHilbertAudit:
    """Hilbert function against the ranks beyond the extracted degree."""

    def test_klein_agrees(self, klein, caps):
        assert hilbert_audit(extract(klein, 3, caps), 2, caps) == []

    def test_quaternion_needs_relations(self, q8, caps):
        state = extract(q8, 1, caps)
        assert hilbert_audit(state, 2, caps) == [(2, 3, 2), (3, 4, 1)]
