import pytest

from bruhat_atlas import parabolic
from bruhat_atlas.errors import InputError
from bruhat_atlas.galois import definition_degree, galois_orbits, orbit_poset
from bruhat_atlas.rootdata import identity_automorphism, validate_automorphism
from conftest import group_of


def flip(group):
    return validate_automorphism(list(reversed(range(group.n))), group.cartan)


class TestDefinitionDegree:
    def test_identity_always_one(self, a2):
        phi = identity_automorphism(a2.cartan)
        for J in [frozenset(), frozenset({0}), frozenset({0, 1})]:
            assert definition_degree(J, phi) == 1

    def test_a2_flip(self, a2):
        assert definition_degree(frozenset({1}), flip(a2)) == 2
        assert definition_degree(frozenset({0, 1}), flip(a2)) == 1

    def test_empty_set_fixed(self, a1a1):
        swap = validate_automorphism([1, 0], a1a1.cartan)
        assert definition_degree(frozenset(), swap) == 1

    def test_divides_order(self):
        g = group_of("D4")
        tri = validate_automorphism([2, 1, 3, 0], g.cartan)
        for J in [frozenset({0}), frozenset({1}), frozenset({0, 2}), frozenset({0, 2, 3})]:
            assert tri.order % definition_degree(J, tri) == 0


class TestOrbits:
    def test_identity_generator_gives_singletons(self, a2):
        phi = identity_automorphism(a2.cartan)
        orbits = galois_orbits(a2, a2.elements(), phi)
        assert all(len(o) == 1 for o in orbits)

    def test_hilbert_swap(self, a1a1):
        swap = validate_automorphism([1, 0], a1a1.cartan)
        orbits = galois_orbits(a1a1, a1a1.elements(), swap)
        assert sorted(len(o) for o in orbits) == [1, 1, 2]

    def test_unstable_set_rejected(self, a1a1):
        swap = validate_automorphism([1, 0], a1a1.cartan)
        with pytest.raises(InputError, match="stable"):
            galois_orbits(a1a1, [a1a1.identity, a1a1.simple[0]], swap)

    def test_orbit_lengths_constant(self):
        g = group_of("D4")
        tri = validate_automorphism([2, 1, 3, 0], g.cartan)
        for orbit in galois_orbits(g, g.elements(), tri):
            assert len({w.length for w in orbit}) == 1


class TestOrbitPoset:
    def test_hilbert_chain(self, a1a1):
        swap = validate_automorphism([1, 0], a1a1.cartan)
        poset = orbit_poset(a1a1, galois_orbits(a1a1, a1a1.elements(), swap))
        assert len(poset) == 3
        assert [o[0].length for o in poset.orbits] == [0, 1, 2]
        for a in range(3):
            for b in range(3):
                assert poset.leq[a][b] == (a <= b)
        assert poset.maximal_ids() == [2]

    def test_singleton_orbits_restrict_bruhat(self, a2):
        phi = identity_automorphism(a2.cartan)
        poset = orbit_poset(a2, galois_orbits(a2, a2.elements(), phi))
        for a, x in enumerate(poset.reps):
            for b, y in enumerate(poset.reps):
                assert poset.leq[a][b] == a2.bruhat_leq(x, y)

    def test_one_orbit_poset(self, a1a1):
        swap = validate_automorphism([1, 0], a1a1.cartan)
        poset = orbit_poset(a1a1, [[a1a1.simple[0], a1a1.simple[1]]])
        assert len(poset) == 1 and poset.leq == ((True,),)

    def test_quotient_map_monotone(self):
        g = group_of("A2")
        phi = flip(g)
        J = frozenset()
        K = frozenset()
        reps = parabolic.min_double_reps(g, J, K)
        orbits = galois_orbits(g, reps, phi)
        poset = orbit_poset(g, orbits)
        index = {w: i for i, o in enumerate(poset.orbits) for w in o}
        for x in reps:
            for y in reps:
                if g.bruhat_leq(x, y):
                    assert poset.leq[index[x]][index[y]]

    def test_max_orbit_is_singleton(self):
        g = group_of("A2")
        phi = flip(g)
        reps = parabolic.min_double_reps(g, frozenset(), frozenset())
        poset = orbit_poset(g, galois_orbits(g, reps, phi))
        (top,) = poset.maximal_ids()
        assert len(poset.orbits[top]) == 1
