import pytest

from bruhat_atlas.atlas import (
    PELCase,
    build_atlas,
    closure_set,
    derive_J,
    derive_K,
    eo_fiber,
    moduli_dimension,
    mu_ordinary_report,
    siegel_case,
    siegel_dimension,
    siegel_identify,
)
from bruhat_atlas.errors import InputError
from bruhat_atlas.rootdata import (
    CocharSpec,
    DynkinSpec,
    cartan_from_spec,
    identity_automorphism,
    validate_automorphism,
)
from conftest import group_of


def make_case(factors, perm=None, mu=None, J=None, **options):
    spec = DynkinSpec(tuple(factors))
    cartan = cartan_from_spec(spec)
    phi = (
        identity_automorphism(cartan)
        if perm is None
        else validate_automorphism(perm, cartan)
    )
    return PELCase(
        spec=spec,
        phi=phi,
        mu=None if mu is None else CocharSpec(tuple(mu)),
        J=None if J is None else frozenset(J),
        **options,
    )


def hilbert_atlas():
    return build_atlas(make_case([("A", 1), ("A", 1)], perm=[1, 0], mu=(1, 1)))


def gu21_inert_atlas():
    return build_atlas(make_case([("A", 2)], perm=[1, 0], J={1}))


class TestDeriveJK:
    def test_central_mu(self, a2):
        assert derive_J(a2, CocharSpec((0, 0))) == {0, 1}

    def test_c2_siegel(self, c2):
        assert derive_J(c2, CocharSpec((0, 1))) == {0}

    def test_a2_signature_one_two(self, a2):
        assert derive_J(a2, CocharSpec((0, 1))) == {0}

    def test_non_minuscule_rejected(self, c2):
        with pytest.raises(InputError, match="minuscule"):
            derive_J(c2, CocharSpec((1, 0)))

    def test_non_minuscule_allowed_without_check(self, c2):
        assert derive_J(c2, CocharSpec((1, 0)), minuscule_check=False) == {1}

    def test_derive_k(self, a2):
        ident = identity_automorphism(a2.cartan)
        fl = validate_automorphism([1, 0], a2.cartan)
        assert derive_K(a2, frozenset(), ident) == frozenset()
        assert derive_K(a2, {0}, ident) == {1}
        assert derive_K(a2, {1}, fl) == {1}


class TestFiberAndDimension:
    def test_saturated_fiber_is_singleton(self, c2):
        assert eo_fiber(c2, c2.identity, {0}, {0}) == [(c2.identity, 0)]

    def test_c2_siegel_middle_fiber(self, c2):
        fiber = eo_fiber(c2, c2.simple[1], {0}, {0})
        assert [l for _, l in fiber] == [1, 2]

    def test_a2_identity_fiber(self, a2):
        fiber = eo_fiber(a2, a2.identity, {0}, {1})
        assert [l for _, l in fiber] == [0, 1]

    def test_fibers_partition_left_reps(self):
        from bruhat_atlas import parabolic

        for name, J, K in [("C3", {0, 1}, {0, 1}), ("A3", {0}, {2}), ("D4", {1}, {1})]:
            g = group_of(name)
            left = set(parabolic.min_left_reps(g, J))
            seen = set()
            for x in parabolic.min_double_reps(g, J, K):
                fiber = {w for w, _ in eo_fiber(g, x, J, K)}
                assert fiber <= left
                assert not (fiber & seen)
                seen |= fiber
            assert seen == left

    def test_moduli_dimension(self, c2, a2):
        assert moduli_dimension(c2, {0, 1}) == 0
        assert moduli_dimension(c2, {0}) == 3
        assert moduli_dimension(a2, {1}) == 2


class TestMuOrdinary:
    def test_identity_always_true(self, c2):
        report = mu_ordinary_report({0}, identity_automorphism(c2.cartan))
        assert report.verdict is True
        assert set(report.flags.values()) == {True}

    def test_a2_flip_false(self, a2):
        report = mu_ordinary_report({1}, validate_automorphism([1, 0], a2.cartan))
        assert report.verdict is False
        assert set(report.flags.values()) == {False}


class TestBuildAtlas:
    def test_siegel_g2(self):
        a = build_atlas(siegel_case(2))
        assert sorted(s.dim for s in a.strata) == [0, 2, 3]
        assert sorted(len(s.eo_fiber) for s in a.strata) == [1, 1, 2]
        # closure order is a chain
        assert [s.closure for s in a.strata] == [[0], [0, 1], [0, 1, 2]]
        assert a.mu_ordinary.verdict is True
        assert [s.siegel_a for s in a.strata] == [2, 1, 0]

    def test_hilbert(self):
        a = hilbert_atlas()
        assert [(s.dim, len(s.orbit), s.single_eo) for s in a.strata] == [
            (0, 1, True),
            (1, 2, True),
            (2, 1, True),
        ]
        assert a.degree == 1
        assert a.mu_ordinary.verdict is True

    def test_gu21_inert(self):
        a = gu21_inert_atlas()
        assert a.degree == 2
        assert a.mu_ordinary.verdict is False
        assert sorted(s.dim for s in a.strata) == [0, 2]
        top = next(s for s in a.strata if s.is_maximal)
        assert [l for _, l in top.eo_fiber] == [1, 2]

    def test_atlas_counting_invariants(self):
        from bruhat_atlas import parabolic

        for a in [build_atlas(siegel_case(3)), hilbert_atlas(), gu21_inert_atlas()]:
            doubles = parabolic.min_double_reps(a.group, a.J, a.K)
            left = parabolic.min_left_reps(a.group, a.J)
            assert sum(len(s.orbit) for s in a.strata) == len(doubles)
            assert sum(len(s.orbit) * len(s.eo_fiber) for s in a.strata) == len(left)

    def test_single_stratum_case(self, a2):
        a = build_atlas(make_case([("A", 2)], mu=(0, 0)))
        assert len(a.strata) == 1
        assert a.strata[0].is_maximal and a.strata[0].dim == 0

    def test_requires_exactly_one_of_mu_and_j(self):
        with pytest.raises(InputError):
            make_case([("A", 2)])
        with pytest.raises(InputError):
            make_case([("A", 2)], mu=(0, 1), J={0})

    def test_non_minuscule_note(self):
        a = build_atlas(make_case([("C", 2)], mu=(1, 0), minuscule_check=False))
        assert any("minuscule" in note for note in a.notes)

    def test_closure_set(self):
        a = build_atlas(siegel_case(2))
        assert closure_set(a, 0) == [0]
        top = next(i for i, s in enumerate(a.strata) if s.is_maximal)
        assert closure_set(a, top) == [0, 1, 2]
        with pytest.raises(InputError):
            closure_set(a, 99)

    def test_d4_triality_case(self):
        # the triality cycle moves node 0, so J takes three steps to return
        a = build_atlas(make_case([("D", 4)], perm=[2, 1, 3, 0], J={0}))
        assert a.degree == 3
        assert a.mu_ordinary.verdict is False
        top = next(s for s in a.strata if s.is_maximal)
        assert len(top.orbit) == 1 and top.dim == a.moduli_dim


class TestSiegel:
    @pytest.mark.parametrize("g", [1, 2, 3])
    def test_identify(self, g):
        ident = siegel_identify(g)
        assert [e["a"] for e in ident.entries] == list(range(g + 1))
        assert [e["dim"] for e in ident.entries] == [
            siegel_dimension(g, i) for i in range(g + 1)
        ]
        assert ident.total_order

    def test_g3_chain(self):
        a = siegel_identify(3).atlas
        n = len(a.strata)
        chains = sum(
            a.orbit_poset.leq[i][j] for i in range(n) for j in range(n) if i != j
        )
        assert chains == n * (n - 1) // 2  # total order

    def test_dimension_formula(self):
        assert [siegel_dimension(2, i) for i in range(3)] == [3, 2, 0]
        assert [siegel_dimension(3, i) for i in range(4)] == [6, 5, 3, 0]

    def test_bad_genus(self):
        with pytest.raises(InputError):
            siegel_case(0)
