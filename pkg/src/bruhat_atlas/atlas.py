"""Stratification atlases: strata, dimensions, closures, fibers, ordinarity.

An input case is a classical diagram, a Frobenius diagram symmetry, and either
a cocharacter pairing vector or the parabolic type J directly.  The atlas
lists one record per Frobenius orbit of minimal double-coset representatives,
carrying the stratum dimension, the finer fiber decomposition, and the closure
relation, together with the ordinarity verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import parabolic
from .coxeter import WeylElement, WeylGroup, DEFAULT_BOUND
from .errors import ConsistencyError, InputError
from .galois import OrbitPoset, definition_degree, galois_orbits, orbit_poset
from .rootdata import (
    CocharSpec,
    DiagramAutomorphism,
    DynkinSpec,
    cartan_from_spec,
    identity_automorphism,
    pairing,
    positive_roots,
    validate_automorphism,
)


@dataclass(frozen=True)
class PELCase:
    """A full input: diagram, Frobenius symmetry, and mu-pairings or J."""

    spec: DynkinSpec
    phi: DiagramAutomorphism
    mu: CocharSpec | None = None
    J: frozenset[int] | None = None
    minuscule_check: bool = True
    element_bound: int = DEFAULT_BOUND

    def __post_init__(self):
        if (self.mu is None) == (self.J is None):
            raise InputError("exactly one of mu and J must be given")


@dataclass
class StratumRecord:
    rep: WeylElement
    orbit: list[WeylElement]
    dim: int
    codim: int
    eo_fiber: list[tuple[WeylElement, int]]
    single_eo: bool
    closure: list[int]
    is_maximal: bool
    siegel_a: int | None = None


@dataclass
class MuOrdinaryReport:
    verdict: bool
    flags: dict[str, bool]


@dataclass
class Atlas:
    case: PELCase
    J: frozenset[int]
    K: frozenset[int]
    degree: int
    moduli_dim: int
    strata: list[StratumRecord]
    orbit_poset: OrbitPoset
    mu_ordinary: MuOrdinaryReport
    group: WeylGroup
    notes: list[str] = field(default_factory=list)


def derive_J(group: WeylGroup, mu: CocharSpec, minuscule_check: bool = True):
    """J = indices where the pairing vector vanishes, optionally checked minuscule."""
    if len(mu.pairings) != group.n:
        raise InputError(
            f"pairing vector has length {len(mu.pairings)}, diagram rank {group.n}"
        )
    if minuscule_check:
        for root in group.pos_roots:
            value = pairing(mu, root)
            if value not in (0, 1):
                raise InputError(
                    f"cocharacter is not minuscule: root {root} pairs to {value}"
                )
    return frozenset(i for i, m in enumerate(mu.pairings) if m == 0)


def derive_K(group: WeylGroup, J, phi: DiagramAutomorphism):
    """K = opposition applied to the Frobenius image of J."""
    J = group.check_subset(J)
    K = group.opposition(phi.apply_subset(J))
    if len(K) != len(J):  # pragma: no cover
        raise ConsistencyError("opposition changed the size of the subset")
    return K


def eo_fiber(group: WeylGroup, x: WeylElement, J, K) -> list[tuple[WeylElement, int]]:
    """The finer strata inside the stratum of x: products x*y over the
    minimal representatives y of the induced subset inside W_K."""
    Jx = parabolic.induced_subset(group, x, J, K)
    out = []
    for y in parabolic.relative_left_reps(group, Jx, K):
        xy = group.multiply(x, y)
        if xy.length != x.length + y.length:  # pragma: no cover
            raise ConsistencyError("fiber product length is not additive")
        if xy.left_descents & group.check_subset(J):  # pragma: no cover
            raise ConsistencyError("fiber product left the J-minimal set")
        out.append((xy, xy.length))
    out.sort(key=lambda t: (t[1], tuple(group.reduced_word(t[0]))))
    return out


def moduli_dimension(group: WeylGroup, J) -> int:
    """length(w0) - length(w0 of J): the relative dimension available to strata."""
    J = group.check_subset(J)
    return (
        group.longest_element(range(group.n)).length - group.longest_element(J).length
    )


def conjugate_type(group: WeylGroup, x: WeylElement, J):
    """The set {k : s_k = x^-1 s_j x for some j in J}, or None when some
    conjugate is not a simple reflection."""
    J = group.check_subset(J)
    xinv = group.inverse(x)
    out = set()
    for j in J:
        conj = group.multiply(xinv, group.left_mul(j, x))
        found = None
        for k in range(group.n):
            if conj is group.simple[k]:
                found = k
                break
        if found is None:
            return None
        out.add(found)
    return frozenset(out)


def mu_ordinary_report(J, phi: DiagramAutomorphism) -> MuOrdinaryReport:
    """All equivalent readings of the ordinarity criterion carry one boolean."""
    verdict = phi.apply_subset(frozenset(J)) == frozenset(J)
    flags = {
        "frobenius_fixes_parabolic_type": verdict,
        "maximal_bruhat_equals_generic_newton": verdict,
        "reflex_completion_is_qp": verdict,
        "ordinary_locus_nonempty": verdict,
        "ordinary_equals_mu_ordinary": verdict,
    }
    return MuOrdinaryReport(verdict, flags)


def _siegel_genus(case: PELCase, J, K) -> int | None:
    """Genus when the case has the principally polarized shape, else None."""
    if len(case.spec.factors) != 1 or not case.phi.is_identity or J != K:
        return None
    letter, rank = case.spec.factors[0]
    if letter == "A" and rank == 1 and J == frozenset():
        return 1
    if letter == "C" and J == frozenset(range(rank - 1)):
        return rank
    return None


def siegel_dimension(g: int, i: int) -> int:
    return (g * (g + 1) - i * (i + 1)) // 2


def build_atlas(case: PELCase) -> Atlas:
    """Assemble the complete stratification atlas for one input case."""
    notes: list[str] = []
    cartan = cartan_from_spec(case.spec)
    phi = validate_automorphism(case.phi.perm, cartan)
    group = WeylGroup(cartan, case.element_bound)

    if case.mu is not None:
        if case.minuscule_check:
            J = derive_J(group, case.mu, minuscule_check=True)
        else:
            J = derive_J(group, case.mu, minuscule_check=False)
            if any(
                pairing(case.mu, root) not in (0, 1) for root in group.pos_roots
            ):
                notes.append(
                    "cocharacter is not minuscule; atlas computed from J only"
                )
    else:
        J = group.check_subset(case.J)

    K = derive_K(group, J, phi)
    degree = definition_degree(J, phi)
    generator = phi.power(degree)
    if generator.apply_subset(J) != J or generator.apply_subset(K) != K:
        raise ConsistencyError("stabilized types are not fixed by phi^d")  # pragma: no cover

    system = parabolic.CosetSystem(group, J, K)
    double_reps = system.double_reps
    left_reps = system.left_reps

    orbits = galois_orbits(group, double_reps, generator)
    poset = orbit_poset(group, orbits)

    moduli_dim = moduli_dimension(group, J)
    genus = _siegel_genus(case, J, K)

    top_length = max(w.length for w in double_reps)
    if sum(1 for w in double_reps if w.length == top_length) != 1:  # pragma: no cover
        raise ConsistencyError("maximal double representative is not unique")

    strata: list[StratumRecord] = []
    for sid, (orbit, rep) in enumerate(zip(poset.orbits, poset.reps)):
        _, dim = parabolic.x_upper(group, rep, J, K)
        if dim != parabolic.ell_JK(group, rep, J, K):  # pragma: no cover
            raise ConsistencyError("the two dimension formulas disagree")
        fiber = eo_fiber(group, rep, J, K)
        single_by_size = len(fiber) == 1
        single_by_conj = conjugate_type(group, rep, J) == K
        if single_by_size != single_by_conj:  # pragma: no cover
            raise ConsistencyError(
                "fiber size and conjugation criteria disagree at "
                f"{group.reduced_word(rep)}"
            )
        closure = [t for t in range(len(poset)) if poset.leq[t][sid]]
        is_max = rep.length == top_length
        siegel_a = None
        if genus is not None:
            matches = [i for i in range(genus + 1) if siegel_dimension(genus, i) == dim]
            if len(matches) != 1:  # pragma: no cover
                raise ConsistencyError("dimension does not match a unique a-number")
            siegel_a = matches[0]
        strata.append(
            StratumRecord(
                rep=rep,
                orbit=orbit,
                dim=dim,
                codim=moduli_dim - dim,
                eo_fiber=fiber,
                single_eo=single_by_size,
                closure=sorted(closure),
                is_maximal=is_max,
                siegel_a=siegel_a,
            )
        )

    _assert_atlas_invariants(group, strata, double_reps, left_reps, moduli_dim)

    return Atlas(
        case=case,
        J=J,
        K=K,
        degree=degree,
        moduli_dim=moduli_dim,
        strata=strata,
        orbit_poset=poset,
        mu_ordinary=mu_ordinary_report(J, phi),
        group=group,
        notes=notes,
    )


def _assert_atlas_invariants(group, strata, double_reps, left_reps, moduli_dim):
    if sum(len(s.orbit) for s in strata) != len(double_reps):  # pragma: no cover
        raise ConsistencyError("orbits do not partition the double representatives")
    weighted = sum(len(s.orbit) * len(s.eo_fiber) for s in strata)
    if weighted != len(left_reps):  # pragma: no cover
        raise ConsistencyError("fiber sizes do not add up to the finer index set")
    maximal = [s for s in strata if s.is_maximal]
    if len(maximal) != 1:  # pragma: no cover
        raise ConsistencyError("maximal stratum is not unique")
    top = maximal[0]
    if len(top.orbit) != 1:  # pragma: no cover
        raise ConsistencyError("maximal stratum orbit is not a singleton")
    if top.dim != moduli_dim:  # pragma: no cover
        raise ConsistencyError("maximal stratum dimension differs from the total")
    if sorted(top.closure) != list(range(len(strata))):  # pragma: no cover
        raise ConsistencyError("maximal stratum closure misses some stratum")
    for s in strata:
        if not (0 <= s.dim <= moduli_dim):  # pragma: no cover
            raise ConsistencyError("stratum dimension out of range")
        if max(length for _, length in s.eo_fiber) != s.dim:  # pragma: no cover
            raise ConsistencyError("fiber maximum length differs from the dimension")


def closure_set(atlas: Atlas, stratum_id: int) -> list[int]:
    """Ids of all strata contained in the closure of ``stratum_id``."""
    if not 0 <= stratum_id < len(atlas.strata):
        raise InputError(f"unknown stratum id {stratum_id}")
    return atlas.strata[stratum_id].closure


@dataclass
class SiegelIdentification:
    g: int
    entries: list[dict]  # each: a-number, dim, representative word
    total_order: bool
    atlas: Atlas


def siegel_case(g: int, **options) -> PELCase:
    """The principally polarized preset of genus g."""
    if g < 1:
        raise InputError(f"genus must be >= 1, got {g}")
    if g == 1:
        spec = DynkinSpec((("A", 1),))
        mu = CocharSpec((1,))
    else:
        spec = DynkinSpec((("C", g),))
        mu = CocharSpec(tuple([0] * (g - 1) + [1]))
    cartan = cartan_from_spec(spec)
    return PELCase(spec=spec, phi=identity_automorphism(cartan), mu=mu, **options)


def siegel_identify(g: int) -> SiegelIdentification:
    """Match strata to a-numbers via the closed dimension formula and check
    that the closure order reverses the a-number order."""
    atlas = build_atlas(siegel_case(g))
    group = atlas.group
    if len(atlas.strata) != g + 1:
        raise ConsistencyError(
            f"expected {g + 1} strata for genus {g}, found {len(atlas.strata)}"
        )
    expected = sorted(siegel_dimension(g, i) for i in range(g + 1))
    got = sorted(s.dim for s in atlas.strata)
    if got != expected:
        raise ConsistencyError(f"dimension multiset {got} != {expected}")
    if len(set(got)) != g + 1:  # pragma: no cover
        raise ConsistencyError("dimension values are not distinct")
    entries = []
    for s in atlas.strata:
        a = next(i for i in range(g + 1) if siegel_dimension(g, i) == s.dim)
        if s.siegel_a != a:  # pragma: no cover
            raise ConsistencyError("a-number annotation disagrees")
        entries.append({"a": a, "dim": s.dim, "rep": group.reduced_word(s.rep)})
    entries.sort(key=lambda e: e["a"])
    # order reversal: x below x' exactly when the a-number is at least as big
    total = True
    for s in atlas.strata:
        for t in atlas.strata:
            leq = group.bruhat_leq(s.rep, t.rep)
            if leq != (s.siegel_a >= t.siegel_a):
                total = False
    if not total:
        raise ConsistencyError("closure order does not reverse the a-number order")
    return SiegelIdentification(g=g, entries=entries, total_order=total, atlas=atlas)
