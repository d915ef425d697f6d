"""Frobenius orbits on double-coset representatives and the quotient poset.

The Galois group fixing a parabolic type J acts through the cyclic group
generated by phi^d, where d is the smallest power of the Frobenius diagram
symmetry fixing J.  Only that cyclic action on a finite set is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import WeylElement, WeylGroup
from .errors import ConsistencyError, InputError
from .rootdata import DiagramAutomorphism


def definition_degree(J, phi: DiagramAutomorphism) -> int:
    """Smallest d >= 1 with phi^d(J) = J; divides the order of phi."""
    J = frozenset(J)
    current = J
    for d in range(1, phi.order + 1):
        current = phi.apply_subset(current)
        if current == J:
            if phi.order % d:  # pragma: no cover
                raise ConsistencyError("stabilizer degree does not divide the order")
            return d
    raise ConsistencyError("phi^order fixed nothing")  # pragma: no cover


def galois_orbits(
    group: WeylGroup, elements: list[WeylElement], generator: DiagramAutomorphism
) -> list[list[WeylElement]]:
    """Partition ``elements`` into orbits of the cyclic group of ``generator``."""
    pool = set(elements)
    orbits = []
    for w in elements:
        if w not in pool:
            continue
        orbit = [w]
        pool.discard(w)
        current = group.apply_automorphism(generator, w)
        while current != w:
            if current not in pool:
                raise InputError(
                    "element set is not stable under the generator; "
                    "J/K bookkeeping is inconsistent"
                )
            orbit.append(current)
            pool.discard(current)
            current = group.apply_automorphism(generator, current)
        orbits.append(orbit)
    return orbits


@dataclass
class OrbitPoset:
    """Orbits of double-coset representatives with the induced Bruhat order.

    ``leq[a][b]`` holds when some member of orbit a sits below some member of
    orbit b.  Orbits are sorted by (common length, representative word) and
    each representative is the member with the smallest reduced word.
    """

    orbits: list[list[WeylElement]]
    reps: list[WeylElement]
    leq: tuple[tuple[bool, ...], ...]

    def __len__(self) -> int:
        return len(self.orbits)

    def maximal_ids(self) -> list[int]:
        n = len(self.orbits)
        return [
            b
            for b in range(n)
            if not any(self.leq[b][a] and a != b for a in range(n))
        ]


def orbit_poset(group: WeylGroup, orbits: list[list[WeylElement]]) -> OrbitPoset:
    """Quotient the Bruhat order by the orbit partition."""
    for orbit in orbits:
        if len({w.length for w in orbit}) != 1:  # pragma: no cover
            raise ConsistencyError("orbit members have distinct lengths")
    ordered = []
    for orbit in orbits:
        members = sorted(orbit, key=lambda w: tuple(group.reduced_word(w)))
        ordered.append(members)
    ordered.sort(key=lambda o: (o[0].length, tuple(group.reduced_word(o[0]))))
    reps = [o[0] for o in ordered]
    n = len(ordered)
    leq = []
    for a in range(n):
        row = []
        for b in range(n):
            # equivariance of the action lets one side be pinned to the rep
            row.append(any(group.bruhat_leq(w, reps[b]) for w in ordered[a]))
        leq.append(tuple(row))
    for a in range(n):
        for b in range(n):
            if a != b and leq[a][b] and leq[b][a]:  # pragma: no cover
                raise ConsistencyError(
                    f"orbit order is not antisymmetric between {a} and {b}"
                )
    return OrbitPoset(ordered, reps, tuple(leq))
