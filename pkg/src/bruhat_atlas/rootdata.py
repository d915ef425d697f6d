"""Classical Dynkin diagrams, Cartan matrices, positive roots, diagram symmetries.

Convention used throughout: the Cartan matrix entry ``a[i][j]`` is the pairing
of the j-th simple root against the i-th simple coroot.  Nodes are numbered
0..n-1 globally, consecutive within each factor, Bourbaki order inside a
factor; for a type-C factor the last node carries the long root.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import factorial

from .errors import BoundError, InputError

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


def _positive_root_count(letter: str, rank: int) -> int:
    if letter == "A":
        return rank * (rank + 1) // 2
    if letter in ("B", "C"):
        return rank * rank
    return rank * (rank - 1)  # D


def _weyl_order(letter: str, rank: int) -> int:
    if letter == "A":
        return factorial(rank + 1)
    if letter in ("B", "C"):
        return 2**rank * factorial(rank)
    return 2 ** (rank - 1) * factorial(rank)  # D


@dataclass(frozen=True)
class DynkinSpec:
    """An ordered product of classical factors, e.g. C2 or A1 x A1."""

    factors: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if not self.factors:
            raise InputError("at least one factor required")
        for pos, (letter, rank) in enumerate(self.factors):
            if letter not in _MIN_RANK:
                raise InputError(
                    f"factor {pos}: type {letter!r} not supported; only A, B, C, D"
                )
            if not isinstance(rank, int) or rank < _MIN_RANK[letter]:
                raise InputError(
                    f"factor {pos}: type {letter} needs rank >= {_MIN_RANK[letter]}, "
                    f"got {rank!r}"
                )

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.factors)

    @property
    def factor_ranges(self) -> tuple[range, ...]:
        out, start = [], 0
        for _, r in self.factors:
            out.append(range(start, start + r))
            start += r
        return tuple(out)

    @property
    def weyl_order(self) -> int:
        return reduce(lambda a, b: a * b, (_weyl_order(t, r) for t, r in self.factors))

    @property
    def positive_root_count(self) -> int:
        return sum(_positive_root_count(t, r) for t, r in self.factors)

    def describe(self) -> str:
        return " x ".join(f"{t}{r}" for t, r in self.factors)


@dataclass(frozen=True)
class CartanMatrix:
    """Integer Cartan matrix, block-diagonal across the factors of ``spec``."""

    spec: DynkinSpec
    entries: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class PositiveRootTable:
    """All positive roots in simple-root coordinates."""

    roots: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.roots)

    def by_factor(self, spec: DynkinSpec) -> list[list[tuple[int, ...]]]:
        groups = [[] for _ in spec.factors]
        for root in self.roots:
            for fi, rng in enumerate(spec.factor_ranges):
                if any(root[i] for i in rng):
                    groups[fi].append(root)
                    break
        return groups


@dataclass(frozen=True)
class DiagramAutomorphism:
    """A node permutation preserving the Cartan matrix, with its order."""

    perm: tuple[int, ...]
    order: int

    def __call__(self, i: int) -> int:
        return self.perm[i]

    def apply_subset(self, subset: frozenset[int]) -> frozenset[int]:
        return frozenset(self.perm[i] for i in subset)

    def power(self, k: int) -> "DiagramAutomorphism":
        n = len(self.perm)
        p = tuple(range(n))
        for _ in range(k % self.order):
            p = tuple(self.perm[i] for i in p)
        return DiagramAutomorphism(p, _perm_order(p))

    @property
    def is_identity(self) -> bool:
        return all(self.perm[i] == i for i in range(len(self.perm)))


@dataclass(frozen=True)
class CocharSpec:
    """A cocharacter given through its pairings with the simple roots."""

    pairings: tuple[int, ...]

    def __post_init__(self):
        if any(m < 0 for m in self.pairings):
            raise InputError(f"pairings must be >= 0 (dominance), got {self.pairings}")


def cartan_from_spec(spec: DynkinSpec) -> CartanMatrix:
    """Build the standard block-diagonal Cartan matrix for ``spec``."""
    n = spec.rank
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    for (letter, rank), rng in zip(spec.factors, spec.factor_ranges):
        lo = rng.start
        edges = []
        if letter == "D":
            edges = [(lo + i, lo + i + 1) for i in range(rank - 2)]
            edges.append((lo + rank - 3, lo + rank - 1))
        else:
            edges = [(lo + i, lo + i + 1) for i in range(rank - 1)]
        for i, j in edges:
            a[i][j] = a[j][i] = -1
        # last edge of B/C is the double bond; the long root sits on the
        # last node for C, the short root there for B
        if letter == "C":
            a[lo + rank - 2][lo + rank - 1] = -2
        elif letter == "B":
            a[lo + rank - 1][lo + rank - 2] = -2
    return CartanMatrix(spec, tuple(tuple(row) for row in a))


def reflect(cartan: CartanMatrix, i: int, vec: tuple[int, ...]) -> tuple[int, ...]:
    """Apply the i-th simple reflection to a root coordinate vector."""
    row = cartan.entries[i]
    c = sum(row[k] * vec[k] for k in range(cartan.n) if vec[k])
    if not c:
        return vec
    out = list(vec)
    out[i] -= c
    return tuple(out)


def positive_roots(cartan: CartanMatrix) -> PositiveRootTable:
    """Enumerate the positive roots by reflection closure from the simples."""
    n = cartan.n
    expected = cartan.spec.positive_root_count
    simples = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    found = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for root in frontier:
            for i in range(n):
                img = reflect(cartan, i, root)
                if img not in found and all(c >= 0 for c in img):
                    found.add(img)
                    nxt.append(img)
        if len(found) > expected:
            raise BoundError(
                f"root closure exceeded the classical bound {expected}; "
                "matrix is not of the declared finite type"
            )
        frontier = nxt
    if len(found) != expected:
        raise BoundError(
            f"root closure produced {len(found)} roots, expected {expected}"
        )
    roots = sorted(found, key=lambda r: (sum(r), r))
    return PositiveRootTable(tuple(roots))


def _perm_order(perm: tuple[int, ...]) -> int:
    order = 1
    seen = set()
    for start in range(len(perm)):
        if start in seen:
            continue
        k, j = 0, start
        while True:
            j = perm[j]
            k += 1
            seen.add(j)
            if j == start:
                break
        order = order * k // _gcd(order, k)
    return order


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def validate_automorphism(perm, cartan: CartanMatrix) -> DiagramAutomorphism:
    """Check that ``perm`` preserves the Cartan matrix and compute its order."""
    n = cartan.n
    perm = tuple(perm)
    if sorted(perm) != list(range(n)):
        raise InputError(f"permutation {perm} is not a bijection on 0..{n - 1}")
    a = cartan.entries
    for i in range(n):
        for j in range(n):
            if a[perm[i]][perm[j]] != a[i][j]:
                raise InputError(
                    f"permutation does not preserve the Cartan matrix at "
                    f"({i},{j}): a[{perm[i]}][{perm[j]}]={a[perm[i]][perm[j]]} "
                    f"!= a[{i}][{j}]={a[i][j]}"
                )
    return DiagramAutomorphism(perm, _perm_order(perm))


def identity_automorphism(cartan: CartanMatrix) -> DiagramAutomorphism:
    return DiagramAutomorphism(tuple(range(cartan.n)), 1)


def pairing(mu: CocharSpec, root: tuple[int, ...]) -> int:
    """Pair a cocharacter with a root written in simple-root coordinates."""
    if len(mu.pairings) != len(root):
        raise InputError(
            f"pairing vector has length {len(mu.pairings)}, root has {len(root)}"
        )
    return sum(c * m for c, m in zip(root, mu.pairings))
