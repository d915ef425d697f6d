"""Minimal coset/double-coset representatives and the Howlett length bookkeeping.

Notation: for subsets J, K of the node set, ``left_reps`` is the set of
elements with no left descent in J (shortest in their coset W_J w),
``double_reps`` the set shortest in W_J w W_K.  For a double representative x,
``induced_subset`` is K intersected with the x-conjugates of J, ``x_lower`` the
longest element of the corresponding relative coset set inside W_K, and
``x_upper = x * x_lower`` realizes the stratum dimension.
"""

from __future__ import annotations

from functools import cached_property

from .coxeter import WeylElement, WeylGroup
from .errors import ConsistencyError, InputError


class CosetSystem:
    """Cached minimal-representative lists for a fixed (group, J, K)."""

    def __init__(self, group: WeylGroup, J, K):
        self.group = group
        self.J = group.check_subset(J)
        self.K = group.check_subset(K)

    @cached_property
    def left_reps(self) -> list[WeylElement]:
        return min_left_reps(self.group, self.J)

    @cached_property
    def right_reps(self) -> list[WeylElement]:
        return min_right_reps(self.group, self.K)

    @cached_property
    def double_reps(self) -> list[WeylElement]:
        return min_double_reps(self.group, self.J, self.K)


def min_left_reps(group: WeylGroup, J) -> list[WeylElement]:
    """Shortest elements of the cosets W_J w: empty left-J descent set."""
    J = group.check_subset(J)
    return [w for w in group.elements() if not (w.left_descents & J)]


def min_right_reps(group: WeylGroup, K) -> list[WeylElement]:
    K = group.check_subset(K)
    return [w for w in group.elements() if not (w.right_descents & K)]


def min_double_reps(group: WeylGroup, J, K) -> list[WeylElement]:
    """Shortest elements of the double cosets W_J w W_K."""
    J = group.check_subset(J)
    K = group.check_subset(K)
    return [
        w
        for w in group.elements()
        if not (w.left_descents & J) and not (w.right_descents & K)
    ]


def project_to_double(group: WeylGroup, w: WeylElement, J, K) -> WeylElement:
    """The shortest element of w W_K, for w already shortest in W_J w."""
    J = group.check_subset(J)
    K = group.check_subset(K)
    if w.left_descents & J:
        raise InputError(
            f"element {group.reduced_word(w)} has left descents in J={sorted(J)}"
        )
    while True:
        down = w.right_descents & K
        if not down:
            return w
        w = group.right_mul(w, min(down))


def _check_double_rep(group: WeylGroup, x: WeylElement, J, K):
    if (x.left_descents & J) or (x.right_descents & K):
        raise InputError(
            f"element {group.reduced_word(x)} is not a minimal double "
            f"representative for J={sorted(J)}, K={sorted(K)}"
        )


def induced_subset(group: WeylGroup, x: WeylElement, J, K) -> frozenset[int]:
    """{k in K : x s_k x^-1 is a simple reflection from J}."""
    J = group.check_subset(J)
    K = group.check_subset(K)
    _check_double_rep(group, x, J, K)
    out = set()
    for k in K:
        xk = group.right_mul(x, k)
        for j in J:
            if group.left_mul(j, x) is xk:
                out.add(k)
                break
    return frozenset(out)


def x_lower(group: WeylGroup, x: WeylElement, J, K) -> WeylElement:
    """Longest element among the W_{J_x}-minimal representatives inside W_K."""
    J = group.check_subset(J)
    K = group.check_subset(K)
    Jx = induced_subset(group, x, J, K)
    w0Jx = group.longest_element(Jx)
    w0K = group.longest_element(K)
    out = group.multiply(w0Jx, w0K)
    if out.length != w0K.length - w0Jx.length:  # pragma: no cover
        raise ConsistencyError("length of w0(J_x) * w0(K) is not the difference")
    return out


def x_upper(group: WeylGroup, x: WeylElement, J, K) -> tuple[WeylElement, int]:
    """The longest element of the J-minimal part of W_J x W_K, with its length."""
    xl = x_lower(group, x, J, K)
    xu = group.multiply(x, xl)
    if xu.length != x.length + xl.length:  # pragma: no cover
        raise ConsistencyError(
            f"length additivity failed at {group.reduced_word(x)}: "
            f"{xu.length} != {x.length} + {xl.length}"
        )
    J = group.check_subset(J)
    if xu.left_descents & J:  # pragma: no cover
        raise ConsistencyError("maximal fiber element left the J-minimal set")
    return xu, xu.length


def ell_JK(group: WeylGroup, x: WeylElement, J, K) -> int:
    """length(x) + length(w0 of K) - length(w0 of the induced subset)."""
    J = group.check_subset(J)
    K = group.check_subset(K)
    Jx = induced_subset(group, x, J, K)
    return x.length + group.longest_element(K).length - group.longest_element(Jx).length


def relative_left_reps(group: WeylGroup, Jx, K) -> list[WeylElement]:
    """Elements of W_K with no left descent in Jx (Jx must sit inside K)."""
    Jx = group.check_subset(Jx)
    K = group.check_subset(K)
    if not Jx <= K:
        raise InputError(f"subset {sorted(Jx)} is not contained in {sorted(K)}")
    return [y for y in group.subgroup_elements(K) if not (y.left_descents & Jx)]
