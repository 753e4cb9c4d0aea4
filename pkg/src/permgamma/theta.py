"""The operator J_K onto W(K), its inverse L_K built from peak strings, and
the descent-preserving bijection Theta between hop-class pairs and W(K).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exceptions import DomainError, InvariantViolation
from .hopping import canonical_rep
from .parabolic import KSubset, check_rank, is_in_w_of_k, is_min_rep
from .words import Permutation, Position, classify_positions, is_tilde


def j_single(u: Sequence[int], k: int) -> Permutation:
    """J_k: if k+1 sits left of k without touching it, move k+1 right onto k."""
    u = tuple(u)
    if not 1 <= k <= len(u) - 1:
        raise ValueError(f"k={k} out of range [1, {len(u) - 1}]")
    a = u.index(k)
    b = u.index(k + 1)
    if b > a or b == a - 1:
        return u
    return u[:b] + u[b + 1:a] + (k + 1,) + u[a:]


def j_full(u: Sequence[int], K: KSubset) -> Permutation:
    check_rank(u, K)
    u = tuple(u)
    for k in K:
        u = j_single(u, k)
    return u


def j_full_trace(u: Sequence[int], K: KSubset) -> list[dict]:
    """Every step of the increasing sweep, with whether J_k acted."""
    check_rank(u, K)
    u = tuple(u)
    steps = []
    for k in K:
        v = j_single(u, k)
        steps.append({"k": k, "acted": v != u, "perm": list(v)})
        u = v
    return steps


@dataclass(frozen=True)
class EffectiveExpression:
    """Intervals [k_j, k_j + l_j - 1] of K whose operators act non-trivially."""

    intervals: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.intervals)

    def apply(self, u: Sequence[int]) -> Permutation:
        u = tuple(u)
        for lo, hi in self.intervals:
            for k in range(lo, hi + 1):
                u = j_single(u, k)
        return u


def effective_expression(u: Sequence[int], K: KSubset, check_lemma: bool = True) -> EffectiveExpression:
    """Group the indices at which J_k acts during the sweep into maximal runs.

    With ``check_lemma`` the output is tested for the property that when
    k_j - 1 immediately follows k_j in J_K(u), k_j - 1 is not in K.
    """
    check_rank(u, K)
    acted = []
    cur = tuple(u)
    for k in K:
        nxt = j_single(cur, k)
        if nxt != cur:
            acted.append(k)
        cur = nxt
    runs: list[list[int]] = []
    for k in acted:
        if runs and runs[-1][1] + 1 == k:
            runs[-1][1] = k
        else:
            runs.append([k, k])
    expr = EffectiveExpression(tuple((lo, hi) for lo, hi in runs))
    if expr.apply(u) != cur:
        raise InvariantViolation(f"effective expression {expr} does not reproduce J_K({u})")
    if check_lemma:
        pos = {x: i for i, x in enumerate(cur)}
        for lo, _ in expr.intervals:
            if lo > 1 and pos[lo - 1] == pos[lo] + 1 and lo - 1 in K:
                raise InvariantViolation(f"{lo - 1} follows {lo} in {cur} but lies in K={K}")
    return expr


@dataclass(frozen=True)
class PeakString:
    """A peak p immediately followed by p-1, ..., k with k, ..., p-1 in K."""

    peak: int
    tail: tuple[int, ...]
    position: int  # 1-based position of the peak

    @property
    def low(self) -> int:
        return self.tail[-1]

    @property
    def length(self) -> int:
        return len(self.tail)


def _require_w_of_k(v: Sequence[int], K: KSubset) -> None:
    if not is_in_w_of_k(v, K):
        raise DomainError(f"{tuple(v)} is not in W(K) for K={{{K}}}")


def extract_strings(v: Sequence[int], K: KSubset) -> list[PeakString]:
    """Peak strings of ``v``, ordered by their smallest letter."""
    check_rank(v, K)
    _require_w_of_k(v, K)
    v = tuple(v)
    n = len(v)
    out = []
    for i, lab in enumerate(classify_positions(v)):
        if lab is not Position.PEAK:
            continue
        p = v[i]
        tail = []
        x = p - 1
        while i + len(tail) + 1 < n and v[i + len(tail) + 1] == x and x in K:
            tail.append(x)
            x -= 1
        if not tail:
            continue
        s = PeakString(p, tuple(tail), i + 1)
        k = s.low
        after = i + len(tail) + 1
        if after < n and v[after] == k - 1 and k - 1 in K:
            raise InvariantViolation(f"string {s} of {v} violates the boundary condition")
        out.append(s)
    out.sort(key=lambda s: s.low)
    for a, b in zip(out, out[1:]):
        if not a.peak < b.low:
            raise InvariantViolation(f"strings {a} and {b} of {v} overlap")
    return out


def _splice(v: Permutation, s: PeakString) -> Permutation:
    p, k, length = s.peak, s.low, s.length
    c = v.index(p)  # 0-based
    if v[c:c + length + 1] != (p,) + s.tail:
        raise InvariantViolation(f"string {s} is no longer contiguous in {v}")
    a = 0
    for i in range(c - 1, -1, -1):
        if v[i] > p:
            a = i + 1
            break
    return v[:a] + (p,) + s.tail[:-1] + v[a:c] + (k,) + v[c + length + 1:]


def l_full(v: Sequence[int], K: KSubset) -> Permutation:
    """L_K(v): undo J_K string by string, highest string first."""
    v = tuple(v)
    for s in reversed(extract_strings(v, K)):
        v = _splice(v, s)
    return v


def l_full_trace(v: Sequence[int], K: KSubset) -> list[dict]:
    v = tuple(v)
    steps = []
    for s in reversed(extract_strings(v, K)):
        v = _splice(v, s)
        steps.append({"string": [s.peak, *s.tail], "perm": list(v)})
    return steps


def in_tilde_w_upper_k(w: Sequence[int], K: KSubset) -> bool:
    return is_min_rep(w, K) and is_tilde(w)


def theta(w: Sequence[int], u: Sequence[int], K: KSubset) -> Permutation:
    """Theta(w, u) = J_K(u) for w in tilde-W^K and u in Hop(w)."""
    check_rank(w, K)
    check_rank(u, K)
    if not in_tilde_w_upper_k(w, K):
        raise DomainError(f"{tuple(w)} is not in tilde-W^K for K={{{K}}}")
    if canonical_rep(u) != tuple(w):
        raise DomainError(f"{tuple(u)} is not in Hop({tuple(w)})")
    return j_full(u, K)


def theta_inverse(v: Sequence[int], K: KSubset) -> tuple[Permutation, Permutation]:
    u = l_full(v, K)
    w = canonical_rep(u)
    if not in_tilde_w_upper_k(w, K):
        raise InvariantViolation(f"L_K({tuple(v)}) = {u} has canonical rep {w} outside tilde-W^K")
    return w, u
