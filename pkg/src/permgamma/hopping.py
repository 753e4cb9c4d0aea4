"""Foata-Strehl valley hopping and hop equivalence classes."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .exceptions import InvariantViolation, NotFreeLetterError
from .parabolic import check_bound
from .polynomials import Poly
from .words import Permutation, Position, classify_positions, des, pk


def hop_single(w: Sequence[int], j: int) -> Permutation:
    """H_j(w): move the free letter j across the adjacent valley(s).

    A letter on a downslope lands at the first later gap w(k) < j < w(k+1);
    one on an upslope lands at the last earlier gap w(k-1) > j > w(k).  The
    word is bordered by +infinity on both sides.
    """
    w = tuple(w)
    n = len(w)
    try:
        idx = w.index(j)
    except ValueError:
        raise ValueError(f"{j} is not a letter of {w}") from None
    label = classify_positions(w)[idx]
    if not label.is_free:
        raise NotFreeLetterError(f"{j} is a {label.value} of {w}, not a free letter")

    def at(i: int) -> float:
        return w[i] if 0 <= i < n else float("inf")

    if label is Position.FREE_DOWN:
        # k is a 0-based index here: gap between w[k] and w[k+1]
        for k in range(idx + 1, n):
            if at(k) < j < at(k + 1):
                return w[:idx] + w[idx + 1:k + 1] + (j,) + w[k + 1:]
    else:
        for k in range(idx - 1, -1, -1):
            if at(k - 1) > j > at(k):
                return w[:k] + (j,) + w[k:idx] + w[idx + 1:]
    raise InvariantViolation(f"no landing slot for {j} in {w}")


def hop_set(w: Sequence[int], letters: Iterable[int]) -> Permutation:
    """Apply H_j for every j in ``letters`` (all must be free in ``w``)."""
    w = tuple(w)
    letters = list(letters)
    free = {x for x, lab in zip(w, classify_positions(w)) if lab.is_free}
    bad = [j for j in letters if j not in free]
    if bad:
        raise NotFreeLetterError(f"letters {bad} are not free in {w}")
    for j in letters:
        w = hop_single(w, j)
    return w


def canonical_rep(w: Sequence[int]) -> Permutation:
    """The member of Hop(w) whose free letters all lie on upslopes."""
    w = tuple(w)
    down = [x for x, lab in zip(w, classify_positions(w)) if lab is Position.FREE_DOWN]
    return hop_set(w, down)


def is_canonical(w: Sequence[int]) -> bool:
    return Position.FREE_DOWN not in classify_positions(w)


@dataclass(frozen=True)
class HopClass:
    canonical: Permutation
    members: frozenset[Permutation]

    @property
    def n(self) -> int:
        return len(self.canonical)

    @property
    def peaks(self) -> int:
        return pk(self.canonical)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, u: object) -> bool:
        return u in self.members

    def sorted(self) -> list[Permutation]:
        return sorted(self.members)


def hop_class(w: Sequence[int], max_n: int | None = None) -> HopClass:
    """Hop(w), built by toggling every subset of the canonical free letters."""
    check_bound(len(w), max_n)
    c = canonical_rep(w)
    free = sorted(x for x, lab in zip(c, classify_positions(c)) if lab.is_free)
    members = {hop_set(c, subset) for r in range(len(free) + 1) for subset in combinations(free, r)}
    if len(members) != 2 ** len(free):
        raise InvariantViolation(f"hop class of {c} has {len(members)} members, expected 2^{len(free)}")
    return HopClass(c, frozenset(members))


def hop_class_bfs(w: Sequence[int]) -> frozenset[Permutation]:
    """Hop(w) by breadth-first search over single hops; a cross-check only."""
    start = tuple(w)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for x, lab in zip(u, classify_positions(u)):
                if lab.is_free:
                    v = hop_single(u, x)
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
        frontier = nxt
    return frozenset(seen)


def class_descent_poly(c: HopClass) -> Poly:
    """Sum of t^des(u) over the class, checked against t^pk (1+t)^(n-1-2pk)."""
    d = max(c.n - 1, 0)
    out = [0] * (d + 1)
    for u in c.members:
        out[des(u)] += 1
    p = c.peaks
    expected = [0] * (d + 1)
    for i in range(d - 2 * p + 1):
        expected[p + i] = comb(d - 2 * p, i)
    if out != expected:
        raise InvariantViolation(f"class of {c.canonical}: {out} != t^{p}(1+t)^{d - 2 * p}")
    return tuple(out)
