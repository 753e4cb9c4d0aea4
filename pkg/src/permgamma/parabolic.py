"""Subsets K of [n-1], the parabolic data they determine, and the
permutation families W^K, tilde-W^K, hat-W^K and W(K).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby, permutations
from typing import Iterable, Literal, Sequence

import numpy as np

from .exceptions import BoundExceededError, RankMismatchError
from .words import Permutation, inverse

DEFAULT_MAX_N = 10

Filter = Literal["all", "tilde", "hat"]
FILTERS: tuple[str, ...] = ("all", "tilde", "hat")


@dataclass(frozen=True)
class KSubset:
    """A subset of [n-1] together with its ambient rank n."""

    n: int
    members: frozenset[int]

    def __init__(self, n: int, members: Iterable[int] = ()):
        members = frozenset(int(k) for k in members)
        if n < 0:
            raise ValueError(f"rank must be non-negative, got {n}")
        bad = sorted(k for k in members if not 1 <= k <= n - 1)
        if bad:
            raise ValueError(f"K must lie in [1, {n - 1}], got {bad}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "members", members)

    @classmethod
    def parse(cls, n: int, text: str) -> "KSubset":
        """Parse the comma-separated form; the empty string is the empty set."""
        text = text.strip()
        if not text:
            return cls(n)
        return cls(n, (int(tok) for tok in text.split(",") if tok.strip()))

    @classmethod
    def full(cls, n: int) -> "KSubset":
        return cls(n, range(1, n))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "KSubset":
        return cls(n, (k for k in range(1, n) if mask >> (k - 1) & 1))

    @property
    def mask(self) -> int:
        return sum(1 << (k - 1) for k in self.members)

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __contains__(self, k: object) -> bool:
        return k in self.members

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return ",".join(str(k) for k in self.sorted())

    def __repr__(self) -> str:
        return f"KSubset(n={self.n}, members={{{self}}})"

    def intervals(self) -> list[tuple[int, int]]:
        """Maximal runs [a_i, b_i] of consecutive members, left to right."""
        runs = []
        for _, grp in groupby(enumerate(self.sorted()), key=lambda p: p[1] - p[0]):
            block = [k for _, k in grp]
            runs.append((block[0], block[-1]))
        return runs


def all_subsets(n: int) -> list[KSubset]:
    """Every K of [n-1], ordered by bitmask."""
    return [KSubset.from_mask(n, m) for m in range(1 << max(n - 1, 0))]


def check_rank(w: Sequence[int], K: KSubset) -> None:
    if len(w) != K.n:
        raise RankMismatchError(f"permutation of length {len(w)} used with K of rank {K.n}")


def check_bound(n: int, max_n: int | None = None) -> None:
    bound = DEFAULT_MAX_N if max_n is None else max_n
    if n > bound:
        raise BoundExceededError(f"n={n} exceeds the enumeration bound {bound}")


def orbits(K: KSubset) -> list[tuple[int, ...]]:
    """W_K-orbits on [n]: i and j share an orbit iff every l in [i, j) is in K."""
    if K.n == 0:
        return []
    out = [[1]]
    for x in range(2, K.n + 1):
        if x - 1 in K:
            out[-1].append(x)
        else:
            out.append([x])
    return [tuple(o) for o in out]


def composition_mu(K: KSubset) -> tuple[int, ...]:
    return tuple(len(o) for o in orbits(K))


def k_star(K: KSubset) -> KSubset:
    return KSubset(K.n, (K.n - k for k in K.members))


def is_min_rep(w: Sequence[int], K: KSubset) -> bool:
    """True iff a_i, ..., b_i + 1 occur left to right in w for every run of K."""
    check_rank(w, K)
    pos = inverse(w)
    for a, b in K.intervals():
        if any(pos[x - 1] > pos[x] for x in range(a, b + 1)):
            return False
    return True


def is_in_w_of_k(w: Sequence[int], K: KSubset) -> bool:
    """True iff each k in K precedes k+1, or k+1 sits immediately left of k."""
    check_rank(w, K)
    pos = inverse(w)
    return all(pos[k - 1] - pos[k] <= 1 for k in K.members)


class PermutationTable:
    """Vectorised statistics for every permutation of [n] in lex order.

    Bit k-1 of ``before_mask`` is set when k precedes k+1; bit k-1 of
    ``wofk_mask`` is set when k satisfies the W(K) condition.  Membership of a
    row in W^K (resp. W(K)) is then ``mask & K.mask == K.mask``.
    """

    def __init__(self, n: int):
        self.n = n
        if n == 0:
            self.perms = np.zeros((1, 0), dtype=np.int8)
        else:
            self.perms = np.array(list(permutations(range(1, n + 1))), dtype=np.int8)
        rows = self.perms.shape[0]
        drops = self.perms[:, :-1] > self.perms[:, 1:]
        self.des = drops.sum(axis=1).astype(np.int64)
        if n >= 3:
            double = (drops[:, :-1] & drops[:, 1:]).any(axis=1)
        else:
            double = np.zeros(rows, dtype=bool)
        initial = drops[:, 0] if n >= 2 else np.zeros(rows, dtype=bool)
        final = drops[:, -1] if n >= 2 else np.zeros(rows, dtype=bool)
        self.tilde = ~double & ~initial
        self.hat = ~double & ~final

        pos = np.empty_like(self.perms, dtype=np.int64)
        if n:
            pos[np.arange(rows)[:, None], self.perms.astype(np.int64) - 1] = np.arange(n)
        self.before_mask = np.zeros(rows, dtype=np.int64)
        self.wofk_mask = np.zeros(rows, dtype=np.int64)
        for k in range(1, n):
            gap = pos[:, k - 1] - pos[:, k]
            self.before_mask |= (gap < 0).astype(np.int64) << (k - 1)
            self.wofk_mask |= (gap <= 1).astype(np.int64) << (k - 1)

    def select(self, K: KSubset, family: str, filt: str = "all") -> np.ndarray:
        if K.n != self.n:
            raise RankMismatchError(f"table of rank {self.n} used with K of rank {K.n}")
        mask = K.mask
        if family == "wk":
            keep = (self.before_mask & mask) == mask
        elif family == "wofk":
            keep = (self.wofk_mask & mask) == mask
        else:
            raise ValueError(f"unknown family {family!r}")
        if filt == "tilde":
            keep &= self.tilde
        elif filt == "hat":
            keep &= self.hat
        elif filt != "all":
            raise ValueError(f"unknown filter {filt!r}; expected one of {FILTERS}")
        return keep

    def rows(self, keep: np.ndarray) -> list[Permutation]:
        return [tuple(int(x) for x in row) for row in self.perms[keep]]


@lru_cache(maxsize=4)
def permutation_table(n: int) -> PermutationTable:
    return PermutationTable(n)


def enumerate_w_upper_k(K: KSubset, filt: Filter = "all", max_n: int | None = None) -> list[Permutation]:
    """W^K, tilde-W^K or hat-W^K in lexicographic order."""
    check_bound(K.n, max_n)
    table = permutation_table(K.n)
    return table.rows(table.select(K, "wk", filt))


def enumerate_w_of_k(K: KSubset, max_n: int | None = None) -> list[Permutation]:
    check_bound(K.n, max_n)
    table = permutation_table(K.n)
    return table.rows(table.select(K, "wofk"))
