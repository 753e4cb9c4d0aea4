"""Young tableaux, RSK, evacuation, Kostka numbers and the descent-preserving
standardisation of words with prescribed content.
"""
from __future__ import annotations

from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, Literal, Sequence

from .exceptions import DomainError, InvariantViolation
from .parabolic import KSubset, check_bound, composition_mu
from .polynomials import GammaVector, Poly, gamma_basis
from .words import Permutation, Word, descent_flags, multiplicities

Shape = tuple[int, ...]


def is_partition(shape: Sequence[int]) -> bool:
    return all(p >= 1 for p in shape) and all(a >= b for a, b in zip(shape, shape[1:]))


def check_partition(shape: Sequence[int]) -> Shape:
    shape = tuple(int(p) for p in shape)
    if not is_partition(shape):
        raise ValueError(f"{shape} is not a partition")
    return shape


def partitions(n: int) -> list[Shape]:
    """All partitions of n, in reverse lexicographic order."""
    def gen(rest: int, cap: int) -> Iterator[Shape]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail
    return list(gen(n, n))


@dataclass(frozen=True)
class YoungTableau:
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows if len(row))
        object.__setattr__(self, "rows", rows)
        if not is_partition(self.shape):
            raise ValueError(f"rows {rows} do not form a Young diagram")

    @property
    def shape(self) -> Shape:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def content(self) -> tuple[int, ...]:
        return multiplicities(self.reading_word())

    def is_semistandard(self) -> bool:
        rows = self.rows
        if any(x < 1 for x in self.reading_word()):
            return False
        for row in rows:
            if any(a > b for a, b in zip(row, row[1:])):
                return False
        for upper, lower in zip(rows, rows[1:]):
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                return False
        return True

    def is_standard(self) -> bool:
        return self.is_semistandard() and sorted(self.reading_word()) == list(range(1, self.size + 1))

    def row_of(self) -> dict[int, int]:
        return {x: r for r, row in enumerate(self.rows) for x in row}

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)


def _require_standard(Q: YoungTableau) -> None:
    if not Q.is_standard():
        raise ValueError(f"{Q.to_list()} is not a standard tableau")


def rsk(v: Sequence[int]) -> tuple[YoungTableau, YoungTableau]:
    """Row-insertion RSK: (insertion tableau P, recording tableau Q)."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(v, start=1):
        if x < 1:
            raise ValueError(f"words use positive letters only, got {x}")
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([step])
                break
            row = P[r]
            j = bisect_right(row, x)
            if j == len(row):
                row.append(x)
                Q[r].append(step)
                break
            row[j], x = x, row[j]
            r += 1
    return YoungTableau(P), YoungTableau(Q)


def rsk_inverse(P: YoungTableau, Q: YoungTableau) -> Word:
    """Reverse row insertion, removing the cells of Q in decreasing label order."""
    if P.shape != Q.shape:
        raise ValueError(f"shape mismatch: {P.shape} vs {Q.shape}")
    if not P.is_semistandard():
        raise ValueError(f"{P.to_list()} is not semistandard")
    _require_standard(Q)
    rows = [list(r) for r in P.rows]
    where = {x: (r, c) for r, row in enumerate(Q.rows) for c, x in enumerate(row)}
    out = []
    for label in range(Q.size, 0, -1):
        r, c = where[label]
        if c != len(rows[r]) - 1:
            raise InvariantViolation(f"cell {label} of Q is not a corner")
        x = rows[r].pop()
        if not rows[r]:
            rows.pop()
        for above in range(r - 1, -1, -1):
            row = rows[above]
            # rightmost entry strictly less than x
            j = bisect_right(row, x - 1) - 1
            row[j], x = x, row[j]
        out.append(x)
    return tuple(reversed(out))


def tableau_descent_set(Q: YoungTableau) -> frozenset[int]:
    """i is a descent when i sits in a strictly higher row than i + 1."""
    _require_standard(Q)
    row = Q.row_of()
    return frozenset(i for i in range(1, Q.size) if row[i] < row[i + 1])


def evacuation(Q: YoungTableau) -> YoungTableau:
    """Schuetzenberger evacuation by repeated jeu de taquin deletion of the minimum."""
    _require_standard(Q)
    n = Q.size
    rows = [list(r) for r in Q.rows]
    result = [[0] * len(r) for r in rows]
    for step in range(n):
        r = c = 0
        while True:
            right = rows[r][c + 1] if c + 1 < len(rows[r]) else None
            below = rows[r + 1][c] if r + 1 < len(rows) and c < len(rows[r + 1]) else None
            if right is None and below is None:
                break
            if below is None or (right is not None and right < below):
                rows[r][c] = right
                c += 1
            else:
                rows[r][c] = below
                r += 1
        rows[r].pop()
        if not rows[r]:
            rows.pop()
        result[r][c] = n - step
    return YoungTableau(result)


def syt_filter_ok(descents: frozenset[int], n: int, filt: str) -> bool:
    double = any(i in descents and i + 1 in descents for i in range(1, n - 1))
    if filt == "all":
        return True
    if filt == "tilde":
        return not double and 1 not in descents
    if filt == "hat":
        return not double and (n - 1) not in descents
    raise ValueError(f"unknown filter {filt!r}")


@lru_cache(maxsize=None)
def _all_syt(shape: Shape) -> tuple[YoungTableau, ...]:
    n = sum(shape)
    if n == 0:
        return (YoungTableau([]),)
    out = []
    # the largest entry sits in an outer corner
    for r, length in enumerate(shape):
        if r + 1 < len(shape) and shape[r + 1] == length:
            continue
        smaller = list(shape)
        smaller[r] -= 1
        smaller_shape = tuple(p for p in smaller if p)
        for T in _all_syt(smaller_shape):
            rows = [list(row) for row in T.rows]
            if r == len(rows):
                rows.append([])
            rows[r].append(n)
            out.append(YoungTableau(rows))
    out.sort(key=YoungTableau.reading_word)
    return tuple(out)


def enumerate_syt(
    shape: Sequence[int], filt: Literal["all", "tilde", "hat"] = "all", max_n: int | None = None
) -> list[YoungTableau]:
    shape = check_partition(shape)
    n = sum(shape)
    check_bound(n, max_n)
    return [T for T in _all_syt(shape) if syt_filter_ok(tableau_descent_set(T), n, filt)]


def hook_lengths(shape: Sequence[int]) -> list[list[int]]:
    shape = check_partition(shape)
    conj = [sum(1 for p in shape if p > c) for c in range(shape[0])] if shape else []
    return [[shape[r] - c + conj[c] - r - 1 for c in range(shape[r])] for r in range(len(shape))]


def dim_irreducible(shape: Sequence[int], max_n: int | None = None) -> int:
    """Number of standard tableaux of the shape, by the hook length formula."""
    shape = check_partition(shape)
    n = sum(shape)
    check_bound(n, max_n)
    prod = 1
    for row in hook_lengths(shape):
        for h in row:
            prod *= h
    return factorial(n) // prod


def enumerate_ssyt(shape: Sequence[int], content: Sequence[int]) -> list[YoungTableau]:
    """Semistandard tableaux of a shape with a given content.

    Cells are filled row by row; each value must be at least its left
    neighbour, exceed the value above it, and respect the remaining content.
    """
    shape = check_partition(shape)
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content):
        raise ValueError(f"content {content} has a negative entry")
    if sum(shape) != sum(content):
        raise ValueError(f"shape {shape} has {sum(shape)} boxes but content sums to {sum(content)}")
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]
    remaining = list(content)
    found: list[YoungTableau] = []

    def fill(idx: int) -> None:
        if idx == len(cells):
            found.append(YoungTableau(grid))
            return
        r, c = cells[idx]
        lo = grid[r][c - 1] if c else 1
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        for val in range(lo, len(remaining) + 1):
            if remaining[val - 1]:
                remaining[val - 1] -= 1
                grid[r][c] = val
                fill(idx + 1)
                remaining[val - 1] += 1
        grid[r][c] = 0

    fill(0)
    found.sort(key=YoungTableau.reading_word)
    return found


def kostka(shape: Sequence[int], mu: Sequence[int]) -> int:
    """Kostka number K_{shape, mu} by explicit enumeration."""
    return _kostka(check_partition(shape), tuple(int(m) for m in mu))


@lru_cache(maxsize=None)
def _kostka(shape: Shape, mu: tuple[int, ...]) -> int:
    return len(enumerate_ssyt(shape, mu))


def hat_words_with_content(mu: Sequence[int]) -> list[Word]:
    """Words with content mu having no double descent and no final descent, sorted."""
    mu = tuple(mu)
    n = sum(mu)
    remaining = list(mu)
    word: list[int] = []
    out: list[Word] = []

    def grow() -> None:
        if len(word) == n:
            if n < 2 or word[-2] <= word[-1]:
                out.append(tuple(word))
            return
        for letter in range(1, len(mu) + 1):
            if not remaining[letter - 1]:
                continue
            if len(word) >= 2 and word[-2] > word[-1] > letter:
                continue
            remaining[letter - 1] -= 1
            word.append(letter)
            grow()
            word.pop()
            remaining[letter - 1] += 1

    grow()
    return out


def phi(v: Sequence[int], K: KSubset) -> Permutation:
    """Standardise v: the k-th occurrence of letter i becomes k + mu_1 + ... + mu_{i-1}."""
    v = tuple(v)
    mu = composition_mu(K)
    if len(v) != K.n or multiplicities(v) != mu:
        raise DomainError(f"{v} does not have content mu(K) = {mu}")
    double, _, final = descent_flags(v)
    if double or final:
        raise DomainError(f"{v} has a double or final descent")
    offsets = [0]
    for m in mu:
        offsets.append(offsets[-1] + m)
    seen = Counter()
    out = []
    for letter in v:
        seen[letter] += 1
        out.append(offsets[letter - 1] + seen[letter])
    return tuple(out)


def _kostka_weighted_counts(K: KSubset, filt: str, max_n: int | None) -> dict[int, int]:
    n = K.n
    check_bound(n, max_n)
    mu = composition_mu(K)
    counts: Counter[int] = Counter()
    for shape in partitions(n):
        weight = kostka(shape, mu)
        if not weight:
            continue
        for Q in enumerate_syt(shape, filt, max_n=max_n):
            counts[len(tableau_descent_set(Q))] += weight
    return counts


def rep_gamma(K: KSubset, variant: Literal["hat", "tilde"] = "hat", max_n: int | None = None) -> GammaVector:
    """gamma_j = sum over hat (or tilde) standard tableaux Q with des(Q) = j of
    the Kostka number K_{shape(Q), mu(K)}."""
    if K.n < 1:
        raise ValueError("needs n >= 1")
    if variant not in ("hat", "tilde"):
        raise ValueError(f"unknown variant {variant!r}")
    d = K.n - 1
    counts = _kostka_weighted_counts(K, variant, max_n)
    if any(j > d // 2 for j in counts):
        raise InvariantViolation(f"{variant} tableau with more than {d // 2} descents")
    return GammaVector(tuple(counts.get(j, 0) for j in range(d // 2 + 1)), d)


def rep_h_poly(K: KSubset, exponent: Literal["2des", "des"] = "2des", max_n: int | None = None) -> Poly:
    """Sum over hat standard tableaux of K_{shape(Q), mu(K)} t^des (1+t)^(n-1-e*des).

    ``exponent="des"`` reproduces the alternative exponent n-1-des(Q) so the
    two readings can be compared numerically.
    """
    d = K.n - 1
    counts = _kostka_weighted_counts(K, "hat", max_n)
    width = d + 1 + (max(counts) if counts and exponent == "des" else 0)
    h = [0] * width
    for j, weight in counts.items():
        if exponent == "2des":
            basis = gamma_basis(j, d)
        else:
            e = d - j
            basis = (0,) * j + tuple(_binomial_row(e))
        for i, c in enumerate(basis):
            h[i] += weight * c
    while len(h) > d + 1 and h[-1] == 0:
        h.pop()
    return tuple(h)


def _binomial_row(e: int) -> list[int]:
    row = [1]
    for _ in range(e):
        row = [a + b for a, b in zip(row + [0], [0] + row)]
    return row
