"""Exact integer polynomials, gamma expansions, and the h-polynomial of the
partitioned permutohedron.

Polynomials are tuples of Python ints, constant term first.  Python integers
are unbounded, so no arithmetic here can overflow.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Literal, Sequence

import numpy as np

from .exceptions import InvariantViolation
from .parabolic import KSubset, check_bound, permutation_table

Poly = tuple[int, ...]
GammaMethod = Literal["hpoly", "tilde", "hat"]
GAMMA_METHODS: tuple[str, ...] = ("hpoly", "tilde", "hat")


@dataclass(frozen=True)
class GammaVector:
    """Coefficients of h in the basis t^j (1+t)^(degree-2j), j = 0..degree//2."""

    entries: tuple[int, ...]
    degree: int

    def __post_init__(self):
        if len(self.entries) != self.degree // 2 + 1:
            raise ValueError(
                f"a gamma vector of degree {self.degree} has {self.degree // 2 + 1} entries, "
                f"got {len(self.entries)}"
            )

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, j):
        return self.entries[j]

    def is_nonnegative(self) -> bool:
        return all(g >= 0 for g in self.entries)


def pad(p: Sequence[int], length: int) -> Poly:
    p = tuple(p)
    if len(p) > length and any(p[length:]):
        raise ValueError(f"polynomial {p} has degree above {length - 1}")
    return p[:length] + (0,) * (length - len(p))


def trim(p: Sequence[int]) -> Poly:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_add(p: Sequence[int], q: Sequence[int]) -> Poly:
    size = max(len(p), len(q))
    return tuple(a + b for a, b in zip(pad(p, size), pad(q, size)))


def poly_mul(p: Sequence[int], q: Sequence[int]) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def gamma_basis(j: int, d: int) -> Poly:
    """t^j (1+t)^(d-2j) as a length d+1 coefficient tuple."""
    if not 0 <= 2 * j <= d:
        raise ValueError(f"basis index j={j} out of range for degree {d}")
    return (0,) * j + tuple(comb(d - 2 * j, i) for i in range(d - 2 * j + 1)) + (0,) * j


def f_to_h(f: Sequence[int], d: int) -> Poly:
    """h(t) = f(t - 1), expanded exactly and padded to degree d."""
    f = pad(f, d + 1)
    h = [0] * (d + 1)
    for i, fi in enumerate(f):
        for k in range(i + 1):
            h[k] += fi * comb(i, k) * (-1) ** (i - k)
    return tuple(h)


def is_palindromic(h: Sequence[int], d: int) -> bool:
    h = pad(h, d + 1)
    return all(h[i] == h[d - i] for i in range(d + 1))


def gamma_expand(h: Sequence[int], d: int) -> GammaVector:
    """Peel t^j (1+t)^(d-2j) off ``h`` for j = 0, 1, ...

    Entries can be negative for a general palindromic input.
    """
    if not is_palindromic(h, d):
        raise ValueError(f"{tuple(h)} is not palindromic of degree {d}")
    residual = list(pad(h, d + 1))
    entries = []
    for j in range(d // 2 + 1):
        g = residual[j]
        entries.append(g)
        if g:
            for i, c in enumerate(gamma_basis(j, d)):
                residual[i] -= g * c
    if any(residual):
        raise InvariantViolation(f"nonzero residual {residual} expanding {tuple(h)}")
    return GammaVector(tuple(entries), d)


def gamma_reconstruct(g: GammaVector) -> Poly:
    h = [0] * (g.degree + 1)
    for j, gj in enumerate(g.entries):
        if gj:
            for i, c in enumerate(gamma_basis(j, g.degree)):
                h[i] += gj * c
    return tuple(h)


def descent_histogram(des_values: np.ndarray, d: int) -> Poly:
    """Sum of t^des as a length d+1 tuple of Python ints."""
    counts = np.bincount(des_values, minlength=d + 1) if des_values.size else np.zeros(d + 1, int)
    if len(counts) > d + 1:
        raise InvariantViolation(f"descent count above {d}")
    return tuple(int(c) for c in counts)


def eulerian(n: int, max_n: int | None = None) -> Poly:
    """A_n(t) = sum over S_n of t^des(w), by direct summation."""
    check_bound(n, max_n)
    table = permutation_table(n)
    return descent_histogram(table.des, max(n - 1, 0))


def h_poly_partitioned(K: KSubset, max_n: int | None = None) -> Poly:
    """h-polynomial of P_n(K) as the descent generating function of W(K)."""
    if K.n < 1:
        raise ValueError("P_n(K) needs n >= 1")
    check_bound(K.n, max_n)
    table = permutation_table(K.n)
    return descent_histogram(table.des[table.select(K, "wofk")], K.n - 1)


def gamma_partitioned(K: KSubset, method: GammaMethod = "hpoly", max_n: int | None = None) -> GammaVector:
    """Gamma vector of P_n(K) by one of three independent routes.

    ``hpoly`` expands the h-polynomial; ``tilde`` and ``hat`` count
    tilde-W^K and hat-W^K by number of descents.
    """
    if K.n < 1:
        raise ValueError("P_n(K) needs n >= 1")
    check_bound(K.n, max_n)
    d = K.n - 1
    if method == "hpoly":
        return gamma_expand(h_poly_partitioned(K, max_n=max_n), d)
    if method not in ("tilde", "hat"):
        raise ValueError(f"unknown method {method!r}; expected one of {GAMMA_METHODS}")
    table = permutation_table(K.n)
    counts = descent_histogram(table.des[table.select(K, "wk", method)], d)
    if any(counts[d // 2 + 1:]):
        raise InvariantViolation(f"{method}-W^K member with more than {d // 2} descents")
    return GammaVector(counts[: d // 2 + 1], d)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind via the usual recurrence."""
    row = [1] + [0] * k
    for m in range(1, n + 1):
        for j in range(min(m, k), 0, -1):
            row[j] = j * row[j] + row[j - 1]
        row[0] = 0
    return row[k]


def permutohedron_f_vector(n: int, max_n: int | None = None) -> Poly:
    """f-polynomial of P_n: an i-face is an ordered set partition into n-i blocks."""
    check_bound(n, max_n)
    if n < 1:
        raise ValueError("P_n needs n >= 1")
    return tuple(factorial(n - i) * stirling2(n, n - i) for i in range(n))
