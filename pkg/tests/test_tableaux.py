import random
from collections import Counter
from itertools import permutations, product
from math import factorial, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permgamma.exceptions import DomainError
from permgamma.parabolic import KSubset, all_subsets, composition_mu, enumerate_w_upper_k
from permgamma.polynomials import gamma_partitioned, h_poly_partitioned
from permgamma.tableaux import (
    YoungTableau,
    dim_irreducible,
    enumerate_ssyt,
    enumerate_syt,
    evacuation,
    hat_words_with_content,
    kostka,
    partitions,
    phi,
    rep_gamma,
    rep_h_poly,
    rsk,
    rsk_inverse,
    tableau_descent_set,
)
from permgamma.words import descent_flags, descent_set, is_hat, is_tilde, multiplicities, star

T = YoungTableau


def horizontal_strip_kostka(shape, mu):
    """Count chains of partitions growing by horizontal strips of sizes mu."""
    target = tuple(shape)

    def grow(current, parts):
        if not parts:
            return int(tuple(p for p in current if p) == target)
        size, rest = parts[0], parts[1:]
        total = 0
        rows = len(target)
        cur = list(current) + [0] * (rows - len(current))

        def place(row, left, new):
            nonlocal total
            if row == rows:
                if left == 0:
                    total += grow(tuple(new), rest)
                return
            cap = target[row] if row == 0 else min(target[row], cur[row - 1])
            for add in range(0, min(left, cap - cur[row]) + 1):
                place(row + 1, left - add, new + [cur[row] + add])

        place(0, size, [])
        return total

    return grow((), tuple(mu))


def test_rsk_worked_example():
    P, Q = rsk((2, 3, 1, 3, 2))
    assert P == T([[1, 2, 3], [2, 3]])
    assert Q == T([[1, 2, 4], [3, 5]])
    assert rsk_inverse(P, Q) == (2, 3, 1, 3, 2)


def test_rsk_trivial_and_small():
    P, Q = rsk((1, 2, 3, 4))
    assert P == Q == T([[1, 2, 3, 4]])
    assert rsk((1,)) == (T([[1]]), T([[1]]))
    assert rsk((2, 1)) == (T([[1], [2]]), T([[1], [2]]))
    assert rsk_inverse(T([[1, 2, 3]]), T([[1, 2, 3]])) == (1, 2, 3)


def test_rsk_descents_on_s4():
    for w in permutations(range(1, 5)):
        P, Q = rsk(w)
        assert tableau_descent_set(Q) == descent_set(w)
        assert P.is_standard()


@pytest.mark.parametrize("alphabet, length", [(3, 4), (2, 6)])
def test_rsk_roundtrip_exhaustive(alphabet, length):
    seen = set()
    for v in product(range(1, alphabet + 1), repeat=length):
        P, Q = rsk(v)
        assert P.is_semistandard() and Q.is_standard() and P.shape == Q.shape
        assert rsk_inverse(P, Q) == v
        seen.add((P, Q))
    assert len(seen) == alphabet**length


def test_rsk_properties_on_words_of_length_5():
    for v in product(range(1, 4), repeat=5):
        P, Q = rsk(v)
        assert P.content() == multiplicities(v)
        dq = tableau_descent_set(Q)
        assert dq == descent_set(v)
        double = any(i in dq and i + 1 in dq for i in range(1, 4))
        assert (not double and 1 not in dq) == is_tilde(v)
        assert (not double and 4 not in dq) == is_hat(v)


@settings(max_examples=200)
@given(st.lists(st.integers(1, 9), min_size=0, max_size=12))
def test_rsk_roundtrip_random(v):
    P, Q = rsk(v)
    assert rsk_inverse(P, Q) == tuple(v)


def test_rsk_inverse_rejects_bad_input():
    with pytest.raises(ValueError):
        rsk_inverse(T([[1, 2]]), T([[1], [2]]))
    with pytest.raises(ValueError):
        rsk_inverse(T([[2, 1]]), T([[1, 2]]))
    with pytest.raises(ValueError):
        rsk_inverse(T([[1, 2]]), T([[1, 1]]))


def test_tableau_descent_examples():
    assert tableau_descent_set(T([[1, 3, 7], [2, 5], [4, 6]])) == {1, 3, 5}
    assert tableau_descent_set(T([[1, 2, 3]])) == set()
    assert tableau_descent_set(T([[1], [2], [3], [4]])) == {1, 2, 3}


def test_evacuation_examples():
    Q = rsk((2, 1, 3, 4, 5))[1]
    assert Q == T([[1, 3, 4, 5], [2]])
    assert evacuation(Q) == T([[1, 2, 3, 4], [5]])
    assert evacuation(T([[1, 2, 3]])) == T([[1, 2, 3]])


@pytest.mark.parametrize("n", range(1, 7))
def test_evacuation_involution_and_star_compatibility(n):
    for shape in partitions(n):
        for Q in enumerate_syt(shape):
            E = evacuation(Q)
            assert E.shape == Q.shape
            assert evacuation(E) == Q
            assert tableau_descent_set(E) == {n - i for i in tableau_descent_set(Q)}
    for w in permutations(range(1, n + 1)):
        P, Q = rsk(w)
        Ps, Qs = rsk(star(w))
        assert evacuation(Q) == Qs
        assert evacuation(P) == Ps


def test_enumerate_syt_examples():
    assert len(enumerate_syt((2, 1))) == 2
    for n in range(1, 7):
        assert enumerate_syt((n,)) == [T([list(range(1, n + 1))])]
    col = enumerate_syt((1, 1, 1))
    assert len(col) == 1 and tableau_descent_set(col[0]) == {1, 2}
    assert enumerate_syt((1, 1, 1), "tilde") == []
    assert enumerate_syt((1, 1, 1), "hat") == []


def test_dim_irreducible_examples():
    assert dim_irreducible((2, 1)) == 2
    assert dim_irreducible((5,)) == 1
    assert dim_irreducible((3, 2, 2)) == 21


@pytest.mark.parametrize("n", range(1, 8))
def test_hook_length_matches_enumeration(n):
    total = 0
    for shape in partitions(n):
        d = dim_irreducible(shape)
        assert d == len(enumerate_syt(shape))
        total += d * d
    assert total == factorial(n)


def test_kostka_examples():
    assert kostka((2, 1), (1, 1, 1)) == 2
    for lam in partitions(6):
        assert kostka(lam, lam) == 1
    for mu in [(1, 2, 3), (3, 3), (2, 1, 1, 2), (6,)]:
        assert kostka((6,), mu) == 1
    with pytest.raises(ValueError):
        kostka((2, 1), (1, 1))


def compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


@pytest.mark.parametrize("n", range(1, 7))
def test_kostka_against_horizontal_strips_and_rearrangement(n):
    for mu in compositions(n):
        sorted_mu = tuple(sorted(mu, reverse=True))
        for lam in partitions(n):
            k = kostka(lam, mu)
            assert k == horizontal_strip_kostka(lam, mu)
            assert k == horizontal_strip_kostka(lam, sorted_mu)


@pytest.mark.parametrize("n", range(1, 7))
def test_permutation_module_dimension(n):
    for mu in compositions(n):
        total = sum(kostka(lam, mu) * dim_irreducible(lam) for lam in partitions(n))
        assert total == factorial(n) // prod(factorial(m) for m in mu)


def test_ssyt_enumeration_is_sorted_and_valid():
    tabs = enumerate_ssyt((3, 2), (2, 2, 1))
    assert tabs == sorted(tabs, key=YoungTableau.reading_word)
    assert all(t.is_semistandard() and t.content() == (2, 2, 1) for t in tabs)
    assert len(tabs) == 2


def test_phi_worked_example():
    K = KSubset(7, [1, 2, 4, 6])
    assert composition_mu(K) == (3, 2, 2)
    v = (3, 2, 3, 1, 2, 1, 1)
    assert phi(v, K) == (6, 4, 7, 1, 5, 2, 3)
    assert phi(v, K) in enumerate_w_upper_k(K, "hat")


def test_phi_trivial_and_errors():
    for n in range(1, 6):
        assert phi((1,) * n, KSubset.full(n)) == tuple(range(1, n + 1))
    K = KSubset(4, [1, 3])
    with pytest.raises(DomainError):
        phi((1, 1, 2, 1), K)
    with pytest.raises(DomainError):
        phi((1, 2, 2, 1), K)


def test_phi_preserves_descents_on_content_22():
    K = KSubset(4, [1, 3])
    words = [v for v in product((1, 2), repeat=4) if Counter(v) == {1: 2, 2: 2} and is_hat(v)]
    assert words == hat_words_with_content((2, 2))
    for v in words:
        assert descent_set(phi(v, K)) == descent_set(v)


@pytest.mark.parametrize("n", range(1, 7))
def test_phi_bijection(n):
    for K in all_subsets(n):
        mu = composition_mu(K)
        brute = [
            v for v in product(range(1, len(mu) + 1), repeat=n)
            if multiplicities(v) == mu and is_hat(v)
        ]
        assert hat_words_with_content(mu) == brute
        image = [phi(v, K) for v in brute]
        assert sorted(image) == enumerate_w_upper_k(K, "hat")
        assert all(descent_set(phi(v, K)) == descent_set(v) for v in brute)


def test_rep_gamma_examples():
    K = KSubset(5, [1, 3])
    assert rep_gamma(K).entries == (1, 10, 4)
    assert rep_gamma(K, "tilde").entries == (1, 10, 4)
    for n in range(1, 7):
        assert rep_gamma(KSubset.full(n)) == gamma_partitioned(KSubset.full(n))
    # A_3 = (1+t)^2 + 2t
    assert rep_gamma(KSubset(3)).entries == (1, 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_rep_gamma_matches_gamma(n):
    for K in all_subsets(n):
        assert rep_gamma(K, "hat") == gamma_partitioned(K, "hpoly")
        assert rep_gamma(K, "tilde") == gamma_partitioned(K, "hpoly")


def test_kostka_identity_exponent():
    """Only the 2*des(Q) exponent reproduces the h-polynomial."""
    for n in range(1, 7):
        for K in all_subsets(n):
            assert rep_h_poly(K, "2des") == h_poly_partitioned(K)
    K = KSubset(5, [1, 3])
    assert rep_h_poly(K, "des") == (1, 14, 40, 42, 15)
    assert rep_h_poly(K, "des") != h_poly_partitioned(K)


def test_random_words_roundtrip():
    rnd = random.Random(2024)
    for _ in range(2000):
        v = tuple(rnd.randint(1, 6) for _ in range(rnd.randint(0, 10)))
        assert rsk_inverse(*rsk(v)) == v
        flags = descent_flags(v)
        assert isinstance(flags[0], bool)
