from itertools import permutations

import pytest

from permgamma.exceptions import DomainError, RankMismatchError
from permgamma.hopping import canonical_rep, hop_class
from permgamma.parabolic import KSubset, all_subsets, enumerate_w_of_k, enumerate_w_upper_k, is_in_w_of_k
from permgamma.polynomials import h_poly_partitioned
from permgamma.theta import (
    EffectiveExpression,
    PeakString,
    effective_expression,
    extract_strings,
    j_full,
    j_full_trace,
    j_single,
    l_full,
    l_full_trace,
    theta,
    theta_inverse,
)
from permgamma.words import des, parse_permutation as P

K9 = KSubset(9, [2, 3, 4, 6, 7, 8])
K346 = KSubset(9, [3, 4, 6])


def test_j_single_examples():
    assert j_single((3, 1, 2), 2) == (1, 3, 2)
    assert j_single((1, 2, 3), 1) == (1, 2, 3)
    assert j_single((3, 2, 1), 1) == (3, 2, 1)
    assert j_single((3, 2, 1), 2) == (3, 2, 1)
    with pytest.raises(ValueError):
        j_single((1, 2, 3), 3)


def test_j_full_examples():
    assert j_full(P("967284135"), K9) == P("672981435")
    u = P("967284135")
    assert j_full(u, KSubset(9)) == u
    K = KSubset(3, [1, 2])
    images = {j_full(u, K) for u in [(1, 2, 3), (2, 1, 3), (3, 1, 2), (3, 2, 1)]}
    assert images == {(1, 2, 3), (2, 1, 3), (1, 3, 2), (3, 2, 1)}
    with pytest.raises(RankMismatchError):
        j_full((1, 2), K)


def test_j_full_trace_records_acting_steps():
    steps = j_full_trace(P("967284135"), K9)
    assert [s["k"] for s in steps if s["acted"]] == [3, 8]
    assert steps[-1]["perm"] == list(P("672981435"))


def test_effective_expression_examples():
    u = P("967284135")
    expr = effective_expression(u, K9)
    assert expr.intervals == ((3, 3), (8, 8))
    assert expr.apply(u) == j_full(u, K9)
    assert effective_expression((1, 2, 3), KSubset(3, [1, 2])) == EffectiveExpression(())
    assert effective_expression((3, 1, 2), KSubset(3, [1, 2])).intervals == ((2, 2),)


@pytest.mark.parametrize("n", range(1, 8))
def test_j_full_lands_in_w_of_k(n):
    for K in all_subsets(n):
        for u in permutations(range(1, n + 1)):
            assert is_in_w_of_k(j_full(u, K), K)


def test_effective_intervals_are_separated():
    for n in range(2, 7):
        for K in all_subsets(n):
            for u in permutations(range(1, n + 1)):
                expr = effective_expression(u, K, check_lemma=False)
                for (lo1, hi1), (lo2, _) in zip(expr.intervals, expr.intervals[1:]):
                    # k_i + l_i < k_{i+1} with l_i = hi - lo + 1
                    assert lo1 < hi1 + 1 < lo2


def test_extract_strings_examples():
    strings = extract_strings(P("254376198"), K346)
    assert [(s.peak, s.tail) for s in strings] == [(5, (4, 3)), (7, (6,))]
    assert strings[0] == PeakString(5, (4, 3), 2)
    assert extract_strings(tuple(range(1, 6)), KSubset(5, [1, 2])) == []
    assert [(s.peak, s.tail) for s in extract_strings((1, 3, 2), KSubset(3, [1, 2]))] == [(3, (2,))]
    with pytest.raises(DomainError):
        extract_strings((3, 1, 2), KSubset(3, [2]))


def test_l_full_examples():
    v = P("254376198")
    assert l_full(v, K346) == P("754236198")
    trace = l_full_trace(v, K346)
    assert [s["perm"] for s in trace] == [list(P("725436198")), list(P("754236198"))]
    assert l_full(v, KSubset(9)) == v
    assert l_full((1, 3, 2), KSubset(3, [1, 2])) == (3, 1, 2)
    assert j_full((3, 1, 2), KSubset(3, [1, 2])) == (1, 3, 2)


def test_l_then_j_reproduces_worked_example():
    v1 = P("754236198")
    assert j_full(v1, KSubset(9, [3, 4])) == P("725436198")
    assert j_full(P("725436198"), KSubset(9, [6])) == P("254376198")
    assert j_full(v1, K346) == P("254376198")


def test_theta_examples():
    K = KSubset(3, [1, 2])
    assert theta((1, 2, 3), (3, 1, 2), K) == (1, 3, 2)
    for Ks in all_subsets(5):
        ident = (1, 2, 3, 4, 5)
        assert theta(ident, ident, Ks) == ident
    w, u = P("672813459"), P("967284135")
    v = theta(w, u, K9)
    assert v == P("672981435")
    # direct count: 9>6, 7>2, 8>4, 4>1 and 7>2, 9>8, 8>1, 4>3
    assert des(u) == des(v) == 4


def test_theta_rejects_bad_pairs():
    K = KSubset(3, [1, 2])
    with pytest.raises(DomainError):
        theta((2, 1, 3), (2, 1, 3), K)
    with pytest.raises(DomainError):
        theta((1, 2, 3), (1, 3, 2), K)


def test_theta_inverse_examples():
    K = KSubset(3, [1, 2])
    assert theta_inverse((1, 3, 2), K) == ((1, 2, 3), (3, 1, 2))
    for Ks in all_subsets(4):
        assert theta_inverse((1, 2, 3, 4), Ks) == ((1, 2, 3, 4), (1, 2, 3, 4))
    w, u = theta_inverse(P("254376198"), K346)
    assert u == P("754236198")
    assert w == canonical_rep(u)
    assert theta(w, u, K346) == P("254376198")


@pytest.mark.parametrize("n", range(1, 7))
def test_theta_is_a_descent_preserving_bijection(n):
    for K in all_subsets(n):
        target = set(enumerate_w_of_k(K))
        image = []
        descents = [0] * n
        for w in enumerate_w_upper_k(K, "tilde"):
            for u in hop_class(w).members:
                v = theta(w, u, K)
                assert des(v) == des(u)
                assert theta_inverse(v, K) == (w, u)
                effective_expression(u, K, check_lemma=True)
                image.append(v)
                descents[des(u)] += 1
        assert len(image) == len(target) and set(image) == target
        assert tuple(descents) == h_poly_partitioned(K)
        for v in target:
            w, u = theta_inverse(v, K)
            assert theta(w, u, K) == v
