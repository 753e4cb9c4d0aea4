"""Exhaustive verification sweeps over every (n, K) with n up to a bound.

Each suite returns ``None`` on success or a JSON-ready counterexample.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from math import factorial, prod
from typing import Callable, Iterable

from .hopping import class_descent_poly, hop_class
from .parabolic import (
    KSubset,
    composition_mu,
    enumerate_w_of_k,
    enumerate_w_upper_k,
    k_star,
    permutation_table,
)
from .polynomials import (
    GAMMA_METHODS,
    gamma_basis,
    gamma_partitioned,
    gamma_reconstruct,
    h_poly_partitioned,
    is_palindromic,
)
from .tableaux import (
    dim_irreducible,
    hat_words_with_content,
    kostka,
    partitions,
    phi,
    rep_gamma,
    rsk,
    rsk_inverse,
    tableau_descent_set,
)
from .theta import effective_expression, j_full, theta, theta_inverse
from .words import des, descent_set, multiplicities

SCHEMA = "v1"
SUITES: tuple[str, ...] = ("gamma", "bijection", "hop", "rsk", "kostka", "phi")


def _perm(w) -> list[int]:
    return [int(x) for x in w]


def check_gamma(K: KSubset) -> dict | None:
    h = h_poly_partitioned(K)
    d = K.n - 1
    if not is_palindromic(h, d):
        return {"reason": "h not palindromic", "h": list(h)}
    vectors = {m: gamma_partitioned(K, m) for m in GAMMA_METHODS}
    entries = {m: list(g.entries) for m, g in vectors.items()}
    if len({tuple(e) for e in entries.values()}) != 1:
        return {"reason": "gamma methods disagree", "gamma": entries}
    if not vectors["hpoly"].is_nonnegative():
        return {"reason": "negative gamma entry", "gamma": entries}
    if gamma_reconstruct(vectors["tilde"]) != h:
        return {"reason": "tilde counts do not reconstruct h", "gamma": entries, "h": list(h)}
    if h_poly_partitioned(k_star(K)) != h:
        return {"reason": "h(K) != h(K*)", "K*": str(k_star(K))}
    return None


def check_bijection(K: KSubset) -> dict | None:
    target = set(enumerate_w_of_k(K))
    for u in permutation_table(K.n).rows(slice(None)):
        if j_full(u, K) not in target:
            return {"reason": "J_K(u) outside W(K)", "u": _perm(u)}
    image = set()
    total = 0
    for w in enumerate_w_upper_k(K, "tilde"):
        for u in hop_class(w).sorted():
            total += 1
            v = theta(w, u, K)
            effective_expression(u, K, check_lemma=True)
            if v not in target:
                return {"reason": "Theta(w, u) outside W(K)", "w": _perm(w), "u": _perm(u), "v": _perm(v)}
            if des(v) != des(u):
                return {"reason": "descent count changed", "w": _perm(w), "u": _perm(u), "v": _perm(v)}
            back = theta_inverse(v, K)
            if back != (w, u):
                return {
                    "reason": "theta_inverse(theta(w, u)) != (w, u)",
                    "w": _perm(w), "u": _perm(u), "v": _perm(v),
                    "got": [_perm(back[0]), _perm(back[1])],
                }
            image.add(v)
    if total != len(target) or image != target:
        return {"reason": "Theta is not onto W(K)", "domain": total, "W(K)": len(target), "image": len(image)}
    return None


def check_hop(K: KSubset) -> dict | None:
    n = K.n
    d = n - 1
    lhs = [0] * (d + 1)
    closed = [0] * (d + 1)
    seen: set = set()
    for w in enumerate_w_upper_k(K, "tilde"):
        c = hop_class(w)
        if c.canonical != w:
            return {"reason": "tilde element is not canonical", "w": _perm(w)}
        if len(c) != 2 ** (d - 2 * c.peaks):
            return {"reason": "class size != 2^#free", "w": _perm(w), "size": len(c)}
        poly = class_descent_poly(c)
        lhs = [a + b for a, b in zip(lhs, poly)]
        closed = [a + b for a, b in zip(closed, gamma_basis(des(w), d))]
        seen |= c.members
    if lhs != closed or tuple(lhs) != h_poly_partitioned(K):
        return {"reason": "hop sum != h-polynomial", "hop_sum": lhs, "closed_form": closed}
    if not K.members and len(seen) != factorial(n):
        return {"reason": "hop classes do not cover S_n", "covered": len(seen)}
    return None


def check_rsk(K: KSubset) -> dict | None:
    mu = composition_mu(K)
    for v in hat_words_with_content(mu):
        P, Q = rsk(v)
        if rsk_inverse(P, Q) != v:
            return {"reason": "RSK roundtrip failed", "v": _perm(v)}
        if P.content() != multiplicities(v):
            return {"reason": "content(P) != multiplicities(v)", "v": _perm(v)}
        if tableau_descent_set(Q) != descent_set(v):
            return {"reason": "Des(Q) != Des(v)", "v": _perm(v)}
    return None


def check_kostka(K: KSubset) -> dict | None:
    n = K.n
    mu = composition_mu(K)
    expected = gamma_partitioned(K, "hpoly")
    hat = rep_gamma(K, "hat")
    tilde = rep_gamma(K, "tilde")
    if hat != expected or tilde != expected:
        return {
            "reason": "Kostka-weighted gamma mismatch",
            "hpoly": list(expected.entries), "hat": list(hat.entries), "tilde": list(tilde.entries),
        }
    dim = sum(kostka(lam, mu) * dim_irreducible(lam) for lam in partitions(n))
    if dim != factorial(n) // prod(factorial(m) for m in mu):
        return {"reason": "sum K_{lambda,mu} dim S^lambda != |S_n / W_K|", "got": dim}
    return None


def check_phi(K: KSubset) -> dict | None:
    words = hat_words_with_content(composition_mu(K))
    target = set(enumerate_w_upper_k(K, "hat"))
    image = set()
    for v in words:
        w = phi(v, K)
        if w not in target:
            return {"reason": "phi(v) outside hat-W^K", "v": _perm(v), "phi": _perm(w)}
        if descent_set(w) != descent_set(v):
            return {"reason": "phi changed the descent set", "v": _perm(v), "phi": _perm(w)}
        image.add(w)
    if len(image) != len(words) or image != target:
        return {"reason": "phi is not a bijection", "words": len(words), "hat-W^K": len(target)}
    return None


CHECKS: dict[str, Callable[[KSubset], dict | None]] = {
    "gamma": check_gamma,
    "bijection": check_bijection,
    "hop": check_hop,
    "rsk": check_rsk,
    "kostka": check_kostka,
    "phi": check_phi,
}


def parse_checks(text: str) -> tuple[str, ...]:
    names = [t.strip() for t in text.split(",") if t.strip()]
    if not names or names == ["all"]:
        return SUITES
    unknown = [t for t in names if t not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; choose from {', '.join(SUITES)} or all")
    return tuple(t for t in SUITES if t in names)


def verify_record(n: int, mask: int, checks: Iterable[str]) -> tuple[dict, float]:
    """Build one report record for (n, K); returns the record and its runtime."""
    start = time.perf_counter()
    K = KSubset.from_mask(n, mask)
    table = permutation_table(n)
    gamma = {m: list(gamma_partitioned(K, m).entries) for m in GAMMA_METHODS}
    record = {
        "n": n,
        "K": list(K.sorted()),
        "h": list(h_poly_partitioned(K)),
        "gamma": gamma,
        "counts": {
            "W^K": int(table.select(K, "wk").sum()),
            "W(K)": int(table.select(K, "wofk").sum()),
            "tilde-W^K": int(table.select(K, "wk", "tilde").sum()),
            "hat-W^K": int(table.select(K, "wk", "hat").sum()),
        },
        "checks": {},
    }
    failure = None
    for name in checks:
        try:
            problem = CHECKS[name](K)
        except AssertionError as exc:
            problem = {"reason": f"internal check failed: {exc}"}
        record["checks"][name] = problem is None
        if problem is not None and failure is None:
            failure = {"check": name, "n": n, "K": list(K.sorted()), **problem}
    record["passed"] = all(record["checks"].values())
    if failure is not None:
        record["counterexample"] = failure
    return record, time.perf_counter() - start


def _verify_star(args):
    return verify_record(*args)


def run_verification(max_n: int, checks: Iterable[str] = SUITES, jobs: int = 1) -> dict:
    """Run the selected suites over every K of [n-1] for n = 1..max_n."""
    checks = tuple(checks)
    tasks = [(n, mask, checks) for n in range(1, max_n + 1) for mask in range(1 << (n - 1))]
    start = time.perf_counter()
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_star, tasks, chunksize=4))
    else:
        results = [verify_record(*t) for t in tasks]
    results.sort(key=lambda rt: (rt[0]["n"], KSubset(rt[0]["n"], rt[0]["K"]).mask))
    records = [r for r, _ in results]
    failures = [r for r in records if not r["passed"]]
    return {
        "schema": SCHEMA,
        "max_n": max_n,
        "checks": list(checks),
        "records": records,
        "summary": {
            "records": len(records),
            "passed": len(records) - len(failures),
            "failed": len(failures),
            "ok": not failures,
            "first_counterexample": failures[0]["counterexample"] if failures else None,
        },
        "metadata": {
            "elapsed_seconds": round(time.perf_counter() - start, 6),
            "record_seconds": [
                {"n": r["n"], "K": r["K"], "seconds": round(t, 6)} for r, t in results
            ],
        },
    }

