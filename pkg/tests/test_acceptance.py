"""Acceptance criteria, one test per criterion, each with its runtime bound.

A PASS/FAIL line per criterion is printed in the pytest terminal summary.
Run alone with ``pytest tests/test_acceptance.py``.
"""
from __future__ import annotations

import functools
import time

import pytest

from linedigraph import (Behaviour, MonicPolynomial, adjacency_matrix, characteristic_matrix,
                         check_commutation, ck4_shape_partition, ck24_partition, ckd4_closed_form,
                         classify, coarsest_regular_partition, cyclic_kautz, extend,
                         fixture_quotients, is_regular_partition, kautz, line_digraph,
                         minimal_polynomial, order_bruteforce, quotient_matrix, sandwich,
                         shortest_recurrence, squarefree_count, theorem_recurrence, unicyclic,
                         unicyclic_partition, walk_count_check)
from linedigraph.families import longest_walk, random_dag

from conftest import seeded_digraphs

RESULTS: list[tuple[int, str, bool, float, float]] = []


def criterion(number: int, title: str, max_seconds: float):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            ok = False
            try:
                fn(*args, **kwargs)
                elapsed = time.perf_counter() - start
                assert elapsed < max_seconds, f"took {elapsed:.2f}s, limit {max_seconds}s"
                ok = True
            finally:
                RESULTS.append((number, title, ok, time.perf_counter() - start, max_seconds))
        return run
    return wrap


def explicit_orders(G, k_max):
    sizes, L = [G.n], G
    for _ in range(k_max):
        L = line_digraph(L, labels=False)
        sizes.append(L.n)
    return sizes


@criterion(1, "CK(2,4) end-to-end", 1.0)
def test_ck24_end_to_end():
    G = cyclic_kautz(2, 4)
    assert G.n == 18
    pi = ck24_partition(G)
    B = quotient_matrix(G, pi)
    assert B == [[0, 1, 1], [0, 1, 1], [1, 0, 0]]
    assert str(minimal_polynomial(B)) == "x^3 - x^2 - x"
    rec = theorem_recurrence(G, pi)
    assert extend(rec, 4) == [18, 30, 48, 78, 126]
    assert rec.effective_start == 2


@criterion(2, "squarefree words equal CK(2,4) orders, k <= 12", 30.0)
def test_squarefree_oracle():
    G = cyclic_kautz(2, 4)
    terms = extend(theorem_recurrence(G, ck24_partition(G)), 12)
    assert [squarefree_count(k + 4) for k in range(13)] == terms


@criterion(3, "CK(d,4), d in 2..5: polynomial, initial terms, explicit, closed form, growth", 60.0)
def test_ckd4_family():
    for d in (2, 3, 4, 5):
        G = cyclic_kautz(d, 4)
        pi = ck4_shape_partition(G, d)
        assert is_regular_partition(G, pi)
        B = quotient_matrix(G, pi)
        assert minimal_polynomial(B) == MonicPolynomial((d - 1, 1, 0))
        assert minimal_polynomial(fixture_quotients(d=d)["ckd4"].B) == MonicPolynomial((d - 1, 1, 0))
        rec = theorem_recurrence(G, pi)
        assert rec.initial[0] == d ** 4 + d
        assert rec.initial[1] == d ** 5 - d ** 4 + d ** 3 + 2 * d ** 2 - d
        assert extend(rec, 5) == explicit_orders(G, 5)
        exact = extend(rec, 30)
        for k, value in enumerate(exact):
            assert abs(ckd4_closed_form(d, k) - value) <= 1e-9 * value
        assert classify(rec, 30).behaviour is Behaviour.INCREASING


@criterion(4, "unicyclic G_(n,d): constant order n(d+2) on three paths", 5.0)
def test_unicyclic_family():
    for n, d in [(3, 2), (4, 3), (5, 1)]:
        G = unicyclic(n, d)
        pi = coarsest_regular_partition(G)
        assert pi.as_set() == unicyclic_partition(n, d).as_set()
        B = quotient_matrix(G, pi)
        assert minimal_polynomial(B) == MonicPolynomial((1, 0, 0))
        rec = theorem_recurrence(G, pi)
        expected = [n * (d + 2)] * 16
        assert explicit_orders(G, 15) == expected
        assert [order_bruteforce(G, k) for k in range(16)] == expected
        assert [sandwich(pi.sizes, B, k) for k in range(16)] == expected
        assert extend(rec, 15) == expected
        c = classify(rec, 15)
        assert (c.behaviour, c.value) == (Behaviour.CONSTANT, n * (d + 2))


@criterion(5, "acyclic fixture: x^5, zero recurrence of order 5, vanishing DAG orders", 1.0)
def test_acyclic():
    assert minimal_polynomial(fixture_quotients()["acyclic6"].B) == MonicPolynomial((0,) * 5)
    rec = shortest_recurrence([16, 18, 15, 9, 3] + [0] * 7)
    assert rec.order == 5 and all(a == 0 for a in rec.alpha)
    assert classify(rec, 12).behaviour is Behaviour.VANISHING
    for seed in range(20):
        dag = random_dag(9, 0.35, seed)
        depth = longest_walk(dag)
        assert all(order_bruteforce(dag, k) == 0 for k in range(depth + 1, depth + 6))
        assert order_bruteforce(dag, depth) > 0
        drec = theorem_recurrence(dag, coarsest_regular_partition(dag))
        assert classify(drec, drec.order + depth + 2).behaviour is Behaviour.VANISHING


@criterion(6, "Kautz K(d,l): n_k = d^k n for k <= 8", 5.0)
def test_regular_law():
    for d in (2, 3):
        for length in (2, 3):
            G = kautz(d, length)
            rec = theorem_recurrence(G, coarsest_regular_partition(G))
            expected = [d ** k * G.n for k in range(9)]
            assert [order_bruteforce(G, k) for k in range(9)] == expected
            assert extend(rec, 8) == expected


def partition_cases():
    cases = []
    G = cyclic_kautz(2, 4)
    cases.append((G, ck24_partition(G)))
    for d in (3, 4, 5):
        G = cyclic_kautz(d, 4)
        cases.append((G, ck4_shape_partition(G, d)))
    for n, d in [(3, 2), (4, 3), (5, 1)]:
        cases.append((unicyclic(n, d), unicyclic_partition(n, d)))
    fixtures = [case[0] for case in cases] + [kautz(2, 3), kautz(3, 2), random_dag(9, 0.35, 0)]
    cases.extend((G, coarsest_regular_partition(G)) for G in fixtures)
    cases.extend((G, coarsest_regular_partition(G)) for G in seeded_digraphs(50, 12, base_seed=700))
    return cases


@criterion(7, "commutation S B = A S and cell walk counts, k <= 6", 60.0)
def test_commutation_and_walk_counts():
    for G, pi in partition_cases():
        B = quotient_matrix(G, pi)
        assert check_commutation(adjacency_matrix(G), characteristic_matrix(pi), B)
        for k in range(7):
            assert walk_count_check(G, pi, k)


@criterion(8, "triple agreement on 100 random digraphs, k <= 5", 120.0)
def test_triple_agreement():
    for G in seeded_digraphs(100, 10, p=0.3, base_seed=8000):
        pi = coarsest_regular_partition(G)
        B = quotient_matrix(G, pi)
        explicit = explicit_orders(G, 5)
        for k in range(6):
            assert explicit[k] == order_bruteforce(G, k) == sandwich(pi.sizes, B, k)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
