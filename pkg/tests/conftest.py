"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the package's own linear algebra:
column dependence is decided through sympy integer determinants reduced
mod p, Berge cycles through exhaustive edge-tuple search, and collision
probabilities through bare enumeration of completions.  Tests compare
package output against these slower routes.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Optional, Sequence

import pytest
from sympy import Matrix

from lrckit.rng import SplitMix64
from lrckit.setfam import SetFamily, greedy_family


# ---------------------------------------------------------------- oracles


def minors_dependent(rows: Sequence[Sequence[int]], idx: Sequence[int], p: int) -> bool:
    """Columns `idx` are dependent mod p iff every maximal square minor
    vanishes.  Prime fields only; determinants are exact integers."""
    w = len(idx)
    if w > len(rows):
        return True
    sub = [[row[j] for j in idx] for row in rows]
    for rsel in itertools.combinations(range(len(rows)), w):
        if Matrix([sub[i] for i in rsel]).det() % p != 0:
            return False
    return True


def minors_min_distance(
    rows: Sequence[Sequence[int]], n: int, p: int, cap: int
) -> Optional[tuple[int, tuple[int, ...]]]:
    """Smallest dependent column set by brute enumeration, with witness."""
    for w in range(1, cap + 1):
        for idx in itertools.combinations(range(n), w):
            if minors_dependent(rows, idx, p):
                return w, idx
    return None


def berge_cycle_exists(edges: Sequence[frozenset[int]], max_len: int) -> bool:
    """Berge cycle of length 2..max_len: distinct edges e_1..e_l and
    distinct vertices v_1..v_l with v_i in e_i and in e_{i+1} (cyclically).
    Pure backtracking over ordered edge tuples; exponential but tiny here."""

    def distinct_reps(cands: list[set[int]]) -> bool:
        def rec(i: int, used: set[int]) -> bool:
            if i == len(cands):
                return True
            for v in cands[i] - used:
                if rec(i + 1, used | {v}):
                    return True
            return False

        return rec(0, set())

    for length in range(2, max_len + 1):
        for combo in itertools.permutations(range(len(edges)), length):
            cands = [
                set(edges[combo[i]] & edges[combo[(i + 1) % length]])
                for i in range(length)
            ]
            if all(cands) and distinct_reps(cands):
                return True
    return False


def collision_probability(q: int, size: int, fixed: Sequence[frozenset[int]]) -> Fraction:
    """P(|union| <= (size-1)*s) over uniform completions of the partially
    fixed sets, by full enumeration."""
    s = len(fixed)
    pools = []
    for f in fixed:
        rest = [x for x in range(q) if x not in f]
        pools.append(list(itertools.combinations(rest, size - len(f))))
    total = 0
    bad = 0

    def rec(i: int, acc: list[set[int]]) -> None:
        nonlocal total, bad
        if i == s:
            total += 1
            if len(set().union(*acc)) <= (size - 1) * s:
                bad += 1
            return
        for comp in pools[i]:
            rec(i + 1, acc + [set(fixed[i]) | set(comp)])

    rec(0, [])
    return Fraction(bad, total)


# ---------------------------------------------------------------- corpus

CORPUS_QS = [11, 13, 16, 17, 19, 23, 25, 27, 29, 31]
CORPUS_RS = [3, 4, 5]
CORPUS_DS = [5, 6, 7]


def _forced_triple(q: int, r: int, t: int) -> Optional[SetFamily]:
    # three sets chained through single shared elements: pairwise fine,
    # union 3r, so the size-3 coverage test fails
    pool = list(range(q))
    a = pool[: r + 1]
    b = [a[0]] + pool[r + 1 : 2 * r + 1]
    c = [a[1], b[1]] + pool[2 * r + 1 : 3 * r]
    if len(c) != r + 1 or len(set(a) | set(b) | set(c)) != 3 * r:
        return None
    return SetFamily(q, r, t, (tuple(a), tuple(sorted(b)), tuple(sorted(c))))


def build_equivalence_corpus() -> list[tuple[SetFamily, int]]:
    """Mixed corpus for the two equivalence suites: raw random draws
    (violations arise naturally at small q), greedy-verified families,
    and deliberately broken variants of the verified ones."""
    corpus: list[tuple[SetFamily, int]] = []
    rng = SplitMix64(20260814)
    for q in CORPUS_QS:
        for r in CORPUS_RS:
            for d in CORPUS_DS:
                t = (d - 1) // 2
                m_hi = 3 if (r == 5 and d == 7) else 5
                for _ in range(3):
                    m = 2 + rng.below(m_hi - 1)
                    sets = tuple(rng.subset(q, r + 1) for _ in range(m))
                    corpus.append((SetFamily(q, r, t, sets), d))
                fam = greedy_family(q, r, t, 512, seed=rng.next64() & 0xFFFF, target_m=min(m_hi, 4))
                if fam.m < 2:
                    continue
                corpus.append((fam, d))
                # overwrite set 1 so it shares two elements with set 0
                s0 = list(fam.sets[0])
                others = [x for x in range(q) if x not in s0[:2]]
                bad = tuple(sorted(s0[:2] + others[: r - 1]))
                corpus.append((SetFamily(q, r, t, (fam.sets[0], bad) + fam.sets[2:]), d))
                # duplicate set 0 outright
                corpus.append((SetFamily(q, r, t, (fam.sets[0],) + fam.sets), d))
                if t >= 3:
                    tripled = _forced_triple(q, r, t)
                    if tripled is not None:
                        corpus.append((tripled, d))
    return corpus


@pytest.fixture(scope="session")
def equivalence_corpus() -> list[tuple[SetFamily, int]]:
    return build_equivalence_corpus()


# ------------------------------------------------- fixed reference codes

SINGLETON_FAMILY = ((0, 1, 2, 3, 4), (0, 5, 6, 7, 8), (1, 5, 9, 10, 11))
ODD_Q_D6_FAMILY = ((0, 1, 2, 3, 4, 5), (0, 6, 7, 8, 9, 10))
ADJUSTED_FAMILY = ((0, 1, 2, 3), (0, 4, 5, 6), (1, 4, 7, 8))


@pytest.fixture(scope="session")
def singleton_code():
    """q=13, r=4, d=5 reference code: n=15, k=9, distance 5."""
    from lrckit.lrc import build_parity_check, code_params_from_family

    fam = SetFamily(13, 4, 2, SINGLETON_FAMILY)
    pcm = build_parity_check(fam, 5)
    params = code_params_from_family(fam, 5, pcm)
    return fam, pcm, params


@pytest.fixture(scope="session")
def odd_q_d6_code():
    """q=17, r=5, d=6 reference code: n=12, k=6, distance 6."""
    from lrckit.lrc import build_parity_check, code_params_from_family

    fam = SetFamily(17, 5, 2, ODD_Q_D6_FAMILY)
    pcm = build_parity_check(fam, 6)
    params = code_params_from_family(fam, 6, pcm)
    return fam, pcm, params


@pytest.fixture(scope="session")
def adjusted_code():
    """q=13, r=3, d=5 reference code: n=12, k=6, distance 5 = adjusted bound."""
    from lrckit.lrc import build_parity_check, code_params_from_family

    fam = SetFamily(13, 3, 2, ADJUSTED_FAMILY)
    pcm = build_parity_check(fam, 5)
    params = code_params_from_family(fam, 5, pcm)
    return fam, pcm, params
