"""The conditional-probability kernels are the core of the deterministic
construction; they are checked here for exact rational equality against
full enumeration of completions, which is the strongest oracle available."""

import itertools
from fractions import Fraction

import pytest

from lrckit.derand import _collection_prob, _pair_prob, _triple_prob, derandomized_family
from lrckit.setfam import SetFamily, target_family_size, verify_union_condition

from conftest import collision_probability


PAIR_CASES = [
    (9, 3, (frozenset(), frozenset())),
    (9, 3, (frozenset({0}), frozenset())),
    (9, 3, (frozenset({0, 1}), frozenset({1}))),
    (9, 3, (frozenset({0, 1, 2}), frozenset({0, 3}))),
    (9, 3, (frozenset({0, 1, 2}), frozenset({3, 4, 5}))),
    (9, 3, (frozenset({0, 1, 2}), frozenset({0, 1, 3}))),
    (8, 4, (frozenset({0, 1}), frozenset({2}))),
]


@pytest.mark.parametrize("q,size,fixed", PAIR_CASES)
def test_pair_kernel_exact(q, size, fixed):
    assert _collection_prob(q, size, list(fixed)) == collision_probability(q, size, fixed)


TRIPLE_CASES = [
    (7, 2, (frozenset(), frozenset(), frozenset())),
    (7, 2, (frozenset({0}), frozenset(), frozenset())),
    (7, 2, (frozenset({0}), frozenset({0}), frozenset())),
    (7, 2, (frozenset({0, 1}), frozenset({1}), frozenset({2}))),
    (8, 3, (frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2}))),
    (8, 3, (frozenset({0, 1, 2}), frozenset({0, 1, 3}), frozenset({2}))),
    (8, 3, (frozenset(), frozenset({5}), frozenset({5, 6}))),
]


@pytest.mark.parametrize("q,size,fixed", TRIPLE_CASES)
def test_triple_kernel_exact(q, size, fixed):
    assert _collection_prob(q, size, list(fixed)) == collision_probability(q, size, fixed)


def test_kernels_are_permutation_invariant():
    fx = [frozenset({0, 1}), frozenset({1, 2, 3}), frozenset({4})]
    vals = {_collection_prob(8, 4, list(p)) for p in itertools.permutations(fx)}
    assert len(vals) == 1
    px = [frozenset({0, 1}), frozenset({2})]
    pvals = {_collection_prob(9, 3, list(p)) for p in itertools.permutations(px)}
    assert len(pvals) == 1


@pytest.mark.parametrize(
    "fixed,idx",
    [
        ((frozenset({0}), frozenset({1, 2})), 0),
        ((frozenset(), frozenset()), 1),
        ((frozenset({0}), frozenset({1}), frozenset({0, 1})), 2),
        ((frozenset(), frozenset({3}), frozenset({4, 5})), 0),
    ],
)
def test_martingale_identity(fixed, idx):
    # conditioning on one more element and averaging must reproduce the
    # parent probability (law of total probability); any discrepancy
    # breaks the non-increase argument of the greedy choice
    q, size = 9, 3
    parent = _collection_prob(q, size, list(fixed))
    cands = [c for c in range(q) if c not in fixed[idx]]
    acc = Fraction(0)
    for c in cands:
        child = list(fixed)
        child[idx] = child[idx] | {c}
        acc += _collection_prob(q, size, child)
    assert parent == acc / len(cands)


def test_probabilities_lie_in_unit_interval():
    for q, size in ((9, 3), (16, 4)):
        for fa in (frozenset(), frozenset({0}), frozenset({0, 1})):
            for fb in (frozenset(), frozenset({1}), frozenset({0, 2})):
                p = _pair_prob(q, size, len(fa), len(fb), len(fa & fb))
                assert 0 <= p <= 1


def test_derandomized_family_frozen_output():
    fam = derandomized_family(64, 2, 3)
    assert fam.sets == ((0, 1, 2), (3, 4, 5), (6, 7, 8), (0, 9, 10))
    assert fam.m >= target_family_size(64, 2, 3) == 2
    assert verify_union_condition(fam) == []
    again = derandomized_family(64, 2, 3)
    assert again == fam


def test_derandomized_family_t2():
    fam = derandomized_family(49, 3, 2)
    assert verify_union_condition(fam) == []
    assert fam.m >= 2
    for a, b in itertools.combinations(fam.sets, 2):
        assert len(set(a) & set(b)) <= 1


def test_derandomized_family_medium_case():
    fam = derandomized_family(100, 3, 2)
    assert verify_union_condition(fam) == []
    assert derandomized_family(100, 3, 2) == fam


@pytest.mark.parametrize(
    "q,r,t",
    [
        (64, 2, 4),  # t out of range
        (64, 2, 1),
        (1024, 2, 3),  # q above the envelope
        (512, 1, 2),  # 2m blows past the set cap
    ],
)
def test_envelope_rejections(q, r, t):
    with pytest.raises(ValueError):
        derandomized_family(q, r, t)
