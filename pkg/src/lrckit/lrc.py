"""Parity-check construction and exact distance analysis for local codes.

A verifying family of m sets over GF(q) yields an (m + d - 2) x m(r+1)
parity-check matrix: one 0/1 block-indicator row per set, then d - 2 rows
of consecutive powers (exponents 1..d-2) of the set elements.  The block
indicator makes every block of r+1 coordinates sum to zero in any codeword,
which is what gives each symbol an r-symbol repair group.  Distance claims
are checked by brute force over column subsets; nothing here relies on the
coverage condition being sufficient, so the two verdicts stay independent.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Optional

from . import linalg
from .gf import GF
from .setfam import SetFamily, verify_union_condition

DEFAULT_SUBSET_BUDGET = 30_000_000


@dataclass(frozen=True)
class ParityCheckMatrix:
    q: int
    m: int
    r: int
    d: int
    rows: tuple[tuple[int, ...], ...]
    field: GF = dc_field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.m * (self.r + 1)

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(row[j] for row in self.rows) for j in range(self.n)]

    def block_of(self, position: int) -> int:
        return position // (self.r + 1)


def build_parity_check(family: SetFamily, d: int, field: Optional[GF] = None) -> ParityCheckMatrix:
    """Assemble the block-indicator plus power rows for design distance d.

    Requires d >= 5 and a family whose t covers floor((d-1)/2).  Column
    order follows the family: block i occupies columns i(r+1)..(i+1)(r+1)-1,
    elements ascending inside a block.
    """
    if d < 5:
        raise ValueError(f"design distance d={d} is below the supported minimum 5")
    t_needed = (d - 1) // 2
    if family.t < t_needed:
        raise ValueError(f"family checked at t={family.t} cannot back distance d={d}")
    fld = field if field is not None else GF(family.q)
    if fld.q != family.q:
        raise ValueError("field order does not match the family")
    m, r = family.m, family.r
    n = m * (r + 1)
    rows: list[list[int]] = []
    for i in range(m):
        row = [0] * n
        for j in range(i * (r + 1), (i + 1) * (r + 1)):
            row[j] = 1
        rows.append(row)
    flat = [a for s in family.sets for a in s]
    for power in range(1, d - 1):
        rows.append([fld.pow(a, power) for a in flat])
    return ParityCheckMatrix(family.q, m, r, d, tuple(tuple(rw) for rw in rows), fld)


def rank(field: GF, rows) -> int:
    return linalg.rank(field, rows)


def columns_independent(pcm: ParityCheckMatrix, indices) -> bool:
    idx = list(indices)
    if len(set(idx)) != len(idx):
        raise ValueError("column indices must be distinct")
    if any(j < 0 or j >= pcm.n for j in idx):
        raise ValueError("column index out of range")
    cols = pcm.columns()
    sub = [[cols[j][i] for j in idx] for i in range(len(pcm.rows))]
    return linalg.rank(pcm.field, sub) == len(idx)


def verify_distance_at_least(
    pcm: ParityCheckMatrix, d: Optional[int] = None, budget: int = DEFAULT_SUBSET_BUDGET
) -> Optional[tuple[int, ...]]:
    """None when every d-1 columns are independent, else a witness subset.

    The scan runs over subset sizes 1..d-1 in ascending order and short
    circuits at the first dependency, so a witness is always one of minimum
    size (and lexicographically least among those).  It doubles as the
    support of a minimum-weight codeword when the verdict is negative at
    the true distance.
    """
    dd = pcm.d if d is None else d
    return linalg.smallest_dependent_subset(pcm.field, pcm.columns(), dd - 1, budget=budget)


def exact_min_distance(pcm: ParityCheckMatrix, budget: int = DEFAULT_SUBSET_BUDGET) -> int:
    """Exhaustive minimum distance: the smallest number of dependent columns.

    Any rank+1 columns are dependent, so the scan is capped there; instances
    whose subset count exceeds `budget` are rejected up front.
    """
    cap = linalg.rank(pcm.field, pcm.rows) + 1
    witness = linalg.smallest_dependent_subset(pcm.field, pcm.columns(), cap, budget=budget)
    assert witness is not None
    return len(witness)


def min_distance_witness(
    pcm: ParityCheckMatrix, budget: int = DEFAULT_SUBSET_BUDGET
) -> tuple[int, ...]:
    """Lexicographically least dependent column set of minimum size."""
    cap = linalg.rank(pcm.field, pcm.rows) + 1
    witness = linalg.smallest_dependent_subset(pcm.field, pcm.columns(), cap, budget=budget)
    assert witness is not None
    return witness


def singleton_bound(n: int, k: int, r: int) -> int:
    """Distance ceiling n - k - ceil(k/r) + 2 for locality r."""
    if n < 1 or k < 1 or r < 1:
        raise ValueError("need n, k, r >= 1")
    return n - k - (-(-k // r)) + 2


@dataclass(frozen=True)
class CodeParams:
    q: int
    n: int
    k: int
    d: int
    r: int
    m: int
    t: int

    def __post_init__(self) -> None:
        if self.d < 5:
            raise ValueError("d must be at least 5")
        if self.t < 2:
            raise ValueError("t must be at least 2")
        if self.r < self.d - 2:
            raise ValueError("locality r must be at least d-2")
        if self.n % (self.r + 1) != 0:
            raise ValueError("block length must be a multiple of r+1")
        if not 1 <= self.k < self.n:
            raise ValueError("dimension k must satisfy 1 <= k < n")


class OptimalityKind(Enum):
    SINGLETON = "singleton"
    ADJUSTED = "adjusted"
    NOT_OPTIMAL = "not-optimal"


@dataclass(frozen=True)
class OptimalityVerdict:
    kind: OptimalityKind
    bound_value: int


def optimality_check(params: CodeParams, actual_d: int) -> OptimalityVerdict:
    """Compare an exact distance against the applicable locality bound.

    When actual_d - 2 is congruent to r mod r+1 the distance ceiling
    n - k - ceil(k/r) + 2 is out of reach and optimal means hitting the
    adjusted ceiling one below it.  Otherwise optimal means meeting the
    ceiling exactly, together with the redundancy identity
    n - k = n/(r+1) + d - 2 - floor((d-2)/(r+1)) that equality forces.
    """
    n, k, r = params.n, params.k, params.r
    if (actual_d - 2) % (r + 1) == r:
        bound = n - k - (-(-k // r)) + 1
        kind = OptimalityKind.ADJUSTED if actual_d == bound else OptimalityKind.NOT_OPTIMAL
    else:
        bound = singleton_bound(n, k, r)
        redundancy_ok = n - k == n // (r + 1) + actual_d - 2 - (actual_d - 2) // (r + 1)
        kind = (
            OptimalityKind.SINGLETON
            if (actual_d == bound and redundancy_ok)
            else OptimalityKind.NOT_OPTIMAL
        )
    return OptimalityVerdict(kind, bound)


def code_params_from_family(
    family: SetFamily, d: int, pcm: Optional[ParityCheckMatrix] = None
) -> CodeParams:
    """Derive [n, k] from a verifying family and a design distance.

    n = m(r+1) and k = n - m - (d - 2), taking the parity-check matrix at
    full rank; a rank-deficient matrix, a failing family, or k < 1 is
    rejected.
    """
    t_needed = (d - 1) // 2
    check = SetFamily(family.q, family.r, max(t_needed, 2), family.sets)
    if verify_union_condition(check):
        raise ValueError("family fails the coverage condition for this distance")
    if pcm is None:
        pcm = build_parity_check(family, d)
    n = family.m * (family.r + 1)
    k = n - family.m - (d - 2)
    if k < 1:
        raise ValueError(f"parameters give dimension k={k}; need k >= 1")
    got_rank = linalg.rank(pcm.field, pcm.rows)
    if got_rank < family.m + d - 2:
        raise ValueError(
            f"parity-check rank {got_rank} is below m + d - 2 = {family.m + d - 2}"
        )
    return CodeParams(q=family.q, n=n, k=k, d=d, r=family.r, m=family.m, t=t_needed)
