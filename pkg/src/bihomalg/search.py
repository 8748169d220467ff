"""Brute-force enumeration of Rota-Baxter and one-sided Baxter operators on
algebras over prime fields.

The candidate space is every n x n matrix over F_p, walked in row-major
little-endian digit order (entry (0,0) is the least significant digit), so
output order is machine-independent.  Every hit found during the walk is
re-verified by a second, independent checker pass before being reported.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import BudgetExceeded
from .linalg import LinearMap
from .rota_baxter import (OneSidedBaxter, RBOperator, check_one_sided_baxter,
                          check_rota_baxter)
from .scalars import PRIME, FieldSpec, Scalar
from .structures import BiHomAssociativeAlgebra

BUDGET_ENV_VAR = "BIHOMALG_SEARCH_BUDGET"
DEFAULT_BUDGET = 10 ** 7


@dataclass
class SearchResult:
    operators: list          # LinearMap hits, in enumeration order
    field: FieldSpec
    dim: int
    weight: Scalar | None    # None for one-sided searches
    examined: int
    found: int
    elapsed: float
    side: str | None = None  # set for one-sided searches


def search_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    return int(raw) if raw else DEFAULT_BUDGET


def index_to_matrix(field: FieldSpec, n: int, k: int) -> LinearMap:
    """Decode the k-th matrix: base-p digits of k fill entries row-major,
    least significant digit first."""
    p = field.p
    flat = []
    for _ in range(n * n):
        k, d = divmod(k, p)
        flat.append(Scalar(field, d))
    rows = tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n))
    return LinearMap(field, rows)


def _space_size(A: BiHomAssociativeAlgebra) -> int:
    if A.field.kind != PRIME:
        raise ValueError("enumeration needs a prime field")
    total = A.field.p ** (A.dim * A.dim)
    budget = search_budget()
    if total > budget:
        raise BudgetExceeded(
            f"{total} candidate matrices exceed the budget of {budget}")
    return total


def _rb_range(A, weight, start, stop):
    hits = []
    for k in range(start, stop):
        R = RBOperator(index_to_matrix(A.field, A.dim, k), weight)
        if check_rota_baxter(A, R).passed:
            hits.append(k)
    return hits


def _baxter_range(A, side, start, stop):
    hits = []
    for k in range(start, stop):
        B = OneSidedBaxter(index_to_matrix(A.field, A.dim, k), side)
        if check_one_sided_baxter(A, B).passed:
            hits.append(k)
    return hits


def _run_partitioned(worker, args, total, jobs):
    if jobs <= 1:
        return worker(*args, 0, total)
    chunk = -(-total // jobs)
    ranges = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]
    hits = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(worker, *args, s, e) for s, e in ranges]
        for fut in futures:  # submission order keeps the merge deterministic
            hits.extend(fut.result())
    return hits


def enumerate_rb(A: BiHomAssociativeAlgebra, weight: Scalar,
                 jobs: int = 1) -> SearchResult:
    """All Rota-Baxter operators of the given weight on A, exhaustively."""
    total = _space_size(A)
    start = time.monotonic()
    hits = _run_partitioned(_rb_range, (A, weight), total, jobs)
    hits.sort()
    operators = []
    for k in hits:
        m = index_to_matrix(A.field, A.dim, k)
        if not check_rota_baxter(A, RBOperator(m, weight)).passed:
            raise AssertionError("second verification pass disagreed")
        operators.append(m)
    return SearchResult(operators, A.field, A.dim, weight, total,
                        len(operators), time.monotonic() - start)


def enumerate_baxter(A: BiHomAssociativeAlgebra, side: str,
                     jobs: int = 1) -> SearchResult:
    """All one-sided Baxter operators of the given side on A, exhaustively."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    total = _space_size(A)
    start = time.monotonic()
    hits = _run_partitioned(_baxter_range, (A, side), total, jobs)
    hits.sort()
    operators = []
    for k in hits:
        m = index_to_matrix(A.field, A.dim, k)
        if not check_one_sided_baxter(A, OneSidedBaxter(m, side)).passed:
            raise AssertionError("second verification pass disagreed")
        operators.append(m)
    return SearchResult(operators, A.field, A.dim, None, total,
                        len(operators), time.monotonic() - start, side=side)
