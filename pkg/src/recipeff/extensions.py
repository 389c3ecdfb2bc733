"""Order-(n+1) extensions of reciprocal matrices.

An extension of A is a reciprocal matrix B of order n+1 whose leading n x n
principal block is A.  The central construction appends a column that makes
every row of B sum to the same value s, which forces the all-ones vector to
be the Perron eigenvector of B — and a Perron eigenvector with all
components equal is always efficient.  Conjugating by a positive diagonal
transports that construction to an extension of the original matrix whose
Perron vector is any prescribed positive direction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ReciprocalMatrix, make_reciprocal, perron
from .digraph import (
    DEFAULT_EPS_REL,
    build_digraph,
    no_source_theorem_check,
    strongly_connected,
)

ROOT_ATOL = 1e-13
ROW_SUM_RTOL = 1e-10
APPENDED_SPAN = 9.0  # appended entries sampled log-uniformly in [1/9, 9]


@dataclass(frozen=True)
class ExtensionResult:
    """A constant-row-sum extension: matrix, common row sum, eigen residual."""

    B: ReciprocalMatrix
    target_sum: float
    perron_check: float

    def __post_init__(self) -> None:
        sums = self.B.a.sum(axis=1)
        if np.max(np.abs(sums - self.target_sum)) > ROW_SUM_RTOL * self.target_sum:
            raise ValueError("row sums deviate from the target")


def remove_index(C: ReciprocalMatrix, i: int) -> ReciprocalMatrix:
    """Remove row and column i (1-based)."""
    if C.n < 3:
        raise ValueError("need order >= 3 to remove an index")
    if not 1 <= i <= C.n:
        raise ValueError(f"index {i} out of range 1..{C.n}")
    sub = np.delete(np.delete(C.a, i - 1, axis=0), i - 1, axis=1)
    return make_reciprocal(sub, mode="validate")


def is_extension(B: ReciprocalMatrix, A: ReciprocalMatrix, tol: float = 0.0) -> bool:
    """True iff B with its last row/column removed equals A within tol."""
    if B.n != A.n + 1:
        raise ValueError(f"order mismatch: {B.n} is not {A.n} + 1")
    lead = B.a[: A.n, : A.n]
    if tol == 0.0:
        return bool(np.array_equal(lead, A.a))
    return bool(np.max(np.abs(lead - A.a)) <= tol)


def row_sums(A: ReciprocalMatrix) -> np.ndarray:
    return A.a.sum(axis=1)


def well_behaved_type_I(A: ReciprocalMatrix) -> bool:
    """First row sum exceeds the last by more than 1."""
    r = row_sums(A)
    return bool(r[0] - r[-1] > 1.0)


def _solve_target_sum(r: np.ndarray) -> float:
    """Unique root of f(s) = 1 + sum_i 1/(s - r_i) - s on (max r_i, inf).

    f is strictly decreasing there, tends to +inf at the left end and to
    -inf as s grows, so a sign change brackets exactly one root.  Bracketed
    bisection to 1e-13 absolute.
    """
    n = r.size
    rmax = float(np.max(r))

    def f(s: float) -> float:
        return 1.0 + float(np.sum(1.0 / (s - r))) - s

    lo = rmax + 1e-9
    hi = rmax + n + 1.0
    if not f(lo) > 0.0:
        raise RuntimeError("left bracket endpoint not positive")
    while f(hi) > 0.0:
        hi = rmax + 2.0 * (hi - rmax)
    while hi - lo > ROOT_ATOL:
        mid = 0.5 * (lo + hi)
        if f(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _append_column(A: ReciprocalMatrix, col: np.ndarray) -> ReciprocalMatrix:
    """Extension with appended column col; leading block is A verbatim."""
    n = A.n
    b = np.ones((n + 1, n + 1))
    b[:n, :n] = A.a
    b[:n, n] = col
    b[n, :n] = 1.0 / col
    return make_reciprocal(b, mode="validate")


def constant_row_sum_extension(A: ReciprocalMatrix) -> ExtensionResult:
    """Extend A so that every row of the result sums to the same value s.

    With row sums r_i of A, appending b_{i,n+1} = s - r_i makes rows
    1..n sum to s; the closing reciprocal row sums to s exactly when s
    solves 1 + sum 1/(s - r_i) = s.  The all-ones vector is then the
    Perron eigenvector of the result with eigenvalue s.
    """
    r = row_sums(A)
    s = _solve_target_sum(r)
    B = _append_column(A, s - r)
    residual = float(np.max(np.abs(B.a.sum(axis=1) - s)))
    return ExtensionResult(B=B, target_sum=s, perron_check=residual)


def conjugated_extension(
    A_orig: ReciprocalMatrix, D: np.ndarray
) -> ReciprocalMatrix:
    """Extension of A_orig whose Perron direction is (1/D, 1).

    Conjugate by D to B' = D A D^{-1}, extend B' to constant row sums, and
    conjugate back with D^{-1} (+) [1].  The leading block of the result is
    A_orig verbatim; the appended column is (s - r_i(B')) / d_i; the Perron
    eigenvector is proportional to (1/d_1, ..., 1/d_n, 1).
    """
    d = np.asarray(D, dtype=float).reshape(-1)
    if d.size != A_orig.n:
        raise ValueError(f"diagonal has {d.size} entries, expected {A_orig.n}")
    if not np.all(d > 0):
        raise ValueError("diagonal entries must be positive")
    Bp = make_reciprocal(A_orig.a * (d[:, None] / d[None, :]), mode="symmetrize")
    r = row_sums(Bp)
    s = _solve_target_sum(r)
    return _append_column(A_orig, (s - r) / d)


@dataclass(frozen=True)
class SourceScanReport:
    samples: int
    seed: int
    failures: tuple[int, ...]  # sample indices whose digraph misbehaved

    @property
    def ok(self) -> bool:
        return not self.failures


def extension_source_scan(
    A: ReciprocalMatrix,
    samples: int,
    seed: int,
    eps_rel: float = DEFAULT_EPS_REL,
) -> SourceScanReport:
    """Random extensions of A never yield a source under the Perron vector.

    Appends log-uniform columns in [1/9, 9], computes each Perron vector,
    and checks both the absence of sources and the incoming-edge witness
    condition.  Failures (expected none) are reported by sample index.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    span = np.log(APPENDED_SPAN)
    failures = []
    for k in range(samples):
        col = np.exp(rng.uniform(-span, span, size=A.n))
        B = _append_column(A, col)
        if not no_source_theorem_check(B, eps_rel):
            failures.append(k)
    return SourceScanReport(samples=samples, seed=seed, failures=tuple(failures))


def _dense_ranks(w: np.ndarray, tie_tol: float) -> tuple[int, ...]:
    """Descending dense ranks; values within tie_tol * max(w) tie."""
    gap = tie_tol * float(np.max(w))
    order = np.argsort(-w, kind="stable")
    ranks = np.empty(w.size, dtype=int)
    rank = 1
    ranks[order[0]] = rank
    for prev, cur in zip(order, order[1:]):
        if w[prev] - w[cur] > gap:
            rank += 1
        ranks[cur] = rank
    return tuple(int(v) for v in ranks)


def order_preservation_check(
    A: ReciprocalMatrix, B: ReciprocalMatrix, tie_tol: float = 1e-8
) -> tuple[bool, tuple[int, ...], tuple[int, ...]]:
    """Does extending A to B keep the ranking of the first n Perron weights?

    Returns (preserved, ranks of Perron(A).w, ranks of Perron(B).w[:n]),
    ranks dense and descending with tolerance-aware ties.
    """
    if not is_extension(B, A):
        raise ValueError("B is not an extension of A")
    ra = _dense_ranks(perron(A).w, tie_tol)
    rb = _dense_ranks(perron(B).w[: A.n], tie_tol)
    return ra == rb, ra, rb


def extension_report(
    A: ReciprocalMatrix,
    ext: ReciprocalMatrix,
    target_sum: float | None,
    eps_rel: float = DEFAULT_EPS_REL,
) -> dict:
    """JSON-ready summary of one extension of A."""
    pp = perron(ext)
    G = build_digraph(ext, pp.w, eps_rel)
    efficient, _, _ = strongly_connected(G)
    preserved, _, _ = order_preservation_check(A, ext)
    return {
        "base_order": A.n,
        "target_sum": target_sum,
        "appended_column": [float(v) for v in ext.a[: A.n, A.n]],
        "perron_vector": [float(v) for v in pp.w],
        "efficient": efficient,
        "order_preserved": preserved,
    }
