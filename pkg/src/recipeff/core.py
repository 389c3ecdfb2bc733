"""Reciprocal (pairwise-comparison) matrices and their Perron eigenpairs.

A reciprocal matrix is a positive square matrix with unit diagonal and
a_ij * a_ji = 1.  It is consistent when a_ij * a_jk = a_ik for all triples,
equivalently when it has the form (v_i / v_j) for a positive vector v.

Matrices are canonicalized from the upper triangle (a_ji stored as 1/a_ij),
so ratio tests against a_ij and a_ji can never disagree by more than a
rounding ulp.  Perron pairs are computed by power iteration and normalized
to have first component 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

RECIPROCITY_RTOL = 1e-12
PERRON_TOL = 1e-14
PERRON_MAX_ITER = 100_000


@dataclass(frozen=True, eq=False)
class ReciprocalMatrix:
    """Validated positive matrix with unit diagonal and a_ji == 1/a_ij."""

    a: np.ndarray

    @property
    def n(self) -> int:
        return self.a.shape[0]

    def __getitem__(self, ij: tuple[int, int]) -> float:
        """Entry access with 1-based indices, matching the usual notation."""
        i, j = ij
        return float(self.a[i - 1, j - 1])


@dataclass(frozen=True, eq=False)
class PerronPair:
    """Perron eigenvalue r and eigenvector w with w[0] == 1."""

    r: float
    w: np.ndarray
    residual: float
    iterations: int


@dataclass(frozen=True)
class MonomialTransform:
    """Q = diag(d) * P with P the permutation matrix of `perm`.

    `perm` is 0-based: (P v)_i = v[perm[i]], so conjugation by Q sends
    entry (perm[i], perm[j]) of A to position (i, j) scaled by d_i / d_j.
    """

    perm: tuple[int, ...]
    diag: tuple[float, ...] = field(default=())

    def __post_init__(self) -> None:
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        d = self.diag if self.diag else tuple(1.0 for _ in range(n))
        if len(d) != n:
            raise ValueError("diag length must match perm")
        if any(not (v > 0) for v in d):
            raise ValueError("diag entries must be positive")
        object.__setattr__(self, "diag", tuple(float(v) for v in d))

    def apply(self, v: np.ndarray) -> np.ndarray:
        """Q @ v."""
        d = np.asarray(self.diag)
        return d * np.asarray(v, float)[list(self.perm)]


def _as_positive_square(raw) -> np.ndarray:
    a = np.array(raw, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    if a.shape[0] < 2:
        raise ValueError("matrix order must be at least 2")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    if not np.all(a > 0):
        i, j = np.argwhere(~(a > 0))[0]
        raise ValueError(f"non-positive entry at row {i + 1}, column {j + 1}")
    return a


def _canonicalize(a: np.ndarray) -> np.ndarray:
    """Rebuild from the upper triangle: diagonal 1, lower entries 1/upper."""
    n = a.shape[0]
    out = np.ones((n, n))
    iu, ju = np.triu_indices(n, k=1)
    out[iu, ju] = a[iu, ju]
    out[ju, iu] = 1.0 / a[iu, ju]
    return out


def make_reciprocal(raw, mode: str = "validate") -> ReciprocalMatrix:
    """Build a ReciprocalMatrix from a raw positive square array.

    mode="validate" rejects unit-diagonal or reciprocity violations
    (|a_ij * a_ji - 1| > 1e-12); mode="symmetrize" overwrites the diagonal
    with 1 and the lower triangle with reciprocals of the upper.  Both
    modes store the canonical form, so a_ji == 1/a_ij exactly afterwards.
    """
    a = _as_positive_square(raw)
    if mode == "validate":
        if not np.all(np.diag(a) == 1.0):
            i = int(np.argwhere(np.diag(a) != 1.0)[0][0])
            raise ValueError(f"diagonal entry ({i + 1},{i + 1}) must be 1")
        prod = a * a.T
        bad = np.abs(prod - 1.0) > RECIPROCITY_RTOL
        if np.any(bad):
            i, j = np.argwhere(bad)[0]
            raise ValueError(
                f"reciprocity violation at ({i + 1},{j + 1}): "
                f"a_ij*a_ji = {prod[i, j]!r}"
            )
    elif mode != "symmetrize":
        raise ValueError(f"unknown mode {mode!r}")
    return ReciprocalMatrix(_canonicalize(a))


def consistent_from_vector(v) -> ReciprocalMatrix:
    """The consistent matrix (v_i / v_j)."""
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or len(v) < 2:
        raise ValueError("v must be a vector of length >= 2")
    if not np.all(v > 0) or not np.all(np.isfinite(v)):
        raise ValueError("v must be strictly positive and finite")
    return make_reciprocal(np.outer(v, 1.0 / v), mode="symmetrize")


def is_consistent(A: ReciprocalMatrix, tol: float = 1e-12) -> bool:
    """True iff a_ij * a_jk = a_ik for all triples, to relative tol."""
    a = A.a
    # dev[i,k,j] = a_ij * a_jk - a_ik, all triples at once
    dev = np.einsum("ij,jk->ikj", a, a) - a[:, :, None]
    return bool(np.all(np.abs(dev) <= tol * a[:, :, None]))


def perron(
    A: ReciprocalMatrix,
    tol: float = PERRON_TOL,
    max_iter: int = PERRON_MAX_ITER,
) -> PerronPair:
    """Perron eigenpair by power iteration from the all-ones vector.

    Iterates v <- A v, renormalized to v[0] == 1, until successive iterates
    differ by less than `tol` in max norm.  r is the eigenvalue estimate
    (A w)[0] / w[0] at convergence.
    """
    a = A.a
    n = A.n
    w = np.ones(n)
    for it in range(1, max_iter + 1):
        v = a @ w
        v /= v[0]
        if np.max(np.abs(v - w)) < tol:
            w = v
            break
        w = v
    else:
        res = float(np.max(np.abs(a @ w - (a @ w)[0] * w)))
        raise RuntimeError(
            f"power iteration did not converge in {max_iter} iterations "
            f"(residual {res:.3e})"
        )
    r = float((a @ w)[0])
    residual = float(np.max(np.abs(a @ w - r * w)))
    return PerronPair(r=r, w=w, residual=residual, iterations=it)


def monomial_similarity(A: ReciprocalMatrix, Q: MonomialTransform) -> ReciprocalMatrix:
    """Q A Q^{-1}; reciprocal again, with Perron vector proportional to Q w."""
    if len(Q.perm) != A.n:
        raise ValueError("transform dimension mismatch")
    p = list(Q.perm)
    d = np.asarray(Q.diag)
    b = A.a[np.ix_(p, p)] * (d[:, None] / d[None, :])
    return make_reciprocal(b, mode="symmetrize")


def pareto_dominates(
    A: ReciprocalMatrix, w, w2, strict_margin: float = 1e-12
) -> bool:
    """True iff w2 fits A at least as well as w entrywise, strictly somewhere.

    Fit is the absolute deviation |a_ij - u_i/u_j|; domination requires no
    deviation to grow by more than strict_margin and at least one to shrink
    by more than strict_margin.  The slack on the growth side absorbs the
    ulp-level ratio drift introduced when a block of w2 is a rescaled copy
    of the corresponding block of w.
    """
    w = np.asarray(w, dtype=float)
    w2 = np.asarray(w2, dtype=float)
    if w.shape != (A.n,) or w2.shape != (A.n,):
        raise ValueError("vector length mismatch")
    dev = np.abs(A.a - w[:, None] / w[None, :])
    dev2 = np.abs(A.a - w2[:, None] / w2[None, :])
    off = ~np.eye(A.n, dtype=bool)
    if np.any(dev2[off] > dev[off] + strict_margin):
        return False
    return bool(np.any(dev[off] - dev2[off] > strict_margin))


def random_reciprocal(n: int, seed: int, log_scale: float = np.log(9.0)) -> ReciprocalMatrix:
    """Seeded random matrix: upper entries exp(U[-log_scale, log_scale])."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if log_scale < 0:
        raise ValueError("log_scale must be nonnegative")
    rng = np.random.default_rng(seed)
    a = np.ones((n, n))
    iu, ju = np.triu_indices(n, k=1)
    a[iu, ju] = np.exp(rng.uniform(-log_scale, log_scale, size=len(iu)))
    return make_reciprocal(a, mode="symmetrize")
