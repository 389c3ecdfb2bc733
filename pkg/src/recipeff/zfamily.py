"""The four-parameter perturbed-consistent family Z_n(x, y, z, a).

Z_n(x,y,z,a) is the all-ones n x n matrix with entries (1,n-1)=y, (1,n)=x,
(2,n-1)=a, (2,n)=z and their reciprocals.  This module decides, from the
parameters alone, whether the Perron eigenvector is guaranteed efficient
(`guarantee_n5plus` and the a=1 / n=4 variants), verifies the eigenvector
identities and guaranteed-edge conditions that drive those predicates, and
checks the sink characterization of inefficiency.

Region verdict labels: the efficiency region is the complement of twelve
exception clauses, organized as four symmetric variants T5..T8 (one per
monomial symmetry of the family) with clauses (i)/(ii)/(iii) each, plus
A1(i)..A1(iv) on the a=1 slice.  The labels are opaque region codes.

Middle indices 3..n-2 carry identical all-ones rows, so their Perron
components are exactly equal and every middle vertex is interchangeable
with vertex 3.  Sink detection for this family therefore works on the
quotient digraph with the middle class contracted to one vertex; for n = 5
that is the digraph itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import ReciprocalMatrix, make_reciprocal, perron
from .digraph import (
    DEFAULT_EPS_REL,
    EfficiencyDigraph,
    build_digraph,
    strongly_connected,
)


@dataclass(frozen=True)
class ZParams:
    n: int
    x: float
    y: float
    z: float
    a: float

    def __post_init__(self) -> None:
        if self.n < 4:
            raise ValueError("n must be at least 4")
        for name in ("x", "y", "z", "a"):
            v = getattr(self, name)
            if not (v > 0 and np.isfinite(v)):
                raise ValueError(f"{name} must be positive and finite")

    @property
    def xyza(self) -> tuple[float, float, float, float]:
        return (self.x, self.y, self.z, self.a)


@dataclass(frozen=True)
class RegionVerdict:
    guaranteed_efficient: bool
    matched_exception: str | None
    reduction_used: str

    def __post_init__(self) -> None:
        if self.guaranteed_efficient != (self.matched_exception is None):
            raise ValueError("verdict and exception label must agree")


def z_matrix(p: ZParams) -> ReciprocalMatrix:
    n = p.n
    a = np.ones((n, n))
    a[0, n - 2] = p.y
    a[0, n - 1] = p.x
    a[1, n - 2] = p.a
    a[1, n - 1] = p.z
    return make_reciprocal(a, mode="symmetrize")


# The three nontrivial monomial symmetries of the family, as parameter maps:
# swapping rows/cols (n-1) and n maps (x,y,z,a) -> (y,x,a,z); swapping 1 and
# 2 maps to (z,a,x,y); doing both maps to (a,z,y,x).  Each is an involution.
SYMMETRY_IMAGES: dict[str, Callable[[float, float, float, float], tuple]] = {
    "identity": lambda x, y, z, a: (x, y, z, a),
    "(y,x,a,z)": lambda x, y, z, a: (y, x, a, z),
    "(z,a,x,y)": lambda x, y, z, a: (z, a, x, y),
    "(a,z,y,x)": lambda x, y, z, a: (a, z, y, x),
}

_REDUCTION_ORDER = ("identity", "(y,x,a,z)", "(z,a,x,y)", "(a,z,y,x)")
_VARIANT_OF_REDUCTION = {
    "identity": "T5",
    "(y,x,a,z)": "T6",
    "(z,a,x,y)": "T7",
    "(a,z,y,x)": "T8",
}


def reduce_to_min_first(
    x: float, y: float, z: float, a: float
) -> tuple[tuple[float, float, float, float], str]:
    """Representative with minimal first coordinate, plus the symmetry used.

    Ties take the first matching symmetry in the fixed order identity,
    (y,x,a,z), (z,a,x,y), (a,z,y,x), so the result is deterministic.
    """
    m = min(x, y, z, a)
    for name in _REDUCTION_ORDER:
        img = SYMMETRY_IMAGES[name](x, y, z, a)
        if img[0] == m:
            return img, name
    raise AssertionError("unreachable: some coordinate attains the minimum")


def _min_first_exception(x: float, y: float, z: float, a: float) -> str | None:
    """Exception clauses for a point with x <= min{y, z, a}."""
    if x < z < a < y and z < 1:
        return "(i)"
    if x < y < a < z and 1 < a:
        return "(ii)"
    if x <= a < 1 < min(y, z):
        return "(iii)"
    return None


def guarantee_n5plus(p: ZParams) -> RegionVerdict:
    """Efficiency-region verdict for n >= 5.

    Reduces (x,y,z,a) to the representative whose first coordinate is
    minimal and tests the three exception clauses there.  Outside the
    exception clauses (boundaries included) the Perron eigenvector is
    guaranteed efficient.
    """
    if p.n < 5:
        raise ValueError("guarantee_n5plus requires n >= 5")
    rep, reduction = reduce_to_min_first(*p.xyza)
    clause = _min_first_exception(*rep)
    if clause is None:
        return RegionVerdict(True, None, reduction)
    label = f"{_VARIANT_OF_REDUCTION[reduction]}{clause}"
    return RegionVerdict(False, label, reduction)


def guarantee_a1(n: int, x: float, y: float, z: float) -> RegionVerdict:
    """Efficiency-region verdict for the a = 1 slice, n >= 5."""
    if n < 5:
        raise ValueError("guarantee_a1 requires n >= 5")
    clauses = (
        ("A1(i)", 1 < z < x < y),
        ("A1(ii)", z < 1 < y < x),
        ("A1(iii)", z < x < y < 1),
        ("A1(iv)", x < z < 1 < y),
    )
    for label, hit in clauses:
        if hit:
            return RegionVerdict(False, label, "identity")
    return RegionVerdict(True, None, "identity")


def guarantee_n4(x: float, y: float, z: float, form: str = "six_cases") -> bool:
    """Efficiency guarantee for Z_4(x, y, z, 1), in either published form.

    "six_cases" checks the six sufficient clauses directly;
    "region_complement" checks that neither interleaving pattern
    min{1,x} < min{y,z} < max{1,x} < max{y,z} (nor its mirror) holds with
    1 != x and y != z.  The two forms are equivalent.
    """
    if form == "six_cases":
        return (
            (y <= x <= z and y <= 1 <= z)
            or (y <= x and y <= 1 and z <= 1 and z <= x)
            or (1 <= y <= x and 1 <= z <= x)
            or (z <= x <= y and 1 <= y and z <= 1)
            or (x <= y and 1 <= y and 1 <= z and x <= z)
            or (x <= y <= 1 and x <= z <= 1)
        )
    if form == "region_complement":
        lo_x, hi_x = min(1.0, x), max(1.0, x)
        lo_yz, hi_yz = min(y, z), max(y, z)
        crossing = x != 1 and y != z and (
            lo_x < lo_yz < hi_x < hi_yz or lo_yz < lo_x < hi_yz < hi_x
        )
        return not crossing
    raise ValueError(f"unknown form {form!r}")


@dataclass(frozen=True)
class IdentityResiduals:
    """Residuals of the eigen row equations and the derived identities."""

    r: float
    rows_max: float
    identities: tuple[float, ...]
    identities_max: float
    middle_deviation_max: float


def eigen_identity_residuals(p: ZParams) -> IdentityResiduals:
    """Evaluate the eigenvector identities of the family at the Perron pair.

    Returns the max residual of the n row equations of (Z - rI)w = 0, the
    ten two-or-three-term identities obtained by differencing those rows
    (each vanishes for an exact eigenpair), and the maximal deviation
    |w_j - w_3| over middle indices (exactly 0 is expected: middle rows are
    identical, so power iteration keeps their components equal).
    """
    if p.n < 5:
        raise ValueError("requires n >= 5")
    n, (x, y, z, a) = p.n, p.xyza
    A = z_matrix(p)
    pp = perron(A)
    r, w = pp.r, pp.w
    rows_max = float(np.max(np.abs(A.a @ w - r * w)))
    w1, w2, w3 = w[0], w[1], w[2]
    wm, wn = w[n - 2], w[n - 1]
    k = n - 4
    identities = (
        r * (w2 - w1) + (y - a) * wm + (x - z) * wn,
        r * (w3 - w1) + (y - 1) * wm + (x - 1) * wn,
        r * (y * wm - w1) + (1 - y / a) * w2 + (1 - y) * k * w3 + (x - y) * wn,
        r * (x * wn - w1) + (1 - x / z) * w2 + (1 - x) * k * w3 + (y - x) * wm,
        r * (w3 - w2) + (a - 1) * wm + (z - 1) * wn,
        r * (a * wm - w2) + (1 - a / y) * w1 + (1 - a) * k * w3 + (z - a) * wn,
        r * (z * wn - w2) + (1 - z / x) * w1 + (1 - z) * k * w3 + (a - z) * wm,
        r * (wm - w3) + (1 - 1 / y) * w1 + (1 - 1 / a) * w2,
        r * (wn - w3) + (1 - 1 / x) * w1 + (1 - 1 / z) * w2,
        r * (wn - wm) + (1 / y - 1 / x) * w1 + (1 / a - 1 / z) * w2,
    )
    identities = tuple(float(v) for v in identities)
    mid_dev = 0.0
    if n > 5:
        mid_dev = float(np.max(np.abs(w[3 : n - 2] - w3)))
    return IdentityResiduals(
        r=r,
        rows_max=rows_max,
        identities=identities,
        identities_max=max(abs(v) for v in identities),
        middle_deviation_max=mid_dev,
    )


def predicted_edges(p: ZParams) -> set[tuple[int, int]]:
    """Edges guaranteed by the parameter order relations alone.

    Twenty sign conditions, read off the two-/three-term identities: ten
    give edges out of or into {1, 2, n-1, n} among themselves, ten give
    edges between those vertices and every middle vertex.
    """
    if p.n < 5:
        raise ValueError("requires n >= 5")
    n, (x, y, z, a) = p.n, p.xyza
    mids = range(3, n - 1)
    E: set[tuple[int, int]] = set()
    if a <= y and z <= x:
        E.add((1, 2))
    if y <= min(1, a, x):
        E.add((1, n - 1))
    if x <= min(1, y, z):
        E.add((1, n))
    if a <= min(1, y, z):
        E.add((2, n - 1))
    if z <= min(1, x, a):
        E.add((2, n))
    if y <= x and a <= z:
        E.add((n - 1, n))
    if 1 <= min(x, y):
        E.update((1, i) for i in mids)
    if 1 <= min(a, z):
        E.update((2, i) for i in mids)
    if max(y, a) <= 1:
        E.update((n - 1, i) for i in mids)
    if max(x, z) <= 1:
        E.update((n, i) for i in mids)
    if y <= a and x <= z:
        E.add((2, 1))
    if max(1, a, x) <= y:
        E.add((n - 1, 1))
    if max(1, y, z) <= x:
        E.add((n, 1))
    if max(1, y, z) <= a:
        E.add((n - 1, 2))
    if max(1, a, x) <= z:
        E.add((n, 2))
    if x <= y and z <= a:
        E.add((n, n - 1))
    if max(x, y) <= 1:
        E.update((i, 1) for i in mids)
    if max(a, z) <= 1:
        E.update((i, 2) for i in mids)
    if 1 <= min(a, y):
        E.update((i, n - 1) for i in mids)
    if 1 <= min(x, z):
        E.update((i, n) for i in mids)
    return E


def forbidden_reverse_edges(p: ZParams, G: EfficiencyDigraph) -> list[str]:
    """Conditional non-edge checks; returns violations (expected empty).

    Each clause says: if an edge from vertex 3 toward a corner vertex is
    present and the stated strict parameter relation holds, the reverse
    edge cannot also be present (a ratio tie there would force an
    impossible cancellation in the corresponding identity).
    """
    if p.n < 5:
        raise ValueError("requires n >= 5")
    n, (x, y, z, a) = p.n, p.xyza
    checks = (
        ((3, 2), max(a, z) <= 1 and a != z, (2, 3)),
        ((3, 1), max(x, y) <= 1 and x != y, (1, 3)),
        ((3, n), min(x, z) >= 1 and x != z, (n, 3)),
        ((3, n - 1), min(y, a) >= 1 and a != y, (n - 1, 3)),
    )
    violations = []
    for fwd, cond, rev in checks:
        if cond and fwd in G.edges and rev in G.edges:
            violations.append(f"edge {fwd} with relation forbids {rev}")
    return violations


def middle_quotient_sinks(G: EfficiencyDigraph, n: int) -> tuple[int, ...]:
    """Sinks of the digraph with the middle class {3..n-2} contracted.

    Valid for Z-family Perron digraphs, where the middle components are
    exactly equal and mutually tied.  For n = 5 this is just the sinks of G.
    """

    def rep(v: int) -> int:
        return 3 if 3 <= v <= n - 2 else v

    verts = sorted({rep(v) for v in range(1, n + 1)})
    qedges = {(rep(i), rep(j)) for (i, j) in G.edges if rep(i) != rep(j)}
    has_out = {i for (i, _) in qedges}
    return tuple(v for v in verts if v not in has_out)


@dataclass(frozen=True)
class SinkCheck:
    efficient: bool
    sink_present: bool
    agrees: bool
    sink_vertex: int | None
    r: float


def sink_characterization(
    p: ZParams, eps_rel: float = DEFAULT_EPS_REL
) -> SinkCheck:
    """Inefficiency-iff-sink check at one parameter point (n >= 5).

    Sink presence is decided on the middle-class quotient digraph (see
    `middle_quotient_sinks`); a reported sink vertex of 3 stands for the
    whole middle class.
    """
    if p.n < 5:
        raise ValueError("requires n >= 5")
    A = z_matrix(p)
    pp = perron(A)
    G = build_digraph(A, pp.w, eps_rel)
    efficient, _, _ = strongly_connected(G)
    qsinks = middle_quotient_sinks(G, p.n)
    sink_present = len(qsinks) > 0
    return SinkCheck(
        efficient=efficient,
        sink_present=sink_present,
        agrees=(not efficient) == sink_present,
        sink_vertex=qsinks[0] if qsinks else None,
        r=pp.r,
    )


# --- catalog of known digraph structures per parameter region -------------
#
# Each row: a relation among 1, x, y, z, a and the cycle(s) plus extra
# edges it forces, with the vertex that can become a source or sink there.
# Vertex codes: 1, 2, 3 literal (3 = middle-class representative), -2 for…
# n-1, -1 for n.  "kind" tags what the region admits: "cycle" rows cover
# the guaranteed-efficient side; "source"/"sink" rows name the only vertex
# that can end up as a source/sink (sink rows are the inefficiency cases).


@dataclass(frozen=True)
class CatalogRow:
    group: int
    relation: str
    predicate: Callable[[float, float, float, float], bool]
    cycles: tuple[tuple[int, ...], ...]
    extra_edges: tuple[tuple[int, int], ...]
    kind: str  # "cycle" | "source" | "sink"
    vertex: int | None


CYCLE_CATALOG: tuple[CatalogRow, ...] = (
    # group 1: one Hamiltonian cycle on {1,2,3,n-1,n}
    CatalogRow(1, "x <= 1 <= a <= y,z", lambda x, y, z, a: x <= 1 <= a <= min(y, z),
               ((1, -1, 2, 3, -2),), (), "cycle", None),
    CatalogRow(1, "x <= z <= 1 <= y <= a", lambda x, y, z, a: x <= z <= 1 <= y <= a,
               ((1, -1, 3, -2, 2),), (), "cycle", None),
    CatalogRow(1, "1 <= x <= y,z <= a", lambda x, y, z, a: 1 <= x <= min(y, z) and max(y, z) <= a,
               ((1, 3, -1, -2, 2),), (), "cycle", None),
    CatalogRow(1, "x <= a <= y <= 1 <= z", lambda x, y, z, a: x <= a <= y <= 1 <= z,
               ((1, -1, 2, -2, 3),), (), "cycle", None),
    CatalogRow(1, "x <= a <= z <= 1 <= y", lambda x, y, z, a: x <= a <= z <= 1 <= y,
               ((1, -1, 3, 2, -2),), (), "cycle", None),
    CatalogRow(1, "x <= y <= 1 <= z <= a", lambda x, y, z, a: x <= y <= 1 <= z <= a,
               ((1, -1, -2, 2, 3),), (), "cycle", None),
    CatalogRow(1, "x <= y,z <= a <= 1", lambda x, y, z, a: x <= min(y, z) and max(y, z) <= a <= 1,
               ((1, -1, -2, 3, 2),), (), "cycle", None),
    # group 2: two cycles whose union is strongly connected
    CatalogRow(2, "x <= 1 <= y,z <= a", lambda x, y, z, a: x <= 1 <= min(y, z) and max(y, z) <= a,
               ((2, 3, -2), (1, -1, -2, 2)), (), "cycle", None),
    CatalogRow(2, "x <= a <= y,z <= 1", lambda x, y, z, a: x <= a <= min(y, z) and max(y, z) <= 1,
               ((3, 1, -1), (3, 2, -2)), (), "cycle", None),
    CatalogRow(2, "x <= y,z <= 1 <= a", lambda x, y, z, a: x <= min(y, z) and max(y, z) <= 1 <= a,
               ((1, -1, 3), (1, -1, -2, 2)), (), "cycle", None),
    CatalogRow(2, "1 <= x <= a <= y,z", lambda x, y, z, a: 1 <= x <= a <= min(y, z),
               ((3, -1, 2), (3, -2, 1)), (), "cycle", None),
    # groups 3-4: a cycle plus extra edges; vertex names the only possible source
    CatalogRow(3, "1 <= x <= z <= a <= y", lambda x, y, z, a: 1 <= x <= z <= a <= y,
               ((3, -1, -2, 1),), ((2, 3),), "source", 2),
    CatalogRow(3, "x <= y <= a <= z <= 1", lambda x, y, z, a: x <= y <= a <= z <= 1,
               ((3, 2, 1, -1),), ((-2, 3),), "source", -2),
    CatalogRow(4, "x <= 1 <= z <= a <= y", lambda x, y, z, a: x <= 1 <= z <= a <= y,
               ((1, -1, -2),), ((2, 3), (3, -2)), "source", 2),
    CatalogRow(4, "x <= y <= a <= 1 <= z", lambda x, y, z, a: x <= y <= a <= 1 <= z,
               ((1, -1, 2),), ((-2, 3), (3, 1)), "source", -2),
    # group 5: a cycle plus one extra edge; vertex names the sink
    CatalogRow(5, "z < x < y < a <= 1", lambda x, y, z, a: z < x < y < a <= 1,
               ((3, 2, -1, -2),), ((3, 1),), "sink", 1),
    CatalogRow(5, "x < z < a < y <= 1", lambda x, y, z, a: x < z < a < y <= 1,
               ((3, 1, -1, -2),), ((3, 2),), "sink", 2),
    CatalogRow(5, "y < a < z < x <= 1", lambda x, y, z, a: y < a < z < x <= 1,
               ((3, 1, -2, -1),), ((3, 2),), "sink", 2),
    CatalogRow(5, "a < y < x < z <= 1", lambda x, y, z, a: a < y < x < z <= 1,
               ((3, 2, -2, -1),), ((3, 1),), "sink", 1),
    CatalogRow(5, "1 <= a < z < x < y", lambda x, y, z, a: 1 <= a < z < x < y,
               ((3, -2, 1, 2),), ((3, -1),), "sink", -1),
    CatalogRow(5, "1 <= y < x < z < a", lambda x, y, z, a: 1 <= y < x < z < a,
               ((3, -2, 2, 1),), ((3, -1),), "sink", -1),
    CatalogRow(5, "1 <= z < a < y < x", lambda x, y, z, a: 1 <= z < a < y < x,
               ((3, -1, 1, 2),), ((3, -2),), "sink", -2),
    CatalogRow(5, "1 <= x < y < a < z", lambda x, y, z, a: 1 <= x < y < a < z,
               ((3, -1, 2, 1),), ((3, -2),), "sink", -2),
    # group 6: a cycle plus two extra edges; vertex names the sink
    CatalogRow(6, "x < z < a < 1 <= y", lambda x, y, z, a: x < z < a < 1 <= y,
               ((1, -1, -2),), ((3, 2), (-1, 3)), "sink", 2),
    CatalogRow(6, "a < 1 <= z < x < y", lambda x, y, z, a: a < 1 <= z < x < y,
               ((1, 2, -2),), ((3, -1), (1, 3)), "sink", -1),
    CatalogRow(6, "z < x < y <= 1 < a", lambda x, y, z, a: z < x < y <= 1 < a,
               ((2, -1, -2),), ((3, 1), (-1, 3)), "sink", 1),
    CatalogRow(6, "y < 1 <= x < z < a", lambda x, y, z, a: y < 1 <= x < z < a,
               ((1, -2, 2),), ((3, -1), (2, 3)), "sink", -1),
    CatalogRow(6, "y < a < z < 1 <= x", lambda x, y, z, a: y < a < z < 1 <= x,
               ((1, -2, -1),), ((3, 2), (-2, 3)), "sink", 2),
    CatalogRow(6, "z < 1 <= a < y < x", lambda x, y, z, a: z < 1 <= a < y < x,
               ((1, 2, -1),), ((3, -2), (1, 3)), "sink", -2),
    CatalogRow(6, "a < y < x < 1 <= z", lambda x, y, z, a: a < y < x < 1 <= z,
               ((2, -2, -1),), ((3, 1), (-2, 3)), "sink", 1),
    CatalogRow(6, "x < 1 <= y < a < z", lambda x, y, z, a: x < 1 <= y < a < z,
               ((1, -1, 2),), ((3, -2), (2, 3)), "sink", -2),
    # group 7: a cycle missing exactly one vertex; that vertex is the sink
    CatalogRow(7, "x < z < 1 <= a < y", lambda x, y, z, a: x < z < 1 <= a < y,
               ((1, -1, 3, -2),), (), "sink", 2),
    CatalogRow(7, "y < a < 1 <= z < x", lambda x, y, z, a: y < a < 1 <= z < x,
               ((1, -2, 3, -1),), (), "sink", 2),
    CatalogRow(7, "z < a <= 1 < y < x", lambda x, y, z, a: z < a <= 1 < y < x,
               ((1, 3, 2, -1),), (), "sink", -2),
    CatalogRow(7, "x < y <= 1 < a < z", lambda x, y, z, a: x < y <= 1 < a < z,
               ((1, -1, 2, 3),), (), "sink", -2),
    CatalogRow(7, "y,z < 1 < a,x", lambda x, y, z, a: max(y, z) < 1 < min(a, x),
               ((1, -2, 2, -1),), (), "sink", 3),
    CatalogRow(7, "x,a < 1 < z,y", lambda x, y, z, a: max(x, a) < 1 < min(z, y),
               ((1, -1, 2, -2),), (), "sink", 3),
    CatalogRow(7, "y < x <= 1 < z < a", lambda x, y, z, a: y < x <= 1 < z < a,
               ((1, -2, 2, 3),), (), "sink", -1),
    CatalogRow(7, "a < z <= 1 < x < y", lambda x, y, z, a: a < z <= 1 < x < y,
               ((1, 3, 2, -2),), (), "sink", -1),
    CatalogRow(7, "a < y < 1 <= x < z", lambda x, y, z, a: a < y < 1 <= x < z,
               ((3, -1, 2, -2),), (), "sink", 1),
    CatalogRow(7, "z < x < 1 <= y < a", lambda x, y, z, a: z < x < 1 <= y < a,
               ((3, -2, 2, -1),), (), "sink", 1),
)


def _realize(n: int, code: int) -> int:
    return n + 1 + code if code < 0 else code


@dataclass(frozen=True)
class CatalogMatch:
    row: CatalogRow
    cycles: tuple[tuple[int, ...], ...]
    extra_edges: tuple[tuple[int, int], ...]
    kind: str
    vertex: int | None


def table_oracle(p: ZParams) -> list[CatalogMatch]:
    """All catalog rows whose relation holds at p, with vertices realized.

    Returns an empty list when no row matches (the catalog does not tile
    the whole parameter space).
    """
    if p.n < 5:
        raise ValueError("requires n >= 5")
    n = p.n
    matches = []
    for row in CYCLE_CATALOG:
        if not row.predicate(*p.xyza):
            continue
        matches.append(
            CatalogMatch(
                row=row,
                cycles=tuple(
                    tuple(_realize(n, c) for c in cyc) for cyc in row.cycles
                ),
                extra_edges=tuple(
                    (_realize(n, u), _realize(n, v)) for u, v in row.extra_edges
                ),
                kind=row.kind,
                vertex=_realize(n, row.vertex) if row.vertex is not None else None,
            )
        )
    return matches


def verify_table_claims(
    p: ZParams, eps_rel: float = DEFAULT_EPS_REL
) -> list[str]:
    """Check every matching catalog row against the computed digraph.

    For each match: the claimed cycle edges and extra edges must be present;
    for inefficient points the quotient sink must be the row's sink vertex.
    Returns violation descriptions (expected empty everywhere).
    """
    matches = table_oracle(p)
    if not matches:
        return []
    A = z_matrix(p)
    w = perron(A).w
    G = build_digraph(A, w, eps_rel)
    efficient, _, _ = strongly_connected(G)
    qsinks = middle_quotient_sinks(G, p.n)
    out = []
    for m in matches:
        for cyc in m.cycles:
            for u, v in zip(cyc, cyc[1:] + cyc[:1]):
                if (u, v) not in G.edges:
                    out.append(f"{m.row.relation}: cycle edge ({u},{v}) absent")
        for u, v in m.extra_edges:
            if (u, v) not in G.edges:
                out.append(f"{m.row.relation}: extra edge ({u},{v}) absent")
        if m.kind == "sink" and not efficient:
            if qsinks != (m.vertex,):
                out.append(
                    f"{m.row.relation}: expected sink {m.vertex}, got {qsinks}"
                )
    return out
