"""Grid sweeps, the bundled worked example, and the verification suite.

The worked example is a 5x5 base matrix whose Perron ranking is scrambled
by a constant-row-sum extension: conjugating by a diagonal D flattens the
third row, extending to constant row sums forces an all-ones Perron
vector, and conjugating back yields an order-6 extension of the base whose
Perron vector is (1/D, 1) up to scale.  `example_walkthrough` replays the
whole chain against bundled reference values.

`verify_paper_suite` runs the walkthrough plus every structural claim the
library encodes (no-source property, sink characterization, region
soundness, guaranteed edges, eigenvector identities, cycle catalog,
Hamiltonian equivalence, predicate equivalences, certificate soundness) at
desk scale with fixed seeds.  One walkthrough step is expected to fail: the
bundled reference data marks the conjugate's Perron vector inefficient,
while the computed digraph is strongly connected.  See the README.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .core import (
    ReciprocalMatrix,
    make_reciprocal,
    pareto_dominates,
    perron,
    random_reciprocal,
)
from .digraph import (
    DEFAULT_EPS_REL,
    analyze,
    build_digraph,
    dominating_vector,
    hamiltonian_cycle,
    no_source_theorem_check,
    sources,
    strongly_connected,
)
from .extensions import (
    conjugated_extension,
    constant_row_sum_extension,
    extension_source_scan,
    is_extension,
    order_preservation_check,
    row_sums,
    well_behaved_type_I,
)
from .zfamily import (
    ZParams,
    eigen_identity_residuals,
    forbidden_reverse_edges,
    guarantee_a1,
    guarantee_n4,
    guarantee_n5plus,
    predicted_edges,
    sink_characterization,
    verify_table_claims,
    z_matrix,
)

DEFAULT_AXES = (0.25, 0.5, 1.0, 2.0, 4.0)

# --- bundled worked example ----------------------------------------------

EXAMPLE_BASE_ROWS = (
    (1.0, 1.0, 1.0, 0.9933, 2.5),
    (1.0, 1.0, 1.0, 0.6666, 1.0),
    (1.0, 1.0, 1.0, 0.6666, 0.5),
    (1.0067, 1.5, 1.5, 1.0, 0.75),
    (0.4, 1.0, 2.0, 1.3333, 1.0),
)
EXAMPLE_DIAG = (0.5, 0.5, 0.5, 1.0 / 3.0, 0.25)
# reference values the pipeline should reproduce (4-decimal precision)
EXAMPLE_REFERENCE_PERRON = (1.0, 0.7110, 0.6325, 0.8555, 0.8258)
EXAMPLE_CONJUGATE_ROWS = (
    (1.0, 1.0, 1.0, 1.49, 5.0),
    (1.0, 1.0, 1.0, 1.0, 2.0),
    (1.0, 1.0, 1.0, 1.0, 1.0),
    (1.0 / 1.49, 1.0, 1.0, 1.0, 1.0),
    (0.2, 0.5, 1.0, 1.0, 1.0),
)
EXAMPLE_ROW_SUM_GAP = 5.79
EXAMPLE_EXTENSION_PERRON = (1.0, 1.0, 1.0, 1.5, 2.0, 0.5)

COUNTEREXAMPLE_3X3_ROWS = ((1.0, 1.0, 2.0), (1.0, 1.0, 1.0), (0.5, 1.0, 1.0))
COUNTEREXAMPLE_3X3_W = (1.0, 2.0, 3.0)


def example_base() -> ReciprocalMatrix:
    """The base matrix (printed reciprocals are rounded; symmetrized)."""
    return make_reciprocal(np.array(EXAMPLE_BASE_ROWS), mode="symmetrize")


def example_conjugate_reference() -> ReciprocalMatrix:
    """The conjugate D B D^{-1} as given in the reference data (exact)."""
    return make_reciprocal(np.array(EXAMPLE_CONJUGATE_ROWS), mode="validate")


@dataclass(frozen=True)
class WalkthroughStep:
    check_id: str
    passed: bool
    detail: str


def example_walkthrough(eps_rel: float = DEFAULT_EPS_REL) -> list[WalkthroughStep]:
    """Replay the worked example end to end, one pass/fail step per claim."""
    steps: list[WalkthroughStep] = []

    def step(check_id: str, passed: bool, detail: str) -> None:
        steps.append(WalkthroughStep(check_id, bool(passed), detail))

    B = example_base()
    d = np.array(EXAMPLE_DIAG)
    ref_w = np.array(EXAMPLE_REFERENCE_PERRON)
    Bp_ref = example_conjugate_reference()

    w = perron(B).w
    err = float(np.max(np.abs(w - ref_w)))
    step("example1.base_perron_matches", err <= 5e-4,
         f"max component deviation {err:.2e} (tol 5e-4)")

    conj = make_reciprocal(B.a * (d[:, None] / d[None, :]), mode="symmetrize")
    err = float(np.max(np.abs(conj.a - Bp_ref.a)))
    step("example1.conjugate_matches", err <= 1e-3,
         f"max entry deviation {err:.2e} (tol 1e-3)")

    rep = analyze(Bp_ref, eps_rel=eps_rel)
    step("example1.bprime_perron_inefficient", not rep.efficient,
         f"reference verdict inefficient; computed efficient={rep.efficient}")

    rep_ones = analyze(Bp_ref, w=np.ones(5), eps_rel=eps_rel)
    step("example1.ones_vector_efficient", rep_ones.efficient,
         f"computed efficient={rep_ones.efficient}")

    r = row_sums(Bp_ref)
    gap = float(r[0] - r[-1])
    step("example1.well_behaved",
         well_behaved_type_I(Bp_ref) and abs(gap - EXAMPLE_ROW_SUM_GAP) <= 1e-12,
         f"first/last row-sum gap {gap!r} (reference {EXAMPLE_ROW_SUM_GAP})")

    ext = constant_row_sum_extension(Bp_ref)
    ones_eff = analyze(ext.B, w=np.ones(6), eps_rel=eps_rel).efficient
    step("example1.extension_unit_perron",
         ext.perron_check <= 1e-10 and ones_eff,
         f"row-sum residual {ext.perron_check:.2e}, all-ones efficient={ones_eff}")

    A = conjugated_extension(B, d)
    step("example1.conjugated_restores_base", is_extension(A, B, 0.0),
         "leading block comparison is exact")

    vA = perron(A).w
    err = float(np.max(np.abs(vA - np.array(EXAMPLE_EXTENSION_PERRON))))
    step("example1.conjugated_perron_matches", err <= 1e-9,
         f"max component deviation {err:.2e} (tol 1e-9)")

    step("example1.conjugated_efficient",
         analyze(A, eps_rel=eps_rel).efficient, "computed on the order-6 digraph")

    preserved, ra, rb = order_preservation_check(B, A)
    step("example1.ranking_changes",
         not preserved and ra == (1, 4, 5, 2, 3) and rb == (3, 3, 3, 2, 1),
         f"base ranks {ra}, extension-prefix ranks {rb}")

    return steps


# --- grid sweep ------------------------------------------------------------

SWEEP_CSV_HEADER = "n,x,y,z,a,r,efficient,guaranteed,exception,sink_present,sink_vertex,agrees"


@dataclass(frozen=True)
class SweepRecord:
    params: ZParams
    r: float
    efficient: bool
    guaranteed: bool
    exception: str | None
    sink_present: bool
    sink_vertex: int | None
    agrees: bool

    def __post_init__(self) -> None:
        if self.agrees != (self.efficient == (not self.sink_present)):
            raise ValueError("agrees flag inconsistent with verdicts")


def sweep_point(p: ZParams, eps_rel: float = DEFAULT_EPS_REL) -> SweepRecord:
    verdict = guarantee_n5plus(p)
    sc = sink_characterization(p, eps_rel)
    return SweepRecord(
        params=p,
        r=sc.r,
        efficient=sc.efficient,
        guaranteed=verdict.guaranteed_efficient,
        exception=verdict.matched_exception,
        sink_present=sc.sink_present,
        sink_vertex=sc.sink_vertex,
        agrees=sc.agrees,
    )


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return "%.17g" % v
    return str(v)


def sweep_csv_row(rec: SweepRecord) -> str:
    p = rec.params
    cells = (p.n, p.x, p.y, p.z, p.a, rec.r, rec.efficient, rec.guaranteed,
             rec.exception, rec.sink_present, rec.sink_vertex, rec.agrees)
    return ",".join(_csv_cell(c) for c in cells)


def grid_sweep(
    n: int,
    axis_values=DEFAULT_AXES,
    out=None,
    eps_rel: float = DEFAULT_EPS_REL,
) -> list[SweepRecord]:
    """Evaluate every (x,y,z,a) in the Cartesian grid, lexicographically.

    Writes CSV to `out` when given; always returns the records.
    """
    if n < 5:
        raise ValueError("grid sweep requires n >= 5")
    axes = tuple(float(v) for v in axis_values)
    if not axes or any(not v > 0 for v in axes):
        raise ValueError("axis values must be positive")
    records = [
        sweep_point(ZParams(n, x, y, z, a), eps_rel)
        for x, y, z, a in itertools.product(axes, repeat=4)
    ]
    if out is not None:
        lines = [SWEEP_CSV_HEADER] + [sweep_csv_row(r) for r in records]
        Path(out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return records


# --- verification suite ----------------------------------------------------


@dataclass(frozen=True)
class VerificationSummary:
    suite: str
    checks: int
    failures: tuple[tuple[str, str], ...]
    wall_time: float

    @property
    def ok(self) -> bool:
        return not self.failures


ALL_EXCEPTION_LABELS = frozenset(
    f"T{k}{c}" for k in (5, 6, 7, 8) for c in ("(i)", "(ii)", "(iii)")
)


def _zfamily_grid_audit(n: int, axes, eps_rel: float) -> dict[str, list[str]]:
    """Guaranteed-edge/identity/catalog violations over one parameter grid."""
    bad: dict[str, list[str]] = {
        "subsumption": [], "forbidden": [], "identities": [],
        "middle": [], "tables": [],
    }
    for xyza in itertools.product(axes, repeat=4):
        p = ZParams(n, *xyza)
        A = z_matrix(p)
        pp = perron(A)
        G = build_digraph(A, pp.w, eps_rel)
        missing = predicted_edges(p) - G.edges
        if missing:
            bad["subsumption"].append(f"n={n} {xyza}: missing {sorted(missing)}")
        for v in forbidden_reverse_edges(p, G):
            bad["forbidden"].append(f"n={n} {xyza}: {v}")
        res = eigen_identity_residuals(p)
        if res.identities_max > 1e-9 * res.r:
            bad["identities"].append(
                f"n={n} {xyza}: residual {res.identities_max:.2e}"
            )
        if res.middle_deviation_max > 1e-10 * perron(A).w[2]:
            bad["middle"].append(
                f"n={n} {xyza}: deviation {res.middle_deviation_max:.2e}"
            )
        for v in verify_table_claims(p, eps_rel):
            bad["tables"].append(f"n={n} {xyza}: {v}")
    return bad


def verify_paper_suite(eps_rel: float = DEFAULT_EPS_REL) -> VerificationSummary:
    """Run every bundled check; failures are reported, never thrown."""
    t0 = time.perf_counter()
    results: list[tuple[str, bool, str]] = []

    def check(check_id: str, passed: bool, detail: str) -> None:
        results.append((check_id, bool(passed), detail))

    for s in example_walkthrough(eps_rel):
        check(s.check_id, s.passed, s.detail)

    # fixed 3x3 instance with an explicitly inefficient vector
    A3 = make_reciprocal(np.array(COUNTEREXAMPLE_3X3_ROWS), mode="validate")
    w3 = np.array(COUNTEREXAMPLE_3X3_W)
    G3 = build_digraph(A3, w3, eps_rel)
    check(
        "counterexample3x3.structure",
        G3.edges == {(2, 1), (3, 1), (3, 2)} and sources(G3) == (3,),
        f"edges {sorted(G3.edges)}, sources {sources(G3)}",
    )

    nb_bad = sum(
        not no_source_theorem_check(random_reciprocal(3 + k % 6, seed=1000 + k),
                                    eps_rel)
        for k in range(1000)
    )
    check("no_source.random_matrices", nb_bad == 0,
          f"{nb_bad} of 1000 random matrices violated")

    nb_bad = 0
    for b in range(20):
        base = random_reciprocal(3 + b % 6, seed=2000 + b)
        nb_bad += len(extension_source_scan(base, 50, seed=3000 + b,
                                            eps_rel=eps_rel).failures)
    check("no_source.random_extensions", nb_bad == 0,
          f"{nb_bad} of 1000 random extensions violated")

    grid_records: dict[int, list[SweepRecord]] = {
        n: grid_sweep(n, DEFAULT_AXES, eps_rel=eps_rel) for n in (5, 6)
    }
    for n, records in grid_records.items():
        bad = sum(not rec.agrees for rec in records)
        check(f"sink_characterization.grid_n{n}", bad == 0,
              f"{bad} of {len(records)} grid points disagree")
        unsound = sum(rec.guaranteed and not rec.efficient for rec in records)
        check(f"region.soundness_n{n}", unsound == 0,
              f"{unsound} guaranteed-but-inefficient points")
        labeled_eff = sum(
            rec.efficient and rec.exception is not None for rec in records
        )
        labeled_ineff = sum(
            not rec.efficient and rec.exception is not None for rec in records
        )
        check(
            f"region.exceptions_one_sided_n{n}",
            labeled_eff > 0 and labeled_ineff > 0,
            f"exception labels cover {labeled_ineff} inefficient and "
            f"{labeled_eff} efficient points (guarantee is one-way)",
        )

    seen_labels = {
        rec.exception
        for records in grid_records.values()
        for rec in records
        if rec.exception
    }
    check(
        "region.exception_labels_nonvacuous",
        seen_labels == set(ALL_EXCEPTION_LABELS),
        f"labels hit: {sorted(seen_labels)}",
    )

    audit_keys = ("subsumption", "forbidden", "identities", "middle", "tables")
    audit_names = {
        "subsumption": "edges.guaranteed_present",
        "forbidden": "edges.no_forbidden_reverse",
        "identities": "identities.residuals",
        "middle": "identities.middle_collapse",
        "tables": "tables.claims",
    }
    merged: dict[str, list[str]] = {k: [] for k in audit_keys}
    for n in (5, 6, 7):
        for k, v in _zfamily_grid_audit(n, DEFAULT_AXES, eps_rel).items():
            merged[k].extend(v)
    for k in audit_keys:
        check(audit_names[k], not merged[k],
              f"{len(merged[k])} violations" +
              (f"; first: {merged[k][0]}" if merged[k] else ""))

    nb_bad = 0
    for k in range(200):
        A = random_reciprocal(3 + k % 5, seed=4000 + k)
        G = build_digraph(A, perron(A).w, eps_rel)
        if strongly_connected(G)[0] != (hamiltonian_cycle(G) is not None):
            nb_bad += 1
    check("hamiltonian.equivalence", nb_bad == 0,
          f"{nb_bad} of 200 random digraphs disagree")

    rng = np.random.default_rng(5000)
    triples = np.exp(rng.uniform(-np.log(9.0), np.log(9.0), size=(1000, 3)))
    nb_bad = sum(
        guarantee_n4(x, y, z, "six_cases")
        != guarantee_n4(x, y, z, "region_complement")
        for x, y, z in triples
    )
    check("n4.forms_agree", nb_bad == 0, f"{nb_bad} of 1000 triples disagree")

    nb_bad = sum(
        guarantee_a1(5, x, y, z).guaranteed_efficient
        != guarantee_n5plus(ZParams(5, x, y, z, 1.0)).guaranteed_efficient
        for x, y, z in itertools.product(DEFAULT_AXES, repeat=3)
    )
    check("a1.slice_equality", nb_bad == 0,
          f"{nb_bad} of 125 slice points disagree")

    bad_certs = []
    inefficient_instances = [(A3, w3)]
    for n, records in grid_records.items():
        for rec in records:
            if not rec.efficient:
                A = z_matrix(rec.params)
                inefficient_instances.append((A, perron(A).w))
    for A, w in inefficient_instances:
        cert = dominating_vector(A, w, eps_rel)
        if cert is None or not pareto_dominates(A, w, cert):
            bad_certs.append(A.n)
    check("certificates.sound", not bad_certs,
          f"{len(bad_certs)} of {len(inefficient_instances)} certificates failed")

    failures = tuple((cid, detail) for cid, ok, detail in results if not ok)
    return VerificationSummary(
        suite="verify",
        checks=len(results),
        failures=failures,
        wall_time=time.perf_counter() - t0,
    )
