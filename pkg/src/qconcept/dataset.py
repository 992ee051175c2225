"""CSV ingestion, batch pipeline, JSON reports and curve tables."""
from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources

import numpy as np

from . import __version__
from .classicality import ClassicalityVerdict, Connective, MembershipTriple, classify
from .errors import ConnectiveError, DatasetParseError, QConceptError, SingularConfigurationError
from .hilbert_realization import ConceptPairModel, VerificationReport, build_model, verify_model
from .interference_fit import (
    DEFAULT_GRID_STEPS,
    FitParameters,
    FitResult,
    compute_r,
    fit,
    nprime_from_n,
    predict_mu,
)

COLUMNS = ("item", "concept_a", "concept_b", "connective", "mu_a", "mu_b", "mu_combined")
WEIGHT_COLUMNS = ("mu_a", "mu_b", "mu_combined")
STAGES = ("audit", "fit", "realize", "verify")


@dataclass(frozen=True)
class Dataset:
    rows: tuple[MembershipTriple, ...]
    source_name: str = "<memory>"

    def __len__(self) -> int:
        return len(self.rows)

    def filter_item(self, item: str | None) -> "Dataset":
        if item is None:
            return self
        return Dataset(tuple(t for t in self.rows if t.item == item), self.source_name)


def parse_dataset(text: str, source_name: str = "<memory>") -> Dataset:
    """Parse and validate CSV content; errors carry the 1-based data row."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = [h.strip() for h in next(reader)]
    except StopIteration:
        raise DatasetParseError("missing header row") from None
    missing = [c for c in COLUMNS if c not in header]
    if missing:
        raise DatasetParseError(f"header lacks columns {missing}", row=0)
    index = {c: header.index(c) for c in COLUMNS}

    rows: list[MembershipTriple] = []
    seen: set = set()
    for row_no, record in enumerate(reader, start=1):
        if not record or all(not cell.strip() for cell in record):
            continue
        if len(record) != len(header):
            raise DatasetParseError(f"expected {len(header)} fields, got {len(record)}", row=row_no)
        cell = {c: record[index[c]].strip() for c in COLUMNS}
        try:
            connective = Connective.parse(cell["connective"])
        except ConnectiveError as exc:
            raise DatasetParseError(str(exc), row=row_no, column="connective") from None
        weights = {}
        for col in WEIGHT_COLUMNS:
            try:
                value = float(cell[col])
            except ValueError:
                raise DatasetParseError(f"malformed number {cell[col]!r}", row=row_no, column=col) from None
            if not (math.isfinite(value) and 0.0 <= value <= 1.0):
                raise DatasetParseError(f"weight {cell[col]} outside [0, 1]", row=row_no, column=col)
            weights[col] = value
        triple = MembershipTriple(cell["item"], cell["concept_a"], cell["concept_b"], connective, **weights)
        if triple.key in seen:
            raise DatasetParseError(f"duplicate row for item {triple.item!r}", row=row_no)
        seen.add(triple.key)
        rows.append(triple)
    return Dataset(tuple(rows), source_name)


def read_dataset(path: str) -> Dataset:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_dataset(fh.read(), source_name=str(path))


def fixture_text() -> str:
    return resources.files("qconcept").joinpath("data/hampton_fixture.csv").read_text(encoding="utf-8")


def load_fixture() -> Dataset:
    """The four items from Hampton's studies: Mint, Sunglasses, Refrigerator, TV."""
    return parse_dataset(fixture_text(), source_name="hampton_fixture.csv")


def dataset_to_csv(d: Dataset) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(COLUMNS)
    for t in d.rows:
        writer.writerow([t.item, t.concept_a, t.concept_b, t.connective.value,
                         repr(t.mu_a), repr(t.mu_b), repr(t.mu_combined)])
    return out.getvalue()


@dataclass(frozen=True)
class PipelineOptions:
    stage: str = "verify"
    grid_steps: int = DEFAULT_GRID_STEPS
    tolerance: float = 1e-3
    workers: int = 1

    def __post_init__(self):
        if self.stage not in STAGES:
            raise ValueError(f"stage must be one of {STAGES}")


@dataclass(frozen=True, eq=False)
class ItemReport:
    triple: MembershipTriple
    verdict: ClassicalityVerdict
    fit: FitResult | None = None
    model: ConceptPairModel | None = None
    verification: VerificationReport | None = None
    error: str | None = None

    def to_dict(self) -> dict:
        t = self.triple
        return {
            "item": t.item,
            "concept_a": t.concept_a,
            "concept_b": t.concept_b,
            "connective": t.connective.value,
            "mu_a": t.mu_a,
            "mu_b": t.mu_b,
            "mu_combined": t.mu_combined,
            "verdict": _verdict_dict(self.verdict),
            "fit": _fit_dict(self.fit) if self.fit is not None else None,
            "model": self.model.to_dict() if self.model is not None else None,
            "verification": self.verification.to_dict() if self.verification is not None else None,
            "error": self.error,
        }


def _verdict_dict(v: ClassicalityVerdict) -> dict:
    return {
        "deficit_1": v.deficit_1,
        "deficit_2": v.deficit_2,
        "kolmogorovian": v.kolmogorovian,
        "extension_class": v.extension_class.value,
    }


def _fit_dict(f: FitResult) -> dict:
    p = f.params
    return {
        "feasible": f.feasible,
        "n": p.n if p else None,
        "n_prime": p.n_prime if p else None,
        "phi_degrees": p.phi_degrees if p else None,
        "r": p.r if p else None,
        "feasible_n_interval": list(f.feasible_n_interval) if f.feasible_n_interval else None,
        "predicted_mu": f.predicted_mu,
        "residual": f.residual,
    }


def process_triple(t: MembershipTriple, options: PipelineOptions) -> ItemReport:
    verdict = classify(t)
    if options.stage == "audit":
        return ItemReport(t, verdict)
    result = fit(t, options.grid_steps)
    if options.stage == "fit" or not result.feasible:
        return ItemReport(t, verdict, result)
    try:
        model = build_model(result.params, t.mu_a, t.mu_b)
    except QConceptError as exc:
        return ItemReport(t, verdict, result, error=f"{type(exc).__name__}: {exc}")
    if options.stage == "realize":
        return ItemReport(t, verdict, result, model)
    return ItemReport(t, verdict, result, model, verify_model(model, t, options.tolerance))


def run_pipeline(d: Dataset, options: PipelineOptions | None = None) -> list[ItemReport]:
    """Classify, fit, realize and verify every row; output order follows input order."""
    options = options or PipelineOptions()
    if options.workers > 1 and len(d.rows) > 1:
        with ThreadPoolExecutor(max_workers=options.workers) as pool:
            return list(pool.map(lambda t: process_triple(t, options), d.rows))
    return [process_triple(t, options) for t in d.rows]


def build_report(d: Dataset, reports: list[ItemReport], options: PipelineOptions) -> dict:
    return {
        "source": d.source_name,
        "tool_version": __version__,
        "stage": options.stage,
        "options": {"grid_steps": options.grid_steps, "tolerance": options.tolerance},
        "extension_rule": "strict inequalities; equality is Classical",
        "items": [r.to_dict() for r in reports],
    }


@dataclass(frozen=True)
class CurvePoint:
    phi_degrees: float
    mu: float | None
    singular: bool = False


def emit_curve(mu_a: float, mu_b: float, n: float, samples: int) -> list[CurvePoint]:
    """Combined weight over a uniform phi grid on [0, 180] degrees at fixed n."""
    if samples < 2:
        raise ValueError("samples must be at least 2")
    r = compute_r(mu_a, mu_b)
    n_prime = nprime_from_n(n, r)
    points = []
    for phi in np.linspace(0.0, 180.0, samples):
        params = FitParameters(n, n_prime, float(phi), r)
        try:
            points.append(CurvePoint(float(phi), predict_mu(mu_a, mu_b, params)))
        except SingularConfigurationError:
            points.append(CurvePoint(float(phi), None, singular=True))
    return points


def curve_to_csv(points: list[CurvePoint]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(("phi_degrees", "mu"))
    for p in points:
        writer.writerow((repr(p.phi_degrees), "singular" if p.singular else repr(p.mu)))
    return out.getvalue()


def synthesize(d: Dataset, count: int, seed: int, grid_steps: int = DEFAULT_GRID_STEPS) -> Dataset:
    """Simulated membership data drawn from each row's fitted C^3 model.

    Rows without a feasible fit are skipped.  Every (row, weight) pair draws
    from its own seed derived from ``seed``.
    """
    from .scop import entity_from_model, sample_membership

    rows = []
    for i, t in enumerate(d.rows):
        result = fit(t, grid_steps)
        if not result.feasible:
            continue
        entity = entity_from_model(build_model(result.params, t.mu_a, t.mu_b))
        sampled = []
        for k, concept in enumerate(("A", "B", "Combined")):
            child_seed = int(np.random.SeedSequence([seed, i, k]).generate_state(1)[0])
            sampled.append(sample_membership(entity, concept, count, child_seed))
        rows.append(MembershipTriple(t.item, t.concept_a, t.concept_b, t.connective, *sampled))
    return Dataset(tuple(rows), f"synthetic:{d.source_name}")
