"""Oracle-versus-closed-form verification and tabular sweeps."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .closed_forms import closed_form
from .errors import TopoIdxError
from .factored import FactoredNumber, format_factors, to_json
from .families import Benzenoid, Family, Pah
from .generators import generate
from .graph import MolecularGraph
from .indices import (
    IndexSpec,
    NamedIndex,
    compute_index,
    compute_index_log,
    edge_product_power,
    edge_sum_power,
    vertex_power,
)

Selection = Union[NamedIndex, IndexSpec]

DEFAULT_PARAMETERS = (-1, 1, 2, 3)
ROW_FIELDS = ("family", "params", "index", "factors", "log10", "digits", "decimal")


def selection_label(sel: Selection) -> str:
    return sel.value if isinstance(sel, NamedIndex) else sel.label


def selection_spec(sel: Selection) -> IndexSpec:
    return sel.spec if isinstance(sel, NamedIndex) else sel


def all_selections(parameters: Sequence[int] = DEFAULT_PARAMETERS) -> list[Selection]:
    """The six named indices followed by the three general families per parameter."""
    sels: list[Selection] = list(NamedIndex)
    for make in (edge_sum_power, edge_product_power, vertex_power):
        sels.extend(make(p) for p in parameters)
    return sels


def family_params(family: Family) -> str:
    return ";".join(f"{k}={v}" for k, v in family.params().items())


@dataclass(frozen=True)
class VerificationReport:
    family: Family
    index: Selection
    oracle: FactoredNumber
    closed_form: FactoredNumber
    vertices: int
    edges: int
    elapsed: float = field(compare=False)

    @property
    def match(self) -> bool:
        return self.oracle == self.closed_form

    def to_dict(self) -> dict:
        return {
            "family": type(self.family).__name__.lower(),
            "params": self.family.params(),
            "index": selection_label(self.index),
            "oracle": format_factors(self.oracle),
            "closed_form": format_factors(self.closed_form),
            "match": self.match,
            "vertices": self.vertices,
            "edges": self.edges,
            "elapsed": self.elapsed,
        }


def verify_family(family: Family, selections: Sequence[Selection],
                  graph: MolecularGraph | None = None) -> list[VerificationReport]:
    """Generate the graph once and check every selected index against its formula."""
    g = generate(family) if graph is None else graph
    reports = []
    for sel in selections:
        t0 = time.perf_counter()
        spec = selection_spec(sel)
        oracle = compute_index(g, spec)
        expected = closed_form(spec, family)
        reports.append(VerificationReport(
            family, sel, oracle, expected, g.vertex_count, g.edge_count,
            time.perf_counter() - t0,
        ))
    return reports


def _verify_task(args):
    family, selections = args
    return verify_family(family, selections)


def _map_families(fn, families: Sequence[Family], selections, jobs: int) -> list:
    tasks = [(f, list(selections)) for f in families]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map() yields in submission order, which keeps output deterministic
            return list(pool.map(fn, tasks))
    return [fn(t) for t in tasks]


def run_verification(families: Sequence[Family], selections: Sequence[Selection],
                     jobs: int = 1) -> list[VerificationReport]:
    out: list[VerificationReport] = []
    for chunk in _map_families(_verify_task, families, selections, jobs):
        out.extend(chunk)
    return out


def value_row(value: FactoredNumber | float, max_digits: int | None) -> dict:
    """factors/log10/digits/decimal cells; a bare float is a log-domain result."""
    if isinstance(value, FactoredNumber):
        js = to_json(value, max_digits)
        return {
            "factor_map": js["factors"],
            "factors": format_factors(value),
            "log10": repr(js["log10"]),
            "digits": str(js.get("digits", "")),
            "decimal": js.get("decimal", ""),
        }
    return {"factors": "", "log10": repr(float(value)), "digits": "", "decimal": ""}


def evaluate(g: MolecularGraph, sel: Selection) -> FactoredNumber | float:
    spec = selection_spec(sel)
    if spec.is_integral:
        return compute_index(g, spec)
    return compute_index_log(g, spec)


@dataclass(frozen=True)
class SweepConfig:
    families: tuple[Family, ...]
    selections: tuple[Selection, ...]
    fmt: str = "csv"
    max_digits: int | None = None
    source: str = "graph"

    def __post_init__(self):
        if not self.families:
            raise TopoIdxError("sweep needs at least one parameter point")
        if not self.selections:
            raise TopoIdxError("sweep needs at least one index")
        if self.fmt not in FORMATTERS:
            raise TopoIdxError(f"unknown format {self.fmt!r}")
        if self.source not in ("graph", "closed-form"):
            raise TopoIdxError(f"unknown source {self.source!r}")


def _sweep_task(args):
    (family, selections), source, max_digits = args
    g = generate(family) if source == "graph" else None
    rows = []
    for sel in selections:
        if g is not None:
            value = evaluate(g, sel)
        else:
            value = closed_form(selection_spec(sel), family)
        row = {
            "family": type(family).__name__.lower(),
            "params": family_params(family),
            "index": selection_label(sel),
        }
        row.update(value_row(value, max_digits))
        rows.append(row)
    return rows


def sweep_rows(cfg: SweepConfig, jobs: int = 1) -> list[dict]:
    tasks = [((f, list(cfg.selections)), cfg.source, cfg.max_digits) for f in cfg.families]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_sweep_task, tasks))
    else:
        chunks = [_sweep_task(t) for t in tasks]
    return [row for chunk in chunks for row in chunk]


def format_csv(rows: Iterable[dict], fields: Sequence[str] = ROW_FIELDS) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\r\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: r.get(k, "") for k in fields})
    return buf.getvalue()


def format_markdown(rows: Iterable[dict], fields: Sequence[str] = ROW_FIELDS) -> str:
    lines = ["| " + " | ".join(fields) + " |", "|" + "---|" * len(fields)]
    for r in rows:
        cells = [str(r.get(k, "")).replace("|", "\\|") for k in fields]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def format_json(rows: Iterable[dict], fields: Sequence[str] = ROW_FIELDS) -> str:
    out = []
    for r in rows:
        obj = {k: r[k] for k in fields if k not in ("factors", "log10", "digits", "decimal")}
        if "factor_map" in r:
            obj["factors"] = r["factor_map"]
        obj["log10"] = float(r["log10"])
        if r.get("digits"):
            obj["digits"] = int(r["digits"])
        if r.get("decimal"):
            obj["decimal"] = r["decimal"]
        out.append(obj)
    return json.dumps(out, indent=2) + "\n"


FORMATTERS = {"csv": format_csv, "markdown": format_markdown, "json": format_json}


def family_grid(kind: str, n_range: Sequence[int], m_range: Sequence[int] | None = None) -> list[Family]:
    if kind == "pah":
        return [Pah(n) for n in n_range]
    if kind == "benzenoid":
        if m_range is None:
            raise TopoIdxError("benzenoid grid needs an m range")
        return [Benzenoid(m, n) for m in m_range for n in n_range]
    raise TopoIdxError(f"unknown family {kind!r}")
