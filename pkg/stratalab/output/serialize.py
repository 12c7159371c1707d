# This work is licensed under the GNU GPLv3.

"""JSON and CSV renderings of reports.

Rationals become {"num", "den", "decimal"} objects with exact integer strings
and a 15-significant-digit decimal; integers of any size become decimal
strings. The CSV rendering is the JSON document flattened to one row per
(method, field).
"""

from __future__ import annotations
import csv
import io
import json
import logging
from collections import namedtuple
from fractions import Fraction
from functools import singledispatch
from data_structures.reports import (AlphaPmf, AnalyticsReport,
                                     ComparisonReport, EnumerationReport,
                                     MethodCheck, PairedReport,
                                     SimulationReport)
from experiment.spec import ExperimentSpec, Method, validate_spec
from generic.converters import dict_to_fraction, fraction_to_dict

logger = logging.getLogger(__name__)

Row = namedtuple("Row", ["method", "field", "num", "den", "decimal"])

def _spec_fields(spec: ExperimentSpec) -> dict:
    return {"ball_count": str(spec.ball_count),
            "pot_counts": [str(n) for n in spec.pot_counts]}

def _label(label) -> list:
    return [str(a) for a in label]

@singledispatch
def to_document(report) -> dict:
    """Convert a report to a JSON-compatible document."""
    raise TypeError(f"cannot serialize {type(report).__name__}")

@to_document.register
def _(report: list) -> dict:
    return {"reports": [to_document(item) for item in report]}

@to_document.register
def _(report: AnalyticsReport) -> dict:
    return {"method": report.method.name,
            **_spec_fields(report.spec),
            "outcome_count": str(report.outcome_count),
            "average": fraction_to_dict(report.average),
            "w_statistic": fraction_to_dict(report.w_statistic),
            "variance_exact": fraction_to_dict(report.variance_exact),
            "variance_asymptotic":
                fraction_to_dict(report.variance_asymptotic),
            "remainder": fraction_to_dict(report.remainder),
            "standard_deviation": report.standard_deviation,
            "pots_needed": str(report.pots_needed)}

@to_document.register
def _(report: ComparisonReport) -> dict:
    return {**_spec_fields(report.spec),
            "reports": [to_document(report.first),
                        to_document(report.second)],
            "delta_exact": fraction_to_dict(report.delta_exact),
            "delta_asymptotic": fraction_to_dict(report.delta_asymptotic)}

@to_document.register
def _(report: AlphaPmf) -> dict:
    return {"method": report.method.name,
            **_spec_fields(report.spec),
            "target_label": _label(report.target_label),
            "outcome_count": str(report.outcomes),
            "pmf": {str(k): fraction_to_dict(p)
                    for k, p in report.support.items()}}

@to_document.register
def _(report: EnumerationReport) -> dict:
    return {**to_document(report.pmf),
            "mean": fraction_to_dict(report.mean),
            "variance": fraction_to_dict(report.variance),
            "diff": {name: {"oracle": fraction_to_dict(oracle),
                            "analytics": fraction_to_dict(analytics)}
                     for name, (oracle, analytics) in report.diff.items()}}

@to_document.register
def _(report: SimulationReport) -> dict:
    return {"method": report.method.name,
            **_spec_fields(report.spec),
            "trials": str(report.trials),
            "seed": str(report.seed),
            "target_label": _label(report.target_label),
            "empirical_mean": report.empirical_mean,
            "empirical_variance": report.empirical_variance,
            "stderr_of_variance": report.stderr_of_variance,
            "min_count": str(report.min_count),
            "max_count": str(report.max_count),
            "chi_square_statistic": report.chi_square_statistic}

@to_document.register
def _(report: MethodCheck) -> dict:
    return {"method": report.simulation.method.name,
            "verdict": "PASS" if report.passed else "FAIL",
            "simulation": to_document(report.simulation),
            "analytics": to_document(report.analytics)}

@to_document.register
def _(report: PairedReport) -> dict:
    return {**_spec_fields(report.spec),
            "checks": [to_document(check) for check in report.checks],
            "first_variance_exceeds_second":
                report.first_variance_exceeds_second}

def _scalar(value) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(value)

def _is_rational(value) -> bool:
    return isinstance(value, dict) and {"num", "den"} <= value.keys()

def flatten_document(document: dict, method: str = "",
                     prefix: str = "") -> list[Row]:
    """Flatten nested fields to dotted names, one row per (method, field)."""
    method = document.get("method", method)
    rows = []
    for key, value in document.items():
        name = f"{prefix}{key}"
        if key == "method":
            continue
        if _is_rational(value):
            rows.append(Row(method, name, value["num"], value["den"],
                            value["decimal"]))
        elif isinstance(value, dict):
            rows.extend(flatten_document(value, method, f"{name}."))
        elif value and isinstance(value, list) and isinstance(value[0], dict):
            for item in value:
                rows.extend(flatten_document(item, method, prefix))
        elif isinstance(value, list):
            rows.append(Row(method, name, ",".join(map(_scalar, value)),
                            "", ""))
        else:
            rows.append(Row(method, name, _scalar(value), "", ""))
    return rows

def to_json(document: dict) -> str:
    """Render a document as JSON."""
    return json.dumps(document, indent=2) + "\n"

def to_csv(document: dict) -> str:
    """Render a document as CSV."""
    stream = io.StringIO()
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(Row._fields)
    writer.writerows(flatten_document(document))
    return stream.getvalue()

def render(report, output_format: str = "json", **extra) -> str:
    """Serialize a report, with `extra` top-level fields first."""
    document = {**extra, **to_document(report)}
    if output_format == "csv":
        return to_csv(document)
    return to_json(document)

def fraction_from_document(value: dict) -> Fraction:
    """Parse a rational object."""
    return dict_to_fraction(value)

def analytics_report_from_document(document: dict) -> AnalyticsReport:
    """Rebuild an AnalyticsReport from its document."""
    return AnalyticsReport(
        method=Method[document["method"]],
        spec=_spec_from_document(document),
        outcome_count=int(document["outcome_count"]),
        average=fraction_from_document(document["average"]),
        w_statistic=fraction_from_document(document["w_statistic"]),
        variance_exact=fraction_from_document(document["variance_exact"]),
        variance_asymptotic=fraction_from_document(
            document["variance_asymptotic"]),
        pots_needed=int(document["pots_needed"]))

def comparison_from_document(document: dict) -> ComparisonReport:
    """Rebuild a ComparisonReport from its document."""
    first, second = map(analytics_report_from_document, document["reports"])
    return ComparisonReport(first.spec, first, second)

def _spec_from_document(document: dict) -> ExperimentSpec:
    return validate_spec(int(document["ball_count"]),
                         [int(n) for n in document["pot_counts"]])

def _label_from_document(values: list) -> tuple[int, ...]:
    return tuple(int(a) for a in values)

def alpha_pmf_from_document(document: dict) -> AlphaPmf:
    """Rebuild an AlphaPmf from its document."""
    return AlphaPmf(
        spec=_spec_from_document(document),
        method=Method[document["method"]],
        target_label=_label_from_document(document["target_label"]),
        support={int(k): fraction_from_document(p)
                 for k, p in document["pmf"].items()},
        outcomes=int(document["outcome_count"]))

def enumeration_report_from_document(document: dict) -> EnumerationReport:
    """Rebuild an EnumerationReport from its document."""
    return EnumerationReport(
        pmf=alpha_pmf_from_document(document),
        mean=fraction_from_document(document["mean"]),
        variance=fraction_from_document(document["variance"]),
        diff={name: (fraction_from_document(pair["oracle"]),
                     fraction_from_document(pair["analytics"]))
              for name, pair in document["diff"].items()})

def simulation_report_from_document(document: dict) -> SimulationReport:
    """Rebuild a SimulationReport from its document."""
    return SimulationReport(
        method=Method[document["method"]],
        spec=_spec_from_document(document),
        trials=int(document["trials"]),
        seed=int(document["seed"]),
        target_label=_label_from_document(document["target_label"]),
        empirical_mean=document["empirical_mean"],
        empirical_variance=document["empirical_variance"],
        min_count=int(document["min_count"]),
        max_count=int(document["max_count"]),
        chi_square_statistic=document["chi_square_statistic"],
        stderr_of_variance=document["stderr_of_variance"])

def paired_report_from_document(document: dict) -> PairedReport:
    """Rebuild a PairedReport from its document."""
    checks = tuple(
        MethodCheck(simulation_report_from_document(check["simulation"]),
                    analytics_report_from_document(check["analytics"]),
                    check["verdict"] == "PASS")
        for check in document["checks"])
    return PairedReport(_spec_from_document(document), checks)
