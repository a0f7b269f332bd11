"""Batch analysis and report emission.

:func:`run_analyze` turns a dataset into an :class:`AnalysisReport`:
per-subject threshold sets, rationality index, structure flags and
witnesses, plus the cross-subject comparison (verdicts, equivalence
classes, cover edges).  A capacity failure on one subject is recorded on
that subject and the rest of the batch proceeds.

Reports render to JSON (one document), CSV (one row per subject) or
"plotdata" (two CSV tables: index bars sorted ascending, and the
irrationality segments per subject in the same order).  Rendering is
deliberately byte-stable: fixed key order, exact rationals plus
fixed-width decimals, no timestamps.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from .choice import menu_key
from .errors import CapacityError
from .dataset import ChoiceDataset
from .measure import (
    IrrationalitySets,
    MultiComparison,
    TransitivityFlags,
    TriangularResult,
    Witness,
    classify_transitivity,
    compare_many,
    irrationality_sets,
    is_selective_in_contractions,
    is_selective_in_expansions,
    triangular_condition,
)
from .rationals import format_decimal, format_rational
from .scf import (
    DomainKind,
    StochasticChoiceFunction,
    critical_lambdas,
    is_lambda_rational,
)

SCHEMA_VERSION = 1

_ONE = Fraction(1)


@dataclass(frozen=True)
class AnalysisConfig:
    max_universe: Optional[int] = None
    digits: int = 6
    oracle: bool = False
    seed: int = 0


@dataclass(frozen=True)
class SubjectAnalysis:
    subject: str
    domain: DomainKind
    universe: tuple[str, ...]
    sets: IrrationalitySets
    index: Fraction
    transitivity: TransitivityFlags
    triangular: TriangularResult
    selective_contractions: Optional[bool]
    selective_expansions: Optional[bool]


@dataclass(frozen=True)
class SubjectError:
    subject: str
    kind: str
    message: str


@dataclass(frozen=True)
class AnalysisReport:
    config: AnalysisConfig
    subjects: tuple[Union[SubjectAnalysis, SubjectError], ...]
    comparison: Optional[MultiComparison]

    def ok_subjects(self) -> list[SubjectAnalysis]:
        return [s for s in self.subjects if isinstance(s, SubjectAnalysis)]


def analyze_scf(
    scf: StochasticChoiceFunction,
    subject: str = "model",
    config: AnalysisConfig = AnalysisConfig(),
) -> SubjectAnalysis:
    """Full single-subject analysis bundle.

    With ``config.oracle`` the cheap enumeration is cross-checked against
    the slow ones: nested-pair contraction enumeration against the full
    one, and interval membership against direct axiom checking on the
    critical threshold grid.  A mismatch is a bug, reported loudly.
    """
    sets = irrationality_sets(scf)
    if config.oracle:
        slow = irrationality_sets(scf, full_pairs=True)
        if slow.chernoff != sets.chernoff:
            raise AssertionError(
                "contraction threshold sets disagree between nested-pair and "
                "full enumeration"
            )
        for lam in critical_lambdas(scf):
            if sets.union.contains(lam) == bool(is_lambda_rational(scf, lam)):
                raise AssertionError(
                    f"interval membership and axiom checking disagree at {lam}"
                )
    if scf.domain_kind is DomainKind.FULL:
        contractions: Optional[bool] = is_selective_in_contractions(scf)
        expansions: Optional[bool] = is_selective_in_expansions(scf)
    else:
        contractions = None
        expansions = None
    return SubjectAnalysis(
        subject=subject,
        domain=scf.domain_kind,
        universe=scf.universe,
        sets=sets,
        index=_ONE - sets.union.measure(),
        transitivity=classify_transitivity(scf),
        triangular=triangular_condition(scf),
        selective_contractions=contractions,
        selective_expansions=expansions,
    )


def run_analyze(
    dataset: ChoiceDataset, config: AnalysisConfig = AnalysisConfig()
) -> AnalysisReport:
    subjects: list[Union[SubjectAnalysis, SubjectError]] = []
    scfs: list[tuple[str, StochasticChoiceFunction]] = []
    for subject in dataset.subject_ids():
        try:
            scf = dataset.scf(subject, max_universe=config.max_universe)
            subjects.append(analyze_scf(scf, subject=subject, config=config))
            scfs.append((subject, scf))
        except CapacityError as exc:
            subjects.append(SubjectError(subject, "capacity", str(exc)))
    comparison = compare_many(scfs) if len(scfs) >= 1 else None
    return AnalysisReport(config=config, subjects=tuple(subjects), comparison=comparison)


# -- serialization -------------------------------------------------------------


def _witness_json(witness: Witness) -> dict:
    lo, hi = witness.interval
    out: dict = {
        "interval": [format_rational(lo), format_rational(hi)],
        "axiom": witness.axiom,
    }
    if witness.axiom == "chernoff":
        small, large, alternative = witness.detail
        out["menu"] = list(menu_key(small))
        out["larger_menu"] = list(menu_key(large))
        out["alternative"] = alternative
    elif witness.axiom == "condorcet":
        menu, alternative = witness.detail
        out["menu"] = list(menu_key(menu))
        out["alternative"] = alternative
    else:
        out["triple"] = list(witness.detail)
    return out


def _subject_json(entry: Union[SubjectAnalysis, SubjectError], digits: int) -> dict:
    if isinstance(entry, SubjectError):
        return {
            "subject": entry.subject,
            "status": "error",
            "error": {"kind": entry.kind, "message": entry.message},
        }
    sets = entry.sets
    return {
        "subject": entry.subject,
        "status": "ok",
        "domain": entry.domain.value,
        "universe": list(entry.universe),
        "sets": {
            "chernoff": sets.chernoff.to_json(),
            "condorcet": sets.condorcet.to_json(),
            "transitivity": sets.transitivity.to_json(),
            "irrationality": sets.union.to_json(),
        },
        "rationality_index": {
            "exact": format_rational(entry.index),
            "decimal": format_decimal(entry.index, digits),
        },
        "flags": {
            "maximally_rational": sets.maximally_rational,
            "minimally_rational": sets.minimally_rational,
            "weak_s_transitive": entry.transitivity.weak,
            "almost_weak_s_transitive": entry.transitivity.almost_weak,
            "moderate_s_transitive": entry.transitivity.moderate,
            "almost_moderate_s_transitive": entry.transitivity.almost_moderate,
            "strong_s_transitive": entry.transitivity.strong,
            "triangular_condition": entry.triangular.holds,
            "selective_contractions": entry.selective_contractions,
            "selective_expansions": entry.selective_expansions,
        },
        "triangular_witness": (
            list(entry.triangular.witness) if entry.triangular.witness else None
        ),
        "witnesses": [_witness_json(w) for w in sets.witnesses],
    }


def render_json(report: AnalysisReport) -> str:
    doc: dict = {
        "schema_version": SCHEMA_VERSION,
        "settings": {
            "digits": report.config.digits,
            "oracle": report.config.oracle,
            "max_universe": report.config.max_universe,
        },
        "subjects": [
            _subject_json(entry, report.config.digits) for entry in report.subjects
        ],
    }
    if report.comparison is not None:
        comparison = report.comparison
        doc["comparisons"] = {
            "verdicts": [
                {
                    "left": left,
                    "right": right,
                    "verdict": comparison.verdict(left, right).value,
                }
                for i, left in enumerate(comparison.names)
                for right in comparison.names[i + 1 :]
            ],
            "equivalence_classes": [list(group) for group in comparison.classes],
            "hasse_edges": [
                {"more_rational": above, "less_rational": below}
                for above, below in comparison.hasse_edges
            ],
        }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


_CSV_COLUMNS = [
    "subject",
    "status",
    "rationality_index",
    "irrationality_set",
    "maximally_rational",
    "minimally_rational",
    "weak_s_transitive",
    "almost_weak_s_transitive",
    "moderate_s_transitive",
    "almost_moderate_s_transitive",
    "strong_s_transitive",
    "triangular_condition",
    "selective_contractions",
    "selective_expansions",
]


def _csv_flag(value: Optional[bool]) -> str:
    if value is None:
        return ""
    return "true" if value else "false"


def render_csv(report: AnalysisReport) -> str:
    import csv as _csv

    buffer = io.StringIO()
    writer = _csv.writer(buffer, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    for entry in report.subjects:
        if isinstance(entry, SubjectError):
            writer.writerow([entry.subject, f"error:{entry.kind}"] + [""] * 12)
            continue
        sets = entry.sets
        writer.writerow(
            [
                entry.subject,
                "ok",
                format_decimal(entry.index, report.config.digits),
                str(sets.union),
                _csv_flag(sets.maximally_rational),
                _csv_flag(sets.minimally_rational),
                _csv_flag(entry.transitivity.weak),
                _csv_flag(entry.transitivity.almost_weak),
                _csv_flag(entry.transitivity.moderate),
                _csv_flag(entry.transitivity.almost_moderate),
                _csv_flag(entry.transitivity.strong),
                _csv_flag(entry.triangular.holds),
                _csv_flag(entry.selective_contractions),
                _csv_flag(entry.selective_expansions),
            ]
        )
    return buffer.getvalue()


def render_plotdata(report: AnalysisReport) -> tuple[str, str]:
    """Two CSV tables: rationality-index bars (ascending) and threshold
    segments per subject, in bar order."""
    import csv as _csv

    ok = report.ok_subjects()
    ordered = sorted(ok, key=lambda s: (s.index, s.subject))
    digits = report.config.digits

    bars = io.StringIO()
    writer = _csv.writer(bars, lineterminator="\n")
    writer.writerow(["subject", "rationality_index"])
    for entry in ordered:
        writer.writerow([entry.subject, format_decimal(entry.index, digits)])

    segments = io.StringIO()
    writer = _csv.writer(segments, lineterminator="\n")
    writer.writerow(["subject", "lo", "hi", "lo_decimal", "hi_decimal"])
    for entry in ordered:
        for lo, hi in entry.sets.union:
            writer.writerow(
                [
                    entry.subject,
                    format_rational(lo),
                    format_rational(hi),
                    format_decimal(lo, digits),
                    format_decimal(hi, digits),
                ]
            )
    return bars.getvalue(), segments.getvalue()


def emit_report(
    report: AnalysisReport, fmt: str, out: Optional[Union[str, Path]] = None
) -> list[Path]:
    """Write the report in the requested format; return written paths.

    With ``out`` None the content goes to stdout and no paths are
    returned.  The plotdata format writes ``<stem>_index_bars.csv`` and
    ``<stem>_segments.csv`` next to the given path.
    """
    if fmt == "json":
        content = render_json(report)
    elif fmt == "csv":
        content = render_csv(report)
    elif fmt == "plotdata":
        bars, segments = render_plotdata(report)
        if out is None:
            print("# index_bars")
            print(bars, end="")
            print("# segments")
            print(segments, end="")
            return []
        out = Path(out)
        bars_path = out.with_name(out.stem + "_index_bars.csv")
        segments_path = out.with_name(out.stem + "_segments.csv")
        bars_path.write_text(bars, encoding="utf-8")
        segments_path.write_text(segments, encoding="utf-8")
        return [bars_path, segments_path]
    else:
        raise ValueError(f"unknown report format {fmt!r}")

    if out is None:
        print(content, end="")
        return []
    out = Path(out)
    out.write_text(content, encoding="utf-8")
    return [out]
