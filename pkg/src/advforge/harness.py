"""Scoring and reporting: accuracy over prediction files, percentage drops
against the original test set, and the cross-attack average row."""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path

from . import ATTACK_NAMES
from .corpus import Dataset, DatasetFormatError

_LETTER_PREDICTIONS = {"A": 0, "B": 1, "C": 2, "D": 3}


class EvaluationError(ValueError):
    """Predictions and gold data do not line up."""


def round_half_away(value: float | Decimal, decimals: int = 1) -> float:
    quantum = Decimal(1).scaleb(-decimals)
    as_decimal = value if isinstance(value, Decimal) else Decimal(repr(value))
    return float(as_decimal.quantize(quantum, rounding=ROUND_HALF_UP))


def load_predictions(path: str | Path) -> dict[str, int]:
    """Line-delimited {"id", "prediction"} records; letters A-D map to 0-3."""
    path = Path(path)
    predictions: dict[str, int] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DatasetFormatError(f"{path}:{lineno}: invalid JSON ({exc})") from exc
            if not isinstance(rec, dict) or "id" not in rec or "prediction" not in rec:
                raise DatasetFormatError(f"{path}:{lineno}: expected id and prediction fields")
            example_id, value = rec["id"], rec["prediction"]
            if isinstance(value, str):
                if value not in _LETTER_PREDICTIONS:
                    raise DatasetFormatError(
                        f"{path}:{lineno}: prediction letter {value!r} not in A-D"
                    )
                value = _LETTER_PREDICTIONS[value]
            if not isinstance(value, int) or not 0 <= value <= 3:
                raise DatasetFormatError(
                    f"{path}:{lineno}: prediction {value!r} not an index in [0,3]"
                )
            if example_id in predictions:
                raise EvaluationError(f"{path}:{lineno}: duplicate prediction for id {example_id!r}")
            predictions[example_id] = value
    return predictions


def score(predictions: dict[str, int], gold: Dataset) -> float:
    """Accuracy percent; every gold id must be predicted and no extras allowed."""
    gold_ids = {ex.id for ex in gold}
    missing = sorted(gold_ids - predictions.keys())
    unknown = sorted(predictions.keys() - gold_ids)
    if missing or unknown:
        parts = []
        if missing:
            parts.append(f"missing predictions for: {', '.join(missing)}")
        if unknown:
            parts.append(f"predictions for unknown ids: {', '.join(unknown)}")
        raise EvaluationError("; ".join(parts))
    if not len(gold):
        raise EvaluationError("cannot score an empty dataset")
    correct = sum(1 for ex in gold if predictions[ex.id] == ex.answer_index)
    return 100.0 * correct / len(gold)


def drop_percent(orig: float, adv: float) -> float:
    """Relative change (adv - orig) / orig x 100, half-away-from-zero, one decimal."""
    if orig == 0:
        raise EvaluationError("original accuracy is 0; percentage drop is undefined")
    orig_d, adv_d = Decimal(repr(orig)), Decimal(repr(adv))
    return round_half_away((adv_d - orig_d) / orig_d * 100)


@dataclass(frozen=True)
class ReportRow:
    name: str
    accuracy: float  # percent, one decimal
    drop: float | None  # percent relative to original, one decimal; None for the original row


@dataclass
class EvalReport:
    original: ReportRow
    rows: list[ReportRow]
    average: ReportRow


def build_report(orig_acc: float, adv_accs: dict[str, float]) -> EvalReport:
    """Report over exactly the six adversarial sets. All stored values are
    one-decimal reported numbers, so every row and the average recompute
    exactly from what is printed; the average drop is taken against the
    one-decimal mean accuracy."""
    missing = [name for name in ATTACK_NAMES if name not in adv_accs]
    extra = [name for name in adv_accs if name not in ATTACK_NAMES]
    if missing:
        raise EvaluationError(f"missing adversarial accuracies for: {', '.join(missing)}")
    if extra:
        raise EvaluationError(f"unknown test set names: {', '.join(extra)}")

    orig_rounded = round_half_away(orig_acc)
    original = ReportRow(name="original", accuracy=orig_rounded, drop=None)
    rows = []
    for name in ATTACK_NAMES:
        acc = round_half_away(adv_accs[name])
        rows.append(ReportRow(name=name, accuracy=acc, drop=drop_percent(orig_rounded, acc)))

    mean = sum(Decimal(repr(r.accuracy)) for r in rows) / Decimal(len(rows))
    avg_acc = round_half_away(mean)
    average = ReportRow(name="average", accuracy=avg_acc,
                        drop=drop_percent(orig_rounded, avg_acc))
    return EvalReport(original=original, rows=rows, average=average)


def render_text(report: EvalReport, title: str | None = None) -> str:
    lines = []
    if title:
        lines.append(title)
    width = max(len(r.name) for r in [report.original, *report.rows, report.average])
    lines.append(f"{'test set':<{width}}  accuracy  drop")
    lines.append("-" * (width + 18))
    for row in [report.original, *report.rows]:
        drop = "" if row.drop is None else f"({row.drop:+.1f}%)"
        lines.append(f"{row.name:<{width}}  {row.accuracy:8.1f}  {drop}")
    lines.append("-" * (width + 18))
    lines.append(
        f"{report.average.name:<{width}}  {report.average.accuracy:8.1f}  "
        f"({report.average.drop:+.1f}%)"
    )
    return "\n".join(lines)


def to_records(report: EvalReport) -> list[dict]:
    records = []
    for row in [report.original, *report.rows, report.average]:
        records.append({"name": row.name, "accuracy": row.accuracy, "drop": row.drop})
    return records


def write_records(report: EvalReport, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for rec in to_records(report):
            fh.write(json.dumps(rec, ensure_ascii=False) + "\n")
