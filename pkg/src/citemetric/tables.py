"""Indicator tables over a dataset."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dataset import DatasetDocument
from .indicators import EmptyProfileError, IndicatorId, IndicatorValue, evaluate
from .profiles import CitationProfile

UNDEFINED_CELL = "undefined"


@dataclass(frozen=True)
class Table:
    header: tuple[str, ...]
    rows: tuple[tuple[str, tuple[IndicatorValue | None, ...]], ...]


def compute_table(doc: DatasetDocument, ids: Sequence[IndicatorId]) -> Table:
    """One row per unit and group (input order), one column per indicator.

    A size-independent indicator of an empty profile has no defined value;
    the cell is None and renders as ``undefined``.
    """
    if not ids:
        raise ValueError("at least one indicator id is required")
    profile_set = doc.to_profile_set()
    row_ids = [u.id for u in doc.units] + [g.id for g in doc.groups]
    rows = []
    for rid in row_ids:
        profile = profile_set.profile(rid)
        cells: list[IndicatorValue | None] = []
        for indicator in ids:
            try:
                cells.append(evaluate(indicator, profile))
            except EmptyProfileError:
                cells.append(None)
        rows.append((rid, tuple(cells)))
    header = ("unit",) + tuple(i.label for i in ids)
    return Table(header, tuple(rows))


def format_value(value: IndicatorValue | None) -> str:
    if value is None:
        return UNDEFINED_CELL
    if isinstance(value.value, int):
        return str(value.value)
    return repr(value.value)


def render_tsv(table: Table) -> str:
    lines = ["\t".join(table.header)]
    for rid, cells in table.rows:
        lines.append("\t".join([rid] + [format_value(c) for c in cells]))
    return "\n".join(lines) + "\n"
