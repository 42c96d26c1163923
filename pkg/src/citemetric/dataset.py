"""Dataset ingestion and serialization.

Two interchangeable formats carry the same document:

* CSV, for hand-authored fixtures. Header line ``unit,citations``; one row
  per unit as ``id,count;count;...`` (empty after the comma means zero
  publications); group rows as ``@groupid,member|member|...``. Lines that
  are blank or start with ``#`` are skipped.
* JSON, for tooling: ``{"units": [{"id": ..., "citations": [...]}, ...],
  "groups": [{"id": ..., "members": [...]}, ...]}``.

Documents keep citation lists in their original order so that a parse,
serialize, parse round trip is lossless; canonicalization happens when a
document is turned into a :class:`~citemetric.profiles.ProfileSet`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .profiles import ProfileSet, canonicalize

CSV_HEADER = "unit,citations"

_FORBIDDEN_ID_CHARS = set(",;|\n\r\t")


class DatasetError(ValueError):
    """A malformed dataset; carries the 1-based input line where known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _validate_identifier(identifier: str, line: int | None = None) -> None:
    if not identifier:
        raise DatasetError("empty identifier", line)
    if identifier.startswith("@"):
        raise DatasetError(f"identifier {identifier!r} may not start with '@'", line)
    if any(ch in _FORBIDDEN_ID_CHARS for ch in identifier):
        raise DatasetError(f"identifier {identifier!r} contains a reserved character", line)


@dataclass(frozen=True)
class DatasetUnit:
    id: str
    citations: tuple[int, ...]


@dataclass(frozen=True)
class DatasetGroup:
    id: str
    members: tuple[str, ...]


@dataclass(frozen=True)
class DatasetDocument:
    """Units with raw citation lists, plus optional groups over them."""

    units: tuple[DatasetUnit, ...] = ()
    groups: tuple[DatasetGroup, ...] = ()

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for unit in self.units:
            _validate_identifier(unit.id)
            if unit.id in seen:
                raise DatasetError(f"duplicate identifier {unit.id!r}")
            seen.add(unit.id)
            for c in unit.citations:
                if not isinstance(c, int) or isinstance(c, bool):
                    raise DatasetError(f"unit {unit.id!r} has a non-integer count {c!r}")
                if c < 0:
                    raise DatasetError(f"unit {unit.id!r} has a negative count {c}")
        unit_ids = {u.id for u in self.units}
        for group in self.groups:
            _validate_identifier(group.id)
            if group.id in seen:
                raise DatasetError(f"duplicate identifier {group.id!r}")
            seen.add(group.id)
            for member in group.members:
                if member not in unit_ids:
                    raise DatasetError(
                        f"group {group.id!r} references unknown unit {member!r}"
                    )

    def to_profile_set(self) -> ProfileSet:
        """Canonicalize every unit and precompute merged group profiles."""
        return ProfileSet.build(
            {u.id: canonicalize(u.citations) for u in self.units},
            {g.id: g.members for g in self.groups},
        )


def _parse_csv(text: str) -> DatasetDocument:
    units: list[DatasetUnit] = []
    groups: list[DatasetGroup] = []
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            if line != CSV_HEADER:
                raise DatasetError(f"expected header {CSV_HEADER!r}, got {line!r}", lineno)
            header_seen = True
            continue
        if "," not in line:
            raise DatasetError(f"expected 'id,counts', got {line!r}", lineno)
        identifier, payload = (part.strip() for part in line.split(",", 1))
        if identifier.startswith("@"):
            gid = identifier[1:]
            _validate_identifier(gid, lineno)
            members = tuple(m.strip() for m in payload.split("|")) if payload else ()
            groups.append(DatasetGroup(gid, members))
            continue
        _validate_identifier(identifier, lineno)
        counts = []
        if payload:
            for token in payload.split(";"):
                token = token.strip()
                try:
                    value = int(token)
                except ValueError:
                    raise DatasetError(f"bad citation count {token!r}", lineno) from None
                if value < 0:
                    raise DatasetError(f"negative citation count {value}", lineno)
                counts.append(value)
        units.append(DatasetUnit(identifier, tuple(counts)))
    if not header_seen:
        raise DatasetError(f"missing header {CSV_HEADER!r}")
    return DatasetDocument(tuple(units), tuple(groups))


def _parse_json(text: str) -> DatasetDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatasetError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict):
        raise DatasetError("top-level JSON value must be an object")
    raw_units = doc.get("units", [])
    raw_groups = doc.get("groups", [])
    if not isinstance(raw_units, list) or not isinstance(raw_groups, list):
        raise DatasetError("'units' and 'groups' must be arrays")
    units = []
    for entry in raw_units:
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), str):
            raise DatasetError(f"malformed unit entry: {entry!r}")
        citations = entry.get("citations", [])
        if not isinstance(citations, list):
            raise DatasetError(f"unit {entry['id']!r}: 'citations' must be an array")
        units.append(DatasetUnit(entry["id"], tuple(citations)))
    groups = []
    for entry in raw_groups:
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), str):
            raise DatasetError(f"malformed group entry: {entry!r}")
        members = entry.get("members", [])
        if not isinstance(members, list) or not all(isinstance(m, str) for m in members):
            raise DatasetError(f"group {entry['id']!r}: 'members' must be an array of ids")
        groups.append(DatasetGroup(entry["id"], tuple(members)))
    return DatasetDocument(tuple(units), tuple(groups))


def parse_dataset(data: str | bytes, fmt: str) -> DatasetDocument:
    """Parse CSV or JSON input into a validated document."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    if fmt == "csv":
        return _parse_csv(text)
    if fmt == "json":
        return _parse_json(text)
    raise ValueError(f"unknown dataset format {fmt!r}; expected 'csv' or 'json'")


def serialize_dataset(doc: DatasetDocument, fmt: str) -> str:
    """Render a document back to text; parsing the result yields an equal document."""
    if fmt == "csv":
        lines = [CSV_HEADER]
        lines.extend(f"{u.id},{';'.join(str(c) for c in u.citations)}" for u in doc.units)
        lines.extend(f"@{g.id},{'|'.join(g.members)}" for g in doc.groups)
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = {
            "units": [{"id": u.id, "citations": list(u.citations)} for u in doc.units],
            "groups": [{"id": g.id, "members": list(g.members)} for g in doc.groups],
        }
        return json.dumps(payload, indent=2) + "\n"
    raise ValueError(f"unknown dataset format {fmt!r}; expected 'csv' or 'json'")
