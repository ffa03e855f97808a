"""Seed fixture loading.

A fixture is one JSON object of ``{kind: [records, ...]}`` with explicit
primary keys, using the schema's own field names.  The whole file is
validated first (unknown kinds or fields, missing NOT NULL columns,
duplicate ids, broken cross-references, unique clashes) and only then
swapped into the store, so a bad fixture never leaves half-loaded data.
"""
from __future__ import annotations

import json
from typing import Any, Mapping

from ..errors import ConstraintViolation, ParseError, UnknownEntityKind, UnknownField
from ..schema import ENTITIES
from .gateway import MemoryStore, _check_type


def read_fixture(path: str) -> dict[str, list[dict]]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot open fixture {path}: {exc}")
    except ValueError as exc:
        raise ParseError(f"fixture {path} is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise ParseError(f"fixture {path} must be a JSON object")
    return data


def load_seed(store: MemoryStore, path: str) -> dict[str, int]:
    """Replace the store content with the fixture at ``path``.

    Returns {kind: row count} for what was loaded.
    """
    data = read_fixture(path)
    tables: dict[str, dict[int, dict]] = {k: {} for k in ENTITIES}
    for kind, records in data.items():
        ent = ENTITIES.get(kind)
        if ent is None:
            raise UnknownEntityKind(f"fixture has unknown kind {kind!r}")
        if not isinstance(records, list):
            raise ParseError(f"fixture section {kind!r} must be a list")
        for record in records:
            if not isinstance(record, Mapping):
                raise ParseError(f"fixture {kind} rows must be objects")
            row = dict(record)
            for f in ent.fields:
                if f.name not in row:
                    row[f.name] = f.default
            pk = row.get(ent.pk)
            if not isinstance(pk, int) or isinstance(pk, bool) or pk < 1:
                raise ConstraintViolation(
                    f"fixture {kind} rows need a positive {ent.pk}",
                    field=ent.pk)
            if pk in tables[kind]:
                raise ConstraintViolation(
                    f"fixture {kind} repeats id {pk}", field=ent.pk)
            row["_version"] = 1
            tables[kind][pk] = row
    _validate_tables(tables)
    counters = {kind: (max(rows) + 1 if rows else 1)
                for kind, rows in tables.items()}
    store.restore({"entities": {k: list(v.values()) for k, v in tables.items()},
                   "counters": counters})
    return {kind: len(rows) for kind, rows in tables.items() if rows}


def _validate_tables(tables: dict[str, dict[int, dict]]) -> None:
    for kind, rows in tables.items():
        ent = ENTITIES[kind]
        fields = ent.field_map()
        seen: dict[tuple, int] = {}
        for pk, row in rows.items():
            for key, value in row.items():
                if key == "_version":
                    continue
                f = fields.get(key)
                if f is None:
                    raise UnknownField(
                        f"fixture {kind} row {pk} has unknown field {key!r}",
                        field=key)
                if value is None:
                    continue
                _check_type(kind, f, value)
                if f.fk and value not in tables[f.fk]:
                    raise ConstraintViolation(
                        f"fixture {kind} row {pk}: {key} points at missing "
                        f"{f.fk} {value}", field=key)
            for f in ent.fields:
                if f.required and row.get(f.name) is None:
                    raise ConstraintViolation(
                        f"fixture {kind} row {pk} is missing {f.name}",
                        field=f.name)
            for group in ent.unique:
                values = tuple(row.get(name) for name in group)
                if any(v is None for v in values):
                    continue
                ukey = (group, values)
                if ukey in seen:
                    raise ConstraintViolation(
                        f"fixture {kind} rows {seen[ukey]} and {pk} clash on "
                        f"({', '.join(group)})", field=group[0])
                seen[ukey] = pk
