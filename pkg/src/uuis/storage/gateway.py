"""Persistence gateway.

All reads go through ``select``/``get`` and all writes through ``apply``,
which takes a batch of mutations and commits them atomically: the batch is
validated and staged against an overlay first, and the real tables are only
touched once every mutation has passed.  Ids are assigned monotonically per
entity kind and never reused, and every row carries a hidden ``_version``
counter that updates bump, so callers can detect concurrent writes by
passing the version they read (``base_version``).
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field as dc_field
from typing import Any, Iterable, Mapping

from ..errors import (
    Conflict,
    ConstraintViolation,
    NotFound,
    UnknownEntityKind,
    UnknownField,
)
from ..schema import BOOL, ENTITIES, INT, TEXT, TS, Entity

OP_EQ = "eq"
OP_CONTAINS = "contains"
OP_IN = "in"
OP_LT = "lt"
OP_GE = "ge"
OP_NULL = "null"

_OPS = (OP_EQ, OP_CONTAINS, OP_IN, OP_LT, OP_GE, OP_NULL)

# (kind, field) pairs pointing at each target kind, for delete protection
REVERSE_FKS: dict[str, list[tuple[str, str]]] = {}
for _ent in ENTITIES.values():
    for _f in _ent.fields:
        if _f.fk:
            REVERSE_FKS.setdefault(_f.fk, []).append((_ent.kind, _f.name))


@dataclass(frozen=True)
class Criterion:
    field: str
    op: str
    value: Any = None


@dataclass(frozen=True)
class Ref:
    """Placeholder for the id a batch assigns to its n-th insert.

    Lets one atomic batch insert a row and rows that point at it, e.g. an
    asset plus its category extension.
    """
    index: int


@dataclass(frozen=True)
class Mutation:
    action: str
    kind: str
    id: int | None = None
    values: Mapping[str, Any] = dc_field(default_factory=dict)
    base_version: int | None = None

    @classmethod
    def insert(cls, kind: str, **values) -> "Mutation":
        return cls("insert", kind, values=values)

    @classmethod
    def update(cls, kind: str, id: int, values: Mapping[str, Any],
               base_version: int | None = None) -> "Mutation":
        return cls("update", kind, id=id, values=values,
                   base_version=base_version)

    @classmethod
    def delete(cls, kind: str, id: int) -> "Mutation":
        return cls("delete", kind, id=id)


@dataclass
class Page:
    items: list[dict]
    offset: int
    total: int


class _Overlay:
    """Staged view of the tables while a batch is being validated."""

    def __init__(self, tables: dict[str, dict[int, dict]]):
        self._tables = tables
        self.changes: dict[str, dict[int, dict | None]] = {}

    def get(self, kind: str, id: int) -> dict | None:
        staged = self.changes.get(kind, {})
        if id in staged:
            return staged[id]
        return self._tables.get(kind, {}).get(id)

    def put(self, kind: str, id: int, row: dict | None) -> None:
        self.changes.setdefault(kind, {})[id] = row

    def rows(self, kind: str) -> Iterable[dict]:
        staged = self.changes.get(kind, {})
        for id, row in self._tables.get(kind, {}).items():
            if id not in staged:
                yield row
        for row in staged.values():
            if row is not None:
                yield row


class MemoryStore:
    """Entity store backed by plain dicts; one table per schema kind."""

    def __init__(self):
        self._tables: dict[str, dict[int, dict]] = {k: {} for k in ENTITIES}
        self._next_id: dict[str, int] = {k: 1 for k in ENTITIES}
        self._lock = threading.RLock()

    # -- reads ------------------------------------------------------------

    def get(self, kind: str, id: int) -> dict | None:
        ent = self._entity(kind)
        with self._lock:
            row = self._tables[ent.kind].get(id)
            return dict(row) if row is not None else None

    def select(self, kind: str, criteria: Iterable[Criterion] = (),
               order_by: str | None = None, offset: int = 0,
               limit: int | None = None) -> Page:
        ent = self._entity(kind)
        fields = ent.field_map()
        crits = list(criteria)
        for c in crits:
            if c.field not in fields:
                raise UnknownField(f"{kind} has no field {c.field!r}",
                                   field=c.field)
            if c.op not in _OPS:
                raise ConstraintViolation(f"unknown operator {c.op!r}")
        order = order_by or ent.pk
        if order not in fields:
            raise UnknownField(f"{kind} has no field {order!r}", field=order)
        with self._lock:
            rows = [r for r in self._tables[kind].values()
                    if all(_matches(r, c) for c in crits)]
        # None sorts after every value; pk breaks ties for a stable order
        present = sorted((r for r in rows if r.get(order) is not None),
                         key=lambda r: (r[order], r[ent.pk]))
        absent = sorted((r for r in rows if r.get(order) is None),
                        key=lambda r: r[ent.pk])
        rows = present + absent
        total = len(rows)
        start = max(offset, 0)
        stop = None if limit is None else start + max(limit, 0)
        return Page(items=[dict(r) for r in rows[start:stop]],
                    offset=start, total=total)

    def count(self, kind: str, criteria: Iterable[Criterion] = ()) -> int:
        return self.select(kind, criteria, limit=0).total

    # -- writes -----------------------------------------------------------

    def apply(self, mutations: Iterable[Mutation]) -> list[int]:
        muts = list(mutations)
        with self._lock:
            overlay = _Overlay(self._tables)
            next_ids = dict(self._next_id)
            assigned: list[int] = []
            for m in muts:
                ent = self._entity(m.kind)
                values = _resolve_refs(m.values, assigned)
                if m.action == "insert":
                    row = self._stage_insert(ent, values, overlay, next_ids)
                    assigned.append(row[ent.pk])
                elif m.action == "update":
                    self._stage_update(ent, m, values, overlay)
                elif m.action == "delete":
                    self._stage_delete(ent, m.id, overlay)
                else:
                    raise ConstraintViolation(f"unknown action {m.action!r}")
            for kind, staged in overlay.changes.items():
                table = self._tables[kind]
                for id, row in staged.items():
                    if row is None:
                        table.pop(id, None)
                    else:
                        table[id] = row
            self._next_id = next_ids
            self._after_commit()
            return assigned

    # -- snapshot / persistence helpers ------------------------------------

    def dump(self) -> dict:
        """Full store state as one JSON-serializable dict."""
        with self._lock:
            return {
                "entities": {
                    kind: [dict(self._tables[kind][id])
                           for id in sorted(self._tables[kind])]
                    for kind in ENTITIES
                },
                "counters": dict(self._next_id),
            }

    def restore(self, state: Mapping[str, Any]) -> None:
        """Replace all content with a previously dumped state."""
        tables: dict[str, dict[int, dict]] = {k: {} for k in ENTITIES}
        for kind, rows in state.get("entities", {}).items():
            ent = self._entity(kind)
            for row in rows:
                tables[kind][row[ent.pk]] = dict(row)
        counters = {k: 1 for k in ENTITIES}
        counters.update({k: int(v) for k, v in
                         state.get("counters", {}).items() if k in ENTITIES})
        with self._lock:
            self._tables = tables
            self._next_id = counters

    def close(self) -> None:
        pass

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()
        return False

    # -- internals ----------------------------------------------------------

    def _after_commit(self) -> None:
        """Hook for durable backends; the in-memory store does nothing."""

    def _entity(self, kind: str) -> Entity:
        ent = ENTITIES.get(kind)
        if ent is None:
            raise UnknownEntityKind(f"unknown entity kind {kind!r}")
        return ent

    def _stage_insert(self, ent: Entity, values: Mapping[str, Any],
                      overlay: _Overlay, next_ids: dict[str, int]) -> dict:
        row = dict(values)
        if ent.pk_auto:
            if ent.pk in row:
                raise ConstraintViolation(
                    f"{ent.kind} insert must not carry {ent.pk}",
                    field=ent.pk)
            row[ent.pk] = next_ids[ent.kind]
            next_ids[ent.kind] += 1
        else:
            if row.get(ent.pk) is None:
                raise ConstraintViolation(
                    f"{ent.kind} insert requires {ent.pk}", field=ent.pk)
        for f in ent.fields:
            if f.name not in row:
                row[f.name] = f.default
        if overlay.get(ent.kind, row[ent.pk]) is not None:
            raise ConstraintViolation(
                f"{ent.kind} id {row[ent.pk]} already exists", field=ent.pk)
        self._validate_row(ent, row, overlay, exclude_id=None)
        row["_version"] = 1
        overlay.put(ent.kind, row[ent.pk], row)
        return row

    def _stage_update(self, ent: Entity, m: Mutation, values: Mapping,
                      overlay: _Overlay) -> None:
        current = overlay.get(ent.kind, m.id)
        if current is None:
            raise NotFound(f"{ent.kind} {m.id} not found")
        if m.base_version is not None and current["_version"] != m.base_version:
            raise Conflict(
                f"{ent.kind} {m.id} changed since it was read")
        if ent.pk in values:
            raise ConstraintViolation(f"cannot change {ent.pk}", field=ent.pk)
        merged = dict(current)
        merged.update(values)
        self._validate_row(ent, merged, overlay, exclude_id=m.id)
        merged["_version"] = current["_version"] + 1
        overlay.put(ent.kind, m.id, merged)

    def _stage_delete(self, ent: Entity, id: int, overlay: _Overlay) -> None:
        if overlay.get(ent.kind, id) is None:
            raise NotFound(f"{ent.kind} {id} not found")
        for ref_kind, ref_field in REVERSE_FKS.get(ent.kind, ()):  # keep refs resolvable
            for row in overlay.rows(ref_kind):
                if row.get(ref_field) == id:
                    raise ConstraintViolation(
                        f"{ent.kind} {id} is referenced by "
                        f"{ref_kind}.{ref_field}")
        overlay.put(ent.kind, id, None)

    def _validate_row(self, ent: Entity, row: Mapping[str, Any],
                      overlay: _Overlay, exclude_id: int | None) -> None:
        fields = ent.field_map()
        for key, value in row.items():
            if key == "_version":
                continue
            f = fields.get(key)
            if f is None:
                raise UnknownField(f"{ent.kind} has no field {key!r}",
                                   field=key)
            if value is None:
                continue
            _check_type(ent.kind, f, value)
            if f.fk and overlay.get(f.fk, value) is None:
                raise ConstraintViolation(
                    f"{ent.kind}.{key} points at missing {f.fk} {value}",
                    field=key)
        for f in ent.fields:
            if f.required and row.get(f.name) is None:
                raise ConstraintViolation(
                    f"{ent.kind}.{f.name} is required", field=f.name)
        for group in ent.unique:
            values = tuple(row.get(name) for name in group)
            if any(v is None for v in values):
                continue
            for other in overlay.rows(ent.kind):
                if exclude_id is not None and other[ent.pk] == exclude_id:
                    continue
                if other[ent.pk] == row.get(ent.pk):
                    continue
                if tuple(other.get(name) for name in group) == values:
                    raise ConstraintViolation(
                        f"{ent.kind} duplicate on ({', '.join(group)})",
                        field=group[0])


def _resolve_refs(values: Mapping[str, Any],
                  assigned: list[int]) -> dict[str, Any]:
    out = {}
    for key, value in values.items():
        if isinstance(value, Ref):
            if not 0 <= value.index < len(assigned):
                raise ConstraintViolation(
                    f"{key} points at insert #{value.index}, which has not "
                    "happened in this batch", field=key)
            value = assigned[value.index]
        out[key] = value
    return out


def _check_type(kind: str, f, value: Any) -> None:
    if f.kind == INT:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConstraintViolation(
                f"{kind}.{f.name} must be an integer", field=f.name)
    elif f.kind == BOOL:
        if not isinstance(value, bool):
            raise ConstraintViolation(
                f"{kind}.{f.name} must be a boolean", field=f.name)
    elif f.kind in (TEXT, TS):
        if not isinstance(value, str):
            raise ConstraintViolation(
                f"{kind}.{f.name} must be a string", field=f.name)
        if f.max_len is not None and len(value) > f.max_len:
            raise ConstraintViolation(
                f"{kind}.{f.name} longer than {f.max_len}", field=f.name)
    else:  # pragma: no cover - schema kinds are closed
        raise ConstraintViolation(f"{kind}.{f.name} has unknown kind")


def _matches(row: Mapping[str, Any], c: Criterion) -> bool:
    value = row.get(c.field)
    if c.op == OP_EQ:
        return value == c.value
    if c.op == OP_CONTAINS:
        return isinstance(value, str) and str(c.value) in value
    if c.op == OP_IN:
        return value in c.value
    if c.op == OP_NULL:
        return (value is None) if c.value else (value is not None)
    if value is None:
        return False
    if c.op == OP_LT:
        return value < c.value
    if c.op == OP_GE:
        return value >= c.value
    return False
