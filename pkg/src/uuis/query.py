"""Search query language.

Grammar, tightest-binding last::

    expr   := term (OR term)*
    term   := factor (AND factor)*
    factor := clause | '(' expr ')'
    clause := Field ':' value
    value  := quoted string | bare word

AND binds tighter than OR, keywords are uppercase and case-sensitive, and
values match case-insensitively with ``*`` as a wildcard for any run of
characters.  Field names resolve case-insensitively against a catalog that
also knows each field's type; numeric fields take digits only and no
wildcards.

``serialize`` renders any tree in one canonical spelling (catalog casing,
always-quoted values, parentheses only where precedence demands them), so
serialize(parse(s)) is a fixpoint.  ``matches`` is a deliberately naive
recursive interpreter kept as the reference; ``compile_query`` flattens the
tree to disjunctive normal form with precompiled per-clause matchers and is
what the services actually run.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from .errors import (
    BadValueForType,
    DepthExceeded,
    QuerySyntaxError,
    UnknownField,
)

MAX_QUERY_LENGTH = 4096
MAX_DEPTH = 32
MAX_BRANCHES = 10000

KEYWORDS = ("AND", "OR")
_WORD_STOP = set(' \t\r\n():"')


@dataclass(frozen=True)
class Clause:
    field: str
    value: str


@dataclass(frozen=True)
class And:
    parts: tuple


@dataclass(frozen=True)
class Or:
    parts: tuple


Ast = object  # Clause | And | Or


class FieldCatalog:
    """Named, typed fields a query may mention.

    ``fields`` maps the canonical field name to a type tag: "text", "int",
    "timestamp" or "bool".  Lookup is case-insensitive; output uses the
    canonical spelling.
    """

    def __init__(self, fields: Mapping[str, str]):
        self.fields = dict(fields)
        self._ci = {name.lower(): name for name in fields}

    def resolve(self, name: str) -> tuple[str, str]:
        canonical = self._ci.get(name.lower())
        if canonical is None:
            raise UnknownField(f"unknown search field {name!r}", field=name)
        return canonical, self.fields[canonical]


# ---------------------------------------------------------------------------
# lexer

@dataclass(frozen=True)
class _Token:
    kind: str  # "(" ")" ":" "word" "string"
    text: str
    pos: int


def _lex(text: str) -> list[_Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch in "():":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        if ch == '"':
            start = i
            i += 1
            out = []
            while i < n:
                ch = text[i]
                if ch == "\\":
                    if i + 1 >= n or text[i + 1] not in '"\\':
                        raise QuerySyntaxError("bad escape in quoted value",
                                               position=i)
                    out.append(text[i + 1])
                    i += 2
                    continue
                if ch == '"':
                    break
                out.append(ch)
                i += 1
            else:
                raise QuerySyntaxError("unterminated quoted value",
                                       position=start)
            tokens.append(_Token("string", "".join(out), start))
            i += 1
            continue
        start = i
        while i < n and text[i] not in _WORD_STOP and text[i] != "\\":
            i += 1
        if i == start:
            raise QuerySyntaxError(f"unexpected character {ch!r}",
                                   position=i)
        tokens.append(_Token("word", text[start:i], start))
    return tokens


# ---------------------------------------------------------------------------
# parser

class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> _Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise QuerySyntaxError("unexpected end of query",
                                   position=self._end())
        self.i += 1
        return tok

    def _end(self) -> int:
        return self.tokens[-1].pos + len(self.tokens[-1].text) \
            if self.tokens else 0

    def expr(self, depth: int):
        parts = [self.term(depth)]
        while True:
            tok = self.peek()
            if tok is not None and tok.kind == "word" and tok.text == "OR":
                self.take()
                parts.append(self.term(depth))
            else:
                break
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def term(self, depth: int):
        parts = [self.factor(depth)]
        while True:
            tok = self.peek()
            if tok is not None and tok.kind == "word" and tok.text == "AND":
                self.take()
                parts.append(self.factor(depth))
            else:
                break
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def factor(self, depth: int):
        tok = self.peek()
        if tok is None:
            raise QuerySyntaxError("unexpected end of query",
                                   position=self._end())
        if tok.kind == "(":
            if depth + 1 > MAX_DEPTH:
                raise DepthExceeded(f"query nests deeper than {MAX_DEPTH}")
            self.take()
            inner = self.expr(depth + 1)
            closing = self.take()
            if closing.kind != ")":
                raise QuerySyntaxError("expected ')'", position=closing.pos)
            return inner
        return self.clause()

    def clause(self) -> Clause:
        tok = self.take()
        if tok.kind != "word" or tok.text in KEYWORDS:
            raise QuerySyntaxError("expected a field name", position=tok.pos)
        field = tok.text
        colon = self.take()
        if colon.kind != ":":
            raise QuerySyntaxError("expected ':' after field name",
                                   position=colon.pos)
        value = self.take()
        if value.kind == "string":
            return Clause(field, value.text)
        if value.kind == "word" and value.text not in KEYWORDS:
            return Clause(field, value.text)
        raise QuerySyntaxError("expected a value", position=value.pos)


def parse(text: str) -> Ast:
    if len(text) > MAX_QUERY_LENGTH:
        raise QuerySyntaxError(
            f"query longer than {MAX_QUERY_LENGTH} characters")
    tokens = _lex(text)
    if not tokens:
        raise QuerySyntaxError("empty query")
    parser = _Parser(tokens)
    ast = parser.expr(0)
    trailing = parser.peek()
    if trailing is not None:
        raise QuerySyntaxError("unexpected trailing input",
                               position=trailing.pos)
    return ast


# ---------------------------------------------------------------------------
# canonical serializer

def serialize(ast: Ast, catalog: FieldCatalog) -> str:
    if isinstance(ast, Clause):
        canonical, _ = catalog.resolve(ast.field)
        quoted = ast.value.replace("\\", "\\\\").replace('"', '\\"')
        return f'{canonical}: "{quoted}"'
    if isinstance(ast, And):
        rendered = []
        for part in ast.parts:
            if isinstance(part, Or):
                rendered.append("(" + serialize(part, catalog) + ")")
            else:
                rendered.append(serialize(part, catalog))
        return " AND ".join(rendered)
    if isinstance(ast, Or):
        return " OR ".join(serialize(part, catalog) for part in ast.parts)
    raise TypeError(f"not a query node: {ast!r}")


def build_from_fields(pairs: Mapping[str, str], catalog: FieldCatalog) -> Ast:
    """AND together one clause per (field, value) input, in input order.

    This is what the search forms do with their discrete inputs; empty
    values are skipped.
    """
    clauses = [Clause(catalog.resolve(name)[0], value)
               for name, value in pairs.items() if value != ""]
    if not clauses:
        raise QuerySyntaxError("no search fields given")
    return clauses[0] if len(clauses) == 1 else And(tuple(clauses))


# ---------------------------------------------------------------------------
# clause semantics

def _clause_matcher(clause: Clause, catalog: FieldCatalog):
    canonical, kind = catalog.resolve(clause.field)
    value = clause.value
    if kind == "int":
        if "*" in value:
            raise BadValueForType(
                f"{canonical} is numeric; wildcards do not apply",
                field=canonical)
        if not value.isdigit():
            raise BadValueForType(f"{canonical} takes a number",
                                  field=canonical)
        want_int = int(value)

        def match(row):
            return row.get(canonical) == want_int
        return match
    if kind == "bool":
        if value.lower() not in ("true", "false"):
            raise BadValueForType(f"{canonical} takes true or false",
                                  field=canonical)
        want_bool = value.lower() == "true"

        def match(row):
            return row.get(canonical) is want_bool
        return match
    if "*" in value:
        pattern = re.compile(
            "^" + ".*".join(re.escape(p) for p in value.split("*")) + "$",
            re.IGNORECASE | re.DOTALL)

        def match(row):
            got = row.get(canonical)
            return isinstance(got, str) and pattern.match(got) is not None
        return match
    folded = value.casefold()

    def match(row):
        got = row.get(canonical)
        return isinstance(got, str) and got.casefold() == folded
    return match


def matches(ast: Ast, row: Mapping, catalog: FieldCatalog) -> bool:
    """Reference interpreter: walk the tree for every row."""
    if isinstance(ast, Clause):
        return _clause_matcher(ast, catalog)(row)
    if isinstance(ast, And):
        return all(matches(part, row, catalog) for part in ast.parts)
    if isinstance(ast, Or):
        return any(matches(part, row, catalog) for part in ast.parts)
    raise TypeError(f"not a query node: {ast!r}")


# ---------------------------------------------------------------------------
# DNF compiler

class CompiledQuery:
    def __init__(self, branches):
        self.branches = branches

    def matches(self, row: Mapping) -> bool:
        return any(all(pred(row) for pred in branch)
                   for branch in self.branches)


def _dnf(ast: Ast) -> list[tuple[Clause, ...]]:
    if isinstance(ast, Clause):
        return [(ast,)]
    if isinstance(ast, Or):
        out = []
        for part in ast.parts:
            out.extend(_dnf(part))
            if len(out) > MAX_BRANCHES:
                raise QuerySyntaxError("query expands too far")
        return out
    if isinstance(ast, And):
        combos: list[tuple[Clause, ...]] = [()]
        for part in ast.parts:
            expansions = _dnf(part)
            combos = [prefix + branch
                      for prefix in combos for branch in expansions]
            if len(combos) > MAX_BRANCHES:
                raise QuerySyntaxError("query expands too far")
        return combos
    raise TypeError(f"not a query node: {ast!r}")


def compile_query(ast: Ast, catalog: FieldCatalog) -> CompiledQuery:
    """Flatten to OR-of-ANDs and precompile each clause."""
    branches = []
    for branch in _dnf(ast):
        branches.append([_clause_matcher(c, catalog) for c in branch])
    return CompiledQuery(branches)


def validate(ast: Ast, catalog: FieldCatalog) -> None:
    """Raise if any clause names an unknown field or mistypes a value."""
    if isinstance(ast, Clause):
        _clause_matcher(ast, catalog)
    elif isinstance(ast, (And, Or)):
        for part in ast.parts:
            validate(part, catalog)
    else:
        raise TypeError(f"not a query node: {ast!r}")
