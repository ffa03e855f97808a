/* Search query language, mirrored from the service so the query box and
 * the discrete helper fields can stay in lock step without a round
 * trip.  `Field: "value"` clauses join with AND/OR, parentheses group,
 * AND binds tighter.  The serializer is canonical: values always
 * quoted, field names in catalog spelling, minimal parentheses.  A
 * string built here parses to the same tree on the server. */

export interface Clause {
  kind: "clause";
  field: string;
  value: string;
}

export interface AndNode {
  kind: "and";
  parts: Ast[];
}

export interface OrNode {
  kind: "or";
  parts: Ast[];
}

export type Ast = Clause | AndNode | OrNode;

export const clause = (field: string, value: string): Clause => ({
  kind: "clause",
  field,
  value,
});
export const and = (...parts: Ast[]): AndNode => ({ kind: "and", parts });
export const or = (...parts: Ast[]): OrNode => ({ kind: "or", parts });

export class QuerySyntaxError extends Error {
  constructor(message: string, readonly position?: number) {
    super(message);
    this.name = "QuerySyntaxError";
  }
}

export class UnknownFieldError extends Error {
  constructor(readonly field: string) {
    super(`unknown search field ${JSON.stringify(field)}`);
    this.name = "UnknownFieldError";
  }
}

export type FieldType = "text" | "int" | "timestamp" | "bool";

export class FieldCatalog {
  readonly fields: ReadonlyMap<string, FieldType>;
  private readonly ci = new Map<string, string>();

  constructor(fields: Record<string, FieldType>) {
    this.fields = new Map(Object.entries(fields));
    for (const name of this.fields.keys()) {
      this.ci.set(name.toLowerCase(), name);
    }
  }

  resolve(name: string): string {
    const canonical = this.ci.get(name.toLowerCase());
    if (canonical === undefined) throw new UnknownFieldError(name);
    return canonical;
  }
}

const MAX_QUERY_LENGTH = 4096;
const MAX_DEPTH = 32;
const KEYWORDS = new Set(["AND", "OR"]);
const WORD_STOP = new Set([" ", "\t", "\r", "\n", "(", ")", ":", '"']);

interface Token {
  kind: "(" | ")" | ":" | "word" | "string";
  text: string;
  pos: number;
}

function lex(text: string): Token[] {
  const tokens: Token[] = [];
  let i = 0;
  const n = text.length;
  while (i < n) {
    const ch = text[i]!;
    if (ch === " " || ch === "\t" || ch === "\r" || ch === "\n") {
      i += 1;
      continue;
    }
    if (ch === "(" || ch === ")" || ch === ":") {
      tokens.push({ kind: ch, text: ch, pos: i });
      i += 1;
      continue;
    }
    if (ch === '"') {
      const start = i;
      i += 1;
      let out = "";
      let closed = false;
      while (i < n) {
        const c = text[i]!;
        if (c === "\\") {
          const next = text[i + 1];
          if (next !== '"' && next !== "\\") {
            throw new QuerySyntaxError("bad escape in quoted value", i);
          }
          out += next;
          i += 2;
          continue;
        }
        if (c === '"') {
          closed = true;
          break;
        }
        out += c;
        i += 1;
      }
      if (!closed) {
        throw new QuerySyntaxError("unterminated quoted value", start);
      }
      tokens.push({ kind: "string", text: out, pos: start });
      i += 1;
      continue;
    }
    const start = i;
    while (i < n && !WORD_STOP.has(text[i]!) && text[i] !== "\\") i += 1;
    if (i === start) {
      throw new QuerySyntaxError(`unexpected character ${JSON.stringify(ch)}`, i);
    }
    tokens.push({ kind: "word", text: text.slice(start, i), pos: start });
  }
  return tokens;
}

class Parser {
  private i = 0;

  constructor(private readonly tokens: Token[]) {}

  private peek(): Token | undefined {
    return this.tokens[this.i];
  }

  private take(): Token {
    const tok = this.peek();
    if (tok === undefined) {
      throw new QuerySyntaxError("unexpected end of query", this.end());
    }
    this.i += 1;
    return tok;
  }

  private end(): number {
    const last = this.tokens[this.tokens.length - 1];
    return last ? last.pos + last.text.length : 0;
  }

  expr(depth: number): Ast {
    const parts: Ast[] = [this.term(depth)];
    for (;;) {
      const tok = this.peek();
      if (tok !== undefined && tok.kind === "word" && tok.text === "OR") {
        this.take();
        parts.push(this.term(depth));
      } else break;
    }
    return parts.length === 1 ? parts[0]! : { kind: "or", parts };
  }

  private term(depth: number): Ast {
    const parts: Ast[] = [this.factor(depth)];
    for (;;) {
      const tok = this.peek();
      if (tok !== undefined && tok.kind === "word" && tok.text === "AND") {
        this.take();
        parts.push(this.factor(depth));
      } else break;
    }
    return parts.length === 1 ? parts[0]! : { kind: "and", parts };
  }

  private factor(depth: number): Ast {
    const tok = this.peek();
    if (tok === undefined) {
      throw new QuerySyntaxError("unexpected end of query", this.end());
    }
    if (tok.kind === "(") {
      if (depth + 1 > MAX_DEPTH) {
        throw new QuerySyntaxError(`query nests deeper than ${MAX_DEPTH}`);
      }
      this.take();
      const inner = this.expr(depth + 1);
      const closing = this.take();
      if (closing.kind !== ")") {
        throw new QuerySyntaxError("expected ')'", closing.pos);
      }
      return inner;
    }
    return this.clause();
  }

  private clause(): Clause {
    const tok = this.take();
    if (tok.kind !== "word" || KEYWORDS.has(tok.text)) {
      throw new QuerySyntaxError("expected a field name", tok.pos);
    }
    const colon = this.take();
    if (colon.kind !== ":") {
      throw new QuerySyntaxError("expected ':' after field name", colon.pos);
    }
    const value = this.take();
    if (value.kind === "string") return clause(tok.text, value.text);
    if (value.kind === "word" && !KEYWORDS.has(value.text)) {
      return clause(tok.text, value.text);
    }
    throw new QuerySyntaxError("expected a value", value.pos);
  }

  trailing(): Token | undefined {
    return this.peek();
  }
}

export function parse(text: string): Ast {
  if (text.length > MAX_QUERY_LENGTH) {
    throw new QuerySyntaxError(`query longer than ${MAX_QUERY_LENGTH} characters`);
  }
  const tokens = lex(text);
  if (tokens.length === 0) throw new QuerySyntaxError("empty query");
  const parser = new Parser(tokens);
  const ast = parser.expr(0);
  const trailing = parser.trailing();
  if (trailing !== undefined) {
    throw new QuerySyntaxError("unexpected trailing input", trailing.pos);
  }
  return ast;
}

export function serialize(ast: Ast, catalog: FieldCatalog): string {
  switch (ast.kind) {
    case "clause": {
      const canonical = catalog.resolve(ast.field);
      const quoted = ast.value.replace(/\\/g, "\\\\").replace(/"/g, '\\"');
      return `${canonical}: "${quoted}"`;
    }
    case "and":
      return ast.parts
        .map((part) =>
          part.kind === "or"
            ? `(${serialize(part, catalog)})`
            : serialize(part, catalog),
        )
        .join(" AND ");
    case "or":
      return ast.parts.map((part) => serialize(part, catalog)).join(" OR ");
  }
}

/** AND together one clause per (field, value) input, in input order;
 * empty values are skipped.  Mirrors what the server does with the
 * discrete search-form inputs. */
export function buildFromFields(
  pairs: ReadonlyArray<readonly [string, string]>,
  catalog: FieldCatalog,
): Ast {
  const clauses: Clause[] = [];
  for (const [name, value] of pairs) {
    if (value === "") continue;
    clauses.push(clause(catalog.resolve(name), value));
  }
  if (clauses.length === 0) throw new QuerySyntaxError("no search fields given");
  return clauses.length === 1 ? clauses[0]! : { kind: "and", parts: clauses };
}

export function equal(a: Ast, b: Ast): boolean {
  if (a.kind !== b.kind) return false;
  if (a.kind === "clause" && b.kind === "clause") {
    return a.field === b.field && a.value === b.value;
  }
  const ap = (a as AndNode | OrNode).parts;
  const bp = (b as AndNode | OrNode).parts;
  return ap.length === bp.length && ap.every((part, i) => equal(part, bp[i]!));
}
