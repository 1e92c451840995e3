"""Text format for preference profiles.

A profile document looks like this::

    vars adult:0..5, child:0..5, dog:0..5
    combiner sum
    models hierarchical

    stakeholder p1 {
      (1,4,0) > (2,3,3)
    }

    stakeholder p2 {
      (2,3,3) > (1,4,0)
    }

The three header lines are newline-terminated and must appear in that
order.  Everywhere else whitespace is insignificant.  ``#`` starts a
comment that runs to the end of the line.

Combiner words: ``sum``, ``product``, ``min``, ``max``, ``and``, ``or``,
plus ``tie`` for the table combiner in which every pairwise combination
lands on a fresh value above the declared domains (so multi-variable
levels always tie).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .domain import (
    Alternative,
    Combiner,
    Profile,
    Stakeholder,
    Statement,
    VariableSpace,
)
from .errors import ParseError

__all__ = [
    "Document",
    "StakeholderBlock",
    "StatementNode",
    "VarDecl",
    "from_profile",
    "parse",
    "parse_profile",
    "parse_statement",
    "render",
    "render_profile",
]

COMBINER_WORDS = ("sum", "product", "min", "max", "and", "or", "tie")
MODEL_WORDS = ("hierarchical", "lexicographic")

_MODEL_TO_KIND = {"hierarchical": "hier", "lexicographic": "lex"}
_KIND_TO_MODEL = {v: k for k, v in _MODEL_TO_KIND.items()}


# ---------------------------------------------------------------------------
# document model


@dataclass(frozen=True)
class VarDecl:
    name: str
    lo: int
    hi: int
    span: tuple[int, int] = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class StatementNode:
    left: tuple[int, ...]
    right: tuple[int, ...]
    strict: bool
    span: tuple[int, int] = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class StakeholderBlock:
    name: str
    statements: tuple[StatementNode, ...]
    span: tuple[int, int] = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Document:
    variables: tuple[VarDecl, ...]
    combiner: str
    model_class: str
    stakeholders: tuple[StakeholderBlock, ...]


# ---------------------------------------------------------------------------
# tokenizer

_TOKEN_RE = re.compile(
    r"""
      (?P<ws>[ \t\r]+)
    | (?P<comment>\#[^\n]*)
    | (?P<nl>\n)
    | (?P<dots>\.\.)
    | (?P<ge>>=)
    | (?P<int>-?\d+)
    | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
    | (?P<sym>[(),:;{}>])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str  # "nl", "dots", "ge", "int", "name", "sym", "eof"
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line = 1
    line_start = 0
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(
                "syntax", line, pos - line_start + 1,
                "unexpected character %r" % text[pos],
            )
        kind = m.lastgroup
        tok_text = m.group()
        col = pos - line_start + 1
        pos = m.end()
        if kind == "ws" or kind == "comment":
            continue
        if kind == "nl":
            tokens.append(_Token("nl", "\n", line, col))
            line += 1
            line_start = pos
            continue
        tokens.append(_Token(kind, tok_text, line, col))
    tokens.append(_Token("eof", "", line, pos - line_start + 1))
    return tokens


# ---------------------------------------------------------------------------
# parser


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def error(self, code: str, tok: _Token, message: str) -> ParseError:
        return ParseError(code, tok.line, tok.col, message)

    def expect(self, kind: str, text: str | None = None, what: str | None = None) -> _Token:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            wanted = what or (text if text is not None else kind)
            got = "end of input" if tok.kind == "eof" else repr(tok.text)
            raise self.error("syntax", tok, "expected %s, got %s" % (wanted, got))
        return self.advance()

    def expect_keyword(self, word: str) -> _Token:
        return self.expect("name", word, "keyword %r" % word)

    def skip_newlines(self) -> None:
        while self.peek().kind == "nl":
            self.advance()

    def expect_line_end(self) -> None:
        tok = self.peek()
        if tok.kind == "eof":
            return
        if tok.kind != "nl":
            raise self.error("syntax", tok, "expected end of line, got %r" % tok.text)
        self.advance()

    def parse_int(self) -> int:
        tok = self.expect("int", what="an integer")
        return int(tok.text)

    # header ---------------------------------------------------------------

    def parse_vardecl(self) -> VarDecl:
        name_tok = self.expect("name", what="a variable name")
        self.expect("sym", ":")
        lo = self.parse_int()
        self.expect("dots", what="'..'")
        hi = self.parse_int()
        if lo > hi:
            raise self.error(
                "bad-range", name_tok,
                "empty range %d..%d for variable %r" % (lo, hi, name_tok.text),
            )
        return VarDecl(name_tok.text, lo, hi, span=(name_tok.line, name_tok.col))

    def parse_header(self) -> tuple[tuple[VarDecl, ...], str, str]:
        self.skip_newlines()
        self.expect_keyword("vars")
        decls = [self.parse_vardecl()]
        while self.peek().kind == "sym" and self.peek().text == ",":
            self.advance()
            decls.append(self.parse_vardecl())
        seen: set[str] = set()
        for decl in decls:
            if decl.name in seen:
                raise ParseError(
                    "dup-variable", decl.span[0], decl.span[1],
                    "variable %r declared twice" % decl.name,
                )
            seen.add(decl.name)
        self.expect_line_end()

        self.skip_newlines()
        self.expect_keyword("combiner")
        comb_tok = self.expect("name", what="a combiner word")
        if comb_tok.text not in COMBINER_WORDS:
            raise self.error(
                "bad-combiner", comb_tok,
                "unknown combiner %r (expected one of %s)"
                % (comb_tok.text, ", ".join(COMBINER_WORDS)),
            )
        self.expect_line_end()

        self.skip_newlines()
        self.expect_keyword("models")
        model_tok = self.expect("name", what="a model class word")
        if model_tok.text not in MODEL_WORDS:
            raise self.error(
                "bad-models", model_tok,
                "unknown model class %r (expected one of %s)"
                % (model_tok.text, ", ".join(MODEL_WORDS)),
            )
        self.expect_line_end()

        return tuple(decls), comb_tok.text, model_tok.text

    # body -----------------------------------------------------------------

    def parse_tuple(self, decls: tuple[VarDecl, ...]) -> tuple[tuple[int, ...], _Token]:
        open_tok = self.expect("sym", "(")
        self.skip_newlines()
        values = [self.parse_int()]
        self.skip_newlines()
        while self.peek().kind == "sym" and self.peek().text == ",":
            self.advance()
            self.skip_newlines()
            values.append(self.parse_int())
            self.skip_newlines()
        self.expect("sym", ")")
        if len(values) != len(decls):
            raise self.error(
                "bad-tuple-arity", open_tok,
                "tuple has %d values but %d variables are declared"
                % (len(values), len(decls)),
            )
        for decl, value in zip(decls, values):
            if not decl.lo <= value <= decl.hi:
                raise self.error(
                    "value-out-of-range", open_tok,
                    "value %d is outside %d..%d for variable %r"
                    % (value, decl.lo, decl.hi, decl.name),
                )
        return tuple(values), open_tok

    def parse_statement(self, decls: tuple[VarDecl, ...]) -> StatementNode:
        left, open_tok = self.parse_tuple(decls)
        self.skip_newlines()
        tok = self.peek()
        if tok.kind == "ge":
            strict = False
        elif tok.kind == "sym" and tok.text == ">":
            strict = True
        else:
            got = "end of input" if tok.kind == "eof" else repr(tok.text)
            raise self.error("syntax", tok, "expected '>' or '>=', got %s" % got)
        self.advance()
        self.skip_newlines()
        right, _ = self.parse_tuple(decls)
        return StatementNode(left, right, strict, span=(open_tok.line, open_tok.col))

    def parse_stakeholder(self, decls: tuple[VarDecl, ...]) -> StakeholderBlock:
        kw = self.expect_keyword("stakeholder")
        name_tok = self.expect("name", what="a stakeholder name")
        self.skip_newlines()
        self.expect("sym", "{")
        self.skip_newlines()
        statements = [self.parse_statement(decls)]
        self.skip_newlines()
        while self.peek().kind == "sym" and self.peek().text == ";":
            self.advance()
            self.skip_newlines()
            statements.append(self.parse_statement(decls))
            self.skip_newlines()
        self.expect("sym", "}")
        return StakeholderBlock(
            name_tok.text, tuple(statements), span=(kw.line, kw.col)
        )

    def parse_document(self) -> Document:
        decls, combiner, model_class = self.parse_header()
        self.skip_newlines()
        blocks: list[StakeholderBlock] = []
        names: set[str] = set()
        while True:
            tok = self.peek()
            if tok.kind == "eof":
                break
            block = self.parse_stakeholder(decls)
            if block.name in names:
                raise ParseError(
                    "dup-stakeholder", block.span[0], block.span[1],
                    "stakeholder %r declared twice" % block.name,
                )
            names.add(block.name)
            blocks.append(block)
            self.skip_newlines()
        if not blocks:
            tok = self.peek()
            raise self.error("syntax", tok, "expected at least one stakeholder block")
        return Document(decls, combiner, model_class, tuple(blocks))


def parse(text: str) -> Document:
    """Parse a profile document, raising ParseError on any malformed input."""
    parser = _Parser(_tokenize(text))
    return parser.parse_document()


def parse_statement(text: str, variables: tuple[VarDecl, ...]) -> StatementNode:
    """Parse a standalone comparison such as ``(1,4,0) > (2,3,3)``.

    Arity and ranges are checked against *variables*, which normally come
    from an already parsed Document.
    """
    parser = _Parser(_tokenize(text))
    parser.skip_newlines()
    node = parser.parse_statement(variables)
    parser.skip_newlines()
    tok = parser.peek()
    if tok.kind != "eof":
        raise parser.error("syntax", tok, "unexpected trailing %r" % tok.text)
    return node


# ---------------------------------------------------------------------------
# document -> engine objects


def _build_combiner(word: str, variables: tuple[VarDecl, ...]) -> Combiner:
    if word == "tie":
        values: set[int] = set()
        for decl in variables:
            values.update(range(decl.lo, decl.hi + 1))
        return Combiner.tie_over(tuple(sorted(values)))
    return Combiner(word)


def to_profile(doc: Document) -> Profile:
    space = VariableSpace(
        tuple(d.name for d in doc.variables),
        tuple(tuple(range(d.lo, d.hi + 1)) for d in doc.variables),
    )
    combiner = _build_combiner(doc.combiner, doc.variables)
    stakeholders = tuple(
        Stakeholder(
            block.name,
            tuple(
                Statement(Alternative(s.left), Alternative(s.right), s.strict)
                for s in block.statements
            ),
        )
        for block in doc.stakeholders
    )
    return Profile(space, combiner, _MODEL_TO_KIND[doc.model_class], stakeholders)


def parse_profile(text: str) -> Profile:
    return to_profile(parse(text))


def from_profile(profile: Profile) -> Document:
    """Turn a Profile back into a renderable Document.

    Domains are rendered as contiguous ranges, so a domain with gaps is
    widened to min..max.  Table combiners are only renderable when they
    match the ``tie`` shape.
    """
    decls = tuple(
        VarDecl(name, min(domain), max(domain))
        for name, domain in zip(profile.space.variables, profile.space.domains)
    )
    c = profile.combiner
    if c.kind == "table":
        base = c.universe[:-1]
        if c != Combiner.tie_over(base):
            raise ValueError("table combiner has no text form")
        word = "tie"
    else:
        word = c.kind
    blocks = tuple(
        StakeholderBlock(
            st.name,
            tuple(
                StatementNode(s.left.values, s.right.values, s.strict)
                for s in st.statements
            ),
        )
        for st in profile.stakeholders
    )
    return Document(decls, word, _KIND_TO_MODEL[profile.model_class], blocks)


# ---------------------------------------------------------------------------
# rendering


def _render_tuple(values: tuple[int, ...]) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def render_statement_node(node: StatementNode) -> str:
    op = ">" if node.strict else ">="
    return "%s %s %s" % (_render_tuple(node.left), op, _render_tuple(node.right))


def render(doc: Document) -> str:
    lines = [
        "vars " + ", ".join("%s:%d..%d" % (d.name, d.lo, d.hi) for d in doc.variables),
        "combiner " + doc.combiner,
        "models " + doc.model_class,
    ]
    for block in doc.stakeholders:
        lines.append("")
        lines.append("stakeholder %s {" % block.name)
        for i, stmt in enumerate(block.statements):
            sep = ";" if i + 1 < len(block.statements) else ""
            lines.append("  " + render_statement_node(stmt) + sep)
        lines.append("}")
    return "\n".join(lines) + "\n"


def render_profile(profile: Profile) -> str:
    return render(from_profile(profile))
