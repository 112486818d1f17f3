"""Recursive-descent parser and canonical printer for ``.aip`` protocol files.

Grammar::

    protocol    := "protocol" IDENT "{" expr "}"
    expr        := shuffle
    shuffle     := or ("|" or)*
    or          := and ("\\/" and)*
    and         := cat ("/\\" cat)*
    cat         := atom ("." atom)*
    atom        := "eps" | interaction | msgevent | "(" expr ")"
    interaction := IDENT "->" IDENT ":" IDENT
    msgevent    := IDENT IDENT "!" | IDENT IDENT "?"

All binary operators are left-associative. ``·``, ``∧`` and ``∨`` are
accepted as synonyms of ``.``, ``/\\`` and ``\\/``; ``#`` starts a comment.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import EnactError
from .terms import (
    EPS, And, Binary, Cat, Eps, Interaction, Kind, Leaf, MessageEvent, Or,
    Shuffle, Term, ValidationReport, validate,
)


class ProtocolSyntaxError(EnactError, SyntaxError):
    def __init__(self, message: str, line: int, column: int, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        text = f"{line}:{column}: {message}"
        if self.expected:
            text += f" (expected {', '.join(self.expected)})"
        super().__init__(text)


class ValidationError(EnactError):
    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__(f"invalid protocol: {report}")


@dataclass(frozen=True)
class Span:
    line: int
    column: int
    end_line: int
    end_column: int


@dataclass
class ProtocolFile:
    name: str
    body: Term
    # keyed by child-index path from the root, since equal subterms share a hash
    spans: dict = field(default_factory=dict, compare=False, repr=False)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int
    end_line: int
    end_column: int


_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<arrow>->)
  | (?P<and>/\\|∧)
  | (?P<or>\\/|∨)
  | (?P<dot>\.|·)
  | (?P<bar>\|)
  | (?P<colon>:)
  | (?P<bang>!)
  | (?P<query>\?)
  | (?P<lparen>\()
  | (?P<rparen>\))
  | (?P<lbrace>\{)
  | (?P<rbrace>\})
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)

_SHOW = {
    "arrow": "'->'", "and": "'/\\'", "or": "'\\/'", "dot": "'.'", "bar": "'|'",
    "colon": "':'", "bang": "'!'", "query": "'?'", "lparen": "'('", "rparen": "')'",
    "lbrace": "'{'", "rbrace": "'}'", "ident": "identifier", "eof": "end of input",
}
_KEYWORDS = {"protocol", "eps"}


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ProtocolSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        chunk = m.group()
        start = (line, col)
        for ch in chunk:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        kind = m.lastgroup
        if kind != "ws":
            if kind == "ident" and chunk in _KEYWORDS:
                kind = chunk
            tokens.append(Token(kind, chunk, start[0], start[1], line, col))
        pos = m.end()
    tokens.append(Token("eof", "", line, col, line, col))
    return tokens


class _Parser:
    _LEVELS = (("bar", Shuffle), ("or", Or), ("and", And), ("dot", Cat))

    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def fail(self, expected):
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise ProtocolSyntaxError(
            f"unexpected {found}", t.line, t.column, [_SHOW.get(e, repr(e)) for e in expected]
        )

    def expect(self, *kinds) -> Token:
        if self.tok.kind not in kinds:
            self.fail(kinds)
        t = self.tok
        self.pos += 1
        return t

    def protocol(self) -> tuple[str, Term, dict]:
        self.expect("protocol")
        name = self.expect("ident").text
        self.expect("lbrace")
        body, spans = self.expr(0)
        self.expect("rbrace")
        self.expect("eof")
        return name, body, spans

    # Each parse function returns (term, spans-relative-to-term).
    def expr(self, level: int):
        if level == len(self._LEVELS):
            return self.atom()
        kind, node = self._LEVELS[level]
        start = self.tok
        left, spans = self.expr(level + 1)
        while self.tok.kind == kind:
            self.pos += 1
            right, rspans = self.expr(level + 1)
            end = self.tokens[self.pos - 1]
            merged = {(0,) + p: s for p, s in spans.items()}
            merged.update({(1,) + p: s for p, s in rspans.items()})
            left = node(left, right)
            merged[()] = Span(start.line, start.column, end.end_line, end.end_column)
            spans = merged
        return left, spans

    def atom(self):
        t = self.tok
        if t.kind == "eps":
            self.pos += 1
            return EPS, {(): Span(t.line, t.column, t.end_line, t.end_column)}
        if t.kind == "lparen":
            self.pos += 1
            inner, spans = self.expr(0)
            self.expect("rparen")
            return inner, spans
        if t.kind == "ident":
            self.pos += 1
            nxt = self.tok
            if nxt.kind == "arrow":
                self.pos += 1
                receiver = self.expect("ident").text
                self.expect("colon")
                message = self.expect("ident").text
                event = Interaction(t.text, receiver, message)
            elif nxt.kind == "ident":
                self.pos += 1
                mark = self.expect("bang", "query")
                kind = Kind.SEND if mark.kind == "bang" else Kind.RECEIVE
                event = MessageEvent(kind, t.text, nxt.text)
            else:
                self.fail(("arrow", "ident"))
            end = self.tokens[self.pos - 1]
            return Leaf(event), {(): Span(t.line, t.column, end.end_line, end.end_column)}
        self.fail(("eps", "ident", "lparen"))


def parse_expr(text: str) -> Term:
    """Parse a bare expression (no ``protocol`` wrapper); no validation."""
    p = _Parser(text)
    term, _ = p.expr(0)
    p.expect("eof")
    return term


def parse(text: str) -> ProtocolFile:
    try:
        name, body, spans = _Parser(text).protocol()
        report = validate(body)
    except RecursionError:
        raise ProtocolSyntaxError("expression nested too deeply", 1, 1) from None
    if not report.ok:
        raise ValidationError(report)
    return ProtocolFile(name, body, spans)


def load(path) -> ProtocolFile:
    return parse(Path(path).read_text(encoding="utf-8"))


def pretty(tau: Term, outer: bool = True) -> str:
    """Canonical text: single spaces around operators, every binary node parenthesised.

    With ``outer=False`` the root's own parentheses are dropped.
    """
    if isinstance(tau, Eps):
        return "eps"
    if isinstance(tau, Leaf):
        e = tau.event
        if isinstance(e, Interaction):
            return f"{e.sender} -> {e.receiver} : {e.message}"
        return f"{e.agent} {e.message}{e.kind.value}"
    if isinstance(tau, Binary):
        text = f"{pretty(tau.left)} {tau.symbol} {pretty(tau.right)}"
        return f"({text})" if outer else text
    raise TypeError(f"not a term: {tau!r}")


def format_protocol(pf: ProtocolFile) -> str:
    return f"protocol {pf.name} {{ {pretty(pf.body, outer=False)} }}\n"
