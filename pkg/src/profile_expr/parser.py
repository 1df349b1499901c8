"""
Recursive-descent parser for profile expressions f(u).

Grammar (whitespace insignificant, no implicit multiplication):

    expr     := term (("+" | "-") term)*
    term     := unary (("*" | "/") unary)*
    unary    := "-" unary | power
    power    := atom ("^" exponent)?
    exponent := "-" exponent | power          # right-associative
    atom     := NUMBER | "u" | "pi" | "e" | NAME "(" expr ")" | "(" expr ")"

so ^ binds tighter than unary minus, which binds tighter than * and /.
"""

import math
import re
from dataclasses import dataclass
from typing import List

from src.errors import ProfileSyntaxError, UnknownFunction
from src.profile_expr.nodes import UNARY_FUNCTIONS, Binary, Const, ExprAst, Unary, Var

NAMED_CONSTANTS = {"pi": math.pi, "e": math.e}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^])
  | (?P<lparen>\()
  | (?P<rparen>\))
    """,
    re.VERBOSE,
)

_ATOM_START = frozenset({"number", "'u'", "'('", "function", "'pi'", "'e'"})


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int  # byte offset into the UTF-8 source


def tokenize(src: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    byte_pos = 0
    while pos < len(src):
        match = _TOKEN_RE.match(src, pos)
        if match is None:
            raise ProfileSyntaxError(f"Unexpected character {src[pos]!r}", byte_pos, _ATOM_START)
        kind = match.lastgroup
        text = match.group()
        if kind != "ws":
            tokens.append(Token(kind, text, byte_pos))
        pos = match.end()
        byte_pos += len(text.encode("utf-8"))
    tokens.append(Token("end", "", byte_pos))
    return tokens


class _Parser:
    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def _fail(self, expected) -> None:
        token = self.current
        found = "end of input" if token.kind == "end" else repr(token.text)
        raise ProfileSyntaxError(f"Unexpected {found}", token.offset, expected)

    def _is_op(self, *ops: str) -> bool:
        return self.current.kind == "op" and self.current.text in ops

    def parse(self) -> ExprAst:
        node = self.expr()
        if self.current.kind != "end":
            self._fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"})
        return node

    def expr(self) -> ExprAst:
        node = self.term()
        while self._is_op("+", "-"):
            op = self._advance().text
            node = Binary(op, node, self.term())
        return node

    def term(self) -> ExprAst:
        node = self.unary()
        while self._is_op("*", "/"):
            op = self._advance().text
            node = Binary(op, node, self.unary())
        return node

    def unary(self) -> ExprAst:
        if self._is_op("-"):
            self._advance()
            return Unary("neg", self.unary())
        return self.power()

    def power(self) -> ExprAst:
        base = self.atom()
        if self._is_op("^"):
            self._advance()
            return Binary("^", base, self.exponent())
        return base

    def exponent(self) -> ExprAst:
        if self._is_op("-"):
            self._advance()
            return Unary("neg", self.exponent())
        return self.power()

    def atom(self) -> ExprAst:
        token = self.current
        if token.kind == "number":
            self._advance()
            return Const(float(token.text))
        if token.kind == "lparen":
            self._advance()
            node = self.expr()
            if self.current.kind != "rparen":
                self._fail({"')'", "'+'", "'-'", "'*'", "'/'", "'^'"})
            self._advance()
            return node
        if token.kind == "name":
            self._advance()
            if self.current.kind == "lparen":
                if token.text not in UNARY_FUNCTIONS:
                    raise UnknownFunction(token.text, token.offset)
                self._advance()
                arg = self.expr()
                if self.current.kind != "rparen":
                    self._fail({"')'", "'+'", "'-'", "'*'", "'/'", "'^'"})
                self._advance()
                return Unary(token.text, arg)
            if token.text == "u":
                return Var()
            if token.text in NAMED_CONSTANTS:
                return Const(NAMED_CONSTANTS[token.text])
            if token.text in UNARY_FUNCTIONS:
                self._fail({"'('"})
            raise ProfileSyntaxError(f"Unknown identifier {token.text!r}", token.offset, _ATOM_START)
        self._fail(_ATOM_START)


def parse(src: str) -> ExprAst:
    if src is None or not src.strip():
        raise ProfileSyntaxError("Empty expression", 0, _ATOM_START)
    return _Parser(tokenize(src)).parse()
