"""
Ideal expressions for the command line.

    expr    := term ('+' term)*
    term    := power (('*' | 'star' | 'cap' | 'colon') power)*
    power   := atom ('^' INT)*
    atom    := '(' expr (',' expr)* ')' | 'closure' '(' expr (',' expr)* ')'
             | VAR | 'm' | NAME | '1'

A parenthesised list is the ideal generated by its items, so "(x^2, x*y)"
and "(y,z)^3 + (x^5)" both mean what they look like.  A monomial such as
x^2*y is the product of principal ideals, which is the principal ideal of
the product monomial; x^0 is the unit ideal and so drops out of products.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import MonomialIdealError, ParseError
from .monomial import (MonomialIdeal, colon, default_vars, ideal_sum, intersect,
                       maximal_ideal, power, product)
from .newton import integral_closure, star_product

MAX_EXPONENT = 10 ** 6
# powers of ideals with several generators grow combinatorially
MAX_IDEAL_POWER = 64

KEYWORDS = {"m", "star", "cap", "colon", "closure", "let"}
BINARY = {"*": product, "star": star_product, "cap": intersect, "colon": colon}

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[-()+*^,=]))")


@dataclass(frozen=True)
class Token:
    kind: str  # 'int', 'name', 'sym' or 'end'
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        if not mt:
            bad = len(text[pos:]) - len(text[pos:].lstrip()) + pos
            raise ParseError(f"unexpected character {text[bad]!r}", bad, text)
        kind = mt.lastgroup
        tokens.append(Token(kind, mt.group(kind), mt.start(kind)))
        pos = mt.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


@dataclass
class Workspace:
    """Variable names plus the ideals bound with 'let'."""
    names: Tuple[str, ...]
    bindings: Dict[str, MonomialIdeal] = field(default_factory=dict)

    def __post_init__(self):
        self.names = tuple(self.names)
        if not self.names:
            raise MonomialIdealError("need at least one variable", "workspace")
        if len(set(self.names)) != len(self.names):
            raise MonomialIdealError(f"repeated variable in {self.names}", "workspace")
        for v in self.names:
            if v in KEYWORDS or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
                raise MonomialIdealError(f"{v!r} cannot be used as a variable name", "workspace")

    @classmethod
    def of_dim(cls, d: int) -> "Workspace":
        return cls(default_vars(d))

    @property
    def dim(self) -> int:
        return len(self.names)

    def bind(self, name: str, ideal: MonomialIdeal):
        if name in KEYWORDS or name in self.names:
            raise MonomialIdealError(f"cannot bind reserved name {name!r}", "let")
        if ideal.dim != self.dim:
            raise MonomialIdealError(f"{name} would have dimension {ideal.dim}, not {self.dim}", "let")
        self.bindings[name] = ideal


class Parser:
    """Recursive descent over a token list; ``parse_expr`` stops at the first
    token that cannot continue the expression, so several expressions can
    be read from one command line."""

    def __init__(self, text: str, ws: Workspace):
        self.text = text
        self.ws = ws
        self.tokens = tokenize(text)
        self.i = 0

    # -- token helpers ------------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def at(self, *texts) -> bool:
        return self.tok.kind != "end" and self.tok.text in texts

    def at_end(self) -> bool:
        return self.tok.kind == "end"

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def error(self, message, tok=None):
        tok = tok or self.tok
        return ParseError(message, tok.pos, self.text)

    def expect(self, text):
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        return self.advance()

    def integer(self) -> int:
        if self.tok.kind != "int":
            raise self.error(f"expected an integer, found {self.tok.text or 'end of input'!r}")
        t = self.advance()
        n = int(t.text)
        if n > MAX_EXPONENT:
            raise self.error(f"exponent overflow: {n} exceeds {MAX_EXPONENT}", t)
        return n

    def word(self) -> str:
        if self.tok.kind != "name":
            raise self.error(f"expected a name, found {self.tok.text or 'end of input'!r}")
        return self.advance().text

    # -- grammar ------------------------------------------------------------

    def parse_expr(self) -> MonomialIdeal:
        value = self.parse_term()
        while self.at("+"):
            self.advance()
            value = ideal_sum(value, self.parse_term())
        return value

    def parse_term(self) -> MonomialIdeal:
        value = self.parse_power()
        while self.at(*BINARY):
            op = BINARY[self.advance().text]
            value = op(value, self.parse_power())
        return value

    def parse_power(self) -> MonomialIdeal:
        value = self.parse_atom()
        while self.at("^"):
            self.advance()
            at = self.tok
            k = self.integer()
            if len(value) > 1 and k > MAX_IDEAL_POWER:
                raise self.error(f"exponent overflow: power {k} of a non-principal ideal "
                                 f"exceeds {MAX_IDEAL_POWER}", at)
            value = power(value, k)
        return value

    def parse_atom(self) -> MonomialIdeal:
        t = self.tok
        d = self.ws.dim
        if self.at("("):
            self.advance()
            value = self.parse_expr()
            while self.at(","):
                self.advance()
                value = ideal_sum(value, self.parse_expr())
            self.expect(")")
            return value
        if t.kind == "int":
            if t.text != "1":
                raise self.error(f"unexpected integer {t.text}; only 1 is an ideal")
            self.advance()
            return MonomialIdeal.unit(d)
        if t.kind != "name":
            raise self.error(f"unexpected {t.text or 'end of input'!r}")
        self.advance()
        if t.text == "closure":
            # the argument is a parenthesized generator list
            if not self.at("("):
                self.expect("(")
            return integral_closure(self.parse_atom())
        if t.text == "m":
            return maximal_ideal(d)
        if t.text in self.ws.names:
            k = self.ws.names.index(t.text)
            return MonomialIdeal(d, (tuple(1 if i == k else 0 for i in range(d)),))
        if t.text in self.ws.bindings:
            return self.ws.bindings[t.text]
        raise self.error(f"unknown variable or name {t.text!r}", t)


def parse_ideal(text: str, names: Sequence[str] = None, ws: Optional[Workspace] = None) -> MonomialIdeal:
    """Parse a complete expression; trailing input is an error."""
    if ws is None:
        ws = Workspace(tuple(names) if names is not None else default_vars(3))
    p = Parser(text, ws)
    value = p.parse_expr()
    if not p.at_end():
        raise p.error(f"unexpected {p.tok.text!r} after expression")
    return value
