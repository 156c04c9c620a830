"""The element-expression grammar used by spec files and the CLI.

    element  := ['-'] term (('+'|'-') term)*
    term     := [rational '*'] monomial
    monomial := ('s' INT)* NAME | '[' element ',' element ']'

Whitespace-insensitive.  Names are identifiers not starting with a
degeneracy prefix ``s<digit>``; degeneracy letters are written outermost
first (``s1s0 x`` is s_1 s_0 x) and are re-canonicalized on parse.  The
literal ``0`` denotes the zero element.  Brackets of inhomogeneous arguments
are rejected so that every bracket has a well-defined additive degree.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

from .errors import ExpressionParseError, MalformedElementError
from .lie import (
    GeneratorSymbol,
    LieElement,
    LieMonomial,
    apply_degeneracy_index,
    bracket_trees,
    generator_element,
)

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<punct>[\[\],*+-]))"
)
_SDEG = re.compile(r"s(\d+)")


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens: list[tuple[str, str, int]] = []
        self._scan()
        self.index = 0

    def _scan(self):
        pos = 0
        text = self.text
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                if text[pos:].strip() == "":
                    break
                raise ExpressionParseError(
                    f"unexpected character {text[pos]!r}", position=pos
                )
            if m.group("number"):
                self.tokens.append(("number", m.group("number"), m.start()))
            elif m.group("name"):
                self._split_name(m.group("name"), m.start("name"))
            else:
                self.tokens.append(("punct", m.group("punct"), m.start()))
            pos = m.end()

    def _split_name(self, token: str, start: int):
        # peel degeneracy prefixes s<digits> off identifier-like tokens
        pos = 0
        while True:
            m = _SDEG.match(token, pos)
            if m is None:
                break
            self.tokens.append(("sdeg", m.group(1), start + pos))
            pos = m.end()
            if pos == len(token):
                return
        self.tokens.append(("name", token[pos:], start + pos))

    def peek(self) -> tuple[str, str, int] | None:
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None

    def next(self) -> tuple[str, str, int] | None:
        tok = self.peek()
        if tok is not None:
            self.index += 1
        return tok

    def expect(self, kind: str, value: str | None = None) -> tuple[str, str, int]:
        tok = self.next()
        if tok is None or tok[0] != kind or (value is not None and tok[1] != value):
            pos = tok[2] if tok else len(self.text)
            want = value or kind
            raise ExpressionParseError(f"expected {want!r}", position=pos)
        return tok


def parse_element(text: str, symbols: Mapping[str, GeneratorSymbol]) -> LieElement:
    """Parse an element expression against a name -> generator table."""
    lexer = _Lexer(text)
    result = _parse_sum(lexer, symbols)
    trailing = lexer.peek()
    if trailing is not None:
        raise ExpressionParseError("trailing input", position=trailing[2])
    return result


def _parse_sum(lexer: _Lexer, symbols) -> LieElement:
    sign = 1
    tok = lexer.peek()
    if tok and tok[0] == "punct" and tok[1] in "+-":
        lexer.next()
        sign = -1 if tok[1] == "-" else 1
    total = _parse_term(lexer, symbols).scale(sign)
    while True:
        tok = lexer.peek()
        if tok is None or tok[0] != "punct" or tok[1] not in "+-":
            return total
        lexer.next()
        sign = -1 if tok[1] == "-" else 1
        total = total + _parse_term(lexer, symbols).scale(sign)


def _parse_term(lexer: _Lexer, symbols) -> LieElement:
    tok = lexer.peek()
    coeff = Fraction(1)
    if tok and tok[0] == "number":
        lexer.next()
        coeff = Fraction(tok[1])
        nxt = lexer.peek()
        if nxt and nxt[0] == "punct" and nxt[1] == "*":
            lexer.next()
        else:
            if coeff == 0:
                return LieElement.zero()
            raise ExpressionParseError(
                "a nonzero coefficient must be followed by '*'",
                position=nxt[2] if nxt else len(lexer.text),
            )
    return _parse_monomial(lexer, symbols).scale(coeff)


def _parse_monomial(lexer: _Lexer, symbols) -> LieElement:
    tok = lexer.peek()
    if tok is None:
        raise ExpressionParseError("unexpected end of input", position=len(lexer.text))
    if tok[0] == "punct" and tok[1] == "[":
        lexer.next()
        left = _parse_sum(lexer, symbols)
        lexer.expect("punct", ",")
        right = _parse_sum(lexer, symbols)
        lexer.expect("punct", "]")
        for side in (left, right):
            if not side.is_syntactically_zero and side.homogeneous_degree() is None:
                raise MalformedElementError(
                    "bracket arguments must be homogeneous (additive degree)"
                )
        return bracket_trees(left, right)
    word: list[int] = []
    while tok and tok[0] == "sdeg":
        lexer.next()
        word.append(int(tok[1]))
        tok = lexer.peek()
    if tok is None or tok[0] != "name":
        raise ExpressionParseError(
            "expected a generator name", position=tok[2] if tok else len(lexer.text)
        )
    lexer.next()
    if tok[1] not in symbols:
        raise ExpressionParseError(f"unknown generator {tok[1]!r}", position=tok[2])
    element = generator_element(symbols[tok[1]])
    # written outermost-first: apply innermost (rightmost) first
    for j in reversed(word):
        element = apply_degeneracy_index(j, element)
    return element


# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------


def format_word(word: tuple[int, ...]) -> str:
    return "".join(f"s{i}" for i in reversed(word))


def format_monomial(mono: LieMonomial) -> str:
    if mono.is_leaf:
        prefix = format_word(mono.word)
        return f"{prefix} {mono.gen.name}" if prefix else mono.gen.name
    return f"[{format_monomial(mono.left)}, {format_monomial(mono.right)}]"


def _coeff_prefix(coeff: Fraction) -> str:
    mag = abs(coeff)
    return "" if mag == 1 else f"{mag}*"


def format_element(e: LieElement) -> str:
    terms = e.terms()
    if not terms:
        return "0"
    parts = []
    for i, (mono, coeff) in enumerate(terms):
        sign = "-" if coeff < 0 else "+"
        body = _coeff_prefix(coeff) + format_monomial(mono)
        if i == 0:
            parts.append(body if coeff > 0 else "-" + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def _latex_name(name: str) -> str:
    m = re.fullmatch(r"i_?([A-Za-z0-9]+)", name)
    if m:
        return rf"\iota_{{{m.group(1)}}}"
    return rf"\mathtt{{{name}}}"


def latex_monomial(mono: LieMonomial) -> str:
    if mono.is_leaf:
        word = "".join(f"s_{{{i}}}" for i in reversed(mono.word))
        return word + _latex_name(mono.gen.name)
    return f"[{latex_monomial(mono.left)}, {latex_monomial(mono.right)}]"


def latex_element(e: LieElement, align: bool = False) -> str:
    """A LaTeX fragment; with ``align`` each signed term starts a row."""
    terms = e.terms()
    if not terms:
        return "0"
    rendered = []
    for i, (mono, coeff) in enumerate(terms):
        mag = abs(coeff)
        coeff_tex = "" if mag == 1 else (
            rf"\tfrac{{{mag.numerator}}}{{{mag.denominator}}}" if mag.denominator != 1 else f"{mag}"
        )
        body = coeff_tex + latex_monomial(mono)
        if i == 0:
            rendered.append(body if coeff > 0 else "-" + body)
        else:
            rendered.append(("+" if coeff > 0 else "-") + body)
    if align:
        return "&" + (r" \\" + "\n&").join(rendered)
    return " ".join(rendered)
