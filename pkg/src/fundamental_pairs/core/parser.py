"""
Text format for polynomials.

Grammar (whitespace insignificant)::

    expr   := sign? term (('+' | '-') term)*
    term   := coeff ('*' factor)* | factor ('*' factor)*
    factor := ident ('^' uint)?
    coeff  := int ('/' uint)?

Printing emits the same grammar with terms in descending degrevlex order,
so ``poly_parse(poly_print(p), p.vars) == p``.
"""

import re
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional

from fundamental_pairs.core.monomial import Monomial
from fundamental_pairs.core.polynomial import Polynomial
from fundamental_pairs.core.variables import VarTable
from fundamental_pairs.exceptions import PolynomialSyntaxError, UnknownVariableError

_TOKEN = re.compile(r"\s*(?:(?P<number>[0-9]+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^]))")
_RATIONAL = re.compile(r"[+-]?[0-9]+(?:/[0-9]+)?")


class _Token(NamedTuple):
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if match is None:
            offset = position + (len(text[position:]) - len(text[position:].lstrip()))
            raise PolynomialSyntaxError(f"unexpected character '{text[offset]}'", offset)
        kind = match.lastgroup
        tokens.append(_Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, vars: VarTable):
        self.tokens = _tokenize(text)
        self.vars = vars
        self.pos = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, kind: str, text: Optional[str] = None) -> _Token:
        token = self.current
        if token.kind != kind or (text is not None and token.text != text):
            wanted = text or kind
            found = token.text or "end of input"
            raise PolynomialSyntaxError(f"expected {wanted}, found '{found}'", token.position)
        return self.take()

    def parse(self) -> Polynomial:
        acc: Dict[Monomial, Fraction] = {}
        sign = 1
        if self.current.kind == "op" and self.current.text in "+-":
            sign = -1 if self.take().text == "-" else 1
        while True:
            monomial, coefficient = self.term()
            acc[monomial] = acc.get(monomial, 0) + sign * coefficient
            token = self.current
            if token.kind == "end":
                break
            if token.kind == "op" and token.text in "+-":
                sign = -1 if self.take().text == "-" else 1
                continue
            raise PolynomialSyntaxError(f"unexpected '{token.text}'", token.position)
        return Polynomial(self.vars, acc)

    def term(self):
        exponents = [0] * len(self.vars)
        coefficient = Fraction(1)
        token = self.current
        if token.kind == "number":
            coefficient = self.coeff()
        elif token.kind == "ident":
            self.factor(exponents)
        else:
            found = token.text or "end of input"
            raise PolynomialSyntaxError(f"expected a term, found '{found}'", token.position)
        while self.current.kind == "op" and self.current.text == "*":
            self.take()
            self.factor(exponents)
        return tuple(exponents), coefficient

    def coeff(self) -> Fraction:
        numerator = int(self.take().text)
        if self.current.kind == "op" and self.current.text == "/":
            self.take()
            token = self.expect("number")
            denominator = int(token.text)
            if denominator == 0:
                raise PolynomialSyntaxError("zero denominator", token.position)
            return Fraction(numerator, denominator)
        return Fraction(numerator)

    def factor(self, exponents: List[int]) -> None:
        token = self.expect("ident")
        if token.text not in self.vars:
            raise UnknownVariableError(token.text)
        power = 1
        if self.current.kind == "op" and self.current.text == "^":
            self.take()
            power = int(self.expect("number").text)
        exponents[self.vars.index(token.text)] += power


def poly_parse(text: str, vars: VarTable) -> Polynomial:
    """Parse polynomial text against a variable table."""
    return _Parser(text, vars).parse()


def _monomial_text(vars: VarTable, monomial: Monomial) -> str:
    return "*".join(
        name if e == 1 else f"{name}^{e}"
        for name, e in zip(vars.names, monomial)
        if e
    )


def poly_print(poly: Polynomial) -> str:
    """Canonical text, descending degrevlex."""
    if poly.is_zero():
        return "0"
    parts: List[str] = []
    for index, (monomial, coefficient) in enumerate(poly.items()):
        body = _monomial_text(poly.vars, monomial)
        magnitude = abs(coefficient)
        if not body:
            body = str(magnitude)
        elif magnitude != 1:
            body = f"{magnitude}*{body}"
        if index == 0:
            parts.append(f"-{body}" if coefficient < 0 else body)
        else:
            parts.append(f"- {body}" if coefficient < 0 else f"+ {body}")
    return " ".join(parts)


def parse_rational(text: str) -> Fraction:
    """Exact rational from ``"p"`` or ``"p/q"`` text (signs allowed, ASCII digits only)."""
    if not _RATIONAL.fullmatch(text.strip()):
        raise PolynomialSyntaxError(f"invalid rational '{text}'", 0)
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise PolynomialSyntaxError(f"invalid rational '{text}'", 0) from exc
