"""
Text grammar for monomial ideals.

    ideal     := monomial (separator monomial)*
    separator := "," | newline
    monomial  := term ("*" term)* | "1"
    term      := "x" INDEX ("^" EXPONENT)?

Spaces and tabs are ignored, blank lines collapse, and repeated variables
multiply (x1*x1 is x1^2). Empty text is the zero ideal.
"""

import re
from dataclasses import dataclass
from typing import List

from qdepth.errors import ParseError, PreconditionError, VariableIndexError
from qdepth.ideals.ideal import MonomialIdeal
from qdepth.ideals.monomial import Monomial

_TOKEN = re.compile(
    r"""
    (?P<newline>\n)
    |(?P<ws>[ \t\r]+)
    |(?P<var>x)
    |(?P<int>[0-9]+)
    |(?P<op>[,*^])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ParseError(f"Unexpected character {text[pos]!r}", position=pos)
        kind = match.lastgroup
        if kind == "newline":
            # Blank lines and separators at the start collapse into one.
            if tokens and tokens[-1].kind != "sep":
                tokens.append(_Token("sep", "\n", pos))
        elif kind == "op" and match.group() == ",":
            tokens.append(_Token("sep", ",", pos))
        elif kind != "ws":
            tokens.append(_Token(kind, match.group(), pos))
        pos = match.end()
    while tokens and tokens[-1].kind == "sep" and tokens[-1].text == "\n":
        tokens.pop()
    return tokens


class _Parser:
    def __init__(self, text: str, n: int):
        self.text = text
        self.n = n
        self.tokens = _tokenize(text)
        self.i = 0

    def _peek(self) -> _Token:
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return _Token("end", "", len(self.text))

    def _expect(self, kind: str, text: str = None) -> _Token:
        tok = self._peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            wanted = repr(text) if text is not None else kind
            found = repr(tok.text) if tok.kind != "end" else "end of input"
            raise ParseError(f"Expected {wanted}, found {found}", position=tok.pos)
        self.i += 1
        return tok

    def parse(self) -> MonomialIdeal:
        if not self.tokens:
            return MonomialIdeal.zero(self.n)
        gens = [self._monomial()]
        while self._peek().kind == "sep":
            self.i += 1
            gens.append(self._monomial())
        if self._peek().kind != "end":
            tok = self._peek()
            raise ParseError(f"Unexpected {tok.text!r}", position=tok.pos)
        return MonomialIdeal(self.n, tuple(gens))

    def _monomial(self) -> Monomial:
        tok = self._peek()
        if tok.kind == "int":
            if tok.text != "1":
                raise ParseError(
                    f"Only the constant 1 is allowed, found {tok.text}",
                    position=tok.pos,
                )
            self.i += 1
            return Monomial.unit(self.n)
        exponents = [0] * self.n
        self._term(exponents)
        while self._peek().kind == "op" and self._peek().text == "*":
            self.i += 1
            self._term(exponents)
        return Monomial(tuple(exponents))

    def _term(self, exponents: List[int]) -> None:
        self._expect("var")
        index_tok = self._expect("int")
        index = int(index_tok.text)
        if not 1 <= index <= self.n:
            raise VariableIndexError(
                f"Variable x{index} outside x1..x{self.n}",
                position=index_tok.pos,
                details={"index": index, "n": self.n},
            )
        exponent = 1
        if self._peek().kind == "op" and self._peek().text == "^":
            self.i += 1
            exp_tok = self._expect("int")
            exponent = int(exp_tok.text)
            if exponent < 1:
                raise ParseError("Exponent must be at least 1", position=exp_tok.pos)
        exponents[index - 1] += exponent


def parse_ideal(text: str, n: int) -> MonomialIdeal:
    """
    Parse ideal text over n variables into a minimalized MonomialIdeal.

    Raises:
        ParseError: on a syntax error, with the character position
        VariableIndexError: when an index is outside 1..n
        PreconditionError: when n < 1
    """
    if n < 1:
        raise PreconditionError(f"Variable count must be at least 1, got {n}")
    return _Parser(text, n).parse()


def format_ideal(ideal: MonomialIdeal) -> str:
    """Render an ideal in the input grammar; the zero ideal is the empty string."""
    return ", ".join(str(g) for g in ideal.generators)
