"""Parsing and formatting of polynomial expressions and problem files.

Expression grammar (explicit '*' required, exponents are natural numbers):

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | base ('^' natural)?
    base   := rational | 'x' | 'y' | '(' expr ')'
    rational := natural ('/' natural)?

Unary minus binds more loosely than '^', so "-x^2" denotes -(x^2).

Problem files are UTF-8 text with one "key = expression" per line, where key
is f1, f2 or u; '#' starts a comment and blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegreeGuardExceeded, DuplicateKeyError, MissingKeyError, ParseError
from .poly import Monomial, Polynomial

DEFAULT_DEGREE_GUARD = 64
DEFAULT_ORACLE_RADIUS = 16.0


@dataclass(frozen=True)
class SolverOptions:
    """Settings that tune the solver without changing the problem."""

    oracle_radius: float = DEFAULT_ORACLE_RADIUS
    degree_guard: int = DEFAULT_DEGREE_GUARD


@dataclass(frozen=True)
class ProblemInput:
    """A parsed problem: the map components f1, f2 and an optional region polynomial u."""

    f1: Polynomial
    f2: Polynomial
    u: Polynomial | None = None
    options: SolverOptions = field(default_factory=SolverOptions)


# -- tokenizer -------------------------------------------------------------

_SINGLE = {"+", "-", "*", "^", "/", "(", ")", "x", "y"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """Return (kind, value, position) triples; kind 'int' or the literal char."""
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if ch in _SINGLE:
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", position=i,
                         expected=("number", "x", "y", "operator", "parenthesis"))
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    """Recursive-descent parser over the token list."""

    def __init__(self, tokens, degree_guard: int):
        self.tokens = tokens
        self.pos = 0
        self.guard = degree_guard

    def peek(self) -> str:
        return self.tokens[self.pos][0]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.tokens[self.pos]
        if tok[0] != kind:
            raise ParseError(f"unexpected {self._describe(tok)}", position=tok[2],
                             expected=(kind,))
        return self.next()

    @staticmethod
    def _describe(tok) -> str:
        return "end of input" if tok[0] == "end" else f"token {tok[1]!r}"

    def parse_expr(self) -> Polynomial:
        result = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.next()[0]
            term = self.parse_term()
            result = result + term if op == "+" else result - term
        return result

    def parse_term(self) -> Polynomial:
        result = self.parse_factor()
        while self.peek() == "*":
            self.next()
            result = result * self.parse_factor()
        return result

    def parse_factor(self) -> Polynomial:
        if self.peek() == "-":
            self.next()
            return -self.parse_factor()
        base = self.parse_base()
        if self.peek() == "^":
            self.next()
            tok = self.expect("int")
            exponent = int(tok[1])
            if exponent > self.guard:
                raise DegreeGuardExceeded(exponent, self.guard, context="parsing")
            return base ** exponent
        return base

    def parse_base(self) -> Polynomial:
        kind, value, pos = self.next()
        if kind == "int":
            numerator = int(value)
            if self.peek() == "/":
                self.next()
                dtok = self.expect("int")
                denominator = int(dtok[1])
                if denominator == 0:
                    raise ParseError("zero denominator in rational literal", position=dtok[2])
                return Polynomial.constant(Fraction(numerator, denominator))
            return Polynomial.constant(numerator)
        if kind == "x" or kind == "y":
            return Polynomial.variable(kind)
        if kind == "(":
            inner = self.parse_expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {self._describe((kind, value, pos))}", position=pos,
                         expected=("number", "x", "y", "'('", "'-'"))


def parse_polynomial(text: str, degree_guard: int = DEFAULT_DEGREE_GUARD) -> Polynomial:
    """Parse an expression into canonical sparse form.

    Raises ParseError (with position and expected tokens) for malformed
    input, and DegreeGuardExceeded for exponents above the guard.
    """
    parser = _Parser(_tokenize(text), degree_guard)
    result = parser.parse_expr()
    tok = parser.tokens[parser.pos]
    if tok[0] != "end":
        raise ParseError(f"trailing input starting with {tok[1]!r}", position=tok[2],
                         expected=("+", "-", "*", "^", "end of input"))
    if result.degree != float("-inf") and result.degree > degree_guard:
        raise DegreeGuardExceeded(result.degree, degree_guard, context="parsing")
    return result


_PROBLEM_KEYS = ("f1", "f2", "u")


def parse_problem(text: str, options: SolverOptions | None = None) -> ProblemInput:
    """Parse a problem file into a ProblemInput.

    Raises MissingKeyError if f1 or f2 is absent, DuplicateKeyError on
    repeated keys, and ParseError for anything else malformed.
    """
    options = options or SolverOptions()
    seen: dict[str, Polynomial] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError("expected 'key = expression'", line=lineno)
        key, _, expr = line.partition("=")
        key = key.strip()
        if key not in _PROBLEM_KEYS:
            raise ParseError(f"unknown key {key!r}", line=lineno,
                             expected=_PROBLEM_KEYS)
        if key in seen:
            raise DuplicateKeyError(key, lineno)
        try:
            seen[key] = parse_polynomial(expr, degree_guard=options.degree_guard)
        except ParseError as err:
            raise ParseError(f"in value for {key!r}: {err.args[0]}", line=lineno) from err
    for key in ("f1", "f2"):
        if key not in seen:
            raise MissingKeyError(key)
    return ProblemInput(f1=seen["f1"], f2=seen["f2"], u=seen.get("u"), options=options)


# -- formatting ------------------------------------------------------------

def _grlex_descending(mono: Monomial) -> tuple[int, int]:
    return (mono.degree, mono.ex)


def format_monomial(mono: Monomial) -> str:
    """Canonical text of a power product: '1', 'x', 'y^3', 'x^2*y', ..."""
    return str(Monomial(*mono))


def format_polynomial(p: Polynomial) -> str:
    """Canonical text: terms in graded-lexicographic descending order.

    Round-trips through parse_polynomial.
    """
    if p.is_zero():
        return "0"
    pieces = []
    for mono, coeff in p.sorted_terms(_grlex_descending, reverse=True):
        sign = "-" if coeff < 0 else "+"
        magnitude = -coeff if coeff < 0 else coeff
        if mono == Monomial(0, 0):
            body = str(magnitude)
        elif magnitude == 1:
            body = format_monomial(mono)
        else:
            body = f"{magnitude}*{format_monomial(mono)}"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = [first_body if first_sign == "+" else f"-{first_body}"]
    for sign, body in pieces[1:]:
        out.append(f" {sign} {body}")
    return "".join(out)
