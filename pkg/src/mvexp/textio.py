"""Reading and writing multivectors in the ``-8 - 6*e2 + 5*e12`` notation.

Grammar (whitespace separates tokens and is otherwise ignored)::

    expression := sign? term (('+' | '-') term)*
    term       := number ('*'? blade)? | blade
    number     := decimal literal with optional exponent
    blade      := 1 | e1 | e2 | e3 | e12 | e13 | e23 | e123

A number is read greedily, so ``5e12`` is five times ten to the twelfth;
write ``5*e12`` or ``5 e12`` for the bivector.  Blade labels must use
ascending indices: ``e31`` is rejected rather than rewritten as ``-e13``.
"""
from __future__ import annotations

import re
from typing import NamedTuple

import numpy as np

from .algebra import BLADE_NAMES, Multivector, Signature


class ParseError(ValueError):
    def __init__(self, message: str, token: str = "", position: int = -1):
        if position >= 0:
            message = f"{message} at position {position}"
        super().__init__(message)
        self.token = token
        self.position = position


class Term(NamedTuple):
    sign: int
    coefficient: str
    blade: str


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<blade>e\d*)
  | (?P<op>[+\-*])
""", re.VERBOSE)


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", text[pos], pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    return out


def _check_blade(label: str, pos: int) -> str:
    if label not in BLADE_NAMES:
        digits = label[1:]
        if digits and len(set(digits)) == len(digits) and set(digits) <= set("123"):
            raise ParseError(f"blade label {label!r} must use ascending indices "
                             f"(write e{''.join(sorted(digits))} with the sign adjusted)",
                             label, pos)
        raise ParseError(f"unknown blade label {label!r}", label, pos)
    return label


def parse_terms(text: str) -> list[Term]:
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty multivector expression")
    terms: list[Term] = []
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        kind, value, pos = tokens[i]
        if kind == "op" and value in "+-":
            sign = -1 if value == "-" else 1
            i += 1
        elif not first:
            raise ParseError(f"expected '+' or '-', got {value!r}", value, pos)
        if i >= len(tokens):
            raise ParseError("expression ends after a sign", value, pos)
        kind, value, pos = tokens[i]
        if kind == "number":
            coeff = value
            i += 1
            blade = "1"
            if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "*":
                i += 1
                if i >= len(tokens) or tokens[i][0] not in ("blade", "number"):
                    raise ParseError("expected a blade after '*'", "*", tokens[i - 1][2])
            if i < len(tokens) and tokens[i][0] == "blade":
                blade = _check_blade(tokens[i][1], tokens[i][2])
                i += 1
            elif i < len(tokens) and tokens[i][0] == "number" and tokens[i][1] == "1" \
                    and tokens[i - 1][1] == "*":
                i += 1
        elif kind == "blade":
            coeff = "1"
            blade = _check_blade(value, pos)
            i += 1
        else:
            raise ParseError(f"unexpected token {value!r}", value, pos)
        terms.append(Term(sign, coeff, blade))
        first = False
    return terms


def parse_multivector(text: str, sig: Signature) -> Multivector:
    c = np.zeros(8)
    for t in parse_terms(text):
        c[BLADE_NAMES.index(t.blade)] += t.sign * float(t.coefficient)
    try:
        return Multivector(sig, c)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_number(x: float) -> str:
    """17 significant digits, enough to round-trip any binary64 value."""
    return format(float(x), ".17g")


def format_multivector(mv: Multivector) -> str:
    parts: list[str] = []
    for name, x in zip(BLADE_NAMES, mv.coeffs):
        x = float(x)
        if x == 0.0:
            continue
        mag = format_number(abs(x))
        body = mag if name == "1" else f"{mag}*{name}"
        if not parts:
            parts.append(body if x > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if x > 0 else '-'} {body}")
    return " ".join(parts) if parts else "0"
