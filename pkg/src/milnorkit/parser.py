"""Polynomial expressions and germ files.

Expression grammar (multiplication is always explicit)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' nat)?
    base   := rational | identifier | '(' expr ')' | '-' factor

Germ files are JSON objects with the keys ``variables``, ``equations`` and
optionally ``vector_field``, ``weights``, ``declared_milnor``, ``label``.
See ``docs/germ-format.md``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .poly import MAX_EXPONENT, Polynomial, Ring

__all__ = [
    "ParseError",
    "GermFileError",
    "GermDefinition",
    "parse_expression",
    "parse_germ_file",
    "load_germ",
    "format_polynomial",
    "germ_to_dict",
]


class ParseError(ValueError):
    """Syntax or semantic error in an expression, with a 1-based position."""

    def __init__(self, message: str, line: int, column: int, text: str = ""):
        self.message = message
        self.line = line
        self.column = column
        self.text = text
        super().__init__(f"line {line}, column {column}: {message}")


class GermFileError(ValueError):
    """Malformed germ file. ``location`` names the offending key or entry."""

    def __init__(self, message: str, location: str = ""):
        self.message = message
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\n]+)"
    r"|(?P<num>\d+(?:/\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^()])"
)


@dataclass
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1, text)
        kind = m.lastgroup
        if kind == "ws":
            chunk = m.group()
            for i, ch in enumerate(chunk):
                if ch == "\n":
                    line += 1
                    line_start = pos + i + 1
        else:
            tokens.append(_Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(_Token("end", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Optional[_Token] = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.column, self.text)

    def advance(self) -> _Token:
        tok = self.tok
        self.i += 1
        return tok

    def accept(self, op: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == op:
            self.i += 1
            return True
        return False

    def parse(self) -> Polynomial:
        if self.tok.kind == "end":
            raise self.error("empty expression")
        p = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while True:
            if self.accept("+"):
                p = p + self.term()
            elif self.accept("-"):
                p = p - self.term()
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.accept("*"):
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        p = self.base()
        if self.accept("^"):
            tok = self.tok
            if tok.kind == "op" and tok.text == "-":
                raise self.error("negative exponent")
            if tok.kind != "num" or "/" in tok.text:
                raise self.error("exponent must be a nonnegative integer")
            self.advance()
            k = int(tok.text)
            if k > MAX_EXPONENT:
                raise self.error(f"exponent {k} exceeds {MAX_EXPONENT}", tok)
            if k > 1 and p.degree() > 0 and p.degree() * k > MAX_EXPONENT:
                raise self.error("exponent overflow", tok)
            p = p ** k
        return p

    def base(self) -> Polynomial:
        tok = self.tok
        if tok.kind == "num":
            self.advance()
            num, _, den = tok.text.partition("/")
            if den and int(den) == 0:
                raise self.error("zero denominator", tok)
            return self.ring.constant(Fraction(int(num), int(den or 1)))
        if tok.kind == "ident":
            self.advance()
            if tok.text not in self.ring.variables:
                raise self.error(f"unknown variable {tok.text!r}", tok)
            return self.ring.gen(self.ring.index(tok.text))
        if self.accept("("):
            p = self.expr()
            if not self.accept(")"):
                raise self.error("expected ')'")
            return p
        if self.accept("-"):
            return -self.factor()
        if tok.kind == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {tok.text!r}")


def parse_expression(text: str, ring: Ring) -> Polynomial:
    """Parse ``text`` into a polynomial over ``ring``.

    >>> R = Ring(["x", "y"])
    >>> format_polynomial(parse_expression("(x+y)^2 - x^2 - 2*x*y", R))
    'y^2'
    """
    if not isinstance(text, str):
        raise TypeError("expression must be a string")
    return _Parser(text, ring).parse()


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_monomial(m: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    """Canonical text: ascending total degree, then descending lex exponents."""
    if p.is_zero():
        return "0"
    names = p.ring.variables
    terms = sorted(p.terms.items(), key=lambda t: (sum(t[0]), tuple(-e for e in t[0])))
    out = []
    for idx, (m, c) in enumerate(terms):
        mono = _format_monomial(m, names)
        mag = abs(c)
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)


@dataclass(frozen=True)
class GermDefinition:
    """A germ (X,0) = {f_1 = ... = f_k = 0} in C^{n+k}, with optional extras."""

    ring: Ring
    equations: Tuple[Polynomial, ...]
    vector_field: Optional[Tuple[Polynomial, ...]] = None
    weights: Optional[Tuple[int, ...]] = None
    declared_milnor: Optional[int] = None
    label: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "equations", tuple(self.equations))
        if self.vector_field is not None:
            object.__setattr__(self, "vector_field", tuple(self.vector_field))
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(self.weights))
        validate_germ(self)

    @property
    def k(self) -> int:
        return len(self.equations)

    @property
    def n(self) -> int:
        """Complex dimension of X."""
        return self.ring.dimension - self.k

    @property
    def is_hypersurface(self) -> bool:
        return self.k == 1


def validate_germ(germ: GermDefinition) -> None:
    dim = germ.ring.dimension
    if not germ.equations:
        raise GermFileError("at least one equation is required", "equations")
    if germ.k >= dim:
        raise GermFileError(
            f"{germ.k} equations in {dim} variables: need fewer equations than variables",
            "equations",
        )
    for i, f in enumerate(germ.equations):
        if f.ring != germ.ring:
            raise GermFileError("equation is over a different ring", f"equations[{i}]")
        if f.is_zero():
            raise GermFileError("equation is identically zero", f"equations[{i}]")
        if f.constant_term() != 0:
            raise GermFileError(
                f"equation does not vanish at the origin (constant term {f.constant_term()})",
                f"equations[{i}]",
            )
    if germ.vector_field is not None:
        if len(germ.vector_field) != dim:
            raise GermFileError(
                f"vector field has {len(germ.vector_field)} components, expected {dim}",
                "vector_field",
            )
        if all(c.is_zero() for c in germ.vector_field):
            raise GermFileError("vector field is identically zero", "vector_field")
    if germ.weights is not None:
        if len(germ.weights) != dim:
            raise GermFileError(f"{len(germ.weights)} weights for {dim} variables", "weights")
        if any(isinstance(w, bool) or not isinstance(w, int) or w <= 0 for w in germ.weights):
            raise GermFileError("weights must be positive integers", "weights")
    if germ.declared_milnor is not None:
        mu = germ.declared_milnor
        if isinstance(mu, bool) or not isinstance(mu, int) or mu < 0:
            raise GermFileError("declared_milnor must be a nonnegative integer", "declared_milnor")


_KEYS = {"variables", "equations", "vector_field", "weights", "declared_milnor", "label"}


def _parse_at(text, ring: Ring, location: str) -> Polynomial:
    if not isinstance(text, str) or not text.strip():
        raise GermFileError("expected a nonempty expression string", location)
    try:
        return parse_expression(text, ring)
    except ParseError as exc:
        raise GermFileError(str(exc), location) from exc


def germ_from_dict(data: dict) -> GermDefinition:
    if not isinstance(data, dict):
        raise GermFileError("top level must be an object", "$")
    unknown = set(data) - _KEYS
    if unknown:
        raise GermFileError(f"unknown keys {sorted(unknown)}", "$")
    for key in ("variables", "equations"):
        if key not in data:
            raise GermFileError("missing required key", key)

    variables = data["variables"]
    if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
        raise GermFileError("expected a list of strings", "variables")
    for i, v in enumerate(variables):
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
            raise GermFileError(f"invalid variable name {v!r}", f"variables[{i}]")
    try:
        ring = Ring(variables)
    except ValueError as exc:
        raise GermFileError(str(exc), "variables") from exc

    equations = data["equations"]
    if not isinstance(equations, list) or not equations:
        raise GermFileError("expected a nonempty list of expressions", "equations")
    eqs = [_parse_at(e, ring, f"equations[{i}]") for i, e in enumerate(equations)]

    field_ = None
    if data.get("vector_field") is not None:
        comps = data["vector_field"]
        if not isinstance(comps, list):
            raise GermFileError("expected a list of expressions", "vector_field")
        field_ = [_parse_at(c, ring, f"vector_field[{i}]") for i, c in enumerate(comps)]

    weights = data.get("weights")
    if weights is not None and not isinstance(weights, list):
        raise GermFileError("expected a list of positive integers", "weights")

    label = data.get("label")
    if label is not None and not isinstance(label, str):
        raise GermFileError("expected a string", "label")

    return GermDefinition(
        ring=ring,
        equations=eqs,
        vector_field=field_,
        weights=weights,
        declared_milnor=data.get("declared_milnor"),
        label=label,
    )


def parse_germ_file(data: bytes) -> GermDefinition:
    """Parse and validate the bytes of a germ file."""
    try:
        text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    except UnicodeDecodeError as exc:
        raise GermFileError(f"not valid UTF-8 (byte {exc.start})", "$") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GermFileError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}", "$") from exc
    return germ_from_dict(obj)


def load_germ(path) -> GermDefinition:
    with open(path, "rb") as fh:
        return parse_germ_file(fh.read())


def germ_to_dict(germ: GermDefinition) -> dict:
    out: dict = {
        "variables": list(germ.ring.variables),
        "equations": [format_polynomial(f) for f in germ.equations],
    }
    if germ.vector_field is not None:
        out["vector_field"] = [format_polynomial(c) for c in germ.vector_field]
    if germ.weights is not None:
        out["weights"] = list(germ.weights)
    if germ.declared_milnor is not None:
        out["declared_milnor"] = germ.declared_milnor
    if germ.label is not None:
        out["label"] = germ.label
    return out
