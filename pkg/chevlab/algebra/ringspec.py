"""
Ring specifications: pydantic models plus the text grammar

    ring    := factor ( " x " factor )*
    factor  := atom ( "[x]/(" poly ")" )*
    atom    := "Z/" INT | "F" INT | "(" ring ")"

e.g. "Z/12", "F3[x]/(x^2)", "Z/4 x Z/3", "(Z/2 x Z/2)[x]/(x^2+x+1)".
"""
from __future__ import annotations

import math
from typing import Annotated, List, Literal, Union

from pydantic import BaseModel, Field

from chevlab.algebra.errors import InvalidSpec, RingSpecSyntaxError


class ZmodNSpec(BaseModel):
    kind: Literal["zmod"] = "zmod"
    n: int


class PolyQuotientSpec(BaseModel):
    """Base ring modulo a monic polynomial; modulus holds coefficients from x^0 upwards."""
    kind: Literal["poly"] = "poly"
    base: "RingSpec"
    modulus: List[int]


class ProductSpec(BaseModel):
    kind: Literal["product"] = "product"
    factors: List["RingSpec"]


RingSpec = Annotated[Union[ZmodNSpec, PolyQuotientSpec, ProductSpec], Field(discriminator="kind")]

PolyQuotientSpec.model_rebuild()
ProductSpec.model_rebuild()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def format_polynomial(coefficients: List[int], var: str = "x") -> str:
    """Render integer coefficients (x^0 first) as e.g. 'x^3-x-1'."""
    terms = []
    for degree in range(len(coefficients) - 1, -1, -1):
        c = coefficients[degree]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if degree == 0:
            body = str(mag)
        else:
            mono = var if degree == 1 else f"{var}^{degree}"
            body = mono if mag == 1 else f"{mag}{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += sign + body
    return out


def spec_name(spec: RingSpec) -> str:
    """Canonical text form of a spec; parse_ring_spec(spec_name(s)) == s."""
    if isinstance(spec, ZmodNSpec):
        return f"Z/{spec.n}"
    if isinstance(spec, PolyQuotientSpec):
        base = spec_name(spec.base)
        if isinstance(spec.base, ProductSpec):
            base = f"({base})"
        return f"{base}[x]/({format_polynomial(spec.modulus)})"
    parts = []
    for factor in spec.factors:
        name = spec_name(factor)
        parts.append(f"({name})" if isinstance(factor, ProductSpec) else name)
    return " x ".join(parts)


def characteristic(spec: RingSpec) -> int:
    """Additive order of 1."""
    if isinstance(spec, ZmodNSpec):
        return spec.n
    if isinstance(spec, PolyQuotientSpec):
        return characteristic(spec.base)
    return math.lcm(*(characteristic(f) for f in spec.factors))


def validate_spec(spec: RingSpec) -> None:
    """Raise InvalidSpec unless the spec describes a finite commutative unital ring."""
    if isinstance(spec, ZmodNSpec):
        if spec.n < 2:
            raise InvalidSpec(f"Z/n needs n >= 2, got {spec.n}")
    elif isinstance(spec, PolyQuotientSpec):
        validate_spec(spec.base)
        if len(spec.modulus) < 2:
            raise InvalidSpec("modulus must have degree >= 1")
        if (spec.modulus[-1] - 1) % characteristic(spec.base) != 0:
            raise InvalidSpec(f"modulus {format_polynomial(spec.modulus)} is not monic")
    elif isinstance(spec, ProductSpec):
        if not spec.factors:
            raise InvalidSpec("a product needs at least one factor")
        for factor in spec.factors:
            validate_spec(factor)
    else:
        raise InvalidSpec(f"unknown ring spec {spec!r}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> RingSpecSyntaxError:
        return RingSpecSyntaxError(message, self.pos, self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, token: str) -> None:
        if not self.text.startswith(token, self.pos):
            raise self.error(f"expected {token!r}")
        self.pos += len(token)

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected integer")
        return int(self.text[start:self.pos])

    def ring(self) -> RingSpec:
        factors = [self.factor()]
        while True:
            save = self.pos
            self.skip_ws()
            spaced = self.pos > save
            nxt = self.text[self.pos + 1] if self.pos + 1 < len(self.text) else ""
            if spaced and self.peek() == "x" and nxt.isspace():
                self.pos += 1
                factors.append(self.factor())
            else:
                self.pos = save
                break
        return factors[0] if len(factors) == 1 else ProductSpec(factors=factors)

    def factor(self) -> RingSpec:
        self.skip_ws()
        spec = self.atom()
        while self.text.startswith("[x]/(", self.pos):
            self.pos += len("[x]/(")
            coefficients = self.poly()
            self.skip_ws()
            self.expect(")")
            spec = PolyQuotientSpec(base=spec, modulus=coefficients)
        return spec

    def atom(self) -> RingSpec:
        if self.text.startswith("Z/", self.pos):
            self.pos += 2
            return ZmodNSpec(n=self.integer())
        if self.peek() == "F":
            self.pos += 1
            if self.peek() == "_":
                self.pos += 1
            start = self.pos
            p = self.integer()
            if not is_prime(p):
                raise InvalidSpec(f"F{p} at position {start}: {p} is not prime")
            return ZmodNSpec(n=p)
        if self.peek() == "(":
            self.pos += 1
            spec = self.ring()
            self.skip_ws()
            self.expect(")")
            return spec
        raise self.error("expected 'Z/', 'F' or '('")

    def poly(self) -> List[int]:
        coefficients: dict = {}
        first = True
        while True:
            self.skip_ws()
            if self.peek() in (")", ""):
                break
            sign = 1
            if self.peek() in "+-":
                sign = -1 if self.peek() == "-" else 1
                self.pos += 1
                self.skip_ws()
            elif not first:
                raise self.error("expected '+', '-' or ')'")
            has_coefficient = self.peek().isdigit()
            c = self.integer() if has_coefficient else 1
            self.skip_ws()
            if self.peek() == "*":
                self.pos += 1
                self.skip_ws()
            if self.peek() == "x":
                self.pos += 1
                degree = 1
                if self.peek() == "^":
                    self.pos += 1
                    degree = self.integer()
            elif has_coefficient:
                degree = 0
            else:
                raise self.error("expected a term")
            coefficients[degree] = coefficients.get(degree, 0) + sign * c
            first = False
        if first:
            raise self.error("empty polynomial")
        top = max(coefficients)
        return [coefficients.get(d, 0) for d in range(top + 1)]


def parse_ring_spec(text: str) -> RingSpec:
    parser = _Parser(text)
    spec = parser.ring()
    parser.skip_ws()
    if parser.pos != len(text):
        raise parser.error("unexpected trailing input")
    return spec


def parse_polynomial(text: str) -> List[int]:
    """Integer coefficients (x^0 first) of a polynomial such as '2x^2+x+1'."""
    parser = _Parser(text.strip())
    coefficients = parser.poly()
    parser.skip_ws()
    if parser.pos != len(parser.text):
        raise parser.error("unexpected trailing input")
    return coefficients
