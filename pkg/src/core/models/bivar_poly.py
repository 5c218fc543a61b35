"""
Bivariate polynomial domain model

Exact polynomials in x and y over arbitrary-precision integers. Values are
immutable and hashable; every arithmetic operation returns a new value.
"""

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple, Union

from ..exceptions import NotDivisible, ParseError, ValidationError


Monomial = Tuple[int, int]
PolyLike = Union["BivarPoly", int]


@dataclass(frozen=True, eq=False)
class BivarPoly:
    """
    Sparse bivariate polynomial: a map from monomial (a, b) = x^a*y^b to a
    non-zero integer coefficient.
    """
    terms: Mapping[Monomial, int] = field(default_factory=dict)

    def __post_init__(self):
        """Drop zero coefficients and freeze the term map"""
        cleaned: Dict[Monomial, int] = {}
        for monomial, coefficient in self.terms.items():
            a, b = monomial
            if a < 0 or b < 0:
                raise ValidationError(f"Negative exponent in monomial {monomial}")
            if coefficient:
                cleaned[(int(a), int(b))] = int(coefficient)
        object.__setattr__(self, "terms", MappingProxyType(cleaned))

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def constant(cls, value: int) -> "BivarPoly":
        """Constant polynomial"""
        return cls({(0, 0): value})

    @classmethod
    def monomial(cls, a: int, b: int, coefficient: int = 1) -> "BivarPoly":
        """Single term coefficient*x^a*y^b"""
        return cls({(a, b): coefficient})

    @classmethod
    def from_json_triples(cls, triples: Sequence[Sequence]) -> "BivarPoly":
        """Build from ``[a, b, "coefficient"]`` triples"""
        terms: Dict[Monomial, int] = {}
        for position, triple in enumerate(triples):
            if len(triple) != 3:
                raise ParseError(f"expected [a, b, coefficient], got {triple!r}", position=position)
            a, b, coefficient = triple
            try:
                key = (int(a), int(b))
                terms[key] = terms.get(key, 0) + int(coefficient)
            except (TypeError, ValueError) as e:
                raise ParseError(f"invalid triple {triple!r}: {e}", position=position)
        return cls(terms)

    @classmethod
    def parse(cls, text: str) -> "BivarPoly":
        """Parse canonical (or LaTeX-flavoured) polynomial text"""
        return _PolynomialParser(text).parse()

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree_x(self) -> int:
        """Largest x exponent (-1 for the zero polynomial)"""
        return max((a for a, _ in self.terms), default=-1)

    @property
    def degree_y(self) -> int:
        """Largest y exponent (-1 for the zero polynomial)"""
        return max((b for _, b in self.terms), default=-1)

    def coefficient(self, a: int, b: int) -> int:
        return self.terms.get((a, b), 0)

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        """Terms in canonical order: x-degree descending, then y-degree descending"""
        return sorted(self.terms.items(), key=lambda item: item[0], reverse=True)

    def has_nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self.sorted_terms())

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------

    def __add__(self, other: PolyLike) -> "BivarPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            result[monomial] = result.get(monomial, 0) + coefficient
        return BivarPoly(result)

    __radd__ = __add__

    def __neg__(self) -> "BivarPoly":
        return BivarPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: PolyLike) -> "BivarPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: PolyLike) -> "BivarPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: PolyLike) -> "BivarPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result: Dict[Monomial, int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                result[key] = result.get(key, 0) + c1 * c2
        return BivarPoly(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BivarPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValidationError(f"Polynomial powers need a non-negative integer, got {exponent!r}")
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def div_exact(self, divisor: PolyLike) -> "BivarPoly":
        """
        Exact division by long division under lex order with x > y

        Args:
            divisor: Non-zero polynomial

        Returns:
            Quotient q with self == q * divisor

        Raises:
            ZeroDivisionError: If divisor is zero
            NotDivisible: If the division leaves a remainder
        """
        divisor = _coerce(divisor)
        if divisor is NotImplemented:
            raise ValidationError(f"Cannot divide by {divisor!r}")
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")

        lead = max(divisor.terms)
        lead_coefficient = divisor.terms[lead]
        remainder = dict(self.terms)
        quotient: Dict[Monomial, int] = {}

        while remainder:
            monomial = max(remainder)
            da, db = monomial[0] - lead[0], monomial[1] - lead[1]
            if da < 0 or db < 0:
                raise NotDivisible(
                    f"leading term x^{monomial[0]}*y^{monomial[1]} not divisible by divisor lead",
                    remainder=BivarPoly(remainder))
            factor, rest = divmod(remainder[monomial], lead_coefficient)
            if rest:
                raise NotDivisible(
                    f"coefficient {remainder[monomial]} not divisible by {lead_coefficient}",
                    remainder=BivarPoly(remainder))
            quotient[(da, db)] = factor
            for (a, b), c in divisor.terms.items():
                key = (a + da, b + db)
                value = remainder.get(key, 0) - factor * c
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)

        return BivarPoly(quotient)

    # ------------------------------------------------------------------
    # Evaluation and substitution
    # ------------------------------------------------------------------

    def evaluate(self, x0: int, y0: int) -> int:
        """Exact integer value p(x0, y0)"""
        x_powers: Dict[int, int] = {}
        y_powers: Dict[int, int] = {}
        total = 0
        for (a, b), coefficient in self.terms.items():
            if a not in x_powers:
                x_powers[a] = x0 ** a
            if b not in y_powers:
                y_powers[b] = y0 ** b
            total += coefficient * x_powers[a] * y_powers[b]
        return total

    def swap_variables(self) -> "BivarPoly":
        """p(y, x): the variable swap used by planar duality"""
        return BivarPoly({(b, a): c for (a, b), c in self.terms.items()})

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------

    def to_canonical_text(self) -> str:
        """Canonical text such as ``x^2 + x + y`` or ``5*x^6*y^2 - 3``"""
        if self.is_zero:
            return "0"

        pieces: List[str] = []
        for index, ((a, b), coefficient) in enumerate(self.sorted_terms()):
            magnitude = abs(coefficient)
            factors = []
            if a:
                factors.append("x" if a == 1 else f"x^{a}")
            if b:
                factors.append("y" if b == 1 else f"y^{b}")
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude)] + factors)

            if index == 0:
                pieces.append(f"-{body}" if coefficient < 0 else body)
            else:
                pieces.append(f"{'-' if coefficient < 0 else '+'} {body}")

        return " ".join(pieces)

    def to_json_triples(self) -> List[list]:
        """``[a, b, "coefficient"]`` triples in canonical order"""
        return [[a, b, str(c)] for (a, b), c in self.sorted_terms()]

    # ------------------------------------------------------------------
    # Equality
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        return self.to_canonical_text()

    def __repr__(self) -> str:
        return f"BivarPoly('{self.to_canonical_text()}')"


def _coerce(value):
    if isinstance(value, BivarPoly):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return BivarPoly({(0, 0): value})
    return NotImplemented


ZERO = BivarPoly()
ONE = BivarPoly.constant(1)
X = BivarPoly.monomial(1, 0)
Y = BivarPoly.monomial(0, 1)

# xy - x - y, the divisor of every two-vertex splitting formula
SPLIT_DIVISOR = X * Y - X - Y


# Function-style aliases of the ring operations

def add(p: BivarPoly, q: BivarPoly) -> BivarPoly:
    return p + q


def mul(p: BivarPoly, q: BivarPoly) -> BivarPoly:
    return p * q


def div_exact(p: BivarPoly, d: BivarPoly) -> BivarPoly:
    return p.div_exact(d)


def eval_int(p: BivarPoly, x0: int, y0: int) -> int:
    return p.evaluate(x0, y0)


def to_canonical_text(p: BivarPoly) -> str:
    return p.to_canonical_text()


def parse(text: str) -> BivarPoly:
    return BivarPoly.parse(text)


class _PolynomialParser:
    """
    Recursive-descent parser for sums of monomials.

    Accepts the canonical format plus the looser spelling found in printed
    tables: implicit multiplication (``4x^{14}y``), braced exponents, optional
    ``*`` and the unicode minus sign.
    """

    def __init__(self, text: str):
        self.text = text.replace("−", "-")
        self.pos = 0

    def parse(self) -> BivarPoly:
        self._skip_ws()
        if self.pos >= len(self.text):
            raise ParseError("empty polynomial text", position=self.pos)

        terms: Dict[Monomial, int] = {}
        sign = self._read_sign(optional=True)
        while True:
            coefficient, monomial = self._read_term()
            terms[monomial] = terms.get(monomial, 0) + sign * coefficient
            self._skip_ws()
            if self.pos >= len(self.text):
                break
            sign = self._read_sign(optional=False)

        return BivarPoly(terms)

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _read_sign(self, optional: bool) -> int:
        self._skip_ws()
        char = self._peek()
        if char in ("+", "-"):
            self.pos += 1
            return -1 if char == "-" else 1
        if optional:
            return 1
        raise ParseError(f"expected '+' or '-', found {char!r}", position=self.pos)

    def _read_int(self) -> int:
        start = self.pos
        while self._peek().isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError(f"expected digits, found {self._peek()!r}", position=self.pos)
        return int(self.text[start:self.pos])

    def _read_exponent(self) -> int:
        self._skip_ws()
        if self._peek() == "{":
            self.pos += 1
            self._skip_ws()
            value = self._read_int()
            self._skip_ws()
            if self._peek() != "}":
                raise ParseError("unclosed '{' in exponent", position=self.pos)
            self.pos += 1
            return value
        return self._read_int()

    def _read_term(self) -> Tuple[int, Monomial]:
        coefficient = 1
        a = b = 0
        factors = 0

        while True:
            self._skip_ws()
            char = self._peek()
            if char == "*" and factors:
                self.pos += 1
                self._skip_ws()
                char = self._peek()
                if not (char.isdigit() or char in ("x", "y")):
                    raise ParseError(f"expected factor after '*', found {char!r}", position=self.pos)
            if char.isdigit():
                coefficient *= self._read_int()
                if self._peek() == "^":
                    raise ParseError("exponent on a numeric factor", position=self.pos)
            elif char in ("x", "y"):
                self.pos += 1
                exponent = 1
                self._skip_ws()
                if self._peek() == "^":
                    self.pos += 1
                    exponent = self._read_exponent()
                if char == "x":
                    a += exponent
                else:
                    b += exponent
            else:
                if not factors:
                    raise ParseError(f"expected a term, found {char!r}", position=self.pos)
                return coefficient, (a, b)
            factors += 1
