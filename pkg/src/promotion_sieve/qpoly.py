"""Exact polynomials, q-analogues and values at roots of unity."""

from collections import Counter
from functools import lru_cache
from typing import Dict, Iterable, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator
from sympy import Add, Poly, Symbol, divisors, expand, ilcm
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from promotion_sieve.charge import ContentError, charge, cocharge
from promotion_sieve.shapes import Composition, Partition, SkewShape, n_stat
from promotion_sieve.tableaux import (
    enumerate_bounded_ssyt,
    enumerate_ssyt,
    reading_word,
)

Q = Symbol("q")

_TRANSFORMATIONS = standard_transformations + (
    convert_xor,
    implicit_multiplication_application,
)


class InexactDivisionError(ValueError):
    """A polynomial division left a non-zero remainder."""


class NotAnIntegerError(ValueError):
    """A cyclotomic value is not a rational integer."""


def _format_terms(items: Iterable[Tuple[int, str]]) -> str:
    text = ""
    for coeff, monomial in items:
        sign = "-" if coeff < 0 else "+"
        magnitude = abs(coeff)
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"
        if not text:
            text = body if sign == "+" else f"-{body}"
        else:
            text += f"{sign}{body}"
    return text or "0"


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


class QPoly(BaseModel):
    """A Laurent polynomial in q with integer coefficients."""

    model_config = ConfigDict(frozen=True)

    terms: Dict[int, int] = Field(default_factory=dict)
    """Exponent -> coefficient; zero coefficients are never stored."""

    @field_validator("terms")
    @classmethod
    def _drop_zeros(cls, terms: Dict[int, int]) -> Dict[int, int]:
        return {int(e): int(c) for e, c in sorted(terms.items()) if c != 0}

    @classmethod
    def constant(cls, c: int) -> "QPoly":
        return cls(terms={0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "QPoly":
        return cls(terms={e: c})

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "QPoly":
        """Sum of ``q^e`` over the given exponents, with multiplicity."""
        return cls(terms=dict(Counter(exponents)))

    @classmethod
    def from_sympy(cls, poly: Poly, low: int = 0) -> "QPoly":
        return cls(terms={e + low: int(c) for (e,), c in poly.terms()})

    def to_sympy(self) -> Tuple[Poly, int]:
        """Return ``(P, low)`` with ``self == q^low * P`` and P a polynomial."""
        low = self.low_degree
        dense = [0] * (self.degree - low + 1) if self.terms else [0]
        for e, c in self.terms.items():
            dense[e - low] = c
        return Poly(list(reversed(dense)), Q), low

    @classmethod
    def parse(cls, text: str) -> "QPoly":
        """Parse text such as ``"4+3*q+4q^2"``; ``^`` and ``**`` both work."""
        try:
            expr = expand(parse_expr(text, {"q": Q}, transformations=_TRANSFORMATIONS))
        except Exception as e:
            raise ValueError(f"cannot parse polynomial {text!r}: {e}") from None
        terms: Counter = Counter()
        for term in Add.make_args(expr):
            coeff, e = term.as_coeff_exponent(Q)
            if not (coeff.is_Integer and e.is_Integer):
                raise ValueError(f"term {term} is not an integer multiple of a q power")
            terms[int(e)] += int(coeff)
        return cls(terms=dict(terms))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max(self.terms, default=0)

    @property
    def low_degree(self) -> int:
        return min(self.terms, default=0)

    def value_at_one(self) -> int:
        return sum(self.terms.values())

    def coefficient(self, e: int) -> int:
        return self.terms.get(e, 0)

    def shift(self, k: int) -> "QPoly":
        """Multiply by ``q^k``."""
        return QPoly(terms={e + k: c for e, c in self.terms.items()})

    def reflect(self) -> "QPoly":
        """Substitute ``1/q`` for ``q``."""
        return QPoly(terms={-e: c for e, c in self.terms.items()})

    def __add__(self, other: Union["QPoly", int]) -> "QPoly":
        other = _coerce(other)
        terms = Counter(self.terms)
        terms.update(other.terms)
        return QPoly(terms=dict(terms))

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(terms={e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Union["QPoly", int]) -> "QPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "QPoly":
        return _coerce(other) - self

    def __mul__(self, other: Union["QPoly", int]) -> "QPoly":
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return QPoly()
        p, low_p = self.to_sympy()
        r, low_r = other.to_sympy()
        return QPoly.from_sympy(p * r, low_p + low_r)

    __rmul__ = __mul__

    def exact_divide(self, other: "QPoly") -> "QPoly":
        """Polynomial division that must leave no remainder.

        Raises:
            InexactDivisionError: If the remainder is non-zero.
        """
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        p, low_p = self.to_sympy()
        d, low_d = other.to_sympy()
        quotient, remainder = p.div(d)
        if not remainder.is_zero:
            raise InexactDivisionError(f"{other} does not divide {self}")
        if any(not c.is_integer for c in quotient.coeffs()):
            raise InexactDivisionError(f"{other} does not divide {self} over Z")
        return QPoly.from_sympy(quotient, low_p - low_d)

    def to_text(self, var: str = "q") -> str:
        """Ascending ``c*q^e`` terms, e.g. ``1+q+2*q^2``."""
        return _format_terms((c, _power(var, e)) for e, c in self.terms.items())

    def to_payload(self) -> Dict[str, int]:
        return {str(e): c for e, c in self.terms.items()}

    def __str__(self) -> str:
        return self.to_text()


def _coerce(value: Union[QPoly, int]) -> QPoly:
    return value if isinstance(value, QPoly) else QPoly.constant(int(value))


def product(polys: Iterable[QPoly]) -> QPoly:
    result = QPoly.constant(1)
    for p in polys:
        result = result * p
    return result


def q_int(n: int) -> QPoly:
    """``[n]_q = 1 + q + ... + q^(n-1)``."""
    return QPoly(terms={e: 1 for e in range(n)})


def q_factorial(n: int) -> QPoly:
    return product(q_int(i) for i in range(1, n + 1))


@lru_cache(maxsize=None)
def q_binomial(m: int, b: int) -> QPoly:
    """Gaussian binomial via the q-Pascal rule [m,b] = [m-1,b-1] + q^b [m-1,b]."""
    if m < 0:
        raise ValueError(f"q_binomial needs m >= 0, got {m}")
    if b < 0 or b > m:
        return QPoly()
    if b == 0 or b == m:
        return QPoly.constant(1)
    return q_binomial(m - 1, b - 1) + q_binomial(m - 1, b).shift(b)


def q_multinomial(parts: Sequence[int]) -> QPoly:
    """``[n]! / prod [p_i]!`` with ``n = sum(parts)``."""
    denominator = product(q_factorial(p) for p in parts)
    return q_factorial(sum(parts)).exact_divide(denominator)


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> QPoly:
    """The n-th cyclotomic polynomial, by dividing ``q^n - 1`` by the smaller ones."""
    if n < 1:
        raise ValueError(f"cyclotomic needs n >= 1, got {n}")
    result = QPoly(terms={n: 1, 0: -1})
    for d in divisors(n):
        if d < n:
            result = result.exact_divide(cyclotomic(int(d)))
    return result


@lru_cache(maxsize=None)
def _modulus(n: int) -> Poly:
    return cyclotomic(n).to_sympy()[0]


class CycloValue(BaseModel):
    """An element of Z[xi] for a primitive n-th root of unity xi.

    Stored as the residue modulo the n-th cyclotomic polynomial, so two values
    are equal exactly when their residues are.
    """

    model_config = ConfigDict(frozen=True)

    order: int
    """n, the order of the root of unity."""

    residue: Tuple[int, ...] = ()
    """Ascending coefficients of the reduced residue, trailing zeros removed."""

    @classmethod
    def reduce(cls, order: int, terms: Dict[int, int]) -> "CycloValue":
        """Reduce ``sum c * xi^e``; exponents may be any integers."""
        dense = [0] * order
        for e, c in terms.items():
            dense[e % order] += c
        remainder = Poly(list(reversed(dense)), Q).rem(_modulus(order))
        coeffs = [0] * order
        for (e,), c in remainder.terms():
            coeffs[e] = int(c)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return cls(order=order, residue=tuple(coeffs))

    @classmethod
    def integer(cls, order: int, value: int) -> "CycloValue":
        return cls.reduce(order, {0: value})

    def _terms(self) -> Dict[int, int]:
        return {e: c for e, c in enumerate(self.residue) if c}

    def _check_order(self, other: "CycloValue") -> None:
        if other.order != self.order:
            raise ValueError(
                f"cannot combine values of orders {self.order} and {other.order}"
            )

    def __add__(self, other: "CycloValue") -> "CycloValue":
        self._check_order(other)
        terms: Counter = Counter(self._terms())
        terms.update(other._terms())
        return CycloValue.reduce(self.order, dict(terms))

    def __neg__(self) -> "CycloValue":
        return CycloValue.reduce(self.order, {e: -c for e, c in self._terms().items()})

    def __sub__(self, other: "CycloValue") -> "CycloValue":
        return self + (-other)

    def __mul__(self, other: "CycloValue") -> "CycloValue":
        self._check_order(other)
        terms: Counter = Counter()
        for e1, c1 in self._terms().items():
            for e2, c2 in other._terms().items():
                terms[e1 + e2] += c1 * c2
        return CycloValue.reduce(self.order, dict(terms))

    def conjugate(self) -> "CycloValue":
        """Complex conjugate: xi goes to xi^-1."""
        return CycloValue.reduce(self.order, {-e: c for e, c in self._terms().items()})

    def is_real(self) -> bool:
        return self.conjugate() == self

    def is_integer(self) -> bool:
        return len(self.residue) <= 1

    def as_integer(self) -> int:
        """The value as an int.

        Raises:
            NotAnIntegerError: If the value is not a rational integer.
        """
        if not self.is_integer():
            raise NotAnIntegerError(f"{self} is not an integer")
        return self.residue[0] if self.residue else 0

    def __str__(self) -> str:
        terms = ((c, _power("z", e)) for e, c in enumerate(self.residue) if c)
        return _format_terms(terms)


def eval_at_root(f: QPoly, n: int, d: int = 1) -> CycloValue:
    """Exact value of ``f(xi^d)`` for a primitive n-th root of unity xi."""
    return CycloValue.reduce(n, _fold(f, n, d))


def _fold(f: QPoly, n: int, d: int) -> Dict[int, int]:
    folded: Counter = Counter()
    for e, c in f.terms.items():
        folded[e * d % n] += c
    return dict(folded)


class QTPoly(BaseModel):
    """A polynomial in q and t with integer coefficients."""

    model_config = ConfigDict(frozen=True)

    terms: Dict[Tuple[int, int], int] = Field(default_factory=dict)
    """(q exponent, t exponent) -> coefficient, zeros never stored."""

    @field_validator("terms")
    @classmethod
    def _drop_zeros(cls, terms):
        return {(int(a), int(b)): int(c) for (a, b), c in sorted(terms.items()) if c}

    @classmethod
    def in_q(cls, f: QPoly) -> "QTPoly":
        return cls(terms={(e, 0): c for e, c in f.terms.items()})

    @classmethod
    def in_t(cls, f: QPoly) -> "QTPoly":
        return cls(terms={(0, e): c for e, c in f.terms.items()})

    def __add__(self, other: "QTPoly") -> "QTPoly":
        total: Counter = Counter(self.terms)
        total.update(other.terms)
        return QTPoly(terms=dict(total))

    def __neg__(self) -> "QTPoly":
        return QTPoly(terms={k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "QTPoly") -> "QTPoly":
        return self + (-other)

    def value_at_one(self) -> int:
        return sum(self.terms.values())

    def to_text(self) -> str:
        def monomial(a: int, b: int) -> str:
            return "*".join(x for x in (_power("q", a), _power("t", b)) if x)

        return _format_terms((c, monomial(a, b)) for (a, b), c in self.terms.items())

    def __str__(self) -> str:
        return self.to_text()


def eval_bivariate_at_roots(f: QTPoly, k1: int, i: int, k2: int, j: int) -> CycloValue:
    """Exact ``f(z1^i, z2^j)`` for primitive roots of orders ``k1`` and ``k2``.

    Both roots are powers of one primitive root of order lcm(k1, k2).
    """
    order = int(ilcm(k1, k2))
    u, v = order // k1, order // k2
    terms: Counter = Counter()
    for (a, b), c in f.terms.items():
        terms[(a * i * u + b * j * v) % order] += c
    return CycloValue.reduce(order, dict(terms))


def _partition_content(weights: Union[Partition, Composition]) -> Composition:
    if isinstance(weights, Partition):
        return Composition(parts=weights.parts)
    if not weights.is_partition():
        raise ContentError(
            f"content {weights} is not a partition; sort it before computing charge"
        )
    return weights


def kostka_foulkes(shape: SkewShape, weights: Union[Partition, Composition]) -> QPoly:
    """Charge generating function over SSYT(shape, weights)."""
    weights = _partition_content(weights)
    tableaux = enumerate_ssyt(shape, weights)
    return QPoly.from_exponents(charge(reading_word(t)) for t in tableaux)


def modified_kf(shape: SkewShape, weights: Union[Partition, Composition]) -> QPoly:
    """Cocharge generating function over SSYT(shape, weights)."""
    weights = _partition_content(weights)
    tableaux = enumerate_ssyt(shape, weights)
    return QPoly.from_exponents(cocharge(reading_word(t)) for t in tableaux)


def kostka_number(shape: SkewShape, weights: Composition) -> int:
    """Number of SSYT of the shape with this content, any order of content."""
    return len(enumerate_ssyt(shape, weights))


def macmahon(a: int, b: int, n: int) -> QPoly:
    """Size generating function of a x b plane partitions with entries <= n."""
    cells = [(i, j) for i in range(1, a + 1) for j in range(1, b + 1)]
    numerator = product(q_int(i + j + n - 1) for i, j in cells)
    denominator = product(q_int(i + j - 1) for i, j in cells)
    return numerator.exact_divide(denominator)


def principal_specialization(lam: Partition, k: int) -> QPoly:
    """``s_lam(1, q, ..., q^(k-1))`` summed over SSYT with entries <= k."""
    tableaux = enumerate_bounded_ssyt(SkewShape(outer=lam), k)
    return QPoly.from_exponents(
        sum(sum(row) for row in t.rows) - lam.size for t in tableaux
    )


def rectangle_sieving_polynomial(lam: Partition, k: int) -> QPoly:
    """``q^(-n(lam)) s_lam(1, ..., q^(k-1))``."""
    return principal_specialization(lam, k).shift(-n_stat(lam))
