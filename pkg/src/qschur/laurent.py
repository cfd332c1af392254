"""Exact Laurent polynomials in one variable v over the integers.

A polynomial is stored as a dict mapping exponents to nonzero integer
coefficients, so equality of values coincides with equality of the
canonical representation.  On top of the ring operations this module
provides the bar involution (v -> v^-1) and the quantum combinatorics
used everywhere else in the package:

* ``balanced_bracket(i)``    -- (v^i - v^-i) / (v - v^-1), symmetric in
  the sense bar([i]) = [i];
* ``unbalanced_bracket(i)``  -- (v^2i - 1) / (v^2 - 1), a polynomial in
  v^2 only;
* factorials, binomial coefficients and trinomial (three-part
  multinomial) coefficients built from either bracket, including
  binomials with an arbitrary integer on top, defined through the
  falling product divided by a bracket factorial;
* entrywise vector versions of the binomial and trinomial.

All divisions are exact divisions in Z[v, v^-1] and raise
ExactDivisionError when a remainder appears, rather than ever rounding.

>>> print(balanced_bracket(3))
v^-2 + 1 + v^2
>>> print(unbalanced_bracket(-1))
-v^-2
>>> balanced_binomial(4, 2) == LaurentPoly({-4: 1, -2: 1, 0: 2, 2: 1, 4: 1})
True
>>> balanced_binomial(2, 3).is_zero()
True
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from typing import Iterable, Iterator

from .errors import DimensionMismatch, DomainError, ExactDivisionError

__all__ = [
    "LaurentPoly",
    "ZERO",
    "ONE",
    "V",
    "VINV",
    "v_power",
    "bar",
    "balanced_bracket",
    "unbalanced_bracket",
    "balanced_factorial",
    "unbalanced_factorial",
    "balanced_binomial",
    "unbalanced_binomial",
    "balanced_trinomial",
    "unbalanced_trinomial",
    "vector_binomial",
    "vector_trinomial",
]


class LaurentPoly:
    """An element of Z[v, v^-1].

    The term dict is normalized on construction (zero coefficients are
    dropped) and never mutated afterwards, so instances may be shared,
    compared and hashed freely.

    >>> p = LaurentPoly({1: 1, -1: 1})
    >>> p * p == LaurentPoly({2: 1, 0: 2, -2: 1})
    True
    >>> p.bar() == p
    True
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict[int, int] | None = None):
        if terms:
            self._terms = {e: c for e, c in terms.items() if c}
        else:
            self._terms = {}
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        # Trusted constructor: terms must already contain no zeros.
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def from_int(cls, c: int) -> "LaurentPoly":
        return cls._raw({0: c}) if c else cls._raw({})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "LaurentPoly":
        terms: dict[int, int] = {}
        for e, c in pairs:
            terms[e] = terms.get(e, 0) + c
        return cls(terms)

    def to_pairs(self) -> list[tuple[int, int]]:
        """Canonical form: [exponent, coefficient] pairs, ascending."""
        return [(e, self._terms[e]) for e in sorted(self._terms)]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        return LaurentPoly._raw(terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            s = terms.get(e, 0) - c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        return LaurentPoly._raw(terms)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly.from_int(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) > len(b):
            a, b = b, a
        terms: dict[int, int] = {}
        get = terms.get
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                s = get(e, 0) + ca * cb
                if s:
                    terms[e] = s
                elif e in terms:
                    del terms[e]
        return LaurentPoly._raw(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) == 1:
                ((e, c),) = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly._raw({e * n: 1 if n % 2 == 0 else c})
            raise DomainError("negative powers only defined for unit monomials")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by the monomial v^e."""
        if not e:
            return self
        return LaurentPoly._raw({k + e: c for k, c in self._terms.items()})

    def bar(self) -> "LaurentPoly":
        """The involution sending v to v^-1."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def min_exp(self) -> int:
        if not self._terms:
            raise DomainError("zero polynomial has no valuation")
        return min(self._terms)

    def max_exp(self) -> int:
        if not self._terms:
            raise DomainError("zero polynomial has no degree")
        return max(self._terms)

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def divexact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ExactDivisionError on any remainder.

        >>> num = balanced_bracket(2) * balanced_bracket(3)
        >>> print(num.divexact(balanced_bracket(3)))
        v^-1 + v
        """
        if divisor.is_zero():
            raise ExactDivisionError("division by zero")
        if self.is_zero():
            return ZERO
        rem = dict(self._terms)
        dmax = divisor.max_exp()
        dlead = divisor._terms[dmax]
        # an exact quotient cannot reach below this exponent
        emin = self.min_exp() - divisor.min_exp()
        out: dict[int, int] = {}
        while rem:
            rmax = max(rem)
            q, r = divmod(rem[rmax], dlead)
            if r:
                raise ExactDivisionError("leading coefficient does not divide")
            e = rmax - dmax
            if e < emin:
                raise ExactDivisionError("remainder after full descent")
            out[e] = q
            for de, dc in divisor._terms.items():
                k = de + e
                s = rem.get(k, 0) - dc * q
                if s:
                    rem[k] = s
                elif k in rem:
                    del rem[k]
        return LaurentPoly._raw(out)

    def evaluate(self, x: Fraction | int) -> Fraction:
        """Exact evaluation at a nonzero rational point."""
        x = Fraction(x)
        if not x:
            raise DomainError("cannot evaluate a Laurent polynomial at 0")
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * x**e
        return total

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self._terms.items()))!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for e in sorted(self._terms):
            c = self._terms[e]
            if e == 0:
                t = str(abs(c))
            else:
                head = "" if abs(c) == 1 else f"{abs(c)}*"
                t = f"{head}v" if e == 1 else f"{head}v^{e}"
            if not chunks:
                chunks.append(t if c > 0 else "-" + t)
            else:
                chunks.append(("+ " if c > 0 else "- ") + t)
        return " ".join(chunks)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.to_pairs())


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
V = LaurentPoly._raw({1: 1})
VINV = LaurentPoly._raw({-1: 1})


def v_power(e: int) -> LaurentPoly:
    """The monomial v^e."""
    return LaurentPoly._raw({e: 1})


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


@cache
def balanced_bracket(i: int) -> LaurentPoly:
    """The symmetric quantum integer (v^i - v^-i) / (v - v^-1).

    >>> print(balanced_bracket(-1))
    -1
    >>> balanced_bracket(0).is_zero()
    True
    """
    if i == 0:
        return ZERO
    if i < 0:
        return -balanced_bracket(-i)
    return LaurentPoly._raw({i - 1 - 2 * k: 1 for k in range(i)})


@cache
def unbalanced_bracket(i: int) -> LaurentPoly:
    """The one-sided quantum integer (v^2i - 1) / (v^2 - 1).

    >>> print(unbalanced_bracket(2))
    1 + v^2
    >>> unbalanced_bracket(1) == ONE
    True
    """
    if i == 0:
        return ZERO
    if i > 0:
        return LaurentPoly._raw({2 * k: 1 for k in range(i)})
    return LaurentPoly._raw({-2 * k: -1 for k in range(1, -i + 1)})


@cache
def balanced_factorial(t: int) -> LaurentPoly:
    if t < 0:
        raise DomainError("factorial of a negative integer")
    if t == 0:
        return ONE
    return balanced_factorial(t - 1) * balanced_bracket(t)


@cache
def unbalanced_factorial(t: int) -> LaurentPoly:
    if t < 0:
        raise DomainError("factorial of a negative integer")
    if t == 0:
        return ONE
    return unbalanced_factorial(t - 1) * unbalanced_bracket(t)


@cache
def balanced_binomial(top: int, t: int) -> LaurentPoly:
    """Binomial from symmetric brackets; ``top`` may be any integer.

    Defined as the falling product [top][top-1]...[top-t+1] divided by
    the factorial [t]!.  Vanishes exactly when 0 <= top < t.

    >>> print(balanced_binomial(-1, 1))
    -1
    >>> print(balanced_binomial(-2, 2))
    v^-2 + 1 + v^2
    """
    if t < 0:
        raise DomainError("binomial with negative lower index")
    if t == 0:
        return ONE
    num = ONE
    for s in range(t):
        num = num * balanced_bracket(top - s)
        if num.is_zero():
            return ZERO
    return num.divexact(balanced_factorial(t))


@cache
def unbalanced_binomial(top: int, t: int) -> LaurentPoly:
    """Binomial from one-sided brackets; ``top`` may be any integer.

    >>> print(unbalanced_binomial(3, 2))
    1 + v^2 + v^4
    >>> unbalanced_binomial(1, 3).is_zero()
    True
    """
    if t < 0:
        raise DomainError("binomial with negative lower index")
    if t == 0:
        return ONE
    num = ONE
    for s in range(t):
        num = num * unbalanced_bracket(top - s)
        if num.is_zero():
            return ZERO
    return num.divexact(unbalanced_factorial(t))


@cache
def balanced_trinomial(a: int, b: int, c: int) -> LaurentPoly:
    """[a+b+c]! / ([a]! [b]! [c]!) for nonnegative a, b, c."""
    if a < 0 or b < 0 or c < 0:
        raise DomainError("trinomial parts must be nonnegative")
    return balanced_binomial(a + b + c, a) * balanced_binomial(b + c, b)


@cache
def unbalanced_trinomial(a: int, b: int, c: int) -> LaurentPoly:
    """Same three-part multinomial built from one-sided brackets."""
    if a < 0 or b < 0 or c < 0:
        raise DomainError("trinomial parts must be nonnegative")
    return unbalanced_binomial(a + b + c, a) * unbalanced_binomial(b + c, b)


def vector_binomial(mu: tuple[int, ...], lam: tuple[int, ...]) -> LaurentPoly:
    """Entrywise product of balanced binomials [mu_i choose lam_i].

    The top vector may have arbitrary integer entries; the bottom must
    be nonnegative.

    >>> print(vector_binomial((2, 1), (1, 1)))
    v^-1 + v
    >>> vector_binomial((1, 0), (0, 1)).is_zero()
    True
    """
    if len(mu) != len(lam):
        raise DimensionMismatch("vector lengths differ")
    out = ONE
    for m, t in zip(mu, lam):
        if t < 0:
            raise DomainError("binomial with negative lower index")
        out = out * balanced_binomial(m, t)
        if out.is_zero():
            return ZERO
    return out


def vector_trinomial(
    total: tuple[int, ...],
    a: tuple[int, ...],
    b: tuple[int, ...],
    c: tuple[int, ...],
) -> LaurentPoly:
    """Entrywise product of balanced trinomials; requires total = a+b+c."""
    if not (len(total) == len(a) == len(b) == len(c)):
        raise DimensionMismatch("vector lengths differ")
    out = ONE
    for t, x, y, z in zip(total, a, b, c):
        if x + y + z != t:
            raise DomainError("trinomial parts must sum to the total")
        out = out * balanced_trinomial(x, y, z)
        if out.is_zero():
            return ZERO
    return out
