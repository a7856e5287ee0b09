"""Exact sparse arithmetic for bivariate polynomials over the integers.

A polynomial in x and y is stored as a mapping from exponent pairs
(r, s) to nonzero arbitrary-precision integer coefficients.  Values are
immutable after construction; every operation returns a new polynomial
in canonical form (no stored zero coefficient), so instances can be
shared across threads or processes without coordination.

Two term orders matter:

* the canonical order -- (total degree, x-exponent, y-exponent) -- is a
  proper monomial order and drives hashing, JSON serialization and
  exact division;
* the display order -- (y-exponent, x-exponent) -- groups terms the way
  the text renderer prints them, constant first, pure-x terms next.
"""

from __future__ import annotations

import re
from types import MappingProxyType
from typing import Iterator, NamedTuple

from .errors import NonExactDivision


class Monomial(NamedTuple):
    """An exponent pair x^r * y^s, totally ordered by (r+s, r, s)."""

    r: int
    s: int

    def sort_key(self) -> tuple[int, int, int]:
        return (self.r + self.s, self.r, self.s)

    def __lt__(self, other) -> bool:
        o = Monomial(*other)
        return self.sort_key() < o.sort_key()

    def __le__(self, other) -> bool:
        o = Monomial(*other)
        return self.sort_key() <= o.sort_key()

    def __gt__(self, other) -> bool:
        o = Monomial(*other)
        return self.sort_key() > o.sort_key()

    def __ge__(self, other) -> bool:
        o = Monomial(*other)
        return self.sort_key() >= o.sort_key()


def _display_key(m: Monomial) -> tuple[int, int]:
    return (m.s, m.r)


# one term of the text grammar, e.g. "12", "x", "x^5", "y^2"
_FACTOR_RE = re.compile(r"^(?:(\d+)|([xy])(?:\^(\d+))?)$")


class BiPoly:
    """A sparse bivariate polynomial with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        canon: dict[Monomial, int] = {}
        if terms:
            for key, c in (terms.items() if hasattr(terms, "items") else terms):
                if c == 0:
                    continue
                r, s = key
                if r < 0 or s < 0:
                    raise ValueError(f"negative exponent in monomial {key!r}")
                canon[Monomial(r, s)] = c
        self._terms = canon
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> "BiPoly":
        return cls({Monomial(0, 0): c})

    @classmethod
    def monomial(cls, c: int, r: int, s: int) -> "BiPoly":
        return cls({Monomial(r, s): c})

    # -- inspection ---------------------------------------------------

    @property
    def terms(self) -> "MappingProxyType[Monomial, int]":
        """The term map as a read-only view."""
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[tuple[Monomial, int]]:
        """Terms in canonical order."""
        return iter(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, r: int, s: int) -> int:
        return self._terms.get(Monomial(r, s), 0)

    def constant_term(self) -> int:
        return self._terms.get(Monomial(0, 0), 0)

    def total_degree(self) -> int:
        """Max of r+s over stored terms; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(m.r + m.s for m in self._terms)

    def leading_term(self) -> tuple[Monomial, int]:
        """Largest term in the canonical order; errors on zero."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=Monomial.sort_key)
        return m, self._terms[m]

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "BiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                del out[m]
        return _wrap(out)

    def __radd__(self, other) -> "BiPoly":
        return self.__add__(other)

    def __neg__(self) -> "BiPoly":
        return _wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "BiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other) -> "BiPoly":
        return (-self).__add__(other)

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return _wrap({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict = {}
        get = out.get
        for (r1, s1), c1 in self._terms.items():
            for (r2, s2), c2 in other._terms.items():
                k = (r1 + r2, s1 + s2)
                v = get(k, 0) + c1 * c2
                out[k] = v
        return BiPoly(out)

    def __rmul__(self, other) -> "BiPoly":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "BiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"BiPoly({self.render()!r})"

    # -- derived operations -------------------------------------------

    def evaluate(self, x0, y0):
        """Exact value at (x0, y0); exact for int/Fraction arguments."""
        total = 0
        for (r, s), c in self._terms.items():
            total += c * x0**r * y0**s
        return total

    def reduce_mod(self, m: int) -> "BiPoly":
        """Reduce every coefficient to its least nonnegative residue."""
        if m < 2:
            raise ValueError("modulus must be at least 2")
        return BiPoly({k: c % m for k, c in self._terms.items()})

    def swap_xy(self) -> "BiPoly":
        """The polynomial with the roles of x and y exchanged."""
        return _wrap({Monomial(m.s, m.r): c for m, c in self._terms.items()})

    def termwise_abs(self) -> "BiPoly":
        return _wrap({m: abs(c) for m, c in self._terms.items()})

    def abs_coefficient_sum(self) -> int:
        return sum(abs(c) for c in self._terms.values())

    def max_abs_coefficient(self) -> int:
        if not self._terms:
            return 0
        return max(abs(c) for c in self._terms.values())

    # -- serialization ------------------------------------------------

    def render(self) -> str:
        """Text form, e.g. ``1 - x^8 - 8*x^5*y`` (display term order)."""
        if not self._terms:
            return "0"
        pieces = []
        for m in sorted(self._terms, key=_display_key):
            c = self._terms[m]
            mag = abs(c)
            factors = []
            if m.r:
                factors.append("x" if m.r == 1 else f"x^{m.r}")
            if m.s:
                factors.append("y" if m.s == 1 else f"y^{m.s}")
            if not factors or mag != 1:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f"{' - ' if c < 0 else ' + '}{body}")
        return "".join(pieces)

    @classmethod
    def parse(cls, text: str) -> "BiPoly":
        """Inverse of :meth:`render`; accepts any whitespace spacing."""
        compact = text.replace(" ", "")
        if compact in ("", "0"):
            return ZERO
        out: dict[tuple[int, int], int] = {}
        pos = 0
        sign = 1
        if compact[0] in "+-":
            sign = -1 if compact[0] == "-" else 1
            pos = 1
        for tok in re.split(r"([+-])", compact[pos:]):
            if tok == "":
                raise ValueError(f"malformed polynomial text: {text!r}")
            if tok in "+-":
                sign = -1 if tok == "-" else 1
                continue
            coeff, r, s = 1, 0, 0
            saw_coeff = False
            for part in tok.split("*"):
                m = _FACTOR_RE.match(part)
                if m is None:
                    raise ValueError(f"bad factor {part!r} in {text!r}")
                digits, var, exp = m.groups()
                if digits is not None:
                    if saw_coeff:
                        raise ValueError(f"two coefficients in term {tok!r}")
                    coeff = int(digits)
                    saw_coeff = True
                elif var == "x":
                    r += int(exp) if exp else 1
                else:
                    s += int(exp) if exp else 1
            key = (r, s)
            out[key] = out.get(key, 0) + sign * coeff
            sign = 1
        return cls(out)

    def to_json_dict(self) -> dict:
        """JSON form with decimal-string coefficients, canonical order."""
        return {
            "terms": [
                {"r": m.r, "s": m.s, "c": str(c)} for m, c in self.items()
            ]
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "BiPoly":
        terms = {}
        for t in obj["terms"]:
            key = (int(t["r"]), int(t["s"]))
            terms[key] = terms.get(key, 0) + int(t["c"])
        return cls(terms)


def _wrap(canon: dict) -> BiPoly:
    # internal: keys are already Monomial instances and values nonzero
    p = BiPoly.__new__(BiPoly)
    p._terms = canon
    p._hash = None
    return p


def _coerce(other):
    if isinstance(other, BiPoly):
        return other
    if isinstance(other, int):
        return BiPoly.constant(other)
    return NotImplemented


ZERO = BiPoly()
ONE = BiPoly.constant(1)
X = BiPoly.monomial(1, 1, 0)
Y = BiPoly.monomial(1, 0, 1)


def exact_div(a: BiPoly, b: BiPoly) -> BiPoly:
    """Quotient q with q*b == a, or raise.

    Monomial-ordered long division.  Raises :class:`NonExactDivision`
    as soon as a leading term fails to divide; a wrong-but-silent
    quotient would corrupt every determinant built on top of it.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    if b == ONE:
        return a
    bm, bc = b.leading_term()
    bterms = list(b.terms.items())
    rem = dict(a.terms)
    quot: dict[tuple[int, int], int] = {}
    while rem:
        lm = max(rem, key=Monomial.sort_key)
        lc = rem[lm]
        dr, ds = lm.r - bm.r, lm.s - bm.s
        if dr < 0 or ds < 0 or lc % bc != 0:
            raise NonExactDivision(
                f"leading term {lc}*x^{lm.r}*y^{lm.s} not divisible by "
                f"{bc}*x^{bm.r}*y^{bm.s}"
            )
        qc = lc // bc
        quot[(dr, ds)] = qc
        for m2, c2 in bterms:
            k = Monomial(m2.r + dr, m2.s + ds)
            v = rem.get(k, 0) - qc * c2
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return BiPoly(quot)
