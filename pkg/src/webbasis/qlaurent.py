"""
Sparse Laurent polynomials in one variable ``q`` with integer coefficients.

A value is stored as a dict ``{exponent: coefficient}`` with no zero
coefficients. Instances are treated as immutable.

>>> q = LaurentPoly.q()
>>> (q + q**-1) * (q - q**-1)
q^2-q^-2
>>> quantum_int(3)
q^2+1+q^-2
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly", "ZERO", "ONE", "Q",
    "quantum_int", "quantum_factorial", "is_palindromic", "eval_at_one",
]


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for e, c in items:
            c = clean.get(e, 0) + c
            if c:
                clean[e] = c
            else:
                clean.pop(e, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentPoly:
        # caller guarantees normal form
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def q(cls, power: int = 1) -> LaurentPoly:
        return cls._raw({power: 1})

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, coeff: int, power: int) -> LaurentPoly:
        return cls._raw({power: coeff} if coeff else {})

    # -- accessors ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            c += out.get(e, 0)
            if c:
                out[e] = c
            else:
                del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly._raw({e + eb: c * cb for e, c in a.items()})
        out: dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                out[e] = out.get(e, 0) + ca * cb
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials are invertible in Z[q, q^-1]")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            return LaurentPoly._raw({e * k: c ** (-k)})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q**k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def bar(self) -> LaurentPoly:
        """The involution ``q -> q^-1``."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def divmod_exact(self, other: LaurentPoly) -> LaurentPoly:
        """
        Exact quotient ``self / other`` in Z[q, q^-1].

        Raises ``ArithmeticError`` when ``other`` does not divide ``self``.
        """
        if not other:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self:
            return ZERO
        rem = dict(self._terms)
        lead_e = other.max_degree()
        lead_c = other._terms[lead_e]
        low_other = other.min_degree()
        floor = min(rem) - low_other
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            shift = top - lead_e
            if shift < floor:
                raise ArithmeticError("inexact Laurent division")
            c, r = divmod(rem[top], lead_c)
            if r:
                raise ArithmeticError("inexact Laurent division")
            quot[shift] = c
            for e, oc in other._terms.items():
                k = e + shift
                v = rem.get(k, 0) - c * oc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly._raw(quot)

    def __floordiv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.divmod_exact(other)

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- evaluation / serialization ------------------------------------------

    def evaluate(self, x):
        return sum(c * x ** e for e, c in self._terms.items())

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data) -> LaurentPoly:
        pairs = [(int(e), int(c)) for e, c in data]
        exps = [e for e, _ in pairs]
        if exps != sorted(set(exps)) or any(c == 0 for _, c in pairs):
            raise ValueError(f"not a canonical Laurent encoding: {data!r}")
        return cls._raw(dict(pairs))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if a == 1 else f"{a}{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __repr__(self):
        return str(self)


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
Q = LaurentPoly._raw({1: 1})


def quantum_int(k: int) -> LaurentPoly:
    """``[k]_q = q^(k-1) + q^(k-3) + ... + q^(-(k-1))``."""
    if k < 0:
        raise ValueError("quantum integer needs k >= 0")
    return LaurentPoly._raw({k - 1 - 2 * j: 1 for j in range(k)})


def quantum_factorial(k: int) -> LaurentPoly:
    if k < 0:
        raise ValueError("quantum factorial needs k >= 0")
    return reduce(lambda acc, j: acc * quantum_int(j), range(1, k + 1), ONE)


def is_palindromic(a: LaurentPoly) -> bool:
    """
    True iff ``a`` is ``q^t f`` with ``f(q) = f(q^-1)``, allowing half-integer
    centres ``t``. Zero counts as palindromic.

    >>> is_palindromic(LaurentPoly({2: 1, 1: 1}))
    True
    >>> is_palindromic(LaurentPoly({2: 1, 0: 1, -1: 1}))
    False
    """
    if not a:
        return True
    lo, hi = a.min_degree(), a.max_degree()
    return all(a.coeff(lo + k) == a.coeff(hi - k) for k in range(hi - lo + 1))


def eval_at_one(a: LaurentPoly) -> int:
    return sum(a._terms.values())
