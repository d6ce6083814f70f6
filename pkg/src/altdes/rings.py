"""Exact coefficient rings for series and NCSF elements.

Rationals are :class:`fractions.Fraction`.  Polynomials in ``t`` or in
``t, q`` are :class:`Poly`: a sparse map from exponent tuples to Fractions
with an optional degree cap per variable.  A capped Poly is an element of the
quotient ring ``Q[t, q] / (t^(a+1), q^(b+1))``, so truncation never disturbs a
kept coefficient and anything with a nonzero constant term is invertible.
Every operation that discards a nonzero term sets :attr:`Poly.truncated`,
which propagates through later arithmetic.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, InversionError

Rational = Fraction


def _min_cap(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class Poly:
    """Sparse (optionally degree-capped) polynomial over the rationals."""

    __slots__ = ("terms", "caps", "names", "truncated")

    def __init__(self, terms: Mapping[tuple, object] | None = None,
                 caps: Sequence[int | None] = (None,), names: Sequence[str] | None = None,
                 truncated: bool = False):
        caps = tuple(caps)
        clean, cut = {}, False
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(caps):
                raise DomainError(f"exponent {exps} has wrong arity for caps {caps}")
            c = Fraction(c)
            if not c:
                continue
            if any(cap is not None and e > cap for e, cap in zip(exps, caps)):
                cut = True
                continue
            clean[exps] = clean.get(exps, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}
        self.caps = caps
        self.names = tuple(names) if names else ("t", "q", "u", "v")[:len(caps)]
        self.truncated = truncated or cut

    # -- construction ------------------------------------------------------
    @classmethod
    def const(cls, c, caps=(None,), names=None) -> "Poly":
        return cls({(0,) * len(caps): c}, caps, names)

    @classmethod
    def var(cls, index: int, caps=(None,), names=None, power: int = 1) -> "Poly":
        exps = [0] * len(caps)
        exps[index] = power
        return cls({tuple(exps): 1}, caps, names)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, cap: int | None = None, name: str = "t") -> "Poly":
        """Univariate polynomial from a dense list ``[c0, c1, ...]``."""
        return cls({(i,): c for i, c in enumerate(coeffs)}, (cap,), (name,))

    def _coerce(self, other):
        if isinstance(other, Poly):
            if len(other.caps) != len(self.caps):
                raise DomainError("cannot combine polynomials in different numbers of variables")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other, self.caps, self.names)
        return NotImplemented

    def _new(self, terms, other=None):
        """Result of an operation; ``terms`` must already respect the caps of both operands."""
        caps = self.caps if other is None else tuple(map(_min_cap, self.caps, other.caps))
        flag = self.truncated or (other is not None and other.truncated)
        out = object.__new__(Poly)
        out.caps, out.names, out.truncated = caps, self.names, flag
        if other is not None and (caps != self.caps or caps != other.caps):
            kept = {e: c for e, c in terms.items()
                    if c and all(cap is None or x <= cap for x, cap in zip(e, caps))}
            out.truncated = flag or len(kept) < sum(1 for c in terms.values() if c)
            out.terms = kept
        else:
            out.terms = {e: c for e, c in terms.items() if c}
        return out

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return self._new(terms, other)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._new({e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        caps = tuple(map(_min_cap, self.caps, other.caps))
        terms: dict = {}
        cut = False
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if any(cap is not None and x > cap for x, cap in zip(e, caps)):
                    cut = True
                    continue
                terms[e] = terms.get(e, 0) + c1 * c2
        out = self._new(terms, other)
        out.truncated = out.truncated or cut
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Poly.const(1, self.caps, self.names)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self * (Fraction(1) / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def inverse(self) -> "Poly":
        """Inverse in the capped quotient ring; uncapped polys invert only if constant."""
        zero = (0,) * len(self.caps)
        c0 = self.terms.get(zero)
        if not c0:
            raise InversionError("constant term is zero, polynomial is not a unit")
        if len(self.terms) == 1:
            return self._new({zero: 1 / c0})
        if any(cap is None for cap, used in zip(self.caps, self._used_vars()) if used):
            raise InversionError("non-constant polynomial is not a unit without a degree cap")
        # self = c0 (1 - u) with u nilpotent in the quotient ring
        u = self * (-1 / c0) + 1
        inv = Poly.const(1, self.caps, self.names)
        power = Poly.const(1, self.caps, self.names)
        depth = sum(cap for cap, used in zip(self.caps, self._used_vars()) if used)
        for _ in range(depth):
            power = power * u
            if not power.terms:
                break
            inv = inv + power
        out = inv * (1 / c0)
        # a non-constant polynomial never has a polynomial inverse
        out.truncated = True
        return out

    def _used_vars(self):
        return [any(e[i] for e in self.terms) for i in range(len(self.caps))]

    # -- comparison --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.caps, self.names)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- inspection --------------------------------------------------------
    def coefficient(self, *exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def degree(self, var: int = 0):
        """Degree in the given variable; ``None`` for the zero polynomial."""
        if not self.terms:
            return None
        return max(e[var] for e in self.terms)

    def coeff_list(self) -> list:
        """Dense coefficients of a univariate poly, trailing zeros trimmed."""
        if len(self.caps) != 1:
            raise DomainError("coeff_list needs a univariate polynomial")
        d = self.degree()
        if d is None:
            return []
        return [self.terms.get((i,), Fraction(0)) for i in range(d + 1)]

    def substitute(self, var: int, value) -> "Poly":
        """Set one variable to a rational value (the variable stays, with degree 0)."""
        terms: dict = {}
        for e, c in self.terms.items():
            e2 = e[:var] + (0,) + e[var + 1:]
            terms[e2] = terms.get(e2, 0) + c * Fraction(value) ** e[var]
        return self._new(terms)

    def truncate(self, caps: Sequence[int | None]) -> "Poly":
        caps = tuple(map(_min_cap, self.caps, caps))
        return Poly(self.terms, caps, self.names, self.truncated)

    def with_caps(self, caps: Sequence[int | None]) -> "Poly":
        return Poly(self.terms, caps, self.names, self.truncated)

    def __repr__(self):
        return f"Poly({format_poly(self)}, caps={self.caps})"

    def __str__(self):
        return format_poly(self)


def format_poly(p: Poly) -> str:
    if not p.terms:
        return "0"
    pieces = []
    for exps in sorted(p.terms):
        c = p.terms[exps]
        mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(p.names, exps) if e)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        pieces.append(("-" if c < 0 else "+", body))
    head_sign, head = pieces[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def poly_t(coeffs: Iterable = (), cap: int | None = None) -> Poly:
    return Poly.from_coeffs(coeffs, cap, "t")


def poly_tq(terms: Mapping[tuple, object] | None = None, t_cap: int | None = None,
            q_cap: int | None = None) -> Poly:
    return Poly(terms, (t_cap, q_cap), ("t", "q"))


def t_var(cap: int | None = None) -> Poly:
    return Poly.var(0, (cap,), ("t",))


def tq_vars(t_cap: int | None = None, q_cap: int | None = None) -> tuple[Poly, Poly]:
    caps = (t_cap, q_cap)
    return Poly.var(0, caps, ("t", "q")), Poly.var(1, caps, ("t", "q"))


def invert(c):
    """Multiplicative inverse for any supported coefficient type."""
    if isinstance(c, Poly):
        return c.inverse()
    c = Fraction(c)
    if not c:
        raise InversionError("zero is not a unit")
    return 1 / c
