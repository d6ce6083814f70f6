"""Truncated formal power series with exact coefficients.

A :class:`TruncatedSeries` stores the ordinary coefficients of ``x^0..x^N``.
Coefficients may be ints, Fractions or :class:`~altdes.rings.Poly`; the
exponential view (coefficient times ``n!``) is only a read accessor.
Binary operations return a series of order ``min`` of the operands' orders.

The named series below never need an irrational number: every occurrence of
sqrt(3) in the trigonometric closed forms is paired so the Taylor
coefficients are rational (``sqrt(3) sinh(sqrt(3) x / 2)`` has coefficients
``3^(k+1) / (2^(2k+1) (2k+1)!)``), and multisection by the cube roots of
unity is done by index selection.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Callable, Iterable

from .errors import DomainError
from .rings import Poly, invert, tq_vars


def _zero_like(c):
    return c * 0


class TruncatedSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        coeffs = tuple(Fraction(c) if isinstance(c, int) else c for c in coeffs)
        if not coeffs:
            raise DomainError("a truncated series needs at least the constant term")
        self.coeffs = coeffs

    @classmethod
    def from_egf(cls, values: Iterable) -> "TruncatedSeries":
        """Series whose n!-scaled coefficients are ``values``."""
        return cls(Fraction(v) / math.factorial(n) if not isinstance(v, Poly)
                   else v * Fraction(1, math.factorial(n)) for n, v in enumerate(values))

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls([c] + [_zero_like(c)] * order)

    @classmethod
    def monomial(cls, n: int, order: int, c=1) -> "TruncatedSeries":
        zero = _zero_like(c)
        return cls([c if i == n else zero for i in range(order + 1)])

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def egf(self) -> list:
        """Coefficients multiplied by ``n!``."""
        return [c * math.factorial(n) for n, c in enumerate(self.coeffs)]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise DomainError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[:order + 1])

    # -- arithmetic --------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._lift(other)
        N = min(self.order, other.order)
        return TruncatedSeries(self.coeffs[i] + other.coeffs[i] for i in range(N + 1))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scalar_mul(other)
        a, b = self.coeffs, other.coeffs
        N = min(self.order, other.order)
        out = []
        for n in range(N + 1):
            acc = a[0] * b[n]
            for k in range(1, n + 1):
                if a[k] and b[n - k]:
                    acc = acc + a[k] * b[n - k]
            out.append(acc)
        return TruncatedSeries(out)

    def __rmul__(self, other):
        return self.scalar_mul(other)

    def scalar_mul(self, c) -> "TruncatedSeries":
        return TruncatedSeries(a * c for a in self.coeffs)

    def reciprocal(self) -> "TruncatedSeries":
        a = self.coeffs
        inv0 = invert(a[0])
        b = [inv0]
        for n in range(1, len(a)):
            acc = _zero_like(inv0)
            for k in range(1, n + 1):
                if a[k]:
                    acc = acc + a[k] * b[n - k]
            b.append(-(inv0 * acc))
        return TruncatedSeries(b)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.reciprocal()
        return self.scalar_mul(invert(other))

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.reciprocal() ** (-k)
        out = TruncatedSeries.constant(self.coeffs[0] * 0 + 1, self.order)
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> "TruncatedSeries":
        """Termwise derivative; the result has order one less."""
        if self.order == 0:
            raise DomainError("derivative of an order-0 series has no known coefficients")
        return TruncatedSeries(self.coeffs[n] * n for n in range(1, len(self.coeffs)))

    def scale_argument(self, a) -> "TruncatedSeries":
        """``s(a x)``: coefficient of ``x^n`` multiplied by ``a^n``."""
        out, power = [], None
        for n, c in enumerate(self.coeffs):
            power = _one_like(a) if n == 0 else power * a
            out.append(c * power)
        return TruncatedSeries(out)

    def multisect(self, m: int, r: int) -> "TruncatedSeries":
        """Keep coefficients of ``x^n`` with ``n = r (mod m)``."""
        if not 0 <= r < m:
            raise DomainError(f"need 0 <= r < m, got r={r}, m={m}")
        return TruncatedSeries(c if n % m == r else _zero_like(c)
                               for n, c in enumerate(self.coeffs))

    # -- comparison / output -----------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def first_difference(self, other: "TruncatedSeries"):
        """Smallest degree where the two series differ (up to the common order), or None."""
        for n in range(min(self.order, other.order) + 1):
            if self.coeffs[n] != other.coeffs[n]:
                return n
        return None

    def to_strings(self, egf: bool = False) -> list[str]:
        values = self.egf() if egf else list(self.coeffs)
        return [str(v) for v in values]

    def to_json(self, egf: bool = False) -> str:
        return json.dumps(self.to_strings(egf))

    def __repr__(self):
        return f"TruncatedSeries([{', '.join(self.to_strings())}])"


def _one_like(a):
    return a * 0 + 1


def _from_rule(rule: Callable[[int], Fraction], N: int) -> TruncatedSeries:
    return TruncatedSeries(rule(n) for n in range(N + 1))


def _series_even_odd(N, parity, coeff):
    return _from_rule(lambda n: coeff(n) / math.factorial(n) if n % 2 == parity else Fraction(0), N)


def sin_series(N: int, a=Fraction(1)) -> TruncatedSeries:
    """sin(a x) for rational a."""
    return _series_even_odd(N, 1, lambda n: (-1) ** (n // 2) * Fraction(a) ** n)


def cos_series(N: int, a=Fraction(1)) -> TruncatedSeries:
    return _series_even_odd(N, 0, lambda n: (-1) ** (n // 2) * Fraction(a) ** n)


def exp_series(N: int) -> TruncatedSeries:
    return _from_rule(lambda n: Fraction(1, math.factorial(n)), N)


def cosh_sqrt(N: int, s: Fraction) -> TruncatedSeries:
    """cosh(sqrt(s) x): coefficient ``s^k / (2k)!`` at ``x^(2k)``."""
    return _series_even_odd(N, 0, lambda n: Fraction(s) ** (n // 2))


def sqrt_sinh_sqrt(N: int, s: Fraction) -> TruncatedSeries:
    """sqrt(s) sinh(sqrt(s) x): coefficient ``s^(k+1) / (2k+1)!`` at ``x^(2k+1)``."""
    return _series_even_odd(N, 1, lambda n: Fraction(s) ** (n // 2 + 1))


def sec_plus_tan(N: int) -> TruncatedSeries:
    """(1 + sin x) / cos x, computed by series division (independent of Euler numbers)."""
    return (1 + sin_series(N)) / cos_series(N)


def euler_series(N: int) -> TruncatedSeries:
    """The Euler-number EGF sum E_n x^n/n! built from the boustrophedon numbers."""
    from .perm import euler_numbers
    return TruncatedSeries.from_egf(euler_numbers(N))


HALF = Fraction(1, 2)
THREE_QUARTERS = Fraction(3, 4)


def _builders():
    def sin_half(N):
        return sin_series(N, HALF)

    def cos_half(N):
        return cos_series(N, HALF)

    def sqrt3_sinh_half(N):
        # sqrt3 * sinh(sqrt3 x / 2) = 2 * (sqrt(3/4) sinh(sqrt(3/4) x))
        return sqrt_sinh_sqrt(N, THREE_QUARTERS) * 2

    def cosh_sqrt3_half(N):
        return cosh_sqrt(N, THREE_QUARTERS)

    def cos(N):
        return cos_series(N)

    def sin(N):
        return sin_series(N)

    def cosh_sqrt3(N):
        return cosh_sqrt(N, 3)

    def sqrt3_sinh_sqrt3(N):
        return sqrt_sinh_sqrt(N, 3)

    def denom_half(N):
        return 3 * cos_half(N) - sqrt3_sinh_half(N)

    def denom_full(N):
        return 3 * cos(N) + 4 - cosh_sqrt3(N)

    def trisection_num(N):
        E = sec_plus_tan(N)
        return E.multisect(3, 0) - E.multisect(3, 1)

    def F_closed(N):
        return (3 * sin_half(N) + 3 * cosh_sqrt3_half(N)) / denom_half(N)

    def F_reciprocal(N):
        return trisection_num(N).reciprocal()

    def F1(N):
        return (sqrt3_sinh_sqrt3(N) + 3 * sin(N)) / denom_full(N)

    def F2(N):
        num = 2 * sin_half(N) * sqrt3_sinh_half(N) + 6 * cos_half(N) * cosh_sqrt3_half(N)
        return num / denom_full(N)

    def G1(N):
        return 4 * cos_half(N) * sqrt3_sinh_half(N) / denom_full(N)

    def G2(N):
        num = (6 * cos_half(N) * cosh_sqrt3_half(N) + 2 * sin_half(N) * sqrt3_sinh_half(N)
               + 2 - 2 * cosh_sqrt3(N))
        return num / denom_full(N)

    def C_series(N):
        E = sec_plus_tan(N)
        return (E.multisect(3, 1) - E.multisect(3, 2)) / trisection_num(N)

    def D_series(N):
        E = sec_plus_tan(N)
        num = E.multisect(3, 2) - (E.multisect(3, 0) - 1)
        return num / trisection_num(N)

    def C_trig(N):
        return 2 * sqrt3_sinh_half(N) / denom_half(N)

    def D_trig(N):
        num = 3 * sin_half(N) - 3 * cos_half(N) + 3 * cosh_sqrt3_half(N) - sqrt3_sinh_half(N)
        return num / denom_half(N)

    return {
        "sin_half": sin_half,
        "cos_half": cos_half,
        "sqrt3_sinh_half": sqrt3_sinh_half,
        "cosh_sqrt3_half": cosh_sqrt3_half,
        "sin": sin,
        "cos": cos,
        "cosh_sqrt3": cosh_sqrt3,
        "sqrt3_sinh_sqrt3": sqrt3_sinh_sqrt3,
        "exp": exp_series,
        "sec_plus_tan": sec_plus_tan,
        "euler_trisection_num": trisection_num,
        "denominator": denom_half,
        "F_closed": F_closed,
        "F_reciprocal": F_reciprocal,
        "F1": F1,
        "F2": F2,
        "G1": G1,
        "G2": G2,
        "C_series": C_series,
        "D_series": D_series,
        "C_trig": C_trig,
        "D_trig": D_trig,
    }


NAMED_SERIES = _builders()


def named_series(name: str, N: int) -> TruncatedSeries:
    try:
        build = NAMED_SERIES[name]
    except KeyError:
        raise DomainError(f"unknown series {name!r}; known: {', '.join(sorted(NAMED_SERIES))}")
    return build(N)


# -- q,t generating functions ----------------------------------------------

def _euler_over(N, caps, names=("t", "q")):
    E = sec_plus_tan(N)
    return TruncatedSeries(Poly.const(c, caps, names) for c in E.coeffs)


def remmel_rhs(n_max: int, t_deg: int, q_deg: int) -> list[Poly]:
    """x^n coefficients of ``sum_k t^k prod_{j<=k} E(x q^j)`` in Q[t,q]/(t^(t_deg+1), q^(q_deg+1)).

    Terms with k > t_deg carry t^k and vanish in the quotient.
    """
    t, q = tq_vars(t_deg, q_deg)
    E = _euler_over(n_max, (t_deg, q_deg))
    total = TruncatedSeries.constant(t * 0, n_max)
    prod = TruncatedSeries.constant(t * 0 + 1, n_max)
    q_power = t * 0 + 1
    t_power = t * 0 + 1
    for k in range(t_deg + 1):
        prod = prod * E.scale_argument(q_power)
        total = total + prod * t_power
        q_power = q_power * q
        t_power = t_power * t
    return list(total.coeffs)


def altmaj_product(n_max: int, q_deg: int) -> list[Poly]:
    """x^n coefficients of ``prod_{j>=0} E(x q^j)`` modulo q^(q_deg+1).

    Coefficients are (t, q) polynomials with t capped at degree 0.  Factor j
    contributes ``x^m q^(jm)``, so j > q_deg is 1 in the quotient.
    """
    t, q = tq_vars(0, q_deg)
    E = _euler_over(n_max, (0, q_deg))
    prod = TruncatedSeries.constant(q * 0 + 1, n_max)
    q_power = q * 0 + 1
    for _ in range(q_deg + 1):
        prod = prod * E.scale_argument(q_power)
        q_power = q_power * q
    return list(prod.coeffs)


def eulerian_series(N: int, t_cap: int | None = None, alternating: bool = False) -> TruncatedSeries:
    """``(1 - t) / (1 - t B((1 - t) x))`` with B = e^x, or sec + tan when ``alternating``.

    The constant term ``1 - t`` is a unit only in a t-capped ring; the default
    cap N + 1 keeps every A_n(t), n <= N, exact.
    """
    cap = N + 1 if t_cap is None else t_cap
    t = Poly.var(0, (cap,), ("t",))
    base = sec_plus_tan(N) if alternating else exp_series(N)
    B = TruncatedSeries(Poly.const(c, (cap,), ("t",)) for c in base.coeffs)
    scaled = B.scale_argument(1 - t)
    return (1 - t) * (1 - scaled * t).reciprocal()


def eulerian_polynomials(N: int, alternating: bool = False) -> list[list[int]]:
    """Integer coefficient lists of A_n(t) (or the alternating analogue), n = 0..N."""
    s = eulerian_series(N, alternating=alternating)
    out = []
    for n, c in enumerate(s.egf()):
        coeffs = c.coeff_list()
        if any(v.denominator != 1 for v in coeffs):
            raise ArithmeticError(f"non-integral Eulerian coefficient at n={n}")
        out.append([int(v) for v in coeffs])
    return out
