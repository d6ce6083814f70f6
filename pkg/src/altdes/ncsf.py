"""Noncommutative symmetric functions in the complete (h) and ribbon (r) bases.

Elements are sparse maps from compositions (plain tuples) to coefficients,
truncated above a tracked degree.  Products are taken in the h basis, where
``h_K h_L = h_{K || L}``; ``h_L = sum_{K <= L} r_K`` links the two bases.

``phi`` sends ``h_n`` to ``x^n / n!`` and ``phi_hat`` sends it to
``E_n x^n / n!``; both extend multiplicatively to algebra maps into
:class:`~altdes.series.TruncatedSeries`, which turns the NCSF identities here
into generating functions for descents and alternating descents.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .errors import BasisError, DomainError, InversionError, ResourceError
from .perm import _coarsenings, compositions, composition_maj, euler_multinomial, multinomial
from .rings import Poly, invert as invert_coeff
from .series import TruncatedSeries

MAX_DEGREE = 16
DEFAULT_DEGREE = 10


def _check_degree(N):
    if N < 0:
        raise DomainError("degree must be nonnegative")
    if N > MAX_DEGREE:
        raise ResourceError(f"NCSF degree {N} exceeds cap {MAX_DEGREE}")


class NcsfElement:
    __slots__ = ("basis", "terms", "max_degree")

    def __init__(self, terms: Mapping[Sequence[int], object] | None = None, basis: str = "h",
                 max_degree: int = DEFAULT_DEGREE):
        if basis not in ("h", "r"):
            raise BasisError(f"unknown basis {basis!r}")
        _check_degree(max_degree)
        self.basis = basis
        self.max_degree = max_degree
        self.terms = {}
        for L, c in (terms or {}).items():
            L = tuple(L)
            if sum(L) <= max_degree and c:
                self.terms[L] = self.terms.get(L, 0) + c
        self.terms = {L: c for L, c in self.terms.items() if c}

    @classmethod
    def _raw(cls, terms, basis, max_degree):
        out = object.__new__(cls)
        out.basis, out.max_degree = basis, max_degree
        out.terms = {L: c for L, c in terms.items() if c}
        return out

    # -- constructors -------------------------------------------------------
    @classmethod
    def one(cls, N: int = DEFAULT_DEGREE, c=1) -> "NcsfElement":
        return cls({(): c}, "h", N)

    @classmethod
    def h(cls, *parts: int, N: int = DEFAULT_DEGREE, c=1) -> "NcsfElement":
        return cls({parts: c}, "h", N)

    @classmethod
    def r(cls, *parts: int, N: int = DEFAULT_DEGREE, c=1) -> "NcsfElement":
        return cls({parts: c}, "r", N)

    @classmethod
    def from_single_parts(cls, coeffs: Sequence, N: int | None = None) -> "NcsfElement":
        """``sum_n coeffs[n] h_n`` (``coeffs[0]`` multiplies the unit)."""
        N = len(coeffs) - 1 if N is None else N
        return cls({((n,) if n else ()): coeffs[n] for n in range(min(len(coeffs), N + 1))}, "h", N)

    # -- basis change -------------------------------------------------------
    def to_r(self) -> "NcsfElement":
        if self.basis == "r":
            return self
        out: dict = {}
        for L, c in self.terms.items():
            for K in _coarsenings(L):
                out[K] = out[K] + c if K in out else c
        return NcsfElement._raw(out, "r", self.max_degree)

    def to_h(self) -> "NcsfElement":
        if self.basis == "h":
            return self
        out: dict = {}
        for L, c in self.terms.items():
            k = len(L)
            for K in _coarsenings(L):
                term = c if (k - len(K)) % 2 == 0 else -c
                out[K] = out[K] + term if K in out else term
        return NcsfElement._raw(out, "h", self.max_degree)

    def in_basis(self, basis: str) -> "NcsfElement":
        return self.to_h() if basis == "h" else self.to_r()

    # -- linear structure ---------------------------------------------------
    def _combine(self, other, sign):
        if not isinstance(other, NcsfElement):
            other = NcsfElement.one(self.max_degree, other).in_basis(self.basis)
        other = other.in_basis(self.basis)
        N = min(self.max_degree, other.max_degree)
        out = {L: c for L, c in self.terms.items() if sum(L) <= N}
        for L, c in other.terms.items():
            if sum(L) > N:
                continue
            c = c if sign > 0 else -c
            out[L] = out[L] + c if L in out else c
        return NcsfElement._raw(out, self.basis, N)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self)._combine(other, 1)

    def __neg__(self):
        return NcsfElement._raw({L: -c for L, c in self.terms.items()}, self.basis, self.max_degree)

    def scale(self, c) -> "NcsfElement":
        return NcsfElement._raw({L: v * c for L, v in self.terms.items()}, self.basis,
                                self.max_degree)

    def __mul__(self, other):
        if not isinstance(other, NcsfElement):
            return self.scale(other)
        return multiply(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    # -- inspection ---------------------------------------------------------
    def component(self, n: int) -> "NcsfElement":
        return NcsfElement._raw({L: c for L, c in self.terms.items() if sum(L) == n},
                                self.basis, self.max_degree)

    def coefficient(self, L: Sequence[int]):
        return self.terms.get(tuple(L), 0)

    def constant_term(self):
        return self.terms.get((), 0)

    def truncate(self, N: int) -> "NcsfElement":
        N = min(N, self.max_degree)
        return NcsfElement._raw({L: c for L, c in self.terms.items() if sum(L) <= N},
                                self.basis, N)

    def map_coefficients(self, fn: Callable) -> "NcsfElement":
        return NcsfElement._raw({L: fn(c) for L, c in self.terms.items()}, self.basis,
                                self.max_degree)

    def __eq__(self, other):
        if not isinstance(other, NcsfElement):
            return NotImplemented
        return not first_mismatch(self, other)

    __hash__ = None

    def __repr__(self):
        return f"NcsfElement[{self.basis}, deg<={self.max_degree}]({format_element(self)})"

    def __str__(self):
        return format_element(self)


def first_mismatch(a: NcsfElement, b: NcsfElement):
    """``(L, coeff_a, coeff_b)`` for the first differing composition, or None.

    Compared in ``a``'s basis and up to the smaller tracked degree.
    """
    b = b.in_basis(a.basis)
    N = min(a.max_degree, b.max_degree)
    keys = {L for L in a.terms if sum(L) <= N} | {L for L in b.terms if sum(L) <= N}
    for L in sorted(keys, key=lambda K: (sum(K), K)):
        x, y = a.terms.get(L, 0), b.terms.get(L, 0)
        if x != y:
            return L, x, y
    return None


def h_to_r(e: NcsfElement) -> NcsfElement:
    if e.basis != "h":
        raise BasisError("h_to_r expects an element in the h basis")
    return e.to_r()


def r_to_h(e: NcsfElement) -> NcsfElement:
    if e.basis != "r":
        raise BasisError("r_to_h expects an element in the r basis")
    return e.to_h()


def multiply(a: NcsfElement, b: NcsfElement) -> NcsfElement:
    """Product in the h basis (r-basis inputs are converted first)."""
    a, b = a.to_h(), b.to_h()
    N = min(a.max_degree, b.max_degree)
    out: dict = {}
    for K, c in a.terms.items():
        nk = sum(K)
        for L, d in b.terms.items():
            if nk + sum(L) > N:
                continue
            KL = K + L
            term = c * d
            out[KL] = out[KL] + term if KL in out else term
    return NcsfElement._raw(out, "h", N)


def invert(e: NcsfElement) -> NcsfElement:
    """Two-sided inverse through the tracked degree; the constant term must be a unit."""
    e = e.to_h()
    N = e.max_degree
    c0 = e.constant_term()
    if not c0:
        raise InversionError("NCSF element with zero constant term is not invertible")
    inv0 = invert_coeff(c0)
    by_degree = [e.component(n) for n in range(N + 1)]
    comps = [NcsfElement._raw({(): inv0}, "h", N)]
    for n in range(1, N + 1):
        acc: dict = {}
        for k in range(1, n + 1):
            for K, c in by_degree[k].terms.items():
                for L, d in comps[n - k].terms.items():
                    KL = K + L
                    term = c * d
                    acc[KL] = acc[KL] + term if KL in acc else term
        comps.append(NcsfElement._raw({L: -(inv0 * c) for L, c in acc.items()}, "h", N))
    out: dict = {}
    for comp in comps:
        out.update(comp.terms)
    return NcsfElement._raw(out, "h", N)


# -- homomorphisms to power series -------------------------------------------

def _specialize(e, weight, N, zero):
    e = e.to_h()
    N = e.max_degree if N is None else min(N, e.max_degree)
    acc = [zero for _ in range(N + 1)]
    for L, c in e.terms.items():
        n = sum(L)
        if n <= N:
            acc[n] = acc[n] + c * Fraction(weight(n, L), math.factorial(n))
    return TruncatedSeries(acc)


def _zero_for(e):
    for c in e.terms.values():
        return c * 0
    return Fraction(0)


def phi(e: NcsfElement, N: int | None = None) -> TruncatedSeries:
    """Algebra map with ``h_n -> x^n / n!``."""
    return _specialize(e, multinomial, N, _zero_for(e))


def phi_hat(e: NcsfElement, N: int | None = None) -> TruncatedSeries:
    """Algebra map with ``h_n -> E_n x^n / n!``."""
    return _specialize(e, euler_multinomial, N, _zero_for(e))


def H(u, N: int = DEFAULT_DEGREE) -> NcsfElement:
    """``H(u) = sum_n h_n u^n`` through degree N."""
    terms, power = {}, u * 0 + 1
    for n in range(N + 1):
        terms[(n,) if n else ()] = power
        power = power * u
    return NcsfElement(terms, "h", N)


# -- run theorems ------------------------------------------------------------

@dataclass(frozen=True)
class WeightSequence:
    """Run weights ``w(n)``, n >= 1 (``w(0) = 1`` implicitly), and optional last-run weights ``v``."""

    w: Callable[[int], object]
    v: Callable[[int], object] | None = None

    @staticmethod
    def from_list(values: Sequence, offset: int = 1) -> Callable[[int], object]:
        def weight(n):
            i = n - offset
            return values[i] if 0 <= i < len(values) else 0
        return weight

    @classmethod
    def random(cls, seed: int, N: int, with_last: bool = False, bound: int = 9) -> "WeightSequence":
        """Small random rationals: numerators in [-bound, bound], denominators in [1, bound]."""
        rng = random.Random(seed)

        def draw():
            return [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(N)]
        w = draw()
        v = draw() if with_last else None
        return cls(cls.from_list(w), cls.from_list(v) if v is not None else None)


def _as_weight(w):
    if isinstance(w, WeightSequence):
        return w.w
    if callable(w):
        return w
    return WeightSequence.from_list(list(w))


def _weight_series(w, N, start=0):
    zero = w(1) * 0 if N >= 1 else Fraction(0)
    return TruncatedSeries([zero + 1 if start == 0 else zero] + [w(n) + zero for n in range(1, N + 1)])


def _all_compositions(N):
    for n in range(N + 1):
        yield from (tuple(L) for L in compositions(n))


@dataclass
class IdentityReport:
    name: str
    lhs: NcsfElement
    rhs: NcsfElement
    mismatch: tuple | None

    @property
    def passed(self) -> bool:
        return self.mismatch is None

    def detail(self) -> str:
        if self.mismatch is None:
            return f"{len(self.lhs.terms)} ribbon coefficients agree through degree {self.lhs.max_degree}"
        L, x, y = self.mismatch
        return f"coefficient of r{L}: lhs {x} != rhs {y}"


def runs_rhs(w, N: int) -> NcsfElement:
    """``(sum_n a_n h_n)^(-1)`` where ``sum a_n z^n = (sum w_n z^n)^(-1)``."""
    w = _as_weight(w)
    a = _weight_series(w, N).reciprocal()
    return invert(NcsfElement.from_single_parts(list(a.coeffs), N))


def runs_theorem(w, N: int = DEFAULT_DEGREE) -> IdentityReport:
    """Ribbon generating function ``sum_L w_L r_L`` against its h-basis closed form."""
    _check_degree(N)
    w = _as_weight(w)
    lhs: dict = {}
    for L in _all_compositions(N):
        c = 1
        for part in L:
            c = c * w(part)
            if not c:
                break
        if c:
            lhs[L] = c
    lhs_e = NcsfElement(lhs, "r", N)
    rhs = runs_rhs(w, N)
    return IdentityReport("runs", lhs_e, rhs.to_r(), first_mismatch(lhs_e, rhs))


def last_run_rhs(w, v, N: int) -> NcsfElement:
    w, v = _as_weight(w), _as_weight(v)
    W = _weight_series(w, N)
    V = _weight_series(v, N, start=1)
    b = V / W
    return runs_rhs(w, N) * NcsfElement.from_single_parts(list(b.coeffs), N)


def last_run_theorem(w, v=None, N: int = DEFAULT_DEGREE) -> IdentityReport:
    """Ribbon sum with the last run weighted by ``v`` against its h-basis closed form."""
    _check_degree(N)
    if v is None and isinstance(w, WeightSequence):
        v = w.v
    w, v = _as_weight(w), _as_weight(v)
    lhs: dict = {}
    for L in _all_compositions(N):
        if not L:
            continue
        c = v(L[-1])
        for part in L[:-1]:
            if not c:
                break
            c = c * w(part)
        if c:
            lhs[L] = c
    lhs_e = NcsfElement(lhs, "r", N)
    rhs = last_run_rhs(w, v, N)
    return IdentityReport("last run", lhs_e, rhs.to_r(), first_mismatch(lhs_e, rhs))


def runs_shorter_than(m: int, N: int = DEFAULT_DEGREE) -> NcsfElement:
    """``(sum_n h_{mn} - h_{mn+1})^(-1)``: ribbons with all parts < m."""
    a = [0] * (N + 1)
    for n in range(N + 1):
        if m * n <= N:
            a[m * n] += 1
        if m * n + 1 <= N:
            a[m * n + 1] -= 1
    return invert(NcsfElement.from_single_parts(a, N))


def runs_all_equal(m: int, N: int = DEFAULT_DEGREE) -> NcsfElement:
    """``(sum_n (-1)^n h_{mn})^(-1)``: ribbons with every part equal to m."""
    a = [0] * (N + 1)
    for n in range(N // m + 1):
        a[m * n] = (-1) ** n
    return invert(NcsfElement.from_single_parts(a, N))


def eulerian_element(N: int = DEFAULT_DEGREE, t_cap: int | None = None) -> NcsfElement:
    """``(1 - t) [1 - t sum_n (1 - t)^n h_n]^(-1)`` with t-polynomial coefficients.

    The bracket has constant term ``1 - t``; ``t_cap`` (default ``N + 1``) makes
    it a unit while keeping every degree-n component (t-degree <= n) exact.
    """
    cap = N + 1 if t_cap is None else t_cap
    t = Poly.var(0, (cap,), ("t",))
    one = t * 0 + 1
    coeffs, power = [], one
    for n in range(N + 1):
        coeffs.append(-(t * power) + (one if n == 0 else 0))
        power = power * (1 - t)
    return invert(NcsfElement.from_single_parts(coeffs, N)).scale(1 - t)


# -- major index products ----------------------------------------------------

def _tq(t_deg, q_deg):
    caps = (t_deg, q_deg)
    return Poly.var(0, caps, ("t", "q")), Poly.var(1, caps, ("t", "q"))


def maj_product(k: int | None, N: int, q_deg: int, t_deg: int = 0,
                fold: str = "left") -> NcsfElement:
    """``H(q^k) H(q^(k-1)) ... H(1)`` (``fold="left"``) or ``H(1) ... H(q^k)`` (``"right"``).

    ``k=None`` is the infinite product, exact modulo q^(q_deg+1) once k = q_deg.
    Coefficients live in Q[t, q]/(t^(t_deg+1), q^(q_deg+1)).
    """
    if fold not in ("left", "right"):
        raise DomainError(f"fold must be 'left' or 'right', not {fold!r}")
    _check_degree(N)
    k = q_deg if k is None else k
    _, q = _tq(t_deg, q_deg)
    prod = NcsfElement.one(N, q * 0 + 1)
    q_power = q * 0 + 1
    for _ in range(k + 1):
        factor = H(q_power, N)
        prod = factor * prod if fold == "left" else prod * factor
        q_power = q_power * q
    return prod


def desmaj_lhs(N: int, t_deg: int, q_deg: int) -> NcsfElement:
    """``sum_{k <= t_deg} t^k H(q^k) ... H(1)``; terms with k > t_deg vanish mod t^(t_deg+1)."""
    t, q = _tq(t_deg, q_deg)
    one = q * 0 + 1
    prod = NcsfElement.one(N, one)
    total = NcsfElement({}, "h", N)
    q_power, t_power = one, one
    for _ in range(t_deg + 1):
        prod = H(q_power, N) * prod
        total = total + prod.scale(t_power)
        q_power, t_power = q_power * q, t_power * t
    return total


def _check_cleared(name, lhs, numerators, denominators):
    """Compare ``denominators[n] * (degree-n part of lhs)`` with ``numerators`` in the r basis."""
    lhs_r = lhs.to_r()
    cleared: dict = {}
    for L, c in lhs_r.terms.items():
        cleared[L] = c * denominators[sum(L)]
    left = NcsfElement(cleared, "r", lhs.max_degree)
    right = NcsfElement(numerators, "r", lhs.max_degree)
    return IdentityReport(name, left, right, first_mismatch(left, right))


def ncmaj_identity(N: int = 5, q_deg: int = 12) -> IdentityReport:
    """Infinite product of H(q^j) against ``sum_L q^maj(L) r_L / (q)_n``, denominators cleared."""
    _, q = _tq(0, q_deg)
    one = q * 0 + 1
    lhs = maj_product(None, N, q_deg)
    dens, d = [], one
    for n in range(N + 1):
        if n:
            d = d * (1 - q ** n)
        dens.append(d)
    nums = {tuple(L): q ** composition_maj(L) for L in _all_compositions(N)}
    return _check_cleared("ncmaj", lhs, nums, dens)


def desmaj_identity(N: int = 5, t_deg: int = 7, q_deg: int = 12) -> IdentityReport:
    """``sum_k t^k H(q^k)...H(1)`` against ``sum_L t^des(L) q^maj(L) r_L / prod_{i<=n}(1 - t q^i)``."""
    t, q = _tq(t_deg, q_deg)
    one = q * 0 + 1
    lhs = desmaj_lhs(N, t_deg, q_deg)
    dens, d = [], one
    for n in range(N + 1):
        d = d * (1 - t * q ** n)
        dens.append(d)
    nums = {}
    for L in _all_compositions(N):
        nums[tuple(L)] = t ** max(len(L) - 1, 0) * q ** composition_maj(L)
    return _check_cleared("desmaj", lhs, nums, dens)


# -- output ------------------------------------------------------------------

def format_element(e: NcsfElement) -> str:
    """``3·h(2,1) − h(3)`` style rendering, terms ordered by degree then composition."""
    if not e.terms:
        return "0"
    pieces = []
    for L in sorted(e.terms, key=lambda K: (sum(K), K)):
        c = e.terms[L]
        label = f"{e.basis}({','.join(map(str, L))})" if L else "1"
        if isinstance(c, Poly):
            negative = False
            body = f"({c})" if L == () else f"({c})·{label}"
            if L == () and len(c.terms) <= 1:
                body = str(c)
        else:
            negative = c < 0
            mag = abs(c)
            if not L:
                body = str(mag)
            elif mag == 1:
                body = label
            else:
                body = f"{mag}·{label}"
        pieces.append((negative, body))
    out = ("−" if pieces[0][0] else "") + pieces[0][1]
    for negative, body in pieces[1:]:
        out += (" − " if negative else " + ") + body
    return out
