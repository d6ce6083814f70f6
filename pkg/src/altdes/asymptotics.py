"""Poles of the f(n) generating function and the resulting coefficient asymptotics.

The generating function is N(z) / D(z) with

    N(z) = 3 sin(z/2) + 3 cosh(sqrt(3) z / 2)
    D(z) = 3 cos(z/2) - sqrt(3) sinh(sqrt(3) z / 2).

D is entire with real Taylor coefficients ``a_n`` satisfying
``|a_n| <= 3 (sqrt(3)/2)^n / n!``, which gives the geometric tail bound used
by :func:`eval_denominator`.  The zeros of D are found in double precision;
:func:`error_table` needs ~35 significant digits (the error term is about
``10^-16`` relative to the main term by n = 40) and refines the dominant zero
with mpmath before subtracting.
"""
from __future__ import annotations

import cmath
import math
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath
import numpy as np

from .errors import DomainError, NumericError
from .series import named_series

DISK_RADIUS = 8.0
RHO = math.sqrt(3) / 2
MAX_TERMS = 120
NEWTON_CAP = 60
GRID_POINTS = 64
MERGE_DISTANCE = 1e-6
_EPS = sys.float_info.epsilon


@lru_cache(maxsize=1)
def _coefficients():
    s = named_series("denominator", MAX_TERMS)
    return tuple(float(c) for c in s.coeffs)


def _tail_bound(r, N):
    """Bound on sum_{n > N} 3 (RHO r)^n / n!."""
    x = RHO * r
    if N + 2 <= x:
        return math.inf
    first = 3 * math.exp((N + 1) * math.log(x) - math.lgamma(N + 2)) if x > 0 else 0.0
    return first / (1 - x / (N + 2))


def eval_denominator(z: complex, tol: float = 1e-12, derivative: bool = False):
    """``(D(z), bound)`` with ``|D(z) - value| <= bound <= tol``; ``derivative`` gives D'(z).

    The bound adds the Taylor tail majorant to a floating-point summation
    estimate ``4 (terms + 2) eps sum|terms|``.
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    z = complex(z)
    r = abs(z)
    if r > DISK_RADIUS:
        raise DomainError(f"|z| = {r:.3g} is outside the validated disk |z| <= {DISK_RADIUS}")
    a = _coefficients()
    if derivative:
        a = tuple(n * a[n] for n in range(1, len(a)))
    total, magnitude, power = 0j, 0.0, 1 + 0j
    for N, c in enumerate(a):
        term = c * power
        total += term
        magnitude += abs(term)
        # derivative coefficients obey |n a_n| <= 3 RHO (RHO)^(n-1)/(n-1)!, same tail up to RHO
        tail = _tail_bound(r, N + 1 if derivative else N) * (RHO if derivative else 1)
        rounding = 4 * (N + 2) * _EPS * magnitude
        if N >= 4 and tail + rounding <= tol:
            return total, tail + rounding
        power *= z
    raise NumericError(f"could not evaluate D({z}) to tolerance {tol:g}")


def D(z):
    return eval_denominator(z)[0]


def D_prime(z):
    return eval_denominator(z, derivative=True)[0]


def numerator(z):
    return 3 * cmath.sin(z / 2) + 3 * cmath.cosh(math.sqrt(3) * z / 2)


@dataclass
class ZeroReport:
    alpha: float
    beta: float
    secondary_zeros: tuple
    gamma: float
    delta: float
    residue_check: float
    tolerance: float
    truncation_terms: int
    evaluation_bound: float
    zero_count_inside_gamma: int = 1
    secondary_derivative: float = 0.0
    numerator_at_alpha: float = 0.0

    def as_dict(self) -> dict:
        d = asdict(self)
        d["secondary_zeros"] = [[z.real, z.imag] for z in self.secondary_zeros]
        return d


def _horner(z):
    """Value and derivative of the full degree-``MAX_TERMS`` Taylor polynomial of D."""
    a = _coefficients()
    value, slope = 0j, 0j
    for c in reversed(a):
        slope = slope * z + value
        value = value * z + c
    return value, slope


def _newton(z, tol, bracket=None):
    """Newton on the truncated Taylor polynomial of D.

    With a real ``bracket`` an iterate that leaves it is replaced by the
    bisection midpoint.  Convergence needs ``|step| < tol`` and a certified
    ``|D| < tol``.
    """
    lo, hi = bracket if bracket else (None, None)
    start = z
    for _ in range(NEWTON_CAP):
        value, slope = _horner(z)
        if slope == 0:
            raise NumericError(f"zero derivative at z = {z} (started from {start})")
        step = value / slope
        new = z - step
        if bracket:
            new = complex(new.real, 0)
            if not lo < new.real < hi:
                new = complex(0.5 * (lo + hi), 0)
            if _horner(new)[0].real > 0:
                lo = new.real
            else:
                hi = new.real
        z = new
        if abs(step) < tol and abs(eval_denominator(z, tol)[0]) < tol:
            return z
    raise NumericError(f"Newton did not converge from {start} within {NEWTON_CAP} steps; "
                       f"last iterate {z}, |D| = {abs(_horner(z)[0]):.3g}")


def find_alpha(tol: float = 1e-12) -> float:
    """The real zero of D in [1, 2] (its zero of smallest modulus)."""
    if tol < 1e-12:
        raise DomainError("tol must be at least 1e-12")
    lo, hi = 1.0, 2.0
    if not (D(lo).real > 0 > D(hi).real):
        raise NumericError("D does not change sign on [1, 2]")
    for _ in range(8):
        mid = 0.5 * (lo + hi)
        if D(mid).real > 0:
            lo = mid
        else:
            hi = mid
    return float(_newton(0.5 * (lo + hi), tol, (lo, hi)).real)


def _annulus_seeds():
    radii = (2.0, 3.0, 4.0, 4.8)
    angles = GRID_POINTS // len(radii)
    for r in radii:
        for k in range(angles):
            theta = 2 * math.pi * (k + 0.5) / angles
            yield cmath.rect(r, theta)


def annulus_zeros(tol: float = 1e-12, inner: float = 1.5, outer: float = 5.0) -> list[complex]:
    """Zeros of D with inner < |z| < outer, found by Newton from a 64-point grid."""
    found: list[complex] = []
    for seed in _annulus_seeds():
        try:
            z = _newton(seed, tol)
        except (NumericError, DomainError):
            continue
        if not inner < abs(z) < outer:
            continue
        if abs(z.imag) < 1e-9:
            z = complex(z.real, 0.0)
        if all(abs(z - w) > MERGE_DISTANCE for w in found):
            found.append(z)
    found.sort(key=lambda w: (round(abs(w), 9), -w.imag))
    return found


def find_secondary(tol: float = 1e-12) -> tuple[complex, complex]:
    """The conjugate pair of zeros of D with the second smallest modulus."""
    if tol < 1e-12:
        raise DomainError("tol must be at least 1e-12")
    zeros = annulus_zeros(tol)
    upper = [z for z in zeros if z.imag > 0]
    if not upper:
        raise NumericError("no complex zeros of D found in the annulus 1.5 < |z| < 5")
    z = min(upper, key=abs)
    partner = min(zeros, key=lambda w: abs(w - z.conjugate()))
    if abs(partner - z.conjugate()) > MERGE_DISTANCE:
        raise NumericError(f"zero {z} has no conjugate partner")
    z = 0.5 * (z + partner.conjugate())
    return z, z.conjugate()


def zero_count(radius: float, points: int = 16384) -> float:
    """Argument-principle integral (1 / 2 pi i) of D'/D around |z| = radius (trapezoid rule).

    The trapezoid rule converges geometrically with rate set by the distance
    from the circle to the nearest zero, hence the dense default grid.
    """
    a = np.array(_coefficients())
    da = np.array([n * a[n] for n in range(1, len(a))])
    theta = 2 * np.pi * np.arange(points) / points
    z = radius * np.exp(1j * theta)
    Dz = np.polynomial.polynomial.polyval(z, a)
    dDz = np.polynomial.polynomial.polyval(z, da)
    # dz = i z dtheta
    integral = np.mean(dDz / Dz * z)
    return float(integral.real)


def residue_check(alpha: float | None = None, h: float = 1e-5) -> dict:
    """U'(alpha) for U = 1/F, by the closed form and by central differences.

    Returns the two estimates and ``J = 1/U'``; the leading coefficient of
    f(n)/n! is ``-J / alpha^(n+1)``.
    """
    alpha = find_alpha() if alpha is None else alpha
    s3 = math.sqrt(3)
    # quotient rule on U = D/N with D, D' from the Taylor series
    d0, d1 = D(alpha).real, D_prime(alpha).real
    n0 = numerator(alpha).real
    n1 = 1.5 * math.cos(alpha / 2) + 1.5 * s3 * math.sinh(s3 * alpha / 2)
    closed = (d1 * n0 - d0 * n1) / n0 ** 2

    def U(z):
        return (3 * math.cos(z / 2) - s3 * math.sinh(s3 * z / 2)) / (
            3 * math.sin(z / 2) + 3 * math.cosh(s3 * z / 2))
    finite = (U(alpha + h) - U(alpha - h)) / (2 * h)
    return {"closed_form": closed, "finite_difference": finite, "J": 1 / closed}


def zero_report(tol: float = 1e-12) -> ZeroReport:
    alpha = find_alpha(tol)
    z2, z2c = find_secondary(tol)
    gamma = abs(z2)
    _, bound = eval_denominator(alpha, tol)
    terms = len(_coefficients())
    return ZeroReport(
        alpha=alpha, beta=1 / alpha, secondary_zeros=(z2, z2c), gamma=gamma, delta=1 / gamma,
        residue_check=residue_check(alpha)["closed_form"], tolerance=tol,
        truncation_terms=terms, evaluation_bound=bound,
        zero_count_inside_gamma=round(zero_count(gamma - 0.01)),
        secondary_derivative=abs(D_prime(z2)),
        numerator_at_alpha=abs(numerator(alpha)),
    )


# -- error table --------------------------------------------------------------

@dataclass
class ErrorRow:
    n: int
    ratio_exact: float        # f(n)/n!
    estimate: float           # 2 beta^(n+1)
    abs_error: float
    scaled_error: float       # abs_error / delta^n


@dataclass
class ErrorTable:
    rows: list = field(default_factory=list)
    beta: float = 0.0
    delta: float = 0.0

    def as_records(self) -> list[dict]:
        return [asdict(r) for r in self.rows]

    def to_csv(self) -> str:
        lines = ["n,f_over_factorial,estimate,abs_error,scaled_error"]
        for r in self.rows:
            lines.append(f"{r.n},{r.ratio_exact!r},{r.estimate!r},{r.abs_error!r},{r.scaled_error!r}")
        return "\n".join(lines) + "\n"


def _alpha_mp(alpha0, dps):
    with mpmath.workdps(dps):
        s3 = mpmath.sqrt(3)
        return mpmath.findroot(lambda z: 3 * mpmath.cos(z / 2) - s3 * mpmath.sinh(s3 * z / 2),
                               mpmath.mpf(alpha0))


def error_table(n_max: int = 40, dps: int = 50) -> ErrorTable:
    """Rows n = 0..n_max comparing f(n)/n! with 2 beta^(n+1).

    f comes exactly from the recurrence; beta and delta are refined to ``dps``
    digits so the subtraction keeps the O(delta^n) error visible.
    """
    from .recurrences import fg_recurrence

    if n_max < 0:
        raise DomainError("n_max must be nonnegative")
    f, _ = fg_recurrence(max(n_max, 0))
    alpha0 = find_alpha()
    z2, _ = find_secondary()
    table = ErrorTable(beta=1 / alpha0, delta=1 / abs(z2))
    with mpmath.workdps(dps):
        alpha = _alpha_mp(alpha0, dps)
        s3 = mpmath.sqrt(3)
        z2m = mpmath.findroot(lambda z: 3 * mpmath.cos(z / 2) - s3 * mpmath.sinh(s3 * z / 2),
                              mpmath.mpc(z2.real, z2.imag))
        beta, delta = 1 / alpha, 1 / abs(z2m)
        for n in range(n_max + 1):
            exact = mpmath.mpf(f[n]) / mpmath.factorial(n)
            est = 2 * beta ** (n + 1)
            err = abs(exact - est)
            table.rows.append(ErrorRow(n, float(exact), float(est), float(err),
                                       float(err / delta ** n)))
    return table


def exact_ratio(n: int) -> Fraction:
    from .recurrences import fg_recurrence
    f, _ = fg_recurrence(n)
    return Fraction(f[n], math.factorial(n))
