"""Verification suites run by ``altdes verify``.

Every check returns a :class:`Check` whose ``name`` says what is compared and
whose ``paper_ref`` names the identity in words, so a CI log reads on its own.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from . import asymptotics, ncsf, oracle, recurrences, series
from .perm import (
    beta, beta_hat, comp_from_set, compositions, coarsenings, euler_multinomial,
    euler_numbers, multinomial, set_from_comp, statistics, alternating_runs,
)
from .errors import DomainError, ResourceError
from .rings import tq_vars
from .series import TruncatedSeries, named_series

SUITES = ("oracle", "series-identities", "ncsf", "recurrences", "qt", "all")
DEFAULT_N_MAX = {"oracle": 8, "series-identities": 7, "ncsf": 8, "recurrences": 12, "qt": 5}
F_12 = 31684445


@dataclass
class Check:
    name: str
    paper_ref: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def as_record(self) -> dict:
        return {"name": self.name, "paper_ref": self.paper_ref, "pass": self.passed,
                "detail": self.detail}


def _run(name, ref, fn: Callable[[], tuple[bool, str]]) -> Check:
    start = time.perf_counter()
    ok, detail = fn()
    return Check(name, ref, bool(ok), detail, time.perf_counter() - start)


def _first_bad(items):
    """``(True, '')`` or ``(False, description)`` for the first failing item."""
    for ok, text in items:
        if not ok:
            return False, text
    return True, ""


def _seq_compare(label, a, b):
    for n, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return False, f"{label}: first difference at n={n}: {x} != {y}"
    return True, f"{label}: {min(len(a), len(b))} values agree"


# -- oracle ----------------------------------------------------------------

def oracle_suite(n_max: int, seed: int = 0) -> list[Check]:
    n_or = min(n_max, oracle.DEFAULT_LIMIT)
    n_py = min(n_max, 7)
    checks = []

    def equivalence():
        t = oracle.oracle_sequences(n_or)
        return _seq_compare(f"n <= {n_or}", t.f, t.f_by_peaks)
    checks.append(_run("all alternating runs shorter than 3 <=> valleys even, peaks odd",
                       "definition of f(n) by peaks and valleys", equivalence))

    def swapped():
        t = oracle.oracle_sequences(n_or)
        return _seq_compare(f"n <= {n_or}", t.f_swapped, t.f)
    checks.append(_run("complementation: #(peaks even, valleys odd) = f(n)",
                       "complement bijection", swapped))

    def alternating():
        E = euler_numbers(n_or)
        items = []
        for n in range(n_or + 1):
            a, ra = oracle.count_alternating(n), oracle.count_reverse_alternating(n)
            items.append((a == E[n] == ra, f"n={n}: alternating {a}, reverse {ra}, E_n {E[n]}"))
        ok, bad = _first_bad(items)
        return ok, bad or f"alternating permutations counted by E_n for n <= {n_or}"
    checks.append(_run("alternating permutation counts = Euler numbers",
                       "sec x + tan x counts alternating permutations", alternating))

    def python_stats():
        import itertools
        items = []
        for n in range(n_py + 1):
            counts: dict = {}
            for p in itertools.permutations(range(1, n + 1)):
                s = statistics(p)
                runs = alternating_runs(p)
                if n:
                    items.append((s.altdes + 1 == len(runs), f"{p}: altdes + 1 != #runs"))
                for start, run in _run_positions(runs):
                    if len(run) >= 3:
                        pos = start + 1
                        ok = (pos in s.peaks and pos % 2 == 0) or (pos in s.valleys and pos % 2 == 1)
                        items.append((ok, f"{p}: run {run} has no even peak or odd valley at its second entry"))
                key = comp_from_set(s.alt_descent_set, n) if n else ()
                counts[key] = counts.get(key, 0) + 1
            vec = {tuple(k): v for k, v in oracle.oracle_counts(n, "alt").items()}
            items.append((counts == vec, f"n={n}: vectorized alt-descent counts differ"))
        ok, bad = _first_bad(items)
        return ok, bad or f"scalar statistics match the vectorized oracle for n <= {n_py}"
    checks.append(_run("alternating runs: altdes + 1 runs; long runs start with a bad peak/valley",
                       "alternating runs and descents", python_stats))

    def bijection():
        import itertools
        items = []
        for n in range(1, 11):
            for k in range(n):
                for S in itertools.combinations(range(1, n), k):
                    L = comp_from_set(S, n)
                    items.append((set_from_comp(L) == frozenset(S) and sum(L) == n,
                                  f"n={n}: {S} -> {L} -> {sorted(set_from_comp(L))}"))
            for L in compositions(n):
                items.append((comp_from_set(set_from_comp(L), n) == L, f"{L} does not round-trip"))
        ok, bad = _first_bad(items)
        return ok, bad or "C and D are inverse on all subsets of [n-1], n <= 10"
    checks.append(_run("composition <-> set bijection round-trips",
                       "compositions of n and subsets of [n-1]", bijection))

    def beta_counts():
        items = []
        for n in range(1, n_or + 1):
            des = oracle.oracle_counts(n, "descent")
            alt = oracle.oracle_counts(n, "alt")
            for L in compositions(n):
                b, bh = beta(L), beta_hat(L)
                items.append((b == des.get(L, 0), f"beta{tuple(L)} = {b}, oracle {des.get(L, 0)}"))
                items.append((bh == alt.get(L, 0), f"beta_hat{tuple(L)} = {bh}, oracle {alt.get(L, 0)}"))
            items.append((sum(beta(L) for L in compositions(n)) == factorial(n), f"n={n}: sum beta != n!"))
            items.append((sum(beta_hat(L) for L in compositions(n)) == factorial(n),
                          f"n={n}: sum beta_hat != n!"))
        ok, bad = _first_bad(items)
        return ok, bad or f"beta and beta_hat match the oracle on every L of n <= {n_or}"
    checks.append(_run("beta(L), beta_hat(L) = oracle descent / alternating descent counts",
                       "inclusion-exclusion for descent compositions", beta_counts))

    def containment():
        items = []
        for n in range(1, n_or + 1):
            for L in compositions(n):
                coarser = list(coarsenings(L))
                s, sh = sum(beta(K) for K in coarser), sum(beta_hat(K) for K in coarser)
                items.append((s == multinomial(n, L), f"{tuple(L)}: sum beta = {s}"))
                items.append((sh == euler_multinomial(n, L), f"{tuple(L)}: sum beta_hat = {sh}"))
        ok, bad = _first_bad(items)
        return ok, bad or f"containment sums equal the (Euler) multinomials for n <= {n_or}"
    checks.append(_run("sum over coarsenings = multinomial and Euler multinomial",
                       "counting by descent set contained in D(L)", containment))
    return checks


def _run_positions(runs):
    pos = 1
    for run in runs:
        yield pos, run
        pos += len(run)


# -- series identities -------------------------------------------------------

def _series_eq(label, a: TruncatedSeries, b: TruncatedSeries):
    diff = a.first_difference(b)
    if diff is None:
        return True, f"{label}: equal through x^{min(a.order, b.order)}"
    return False, f"{label}: coefficient of x^{diff}: {a[diff]} != {b[diff]}"


def series_suite(n_max: int, seed: int = 0, order: int = 30) -> list[Check]:
    N = order
    s = {k: named_series(k, N) for k in ("F_closed", "F_reciprocal", "F1", "F2", "C_series",
                                          "D_series", "C_trig", "D_trig", "sec_plus_tan",
                                          "euler_trisection_num")}
    checks = [
        _run("F closed trig form = reciprocal of Euler trisection series",
             "trisection identity for F",
             lambda: _series_eq("F", s["F_closed"], s["F_reciprocal"])),
        _run("F = F1 + F2", "odd and even parts of F",
             lambda: _series_eq("F", s["F_closed"], s["F1"] + s["F2"])),
        _run("C quotient form = C trig form", "c(n) generating function, two forms",
             lambda: _series_eq("C", s["C_series"], s["C_trig"])),
        _run("D quotient form = D trig form", "d(n) generating function, two forms",
             lambda: _series_eq("D", s["D_series"], s["D_trig"])),
        _run("C + D = F - 1", "split of f(n) by last run length",
             lambda: _series_eq("C + D", s["C_series"] + s["D_series"], s["F_closed"] - 1)),
        _run("multisect(sec+tan, 3, 0) - multisect(sec+tan, 3, 1) = Euler trisection series",
             "multisection of sec x + tan x",
             lambda: _series_eq("trisection", s["sec_plus_tan"].multisect(3, 0) -
                                s["sec_plus_tan"].multisect(3, 1), s["euler_trisection_num"])),
        _run("(1 + sin x)/cos x = sum E_n x^n/n! (boustrophedon)", "Euler numbers",
             lambda: _series_eq("sec+tan", s["sec_plus_tan"], series.euler_series(N))),
    ]

    def two_sided():
        rng = random.Random(seed)
        items = []
        for trial in range(10):
            coeffs = [Fraction(rng.randint(1, 9), rng.randint(1, 9))]
            coeffs += [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(12)]
            a = TruncatedSeries(coeffs)
            inv = a.reciprocal()
            one = TruncatedSeries.constant(1, a.order)
            items.append((a * inv == one and inv * a == one, f"trial {trial}: a * a^-1 != 1"))
        ok, bad = _first_bad(items)
        return ok, bad or "10 random series: reciprocal is a two-sided inverse through x^12"
    checks.append(_run("series reciprocal is a two-sided inverse", "formal power series ring",
                       two_sided))

    n_eu = min(n_max, 7)

    def eulerian(alternating):
        def run():
            polys = series.eulerian_polynomials(n_eu, alternating)
            items = []
            for n in range(1, n_eu + 1):
                counts = oracle.oracle_counts(n, "alt" if alternating else "descent")
                dist = [0] * (n + 1)
                for L, c in counts.items():
                    dist[L.des + 1] += c
                while dist and dist[-1] == 0:
                    dist.pop()
                items.append((polys[n] == dist, f"n={n}: series {polys[n]} != oracle {dist}"))
            ok, bad = _first_bad(items)
            return ok, bad or f"polynomials agree for 1 <= n <= {n_eu}"
        return run
    checks.append(_run("A_n(t) from (1-t)/(1-t e^((1-t)x)) = oracle sum t^(des+1)",
                       "Eulerian polynomial generating function", eulerian(False)))
    checks.append(_run("alternating Eulerian polynomials from sec+tan series = oracle sum t^(altdes+1)",
                       "alternating Eulerian polynomial generating function", eulerian(True)))
    return checks


# -- ncsf ---------------------------------------------------------------------

def _random_element(rng, N, terms=6, basis="h"):
    comps = [tuple(L) for n in range(N + 1) for L in compositions(n)]
    chosen = {rng.choice(comps): Fraction(rng.randint(-9, 9), rng.randint(1, 9))
              for _ in range(terms)}
    return ncsf.NcsfElement(chosen, basis, N)


def ncsf_suite(n_max: int, seed: int = 0, theorem_degree: int = ncsf.DEFAULT_DEGREE) -> list[Check]:
    N = min(n_max, 8)
    rng = random.Random(seed)
    checks = []

    def basis_change():
        items = []
        for n in range(N + 1):
            for L in compositions(n):
                h = ncsf.NcsfElement.h(*L, N=n)
                r = h.to_r()
                # unitriangular: h_L = r_L + (coarser ribbons)
                ok = r.coefficient(L) == 1 and all(
                    K == tuple(L) or K in {tuple(C) for C in coarsenings(L)} for K in r.terms)
                items.append((ok and r.to_h() == h, f"h{tuple(L)} -> r basis is not unitriangular"))
        for trial in range(10):
            e = _random_element(rng, N)
            items.append((e.to_r().to_h() == e, f"trial {trial}: h -> r -> h changes {e}"))
            f = _random_element(rng, N, basis="r")
            items.append((f.to_h().to_r() == f, f"trial {trial}: r -> h -> r changes {f}"))
        ok, bad = _first_bad(items)
        return ok, bad or f"unitriangular and mutually inverse through degree {N}; 20 random round trips"
    checks.append(_run("h <-> r change of basis round-trips", "h_L = sum of r_K over coarsenings K",
                       basis_change))

    def homomorphism():
        items = []
        for trial in range(6):
            a, b = _random_element(rng, N), _random_element(rng, N, basis="r")
            for name, fn in (("phi", ncsf.phi), ("phi_hat", ncsf.phi_hat)):
                items.append((fn(a * b) == fn(a) * fn(b), f"{name} not multiplicative (trial {trial})"))
                items.append((fn(a + b) == fn(a) + fn(b), f"{name} not additive (trial {trial})"))
                for n in range(N + 1):
                    comp = fn(a.component(n))
                    ok = all(comp[m] == 0 for m in range(comp.order + 1) if m != n)
                    items.append((ok, f"{name} does not preserve degree {n} (trial {trial})"))
        ok, bad = _first_bad(items)
        return ok, bad or f"6 random pairs through degree {N}"
    checks.append(_run("Phi and Phi-hat are degree-preserving algebra homomorphisms",
                       "Phi(h_n) = x^n/n!, Phi-hat(h_n) = E_n x^n/n!", homomorphism))

    def two_sided():
        items = []
        for trial in range(5):
            e = _random_element(rng, N)
            if not e.constant_term():
                e = e + 1
            inv = ncsf.invert(e)
            one = ncsf.NcsfElement.one(N)
            items.append((e * inv == one and inv * e == one, f"trial {trial}: inverse is one-sided"))
        ok, bad = _first_bad(items)
        return ok, bad or f"5 random units through degree {N}"
    checks.append(_run("NCSF inverse is two-sided", "noncommutative power series ring", two_sided))

    def theorem(last):
        def run():
            items = []
            for k in range(5):
                w = ncsf.WeightSequence.random(seed + k, theorem_degree, with_last=last)
                rep = (ncsf.last_run_theorem(w, N=theorem_degree) if last
                       else ncsf.runs_theorem(w, theorem_degree))
                items.append((rep.passed, f"seed {seed + k}: {rep.detail()}"))
            ok, bad = _first_bad(items)
            return ok, bad or f"5 random rational weight sequences, degree {theorem_degree}"
        return run
    checks.append(_run("sum_L w_L r_L = (sum a_n h_n)^-1 for random weights",
                       "ribbon sums weighted by run lengths", theorem(False)))
    checks.append(_run("last-run weighted ribbon sum = closed form for random weights",
                       "ribbon sums with separate last-run weight", theorem(True)))

    def shorter_than_three():
        e = ncsf.runs_shorter_than(3, theorem_degree)
        return _series_eq("Phi-hat", ncsf.phi_hat(e), named_series("F_closed", theorem_degree))
    checks.append(_run("Phi-hat of (sum h_3n - h_3n+1)^-1 = F",
                       "ribbons with all parts less than m, m = 3", shorter_than_three))

    def all_equal():
        items = []
        for m in (2, 3):
            e = ncsf.runs_all_equal(m, theorem_degree).to_r()
            expected = {tuple([m] * k): 1 for k in range(theorem_degree // m + 1)}
            items.append((e.terms == expected, f"m={m}: ribbon expansion {e}"))
            denom = TruncatedSeries([(-1) ** (n // m) if n % m == 0 else 0 for n in range(theorem_degree + 1)])
            denom = TruncatedSeries([Fraction(c, factorial(n)) for n, c in enumerate(denom.coeffs)])
            ok, text = _series_eq(f"Phi, m={m}", ncsf.phi(e), denom.reciprocal())
            items.append((ok, text))
        ok, bad = _first_bad(items)
        return ok, bad or f"ribbons (m^n) and Carlitz series for m = 2, 3 through degree {theorem_degree}"
    checks.append(_run("(sum (-1)^n h_mn)^-1 = sum_n r_(m^n)", "every run of length m", all_equal))

    def heuler():
        e = ncsf.eulerian_element(N)
        items = []
        for name, fn, alt in (("Phi", ncsf.phi, False), ("Phi-hat", ncsf.phi_hat, True)):
            got = fn(e)
            want = series.eulerian_series(N, alternating=alt)
            items.append((got == want, f"{name}: images differ"))
        r = e.to_r()
        for L in (tuple(L) for n in range(1, N + 1) for L in compositions(n)):
            c = r.coefficient(L)
            ok = bool(c) and c.coeff_list() == [0] * len(L) + [1]
            items.append((ok, f"r{L} has coefficient {c}, expected t^{len(L)}"))
        ok, bad = _first_bad(items)
        return ok, bad or f"ribbon coefficients t^(parts) and both Eulerian images through degree {N}"
    checks.append(_run("(1-t)[1 - t sum (1-t)^n h_n]^-1 = sum_L t^(parts of L) r_L",
                       "Eulerian ribbon generating function", heuler))
    return checks


# -- recurrences --------------------------------------------------------------

def recurrences_suite(n_max: int, seed: int = 0) -> list[Check]:
    N = max(n_max, 12)
    checks = []

    def f_routes():
        routes = recurrences.f_routes(N)
        base = routes["recurrence"].values
        items = [(base[12] == F_12, f"f(12) = {base[12]}")]
        for name, table in routes.items():
            ok, text = _seq_compare(name, table.values, base)
            items.append((ok, text))
        ok, bad = _first_bad(items)
        return ok, bad or (f"{len(routes)} routes agree through n={N} "
                           f"(oracle through n={len(routes['oracle']) - 1})")
    checks.append(_run("six routes to f(n) agree", "f(n) table", f_routes))

    def cd():
        routes = recurrences.cd_routes(N)
        c0, d0 = routes["quotient"]
        items = []
        for name, (c, d) in routes.items():
            items.append(_seq_compare(f"{name} c", c.values, c0.values))
            items.append(_seq_compare(f"{name} d", d.values, d0.values))
        t = oracle.oracle_sequences(min(N, 9))
        items.append(_seq_compare("oracle c", t.c, c0.values))
        items.append(_seq_compare("oracle d", t.d, d0.values))
        g = recurrences.fg_recurrence(N)[1].values
        items.append(_seq_compare("g parity", recurrences.g_from_cd(c0.values, d0.values), g))
        ok, bad = _first_bad(items)
        return ok, bad or f"3 series routes agree through n={N}, oracle through n=9, g parity holds"
    checks.append(_run("c(n), d(n) routes agree; g(n) = c(n) or d(n) by parity",
                       "last alternating run of length 1 or 2", cd))

    def ode():
        rep = recurrences.ode_verify(25)
        return rep.passed, rep.detail()
    checks.append(_run("F1, F2, G1, G2 satisfy the differential system",
                       "ODE system for the split generating functions", ode))

    def sanity():
        f, g = recurrences.fg_recurrence(20)
        items = []
        for n in range(21):
            items.append((0 <= g[n] <= f[n] <= factorial(n), f"n={n}: bounds fail"))
        ratios = [Fraction(f[n], factorial(n)) for n in range(21)]
        for n in range(2, 20):
            items.append((ratios[n + 1] <= ratios[n], f"f(n)/n! increases at n={n}"))
        ok, bad = _first_bad(items)
        return ok, bad or "0 <= g(n) <= f(n) <= n!, f(n)/n! decreasing for 2 <= n <= 20"
    checks.append(_run("sequence sanity bounds", "f(n)/n! ~ 2 beta^(n+1) with beta < 1", sanity))
    return checks


# -- q,t identities -----------------------------------------------------------

def _oracle_tq(n, t_cap, q_cap, alt=True):
    t, q = tq_vars(t_cap, q_cap)
    total = t * 0
    for (d, m), c in oracle.joint_distribution(n, "alt" if alt else "descent").items():
        total = total + t ** d * q ** m * c
    return total


def qt_suite(n_max: int, seed: int = 0, t_deg: int = 7, q_deg: int = 12) -> list[Check]:
    N = n_max
    checks = []

    def remmel():
        t, q = tq_vars(t_deg, q_deg)
        rhs = series.remmel_rhs(N, t_deg, q_deg)
        items = []
        den = t * 0 + 1
        for n in range(N + 1):
            den = den * (1 - t * q ** n)
            lhs = _oracle_tq(n, t_deg, q_deg) / factorial(n)
            got = rhs[n] * den
            items.append((got == lhs, f"n={n}: {got} != {lhs}"))
        ok, bad = _first_bad(items)
        return ok, bad or f"n <= {N} in Q[t,q]/(t^{t_deg + 1}, q^{q_deg + 1})"
    checks.append(_run("sum t^altdes q^altmaj / prod (1 - t q^i) = sum_k t^k prod_j (sec + tan)(x q^j)",
                       "Remmel's alternating major index formula", remmel))

    def altmaj():
        _, q = tq_vars(0, q_deg)
        rhs = series.altmaj_product(N, q_deg)
        items = []
        den = q * 0 + 1
        for n in range(N + 1):
            if n:
                den = den * (1 - q ** n)
            lhs = _oracle_tq(n, None, q_deg).substitute(0, 1) / factorial(n)
            lhs = lhs.truncate((0, q_deg))
            got = rhs[n] * den
            items.append((got == lhs, f"n={n}: {got} != {lhs}"))
        ok, bad = _first_bad(items)
        return ok, bad or f"n <= {N} modulo q^{q_deg + 1}"
    checks.append(_run("sum q^altmaj / (q)_n = prod_j (sec + tan)(x q^j)",
                       "limit t -> 1 of Remmel's formula", altmaj))

    def ncmaj():
        rep = ncsf.ncmaj_identity(N, q_deg)
        return rep.passed, rep.detail()
    checks.append(_run("H(q^k)...H(q)H(1) = sum_L q^maj(L) r_L / (q)_n",
                       "noncommutative major index product", ncmaj))

    def desmaj():
        rep = ncsf.desmaj_identity(N, t_deg, q_deg)
        return rep.passed, rep.detail()
    checks.append(_run("sum_k t^k H(q^k)...H(1) = sum_L t^des q^maj r_L / prod (1 - t q^i)",
                       "barred-word identity for descents and major index", desmaj))
    return checks


# -- asymptotics ---------------------------------------------------------------

def asymptotics_suite(n_max: int = 40, seed: int = 0) -> list[Check]:
    report = asymptotics.zero_report()

    def zeros():
        items = [
            (abs(report.alpha * report.beta - 1) < 1e-15, "beta != 1/alpha"),
            (abs(report.gamma * report.delta - 1) < 1e-15, "delta != 1/gamma"),
            (report.zero_count_inside_gamma == 1, f"{report.zero_count_inside_gamma} zeros inside |z| < gamma"),
            (report.secondary_derivative > 1e-3, "secondary zero is not simple"),
            (report.numerator_at_alpha > 1, "numerator vanishes near alpha"),
            (report.secondary_zeros[0] == report.secondary_zeros[1].conjugate(), "pair not conjugate"),
        ]
        ok, bad = _first_bad(items)
        return ok, bad or (f"alpha={report.alpha:.12f}, gamma={report.gamma:.12f}, "
                           f"one zero inside |z| = gamma - 0.01, |D'(z2)| = {report.secondary_derivative:.4f}")
    checks = [_run("dominant zero simple and isolated; secondary pair simple and conjugate",
                   "poles of F", zeros)]

    def residue():
        r = asymptotics.residue_check(report.alpha)
        ok = abs(r["closed_form"] + 0.5) < 1e-6 and abs(r["finite_difference"] - r["closed_form"]) < 1e-6
        return ok, f"U'(alpha) = {r['closed_form']:.12f} (closed), {r['finite_difference']:.12f} (difference)"
    checks.append(_run("U'(alpha) = -1/2", "residue of F at alpha", residue))

    def table():
        rows = asymptotics.error_table(n_max).rows[5:]
        ratios = [r.scaled_error for r in rows]
        if not ratios:
            return True, "no rows with n >= 5"
        return max(ratios) <= 10, f"max |f(n)/n! - 2 beta^(n+1)| / delta^n = {max(ratios):.4f} for 5 <= n <= {n_max}"
    checks.append(_run("error of 2 beta^(n+1) is O(delta^n)", "dominant pole asymptotics", table))
    return checks


SUITE_FUNCS = {
    "oracle": oracle_suite,
    "series-identities": series_suite,
    "ncsf": ncsf_suite,
    "recurrences": recurrences_suite,
    "qt": qt_suite,
}


def run_suite(suite: str, n_max: int | None = None, seed: int = 0) -> list[Check]:
    if n_max is not None:
        if n_max < 0:
            raise DomainError("--n-max must be nonnegative")
        if n_max > oracle.DEFAULT_LIMIT and suite != "recurrences":
            raise ResourceError(f"--n-max {n_max} exceeds the oracle cap {oracle.DEFAULT_LIMIT}")
    if suite == "all":
        out = []
        for name, fn in SUITE_FUNCS.items():
            out.extend(fn(DEFAULT_N_MAX[name] if n_max is None else _suite_n(name, n_max), seed))
        out.extend(asymptotics_suite(40, seed))
        return out
    fn = SUITE_FUNCS[suite]
    return fn(DEFAULT_N_MAX[suite] if n_max is None else _suite_n(suite, n_max), seed)


def _suite_n(name, n_max):
    # --n-max bounds permutation sizes; the recurrence routes always cover the full f(n) table
    return max(n_max, 12) if name == "recurrences" else n_max
