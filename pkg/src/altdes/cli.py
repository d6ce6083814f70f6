"""Command-line interface: ``altdes {seq,series,verify,asym}``.

Exit codes: 0 success, 1 a verification check failed, 2 usage error,
3 resource or numeric error.  Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import asymptotics, checks, ncsf, recurrences
from .errors import BasisError, DomainError, NumericError, ResourceError
from .perm import Composition, beta, beta_hat, euler_numbers
from .series import NAMED_SERIES, eulerian_polynomials, named_series

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

SEQ_NAMES = ("f", "g", "c", "d", "euler", "eulerian", "alt-eulerian", "beta", "beta-hat")
SEQ_CAPS = {"f": 200, "g": 200, "euler": 200, "c": 60, "d": 60, "eulerian": 20, "alt-eulerian": 20}
COMPOSITION_CAP = 60
SERIES_CAP = 60
SERIES_ALIASES = {"F": "F_closed", "C": "C_series", "D": "D_series"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    # --format is accepted before or after the subcommand
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("plain", "json", "csv"), default=argparse.SUPPRESS)

    p = _Parser(prog="altdes", description="Alternating descent enumeration toolkit.")
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("seq", parents=[fmt], help="exact sequences and polynomials")
    s.add_argument("--name", choices=SEQ_NAMES, required=True)
    s.add_argument("--limit", type=int, default=12, help="largest n (default 12)")
    s.add_argument("--composition", help="comma-separated parts, for beta and beta-hat")

    s = sub.add_parser("series", parents=[fmt], help="exact power series coefficients")
    s.add_argument("--name", required=True, choices=sorted(NAMED_SERIES) + sorted(SERIES_ALIASES),
                   metavar="NAME")
    s.add_argument("--order", type=int, default=12)
    s.add_argument("--egf", action="store_true", help="multiply the x^n coefficient by n!")
    s.add_argument("--basis", choices=("h", "r"),
                   help="for F, C, D: print the NCSF preimage in this basis instead")

    s = sub.add_parser("verify", parents=[fmt], help="run verification suites")
    s.add_argument("--suite", choices=checks.SUITES, default="all")
    s.add_argument("--n-max", type=int, default=None)
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("asym", parents=[fmt], help="poles and coefficient asymptotics")
    s.add_argument("--n-max", type=int, default=40)
    s.add_argument("--tol", type=float, default=1e-12)
    return p


# -- subcommands --------------------------------------------------------------

def _check_limit(n, cap, what):
    if n < 0:
        raise DomainError(f"{what} must be nonnegative")
    if n > cap:
        raise ResourceError(f"{what} {n} exceeds cap {cap}")


def cmd_seq(args):
    name = args.name
    if name in ("beta", "beta-hat"):
        if not args.composition:
            raise UsageError(f"seq --name {name} requires --composition")
        L = Composition.parse(args.composition)
        _check_limit(L.n, COMPOSITION_CAP, "composition size")
        value = beta(L) if name == "beta" else beta_hat(L)
        return {"composition": list(L)}, [{"composition": list(L), "value": value}]
    n = args.limit
    _check_limit(n, SEQ_CAPS[name], "--limit")
    if name in ("f", "g"):
        f, g = recurrences.fg_recurrence(n)
        values = (f if name == "f" else g).values
    elif name in ("c", "d"):
        c, d = recurrences.cd_tables(n)
        values = (c if name == "c" else d).values
    elif name == "euler":
        values = euler_numbers(n)
    else:
        polys = eulerian_polynomials(n, alternating=name == "alt-eulerian")
        return {"limit": n}, [{"n": k, "coefficients": p} for k, p in enumerate(polys)]
    return {"limit": n}, [{"n": k, "value": int(v)} for k, v in enumerate(values)]


def cmd_series(args):
    _check_limit(args.order, SERIES_CAP, "--order")
    name = args.name
    params = {"name": name, "order": args.order, "egf": args.egf, "basis": args.basis}
    if args.basis:
        if name not in SERIES_ALIASES:
            raise UsageError("--basis applies only to F, C and D")
        e = _ncsf_preimage(name, args.order).in_basis(args.basis)
        results = [{"composition": list(L), "coefficient": str(c)}
                   for L, c in sorted(e.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))]
        return params, results
    s = named_series(SERIES_ALIASES.get(name, name), args.order)
    values = s.egf() if args.egf else list(s.coeffs)
    return params, [{"n": n, "coefficient": str(v)} for n, v in enumerate(values)]


def _ncsf_preimage(name, N):
    if name == "F":
        return ncsf.runs_shorter_than(3, N)
    v = [1] if name == "C" else [0, 1]
    return ncsf.last_run_rhs([1, 1], v, N)


def cmd_verify(args):
    result = checks.run_suite(args.suite, args.n_max, args.seed)
    return {"suite": args.suite, "n_max": args.n_max, "seed": args.seed}, result


def cmd_asym(args):
    if args.tol < 1e-12:
        raise DomainError("--tol must be at least 1e-12")
    if args.n_max < 0:
        raise DomainError("--n-max must be nonnegative")
    report = asymptotics.zero_report(args.tol)
    if args.n_max:
        table = asymptotics.error_table(args.n_max)
    else:
        table = asymptotics.ErrorTable(beta=report.beta, delta=report.delta)
    return {"n_max": args.n_max, "tol": args.tol}, (report, table)


# -- rendering ----------------------------------------------------------------

def _csv(rows, header):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def render(command, params, results, fmt) -> str:
    if command == "verify":
        check_records = [c.as_record() for c in results]
        if fmt == "json":
            return _json(command, params, [], check_records)
        if fmt == "csv":
            return _csv([[c["name"], c["paper_ref"], c["pass"], c["detail"]] for c in check_records],
                         ["name", "paper_ref", "pass", "detail"])
        lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}  [{c.paper_ref}]  {c.detail}"
                 for c in results]
        passed = sum(c.passed for c in results)
        lines.append(f"{passed}/{len(results)} checks passed")
        return "\n".join(lines) + "\n"

    if command == "asym":
        report, table = results
        if fmt == "json":
            return _json(command, params, [{"zero_report": report.as_dict(),
                                            "error_table": table.as_records()}], [])
        if fmt == "csv":
            return table.to_csv()
        z = report.secondary_zeros[0]
        lines = [
            f"alpha = {report.alpha:.12f}",
            f"beta = {report.beta:.12f}",
            f"secondary zeros = {z.real:.10f} +/- {abs(z.imag):.10f}i",
            f"gamma = {report.gamma:.12f}",
            f"delta = {report.delta:.12f}",
            f"U'(alpha) = {report.residue_check:.12f}",
            f"zeros inside |z| = gamma - 0.01: {report.zero_count_inside_gamma}",
            f"|D'| at secondary zeros = {report.secondary_derivative:.6f}",
            f"Taylor terms = {report.truncation_terms}, evaluation bound at alpha = "
            f"{report.evaluation_bound:.3e}",
        ]
        if table.rows:
            lines.append("")
            lines.append(f"{'n':>3} {'f(n)/n!':>24} {'2 beta^(n+1)':>24} {'abs error':>12} {'/ delta^n':>10}")
            for r in table.rows:
                lines.append(f"{r.n:>3} {r.ratio_exact:>24.17g} {r.estimate:>24.17g} "
                             f"{r.abs_error:>12.4e} {r.scaled_error:>10.5f}")
        return "\n".join(lines) + "\n"

    if fmt == "json":
        return _json(command, params, results, [])
    if command == "series" and params.get("basis"):
        if fmt == "csv":
            return _csv([[",".join(map(str, r["composition"])), r["coefficient"]] for r in results],
                        ["composition", "coefficient"])
        basis = params["basis"]
        return "\n".join(f"{basis}({','.join(map(str, r['composition']))}): {r['coefficient']}"
                         for r in results) + "\n"
    if results and "coefficients" in results[0]:
        if fmt == "csv":
            return _csv([[r["n"], " ".join(map(str, r["coefficients"]))] for r in results],
                        ["n", "coefficients"])
        return "\n".join(f"{r['n']}: {r['coefficients']}" for r in results) + "\n"
    key = "coefficient" if command == "series" else "value"
    if results and "composition" in results[0]:
        if fmt == "csv":
            return _csv([[",".join(map(str, r["composition"])), r[key]] for r in results],
                        ["composition", key])
        return f"{results[0][key]}\n"
    if fmt == "csv":
        return _csv([[r["n"], r[key]] for r in results], ["n", key])
    return ",".join(str(r[key]) for r in results) + "\n"


def _json(command, params, results, check_records):
    return json.dumps({"command": command, "params": params, "results": results,
                       "checks": check_records}, sort_keys=True) + "\n"


COMMANDS = {"seq": cmd_seq, "series": cmd_series, "verify": cmd_verify, "asym": cmd_asym}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        params, results = COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, BasisError) as exc:
        print(f"altdes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceError, NumericError) as exc:
        print(f"altdes: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    sys.stdout.write(render(args.command, params, results, args.format))
    if args.command == "verify":
        failed = [c for c in results if not c.passed]
        if failed:
            print(f"altdes: {len(failed)} check(s) failed; first: {failed[0].name}: "
                  f"{failed[0].detail}", file=sys.stderr)
            return EXIT_CHECK
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
