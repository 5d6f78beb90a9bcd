"""Command-line front end.

Subcommands: ``spectrum | sums | bounds | disk | verify``.  Output formats:
``table`` (default), ``json``, ``csv``.  Exact rationals are rendered
losslessly as "num/den" next to a 15-significant-digit decimal; identical
inputs produce byte-identical output.  The exit code is 0 only when every
requested computation succeeded and every internal bound held.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import nlbvp
from nlbvp import _kernels, bounds, disk, eigen, oracles, rayleigh

_FORMATS = ("table", "json", "csv")
_SUM_METHODS = ("recursion", "bernoulli", "newton", "direct", "nystrom", "all")
_DIRECT_TERMS = 100_000
_NYSTROM_N = 1024


def _fmt(x: float) -> str:
    if math.isinf(x):
        return "-inf" if x < 0 else "inf"
    return format(float(x), ".15g")


def _fmt_fraction(fr: Fraction) -> str:
    return f"{fr.numerator}/{fr.denominator}"


@dataclass(frozen=True)
class ResultRow:
    label: str
    exact: str | None
    decimal: str
    bound: str | None


@dataclass
class OutputRecord:
    command: str
    inputs: dict[str, str]
    results: list[ResultRow] = field(default_factory=list)

    def add(self, label: str, decimal: str, exact: str | None = None, bound: str | None = None) -> None:
        self.results.append(ResultRow(label, exact, decimal, bound))

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": dict(self.inputs),
            "results": [
                {"label": r.label, "exact": r.exact, "decimal": r.decimal, "bound": r.bound}
                for r in self.results
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> OutputRecord:
        record = cls(data["command"], dict(data["inputs"]))
        for r in data["results"]:
            record.add(r["label"], r["decimal"], r["exact"], r["bound"])
        return record


def render(record: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record.to_dict(), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["label", "exact", "decimal", "bound"])
        for r in record.results:
            writer.writerow([r.label, r.exact or "", r.decimal, r.bound or ""])
        return buf.getvalue()
    header = [("label", "exact", "decimal", "bound")]
    body = [(r.label, r.exact or "", r.decimal, r.bound or "") for r in record.results]
    widths = [max(len(row[i]) for row in header + body) for i in range(4)]
    lines = [f"# {record.command}  " + "  ".join(f"{k}={v}" for k, v in record.inputs.items())]
    for row in header + body:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


# ----------------------------- subcommands -----------------------------


def cmd_spectrum(count: int) -> tuple[OutputRecord, bool]:
    record = OutputRecord("spectrum", {"count": str(count)})
    for entry in eigen.spectrum(count):
        r1, r2 = eigen.boundary_residual(entry.index)
        record.add(
            f"lambda_{entry.index} ({entry.family.value})",
            _fmt(entry.value),
            bound=_fmt(max(r1, r2)),
        )
    return record, True


def _exact_rows(record: OutputRecord, table: rayleigh.RayleighTable, tag: str) -> None:
    for p in range(1, len(table) + 1):
        value = table.a(p)
        record.add(f"A_{p} ({tag})", _fmt(float(value)), exact=_fmt_fraction(value))


def cmd_sums(maxp: int, method: str) -> tuple[OutputRecord, bool]:
    record = OutputRecord("sums", {"max_p": str(maxp), "method": method})
    ok = True

    exact_tables = []
    if method in ("recursion", "all"):
        exact_tables.append(rayleigh.power_sums_recursion(maxp))
    if method in ("bernoulli", "all"):
        exact_tables.append(rayleigh.power_sums_bernoulli(maxp))
    if method in ("newton", "all"):
        if method == "newton" and maxp > rayleigh.NEWTON_CAP:
            raise ValueError(
                f"the newton pipeline is capped at max-p <= {rayleigh.NEWTON_CAP}; got {maxp}"
            )
        exact_tables.append(rayleigh.power_sums_newton(min(maxp, rayleigh.NEWTON_CAP)))
    for table in exact_tables:
        _exact_rows(record, table, table.method.value)

    if method == "all" and len(exact_tables) > 1:
        discrepancy = Fraction(0)
        shortest = min(len(t) for t in exact_tables)
        for p in range(1, shortest + 1):
            values = [t.a(p) for t in exact_tables]
            discrepancy = max(discrepancy, max(values) - min(values))
        record.add("max_exact_discrepancy", _fmt(float(discrepancy)), exact=_fmt_fraction(discrepancy))
        ok = ok and discrepancy == 0

    if method in ("direct", "all"):
        record.add("A_1 (exact identity)", _fmt(0.0), exact="0/1")
        for p in range(2, maxp + 1):
            report = oracles.direct_sum(p, _DIRECT_TERMS)
            record.add(
                f"A_{p} (direct M={_DIRECT_TERMS})",
                _fmt(report.value),
                bound=_fmt(report.tail_bound),
            )
            ok = ok and report.abs_err <= report.tail_bound

    if method in ("nystrom", "all"):
        for p in range(1, maxp + 1):
            report = oracles.nystrom_trace_power(_NYSTROM_N, p)
            label = f"A_{p} (nystrom N={_NYSTROM_N})"
            if report.warning:
                label += " [warn]"
            record.add(label, _fmt(report.value))
    return record, ok


def cmd_bounds(mmax: int, scheme: str) -> tuple[OutputRecord, bool]:
    record = OutputRecord("bounds", {"m_max": str(mmax), "scheme": scheme})
    table = rayleigh.power_sums_recursion(max(2 * mmax + 1, 3))
    a = eigen.coth_alpha()
    lam0 = -4.0 * a * a
    record.add("lambda_0 (root finder)", _fmt(lam0))
    ok = True
    schemes = []
    if scheme in ("root", "both"):
        schemes.append(("root", bounds.bound_root_pair))
    if scheme in ("ratio", "both"):
        schemes.append(("ratio", bounds.bound_ratio_pair))
    for tag, producer in schemes:
        for m in range(1, mmax + 1):
            pair = producer(m, table)
            exact_lower = exact_upper = None
            if tag == "ratio":
                exact_lower = _fmt_fraction(table.a(2 * m) / table.a(2 * m + 1))
                exact_upper = _fmt_fraction(table.a(2 * m - 1) / table.a(2 * m))
            record.add(f"{tag} m={m} lower", _fmt(pair.lower), exact=exact_lower)
            record.add(f"{tag} m={m} upper", _fmt(pair.upper), exact=exact_upper)
            contains = pair.lower < lam0 < pair.upper
            record.add(f"{tag} m={m} contains_lambda0", "1" if contains else "0")
            ok = ok and contains
    return record, ok


def cmd_disk(maxl: int, tol: float) -> tuple[OutputRecord, bool]:
    if maxl < 2:
        raise ValueError("max-l must be >= 2")
    if tol <= 0:
        raise ValueError("tol must be positive")
    record = OutputRecord("disk", {"max_l": str(maxl), "tol": _fmt(tol)})
    record.add("disk_sum l=1", "divergent")
    ok = True
    for l in range(2, maxl + 1):
        result = disk.disk_power_sum(l, tol)
        record.add(
            f"disk_sum l={l} (nu_cutoff={result.nu_cutoff})",
            _fmt(result.value),
            bound=_fmt(result.tail_bound),
        )
        if l == 2:
            closed = disk.disk_second_power_closed_form()
            record.add("disk_sum l=2 closed form", _fmt(closed))
            ok = ok and abs(result.value - closed) <= result.tail_bound
    return record, ok


# ------------------------------- verify --------------------------------


def _check_exact_low_order() -> tuple[bool, str]:
    table = rayleigh.power_sums_recursion(5)
    expected = (Fraction(0), Fraction(1, 24), Fraction(-1, 240), Fraction(41, 40320), Fraction(-107, 725760))
    ok = table.values == expected
    return ok, "A_1..A_5 = " + ", ".join(_fmt_fraction(v) for v in table.values)


def _check_pipeline_agreement() -> tuple[bool, str]:
    p = 12
    t1 = rayleigh.power_sums_recursion(p)
    t2 = rayleigh.power_sums_bernoulli(p)
    t3 = rayleigh.power_sums_newton(p)
    ok = t1.values == t2.values == t3.values
    return ok, f"three exact pipelines identical up to p={p}: {ok}"


def _check_nystrom(n_large: int) -> tuple[bool, str]:
    ok = True
    for n in (16, 128, 1024):
        report = oracles.nystrom_trace_power(n, 1)
        ok = ok and report.value == 0.0
    r2 = oracles.nystrom_trace_power(n_large, 2)
    r3 = oracles.nystrom_trace_power(n_large, 3)
    ok = ok and r2.abs_err <= 1e-4 and r3.abs_err <= 1e-4
    return ok, f"p=1 trace exactly 0; N={n_large}: |err(p=2)|={r2.abs_err:.2e}, |err(p=3)|={r3.abs_err:.2e}"


def _check_direct_sums() -> tuple[bool, str]:
    r2 = oracles.direct_sum(2, 10**6)
    r3 = oracles.direct_sum(3, 10**4)
    ok = r2.abs_err <= r2.tail_bound <= 2e-7 and r3.abs_err <= 1e-9
    return ok, (
        f"p=2 M=1e6: err={r2.abs_err:.2e} <= bound={r2.tail_bound:.2e}; "
        f"p=3 M=1e4: err={r3.abs_err:.2e}"
    )


def _check_secular_constants() -> tuple[bool, str]:
    a = eigen.coth_alpha()
    lam0 = eigen.eigenvalue(0)
    c0 = eigen.normalization(0)
    ok = abs(a - 1.19967864) < 5e-9 and abs(lam0 - -5.756915) < 5e-7 and abs(c0 - 0.7812598) < 5e-8
    return ok, f"alpha={a:.10f}, lambda_0={lam0:.8f}, C_0={c0:.9f}"


def _check_boundary(perturb_alpha: float) -> tuple[bool, str]:
    worst_res = 0.0
    worst_norm = 0.0
    for n in range(51):
        override = eigen.coth_alpha() + perturb_alpha if (perturb_alpha and n == 0) else None
        r1, r2 = eigen.boundary_residual(n, alpha_override=override)
        worst_res = max(worst_res, r1, r2)
        worst_norm = max(worst_norm, abs(eigen.normalization_check(n, panels=32) - 1.0))
    ok = worst_res < 1e-9 and worst_norm <= 1e-9
    return ok, f"n<=50: max boundary residual {worst_res:.2e}, max |norm-1| {worst_norm:.2e}"


def _check_partial_sums() -> tuple[bool, str]:
    m_terms = 10**6
    odd = oracles.odd_mode_power_sum(1, m_terms)
    err_odd = abs(odd - 0.125)
    a = eigen.coth_alpha()
    even = oracles.even_family_partial_sum(m_terms)
    err_even = abs(even - (1.0 / (a * a) - 0.5))
    ok = err_odd <= 2e-7 and err_even <= 2e-6
    return ok, f"M=1e6: |odd sum - 1/8|={err_odd:.2e}, |even sum - (1/a^2 - 1/2)|={err_even:.2e}"


def _check_bounds() -> tuple[bool, str]:
    table = rayleigh.power_sums_recursion(40)
    a = eigen.coth_alpha()
    lam0 = -4.0 * a * a
    ok = True
    prev_lower = -math.inf
    prev_upper = math.inf
    for m in range(1, 11):
        root_pair = bounds.bound_root_pair(m, table)
        ratio_pair = bounds.bound_ratio_pair(m, table)
        ok = ok and root_pair.lower < lam0 < root_pair.upper
        ok = ok and ratio_pair.lower < lam0 < ratio_pair.upper
        ok = ok and ratio_pair.lower >= prev_lower and ratio_pair.upper <= prev_upper
        prev_lower, prev_upper = ratio_pair.lower, ratio_pair.upper
    estimate, interval = bounds.converge_lambda0(1e-3, 19, table)
    ok = ok and abs(estimate - lam0) <= 1e-3
    return ok, f"m<=10 sandwiches hold; converge at m={interval.m}: estimate={estimate:.7f}"


def _check_tan_reference() -> tuple[bool, str]:
    r1 = oracles.tan_reference_sum(1, 10**6)
    r2 = oracles.tan_reference_sum(2, 10**3)
    ok = r1.abs_err <= 2e-7 and r2.abs_err <= 1e-9 and r1.abs_err <= r1.tail_bound and r2.abs_err <= r2.tail_bound
    return ok, f"|sum - 1/10|={r1.abs_err:.2e}, |sum - 1/350|={r2.abs_err:.2e}"


def _check_disk(bessel_terms: int) -> tuple[bool, str]:
    ok = disk.sigma(1, 0) == Fraction(1, 4)
    for nu in range(21):
        ok = ok and disk.sigma(2, nu) == Fraction(1, 16 * (nu + 1) ** 2 * (nu + 2))
    result = disk.disk_power_sum(2, tol=1e-11)
    closed = disk.disk_second_power_closed_form()
    ok = ok and abs(result.value - closed) <= 1e-10
    try:
        disk.disk_power_sum(1)
        ok = False
    except disk.DivergentSumError:
        pass
    partial = disk.bessel_zero_partial_sum(0, 2, bessel_terms)
    tail = disk.bessel_zero_tail_bound(0, 2, bessel_terms)
    ok = ok and abs(partial - float(disk.sigma(2, 0))) <= tail
    return ok, (
        f"sigma_4 closed form matches nu<=20; |disk l=2 - closed|={abs(result.value - closed):.2e}; "
        f"bessel partial sum within {tail:.2e}"
    )


def _check_kernel_diag() -> tuple[bool, str]:
    c0, c1, c2 = oracles.iterated_kernel_diag2_coeffs()
    integral = oracles.iterated_kernel_diag2_integral()
    a2 = rayleigh.power_sums_recursion(2).a(2)
    ok = (c0, c1, c2) == (Fraction(1, 12), Fraction(-1, 4), Fraction(1, 4)) and integral == a2
    # Guard against the tempting constant term 1/2: it integrates to 11/24.
    wrong = Fraction(1, 2) + c1 / 2 + c2 / 3
    ok = ok and wrong == Fraction(11, 24) and wrong != a2
    return ok, f"K2 diagonal integrates to {_fmt_fraction(integral)}; constant term 1/2 would give 11/24"


def cmd_verify(quick: bool, perturb_alpha: float) -> tuple[OutputRecord, bool]:
    record = OutputRecord("verify", {"quick": str(quick).lower(), "perturb_alpha": _fmt(perturb_alpha)})
    record.add("version", nlbvp.__version__)
    record.add("kernel_backend", _kernels.backend_name())
    n_large = 1024 if quick else 4096
    bessel_terms = 120 if quick else 500
    record.add("config nystrom_n", str(n_large))
    record.add("config bessel_terms", str(bessel_terms))

    checks = [
        ("exact_low_order_values", _check_exact_low_order),
        ("pipeline_agreement_p12", _check_pipeline_agreement),
        ("nystrom_traces", lambda: _check_nystrom(n_large)),
        ("direct_sum_tails", _check_direct_sums),
        ("secular_constants", _check_secular_constants),
        ("boundary_and_normalization", lambda: _check_boundary(perturb_alpha)),
        ("family_partial_sums", _check_partial_sums),
        ("negative_eigenvalue_bounds", _check_bounds),
        ("tan_reference_sums", _check_tan_reference),
        ("disk_power_sums", lambda: _check_disk(bessel_terms)),
        ("iterated_kernel_diagonal", _check_kernel_diag),
    ]
    all_ok = True
    for name, runner in checks:
        try:
            ok, detail = runner()
        except Exception as exc:  # a crashed check is a failed check
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        all_ok = all_ok and ok
        record.add(f"check {name}", "PASS" if ok else "FAIL")
        if not ok:
            record.add(f"check {name} detail", detail)
    return record, all_ok


# -------------------------------- main ---------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nlbvp",
        description="Spectrum and reciprocal power sums of the coupled-boundary Laplacian on (0,1).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_spec = sub.add_parser("spectrum", help="list eigenvalues with family tags and boundary residuals")
    p_spec.add_argument("--count", type=int, default=10)
    p_spec.add_argument("--format", choices=_FORMATS, default="table")

    p_sums = sub.add_parser("sums", help="reciprocal power sums A_p by the chosen pipeline")
    p_sums.add_argument("--max-p", type=int, default=5)
    p_sums.add_argument("--method", choices=_SUM_METHODS, default="recursion")
    p_sums.add_argument("--format", choices=_FORMATS, default="table")

    p_bounds = sub.add_parser("bounds", help="sandwich bounds for the negative eigenvalue")
    p_bounds.add_argument("--m-max", type=int, default=5)
    p_bounds.add_argument("--scheme", choices=("root", "ratio", "both"), default="both")
    p_bounds.add_argument("--format", choices=_FORMATS, default="table")

    p_disk = sub.add_parser("disk", help="unit-disk reciprocal power sums from Bessel zeros")
    p_disk.add_argument("--max-l", type=int, default=4)
    p_disk.add_argument("--tol", type=float, default=1e-9)
    p_disk.add_argument("--format", choices=_FORMATS, default="table")

    p_verify = sub.add_parser("verify", help="run the full cross-validation suite")
    p_verify.add_argument("--quick", action="store_true", help="reduce the Nystrom and Bessel sizes")
    p_verify.add_argument(
        "--perturb-alpha",
        type=float,
        default=0.0,
        help="test hook: shift the secular constant to confirm the residual checks react",
    )
    p_verify.add_argument("--format", choices=_FORMATS, default="table")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "spectrum":
            if args.count < 1:
                parser.error("--count must be >= 1")
            record, ok = cmd_spectrum(args.count)
        elif args.command == "sums":
            if args.max_p < 1:
                parser.error("--max-p must be >= 1")
            record, ok = cmd_sums(args.max_p, args.method)
        elif args.command == "bounds":
            if args.m_max < 1:
                parser.error("--m-max must be >= 1")
            record, ok = cmd_bounds(args.m_max, args.scheme)
        elif args.command == "disk":
            record, ok = cmd_disk(args.max_l, args.tol)
        else:
            record, ok = cmd_verify(args.quick, args.perturb_alpha)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(record, args.format))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
