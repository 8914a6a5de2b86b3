"""Command-line interface.

All numbers cross this boundary as canonical "p/q" strings; nothing is ever
rendered in decimal.  Exit codes: 0 on success, 2 on a domain error (bad
bundle parameters and friends), 1 on a verification failure.

    kreckstolz compute --n 1 --k 2 --l 3 --json
    kreckstolz laurent --n 2 --check-leading
    kreckstolz table --n 1 --l 3 --k-start 2 --k-end 20 --format csv
    kreckstolz series --series lgenus --order 3
    kreckstolz nm --m 2
    kreckstolz verify --n-max 3
"""

from __future__ import annotations

import json
import math
import sys

import click

from .bernoulli import series_coeff
from .genera import n_polynomial
from .invariant import BundleParams, SInvariantReport, s_invariant
from .moduli import component_table, leading_coeff_check, s_laurent
from .rationals import format_rational
from .verify import run_all

TABLE_FIELDS = ("n", "k", "l", "spin", "s", "abs_s", "ek_mod1")


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _report_record(report: SInvariantReport) -> dict[str, str]:
    p = report.params
    return {
        "n": str(p.n),
        "k": str(p.k),
        "l": str(p.l),
        "spin": _flag(report.spin),
        "s": format_rational(report.s),
        "t_w": format_rational(report.t_w),
        "ahat_part": format_rational(report.ahat_part),
        "lgenus_part": format_rational(report.lgenus_part),
        "signature_term": str(report.signature_term),
        "ek_mod1": format_rational(report.ek_mod1),
        "ek_mod1_halved": format_rational(report.ek_mod1_halved),
    }


def _domain_error(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


@click.group()
def main() -> None:
    """Exact s-invariants of circle bundles over CP^2n x CP^1."""


@main.command()
@click.option("--n", required=True, type=int, help="base dimension parameter (>= 1)")
@click.option("--k", required=True, type=int, help="CP^1 Euler coefficient (positive even)")
@click.option("--l", required=True, type=int, help="CP^2n Euler coefficient (positive odd)")
@click.option("--json", "as_json", is_flag=True, help="emit a single JSON object")
def compute(n: int, k: int, l: int, as_json: bool) -> None:
    """Evaluate s(k, l) in dimension 4n+3 and print the full report."""
    try:
        report = s_invariant(BundleParams(n=n, k=k, l=l))
    except ValueError as exc:
        _domain_error(str(exc))
        return
    record = _report_record(report)
    if as_json:
        click.echo(json.dumps(record))
    else:
        for key, value in record.items():
            click.echo(f"{key} = {value}")


@main.command()
@click.option("--n", required=True, type=int, help="base dimension parameter (>= 1)")
@click.option("--check-leading", is_flag=True, help="compare the top coefficient with its closed form")
@click.option("--json", "as_json", is_flag=True, help="emit a single JSON object")
def laurent(n: int, check_leading: bool, as_json: bool) -> None:
    """Recover the Laurent polynomial p with s(k, l) = k * p(l)."""
    if n < 1:
        _domain_error("n must be a positive integer")
        return
    poly = s_laurent(n)
    record: dict[str, str] = {
        "n": str(n),
        "min_exponent": str(poly.min_exponent()),
        "max_exponent": str(poly.max_exponent()),
    }
    for e, c in poly.items():
        record[f"coeff[{e}]"] = format_rational(c)
    if check_leading:
        check = leading_coeff_check(n)
        record["leading_coefficient"] = format_rational(check.laurent_coefficient)
        record["closed_form"] = format_rational(check.closed_form)
        record["check"] = "pass" if (check.matches and check.nonzero) else "fail"
    if as_json:
        click.echo(json.dumps(record))
    else:
        click.echo(f"n = {n}")
        click.echo(f"exponent range [{poly.min_exponent()}, {poly.max_exponent()}]")
        for e, c in poly.items():
            click.echo(f"coeff[{e}] = {format_rational(c)}")
        if check_leading:
            click.echo(
                f"leading coefficient = {record['leading_coefficient']} "
                f"(closed form {record['closed_form']})"
            )
            click.echo(f"check: {record['check']}")
    if check_leading and record["check"] != "pass":
        sys.exit(1)


@main.command()
@click.option("--n", required=True, type=int, help="base dimension parameter (>= 1)")
@click.option("--l", required=True, type=int, help="fixed positive odd l with p(l) != 0")
@click.option("--k-start", required=True, type=int, help="first even k (inclusive)")
@click.option("--k-end", required=True, type=int, help="last even k (inclusive)")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None, help="write to a file instead of stdout")
def table(n: int, l: int, k_start: int, k_end: int, fmt: str, out: str | None) -> None:
    """Sweep even k at fixed l and tabulate s, |s| and the mod-1 reduction."""
    ks = [
        k
        for k in range(k_start, k_end + 1)
        if k % 2 == 0 and k >= 2 and math.gcd(k, l) == 1
    ]
    try:
        result = component_table(n, l, ks)
    except ValueError as exc:
        _domain_error(str(exc))
        return
    records = [
        {
            "n": str(row.n),
            "k": str(row.k),
            "l": str(row.l),
            "spin": _flag(row.spin),
            "s": format_rational(row.s),
            "abs_s": format_rational(row.abs_s),
            "ek_mod1": format_rational(row.ek_mod1),
        }
        for row in result.rows
    ]
    if fmt == "csv":
        lines = [",".join(TABLE_FIELDS)]
        lines += [",".join(rec[f] for f in TABLE_FIELDS) for rec in records]
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(records) + "\n"
    if out is None:
        click.echo(text, nl=False)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
        click.echo(
            f"wrote {len(records)} rows ({result.distinct_abs_count} distinct |s|) to {out}"
        )


@main.command()
@click.option("--series", "series", required=True, type=click.Choice(["ahat", "lgenus"]))
@click.option("--order", required=True, type=int, help="print coefficients up to t^(2*order)")
def series(series: str, order: int) -> None:
    """Print the even power-series coefficients of the chosen genus."""
    if order < 1:
        _domain_error("order must be a positive integer")
        return
    label = "ahat" if series == "ahat" else "b"
    pieces = [
        f"{label}_{2 * j} = {format_rational(series_coeff(series, j))}"
        for j in range(1, order + 1)
    ]
    click.echo(", ".join(pieces))


@main.command()
@click.option("--m", required=True, type=int, help="weight of the combination (>= 1)")
def nm(m: int) -> None:
    """Print the weight-m mixed genus combination (its p_m term cancels)."""
    if m < 1:
        _domain_error("m must be a positive integer")
        return
    click.echo(f"N_{m} = {n_polynomial(m)!r}")


@main.command()
@click.option("--n-max", required=True, type=int, help="largest n the suites sweep")
def verify(n_max: int) -> None:
    """Run every property suite up to the bound; exit 0 iff all pass."""
    if n_max < 1:
        _domain_error("n-max must be a positive integer")
        return
    results = run_all(n_max)
    failed = [r for r in results if not r.ok]
    for r in results:
        click.echo(f"{'ok  ' if r.ok else 'FAIL'} {r.name}" + (f": {r.detail}" if r.detail else ""))
    if failed:
        click.echo(f"first failing property: {failed[0].name}", err=True)
        sys.exit(1)
    click.echo(f"all {len(results)} property suites passed (n <= {n_max})")


if __name__ == "__main__":
    main()
