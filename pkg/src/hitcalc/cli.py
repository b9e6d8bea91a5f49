"""Command line front end.

Exit codes follow one convention across subcommands: 0 when everything
asked for passed (or the query answered "yes"), 1 when a check failed or a
membership query answered "no", 2 for usage errors, bad fixtures, and
computations refused by the capacity cap. ``verify-table`` exits 2 when rows
had to be skipped for capacity but nothing failed, so a partial green run is
distinguishable from a full one.
"""
from __future__ import annotations

import json
import sys
from math import comb

import click

from .gf2 import CapacityError
from .monomials import format_monomial, format_tau, minimal_spike, beta, tau
from .solver import cohit, is_hit, kameko_check, qr_split, survivor_data
from .verify import (
    FixtureError,
    parse_polynomial,
    parse_relation_file,
    verify_basis,
    verify_relation,
    verify_table,
)


def _bail(exc) -> "NoReturn":
    click.echo(f"error: {exc}", err=True)
    sys.exit(2)


@click.group()
def main():
    """Hit problem calculations for polynomial algebras over GF(2)."""


@main.command("cohit")
@click.option("--vars", "k", type=int, required=True, help="number of variables")
@click.option("--degree", "n", type=int, required=True)
@click.option("--mode", type=click.Choice(["full", "accelerated", "auto"]),
              default="auto", show_default=True)
@click.option("--json", "json_path", type=click.Path(dir_okay=False),
              default=None, help="also write the full report as JSON")
@click.option("--q-r", "show_qr", is_flag=True,
              help="print the zero-exponent / positive-exponent split")
def cohit_cmd(k, n, mode, json_path, show_qr):
    """Dimension and admissible basis size in one degree."""
    try:
        report = cohit(k, n, mode=mode)
    except (CapacityError, ValueError) as exc:
        _bail(exc)
    click.echo(f"degree {n} in {k} variables: "
               f"{report.monomial_count} monomials, "
               f"hit rank {report.hit_rank}, "
               f"dimension {report.cohit_dimension}")
    if show_qr:
        try:
            q, r = qr_split(k, n, mode=mode)
        except (CapacityError, ValueError) as exc:
            _bail(exc)
        click.echo(f"split: {q} with a zero exponent, {r} all positive")
    if json_path:
        with open(json_path, "w", encoding="utf-8") as handle:
            json.dump(report.to_json_dict(), handle, indent=2)
            handle.write("\n")
        click.echo(f"wrote {json_path}")


@main.command("is-hit")
@click.option("--vars", "k", type=int, required=True)
@click.option("--poly", "text", required=True,
              help="sum of monomials, e.g. '(2,0,0,0)+(0,2,0,0)'")
@click.option("--mode", type=click.Choice(["full", "accelerated", "auto"]),
              default="auto", show_default=True)
def is_hit_cmd(k, text, mode):
    """Membership in the hit subspace; exits 0 for hit, 1 for not."""
    try:
        f = parse_polynomial(text)
        for m in f:
            if len(m) != k:
                raise FixtureError(f"{format_monomial(m)} does not have "
                                   f"{k} exponents")
        answer = is_hit(f, mode=mode)
    except (FixtureError, CapacityError, ValueError) as exc:
        _bail(exc)
    click.echo("hit" if answer else "not hit")
    sys.exit(0 if answer else 1)


@main.command("verify-relations")
@click.argument("paths", nargs=-1, required=True,
                type=click.Path(exists=True, dir_okay=False))
def verify_relations_cmd(paths):
    """Check relation fixtures; one line per relation."""
    failures = 0
    total = 0
    for path in paths:
        try:
            relations = parse_relation_file(path)
        except FixtureError as exc:
            _bail(exc)
        for rel in relations:
            result = verify_relation(rel)
            total += 1
            if result.status == "fails":
                failures += 1
                extra = " + ".join(sorted(format_monomial(m)
                                          for m in result.residual))
                click.echo(f"FAIL {rel.source} {format_monomial(rel.lhs)} "
                           f"residual {extra}")
            else:
                click.echo(f"ok   {rel.source} {format_monomial(rel.lhs)} "
                           f"[{result.status}]")
    click.echo(f"{total - failures}/{total} relations hold")
    sys.exit(1 if failures else 0)


@main.command("verify-table")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--tier", type=click.Choice(["required", "all"]),
              default="required", show_default=True)
@click.option("--vars", "k", type=int, default=4, show_default=True)
@click.option("--mode", type=click.Choice(["full", "accelerated", "auto"]),
              default="auto", show_default=True)
def verify_table_cmd(path, tier, k, mode):
    """Check a dimension table; exits 2 if rows were skipped for capacity."""
    try:
        outcomes = verify_table(path, tier=tier, k=k, mode=mode)
    except FixtureError as exc:
        _bail(exc)
    fails = skips = 0
    for out in outcomes:
        row = out.row
        params = " ".join(f"{name}={value}" for name, value in row.params)
        label = f"{row.family} [{params}] degree {row.degree}"
        if out.status == "pass":
            click.echo(f"pass {label}: {out.computed}")
        elif out.status == "fail":
            fails += 1
            click.echo(f"FAIL {label}: computed {out.computed}, "
                       f"table says {row.expected_dim}")
        else:
            skips += 1
            click.echo(f"skip {label}: {out.note}")
    click.echo(f"{len(outcomes) - fails - skips}/{len(outcomes)} rows pass"
               + (f", {skips} skipped" if skips else ""))
    sys.exit(1 if fails else (2 if skips else 0))


@main.command("verify-basis")
@click.argument("paths", nargs=-1, required=True,
                type=click.Path(exists=True, dir_okay=False))
def verify_basis_cmd(paths):
    """Check admissible-basis fixtures."""
    failures = 0
    for path in paths:
        try:
            out = verify_basis(path)
        except (FixtureError, CapacityError) as exc:
            _bail(exc)
        if out.status == "pass":
            click.echo(f"pass {path}: degree {out.degree}, "
                       f"{out.report.cohit_dimension} classes")
        else:
            failures += 1
            detail = []
            if out.missing:
                detail.append("missing " + " ".join(
                    format_monomial(m) for m in out.missing))
            if out.unexpected:
                detail.append("unexpected " + " ".join(
                    format_monomial(m) for m in out.unexpected))
            click.echo(f"FAIL {path}: {'; '.join(detail)}")
    sys.exit(1 if failures else 0)


@main.command("kameko")
@click.option("--vars", "k", type=int, required=True)
@click.option("--degree", "n", type=int, required=True)
@click.option("--mode", type=click.Choice(["full", "accelerated", "auto"]),
              default="auto", show_default=True)
def kameko_cmd(k, n, mode):
    """Compare a top-threshold degree against its halved degree."""
    try:
        status = kameko_check(k, n, mode=mode)
    except (CapacityError, ValueError) as exc:
        _bail(exc)
    if status == "not_applicable":
        click.echo(f"degree {n} does not meet the odd-count threshold "
                   f"{k}; nothing to compare")
        sys.exit(0)
    lower = (n - k) // 2
    click.echo(f"degree {n} against degree {lower}: {status}")
    sys.exit(0 if status == "pass" else 1)


@main.command("filters")
@click.option("--vars", "k", type=int, required=True)
@click.option("--degree", "n", type=int, required=True)
def filters_cmd(k, n):
    """Show how many monomials the degree filters remove."""
    if k < 1 or n < 0:
        _bail("need at least one variable and a nonnegative degree")
    total = comb(n + k - 1, k - 1)
    data = survivor_data(k, n)
    b = beta(n)
    wood = 0
    singer = 0
    for cls in data.killed:
        size = 1
        for t in cls:
            size *= comb(k, t)
        if cls[0] < b:
            wood += size
        else:
            singer += size
    alive = total - wood - singer
    click.echo(f"degree {n} in {k} variables: {total} monomials")
    click.echo(f"odd-count filter kills {wood} (threshold {b})")
    z = minimal_spike(n, k)
    if z is not None:
        click.echo(f"spike filter kills {singer} below {format_tau(tau(z))} "
                   f"(minimal spike {format_monomial(z)})")
    else:
        click.echo("no minimal spike in this degree; spike filter idle")
    click.echo(f"{alive} survivors")


if __name__ == "__main__":
    main()
