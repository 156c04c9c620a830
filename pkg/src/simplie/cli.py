"""Batch command-line surface: formulas, verification suites, page tables.

Exit codes: 0 all requested checks pass, 1 verification failures,
2 parse/usage errors, 3 resource bounds exceeded.
"""

from __future__ import annotations

import json
import sys

import click

from . import files
from .catalog import (
    bmf_fixture,
    cpn_resolution,
    gamma_element,
    higher_wp_resolution,
    omega_hat,
    omega_triple,
    phi_s,
)
from .errors import BoundError, DomainError, ExpressionParseError, SimplieError
from .expr import format_element, latex_element
from .lie import WHITEHEAD_ALGEBRA, GeneratorSymbol, LieElement
from .simplicial import splice, suspension_resolution, verify_simplicial_identities
from .spectral import e2_table
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_BOUNDS = 3


def _emit(payload: dict, fmt: str, text_lines: list[str]) -> None:
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            click.echo(line)


def _element_payload(name: str, element: LieElement, fmt: str) -> None:
    if fmt == "latex":
        click.echo(latex_element(element, align=True))
        return
    payload = {
        "target": name,
        "element": format_element(element),
        "terms": len(element.terms()),
    }
    _emit(payload, fmt, [format_element(element)])


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


@click.group()
def main() -> None:
    """Exact bracket calculus for simplicial sphere resolutions."""


@main.command("formula")
@click.option("--target", required=True,
              type=click.Choice(["omega_hat", "omega_triple", "phi", "gamma", "bmf_alpha"]))
@click.option("--p", type=int, default=None, help="first sphere dimension")
@click.option("--q", type=int, default=None, help="second sphere dimension")
@click.option("--r", type=int, default=None, help="third sphere dimension")
@click.option("--k", type=int, default=None)
@click.option("--l", type=int, default=None)
@click.option("--n", type=int, default=None, help="index of a tower attaching element")
@click.option("--degrees", type=str, default=None, help="comma-separated reduced degrees")
@click.option("--subset", type=str, default=None, help="comma-separated subset positions")
@click.option("--format", "fmt", type=click.Choice(["text", "json", "latex"]), default="text")
def formula(target, p, q, r, k, l, n, degrees, subset, fmt):
    """Print a named element."""
    try:
        if target == "omega_hat":
            _require(p is not None and q is not None and k is not None and l is not None,
                     "omega_hat needs --p --q --k --l")
            _, element = omega_hat(p, q, k, l)
        elif target == "omega_triple":
            _require(p is not None and q is not None and r is not None,
                     "omega_triple needs --p --q --r")
            _, element = omega_triple(p, q, r)
        elif target == "phi":
            _require(degrees is not None, "phi needs --degrees")
            degs = tuple(int(d) for d in degrees.split(","))
            tau = tuple(int(i) for i in subset.split(",")) if subset else None
            element = phi_s(degs, tau)
        elif target == "gamma":
            _require(n is not None, "gamma needs --n")
            element = gamma_element(n)
        else:
            element = bmf_fixture().alpha
    except (DomainError, ValueError) as exc:
        raise click.ClickException(str(exc)) from exc
    _element_payload(target, element, fmt)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ExpressionParseError(message)


@main.command("verify")
@click.option("--suite", required=True,
              type=click.Choice(sorted(SUITES) + ["all"]))
@click.option("--n", type=int, default=None, help="tower size for the cpn suite")
@click.option("--seed", type=int, default=None, help="unused by the closed suites; accepted for compatibility")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def verify(suite, n, seed, fmt):
    """Run a verification suite; exit 0 only if every check passes."""
    kwargs = {}
    if suite == "cpn" and n is not None:
        kwargs["n"] = n
    result = run_suite(suite, **kwargs)
    payload = {
        "suite": result.suite,
        "passed": result.passed,
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail}
            for c in result.checks
        ],
    }
    lines = [
        f"[{'PASS' if c.passed else 'FAIL'}] {result.suite}:{c.name}"
        + (f" ({c.detail})" if c.detail else "")
        for c in result.checks
    ]
    lines.append(f"suite {result.suite}: {'PASS' if result.passed else 'FAIL'}")
    _emit(payload, fmt, lines)
    if not result.passed:
        sys.exit(EXIT_FAILED)


def _load_target(target: str | None, spec: str | None, n: int | None,
                 p: int | None, q: int | None, k: int | None, l: int | None,
                 degrees: str | None):
    if spec is not None:
        return files.load_resolution(spec)
    _require(target is not None, "provide --spec PATH or --target NAME")
    if target == "cpn":
        _require(n is not None, "cpn needs --n")
        return cpn_resolution(n)
    if target == "wedge":
        _require(None not in (p, q, k, l), "wedge needs --p --q --k --l")
        return omega_hat(p, q, k, l)[0]
    if target == "higher-wp":
        _require(degrees is not None, "higher-wp needs --degrees")
        return higher_wp_resolution(tuple(int(d) for d in degrees.split(",")))
    raise ExpressionParseError(f"unknown target {target!r}")


@main.command("e2")
@click.option("--spec", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--target", type=str, default=None, help="cpn | wedge | higher-wp")
@click.option("--n", type=int, default=None)
@click.option("--p", type=int, default=None)
@click.option("--q", type=int, default=None)
@click.option("--k", type=int, default=None)
@click.option("--l", type=int, default=None)
@click.option("--degrees", type=str, default=None)
@click.option("--s", "s_range", type=str, required=True, help="filtration range A..B")
@click.option("--t", "t_range", type=str, required=True, help="internal degree range A..B")
@click.option("--integral", is_flag=True, default=False)
@click.option("--max-dim", type=int, default=2000, help="slice dimension bound")
@click.option("--format", "fmt", type=click.Choice(["text", "json", "latex"]), default="text")
def e2(spec, target, n, p, q, k, l, degrees, s_range, t_range, integral, max_dim, fmt):
    """Tabulate second-page ranks over a bidegree window."""
    obj = _load_target(target, spec, n, p, q, k, l, degrees)
    records = e2_table(
        obj,
        _parse_range(s_range),
        _parse_range(t_range),
        integral=integral,
        max_dim=max_dim,
    )
    payload = {"object": obj.label, "records": records}
    lines = [f"object: {obj.label}", "t s dim rank" + (" torsion" if integral else "")]
    for record in records:
        line = f"{record['t']} {record['s']} {record['dim']} {record['rank']}"
        if integral:
            line += " " + (",".join(map(str, record.get("torsion", []))) or "-")
        lines.append(line)
    if fmt == "latex":
        rows = [
            f"{record['t']} & {record['s']} & {record['rank']} \\\\"
            for record in records
        ]
        click.echo("\n".join(rows))
        return
    _emit(payload, fmt, lines)


@main.command("splice")
@click.option("--target", required=True, type=click.Choice(["cpn", "wedge"]))
@click.option("--n", type=int, default=None)
@click.option("--p", type=int, default=None)
@click.option("--q", type=int, default=None)
@click.option("--k", type=int, default=None)
@click.option("--l", type=int, default=None)
@click.option("--max-level", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def splice_cmd(target, n, p, q, k, l, max_level, fmt):
    """Build the standard splice over a catalog object and verify it."""
    if target == "cpn":
        _require(n is not None, "cpn needs --n")
        lower = cpn_resolution(n)
        junction = n - 1
        _require(junction >= 1, "the tower splice needs n >= 2")
        value = gamma_element(n)
        cap = GeneratorSymbol("cap", n + 1)
    else:
        _require(None not in (p, q, k, l), "wedge needs --p --q --k --l")
        lower, value = omega_hat(p, q, k, l)
        junction = k + l
        _require(junction >= 1, "the wedge splice needs k + l >= 1")
        cap = GeneratorSymbol("cap", p + q - 2)
    upper = suspension_resolution([cap], junction, label="cap")
    spliced = splice(upper, lower, {upper.symbol("cap"): value}, junction)
    top = max_level if max_level is not None else junction + 2
    report = verify_simplicial_identities(spliced, max_level=top)
    payload = {
        "label": spliced.label,
        "junction": junction,
        "checked": report.checked,
        "violations": len(report.violations),
    }
    lines = [
        f"spliced object: {spliced.label} (junction level {junction})",
        f"identities checked: {report.checked}, violations: {len(report.violations)}",
    ]
    _emit(payload, fmt, lines)
    if report.violations:
        sys.exit(EXIT_FAILED)


@main.command("hall")
@click.option("--degrees", required=True, type=str, help="comma-separated reduced degrees")
@click.option("--target", "target_degree", required=True, type=int)
@click.option("--max-weight", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def hall(degrees, target_degree, max_weight, fmt):
    """Enumerate the basis monomials of one degree."""
    degs = tuple(int(d) for d in degrees.split(","))
    gens = [GeneratorSymbol(f"g{i + 1}", d) for i, d in enumerate(degs)]
    basis = WHITEHEAD_ALGEBRA.hall_basis(gens, target_degree, max_weight)
    payload = {
        "degrees": list(degs),
        "target": target_degree,
        "count": len(basis),
        "monomials": [str(m) for m in basis],
    }
    _emit(payload, fmt, [str(m) for m in basis] + [f"count: {len(basis)}"])


@main.command("fixtures")
@click.option("--dump", "name", type=str, default=None, help="print one fixture file")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def fixtures_cmd(name, fmt):
    """List the shipped fixture corpus (or dump one entry)."""
    if name is not None:
        click.echo(files.fixture_path(name).read_text(encoding="utf-8"), nl=False)
        return
    names = files.fixture_names()
    _emit({"fixtures": names}, fmt, names)


def _main() -> None:
    try:
        main(standalone_mode=False)
    except click.exceptions.Exit as exc:
        sys.exit(exc.exit_code)
    except click.ClickException as exc:
        exc.show()
        sys.exit(EXIT_PARSE)
    except click.exceptions.Abort:
        sys.exit(EXIT_PARSE)
    except ExpressionParseError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    except BoundError as exc:
        click.echo(f"bound exceeded: {exc}", err=True)
        sys.exit(EXIT_BOUNDS)
    except SimplieError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)


if __name__ == "__main__":
    _main()
