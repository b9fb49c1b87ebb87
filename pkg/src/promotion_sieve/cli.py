"""Command-line interface for promotion-sieve."""

import csv
import io
import json
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Optional

import click
from rich.console import Console
from rich.progress import Progress
from rich.table import Table

from promotion_sieve.census import CHECKPOINT_FILENAME, SWEEPS, SievingCensus
from promotion_sieve.charge import (
    charge,
    cocharge,
    depth_sequence,
    standard_subwords,
)
from promotion_sieve.config import SieveConfig
from promotion_sieve.promotion import orbit_decomposition, promote_power
from promotion_sieve.qpoly import QPoly, kostka_foulkes, macmahon, modified_kf
from promotion_sieve.ribbon import count_ribbon_tableaux, epsilon
from promotion_sieve.shapes import (
    parse_composition,
    parse_partition,
    parse_skew_shape,
)
from promotion_sieve.sieve import (
    BICSP_INSTANCES,
    INSTANCES,
    SCHEMA_VERSION,
    CheckReport,
    check_instance,
    family,
    find_shift,
    instance_parameters,
    named_instance,
    root_values,
)
from promotion_sieve.skewrsk import matrix_to_biword, rsk, rsk_word, tableau_to_matrix
from promotion_sieve.tableaux import Tableau, Word, enumerate_ssyt

console = Console()
err_console = Console(stderr=True)


def _parse_word(text: str) -> Word:
    """``"3452"`` or, for letters above 9, ``"3,4,12"``."""
    text = text.strip()
    try:
        if "," in text:
            return tuple(int(x) for x in text.split(","))
        return tuple(int(x) for x in text)
    except ValueError:
        raise ValueError(f"cannot read {text!r} as a word") from None


def _parse_tableau(text: str, inner: str = "") -> Tableau:
    """Rows separated by ``/``, e.g. ``"11234/23/34"``."""
    rows = [_parse_word(row) for row in text.split("/")]
    return Tableau.from_rows(rows, parse_partition(inner).parts)


def _emit_json(payload: Dict[str, Any]) -> None:
    click.echo(json.dumps({"schema": SCHEMA_VERSION, **payload}, sort_keys=True))


@contextmanager
def _progress(
    config: SieveConfig, description: str, total: int
) -> Iterator[Callable[[], None]]:
    """Yield a callback that advances a stderr progress bar by one."""
    with Progress(console=err_console, disable=not config.progress) as progress:
        task = progress.add_task(description, total=total)
        yield lambda: progress.update(task, advance=1)
        progress.stop()


@contextmanager
def _usage_errors() -> Iterator[None]:
    """Report invalid input as a usage error (exit code 2)."""
    try:
        yield
    except ValueError as e:
        raise click.UsageError(str(e)) from None


def _print_report(report: CheckReport) -> None:
    table = Table(title=f"{report.instance} ({report.size} elements)")
    bicyclic = report.orders is not None
    for column in (["i", "j"] if bicyclic else ["d"]) + ["fixed", "value", "ok"]:
        table.add_column(column, justify="right")
    for row in report.rows:
        value = str(row.eval) if row.eval is not None else (row.residue or "")
        status = "[green]yes[/green]" if row.ok else f"[bold red]{row.failure}[/]"
        where = [str(row.i), str(row.j)] if bicyclic else [str(row.d)]
        table.add_row(*where, str(row.fixed), value, status)
    console.print(table)
    console.print(f"[bold]Polynomial:[/] {report.polynomial}", highlight=False)
    if report.shift is not None:
        console.print(f"[bold]Shift:[/] {report.shift}")
    for label, verdict in report.alternatives.items():
        console.print(f"[yellow]Alternative {label}:[/yellow] {verdict}")
    colour = "green" if report.passed else "bold red"
    console.print(f"[{colour}]{report.verdict}[/]")


@click.group()
@click.option("--threads", type=int, default=1, help="Worker threads for censuses")
@click.option("--no-progress", is_flag=True, help="Hide progress bars")
@click.option(
    "--cross-check",
    is_flag=True,
    help="Recompute promotion by Bender-Knuth involutions and compare",
)
@click.pass_context
def cli(ctx, threads, no_progress, cross_check):
    """Tableau promotion, Kostka-Foulkes polynomials and cyclic sieving."""
    with _usage_errors():
        ctx.obj = SieveConfig(
            threads=threads, progress=not no_progress, cross_check=cross_check
        )


@cli.command("enumerate")
@click.option("--shape", required=True, help="Shape, e.g. 4,2,2 or 4,2/1")
@click.option("--content", required=True, help="Content, e.g. 2,2,2,2")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON lines")
def enumerate_command(shape, content, as_json):
    """List the semistandard tableaux of a shape and content."""
    with _usage_errors():
        tableaux = enumerate_ssyt(parse_skew_shape(shape), parse_composition(content))
    for t in tableaux:
        if as_json:
            _emit_json(t.to_payload())
        else:
            click.echo(str(t))
    if not as_json:
        err_console.print(f"[bold]Found[/] {len(tableaux)} tableaux")


@cli.command()
@click.option("--tableau", required=True, help="Rows separated by /, e.g. 11234/23/34")
@click.option("--inner", default="", help="Inner partition for skew tableaux")
@click.option("--m", "m", type=int, required=True, help="Alphabet size")
@click.option("--power", type=int, default=1, help="Number of promotions, may be < 0")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON")
@click.pass_obj
def promote(config, tableau, inner, m, power, as_json):
    """Apply promotion to a tableau."""
    with _usage_errors():
        t = _parse_tableau(tableau, inner)
        result = promote_power(t, m, power, config.cross_check)
    if as_json:
        _emit_json(result.to_payload())
    else:
        click.echo(str(result))


@cli.command()
@click.option(
    "--family",
    "family_name",
    required=True,
    type=click.Choice(["shst", "ribbon", "sm", "ssyt", "bounded"]),
)
@click.option("--a", type=int)
@click.option("--b", type=int)
@click.option("--n", type=int)
@click.option("--m", "m", type=int)
@click.option("--alpha", help="Ribbon row lengths, e.g. 2,2,2")
@click.option("--nu", help="Partition for disjoint-row tableaux")
@click.option("--shape", help="Shape for the ssyt and bounded families")
@click.option("--content", help="Content for the ssyt family")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON")
@click.option("--csv", "as_csv", is_flag=True, help="Emit one CSV row per orbit")
@click.pass_obj
def orbits(
    config, family_name, a, b, n, m, alpha, nu, shape, content, as_json, as_csv
):
    """Promotion orbit sizes and the order of promotion on a family."""
    given = {"a": a, "b": b, "n": n, "m": m, "alpha": alpha, "nu": nu}
    given.update({"shape": shape, "content": content})
    params = {k: v for k, v in given.items() if v is not None}
    with _usage_errors():
        elements, alphabet = family(family_name, params)
        with _progress(config, f"Promoting {family_name}", len(elements)) as advance:
            found, order = orbit_decomposition(
                elements,
                alphabet,
                threads=config.threads,
                cross_check=config.cross_check,
                advance=advance,
            )
    sizes = sorted(o.length for o in found)
    if as_csv:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["orbit_index", "size", "representative"])
        for index, orbit in enumerate(found, start=1):
            writer.writerow([index, orbit.length, str(orbit.representative)])
        click.echo(buffer.getvalue(), nl=False)
    elif as_json:
        _emit_json(
            {
                "family": family_name,
                "size": len(elements),
                "sizes": sizes,
                "order": order,
            }
        )
    else:
        click.echo(f"sizes: {','.join(str(s) for s in sizes)}; order: {order}")


@cli.command("charge")
@click.option("--word", required=True, help="Word, e.g. 345223111234455")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON")
def charge_command(word, as_json):
    """Charge, cocharge, standard subwords and depth sequence of a word."""
    with _usage_errors():
        w = _parse_word(word)
        subwords = standard_subwords(w)
        result = {
            "charge": charge(w),
            "cocharge": cocharge(w),
            "subwords": [list(s) for s in subwords],
            "depths": list(depth_sequence(w).depths),
        }
    if as_json:
        _emit_json(result)
        return
    click.echo(f"charge: {result['charge']}")
    click.echo(f"cocharge: {result['cocharge']}")
    click.echo("subwords: " + " ".join("".join(map(str, s)) for s in subwords))
    click.echo("depths: " + ",".join(str(d) for d in result["depths"]))


@cli.command()
@click.option("--shape", required=True, help="Shape, e.g. 4,4,2,2")
@click.option("--content", required=True, help="Partition content")
@click.option("--modified", is_flag=True, help="Cocharge instead of charge")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON")
def kf(shape, content, modified, as_json):
    """Kostka-Foulkes polynomial of a shape and partition content."""
    with _usage_errors():
        build = modified_kf if modified else kostka_foulkes
        poly = build(parse_skew_shape(shape), parse_composition(content))
    if as_json:
        _emit_json({"polynomial": poly.to_text(), "terms": poly.to_payload()})
    else:
        click.echo(poly.to_text())


@cli.command("macmahon")
@click.option("--a", type=int, required=True)
@click.option("--b", type=int, required=True)
@click.option("--n", type=int, required=True)
@click.option("--json", "as_json", is_flag=True, help="Emit JSON")
def macmahon_command(a, b, n, as_json):
    """Size generating function of plane partitions in an a x b x n box."""
    with _usage_errors():
        poly = macmahon(a, b, n)
    if as_json:
        _emit_json({"polynomial": poly.to_text(), "terms": poly.to_payload()})
    else:
        click.echo(poly.to_text())


@cli.command("ribbon-count")
@click.option("--shape", required=True)
@click.option("--content", required=True)
@click.option("--k", "k", type=int, required=True, help="Ribbon size")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON")
def ribbon_count(shape, content, k, as_json):
    """Count semistandard k-ribbon tableaux and the tiling sign."""
    with _usage_errors():
        skew = parse_skew_shape(shape)
        count = count_ribbon_tableaux(skew, parse_composition(content), k)
        sign = epsilon(skew, k)
    if as_json:
        _emit_json({"count": count, "epsilon": sign})
    else:
        click.echo(f"count: {count}")
        click.echo(f"epsilon: {sign}")


@cli.command("rsk")
@click.option("--word", help="Word to insert, recorded by positions")
@click.option("--tableau", help="Disjoint-row tableau, rows separated by /")
@click.option("--inner", default="", help="Inner partition of the tableau")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON")
def rsk_command(word, tableau, inner, as_json):
    """RSK of a word, or of the biword of a disjoint-row tableau."""
    if (word is None) == (tableau is None):
        raise click.UsageError("give exactly one of --word and --tableau")
    with _usage_errors():
        if word is not None:
            p, q = rsk_word(_parse_word(word))
        else:
            biword = matrix_to_biword(tableau_to_matrix(_parse_tableau(tableau, inner)))
            p, q = rsk(biword)
    if as_json:
        _emit_json({"insertion": p.to_payload(), "recording": q.to_payload()})
    else:
        click.echo(f"P: {p}")
        click.echo(f"Q: {q}")


def _run_check(
    config: SieveConfig, name: str, options: Dict[str, Any], as_json: bool
) -> None:
    given = {k: v for k, v in options.items() if v is not None}
    with _usage_errors():
        expected = instance_parameters(name)
        extra = sorted(set(given) - set(expected))
        if extra:
            raise ValueError(
                f"{name} takes {', '.join(expected)}; unexpected {', '.join(extra)}"
            )
        instance = named_instance(name, given, cross_check=config.cross_check)
        total = len(instance.elements) * len(instance.actions)
        with _progress(config, f"Checking {name}", total) as advance:
            report = check_instance(instance, threads=config.threads, advance=advance)
    if as_json:
        click.echo(json.dumps(report.to_payload(), sort_keys=True))
    else:
        _print_report(report)
    if not report.passed:
        raise SystemExit(1)


@cli.command()
@click.option("--instance", "name", required=True, type=click.Choice(list(INSTANCES)))
@click.option("--a", type=int)
@click.option("--b", type=int)
@click.option("--n", type=int)
@click.option("--m", "m", type=int)
@click.option("--k", "k", type=int)
@click.option("--d", "d", type=int)
@click.option("--nu", help="Partition, e.g. 2,1")
@click.option("--gamma", help="Content composition, e.g. 1,1,1,1")
@click.option("--rects", help="Rectangles as AxB pairs, e.g. 2x1,1x2")
@click.option("--json", "as_json", is_flag=True, help="Emit the report as JSON")
@click.pass_obj
def csp(config, name, a, b, n, m, k, d, nu, gamma, rects, as_json):
    """Verify a named cyclic sieving instance by brute force."""
    options = {"a": a, "b": b, "n": n, "m": m, "k": k, "d": d}
    options.update({"nu": nu, "gamma": gamma, "rects": rects})
    _run_check(config, name, options, as_json)


@cli.command()
@click.option(
    "--instance", "name", required=True, type=click.Choice(list(BICSP_INSTANCES))
)
@click.option("--m", "m", type=int)
@click.option("--b", type=int)
@click.option("--json", "as_json", is_flag=True, help="Emit the report as JSON")
@click.pass_obj
def bicsp(config, name, m, b, as_json):
    """Verify a named bicyclic sieving instance by brute force."""
    _run_check(config, name, {"m": m, "b": b}, as_json)


@cli.command()
@click.option("--poly", required=True, help="Polynomial, e.g. 4+3q+4q^2")
@click.option("--n", type=int, required=True, help="Order of the cyclic group")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON")
def shift(poly, n, as_json):
    """Least power of q making a polynomial a sieving candidate."""
    if n < 1:
        raise click.BadParameter("the order must be positive", param_hint="--n")
    with _usage_errors():
        f = QPoly.parse(poly)
    exponent = find_shift(f, n)
    values = root_values(f, n)
    if as_json:
        _emit_json({"shift": exponent, "values": values})
        return
    click.echo("values: " + ",".join("?" if v is None else str(v) for v in values))
    click.echo(f"shift: {'none' if exponent is None else exponent}")


@cli.command()
@click.option(
    "--only",
    multiple=True,
    type=click.Choice(list(SWEEPS)),
    help="Run only these sweeps (repeatable)",
)
@click.option(
    "--checkpoint",
    type=click.Path(dir_okay=False, path_type=Path),
    default=Path(CHECKPOINT_FILENAME),
    show_default=True,
    help="Results file; checks that passed there are skipped",
)
@click.option(
    "--no-checkpoint", is_flag=True, help="Rerun every check and record nothing"
)
@click.option("--json", "as_json", is_flag=True, help="Emit one JSON line per check")
@click.pass_obj
def sweep(config, only, checkpoint, no_checkpoint, as_json):
    """Run the census sweeps over the sieving identities."""
    if no_checkpoint:
        checkpoint = None
    config = config.model_copy(update={"checkpoint": checkpoint})
    results = SievingCensus(config).run(list(only) or None)
    failed: List[str] = []
    for result in results:
        if result.verdict in ("fail", "error"):
            failed.append(result.key)
        if as_json:
            _emit_json(result.model_dump())
    if not as_json:
        table = Table(title="Sweep results")
        table.add_column("sweep")
        table.add_column("checks", justify="right")
        table.add_column("failing", justify="right")
        for name in dict.fromkeys(r.sweep for r in results):
            rows = [r for r in results if r.sweep == name]
            bad = sum(1 for r in rows if r.key in failed)
            table.add_row(name, str(len(rows)), str(bad))
        console.print(table)
    if failed:
        err_console.print(f"[bold red]Failing checks:[/] {', '.join(failed[:10])}")
        raise SystemExit(1)


def main(argv: Optional[List[str]] = None):
    """Entry point for the CLI."""
    cli(args=argv)
