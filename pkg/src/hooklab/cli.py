"""Command line front end; every command is a thin client of the HTTP service.

Without --server the service app is called in process through an ASGI
transport, so no network or separate process is involved; with --server
the same requests go to a running instance.
"""

from __future__ import annotations

import asyncio
import csv
import io
import json
import sys
from typing import Any

import click
import httpx

from .exact import poly_from_strings

FORMATS = ("text", "json", "csv")


def _request(server: str | None, method: str, path: str, **kwargs: Any) -> httpx.Response:
    async def go() -> httpx.Response:
        if server:
            client = httpx.AsyncClient(base_url=server, timeout=None)
        else:
            from .service import app

            transport = httpx.ASGITransport(app=app, raise_app_exceptions=False)
            client = httpx.AsyncClient(
                transport=transport, base_url="http://hooklab.internal", timeout=None
            )
        async with client:
            return await client.request(method, path, **kwargs)

    return asyncio.run(go())


def _payload(server: str | None, method: str, path: str, **kwargs: Any) -> dict:
    try:
        response = _request(server, method, path, **kwargs)
    except httpx.HTTPError as exc:
        click.echo(f"error: cannot reach service: {exc}", err=True)
        sys.exit(2)
    if response.status_code == 200:
        return response.json()
    try:
        detail = response.json().get("detail", response.text)
    except ValueError:
        detail = response.text
    click.echo(f"error: {detail}", err=True)
    # client-side errors are usage errors; anything else is a failed run
    sys.exit(2 if response.status_code in (400, 404, 422) else 1)


def _parse_alphabets(text: str | None) -> dict[str, str]:
    bindings: dict[str, str] = {}
    if not text:
        return bindings
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        slot, sep, kind = piece.partition("=")
        if not sep or not slot or not kind:
            raise click.UsageError(f"bad alphabet binding {piece!r}; expected slot=kind")
        bindings[slot.strip()] = kind.strip()
    return bindings


def _csv_lines(rows: list[list[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def _emit(fmt: str, text_fn, json_obj, csv_rows) -> None:
    if fmt == "json":
        click.echo(json.dumps(json_obj, indent=2, sort_keys=True))
    elif fmt == "csv":
        click.echo(_csv_lines(csv_rows))
    else:
        click.echo(text_fn())


def _pretty_poly(coeff_strings: list[str]) -> str:
    return poly_from_strings(coeff_strings).pretty("n")


format_option = click.option(
    "--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True
)


@click.group()
@click.version_option(version=None, package_name="hooklab")
@click.option("--server", default=None, metavar="URL", help="Base URL of a running service (default: in-process).")
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Exact partition functionals, polynomial fits, and identity checks."""
    ctx.obj = {"server": server}


@main.command()
@click.argument("n", type=int)
@format_option
@click.pass_context
def partitions(ctx: click.Context, n: int, fmt: str) -> None:
    """List all partitions of N in reverse lexicographic order."""
    data = _payload(ctx.obj["server"], "GET", f"/partitions/{n}")

    def text() -> str:
        lines = [f"partitions of {data['n']}: {data['count']}"]
        lines += ["+".join(map(str, parts)) for parts in data["partitions"]]
        return "\n".join(lines)

    rows = [[";".join(map(str, parts))] for parts in data["partitions"]]
    _emit(fmt, text, data, rows)


@main.command()
@click.argument("expression")
@click.option("--alphabets", "alphabets", default="", metavar="SLOT=KIND[,..]",
              help="Alphabet kind for each slot, e.g. x=contents,y=parts.")
@click.option("--n", "n", type=int, required=True, help="Partition weight to evaluate at.")
@format_option
@click.pass_context
def value(ctx: click.Context, expression: str, alphabets: str, n: int, fmt: str) -> None:
    """Evaluate the functional of EXPRESSION at one n."""
    body = {"expression": expression, "alphabets": _parse_alphabets(alphabets), "n": n}
    data = _payload(ctx.obj["server"], "POST", "/value", json=body)
    _emit(
        fmt,
        lambda: data["value"],
        data,
        [[data["expression"], data["n"], data["value"]]],
    )


@main.command()
@click.argument("expression")
@click.option("--alphabets", "alphabets", default="", metavar="SLOT=KIND[,..]")
@click.option("--degree-hint", type=int, default=None, help="Starting degree for the fit.")
@format_option
@click.pass_context
def fit(ctx: click.Context, expression: str, alphabets: str, degree_hint: int | None, fmt: str) -> None:
    """Discover the polynomial in n for the functional of EXPRESSION."""
    body = {
        "expression": expression,
        "alphabets": _parse_alphabets(alphabets),
        "degree_hint": degree_hint,
    }
    data = _payload(ctx.obj["server"], "POST", "/fit", json=body)

    def text() -> str:
        lines = [
            f"polynomial: {_pretty_poly(data['polynomial'])}",
            f"degree: {data['degree']}",
            f"samples: {data['samples'][0]}..{data['samples'][-1]}",
            f"verified: {'true' if data['verified'] else 'false'}",
        ]
        if not data["verified"]:
            lines.append("not polynomial within cap")
        return "\n".join(lines)

    rows = [[expression, ";".join(data["polynomial"]), data["degree"], data["verified"]]]
    _emit(fmt, text, data, rows)
    if not data["verified"]:
        sys.exit(1)


@main.command()
@click.argument("name", type=click.Choice(["nmu", "phimu"]))
@format_option
@click.pass_context
def tables(ctx: click.Context, name: str, fmt: str) -> None:
    """Reproduce a reference polynomial table (nmu: contents; phimu: squared hooks)."""
    data = _payload(ctx.obj["server"], "GET", f"/tables/{name}")

    def text() -> str:
        lines = []
        for entry in data["entries"]:
            index = ",".join(map(str, entry["index"]))
            lines.append(f"({index}): {entry['pretty']}")
        return "\n".join(lines)

    rows = [
        [";".join(map(str, e["index"])), ";".join(e["polynomial"]), e["degree"]]
        for e in data["entries"]
    ]
    _emit(fmt, text, data, rows)


@main.command()
@click.argument("name", type=click.Choice(["no-lhs", "no-rhs", "cno-lhs", "cno-rhs"]))
@click.option("--truncation", type=int, default=10, show_default=True)
@format_option
@click.pass_context
def series(ctx: click.Context, name: str, truncation: int, fmt: str) -> None:
    """Print a verification series; x^n coefficients are polynomials in t."""
    data = _payload(
        ctx.obj["server"], "GET", f"/series/{name}", params={"truncation": truncation}
    )

    def text() -> str:
        lines = [f"{name} truncated at order {data['truncation']}"]
        for exponent, coeff in enumerate(data["coeffs"]):
            lines.append(f"x^{exponent}: {poly_from_strings(coeff).pretty('t')}")
        return "\n".join(lines)

    rows = [[exponent, ";".join(coeff)] for exponent, coeff in enumerate(data["coeffs"])]
    _emit(fmt, text, data, rows)


@main.command()
@click.argument("checks", nargs=-1)
@click.option("--max-n", type=int, default=None, help="Override each check's default bound.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True)
@format_option
@click.pass_context
def verify(ctx: click.Context, checks: tuple[str, ...], max_n: int | None,
           seed: int, jobs: int, fmt: str) -> None:
    """Run named verification suites (default: all)."""
    body = {
        "checks": list(checks) or ["all"],
        "max_n": max_n,
        "seed": seed,
        "jobs": jobs,
    }
    data = _payload(ctx.obj["server"], "POST", "/verify", json=body)
    for result in data["results"]:
        elapsed = data["elapsed_seconds"].get(result["name"], 0.0)
        click.echo(f"# {result['name']}: {elapsed:.2f}s", err=True)
        for failure in result["failures"]:
            click.echo(f"# {result['name']}: {failure}", err=True)

    def text() -> str:
        lines = []
        for result in data["results"]:
            status = "PASS" if result["passed"] else "FAIL"
            lines.append(
                f"{result['name']}: {status} ({result['cases']} cases) - {result['description']}"
            )
        lines.append(f"overall: {'PASS' if data['passed'] else 'FAIL'}")
        return "\n".join(lines)

    stable = {"passed": data["passed"], "results": data["results"]}
    rows = [
        [r["name"], "pass" if r["passed"] else "fail", r["cases"], "|".join(r["failures"])]
        for r in data["results"]
    ]
    _emit(fmt, text, stable, rows)
    if not data["passed"]:
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
