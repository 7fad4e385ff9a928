"""HTTP service exposing the engine; the CLI is a client of this app."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse

from . import __version__
from .exact import poly_to_strings
from .functionals import (
    FitReport,
    FunctionalSpec,
    VerificationError,
    content_elementary_table,
    fit_functional,
    functional_value,
    hook_elementary_table,
)
from .partitions import enumerate_partitions
from .schemas import (
    CheckReport,
    FitRequest,
    FitResponse,
    PartitionsResponse,
    SeriesResponse,
    TableEntry,
    TableResponse,
    ValueRequest,
    ValueResponse,
    VerifyRequest,
    VerifyResponse,
)
from .series_identities import (
    content_expansion_series,
    content_product_series,
    hook_expansion_series,
    hook_product_series,
)
from .symfunc import SymExpr
from .verify import run_checks

PARTITION_ENUMERATION_CAP = 50

SERIES_BUILDERS = {
    "no-lhs": hook_expansion_series,
    "no-rhs": hook_product_series,
    "cno-lhs": content_expansion_series,
    "cno-rhs": content_product_series,
}

app = FastAPI(title="hooklab", version=__version__)


@app.exception_handler(ValueError)
async def _value_error_handler(request: Request, exc: ValueError) -> JSONResponse:
    # guard violations and malformed inputs surface as 400s
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(VerificationError)
async def _verification_error_handler(
    request: Request, exc: VerificationError
) -> JSONResponse:
    return JSONResponse(status_code=500, content={"detail": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.get("/partitions/{n}", response_model=PartitionsResponse)
def partitions_endpoint(n: int) -> PartitionsResponse:
    if n < 0:
        raise HTTPException(status_code=400, detail="n must be >= 0")
    if n > PARTITION_ENUMERATION_CAP:
        raise HTTPException(
            status_code=400, detail=f"partition listing capped at n <= {PARTITION_ENUMERATION_CAP}"
        )
    shapes = enumerate_partitions(n)
    return PartitionsResponse(
        n=n, count=len(shapes), partitions=[list(s.parts) for s in shapes]
    )


def _spec_from(expression: str, alphabets: dict[str, str]) -> FunctionalSpec:
    expr = SymExpr.parse(expression)
    return FunctionalSpec(expr, alphabets)


@app.post("/value", response_model=ValueResponse)
def value_endpoint(req: ValueRequest) -> ValueResponse:
    spec = _spec_from(req.expression, req.alphabets)
    value = functional_value(spec, req.n)
    return ValueResponse(expression=req.expression, n=req.n, value=str(value))


def _fit_response(report: FitReport) -> FitResponse:
    return FitResponse(**report.to_json())


@app.post("/fit", response_model=FitResponse)
def fit_endpoint(req: FitRequest) -> FitResponse:
    spec = _spec_from(req.expression, req.alphabets)
    return _fit_response(fit_functional(spec, degree_hint=req.degree_hint))


@app.get("/tables/{name}", response_model=TableResponse)
def tables_endpoint(name: str) -> TableResponse:
    if name == "nmu":
        table = content_elementary_table()
    elif name == "phimu":
        table = hook_elementary_table()
    else:
        raise HTTPException(status_code=404, detail=f"unknown table {name!r}; use nmu or phimu")
    entries = [
        TableEntry(
            index=list(mu),
            polynomial=poly_to_strings(poly),
            degree=poly.degree,
            pretty=poly.pretty("n"),
        )
        for mu, poly in table.items()
    ]
    return TableResponse(name=name, entries=entries)


@app.get("/series/{name}", response_model=SeriesResponse)
def series_endpoint(name: str, truncation: int = 10) -> SeriesResponse:
    builder = SERIES_BUILDERS.get(name)
    if builder is None:
        raise HTTPException(
            status_code=404,
            detail=f"unknown series {name!r}; use one of {', '.join(SERIES_BUILDERS)}",
        )
    series = builder(truncation)
    payload = series.to_json()
    return SeriesResponse(name=name, truncation=payload["truncation"], coeffs=payload["coeffs"])


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    results = run_checks(req.checks, max_n=req.max_n, seed=req.seed, jobs=req.jobs)
    return VerifyResponse(
        passed=all(r.passed for r in results),
        results=[CheckReport(**r.to_json()) for r in results],
        elapsed_seconds={r.name: r.elapsed for r in results},
    )
