"""Request and response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class PartitionsResponse(BaseModel):
    n: int
    count: int
    partitions: list[list[int]]


class ValueRequest(BaseModel):
    expression: str
    alphabets: dict[str, str] = Field(default_factory=dict)
    n: int = Field(ge=0)


class ValueResponse(BaseModel):
    expression: str
    n: int
    value: str


class FitRequest(BaseModel):
    expression: str
    alphabets: dict[str, str] = Field(default_factory=dict)
    degree_hint: int | None = None


class FitResponse(BaseModel):
    polynomial: list[str]
    degree: int
    samples: list[int]
    verified: bool


class TableEntry(BaseModel):
    index: list[int]
    polynomial: list[str]
    degree: int
    pretty: str


class TableResponse(BaseModel):
    name: str
    entries: list[TableEntry]


class SeriesResponse(BaseModel):
    name: str
    truncation: int
    coeffs: list[list[str]]


class VerifyRequest(BaseModel):
    checks: list[str] = Field(default_factory=lambda: ["all"])
    max_n: int | None = None
    seed: int = 0
    jobs: int = Field(default=1, ge=1)


class CheckReport(BaseModel):
    name: str
    description: str
    passed: bool
    cases: int
    failures: list[str]


class VerifyResponse(BaseModel):
    passed: bool
    results: list[CheckReport]
    elapsed_seconds: dict[str, float]
