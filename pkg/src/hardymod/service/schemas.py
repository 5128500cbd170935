"""Request models and JSON serialization for the service.

Complex numbers travel as [re, im] pairs everywhere; series become
(nested) lists of such pairs.  Validation that concerns the wire format
lives here; numerical preconditions stay in the core modules.
"""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator, model_validator

from ..series import Series1, Series2

ComplexPair = tuple[float, float]


def pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def unpair(p) -> complex:
    return complex(p[0], p[1])


def series1_json(s: Series1) -> list[list[float]]:
    return [pair(c) for c in s.coeffs]


def series2_json(s: Series2) -> list[list[list[float]]]:
    return [[pair(c) for c in row] for row in s.coeffs]


def matrix_json(m) -> list[list[list[float]]]:
    return [[pair(c) for c in row] for row in m]


class PointIn(BaseModel):
    alpha: ComplexPair
    mult: int = Field(default=1, ge=1)

    @field_validator("alpha")
    @classmethod
    def inside_disc(cls, v):
        if (v[0] ** 2 + v[1] ** 2) >= 1.0:
            raise ValueError("alpha outside open unit disc")
        return v


class FactorRequest(BaseModel):
    alpha: ComplexPair
    cap: int = Field(ge=0)

    @field_validator("alpha")
    @classmethod
    def inside_disc(cls, v):
        if (v[0] ** 2 + v[1] ** 2) >= 1.0:
            raise ValueError("alpha outside open unit disc")
        return v


class MatrixRequest(BaseModel):
    alpha: ComplexPair
    m: int = Field(ge=1)
    cap: int | None = Field(default=None, ge=1)
    theta2: list[PointIn] = Field(default_factory=list)

    @field_validator("alpha")
    @classmethod
    def inside_disc(cls, v):
        if (v[0] ** 2 + v[1] ** 2) >= 1.0:
            raise ValueError("alpha outside open unit disc")
        return v


class ModelBasisRequest(MatrixRequest):
    pass


class WanderingConfig(BaseModel):
    """Serialized zero sequence plus numerical knobs (the config file schema)."""

    alphas: list[ComplexPair]
    mults: list[int]
    deg1: int = Field(ge=1)
    deg2: int = Field(ge=1)
    tol: float = Field(default=1e-9, gt=0)
    margin: int = Field(default=2, ge=2)
    cap_step: int = Field(default=8, ge=1)

    @model_validator(mode="after")
    def lengths_and_disc(self):
        if len(self.alphas) != len(self.mults):
            raise ValueError("alphas and mults must have equal length")
        for a in self.alphas:
            if (a[0] ** 2 + a[1] ** 2) >= 1.0:
                raise ValueError(f"alpha outside open unit disc: {a}")
        for m in self.mults:
            if m < 1:
                raise ValueError("multiplicities must be >= 1")
        return self


class VerifyRequest(BaseModel):
    samples: int = Field(ge=0)
    seed: int = 0
    deg1: int = Field(default=10, ge=1)
    deg2: int = Field(default=80, ge=1)
    tol: float = Field(default=1e-9, gt=0)
    margin: int = Field(default=2, ge=2)
    cap_step: int = Field(default=8, ge=1)


class CorollaryRequest(BaseModel):
    n_points: int = Field(ge=1)
    deg1: int = Field(default=8, ge=1)
    deg2: int = Field(default=700, ge=1)
    tol: float = Field(default=1e-9, gt=0)
