"""Shared builders for concrete algebras used across the test modules."""

from fractions import Fraction

import pytest

from bihomalg import (BiHomAssociativeAlgebra, FieldSpec, LinearMap,
                      RBOperator, StructureTable)


def truncated_poly_algebra(field: FieldSpec, degree: int) -> BiHomAssociativeAlgebra:
    """k[x]/(x^degree) on the basis 1, x, .., x^(degree-1), alpha = beta = id."""
    n = degree
    zero, one = field.zero(), field.one()
    constants = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i + j < n:
                constants[i][j][i + j] = one
    table = StructureTable(field, tuple(
        tuple(tuple(col) for col in row) for row in constants))
    return BiHomAssociativeAlgebra.associative(field, table)


def integration_rb(field: FieldSpec, degree: int) -> RBOperator:
    """The weight-0 operator x^k -> x^(k+1)/(k+1) on k[x]/(x^degree),
    truncating at the top; needs 1..degree-1 invertible in the field."""
    n = degree
    zero = field.zero()
    entries = [[zero] * n for _ in range(n)]
    for k in range(n - 1):
        entries[k + 1][k] = field.from_int(k + 1).inverse()
    return RBOperator(LinearMap(field, tuple(tuple(r) for r in entries)),
                      field.zero())


@pytest.fixture
def qfield():
    return FieldSpec.rational()


@pytest.fixture
def f5():
    return FieldSpec.prime(5)


@pytest.fixture
def qx3(qfield):
    return truncated_poly_algebra(qfield, 3)


@pytest.fixture
def qx3_rb(qfield):
    return integration_rb(qfield, 3)


@pytest.fixture
def qx2(qfield):
    return truncated_poly_algebra(qfield, 2)


@pytest.fixture
def qx2_rb(qfield):
    return integration_rb(qfield, 2)


def frac(n, d=1):
    return Fraction(n, d)
