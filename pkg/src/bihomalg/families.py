"""The built-in two-parameter 2-dimensional BiHom-associative algebra and its
six parametric Rota-Baxter families, with symbolic and sampled verification.

The algebra depends on parameters a (nonzero) and b; the families are named
w0f1, w0f2 (weight 0) and w1f1 .. w1f4 (weight 1) and depend on extra
parameters r or (r1, r2) with r2 nonzero.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import EvalSingular
from .linalg import LinearMap, StructureTable
from .rota_baxter import RBOperator, check_rota_baxter
from .scalars import FieldSpec, Scalar
from .structures import BiHomAssociativeAlgebra, CheckReport

FAMILY_IDS = ("w0f1", "w0f2", "w1f1", "w1f2", "w1f3", "w1f4")

SYMBOLIC_FIELD = FieldSpec.rational_function("a", "b", "r", "r1", "r2")


def two_param_algebra(field: FieldSpec, a: Scalar, b: Scalar) -> BiHomAssociativeAlgebra:
    """The 2-dimensional algebra with mu(e1,e1)=e1, mu(e1,e2)=b e1+(1-a)e2,
    mu(e2,e1)=b(1-a)/a e1 + a e2, mu(e2,e2)=(b/a) e2, alpha matching the
    mu(e2,e1) column and beta matching the mu(e1,e2) column.  Needs a != 0."""
    one, zero = field.one(), field.zero()
    if a.is_zero():
        raise ZeroDivisionError("the parameter a must be nonzero")
    c21_1 = b * (one - a) / a
    mu = StructureTable(field, (
        ((one, zero), (b, one - a)),
        ((c21_1, a), (zero, b / a)),
    ))
    alpha = LinearMap(field, ((one, c21_1), (zero, a)))
    beta = LinearMap(field, ((one, b), (zero, one - a)))
    return BiHomAssociativeAlgebra(field, mu, alpha, beta)


def symbolic_two_param_algebra() -> BiHomAssociativeAlgebra:
    f = SYMBOLIC_FIELD
    return two_param_algebra(f, f.parameter("a"), f.parameter("b"))


def rb_family(family_id: str, field: FieldSpec, r: Scalar | None = None,
              r1: Scalar | None = None, r2: Scalar | None = None) -> RBOperator:
    """One of the six built-in parametric Rota-Baxter operators on the
    2-dimensional algebra; pass r for the single-parameter families and
    (r1, r2) for w0f2 / w1f4 (r2 nonzero)."""
    one, zero = field.one(), field.zero()
    if family_id in ("w0f1", "w0f2"):
        weight = zero
    elif family_id in ("w1f1", "w1f2", "w1f3", "w1f4"):
        weight = one
    else:
        raise ValueError(f"unknown family {family_id!r}; pick one of {FAMILY_IDS}")
    if family_id in ("w0f2", "w1f4"):
        if r1 is None or r2 is None:
            raise ValueError(f"family {family_id} needs r1 and r2")
        if r2.is_zero():
            raise ZeroDivisionError("the parameter r2 must be nonzero")
    elif family_id != "w1f3" and r is None:
        raise ValueError(f"family {family_id} needs r")
    if family_id == "w0f1":
        entries = ((zero, r), (zero, zero))
    elif family_id == "w0f2":
        entries = ((r1, -(r1 * r1) / r2), (r2, -r1))
    elif family_id == "w1f1":
        entries = ((-one, r), (zero, zero))
    elif family_id == "w1f2":
        entries = ((zero, r), (zero, -one))
    elif family_id == "w1f3":
        entries = ((-one, zero), (zero, -one))
    else:  # w1f4
        entries = ((r1, -(r1 * (r1 + one)) / r2), (r2, -(r1 + one)))
    return RBOperator(LinearMap(field, entries), weight)


def symbolic_rb_family(family_id: str) -> RBOperator:
    f = SYMBOLIC_FIELD
    return rb_family(family_id, f, r=f.parameter("r"),
                     r1=f.parameter("r1"), r2=f.parameter("r2"))


def _evaluate_map(m: LinearMap, assignment: dict[str, Fraction]) -> LinearMap:
    q = FieldSpec.rational()
    return LinearMap(q, tuple(tuple(x.evaluate(assignment) for x in row)
                              for row in m.entries))


def _evaluate_table(t: StructureTable, assignment) -> StructureTable:
    q = FieldSpec.rational()
    return StructureTable(q, tuple(
        tuple(tuple(x.evaluate(assignment) for x in col) for col in row)
        for row in t.constants))


def evaluate_two_param_algebra(assignment: dict[str, Fraction]) -> BiHomAssociativeAlgebra:
    """The symbolic algebra evaluated at rational parameter values."""
    A = symbolic_two_param_algebra()
    return BiHomAssociativeAlgebra(FieldSpec.rational(),
                                   _evaluate_table(A.mu, assignment),
                                   _evaluate_map(A.alpha, assignment),
                                   _evaluate_map(A.beta, assignment))


def evaluate_rb_family(family_id: str, assignment: dict[str, Fraction]) -> RBOperator:
    R = symbolic_rb_family(family_id)
    weight = R.weight.evaluate(assignment) if not R.weight.is_zero() \
        else FieldSpec.rational().zero()
    return RBOperator(_evaluate_map(R.map, assignment), weight)


def verify_parametric_family(family_id: str, mode: str = "symbolic",
                             samples=None) -> CheckReport:
    """Check the Rota-Baxter identity for one of the six built-in families.

    mode="symbolic" verifies the identity over the rational-function field
    in (a, b, r, r1, r2); mode="sampled" evaluates the family at each given
    assignment dict and checks over the rationals.  Samples whose denominators
    vanish raise EvalSingular.
    """
    if mode == "symbolic":
        A = symbolic_two_param_algebra()
        return check_rota_baxter(A, symbolic_rb_family(family_id))
    if mode != "sampled":
        raise ValueError(f"mode must be 'symbolic' or 'sampled', got {mode!r}")
    if not samples:
        raise ValueError("sampled mode needs at least one assignment")
    combined = CheckReport()
    for assignment in samples:
        assignment = {k: Fraction(v) for k, v in assignment.items()}
        if Fraction(assignment.get("a", 0)) == 0:
            raise EvalSingular("the parameter a must be nonzero in samples")
        A = evaluate_two_param_algebra(assignment)
        rep = check_rota_baxter(A, evaluate_rb_family(family_id, assignment))
        combined.violations.extend(rep.violations)
        for k, v in rep.sub_checks.items():
            combined.sub_checks[k] = combined.sub_checks.get(k, True) and v
    return combined
