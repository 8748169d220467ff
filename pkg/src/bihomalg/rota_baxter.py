"""Rota-Baxter and one-sided Baxter operators, their checkers, and the
derived dendriform/tridendriform/quadri/double-product structures.

Conventions: an operator record holds only its matrix and weight and is never
validated on construction.  Commutation of R with the structure maps alpha
and beta is reported by check_rota_baxter as a named sub-check, not as an
axiom violation; the derived-structure constructors do require it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, InputAxiomsFail, NonzeroWeight
from .linalg import LinearMap, maps_commute
from .scalars import Scalar
from .structures import (BiHomAssociativeAlgebra, BiHomDendriform, BiHomQuadri,
                         BiHomTridendriform, CheckReport, DEFAULT_VIOLATION_CAP,
                         check_dendriform, yau_twist)


@dataclass(frozen=True)
class RBOperator:
    map: LinearMap
    weight: Scalar

    @property
    def dim(self) -> int:
        return self.map.rows


@dataclass(frozen=True)
class OneSidedBaxter:
    map: LinearMap
    side: str  # "left" or "right"

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {self.side!r}")


def _match(A, op_map: LinearMap) -> None:
    if op_map.rows != op_map.cols or op_map.rows != A.dim:
        raise DimensionMismatch("operator does not match the algebra dimension")


def check_rota_baxter(A: BiHomAssociativeAlgebra, R: RBOperator,
                      cap: int = DEFAULT_VIOLATION_CAP) -> CheckReport:
    """R(x)R(y) == R( R(x)y + xR(y) + weight*xy ) on all basis pairs.

    Whether R commutes with alpha and beta is recorded in sub_checks but does
    not count as a violation.
    """
    _match(A, R.map)
    rep = CheckReport(cap=cap)
    n = A.dim
    lhs = A.mu.twist(R.map, R.map)
    inner = A.mu.compose_left(R.map) + A.mu.compose_right(R.map) \
        + A.mu.scale(R.weight)
    rhs = inner.postcompose(R.map)
    rep._compare("rota_baxter", lhs.as_matrix(), rhs.as_matrix(), (n, n))
    rep.sub_checks["commutes_alpha"] = maps_commute(R.map, A.alpha)
    rep.sub_checks["commutes_beta"] = maps_commute(R.map, A.beta)
    return rep


def _require_rb(A: BiHomAssociativeAlgebra, R: RBOperator, caller: str) -> None:
    rep = check_rota_baxter(A, R)
    if not rep.passed:
        raise InputAxiomsFail(f"{caller}: rota_baxter", rep)
    for name in ("commutes_alpha", "commutes_beta"):
        if not rep.sub_checks[name]:
            raise InputAxiomsFail(f"{caller}: {name}", rep)


def rb_derive(A: BiHomAssociativeAlgebra, R: RBOperator,
              check: bool = True) -> BiHomTridendriform:
    """x < y = xR(y), x > y = R(x)y, x . y = weight * xy.

    With check=True (the default) the Rota-Baxter identity and commutation
    with alpha, beta are verified first.  check=False builds the raw tables
    regardless, for inspecting operators that fail the commutation half.
    """
    if check:
        _require_rb(A, R, "rb_derive")
    return BiHomTridendriform(
        A.field,
        prec=A.mu.compose_right(R.map),
        succ=A.mu.compose_left(R.map),
        dot=A.mu.scale(R.weight),
        alpha=A.alpha, beta=A.beta)


def check_double_product_morphism(A: BiHomAssociativeAlgebra, R: RBOperator,
                                  cap: int = DEFAULT_VIOLATION_CAP) -> CheckReport:
    """R(x * y) == R(x)R(y) where * is the Rota-Baxter double product."""
    _match(A, R.map)
    rep = CheckReport(cap=cap)
    star = A.mu.compose_left(R.map) + A.mu.compose_right(R.map) \
        + A.mu.scale(R.weight)
    lhs = star.postcompose(R.map)
    rhs = A.mu.twist(R.map, R.map)
    rep._compare("double_product_morphism", lhs.as_matrix(), rhs.as_matrix(),
                 (A.dim, A.dim))
    return rep


def rb_double_product(A: BiHomAssociativeAlgebra, R: RBOperator,
                      check: bool = True) -> BiHomAssociativeAlgebra:
    """x * y = xR(y) + R(x)y + weight*xy, a BiHom-associative multiplication
    for which R becomes multiplicative."""
    if check:
        _require_rb(A, R, "rb_double_product")
        morph = check_double_product_morphism(A, R)
        if not morph.passed:
            raise InputAxiomsFail("rb_double_product: double_product_morphism",
                                  morph)
    star = A.mu.compose_left(R.map) + A.mu.compose_right(R.map) \
        + A.mu.scale(R.weight)
    return BiHomAssociativeAlgebra(A.field, star, A.alpha, A.beta)


def check_rb_on_dendriform(D: BiHomDendriform, R: RBOperator,
                           cap: int = DEFAULT_VIOLATION_CAP) -> CheckReport:
    """Weight-0 Rota-Baxter identity for both dendriform halves:
    R(x) <> R(y) == R( x <> R(y) + R(x) <> y ), together with commutation
    of R with alpha and beta (part of the definition here)."""
    _match(D, R.map)
    if not R.weight.is_zero():
        raise NonzeroWeight("Rota-Baxter on a dendriform algebra needs weight 0")
    rep = CheckReport(cap=cap)
    n = D.dim
    for tag, op in (("succ", D.succ), ("prec", D.prec)):
        lhs = op.twist(R.map, R.map)
        rhs = (op.compose_right(R.map) + op.compose_left(R.map)) \
            .postcompose(R.map)
        rep._compare(f"rb_dendriform_{tag}", lhs.as_matrix(), rhs.as_matrix(),
                     (n, n))
    rep._compare("commutes_alpha", R.map.compose(D.alpha),
                 D.alpha.compose(R.map), (n,))
    rep._compare("commutes_beta", R.map.compose(D.beta),
                 D.beta.compose(R.map), (n,))
    return rep


def rb_dendriform_to_quadri(D: BiHomDendriform, R: RBOperator) -> BiHomQuadri:
    """x nw y = x < R(y), x sw y = R(x) < y, x ne y = x > R(y),
    x se y = R(x) > y."""
    rep = check_rb_on_dendriform(D, R)
    if not rep.passed:
        raise InputAxiomsFail(
            f"rb_dendriform_to_quadri: {', '.join(rep.failed_axioms())}", rep)
    drep = check_dendriform(D)
    if not drep.passed:
        raise InputAxiomsFail(
            f"rb_dendriform_to_quadri: {', '.join(drep.failed_axioms())}", drep)
    return BiHomQuadri(
        D.field,
        nw=D.prec.compose_right(R.map),
        sw=D.prec.compose_left(R.map),
        ne=D.succ.compose_right(R.map),
        se=D.succ.compose_left(R.map),
        alpha=D.alpha, beta=D.beta)


def commuting_pair_quadri(A: BiHomAssociativeAlgebra, R: RBOperator,
                          P: RBOperator) -> BiHomQuadri:
    """For a commuting pair of weight-0 Rota-Baxter operators:
    x se y = R(P(x))y, x ne y = R(x)P(y), x sw y = P(x)R(y),
    x nw y = xR(P(y))."""
    for op, name in ((R, "R"), (P, "P")):
        if not op.weight.is_zero():
            raise InputAxiomsFail(f"commuting_pair_quadri: weight of {name} is nonzero")
        rep = check_rota_baxter(A, op)
        if not rep.passed:
            raise InputAxiomsFail(f"commuting_pair_quadri: rota_baxter ({name})", rep)
        for sub in ("commutes_alpha", "commutes_beta"):
            if not rep.sub_checks[sub]:
                raise InputAxiomsFail(f"commuting_pair_quadri: {sub} ({name})", rep)
    if not maps_commute(R.map, P.map):
        raise InputAxiomsFail("commuting_pair_quadri: R and P do not commute")
    rp = R.map.compose(P.map)
    return BiHomQuadri(
        A.field,
        nw=A.mu.compose_right(rp),
        sw=A.mu.twist(P.map, R.map),
        ne=A.mu.twist(R.map, P.map),
        se=A.mu.compose_left(rp),
        alpha=A.alpha, beta=A.beta)


def check_one_sided_baxter(A: BiHomAssociativeAlgebra, B: OneSidedBaxter,
                           cap: int = DEFAULT_VIOLATION_CAP) -> CheckReport:
    """Right: P(a)P(b) == P(P(a)b).  Left: Q(a)Q(b) == Q(aQ(b))."""
    _match(A, B.map)
    rep = CheckReport(cap=cap)
    lhs = A.mu.twist(B.map, B.map)
    if B.side == "right":
        rhs = A.mu.compose_left(B.map).postcompose(B.map)
    else:
        rhs = A.mu.compose_right(B.map).postcompose(B.map)
    rep._compare(f"{B.side}_baxter", lhs.as_matrix(), rhs.as_matrix(),
                 (A.dim, A.dim))
    return rep


def baxter_pair_product(A: BiHomAssociativeAlgebra, P: OneSidedBaxter,
                        Q: OneSidedBaxter) -> BiHomAssociativeAlgebra:
    """a * b = P(a)Q(b) for a right Baxter operator P and a left Baxter
    operator Q that commute with each other and with alpha, beta."""
    if P.side != "right" or Q.side != "left":
        raise InputAxiomsFail("baxter_pair_product: need a (right, left) pair")
    for op, name in ((P, "P"), (Q, "Q")):
        rep = check_one_sided_baxter(A, op)
        if not rep.passed:
            raise InputAxiomsFail(f"baxter_pair_product: {op.side}_baxter ({name})",
                                  rep)
        if not maps_commute(op.map, A.alpha):
            raise InputAxiomsFail(f"baxter_pair_product: {name} does not commute with alpha")
        if not maps_commute(op.map, A.beta):
            raise InputAxiomsFail(f"baxter_pair_product: {name} does not commute with beta")
    if not maps_commute(P.map, Q.map):
        raise InputAxiomsFail("baxter_pair_product: P and Q do not commute")
    return BiHomAssociativeAlgebra(A.field, A.mu.twist(P.map, Q.map),
                                   A.alpha, A.beta)


def rb_persists_under_twist(A: BiHomAssociativeAlgebra, R: RBOperator,
                            atilde: LinearMap, btilde: LinearMap) -> CheckReport:
    """Yau-twist the algebra by (atilde, btilde) and re-check R there.

    The twist endomorphisms must also commute with R for the persistence
    statement to apply; that is validated alongside the usual twist
    hypotheses."""
    from .errors import TwistHypothesisViolated
    if not maps_commute(atilde, R.map):
        raise TwistHypothesisViolated("atilde does not commute with R")
    if not maps_commute(btilde, R.map):
        raise TwistHypothesisViolated("btilde does not commute with R")
    twisted = yau_twist(A, atilde, btilde)
    return check_rota_baxter(twisted, R)
