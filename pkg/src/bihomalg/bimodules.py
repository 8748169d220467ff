"""Bimodules over BiHom-associative algebras, split null extensions, Yau
twists of bimodules, and generalized Rota-Baxter operators (maps from the
module into the algebra satisfying the Rota-Baxter identity through the
actions).

Actions are rectangular structure tables with an explicit operand order:
left_action is A (x) M -> M and right_action is M (x) A -> M.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (DimensionMismatch, InputAxiomsFail,
                     TwistHypothesisViolated)
from .linalg import LinearMap, StructureTable, block_diag, tensor2
from .rota_baxter import RBOperator
from .structures import (BiHomAssociativeAlgebra, BiHomDendriform, CheckReport,
                         DEFAULT_VIOLATION_CAP, yau_twist)


@dataclass(frozen=True)
class BiHomBimodule:
    """A bimodule (M, alpha_M, beta_M) over the algebra held in `algebra`."""

    algebra: BiHomAssociativeAlgebra
    alpha_M: LinearMap
    beta_M: LinearMap
    left_action: StructureTable   # A (x) M -> M
    right_action: StructureTable  # M (x) A -> M

    def __post_init__(self):
        n, m = self.algebra.dim, self.dim
        if (self.left_action.dim_left, self.left_action.dim_right,
                self.left_action.dim_out) != (n, m, m):
            raise DimensionMismatch("left_action must be A (x) M -> M")
        if (self.right_action.dim_left, self.right_action.dim_right,
                self.right_action.dim_out) != (m, n, m):
            raise DimensionMismatch("right_action must be M (x) A -> M")

    @property
    def dim(self) -> int:
        return self.alpha_M.rows

    @staticmethod
    def regular(A: BiHomAssociativeAlgebra) -> "BiHomBimodule":
        """M = A with both actions the multiplication."""
        return BiHomBimodule(A, A.alpha, A.beta, A.mu, A.mu)

    @staticmethod
    def zero_actions(A: BiHomAssociativeAlgebra, alpha_M: LinearMap,
                     beta_M: LinearMap) -> "BiHomBimodule":
        m = alpha_M.rows
        return BiHomBimodule(A, alpha_M, beta_M,
                             StructureTable.zero(A.field, A.dim, m, m),
                             StructureTable.zero(A.field, m, A.dim, m))


@dataclass(frozen=True)
class GRBOperator:
    """A map pi: M -> A, stored as an n x m matrix."""

    map: LinearMap


def check_bimodule(A: BiHomAssociativeAlgebra, M: BiHomBimodule,
                   cap: int = DEFAULT_VIOLATION_CAP) -> CheckReport:
    """All module axioms: commuting structure maps on M, the four alpha/beta
    compatibilities with the actions, the left and right module identities,
    and the middle bimodule identity."""
    rep = CheckReport(cap=cap)
    n, m = A.dim, M.dim
    L = M.left_action.as_matrix()    # m x (n*m)
    R = M.right_action.as_matrix()   # m x (m*n)
    mu = A.mu.as_matrix()
    aA, bA, aM, bM = A.alpha, A.beta, M.alpha_M, M.beta_M
    rep._compare("alphaM_betaM_commute", aM.compose(bM), bM.compose(aM), (m,))
    rep._compare("alphaM_left_compat", aM.compose(L),
                 L.compose(tensor2(aA, aM)), (n, m))
    rep._compare("betaM_left_compat", bM.compose(L),
                 L.compose(tensor2(bA, bM)), (n, m))
    rep._compare("alphaM_right_compat", aM.compose(R),
                 R.compose(tensor2(aM, aA)), (m, n))
    rep._compare("betaM_right_compat", bM.compose(R),
                 R.compose(tensor2(bM, bA)), (m, n))
    # alpha_A(a) . (a' . m) == (a a') . beta_M(m)
    rep._compare("left_module", L.compose(tensor2(aA, L)),
                 L.compose(tensor2(mu, bM)), (n, n, m))
    # alpha_M(m) . (a a') == (m . a) . beta_A(a')
    rep._compare("right_module", R.compose(tensor2(aM, mu)),
                 R.compose(tensor2(R, bA)), (m, n, n))
    # alpha_A(a) . (m . a') == (a . m) . beta_A(a')
    rep._compare("bimodule_middle", L.compose(tensor2(aA, R)),
                 R.compose(tensor2(L, bA)), (n, m, n))
    return rep


def split_null_extension(A: BiHomAssociativeAlgebra, M: BiHomBimodule,
                         check: bool = True) -> BiHomAssociativeAlgebra:
    """The algebra on A (+) M with (a,m)(a',m') = (aa', m.a' + a.m').

    check=False skips the bimodule precondition, which lets the converse of
    the construction be exercised: the extension is BiHom-associative exactly
    when the data is a bimodule.
    """
    if check:
        rep = check_bimodule(A, M)
        if not rep.passed:
            raise InputAxiomsFail(
                f"split_null_extension: {', '.join(rep.failed_axioms())}", rep)
    n, m = A.dim, M.dim
    d = n + m
    zero = A.field.zero()
    constants = [[[zero] * d for _ in range(d)] for _ in range(d)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                constants[i][j][k] = A.mu.constants[i][j][k]
    for i in range(n):          # a . m'
        for j in range(m):
            for k in range(m):
                constants[i][n + j][n + k] = M.left_action.constants[i][j][k]
    for i in range(m):          # m . a'
        for j in range(n):
            for k in range(m):
                constants[n + i][j][n + k] = M.right_action.constants[i][j][k]
    table = StructureTable(A.field, tuple(
        tuple(tuple(col) for col in row) for row in constants))
    return BiHomAssociativeAlgebra(A.field, table,
                                   block_diag(A.alpha, M.alpha_M),
                                   block_diag(A.beta, M.beta_M))


def yau_twist_bimodule(A: BiHomAssociativeAlgebra, M: BiHomBimodule,
                       atilde_A: LinearMap, btilde_A: LinearMap,
                       atilde_M: LinearMap, btilde_M: LinearMap) -> BiHomBimodule:
    """Twisted actions a |> m = atilde_A(a) . btilde_M(m) and
    m <| a = atilde_M(m) . btilde_A(a), over the Yau twist of A.

    The twist maps must be action-compatible endomorphisms that commute with
    each other and with the existing structure maps.
    """
    L, R = M.left_action, M.right_action
    probe = CheckReport(cap=1)
    lm, rm = L.as_matrix(), R.as_matrix()
    n, m = A.dim, M.dim
    for tag, f_A, f_M in (("atilde", atilde_A, atilde_M),
                          ("btilde", btilde_A, btilde_M)):
        probe._compare(f"{tag}_left_compat", f_M.compose(lm),
                       lm.compose(tensor2(f_A, f_M)), (n, m))
        probe._compare(f"{tag}_right_compat", f_M.compose(rm),
                       rm.compose(tensor2(f_M, f_A)), (m, n))
    for tag, f, g in (("atildeM_btildeM", atilde_M, btilde_M),
                      ("atildeM_alphaM", atilde_M, M.alpha_M),
                      ("atildeM_betaM", atilde_M, M.beta_M),
                      ("btildeM_alphaM", btilde_M, M.alpha_M),
                      ("btildeM_betaM", btilde_M, M.beta_M)):
        probe._compare(tag, f.compose(g), g.compose(f), (m,))
    if not probe.passed:
        raise TwistHypothesisViolated(", ".join(probe.failed_axioms()))
    twisted_A = yau_twist(A, atilde_A, btilde_A)  # validates the algebra side
    return BiHomBimodule(
        twisted_A,
        atilde_M.compose(M.alpha_M),
        btilde_M.compose(M.beta_M),
        L.twist(atilde_A, btilde_M),
        R.twist(atilde_M, btilde_A))


def check_grb(A: BiHomAssociativeAlgebra, M: BiHomBimodule, pi: GRBOperator,
              cap: int = DEFAULT_VIOLATION_CAP) -> CheckReport:
    """pi(m)pi(n) == pi( pi(m).n + m.pi(n) ) on basis pairs of M.

    Commutation of pi with the structure maps (alpha_A pi = pi alpha_M and
    likewise for beta) is reported in sub_checks.
    """
    n, m = A.dim, M.dim
    if (pi.map.rows, pi.map.cols) != (n, m):
        raise DimensionMismatch("pi must map M into A")
    rep = CheckReport(cap=cap)
    mu = A.mu.as_matrix()
    L = M.left_action.as_matrix()
    R = M.right_action.as_matrix()
    ident = LinearMap.identity(A.field, m)
    lhs = mu.compose(tensor2(pi.map, pi.map))
    inner = L.compose(tensor2(pi.map, ident)) + R.compose(tensor2(ident, pi.map))
    rep._compare("grb", lhs, pi.map.compose(inner), (m, m))
    rep.sub_checks["commutes_alpha"] = \
        A.alpha.compose(pi.map) == pi.map.compose(M.alpha_M)
    rep.sub_checks["commutes_beta"] = \
        A.beta.compose(pi.map) == pi.map.compose(M.beta_M)
    return rep


def grb_hat(A: BiHomAssociativeAlgebra, M: BiHomBimodule,
            pi: GRBOperator) -> RBOperator:
    """pi_hat(a, m) = (pi(m), 0) on the split null extension; a weight-0
    Rota-Baxter operator there exactly when pi satisfies the generalized
    Rota-Baxter identity."""
    rep = check_bimodule(A, M)
    if not rep.passed:
        raise InputAxiomsFail(f"grb_hat: {', '.join(rep.failed_axioms())}", rep)
    n, m = A.dim, M.dim
    d = n + m
    zero = A.field.zero()
    entries = [[zero] * d for _ in range(d)]
    for i in range(n):
        for j in range(m):
            entries[i][n + j] = pi.map.entries[i][j]
    return RBOperator(LinearMap(A.field, tuple(tuple(r) for r in entries)),
                      A.field.zero())


def _require_grb(A, M, pi, caller):
    rep = check_grb(A, M, pi)
    if not rep.passed:
        raise InputAxiomsFail(f"{caller}: grb", rep)
    for name in ("commutes_alpha", "commutes_beta"):
        if not rep.sub_checks[name]:
            raise InputAxiomsFail(f"{caller}: {name}", rep)


def grb_to_dendriform(M: BiHomBimodule, pi: GRBOperator,
                      check: bool = True) -> BiHomDendriform:
    """m > n = pi(m).n and m < n = m.pi(n), a dendriform structure on M."""
    A = M.algebra
    if check:
        _require_grb(A, M, pi, "grb_to_dendriform")
    ident = LinearMap.identity(A.field, M.dim)
    succ = StructureTable.from_matrix(
        A.field, M.left_action.as_matrix().compose(tensor2(pi.map, ident)),
        M.dim, M.dim)
    prec = StructureTable.from_matrix(
        A.field, M.right_action.as_matrix().compose(tensor2(ident, pi.map)),
        M.dim, M.dim)
    return BiHomDendriform(A.field, prec, succ, M.alpha_M, M.beta_M)


def grb_transpose_actions(A: BiHomAssociativeAlgebra, M: BiHomBimodule,
                          pi: GRBOperator):
    """Make A a bimodule over (M, *_pi) via m ._pi a = pi(m)a - pi(m.a) and
    a ._pi m = a pi(m) - pi(a.m).  Returns (bimodule, its split null
    extension M |x A)."""
    _require_grb(A, M, pi, "grb_transpose_actions")
    n, m = A.dim, M.dim
    field = A.field
    mu = A.mu.as_matrix()
    L = M.left_action.as_matrix()
    R = M.right_action.as_matrix()
    id_n = LinearMap.identity(field, n)
    id_m = LinearMap.identity(field, m)
    star = StructureTable.from_matrix(
        field, L.compose(tensor2(pi.map, id_m)) + R.compose(tensor2(id_m, pi.map)),
        m, m)
    base = BiHomAssociativeAlgebra(field, star, M.alpha_M, M.beta_M)
    # left: M (x) A -> A, m ._pi a
    left = StructureTable.from_matrix(
        field, mu.compose(tensor2(pi.map, id_n)) - pi.map.compose(R), m, n)
    # right: A (x) M -> A, a ._pi m
    right = StructureTable.from_matrix(
        field, mu.compose(tensor2(id_n, pi.map)) - pi.map.compose(L), n, m)
    module = BiHomBimodule(base, A.alpha, A.beta, left, right)
    return module, split_null_extension(base, module)
