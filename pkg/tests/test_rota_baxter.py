from fractions import Fraction

import pytest

from bihomalg import (FieldSpec, LinearMap, OneSidedBaxter, RBOperator,
                      Vector, baxter_pair_product,
                      check_bihom_associative, check_dendriform,
                      check_one_sided_baxter, check_rb_on_dendriform,
                      check_rota_baxter, check_tridendriform,
                      commuting_pair_quadri, check_quadri,
                      evaluate_two_param_algebra, evaluate_rb_family,
                      quadri_projections, rb_dendriform_to_quadri, rb_derive,
                      rb_double_product, rb_persists_under_twist,
                      total_product, tridend_to_dend, verify_parametric_family)
from bihomalg.errors import (InputAxiomsFail, NonzeroWeight,
                             TwistHypothesisViolated)
from bihomalg.rota_baxter import check_double_product_morphism
from conftest import integration_rb, truncated_poly_algebra

Q = FieldSpec.rational()


def two_param_at_23():
    return evaluate_two_param_algebra({"a": Fraction(2), "b": Fraction(3)})


def test_weight0_family_passes_at_point():
    A = two_param_at_23()
    R = evaluate_rb_family("w0f1", {"a": Fraction(2), "b": Fraction(3),
                                    "r": Fraction(5)})
    assert check_rota_baxter(A, R).passed


def test_negated_identity_weight_one():
    A = two_param_at_23()
    R = RBOperator(LinearMap.identity(Q, 2).scale(Q.from_int(-1)), Q.one())
    rep = check_rota_baxter(A, R)
    assert rep.passed
    assert rep.sub_checks["commutes_alpha"]
    assert rep.sub_checks["commutes_beta"]


def test_zero_operator_any_weight():
    A = two_param_at_23()
    for lam in (0, 1, 7):
        R = RBOperator(LinearMap.zero_map(Q, 2, 2), Q.from_int(lam))
        assert check_rota_baxter(A, R).passed


def test_all_families_symbolic():
    for fid in ("w0f1", "w0f2", "w1f1", "w1f2", "w1f3", "w1f4"):
        assert verify_parametric_family(fid, "symbolic").passed, fid


def test_family_sampled_mode():
    rep = verify_parametric_family(
        "w1f3", "sampled", [{"a": 2, "b": 3}])
    assert rep.passed
    from bihomalg.errors import EvalSingular
    with pytest.raises(EvalSingular):
        verify_parametric_family(
            "w0f2", "sampled", [{"a": 2, "b": 3, "r1": 1, "r2": 0}])


def test_rb_derive_tables_without_commutation():
    # on the two-parameter algebra at a=2, b=3 the r=5 weight-0 operator does
    # not commute with alpha/beta, so the guarded constructor refuses; the
    # raw tables are still well defined and match a hand expansion
    A = two_param_at_23()
    R = evaluate_rb_family("w0f1", {"a": Fraction(2), "b": Fraction(3),
                                    "r": Fraction(5)})
    rep = check_rota_baxter(A, R)
    assert rep.passed and not rep.sub_checks["commutes_alpha"]
    with pytest.raises(InputAxiomsFail):
        rb_derive(A, R)
    T = rb_derive(A, R, check=False)
    # e2 < e2 = mu(e2, R(e2)) = mu(e2, 5 e1) = 5(-(3/2) e1 + 2 e2)
    assert T.prec.apply_basis(1, 1) == Vector(
        Q, (Q.from_fraction(Fraction(-15, 2)), Q.from_int(10)))
    assert T.dot.is_zero()


def test_rb_derive_closure(qx3, qx3_rb):
    T = rb_derive(qx3, qx3_rb)
    assert check_tridendriform(T).passed
    assert T.dot.is_zero()
    D2 = rb_double_product(qx3, qx3_rb)
    assert check_bihom_associative(D2).passed
    assert D2.mu == total_product(T).mu


def test_weight_one_derivation():
    # R = -id has weight 1 and commutes with everything
    A = two_param_at_23()
    R = RBOperator(LinearMap.identity(Q, 2).scale(Q.from_int(-1)), Q.one())
    T = rb_derive(A, R)
    assert check_tridendriform(T).passed
    assert not T.dot.is_zero()
    D = tridend_to_dend(T)
    assert check_dendriform(D).passed
    # double product x*y = -xy - xy + xy = -xy
    star = rb_double_product(A, R)
    assert star.mu == A.mu.scale(Q.from_int(-1))


def test_double_product_morphism(qx3, qx3_rb):
    assert check_double_product_morphism(qx3, qx3_rb).passed


def test_rb_on_dendriform_zero_and_identity(qx3, qx3_rb):
    D = tridend_to_dend(rb_derive(qx3, qx3_rb))
    zero = RBOperator(LinearMap.zero_map(Q, 3, 3), Q.zero())
    assert check_rb_on_dendriform(D, zero).passed
    ident = RBOperator(LinearMap.identity(Q, 3), Q.zero())
    assert not check_rb_on_dendriform(D, ident).passed  # factor-of-two failure
    with pytest.raises(NonzeroWeight):
        check_rb_on_dendriform(D, RBOperator(LinearMap.zero_map(Q, 3, 3),
                                             Q.one()))


def test_rb_acts_on_its_own_dendriform(qx3, qx3_rb):
    # R commutes with itself, so it is a weight-0 RB operator on the derived
    # dendriform structure
    D = tridend_to_dend(rb_derive(qx3, qx3_rb))
    assert check_rb_on_dendriform(D, qx3_rb).passed


def test_quadri_from_dendriform(qx3, qx3_rb):
    D = tridend_to_dend(rb_derive(qx3, qx3_rb))
    Qd = rb_dendriform_to_quadri(D, qx3_rb)
    assert check_quadri(Qd).passed
    # wedge accessor: x wedge y = x * R(y)
    star = D.prec + D.succ
    assert Qd.wedge == star.compose_right(qx3_rb.map)
    # the vertical projection is the dendriform derived from R on (D, *)
    _, vert = quadri_projections(Qd)
    assert vert.prec == star.compose_right(qx3_rb.map)
    assert vert.succ == star.compose_left(qx3_rb.map)


def test_commuting_pair_quadri(qx3, qx3_rb):
    # P = R^2 is again weight-0 Rota-Baxter here and commutes with R
    P = RBOperator(qx3_rb.map.compose(qx3_rb.map), Q.zero())
    assert check_rota_baxter(qx3, P).passed
    Qd = commuting_pair_quadri(qx3, qx3_rb, P)
    assert check_quadri(Qd).passed
    # total product equals the four-term expansion
    mu = qx3.mu
    rp = qx3_rb.map.compose(P.map)
    expansion = (mu.compose_left(rp) + mu.twist(qx3_rb.map, P.map)
                 + mu.twist(P.map, qx3_rb.map) + mu.compose_right(rp))
    assert total_product(Qd).mu == expansion


def test_commuting_pair_self():
    A = truncated_poly_algebra(Q, 3)
    R = integration_rb(Q, 3)
    Qd = commuting_pair_quadri(A, R, R)
    # x nw y = x R(R(y))
    assert Qd.nw == A.mu.compose_right(R.map.compose(R.map))


def test_commuting_pair_rejects_noncommuting():
    A = truncated_poly_algebra(Q, 3)
    R = integration_rb(Q, 3)
    # a weight-0 RB operator that does not commute with R: x -> x^2, rest -> 0
    z, o = Q.zero(), Q.one()
    P = RBOperator(LinearMap(Q, ((z, z, z), (z, z, z), (z, o, z))), Q.zero())
    assert check_rota_baxter(A, P).passed
    with pytest.raises(InputAxiomsFail):
        commuting_pair_quadri(A, R, P)


def test_one_sided_baxter_examples(qx3):
    ident = LinearMap.identity(Q, 3)
    zero = LinearMap.zero_map(Q, 3, 3)
    for side in ("left", "right"):
        assert check_one_sided_baxter(qx3, OneSidedBaxter(zero, side)).passed
        assert check_one_sided_baxter(qx3, OneSidedBaxter(ident, side)).passed


def test_baxter_pair_product(qx3):
    ident = LinearMap.identity(Q, 3)
    P = OneSidedBaxter(ident, "right")
    Qp = OneSidedBaxter(ident, "left")
    assert baxter_pair_product(qx3, P, Qp).mu == qx3.mu
    zero = OneSidedBaxter(LinearMap.zero_map(Q, 3, 3), "left")
    assert baxter_pair_product(qx3, P, zero).mu.is_zero()
    with pytest.raises(InputAxiomsFail):
        baxter_pair_product(qx3, Qp, Qp)  # wrong sides


def test_rb_persists_under_twist(qx3):
    # the projection killing 1 and fixing x, x^2 is Rota-Baxter of weight -1
    z, o = Q.zero(), Q.one()
    P = RBOperator(LinearMap(Q, ((z, z, z), (z, o, z), (z, z, o))),
                   Q.from_int(-1))
    assert check_rota_baxter(qx3, P).passed
    c = LinearMap(Q, ((o, z, z), (z, Q.from_int(2), z),
                      (z, z, Q.from_int(4))))
    rep = rb_persists_under_twist(qx3, P, c, c)
    assert rep.passed


def test_rb_persists_rejects_noncommuting_twist(qx3, qx3_rb):
    z, o = Q.zero(), Q.one()
    c = LinearMap(Q, ((o, z, z), (z, Q.from_int(2), z), (z, z, Q.from_int(4))))
    with pytest.raises(TwistHypothesisViolated):
        rb_persists_under_twist(qx3, qx3_rb, c, c)


def test_two_param_algebra_is_twist_of_associative():
    # with alpha, beta read as twist maps over the underlying associative
    # product, the structure maps are multiplicative and the record passes
    A = two_param_at_23()
    rep = check_bihom_associative(A)
    assert rep.passed
