import pytest
from hypothesis import given, settings, strategies as st

from bihomalg import (BAugTree, FieldSpec, FreeElement, LEAF, RBAugTree,
                      TruncatedIdealReducer, Vector, action_eval, decompose,
                      enumerate_trees, free_alpha, free_beta, free_multiply,
                      free_R, graft, parse_tree, serialize_tree, tree_R,
                      tree_alpha, tree_beta)
from bihomalg.errors import (BoundsExceeded, Indecomposable, InvalidArity,
                             WrongAugmentation)

Q = FieldSpec.rational()

SMALL_BOUNDS = {"max_leaves": 3, "max_ab_power": 2, "max_r_power": 1}


def test_catalan_counts():
    assert [len(enumerate_trees(n)) for n in range(1, 6)] == [1, 1, 2, 5, 14]
    with pytest.raises(InvalidArity):
        enumerate_trees(0)


def test_graft_and_decompose_round_trip():
    trees = enumerate_trees(3)
    for t in enumerate_trees(4):
        p, q, l, r = decompose(t)
        assert p + q == 4
        assert graft(l, r) == t
    with pytest.raises(Indecomposable):
        decompose(LEAF)


def test_rb_decompose_extracts_root_power():
    t = RBAugTree(graft(LEAF, LEAF), ((1, 0), (0, 2)), (0, 0, 0))
    t2 = tree_R(tree_R(t))
    p, q, s, l, r = decompose(t2)
    assert (p, q, s) == (1, 1, 2)
    rebuilt = graft(l, r)
    for _ in range(s):
        rebuilt = tree_R(rebuilt)
    assert rebuilt == t2


def test_graft_rejects_mixed_kinds():
    b = BAugTree(LEAF, ((0, 0),))
    rb = RBAugTree(LEAF, ((0, 0),), (0,))
    with pytest.raises(WrongAugmentation):
        graft(b, rb)


def test_tree_maps():
    t = RBAugTree(LEAF, ((1, 2),), (3,))
    assert tree_alpha(t).leaf_powers == ((2, 2),)
    assert tree_beta(t).leaf_powers == ((1, 3),)
    assert tree_R(t).vertex_powers == (4,)
    with pytest.raises(WrongAugmentation):
        tree_R(BAugTree(LEAF, ((0, 0),)))


def test_serialize_examples():
    assert serialize_tree(LEAF) == "L"
    t = RBAugTree(graft(LEAF, LEAF), ((1, 2), (0, 0)), (3, 0, 1))
    assert serialize_tree(t) == "(L[1,2;0] L[0,0;1]){3}"
    b = BAugTree(graft(LEAF, LEAF), ((1, 2), (0, 0)))
    assert serialize_tree(b) == "(L[1,2] L[0,0])"


def test_parse_round_trips():
    texts = [
        "L[1,2;3]",
        "(L[1,2;1] (L[0,2;0] L[3,0;2]){1}){3}",
        "(L[0,1] L[2,0])",
        "((L[0,0;0] L[0,0;1]){0} L[1,1;0]){2}",
    ]
    for text in texts:
        t = parse_tree(text)
        assert serialize_tree(t) == text


def test_parse_rejections():
    for bad in ["(L[0,0] L[0,0;1])", "L[1,2", "(L L))", "L extra", ""]:
        with pytest.raises(ValueError):
            parse_tree(bad)


def test_free_element_linearity():
    g1 = FreeElement.generator(Q, 2, RBAugTree(LEAF, ((0, 0),), (0,)), (0,))
    g2 = FreeElement.generator(Q, 2, RBAugTree(LEAF, ((0, 0),), (0,)), (1,))
    x = g1.scale(Q.from_int(2)) + g2
    assert (x - g2) == g1 + g1
    assert (x - x).is_zero()
    prod = free_multiply(g1, g2)
    assert len(prod.terms) == 1
    (tree, word, c), = prod.terms.values()
    assert word == (0, 1)
    assert tree.tree == graft(LEAF, LEAF)


def test_free_maps_are_linear_and_injective_on_terms():
    g1 = FreeElement.generator(Q, 1, RBAugTree(LEAF, ((0, 0),), (0,)), (0,))
    x = free_multiply(g1, free_R(g1))
    y = free_alpha(x) + free_beta(x)
    assert len(y.terms) == 2
    assert free_R(y) - free_R(free_alpha(x)) == free_R(free_beta(x))


def test_action_eval_matches_direct_composition(qx3, qx3_rb):
    # R(alpha beta R(x0) . R^2(alpha^3 x1)) with alpha = beta = id collapses
    # to R(R(x0) . R^2(x1)); evaluate both ways on x0 = 1 + x, x1 = x
    t = parse_tree("(L[1,1;1] L[3,0;2]){1}")
    one_plus_x = Vector(Q, (Q.one(), Q.one(), Q.zero()))
    xv = Vector(Q, (Q.zero(), Q.one(), Q.zero()))
    got = action_eval(t, [one_plus_x, xv], qx3, qx3_rb)
    r = qx3_rb.map
    from bihomalg import apply_bilinear
    direct = r.apply(apply_bilinear(
        qx3.mu, r.apply(one_plus_x), r.compose(r).apply(xv)))
    assert got == direct


def test_action_eval_b_augmented(qx3):
    t = parse_tree("(L[0,0] L[0,0])")
    xv = Vector(Q, (Q.zero(), Q.one(), Q.zero()))
    got = action_eval(t, [xv, xv], qx3)
    assert got == Vector(Q, (Q.zero(), Q.zero(), Q.one()))
    with pytest.raises(ValueError):
        action_eval(t, [xv], qx3)


def test_action_eval_argument_validation(qx3, qx3_rb):
    rb_tree = parse_tree("L[0,0;1]")
    with pytest.raises(ValueError):
        action_eval(rb_tree, [Vector(Q, (Q.one(), Q.zero(), Q.zero()))], qx3)
    b_tree = parse_tree("L[0,0]")
    with pytest.raises(ValueError):
        action_eval(b_tree, [Vector(Q, (Q.one(), Q.zero(), Q.zero()))],
                    qx3, qx3_rb)


@pytest.fixture(scope="module")
def reducer():
    return TruncatedIdealReducer(Q, 2, SMALL_BOUNDS)


def gen(tree_text, word):
    return FreeElement.generator(Q, 2, parse_tree(tree_text), tuple(word))


def test_ideal_seed_reduces_to_zero(reducer):
    t1 = gen("L[0,0;0]", [0])
    t2 = gen("L[0,0;0]", [1])
    t3 = gen("L[0,0;0]", [0])
    g = free_multiply(free_multiply(t1, t2), free_beta(t3)) \
        - free_multiply(free_alpha(t1), free_multiply(t2, t3))
    assert reducer.reduce(g).is_zero()


def test_ideal_closure_under_maps(reducer):
    t1 = gen("L[0,0;0]", [1])
    t2 = gen("L[0,0;1]", [0])
    t3 = gen("L[0,0;0]", [1])
    g = free_multiply(free_multiply(t1, t2), free_beta(t3)) \
        - free_multiply(free_alpha(t1), free_multiply(t2, t3))
    assert reducer.reduce(free_alpha(g)).is_zero()
    assert reducer.reduce(free_beta(g)).is_zero()


def test_nonmember_does_not_reduce_to_zero(reducer):
    x = gen("(L[0,0;0] L[0,0;0]){0}", [0, 1]) - gen("(L[0,0;0] L[0,0;0]){0}",
                                                    [1, 0])
    assert not reducer.reduce(x).is_zero()
    y = gen("L[0,0;1]", [0])
    assert reducer.reduce(y) == y


def test_bounds_enforced(reducer):
    big = gen("L[3,0;0]", [0])
    with pytest.raises(BoundsExceeded):
        reducer.reduce(big)
    with pytest.raises(ValueError):
        TruncatedIdealReducer(Q, 1, {"max_leaves": 2})


@st.composite
def random_rb_trees(draw):
    n = draw(st.integers(min_value=1, max_value=3))
    shape = draw(st.sampled_from(enumerate_trees(n)))
    lp = tuple((draw(st.integers(0, 2)), draw(st.integers(0, 2)))
               for _ in range(n))
    vp = tuple(draw(st.integers(0, 2)) for _ in range(shape.vertices))
    return RBAugTree(shape, lp, vp)


@given(random_rb_trees())
@settings(max_examples=60, deadline=None)
def test_serialize_parse_round_trip_property(t):
    assert parse_tree(serialize_tree(t)) == t


@given(random_rb_trees(), random_rb_trees())
@settings(max_examples=40, deadline=None)
def test_graft_decompose_inverse_property(t1, t2):
    t = graft(t1, t2)
    p, q, s, l, r = decompose(t)
    assert s == 0 and (l, r) == (t1, t2)
