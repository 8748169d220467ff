"""Planar binary trees, their augmented variants, grafting, the three tree
maps, the free construction on tree-indexed generators, tree actions on a
concrete operated algebra, and truncated reduction modulo the associativity
ideal.

An augmented tree carries a pair of nonnegative powers on each leaf; the
RB-augmented variant additionally carries one nonnegative power on *every*
vertex (leaves and internal nodes alike), stored in preorder with the root
first.  Grafting joins two trees under a fresh root whose power is 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (BoundsExceeded, Indecomposable, InvalidArity,
                     WrongAugmentation)
from .linalg import Vector, apply_bilinear
from .scalars import FieldSpec, Scalar


@dataclass(frozen=True)
class PlanarBinaryTree:
    """Leaf when left is None; otherwise an internal node."""

    left: "PlanarBinaryTree | None" = None
    right: "PlanarBinaryTree | None" = None

    def __post_init__(self):
        if (self.left is None) != (self.right is None):
            raise ValueError("node needs both children")

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def leaves(self) -> int:
        return 1 if self.is_leaf else self.left.leaves + self.right.leaves

    @property
    def vertices(self) -> int:
        return 2 * self.leaves - 1


LEAF = PlanarBinaryTree()


def enumerate_trees(n: int) -> list[PlanarBinaryTree]:
    """All planar binary trees with n leaves, ordered recursively by the
    split point p = 1 .. n-1 (left subtree takes p leaves)."""
    if not isinstance(n, int) or n < 1:
        raise InvalidArity(f"tree arity must be a positive integer, got {n!r}")
    if n == 1:
        return [LEAF]
    out = []
    for p in range(1, n):
        for t1 in enumerate_trees(p):
            for t2 in enumerate_trees(n - p):
                out.append(PlanarBinaryTree(t1, t2))
    return out


@dataclass(frozen=True)
class BAugTree:
    tree: PlanarBinaryTree
    leaf_powers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.leaf_powers) != self.tree.leaves:
            raise ValueError("leaf_powers length must equal the leaf count")

    @property
    def leaves(self) -> int:
        return self.tree.leaves


@dataclass(frozen=True)
class RBAugTree:
    """vertex_powers lists one power per vertex in preorder (root, then the
    left subtree's vertices, then the right subtree's)."""

    tree: PlanarBinaryTree
    leaf_powers: tuple[tuple[int, int], ...]
    vertex_powers: tuple[int, ...]

    def __post_init__(self):
        if len(self.leaf_powers) != self.tree.leaves:
            raise ValueError("leaf_powers length must equal the leaf count")
        if len(self.vertex_powers) != self.tree.vertices:
            raise ValueError("vertex_powers length must equal the vertex count")

    @property
    def leaves(self) -> int:
        return self.tree.leaves

    @property
    def root_power(self) -> int:
        return self.vertex_powers[0]


AugTree = BAugTree | RBAugTree


def graft(t1: AugTree | PlanarBinaryTree, t2) -> AugTree | PlanarBinaryTree:
    """Join the roots under a new root node; the new root's power is 0."""
    if isinstance(t1, PlanarBinaryTree) and isinstance(t2, PlanarBinaryTree):
        return PlanarBinaryTree(t1, t2)
    if isinstance(t1, BAugTree) and isinstance(t2, BAugTree):
        return BAugTree(PlanarBinaryTree(t1.tree, t2.tree),
                        t1.leaf_powers + t2.leaf_powers)
    if isinstance(t1, RBAugTree) and isinstance(t2, RBAugTree):
        return RBAugTree(PlanarBinaryTree(t1.tree, t2.tree),
                         t1.leaf_powers + t2.leaf_powers,
                         (0,) + t1.vertex_powers + t2.vertex_powers)
    raise WrongAugmentation(
        f"cannot graft {type(t1).__name__} with {type(t2).__name__}")


def decompose(t):
    """Split at the root.  Returns (p, q, t1, t2) for plain and B-augmented
    trees, and (p, q, s, t1, t2) for RB-augmented trees where s is the root
    power (so tree_R applied s times to graft(t1, t2) reconstructs t)."""
    if isinstance(t, PlanarBinaryTree):
        if t.is_leaf:
            raise Indecomposable("a single leaf has no root split")
        return t.left.leaves, t.right.leaves, t.left, t.right
    if isinstance(t, BAugTree):
        if t.tree.is_leaf:
            raise Indecomposable("a single leaf has no root split")
        p = t.tree.left.leaves
        q = t.tree.right.leaves
        return (p, q,
                BAugTree(t.tree.left, t.leaf_powers[:p]),
                BAugTree(t.tree.right, t.leaf_powers[p:]))
    if isinstance(t, RBAugTree):
        if t.tree.is_leaf:
            raise Indecomposable("a single leaf has no root split")
        p = t.tree.left.leaves
        q = t.tree.right.leaves
        nv_left = t.tree.left.vertices
        return (p, q, t.vertex_powers[0],
                RBAugTree(t.tree.left, t.leaf_powers[:p],
                          t.vertex_powers[1:1 + nv_left]),
                RBAugTree(t.tree.right, t.leaf_powers[p:],
                          t.vertex_powers[1 + nv_left:]))
    raise WrongAugmentation(f"cannot decompose {type(t).__name__}")


def tree_alpha(t: AugTree) -> AugTree:
    """Add 1 to the first component of every leaf power pair."""
    powers = tuple((a + 1, b) for a, b in t.leaf_powers)
    if isinstance(t, BAugTree):
        return BAugTree(t.tree, powers)
    return RBAugTree(t.tree, powers, t.vertex_powers)


def tree_beta(t: AugTree) -> AugTree:
    """Add 1 to the second component of every leaf power pair."""
    powers = tuple((a, b + 1) for a, b in t.leaf_powers)
    if isinstance(t, BAugTree):
        return BAugTree(t.tree, powers)
    return RBAugTree(t.tree, powers, t.vertex_powers)


def tree_R(t: RBAugTree) -> RBAugTree:
    """Add 1 to the root vertex power (the sole leaf counts as the root on a
    1-tree)."""
    if not isinstance(t, RBAugTree):
        raise WrongAugmentation("tree_R needs an RB-augmented tree")
    vp = (t.vertex_powers[0] + 1,) + t.vertex_powers[1:]
    return RBAugTree(t.tree, t.leaf_powers, vp)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def serialize_tree(t) -> str:
    """`L[a1,a2;f]` per leaf, `( .. .. ){f}` per node; B-augmented trees omit
    the `;f` / `{f}` parts; plain trees are `L` and `( .. .. )`."""
    if isinstance(t, PlanarBinaryTree):
        if t.is_leaf:
            return "L"
        return f"({serialize_tree(t.left)} {serialize_tree(t.right)})"
    if isinstance(t, BAugTree):
        parts, _ = _ser_b(t.tree, t.leaf_powers, 0)
        return parts
    if isinstance(t, RBAugTree):
        parts, _, _ = _ser_rb(t.tree, t.leaf_powers, t.vertex_powers, 0, 0)
        return parts
    raise WrongAugmentation(f"cannot serialize {type(t).__name__}")


def _ser_b(node, powers, i):
    if node.is_leaf:
        a, b = powers[i]
        return f"L[{a},{b}]", i + 1
    left, i = _ser_b(node.left, powers, i)
    right, i = _ser_b(node.right, powers, i)
    return f"({left} {right})", i


def _ser_rb(node, powers, vps, i, v):
    f = vps[v]
    if node.is_leaf:
        a, b = powers[i]
        return f"L[{a},{b};{f}]", i + 1, v + 1
    left, i, v2 = _ser_rb(node.left, powers, vps, i, v + 1)
    right, i, v3 = _ser_rb(node.right, powers, vps, i, v2)
    return f"({left} {right}){{{f}}}", i, v3


class _TreeParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ValueError(f"tree syntax error at {self.pos}: {msg}")

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch):
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def node(self):
        """Returns (tree, leaf_powers list, vertex_powers list or None)."""
        self.skip_ws()
        if self.pos >= len(self.text):
            self.error("unexpected end of input")
        if self.text[self.pos] == "L":
            self.pos += 1
            if self.pos < len(self.text) and self.text[self.pos] == "[":
                self.pos += 1
                a = self.integer()
                self.expect(",")
                b = self.integer()
                f = None
                if self.pos < len(self.text) and self.text[self.pos] == ";":
                    self.pos += 1
                    f = self.integer()
                self.expect("]")
                return LEAF, [(a, b)], None if f is None else [f]
            return LEAF, [(0, 0)], None
        if self.text[self.pos] == "(":
            self.pos += 1
            lt, lp, lv = self.node()
            rt, rp, rv = self.node()
            self.skip_ws()
            self.expect(")")
            tree = PlanarBinaryTree(lt, rt)
            f = None
            if self.pos < len(self.text) and self.text[self.pos] == "{":
                self.pos += 1
                f = self.integer()
                self.expect("}")
            if (lv is None) != (rv is None) or (f is None) != (lv is None):
                self.error("mixed augmentation kinds")
            vp = None if f is None else [f] + lv + rv
            return tree, lp + rp, vp
        self.error("expected 'L' or '('")


def parse_tree(text: str):
    """Inverse of serialize_tree.  A bare shape (no brackets anywhere) parses
    as a B-augmented tree with zero powers unless it is plain `L`/`( )` with
    no decorations at all, in which case the B-augmented reading still
    applies; use .tree for the undecorated shape."""
    parser = _TreeParser(text)
    tree, lp, vp = parser.node()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error("trailing garbage")
    if vp is None:
        return BAugTree(tree, tuple(lp))
    return RBAugTree(tree, tuple(lp), tuple(vp))


# ---------------------------------------------------------------------------
# Free elements
# ---------------------------------------------------------------------------

@dataclass
class FreeElement:
    """A finite linear combination of generators (tree, leaf word), with the
    leaf word drawn from a finite basis 0..rank-1 of the generating module.
    Keys are canonical serializations so the term order is reproducible."""

    field: FieldSpec
    rank: int
    terms: dict  # key -> (RBAugTree, word tuple, Scalar coefficient)

    @staticmethod
    def zero(field: FieldSpec, rank: int) -> "FreeElement":
        return FreeElement(field, rank, {})

    @staticmethod
    def generator(field: FieldSpec, rank: int, tree: RBAugTree,
                  word: tuple[int, ...], coeff: Scalar | None = None) -> "FreeElement":
        if len(word) != tree.leaves:
            raise ValueError("leaf word length must equal the leaf count")
        if any(not 0 <= w < rank for w in word):
            raise ValueError("leaf word letter outside the basis range")
        c = field.one() if coeff is None else coeff
        x = FreeElement.zero(field, rank)
        x._accumulate(tree, word, c)
        return x

    @staticmethod
    def term_key(tree: RBAugTree, word: tuple[int, ...]) -> str:
        return serialize_tree(tree) + "|" + ",".join(map(str, word))

    def _accumulate(self, tree, word, coeff):
        key = FreeElement.term_key(tree, word)
        if key in self.terms:
            _, _, old = self.terms[key]
            coeff = old + coeff
        if coeff.is_zero():
            self.terms.pop(key, None)
        else:
            self.terms[key] = (tree, word, coeff)

    def copy(self) -> "FreeElement":
        return FreeElement(self.field, self.rank, dict(self.terms))

    def __add__(self, other: "FreeElement") -> "FreeElement":
        out = self.copy()
        for tree, word, c in other.terms.values():
            out._accumulate(tree, word, c)
        return out

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        return self + other.scale(-self.field.one())

    def scale(self, c: Scalar) -> "FreeElement":
        out = FreeElement.zero(self.field, self.rank)
        if c.is_zero():
            return out
        for tree, word, coeff in self.terms.values():
            out._accumulate(tree, word, c * coeff)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeElement):
            return NotImplemented
        return (self - other).is_zero()

    def map_terms(self, fn) -> "FreeElement":
        """Apply a tree map to every basis term, keeping words and coefficients."""
        out = FreeElement.zero(self.field, self.rank)
        for tree, word, coeff in self.terms.values():
            out._accumulate(fn(tree), word, coeff)
        return out


def free_multiply(x: FreeElement, y: FreeElement) -> FreeElement:
    """Bilinear extension of grafting on generators."""
    if x.field != y.field or x.rank != y.rank:
        raise ValueError("free elements live over different bases")
    out = FreeElement.zero(x.field, x.rank)
    for t1, w1, c1 in x.terms.values():
        for t2, w2, c2 in y.terms.values():
            out._accumulate(graft(t1, t2), w1 + w2, c1 * c2)
    return out


def free_alpha(x: FreeElement) -> FreeElement:
    return x.map_terms(tree_alpha)


def free_beta(x: FreeElement) -> FreeElement:
    return x.map_terms(tree_beta)


def free_R(x: FreeElement) -> FreeElement:
    return x.map_terms(tree_R)


# ---------------------------------------------------------------------------
# Tree action on a concrete algebra
# ---------------------------------------------------------------------------

def action_eval(t, elements: list[Vector], A, R=None) -> Vector:
    """Evaluate an augmented tree on a tuple of algebra elements: each leaf i
    contributes alpha^{a_i1} beta^{a_i2} R^{f_i}(x_i), each internal vertex v
    applies R^{f(v)} to the product of its children, and grafting multiplies
    through mu."""
    is_rb = isinstance(t, RBAugTree)
    if not is_rb and not isinstance(t, BAugTree):
        raise WrongAugmentation("action_eval needs an augmented tree")
    if is_rb and R is None:
        raise ValueError("an RB-augmented tree needs a Rota-Baxter operator")
    if not is_rb and R is not None:
        raise ValueError("a B-augmented tree takes no Rota-Baxter operator")
    if len(elements) != t.leaves:
        raise ValueError("element count must equal the leaf count")
    rmap = None if R is None else R.map
    vps = t.vertex_powers if is_rb else (0,) * t.tree.vertices
    value, i, v = _act(t.tree, t.leaf_powers, vps, elements, A, rmap, 0, 0)
    return value


def _act(node, powers, vps, elements, A, rmap, i, v):
    f = vps[v]
    if node.is_leaf:
        a, b = powers[i]
        x = A.alpha.power(a).apply(elements[i])
        x = A.beta.power(b).apply(x)
        if f:
            x = rmap.power(f).apply(x)
        return x, i + 1, v + 1
    lx, i, v2 = _act(node.left, powers, vps, elements, A, rmap, i, v + 1)
    rx, i, v3 = _act(node.right, powers, vps, elements, A, rmap, i, v2)
    x = apply_bilinear(A.mu, lx, rx)
    if f:
        x = rmap.power(f).apply(x)
    return x, i, v3


# ---------------------------------------------------------------------------
# Truncated reduction modulo the associativity ideal
# ---------------------------------------------------------------------------

def _fits(tree: RBAugTree, word, bounds) -> bool:
    if tree.leaves > bounds["max_leaves"]:
        return False
    if any(a > bounds["max_ab_power"] or b > bounds["max_ab_power"]
           for a, b in tree.leaf_powers):
        return False
    return all(f <= bounds["max_r_power"] for f in tree.vertex_powers)


def _element_fits(x: FreeElement, bounds) -> bool:
    return all(_fits(tree, word, bounds) for tree, word, _ in x.terms.values())


def _bounded_generators(field, rank, n, bounds):
    """All single-term free elements with exactly n leaves inside the window."""
    out = []
    max_ab = bounds["max_ab_power"]
    max_r = bounds["max_r_power"]
    for shape in enumerate_trees(n):
        nv = shape.vertices
        for lp in _tuples_of_pairs(n, max_ab):
            for vp in _power_tuples(nv, max_r):
                tree = RBAugTree(shape, lp, vp)
                for word in _words(n, rank):
                    out.append(FreeElement.generator(field, rank, tree, word))
    return out


def _tuples_of_pairs(n, max_ab):
    pairs = [(a, b) for a in range(max_ab + 1) for b in range(max_ab + 1)]
    return _product(pairs, n)


def _power_tuples(n, max_r):
    return _product(list(range(max_r + 1)), n)


def _words(n, rank):
    return _product(list(range(rank)), n)


def _product(items, n):
    if n == 0:
        return [()]
    rest = _product(items, n - 1)
    return [(item,) + tail for item in items for tail in rest]


class _Eliminator:
    """Incremental exact Gaussian elimination over FreeElement supports.

    Pivots are keyed by the lexicographically smallest term key present in
    the (already reduced) row, which makes reduction canonical."""

    def __init__(self):
        self.pivots = {}  # key -> FreeElement with coefficient 1 on key

    def reduce(self, x: FreeElement) -> FreeElement:
        x = x.copy()
        changed = True
        while changed:
            changed = False
            for key in sorted(x.terms):
                if key in self.pivots:
                    _, _, c = x.terms[key]
                    x = x - self.pivots[key].scale(c)
                    changed = True
                    break
        return x

    def insert(self, x: FreeElement) -> bool:
        x = self.reduce(x)
        if x.is_zero():
            return False
        key = min(x.terms)
        _, _, c = x.terms[key]
        self.pivots[key] = x.scale(c.inverse())
        return True


class TruncatedIdealReducer:
    """Precomputed reduction basis for the associativity ideal inside a fixed
    truncation window; build once, reduce many elements.

    The ideal is generated by mu(mu(t1,t2), beta(t3)) - mu(alpha(t1),
    mu(t2,t3)) and closed under the two tree maps and grafting on either
    side, all restricted to the window.  This is a TRUNCATED computation:
    reducing to zero is evidence of ideal membership within the window, not
    a proof of membership in the full ideal.
    """

    def __init__(self, field: FieldSpec, rank: int, bounds: dict):
        for name in ("max_leaves", "max_ab_power", "max_r_power"):
            if name not in bounds:
                raise ValueError(f"missing bound {name!r}")
        self.bounds = dict(bounds)
        self.field = field
        self.rank = rank
        max_leaves = bounds["max_leaves"]
        by_leaves = {n: _bounded_generators(field, rank, n, bounds)
                     for n in range(1, max_leaves + 1)}
        seeds = []
        for n1 in range(1, max_leaves - 1):
            for n2 in range(1, max_leaves - n1):
                for n3 in range(1, max_leaves - n1 - n2 + 1):
                    for t1 in by_leaves[n1]:
                        at1 = free_alpha(t1)
                        for t2 in by_leaves[n2]:
                            left = free_multiply(t1, t2)
                            for t3 in by_leaves[n3]:
                                g = free_multiply(left, free_beta(t3)) \
                                    - free_multiply(at1, free_multiply(t2, t3))
                                if not g.is_zero() and _element_fits(g, bounds):
                                    seeds.append(g)
        elim = _Eliminator()
        queue = seeds
        while queue:
            g = queue.pop()
            if not elim.insert(g):
                continue
            for h in (free_alpha(g), free_beta(g)):
                if _element_fits(h, bounds):
                    queue.append(h)
            g_leaves = min(tree.leaves for tree, _, _ in g.terms.values())
            for n in range(1, max_leaves - g_leaves + 1):
                for other in by_leaves[n]:
                    for h in (free_multiply(g, other), free_multiply(other, g)):
                        if _element_fits(h, bounds):
                            queue.append(h)
        self._elim = elim

    def reduce(self, x: FreeElement) -> FreeElement:
        if not _element_fits(x, self.bounds):
            raise BoundsExceeded("element does not fit within the stated bounds")
        return self._elim.reduce(x)


def truncated_ideal_reduce(x: FreeElement, bounds: dict) -> FreeElement:
    """One-shot reduction of x within bounds (keys: max_leaves, max_ab_power,
    max_r_power); see TruncatedIdealReducer for the amortized form."""
    return TruncatedIdealReducer(x.field, x.rank, bounds).reduce(x)
