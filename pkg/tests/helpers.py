from hypothesis import strategies as st
from sympy import Matrix

from app.models import (EM, OMEGA, AbelianGroup, Moore, Point, Product, PseudoProjective, Sphere, Suspension, Torus,
                        Wedge)
from app.utils.group_util import cyclic, direct_sum_all
from app.utils.snf_util import mat_mul

CYCLIC_ORDERS = [2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 25, 27]
Q = AbelianGroup.rationals()


def det(m) -> int:
    if not m:
        return 1
    return int(Matrix(m).det())


def is_diagonal(d) -> bool:
    return all(x == 0 for i, row in enumerate(d) for j, x in enumerate(row) if i != j)


def verify_snf(a, snf, ncols=None):
    """Asserts u·a·v = d, unimodular transforms and the divisibility chain."""
    n = len(a[0]) if a else (ncols or 0)
    ua = mat_mul(snf.u, a, ncols=n)
    uav = mat_mul(ua, snf.v, ncols=n)
    assert [list(r) for r in uav] == [list(r) for r in snf.d]
    assert abs(det(snf.u)) == 1
    assert abs(det(snf.v)) == 1
    assert is_diagonal(snf.d)
    diag = snf.diagonal
    assert all(x >= 0 for x in diag)
    nonzero = [x for x in diag if x]
    assert diag[:len(nonzero)] == nonzero, f'zeros must come last: {diag}'
    for x, y in zip(nonzero, nonzero[1:]):
        assert y % x == 0, f'divisibility chain broken: {diag}'


@st.composite
def matrices(draw, max_dim: int = 6, bound: int = 20):
    """(rows, ncols); either dimension may be zero."""
    m = draw(st.integers(0, max_dim))
    n = draw(st.integers(0, max_dim))
    row = st.lists(st.integers(-bound, bound), min_size=n, max_size=n)
    return draw(st.lists(row, min_size=m, max_size=m)), n


@st.composite
def presentations(draw, max_generators: int = 4, max_relations: int = 4, bound: int = 8):
    """(generators, relation rows)"""
    gens = draw(st.integers(1, max_generators))
    row = st.lists(st.integers(-bound, bound), min_size=gens, max_size=gens)
    return gens, draw(st.lists(row, max_size=max_relations))


@st.composite
def fg_groups(draw, max_terms: int = 3, max_rank: int = 2) -> AbelianGroup:
    orders = draw(st.lists(st.sampled_from(CYCLIC_ORDERS), max_size=max_terms))
    rank = draw(st.integers(0, max_rank))
    return direct_sum_all([cyclic(m) for m in orders] + [AbelianGroup.integers(rank)])


def groups():
    return st.one_of(fg_groups(), st.sampled_from([Q, AbelianGroup.integers(OMEGA)]))


def atoms():
    return st.one_of(
        st.just(Point()),
        st.builds(Sphere, st.integers(1, 6)),
        st.builds(Moore, groups(), st.integers(2, 6)),
        st.builds(EM, groups(), st.integers(1, 4)),
        st.builds(Torus, st.integers(1, 4)),
        st.builds(PseudoProjective, st.integers(0, 12)),
    )


def expressions(max_leaves: int = 10):
    """Any expression the grammar accepts; wedges and products have at least
    two children so the parser never collapses a node built here."""
    def extend(children):
        many = st.lists(children, min_size=2, max_size=3).map(tuple)
        return st.one_of(
            st.builds(Suspension, st.integers(1, 3), children),
            many.map(Wedge),
            many.map(Product),
        )

    return st.recursive(atoms(), extend, max_leaves=max_leaves)


def _assemble(children, combine):
    return children[0] if len(children) == 1 else combine(tuple(children))


@st.composite
def finite_capacity_expressions(draw):
    """Wedges of Moore spaces and spheres (n >= 2), products of EM spaces with
    circles and tori, or wedges of circles: the classified families with
    finite capacity. Q only appears in a degree of its own."""
    family = draw(st.sampled_from(['moore', 'em', 'circles']))
    if family == 'circles':
        k = draw(st.integers(1, 4))
        return _assemble([Sphere(1)] * k, Wedge)

    low = 1 if family == 'em' else 2
    q_degrees = draw(st.sets(st.integers(low, 5), max_size=1))
    children = [(Moore if family == 'moore' else EM)(Q, d) for d in q_degrees]
    others = st.integers(low, 5).filter(lambda d: d not in q_degrees)
    small = fg_groups(max_terms=1, max_rank=1)
    for _ in range(draw(st.integers(0 if children else 1, 3))):
        if family == 'moore':
            children.append(draw(st.one_of(
                st.builds(Sphere, others),
                st.builds(Moore, small, others))))
        elif 1 in q_degrees:
            children.append(draw(st.builds(EM, small, others)))
        else:
            children.append(draw(st.one_of(
                st.just(Sphere(1)),
                st.builds(Torus, st.integers(1, 3)),
                st.builds(EM, small, others))))
    children = draw(st.permutations(children))
    return _assemble(children, Wedge if family == 'moore' else Product)


def reordered(e, data):
    """The same expression with the children of every wedge and product
    permuted by draws from ``data``."""
    if isinstance(e, Suspension):
        return Suspension(e.times, reordered(e.inner, data))
    if isinstance(e, (Wedge, Product)):
        children = [reordered(c, data) for c in e.children]
        return type(e)(tuple(data.draw(st.permutations(children))))
    return e
