"""Evaluation of space expressions.

Normalization works on an intermediate shape: either a wedge of Moore-like
pieces keyed by homology degree ("cells", where degree 1 holds circles and
unsuspended pseudo-projective planes) or a product of Eilenberg-MacLane spaces
keyed by homotopy degree ("em"). Same-degree pieces are merged by direct sum,
which leaves distinct degrees for the product formulas.
"""
from dataclasses import dataclass, field
from itertools import product
from math import prod
from typing import Dict, List, Optional

from ..core.errors import DomainError, UnsupportedError
from ..models.group_models import OMEGA, AbelianGroup
from ..models.space_models import (EM, CapacityResult, Moore, NormalForm, NormalFormKind, Point, Product,
                                   PseudoProjective, SpaceExpr, Sphere, Suspension, Torus, UnknownReason, Wedge)
from .group_util import cyclic, direct_sum, format_group, is_hopfian
from .log_util import setup_logger
from .space_parser import format_space
from .summand_util import count_summands, summand_classes

logger = setup_logger()

CELLS, EMS = 'cells', 'em'
Z = AbelianGroup.integers()


@dataclass
class _Shape:
    kind: str = CELLS
    degrees: Dict[int, AbelianGroup] = field(default_factory=dict)
    bad: Optional[NormalForm] = None

    @classmethod
    def at(cls, kind: str, degree: int, group: AbelianGroup) -> '_Shape':
        return cls(kind, {} if group.is_trivial else {degree: group})

    @classmethod
    def unclassified(cls, reason: UnknownReason, detail: str) -> '_Shape':
        return cls(bad=NormalForm.unclassified(reason, detail))

    @property
    def is_point(self) -> bool:
        return self.bad is None and not self.degrees

    @property
    def is_circle(self) -> bool:
        return self.kind == CELLS and self.degrees == {1: Z}


def _merge(kind: str, shapes: List[_Shape]) -> _Shape:
    merged: Dict[int, AbelianGroup] = {}
    clashes = set()
    for s in shapes:
        for degree, group in s.degrees.items():
            try:
                merged[degree] = direct_sum(merged.get(degree, AbelianGroup.trivial()), group)
            except UnsupportedError:
                clashes.add(degree)
    if clashes:
        degrees = ', '.join(str(d) for d in sorted(clashes))
        return _Shape.unclassified(UnknownReason.Q_SUM, f'same-degree sum involving Q in degree {degrees}')
    return _Shape(kind, merged)


def _worst(shapes: List[_Shape]) -> Optional[_Shape]:
    """The unclassified child that decides the result: earliest reason in
    UnknownReason order, then smallest detail."""
    bad = [s.bad for s in shapes if s.bad is not None]
    if not bad:
        return None
    precedence = list(UnknownReason)
    return _Shape(bad=min(bad, key=lambda nf: (precedence.index(nf.reason), nf.detail)))


def _shape(e: SpaceExpr) -> _Shape:
    if isinstance(e, Point):
        return _Shape()
    if isinstance(e, Sphere):
        return _Shape.at(CELLS, e.n, Z)
    if isinstance(e, Moore):
        return _Shape.at(CELLS, e.n, e.group)
    if isinstance(e, EM):
        if e.n == 1 and e.group == Z:
            return _Shape.at(CELLS, 1, Z)
        return _Shape.at(EMS, e.n, e.group)
    if isinstance(e, Torus):
        if e.k == 1:
            return _Shape.at(CELLS, 1, Z)
        return _Shape.at(EMS, 1, AbelianGroup.integers(e.k))
    if isinstance(e, PseudoProjective):
        # P_0 is the circle, P_1 the disk
        return _Shape.at(CELLS, 1, cyclic(e.q))
    if isinstance(e, Suspension):
        inner = _shape(e.inner)
        if inner.bad is not None:
            return inner
        if inner.kind == EMS and inner.degrees:
            return _Shape.unclassified(UnknownReason.UNSUPPORTED_MIX,
                                       'suspension of an Eilenberg-MacLane space other than S^1')
        return _Shape(CELLS, {d + e.times: g for d, g in inner.degrees.items()})
    if isinstance(e, Wedge):
        shapes = [_shape(c) for c in e.children]
        worst = _worst(shapes)
        if worst is not None:
            return worst
        shapes = [s for s in shapes if not s.is_point]
        if len(shapes) == 1:
            return shapes[0]
        if any(s.kind == EMS for s in shapes):
            return _Shape.unclassified(UnknownReason.UNSUPPORTED_MIX,
                                       'wedge involving Eilenberg-MacLane spaces other than S^1')
        return _merge(CELLS, shapes)
    if isinstance(e, Product):
        shapes = [_shape(c) for c in e.children]
        worst = _worst(shapes)
        if worst is not None:
            return worst
        shapes = [s for s in shapes if not s.is_point]
        if len(shapes) == 1:
            return shapes[0]
        factors = []
        for s in shapes:
            if s.kind == CELLS and not s.is_circle:
                return _Shape.unclassified(UnknownReason.UNSUPPORTED_MIX,
                                           'product involving Moore spaces or wedges of circles')
            factors.append(_Shape(EMS, s.degrees))
        return _merge(EMS, factors)
    raise TypeError(f'not a space expression: {e!r}')


def _to_normal_form(s: _Shape) -> NormalForm:
    if s.bad is not None:
        return s.bad
    if not s.degrees:
        return NormalForm.point()
    groups = tuple(sorted(s.degrees.items()))
    if s.kind == EMS:
        return NormalForm(NormalFormKind.EM_PRODUCT, groups)
    degree_one = s.degrees.get(1)
    if degree_one is None:
        return NormalForm(NormalFormKind.MOORE_WEDGE, groups)
    if not (degree_one.is_free and degree_one.has_finite_data):
        return NormalForm.unclassified(UnknownReason.UNSUPPORTED_MIX,
                                       'unsuspended pseudo-projective plane P_q (q >= 2) is neither a Moore '
                                       'nor an Eilenberg-MacLane space')
    if len(s.degrees) > 1:
        return NormalForm.unclassified(UnknownReason.OPEN_PROBLEM,
                                       'S^1 wedged with higher Moore spaces: finiteness of the capacity of '
                                       'S^1 v S^2 is an open problem')
    return NormalForm(NormalFormKind.EM_PRODUCT, groups, circle_wedge=degree_one.free_rank >= 2)


def normalize(e: SpaceExpr) -> NormalForm:
    return _to_normal_form(_shape(e))


def capacity(e: SpaceExpr) -> CapacityResult:
    """
    Exact capacity of a space expression.

    Args:
        e: parsed space expression.

    Returns:
        Finite(n), Infinite, or Unknown(reason) when the expression falls
        outside the classified families.
    """
    nf = normalize(e)
    if nf.kind is NormalFormKind.POINT:
        return CapacityResult.finite(1)
    if nf.kind is NormalFormKind.UNCLASSIFIED:
        return CapacityResult.unknown(nf.reason, nf.detail)
    groups = [g for _, g in nf.groups]
    if len(groups) > 1 and not all(is_hopfian(g) for g in groups):
        return CapacityResult.unknown(UnknownReason.NON_HOPFIAN,
                                      'the product rule needs Hopfian groups in every degree')
    counts = [count_summands(g).value for g in groups]
    if any(c is OMEGA for c in counts):
        return CapacityResult.infinite()
    return CapacityResult.finite(prod(counts))


def _moore_atoms(degree: int, g: AbelianGroup) -> List[SpaceExpr]:
    if g.is_trivial:
        return []
    if g.is_free and g.has_finite_data:
        return [Sphere(degree)] * g.free_rank
    return [Moore(g, degree)]


def _em_atom(degree: int, g: AbelianGroup) -> List[SpaceExpr]:
    if g.is_trivial:
        return []
    if degree == 1 and g.is_free and g.has_finite_data:
        return [Sphere(1) if g.free_rank == 1 else Torus(g.free_rank)]
    return [EM(g, degree)]


def _assemble(atoms: List[SpaceExpr], combine) -> SpaceExpr:
    if not atoms:
        return Point()
    if len(atoms) == 1:
        return atoms[0]
    return combine(tuple(atoms))


def materialize(nf: NormalForm) -> SpaceExpr:
    """A canonical expression with the given normal form."""
    if nf.kind is NormalFormKind.POINT:
        return Point()
    if nf.kind is NormalFormKind.MOORE_WEDGE:
        return _assemble([a for d, g in nf.groups for a in _moore_atoms(d, g)], Wedge)
    if nf.kind is NormalFormKind.EM_PRODUCT:
        if nf.circle_wedge:
            return _assemble([Sphere(1)] * nf.group_at(1).free_rank, Wedge)
        return _assemble([a for d, g in nf.groups for a in _em_atom(d, g)], Product)
    raise UnsupportedError(f'cannot materialize an unclassified space ({nf.reason})')


def dominated_types(e: SpaceExpr) -> List[SpaceExpr]:
    """Homotopy types dominated by e, one per choice of a summand in every degree."""
    cap = capacity(e)
    if not cap.is_finite:
        raise UnsupportedError(f'dominated types need a finite capacity, got {cap}')
    nf = normalize(e)
    if nf.kind is NormalFormKind.POINT:
        return [Point()]
    degrees = [d for d, _ in nf.groups]
    options = [summand_classes(g) for _, g in nf.groups]
    types = []
    # highest degree varies slowest
    for combo in product(*reversed(options)):
        chosen = tuple((d, g) for d, g in zip(degrees, reversed(combo)) if not g.is_trivial)
        if not chosen:
            types.append(Point())
            continue
        circle_wedge = nf.circle_wedge and chosen[0][1].free_rank >= 2
        types.append(materialize(NormalForm(nf.kind, chosen, circle_wedge=circle_wedge)))
    logger.debug(f'{format_space(e)}: {len(types)} dominated types')
    return types


def _is_circle_wedge(nf: NormalForm) -> bool:
    if nf.kind is not NormalFormKind.EM_PRODUCT or len(nf.groups) != 1:
        return False
    degree, g = nf.groups[0]
    return degree == 1 and g.is_free and (nf.circle_wedge or g.free_rank == 1)


def homology(e: SpaceExpr, i: int) -> AbelianGroup:
    """Reduced integral homology in degree i >= 1."""
    if i < 1:
        raise DomainError(f'homology degree must be >= 1, got {i}')
    nf = normalize(e)
    if nf.kind is NormalFormKind.POINT:
        return AbelianGroup.trivial()
    if nf.kind is NormalFormKind.MOORE_WEDGE or _is_circle_wedge(nf):
        return nf.group_at(i)
    if nf.kind is NormalFormKind.EM_PRODUCT:
        raise UnsupportedError('homology of Eilenberg-MacLane spaces is not computed')
    raise UnsupportedError(f'homology of an unclassified space ({nf.reason}) is not computed')


def homotopy_group(e: SpaceExpr, i: int) -> AbelianGroup:
    """i-th homotopy group, i >= 1, of a product of Eilenberg-MacLane spaces."""
    if i < 1:
        raise DomainError(f'homotopy degree must be >= 1, got {i}')
    nf = normalize(e)
    if nf.kind is NormalFormKind.POINT:
        return AbelianGroup.trivial()
    if nf.kind is NormalFormKind.EM_PRODUCT:
        if nf.circle_wedge:
            raise UnsupportedError('the fundamental group of a wedge of circles is free non-abelian')
        return nf.group_at(i)
    if nf.kind is NormalFormKind.MOORE_WEDGE:
        raise UnsupportedError('higher homotopy groups of Moore spaces are not computed')
    raise UnsupportedError(f'homotopy of an unclassified space ({nf.reason}) is not computed')


def moore_pseudoprojective_form(m: SpaceExpr) -> SpaceExpr:
    """M(A, n) as the (n-1)-fold suspension of a wedge of pseudo-projective
    planes, one P_q per primary cyclic factor and one P_0 per free generator."""
    if isinstance(m, Sphere) and m.n >= 2:
        m = Moore(Z, m.n)
    if not isinstance(m, Moore):
        raise DomainError(f'{format_space(m)} is not a Moore atom')
    g = m.group
    if not g.has_finite_data:
        raise UnsupportedError(f'{format_group(g)} has no finite cyclic decomposition')
    if g.is_trivial:
        return Point()
    planes = [PseudoProjective(pp.value) for pp, mult in g.torsion for _ in range(mult)]
    planes += [PseudoProjective(0)] * g.free_rank
    inner = planes[0] if len(planes) == 1 else Wedge(tuple(planes))
    return Suspension(m.n - 1, inner)
