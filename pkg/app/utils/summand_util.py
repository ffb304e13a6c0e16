"""Direct summands of abelian groups: the closed-form count, the explicit
enumeration, and a brute-force oracle built on idempotent endomorphisms."""
from itertools import product
from math import prod
from typing import Iterator, List, Optional, Tuple

from ..core import oracle_params
from ..core.errors import InvariantViolationError, ResourceLimitError, UnsupportedError
from ..models.group_models import OMEGA, AbelianGroup, RelationPresentation
from ..models.summand_models import EndoMatrix, SummandCount
from .finite_group_util import FiniteAbelianGroup, finite_model
from .group_util import format_group, group_from_presentation, group_sort_key
from .log_util import setup_logger
from .snf_util import integer_kernel

logger = setup_logger()


def count_summands(g: AbelianGroup) -> SummandCount:
    """
    Number of direct summands up to isomorphism.

    Args:
        g: any supported group.

    Returns:
        prod(k_i + 1) over the primary components times (free_rank + 1);
        2 for Q; OMEGA when the free rank is infinite.
    """
    if g.is_rationals:
        return SummandCount(2)
    if g.free_rank is OMEGA:
        return SummandCount(OMEGA)
    return SummandCount(prod(m + 1 for _, m in g.torsion) * (g.free_rank + 1))


def enumerate_summands(g: AbelianGroup) -> List[AbelianGroup]:
    """All summands up to isomorphism, lexicographic in (t_1, ..., t_n, s)."""
    if not g.has_finite_data:
        raise UnsupportedError(f'cannot enumerate the summands of {format_group(g)}')
    components = [pp for pp, _ in g.torsion]
    ranges = [range(m + 1) for _, m in g.torsion] + [range(g.free_rank + 1)]
    summands = []
    for choice in product(*ranges):
        *ts, s = choice
        summands.append(AbelianGroup.fg(s, dict(zip(components, ts))))
    return summands


def complement_of(g: AbelianGroup, summand: AbelianGroup) -> AbelianGroup:
    """C with summand + C = g, for summands produced by enumerate_summands."""
    torsion = g.torsion_map
    for pp, m in summand.torsion:
        if torsion.get(pp, 0) < m:
            raise UnsupportedError(f'{format_group(summand)} is not a summand of {format_group(g)}')
        torsion[pp] -= m
    if summand.free_rank > g.free_rank:
        raise UnsupportedError(f'{format_group(summand)} is not a summand of {format_group(g)}')
    return AbelianGroup.fg(g.free_rank - summand.free_rank, torsion)


def image_of_endomorphism(g: AbelianGroup, m: EndoMatrix) -> AbelianGroup:
    """
    Canonical form of im(m), via SNF.

    With D = diag(d_i), x in Z^r is a relation among the column images exactly
    when m·x = D·y for some y, so the relation lattice is the projection of
    ker [m | -D] onto its first r coordinates.
    """
    if not g.is_finite:
        raise UnsupportedError('images are only computed for finite groups')
    orders = tuple(g.elementary_divisors())
    if m.orders != orders:
        raise InvariantViolationError(
            f'matrix is indexed by {list(m.orders)}, but {format_group(g)} has components {list(orders)}')
    # re-validate entries; raises InvariantViolationError on a malformed matrix
    EndoMatrix.of(m.orders, m.entries)
    r = len(orders)
    if r == 0:
        return AbelianGroup.trivial()
    combined = [list(m.entries[i]) + [-orders[i] if j == i else 0 for j in range(r)] for i in range(r)]
    kernel = integer_kernel(combined, ncols=2 * r)
    relations = [vec[:r] for vec in kernel]
    return group_from_presentation(RelationPresentation.of(r, relations))


def _classified_image(fg: FiniteAbelianGroup, m: EndoMatrix) -> AbelianGroup:
    by_snf = image_of_endomorphism(fg.group, m)
    by_elements = fg.classify(fg.image_mask(m))
    if by_snf != by_elements:
        raise InvariantViolationError(
            f'image classifiers disagree on {m.entries}: {format_group(by_snf)} vs {format_group(by_elements)}')
    return by_snf


def _check_oracle_input(g: AbelianGroup, cap: Optional[int]) -> int:
    cap = cap if cap is not None else oracle_params.oracle_cap
    if not g.is_finite:
        raise UnsupportedError(f'the oracle needs a finite group, got {format_group(g)}')
    if g.order() > cap:
        raise ResourceLimitError(f'{format_group(g)} has order {g.order()}, above the oracle cap {cap}')
    return cap


def idempotent_endomorphisms(fg: FiniteAbelianGroup) -> Iterator[EndoMatrix]:
    """Every EndoMatrix with f∘f = f, by the literal matrix sweep."""
    for m in fg.all_endomorphisms():
        if m.is_idempotent():
            yield m


def _sweep_classes(fg: FiniteAbelianGroup) -> set:
    classes = set()
    for m in idempotent_endomorphisms(fg):
        classes.add(_classified_image(fg, m))
    return classes


def _complement_search_classes(fg: FiniteAbelianGroup) -> set:
    candidates = {}
    for h in fg.subgroups:
        candidates.setdefault(fg.classify(h), []).append(h)
    classes = set()
    for cls, subgroups in candidates.items():
        for h in subgroups:
            k = next(fg.complements(h), None)
            if k is None:
                continue
            m = fg.projection(h, k)
            if not m.is_idempotent():
                raise InvariantViolationError(f'projection {m.entries} is not idempotent')
            if _classified_image(fg, m) != cls:
                raise InvariantViolationError(f'projection onto a {format_group(cls)} subgroup has another image')
            classes.add(cls)
            break
    return classes


def uses_matrix_sweep(fg: FiniteAbelianGroup, sweep_limit: Optional[int] = None) -> bool:
    limit = sweep_limit if sweep_limit is not None else oracle_params.sweep_limit
    return fg.endomorphism_ring_size() <= limit


def oracle_summand_classes(g: AbelianGroup, cap: Optional[int] = None,
                           sweep_limit: Optional[int] = None) -> List[AbelianGroup]:
    """Isomorphism classes of images of idempotent endomorphisms of a finite group."""
    _check_oracle_input(g, cap)
    fg = finite_model(g)
    if uses_matrix_sweep(fg, sweep_limit):
        logger.info(f'oracle {format_group(g)}: matrix sweep over {fg.endomorphism_ring_size()} endomorphisms')
        classes = _sweep_classes(fg)
    else:
        logger.info(f'oracle {format_group(g)}: complement search over {len(fg.subgroups)} subgroups')
        classes = _complement_search_classes(fg)
    return sorted(classes, key=group_sort_key)


def oracle_count_summands(g: AbelianGroup, cap: Optional[int] = None,
                          sweep_limit: Optional[int] = None) -> int:
    return len(oracle_summand_classes(g, cap=cap, sweep_limit=sweep_limit))


def count_idempotents_by_sweep(fg: FiniteAbelianGroup) -> int:
    return sum(1 for _ in idempotent_endomorphisms(fg))


def count_idempotents_by_complements(fg: FiniteAbelianGroup) -> int:
    # an idempotent is determined by its image H and kernel K, with G = H + K
    return sum(1 for h in fg.subgroups for _ in fg.complements(h))


def count_finite_idempotents(g: AbelianGroup, cap: Optional[int] = None,
                             sweep_limit: Optional[int] = None) -> Tuple[int, str]:
    """Raw number of idempotent endomorphisms of a finite group and the method used."""
    _check_oracle_input(g, cap)
    fg = finite_model(g)
    if uses_matrix_sweep(fg, sweep_limit):
        return count_idempotents_by_sweep(fg), 'matrix-sweep'
    return count_idempotents_by_complements(fg), 'complement-search'


def summand_classes(g: AbelianGroup) -> List[AbelianGroup]:
    """enumerate_summands, extended to Q, whose only summands are 0 and Q."""
    if g.is_rationals:
        return [AbelianGroup.trivial(), g]
    return enumerate_summands(g)
