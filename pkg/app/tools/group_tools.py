from typing import Optional

from ..models.group_models import OMEGA
from ..utils import group_canonical, group_idempotents, group_oracle_classes, group_summands
from ..utils.group_util import format_group
from ..utils.idempotent_util import verify_witness
from .capacity_tools import capacity_json, cardinal_json


def summands_getter(literal: str, oracle: bool = False, cap: Optional[int] = None) -> dict:
    """
    Get the direct summands of a group up to isomorphism.

    Args:
        literal(str): group literal, e.g. ``Z_2^2 + Z``.
        oracle(bool): also run the brute-force oracle (finite groups only).
        cap(int): oracle cap override.

    Returns:
        Dictionary with ``count`` and ``classes`` (null when the count is
        infinite), plus ``oracle_count`` and ``oracle_classes`` when asked.
    """
    g, count, classes = group_summands(literal)
    payload = {
        'group': format_group(g),
        'count': cardinal_json(count.value),
        'classes': None if classes is None else [format_group(s) for s in classes],
    }
    if oracle:
        found = group_oracle_classes(g, cap=cap)
        payload['oracle_count'] = len(found)
        payload['oracle_classes'] = [format_group(s) for s in found]
    return payload


def group_getter(literal: Optional[str] = None, presentation: Optional[str] = None) -> dict:
    """
    Get the canonical form of a group given as a literal or as a JSON
    relation presentation.

    Returns:
        Dictionary with the canonical literal, free rank, invariant factors,
        elementary divisors and the order of a finite group.
    """
    g = group_canonical(literal=literal, presentation=presentation)
    return {
        'group': format_group(g),
        'free_rank': None if g.is_rationals else cardinal_json(g.free_rank),
        'invariant_factors': g.invariant_factors(),
        'elementary_divisors': g.elementary_divisors(),
        'order': g.order() if g.is_finite else None,
    }


def idempotents_getter(literal: str, cap: Optional[int] = None) -> dict:
    """
    Get the idempotent count of a group next to the capacity of K(G, 1).

    Args:
        literal(str): a finite group literal or ``Z^r``.
        cap(int): oracle cap override.

    Returns:
        Dictionary with ``count`` (``"inf"`` or an integer), ``em_capacity``,
        ``bound_holds`` and, for an infinite count, the verified ``witness``
        family.
    """
    report = group_idempotents(literal, cap=cap)
    witness = None
    if report.witness is not None:
        witness = {
            'rank': report.witness.rank,
            'pattern': report.witness.pattern,
            'verified': verify_witness(report.witness),
        }
    return {
        'group': format_group(report.group),
        'count': cardinal_json(report.idempotent_count),
        'em_capacity': capacity_json(report.capacity_of_em)['capacity'],
        'bound_holds': report.bound_holds,
        'witness': witness,
    }
