from typing import Dict

from ..models.group_models import OMEGA, AbelianGroup, Cardinal
from ..models.space_models import CapacityKind, CapacityResult, NormalForm
from ..utils import (space_capacity, space_dominated_types, space_homology, space_homotopy, space_normal_form,
                     space_pseudoprojective_form)
from ..utils.group_util import format_group
from ..utils.space_parser import format_space


def cardinal_json(value: Cardinal):
    return 'inf' if value is OMEGA else value


def capacity_json(result: CapacityResult) -> dict:
    return {
        'capacity': 'inf' if result.kind is CapacityKind.INFINITE else result.value,
        'kind': result.kind.value,
        'reason': str(result.reason) if result.reason else None,
        'detail': result.detail or None,
    }


def _degree_table(groups: Dict[int, AbelianGroup]) -> Dict[str, str]:
    return {str(i): format_group(g) for i, g in sorted(groups.items())}


def capacity_getter(expression: str) -> dict:
    """
    Get the capacity of a space expression.

    Args:
        expression(str): space expression, e.g. ``M(Z_2^2 + Z_3 + Z^2, 4)``.

    Returns:
        Dictionary with ``capacity`` (an integer, ``"inf"`` or null for an
        unknown answer), ``kind`` and ``reason``.
    """
    return capacity_json(space_capacity(expression))


def normal_form_getter(expression: str) -> dict:
    """
    Get the normal form a space expression reduces to.

    Returns:
        Dictionary with ``kind``, the ``degrees`` map (degree -> group literal),
        ``reason`` for unclassified expressions and the ``circle_wedge`` flag.
    """
    nf: NormalForm = space_normal_form(expression)
    return {
        'kind': nf.kind.value,
        'degrees': _degree_table(nf.degree_map),
        'reason': str(nf.reason) if nf.reason else None,
        'detail': nf.detail or None,
        'circle_wedge': nf.circle_wedge,
    }


def dominated_getter(expression: str) -> dict:
    types = space_dominated_types(expression)
    return {'count': len(types), 'types': [format_space(t) for t in types]}


def homology_getter(expression: str, max_degree: int) -> dict:
    """
    Get the reduced integral homology table.

    Args:
        expression(str): space expression.
        max_degree(int): last degree of the table.

    Returns:
        Dictionary mapping each degree 1..max_degree to a group literal.
    """
    return {'max_degree': max_degree, 'groups': _degree_table(space_homology(expression, max_degree))}


def homotopy_getter(expression: str, max_degree: int) -> dict:
    return {'max_degree': max_degree, 'groups': _degree_table(space_homotopy(expression, max_degree))}


def pp_form_getter(expression: str) -> dict:
    "Moore atom as a suspended wedge of pseudo-projective planes."
    form = space_pseudoprojective_form(expression)
    return {'form': format_space(form)}
