from typing import Optional

from ..utils import verify_summand_counts
from ..utils.group_util import format_group


def verify_getter(max_order: int, cap: Optional[int] = None, show_classes: bool = False) -> dict:
    """
    Sweep every finite abelian group of order <= max_order and compare the
    closed-form summand count with the oracle.

    Args:
        max_order(int): largest group order.
        cap(int): oracle cap override.
        show_classes(bool): include the summand classes the oracle found.

    Returns:
        Dictionary with per-group rows (sorted by order, then canonical form)
        and the ``checked``/``passed``/``failed`` totals.
    """
    rows = []
    for record in verify_summand_counts(max_order, cap=cap):
        row = {
            'group': format_group(record.group),
            'order': record.group.order(),
            'formula': record.formula,
            'oracle': record.oracle,
            'pass': record.passed,
        }
        if show_classes:
            row['classes'] = [format_group(c) for c in record.classes]
        rows.append(row)
    passed = sum(1 for r in rows if r['pass'])
    return {
        'max_order': max_order,
        'checked': len(rows),
        'passed': passed,
        'failed': len(rows) - passed,
        'all_pass': passed == len(rows),
        'groups': rows,
    }
