"""Idempotent endomorphisms and the homotopy-idempotent upper bound on capacity.

For K(G, 1), homotopy classes of self-maps correspond to endomorphisms of G,
so |hI(K(G,1))| is the number of idempotent endomorphisms of G.
"""
from typing import Iterable, Optional

from ..core.errors import UnsupportedError
from ..models.group_models import OMEGA, AbelianGroup, Cardinal
from ..models.space_models import EM
from ..models.summand_models import IdempotentReport, WitnessFamily
from .group_util import format_group
from .log_util import setup_logger
from .snf_util import mat_mul
from .space_util import capacity
from .summand_util import count_finite_idempotents

logger = setup_logger()


def witness_family(g: AbelianGroup) -> Optional[WitnessFamily]:
    """Infinite family of idempotents of End(Z^r), r >= 2."""
    if g.is_free and g.has_finite_data and g.free_rank >= 2:
        return WitnessFamily(g.free_rank)
    return None


def verify_witness(family: WitnessFamily, ns: Iterable[int] = range(-10, 11)) -> bool:
    for n in ns:
        f = family.member(n)
        if mat_mul(f, f) != f:
            logger.error(msg=f'witness member n={n} is not idempotent')
            return False
    return True


def count_idempotent_endos(g: AbelianGroup, cap: Optional[int] = None,
                           sweep_limit: Optional[int] = None) -> Cardinal:
    """
    Number of endomorphisms f of g with f∘f = f.

    Args:
        g: a finite group (order within the oracle cap) or a free group Z^r.

    Returns:
        The exact count, or OMEGA for Z^r with r >= 2.
    """
    if g.is_finite:
        count, method = count_finite_idempotents(g, cap=cap, sweep_limit=sweep_limit)
        logger.info(f'{format_group(g)}: {count} idempotents by {method}')
        return count
    if g.is_free and g.has_finite_data:
        # over Z, a^2 = a forces a in {0, 1}
        return 2 if g.free_rank == 1 else OMEGA
    raise UnsupportedError(f'idempotent count of {format_group(g)} is not supported '
                           '(only finite groups and Z^r)')


def bound_report(g: AbelianGroup, cap: Optional[int] = None) -> IdempotentReport:
    count = count_idempotent_endos(g, cap=cap)
    em_capacity = capacity(EM(g, 1))
    witness = witness_family(g) if count is OMEGA else None
    bound_holds = None
    if count is not OMEGA and em_capacity.is_finite:
        bound_holds = em_capacity.value <= count
    return IdempotentReport(
        group=g,
        idempotent_count=count,
        capacity_of_em=em_capacity,
        witness=witness,
        bound_holds=bound_holds,
    )
