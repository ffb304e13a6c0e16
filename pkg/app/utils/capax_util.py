"""Serves as the utility module behind the command layer: every method takes
text as the user typed it, parses it and runs one computation."""
from typing import Dict, List, Optional

from ..core.errors import CapaxError, ResourceLimitError
from ..core.oracle_config import OracleConfig
from ..models.group_models import AbelianGroup
from ..models.space_models import CapacityResult, NormalForm, SpaceExpr
from ..models.summand_models import IdempotentReport, SummandCount, VerifyRecord
from .group_util import abelian_groups_up_to, format_group, group_from_presentation, parse_group, parse_presentation
from .idempotent_util import bound_report
from .log_util import setup_logger
from .space_parser import parse
from .space_util import capacity, dominated_types, homology, homotopy_group, moore_pseudoprojective_form, normalize
from .summand_util import count_summands, oracle_summand_classes, summand_classes

logger = setup_logger()


class Capax(OracleConfig):

    def __init__(self):
        super().__init__()

    def _cap(self, cap: Optional[int]) -> int:
        return cap if cap is not None else self.oracle_cap

    def get_capacity(self, expression: str) -> CapacityResult:
        try:
            return capacity(parse(expression))
        except CapaxError as e:
            logger.error(msg=e)
            raise

    def get_normal_form(self, expression: str) -> NormalForm:
        try:
            return normalize(parse(expression))
        except CapaxError as e:
            logger.error(msg=e)
            raise

    def get_dominated_types(self, expression: str) -> List[SpaceExpr]:
        try:
            return dominated_types(parse(expression))
        except CapaxError as e:
            logger.error(msg=e)
            raise

    def get_homology(self, expression: str, max_degree: int) -> Dict[int, AbelianGroup]:
        "Reduced homology in degrees 1..max_degree."
        try:
            expr = parse(expression)
            return {i: homology(expr, i) for i in range(1, max_degree + 1)}
        except CapaxError as e:
            logger.error(msg=e)
            raise

    def get_homotopy(self, expression: str, max_degree: int) -> Dict[int, AbelianGroup]:
        try:
            expr = parse(expression)
            return {i: homotopy_group(expr, i) for i in range(1, max_degree + 1)}
        except CapaxError as e:
            logger.error(msg=e)
            raise

    def get_pseudoprojective_form(self, expression: str) -> SpaceExpr:
        try:
            return moore_pseudoprojective_form(parse(expression))
        except CapaxError as e:
            logger.error(msg=e)
            raise

    def get_group(self, literal: Optional[str] = None, presentation: Optional[str] = None) -> AbelianGroup:
        try:
            if presentation is not None:
                return group_from_presentation(parse_presentation(presentation))
            return parse_group(literal)
        except CapaxError as e:
            logger.error(msg=e)
            raise

    def get_summands(self, literal: str):
        """
        Summand count and, when it is finite, the summands themselves.

        Args:
            literal(str): group literal such as ``Z_2^2 + Z``.

        Returns:
            (group, SummandCount, list of summands or None)
        """
        try:
            g = parse_group(literal)
            count: SummandCount = count_summands(g)
            classes = summand_classes(g) if count.is_finite else None
            return g, count, classes
        except CapaxError as e:
            logger.error(msg=e)
            raise

    def get_oracle_classes(self, g: AbelianGroup, cap: Optional[int] = None) -> List[AbelianGroup]:
        try:
            return oracle_summand_classes(g, cap=self._cap(cap), sweep_limit=self.sweep_limit)
        except CapaxError as e:
            logger.error(msg=e)
            raise

    def get_idempotent_report(self, literal: str, cap: Optional[int] = None) -> IdempotentReport:
        try:
            return bound_report(parse_group(literal), cap=self._cap(cap))
        except CapaxError as e:
            logger.error(msg=e)
            raise

    def verify_up_to(self, max_order: int, cap: Optional[int] = None) -> List[VerifyRecord]:
        """
        Compares the closed-form summand count with the oracle for every finite
        abelian group of order <= max_order.

        Args:
            max_order(int): largest group order to sweep.
            cap(int): oracle cap; max_order may not exceed it.

        Returns:
            One record per group, sorted by order and then canonical form.
        """
        cap = self._cap(cap)
        try:
            if max_order > cap:
                raise ResourceLimitError(f'--max-order {max_order} is above the oracle cap {cap}')
            records = []
            for g in abelian_groups_up_to(max_order):
                classes = tuple(oracle_summand_classes(g, cap=cap, sweep_limit=self.sweep_limit))
                record = VerifyRecord(g, count_summands(g).value, len(classes), classes)
                if not record.passed:
                    logger.error(msg=f'{format_group(g)}: formula {record.formula}, oracle {record.oracle}')
                records.append(record)
            logger.info(f'verify: {len(records)} groups up to order {max_order}')
            return records
        except CapaxError as e:
            logger.error(msg=e)
            raise
