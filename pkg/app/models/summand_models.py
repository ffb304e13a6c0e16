"""Summand counts, endomorphism matrices of finite abelian groups and the
idempotent bound report."""
from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Sequence, Tuple

from ..core.errors import InvariantViolationError
from .group_models import OMEGA, AbelianGroup, Cardinal
from .space_models import CapacityResult


@dataclass(frozen=True)
class SummandCount:
    value: Cardinal

    def __post_init__(self):
        if self.value is not OMEGA and (not isinstance(self.value, int) or self.value < 1):
            raise ValueError(f'summand count must be >= 1 or OMEGA, got {self.value!r}')

    @property
    def is_finite(self) -> bool:
        return self.value is not OMEGA

    def __str__(self):
        return str(self.value)


def entry_step(orders: Sequence[int], i: int, j: int) -> int:
    """Entry (i, j) must be a multiple of this to define Z_{d_j} -> Z_{d_i}."""
    return orders[i] // gcd(orders[i], orders[j])


@dataclass(frozen=True)
class EndoMatrix:
    """Endomorphism of Z_{d_1} + ... + Z_{d_r}; column j is the image of the j-th generator."""
    orders: Tuple[int, ...]
    entries: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, orders: Sequence[int], entries: Sequence[Sequence[int]]) -> 'EndoMatrix':
        """Reduces entries row-wise modulo d_i and checks the homomorphism condition."""
        orders = tuple(int(d) for d in orders)
        r = len(orders)
        if len(entries) != r or any(len(row) != r for row in entries):
            raise InvariantViolationError(f'endomorphism matrix must be {r}x{r}')
        reduced = tuple(tuple(int(x) % orders[i] for x in row) for i, row in enumerate(entries))
        for i in range(r):
            for j in range(r):
                step = entry_step(orders, i, j)
                if reduced[i][j] % step:
                    raise InvariantViolationError(
                        f'entry ({i},{j}) = {reduced[i][j]} does not define a map '
                        f'Z_{orders[j]} -> Z_{orders[i]} (must be a multiple of {step})')
        return cls(orders, reduced)

    @classmethod
    def identity(cls, orders: Sequence[int]) -> 'EndoMatrix':
        r = len(orders)
        return cls(tuple(orders), tuple(tuple(int(i == j) % orders[i] for j in range(r)) for i in range(r)))

    @classmethod
    def zero(cls, orders: Sequence[int]) -> 'EndoMatrix':
        r = len(orders)
        return cls(tuple(orders), tuple((0,) * r for _ in range(r)))

    @property
    def size(self) -> int:
        return len(self.orders)

    def columns(self) -> List[Tuple[int, ...]]:
        return [tuple(row[j] for row in self.entries) for j in range(self.size)]

    def compose(self, other: 'EndoMatrix') -> 'EndoMatrix':
        """self ∘ other"""
        r = self.size
        return EndoMatrix(self.orders, tuple(
            tuple(sum(self.entries[i][k] * other.entries[k][j] for k in range(r)) % self.orders[i]
                  for j in range(r))
            for i in range(r)))

    def is_idempotent(self) -> bool:
        return self.compose(self) == self


@dataclass(frozen=True)
class WitnessFamily:
    """Idempotents of End(Z^rank): [[1, n], [0, 0]] in the top-left corner, zeros elsewhere."""
    rank: int
    pattern: str = '[[1, n], [0, 0]]'

    def member(self, n: int) -> List[List[int]]:
        m = [[0] * self.rank for _ in range(self.rank)]
        m[0][0] = 1
        m[0][1] = n
        return m


@dataclass(frozen=True)
class IdempotentReport:
    group: AbelianGroup
    idempotent_count: Cardinal
    capacity_of_em: CapacityResult
    witness: Optional[WitnessFamily] = None
    bound_holds: Optional[bool] = None


@dataclass(frozen=True)
class VerifyRecord:
    """Closed-form summand count of one finite group against the oracle."""
    group: AbelianGroup
    formula: int
    oracle: int
    classes: Tuple[AbelianGroup, ...] = ()

    @property
    def passed(self) -> bool:
        return self.formula == self.oracle
