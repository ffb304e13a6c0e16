"""Value types for finitely generated abelian groups.

An ``AbelianGroup`` is kept in canonical (primary) form, so two values are
isomorphic exactly when they compare equal. The rationals are carried as an
opaque atom, and a free part of countably infinite rank is marked with
``OMEGA``.
"""
from dataclasses import dataclass, field
from enum import Enum
from math import prod
from typing import Dict, List, Mapping, Tuple, Union

from sympy import isprime


class Infinity(Enum):
    OMEGA = 'inf'

    def __str__(self):
        return self.value


OMEGA = Infinity.OMEGA

# natural number or ω
Cardinal = Union[int, Infinity]


class GroupKind(Enum):
    FG = 'fg'
    RATIONALS = 'rationals'


@dataclass(frozen=True, order=True)
class PrimePower:
    prime: int
    exponent: int

    def __post_init__(self):
        if not isinstance(self.prime, int) or not isprime(self.prime):
            raise ValueError(f'{self.prime!r} is not a prime')
        if not isinstance(self.exponent, int) or self.exponent < 1:
            raise ValueError(f'exponent must be >= 1, got {self.exponent!r}')

    @property
    def value(self) -> int:
        return self.prime ** self.exponent

    def __str__(self):
        return f'{self.prime}^{self.exponent}'


@dataclass(frozen=True)
class AbelianGroup:
    kind: GroupKind = GroupKind.FG
    free_rank: Cardinal = 0
    # sorted (PrimePower, multiplicity) pairs; use AbelianGroup.fg to build
    torsion: Tuple[Tuple[PrimePower, int], ...] = ()

    def __post_init__(self):
        if self.kind is GroupKind.RATIONALS:
            if self.free_rank != 0 or self.torsion:
                raise ValueError('the rationals carry no free rank or torsion data')
            return
        if self.free_rank is not OMEGA and (not isinstance(self.free_rank, int) or self.free_rank < 0):
            raise ValueError(f'free rank must be a natural number or OMEGA, got {self.free_rank!r}')
        keys = [pp for pp, _ in self.torsion]
        if keys != sorted(set(keys)):
            raise ValueError('torsion keys must be distinct and sorted')
        for pp, mult in self.torsion:
            if not isinstance(mult, int) or mult < 1:
                raise ValueError(f'multiplicity of {pp} must be >= 1, got {mult!r}')

    @classmethod
    def fg(cls, free_rank: Cardinal = 0, torsion: Mapping[PrimePower, int] = None) -> 'AbelianGroup':
        """Builds a canonical f.g. group, dropping zero multiplicities."""
        torsion = torsion or {}
        items = tuple(sorted((pp, m) for pp, m in torsion.items() if m))
        return cls(GroupKind.FG, free_rank, items)

    @classmethod
    def trivial(cls) -> 'AbelianGroup':
        return cls()

    @classmethod
    def integers(cls, rank: Cardinal = 1) -> 'AbelianGroup':
        return cls(GroupKind.FG, rank, ())

    @classmethod
    def rationals(cls) -> 'AbelianGroup':
        return cls(GroupKind.RATIONALS)

    @property
    def is_rationals(self) -> bool:
        return self.kind is GroupKind.RATIONALS

    @property
    def is_trivial(self) -> bool:
        return self.kind is GroupKind.FG and self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.kind is GroupKind.FG and self.free_rank == 0

    @property
    def is_free(self) -> bool:
        return self.kind is GroupKind.FG and not self.torsion

    @property
    def has_finite_data(self) -> bool:
        return self.kind is GroupKind.FG and self.free_rank is not OMEGA

    @property
    def torsion_map(self) -> Dict[PrimePower, int]:
        return dict(self.torsion)

    def order(self) -> int:
        if not self.is_finite:
            raise ValueError('group is infinite')
        return prod(pp.value ** m for pp, m in self.torsion)

    def elementary_divisors(self) -> List[int]:
        """Prime-power orders of the cyclic torsion components, with repeats,
        in (prime, exponent) order."""
        return [pp.value for pp, m in self.torsion for _ in range(m)]

    def invariant_factors(self) -> List[int]:
        """Torsion invariant factors d1 | d2 | ... (free part excluded)."""
        by_prime: Dict[int, List[int]] = {}
        for pp, m in self.torsion:
            by_prime.setdefault(pp.prime, []).extend([pp.value] * m)
        width = max((len(v) for v in by_prime.values()), default=0)
        factors = [1] * width
        for values in by_prime.values():
            values.sort(reverse=True)
            for i, v in enumerate(values):
                factors[width - 1 - i] *= v
        return factors

    def __str__(self):
        from ..utils.group_util import format_group
        return format_group(self)


@dataclass(frozen=True)
class RelationPresentation:
    generators: int
    relations: Tuple[Tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.generators, int) or self.generators < 0:
            raise ValueError(f'generators must be a natural number, got {self.generators!r}')
        for row in self.relations:
            if len(row) != self.generators:
                raise ValueError(f'relator {list(row)} does not have {self.generators} entries')
            if not all(isinstance(x, int) for x in row):
                raise ValueError(f'relator {list(row)} has non-integer entries')

    @classmethod
    def of(cls, generators: int, relations) -> 'RelationPresentation':
        return cls(generators, tuple(tuple(int(x) for x in row) for row in relations))


Matrix = List[List[int]]


@dataclass(frozen=True)
class SNFResult:
    d: Tuple[Tuple[int, ...], ...]
    u: Tuple[Tuple[int, ...], ...]
    v: Tuple[Tuple[int, ...], ...]

    @property
    def diagonal(self) -> List[int]:
        return [self.d[i][i] for i in range(min(len(self.d), len(self.v)))]

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x)
