"""AST for space expressions, their normal forms and capacity results."""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple, Union

from .group_models import AbelianGroup


@dataclass(frozen=True)
class Point:
    pass


@dataclass(frozen=True)
class Sphere:
    n: int


@dataclass(frozen=True)
class Moore:
    group: AbelianGroup
    n: int


@dataclass(frozen=True)
class EM:
    group: AbelianGroup
    n: int


@dataclass(frozen=True)
class Torus:
    k: int


@dataclass(frozen=True)
class PseudoProjective:
    q: int


@dataclass(frozen=True)
class Suspension:
    times: int
    inner: 'SpaceExpr'


@dataclass(frozen=True)
class Wedge:
    children: Tuple['SpaceExpr', ...]

    def __post_init__(self):
        if not self.children:
            raise ValueError('a wedge needs at least one child')


@dataclass(frozen=True)
class Product:
    children: Tuple['SpaceExpr', ...]

    def __post_init__(self):
        if not self.children:
            raise ValueError('a product needs at least one child')


SpaceExpr = Union[Point, Sphere, Moore, EM, Torus, PseudoProjective, Suspension, Wedge, Product]


class UnknownReason(Enum):
    OPEN_PROBLEM = 'open-problem'
    NON_HOPFIAN = 'non-hopfian'
    UNSUPPORTED_MIX = 'unsupported-mix'
    Q_SUM = 'q-sum'

    def __str__(self):
        return self.value


class NormalFormKind(Enum):
    MOORE_WEDGE = 'moore-wedge'
    EM_PRODUCT = 'em-product'
    POINT = 'point'
    UNCLASSIFIED = 'unclassified'


@dataclass(frozen=True)
class NormalForm:
    kind: NormalFormKind
    # (degree, group) pairs sorted by degree, nontrivial groups only
    groups: Tuple[Tuple[int, AbelianGroup], ...] = ()
    reason: Optional[UnknownReason] = None
    detail: str = ''
    # EM_PRODUCT {1: Z^k}, k >= 2, that came from a wedge of circles rather than a torus
    circle_wedge: bool = False

    @classmethod
    def point(cls) -> 'NormalForm':
        return cls(NormalFormKind.POINT)

    @classmethod
    def unclassified(cls, reason: UnknownReason, detail: str) -> 'NormalForm':
        return cls(NormalFormKind.UNCLASSIFIED, reason=reason, detail=detail)

    @property
    def degree_map(self) -> Dict[int, AbelianGroup]:
        return dict(self.groups)

    def group_at(self, degree: int) -> AbelianGroup:
        return self.degree_map.get(degree, AbelianGroup.trivial())


class CapacityKind(Enum):
    FINITE = 'finite'
    INFINITE = 'infinite'
    UNKNOWN = 'unknown'


@dataclass(frozen=True)
class CapacityResult:
    kind: CapacityKind
    value: Optional[int] = None
    reason: Optional[UnknownReason] = None
    detail: str = ''

    def __post_init__(self):
        if self.kind is CapacityKind.FINITE and (self.value is None or self.value < 1):
            raise ValueError(f'finite capacity must be >= 1, got {self.value!r}')

    @classmethod
    def finite(cls, value: int) -> 'CapacityResult':
        return cls(CapacityKind.FINITE, value)

    @classmethod
    def infinite(cls) -> 'CapacityResult':
        return cls(CapacityKind.INFINITE)

    @classmethod
    def unknown(cls, reason: UnknownReason, detail: str = '') -> 'CapacityResult':
        return cls(CapacityKind.UNKNOWN, reason=reason, detail=detail)

    @property
    def is_finite(self) -> bool:
        return self.kind is CapacityKind.FINITE

    def __str__(self):
        if self.kind is CapacityKind.FINITE:
            return str(self.value)
        if self.kind is CapacityKind.INFINITE:
            return 'infinite'
        return f'unknown ({self.reason})'
