"""Element-level model of a finite abelian group Z_{d_1} + ... + Z_{d_r}.

Elements are indexed by mixed radix over the cyclic components; subgroups are
int bitmasks over those indices (bit 0 is the identity).
"""
from collections import defaultdict
from functools import cached_property, lru_cache
from itertools import product
from math import gcd, lcm, prod
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from sympy import multiplicity, primefactors

from ..core.errors import UnsupportedError
from ..models.group_models import AbelianGroup, PrimePower
from ..models.summand_models import EndoMatrix, entry_step
from .log_util import setup_logger

logger = setup_logger()


class FiniteAbelianGroup:

    def __init__(self, group: AbelianGroup):
        if not group.is_finite:
            raise UnsupportedError('element enumeration needs a finite group')
        self.group = group
        self.orders: Tuple[int, ...] = tuple(group.elementary_divisors())
        self.size = prod(self.orders)

    def encode(self, element: Sequence[int]) -> int:
        index = 0
        for x, d in zip(element, self.orders):
            index = index * d + x % d
        return index

    def decode(self, index: int) -> Tuple[int, ...]:
        digits = []
        for d in reversed(self.orders):
            index, x = divmod(index, d)
            digits.append(x)
        return tuple(reversed(digits))

    @cached_property
    def elements(self) -> List[Tuple[int, ...]]:
        return [self.decode(i) for i in range(self.size)]

    @cached_property
    def add_table(self) -> List[List[int]]:
        elems = self.elements
        return [[self.encode([x + y for x, y in zip(a, b)]) for b in elems] for a in elems]

    @cached_property
    def neg_table(self) -> List[int]:
        return [self.encode([-x for x in a]) for a in self.elements]

    @cached_property
    def element_orders(self) -> List[int]:
        result = []
        for a in self.elements:
            order = 1
            for x, d in zip(a, self.orders):
                order = lcm(order, d // gcd(x, d))
            result.append(order)
        return result

    def generators(self) -> List[int]:
        """Indices of the standard generators e_1, ..., e_r."""
        r = len(self.orders)
        return [self.encode([int(i == j) for j in range(r)]) for i in range(r)]

    @staticmethod
    def members(mask: int) -> List[int]:
        out = []
        i = 0
        while mask:
            if mask & 1:
                out.append(i)
            mask >>= 1
            i += 1
        return out

    @staticmethod
    def to_mask(indices: Iterable[int]) -> int:
        mask = 0
        for i in indices:
            mask |= 1 << i
        return mask

    def cyclic_subgroup(self, x: int) -> List[int]:
        out = [0]
        y = x
        while y != 0:
            out.append(y)
            y = self.add_table[y][x]
        return out

    def join(self, a: Sequence[int], b: Sequence[int]) -> int:
        table = self.add_table
        mask = 0
        for x in a:
            row = table[x]
            for y in b:
                mask |= 1 << row[y]
        return mask

    def generated(self, gens: Iterable[int]) -> int:
        current = [0]
        for g in gens:
            current = self.members(self.join(current, self.cyclic_subgroup(g)))
        return self.to_mask(current)

    @cached_property
    def subgroups(self) -> List[int]:
        """Every subgroup, grown from the trivial one by joining cyclic subgroups."""
        cyclics = {}
        for x in range(self.size):
            elems = self.cyclic_subgroup(x)
            cyclics.setdefault(self.to_mask(elems), elems)
        trivial = 1
        found = {trivial}
        frontier = [trivial]
        while frontier:
            nxt = []
            for s in frontier:
                s_members = self.members(s)
                for c_mask, c_members in cyclics.items():
                    if c_mask & ~s == 0:
                        continue
                    j = self.join(s_members, c_members)
                    if j not in found:
                        found.add(j)
                        nxt.append(j)
            frontier = nxt
        logger.debug(f'{self.group}: {len(found)} subgroups')
        return sorted(found, key=lambda m: (bin(m).count('1'), m))

    @cached_property
    def subgroups_by_order(self) -> Dict[int, List[int]]:
        by_order = defaultdict(list)
        for s in self.subgroups:
            by_order[bin(s).count('1')].append(s)
        return dict(by_order)

    def complements(self, h: int) -> Iterator[int]:
        """Subgroups K with H ∩ K = 0 and |H|·|K| = |G|, i.e. G = H + K."""
        target = self.size // bin(h).count('1')
        for k in self.subgroups_by_order.get(target, ()):
            if h & k == 1:
                yield k

    def projection(self, h: int, k: int) -> EndoMatrix:
        """The idempotent with image H and kernel K, as an EndoMatrix."""
        h_members = self.members(h)
        columns = []
        for e in self.generators():
            part = next(x for x in h_members if (k >> self.add_table[e][self.neg_table[x]]) & 1)
            columns.append(self.decode(part))
        r = len(self.orders)
        return EndoMatrix(self.orders, tuple(tuple(columns[j][i] for j in range(r)) for i in range(r)))

    def image_mask(self, m: EndoMatrix) -> int:
        return self.generated(self.encode(col) for col in m.columns())

    def classify(self, mask: int) -> AbelianGroup:
        """Isomorphism type of a subgroup from its element orders alone.

        For the p-part, #{x : p^k x = 0} = p^(sum_i min(e_i, k)), so successive
        differences of the exponent sums give how many cyclic factors have
        exponent >= k.
        """
        orders = [self.element_orders[i] for i in self.members(mask)]
        size = len(orders)
        torsion: Dict[PrimePower, int] = {}
        for p in primefactors(size):
            sums = [0]
            k = 0
            while True:
                k += 1
                count = sum(1 for o in orders if (p ** k) % o == 0)
                s = multiplicity(p, count)
                if s == sums[-1]:
                    break
                sums.append(s)
            at_least = [sums[i] - sums[i - 1] for i in range(1, len(sums))] + [0]
            for e in range(1, len(sums)):
                exact = at_least[e - 1] - at_least[e]
                if exact:
                    torsion[PrimePower(p, e)] = exact
        return AbelianGroup.fg(0, torsion)

    def endomorphism_ring_size(self) -> int:
        return prod(gcd(a, b) for a in self.orders for b in self.orders)

    def all_endomorphisms(self) -> Iterator[EndoMatrix]:
        r = len(self.orders)
        ranges = [range(0, self.orders[i], entry_step(self.orders, i, j))
                  for i in range(r) for j in range(r)]
        for flat in product(*ranges):
            yield EndoMatrix(self.orders, tuple(tuple(flat[i * r:(i + 1) * r]) for i in range(r)))


@lru_cache(maxsize=64)
def finite_model(group: AbelianGroup) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(group)
