"""Finitely generated abelian groups: canonical forms from presentations,
primary decomposition, direct sums, isomorphism and the literal syntax
``Z_2^2 + Z_3 + Z^2``."""
import json
from collections import Counter
from itertools import product
from typing import Dict, Iterable, Iterator, List

from sympy import factorint
from sympy.utilities.iterables import partitions

from ..core import oracle_params
from ..core.errors import DomainError, ParseError, UnsupportedError
from ..models.group_models import OMEGA, AbelianGroup, PrimePower, RelationPresentation
from .lexer_util import EOF, INT, SYM, WORD, TokenStream, tokenize
from .snf_util import smith_normal_form


def factorize(n: int) -> Dict[int, int]:
    if n < 2:
        raise DomainError(f'cannot factor {n}: factors must be >= 2')
    if n >= oracle_params.factor_cap:
        raise DomainError(f'torsion order {n} is too large to factor (limit 2^64)')
    return {int(p): int(e) for p, e in factorint(n).items()}


def primary_decomposition(invariant_factors: Iterable[int]) -> Dict[PrimePower, int]:
    """
    Splits cyclic orders into prime-power components.

    Args:
        invariant_factors: orders of cyclic groups, each >= 2.

    Returns:
        Map PrimePower -> multiplicity, aggregated over all factors.
    """
    counts: Counter = Counter()
    for q in invariant_factors:
        for p, e in factorize(int(q)).items():
            counts[PrimePower(p, e)] += 1
    return dict(sorted(counts.items()))


def cyclic(m: int) -> AbelianGroup:
    """Z_m, with m = 0 meaning Z and m = 1 the trivial group."""
    if m == 0:
        return AbelianGroup.integers()
    if m == 1:
        return AbelianGroup.trivial()
    return AbelianGroup.fg(0, primary_decomposition([m]))


def group_from_presentation(p: RelationPresentation) -> AbelianGroup:
    """Cokernel of the relation matrix: Z^g modulo the row span of the relators."""
    snf = smith_normal_form(p.relations, ncols=p.generators)
    diagonal = snf.diagonal
    nonzero = [x for x in diagonal if x]
    free_rank = p.generators - len(nonzero)
    return AbelianGroup.fg(free_rank, primary_decomposition(x for x in nonzero if x > 1))


def direct_sum(g: AbelianGroup, h: AbelianGroup) -> AbelianGroup:
    if g.is_rationals or h.is_rationals:
        other = h if g.is_rationals else g
        if other.is_trivial:
            return AbelianGroup.rationals()
        raise UnsupportedError(f'direct sum {format_group(g)} + {format_group(h)} is not supported: '
                               'Q is only handled on its own')
    if g.free_rank is OMEGA or h.free_rank is OMEGA:
        rank = OMEGA
    else:
        rank = g.free_rank + h.free_rank
    torsion = Counter(g.torsion_map)
    torsion.update(h.torsion_map)
    return AbelianGroup.fg(rank, torsion)


def direct_sum_all(groups: Iterable[AbelianGroup]) -> AbelianGroup:
    total = AbelianGroup.trivial()
    for g in groups:
        total = direct_sum(total, g)
    return total


def is_isomorphic(g: AbelianGroup, h: AbelianGroup) -> bool:
    return g == h


def is_hopfian(g: AbelianGroup) -> bool:
    # f.g. abelian groups and Q are Hopfian; the shift on a free group of rank ω is not
    return g.is_rationals or g.free_rank is not OMEGA


def group_order(g: AbelianGroup) -> int:
    if not g.is_finite:
        raise UnsupportedError(f'{format_group(g)} is not finite')
    return g.order()


def format_group(g: AbelianGroup) -> str:
    """Canonical literal: torsion by (prime, exponent), then the free part."""
    if g.is_rationals:
        return 'Q'
    if g.is_trivial:
        return '0'
    parts = []
    for pp, m in g.torsion:
        parts.append(f'Z_{pp.value}' + (f'^{m}' if m > 1 else ''))
    if g.free_rank is OMEGA:
        parts.append('Z^inf')
    elif g.free_rank == 1:
        parts.append('Z')
    elif g.free_rank:
        parts.append(f'Z^{g.free_rank}')
    return ' + '.join(parts)


def parse_group_tokens(stream: TokenStream) -> AbelianGroup:
    """group := term ('+' term)* ; term := ('0' | 'Z' ['_' m] | 'Q') ['^' (k | 'inf')]"""
    total = _parse_group_term(stream)
    while stream.at(SYM, '+'):
        plus = stream.advance()
        term = _parse_group_term(stream)
        try:
            total = direct_sum(total, term)
        except UnsupportedError as e:
            raise ParseError(e.message, offset=plus.offset)
    return total


def _parse_group_term(stream: TokenStream) -> AbelianGroup:
    tok = stream.current
    if stream.at(INT):
        stream.advance()
        if tok.text != '0':
            raise ParseError(f'expected a group, found {tok.text!r} (only 0 is a numeric group)',
                             offset=tok.offset)
        base = AbelianGroup.trivial()
    elif stream.at(WORD, 'Z'):
        stream.advance()
        base = AbelianGroup.integers()
        if stream.accept(SYM, '_'):
            m_tok = stream.current
            m = stream.expect_int('cyclic order')
            if m < 2:
                raise ParseError(f'Z_{m} is not allowed: cyclic order must be >= 2', offset=m_tok.offset)
            try:
                base = cyclic(m)
            except DomainError as e:
                raise ParseError(e.message, offset=m_tok.offset)
    elif stream.at(WORD, 'Q'):
        stream.advance()
        base = AbelianGroup.rationals()
    elif tok.kind == EOF:
        raise ParseError('expected a group, found end of input', offset=tok.offset)
    else:
        raise ParseError(f'unsupported group {tok.text!r}: only abelian groups built from 0, Z, Z_m and Q '
                         'are supported', offset=tok.offset)

    if stream.accept(SYM, '^'):
        exp_tok = stream.current
        if stream.accept(WORD, 'inf'):
            if base != AbelianGroup.integers():
                raise ParseError('^inf is only allowed on Z', offset=exp_tok.offset)
            return AbelianGroup.integers(OMEGA)
        k = stream.expect_int("repetition count or 'inf'")
        if base.is_rationals and k > 1:
            raise ParseError('Q^k is not supported: Q is only handled on its own', offset=exp_tok.offset)
        if base.is_rationals:
            return base if k == 1 else AbelianGroup.trivial()
        return AbelianGroup.fg(
            base.free_rank * k,
            {pp: m * k for pp, m in base.torsion})
    return base


def parse_group(text: str) -> AbelianGroup:
    stream = TokenStream(tokenize(text))
    g = parse_group_tokens(stream)
    stream.expect(EOF, what='end of input')
    return g


def abelian_groups_of_order(n: int) -> List[AbelianGroup]:
    """All abelian groups of order n up to isomorphism, one per choice of a
    partition of each prime exponent."""
    if n < 1:
        raise DomainError(f'group order must be >= 1, got {n}')
    if n == 1:
        return [AbelianGroup.trivial()]
    primes = sorted(factorize(n).items())
    choices = [[dict(part) for part in partitions(e)] for _, e in primes]
    groups = []
    for combo in product(*choices):
        torsion: Counter = Counter()
        for (p, _), part in zip(primes, combo):
            for exponent, mult in part.items():
                torsion[PrimePower(p, exponent)] += mult
        groups.append(AbelianGroup.fg(0, torsion))
    return sorted(groups, key=group_sort_key)


def abelian_groups_up_to(max_order: int) -> Iterator[AbelianGroup]:
    for n in range(1, max_order + 1):
        yield from abelian_groups_of_order(n)


def group_sort_key(g: AbelianGroup):
    order = g.order() if g.is_finite else 0
    return (order, [(pp.prime, pp.exponent, m) for pp, m in g.torsion])


def parse_presentation(text: str) -> RelationPresentation:
    """Reads ``{"generators": g, "relations": [[...], ...]}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f'invalid presentation JSON: {e.msg}', offset=len(text[:e.pos].encode('utf-8')))
    if not isinstance(data, dict) or 'generators' not in data:
        raise ParseError('presentation must be an object with "generators" and "relations"', offset=0)
    generators = data['generators']
    relations = data.get('relations', [])
    if isinstance(generators, bool) or not isinstance(generators, int):
        raise ParseError(f'"generators" must be a natural number, got {generators!r}', offset=0)
    if not isinstance(relations, list) or not all(isinstance(row, list) for row in relations):
        raise ParseError('"relations" must be a list of integer rows', offset=0)
    if any(isinstance(x, bool) or not isinstance(x, int) for row in relations for x in row):
        raise ParseError('relation entries must be integers', offset=0)
    try:
        return RelationPresentation.of(generators, relations)
    except ValueError as e:
        raise ParseError(str(e), offset=0)
