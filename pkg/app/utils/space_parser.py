"""Recursive descent parser and canonical printer for space expressions.

    wedge   := product ('v' product)*
    product := unary ('x' unary)*
    unary   := 'susp' ['^' t] '(' wedge ')' | atom
    atom    := 'S^' n | 'M(' group ',' n ')' | 'K(' group ',' n ')'
             | 'T^' k | 'P_' q | 'pt' | '(' wedge ')'
"""
from ..core.errors import ParseError
from ..models.space_models import (EM, Moore, Point, Product, PseudoProjective, SpaceExpr, Sphere, Suspension,
                                   Torus, Wedge)
from .group_util import format_group, parse_group_tokens
from .lexer_util import EOF, SYM, WORD, TokenStream, tokenize


class SpaceParser:

    def __init__(self, text: str):
        self.stream = TokenStream(tokenize(text))

    def parse(self) -> SpaceExpr:
        expr = self._wedge()
        self.stream.expect(EOF, what="'v', 'x' or end of input")
        return expr

    def _wedge(self) -> SpaceExpr:
        children = [self._product()]
        while self.stream.accept(WORD, 'v'):
            children.append(self._product())
        return children[0] if len(children) == 1 else Wedge(tuple(children))

    def _product(self) -> SpaceExpr:
        children = [self._unary()]
        while self.stream.accept(WORD, 'x'):
            children.append(self._unary())
        return children[0] if len(children) == 1 else Product(tuple(children))

    def _unary(self) -> SpaceExpr:
        if not self.stream.accept(WORD, 'susp'):
            return self._atom()
        times = 1
        if self.stream.accept(SYM, '^'):
            times = self._natural('suspension count', minimum=1)
        self.stream.expect(SYM, '(')
        inner = self._wedge()
        self.stream.expect(SYM, ')')
        return Suspension(times, inner)

    def _natural(self, what: str, minimum: int) -> int:
        tok = self.stream.current
        value = self.stream.expect_int(what)
        if value < minimum:
            raise ParseError(f'{what} must be >= {minimum}, got {value}', offset=tok.offset)
        return value

    def _group_and_degree(self, what: str):
        self.stream.expect(SYM, '(')
        group = parse_group_tokens(self.stream)
        self.stream.expect(SYM, ',')
        tok = self.stream.current
        n = self.stream.expect_int(f'{what} degree')
        self.stream.expect(SYM, ')')
        return group, n, tok

    def _atom(self) -> SpaceExpr:
        s = self.stream
        tok = s.current
        if s.accept(SYM, '('):
            expr = self._wedge()
            s.expect(SYM, ')')
            return expr
        if s.accept(WORD, 'pt'):
            return Point()
        if s.accept(WORD, 'S'):
            s.expect(SYM, '^')
            return Sphere(self._natural('sphere dimension', minimum=1))
        if s.accept(WORD, 'T'):
            s.expect(SYM, '^')
            return Torus(self._natural('torus dimension', minimum=1))
        if s.accept(WORD, 'P'):
            s.expect(SYM, '_')
            return PseudoProjective(self._natural('pseudo-projective order', minimum=0))
        if s.accept(WORD, 'M'):
            group, n, n_tok = self._group_and_degree('Moore')
            if n < 2:
                raise ParseError(f'M(A, {n}) cannot be defined: a Moore space is simply connected, '
                                 'so its degree must be >= 2', offset=n_tok.offset)
            return Moore(group, n)
        if s.accept(WORD, 'K'):
            group, n, n_tok = self._group_and_degree('Eilenberg-MacLane')
            if n < 1:
                raise ParseError(f'K(G, {n}) needs degree >= 1', offset=n_tok.offset)
            return EM(group, n)
        found = 'end of input' if tok.kind == EOF else repr(tok.text)
        raise ParseError(f'expected a space (S^n, M(A,n), K(G,n), T^k, P_q, pt, susp or a parenthesis), '
                         f'found {found}', offset=tok.offset)


def parse(text: str) -> SpaceExpr:
    return SpaceParser(text).parse()


def format_space(e: SpaceExpr) -> str:
    """Canonical printer; parse(format_space(e)) == e."""
    if isinstance(e, Point):
        return 'pt'
    if isinstance(e, Sphere):
        return f'S^{e.n}'
    if isinstance(e, Moore):
        return f'M({format_group(e.group)}, {e.n})'
    if isinstance(e, EM):
        return f'K({format_group(e.group)}, {e.n})'
    if isinstance(e, Torus):
        return f'T^{e.k}'
    if isinstance(e, PseudoProjective):
        return f'P_{e.q}'
    if isinstance(e, Suspension):
        return f'susp^{e.times}({format_space(e.inner)})'
    if isinstance(e, Wedge):
        return ' v '.join(_wrap(c, (Wedge,)) for c in e.children)
    if isinstance(e, Product):
        return ' x '.join(_wrap(c, (Wedge, Product)) for c in e.children)
    raise TypeError(f'not a space expression: {e!r}')


def _wrap(e: SpaceExpr, needs_parens) -> str:
    text = format_space(e)
    return f'({text})' if isinstance(e, needs_parens) else text
