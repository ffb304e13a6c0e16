"""Tokenizer shared by the group literal and space expression grammars."""
from dataclasses import dataclass
from typing import List

from ..core.errors import ParseError

# multi-letter words; any other letter is a token on its own, so "S^2vS^3" lexes
KEYWORDS = ('susp', 'inf', 'pt')
SYMBOLS = '^_(),+'

WORD, INT, SYM, EOF = 'word', 'int', 'sym', 'eof'


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int  # UTF-8 byte offset

    def __repr__(self):
        return f'({self.kind}, {self.text!r}@{self.offset})'


def tokenize(text: str) -> List[Token]:
    tokens = []
    i = 0
    byte = 0
    n = len(text)
    while i < n:
        ch = text[i]
        start, start_byte = i, byte
        if ch.isspace():
            i += 1
        elif ch.isdigit() and ch.isascii():
            while i < n and text[i].isdigit() and text[i].isascii():
                i += 1
            tokens.append(Token(INT, text[start:i], start_byte))
        elif ch.isalpha() and ch.isascii():
            word = next((k for k in KEYWORDS if text.startswith(k, i)), ch)
            i += len(word)
            tokens.append(Token(WORD, word, start_byte))
        elif ch in SYMBOLS:
            i += 1
            tokens.append(Token(SYM, ch, start_byte))
        else:
            raise ParseError(f'unexpected character {ch!r}', offset=start_byte)
        byte += len(text[start:i].encode('utf-8'))
    tokens.append(Token(EOF, '', byte))
    return tokens


class TokenStream:
    """Cursor over a token list with the small helpers a recursive descent parser needs."""

    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def at(self, kind: str, text: str = None) -> bool:
        tok = self.current
        return tok.kind == kind and (text is None or tok.text == text)

    def advance(self) -> Token:
        tok = self.current
        if tok.kind != EOF:
            self.pos += 1
        return tok

    def accept(self, kind: str, text: str = None):
        if self.at(kind, text):
            return self.advance()
        return None

    def expect(self, kind: str, text: str = None, what: str = None) -> Token:
        if self.at(kind, text):
            return self.advance()
        tok = self.current
        wanted = what or (repr(text) if text else kind)
        found = 'end of input' if tok.kind == EOF else repr(tok.text)
        raise ParseError(f'expected {wanted}, found {found}', offset=tok.offset)

    def expect_int(self, what: str) -> int:
        return int(self.expect(INT, what=what).text)
