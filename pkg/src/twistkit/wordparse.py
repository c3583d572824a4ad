"""Tokenizer and parser for generator shorthand such as ``"(b^3 a)^6"``.

Grammar::

    word   := item*
    item   := atom ('^' int)?
    atom   := 'a' | 'b' | 'A' | 'B' | '(' word ')'
    int    := ('+' | '-')? digit+

``A``/``B`` are accepted as aliases of ``a``/``b`` so that relations written
with capital letters parse unchanged.  Whitespace is ignored.
"""

from __future__ import annotations

from .mcg import A_WORD, B_WORD, TwistWord


class WordSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def word(self, nested: bool) -> TwistWord:
        out = TwistWord()
        while True:
            ch = self.peek()
            if ch == "":
                if nested:
                    raise WordSyntaxError("unclosed '('", self.pos)
                return out
            if ch == ")":
                if not nested:
                    raise WordSyntaxError("unmatched ')'", self.pos)
                return out
            out = out * self.item()

    def item(self) -> TwistWord:
        ch = self.peek()
        start = self.pos
        if ch in "aA":
            self.pos += 1
            atom = A_WORD
        elif ch in "bB":
            self.pos += 1
            atom = B_WORD
        elif ch == "(":
            self.pos += 1
            atom = self.word(nested=True)
            self.pos += 1  # the ')'
        else:
            raise WordSyntaxError(f"unexpected {ch!r}", start)
        if self.peek() == "^":
            self.pos += 1
            atom = atom ** self.integer()
        return atom

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise WordSyntaxError("expected an integer exponent", start)
        k = int(self.text[start:self.pos])
        if k == 0:
            raise WordSyntaxError("exponent 0 is not allowed", start)
        return k


def parse_word(text: str) -> TwistWord:
    """Parse shorthand into a normalized :class:`TwistWord`."""
    return _Parser(text).word(nested=False).normalized()
