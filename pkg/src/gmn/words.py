"""Free words over {a, b, c, d} and the text grammar that produces them.

Letters ``c`` and ``d`` stand for ``a^m`` and ``b^n``; they stay symbolic
here and are only expanded when a word is embedded into the group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

LETTERS = ("a", "b", "c", "d")
INT64_MAX = 2**63 - 1
MAX_EXPANSION = 10**6

Syllable = Tuple[str, int]


class ParseError(ValueError):
    def __init__(self, message: str, position: int) -> None:
        self.message = message
        self.position = position
        super().__init__(f"{message} at position {position}")


class ExponentOverflowError(OverflowError):
    pass


def check_exponent(e: int) -> int:
    if not -INT64_MAX <= e <= INT64_MAX:
        raise ExponentOverflowError(f"exponent {e} does not fit in 64 bits")
    return e


@dataclass(frozen=True)
class GroupParams:
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 2 or self.n < 2:
            raise ValueError(f"need m, n >= 2, got m={self.m}, n={self.n}")

    @property
    def symmetric(self) -> bool:
        return self.m == self.n


def _reduced(syllables: Iterable[Syllable]) -> Tuple[Syllable, ...]:
    out: list[Syllable] = []
    for letter, e in syllables:
        if e == 0:
            continue
        if out and out[-1][0] == letter:
            total = check_exponent(out[-1][1] + e)
            out.pop()
            if total:
                out.append((letter, total))
        else:
            out.append((letter, check_exponent(e)))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; build through :func:`free_reduce` or :meth:`of`."""

    syllables: Tuple[Syllable, ...] = ()

    @classmethod
    def of(cls, *syllables: Syllable) -> "Word":
        return free_reduce(cls(tuple(syllables)))

    def __iter__(self) -> Iterator[Syllable]:
        return iter(self.syllables)

    def __len__(self) -> int:
        return len(self.syllables)

    def __mul__(self, other: "Word") -> "Word":
        return Word(_reduced(self.syllables + other.syllables))

    def __invert__(self) -> "Word":
        return invert_word(self)

    def __pow__(self, k: int) -> "Word":
        if len(self.syllables) == 1:
            (x, e), = self.syllables
            return Word(_reduced([(x, check_exponent(e * k))]))
        base = self if k >= 0 else invert_word(self)
        if len(base.syllables) * abs(k) > MAX_EXPANSION:
            raise ExponentOverflowError(f"power {k} of a {len(self)}-syllable word is too large")
        return Word(_reduced(base.syllables * abs(k)))

    def letter_count(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def is_empty(self) -> bool:
        return not self.syllables

    def __str__(self) -> str:
        return serialize(self)


def free_reduce(w: Word) -> Word:
    return Word(_reduced(w.syllables))


def invert_word(w: Word) -> Word:
    return Word(tuple((x, -e) for x, e in reversed(w.syllables)))


def commutator(u: Word, v: Word) -> Word:
    return u * v * ~u * ~v


def format_syllable(letter: str, e: int) -> str:
    return letter if e == 1 else f"{letter}^{e}"


def serialize(w: Word) -> str:
    if not w.syllables:
        return "1"
    return " ".join(format_syllable(x, e) for x, e in w.syllables)


class _Parser:
    # word := term { ("*" | WS | "|") term } | "1"
    # term := atom ["^" int]
    # atom := letter | "1" | "(" word ")" | "[" word "," word "]"

    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def parse(self) -> Word:
        w = self.word()
        if self.peek():
            raise self.error(f"unexpected {self.peek()!r}")
        return w

    def word(self) -> Word:
        if self.peek() in ("", ")", "]", ","):
            raise self.error("expected a term")
        w = self.term()
        while True:
            ch = self.peek()
            if ch in ("*", "|"):
                self.pos += 1
                w = w * self.term()
            elif ch and ch not in (")", "]", ","):
                w = w * self.term()
            else:
                return w

    def term(self) -> Word:
        w = self.atom()
        if self.peek() == "^":
            self.pos += 1
            w = w ** self.integer()
        return w

    def atom(self) -> Word:
        ch = self.peek()
        if ch in LETTERS:
            self.pos += 1
            return Word(((ch, 1),))
        if ch == "1" and not self._digit_follows():
            self.pos += 1
            return Word()
        if ch == "(":
            self.pos += 1
            w = self.word()
            self.expect(")")
            return w
        if ch == "[":
            self.pos += 1
            u = self.word()
            self.expect(",")
            v = self.word()
            self.expect("]")
            return commutator(u, v)
        raise self.error(f"unexpected {ch or 'end of input'!r}")

    def _digit_follows(self) -> bool:
        nxt = self.pos + 1
        return nxt < len(self.text) and self.text[nxt].isdigit()

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            raise self.error("expected an integer exponent")
        value = int(self.text[start:self.pos])
        if abs(value) > INT64_MAX:
            raise ExponentOverflowError(
                f"exponent {value} at position {start} does not fit in 64 bits"
            )
        return value


def parse(text: str, params: GroupParams | None = None) -> Word:
    """Parse ``text`` into a freely reduced word.

    ``params`` is accepted for symmetry with the rest of the API; parsing
    itself does not depend on m and n.
    """
    return _Parser(text).parse()
