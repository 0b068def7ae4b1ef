"""Arithmetic in H = <c, d> (free abelian) and in the two vertex groups

    A = <a> *_{a^m = c} H        B = H *_{d = b^n} <b>.

Both vertex groups have the same shape: a cyclic "torsion" letter whose
``order``-th power is a central letter of H, and a "free" letter (the other
generator of H).  Modulo the central letter the group is the free product
C_order * Z, so an element is stored as a central exponent (the head) times
an alternating word whose torsion exponents lie in [1, order - 1].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

from .words import Syllable, Word, check_exponent

# side -> (torsion letter, central letter, free letter)
LETTERS = {"A": ("a", "c", "d"), "B": ("b", "d", "c")}


def other_side(side: str) -> str:
    return "B" if side == "A" else "A"


@dataclass(frozen=True, order=True)
class HElem:
    """c^p d^q."""

    p: int = 0
    q: int = 0

    def __add__(self, other: "HElem") -> "HElem":
        return HElem(check_exponent(self.p + other.p), check_exponent(self.q + other.q))

    def __neg__(self) -> "HElem":
        return HElem(-self.p, -self.q)

    def __mul__(self, k: int) -> "HElem":
        return HElem(check_exponent(self.p * k), check_exponent(self.q * k))

    def is_identity(self) -> bool:
        return self.p == 0 and self.q == 0

    def to_word(self) -> Word:
        return Word.of(("c", self.p), ("d", self.q))

    def __str__(self) -> str:
        return str(self.to_word())


@dataclass(frozen=True)
class FactorElem:
    """Normal form ``central^head * x_1 ... x_k`` inside A or B.

    For side A this is the AElem of the design (head = c-exponent, syllables
    alternate a^r, 0 < r < m, and d^s, s != 0); side B mirrors it with
    d central, b torsion of order n and c free.
    """

    side: str
    order: int
    head: int = 0
    syllables: Tuple[Syllable, ...] = ()

    @property
    def torsion(self) -> str:
        return LETTERS[self.side][0]

    @property
    def central(self) -> str:
        return LETTERS[self.side][1]

    @property
    def free(self) -> str:
        return LETTERS[self.side][2]

    @classmethod
    def identity(cls, side: str, order: int) -> "FactorElem":
        return cls(side, order)

    @classmethod
    def from_syllables(cls, side: str, order: int, syllables: Iterable[Syllable]) -> "FactorElem":
        head, out = _normalize(side, order, 0, [], syllables)
        return cls(side, order, head, tuple(out))

    @classmethod
    def from_h(cls, side: str, order: int, h: HElem) -> "FactorElem":
        if side == "A":
            central, free = h.p, h.q
        else:
            central, free = h.q, h.p
        syl = ((LETTERS[side][2], free),) if free else ()
        return cls(side, order, central, syl)

    def __mul__(self, other: "FactorElem") -> "FactorElem":
        assert self.side == other.side
        head, out = _normalize(
            self.side, self.order, self.head + other.head, list(self.syllables), other.syllables
        )
        return FactorElem(self.side, self.order, head, tuple(out))

    def inverse(self) -> "FactorElem":
        inv = [(x, -e) for x, e in reversed(self.syllables)]
        head, out = _normalize(self.side, self.order, -self.head, [], inv)
        return FactorElem(self.side, self.order, head, tuple(out))

    def __pow__(self, k: int) -> "FactorElem":
        result = FactorElem.identity(self.side, self.order)
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return self.head == 0 and not self.syllables

    def in_h(self) -> bool:
        return not self.syllables or (len(self.syllables) == 1 and self.syllables[0][0] == self.free)

    def split(self) -> Tuple[HElem, "FactorElem"]:
        """Write self = h * r with r the canonical right-coset representative of H."""
        syl = self.syllables
        free_part = 0
        if syl and syl[0][0] == self.free:
            free_part, syl = syl[0][1], syl[1:]
        if self.side == "A":
            h = HElem(self.head, free_part)
        else:
            h = HElem(free_part, self.head)
        return h, FactorElem(self.side, self.order, 0, syl)

    def to_h(self) -> HElem:
        h, rest = self.split()
        if not rest.is_identity():
            raise ValueError(f"{self} is not in H")
        return h

    def to_word(self) -> Word:
        return Word.of((self.central, self.head), *self.syllables)

    def inner_length(self) -> int:
        """Length in the vertex group's own amalgam <torsion> *_<central> H."""
        return max(1, len(self.syllables))

    def __str__(self) -> str:
        return str(self.to_word())


def _normalize(side, order, head, out, syllables):
    torsion, central, _ = LETTERS[side]
    for letter, e in syllables:
        if letter == central:
            head += e
            continue
        if letter == torsion:
            carry, e = divmod(e, order)
            head += carry
        if e == 0:
            continue
        if out and out[-1][0] == letter:
            e += out.pop()[1]
            if letter == torsion:
                carry, e = divmod(e, order)
                head += carry
            if e:
                out.append((letter, e))
        else:
            out.append((letter, e))
    return check_exponent(head), out


def inner_cyclic_decompose(z: FactorElem) -> Tuple[FactorElem, FactorElem]:
    """Return (w, core) with z = w * core * w^-1 and core cyclically reduced
    in the vertex group's own amalgam (at most one syllable, or an even
    number of alternating syllables)."""
    w = FactorElem.identity(z.side, z.order)
    core = z
    while len(core.syllables) >= 3 and len(core.syllables) % 2 == 1:
        lead = FactorElem(z.side, z.order, 0, core.syllables[:1])
        core = lead.inverse() * core * lead
        w = w * lead
    return w, core


class RootError(ValueError):
    pass


def factor_root(z: FactorElem, k: int) -> Tuple[FactorElem, int]:
    """For z outside H with z^k in H, find x and j with z = x^-1 t^j x.

    ``t`` is the torsion letter of z's side (a in A, b in B).  The order of t
    divides j*k.
    """
    if k == 0:
        raise RootError("k must be nonzero")
    if z.in_h():
        raise RootError(f"{z} lies in H")
    if not (z ** k).in_h():
        raise RootError(f"({z})^{k} does not lie in H")
    w, core = inner_cyclic_decompose(z)
    if len(core.syllables) > 1:
        raise RootError(f"{z} is not conjugate into <{z.torsion}> or H")
    if core.syllables and core.syllables[0][0] == z.free:
        # A core in H whose k-th power is central would need a zero free part.
        raise RootError(f"core {core} has no power in <{z.central}>")
    r = core.syllables[0][1] if core.syllables else 0
    j = check_exponent(z.order * core.head + r)
    if (j * k) % z.order:
        raise RootError(f"{z.order} does not divide {j}*{k}")
    return w.inverse(), j
