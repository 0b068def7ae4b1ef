"""Normal forms in G = A *_H B, which is isomorphic to <a, b; [a^m, b^n] = 1>.

An element is stored as ``h * r_1 * ... * r_k`` with ``h`` in H and the
``r_i`` canonical right-coset representatives of H, alternately from A and
B.  A representative has zero central head and starts with a torsion
syllable (a^r in A, b^r in B), so any H-part produced during a product is
absorbed leftward into the head.  Two elements are equal iff their fields
are equal; this is the solution of the word problem.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .factors import FactorElem, HElem, RootError
from .words import GroupParams, Word, format_syllable, parse


@dataclass(frozen=True)
class GElem:
    params: GroupParams
    head: HElem = field(default_factory=HElem)
    reps: Tuple[FactorElem, ...] = ()

    @classmethod
    def identity(cls, params: GroupParams) -> "GElem":
        return cls(params)

    @classmethod
    def from_factor(cls, z: FactorElem, params: GroupParams) -> "GElem":
        h, r = z.split()
        return cls(params, h, () if r.is_identity() else (r,))

    @classmethod
    def from_h(cls, h: HElem, params: GroupParams) -> "GElem":
        return cls(params, h)

    def __mul__(self, other: "GElem") -> "GElem":
        return multiply(self, other)

    def __invert__(self) -> "GElem":
        return invert(self)

    def __pow__(self, k: int) -> "GElem":
        result = GElem.identity(self.params)
        base = self if k >= 0 else invert(self)
        k = abs(k)
        while k:
            if k & 1:
                result = multiply(result, base)
            k >>= 1
            if k:
                base = multiply(base, base)
        return result

    def conj(self, w: "GElem") -> "GElem":
        """w^-1 * self * w."""
        return invert(w) * self * w

    def is_identity(self) -> bool:
        return self.head.is_identity() and not self.reps

    def in_h(self) -> bool:
        return not self.reps

    def side(self) -> Optional[str]:
        """'A' or 'B' for elements of a single vertex group outside H, else None."""
        return self.reps[0].side if len(self.reps) == 1 else None

    def in_factor(self, side: str) -> bool:
        return not self.reps or (len(self.reps) == 1 and self.reps[0].side == side)

    def to_factor(self, side: str) -> FactorElem:
        """The element as a FactorElem of A or B; it must lie in that factor."""
        if not self.in_factor(side):
            raise ValueError(f"{self} is not in {side}")
        order = self.params.m if side == "A" else self.params.n
        z = FactorElem.from_h(side, order, self.head)
        return z * self.reps[0] if self.reps else z

    def to_word(self) -> Word:
        w = self.head.to_word()
        for r in self.reps:
            w = w * Word(r.syllables)
        return w

    def __str__(self) -> str:
        return serialize(self)

    def __repr__(self) -> str:
        return f"GElem({serialize(self)!r}, m={self.params.m}, n={self.params.n})"


def serialize(g: GElem) -> str:
    parts = []
    if not g.head.is_identity():
        parts.append(str(g.head))
    for r in g.reps:
        parts.append(" ".join(format_syllable(x, e) for x, e in r.syllables))
    return " | ".join(parts) if parts else "1"


def _order(params: GroupParams, side: str) -> int:
    return params.m if side == "A" else params.n


def _prepend(y: FactorElem, head: HElem, stack: List[FactorElem]) -> HElem:
    # stack holds reps right-to-left: stack[-1] is the leftmost one.
    z = y * FactorElem.from_h(y.side, y.order, head)
    if stack and stack[-1].side == y.side:
        z = z * stack.pop()
    h, r = z.split()
    if not r.is_identity():
        stack.append(r)
    return h


def _build(params: GroupParams, head: HElem, stack: List[FactorElem]) -> GElem:
    return GElem(params, head, tuple(reversed(stack)))


def embed(w: Word | str, params: GroupParams) -> GElem:
    """Normal form of the word under a->a, b->b, c->a^m, d->b^n."""
    if isinstance(w, str):
        w = parse(w, params)
    head = HElem()
    stack: List[FactorElem] = []
    for letter, e in reversed(w.syllables):
        if letter == "c":
            head = head + HElem(e, 0)
        elif letter == "d":
            head = head + HElem(0, e)
        else:
            side = "A" if letter == "a" else "B"
            y = FactorElem.from_syllables(side, _order(params, side), [(letter, e)])
            head = _prepend(y, head, stack)
    return _build(params, head, stack)


def multiply(g1: GElem, g2: GElem) -> GElem:
    head = g2.head
    stack = list(reversed(g2.reps))
    for r in reversed(g1.reps):
        head = _prepend(r, head, stack)
    return _build(g1.params, g1.head + head, stack)


def invert(g: GElem) -> GElem:
    head = -g.head
    stack: List[FactorElem] = []
    for r in g.reps:
        head = _prepend(r.inverse(), head, stack)
    return _build(g.params, head, stack)


def length(g: GElem) -> int:
    # Reduced forms always have at least one factor, so l(1) = l(h) = 1.
    return max(1, len(g.reps))


def is_cyclically_reduced(g: GElem) -> bool:
    return len(g.reps) <= 1 or g.reps[0].side != g.reps[-1].side


def leading_block(g: GElem) -> GElem:
    """head * r_1: the first factor of the reduced form (for l(g) > 1)."""
    return GElem(g.params, g.head, g.reps[:1])


@dataclass(frozen=True)
class CyclicDecomposition:
    u: GElem
    v: GElem


def cyclic_decompose(g: GElem) -> CyclicDecomposition:
    """g = u * v * u^-1 with v cyclically reduced.

    Each step conjugates by the leading block of the current element, which
    drops at least one factor from the reduced form.
    """
    u = GElem.identity(g.params)
    v = g
    while not is_cyclically_reduced(v):
        x = leading_block(v)
        before = len(v.reps)
        v = v.conj(x)
        assert len(v.reps) < before
        u = u * x
    return CyclicDecomposition(u, v)


class HIntersection(enum.Enum):
    ALL_OF_H = "AllOfH"
    CYCLIC_C = "CyclicC"
    CYCLIC_D = "CyclicD"
    TRIVIAL = "Trivial"


def h_intersection(g: GElem) -> HIntersection:
    """Classify g^-1 H g ∩ H."""
    if not g.reps:
        return HIntersection.ALL_OF_H
    if len(g.reps) == 1:
        return HIntersection.CYCLIC_C if g.reps[0].side == "A" else HIntersection.CYCLIC_D
    return HIntersection.TRIVIAL


def root_in_factor(g: GElem, k: int, side: str) -> Tuple[GElem, GElem]:
    """For g outside the vertex group ``side`` with g^k inside it, return
    (x, y) with g = x^-1 y x, y in A or B, and y^k in H."""
    if k == 0:
        raise RootError("k must be nonzero")
    if g.in_factor(side):
        raise RootError(f"{g} already lies in {side}")
    if not (g ** k).in_factor(side):
        raise RootError(f"({g})^{k} does not lie in {side}")
    dec = cyclic_decompose(g)
    y = dec.v
    if length(y) > 1:
        raise RootError(f"{g} is not conjugate into a vertex group")
    if not (y ** k).in_h():
        raise RootError(f"({y})^{k} does not lie in H")
    return invert(dec.u), y


class NotCommutingError(ValueError):
    pass


def express_as_power(u: GElem, v: GElem) -> Tuple[GElem, int]:
    """Find a generator g of the cyclic group <u, v> and k with g^k = v.

    ``u`` must be cyclically reduced of length > 1 and commute with ``v``.
    The generator is u itself whenever v is a power of u, oriented so that
    u is a positive power of it.
    """
    if length(u) < 2 or not is_cyclically_reduced(u):
        raise ValueError(f"{u} is not cyclically reduced of length > 1")
    if u * v != v * u:
        raise NotCommutingError(f"{u} and {v} do not commute")
    # Euclid on reduced length: keep g1 the shorter element, orient g2 so
    # its first factor matches g1's, then strip g1 off the front of g2.
    g1, g2 = u, v
    while not g2.is_identity():
        if len(g2.reps) < len(g1.reps):
            g1, g2 = g2, g1
        if g2.reps[0].side != g1.reps[0].side:
            g2 = invert(g2)
        before = len(g2.reps)
        g2 = invert(g1) * g2
        if not g2.is_identity() and len(g2.reps) >= before:
            raise AssertionError("reduced length failed to drop; inputs do not span a cyclic group")
    gen = g1
    if len(u.reps) % len(gen.reps) or len(v.reps) % len(gen.reps):
        raise AssertionError("generator length does not divide the input lengths")
    j = len(u.reps) // len(gen.reps)
    if gen ** j != u:
        gen = invert(gen)
    if gen ** j != u:
        raise AssertionError("generator does not reproduce u")
    k = len(v.reps) // len(gen.reps)
    if gen ** k != v:
        k = -k
    if gen ** k != v:
        raise AssertionError("generator does not reproduce v")
    return gen, k
