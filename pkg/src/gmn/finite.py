"""Homomorphisms of G_mn onto permutation groups.

a -> p, b -> q is a homomorphism whenever p^m and q^n commute.  These give
an oracle for the word problem that shares no code with the normal forms,
and witnesses that a pair of elements fails to generate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from .amalgam import GElem
from .words import GroupParams, Word

Perm = Tuple[int, ...]


def perm_mul(p: Perm, q: Perm) -> Perm:
    """p then q (right action, matching words read left to right)."""
    return tuple(q[i] for i in p)


def perm_inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def perm_pow(p: Perm, k: int) -> Perm:
    result = tuple(range(len(p)))
    base = p if k >= 0 else perm_inv(p)
    k = abs(k)
    while k:
        if k & 1:
            result = perm_mul(result, base)
        base = perm_mul(base, base)
        k >>= 1
    return result


@dataclass(frozen=True)
class PermRep:
    params: GroupParams
    p: Perm
    q: Perm

    @property
    def degree(self) -> int:
        return len(self.p)

    def image(self, w: Word | GElem) -> Perm:
        if isinstance(w, GElem):
            w = w.to_word()
        m, n = self.params.m, self.params.n
        gens = {"a": (self.p, 1), "b": (self.q, 1), "c": (self.p, m), "d": (self.q, n)}
        result = tuple(range(self.degree))
        for letter, e in w:
            base, scale = gens[letter]
            result = perm_mul(result, perm_pow(base, e * scale))
        return result


def is_homomorphism(params: GroupParams, p: Perm, q: Perm) -> bool:
    pm, qn = perm_pow(p, params.m), perm_pow(q, params.n)
    return perm_mul(pm, qn) == perm_mul(qn, pm)


def random_rep(params: GroupParams, degree: int, rng: random.Random, nontrivial: bool = True) -> PermRep:
    """A random homomorphism to S_degree; with ``nontrivial`` the relator
    powers p^m, q^n are not both the identity (so the map sees more than a
    free product of cyclic groups) whenever such a pair is found quickly."""
    ident = tuple(range(degree))
    fallback = None
    for _ in range(2000):
        p = tuple(rng.sample(range(degree), degree))
        q = tuple(rng.sample(range(degree), degree))
        if not is_homomorphism(params, p, q):
            continue
        if not nontrivial or perm_pow(p, params.m) != ident or perm_pow(q, params.n) != ident:
            return PermRep(params, p, q)
        fallback = fallback or PermRep(params, p, q)
    if fallback is None:
        return PermRep(params, ident, ident)
    return fallback


def closure_size(gens: Sequence[Perm], limit: Optional[int] = None) -> int:
    """Order of the group generated by ``gens`` (breadth-first closure)."""
    if not gens:
        return 1
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = perm_mul(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
        if limit is not None and len(seen) > limit:
            break
    return len(seen)


def separates(rep: PermRep, elems: Iterable[GElem]) -> bool:
    """True if the images of ``elems`` generate a proper subgroup of the image of G."""
    images = [rep.image(g) for g in elems]
    full = closure_size([rep.p, rep.q])
    return closure_size(images, limit=full) < full


def find_separating_rep(
    elems: Sequence[GElem],
    rng: random.Random,
    degrees: Iterable[int] = (3, 4, 5, 6),
    tries: int = 40,
) -> Optional[PermRep]:
    """Search random permutation quotients for one in which ``elems`` do not generate."""
    params = elems[0].params
    for degree in degrees:
        for _ in range(tries):
            rep = random_rep(params, degree, rng, nontrivial=False)
            if separates(rep, elems):
                return rep
    return None
