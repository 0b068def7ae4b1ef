"""Words in the generators lambda, mu, eta, alpha, beta of Aut G_mn and their
canonical forms.

Letters are written ``L``, ``M``, ``E``, ``A``, ``B`` (alpha = inn(a),
beta = inn(b)).  A word is read left to right in the same order as
``automorphism.compose``.  The canonical form is a pair (kappa, g)
standing for kappa followed by inn(g); kappa is lambda^i mu^j eta^k.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Tuple

from .amalgam import GElem, embed
from .automorphism import AutMap, KappaPart, compose, eta_map, identity_map, inner, lambda_map, mu_map
from .words import GroupParams, ParseError

AUT_LETTERS = "LMEAB"

# Conjugation action of the finite generators on alpha^{+-1}, beta^{+-1}:
# x^-1 alpha x and x^-1 beta x for x = lambda, mu, eta.  From the defining
# relations 3-6 and 10, plus eta^-1 beta eta = alpha (from 8 and 10).
# Entries are (letter, sign): lambda^-1 alpha lambda = alpha^-1, etc.
ACTION = {
    "L": {"A": ("A", -1), "B": ("B", 1)},
    "M": {"A": ("A", 1), "B": ("B", -1)},
    "E": {"A": ("B", 1), "B": ("A", 1)},
}


class EtaNotAllowedError(ValueError):
    pass


@dataclass(frozen=True)
class AutWord:
    letters: Tuple[Tuple[str, int], ...] = ()

    @classmethod
    def of(cls, letters: Iterable[Tuple[str, int]]) -> "AutWord":
        out: list[Tuple[str, int]] = []
        for x, e in letters:
            if x not in AUT_LETTERS or e not in (1, -1):
                raise ValueError(f"bad letter {x}^{e}")
            if out and out[-1] == (x, -e):
                out.pop()
            else:
                out.append((x, e))
        return cls(tuple(out))

    def __mul__(self, other: "AutWord") -> "AutWord":
        return AutWord.of(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(x if e == 1 else f"{x}^-1" for x, e in self.letters)


_TOKEN = re.compile(r"\s*([LMEAB])(?:\^(-?\d+))?")


def parse_aut_word(text: str) -> AutWord:
    """``L M^-1 A B^-1`` style text; ``1`` is the empty word."""
    if text.strip() == "1":
        return AutWord()
    letters = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            raise ParseError(f"unexpected {text[pos:].strip()[:1]!r}", pos)
        e = int(match.group(2) or 1)
        letters.extend([(match.group(1), 1 if e > 0 else -1)] * abs(e))
        pos = match.end()
    return AutWord.of(letters)


def _check(w: AutWord, params: GroupParams) -> None:
    if not params.symmetric and any(x == "E" for x, _ in w.letters):
        raise EtaNotAllowedError("eta is only a generator when m = n")


def _kappa_times(kappa: KappaPart, letter: str) -> KappaPart:
    """kappa * letter in canonical form, using eta^2 = 1 and eta lambda eta = mu."""
    l, m, e = kappa.eps_lambda, kappa.eps_mu, kappa.eps_eta
    if letter == "E":
        return KappaPart(l, m, e ^ 1)
    # eta^e x = (eta^e x eta^-e) eta^e; conjugating by eta swaps lambda and mu.
    if e:
        letter = "M" if letter == "L" else "L"
    if letter == "L":
        return KappaPart(l ^ 1, m, e)
    return KappaPart(l, m ^ 1, e)


@dataclass(frozen=True)
class AutCanonical:
    kappa: KappaPart
    g: GElem

    def __str__(self) -> str:
        return f"kappa={self.kappa}; inner={self.g}"


def canonicalize(w: AutWord, params: GroupParams) -> AutCanonical:
    """Move every finite generator to the left and collect alpha, beta into
    an element of G (Inn G_mn is isomorphic to G since the centre is trivial)."""
    _check(w, params)
    kappa = KappaPart()
    g = GElem.identity(params)
    gens = {"A": embed("a", params), "B": embed("b", params)}
    for x, e in w.letters:
        if x in "AB":
            g = g * gens[x] ** e
            continue
        # inn(g) x = x inn(x(g)); letters L, M, E are involutions.
        kappa = _kappa_times(kappa, x)
        letters = []
        for y, s in g.to_word():
            # c = a^m, d = b^n are words in alpha, beta as well.
            base = {"a": ("A", 1), "b": ("B", 1), "c": ("A", params.m), "d": ("B", params.n)}[y]
            z, sign = ACTION[x][base[0]]
            letters.append((z, sign * s * base[1]))
        g = GElem.identity(params)
        for z, s in letters:
            g = g * gens[z] ** s
    return AutCanonical(kappa, g)


def aut_words_equal(w1: AutWord, w2: AutWord, params: GroupParams) -> bool:
    return canonicalize(w1, params) == canonicalize(w2, params)


def generator_map(letter: str, params: GroupParams) -> AutMap:
    if letter == "L":
        return lambda_map(params)
    if letter == "M":
        return mu_map(params)
    if letter == "E":
        return eta_map(params)
    return inner(embed(letter.lower(), params))


def evaluate(w: AutWord, params: GroupParams) -> AutMap:
    _check(w, params)
    phi = identity_map(params)
    cache = {}
    for x, e in w.letters:
        if (x, e) not in cache:
            gen = generator_map(x, params)
            if e == -1:
                # finite generators are involutions; alpha^-1 = inn(a^-1)
                gen = gen if x in "LME" else inner(embed(f"{x.lower()}^-1", params))
            cache[x, e] = gen
        phi = compose(phi, cache[x, e])
    return phi


# The defining relations, as pairs of words equal in Aut G_mn.  Relation 7
# depends on m and n; 8-10 need m = n.
RELATIONS = {
    1: ("L L", "1"),
    2: ("L M", "M L"),
    3: ("L^-1 A L", "A^-1"),
    4: ("L^-1 B L", "B"),
    5: ("M^-1 A M", "A"),
    6: ("M^-1 B M", "B^-1"),
    7: ("A^{m} B^{n}", "B^{n} A^{m}"),
    8: ("E E", "1"),
    9: ("E^-1 L E", "M"),
    10: ("E^-1 A E", "B"),
}


def relation_words(k: int, params: GroupParams) -> Tuple[AutWord, AutWord]:
    lhs, rhs = RELATIONS[k]
    fill = {"m": params.m, "n": params.n}
    return parse_aut_word(lhs.format(**fill)), parse_aut_word(rhs.format(**fill))


def applicable_relations(params: GroupParams) -> list[int]:
    return list(range(1, 11 if params.symmetric else 8))


def relation_holds(k: int, params: GroupParams) -> bool:
    """Check relation k as an equality of maps on both generators (mu^2 is
    folded into relation 1 separately)."""
    lhs, rhs = relation_words(k, params)
    ok = evaluate(lhs, params) == evaluate(rhs, params)
    if k == 1:
        ok = ok and evaluate(parse_aut_word("M M"), params) == identity_map(params)
    return ok
