"""Endomorphisms of G_mn given by generator images, and the automorphism
decision procedure with its canonical factorization phi = kappa * inn_w.

Maps compose left to right: ``compose(phi, psi)`` applies phi first, and
``inner(w)`` is g -> w^-1 g w, so inner(w) then inner(v) is inner(w v).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Tuple

from .amalgam import (
    GElem,
    cyclic_decompose,
    embed,
    is_cyclically_reduced,
    leading_block,
    length,
)
from .factors import HElem
from .generation import NotSatisfiableError, conjugate_power_forms, is_generating_pair_from_forms
from .words import GroupParams, Word, parse

Matrix = Tuple[Tuple[int, int], Tuple[int, int]]


@dataclass(frozen=True)
class AutMap:
    image_a: GElem
    image_b: GElem
    params: GroupParams

    def __call__(self, g: GElem) -> GElem:
        return apply(self, g)

    def preserves_relator(self) -> bool:
        um = self.image_a ** self.params.m
        vn = self.image_b ** self.params.n
        return um * vn == vn * um

    def then(self, other: "AutMap") -> "AutMap":
        return compose(self, other)

    def __str__(self) -> str:
        return f"a -> {self.image_a}; b -> {self.image_b}"


def apply(phi: AutMap, g: GElem) -> GElem:
    p = phi.params
    images = {
        "a": phi.image_a,
        "b": phi.image_b,
        "c": phi.image_a ** p.m,
        "d": phi.image_b ** p.n,
    }
    result = GElem.identity(p)
    for letter, e in g.to_word():
        result = result * images[letter] ** e
    return result


def compose(phi: AutMap, psi: AutMap) -> AutMap:
    """phi first, then psi."""
    return AutMap(apply(psi, phi.image_a), apply(psi, phi.image_b), phi.params)


def identity_map(params: GroupParams) -> AutMap:
    return AutMap(embed("a", params), embed("b", params), params)


def inner(w: GElem) -> AutMap:
    p = w.params
    return AutMap(embed("a", p).conj(w), embed("b", p).conj(w), p)


def lambda_map(params: GroupParams) -> AutMap:
    return AutMap(embed("a^-1", params), embed("b", params), params)


def mu_map(params: GroupParams) -> AutMap:
    return AutMap(embed("a", params), embed("b^-1", params), params)


def nu_map(params: GroupParams) -> AutMap:
    return AutMap(embed("a^-1", params), embed("b^-1", params), params)


def eta_map(params: GroupParams) -> AutMap:
    if not params.symmetric:
        raise ValueError("a <-> b is an automorphism only when m = n")
    return AutMap(embed("b", params), embed("a", params), params)


def exponent_sums(g: GElem) -> Tuple[int, int]:
    p = g.params
    sa = sb = 0
    for letter, e in g.to_word():
        if letter == "a":
            sa += e
        elif letter == "b":
            sb += e
        elif letter == "c":
            sa += p.m * e
        else:
            sb += p.n * e
    return sa, sb


def abelianization_matrix(phi: AutMap) -> Matrix:
    """Rows are the exponent sums (in a, b) of the images of a and b."""
    return exponent_sums(phi.image_a), exponent_sums(phi.image_b)


def determinant(mat: Matrix) -> int:
    (p, q), (r, s) = mat
    return p * s - q * r


@dataclass(frozen=True)
class KappaPart:
    """lambda^eps_lambda mu^eps_mu eta^eps_eta, in that order."""

    eps_lambda: int = 0
    eps_mu: int = 0
    eps_eta: int = 0

    def is_trivial(self) -> bool:
        return not (self.eps_lambda or self.eps_mu or self.eps_eta)

    def letters(self) -> str:
        return ",".join(x for x, e in zip("LME", (self.eps_lambda, self.eps_mu, self.eps_eta)) if e)

    def __str__(self) -> str:
        return self.letters() or "1"

    @staticmethod
    def all(params: GroupParams) -> list["KappaPart"]:
        etas = (0, 1) if params.symmetric else (0,)
        return [KappaPart(l, m, e) for e in etas for m in (0, 1) for l in (0, 1)]


def kappa_map(kappa: KappaPart, params: GroupParams) -> AutMap:
    if kappa.eps_eta and not params.symmetric:
        raise ValueError("eta component requires m = n")
    # lambda and mu only flip signs, so the images can be written directly.
    sa = -1 if kappa.eps_lambda else 1
    sb = -1 if kappa.eps_mu else 1
    x, y = ("b", "a") if kappa.eps_eta else ("a", "b")
    return AutMap(embed(f"{x}^{sa}", params), embed(f"{y}^{sb}", params), params)


@dataclass(frozen=True)
class AutDecomposition:
    kappa: KappaPart
    w: GElem

    def __str__(self) -> str:
        return f"kappa={self.kappa}; inner={self.w}"


def recompose(d: AutDecomposition) -> AutMap:
    return compose(kappa_map(d.kappa, d.w.params), inner(d.w))


class RejectReason(enum.Enum):
    NOT_ENDOMORPHISM = "[a^m, b^n] is not mapped to 1"
    ABELIANIZATION = "abelianization matrix is not unimodular"
    IMAGE_A_NOT_IN_FACTOR = "image of a is not conjugate into a vertex group"
    IMAGE_IN_H = "an image is conjugate into H"
    IMAGES_IN_SAME_FACTOR = "both images lie in one vertex group after conjugation"
    IMAGE_B_CYCLICALLY_REDUCED = "image of b is cyclically reduced of length > 1"
    CONJUGATOR_LEAVES_FACTOR = "image of b is conjugated by an element starting outside the factor of the image of a"
    FACTOR_SWAP_NEEDS_M_EQ_N = "a lands in B and b in A, which needs m = n"
    NO_CONJUGATE_POWER_FORM = "images are not conjugates of powers of a and b"
    NOT_GENERATING = "images do not generate"


@dataclass(frozen=True)
class Rejection:
    reason: RejectReason
    detail: str = ""

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        text = f"rejected: {self.reason.name.lower()}: {self.reason.value}"
        return f"{text} ({self.detail})" if self.detail else text


def _as_gelem(x: GElem | Word | str, params: GroupParams) -> GElem:
    if isinstance(x, GElem):
        return x
    if isinstance(x, str):
        x = parse(x, params)
    return embed(x, params)


def is_automorphism(
    u: GElem | Word | str, v: GElem | Word | str, params: GroupParams
) -> AutDecomposition | Rejection:
    """Decide whether a -> u, b -> v defines an automorphism of G_mn.

    Returns the unique decomposition (kappa, w) with phi = kappa then
    inn_w, or a Rejection naming the step that excludes the pair.  An
    accepted pair is a surjective endomorphism, hence an automorphism since
    G_mn is Hopfian.
    """
    u, v = _as_gelem(u, params), _as_gelem(v, params)
    phi = AutMap(u, v, params)
    if not phi.preserves_relator():
        return Rejection(RejectReason.NOT_ENDOMORPHISM)
    det = determinant(abelianization_matrix(phi))
    if abs(det) != 1:
        return Rejection(RejectReason.ABELIANIZATION, f"determinant {det}")

    # conj accumulates W with the current images equal to W^-1 (.) W.
    dec = cyclic_decompose(u)
    conj = dec.u
    u, v = dec.v, v.conj(conj)
    if length(u) > 1:
        return Rejection(RejectReason.IMAGE_A_NOT_IN_FACTOR, f"cyclic core {u}")
    if u.in_h():
        return Rejection(RejectReason.IMAGE_IN_H, f"image of a is conjugate to {u}")
    side = u.side()
    while length(v) > 1:
        if is_cyclically_reduced(v):
            return Rejection(RejectReason.IMAGE_B_CYCLICALLY_REDUCED, str(v))
        if v.reps[0].side != side:
            return Rejection(RejectReason.CONJUGATOR_LEAVES_FACTOR, str(v))
        x = leading_block(v)
        u, v = u.conj(x), v.conj(x)
        conj = conj * x
    if v.in_h():
        return Rejection(RejectReason.IMAGE_IN_H, f"image of b is conjugate to {v}")
    if v.side() == side:
        return Rejection(RejectReason.IMAGES_IN_SAME_FACTOR, f"{u}; {v}")

    swapped = side == "B"
    if swapped:
        if not params.symmetric:
            return Rejection(RejectReason.FACTOR_SWAP_NEEDS_M_EQ_N)
        eta = eta_map(params)
        u, v = eta(u), eta(v)

    try:
        form = conjugate_power_forms(u, v, params.m, params.n)
    except NotSatisfiableError as exc:
        return Rejection(RejectReason.NO_CONJUGATE_POWER_FORM, str(exc))
    if not is_generating_pair_from_forms(form):
        return Rejection(RejectReason.NOT_GENERATING, f"k={form.k}, l={form.l}, x={form.x}, y={form.y}")

    # Now u = d^-q a^k d^q and v = c^-s b^l c^s; conjugating by c^-s d^-q
    # gives a^k, b^l because c commutes with a and d with b.
    q = _free_exponent(form.x, "A")
    s = _free_exponent(form.y, "B")
    w0 = GElem.from_h(HElem(-s, -q), params)
    if swapped:
        w0 = eta_map(params)(w0)
    kappa = KappaPart(int(form.k < 0), int(form.l < 0), int(swapped))
    decomposition = AutDecomposition(kappa, ~(conj * w0))
    if recompose(decomposition) != phi:
        raise AssertionError(f"decomposition {decomposition} does not recompose to {phi}")
    return decomposition


def _free_exponent(x: GElem, side: str) -> int:
    z = x.to_factor(side)
    return sum(e for letter, e in z.syllables if letter == z.free)
