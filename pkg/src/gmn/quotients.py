"""The quotients G/M = C_m * Z and G/N = Z * C_n, where M and N are the
normal closures of a^m and b^n.

Elements of a free product of two cyclic groups <x> * <y> are alternating
syllable sequences; a finite factor keeps its exponents in [1, order-1].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .amalgam import GElem, embed
from .automorphism import AutDecomposition, AutMap, is_automorphism
from .words import GroupParams

FPSyllable = Tuple[str, int]


@dataclass(frozen=True)
class FPSpec:
    """Orders of x and y; 0 means infinite."""

    order_x: int
    order_y: int

    def order(self, letter: str) -> int:
        return self.order_x if letter == "x" else self.order_y

    @classmethod
    def for_quotient(cls, which: str, params: GroupParams) -> "FPSpec":
        if which == "M":
            return cls(params.m, 0)
        if which == "N":
            return cls(0, params.n)
        raise ValueError(f"quotient must be M or N, got {which!r}")


def _push(spec: FPSpec, out: List[FPSyllable], letter: str, e: int) -> None:
    order = spec.order(letter)
    if out and out[-1][0] == letter:
        e += out.pop()[1]
    if order:
        e %= order
    if e:
        out.append((letter, e))


@dataclass(frozen=True)
class FPElem:
    spec: FPSpec
    syllables: Tuple[FPSyllable, ...] = ()

    @classmethod
    def of(cls, spec: FPSpec, syllables) -> "FPElem":
        out: List[FPSyllable] = []
        for letter, e in syllables:
            _push(spec, out, letter, e)
        return cls(spec, tuple(out))

    def __mul__(self, other: "FPElem") -> "FPElem":
        out = list(self.syllables)
        for letter, e in other.syllables:
            _push(self.spec, out, letter, e)
        return FPElem(self.spec, tuple(out))

    def __invert__(self) -> "FPElem":
        return FPElem.of(self.spec, [(x, -e) for x, e in reversed(self.syllables)])

    def __pow__(self, k: int) -> "FPElem":
        result = FPElem(self.spec)
        base = self if k >= 0 else ~self
        for _ in range(abs(k)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return not self.syllables

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        return " ".join(x if e == 1 else f"{x}^{e}" for x, e in self.syllables)


def fp_generator(letter: str, spec: FPSpec) -> FPElem:
    return FPElem.of(spec, [(letter, 1)])


def project(g: GElem, which: str) -> FPElem:
    """Image of g in G/M (which='M') or G/N (which='N')."""
    p = g.params
    spec = FPSpec.for_quotient(which, p)
    images = {"a": ("x", 1), "b": ("y", 1), "c": ("x", p.m), "d": ("y", p.n)}
    out: List[FPSyllable] = []
    for letter, e in g.to_word():
        x, scale = images[letter]
        _push(spec, out, x, e * scale)
    return FPElem(spec, tuple(out))


def cyclically_reduce(e: FPElem) -> FPElem:
    syl = list(e.syllables)
    while len(syl) >= 2 and syl[0][0] == syl[-1][0]:
        # conjugate the last syllable round to the front
        last = syl.pop()
        rest, syl = syl, [last]
        for x, k in rest:
            _push(e.spec, syl, x, k)
    return FPElem(e.spec, tuple(syl))


def fp_conjugate(e1: FPElem, e2: FPElem) -> bool:
    """Conjugacy in a free product of two cyclic groups."""
    c1, c2 = cyclically_reduce(e1).syllables, cyclically_reduce(e2).syllables
    if len(c1) != len(c2):
        return False
    if len(c1) <= 1:
        # factors are abelian, and distinct factors meet trivially
        return c1 == c2
    return any(c1[i:] + c1[:i] == c2 for i in range(len(c1)))


def induced_map(phi: AutMap, which: str) -> Optional[Tuple[FPElem, FPElem]]:
    """Images of x, y under the map induced on G/M or G/N, if phi preserves
    the kernel; None otherwise."""
    p = phi.params
    killed = phi.image_a ** p.m if which == "M" else phi.image_b ** p.n
    if not project(killed, which).is_identity():
        return None
    return project(phi.image_a, which), project(phi.image_b, which)


class IllDefinedImagesError(ValueError):
    pass


def non_inner_witness(images: Tuple[FPElem, FPElem], spec: FPSpec) -> Optional[str]:
    """A generator ('x' or 'y') whose image is not conjugate to it.

    Inner automorphisms send every element to a conjugate, so a witness
    proves the map is not inner.  None makes no claim either way.
    """
    for letter, image in zip("xy", images):
        order = spec.order(letter)
        if order and not (image ** order).is_identity():
            raise IllDefinedImagesError(f"image {image} of {letter} has order not dividing {order}")
    for letter, image in zip("xy", images):
        if not fp_conjugate(image, fp_generator(letter, spec)):
            return letter
    return None


@dataclass(frozen=True)
class OrderObstruction:
    """phi does not preserve M: the image of a^m survives in G/M.

    In G/M the element aM has order m and bM has infinite order, so no
    automorphism of G/M can exchange them.
    """

    which: str
    survivor: FPElem

    def verify(self, phi: AutMap) -> bool:
        p = phi.params
        killed = phi.image_a ** p.m if self.which == "M" else phi.image_b ** p.n
        return project(killed, self.which) == self.survivor and not self.survivor.is_identity()

    def __str__(self) -> str:
        return f"quotient {self.which}: image of the killed power survives as {self.survivor}; the map induces no automorphism of G/{self.which}"


@dataclass(frozen=True)
class ConjugacyWitness:
    """The induced map on G/which sends a generator to a non-conjugate.

    So the induced automorphism is not inner; a non-inner automorphism of a
    nontrivial free product is not normal, hence neither is phi.
    """

    which: str
    generator: str
    image: FPElem

    def verify(self, phi: AutMap) -> bool:
        images = induced_map(phi, self.which)
        if images is None:
            return False
        image = images[0] if self.generator == "x" else images[1]
        spec = FPSpec.for_quotient(self.which, phi.params)
        return image == self.image and not fp_conjugate(image, fp_generator(self.generator, spec))

    def __str__(self) -> str:
        return f"quotient {self.which}: {self.generator} -> {self.image}, which is not conjugate to {self.generator}"


Certificate = OrderObstruction | ConjugacyWitness


@dataclass(frozen=True)
class NormalityVerdict:
    normal: bool
    decomposition: AutDecomposition
    certificate: Optional[Certificate] = None

    def __bool__(self) -> bool:
        return self.normal


class NotAnAutomorphismError(ValueError):
    pass


def is_normal_automorphism(phi: AutMap) -> NormalityVerdict:
    """An automorphism is normal iff it is inner; non-inner ones get a
    certificate from the quotients G/M and G/N."""
    dec = is_automorphism(phi.image_a, phi.image_b, phi.params)
    if not dec:
        raise NotAnAutomorphismError(str(dec))
    if dec.kappa.is_trivial():
        return NormalityVerdict(True, dec)
    cert = _certificate(phi, dec)
    if cert is None or not cert.verify(phi):
        raise AssertionError(f"no verified certificate for {dec}")
    return NormalityVerdict(False, dec, cert)


def _certificate(phi: AutMap, dec: AutDecomposition) -> Optional[Certificate]:
    kappa = dec.kappa
    if kappa.eps_eta:
        survivor = project(phi.image_a ** phi.params.m, "M")
        return OrderObstruction("M", survivor)
    # mu and nu flip bM; lambda alone flips aN.  The generic search is a
    # fallback that the K-part never needs.
    preferred = [("M", "y"), ("N", "x")] if kappa.eps_mu else [("N", "x"), ("M", "y")]
    for which, letter in preferred:
        images = induced_map(phi, which)
        if images is None:
            continue
        image = images[0] if letter == "x" else images[1]
        spec = FPSpec.for_quotient(which, phi.params)
        if not fp_conjugate(image, fp_generator(letter, spec)):
            return ConjugacyWitness(which, letter, image)
    for which in ("M", "N"):
        images = induced_map(phi, which)
        if images is None:
            continue
        letter = non_inner_witness(images, FPSpec.for_quotient(which, phi.params))
        if letter is not None:
            return ConjugacyWitness(which, letter, images[0] if letter == "x" else images[1])
    return None


def quotient_elem(text: str, which: str, params: GroupParams) -> FPElem:
    return project(embed(text, params), which)
