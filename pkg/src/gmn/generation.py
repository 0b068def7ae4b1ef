"""Conjugate-power forms x^-1 a^k x, y^-1 b^l y and the generating-pair test."""

from __future__ import annotations

from dataclasses import dataclass

from .amalgam import GElem
from .factors import FactorElem, RootError, factor_root


class NotSatisfiableError(ValueError):
    """Inputs violate the hypotheses needed for a conjugate-power form."""


@dataclass(frozen=True)
class ConjugatePowerForm:
    x: GElem  # in A
    k: int
    y: GElem  # in B
    l: int

    def u(self) -> GElem:
        a = _letter("a", self.x.params)
        return (a ** self.k).conj(self.x)

    def v(self) -> GElem:
        b = _letter("b", self.y.params)
        return (b ** self.l).conj(self.y)


def _letter(letter: str, params) -> GElem:
    side = "A" if letter == "a" else "B"
    order = params.m if side == "A" else params.n
    return GElem.from_factor(FactorElem.from_syllables(side, order, [(letter, 1)]), params)


def conjugate_power_forms(u: GElem, v: GElem, r: int, s: int) -> ConjugatePowerForm:
    """Write u = x^-1 a^k x and v = y^-1 b^l y with x in A, y in B.

    Requires u in A \\ H, v in B \\ H and [u^r, v^s] = 1; then m | k*r and
    n | l*s.  The roots are extracted inside each vertex group's own
    amalgam (<a> *_<c> H, resp. H *_<d> <b>).
    """
    if r == 0 or s == 0:
        raise NotSatisfiableError("r and s must be nonzero")
    if u.side() != "A":
        raise NotSatisfiableError(f"{u} is not in A \\ H")
    if v.side() != "B":
        raise NotSatisfiableError(f"{v} is not in B \\ H")
    ur, vs = u ** r, v ** s
    if ur * vs != vs * ur:
        raise NotSatisfiableError(f"[u^{r}, v^{s}] != 1")
    if not ur.in_h() or not vs.in_h():
        raise NotSatisfiableError("u^r or v^s lies outside H")
    params = u.params
    try:
        xa, k = factor_root(u.to_factor("A"), r)
        yb, l = factor_root(v.to_factor("B"), s)
    except RootError as exc:
        raise NotSatisfiableError(str(exc)) from exc
    form = ConjugatePowerForm(GElem.from_factor(xa, params), k, GElem.from_factor(yb, params), l)
    if form.u() != u or form.v() != v:
        raise AssertionError("conjugate-power form does not recompose")
    return form


def in_aD(x: GElem) -> bool:
    """x = a^p d^q for some p, q (x must lie in A)."""
    if not x.in_factor("A"):
        raise ValueError(f"{x} is not in A")
    return _torsion_then_free(x.to_factor("A"))


def in_bC(y: GElem) -> bool:
    """y = b^r c^s for some r, s (y must lie in B)."""
    if not y.in_factor("B"):
        raise ValueError(f"{y} is not in B")
    return _torsion_then_free(y.to_factor("B"))


def _torsion_then_free(z: FactorElem) -> bool:
    # t^p f^q normalizes to central^(p div order) [t^(p mod order)] [f^q]
    letters = [x for x, _ in z.syllables]
    return letters in ([], [z.torsion], [z.free], [z.torsion, z.free])


def is_generating_pair_from_forms(f: ConjugatePowerForm) -> bool:
    return abs(f.k) == 1 and abs(f.l) == 1 and in_aD(f.x) and in_bC(f.y)
