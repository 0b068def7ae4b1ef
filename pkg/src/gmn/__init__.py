"""Exact arithmetic and automorphisms for G_mn = <a, b; [a^m, b^n] = 1>."""

from .amalgam import (
    CyclicDecomposition,
    GElem,
    HIntersection,
    cyclic_decompose,
    embed,
    express_as_power,
    h_intersection,
    invert,
    is_cyclically_reduced,
    length,
    multiply,
    root_in_factor,
)
from .aut_presentation import AutCanonical, AutWord, aut_words_equal, canonicalize, evaluate, parse_aut_word
from .automorphism import (
    AutDecomposition,
    AutMap,
    KappaPart,
    Rejection,
    RejectReason,
    abelianization_matrix,
    apply,
    compose,
    inner,
    is_automorphism,
    recompose,
)
from .factors import FactorElem, HElem
from .generation import ConjugatePowerForm, conjugate_power_forms, in_aD, in_bC, is_generating_pair_from_forms
from .quotients import FPElem, FPSpec, fp_conjugate, induced_map, is_normal_automorphism, non_inner_witness, project
from .words import GroupParams, ParseError, Word, free_reduce, invert_word, parse, serialize

__version__ = "0.1.0"
