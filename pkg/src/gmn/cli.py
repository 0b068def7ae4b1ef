"""Command line front end.

    gmn --m 2 --n 3 eq "[a^2,b^3]" 1
    gmn --m 2 --n 3 is-auto "a^-1" b
    gmn --m 2 --n 3 --json is-normal "a^-1" b

Exit status: 0 for success or a true verdict, 1 for a false verdict,
2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .amalgam import (
    NotCommutingError,
    cyclic_decompose,
    embed,
    express_as_power,
    h_intersection,
    length,
)
from .aut_presentation import EtaNotAllowedError, aut_words_equal, canonicalize, parse_aut_word
from .automorphism import AutMap, is_automorphism
from .quotients import NotAnAutomorphismError, fp_conjugate, is_normal_automorphism, project
from .words import ExponentOverflowError, GroupParams, ParseError, parse

Result = Tuple[int, List[str], Dict[str, Any]]


class UsageError(Exception):
    pass


def _g(text: str, params: GroupParams):
    return embed(parse(text, params), params)


def cmd_nf(p: GroupParams, w: str) -> Result:
    g = _g(w, p)
    return 0, [str(g)], {"nf": str(g)}


def cmd_eq(p: GroupParams, w1: str, w2: str) -> Result:
    equal = _g(w1, p) == _g(w2, p)
    return (0 if equal else 1), ["equal" if equal else "not equal"], {"equal": equal}


def cmd_len(p: GroupParams, w: str) -> Result:
    n = length(_g(w, p))
    return 0, [str(n)], {"length": n}


def cmd_cyc(p: GroupParams, w: str) -> Result:
    dec = cyclic_decompose(_g(w, p))
    return 0, [f"u: {dec.u}", f"v: {dec.v}"], {"u": str(dec.u), "v": str(dec.v)}


def cmd_hint(p: GroupParams, w: str) -> Result:
    cls = h_intersection(_g(w, p)).value
    return 0, [cls], {"h_intersection": cls}


def cmd_power(p: GroupParams, u: str, v: str) -> Result:
    try:
        gen, k = express_as_power(_g(u, p), _g(v, p))
    except NotCommutingError as exc:
        return 1, [f"no: {exc}"], {"ok": False, "reason": str(exc)}
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return 0, [f"generator: {gen}", f"k: {k}"], {"ok": True, "generator": str(gen), "k": k}


def cmd_is_auto(p: GroupParams, u: str, v: str) -> Result:
    verdict = is_automorphism(parse(u, p), parse(v, p), p)
    if not verdict:
        data = {"automorphism": False, "reason": verdict.reason.name.lower(), "detail": verdict.detail}
        return 1, [str(verdict)], data
    data = {"automorphism": True, "kappa": str(verdict.kappa), "inner": str(verdict.w)}
    return 0, [str(verdict)], data


def cmd_aut_canon(p: GroupParams, w: str) -> Result:
    c = canonicalize(parse_aut_word(w), p)
    return 0, [str(c)], {"kappa": str(c.kappa), "inner": str(c.g)}


def cmd_aut_eq(p: GroupParams, w1: str, w2: str) -> Result:
    equal = aut_words_equal(parse_aut_word(w1), parse_aut_word(w2), p)
    return (0 if equal else 1), ["equal" if equal else "not equal"], {"equal": equal}


def cmd_is_normal(p: GroupParams, u: str, v: str) -> Result:
    phi = AutMap(_g(u, p), _g(v, p), p)
    try:
        verdict = is_normal_automorphism(phi)
    except NotAnAutomorphismError as exc:
        raise UsageError(f"not an automorphism: {exc}") from exc
    dec = verdict.decomposition
    data: Dict[str, Any] = {"normal": verdict.normal, "kappa": str(dec.kappa), "inner": str(dec.w)}
    if verdict.normal:
        return 0, [f"normal (inner): {dec}"], data
    cert = verdict.certificate
    data["certificate"] = {"quotient": cert.which, "text": str(cert), "kind": type(cert).__name__}
    return 1, [f"not normal: {dec}", f"certificate: {cert}"], data


def _which(which: str) -> str:
    if which not in ("M", "N"):
        raise UsageError(f"quotient must be M or N, got {which!r}")
    return which


def cmd_q_nf(p: GroupParams, which: str, w: str) -> Result:
    e = project(_g(w, p), _which(which))
    return 0, [str(e)], {"nf": str(e)}


def cmd_q_conj(p: GroupParams, which: str, w1: str, w2: str) -> Result:
    which = _which(which)
    conj = fp_conjugate(project(_g(w1, p), which), project(_g(w2, p), which))
    return (0 if conj else 1), ["conjugate" if conj else "not conjugate"], {"conjugate": conj}


COMMANDS = {
    "nf": (cmd_nf, ["w"], "normal form of a word"),
    "eq": (cmd_eq, ["w1", "w2"], "decide whether two words are equal in G"),
    "len": (cmd_len, ["w"], "length in the amalgam"),
    "cyc": (cmd_cyc, ["w"], "w = u v u^-1 with v cyclically reduced"),
    "hint": (cmd_hint, ["w"], "classify w^-1 H w ∩ H"),
    "power": (cmd_power, ["u", "v"], "write v as a power in the cyclic group <u, v>"),
    "is-auto": (cmd_is_auto, ["u", "v"], "is a -> u, b -> v an automorphism?"),
    "aut-canon": (cmd_aut_canon, ["w"], "canonical form of a word in L, M, E, A, B"),
    "aut-eq": (cmd_aut_eq, ["w1", "w2"], "equality of two automorphism words"),
    "is-normal": (cmd_is_normal, ["u", "v"], "is the automorphism a -> u, b -> v normal?"),
    "q-nf": (cmd_q_nf, ["which", "w"], "normal form in G/M or G/N"),
    "q-conj": (cmd_q_conj, ["which", "w1", "w2"], "conjugacy in G/M or G/N"),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gmn", description="Normal forms and automorphisms of <a, b; [a^m, b^n] = 1>.")
    parser.add_argument("--m", type=int, required=True)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, args, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        for arg in args:
            sp.add_argument(arg)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        ns = build_parser().parse_args(argv)
        try:
            params = GroupParams(ns.m, ns.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        func, args, _ = COMMANDS[ns.command]
        code, lines, data = func(params, *(getattr(ns, a) for a in args))
    except (UsageError, ParseError, ExponentOverflowError, EtaNotAllowedError) as exc:
        print(f"gmn: error: {exc}", file=err)
        return 2
    if ns.json:
        print(json.dumps({"command": ns.command, "exit": code, **data}), file=out)
    else:
        for line in lines:
            print(line, file=out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
