"""Print the non-normality certificate of every non-inner coset
representative lambda^i mu^j eta^k, and spot-check random inner maps.

    python3 scripts/normal_certificates.py --instances 2,3 3,3 --inner 200
"""

import argparse
import random
from dataclasses import dataclass, field
from typing import List, Tuple

from gmn import GroupParams, embed
from gmn.automorphism import AutDecomposition, KappaPart, inner, recompose
from gmn.quotients import is_normal_automorphism
from gmn.words import Word


@dataclass
class Config:
    instances: List[Tuple[int, int]] = field(default_factory=lambda: [(2, 3), (2, 2), (3, 3), (2, 5)])
    inner: int = 100
    seed: int = 0


def parse_args() -> Config:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instances", nargs="+", default=None, help="m,n pairs")
    ap.add_argument("--inner", type=int, default=Config.inner, help="random inner maps per instance")
    ap.add_argument("--seed", type=int, default=Config.seed)
    ns = ap.parse_args()
    cfg = Config(inner=ns.inner, seed=ns.seed)
    if ns.instances:
        cfg.instances = [tuple(int(x) for x in s.split(",")) for s in ns.instances]
    return cfg


def random_element(rng: random.Random, params: GroupParams, letters: int = 16):
    syl = [(rng.choice("abcd"), rng.choice((-2, -1, 1, 2))) for _ in range(rng.randint(0, letters))]
    return embed(Word.of(*syl), params)


def main() -> int:
    cfg = parse_args()
    rng = random.Random(cfg.seed)
    bad = 0
    for m, n in cfg.instances:
        params = GroupParams(m, n)
        print(f"m={m} n={n}")
        for kappa in KappaPart.all(params):
            if kappa.is_trivial():
                continue
            phi = recompose(AutDecomposition(kappa, embed("1", params)))
            verdict = is_normal_automorphism(phi)
            ok = not verdict and verdict.certificate.verify(phi)
            bad += not ok
            print(f"  kappa={str(kappa):<6} not normal; {verdict.certificate}  [{'verified' if ok else 'UNVERIFIED'}]")
        normal = sum(bool(is_normal_automorphism(inner(random_element(rng, params)))) for _ in range(cfg.inner))
        bad += normal != cfg.inner
        print(f"  random inner maps judged normal: {normal}/{cfg.inner}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
