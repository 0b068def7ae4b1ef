"""Check the defining relations of Aut G_mn on a list of (m, n) instances.

    python3 scripts/relation_suite.py --instances 2,3 3,3 4,6
"""

import argparse
import time
from dataclasses import dataclass, field
from typing import List, Tuple

from gmn import GroupParams
from gmn.aut_presentation import RELATIONS, applicable_relations, relation_holds


@dataclass
class Config:
    instances: List[Tuple[int, int]] = field(default_factory=lambda: [(2, 3), (2, 2), (3, 3), (2, 5)])


def parse_args() -> Config:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instances", nargs="+", default=None, help="m,n pairs")
    ns = ap.parse_args()
    cfg = Config()
    if ns.instances:
        cfg.instances = [tuple(int(x) for x in s.split(",")) for s in ns.instances]
    return cfg


def main() -> int:
    cfg = parse_args()
    failures = 0
    for m, n in cfg.instances:
        params = GroupParams(m, n)
        start = time.perf_counter()
        results = {k: relation_holds(k, params) for k in applicable_relations(params)}
        elapsed = time.perf_counter() - start
        failures += sum(not ok for ok in results.values())
        print(f"m={m} n={n}  ({elapsed * 1000:.1f} ms)")
        for k, ok in results.items():
            lhs, rhs = RELATIONS[k]
            rel = f"{lhs} = {rhs}".format(m=m, n=n)
            print(f"  {k:>2}. {rel:<24} {'holds' if ok else 'FAILS'}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
