"""Exhaustive searches for simple algebras of type (n-1, l) over small prime fields.

Prints, per search, how many structures satisfy the type condition and how
many of them are simple, plus whether their operator spaces are abelian.
"""

import argparse
import time
from dataclasses import dataclass

from narylie.analysis import SIMPLE_CERTIFIED, commutator_defect, exhaustive_type_search


@dataclass
class SearchConfig:
    searches: tuple = ((2, 2, 2, 1, 1), (3, 2, 2, 1, 1), (2, 3, 2, 1, 1), (2, 3, 3, 2, 1), (2, 3, 3, 2, 2),
                       (2, 3, 2, 1, 0), (3, 2, 2, 1, 0), (2, 3, 3, 2, 0))
    jobs: int = 1
    override_guards: bool = False


def run(cfg: SearchConfig):
    print(f"{'p':>2} {'dim':>3} {'n':>2} {'r':>2} {'l':>2} {'found':>6} {'simple':>6} {'abelian':>7} {'secs':>6}")
    for p, dim, n, r, l in cfg.searches:
        t0 = time.perf_counter()
        found = exhaustive_type_search(p, dim, n, r, l, override=cfg.override_guards, jobs=cfg.jobs)
        simple = sum(v.status == SIMPLE_CERTIFIED for _, v in found)
        abelian = sum(commutator_defect(mu).all_zero for mu, _ in found)
        print(f"{p:>2} {dim:>3} {n:>2} {r:>2} {l:>2} {len(found):>6} {simple:>6} {abelian:>7} "
              f"{time.perf_counter() - t0:>6.2f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--override-guards", action="store_true")
    a = ap.parse_args()
    run(SearchConfig(jobs=a.jobs, override_guards=a.override_guards))
