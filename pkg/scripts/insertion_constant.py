"""Measure the sign c with mu(a_1..a_p, -) = c [a_1, .., [a_p, mu~]] for random exterior elements."""

import argparse
import random
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from narylie.exterior import partial_insertion_constant
from narylie.fields import QQ
from narylie.generators import random_exterior, random_form


@dataclass
class ConstantConfig:
    arities: tuple = (2, 3, 4)
    trials: int = 5
    seed: int = 0


def run(cfg: ConstantConfig):
    rng = random.Random(cfg.seed)
    for n in cfg.arities:
        dim = n + 1
        seen = {p: Counter() for p in range(n + 1)}
        for _ in range(cfg.trials):
            form = random_form(dim, QQ, rng)
            mt = random_exterior(dim, n + 1, QQ, rng)
            for p in range(n + 1):
                for a in combinations(range(1, dim + 1), p):
                    c = partial_insertion_constant(mt, form, a, n)
                    if c is not None:
                        seen[p][int(c)] += 1
        for p, counts in seen.items():
            print(f"n={n} p={p}: observed {dict(counts)}, (-1)^(p(n-p)) = {(-1) ** (p * (n - p))}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    run(ConstantConfig(trials=a.trials, seed=a.seed))
