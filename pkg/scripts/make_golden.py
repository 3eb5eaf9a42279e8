"""Regenerate the golden random-structure files under tests/data."""

from pathlib import Path

from narylie.fields import GF, QQ
from narylie.fileformat import AlgebraFile, serialize_algebra
from narylie.generators import gen_random

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"
GOLDEN = {
    "golden_random_n3_d3_F5_s1.alg": (3, 3, GF(5), 1),
    "golden_random_n2_d3_Q_s7.alg": (2, 3, QQ, 7),
}

if __name__ == "__main__":
    for name, (n, dim, field, seed) in GOLDEN.items():
        text = serialize_algebra(AlgebraFile(gen_random(n, dim, field, seed)))
        (DATA / name).write_text(text)
        print(f"wrote {name}")
