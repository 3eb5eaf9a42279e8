"""Example structures and seeded random generators.

Random generation is pinned for portability: ``random.Random(seed)`` is
CPython's MT19937 seeded by ``init_by_array`` over the 32-bit words of
``abs(seed)``.  Every coordinate is one ``getrandbits(32)`` draw ``x``,
mapped to ``x % p`` over GF(p) and to ``x % 7 - 3`` (an integer in
[-3, 3]) over Q.  Coordinates are drawn key by key (keys in lexicographic
order), coordinate 1 first.
"""

from __future__ import annotations

import random
from typing import Optional

from .altforms import AltForm, increasing_tuples
from .exterior import BilinearForm, ExteriorElement, FormError, structure_from_exterior
from .fields import QQ, Field

Q_RANGE = 3


def _draw(rng: random.Random, field: Field):
    x = rng.getrandbits(32)
    if field.characteristic == 0:
        return field(x % (2 * Q_RANGE + 1) - Q_RANGE)
    return field(x % field.characteristic)


def cross_product(field: Field = QQ) -> AltForm:
    """``mu(e1,e2) = e3, mu(e1,e3) = -e2, mu(e2,e3) = e1``."""
    return AltForm(3, 2, field, {(1, 2): (0, 0, 1), (1, 3): (0, -1, 0), (2, 3): (1, 0, 0)})


def heisenberg(field: Field = QQ) -> AltForm:
    """``mu(e1,e2) = e3``, all other brackets zero."""
    return AltForm(3, 2, field, {(1, 2): (0, 0, 1)})


def gen_top_form_filippov(n: int, form: Optional[BilinearForm] = None, field: Field = QQ) -> AltForm:
    """The n-ary structure on ``dim = n + 1`` induced by the top form ``e_1 ^ .. ^ e_{n+1}``."""
    if n < 2:
        raise ValueError("need n >= 2")
    if form is None:
        form = BilinearForm.identity(n + 1, field)
    if form.dim != n + 1:
        raise ValueError(f"form has dimension {form.dim}, need {n + 1}")
    return structure_from_exterior(ExteriorElement.top_form(n + 1, form.field), form)


def gen_random(n: int, dim: int, field: Field, seed: int) -> AltForm:
    rng = random.Random(seed)
    table = {key: tuple(_draw(rng, field) for _ in range(dim)) for key in increasing_tuples(dim, n)}
    return AltForm(dim, n, field, table)


def random_exterior(dim: int, degree: int, field: Field, rng: random.Random) -> ExteriorElement:
    """Homogeneous element with every monomial coefficient drawn as above."""
    return ExteriorElement(dim, field, {key: _draw(rng, field) for key in increasing_tuples(dim, degree)})


def random_form(dim: int, field: Field, rng: random.Random) -> BilinearForm:
    """Random symmetric non-degenerate form (upper triangle drawn row by row, redrawn until non-degenerate)."""
    while True:
        m = [[field.zero] * dim for _ in range(dim)]
        for i in range(dim):
            for j in range(i, dim):
                m[i][j] = m[j][i] = _draw(rng, field)
        try:
            return BilinearForm(dim, field, m)
        except FormError:
            continue
