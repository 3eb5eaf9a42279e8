"""Ideals, simplicity, the operator space of an n-ary algebra and exhaustive searches."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Optional, Sequence

from .altforms import AltForm, basis_vector, check_type, evaluate, increasing_tuples, insert_basis
from .fields import GF, PrimeField
from .linalg import ResourceGuardError, Subspace, enumerate_subspaces, mat_mul, mat_vec, rank

NOT_SIMPLE = "not_simple"
SIMPLE_CERTIFIED = "simple_certified"
UNKNOWN = "unknown"

DEFAULT_LINE_SEED = 20240101
RANDOM_LINES = 32
SEARCH_GUARD = 2**20


@dataclass(frozen=True)
class AnalysisVerdict:
    status: str
    method: str  # "exhaustive", "closure-heuristic" or "definition"
    witness: Optional[Subspace] = None

    def __str__(self):
        s = f"{self.status} ({self.method})"
        if self.witness is not None:
            s += f" witness {self.witness}"
        return s


def _check_space(mu: AltForm, W: Subspace):
    if W.dim != mu.dim or W.field != mu.field:
        raise ValueError("subspace and algebra live in different spaces")


def operator_matrices(mu: AltForm) -> dict[tuple, tuple]:
    """Matrices of ``mu(e_a..., -)`` for increasing ``(n-1)``-tuples ``a``; column ``j`` is the image of ``e_{j+1}``."""
    if mu.arity < 1:
        raise ValueError("operator space needs arity >= 1")
    out = {}
    for a in increasing_tuples(mu.dim, mu.arity - 1):
        D = insert_basis(mu, a)
        cols = [D.value((j,)) for j in range(1, mu.dim + 1)]
        out[a] = tuple(zip(*cols)) if cols else ()
    return out


def _is_ideal_ops(ops: Sequence, W: Subspace) -> bool:
    return all(W.contains(mat_vec(M, w)) for M in ops for w in W.basis)


def is_ideal(mu: AltForm, W: Subspace) -> bool:
    """Whether ``mu(V, .., V, W)`` lies in ``W``."""
    _check_space(mu, W)
    basis = [basis_vector(mu.dim, mu.field, i) for i in range(1, mu.dim + 1)]
    for a in increasing_tuples(mu.dim, mu.arity - 1):
        ea = [basis[i - 1] for i in a]
        for w in W.basis:
            if not W.contains(evaluate(mu, ea + [w])):
                return False
    return True


def ideal_closure(mu: AltForm, W: Subspace) -> Subspace:
    """Smallest ideal containing ``W``."""
    _check_space(mu, W)
    ops = list(operator_matrices(mu).values())
    while True:
        grown = Subspace.span(list(W.basis) + [mat_vec(M, w) for M in ops for w in W.basis], W.dim, W.field)
        if grown.dimension == W.dimension:
            return W
        W = grown


def _random_lines(mu: AltForm, count: int, seed: int) -> list[tuple]:
    rng = random.Random(seed)
    lines = []
    while len(lines) < count:
        v = tuple(mu.field(rng.randint(-3, 3)) for _ in range(mu.dim))
        if any(v):
            lines.append(v)
    return lines


def find_nontrivial_ideal(mu: AltForm, override: bool = False, seed: int = DEFAULT_LINE_SEED) -> AnalysisVerdict:
    """Search for a proper nonzero ideal.

    Over GF(p) the search is exhaustive over all subspaces, smallest dimension
    first, and an empty result certifies that none exists.  Over Q only ideal
    closures of coordinate lines and seeded random lines are tried; the
    smallest proper closure is returned, otherwise the verdict is ``unknown``.
    """
    dim, field = mu.dim, mu.field
    if dim <= 1:
        return AnalysisVerdict(NOT_SIMPLE, "definition")
    if isinstance(field, PrimeField):
        ops = list(operator_matrices(mu).values())
        for d in range(1, dim):
            for W in enumerate_subspaces(dim, field.p, d, override):
                if _is_ideal_ops(ops, W):
                    return AnalysisVerdict(NOT_SIMPLE, "exhaustive", W)
        return AnalysisVerdict(SIMPLE_CERTIFIED, "exhaustive")
    lines = [basis_vector(dim, field, i) for i in range(1, dim + 1)] + _random_lines(mu, RANDOM_LINES, seed)
    best = None
    for v in lines:
        W = ideal_closure(mu, Subspace.span([v], dim, field))
        if W.dimension < dim and (best is None or W.dimension < best.dimension):
            best = W
    if best is not None:
        return AnalysisVerdict(NOT_SIMPLE, "closure-heuristic", best)
    return AnalysisVerdict(UNKNOWN, "closure-heuristic")


def is_simple(mu: AltForm, override: bool = False, seed: int = DEFAULT_LINE_SEED) -> AnalysisVerdict:
    """Not 1-dimensional and without nontrivial ideals."""
    if mu.dim <= 1:
        return AnalysisVerdict(NOT_SIMPLE, "definition")
    return find_nontrivial_ideal(mu, override, seed)


def operator_space(mu: AltForm) -> Subspace:
    """Span in End(V) of the maps ``mu(a_1..a_{n-1}, -)``, matrices flattened row-major."""
    mats = operator_matrices(mu).values()
    return Subspace.span([tuple(x for row in M for x in row) for M in mats], mu.dim * mu.dim, mu.field)


@dataclass(frozen=True)
class CommutatorDefect:
    max_rank: int
    all_zero: bool


def commutator_defect(mu: AltForm) -> CommutatorDefect:
    """Commutators ``D1 D2 - D2 D1`` over pairs of basis operators of the operator space."""
    dim = mu.dim
    L = operator_space(mu)
    mats = [tuple(tuple(v[i * dim:(i + 1) * dim]) for i in range(dim)) for v in L.basis]
    max_rank = 0
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            AB = mat_mul(mats[i], mats[j])
            BA = mat_mul(mats[j], mats[i])
            B = [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(AB, BA)]
            max_rank = max(max_rank, rank(B, mu.field))
    return CommutatorDefect(max_rank, max_rank == 0)


def count_structures(p: int, dim: int, n: int) -> int:
    return p ** (comb(dim, n) * dim)


def structure_from_index(p: int, dim: int, n: int, index: int) -> AltForm:
    """The ``index``-th structure in lexicographic order of its flattened structure constants."""
    field = GF(p)
    keys = list(increasing_tuples(dim, n))
    digits = []
    for _ in range(len(keys) * dim):
        index, d = divmod(index, p)
        digits.append(d)
    digits.reverse()
    table = {key: tuple(digits[t * dim:(t + 1) * dim]) for t, key in enumerate(keys)}
    return AltForm(dim, n, field, table)


def _search_chunk(args):
    p, dim, n, r, l, override, start, stop = args
    out = []
    for idx in range(start, stop):
        mu = structure_from_index(p, dim, n, idx)
        if check_type(mu, r, l):
            out.append((mu, is_simple(mu, override)))
    return out


def exhaustive_type_search(p: int, dim: int, n: int, r: int, l: int, override: bool = False,
                           jobs: int = 1) -> list[tuple[AltForm, AnalysisVerdict]]:
    """All skew n-ary structures on GF(p)^dim of type (r, l), each with its simplicity verdict.

    Results follow lexicographic order of the flattened structure constants.
    """
    GF(p)
    total = count_structures(p, dim, n)
    if not override and total > SEARCH_GUARD:
        raise ResourceGuardError(f"{total} candidate structures exceed the guard of {SEARCH_GUARD}")
    if jobs <= 1 or total < 64:
        return _search_chunk((p, dim, n, r, l, override, 0, total))
    step = -(-total // (jobs * 4))
    chunks = [(p, dim, n, r, l, override, s, min(s + step, total)) for s in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return [item for part in ex.map(_search_chunk, chunks) for item in part]
