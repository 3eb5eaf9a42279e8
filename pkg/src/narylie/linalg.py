"""Exact linear algebra over Q and GF(p): row reduction, solving, subspaces.

Vectors and matrix rows are tuples of scalars.  Matrices are sequences of
rows; every entry must belong to the same field.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Optional, Sequence

from .fields import GF, QQ, Field, FieldMismatchError, field_of

Vector = tuple
Matrix = Sequence[Sequence]

MAX_ENUM_DIM = 4
MAX_ENUM_PRIME = 5


class ResourceGuardError(RuntimeError):
    """A desk-scale resource guard was exceeded and not overridden."""


def matrix_field(rows: Matrix, field: Optional[Field] = None) -> Optional[Field]:
    """Return the common field of all entries, raising on a mix."""
    saw_entry = False
    for row in rows:
        for x in row:
            f = field_of(x)
            saw_entry = True
            if isinstance(x, int):
                continue  # bare ints coerce into any field
            if field is None:
                field = f
            elif f != field:
                raise FieldMismatchError(f"matrix mixes {field!r} and {f!r}")
    if field is None and saw_entry:
        return QQ
    return field


def _reduce(rows: list[list], field: Field) -> tuple[list[list], list[int]]:
    """In-place Gauss-Jordan on ``rows``; returns (nonzero rows, pivot columns)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(m: Matrix, field: Optional[Field] = None) -> tuple[tuple[tuple, ...], int]:
    """Reduced row-echelon form of ``m`` (same shape, zero rows last) and its rank."""
    field = matrix_field(m, field)
    if field is None:
        return tuple(tuple(row) for row in m), 0
    rows = [[field(x) for x in row] for row in m]
    ncols = len(rows[0]) if rows else 0
    reduced, pivots = _reduce(rows, field)
    zero_row = (field.zero,) * ncols
    echelon = tuple(tuple(row) for row in reduced) + (zero_row,) * (len(m) - len(reduced))
    return echelon, len(pivots)


def rank(m: Matrix, field: Optional[Field] = None) -> int:
    return rref(m, field)[1]


def solve(a: Matrix, b: Sequence, field: Field) -> tuple[Optional[tuple], int]:
    """Solve ``a x = b``.

    Returns ``(x, nullity)`` where ``x`` is the particular solution with all
    free variables set to zero, or ``(None, nullity)`` if inconsistent.
    """
    ncols = len(a[0]) if a else 0
    rows = [[field(x) for x in row] + [field(bi)] for row, bi in zip(a, b)]
    reduced, pivots = _reduce(rows, field)
    if pivots and pivots[-1] == ncols:
        return None, ncols - (len(pivots) - 1)
    x = [field.zero] * ncols
    for row, c in zip(reduced, pivots):
        x[c] = row[ncols]
    return tuple(x), ncols - len(pivots)


def mat_mul(a: Matrix, b: Matrix) -> tuple[tuple, ...]:
    cols = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), 0 * row[0]) for col in cols) for row in a)


def mat_vec(a: Matrix, v: Sequence) -> tuple:
    return tuple(sum((x * y for x, y in zip(row, v)), 0 * row[0]) for row in a)


def determinant_nonzero(m: Matrix, field: Field) -> bool:
    return rank(m, field) == len(m)


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``field**dim`` held as its canonical RREF basis.

    Two subspaces are equal exactly when their bases are equal.
    """

    dim: int
    field: Field
    basis: tuple[tuple, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], dim: int, field: Field) -> Subspace:
        rows = [[field(x) for x in v] for v in vectors]
        for row in rows:
            if len(row) != dim:
                raise ValueError(f"vector of length {len(row)} in ambient dimension {dim}")
        reduced, _ = _reduce(rows, field)
        return cls(dim, field, tuple(tuple(r) for r in reduced))

    @classmethod
    def zero(cls, dim: int, field: Field) -> Subspace:
        return cls(dim, field, ())

    @classmethod
    def full(cls, dim: int, field: Field) -> Subspace:
        return cls.span(unit_vectors(dim, field), dim, field)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        return subspace_membership(self, v)

    def __add__(self, other: Subspace) -> Subspace:
        if other.dim != self.dim or other.field != self.field:
            raise ValueError("subspaces live in different ambient spaces")
        return Subspace.span(self.basis + other.basis, self.dim, self.field)

    def __le__(self, other: Subspace) -> bool:
        return all(other.contains(v) for v in self.basis)

    def __str__(self):
        if not self.basis:
            return "<0>"
        fmt = self.field.format
        return "<" + ", ".join("(" + ",".join(fmt(x) for x in v) + ")" for v in self.basis) + ">"


def subspace_membership(s: Subspace, v: Sequence) -> bool:
    if len(v) != s.dim:
        raise ValueError(f"vector of length {len(v)} tested against subspace of ambient dimension {s.dim}")
    field = s.field
    w = [field(x) for x in v]
    # Reduce against the RREF basis using its pivot columns.
    for row in s.basis:
        c = next(i for i, x in enumerate(row) if x)
        if w[c]:
            f = w[c]
            w = [x - f * y for x, y in zip(w, row)]
    return not any(w)


def unit_vectors(dim: int, field: Field) -> list[tuple]:
    return [tuple(field.one if j == i else field.zero for j in range(dim)) for i in range(dim)]


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_subspaces(dim: int, p: int, d: int, override: bool = False) -> Iterator[Subspace]:
    """Yield every ``d``-dimensional subspace of GF(p)^dim exactly once.

    Order: pivot sets lexicographically, then free entries lexicographically.
    """
    field = GF(p)
    if not 0 <= d <= dim:
        raise ValueError(f"need 0 <= d <= dim, got d={d}, dim={dim}")
    if not override and (dim > MAX_ENUM_DIM or p > MAX_ENUM_PRIME):
        raise ResourceGuardError(
            f"subspace enumeration limited to dim <= {MAX_ENUM_DIM}, p <= {MAX_ENUM_PRIME}; "
            f"got dim={dim}, p={p}"
        )
    elems = list(field.elements())
    for pivots in combinations(range(dim), d):
        pivot_set = set(pivots)
        slots = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, dim) if c not in pivot_set]
        for values in product(elems, repeat=len(slots)):
            rows = [[field.zero] * dim for _ in range(d)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = field.one
            for (r, c), x in zip(slots, values):
                rows[r][c] = x
            yield Subspace(dim, field, tuple(tuple(row) for row in rows))
