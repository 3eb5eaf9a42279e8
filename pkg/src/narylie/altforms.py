"""Alternating vector-valued forms and the Nijenhuis-Richardson calculus.

An :class:`AltForm` of arity ``k`` on ``V = field**dim`` is stored by its
structure constants on strictly increasing basis-index tuples; evaluation
on any other tuple is the alternating extension.  Skew-symmetry therefore
holds by construction.

All identity checkers quantify over basis-index tuples only.  Every identity
checked here is multilinear in each argument, so vanishing on basis tuples
is equivalent to vanishing everywhere; where an identity is alternating in a
block of arguments we further restrict that block to increasing tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
from typing import Mapping, Optional, Sequence

from .combinatorics import MultiIndex, sort_with_sign, unshuffles
from .fields import Field, FieldMismatchError

Vector = tuple


class RangeError(ValueError):
    """(r, l) or l outside the admissible range for a type condition."""


def zero_vector(dim: int, field: Field) -> Vector:
    return (field.zero,) * dim


def basis_vector(dim: int, field: Field, i: int) -> Vector:
    """The 1-based basis vector ``e_i``."""
    return tuple(field.one if j == i else field.zero for j in range(1, dim + 1))


def vec_add(u: Sequence, v: Sequence) -> Vector:
    return tuple(x + y for x, y in zip(u, v))


def vec_scale(c, v: Sequence) -> Vector:
    return tuple(c * x for x in v)


def increasing_tuples(dim: int, length: int):
    return combinations(range(1, dim + 1), length)


@dataclass(frozen=True, eq=False)
class AltForm:
    """An element of ``Alt^arity(V) (x) V`` with ``V = field**dim``."""

    dim: int
    arity: int
    field: Field
    table: Mapping[MultiIndex, Vector] = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.arity < 0:
            raise ValueError("arity must be non-negative")
        clean = {}
        for key, vec in self.table.items():
            key = tuple(key)
            if len(key) != self.arity:
                raise ValueError(f"key {key} has length {len(key)}, arity is {self.arity}")
            if any(not 1 <= i <= self.dim for i in key):
                raise ValueError(f"key {key} has an index outside 1..{self.dim}")
            if any(a >= b for a, b in zip(key, key[1:])):
                raise ValueError(f"key {key} is not strictly increasing")
            if len(vec) != self.dim:
                raise ValueError(f"value for {key} has length {len(vec)}, dim is {self.dim}")
            vec = tuple(self.field(x) for x in vec)
            if any(vec):
                clean[key] = vec
        object.__setattr__(self, "table", dict(sorted(clean.items())))

    @classmethod
    def zero(cls, dim: int, arity: int, field: Field) -> AltForm:
        return cls(dim, arity, field, {})

    def value(self, idx: Sequence[int]) -> Vector:
        """Value on the basis tuple ``(e_{idx[0]}, ...)`` in any order."""
        s = sort_with_sign(idx)
        if s is None:
            return zero_vector(self.dim, self.field)
        key, sign = s
        v = self.table.get(key)
        if v is None:
            return zero_vector(self.dim, self.field)
        return v if sign == 1 else tuple(-x for x in v)

    def is_zero(self) -> bool:
        return not self.table

    def _check_compatible(self, other: AltForm):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        if self.field != other.field:
            raise FieldMismatchError(f"field mismatch: {self.field!r} vs {other.field!r}")

    def __add__(self, other: AltForm) -> AltForm:
        self._check_compatible(other)
        if self.arity != other.arity:
            raise ValueError("cannot add forms of different arity")
        table = dict(self.table)
        z = zero_vector(self.dim, self.field)
        for k, v in other.table.items():
            table[k] = vec_add(table.get(k, z), v)
        return AltForm(self.dim, self.arity, self.field, table)

    def scale(self, c) -> AltForm:
        c = self.field(c)
        return AltForm(self.dim, self.arity, self.field, {k: vec_scale(c, v) for k, v in self.table.items()})

    def __neg__(self) -> AltForm:
        return self.scale(-1)

    def __sub__(self, other: AltForm) -> AltForm:
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, AltForm):
            return NotImplemented
        return (self.dim, self.arity, self.field, self.table) == (other.dim, other.arity, other.field, other.table)

    __hash__ = None

    def __repr__(self):
        return f"AltForm(dim={self.dim}, arity={self.arity}, field={self.field!r}, table={self.table!r})"


def evaluate(L: AltForm, args: Sequence[Sequence]) -> Vector:
    """Multilinear alternating evaluation of ``L`` on arbitrary vectors."""
    if len(args) != L.arity:
        raise ValueError(f"form of arity {L.arity} evaluated on {len(args)} arguments")
    supports = []
    for v in args:
        if len(v) != L.dim:
            raise ValueError(f"argument of length {len(v)}, dim is {L.dim}")
        supports.append([(i + 1, L.field(c)) for i, c in enumerate(v) if c])
    acc = list(zero_vector(L.dim, L.field))
    for combo in product(*supports):
        s = sort_with_sign([i for i, _ in combo])
        if s is None:
            continue
        val = L.table.get(s[0])
        if val is None:
            continue
        coef = L.field(s[1])
        for _, c in combo:
            coef = coef * c
        for j, x in enumerate(val):
            acc[j] += coef * x
    return tuple(acc)


def partial_insert(L: AltForm, vectors: Sequence[Sequence]) -> AltForm:
    """The form ``(b_1..b_{k-p}) -> L(a_1..a_p, b_1..b_{k-p})``."""
    p = len(vectors)
    if p > L.arity:
        raise ValueError(f"cannot insert {p} vectors into a form of arity {L.arity}")
    if any(not any(v) for v in vectors):
        return AltForm.zero(L.dim, L.arity - p, L.field)
    rest = L.arity - p
    basis = [basis_vector(L.dim, L.field, i) for i in range(1, L.dim + 1)]
    table = {}
    for key in increasing_tuples(L.dim, rest):
        table[key] = evaluate(L, list(vectors) + [basis[i - 1] for i in key])
    return AltForm(L.dim, rest, L.field, table)


def insert_basis(L: AltForm, idx: Sequence[int]) -> AltForm:
    """``partial_insert`` with basis vectors ``e_i`` for ``i`` in ``idx``."""
    return partial_insert(L, [basis_vector(L.dim, L.field, i) for i in idx])


def insertion(L: AltForm, K: AltForm) -> AltForm:
    """The insertion operator ``L[K]``.

    ``L[K](a_1..a_m) = sum (-1)^{(I,J)} L(K(a_I), a_J)`` over unshuffles with
    ``|I| = k`` and ``|J| = l - 1``, where ``m = l + k - 1``.  For ``l = 0``
    there is no slot to insert into and the result is zero.
    """
    L._check_compatible(K)
    l, k = L.arity, K.arity
    m = l + k - 1
    if m < 0:
        raise ValueError("insertion of two arity-0 forms is undefined")
    if l == 0:
        return AltForm.zero(L.dim, m, L.field)
    field = L.field
    splits = unshuffles(m, k)
    table = {}
    for key in increasing_tuples(L.dim, m):
        acc = list(zero_vector(L.dim, field))
        for I, J, sign in splits:
            v = K.table.get(tuple(key[i - 1] for i in I))
            if v is None:
                continue
            kJ = tuple(key[j - 1] for j in J)
            for j, c in enumerate(v, start=1):
                if not c:
                    continue
                w = L.value((j,) + kJ)
                coef = c if sign == 1 else -c
                for t, x in enumerate(w):
                    if x:
                        acc[t] += coef * x
        table[key] = tuple(acc)
    return AltForm(L.dim, m, field, table)


def nr_bracket(L: AltForm, K: AltForm) -> AltForm:
    """``[L, K] = (-1)^{(l-1)(k-1)} L[K] - K[L]``."""
    l, k = L.arity, K.arity
    first = insertion(L, K)
    if ((l - 1) * (k - 1)) % 2:
        first = -first
    return first - insertion(K, L)


# ---------------------------------------------------------------------------
# identity checkers


@dataclass(frozen=True)
class Violation:
    """First failing basis instance of an identity, with both sides."""

    identity: str
    where: tuple  # ((label, index tuple), ...)
    lhs: Vector
    rhs: Vector

    def describe(self, fmt=str) -> str:
        loc = " ".join(f"{name}={tuple(idx)}" for name, idx in self.where)
        def show(v):
            if isinstance(v, tuple):
                return "(" + ", ".join(fmt(x) for x in v) + ")"
            return str(v)

        return f"{self.identity} fails at {loc}: lhs={show(self.lhs)} rhs={show(self.rhs)}"


def _check_type_range(n: int, r: int, l: int, allow_any: bool):
    if allow_any:
        if r < 0 or l < 0 or r > n or l > n:
            raise RangeError(f"need 0 <= r, l <= n={n}")
        return
    if not 0 <= l <= r < n:
        raise RangeError(f"type ({r},{l}) outside 0 <= l <= r < n={n}")


def find_type_violation(mu: AltForm, r: int, l: int, allow_any: bool = False) -> Optional[Violation]:
    _check_type_range(mu.arity, r, l, allow_any)
    left = {a: insert_basis(mu, a) for a in increasing_tuples(mu.dim, r)}
    right = left if r == l else {b: insert_basis(mu, b) for b in increasing_tuples(mu.dim, l)}
    for a, La in left.items():
        for b, Kb in right.items():
            br = nr_bracket(La, Kb)
            if br.table:
                key, val = next(iter(br.table.items()))
                return Violation(f"type ({r},{l})", (("a", a), ("b", b), ("args", key)),
                                 val, zero_vector(mu.dim, mu.field))
    return None


def check_type(mu: AltForm, r: int, l: int, allow_any: bool = False) -> bool:
    """Whether ``[mu_{a_1..a_r}, mu_{b_1..b_l}]^{NR} = 0`` for all arguments."""
    return find_type_violation(mu, r, l, allow_any) is None


def _derivation_images(mu: AltForm, a: MultiIndex) -> list[Vector]:
    """Images ``mu(e_a..., e_x)`` for ``x = 1..dim``."""
    return [mu.value(a + (x,)) for x in range(1, mu.dim + 1)]


def find_filippov_violation(mu: AltForm) -> Optional[Violation]:
    n, dim, field = mu.arity, mu.dim, mu.field
    basis = [basis_vector(dim, field, i) for i in range(1, dim + 1)]
    for a in increasing_tuples(dim, n - 1):
        D = _derivation_images(mu, a)
        ea = [basis[i - 1] for i in a]
        for b in increasing_tuples(dim, n):
            lhs = evaluate(mu, ea + [mu.value(b)])
            rhs = zero_vector(dim, field)
            for i in range(n):
                args = [basis[x - 1] for x in b]
                args[i] = D[b[i] - 1]
                rhs = vec_add(rhs, evaluate(mu, args))
            if lhs != rhs:
                return Violation("Filippov identity", (("a", a), ("b", b)), lhs, rhs)
    return None


def check_filippov(mu: AltForm) -> bool:
    """Whether each ``mu(a_1..a_{n-1}, -)`` is a derivation of ``mu``."""
    return find_filippov_violation(mu) is None


def find_lie_n_violation(mu: AltForm) -> Optional[Violation]:
    n, dim, field = mu.arity, mu.dim, mu.field
    m = 2 * n - 1
    basis = [basis_vector(dim, field, i) for i in range(1, dim + 1)]
    splits = unshuffles(m, n)
    zero = zero_vector(dim, field)
    for key in increasing_tuples(dim, m):
        total = zero
        for I, J, sign in splits:
            inner = mu.value(tuple(key[i - 1] for i in I))
            term = evaluate(mu, [inner] + [basis[key[j - 1] - 1] for j in J])
            total = vec_add(total, term if sign == 1 else vec_scale(-1, term))
        if total != zero:
            return Violation("Lie n-algebra identity", (("args", key),), total, zero)
    return None


def check_lie_n(mu: AltForm) -> bool:
    """Unshuffle Jacobi identity on ``2n - 1`` arguments."""
    return find_lie_n_violation(mu) is None


def find_jacobi_explicit_violation(mu: AltForm, l: int) -> Optional[Violation]:
    n, dim, field = mu.arity, mu.dim, mu.field
    if not 0 <= l <= n - 1:
        raise RangeError(f"need 0 <= l <= n-1 = {n - 1}, got {l}")
    k = n - l
    basis = [basis_vector(dim, field, i) for i in range(1, dim + 1)]
    # Alternating in the first k slots and in the last l slots separately;
    # indices may repeat across the two blocks.
    for a in increasing_tuples(dim, n - 1):
        D = _derivation_images(mu, a)
        ea = [basis[i - 1] for i in a]
        for c in increasing_tuples(dim, k):
            for b in increasing_tuples(dim, l):
                idx = c + b
                lhs = evaluate(mu, ea + [mu.value(idx)])
                rhs = zero_vector(dim, field)
                for i in range(k):
                    args = [basis[x - 1] for x in idx]
                    args[i] = D[idx[i] - 1]
                    rhs = vec_add(rhs, evaluate(mu, args))
                if lhs != rhs:
                    return Violation(f"explicit (n-1,{l}) identity", (("a", a), ("b", idx)), lhs, rhs)
    return None


def check_jacobi_explicit(mu: AltForm, l: int) -> bool:
    """``{a, {b_1..b_n}} = sum_{i <= n-l} {b_1, .., {a, b_i}, .., b_n}`` for all arguments."""
    return find_jacobi_explicit_violation(mu, l) is None
