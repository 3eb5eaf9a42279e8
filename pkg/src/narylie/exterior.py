"""The exterior algebra of a quadratic space and its Poisson superalgebra bracket.

With a non-degenerate symmetric form ``G`` on ``V``, the exterior algebra
carries the even bracket of degree -2 determined by ``[x, y] = G(x, y)`` on
generators, the graded Leibniz rule and graded antisymmetry.  On monomials
``e_I = e_{i_1}...e_{i_p}`` and ``e_J = e_{j_1}...e_{j_q}`` it is

    [e_I, e_J] = sum_{s,t} (-1)^{(p-s)+(t-1)} G(e_{i_s}, e_{j_t}) e_{I - i_s} ^ e_{J - j_t}

(move ``e_{i_s}`` to the right end of ``e_I``, contract it with ``e_{j_t}``
moved to the left end of ``e_J``).

An element of degree ``n + 1`` defines an invariant ``n``-ary structure by
iterated bracketing with vectors; :func:`structure_from_exterior` and
:func:`exterior_from_structure` are mutually inverse.

Under this convention the partial insertion of ``p`` vectors satisfies
``mu_{a_1..a_p} = c * structure_from_exterior([a_1, ..[a_p, mu~]])`` with
``c = (-1)^{p(n-p)}``, see :func:`partial_insertion_constant`.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Mapping, Optional, Sequence

from .altforms import (
    AltForm,
    RangeError,
    Violation,
    basis_vector,
    increasing_tuples,
    insert_basis,
    nr_bracket,
    zero_vector,
)
from .combinatorics import MultiIndex, sort_with_sign
from .fields import Field, FieldMismatchError
from .linalg import determinant_nonzero, solve


class FormError(ValueError):
    """A bilinear form failed symmetry or non-degeneracy."""


class InvarianceError(ValueError):
    """A structure is not invariant with respect to the form."""

    def __init__(self, violation: Violation):
        super().__init__(violation.describe())
        self.violation = violation


def _reject_char_2(field: Field):
    if field.characteristic == 2:
        raise FieldMismatchError("the Poisson superalgebra calculus requires characteristic != 2")


@dataclass(frozen=True, eq=False)
class BilinearForm:
    """Symmetric non-degenerate bilinear form with Gram matrix ``matrix``."""

    dim: int
    field: Field
    matrix: tuple

    def __post_init__(self):
        _reject_char_2(self.field)
        m = tuple(tuple(self.field(x) for x in row) for row in self.matrix)
        if len(m) != self.dim or any(len(row) != self.dim for row in m):
            raise FormError(f"form matrix must be {self.dim}x{self.dim}")
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if m[i][j] != m[j][i]:
                    raise FormError(f"form is not symmetric: entry ({i + 1},{j + 1}) != ({j + 1},{i + 1})")
        if not determinant_nonzero(m, self.field):
            raise FormError("form is degenerate (determinant is zero)")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def identity(cls, dim: int, field: Field) -> BilinearForm:
        return cls(dim, field, tuple(tuple(field.one if i == j else field.zero for j in range(dim)) for i in range(dim)))

    def is_identity(self) -> bool:
        return self == BilinearForm.identity(self.dim, self.field)

    def pair(self, u: Sequence, v: Sequence):
        total = self.field.zero
        for i, x in enumerate(u):
            if x:
                row = self.matrix[i]
                for j, y in enumerate(v):
                    if y:
                        total += x * row[j] * y
        return total

    def __eq__(self, other):
        if not isinstance(other, BilinearForm):
            return NotImplemented
        return (self.dim, self.field, self.matrix) == (other.dim, other.field, other.matrix)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class ExteriorElement:
    """Element of the exterior algebra on ``field**dim``: coefficients on increasing monomials."""

    dim: int
    field: Field
    terms: Mapping[MultiIndex, object] = dc_field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for key, c in self.terms.items():
            key = tuple(key)
            if any(not 1 <= i <= self.dim for i in key):
                raise ValueError(f"monomial {key} has an index outside 1..{self.dim}")
            if any(a >= b for a, b in zip(key, key[1:])):
                raise ValueError(f"monomial {key} is not strictly increasing")
            c = self.field(c)
            if c:
                clean[key] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items(), key=lambda kv: (len(kv[0]), kv[0]))))

    @classmethod
    def zero(cls, dim: int, field: Field) -> ExteriorElement:
        return cls(dim, field, {})

    @classmethod
    def monomial(cls, dim: int, field: Field, key: Sequence[int], coef=1) -> ExteriorElement:
        s = sort_with_sign(key)
        if s is None:
            return cls.zero(dim, field)
        return cls(dim, field, {s[0]: field(coef) * s[1]})

    @classmethod
    def from_vector(cls, v: Sequence, field: Field) -> ExteriorElement:
        return cls(len(v), field, {(i + 1,): c for i, c in enumerate(v)})

    @classmethod
    def top_form(cls, dim: int, field: Field) -> ExteriorElement:
        return cls.monomial(dim, field, range(1, dim + 1))

    def degrees(self) -> set[int]:
        return {len(k) for k in self.terms}

    def degree(self) -> Optional[int]:
        """The degree if homogeneous and nonzero, ``None`` for zero; raises if mixed."""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise ValueError(f"element is not homogeneous (degrees {sorted(ds)})")
        return ds.pop()

    def component(self, d: int) -> ExteriorElement:
        return ExteriorElement(self.dim, self.field, {k: c for k, c in self.terms.items() if len(k) == d})

    def as_vector(self) -> tuple:
        if any(len(k) != 1 for k in self.terms):
            raise ValueError("element is not a vector (has components of degree != 1)")
        return tuple(self.terms.get((i,), self.field.zero) for i in range(1, self.dim + 1))

    def is_zero(self) -> bool:
        return not self.terms

    def _check_compatible(self, other: ExteriorElement):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        if self.field != other.field:
            raise FieldMismatchError(f"field mismatch: {self.field!r} vs {other.field!r}")

    def __add__(self, other: ExteriorElement) -> ExteriorElement:
        self._check_compatible(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, self.field.zero) + c
        return ExteriorElement(self.dim, self.field, terms)

    def scale(self, c) -> ExteriorElement:
        c = self.field(c)
        return ExteriorElement(self.dim, self.field, {k: c * x for k, x in self.terms.items()})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        return (self.dim, self.field, self.terms) == (other.dim, other.field, other.terms)

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.terms.items():
            mono = "^".join(f"e{i}" for i in k) or "1"
            parts.append(f"{self.field.format(c)}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"ExteriorElement(dim={self.dim}, field={self.field!r}, terms={self.terms!r})"


def wedge(x: ExteriorElement, y: ExteriorElement) -> ExteriorElement:
    x._check_compatible(y)
    terms: dict = {}
    for I, a in x.terms.items():
        for J, b in y.terms.items():
            s = sort_with_sign(I + J)
            if s is None:
                continue
            key, sign = s
            terms[key] = terms.get(key, x.field.zero) + (a * b if sign == 1 else -(a * b))
    return ExteriorElement(x.dim, x.field, terms)


def _check_form(x: ExteriorElement, form: BilinearForm):
    if form is None:
        raise ValueError("no bilinear form bound")
    if form.dim != x.dim:
        raise ValueError(f"form dimension {form.dim} != element dimension {x.dim}")
    if form.field != x.field:
        raise FieldMismatchError(f"form over {form.field!r}, element over {x.field!r}")
    _reject_char_2(x.field)


def poisson_bracket(x: ExteriorElement, y: ExteriorElement, form: BilinearForm) -> ExteriorElement:
    """Poisson superalgebra bracket ``[x, y]`` induced by ``form``."""
    x._check_compatible(y)
    _check_form(x, form)
    G = form.matrix
    zero = x.field.zero
    terms: dict = {}
    for I, a in x.terms.items():
        p = len(I)
        for s, i in enumerate(I, start=1):
            Grow = G[i - 1]
            rest_I = I[: s - 1] + I[s:]
            for J, b in y.terms.items():
                for t, j in enumerate(J, start=1):
                    g = Grow[j - 1]
                    if not g:
                        continue
                    srt = sort_with_sign(rest_I + J[: t - 1] + J[t:])
                    if srt is None:
                        continue
                    key, sign = srt
                    if (p - s + t - 1) % 2:
                        sign = -sign
                    c = a * b * g
                    terms[key] = terms.get(key, zero) + (c if sign == 1 else -c)
    return ExteriorElement(x.dim, x.field, terms)


def bracket_vector(v: Sequence, X: ExteriorElement, form: BilinearForm) -> ExteriorElement:
    """``[v, X]`` for a vector ``v``: a signed contraction, faster than the general bracket."""
    _check_form(X, form)
    field = X.field
    gv = [field.zero] * X.dim
    for i, c in enumerate(v):
        if c:
            for j, g in enumerate(form.matrix[i]):
                gv[j] += c * g
    terms: dict = {}
    for J, b in X.terms.items():
        for t, j in enumerate(J):
            g = gv[j - 1]
            if g:
                key = J[:t] + J[t + 1:]
                c = b * g if t % 2 == 0 else -(b * g)
                terms[key] = terms.get(key, field.zero) + c
    return ExteriorElement(X.dim, field, terms)


def iterated_bracket(vectors: Sequence[Sequence], X: ExteriorElement, form: BilinearForm) -> ExteriorElement:
    """``[v_1, [v_2, .. [v_p, X]..]]``."""
    for v in reversed(vectors):
        X = bracket_vector(v, X, form)
    return X


def _basis_list(dim: int, field: Field, idx: Sequence[int]) -> list:
    return [basis_vector(dim, field, i) for i in idx]


def _arity_of(mu_tilde: ExteriorElement, n: Optional[int]) -> int:
    d = mu_tilde.degree()
    if d is None:
        if n is None:
            raise ValueError("arity must be given for the zero element")
        return n
    if n is not None and n != d - 1:
        raise ValueError(f"element of degree {d} does not define an arity-{n} structure")
    return d - 1


def structure_from_exterior(mu_tilde: ExteriorElement, form: BilinearForm, n: Optional[int] = None) -> AltForm:
    """The ``n``-ary structure ``{a_1..a_n} = [a_1, [.., [a_n, mu~]..]]``."""
    _check_form(mu_tilde, form)
    n = _arity_of(mu_tilde, n)
    if n < 0:
        raise ValueError("degree 0 elements define no structure")
    dim, field = mu_tilde.dim, mu_tilde.field
    table = {}
    for key in increasing_tuples(dim, n):
        table[key] = iterated_bracket(_basis_list(dim, field, key), mu_tilde, form).as_vector()
    return AltForm(dim, n, field, table)


def find_invariance_violation(mu: AltForm, form: BilinearForm) -> Optional[Violation]:
    if form.dim != mu.dim or form.field != mu.field:
        raise FieldMismatchError("form and structure live over different spaces")
    n, dim, field = mu.arity, mu.dim, mu.field
    if n < 1:
        raise ValueError("invariance needs arity >= 1")
    basis = _basis_list(dim, field, range(1, dim + 1))
    for rest in increasing_tuples(dim, n - 1):
        for b in range(1, dim + 1):
            for a1 in range(1, dim + 1):
                lhs = form.pair(basis[b - 1], mu.value((a1,) + rest))
                rhs = -form.pair(basis[a1 - 1], mu.value((b,) + rest))
                if lhs != rhs:
                    return Violation("invariance", (("b", (b,)), ("a", (a1,) + rest)), (lhs,), (rhs,))
    return None


def check_invariance(mu: AltForm, form: BilinearForm) -> bool:
    """Whether ``(b, {a_1..a_n}) = -(a_1, {b, a_2..a_n})`` for all arguments."""
    return find_invariance_violation(mu, form) is None


def exterior_from_structure(mu: AltForm, form: BilinearForm) -> ExteriorElement:
    """The unique ``mu~`` of degree ``n + 1`` with ``structure_from_exterior(mu~) == mu``.

    Solved as an exact linear system in the coefficients of ``mu~``.
    """
    v = find_invariance_violation(mu, form)
    if v is not None:
        raise InvarianceError(v)
    n, dim, field = mu.arity, mu.dim, mu.field
    monomials = list(increasing_tuples(dim, n + 1))
    images = [structure_from_exterior(ExteriorElement(dim, field, {m: field.one}), form) for m in monomials]
    rows, rhs = [], []
    for key in increasing_tuples(dim, n):
        target = mu.value(key)
        for j in range(dim):
            rows.append([img.value(key)[j] for img in images])
            rhs.append(target[j])
    if not monomials:
        if any(any(v) for v in mu.table.values()):
            raise RuntimeError("invariant nonzero structure with no exterior preimage")
        return ExteriorElement.zero(dim, field)
    x, nullity = solve(rows, rhs, field)
    if x is None:
        raise RuntimeError("inconsistent system for an invariant structure")
    if nullity:
        raise RuntimeError(f"exterior preimage not unique (nullity {nullity})")
    return ExteriorElement(dim, field, dict(zip(monomials, x)))


def prop2_sign(l: int, k: int) -> int:
    """The sign ``-(-1)^{(k+1)(l+1)}`` relating the two sides."""
    return 1 if ((k + 1) * (l + 1)) % 2 else -1


def find_prop2_violation(L_tilde: ExteriorElement, K_tilde: ExteriorElement, form: BilinearForm) -> Optional[Violation]:
    """Compare ``[a_1..[a_m, [L~, K~]]]`` with ``-(-1)^{(k+1)(l+1)} [L, K]^{NR}(a_1..a_m)``."""
    L_tilde._check_compatible(K_tilde)
    _check_form(L_tilde, form)
    dl, dk = L_tilde.degree(), K_tilde.degree()
    for d in (dl, dk):
        if d is not None and d < 1:
            raise ValueError("degree < 1 elements define no structure")
    if dl is None or dk is None:
        return None  # both sides vanish
    l, k = dl - 1, dk - 1
    if l + k < 1:
        raise ValueError("need l + k >= 1")
    L = structure_from_exterior(L_tilde, form)
    K = structure_from_exterior(K_tilde, form)
    nr = nr_bracket(L, K)
    P = poisson_bracket(L_tilde, K_tilde, form)
    sign = prop2_sign(l, k)
    dim, field = L_tilde.dim, L_tilde.field
    for key in increasing_tuples(dim, l + k - 1):
        lhs = iterated_bracket(_basis_list(dim, field, key), P, form).as_vector()
        rhs = nr.value(key)
        if sign == -1:
            rhs = tuple(-x for x in rhs)
        if lhs != rhs:
            return Violation("Poisson/NR sign identity", (("args", key),), lhs, rhs)
    return None


def prop2_check(L_tilde: ExteriorElement, K_tilde: ExteriorElement, form: BilinearForm) -> bool:
    return find_prop2_violation(L_tilde, K_tilde, form) is None


def find_type_poisson_violation(mu_tilde: ExteriorElement, form: BilinearForm, r: int, l: int,
                                n: Optional[int] = None) -> Optional[Violation]:
    _check_form(mu_tilde, form)
    n = _arity_of(mu_tilde, n)
    if not 0 <= l <= r < n:
        raise RangeError(f"type ({r},{l}) outside 0 <= l <= r < n={n}")
    dim, field = mu_tilde.dim, mu_tilde.field
    if mu_tilde.is_zero():
        return None
    left = {a: iterated_bracket(_basis_list(dim, field, a), mu_tilde, form) for a in increasing_tuples(dim, r)}
    right = left if l == r else {
        b: iterated_bracket(_basis_list(dim, field, b), mu_tilde, form) for b in increasing_tuples(dim, l)
    }
    for a, X in left.items():
        for b, Y in right.items():
            Z = poisson_bracket(X, Y, form)
            if not Z.is_zero():
                return Violation(f"Poisson type ({r},{l})", (("a", a), ("b", b)), Z, ExteriorElement.zero(dim, field))
    return None


def check_type_poisson(mu_tilde: ExteriorElement, form: BilinearForm, r: int, l: int, n: Optional[int] = None) -> bool:
    """Whether ``[[a_1..[a_r, mu~]], [b_1..[b_l, mu~]]] = 0`` for all arguments."""
    return find_type_poisson_violation(mu_tilde, form, r, l, n) is None


def partial_insertion_constant(mu_tilde: ExteriorElement, form: BilinearForm, a: Sequence[int],
                               n: Optional[int] = None):
    """The scalar ``c`` with ``mu_a = c * structure_from_exterior([a.., mu~])``.

    Returns ``None`` when both sides vanish.  Raises if they are not proportional.
    """
    mu = structure_from_exterior(mu_tilde, form, n)
    lhs = insert_basis(mu, a)
    X = iterated_bracket(_basis_list(mu.dim, mu.field, a), mu_tilde, form)
    rhs = structure_from_exterior(X, form, n=mu.arity - len(a))
    if lhs.is_zero() and rhs.is_zero():
        return None
    for key, v in rhs.table.items():
        for j, x in enumerate(v):
            if x:
                c = lhs.value(key)[j] / x
                if lhs != rhs.scale(c):
                    raise ValueError("partial insertion is not proportional to the iterated bracket")
                return c
    raise ValueError("partial insertion is not proportional to the iterated bracket")
