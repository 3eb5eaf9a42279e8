"""Line-oriented text format for algebras.

::

    field Q            # or: field F 5
    dim 3
    arity 2
    mu 1 2 : 3 1       # mu(e1,e2) = 1*e3; general: mu i1..in : j c [j c ...]
    form identity      # or `dim` lines of: form row 1 0 0
    ext 1 2 3 : 1      # coefficient of e1^e2^e3 in an exterior element

Indices are 1-based and strictly increasing; scalars are integers or ``p/q``.
``#`` starts a comment.  :func:`serialize_algebra` writes the canonical form:
directives in the order above, keys sorted, zero entries dropped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .altforms import AltForm
from .exterior import BilinearForm, ExteriorElement, FormError
from .fields import QQ, Field, FieldMismatchError, parse_field

_SCALAR = re.compile(r"^[+-]?\d+(/\d+)?$")


class FormatError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class AlgebraFile:
    structure: AltForm
    form: Optional[BilinearForm] = None
    ext: Optional[ExteriorElement] = None

    @property
    def field(self) -> Field:
        return self.structure.field

    @property
    def dim(self) -> int:
        return self.structure.dim

    def form_or_identity(self) -> BilinearForm:
        return self.form if self.form is not None else BilinearForm.identity(self.dim, self.field)


def _scalar(tok: str, field: Field, lineno: int):
    if not _SCALAR.match(tok):
        raise FormatError(f"bad scalar {tok!r}", lineno)
    try:
        return field(tok)
    except ZeroDivisionError as e:
        raise FormatError(str(e), lineno) from None


def _indices(toks: list[str], dim: int, lineno: int) -> tuple[int, ...]:
    try:
        idx = tuple(int(t) for t in toks)
    except ValueError:
        raise FormatError(f"bad index list {' '.join(toks)!r}", lineno) from None
    if any(not 1 <= i <= dim for i in idx):
        raise FormatError(f"index outside 1..{dim} in {idx}", lineno)
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise FormatError(f"indices {idx} are not strictly increasing", lineno)
    return idx


def _split_colon(toks: list[str], lineno: int) -> tuple[list[str], list[str]]:
    if ":" not in toks:
        raise FormatError("missing ':'", lineno)
    i = toks.index(":")
    return toks[:i], toks[i + 1:]


def parse_algebra(text: str) -> AlgebraFile:
    field = dim = arity = None
    mu_lines, ext_lines, form_rows = [], [], []
    form_identity = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *toks = line.split()
        if head == "field":
            if field is not None:
                raise FormatError("duplicate 'field'", lineno)
            try:
                field = parse_field(" ".join(toks))
            except ValueError as e:
                raise FormatError(str(e), lineno) from None
        elif head in ("dim", "arity"):
            if len(toks) != 1 or not toks[0].isdigit():
                raise FormatError(f"'{head}' takes one non-negative integer", lineno)
            if head == "dim":
                if dim is not None:
                    raise FormatError("duplicate 'dim'", lineno)
                dim = int(toks[0])
            else:
                if arity is not None:
                    raise FormatError("duplicate 'arity'", lineno)
                arity = int(toks[0])
        elif head == "mu":
            mu_lines.append((lineno, toks))
        elif head == "ext":
            ext_lines.append((lineno, toks))
        elif head == "form":
            if toks == ["identity"]:
                form_identity = True
            elif toks and toks[0] == "row":
                form_rows.append((lineno, toks[1:]))
            else:
                raise FormatError("expected 'form identity' or 'form row ...'", lineno)
        else:
            raise FormatError(f"unknown directive {head!r}", lineno)

    if field is None:
        raise FormatError("missing 'field'")
    if dim is None:
        raise FormatError("missing 'dim'")

    ext = None
    if ext_lines:
        terms = {}
        for lineno, toks in ext_lines:
            left, right = _split_colon(toks, lineno)
            key = _indices(left, dim, lineno)
            if len(right) != 1:
                raise FormatError("ext line takes exactly one coefficient", lineno)
            if key in terms:
                raise FormatError(f"duplicate ext monomial {key}", lineno)
            terms[key] = _scalar(right[0], field, lineno)
        ext = ExteriorElement(dim, field, terms)

    if arity is None:
        deg = ext.degree() if ext is not None else None
        if deg is None:
            raise FormatError("missing 'arity'")
        arity = deg - 1

    table = {}
    for lineno, toks in mu_lines:
        left, right = _split_colon(toks, lineno)
        key = _indices(left, dim, lineno)
        if len(key) != arity:
            raise FormatError(f"mu key {key} has {len(key)} indices, arity is {arity}", lineno)
        if key in table:
            raise FormatError(f"duplicate mu key {key}", lineno)
        if len(right) % 2:
            raise FormatError("mu values must come in 'j c' pairs", lineno)
        vec = [field.zero] * dim
        seen = set()
        for j_tok, c_tok in zip(right[::2], right[1::2]):
            (j,) = _indices([j_tok], dim, lineno)
            if j in seen:
                raise FormatError(f"component {j} given twice", lineno)
            seen.add(j)
            vec[j - 1] = _scalar(c_tok, field, lineno)
        table[key] = tuple(vec)
    structure = AltForm(dim, arity, field, table)

    form = None
    if form_identity and form_rows:
        raise FormatError("both 'form identity' and 'form row' given")
    try:
        if form_identity:
            form = BilinearForm.identity(dim, field)
        elif form_rows:
            if len(form_rows) != dim:
                raise FormatError(f"expected {dim} 'form row' lines, got {len(form_rows)}", form_rows[-1][0])
            rows = []
            for lineno, toks in form_rows:
                if len(toks) != dim:
                    raise FormatError(f"form row needs {dim} entries", lineno)
                rows.append([_scalar(t, field, lineno) for t in toks])
            form = BilinearForm(dim, field, rows)
    except (FormError, FieldMismatchError) as e:
        raise FormatError(f"form: {e}") from None
    return AlgebraFile(structure, form, ext)


def _field_line(field: Field) -> str:
    return "field Q" if field == QQ else f"field F {field.characteristic}"


def serialize_algebra(alg: AlgebraFile) -> str:
    mu = alg.structure
    fmt = mu.field.format
    lines = [_field_line(mu.field), f"dim {mu.dim}", f"arity {mu.arity}"]
    for key, vec in mu.table.items():
        pairs = " ".join(f"{j} {fmt(c)}" for j, c in enumerate(vec, start=1) if c)
        lines.append(f"mu {' '.join(map(str, key))} : {pairs}".replace("mu  :", "mu :"))
    if alg.form is not None:
        if alg.form.is_identity():
            lines.append("form identity")
        else:
            for row in alg.form.matrix:
                lines.append("form row " + " ".join(fmt(x) for x in row))
    if alg.ext is not None:
        for key, c in alg.ext.terms.items():
            lines.append(f"ext {' '.join(map(str, key))} : {fmt(c)}".replace("ext  :", "ext :"))
    return "\n".join(lines) + "\n"


def canonicalize(text: str) -> str:
    return serialize_algebra(parse_algebra(text))


def load_algebra(path: str) -> AlgebraFile:
    with open(path, encoding="utf-8") as f:
        return parse_algebra(f.read())
