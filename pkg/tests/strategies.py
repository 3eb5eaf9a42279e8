"""Hypothesis strategies shared across the suite."""

from hypothesis import strategies as st

from narylie.altforms import AltForm, increasing_tuples
from narylie.exterior import BilinearForm, ExteriorElement, FormError
from narylie.fields import GF, QQ

fields = st.sampled_from([QQ, GF(5), GF(7)])
odd_fields = fields


def scalars(field):
    return st.integers(-4, 4).map(field)


@st.composite
def vectors(draw, dim, field):
    return tuple(draw(st.lists(scalars(field), min_size=dim, max_size=dim)))


@st.composite
def altforms(draw, dim=None, arity=None, field=None):
    field = field or draw(fields)
    dim = dim if dim is not None else draw(st.integers(1, 4))
    arity = arity if arity is not None else draw(st.integers(1, 3))
    table = {key: draw(vectors(dim, field)) for key in increasing_tuples(dim, arity)}
    return AltForm(dim, arity, field, table)


@st.composite
def bilinear_forms(draw, dim, field):
    m = [[field.zero] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i, dim):
            m[i][j] = m[j][i] = draw(scalars(field))
    try:
        return BilinearForm(dim, field, m)
    except FormError:
        return BilinearForm.identity(dim, field)


@st.composite
def exterior_elements(draw, dim, field, degree=None):
    degree = degree if degree is not None else draw(st.integers(0, min(3, dim)))
    return ExteriorElement(dim, field, {k: draw(scalars(field)) for k in increasing_tuples(dim, degree)})
