from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from narylie.altforms import AltForm, evaluate, vec_add
from narylie.analysis import (
    CommutatorDefect,
    NOT_SIMPLE,
    SIMPLE_CERTIFIED,
    UNKNOWN,
    commutator_defect,
    count_structures,
    exhaustive_type_search,
    find_nontrivial_ideal,
    ideal_closure,
    is_ideal,
    is_simple,
    operator_matrices,
    operator_space,
    structure_from_index,
)
from narylie.fields import GF, QQ
from narylie.generators import cross_product, gen_random, gen_top_form_filippov, heisenberg
from narylie.linalg import ResourceGuardError, Subspace, enumerate_subspaces, unit_vectors

from .strategies import altforms


def span(vectors, dim=3, field=QQ):
    return Subspace.span(vectors, dim, field)


def test_is_ideal_examples(heis, cross):
    assert is_ideal(heis, span([(0, 0, 1)]))
    assert not is_ideal(heis, span([(1, 0, 0)]))
    assert not is_ideal(cross, span([(1, 0, 0)]))
    for mu in (heis, cross):
        assert is_ideal(mu, Subspace.zero(3, QQ))
        assert is_ideal(mu, Subspace.full(3, QQ))


def test_ideal_closure_examples(heis, cross):
    assert ideal_closure(heis, span([(1, 0, 0)])) == span([(1, 0, 0), (0, 0, 1)])
    assert ideal_closure(cross, span([(1, 0, 0)])).dimension == 3
    assert ideal_closure(heis, Subspace.zero(3, QQ)).dimension == 0


def test_nontrivial_ideal_verdicts(heis):
    v = find_nontrivial_ideal(heis)
    assert v.status == NOT_SIMPLE and v.witness == span([(0, 0, 1)])
    v = find_nontrivial_ideal(cross_product(GF(5)))
    assert v.status == SIMPLE_CERTIFIED and v.method == "exhaustive" and v.witness is None
    zero = AltForm.zero(3, 2, GF(3))
    v = find_nontrivial_ideal(zero)
    assert v.status == NOT_SIMPLE and v.witness.dimension == 1


def test_rationals_heuristic_is_honest(cross):
    v = find_nontrivial_ideal(cross)
    assert v.status == UNKNOWN and v.method == "closure-heuristic"


def test_simplicity_small_cases():
    v = is_simple(AltForm.zero(1, 2, GF(5)))
    assert v.status == NOT_SIMPLE and v.method == "definition"
    assert is_simple(gen_top_form_filippov(3, field=GF(5))).status == SIMPLE_CERTIFIED


def test_enumeration_guard():
    mu = gen_random(2, 5, GF(5), 0)
    with pytest.raises(ResourceGuardError):
        find_nontrivial_ideal(mu)


def test_operator_space_dimensions(heis, cross):
    assert operator_space(cross).dimension == 3
    assert operator_space(heis).dimension == 2
    assert operator_space(AltForm.zero(3, 2, QQ)).dimension == 0


def test_operator_matrix_columns(heis):
    M = operator_matrices(heis)[(1,)]
    assert [row[1] for row in M] == [0, 0, 1]
    assert all(row[0] == 0 and row[2] == 0 for row in M)


def test_commutator_defect_examples(heis, cross):
    assert commutator_defect(heis).all_zero
    d = commutator_defect(cross)
    assert not d.all_zero and d.max_rank == 2
    assert commutator_defect(AltForm.zero(3, 2, QQ)) == CommutatorDefect(0, True)


def _brute_type_count(p, dim, identity):
    """Count binary structures on GF(p)^dim satisfying ``identity`` on all basis triples."""
    field = GF(p)
    E = unit_vectors(dim, field)
    count = 0
    for idx in range(count_structures(p, dim, 2)):
        mu = structure_from_index(p, dim, 2, idx)
        b = lambda x, y: evaluate(mu, [x, y])
        count += all(identity(b, x, y, z) for x, y, z in product(E, repeat=3))
    return count


def _jacobi(b, x, y, z):
    return not any(vec_add(vec_add(b(b(x, y), z), b(b(y, z), x)), b(b(z, x), y)))


def _nilpotent_two_step(b, x, y, z):
    return not any(b(b(x, y), z))


@pytest.mark.parametrize("p,dim,r,l,identity", [
    (2, 2, 1, 0, _jacobi),
    (2, 3, 1, 0, _jacobi),
    (3, 2, 1, 0, _jacobi),
    (2, 2, 1, 1, _nilpotent_two_step),
    (2, 3, 1, 1, _nilpotent_two_step),
    (3, 2, 1, 1, _nilpotent_two_step),
])
def test_search_matches_brute_force(p, dim, r, l, identity):
    found = exhaustive_type_search(p, dim, 2, r, l)
    assert len(found) == _brute_type_count(p, dim, identity)


def test_search_examples():
    assert len(exhaustive_type_search(2, 2, 2, 1, 1)) == 1
    assert len(exhaustive_type_search(2, 3, 2, 1, 1)) == 8
    assert len(exhaustive_type_search(2, 3, 3, 2, 1)) == 1
    lie = exhaustive_type_search(2, 2, 2, 1, 0)
    assert len(lie) == 4 and lie[0][0].is_zero()


def test_search_guard():
    with pytest.raises(ResourceGuardError):
        exhaustive_type_search(5, 4, 2, 1, 0)


def test_parallel_search_agrees():
    serial = exhaustive_type_search(2, 3, 2, 1, 0)
    parallel = exhaustive_type_search(2, 3, 2, 1, 0, jobs=2)
    assert [(m.table, v) for m, v in serial] == [(m.table, v) for m, v in parallel]


@settings(max_examples=25)
@given(st.data())
def test_closure_is_monotone_and_idempotent(data):
    field = data.draw(st.sampled_from([QQ, GF(3)]))
    mu = data.draw(altforms(dim=3, arity=2, field=field))
    vecs = data.draw(st.lists(st.tuples(*[st.integers(-2, 2)] * 3), max_size=2))
    W = Subspace.span([tuple(map(field, v)) for v in vecs], 3, field)
    C = ideal_closure(mu, W)
    assert W <= C and is_ideal(mu, C)
    assert ideal_closure(mu, C) == C
    if is_ideal(mu, W):
        assert C == W


@settings(max_examples=25)
@given(st.data())
def test_ideal_condition_is_slot_independent(data):
    """Checking only the last slot is enough because the structure is skew."""
    mu = data.draw(altforms(dim=3, arity=data.draw(st.integers(1, 3)), field=GF(3)))
    W = Subspace.span([data.draw(st.sampled_from(unit_vectors(3, GF(3))))], 3, GF(3))
    E = unit_vectors(3, GF(3))
    direct = all(
        W.contains(evaluate(mu, list(args[:slot]) + [w] + list(args[slot:])))
        for slot in range(mu.arity)
        for args in product(E, repeat=mu.arity - 1)
        for w in W.basis
    )
    assert direct == is_ideal(mu, W)


@settings(max_examples=20)
@given(st.integers(0, 2**32), st.sampled_from([2, 3]))
def test_verdict_soundness(seed, p):
    mu = gen_random(2, 3, GF(p), seed)
    v = find_nontrivial_ideal(mu)
    if v.status == NOT_SIMPLE:
        assert 0 < v.witness.dimension < 3 and is_ideal(mu, v.witness)
    else:
        assert v.status == SIMPLE_CERTIFIED
        for d in (1, 2):
            assert not any(is_ideal(mu, W) for W in enumerate_subspaces(3, p, d))


def test_type_one_one_kills_double_brackets():
    for mu, _ in exhaustive_type_search(2, 3, 2, 1, 1) + exhaustive_type_search(3, 2, 2, 1, 1):
        E = unit_vectors(mu.dim, mu.field)
        for x, y, z in product(E, repeat=3):
            assert not any(evaluate(mu, [evaluate(mu, [x, y]), z]))


def _slot_shift_holds(mu, D):
    """``{.. D b_i, b_{i+1} ..} = {.. b_i, D b_{i+1} ..}`` on all basis tuples."""
    E = unit_vectors(mu.dim, mu.field)
    Dv = lambda v: tuple(sum(D[i][j] * v[j] for j in range(mu.dim)) for i in range(mu.dim))
    for args in product(E, repeat=mu.arity):
        for i in range(mu.arity - 1):
            a = list(args)
            left = a[:i] + [Dv(a[i])] + a[i + 1:]
            right = a[:i + 1] + [Dv(a[i + 1])] + a[i + 2:]
            if evaluate(mu, left) != evaluate(mu, right):
                return False
    return True


@pytest.mark.parametrize("spec", [(2, 3, 2, 1, 1), (3, 2, 2, 1, 1), (2, 3, 3, 2, 1), (2, 3, 3, 2, 2)])
def test_operators_shift_between_slots(spec):
    """For type (n-1,l), l>0, every operator of the space moves freely across argument slots."""
    for mu, _ in exhaustive_type_search(*spec):
        for D in operator_matrices(mu).values():
            assert _slot_shift_holds(mu, D)


def test_slot_shift_fails_for_cross(cross):
    assert not all(_slot_shift_holds(cross, D) for D in operator_matrices(cross).values())
