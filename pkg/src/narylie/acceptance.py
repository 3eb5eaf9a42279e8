"""Acceptance criteria, runnable from pytest and from ``narylie verify-all``.

Every criterion is an exact boolean check over Q or GF(p) plus a wall-clock
limit.  Random instances come from fixed seeds.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from functools import lru_cache

from .altforms import (
    AltForm,
    basis_vector,
    check_filippov,
    check_jacobi_explicit,
    check_type,
    evaluate,
    increasing_tuples,
    insertion,
    nr_bracket,
    vec_add,
    vec_scale,
    zero_vector,
)
from .analysis import (
    NOT_SIMPLE,
    SIMPLE_CERTIFIED,
    commutator_defect,
    exhaustive_type_search,
    is_ideal,
    is_simple,
)
from .combinatorics import permutation_parity, unshuffles
from .exterior import (
    check_invariance,
    check_type_poisson,
    exterior_from_structure,
    poisson_bracket,
    prop2_check,
    structure_from_exterior,
    wedge,
)
from .fields import GF, QQ
from .generators import gen_random, gen_top_form_filippov, heisenberg, random_exterior, random_form


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float
    limit: float

    @property
    def passed(self) -> bool:
        return self.ok and self.seconds <= self.limit

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.title}: {self.detail} ({self.seconds:.1f}s / {self.limit:.0f}s)"


def _timed(number: int, title: str, limit: float):
    def deco(fn):
        def run() -> CriterionResult:
            t0 = time.perf_counter()
            ok, detail = fn()
            return CriterionResult(number, title, ok, detail, time.perf_counter() - t0, limit)

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run

    return deco


@_timed(1, "top-form Filippov family", 30)
def criterion_1():
    failures = []
    for n in (2, 3, 4, 5):
        mu = gen_top_form_filippov(n)
        if not check_filippov(mu):
            failures.append(f"n={n} Filippov")
        if not check_type(mu, n - 1, 0):
            failures.append(f"n={n} type ({n - 1},0)")
    for n in (2, 3):
        v = is_simple(gen_top_form_filippov(n, field=GF(5)))
        if v.status != SIMPLE_CERTIFIED:
            failures.append(f"n={n} over GF(5): {v}")
    return not failures, "; ".join(failures) or "n=2..5 Filippov and type (n-1,0); n=2,3 simple over GF(5)"


@_timed(2, "explicit identity <=> type (n-1,l)", 60)
def criterion_2():
    cases = [gen_random(3, 3, GF(5), seed) for seed in range(200)]
    cases += [heisenberg(QQ)] + [gen_top_form_filippov(n) for n in (2, 3, 4)]
    compared = agree = holds = 0
    for mu in cases:
        for l in range(mu.arity):
            a = check_jacobi_explicit(mu, l)
            b = check_type(mu, mu.arity - 1, l)
            compared += 1
            agree += a == b
            holds += a and b
    return agree == compared, f"{agree}/{compared} agree ({holds} hold, {compared - holds} fail on both sides)"


@_timed(3, "Poisson/NR sign identity", 120)
def criterion_3():
    rng = random.Random(3)
    good = 0
    for _ in range(50):
        dim = rng.choice((3, 4, 5))
        form = random_form(dim, QQ, rng)
        Lt = random_exterior(dim, min(rng.choice((3, 4)), dim), QQ, rng)
        Kt = random_exterior(dim, min(rng.choice((3, 4)), dim), QQ, rng)
        good += prop2_check(Lt, Kt, form)
    return good == 50, f"{good}/50 pairs"


@_timed(4, "Poisson type condition <=> NR type condition", 120)
def criterion_4():
    rng = random.Random(4)
    compared = agree = holds = 0
    for _ in range(50):
        n = rng.choice((2, 3))
        dim = rng.choice([d for d in (3, 4) if d >= n + 1])
        form = random_form(dim, QQ, rng)
        mt = random_exterior(dim, n + 1, QQ, rng)
        mu = structure_from_exterior(mt, form, n)
        for r in range(n):
            for l in range(r + 1):
                a = check_type_poisson(mt, form, r, l, n)
                b = check_type(mu, r, l)
                compared += 1
                agree += a == b
                holds += a and b
    return agree == compared, f"{agree}/{compared} agree ({holds} hold)"


NO_SIMPLE_SEARCHES = ((2, 2, 2, 1, 1), (3, 2, 2, 1, 1), (2, 3, 2, 1, 1), (2, 3, 3, 2, 1), (2, 3, 3, 2, 2))
EXTRA_SEARCHES = ((2, 3, 2, 1, 0), (3, 2, 2, 1, 0), (2, 3, 3, 2, 0))


@lru_cache(maxsize=None)
def _search(p, dim, n, r, l):
    return tuple(exhaustive_type_search(p, dim, n, r, l))


@_timed(5, "no simple algebras of type (n-1,l), l>0 (exhaustive)", 300)
def criterion_5():
    survivors = bad = 0
    for p, dim, n, r, l in NO_SIMPLE_SEARCHES:
        for mu, v in _search(p, dim, n, r, l):
            survivors += 1
            w = v.witness
            if not (v.status == NOT_SIMPLE and w is not None and 0 < w.dimension < dim and is_ideal(mu, w)):
                bad += 1
    return bad == 0, f"{survivors} survivors over {len(NO_SIMPLE_SEARCHES)} searches, {bad} counterexamples"


@_timed(6, "2-ary type (1,1) => {{a,b},c} = 0", 60)
def criterion_6():
    checked = bad = 0
    for p, dim, n, r, l in NO_SIMPLE_SEARCHES:
        if n != 2:
            continue
        for mu, _ in _search(p, dim, n, r, l):
            checked += 1
            basis = [basis_vector(dim, mu.field, i) for i in range(1, dim + 1)]
            for i in range(1, dim + 1):
                for j in range(1, dim + 1):
                    inner = mu.value((i, j))
                    for k in range(dim):
                        if any(evaluate(mu, [inner, basis[k]])):
                            bad += 1
    return bad == 0 and checked > 0, f"{checked} structures, {bad} violating triples"


def _random_element(rng, dim, field):
    return random_exterior(dim, rng.randint(0, min(3, dim)), field, rng)


@_timed(7, "Poisson superalgebra axioms", 60)
def criterion_7():
    failures = 0
    for t in range(100):
        field = QQ if t < 50 else GF(5)
        rng = random.Random(700 + t)
        dim = rng.randint(1, 5)
        form = random_form(dim, field, rng)
        x, y, z = (_random_element(rng, dim, field) for _ in range(3))
        px, py = len(next(iter(x.terms), ())), len(next(iter(y.terms), ()))
        b = lambda u, v: poisson_bracket(u, v, form)
        sxy = -1 if (px * py) % 2 else 1
        if not (b(x, y) + b(y, x).scale(sxy)).is_zero():
            failures += 1
        if b(x, wedge(y, z)) != wedge(b(x, y), z) + wedge(y, b(x, z)).scale(sxy):
            failures += 1
        if b(x, b(y, z)) != b(b(x, y), z) + b(y, b(x, z)).scale(sxy):
            failures += 1
    return failures == 0, f"300 identities on 100 triples, {failures} failures"


def _insertion_by_definition(L: AltForm, K: AltForm, args) -> tuple:
    """``L[K]`` on arbitrary vectors straight from the unshuffle sum."""
    m = len(args)
    total = zero_vector(L.dim, L.field)
    for I, J, sign in unshuffles(m, K.arity):
        inner = evaluate(K, [args[i - 1] for i in I])
        term = evaluate(L, [inner] + [args[j - 1] for j in J])
        total = vec_add(total, vec_scale(sign, term))
    return total


@_timed(8, "NR calculus properties", 60)
def criterion_8():
    failures = 0
    for t in range(100):
        rng = random.Random(800 + t)
        field = QQ if t % 2 else GF(5)
        dim = rng.randint(2, 4)
        l, k = rng.randint(1, 3), rng.randint(1, 3)
        L = gen_random(l, dim, field, rng.getrandbits(32))
        K = gen_random(k, dim, field, rng.getrandbits(32))
        sign = -1 if ((l - 1) * (k - 1)) % 2 else 1
        if not (nr_bracket(L, K) + nr_bracket(K, L).scale(sign)).is_zero():
            failures += 1
        m = l + k - 1
        if m <= dim:
            M = insertion(L, K)
            key = tuple(sorted(rng.sample(range(1, dim + 1), m)))
            perm = rng.sample(range(m), m)
            args = [basis_vector(dim, field, key[i]) for i in perm]
            expect = vec_scale(permutation_parity(perm), M.value(key))
            if _insertion_by_definition(L, K, args) != expect:
                failures += 1
        u = tuple(field(rng.randint(-3, 3)) for _ in range(dim))
        v = tuple(field(rng.randint(-3, 3)) for _ in range(dim))
        alpha, beta = field(rng.randint(-3, 3)), field(rng.randint(-3, 3))
        rest = [tuple(field(rng.randint(-3, 3)) for _ in range(dim)) for _ in range(l - 1)]
        slot = rng.randrange(l)
        combo = tuple(alpha * x + beta * y for x, y in zip(u, v))
        at = lambda w: evaluate(L, rest[:slot] + [w] + rest[slot:])
        if at(combo) != vec_add(vec_scale(alpha, at(u)), vec_scale(beta, at(v))):
            failures += 1
    return failures == 0, f"100 instances, {failures} failures"


@_timed(9, "exterior round trip and invariance", 60)
def criterion_9():
    rng = random.Random(9)
    good = 0
    for _ in range(50):
        n = rng.choice((2, 3))
        dim = rng.choice([d for d in (3, 4, 5) if d >= n + 1])
        form = random_form(dim, QQ, rng)
        mt = random_exterior(dim, n + 1, QQ, rng)
        mu = structure_from_exterior(mt, form, n)
        good += check_invariance(mu, form) and exterior_from_structure(mu, form) == mt
    return good == 50, f"{good}/50 round trips"


@_timed(10, "non-simplicity mechanism consistency", 120)
def criterion_10():
    simple_seen = violations = recorded = abelian = 0
    algebras = []
    for spec in NO_SIMPLE_SEARCHES + EXTRA_SEARCHES:
        algebras.extend(_search(*spec))
    algebras.extend((mu, is_simple(mu)) for mu in (gen_top_form_filippov(n, field=GF(5)) for n in (2, 3)))
    for mu, v in algebras:
        n = mu.arity
        if v.status == SIMPLE_CERTIFIED and mu.dim > 1:
            simple_seen += 1
            if any(check_type(mu, n - 1, l) for l in range(1, n)):
                violations += 1
        elif any(check_type(mu, n - 1, l) for l in range(1, n)):
            recorded += 1
            abelian += commutator_defect(mu).all_zero
    heis = commutator_defect(heisenberg()).all_zero
    ok = violations == 0 and heis
    return ok, (f"{simple_seen} simple algebras, {violations} of type (n-1,l>0); "
                f"{recorded} non-simple (n-1,l>0) algebras, {abelian} with abelian operator space; "
                f"Heisenberg abelian={heis}")


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10)


def run_all(echo=print) -> list[CriterionResult]:
    results = []
    for crit in CRITERIA:
        res = crit()
        echo(res.line())
        results.append(res)
    return results
