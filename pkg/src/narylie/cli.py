"""Command-line interface.

Exit codes: 0 all checks pass, 1 identity violation, 2 format or argument
error, 3 resource guard exceeded.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import acceptance
from .altforms import (
    RangeError,
    evaluate,
    find_filippov_violation,
    find_jacobi_explicit_violation,
    find_lie_n_violation,
    find_type_violation,
    nr_bracket,
)
from .analysis import (
    DEFAULT_LINE_SEED,
    SIMPLE_CERTIFIED,
    commutator_defect,
    exhaustive_type_search,
    find_nontrivial_ideal,
    is_simple,
    operator_space,
)
from .exterior import (
    BilinearForm,
    ExteriorElement,
    FormError,
    InvarianceError,
    exterior_from_structure,
    find_invariance_violation,
    find_prop2_violation,
    find_type_poisson_violation,
    structure_from_exterior,
)
from .fields import FieldMismatchError, parse_field
from .fileformat import AlgebraFile, FormatError, load_algebra, serialize_algebra
from .generators import gen_random, gen_top_form_filippov
from .linalg import ResourceGuardError

EXIT_OK, EXIT_VIOLATION, EXIT_FORMAT, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _report(name: str, violation, fmt) -> int:
    if violation is None:
        print(f"PASS {name}")
        return EXIT_OK
    print(f"FAIL {name}")
    print("  " + violation.describe(fmt))
    return EXIT_VIOLATION


def _fmt(alg: AlgebraFile):
    return alg.field.format


def _need_ext(alg: AlgebraFile, path: str):
    if alg.ext is None:
        raise UsageError(f"{path}: no 'ext' entries")
    return alg.ext


def _parse_vector(tok: str, alg: AlgebraFile):
    field, dim = alg.field, alg.dim
    if tok.startswith("e") and tok[1:].isdigit():
        i = int(tok[1:])
        if not 1 <= i <= dim:
            raise UsageError(f"basis vector {tok} outside e1..e{dim}")
        return tuple(field.one if j == i else field.zero for j in range(1, dim + 1))
    parts = tok.split(",")
    if len(parts) != dim:
        raise UsageError(f"vector {tok!r} needs {dim} comma-separated entries")
    try:
        return tuple(field(Fraction(p)) for p in parts)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"bad vector {tok!r}: {e}") from None


def cmd_check_type(a):
    alg = load_algebra(a.file)
    v = find_type_violation(alg.structure, a.r, a.l, allow_any=a.any)
    return _report(f"type ({a.r},{a.l})", v, _fmt(alg))


def cmd_check_filippov(a):
    alg = load_algebra(a.file)
    return _report("Filippov identity", find_filippov_violation(alg.structure), _fmt(alg))


def cmd_check_lie_n(a):
    alg = load_algebra(a.file)
    return _report("Lie n-algebra identity", find_lie_n_violation(alg.structure), _fmt(alg))


def cmd_check_jacobi(a):
    alg = load_algebra(a.file)
    v = find_jacobi_explicit_violation(alg.structure, a.l)
    return _report(f"explicit (n-1,{a.l}) identity", v, _fmt(alg))


def cmd_nr(a):
    A, B = load_algebra(a.file1), load_algebra(a.file2)
    sys.stdout.write(serialize_algebra(AlgebraFile(nr_bracket(A.structure, B.structure))))
    return EXIT_OK


def cmd_eval(a):
    alg = load_algebra(a.file)
    args = [_parse_vector(t, alg) for t in a.args]
    if len(args) != alg.structure.arity:
        raise UsageError(f"need {alg.structure.arity} arguments, got {len(args)}")
    print(" ".join(alg.field.format(x) for x in evaluate(alg.structure, args)))
    return EXIT_OK


def cmd_invariance(a):
    alg = load_algebra(a.file)
    return _report("invariance", find_invariance_violation(alg.structure, alg.form_or_identity()), _fmt(alg))


def cmd_from_exterior(a):
    alg = load_algebra(a.file)
    form = alg.form_or_identity()
    mu = structure_from_exterior(_need_ext(alg, a.file), form, alg.structure.arity)
    sys.stdout.write(serialize_algebra(AlgebraFile(mu, form, alg.ext)))
    return EXIT_OK


def cmd_to_exterior(a):
    alg = load_algebra(a.file)
    form = alg.form_or_identity()
    try:
        ext = exterior_from_structure(alg.structure, form)
    except InvarianceError as e:
        print("FAIL invariance")
        print("  " + e.violation.describe(alg.field.format))
        return EXIT_VIOLATION
    sys.stdout.write(serialize_algebra(AlgebraFile(alg.structure, form, ext)))
    return EXIT_OK


def cmd_prop2(a):
    A, B = load_algebra(a.file1), load_algebra(a.file2)
    form = A.form_or_identity()
    if B.form is not None and B.form != form:
        raise UsageError("the two files carry different forms")
    v = find_prop2_violation(_need_ext(A, a.file1), _need_ext(B, a.file2), form)
    return _report("Poisson/NR sign identity", v, _fmt(A))


def cmd_type_poisson(a):
    alg = load_algebra(a.file)
    v = find_type_poisson_violation(_need_ext(alg, a.file), alg.form_or_identity(), a.r, a.l, alg.structure.arity)
    return _report(f"Poisson type ({a.r},{a.l})", v, _fmt(alg))


def cmd_ideals(a):
    alg = load_algebra(a.file)
    print(find_nontrivial_ideal(alg.structure, a.override_guards, a.seed))
    return EXIT_OK


def cmd_simple(a):
    alg = load_algebra(a.file)
    print(is_simple(alg.structure, a.override_guards, a.seed))
    return EXIT_OK


def cmd_operator_space(a):
    alg = load_algebra(a.file)
    L = operator_space(alg.structure)
    d = commutator_defect(alg.structure)
    print(f"dimension {L.dimension}")
    print(f"basis {L}")
    print(f"commutators all zero: {d.all_zero} (max rank {d.max_rank})")
    return EXIT_OK


def cmd_search(a):
    field = parse_field(a.field)
    if field.characteristic == 0:
        raise UsageError("search needs a prime field")
    results = exhaustive_type_search(field.characteristic, a.dim, a.arity, a.r, a.l,
                                     override=a.override_guards, jobs=a.jobs)
    print(f"{len(results)} structures of type ({a.r},{a.l}) on GF({field.characteristic})^{a.dim}")
    counterexamples = 0
    for mu, verdict in results:
        entries = "; ".join(f"{k}->{tuple(int(str(x)) for x in v)}" for k, v in mu.table.items()) or "zero"
        print(f"  {entries}: {verdict}")
        if verdict.status == SIMPLE_CERTIFIED and a.r == a.arity - 1 and a.l >= 1:
            counterexamples += 1
    if counterexamples:
        print(f"FAIL {counterexamples} simple algebras of type ({a.r},{a.l})")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_gen(a):
    field = parse_field(a.field)
    if a.kind == "top-form":
        mu = gen_top_form_filippov(a.n, field=field)
        alg = AlgebraFile(mu, BilinearForm.identity(a.n + 1, field), ExteriorElement.top_form(a.n + 1, field))
    else:
        if a.dim is None:
            raise UsageError("gen random needs --dim")
        alg = AlgebraFile(gen_random(a.n, a.dim, field, a.seed))
    sys.stdout.write(serialize_algebra(alg))
    return EXIT_OK


def cmd_verify_all(a):
    results = acceptance.run_all()
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return EXIT_VIOLATION if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--override-guards", action="store_true", default=argparse.SUPPRESS,
                        help="lift desk-scale resource guards")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized steps")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes for searches")

    p = argparse.ArgumentParser(prog="narylie", description=__doc__.splitlines()[0], parents=[common])
    p.set_defaults(override_guards=False, seed=None, jobs=1)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.set_defaults(func=fn)
        return sp

    sp = add("check-type", cmd_check_type, "type (r,l) condition via the NR bracket")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--any", action="store_true", help="allow (r,l) outside 0 <= l <= r < n")
    sp.add_argument("file")
    add("check-filippov", cmd_check_filippov, "Filippov identity").add_argument("file")
    add("check-lie-n", cmd_check_lie_n, "unshuffle Jacobi identity").add_argument("file")
    sp = add("check-jacobi", cmd_check_jacobi, "explicit (n-1,l) identity")
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("file")
    sp = add("nr", cmd_nr, "NR bracket of two structures")
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp = add("eval", cmd_eval, "evaluate the structure (vectors as e2 or 1,0,1/2)")
    sp.add_argument("file")
    sp.add_argument("--args", nargs="+", required=True)
    add("invariance", cmd_invariance, "invariance with respect to the form").add_argument("file")
    add("from-exterior", cmd_from_exterior, "structure induced by the ext element").add_argument("file")
    add("to-exterior", cmd_to_exterior, "exterior element inducing an invariant structure").add_argument("file")
    sp = add("prop2", cmd_prop2, "Poisson/NR sign identity for two ext elements")
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp = add("type-poisson", cmd_type_poisson, "type (r,l) condition via Poisson brackets")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("file")
    add("ideals", cmd_ideals, "search for a nontrivial ideal").add_argument("file")
    add("simple", cmd_simple, "simplicity verdict").add_argument("file")
    add("operator-space", cmd_operator_space, "operator space and commutator defect").add_argument("file")
    sp = add("search", cmd_search, "exhaustive search over GF(p)")
    sp.add_argument("--field", required=True)
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--arity", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp = add("gen", cmd_gen, "generate example structures")
    sp.add_argument("kind", choices=("top-form", "random"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--dim", type=int)
    sp.add_argument("--field", default="Q")
    add("verify-all", cmd_verify_all, "run the acceptance suite")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_FORMAT if e.code else EXIT_OK
    if args.seed is None:
        args.seed = 0 if args.command == "gen" else DEFAULT_LINE_SEED
    try:
        return args.func(args)
    except ResourceGuardError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_GUARD
    except (FormatError, UsageError, RangeError, FormError, FieldMismatchError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FORMAT


if __name__ == "__main__":
    sys.exit(main())
