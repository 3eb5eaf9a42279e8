"""Exact kernel for skew-symmetric n-ary algebras: Nijenhuis-Richardson calculus,
type (r, l) Jacobi conditions, invariant structures from exterior elements, and
ideal/simplicity analysis over Q and GF(p)."""

from .altforms import (
    AltForm,
    Violation,
    check_filippov,
    check_jacobi_explicit,
    check_lie_n,
    check_type,
    evaluate,
    insertion,
    nr_bracket,
    partial_insert,
)
from .analysis import (
    AnalysisVerdict,
    commutator_defect,
    exhaustive_type_search,
    find_nontrivial_ideal,
    ideal_closure,
    is_ideal,
    is_simple,
    operator_space,
)
from .exterior import (
    BilinearForm,
    ExteriorElement,
    check_invariance,
    check_type_poisson,
    exterior_from_structure,
    poisson_bracket,
    prop2_check,
    structure_from_exterior,
    wedge,
)
from .fields import GF, QQ
from .linalg import Subspace, enumerate_subspaces, rref, subspace_membership

__version__ = "0.1.0"
