"""Exact arithmetic for quiver representations: Euler forms, canonical
decompositions, stability, semi-invariant dimensions, canonical algebras.

Everything integer-valued is exact (no floats anywhere in the math paths);
rational quantities use ``fractions.Fraction``.  The heavier machinery lives
in submodules; this namespace re-exports the types and entry points that
nearly every caller touches.
"""

from .canonical import CanonicalAlgebra, build_canonical, parse_canonical
from .core import (
    BoundQuiver,
    EulerMatrix,
    Quiver,
    classify_path_algebra,
    dynkin_quiver,
    euclidean_quiver,
    format_quiver,
    kronecker_quiver,
    null_root,
    parse_quiver,
)
from .errors import (
    BudgetError,
    InputError,
    InvariantError,
    PreconditionError,
    QuiverInvError,
)
from .generic import canonical_decomposition, is_schur_root, root_class
from .siweights import si_dim, si_table
from .stability import (
    effective_cone,
    is_semistable_generic,
    is_stable_generic,
    theta_stable_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "BoundQuiver",
    "BudgetError",
    "CanonicalAlgebra",
    "EulerMatrix",
    "InputError",
    "InvariantError",
    "PreconditionError",
    "Quiver",
    "QuiverInvError",
    "build_canonical",
    "canonical_decomposition",
    "classify_path_algebra",
    "dynkin_quiver",
    "effective_cone",
    "euclidean_quiver",
    "format_quiver",
    "is_schur_root",
    "is_semistable_generic",
    "is_stable_generic",
    "kronecker_quiver",
    "null_root",
    "parse_canonical",
    "parse_quiver",
    "root_class",
    "si_dim",
    "si_table",
    "theta_stable_decomposition",
    "__version__",
]
