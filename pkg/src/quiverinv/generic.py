"""Generic representations: concrete hom/ext, generic subdimension vectors,
Schur roots, and the canonical decomposition.

For representations V, W of an acyclic quiver the difference
``hom(V, W) - ext(V, W)`` equals the Euler pairing of the dimension vectors,
so both numbers fall out of the rank of one exact linear map.  Generic
values are computed structurally through the Schofield recursion

    ext(a, b) = max(-<a', b>  :  a' a generic subdimension vector of a)

where a' is a generic subdimension vector of a exactly when
``ext(a', a - a') = 0``.  All results are cached per process, keyed by the
Euler matrix.
"""

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .core import EulerMatrix, Quiver
from .errors import BudgetError, InputError, InvariantError, PreconditionError
from .linalg import rank

DEFAULT_SEED = 1729
BOX_LIMIT = 10**7

#: Nonzero small rationals used for sampled representations.
SAMPLE_POOL = tuple(
    Fraction(n, den)
    for den in (1, 2, 3)
    for n in range(-4, 5)
    if n != 0 and Fraction(n, den).denominator == den
)


@dataclass(frozen=True)
class Representation:
    """A representation: matrices over Q indexed by arrow id.

    ``matrices[a]`` has shape d(head) x d(tail) and carries Fraction entries.
    """

    quiver: Quiver
    dim: dict
    matrices: dict

    def __post_init__(self):
        for aid, tail, head in self.quiver.arrows:
            mat = self.matrices.get(aid)
            if mat is None:
                raise InputError(f"missing matrix for arrow {aid!r}")
            rows = len(mat)
            if rows != self.dim.get(head, 0):
                raise InputError(f"matrix for {aid!r} has wrong row count")
            for row in mat:
                if len(row) != self.dim.get(tail, 0):
                    raise InputError(f"matrix for {aid!r} has wrong column count")

    def dim_tuple(self, euler):
        return euler.tup(self.dim)


def random_representation(quiver, d, rng=None, pool=SAMPLE_POOL):
    """Representation with entries drawn uniformly from the sample pool."""
    if rng is None:
        rng = random.Random(DEFAULT_SEED)
    euler = EulerMatrix(quiver)
    dt = euler.tup(d)
    if any(x < 0 for x in dt):
        raise InputError("dimension vectors must be nonnegative")
    dims = dict(zip(euler.order, dt))
    matrices = {}
    for aid, tail, head in quiver.arrows:
        matrices[aid] = tuple(
            tuple(rng.choice(pool) for _ in range(dims[tail]))
            for _ in range(dims[head])
        )
    return Representation(quiver, dims, matrices)


def rep_to_json(rep):
    """JSON-ready dict; rational entries become 'p/q' strings."""
    return {
        "dimension": {v: rep.dim[v] for v in sorted(rep.dim)},
        "matrices": {
            aid: [[str(Fraction(x)) for x in row] for row in mat]
            for aid, mat in sorted(rep.matrices.items())
        },
    }


def rep_from_json(quiver, data):
    dims = {v: int(x) for v, x in data["dimension"].items()}
    matrices = {
        aid: tuple(tuple(Fraction(x) for x in row) for row in mat)
        for aid, mat in data["matrices"].items()
    }
    return Representation(quiver, dims, matrices)


def hom_ext_concrete(v, w):
    """Exact (hom, ext) for two concrete representations.

    Builds the linear map sending a vertexwise collection (phi(i)) to the
    arrowwise collection (phi(head a) V(a) - W(a) phi(tail a)); hom is its
    nullity and ext the corank, both over Q.
    """
    if v.quiver is not w.quiver and v.quiver != w.quiver:
        raise InputError("representations live on different quivers")
    quiver = v.quiver
    order = quiver.order
    dv = {i: v.dim.get(i, 0) for i in order}
    dw = {i: w.dim.get(i, 0) for i in order}
    col_offset = {}
    ncols = 0
    for i in order:
        col_offset[i] = ncols
        ncols += dv[i] * dw[i]
    nrows = sum(dw[h] * dv[t] for _, t, h in quiver.arrows)
    rows = []
    for aid, t, h in quiver.arrows:
        va = v.matrices[aid]
        wa = w.matrices[aid]
        for r in range(dw[h]):
            for c in range(dv[t]):
                row = [Fraction(0)] * ncols
                for s in range(dv[h]):
                    row[col_offset[h] + r * dv[h] + s] += va[s][c]
                for s in range(dw[t]):
                    row[col_offset[t] + s * dv[t] + c] -= wa[r][s]
                rows.append(row)
    rk = rank(rows) if rows else 0
    return ncols - rk, nrows - rk


def hom_ext_sampled(quiver, a, b, trials=20, seed=DEFAULT_SEED):
    """Componentwise minimum of (hom, ext) over sampled pairs.

    Hom and ext are upper semicontinuous, so the minimum over independent
    samples estimates the generic value from above-stably; agreement across
    trials is the caller's genericity evidence.
    """
    rng = random.Random(seed)
    best = None
    for _ in range(trials):
        v = random_representation(quiver, a, rng)
        w = random_representation(quiver, b, rng)
        he = hom_ext_concrete(v, w)
        best = he if best is None else (min(best[0], he[0]), min(best[1], he[1]))
    return best


# ---------------------------------------------------------------------------
# Schofield recursion

_EXT_CACHE = {}
_SUBDIMS_CACHE = {}
_CANDECOMP_CACHE = {}


def clear_caches():
    _EXT_CACHE.clear()
    _SUBDIMS_CACHE.clear()
    _CANDECOMP_CACHE.clear()


def _require_hereditary(euler):
    if not euler.is_path_algebra:
        raise PreconditionError("operation requires a path algebra")
    if not euler.quiver.is_acyclic():
        raise PreconditionError("operation requires an acyclic quiver")


def _check_box(dt, box_limit):
    size = 1
    for x in dt:
        if x < 0:
            raise InputError("dimension vectors must be nonnegative")
        size *= x + 1
    if size > box_limit:
        raise BudgetError("subdimension box size", box_limit)


def generic_subdims(euler, d, box_limit=BOX_LIMIT):
    """All generic subdimension vectors of d, sorted lexicographically.

    d' is included exactly when the generic representation of dimension d
    has a subrepresentation of dimension d', i.e. ext(d', d - d') = 0.
    """
    _require_hereditary(euler)
    dt = euler.tup(d)
    key = (euler.key, dt)
    cached = _SUBDIMS_CACHE.get(key)
    if cached is not None:
        return cached
    _check_box(dt, box_limit)
    out = []
    for sub in itertools.product(*(range(x + 1) for x in dt)):
        rest = tuple(a - b for a, b in zip(dt, sub))
        if ext_generic(euler, sub, rest, box_limit=box_limit) == 0:
            out.append(sub)
    result = tuple(sorted(out))
    _SUBDIMS_CACHE[key] = result
    return result


def ext_generic(euler, a, b, box_limit=BOX_LIMIT):
    """dim Ext^1 between independent generic representations of a and b."""
    _require_hereditary(euler)
    at = euler.tup(a)
    bt = euler.tup(b)
    if not any(at) or not any(bt):
        return 0
    key = (euler.key, at, bt)
    cached = _EXT_CACHE.get(key)
    if cached is not None:
        return cached
    best = 0
    for sub in generic_subdims(euler, at, box_limit=box_limit):
        value = -euler.euler(sub, bt)
        if value > best:
            best = value
    _EXT_CACHE[key] = best
    return best


def generic_hom_ext(euler, a, b, box_limit=BOX_LIMIT):
    """(hom, ext) between independent generic representations of a and b."""
    ext = ext_generic(euler, a, b, box_limit=box_limit)
    hom = euler.euler(a, b) + ext
    if hom < 0:
        raise InvariantError("negative generic hom dimension")
    return hom, ext


def is_schur_root(euler, d, box_limit=BOX_LIMIT):
    """True when the generic representation of d is indecomposable with
    trivial endomorphisms; equivalently d is stable for its own canonical
    weight, tested on generic subdimension vectors."""
    dt = euler.tup(d)
    if not any(dt):
        raise PreconditionError("the zero vector is not a root")
    theta = euler.theta(dt)
    for sub in generic_subdims(euler, dt, box_limit=box_limit):
        if not any(sub) or sub == dt:
            continue
        if sum(t * x for t, x in zip(theta, sub)) >= 0:
            return False
    return True


def root_class(euler, d):
    """Tag by the Tits form: 'real' (q=1), 'isotropic' (q=0), 'imaginary'."""
    q = euler.tits(d)
    if q == 1:
        return "real"
    if q == 0:
        return "isotropic"
    if q < 0:
        return "imaginary"
    return "non_root"


@dataclass(frozen=True)
class GenericDecomposition:
    """Canonical decomposition of a dimension vector.

    ``summands`` is a tuple of (root, multiplicity, cls) with roots in sorted
    vertex order; the sum of mult * root recovers the input.
    """

    dimension: tuple
    summands: tuple


def canonical_decomposition(euler, d, box_limit=BOX_LIMIT):
    """Decomposition of the generic representation into Schur summands.

    If d is not a Schur root, the generic representation splits off a
    generic subdimension vector d' with ext vanishing in both directions,
    and the decomposition is the multiset union of the two halves.  The
    refinement loop below scans subdimension vectors in lexicographic order,
    so the output is deterministic; the result itself is unique by the
    theory, which the tests verify against exhaustive search.
    """
    _require_hereditary(euler)
    dt = euler.tup(d)
    summands = _candecomp_tuple(euler, dt, box_limit)
    tagged = tuple(
        (root, mult, root_class(euler, root)) for root, mult in summands
    )
    return GenericDecomposition(dt, tagged)


def _candecomp_tuple(euler, dt, box_limit):
    if not any(dt):
        return ()
    key = (euler.key, dt)
    cached = _CANDECOMP_CACHE.get(key)
    if cached is not None:
        return cached
    if is_schur_root(euler, dt, box_limit=box_limit):
        result = ((dt, 1),)
        _CANDECOMP_CACHE[key] = result
        return result
    result = None
    for sub in generic_subdims(euler, dt, box_limit=box_limit):
        if not any(sub) or sub == dt:
            continue
        rest = tuple(a - b for a, b in zip(dt, sub))
        if ext_generic(euler, rest, sub, box_limit=box_limit) == 0:
            left = _candecomp_tuple(euler, sub, box_limit)
            right = _candecomp_tuple(euler, rest, box_limit)
            result = _merge_summands(left, right)
            break
    if result is None:
        raise InvariantError("non-Schur vector admits no generic splitting")
    _CANDECOMP_CACHE[key] = result
    return result


def _merge_summands(left, right):
    counts = {}
    for root, mult in left + right:
        counts[root] = counts.get(root, 0) + mult
    return tuple(sorted(counts.items()))
