"""Dimensions of semi-invariant weight spaces, with checkers built on them.

The coordinate ring of the representation space decomposes, arrow by arrow,
into Schur-functor blocks indexed by one partition per arrow (Cauchy).  A
weight-theta semi-invariant contributes to the block exactly when, at every
vertex, the tensor product of the incoming Schur factors matches the product
of the outgoing ones twisted by the theta(v)-th power of the determinant.
Dual factors never appear explicitly: pairing S_nu against the dual block
shifts the target partition by theta(v) along the full column, which is the
determinant-power bookkeeping, and the per-vertex multiplicity becomes

    sum_nu  c_nu(tail factors) * c_{nu - theta(v)*1}(head factors)

with nu running over partitions with at most d(v) rows.  Tails-only and
heads-only vertices degenerate to a single rectangle coefficient, which the
kernels extract with rowwise caps for pruning.

The block is nonzero only when the partition sizes s_a = |lambda_a| satisfy
the flow-balance equations sum_out s - sum_in s = theta(v) d(v) at every
vertex; on an acyclic quiver that flow polytope is bounded, so the whole
enumeration is finite.  Budgets count partition tuples.
"""

import itertools
from dataclasses import dataclass

from . import lr
from .errors import BudgetError, InputError, InvariantError, PreconditionError

DEFAULT_BUDGET = 5_000_000

_PARTS_CACHE = {}
_VERTEX_CACHE = {}


def clear_caches():
    _PARTS_CACHE.clear()
    _VERTEX_CACHE.clear()
    _COUNT_CACHE.clear()


_COUNT_CACHE = {}


def count_partitions(size, rows):
    """Number of partitions of ``size`` with at most ``rows`` parts."""
    if size == 0:
        return 1
    if rows == 0 or size < 0:
        return 0
    key = (size, rows)
    found = _COUNT_CACHE.get(key)
    if found is None:
        found = count_partitions(size, rows - 1) + count_partitions(
            size - rows, rows
        )
        _COUNT_CACHE[key] = found
    return found


def partitions_bounded(size, rows):
    """All partitions of ``size`` with at most ``rows`` parts, as a tuple."""
    key = (size, rows)
    found = _PARTS_CACHE.get(key)
    if found is not None:
        return found
    out = []

    def rec(remaining, max_part, slots, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if slots == 0 or max_part == 0:
            return
        cap = min(max_part, remaining)
        for p in range(cap, 0, -1):
            if p * slots < remaining:
                break
            prefix.append(p)
            rec(remaining - p, p, slots - 1, prefix)
            prefix.pop()

    rec(size, size, rows, [])
    result = tuple(out)
    _PARTS_CACHE[key] = result
    return result


def _require_acyclic(euler):
    if not euler.is_path_algebra:
        raise PreconditionError("semi-invariant dimensions require a path algebra")
    if not euler.quiver.is_acyclic():
        raise PreconditionError("semi-invariant dimensions require an acyclic quiver")


def _shift(nu, dv, m):
    """nu - m * (1,...,1) over dv rows, trimmed, or None when not a partition."""
    padded = list(nu) + [0] * (dv - len(nu))
    if m > 0 and padded[-1] < m:
        return None
    shifted = [x - m for x in padded]
    while shifted and shifted[-1] == 0:
        shifted.pop()
    return tuple(shifted)


def _vertex_mult(dv, tv, tails, heads):
    """Multiplicity of det^tv in (tail product) tensor (head product)^*."""
    if dv == 0:
        return 1
    key = (dv, tv, tails, heads)
    found = _VERTEX_CACHE.get(key)
    if found is not None:
        return found
    if not heads:
        if tv < 0:
            result = 0
        else:
            rect = (tv,) * dv if tv else ()
            result = lr.tensor_fold(tails, dv, cap=rect).get(rect, 0)
    elif not tails:
        if tv > 0:
            result = 0
        else:
            rect = (-tv,) * dv if tv else ()
            result = lr.tensor_fold(heads, dv, cap=rect).get(rect, 0)
    else:
        left = lr.tensor_fold(tails, dv)
        right = lr.tensor_fold(heads, dv)
        result = 0
        for nu, c in left.items():
            target = _shift(nu, dv, tv)
            if target is not None:
                result += c * right.get(target, 0)
    _VERTEX_CACHE[key] = result
    return result


def _flows(quiver, supply):
    """Nonnegative arrow flows with prescribed divergence, as dicts.

    supply[v] = (sum of flows out of v) - (sum of flows in), fixed per
    vertex.  Vertices are visited in topological order, so inflows are known
    before outflows are chosen; infeasible branches are cut immediately.
    """
    order = quiver.topological_order()
    out_arrows = {v: sorted(a for a in quiver.arrows if a[1] == v) for v in order}
    inflow = {v: 0 for v in order}

    def compositions(total, k):
        if k == 0:
            if total == 0:
                yield ()
            return
        if k == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, k - 1):
                yield (first,) + rest

    def rec(i, flow):
        if i == len(order):
            yield dict(flow)
            return
        v = order[i]
        arrows = out_arrows[v]
        total = supply[v] + inflow[v]
        if total < 0:
            return
        for combo in compositions(total, len(arrows)):
            for (aid, _, head), s in zip(arrows, combo):
                flow[aid] = s
                inflow[head] += s
            yield from rec(i + 1, flow)
            for (aid, _, head), s in zip(arrows, combo):
                del flow[aid]
                inflow[head] -= s

    yield from rec(0, {})


PIVOT_THRESHOLD = 10_000


def _pivot_vector(euler, theta):
    """The e with theta = -<-, e>, when it is a genuine dimension vector."""
    from . import linalg

    inv = linalg.inverse(euler.matrix)
    e = linalg.matvec(inv, tuple(-t for t in theta))
    if any(x.denominator != 1 or x < 0 for x in e):
        return None
    return tuple(int(x) for x in e)


def _si_cost(euler, dt, th, cap):
    """Partition tuples the direct enumeration would visit; cap+1 if more."""
    quiver = euler.quiver
    idx = euler.index
    supply = {v: th[idx[v]] * dt[idx[v]] for v in euler.order}
    arrows = sorted(quiver.arrows)
    rows = {aid: min(dt[idx[t]], dt[idx[h]]) for aid, t, h in arrows}
    cost = 0
    nflows = 0
    for flow in _flows(quiver, supply):
        nflows += 1
        if nflows > cap:
            return cap + 1
        c = 1
        for aid, _, _ in arrows:
            c *= count_partitions(flow[aid], rows[aid])
            if c == 0:
                break
        cost += c
        if cost > cap:
            return cap + 1
    return cost


def si_dim(euler, d, theta, budget=DEFAULT_BUDGET, pivot=True):
    """dim SI(Q,d)_theta, exactly.

    Zero whenever theta(d) != 0; otherwise the Cauchy-block sum described in
    the module docstring.  Raises BudgetError once more than ``budget``
    partition tuples would be examined.

    Weights of the form -<-,e> for a dimension vector e admit a second,
    often far smaller enumeration: dim SI(Q,d)_{-<-,e>} equals
    dim SI(Q,e)_{<d,->}.  Both candidate enumerations are sized exactly (a
    cheap flow walk with cached partition counts) and the smaller one runs;
    ``pivot=False`` forces the literal side, which ``circ`` uses to keep its
    two evaluations independent.
    """
    _require_acyclic(euler)
    dt = euler.tup(d)
    th = euler.tup(theta)
    if any(x < 0 for x in dt):
        raise InputError("dimension vectors must be nonnegative")
    if sum(t * x for t, x in zip(th, dt)) != 0:
        return 0
    cost = _si_cost(euler, dt, th, budget)
    if pivot and (cost > budget or cost > PIVOT_THRESHOLD):
        e = _pivot_vector(euler, th)
        if e is not None:
            wl = euler.weight_left(dt)
            if _si_cost(euler, e, wl, min(cost - 1, budget)) < cost:
                return _si_dim_direct(euler, e, wl, budget)
    if cost > budget:
        raise BudgetError("semi-invariant partition tuples", budget)
    return _si_dim_direct(euler, dt, th, budget)


def _si_dim_direct(euler, dt, th, budget):
    quiver = euler.quiver
    idx = euler.index
    supply = {v: th[idx[v]] * dt[idx[v]] for v in euler.order}
    arrows = sorted(quiver.arrows)
    rows_by_arrow = {
        aid: min(dt[idx[t]], dt[idx[h]]) for aid, t, h in arrows
    }
    incidence = []
    for v in euler.order:
        tails_at = [a[0] for a in arrows if a[1] == v]
        heads_at = [a[0] for a in arrows if a[2] == v]
        if tails_at or heads_at or supply[v]:
            incidence.append((v, tails_at, heads_at))

    total = 0
    used = 0
    for flow in _flows(quiver, supply):
        choices = []
        cost = 1
        for aid, _, _ in arrows:
            plist = partitions_bounded(flow[aid], rows_by_arrow[aid])
            if not plist:
                cost = 0
                break
            choices.append(plist)
            cost *= len(plist)
        if cost == 0:
            continue
        used += cost
        if used > budget:
            raise BudgetError("semi-invariant partition tuples", budget)
        for combo in itertools.product(*choices):
            chosen = {aid: lam for (aid, _, _), lam in zip(arrows, combo)}
            prod = 1
            for v, tails_at, heads_at in incidence:
                mult = _vertex_mult(
                    dt[idx[v]],
                    th[idx[v]],
                    tuple(sorted(chosen[a] for a in tails_at)),
                    tuple(sorted(chosen[a] for a in heads_at)),
                )
                if mult == 0:
                    prod = 0
                    break
                prod *= mult
            total += prod
    return total


@dataclass(frozen=True)
class SIWeightTable:
    """Dimensions of SI(Q,d) along the ray of a weight: dims[n] at n*theta.

    A weight with theta(d) != 0 never admits semi-invariants anywhere on its
    ray, and the table is identically zero in that case.
    """

    base_weight: tuple
    dims: tuple


def si_table(euler, d, theta, n_max, budget=DEFAULT_BUDGET):
    _require_acyclic(euler)
    dt = euler.tup(d)
    th = euler.tup(theta)
    if n_max < 0:
        raise InputError("table length must be nonnegative")
    if sum(t * x for t, x in zip(th, dt)) != 0:
        return SIWeightTable(th, (0,) * (n_max + 1))
    dims = tuple(
        si_dim(euler, dt, tuple(n * t for t in th), budget=budget)
        for n in range(n_max + 1)
    )
    return SIWeightTable(th, dims)


def circ(euler, d, e, budget=DEFAULT_BUDGET):
    """The pairing d o e, evaluated on both sides of the reciprocity.

    Computes dim SI(Q,e)_{<d,->} and dim SI(Q,d)_{-<-,e>} and insists they
    agree; either number is the value.
    """
    _require_acyclic(euler)
    dt = euler.tup(d)
    et = euler.tup(e)
    left = si_dim(euler, et, euler.weight_left(dt), budget=budget, pivot=False)
    right = si_dim(
        euler,
        dt,
        tuple(-x for x in euler.weight_right(et)),
        budget=budget,
        pivot=False,
    )
    if left != right:
        raise InvariantError(
            f"reciprocity mismatch: {left} != {right} for d={dt}, e={et}"
        )
    return left


@dataclass(frozen=True)
class PolynomialityResult:
    status: str
    degree: int | None
    degree_second: int | None
    violated_at: int | None
    first: tuple
    second: tuple


def _fit_degree(values):
    """Smallest k with all (k+1)-th forward differences zero, or None."""
    level = list(values)
    k = 0
    while any(level):
        nxt = [b - a for a, b in zip(level, level[1:])]
        if not nxt:
            return None
        level = nxt
        k += 1
    return max(k - 1, 0)


def _newton_eval(values, degree, n):
    """Evaluate the forward-difference interpolant of the value prefix."""
    level = list(values[: degree + 1])
    coeffs = []
    while level:
        coeffs.append(level[0])
        level = [b - a for a, b in zip(level, level[1:])]
    total = 0
    binom = 1
    for k, c in enumerate(coeffs):
        if k:
            binom = binom * (n - k + 1) // k
        total += c * binom
    return total


def polynomiality_check(euler, d, e, n_max, budget=DEFAULT_BUDGET):
    """Confirm that N -> (N d) o e and N -> d o (N e) are polynomial.

    The fit must be pinned by the data: the difference table has to bottom
    out strictly before the last column, otherwise the sample proves nothing
    and the call is rejected.  A fitted polynomial that misses a sample, or
    a constant term other than 1, is reported as violated (neither can occur
    unless the enumeration itself is broken).
    """
    _require_acyclic(euler)
    dt = euler.tup(d)
    et = euler.tup(e)
    if n_max < 1:
        raise InputError("n_max must be at least 1")
    if circ(euler, dt, et, budget=budget) == 0:
        raise PreconditionError("polynomiality requires circ(d, e) != 0")
    wl = euler.weight_left(dt)
    wr = tuple(-x for x in euler.weight_right(et))
    first = tuple(
        si_dim(euler, et, tuple(n * t for t in wl), budget=budget)
        for n in range(n_max + 1)
    )
    second = tuple(
        si_dim(euler, dt, tuple(n * t for t in wr), budget=budget)
        for n in range(n_max + 1)
    )
    degrees = []
    for values in (first, second):
        deg = _fit_degree(values)
        if deg is None:
            raise PreconditionError(
                f"n_max={n_max} leaves the interpolating degree unpinned"
            )
        degrees.append(deg)

    def check(values, deg):
        if values[0] != 1:
            return 0
        for n, v in enumerate(values):
            if _newton_eval(values, deg, n) != v:
                return n
        return None

    for values, deg in ((first, degrees[0]), (second, degrees[1])):
        bad = check(values, deg)
        if bad is not None:
            return PolynomialityResult(
                "violated", None, None, bad, first, second
            )
    return PolynomialityResult(
        "ok", degrees[0], degrees[1], None, first, second
    )


@dataclass(frozen=True)
class LogConcavityResult:
    status: str
    index: int | None


def log_concavity_check(values):
    """First interior index with v[i-1] * v[i+1] > v[i]^2, if any."""
    vals = [int(x) for x in values]
    if any(v < 0 for v in vals):
        raise InputError("log-concavity applies to nonnegative sequences")
    for i in range(1, len(vals) - 1):
        if vals[i - 1] * vals[i + 1] > vals[i] ** 2:
            return LogConcavityResult("violated", i)
    return LogConcavityResult("ok", None)


@dataclass(frozen=True)
class WildViolation:
    status: str
    dprime: tuple | None
    d: tuple | None
    theta: tuple | None
    n: int | None
    si_theta: int | None
    si_2theta: int | None
    frontier: tuple


def wild_violation_search(
    euler, dprime_max=2, n_cap=16, budget=DEFAULT_BUDGET
):
    """Hunt for a weight whose SI dimensions fail the square bound.

    Scans imaginary non-isotropic Schur roots d' (entries up to dprime_max,
    lexicographic order), forms theta = -<-,d'> and the integral solution
    d'' of <d'',-> = theta_{d'}, and walks N upward until

        dim SI(Q, N d'')_{2 theta}  >  (dim SI(Q, N d'')_theta)^2 .

    Both dimensions are evaluated through the reciprocity identity, on the
    d' side, where the enumeration is small; reciprocity itself is checked
    independently by ``circ``.  Returns the first hit or a not_found result
    carrying the search frontier.
    """
    from . import core, generic

    cls = core.classify_path_algebra(euler.quiver)
    if cls.type != "wild":
        raise PreconditionError("violation search requires a wild quiver")
    _require_acyclic(euler)
    n = euler.n
    frontier = []
    for entries in itertools.product(range(dprime_max + 1), repeat=n):
        if not any(entries):
            continue
        if generic.root_class(euler, entries) != "imaginary":
            continue
        if not generic.is_schur_root(euler, entries):
            continue
        theta_dp = euler.theta(entries)
        dpp_frac = euler.solve_weight_left(theta_dp)
        if any(x.denominator != 1 for x in dpp_frac):
            raise InvariantError("Euler matrix lost unimodularity")
        dpp = tuple(int(x) for x in dpp_frac)
        if any(x < 0 for x in dpp):
            frontier.append((entries, "d'' not effective"))
            continue
        theta = tuple(-x for x in euler.weight_right(entries))
        double = tuple(2 * x for x in entries)
        reached = 0
        try:
            for nn in range(1, n_cap + 1):
                weight = tuple(nn * t for t in theta_dp)
                u = si_dim(euler, entries, weight, budget=budget)
                w = si_dim(euler, double, weight, budget=budget)
                reached = nn
                if w > u * u:
                    return WildViolation(
                        "found",
                        entries,
                        tuple(nn * x for x in dpp),
                        theta,
                        nn,
                        u,
                        w,
                        (),
                    )
        except BudgetError:
            frontier.append((entries, f"budget at N={reached + 1}"))
            continue
        frontier.append((entries, f"no hit through N={n_cap}"))
    return WildViolation(
        "not_found", None, None, None, None, None, None, tuple(frontier)
    )
