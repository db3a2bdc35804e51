"""Littlewood-Richardson products with a swappable kernel.

The actual strip-insertion enumeration lives in ``_lrkernel`` (compiled) and
``_lrkernel_py`` (pure Python); both export the same ``schur_mult`` function
and this module picks one at import time.  Set ``QUIVERINV_PURE=1`` to force
the pure kernel even when the compiled one is installed.

All entry points cache aggressively: the weight-space enumeration in
``siweights`` revisits the same small products thousands of times.
"""

import os

from .errors import InputError
from . import _lrkernel_py

if os.environ.get("QUIVERINV_PURE"):
    _kernel = _lrkernel_py
    BACKEND = "python"
else:
    try:
        from . import _lrkernel as _kernel

        BACKEND = "compiled"
    except ImportError:
        _kernel = _lrkernel_py
        BACKEND = "python"


def partition(parts):
    """Validate and normalize to a trimmed, weakly decreasing tuple."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for a, b in zip(p, p[1:]):
        if a < b:
            raise InputError(f"not weakly decreasing: {list(parts)}")
    if p and p[-1] < 0:
        raise InputError("partition parts must be nonnegative")
    return p


_PRODUCT_CACHE = {}


def schur_product(lam, mu, rows, cap=None):
    """Expansion of S_lam * S_mu in at most ``rows`` rows.

    Returns a dict mapping trimmed partitions nu to c^nu_{lam,mu}, keeping
    only nu with at most ``rows`` rows and, when ``cap`` is given, nu
    contained rowwise in ``cap`` (row r at most cap[r], missing rows zero).
    Discarding wider shapes is exact as long as every target coefficient the
    caller extracts lies inside the cap, since c^nu vanishes unless both
    factors fit inside nu.
    """
    lam = partition(lam)
    mu = partition(mu)
    if lam > mu:
        lam, mu = mu, lam
    if cap is not None:
        cap = tuple(int(x) for x in cap)
    key = (lam, mu, rows, cap)
    found = _PRODUCT_CACHE.get(key)
    if found is None:
        found = _kernel.schur_mult(lam, mu, rows, cap)
        _PRODUCT_CACHE[key] = found
    return found


def lr_coefficient(lam, mu, nu):
    """The Littlewood-Richardson coefficient c^nu_{lam,mu}."""
    lam = partition(lam)
    mu = partition(mu)
    nu = partition(nu)
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    rows = max(len(nu), 1)
    if len(lam) > rows or len(mu) > rows:
        return 0
    return schur_product(lam, mu, rows, nu).get(nu, 0)


def tensor_fold(lams, rows, cap=None):
    """Expansion of a product of several Schur functions.

    Returns {nu: multiplicity} under the same row/cap trimming rules as
    schur_product.  Factors are folded in sorted order so the cache sees a
    canonical sequence regardless of how the caller discovered them.
    """
    if cap is not None:
        cap = tuple(int(x) for x in cap)
    acc = {(): 1}
    for lam in sorted(partition(l) for l in lams):
        if not lam:
            continue
        contained = len(lam) <= rows and (
            cap is None
            or all(
                lam[r] <= (cap[r] if r < len(cap) else 0)
                for r in range(len(lam))
            )
        )
        if not contained:
            return {}
        nxt = {}
        for nu, mult in acc.items():
            for out, c in schur_product(nu, lam, rows, cap).items():
                nxt[out] = nxt.get(out, 0) + mult * c
        acc = nxt
        if not acc:
            break
    return acc


def clear_caches():
    _PRODUCT_CACHE.clear()
