# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Littlewood-Richardson kernel.

Identical contract to ``_lrkernel_py.schur_mult``; see that module for the
algorithm.  Shapes live in fixed C arrays, so inputs needing more than 64
rows are delegated to the pure-Python twin.
"""

cdef int _NO_CAP = 1 << 28
cdef int _MAXR = 64


cdef class _Mult:
    cdef int nrows, k
    cdef int shape[64]
    cdef int capl[64]
    cdef int mu[64]
    cdef int old[65][64]
    cdef int strips[66][64]
    cdef int prefixes[65][65]
    cdef dict results

    cdef void place_entry(self, int e):
        cdef int r, end
        if e == self.k:
            end = self.nrows
            while end and self.shape[end - 1] == 0:
                end -= 1
            key = tuple([self.shape[r] for r in range(end)])
            if key in self.results:
                self.results[key] += 1
            else:
                self.results[key] = 1
            return
        for r in range(self.nrows):
            self.old[e][r] = self.shape[r]
            self.strips[e + 1][r] = 0
        if e:
            self.prefixes[e][0] = 0
            for r in range(self.nrows):
                self.prefixes[e][r + 1] = self.prefixes[e][r] + self.strips[e][r]
        self.place_row(e, 0, self.mu[e], 0)

    cdef void place_row(self, int e, int r, int rem, int cum):
        cdef int tmax, t, bound
        if rem == 0:
            self.place_entry(e + 1)
            return
        if r == self.nrows:
            return
        tmax = rem
        bound = self.capl[r] - self.shape[r]
        if bound < tmax:
            tmax = bound
        if r:
            bound = self.old[e][r - 1] - self.shape[r]
            if bound < tmax:
                tmax = bound
            bound = self.shape[r - 1] - self.shape[r]
            if bound < tmax:
                tmax = bound
        if e:
            bound = self.prefixes[e][r] - cum
            if bound < tmax:
                tmax = bound
        t = tmax
        while t >= 0:
            self.shape[r] += t
            self.strips[e + 1][r] = t
            self.place_row(e, r + 1, rem - t, cum + t)
            self.shape[r] -= t
            self.strips[e + 1][r] = 0
            t -= 1


def schur_mult(lam, mu, maxrows, cap=None):
    """dict mapping partitions nu to c^nu_{lam,mu}; see the pure twin."""
    lam = tuple(lam)
    mu = tuple(mu)
    if len(lam) > maxrows or len(mu) > maxrows:
        return {}
    if maxrows > _MAXR:
        from . import _lrkernel_py
        return _lrkernel_py.schur_mult(lam, mu, maxrows, cap)
    if len(mu) > len(lam):
        lam, mu = mu, lam
    cdef _Mult m = _Mult()
    cdef int r
    m.nrows = maxrows
    m.k = len(mu)
    for r in range(maxrows):
        m.capl[r] = _NO_CAP
    if cap is not None:
        for r in range(maxrows):
            m.capl[r] = cap[r] if r < len(cap) else 0
    for r in range(maxrows):
        m.shape[r] = lam[r] if r < len(lam) else 0
        if m.shape[r] > m.capl[r]:
            return {}
    for r in range(m.k):
        m.mu[r] = mu[r]
    m.results = {}
    m.place_entry(0)
    return m.results
