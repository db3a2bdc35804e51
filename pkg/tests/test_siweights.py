"""Semi-invariant dimensions, reciprocity, polynomiality, log-concavity."""

import itertools
import random

import pytest

from quiverinv.core import EulerMatrix, dynkin_quiver, euclidean_quiver, kronecker_quiver
from quiverinv.errors import BudgetError, InputError, PreconditionError
from quiverinv import siweights

from oracles import si_dim_thin

K2 = kronecker_quiver(2)
K3 = kronecker_quiver(3)
A2 = dynkin_quiver("A2")
A3 = dynkin_quiver("A3")
EK2 = EulerMatrix(K2)
EK3 = EulerMatrix(K3)
EA2 = EulerMatrix(A2)
EA3 = EulerMatrix(A3)


def brute_partitions(size, rows):
    out = []

    def gen(rest, mx, cur):
        if rest == 0:
            out.append(tuple(cur))
            return
        if len(cur) == rows:
            return
        for p in range(min(mx, rest), 0, -1):
            gen(rest - p, p, cur + [p])

    gen(size, size, [])
    return out


def test_partition_helpers_against_brute_force():
    for size in range(7):
        for rows in range(5):
            want = brute_partitions(size, rows) if size else [()]
            got = list(siweights.partitions_bounded(size, rows))
            assert sorted(got) == sorted(want)
            assert siweights.count_partitions(size, rows) == len(want)


def test_si_dim_kronecker_ray():
    for n in range(7):
        assert siweights.si_dim(EK2, (1, 1), (n, -n)) == n + 1


def test_si_dim_a2_ray():
    for n in range(7):
        assert siweights.si_dim(EA2, (1, 1), (n, -n)) == 1


def test_si_dim_zero_when_weight_misses_d():
    assert siweights.si_dim(EK2, (2, 1), (1, -1)) == 0
    assert siweights.si_dim(EA3, (1, 1, 1), (1, 0, 0)) == 0


def test_si_dim_trivial_weight_is_one():
    rng = random.Random(13)
    for e in (EK2, EK3, EA3):
        for _ in range(6):
            d = tuple(rng.randrange(0, 3) for _ in range(e.n))
            assert siweights.si_dim(e, d, (0,) * e.n) == 1


def test_si_dim_thin_oracle():
    rng = random.Random(29)
    quivers = [K2, K3, A3, dynkin_quiver("D4"), euclidean_quiver("A~2")]
    checked = 0
    for quiver in quivers:
        e = EulerMatrix(quiver)
        for _ in range(12):
            d = tuple(rng.randrange(0, 2) for _ in range(e.n))
            theta = tuple(rng.randrange(-2, 3) for _ in range(e.n))
            want = si_dim_thin(quiver, d, theta)
            assert siweights.si_dim(e, d, theta) == want
            checked += want > 0
    assert checked >= 10


def test_si_dim_budget():
    with pytest.raises(BudgetError):
        siweights.si_dim(EK2, (8, 8), (8, -8), budget=10)


def test_si_dim_rejects_cyclic():
    from quiverinv.core import Quiver

    cyc = EulerMatrix(Quiver(("1", "2"), (("a", "1", "2"), ("b", "2", "1"))))
    with pytest.raises(PreconditionError):
        siweights.si_dim(cyc, (1, 1), (0, 0))


def test_si_table():
    table = siweights.si_table(EK2, (1, 1), (1, -1), 6)
    assert table.base_weight == (1, -1)
    assert table.dims == (1, 2, 3, 4, 5, 6, 7)
    dead = siweights.si_table(EK2, (2, 1), (1, -1), 3)
    assert dead.dims == (0, 0, 0, 0)
    with pytest.raises(InputError):
        siweights.si_table(EK2, (1, 1), (1, -1), -1)


def test_circ_examples():
    assert siweights.circ(EK2, (1, 1), (1, 1)) == 2
    # on A2 the weight <(1,1),.> = (1,0) does not annihilate e = (1,1)
    assert siweights.circ(EA2, (1, 1), (1, 1)) == 0
    assert siweights.circ(EK2, (2, 1), (1, 1)) == 0


def test_circ_reciprocity_random():
    rng = random.Random(37)
    for e in (EK2, EA3, EK3):
        for _ in range(18):
            d = tuple(rng.randrange(0, 4) for _ in range(e.n))
            f = tuple(rng.randrange(0, 4) for _ in range(e.n))
            # circ itself raises InvariantError if its two legs disagree
            assert siweights.circ(e, d, f) >= 0


def test_polynomiality_examples():
    res = siweights.polynomiality_check(EK2, (1, 1), (1, 1), 6)
    assert (res.status, res.degree) == ("ok", 1)
    assert res.first == (1, 2, 3, 4, 5, 6, 7)
    const = siweights.polynomiality_check(EK2, (1, 0), (2, 1), 6)
    assert (const.status, const.degree) == ("ok", 0)
    with pytest.raises(PreconditionError):
        siweights.polynomiality_check(EK2, (2, 1), (1, 1), 5)


def test_log_concavity_examples():
    assert siweights.log_concavity_check((1, 2, 3, 4)).status == "ok"
    res = siweights.log_concavity_check((1, 1, 3))
    assert (res.status, res.index) == ("violated", 1)
    with pytest.raises(InputError):
        siweights.log_concavity_check((1, -1, 1))


def test_log_concavity_on_symmetric_square_table():
    table = siweights.si_table(EK2, (2, 2), (1, -1), 6)
    assert table.dims == tuple((n + 1) * (n + 2) // 2 for n in range(7))
    assert siweights.log_concavity_check(table.dims).status == "ok"


def test_wild_search_finds_k3_witness():
    hit = siweights.wild_violation_search(EK3)
    assert hit.status == "found"
    assert hit.dprime == (1, 1)
    assert hit.n == 7
    assert hit.si_2theta > hit.si_theta**2
    # reciprocity moves both evaluations to the d' side
    lam = tuple(hit.n * t for t in EK3.theta(hit.dprime))
    assert hit.si_theta == siweights.si_dim(EK3, hit.dprime, lam)
    twice = tuple(2 * x for x in hit.dprime)
    assert hit.si_2theta == siweights.si_dim(EK3, twice, lam)


def test_wild_search_preconditions():
    with pytest.raises(PreconditionError):
        siweights.wild_violation_search(EK2)
    hit = siweights.wild_violation_search(EK3, budget=0)
    assert hit.status == "not_found"
    assert all("budget" in note for _, note in hit.frontier)
