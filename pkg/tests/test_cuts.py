import random
from fractions import Fraction

import pytest

from lincomp.code import TargetMatrix
from lincomp.cuts import (
    check_necessary,
    mincut_ratio,
    mincut_ratio_bruteforce,
    separated_sources,
)
from lincomp.errors import DimensionMismatch

from conftest import random_network, star_network


def test_n1_mincut(n1_network, t1):
    rep = mincut_ratio(n1_network, t1)
    assert rep.value == 1
    assert rep.witness_edges == (2, 3)
    assert rep.separated == (0, 1, 2)


def test_separated_sources(n1_network):
    assert separated_sources(n1_network, {2, 3}) == {0, 1, 2}
    assert separated_sources(n1_network, {2}) == {0}
    assert separated_sources(n1_network, set()) == set()
    # cutting only s2's out-edges separates s2 alone
    assert separated_sources(n1_network, {0, 1}) == {1}


def test_star_identity_target():
    net = star_network(3)
    t = TargetMatrix(q=2, rows=((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    rep = mincut_ratio(net, t)
    assert rep.value == 1
    assert check_necessary(net, t)


def test_sum_target_can_exceed_one():
    # two parallel edges per source make every cut twice as large as the rank
    from lincomp.netmodel import build_network
    net = build_network(2, ["s1", "rho"], ["s1"], "rho",
                        [("s1", "rho"), ("s1", "rho")])
    t = TargetMatrix(q=2, rows=((1,),))
    assert mincut_ratio(net, t).value == 2


def test_ratio_below_one():
    # three sources forced through a single bottleneck edge
    from lincomp.netmodel import build_network
    net = build_network(2, ["s1", "s2", "s3", "v", "rho"],
                        ["s1", "s2", "s3"], "rho",
                        [("s1", "v"), ("s2", "v"), ("s3", "v"), ("v", "rho")])
    t = TargetMatrix(q=2, rows=((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    rep = mincut_ratio(net, t)
    assert rep.value == Fraction(1, 3)
    assert not check_necessary(net, t)


def test_dimension_check(n1_network):
    t = TargetMatrix(q=2, rows=((1, 1),))
    with pytest.raises(DimensionMismatch):
        mincut_ratio(n1_network, t)


def _random_target(rng, l, s, q):
    while True:
        rows = tuple(tuple(rng.randrange(q) for _ in range(s)) for _ in range(l))
        try:
            return TargetMatrix(q=q, rows=rows)
        except DimensionMismatch:
            continue


def test_flow_agrees_with_bruteforce():
    """Oracle: the flow-based minimum equals the 2^|E| enumeration."""
    rng = random.Random(77)
    for _ in range(60):
        s = rng.choice([2, 3, 4])
        q = rng.choice([2, 3])
        net = random_network(rng, s=s, max_edges=10, q=q)
        l = rng.randint(1, s)
        t = _random_target(rng, l, s, q)
        fast = mincut_ratio(net, t)
        slow = mincut_ratio_bruteforce(net, t)
        assert fast.value == slow.value
        # both witnesses must attain the value they claim
        for rep in (fast, slow):
            sep = separated_sources(net, rep.witness_edges)
            assert tuple(sorted(sep)) == rep.separated
