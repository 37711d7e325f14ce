import itertools
import random

import pytest

from lincomp.code import TargetMatrix
from lincomp.equiv import (
    Classification,
    binary_zero_transform,
    canonicalize,
    classify,
    factor_iu,
)
from lincomp.errors import AllOnesColumnVector, NotBinary, NotInClass

from conftest import all_binary_targets, random_all_units_target


def test_canonicalize_reconstructs():
    t = TargetMatrix(q=3, rows=((1, 2, 1), (0, 1, 2)))
    eq = canonicalize(t)
    assert eq.reconstruct() == t.as_lists()
    # first two columns are independent, so they form the identity block
    assert eq.perm == (0, 1, 2)


def test_classify_square_and_row():
    t = TargetMatrix(q=2, rows=((1, 0), (0, 1)))
    assert classify(t)[0] == Classification.IDENTITY_LIKE
    t = TargetMatrix(q=2, rows=((1, 1, 1),))
    assert classify(t)[0] == Classification.SUM_LIKE


def test_classify_t1_has_zero(t1):
    cls, eq = classify(t1)
    assert cls == Classification.HAS_ZERO
    assert any(x == 0 for row in eq.P for x in row)
    assert eq.reconstruct() == t1.as_lists()


def test_classify_all_units():
    t = TargetMatrix(q=2, rows=((1, 0, 1), (0, 1, 1)))
    cls, eq = classify(t)
    assert cls == Classification.ALL_UNITS
    assert all(x != 0 for row in eq.P for x in row)
    assert eq.reconstruct() == t.as_lists()


def test_classes_can_overlap_when_gap_exceeds_one():
    # this l=2, s=4 target has both an all-units witness and a zero witness;
    # classification prefers all-units
    t = TargetMatrix(q=2, rows=((1, 0, 1, 1), (0, 1, 0, 1)))
    from lincomp.equiv import _equivalence_for_subset
    cls, _ = classify(t)
    assert cls == Classification.ALL_UNITS
    zero_witness = None
    for subset in itertools.combinations(range(4), 2):
        eq = _equivalence_for_subset(t, subset)
        if eq is not None and any(x == 0 for row in eq.P for x in row):
            zero_witness = eq
            break
    assert zero_witness is not None


def test_classify_random_witness_valid():
    rng = random.Random(21)
    for _ in range(40):
        s = rng.choice([3, 4])
        q = rng.choice([2, 3])
        t = random_all_units_target(rng, s, q)
        cls, eq = classify(t)
        assert cls == Classification.ALL_UNITS
        assert eq.reconstruct() == t.as_lists()


def test_binary_dichotomy_exhaustive():
    """Over F_2 with 1 < l < s, every target either transforms to a
    zero-containing (I P) or (when s-l = 1) is equivalent to (I 1)."""
    for l, s in [(2, 3), (2, 4), (3, 4)]:
        for t in all_binary_targets(l, s):
            try:
                eq = binary_zero_transform(t)
            except AllOnesColumnVector:
                assert s - l == 1
                cls, _ = classify(t)
                assert cls == Classification.ALL_UNITS
                continue
            assert any(x == 0 for row in eq.P for x in row)
            assert eq.reconstruct() == t.as_lists()


def test_binary_zero_transform_guards():
    t = TargetMatrix(q=3, rows=((1, 0, 1), (0, 1, 1)))
    with pytest.raises(NotBinary):
        binary_zero_transform(t)
    t = TargetMatrix(q=2, rows=((1, 1, 1),))
    with pytest.raises(NotInClass):
        binary_zero_transform(t)


def test_factor_iu():
    t = TargetMatrix(q=3, rows=((1, 0, 2), (0, 1, 1)))
    qmat, u = factor_iu(t)
    assert qmat == [(1, 0), (0, 1)]
    assert u == (2, 1)
    t1 = TargetMatrix(q=2, rows=((1, 0, 1), (0, 1, 0)))
    with pytest.raises(NotInClass):
        factor_iu(t1)
    square = TargetMatrix(q=2, rows=((1, 0), (0, 1)))
    with pytest.raises(NotInClass):
        factor_iu(square)


def test_factor_iu_random():
    from lincomp.linalg import mod_mat_mul
    rng = random.Random(33)
    for _ in range(40):
        s = rng.choice([3, 4])
        q = rng.choice([2, 3, 5])
        t = random_all_units_target(rng, s, q)
        qmat, u = factor_iu(t)
        iu = [[1 if i == j else 0 for j in range(s - 1)] + [u[i]]
              for i in range(s - 1)]
        assert mod_mat_mul([list(r) for r in qmat], iu, q) == t.as_lists()
        assert all(x != 0 for x in u)
