import pytest
from hypothesis import given, strategies as st

from skeincat.errors import NonRealizable, ValidationError
from skeincat.surfaces import (
    ANNULUS,
    CORE,
    DISK,
    TORUS,
    MarkedSurface,
    arc_class,
    classify_loop,
    cut_add,
    cut_neg,
    enumerate_arc_classes,
    fold_abs,
    is_noncrossing,
    psi_add,
    psi_from_json,
    psi_neg,
    psi_to_json,
    psi_vector,
    rotate_arc_class,
)

disk = MarkedSurface(DISK, 4)
annulus = MarkedSurface(ANNULUS)
torus = MarkedSurface(TORUS)


def test_surface_validation():
    MarkedSurface(DISK, 0)
    with pytest.raises(ValidationError):
        MarkedSurface(DISK, 3)
    with pytest.raises(ValidationError):
        MarkedSurface(ANNULUS, 2)
    with pytest.raises(ValidationError):
        MarkedSurface("sphere")


def test_classify_examples():
    assert classify_loop(disk, ()) is None
    assert classify_loop(annulus, -1) == CORE
    assert classify_loop(annulus, 0) is None
    assert classify_loop(torus, (-1, -2)) == (1, 2)
    assert classify_loop(torus, (0, 0)) is None
    with pytest.raises(NonRealizable):
        classify_loop(torus, (2, 4))
    with pytest.raises(NonRealizable):
        classify_loop(annulus, 2)
    with pytest.raises(ValueError):
        classify_loop(disk, 1)


@given(st.integers(-1, 1))
def test_classify_annulus_sign_symmetry(w):
    assert classify_loop(annulus, w) == classify_loop(annulus, -w)


@given(st.integers(-6, 6), st.integers(-6, 6))
def test_classify_torus_sign_symmetry(a, b):
    try:
        left = classify_loop(torus, (a, b))
    except NonRealizable:
        with pytest.raises(NonRealizable):
            classify_loop(torus, (-a, -b))
        return
    assert left == classify_loop(torus, (-a, -b))
    if left is not None:
        p, q = left
        assert p > 0 or (p, q) == (0, 1)


def test_cut_arithmetic():
    assert cut_add(DISK, (), ()) == ()
    assert cut_add(ANNULUS, 2, -3) == -1
    assert cut_add(TORUS, (1, 0), (0, 1)) == (1, 1)
    assert cut_neg(TORUS, (1, -2)) == (-1, 2)


def test_fold_abs_examples():
    assert fold_abs(psi_vector([(CORE, -3)])) == ((CORE, 3),)
    assert fold_abs(()) == ()
    s = psi_vector([((1, 0), 2), ((0, 1), -1)])
    assert fold_abs(s) == (((0, 1), 1), ((1, 0), 2))
    assert fold_abs(fold_abs(s)) == fold_abs(s)


def test_psi_vector_cancellation():
    assert psi_vector([(CORE, 1), (CORE, -1)]) == ()
    assert psi_add(psi_vector([(CORE, 2)]), psi_neg(psi_vector([(CORE, 2)]))) == ()


def test_psi_json_round_trip():
    for s in [(), psi_vector([(CORE, -2)]), psi_vector([((1, 2), 1)])]:
        assert psi_from_json(psi_to_json(s)) == s


def test_enumerate_arc_classes_catalan():
    # Catalan numbers 1, 1, 2, 5, 14, 42
    assert enumerate_arc_classes(0) == [()]
    assert enumerate_arc_classes(1) == [((0, 1),)]
    assert [len(enumerate_arc_classes(k)) for k in range(6)] == [1, 1, 2, 5, 14, 42]


def test_enumerate_arc_classes_valid():
    for k in range(5):
        classes = enumerate_arc_classes(k)
        assert len(set(classes)) == len(classes)
        assert classes == sorted(classes)
        for b in classes:
            assert is_noncrossing(b)
            assert sorted(x for pair in b for x in pair) == list(range(2 * k))


def test_rotate_examples():
    assert rotate_arc_class(((0, 1),), 2) == ((0, 1),)
    assert rotate_arc_class(((0, 1), (2, 3)), 4) == ((0, 3), (1, 2))
    assert rotate_arc_class((), 0) == ()


@given(st.integers(1, 4), st.data())
def test_rotate_permutes_classes(k, data):
    classes = enumerate_arc_classes(k)
    b = data.draw(st.sampled_from(classes))
    r = rotate_arc_class(b, 2 * k)
    assert r in classes
    for _ in range(2 * k - 1):
        r = rotate_arc_class(r, 2 * k)
    assert r == b


def test_arc_class_rejects_repeats():
    with pytest.raises(ValueError):
        arc_class([(0, 1), (1, 2)])
