import pytest

from latticeiso.classify import is_minimal
from latticeiso.errors import InvalidSizeError, SizeTooLargeError
from latticeiso.oracle import brute_min_boundary, brute_minimal_classes, verify_characterization
from latticeiso.symmetry import canonical_key
from latticeiso.boxes import box_to_set, standard_box
from latticeiso.wangwang import ww_boundary

from conftest import candidate_sets


@pytest.mark.parametrize("n, bmin, nclasses", [(1, 4, 1), (2, 6, 2), (3, 7, 1), (4, 8, 3), (5, 8, 1)])
def test_small_reports(n, bmin, nclasses):
    r = brute_minimal_classes(n)
    assert (r.min_boundary, len(r.classes)) == (bmin, nclasses)
    assert r.certified
    assert bmin == ww_boundary(n)


def test_b22_is_the_size_five_class():
    (only,) = brute_minimal_classes(5).classes
    assert canonical_key(only) == canonical_key(box_to_set(standard_box("B", 2, 2)))


def test_brute_min_boundary():
    assert brute_min_boundary(1) == 4
    assert brute_min_boundary(4) == 8


def test_classes_pass_and_others_fail():
    for n in range(1, 5):
        report = brute_minimal_classes(n)
        keys = {canonical_key(c) for c in report.classes}
        for A in candidate_sets(n):
            assert is_minimal(A) == (canonical_key(A) in keys)


@pytest.mark.parametrize("n", [1, 4, 5])
def test_verify(n):
    result = verify_characterization(n)
    assert result.ok and result.discrepancies == []


def test_verify_with_workers():
    assert verify_characterization(5, workers=2).ok


def test_cap():
    with pytest.raises(SizeTooLargeError):
        brute_minimal_classes(7)
    with pytest.raises(InvalidSizeError):
        brute_minimal_classes(0)
    assert brute_minimal_classes(3, cap=3).min_boundary == 7
