from itertools import combinations_with_replacement

import pytest

from branchtab.partitions import (
    Group,
    InvalidLabelError,
    as_partition,
    associated_partition,
    conjugate,
    contains,
    format_gl_label,
    format_partition,
    gl_label_to_vector,
    gl_vector_to_label,
    has_even_columns,
    has_even_rows,
    in_k_hat,
    is_double_strip,
    is_strip,
    parse_gl_text,
    parse_partition,
    partitions_containing,
    partitions_of,
    skew_size,
    weight_vector_valid,
)


def test_conjugate_examples():
    assert conjugate((6, 5, 3, 1)) == (4, 3, 3, 2, 2, 1)
    assert conjugate(()) == ()
    assert conjugate((1, 1, 1)) == (3,)


def test_conjugate_is_an_involution():
    for n in range(9):
        for lam in partitions_of(n):
            assert conjugate(conjugate(lam)) == lam
            assert sum(conjugate(lam)) == n


def test_contains():
    assert contains((6, 5, 3, 1), (5, 2, 1))
    assert contains((), ())
    assert not contains((2,), (1, 1))


def test_even_rows_and_columns():
    assert has_even_rows((4, 2))
    assert has_even_columns((2, 2))
    assert has_even_rows(()) and has_even_columns(())
    for n in range(8):
        for lam in partitions_of(n):
            assert has_even_rows(lam) == has_even_columns(conjugate(lam))


def test_strip_predicates():
    assert is_double_strip((6, 5, 3, 1), (5, 2, 1))
    assert not is_strip((6, 5, 3, 1), (5, 2, 1))
    assert is_strip((3, 1), (3, 1))
    assert not is_strip((2, 2), ())
    assert is_double_strip((2, 2), ())


def test_strip_implies_double_strip():
    for n in range(7):
        for outer in partitions_of(n):
            for m in range(n + 1):
                for inner in partitions_of(m):
                    if is_strip(outer, inner):
                        assert is_double_strip(outer, inner)
                        assert contains(outer, inner)


def test_in_k_hat():
    assert in_k_hat(Group("O", 5), (2, 2))
    assert in_k_hat(Group("Sp", 3), (2, 2))
    assert not in_k_hat(Group("O", 2), (1, 1, 1))
    assert in_k_hat(Group("GL", 4), ((2, 1), (2, 2)))
    assert not in_k_hat(Group("GL", 3), ((2, 1), (2, 2)))
    with pytest.raises(InvalidLabelError):
        in_k_hat(Group("GL", 4), (2, 2))
    with pytest.raises(InvalidLabelError):
        in_k_hat(Group("O", 4), ((2,), (1,)))


def test_associated_partition_examples():
    assert associated_partition((2, 2), 5) == (2, 2, 1)
    assert associated_partition((), 3) == (1, 1, 1)
    assert associated_partition((2, 2, 1), 5) == (2, 2)
    with pytest.raises(InvalidLabelError):
        associated_partition((1, 1, 1), 2)


def test_associated_partition_involution():
    for k in range(1, 6):
        group = Group("O", k)
        for n in range(7):
            for lam in partitions_of(n):
                if in_k_hat(group, lam):
                    bar = associated_partition(lam, k)
                    assert in_k_hat(group, bar)
                    assert associated_partition(bar, k) == lam


def test_weight_vector_valid():
    assert weight_vector_valid(Group("O", 5), (0, 0, 0, 0, 0))
    assert not weight_vector_valid(Group("Sp", 2), (0, -1))
    assert weight_vector_valid(Group("GL", 4), (2, -1, -2, 0))
    assert not weight_vector_valid(Group("O", 5), (0, 2, 0, 0, 0))
    assert not weight_vector_valid(Group("O", 5), (0, 0, 0, 0))


def test_gl_vector_roundtrip_exhaustive():
    values = range(3, -4, -1)
    for length in range(7):
        for vector in combinations_with_replacement(values, length):
            label = gl_vector_to_label(vector)
            assert gl_label_to_vector(label, length) == vector


def test_gl_split_matches_sign_convention():
    label = gl_vector_to_label((6, 3, 3, 2, 0, 0, -1, -3, -5))
    assert label == ((6, 3, 3, 2), (5, 3, 1))


def test_partition_text_roundtrip():
    for text in ("6,5,3,1", "0", "2,2"):
        assert format_partition(parse_partition(text)) == text
    assert parse_partition("") == ()
    with pytest.raises(InvalidLabelError):
        parse_partition("2,5")
    with pytest.raises(InvalidLabelError):
        parse_partition("3,-1")


def test_gl_text_forms():
    assert parse_gl_text("2,1,-2,-2", 4) == ((2, 1), (2, 2))
    assert parse_gl_text("2,1|2,2", 4) == ((2, 1), (2, 2))
    assert format_gl_label(((2, 1), (2, 2)), 4) == "2,1,-2,-2"
    with pytest.raises(InvalidLabelError):
        parse_gl_text("2,1,-2", 4)


def test_group_parse_and_display():
    assert Group.parse("O5") == Group("O", 5)
    assert Group.parse("GL4") == Group("GL", 4)
    assert Group.parse("Sp6") == Group("Sp", 3)
    assert Group("Sp", 3).display() == "Sp6"
    with pytest.raises(InvalidLabelError):
        Group.parse("Sp5")
    with pytest.raises(InvalidLabelError):
        Group.parse("SU3")


def test_as_partition_strips_zeros():
    assert as_partition([3, 2, 0, 0]) == (3, 2)
    assert as_partition(()) == ()
    with pytest.raises(InvalidLabelError):
        as_partition((1, 2))


def test_partitions_containing():
    found = set(partitions_containing((2, 1), 5))
    assert found == {(4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1)}
    for gamma in found:
        assert contains(gamma, (2, 1)) and sum(gamma) == 5
    capped = set(partitions_containing((2, 1), 5, row_caps=(3, 2)))
    assert capped == {(3, 2)}
