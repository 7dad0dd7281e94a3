from branchtab.oracles import gl_dimension
from branchtab.partitions import partitions_of
from branchtab.tableaux import (
    Tableau,
    barred_alphabet,
    content,
    enumerate_ssyt,
    is_lattice_word,
    is_lr_tableau,
    symbol_text,
    tableau_text,
    word,
)

GOLDEN_SKEW = ((6, 5, 3, 1), (5, 2, 1))


def _tab(outer, inner, rows):
    return Tableau(outer, inner, rows)


def test_single_column_is_forced():
    tabs = list(enumerate_ssyt((1, 1), (), 2))
    assert tabs == [_tab((1, 1), (), ((1,), (2,)))]


def test_single_row_multisets():
    rows = [t.rows[0] for t in enumerate_ssyt((2,), (), 2)]
    assert rows == [(1, 1), (1, 2), (2, 2)]


def test_o5_filtered_square():
    # first-two-column bound for rank 5, then keep only even contents
    def bound(rows, r, c, v):
        seen = sum(1 for row in rows[:r + 1] for val in row[:2] if val <= v)
        return seen <= v

    found = [
        t for t in enumerate_ssyt((2, 2), (), 5, cell_filter=bound)
        if all(x % 2 == 0 for x in content(t, 5))
    ]
    assert len(found) == 5


def test_word_examples():
    first = _tab(*GOLDEN_SKEW, ((1,), (1, 1, 1), (2, 2), (2,)))
    second = _tab(*GOLDEN_SKEW, ((1,), (1, 1, 2), (1, 2), (2,)))
    assert word(first) == (1, 1, 1, 1, 2, 2, 2)
    assert word(second) == (1, 2, 1, 1, 2, 1, 2)
    assert word(_tab((), (), ())) == ()


def test_lattice_condition():
    assert is_lattice_word((1, 1, 1, 1, 2, 2, 2))
    assert not is_lattice_word((2, 1))
    assert is_lattice_word(())
    good = _tab(*GOLDEN_SKEW, ((1,), (1, 1, 1), (2, 2), (2,)))
    assert is_lr_tableau(good)


def test_content_examples():
    first = _tab(*GOLDEN_SKEW, ((1,), (1, 1, 1), (2, 2), (2,)))
    assert content(first, 2) == (4, 3)
    assert content(_tab((), (), ()), 3) == (0, 0, 0)
    assert content(_tab((2,), (), ((1, 1),)), 2) == (2, 0)


def test_word_length_matches_cells():
    for t in enumerate_ssyt((3, 2), (1,), 3):
        assert len(word(t)) == 4


def test_counts_match_dimension_formula():
    assert sum(1 for _ in enumerate_ssyt((2,), (), 3)) == 6
    assert sum(1 for _ in enumerate_ssyt((1, 1), (), 3)) == 3
    for n in range(1, 5):
        for total in range(7):
            for lam in partitions_of(total, max_length=n):
                count = sum(1 for _ in enumerate_ssyt(lam, (), n))
                assert count == gl_dimension(lam, n)


def test_enumeration_is_semistandard_and_deterministic():
    first = list(enumerate_ssyt((3, 2, 1), (1,), 3))
    second = list(enumerate_ssyt((3, 2, 1), (1,), 3))
    assert first == second
    assert len(set(first)) == len(first)
    for t in first:
        for r, c, v in t.cells():
            # recheck monotonicity from scratch on absolute coordinates
            grid = {(rr, cc): vv for rr, cc, vv in t.cells()}
            if (r, c - 1) in grid:
                assert grid[(r, c - 1)] <= v
            if (r - 1, c) in grid:
                assert grid[(r - 1, c)] < v


def test_max_content_cap():
    tabs = list(enumerate_ssyt((2, 1), (), 3, max_content=(2, 1, 0)))
    assert all(content(t, 3)[2] == 0 for t in tabs)
    assert all(content(t, 3)[0] <= 2 and content(t, 3)[1] <= 1 for t in tabs)


def test_barred_symbol_text():
    alphabet = barred_alphabet(3)
    assert alphabet.size == 6 and alphabet.barred
    assert [symbol_text(s, True) for s in range(1, 7)] == [
        "1", "1~", "2", "2~", "3", "3~"]
    t = _tab((2, 2), (), ((3, 3), (4, 4)))
    assert tableau_text(t, barred=True) == "2,2/2~,2~"
    assert tableau_text(t) == "3,3/4,4"
