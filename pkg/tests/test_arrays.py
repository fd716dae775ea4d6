import itertools

import pytest

from lajoin.arrays import (
    ArrayError,
    MagicArray,
    array_to_csv,
    drop_column_and_rotate,
    magic_rectangle,
    nearly_magic_rectangle,
    resummed,
    siamese_magic_square,
    verify_magic_array,
)


def test_siamese_order_3():
    m = siamese_magic_square(3)
    middle = [row[1] for row in m.entries]
    assert middle == [1, 5, 9]
    assert m.col_constant == 15


def test_siamese_order_7_constant():
    assert siamese_magic_square(7).col_constant == 175


def test_siamese_order_5_sums():
    m = siamese_magic_square(5)
    rows, cols = resummed(m.entries)
    assert rows == [65] * 5 and cols == [65] * 5


@pytest.mark.parametrize("order", range(3, 23, 2))
def test_siamese_middle_column_progression(order):
    m = siamese_magic_square(order)
    n = (order - 1) // 2
    for i in range(order):
        assert m.entries[i][n] == 1 + 2 * (n + 1) * i


def test_siamese_rejects_even():
    with pytest.raises(ArrayError):
        siamese_magic_square(4)


def test_rectangle_2x4():
    m = magic_rectangle(2, 4)
    assert m.row_constants == (18, 18)
    assert m.col_constant == 9
    rows, cols = resummed(m.entries)
    assert rows == [18, 18] and cols == [9] * 4


def test_rectangle_3x5():
    m = magic_rectangle(3, 5)
    assert m.row_constants[0] == 40 and m.col_constant == 24
    rows, cols = resummed(m.entries)
    assert set(rows) == {40} and set(cols) == {24}


def test_rectangle_2x2_rejected():
    with pytest.raises(ArrayError):
        magic_rectangle(2, 2)


def test_rectangle_parity_mismatch_rejected():
    with pytest.raises(ArrayError):
        magic_rectangle(2, 3)


def test_rectangle_transpose_is_valid():
    m = magic_rectangle(4, 6)
    t = MagicArray(
        6, 4,
        tuple(tuple(m.entries[r][c] for r in range(4)) for c in range(6)),
        "rectangle", (m.col_constant,) * 6, m.row_constants[0],
    )
    verify_magic_array(t)


def test_nearly_rectangle_2x3():
    m = nearly_magic_rectangle(2, 3)
    assert m.row_constants == (10, 11)
    assert m.col_constant == 7
    rows, cols = resummed(m.entries)
    assert rows == [10, 11] and cols == [7, 7, 7]


def test_nearly_rectangle_2x3_exhaustive_targets():
    # Independent brute force over all arrangements of 1..6 with constant
    # column sums: perfectly equal rows are impossible, and the tightest
    # achievable row pair is exactly {10, 11}.
    seen = set()
    for perm in itertools.permutations(range(1, 7)):
        grid = [perm[:3], perm[3:]]
        _, cols = resummed(grid)
        if len(set(cols)) == 1:
            seen.add(tuple(sorted(sum(r) for r in grid)))
    assert (10, 11) in seen
    assert all(hi - lo >= 1 for lo, hi in seen)
    assert [pair for pair in seen if pair[1] - pair[0] == 1] == [(10, 11)]


def test_nearly_rectangle_2x5():
    m = nearly_magic_rectangle(2, 5)
    assert m.row_constants == (27, 28)
    assert m.col_constant == 11


def test_nearly_rectangle_rejects_odd_rows():
    with pytest.raises(ArrayError):
        nearly_magic_rectangle(3, 3)
    with pytest.raises(ArrayError):
        nearly_magic_rectangle(4, 4)


@pytest.mark.parametrize("rows", range(2, 16))
@pytest.mark.parametrize("cols", range(2, 16))
def test_rectangle_resummation_sweep(rows, cols):
    if rows % 2 != cols % 2 or (rows, cols) == (2, 2):
        return
    m = magic_rectangle(rows, cols)
    row_sums, col_sums = resummed(m.entries)
    assert tuple(row_sums) == m.row_constants
    assert set(col_sums) == {m.col_constant}
    assert sorted(x for row in m.entries for x in row) == list(range(1, rows * cols + 1))


@pytest.mark.parametrize("rows", range(2, 16, 2))
@pytest.mark.parametrize("cols", range(3, 16, 2))
def test_nearly_rectangle_resummation_sweep(rows, cols):
    m = nearly_magic_rectangle(rows, cols)
    row_sums, col_sums = resummed(m.entries)
    assert tuple(row_sums) == m.row_constants
    assert set(col_sums) == {m.col_constant}
    lo = min(m.row_constants)
    assert all(s == (lo if i % 2 == 0 else lo + 1) for i, s in enumerate(row_sums))


def test_drop_column_and_rotate_order_3():
    grid = drop_column_and_rotate(siamese_magic_square(3), 1)
    assert grid.row_sums == (6, 10, 14)


def test_drop_column_and_rotate_order_7():
    grid = drop_column_and_rotate(siamese_magic_square(7), 3)
    assert grid.row_sums == (126, 166, 174, 150, 158, 134, 142)
    k = 175
    expected = [k - 1 - 4 * 3 * 4]
    for i in range(1, 4):
        expected += [k - 1 - 8 * (2 * i - 1), k - 1 - 8 * (2 * i - 2)]
    assert list(grid.row_sums) == expected


def test_drop_column_wrong_index_rejected():
    sq = siamese_magic_square(7)
    with pytest.raises(ArrayError):
        drop_column_and_rotate(sq, 2)
    with pytest.raises(ArrayError):
        drop_column_and_rotate(magic_rectangle(4, 6), 2)


def test_csv_export_round_trip():
    m = magic_rectangle(2, 4)
    text = array_to_csv(m)
    parsed = [[int(x) for x in line.split(",")] for line in text.strip().splitlines()]
    assert tuple(tuple(r) for r in parsed) == m.entries
