import pytest
from hypothesis import given
from hypothesis import strategies as st

from catmat import (
    HomMatrix,
    ParseError,
    ShapeError,
    parse_matrix,
    permute,
    principal_submatrix,
    transpose,
)

matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=0, max_value=9), min_size=n, max_size=n),
        min_size=n,
        max_size=n,
    )
).map(HomMatrix.from_rows)


def test_parse_text():
    assert parse_matrix("1 2\n3 7") == HomMatrix.from_rows([[1, 2], [3, 7]])
    assert parse_matrix("1") == HomMatrix.from_rows([[1]])
    assert parse_matrix("  \n\n") == HomMatrix(0, ())
    assert parse_matrix("1 2 \n 3 7\n") == HomMatrix.from_rows([[1, 2], [3, 7]])


def test_parse_json():
    assert parse_matrix('{"n": 2, "entries": [[1,2],[3,7]]}') == HomMatrix.from_rows(
        [[1, 2], [3, 7]]
    )
    assert parse_matrix('{"n": 0, "entries": []}') == HomMatrix(0, ())


def test_parse_rejects_bad_shapes():
    with pytest.raises(ShapeError):
        parse_matrix("1 2\n3")
    with pytest.raises(ShapeError):
        parse_matrix("1 2 3\n4 5 6")
    with pytest.raises(ShapeError):
        parse_matrix('{"n": 2, "entries": [[1,2]]}')


def test_parse_rejects_bad_tokens():
    with pytest.raises(ParseError):
        parse_matrix("1 x\n3 7")
    with pytest.raises(ParseError):
        parse_matrix("1 -2\n3 7")
    with pytest.raises(ParseError):
        parse_matrix("{not json")
    with pytest.raises(ParseError):
        parse_matrix('{"entries": [[1]]}')
    with pytest.raises(ParseError):
        parse_matrix('{"n": 1, "entries": [[1.5]]}')


def test_constructor_validates():
    with pytest.raises(ShapeError):
        HomMatrix(2, ((1, 2),))
    with pytest.raises(ParseError):
        HomMatrix.from_rows([[1, -1], [0, 1]])


def test_principal_submatrix():
    M = HomMatrix.from_rows([[1, 2], [3, 7]])
    assert principal_submatrix(M, (0,)) == HomMatrix.from_rows([[1]])
    block = HomMatrix.from_rows([[1, 1, 1, 2], [1, 2, 2, 3], [0, 0, 1, 1], [0, 0, 2, 3]])
    assert principal_submatrix(block, (2, 3)) == HomMatrix.from_rows([[1, 1], [2, 3]])
    assert principal_submatrix(M, ()) == HomMatrix(0, ())
    with pytest.raises(IndexError):
        principal_submatrix(M, (0, 2))
    with pytest.raises(ValueError):
        principal_submatrix(M, (1, 0))


def test_permute():
    M = HomMatrix.from_rows([[1, 2], [3, 7]])
    assert permute(M, (1, 0)) == HomMatrix.from_rows([[7, 3], [2, 1]])
    assert permute(HomMatrix.from_rows([[0]]), (0,)) == HomMatrix.from_rows([[0]])
    with pytest.raises(IndexError):
        permute(M, (0, 0))


def test_transpose():
    M = HomMatrix.from_rows([[1, 2], [3, 7]])
    assert transpose(M) == HomMatrix.from_rows([[1, 3], [2, 7]])
    assert transpose(HomMatrix.from_rows([[1]])) == HomMatrix.from_rows([[1]])


@given(matrices)
def test_transpose_is_an_involution(M):
    assert transpose(transpose(M)) == M


@given(matrices, st.randoms())
def test_permute_round_trip(M, rng):
    sigma = list(range(M.n))
    rng.shuffle(sigma)
    inverse = [0] * M.n
    for i, s in enumerate(sigma):
        inverse[s] = i
    assert permute(permute(M, sigma), inverse) == M


@given(matrices)
def test_row_col_total_consistency(M):
    assert sum(sum(M.row(i)) for i in range(M.n)) == M.total()
    assert sum(sum(M.col(j)) for j in range(M.n)) == M.total()
    assert principal_submatrix(M, tuple(range(M.n))) == M
