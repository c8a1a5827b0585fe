import pytest

from pclab.mtable import MTable
from pclab.vectors import (X1, CoeffVector, VectorEngine, demand, x_path, x_vector, y_even_path,
                           y_even_vector, y_odd_path, y_odd_vector)


@pytest.fixture(scope="module")
def exact():
    return VectorEngine(MTable())


def test_x1(exact):
    v = exact.x_vector(1, 5)
    assert v.values == (7, 49)
    assert v.complete and v.support == 2 and v[3] == 0 and v[9] == 0


def test_x2_first_entry(exact, mtable):
    v = exact.x_vector(2, 3)
    assert v[1] == 7 * mtable[4, 2] + 49 * mtable[8, 3] == 124754
    assert v[1] % 49 == 0


def test_x_recursion_by_hand(exact, mtable):
    x2 = exact.x_vector(2, 14)
    assert x2.complete
    for i in range(1, 6):
        assert x2[i] == sum(X1[j - 1] * mtable[4 * j, j + i] for j in (1, 2))
    x3 = exact.x_vector(3, 4)
    for i in range(1, 5):
        assert x3[i] == sum(x2[j] * mtable[4 * j + 1, j + i] for j in range(1, 15))


def test_y_odd_examples(exact, mtable):
    assert exact.y_odd_vector(1, 1, 4).values == exact.x_vector(1, 4).values
    y = exact.y_odd_vector(1, 2, 2)
    assert y[1] == 7 * mtable[5, 2] + 49 * mtable[9, 3] == 1330 + 49 * 255 == 13825


def test_y_even_examples(exact, mtable):
    assert exact.y_even_vector(1, 1, 3).values == exact.x_vector(1, 3).values
    y = exact.y_even_vector(1, 2, 3)
    assert y[1] == 7 * mtable[4, 2] + 49 * mtable[8, 3]
    assert y.values == exact.x_vector(2, 3).values
    assert exact.y_even_vector(2, 1, 5).values == exact.x_vector(3, 5).values


def test_y_even_alternates(exact, mtable):
    # level 2 -> 3 uses rows 4i+2 (even level), level 3 -> 4 uses rows 4i (odd level)
    y2 = exact.y_even_vector(1, 2, 20)
    assert y2.complete
    y3 = exact.y_even_vector(1, 3, 3)
    for j in range(1, 4):
        assert y3[j] == sum(y2[i] * mtable[4 * i + 2, j + i] for i in range(1, len(y2) + 1))
    y4 = exact.y_even_vector(1, 4, 2)
    y3full = exact.y_even_vector(1, 3, 200)
    assert y3full.complete
    for j in range(1, 3):
        assert y4[j] == sum(y3full[i] * mtable[4 * i, j + i] for i in range(1, len(y3full) + 1))


def test_paths():
    assert x_path(1) == [] and x_path(4) == [0, 1, 0]
    assert y_odd_path(2, 3) == [0, 1, 1, 1]
    assert y_even_path(2, 4) == [0, 1, 0, 2, 0]
    with pytest.raises(ValueError):
        x_path(0)
    assert demand([0, 1], 2) == [7 * 12, 12, 2]


def test_truncated_vector_matches_complete(exact):
    full = exact.x_vector(3, 200)
    assert full.complete and full.support <= 7 * 14 + 2
    short = VectorEngine(MTable()).x_vector(3, 5)
    assert short.values == full.values[:5]


@pytest.mark.parametrize("fam,k,level", [("x", 4, None), ("y_odd", 2, 2), ("y_even", 1, 5),
                                         ("y_even", 2, 3)])
def test_modular_equals_exact(fam, k, level, exact):
    M = 7 ** 19
    mod = VectorEngine(MTable(), modulus=M)
    if fam == "x":
        a, b = exact.x_vector(k, 4), mod.x_vector(k, 4)
    elif fam == "y_odd":
        a, b = exact.y_odd_vector(k, level, 4), mod.y_odd_vector(k, level, 4)
    else:
        a, b = exact.y_even_vector(k, level, 4), mod.y_even_vector(k, level, 4)
    assert b.values == tuple(v % M for v in a.values)


def test_module_helpers():
    assert x_vector(1, 2).values == (7, 49)
    assert y_odd_vector(1, 1, 2).values == (7, 49)
    assert y_even_vector(1, 1, 2).values == (7, 49)


def test_coeffvector_indexing():
    v = CoeffVector("y_even", 2, 3, (1, 2), complete=False)
    assert v.name == "y^(4)_3" and v[2] == 2 and v.support is None
    with pytest.raises(IndexError):
        v[3]
    with pytest.raises(IndexError):
        v[0]
