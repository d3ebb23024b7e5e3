import pytest

import modlie


def test_sl2_bracket():
    sl2 = modlie.chevalley("A1", 5)
    assert sl2.dim == 3 and sl2.p == 5
    e, h, f = ([int(i == k) for i in range(3)] for k in range(3))
    assert sl2.bracket(e, f) == h
    assert sl2.killing(h, h) == 3
    assert sl2.p_power(h) == h
    assert sl2.p_power(e) == [0, 0, 0]
    assert sl2.is_simple()


def test_families():
    assert modlie.family("W", 2, [1, 1], 5).dim == 50
    assert modlie.family("S", 3, [1, 1, 1], 5).dim == 248
    block = modlie.family("block", p=5)
    assert block.dim == 24
    assert block.p_power([int(i == 0) for i in range(24)]) is None
    az = modlie.family("AZ", p=5)
    assert az.field_degree == 2 and az.check_jacobi()


def test_dump_round_trip():
    g2 = modlie.chevalley("G2", 7)
    text = g2.dump()
    assert text.splitlines()[0] == "14 7 1"
    assert modlie.from_dump(text).dump() == text


def test_linear_algebra():
    assert modlie.rref([[2, 4], [1, 2]], 5) == [[1, 2], [0, 0]]
    # Kernel bases come back in reduced echelon form.
    (k,) = modlie.kernel([[1, 2]], 5)
    assert k == [1, 2] and (k[0] + 2 * k[1]) % 5 == 0
    assert modlie.rank([[1, 0], [0, 1]], 5) == 2
    assert modlie.lucas_binom(6, 3, 5) == 0


def test_reports():
    r = modlie.census("E8", 11)
    assert r["pass"]
    assert r["data"]["census"][0]["classes"][0]["centralizer_dim"] == 28
    assert modlie.verify_g2_w()["pass"]
    f = modlie.filtration("A1:5", "borel")
    assert f["data"]["chain_dims"] == [3, 2, 1, 0]


def test_errors_are_translated():
    with pytest.raises(modlie.ModlieError):
        modlie.chevalley("Q7", 5)
    with pytest.raises(modlie.ModlieError):
        modlie.chevalley("A1", 5).bracket([1, 0], [0, 1])
