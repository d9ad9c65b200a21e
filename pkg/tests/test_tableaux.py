import pytest

from lincount.errors import GridTooSmall
from lincount.partitions import BoxShape, complement_in_box
from lincount.schubert import pair_with_special_sum, schubert_class, sigma1r_power_table
from lincount.tableaux import (
    Cell,
    FillingGrid,
    TableauFilling,
    check_filling,
    count_by_red_shape,
    count_fillings,
    hook_content_count,
    hook_length_count,
    iter_fillings,
    list_fillings,
)

from oracles import fillings_brute, syt_brute


def test_count_examples():
    assert count_fillings(6, 2, 15) == 729
    assert count_fillings(1, 1, 2) == 2
    assert count_fillings(2, 1, 3) == 4


@pytest.mark.parametrize("g, r, d", [(1, 1, 2), (2, 1, 3), (2, 1, 2), (3, 1, 3), (1, 2, 3), (3, 1, 4), (1, 2, 4)])
def test_count_matches_exhaustive_search(g, r, d):
    assert count_fillings(g, r, d) == fillings_brute(g, r, d)


def test_grid_validation():
    with pytest.raises(GridTooSmall):
        FillingGrid(2, 2, 2)
    with pytest.raises(GridTooSmall):
        FillingGrid(5, 2, 3)
    grid = FillingGrid(3, 1, 9)
    assert (grid.rows, grid.cols, grid.width) == (2, 8, 3)


def test_count_independent_of_d():
    for g in range(0, 5):
        for r in range(1, 4):
            values = {count_fillings(g, r, d) for d in range(max(g + r, r + 1), g + r + 4)}
            assert values == {(r + 1) ** g}


def test_list_examples():
    fillings = list_fillings(1, 1, 2, 10)
    assert [f.render() for f in fillings] == ["R1\nB0", "R1\nB1"]
    assert list_fillings(1, 1, 2, 0) == []
    (first,) = list_fillings(6, 2, 15, 1)
    assert check_filling(first, 6, 2) == []
    assert len(first.cells) == 3 and len(first.cells[0]) == 13


def test_list_limit_validation():
    with pytest.raises(ValueError):
        list_fillings(1, 1, 2, -1)
    with pytest.raises(GridTooSmall):
        list_fillings(2, 2, 2, 0)


def test_listing_is_complete_and_valid():
    for g in range(0, 4):
        for r in range(1, 3):
            for d in range(r + 1, g + r + 2):
                try:
                    fillings = list(iter_fillings(g, r, d))
                except GridTooSmall:
                    continue
                assert len(fillings) == count_fillings(g, r, d)
                assert len({f.render() for f in fillings}) == len(fillings)
                assert all(check_filling(f, g, r) == [] for f in fillings)


def test_listing_order_is_deterministic():
    a = [f.render() for f in iter_fillings(3, 1, 4)]
    b = [f.render() for f in iter_fillings(3, 1, 4)]
    assert a == b


def test_validator_catches_broken_rules():
    good = TableauFilling(((Cell("R", 1), Cell("R", 2)), (Cell("B", 0), Cell("B", 0))))
    assert check_filling(good, 2, 1) == []
    swapped = TableauFilling(((Cell("R", 2), Cell("R", 1)), (Cell("B", 0), Cell("B", 0))))
    assert any("strictly" in p for p in check_filling(swapped, 2, 1))
    floating = TableauFilling(((Cell("B", 0), Cell("R", 1)), (Cell("R", 2), Cell("B", 1))))
    assert check_filling(floating, 2, 1)
    blue_down = TableauFilling(((Cell("R", 1), Cell("R", 2)), (Cell("B", 1), Cell("B", 0))))
    assert any("blue" in p for p in check_filling(blue_down, 2, 1))


def test_render_format():
    f = TableauFilling(((Cell("R", 3), Cell("B", 0)), (Cell("B", 1), Cell("B", 1))))
    assert f.render() == "R3 B0\nB1 B1"
    assert f.red_shape == (1,)


def test_by_shape_examples():
    shapes = count_by_red_shape(2, 1, 3)
    assert set(shapes) == {(2,), (1, 1)}
    assert shapes[(2,)].red == shapes[(1, 1)].red == 1
    (only,) = count_by_red_shape(0, 2, 4).values()
    assert only.red * only.blue == 1
    assert count_by_red_shape(3, 1, 4)[(2, 1)].red == 2


def test_by_shape_factorisation():
    for g in range(0, 5):
        for r in range(1, 4):
            for d in range(r + 1, g + r + 3):
                try:
                    shapes = count_by_red_shape(g, r, d)
                except GridTooSmall:
                    continue
                assert sum(s.red * s.blue for s in shapes.values()) == count_fillings(g, r, d)
                beta = sigma1r_power_table(g, BoxShape(r + 1, g + 1))
                box = BoxShape(r + 1, d - r)
                total = box.dimension - r * g
                for mu, s in shapes.items():
                    assert s.red == beta[mu]
                    assert s.blue == pair_with_special_sum(schubert_class(mu, box), total)
                    assert complement_in_box(mu, box).size == total


@pytest.mark.parametrize("shape", [(), (1,), (2, 1), (3, 2), (2, 2, 2), (4, 2, 1)])
def test_hook_length(shape):
    assert hook_length_count(shape) == syt_brute(shape)


def test_hook_content():
    assert hook_content_count((1,), 3) == 3
    assert hook_content_count((2,), 2) == 3
    assert hook_content_count((1, 1), 2) == 1
    assert hook_content_count((1, 1, 1), 2) == 0
