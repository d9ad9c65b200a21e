import pytest
from hypothesis import given, settings, strategies as st

from lincount.errors import BoxMismatch, PartitionOutsideBox
from lincount.partitions import BoxShape, complement_in_box, ssyt_count
from lincount.schubert import (
    CohomologyClass,
    integrate,
    intersection_number,
    lr_multiply,
    pair_with_special_sum,
    pieri_col,
    pieri_row,
    schubert_class,
    sigma1r_power_table,
    special,
    special_col,
    special_sum,
)
from lincount.tableaux import hook_content_count, hook_length_count

from conftest import boxes, partitions_in
from oracles import jacobi_trudi_multiply, lr_brute, syt_brute

B22 = BoxShape(2, 2)


def cls(box):
    return lambda *parts: schubert_class(parts, box)


def terms(c):
    return {tuple(p): v for p, v in c.terms.items()}


# -- worked examples -----------------------------------------------------------


def test_pieri_row_examples():
    s = cls(B22)
    assert terms(pieri_row(s(1), 1)) == {(2,): 1, (1, 1): 1}
    assert terms(pieri_row(schubert_class((1,), BoxShape(2, 1)), 1)) == {(1, 1): 1}
    assert terms(pieri_row(s(2, 1), 1)) == {(2, 2): 1}


def test_pieri_col_examples():
    s = cls(B22)
    assert terms(pieri_col(s(), 2)) == {(1, 1): 1}
    assert terms(pieri_col(s(1), 1)) == {(2,): 1, (1, 1): 1}
    assert terms(pieri_col(s(1, 1), 2)) == {(2, 2): 1}


def test_lr_examples():
    box = BoxShape(3, 3)
    c = lr_multiply(schubert_class((2, 1), box), schubert_class((2, 1), box))
    assert c[(3, 2, 1)] == 2
    s = cls(B22)
    assert s(2, 1) * s() == s(2, 1)
    assert s(2, 1) * s(1) == pieri_row(s(2, 1), 1)


def test_integrate_examples():
    s = cls(B22)
    assert integrate(s(1) ** 4) == 2
    assert integrate(s(2, 2)) == 1
    assert integrate(s(2, 1) * s(1)) == 1


def test_sigma1r_power_examples():
    assert terms(sigma1r_power_table(2, BoxShape(2, 3))) == {(2,): 1, (1, 1): 1}
    assert terms(sigma1r_power_table(3, B22)) == {(2, 1): 2}
    assert sigma1r_power_table(0, BoxShape(3, 4)) == CohomologyClass.one(BoxShape(3, 4))


def test_special_sum_examples():
    box = BoxShape(2, 3)
    assert special_sum(0, box) == CohomologyClass.one(box)
    assert special_sum(-3, box) == CohomologyClass.zero(box)
    assert terms(special_sum(1, box)) == {(1,): 2}


# -- class arithmetic ------------------------------------------------------------


def test_constructor_validates():
    with pytest.raises(PartitionOutsideBox):
        CohomologyClass(B22, {(3,): 1})
    c = CohomologyClass(B22, {(1,): 0, (2,): 3})
    assert len(c) == 1 and c[(2,)] == 3


def test_box_mismatch():
    with pytest.raises(BoxMismatch):
        schubert_class((1,), B22) + schubert_class((1,), BoxShape(2, 3))
    with pytest.raises(BoxMismatch):
        schubert_class((1,), B22) * schubert_class((1,), BoxShape(3, 2))


def test_out_of_box_class_is_zero():
    assert not schubert_class((3,), B22)


def test_rendering():
    s = cls(B22)
    assert str(s(1) * s(1)) == "s[1,1] + s[2]"
    assert str(CohomologyClass.zero(B22)) == "0"
    assert str(2 * s(1) - s(2)) == "2*s[1] - s[2]"
    assert str(s()) == "s[]"


def test_big_coefficients():
    box = BoxShape(4, 12)
    c = special(1, box) ** 48
    assert integrate(c) == hook_length_count(box.full)
    assert integrate(c) > 2**63


def test_homogeneous_part():
    box = BoxShape(2, 3)
    c = schubert_class((1,), box) + schubert_class((2, 1), box)
    assert c.homogeneous_part(3) == schubert_class((2, 1), box)


def test_special_helpers():
    box = BoxShape(3, 3)
    assert special(0, box) == CohomologyClass.one(box)
    assert special(2, box) == schubert_class((2,), box)
    assert special_col(2, box) == schubert_class((1, 1), box)
    assert not special(4, box)


# -- properties on random small boxes ------------------------------------------------


@st.composite
def box_and_partitions(draw, n):
    box = draw(boxes())
    return box, [draw(partitions_in(box)) for _ in range(n)]


@settings(max_examples=150, deadline=None)
@given(box_and_partitions(3))
def test_ring_axioms(data):
    box, (a, b, c) = data
    x, y, z = (schubert_class(p, box) for p in (a, b, c))
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * CohomologyClass.one(box) == x


@settings(max_examples=150, deadline=None)
@given(box_and_partitions(2))
def test_duality(data):
    box, (a, b) = data
    expected = 1 if complement_in_box(a, box) == b else 0
    assert integrate(schubert_class(a, box) * schubert_class(b, box)) == expected
    assert intersection_number(schubert_class(a, box), schubert_class(b, box)) == expected


@settings(max_examples=150, deadline=None)
@given(box_and_partitions(1), st.integers(0, 5))
def test_pieri_agrees_with_lr(data, a):
    box, (lam,) = data
    x = schubert_class(lam, box)
    assert pieri_row(x, a) == x * special(a, box)
    b = a % (box.rows + 1)
    assert pieri_col(x, b) == x * special_col(b, box)


@settings(max_examples=100, deadline=None)
@given(box_and_partitions(2))
def test_positivity(data):
    box, (a, b) = data
    assert all(v > 0 for v in (schubert_class(a, box) * schubert_class(b, box)).terms.values())


@settings(max_examples=80, deadline=None)
@given(box_and_partitions(2))
def test_jacobi_trudi_oracle(data):
    box, (a, b) = data
    x, y = schubert_class(a, box), schubert_class(b, box)
    assert jacobi_trudi_multiply(a, y) == x * y


def test_lr_against_brute_force():
    box = BoxShape(3, 4)
    parts = [p for p in box.partitions() if p.size <= 4]
    for a in parts:
        for b in parts:
            product = schubert_class(a, box) * schubert_class(b, box)
            for nu in box.partitions(a.size + b.size):
                assert product[nu] == lr_brute(a, b, nu)


@pytest.mark.parametrize("rows, cols", [(1, 4), (2, 2), (2, 3), (3, 3), (2, 5), (4, 2)])
def test_plucker_degree(rows, cols):
    box = BoxShape(rows, cols)
    degree = integrate(special(1, box) ** box.dimension)
    assert degree == hook_length_count(box.full) == syt_brute(box.full)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_giambelli_two_rows(m):
    box = BoxShape(2, m)
    for a in range(1, m + 1):
        for b in range(1, a + 1):
            rhs = special(a, box) * special(b, box) - special(a + 1, box) * special(b - 1, box)
            assert schubert_class((a, b), box) == rhs


def test_sigma1r_positive_support():
    for rows in range(2, 5):
        for g in range(0, 5):
            box = BoxShape(rows, g + 1)
            beta = sigma1r_power_table(g, box)
            assert all(v > 0 for v in beta.terms.values())
            assert all(p.size == (rows - 1) * g for p in beta.terms)


@pytest.mark.parametrize("rows, cols", [(1, 3), (2, 2), (2, 4), (3, 3), (4, 2)])
def test_special_sum_is_ssyt_count(rows, cols):
    box = BoxShape(rows, cols)
    for total in range(box.dimension + 1):
        c = special_sum(total, box)
        for nu in box.partitions(total):
            assert c[nu] == hook_content_count(nu, rows) == ssyt_count(nu, rows)


def test_pair_with_special_sum_matches_expansion():
    for rows in range(1, 4):
        for cols in range(0, 5):
            box = BoxShape(rows, cols)
            for total in range(-1, box.dimension + 2):
                ss = special_sum(total, box)
                for lam in box.partitions():
                    c = schubert_class(lam, box)
                    assert pair_with_special_sum(c, total) == intersection_number(c, ss)
