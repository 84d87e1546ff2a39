import itertools

import pytest

from salvetti.coxeter import (
    INF,
    CoxeterMatrix,
    CoxeterSyntaxError,
    CoxeterValidationError,
    abelianization_rank,
    artin_presentation,
    classify_finite,
    components,
    finite_parabolics,
    format_coxeter_spec,
    group_order,
    is_finite_type,
    odd_components,
    parse_coxeter_spec,
)

ORDERS = {
    "A1": 2, "A2": 6, "A3": 24, "A4": 120, "B2": 8, "B3": 48, "B4": 384, "C3": 48,
    "D4": 192, "D5": 1920, "E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152,
    "G2": 12, "H3": 120, "H4": 14400, "I2(5)": 10, "I2(9)": 18,
}


@pytest.mark.parametrize("name,order", sorted(ORDERS.items()))
def test_group_order_from_classification(name, order):
    assert group_order(parse_coxeter_spec(name)) == order


@pytest.mark.parametrize("name", ["~A1", "~A2", "~A3", "~B3", "~C2", "~D4", "~E6", "~F4", "~G2"])
def test_affine_types_are_infinite(name):
    m = parse_coxeter_spec(name)
    assert not is_finite_type(m, m.generators)
    assert group_order(m) is None
    # every proper subdiagram of an affine diagram is finite
    for J in itertools.combinations(m.generators, m.rank - 1):
        assert is_finite_type(m, J)


@pytest.mark.parametrize("name,rank,bonds", [
    ("~A1", 2, [INF]), ("~A2", 3, [3, 3, 3]), ("~A3", 4, [3, 3, 3, 3]),
    ("~C2", 3, [4, 4]), ("~G2", 3, [3, 6]), ("~B3", 4, [3, 3, 4]), ("~F4", 5, [3, 3, 4, 3]),
])
def test_affine_table(name, rank, bonds):
    m = parse_coxeter_spec(name)
    assert m.rank == rank
    found = [m.label(s, t) for s, t in itertools.combinations(range(rank), 2) if m.label(s, t) != 2]
    assert sorted(found, key=lambda x: 99 if x is INF else x) == sorted(bonds, key=lambda x: 99 if x is INF else x)


def test_product_and_components():
    m = parse_coxeter_spec("A2xB2")
    assert components(m, m.generators) == [(0, 1), (2, 3)]
    assert [str(t) for t in classify_finite(m, m.generators)] == ["A2", "B2"]
    assert [str(t) for t in classify_finite(m, (0, 2))] == ["A1", "A1"]


def test_g2_is_dihedral_six():
    assert [str(t) for t in classify_finite(parse_coxeter_spec("G2"), (0, 1))] == ["I2(6)"]


def test_explicit_block_round_trip():
    m = parse_coxeter_spec("rank 3; m 1 2 = 3; m 2 3 = inf")
    assert m.label(1, 2) is INF and m.label(0, 2) == 2
    assert parse_coxeter_spec(format_coxeter_spec(m)) == m
    for name in ["H4", "~G2", "A2xB2", "D4"]:
        a = parse_coxeter_spec(name)
        assert parse_coxeter_spec(format_coxeter_spec(a)) == a


def test_inf_is_a_singleton_greater_than_ints():
    assert INF > 10 ** 9
    assert not INF < 3
    assert INF == INF and INF != 0


@pytest.mark.parametrize("text,exc", [
    ("", CoxeterSyntaxError),
    ("Z3", CoxeterSyntaxError),
    ("A0", CoxeterValidationError),
    ("I2(1)", CoxeterValidationError),
    ("rank 2; m 1 1 = 3", CoxeterValidationError),
])
def test_bad_specs(text, exc):
    with pytest.raises(exc):
        parse_coxeter_spec(text)


def test_matrix_validation():
    with pytest.raises(CoxeterValidationError):
        CoxeterMatrix(((1, 3), (4, 1)))
    with pytest.raises(CoxeterValidationError):
        CoxeterMatrix(((1, 1), (1, 1)))
    with pytest.raises(CoxeterValidationError):
        CoxeterMatrix(((1, 3, 2), (3, 1)))


def test_finite_parabolics_downward_closed():
    for name in ["~A2", "~C2", "A2xB2", "~A1", "H3"]:
        m = parse_coxeter_spec(name)
        fin = set(finite_parabolics(m))
        assert () in fin
        for J in fin:
            for k in range(len(J)):
                for K in itertools.combinations(J, k):
                    assert K in fin


def test_presentation():
    p = artin_presentation(parse_coxeter_spec("A2"))
    assert p.relations == (((0, 1, 0), (1, 0, 1)),)
    assert artin_presentation(parse_coxeter_spec("~A1")).relations == ()
    b2 = artin_presentation(parse_coxeter_spec("B2"))
    assert b2.relations == (((0, 1, 0, 1), (1, 0, 1, 0)),)


@pytest.mark.parametrize("name", ["A1", "A4", "B2", "B3", "F4", "~A1", "~G2", "I2(6)", "A2xB2", "H3", "D4"])
def test_abelianization_matches_odd_components(name):
    m = parse_coxeter_spec(name)
    assert abelianization_rank(artin_presentation(m)) == odd_components(m)


def test_relation_count():
    for name in ["~A2", "A4", "~A1", "A2xB2"]:
        m = parse_coxeter_spec(name)
        finite_pairs = sum(1 for s, t in itertools.combinations(m.generators, 2) if m.label(s, t) is not INF)
        assert len(artin_presentation(m).relations) == finite_pairs


def test_relabel():
    m = parse_coxeter_spec("B3")
    r = m.relabel((2, 0, 1))
    assert r.label(2, 0) == 4
    assert group_order(r) == 48
