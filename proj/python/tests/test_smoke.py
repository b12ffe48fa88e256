import pytest

import legdet


def test_symbols_match_predictions():
    assert legdet.dp_symbol(7, 1, 1) == 0
    assert legdet.dp_symbol(17, 2, 2) == 1
    for p in (11, 13, 19, 31, 37):
        assert legdet.dp_symbol(p, 1, 1) == legdet.predict_d11(p)
    assert legdet.predict_d22(41) == 1


def test_modular_helpers():
    assert legdet.legendre(-2, 5) == -1
    assert legdet.fermat_entry(3, 7) == 5
    assert legdet.fermat_entry(0, 7) == 0
    assert legdet.is_odd_prime(97) and not legdet.is_odd_prime(91)


def test_trinomial_and_lucas():
    assert legdet.trinomial_row(2, 1, 2, 101) == [4, 4, 5, 2, 1]
    assert legdet.row_p_minus_1(1, 1, 7) == legdet.row_p_minus_1(1, 1, 7, method="direct")
    assert legdet.central_trinomial_mod_p2(7) == 43
    assert legdet.lucas_u_mod(7, 1, -1, 101) == 13
    assert legdet.lucas_u_exact(100, 1, -1) == 354224848179261915075
    assert legdet.closed_form_u_neg2_2(9) == 16


def test_determinants():
    assert legdet.det_mod_p([[2, 4], [3, 7]], 101) == 2
    assert legdet.dp_matrix(3, 1, 1) == [[0, 1], [1, 0]]
    assert legdet.krattenthaler_det([1, 1], [1, 2], [1, 3], 101) == 2
    assert [legdet.inv_count(p) for p in (3, 5, 7)] == [0, 1, 4]
    assert legdet.u_function(5, 2, 2)[2] == 0


def test_verify_records():
    records = legdet.verify(["thm1.1", "lemma3.2"], pmin=3, pmax=31)
    assert {r["status"] for r in records} <= {"pass", "na"}
    assert set(records[0]) == {"claim", "p", "b", "c", "expected", "observed", "status", "elapsed_ms"}
    grid = legdet.verify(["lemma2.1"], pmax=7, bc_grid=[(1, 1)])
    assert [(r["p"], r["b"], r["c"]) for r in grid] == [(3, 1, 1), (5, 1, 1), (7, 1, 1)]
    assert "eq4.10-cases" in legdet.claims()
    assert legdet.primes(3, 20) == [3, 5, 7, 11, 13, 17, 19]


def test_errors():
    with pytest.raises(legdet.LegdetError):
        legdet.dp_symbol(9, 1, 1)
    with pytest.raises(ValueError):
        legdet.verify(["nope"])
    with pytest.raises(ValueError):
        legdet.verify(["thm1.1"], pmin=50, pmax=10)
