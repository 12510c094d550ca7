import pytest

from circenum.algebra import UniPoly
from circenum.counting import (CLASSES, alternating_sum, count_by_formula,
                               even_odd_split, formal_undirected, formula_kind,
                               log_concavity_probe, mixed_sd, non_ci_counts,
                               oriented_alternating_expected, prime_enumerator,
                               prime_squared_enumerator,
                               twice_prime_enumerator)
from circenum.errors import UnsupportedOrderError
from circenum.numtheory import is_prime

from golden import COLUMN_CLASSES, TABLE1, TABLE2_D, TABLE2_O, TABLE2_U

PRIMES_IN_TABLE = [n for n in TABLE1 if n % 2 and is_prime(n)]
TWICE_PRIMES_IN_TABLE = [n for n in TABLE1
                         if n % 2 == 0 and n // 2 % 2 and is_prime(n // 2)]


# --- prime order ---------------------------------------------------------------

@pytest.mark.parametrize("p", PRIMES_IN_TABLE)
def test_prime_counts_match_catalog(p):
    expected = TABLE1[p]
    got = tuple(prime_enumerator(p, klass).total for klass in COLUMN_CLASSES)
    assert got == expected


def test_prime_enumerator_valency_series():
    assert prime_enumerator(13, "d").by_valency.coeffs == (
        1, 1, 6, 19, 43, 66, 80, 66, 43, 19, 6, 1, 1)
    assert prime_enumerator(7, "u").by_valency == UniPoly([1, 0, 1, 0, 1, 0, 1])
    assert prime_enumerator(37, "o").by_valency.coeff(4) == 1360
    assert prime_enumerator(37, "o").total == 10761723


def test_prime_enumerator_no_series_for_single_totals():
    for klass in ("sd", "su", "t"):
        assert prime_enumerator(13, klass).by_valency is None


def test_prime_enumerator_rejects_bad_input():
    with pytest.raises(ValueError):
        prime_enumerator(2, "d")
    with pytest.raises(ValueError):
        prime_enumerator(9, "d")


# --- twice prime order ----------------------------------------------------------

@pytest.mark.parametrize("n", TWICE_PRIMES_IN_TABLE)
def test_twice_prime_counts_match_catalog(n):
    expected = TABLE1[n][:3]
    got = tuple(twice_prime_enumerator(n // 2, klass).total
                for klass in ("d", "u", "o"))
    assert got == expected


def test_twice_prime_valency_series():
    d14 = twice_prime_enumerator(7, "d")
    assert d14.by_valency.coeffs == (1, 3, 14, 50, 123, 217, 292, 292, 217,
                                     123, 50, 14, 3, 1)
    assert d14.total == 1400
    u14 = twice_prime_enumerator(7, "u")
    assert u14.total == 48
    assert [u14.by_valency.coeff(2 * r) for r in range(7)] == [1, 2, 5, 8, 5, 2, 1]
    o38 = twice_prime_enumerator(19, "o")
    assert o38.by_valency.coeff(4) == 2720
    assert o38.total == 21523445


def test_twice_prime_rejects_self_complementary_classes():
    for klass in ("sd", "su", "t"):
        with pytest.raises(UnsupportedOrderError):
            twice_prime_enumerator(7, klass)


# --- prime squared order --------------------------------------------------------

@pytest.mark.parametrize("p", [3, 5, 7])
def test_prime_squared_counts_match_catalog(p):
    expected = TABLE1[p * p]
    got = tuple(prime_squared_enumerator(p, klass).total
                for klass in COLUMN_CLASSES)
    assert got == expected


def test_prime_squared_big_example():
    assert prime_squared_enumerator(13, "sd").total == 123992391755402970674764
    assert prime_squared_enumerator(13, "su").total == 56385212104
    assert prime_squared_enumerator(13, "t").total == 123992391755346585462636


def test_prime_squared_rejects_two():
    with pytest.raises(ValueError):
        prime_squared_enumerator(2, "d")


# --- valency tables --------------------------------------------------------------

@pytest.mark.parametrize("n", sorted(TABLE2_U))
def test_undirected_valency_columns(n):
    result = count_by_formula(n, "u")
    got = [result.by_valency.coeff(2 * r) for r in range(len(TABLE2_U[n]))]
    assert got == TABLE2_U[n]


@pytest.mark.parametrize("n", sorted(TABLE2_D))
def test_directed_valency_columns(n):
    result = count_by_formula(n, "d")
    got = [result.by_valency.coeff(r) for r in range(len(TABLE2_D[n]))]
    assert got == TABLE2_D[n]


@pytest.mark.parametrize("n", sorted(TABLE2_O))
def test_oriented_valency_columns(n):
    result = count_by_formula(n, "o")
    got = [result.by_valency.coeff(r) for r in range(len(TABLE2_O[n]))]
    assert got == TABLE2_O[n]


# --- dispatch ---------------------------------------------------------------------

def test_formula_kind():
    assert formula_kind(13) == ("prime", 13)
    assert formula_kind(38) == ("twice_prime", 19)
    assert formula_kind(169) == ("prime_squared", 13)
    assert formula_kind(50) is None      # 2 * 5^2
    assert formula_kind(4) is None       # 2 * 2
    assert formula_kind(15) is None


def test_count_by_formula_unsupported():
    with pytest.raises(UnsupportedOrderError):
        count_by_formula(15, "d")
    with pytest.raises(UnsupportedOrderError):
        count_by_formula(14, "sd")


# --- structural invariants ---------------------------------------------------------

def test_palindromic_valency_series():
    for p in [n for n in range(3, 200) if is_prime(n)]:
        cd = prime_enumerator(p, "d").by_valency
        assert all(cd.coeff(r) == cd.coeff(p - 1 - r) for r in range(p))
        cu = prime_enumerator(p, "u").by_valency
        assert all(cu.coeff(2 * r) == cu.coeff(p - 1 - 2 * r)
                   for r in range((p - 1) // 2 + 1))


def test_undirected_odd_orders_have_even_powers_only():
    for n in [n for n in range(3, 200) if formula_kind(n)
              and formula_kind(n)[0] != "twice_prime"]:
        poly = count_by_formula(n, "u").by_valency
        assert all(c == 0 for r, c in enumerate(poly.coeffs) if r % 2 == 1), n


def test_totals_equal_series_at_one():
    for n in range(2, 201):
        kind = formula_kind(n)
        if not kind:
            continue
        classes = ("d", "u", "o") if kind[0] == "twice_prime" else CLASSES
        for klass in classes:
            result = count_by_formula(n, klass)
            if result.by_valency is not None:
                assert result.by_valency(1) == result.total


def test_formal_undirected_count_provenance():
    from circenum.counting import formal_undirected_count
    assert formal_undirected_count(19).provenance == "formula"
    formal = formal_undirected_count(55)
    assert formal.provenance == "formal"
    assert formal.to_json()["provenance"] == "formal"
    assert formal.total == formal.by_valency(1)


def test_formal_undirected():
    assert formal_undirected(7) == UniPoly([1, 0, 1, 0, 1, 0, 1])
    f19 = formal_undirected(19)
    assert [f19.coeff(2 * r) for r in range(10)] == [1, 1, 4, 10, 14, 14, 10, 4, 1, 1]
    assert f19(1) == 60
    assert f19 == prime_enumerator(19, "u").by_valency
    # composite argument: still a well-defined polynomial
    f55 = formal_undirected(55)
    assert f55.degree == 54
    assert f55.coeff(0) == 1
    with pytest.raises(ValueError):
        formal_undirected(10)


# --- alternating sums ---------------------------------------------------------------

def test_alternating_sums_examples():
    assert alternating_sum(13, "d") == 8
    assert alternating_sum(29, "u") == 10
    assert alternating_sum(37, "o") == 1
    assert alternating_sum(19, "o") == 0


def test_alternating_sums_match_self_complementary_counts():
    for n in range(3, 101):
        kind = formula_kind(n)
        if not kind:
            continue
        if kind[0] != "twice_prime":
            assert alternating_sum(n, "d") == count_by_formula(n, "sd").total
            assert alternating_sum(n, "u") == count_by_formula(n, "su").total
        else:
            assert alternating_sum(n, "d") == 0
        assert alternating_sum(n, "o") == oriented_alternating_expected(n)


def test_alternating_sum_unsupported_order():
    with pytest.raises(UnsupportedOrderError):
        alternating_sum(15, "d")


def test_alternating_sum_undirected_even_order_rejected():
    # even-order undirected series carry odd powers, so the z^2 -> -1
    # evaluation is undefined there
    with pytest.raises(ValueError):
        alternating_sum(14, "u")


# --- even/odd splits -----------------------------------------------------------------

def test_even_odd_split_examples():
    assert even_odd_split(13, "d") == (180, 172)
    assert even_odd_split(13, "u") == (8, 6)
    assert even_odd_split(7, "u") == (2, 2)


def test_even_odd_split_reconciles_with_alternating():
    for n in range(3, 101):
        kind = formula_kind(n)
        if not kind:
            continue
        even, odd = even_odd_split(n, "d")
        assert even + odd == count_by_formula(n, "d").total
        assert even - odd == alternating_sum(n, "d")
        if kind[0] != "twice_prime":
            even, odd = even_odd_split(n, "u")
            assert even + odd == count_by_formula(n, "u").total
            assert even - odd == alternating_sum(n, "u")


def test_even_odd_split_rejects_even_order_undirected():
    with pytest.raises(UnsupportedOrderError):
        even_odd_split(14, "u")


# --- mixed and non-CI ----------------------------------------------------------------

def test_mixed_sd_values():
    assert mixed_sd(13) == 24
    assert mixed_sd(7) == 0
    assert mixed_sd(5) == 2


def test_mixed_sd_internal_consistency_to_100():
    # the three equivalent forms are compared inside mixed_sd
    for p in [n for n in range(3, 101) if is_prime(n)]:
        assert mixed_sd(p) >= 0


def test_non_ci_counts():
    assert non_ci_counts(13) == (64, 4, 36)
    assert non_ci_counts(3) == (1, 0, 1)
    assert non_ci_counts(5) == (4, 1, 1)


# --- log-concavity -------------------------------------------------------------------

def test_log_concavity_prime_orders_clean():
    for p in [n for n in range(5, 200) if is_prime(n)]:
        assert log_concavity_probe(p) == []


def test_log_concavity_violations_at_prime_squares():
    assert [v[0] for v in log_concavity_probe(121)] == [2, 58]
    assert [v[0] for v in log_concavity_probe(169)] == [2, 82]
    r, before, at, after = log_concavity_probe(121)[0]
    assert (r, at * at < before * after) == (2, True)


def test_log_concavity_with_supplied_counts():
    poly = count_by_formula(37, "u").by_valency
    assert log_concavity_probe(37, poly) == []
