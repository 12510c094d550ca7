import pytest

from circenum.numtheory import (OddPartDecomposition, cunningham_pairs,
                                divisors, euler_phi, is_prime,
                                nearly_doubled_primes, odd_part_decomposition)


def test_euler_phi_basics():
    assert euler_phi(1) == 1
    assert euler_phi(12) == 4
    assert euler_phi(97) == 96


def test_euler_phi_rejects_zero():
    with pytest.raises(ValueError):
        euler_phi(0)


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(36) == [1, 2, 3, 4, 6, 9, 12, 18, 36]
    with pytest.raises(ValueError):
        divisors(0)


def test_gauss_identity():
    # sum of phi over divisors reconstructs n
    for n in range(1, 10001):
        assert sum(euler_phi(r) for r in divisors(n)) == n


def test_is_prime_small():
    assert not is_prime(1)
    assert is_prime(193)
    assert is_prime(9 * 2 ** 42 + 1)


def test_is_prime_agrees_with_sieve_to_one_million():
    bound = 10 ** 6
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(bound ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
    for n in range(bound + 1):
        assert is_prime(n) == bool(sieve[n]), n


def test_is_prime_above_64_bits():
    # forces the probabilistic branch: a 122-bit semiprime and a Mersenne prime
    assert not is_prime((2 ** 61 - 1) * (2 ** 61 + 15))
    assert is_prime(2 ** 89 - 1)


def test_odd_part_decomposition():
    assert odd_part_decomposition(72) == OddPartDecomposition(72, 9, 3)
    assert odd_part_decomposition(36) == OddPartDecomposition(36, 9, 2)
    assert odd_part_decomposition(7) == OddPartDecomposition(7, 7, 0)
    with pytest.raises(ValueError):
        odd_part_decomposition(0)


def test_odd_part_roundtrip():
    for n in range(1, 10 ** 6 + 1):
        d = odd_part_decomposition(n)
        assert d.odd_part % 2 == 1
        assert d.odd_part << d.two_exponent == n


def test_nearly_doubled_primes_below_100():
    pairs = nearly_doubled_primes(100)
    assert [pair.p for pair in pairs] == [3, 5, 13, 37, 61, 73]
    assert [pair.q for pair in pairs] == [2, 3, 7, 19, 31, 37]


def test_nearly_doubled_primes_below_1000():
    pairs = nearly_doubled_primes(1000)
    assert len(pairs) == 21
    for pair in pairs:
        assert pair.p == 2 * pair.q - 1
        assert is_prime(pair.p) and is_prime(pair.q)


def test_nearly_doubled_primes_trivial_limit():
    assert nearly_doubled_primes(2) == []


@pytest.mark.parametrize("ptilde,kmax,expected", [
    (3, 50, [1, 5]),
    (9, 50, [1, 2, 6, 42]),
    (15, 40, [1, 9, 37]),
])
def test_cunningham_pairs(ptilde, kmax, expected):
    assert cunningham_pairs(ptilde, kmax) == expected


def test_cunningham_pairs_define_nearly_doubled_pairs():
    for k in cunningham_pairs(9, 50):
        q = 9 * 2 ** k + 1
        assert is_prime(q) and is_prime(2 * q - 1)


def test_cunningham_pairs_rejects_even_ptilde():
    with pytest.raises(ValueError):
        cunningham_pairs(2, 10)
