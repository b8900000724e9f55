import random

import pytest

from cycloperfect.factorization import (
    Factorization,
    factor,
    is_ring_prime,
    prime_above,
)
from cycloperfect.rational import is_rational_prime, smallest_prime_factor_sieve
from cycloperfect.rings import EISENSTEIN, GAUSSIAN, QuadInt, Ring


def e(a, b=0):
    return QuadInt(EISENSTEIN, a, b)


def g(a, b=0):
    return QuadInt(GAUSSIAN, a, b)


class TestIsRingPrime:
    def test_examples(self):
        assert is_ring_prime(g(7, -8))  # norm 113
        assert is_ring_prime(e(2))  # inert, norm 4
        assert not is_ring_prime(g(2))  # 2 = -i (1+i)^2
        assert is_ring_prime(e(2, 1))
        assert is_ring_prime(g(1, 1))
        assert not is_ring_prime(e(1, 1))  # unit
        assert not is_ring_prime(e(7))  # splits

    def test_inert_associates(self):
        for x in e(5).associates():
            assert is_ring_prime(x)
        # norm 25 but not an associate of 5
        assert g(3, 4).norm() == 25 and not is_ring_prime(g(3, 4))

    def test_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            is_ring_prime(e(0))


class TestPrimeAbove:
    def test_ramified(self):
        assert prime_above(2, GAUSSIAN) == g(1, 1)
        assert prime_above(3, EISENSTEIN) == e(2, 1)

    def test_split_examples(self):
        assert prime_above(7, EISENSTEIN) == e(3, 1)
        assert prime_above(5, GAUSSIAN) == g(2, 1)  # least-b policy
        assert prime_above(13, EISENSTEIN) == e(4, 1)

    def test_inert(self):
        assert prime_above(5, EISENSTEIN) == e(5)
        assert prime_above(3, GAUSSIAN) == g(3)

    def test_trichotomy(self):
        # norms are q (split), q^2 (inert), or q for the ramified prime
        q = 2
        while q <= 10_000:
            if is_rational_prime(q):
                for ring in Ring:
                    pi = prime_above(q, ring)
                    assert pi.in_sector()
                    assert is_ring_prime(pi)
                    if ring.is_inert(q):
                        assert pi.norm() == q * q
                    else:
                        assert pi.norm() == q
            q += 1

    def test_large_split_prime_gaussian(self):
        q = 2**73 - 2**37 + 1  # prime, 1 mod 4
        pi = prime_above(q, GAUSSIAN)
        assert pi.norm() == q and pi.in_sector()

    def test_large_split_prime_eisenstein(self):
        from cycloperfect.mersenne import mersenne_element

        q = mersenne_element(EISENSTEIN, 17).norm()  # 8-digit prime, 1 mod 3
        assert q > 10**6 and q % 3 == 1
        assert is_rational_prime(q)
        pi = prime_above(q, EISENSTEIN)
        assert pi.norm() == q and pi.in_sector()


class TestFactor:
    def test_eisenstein_seven(self):
        f = factor(e(7))
        assert f.unit == e(0, -1)  # -w
        assert f.factors == ((e(3, 1), 1), (e(3, 2), 1))
        assert f.recompose() == e(7)

    def test_minimal_prime(self):
        f = factor(e(2, 1))
        assert f.unit == e(1) and f.factors == ((e(2, 1), 1),)

    def test_gaussian_two(self):
        f = factor(g(2))
        assert f.unit == g(0, -1) and f.factors == ((g(1, 1), 2),)

    def test_unit_input(self):
        f = factor(e(1, 1))
        assert f.unit == e(1, 1) and f.factors == ()

    def test_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            factor(e(0))

    def test_factor_properties_random(self):
        rng = random.Random(47)
        for ring in Ring:
            for _ in range(800):
                x = QuadInt(ring, rng.randint(-300, 300), rng.randint(-300, 300))
                if not x:
                    continue
                f = factor(x)
                assert f.recompose() == x
                assert f.unit.is_unit()
                norm_product = 1
                seen = set()
                for p, k in f.factors:
                    assert k >= 1
                    assert p.in_sector()
                    assert is_ring_prime(p)
                    assert p not in seen
                    seen.add(p)
                    norm_product *= p.norm() ** k
                assert norm_product == x.norm()
                keys = [(p.norm(), p.a, p.b) for p, _ in f.factors]
                assert keys == sorted(keys)
                assert x.is_even() == any(p == ring.minimal_prime for p, _ in f.factors)

    def test_recomposition_sweep(self):
        bound = 5_000
        from cycloperfect.rational import factor_with_sieve
        from cycloperfect.search import iter_sector

        for ring in Ring:
            spf = smallest_prime_factor_sieve(bound)
            for a, b, n in iter_sector(ring, bound):
                x = QuadInt(ring, a, b)
                f = factor(x, norm_factors=factor_with_sieve(n, spf))
                assert f.recompose() == x

    def test_split_lookup_conjugate_choice_is_irrelevant(self):
        x = e(7) * e(3, 1) ** 2 * e(4, 1)
        base = factor(x)
        alt = factor(x, split_lookup={7: e(3, 2), 13: e(4, 3)})
        assert base == alt

    def test_mersenne_scale_element(self):
        # norm has a ~38-digit split prime factor; exercises the gcd route
        from cycloperfect.mersenne import mersenne_element

        q = mersenne_element(EISENSTEIN, 79).norm()
        assert is_rational_prime(q)
        x = e(2, 1) ** 5 * prime_above(q, EISENSTEIN)
        f = factor(x)
        assert f.recompose() == x
        assert {p.norm() for p, _ in f.factors} == {3, q}

    def test_json_roundtrip(self):
        f = factor(e(7))
        assert Factorization.from_json(f.to_json()) == f
        obj = f.to_json(element=e(7))
        assert obj["element"] == e(7).to_json()
