"""Rational-integer primality testing and factorization.

Primality is deterministic below 2**64 (fixed Miller-Rabin witness set) and
probabilistic above, with trial division by all primes below 10**4 first.
Factoring runs trial division and then Brent's cycle-finding variant of
Pollard rho.  All randomized pieces draw from generators seeded by the
documented constants below, so results are reproducible run to run.
"""

from __future__ import annotations

import random
from array import array
from dataclasses import dataclass
from math import gcd, isqrt

# Seeds for the randomized splitting / large-number witness choices.
PRIMALITY_SEED = 0x1D8A_5EED
FACTOR_SEED = 0xB1D_5EED

TRIAL_DIVISION_BOUND = 10_000
MR_ROUNDS_LARGE = 40

# Deterministic Miller-Rabin witnesses, sufficient for all n < 3.3e24 > 2**64.
_MR_WITNESSES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _sieve_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(range(p * p, limit + 1, p))
    return [i for i in range(2, limit + 1) if sieve[i]]


SMALL_PRIMES = _sieve_primes(TRIAL_DIVISION_BOUND)


def _miller_rabin(n: int, a: int) -> bool:
    """One strong-pseudoprime round; n odd > 2, witness a reduced mod n."""
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_rational_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
        if p * p > n:
            return True
    if n < 1 << 64:
        return all(_miller_rabin(n, a) for a in _MR_WITNESSES_64)
    rng = random.Random(PRIMALITY_SEED ^ n)
    return all(
        _miller_rabin(n, rng.randrange(2, n - 1)) for _ in range(MR_ROUNDS_LARGE)
    )


@dataclass(frozen=True)
class RationalFactorization:
    """sign * product(p**e) == the factored integer, primes strictly increasing."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out

    def to_json(self) -> dict:
        return {
            "sign": self.sign,
            "factors": [{"prime": str(p), "exp": e} for p, e in self.factors],
        }


def _brent_rho(n: int, rng: random.Random) -> int:
    """A nontrivial factor of odd composite n (Brent 1980)."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def factor_rational(n: int) -> RationalFactorization:
    """Complete factorization of a nonzero integer, recomposing exactly."""
    if n == 0:
        raise ValueError("cannot factor zero")
    sign = 1
    if n < 0:
        sign, n = -1, -n
    counts: dict[int, int] = {}
    for p in SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    if n > 1:
        stack = [n]
        rng = random.Random(FACTOR_SEED ^ n)
        while stack:
            m = stack.pop()
            if is_rational_prime(m):
                counts[m] = counts.get(m, 0) + 1
                continue
            d = _brent_rho(m, rng)
            stack.append(d)
            stack.append(m // d)
    return RationalFactorization(sign, tuple(sorted(counts.items())))


def smallest_prime_factor_sieve(limit: int) -> array:
    """spf[n] = smallest prime factor of n for 2 <= n <= limit (spf[0..1] = 0, 1).

    Stored as a compact int32 array so large sieves fork-share cheaply
    across worker processes.
    """
    spf = array("i", range(limit + 1))
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:
            for m in range(p * p, limit + 1, p):
                if spf[m] == m:
                    spf[m] = p
    return spf


def factor_with_sieve(n: int, spf: array) -> list[tuple[int, int]]:
    """Factor n (2 <= n <= sieve limit) into ascending (prime, exponent) pairs."""
    out: list[tuple[int, int]] = []
    while n > 1:
        p = spf[n]
        e = 0
        while spf[n] == p:
            n //= p
            e += 1
            if n == 1:
                break
        out.append((p, e))
    return out
