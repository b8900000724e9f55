"""Unique factorization of Gaussian/Eisenstein integers into positive primes.

Every nonzero element splits as unit * prod(pi**e) where each pi is the
sector representative of its associate class.  The rational prime below
each pi is handled by splitting type: ramified primes peel the minimal
prime, inert primes peel the rational prime itself, and split primes peel
the two conjugate representatives in lexicographic (a, b) order so the
output is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .rational import factor_rational, is_rational_prime
from .rings import QuadInt, Ring
from .rings import gcd as ring_gcd

# Above this bound the split-prime search switches from brute force over b
# to a root-of-unity construction: a residue c with c^2+1=0 (mod q) resp.
# c^2+c+1=0 (mod q) makes gcd(q, c - theta) a prime of norm q.
_BRUTE_FORCE_LIMIT = 10**6


@dataclass(frozen=True)
class Factorization:
    """unit * prod(prime**exp) recomposes the element exactly."""

    unit: QuadInt
    factors: tuple[tuple[QuadInt, int], ...]

    def recompose(self) -> QuadInt:
        out = self.unit
        for p, e in self.factors:
            out = out * p**e
        return out

    def norm(self) -> int:
        n = 1
        for p, e in self.factors:
            n *= p.norm() ** e
        return n

    def to_json(self, element: QuadInt | None = None) -> dict:
        obj = {
            "unit": self.unit.to_json(),
            "factors": [
                {"prime": p.to_json(), "exp": e} for p, e in self.factors
            ],
        }
        if element is not None:
            obj["element"] = element.to_json()
        return obj

    @staticmethod
    def from_json(obj: dict) -> "Factorization":
        return Factorization(
            QuadInt.from_json(obj["unit"]),
            tuple(
                (QuadInt.from_json(f["prime"]), int(f["exp"]))
                for f in obj["factors"]
            ),
        )


def is_ring_prime(x: QuadInt) -> bool:
    """Prime elements have prime norm, or are associates of an inert rational
    prime (norm q**2 with q inert)."""
    n = x.norm()
    if n == 0:
        raise ZeroDivisionError("zero is not classified")
    if n == 1:
        return False
    if is_rational_prime(n):
        return True
    q = isqrt(n)
    if q * q == n and x.ring.is_inert(q) and is_rational_prime(q):
        return x.sector_canonical()[1] == QuadInt(x.ring, q, 0)
    return False


def _sqrt_minus_one(q: int) -> int:
    """c with c*c = -1 (mod q) for a prime q = 1 (mod 4), deterministically."""
    for d in range(2, q):
        if pow(d, (q - 1) // 2, q) == q - 1:
            return pow(d, (q - 1) // 4, q)
    raise ArithmeticError(f"no quadratic non-residue found for {q}")


def _cube_root_of_unity(q: int) -> int:
    """c != 1 with c**3 = 1 (mod q) for a prime q = 1 (mod 3), deterministically."""
    for d in range(2, q):
        c = pow(d, (q - 1) // 3, q)
        if c != 1:
            return c
    raise ArithmeticError(f"no cubic non-residue found for {q}")


@lru_cache(maxsize=None)
def prime_above(q: int, ring: Ring) -> QuadInt:
    """A sector-canonical prime dividing the rational prime q.

    Ramified q gives the minimal prime, inert q gives q itself, and split q
    gives the representative of least b (found by brute force over
    0 <= b <= isqrt(q) for desk-scale q, by a modular root of unity and a
    Euclidean gcd above that).
    """
    if ring.is_ramified(q):
        return ring.minimal_prime
    if ring.is_inert(q):
        return QuadInt(ring, q, 0)
    if ring is Ring.GAUSSIAN:
        if q <= _BRUTE_FORCE_LIMIT:
            for b in range(isqrt(q) + 1):
                a2 = q - b * b
                a = isqrt(a2)
                if a * a == a2 and a > 0:
                    return QuadInt(ring, a, b)
        else:
            c = _sqrt_minus_one(q)
            pi = ring_gcd(QuadInt(ring, q, 0), QuadInt(ring, c, -1))
            if pi.norm() == q:
                return pi
    else:
        if q <= _BRUTE_FORCE_LIMIT:
            for b in range(isqrt(q) + 1):
                disc = 4 * q - 3 * b * b
                s = isqrt(disc)
                if s * s == disc and (b + s) % 2 == 0:
                    a = (b + s) // 2
                    if a > b:
                        return QuadInt(ring, a, b)
        else:
            c = _cube_root_of_unity(q)
            pi = ring_gcd(QuadInt(ring, q, 0), QuadInt(ring, c, -1))
            if pi.norm() == q:
                return pi
    raise ArithmeticError(f"failed to find a prime above {q} in {ring}")


def _peel(x: QuadInt, pi: QuadInt) -> tuple[QuadInt, int]:
    """Divide out pi as often as it goes; returns (cofactor, multiplicity)."""
    e = 0
    while True:
        d = x.exact_divide(pi)
        if d is None:
            return x, e
        x = d
        e += 1


def factor(
    x: QuadInt,
    *,
    norm_factors: list[tuple[int, int]] | None = None,
    split_lookup: dict[int, QuadInt] | None = None,
) -> Factorization:
    """Factor a nonzero element into a unit and sector-canonical primes.

    norm_factors may carry a precomputed rational factorization of norm(x)
    (e.g. from a sieve during bulk scans); split_lookup may pre-resolve the
    split prime above q.  Neither changes the result, only the cost.
    """
    if not x:
        raise ZeroDivisionError("cannot factor zero")
    ring = x.ring
    if norm_factors is None:
        norm_factors = list(factor_rational(x.norm()).factors)
    rem = x
    out: list[tuple[QuadInt, int]] = []
    for q, e in norm_factors:
        if ring.is_ramified(q):
            rem, k = _peel(rem, ring.minimal_prime)
            # each peel removes exactly one factor q from the norm
            assert k == e, f"ramified peel mismatch at {q}"
            out.append((ring.minimal_prime, k))
        elif ring.is_inert(q):
            rem, k = _peel(rem, QuadInt(ring, q, 0))
            assert 2 * k == e, f"inert peel mismatch at {q}"
            out.append((QuadInt(ring, q, 0), k))
        else:
            pi = split_lookup.get(q) if split_lookup else None
            if pi is None:
                pi = prime_above(q, ring)
            pi_bar = pi.conjugate().sector_canonical()[1]
            total = 0
            for p in sorted({pi, pi_bar}, key=lambda z: (z.a, z.b)):
                rem, k = _peel(rem, p)
                if k:
                    out.append((p, k))
                total += k
            assert total == e, f"split peel mismatch at {q}"
    if not rem.is_unit():
        raise ArithmeticError(f"non-unit cofactor {rem} left after peeling {x}")
    out.sort(key=lambda f: (f[0].norm(), f[0].a, f[0].b))
    return Factorization(unit=rem, factors=tuple(out))
