"""The generalized sum-of-divisors function and perfection classification.

sigma of an element is the product over its canonical prime powers of the
geometric sums 1 + pi + ... + pi**e, accumulated Horner-style so no ring
division ever happens.  A unit has the empty factorization and sigma 1.

An element x is perfect when sigma(x) equals minimal_prime * x exactly,
norm-perfect when that equality holds after taking norms, and abundant or
deficient according to the strict inequality direction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .factorization import Factorization, factor, is_ring_prime
from .rings import QuadInt, Ring

ORACLE_NORM_BOUND = 200_000
PRIMITIVITY_DIVISOR_BUDGET = 10**6


class Status(enum.Enum):
    DEFICIENT = "deficient"
    NORM_PERFECT = "norm_perfect"
    ABUNDANT = "abundant"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Classification:
    element: QuadInt
    even: bool
    status: Status
    perfect: bool
    primitive: bool | None
    sigma: QuadInt
    norm: int
    sigma_norm: int

    def to_json(self) -> dict:
        return {
            "element": self.element.to_json(),
            "even": self.even,
            "status": self.status.value,
            "perfect": self.perfect,
            "primitive": self.primitive,
            "sigma": self.sigma.to_json(),
            "norm": str(self.norm),
            "sigma_norm": str(self.sigma_norm),
        }


def _geometric_sum(pi: QuadInt, e: int) -> QuadInt:
    """1 + pi + ... + pi**e by Horner accumulation."""
    s = QuadInt(pi.ring, 1, 0)
    for _ in range(e):
        s = s * pi + 1
    return s


def sigma_from_factorization(fac: Factorization) -> QuadInt:
    total = QuadInt(fac.unit.ring, 1, 0)
    for pi, e in fac.factors:
        total = total * _geometric_sum(pi, e)
    return total


def sigma(x: QuadInt) -> QuadInt:
    """sigma depends only on the associate class of x."""
    if not x:
        raise ZeroDivisionError("sigma(0) is undefined")
    return sigma_from_factorization(factor(x))


def divisor_sum_from_factorization(fac: Factorization) -> QuadInt:
    """Sum over every exponent tuple of the product of prime powers.

    The independent road to sigma: enumerate the divisor lattice outright
    and add the divisors up, products of the canonical primes as-is.
    """
    ring = fac.unit.ring
    divisors = [QuadInt(ring, 1, 0)]
    for pi, e in fac.factors:
        powers = [QuadInt(ring, 1, 0)]
        for _ in range(e):
            powers.append(powers[-1] * pi)
        divisors = [d * p for d in divisors for p in powers]
    total = QuadInt(ring, 0, 0)
    for d in divisors:
        total = total + d
    return total


def divisor_sum_oracle(x: QuadInt, max_norm: int = ORACLE_NORM_BOUND) -> QuadInt:
    if not x:
        raise ZeroDivisionError("divisor sum of 0 is undefined")
    if x.norm() > max_norm:
        raise ValueError(f"norm {x.norm()} exceeds the oracle bound {max_norm}")
    return divisor_sum_from_factorization(factor(x))


def _is_primitive(
    fac: Factorization, minimal_norm: int, budget: int
) -> bool:
    """No proper, non-associate divisor may itself be norm-perfect.

    Walks the divisor lattice multiplicatively over norms only; the full
    exponent tuple (the class of the element itself) is excluded.
    """
    lattice_size = 1
    for _, e in fac.factors:
        lattice_size *= e + 1
    if lattice_size > budget:
        raise ValueError(
            f"divisor lattice of size {lattice_size} exceeds budget {budget}"
        )
    # per-prime tables of (norm(pi^j), norm(sigma(pi^j)))
    tables = []
    for pi, e in fac.factors:
        npi = pi.norm()
        row = []
        s = QuadInt(pi.ring, 1, 0)
        npow = 1
        for j in range(e + 1):
            row.append((npow, s.norm()))
            npow *= npi
            s = s * pi + 1
        tables.append(row)
    pairs = [(1, 1)]
    for row in tables:
        pairs = [
            (n * pn, sn * psn)
            for (n, sn) in pairs
            for (pn, psn) in row
        ]
    # Prime-power norms grow strictly with the exponent, so the full tuple is
    # the unique divisor of maximal norm; skipping it by norm excludes exactly
    # the element's own associate class.
    total_norm = fac.norm()
    for n, sn in pairs:
        if n != total_norm and sn == minimal_norm * n:
            return False
    return True


def classify(
    x: QuadInt,
    check_primitive: bool = False,
    *,
    factorization: Factorization | None = None,
    divisor_budget: int = PRIMITIVITY_DIVISOR_BUDGET,
) -> Classification:
    if not x:
        raise ZeroDivisionError("cannot classify zero")
    fac = factorization if factorization is not None else factor(x)
    sig = sigma_from_factorization(fac)
    n = x.norm()
    ns = sig.norm()
    c = x.ring.residue_char  # == norm of the minimal prime
    if ns < c * n:
        status = Status.DEFICIENT
    elif ns == c * n:
        status = Status.NORM_PERFECT
    else:
        status = Status.ABUNDANT
    perfect = sig == x.ring.minimal_prime * x
    primitive: bool | None = None
    if check_primitive and status is Status.NORM_PERFECT:
        primitive = _is_primitive(fac, c, divisor_budget)
    return Classification(
        element=x,
        even=x.is_even(),
        status=status,
        perfect=perfect,
        primitive=primitive,
        sigma=sig,
        norm=n,
        sigma_norm=ns,
    )


def perfect_associate_unit(x: QuadInt, sig: QuadInt | None = None) -> QuadInt | None:
    """The unit u for which u*x is perfect, if any associate of x is.

    sigma is constant on the associate class, so u*x is perfect exactly
    when sigma(x) == minimal * u * x; at most one unit qualifies.
    """
    if sig is None:
        sig = sigma(x)
    base = x.ring.minimal_prime * x
    for u in x.ring.units:
        if u * base == sig:
            return u
    return None


def check_spira_inequality(alpha: QuadInt, n: int) -> bool:
    """norm(1 + alpha + ... + alpha**n) >= norm(alpha)**n, required to hold
    whenever Re(alpha) >= 1 and alpha is neither 0 nor 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if alpha.real_part_doubled() < 2 or not alpha or alpha == QuadInt(alpha.ring, 1, 0):
        raise ValueError("requires Re(alpha) >= 1 and alpha not in {0, 1}")
    return _geometric_sum(alpha, n).norm() >= alpha.norm() ** n


def check_mcdaniel_inequality(psi: QuadInt, n: int) -> bool:
    """Cleared-denominator form of the strict sigma growth bound for odd
    positive primes: 5*N(sigma(psi^n))*N(psi) > N(psi^n)*(5*N(psi)+5*2Re(psi)-7)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if psi.is_even():
        raise ValueError("psi must be odd")
    if not psi.in_sector() or not is_ring_prime(psi):
        raise ValueError("psi must be a sector-canonical ring prime")
    npsi = psi.norm()
    lhs = 5 * _geometric_sum(psi, n).norm() * npsi
    rhs = npsi**n * (5 * npsi + 5 * psi.real_part_doubled() - 7)
    return lhs > rhs


def check_odd_power_divisibility(psi: QuadInt, m: int) -> bool:
    """Whether 3 divides norm(sigma(psi**m)) for an odd Eisenstein prime psi."""
    if psi.ring is not Ring.EISENSTEIN:
        raise ValueError("defined for the Eisenstein ring")
    if psi.is_even():
        raise ValueError("psi must be odd")
    if m < 0:
        raise ValueError("m must be >= 0")
    return _geometric_sum(psi, m).norm() % 3 == 0
