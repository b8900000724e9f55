"""Generalized Mersenne numbers (minimal_prime**k - 1) and the even
(norm-)perfect integers built from their prime instances.

The element itself is computed by exact powering; primality reduces to
rational primality of the norm, with the one escape hatch of an element
that is an associate of an inert rational prime (norm q**2).  Composite
exponents are skipped in scans: k = m*n factors the element as
(min**m - 1) * sum_j (min**m)**j, and the witness for that is available
on demand.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from math import isqrt
from multiprocessing import get_context

from .factorization import Factorization
from .rational import is_rational_prime
from .rings import QuadInt, Ring

# Residues k mod 12 that an even norm-perfect exponent can have.
NORM_PERFECT_K_RESIDUES = {
    Ring.GAUSSIAN: frozenset({0, 1, 11}),
    Ring.EISENSTEIN: frozenset({0, 1, 2, 10, 11}),
}

# Residue modulus used to report k in records: the construction variants
# are governed by k mod 8 (Gaussian) and k mod 12 (Eisenstein).
def k_residue_modulus(ring: Ring) -> int:
    return 8 if ring is Ring.GAUSSIAN else 12


@dataclass(frozen=True)
class MersenneRecord:
    ring: Ring
    k: int
    element: QuadInt
    norm: int
    k_residue: int
    is_prime: bool
    prime_exponent_ok: bool

    def to_json(self) -> dict:
        return {
            "ring": self.ring.value,
            "k": self.k,
            "element": self.element.to_json(),
            "norm": str(self.norm),
            "k_residue": self.k_residue,
            "is_prime": self.is_prime,
            "prime_exponent_ok": self.prime_exponent_ok,
        }

    @staticmethod
    def from_json(obj: dict) -> "MersenneRecord":
        return MersenneRecord(
            ring=Ring(obj["ring"]),
            k=int(obj["k"]),
            element=QuadInt.from_json(obj["element"]),
            norm=int(obj["norm"]),
            k_residue=int(obj["k_residue"]),
            is_prime=bool(obj["is_prime"]),
            prime_exponent_ok=bool(obj["prime_exponent_ok"]),
        )


def mersenne_element(ring: Ring, k: int) -> QuadInt:
    if k < 1:
        raise ValueError("k must be >= 1")
    return ring.minimal_prime**k - 1


def _element_is_prime(x: QuadInt) -> bool:
    n = x.norm()
    if n <= 1:
        return False
    if is_rational_prime(n):
        return True
    q = isqrt(n)
    if q * q == n and x.ring.is_inert(q) and is_rational_prime(q):
        return x.sector_canonical()[1] == QuadInt(x.ring, q, 0)
    return False


def mersenne(ring: Ring, k: int) -> MersenneRecord:
    element = mersenne_element(ring, k)
    return MersenneRecord(
        ring=ring,
        k=k,
        element=element,
        norm=element.norm(),
        k_residue=k % k_residue_modulus(ring),
        is_prime=_element_is_prime(element),
        prime_exponent_ok=is_rational_prime(k),
    )


def mersenne_norm_closed_form(k: int) -> int | None:
    """Closed-form Eisenstein Mersenne norm for k = 0, +-1, +-2 (mod 12).

    Returns None for the residues the closed form does not cover.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    r = k % 12
    if r in (2, 10):
        return 3**k - 3 ** (k // 2) + 1
    if r in (1, 11):
        return 3**k - 3 ** ((k + 1) // 2) + 1
    if r == 0:
        return 3**k - 2 * 3 ** (k // 2) + 1
    return None


def composite_exponent_witness(ring: Ring, k: int) -> tuple[QuadInt, QuadInt]:
    """Cofactors (min**m - 1, sum_{j<n} min**(m*j)) for k = m*n, multiplying
    to the Mersenne element; the left one is a proper non-unit divisor."""
    if k < 4 or is_rational_prime(k):
        raise ValueError("k must be composite and >= 4")
    m = next(d for d in range(2, k) if k % d == 0)
    n = k // m
    base = ring.minimal_prime**m
    left = base - 1
    right = QuadInt(ring, 0, 0)
    power = QuadInt(ring, 1, 0)
    for _ in range(n):
        right = right + power
        power = power * base
    return left, right


def construct_even_candidate(
    ring: Ring, k: int, variant: str = "plain", unit: QuadInt | None = None
) -> QuadInt:
    """unit * minimal**(k-1) * M  (or * conjugate(M) for the conjugated
    variant), where M = minimal**k - 1 must be prime."""
    element, fac = candidate_factorization(ring, k, variant, unit)
    return element


def candidate_factorization(
    ring: Ring, k: int, variant: str = "plain", unit: QuadInt | None = None
) -> tuple[QuadInt, Factorization]:
    """The candidate together with its known prime factorization, so that
    Mersenne-scale elements never need a generic norm factorization."""
    if variant not in ("plain", "conjugated"):
        raise ValueError(f"unknown variant {variant!r}")
    if unit is None:
        unit = QuadInt(ring, 1, 0)
    elif not unit.is_unit():
        raise ValueError(f"{unit} is not a unit")
    rec = mersenne(ring, k)
    if not rec.is_prime:
        raise ValueError(f"Mersenne element for k={k} is composite")
    part = rec.element if variant == "plain" else rec.element.conjugate()
    element = unit * ring.minimal_prime ** (k - 1) * part
    u_m, m_canonical = part.sector_canonical()
    factors = [(ring.minimal_prime, k - 1), (m_canonical, 1)]
    factors.sort(key=lambda f: (f[0].norm(), f[0].a, f[0].b))
    return element, Factorization(unit=unit * u_m, factors=tuple(factors))


def _scan_one(args: tuple[str, int]) -> MersenneRecord:
    ring_value, k = args
    return mersenne(Ring(ring_value), k)


def _load_cache(path: str, ring: Ring) -> dict[int, MersenneRecord]:
    """Cached records whose element and norm survive recomputation."""
    out: dict[int, MersenneRecord] = {}
    if not os.path.exists(path):
        return out
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                rec = MersenneRecord.from_json(json.loads(line))
            except (ValueError, KeyError):
                continue
            if rec.ring is not ring:
                continue
            element = mersenne_element(ring, rec.k)
            if element == rec.element and element.norm() == rec.norm:
                out[rec.k] = rec
    return out


def scan(
    ring: Ring,
    k_max: int,
    residues: set[int] | None = None,
    cache_path: str | None = None,
    resume: bool = False,
    jobs: int | None = None,
    progress_cb=None,
) -> list[MersenneRecord]:
    """Records for every rational prime exponent k <= k_max.

    Composite k are skipped (their elements are never prime); the residue
    filter, when given, keeps only k with k mod 8/12 in the set.  A cache
    file holds one JSON record per line and is validated on load.
    """
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    modulus = k_residue_modulus(ring)
    ks = [
        k
        for k in range(2, k_max + 1)
        if is_rational_prime(k)
        and (residues is None or k % modulus in residues)
    ]
    cached: dict[int, MersenneRecord] = {}
    if cache_path and resume:
        cached = _load_cache(cache_path, ring)
    todo = [k for k in ks if k not in cached]
    fresh: list[MersenneRecord] = []
    if todo:
        if jobs is None:
            jobs = os.cpu_count() or 1
        if jobs > 1 and len(todo) > 4:
            with get_context("fork").Pool(jobs) as pool:
                for rec in pool.imap(
                    _scan_one, [(ring.value, k) for k in todo], chunksize=1
                ):
                    fresh.append(rec)
                    if progress_cb is not None:
                        progress_cb(len(cached) + len(fresh))
        else:
            for k in todo:
                fresh.append(mersenne(ring, k))
                if progress_cb is not None:
                    progress_cb(len(cached) + len(fresh))
    if cache_path and fresh:
        with open(cache_path, "a", encoding="utf-8") as fh:
            for rec in fresh:
                fh.write(json.dumps(rec.to_json(), sort_keys=True) + "\n")
    records = list(cached.values()) + fresh
    records.sort(key=lambda r: r.k)
    return records
