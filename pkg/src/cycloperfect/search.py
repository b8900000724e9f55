"""Exhaustive desk-scale searches and theorem-shaped structural validators.

Sector scans enumerate exactly one representative per associate class
(Gaussian a > 0, b >= 0; Eisenstein a > b >= 0), classify each element,
and report every non-deficient finding.  The region is partitioned into
strips of the a coordinate; workers are pure classifiers and results merge
in strip order, so reports are identical no matter how many processes run.
"""

from __future__ import annotations

import json
import os
import signal
import time
from dataclasses import dataclass
from math import isqrt
from multiprocessing import get_context

from .divisors import (
    Status,
    classify,
    sigma_from_factorization,
    divisor_sum_from_factorization,
)
from .factorization import Factorization, factor
from .mersenne import NORM_PERFECT_K_RESIDUES
from .rational import (
    factor_with_sieve,
    is_rational_prime,
    smallest_prime_factor_sieve,
)
from .rings import QuadInt, Ring

DEFAULT_SCAN_LIMIT = 200_000
CHECKPOINT_EVERY = 10_000
_CHUNK_TARGET_POINTS = 6_000


class ScanInvariantError(RuntimeError):
    """An internal consistency assertion failed mid-scan."""


# -- region enumeration -------------------------------------------------------


def a_range(ring: Ring, bound: int) -> range:
    if ring is Ring.GAUSSIAN:
        return range(1, isqrt(bound) + 1)
    # norm >= 3a^2/4 inside the sector
    return range(1, isqrt(4 * bound // 3) + 2)


def strip_points(ring: Ring, bound: int, a: int):
    """Yield (b, norm) for the sector points in the strip at this a."""
    if ring is Ring.GAUSSIAN:
        aa = a * a
        if aa > bound:
            return
        for b in range(isqrt(bound - aa) + 1):
            yield b, aa + b * b
    else:
        aa = a * a
        disc = 4 * bound - 3 * aa
        if disc < 0:
            return
        s = isqrt(disc)
        b_lo = max(0, (a - s) // 2 - 1)
        b_hi = min(a - 1, (a + s) // 2 + 1)
        for b in range(b_lo, b_hi + 1):
            n = aa - a * b + b * b
            if n <= bound:
                yield b, n


def iter_sector(ring: Ring, bound: int):
    """All sector representatives with 0 < norm <= bound, as (a, b, norm)."""
    for a in a_range(ring, bound):
        for b, n in strip_points(ring, bound, a):
            yield a, b, n


def count_sector_classes(ring: Ring, bound: int) -> int:
    return sum(1 for _ in iter_sector(ring, bound))


def count_lattice_points(ring: Ring, bound: int) -> int:
    """Nonzero lattice points with norm <= bound, counted over a full box."""
    count = 0
    m = isqrt(4 * bound) + 2
    for a in range(-m, m + 1):
        for b in range(-m, m + 1):
            if a == 0 and b == 0:
                continue
            if ring is Ring.GAUSSIAN:
                n = a * a + b * b
            else:
                n = a * a - a * b + b * b
            if n <= bound:
                count += 1
    return count


# -- shared worker context ------------------------------------------------------
#
# Sweeps fork their workers, so the parent publishes the (large, read-only)
# sieve and split-prime table here right before creating the pool.

_CTX: dict = {}


def _build_context(ring: Ring, bound: int) -> None:
    spf = smallest_prime_factor_sieve(bound)
    split: dict[int, QuadInt] = {}
    for a, b, n in iter_sector(ring, bound):
        if n >= 2 and spf[n] == n and not ring.is_ramified(n):
            if n not in split:
                split[n] = QuadInt(ring, a, b)
    _CTX.clear()
    _CTX.update(ring=ring, bound=bound, spf=spf, split=split)


def _chunks(ring: Ring, bound: int) -> list[tuple[int, int]]:
    """Contiguous a-intervals of roughly equal point counts."""
    rng = a_range(ring, bound)
    chunks = []
    start = None
    points = 0
    for a in rng:
        if start is None:
            start = a
        if ring is Ring.GAUSSIAN:
            points += isqrt(max(bound - a * a, 0)) + 1
        else:
            points += min(a, (isqrt(max(4 * bound - 3 * a * a, 0)) + a) // 2 + 1)
        if points >= _CHUNK_TARGET_POINTS:
            chunks.append((start, a + 1))
            start, points = None, 0
    if start is not None:
        chunks.append((start, rng.stop))
    return chunks


def _factor_point(ring: Ring, a: int, b: int, n: int) -> Factorization:
    return factor(
        QuadInt(ring, a, b),
        norm_factors=factor_with_sieve(n, _CTX["spf"]),
        split_lookup=_CTX["split"],
    )


def _oracle_chunk(chunk: tuple[int, int]) -> tuple[int, list[tuple[int, int]]]:
    ring, bound = _CTX["ring"], _CTX["bound"]
    checked = 0
    mismatches: list[tuple[int, int]] = []
    for a in range(*chunk):
        for b, n in strip_points(ring, bound, a):
            fac = _factor_point(ring, a, b, n)
            if sigma_from_factorization(fac) != divisor_sum_from_factorization(fac):
                mismatches.append((a, b))
            checked += 1
    return checked, mismatches


def _classify_chunk(args) -> tuple[int, int, list[dict]]:
    chunk, parity, prune = args
    ring, bound = _CTX["ring"], _CTX["bound"]
    char = ring.residue_char
    allowed = NORM_PERFECT_K_RESIDUES[ring]
    minimal = ring.minimal_prime
    scanned = 0
    pruned = 0
    findings: list[dict] = []
    for a in range(*chunk):
        for b, n in strip_points(ring, bound, a):
            even = (a + b) % char == 0
            if parity == "odd" and even:
                continue
            if parity == "even" and not even:
                continue
            scanned += 1
            if prune and even:
                # multiplicity of the minimal prime in x equals the
                # multiplicity of the ramified rational prime in the norm
                v = 0
                nn = n
                while nn % char == 0:
                    nn //= char
                    v += 1
                if (v + 1) % 12 not in allowed:
                    pruned += 1
                    continue
            x = QuadInt(ring, a, b)
            fac = _factor_point(ring, a, b, n)
            sig = sigma_from_factorization(fac)
            ns = sig.norm()
            if ns < char * n:
                continue
            cls = classify(x, factorization=fac)
            finding = {"classification": cls}
            if cls.status is Status.NORM_PERFECT:
                unit = None
                base = minimal * x
                for u in ring.units:
                    if u * base == sig:
                        unit = u
                        break
                finding["perfect_unit"] = unit
            findings.append(finding)
    return scanned, pruned, findings


def _prime_chunk(chunk: tuple[int, int]) -> list[tuple[int, int]]:
    ring, bound = _CTX["ring"], _CTX["bound"]
    spf = _CTX["spf"]
    char = ring.residue_char
    hits: list[tuple[int, int]] = []
    for a in range(*chunk):
        for b, n in strip_points(ring, bound, a):
            if n < 2 or spf[n] != n:
                continue
            # sigma(psi) = 1 + psi for a canonical prime psi
            if ring is Ring.GAUSSIAN:
                sn = (a + 1) * (a + 1) + b * b
            else:
                sn = (a + 1) * (a + 1) - (a + 1) * b + b * b
            if sn == char * n:
                hits.append((a, b))
    return hits


def _run_chunks(fn, work, jobs):
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs <= 1 or len(work) <= 1:
        for item in work:
            yield fn(item)
        return
    with get_context("fork").Pool(jobs) as pool:
        yield from pool.imap(fn, work)


# -- public sweeps ---------------------------------------------------------------


def oracle_equivalence_sweep(
    ring: Ring, bound: int, jobs: int | None = None
) -> tuple[int, list[QuadInt]]:
    """Compare sigma with the divisor-enumeration oracle on every class
    representative of norm <= bound; returns (checked, mismatches)."""
    _build_context(ring, bound)
    checked = 0
    mismatches: list[QuadInt] = []
    for c, mm in _run_chunks(_oracle_chunk, _chunks(ring, bound), jobs):
        checked += c
        mismatches.extend(QuadInt(ring, a, b) for a, b in mm)
    return checked, mismatches


@dataclass(frozen=True)
class SearchReport:
    ring: Ring
    norm_bound: int
    parity: str
    scanned: int
    pruned: int
    findings: tuple[dict, ...]
    wall_time: float

    def to_json(self) -> dict:
        return {
            "ring": self.ring.value,
            "norm_bound": self.norm_bound,
            "parity": self.parity,
            "scanned": self.scanned,
            "pruned": self.pruned,
            "findings": [
                {
                    **f["classification"].to_json(),
                    "perfect_unit": (
                        f["perfect_unit"].to_json()
                        if f.get("perfect_unit") is not None
                        else None
                    ),
                }
                for f in self.findings
            ],
            "wall_time": self.wall_time,
        }

    def csv_rows(self) -> list[list[str]]:
        rows = [
            [
                "element",
                "norm",
                "status",
                "even",
                "perfect",
                "sigma_norm",
                "perfect_unit",
            ]
        ]
        for f in self.findings:
            cls = f["classification"]
            unit = f.get("perfect_unit")
            rows.append(
                [
                    str(cls.element),
                    str(cls.norm),
                    cls.status.value,
                    str(cls.even).lower(),
                    str(cls.perfect).lower(),
                    str(cls.sigma_norm),
                    str(unit) if unit is not None else "",
                ]
            )
        return rows


def _flush_checkpoint(path: str, state: dict) -> None:
    tmp = path + ".tmp"
    payload = dict(state)
    payload["findings"] = [
        {
            **f["classification"].to_json(),
            "perfect_unit": (
                f["perfect_unit"].to_json()
                if f.get("perfect_unit") is not None
                else None
            ),
        }
        for f in payload["findings"]
    ]
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True)
    os.replace(tmp, path)


def sector_scan(
    ring: Ring,
    norm_bound: int,
    parity: str = "all",
    jobs: int | None = None,
    prune: bool = False,
    checkpoint_path: str | None = None,
    resume: bool = False,
    max_bound: int = DEFAULT_SCAN_LIMIT,
    progress_cb=None,
) -> SearchReport:
    """Classify one representative per associate class up to the norm bound.

    Findings list every non-deficient class.  With prune=True, even classes
    whose minimal-prime exponent cannot belong to a norm-perfect integer
    (k mod 12 outside the admissible residues) are skipped; the finding
    list then remains complete for norm-perfect entries only.
    """
    if parity not in ("all", "odd", "even"):
        raise ValueError(f"unknown parity filter {parity!r}")
    if norm_bound > max_bound:
        raise ValueError(f"norm bound {norm_bound} exceeds the limit {max_bound}")
    t0 = time.monotonic()
    _build_context(ring, norm_bound)
    chunks = _chunks(ring, norm_bound)
    header = {
        "ring": ring.value,
        "norm_bound": norm_bound,
        "parity": parity,
        "prune": prune,
        "chunk_count": len(chunks),
    }
    start_chunk = 0
    scanned = pruned = 0
    findings: list[dict] = []
    if checkpoint_path and resume and os.path.exists(checkpoint_path):
        with open(checkpoint_path, "r", encoding="utf-8") as fh:
            saved = json.load(fh)
        if {k: saved.get(k) for k in header} == header:
            start_chunk = saved["done_chunks"]
            scanned = saved["scanned"]
            pruned = saved["pruned"]
            for f in saved["findings"]:
                element = QuadInt.from_json(f["element"])
                cls = classify(element)
                if cls.to_json() != {
                    k: f[k] for k in cls.to_json()
                }:
                    raise ScanInvariantError(
                        f"checkpointed finding {element} fails replay"
                    )
                entry = {"classification": cls}
                if f.get("perfect_unit") is not None:
                    entry["perfect_unit"] = QuadInt.from_json(f["perfect_unit"])
                elif cls.status is Status.NORM_PERFECT:
                    entry["perfect_unit"] = None
                findings.append(entry)

    interrupted = {"flag": False}

    def _on_term(signum, frame):
        interrupted["flag"] = True

    old_handler = None
    try:
        old_handler = signal.signal(signal.SIGTERM, _on_term)
    except ValueError:
        pass  # not the main thread

    state = dict(header, done_chunks=start_chunk, scanned=scanned, pruned=pruned)
    last_flush = scanned
    try:
        work = [(c, parity, prune) for c in chunks[start_chunk:]]
        for i, (s, p, fs) in enumerate(_run_chunks(_classify_chunk, work, jobs)):
            scanned += s
            pruned += p
            findings.extend(fs)
            state.update(
                done_chunks=start_chunk + i + 1,
                scanned=scanned,
                pruned=pruned,
                findings=findings,
            )
            if progress_cb is not None:
                progress_cb(scanned)
            if checkpoint_path and scanned - last_flush >= CHECKPOINT_EVERY:
                _flush_checkpoint(checkpoint_path, state)
                last_flush = scanned
            if interrupted["flag"]:
                break
    finally:
        if checkpoint_path:
            state["findings"] = findings
            _flush_checkpoint(checkpoint_path, state)
        if old_handler is not None:
            signal.signal(signal.SIGTERM, old_handler)
    if interrupted["flag"]:
        raise KeyboardInterrupt("scan interrupted by SIGTERM; checkpoint flushed")

    findings.sort(
        key=lambda f: (
            f["classification"].norm,
            f["classification"].element.a,
            f["classification"].element.b,
        )
    )
    return SearchReport(
        ring=ring,
        norm_bound=norm_bound,
        parity=parity,
        scanned=scanned,
        pruned=pruned,
        findings=tuple(findings),
        wall_time=time.monotonic() - t0,
    )


def find_normperfect_primes(
    ring: Ring, norm_bound: int, jobs: int | None = None, max_bound: int = 10**6
) -> list[QuadInt]:
    """All sector-canonical primes psi with norm <= bound and
    norm(sigma(psi)) = norm(minimal) * norm(psi)."""
    if norm_bound > max_bound:
        raise ValueError(f"norm bound {norm_bound} exceeds the limit {max_bound}")
    _build_context(ring, norm_bound)
    char = ring.residue_char
    hits: list[QuadInt] = []
    for chunk_hits in _run_chunks(_prime_chunk, _chunks(ring, norm_bound), jobs):
        hits.extend(QuadInt(ring, a, b) for a, b in chunk_hits)
    # inert rational primes sit at (q, 0) with norm q**2
    for q in range(2, isqrt(norm_bound) + 1):
        if ring.is_inert(q) and is_rational_prime(q):
            psi = QuadInt(ring, q, 0)
            if (sigma_of_prime := psi + 1).norm() == char * psi.norm():
                hits.append(psi)
    hits.sort(key=lambda x: (x.norm(), x.a, x.b))
    return hits


# -- structural validators ---------------------------------------------------------


@dataclass(frozen=True)
class OddFormReport:
    element: QuadInt
    unit: QuadInt
    special_prime: QuadInt | None
    special_exponent: int | None
    special_residue: int | None
    p1: tuple[tuple[QuadInt, int, int], ...]
    p2: tuple[tuple[QuadInt, int, int], ...]
    conforms: bool
    violated_condition: str | None

    def to_json(self) -> dict:
        def entries(rows):
            return [
                {"prime": p.to_json(), "exp": e, "residue": r} for p, e, r in rows
            ]

        return {
            "element": self.element.to_json(),
            "unit": self.unit.to_json(),
            "special_prime": (
                self.special_prime.to_json() if self.special_prime else None
            ),
            "special_exponent": self.special_exponent,
            "special_residue": self.special_residue,
            "p1": entries(self.p1),
            "p2": entries(self.p2),
            "conforms": self.conforms,
            "violated_condition": self.violated_condition,
        }


def _special_condition(residue: int, exponent: int) -> bool:
    """Exponent condition making 3 divide norm(sigma(psi**e))."""
    if residue == 1:
        return exponent % 3 == 2
    return exponent % 2 == 1


def validate_odd_form(
    x: QuadInt, factorization: Factorization | None = None
) -> OddFormReport:
    """Check the odd norm-perfect form: exactly one prime power may carry the
    divisibility condition; other residue-1 exponents avoid 2 mod 3 and other
    residue-2 exponents are even."""
    if x.ring is not Ring.EISENSTEIN:
        raise ValueError("odd-form validation applies to the Eisenstein ring")
    if x.is_even():
        raise ValueError("element must be odd")
    fac = factorization if factorization is not None else factor(x)
    rows = [(p, e, p.residue_mod_minimal()) for p, e in fac.factors]
    candidates = [row for row in rows if _special_condition(row[2], row[1])]
    if len(candidates) == 1:
        special = candidates[0]
        conforms, violated = True, None
    else:
        special = None
        conforms = False
        if not candidates:
            violated = "no prime power satisfies the special divisibility condition"
        else:
            violated = (
                "multiple prime powers satisfy the special divisibility condition: "
                + ", ".join(str(row[0]) for row in candidates)
            )
    rest = [row for row in rows if row is not special]
    return OddFormReport(
        element=x,
        unit=fac.unit,
        special_prime=special[0] if special else None,
        special_exponent=special[1] if special else None,
        special_residue=special[2] if special else None,
        p1=tuple(row for row in rest if row[2] == 1),
        p2=tuple(row for row in rest if row[2] == 2),
        conforms=conforms,
        violated_condition=violated,
    )


def validate_ward_form(x: QuadInt) -> bool:
    """Odd norm-perfect Gaussian integers have the shape psi**k * rho**2 with
    k odd: exactly one prime exponent is odd."""
    if x.ring is not Ring.GAUSSIAN:
        raise ValueError("this form applies to the Gaussian ring")
    if x.is_even():
        raise ValueError("element must be odd")
    odd_exponents = sum(1 for _, e in factor(x).factors if e % 2 == 1)
    return odd_exponents == 1


def validate_parker_form(x: QuadInt) -> bool:
    """The conjectured odd form psi**k * gamma**3 with k = 2 (mod 3): one
    exponent is 2 mod 3 and every other is 0 mod 3."""
    if x.ring is not Ring.EISENSTEIN:
        raise ValueError("this form applies to the Eisenstein ring")
    if x.is_even():
        raise ValueError("element must be odd")
    exponents = [e % 3 for _, e in factor(x).factors]
    return exponents.count(2) == 1 and all(r in (0, 2) for r in exponents)


def no_normperfect_prime_equation(bound: int) -> list[tuple[int, int]]:
    """Integer solutions of 3(a^2-ab+b^2) = (a+1)^2 - (a+1)b + b^2 in the box
    |a|, |b| <= bound.

    The equation rewrites to 2a^2 - 2a(b+1) + (2b^2+b-1) = 0, a quadratic in
    a with discriminant 12(1-b^2), so each b admits a direct exact solve;
    every candidate is re-checked against the displayed equation.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    solutions = set()
    for b in range(-bound, bound + 1):
        disc = 3 * (1 - b * b)
        if disc < 0:
            continue
        s = isqrt(disc)
        if s * s != disc:
            continue
        for root in {(b + 1 + s), (b + 1 - s)}:
            if root % 2:
                continue
            a = root // 2
            if abs(a) > bound:
                continue
            if 3 * (a * a - a * b + b * b) == (a + 1) ** 2 - (a + 1) * b + b * b:
                solutions.add((a, b))
    return sorted(solutions)


def check_rational_perfect_remark(k: int) -> bool:
    """Classify N = 2^(k-1) (2^k - 1) inside the Eisenstein ring; True when N
    is not norm-perfect.  When 2^k - 1 is prime it must split into the two
    conjugate primes with equal exponent 1, and that is asserted."""
    if k <= 2:
        raise ValueError("k must be an odd rational prime > 2")
    m = 2**k - 1
    x = QuadInt(Ring.EISENSTEIN, 2 ** (k - 1) * m, 0)
    fac = factor(x)
    if is_rational_prime(m):
        above = [(p, e) for p, e in fac.factors if p.norm() == m]
        conjugates = (
            len(above) == 2
            and above[0][1] == above[1][1] == 1
            and above[0][0].conjugate().sector_canonical()[1] == above[1][0]
        )
        if not conjugates:
            raise ScanInvariantError(
                f"2^{k}-1 did not split into conjugate primes of exponent 1"
            )
    cls = classify(x, factorization=fac)
    return cls.status is not Status.NORM_PERFECT
