import json
import random

import pytest

from cycloperfect.divisors import Status, classify
from cycloperfect.factorization import factor
from cycloperfect.rings import EISENSTEIN, GAUSSIAN, QuadInt, Ring
from cycloperfect.search import (
    check_rational_perfect_remark,
    count_lattice_points,
    count_sector_classes,
    find_normperfect_primes,
    iter_sector,
    no_normperfect_prime_equation,
    sector_scan,
    validate_odd_form,
    validate_parker_form,
    validate_ward_form,
)
from cycloperfect.verify import sector_primes


def e(a, b=0):
    return QuadInt(EISENSTEIN, a, b)


def g(a, b=0):
    return QuadInt(GAUSSIAN, a, b)


class TestEnumeration:
    def test_every_class_once(self):
        for ring in Ring:
            seen = set()
            for a, b, n in iter_sector(ring, 500):
                x = QuadInt(ring, a, b)
                assert x.in_sector()
                assert x.norm() == n <= 500
                canon = x.sector_canonical()[1]
                assert canon == x
                assert x not in seen
                seen.add(x)

    def test_completeness_against_lattice_count(self):
        for ring in Ring:
            for bound in (50, 400, 2_000):
                classes = count_sector_classes(ring, bound)
                points = count_lattice_points(ring, bound)
                assert points == classes * ring.unit_count

    def test_expected_counts(self):
        # frozen from the lattice-count cross-check: 31416 / 4 and 36294 / 6
        assert count_sector_classes(GAUSSIAN, 10_000) == 7854
        assert count_sector_classes(EISENSTEIN, 10_000) == 6049


class TestSectorScan:
    def test_gaussian_odd_contains_2_plus_i(self):
        report = sector_scan(GAUSSIAN, 30, parity="odd", jobs=1)
        norm_perfect = [
            f["classification"].element
            for f in report.findings
            if f["classification"].status is Status.NORM_PERFECT
        ]
        assert g(2, 1) in norm_perfect

    def test_units_only_scan(self):
        report = sector_scan(EISENSTEIN, 1, parity="all", jobs=1)
        assert report.scanned == 1  # the class of 1
        assert not report.findings

    def test_bound_guard(self):
        with pytest.raises(ValueError):
            sector_scan(EISENSTEIN, 10**7, jobs=1)

    def test_parity_filters(self):
        all_r = sector_scan(EISENSTEIN, 300, parity="all", jobs=1)
        odd_r = sector_scan(EISENSTEIN, 300, parity="odd", jobs=1)
        even_r = sector_scan(EISENSTEIN, 300, parity="even", jobs=1)
        assert odd_r.scanned + even_r.scanned == all_r.scanned
        assert all(f["classification"].element.is_even() for f in even_r.findings)

    def test_findings_reclassify_identically(self):
        report = sector_scan(GAUSSIAN, 2_000, parity="all", jobs=1)
        assert report.findings
        for f in report.findings:
            cls = f["classification"]
            again = classify(cls.element)
            assert again == cls

    def test_parallel_matches_serial(self):
        serial = sector_scan(EISENSTEIN, 3_000, jobs=1)
        parallel = sector_scan(EISENSTEIN, 3_000, jobs=2)
        assert serial.scanned == parallel.scanned
        assert serial.findings == parallel.findings

    def test_prune_no_norm_perfect_loss(self):
        plain = sector_scan(EISENSTEIN, 20_000, parity="even", jobs=2, prune=False)
        pruned = sector_scan(EISENSTEIN, 20_000, parity="even", jobs=2, prune=True)
        assert pruned.pruned > 0

        def norm_perfect(report):
            return [
                f["classification"].element
                for f in report.findings
                if f["classification"].status is Status.NORM_PERFECT
            ]

        assert norm_perfect(plain) == norm_perfect(pruned)

    def test_checkpoint_resume(self, tmp_path):
        path = str(tmp_path / "scan.json")
        full = sector_scan(EISENSTEIN, 5_000, jobs=1)
        partial = sector_scan(EISENSTEIN, 5_000, jobs=1, checkpoint_path=path)
        saved = json.load(open(path))
        assert saved["scanned"] == full.scanned
        # resuming from a completed checkpoint re-does nothing
        resumed = sector_scan(
            EISENSTEIN, 5_000, jobs=1, checkpoint_path=path, resume=True
        )
        assert resumed.scanned == full.scanned
        assert resumed.findings == full.findings == partial.findings

    def test_report_serialization(self):
        report = sector_scan(GAUSSIAN, 100, jobs=1)
        obj = report.to_json()
        assert obj["ring"] == "gaussian"
        assert isinstance(obj["findings"], list)
        rows = report.csv_rows()
        assert rows[0][0] == "element"
        assert len(rows) == len(report.findings) + 1


class TestNormPerfectPrimes:
    def test_gaussian_is_exactly_2_plus_i(self):
        assert find_normperfect_primes(GAUSSIAN, 50_000, jobs=1) == [g(2, 1)]

    def test_eisenstein_empty(self):
        assert find_normperfect_primes(EISENSTEIN, 50_000, jobs=1) == []

    def test_small_gaussian_bound(self):
        assert find_normperfect_primes(GAUSSIAN, 4, jobs=1) == []

    def test_prime_enumeration_matches_sector_primes(self):
        # cross-check the sweep's prime detection against the slow path
        for ring in Ring:
            slow = {
                psi
                for psi in sector_primes(ring, 2_000)
                if (1 + psi).norm() == ring.residue_char * psi.norm()
            }
            fast = set(find_normperfect_primes(ring, 2_000, jobs=1))
            assert fast == slow


class TestOddFormValidators:
    def test_square_of_residue1_prime(self):
        report = validate_odd_form(e(3, 1) ** 2)
        assert report.conforms
        assert report.special_prime == e(3, 1)
        assert report.special_exponent == 2
        assert report.special_residue == 1
        assert report.p1 == () and report.p2 == ()

    def test_two_times_residue1_prime(self):
        report = validate_odd_form(e(2) * e(3, 1))
        assert report.conforms
        assert report.special_prime == e(2)
        assert report.p1 == ((e(3, 1), 1, 1),)

    def test_two_candidates_fail(self):
        report = validate_odd_form(e(2) * e(5))
        assert not report.conforms
        assert "multiple" in report.violated_condition

    def test_no_candidate_fails(self):
        report = validate_odd_form(e(3, 1))  # exponent 1 not 2 mod 3
        assert not report.conforms
        assert "no prime power" in report.violated_condition

    def test_even_rejected(self):
        with pytest.raises(ValueError):
            validate_odd_form(e(3))
        with pytest.raises(ValueError):
            validate_ward_form(g(1, 1))
        with pytest.raises(ValueError):
            validate_parker_form(e(3))

    def test_wrong_ring_rejected(self):
        with pytest.raises(ValueError):
            validate_odd_form(g(3, 2))
        with pytest.raises(ValueError):
            validate_ward_form(e(2))

    def test_ward_examples(self):
        assert validate_ward_form(g(2, 1))
        assert validate_ward_form(g(2, 1) ** 3 * g(3, 2) ** 2)
        assert not validate_ward_form(g(2, 1) * g(3, 2))

    def test_parker_examples(self):
        psi, phi = e(3, 1), e(4, 1)
        assert validate_parker_form(psi**2)
        assert validate_parker_form(psi**2 * phi**3)
        assert not validate_parker_form(psi**2 * phi)

    def test_parker_implies_odd_form_in_p1_subcase(self):
        # The conjectured form is the residue-1-special subcase of the odd
        # form, so instances are generated there: special prime of residue 1
        # with exponent 2 mod 3, cube part keeping residue-2 exponents even.
        rng = random.Random(71)
        pool = [p for p in sector_primes(EISENSTEIN, 600) if not p.is_even()]
        p1 = [p for p in pool if p.residue_mod_minimal() == 1]
        p2 = [p for p in pool if p.residue_mod_minimal() == 2]
        for _ in range(300):
            x = rng.choice(p1) ** rng.choice([2, 5])
            for _ in range(rng.randrange(2)):
                x = x * rng.choice(p1) ** rng.choice([3, 6])
            for _ in range(rng.randrange(2)):
                x = x * rng.choice(p2) ** 6
            if validate_parker_form(x):
                assert validate_odd_form(x).conforms

    def test_parker_does_not_imply_odd_form_outside_p1(self):
        # 5 is inert with residue 2; exponent 2 fits the conjectured shape
        # but a residue-2 special prime needs an odd exponent
        assert validate_parker_form(e(25))
        assert not validate_odd_form(e(25)).conforms

    def test_corollary_residue_class(self):
        # conforming products have residue 1 exactly when the special prime
        # lies in the residue-1 class
        rng = random.Random(73)
        pool = [p for p in sector_primes(EISENSTEIN, 1_500) if not p.is_even()]
        p1 = [p for p in pool if p.residue_mod_minimal() == 1]
        p2 = [p for p in pool if p.residue_mod_minimal() == 2]
        checked = 0
        for _ in range(2_000):
            if rng.random() < 0.5:
                x = rng.choice(p1) ** rng.choice([2, 5])
                want = 1
            else:
                x = rng.choice(p2) ** rng.choice([1, 3])
                want = 2
            for _ in range(rng.randrange(3)):
                y = rng.choice(p1) ** rng.choice([1, 3]) if rng.random() < 0.5 else rng.choice(p2) ** 2
                if x.norm() * y.norm() > 10**10:
                    continue
                x = x * y
            report = validate_odd_form(x)
            if not report.conforms:
                continue  # random collisions can merge exponents
            checked += 1
            assert x.residue_mod_minimal() == want
        assert checked >= 1_000


class TestEquation:
    def test_solution_set(self):
        assert no_normperfect_prime_equation(1_000) == [(0, -1), (1, 1)]

    def test_bound_one(self):
        assert no_normperfect_prime_equation(1) == [(0, -1), (1, 1)]

    def test_solutions_satisfy_equation(self):
        for a, b in no_normperfect_prime_equation(100):
            assert 3 * (a * a - a * b + b * b) == (a + 1) ** 2 - (a + 1) * b + b * b

    def test_brute_force_cross_check(self):
        brute = sorted(
            (a, b)
            for a in range(-60, 61)
            for b in range(-60, 61)
            if 3 * (a * a - a * b + b * b) == (a + 1) ** 2 - (a + 1) * b + b * b
        )
        assert no_normperfect_prime_equation(60) == brute

    def test_bad_bound(self):
        with pytest.raises(ValueError):
            no_normperfect_prime_equation(0)


class TestRationalPerfectRemark:
    @pytest.mark.parametrize("k", [3, 5, 7, 13])
    def test_perfect_numbers_not_norm_perfect(self, k):
        assert check_rational_perfect_remark(k)

    def test_split_structure(self):
        # for k = 5, 2^5 - 1 = 31 must split with equal unit exponents
        fac = factor(e(2**4 * 31))
        above = [(p, k) for p, k in fac.factors if p.norm() == 31]
        assert len(above) == 2
        assert above[0][1] == above[1][1] == 1
        assert above[0][0].conjugate().sector_canonical()[1] == above[1][0]

    def test_small_k_rejected(self):
        with pytest.raises(ValueError):
            check_rational_perfect_remark(2)
