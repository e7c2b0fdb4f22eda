"""Gcd identity, Bezout machinery and generator certificates."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cybordism.generators import (
    certificate,
    extended_gcd,
    low_dimension_table,
    reverify_certificate,
    s_number_gcd,
    verify_gcd_identity,
)
from cybordism.numthy import su_generator_s_number
from cybordism.partitions import (
    Partition,
    generator_partitions,
    weighted_multinomial,
)


@given(st.integers(min_value=1, max_value=10**12), st.integers(min_value=1, max_value=10**12))
def test_extended_gcd_is_a_bezout_identity(a, b):
    d, x, y = extended_gcd(a, b)
    assert d == math.gcd(a, b)
    assert x * a + y * b == d


def test_extended_gcd_handles_zero_and_negatives():
    assert extended_gcd(0, 5) == (5, 0, 1)
    assert extended_gcd(5, 0) == (5, 1, 0)
    d, x, y = extended_gcd(-12, 18)
    assert d == 6 and x * -12 + y * 18 == 6


def test_gcd_examples():
    assert s_number_gcd(3) == 48
    assert s_number_gcd(4) == 6
    assert s_number_gcd(5) == 20


def test_gcd_matches_plain_fold():
    for n in range(3, 13):
        values = [weighted_multinomial(s) for s in generator_partitions(n)]
        expected = 0
        for value in values:
            expected = math.gcd(expected, value)
        assert s_number_gcd(n) == expected


def test_gcd_values_from_scan():
    # frozen from the weighted multinomials of the five capped partitions of 5
    values = sorted(weighted_multinomial(s) for s in generator_partitions(5))
    assert values == [3840, 4320, 4860, 5120, 5760]
    assert math.gcd(*values) == 20


def test_gcd_identity_report():
    report = verify_gcd_identity(5)
    assert report.passed
    assert [row.n for row in report.rows] == [3, 4, 5]
    assert report.rows[0].tag is None
    assert report.rows[1].tag.label == "II"
    assert report.rows[2].tag.label == "III"

    single = verify_gcd_identity(3)
    assert single.passed and single.rows[0].gcd_value == 48

    wide = verify_gcd_identity(30)
    assert wide.passed
    counts = wide.case_counts()
    assert sum(counts.values()) == 28
    assert counts["base"] == 1


def test_gcd_identity_rejects_small_bound():
    with pytest.raises(ValueError):
        verify_gcd_identity(2)


def test_certificate_golden_pairs():
    cert3 = certificate(3)
    assert cert3.entries == ((Partition([1, 1, 1]), -1),)
    assert cert3.achieved == 48

    cert4 = certificate(4)
    assert cert4.as_mapping() == {Partition([2, 2]): 15, Partition([1, 1, 1, 1]): -19}
    assert [s.label for s, _ in cert4.entries] == ["2,2", "1,1,1,1"]
    assert cert4.achieved == 6

    cert5 = certificate(5)
    assert cert5.as_mapping() == {Partition([1, 1, 3]): 56, Partition([1, 2, 2]): -59}
    assert [s.label for s, _ in cert5.entries] == ["1,1,3", "1,2,2"]
    assert cert5.achieved == 20


def test_certificate_rejects_small_n():
    with pytest.raises(ValueError):
        certificate(2)


def test_certificates_achieve_target_and_reverify():
    for n in range(3, 31):
        cert = certificate(n)
        target = su_generator_s_number(n)
        assert cert.achieved == target
        # combinatorial route
        total = sum(
            -coeff * weighted_multinomial(sigma) for sigma, coeff in cert.entries
        )
        assert total == target
        # independent cohomology route
        assert reverify_certificate(cert) == target


def test_certificate_entries_are_clean():
    for n in range(3, 31):
        cert = certificate(n)
        parts = [sigma for sigma, _ in cert.entries]
        coeffs = [coeff for _, coeff in cert.entries]
        assert len(set(parts)) == len(parts)
        assert all(coeff != 0 for coeff in coeffs)
        assert all(sigma.n == n and max(sigma) <= n - 2 for sigma in parts)
        if len(coeffs) > 1:
            assert any(c > 0 for c in coeffs) and any(c < 0 for c in coeffs)


def test_certificates_are_deterministic():
    for n in (4, 7, 11, 19):
        assert certificate(n) == certificate(n)


def test_low_dimension_table():
    table = low_dimension_table()
    assert table["targets"] == {2: 48, 3: 6, 4: 20}
    certs = table["certificates"]
    assert certs[3].achieved == 48
    assert certs[4].achieved == 6
    assert certs[5].achieved == 20
    assert table["dimension3_combination_euler"] == 2
    assert table["dimension3_single_manifold_euler"] == (2, -2)
