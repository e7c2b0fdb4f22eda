"""Reflexive polytopes and the Hodge-number record pipeline."""

import io
from pathlib import Path

import pytest

from cybordism.partitions import Partition, generator_partitions
from cybordism.toricdata import (
    KSParseError,
    KSRecord,
    ReflexivePolytope,
    filter_hodge_difference,
    format_ks,
    h11_range_report,
    parse_ks,
    partition_polytope,
    polar_dual,
    product,
    standard_simplex,
    verify_reflexive,
)

DATA = Path(__file__).parent / "data"


def read_lines(name: str) -> list[str]:
    return (DATA / name).read_text().splitlines()


# --- polytopes ---------------------------------------------------------------


def test_standard_simplex_d1():
    seg = standard_simplex(1)
    assert set(seg.vertices) == {(-1,), (1,)}
    assert set(seg.facets) == {(1,), (-1,)}
    assert verify_reflexive(seg).ok


def test_standard_simplex_d2():
    tri = standard_simplex(2)
    assert set(tri.vertices) == {(-1, -1), (2, -1), (-1, 2)}
    assert len(tri.facets) == 3
    assert verify_reflexive(tri).ok


def test_standard_simplex_d3():
    tet = standard_simplex(3)
    assert tet.vertex_count == 4
    assert tet.facet_count == 4
    assert verify_reflexive(tet).ok


def test_standard_simplex_rejects_nonpositive():
    with pytest.raises(ValueError):
        standard_simplex(0)


def test_square_and_cube_products():
    seg = standard_simplex(1)
    square = product(seg, seg)
    assert set(square.vertices) == {(1, 1), (1, -1), (-1, 1), (-1, -1)}
    assert square.facet_count == 4
    assert verify_reflexive(square).ok

    cube = product(square, seg)
    assert cube.vertex_count == 8
    assert cube.facet_count == 6
    assert set(cube.vertices) == {(a, b, c) for a in (-1, 1) for b in (-1, 1) for c in (-1, 1)}
    assert verify_reflexive(cube).ok


def test_triangle_times_segment():
    prism = product(standard_simplex(2), standard_simplex(1))
    assert prism.vertex_count == 6
    assert prism.facet_count == 5
    assert verify_reflexive(prism).ok


def test_partition_polytopes_reflexive_with_counts():
    for n in range(3, 9):
        for sigma in generator_partitions(n):
            poly = partition_polytope(sigma)
            report = verify_reflexive(poly)
            assert report.ok, (sigma, report.diagnostics)
            expected_vertices = 1
            for part in sigma:
                expected_vertices *= part + 1
            assert poly.vertex_count == expected_vertices
            assert poly.facet_count == sum(part + 1 for part in sigma)
            assert poly.dim == n


def test_polar_dual_round_trip():
    for build in (
        lambda: standard_simplex(1),
        lambda: standard_simplex(2),
        lambda: standard_simplex(3),
        lambda: standard_simplex(4),
        lambda: partition_polytope(Partition([2, 2])),
    ):
        poly = build()
        dual = polar_dual(poly)
        assert verify_reflexive(dual).ok
        again = polar_dual(dual)
        assert set(again.facets) == set(poly.facets)
        assert set(again.vertices) == set(poly.vertices)


def test_non_reflexive_segment_is_rejected():
    # [-1, 2]: the facet at x = 2 sits at lattice distance 2, so its
    # normal cannot be integral in the <a, x> >= -1 normalisation; the
    # nearest integer attempt cuts the vertex off.
    segment = ReflexivePolytope(dim=1, vertices=((-1,), (2,)), facets=((1,), (-1,)))
    report = verify_reflexive(segment)
    assert not report.ok
    assert any("cuts off" in d for d in report.diagnostics)


def test_non_tight_facet_is_rejected():
    shifted = ReflexivePolytope(dim=1, vertices=((0,), (1,)), facets=((1,), (-1,)))
    report = verify_reflexive(shifted)
    assert not report.ok
    assert any("lattice distance" in d for d in report.diagnostics)


def test_malformed_polytope_data_diagnosed_not_raised():
    bad_shape = ReflexivePolytope(dim=2, vertices=((1,),), facets=((1, 0),))
    report = verify_reflexive(bad_shape)
    assert not report.ok
    assert any("coordinates" in d for d in report.diagnostics)

    zero_normal = ReflexivePolytope(
        dim=1, vertices=((-1,), (1,)), facets=((0,), (1,), (-1,))
    )
    report = verify_reflexive(zero_normal)
    assert not report.ok
    assert any("zero facet normal" in d for d in report.diagnostics)


# --- record parsing ----------------------------------------------------------


def test_parse_sample_file():
    items = list(parse_ks(read_lines("ks_sample.txt")))
    records = [r for r in items if isinstance(r, KSRecord)]
    errors = [e for e in items if isinstance(e, KSParseError)]
    assert errors == []
    assert len(records) == 12
    first = records[0]
    assert first.ambient_dim == 4
    assert first.vertex_count == 5
    assert first.h11 == 1 and first.h21 == 101 and first.chi == -200
    assert first.m_points == (126, 5) and first.n_points == (6, 5)
    assert first.line == 1
    assert len(first.matrix) == 4
    assert all(r.consistent for r in records)


def test_parse_is_streaming():
    stream = parse_ks(iter(read_lines("ks_sample.txt")))
    assert next(stream).h11 == 1  # consumable lazily


def test_chi_consistency_examples():
    good = next(iter(parse_ks(["4 5 H:5,45 [-80]", "1 1 1 1 1"] + ["1 1 1 1 1"] * 3)))
    assert isinstance(good, KSRecord)
    assert good.consistent and good.chi == -80

    absent = next(iter(parse_ks(["4 5 H:1,1", *["0 0 0 0 0"] * 4])))
    assert isinstance(absent, KSRecord)
    assert absent.chi is None and absent.consistent

    flagged = next(iter(parse_ks(["4 5 H:5,45 [-79]", *["0 0 0 0 0"] * 4])))
    assert isinstance(flagged, KSRecord)
    assert not flagged.consistent

    strict = next(iter(parse_ks(["4 5 H:5,45 [-79]", *["0 0 0 0 0"] * 4], strict=True)))
    assert isinstance(strict, KSParseError)
    assert "chi" in strict.message and strict.line == 1


def test_malformed_file_errors_and_recovery():
    items = list(parse_ks(read_lines("ks_malformed.txt")))
    records = [r for r in items if isinstance(r, KSRecord)]
    errors = [e for e in items if isinstance(e, KSParseError)]
    # the two structurally good records survive (one of them chi-inconsistent)
    assert len(records) == 2
    assert {r.line for r in records} == {11, 17}
    assert sum(1 for r in records if not r.consistent) == 1
    # missing H field reported on line 1
    assert any(e.line == 1 and "H:" in e.message for e in errors)
    # bad matrix row under the header at line 6 names the offending line
    assert any(e.line == 6 and "line 8" in e.message for e in errors)
    # noise line and h11 = 0 header both reported
    assert any("noise" in e.message for e in errors)
    assert any("h11" in e.message for e in errors)


def test_truncated_matrix_at_eof():
    items = list(parse_ks(["4 5 H:2,2", "1 1 1 1 1"]))
    assert len(items) == 1
    assert isinstance(items[0], KSParseError)
    assert "ended" in items[0].message


def test_round_trip_identity():
    records = [r for r in parse_ks(read_lines("ks_sample.txt")) if isinstance(r, KSRecord)]
    text = "\n".join(format_ks(r) for r in records)
    reparsed = list(parse_ks(io.StringIO(text)))
    assert all(isinstance(r, KSRecord) for r in reparsed)
    assert reparsed == records  # line numbers are excluded from equality


def test_filter_examples():
    keep = KSRecord(ambient_dim=4, vertex_count=5, h11=20, h21=19, chi=2)
    drop = KSRecord(ambient_dim=4, vertex_count=5, h11=5, h21=45, chi=-80)
    minus = KSRecord(ambient_dim=4, vertex_count=5, h11=15, h21=16, chi=-2)
    assert list(filter_hodge_difference([keep, drop, minus], 1)) == [keep]
    assert list(filter_hodge_difference([keep, drop, minus], -1)) == [minus]


def test_range_report_on_sample():
    records = [r for r in parse_ks(read_lines("ks_sample.txt")) if isinstance(r, KSRecord)]
    report = h11_range_report(records)
    assert report.clean
    assert report.plus.h11_min == 16 and report.plus.h11_max == 90
    assert report.minus.h11_min == 15 and report.minus.h11_max == 89
    assert report.plus.h11_values == (16, 20, 45, 90)
    assert report.minus.h11_values == (15, 19, 27, 89)


def test_range_report_flags_outliers_and_handles_empty():
    low = KSRecord(ambient_dim=4, vertex_count=5, h11=12, h21=11, chi=2, line=7)
    report = h11_range_report([low])
    assert not report.clean
    assert report.plus.out_of_range == ((7, 12),)
    assert report.minus.out_of_range == ()

    empty = h11_range_report([])
    assert empty.clean
    assert empty.plus.h11_values == ()
    assert empty.plus.h11_min is None and empty.plus.h11_max is None


def test_records_other_differences_ignored_by_ranges():
    quintic = KSRecord(ambient_dim=4, vertex_count=5, h11=1, h21=101, chi=-200)
    report = h11_range_report([quintic])
    assert report.clean
    assert report.plus.h11_values == () and report.minus.h11_values == ()
