import math

import mpmath
import numpy as np
import pytest

from rhverify.errors import OrderError, ParseError, RangeError, TruncationExceedsTable
from rhverify.zeros import (
    HypotheticalZero, ZeroCatalog, cache_path_for, load_odlyzko, ordinates_up_to, read_cache,
    reference_table_path, riemann_von_mangoldt, zeros_up_to,
)

THREE = "14.134725142\n21.022039639\n25.010857580\n"


@pytest.fixture
def write(tmp_path):
    def _write(text, name="zeros.txt"):
        p = tmp_path / name
        p.write_text(text)
        return p
    return _write


def test_three_line_file(write):
    cat = load_odlyzko(write(THREE))
    assert cat.count == 3
    assert abs(cat.t_max - 25.0109) < 1e-4
    assert [z.index for z in cat.ordinates] == [1, 2, 3]


def test_any_decimal_width_and_blank_lines(write):
    cat = load_odlyzko(write("  14.1347251417346937904572519835625\n\n21.02204\n"))
    assert cat.count == 2
    assert cat.values[0] == float("14.1347251417346937904572519835625")


def test_empty_file(write):
    cat = load_odlyzko(write(""))
    assert cat.count == 0
    assert zeros_up_to(cat, 1000.0) == []


def test_order_error(write):
    with pytest.raises(OrderError):
        load_odlyzko(write("21.02\n14.13\n"))


def test_duplicate_within_tolerance(write):
    with pytest.raises(OrderError):
        load_odlyzko(write("14.134725142\n14.1347251425\n"))


def test_range_error(write):
    with pytest.raises(RangeError):
        load_odlyzko(write("15.0\n21.0\n"))


def test_parse_error_reports_line(write):
    with pytest.raises(ParseError) as info:
        load_odlyzko(write("14.134725142\n\n21.02x\n"))
    assert info.value.lineno == 3
    with pytest.raises(ParseError):
        load_odlyzko(write("14.134725142\n-3\n"))
    with pytest.raises(ParseError):
        load_odlyzko(write("14.134725142\nnan\n"))


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_odlyzko(tmp_path / "absent.txt")


def test_reference_counts(catalog):
    assert len(zeros_up_to(catalog, 1000.0)) == 649
    # The table holds 138 ordinates up to 300 (the 138th is 299.840326054);
    # see the acceptance suite for the published count.
    up300 = zeros_up_to(catalog, 300.0)
    assert len(up300) == 138
    assert abs(up300[-1].t - 299.840326054) < 1e-9
    assert abs(up300[-2].t - 297.979277062) < 1e-9
    assert zeros_up_to(catalog, 1.0) == []


def test_truncation_beyond_table(catalog, write):
    with pytest.raises(TruncationExceedsTable):
        zeros_up_to(catalog, catalog.t_max + 1.0)
    small = load_odlyzko(write(THREE))
    with pytest.raises(TruncationExceedsTable):
        zeros_up_to(small, 300.0)
    # Non-strict reads return what the table has.
    assert ordinates_up_to(small, 300.0, strict=False).size == 3
    with pytest.raises(TruncationExceedsTable):
        ordinates_up_to(None, 10.0)
    assert ordinates_up_to(None, 10.0, strict=False).size == 0


def test_cache_round_trip(write):
    p = write(THREE)
    first = load_odlyzko(p)
    cache = cache_path_for(p)
    assert cache.exists()
    values, digest = read_cache(cache)
    assert values.tobytes() == first.values.tobytes()
    assert len(digest) == 32
    again = load_odlyzko(p)
    assert again.values.tobytes() == first.values.tobytes()
    # The layout is a little-endian count followed by the floats.
    raw = cache.read_bytes()
    assert int.from_bytes(raw[:8], "little") == 3
    assert np.frombuffer(raw[8:32], dtype="<f8").tobytes() == first.values.astype("<f8").tobytes()


def test_stale_cache_is_ignored(write):
    p = write(THREE)
    load_odlyzko(p)
    p.write_text(THREE + "30.424876126\n")
    assert load_odlyzko(p).count == 4
    assert read_cache(cache_path_for(p))[0].size == 4


def test_corrupt_cache_is_ignored(write):
    p = write(THREE)
    cache_path_for(p).write_bytes(b"garbage")
    assert load_odlyzko(p).count == 3


@pytest.mark.parametrize("T", [100.0, 300.0, 1000.0])
def test_riemann_von_mangoldt(catalog, T):
    assert abs(len(zeros_up_to(catalog, T)) - riemann_von_mangoldt(T)) <= 2


def test_reference_table_against_mpmath(catalog):
    mpmath.mp.dps = 20
    for n in (1, 137, 138, 649):
        assert abs(float(mpmath.zetazero(n).imag) - catalog.values[n - 1]) < 1e-9


def test_reference_table_file_is_plain_text():
    lines = reference_table_path().read_text().split()
    assert len(lines) == 1600
    assert float(lines[0]) == 14.134725142


def test_catalog_is_read_only(catalog):
    with pytest.raises(ValueError):
        catalog.values[0] = 1.0


def test_from_values_validates():
    assert ZeroCatalog.from_values([]).count == 0
    with pytest.raises(OrderError):
        ZeroCatalog.from_values([14.134725142, 14.0])


def test_hypothetical_zero_validation():
    HypotheticalZero(0.9, 50.0, 2)
    with pytest.raises(ValueError):
        HypotheticalZero(1.0, 50.0)
    with pytest.raises(ValueError):
        HypotheticalZero(0.5, 50.0, 0)


def test_rvm_formula():
    T = 1000.0
    x = T / (2 * math.pi)
    assert riemann_von_mangoldt(T) == pytest.approx(x * math.log(x / math.e) + 0.875)
