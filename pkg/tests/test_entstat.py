import json
import math
import os
import random
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gramsteg.entstat import (
    StatReport,
    analyze,
    arithmetic_mean,
    chi_square,
    entropy,
    monte_carlo_pi,
    optimum_compression_pct,
    serial_correlation,
)
from gramsteg.errors import EmptyInput, InsufficientData, InvalidArgument

from .conftest import DATA


def entropy_oracle(data):
    n = len(data)
    return -sum(c / n * math.log2(c / n) for c in Counter(data).values())


def scc_oracle(data):
    n = len(data)
    u = list(data)
    v = u[1:] + u[:1]
    mu = sum(u) / n
    cov = sum((a - mu) * (b - mu) for a, b in zip(u, v))
    var = sum((a - mu) ** 2 for a in u)
    return cov / var


ONE_EACH = bytes(range(256))


def test_entropy_examples():
    assert entropy(b"A" * 1024) == 0.0
    assert entropy(ONE_EACH) == 8.0
    assert entropy(b"\x00" * 512 + b"\xff" * 512) == pytest.approx(1.0, abs=1e-15)


@given(st.binary(min_size=1, max_size=2000))
def test_entropy_oracle(data):
    h = entropy(data)
    assert h == pytest.approx(entropy_oracle(data), abs=1e-9)
    assert 0 <= h <= 8
    assert entropy(data + data) == pytest.approx(h, abs=1e-12)


@pytest.mark.parametrize("h, pct", [(4.916529, 38), (7.995169, 0), (4.412139, 44), (0.0, 100), (8.0, 0)])
def test_optimum_compression(h, pct):
    assert optimum_compression_pct(h) == pct


def test_optimum_compression_range():
    with pytest.raises(InvalidArgument):
        optimum_compression_pct(8.5)


def test_chi_square_examples():
    assert chi_square(ONE_EACH * 3) == 0.0
    assert chi_square(b"\x00" * 256) == 65280.0


@given(st.binary(min_size=1, max_size=1500))
def test_chi_square_zero_iff_uniform(data):
    counts = Counter(data)
    uniform = len(counts) == 256 and len(set(counts.values())) == 1
    assert (chi_square(data) == 0) == uniform
    assert chi_square(data) >= 0


def test_chi_square_random_band():
    for seed in range(5):
        data = random.Random(seed).randbytes(65536)
        assert 150 <= chi_square(data) <= 370


def test_mean_examples():
    assert arithmetic_mean(bytes(10)) == 0.0
    assert arithmetic_mean(ONE_EACH) == 127.5
    assert arithmetic_mean(bytes([10, 20, 40])) == pytest.approx(23.3333, abs=1e-4)


def test_monte_carlo_examples():
    assert monte_carlo_pi(bytes(6)) == pytest.approx((4.0, 100 * (4 - math.pi) / math.pi))
    assert monte_carlo_pi(bytes(6))[1] == pytest.approx(27.32, abs=0.005)
    assert monte_carlo_pi(b"\xff" * 6) == (0.0, 100.0)
    # trailing partial group is ignored
    assert monte_carlo_pi(bytes(6) + b"\xff" * 5)[0] == 4.0


def test_monte_carlo_oracle():
    data = random.Random(3).randbytes(6000)
    inside = 0
    for i in range(0, len(data), 6):
        x = int.from_bytes(data[i : i + 3], "big")
        y = int.from_bytes(data[i + 3 : i + 6], "big")
        inside += x * x + y * y <= (2**24 - 1) ** 2
    assert monte_carlo_pi(data)[0] == 4 * inside / 1000


def test_monte_carlo_random():
    est, _ = monte_carlo_pi(os.urandom(300 * 1024))
    assert 3.04 <= est <= 3.24


def test_serial_correlation_examples():
    assert serial_correlation(b"\x00\x01" * 512) == -1.0
    assert serial_correlation(b"\x07" * 100) is None
    assert abs(serial_correlation(random.Random(1).randbytes(65536))) < 0.02


@given(st.binary(min_size=2, max_size=800))
def test_serial_correlation_oracle(data):
    scc = serial_correlation(data)
    if len(set(data)) == 1:
        assert scc is None
    else:
        assert scc == pytest.approx(scc_oracle(data), abs=1e-9)


def test_input_guards():
    for f in (entropy, chi_square, arithmetic_mean):
        with pytest.raises(EmptyInput):
            f(b"")
    with pytest.raises(InsufficientData):
        monte_carlo_pi(b"12345")
    with pytest.raises(InsufficientData):
        serial_correlation(b"1")
    with pytest.raises(InsufficientData):
        analyze(b"12345")


def test_permutation_invariance(plain_text):
    data = plain_text[:6000]
    shuffled = bytearray(data)
    random.Random(0).shuffle(shuffled)
    shuffled = bytes(shuffled)
    a, b = analyze(data), analyze(shuffled)
    assert a.entropy_bits_per_byte == pytest.approx(b.entropy_bits_per_byte, abs=1e-12)
    assert a.chi_square == pytest.approx(b.chi_square)
    assert a.arithmetic_mean == b.arithmetic_mean
    assert a.optimum_compression_pct == b.optimum_compression_pct
    assert a.serial_correlation != pytest.approx(b.serial_correlation)
    # ASCII text always lands inside the quarter circle; use spread-out bytes
    noisy = random.Random(2).randbytes(6000)
    assert monte_carlo_pi(noisy) != monte_carlo_pi(bytes(sorted(noisy)))


def test_report_composite():
    r = analyze(ONE_EACH)
    assert (r.entropy_bits_per_byte, r.optimum_compression_pct, r.chi_square, r.arithmetic_mean) == (
        8.0,
        0,
        0.0,
        127.5,
    )
    assert r.byte_count == 256


@given(st.binary(min_size=6, max_size=1000))
def test_report_consistency(data):
    r = analyze(data)
    assert r.optimum_compression_pct == int(100 * (8 - r.entropy_bits_per_byte) / 8)
    assert 0 <= r.arithmetic_mean <= 255


def test_report_json_fields():
    obj = json.loads(analyze(ONE_EACH).to_json())
    assert set(obj) == set(StatReport.__dataclass_fields__)
    assert len(obj) == 8
    assert json.loads(analyze(b"\x05" * 12).to_json())["serial_correlation"] is None


def test_golden_report():
    text = (DATA / "golden_d9e65942.txt").read_bytes()
    expected = json.loads((DATA / "golden_d9e65942.json").read_text())
    assert json.loads(analyze(text).to_json()) == expected


def test_table_rendering():
    table = analyze(ONE_EACH).to_table()
    for row in ("Entropy", "Optimum Compression", "Chi Square", "Arithmetic Mean", "Monte Carlo", "Serial Correlation"):
        assert row in table
