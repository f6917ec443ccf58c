import math

import numpy as np
import pytest

from blaschke.rng import Xoshiro256, splitmix64


def test_splitmix64_reference():
    sm = splitmix64(0)
    assert next(sm) == 0xE220A8397B1DCDAF
    assert next(sm) == 0x6E789E6AA1B965F4


def test_xoshiro_reference_from_state():
    g = Xoshiro256(state=[1, 2, 3, 4])
    assert [g.next_u64() for _ in range(3)] == [11520, 0, 1509978240]


def test_seed_fills_state_from_splitmix():
    sm = splitmix64(42)
    assert Xoshiro256(42).s == [next(sm) for _ in range(4)]


def test_zero_state_rejected():
    with pytest.raises(ValueError):
        Xoshiro256(state=[0, 0, 0, 0])


def test_streams_are_deterministic():
    a, b = Xoshiro256(7), Xoshiro256(7)
    assert [a.next_u64() for _ in range(100)] == [b.next_u64() for _ in range(100)]
    assert Xoshiro256(7).next_u64() != Xoshiro256(8).next_u64()


def test_doubles_use_top_53_bits():
    a, b = Xoshiro256(3), Xoshiro256(3)
    for _ in range(50):
        x = a.random()
        assert x == (b.next_u64() >> 11) / 2.0 ** 53
        assert 0.0 <= x < 1.0


def test_uniform_moments():
    g = Xoshiro256(1)
    xs = np.array([g.random() for _ in range(20000)])
    assert xs.mean() == pytest.approx(0.5, abs=0.01)
    assert xs.var() == pytest.approx(1 / 12, abs=0.005)


def test_unit_vectors():
    g = Xoshiro256(2)
    v = np.array([g.unit_vector3() for _ in range(5000)])
    assert np.allclose(np.linalg.norm(v, axis=1), 1.0)
    # uniform on the sphere: every coordinate has mean 0 and variance 1/3
    assert np.abs(v.mean(axis=0)).max() < 0.03
    assert np.allclose(v.var(axis=0), 1 / 3, atol=0.02)
    assert math.isfinite(v.sum())
