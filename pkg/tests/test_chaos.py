"""Chaotic generator tests: conformance, determinism, range, non-degeneracy."""

import math

import numpy as np
import pytest

from cscf import chaos
from cscf.errors import DivergedOrbitError, FixedPointSeedError, SeedOutOfRangeError


# Straight-line re-evaluation of the literal table formulas, independent of
# the implementation in cscf.chaos.
def oracle_step(name, z, params):
    if name == "logistic":
        return params["a"] * z * (1 - z)
    if name == "sine":
        return (params["a"] / 4) * math.sin(math.pi * z)
    if name == "gauss":
        return 0.0 if z == 0 else (1.0 / z) % 1.0
    if name == "circle":
        return (z + params["b"] - (params["a"] / (2 * math.pi)) * math.sin(2 * math.pi * z)) % 1.0
    if name == "sinusoidal":
        return params["a"] * z * z * math.sin(math.pi * z)
    if name == "singer":
        return params["alpha"] * (7.8 * z - 23.3 * z**2 + 28.7 * z**3 - 13.3 * z**4)
    if name == "iterative":
        return math.sin(params["a"] * math.pi / z)
    raise KeyError(name)


class TestConstruction:
    def test_constructor_echoes_seed(self):
        state = chaos.new_map("logistic", 0.7)
        assert state.z == 0.7
        assert state.step_count == 0

    @pytest.mark.parametrize(
        "name,z0",
        [("logistic", 0.0), ("logistic", 1.0), ("gauss", 0.0), ("sine", 0.0),
         ("sinusoidal", 0.0), ("singer", 0.0), ("chebyshev", 1.0),
         ("chebyshev", -0.5), ("intermittency", 1.0), ("tent", 0.0)],
    )
    def test_fixed_point_seeds_rejected(self, name, z0):
        with pytest.raises(FixedPointSeedError, match=name):
            chaos.new_map(name, z0)

    @pytest.mark.parametrize(
        "name,z0",
        [("logistic", 1.5), ("logistic", -0.1), ("chebyshev", 2.0),
         ("iterative", -2.0), ("henon", 3.0)],
    )
    def test_out_of_interval_seeds_rejected(self, name, z0):
        with pytest.raises(SeedOutOfRangeError, match=name):
            chaos.new_map(name, z0)

    def test_logistic_fixed_point_tracks_parameter(self):
        # z = 1 - 1/a is the nontrivial fixed point.
        with pytest.raises(FixedPointSeedError):
            chaos.new_map(chaos.map_kind("logistic", a=4.0), 0.75)
        chaos.new_map(chaos.map_kind("logistic", a=3.9), 0.75)  # fine here

    def test_unknown_names_and_params(self):
        with pytest.raises(ValueError, match="unknown chaotic map"):
            chaos.map_kind("lorenz")
        with pytest.raises(ValueError, match="no parameter"):
            chaos.map_kind("logistic", mu=3.9)

    def test_params_immutable(self):
        kind = chaos.map_kind("logistic")
        with pytest.raises(TypeError):
            kind.params["a"] = 3.5

    def test_default_seed_admissible_everywhere(self):
        for name in chaos.MAP_NAMES:
            state = chaos.new_map(name)
            assert state.z == chaos.DEFAULT_SEED


class TestExamples:
    def test_logistic_quarter(self):
        assert chaos.new_map("logistic", 0.25).next_raw() == pytest.approx(0.75, rel=1e-15)

    def test_sine_half(self):
        assert chaos.new_map("sine", 0.5).next_raw() == pytest.approx(1.0, rel=1e-15)

    def test_gauss_inverse_fraction(self):
        assert chaos.new_map("gauss", 0.4).next_raw() == pytest.approx(0.5, rel=1e-12)

    def test_logistic_unit_identity_rescale(self):
        assert chaos.new_map("logistic", 0.25).next_unit() == pytest.approx(0.75, rel=1e-15)

    def test_circle_unit_in_range(self):
        value = chaos.new_map("circle", 0.3).next_unit()
        assert 0.0 <= value <= 1.0

    def test_chebyshev_negative_endpoint_maps_to_zero(self):
        # cos(4*acos(cos(pi/4))) = cos(pi) = -1, the lower endpoint.
        state = chaos.new_map("chebyshev", math.cos(math.pi / 4))
        assert state.next_unit() == pytest.approx(0.0, abs=1e-12)

    def test_unit_matches_affine_of_raw(self):
        for name in chaos.MAP_NAMES:
            raw_state = chaos.new_map(name)
            unit_state = chaos.new_map(name)
            lo, hi = raw_state.kind.raw_interval
            for _ in range(200):
                expected = (raw_state.next_raw() - lo) / (hi - lo)
                assert unit_state.next_unit() == min(1.0, max(0.0, expected))


class TestSequences:
    def test_determinism_10k_steps(self):
        for name in chaos.MAP_NAMES:
            a = chaos.new_map(name).take_raw(10_000)
            b = chaos.new_map(name).take_raw(10_000)
            assert np.array_equal(a, b), name

    def test_unit_range_10k_steps(self):
        for name in chaos.MAP_NAMES:
            state = chaos.new_map(name)
            values = state.unit(10_000)
            assert values.min() >= 0.0 and values.max() <= 1.0, name

    def test_non_degenerate_variance(self):
        for name in chaos.MAP_NAMES:
            values = chaos.new_map(name).unit(1_000)
            assert np.var(values) > 1e-4, name

    def test_literal_formula_conformance(self):
        for name in chaos.LITERAL_MAP_NAMES:
            state = chaos.new_map(name)
            z = chaos.DEFAULT_SEED
            for step in range(10_000):
                expected = oracle_step(name, z, state.kind.params)
                got = state.next_raw()
                assert got == pytest.approx(expected, rel=1e-12), (name, step)
                z = got

    def test_henon_two_term_recurrence(self):
        state = chaos.new_map("henon", 0.7)
        z, z_prev = 0.7, 0.7
        for _ in range(1_000):
            expected = 1.0 - 1.4 * z * z + 0.3 * z_prev
            assert state.next_raw() == pytest.approx(expected, rel=1e-12)
            z_prev, z = z, expected

    def test_tent_orbit_does_not_collapse(self):
        # Slope exactly 2 would hit the absorbing point 0 within ~55 steps
        # on binary floats; the default slope must not.
        values = chaos.new_map("tent").take_raw(10_000)
        assert np.all(values[-100:] != 0.0)

    def test_step_count_advances(self):
        state = chaos.new_map("logistic")
        state.unit(17)
        assert state.step_count == 17

    def test_diverged_orbit_raises(self):
        state = chaos.new_map(chaos.map_kind("singer", alpha=10.0), 0.7)
        with pytest.raises(DivergedOrbitError):
            for _ in range(50):
                state.next_raw()


class TestSeededConstruction:
    def test_seeded_map_deterministic(self):
        a = chaos.seeded_map("logistic", np.random.default_rng(5))
        b = chaos.seeded_map("logistic", np.random.default_rng(5))
        assert a.z == b.z

    def test_seeded_map_admissible(self):
        rng = np.random.default_rng(0)
        for name in chaos.MAP_NAMES:
            state = chaos.seeded_map(name, rng)
            lo, hi = state.kind.seed_interval
            assert lo <= state.z <= hi
            state.unit(100)  # iterates fine
