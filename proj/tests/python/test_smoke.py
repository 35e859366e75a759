import cmath
import math
from fractions import Fraction

import pytest

import wavemix as wm


def make_system():
    params = wm.SystemParams()
    params.omega01 = 10.0
    params.gamma = 1.0
    params.v = 1.0
    return params


def test_config_validation():
    params, drive = wm.validate_config(
        {"omega01": 10.0, "gamma": 1.0, "rabi_a": 0.5, "rabi_b": 0.5, "delta": 0.01}
    )
    assert drive.rabi_a == 0.5
    assert not drive.quasistationary_strained
    with pytest.raises(ValueError):
        wm.validate_config({"omega01": 10.0, "gamma": 0.0, "rabi_a": 0.5, "rabi_b": 0.5, "delta": 0.01})


def test_gamma_table():
    assert wm.gamma_table(3) == [1, 2, -6, -20]
    assert wm.loop_amplitude(1) == pytest.approx(-16j)


def test_mixing_angle_and_peaks():
    params, drive = wm.validate_config(
        {"omega01": 10.0, "gamma": 1.0, "rabi_a": 0.5, "rabi_b": 0.5, "delta": 0.01}
    )
    angle = wm.mixing_angle(drive, params)
    assert angle.sin_theta == pytest.approx(0.5, abs=1e-14)
    assert angle.theta == pytest.approx(math.pi / 6, abs=1e-14)

    spectrum = wm.semiclassical_spectrum(drive, params, 3)
    assert len(spectrum.records) == 8
    freqs = [r.frequency for r in spectrum.records]
    assert freqs == sorted(freqs)


def test_single_and_two_photon():
    params = make_system()
    res = wm.single_photon_coeffs(params.k_res(), params)
    assert abs(res.t) < 1e-14
    assert res.r == pytest.approx(-1.0)
    k = params.k_res()
    amp = wm.two_photon_connected(k, k, k, k, params)
    assert amp.coefficient == pytest.approx(-16.0 / math.pi)
    assert wm.connected_T(1, params) == pytest.approx(-16.0 / math.pi)


def test_combinatorics():
    assert wm.derivative_prefactor(2, 1, 1, wm.PrefactorMode.Sym) == Fraction(2)
    assert wm.stimulation_ratio(1, 2) == Fraction(3, 2)


def test_bloch_oracle_short():
    params, drive = wm.validate_config(
        {"omega01": 10.0, "gamma": 1.0, "rabi_a": 0.5, "rabi_b": 0.5, "delta": 0.03}
    )
    traj = wm.integrate_bloch(drive, params)
    c1 = wm.side_peak_harmonic(traj, 0, wm.Side.Right)
    closed = abs(wm.side_peak_amplitude(drive, params, 0, wm.Side.Right)) / params.gamma
    assert abs(c1) == pytest.approx(closed, rel=0.01)


def test_coherent_amplitude():
    params = make_system()
    drive = wm.CoherentDrive(60.0, 40.0, 0.2, -0.4)
    amp = wm.coherent_peak_amplitude(1, drive, wm.PeakChannel.EMode, params)
    rotated = wm.coherent_peak_amplitude(
        1, wm.CoherentDrive(60.0, 40.0, 0.2 + math.pi / 3, -0.4), wm.PeakChannel.EMode, params
    )
    expected = amp.value * cmath.exp(2j * math.pi / 3)
    assert rotated.value == pytest.approx(expected, rel=1e-9)
    assert wm.interaction_length_ratio(2) == pytest.approx(math.sqrt(2.0))


def test_emit_csv_header():
    params, drive = wm.validate_config(
        {"omega01": 10.0, "gamma": 1.0, "rabi_a": 0.3, "rabi_b": 0.2, "delta": 0.01}
    )
    text = wm.emit_spectrum(wm.semiclassical_spectrum(drive, params, 1), "csv")
    assert text.startswith("p,side,frequency,re_amp,im_amp,intensity\n")
