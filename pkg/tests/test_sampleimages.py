"""Synthetic scene tests: calibration targets and determinism."""

import pytest

from sitcipher import analysis, sampleimages
from sitcipher.pgm import read_pgm


@pytest.mark.parametrize("name", sorted(sampleimages.PROFILES))
class TestCalibration:
    def test_dimensions(self, name, scenes):
        img = scenes[name]
        assert (img.width, img.height) == (256, 256)

    def test_entropy_matches_target(self, name, scenes):
        profile = sampleimages.PROFILES[name]
        assert analysis.entropy(scenes[name]) == pytest.approx(
            profile.entropy_bits, abs=0.005)

    def test_adjacent_correlation_matches_reference(self, name, scenes):
        profile = sampleimages.PROFILES[name]
        assert analysis.adjacent_pixel_correlation(scenes[name]) == pytest.approx(
            profile.adjacent_correlation, abs=0.02)


class TestGeneration:
    def test_deterministic(self):
        assert sampleimages.synthesize("lena") == sampleimages.synthesize("lena")

    def test_profiles_differ(self, scenes):
        assert scenes["lena"].pixels != scenes["baboon"].pixels

    def test_small_size(self):
        img = sampleimages.synthesize("cameraman", size=32)
        assert (img.width, img.height) == (32, 32)

    def test_rejects_unknown_profile(self):
        with pytest.raises(ValueError):
            sampleimages.synthesize("peppers")

    def test_rejects_tiny_size(self):
        with pytest.raises(ValueError):
            sampleimages.synthesize("lena", size=1)

    def test_command_line_entry(self, tmp_path):
        out = tmp_path / "scene.pgm"
        sampleimages._main(["baboon", str(out), "--size", "48"])
        img = read_pgm(out.read_bytes())
        assert (img.width, img.height) == (48, 48)
        assert img == sampleimages.synthesize("baboon", size=48)
