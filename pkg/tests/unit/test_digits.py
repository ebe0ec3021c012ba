"""Tests for digit systems."""

import math

import pytest

from cantor_besicovitch.models import DigitSystem, SystemMode, encode_word


class TestDigitSystem:
    def test_staircase_defaults(self, staircase):
        assert staircase.J == (0, 2)
        assert staircase.sigma == (0, 1)
        assert staircase.mode == SystemMode.SELF_SIMILAR
        assert staircase.s == pytest.approx(math.log(2) / math.log(3))

    def test_staircase_spreads_digits(self):
        assert DigitSystem.staircase(5, 3).J == (0, 2, 4)

    @pytest.mark.parametrize("a,b", [(2, 2), (3, 3), (3, 1), (5, 7)])
    def test_rejects_invalid_parameters(self, a, b):
        with pytest.raises(ValueError):
            DigitSystem.staircase(a, b)

    def test_self_similar_sorts_digit_set(self):
        system = DigitSystem.self_similar(3, 2, (2, 0))
        assert system.J == (0, 2)
        assert system.sigma == (0, 1)

    def test_sigma_follows_its_digit(self):
        system = DigitSystem.self_similar(5, 3, (4, 0, 2), (0, 2, 1))
        assert system.J == (0, 2, 4)
        assert system.sigma_map(()) == {4: 0, 0: 2, 2: 1}
        assert DigitSystem.from_dict(system.to_dict()) == system

    def test_override_sigma_follows_its_digit(self):
        system = DigitSystem.staircase(5, 2).with_override((), (3, 1), (0, 1))
        assert system.branch(()) == ((1, 3), (1, 0))
        assert system.sigma_map(()) == {3: 0, 1: 1}
        again = DigitSystem.from_dict(system.to_dict())
        assert again.branch(()) == system.branch(())

    def test_rejects_bad_sigma(self):
        with pytest.raises(ValueError, match="permutation"):
            DigitSystem.self_similar(3, 2, (0, 2), (0, 0))

    def test_seeded_branch_is_pure(self):
        first = DigitSystem.seeded(5, 2, seed=7)
        second = DigitSystem.seeded(5, 2, seed=7)
        for word in [(), (1,), (4, 0)]:
            digits, sigma = first.branch(word)
            assert (digits, sigma) == second.branch(word)
            assert len(digits) == 2 and list(digits) == sorted(digits)
            assert sorted(sigma) == [0, 1]

    def test_seeded_needs_seed(self):
        with pytest.raises(ValueError, match="seed"):
            DigitSystem(a=5, b=2, mode=SystemMode.SEEDED_RANDOM)

    def test_override_replaces_one_word(self, staircase):
        swapped = staircase.with_override((), sigma=(1, 0))
        assert swapped.branch(()) == ((0, 2), (1, 0))
        assert swapped.branch((0,)) == ((0, 2), (0, 1))
        assert swapped.sigma_map(()) == {0: 1, 2: 0}

    def test_admissibility(self, staircase):
        assert staircase.is_admissible((0, 2, 2))
        assert not staircase.is_admissible((1,))

    def test_dict_round_trip(self, staircase):
        system = staircase.with_override((2,), sigma=(1, 0))
        assert DigitSystem.from_dict(system.to_dict()) == system

    def test_save_and_load(self, tmp_path):
        system = DigitSystem.seeded(7, 3, seed=11)
        path = system.save(tmp_path / "system.json")
        assert DigitSystem.load(path) == system

    def test_label(self, staircase):
        assert staircase.label == "a3b2-J02"
        assert DigitSystem.seeded(5, 2, 3).label == "a5b2-seed3"


class TestEncodeWord:
    def test_length_prefix(self):
        assert encode_word((0, 2), 3) == "2:02"
        assert encode_word((), 3) == "0:"

    def test_large_base_uses_separator(self):
        assert encode_word((40, 1), 50) == "2:40.1"
