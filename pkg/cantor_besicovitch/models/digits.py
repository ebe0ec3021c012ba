"""Digit systems: the parameters (a, b, J, sigma) that define C and Gamma."""

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Any, Optional

from ..utils.hash import SeededStream

Word = tuple[int, ...]

_DIGIT_CHARS = "0123456789abcdefghijklmnopqrstuvwxyz"


class SystemMode(str, Enum):
    """How digit sets and bijections are chosen per word."""

    SELF_SIMILAR = "self_similar"  # Same J and sigma for every word
    SEEDED_RANDOM = "seeded_random"  # Pure function of (seed, word)


def encode_word(word: Word, a: int) -> str:
    """Canonical word encoding: length prefix, then the digits in base a."""
    if a <= len(_DIGIT_CHARS):
        body = "".join(_DIGIT_CHARS[x] for x in word)
    else:
        body = ".".join(str(x) for x in word)
    return f"{len(word)}:{body}"


@lru_cache(maxsize=1 << 16)
def _random_branch(seed: int, a: int, b: int, word: Word) -> tuple[Word, Word]:
    """Seeded digit set and bijection for one word (cached, pure)."""
    key = encode_word(word, a)
    digits = SeededStream(f"J|{seed}|{a}|{b}|{key}").shuffled(range(a))
    digit_set = tuple(sorted(digits[:b]))
    images = SeededStream(f"sigma|{seed}|{a}|{b}|{key}").shuffled(range(b))
    return digit_set, tuple(images)


def _sorted_branch(digit_set: Word, sigma: Optional[Word]) -> tuple[Word, Word]:
    """Sort a digit set and carry sigma along; a missing sigma is order preserving."""
    digits = tuple(digit_set)
    if sigma is None:
        return tuple(sorted(digits)), tuple(range(len(digits)))
    images = tuple(sigma)
    if len(images) != len(digits):
        return tuple(sorted(digits)), images
    order = sorted(range(len(digits)), key=lambda k: digits[k])
    return tuple(digits[k] for k in order), tuple(images[k] for k in order)


def _check_branch(a: int, b: int, digit_set: Word, sigma: Word, where: str) -> None:
    if len(digit_set) != b or len(set(digit_set)) != b:
        raise ValueError(f"{where}: digit set {digit_set} must have exactly b={b} distinct digits")
    if any(d < 0 or d >= a for d in digit_set):
        raise ValueError(f"{where}: digits {digit_set} must lie in 0..{a - 1}")
    if list(digit_set) != sorted(digit_set):
        raise ValueError(f"{where}: digit set {digit_set} must be sorted")
    if sorted(sigma) != list(range(b)):
        raise ValueError(f"{where}: sigma {sigma} must be a permutation of 0..{b - 1}")


@dataclass(frozen=True)
class DigitSystem:
    """
    Parameters of a generalized Cantor set and its Cantor graph.

    For self-similar systems ``J`` is the digit set of every word and
    ``sigma[k]`` is the image of ``J[k]``. ``overrides`` replaces the branch
    of individual words, e.g. a swapped bijection at the root.
    """

    a: int
    b: int
    mode: SystemMode = SystemMode.SELF_SIMILAR
    seed: Optional[int] = None
    J: Word = ()
    sigma: Word = ()
    overrides: tuple[tuple[Word, Word, Word], ...] = ()
    _override_table: dict[Word, tuple[Word, Word]] = field(
        default_factory=dict, init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if self.a < 3:
            raise ValueError(f"a must be >= 3, got {self.a}")
        if not 2 <= self.b < self.a:
            raise ValueError(f"b must satisfy 2 <= b < a, got a={self.a}, b={self.b}")

        if self.mode == SystemMode.SELF_SIMILAR:
            _check_branch(self.a, self.b, self.J, self.sigma, "self-similar system")
        elif self.seed is None:
            raise ValueError("seeded_random systems need a seed")

        table = {}
        for word, digit_set, sigma in self.overrides:
            _check_branch(self.a, self.b, digit_set, sigma, f"override for word {word}")
            table[tuple(word)] = (tuple(digit_set), tuple(sigma))
        object.__setattr__(self, "_override_table", table)

    @classmethod
    def self_similar(
        cls,
        a: int,
        b: int,
        J: Word,
        sigma: Optional[Word] = None,
    ) -> "DigitSystem":
        """Self-similar system; sigma defaults to order preserving (staircase)."""
        digits, images = _sorted_branch(J, sigma)
        return cls(a=a, b=b, mode=SystemMode.SELF_SIMILAR, J=digits, sigma=images)

    @classmethod
    def seeded(cls, a: int, b: int, seed: int) -> "DigitSystem":
        """Seeded random system."""
        return cls(a=a, b=b, mode=SystemMode.SEEDED_RANDOM, seed=seed)

    @classmethod
    def staircase(cls, a: int = 3, b: int = 2) -> "DigitSystem":
        """Classical staircase: evenly spread digits, order-preserving sigma."""
        if b == 2:
            digits: Word = (0, a - 1)
        else:
            digits = tuple(round(k * (a - 1) / max(b - 1, 1)) for k in range(b))
        return cls.self_similar(a, b, digits)

    def with_override(
        self,
        word: Word,
        digit_set: Optional[Word] = None,
        sigma: Optional[Word] = None,
    ) -> "DigitSystem":
        """Copy of this system with one word's branch replaced."""
        current_set, current_sigma = self.branch(word)
        if digit_set is None:
            digits, images = current_set, tuple(sigma) if sigma is not None else current_sigma
        elif sigma is None:
            digits, images = tuple(sorted(digit_set)), current_sigma
        else:
            digits, images = _sorted_branch(digit_set, sigma)
        entry = (tuple(word), digits, images)
        kept = tuple(o for o in self.overrides if tuple(o[0]) != tuple(word))
        return DigitSystem(
            a=self.a,
            b=self.b,
            mode=self.mode,
            seed=self.seed,
            J=self.J,
            sigma=self.sigma,
            overrides=kept + (entry,),
        )

    @property
    def s(self) -> float:
        """Similarity dimension log b / log a."""
        return math.log(self.b) / math.log(self.a)

    @property
    def label(self) -> str:
        """Short human-readable identifier."""
        if self.mode == SystemMode.SEEDED_RANDOM:
            return f"a{self.a}b{self.b}-seed{self.seed}"
        return f"a{self.a}b{self.b}-J{''.join(map(str, self.J))}"

    def branch(self, word: Word) -> tuple[Word, Word]:
        """(digit set, sigma images aligned with the digit set) for a word."""
        word = tuple(word)
        if word in self._override_table:
            return self._override_table[word]
        if self.mode == SystemMode.SELF_SIMILAR:
            return self.J, self.sigma
        assert self.seed is not None
        return _random_branch(self.seed, self.a, self.b, word)

    def digit_set(self, word: Word) -> Word:
        """The digit set J_(word)."""
        return self.branch(word)[0]

    def sigma_map(self, word: Word) -> dict[int, int]:
        """The bijection sigma_(word): J_(word) -> {0, ..., b-1}."""
        digits, images = self.branch(word)
        return dict(zip(digits, images))

    def is_admissible(self, word: Word) -> bool:
        """Every digit lies in the digit set of its prefix."""
        return all(word[j] in self.digit_set(tuple(word[:j])) for j in range(len(word)))

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        data: dict[str, Any] = {"a": self.a, "b": self.b, "mode": self.mode.value}
        if self.mode == SystemMode.SEEDED_RANDOM:
            data["seed"] = self.seed
        else:
            data["J"] = list(self.J)
            data["sigma"] = list(self.sigma)
        if self.overrides:
            data["overrides"] = [
                {"word": list(w), "J": list(d), "sigma": list(s)} for w, d, s in self.overrides
            ]
        return data

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "DigitSystem":
        """Create from dictionary."""
        mode = SystemMode(data.get("mode", "self_similar"))
        overrides = tuple(
            (tuple(o["word"]),) + _sorted_branch(o["J"], o["sigma"])
            for o in data.get("overrides", [])
        )
        if mode == SystemMode.SEEDED_RANDOM:
            return cls(
                a=int(data["a"]),
                b=int(data["b"]),
                mode=mode,
                seed=int(data["seed"]),
                overrides=overrides,
            )
        digits, images = _sorted_branch(data["J"], data.get("sigma"))
        return cls(
            a=int(data["a"]),
            b=int(data["b"]),
            mode=mode,
            J=digits,
            sigma=images,
            overrides=overrides,
        )

    def save(self, path: Path) -> Path:
        """Save system to a JSON file."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.to_dict(), f, indent=2, sort_keys=True)
        return path

    @classmethod
    def load(cls, path: Path) -> "DigitSystem":
        """Load system from a JSON file."""
        with open(path, encoding="utf-8") as f:
            return cls.from_dict(json.load(f))
