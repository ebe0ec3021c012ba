"""Hashing utilities: artifact digests and seeded hash streams.

Provides SHA-256 based helpers for:
- Artifact digests (run-to-run reproducibility checks)
- Deterministic, language-independent pseudo-random streams keyed by strings
"""

import hashlib
from pathlib import Path
from typing import Sequence


# Default chunk size for reading large files (8 MB)
DEFAULT_CHUNK_SIZE = 8 * 1024 * 1024


def hash_file(
    file_path: Path,
    algorithm: str = "sha256",
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> str:
    """
    Calculate the hash of a file.

    Args:
        file_path: Path to the file
        algorithm: Hash algorithm (sha256, sha1, md5)
        chunk_size: Size of chunks to read

    Returns:
        Hexadecimal hash string
    """
    file_path = Path(file_path)

    if not file_path.exists():
        raise FileNotFoundError(f"File not found: {file_path}")

    hasher = hashlib.new(algorithm)

    with open(file_path, "rb") as f:
        while chunk := f.read(chunk_size):
            hasher.update(chunk)

    return hasher.hexdigest()


class SeededStream:
    """
    Deterministic integer stream from SHA-256 in counter mode.

    The stream for a key is fully determined by the key string, so the same
    sequence can be reproduced in any language with a SHA-256 implementation.
    """

    def __init__(self, key: str):
        self.key = key
        self.counter = 0

    def next_u64(self) -> int:
        """Next 64-bit unsigned integer."""
        digest = hashlib.sha256(f"{self.key}#{self.counter}".encode("utf-8")).digest()
        self.counter += 1
        return int.from_bytes(digest[:8], "big")

    def below(self, bound: int) -> int:
        """Integer in [0, bound)."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        return self.next_u64() % bound

    def uniform(self) -> float:
        """Float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) / float(1 << 53)

    def shuffled(self, items: Sequence[int]) -> list[int]:
        """Fisher-Yates shuffle of a copy of items."""
        out = list(items)
        for i in range(len(out) - 1, 0, -1):
            j = self.below(i + 1)
            out[i], out[j] = out[j], out[i]
        return out
