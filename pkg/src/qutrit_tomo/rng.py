"""Deterministic, splittable random streams.

Every stochastic step in the package draws from an :class:`RngStream`
addressed by a 64-bit master seed plus a text label. The stream state is
initialised by hashing ``(seed, label)`` with BLAKE2b and advanced with the
splitmix64 generator, so a given address always reproduces the same sample
sequence regardless of platform, process or execution order. Child streams
are derived by extending the label, which is how per-task and per-draw
independence is obtained without any shared mutable state.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from .errors import InvalidInputError

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    """splitmix64 finaliser: a full-avalanche 64-bit mix."""
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def _stream_origin(seed: int, label: str) -> int:
    digest = hashlib.blake2b(f"{seed}:{label}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "little")


@dataclass
class RngStream:
    """A named random stream: identical ``(seed, label)`` pairs yield
    identical sample sequences."""

    seed: int
    label: str = ""
    _state: int = field(init=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.seed, int):
            raise InvalidInputError(f"seed must be an integer, got {self.seed!r}")
        self._state = _stream_origin(self.seed, self.label)

    def child(self, suffix: str) -> "RngStream":
        """Derive an independent stream; does not advance this one."""
        return RngStream(self.seed, f"{self.label}/{suffix}")

    def random(self) -> float:
        """Next uniform variate, strictly inside (0, 1)."""
        self._state = (self._state + _GOLDEN) & _MASK64
        # 53 high bits, offset to the bin centre: never exactly 0 or 1
        return ((_mix64(self._state) >> 11) + 0.5) * 2.0 ** -53

    def uniform(self, low: float, high: float) -> float:
        return low + (high - low) * self.random()
