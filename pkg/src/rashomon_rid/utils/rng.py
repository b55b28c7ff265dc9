"""SplitMix64 — the single random source for every stochastic step."""

from __future__ import annotations

import numpy as np
import numpy.typing as npt

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

_NP_GAMMA = np.uint64(GOLDEN_GAMMA)
_NP_MIX1 = np.uint64(_MIX1)
_NP_MIX2 = np.uint64(_MIX2)
_DOUBLE_UNIT = 2.0 ** -53


class SplitMix64:
    """Sequential SplitMix64 stream.

    Scalar draws and the vectorized ``*_array`` draws advance the same state,
    so a stream consumed in blocks is bit-identical to one consumed one value
    at a time.
    """

    def __init__(self, seed: int) -> None:
        self._state = seed & MASK64

    @staticmethod
    def mix(value: int) -> int:
        """The SplitMix64 finalizer (xor-shift-multiply twice, final xor-shift)."""
        z = value & MASK64
        z = ((z ^ (z >> 30)) * _MIX1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & MASK64
        return z ^ (z >> 31)

    @staticmethod
    def split(master: int, index: int) -> int:
        """Derive an independent seed: SplitMix64 applied to ``master XOR index``."""
        return SplitMix64.mix(((master ^ index) + GOLDEN_GAMMA) & MASK64)

    @property
    def state(self) -> int:
        return self._state

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN_GAMMA) & MASK64
        return SplitMix64.mix(self._state)

    def next_below(self, bound: int) -> int:
        """Integer in ``[0, bound)`` by reduction modulo ``bound``."""
        if bound < 1:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def next_double(self) -> float:
        """Uniform double in ``[0, 1)`` from the top 53 bits."""
        return (self.next_u64() >> 11) * _DOUBLE_UNIT

    def u64_array(self, count: int) -> npt.NDArray[np.uint64]:
        """The next ``count`` outputs as a uint64 array."""
        steps = np.arange(1, count + 1, dtype=np.uint64)
        z = np.uint64(self._state) + steps * _NP_GAMMA
        self._state = (self._state + count * GOLDEN_GAMMA) & MASK64
        z = (z ^ (z >> np.uint64(30))) * _NP_MIX1
        z = (z ^ (z >> np.uint64(27))) * _NP_MIX2
        result: npt.NDArray[np.uint64] = z ^ (z >> np.uint64(31))
        return result

    def below_array(self, count: int, bound: int) -> npt.NDArray[np.int64]:
        if bound < 1:
            raise ValueError("bound must be positive")
        return (self.u64_array(count) % np.uint64(bound)).astype(np.int64)

    def double_array(self, count: int) -> npt.NDArray[np.float64]:
        bits = self.u64_array(count) >> np.uint64(11)
        return bits.astype(np.float64) * _DOUBLE_UNIT

    def normal_array(self, count: int) -> npt.NDArray[np.float64]:
        """Standard normals by Box-Muller, one normal per consecutive pair of uniforms."""
        pairs = self.double_array(2 * count).reshape(count, 2)
        radius = np.sqrt(-2.0 * np.log1p(-pairs[:, 0]))
        result: npt.NDArray[np.float64] = radius * np.cos(2.0 * np.pi * pairs[:, 1])
        return result

    def permutation(self, size: int) -> npt.NDArray[np.int64]:
        """Fisher-Yates shuffle of ``range(size)``, walking from the last slot down."""
        order = np.arange(size, dtype=np.int64)
        for i in range(size - 1, 0, -1):
            j = self.next_below(i + 1)
            order[i], order[j] = order[j], order[i]
        return order
