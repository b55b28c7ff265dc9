"""gmpy2-backed bitsets for sample supports and binary columns."""

from __future__ import annotations

from collections.abc import Iterable

import gmpy2
import numpy as np
import numpy.typing as npt
from gmpy2 import mpz


class Bitset:
    """Static helpers over ``mpz`` bitsets. Bit ``i`` stands for sample ``i``."""

    @staticmethod
    def from_bools(values: npt.ArrayLike) -> mpz:
        """Pack a boolean vector into an ``mpz`` (index 0 is the least significant bit)."""
        flags = np.asarray(values, dtype=bool)
        if flags.size == 0:
            return mpz(0)
        packed = np.packbits(flags, bitorder="little").tobytes()
        return mpz(int.from_bytes(packed, "little"))

    @staticmethod
    def to_bools(bits: mpz, size: int) -> npt.NDArray[np.bool_]:
        """Unpack the low ``size`` bits of ``bits`` into a boolean vector."""
        if size == 0:
            return np.zeros(0, dtype=bool)
        raw = int(bits).to_bytes((size + 7) // 8, "little")
        unpacked = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        return unpacked[:size].astype(bool)

    @staticmethod
    def full(size: int) -> mpz:
        """All ``size`` low bits set."""
        return (mpz(1) << size) - 1

    @staticmethod
    def count(bits: mpz) -> int:
        return int(gmpy2.popcount(bits))

    @staticmethod
    def indices(bits: mpz) -> Iterable[int]:
        """Positions of the set bits, ascending."""
        position = gmpy2.bit_scan1(bits, 0)
        while position is not None:
            yield int(position)
            position = gmpy2.bit_scan1(bits, position + 1)
