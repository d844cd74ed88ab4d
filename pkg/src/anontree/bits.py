"""Bit-string plumbing for advice encoding.

Advice is a plain string of '0'/'1' characters, so ``len(advice)`` is the
size of advice in bits and tries can index individual bit positions.

Integers are written with Elias gamma codes, which are self-delimiting:
gamma(x) for x >= 1 is floor(log2 x) zeros followed by the binary
expansion of x, 2*floor(log2 x) + 1 bits total.  Fields whose value may
be zero are written as gamma(value + 1); the shift is fixed per field by
the layout, never inferred.
"""

from __future__ import annotations


def gamma_encode(x: int) -> str:
    if x < 1:
        raise ValueError(f"gamma code requires a positive integer, got {x}")
    binary = bin(x)[2:]
    return "0" * (len(binary) - 1) + binary


def gamma_length(x: int) -> int:
    if x < 1:
        raise ValueError(f"gamma code requires a positive integer, got {x}")
    return 2 * (x.bit_length() - 1) + 1


def uint_encode(x: int) -> str:
    """Gamma code with a +1 shift, for fields that may be zero."""
    return gamma_encode(x + 1)


def fixed_encode(value: int, width: int) -> str:
    if value < 0 or (width == 0 and value != 0) or value >= (1 << max(width, 1)):
        raise ValueError(f"value {value} does not fit in {width} bits")
    if width == 0:
        return ""
    return format(value, f"0{width}b")


class BitReader:
    """Sequential reader over a '0'/'1' string."""

    def __init__(self, bits: str, pos: int = 0):
        self.bits = bits
        self.pos = pos

    def read_bit(self) -> int:
        if self.pos >= len(self.bits):
            raise ValueError("bit string exhausted")
        b = self.bits[self.pos]
        self.pos += 1
        return 1 if b == "1" else 0

    def read_bits(self, count: int) -> str:
        if self.pos + count > len(self.bits):
            raise ValueError("bit string exhausted")
        chunk = self.bits[self.pos : self.pos + count]
        self.pos += count
        return chunk

    def read_fixed(self, width: int) -> int:
        if width == 0:
            return 0
        return int(self.read_bits(width), 2)

    def read_gamma(self) -> int:
        zeros = 0
        while self.read_bit() == 0:
            zeros += 1
        if zeros == 0:
            return 1
        return (1 << zeros) | self.read_fixed(zeros)

    def read_uint(self) -> int:
        """Inverse of :func:`uint_encode`."""
        return self.read_gamma() - 1

    def exhausted(self) -> bool:
        return self.pos >= len(self.bits)
