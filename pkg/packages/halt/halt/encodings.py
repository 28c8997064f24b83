"""Number-theoretic encodings over the positive integers.

Everything here is a pure function of its arguments and works on Python's
arbitrary-precision ints. Arguments are positive integers throughout; the
functions do not re-validate that on every call since they sit on the
interpreter's hot path. Pairing and square roots of very wide ints
go through ``gmpy2``.
"""
from __future__ import annotations

import math

import gmpy2


def bitlen(n: int) -> int:
    """Number of binary digits of ``n`` (``n >= 1``)."""
    return n.bit_length()


# -- phi: 2-adic valuation plus one ------------------------------------------


def phi(n: int) -> int:
    """Return ``max{k : 2**(k-1) divides n}``.

    ``n & -n`` isolates the lowest set bit, whose bit length is the
    valuation plus one.
    """
    return (n & -n).bit_length()


def phi_preimage_count(n: int, limit: int) -> int:
    """Count ``k <= limit`` with ``phi(k) == n``."""
    return (limit >> (n - 1)) - (limit >> n)


def phi_fiber(n: int, j: int) -> int:
    """The ``j``-th element (``j >= 0``) of the fiber ``phi^-1(n)``."""
    return (2 * j + 1) << (n - 1)


# -- interleave: the linear-bound pairing ------------------------------------


def interleave(e: int, x: int) -> int:
    """Encode ``(e, x)`` as ``e1 0 e2 0 ... en 1 x1 ... xm`` in binary.

    Bit ``j`` of ``e`` (from the least significant end) moves to position
    ``2j + 1``; position 0 holds the closing separator.
    """
    spread = 1
    j = 0
    while e:
        if e & 1:
            spread |= 1 << (2 * j + 1)
        e >>= 1
        j += 1
    return (spread << x.bit_length()) | x


def interleave_bound(e: int) -> int:
    """Constant ``c`` with ``interleave(e, x) <= c * x`` for every ``x``."""
    return 1 << (2 * e.bit_length() + 1)


def deinterleave(z: int) -> tuple[int, int] | None:
    """Invert :func:`interleave`; ``None`` when ``z`` is not in its image."""
    bits = bin(z)[2:]
    i = 0
    while i + 1 < len(bits):
        if bits[i + 1] == "1":
            rest = bits[i + 2:]
            # x must be present and carry no leading zero.
            if not rest or rest[0] != "1":
                return None
            return int(bits[0:i + 1:2], 2), int(rest, 2)
        i += 2
    return None


# -- Cantor anti-diagonal bijection on Z+ x Z+ --------------------------------

# Nested program indices grow to millions of bits; past this width the
# arithmetic runs on GMP integers.
_GMP_BITS = 2048


def pair(i: int, j: int) -> int:
    if i.bit_length() > _GMP_BITS or j.bit_length() > _GMP_BITS:
        d = gmpy2.mpz(i) + j
        return int((d - 2) * (d - 1) // 2 + i)
    d = i + j
    return (d - 2) * (d - 1) // 2 + i


def unpair(z: int) -> tuple[int, int]:
    if z.bit_length() > _GMP_BITS:
        zz = gmpy2.mpz(z)
        # d is the anti-diagonal index i + j - 1.
        dd = (gmpy2.isqrt(8 * zz + 1) - 1) // 2
        if dd * (dd + 1) // 2 < zz:
            dd += 1
        ii = zz - dd * (dd - 1) // 2
        return int(ii), int(dd + 1 - ii)
    d = (math.isqrt(8 * z + 1) - 1) // 2
    if d * (d + 1) // 2 < z:
        d += 1
    i = z - d * (d - 1) // 2
    return i, d + 1 - i


# -- squares ------------------------------------------------------------------


def square_split(x: int) -> int | None:
    """Return ``y`` with ``y * y == x``, or ``None`` for a non-square."""
    if x.bit_length() > _GMP_BITS:
        root, rem = gmpy2.isqrt_rem(gmpy2.mpz(x))
        return int(root) if rem == 0 else None
    root = math.isqrt(x)
    return root if root * root == x else None


def is_square(x: int) -> bool:
    return square_split(x) is not None
