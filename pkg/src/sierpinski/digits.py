"""Digit-level primitives: digit sums, carries, and carry-free decompositions.

Everything here works on plain non-negative integers.  The definitional
routines (`sum_of_digits`, `carry_free`, `carry_count`) walk the digits the
slow honest way; the bitwise shortcuts (`disjoint_bits`, `int.bit_count`)
are separate paths whose agreement with the definitional forms is pinned by
the test suite before anything else relies on them.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "DigitVector",
    "sum_of_digits",
    "carry_free",
    "disjoint_bits",
    "carry_count",
    "carry_count_grid",
    "carry_free_summands",
    "is_prime",
]


def _check_nonnegative(name: str, value: int) -> None:
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value}")


def is_prime(n: int) -> bool:
    """Trial-division primality test; intended for small bases and moduli."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class DigitVector:
    """Positional expansion of a non-negative integer, least-significant first.

    The zero value is canonically the empty expansion, so no digit vector
    ever carries a trailing zero digit.
    """

    __slots__ = ("value", "base", "digits")

    def __init__(self, value: int, base: int = 2):
        _check_nonnegative("value", value)
        if base < 2:
            raise ValueError(f"base must be >= 2, got {base}")
        self.value = value
        self.base = base
        digits = []
        while value:
            value, d = divmod(value, base)
            digits.append(d)
        self.digits = tuple(digits)

    def digit_sum(self) -> int:
        return sum(self.digits)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DigitVector):
            return NotImplemented
        return self.value == other.value and self.base == other.base

    def __hash__(self) -> int:
        return hash((self.value, self.base))

    def __repr__(self) -> str:
        return f"DigitVector({self.value}, base={self.base})"


def sum_of_digits(value: int, base: int = 2) -> int:
    """Sum of the base-`base` digits of `value` (population count for base 2)."""
    _check_nonnegative("value", value)
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    total = 0
    while value:
        value, d = divmod(value, base)
        total += d
    return total


def carry_free(a: int, b: int) -> bool:
    """True iff the binary long addition of a and b produces no carry.

    This is the definitional digit-walk form.  `disjoint_bits` is the
    equivalent single-instruction shortcut.
    """
    _check_nonnegative("a", a)
    _check_nonnegative("b", b)
    while a or b:
        if (a & 1) + (b & 1) > 1:
            return False
        a >>= 1
        b >>= 1
    return True


def disjoint_bits(a: int, b: int) -> bool:
    """Shortcut form of `carry_free`: the two words share no set bit."""
    return a & b == 0


def carry_count(n: int, k: int, base: int = 2) -> int:
    """Number of carries in the base-`base` long addition of k and n-k."""
    _check_nonnegative("n", n)
    _check_nonnegative("k", k)
    if k > n:
        raise ValueError(f"k must not exceed n, got k={k}, n={n}")
    if not is_prime(base):
        raise ValueError(f"base must be prime, got {base}")
    a, b = k, n - k
    carry = 0
    count = 0
    while a or b or carry:
        s = a % base + b % base + carry
        carry = 1 if s >= base else 0
        count += carry
        a //= base
        b //= base
    return count


def carry_count_grid(n_max: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Binary carry counts for every pair 0 <= k <= n < n_max at once.

    Returns (n, k, carries) as parallel flat arrays, pairs ordered by n then
    k.  The carries are produced by the same digit-wise long addition as
    `carry_count`, vectorized across all pairs; the scalar routine remains
    the reference the grid is checked against.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    lengths = np.arange(n_max, dtype=np.int64) + 1
    n = np.repeat(np.arange(n_max, dtype=np.uint32), lengths)
    k = np.concatenate([np.arange(m + 1, dtype=np.uint32) for m in range(n_max)])
    a, b = k, n - k
    carry = np.zeros(n.shape, dtype=np.uint8)
    count = np.zeros(n.shape, dtype=np.uint8)
    for i in range(int(n_max).bit_length() + 1):
        s = ((a >> i) & 1).astype(np.uint8)
        s += ((b >> i) & 1).astype(np.uint8)
        s += carry
        np.right_shift(s, 1, out=carry)  # carry iff digit sum >= 2
        count += carry
    return n, k, count


def carry_free_summands(m: int) -> list[int]:
    """All k in [0, m] with (k, m-k) carry-free, in increasing order.

    The carry-free k are exactly the bitwise submasks of m, enumerated here
    in ascending order via the (k - m) & m step.  The brute-force scan of
    [0, m] through `carry_free` is the oracle this is tested against.
    """
    _check_nonnegative("m", m)
    out = []
    k = 0
    while True:
        out.append(k)
        if k == m:
            return out
        k = (k - m) & m
