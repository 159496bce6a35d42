"""Executable checks of the digit-sum identities behind the matrix family.

Each verifier recomputes both sides of its identity from independent
ingredients and compares exactly:

* the digital binomial identity (x+y)^s(m) = sum of x^s(k) y^s(m-k) over
  carry-free decompositions k + (m-k) = m;
* its restatement through additivity of the digit sum;
* its collapse to the classical binomial theorem at m = 2^n - 1;
* Kummer's carry-count formula for prime-power divisibility of binomials;
* the mod-2 Pascal triangle as the 0/1 pattern of the matrix family.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import ONE, Poly, X, Y, binomial, p_adic_valuation
from .digits import carry_count, carry_free, carry_free_summands, is_prime, sum_of_digits
from .errors import SizeLimitError
from .matrices import build_closed_form

__all__ = [
    "TermList",
    "TriangleMod",
    "Report",
    "EXPONENT_CAP",
    "digital_expansion",
    "exponent_pair_counts",
    "verify_digital_binomial",
    "verify_additivity_form",
    "verify_classical_reduction",
    "verify_kummer",
    "pascal_mod",
    "verify_triangle_matrix_correspondence",
]

EXPONENT_CAP = 24  # 2^24 summands is the default ceiling for one expansion

# Expansions up to this digit sum are summed straight off the materialized
# TermList; larger ones stream through the blocked numpy kernel instead of
# holding 2^s(m) tuples in memory.
_MATERIALIZE_CAP = 12

_BLOCK_BITS = 17  # kernel chunk of 2^17 entries keeps buffers cache-resident


@dataclass(frozen=True)
class TermList:
    """Exponent pairs of one digital binomial expansion, ascending in k.

    Each term is (k, s(k), s(m-k)) for a carry-free summand k of m.
    """

    m: int
    terms: tuple[tuple[int, int, int], ...]

    def __len__(self) -> int:
        return len(self.terms)

    def collect(self) -> Poly:
        """Sum of X^s(k) * Y^s(m-k) over the listed terms."""
        counts: dict[tuple[int, int], int] = {}
        for _, a, b in self.terms:
            counts[(a, b)] = counts.get((a, b), 0) + 1
        return Poly(counts)


@dataclass(frozen=True)
class TriangleMod:
    """The first `rows` rows of Pascal's triangle reduced mod a prime."""

    modulus: int
    cells: tuple[tuple[int, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.cells)

    def row(self, n: int) -> tuple[int, ...]:
        return self.cells[n]


@dataclass(frozen=True)
class Report:
    """Outcome of one verification run, serializable as key:value lines."""

    identity: str
    parameter: str
    passed: bool
    lhs: str = ""
    rhs: str = ""
    first_mismatch: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def __bool__(self) -> bool:
        return self.passed

    def to_text(self) -> str:
        lines = [
            f"identity: {self.identity}",
            f"parameter: {self.parameter}",
            f"status: {self.status}",
        ]
        if self.lhs:
            lines.append(f"lhs: {self.lhs}")
        if self.rhs:
            lines.append(f"rhs: {self.rhs}")
        if self.first_mismatch:
            lines.append(f"first_mismatch: {self.first_mismatch}")
        return "\n".join(lines)


def digital_expansion(m: int) -> TermList:
    """TermList of m: one (k, s(k), s(m-k)) triple per carry-free summand."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    terms = tuple((k, sum_of_digits(k), sum_of_digits(m - k)) for k in carry_free_summands(m))
    return TermList(m, terms)


def _fill_submasks(mask: int, buf: np.ndarray) -> np.ndarray:
    buf[0] = 0
    half = 1
    while mask:
        bit = mask & -mask
        np.add(buf[:half], np.uint64(bit), out=buf[half : 2 * half])
        half <<= 1
        mask ^= bit
    return buf[:half]


def _low_bits(mask: int, count: int) -> int:
    out = 0
    for _ in range(count):
        bit = mask & -mask
        out |= bit
        mask ^= bit
    return out


def exponent_pair_counts(m: int) -> dict[tuple[int, int], int]:
    """Multiset of (s(k), s(m-k)) over every carry-free summand k of m.

    Streams the full enumeration in cache-sized blocks: every k is visited
    and both digit sums are popcounted from the actual integers k and m-k,
    so nothing here assumes the additivity being verified downstream.
    Requires m < 2^64 for the vectorized popcounts.
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    if m >> 64:
        raise SizeLimitError(f"m must fit in 64 bits, got {m.bit_length()} bits")
    sigma = m.bit_count()
    low = _low_bits(m, min(sigma, _BLOCK_BITS))
    high = m ^ low
    lowbuf = np.empty(1 << min(sigma, _BLOCK_BITS), dtype=np.uint64)
    subs_low = _fill_submasks(low, lowbuf)
    size = subs_low.size
    work = np.empty(size, dtype=np.uint64)
    pa = np.empty(size, dtype=np.uint8)
    pb = np.empty(size, dtype=np.uint8)
    keys = np.empty(size, dtype=np.uint16)
    bins = ((64 << 8) | 64) + 1  # keys pack (s(k), s(m-k)), each < 65
    totals = np.zeros(bins, dtype=np.int64)
    h = 0
    while True:
        np.add(subs_low, np.uint64(h), out=work)  # k = h | low, disjoint parts
        np.bitwise_count(work, out=pa)
        np.subtract(np.uint64(m - h), subs_low, out=work)  # m - k
        np.bitwise_count(work, out=pb)
        keys[:] = pa
        keys <<= 8
        keys |= pb
        totals += np.bincount(keys, minlength=bins)
        if h == high:
            break
        h = (h - high) & high
    return {(key >> 8, key & 0xFF): int(c) for key, c in enumerate(totals) if c}


def verify_digital_binomial(m: int, exponent_cap: int = EXPONENT_CAP) -> Report:
    """Compare (X+Y)^s(m) against the carry-free expansion of m, exactly."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    sigma = sum_of_digits(m)
    if sigma > exponent_cap:
        raise SizeLimitError(
            f"s({m}) = {sigma} exceeds the exponent cap {exponent_cap}: "
            f"the expansion would hold 2^{sigma} terms"
        )
    lhs = (X + Y) ** sigma
    if sigma <= _MATERIALIZE_CAP:
        rhs = digital_expansion(m).collect()
    else:
        rhs = Poly(exponent_pair_counts(m))
    passed = lhs == rhs
    mismatch = ""
    if not passed:
        diff = lhs - rhs
        (a, b), c = min(diff.terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0][0]))
        mismatch = f"coefficient of X^{a}*Y^{b} differs by {c}"
    return Report(
        identity="digital-binomial",
        parameter=f"m={m}",
        passed=passed,
        lhs=str(lhs),
        rhs=str(rhs),
        first_mismatch=mismatch,
    )


def verify_additivity_form(m: int) -> bool:
    """Check {k: (k, m-k) carry-free} == {k: s(k)+s(m-k) == s(m)} over [0, m].

    Deliberately a full scan of [0, m], not a submask walk: this is the
    independent oracle for the summand enumerator.
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    sigma = sum_of_digits(m)
    for k in range(m + 1):
        if carry_free(k, m - k) != (sum_of_digits(k) + sum_of_digits(m - k) == sigma):
            return False
    return True


def verify_classical_reduction(n: int) -> bool:
    """At m = 2^n - 1 the expansion must collapse to the binomial theorem.

    Collects the expansion's exponent pairs and demands the multiplicity of
    X^k*Y^(n-k) be exactly binomial(n, k), with no stray pairs.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > EXPONENT_CAP:
        raise SizeLimitError(f"n = {n} exceeds the exponent cap {EXPONENT_CAP}")
    counts = exponent_pair_counts((1 << n) - 1)
    if set(counts) != {(k, n - k) for k in range(n + 1)}:
        return False
    return all(counts[(k, n - k)] == binomial(n, k) for k in range(n + 1))


def verify_kummer(n_max: int, p: int, max_rows: int = 1024) -> Report:
    """Check v_p(binomial(n, k)) == carries of k + (n-k) for all n < n_max.

    The binomials are grown by the additive Pascal recurrence in exact
    integers, keeping this path independent of the multiplicative formula
    behind binomial().
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    if n_max > max_rows:
        raise SizeLimitError(f"n_max = {n_max} exceeds the practical limit {max_rows}")
    row = [1]
    for n in range(n_max):
        for k, coeff in enumerate(row):
            val = p_adic_valuation(coeff, p)
            carries = carry_count(n, k, p)
            if val != carries:
                return Report(
                    identity="kummer",
                    parameter=f"n_max={n_max} p={p}",
                    passed=False,
                    lhs=f"valuation {val}",
                    rhs=f"carries {carries}",
                    first_mismatch=f"n={n} k={k} binomial={coeff}",
                )
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return Report(identity="kummer", parameter=f"n_max={n_max} p={p}", passed=True)


def pascal_mod(rows: int, p: int) -> TriangleMod:
    """First `rows` rows of Pascal's triangle mod p, by the mod-p recurrence."""
    if rows < 1:
        raise ValueError(f"rows must be positive, got {rows}")
    if rows > 1 << 14:
        raise SizeLimitError(f"rows = {rows} exceeds the limit {1 << 14}")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    cells = []
    row = (1,)
    for n in range(rows):
        cells.append(row)
        row = (1,) + tuple((row[i] + row[i + 1]) % p for i in range(n)) + (1,)
    return TriangleMod(modulus=p, cells=tuple(cells))


def verify_triangle_matrix_correspondence(n: int) -> bool:
    """The 0/1 pattern of S_n(1) must equal Pascal's triangle mod 2."""
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    matrix = build_closed_form(n, ONE)
    triangle = pascal_mod(matrix.size, 2)
    for j in range(matrix.size):
        stored = dict(matrix.rows[j])
        residues = triangle.row(j)
        for k in range(j + 1):
            present = k in stored
            if present != (residues[k] == 1):
                return False
            if present and matrix.entry(j, k) != ONE:
                return False
    return True
