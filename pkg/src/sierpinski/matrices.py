"""The one-parameter Sierpinski matrix family, built two independent ways.

``MonomialMatrix`` stores the family itself: every nonzero entry of S_n(arg)
is arg raised to some power, so a row needs only (column, exponent) pairs and
the whole matrix costs 3^n small words.  ``PolyMatrix`` holds full
polynomial entries and is what products like S_n(X)*S_n(Y) live in.

The two constructors are deliberately disjoint code paths:

* ``build_recursive`` unfolds S_{n+1}(x) = S_1(x) (x) S_n(x), the Kronecker
  recurrence, block by block;
* ``build_closed_form`` fills row j from the closed form: entry (j, k) is
  arg**s(j-k) exactly when k is a carry-free summand (submask) of j.

Their agreement over all orders is one of the package's core checks.
"""

from __future__ import annotations

from bisect import bisect_left

from .algebra import ONE, Poly
from .digits import sum_of_digits
from .errors import SizeLimitError

__all__ = [
    "MonomialMatrix",
    "PolyMatrix",
    "MAX_BUILD_ORDER",
    "MAX_MUL_ORDER",
    "build_recursive",
    "build_closed_form",
    "identity",
    "kron",
    "matmul",
    "matrices_equal",
]

MAX_BUILD_ORDER = 12  # 3^12 ~ 5.3e5 stored entries
MAX_MUL_ORDER = 10


def _check_build_order(n: int, max_order: int) -> None:
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    if n > max_order:
        raise SizeLimitError(
            f"order {n} exceeds the construction limit {max_order}: "
            f"the matrix would hold 3^{n} = {3**n} entries"
        )


class MonomialMatrix:
    """2^order x 2^order matrix whose entries are powers of one polynomial.

    ``rows[j]`` lists (column, exponent) pairs sorted by column; entry (j, k)
    is ``argument ** exponent`` and absent columns are zero.
    """

    __slots__ = ("order", "argument", "rows")

    def __init__(self, order: int, argument: Poly, rows):
        self.order = order
        self.argument = argument
        self.rows = tuple(tuple(row) for row in rows)

    @property
    def size(self) -> int:
        return 1 << self.order

    def nonzero_count(self) -> int:
        return sum(len(row) for row in self.rows)

    def exponent(self, j: int, k: int) -> int | None:
        """Stored exponent at (j, k), or None where the entry is zero."""
        row = self.rows[j]
        i = bisect_left(row, (k,))
        if i < len(row) and row[i][0] == k:
            return row[i][1]
        return None

    def entry(self, j: int, k: int) -> Poly:
        e = self.exponent(j, k)
        return Poly() if e is None else self.argument**e

    def to_poly_matrix(self) -> "PolyMatrix":
        powers: dict[int, Poly] = {}
        rows = []
        for row in self.rows:
            out = {}
            for k, e in row:
                p = powers.get(e)
                if p is None:
                    p = powers[e] = self.argument**e
                if p:  # a zero argument kills every positive power
                    out[k] = p
            rows.append(out)
        return PolyMatrix(self.order, rows)

    def dump(self) -> str:
        """Full square grid, one row per line, tab-separated canonical entries."""
        return self.to_poly_matrix().dump()

    def __repr__(self) -> str:
        return f"MonomialMatrix(order={self.order}, argument={self.argument})"


class PolyMatrix:
    """Lower-triangular matrix of exact polynomials, zeros not stored."""

    __slots__ = ("order", "_rows")

    def __init__(self, order: int, rows):
        if order < 0:
            raise ValueError(f"order must be non-negative, got {order}")
        rows = list(rows)
        if len(rows) != 1 << order:
            raise ValueError(f"expected {1 << order} rows, got {len(rows)}")
        clean = []
        for j, row in enumerate(rows):
            if any(k > j for k in row):
                raise ValueError(f"row {j} has support above the diagonal")
            clean.append({k: p for k, p in sorted(row.items()) if p})
        self.order = order
        self._rows = tuple(clean)

    @property
    def size(self) -> int:
        return 1 << self.order

    def row(self, j: int) -> dict[int, Poly]:
        return dict(self._rows[j])

    def entry(self, j: int, k: int) -> Poly:
        return self._rows[j].get(k, Poly())

    def nonzero_count(self) -> int:
        return sum(len(row) for row in self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.order == other.order and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.order, tuple(frozenset(r.items()) for r in self._rows)))

    def __matmul__(self, other) -> "PolyMatrix":
        return matmul(self, other)

    def dump(self) -> str:
        lines = []
        for j in range(self.size):
            row = self._rows[j]
            lines.append("\t".join(str(row[k]) if k in row else "0" for k in range(self.size)))
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"PolyMatrix(order={self.order}, nonzeros={self.nonzero_count()})"


def build_recursive(n: int, argument: Poly, max_order: int = MAX_BUILD_ORDER) -> MonomialMatrix:
    """S_n(argument) by unfolding the Kronecker recurrence S_1 (x) S_{n-1}.

    Kronecker with S_1 = [[1, 0], [x, 1]] maps the current matrix M to
    [[M, 0], [x*M, M]]; in exponent form the x*M block raises every stored
    exponent by one and the second diagonal block copies M shifted.
    """
    _check_build_order(n, max_order)
    rows: list[list[tuple[int, int]]] = [[(0, 0)]]
    size = 1
    for _ in range(n):
        for j in range(size):
            base = rows[j]
            rows.append([(k, e + 1) for k, e in base] + [(k + size, e) for k, e in base])
        size <<= 1
    return MonomialMatrix(n, argument, rows)


def build_closed_form(n: int, argument: Poly, max_order: int = MAX_BUILD_ORDER) -> MonomialMatrix:
    """S_n(argument) directly from the entry formula.

    Row j holds arg**s(j-k) at each carry-free summand k of j (ascending
    submask enumeration) and zero elsewhere; no recursion involved.
    """
    _check_build_order(n, max_order)
    rows = []
    for j in range(1 << n):
        row = []
        k = 0
        while True:
            row.append((k, sum_of_digits(j - k)))
            if k == j:
                break
            k = (k - j) & j
        rows.append(row)
    return MonomialMatrix(n, argument, rows)


def identity(order: int) -> PolyMatrix:
    return PolyMatrix(order, [{j: ONE} for j in range(1 << order)])


def _promote(m: MonomialMatrix | PolyMatrix) -> PolyMatrix:
    return m.to_poly_matrix() if isinstance(m, MonomialMatrix) else m


def kron(a, b, max_order: int = MAX_BUILD_ORDER) -> PolyMatrix:
    """Kronecker product: block (i, j) of the result is a[i][j] * b."""
    a = _promote(a)
    b = _promote(b)
    order = a.order + b.order
    if order > max_order:
        raise SizeLimitError(
            f"combined order {order} exceeds the construction limit {max_order}: "
            f"the product would hold 3^{order} = {3**order} entries"
        )
    bs = b.size
    rows: list[dict[int, Poly]] = []
    for i in range(a.size):
        arow = a._rows[i]
        for r in range(bs):
            brow = b._rows[r]
            out = {}
            for j, scale in arow.items():
                for c, p in brow.items():
                    out[j * bs + c] = scale * p
            rows.append(out)
    return PolyMatrix(order, rows)


def matmul(a, b, max_order: int = MAX_MUL_ORDER) -> PolyMatrix:
    """Exact product of two equal-order lower-triangular matrices."""
    a = _promote(a)
    b = _promote(b)
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} != {b.order}")
    if a.order > max_order:
        raise SizeLimitError(
            f"order {a.order} exceeds the multiplication limit {max_order}: "
            f"each factor holds 3^{a.order} = {3**a.order} entries"
        )
    rows = []
    for j in range(a.size):
        acc: dict[int, Poly] = {}
        for k, left in a._rows[j].items():
            for l, right in b._rows[k].items():
                prod = left * right
                cur = acc.get(l)
                acc[l] = prod if cur is None else cur + prod
        rows.append({l: p for l, p in acc.items() if p})
    return PolyMatrix(a.order, rows)


def matrices_equal(a, b) -> bool:
    """Exact entry-by-entry equality, monomial entries expanded first."""
    a = _promote(a)
    b = _promote(b)
    return a == b
