"""Dense linear algebra over GF(2).

Vectors are bit-packed into Python integers: coordinate ``j`` is bit ``j``.
Row reduction always picks the leftmost available pivot, so kernel bases
come out in a fixed order for a given input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import LengthMismatch, NoSolution

__all__ = [
    "F2Vector",
    "F2Matrix",
    "AffineSolution",
    "gf2_solve_affine",
    "gf2_rank",
    "symplectic_pairing",
]


@dataclass(frozen=True)
class F2Vector:
    """A vector of fixed length ``n`` with entries in {0, 1}."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bit mask {self.bits:#x} does not fit in length {self.n}")

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> "F2Vector":
        mask = 0
        n = 0
        for j, v in enumerate(values):
            if v not in (0, 1, True, False):
                raise ValueError(f"entry {j} is {v!r}, expected 0 or 1")
            if v:
                mask |= 1 << j
            n = j + 1
        return cls(n, mask)

    @classmethod
    def zeros(cls, n: int) -> "F2Vector":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "F2Vector":
        return cls(n, (1 << n) - 1)

    @classmethod
    def unit(cls, n: int, i: int) -> "F2Vector":
        if not 0 <= i < n:
            raise IndexError(f"unit index {i} out of range for length {n}")
        return cls(n, 1 << i)

    def _check(self, other: "F2Vector") -> None:
        if not isinstance(other, F2Vector):
            raise TypeError(f"expected F2Vector, got {type(other).__name__}")
        if other.n != self.n:
            raise LengthMismatch(f"length {self.n} vs {other.n}")

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if i < 0:
            i += self.n
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __iter__(self) -> Iterator[int]:
        return (((self.bits >> j) & 1) for j in range(self.n))

    def __add__(self, other: "F2Vector") -> "F2Vector":
        self._check(other)
        return F2Vector(self.n, self.bits ^ other.bits)

    __sub__ = __add__
    __xor__ = __add__

    def scale(self, c: int) -> "F2Vector":
        return self if c % 2 else F2Vector(self.n, 0)

    def dot(self, other: "F2Vector") -> int:
        self._check(other)
        return (self.bits & other.bits).bit_count() & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def to_list(self) -> list[int]:
        return list(self)

    def flip(self, i: int) -> "F2Vector":
        return self + F2Vector.unit(self.n, i)

    def __repr__(self) -> str:
        return f"F2Vector({''.join(str(b) for b in self)})"


@dataclass(frozen=True)
class F2Matrix:
    """Rectangular matrix stored as a tuple of row vectors."""

    rows: tuple[F2Vector, ...]
    ncols: int

    def __post_init__(self):
        for r in self.rows:
            if r.n != self.ncols:
                raise LengthMismatch(f"row of length {r.n} in a matrix with {self.ncols} columns")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> "F2Matrix":
        vecs = tuple(F2Vector.from_bits(int(x) % 2 for x in r) for r in rows)
        if ncols is None:
            if not vecs:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = vecs[0].n
        return cls(vecs, ncols)

    @classmethod
    def from_rows(cls, rows: Sequence[F2Vector], ncols: int | None = None) -> "F2Matrix":
        rows = tuple(rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = rows[0].n
        return cls(rows, ncols)

    @classmethod
    def from_columns(cls, cols: Sequence[F2Vector], nrows: int) -> "F2Matrix":
        masks = [0] * nrows
        for j, c in enumerate(cols):
            if c.n != nrows:
                raise LengthMismatch(f"column {j} has length {c.n}, expected {nrows}")
            for i in range(nrows):
                if (c.bits >> i) & 1:
                    masks[i] |= 1 << j
        return cls(tuple(F2Vector(len(cols), m) for m in masks), len(cols))

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls(tuple(F2Vector.unit(n, i) for i in range(n)), n)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "F2Matrix":
        return cls(tuple(F2Vector.zeros(ncols) for _ in range(nrows)), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def column(self, j: int) -> F2Vector:
        return F2Vector(self.nrows, sum(r[j] << i for i, r in enumerate(self.rows)))

    def columns(self) -> list[F2Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "F2Matrix":
        return F2Matrix(tuple(self.columns()), self.nrows)

    def __matmul__(self, other):
        if isinstance(other, F2Vector):
            if other.n != self.ncols:
                raise LengthMismatch(f"matrix has {self.ncols} columns, vector has length {other.n}")
            return F2Vector(self.nrows, sum(r.dot(other) << i for i, r in enumerate(self.rows)))
        if isinstance(other, F2Matrix):
            if other.nrows != self.ncols:
                raise LengthMismatch(f"shapes {self.shape} and {other.shape} do not compose")
            cols = [self @ c for c in other.columns()]
            return F2Matrix.from_columns(cols, self.nrows)
        return NotImplemented

    def __add__(self, other: "F2Matrix") -> "F2Matrix":
        if self.shape != other.shape:
            raise LengthMismatch(f"shapes {self.shape} and {other.shape} differ")
        return F2Matrix(tuple(a + b for a, b in zip(self.rows, other.rows)), self.ncols)

    def to_lists(self) -> list[list[int]]:
        return [r.to_list() for r in self.rows]


@dataclass(frozen=True)
class AffineSolution:
    particular: F2Vector
    kernel_basis: tuple[F2Vector, ...]

    def solutions(self) -> Iterator[F2Vector]:
        """Every solution, each exactly once (2**len(kernel_basis) of them)."""
        k = len(self.kernel_basis)
        for mask in range(1 << k):
            x = self.particular
            for i in range(k):
                if (mask >> i) & 1:
                    x = x + self.kernel_basis[i]
            yield x


def _rref(rows: list[int], ncols: int) -> list[int]:
    """Reduce bitmask rows in place to reduced row echelon form.

    Returns the pivot columns, leftmost first.
    """
    pivots = []
    r = 0
    for col in range(ncols):
        bit = 1 << col
        found = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if found is None:
            continue
        rows[r], rows[found] = rows[found], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return pivots


def gf2_rank(A: F2Matrix) -> int:
    return len(_rref([r.bits for r in A.rows], A.ncols))


def gf2_solve_affine(A: F2Matrix, b: F2Vector) -> AffineSolution:
    """Solve ``A x = b``.

    The particular solution has every free variable set to 0; the kernel
    basis has one vector per free column, in increasing column order.

    Raises
    ------
    NoSolution
        If ``b`` is not in the column space of ``A``.
    """
    if b.n != A.nrows:
        raise LengthMismatch(f"A has {A.nrows} rows but b has length {b.n}")
    n = A.ncols
    rhs_bit = 1 << n
    rows = [r.bits | (rhs_bit if b[i] else 0) for i, r in enumerate(A.rows)]
    pivots = _rref(rows, n)
    for row in rows[len(pivots):]:
        if row == rhs_bit:
            raise NoSolution("right-hand side is outside the column space")
    x = 0
    for r, col in enumerate(pivots):
        if rows[r] & rhs_bit:
            x |= 1 << col
    pivot_set = set(pivots)
    kernel = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = 1 << free
        for r, col in enumerate(pivots):
            if (rows[r] >> free) & 1:
                v |= 1 << col
        kernel.append(F2Vector(n, v))
    return AffineSolution(F2Vector(n, x), tuple(kernel))


def symplectic_pairing(g: int, x: F2Vector, y: F2Vector) -> int:
    """Mod-2 intersection number in the basis a_1..a_g, b_1..b_g.

    Coordinates ``0..g-1`` hold the a's and ``g..2g-1`` the b's.
    """
    if x.n != 2 * g or y.n != 2 * g:
        raise LengthMismatch(f"expected vectors of length {2 * g}, got {x.n} and {y.n}")
    low = (1 << g) - 1
    xa, xb = x.bits & low, x.bits >> g
    ya, yb = y.bits & low, y.bits >> g
    return ((xa & yb).bit_count() + (xb & ya).bit_count()) & 1
