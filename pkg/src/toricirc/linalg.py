"""Exact integer and rational linear algebra.

Vectors are plain tuples of Python ints. Matrices are :class:`IntMatrix`
instances holding their rows; all arithmetic is arbitrary precision and
rational steps go through :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


def support(v: Sequence[int]) -> tuple[int, ...]:
    """Indices of the nonzero entries of ``v`` (0-based)."""
    return tuple(i for i, x in enumerate(v) if x)


def sign_normalize(v: Sequence[int]) -> tuple[int, ...]:
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def primitive_part(v: Sequence[int]) -> tuple[int, ...]:
    """Divide ``v`` by the gcd of its entries and make the first nonzero entry positive.

    >>> primitive_part((2, -4, 6))
    (1, -2, 3)
    >>> primitive_part((-3, 3))
    (1, -1)
    """
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive part")
    return sign_normalize([x // g for x in v])


class IntMatrix:
    """Dense integer matrix, immutable, row-major."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        if not columns:
            raise ValueError("matrix needs at least one column")
        return cls(zip(*columns))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(c) for c in zip(*self.rows)]

    def submatrix(self, cols: Sequence[int]) -> "IntMatrix":
        return IntMatrix([r[j] for j in cols] for r in self.rows)

    def __matmul__(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.rows)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows))

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.rows]!r})"

    def to_text(self) -> str:
        lines = [f"{self.nrows} {self.ncols}"]
        lines += [" ".join(str(x) for x in r) for r in self.rows]
        return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> IntMatrix:
    """Read the ``n q`` header + rows text format; ``#`` lines are comments."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty matrix file")
    try:
        header = [int(x) for x in lines[0].split()]
    except ValueError:
        raise ValueError(f"bad header line: {lines[0]!r}") from None
    if len(header) != 2 or min(header) < 1:
        raise ValueError(f"header must be 'n q' with n, q >= 1, got {lines[0]!r}")
    n, q = header
    body = lines[1:]
    if len(body) != n:
        raise ValueError(f"expected {n} matrix rows, found {len(body)}")
    rows = []
    for ln in body:
        try:
            row = [int(x) for x in ln.split()]
        except ValueError:
            raise ValueError(f"non-integer entry in row {ln!r}") from None
        if len(row) != q:
            raise ValueError(f"expected {q} entries in row {ln!r}")
        rows.append(row)
    return IntMatrix(rows)


def _rows_of(A) -> list[list]:
    if isinstance(A, IntMatrix):
        return [list(r) for r in A.rows]
    return [list(r) for r in A]


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q. Returns (nonzero rows, pivot columns)."""
    M = [[Fraction(x) for x in r] for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        M[r] = [x / piv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(A) -> int:
    rows = _rows_of(A)
    if not rows or not rows[0]:
        return 0
    return len(rref(rows)[1])


def solve_rational(A, b: Sequence) -> tuple[Fraction, ...] | None:
    """Some rational solution of ``A x = b``, or None if inconsistent."""
    rows = _rows_of(A)
    ncols = len(rows[0])
    aug = [r + [bi] for r, bi in zip(rows, b)]
    R, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(R, pivots):
        x[c] = row[ncols]
    return tuple(x)


def rational_nullspace(A) -> list[tuple[Fraction, ...]]:
    """A Q-basis of the kernel, one vector per free column."""
    rows = _rows_of(A)
    ncols = len(rows[0])
    R, pivots = rref(rows)
    basis = []
    for f in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(R, pivots):
            v[c] = -row[f]
        basis.append(tuple(v))
    return basis


def _hermite_rows(vectors: list[list[int]]) -> list[tuple[int, ...]]:
    # Row-style Hermite form of a lattice basis; entries above pivots are
    # reduced into the centered range (-p/2, p/2].
    B = [list(v) for v in vectors]
    if not B:
        return []
    width = len(B[0])
    r = 0
    pivots = []
    for c in range(width):
        if r == len(B):
            break
        while True:
            nz = [i for i in range(r, len(B)) if B[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(B[i][c]), i))
            B[r], B[p] = B[p], B[r]
            clean = True
            for i in range(r + 1, len(B)):
                if B[i][c]:
                    f = B[i][c] // B[r][c]
                    B[i] = [a - f * b for a, b in zip(B[i], B[r])]
                    if B[i][c]:
                        clean = False
            if clean:
                break
        if any(B[i][c] for i in range(r, len(B))):
            if B[r][c] < 0:
                B[r] = [-x for x in B[r]]
            pivots.append((r, c))
            r += 1
    for pr, pc in pivots:
        p = B[pr][pc]
        for i in range(pr):
            x = B[i][pc]
            f = x // p
            if x - f * p > p // 2:
                f += 1
            if f:
                B[i] = [a - f * b for a, b in zip(B[i], B[pr])]
    return [tuple(v) for v in B[:r]]


def kernel_lattice_basis(A) -> list[tuple[int, ...]]:
    """Lattice basis of ``ker(A) ∩ Z^q``.

    Integer column reduction of ``A`` stacked over the identity: the unimodular
    transform's columns that end up annihilated by ``A`` span the integer
    kernel. The result is put in a canonical Hermite-like row form, so each
    vector is primitive with a positive leading entry.

    >>> kernel_lattice_basis(IntMatrix([[1, 1, 0], [0, 1, 1]]))
    [(1, -1, 1)]
    """
    M = A if isinstance(A, IntMatrix) else IntMatrix(A)
    n, q = M.shape
    cols = [list(M.column(j)) + [int(i == j) for i in range(q)] for j in range(q)]
    c = 0
    for r in range(n):
        if c == q:
            break
        while True:
            nz = [j for j in range(c, q) if cols[j][r] != 0]
            if not nz:
                break
            p = min(nz, key=lambda j: (abs(cols[j][r]), j))
            cols[c], cols[p] = cols[p], cols[c]
            clean = True
            for j in range(c + 1, q):
                if cols[j][r]:
                    f = cols[j][r] // cols[c][r]
                    cols[j] = [a - f * b for a, b in zip(cols[j], cols[c])]
                    if cols[j][r]:
                        clean = False
            if clean:
                c += 1
                break
    kernel = [col[n:] for col in cols[c:]]
    return _hermite_rows(kernel)
