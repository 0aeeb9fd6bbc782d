"""Configurations, binomials and circuits of toric ideals."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .linalg import (
    IntMatrix,
    kernel_lattice_basis,
    primitive_part,
    rank,
    sign_normalize,
    solve_rational,
    support,
)


def _as_exponents(a) -> tuple[int, ...]:
    t = tuple(int(x) for x in a)
    if any(x < 0 for x in t):
        raise ValueError(f"exponents must be nonnegative: {t}")
    return t


@dataclass(frozen=True)
class Binomial:
    """``T^plus - T^minus`` with implicit coefficients +1 and -1."""

    plus: tuple[int, ...]
    minus: tuple[int, ...]

    def __post_init__(self):
        plus, minus = _as_exponents(self.plus), _as_exponents(self.minus)
        if len(plus) != len(minus):
            raise ValueError("terms live in different polynomial rings")
        if plus == minus:
            raise ValueError("zero binomial")
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)

    @classmethod
    def from_vector(cls, v: Sequence[int]) -> "Binomial":
        """``T^{v+} - T^{v-}``, oriented so the plus term is lex larger."""
        b = cls(tuple(max(x, 0) for x in v), tuple(max(-x, 0) for x in v))
        return b.normalized()

    @property
    def nvars(self) -> int:
        return len(self.plus)

    @property
    def vector(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.plus, self.minus))

    @property
    def degrees(self) -> tuple[int, int]:
        return sum(self.plus), sum(self.minus)

    @property
    def degree(self) -> int:
        return max(self.degrees)

    def swapped(self) -> "Binomial":
        return Binomial(self.minus, self.plus)

    def normalized(self) -> "Binomial":
        return self if self.plus > self.minus else self.swapped()

    def is_coprime(self) -> bool:
        return not any(a and b for a, b in zip(self.plus, self.minus))

    def format(self, names: Sequence[str] | None = None) -> str:
        names = names or [f"T{i + 1}" for i in range(self.nvars)]
        return f"{format_monomial(self.plus, names)} - {format_monomial(self.minus, names)}"

    def __str__(self):
        return self.format()


def format_monomial(a: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for e, name in zip(a, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class Configuration:
    """Ordered list of integer vectors, the columns of a matrix ``A``.

    Vectors may repeat. ``names`` label the matching polynomial variables.
    """

    vectors: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        vecs = tuple(tuple(int(x) for x in v) for v in self.vectors)
        if not vecs:
            raise ValueError("a configuration needs at least one vector")
        if len({len(v) for v in vecs}) != 1 or not vecs[0]:
            raise ValueError("all vectors must share one positive dimension")
        object.__setattr__(self, "vectors", vecs)
        names = self.names
        if names is None:
            names = tuple(f"T{i + 1}" for i in range(len(vecs)))
        names = tuple(names)
        if len(names) != len(vecs):
            raise ValueError("one name per vector")
        object.__setattr__(self, "names", names)

    @classmethod
    def from_matrix(cls, A, names=None) -> "Configuration":
        M = A if isinstance(A, IntMatrix) else IntMatrix(A)
        return cls(tuple(M.columns()), names)

    @property
    def matrix(self) -> IntMatrix:
        return IntMatrix.from_columns(self.vectors)

    @property
    def n(self) -> int:
        return len(self.vectors[0])

    @property
    def q(self) -> int:
        return len(self.vectors)

    def image(self, a: Sequence[int]) -> tuple[int, ...]:
        """``A·a``: the point of the lattice represented by the monomial ``T^a``."""
        out = [0] * self.n
        for e, v in zip(a, self.vectors):
            if e:
                for k, x in enumerate(v):
                    out[k] += e * x
        return tuple(out)

    def in_kernel(self, v: Sequence[int]) -> bool:
        return not any(self.image(v))

    def contains(self, b: Binomial) -> bool:
        """Whether ``b`` lies in the toric ideal."""
        return b.nvars == self.q and self.image(b.plus) == self.image(b.minus)

    def grading(self) -> tuple[Fraction, ...] | None:
        """A rational ``w`` with ``<w, v_i> = 1`` for every vector, if one exists."""
        return solve_rational(self.matrix.transpose(), [1] * self.q)


@dataclass(frozen=True)
class Circuit:
    vector: tuple[int, ...]
    binomial: Binomial = field(compare=False)

    @classmethod
    def from_vector(cls, v: Sequence[int]) -> "Circuit":
        return cls(tuple(v), Binomial.from_vector(v))

    @property
    def support(self) -> tuple[int, ...]:
        return support(self.vector)


def _kernel_generator(C: Configuration, cols: Sequence[int]) -> tuple[int, ...]:
    basis = kernel_lattice_basis(C.matrix.submatrix(cols))
    assert len(basis) == 1, "circuit support must have a one-dimensional kernel"
    v = [0] * C.q
    for j, x in zip(cols, basis[0]):
        v[j] = x
    return primitive_part(v)


def enumerate_circuits(C: Configuration) -> list[Circuit]:
    """All circuits of ``A``, sorted by (support size, support, vector).

    Column subsets are scanned by increasing size up to ``rank + 1``.
    A subset that contains no smaller circuit support is a circuit support
    exactly when it is dependent.
    """
    A = C.matrix
    r = rank(A)
    found: list[frozenset] = []
    circuits = []
    for size in range(1, min(r + 1, C.q) + 1):
        for S in combinations(range(C.q), size):
            Sset = frozenset(S)
            if any(F < Sset for F in found):
                continue
            if rank(A.submatrix(S)) < size:
                found.append(Sset)
                circuits.append(Circuit.from_vector(_kernel_generator(C, S)))
    circuits.sort(key=lambda c: (len(c.support), c.support, c.vector))
    return circuits


def matroid_circuit_supports(C: Configuration) -> set[frozenset]:
    """Circuits of the vector matroid of ``A`` as 0-based index sets."""
    return {frozenset(c.support) for c in enumerate_circuits(C)}


def in_harmony(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x * y >= 0 for x, y in zip(a, b))


def harmonious_circuit(C: Configuration, alpha: Sequence[int], circuits=None) -> Circuit:
    """First circuit (or negated circuit) in harmony with ``alpha`` and
    supported inside ``supp(alpha)``."""
    alpha = tuple(alpha)
    if len(alpha) != C.q or not any(alpha):
        raise ValueError("alpha must be a nonzero vector of length q")
    if not C.in_kernel(alpha):
        raise ValueError("alpha is not in the kernel of A")
    supp = set(support(alpha))
    for c in circuits if circuits is not None else enumerate_circuits(C):
        if not set(c.support) <= supp:
            continue
        for v in (c.vector, tuple(-x for x in c.vector)):
            if in_harmony(v, alpha):
                return Circuit(v, Binomial.from_vector(v))
    raise AssertionError("no harmonious circuit found for a kernel vector")


def is_circuit(C: Configuration, b: Binomial) -> bool:
    if b.nvars != C.q or not b.is_coprime():
        return False
    v = b.vector
    if not C.in_kernel(v) or primitive_part(v) != sign_normalize(v):
        return False
    S = support(v)
    A = C.matrix

    def r(cols):
        return rank(A.submatrix(cols)) if cols else 0

    if r(S) != len(S) - 1:
        return False
    return all(r([j for j in S if j != i]) == len(S) - 1 for i in S)
