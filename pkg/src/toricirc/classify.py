"""Square-free terms, balanced circuits, connectors and generation-by-circuits checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import floor
from typing import Iterator, Sequence

from .circuits import Binomial, Circuit, Configuration, enumerate_circuits
from .groebner import (
    GroebnerBasis,
    buchberger,
    ideal_membership,
    minimal_binomial_generators,
    toric_ideal_generators,
)
from .linalg import rank, solve_rational, support

HOLDS, FAILS, UNKNOWN = "holds", "fails", "unknown"


class TheoremViolation(AssertionError):
    """The equivalences for homogeneous normal configurations did not hold.

    Raised only inside the normal regime, where it signals an engine bug.
    """


def has_square_free_term(b: Binomial) -> bool:
    return max(b.plus) <= 1 or max(b.minus) <= 1


def is_balanced(b: Binomial) -> bool:
    return max(b.plus) == max(b.minus)


def sides(b: Binomial) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Supports of the lower-max and higher-max terms of an unbalanced binomial."""
    if is_balanced(b):
        raise ValueError("connectors are defined only for unbalanced circuits")
    lo, hi = (b.plus, b.minus) if max(b.plus) < max(b.minus) else (b.minus, b.plus)
    return support(lo), support(hi)


def _as_binomial(g) -> Binomial:
    return g.binomial if isinstance(g, Circuit) else g


def is_homogeneous(C: Configuration) -> bool:
    return C.grading() is not None


def _degree(w, z) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(w, z)), Fraction(0))


@dataclass(frozen=True)
class ConnectorCertificate:
    circuit: Circuit
    connector: Binomial
    membership_witness: bool


def is_connector(cand: Binomial, g, C: Configuration) -> bool:
    """Shape test for a connector of the unbalanced circuit ``g``, plus
    membership of ``cand`` in the toric ideal. Either orientation of ``cand``
    is accepted."""
    lo, hi = sides(_as_binomial(g))
    if not C.contains(cand):
        return False
    lo, hi = set(lo), set(hi)
    for sq, other in ((cand.plus, cand.minus), (cand.minus, cand.plus)):
        if max(sq) != 1:
            continue
        if set(support(sq)) <= lo and set(support(other)) & hi:
            return True
    return False


def _monomials_with_image(C: Configuration, target, d: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(C.q), d):
        a = [0] * C.q
        for j in combo:
            a[j] += 1
        if C.image(a) == target:
            out.append(tuple(a))
    return out


def iter_connectors(C: Configuration, g, maxdeg: int = 4) -> Iterator[Binomial]:
    """Connectors of ``g`` whose square-free term has degree at most ``maxdeg``,
    in canonical order (square-free support by size then lex, partner
    monomials lex descending). Requires a homogeneous configuration, which
    pins the partner degree to the size of the square-free term."""
    b = _as_binomial(g)
    lo, hi = sides(b)
    if not is_homogeneous(C):
        raise ValueError("connector search requires a homogeneous configuration")
    hi = set(hi)
    for size in range(1, min(len(lo), maxdeg) + 1):
        for S in combinations(lo, size):
            sq = tuple(int(j in S) for j in range(C.q))
            target = C.image(sq)
            for c in sorted(_monomials_with_image(C, target, size), reverse=True):
                if c != sq and hi & set(support(c)):
                    yield Binomial(sq, c)


def connector_search_exhaustive(g, maxdeg: int) -> bool:
    lo, _ = sides(_as_binomial(g))
    return len(lo) <= maxdeg


def _sqfree_circuit_basis(C: Configuration, circuits=None) -> GroebnerBasis:
    circuits = enumerate_circuits(C) if circuits is None else circuits
    return buchberger([c.binomial for c in circuits if has_square_free_term(c.binomial)])


def find_connector(C: Configuration, g: Circuit, maxdeg: int = 4, sqfree_basis=None):
    """First connector of ``g`` in canonical order, or None when the bounded
    search finds nothing."""
    if is_balanced(_as_binomial(g)):
        raise ValueError("connectors are defined only for unbalanced circuits")
    for cand in iter_connectors(C, g, maxdeg):
        if sqfree_basis is None:
            sqfree_basis = _sqfree_circuit_basis(C)
        return ConnectorCertificate(g, cand, ideal_membership(cand, sqfree_basis))
    return None


def default_normality_bound(C: Configuration, circuits=None) -> int:
    circuits = enumerate_circuits(C) if circuits is None else circuits
    return max([2 * c.binomial.degree for c in circuits] + [1])


def _fundamental_points(C: Configuration):
    # Lattice points of the semigroup's group lying in the half-open
    # parallelepiped of each linearly independent spanning subset.
    A = C.matrix
    r = rank(A)
    seen = set()
    for B in combinations(range(C.q), r):
        if rank(A.submatrix(B)) < r:
            continue
        AB = A.submatrix(B)
        gens = []
        for v in C.vectors:
            lam = solve_rational(AB, v)
            f = tuple(x - floor(x) for x in lam)
            if any(f):
                gens.append(f)
        group = {tuple(Fraction(0) for _ in B)}
        frontier = list(group)
        while frontier:
            nxt = []
            for x in frontier:
                for h in gens:
                    y = tuple((a + b) - floor(a + b) for a, b in zip(x, h))
                    if y not in group:
                        group.add(y)
                        nxt.append(y)
            frontier = nxt
        for f in group:
            z = [Fraction(0)] * C.n
            for coef, j in zip(f, B):
                for k, x in enumerate(C.vectors[j]):
                    z[k] += coef * x
            z = tuple(int(x) for x in z)
            if z not in seen:
                seen.add(z)
                yield z


def in_semigroup(C: Configuration, z: Sequence[int], degree: int, _memo=None) -> bool:
    """Whether ``z`` is a sum of exactly ``degree`` configuration vectors."""
    memo = {} if _memo is None else _memo
    z = tuple(z)
    if degree == 0:
        return not any(z)
    if (z, degree) in memo:
        return memo[(z, degree)]
    ok = False
    for v in dict.fromkeys(C.vectors):
        if in_semigroup(C, tuple(a - b for a, b in zip(z, v)), degree - 1, memo):
            ok = True
            break
    memo[(z, degree)] = ok
    return ok


def is_normal_up_to(C: Configuration, D: int | None = None):
    """Search for a point of ``ZA ∩ R+A`` of degree at most ``D`` outside ``NA``.

    Returns ``(True, None)`` when none exists, else ``(False, z)`` with ``z``
    the least such point by (degree, lex). Any gap of least degree lies in the
    fundamental parallelepiped of some basis of columns, so only those
    finitely many points are tested. The verdict is bounded by ``D``.
    """
    w = C.grading()
    if w is None:
        raise ValueError("normality oracle requires a homogeneous configuration")
    if D is None:
        D = default_normality_bound(C)
    gaps = []
    memo: dict = {}
    for z in _fundamental_points(C):
        d = _degree(w, z)
        assert d.denominator == 1
        d = int(d)
        if 0 < d <= D and not in_semigroup(C, z, d, memo):
            gaps.append((d, z))
    if not gaps:
        return True, None
    return False, min(gaps)[1]


@dataclass
class GeneratorReport:
    cond_a: bool
    cond_b: bool
    cond_c: str
    homogeneous: bool
    normal_up_to: tuple[int, bool] | None
    gap_witness: tuple[int, ...] | None = None
    witnesses: list[Binomial] = field(default_factory=list)
    connectors: list[ConnectorCertificate] = field(default_factory=list)
    connector_bound: int = 4
    generators: list[Binomial] = field(default_factory=list)

    @property
    def normal(self) -> bool | None:
        return None if self.normal_up_to is None else self.normal_up_to[1]


def check_generation_by_circuits(
    C: Configuration, maxdeg: int = 4, normality_bound: int | None = None
) -> GeneratorReport:
    """Decide generation of the toric ideal by circuits and by circuits with a
    square-free term, and search connectors for every unbalanced circuit.

    Inside the homogeneous normal regime the three conditions must agree;
    disagreement raises :class:`TheoremViolation`.
    """
    circuits = enumerate_circuits(C)
    homogeneous = is_homogeneous(C)
    if homogeneous:
        gens = minimal_binomial_generators(C)
    else:
        gens = list(toric_ideal_generators(C).generators)
    all_basis = buchberger([c.binomial for c in circuits])
    sq_basis = _sqfree_circuit_basis(C, circuits)
    fail_a = [f for f in gens if not ideal_membership(f, all_basis)]
    fail_b = [f for f in gens if not ideal_membership(f, sq_basis)]

    cond_c = HOLDS
    certs = []
    if not homogeneous:
        cond_c = UNKNOWN if any(not is_balanced(c.binomial) for c in circuits) else HOLDS
    else:
        for c in circuits:
            if is_balanced(c.binomial):
                continue
            hit = None
            first = None
            for cand in iter_connectors(C, c, maxdeg):
                cert = ConnectorCertificate(c, cand, ideal_membership(cand, sq_basis))
                first = first or cert
                if cert.membership_witness:
                    hit = cert
                    break
            if hit is not None:
                certs.append(hit)
                continue
            if first is not None:
                certs.append(first)
            if connector_search_exhaustive(c, maxdeg):
                cond_c = FAILS
            elif cond_c == HOLDS:
                cond_c = UNKNOWN

    normal_up_to = None
    gap = None
    if homogeneous:
        D = default_normality_bound(C, circuits) if normality_bound is None else normality_bound
        ok, gap = is_normal_up_to(C, D)
        normal_up_to = (D, ok)

    report = GeneratorReport(
        cond_a=not fail_a,
        cond_b=not fail_b,
        cond_c=cond_c,
        homogeneous=homogeneous,
        normal_up_to=normal_up_to,
        gap_witness=gap,
        witnesses=fail_b,
        connectors=certs,
        connector_bound=maxdeg,
        generators=gens,
    )
    if homogeneous and normal_up_to[1]:
        if report.cond_a != report.cond_b:
            raise TheoremViolation(f"cond_a={report.cond_a} but cond_b={report.cond_b}")
        if cond_c != UNKNOWN and (cond_c == HOLDS) != report.cond_a:
            raise TheoremViolation(f"cond_c={cond_c} but cond_a={report.cond_a}")
    return report
