"""Binomial Gröbner bases, saturation and toric ideal generators.

Every polynomial handled here is a pure difference of two monomials, so an
element is stored as a ``(lead, trail)`` pair of exponent tuples. The normal
form of a monomial modulo such a basis is again a monomial, which makes
ideal membership an equality test of two normal forms.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .circuits import Binomial, Configuration
from .linalg import kernel_lattice_basis


class BinomialClosureError(RuntimeError):
    """A Buchberger step produced something that is not a binomial."""


class MonomialOrder:
    """Total order on exponent vectors, exposed through :meth:`key`.

    ``kind`` is ``"grevlex"``, ``"grlex"`` or ``"lex"``; ``perm`` lists the
    variables from most to least significant. Graded kinds accept positive
    integer ``weights`` in place of the standard degree.
    """

    KINDS = ("grevlex", "grlex", "lex")

    def __init__(self, kind: str = "grevlex", perm: Sequence[int] | None = None, weights=None):
        if kind not in self.KINDS:
            raise ValueError(f"unknown monomial order {kind!r}")
        if weights is not None and (kind == "lex" or min(weights) <= 0):
            raise ValueError("weights must be positive and need a graded order")
        self.kind = kind
        self.perm = None if perm is None else tuple(perm)
        self.weights = None if weights is None else tuple(weights)

    @classmethod
    def variable_last(cls, i: int, q: int, weights=None) -> "MonomialOrder":
        """Graded reverse lex with ``T_i`` the cheapest variable."""
        return cls("grevlex", [j for j in range(q) if j != i] + [i], weights)

    def degree(self, a: Sequence[int]) -> int:
        if self.weights is None:
            return sum(a)
        return sum(w * x for w, x in zip(self.weights, a))

    def key(self, a: Sequence[int]):
        b = a if self.perm is None else [a[p] for p in self.perm]
        if self.kind == "lex":
            return tuple(b)
        if self.kind == "grlex":
            return (self.degree(a), tuple(b))
        return (self.degree(a), tuple(-x for x in reversed(b)))

    def _ident(self):
        return (self.kind, self.perm, self.weights)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, perm={self.perm}, weights={self.weights})"


class _EliminationOrder:
    # Block order: total degree in the trailing `k` variables first, then `base`.
    def __init__(self, base: MonomialOrder, k: int):
        self.base = base
        self.k = k

    def key(self, a):
        return (sum(a[-self.k:]), self.base.key(a[: -self.k]))


GREVLEX = MonomialOrder("grevlex")


class BinomialIdeal:
    """Ideal generated by binomials, deduplicated up to sign and term swap."""

    def __init__(self, generators: Iterable[Binomial] = (), ambient: Configuration | None = None):
        seen = {}
        for g in generators:
            seen.setdefault(g.normalized(), None)
        self.generators: tuple[Binomial, ...] = tuple(seen)
        self.ambient = ambient

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"BinomialIdeal({[str(g) for g in self.generators]})"


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple[Binomial, ...]
    order: MonomialOrder
    reduced: bool = True

    def normal_form(self, a: Sequence[int]) -> tuple[int, ...]:
        return _normal_form(tuple(a), [(g.plus, g.minus) for g in self.elements])

    def __contains__(self, f: Binomial) -> bool:
        return ideal_membership(f, self)

    def __len__(self):
        return len(self.elements)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _normal_form(m: tuple[int, ...], G) -> tuple[int, ...]:
    changed = True
    while changed:
        changed = False
        for lead, trail in G:
            if _divides(lead, m):
                m = tuple(x - l + t for x, l, t in zip(m, lead, trail))
                changed = True
                break
    return m


def _orient(u, v, key):
    if u == v:
        return None
    if len(u) != len(v) or min(u) < 0 or min(v) < 0:
        raise BinomialClosureError(f"not a binomial: {u} - {v}")
    return (u, v) if key(u) > key(v) else (v, u)


def _buchberger(pairs: list, key) -> list:
    """Reduced Gröbner basis of binomials given as ``(u, v)`` tuples."""
    G: list = []
    for u, v in pairs:
        g = _orient(u, v, key)
        if g is not None:
            G.append(g)
    queue: list = []
    counter = 0

    def push(i, j):
        nonlocal counter
        a, b = G[i][0], G[j][0]
        if not any(x and y for x, y in zip(a, b)):
            return  # coprime leads: S-pair reduces to zero
        lcm = tuple(max(x, y) for x, y in zip(a, b))
        heapq.heappush(queue, (key(lcm), counter, i, j, lcm))
        counter += 1

    for j in range(len(G)):
        for i in range(j):
            push(i, j)
    while queue:
        _, _, i, j, lcm = heapq.heappop(queue)
        (a1, b1), (a2, b2) = G[i], G[j]
        u = tuple(l - x + y for l, x, y in zip(lcm, a1, b1))
        v = tuple(l - x + y for l, x, y in zip(lcm, a2, b2))
        u, v = _normal_form(u, G), _normal_form(v, G)
        g = _orient(u, v, key)
        if g is None:
            continue
        G.append(g)
        for i in range(len(G) - 1):
            push(i, len(G) - 1)
    return _reduce(G, key)


def _reduce(G: list, key) -> list:
    G = sorted(set(G), key=lambda g: key(g[0]))
    minimal = []
    for idx, (lead, trail) in enumerate(G):
        if any(_divides(h[0], lead) for k, h in enumerate(G) if k != idx and (h[0] != lead or k < idx)):
            continue
        minimal.append((lead, trail))
    out = []
    for lead, trail in minimal:
        t = _normal_form(trail, minimal)
        g = _orient(lead, t, key)
        if g is None or g[0] != lead:
            raise BinomialClosureError("tail reduction reached the leading term")
        out.append(g)
    out.sort(key=lambda g: key(g[0]))
    return out


def buchberger(I, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced Gröbner basis of a binomial ideal.

    ``I`` is a :class:`BinomialIdeal` or any iterable of :class:`Binomial`.
    Each element of the result has its leading term as ``plus``.
    """
    G = _buchberger([(b.plus, b.minus) for b in I], order.key)
    return GroebnerBasis(tuple(Binomial(u, v) for u, v in G), order, True)


def ideal_membership(f: Binomial, G: GroebnerBasis) -> bool:
    return G.normal_form(f.plus) == G.normal_form(f.minus)


def _is_homogeneous(pairs, weights) -> bool:
    return all(
        sum(w * x for w, x in zip(weights, u)) == sum(w * x for w, x in zip(weights, v))
        for u, v in pairs
    )


def positive_grading(C: Configuration) -> tuple[int, ...] | None:
    """Positive integer weights making the toric ideal of ``C`` homogeneous.

    Tries the all-ones grading, then column sums of ``A`` and of ``-A``.
    """
    q = C.q
    if C.grading() is not None:
        return (1,) * q
    sums = [sum(v) for v in C.vectors]
    for cand in (sums, [-x for x in sums]):
        if min(cand) > 0:
            return tuple(cand)
    return None


def saturate_variable(gens: Sequence[Binomial], i: int, weights=None) -> list[Binomial]:
    """Generators of ``I : T_i^∞``.

    If the generators are homogeneous for ``weights`` (default: standard
    degree), a weighted graded reverse lex basis with ``T_i`` last is computed
    and ``T_i`` is divided out. Otherwise an auxiliary variable ``t`` is
    adjoined with ``t·T_i - 1`` and eliminated.
    """
    pairs = [(b.plus, b.minus) for b in gens]
    if not pairs:
        return []
    q = len(pairs[0][0])
    if weights is None:
        weights = (1,) * q
    if _is_homogeneous(pairs, weights):
        G = _buchberger(pairs, MonomialOrder.variable_last(i, q, weights).key)
        out = []
        for u, v in G:
            k = min(u[i], v[i])
            if k:
                u = u[:i] + (u[i] - k,) + u[i + 1:]
                v = v[:i] + (v[i] - k,) + v[i + 1:]
            out.append(Binomial(u, v))
        return out
    order = _EliminationOrder(GREVLEX, 1)
    aux = [(u + (0,), v + (0,)) for u, v in pairs]
    aux.append((tuple(int(j == i) for j in range(q)) + (1,), (0,) * (q + 1)))
    G = _buchberger(aux, order.key)
    return [Binomial(u[:-1], v[:-1]) for u, v in G if u[-1] == 0 and v[-1] == 0]


def saturate(gens: Sequence[Binomial], weights=None) -> GroebnerBasis:
    """Reduced graded reverse lex basis of ``I : (T_1···T_q)^∞``.

    Sweeps over all variables until a full sweep leaves the ideal unchanged.
    """
    gens = list(gens)
    if not gens:
        return GroebnerBasis((), GREVLEX)
    current = buchberger(gens).elements
    while True:
        for i in range(gens[0].nvars):
            gens = saturate_variable(gens, i, weights)
        after = buchberger(gens).elements
        if after == current:
            return GroebnerBasis(after, GREVLEX)
        current = after


def lattice_basis_ideal(C: Configuration) -> BinomialIdeal:
    return BinomialIdeal((Binomial.from_vector(b) for b in kernel_lattice_basis(C.matrix)), C)


def toric_ideal_generators(C: Configuration) -> BinomialIdeal:
    """Finite generating set of the toric ideal of ``C``.

    The lattice basis ideal is saturated at every variable; the result is
    the reduced graded reverse lex basis of the saturation.
    """
    start = lattice_basis_ideal(C)
    return BinomialIdeal(saturate(start.generators, positive_grading(C)).elements, C)


def minimal_binomial_generators(C: Configuration, generators=None) -> list[Binomial]:
    """A minimal generating set of a graded toric ideal.

    Candidates are sorted by (degree, plus term, minus term); a candidate is
    kept only if it is not in the ideal of those kept before it.
    """
    if C.grading() is None:
        raise ValueError("minimality trimming requires a grading")
    if generators is None:
        generators = toric_ideal_generators(C).generators
    cands = sorted((g.normalized() for g in generators), key=lambda g: (g.degree, g.plus, g.minus))
    kept: list[Binomial] = []
    G = GroebnerBasis((), GREVLEX)
    for g in cands:
        if kept and ideal_membership(g, G):
            continue
        kept.append(g)
        G = buchberger(kept)
    return kept


def monomials_up_to(q: int, D: int):
    """Exponent vectors in ``q`` variables of total degree at most ``D``."""
    for d in range(D + 1):
        for combo in combinations_with_replacement(range(q), d):
            a = [0] * q
            for j in combo:
                a[j] += 1
            yield tuple(a)


def toric_binomials_up_to(C: Configuration, D: int = 4) -> list[Binomial]:
    """Every binomial ``T^a - T^b`` of the toric ideal with both terms of
    degree at most ``D``, by grouping monomials by their image under ``A``."""
    fibers: dict = {}
    for a in monomials_up_to(C.q, D):
        fibers.setdefault(C.image(a), []).append(a)
    out = []
    for fiber in fibers.values():
        fiber.sort(reverse=True)
        for i, a in enumerate(fiber):
            for b in fiber[i + 1:]:
                out.append(Binomial(a, b))
    out.sort(key=lambda g: (g.degree, g.plus, g.minus))
    return out


def same_ideal(F: Iterable[Binomial], H: Iterable[Binomial]) -> bool:
    """Mutual membership test under graded reverse lex."""
    F, H = list(F), list(H)
    GF, GH = buchberger(F), buchberger(H)
    return all(ideal_membership(h, GF) for h in H) and all(ideal_membership(f, GH) for f in F)
