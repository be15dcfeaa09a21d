"""Exact monomial ideal arithmetic over a fixed tuple of variables.

Monomials are dense exponent tuples (one entry per ring variable), the same
representation sympy's polys module uses.  Ideals store their minimal
generators sorted lexicographically with the first variable largest, which
lists pure powers of distinct variables in variable order.

Nothing here knows about graphs: :func:`irreducible_decomposition_oracle`
works on any monomial ideal and serves as an independent check of the
cover-based decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import ExponentOverflow, SizeCap, UnitIdeal

MAX_EXPONENT = 2**63 - 1
ORACLE_NODE_CAP = 200_000

Monomial = tuple  # tuple[int, ...]


def monomial(variables: Sequence, powers: Mapping) -> Monomial:
    """Build a dense exponent tuple from a sparse ``{variable: exponent}`` map."""
    pos = {v: i for i, v in enumerate(variables)}
    exps = [0] * len(variables)
    for var, e in powers.items():
        if e < 0:
            raise ValueError(f"negative exponent for {var!r}")
        if e > MAX_EXPONENT:
            raise ExponentOverflow(f"exponent {e} of {var!r} exceeds {MAX_EXPONENT}")
        exps[pos[var]] += e
        if exps[pos[var]] > MAX_EXPONENT:
            raise ExponentOverflow(f"exponent of {var!r} exceeds {MAX_EXPONENT}")
    return tuple(exps)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def support(m: Monomial) -> tuple:
    return tuple(i for i, e in enumerate(m) if e)


def _order_key(m: Monomial):
    return tuple(-e for e in m)


def _minimalize(gens: Iterable[Monomial]) -> tuple:
    # sorting by degree first means a divisor is always seen before its multiples
    kept = []
    for m in sorted(set(gens), key=lambda m: (sum(m), _order_key(m))):
        if not any(divides(k, m) for k in kept):
            kept.append(m)
    kept.sort(key=_order_key)
    return tuple(kept)


def render_monomial(variables: Sequence, m: Monomial, sep: str = "*") -> str:
    parts = []
    for var, e in zip(variables, m):
        if e == 1:
            parts.append(f"{var}")
        elif e:
            parts.append(f"{var}^{e}")
    return sep.join(parts) if parts else "1"


class MonomialIdeal:
    """A monomial ideal given by its canonical minimal generators.

    The zero ideal has no generators.  The unit ideal cannot be built.
    """

    __slots__ = ("variables", "gens")

    def __init__(self, variables: Sequence, gens: Iterable[Monomial] = ()):
        self.variables = tuple(variables)
        n = len(self.variables)
        gens = list(gens)
        for m in gens:
            if len(m) != n:
                raise ValueError(f"monomial {m!r} does not match {n} variables")
            if not any(m):
                raise UnitIdeal("the unit ideal is not representable")
        self.gens = _minimalize(gens)

    @classmethod
    def from_powers(cls, variables, generators: Iterable[Mapping]) -> "MonomialIdeal":
        """Build from sparse generator maps like ``[{"x1": 3, "x2": 1}, ...]``."""
        return cls(variables, [monomial(variables, g) for g in generators])

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.variables == other.variables and self.gens == other.gens

    def __hash__(self):
        return hash((self.variables, self.gens))

    def __repr__(self):
        return f"MonomialIdeal({self.render()})"

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    def is_zero(self) -> bool:
        return not self.gens

    def render(self) -> str:
        """Macaulay2-style text, e.g. ``ideal(x1^3*x2, x2^4*x3)``."""
        if not self.gens:
            return "ideal(0)"
        return "ideal(" + ", ".join(render_monomial(self.variables, m) for m in self.gens) + ")"

    def sparse_gens(self) -> list:
        return [{v: e for v, e in zip(self.variables, m) if e} for m in self.gens]


@dataclass(frozen=True)
class IrreducibleIdeal:
    """``(x_i1^a1, ..., x_is^as)`` with distinct variables."""

    variables: tuple
    exponents: tuple  # dense; 0 means the variable is absent

    @classmethod
    def from_powers(cls, variables, powers: Mapping) -> "IrreducibleIdeal":
        variables = tuple(variables)
        return cls(variables, monomial(variables, powers))

    @property
    def powers(self) -> dict:
        return {v: e for v, e in zip(self.variables, self.exponents) if e}

    @property
    def support(self) -> frozenset:
        return frozenset(v for v, e in zip(self.variables, self.exponents) if e)

    def to_ideal(self) -> MonomialIdeal:
        n = len(self.variables)
        gens = []
        for i, e in enumerate(self.exponents):
            if e:
                m = [0] * n
                m[i] = e
                gens.append(tuple(m))
        return MonomialIdeal(self.variables, gens)

    def sort_key(self):
        idx = support(self.exponents)
        return len(idx), idx, self.exponents

    def render(self) -> str:
        """Compact text form, e.g. ``(x2^2,x3)``."""
        parts = [render_monomial(self.variables, m) for m in self.to_ideal().gens]
        return "(" + (",".join(parts) or "0") + ")"

    def render_cas(self) -> str:
        return self.to_ideal().render()


def minimal_generators(variables: Sequence, gens: Iterable[Monomial]) -> MonomialIdeal:
    return MonomialIdeal(variables, gens)


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    """Monomial membership: some minimal generator divides ``m``."""
    return any(divides(g, m) for g in ideal.gens)


def _same_ring(a: MonomialIdeal, b: MonomialIdeal):
    if a.variables != b.variables:
        raise ValueError("ideals live in different rings")


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_ring(a, b)
    return MonomialIdeal(a.variables, (lcm(x, y) for x in a.gens for y in b.gens))


def intersect_all(ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    ideals = list(ideals)
    if not ideals:
        raise ValueError("empty intersection is the unit ideal")
    result = ideals[0]
    for other in ideals[1:]:
        result = intersect(result, other)
    return result


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_ring(a, b)
    return MonomialIdeal(a.variables, a.gens + b.gens)


def ideal_contains(big: MonomialIdeal, small: MonomialIdeal) -> bool:
    """True iff ``small`` is a subset of ``big``."""
    _same_ring(big, small)
    return all(contains(big, m) for m in small.gens)


def ideal_equals(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    return a.variables == b.variables and a.gens == b.gens


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(ideal.variables, (tuple(min(e, 1) for e in m) for m in ideal.gens))


def is_irreducible(ideal: MonomialIdeal):
    """Return the pure-power form if every generator is a power of its own variable."""
    if ideal.is_zero():
        return None
    exps = [0] * len(ideal.variables)
    for m in ideal.gens:
        supp = support(m)
        if len(supp) != 1:
            return None
        # minimal generators never repeat a variable here
        exps[supp[0]] = m[supp[0]]
    return IrreducibleIdeal(ideal.variables, tuple(exps))


def support_height(q: IrreducibleIdeal) -> int:
    return len(q.support)


def irreducible_decomposition_oracle(ideal: MonomialIdeal, max_nodes: int = ORACLE_NODE_CAP) -> list:
    """Irredundant irreducible decomposition by generator splitting.

    If a minimal generator factors as ``u*v`` with coprime non-trivial
    ``u, v`` then ``I = (I + (u)) & (I + (v))``.  Splitting the first
    generator that is not a pure power, at its first variable, until every
    generator is a pure power yields irreducible ideals; components
    containing another one are then dropped.
    """
    if ideal.is_zero():
        raise ValueError("the zero ideal has no irreducible decomposition here")
    n = len(ideal.variables)
    leaves = set()
    seen = set()
    stack = [ideal.gens]
    while stack:
        gens = stack.pop()
        if gens in seen:
            continue
        seen.add(gens)
        if len(seen) > max_nodes:
            raise SizeCap("splitting oracle", len(seen), max_nodes)
        pivot = next((m for m in gens if len(support(m)) > 1), None)
        if pivot is None:
            leaves.add(gens)
            continue
        i = support(pivot)[0]
        u = tuple(pivot[i] if k == i else 0 for k in range(n))
        v = tuple(0 if k == i else e for k, e in enumerate(pivot))
        stack.append(_minimalize(gens + (u,)))
        stack.append(_minimalize(gens + (v,)))

    comps = []
    for gens in leaves:
        exps = [0] * n
        for m in gens:
            (k,) = support(m)
            exps[k] = m[k]
        comps.append(IrreducibleIdeal(ideal.variables, tuple(exps)))
    # an irreducible ideal contains an intersection only if it contains one of the factors
    kept = [q for q in comps
            if not any(p != q and irreducible_subset(p, q) for p in comps)]
    kept.sort(key=IrreducibleIdeal.sort_key)
    return kept


def irreducible_subset(p: IrreducibleIdeal, q: IrreducibleIdeal) -> bool:
    """True iff ``p`` is contained in ``q`` (both irreducible)."""
    return all(b and b <= a for a, b in zip(p.exponents, q.exponents) if a)
