"""Buchberger's algorithm over GF(2) with the normal selection strategy.

Design points:
  * pairs are processed smallest-lcm first, ties broken by generator indices,
    so runs are reproducible byte for byte;
  * Buchberger's coprime-leading-term and chain criteria prune pairs;
  * reduction is full normal form (no monomial of the remainder is divisible
    by any basis leading monomial), driven by a lazy max-heap of monomials;
  * a configurable pair budget (and optional wall-clock deadline) turns
    runaway computations into an explicit BudgetExhausted failure rather
    than a wrong basis.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, TextIO

from .polyring import (
    Poly2,
    PolyRing,
    Variable,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

DEFAULT_PAIR_BUDGET = 10_000_000


@dataclass
class GBStats:
    pairs_processed: int = 0
    spolys_reduced: int = 0
    skipped_coprime: int = 0
    skipped_chain: int = 0
    basis_additions: int = 0
    basis_size: int = 0

    def summary(self) -> str:
        return (
            f"pairs={self.pairs_processed} reduced={self.spolys_reduced} "
            f"coprime={self.skipped_coprime} chain={self.skipped_chain} "
            f"basis={self.basis_size}"
        )


class BudgetExhaustedError(RuntimeError):
    """The pair budget or deadline ran out; carries the partial basis."""

    def __init__(self, message: str, stats: GBStats, partial: list[Poly2]):
        super().__init__(message)
        self.stats = stats
        self.partial = partial


@dataclass
class GroebnerBasis:
    polys: list[Poly2]
    ring: PolyRing
    reduced: bool
    stats: GBStats = field(default_factory=GBStats)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)


def _neg_key(ring: PolyRing) -> Callable[[tuple[int, ...]], tuple]:
    if ring.keyfn is None:
        return lambda m: tuple(-e for e in m)
    keyfn = ring.keyfn
    return lambda m: tuple(-e for e in keyfn(m))


def normal_form(f: Poly2, basis: Sequence[Poly2]) -> Poly2:
    """Remainder of multivariate division of f by the basis.

    No monomial of the result is divisible by any basis leading monomial,
    and f - result lies in the ideal generated by the basis.  Divisors are
    tried in basis order (deterministic).
    """
    ring = f.ring
    pairs = [(g.leading_monomial(), g.monos) for g in basis if g]
    if not pairs:
        return f
    negkey = _neg_key(ring)
    current = set(f.monos)
    heap = [negkey(m) for m in current]
    by_key = {negkey(m): m for m in current}
    heapq.heapify(heap)
    remainder: list[tuple[int, ...]] = []
    while heap:
        key = heapq.heappop(heap)
        m = by_key[key]
        if m not in current:
            continue
        for lm, monos in pairs:
            if mono_divides(lm, m):
                quotient = mono_div(m, lm)
                product = {mono_mul(quotient, mm) for mm in monos}
                fresh = product - current
                current ^= product
                for mm in fresh:
                    k = negkey(mm)
                    by_key[k] = mm
                    heapq.heappush(heap, k)
                break
        else:
            current.discard(m)
            remainder.append(m)
    return Poly2(ring, frozenset(remainder))


def s_polynomial(f: Poly2, g: Poly2) -> Poly2:
    lmf, lmg = f.leading_monomial(), g.leading_monomial()
    lcm = mono_lcm(lmf, lmg)
    return f.mul_monomial(mono_div(lcm, lmf)) + g.mul_monomial(mono_div(lcm, lmg))


def buchberger(
    generators: Sequence[Poly2],
    *,
    pair_budget: int | None = None,
    deadline: float | None = None,
    trace: TextIO | None = None,
    trace_every: int = 500,
) -> GroebnerBasis:
    """A (non-reduced) Groebner basis of the ideal generated by `generators`.

    Raises BudgetExhaustedError when more than `pair_budget` pairs are popped
    or `deadline` (a time.monotonic() timestamp) passes.
    """
    if not generators:
        raise ValueError("no generators")
    ring = generators[0].ring
    budget = DEFAULT_PAIR_BUDGET if pair_budget is None else pair_budget
    stats = GBStats()

    basis: list[Poly2] = []
    lms: list[tuple[int, ...]] = []

    def push_pairs(new_index: int, heap: list) -> None:
        lm_new = lms[new_index]
        for i in range(new_index):
            lcm = mono_lcm(lms[i], lm_new)
            heapq.heappush(heap, (ring.mono_key(lcm), i, new_index))

    # Seed with normal forms of the inputs so obvious rewrites happen once,
    # not inside every S-polynomial reduction.
    pending = list(generators)
    heap: list = []
    for gen in pending:
        if not gen:
            raise ValueError("zero generator")
        reduced = normal_form(gen, basis)
        if not reduced:
            continue
        basis.append(reduced)
        lms.append(reduced.leading_monomial())
        push_pairs(len(basis) - 1, heap)

    handled: set[tuple[int, int]] = set()
    while heap:
        stats.pairs_processed += 1
        if stats.pairs_processed > budget:
            stats.basis_size = len(basis)
            raise BudgetExhaustedError(
                f"pair budget {budget} exhausted ({stats.summary()})", stats, basis
            )
        if deadline is not None and stats.pairs_processed % 64 == 0 and time.monotonic() > deadline:
            stats.basis_size = len(basis)
            raise BudgetExhaustedError(
                f"deadline passed ({stats.summary()})", stats, basis
            )
        if trace is not None and stats.pairs_processed % trace_every == 0:
            trace.write(f"pairs={stats.pairs_processed} basis={len(basis)} queue={len(heap)}\n")

        _, i, j = heapq.heappop(heap)
        handled.add((i, j))
        lcm = mono_lcm(lms[i], lms[j])

        # coprime criterion: disjoint leading supports reduce to zero anyway
        if lcm == mono_mul(lms[i], lms[j]):
            stats.skipped_coprime += 1
            continue
        # chain criterion: a third element divides the lcm and both of its
        # pairs with i and j were already handled
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if (
                mono_divides(lms[k], lcm)
                and (min(i, k), max(i, k)) in handled
                and (min(j, k), max(j, k)) in handled
            ):
                skip = True
                break
        if skip:
            stats.skipped_chain += 1
            continue

        stats.spolys_reduced += 1
        remainder = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if remainder:
            basis.append(remainder)
            lms.append(remainder.leading_monomial())
            stats.basis_additions += 1
            push_pairs(len(basis) - 1, heap)

    stats.basis_size = len(basis)
    if trace is not None:
        trace.write(f"done {stats.summary()}\n")
    return GroebnerBasis(basis, ring, reduced=False, stats=stats)


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """The unique reduced Groebner basis for (ideal, order).

    Leading monomials end up pairwise non-divisible and every tail monomial
    is irreducible; over GF(2) no coefficient normalization is needed.
    """
    ring = gb.ring
    ordered = sorted(
        (g for g in gb.polys if g),
        key=lambda g: ring.mono_key(g.leading_monomial()),
    )
    minimal: list[Poly2] = []
    for g in ordered:
        lm = g.leading_monomial()
        if not any(mono_divides(h.leading_monomial(), lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        reduced.append(normal_form(g, others) if others else g)
    reduced.sort(key=lambda g: ring.mono_key(g.leading_monomial()), reverse=True)
    return GroebnerBasis(reduced, ring, reduced=True, stats=gb.stats)


def eliminate(gb: GroebnerBasis, keep: Iterable[Variable]) -> list[Poly2]:
    """Basis of the elimination ideal onto the kept variables.

    Requires a Groebner basis whose order ranks every eliminated variable
    above every kept one (prefix elimination); the filtered subset is then
    itself a Groebner basis of the intersection ideal.
    """
    keep_set = frozenset(keep)
    if gb.ring.elimination_prefix(keep_set) is None:
        raise ValueError(
            "monomial order is not elimination-compatible with the kept variables"
        )
    return [p for p in gb.polys if p.variables() <= keep_set]


def is_groebner_basis(polys: Sequence[Poly2]) -> bool:
    """Direct Buchberger-criterion check: every S-polynomial reduces to 0."""
    nonzero = [p for p in polys if p]
    for i in range(len(nonzero)):
        for j in range(i + 1, len(nonzero)):
            if normal_form(s_polynomial(nonzero[i], nonzero[j]), nonzero):
                return False
    return True


def groebner_basis(
    generators: Sequence[Poly2],
    *,
    pair_budget: int | None = None,
    deadline: float | None = None,
    trace: TextIO | None = None,
) -> GroebnerBasis:
    """Convenience: Buchberger followed by full reduction."""
    return reduce_basis(
        buchberger(generators, pair_budget=pair_budget, deadline=deadline, trace=trace)
    )
