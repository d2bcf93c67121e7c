"""Builders for the decoding ideals.

Three ideals drive precomputation, all in F2[...]:

  * the Newton ideal: the n+w Newton identities linking locator-polynomial
    coefficients s_i (elementary symmetric functions of the locators) to the
    spectral coordinates S_i (power sums), with cyclic index reduction
    S_{i+n} = S_i;
  * the field-equation ideal: Newton plus S_i^{2^m}+S_i and s_i^{2^m}+s_i,
    which forces zero-dimensionality and radicality at the price of degree
    2^m generators;
  * the saturated ideal: start from the definitional ideals I_sigma
    (s_i = elementary symmetric in Z_1..Z_w) and I_S (S_i = power sums),
    adjoin 1 + r*Delta for the locator discriminant
    Delta = Z_1...Z_w * prod_{i<j} (Z_i + Z_j), and eliminate r and the Z's.
    Saturation by Delta removes every zero/repeated-locator component, so
    the surviving variety consists exactly of weight-w configurations and
    the eliminated ideal contains division-free locator formulas.

The decoding order ranks r above locators above unknown spectral coordinates
(S_i, i not in Q) above s_w..s_1 above known syndromes (S_i, i in Q), each
group by descending index; elimination is then suffix filtering.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, TextIO

from .groebner import GroebnerBasis, buchberger, eliminate, reduce_basis
from .polyring import (
    SATURATION_VAR,
    MonomialOrder,
    Poly2,
    PolyRing,
    Variable,
    locator_var,
    sigma_var,
    syndrome_var,
)

FIELD_EQ_DEGREE_WARNING = 1 << 16
DEFAULT_FIELD_EQ_DEGREE_GATE = 4


class FieldEquationGateError(ValueError):
    """Field-equation pipeline refused for large splitting fields."""


def decoding_order(
    n: int,
    w: int,
    Q: Iterable[int],
    *,
    with_locators: bool = True,
    scheme: str = "lex",
) -> MonomialOrder:
    """The elimination-friendly variable priority for length n and weight w."""
    Qset = frozenset(i % n for i in Q)
    unknown = [syndrome_var(i) for i in sorted(set(range(n)) - Qset, reverse=True)]
    known = [syndrome_var(i) for i in sorted(Qset, reverse=True)]
    sigmas = [sigma_var(i) for i in range(w, 0, -1)]
    priority: list[Variable] = []
    if with_locators:
        priority.append(SATURATION_VAR)
        priority.extend(locator_var(i) for i in range(w, 0, -1))
    priority += unknown + sigmas + known
    if scheme == "lex":
        blocks = None
    elif scheme == "block":
        blocks = []
        if with_locators:
            blocks.append((1 + w, "grevlex"))
        blocks += [(len(unknown), "grevlex"), (len(sigmas), "grevlex"), (len(known), "grevlex")]
        blocks = tuple((length, inner) for length, inner in blocks if length)
    else:
        raise ValueError(f"unknown order scheme {scheme!r}")
    return MonomialOrder(tuple(priority), blocks)


def decoding_ring(
    n: int,
    w: int,
    Q: Iterable[int],
    *,
    with_locators: bool = True,
    scheme: str = "lex",
) -> PolyRing:
    return PolyRing(decoding_order(n, w, Q, with_locators=with_locators, scheme=scheme))


def _default_ring(n: int, w: int, with_locators: bool) -> PolyRing:
    return decoding_ring(n, w, (), with_locators=with_locators)


def newton_generators(n: int, w: int, ring: PolyRing | None = None) -> list[Poly2]:
    """The n+w Newton identities for weight w and length n.

    For i <= w:        S_i + sum_{j<i} s_j S_{i-j} + [i odd] s_i
    For w < i <= n+w:  S_i + sum_{j<=w} s_j S_{i-j}
    with every spectral index reduced mod n (cyclic identification).
    """
    if not 1 <= w < n:
        raise ValueError(f"weight must satisfy 1 <= w < n, got w={w}, n={n}")
    if ring is None:
        ring = _default_ring(n, w, with_locators=False)
    polys = []
    for i in range(1, w + 1):
        monos = [ring.monomial({syndrome_var(i % n): 1})]
        for j in range(1, i):
            monos.append(ring.monomial({sigma_var(j): 1, syndrome_var((i - j) % n): 1}))
        if i % 2 == 1:
            monos.append(ring.monomial({sigma_var(i): 1}))
        polys.append(ring.poly(monos))
    for i in range(w + 1, n + w + 1):
        monos = [ring.monomial({syndrome_var(i % n): 1})]
        for j in range(1, w + 1):
            monos.append(ring.monomial({sigma_var(j): 1, syndrome_var((i - j) % n): 1}))
        polys.append(ring.poly(monos))
    return polys


def field_equations(n: int, w: int, m: int, ring: PolyRing | None = None) -> list[Poly2]:
    """S_i^{2^m} + S_i for all i, and s_i^{2^m} + s_i for i <= w."""
    if ring is None:
        ring = _default_ring(n, w, with_locators=False)
    degree = 1 << m
    if degree > FIELD_EQ_DEGREE_WARNING:
        warnings.warn(
            f"field equations have degree {degree}: Groebner computation "
            f"will be intractable at this size",
            RuntimeWarning,
            stacklevel=2,
        )
    polys = []
    for i in range(n):
        v = syndrome_var(i)
        polys.append(ring.poly([ring.monomial({v: degree}), ring.monomial({v: 1})]))
    for i in range(1, w + 1):
        v = sigma_var(i)
        polys.append(ring.poly([ring.monomial({v: degree}), ring.monomial({v: 1})]))
    return polys


def sigma_ideal(w: int, ring: PolyRing | None = None) -> list[Poly2]:
    """s_i + e_i(Z_1..Z_w): locator coefficients as elementary symmetric functions."""
    if w < 1:
        raise ValueError("weight must be >= 1")
    if ring is None:
        ring = _default_ring(w + 1, w, with_locators=True)
    polys = []
    for i in range(1, w + 1):
        monos = [ring.monomial({sigma_var(i): 1})]
        for subset in combinations(range(1, w + 1), i):
            monos.append(ring.monomial({locator_var(j): 1 for j in subset}))
        polys.append(ring.poly(monos))
    return polys


def power_sum_ideal(n: int, w: int, ring: PolyRing | None = None) -> list[Poly2]:
    """S_{i mod n} + sum_j Z_j^i for i = 1..n+w.

    The cyclic identification S_{i+n} = S_i is realized by reducing indices
    into 0..n-1 instead of adjoining extra variables, so indices i and i+n
    constrain the same variable with different power sums.
    """
    if w < 1:
        raise ValueError("weight must be >= 1")
    if ring is None:
        ring = _default_ring(n, w, with_locators=True)
    polys = []
    for i in range(1, n + w + 1):
        monos = [ring.monomial({syndrome_var(i % n): 1})]
        for j in range(1, w + 1):
            monos.append(ring.monomial({locator_var(j): i}))
        polys.append(ring.poly(monos))
    return polys


def delta_poly(w: int, ring: PolyRing | None = None) -> Poly2:
    """Z_1...Z_w * prod_{i<j} (Z_i + Z_j); for w=1 just Z_1."""
    if w < 1:
        raise ValueError("weight must be >= 1")
    if ring is None:
        ring = _default_ring(w + 1, w, with_locators=True)
    product = ring.poly([ring.monomial({locator_var(j): 1 for j in range(1, w + 1)})])
    for i in range(1, w + 1):
        for j in range(i + 1, w + 1):
            product = product * ring.poly(
                [ring.monomial({locator_var(i): 1}), ring.monomial({locator_var(j): 1})]
            )
    return product


@dataclass(frozen=True)
class IdealSpec:
    """A built ideal: parameters, variant, generators, and their ring."""

    n: int
    w: int
    Q: tuple[int, ...]
    variant: str  # "newton" | "fieldeq" | "saturated"
    generators: tuple[Poly2, ...]
    ring: PolyRing

    def dump(self) -> str:
        """Generators in the textual polynomial syntax, one per line."""
        return "\n".join(self.ring.format_poly(g) for g in self.generators) + "\n"


def build_ideal(
    n: int,
    w: int,
    Q: Iterable[int],
    variant: str,
    *,
    m: int | None = None,
    scheme: str = "lex",
) -> IdealSpec:
    Qt = tuple(sorted(i % n for i in Q))
    if variant == "newton":
        ring = decoding_ring(n, w, Qt, with_locators=False, scheme=scheme)
        gens = newton_generators(n, w, ring)
    elif variant == "fieldeq":
        if m is None:
            raise ValueError("fieldeq variant needs the splitting degree m")
        ring = decoding_ring(n, w, Qt, with_locators=False, scheme=scheme)
        gens = newton_generators(n, w, ring) + field_equations(n, w, m, ring)
    elif variant == "saturated":
        ring = decoding_ring(n, w, Qt, with_locators=True, scheme=scheme)
        gens = sigma_ideal(w, ring) + power_sum_ideal(n, w, ring)
        rabinowitsch = ring.one + ring.var(SATURATION_VAR) * delta_poly(w, ring)
        gens.append(rabinowitsch)
    else:
        raise ValueError(f"unknown ideal variant {variant!r}")
    if variant in ("newton", "fieldeq"):
        assert len([g for g in gens[: n + w]]) == n + w
    return IdealSpec(n, w, Qt, variant, tuple(gens), ring)


@dataclass
class SaturationResult:
    """Reduced Groebner data for the saturated ideal at one weight."""

    eliminated: list[Poly2]  # basis of the ideal restricted to {sigma, S}
    full: GroebnerBasis      # reduced basis over r, Z, S, sigma (diagnostics)
    ring: PolyRing


def saturated_newton_ideal(
    n: int,
    w: int,
    Q: Iterable[int],
    *,
    scheme: str = "lex",
    pair_budget: int | None = None,
    deadline: float | None = None,
    trace: TextIO | None = None,
) -> SaturationResult:
    """Reduced basis of the saturation-by-Delta ideal, eliminated to {sigma, S}.

    Computes the reduced Groebner basis of I_sigma + I_S + <1 + r*Delta>
    under an order eliminating r and the locators first, then filters to
    polynomials in the sigma/S variables only.
    """
    if not 1 <= w < n:
        raise ValueError(f"weight must satisfy 1 <= w < n, got w={w}")
    spec = build_ideal(n, w, Q, "saturated", scheme=scheme)
    gb = reduce_basis(
        buchberger(list(spec.generators), pair_budget=pair_budget, deadline=deadline, trace=trace)
    )
    keep = {sigma_var(i) for i in range(1, w + 1)} | {syndrome_var(i) for i in range(n)}
    return SaturationResult(eliminate(gb, keep), gb, spec.ring)


def field_eq_newton_ideal(
    n: int,
    w: int,
    Q: Iterable[int],
    m: int,
    *,
    scheme: str = "lex",
    pair_budget: int | None = None,
    deadline: float | None = None,
    trace: TextIO | None = None,
    allow_large_field: bool = False,
) -> GroebnerBasis:
    """Reduced Groebner basis of the Newton + field-equation ideal.

    Gated to m <= 4 unless allow_large_field is set: the generators have
    degree 2^m, which is already hopeless at moderate lengths.
    """
    if m > DEFAULT_FIELD_EQ_DEGREE_GATE and not allow_large_field:
        raise FieldEquationGateError(
            f"field-equation pipeline gated to m <= {DEFAULT_FIELD_EQ_DEGREE_GATE} "
            f"(got m={m}); pass allow_large_field=True to override"
        )
    spec = build_ideal(n, w, Q, "fieldeq", m=m, scheme=scheme)
    return reduce_basis(
        buchberger(list(spec.generators), pair_budget=pair_budget, deadline=deadline, trace=trace)
    )
