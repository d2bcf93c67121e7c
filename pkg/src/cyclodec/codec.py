"""Binary cyclic codes: construction from a defining set, encoding, syndromes,
Chien search, and brute-force oracles (decoding and minimum distance).

Words are tuples of bits indexed by position 0..n-1; position u corresponds
to the locator alpha^u, which fixes how Chien-search roots map back to
word indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .finite_field import (
    Field,
    FieldElement,
    RootOfUnity,
    default_modulus,
    nth_root,
    poly_degree,
    poly_mul,
    root_from_exponent,
    splitting_field_degree,
)

MAX_BRUTEFORCE_DIMENSION = 16


class CosetClosureError(ValueError):
    """Defining set not closed under doubling mod n."""

    def __init__(self, n: int, member: int, coset: frozenset[int]):
        self.member = member
        self.coset = coset
        super().__init__(
            f"defining set is not closed under doubling mod {n}: "
            f"{member} needs the full coset {sorted(coset)}"
        )


class DimensionTooLargeError(ValueError):
    """Brute-force distance enumeration refused; declare d in the code spec."""


class ChienSplitError(RuntimeError):
    """Locator does not split over the group of n-th roots of unity."""


def cyclotomic_coset(i: int, n: int) -> frozenset[int]:
    coset = set()
    j = i % n
    while j not in coset:
        coset.add(j)
        j = (2 * j) % n
    return frozenset(coset)


@dataclass(frozen=True)
class ErrorPattern:
    positions: frozenset[int]

    @property
    def weight(self) -> int:
        return len(self.positions)

    def apply(self, word: Sequence[int]) -> tuple[int, ...]:
        """Flip the pattern's positions in the word."""
        out = list(word)
        for u in self.positions:
            out[u] ^= 1
        return tuple(out)

    @classmethod
    def of(cls, *positions: int) -> "ErrorPattern":
        return cls(frozenset(positions))


@dataclass(frozen=True)
class LocatorPoly:
    """sigma(Z) = prod(1 + alpha^u Z) as a coefficient tuple sigma_0..sigma_w."""

    coeffs: tuple[FieldElement, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0].bits != 1:
            raise ValueError("locator polynomial must have constant term 1")

    @property
    def degree(self) -> int:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return 0

    def eval(self, point: FieldElement) -> FieldElement:
        acc = point.field.zero
        for coeff in reversed(self.coeffs):
            acc = acc * point + coeff
        return acc

    @classmethod
    def from_pattern(cls, pattern: ErrorPattern, code: "CyclicCode") -> "LocatorPoly":
        field = code.field
        coeffs = [field.one]
        for u in sorted(pattern.positions):
            z = code.alpha.pow(u)
            # multiply running product by (1 + z Z)
            coeffs = [
                (coeffs[i] if i < len(coeffs) else field.zero)
                + (coeffs[i - 1] * z if i > 0 else field.zero)
                for i in range(len(coeffs) + 1)
            ]
        return cls(tuple(coeffs))


class CyclicCode:
    """A binary cyclic code of odd length n with coset-closed defining set Q."""

    def __init__(
        self,
        n: int,
        Q: Iterable[int],
        *,
        m: int | None = None,
        modulus: int | None = None,
        alpha_exp: int | None = None,
        d: int | None = None,
    ):
        if n <= 1 or n % 2 == 0:
            raise ValueError(f"length must be odd and > 1, got {n}")
        Qset = frozenset(i % n for i in Q)
        if not Qset:
            raise ValueError("defining set must be nonempty")
        for i in sorted(Qset):
            coset = cyclotomic_coset(i, n)
            if not coset <= Qset:
                raise CosetClosureError(n, i, coset)

        expected_m = splitting_field_degree(n)
        if m is not None and m != expected_m:
            raise ValueError(f"splitting-field degree for n={n} is {expected_m}, got m={m}")
        self.n = n
        self.Q = tuple(sorted(Qset))
        self.m = expected_m
        self.field = Field(expected_m, modulus if modulus is not None else default_modulus(expected_m))
        if alpha_exp is None:
            self.alpha = nth_root(self.field, n)
            self.alpha_exp = self.field.order // n
        else:
            self.alpha = root_from_exponent(self.field, n, alpha_exp)
            self.alpha_exp = alpha_exp

        self.gen_poly = self._build_gen_poly()
        self.k = n - len(self.Q)
        assert poly_degree(self.gen_poly) == len(self.Q)

        if self.k <= MAX_BRUTEFORCE_DIMENSION:
            computed = min_distance_bruteforce(self)
            if d is not None and d != computed:
                raise ValueError(f"declared d={d} but brute force finds d={computed}")
            self.d = computed
        else:
            if d is None:
                raise DimensionTooLargeError(
                    f"dimension {self.k} > {MAX_BRUTEFORCE_DIMENSION}: declare d in the code spec"
                )
            self.d = d
        self.t = (self.d - 1) // 2

        self._single_error_syndromes: dict[int, tuple[int, ...]] | None = None
        self._oracle_table: dict[tuple[int, ...], ErrorPattern] | None = None

    def _build_gen_poly(self) -> int:
        """prod over i in Q of (X + alpha^i); binary because Q is coset-closed."""
        field = self.field
        coeffs = [field.one]
        for i in self.Q:
            root = self.alpha.pow(i)
            coeffs = [
                (coeffs[j] * root if j < len(coeffs) else field.zero)
                + (coeffs[j - 1] if j > 0 else field.zero)
                for j in range(len(coeffs) + 1)
            ]
        mask = 0
        for j, c in enumerate(coeffs):
            if c.bits not in (0, 1):
                raise AssertionError("generator polynomial has a non-binary coefficient")
            mask |= c.bits << j
        return mask

    # -- helpers ---------------------------------------------------------------

    def codewords(self):
        """All 2^k codewords as bit tuples (dimension-capped callers only)."""
        for msg in range(1 << self.k):
            mask = poly_mul(msg, self.gen_poly)
            yield tuple((mask >> j) & 1 for j in range(self.n))

    def syndrome_key(self, y: Sequence[int]) -> tuple[int, ...]:
        return tuple(s.bits for s in syndromes(y, self).values())

    def pattern_syndrome_key(self, pattern: ErrorPattern) -> tuple[int, ...]:
        if self._single_error_syndromes is None:
            self._single_error_syndromes = {
                u: tuple(self.alpha.pow(u * i).bits for i in self.Q)
                for u in range(self.n)
            }
        acc = [0] * len(self.Q)
        for u in pattern.positions:
            row = self._single_error_syndromes[u]
            acc = [a ^ b for a, b in zip(acc, row)]
        return tuple(acc)

    def oracle_table(self) -> dict[tuple[int, ...], ErrorPattern]:
        if self._oracle_table is None:
            table: dict[tuple[int, ...], ErrorPattern] = {}
            for w in range(self.t + 1):
                for positions in itertools.combinations(range(self.n), w):
                    pattern = ErrorPattern(frozenset(positions))
                    key = self.pattern_syndrome_key(pattern)
                    assert key not in table, "two correctable patterns share a syndrome"
                    table[key] = pattern
            self._oracle_table = table
        return self._oracle_table

    def __repr__(self) -> str:
        return f"CyclicCode(n={self.n}, k={self.k}, d={self.d}, Q={list(self.Q)})"


def code_new(
    n: int,
    Q: Iterable[int],
    *,
    m: int | None = None,
    modulus: int | None = None,
    alpha_exp: int | None = None,
    d: int | None = None,
) -> CyclicCode:
    """Build a cyclic code; verifies coset closure and computes or checks d."""
    return CyclicCode(n, Q, m=m, modulus=modulus, alpha_exp=alpha_exp, d=d)


def encode(message: Sequence[int], code: CyclicCode) -> tuple[int, ...]:
    """Non-systematic encoding: message polynomial times the generator."""
    if len(message) != code.k:
        raise ValueError(f"message length {len(message)} != dimension {code.k}")
    msg_mask = 0
    for j, bit in enumerate(message):
        if bit not in (0, 1):
            raise ValueError("message must be binary")
        msg_mask |= bit << j
    mask = poly_mul(msg_mask, code.gen_poly)
    return tuple((mask >> j) & 1 for j in range(code.n))


def syndromes(y: Sequence[int], code: CyclicCode) -> dict[int, FieldElement]:
    """S_i = y(alpha^i) for i in Q; depends only on the error part of y."""
    if len(y) != code.n:
        raise ValueError(f"word length {len(y)} != n = {code.n}")
    field = code.field
    out: dict[int, FieldElement] = {}
    for i in code.Q:
        point = code.alpha.pow(i)
        acc = field.zero
        for bit in reversed(y):
            acc = acc * point
            if bit:
                acc = acc + field.one
        out[i] = acc
    return out


def chien_search(sigma: LocatorPoly, code: CyclicCode) -> ErrorPattern:
    """Positions u with sigma(alpha^-u) = 0; errors out unless the root count
    equals deg(sigma)."""
    positions = []
    for u in range(code.n):
        if not sigma.eval(code.alpha.pow(-u)):
            positions.append(u)
    if len(positions) != sigma.degree:
        raise ChienSplitError(
            f"locator of degree {sigma.degree} has {len(positions)} roots "
            f"among the n-th roots of unity: it does not split"
        )
    return ErrorPattern(frozenset(positions))


def oracle_decode(y: Sequence[int], code: CyclicCode) -> ErrorPattern | None:
    """Ground truth: the unique error pattern of weight <= t matching y's
    syndromes, or None when no such pattern exists (uncorrectable)."""
    return code.oracle_table().get(code.syndrome_key(y))


def min_distance_bruteforce(code: CyclicCode) -> int:
    """Minimum weight over all nonzero codewords, by full enumeration."""
    if code.k > MAX_BRUTEFORCE_DIMENSION:
        raise DimensionTooLargeError(
            f"dimension {code.k} > {MAX_BRUTEFORCE_DIMENSION}: declare d instead"
        )
    best = code.n + 1
    gen = code.gen_poly
    for msg in range(1, 1 << code.k):
        weight = poly_mul(msg, gen).bit_count()
        if weight < best:
            best = weight
    return best
