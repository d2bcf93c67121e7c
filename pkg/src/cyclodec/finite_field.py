"""Arithmetic in GF(2^m), roots of unity, and the finite-field Fourier transform.

Field elements are bit vectors in the polynomial basis, packed into Python
ints (bit i = coefficient of x^i).  Multiplication uses log/antilog tables
for m <= 16 and falls back to carry-less multiply + reduction above that.
Every inversion is counted on the owning :class:`Field`, so decoding paths
that promise to be division-free can be audited.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

MAX_TABLE_DEGREE = 16  # log/antilog tables above this would be too large
MAX_DEFAULT_DEGREE = 20


class ReducibleModulusError(ValueError):
    """A field modulus that factors over GF(2), with one factor named."""

    def __init__(self, modulus: int, factor: int):
        self.modulus = modulus
        self.factor = factor
        super().__init__(
            f"modulus {poly_str(modulus)} is reducible: divisible by {poly_str(factor)}"
        )


def poly_degree(p: int) -> int:
    """Degree of a GF(2)[x] bitmask; -1 for the zero polynomial."""
    return p.bit_length() - 1


def poly_str(p: int) -> str:
    """Readable form of a GF(2)[x] bitmask, e.g. 0b1011 -> 'x^3+x+1'."""
    if p == 0:
        return "0"
    terms = []
    for i in range(p.bit_length() - 1, -1, -1):
        if (p >> i) & 1:
            terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
    return "+".join(terms)


def poly_mul(a: int, b: int) -> int:
    """Carry-less product in GF(2)[x]."""
    result = 0
    while b:
        low = b & -b
        result ^= a << (low.bit_length() - 1)
        b ^= low
    return result


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = poly_degree(b)
    quotient = 0
    while poly_degree(a) >= db:
        shift = poly_degree(a) - db
        a ^= b << shift
        quotient |= 1 << shift
    return quotient, a


def poly_mod(a: int, b: int) -> int:
    return poly_divmod(a, b)[1]


def poly_powmod(base: int, exponent: int, modulus: int) -> int:
    """base^exponent mod modulus in GF(2)[x], by square-and-multiply."""
    result = 1
    base = poly_mod(base, modulus)
    while exponent:
        if exponent & 1:
            result = poly_mod(poly_mul(result, base), modulus)
        base = poly_mod(poly_mul(base, base), modulus)
        exponent >>= 1
    return result


def irreducible_factor(p: int) -> int | None:
    """A nontrivial factor of p found by trial division, or None.

    Divides by every polynomial of degree 1..deg(p)/2, which is exhaustive
    for irreducibility at the degrees used here (<= 20).
    """
    d = poly_degree(p)
    if d < 1:
        return None
    for f in range(2, 1 << (d // 2 + 1)):
        if poly_mod(p, f) == 0:
            return f
    return None


def prime_factors(k: int) -> list[int]:
    factors = []
    p = 2
    while p * p <= k:
        if k % p == 0:
            factors.append(p)
            while k % p == 0:
                k //= p
        p += 1
    if k > 1:
        factors.append(k)
    return factors


def splitting_field_degree(n: int) -> int:
    """Multiplicative order of 2 mod n: the degree of the smallest binary
    field containing a primitive n-th root of unity."""
    if n <= 1 or n % 2 == 0:
        raise ValueError(f"length must be odd and > 1, got {n}")
    m, pow2 = 1, 2 % n
    while pow2 != 1:
        pow2 = (pow2 * 2) % n
        m += 1
    return m


@functools.lru_cache(maxsize=None)
def default_modulus(m: int) -> int:
    """The smallest (as an integer bitmask) primitive polynomial of degree m.

    Primitive means x generates the full multiplicative group, so fields
    built on these moduli always use x as the generator.
    """
    if not 1 <= m <= MAX_DEFAULT_DEGREE:
        raise ValueError(f"no default modulus for degree {m} (supported: 1..{MAX_DEFAULT_DEGREE})")
    order = (1 << m) - 1
    prime_parts = prime_factors(order) if order > 1 else []
    for candidate in range((1 << m) + 1, 1 << (m + 1), 2):
        if irreducible_factor(candidate) is not None:
            continue
        if all(poly_powmod(2, order // p, candidate) != 1 for p in prime_parts):
            return candidate
    raise AssertionError(f"no primitive polynomial of degree {m} found")


class Field:
    """GF(2^m) with a verified irreducible modulus and a primitive generator.

    Immutable after construction apart from the inversion counter, which is
    pure diagnostics.
    """

    def __init__(self, m: int, modulus: int | None = None):
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        if modulus is None:
            modulus = default_modulus(m)
        if poly_degree(modulus) != m:
            raise ValueError(
                f"modulus {poly_str(modulus)} has degree {poly_degree(modulus)}, expected {m}"
            )
        factor = irreducible_factor(modulus)
        if factor is not None:
            raise ReducibleModulusError(modulus, factor)

        self.m = m
        self.modulus = modulus
        self.size = 1 << m
        self.order = self.size - 1  # multiplicative group order
        self._inversions = 0
        self._order_prime_parts = prime_factors(self.order) if self.order > 1 else []
        self.generator_bits = self._find_generator()

        self._log: list[int] | None = None
        self._exp: list[int] | None = None
        if m <= MAX_TABLE_DEGREE:
            self._build_tables()

    # -- construction helpers -------------------------------------------------

    def _element_order_full(self, bits: int) -> bool:
        return all(
            poly_powmod(bits, self.order // p, self.modulus) != 1
            for p in self._order_prime_parts
        )

    def _find_generator(self) -> int:
        if self.order == 1:
            return 1
        for bits in range(2, self.size):
            if self._element_order_full(bits):
                return bits
        raise AssertionError("no generator found; modulus not irreducible?")

    def _build_tables(self) -> None:
        exp = [0] * self.order
        log = [0] * self.size
        acc = 1
        for i in range(self.order):
            exp[i] = acc
            log[acc] = i
            acc = poly_mod(poly_mul(acc, self.generator_bits), self.modulus)
        assert acc == 1, "generator order is not 2^m - 1"
        self._exp = exp
        self._log = log

    # -- raw int arithmetic ----------------------------------------------------

    def mul_bits(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % self.order]
        return poly_mod(poly_mul(a, b), self.modulus)

    def pow_bits(self, a: int, k: int) -> int:
        if k < 0:
            raise ValueError("negative exponent: use inverse() explicitly")
        if a == 0:
            return 1 if k == 0 else 0
        if self._log is not None:
            return self._exp[(self._log[a] * k) % self.order]
        return poly_powmod(a, k % self.order if k else 0, self.modulus)

    def inv_bits(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        self._inversions += 1
        if self._log is not None:
            return self._exp[(self.order - self._log[a]) % self.order]
        return poly_powmod(a, self.order - 1, self.modulus)

    # -- public surface --------------------------------------------------------

    @property
    def inversion_count(self) -> int:
        return self._inversions

    def element(self, bits: int) -> "FieldElement":
        if not 0 <= bits < self.size:
            raise ValueError(f"element bits {bits:#x} out of range for GF(2^{self.m})")
        return FieldElement(bits, self)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    @property
    def generator(self) -> "FieldElement":
        return FieldElement(self.generator_bits, self)

    def elements(self):
        """All field elements, in bit order."""
        return (FieldElement(b, self) for b in range(self.size))

    def __repr__(self) -> str:
        return f"Field(GF(2^{self.m}), modulus={poly_str(self.modulus)})"


@dataclass(frozen=True, slots=True)
class FieldElement:
    bits: int
    field: Field

    def _check(self, other: "FieldElement") -> None:
        if self.field is not other.field:
            raise ValueError("elements belong to different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.bits ^ other.bits, self.field)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field.mul_bits(self.bits, other.bits), self.field)

    def __pow__(self, k: int) -> "FieldElement":
        return FieldElement(self.field.pow_bits(self.bits, k), self.field)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field.inv_bits(self.bits), self.field)

    def __bool__(self) -> bool:
        return self.bits != 0

    def multiplicative_order(self) -> int:
        if self.bits == 0:
            raise ValueError("zero has no multiplicative order")
        order = self.field.order
        for p in prime_factors(order) if order > 1 else []:
            while order % p == 0 and self.field.pow_bits(self.bits, order // p) == 1:
                order //= p
        return order

    def __repr__(self) -> str:
        return f"GF(2^{self.field.m}):{self.bits:#x}"


@dataclass(frozen=True, slots=True)
class RootOfUnity:
    """A field element of multiplicative order exactly n, with modular powering."""

    alpha: FieldElement
    n: int

    def pow(self, k: int) -> FieldElement:
        return self.alpha ** (k % self.n)

    def inverse_root(self) -> "RootOfUnity":
        # alpha^(n-1) = alpha^(-1); no field inversion performed.
        return RootOfUnity(self.pow(self.n - 1), self.n)

    @property
    def field(self) -> Field:
        return self.alpha.field


def nth_root(field: Field, n: int) -> RootOfUnity:
    """generator^((2^m-1)/n), verified to have order exactly n."""
    if n <= 0 or field.order % n != 0:
        raise ValueError(f"{n} does not divide 2^{field.m} - 1 = {field.order}")
    alpha = field.generator ** (field.order // n)
    if alpha.multiplicative_order() != n:
        raise AssertionError(f"candidate root has order {alpha.multiplicative_order()}, wanted {n}")
    return RootOfUnity(alpha, n)


def root_from_exponent(field: Field, n: int, exponent: int) -> RootOfUnity:
    """generator^exponent as a primitive n-th root, order-checked."""
    if field.order % n != 0:
        raise ValueError(f"{n} does not divide 2^{field.m} - 1 = {field.order}")
    alpha = field.generator ** exponent
    if not alpha or alpha.multiplicative_order() != n:
        raise ValueError(
            f"generator^{exponent} has order "
            f"{alpha.multiplicative_order() if alpha else 0}, not {n}"
        )
    return RootOfUnity(alpha, n)


def field_transform(vec: Sequence[FieldElement], root: RootOfUnity) -> list[FieldElement]:
    """[v(root^i) for i in 0..n-1] where v is the polynomial with coefficients vec."""
    n = root.n
    if len(vec) != n:
        raise ValueError(f"vector length {len(vec)} != n = {n}")
    out = []
    for i in range(n):
        point = root.pow(i)
        acc = root.field.zero
        for coeff in reversed(vec):
            acc = acc * point + coeff
        out.append(acc)
    return out


def fourier_transform(word: Sequence[int], alpha: RootOfUnity) -> list[FieldElement]:
    """Spectral vector S with S_i = c(alpha^i), for a binary word c."""
    field = alpha.field
    if len(word) != alpha.n:
        raise ValueError(f"word length {len(word)} != n = {alpha.n}")
    if any(bit not in (0, 1) for bit in word):
        raise ValueError("word must be binary")
    embedded = [field.one if bit else field.zero for bit in word]
    return field_transform(embedded, alpha)


def inverse_fourier(spectrum: Sequence[FieldElement], alpha: RootOfUnity) -> list[FieldElement]:
    """e with e_j = sum_i S_i alpha^(-ij); n odd makes the 1/n factor trivial."""
    if alpha.n % 2 == 0:
        raise ValueError("length must be odd")
    return field_transform(list(spectrum), alpha.inverse_root())
