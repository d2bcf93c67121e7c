"""Multivariate polynomials with GF(2) coefficients over the decoding variables.

A polynomial is a set of monomials (coefficient 1 iff present); addition is
symmetric difference.  Monomials are dense exponent tuples laid out in the
ring's priority order, so pure-lex comparison is plain tuple comparison.
Variables come in four kinds: locator coefficients s<i> (sigma), spectral
coordinates S<i>, locators Z<i>, and the single saturation variable r.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence

from .finite_field import Field, FieldElement


class Variable(NamedTuple):
    kind: str  # "sigma" | "S" | "Z" | "r"
    index: int

    @property
    def name(self) -> str:
        if self.kind == "r":
            return "r"
        prefix = {"sigma": "s", "S": "S", "Z": "Z"}[self.kind]
        return f"{prefix}{self.index}"

    @classmethod
    def from_name(cls, token: str) -> "Variable":
        if token == "r":
            return cls("r", 0)
        kind = {"s": "sigma", "S": "S", "Z": "Z"}.get(token[:1])
        if kind is None or not token[1:].isdigit():
            raise ValueError(f"unknown variable token {token!r}")
        return cls(kind, int(token[1:]))


def sigma_var(i: int) -> Variable:
    return Variable("sigma", i)


def syndrome_var(i: int) -> Variable:
    return Variable("S", i)


def locator_var(i: int) -> Variable:
    return Variable("Z", i)


SATURATION_VAR = Variable("r", 0)


class PolyParseError(ValueError):
    def __init__(self, message: str, column: int):
        self.column = column
        super().__init__(f"{message} (column {column})")


@dataclass(frozen=True)
class MonomialOrder:
    """Total order on monomials: a variable priority plus a comparison scheme.

    scheme is None for pure lexicographic, or a tuple of (block_length,
    "lex"|"grevlex") blocks covering the priority list; blocks are compared
    left to right, which keeps prefix elimination valid at block boundaries.
    """

    priority: tuple[Variable, ...]
    scheme: tuple[tuple[int, str], ...] | None = None

    def __post_init__(self):
        if len(set(self.priority)) != len(self.priority):
            raise ValueError("duplicate variable in priority list")
        if self.scheme is not None:
            if sum(length for length, _ in self.scheme) != len(self.priority):
                raise ValueError("block lengths must cover the variable list")
            for _, inner in self.scheme:
                if inner not in ("lex", "grevlex"):
                    raise ValueError(f"unknown inner order {inner!r}")

    @property
    def tag(self) -> str:
        names = ",".join(v.name for v in self.priority)
        if self.scheme is None:
            return f"lex:{names}"
        blocks = "/".join(f"{length}.{inner}" for length, inner in self.scheme)
        return f"block[{blocks}]:{names}"

    @classmethod
    def from_tag(cls, tag: str) -> "MonomialOrder":
        head, _, names = tag.partition(":")
        priority = tuple(Variable.from_name(tok) for tok in names.split(",") if tok)
        if head == "lex":
            return cls(priority, None)
        match = re.fullmatch(r"block\[([0-9a-z./]+)\]", head)
        if not match:
            raise ValueError(f"unknown order tag {tag!r}")
        scheme = tuple(
            (int(part.split(".")[0]), part.split(".")[1]) for part in match.group(1).split("/")
        )
        return cls(priority, scheme)

    def key_function(self) -> Callable[[tuple[int, ...]], tuple] | None:
        """None means monomial tuples compare directly (pure lex)."""
        if self.scheme is None:
            return None
        slices = []
        start = 0
        for length, inner in self.scheme:
            slices.append((start, start + length, inner))
            start += length

        def key(mono: tuple[int, ...]) -> tuple:
            parts: list[int] = []
            for lo, hi, inner in slices:
                chunk = mono[lo:hi]
                if inner == "lex":
                    parts.extend(chunk)
                else:  # grevlex: degree first, then reversed negated exponents
                    parts.append(sum(chunk))
                    parts.extend(-e for e in reversed(chunk))
            return tuple(parts)

        return key


# -- monomial helpers (dense exponent tuples) ---------------------------------

def mono_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: tuple[int, ...]) -> int:
    return sum(a)


class PolyRing:
    """The polynomial algebra F2[priority variables] under a monomial order."""

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.variables = order.priority
        self.nvars = len(order.priority)
        self._index = {v: i for i, v in enumerate(order.priority)}
        self.keyfn = order.key_function()
        self.unit_mono: tuple[int, ...] = (0,) * self.nvars

    # -- construction ----------------------------------------------------------

    def var_index(self, v: Variable) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"variable {v.name} not in this ring") from None

    def monomial(self, exponents: Mapping[Variable, int]) -> tuple[int, ...]:
        exps = [0] * self.nvars
        for v, e in exponents.items():
            if e < 0:
                raise ValueError("negative exponent")
            exps[self.var_index(v)] = e
        return tuple(exps)

    def poly(self, monomials: Iterable[tuple[int, ...]]) -> "Poly2":
        acc: set[tuple[int, ...]] = set()
        for m in monomials:
            acc ^= {m}
        return Poly2(self, frozenset(acc))

    @property
    def zero(self) -> "Poly2":
        return Poly2(self, frozenset())

    @property
    def one(self) -> "Poly2":
        return Poly2(self, frozenset((self.unit_mono,)))

    def var(self, v: Variable, power: int = 1) -> "Poly2":
        return Poly2(self, frozenset((self.monomial({v: power}),)))

    # -- order operations --------------------------------------------------------

    def mono_key(self, m: tuple[int, ...]):
        return m if self.keyfn is None else self.keyfn(m)

    def max_mono(self, monos) -> tuple[int, ...]:
        return max(monos) if self.keyfn is None else max(monos, key=self.keyfn)

    def sorted_monos(self, monos, reverse: bool = True) -> list[tuple[int, ...]]:
        return sorted(monos, key=self.keyfn, reverse=reverse) if self.keyfn else sorted(monos, reverse=reverse)

    def elimination_prefix(self, keep: frozenset[Variable]) -> int | None:
        """Number of leading priority variables eliminated when keeping
        exactly `keep`, or None if the split is not order-compatible."""
        positions = [self._index[v] for v in keep if v in self._index]
        if len(positions) != len(keep):
            return None
        if not positions:
            cut = self.nvars
        else:
            cut = min(positions)
            if set(positions) != set(range(cut, self.nvars)):
                return None
        if self.order.scheme is not None:
            boundary = 0
            boundaries = {0}
            for length, _ in self.order.scheme:
                boundary += length
                boundaries.add(boundary)
            if cut not in boundaries:
                return None
        return cut

    # -- text form ----------------------------------------------------------------

    def format_poly(self, f: "Poly2") -> str:
        if not f.monos:
            return "0"
        parts = []
        for m in self.sorted_monos(f.monos):
            factors = [
                v.name if e == 1 else f"{v.name}^{e}"
                for v, e in zip(self.variables, m)
                if e
            ]
            parts.append("*".join(factors) if factors else "1")
        return " + ".join(parts)

    _TOKEN = re.compile(r"(?P<ws>\s+)|(?P<name>r|[sSZ]\d+)|(?P<int>\d+)|(?P<op>[\^*+])")

    def _tokenize(self, text: str) -> list[tuple[str, str, int]]:
        tokens = []
        pos = 0
        while pos < len(text):
            match = self._TOKEN.match(text, pos)
            if not match:
                raise PolyParseError(f"unexpected character {text[pos]!r}", pos + 1)
            pos = match.end()
            if match.lastgroup != "ws":
                tokens.append((match.lastgroup, match.group(match.lastgroup), match.start() + 1))
        return tokens

    def _parse_term(self, toks: list[tuple[str, str, int]]) -> tuple[int, ...] | None:
        """One '+'-separated term; None for a literal 0 term."""
        exps = [0] * self.nvars
        is_zero = False
        i = 0
        expect_factor = True
        while i < len(toks):
            kind, val, col = toks[i]
            if expect_factor:
                if kind == "name":
                    try:
                        idx = self.var_index(Variable.from_name(val))
                    except ValueError as exc:
                        raise PolyParseError(str(exc), col) from None
                    power = 1
                    if i + 1 < len(toks) and toks[i + 1][:2] == ("op", "^"):
                        if i + 2 >= len(toks) or toks[i + 2][0] != "int":
                            raise PolyParseError("'^' must be followed by an exponent", toks[i + 1][2])
                        power = int(toks[i + 2][1])
                        i += 2
                    exps[idx] += power
                elif kind == "int":
                    if val == "0":
                        is_zero = True
                    elif val != "1":
                        raise PolyParseError(f"coefficient {val} is not a GF(2) literal", col)
                else:
                    raise PolyParseError(f"expected a factor, got {val!r}", col)
                expect_factor = False
            else:
                if kind == "op" and val == "*":
                    expect_factor = True
                else:
                    raise PolyParseError(f"expected '*' or '+', got {val!r}", col)
            i += 1
        if expect_factor:
            column = toks[-1][2] if toks else 1
            raise PolyParseError("truncated term", column)
        return None if is_zero else tuple(exps)

    def parse_poly(self, text: str) -> "Poly2":
        tokens = self._tokenize(text)
        if not tokens:
            raise PolyParseError("empty polynomial", 1)
        terms: list[list[tuple[str, str, int]]] = [[]]
        for tok in tokens:
            if tok[:2] == ("op", "+"):
                terms.append([])
            else:
                terms[-1].append(tok)
        monos: set[tuple[int, ...]] = set()
        for term in terms:
            if not term:
                raise PolyParseError("empty term", 1)
            mono = self._parse_term(term)
            if mono is not None:
                monos ^= {mono}
        return Poly2(self, frozenset(monos))

    def convert(self, f: "Poly2", *, source: "PolyRing") -> "Poly2":
        """Re-express a polynomial from another ring in this ring's layout."""
        out = set()
        for m in f.monos:
            exps = [0] * self.nvars
            for v, e in zip(source.variables, m):
                if e:
                    exps[self.var_index(v)] = e
            out.add(tuple(exps))
        return Poly2(self, frozenset(out))

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyRing) and self.order == other.order

    def __hash__(self) -> int:
        return hash(self.order)

    def __repr__(self) -> str:
        return f"PolyRing({self.order.tag})"


class Poly2:
    """GF(2)-coefficient polynomial: an immutable set of monomials."""

    __slots__ = ("ring", "monos", "_lm")

    def __init__(self, ring: PolyRing, monos: frozenset):
        self.ring = ring
        self.monos = monos
        self._lm: tuple[int, ...] | None = None

    def _check(self, other: "Poly2") -> None:
        if self.ring is not other.ring and self.ring != other.ring:
            raise ValueError("polynomials live in different variable universes")

    def __add__(self, other: "Poly2") -> "Poly2":
        self._check(other)
        return Poly2(self.ring, self.monos ^ other.monos)

    __sub__ = __add__

    def __mul__(self, other: "Poly2") -> "Poly2":
        self._check(other)
        acc: set[tuple[int, ...]] = set()
        for ma in self.monos:
            acc ^= {mono_mul(ma, mb) for mb in other.monos}
        return Poly2(self.ring, frozenset(acc))

    def mul_monomial(self, m: tuple[int, ...]) -> "Poly2":
        return Poly2(self.ring, frozenset(mono_mul(m, mm) for mm in self.monos))

    def __pow__(self, k: int) -> "Poly2":
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.monos)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly2) and self.ring == other.ring and self.monos == other.monos

    def __hash__(self) -> int:
        return hash(self.monos)

    def leading_monomial(self) -> tuple[int, ...]:
        if not self.monos:
            raise ValueError("the zero polynomial has no leading monomial")
        if self._lm is None:
            self._lm = self.ring.max_mono(self.monos)
        return self._lm

    def tail(self) -> "Poly2":
        return Poly2(self.ring, self.monos - {self.leading_monomial()})

    def variables(self) -> frozenset[Variable]:
        used = set()
        for m in self.monos:
            for v, e in zip(self.ring.variables, m):
                if e:
                    used.add(v)
        return frozenset(used)

    def total_degree(self) -> int:
        return max((mono_degree(m) for m in self.monos), default=0)

    def __repr__(self) -> str:
        return self.ring.format_poly(self)


def evaluate(
    f: Poly2,
    assignment: Mapping[Variable, FieldElement],
    *,
    field: Field | None = None,
) -> FieldElement:
    """Substitute field elements for variables; GF(2) coefficients embed as 0/1.

    The target field is inferred from the assignment; pass `field` explicitly
    when the assignment may be empty.
    """
    if field is None:
        for value in assignment.values():
            field = value.field
            break
    if field is None:
        raise ValueError("cannot infer target field from an empty assignment")
    used = f.variables()
    missing = [v for v in used if v not in assignment]
    if missing:
        raise ValueError(f"assignment missing variable {sorted(m.name for m in missing)[0]}")
    total = field.zero
    for m in f.monos:
        term = field.one
        for v, e in zip(f.ring.variables, m):
            if e:
                term = term * (assignment[v] ** e)
        total = total + term
    return total
