"""The code-spec text format shared by the CLI and the decoder.

A code spec is a small key=value file pinning everything the precomputed
formulas depend on:

    # comments and blank lines are ignored
    name=bch15          (optional label)
    n=15
    Q=1,2,3,4,6,8,9,12
    m=4                 (optional; must equal the splitting degree of n)
    modulus=0x13        (optional; hex bitmask of the field modulus)
    alpha=273           (optional; exponent e with alpha = generator^e)
    d=5                 (optional; required only when dimension > 16)

The spec hash covers (n, Q, m, modulus, alpha) after defaults are resolved;
d is derivable metadata and deliberately excluded, so declaring a verified
distance does not orphan existing formula files.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .codec import CyclicCode, code_new
from .finite_field import default_modulus, splitting_field_degree

HASH_LENGTH = 16  # hex chars of sha256 kept in artifact headers


class CodeSpecError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"{message}" + (f" (line {line})" if line else ""))


@dataclass(frozen=True)
class CodeSpec:
    n: int
    Q: tuple[int, ...]
    m: int
    modulus: int
    alpha_exp: int
    d: int | None = None
    name: str | None = None

    def canonical(self) -> str:
        q = ",".join(str(i) for i in self.Q)
        return f"n={self.n};Q={q};m={self.m};modulus={self.modulus:#x};alpha={self.alpha_exp}"

    @property
    def hash(self) -> str:
        return hashlib.sha256(self.canonical().encode()).hexdigest()[:HASH_LENGTH]


def resolve(n: int, Q, *, m=None, modulus=None, alpha_exp=None, d=None, name=None) -> CodeSpec:
    """Fill in defaults: splitting degree, table modulus, canonical alpha."""
    expected_m = splitting_field_degree(n)
    if m is not None and m != expected_m:
        raise CodeSpecError(f"m={m} but the splitting degree of {n} is {expected_m}")
    modulus = default_modulus(expected_m) if modulus is None else modulus
    if alpha_exp is None:
        alpha_exp = ((1 << expected_m) - 1) // n
    return CodeSpec(n, tuple(sorted(set(Q))), expected_m, modulus, alpha_exp, d, name)


def parse_codespec(text: str) -> CodeSpec:
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise CodeSpecError(f"expected key=value, got {line!r}", lineno)
        key = key.strip()
        if key not in ("n", "Q", "m", "modulus", "alpha", "d", "name"):
            raise CodeSpecError(f"unknown key {key!r}", lineno)
        if key in values:
            raise CodeSpecError(f"duplicate key {key!r}", lineno)
        values[key] = value.strip()
    for required in ("n", "Q"):
        if required not in values:
            raise CodeSpecError(f"missing required key {required!r}")
    try:
        n = int(values["n"])
        Q = tuple(int(tok) for tok in values["Q"].split(",") if tok.strip())
        m = int(values["m"]) if "m" in values else None
        modulus = int(values["modulus"], 16) if "modulus" in values else None
        alpha_exp = int(values["alpha"]) if "alpha" in values else None
        d = int(values["d"]) if "d" in values else None
    except ValueError as exc:
        raise CodeSpecError(f"malformed value: {exc}") from None
    return resolve(n, Q, m=m, modulus=modulus, alpha_exp=alpha_exp, d=d, name=values.get("name"))


def format_codespec(spec: CodeSpec) -> str:
    lines = []
    if spec.name:
        lines.append(f"name={spec.name}")
    lines.append(f"n={spec.n}")
    lines.append("Q=" + ",".join(str(i) for i in spec.Q))
    lines.append(f"m={spec.m}")
    lines.append(f"modulus={spec.modulus:#x}")
    lines.append(f"alpha={spec.alpha_exp}")
    if spec.d is not None:
        lines.append(f"d={spec.d}")
    return "\n".join(lines) + "\n"


def read_codespec(path: str) -> CodeSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_codespec(fh.read())


def build_code(spec: CodeSpec) -> CyclicCode:
    return code_new(
        spec.n, spec.Q,
        m=spec.m, modulus=spec.modulus, alpha_exp=spec.alpha_exp, d=spec.d,
    )


def spec_of_code(code: CyclicCode) -> CodeSpec:
    return CodeSpec(
        code.n, code.Q, code.m, code.field.modulus, code.alpha_exp, code.d, None
    )


def code_hash(code: CyclicCode) -> str:
    return spec_of_code(code).hash
