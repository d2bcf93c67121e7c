"""Extraction and serialization of the precomputed decoding artifacts.

From the reduced Groebner bases this pulls, per error weight w:

  * the weight criteria T_w: basis polynomials in the known-syndrome
    variables only (they vanish exactly on weight-w syndromes for the
    saturated variant, and on weight <= w for the field-equation variant);
  * division-free locator formulas q_{i,w} with s_i + q_{i,w} in the basis
    (saturated variant; requires the *reduced* basis, whose tails cannot
    contain other leading variables);
  * relation sets Sigma_{w,i} of pairs (p_i, q_i) with p_i*s_i + q_i in the
    basis (field-equation variant; the online decoder divides by p_i).

Formula file grammar (UTF-8 text, one logical item per line):

    file      := meta NL wline (NL wline)*
    meta      := "[meta]" SP "code=" HEX16 " n=" INT " Q=" INT ("," INT)*
                 " variant=" ("saturated"|"fieldeq") " order=" TAG " w_max=" INT
    wline     := "[w=" INT "]" " T:" polys? " Q:" qitems? (" R:" ritems?)?
    polys     := SP poly (" ; " poly)*
    qitems    := SP "i=" INT ": " poly (" | i=" INT ": " poly)*
    ritems    := SP "i=" INT ": " rel (" ; " rel)* (" | i=" INT ": " ...)*
    rel       := poly " , " poly                      -- the pair (p, q)
    poly      := mono (" + " mono)* | "0"
    mono      := "1" | factor ("*" factor)*
    factor    := var ("^" INT)?
    var       := "r" | "s" INT | "S" INT | "Z" INT    -- s=locator coeff, S=syndrome

Printing is canonical (monomials in decreasing decoding order, criteria
sorted by leading monomial), so identical inputs serialize byte-identically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dataclass_field
from typing import TextIO

from .codec import CyclicCode
from .groebner import GroebnerBasis
from .ideal_builders import (
    decoding_ring,
    field_eq_newton_ideal,
    saturated_newton_ideal,
    SaturationResult,
)
from .polyring import Poly2, PolyRing, sigma_var, syndrome_var

VARIANT_SATURATED = "saturated"
VARIANT_FIELDEQ = "fieldeq"


class FormulaMissingError(RuntimeError):
    """No basis element with leading monomial s_i: violated theorem or wrong order."""


class FormulaFormatError(ValueError):
    def __init__(self, message: str, line: int, column: int | None = None):
        self.line = line
        self.column = column
        at = f"line {line}" + (f", column {column}" if column else "")
        super().__init__(f"{message} ({at})")


@dataclass
class FormulaSet:
    """All precomputed artifacts for one code: criteria and formulas per weight."""

    code_hash: str
    n: int
    Q: tuple[int, ...]
    variant: str
    order_tag: str
    w_max: int
    ring: PolyRing
    criteria: dict[int, list[Poly2]] = dataclass_field(default_factory=dict)
    formulas: dict[int, dict[int, Poly2]] = dataclass_field(default_factory=dict)
    relations: dict[int, dict[int, list[tuple[Poly2, Poly2]]]] = dataclass_field(default_factory=dict)
    gb_stats: dict[int, str] = dataclass_field(default_factory=dict)

    def __eq__(self, other) -> bool:
        return isinstance(other, FormulaSet) and serialize(self) == serialize(other)


def weight_criteria(basis: list[Poly2] | GroebnerBasis, Q) -> list[Poly2]:
    """The subset of basis polynomials using known-syndrome variables only.

    An empty result is legal: it means no constraint, every syndrome passes.
    """
    polys = basis.polys if isinstance(basis, GroebnerBasis) else basis
    known = {syndrome_var(i) for i in Q}
    return [p for p in polys if p.variables() <= known]


def sigma_formulas(elim_basis: list[Poly2], Q, w: int) -> dict[int, Poly2]:
    """q_{i,w} per i: the tail of the unique basis element led by s_i.

    The basis must be reduced and computed with unknowns above s above
    known syndromes; anything else is surfaced, never patched over.
    """
    known = {syndrome_var(i) for i in Q}
    out: dict[int, Poly2] = {}
    for i in range(1, w + 1):
        matches = []
        for p in elim_basis:
            ring = p.ring
            if p.leading_monomial() == ring.monomial({sigma_var(i): 1}):
                matches.append(p)
        if len(matches) != 1:
            raise FormulaMissingError(
                f"expected exactly one basis element with leading monomial s{i}, "
                f"found {len(matches)}: formula missing for weight {w}"
            )
        candidate = matches[0]
        tail = candidate + candidate.ring.var(sigma_var(i))
        if not tail.variables() <= known:
            raise FormulaMissingError(
                f"tail of the s{i} element uses variables outside the known "
                f"syndromes: {sorted(v.name for v in tail.variables() - known)}"
            )
        out[i] = tail
    return out


def sigma_relations_general(gb: GroebnerBasis, Q, w: int) -> dict[int, list[tuple[Poly2, Poly2]]]:
    """Sigma_{w,i}: basis elements of the shape p_i*s_i + q_i, p_i, q_i in F2[S_Q].

    Relations are sorted simplest-p first so the online divisor search tries
    the cheapest denominator before the others.  Empty groups are reported
    by the caller, not silently dropped here.
    """
    ring = gb.ring
    known = {syndrome_var(i) for i in Q}
    svars = {sigma_var(i): i for i in range(1, w + 1)}
    groups: dict[int, list[tuple[Poly2, Poly2]]] = {i: [] for i in range(1, w + 1)}
    for poly in gb.polys:
        used = poly.variables()
        touched = [v for v in used if v in svars]
        if len(touched) != 1:
            continue
        sv = touched[0]
        if not (used - {sv}) <= known:
            continue
        sidx = ring.var_index(sv)
        p_monos, q_monos = [], []
        linear = True
        for mono in poly.monos:
            if mono[sidx] == 0:
                q_monos.append(mono)
            elif mono[sidx] == 1:
                p_monos.append(tuple(0 if k == sidx else e for k, e in enumerate(mono)))
            else:
                linear = False
                break
        if not linear or not p_monos:
            continue
        groups[svars[sv]].append((ring.poly(p_monos), ring.poly(q_monos)))
    for i in groups:
        groups[i].sort(key=lambda pq: (len(pq[0].monos), ring.format_poly(pq[0]), ring.format_poly(pq[1])))
    return groups


@dataclass
class PrecomputeResult:
    formulas: FormulaSet
    saturations: dict[int, SaturationResult]
    fieldeq_bases: dict[int, GroebnerBasis]


def precompute_detailed(
    code: CyclicCode,
    *,
    variant: str = VARIANT_SATURATED,
    w_max: int | None = None,
    scheme: str = "lex",
    pair_budget: int | None = None,
    deadline: float | None = None,
    trace: TextIO | None = None,
) -> PrecomputeResult:
    """Run the per-weight Groebner precomputations and extract all artifacts.

    Keeps the underlying bases around for diagnostics and self-checks; use
    precompute_formulas when only the FormulaSet matters.
    """
    from .codespec import code_hash  # local import: codespec depends on codec

    if variant not in (VARIANT_SATURATED, VARIANT_FIELDEQ):
        raise ValueError(f"unknown variant {variant!r}")
    if w_max is None:
        w_max = code.t
    if not 0 <= w_max <= code.t:
        raise ValueError(f"w_max must lie in 0..t = 0..{code.t}, got {w_max}")

    target_ring = decoding_ring(code.n, w_max, code.Q, with_locators=False)
    fs = FormulaSet(
        code_hash=code_hash(code),
        n=code.n,
        Q=code.Q,
        variant=variant,
        order_tag=target_ring.order.tag,
        w_max=w_max,
        ring=target_ring,
    )
    result = PrecomputeResult(fs, {}, {})

    # weight 0 needs no elimination: zero error means all syndromes vanish
    fs.criteria[0] = [target_ring.var(syndrome_var(i)) for i in code.Q]
    fs.formulas[0] = {}
    fs.relations[0] = {}
    fs.gb_stats[0] = "trivial"

    def to_target(p: Poly2) -> Poly2:
        return target_ring.convert(p, source=p.ring)

    for w in range(1, w_max + 1):
        if variant == VARIANT_SATURATED:
            sat = saturated_newton_ideal(
                code.n, w, code.Q,
                scheme=scheme, pair_budget=pair_budget, deadline=deadline, trace=trace,
            )
            result.saturations[w] = sat
            fs.criteria[w] = [to_target(p) for p in weight_criteria(sat.eliminated, code.Q)]
            fs.formulas[w] = {
                i: to_target(q) for i, q in sigma_formulas(sat.eliminated, code.Q, w).items()
            }
            fs.relations[w] = {}
            fs.gb_stats[w] = sat.full.stats.summary()
        else:
            gb = field_eq_newton_ideal(
                code.n, w, code.Q, code.m,
                scheme=scheme, pair_budget=pair_budget, deadline=deadline, trace=trace,
            )
            result.fieldeq_bases[w] = gb
            fs.criteria[w] = [to_target(p) for p in weight_criteria(gb, code.Q)]
            fs.formulas[w] = {}
            groups = sigma_relations_general(gb, code.Q, w)
            empty = [i for i, rels in groups.items() if not rels]
            if empty:
                raise FormulaMissingError(
                    f"no p*s_i + q relations for i in {empty} at weight {w}"
                )
            fs.relations[w] = {
                i: [(to_target(p), to_target(q)) for p, q in rels]
                for i, rels in groups.items()
            }
            fs.gb_stats[w] = gb.stats.summary()

    return result


def precompute_formulas(code: CyclicCode, **kwargs) -> FormulaSet:
    """Precompute criteria and formulas for weights 0..w_max (default 0..t)."""
    return precompute_detailed(code, **kwargs).formulas


# -- serialization --------------------------------------------------------------


def serialize(fs: FormulaSet) -> str:
    ring = fs.ring
    lines = [
        f"[meta] code={fs.code_hash} n={fs.n} Q={','.join(str(i) for i in fs.Q)} "
        f"variant={fs.variant} order={fs.order_tag} w_max={fs.w_max}"
    ]
    for w in range(fs.w_max + 1):
        criteria = sorted(
            fs.criteria.get(w, ()),
            key=lambda p: ring.mono_key(p.leading_monomial()),
            reverse=True,
        )
        parts = [f"[w={w}] T:"]
        if criteria:
            parts.append(" " + " ; ".join(ring.format_poly(p) for p in criteria))
        parts.append(" Q:")
        formulas = fs.formulas.get(w, {})
        if formulas:
            parts.append(
                " " + " | ".join(
                    f"i={i}: {ring.format_poly(formulas[i])}" for i in sorted(formulas)
                )
            )
        relations = fs.relations.get(w, {})
        if relations:
            parts.append(" R: ")
            groups = []
            for i in sorted(relations):
                rels = " ; ".join(
                    f"{ring.format_poly(p)} , {ring.format_poly(q)}" for p, q in relations[i]
                )
                groups.append(f"i={i}: {rels}")
            parts.append(" | ".join(groups))
        lines.append("".join(parts))
    return "\n".join(lines) + "\n"


_META_RE = re.compile(
    r"\[meta\] code=(?P<code>[0-9a-f]+) n=(?P<n>\d+) Q=(?P<Q>[\d,]+) "
    r"variant=(?P<variant>\w+) order=(?P<order>\S+) w_max=(?P<wmax>\d+)$"
)
_WLINE_RE = re.compile(r"\[w=(?P<w>\d+)\] T:(?P<rest>.*)$")


def _split_sections(rest: str) -> tuple[str, str, str]:
    """Split the after-T part of a weight line into T, Q and R payloads."""
    qpos = rest.find(" Q:")
    if qpos < 0:
        raise ValueError("missing Q: section")
    tpart = rest[:qpos]
    after_q = rest[qpos + 3:]
    rpos = after_q.find(" R: ")
    if rpos < 0:
        return tpart, after_q, ""
    return tpart, after_q[:rpos], after_q[rpos + 4:]


def deserialize(text: str) -> FormulaSet:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormulaFormatError("empty formula file", 1)
    meta = _META_RE.match(lines[0].strip())
    if not meta:
        raise FormulaFormatError("malformed [meta] line", 1)
    n = int(meta.group("n"))
    Q = tuple(int(tok) for tok in meta.group("Q").split(","))
    variant = meta.group("variant")
    if variant not in (VARIANT_SATURATED, VARIANT_FIELDEQ):
        raise FormulaFormatError(f"unknown variant {variant!r}", 1)
    w_max = int(meta.group("wmax"))
    ring = decoding_ring(n, w_max, Q, with_locators=False)

    fs = FormulaSet(
        code_hash=meta.group("code"),
        n=n,
        Q=Q,
        variant=variant,
        order_tag=meta.group("order"),
        w_max=w_max,
        ring=ring,
    )

    def parse(fragment: str, lineno: int) -> Poly2:
        try:
            return ring.parse_poly(fragment)
        except ValueError as exc:
            column = getattr(exc, "column", None)
            raise FormulaFormatError(str(exc), lineno, column) from None

    seen = set()
    for lineno, line in enumerate(lines[1:], start=2):
        match = _WLINE_RE.match(line.strip())
        if not match:
            raise FormulaFormatError("malformed weight line", lineno)
        w = int(match.group("w"))
        if w in seen or w > w_max:
            raise FormulaFormatError(f"unexpected weight section w={w}", lineno)
        seen.add(w)
        try:
            tpart, qpart, rpart = _split_sections(match.group("rest"))
        except ValueError as exc:
            raise FormulaFormatError(str(exc), lineno) from None
        fs.criteria[w] = [
            parse(tok, lineno) for tok in tpart.split(" ; ") if tok.strip()
        ]
        fs.formulas[w] = {}
        if qpart.strip():
            for group in qpart.split(" | "):
                head, _, body = group.partition(":")
                idx = int(head.strip().removeprefix("i="))
                fs.formulas[w][idx] = parse(body.strip(), lineno)
        fs.relations[w] = {}
        if rpart.strip():
            for group in rpart.split(" | "):
                head, _, body = group.partition(":")
                idx = int(head.strip().removeprefix("i="))
                rels = []
                for rel in body.split(" ; "):
                    ptxt, sep, qtxt = rel.partition(" , ")
                    if not sep:
                        raise FormulaFormatError("relation must be 'p , q'", lineno)
                    rels.append((parse(ptxt.strip(), lineno), parse(qtxt.strip(), lineno)))
                fs.relations[w][idx] = rels
        fs.gb_stats[w] = "loaded"
    missing = set(range(w_max + 1)) - seen
    if missing:
        raise FormulaFormatError(f"missing weight sections {sorted(missing)}", len(lines))
    return fs


def write_formula_file(fs: FormulaSet, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(fs))


def read_formula_file(path: str) -> FormulaSet:
    with open(path, "r", encoding="utf-8") as fh:
        return deserialize(fh.read())
