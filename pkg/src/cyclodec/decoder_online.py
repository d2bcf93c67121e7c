"""Online decoding: syndromes -> weight detection -> formula substitution ->
Chien search -> correction.

The saturated path never divides: locator coefficients come straight out of
polynomial evaluation (auditable through the field's inversion counter).
The field-equation path scans each relation set for an applicable divisor
p_i with p_i(S) != 0 and divides once per coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .codec import ChienSplitError, CyclicCode, ErrorPattern, LocatorPoly, chien_search, syndromes
from .finite_field import FieldElement
from .formula_extraction import VARIANT_FIELDEQ, VARIANT_SATURATED, FormulaSet
from .polyring import Variable, evaluate, syndrome_var


class ArtifactMismatchError(ValueError):
    """Formula file does not belong to this code."""


@dataclass
class DecodeResult:
    ok: bool
    corrected: tuple[int, ...]
    error: ErrorPattern | None
    weight: int | None
    path: str
    detail: str = ""
    diagnostics: dict = field(default_factory=dict)


def _check_artifacts(code: CyclicCode, formulas: FormulaSet) -> None:
    from .codespec import code_hash

    if formulas.n != code.n or tuple(formulas.Q) != code.Q:
        raise ArtifactMismatchError(
            f"formula file is for n={formulas.n}, Q={list(formulas.Q)}; "
            f"code has n={code.n}, Q={list(code.Q)}"
        )
    expected = code_hash(code)
    if formulas.code_hash != expected:
        raise ArtifactMismatchError(
            f"formula file hash {formulas.code_hash} does not match code hash {expected}"
        )


def _assignment(syn: Mapping[int, FieldElement]) -> dict[Variable, FieldElement]:
    return {syndrome_var(i): v for i, v in syn.items()}


def detect_weight(
    syn: Mapping[int, FieldElement],
    formulas: FormulaSet,
    *,
    check_unique: bool = False,
) -> int | None:
    """The error weight whose criteria all vanish on these syndromes.

    Scans w = 0..w_max ascending and returns the first full match; None
    means uncorrectable.  For the saturated variant the match is unique
    (weight-w criteria vanish exactly on weight-w syndromes); pass
    check_unique to assert that instead of stopping early.
    """
    assign = _assignment(syn)
    field = next(iter(syn.values())).field
    matches = []
    for w in range(formulas.w_max + 1):
        if all(not evaluate(t, assign, field=field) for t in formulas.criteria[w]):
            matches.append(w)
            if not check_unique:
                return w
    if not matches:
        return None
    if check_unique and formulas.variant == VARIANT_SATURATED and len(matches) > 1:
        raise AssertionError(
            f"criteria matched several weights {matches}: inconsistent artifacts"
        )
    return matches[0]


def _finish(
    code: CyclicCode,
    y: Sequence[int],
    sigma: LocatorPoly,
    w: int,
    path: str,
    diagnostics: dict,
) -> DecodeResult:
    received = tuple(y)
    try:
        pattern = chien_search(sigma, code)
    except ChienSplitError as exc:
        return DecodeResult(False, received, None, w, path, str(exc), diagnostics)
    corrected = pattern.apply(received)
    if any(v for v in syndromes(corrected, code).values()):
        return DecodeResult(
            False, received, None, w, path,
            "post-correction syndromes are nonzero", diagnostics,
        )
    return DecodeResult(True, corrected, pattern, w, path, "", diagnostics)


def one_step_decode(
    y: Sequence[int],
    code: CyclicCode,
    formulas: FormulaSet,
    *,
    check_unique: bool = False,
) -> DecodeResult:
    """Decode by direct substitution of syndromes into precomputed formulas.

    No field division happens anywhere on this path.  On any failure the
    received word is returned unchanged with ok=False and a reason.
    """
    if formulas.variant != VARIANT_SATURATED:
        raise ValueError("one_step_decode needs saturated-variant formulas")
    _check_artifacts(code, formulas)
    received = tuple(y)
    syn = syndromes(received, code)
    w = detect_weight(syn, formulas, check_unique=check_unique)
    diagnostics = {"matched_weight": w}
    if w is None:
        return DecodeResult(
            False, received, None, None, VARIANT_SATURATED, "uncorrectable", diagnostics
        )
    if w == 0:
        return DecodeResult(
            True, received, ErrorPattern(frozenset()), 0, VARIANT_SATURATED, "", diagnostics
        )
    assign = _assignment(syn)
    field = code.field
    coeffs = [field.one]
    for i in range(1, w + 1):
        coeffs.append(evaluate(formulas.formulas[w][i], assign, field=field))
    return _finish(code, received, LocatorPoly(tuple(coeffs)), w, VARIANT_SATURATED, diagnostics)


def decode_with_division(
    y: Sequence[int],
    code: CyclicCode,
    formulas: FormulaSet,
) -> DecodeResult:
    """Same pipeline on field-equation artifacts: per coefficient, scan the
    relation set for the first p_i with p_i(S) != 0 and divide."""
    if formulas.variant != VARIANT_FIELDEQ:
        raise ValueError("decode_with_division needs fieldeq-variant formulas")
    _check_artifacts(code, formulas)
    received = tuple(y)
    syn = syndromes(received, code)
    w = detect_weight(syn, formulas)
    diagnostics: dict = {"matched_weight": w, "relations_used": {}}
    if w is None:
        return DecodeResult(
            False, received, None, None, VARIANT_FIELDEQ, "uncorrectable", diagnostics
        )
    if w == 0:
        return DecodeResult(
            True, received, ErrorPattern(frozenset()), 0, VARIANT_FIELDEQ, "", diagnostics
        )
    assign = _assignment(syn)
    field = code.field
    coeffs = [field.one]
    for i in range(1, w + 1):
        chosen = None
        for index, (p, q) in enumerate(formulas.relations[w][i]):
            denominator = evaluate(p, assign, field=field)
            if denominator:
                chosen = index
                coeffs.append(evaluate(q, assign, field=field) * denominator.inverse())
                break
        if chosen is None:
            return DecodeResult(
                False, received, None, w, VARIANT_FIELDEQ,
                f"no applicable relation for s{i} at weight {w}", diagnostics,
            )
        diagnostics["relations_used"][i] = chosen
    return _finish(code, received, LocatorPoly(tuple(coeffs)), w, VARIANT_FIELDEQ, diagnostics)
