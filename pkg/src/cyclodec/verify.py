"""Verification battery run by the `verify` CLI command.

Each check re-derives ground truth with brute force (pattern enumeration,
oracle decoding) and compares the precomputed artifacts against it; any
failure carries its first counterexample.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .codec import CyclicCode, ErrorPattern, encode, oracle_decode, syndromes
from .codespec import code_hash
from .decoder_online import decode_with_division, detect_weight, one_step_decode
from .formula_extraction import VARIANT_SATURATED, FormulaSet
from .polyring import evaluate, syndrome_var

SAMPLED_CODEWORDS = 10


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (
            f": {self.detail}" if self.detail and not self.ok else ""
        )


def _patterns_up_to(n: int, w: int):
    for weight in range(w + 1):
        for positions in itertools.combinations(range(n), weight):
            yield ErrorPattern(frozenset(positions))


def check_artifact_hash(code: CyclicCode, formulas: FormulaSet) -> CheckResult:
    expected = code_hash(code)
    ok = formulas.code_hash == expected and formulas.n == code.n and tuple(formulas.Q) == code.Q
    return CheckResult(
        "artifact-hash", ok,
        "" if ok else f"file hash {formulas.code_hash}, code hash {expected}",
    )


def check_formula_shape(code: CyclicCode, formulas: FormulaSet) -> CheckResult:
    known = {syndrome_var(i) for i in code.Q}
    for w in range(formulas.w_max + 1):
        for t in formulas.criteria[w]:
            if not t.variables() <= known:
                return CheckResult(
                    "formula-shape", False,
                    f"criterion at w={w} uses non-syndrome variables",
                )
        if formulas.variant == VARIANT_SATURATED:
            for i in range(1, w + 1):
                q = formulas.formulas[w].get(i)
                if q is None:
                    return CheckResult("formula-shape", False, f"missing formula i={i} at w={w}")
                if not q.variables() <= known:
                    return CheckResult(
                        "formula-shape", False,
                        f"formula i={i} at w={w} uses non-syndrome variables",
                    )
        else:
            for i in range(1, w + 1):
                rels = formulas.relations[w].get(i, [])
                if not rels:
                    return CheckResult("formula-shape", False, f"empty relation set i={i}, w={w}")
                for p, q in rels:
                    if not (p.variables() <= known and q.variables() <= known):
                        return CheckResult(
                            "formula-shape", False,
                            f"relation for i={i} at w={w} uses non-syndrome variables",
                        )
    return CheckResult("formula-shape", True)


def check_criterion_exactness(code: CyclicCode, formulas: FormulaSet) -> CheckResult:
    """Criteria vanish exactly on the syndrome sets they claim to describe.

    Scans every error of weight <= t+1.  Saturated criteria characterize
    weight exactly w; field-equation criteria characterize weight <= w.
    Membership is judged on syndrome values, so a weight-(t+1) error whose
    syndromes collide with a lighter coset is expected to pass that test.
    """
    scan_limit = min(code.t + 1, code.n)
    by_weight: dict[int, set] = {w: set() for w in range(scan_limit + 1)}
    for pattern in _patterns_up_to(code.n, scan_limit):
        by_weight[pattern.weight].add(code.pattern_syndrome_key(pattern))
    field = code.field
    for pattern in _patterns_up_to(code.n, scan_limit):
        word = pattern.apply((0,) * code.n)
        syn = syndromes(word, code)
        assign = {syndrome_var(i): v for i, v in syn.items()}
        key = code.pattern_syndrome_key(pattern)
        for w in range(formulas.w_max + 1):
            vanishes = all(not evaluate(t, assign, field=field) for t in formulas.criteria[w])
            if formulas.variant == VARIANT_SATURATED:
                expected = key in by_weight[w]
            else:
                expected = any(key in by_weight[v] for v in range(w + 1))
            if vanishes != expected:
                return CheckResult(
                    "criterion-exactness", False,
                    f"T_{w} {'vanishes' if vanishes else 'does not vanish'} on error "
                    f"{sorted(pattern.positions)} (weight {pattern.weight})",
                )
    return CheckResult("criterion-exactness", True)


def check_oracle_equivalence(
    code: CyclicCode,
    formulas: FormulaSet,
    *,
    exhaustive: bool = False,
    seed: int = 20240,
) -> CheckResult:
    """Formula decoding equals brute-force oracle decoding.

    Syndromes depend only on the error, so the zero codeword plus a
    codeword sample is sound; --exhaustive additionally sweeps every
    codeword when the dimension allows it.
    """
    decode = one_step_decode if formulas.variant == VARIANT_SATURATED else decode_with_division
    if exhaustive and code.k <= 16:
        codewords = list(code.codewords())
    else:
        rng = random.Random(seed)
        codewords = [(0,) * code.n]
        for _ in range(SAMPLED_CODEWORDS):
            message = tuple(rng.randint(0, 1) for _ in range(code.k))
            codewords.append(encode(message, code))
    patterns = list(_patterns_up_to(code.n, code.t))
    for codeword in codewords:
        for pattern in patterns:
            word = pattern.apply(codeword)
            want = oracle_decode(word, code)
            got = decode(word, code, formulas)
            if want is None:
                if got.ok:
                    return CheckResult(
                        "oracle-equivalence", False,
                        f"decoder corrected an uncorrectable word (error {sorted(pattern.positions)})",
                    )
            elif not got.ok or got.error != want:
                return CheckResult(
                    "oracle-equivalence", False,
                    f"error {sorted(pattern.positions)}: oracle says "
                    f"{sorted(want.positions)}, decoder says "
                    f"{sorted(got.error.positions) if got.error else got.detail}",
                )
    return CheckResult("oracle-equivalence", True)


def check_weight_detection(code: CyclicCode, formulas: FormulaSet) -> CheckResult:
    for pattern in _patterns_up_to(code.n, code.t):
        word = pattern.apply((0,) * code.n)
        found = detect_weight(syndromes(word, code), formulas)
        if found != pattern.weight:
            return CheckResult(
                "weight-detection", False,
                f"error {sorted(pattern.positions)} detected as weight {found}",
            )
    return CheckResult("weight-detection", True)


def check_no_division(code: CyclicCode, formulas: FormulaSet) -> CheckResult:
    if formulas.variant != VARIANT_SATURATED:
        return CheckResult("no-division", True, "not applicable to fieldeq artifacts")
    before = code.field.inversion_count
    for pattern in _patterns_up_to(code.n, code.t):
        one_step_decode(pattern.apply((0,) * code.n), code, formulas)
    delta = code.field.inversion_count - before
    return CheckResult(
        "no-division", delta == 0,
        "" if delta == 0 else f"{delta} field inversions performed",
    )


def run_verification(
    code: CyclicCode,
    formulas: FormulaSet,
    *,
    exhaustive: bool = False,
) -> list[CheckResult]:
    results = [check_artifact_hash(code, formulas)]
    if not results[0].ok:
        return results
    results.append(check_formula_shape(code, formulas))
    results.append(check_criterion_exactness(code, formulas))
    results.append(check_weight_detection(code, formulas))
    results.append(check_oracle_equivalence(code, formulas, exhaustive=exhaustive))
    results.append(check_no_division(code, formulas))
    return results
