"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines live.
"""

import itertools
import random
import time
from dataclasses import dataclass, field

import pytest

from cyclodec import catalog
from cyclodec.cli import EXIT_OK, main
from cyclodec.codec import (
    CyclicCode,
    ErrorPattern,
    LocatorPoly,
    encode,
    oracle_decode,
    syndromes,
)
from cyclodec.decoder_online import one_step_decode
from cyclodec.finite_field import FieldElement, fourier_transform, inverse_fourier
from cyclodec.groebner import (
    buchberger,
    eliminate,
    groebner_basis,
    is_groebner_basis,
    normal_form,
    reduce_basis,
)
from cyclodec.ideal_builders import (
    build_ideal,
    decoding_ring,
    newton_generators,
    power_sum_ideal,
    saturated_newton_ideal,
    sigma_ideal,
)
from cyclodec.polyring import evaluate, sigma_var, syndrome_var

HAMMING_Q = (1, 2, 4)


def report(criterion: str, ok: bool, detail: str = ""):
    line = f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


# -- shared decode sweeps ---------------------------------------------------------


@dataclass
class Sweep:
    cases: int = 0
    mismatches: int = 0
    elapsed: float = 0.0
    inversions: int = 0
    first_bad: str = ""


def run_oracle_sweep(code: CyclicCode, formulas, codewords, max_weight) -> Sweep:
    code.oracle_table()  # build the ground-truth table outside the timed region
    patterns = [
        ErrorPattern(frozenset(p))
        for w in range(max_weight + 1)
        for p in itertools.combinations(range(code.n), w)
    ]
    sweep = Sweep()
    inversions_before = code.field.inversion_count
    start = time.perf_counter()
    for codeword in codewords:
        for pattern in patterns:
            word = pattern.apply(codeword)
            got = one_step_decode(word, code, formulas)
            want = oracle_decode(word, code)
            sweep.cases += 1
            agree = (
                got.ok and want is not None and got.error == want
                and got.corrected == pattern.apply(word)
            ) or (not got.ok and want is None)
            if not agree:
                sweep.mismatches += 1
                if not sweep.first_bad:
                    sweep.first_bad = f"error {sorted(pattern.positions)} on {codeword}"
    sweep.elapsed = time.perf_counter() - start
    sweep.inversions = code.field.inversion_count - inversions_before
    return sweep


def sampled_codewords(code: CyclicCode, count: int, seed: int):
    rng = random.Random(seed)
    words = [(0,) * code.n]
    for _ in range(count):
        words.append(encode(tuple(rng.randint(0, 1) for _ in range(code.k)), code))
    return words


@pytest.fixture(scope="module")
def hamming_sweep(hamming_bundle):
    return run_oracle_sweep(
        hamming_bundle.code, hamming_bundle.formulas,
        list(hamming_bundle.code.codewords()), 1,
    )


@pytest.fixture(scope="module")
def bch15_sweep(bch15_bundle):
    return run_oracle_sweep(
        bch15_bundle.code, bch15_bundle.formulas,
        sampled_codewords(bch15_bundle.code, 10, seed=1501), 2,
    )


@pytest.fixture(scope="module")
def qr17_sweep(qr17_bundle):
    if isinstance(qr17_bundle, tuple):
        return qr17_bundle
    return run_oracle_sweep(
        qr17_bundle.code, qr17_bundle.formulas,
        sampled_codewords(qr17_bundle.code, 10, seed=1701), 2,
    )


# -- criteria -----------------------------------------------------------------------


def test_criterion_01_oracle_equivalence_hamming(hamming_bundle, hamming_sweep):
    ok = (
        hamming_sweep.cases == 16 * 8
        and hamming_sweep.mismatches == 0
        and hamming_bundle.elapsed < 10.0
        and hamming_sweep.elapsed < 1.0
    )
    report(
        "01 oracle-equivalence hamming[7,4,3]", ok,
        f"{hamming_sweep.cases} cases, {hamming_sweep.mismatches} mismatches, "
        f"precompute {hamming_bundle.elapsed:.2f}s, decode {hamming_sweep.elapsed:.2f}s"
        + (f"; first: {hamming_sweep.first_bad}" if hamming_sweep.first_bad else ""),
    )


def test_criterion_02_oracle_equivalence_bch15(bch15_bundle, bch15_sweep):
    ok = (
        bch15_sweep.cases == 121 * 11
        and bch15_sweep.mismatches == 0
        and bch15_bundle.elapsed <= 600.0
        and bch15_sweep.elapsed < 5.0
    )
    report(
        "02 oracle-equivalence bch[15,7,5]", ok,
        f"{bch15_sweep.cases} cases, {bch15_sweep.mismatches} mismatches, "
        f"precompute {bch15_bundle.elapsed:.1f}s, decode {bch15_sweep.elapsed:.2f}s"
        + (f"; first: {bch15_sweep.first_bad}" if bch15_sweep.first_bad else ""),
    )


def test_criterion_03_oracle_equivalence_qr17(qr17_bundle, qr17_sweep):
    if isinstance(qr17_sweep, tuple):
        print(f"ACCEPTANCE 03 oracle-equivalence qr17: SOFT-FAIL ({qr17_sweep[1]})")
        pytest.xfail(qr17_sweep[1])
    patterns_per_word = 1 + 17 + 136  # all 154 patterns of weight <= 2
    ok = (
        qr17_sweep.cases == patterns_per_word * 11
        and qr17_sweep.mismatches == 0
        and qr17_bundle.elapsed <= 1800.0
    )
    report(
        "03 oracle-equivalence qr17", ok,
        f"{qr17_sweep.cases} cases, {qr17_sweep.mismatches} mismatches, "
        f"precompute {qr17_bundle.elapsed:.1f}s, decode {qr17_sweep.elapsed:.2f}s"
        + (f"; first: {qr17_sweep.first_bad}" if qr17_sweep.first_bad else ""),
    )


def test_criterion_04_formula_shape(hamming_bundle, bch15_bundle, qr17_bundle):
    bundles = [hamming_bundle, bch15_bundle]
    if not isinstance(qr17_bundle, tuple):
        bundles.append(qr17_bundle)
    problems = []
    for bundle in bundles:
        known = {syndrome_var(i) for i in bundle.code.Q}
        for w, sat in bundle.detail.saturations.items():
            ring = sat.ring
            for i in range(1, w + 1):
                target = ring.monomial({sigma_var(i): 1})
                led = [p for p in sat.eliminated if p.leading_monomial() == target]
                if len(led) != 1:
                    problems.append(f"{bundle.name} w={w}: {len(led)} elements led by s{i}")
                    continue
                tail = led[0] + ring.var(sigma_var(i))
                if not tail.variables() <= known:
                    problems.append(f"{bundle.name} w={w}: s{i} tail escapes known syndromes")
    report(
        "04 formula-shape (sigma_i + q_i, q_i over known syndromes)",
        not problems, "; ".join(problems) or f"{len(bundles)} artifacts checked",
    )


def test_criterion_05_no_division(hamming_sweep, bch15_sweep, qr17_sweep):
    sweeps = [("hamming7", hamming_sweep), ("bch15", bch15_sweep)]
    if not isinstance(qr17_sweep, tuple):
        sweeps.append(("qr17", qr17_sweep))
    total = sum(s.inversions for _, s in sweeps)
    report(
        "05 no-division decoding", total == 0,
        ", ".join(f"{name}: {s.inversions} inversions" for name, s in sweeps),
    )


def test_criterion_06_criterion_exactness(hamming_bundle, bch15_bundle):
    failures = []
    for bundle in (hamming_bundle, bch15_bundle):
        code, formulas = bundle.code, bundle.formulas
        scan = code.t + 1
        keys_by_weight = {
            w: {
                code.pattern_syndrome_key(ErrorPattern(frozenset(p)))
                for p in itertools.combinations(range(code.n), w)
            }
            for w in range(scan + 1)
        }
        for w_err in range(scan + 1):
            for positions in itertools.combinations(range(code.n), w_err):
                pattern = ErrorPattern(frozenset(positions))
                word = pattern.apply((0,) * code.n)
                assign = {syndrome_var(i): v for i, v in syndromes(word, code).items()}
                key = code.pattern_syndrome_key(pattern)
                for w in range(formulas.w_max + 1):
                    vanishes = all(
                        not evaluate(t, assign, field=code.field)
                        for t in formulas.criteria[w]
                    )
                    if vanishes != (key in keys_by_weight[w]):
                        failures.append(f"{bundle.name}: T_{w} wrong on {sorted(positions)}")
    report(
        "06 criterion-exactness (T_w vanishes exactly on weight-w syndromes)",
        not failures, "; ".join(failures[:3]) or "n=7 and n=15, all errors to t+1",
    )


def _binary_point(code: CyclicCode, positions, w):
    """(sigma, S) assignment of a binary error, sigma padded with zero locators."""
    pattern = ErrorPattern(frozenset(positions))
    word = pattern.apply((0,) * code.n)
    assign = {
        syndrome_var(i): v
        for i, v in enumerate(fourier_transform(list(word), code.alpha))
    }
    locator = LocatorPoly.from_pattern(pattern, code)
    for i in range(1, w + 1):
        assign[sigma_var(i)] = (
            locator.coeffs[i] if i < len(locator.coeffs) else code.field.zero
        )
    return assign


def test_criterion_07_elimination_identity():
    code = catalog.build("hamming7")
    failures = []
    for w in (1, 2):
        ring = decoding_ring(7, w, HAMMING_Q, with_locators=True)
        gb = reduce_basis(buchberger(sigma_ideal(w, ring) + power_sum_ideal(7, w, ring)))
        for g in newton_generators(7, w, ring):
            if normal_form(g, gb.polys):
                failures.append(f"w={w}: a Newton identity escapes the definitional ideal")
        keep = {sigma_var(i) for i in range(1, w + 1)} | {syndrome_var(i) for i in range(7)}
        for p in eliminate(gb, keep):
            for v in range(w + 1):
                for positions in itertools.combinations(range(7), v):
                    if evaluate(p, _binary_point(code, positions, w)):
                        failures.append(f"w={w}: eliminated element nonzero at weight {v}")
    report(
        "07 elimination-identity (definitional ideal eliminates to Newton)",
        not failures, "; ".join(failures[:3]) or "n=7, w in {1,2}, zero tolerance",
    )


def test_criterion_08_saturated_membership():
    sat = saturated_newton_ideal(7, 2, HAMMING_Q)
    ring, basis = sat.ring, sat.full.polys
    failures = []
    for i in (1, 2):
        if normal_form(ring.parse_poly(f"s{i}^8 + s{i}"), basis):
            failures.append(f"s{i}^8 + s{i} not a member")
    for i in range(7):
        if normal_form(ring.parse_poly(f"S{i}^8 + S{i}"), basis):
            failures.append(f"S{i}^8 + S{i} not a member")
    locator_outcomes = {}
    for i in (1, 2):
        in_plus_one = not normal_form(ring.parse_poly(f"Z{i}^7 + 1"), basis)
        in_plus_z = not normal_form(ring.parse_poly(f"Z{i}^7 + Z{i}"), basis)
        locator_outcomes[f"Z{i}"] = f"Z^7+1 {'in' if in_plus_one else 'out'}, Z^7+Z {'in' if in_plus_z else 'out'}"
        if not in_plus_one:
            failures.append(f"Z{i}^7 + 1 unexpectedly outside the ideal")
    report(
        "08 saturated-membership (field equations; locator-unity recorded)",
        not failures, "; ".join(failures) or f"recorded: {locator_outcomes}",
    )


def _poly_divmod_field(num: list[FieldElement], den: list[FieldElement], field):
    """Long division of coefficient lists (index = degree) over the field."""
    num = list(num)
    deg_d = max(i for i, c in enumerate(den) if c)
    quotient = [field.zero] * max(len(num) - deg_d, 1)
    lead_inv = den[deg_d].inverse()
    for i in range(len(num) - 1, deg_d - 1, -1):
        if num[i]:
            factor = num[i] * lead_inv
            quotient[i - deg_d] = factor
            for j, c in enumerate(den[: deg_d + 1]):
                num[i - deg_d + j] = num[i - deg_d + j] + factor * c
    return quotient, num


def test_criterion_09_variety_theorem():
    code = catalog.build("hamming7")
    field = code.field
    ring = decoding_ring(7, 2, HAMMING_Q, with_locators=False)
    newton = newton_generators(7, 2, ring)
    failures = []

    def check_point(sigma_coeffs, spectrum, label):
        assign = dict(spectrum)
        assign[sigma_var(1)] = sigma_coeffs[1]
        assign[sigma_var(2)] = sigma_coeffs[2]
        for g in newton:
            if evaluate(g, assign, field=field):
                failures.append(f"{label}: point not on the Newton variety")
                return
        # part 2: the inverse transform must be binary ...
        spectrum_vec = [spectrum[syndrome_var(i)] for i in range(7)]
        e = inverse_fourier(spectrum_vec, code.alpha)
        if any(x.bits not in (0, 1) for x in e):
            failures.append(f"{label}: inverse transform not binary")
            return
        # ... part 1: of weight at most 2 ...
        positions = [i for i, x in enumerate(e) if x.bits]
        if len(positions) > 2:
            failures.append(f"{label}: recovered weight {len(positions)} > 2")
            return
        # ... part 3: sigma(Z) = sigma_e(Z) * G(Z)^2 * Z^l via division over GF(8)
        sigma_e = LocatorPoly.from_pattern(ErrorPattern(frozenset(positions)), code).coeffs
        quotient, remainder = _poly_divmod_field(list(sigma_coeffs), list(sigma_e), field)
        if any(c for c in remainder):
            failures.append(f"{label}: locator of recovered word does not divide sigma")
            return
        low = next((i for i, c in enumerate(quotient) if c), None)
        if low is None:
            failures.append(f"{label}: zero quotient")
            return
        shifted = quotient[low:]  # strip Z^l
        if any(c for i, c in enumerate(shifted) if i % 2 == 1):
            failures.append(f"{label}: quotient is not a perfect square times Z^l")

    # the 21 weight-2 words, 7 weight-1 words and the zero word
    for w in (2, 1, 0):
        for positions in itertools.combinations(range(7), w):
            pattern = ErrorPattern(frozenset(positions))
            word = pattern.apply((0,) * 7)
            spectrum = {
                syndrome_var(i): v
                for i, v in enumerate(fourier_transform(list(word), code.alpha))
            }
            locator = LocatorPoly.from_pattern(pattern, code).coeffs
            padded = tuple(locator[i] if i < len(locator) else field.zero for i in range(3))
            check_point(padded, spectrum, f"weight-{w} {sorted(positions)}")
    # weight-deficient embeddings with repeated locators: sigma = (0, z^2), S = 0
    zero_spectrum = {syndrome_var(i): field.zero for i in range(7)}
    for bits in range(1, 8):
        z = field.element(bits)
        check_point((field.one, field.zero, z * z), zero_spectrum, f"repeated locator {bits:#x}")
    report(
        "09 variety-theorem (binary recovery and square-factor locator shape)",
        not failures, "; ".join(failures[:3]) or "29 binary points + 7 repeated-locator points",
    )


def test_criterion_10_groebner_self_checks(hamming_bundle, bch15_bundle, qr17_bundle):
    bundles = [hamming_bundle, bch15_bundle]
    soft = ""
    if isinstance(qr17_bundle, tuple):
        soft = "; qr17 skipped (budget)"
    else:
        bundles.append(qr17_bundle)
    failures = []
    rng = random.Random(2024)
    for bundle in bundles:
        for w, sat in bundle.detail.saturations.items():
            if not is_groebner_basis(sat.full.polys):
                failures.append(f"{bundle.name} w={w}: an S-polynomial does not reduce to 0")
            spec = build_ideal(bundle.code.n, w, bundle.code.Q, "saturated")
            reference = sat.full.polys
            gens = list(spec.generators)
            for _ in range(3):
                rng.shuffle(gens)
                if groebner_basis(gens).polys != reference:
                    failures.append(f"{bundle.name} w={w}: reduced basis not permutation-invariant")
    report(
        "10 groebner-self-checks (Buchberger criterion + uniqueness)",
        not failures, ("; ".join(failures[:3]) or "3 permutations per basis") + soft,
    )


def test_criterion_11_determinism(tmp_path):
    outputs = []
    for name in ("hamming7", "bch15"):
        spec_path = tmp_path / f"{name}.code"
        spec_path.write_text(catalog.spec_text(name))
        files = []
        for run in (1, 2):
            out = tmp_path / f"{name}.{run}.formulas"
            assert main(["precompute", "--code", str(spec_path), "--out", str(out)]) == EXIT_OK
            files.append(out.read_bytes())
        outputs.append(files[0] == files[1])
    report(
        "11 determinism (byte-identical precompute reruns)",
        all(outputs), "hamming7 and bch15, two runs each",
    )
