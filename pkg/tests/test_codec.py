import itertools

import pytest

from cyclodec.codec import (
    ChienSplitError,
    CosetClosureError,
    CyclicCode,
    DimensionTooLargeError,
    ErrorPattern,
    LocatorPoly,
    chien_search,
    code_new,
    encode,
    min_distance_bruteforce,
    oracle_decode,
    syndromes,
)
from cyclodec.finite_field import poly_degree

QR17 = (1, 2, 4, 8, 9, 13, 15, 16)
BCH15 = (1, 2, 3, 4, 6, 8, 9, 12)


@pytest.fixture(scope="module")
def hamming():
    return code_new(7, (1, 2, 4))


@pytest.fixture(scope="module")
def bch15():
    return code_new(15, BCH15)


def test_hamming_parameters(hamming):
    assert (hamming.n, hamming.k, hamming.d, hamming.t) == (7, 4, 3, 1)
    assert poly_degree(hamming.gen_poly) == 3


def test_bch15_parameters(bch15):
    assert (bch15.k, bch15.d, bch15.t) == (7, 5, 2)


def test_qr17_parameters():
    code = code_new(17, QR17)
    assert (code.k, code.d, code.t) == (9, 5, 2)


def test_coset_closure_error_lists_coset():
    with pytest.raises(CosetClosureError) as err:
        code_new(7, (1, 2))  # missing 4 from the coset of 1
    assert err.value.coset == frozenset({1, 2, 4})


def test_even_length_rejected():
    with pytest.raises(ValueError):
        code_new(8, (1, 2, 4))


def test_declared_distance_must_match():
    with pytest.raises(ValueError):
        code_new(7, (1, 2, 4), d=4)


def test_min_distance_values(hamming, bch15):
    assert min_distance_bruteforce(hamming) == 3
    assert min_distance_bruteforce(bch15) == 5


def test_large_dimension_needs_declared_distance():
    # BCH(31) with a single coset: dimension 26 > 16
    with pytest.raises(DimensionTooLargeError):
        code_new(31, (1, 2, 4, 8, 16))
    code = code_new(31, (1, 2, 4, 8, 16), d=3)
    assert code.t == 1
    with pytest.raises(DimensionTooLargeError):
        min_distance_bruteforce(code)


def test_codewords_vanish_on_defining_set(hamming):
    for word in hamming.codewords():
        assert all(not s for s in syndromes(word, hamming).values())


def test_encode_zero_and_unit_messages(hamming):
    assert encode([0, 0, 0, 0], hamming) == (0,) * 7
    assert encode([1, 0, 0, 0], hamming) == tuple((hamming.gen_poly >> j) & 1 for j in range(7))


def test_encode_all_ones_message(hamming):
    word = encode([1, 1, 1, 1], hamming)
    assert all(not s for s in syndromes(word, hamming).values())


def test_syndromes_single_error(hamming):
    for u in range(7):
        word = ErrorPattern.of(u).apply((0,) * 7)
        syn = syndromes(word, hamming)
        assert all(syn[i] == hamming.alpha.pow(u * i) for i in hamming.Q)


def test_syndromes_depend_only_on_error(hamming):
    error = ErrorPattern.of(2, 5)
    reference = syndromes(error.apply((0,) * 7), hamming)
    for codeword in hamming.codewords():
        assert syndromes(error.apply(codeword), hamming) == reference


def test_chien_trivial_cases(hamming):
    one = LocatorPoly((hamming.field.one,))
    assert chien_search(one, hamming) == ErrorPattern(frozenset())
    for u in range(7):
        sigma = LocatorPoly((hamming.field.one, hamming.alpha.pow(u)))
        assert chien_search(sigma, hamming) == ErrorPattern.of(u)


def test_chien_recovers_pair(hamming):
    sigma = LocatorPoly.from_pattern(ErrorPattern.of(2, 5), hamming)
    assert chien_search(sigma, hamming) == ErrorPattern.of(2, 5)


def test_chien_reports_non_splitting_locator(bch15):
    # 1 + gZ + gZ^2 with g a primitive element has no roots in the unity group
    field = bch15.field
    for gbits in range(2, field.size):
        sigma = LocatorPoly((field.one, field.element(gbits), field.element(gbits)))
        try:
            found = chien_search(sigma, bch15)
        except ChienSplitError:
            return
        assert found.weight == 2
    pytest.fail("every quadratic locator split; expected at least one failure")


def test_chien_roundtrip_all_patterns(hamming, bch15):
    for code in (hamming, bch15):
        for w in range(1, code.t + 1):
            for positions in itertools.combinations(range(code.n), w):
                pattern = ErrorPattern(frozenset(positions))
                sigma = LocatorPoly.from_pattern(pattern, code)
                assert chien_search(sigma, code) == pattern


def test_oracle_decode_on_codewords(hamming):
    for word in hamming.codewords():
        assert oracle_decode(word, hamming) == ErrorPattern(frozenset())


def test_oracle_decode_exhaustive(hamming, bch15):
    for code in (hamming, bch15):
        for codeword in code.codewords():
            for w in range(code.t + 1):
                for positions in itertools.combinations(range(code.n), w):
                    pattern = ErrorPattern(frozenset(positions))
                    assert oracle_decode(pattern.apply(codeword), code) == pattern


def test_oracle_uncorrectable_exists_beyond_radius(bch15):
    # the [15,7,5] code is not perfect: some weight-3 cosets have no
    # representative of weight <= 2
    found = None
    for positions in itertools.combinations(range(15), 3):
        word = ErrorPattern(frozenset(positions)).apply((0,) * 15)
        if oracle_decode(word, bch15) is None:
            found = positions
            break
    assert found is not None


def test_hamming_is_perfect_no_uncorrectable(hamming):
    # every length-7 word sits within distance 1 of a codeword, so the
    # oracle never reports an uncorrectable word
    for bits in range(1 << 7):
        word = tuple((bits >> i) & 1 for i in range(7))
        assert oracle_decode(word, hamming) is not None
