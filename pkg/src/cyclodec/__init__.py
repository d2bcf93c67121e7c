"""One-step algebraic decoding of binary cyclic codes.

Precomputation runs Groebner-basis elimination on Newton-identity ideals to
obtain, per error weight w, syndrome criteria detecting w and closed-form
locator-coefficient formulas; the online decoder then corrects a received
word by formula substitution, with no division in the saturated variant.
"""

from .finite_field import (
    Field,
    FieldElement,
    ReducibleModulusError,
    RootOfUnity,
    default_modulus,
    fourier_transform,
    inverse_fourier,
    nth_root,
    splitting_field_degree,
)
from .codec import (
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
from .polyring import (
    MonomialOrder,
    Poly2,
    PolyParseError,
    PolyRing,
    Variable,
    evaluate,
    locator_var,
    sigma_var,
    syndrome_var,
    SATURATION_VAR,
)
from .groebner import (
    BudgetExhaustedError,
    GroebnerBasis,
    buchberger,
    eliminate,
    groebner_basis,
    is_groebner_basis,
    normal_form,
    reduce_basis,
    s_polynomial,
)
from .ideal_builders import (
    IdealSpec,
    build_ideal,
    decoding_order,
    decoding_ring,
    delta_poly,
    field_eq_newton_ideal,
    field_equations,
    newton_generators,
    power_sum_ideal,
    saturated_newton_ideal,
    sigma_ideal,
)
from .formula_extraction import (
    FormulaMissingError,
    FormulaSet,
    deserialize,
    precompute_detailed,
    precompute_formulas,
    read_formula_file,
    serialize,
    sigma_formulas,
    sigma_relations_general,
    weight_criteria,
    write_formula_file,
)
from .decoder_online import (
    ArtifactMismatchError,
    DecodeResult,
    decode_with_division,
    detect_weight,
    one_step_decode,
)
from .codespec import CodeSpec, build_code, code_hash, parse_codespec, read_codespec
from . import catalog

__version__ = "0.1.0"
