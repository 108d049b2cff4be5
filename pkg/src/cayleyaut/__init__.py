"""Colour-preserving and full automorphism groups of Cayley graphs of
finite groups, with a five-way structural classification, ball-radius
verification, and Cayley-index searches."""

from .autsearch import (
    AutGroup,
    Stabilizer,
    check_propagation,
    colour_aut_group,
    colour_stabilizer,
    coset_inversion_map,
    full_aut,
    full_colour_stabilizer,
    inversion_map,
    is_colour_automorphism,
    is_graph_automorphism,
    is_labelled_automorphism,
    left_translations,
    sign_flip_map,
    sign_flip_maps,
)
from .cayley import (
    CayleyGraph,
    GeneratingSet,
    ball,
    ball_saturation_radius,
    build_graph,
    full_genset,
    make_genset,
)
from .classify import (
    Classification,
    StructureCase,
    check_boolean_factor_lemma,
    classify,
    decompose_q8_times_boolean,
    find_a0,
    find_dicyclic_witness,
    is_boolean,
    predicted_stabilizer,
    verify_prediction,
)
from .errors import (
    CayleyError,
    DegenerateInputError,
    MalformedInputError,
    NotGeneratingError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
)
from .groups import (
    DicyclicWitness,
    FiniteGroup,
    abelian,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    generalized_dicyclic,
    is_isomorphic_bruteforce,
    quaternion,
    symmetric,
)
from .presentations import (
    CosetTable,
    Presentation,
    h_group,
    parse_presentation,
    todd_coxeter,
)
from .rigidity import (
    ExampleReport,
    IndexReport,
    SearchResult,
    cayley_index_search,
    index_of,
    k_family,
    optimality_example_h,
    optimality_example_k,
    optimality_example_product,
    optimality_example_q8,
    q8_boolean_family,
    run_example,
    verify_quantitative,
)
from .specs import build_group, describe_group, parse_group_spec

__version__ = "0.1.0"

__all__ = [
    "AutGroup",
    "CayleyError",
    "CayleyGraph",
    "Classification",
    "CosetTable",
    "DegenerateInputError",
    "DicyclicWitness",
    "ExampleReport",
    "FiniteGroup",
    "GeneratingSet",
    "IndexReport",
    "MalformedInputError",
    "NotGeneratingError",
    "ParseError",
    "PreconditionError",
    "Presentation",
    "ResourceLimitError",
    "SearchResult",
    "Stabilizer",
    "StructureCase",
    "abelian",
    "alternating",
    "ball",
    "ball_saturation_radius",
    "build_graph",
    "build_group",
    "cayley_index_search",
    "check_boolean_factor_lemma",
    "check_propagation",
    "classify",
    "colour_aut_group",
    "colour_stabilizer",
    "coset_inversion_map",
    "cyclic",
    "decompose_q8_times_boolean",
    "describe_group",
    "dihedral",
    "direct_product",
    "find_a0",
    "find_dicyclic_witness",
    "full_aut",
    "full_colour_stabilizer",
    "full_genset",
    "generalized_dicyclic",
    "h_group",
    "index_of",
    "inversion_map",
    "is_boolean",
    "is_colour_automorphism",
    "is_graph_automorphism",
    "is_isomorphic_bruteforce",
    "is_labelled_automorphism",
    "k_family",
    "left_translations",
    "make_genset",
    "optimality_example_h",
    "optimality_example_k",
    "optimality_example_product",
    "optimality_example_q8",
    "parse_group_spec",
    "parse_presentation",
    "predicted_stabilizer",
    "q8_boolean_family",
    "quaternion",
    "run_example",
    "sign_flip_map",
    "sign_flip_maps",
    "symmetric",
    "todd_coxeter",
    "verify_prediction",
    "verify_quantitative",
]
