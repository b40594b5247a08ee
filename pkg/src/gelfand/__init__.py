"""Exact Gelfand-model computations for the complex reflection groups
G(r,p,q,n): colored permutations, cyclotomic arithmetic, insertion
tableaux, conjugacy classes, irreducible characters, and the involution
module with its verified decomposition."""

from .errors import (
    InconsistencyError,
    ResourceLimitError,
    UnsupportedGroupError,
)
from .cyclotomic import Cyclotomic, zeta
from .colored import (
    ColoredPermutation,
    ProjectiveElement,
    absolute_conjugate,
    all_elements,
    antisymmetric_elements,
    check_group_parameters,
    group_order,
    parse_window,
    projective_conjugate,
    subgroup_elements,
    symmetric_elements,
)
from .shapes import (
    ShapeOrbit,
    count_standard,
    enumerate_orbits,
    enumerate_shapes,
    enumerate_standard,
    multitableau_shape,
    multitableau_shift,
    partitions,
    shape_str,
)
from .rs import (
    involution_from_tableau,
    involution_tableau,
    projective_rs,
    rs,
    rs_inverse,
    shape_of,
)
from .classes import (
    ConjugacyClass,
    InvolutionClassType,
    class_of,
    class_size,
    enumerate_classes,
    enumerate_involution_classes,
    involution_type,
    normal_element,
    predicted_shapes,
    splits,
)
from .characters import (
    ClassFunction,
    IrreducibleLabel,
    character_table,
    decompose,
    delta1,
    inner_product,
    irreducible_count,
    label_degree,
    sym_character,
    wreath_character,
)
from .model import (
    ClassVerification,
    ModelAction,
    ModelBasis,
    VerificationReport,
    a_sets,
    a_statistic,
    gelfand_check,
    halfway_difference,
    inv_statistic,
    model_action,
    model_character,
    pairing,
    part_color,
    pi21_partitions,
    predicted_labels,
    verify_class_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "InconsistencyError",
    "ResourceLimitError",
    "UnsupportedGroupError",
    "Cyclotomic",
    "zeta",
    "ColoredPermutation",
    "ProjectiveElement",
    "absolute_conjugate",
    "all_elements",
    "antisymmetric_elements",
    "check_group_parameters",
    "group_order",
    "parse_window",
    "projective_conjugate",
    "subgroup_elements",
    "symmetric_elements",
    "ShapeOrbit",
    "count_standard",
    "enumerate_orbits",
    "enumerate_shapes",
    "enumerate_standard",
    "multitableau_shape",
    "multitableau_shift",
    "partitions",
    "shape_str",
    "involution_from_tableau",
    "involution_tableau",
    "projective_rs",
    "rs",
    "rs_inverse",
    "shape_of",
    "ConjugacyClass",
    "InvolutionClassType",
    "class_of",
    "class_size",
    "enumerate_classes",
    "enumerate_involution_classes",
    "involution_type",
    "normal_element",
    "predicted_shapes",
    "splits",
    "ClassFunction",
    "IrreducibleLabel",
    "character_table",
    "decompose",
    "delta1",
    "inner_product",
    "irreducible_count",
    "label_degree",
    "sym_character",
    "wreath_character",
    "ClassVerification",
    "ModelAction",
    "ModelBasis",
    "VerificationReport",
    "a_sets",
    "a_statistic",
    "gelfand_check",
    "halfway_difference",
    "inv_statistic",
    "model_action",
    "model_character",
    "pairing",
    "part_color",
    "pi21_partitions",
    "predicted_labels",
    "verify_class_decomposition",
    "__version__",
]
