"""Exact arithmetic on special cubic fourfolds.

Decides when a discriminant admits an associated K3 surface (in the
Hodge-theoretic, twisted-derived and motivic senses), analyses diagonal
finite-order automorphisms of cubic forms (eigen structure, invariant
family dimensions, symplectic type, fixed loci), and audits a curated
catalog of families against those computations.  Integers and rationals
only; no floating point anywhere.
"""

from .actions import (
    FAMILY_ACTIONS,
    DiagonalAutomorphism,
    DimensionBreakdown,
    FixedLocusComponent,
    IntersectionKind,
    OnX,
    eigen_class_sizes,
    eigen_decomposition,
    family_dimension,
    family_dimension_breakdown,
    fixed_locus_ambient,
    fixed_locus_on_hypersurface,
    generic_member,
    is_eigenform,
    is_symplectic,
    monomial_weight,
)
from .catalog import (
    ENV_CATALOG,
    CatalogError,
    CheckResult,
    FamilyRecord,
    PolarizationClass,
    RankClaim,
    Rationality,
    Status,
    load_catalog,
    parse_catalog,
    polarization_class,
    shipped_catalog,
    symplectic_fixed_point_count,
    validate_catalog,
    validate_record,
)
from .discriminants import (
    DiscriminantReport,
    QuotientCorrespondence,
    RankClassification,
    RankVerdict,
    TwistedWitness,
    classify_by_rank,
    discriminant_report,
    enumerate_hodge_admissible,
    fano_hilbert_genus,
    fano_hilbert_parameter,
    has_labelling,
    is_hodge_admissible,
    quotient_correspondence,
    quotient_partner_genus,
    twisted_witness,
)
from .forms import (
    CLEBSCH_CUBIC,
    FERMAT_CUBIC,
    KLEIN_CUBIC,
    MONOMIAL_COUNT,
    CubicForm,
    FormParseError,
    SmoothnessReport,
    monomial_basis,
    parse_cubic_form,
    smoothness_probe,
)
from .lattices import (
    GramMatrix,
    Labelling,
    labelling_discriminant,
    transcendental_rank,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "CLEBSCH_CUBIC",
    "FAMILY_ACTIONS",
    "FERMAT_CUBIC",
    "KLEIN_CUBIC",
    "MONOMIAL_COUNT",
    "CatalogError",
    "CheckResult",
    "CubicForm",
    "DiagonalAutomorphism",
    "DimensionBreakdown",
    "DiscriminantReport",
    "ENV_CATALOG",
    "FamilyRecord",
    "FixedLocusComponent",
    "FormParseError",
    "GramMatrix",
    "IntersectionKind",
    "Labelling",
    "OnX",
    "PolarizationClass",
    "QuotientCorrespondence",
    "RankClaim",
    "RankClassification",
    "RankVerdict",
    "Rationality",
    "SmoothnessReport",
    "Status",
    "TwistedWitness",
    "classify_by_rank",
    "discriminant_report",
    "eigen_class_sizes",
    "eigen_decomposition",
    "enumerate_hodge_admissible",
    "family_dimension",
    "family_dimension_breakdown",
    "fano_hilbert_genus",
    "fano_hilbert_parameter",
    "fixed_locus_ambient",
    "fixed_locus_on_hypersurface",
    "generic_member",
    "has_labelling",
    "is_eigenform",
    "is_hodge_admissible",
    "is_symplectic",
    "labelling_discriminant",
    "load_catalog",
    "monomial_basis",
    "monomial_weight",
    "parse_catalog",
    "parse_cubic_form",
    "polarization_class",
    "quotient_correspondence",
    "quotient_partner_genus",
    "shipped_catalog",
    "smoothness_probe",
    "symplectic_fixed_point_count",
    "transcendental_rank",
    "twisted_witness",
    "validate_catalog",
    "validate_record",
]
