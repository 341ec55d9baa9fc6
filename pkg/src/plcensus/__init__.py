"""Exact piecewise-linear interval maps, periodic-point censuses, and
congruence checks."""

from .exactnum import (
    ExactnessError,
    Poly,
    Rational,
    RecurrenceSpec,
    charpoly,
    recurrence_eval,
    series_expand,
)
from .plmap import (
    AffinePiece,
    DomainError,
    InfiniteSolutions,
    NotMarkovError,
    PieceLimitError,
    PLMap,
    SolutionSet,
)
from .families import (
    FamilyParams,
    make_base_map,
    make_fmn,
    make_gn,
    make_hjmn,
    make_pn,
)
from .sequences import (
    SequenceSpec,
    gf_of,
    seq_a,
    seq_b,
    seq_c,
    seq_d,
    seq_s,
    spec_a,
    spec_b,
    spec_c,
    spec_d,
    spec_s,
)
from .census import (
    CensusCount,
    CensusInvariantError,
    CensusReport,
    FactoredInt,
    QRSFinding,
    check_phi1_on_s,
    explore_qrs,
    factorize,
    is_prime,
    periodic_census,
    phi1,
    phi2,
    qrs_terms,
    qrs_triple_for_c,
    symmetric_census,
    verify_congruence,
)

__version__ = "0.1.0"

__all__ = [
    "AffinePiece",
    "CensusCount",
    "CensusInvariantError",
    "CensusReport",
    "DomainError",
    "ExactnessError",
    "FactoredInt",
    "FamilyParams",
    "InfiniteSolutions",
    "NotMarkovError",
    "PLMap",
    "PieceLimitError",
    "Poly",
    "QRSFinding",
    "Rational",
    "RecurrenceSpec",
    "SequenceSpec",
    "SolutionSet",
    "charpoly",
    "check_phi1_on_s",
    "explore_qrs",
    "factorize",
    "gf_of",
    "is_prime",
    "make_base_map",
    "make_fmn",
    "make_gn",
    "make_hjmn",
    "make_pn",
    "periodic_census",
    "phi1",
    "phi2",
    "qrs_terms",
    "qrs_triple_for_c",
    "recurrence_eval",
    "seq_a",
    "seq_b",
    "seq_c",
    "seq_d",
    "seq_s",
    "series_expand",
    "spec_a",
    "spec_b",
    "spec_c",
    "spec_d",
    "spec_s",
    "symmetric_census",
    "verify_congruence",
]
