"""Country-of-origin inference for surnames from bibliographic records."""

from .assignment import Assignment, AssignmentSet, Method, read_assignments, write_assignments
from .errors import ConfigError, DomainError, FormatError, RecordError, SemanticError
from .gini import GiniConfig, assign_gini, gini, relativized_shares
from .kl import (
    KlConfig,
    KlMode,
    assign_kl,
    kl_global,
    kl_point_mass,
    modal_country,
    percentile_threshold,
)
from .linkage import Rule, TrustedLinkage, extract_linkages, stream_extract
from .matrix import SurnameCountryMatrix, accumulate, merge, top_countries
from .records import (
    CountryNormalizer,
    PublicationRecord,
    load_country_map,
    normalize_country,
    normalize_surname,
    parse_record,
)
from .validate import evaluate, load_control, load_langmap, render_report

__version__ = "0.1.0"
