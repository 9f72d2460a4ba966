"""Set-theoretical solutions of the pentagon equation on finite sets and groups."""
__version__ = "0.1.0"

from .algebra import (  # noqa: E402
    Factorization,
    Group,
    Magma,
    SubgroupDescriptor,
    Verdict,
    exact_factorizations,
    group_from_magma,
    normal_subgroups,
    representative_systems,
    validate_magma,
)
from .pentagon import PairMap, SolutionProfile, is_solution_direct, profile  # noqa: E402
from .theta import CosetDatum, GroupSolution, coset_solution, decompose  # noqa: E402
from .enumeration import (  # noqa: E402
    EnumerationReport,
    enumerate_by_theorem,
    enumerate_on_group,
    enumerate_raw,
)

__all__ = [
    "Factorization", "Group", "Magma", "SubgroupDescriptor", "Verdict",
    "exact_factorizations", "group_from_magma", "normal_subgroups",
    "representative_systems", "validate_magma", "PairMap", "SolutionProfile",
    "is_solution_direct", "profile", "CosetDatum", "GroupSolution",
    "coset_solution", "decompose", "EnumerationReport", "enumerate_by_theorem",
    "enumerate_on_group", "enumerate_raw",
]
