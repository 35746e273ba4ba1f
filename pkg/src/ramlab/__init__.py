"""ramlab: exact counts and censuses of tame self-maps of P^1, and a
characteristic-p laboratory for rank-2 logarithmic connections."""

__version__ = "0.1.0"

from ramlab.fields import Field, FieldElement
from ramlab.poly import Poly, poly_derivative, poly_gcd
from ramlab.ratfunc import ProjPoint, RatFunc, moebius_apply_point, moebius_conjugate
from ramlab.connections import (
    KodairaSpencer,
    Level,
    LogConnection,
    PCurvature,
    Radius,
    ResidueMatrix,
    check_p_trivial_determinant,
    is_dormant,
    kodaira_spencer,
    level,
    p_curvature,
    radius_at,
    random_connection,
    residue_matrix,
    traceless_part,
)
from ramlab.ratmaps import (
    HurwitzAudit,
    ProfileCheck,
    RamOrder,
    RamProfile,
    check_profile,
    is_separable,
    ram_order,
    riemann_hurwitz_audit,
    wronskian,
)
from ramlab.pgl2 import canonical_form, orbit_size, pgl2_order, stabilizer_order
from ramlab.census import CensusResult, census, census_sweep
from ramlab.counting import (
    Profile,
    RadiusIndexPair,
    chain_insertions,
    dormant_3pt_count,
    dormant_sum,
    genus2_frobenius_count,
    iter_profiles,
    n_gen_chain,
    n_gen_chain_enum_count,
    n_gen_recursive,
    odd_profiles,
    parity_variants,
    profile_degree,
    radius_index_pair,
    selfmap_total,
    triple_admissible,
)

__all__ = [name for name in dir() if not name.startswith("_")]
