"""Exact certification of the degree bound for smooth surfaces in P^4 not of general type.

The package reproduces the closed-form bounds, enumerates connected invariants,
maximizes the sporadic-zero correction under the secant-line constraints and
checks the master inequality per configuration.  A small monomial-ideal model
cross-checks the genus formula by brute force.
"""

from .bounds import (
    chi_closed_form,
    chi_sum,
    double_point_k2,
    ep_degree_threshold,
    gamma_cap,
    genus_sum,
    gp_bound,
    lemma6_max_degree,
    pi_floor,
    sporadic_cap,
)
from .certifier import (
    ConfigVerdict,
    ScanReport,
    eq4_check,
    eq7_check,
    eq7_cubic_coeffs,
    final_table,
    scan_degrees,
    theorem_bound,
)
from .configs import ConnectedInvariants, enumerate_configs, lambda_caps, validate_config
from .errors import InputError
from .exact import Rational, binom_general, range_sum
from .gin import MonomialIdeal, parse_ideal
from .sporadic import SporadicProfile, case_bound_A, extremal_profile, first_estimate_A, profile_stats

__version__ = "0.1.0"
