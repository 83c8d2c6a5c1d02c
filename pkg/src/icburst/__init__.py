"""Sum rates and burst schedules for interference channels with processing cost.

Every transmitter pays a fixed energy cost per channel use it is on, so
the power budget favors bursty operation: transmit over a fraction
theta of the time at boosted power.  This package computes the optimal
single-user burstiness, the achievable sum rates of four transmission
schemes for the two-user Gaussian interference channel and the
three-user cascade Z channel, the very strong interference thresholds,
and parameter sweeps behind the reference figures.
"""

from .cgzic import (
    BurstProfile3,
    CgzicChannel,
    cgzic_scheme_i,
    cgzic_scheme_ii_tdm,
    cgzic_scheme_iii,
    cgzic_scheme_iii_profile,
    cgzic_scheme_iv,
    cgzic_scheme_iv_profile,
    cgzic_sum_rate,
    gamma_chain,
    upper_bound_cgzic,
    zic_pair,
)
from .hk_two_user import (
    PowerSplit,
    TwoUserChannel,
    hk_psi,
    hk_sum_rate,
    hk_sum_rate_fixed_split,
    noisy_interference_test,
)
from .numerics import (
    GridSpec,
    InfeasibleError,
    RegimeError,
    burst_rate,
    capacity,
    lambert_w0,
    maximize_on_grid,
)
from .schemes_two_user import (
    BurstProfile2,
    SchemeResult,
    normalized_sum_rate,
    scheme_i,
    scheme_ii_tdm,
    scheme_iii,
    scheme_iii_profile,
    scheme_iv,
    scheme_iv_profile,
    upper_bound_two_user,
)
from .single_user import (
    BurstPoint,
    UserBudget,
    asymptotic_fraction,
    interference_free_rate,
    optimal_burstiness,
)
from .sweeps import (
    FIGURE_TAGS,
    InvariantViolation,
    SweepRow,
    SweepSpec,
    query_thresholds,
    reproduce_figure,
    run_sweep,
    single_user_rows,
    write_csv,
)
from .very_strong import (
    AsymptoticBudget,
    RhoPair,
    asymptotic_thresholds,
    is_very_strong,
    rho_pair,
    very_strong_thresholds,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticBudget",
    "BurstPoint",
    "BurstProfile2",
    "BurstProfile3",
    "CgzicChannel",
    "FIGURE_TAGS",
    "GridSpec",
    "InfeasibleError",
    "InvariantViolation",
    "PowerSplit",
    "RegimeError",
    "RhoPair",
    "SchemeResult",
    "SweepRow",
    "SweepSpec",
    "TwoUserChannel",
    "UserBudget",
    "asymptotic_fraction",
    "asymptotic_thresholds",
    "burst_rate",
    "capacity",
    "cgzic_scheme_i",
    "cgzic_scheme_ii_tdm",
    "cgzic_scheme_iii",
    "cgzic_scheme_iii_profile",
    "cgzic_scheme_iv",
    "cgzic_scheme_iv_profile",
    "cgzic_sum_rate",
    "gamma_chain",
    "hk_psi",
    "hk_sum_rate",
    "hk_sum_rate_fixed_split",
    "interference_free_rate",
    "is_very_strong",
    "lambert_w0",
    "maximize_on_grid",
    "noisy_interference_test",
    "normalized_sum_rate",
    "optimal_burstiness",
    "query_thresholds",
    "reproduce_figure",
    "rho_pair",
    "run_sweep",
    "scheme_i",
    "scheme_ii_tdm",
    "scheme_iii",
    "scheme_iii_profile",
    "scheme_iv",
    "scheme_iv_profile",
    "single_user_rows",
    "upper_bound_cgzic",
    "upper_bound_two_user",
    "very_strong_thresholds",
    "write_csv",
    "zic_pair",
]
