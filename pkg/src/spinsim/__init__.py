"""spinsim: classical simulation of spin-s singlet correlations,
temporal Bell-type inequalities for successive measurements, and
Hardy/Cabello nonlocality-without-inequality arguments."""

__version__ = "0.1.0"

from .spin_core import (
    Spin,
    eigenbasis,
    normalize,
    singlet_correlation_closed_form,
    singlet_correlation_exact,
    singlet_state,
    spin_component,
    spin_matrices,
    transition_matrix,
    transition_prob,
    unit_from_angles,
)
from .randomness import (
    RandomStream,
    SharedRandomness,
    biased_sign,
    draw_shared_randomness,
    sample_unit_sphere,
    sgn,
)
from .protocols import (
    BinaryRecursive,
    NonMaxEntangled,
    PAdicComposite,
    ResourceCount,
    RoundOutcome,
    TonerBacon,
    binary_digits,
    nonmax_round,
    protocol1_resources,
    protocol1_round,
    protocol2_resources,
    protocol2_round,
    run_round,
    toner_bacon_round,
)
from .mc import (
    CorrelationEstimate,
    OracleComparison,
    compare_to_oracle,
    empirical_mutual_information,
    estimate,
    exact_targets,
    uniformity_test,
)
from .successive import (
    ChiParams,
    InitialState,
    bi_value,
    bi_value_planar,
    chained_optimum,
    chained_value,
    corr1,
    corr13,
    corr2,
    corr23,
    corr3,
    disentangling_bound,
    eta2_cubic_roots,
    eta2_max,
    eta2_profile,
    eta3_max,
    hybrid_extremes,
    hybrid_values,
    mk_terms,
    mk_value,
    mki_value,
    qubit_corr_lastk,
    qubit_joint_prob,
    qubit_product_moment,
    scarani_gisin_chain,
    scarani_gisin_optimum,
    scarani_gisin_paper_angles,
    scarani_gisin_sum,
    successive_oracle,
    svetlichny_value,
)
from .temporal import TemporalRound, temporal_ensemble, temporal_moment, temporal_round
from .nonlocality import (
    ArgumentMaximum,
    ObservableAngles,
    SchmidtState,
    cabello3_max,
    cabello3_objective,
    cabello_constraints,
    cabello_max,
    cabello_objective,
    cabello_probs,
    cabello_probs_oracle,
    hardy_max,
    hardy_objective,
    optimize_over_states,
    success_curve,
)
from .search import SearchResult, SearchSpec, maximize, real_cubic_roots
