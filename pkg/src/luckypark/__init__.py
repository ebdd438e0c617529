"""Lucky-car statistics for classical, (m, n), and capacity (u-) parking
functions: exact counting formulas, deterministic simulation, and an
exhaustive brute-force oracle that cross-checks every formula."""

from .classical import (
    count_outcomes_first_k_lucky,
    count_outcomes_fixed_lucky,
    count_outcomes_mn_fixed_lucky,
    count_outcomes_mn_k_lucky,
    count_outcomes_mn_k_lucky_variant,
    is_valid_outcome,
    is_valid_outcome_mn,
    outcomes_nested_by_k,
)
from .combinat import (
    binomial,
    eulerian,
    factorial,
    factorial_ratio,
    iter_bounded_tuples,
    iter_ordered_set_partitions,
    iter_weak_compositions,
    multinomial,
)
from .oracle import (
    CapExceeded,
    Census,
    Tally,
    census_classical,
    census_completion,
    census_lucky_spots,
    census_mn,
    census_to_json,
    census_from_json,
    census_vector,
    completion_street,
    lucky_polynomial,
)
from .parking import (
    Street,
    X,
    as_street,
    first_failing_car,
    format_block_outcome,
    format_slot_outcome,
    is_parking_function,
    is_u_parking_function,
    lucky_set_of,
    outcome_of,
    park_classical,
    park_vector,
)
from .vector_counts import (
    blocked_run_left,
    count_upfs_const_then_jump,
    count_upfs_fixed_lucky,
    count_upfs_k_lucky,
    descent_load,
    lucky_polynomial_closed_form,
    preference_count,
)
from .vector_outcomes import (
    associated_composition,
    completion_gaps,
    count_outcomes_completion_k_lucky,
    count_outcomes_lucky_spots,
    count_outcomes_spot1_blocked,
    count_outcomes_spot2_blocked,
    count_outcomes_spot3_blocked,
    is_valid_u_outcome,
    iter_valid_u_outcomes,
    reduce_index_set,
    underlying_permutation,
)

__version__ = "0.1.0"
