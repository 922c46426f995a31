//! The finite-field engine: representation spaces over `F_q`, flag-count
//! functions, the induction product, the Green pairing and span analysis.

pub mod cache;
pub mod flags;
pub mod fq;
pub mod functions;
pub mod gram;
pub mod space;

pub use flags::{count_stable_flags, enumerate_flags, graded_subspaces, is_invariant, n_i_of_point, quotient_point, sub_point};
pub use functions::{
    flag_count_table, green_pairing, hall_product, l_counts, l_function, vq_eq, CountFunction, HallFunction, Twist,
    DEFAULT_TWIST,
};
pub use gram::{
    flag_pair_gram, kernel_fingerprint, primitive_space_fq, span_analysis, span_analysis_mode, tabulated_gram,
    PrimitiveFq, SpanReport,
};
pub use space::{component_orbit_representatives, coverage_points, Coverage, RepPoint, RepSpace, DEFAULT_BUDGET};
