//! Exact arithmetic on monomial ideals, with specialized membership tests,
//! certificates and containment checks for the coordinate-axes ideal
//! `I(2,n) = (x_i x_j : i < j)` and its ordinary and symbolic powers.
//!
//! All operations are pure functions on immutable values.

pub mod axes;
pub mod certificate;
pub mod error;
pub mod exponent;
pub mod format;
pub mod ideal;
pub mod oracle;
pub mod primes;

pub use axes::{
    bound, i2n_generators, member_ordinary_fast, member_symbolic_fast, normalize, AxesIdealSpec,
    Inequality,
};
pub use certificate::{greedy_certificate, verify_certificate, FactorizationCertificate};
pub use error::{Error, Result};
pub use exponent::{divides, lcm, ExponentVector};
pub use ideal::{
    contains, intersect, intersect_all, member, minimalize, power, product, MonomialIdeal,
};
pub use oracle::{
    check_engine_agreement, check_primary_decomposition, check_symbolic_lemma,
    containment_threshold, member_bruteforce, survey, CheckOutcome, ResourceLimits, SurveyRow,
};
pub use primes::{minimal_primes, prime_power_member, symbolic_power, PrimeSupport};
