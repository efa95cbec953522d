//! Exact polynomial arithmetic, q-analogues, orbit statistics and cyclic
//! sieving.
//!
//! Rational averages use [`num_rational::BigRational`] (always reduced, with
//! a positive denominator).

mod csp;
mod poly;
mod qanalog;
mod stats;

pub use csp::{csp_check, csp_check_sizes, CspReport, CspRow, CSP_TOLERANCE, MAX_CSP_ORDER};
pub use num_rational::BigRational as Fraction;
pub use poly::IntPolynomial;
pub use qanalog::{double_falling, hook_factorization, q_factorial, q_hook_polynomial, q_int, QProduct};
pub use stats::{
    homometry_check, homomesy_check, orbit_average, statistic_sum, HomometryReport, HomomesyReport,
    LabelOf, LabelSum, MinimallyLabeled, OrbitStat, Statistic,
};
