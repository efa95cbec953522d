//! Cyclic sieving: fixed points of every power of a cyclic action against a
//! polynomial evaluated at roots of unity.

use std::fmt::Write as _;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::poly::IntPolynomial;
use crate::dynamics::OrbitDecomposition;
use crate::error::{Error, Result};

/// Absolute tolerance on both the imaginary part and the distance of the
/// real part from the nearest integer.
pub const CSP_TOLERANCE: f64 = 1e-6;

/// Upper bound on the order of the action (one row per power).
pub const MAX_CSP_ORDER: usize = 10_000_000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CspRow {
    pub d: usize,
    pub fixed_points: usize,
    pub f_re: f64,
    pub f_im: f64,
    pub matches: bool,
}

impl CspRow {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.f_re, self.f_im)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CspReport {
    pub order: usize,
    pub state_count: usize,
    pub polynomial: Vec<String>,
    pub rows: Vec<CspRow>,
}

impl CspReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }

    pub fn failing_rows(&self) -> impl Iterator<Item = &CspRow> {
        self.rows.iter().filter(|r| !r.matches)
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("d\tfixed_points\tf_value\tmatch\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}",
                r.d,
                r.fixed_points,
                format_value(r.value()),
                if r.matches { "yes" } else { "no" }
            );
        }
        out
    }
}

pub(crate) fn format_value(z: Complex64) -> String {
    let re = if z.re.abs() < CSP_TOLERANCE { 0.0 } else { z.re };
    if z.im.abs() < CSP_TOLERANCE {
        format!("{re:.6}")
    } else {
        format!("{re:.6}{:+.6}i", z.im)
    }
}

fn row_matches(value: Complex64, fixed: usize) -> bool {
    let rounded = value.re.round();
    value.im.abs() < CSP_TOLERANCE
        && (value.re - rounded).abs() < CSP_TOLERANCE
        && rounded == fixed as f64
}

/// Compares `#S^{g^d}` with `f(ω^d)`, `ω = e^{2πi/N}`, for `d = 0..N`.
///
/// Fixed points are read off the orbit sizes: `g^d` fixes exactly the
/// states whose orbit size divides `d`.
pub fn csp_check<S>(d: &OrbitDecomposition<S>, f: &IntPolynomial) -> Result<CspReport> {
    let sizes: Vec<usize> = d.orbits().iter().map(|o| o.len()).collect();
    csp_check_sizes(&sizes, f)
}

pub fn csp_check_sizes(sizes: &[usize], f: &IntPolynomial) -> Result<CspReport> {
    let order = crate::dynamics::lcm_all(sizes.iter().copied())
        .to_usize()
        .filter(|&n| n <= MAX_CSP_ORDER)
        .ok_or_else(|| Error::InvalidParameter("order of the action is too large for a CSP table".into()))?;
    let state_count: usize = sizes.iter().sum();
    let rows = (0..order)
        .map(|d| {
            let fixed: usize = if d == 0 {
                state_count
            } else {
                sizes.iter().filter(|&&s| d % s == 0).sum()
            };
            let value = if d == 0 {
                // exact at q = 1
                Complex64::new(f.eval_i64(1).to_f64().unwrap_or(f64::NAN), 0.0)
            } else {
                let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * d as f64 / order as f64);
                f.eval_complex(w)
            };
            CspRow {
                d,
                fixed_points: fixed,
                f_re: value.re,
                f_im: value.im,
                matches: row_matches(value, fixed),
            }
        })
        .collect();
    Ok(CspReport {
        order,
        state_count,
        polynomial: f.coeffs().iter().map(ToString::to_string).collect(),
        rows,
    })
}
