use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::poly::IntPolynomial;
use crate::error::Result;
use crate::labeling::hook_lengths;
use crate::poset::Poset;

/// `[n]_q = 1 + q + ⋯ + q^{n−1}`; `[0]_q = 0`.
pub fn q_int(n: usize) -> IntPolynomial {
    IntPolynomial::new(vec![BigInt::one(); n])
}

/// `[n]_q! = [1]_q ⋯ [n]_q`; `[0]_q! = 1`.
pub fn q_factorial(n: usize) -> IntPolynomial {
    (1..=n).fold(IntPolynomial::one(), |acc, k| &acc * &q_int(k))
}

/// `[n]_q! / ∏ [h_x]_q` over the hook lengths of a rooted tree.
pub fn q_hook_polynomial(t: &Poset) -> Result<IntPolynomial> {
    let hooks = hook_lengths(t)?;
    let mut f = q_factorial(t.len());
    for h in hooks.into_iter().filter(|&h| h > 1) {
        f = f.div_exact(&q_int(h))?;
    }
    Ok(f)
}

/// A product `[k_1]_q [k_2]_q ⋯`, factors in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QProduct(pub Vec<usize>);

impl QProduct {
    pub fn expand(&self) -> IntPolynomial {
        self.0.iter().fold(IntPolynomial::one(), |acc, &k| &acc * &q_int(k))
    }
}

impl fmt::Display for QProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|k| format!("[{k}]_q")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The hook polynomial as a product of q-integers, when every hook length
/// above 1 cancels against a distinct factor of `[n]_q!`.
pub fn hook_factorization(t: &Poset) -> Result<Option<QProduct>> {
    let hooks = hook_lengths(t)?;
    let mut available = vec![true; t.len() + 1];
    for h in hooks.into_iter().filter(|&h| h > 1) {
        if !available[h] {
            return Ok(None);
        }
        available[h] = false;
    }
    Ok(Some(QProduct((2..=t.len()).rev().filter(|&k| available[k]).collect())))
}

/// `n↓↓_k = n (n−2) (n−4) ⋯ (n−2k+2)`, the empty product for `k = 0`.
pub fn double_falling(n: i64, k: usize) -> BigInt {
    (0..k as i64).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - 2 * i))
}
