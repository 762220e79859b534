//! The constants `φ_{r,s} = ∏_{r<i≤s} (1 − 2^{−2^{i+1}})` and the
//! induction-step inequality `1 − 3y ≥ (1 − y)⁹`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Largest index accepted; `2^{2^{i+1}}` has `2^{i+1}` bits.
pub const MAX_PHI_INDEX: u32 = 20;

fn check(r: u32, s: u32) -> Result<()> {
    if r > s {
        return Err(Error::arg(format!("phi needs r <= s, got r={r}, s={s}")));
    }
    if s > MAX_PHI_INDEX {
        return Err(Error::cap("phi index", MAX_PHI_INDEX as usize, s as usize));
    }
    Ok(())
}

/// `1 − 2^{−e}` as an exact rational.
fn one_minus_pow2(e: u64) -> Rational {
    let den = BigInt::one() << e;
    Rational::from_bigints(&den - BigInt::one(), den)
}

pub fn phi(r: u32, s: u32) -> Result<Rational> {
    check(r, s)?;
    Ok((r + 1..=s).map(|i| one_minus_pow2(1u64 << (i + 1))).product())
}

/// `φ_{r,s} ≥ 1 − 2^{−1−2^r}`.
pub fn phi_lower_bound_check(r: u32, s: u32) -> Result<bool> {
    Ok(phi(r, s)? >= one_minus_pow2(1 + (1u64 << r)))
}

/// `1 − 3y ≥ (1 − y)⁹` for `y ∈ (0, 1/4]`.
pub fn induction_step_inequality(y: &Rational) -> Result<bool> {
    if !y.is_positive() || *y > Rational::new(1, 4) {
        return Err(Error::arg(format!("y must lie in (0, 1/4], got {y}")));
    }
    let one = Rational::one();
    Ok(&one - Rational::integer(3) * y >= (&one - y).pow(9))
}

/// The points `j/(4m)` for `j = 1..=m`.
pub fn y_grid(m: usize) -> Vec<Rational> {
    (1..=m).map(|j| Rational::new(j as i64, 4 * m as i64)).collect()
}
