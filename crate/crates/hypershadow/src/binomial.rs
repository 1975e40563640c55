//! Exact and real-valued binomial coefficients.
//!
//! Bound arithmetic runs on arbitrary-precision integers and rationals; only
//! the real-valued generalized coefficient and its inverse live on `f64`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{BigUint, One, ToPrimitive, Zero};

/// Exact binomial coefficient C(n, k), zero when k > n.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= BigUint::from(n - i);
        den *= BigUint::from(i + 1);
    }
    num / den
}

/// C(n, k) as a u64, or None on overflow.
pub fn binomial_u64(n: usize, k: usize) -> Option<u64> {
    binomial(n, k).to_u64()
}

/// Generalized binomial coefficient x(x-1)...(x-k+1)/k! for real x.
///
/// The empty product makes the value 1 at k = 0 for every x.
pub fn gen_binomial(x: f64, k: usize) -> f64 {
    let mut value = 1.0;
    for i in 0..k {
        value *= (x - i as f64) / (i + 1) as f64;
    }
    value
}

/// Exact generalized binomial coefficient for rational x.
pub fn gen_binomial_rational(x: &BigRational, k: usize) -> BigRational {
    let mut value = BigRational::one();
    for i in 0..k {
        let factor = x - BigRational::from(BigInt::from(i));
        value *= factor / BigRational::from(BigInt::from(i + 1));
    }
    value
}
