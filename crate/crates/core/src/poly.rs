//! Dense univariate polynomial helpers over `BigInt` and `BigRational`.
//!
//! Coefficients are stored low degree first with no trailing zeros; the zero
//! polynomial is the empty vector.

use num::{BigInt, BigRational, One, Signed, Zero};

pub type IntPoly = Vec<BigInt>;
pub type RatPoly = Vec<BigRational>;

pub fn trim_int(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn trim_rat(mut p: RatPoly) -> RatPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn int_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim_int(out)
}

pub fn int_sub(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    trim_int(out)
}

/// Exact division of integer polynomials; panics if the division leaves a
/// remainder or the divisor is not monic up to sign.
pub fn int_div_exact(num: &[BigInt], den: &[BigInt]) -> IntPoly {
    assert!(!den.is_empty(), "division by zero polynomial");
    let lead = den.last().unwrap();
    assert!(
        lead.abs().is_one(),
        "int_div_exact requires a divisor with unit leading coefficient"
    );
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len().saturating_sub(den.len()) + 1];
    while rem.len() >= den.len() && !rem.is_empty() {
        let shift = rem.len() - den.len();
        let factor = rem.last().unwrap() / lead;
        quot[shift] = factor.clone();
        for (i, di) in den.iter().enumerate() {
            let prod = di * &factor;
            rem[shift + i] -= prod;
        }
        rem = trim_int(rem);
    }
    assert!(rem.is_empty(), "int_div_exact: nonzero remainder");
    trim_int(quot)
}

/// Evaluates an integer polynomial at a rational point.
pub fn int_eval(p: &[BigInt], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    acc
}

pub fn int_eval_f64(p: &[BigInt], x: f64) -> f64 {
    let mut acc = 0.0;
    for c in p.iter().rev() {
        acc = acc * x + bigint_to_f64(c);
    }
    acc
}

fn bigint_to_f64(c: &BigInt) -> f64 {
    num::ToPrimitive::to_f64(c).expect("coefficient out of f64 range")
}

/// Cyclotomic polynomial Φ_m via the Möbius product
/// Φ_m(x) = Π_{d|m} (x^d − 1)^{μ(m/d)}.
pub fn cyclotomic(m: u32) -> IntPoly {
    assert!(m >= 1);
    let mut num = vec![BigInt::one()];
    let mut den = vec![BigInt::one()];
    for d in 1..=m {
        if m % d != 0 {
            continue;
        }
        match moebius(m / d) {
            1 => num = int_mul(&num, &x_pow_minus_one(d)),
            -1 => den = int_mul(&den, &x_pow_minus_one(d)),
            _ => {}
        }
    }
    int_div_exact(&num, &den)
}

fn x_pow_minus_one(d: u32) -> IntPoly {
    let mut p = vec![BigInt::zero(); d as usize + 1];
    p[0] = -BigInt::one();
    p[d as usize] = BigInt::one();
    p
}

fn moebius(mut m: u32) -> i32 {
    let mut mu = 1;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if m > 1 {
        mu = -mu;
    }
    mu
}

// Rational polynomial arithmetic, used by the extended Euclidean algorithm
// behind field inversion.

pub fn rat_mul(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim_rat(out)
}

pub fn rat_sub(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigRational::zero());
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    trim_rat(out)
}

/// Polynomial division with remainder: returns (quotient, remainder).
pub fn rat_divmod(num: &[BigRational], den: &[BigRational]) -> (RatPoly, RatPoly) {
    assert!(!den.is_empty(), "division by zero polynomial");
    let lead = den.last().unwrap();
    let mut rem = num.to_vec();
    rem = trim_rat(rem);
    if rem.len() < den.len() {
        return (vec![], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - den.len() + 1];
    while rem.len() >= den.len() && !rem.is_empty() {
        let shift = rem.len() - den.len();
        let factor = rem.last().unwrap() / lead;
        quot[shift] = factor.clone();
        for (i, di) in den.iter().enumerate() {
            let prod = di * &factor;
            rem[shift + i] -= prod;
        }
        rem = trim_rat(rem);
    }
    (trim_rat(quot), rem)
}

/// Extended Euclidean algorithm over ℚ[x]: returns (g, s, t) with
/// s·a + t·b = g and g the monic gcd.
pub fn rat_ext_gcd(a: &[BigRational], b: &[BigRational]) -> (RatPoly, RatPoly, RatPoly) {
    let mut r0 = trim_rat(a.to_vec());
    let mut r1 = trim_rat(b.to_vec());
    let mut s0: RatPoly = vec![BigRational::one()];
    let mut s1: RatPoly = vec![];
    let mut t0: RatPoly = vec![];
    let mut t1: RatPoly = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = rat_divmod(&r0, &r1);
        let s = rat_sub(&s0, &rat_mul(&q, &s1));
        let t = rat_sub(&t0, &rat_mul(&q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if let Some(lead) = r0.last().cloned() {
        let inv = BigRational::one() / lead;
        for c in r0.iter_mut().chain(s0.iter_mut()).chain(t0.iter_mut()) {
            *c *= &inv;
        }
    }
    (r0, s0, t0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn ip(coeffs: &[i64]) -> IntPoly {
        trim_int(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), ip(&[-1, 1]));
        assert_eq!(cyclotomic(2), ip(&[1, 1]));
        assert_eq!(cyclotomic(4), ip(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), ip(&[1, -1, 1]));
        assert_eq!(cyclotomic(10), ip(&[1, -1, 1, -1, 1]));
        assert_eq!(cyclotomic(12), ip(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_degree_is_totient() {
        let totient = |m: u32| (1..=m).filter(|k| gcd(*k, m) == 1).count();
        for m in 1..=40 {
            assert_eq!(cyclotomic(m).len() - 1, totient(m), "m = {m}");
        }
    }

    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn ext_gcd_inverts() {
        // a = x, b = x^2 - 2: s·a + t·b = 1, so s = x/2 is the inverse of
        // sqrt(2) times 1/sqrt(2)... checked via the Bezout identity itself.
        let a: RatPoly = vec![BigRational::zero(), BigRational::one()];
        let b: RatPoly = vec![
            BigRational::from_i64(-2).unwrap(),
            BigRational::zero(),
            BigRational::one(),
        ];
        let (g, s, t) = rat_ext_gcd(&a, &b);
        assert_eq!(g, vec![BigRational::one()]);
        let lhs = rat_sub(&rat_mul(&s, &a), &rat_mul(&t, &b).iter().map(|c| -c).collect::<Vec<_>>());
        assert_eq!(trim_rat(lhs), vec![BigRational::one()]);
    }
}
