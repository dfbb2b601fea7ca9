//! Exact arithmetic in the real cyclotomic field ℚ(c), c = 2cos(π/N).
//!
//! Every bilinear-form entry of a Coxeter geometric representation lives in
//! such a field (N ranging over the diagram labels), so a single field per
//! diagram makes all matrix arithmetic exact. Sign determination — the one
//! operation where floating point would silently corrupt downstream length
//! computations — is done by rational interval arithmetic over an isolating
//! bracket of c, refined by bisection until the sign is decided.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{BigInt, BigRational, FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::poly;

/// The minimal polynomial of 2cos(π/N) over ℚ, monic with integer
/// coefficients (low degree first).
///
/// For N ≥ 2 the cyclotomic polynomial Φ_{2N} is palindromic of even degree
/// 2d and satisfies Φ_{2N}(x) = x^d ψ(x + 1/x); the returned polynomial is ψ,
/// recovered through the basis x^k + x^{-k} = V_k(x + 1/x) with V_0 = 2,
/// V_1 = y, V_k = y·V_{k−1} − V_{k−2}.
pub fn minimal_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "N must be positive");
    if n == 1 {
        // 2cos(π) = −2.
        return vec![BigInt::from(2), BigInt::one()];
    }
    let phi = poly::cyclotomic(2 * n);
    let deg = phi.len() - 1;
    assert!(deg % 2 == 0, "Φ_2N has even degree for N ≥ 2");
    let d = deg / 2;
    for j in 0..=deg {
        assert_eq!(phi[j], phi[deg - j], "Φ_2N must be palindromic");
    }
    // ψ(y) = p_d + Σ_{k=1}^{d} p_{d+k} V_k(y).
    let mut psi = vec![phi[d].clone()];
    let mut v_prev: Vec<BigInt> = vec![BigInt::from(2)];
    let mut v_cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    for k in 1..=d {
        psi = poly::int_sub(&psi, &poly::int_mul(&[-phi[d + k].clone()], &v_cur));
        if k < d {
            let shifted: Vec<BigInt> = std::iter::once(BigInt::zero())
                .chain(v_cur.iter().cloned())
                .collect();
            let next = poly::int_sub(&shifted, &v_prev);
            v_prev = v_cur;
            v_cur = next;
        }
    }
    assert_eq!(psi.len(), d + 1);
    assert!(psi[d].is_one(), "minimal polynomial must be monic");
    psi
}

/// The field ℚ(c) with c = 2cos(π/N), together with an isolating bracket for
/// c among the roots of its minimal polynomial.
pub struct RealCycloField {
    n: u32,
    minpoly: Vec<BigInt>,
    degree: usize,
    /// Rational bracket (lo, hi) with ψ(lo) < 0 < ψ(hi) containing c and no
    /// other root of ψ; refined at construction so that sign evaluation
    /// almost never needs to bisect further.
    bracket: (BigRational, BigRational),
    /// Enclosures of c^k for k < degree, when c is provably positive; the
    /// fast sign path is a dot product against these.
    power_brackets: Option<Vec<(BigRational, BigRational)>>,
    approx: f64,
}

impl fmt::Debug for RealCycloField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RealCycloField(N = {}, degree {})", self.n, self.degree)
    }
}

impl RealCycloField {
    pub fn new(n: u32) -> Arc<Self> {
        assert!(n >= 1, "N must be positive");
        let minpoly = minimal_polynomial(n);
        let degree = minpoly.len() - 1;
        let approx = 2.0 * (std::f64::consts::PI / n as f64).cos();
        let numeric = poly::int_eval_f64(&minpoly, approx);
        // Relative to the magnitude of the terms being cancelled, so the
        // check stays meaningful for high-degree fields.
        let scale: f64 = minpoly
            .iter()
            .enumerate()
            .map(|(k, c)| {
                num::ToPrimitive::to_f64(c).unwrap_or(f64::MAX).abs() * approx.abs().powi(k as i32)
            })
            .sum::<f64>()
            .max(1.0);
        assert!(
            numeric.abs() < 1e-12 * scale,
            "minimal polynomial check failed for N = {n}: ψ(2cos(π/N)) ≈ {numeric}"
        );
        let bracket = if degree == 1 {
            // The root is the rational −minpoly[0]; sign evaluation never
            // consults the bracket in this case.
            let root = BigRational::from_integer(-minpoly[0].clone());
            (&root - BigRational::one(), &root + BigRational::one())
        } else {
            Self::isolating_bracket(n, &minpoly)
        };
        let mut field = RealCycloField {
            n,
            minpoly,
            degree,
            bracket,
            power_brackets: None,
            approx,
        };
        if degree > 1 {
            // Tight enough that almost every sign query resolves without
            // further bisection, while keeping the endpoint denominators
            // small; signum refines adaptively past this when needed.
            field.refine_bracket(40);
            if field.bracket.0.is_positive() {
                let mut powers = vec![(BigRational::one(), BigRational::one())];
                for k in 1..degree {
                    let prev = &powers[k - 1];
                    powers.push((&prev.0 * &field.bracket.0, &prev.1 * &field.bracket.1));
                }
                field.power_brackets = Some(powers);
            }
        }
        Arc::new(field)
    }

    /// Initial bracket (lo, 2) where lo separates c = 2cos(π/N) from the
    /// next-largest root 2cos(kπ/N), k the smallest integer > 1 coprime to
    /// 2N. Exactness is certified by the sign conditions ψ(lo) < 0 < ψ(2):
    /// ψ is monic with all roots real, simple and < 2, and exactly one of
    /// them exceeds lo.
    fn isolating_bracket(n: u32, minpoly: &[BigInt]) -> (BigRational, BigRational) {
        let gcd = |mut a: u32, mut b: u32| {
            while b != 0 {
                let t = a % b;
                a = b;
                b = t;
            }
            a
        };
        let second_k = (2..=n).find(|&k| gcd(k, 2 * n) == 1).unwrap_or(n);
        let pi = std::f64::consts::PI;
        let largest = 2.0 * (pi / n as f64).cos();
        let second = 2.0 * (second_k as f64 * pi / n as f64).cos();
        let lo = BigRational::from_f64((largest + second) / 2.0).unwrap();
        let hi = BigRational::from_integer(BigInt::from(2));
        assert!(
            poly::int_eval(minpoly, &lo).is_negative(),
            "bracket lower end does not isolate the root"
        );
        assert!(
            poly::int_eval(minpoly, &hi).is_positive(),
            "bracket upper end does not isolate the root"
        );
        (lo, hi)
    }

    fn refine_bracket(&mut self, steps: usize) {
        let two = BigRational::from_integer(BigInt::from(2));
        for _ in 0..steps {
            let mid = (&self.bracket.0 + &self.bracket.1) / &two;
            if poly::int_eval(&self.minpoly, &mid).is_negative() {
                self.bracket.0 = mid;
            } else {
                self.bracket.1 = mid;
            }
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn minpoly(&self) -> &[BigInt] {
        &self.minpoly
    }

    pub fn bracket(&self) -> (&BigRational, &BigRational) {
        (&self.bracket.0, &self.bracket.1)
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement {
            field: Arc::clone(self),
            coeffs: vec![BigRational::zero(); self.degree],
        }
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_int(1)
    }

    pub fn from_int(self: &Arc<Self>, value: i64) -> FieldElement {
        self.from_rational(BigRational::from_i64(value).unwrap())
    }

    pub fn from_rational(self: &Arc<Self>, value: BigRational) -> FieldElement {
        let mut coeffs = vec![BigRational::zero(); self.degree];
        coeffs[0] = value;
        FieldElement {
            field: Arc::clone(self),
            coeffs,
        }
    }

    /// The generator c = 2cos(π/N), reduced into the field.
    pub fn generator(self: &Arc<Self>) -> FieldElement {
        self.embed_2cos(1)
    }

    /// 2cos(kπ/N) as a field element, via D_0 = 2, D_1 = c,
    /// D_k = c·D_{k−1} − D_{k−2}.
    pub fn embed_2cos(self: &Arc<Self>, k: u32) -> FieldElement {
        assert!(k <= self.n, "embed_2cos: k = {k} out of range 0..={}", self.n);
        let mut prev = self.from_int(2);
        if k == 0 {
            return prev;
        }
        let mut c_raw = vec![BigRational::zero(), BigRational::one()];
        c_raw = reduce(&c_raw, &self.minpoly);
        c_raw.resize(self.degree, BigRational::zero());
        let c = FieldElement {
            field: Arc::clone(self),
            coeffs: c_raw,
        };
        let mut cur = c.clone();
        for _ in 1..k {
            let next = &(&c * &cur) - &prev;
            prev = cur;
            cur = next;
        }
        cur
    }
}

/// Reduces a rational polynomial modulo a monic integer polynomial.
fn reduce(coeffs: &[BigRational], minpoly: &[BigInt]) -> Vec<BigRational> {
    let degree = minpoly.len() - 1;
    let mut out = coeffs.to_vec();
    while out.len() > degree {
        let top = out.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = out.len() - degree;
        for (i, m) in minpoly.iter().take(degree).enumerate() {
            let delta = &top * BigRational::from_integer(m.clone());
            out[shift + i] -= delta;
        }
    }
    out
}

/// An element of a [`RealCycloField`], stored as the coefficients of
/// 1, c, c², … up to the field degree.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<RealCycloField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(self.same_field(other), "comparing elements of different fields");
        self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement{:?}", self.coeffs)
    }
}

impl FieldElement {
    pub fn field(&self) -> &Arc<RealCycloField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field.n == other.field.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Multiplicative inverse via the extended Euclidean algorithm with the
    /// minimal polynomial; `None` for zero.
    pub fn inv(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return None;
        }
        let a = poly::trim_rat(self.coeffs.clone());
        let m: Vec<BigRational> = self
            .field
            .minpoly
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let (g, s, _t) = poly::rat_ext_gcd(&a, &m);
        assert_eq!(
            g,
            vec![BigRational::one()],
            "minimal polynomial must be coprime to any nonzero element"
        );
        let mut coeffs = reduce(&s, &self.field.minpoly);
        coeffs.resize(self.field.degree, BigRational::zero());
        Some(FieldElement {
            field: Arc::clone(&self.field),
            coeffs,
        })
    }

    /// Exact sign of the real number represented by this element: −1, 0, +1.
    ///
    /// Evaluates the coefficient polynomial over the field's isolating
    /// bracket with rational interval arithmetic, bisecting the bracket on
    /// the minimal polynomial until the value interval excludes zero. A
    /// nonzero element evaluates to a nonzero real, so this terminates.
    pub fn signum(&self) -> i8 {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            // Constant elements (including zero) need no interval work.
            return rational_sign(&self.coeffs[0]);
        }
        if let Some(powers) = &self.field.power_brackets {
            // Dot product against the precomputed enclosures of c^k.
            let mut sum_lo = self.coeffs[0].clone();
            let mut sum_hi = self.coeffs[0].clone();
            for (c, power) in self.coeffs.iter().zip(powers).skip(1) {
                if c.is_zero() {
                    continue;
                }
                if c.is_positive() {
                    sum_lo += c * &power.0;
                    sum_hi += c * &power.1;
                } else {
                    sum_lo += c * &power.1;
                    sum_hi += c * &power.0;
                }
            }
            if sum_lo.is_positive() {
                return 1;
            }
            if sum_hi.is_negative() {
                return -1;
            }
        }
        let (mut lo, mut hi) = (self.field.bracket.0.clone(), self.field.bracket.1.clone());
        let two = BigRational::from_integer(BigInt::from(2));
        for _ in 0..100_000 {
            let (vlo, vhi) = interval_eval(&self.coeffs, &lo, &hi);
            if vlo.is_positive() {
                return 1;
            }
            if vhi.is_negative() {
                return -1;
            }
            let mid = (&lo + &hi) / &two;
            if poly::int_eval(&self.field.minpoly, &mid).is_negative() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        panic!("sign refinement did not converge; element is numerically degenerate");
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    /// Floating-point approximation, for cross-checks and display only.
    pub fn to_f64(&self) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * self.field.approx + c.to_f64().unwrap();
        }
        acc
    }
}

fn rational_sign(q: &BigRational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

/// Interval Horner evaluation of a polynomial over [lo, hi].
fn interval_eval(coeffs: &[BigRational], lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    let mut alo = BigRational::zero();
    let mut ahi = BigRational::zero();
    for c in coeffs.iter().rev() {
        let candidates = [&alo * lo, &alo * hi, &ahi * lo, &ahi * hi];
        let mut new_lo = candidates[0].clone();
        let mut new_hi = candidates[0].clone();
        for cand in &candidates[1..] {
            if *cand < new_lo {
                new_lo = cand.clone();
            }
            if *cand > new_hi {
                new_hi = cand.clone();
            }
        }
        alo = new_lo + c;
        ahi = new_hi + c;
    }
    (alo, ahi)
}

macro_rules! check_fields {
    ($a:expr, $b:expr) => {
        assert!(
            $a.same_field($b),
            "field mismatch: N = {} vs N = {}",
            $a.field.n,
            $b.field.n
        );
    };
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        check_fields!(self, rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        FieldElement {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        check_fields!(self, rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        FieldElement {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        check_fields!(self, rhs);
        let degree = self.field.degree;
        let mut raw = vec![BigRational::zero(); 2 * degree - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        let mut coeffs = reduce(&raw, &self.field.minpoly);
        coeffs.resize(degree, BigRational::zero());
        FieldElement {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }
}
