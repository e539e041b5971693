//! Exact arithmetic over the ring of rational linear combinations of square
//! roots of squarefree positive integers.
//!
//! A [`RadicalNumber`] is stored as a map `radicand -> coefficient` with the
//! radicand `1` holding the rational part. Distinct square roots of
//! squarefree integers are linearly independent over the rationals, so the
//! representation is unique and equality is structural. Sign queries are
//! answered by interval refinement and certified by a [`SignCertificate`];
//! the zero test is purely structural.

mod parse;

pub use parse::ExprParseError;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use num_bigint::{BigInt, ToBigInt};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sign of an exact value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// Certified sign: for nonzero values, a rational interval that excludes
/// zero and has the stated sign. Zero is decided structurally and carries
/// no interval.
#[derive(Clone, Debug)]
pub struct SignCertificate {
    pub sign: Sign,
    pub witness: Option<(BigRational, BigRational)>,
}

/// Dihedral order outside the supported label set {2,3,4,5,6}.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unsupported dihedral order m={0}; supported orders are 2,3,4,5,6")]
pub struct UnsupportedOrder(pub u32);

/// Element of the ring Q[sqrt(n) : n squarefree]. The key 1 holds the
/// rational part; all other keys are squarefree integers >= 2 and no stored
/// coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RadicalNumber {
    terms: BTreeMap<u64, BigRational>,
}

/// Splits `n` as `s^2 * m` with `m` squarefree; returns `(s, m)`.
fn extract_square(mut n: u64) -> (u64, u64) {
    debug_assert!(n >= 1);
    let mut square_part = 1u64;
    let mut squarefree = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0u32;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            for _ in 0..e / 2 {
                square_part *= p;
            }
            if e % 2 == 1 {
                squarefree *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    squarefree *= n; // leftover prime
    (square_part, squarefree)
}

fn starting_precision() -> u32 {
    static BITS: OnceLock<u32> = OnceLock::new();
    *BITS.get_or_init(|| {
        std::env::var("COXFORGE_PRECISION")
            .ok()
            .and_then(|v| v.parse().ok())
            .filter(|&b| (8..=65536).contains(&b))
            .unwrap_or(64)
    })
}

impl RadicalNumber {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(1, q);
        }
        Self { terms }
    }

    /// `num/den` as an exact rational.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The exact square root of a positive integer, in canonical form
    /// (`sqrt(12)` becomes `2 sqrt(3)`).
    pub fn sqrt_integer(n: u64) -> Self {
        assert!(n >= 1, "radicand must be positive");
        let (s, m) = extract_square(n);
        let mut out = Self::zero();
        out.add_term(m, BigRational::from_integer(BigInt::from(s)));
        out
    }

    /// Adds `q * sqrt(m)`; `m` must already be squarefree.
    fn add_term(&mut self, m: u64, q: BigRational) {
        debug_assert_eq!(extract_square(m), (1, m), "radicand {m} not squarefree");
        if q.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += q;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&1).is_some_and(|q| q.is_one())
    }

    /// True when the value is rational (possibly zero).
    pub fn is_rational(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|&n| n == 1)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_rational() {
            self.terms.get(&1).cloned()
        } else {
            None
        }
    }

    /// Iterates `(radicand, coefficient)` pairs in radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.terms.iter().map(|(&n, q)| (n, q))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Certified sign. Zero is structural; nonzero values are enclosed in a
    /// rational interval refined until it excludes zero.
    pub fn sign(&self) -> SignCertificate {
        if self.is_zero() {
            return SignCertificate {
                sign: Sign::Zero,
                witness: None,
            };
        }
        let mut bits = starting_precision();
        loop {
            let (lo, hi) = self.enclose(bits);
            if lo.is_positive() {
                return SignCertificate {
                    sign: Sign::Positive,
                    witness: Some((lo, hi)),
                };
            }
            if hi.is_negative() {
                return SignCertificate {
                    sign: Sign::Negative,
                    witness: Some((lo, hi)),
                };
            }
            bits = bits.saturating_mul(2);
        }
    }

    /// Outward-rounded rational enclosure at `bits` bits of sqrt precision.
    fn enclose(&self, bits: u32) -> (BigRational, BigRational) {
        let mut lo = BigRational::zero();
        let mut hi = BigRational::zero();
        let scale = BigInt::one() << bits;
        for (&n, q) in &self.terms {
            if n == 1 {
                lo += q;
                hi += q;
                continue;
            }
            // floor(sqrt(n * 4^bits)) = s  =>  s/2^bits <= sqrt(n) < (s+1)/2^bits
            let s = (BigInt::from(n) << (2 * bits)).sqrt();
            let root_lo = BigRational::new(s.clone(), scale.clone());
            let root_hi = BigRational::new(s + 1, scale.clone());
            if q.is_positive() {
                lo += q * &root_lo;
                hi += q * &root_hi;
            } else {
                lo += q * &root_hi;
                hi += q * &root_lo;
            }
        }
        (lo, hi)
    }

    /// Floating approximation, for diagnostics and ordering heuristics only.
    pub fn approx_f64(&self) -> f64 {
        let (lo, hi) = self.enclose(80);
        let mid = (lo + hi) / BigRational::from_integer(2.into());
        ratio_to_f64(&mid)
    }

    /// Multiplicative inverse in the ring (which is a field). `None` for zero.
    ///
    /// Rationalises one prime at a time: writing `x = u + v sqrt(p)` with `p`
    /// the largest prime in any radicand, `1/x = (u - v sqrt(p)) / (u^2 - p v^2)`
    /// and the denominator lives in a strictly smaller multiquadratic field.
    pub fn inverse(&self) -> Option<RadicalNumber> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(RadicalNumber::from_rational(q.recip()));
        }
        let p = self
            .terms
            .keys()
            .flat_map(|&n| prime_factors(n))
            .max()
            .expect("non-rational value has a radicand");
        let (u, v) = self.split_at_prime(p);
        let denom = &u * &u - &(&v * &v) * &RadicalNumber::from_integer(p as i64);
        let denom_inv = denom
            .inverse()
            .expect("conjugate norm of a nonzero field element is nonzero");
        let conj = &u - &(&v * &RadicalNumber::sqrt_integer(p));
        Some(&conj * &denom_inv)
    }

    /// Writes `self = u + v * sqrt(p)` where no radicand of `u` or `v` is
    /// divisible by `p`.
    pub(crate) fn split_at_prime(&self, p: u64) -> (RadicalNumber, RadicalNumber) {
        let mut u = RadicalNumber::zero();
        let mut v = RadicalNumber::zero();
        for (&n, q) in &self.terms {
            if n % p == 0 {
                v.add_term(n / p, q.clone());
            } else {
                u.add_term(n, q.clone());
            }
        }
        (u, v)
    }

    /// Primes dividing any radicand, ascending, deduplicated.
    pub(crate) fn radicand_primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self.terms.keys().flat_map(|&n| prime_factors(n)).collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    }
}

/// Exact square root within the ring, if one exists.
///
/// Descends the multiquadratic tower: for the largest prime `p` in any
/// radicand, `x = d0 + d1 sqrt(p)` has a root `u = a + b sqrt(p)` exactly
/// when `a^2 = (d0 +- s)/2` with `s^2 = d0^2 - p d1^2` solvable one level
/// down; the rational base case takes square roots by squarefree
/// extraction (which may introduce fresh radicands). The result is always
/// re-verified by exact squaring before being returned.
pub fn radical_sqrt(x: &RadicalNumber) -> Option<RadicalNumber> {
    let direct = tower_sqrt(x, 0);
    let candidate = direct.or_else(|| {
        // a root whose radicands use primes absent from x factors as
        // sqrt(m) * v with x = m v^2 and v inside x's own prime tower,
        // so a fresh squarefree m is only ever needed once, at the top
        (2u64..=70)
            .filter(|&m| extract_square(m) == (1, m))
            .find_map(|m| {
                let quotient = x * &RadicalNumber::from_ratio(1, m as i64);
                let v = tower_sqrt(&quotient, 0)?;
                Some(&v * &RadicalNumber::sqrt_integer(m))
            })
    })?;
    if &(&candidate * &candidate) == x {
        Some(candidate)
    } else {
        None
    }
}

fn tower_sqrt(x: &RadicalNumber, depth: usize) -> Option<RadicalNumber> {
    if depth > 12 {
        return None;
    }
    if x.is_zero() {
        return Some(RadicalNumber::zero());
    }
    if x.sign().sign == Sign::Negative {
        return None;
    }
    if let Some(q) = x.as_rational() {
        return rational_sqrt(&q);
    }
    let p = *x.radicand_primes().last().expect("non-rational");
    let (d0, d1) = x.split_at_prime(p);
    debug_assert!(!d1.is_zero());
    // u = a + b sqrt(p):  a^2 + p b^2 = d0,  2ab = d1
    let p_num = RadicalNumber::from_integer(p as i64);
    let norm = &(&d0 * &d0) - &(&p_num * &(&d1 * &d1));
    let s = tower_sqrt(&norm, depth + 1)?;
    let half = RadicalNumber::from_ratio(1, 2);
    for signed in [s.clone(), -s] {
        let a_sq = &(&d0 + &signed) * &half;
        let Some(a) = tower_sqrt(&a_sq, depth + 1) else {
            continue;
        };
        if a.is_zero() {
            continue;
        }
        let b = &(&d1 * &half) * &a.inverse().expect("nonzero");
        let u = &a + &(&b * &RadicalNumber::sqrt_integer(p));
        if &(&u * &u) == x {
            return Some(u);
        }
    }
    None
}

/// Square root of a non-negative rational inside the ring:
/// sqrt(a/b) = sqrt(a b) / b = s sqrt(m) / b.
fn rational_sqrt(q: &BigRational) -> Option<RadicalNumber> {
    use num_traits::ToPrimitive;
    if q.is_negative() {
        return None;
    }
    let product = q.numer() * q.denom();
    let (s, m) = extract_square_bigint(&product)?;
    let m_u64 = m.to_u64()?;
    let coeff = BigRational::new(s, q.denom().clone());
    Some(RadicalNumber::from_rational(coeff) * RadicalNumber::sqrt_integer(m_u64))
}

/// Splits a non-negative integer as s^2 * m with m squarefree; gives up on
/// numbers whose unfactored part might hide a large square.
fn extract_square_bigint(n: &BigInt) -> Option<(BigInt, BigInt)> {
    if n.is_zero() {
        return Some((BigInt::zero(), BigInt::one()));
    }
    let mut rest = n.clone();
    let mut square = BigInt::one();
    let mut squarefree = BigInt::one();
    let mut p = 2u64;
    while BigInt::from(p) * BigInt::from(p) <= rest && p < 100_000 {
        let pb = BigInt::from(p);
        if (&rest % &pb).is_zero() {
            let mut e = 0u32;
            while (&rest % &pb).is_zero() {
                rest /= &pb;
                e += 1;
            }
            for _ in 0..e / 2 {
                square *= &pb;
            }
            if e % 2 == 1 {
                squarefree *= &pb;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        let root = rest.sqrt();
        if &root * &root == rest {
            square *= root;
        } else if rest < BigInt::from(10_000_000_000u64) {
            // all remaining factors exceed 1e5, so below 1e10 it is prime
            squarefree *= rest;
        } else {
            return None;
        }
    }
    Some((square, squarefree))
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn ratio_to_f64(q: &BigRational) -> f64 {
    // scale to keep precision for large numerator/denominator
    let num = q.numer();
    let den = q.denom();
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    let shift = (nb.max(db) - 62).max(0) as u64;
    let n2 = num >> shift;
    let d2 = den >> shift;
    let nf = n2.to_bigint().unwrap().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let df = d2.to_bigint().unwrap().to_string().parse::<f64>().unwrap_or(f64::NAN);
    nf / df
}

/// Exact value of cos(pi/m) for the supported dihedral orders.
pub fn cos_pi_over(m: u32) -> Result<RadicalNumber, UnsupportedOrder> {
    let mut x = RadicalNumber::zero();
    match m {
        2 => {}
        3 => x.add_term(1, BigRational::new(1.into(), 2.into())),
        4 => x.add_term(2, BigRational::new(1.into(), 2.into())),
        5 => {
            x.add_term(1, BigRational::new(1.into(), 4.into()));
            x.add_term(5, BigRational::new(1.into(), 4.into()));
        }
        6 => x.add_term(3, BigRational::new(1.into(), 2.into())),
        other => return Err(UnsupportedOrder(other)),
    }
    Ok(x)
}

impl Add for &RadicalNumber {
    type Output = RadicalNumber;
    fn add(self, rhs: &RadicalNumber) -> RadicalNumber {
        let mut out = self.clone();
        for (&n, q) in &rhs.terms {
            out.add_term(n, q.clone());
        }
        out
    }
}

impl Sub for &RadicalNumber {
    type Output = RadicalNumber;
    fn sub(self, rhs: &RadicalNumber) -> RadicalNumber {
        let mut out = self.clone();
        for (&n, q) in &rhs.terms {
            out.add_term(n, -q.clone());
        }
        out
    }
}

impl Mul for &RadicalNumber {
    type Output = RadicalNumber;
    fn mul(self, rhs: &RadicalNumber) -> RadicalNumber {
        let mut out = RadicalNumber::zero();
        for (&a, qa) in &self.terms {
            for (&b, qb) in &rhs.terms {
                // sqrt(a) * sqrt(b) = g * sqrt(ab / g^2) with g^2 the square part
                let (g, m) = extract_square(a * b);
                out.add_term(m, qa * qb * BigRational::from_integer(BigInt::from(g)));
            }
        }
        out
    }
}

impl Neg for &RadicalNumber {
    type Output = RadicalNumber;
    fn neg(self) -> RadicalNumber {
        let mut out = self.clone();
        for q in out.terms.values_mut() {
            *q = -q.clone();
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RadicalNumber {
            type Output = RadicalNumber;
            fn $method(self, rhs: RadicalNumber) -> RadicalNumber {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RadicalNumber> for RadicalNumber {
            type Output = RadicalNumber;
            fn $method(self, rhs: &RadicalNumber) -> RadicalNumber {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for RadicalNumber {
    type Output = RadicalNumber;
    fn neg(self) -> RadicalNumber {
        -&self
    }
}

impl AddAssign<&RadicalNumber> for RadicalNumber {
    fn add_assign(&mut self, rhs: &RadicalNumber) {
        for (&n, q) in &rhs.terms {
            self.add_term(n, q.clone());
        }
    }
}

impl SubAssign<&RadicalNumber> for RadicalNumber {
    fn sub_assign(&mut self, rhs: &RadicalNumber) {
        for (&n, q) in &rhs.terms {
            self.add_term(n, -q.clone());
        }
    }
}

impl MulAssign<&RadicalNumber> for RadicalNumber {
    fn mul_assign(&mut self, rhs: &RadicalNumber) {
        *self = (&*self) * rhs;
    }
}

impl PartialOrd for RadicalNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RadicalNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign().sign {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl fmt::Debug for RadicalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn radical(parts: &[(u64, (i64, i64))]) -> RadicalNumber {
        let mut x = RadicalNumber::zero();
        for &(m, (n, d)) in parts {
            x.add_term(m, rat(n, d));
        }
        x
    }

    #[test]
    fn addition_cancels_exactly() {
        let a = radical(&[(1, (1, 2)), (2, (1, 2))]);
        let b = radical(&[(1, (1, 2)), (2, (-1, 2))]);
        assert_eq!(&a + &b, RadicalNumber::one());
    }

    #[test]
    fn addition_identity() {
        let sqrt3 = RadicalNumber::sqrt_integer(3);
        assert_eq!(&RadicalNumber::zero() + &sqrt3, sqrt3);
    }

    #[test]
    fn addition_merges_rational_part() {
        // 1/2 + (1/3) sqrt(15) is a published dotted weight
        let a = radical(&[(1, (1, 2)), (15, (1, 3))]);
        let b = RadicalNumber::from_ratio(1, 2);
        assert_eq!(&a + &b, radical(&[(1, (1, 1)), (15, (1, 3))]));
    }

    #[test]
    fn product_of_roots_combines_radicands() {
        let s2 = RadicalNumber::sqrt_integer(2);
        let s3 = RadicalNumber::sqrt_integer(3);
        assert_eq!(&s2 * &s3, RadicalNumber::sqrt_integer(6));
        assert_eq!(&s2 * &s2, RadicalNumber::from_integer(2));
    }

    #[test]
    fn golden_ratio_square() {
        // ((1/2) + (1/2) sqrt 5)^2 = 3/2 + (1/2) sqrt 5
        let phi = radical(&[(1, (1, 2)), (5, (1, 2))]);
        assert_eq!(&phi * &phi, radical(&[(1, (3, 2)), (5, (1, 2))]));
    }

    #[test]
    fn sqrt_extracts_square_part() {
        assert_eq!(
            RadicalNumber::sqrt_integer(12),
            radical(&[(3, (2, 1))])
        );
        assert_eq!(RadicalNumber::sqrt_integer(9), RadicalNumber::from_integer(3));
    }

    #[test]
    fn sign_of_zero_is_structural() {
        let c = RadicalNumber::zero().sign();
        assert_eq!(c.sign, Sign::Zero);
        assert!(c.witness.is_none());
    }

    #[test]
    fn sign_examples() {
        // (1/3) sqrt 15 - 1 > 0 since 15 > 9
        let x = radical(&[(15, (1, 3)), (1, (-1, 1))]);
        let c = x.sign();
        assert_eq!(c.sign, Sign::Positive);
        let (lo, _hi) = c.witness.unwrap();
        assert!(lo.is_positive());

        let y = radical(&[(1, (1, 1)), (2, (-1, 1))]);
        assert_eq!(y.sign().sign, Sign::Negative);
    }

    #[test]
    fn tight_cancellation_needs_refinement() {
        // sqrt(2) + sqrt(3) - sqrt(5) - a tiny rational: forces several rounds
        let x = radical(&[
            (2, (1, 1)),
            (3, (1, 1)),
            (5, (-1, 1)),
            (1, (-910_139_175, 1_000_000_000)),
        ]);
        assert_eq!(x.sign().sign, Sign::Positive);
    }

    #[test]
    fn cosine_table() {
        assert_eq!(cos_pi_over(2).unwrap(), RadicalNumber::zero());
        assert_eq!(cos_pi_over(3).unwrap(), RadicalNumber::from_ratio(1, 2));
        assert_eq!(cos_pi_over(4).unwrap(), radical(&[(2, (1, 2))]));
        assert_eq!(cos_pi_over(5).unwrap(), radical(&[(1, (1, 4)), (5, (1, 4))]));
        assert_eq!(cos_pi_over(6).unwrap(), radical(&[(3, (1, 2))]));
        assert_eq!(cos_pi_over(7), Err(UnsupportedOrder(7)));
    }

    #[test]
    fn field_inverse() {
        let x = radical(&[(1, (1, 2)), (15, (1, 3)), (2, (-3, 7))]);
        let inv = x.inverse().unwrap();
        assert!( (&x * &inv).is_one() );
        assert!(RadicalNumber::zero().inverse().is_none());
    }

    #[test]
    fn in_ring_square_roots() {
        // rational with a fresh radicand
        assert_eq!(
            radical_sqrt(&RadicalNumber::from_integer(6)).unwrap(),
            RadicalNumber::sqrt_integer(6)
        );
        assert_eq!(
            radical_sqrt(&RadicalNumber::from_ratio(9, 4)).unwrap(),
            RadicalNumber::from_ratio(3, 2)
        );
        // (1 + sqrt 2)^2 = 3 + 2 sqrt 2
        let x = radical(&[(1, (3, 1)), (2, (2, 1))]);
        let r = radical_sqrt(&x).unwrap();
        assert_eq!(&r * &r, x);
        // (sqrt 2 + sqrt 3)^2 = 5 + 2 sqrt 6
        let x = radical(&[(1, (5, 1)), (6, (2, 1))]);
        let r = radical_sqrt(&x).unwrap();
        assert_eq!(&r * &r, x);
        // negative and non-square values have no root
        assert!(radical_sqrt(&RadicalNumber::from_integer(-2)).is_none());
        assert!(radical_sqrt(&radical(&[(1, (1, 1)), (2, (1, 1))])).is_none());
    }

    proptest! {
        #[test]
        fn sqrt_of_squares_recovers(a in arb_radical()) {
            let sq = &a * &a;
            let r = radical_sqrt(&sq);
            prop_assert!(r.is_some());
            let r = r.unwrap();
            prop_assert_eq!(&r * &r, sq);
        }
    }

    fn arb_radical() -> impl Strategy<Value = RadicalNumber> {
        let term = (prop_oneof![Just(1u64), Just(2), Just(3), Just(5), Just(6), Just(10), Just(15)],
                    -20i64..=20, 1i64..=8);
        proptest::collection::vec(term, 0..5).prop_map(|ts| {
            let mut x = RadicalNumber::zero();
            for (m, n, d) in ts {
                x.add_term(m, rat(n, d));
            }
            x
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_radical(), b in arb_radical(), c in arb_radical()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &(-&a), RadicalNumber::zero());
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn square_of_nonzero_is_positive(a in arb_radical()) {
            prop_assume!(!a.is_zero());
            prop_assert_eq!((&a * &a).sign().sign, Sign::Positive);
        }

        #[test]
        fn print_parse_roundtrip(a in arb_radical()) {
            let s = a.to_string();
            let back: RadicalNumber = s.parse().unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn inverse_is_two_sided(a in arb_radical()) {
            prop_assume!(!a.is_zero());
            let inv = a.inverse().unwrap();
            prop_assert!((&a * &inv).is_one());
            prop_assert!((&inv * &a).is_one());
        }
    }
}
