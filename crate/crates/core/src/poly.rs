//! Small polynomial toolkit over the radical field, sized for the weight
//! solve: at most two unknowns, fraction-free determinants of symbolic Gram
//! minors, linear-pair resultants and real-root isolation by Sturm chains.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use std::collections::BTreeMap;

use crate::exact::{RadicalNumber, Sign};

/// Polynomial in the unknowns `w0`, `w1` with radical coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly2 {
    terms: BTreeMap<(u16, u16), RadicalNumber>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(value: RadicalNumber) -> Self {
        let mut p = Self::zero();
        p.add_term((0, 0), value);
        p
    }

    pub fn one() -> Self {
        Self::constant(RadicalNumber::one())
    }

    /// The monomial `w_var`.
    pub fn var(var: usize) -> Self {
        assert!(var < 2, "two unknowns supported");
        let mut p = Self::zero();
        let mono = if var == 0 { (1, 0) } else { (0, 1) };
        p.add_term(mono, RadicalNumber::one());
        p
    }

    fn add_term(&mut self, mono: (u16, u16), value: RadicalNumber) {
        if value.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &value;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self, var: usize) -> u16 {
        self.terms
            .keys()
            .map(|&(a, b)| if var == 0 { a } else { b })
            .max()
            .unwrap_or(0)
    }

    pub fn as_constant(&self) -> Option<RadicalNumber> {
        if self.is_zero() {
            return Some(RadicalNumber::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&(0, 0)) {
                return Some(c.clone());
            }
        }
        None
    }

    /// Coefficient of `w_var^power` as a polynomial in the other unknown.
    pub fn coefficient_of(&self, var: usize, power: u16) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(a, b), c) in &self.terms {
            let (e, other) = if var == 0 { (a, (0, b)) } else { (b, (a, 0)) };
            if e == power {
                out.add_term(other, c.clone());
            }
        }
        out
    }

    /// Substitutes an exact value for one unknown.
    pub fn substitute(&self, var: usize, value: &RadicalNumber) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(a, b), c) in &self.terms {
            let (e, rest) = if var == 0 { (a, (0, b)) } else { (b, (a, 0)) };
            let mut coeff = c.clone();
            for _ in 0..e {
                coeff = &coeff * value;
            }
            out.add_term(rest, coeff);
        }
        out
    }

    /// Coefficients of a univariate polynomial in `w_var`, ascending;
    /// `None` when the other unknown still occurs.
    pub fn univariate_in(&self, var: usize) -> Option<UniPoly> {
        let other = 1 - var;
        if self.degree(other) > 0 {
            return None;
        }
        let deg = self.degree(var) as usize;
        let mut coeffs = vec![RadicalNumber::zero(); deg + 1];
        for (&(a, b), c) in &self.terms {
            let e = if var == 0 { a } else { b } as usize;
            coeffs[e] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    fn leading(&self) -> Option<(&(u16, u16), &RadicalNumber)> {
        self.terms.iter().next_back()
    }

    /// Exact division, `None` when the divisor does not divide evenly.
    pub fn exact_div(&self, divisor: &Poly2) -> Option<Poly2> {
        let (dm, dc) = divisor.leading()?;
        let (dm, dc) = (*dm, dc.clone());
        let dc_inv = dc.inverse().expect("leading coefficient nonzero");
        let mut rem = self.clone();
        let mut quotient = Poly2::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().expect("nonzero");
            let (rm, rc) = (*rm, rc.clone());
            if rm.0 < dm.0 || rm.1 < dm.1 {
                return None;
            }
            let mono = (rm.0 - dm.0, rm.1 - dm.1);
            let coeff = &rc * &dc_inv;
            let mut piece = Poly2::zero();
            piece.add_term(mono, coeff);
            quotient = &quotient + &piece;
            rem = &rem - &(&piece * divisor);
        }
        Some(quotient)
    }
}

impl std::ops::Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(m, c.clone());
        }
        out
    }
}

impl std::ops::Sub for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(m, -c.clone());
        }
        out
    }
}

impl std::ops::Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl std::ops::Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        &Poly2::zero() - self
    }
}

/// Fraction-free determinant (Bareiss) of a square polynomial matrix; the
/// interior divisions are exact by construction.
pub fn bareiss_determinant(mut m: Vec<Vec<Poly2>>) -> Poly2 {
    let n = m.len();
    if n == 0 {
        return Poly2::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign_flip = false;
    let mut prev = Poly2::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Poly2::zero();
            };
            m.swap(k, swap);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let numer = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = numer
                    .exact_div(&prev)
                    .expect("Bareiss interior division is exact");
            }
        }
        for i in k + 1..n {
            m[i][k] = Poly2::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        -&det
    } else {
        det
    }
}

/// Resultant of two polynomials that are linear in `w_var`, eliminating
/// that unknown: `Res(a1 x + a0, b1 x + b0) = a1 b0 - a0 b1`.
pub fn linear_resultant(p: &Poly2, q: &Poly2, var: usize) -> Poly2 {
    debug_assert!(p.degree(var) <= 1 && q.degree(var) <= 1);
    let a1 = p.coefficient_of(var, 1);
    let a0 = p.coefficient_of(var, 0);
    let b1 = q.coefficient_of(var, 1);
    let b0 = q.coefficient_of(var, 0);
    &(&a1 * &b0) - &(&a0 * &b1)
}

/// Univariate polynomial over the radical field, ascending coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<RadicalNumber>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<RadicalNumber>) -> Self {
        while coeffs.last().is_some_and(RadicalNumber::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> RadicalNumber {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(RadicalNumber::zero)
    }

    pub fn eval(&self, x: &RadicalNumber) -> RadicalNumber {
        let mut acc = RadicalNumber::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> RadicalNumber {
        self.eval(&RadicalNumber::from_rational(x.clone()))
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::new(vec![]);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &RadicalNumber::from_integer(i as i64))
            .collect();
        UniPoly::new(coeffs)
    }

    /// Remainder of field division.
    fn rem(&self, divisor: &UniPoly) -> UniPoly {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let lead_inv = divisor.coeffs[dd].inverse().expect("leading nonzero");
        loop {
            while rem.last().is_some_and(RadicalNumber::is_zero) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
            let k = rem.len() - 1;
            let factor = &rem[k] * &lead_inv;
            for i in 0..=dd {
                let delta = &factor * &divisor.coeffs[i];
                rem[k - dd + i] = &rem[k - dd + i] - &delta;
            }
            rem.pop();
        }
        UniPoly::new(rem)
    }

    fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Squarefree part (drops repeated roots).
    pub fn squarefree(&self) -> UniPoly {
        if self.degree() <= 1 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.clone();
        }
        self.exact_div_uni(&g)
    }

    fn exact_div_uni(&self, divisor: &UniPoly) -> UniPoly {
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let lead_inv = divisor.coeffs[dd].inverse().expect("nonzero");
        let mut quotient = vec![RadicalNumber::zero(); self.coeffs.len().saturating_sub(dd)];
        loop {
            while rem.last().is_some_and(RadicalNumber::is_zero) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
            let k = rem.len() - 1;
            let factor = &rem[k] * &lead_inv;
            quotient[k - dd] = factor.clone();
            for i in 0..=dd {
                let delta = &factor * &divisor.coeffs[i];
                rem[k - dd + i] = &rem[k - dd + i] - &delta;
            }
            rem.pop();
        }
        UniPoly::new(quotient)
    }

    fn sturm_chain(&self) -> Vec<UniPoly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let len = chain.len();
            if chain[len - 1].is_zero() {
                chain.pop();
                return chain;
            }
            let r = chain[len - 2].rem(&chain[len - 1]);
            if r.is_zero() {
                return chain;
            }
            let mut coeffs = r.coeffs;
            coeffs.iter_mut().for_each(|c| *c = -c.clone());
            chain.push(UniPoly::new(coeffs));
        }
    }

    fn sign_variations_at(chain: &[UniPoly], x: &BigRational) -> usize {
        let mut signs = Vec::new();
        for p in chain {
            match p.eval_rational(x).sign().sign {
                Sign::Positive => signs.push(1i8),
                Sign::Negative => signs.push(-1),
                Sign::Zero => {}
            }
        }
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    fn sign_variations_at_pos_inf(chain: &[UniPoly]) -> usize {
        let mut signs = Vec::new();
        for p in chain {
            if p.is_zero() {
                continue;
            }
            match p.coeffs[p.degree()].sign().sign {
                Sign::Positive => signs.push(1i8),
                Sign::Negative => signs.push(-1),
                Sign::Zero => unreachable!("leading coefficient is nonzero"),
            }
        }
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// A rational bound B with all real roots below B.
    fn root_bound(&self) -> BigRational {
        let lead_inv = self.coeffs[self.degree()].inverse().expect("nonzero leading");
        let mut bound = BigRational::one();
        for c in &self.coeffs[..self.degree()] {
            let ratio = c * &lead_inv;
            let (lo, hi) = ratio.enclosure(64);
            let mag = lo.abs().max(hi.abs());
            if mag > bound {
                bound = mag;
            }
        }
        bound + BigRational::from_integer(BigInt::from(2))
    }

    /// Isolating intervals `(a, b]` with rational endpoints, each holding
    /// exactly one real root strictly greater than `lower`.
    pub fn isolate_roots_above(&self, lower: &BigRational) -> Vec<(BigRational, BigRational)> {
        if self.is_zero() || self.degree() == 0 {
            return Vec::new();
        }
        let sf = self.squarefree();
        if sf.degree() == 0 {
            return Vec::new();
        }
        let chain = sf.sturm_chain();
        let hi = sf.root_bound().max(lower + BigRational::one());
        let mut lo = lower.clone();
        // nudge off an exact root at the lower endpoint (excluded anyway)
        while sf.eval_rational(&lo).is_zero() {
            lo += BigRational::new(1.into(), 1_000_000.into());
        }
        let va = Self::sign_variations_at(&chain, &lo);
        let vb = Self::sign_variations_at(&chain, &hi).min(Self::sign_variations_at_pos_inf(&chain));
        let mut out = Vec::new();
        let mut stack = vec![(lo, hi, va, vb)];
        while let Some((a, b, va, vb)) = stack.pop() {
            let count = va.saturating_sub(vb);
            if count == 0 {
                continue;
            }
            if count == 1 {
                out.push((a, b));
                continue;
            }
            let mut mid = (&a + &b) / BigRational::from_integer(2.into());
            while sf.eval_rational(&mid).is_zero() {
                // root exactly at the midpoint: shift the split point
                mid = (&a + &mid) / BigRational::from_integer(2.into());
            }
            let vm = Self::sign_variations_at(&chain, &mid);
            stack.push((a, mid.clone(), va, vm));
            stack.push((mid, b, vm, vb));
        }
        out.sort_by(|x, y| x.0.cmp(&y.0));
        out
    }

    /// Shrinks an isolating interval to the requested width by bisection.
    pub fn refine_root(
        &self,
        interval: (BigRational, BigRational),
        width: &BigRational,
    ) -> (BigRational, BigRational) {
        let sf = self.squarefree();
        let (mut a, mut b) = interval;
        if sf.eval_rational(&b).is_zero() {
            return (b.clone(), b);
        }
        let sb = sf.eval_rational(&b).sign().sign;
        loop {
            if &b - &a <= *width {
                return (a, b);
            }
            let mid = (&a + &b) / BigRational::from_integer(2.into());
            match sf.eval_rational(&mid).sign().sign {
                Sign::Zero => return (mid.clone(), mid),
                s if s == sb => b = mid,
                _ => a = mid,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> RadicalNumber {
        RadicalNumber::from_integer(n)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn poly_arithmetic_and_substitution() {
        // (w0 + 1)(w1 - 2) = w0 w1 - 2 w0 + w1 - 2
        let p =
            &(&Poly2::var(0) + &Poly2::one()) * &(&Poly2::var(1) - &Poly2::constant(c(2)));
        assert_eq!(p.degree(0), 1);
        assert_eq!(p.degree(1), 1);
        let at = p.substitute(0, &c(3)).substitute(1, &c(5));
        assert_eq!(at.as_constant().unwrap(), c(12)); // (3+1)(5-2)
    }

    #[test]
    fn exact_division_inverts_multiplication() {
        let a = &(&Poly2::var(0) * &Poly2::var(0)) + &Poly2::constant(c(3));
        let b = &Poly2::var(1) - &Poly2::constant("sqrt(2)".parse().unwrap());
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert!(a.exact_div(&b).is_none());
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let s2: RadicalNumber = "sqrt(2)".parse().unwrap();
        let rows = vec![
            vec![c(1), s2.clone(), c(0)],
            vec![s2.clone(), c(1), c(-1)],
            vec![c(0), c(-1), c(2)],
        ];
        let m: Vec<Vec<Poly2>> = rows
            .iter()
            .map(|r| r.iter().map(|e| Poly2::constant(e.clone())).collect())
            .collect();
        let det = bareiss_determinant(m).as_constant().unwrap();
        // expansion: 1*(2-1) - sqrt2*(2 sqrt2 - 0) = 1 - 4 = -3
        assert_eq!(det, c(-3));
    }

    #[test]
    fn bareiss_symbolic_determinant() {
        // [[1, w0], [w0, 1]] -> 1 - w0^2
        let m = vec![
            vec![Poly2::one(), Poly2::var(0)],
            vec![Poly2::var(0), Poly2::one()],
        ];
        let det = bareiss_determinant(m);
        let expected = &Poly2::one() - &(&Poly2::var(0) * &Poly2::var(0));
        assert_eq!(det, expected);
        // singular numeric matrix
        let m = vec![
            vec![Poly2::one(), Poly2::one()],
            vec![Poly2::one(), Poly2::one()],
        ];
        assert!(bareiss_determinant(m).is_zero());
    }

    #[test]
    fn linear_resultant_eliminates() {
        // p = w0 - w1, q = w0 + w1 - 2: common root w0=w1=1
        let p = &Poly2::var(0) - &Poly2::var(1);
        let q = &(&Poly2::var(0) + &Poly2::var(1)) - &Poly2::constant(c(2));
        let r = linear_resultant(&p, &q, 0).univariate_in(1).unwrap();
        assert!(r.eval(&c(1)).is_zero());
        assert!(!r.eval(&c(2)).is_zero());
    }

    #[test]
    fn isolates_roots_of_quadratic() {
        // x^2 - 3: single root above 1
        let p = UniPoly::new(vec![c(-3), c(0), c(1)]);
        let roots = p.isolate_roots_above(&BigRational::one());
        assert_eq!(roots.len(), 1);
        let (a, b) = p.refine_root(roots[0].clone(), &rat(1, 1_000_000));
        let s3 = "sqrt(3)".parse::<RadicalNumber>().unwrap();
        let lo = RadicalNumber::from_rational(a);
        let hi = RadicalNumber::from_rational(b);
        assert_ne!((&s3 - &lo).sign().sign, Sign::Negative);
        assert_ne!((&hi - &s3).sign().sign, Sign::Negative);
    }

    #[test]
    fn counts_all_roots_above_threshold() {
        // (x-2)(x-3)(x+1): two roots above 1
        let p = UniPoly::new(vec![c(6), c(1), c(-4), c(1)]);
        assert_eq!(p.isolate_roots_above(&BigRational::one()).len(), 2);
        // repeated roots collapse in the squarefree part
        let sq = UniPoly::new(vec![c(4), c(-4), c(1)]); // (x-2)^2
        assert_eq!(sq.isolate_roots_above(&BigRational::one()).len(), 1);
    }

    #[test]
    fn no_roots_means_empty() {
        let p = UniPoly::new(vec![c(1), c(0), c(1)]); // x^2 + 1
        assert!(p.isolate_roots_above(&BigRational::one()).is_empty());
        let p = UniPoly::new(vec![c(3), c(1)]); // root at -3 only
        assert!(p.isolate_roots_above(&BigRational::one()).is_empty());
    }

    #[test]
    fn roots_with_radical_coefficients() {
        // (x - sqrt(3)) * (x - 5): both roots above 1, sqrt(3) exact
        let s3: RadicalNumber = "sqrt(3)".parse().unwrap();
        let p = UniPoly::new(vec![&s3 * &c(5), -&(&s3 + &c(5)), c(1)]);
        let roots = p.isolate_roots_above(&BigRational::one());
        assert_eq!(roots.len(), 2);
        assert!(p.eval(&s3).is_zero());
    }
}
