use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gaussian::GaussianRational as Gq;

/// Laurent polynomial in `z` over `ℚ(i)`: `Σ coeffs[k] z^{low+k}`.
///
/// Normalized so the first and last stored coefficients are nonzero; the
/// zero polynomial has no coefficients and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<Gq>,
}

impl LaurentPoly {
    pub fn new(low: i32, coeffs: Vec<Gq>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Gq::one())
    }

    pub fn constant(c: Gq) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Gq, e: i32) -> Self {
        Self::new(e, vec![c])
    }

    pub fn z_pow(e: i32) -> Self {
        Self::monomial(Gq::one(), e)
    }

    pub fn from_ints(low: i32, coeffs: &[i64]) -> Self {
        Self::new(low, coeffs.iter().map(|&c| Gq::from_int(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent present (0 for the zero polynomial).
    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest exponent present.
    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    /// `high − low`, the degree after factoring out the power of `z`.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Gq] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i32) -> Gq {
        let k = e - self.low;
        if k < 0 {
            return Gq::zero();
        }
        self.coeffs
            .get(k as usize)
            .cloned()
            .unwrap_or_else(Gq::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Gq)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i32, c))
    }

    pub fn lowest_coeff(&self) -> Option<&Gq> {
        self.coeffs.first()
    }

    pub fn leading_coeff(&self) -> Option<&Gq> {
        self.coeffs.last()
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// The substitution `z ↦ z^{-1}`.
    pub fn reflect(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly {
            low: -self.high(),
            coeffs,
        }
    }

    /// Drops the power of `z`: returns `(polynomial with nonzero constant
    /// term, exponent)` with `self = z^exponent · polynomial`.
    pub fn split_monomial(&self) -> (LaurentPoly, i32) {
        (
            LaurentPoly {
                low: 0,
                coeffs: self.coeffs.clone(),
            },
            self.low,
        )
    }

    pub fn scale(&self, c: &Gq) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Every coefficient is a fixed unit-free multiple of a real number, i.e.
    /// the polynomial is `c · P` with `P` real.
    pub fn is_real_up_to_scalar(&self) -> bool {
        let Some(first) = self.coeffs.iter().find(|c| !c.is_zero()) else {
            return true;
        };
        if first.is_real() {
            return self.coeffs.iter().all(Gq::is_real);
        }
        let inv = first.inv().expect("nonzero");
        self.coeffs.iter().all(|c| (c * &inv).is_real())
    }

    /// Multiplies by an integer polynomial `Σ d[k] z^k`.
    pub fn mul_int_poly(&self, d: &[i64]) -> Self {
        if self.is_zero() || d.is_empty() {
            return Self::zero();
        }
        let mut out = vec![Gq::zero(); self.coeffs.len() + d.len() - 1];
        for (k, &dk) in d.iter().enumerate() {
            if dk == 0 {
                continue;
            }
            for (j, c) in self.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                match dk {
                    1 => out[j + k] += c,
                    -1 => out[j + k] -= c,
                    _ => out[j + k] += &c.scale_int(dk),
                }
            }
        }
        Self::new(self.low, out)
    }

    /// Exact quotient by the integer polynomial `d` (constant term `±1`,
    /// leading coefficient `±1`), or `None` if it does not divide.
    pub fn div_int_poly(&self, d: &[i64]) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dl = d.len() - 1;
        if self.coeffs.len() <= dl {
            return None;
        }
        let lead = *d.last().expect("nonempty divisor");
        debug_assert!(lead == 1 || lead == -1);
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dl;
        let mut quot = vec![Gq::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = std::mem::take(&mut rem[k + dl]);
            if c.is_zero() {
                continue;
            }
            let q = if lead == 1 { c } else { -c };
            for (j, &dj) in d[..dl].iter().enumerate() {
                match dj {
                    0 => {}
                    1 => rem[k + j] -= &q,
                    -1 => rem[k + j] += &q,
                    _ => rem[k + j] -= &q.scale_int(dj),
                }
            }
            quot[k] = q;
        }
        if rem[..dl].iter().all(Zero::is_zero) {
            Some(Self::new(self.low, quot))
        } else {
            None
        }
    }

    /// Polynomial division with remainder; both operands are treated as
    /// ordinary polynomials (`low` must be 0 on both).
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(self.low >= 0 && d.low == 0 && !d.is_zero());
        let a = self.shift(0);
        let mut rem: Vec<Gq> = (0..a.high().max(-1) + 1).map(|e| a.coeff(e)).collect();
        let dl = d.coeffs.len() - 1;
        if rem.len() <= dl {
            return (Self::zero(), Self::new(0, rem));
        }
        let inv_lead = d.coeffs[dl].inv().expect("nonzero leading coefficient");
        let qlen = rem.len() - dl;
        let mut quot = vec![Gq::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = std::mem::take(&mut rem[k + dl]);
            if c.is_zero() {
                continue;
            }
            let q = &c * &inv_lead;
            for (j, dj) in d.coeffs[..dl].iter().enumerate() {
                if !dj.is_zero() {
                    rem[k + j] -= &(&q * dj);
                }
            }
            quot[k] = q;
        }
        rem.truncate(dl);
        (Self::new(0, quot), Self::new(0, rem))
    }

    /// Monic gcd by Euclid over `ℚ(i)`, ignoring powers of `z`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut x, mut y) = (a.split_monomial().0, b.split_monomial().0);
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            // z divides neither operand, so it can be dropped from r
            let r = r.split_monomial().0.monic();
            x = y;
            y = r;
        }
        x.monic()
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(c) => self.scale(&c.inv().expect("nonzero")),
        }
    }

    pub fn eval(&self, z: &Gq) -> Option<Gq> {
        if self.is_zero() {
            return Some(Gq::zero());
        }
        // Horner on the polynomial part, then the monomial factor
        let mut acc = Gq::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + c;
        }
        Some(&acc * &z.powi(self.low as i64)?)
    }

    /// Number of times `(z − 1)` divides the polynomial.
    pub fn multiplicity_at_one(&self) -> usize {
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() {
            match p.div_int_poly(&[-1, 1]) {
                Some(q) => {
                    p = q;
                    m += 1;
                }
                None => break,
            }
        }
        m
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high().max(rhs.high());
        let mut out = vec![Gq::zero(); (high - low + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[(self.low - low) as usize + k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            out[(rhs.low - low) as usize + k] += c;
        }
        LaurentPoly::new(low, out)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = vec![Gq::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        LaurentPoly::new(self.low + rhs.low, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_normalization() {
        let p = LaurentPoly::from_ints(-1, &[0, 1, 0]);
        assert_eq!(p, LaurentPoly::z_pow(0));
        let a = LaurentPoly::from_ints(-1, &[-1, 0, 1]); // z - z^-1
        let b = LaurentPoly::from_ints(-1, &[1, 0, 1]); // z + z^-1
        assert_eq!(&a * &b, LaurentPoly::from_ints(-2, &[-1, 0, 0, 0, 1]));
        assert!((&a - &a).is_zero());
        assert_eq!(a.reflect(), -&a);
    }

    #[test]
    fn exact_division() {
        // 1 - z^4 = (1 - z)(1 + z)(1 + z^2)
        let p = LaurentPoly::from_ints(0, &[1, 0, 0, 0, -1]);
        let q = p.div_int_poly(&[1, -1]).unwrap();
        assert_eq!(q, LaurentPoly::from_ints(0, &[1, 1, 1, 1]));
        assert!(q.div_int_poly(&[1, -1]).is_none());
        assert_eq!(
            q.div_int_poly(&[1, 0, 1]).unwrap(),
            LaurentPoly::from_ints(0, &[1, 1])
        );
        assert_eq!(p.multiplicity_at_one(), 1);
    }

    #[test]
    fn euclid_gcd() {
        let a = LaurentPoly::from_ints(0, &[-1, 0, 1]); // z^2 - 1
        let b = LaurentPoly::from_ints(0, &[1, 2, 1]); // (z + 1)^2
        assert_eq!(LaurentPoly::gcd(&a, &b), LaurentPoly::from_ints(0, &[1, 1]));
        // first remainder is z
        let a = LaurentPoly::from_ints(0, &[1, 1, 1]);
        let b = LaurentPoly::from_ints(0, &[1, 0, 1]);
        assert_eq!(LaurentPoly::gcd(&a, &b), LaurentPoly::one());
    }

    #[test]
    fn evaluation() {
        let p = LaurentPoly::from_ints(-2, &[-1, 0, 0, 0, 1]); // z^2 - z^-2
        assert_eq!(p.eval(&Gq::from_int(2)).unwrap(), Gq::ratio(15, 4));
        assert!(p.eval(&Gq::zero()).is_none());
    }
}
