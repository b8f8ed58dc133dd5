use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::cyclotomic::{cyclotomic, divisors, totient};
use super::gaussian::GaussianRational as Gq;
use super::laurent::LaurentPoly;
use crate::error::Error;

/// Rational function of `z` over `ℚ(i)` in lowest terms.
///
/// The value is `num / (Π_d Φ̂_d^{e_d} · rest)`. The denominator is an
/// ordinary polynomial with constant term 1; it is stored with its
/// cyclotomic factors pulled out greedily (`cyclo` maps `d ↦ e_d`) and
/// `rest` holding whatever is left, which contains no whole `Φ_d`. All
/// denominators the vertex computations produce are products of
/// `1 − z^m`, so `rest` is normally 1 and no Euclidean gcd is needed:
/// cancellation is trial division by small integer polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunctionZ {
    num: LaurentPoly,
    cyclo: BTreeMap<u32, u32>,
    rest: LaurentPoly,
}

impl Default for RationalFunctionZ {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalFunctionZ {
    pub fn zero() -> Self {
        RationalFunctionZ {
            num: LaurentPoly::zero(),
            cyclo: BTreeMap::new(),
            rest: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_laurent(num: LaurentPoly) -> Self {
        RationalFunctionZ {
            num,
            cyclo: BTreeMap::new(),
            rest: LaurentPoly::one(),
        }
    }

    pub fn constant(c: Gq) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Gq::from_int(n))
    }

    pub fn z_pow(e: i32) -> Self {
        Self::from_laurent(LaurentPoly::z_pow(e))
    }

    /// `[n] = z^n − z^{−n}`.
    pub fn quantum_int(n: i32) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::ZeroQuantumInteger);
        }
        let m = n.unsigned_abs() as i32;
        let mut coeffs = vec![Gq::zero(); 2 * m as usize + 1];
        coeffs[0] = -Gq::one();
        coeffs[2 * m as usize] = Gq::one();
        let q = Self::from_laurent(LaurentPoly::new(-m, coeffs));
        Ok(if n > 0 { q } else { -&q })
    }

    /// `1 / [n]`, built directly in factored form:
    /// `[n] = −z^{−n} Π_{d | 2n} Φ̂_d`.
    pub fn inv_quantum_int(n: i32) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::ZeroQuantumInteger);
        }
        let m = n.unsigned_abs();
        let sign = if n > 0 { -1 } else { 1 };
        Ok(RationalFunctionZ {
            num: LaurentPoly::monomial(Gq::from_int(sign), m as i32),
            cyclo: divisors(2 * m).into_iter().map(|d| (d, 1)).collect(),
            rest: LaurentPoly::one(),
        })
    }

    /// `1 / (1 − z^m)` for `m ≥ 1`.
    pub fn inv_one_minus_z_pow(m: u32) -> Self {
        assert!(m >= 1);
        RationalFunctionZ {
            num: LaurentPoly::one(),
            cyclo: divisors(m).into_iter().map(|d| (d, 1)).collect(),
            rest: LaurentPoly::one(),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    /// Cyclotomic exponents of the denominator.
    pub fn cyclotomic_factors(&self) -> &BTreeMap<u32, u32> {
        &self.cyclo
    }

    /// Non-cyclotomic remainder of the denominator (usually 1).
    pub fn residual_denominator(&self) -> &LaurentPoly {
        &self.rest
    }

    /// The denominator as one polynomial (constant term 1).
    pub fn denominator(&self) -> LaurentPoly {
        let mut d = self.rest.clone();
        for (&k, &e) in &self.cyclo {
            for _ in 0..e {
                d = d.mul_int_poly(&cyclotomic(k));
            }
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.is_laurent()
    }

    /// Whether the denominator is trivial.
    pub fn is_laurent(&self) -> bool {
        self.cyclo.is_empty() && self.rest.is_one()
    }

    pub fn as_constant(&self) -> Option<Gq> {
        if self.is_zero() {
            return Some(Gq::zero());
        }
        if self.is_laurent() && self.num.low() == 0 && self.num.span() == 0 {
            return self.num.lowest_coeff().cloned();
        }
        None
    }

    /// Builds `num / den` from arbitrary polynomials and brings it to
    /// canonical form with a full Euclidean gcd.
    pub fn from_fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (den_poly, den_shift) = den.split_monomial();
        let (num_poly, num_shift) = num.split_monomial();
        let g = LaurentPoly::gcd(&num_poly, &den_poly);
        let (num_poly, den_poly) = if g.span() > 0 {
            (num_poly.div_rem(&g).0, den_poly.div_rem(&g).0)
        } else {
            (num_poly, den_poly)
        };
        let c = den_poly.lowest_coeff().expect("nonzero").clone();
        let c_inv = c.inv().expect("nonzero");
        let num = num_poly.scale(&c_inv).shift(num_shift - den_shift);
        let mut rest = den_poly.scale(&c_inv);

        let mut cyclo = BTreeMap::new();
        if rest.span() > 0 {
            // any Φ_d with φ(d) <= deg; d/φ(d) stays below 8 far beyond
            // the degrees seen here
            let deg = rest.span() as u32;
            for d in 1..=8 * deg + 2 {
                if totient(d) > deg {
                    continue;
                }
                let phi = cyclotomic(d);
                while rest.span() + 1 >= phi.len() {
                    match rest.div_int_poly(&phi) {
                        Some(q) => {
                            rest = q;
                            *cyclo.entry(d).or_insert(0) += 1;
                        }
                        None => break,
                    }
                }
            }
        }
        Ok(RationalFunctionZ { num, cyclo, rest })
    }

    /// Cancels common factors between the numerator and the factored
    /// denominator.
    fn reduce(mut self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let mut needs_full_gcd = false;
        let real_num = self.num.is_real_up_to_scalar();
        let ds: Vec<u32> = self.cyclo.keys().copied().collect();
        for d in ds {
            let phi = cyclotomic(d);
            let e = self.cyclo.get_mut(&d).expect("present");
            while *e > 0 {
                match self.num.div_int_poly(&phi) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
            // Φ_d splits over ℚ(i) exactly when 4 | d; a numerator that is
            // not a multiple of a real polynomial may share one factor.
            if *e > 0 && d % 4 == 0 && !real_num {
                let (p, _) = self.num.split_monomial();
                let g = LaurentPoly::gcd(&p, &LaurentPoly::from_ints(0, &phi));
                if g.span() > 0 {
                    needs_full_gcd = true;
                }
            }
        }
        self.cyclo.retain(|_, e| *e > 0);
        if needs_full_gcd {
            let den = self.denominator();
            return Self::from_fraction(self.num, den).expect("nonzero denominator");
        }
        if !self.rest.is_one() {
            let (p, _) = self.num.split_monomial();
            let g = LaurentPoly::gcd(&p, &self.rest);
            if g.span() > 0 {
                let den = self.denominator();
                return Self::from_fraction(self.num, den).expect("nonzero denominator");
            }
        }
        self
    }

    /// Inverse, for a nonzero function of `z`.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_laurent() && self.num.span() == 0 {
            let c = self
                .num
                .lowest_coeff()
                .expect("nonzero")
                .inv()
                .expect("nonzero");
            return Ok(Self::from_laurent(LaurentPoly::monomial(
                c,
                -self.num.low(),
            )));
        }
        Self::from_fraction(self.denominator(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, c: &Gq) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunctionZ {
            num: self.num.scale(c),
            cyclo: self.cyclo.clone(),
            rest: self.rest.clone(),
        }
    }

    pub fn mul_z_pow(&self, e: i32) -> Self {
        RationalFunctionZ {
            num: self.num.shift(e),
            cyclo: self.cyclo.clone(),
            rest: self.rest.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The substitution `z ↦ z^{-1}` (`q ↦ q^{-1}`).
    pub fn invert_z(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        // Φ_d(1/z) = z^{-φ(d)} Φ_d(z) for d >= 2, Φ̂_1(1/z) = −z^{-1} Φ̂_1(z)
        let mut shift = 0i32;
        let mut sign = 1i64;
        for (&d, &e) in &self.cyclo {
            if d == 1 {
                shift += e as i32;
                if e % 2 == 1 {
                    sign = -sign;
                }
            } else {
                shift += (totient(d) * e) as i32;
            }
        }
        let mut num = self.num.reflect().shift(shift);
        if sign < 0 {
            num = -&num;
        }
        let mut rest = LaurentPoly::one();
        if !self.rest.is_one() {
            // rest(1/z) = z^{-r} · reversed(rest)
            let r = self.rest.span() as i32;
            let rev = self.rest.reflect().shift(r);
            let c = rev.lowest_coeff().expect("nonzero").inv().expect("nonzero");
            rest = rev.scale(&c);
            num = num.scale(&c).shift(r);
        }
        RationalFunctionZ {
            num,
            cyclo: self.cyclo.clone(),
            rest,
        }
    }

    /// Exact value at `z0`, or `Err(Pole)` where the denominator vanishes.
    pub fn eval(&self, z0: &Gq) -> Result<Gq, Error> {
        let n = self.num.eval(z0).ok_or(Error::Pole)?;
        let d = self.denominator().eval(z0).ok_or(Error::Pole)?;
        n.checked_div(&d).ok_or(Error::Pole)
    }

    /// Least common multiple of the denominators of `self` and `other`,
    /// returned as `(cyclo, rest)`.
    pub(crate) fn common_denominator<'a>(
        items: impl Iterator<Item = &'a RationalFunctionZ>,
    ) -> (BTreeMap<u32, u32>, LaurentPoly) {
        let mut cyclo: BTreeMap<u32, u32> = BTreeMap::new();
        let mut rest = LaurentPoly::one();
        for f in items {
            for (&d, &e) in &f.cyclo {
                let slot = cyclo.entry(d).or_insert(0);
                *slot = (*slot).max(e);
            }
            if !f.rest.is_one() && f.rest != rest {
                let g = LaurentPoly::gcd(&rest, &f.rest);
                let (q, _) = f.rest.div_rem(&g);
                rest = &rest * &q;
                let c = rest
                    .lowest_coeff()
                    .expect("nonzero")
                    .inv()
                    .expect("nonzero");
                rest = rest.scale(&c);
            }
        }
        (cyclo, rest)
    }

    /// Numerator of `self` over the given common denominator, which must be a
    /// multiple of `self`'s own.
    pub(crate) fn numerator_over(
        &self,
        cyclo: &BTreeMap<u32, u32>,
        rest: &LaurentPoly,
    ) -> LaurentPoly {
        let mut num = self.num.clone();
        for (&d, &e) in cyclo {
            let own = self.cyclo.get(&d).copied().unwrap_or(0);
            for _ in own..e {
                num = num.mul_int_poly(&cyclotomic(d));
            }
        }
        if !rest.is_one() {
            let (q, r) = rest.div_rem(&self.rest);
            debug_assert!(r.is_zero());
            num = &num * &q;
        }
        num
    }
}

impl<'a> Add<&'a RationalFunctionZ> for &'a RationalFunctionZ {
    type Output = RationalFunctionZ;

    fn add(self, rhs: &RationalFunctionZ) -> RationalFunctionZ {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.cyclo == rhs.cyclo && self.rest == rhs.rest {
            return RationalFunctionZ {
                num: &self.num + &rhs.num,
                cyclo: self.cyclo.clone(),
                rest: self.rest.clone(),
            }
            .reduce();
        }
        if self.rest.is_one() && rhs.rest.is_one() {
            let (cyclo, rest) = RationalFunctionZ::common_denominator([self, rhs].into_iter());
            let num = &self.numerator_over(&cyclo, &rest) + &rhs.numerator_over(&cyclo, &rest);
            return RationalFunctionZ { num, cyclo, rest }.reduce();
        }
        let num = &(&self.num * &rhs.denominator()) + &(&rhs.num * &self.denominator());
        let den = &self.denominator() * &rhs.denominator();
        RationalFunctionZ::from_fraction(num, den).expect("nonzero denominator")
    }
}

impl<'a> Sub<&'a RationalFunctionZ> for &'a RationalFunctionZ {
    type Output = RationalFunctionZ;

    fn sub(self, rhs: &RationalFunctionZ) -> RationalFunctionZ {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunctionZ {
    type Output = RationalFunctionZ;

    fn neg(self) -> RationalFunctionZ {
        RationalFunctionZ {
            num: -&self.num,
            cyclo: self.cyclo.clone(),
            rest: self.rest.clone(),
        }
    }
}

impl<'a> Mul<&'a RationalFunctionZ> for &'a RationalFunctionZ {
    type Output = RationalFunctionZ;

    fn mul(self, rhs: &RationalFunctionZ) -> RationalFunctionZ {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunctionZ::zero();
        }
        if rhs.is_laurent() && self.is_laurent() {
            return RationalFunctionZ::from_laurent(&self.num * &rhs.num);
        }
        if self.rest.is_one() && rhs.rest.is_one() {
            let mut cyclo = self.cyclo.clone();
            for (&d, &e) in &rhs.cyclo {
                *cyclo.entry(d).or_insert(0) += e;
            }
            return RationalFunctionZ {
                num: &self.num * &rhs.num,
                cyclo,
                rest: LaurentPoly::one(),
            }
            .reduce();
        }
        RationalFunctionZ::from_fraction(
            &self.num * &rhs.num,
            &self.denominator() * &rhs.denominator(),
        )
        .expect("nonzero denominator")
    }
}
