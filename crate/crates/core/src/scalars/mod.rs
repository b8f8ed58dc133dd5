//! The exact coefficient ring.
//!
//! A [`Scalar`] is a finite sum `Σ f_{k,m,n}(z) · u^k a^m b^n` with
//! `f ∈ ℚ(i)(z)`, `z = q^{1/2}`, `u = e^{−t/2}` a Laurent generator and
//! `a`, `b` polynomial generators. Every denominator lives in `z` alone,
//! so only univariate normalization is ever required.

mod cyclotomic;
mod gaussian;
mod laurent;
mod ratfunc;
mod render;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use cyclotomic::{cyclotomic, totient};
pub use gaussian::GaussianRational;
pub use laurent::LaurentPoly;
pub use ratfunc::RationalFunctionZ;

use crate::error::Error;

/// Exponents of `u^u a^a b^b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Mono {
    pub u: i32,
    pub a: u32,
    pub b: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { u: 0, a: 0, b: 0 };

    pub fn u(k: i32) -> Self {
        Mono { u: k, a: 0, b: 0 }
    }

    fn mul(self, o: Mono) -> Mono {
        Mono {
            u: self.u + o.u,
            a: self.a + o.a,
            b: self.b + o.b,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: BTreeMap<Mono, RationalFunctionZ>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Self::from_ratfunc(RationalFunctionZ::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_ratfunc(RationalFunctionZ::from_int(n))
    }

    pub fn from_gaussian(c: GaussianRational) -> Self {
        Self::from_ratfunc(RationalFunctionZ::constant(c))
    }

    pub fn i() -> Self {
        Self::from_gaussian(GaussianRational::i())
    }

    pub fn from_ratfunc(f: RationalFunctionZ) -> Self {
        Self::term(Mono::ONE, f)
    }

    pub fn term(m: Mono, f: RationalFunctionZ) -> Self {
        let mut terms = BTreeMap::new();
        if !f.is_zero() {
            terms.insert(m, f);
        }
        Scalar { terms }
    }

    pub fn z_pow(e: i32) -> Self {
        Self::from_ratfunc(RationalFunctionZ::z_pow(e))
    }

    pub fn u_pow(k: i32) -> Self {
        Self::term(Mono::u(k), RationalFunctionZ::one())
    }

    pub fn a() -> Self {
        Self::term(Mono { u: 0, a: 1, b: 0 }, RationalFunctionZ::one())
    }

    pub fn b() -> Self {
        Self::term(Mono { u: 0, a: 0, b: 1 }, RationalFunctionZ::one())
    }

    pub fn terms(&self) -> &BTreeMap<Mono, RationalFunctionZ> {
        &self.terms
    }

    pub fn coeff(&self, m: Mono) -> RationalFunctionZ {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Mono::ONE).is_some_and(|f| f.is_one())
    }

    /// The value as a pure function of `z`, if it has no `u`, `a`, `b`.
    pub fn as_ratfunc(&self) -> Option<RationalFunctionZ> {
        match self.terms.len() {
            0 => Some(RationalFunctionZ::zero()),
            1 => self.terms.get(&Mono::ONE).cloned(),
            _ => None,
        }
    }

    fn insert_add(&mut self, m: Mono, f: RationalFunctionZ) {
        if f.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(f);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &f;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &RationalFunctionZ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(&m, f)| (m, f * c)).collect(),
        }
    }

    pub fn scale_gaussian(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(&m, f)| (m, f.scale(c))).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale_gaussian(&GaussianRational::from_int(k))
    }

    pub fn mul_z_pow(&self, e: i32) -> Self {
        if e == 0 {
            return self.clone();
        }
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(&m, f)| (m, f.mul_z_pow(e)))
                .collect(),
        }
    }

    pub fn mul_mono(&self, mono: Mono) -> Self {
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(&m, f)| (m.mul(mono), f.clone()))
                .collect(),
        }
    }

    /// Division, defined only when the divisor is a nonzero function of `z`.
    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = rhs.as_ratfunc().ok_or(Error::UnsupportedDivision)?;
        Ok(self.scale(&d.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The ring endomorphism `z ↦ z^{-1}`, fixing `u`, `a`, `b`.
    pub fn invert_q(&self) -> Self {
        Scalar {
            terms: self.terms.iter().map(|(&m, f)| (m, f.invert_z())).collect(),
        }
    }

    /// Drops every term with `u`-exponent above `max_u`.
    pub fn truncate_u(&self, max_u: i32) -> Self {
        Scalar {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.u <= max_u)
                .map(|(&m, f)| (m, f.clone()))
                .collect(),
        }
    }

    /// Product with every term of `u`-exponent above `max_u` discarded.
    pub fn mul_truncated(&self, rhs: &Scalar, max_u: i32) -> Self {
        let mut out = Scalar::zero();
        for (&m1, f1) in &self.terms {
            for (&m2, f2) in &rhs.terms {
                let m = m1.mul(m2);
                if m.u <= max_u {
                    out.insert_add(m, f1 * f2);
                }
            }
        }
        out
    }

    pub fn min_u(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.u).min()
    }

    pub fn max_u(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.u).max()
    }

    /// Only `u` appears (no `a`, `b`).
    pub fn is_u_only(&self) -> bool {
        self.terms.keys().all(|m| m.a == 0 && m.b == 0)
    }

    /// Exact value at a point. Fails at poles of any coefficient and at
    /// `u0 = 0` when negative powers of `u` occur.
    pub fn eval_point(
        &self,
        z0: &GaussianRational,
        a0: &GaussianRational,
        b0: &GaussianRational,
        u0: &GaussianRational,
    ) -> Result<GaussianRational, Error> {
        let mut acc = GaussianRational::zero();
        for (m, f) in &self.terms {
            let v = f.eval(z0)?;
            let pu = u0.powi(m.u as i64).ok_or(Error::Pole)?;
            let pa = a0.pow(m.a);
            let pb = b0.pow(m.b);
            acc += &(&(&v * &pu) * &(&pa * &pb));
        }
        Ok(acc)
    }

    /// Canonical text rendering; see [`render`](self::render).
    pub fn render(&self) -> String {
        render::render_scalar(self)
    }
}

/// `[n] = z^n − z^{−n}`; `n = 0` is rejected.
pub fn quantum_int(n: i32) -> Result<Scalar, Error> {
    Ok(Scalar::from_ratfunc(RationalFunctionZ::quantum_int(n)?))
}

/// `1/[n]`
pub fn inv_quantum_int(n: i32) -> Result<Scalar, Error> {
    Ok(Scalar::from_ratfunc(RationalFunctionZ::inv_quantum_int(n)?))
}

/// `[n]_{e^t} = e^{t/2} q^{n/2} − e^{−t/2} q^{−n/2} = u^{−1} z^n − u z^{−n}`.
///
/// The `e^{±t/2}` prefactor does not scale with `n`, so `[0]_{e^t} = u^{-1} − u`
/// is nonzero.
pub fn quantum_int_t(n: i32) -> Scalar {
    let mut s = Scalar::term(Mono::u(-1), RationalFunctionZ::z_pow(n));
    s.insert_add(Mono::u(1), -&RationalFunctionZ::z_pow(-n));
    s
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (&m, f) in &rhs.terms {
            out.insert_add(m, f.clone());
        }
        out
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (&m, f) in &rhs.terms {
            self.insert_add(m, f.clone());
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (&m, f) in &rhs.terms {
            out.insert_add(m, -f);
        }
        out
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(&m, f)| (m, -f)).collect(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (&m1, f1) in &self.terms {
            for (&m2, f2) in &rhs.terms {
                out.insert_add(m1.mul(m2), f1 * f2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for RationalFunctionZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&Scalar::from_ratfunc(self.clone()).render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn quantum_ints() {
        let two_over_one = quantum_int(2)
            .unwrap()
            .checked_div(&quantum_int(1).unwrap())
            .unwrap();
        assert_eq!(two_over_one, &Scalar::z_pow(1) + &Scalar::z_pow(-1));
        assert_eq!(quantum_int(-4).unwrap(), -quantum_int(4).unwrap());
        assert!(matches!(quantum_int(0), Err(Error::ZeroQuantumInteger)));
        assert_eq!(
            quantum_int(1).unwrap(),
            &Scalar::z_pow(1) - &Scalar::z_pow(-1)
        );
    }

    #[test]
    fn quantum_ints_t() {
        assert_eq!(quantum_int_t(0), &Scalar::u_pow(-1) - &Scalar::u_pow(1));
        let one =
            &(&Scalar::u_pow(-1) * &Scalar::z_pow(1)) - &(&Scalar::u_pow(1) * &Scalar::z_pow(-1));
        assert_eq!(quantum_int_t(1), one);
        // at u = 1 the deformation collapses to [n]
        for n in 1..5 {
            let z0 = GaussianRational::ratio(5, 3);
            let lhs = quantum_int_t(n)
                .eval_point(&z0, &g(0), &g(0), &g(1))
                .unwrap();
            let rhs = quantum_int(n)
                .unwrap()
                .eval_point(&z0, &g(0), &g(0), &g(1))
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn ring_examples() {
        let x = &(&Scalar::a() * &Scalar::u_pow(3)) + &inv_quantum_int(2).unwrap();
        assert!((&x + &(-&x)).is_zero());

        // (1 - u^2)/[1]: one entry at u^0 and one at u^2
        let f = &(&Scalar::one() - &Scalar::u_pow(2)) * &inv_quantum_int(1).unwrap();
        assert_eq!(f.terms().len(), 2);
        assert_eq!(
            f.coeff(Mono::u(0)),
            RationalFunctionZ::inv_quantum_int(1).unwrap()
        );
        assert_eq!(
            f.coeff(Mono::u(2)),
            -&RationalFunctionZ::inv_quantum_int(1).unwrap()
        );
        let v = f.eval_point(&g(2), &g(0), &g(0), &g(3)).unwrap();
        assert_eq!(v, GaussianRational::ratio(-16, 3));
    }

    #[test]
    fn division_rules() {
        let x = Scalar::u_pow(1);
        assert!(matches!(
            Scalar::one().checked_div(&x),
            Err(Error::UnsupportedDivision)
        ));
        assert!(matches!(
            Scalar::one().checked_div(&Scalar::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn invert_q_examples() {
        let three = quantum_int(3).unwrap();
        assert_eq!(three.invert_q(), -&three);
        let w = &inv_quantum_int(1).unwrap() * &inv_quantum_int(1).unwrap();
        assert_eq!(w.invert_q(), w);
        let x = &(&Scalar::a() * &inv_quantum_int(2).unwrap()) + &Scalar::z_pow(5);
        assert_eq!(x.invert_q().invert_q(), x);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(
            quantum_int(2)
                .unwrap()
                .eval_point(&g(2), &g(0), &g(0), &g(1))
                .unwrap(),
            GaussianRational::ratio(15, 4)
        );
        // a = b kills a^n - b^n
        let an_bn = &Scalar::a().pow(3) - &Scalar::b().pow(3);
        assert!(an_bn
            .eval_point(&g(2), &g(7), &g(7), &g(1))
            .unwrap()
            .is_zero());
        assert!(matches!(
            inv_quantum_int(1)
                .unwrap()
                .eval_point(&g(1), &g(0), &g(0), &g(1)),
            Err(Error::Pole)
        ));
    }

    #[test]
    fn q_integer_addition_law() {
        // [m+n] = z^m [n] + z^{-n} [m]
        for m in -10..=10i32 {
            for n in -10..=10i32 {
                if m == 0 || n == 0 || m + n == 0 {
                    continue;
                }
                let lhs = quantum_int(m + n).unwrap();
                let rhs =
                    &quantum_int(n).unwrap().mul_z_pow(m) + &quantum_int(m).unwrap().mul_z_pow(-n);
                assert_eq!(lhs, rhs, "m={m} n={n}");
            }
        }
    }
}
