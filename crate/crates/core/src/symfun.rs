//! Degree-truncated symmetric functions with [`Scalar`] coefficients.
//!
//! Values are stored in either the power-sum basis `p_μ` or the Schur basis
//! `s_ν`; the power-sum basis is the working basis (products are multiset
//! unions there) and Schur coefficients are a view through the character
//! tables:
//!
//! `p_μ = Σ_ν χ_ν(μ) s_ν`,   `s_ν = Σ_μ χ_ν(μ)/z_μ · p_μ`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::characters::{shared_table, DEFAULT_MAX_N};
use crate::error::Error;
use crate::partitions::{enumerate, Partition};
use crate::scalars::{
    inv_quantum_int, quantum_int_t, GaussianRational, Mono, RationalFunctionZ, Scalar,
};

/// Largest truncation degree a [`SymFunc`] may carry; bounded by the
/// character tables.
pub const MAX_DEGREE: u32 = DEFAULT_MAX_N;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Basis {
    /// power sums `p_μ`
    P,
    /// Schur functions `s_ν`
    S,
}

/// An element of `Λ` truncated to degree `≤ bound`. Equality is equality of
/// elements, whichever basis each side is stored in.
#[derive(Clone, Debug)]
pub struct SymFunc {
    basis: Basis,
    bound: u32,
    coeffs: BTreeMap<Partition, Scalar>,
}

impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.bound != other.bound {
            return false;
        }
        if self.basis == other.basis {
            return self.coeffs == other.coeffs;
        }
        self.coeffs == other.to_basis(self.basis).coeffs
    }
}

impl Eq for SymFunc {}

fn check_bound(bound: u32) -> Result<(), Error> {
    if bound > MAX_DEGREE {
        return Err(Error::ResourceLimit {
            n: bound,
            max: MAX_DEGREE,
        });
    }
    Ok(())
}

fn rational_scalar(num: &BigInt, den: &BigInt) -> GaussianRational {
    GaussianRational::real(BigRational::new(num.clone(), den.clone()))
}

impl SymFunc {
    pub fn zero(basis: Basis, bound: u32) -> Result<Self, Error> {
        check_bound(bound)?;
        Ok(SymFunc {
            basis,
            bound,
            coeffs: BTreeMap::new(),
        })
    }

    /// The constant 1, which is also the vacuum `|0⟩`.
    pub fn one(bound: u32) -> Result<Self, Error> {
        Self::from_terms(Basis::P, bound, [(Partition::empty(), Scalar::one())])
    }

    pub fn from_terms(
        basis: Basis,
        bound: u32,
        terms: impl IntoIterator<Item = (Partition, Scalar)>,
    ) -> Result<Self, Error> {
        let mut f = Self::zero(basis, bound)?;
        for (mu, c) in terms {
            if mu.size() > bound {
                return Err(Error::DegreeExceeded {
                    degree: mu.size(),
                    bound,
                });
            }
            f.add_term(mu, &c);
        }
        Ok(f)
    }

    pub fn p_monomial(mu: &Partition, bound: u32) -> Result<Self, Error> {
        Self::from_terms(Basis::P, bound, [(mu.clone(), Scalar::one())])
    }

    pub fn s_basis_elem(mu: &Partition, bound: u32) -> Result<Self, Error> {
        Self::from_terms(Basis::S, bound, [(mu.clone(), Scalar::one())])
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Scalar> {
        &self.coeffs
    }

    pub fn coeff(&self, mu: &Partition) -> Scalar {
        self.coeffs.get(mu).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c` to the coefficient of `mu` in the current basis, silently
    /// dropping terms above the bound.
    pub fn add_term(&mut self, mu: Partition, c: &Scalar) {
        if c.is_zero() || mu.size() > self.bound {
            return;
        }
        match self.coeffs.entry(mu) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Same element with a different truncation degree (terms above a lower
    /// bound are dropped).
    pub fn with_bound(&self, bound: u32) -> Result<Self, Error> {
        check_bound(bound)?;
        Ok(SymFunc {
            basis: self.basis,
            bound,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(mu, _)| mu.size() <= bound)
                .map(|(mu, c)| (mu.clone(), c.clone()))
                .collect(),
        })
    }

    /// Homogeneous component of degree `d`.
    pub fn degree_part(&self, d: u32) -> SymFunc {
        SymFunc {
            basis: self.basis,
            bound: self.bound,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(mu, _)| mu.size() == d)
                .map(|(mu, c)| (mu.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&Partition, &Scalar) -> Scalar) -> SymFunc {
        let mut out = SymFunc {
            basis: self.basis,
            bound: self.bound,
            coeffs: BTreeMap::new(),
        };
        for (mu, c) in &self.coeffs {
            out.add_term(mu.clone(), &f(mu, c));
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> SymFunc {
        self.map_coeffs(|_, x| x * c)
    }

    /// Drops every coefficient term with `u`-exponent above `max_u`.
    pub fn truncate_u(&self, max_u: i32) -> SymFunc {
        self.map_coeffs(|_, x| x.truncate_u(max_u))
    }

    pub fn to_basis(&self, target: Basis) -> SymFunc {
        if self.basis == target {
            return self.clone();
        }
        let mut out = SymFunc {
            basis: target,
            bound: self.bound,
            coeffs: BTreeMap::new(),
        };
        for (lam, c) in &self.coeffs {
            let table = shared_table(lam.size()).expect("bound checked at construction");
            for other in table.partitions() {
                let scaled = match self.basis {
                    // p_λ = Σ_ν χ_ν(λ) s_ν
                    Basis::P => {
                        let chi = table.get(other, lam);
                        if chi == &BigInt::from(0) {
                            continue;
                        }
                        c.scale_gaussian(&GaussianRational::from_bigint(chi.clone()))
                    }
                    // s_λ = Σ_μ χ_λ(μ)/z_μ p_μ
                    Basis::S => {
                        let chi = table.get(lam, other);
                        if chi == &BigInt::from(0) {
                            continue;
                        }
                        c.scale_gaussian(&rational_scalar(chi, &other.z()))
                    }
                };
                out.add_term(other.clone(), &scaled);
            }
        }
        out
    }

    fn same_bound(&self, other: &SymFunc) -> Result<(), Error> {
        if self.bound != other.bound {
            return Err(Error::BoundMismatch {
                expected: self.bound,
                got: other.bound,
            });
        }
        Ok(())
    }

    /// Sum, in `self`'s basis.
    pub fn add(&self, other: &SymFunc) -> Result<SymFunc, Error> {
        self.same_bound(other)?;
        let mut out = self.clone();
        for (mu, c) in &other.to_basis(self.basis).coeffs {
            out.add_term(mu.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc, Error> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    /// Truncated product, returned in the power-sum basis.
    pub fn mul(&self, other: &SymFunc) -> Result<SymFunc, Error> {
        self.mul_truncated(other, None)
    }

    /// Truncated product that also drops coefficient terms with `u`-exponent
    /// above `max_u`.
    pub fn mul_truncated(&self, other: &SymFunc, max_u: Option<i32>) -> Result<SymFunc, Error> {
        self.same_bound(other)?;
        let (a, b) = (self.to_basis(Basis::P), other.to_basis(Basis::P));
        let mut out = SymFunc::zero(Basis::P, self.bound)?;
        for (mu, x) in &a.coeffs {
            for (nu, y) in &b.coeffs {
                if mu.size() + nu.size() > self.bound {
                    continue;
                }
                let c = match max_u {
                    Some(m) => x.mul_truncated(y, m),
                    None => x * y,
                };
                out.add_term(mu.union(nu), &c);
            }
        }
        Ok(out)
    }

    /// The Hall inner product: `⟨p_μ, p_ν⟩ = δ_{μν} z_μ`.
    pub fn inner(&self, other: &SymFunc) -> Scalar {
        let (a, b) = (self.to_basis(Basis::P), other.to_basis(Basis::P));
        let mut acc = Scalar::zero();
        for (mu, x) in &a.coeffs {
            if let Some(y) = b.coeffs.get(mu) {
                acc += &(x * y).scale_gaussian(&GaussianRational::from_bigint(mu.z()));
            }
        }
        acc
    }

    /// The involution `ω(p_n) = (−1)^{n−1} p_n`, computed in the power-sum
    /// basis and returned in `self`'s basis.
    pub fn omega(&self) -> SymFunc {
        self.to_basis(Basis::P)
            .map_coeffs(|mu, c| {
                if (mu.size() as usize - mu.len()).is_multiple_of(2) {
                    c.clone()
                } else {
                    -c
                }
            })
            .to_basis(self.basis)
    }

    /// Ring homomorphism `p_n ↦ rule(n)`.
    pub fn specialize(&self, rule: &SpecRule) -> Result<Scalar, Error> {
        let p = self.to_basis(Basis::P);
        let mut acc = Scalar::zero();
        for (mu, c) in &p.coeffs {
            acc += &(c * &rule.eval_monomial(mu)?);
        }
        Ok(acc)
    }

    /// Text form such as `1/3*p[1,1,1] - 1/3*p[3]`, or with coefficient
    /// scalars in parentheses when they are not plain numbers.
    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let tag = match self.basis {
            Basis::P => 'p',
            Basis::S => 's',
        };
        let mut out = String::new();
        for (k, (mu, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            let cs = c.render();
            if cs != "1" {
                if cs.contains(' ') {
                    out.push_str(&format!("({cs})*"));
                } else {
                    out.push_str(&format!("{cs}*"));
                }
            }
            out.push_str(&format!("{tag}{mu}"));
        }
        out
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Values assigned to `p_1, …, p_D` by a specialization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpecRule {
    values: Vec<Scalar>,
}

impl SpecRule {
    pub fn from_fn(bound: u32, mut f: impl FnMut(u32) -> Scalar) -> Self {
        SpecRule {
            values: (1..=bound).map(&mut f).collect(),
        }
    }

    pub fn from_values(values: Vec<Scalar>) -> Self {
        SpecRule { values }
    }

    /// Largest `n` with a value.
    pub fn bound(&self) -> u32 {
        self.values.len() as u32
    }

    pub fn get(&self, n: u32) -> Option<&Scalar> {
        n.checked_sub(1).and_then(|k| self.values.get(k as usize))
    }

    fn value(&self, n: u32) -> Result<&Scalar, Error> {
        self.get(n).ok_or(Error::DegreeExceeded {
            degree: n,
            bound: self.bound(),
        })
    }

    /// `Π_i rule(μ_i)`
    pub fn eval_monomial(&self, mu: &Partition) -> Result<Scalar, Error> {
        let mut acc = Scalar::one();
        for &p in mu.parts() {
            acc = &acc * self.value(p)?;
        }
        Ok(acc)
    }

    /// `n ↦ (−1)^{n−1} rule(n)`, the rule composed with `ω`.
    pub fn sign_twisted(&self) -> SpecRule {
        SpecRule {
            values: self
                .values
                .iter()
                .enumerate()
                .map(|(k, v)| if k % 2 == 0 { v.clone() } else { -v })
                .collect(),
        }
    }
}

/// `p_n(q^ρ) = 1/[n]`
pub fn principal_rule(bound: u32) -> SpecRule {
    SpecRule::from_fn(bound, |n| inv_quantum_int(n as i32).expect("n >= 1"))
}

/// `p_n = (1 − e^{−nt})/[n] = (1 − u^{2n})/[n]`
pub fn exp_t_rule(bound: u32) -> SpecRule {
    SpecRule::from_fn(bound, |n| {
        let one_minus = &Scalar::one() - &Scalar::u_pow(2 * n as i32);
        &one_minus * &inv_quantum_int(n as i32).expect("n >= 1")
    })
}

/// `p_n = (a^n − b^n)/(1 − q^n)` with `q^n = z^{2n}`.
pub fn two_param_rule(bound: u32) -> SpecRule {
    SpecRule::from_fn(bound, |n| {
        let diff = &Scalar::a().pow(n) - &Scalar::b().pow(n);
        diff.scale(&RationalFunctionZ::inv_one_minus_z_pow(2 * n))
    })
}

/// `s_μ(q^ρ) = q^{κ_μ/4} / Π_{x∈μ} [h(x)]`
pub fn schur_principal_closed(mu: &Partition) -> Scalar {
    let mut acc = Scalar::z_pow((mu.kappa() / 2) as i32);
    for h in mu.hooks() {
        acc = &acc * &inv_quantum_int(h as i32).expect("hooks are positive");
    }
    acc
}

/// `e^{−|μ|t/2} Π_{x∈μ} [c(x)]_{e^t} / [h(x)]`
pub fn schur_exp_t_closed(mu: &Partition) -> Scalar {
    let mut acc = Scalar::u_pow(mu.size() as i32);
    for (h, c) in mu.hooks().into_iter().zip(mu.contents()) {
        acc = &acc * &quantum_int_t(c as i32);
        acc = &acc * &inv_quantum_int(h as i32).expect("hooks are positive");
    }
    acc
}

/// `q^{n(μ)} Π_{x∈μ} (a − b q^{c(x)}) / (1 − q^{h(x)})`
pub fn schur_two_param_closed(mu: &Partition) -> Scalar {
    let mut acc = Scalar::z_pow(2 * mu.n() as i32);
    for (h, c) in mu.hooks().into_iter().zip(mu.contents()) {
        let factor = &Scalar::a() - &Scalar::b().mul_z_pow(2 * c as i32);
        acc = &acc * &factor.scale(&RationalFunctionZ::inv_one_minus_z_pow(2 * h));
    }
    acc
}

/// Double-alphabet coefficient matrix, indexed by
/// `(x-partition, y-partition)` in the basis `p_α(x) p_β(y)`.
pub type CauchyMatrix = BTreeMap<(Partition, Partition), GaussianRational>;

/// `Σ_{|μ|=d} s_μ(x) s_μ(y)`, expanding each Schur function in power sums.
pub fn cauchy_schur_side(d: u32) -> Result<CauchyMatrix, Error> {
    check_bound(d)?;
    let mut out = CauchyMatrix::new();
    for mu in enumerate(d) {
        let s = SymFunc::s_basis_elem(&mu, d)?.to_basis(Basis::P);
        for (alpha, x) in s.coeffs() {
            for (beta, y) in s.coeffs() {
                let x = x.coeff(Mono::ONE).as_constant().expect("rational");
                let y = y.coeff(Mono::ONE).as_constant().expect("rational");
                let entry = out.entry((alpha.clone(), beta.clone())).or_default();
                *entry += &(&x * &y);
            }
        }
    }
    out.retain(|_, v| !num_traits::Zero::is_zero(v));
    Ok(out)
}

/// `Σ_{|ν|=d} p_ν(x) p_ν(y) / z_ν`
pub fn cauchy_power_side(d: u32) -> CauchyMatrix {
    enumerate(d)
        .into_iter()
        .map(|nu| {
            let v = rational_scalar(&BigInt::from(1), &nu.z());
            ((nu.clone(), nu), v)
        })
        .collect()
}
