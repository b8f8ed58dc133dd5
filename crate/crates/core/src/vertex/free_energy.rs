//! Logarithms of amplitudes and their expansion in the string coupling `λ`,
//! where `q = e^{iλ}` and so `z = e^{iλ/2}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Amplitude;
use crate::error::Error;
use crate::partitions::Partition;
use crate::scalars::{inv_quantum_int, GaussianRational, LaurentPoly, RationalFunctionZ, Scalar};
use crate::symfun::{Basis, SymFunc};

fn check_constant(f: &SymFunc, expected: &Scalar, what: &str) -> Result<(), Error> {
    let c = f.coeff(&Partition::empty());
    if &c != expected {
        return Err(Error::Normalization(format!(
            "{what}: constant coefficient is {}",
            c.render()
        )));
    }
    Ok(())
}

/// `log f = Σ_{m≥1} (−1)^{m−1} (f − 1)^m / m`, truncated at the degree bound
/// and at `u`-order `max_u`. Requires the constant coefficient to be 1.
pub fn log_series(f: &SymFunc, max_u: i32) -> Result<SymFunc, Error> {
    let f = f.to_basis(Basis::P);
    check_constant(&f, &Scalar::one(), "log")?;
    let x = f.sub(&SymFunc::one(f.bound())?)?;
    let mut acc = SymFunc::zero(Basis::P, f.bound())?;
    let mut power = SymFunc::one(f.bound())?;
    for m in 1..=f.bound() {
        power = power.mul_truncated(&x, Some(max_u))?;
        if power.is_zero() {
            break;
        }
        let sign = if m % 2 == 1 { 1 } else { -1 };
        let c = Scalar::from_gaussian(GaussianRational::ratio(sign, m as i64));
        acc = acc.add(&power.scale(&c))?;
    }
    Ok(acc)
}

/// `exp f = Σ_{m≥0} f^m / m!`, truncated like [`log_series`]. Requires the
/// constant coefficient to vanish.
pub fn exp_series(f: &SymFunc, max_u: i32) -> Result<SymFunc, Error> {
    let f = f.to_basis(Basis::P);
    check_constant(&f, &Scalar::zero(), "exp")?;
    let mut acc = SymFunc::one(f.bound())?;
    let mut term = SymFunc::one(f.bound())?;
    for m in 1..=f.bound() {
        term = term
            .mul_truncated(&f, Some(max_u))?
            .scale(&Scalar::from_gaussian(GaussianRational::ratio(1, m as i64)));
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// `log Ẑ` of a normalized amplitude, in the power-sum basis.
pub fn free_energy(ampl: &Amplitude) -> Result<SymFunc, Error> {
    log_series(ampl.value(), ampl.max_u())
}

/// Logarithm of a `u`-power series with constant term 1.
pub fn scalar_log(s: &Scalar, max_u: i32) -> Result<Scalar, Error> {
    let x = s - &Scalar::one();
    if x.terms().keys().any(|m| m.u <= 0) {
        return Err(Error::Normalization(format!(
            "log: {} is not 1 + O(u)",
            s.render()
        )));
    }
    let mut acc = Scalar::zero();
    let mut power = Scalar::one();
    for m in 1..=max_u.max(0) {
        power = power.mul_truncated(&x, max_u);
        if power.is_zero() {
            break;
        }
        let sign = if m % 2 == 1 { 1 } else { -1 };
        acc += &power.scale_gaussian(&GaussianRational::ratio(sign, m as i64));
    }
    Ok(acc)
}

/// `−Σ_{n=1}^{K} u^{2n} / (n [n]²)`: the vacuum-sector logarithm of the
/// closed conifold.
pub fn conifold_vacuum_log(q_order: u32) -> Scalar {
    let mut acc = Scalar::zero();
    for n in 1..=q_order as i32 {
        let inv = inv_quantum_int(n).expect("n >= 1");
        let term = (&(&inv * &inv) * &Scalar::u_pow(2 * n))
            .scale_gaussian(&GaussianRational::ratio(-1, n as i64));
        acc += &term;
    }
    acc
}

/// A truncated Laurent series in `λ`: coefficients of `λ^low, λ^{low+1}, …`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LambdaSeries {
    low: i32,
    coeffs: Vec<GaussianRational>,
}

impl LambdaSeries {
    /// Exponent of the first stored coefficient; the true valuation when the
    /// series is nonzero.
    pub fn low(&self) -> i32 {
        self.low
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i32) -> GaussianRational {
        usize::try_from(e - self.low)
            .ok()
            .and_then(|k| self.coeffs.get(k))
            .cloned()
            .unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &GaussianRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i32, c))
    }

    pub fn pole_order(&self) -> u32 {
        if self.coeffs.is_empty() {
            0
        } else {
            (-self.low).max(0) as u32
        }
    }
}

/// Taylor coefficients of `P(e^{iλ/2})` for `k < count`:
/// `Σ_e c_e (ie/2)^k / k!`.
fn exp_substitution(p: &LaurentPoly, count: usize) -> Vec<GaussianRational> {
    let mut out = vec![GaussianRational::zero(); count];
    for (e, c) in p.terms() {
        let half_e = BigRational::new(BigInt::from(e), BigInt::from(2));
        let mut factor = BigRational::one();
        for (k, slot) in out.iter_mut().enumerate() {
            if k > 0 {
                factor = factor * &half_e / BigInt::from(k);
            }
            let term = c * &GaussianRational::real(factor.clone());
            *slot += &(&term * &GaussianRational::i_pow(k as i64));
        }
    }
    out
}

/// Expansion of `r(e^{iλ/2})` from its leading power up to `λ^order`.
pub fn lambda_expand(r: &RationalFunctionZ, order: i32) -> Result<LambdaSeries, Error> {
    if r.is_zero() {
        return Ok(LambdaSeries {
            low: 0,
            coeffs: Vec::new(),
        });
    }
    let num = r.numerator();
    let den = r.denominator();
    if den.is_zero() {
        return Err(Error::LambdaExpansion("zero denominator".into()));
    }
    let vn = num.multiplicity_at_one();
    let vd = den.multiplicity_at_one();
    let low = vn as i32 - vd as i32;
    let count = usize::try_from(order - low + 1).unwrap_or(0);
    let a = exp_substitution(num, vn + count);
    let b = exp_substitution(&den, vd + count);
    let (a, b) = (&a[vn..], &b[vd..]);
    let b0_inv = b[0]
        .inv()
        .ok_or_else(|| Error::LambdaExpansion("denominator valuation mismatch".into()))?;
    let mut q: Vec<GaussianRational> = Vec::with_capacity(count);
    for k in 0..count {
        let mut acc = a[k].clone();
        for j in 0..k {
            acc -= &(&q[j] * &b[k - j]);
        }
        q.push(&acc * &b0_inv);
    }
    Ok(LambdaSeries { low, coeffs: q })
}

/// One free-energy coefficient of `λ^{lambda_power} e^{−kt} p_μ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeEnergyEntry {
    pub mu: Partition,
    pub k: u32,
    pub lambda_power: i32,
    /// `g` with `lambda_power = 2g − 2 + l(μ)`, or `None` when no such
    /// nonnegative integer exists.
    pub genus: Option<u32>,
    pub value: GaussianRational,
}

/// The `λ`-expanded coefficients of a free energy.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FreeEnergyTable {
    pub entries: Vec<FreeEnergyEntry>,
    /// pole order in `λ` per `(μ, k)`
    pub pole_orders: BTreeMap<(Partition, u32), u32>,
}

impl FreeEnergyTable {
    /// Expands every coefficient of `log_z` (nonempty `μ`) through genus
    /// `max_genus`.
    pub fn from_log(log_z: &SymFunc, max_genus: u32) -> Result<Self, Error> {
        let log_z = log_z.to_basis(Basis::P);
        let mut table = FreeEnergyTable::default();
        for (mu, c) in log_z.coeffs() {
            if mu.is_empty() {
                continue;
            }
            let l = mu.len() as i32;
            for (m, r) in c.terms() {
                if m.a != 0 || m.b != 0 || m.u < 0 || m.u % 2 != 0 {
                    return Err(Error::LambdaExpansion(format!(
                        "unexpected monomial u^{} a^{} b^{} at {mu}",
                        m.u, m.a, m.b
                    )));
                }
                let k = (m.u / 2) as u32;
                let series = lambda_expand(r, 2 * max_genus as i32 - 2 + l)?;
                table
                    .pole_orders
                    .insert((mu.clone(), k), series.pole_order());
                for (e, v) in series.terms() {
                    let shifted = e + 2 - l;
                    let genus = (shifted >= 0 && shifted % 2 == 0).then_some((shifted / 2) as u32);
                    table.entries.push(FreeEnergyEntry {
                        mu: mu.clone(),
                        k,
                        lambda_power: e,
                        genus,
                        value: v.clone(),
                    });
                }
            }
        }
        Ok(table)
    }

    pub fn max_pole_order(&self) -> u32 {
        self.pole_orders.values().copied().max().unwrap_or(0)
    }

    /// Entries whose `λ`-power does not fit the `2g − 2 + l(μ)` grading.
    pub fn parity_anomalies(&self) -> impl Iterator<Item = &FreeEnergyEntry> {
        self.entries.iter().filter(|e| e.genus.is_none())
    }

    /// `F_{g;k;μ}`, zero when absent.
    pub fn get(&self, g: u32, k: u32, mu: &Partition) -> GaussianRational {
        self.entries
            .iter()
            .find(|e| e.genus == Some(g) && e.k == k && &e.mu == mu)
            .map(|e| e.value.clone())
            .unwrap_or_default()
    }

    /// Whether every `F_{g;k;μ}` is real.
    pub fn values_real(&self) -> bool {
        self.entries.iter().all(|e| e.value.is_real())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex::{amplitude_a, normalize, operator_amplitude, Diagram};

    fn gq(n: i64, d: i64) -> GaussianRational {
        GaussianRational::ratio(n, d)
    }

    #[test]
    fn lambda_leading_terms() {
        let inv1 = RationalFunctionZ::inv_quantum_int(1).unwrap();
        let s = lambda_expand(&inv1, 1).unwrap();
        assert_eq!(s.low(), -1);
        assert_eq!(s.coeff(-1), -GaussianRational::i());
        assert_eq!(s.coeff(0), GaussianRational::zero());
        // 1/(2i sin(λ/2)) = −i/λ − iλ/24 + …
        assert_eq!(s.coeff(1), &GaussianRational::i() * &gq(-1, 24));
        assert_eq!(s.pole_order(), 1);

        let c = RationalFunctionZ::constant(gq(3, 7));
        let s = lambda_expand(&c, 2).unwrap();
        assert_eq!(s.coeff(0), gq(3, 7));
        assert_eq!(s.coeff(2), GaussianRational::zero());

        let ratio = RationalFunctionZ::quantum_int(2)
            .unwrap()
            .checked_div(&RationalFunctionZ::quantum_int(1).unwrap())
            .unwrap();
        let s = lambda_expand(&ratio, 2).unwrap();
        assert_eq!(s.low(), 0);
        assert_eq!(s.coeff(0), gq(2, 1));
        // 2 cos(λ/2) = 2 − λ²/4 + …
        assert_eq!(s.coeff(2), gq(-1, 4));
        assert!(lambda_expand(&RationalFunctionZ::zero(), 2)
            .unwrap()
            .coeffs()
            .is_empty());
    }

    #[test]
    fn vacuum_log() {
        let inv1 = inv_quantum_int(1).unwrap();
        let s = &Scalar::one() - &(&Scalar::u_pow(2) * &(&inv1 * &inv1));
        let l = scalar_log(&s, 2).unwrap();
        assert_eq!(l, -&(&Scalar::u_pow(2) * &(&inv1 * &inv1)));
        assert!(scalar_log(&Scalar::one(), 4).unwrap().is_zero());
        assert!(scalar_log(&Scalar::from_int(2), 4).is_err());
    }

    #[test]
    fn conifold_vacuum_sector() {
        let z = amplitude_a(0, 1, 3).unwrap();
        let l = scalar_log(&z.vacuum_part(), 6).unwrap();
        assert_eq!(l, conifold_vacuum_log(3));
    }

    #[test]
    fn log_exp_roundtrip() {
        let z = normalize(&amplitude_a(1, 3, 2).unwrap()).unwrap();
        let f = free_energy(&z).unwrap();
        assert!(f.coeff(&Partition::empty()).is_zero());
        assert_eq!(&exp_series(&f, 4).unwrap(), z.value());
        assert!(log_series(&SymFunc::one(3).unwrap(), 4).unwrap().is_zero());
    }

    #[test]
    fn free_energy_table_shape() {
        let z = operator_amplitude(0, Diagram::A, 3, 2).unwrap();
        let table = FreeEnergyTable::from_log(&free_energy(&z).unwrap(), 1).unwrap();
        assert!(table.max_pole_order() <= 2);
        assert_eq!(table.parity_anomalies().count(), 0);
        let mu = Partition::new(vec![1]).unwrap();
        // (1 − u²)/[1] · (1/i): genus-0 coefficient of λ^{-1} p_1 at k = 0
        assert_eq!(table.get(0, 0, &mu), gq(-1, 1));
    }
}
