//! One-outer-brane amplitudes of the resolved conifold.
//!
//! Two-leg vertex values are realized as `W_{μν}(q) = s_μ(q^ρ) s_ν(q^{μ+ρ})`
//! and the Kähler weight is folded into the scalar ring as `Q = −u²`.
//! Amplitudes are symmetric functions in a formal alphabet `x`, truncated at
//! `x`-degree `D` and at `u`-order `2K`.

mod free_energy;

pub use free_energy::{
    conifold_vacuum_log, exp_series, free_energy, lambda_expand, log_series, scalar_log,
    FreeEnergyEntry, FreeEnergyTable, LambdaSeries,
};

use rayon::prelude::*;

use crate::error::Error;
use crate::operators::{apply_qk, creator_exp, pair_with_source};
use crate::partitions::{enumerate, enumerate_up_to, Partition};
use crate::scalars::{inv_quantum_int, quantum_int_t, GaussianRational, Mono, Scalar};
use crate::symfun::{exp_t_rule, principal_rule, schur_principal_closed, Basis, SpecRule, SymFunc};

/// The two brane placements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Diagram {
    A,
    B,
}

/// How the second amplitude is assembled from vertex data.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ZbForm {
    /// with `W_{μ^t ν^t}(q)` and `W_ν(q)`
    Direct,
    /// with `W_{μν}(q^{-1})` and `W_ν(q^{-1})` after the transpose identities
    Rewritten,
}

/// `dim_q R_μ = Π_{x∈μ} [c(x)]_{e^t} / [h(x)]`
pub fn qdim(mu: &Partition) -> Scalar {
    let mut acc = Scalar::one();
    for (h, c) in mu.hooks().into_iter().zip(mu.contents()) {
        acc = &acc * &quantum_int_t(c as i32);
        acc = &acc * &inv_quantum_int(h as i32).expect("hooks are positive");
    }
    acc
}

/// `W_ν(q) = s_ν(q^ρ)`
pub fn w_one(nu: &Partition) -> Scalar {
    schur_principal_closed(nu)
}

/// `p_n(q^{μ+ρ}) = 1/[n] + Σ_i (z^{n(2μ_i − 2i + 1)} − z^{n(1 − 2i)})`
pub fn p_shifted(n: u32, mu: &Partition) -> Result<Scalar, Error> {
    let n = n as i32;
    let mut acc = inv_quantum_int(n)?;
    for (k, &part) in mu.parts().iter().enumerate() {
        let i = k as i32 + 1;
        acc = &acc + &Scalar::z_pow(n * (2 * part as i32 - 2 * i + 1));
        acc = &acc - &Scalar::z_pow(n * (1 - 2 * i));
    }
    Ok(acc)
}

/// The specialization `p_n ↦ p_n(q^{μ+ρ})` up to degree `bound`.
pub fn shifted_rule(mu: &Partition, bound: u32) -> SpecRule {
    SpecRule::from_fn(bound, |n| p_shifted(n, mu).expect("n >= 1"))
}

/// `W_{μν}(q) = s_μ(q^ρ) · s_ν(q^{μ+ρ})`
pub fn w_two(mu: &Partition, nu: &Partition) -> Result<Scalar, Error> {
    let s_nu = SymFunc::s_basis_elem(nu, nu.size())?;
    let shifted = s_nu.specialize(&shifted_rule(mu, nu.size()))?;
    Ok(&w_one(mu) * &shifted)
}

fn q_power(k: u32) -> Scalar {
    // Q^k = (−u²)^k
    Scalar::u_pow(2 * k as i32).scale_int(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// A truncated amplitude: `value` is in the power-sum basis of `x` and its
/// coefficients carry only even, nonnegative powers of `u` up to `2K`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Amplitude {
    value: SymFunc,
    q_order: u32,
}

impl Amplitude {
    pub fn new(value: SymFunc, q_order: u32) -> Self {
        let value = value.to_basis(Basis::P).truncate_u(2 * q_order as i32);
        Amplitude { value, q_order }
    }

    pub fn value(&self) -> &SymFunc {
        &self.value
    }

    pub fn degree(&self) -> u32 {
        self.value.bound()
    }

    pub fn q_order(&self) -> u32 {
        self.q_order
    }

    /// `Z|_{p=0}`
    pub fn vacuum_part(&self) -> Scalar {
        self.value.coeff(&Partition::empty())
    }

    /// Coefficients in the Schur basis of `x`.
    pub fn schur_coeffs(&self) -> SymFunc {
        self.value.to_basis(Basis::S)
    }

    fn max_u(&self) -> i32 {
        2 * self.q_order as i32
    }
}

/// Twist `p_n(x) ↦ p_n(x)/i`.
fn inverse_i_twist(bound: u32) -> SpecRule {
    let inv_i = GaussianRational::i().inv().expect("i is a unit");
    SpecRule::from_fn(bound, |_| Scalar::from_gaussian(inv_i.clone()))
}

/// `Σ_μ c_μ Σ_η χ_μ(η)/(z_η i^{l(η)}) p_η(x)` from the Schur weights `c_μ`.
fn assemble(
    degree: u32,
    q_order: u32,
    weight: impl Fn(&Partition) -> Result<Scalar, Error> + Send + Sync,
) -> Result<Amplitude, Error> {
    let mus = enumerate_up_to(degree);
    let weights: Vec<Scalar> = mus.par_iter().map(weight).collect::<Result<_, _>>()?;
    let schur = SymFunc::from_terms(Basis::S, degree, mus.into_iter().zip(weights))?;
    let twisted = pair_with_source(&schur, &inverse_i_twist(degree))?;
    Ok(Amplitude::new(twisted, q_order))
}

/// The vertex sum for the first diagram:
/// `Σ_{μ,ν} z^{aκ_μ} W_{μν} z^{−κ_ν} Q^{|ν|} W_ν · s_μ(x/i)`.
pub fn amplitude_a(a: i32, degree: u32, q_order: u32) -> Result<Amplitude, Error> {
    let nus = enumerate_up_to(q_order);
    let max_u = 2 * q_order as i32;
    assemble(degree, q_order, |mu| {
        let mut inner = Scalar::zero();
        for nu in &nus {
            let term = &(&w_two(mu, nu)? * &w_one(nu)) * &q_power(nu.size());
            inner += &term.mul_z_pow(-(nu.kappa() as i32)).truncate_u(max_u);
        }
        Ok(inner.mul_z_pow(a * mu.kappa() as i32))
    })
}

/// The vertex sum for the second diagram, in either of its two forms.
pub fn amplitude_b(a: i32, degree: u32, q_order: u32, form: ZbForm) -> Result<Amplitude, Error> {
    let nus = enumerate_up_to(q_order);
    let max_u = 2 * q_order as i32;
    assemble(degree, q_order, |mu| {
        let mut inner = Scalar::zero();
        for nu in &nus {
            let term = match form {
                ZbForm::Direct => &w_two(&mu.conjugate(), &nu.conjugate())? * &w_one(nu),
                ZbForm::Rewritten => {
                    let w = &w_two(mu, nu)?.invert_q() * &w_one(nu).invert_q();
                    let sign = if mu.size() % 2 == 0 { 1 } else { -1 };
                    w.mul_z_pow(nu.kappa() as i32).scale_int(sign)
                }
            };
            inner += &(&term * &q_power(nu.size())).truncate_u(max_u);
        }
        Ok(inner.mul_z_pow((a + 1) * mu.kappa() as i32))
    })
}

/// Inverse of a `u`-power series with constant term 1, to order `max_u`.
pub fn series_inverse(s: &Scalar, max_u: i32) -> Result<Scalar, Error> {
    if s.min_u().is_some_and(|m| m < 0) {
        return Err(Error::Normalization(format!(
            "negative power of u in {}",
            s.render()
        )));
    }
    let constant = s.coeff(Mono::ONE);
    let rest_constant = s.terms().keys().any(|m| m.u == 0 && *m != Mono::ONE);
    if !constant.is_one() || rest_constant {
        return Err(Error::Normalization(format!(
            "constant term of {} is not 1",
            s.render()
        )));
    }
    let t = &Scalar::one() - s;
    let mut acc = Scalar::one();
    let mut power = Scalar::one();
    for _ in 0..max_u {
        power = power.mul_truncated(&t, max_u);
        if power.is_zero() {
            break;
        }
        acc += &power;
    }
    Ok(acc)
}

/// `Ẑ = Z / Z|_{p=0}` with the division done by `u`-adic inversion.
pub fn normalize(ampl: &Amplitude) -> Result<Amplitude, Error> {
    let inv = series_inverse(&ampl.vacuum_part(), ampl.max_u())?;
    let value = ampl
        .value
        .map_coeffs(|_, c| c.mul_truncated(&inv, ampl.max_u()));
    Ok(Amplitude {
        value,
        q_order: ampl.q_order,
    })
}

/// Creator coefficients `γ(n)` of the operator form:
/// `(−1)^{n−1}(1 − u^{2n})/[n]` for the first diagram and `(1 − u^{2n})/[n]`
/// for the second.
pub fn creator_rule(diagram: Diagram, bound: u32) -> SpecRule {
    match diagram {
        Diagram::A => exp_t_rule(bound).sign_twisted(),
        Diagram::B => exp_t_rule(bound),
    }
}

fn framing_shift(a: i32, diagram: Diagram) -> i32 {
    match diagram {
        Diagram::A => a + 1,
        Diagram::B => a,
    }
}

/// `q^{cK} exp(Σ γ(n) β_{−n}/n)|0⟩` with the framing shift of the diagram,
/// before pairing with the source.
pub fn operator_state(a: i32, diagram: Diagram, degree: u32) -> Result<SymFunc, Error> {
    let state = creator_exp(&creator_rule(diagram, degree), degree)?;
    Ok(apply_qk(framing_shift(a, diagram), &state))
}

/// `⟨exp(Σ p_n(x) β_n/(ni)) q^{cK} exp(Σ γ(n) β_{−n}/n)⟩` truncated at
/// `(D, K)`.
pub fn operator_amplitude(
    a: i32,
    diagram: Diagram,
    degree: u32,
    q_order: u32,
) -> Result<Amplitude, Error> {
    let state = operator_state(a, diagram, degree)?.truncate_u(2 * q_order as i32);
    let value = pair_with_source(&state, &inverse_i_twist(degree))?;
    Ok(Amplitude::new(value, q_order))
}

/// The closed form `Σ_μ s_μ(x) z^{cκ_μ} u^{|μ|} dim_q R_{μ'}` with `μ' = μ^t`
/// for the first diagram and `μ' = μ` for the second. The `u^{|μ|}` factor
/// cancels the `e^{t/2}` per box carried by the quantum dimensions.
pub fn mv_rhs(a: i32, diagram: Diagram, degree: u32) -> Result<SymFunc, Error> {
    let c = framing_shift(a, diagram);
    let terms = enumerate_up_to(degree).into_iter().map(|mu| {
        let dim = match diagram {
            Diagram::A => qdim(&mu.conjugate()),
            Diagram::B => qdim(&mu),
        };
        let coef = (&dim * &Scalar::u_pow(mu.size() as i32)).mul_z_pow(c * mu.kappa() as i32);
        (mu, coef)
    });
    SymFunc::from_terms(Basis::S, degree, terms)
}

/// First Schur coefficient (in canonical order) where two truncated
/// symmetric functions differ, with both values.
pub fn first_difference(lhs: &SymFunc, rhs: &SymFunc) -> Option<(Partition, Scalar, Scalar)> {
    let l = lhs.to_basis(Basis::S);
    let r = rhs.to_basis(Basis::S);
    let mut keys: Vec<&Partition> = l.coeffs().keys().chain(r.coeffs().keys()).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter().find_map(|mu| {
        let (x, y) = (l.coeff(mu), r.coeff(mu));
        (x != y).then(|| (mu.clone(), x, y))
    })
}

/// `specialize(s_μ, principal)` for every `|μ| = d`, as a cross-check of the
/// hook formula used by [`w_one`].
pub fn principal_values(d: u32) -> Result<Vec<(Partition, Scalar)>, Error> {
    let rule = principal_rule(d);
    enumerate(d)
        .into_iter()
        .map(|mu| {
            let v = SymFunc::s_basis_elem(&mu, d)?.specialize(&rule)?;
            Ok((mu, v))
        })
        .collect()
}
