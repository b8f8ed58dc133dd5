//! Boson Fock-space operators acting on truncated elements of `Λ`.
//!
//! A state `A|0⟩` is stored as the symmetric function it equals, with
//! `|0⟩ = 1` and `|μ⟩ = s_μ`. Creators `β_{−n}` multiply by `p_n` and drop
//! terms above the degree bound; annihilators `β_n` act as `n ∂/∂p_n`.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::partitions::Partition;
use crate::scalars::{GaussianRational, Scalar};
use crate::symfun::{Basis, SpecRule, SymFunc};

pub type FockState = SymFunc;

pub fn vacuum(bound: u32) -> Result<FockState, Error> {
    SymFunc::one(bound)
}

/// `β_n f`, returned in the power-sum basis.
pub fn apply_beta(n: i32, f: &FockState) -> Result<FockState, Error> {
    if n == 0 {
        return Err(Error::ZeroBeta);
    }
    let p = f.to_basis(Basis::P);
    let mut out = SymFunc::zero(Basis::P, f.bound())?;
    let k = n.unsigned_abs();
    if n < 0 {
        for (mu, c) in p.coeffs() {
            if mu.size() + k <= f.bound() {
                out.add_term(mu.with_part(k), c);
            }
        }
    } else {
        for (mu, c) in p.coeffs() {
            let m = mu.multiplicity(k);
            if m > 0 {
                let reduced = mu.without_part(k).expect("part present");
                out.add_term(reduced, &c.scale_int(i64::from(k) * i64::from(m)));
            }
        }
    }
    Ok(out)
}

/// Applies `β_{n_1} β_{n_2} ⋯` to `f`, rightmost first.
pub fn apply_betas(ns: &[i32], f: &FockState) -> Result<FockState, Error> {
    let mut state = f.clone();
    for &n in ns.iter().rev() {
        state = apply_beta(n, &state)?;
    }
    Ok(state)
}

/// The vacuum expectation value `⟨f⟩`: the coefficient of `1`.
pub fn vev(f: &FockState) -> Scalar {
    f.to_basis(Basis::P).coeff(&Partition::empty())
}

/// `⟨β_μ β_{−ν}⟩`, computed by applying the operators to `|0⟩`.
pub fn wick_vev(mu: &Partition, nu: &Partition) -> Result<Scalar, Error> {
    let bound = mu.size().max(nu.size());
    let mut state = vacuum(bound)?;
    for &k in nu.parts() {
        state = apply_beta(-(k as i32), &state)?;
    }
    for &k in mu.parts() {
        state = apply_beta(k as i32, &state)?;
    }
    Ok(vev(&state))
}

fn exp_series(
    f: &FockState,
    max_terms: u32,
    op: impl Fn(&FockState) -> Result<FockState, Error>,
) -> Result<FockState, Error> {
    let mut term = f.to_basis(Basis::P);
    let mut acc = term.clone();
    for k in 1..=max_terms {
        term = op(&term)?.scale(&Scalar::from_gaussian(GaussianRational::ratio(1, k as i64)));
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// `exp(Σ_n γ(n) β_{−n}/n)|0⟩` truncated at degree `bound`, computed by
/// summing powers of the exponent.
pub fn creator_exp(gamma: &SpecRule, bound: u32) -> Result<FockState, Error> {
    if gamma.bound() < bound {
        return Err(Error::DegreeExceeded {
            degree: bound,
            bound: gamma.bound(),
        });
    }
    let exponent = |f: &FockState| -> Result<FockState, Error> {
        let mut out = SymFunc::zero(Basis::P, bound)?;
        for n in 1..=bound {
            let g = gamma.get(n).expect("checked above");
            if g.is_zero() {
                continue;
            }
            let coef = g.scale_gaussian(&GaussianRational::ratio(1, n as i64));
            out = out.add(&apply_beta(-(n as i32), f)?.scale(&coef))?;
        }
        Ok(out)
    };
    exp_series(&vacuum(bound)?, bound, exponent)
}

/// `⟨exp(Σ_n a(n) β_n/n) f⟩`.
pub fn annihilator_exp_vev(a: &SpecRule, f: &FockState) -> Result<Scalar, Error> {
    let bound = f.bound();
    let exponent = |g: &FockState| -> Result<FockState, Error> {
        let mut out = SymFunc::zero(Basis::P, bound)?;
        for n in 1..=bound.min(a.bound()) {
            let c = a.get(n).expect("in range");
            if c.is_zero() {
                continue;
            }
            let coef = c.scale_gaussian(&GaussianRational::ratio(1, n as i64));
            out = out.add(&apply_beta(n as i32, g)?.scale(&coef))?;
        }
        Ok(out)
    };
    Ok(vev(&exp_series(f, bound, exponent)?))
}

/// The cut-and-join operator
/// `K = ½ Σ_{i,j} (ij p_{i+j} ∂²/∂p_i∂p_j + (i+j) p_i p_j ∂/∂p_{i+j})`
/// in the power-sum basis.
pub fn cut_and_join_p(f: &FockState) -> Result<FockState, Error> {
    let p = f.to_basis(Basis::P);
    let mut out = SymFunc::zero(Basis::P, f.bound())?;
    let half = GaussianRational::ratio(1, 2);
    for (mu, c) in p.coeffs() {
        let c = c.scale_gaussian(&half);
        let mults = mu.multiplicities();
        // join: two parts i, j merge into i + j
        for (&i, &mi) in &mults {
            for (&j, &mj) in &mults {
                let pairs = if i == j { mi * (mi - 1) } else { mi * mj };
                if pairs == 0 {
                    continue;
                }
                let merged = mu
                    .without_part(i)
                    .and_then(|r| r.without_part(j))
                    .expect("parts present")
                    .with_part(i + j);
                let k = i64::from(i) * i64::from(j) * i64::from(pairs);
                out.add_term(merged, &c.scale_int(k));
            }
        }
        // cut: one part k splits into i + j, ordered pairs
        for (&k, &mk) in &mults {
            let rest = mu.without_part(k).expect("part present");
            for i in 1..k {
                let split = rest.with_part(i).with_part(k - i);
                out.add_term(split, &c.scale_int(i64::from(k) * i64::from(mk)));
            }
        }
    }
    Ok(out)
}

/// `q^{cK} f`, diagonal on Schur functions: `s_μ ↦ z^{cκ_μ} s_μ`. Returned
/// in `f`'s basis.
pub fn apply_qk(c: i32, f: &FockState) -> FockState {
    if c == 0 {
        return f.clone();
    }
    f.to_basis(Basis::S)
        .map_coeffs(|mu, x| x.mul_z_pow(c * mu.kappa() as i32))
        .to_basis(f.basis())
}

/// `⟨exp(Σ_n p_n(x) β_n / n) · state⟩` viewed as a symmetric function in `x`,
/// with each `p_n(x)` further multiplied by `twist(n)`.
pub fn pair_with_source(state: &FockState, twist: &SpecRule) -> Result<SymFunc, Error> {
    let p = state.to_basis(Basis::P);
    let mut out = SymFunc::zero(Basis::P, state.bound())?;
    for (eta, c) in p.coeffs() {
        out.add_term(eta.clone(), &(c * &twist.eval_monomial(eta)?));
    }
    Ok(out)
}

type Terms = BTreeMap<Partition, Scalar>;

fn beta_untruncated(n: i32, f: &Terms) -> Terms {
    let k = n.unsigned_abs();
    let mut out = Terms::new();
    for (mu, c) in f {
        let (target, c) = if n < 0 {
            (mu.with_part(k), c.clone())
        } else {
            let m = mu.multiplicity(k);
            if m == 0 {
                continue;
            }
            let reduced = mu.without_part(k).expect("part present");
            (reduced, c.scale_int(i64::from(k) * i64::from(m)))
        };
        let entry = out.entry(target).or_default();
        *entry += &c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Checks `[β_m, β_n] f = m δ_{m,−n} f` exactly. The commutator is evaluated
/// without degree truncation so that no term can be hidden by the bound.
pub fn heisenberg_check(m: i32, n: i32, f: &FockState) -> Result<bool, Error> {
    if m == 0 || n == 0 {
        return Err(Error::ZeroBeta);
    }
    let p = f.to_basis(Basis::P).coeffs().clone();
    let mn = beta_untruncated(m, &beta_untruncated(n, &p));
    let nm = beta_untruncated(n, &beta_untruncated(m, &p));
    let mut lhs = mn;
    for (mu, c) in nm {
        let entry = lhs.entry(mu).or_default();
        *entry = &*entry - &c;
    }
    lhs.retain(|_, c| !c.is_zero());
    let rhs: Terms = if m == -n {
        p.iter()
            .map(|(mu, c)| (mu.clone(), c.scale_int(i64::from(m))))
            .collect()
    } else {
        Terms::new()
    };
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::exp_t_rule;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn betas_on_vacuum() {
        let v = vacuum(3).unwrap();
        assert_eq!(
            apply_beta(-2, &v).unwrap(),
            SymFunc::p_monomial(&p(&[2]), 3).unwrap()
        );
        let p2 = SymFunc::p_monomial(&p(&[2]), 3).unwrap();
        assert_eq!(apply_beta(2, &p2).unwrap(), v.scale(&Scalar::from_int(2)));
        assert!(apply_beta(1, &v).unwrap().is_zero());
        assert!(matches!(apply_beta(0, &v), Err(Error::ZeroBeta)));
        // truncation
        assert!(apply_beta(-4, &v).unwrap().is_zero());
        let s = apply_betas(&[-1, -2], &v).unwrap();
        assert_eq!(s, SymFunc::p_monomial(&p(&[2, 1]), 3).unwrap());
    }

    #[test]
    fn wick() {
        assert_eq!(
            wick_vev(&p(&[2, 1]), &p(&[2, 1])).unwrap(),
            Scalar::from_int(2)
        );
        assert!(wick_vev(&p(&[2]), &p(&[1, 1])).unwrap().is_zero());
        assert_eq!(wick_vev(&p(&[]), &p(&[])).unwrap(), Scalar::one());
        assert_eq!(
            wick_vev(&p(&[1, 1, 1]), &p(&[1, 1, 1])).unwrap(),
            Scalar::from_int(6)
        );
    }

    #[test]
    fn creator_exponential() {
        let rule = exp_t_rule(3);
        let state = creator_exp(&rule, 3).unwrap();
        let half = GaussianRational::ratio(1, 2);
        assert_eq!(
            state.coeff(&p(&[2])),
            rule.get(2).unwrap().scale_gaussian(&half)
        );
        assert_eq!(state.coeff(&p(&[])), Scalar::one());
        let zero = SpecRule::from_fn(3, |_| Scalar::zero());
        assert_eq!(creator_exp(&zero, 3).unwrap(), vacuum(3).unwrap());
        assert!(creator_exp(&rule, 4).is_err());
    }

    #[test]
    fn cut_and_join_examples() {
        let p11 = SymFunc::p_monomial(&p(&[1, 1]), 3).unwrap();
        assert_eq!(
            cut_and_join_p(&p11).unwrap(),
            SymFunc::p_monomial(&p(&[2]), 3).unwrap()
        );
        let s2 = SymFunc::s_basis_elem(&p(&[2]), 3).unwrap();
        assert_eq!(cut_and_join_p(&s2).unwrap().to_basis(Basis::S), s2);
        assert!(cut_and_join_p(&vacuum(3).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn framing_operator() {
        let s2 = SymFunc::s_basis_elem(&p(&[2]), 2).unwrap();
        assert_eq!(apply_qk(1, &s2), s2.scale(&Scalar::z_pow(2)));
        let s11 = SymFunc::s_basis_elem(&p(&[1, 1]), 2).unwrap();
        assert_eq!(apply_qk(1, &s11), s11.scale(&Scalar::z_pow(-2)));
        let f = s2.add(&s11).unwrap();
        assert_eq!(apply_qk(0, &f), f);
    }

    #[test]
    fn source_pairing() {
        let twist = SpecRule::from_fn(2, |_| {
            Scalar::from_gaussian(GaussianRational::i().inv().unwrap())
        });
        let p1 = SymFunc::p_monomial(&p(&[1]), 2).unwrap();
        let out = pair_with_source(&p1, &twist).unwrap();
        assert_eq!(out.coeff(&p(&[1])), -Scalar::i());
        let one = SpecRule::from_fn(2, |_| Scalar::one());
        assert_eq!(
            pair_with_source(&vacuum(2).unwrap(), &one).unwrap(),
            vacuum(2).unwrap()
        );
    }

    #[test]
    fn heisenberg_examples() {
        let p3 = SymFunc::p_monomial(&p(&[3]), 3).unwrap();
        assert!(heisenberg_check(1, -1, &p3).unwrap());
        assert!(heisenberg_check(2, 3, &p3).unwrap());
        assert!(heisenberg_check(2, 2, &p3).unwrap());
        assert!(heisenberg_check(-3, 3, &p3).unwrap());
    }
}
