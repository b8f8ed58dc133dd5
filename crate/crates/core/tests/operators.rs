mod common;

use common::{numeric_symfunc, p, small_gaussian};
use mv_core::operators::{
    annihilator_exp_vev, apply_beta, apply_qk, creator_exp, cut_and_join_p, heisenberg_check,
    vacuum, wick_vev,
};
use mv_core::partitions::{enumerate, enumerate_up_to};
use mv_core::symfun::exp_t_rule;
use mv_core::vertex::qdim;
use mv_core::{Basis, GaussianRational, Scalar, SpecRule, SymFunc};
use proptest::prelude::*;

#[test]
fn heisenberg_relations() {
    let ms: Vec<i32> = (-5..=5).filter(|&m| m != 0).collect();
    for mu in enumerate_up_to(5) {
        let f = SymFunc::p_monomial(&mu, 5).unwrap();
        for &m in &ms {
            for &n in &ms {
                assert!(heisenberg_check(m, n, &f).unwrap(), "[{m}, {n}] on {mu}");
            }
        }
    }
}

#[test]
fn wick_formula() {
    for mu in enumerate_up_to(6) {
        for nu in enumerate_up_to(6) {
            let expected = if mu == nu {
                Scalar::from_gaussian(GaussianRational::from_bigint(mu.z()))
            } else {
                Scalar::zero()
            };
            assert_eq!(wick_vev(&mu, &nu).unwrap(), expected, "{mu} {nu}");
        }
    }
}

#[test]
fn creator_exponential_closed_form() {
    let bound = 6;
    let gamma = exp_t_rule(bound);
    let state = creator_exp(&gamma, bound).unwrap();
    for mu in enumerate_up_to(bound) {
        let expected = gamma
            .eval_monomial(&mu)
            .unwrap()
            .scale_gaussian(&GaussianRational::from_bigint(mu.z()).inv().unwrap());
        assert_eq!(state.coeff(&mu), expected, "{mu}");
    }
}

#[test]
fn creator_exponentials_give_quantum_dimensions() {
    let bound = 5;
    let gamma = exp_t_rule(bound);
    let plain = creator_exp(&gamma, bound).unwrap().to_basis(Basis::S);
    let twisted = creator_exp(&gamma.sign_twisted(), bound)
        .unwrap()
        .to_basis(Basis::S);
    for mu in enumerate_up_to(bound) {
        let weight = Scalar::u_pow(mu.size() as i32);
        assert_eq!(plain.coeff(&mu), &weight * &qdim(&mu), "{mu}");
        assert_eq!(twisted.coeff(&mu), &weight * &qdim(&mu.conjugate()), "{mu}");
    }
}

#[test]
fn cut_and_join_is_diagonal_on_schur_functions() {
    for d in 0..=8 {
        for mu in enumerate(d) {
            let s = SymFunc::s_basis_elem(&mu, d).unwrap();
            let half_kappa = Scalar::from_gaussian(GaussianRational::ratio(mu.kappa(), 2));
            assert_eq!(cut_and_join_p(&s).unwrap(), s.scale(&half_kappa), "{mu}");
        }
    }
}

#[test]
fn framing_operator_composes() {
    let f = SymFunc::s_basis_elem(&p(&[3, 1]), 4).unwrap();
    assert_eq!(apply_qk(2, &apply_qk(-1, &f)), apply_qk(1, &f));
    assert_eq!(apply_qk(-1, &apply_qk(1, &f)), f);
}

#[test]
fn truncation_and_errors() {
    let v = vacuum(2).unwrap();
    assert!(apply_beta(-3, &v).unwrap().is_zero());
    assert!(apply_beta(0, &v).is_err());
    assert!(heisenberg_check(0, 1, &v).is_err());
}

fn rule(values: Vec<GaussianRational>) -> SpecRule {
    SpecRule::from_values(values.into_iter().map(Scalar::from_gaussian).collect())
}

/// `exp(Σ_{n≤D} c_n/n)` as a truncated series in a grading variable `t`
/// where `c_n` has weight `n`, evaluated at `t = 1`.
fn exp_reference(c: &[GaussianRational]) -> GaussianRational {
    let d = c.len();
    // e_0 = 1, k e_k = Σ_{n=1}^{k} c_n e_{k−n}
    let mut e = vec![GaussianRational::from_int(1)];
    for k in 1..=d {
        let mut acc = GaussianRational::from_int(0);
        for n in 1..=k {
            acc += &(&c[n - 1] * &e[k - n]);
        }
        e.push(&acc * &GaussianRational::ratio(1, k as i64));
    }
    e.into_iter()
        .fold(GaussianRational::from_int(0), |acc, x| &acc + &x)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn exponential_vev(
        d in 1u32..=6,
        a in prop::collection::vec(small_gaussian(), 6),
        b in prop::collection::vec(small_gaussian(), 6),
    ) {
        let a: Vec<_> = a.into_iter().take(d as usize).collect();
        let b: Vec<_> = b.into_iter().take(d as usize).collect();
        let state = creator_exp(&rule(b.clone()), d).unwrap();
        let lhs = annihilator_exp_vev(&rule(a.clone()), &state).unwrap();
        let products: Vec<_> = a.iter().zip(&b).map(|(x, y)| x * y).collect();
        prop_assert_eq!(lhs, Scalar::from_gaussian(exp_reference(&products)));
    }

    #[test]
    fn annihilators_lower_degree(f in numeric_symfunc(5), n in 1i32..=5) {
        let g = apply_beta(n, &f).unwrap();
        for mu in g.coeffs().keys() {
            prop_assert!(mu.size() + n as u32 <= 5);
        }
    }
}
