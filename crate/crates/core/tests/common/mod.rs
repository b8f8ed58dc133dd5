#![allow(dead_code)]

use mv_core::partitions::enumerate_up_to;
use mv_core::scalars::{inv_quantum_int, quantum_int};
use mv_core::{Basis, GaussianRational, Partition, Scalar, SymFunc};
use proptest::prelude::*;

pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn partition_up_to(d: u32) -> impl Strategy<Value = Partition> {
    let all = enumerate_up_to(d);
    (0..all.len()).prop_map(move |k| all[k].clone())
}

pub fn small_gaussian() -> impl Strategy<Value = GaussianRational> {
    (-5i64..=5, 1i64..=4, -3i64..=3).prop_map(|(re, den, im)| {
        &GaussianRational::ratio(re, den)
            + &(&GaussianRational::i() * &GaussianRational::from_int(im))
    })
}

/// Small nonzero scalars mixing `z`, `u`, `[n]^{±1}` and Gaussian constants.
pub fn small_scalar() -> impl Strategy<Value = Scalar> {
    (
        small_gaussian(),
        -3i32..=3,
        0i32..=2,
        0u32..=3,
        any::<bool>(),
    )
        .prop_map(|(c, ze, ue, qn, invert)| {
            let mut s = Scalar::from_gaussian(c).mul_z_pow(ze);
            s = &s * &Scalar::u_pow(ue);
            if qn > 0 {
                let q = if invert {
                    inv_quantum_int(qn as i32).unwrap()
                } else {
                    quantum_int(qn as i32).unwrap()
                };
                s = &s * &q;
            }
            s
        })
}

/// A random element of degree `≤ bound` in the power-sum basis with up to
/// four terms.
pub fn symfunc(bound: u32) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((partition_up_to(bound), small_scalar()), 0..4)
        .prop_map(move |terms| SymFunc::from_terms(Basis::P, bound, terms).unwrap())
}

/// Like [`symfunc`] but with plain Gaussian-rational coefficients.
pub fn numeric_symfunc(bound: u32) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((partition_up_to(bound), small_gaussian()), 0..5).prop_map(move |terms| {
        SymFunc::from_terms(
            Basis::P,
            bound,
            terms
                .into_iter()
                .map(|(mu, c)| (mu, Scalar::from_gaussian(c))),
        )
        .unwrap()
    })
}
