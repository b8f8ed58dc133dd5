//! Integer cyclotomic polynomials, normalized to constant term `+1`.
//!
//! `Φ̂_1 = 1 − z` and `Φ̂_d = Φ_d` for `d ≥ 2`, so that
//! `1 − z^m = Π_{d | m} Φ̂_d` and every product of them has constant term 1.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

/// Ascending integer coefficients of `Φ̂_d`.
pub fn cyclotomic(d: u32) -> Arc<Vec<i64>> {
    assert!(d >= 1);
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&d) {
        return Arc::clone(p);
    }
    let poly = Arc::new(compute(d));
    cache.write().unwrap().insert(d, Arc::clone(&poly));
    poly
}

fn compute(d: u32) -> Vec<i64> {
    // 1 − z^d divided by Φ̂_e for every proper divisor e
    let mut p = vec![0i64; d as usize + 1];
    p[0] = 1;
    p[d as usize] = -1;
    for e in divisors(d).into_iter().filter(|&e| e < d) {
        p = div_exact(&p, &cyclotomic(e));
    }
    p
}

fn div_exact(p: &[i64], d: &[i64]) -> Vec<i64> {
    // d has constant term 1: divide from the bottom up
    let n = p.len() - d.len() + 1;
    let mut rem: Vec<i128> = p.iter().map(|&c| c as i128).collect();
    let mut q = vec![0i64; n];
    for k in 0..n {
        let c = rem[k];
        q[k] = c as i64;
        if c != 0 {
            for (j, &dj) in d.iter().enumerate() {
                rem[k + j] -= c * dj as i128;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Euler's totient, which is the degree of `Φ_d`.
pub fn totient(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}
