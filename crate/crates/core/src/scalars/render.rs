//! Deterministic text form of a [`Scalar`].
//!
//! All terms are brought over one common denominator. Its cyclotomic part is
//! regrouped into quantum integers `[n] = z^n − z^{-n}` greedily from the
//! largest `n`; leftover cyclotomic factors and any residual polynomial are
//! printed as they are. The numerator is a polynomial in `u, a, b, z` with
//! terms ordered by `u`, then `a`, then `b`, then `z` exponent, ascending:
//!
//! ```text
//! (u^-1 - u) * (z - z^-1)^-1
//! ```

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::cyclotomic::divisors;
use super::gaussian::GaussianRational as Gq;
use super::laurent::LaurentPoly;
use super::ratfunc::RationalFunctionZ;
use super::{Mono, Scalar};

pub(super) fn render_scalar(s: &Scalar) -> String {
    if s.is_zero() {
        return "0".to_string();
    }
    let (mut cyclo, rest) = RationalFunctionZ::common_denominator(s.terms().values());

    // regroup into quantum integers: Π_{d | 2n} Φ̂_d = −z^n [n]
    let mut qints: Vec<(u32, u32)> = Vec::new();
    let mut unit_shift = 0i32;
    let mut unit_sign = 1i64;
    let max_d = cyclo.keys().copied().max().unwrap_or(0);
    for n in (1..=max_d / 2).rev() {
        let ds = divisors(2 * n);
        let times = ds
            .iter()
            .map(|d| cyclo.get(d).copied().unwrap_or(0))
            .min()
            .unwrap_or(0);
        if times == 0 {
            continue;
        }
        for d in &ds {
            *cyclo.get_mut(d).expect("present") -= times;
        }
        qints.push((n, times));
        unit_shift -= (n * times) as i32;
        if times % 2 == 1 {
            unit_sign = -unit_sign;
        }
    }
    cyclo.retain(|_, e| *e > 0);
    qints.sort_unstable();

    let mut numerator: BTreeMap<(Mono, i32), Gq> = BTreeMap::new();
    let full_cyclo: BTreeMap<u32, u32> = {
        let mut c = cyclo.clone();
        for &(n, times) in &qints {
            for d in divisors(2 * n) {
                *c.entry(d).or_insert(0) += times;
            }
        }
        c
    };
    for (&m, f) in s.terms() {
        let num = f.numerator_over(&full_cyclo, &rest);
        for (e, c) in num.terms() {
            let c = if unit_sign < 0 { -c } else { c.clone() };
            numerator.insert((m, e + unit_shift), c);
        }
    }

    let mut out = render_terms(&numerator);
    let mut factors = Vec::new();
    for &(n, times) in &qints {
        let base = if n == 1 {
            "(z - z^-1)".to_string()
        } else {
            format!("(z^{n} - z^-{n})")
        };
        factors.push(format!("{base}^-{times}"));
    }
    for (&d, &e) in &cyclo {
        let poly = LaurentPoly::from_ints(0, &super::cyclotomic(d));
        factors.push(format!("({})^-{e}", render_poly(&poly)));
    }
    if !rest.is_one() {
        factors.push(format!("({})^-1", render_poly(&rest)));
    }
    if factors.is_empty() {
        return out;
    }
    if numerator.len() > 1 {
        out = format!("({out})");
    }
    let mut parts = Vec::new();
    if out != "1" {
        parts.push(out);
    }
    parts.extend(factors);
    if parts.is_empty() {
        return "1".to_string();
    }
    parts.join(" * ")
}

fn render_poly(p: &LaurentPoly) -> String {
    let terms: BTreeMap<(Mono, i32), Gq> = p
        .terms()
        .map(|(e, c)| ((Mono::ONE, e), c.clone()))
        .collect();
    render_terms(&terms)
}

fn power(var: &str, e: i64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    }
}

fn render_terms(terms: &BTreeMap<(Mono, i32), Gq>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, ((m, ze), c)) in terms.iter().enumerate() {
        let vars: Vec<String> = [
            power("u", m.u as i64),
            power("a", m.a as i64),
            power("b", m.b as i64),
            power("z", *ze as i64),
        ]
        .into_iter()
        .flatten()
        .collect();
        let negative = c.is_negative_display();
        let mag = if negative { -c } else { c.clone() };
        let body = if vars.is_empty() {
            mag.render()
        } else if mag.is_one() {
            vars.join("*")
        } else {
            format!("{}*{}", mag.render(), vars.join("*"))
        };
        match (k, negative) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    debug_assert!(!terms.values().any(Zero::is_zero));
    out
}
