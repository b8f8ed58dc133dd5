//! The check catalog. Each check evaluates one family of identities over
//! the ranges set by a [`CheckConfig`] and reports the first mismatch.

use std::cell::Cell;
use std::collections::BTreeSet;
use std::time::Instant;

use mv_core::characters::{char_oracle, char_table, chi};
use mv_core::operators::{creator_exp, cut_and_join_p, heisenberg_check, wick_vev};
use mv_core::partitions::{enumerate, enumerate_up_to, hook_shift_multisets};
use mv_core::scalars::Mono;
use mv_core::symfun::{
    cauchy_power_side, cauchy_schur_side, exp_t_rule, principal_rule, schur_exp_t_closed,
    schur_principal_closed, schur_two_param_closed, two_param_rule, SpecRule,
};
use mv_core::vertex::{
    amplitude_a, amplitude_b, conifold_vacuum_log, first_difference, free_energy, lambda_expand,
    mv_rhs, normalize, operator_amplitude, operator_state, qdim, scalar_log, w_one, w_two, Diagram,
    FreeEnergyTable, ZbForm,
};
use mv_core::{Basis, Error, GaussianRational, Partition, Scalar, SymFunc};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::config::CheckConfig;
use crate::CliError;

pub type Params = Map<String, Value>;

/// Result of running one check body.
pub enum Verdict {
    Pass,
    Fail(String),
    Skip(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub anchor: String,
    pub params: Params,
    pub status: Status,
    pub millis: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

type Body = fn(&CheckConfig, &mut Params) -> Result<Verdict, Error>;

pub struct CheckSpec {
    pub id: &'static str,
    pub anchor: &'static str,
    body: Body,
}

pub const CATALOG: &[CheckSpec] = &[
    spec(
        "newton-schur",
        "power sums expand in Schur functions through the characters",
        newton_schur,
    ),
    spec(
        "orthogonality",
        "row and column orthogonality of the character table",
        orthogonality,
    ),
    spec(
        "cauchy",
        "Cauchy kernel in Schur and power-sum form; omega transposes",
        cauchy,
    ),
    spec(
        "heisenberg",
        "commutation relations of the bosonic modes",
        heisenberg,
    ),
    spec("wick", "vacuum expectations of mode monomials", wick),
    spec(
        "creator-schur",
        "creator exponential expands in Schur functions",
        creator_schur,
    ),
    spec(
        "creator-schur-t",
        "sign-twisted creator exponential gives transposed Schur functions",
        creator_schur_t,
    ),
    spec(
        "cutjoin",
        "Schur functions diagonalize the cut-and-join operator",
        cutjoin,
    ),
    spec(
        "hook-content-sums",
        "sums of hook lengths and contents",
        hook_content_sums,
    ),
    spec(
        "principal",
        "principal specialization of Schur functions",
        principal,
    ),
    spec(
        "two-param",
        "two-parameter specialization of Schur functions",
        two_param,
    ),
    spec(
        "lemma21",
        "specialization with p_n = (1 - e^{-nt})/[n]",
        exp_t,
    ),
    spec(
        "macdonald",
        "hook and shifted-part exponent multisets",
        macdonald,
    ),
    spec(
        "qdim-product",
        "quantum dimension as a hook-content product",
        qdim_product,
    ),
    spec(
        "prop22",
        "creator exponentials produce quantum dimensions",
        creator_qdims,
    ),
    spec(
        "w-symmetries",
        "transposition and exchange symmetries of W",
        w_symmetries,
    ),
    spec(
        "zb-rewrite",
        "second amplitude before and after rewriting W",
        zb_rewrite,
    ),
    spec(
        "prop31",
        "normalized vertex sum equals operator form, first diagram",
        normalized_a,
    ),
    spec(
        "prop32",
        "normalized vertex sum equals operator form, second diagram",
        normalized_b,
    ),
    spec(
        "mv-theorem-a",
        "operator form in closed Schur form, first diagram",
        closed_state_a,
    ),
    spec(
        "mv-theorem-b",
        "operator form in closed Schur form, second diagram",
        closed_state_b,
    ),
    spec(
        "conifold-free-energy",
        "vacuum free energy and lambda pole orders",
        conifold_free_energy,
    ),
];

const fn spec(id: &'static str, anchor: &'static str, body: Body) -> CheckSpec {
    CheckSpec { id, anchor, body }
}

pub fn lookup(id: &str) -> Result<&'static CheckSpec, CliError> {
    CATALOG
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| CliError::UnknownCheck(id.to_string()))
}

/// Runs one catalog entry. Library errors are reported as failures.
pub fn run_check(id: &str, cfg: &CheckConfig) -> Result<CheckResult, CliError> {
    let spec = lookup(id)?;
    let mut params = Params::new();
    let start = Instant::now();
    let verdict =
        (spec.body)(cfg, &mut params).unwrap_or_else(|e| Verdict::Fail(format!("error: {e}")));
    let millis = cfg.timings.then(|| start.elapsed().as_millis() as u64);
    let (status, witness) = match verdict {
        Verdict::Pass => (Status::Pass, None),
        Verdict::Fail(w) => (Status::Fail, Some(w)),
        Verdict::Skip(w) => (Status::Skip, Some(w)),
    };
    Ok(CheckResult {
        id: spec.id.to_string(),
        anchor: spec.anchor.to_string(),
        params,
        status,
        millis,
        witness,
    })
}

fn set(params: &mut Params, key: &str, value: Value) {
    params.insert(key.to_string(), value);
}

fn mono_label(m: Mono) -> String {
    let mut s = format!("u^{}", m.u);
    if m.a != 0 {
        s += &format!(" a^{}", m.a);
    }
    if m.b != 0 {
        s += &format!(" b^{}", m.b);
    }
    s
}

/// Names the first monomial where two scalars differ.
fn scalar_witness(at: &str, lhs: &Scalar, rhs: &Scalar) -> Option<String> {
    let keys: BTreeSet<Mono> = lhs
        .terms()
        .keys()
        .chain(rhs.terms().keys())
        .copied()
        .collect();
    keys.into_iter().find_map(|m| {
        let (l, r) = (lhs.coeff(m), rhs.coeff(m));
        (l != r).then(|| format!("{at}, {}: lhs = {l}, rhs = {r}", mono_label(m)))
    })
}

fn symfunc_witness(at: &str, lhs: &SymFunc, rhs: &SymFunc) -> Option<String> {
    first_difference(lhs, rhs)
        .map(|(mu, l, r)| scalar_witness(&format!("{at}, s{mu}"), &l, &r).unwrap_or_default())
}

fn random_symfunc(rng: &mut ChaCha8Rng, bound: u32) -> Result<SymFunc, Error> {
    let all = enumerate_up_to(bound);
    let terms: Vec<_> = (0..rng.gen_range(1..=5))
        .map(|_| {
            let mu = all[rng.gen_range(0..all.len())].clone();
            let re = GaussianRational::ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4));
            let im = &GaussianRational::i() * &GaussianRational::from_int(rng.gen_range(-3..=3));
            (mu, Scalar::from_gaussian(&re + &im))
        })
        .collect();
    SymFunc::from_terms(Basis::P, bound, terms)
}

fn newton_schur(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    let n_max = cfg.char_n_max;
    let samples = 16;
    set(params, "n_max", json!(n_max));
    set(params, "degree", json!(cfg.max_degree));
    set(params, "samples", json!(samples));
    set(params, "seed", json!(cfg.seed));
    for n in 0..=n_max {
        for nu in enumerate(n) {
            for mu in enumerate(n) {
                let (fast, slow) = (chi(&nu, &mu)?, char_oracle(&nu, &mu)?);
                if fast != slow {
                    return Ok(Verdict::Fail(format!(
                        "chi_{nu}({mu}): recursion = {fast}, oracle = {slow}"
                    )));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for k in 0..samples {
        let f = random_symfunc(&mut rng, cfg.max_degree)?;
        let back = f.to_basis(Basis::S).to_basis(Basis::P);
        if back != f {
            return Ok(Verdict::Fail(format!(
                "sample {k}: {f} round-trips to {back}"
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn orthogonality(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    set(params, "n_max", json!(cfg.char_n_max));
    let zero = GaussianRational::from_int(0);
    for n in 1..=cfg.char_n_max {
        let t = char_table(n)?;
        let parts = t.partitions();
        for a in parts {
            for b in parts {
                let rows = parts.iter().fold(zero.clone(), |acc, mu| {
                    let num = GaussianRational::from_bigint(t.get(a, mu) * t.get(b, mu));
                    let z = GaussianRational::from_bigint(mu.z());
                    &acc + &num.checked_div(&z).expect("z_mu > 0")
                });
                let expected = GaussianRational::from_int((a == b) as i64);
                if rows != expected {
                    return Ok(Verdict::Fail(format!("rows {a}, {b}: sum = {rows}")));
                }
                let cols = parts.iter().fold(zero.clone(), |acc, nu| {
                    &acc + &GaussianRational::from_bigint(t.get(nu, a) * t.get(nu, b))
                });
                let expected = if a == b {
                    GaussianRational::from_bigint(a.z())
                } else {
                    zero.clone()
                };
                if cols != expected {
                    return Ok(Verdict::Fail(format!("columns {a}, {b}: sum = {cols}")));
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

fn cauchy(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    let d_max = cfg.max_degree;
    set(params, "degree", json!(d_max));
    for d in 0..=d_max {
        let schur = cauchy_schur_side(d)?;
        let power = cauchy_power_side(d);
        let keys: BTreeSet<_> = schur.keys().chain(power.keys()).collect();
        for key in keys {
            let (l, r) = (schur.get(key).cloned(), power.get(key).cloned());
            if l.clone().unwrap_or_default() != r.clone().unwrap_or_default() {
                return Ok(Verdict::Fail(format!(
                    "p{}(x) p{}(y): schur side = {}, power side = {}",
                    key.0,
                    key.1,
                    l.unwrap_or_default(),
                    r.unwrap_or_default()
                )));
            }
        }
    }
    for mu in enumerate_up_to(d_max) {
        let s = SymFunc::s_basis_elem(&mu, d_max)?;
        let t = SymFunc::s_basis_elem(&mu.conjugate(), d_max)?;
        if let Some(w) = symfunc_witness(&format!("omega(s{mu})"), &s.omega(), &t) {
            return Ok(Verdict::Fail(w));
        }
    }
    Ok(Verdict::Pass)
}

fn heisenberg(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    let d = cfg.max_degree;
    set(params, "mode_max", json!(d));
    set(params, "degree", json!(d));
    let modes: Vec<i32> = (-(d as i32)..=d as i32).filter(|&m| m != 0).collect();
    for mu in enumerate_up_to(d) {
        let f = SymFunc::p_monomial(&mu, d)?;
        for &m in &modes {
            for &n in &modes {
                if !heisenberg_check(m, n, &f)? {
                    return Ok(Verdict::Fail(format!("[beta_{m}, beta_{n}] on p{mu}")));
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

fn wick(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    let d = cfg.max_degree;
    set(params, "size", json!(d));
    let all = enumerate_up_to(d);
    for mu in &all {
        for nu in &all {
            let expected = if mu == nu {
                Scalar::from_gaussian(GaussianRational::from_bigint(mu.z()))
            } else {
                Scalar::zero()
            };
            let got = wick_vev(mu, nu)?;
            if let Some(w) = scalar_witness(&format!("<{mu}|{nu}>"), &got, &expected) {
                return Ok(Verdict::Fail(w));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Compares the Schur coefficients of `creator_exp(gamma)` with `expected`.
fn creator_against(
    gamma: &SpecRule,
    bound: u32,
    expected: impl Fn(&Partition) -> Scalar,
) -> Result<Verdict, Error> {
    let state = creator_exp(gamma, bound)?.to_basis(Basis::S);
    for mu in enumerate_up_to(bound) {
        if let Some(w) = scalar_witness(&format!("s{mu}"), &state.coeff(&mu), &expected(&mu)) {
            return Ok(Verdict::Fail(w));
        }
    }
    Ok(Verdict::Pass)
}

fn creator_schur(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    let d = cfg.max_degree;
    set(params, "degree", json!(d));
    set(params, "rule", json!("two-param"));
    creator_against(&two_param_rule(d), d, schur_two_param_closed)
}

fn creator_schur_t(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    let d = cfg.max_degree;
    set(params, "degree", json!(d));
    set(params, "rule", json!("two-param, sign twisted"));
    creator_against(&two_param_rule(d).sign_twisted(), d, |mu| {
        schur_two_param_closed(&mu.conjugate())
    })
}

fn cutjoin(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    let n_max = cfg.char_n_max;
    set(params, "size", json!(n_max));
    for mu in enumerate_up_to(n_max) {
        let s = SymFunc::s_basis_elem(&mu, mu.size())?;
        let half_kappa = Scalar::from_gaussian(GaussianRational::ratio(mu.kappa(), 2));
        let got = cut_and_join_p(&s)?;
        if let Some(w) = symfunc_witness(&format!("K s{mu}"), &got, &s.scale(&half_kappa)) {
            return Ok(Verdict::Fail(w));
        }
    }
    Ok(Verdict::Pass)
}

fn hook_content_sums(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    set(params, "size", json!(cfg.char_n_max));
    for mu in enumerate_up_to(cfg.char_n_max) {
        let st = mu.stats();
        let hooks: i64 = st.hooks.iter().map(|&h| h as i64).sum();
        let contents: i64 = st.contents.iter().sum();
        if hooks != st.n_mu + st.n_mu_t + mu.size() as i64 {
            return Ok(Verdict::Fail(format!("{mu}: hook sum {hooks}")));
        }
        if contents != st.n_mu_t - st.n_mu || 2 * contents != st.kappa {
            return Ok(Verdict::Fail(format!(
                "{mu}: content sum {contents}, kappa {}",
                st.kappa
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn closed_form(
    cfg: &CheckConfig,
    params: &mut Params,
    rule: SpecRule,
    closed: fn(&Partition) -> Scalar,
) -> Result<Verdict, Error> {
    let d = cfg.max_degree;
    set(params, "size", json!(d));
    for mu in enumerate_up_to(d) {
        let expanded = SymFunc::s_basis_elem(&mu, d)?.specialize(&rule)?;
        if let Some(w) = scalar_witness(&format!("s{mu}"), &expanded, &closed(&mu)) {
            return Ok(Verdict::Fail(w));
        }
    }
    Ok(Verdict::Pass)
}

fn principal(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    closed_form(
        cfg,
        params,
        principal_rule(cfg.max_degree),
        schur_principal_closed,
    )
}

fn two_param(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    closed_form(
        cfg,
        params,
        two_param_rule(cfg.max_degree),
        schur_two_param_closed,
    )
}

fn exp_t(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    closed_form(cfg, params, exp_t_rule(cfg.max_degree), schur_exp_t_closed)
}

fn macdonald(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    set(params, "size", json!(cfg.char_n_max));
    for mu in enumerate_up_to(cfg.char_n_max) {
        let (left, right) = hook_shift_multisets(&mu);
        if left != right {
            return Ok(Verdict::Fail(format!("{mu}: {left:?} vs {right:?}")));
        }
    }
    Ok(Verdict::Pass)
}

fn qdim_product(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    let d = cfg.max_degree;
    set(params, "size", json!(d));
    let rule = exp_t_rule(d);
    for mu in enumerate_up_to(d) {
        let s = SymFunc::s_basis_elem(&mu, d)?.specialize(&rule)?;
        let rhs = &s * &Scalar::u_pow(-(mu.size() as i32));
        if let Some(w) = scalar_witness(&format!("dim_q {mu}"), &qdim(&mu), &rhs) {
            return Ok(Verdict::Fail(w));
        }
    }
    Ok(Verdict::Pass)
}

fn creator_qdims(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    let d = cfg.max_degree;
    set(params, "degree", json!(d));
    let weight = |mu: &Partition| Scalar::u_pow(mu.size() as i32);
    let gamma = exp_t_rule(d);
    if let Verdict::Fail(w) = creator_against(&gamma, d, |mu| &weight(mu) * &qdim(mu))? {
        return Ok(Verdict::Fail(w));
    }
    creator_against(&gamma.sign_twisted(), d, |mu| {
        &weight(mu) * &qdim(&mu.conjugate())
    })
}

fn sign(n: u32) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn w_symmetries(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    let size = (cfg.q_order + 1).min(cfg.max_degree);
    set(params, "size", json!(size));
    let all = enumerate_up_to(size);
    for nu in &all {
        let flipped = w_one(nu)
            .invert_q()
            .mul_z_pow(nu.kappa() as i32)
            .scale_int(sign(nu.size()));
        if let Some(w) = scalar_witness(&format!("W{nu}"), &w_one(nu), &flipped) {
            return Ok(Verdict::Fail(w));
        }
    }
    for mu in &all {
        for nu in &all {
            let w = w_two(mu, nu)?;
            let lhs = w_two(&mu.conjugate(), &nu.conjugate())?;
            let rhs = w.invert_q().scale_int(sign(mu.size() + nu.size()));
            if let Some(w) = scalar_witness(&format!("W{mu}{nu} transposed"), &lhs, &rhs) {
                return Ok(Verdict::Fail(w));
            }
            if let Some(w) = scalar_witness(&format!("W{mu}{nu} exchanged"), &w, &w_two(nu, mu)?) {
                return Ok(Verdict::Fail(w));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Runs `body` for every configured framing.
fn per_framing(
    cfg: &CheckConfig,
    params: &mut Params,
    with_q_order: bool,
    body: impl Fn(i32) -> Result<Option<String>, Error>,
) -> Result<Verdict, Error> {
    set(params, "degree", json!(cfg.max_degree));
    if with_q_order {
        set(params, "q_order", json!(cfg.q_order));
    }
    set(params, "framings", json!(cfg.framings));
    if cfg.framings.is_empty() {
        return Ok(Verdict::Skip("no framings selected".into()));
    }
    for &a in &cfg.framings {
        if let Some(w) = body(a)? {
            return Ok(Verdict::Fail(format!("framing {a}, {w}")));
        }
    }
    Ok(Verdict::Pass)
}

fn zb_rewrite(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    let (d, k) = (cfg.max_degree, cfg.q_order);
    per_framing(cfg, params, true, |a| {
        let direct = amplitude_b(a, d, k, ZbForm::Direct)?;
        let rewritten = amplitude_b(a, d, k, ZbForm::Rewritten)?;
        Ok(symfunc_witness(
            "amplitude",
            direct.value(),
            rewritten.value(),
        ))
    })
}

fn normalized_a(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    let (d, k) = (cfg.max_degree, cfg.q_order);
    per_framing(cfg, params, true, |a| {
        let lhs = normalize(&amplitude_a(a, d, k)?)?;
        let rhs = operator_amplitude(a, Diagram::A, d, k)?;
        Ok(symfunc_witness("amplitude", lhs.value(), rhs.value()))
    })
}

fn normalized_b(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    let (d, k) = (cfg.max_degree, cfg.q_order);
    per_framing(cfg, params, true, |a| {
        let lhs = normalize(&amplitude_b(a, d, k, ZbForm::Direct)?)?;
        let rhs = operator_amplitude(a, Diagram::B, d, k)?;
        Ok(symfunc_witness("amplitude", lhs.value(), rhs.value()))
    })
}

fn closed_state(
    cfg: &CheckConfig,
    params: &mut Params,
    diagram: Diagram,
) -> Result<Verdict, Error> {
    let d = cfg.max_degree;
    per_framing(cfg, params, false, |a| {
        let lhs = operator_state(a, diagram, d)?;
        Ok(symfunc_witness("state", &lhs, &mv_rhs(a, diagram, d)?))
    })
}

fn closed_state_a(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    closed_state(cfg, params, Diagram::A)
}

fn closed_state_b(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    closed_state(cfg, params, Diagram::B)
}

fn conifold_free_energy(cfg: &CheckConfig, params: &mut Params) -> Result<Verdict, Error> {
    let (d, k) = (cfg.max_degree, cfg.q_order);
    let max_u = 2 * k as i32;
    let vacuum = amplitude_a(0, 1, k)?.vacuum_part();
    let log = scalar_log(&vacuum, max_u)?;
    let expected = conifold_vacuum_log(k);
    for n in 1..=k as i32 {
        let m = Mono::u(2 * n);
        let got = lambda_expand(&log.coeff(m), 2)?;
        let want = lambda_expand(&expected.coeff(m), 2)?;
        if let Some(e) = (-2..=2).find(|&e| got.coeff(e) != want.coeff(e)) {
            return Ok(Verdict::Fail(format!(
                "vacuum, u^{}, lambda^{e}: lhs = {}, rhs = {}",
                2 * n,
                got.coeff(e),
                want.coeff(e)
            )));
        }
    }
    if let Some(w) = scalar_witness("vacuum", &log, &expected) {
        return Ok(Verdict::Fail(w));
    }

    let worst = Cell::new(0);
    let real = Cell::new(true);
    let verdict = per_framing(cfg, params, true, |a| {
        for diagram in [Diagram::A, Diagram::B] {
            let z = operator_amplitude(a, diagram, d, k)?;
            let table = FreeEnergyTable::from_log(&free_energy(&z)?, 1)?;
            worst.set(worst.get().max(table.max_pole_order()));
            real.set(real.get() && table.values_real());
            if let Some(((mu, kk), order)) = table.pole_orders.iter().find(|(_, &o)| o > 2) {
                return Ok(Some(format!(
                    "{diagram:?}, p{mu}, k = {kk}: pole order {order}"
                )));
            }
        }
        Ok(None)
    })?;
    if matches!(verdict, Verdict::Pass) {
        // observed, not asserted
        set(params, "max_pole_order", json!(worst.get()));
        set(params, "values_real", json!(real.get()));
    }
    Ok(verdict)
}
