//! `wasm-bindgen` exports for the static page in `www/`. Every export returns
//! plain text so the page needs no glue beyond setting `textContent`.

use std::fmt::Write as _;

use mv_core::characters::char_table;
use mv_core::partitions::enumerate_up_to;
use mv_core::vertex::{first_difference, mv_rhs, operator_state, qdim, Diagram};
use mv_core::Basis;
use wasm_bindgen::prelude::*;

const MAX_CHAR_N: u32 = 8;
const MAX_QDIM_SIZE: u32 = 5;
const MAX_CHECK_DEGREE: u32 = 5;

fn too_large(what: &str, max: u32) -> String {
    format!("{what} must be at most {max}")
}

/// Character table of `S_n`, one row per irreducible.
#[wasm_bindgen]
pub fn character_table(n: u32) -> String {
    if n > MAX_CHAR_N {
        return too_large("n", MAX_CHAR_N);
    }
    let t = match char_table(n) {
        Ok(t) => t,
        Err(e) => return e.to_string(),
    };
    let labels: Vec<String> = t.partitions().iter().map(|mu| mu.to_string()).collect();
    let width = labels.iter().map(String::len).max().unwrap_or(0).max(3);
    let mut out = format!("{:>width$} |", "");
    for l in &labels {
        let _ = write!(out, " {l:>width$}");
    }
    out.push('\n');
    for (label, row) in labels.iter().zip(t.values()) {
        let _ = write!(out, "{label:>width$} |");
        for v in row {
            let _ = write!(out, " {v:>width$}");
        }
        out.push('\n');
    }
    out
}

/// `dim_q R_μ` for every `|μ| ≤ max_size`.
#[wasm_bindgen]
pub fn qdim_table(max_size: u32) -> String {
    if max_size > MAX_QDIM_SIZE {
        return too_large("size", MAX_QDIM_SIZE);
    }
    enumerate_up_to(max_size)
        .into_iter()
        .map(|mu| format!("{mu}: {}\n", qdim(&mu).render()))
        .collect()
}

/// Compares the operator form with the closed Schur form for one framing
/// and diagram (`"a"` or `"b"`), listing the Schur coefficients on success.
#[wasm_bindgen]
pub fn check_closed_form(framing: i32, diagram: &str, degree: u32) -> String {
    if degree > MAX_CHECK_DEGREE {
        return too_large("degree", MAX_CHECK_DEGREE);
    }
    let diagram = match diagram {
        "a" => Diagram::A,
        "b" => Diagram::B,
        _ => return format!("unknown diagram `{diagram}`"),
    };
    let (lhs, rhs) = match (
        operator_state(framing, diagram, degree),
        mv_rhs(framing, diagram, degree),
    ) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(e), _) | (_, Err(e)) => return e.to_string(),
    };
    if let Some((mu, l, r)) = first_difference(&lhs, &rhs) {
        return format!("MISMATCH at s{mu}\n  operator: {l}\n  closed:   {r}\n");
    }
    let mut out = format!("agree through degree {degree}\n");
    for (mu, c) in lhs.to_basis(Basis::S).coeffs() {
        let _ = writeln!(out, "s{mu}: {c}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_character_table() {
        let t = character_table(2);
        assert_eq!(t.lines().count(), 3);
        assert!(t.ends_with("[1,1] |    -1     1\n"));
        assert_eq!(character_table(9), "n must be at most 8");
    }

    #[test]
    fn quantum_dimensions() {
        assert_eq!(qdim_table(0), "[]: 1\n");
        assert!(qdim_table(1).contains("[1]: (u^-1 - u) * (z - z^-1)^-1"));
    }

    #[test]
    fn closed_form_agreement() {
        let out = check_closed_form(-1, "b", 3);
        assert!(out.starts_with("agree through degree 3\n"));
        assert!(out.contains("s[1]: "));
        assert!(check_closed_form(0, "c", 2).starts_with("unknown diagram"));
    }
}
