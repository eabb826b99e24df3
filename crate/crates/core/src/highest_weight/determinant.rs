use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::algebra::{apply_generator, Generator, OperatorExpr};
use crate::fock::{norm_squared, vacuum, FieldKind, FockContext};
use crate::highest_weight::ground::build_ground_state;
use crate::highest_weight::label::{weight_from_sector, SectorLabel, Weight};
use crate::rational::{int, to_json, vec_to_json};
use crate::report::CheckReport;
use crate::{Error, Rational, Result};

fn sign(perm: &[usize]) -> i64 {
    let inv = (0..perm.len())
        .flat_map(|a| (a + 1..perm.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| perm[a] > perm[b])
        .count();
    if inv % 2 == 0 { 1 } else { -1 }
}

/// `D^{(r)}_n = det X(i,j)` over `r < i, j ≤ r + n`, expanded into `n!`
/// words. The `X` commute, so the word order is immaterial.
pub fn determinant_operator(field: FieldKind, r: u32, n: u32) -> OperatorExpr {
    let mut out = OperatorExpr::zero();
    for perm in (0..n as usize).permutations(n as usize) {
        let word: Vec<Generator> = perm
            .iter()
            .enumerate()
            .map(|(i, &k)| Generator::x(r + i as u32 + 1, r + k as u32 + 1))
            .collect();
        out.add_term(word, int(sign(&perm)));
    }
    out.identified(field)
}

/// `∏_{m ≤ n} (h⁺_m + h⁻_m − m + 1)` (complex) or `∏ 2(2h_m − m + 1)` (real).
pub fn determinant_recursion_coefficient(w: &Weight, n: u32) -> Rational {
    (1..=n)
        .map(|m| {
            let shift = int(1 - m as i64);
            match w.kind() {
                FieldKind::Complex => w.h_plus(m) + w.h_minus(m) + shift,
                FieldKind::Real => int(2) * (int(2) * w.h(m) + shift),
            }
        })
        .fold(Rational::one(), |acc, x| acc * x)
}

/// Applies `D_n^*` and then `X(1,1)⋯X(n,n)` to the ground state of `s` and
/// compares with the closed-form multiple of the ground state.
pub fn determinant_recursion_check(ctx: &FockContext, s: &SectorLabel, n: u32) -> Result<CheckReport> {
    if n > ctx.m {
        return Err(Error::TruncationTooSmall(format!("D_{n} needs M ≥ {n}")));
    }
    let need = s.size() + 2 * n;
    if ctx.p < need {
        return Err(Error::TruncationTooSmall(format!("D_{n}^* over {s} needs P ≥ {need}")));
    }
    let h = build_ground_state(ctx, s)?;
    let w = weight_from_sector(s)?;
    let mut v = determinant_operator(ctx.kind, 0, n).adjoint().apply(ctx, &h)?;
    for m in (1..=n).rev() {
        v = apply_generator(ctx, Generator::x(m, m), &v)?;
    }
    let c = determinant_recursion_coefficient(&w, n);
    let mut report = CheckReport::new("determinant_recursion");
    let ok = v == h.scale(&c);
    report.check(ok, || json!({"sector": s.to_string(), "n": n, "closed_form": to_json(&c), "got": v.to_string()}));
    Ok(report.with_details(json!({"sector": s.to_json(), "n": n, "coefficient": to_json(&c)})))
}

/// `‖D^{(r)}_n{}^*|0⟩‖²` for `N = 0..=n+2`: zero below `N = n`, positive
/// from `N = n` on, and a polynomial of degree `n` in `N` (all finite
/// differences of order `n + 1` vanish).
pub fn p_polynomial_check(kind: FieldKind, n: u32, r: u32) -> Result<CheckReport> {
    let d = determinant_operator(kind, r, n).adjoint();
    let mut values = Vec::new();
    for big_n in 0..=n + 2 {
        let ctx = FockContext::new(kind, big_n, (r + n).max(1), 2 * n)?;
        values.push(norm_squared(&d.apply(&ctx, &vacuum(&ctx))?));
    }
    let mut report = CheckReport::new("p_polynomial");
    for (big_n, v) in values.iter().enumerate() {
        let ok = if (big_n as u32) < n { v.is_zero() } else { v.is_positive() };
        report.check(ok, || json!({"n": n, "N": big_n, "norm": to_json(v)}));
    }
    let mut diffs = values.clone();
    for _ in 0..=n {
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    for dv in &diffs {
        report.check(dv.is_zero(), || json!({"n": n, "finite_difference": to_json(dv)}));
    }
    Ok(report.with_details(json!({"kind": kind, "n": n, "r": r, "norms": vec_to_json(&values)})))
}
