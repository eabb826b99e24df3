use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use serde_json::json;

use crate::algebra::{apply_generator, Generator, GeneratorKind};
use crate::fock::{norm_squared, FieldKind, FockContext, FockVector};
use crate::highest_weight::ground::build_ground_state;
use crate::highest_weight::label::{weight_from_sector, SectorLabel, Weight};
use crate::rational::{factorial, int, to_json};
use crate::report::CheckReport;
use crate::{Error, Rational, Result};

/// Which family of `E` generators a recursion refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    Plus,
    Minus,
    Real,
}

impl Branch {
    fn generator(self, i: u32, j: u32) -> Generator {
        let kind = match self {
            Branch::Plus => GeneratorKind::Eplus,
            Branch::Minus => GeneratorKind::Eminus,
            Branch::Real => GeneratorKind::E,
        };
        Generator::new(kind, i, j)
    }

    fn h(self, w: &Weight, i: u32) -> Rational {
        match self {
            Branch::Minus => w.h_minus(i),
            Branch::Plus | Branch::Real => w.h_plus(i),
        }
    }

    pub fn for_kind(kind: FieldKind) -> &'static [Branch] {
        match kind {
            FieldKind::Complex => &[Branch::Plus, Branch::Minus],
            FieldKind::Real => &[Branch::Real],
        }
    }
}

/// A norm ratio `‖A|h⟩‖² / ‖h‖²` with a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NormQuery {
    /// `A = X*(i,j)`.
    RecX { i: u32, j: u32 },
    /// `A = E(j,i)^n` with `i < j`.
    RecE { branch: Branch, i: u32, j: u32, n: u32 },
}

/// Closed forms: `h⁺_j + h⁻_i` for `X*(i,j)` (real: `h_i + h_j`, or `4h_i`
/// on the diagonal) and `n! ∏_{k<n} (h_i − h_j − k)` for `E(j,i)^n`.
pub fn norm_recursion_oracle(w: &Weight, q: NormQuery) -> Result<Rational> {
    match q {
        NormQuery::RecX { i, j } => Ok(match w.kind() {
            FieldKind::Complex => w.h_plus(j) + w.h_minus(i),
            FieldKind::Real if i == j => int(4) * w.h(i),
            FieldKind::Real => w.h(i) + w.h(j),
        }),
        NormQuery::RecE { branch, i, j, n } => {
            if i >= j {
                return Err(Error::ContextViolation(format!("recursion needs i < j, got ({i},{j})")));
            }
            if (branch == Branch::Real) != (w.kind() == FieldKind::Real) {
                return Err(Error::ContextViolation("branch does not match the weight".into()));
            }
            let d = branch.h(w, i) - branch.h(w, j);
            let mut v = Rational::from_integer(factorial(n));
            for k in 0..n {
                v *= &d - int(k as i64);
            }
            Ok(v)
        }
    }
}

/// `‖A|h⟩‖² / ‖h‖²` computed in Fock space.
pub fn brute_force_norm(ctx: &FockContext, h: &FockVector, q: NormQuery) -> Result<Rational> {
    let base = norm_squared(h);
    if base.is_zero() {
        return Err(Error::ContextViolation("norm ratio over a null vector".into()));
    }
    let image = match q {
        NormQuery::RecX { i, j } => apply_generator(ctx, Generator::xstar(i, j), h)?,
        NormQuery::RecE { branch, i, j, n } => {
            let g = branch.generator(j, i);
            let mut v = h.clone();
            for _ in 0..n {
                v = apply_generator(ctx, g, &v)?;
            }
            v
        }
    };
    Ok(norm_squared(&image) / base)
}

/// Every recursion on the ground state of `s`: `X*(i,j)` for all `i, j ≤ M`,
/// and `E(j,i)^n` for `i < j ≤ M` up to the null-vector order
/// `n = h_i − h_j + 1`, whose norm must vanish.
pub fn norm_checks(ctx: &FockContext, s: &SectorLabel) -> Result<CheckReport> {
    let need = s.size() + 2;
    if ctx.p < need {
        return Err(Error::TruncationTooSmall(format!("norm checks over {s} need P ≥ {need}")));
    }
    let h = build_ground_state(ctx, s)?;
    let w = weight_from_sector(s)?;
    let mut report = CheckReport::new("norm_recursions");
    let compare = |q: NormQuery, report: &mut CheckReport| -> Result<Rational> {
        let brute = brute_force_norm(ctx, &h, q)?;
        let closed = norm_recursion_oracle(&w, q)?;
        report.check(brute == closed, || {
            json!({"sector": s.to_string(), "query": q, "brute_force": to_json(&brute), "closed_form": to_json(&closed)})
        });
        Ok(brute)
    };
    for i in 1..=ctx.m {
        for j in 1..=ctx.m {
            compare(NormQuery::RecX { i, j }, &mut report)?;
        }
    }
    for &branch in Branch::for_kind(ctx.kind) {
        for i in 1..=ctx.m {
            for j in i + 1..=ctx.m {
                let d = branch.h(&w, i) - branch.h(&w, j);
                let null = (d + int(1)).to_integer().to_u32().expect("head gaps are small integers");
                for n in 1..=null {
                    let brute = compare(NormQuery::RecE { branch, i, j, n }, &mut report)?;
                    if n == null {
                        report.check(brute.is_zero(), || {
                            json!({"sector": s.to_string(), "null_vector": {"branch": branch, "i": i, "j": j, "n": n}, "norm": to_json(&brute)})
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}
