//! Flavor generators. Complex fields carry `u(N)`:
//! `E^{pq} = Σ_i (a_i^{p*} a_i^q − b_i^{q*} b_i^p)`; real fields carry
//! `so(N)`: `L^{pq} = Σ_i (a_i^{p*} a_i^q − a_i^{q*} a_i^p)`. The mode sum is
//! cut at `i ≤ M`, which is exact on the truncated space.

use rayon::prelude::*;
use serde_json::json;

use crate::algebra::{apply_generator, generators, Generator};
use crate::fock::{FieldKind, FockContext, FockMonomial, FockVector, ModeSlot};
use crate::highest_weight::{build_ground_state, SectorLabel};
use crate::rational::int;
use crate::report::CheckReport;
use crate::{Error, Result};

pub type GaugeReport = CheckReport;

fn hop(m: &FockMonomial, from: ModeSlot, to: ModeSlot) -> Option<(FockMonomial, u32)> {
    let (rest, k) = m.with_removed(from)?;
    Some((rest.with_added(to), k))
}

pub fn apply_gauge_generator(ctx: &FockContext, p: u32, q: u32, v: &FockVector) -> Result<FockVector> {
    if p == 0 || q == 0 || p > ctx.n || q > ctx.n {
        return Err(Error::ContextViolation(format!("flavor pair ({p},{q}) outside 1..={}", ctx.n)));
    }
    Ok(v.map_linear(|m, emit| {
        for i in 1..=ctx.m {
            let terms = match ctx.kind {
                FieldKind::Complex => [
                    (ModeSlot::a(i, q), ModeSlot::a(i, p), 1),
                    (ModeSlot::b(i, p), ModeSlot::b(i, q), -1),
                ],
                FieldKind::Real => [
                    (ModeSlot::a(i, q), ModeSlot::a(i, p), 1),
                    (ModeSlot::a(i, p), ModeSlot::a(i, q), -1),
                ],
            };
            for (from, to, sign) in terms {
                if let Some((img, k)) = hop(m, from, to) {
                    emit(img, int(sign * k as i64));
                }
            }
        }
    }))
}

/// `[G^{pq}, g] = 0` for every flavor pair and every bilocal generator, on
/// all monomials with at most `P − margin` particles.
pub fn gauge_commutant_check(ctx: &FockContext, margin: u32) -> Result<GaugeReport> {
    if margin < 2 {
        return Err(Error::ContextViolation("margin must be at least 2".into()));
    }
    let basis = ctx.basis(ctx.p.saturating_sub(margin));
    let mut jobs: Vec<(u32, u32, Generator)> = Vec::new();
    for p in 1..=ctx.n {
        for q in 1..=ctx.n {
            for g in generators(ctx.kind, ctx.m) {
                jobs.push((p, q, g));
            }
        }
    }
    let results: Vec<CheckReport> = jobs
        .par_iter()
        .map(|&(p, q, g)| {
            let mut r = CheckReport::new("gauge_commutant");
            for m in &basis {
                let v = FockVector::from_monomial(m.clone());
                let gv = apply_generator(ctx, g, &v).expect("valid generator");
                let lhs = apply_gauge_generator(ctx, p, q, &gv).expect("valid flavors");
                let gauge_v = apply_gauge_generator(ctx, p, q, &v).expect("valid flavors");
                let rhs = apply_generator(ctx, g, &gauge_v).expect("valid generator");
                let diff = &lhs - &rhs;
                r.check(diff.is_zero(), || {
                    json!({"flavors": [p, q], "generator": g.to_string(), "monomial": m.to_string(), "commutator": diff.to_string()})
                });
            }
            r
        })
        .collect();
    let mut report = CheckReport::new("gauge_commutant");
    for r in results {
        report.merge(r);
    }
    Ok(report)
}

/// `E^{pq}|h⟩ = 0` for `p < q` on the built ground state of a complex sector.
pub fn gauge_annihilation_check(ctx: &FockContext, sector: &SectorLabel) -> Result<GaugeReport> {
    if ctx.kind != FieldKind::Complex {
        return Err(Error::Unsupported(
            "ground-state annihilation by flavor raising operators is checked for complex fields".into(),
        ));
    }
    let h = build_ground_state(ctx, sector)?;
    let mut report = CheckReport::new("gauge_annihilation");
    for p in 1..=ctx.n {
        for q in p + 1..=ctx.n {
            let img = apply_gauge_generator(ctx, p, q, &h)?;
            report.check(img.is_zero(), || {
                json!({"sector": sector.to_string(), "flavors": [p, q], "image": img.to_string()})
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::vacuum;

    #[test]
    fn gauge_generator_moves_flavor() {
        let ctx = FockContext::complex(2, 1, 2);
        let a2 = FockVector::from_monomial(FockMonomial::from_slots([ModeSlot::a(1, 2)]));
        let a1 = FockVector::from_monomial(FockMonomial::from_slots([ModeSlot::a(1, 1)]));
        assert_eq!(apply_gauge_generator(&ctx, 1, 2, &a2).unwrap(), a1);
        assert!(apply_gauge_generator(&ctx, 1, 2, &vacuum(&ctx)).unwrap().is_zero());
        assert!(apply_gauge_generator(&ctx, 1, 3, &a1).is_err());
    }

    #[test]
    fn commutant_small() {
        assert!(gauge_commutant_check(&FockContext::complex(2, 2, 4), 2).unwrap().passed);
        assert!(gauge_commutant_check(&FockContext::real(2, 2, 4), 2).unwrap().passed);
    }
}
