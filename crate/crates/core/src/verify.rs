//! The invariant suite behind `bilocal verify`.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::algebra::{
    apply_charge, apply_generator, apply_generator_with, apply_hamiltonian, generators, verify_structure_constants_with,
    Generator, GeneratorKind, HamiltonianSpec, Realization,
};
use crate::fock::{
    apply_annihilation, apply_creation, inner_product, vacuum, FieldKind, FockContext, FockMonomial, FockVector,
};
use crate::rational::half;
use crate::report::{to_value, CheckReport};
use crate::young_gauge::gauge_commutant_check;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub kind: FieldKind,
    #[serde(rename = "N")]
    pub n: u32,
    #[serde(rename = "M")]
    pub m: u32,
    #[serde(rename = "P")]
    pub p: u32,
    pub margin: u32,
    pub fault_injected: bool,
    pub passed: bool,
    pub checks: Vec<CheckReport>,
}

pub fn structure_check(ctx: &FockContext, margin: u32, realization: Realization) -> Result<CheckReport> {
    let s = verify_structure_constants_with(ctx, margin, realization)?;
    let mut r = CheckReport::new("structure_constants");
    r.checked = s.pairs_checked * s.monomials_checked;
    for f in &s.failures {
        r.fail(to_value(f));
    }
    r.passed = s.passed;
    Ok(r.with_details(json!({"pairs": s.pairs_checked, "monomials": s.monomials_checked})))
}

/// `[a_s, a_t*] = δ_st` on monomials with at most `P − 1` particles and
/// `[a_s*, a_t*] = 0` on those with at most `P − 2`.
pub fn ccr_check(ctx: &FockContext) -> Result<CheckReport> {
    let slots = ctx.slots();
    let basis = ctx.basis(ctx.p.saturating_sub(1));
    let mut r = CheckReport::new("ccr");
    for &s in &slots {
        for &t in &slots {
            for m in &basis {
                let v = FockVector::from_monomial(m.clone());
                let lhs = &apply_annihilation(ctx, s, &apply_creation(ctx, t, &v)?)?
                    - &apply_creation(ctx, t, &apply_annihilation(ctx, s, &v)?)?;
                let rhs = if s == t { v.clone() } else { FockVector::zero() };
                r.check(lhs == rhs, || json!({"annihilate": s.to_string(), "create": t.to_string(), "monomial": m.to_string()}));
                if m.particle_count() + 2 <= ctx.p {
                    let c = &apply_creation(ctx, s, &apply_creation(ctx, t, &v)?)?
                        - &apply_creation(ctx, t, &apply_creation(ctx, s, &v)?)?;
                    r.check(c.is_zero(), || json!({"create_pair": [s.to_string(), t.to_string()], "monomial": m.to_string()}));
                }
            }
        }
    }
    Ok(r)
}

/// `⟨u, g v⟩ = ⟨g† u, v⟩` for every generator and every nonzero matrix
/// element between monomials of at most `P − margin` particles.
pub fn adjointness_check(ctx: &FockContext, margin: u32) -> Result<CheckReport> {
    let limit = ctx.p.saturating_sub(margin);
    let basis = ctx.basis(limit);
    let gens = generators(ctx.kind, ctx.m);
    let parts: Vec<Result<CheckReport>> = gens
        .par_iter()
        .map(|&g| {
            let mut r = CheckReport::new("adjointness");
            let unit = |m: &FockMonomial| FockVector::from_monomial(m.clone());
            for (op, dual) in [(g, g.adjoint()), (g.adjoint(), g)] {
                for v in &basis {
                    let image = apply_generator(ctx, op, &unit(v))?;
                    for u in image.monomials().filter(|u| u.particle_count() <= limit) {
                        let lhs = inner_product(&unit(u), &image);
                        let rhs = inner_product(&apply_generator(ctx, dual, &unit(u))?, &unit(v));
                        r.check(lhs == rhs, || json!({"generator": op.to_string(), "bra": u.to_string(), "ket": v.to_string()}));
                    }
                }
            }
            Ok(r)
        })
        .collect();
    let mut out = CheckReport::new("adjointness");
    for p in parts {
        out.merge(p?);
    }
    Ok(out)
}

/// `E(i,j)|0⟩ = (N/2)δ_ij|0⟩`, `X(i,j)|0⟩ = 0`, and `Q|0⟩ = 0`.
pub fn vacuum_check(ctx: &FockContext, realization: Realization) -> Result<CheckReport> {
    let vac = vacuum(ctx);
    let mut r = CheckReport::new("vacuum_conditions");
    for g in generators(ctx.kind, ctx.m) {
        let expected = match g.kind {
            GeneratorKind::Xstar => continue,
            GeneratorKind::X => FockVector::zero(),
            _ if g.i == g.j => vac.scale(&half(ctx.n)),
            _ => FockVector::zero(),
        };
        let got = apply_generator_with(ctx, realization, g, &vac)?;
        r.check(got == expected, || json!({"generator": g.to_string(), "got": got.to_string()}));
    }
    if ctx.kind == FieldKind::Complex {
        let q = apply_charge(ctx, &vac)?;
        r.check(q.is_zero(), || json!({"generator": "Q", "got": q.to_string()}));
    }
    Ok(r)
}

/// Only the vacuum monomial carries the vacuum Cartan eigenvalues, so the
/// joint solution space of the vacuum conditions is one-dimensional.
pub fn vacuum_uniqueness_check(ctx: &FockContext) -> Result<CheckReport> {
    let mut r = CheckReport::new("vacuum_uniqueness");
    let diag: Vec<Generator> = generators(ctx.kind, ctx.m)
        .into_iter()
        .filter(|g| matches!(g.kind, GeneratorKind::Eplus | GeneratorKind::Eminus | GeneratorKind::E) && g.i == g.j)
        .collect();
    let target = half(ctx.n);
    let mut solutions = Vec::new();
    for m in ctx.basis(ctx.p) {
        let v = FockVector::from_monomial(m.clone());
        let mut all = true;
        for &g in &diag {
            if apply_generator(ctx, g, &v)? != v.scale(&target) {
                all = false;
                break;
            }
        }
        if all {
            solutions.push(m.to_string());
        }
    }
    r.check(solutions == vec![FockMonomial::vacuum().to_string()], || json!({"solutions": solutions}));
    Ok(r)
}

fn energy_shift(spec: &HamiltonianSpec, g: Generator) -> crate::Rational {
    let e = |i: u32| spec.energies[i as usize - 1].clone();
    match g.kind {
        GeneratorKind::X => -(e(g.i) + e(g.j)),
        GeneratorKind::Xstar => e(g.i) + e(g.j),
        _ => e(g.i) - e(g.j),
    }
}

/// `[H, g] = (shift) g` with `ε_i = i`, and `[Q, g] = 0` for complex fields.
pub fn grading_check(ctx: &FockContext, margin: u32) -> Result<CheckReport> {
    let spec = HamiltonianSpec::linear(ctx, ctx.m)?;
    let basis = ctx.basis(ctx.p.saturating_sub(margin));
    let mut r = CheckReport::new("grading");
    for g in generators(ctx.kind, ctx.m) {
        let shift = energy_shift(&spec, g);
        for m in &basis {
            let v = FockVector::from_monomial(m.clone());
            let gv = apply_generator(ctx, g, &v)?;
            let hg = &apply_hamiltonian(ctx, &spec, &gv)? - &apply_generator(ctx, g, &apply_hamiltonian(ctx, &spec, &v)?)?;
            r.check(hg == gv.scale(&shift), || json!({"commutator": "H", "generator": g.to_string(), "monomial": m.to_string()}));
            if ctx.kind == FieldKind::Complex {
                let qg = &apply_charge(ctx, &gv)? - &apply_generator(ctx, g, &apply_charge(ctx, &v)?)?;
                r.check(qg.is_zero(), || json!({"commutator": "Q", "generator": g.to_string(), "monomial": m.to_string()}));
            }
        }
    }
    Ok(r)
}

/// Every check of the suite, in a fixed order. With `inject_fault` the
/// bilocal generators are realized without the `N/2` Cartan shift.
pub fn run_suite(ctx: &FockContext, margin: u32, inject_fault: bool) -> Result<SuiteReport> {
    let realization = if inject_fault { Realization::UnshiftedCartan } else { Realization::Faithful };
    let checks = vec![
        structure_check(ctx, margin, realization)?,
        ccr_check(ctx)?,
        adjointness_check(ctx, margin)?,
        vacuum_check(ctx, realization)?,
        vacuum_uniqueness_check(ctx)?,
        grading_check(ctx, margin)?,
        gauge_commutant_check(ctx, margin)?,
    ];
    Ok(SuiteReport {
        kind: ctx.kind,
        n: ctx.n,
        m: ctx.m,
        p: ctx.p,
        margin,
        fault_injected: inject_fault,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}
