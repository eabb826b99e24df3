//! Acceptance criteria, one PASS/FAIL line each. Every comparison is exact.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::Instant;

use num_traits::{Signed, Zero};
use serde_json::Value;

use bilocal_core::algebra::{HamiltonianSpec, Realization};
use bilocal_core::casimir::{
    canonical_lambda, casimir_difference_check, casimir_g_verdict, casimir_k_check, gamma_closed_form, gamma_value,
    verify_gamma_identity,
};
use bilocal_core::fock::{norm_squared, vacuum, FieldKind, FockContext};
use bilocal_core::highest_weight::{
    classify_spectrum, determinant_operator, determinant_recursion_check, norm_checks, p_polynomial_check,
    weight_from_sector, SectorLabel,
};
use bilocal_core::mode_spectrum::{conformal_spectrum_check, harmonic_count, mode_ccr_coefficient, oscillator_normalization};
use bilocal_core::rational::int;
use bilocal_core::verify::{structure_check, vacuum_check};
use bilocal_core::young_gauge::{
    bijection_roundtrip_check_o, bijection_roundtrip_check_u, gauge_annihilation_check, gauge_commutant_check,
    sector_to_irrep_u, weyl_dimension_u, YoungDiagram,
};
use bilocal_core::Rational;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const KINDS: [FieldKind; 2] = [FieldKind::Complex, FieldKind::Real];

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Complex sectors with `|Y⁺| + |Y⁻| ≤ cap` and `r⁺ + r⁻ ≤ N`, listed
/// independently of the library enumeration.
fn complex_sectors(n: u32, cap: u32) -> Vec<SectorLabel> {
    let mut out = Vec::new();
    for plus in YoungDiagram::all_up_to(cap, n) {
        for minus in YoungDiagram::all_up_to(cap - plus.size(), n) {
            if plus.num_rows() + minus.num_rows() <= n {
                out.push(SectorLabel::complex(plus.clone(), minus, n));
            }
        }
    }
    out
}

fn real_sectors(n: u32, cap: u32) -> Vec<SectorLabel> {
    YoungDiagram::all_up_to(cap, n)
        .into_iter()
        .filter(|y| y.column(1) + y.column(2) <= n)
        .map(|y| SectorLabel::real(y, n))
        .collect()
}

fn sectors(kind: FieldKind, n: u32, cap: u32) -> Vec<SectorLabel> {
    match kind {
        FieldKind::Complex => complex_sectors(n, cap),
        FieldKind::Real => real_sectors(n, cap),
    }
}

fn c1_structure_constants() -> Outcome {
    let mut checked = 0;
    for kind in KINDS {
        for n in 1..=3 {
            for m in 2..=3 {
                let ctx = FockContext::new(kind, n, m, 4).map_err(err)?;
                let r = structure_check(&ctx, 2, Realization::Faithful).map_err(err)?;
                ensure(r.passed, || format!("{kind} N={n} M={m}: {:?}", r.failures.first()))?;
                checked += r.checked;
            }
        }
    }
    Ok(format!("{checked} pair-monomial checks"))
}

fn c2_vacuum() -> Outcome {
    let mut checked = 0;
    for kind in KINDS {
        for n in 0..=3 {
            let ctx = FockContext::new(kind, n, 3, 2).map_err(err)?;
            let r = vacuum_check(&ctx, Realization::Faithful).map_err(err)?;
            ensure(r.passed, || format!("{kind} N={n}: {:?}", r.failures.first()))?;
            checked += r.checked;
        }
    }
    Ok(format!("{checked} vacuum conditions"))
}

fn c3_norms() -> Outcome {
    let mut count = 0;
    for kind in KINDS {
        for n in 1..=3 {
            for s in sectors(kind, n, 3) {
                let ctx = FockContext::new(kind, n, s.max_rows().max(1) + 1, s.size() + 2).map_err(err)?;
                let r = norm_checks(&ctx, &s).map_err(err)?;
                ensure(r.passed, || format!("{s}: {:?}", r.failures.first()))?;
                count += r.checked;
            }
        }
    }
    Ok(format!("{count} norm comparisons incl. null vectors"))
}

fn c4_determinants() -> Outcome {
    for kind in KINDS {
        for n in 1..=2u32 {
            for (order, positive) in [(n, true), (n + 1, false)] {
                let ctx = FockContext::new(kind, n, order, 2 * order).map_err(err)?;
                let d = determinant_operator(kind, 0, order).adjoint();
                let norm = norm_squared(&d.apply(&ctx, &vacuum(&ctx)).map_err(err)?);
                let ok = if positive { norm.is_positive() } else { norm.is_zero() };
                ensure(ok, || format!("{kind} N={n} ‖D_{order}*|0>‖² = {norm}"))?;
            }
        }
        let yd = YoungDiagram::new(vec![1]).map_err(err)?;
        let (vac, one) = match kind {
            FieldKind::Complex => (SectorLabel::vacuum(kind, 2), SectorLabel::complex(yd, YoungDiagram::empty(), 2)),
            FieldKind::Real => (SectorLabel::vacuum(kind, 2), SectorLabel::real(yd, 2)),
        };
        for s in [&vac, &one] {
            let ctx = FockContext::new(kind, 2, 2, s.size() + 4).map_err(err)?;
            let r = determinant_recursion_check(&ctx, s, 2).map_err(err)?;
            ensure(r.passed, || format!("recursion {s}: {:?}", r.failures.first()))?;
        }
        for n in 1..=3 {
            let r = p_polynomial_check(kind, n, 0).map_err(err)?;
            ensure(r.passed, || format!("p-polynomial {kind} n={n}: {:?}", r.failures))?;
        }
    }
    Ok("null/positive determinants, recursions, p-polynomials n=1..3".into())
}

fn c5_casimir() -> Outcome {
    let mut ck = 0;
    let mut closed = 0;
    for kind in KINDS {
        for n in 1..=3 {
            for s in sectors(kind, n, 3) {
                for rank in s.max_rows().max(1)..=3 {
                    let ctx = FockContext::new(kind, n, rank, s.size()).map_err(err)?;
                    let r = casimir_k_check(&ctx, &s, rank).map_err(err)?;
                    ensure(r.passed, || format!("C_k {s} n={rank}: {:?}", r.failures.first()))?;
                    ck += 1;
                }
                let rank = s.max_rows() + 1;
                let w = weight_from_sector(&s).map_err(err)?;
                let g = gamma_value(&w, &canonical_lambda(&s, rank).map_err(err)?, rank).map_err(err)?;
                ensure(g == gamma_closed_form(&s), || format!("γ {s}: {g} vs {}", gamma_closed_form(&s)))?;
                ensure(!g.is_negative(), || format!("γ {s} negative"))?;
                closed += 1;
            }
        }
        for n in 1..=3 {
            let r = casimir_difference_check(kind, n);
            ensure(r.passed, || format!("C_k − C_g {kind} n={n}"))?;
        }
    }
    let one = YoungDiagram::new(vec![1]).map_err(err)?;
    let empty = YoungDiagram::empty();
    let mut identity = 0;
    for n in 1..=2 {
        let cases = [
            SectorLabel::vacuum(FieldKind::Complex, n),
            SectorLabel::complex(one.clone(), empty.clone(), n),
            SectorLabel::complex(empty.clone(), one.clone(), n),
            SectorLabel::vacuum(FieldKind::Real, n),
            SectorLabel::real(one.clone(), n),
        ];
        for s in cases {
            let rank = s.max_rows() + 1;
            let ctx = FockContext::new(s.kind(), n, rank, s.size() + 2).map_err(err)?;
            let r = verify_gamma_identity(&ctx, &s, rank).map_err(err)?;
            ensure(r.passed, || format!("γ identity {s}: {:?}", r.failures))?;
            identity += 1;
        }
    }
    let mut delta_form = 0;
    let mut lambda_form = 0;
    for kind in KINDS {
        for n in 1..=2 {
            for s in sectors(kind, n, 2) {
                let rank = s.max_rows().max(1);
                let ctx = FockContext::new(kind, n, rank, s.size() + 2).map_err(err)?;
                let r = casimir_g_verdict(&ctx, &s, rank).map_err(err)?;
                ensure(r.passed, || format!("C_g {s}: {:?}", r.failures))?;
                delta_form += 1;
                if r.details["lambda_form_matches"] == Value::Bool(true) {
                    lambda_form += 1;
                }
            }
        }
    }
    Ok(format!(
        "C_k on {ck} ground states, γ closed form on {closed} sectors, identity on {identity}; \
         C_g = (h+δ,h+δ)−(δ,δ) on {delta_form}/{delta_form}, (h+δ,h+δ)−(λ,λ) only on {lambda_form}"
    ))
}

fn energy(s: &SectorLabel) -> u32 {
    let rows: Vec<u32> = match s {
        SectorLabel::Complex { plus, minus, .. } => {
            let mut r = plus.rows().to_vec();
            for (i, &x) in minus.rows().iter().enumerate() {
                if i < r.len() { r[i] += x } else { r.push(x) }
            }
            r
        }
        SectorLabel::Real { y, .. } => y.rows().to_vec(),
    };
    rows.iter().enumerate().map(|(i, &k)| (i as u32 + 1) * k).sum()
}

fn c6_classification() -> Outcome {
    let ctx = FockContext::complex(2, 3, 6);
    let spec = HamiltonianSpec::linear(&ctx, 4).map_err(err)?;
    let found = classify_spectrum(&ctx, &spec, &int(2)).map_err(err)?;
    let expected: BTreeMap<SectorLabel, u32> = complex_sectors(2, 2)
        .into_iter()
        .filter(|s| energy(s) <= 2 && s.max_rows() <= 3)
        .map(|s| (s.clone(), energy(&s)))
        .collect();
    let got: BTreeMap<SectorLabel, u32> = found
        .iter()
        .map(|e| (e.sector.clone(), e.energy.to_integer().try_into().unwrap_or(u32::MAX)))
        .collect();
    ensure(got == expected, || format!("complex sectors differ: got {:?}", got.keys().map(|s| s.to_string()).collect::<Vec<_>>()))?;
    for e in &found {
        ensure(e.in_bound(), || format!("{} out of bound", e.sector))?;
        let dim = weyl_dimension_u(&sector_to_irrep_u(&e.sector).map_err(err)?, 2).map_err(err)?;
        ensure(dim == e.multiplicity as u64, || format!("{}: multiplicity {} vs dim {dim}", e.sector, e.multiplicity))?;
    }
    let rctx = FockContext::real(2, 2, 4);
    let rspec = HamiltonianSpec::linear(&rctx, 3).map_err(err)?;
    let rfound = classify_spectrum(&rctx, &rspec, &int(2)).map_err(err)?;
    let rexpected: Vec<SectorLabel> = real_sectors(2, 2).into_iter().filter(|s| energy(s) <= 2).collect();
    let rgot: Vec<SectorLabel> = rfound.iter().map(|e| e.sector.clone()).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    let mut rexp_sorted = rexpected.clone();
    rexp_sorted.sort();
    ensure(rgot == rexp_sorted, || format!("real sectors differ: {rgot:?}"))?;
    ensure(rfound.iter().all(|e| e.in_bound()), || "real sector beyond r + s ≤ 2".into())?;
    Ok(format!("{} complex sectors with Weyl-dimension multiplicities, {} real", found.len(), rfound.len()))
}

fn c7_dictionary() -> Outcome {
    let mut pairs = 0;
    for n in 1..=3 {
        let r = bijection_roundtrip_check_u(n, 4);
        ensure(r.passed, || format!("U({n}): {:?}", r.failures))?;
    }
    for n in 2..=4 {
        let r = bijection_roundtrip_check_o(n, 4);
        ensure(r.passed, || format!("O({n}): {:?}", r.failures))?;
        for row in &r.rows {
            let rows = row.sector["Y"].as_array().map(Vec::len).unwrap_or(0) as u32;
            let should = n % 2 == 0 && 2 * rows == n;
            ensure(row.equivalent.is_some() == should, || format!("O({n}) identification at {}", row.sector))?;
            pairs += usize::from(should);
        }
    }
    Ok(format!("U(1..3), O(2..4) up to 4 boxes; {pairs} identified pairs"))
}

fn c8_gauge() -> Outcome {
    for kind in KINDS {
        for n in 1..=3 {
            let ctx = FockContext::new(kind, n, 2, 4).map_err(err)?;
            let r = gauge_commutant_check(&ctx, 2).map_err(err)?;
            ensure(r.passed, || format!("{kind} N={n}: {:?}", r.failures.first()))?;
        }
    }
    let mut states = 0;
    for n in 1..=3 {
        for s in complex_sectors(n, 3) {
            let ctx = FockContext::complex(n, s.max_rows().max(1), s.size());
            let r = gauge_annihilation_check(&ctx, &s).map_err(err)?;
            ensure(r.passed, || format!("{s}: {:?}", r.failures.first()))?;
            states += 1;
        }
    }
    Ok(format!("commutant for N=1..3, raising gauge generators kill {states} complex ground states"))
}

fn c9_modes() -> Outcome {
    for ell in 0..=10u32 {
        let h = harmonic_count(4, ell).map_err(err)?;
        ensure(h == u64::from((ell + 1) * (ell + 1)), || format!("h_{ell} = {h}"))?;
        for d in [4, 6, 8] {
            let prod: Rational = oscillator_normalization(ell, d).map_err(err)? * mode_ccr_coefficient(ell, d).map_err(err)?;
            ensure(prod == int(1), || format!("D={d} ℓ={ell}: {prod}"))?;
        }
    }
    for kind in KINDS {
        for n in 1..=2 {
            for (d, count) in [(4, 5), (6, 7)] {
                let ctx = FockContext::new(kind, n, count as u32, 2).map_err(err)?;
                let r = conformal_spectrum_check(&ctx, d, count).map_err(err)?;
                ensure(r.passed, || format!("{kind} N={n} D={d}: {:?}", r.failures.first()))?;
            }
        }
    }
    Ok("h_ℓ = (ℓ+1)², normalizations, one-particle degeneracies N·h_ℓ".into())
}

fn run_cli(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_bilocal")).args(args).output().map_err(err)?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn c10_cli() -> Outcome {
    let runs: [(&[&str], i32); 9] = [
        (&["verify", "--kind", "complex", "--N", "2", "--M", "2", "--P", "4"], 0),
        (&["verify", "--kind", "real", "--N", "1", "--M", "2", "--P", "4"], 0),
        (&["classify", "--N", "2", "--M", "3", "--P", "6", "--cutoff", "2"], 0),
        (&["gram", "--N", "1", "--M", "1", "--P", "3", "--level", "1"], 0),
        (&["map-irreps", "--group", "U", "--N", "2", "--cap", "2"], 0),
        (&["map-irreps", "--group", "O", "--N", "3", "--cap", "2"], 0),
        (&["spectrum", "--D", "4", "--count", "14"], 0),
        (&["verify", "--N", "1", "--M", "2", "--P", "4", "--inject-fault"], 1),
        (&["verify", "--N", "-1"], 2),
    ];
    for (args, code) in runs {
        let (c1, o1) = run_cli(args)?;
        let (c2, o2) = run_cli(args)?;
        ensure(c1 == code && c2 == code, || format!("{args:?}: exit {c1}/{c2}, expected {code}"))?;
        ensure(o1 == o2, || format!("{args:?}: output differs between runs"))?;
        if code != 2 {
            let text = String::from_utf8(o1).map_err(err)?;
            let parsed: Value = serde_json::from_str(&text).map_err(err)?;
            let again = format!("{}\n", serde_json::to_string_pretty(&parsed).map_err(err)?);
            ensure(again == text, || format!("{args:?}: JSON does not round-trip"))?;
        }
    }
    Ok("9 configs over 5 subcommands byte-identical, exit codes 0/1/2".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("structure constants", c1_structure_constants),
        ("vacuum conditions", c2_vacuum),
        ("norm oracles", c3_norms),
        ("determinant relations", c4_determinants),
        ("Casimirs and gamma", c5_casimir),
        ("classification completeness", c6_classification),
        ("gauge dictionary", c7_dictionary),
        ("gauge commutant", c8_gauge),
        ("mode spectrum", c9_modes),
        ("CLI determinism and exit codes", c10_cli),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
