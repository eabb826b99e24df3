//! Mode content of a free conformal field in even `D ≥ 4`: spherical
//! harmonic degeneracies `h_ℓ`, energies `ε = ℓ + d₀` with `d₀ = (D−2)/2`,
//! a fixed enumeration of modes, the residue functional on Fourier labels,
//! and the oscillator normalization.
//!
//! The enumeration orders modes by `ℓ`, then `μ`. Any other order within a
//! shell would serve equally well; this one is a convention.

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::json;

use crate::algebra::{apply_hamiltonian, HamiltonianSpec};
use crate::fock::{FockContext, FockMonomial, FockVector, Species};
use crate::rational::{frac, int, to_json};
use crate::report::CheckReport;
use crate::{Error, Rational, Result};

fn check_dimension(d: u32) -> Result<()> {
    if d < 4 || !d.is_multiple_of(2) {
        return Err(Error::ContextViolation(format!("D must be even and at least 4, got {d}")));
    }
    Ok(())
}

/// `d₀ = (D − 2)/2`.
pub fn d0(d: u32) -> Rational {
    frac(d as i64 - 2, 2)
}

/// `h_ℓ = (D−2+2ℓ)/(D−2+ℓ) · C(D−2+ℓ, D−2)`.
pub fn harmonic_count(d: u32, ell: u32) -> Result<u64> {
    check_dimension(d)?;
    let top = d - 2 + ell;
    let c = binomial(BigUint::from(top), BigUint::from(d - 2));
    let num = c * BigUint::from(d - 2 + 2 * ell);
    let den = BigUint::from(top);
    debug_assert_eq!(&num % &den, BigUint::from(0u32));
    (num / den).to_u64().ok_or_else(|| Error::ContextViolation("harmonic count overflows u64".into()))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ModeLabel {
    #[serde(rename = "D")]
    pub d: u32,
    pub ell: u32,
    pub mu: u64,
}

impl ModeLabel {
    pub fn new(d: u32, ell: u32, mu: u64) -> Result<Self> {
        let h = harmonic_count(d, ell)?;
        if mu == 0 || mu > h {
            return Err(Error::ContextViolation(format!("μ = {mu} outside 1..={h} for ℓ = {ell}")));
        }
        Ok(ModeLabel { d, ell, mu })
    }

    pub fn d0(&self) -> Rational {
        d0(self.d)
    }

    pub fn energy(&self) -> Rational {
        int(self.ell as i64) + self.d0()
    }
}

/// Label of `f_{n,ℓ,μ}(z) = (z²)ⁿ h_{ℓ,μ}(z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FourierLabel {
    pub n: i64,
    pub ell: u32,
    pub mu: u64,
}

/// The first `count` modes by energy, then `(ℓ, μ)`.
pub fn enumerate_modes(d: u32, count: usize) -> Result<Vec<(ModeLabel, Rational)>> {
    check_dimension(d)?;
    let mut out = Vec::with_capacity(count);
    let mut ell = 0;
    while out.len() < count {
        let h = harmonic_count(d, ell)?;
        for mu in 1..=h {
            if out.len() == count {
                break;
            }
            let m = ModeLabel { d, ell, mu };
            let e = m.energy();
            out.push((m, e));
        }
        ell += 1;
    }
    Ok(out)
}

/// `δ_{n,−D/2} δ_{ℓ,0}`.
pub fn residue(label: FourierLabel, d: u32) -> u32 {
    u32::from(label.n == -(d as i64 / 2) && label.ell == 0)
}

/// `(ℓ + d₀)/d₀`, the square of the factor relating `a` to `φ`.
pub fn oscillator_normalization(ell: u32, d: u32) -> Result<Rational> {
    check_dimension(d)?;
    Ok((int(ell as i64) + d0(d)) / d0(d))
}

/// `d₀/(ℓ + d₀)`, the commutator coefficient of the unnormalized modes.
pub fn mode_ccr_coefficient(ell: u32, d: u32) -> Result<Rational> {
    check_dimension(d)?;
    Ok(d0(d) / (int(ell as i64) + d0(d)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumRow {
    pub ell: u32,
    pub h: u64,
    #[serde(serialize_with = "ser_rational")]
    pub energy: Rational,
    pub cumulative: u64,
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    to_json(q).serialize(s)
}

/// One row per shell touched by the first `count` modes. The last shell
/// may be partial; `cumulative` is capped at `count`.
pub fn spectrum_table(d: u32, count: usize) -> Result<Vec<SpectrumRow>> {
    check_dimension(d)?;
    let mut rows = Vec::new();
    let mut total = 0u64;
    let mut ell = 0;
    while (total as usize) < count {
        let h = harmonic_count(d, ell)?;
        total = (total + h).min(count as u64);
        rows.push(SpectrumRow { ell, h, energy: int(ell as i64) + d0(d), cumulative: total });
        ell += 1;
    }
    Ok(rows)
}

/// With mode `i` of the context carrying the `i`-th enumerated energy, the
/// Hamiltonian is diagonal with eigenvalue the sum of slot energies on every
/// monomial of at most `P` particles, and each complete shell holds `N·h_ℓ`
/// one-particle states per species.
pub fn conformal_spectrum_check(ctx: &FockContext, d: u32, count: usize) -> Result<CheckReport> {
    if ctx.m as usize != count {
        return Err(Error::ContextViolation(format!("spectrum check needs M = count, got M = {} and count = {count}", ctx.m)));
    }
    let modes = enumerate_modes(d, count)?;
    let energies: Vec<Rational> = modes.iter().map(|(_, e)| e.clone()).collect();
    let spec = HamiltonianSpec::canonical(ctx, energies.clone())?;
    let mut report = CheckReport::new("conformal_spectrum");
    for m in ctx.basis(ctx.p) {
        let expected: Rational = m.entries().iter().map(|&(s, k)| &energies[s.mode as usize - 1] * int(k as i64)).sum();
        let v = FockVector::from_monomial(m.clone());
        let got = apply_hamiltonian(ctx, &spec, &v)?;
        report.check(got == v.scale(&expected), || json!({"monomial": m.to_string(), "expected": to_json(&expected), "got": got.to_string()}));
    }
    let one_particle: Vec<FockMonomial> = if ctx.p == 0 {
        Vec::new()
    } else {
        ctx.slots().into_iter().map(|s| FockMonomial::from_slots([s])).collect()
    };
    let mut shells = Vec::new();
    for row in spectrum_table(d, count)? {
        let complete = row.cumulative
            == modes.iter().take_while(|(l, _)| l.ell <= row.ell).count() as u64
            && modes.iter().filter(|(l, _)| l.ell == row.ell).count() as u64 == row.h;
        let mut per_species = Vec::new();
        for &sp in ctx.species() {
            let found = one_particle
                .iter()
                .filter(|m| {
                    let (slot, _) = m.entries()[0];
                    slot.species == sp && modes[slot.mode as usize - 1].0.ell == row.ell
                })
                .count() as u64;
            let expected = ctx.n as u64 * row.h;
            if complete {
                report.check(found == expected, || {
                    json!({"ell": row.ell, "species": species_name(sp), "degeneracy": found, "expected": expected})
                });
            }
            per_species.push(json!({"species": species_name(sp), "degeneracy": found}));
        }
        shells.push(json!({"ell": row.ell, "energy": to_json(&row.energy), "complete": complete, "one_particle": per_species}));
    }
    Ok(report.with_details(json!({"D": d, "count": count, "N": ctx.n, "kind": ctx.kind, "shells": shells})))
}

fn species_name(s: Species) -> &'static str {
    match s {
        Species::A => "a",
        Species::B => "b",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::FieldKind;

    #[test]
    fn counts() {
        assert_eq!(harmonic_count(4, 0).unwrap(), 1);
        assert_eq!(harmonic_count(4, 2).unwrap(), 9);
        assert_eq!(harmonic_count(6, 1).unwrap(), 6);
        assert!(harmonic_count(5, 1).is_err());
        assert!(harmonic_count(2, 1).is_err());
    }

    #[test]
    fn enumeration() {
        let e: Vec<Rational> = enumerate_modes(4, 5).unwrap().into_iter().map(|(_, e)| e).collect();
        assert_eq!(e, vec![int(1), int(2), int(2), int(2), int(2)]);
        let e: Vec<Rational> = enumerate_modes(6, 2).unwrap().into_iter().map(|(_, e)| e).collect();
        assert_eq!(e, vec![int(2), int(3)]);
        assert_eq!(enumerate_modes(4, 1).unwrap()[0].1, int(1));
    }

    #[test]
    fn residues_and_normalization() {
        assert_eq!(residue(FourierLabel { n: -2, ell: 0, mu: 1 }, 4), 1);
        assert_eq!(residue(FourierLabel { n: 0, ell: 0, mu: 1 }, 4), 0);
        assert_eq!(residue(FourierLabel { n: -2, ell: 1, mu: 1 }, 4), 0);
        assert_eq!(oscillator_normalization(0, 4).unwrap(), int(1));
        assert_eq!(oscillator_normalization(1, 4).unwrap(), int(2));
        assert_eq!(oscillator_normalization(3, 8).unwrap(), int(2));
        assert_eq!(mode_ccr_coefficient(1, 4).unwrap(), frac(1, 2));
    }

    #[test]
    fn one_particle_degeneracy() {
        let cases = [(FieldKind::Complex, 1, 2), (FieldKind::Complex, 2, 4), (FieldKind::Real, 1, 1)];
        for (kind, n, total) in cases {
            let ctx = FockContext::new(kind, n, 5, 2).unwrap();
            let r = conformal_spectrum_check(&ctx, 4, 5).unwrap();
            assert!(r.passed, "{:?}", r.failures);
            let shell0 = &r.details["shells"][0]["one_particle"];
            let sum: u64 = shell0.as_array().unwrap().iter().map(|x| x["degeneracy"].as_u64().unwrap()).sum();
            assert_eq!(sum, total);
        }
    }

    #[test]
    fn table_for_fourteen_modes() {
        let t = spectrum_table(4, 14).unwrap();
        let h: Vec<u64> = t.iter().map(|r| r.h).collect();
        assert_eq!(h, vec![1, 4, 9]);
        assert_eq!(t.last().unwrap().cumulative, 14);
    }
}
