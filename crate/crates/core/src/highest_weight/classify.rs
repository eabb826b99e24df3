use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{apply_hamiltonian, HamiltonianSpec};
use crate::fock::{vacuum, FieldKind, FockContext, Occupation, Species};
use crate::highest_weight::kernel::{joint_kernel, lowering_operators};
use crate::highest_weight::label::{SectorLabel, Weight};
use crate::rational::{half, int, to_json};
use crate::young_gauge::YoungDiagram;
use crate::{Error, Rational, Result};

/// One highest weight found in the Fock window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorEntry {
    pub sector: SectorLabel,
    pub weight: Weight,
    pub multiplicity: usize,
    pub energy: Rational,
}

impl SectorEntry {
    pub fn in_bound(&self) -> bool {
        self.sector.in_bound()
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.sector.to_json();
        let obj = v.as_object_mut().expect("sector serializes to an object");
        obj.insert("weight_head".into(), self.weight.head_json());
        obj.insert("tail".into(), to_json(self.weight.tail()));
        obj.insert("multiplicity".into(), json!(self.multiplicity));
        obj.insert("energy".into(), to_json(&self.energy));
        obj.insert("in_bound".into(), json!(self.in_bound()));
        v
    }
}

fn vacuum_energy(ctx: &FockContext, spec: &HamiltonianSpec) -> Result<Rational> {
    let vac = vacuum(ctx);
    Ok(apply_hamiltonian(ctx, spec, &vac)?.coefficient(&crate::fock::FockMonomial::vacuum()))
}

/// The window `(M, P)` sees every state of energy `≤ cutoff` iff a quantum in
/// mode `M + 1` and any `P + 1` quanta both cost more than the cutoff.
pub fn check_feasible(ctx: &FockContext, spec: &HamiltonianSpec, cutoff: &Rational) -> Result<()> {
    let e0 = vacuum_energy(ctx, spec)?;
    let Some(next) = spec.energies.get(ctx.m as usize) else {
        return Err(Error::Infeasible(format!(
            "need the energy of mode {} to bound the truncation error",
            ctx.m + 1
        )));
    };
    if &(&e0 + next) <= cutoff {
        return Err(Error::Infeasible(format!(
            "cutoff {} reaches mode {} (energy {}), increase M",
            cutoff,
            ctx.m + 1,
            &e0 + next
        )));
    }
    if ctx.n > 0 {
        let cheapest = &e0 + &spec.energies[0] * int(ctx.p as i64 + 1);
        if &cheapest <= cutoff {
            return Err(Error::Infeasible(format!(
                "cutoff {cutoff} admits {} particles, increase P to at least {}",
                ctx.p + 1,
                ctx.p + 1
            )));
        }
    }
    Ok(())
}

/// Occupation patterns per `(species, mode)` with energy `≤ budget` and at
/// most `P` quanta.
fn patterns(ctx: &FockContext, spec: &HamiltonianSpec, budget: &Rational) -> Vec<(Occupation, Rational)> {
    let keys: Vec<(Species, u32)> = ctx
        .species()
        .iter()
        .flat_map(|&s| (1..=ctx.m).map(move |i| (s, i)))
        .collect();
    let mut out = Vec::new();
    fn go(
        keys: &[(Species, u32)],
        spec: &HamiltonianSpec,
        left: u32,
        budget: &Rational,
        spent: Rational,
        cur: &mut Occupation,
        out: &mut Vec<(Occupation, Rational)>,
    ) {
        let Some((&key, rest)) = keys.split_first() else {
            out.push((cur.clone(), spent));
            return;
        };
        let e = &spec.energies[key.1 as usize - 1];
        let mut k = 0;
        let mut cost = spent.clone();
        loop {
            if k > 0 {
                cur.insert(key, k);
            }
            go(rest, spec, left - k, budget, cost.clone(), cur, out);
            cur.remove(&key);
            k += 1;
            cost += e;
            if k > left || &cost > budget {
                break;
            }
        }
    }
    let particles = if ctx.n == 0 { 0 } else { ctx.p };
    go(&keys, spec, particles, budget, Rational::zero(), &mut Occupation::new(), &mut out);
    out
}

fn sector_from_occupation(ctx: &FockContext, occ: &Occupation) -> Result<(SectorLabel, Weight)> {
    let rows = |s: Species| -> Vec<u32> { (1..=ctx.m).map(|i| occ.get(&(s, i)).copied().unwrap_or(0)).collect() };
    let tail = half(ctx.n);
    let lift = |r: &[u32]| -> Vec<Rational> { r.iter().map(|&k| int(k as i64) + &tail).collect() };
    let a = rows(Species::A);
    match ctx.kind {
        FieldKind::Complex => {
            let b = rows(Species::B);
            let w = Weight::complex(lift(&a), lift(&b), tail.clone());
            let s = SectorLabel::complex(YoungDiagram::new(a)?, YoungDiagram::new(b)?, ctx.n);
            Ok((s, w))
        }
        FieldKind::Real => {
            let w = Weight::real(lift(&a), tail.clone());
            Ok((SectorLabel::real(YoungDiagram::new(a)?, ctx.n), w))
        }
    }
}

/// Joint kernel of all `X(i,j)` and all `E(i,j)`, `i < j`, in every Fock
/// weight space of energy `≤ cutoff`. Weight spaces are independent and are
/// processed in parallel; the result is sorted by energy, then sector.
pub fn classify_spectrum(ctx: &FockContext, spec: &HamiltonianSpec, cutoff: &Rational) -> Result<Vec<SectorEntry>> {
    check_feasible(ctx, spec, cutoff)?;
    let e0 = vacuum_energy(ctx, spec)?;
    if &e0 > cutoff {
        return Ok(Vec::new());
    }
    let ops = lowering_operators(ctx.kind, ctx.m);
    let found: Vec<Result<Option<SectorEntry>>> = patterns(ctx, spec, &(cutoff - &e0))
        .into_par_iter()
        .map(|(occ, excitation)| {
            let basis = ctx.weight_space(&occ);
            if basis.is_empty() {
                return Ok(None);
            }
            let dim = joint_kernel(ctx, &ops, &basis).len();
            if dim == 0 {
                return Ok(None);
            }
            let (sector, weight) = sector_from_occupation(ctx, &occ)?;
            Ok(Some(SectorEntry { sector, weight, multiplicity: dim, energy: &e0 + excitation }))
        })
        .collect();
    let mut out = Vec::new();
    for f in found {
        if let Some(e) = f? {
            out.push(e);
        }
    }
    out.sort_by(|a, b| a.energy.cmp(&b.energy).then_with(|| a.sector.cmp(&b.sector)));
    Ok(out)
}
