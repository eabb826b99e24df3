//! Bilocal generators of u(∞,∞) (complex fields) and sp(∞,ℝ) (real fields)
//! realized on the Fock space, together with their abstract structure
//! constants.
//!
//! Complex realization, summed over flavors `p = 1..N`:
//!
//! ```text
//! X(i,j)  = b_i·a_j          X*(i,j) = a_j^*·b_i^*
//! E+(i,j) = a_i^*·a_j + N/2 δ_ij
//! E-(i,j) = b_i^*·b_j + N/2 δ_ij
//! ```
//!
//! Real realization: `X(i,j) = a_i·a_j`, `X*(i,j) = a_i^*·a_j^*`,
//! `E(i,j) = a_i^*·a_j + N/2 δ_ij`. The `N/2` shift lives inside the `E`
//! generators so that the abstract brackets do not depend on `N`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::fock::{create_mono, FieldKind, FockContext, FockMonomial, FockVector, ModeSlot, Species};
use crate::rational::{half, int, to_string};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum GeneratorKind {
    X,
    Xstar,
    Eplus,
    Eminus,
    /// The single Cartan-type family of the real case.
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub i: u32,
    pub j: u32,
}

impl Generator {
    pub fn new(kind: GeneratorKind, i: u32, j: u32) -> Self {
        Generator { kind, i, j }
    }
    pub fn x(i: u32, j: u32) -> Self {
        Self::new(GeneratorKind::X, i, j)
    }
    pub fn xstar(i: u32, j: u32) -> Self {
        Self::new(GeneratorKind::Xstar, i, j)
    }
    pub fn eplus(i: u32, j: u32) -> Self {
        Self::new(GeneratorKind::Eplus, i, j)
    }
    pub fn eminus(i: u32, j: u32) -> Self {
        Self::new(GeneratorKind::Eminus, i, j)
    }
    pub fn e(i: u32, j: u32) -> Self {
        Self::new(GeneratorKind::E, i, j)
    }

    /// Hermitian conjugate: `X(i,j)† = X*(i,j)`, `E(i,j)† = E(j,i)`.
    pub fn adjoint(self) -> Self {
        use GeneratorKind::*;
        match self.kind {
            X => Self::new(Xstar, self.i, self.j),
            Xstar => Self::new(X, self.i, self.j),
            Eplus | Eminus | E => Self::new(self.kind, self.j, self.i),
        }
    }

    pub fn belongs_to(self, field: FieldKind) -> bool {
        use GeneratorKind::*;
        match field {
            FieldKind::Complex => matches!(self.kind, X | Xstar | Eplus | Eminus),
            FieldKind::Real => matches!(self.kind, X | Xstar | E),
        }
    }

    pub fn validate(self, ctx: &FockContext) -> Result<()> {
        if !self.belongs_to(ctx.kind) {
            return Err(Error::ContextViolation(format!("{self} is not a {} generator", ctx.kind)));
        }
        if self.i == 0 || self.j == 0 || self.i > ctx.m || self.j > ctx.m {
            return Err(Error::ContextViolation(format!("{self}: index outside 1..={}", ctx.m)));
        }
        Ok(())
    }

    /// Real-case `X`/`X*` labels are symmetric; this picks `i ≤ j`.
    fn identified(self, field: FieldKind) -> Self {
        use GeneratorKind::*;
        if field == FieldKind::Real && matches!(self.kind, X | Xstar) && self.i > self.j {
            Self::new(self.kind, self.j, self.i)
        } else {
            self
        }
    }

    fn order_key(self) -> (u8, u32, u32) {
        use GeneratorKind::*;
        let rank = match self.kind {
            Xstar => 0,
            Eplus | E => 1,
            Eminus => 2,
            X => 3,
        };
        (rank, self.i, self.j)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            GeneratorKind::X => "X",
            GeneratorKind::Xstar => "X*",
            GeneratorKind::Eplus => "E+",
            GeneratorKind::Eminus => "E-",
            GeneratorKind::E => "E",
        };
        write!(f, "{name}({},{})", self.i, self.j)
    }
}

/// All generators of the field kind with indices `≤ m`.
pub fn generators(field: FieldKind, m: u32) -> Vec<Generator> {
    use GeneratorKind::*;
    let kinds: &[GeneratorKind] = match field {
        FieldKind::Complex => &[X, Xstar, Eplus, Eminus],
        FieldKind::Real => &[X, Xstar, E],
    };
    let mut out = Vec::new();
    for &kind in kinds {
        for i in 1..=m {
            for j in 1..=m {
                out.push(Generator::new(kind, i, j));
            }
        }
    }
    out
}

/// Which Fock-space formula to use for the generators. `UnshiftedCartan`
/// drops the `N/2` central shift of the `E` generators and exists only as a
/// fault injection for the structure-constant verifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Realization {
    #[default]
    Faithful,
    UnshiftedCartan,
}

fn a(mode: u32, flavor: u32) -> ModeSlot {
    ModeSlot::a(mode, flavor)
}

fn b(mode: u32, flavor: u32) -> ModeSlot {
    ModeSlot::b(mode, flavor)
}

/// `c2 c1 |m⟩` for two annihilators (c1 acts first).
fn annihilate_pair(m: &FockMonomial, s1: ModeSlot, s2: ModeSlot) -> Option<(FockMonomial, u32)> {
    let (m1, k1) = m.with_removed(s1)?;
    let (m2, k2) = m1.with_removed(s2)?;
    Some((m2, k1 * k2))
}

fn create_pair(p: u32, m: &FockMonomial, s1: ModeSlot, s2: ModeSlot) -> Option<FockMonomial> {
    let m1 = create_mono(p, s1, m)?;
    create_mono(p, s2, &m1)
}

/// `c_to^* c_from |m⟩`.
fn hop(m: &FockMonomial, from: ModeSlot, to: ModeSlot) -> Option<(FockMonomial, u32)> {
    let (m1, k) = m.with_removed(from)?;
    Some((m1.with_added(to), k))
}

pub(crate) fn act_on_monomial(
    ctx: &FockContext,
    realization: Realization,
    g: Generator,
    m: &FockMonomial,
    emit: &mut dyn FnMut(FockMonomial, Rational),
) {
    use GeneratorKind::*;
    let (i, j) = (g.i, g.j);
    let shift = realization == Realization::Faithful && i == j && matches!(g.kind, Eplus | Eminus | E);
    for p in 1..=ctx.n {
        let image = match (ctx.kind, g.kind) {
            (FieldKind::Complex, X) => annihilate_pair(m, a(j, p), b(i, p)),
            (FieldKind::Complex, Xstar) => create_pair(ctx.p, m, b(i, p), a(j, p)).map(|x| (x, 1)),
            (FieldKind::Complex, Eplus) => hop(m, a(j, p), a(i, p)),
            (FieldKind::Complex, Eminus) => hop(m, b(j, p), b(i, p)),
            (FieldKind::Real, X) => annihilate_pair(m, a(j, p), a(i, p)),
            (FieldKind::Real, Xstar) => create_pair(ctx.p, m, a(j, p), a(i, p)).map(|x| (x, 1)),
            (FieldKind::Real, E) => hop(m, a(j, p), a(i, p)),
            _ => unreachable!("generator validated against field kind"),
        };
        if let Some((img, k)) = image {
            emit(img, int(k as i64));
        }
    }
    if shift {
        emit(m.clone(), half(ctx.n));
    }
}

pub fn apply_generator(ctx: &FockContext, g: Generator, v: &FockVector) -> Result<FockVector> {
    apply_generator_with(ctx, Realization::Faithful, g, v)
}

pub fn apply_generator_with(
    ctx: &FockContext,
    realization: Realization,
    g: Generator,
    v: &FockVector,
) -> Result<FockVector> {
    g.validate(ctx)?;
    Ok(v.map_linear(|m, emit| act_on_monomial(ctx, realization, g, m, emit)))
}

/// Noncommutative polynomial in the generators with rational coefficients.
/// The empty word is the scalar part.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OperatorExpr {
    terms: BTreeMap<Vec<Generator>, Rational>,
}

impl OperatorExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(Vec::new(), c);
        e
    }

    pub fn generator(g: Generator) -> Self {
        Self::word(vec![g], Rational::one())
    }

    pub fn word(w: Vec<Generator>, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn add_term(&mut self, w: Vec<Generator>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Generator>, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn plus(&self, other: &OperatorExpr) -> OperatorExpr {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, other: &OperatorExpr) -> OperatorExpr {
        self.plus(&other.scaled(&int(-1)))
    }

    pub fn scaled(&self, c: &Rational) -> OperatorExpr {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    /// Product `self · other` (other acts first on a state).
    pub fn times(&self, other: &OperatorExpr) -> OperatorExpr {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    /// Hermitian conjugate: reverse each word and conjugate each letter.
    pub fn adjoint(&self) -> OperatorExpr {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.iter().rev().map(|g| g.adjoint()).collect(), c.clone());
        }
        out
    }

    /// Copy with the real-case symmetric labels identified (`X(j,i) → X(i,j)`).
    pub fn identified(&self, field: FieldKind) -> OperatorExpr {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.iter().map(|g| g.identified(field)).collect(), c.clone());
        }
        out
    }

    /// Rewrites every word into the ordered form `X* … E … X` using the
    /// abstract brackets. Two expressions are equal in the enveloping
    /// algebra iff their normal forms coincide.
    pub fn normal_ordered(&self, field: FieldKind) -> OperatorExpr {
        let mut done = OperatorExpr::zero();
        let mut work: Vec<(Vec<Generator>, Rational)> = self
            .identified(field)
            .terms
            .into_iter()
            .collect();
        while let Some((w, c)) = work.pop() {
            let Some(k) = (0..w.len().saturating_sub(1))
                .find(|&k| w[k].order_key() > w[k + 1].order_key())
            else {
                done.add_term(w, c);
                continue;
            };
            let mut swapped = w.clone();
            swapped.swap(k, k + 1);
            work.push((swapped, c.clone()));
            for (coef, g) in bracket_terms(field, w[k], w[k + 1]) {
                let mut nw = w[..k].to_vec();
                nw.push(g.identified(field));
                nw.extend_from_slice(&w[k + 2..]);
                work.push((nw, &c * coef));
            }
        }
        done
    }

    pub fn apply(&self, ctx: &FockContext, v: &FockVector) -> Result<FockVector> {
        self.apply_with(ctx, Realization::Faithful, v)
    }

    pub fn apply_with(&self, ctx: &FockContext, realization: Realization, v: &FockVector) -> Result<FockVector> {
        let mut out = FockVector::zero();
        for (w, c) in &self.terms {
            let mut cur = v.clone();
            for &g in w.iter().rev() {
                if cur.is_zero() {
                    break;
                }
                cur = apply_generator_with(ctx, realization, g, &cur)?;
            }
            out = &out + &cur.scale(c);
        }
        Ok(out)
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let mag = c.abs();
            let word: Vec<String> = w.iter().map(Generator::to_string).collect();
            if w.is_empty() {
                f.write_str(&to_string(&mag))?;
            } else if mag.is_one() {
                f.write_str(&word.join(" "))?;
            } else {
                write!(f, "{} {}", to_string(&mag), word.join(" "))?;
            }
        }
        Ok(())
    }
}

fn d(a: u32, b: u32) -> bool {
    a == b
}

/// `[g1, g2]` as a list of `(coefficient, generator)` pairs.
fn bracket_terms(field: FieldKind, g1: Generator, g2: Generator) -> Vec<(Rational, Generator)> {
    use GeneratorKind::*;
    let (i, j, k, l) = (g1.i, g1.j, g2.i, g2.j);
    let mut out: Vec<(Rational, Generator)> = Vec::new();
    let mut push = |cond: bool, c: i64, g: Generator| {
        if cond {
            out.push((int(c), g));
        }
    };
    match (field, g1.kind, g2.kind) {
        (_, X, X) | (_, Xstar, Xstar) => {}
        (FieldKind::Complex, Eplus, Eminus) | (FieldKind::Complex, Eminus, Eplus) => {}
        (FieldKind::Complex, Eplus, Eplus) | (FieldKind::Complex, Eminus, Eminus) | (FieldKind::Real, E, E) => {
            push(d(j, k), 1, Generator::new(g1.kind, i, l));
            push(d(i, l), -1, Generator::new(g1.kind, k, j));
        }
        (FieldKind::Complex, Eplus, Xstar) => push(d(j, l), 1, Generator::xstar(k, i)),
        (FieldKind::Complex, Eplus, X) => push(d(i, l), -1, Generator::x(k, j)),
        (FieldKind::Complex, Eminus, Xstar) => push(d(j, k), 1, Generator::xstar(i, l)),
        (FieldKind::Complex, Eminus, X) => push(d(i, k), -1, Generator::x(j, l)),
        (FieldKind::Complex, X, Xstar) => {
            push(d(i, k), 1, Generator::eplus(l, j));
            push(d(j, l), 1, Generator::eminus(k, i));
        }
        (FieldKind::Real, E, Xstar) => {
            push(d(j, k), 1, Generator::xstar(i, l));
            push(d(j, l), 1, Generator::xstar(k, i));
        }
        (FieldKind::Real, E, X) => {
            push(d(i, k), -1, Generator::x(j, l));
            push(d(i, l), -1, Generator::x(k, j));
        }
        (FieldKind::Real, X, Xstar) => {
            push(d(j, k), 1, Generator::e(l, i));
            push(d(j, l), 1, Generator::e(k, i));
            push(d(i, k), 1, Generator::e(l, j));
            push(d(i, l), 1, Generator::e(k, j));
        }
        // Remaining orderings follow from antisymmetry.
        _ => {
            return bracket_terms(field, g2, g1)
                .into_iter()
                .map(|(c, g)| (-c, g))
                .collect();
        }
    }
    out
}

/// Right-hand side of the structure relations for `[g1, g2]`: a linear
/// combination of generators with no scalar part.
pub fn abstract_commutator(field: FieldKind, g1: Generator, g2: Generator) -> Result<OperatorExpr> {
    for g in [g1, g2] {
        if !g.belongs_to(field) {
            return Err(Error::ContextViolation(format!("{g} is not a {field} generator")));
        }
    }
    let mut out = OperatorExpr::zero();
    for (c, g) in bracket_terms(field, g1, g2) {
        out.add_term(vec![g], c);
    }
    Ok(out)
}

/// First counterexample found for one generator pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureFailure {
    pub pair: [String; 2],
    pub monomial: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub kind: FieldKind,
    pub n: u32,
    pub m: u32,
    pub p: u32,
    pub margin: u32,
    pub pairs_checked: usize,
    pub monomials_checked: usize,
    pub passed: bool,
    pub failures: Vec<StructureFailure>,
}

/// Realized commutator `g1 g2 − g2 g1` on `v`.
pub fn realized_commutator(
    ctx: &FockContext,
    realization: Realization,
    g1: Generator,
    g2: Generator,
    v: &FockVector,
) -> Result<FockVector> {
    let a = apply_generator_with(ctx, realization, g1, &apply_generator_with(ctx, realization, g2, v)?)?;
    let b = apply_generator_with(ctx, realization, g2, &apply_generator_with(ctx, realization, g1, v)?)?;
    Ok(&a - &b)
}

pub fn verify_structure_constants(ctx: &FockContext, margin: u32) -> Result<StructureReport> {
    verify_structure_constants_with(ctx, margin, Realization::Faithful)
}

/// Checks `[g1, g2] = abstract_commutator(g1, g2)` on every monomial with at
/// most `P − margin` particles, for every ordered generator pair.
pub fn verify_structure_constants_with(
    ctx: &FockContext,
    margin: u32,
    realization: Realization,
) -> Result<StructureReport> {
    if margin < 2 {
        return Err(Error::ContextViolation("margin must be at least 2".into()));
    }
    let basis = ctx.basis(ctx.p.saturating_sub(margin));
    let gens = generators(ctx.kind, ctx.m);
    let pairs: Vec<(Generator, Generator)> = gens
        .iter()
        .flat_map(|&g1| gens.iter().map(move |&g2| (g1, g2)))
        .collect();
    let failures: Vec<Option<StructureFailure>> = pairs
        .par_iter()
        .map(|&(g1, g2)| {
            let expr = abstract_commutator(ctx.kind, g1, g2).expect("generators of this field");
            for m in &basis {
                let v = FockVector::from_monomial(m.clone());
                let got = realized_commutator(ctx, realization, g1, g2, &v).expect("valid generators");
                let expected = expr.apply_with(ctx, realization, &v).expect("valid generators");
                if got != expected {
                    return Some(StructureFailure {
                        pair: [g1.to_string(), g2.to_string()],
                        monomial: m.to_string(),
                        expected: expected.to_string(),
                        got: got.to_string(),
                    });
                }
            }
            None
        })
        .collect();
    let failures: Vec<StructureFailure> = failures.into_iter().flatten().collect();
    Ok(StructureReport {
        kind: ctx.kind,
        n: ctx.n,
        m: ctx.m,
        p: ctx.p,
        margin,
        pairs_checked: pairs.len(),
        monomials_checked: basis.len(),
        passed: failures.is_empty(),
        failures,
    })
}

/// One-particle energies `ε_i` and vacuum subtractions `g_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonianSpec {
    pub energies: Vec<Rational>,
    pub subtractions: Vec<Rational>,
}

impl HamiltonianSpec {
    pub fn new(energies: Vec<Rational>, subtractions: Vec<Rational>) -> Result<Self> {
        if energies.len() != subtractions.len() {
            return Err(Error::ContextViolation("energies and subtractions differ in length".into()));
        }
        if energies.iter().any(|e| !e.is_positive()) {
            return Err(Error::ContextViolation("energies must be positive".into()));
        }
        if energies.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::ContextViolation("energies must be weakly increasing".into()));
        }
        Ok(HamiltonianSpec { energies, subtractions })
    }

    /// The conformal choice: `g_i = N` (complex) or `g_i = N/2` (real).
    pub fn canonical(ctx: &FockContext, energies: Vec<Rational>) -> Result<Self> {
        let g = central_value(ctx);
        let subtractions = vec![g; energies.len()];
        Self::new(energies, subtractions)
    }

    /// Energies `1, 2, …, len`.
    pub fn linear(ctx: &FockContext, len: u32) -> Result<Self> {
        Self::canonical(ctx, (1..=len as i64).map(int).collect())
    }
}

/// Vacuum value of `Σ_species E(i,i)`: `N` complex, `N/2` real.
fn central_value(ctx: &FockContext) -> Rational {
    match ctx.kind {
        FieldKind::Complex => int(ctx.n as i64),
        FieldKind::Real => half(ctx.n),
    }
}

/// `H = Σ_{i ≤ M} ε_i (E+_ii + E-_ii − g_i)` (complex) or
/// `Σ ε_i (E_ii − g_i)` (real), diagonal on monomials.
pub fn apply_hamiltonian(ctx: &FockContext, spec: &HamiltonianSpec, v: &FockVector) -> Result<FockVector> {
    if spec.energies.len() < ctx.m as usize {
        return Err(Error::ContextViolation(format!(
            "Hamiltonian has {} energies, context needs {}",
            spec.energies.len(),
            ctx.m
        )));
    }
    let centre = central_value(ctx);
    let constant: Rational = (0..ctx.m as usize)
        .map(|i| &spec.energies[i] * (&centre - &spec.subtractions[i]))
        .sum();
    Ok(v.map_linear(|m, emit| {
        let mut e = constant.clone();
        for &(s, k) in m.entries() {
            e += &spec.energies[s.mode as usize - 1] * int(k as i64);
        }
        emit(m.clone(), e);
    }))
}

/// `Q = Σ (E+_ii − E-_ii)`: the number of `a` quanta minus `b` quanta.
pub fn apply_charge(ctx: &FockContext, v: &FockVector) -> Result<FockVector> {
    if ctx.kind == FieldKind::Real {
        return Err(Error::Unsupported("there is no charge operator for real fields".into()));
    }
    Ok(v.map_linear(|m, emit| {
        let q = m.count_species(Species::A) as i64 - m.count_species(Species::B) as i64;
        emit(m.clone(), int(q));
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{vacuum, FockMonomial};

    fn mono(slots: &[ModeSlot]) -> FockVector {
        FockVector::from_monomial(FockMonomial::from_slots(slots.iter().copied()))
    }

    #[test]
    fn generator_examples() {
        let ctx = FockContext::complex(2, 2, 4);
        let vac = vacuum(&ctx);
        let e = apply_generator(&ctx, Generator::eplus(1, 1), &vac).unwrap();
        assert_eq!(e, vac.scale(&int(1)));
        assert!(apply_generator(&ctx, Generator::x(1, 2), &vac).unwrap().is_zero());
        let xs = apply_generator(&ctx, Generator::xstar(1, 1), &vac).unwrap();
        let expected = &mono(&[ModeSlot::b(1, 1), ModeSlot::a(1, 1)]) + &mono(&[ModeSlot::b(1, 2), ModeSlot::a(1, 2)]);
        assert_eq!(xs, expected);
    }

    #[test]
    fn generator_validation() {
        let ctx = FockContext::real(1, 2, 4);
        assert!(apply_generator(&ctx, Generator::eplus(1, 1), &vacuum(&ctx)).is_err());
        assert!(apply_generator(&ctx, Generator::x(1, 3), &vacuum(&ctx)).is_err());
    }

    #[test]
    fn commutator_examples() {
        let c = abstract_commutator(FieldKind::Complex, Generator::x(1, 2), Generator::xstar(1, 2)).unwrap();
        let expected = OperatorExpr::generator(Generator::eplus(2, 2)).plus(&OperatorExpr::generator(Generator::eminus(1, 1)));
        assert_eq!(c, expected);
        let z = abstract_commutator(FieldKind::Complex, Generator::eplus(1, 2), Generator::eminus(3, 4)).unwrap();
        assert!(z.is_zero());
        let r = abstract_commutator(FieldKind::Real, Generator::x(1, 1), Generator::xstar(1, 1)).unwrap();
        assert_eq!(r, OperatorExpr::word(vec![Generator::e(1, 1)], int(4)));
        assert!(abstract_commutator(FieldKind::Real, Generator::eplus(1, 1), Generator::x(1, 1)).is_err());
    }

    #[test]
    fn antisymmetry_of_brackets() {
        for field in [FieldKind::Complex, FieldKind::Real] {
            let gens = generators(field, 2);
            for &g1 in &gens {
                for &g2 in &gens {
                    let ab = abstract_commutator(field, g1, g2).unwrap();
                    let ba = abstract_commutator(field, g2, g1).unwrap();
                    assert!(ab.plus(&ba).identified(field).is_zero(), "{g1} {g2}");
                }
            }
        }
    }

    #[test]
    fn structure_constants_small() {
        assert!(verify_structure_constants(&FockContext::complex(1, 2, 4), 2).unwrap().passed);
        assert!(verify_structure_constants(&FockContext::real(2, 2, 4), 2).unwrap().passed);
    }

    #[test]
    fn corrupted_realization_fails_on_x_xstar() {
        let ctx = FockContext::complex(1, 2, 4);
        let report = verify_structure_constants_with(&ctx, 2, Realization::UnshiftedCartan).unwrap();
        assert!(!report.passed);
        for f in &report.failures {
            let kinds = (f.pair[0].starts_with("X"), f.pair[1].starts_with("X"));
            assert!(kinds == (true, true), "unexpected failure pair {:?}", f.pair);
        }
    }

    #[test]
    fn margin_below_two_rejected() {
        assert!(verify_structure_constants(&FockContext::complex(1, 1, 2), 1).is_err());
    }

    #[test]
    fn hamiltonian_examples() {
        let ctx = FockContext::complex(2, 3, 4);
        let spec = HamiltonianSpec::linear(&ctx, 3).unwrap();
        let vac = vacuum(&ctx);
        assert!(apply_hamiltonian(&ctx, &spec, &vac).unwrap().is_zero());
        let one = mono(&[ModeSlot::a(1, 1)]);
        assert_eq!(apply_hamiltonian(&ctx, &spec, &one).unwrap(), one);
        let mut shifted = spec.clone();
        shifted.subtractions[0] = int(3);
        assert_eq!(apply_hamiltonian(&ctx, &shifted, &vac).unwrap(), vac.scale(&int(-1)));
        let short = HamiltonianSpec::linear(&ctx, 2).unwrap();
        assert!(apply_hamiltonian(&ctx, &short, &vac).is_err());
    }

    #[test]
    fn charge_examples() {
        let ctx = FockContext::complex(1, 2, 4);
        assert!(apply_charge(&ctx, &vacuum(&ctx)).unwrap().is_zero());
        let a = mono(&[ModeSlot::a(1, 1)]);
        assert_eq!(apply_charge(&ctx, &a).unwrap(), a);
        let bb = mono(&[ModeSlot::b(1, 1), ModeSlot::b(2, 1)]);
        assert_eq!(apply_charge(&ctx, &bb).unwrap(), bb.scale(&int(-2)));
        assert!(apply_charge(&FockContext::real(1, 1, 2), &vacuum(&ctx)).is_err());
    }

    #[test]
    fn normal_ordering_of_a_commutator() {
        let field = FieldKind::Complex;
        let x = OperatorExpr::generator(Generator::x(1, 2));
        let xs = OperatorExpr::generator(Generator::xstar(1, 2));
        let comm = x.times(&xs).minus(&xs.times(&x)).normal_ordered(field);
        let rhs = abstract_commutator(field, Generator::x(1, 2), Generator::xstar(1, 2)).unwrap();
        assert_eq!(comm, rhs.normal_ordered(field));
    }

    #[test]
    fn real_labels_are_identified() {
        let ctx = FockContext::real(2, 2, 4);
        let v = mono(&[ModeSlot::a(1, 1), ModeSlot::a(2, 2)]);
        assert_eq!(
            apply_generator(&ctx, Generator::x(1, 2), &v).unwrap(),
            apply_generator(&ctx, Generator::x(2, 1), &v).unwrap()
        );
    }
}
