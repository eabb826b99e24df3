//! Truncated bosonic Fock space of `N` complex or real scalar multiplets.
//!
//! States are exact linear combinations of *unnormalized* occupation
//! monomials `∏ (c_s^*)^{k_s} |0⟩`. In this basis
//!
//! - `c_s^*` appends one copy of slot `s`,
//! - `c_s` removes one copy and multiplies by its multiplicity,
//! - distinct monomials are orthogonal and `‖∏ (c_s^*)^{k_s}|0⟩‖² = ∏ k_s!`.
//!
//! Creation past the particle cutoff `P` yields the zero vector. Identities
//! that involve a commutator are therefore only exact on monomials with at
//! most `P − 2` particles; callers enforce that margin.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{factorial, to_string};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Complex,
    Real,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Complex => f.write_str("complex"),
            FieldKind::Real => f.write_str("real"),
        }
    }
}

/// `A` labels the `a`-oscillators, `B` the `b`-oscillators of the
/// conjugate field. Real multiplets only have `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Species {
    A,
    B,
}

/// One oscillator degree of freedom `c_i^p`. Field order is the canonical
/// sort order of monomials: species, then mode, then flavor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ModeSlot {
    pub species: Species,
    pub mode: u32,
    pub flavor: u32,
}

impl ModeSlot {
    pub fn a(mode: u32, flavor: u32) -> Self {
        ModeSlot { species: Species::A, mode, flavor }
    }

    pub fn b(mode: u32, flavor: u32) -> Self {
        ModeSlot { species: Species::B, mode, flavor }
    }
}

impl fmt::Display for ModeSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.species {
            Species::A => 'a',
            Species::B => 'b',
        };
        write!(f, "{c}_{}^{}", self.mode, self.flavor)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FockContext {
    pub kind: FieldKind,
    /// Multiplet size.
    pub n: u32,
    /// Mode truncation: modes are `1..=m`.
    pub m: u32,
    /// Particle cutoff.
    pub p: u32,
}

impl FockContext {
    pub fn new(kind: FieldKind, n: u32, m: u32, p: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::ContextViolation("mode truncation M must be at least 1".into()));
        }
        Ok(FockContext { kind, n, m, p })
    }

    pub fn complex(n: u32, m: u32, p: u32) -> Self {
        Self::new(FieldKind::Complex, n, m, p).expect("valid context")
    }

    pub fn real(n: u32, m: u32, p: u32) -> Self {
        Self::new(FieldKind::Real, n, m, p).expect("valid context")
    }

    pub fn species(&self) -> &'static [Species] {
        match self.kind {
            FieldKind::Complex => &[Species::A, Species::B],
            FieldKind::Real => &[Species::A],
        }
    }

    pub fn validate_slot(&self, slot: ModeSlot) -> Result<()> {
        if slot.mode == 0 || slot.mode > self.m {
            return Err(Error::ContextViolation(format!("{slot}: mode outside 1..={}", self.m)));
        }
        if slot.flavor == 0 || slot.flavor > self.n {
            return Err(Error::ContextViolation(format!("{slot}: flavor outside 1..={}", self.n)));
        }
        if self.kind == FieldKind::Real && slot.species == Species::B {
            return Err(Error::ContextViolation(format!("{slot}: no b-oscillators in a real context")));
        }
        Ok(())
    }

    /// Every valid slot, in canonical order.
    pub fn slots(&self) -> Vec<ModeSlot> {
        let mut out = Vec::new();
        for &species in self.species() {
            for mode in 1..=self.m {
                for flavor in 1..=self.n {
                    out.push(ModeSlot { species, mode, flavor });
                }
            }
        }
        out
    }

    /// All monomials with at most `max_particles` particles (capped at `P`).
    pub fn basis(&self, max_particles: u32) -> Vec<FockMonomial> {
        let slots = self.slots();
        let cap = max_particles.min(self.p) as usize;
        let mut out = Vec::new();
        for k in 0..=cap {
            for combo in slots.iter().copied().combinations_with_replacement(k) {
                out.push(FockMonomial::from_slots(combo));
            }
        }
        out
    }

    /// Monomials with prescribed occupation numbers per (species, mode):
    /// the joint eigenspace of all Cartan generators with that weight.
    pub fn weight_space(&self, occupation: &Occupation) -> Vec<FockMonomial> {
        let total: u32 = occupation.values().sum();
        if total > self.p || self.n == 0 && total > 0 {
            return Vec::new();
        }
        let mut partial: Vec<Vec<ModeSlot>> = vec![Vec::new()];
        for (&(species, mode), &count) in occupation {
            if count == 0 {
                continue;
            }
            let choices: Vec<Vec<u32>> =
                (1..=self.n).combinations_with_replacement(count as usize).collect();
            partial = partial
                .into_iter()
                .flat_map(|prefix| {
                    choices.iter().map(move |flavors| {
                        let mut next = prefix.clone();
                        next.extend(flavors.iter().map(|&flavor| ModeSlot { species, mode, flavor }));
                        next
                    })
                })
                .collect();
        }
        partial.into_iter().map(FockMonomial::from_slots).collect()
    }
}

/// Occupation numbers keyed by (species, mode), zero entries omitted.
pub type Occupation = BTreeMap<(Species, u32), u32>;

/// Canonical multiset of slots: sorted, with positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FockMonomial(Vec<(ModeSlot, u32)>);

impl FockMonomial {
    pub fn vacuum() -> Self {
        FockMonomial(Vec::new())
    }

    pub fn from_slots<I: IntoIterator<Item = ModeSlot>>(slots: I) -> Self {
        let mut counts: BTreeMap<ModeSlot, u32> = BTreeMap::new();
        for s in slots {
            *counts.entry(s).or_default() += 1;
        }
        FockMonomial(counts.into_iter().collect())
    }

    pub fn is_vacuum(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[(ModeSlot, u32)] {
        &self.0
    }

    pub fn particle_count(&self) -> u32 {
        self.0.iter().map(|&(_, k)| k).sum()
    }

    pub fn multiplicity(&self, slot: ModeSlot) -> u32 {
        match self.0.binary_search_by(|(s, _)| s.cmp(&slot)) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn with_added(&self, slot: ModeSlot) -> Self {
        let mut v = self.0.clone();
        match v.binary_search_by(|(s, _)| s.cmp(&slot)) {
            Ok(i) => v[i].1 += 1,
            Err(i) => v.insert(i, (slot, 1)),
        }
        FockMonomial(v)
    }

    /// Removes one copy of `slot`, returning the new monomial and the
    /// multiplicity it had (the Wick factor).
    pub fn with_removed(&self, slot: ModeSlot) -> Option<(Self, u32)> {
        let i = self.0.binary_search_by(|(s, _)| s.cmp(&slot)).ok()?;
        let k = self.0[i].1;
        let mut v = self.0.clone();
        if k == 1 {
            v.remove(i);
        } else {
            v[i].1 -= 1;
        }
        Some((FockMonomial(v), k))
    }

    pub fn occupation(&self) -> Occupation {
        let mut occ = Occupation::new();
        for &(s, k) in &self.0 {
            *occ.entry((s.species, s.mode)).or_default() += k;
        }
        occ
    }

    pub fn count_species(&self, species: Species) -> u32 {
        self.0.iter().filter(|(s, _)| s.species == species).map(|&(_, k)| k).sum()
    }

    /// `⟨m|m⟩ = ∏ k_s!`.
    pub fn norm_squared(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, &(_, k)| acc * factorial(k))
    }
}

impl fmt::Display for FockMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("|0>");
        }
        f.write_str("{")?;
        let mut first = true;
        for &(s, k) in &self.0 {
            for _ in 0..k {
                if !first {
                    f.write_str(",")?;
                }
                write!(f, "{s}")?;
                first = false;
            }
        }
        f.write_str("}")
    }
}

/// Exact finite linear combination of monomials. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FockVector {
    terms: BTreeMap<FockMonomial, Rational>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn from_monomial(m: FockMonomial) -> Self {
        let mut v = FockVector::zero();
        v.add_term(m, Rational::one());
        v
    }

    pub fn add_term(&mut self, m: FockMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &FockMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FockMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &FockMonomial> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &Rational) -> FockVector {
        if c.is_zero() {
            return FockVector::zero();
        }
        FockVector {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Extends a monomial-level map linearly.
    pub fn map_linear<F>(&self, mut f: F) -> FockVector
    where
        F: FnMut(&FockMonomial, &mut dyn FnMut(FockMonomial, Rational)),
    {
        let mut out = FockVector::zero();
        for (m, c) in &self.terms {
            f(m, &mut |img, w| out.add_term(img, c * w));
        }
        out
    }

    pub fn max_particles(&self) -> u32 {
        self.terms.keys().map(FockMonomial::particle_count).max().unwrap_or(0)
    }

    /// Coefficient vector over a fixed monomial basis; monomials outside the
    /// basis are dropped.
    pub fn coordinates(&self, basis: &BTreeMap<FockMonomial, usize>) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); basis.len()];
        for (m, c) in &self.terms {
            if let Some(&i) = basis.get(m) {
                out[i] = c.clone();
            }
        }
        out
    }

    pub fn from_coordinates(basis: &[FockMonomial], coords: &[Rational]) -> FockVector {
        let mut v = FockVector::zero();
        for (m, c) in basis.iter().zip(coords) {
            v.add_term(m.clone(), c.clone());
        }
        v
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "({})·{m}", to_string(c))?;
            first = false;
        }
        Ok(())
    }
}

impl Add<&FockVector> for &FockVector {
    type Output = FockVector;
    fn add(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&FockVector> for &FockVector {
    type Output = FockVector;
    fn sub(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &FockVector {
    type Output = FockVector;
    fn neg(self) -> FockVector {
        FockVector {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul<&FockVector> for &Rational {
    type Output = FockVector;
    fn mul(self, rhs: &FockVector) -> FockVector {
        rhs.scale(self)
    }
}

pub fn vacuum(_ctx: &FockContext) -> FockVector {
    FockVector::from_monomial(FockMonomial::vacuum())
}

/// Unchecked creation on a single monomial, honoring the cutoff.
pub(crate) fn create_mono(p: u32, slot: ModeSlot, m: &FockMonomial) -> Option<FockMonomial> {
    (m.particle_count() < p).then(|| m.with_added(slot))
}

pub fn apply_creation(ctx: &FockContext, slot: ModeSlot, v: &FockVector) -> Result<FockVector> {
    ctx.validate_slot(slot)?;
    Ok(v.map_linear(|m, emit| {
        if let Some(img) = create_mono(ctx.p, slot, m) {
            emit(img, Rational::one());
        }
    }))
}

pub fn apply_annihilation(ctx: &FockContext, slot: ModeSlot, v: &FockVector) -> Result<FockVector> {
    ctx.validate_slot(slot)?;
    Ok(v.map_linear(|m, emit| {
        if let Some((img, k)) = m.with_removed(slot) {
            emit(img, Rational::from_integer(k.into()));
        }
    }))
}

/// `⟨v1|v2⟩`. Coefficients are real, so the form is symmetric bilinear.
pub fn inner_product(v1: &FockVector, v2: &FockVector) -> Rational {
    let (small, large) = if v1.len() <= v2.len() { (v1, v2) } else { (v2, v1) };
    let mut acc = Rational::zero();
    for (m, c) in small.iter() {
        if let Some(d) = large.terms.get(m) {
            acc += c * d * Rational::from_integer(m.norm_squared());
        }
    }
    acc
}

pub fn norm_squared(v: &FockVector) -> Rational {
    inner_product(v, v)
}
