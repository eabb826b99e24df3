use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{apply_generator, Generator};
use crate::fock::{apply_creation, vacuum, FieldKind, FockContext, FockVector, ModeSlot, Occupation, Species};
use crate::highest_weight::kernel::{joint_kernel, primitive_integer};
use crate::highest_weight::label::{SectorLabel, Weight};
use crate::linalg::{dot, Matrix};
use crate::rational::to_json;
use crate::report::CheckReport;
use crate::{Error, Rational, Result};

/// Minimal `(M, P)` for [`build_ground_state`]: one mode per row of the
/// tallest column and one particle per box.
pub fn ground_state_requirements(s: &SectorLabel) -> (u32, u32) {
    (s.max_rows().max(1), s.size())
}

fn check_context(ctx: &FockContext, s: &SectorLabel) -> Result<()> {
    s.check_bound()?;
    if ctx.kind != s.kind() || ctx.n != s.n() {
        return Err(Error::ContextViolation(format!(
            "sector {s} does not live in a {} context with N = {}",
            ctx.kind, ctx.n
        )));
    }
    let (m, p) = ground_state_requirements(s);
    if ctx.m < m || ctx.p < p {
        return Err(Error::TruncationTooSmall(format!(
            "sector {s} needs M ≥ {m} and P ≥ {p}, context has M = {}, P = {}",
            ctx.m, ctx.p
        )));
    }
    Ok(())
}

/// `det(c_i^{p*})` over modes `1..=r` and the given flavors, applied to `v`.
fn apply_column(ctx: &FockContext, species: Species, flavors: &[u32], v: &FockVector) -> Result<FockVector> {
    let r = flavors.len();
    let mut out = FockVector::zero();
    for perm in (0..r).permutations(r) {
        let mut cur = v.clone();
        for (i, &k) in perm.iter().enumerate() {
            let slot = ModeSlot { species, mode: i as u32 + 1, flavor: flavors[k] };
            cur = apply_creation(ctx, slot, &cur)?;
        }
        let inversions = (0..r).flat_map(|a| (a + 1..r).map(move |b| (a, b))).filter(|&(a, b)| perm[a] > perm[b]).count();
        out = if inversions % 2 == 0 { &out + &cur } else { &out - &cur };
    }
    Ok(out)
}

/// Fock ground state of a sector, unnormalized with integer coefficients.
///
/// Complex: the product over columns of `Y⁺` of `a`-determinants on flavors
/// `1..=r`, times `b`-determinants on flavors `N+1−r..=N` for `Y⁻`.
/// Real: the product of `a`-determinants projected orthogonally onto the
/// joint kernel of all `X(i,j)` inside its weight space, then made primitive.
pub fn build_ground_state(ctx: &FockContext, s: &SectorLabel) -> Result<FockVector> {
    check_context(ctx, s)?;
    let mut v = vacuum(ctx);
    match s {
        SectorLabel::Complex { plus, minus, n } => {
            for r in plus.columns() {
                v = apply_column(ctx, Species::A, &(1..=r).collect::<Vec<_>>(), &v)?;
            }
            for r in minus.columns() {
                v = apply_column(ctx, Species::B, &(n + 1 - r..=*n).collect::<Vec<_>>(), &v)?;
            }
            Ok(v)
        }
        SectorLabel::Real { y, .. } => {
            for r in y.columns() {
                v = apply_column(ctx, Species::A, &(1..=r).collect::<Vec<_>>(), &v)?;
            }
            if v.is_zero() {
                return Err(Error::BoundViolated(format!("column product vanishes for {s}")));
            }
            let occupation: Occupation =
                (1..=y.num_rows()).map(|i| ((Species::A, i), y.row(i))).collect();
            let projected = project_to_kernel(ctx, &v, &occupation)?;
            if projected.is_zero() {
                return Err(Error::BoundViolated(format!("traceless part vanishes for {s}")));
            }
            Ok(primitive_integer(&projected))
        }
    }
}

/// Orthogonal projection of `t` onto `ker X ∩ W(occupation)`.
fn project_to_kernel(ctx: &FockContext, t: &FockVector, occupation: &Occupation) -> Result<FockVector> {
    let basis = ctx.weight_space(occupation);
    let index: BTreeMap<_, _> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let xs: Vec<Generator> = (1..=ctx.m).flat_map(|i| (i..=ctx.m).map(move |j| Generator::x(i, j))).collect();
    let kernel = joint_kernel(ctx, &xs, &basis);
    if kernel.is_empty() {
        return Ok(FockVector::zero());
    }
    let gram: Vec<Rational> = basis.iter().map(|m| Rational::from_integer(m.norm_squared())).collect();
    let weighted = |u: &[Rational]| -> Vec<Rational> { u.iter().zip(&gram).map(|(a, g)| a * g).collect() };
    let tc = t.coordinates(&index);
    let a = Matrix::from_rows(
        kernel.iter().map(|ki| kernel.iter().map(|kj| dot(&weighted(ki), kj)).collect()).collect(),
    );
    let b: Vec<Rational> = kernel.iter().map(|ki| dot(&weighted(ki), &tc)).collect();
    let c = a.solve(&b).ok_or_else(|| Error::Infeasible("singular kernel Gram matrix".into()))?;
    let mut coords = vec![Rational::from_integer(0.into()); basis.len()];
    for (ci, ki) in c.iter().zip(&kernel) {
        for (x, k) in coords.iter_mut().zip(ki) {
            *x += ci * k;
        }
    }
    Ok(FockVector::from_coordinates(&basis, &coords))
}

/// Checks `X(i,j) v = 0`, `E(i,j) v = 0` for `i < j` and `E(i,i) v = h_i v`
/// for all indices `≤ M`.
pub fn verify_hw_conditions(ctx: &FockContext, v: &FockVector, expected: &Weight) -> Result<CheckReport> {
    if v.is_zero() {
        return Err(Error::ContextViolation("highest-weight check on the zero vector".into()));
    }
    if expected.kind() != ctx.kind {
        return Err(Error::ContextViolation("weight and context disagree on the field kind".into()));
    }
    let mut report = CheckReport::new("highest_weight");
    let expect_zero = |g: Generator, report: &mut CheckReport| -> Result<()> {
        let img = apply_generator(ctx, g, v)?;
        report.check(img.is_zero(), || json!({"generator": g.to_string(), "image": img.to_string()}));
        Ok(())
    };
    for i in 1..=ctx.m {
        for j in 1..=ctx.m {
            expect_zero(Generator::x(i, j), &mut report)?;
            if i < j {
                match ctx.kind {
                    FieldKind::Complex => {
                        expect_zero(Generator::eplus(i, j), &mut report)?;
                        expect_zero(Generator::eminus(i, j), &mut report)?;
                    }
                    FieldKind::Real => expect_zero(Generator::e(i, j), &mut report)?,
                }
            }
        }
    }
    for i in 1..=ctx.m {
        let diag: Vec<(Generator, Rational)> = match ctx.kind {
            FieldKind::Complex => vec![(Generator::eplus(i, i), expected.h_plus(i)), (Generator::eminus(i, i), expected.h_minus(i))],
            FieldKind::Real => vec![(Generator::e(i, i), expected.h(i))],
        };
        for (g, h) in diag {
            let img = apply_generator(ctx, g, v)?;
            let want = v.scale(&h);
            report.check(img == want, || {
                json!({"generator": g.to_string(), "expected_eigenvalue": to_json(&h), "image": img.to_string()})
            });
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GramReport {
    pub sector: Value,
    pub level: u32,
    pub vectors: Vec<String>,
    pub matrix: Vec<Vec<Value>>,
    pub rank: usize,
    pub leading_minors: Vec<Value>,
    pub minors_nonnegative: bool,
    pub positive_semidefinite: bool,
}

/// Gram matrix of `X*(i₁,j₁)⋯X*(i_L,j_L)|h⟩` over all multisets of `L`
/// raising generators (real labels taken with `i ≤ j`).
pub fn gram_matrix(ctx: &FockContext, s: &SectorLabel, level: u32) -> Result<GramReport> {
    let h = build_ground_state(ctx, s)?;
    let need = s.size() + 2 * level;
    if ctx.p < need {
        return Err(Error::TruncationTooSmall(format!(
            "level {level} over {s} needs P ≥ {need}, context has P = {}",
            ctx.p
        )));
    }
    let raising: Vec<Generator> = (1..=ctx.m)
        .flat_map(|i| (1..=ctx.m).map(move |j| (i, j)))
        .filter(|&(i, j)| ctx.kind == FieldKind::Complex || i <= j)
        .map(|(i, j)| Generator::xstar(i, j))
        .collect();
    let mut labels = Vec::new();
    let mut vectors = Vec::new();
    for word in raising.iter().copied().combinations_with_replacement(level as usize) {
        let mut v = h.clone();
        for &g in word.iter().rev() {
            v = apply_generator(ctx, g, &v)?;
        }
        labels.push(if word.is_empty() { "|h>".to_string() } else { format!("{} |h>", word.iter().join(" ")) });
        vectors.push(v);
    }
    let rows: Vec<Vec<Rational>> = vectors
        .iter()
        .map(|a| vectors.iter().map(|b| crate::fock::inner_product(a, b)).collect())
        .collect();
    let mat = Matrix::from_rows(rows.clone());
    let minors = mat.leading_principal_minors();
    Ok(GramReport {
        sector: s.to_json(),
        level,
        vectors: labels,
        matrix: rows.iter().map(|r| r.iter().map(to_json).collect()).collect(),
        rank: mat.rank(),
        minors_nonnegative: minors.iter().all(|m| *m >= Rational::from_integer(0.into())),
        leading_minors: minors.iter().map(to_json).collect(),
        positive_semidefinite: mat.is_positive_semidefinite(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::FockMonomial;
    use crate::highest_weight::label::weight_from_sector;
    use crate::rational::int;
    use crate::young_gauge::YoungDiagram;

    fn yd(rows: &[u32]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn ground_state_examples() {
        let ctx = FockContext::complex(2, 2, 4);
        let vac = SectorLabel::complex(yd(&[]), yd(&[]), 2);
        assert_eq!(build_ground_state(&ctx, &vac).unwrap(), vacuum(&ctx));
        let one = SectorLabel::complex(yd(&[1]), yd(&[]), 2);
        let a11 = FockVector::from_monomial(FockMonomial::from_slots([ModeSlot::a(1, 1)]));
        assert_eq!(build_ground_state(&ctx, &one).unwrap(), a11);
        let col = SectorLabel::complex(yd(&[1, 1]), yd(&[]), 2);
        let det = build_ground_state(&ctx, &col).unwrap();
        let m = |s: [ModeSlot; 2]| FockVector::from_monomial(FockMonomial::from_slots(s));
        let expected = &m([ModeSlot::a(1, 1), ModeSlot::a(2, 2)]) - &m([ModeSlot::a(1, 2), ModeSlot::a(2, 1)]);
        assert_eq!(det, expected);
    }

    #[test]
    fn truncation_and_bound_errors() {
        let ctx = FockContext::complex(2, 1, 4);
        let col = SectorLabel::complex(yd(&[1, 1]), yd(&[]), 2);
        assert!(matches!(build_ground_state(&ctx, &col), Err(Error::TruncationTooSmall(_))));
        let bad = SectorLabel::complex(yd(&[1, 1]), yd(&[1]), 2);
        assert!(matches!(build_ground_state(&FockContext::complex(2, 2, 4), &bad), Err(Error::BoundViolated(_))));
    }

    #[test]
    fn hw_examples() {
        let ctx = FockContext::complex(1, 2, 4);
        let a11 = FockVector::from_monomial(FockMonomial::from_slots([ModeSlot::a(1, 1)]));
        let w = Weight::complex(vec![int(3) / int(2)], vec![], int(1) / int(2));
        assert!(verify_hw_conditions(&ctx, &a11, &w).unwrap().passed);
        let pair = FockVector::from_monomial(FockMonomial::from_slots([ModeSlot::a(1, 1), ModeSlot::b(1, 1)]));
        let w2 = Weight::complex(vec![int(3) / int(2)], vec![int(3) / int(2)], int(1) / int(2));
        let r = verify_hw_conditions(&ctx, &pair, &w2).unwrap();
        assert!(!r.passed);
        assert_eq!(r.failures[0]["generator"], "X(1,1)");
    }

    #[test]
    fn real_ground_state_is_traceless() {
        let ctx = FockContext::real(2, 1, 4);
        let s = SectorLabel::real(yd(&[2]), 2);
        let v = build_ground_state(&ctx, &s).unwrap();
        // a_1^{1*}a_1^{1*} − a_1^{2*}a_1^{2*} up to the content-1 scale.
        let m = |f: u32| FockVector::from_monomial(FockMonomial::from_slots([ModeSlot::a(1, f), ModeSlot::a(1, f)]));
        assert_eq!(v, &m(1) - &m(2));
        let w = weight_from_sector(&s).unwrap();
        assert!(verify_hw_conditions(&ctx, &v, &w).unwrap().passed);
    }

    #[test]
    fn gram_examples() {
        let vac1 = SectorLabel::complex(yd(&[]), yd(&[]), 1);
        let g = gram_matrix(&FockContext::complex(1, 1, 2), &vac1, 1).unwrap();
        assert_eq!(g.matrix, vec![vec![json!(1)]]);
        let vac2 = SectorLabel::complex(yd(&[]), yd(&[]), 2);
        let g2 = gram_matrix(&FockContext::complex(2, 1, 2), &vac2, 1).unwrap();
        assert_eq!(g2.matrix, vec![vec![json!(2)]]);
        assert!(g2.positive_semidefinite);
        assert!(gram_matrix(&FockContext::complex(2, 1, 1), &vac2, 1).is_err());
    }
}
