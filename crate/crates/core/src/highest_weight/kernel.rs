use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{act_on_monomial, Generator, Realization};
use crate::fock::{FieldKind, FockContext, FockMonomial, FockVector};
use crate::linalg::Matrix;
use crate::Rational;

/// Operators whose joint kernel defines highest-weight vectors: every
/// `X(i,j)` and every `E(i,j)` with `i < j`.
pub fn lowering_operators(field: FieldKind, m: u32) -> Vec<Generator> {
    let mut out = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            if field == FieldKind::Complex || i <= j {
                out.push(Generator::x(i, j));
            }
        }
    }
    for i in 1..=m {
        for j in i + 1..=m {
            match field {
                FieldKind::Complex => {
                    out.push(Generator::eplus(i, j));
                    out.push(Generator::eminus(i, j));
                }
                FieldKind::Real => out.push(Generator::e(i, j)),
            }
        }
    }
    out
}

/// Basis of `{v ∈ span(basis) : g v = 0 for every g in ops}`, as coordinate
/// vectors over `basis`.
pub(crate) fn joint_kernel(ctx: &FockContext, ops: &[Generator], basis: &[FockMonomial]) -> Vec<Vec<Rational>> {
    let mut rows: BTreeMap<(usize, FockMonomial), Vec<(usize, Rational)>> = BTreeMap::new();
    for (col, m) in basis.iter().enumerate() {
        for (k, &g) in ops.iter().enumerate() {
            act_on_monomial(ctx, Realization::Faithful, g, m, &mut |img, c| {
                rows.entry((k, img)).or_default().push((col, c));
            });
        }
    }
    let mut mat = Matrix::zeros(rows.len(), basis.len());
    for (r, entries) in rows.values().enumerate() {
        for (c, v) in entries {
            let cur = mat.get(r, *c) + v;
            mat.set(r, *c, cur);
        }
    }
    mat.nullspace()
}

/// Rescales to integer coefficients with content 1 and a positive
/// coefficient on the first monomial.
pub(crate) fn primitive_integer(v: &FockVector) -> FockVector {
    let mut lcm = BigInt::one();
    for (_, c) in v.iter() {
        lcm = lcm.lcm(c.denom());
    }
    let mut gcd = BigInt::zero();
    for (_, c) in v.iter() {
        gcd = gcd.gcd(&(c.numer() * &lcm / c.denom()));
    }
    if gcd.is_zero() {
        return v.clone();
    }
    let mut scale = Rational::new(lcm, gcd);
    if v.iter().next().is_some_and(|(_, c)| c.is_negative()) {
        scale = -scale;
    }
    v.scale(&scale)
}
