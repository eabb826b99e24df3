use std::fmt;

use num_traits::Signed;
use serde_json::{json, Value};

use crate::fock::FieldKind;
use crate::rational::{half, int, vec_to_json, to_json};
use crate::young_gauge::YoungDiagram;
use crate::{Error, Rational, Result};

/// A superselection sector: a pair of Young diagrams for complex fields, one
/// diagram for real fields, together with the multiplet size `N`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SectorLabel {
    Complex { plus: YoungDiagram, minus: YoungDiagram, n: u32 },
    Real { y: YoungDiagram, n: u32 },
}

impl SectorLabel {
    pub fn complex(plus: YoungDiagram, minus: YoungDiagram, n: u32) -> Self {
        SectorLabel::Complex { plus, minus, n }
    }

    pub fn real(y: YoungDiagram, n: u32) -> Self {
        SectorLabel::Real { y, n }
    }

    pub fn vacuum(kind: FieldKind, n: u32) -> Self {
        match kind {
            FieldKind::Complex => Self::complex(YoungDiagram::empty(), YoungDiagram::empty(), n),
            FieldKind::Real => Self::real(YoungDiagram::empty(), n),
        }
    }

    pub fn kind(&self) -> FieldKind {
        match self {
            SectorLabel::Complex { .. } => FieldKind::Complex,
            SectorLabel::Real { .. } => FieldKind::Real,
        }
    }

    pub fn n(&self) -> u32 {
        match self {
            SectorLabel::Complex { n, .. } | SectorLabel::Real { n, .. } => *n,
        }
    }

    /// Number of boxes, i.e. the particle number of the ground state.
    pub fn size(&self) -> u32 {
        match self {
            SectorLabel::Complex { plus, minus, .. } => plus.size() + minus.size(),
            SectorLabel::Real { y, .. } => y.size(),
        }
    }

    /// Longest first column, i.e. the number of modes the ground state uses.
    pub fn max_rows(&self) -> u32 {
        match self {
            SectorLabel::Complex { plus, minus, .. } => plus.num_rows().max(minus.num_rows()),
            SectorLabel::Real { y, .. } => y.num_rows(),
        }
    }

    /// Unitarity bound `r⁺ + r⁻ ≤ N` (complex) or `r + s ≤ N` (real), where
    /// `r`, `s` are the first two column heights.
    pub fn check_bound(&self) -> Result<()> {
        match self {
            SectorLabel::Complex { plus, minus, n } => {
                let (rp, rm) = (plus.column(1), minus.column(1));
                if rp + rm > *n {
                    return Err(Error::BoundViolated(format!("r+ + r- = {rp} + {rm} = {} > N = {n}", rp + rm)));
                }
            }
            SectorLabel::Real { y, n } => {
                let (r, s) = (y.column(1), y.column(2));
                if r + s > *n {
                    return Err(Error::BoundViolated(format!("r + s = {r} + {s} = {} > N = {n}", r + s)));
                }
            }
        }
        Ok(())
    }

    pub fn in_bound(&self) -> bool {
        self.check_bound().is_ok()
    }

    pub fn to_json(&self) -> Value {
        match self {
            SectorLabel::Complex { plus, minus, n } => json!({"Y_plus": plus, "Y_minus": minus, "N": n}),
            SectorLabel::Real { y, n } => json!({"Y": y, "N": n}),
        }
    }
}

impl fmt::Display for SectorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SectorLabel::Complex { plus, minus, n } => write!(f, "({plus},{minus};N={n})"),
            SectorLabel::Real { y, n } => write!(f, "({y};N={n})"),
        }
    }
}

/// Eigenvalues of the Cartan generators `E±(i,i)` (or `E(i,i)`) on a ground state:
/// finite heads followed by the constant tail `h_∞`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Weight {
    Complex { head_plus: Vec<Rational>, head_minus: Vec<Rational>, tail: Rational },
    Real { head: Vec<Rational>, tail: Rational },
}

fn entry(head: &[Rational], tail: &Rational, i: u32) -> Rational {
    head.get(i as usize - 1).cloned().unwrap_or_else(|| tail.clone())
}

/// Drops trailing entries equal to the tail.
fn trim(mut head: Vec<Rational>, tail: &Rational) -> Vec<Rational> {
    while head.last() == Some(tail) {
        head.pop();
    }
    head
}

impl Weight {
    pub fn complex(head_plus: Vec<Rational>, head_minus: Vec<Rational>, tail: Rational) -> Self {
        let head_plus = trim(head_plus, &tail);
        let head_minus = trim(head_minus, &tail);
        Weight::Complex { head_plus, head_minus, tail }
    }

    pub fn real(head: Vec<Rational>, tail: Rational) -> Self {
        let head = trim(head, &tail);
        Weight::Real { head, tail }
    }

    pub fn kind(&self) -> FieldKind {
        match self {
            Weight::Complex { .. } => FieldKind::Complex,
            Weight::Real { .. } => FieldKind::Real,
        }
    }

    pub fn tail(&self) -> &Rational {
        match self {
            Weight::Complex { tail, .. } | Weight::Real { tail, .. } => tail,
        }
    }

    /// `h⁺_i`; for a real weight this is `h_i`.
    pub fn h_plus(&self, i: u32) -> Rational {
        match self {
            Weight::Complex { head_plus, tail, .. } => entry(head_plus, tail, i),
            Weight::Real { head, tail } => entry(head, tail, i),
        }
    }

    /// `h⁻_i`; for a real weight this is `h_i`.
    pub fn h_minus(&self, i: u32) -> Rational {
        match self {
            Weight::Complex { head_minus, tail, .. } => entry(head_minus, tail, i),
            Weight::Real { head, tail } => entry(head, tail, i),
        }
    }

    pub fn h(&self, i: u32) -> Rational {
        self.h_plus(i)
    }

    /// Longest head length.
    pub fn head_len(&self) -> u32 {
        match self {
            Weight::Complex { head_plus, head_minus, .. } => head_plus.len().max(head_minus.len()) as u32,
            Weight::Real { head, .. } => head.len() as u32,
        }
    }

    /// Heads weakly decreasing, strictly above the tail by integers, tail ≥ 0,
    /// and `h⁺_i + h⁻_j ≥ 0`.
    pub fn validate(&self) -> Result<()> {
        let check_head = |head: &[Rational], tail: &Rational| -> Result<()> {
            for w in head.windows(2) {
                if w[0] < w[1] {
                    return Err(Error::InvalidLabel(format!("head not decreasing at {} < {}", w[0], w[1])));
                }
            }
            for h in head {
                let d = h - tail;
                if !d.is_integer() || !d.is_positive() {
                    return Err(Error::InvalidLabel(format!("head entry {h} not a positive integer above tail {tail}")));
                }
            }
            Ok(())
        };
        if self.tail().is_negative() {
            return Err(Error::InvalidLabel("negative tail".into()));
        }
        match self {
            Weight::Complex { head_plus, head_minus, tail } => {
                check_head(head_plus, tail)?;
                check_head(head_minus, tail)?;
                let n = self.head_len().max(1);
                for i in 1..=n {
                    for j in 1..=n {
                        if (self.h_plus(i) + self.h_minus(j)).is_negative() {
                            return Err(Error::InvalidLabel(format!("h+_{i} + h-_{j} < 0")));
                        }
                    }
                }
            }
            Weight::Real { head, tail } => check_head(head, tail)?,
        }
        Ok(())
    }

    pub fn head_json(&self) -> Value {
        match self {
            Weight::Complex { head_plus, head_minus, .. } => {
                json!({"plus": vec_to_json(head_plus), "minus": vec_to_json(head_minus)})
            }
            Weight::Real { head, .. } => vec_to_json(head),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"weight_head": self.head_json(), "tail": to_json(self.tail())})
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[Rational]| v.iter().map(crate::rational::to_string).collect::<Vec<_>>().join(",");
        match self {
            Weight::Complex { head_plus, head_minus, tail } => {
                write!(f, "h+=({}) h-=({}) h_inf={}", show(head_plus), show(head_minus), crate::rational::to_string(tail))
            }
            Weight::Real { head, tail } => write!(f, "h=({}) h_inf={}", show(head), crate::rational::to_string(tail)),
        }
    }
}

/// `h_i = m_i + N/2` with tail `N/2`.
pub fn weight_from_sector(s: &SectorLabel) -> Result<Weight> {
    s.check_bound()?;
    let tail = half(s.n());
    let lift = |y: &YoungDiagram| -> Vec<Rational> { y.rows().iter().map(|&m| int(m as i64) + &tail).collect() };
    Ok(match s {
        SectorLabel::Complex { plus, minus, .. } => Weight::complex(lift(plus), lift(minus), tail.clone()),
        SectorLabel::Real { y, .. } => Weight::real(lift(y), tail.clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn yd(rows: &[u32]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn weight_examples() {
        let vac = weight_from_sector(&SectorLabel::complex(yd(&[]), yd(&[]), 2)).unwrap();
        assert_eq!(vac, Weight::complex(vec![], vec![], int(1)));
        let one = weight_from_sector(&SectorLabel::complex(yd(&[1]), yd(&[]), 2)).unwrap();
        assert_eq!(one, Weight::complex(vec![int(2)], vec![], int(1)));
        let real = weight_from_sector(&SectorLabel::real(yd(&[2, 1]), 3)).unwrap();
        assert_eq!(real, Weight::real(vec![frac(7, 2), frac(5, 2)], frac(3, 2)));
        assert!(real.validate().is_ok());
    }

    #[test]
    fn bound_violations_are_reported() {
        let err = weight_from_sector(&SectorLabel::complex(yd(&[1, 1]), yd(&[1]), 2)).unwrap_err();
        assert!(err.to_string().contains("r+ + r- = 2 + 1 = 3 > N = 2"), "{err}");
        assert!(SectorLabel::real(yd(&[1, 1]), 2).in_bound());
        assert!(!SectorLabel::real(yd(&[2, 2]), 3).in_bound());
    }
}
