//! Sector labels versus irreducible representations of the gauge group.
//!
//! For `U(N)` a complex sector `(Y⁺, Y⁻)` with `r⁺ + r⁻ ≤ N` has highest
//! weight `λ = (m⁺_1, …, m⁺_{r⁺}, 0, …, 0, −m⁻_{r⁻}, …, −m⁻_1)`. Its label
//! `(Y, q)` uses `Y = λ + m⁻_1·(1, …, 1)`, which is the juxtaposition of the
//! relative conjugate of `Y⁻` with `Y⁺`, and `q = |Y⁺| − |Y⁻|`.
//!
//! The label is recovered from `k = (|Y| − q)/N = m⁻_1`, so `(Y, q)` lies in
//! the image iff `k` is a non-negative integer and either `k = 0` or `Y` has
//! fewer than `N` rows.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::highest_weight::SectorLabel;
use crate::rational::{int, Rational};
use crate::young_gauge::diagram::{conjugate_relative, YoungDiagram};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GaugeIrrepU {
    #[serde(rename = "Y")]
    pub y: YoungDiagram,
    pub q: i64,
}

impl fmt::Display for GaugeIrrepU {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.y, self.q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GaugeIrrepO {
    #[serde(rename = "Y")]
    pub y: YoungDiagram,
    pub sign: Sign,
}

impl fmt::Display for GaugeIrrepO {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.y, self.sign)
    }
}

/// `O(N)` label of a real sector. `equivalent` is set when `N` is even and
/// `Y` has exactly `N/2` rows, where `(Y,+)` and `(Y,−)` coincide.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OLabel {
    pub canonical: GaugeIrrepO,
    pub equivalent: Option<GaugeIrrepO>,
}

fn complex_parts(s: &SectorLabel) -> Result<(&YoungDiagram, &YoungDiagram, u32)> {
    match s {
        SectorLabel::Complex { plus, minus, n } => Ok((plus, minus, *n)),
        SectorLabel::Real { .. } => Err(Error::InvalidLabel("expected a complex sector".into())),
    }
}

fn real_parts(s: &SectorLabel) -> Result<(&YoungDiagram, u32)> {
    match s {
        SectorLabel::Real { y, n } => Ok((y, *n)),
        SectorLabel::Complex { .. } => Err(Error::InvalidLabel("expected a real sector".into())),
    }
}

/// `U(N)` highest weight `λ` of a complex sector, length `N`.
pub fn u_highest_weight(s: &SectorLabel) -> Result<Vec<i64>> {
    s.check_bound()?;
    let (plus, minus, n) = complex_parts(s)?;
    let mut lambda = vec![0i64; n as usize];
    for i in 1..=plus.num_rows() {
        lambda[i as usize - 1] = plus.row(i) as i64;
    }
    for i in 1..=minus.num_rows() {
        lambda[(n - i) as usize] = -(minus.row(i) as i64);
    }
    Ok(lambda)
}

pub fn sector_to_irrep_u(s: &SectorLabel) -> Result<GaugeIrrepU> {
    s.check_bound()?;
    let (plus, minus, n) = complex_parts(s)?;
    let mut columns = conjugate_relative(minus, n)?.columns();
    columns.extend(plus.columns());
    Ok(GaugeIrrepU {
        y: YoungDiagram::from_columns(&columns),
        q: plus.size() as i64 - minus.size() as i64,
    })
}

pub fn irrep_u_to_sector(irr: &GaugeIrrepU, n: u32) -> Result<SectorLabel> {
    let y = &irr.y;
    if y.num_rows() > n {
        return Err(Error::InvalidLabel(format!("{y} has more than N = {n} rows")));
    }
    let diff = y.size() as i64 - irr.q;
    if n == 0 {
        if diff != 0 {
            return Err(Error::InvalidLabel(format!("N = 0 admits only (∅, 0), got {irr}")));
        }
        return Ok(SectorLabel::complex(YoungDiagram::empty(), YoungDiagram::empty(), 0));
    }
    if diff < 0 || diff % n as i64 != 0 {
        return Err(Error::InvalidLabel(format!(
            "{irr}: |Y| − q = {diff} is not a non-negative multiple of N = {n}"
        )));
    }
    let k = diff / n as i64;
    if k > 0 && y.num_rows() == n {
        return Err(Error::InvalidLabel(format!(
            "{irr}: a full column of height N = {n} with k = {k} is not a reduced label"
        )));
    }
    let lambda: Vec<i64> = (1..=n).map(|i| y.row(i) as i64 - k).collect();
    let plus: Vec<u32> = lambda.iter().filter(|&&l| l > 0).map(|&l| l as u32).collect();
    let minus: Vec<u32> = lambda.iter().rev().filter(|&&l| l < 0).map(|&l| (-l) as u32).collect();
    let s = SectorLabel::complex(YoungDiagram::new(plus)?, YoungDiagram::new(minus)?, n);
    s.check_bound()?;
    Ok(s)
}

/// Weyl dimension `∏_{i<j} (λ_i − λ_j + j − i)/(j − i)`.
pub fn weyl_dimension_u(irr: &GaugeIrrepU, n: u32) -> Result<u64> {
    let s = irrep_u_to_sector(irr, n)?;
    Ok(weyl_dimension(&u_highest_weight(&s)?))
}

pub fn weyl_dimension(lambda: &[i64]) -> u64 {
    let mut d = int(1);
    for i in 0..lambda.len() {
        for j in i + 1..lambda.len() {
            let gap = (j - i) as i64;
            d *= Rational::new((lambda[i] - lambda[j] + gap).into(), gap.into());
        }
    }
    assert!(d.is_integer(), "Weyl dimension must be integral");
    u64::try_from(d.to_integer()).expect("dimension fits in u64")
}

/// Replaces the first column (height `r`, possibly zero) by one of height `N − r`.
fn swap_first_column(y: &YoungDiagram, n: u32) -> YoungDiagram {
    let mut cols = y.columns();
    match cols.first_mut() {
        Some(c) => *c = n - *c,
        None => cols.push(n),
    }
    YoungDiagram::from_columns(&cols)
}

pub fn sector_to_irrep_o(s: &SectorLabel) -> Result<OLabel> {
    s.check_bound()?;
    let (y, n) = real_parts(s)?;
    let r = y.column(1);
    if 2 * r < n {
        Ok(OLabel {
            canonical: GaugeIrrepO { y: y.clone(), sign: Sign::Plus },
            equivalent: None,
        })
    } else if 2 * r > n {
        Ok(OLabel {
            canonical: GaugeIrrepO { y: swap_first_column(y, n), sign: Sign::Minus },
            equivalent: None,
        })
    } else {
        Ok(OLabel {
            canonical: GaugeIrrepO { y: y.clone(), sign: Sign::Plus },
            equivalent: Some(GaugeIrrepO { y: y.clone(), sign: Sign::Minus }),
        })
    }
}

pub fn irrep_o_to_sector(irr: &GaugeIrrepO, n: u32) -> Result<SectorLabel> {
    let r = irr.y.num_rows();
    if 2 * r > n {
        return Err(Error::InvalidLabel(format!("{irr}: more than N/2 rows for N = {n}")));
    }
    let y = match irr.sign {
        Sign::Plus => irr.y.clone(),
        Sign::Minus if 2 * r == n => irr.y.clone(),
        Sign::Minus => swap_first_column(&irr.y, n),
    };
    let s = SectorLabel::real(y, n);
    s.check_bound()?;
    Ok(s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionRow {
    pub sector: serde_json::Value,
    pub label: serde_json::Value,
    pub equivalent: Option<serde_json::Value>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub group: String,
    #[serde(rename = "N")]
    pub n: u32,
    pub size_cap: u32,
    pub sectors_checked: usize,
    pub labels_checked: usize,
    pub identified_pairs: usize,
    pub passed: bool,
    pub failures: Vec<String>,
    pub rows: Vec<BijectionRow>,
}

/// All complex sectors with `|Y⁺| + |Y⁻| ≤ cap` inside the bound.
pub fn complex_sectors(n: u32, cap: u32) -> Vec<SectorLabel> {
    let mut out = Vec::new();
    for total in 0..=cap {
        for sp in 0..=total {
            for plus in YoungDiagram::all_of_size(sp, n) {
                for minus in YoungDiagram::all_of_size(total - sp, n - plus.num_rows()) {
                    out.push(SectorLabel::complex(plus.clone(), minus, n));
                }
            }
        }
    }
    out
}

/// All real sectors with `|Y| ≤ cap` inside the bound `r + s ≤ N`.
pub fn real_sectors(n: u32, cap: u32) -> Vec<SectorLabel> {
    YoungDiagram::all_up_to(cap, n)
        .into_iter()
        .map(|y| SectorLabel::real(y, n))
        .filter(|s| s.check_bound().is_ok())
        .collect()
}

pub fn bijection_roundtrip_check_u(n: u32, cap: u32) -> BijectionReport {
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    let sectors = complex_sectors(n, cap);
    let mut seen: BTreeMap<GaugeIrrepU, SectorLabel> = BTreeMap::new();
    for s in &sectors {
        match sector_to_irrep_u(s) {
            Ok(irr) => {
                if (irr.y.size() as i64 - irr.q).rem_euclid(n.max(1) as i64) != 0 {
                    failures.push(format!("{s} -> {irr}: q ≢ |Y| mod N"));
                }
                match irrep_u_to_sector(&irr, n) {
                    Ok(back) if &back == s => {}
                    Ok(back) => failures.push(format!("{s} -> {irr} -> {back}")),
                    Err(e) => failures.push(format!("{s} -> {irr} -> error: {e}")),
                }
                if let Some(prev) = seen.insert(irr.clone(), s.clone()) {
                    failures.push(format!("{prev} and {s} share the label {irr}"));
                }
                rows.push(BijectionRow { sector: s.to_json(), label: serde_json::to_value(&irr).unwrap(), equivalent: None });
            }
            Err(e) => failures.push(format!("{s}: {e}")),
        }
    }
    // Reverse direction: every reduced label with |Y| ≤ cap and small k.
    let mut labels = 0;
    for y in YoungDiagram::all_up_to(cap, n) {
        for k in 0..=cap as i64 {
            let q = y.size() as i64 - k * n as i64;
            let irr = GaugeIrrepU { y: y.clone(), q };
            let reduced = k == 0 || y.num_rows() < n;
            if n == 0 && k > 0 {
                continue;
            }
            match irrep_u_to_sector(&irr, n) {
                Ok(s) if reduced => {
                    labels += 1;
                    match sector_to_irrep_u(&s) {
                        Ok(back) if back == irr => {}
                        Ok(back) => failures.push(format!("{irr} -> {s} -> {back}")),
                        Err(e) => failures.push(format!("{irr} -> {s} -> error: {e}")),
                    }
                }
                Ok(s) => failures.push(format!("{irr} is not reduced but mapped to {s}")),
                Err(_) if !reduced => {}
                Err(e) => failures.push(format!("{irr}: {e}")),
            }
        }
    }
    BijectionReport {
        group: "U".into(),
        n,
        size_cap: cap,
        sectors_checked: sectors.len(),
        labels_checked: labels,
        identified_pairs: 0,
        passed: failures.is_empty(),
        failures,
        rows,
    }
}

pub fn bijection_roundtrip_check_o(n: u32, cap: u32) -> BijectionReport {
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    let sectors = real_sectors(n, cap);
    let mut seen: BTreeMap<GaugeIrrepO, SectorLabel> = BTreeMap::new();
    for s in &sectors {
        let SectorLabel::Real { y, .. } = s else { unreachable!() };
        match sector_to_irrep_o(s) {
            Ok(label) => {
                let expect_pair = n.is_multiple_of(2) && 2 * y.num_rows() == n;
                if label.equivalent.is_some() != expect_pair {
                    failures.push(format!("{s}: identification flag wrong"));
                }
                for irr in std::iter::once(&label.canonical).chain(label.equivalent.iter()) {
                    if 2 * irr.y.num_rows() > n {
                        failures.push(format!("{s} -> {irr}: more than N/2 rows"));
                    }
                    match irrep_o_to_sector(irr, n) {
                        Ok(back) if &back == s => {}
                        Ok(back) => failures.push(format!("{s} -> {irr} -> {back}")),
                        Err(e) => failures.push(format!("{s} -> {irr} -> error: {e}")),
                    }
                    if let Some(prev) = seen.insert(irr.clone(), s.clone()) {
                        failures.push(format!("{prev} and {s} share the label {irr}"));
                    }
                }
                rows.push(BijectionRow {
                    sector: s.to_json(),
                    label: serde_json::to_value(&label.canonical).unwrap(),
                    equivalent: label.equivalent.as_ref().map(|e| serde_json::to_value(e).unwrap()),
                });
            }
            Err(e) => failures.push(format!("{s}: {e}")),
        }
    }
    let mut labels = 0;
    let mut identified = 0;
    for y in YoungDiagram::all_up_to(cap, n / 2) {
        for sign in [Sign::Plus, Sign::Minus] {
            let irr = GaugeIrrepO { y: y.clone(), sign };
            labels += 1;
            match irrep_o_to_sector(&irr, n).and_then(|s| sector_to_irrep_o(&s).map(|l| (s, l))) {
                Ok((_, l)) if l.canonical == irr => {}
                Ok((_, l)) if l.equivalent.as_ref() == Some(&irr) => {
                    identified += 1;
                    if !(n.is_multiple_of(2) && 2 * y.num_rows() == n) {
                        failures.push(format!("{irr} identified with {} outside the even-N rule", l.canonical));
                    }
                }
                Ok((s, l)) => failures.push(format!("{irr} -> {s} -> {}", l.canonical)),
                Err(e) => failures.push(format!("{irr}: {e}")),
            }
        }
    }
    BijectionReport {
        group: "O".into(),
        n,
        size_cap: cap,
        sectors_checked: sectors.len(),
        labels_checked: labels,
        identified_pairs: identified,
        passed: failures.is_empty(),
        failures,
        rows,
    }
}

/// Zero-safe `(|Y| − q)` reduction used by callers that only know `N`.
pub fn charge_residue(irr: &GaugeIrrepU, n: u32) -> i64 {
    if n == 0 {
        return irr.y.size() as i64 - irr.q;
    }
    (irr.y.size() as i64 - irr.q).rem_euclid(n as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(rows: &[u32]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    fn cs(p: &[u32], m: &[u32], n: u32) -> SectorLabel {
        SectorLabel::complex(yd(p), yd(m), n)
    }

    #[test]
    fn u_examples() {
        assert_eq!(sector_to_irrep_u(&cs(&[], &[], 3)).unwrap(), GaugeIrrepU { y: yd(&[]), q: 0 });
        assert_eq!(sector_to_irrep_u(&cs(&[1], &[], 2)).unwrap(), GaugeIrrepU { y: yd(&[1]), q: 1 });
        assert_eq!(sector_to_irrep_u(&cs(&[], &[1], 2)).unwrap(), GaugeIrrepU { y: yd(&[1]), q: -1 });
        assert_eq!(irrep_u_to_sector(&GaugeIrrepU { y: yd(&[1]), q: 1 }, 2).unwrap(), cs(&[1], &[], 2));
        assert_eq!(irrep_u_to_sector(&GaugeIrrepU { y: yd(&[1]), q: -1 }, 2).unwrap(), cs(&[], &[1], 2));
        assert_eq!(irrep_u_to_sector(&GaugeIrrepU { y: yd(&[]), q: 0 }, 5).unwrap(), cs(&[], &[], 5));
        assert!(sector_to_irrep_u(&cs(&[1, 1], &[1], 2)).is_err());
    }

    #[test]
    fn determinant_sectors_have_empty_diagram() {
        // One b-column of full height is det^{-1}.
        let irr = sector_to_irrep_u(&cs(&[], &[1, 1], 2)).unwrap();
        assert_eq!(irr, GaugeIrrepU { y: yd(&[]), q: -2 });
        assert_eq!(irrep_u_to_sector(&irr, 2).unwrap(), cs(&[], &[1, 1], 2));
    }

    #[test]
    fn weyl_dimension_examples() {
        let d = |rows: &[u32], q: i64| weyl_dimension_u(&GaugeIrrepU { y: yd(rows), q }, 2).unwrap();
        assert_eq!(d(&[], 0), 1);
        assert_eq!(d(&[1], 1), 2);
        assert_eq!(d(&[2], 2), 3);
        assert_eq!(weyl_dimension(&[1, 0, 0]), 3);
        assert_eq!(weyl_dimension(&[1, 0, -1]), 8);
    }

    #[test]
    fn o_examples() {
        let rs = |rows: &[u32], n| SectorLabel::real(yd(rows), n);
        let trivial = sector_to_irrep_o(&rs(&[], 3)).unwrap();
        assert_eq!(trivial.canonical, GaugeIrrepO { y: yd(&[]), sign: Sign::Plus });
        assert!(trivial.equivalent.is_none());
        let det = sector_to_irrep_o(&rs(&[1, 1, 1], 3)).unwrap();
        assert_eq!(det.canonical, GaugeIrrepO { y: yd(&[]), sign: Sign::Minus });
        let two = sector_to_irrep_o(&rs(&[1, 1], 3)).unwrap();
        assert_eq!(two.canonical, GaugeIrrepO { y: yd(&[1]), sign: Sign::Minus });
        let vec2 = sector_to_irrep_o(&rs(&[1], 2)).unwrap();
        assert_eq!(vec2.canonical, GaugeIrrepO { y: yd(&[1]), sign: Sign::Plus });
        assert_eq!(vec2.equivalent, Some(GaugeIrrepO { y: yd(&[1]), sign: Sign::Minus }));
    }

    #[test]
    fn roundtrips() {
        for n in 0..=4 {
            let u = bijection_roundtrip_check_u(n, 4);
            assert!(u.passed, "U({n}): {:?}", u.failures);
            let o = bijection_roundtrip_check_o(n, 4);
            assert!(o.passed, "O({n}): {:?}", o.failures);
        }
    }

    #[test]
    fn n1_u_sectors_are_single_rows() {
        for s in complex_sectors(1, 2) {
            let SectorLabel::Complex { plus, minus, .. } = &s else { unreachable!() };
            assert!(plus.num_rows() + minus.num_rows() <= 1);
            let irr = sector_to_irrep_u(&s).unwrap();
            assert!(irr.y.num_rows() <= 1);
        }
    }
}
