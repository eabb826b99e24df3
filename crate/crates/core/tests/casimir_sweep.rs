use bilocal_core::casimir::{casimir_g_verdict, casimir_k_check, gamma_closed_form, verify_gamma_identity};
use bilocal_core::fock::{FieldKind, FockContext};
use bilocal_core::highest_weight::SectorLabel;
use bilocal_core::young_gauge::YoungDiagram;
use num_traits::Zero;

fn complex_sectors(n: u32, cap: u32) -> Vec<SectorLabel> {
    let mut out = Vec::new();
    for p in YoungDiagram::all_up_to(cap, n) {
        for m in YoungDiagram::all_up_to(cap - p.size(), n) {
            let s = SectorLabel::complex(p.clone(), m, n);
            if s.in_bound() {
                out.push(s);
            }
        }
    }
    out
}

fn real_sectors(n: u32, cap: u32) -> Vec<SectorLabel> {
    YoungDiagram::all_up_to(cap, n)
        .into_iter()
        .map(|y| SectorLabel::real(y, n))
        .filter(|s| s.in_bound())
        .collect()
}

#[test]
fn gamma_identity_over_small_sectors() {
    for big_n in 1..=2 {
        for s in complex_sectors(big_n, 2) {
            let (a, b) = (s.max_rows(), s.max_rows());
            let rank = a.max(b) + 1;
            let ctx = FockContext::complex(big_n, rank, s.size() + 2);
            let r = verify_gamma_identity(&ctx, &s, rank).unwrap();
            assert!(r.passed, "{s}: {:?}", r.failures);
            let null = r.details["null_vector"].as_bool().unwrap();
            assert_eq!(null, gamma_closed_form(&s).is_zero(), "{s}");
        }
        for s in real_sectors(big_n, 2) {
            let rank = s.max_rows() + 1;
            let ctx = FockContext::real(big_n, rank, s.size() + 2);
            let r = verify_gamma_identity(&ctx, &s, rank).unwrap();
            assert!(r.passed, "{s}: {:?}", r.failures);
        }
    }
}

#[test]
fn casimirs_on_ground_states() {
    for big_n in 1..=2 {
        for s in complex_sectors(big_n, 2) {
            let n = s.max_rows().max(1);
            let ctx = FockContext::complex(big_n, n, s.size() + 2);
            assert!(casimir_k_check(&ctx, &s, n).unwrap().passed, "{s}");
            assert!(casimir_g_verdict(&ctx, &s, n).unwrap().passed, "{s}");
        }
        for s in real_sectors(big_n, 2) {
            let n = s.max_rows().max(1);
            let ctx = FockContext::real(big_n, n, s.size() + 2);
            assert!(casimir_k_check(&ctx, &s, n).unwrap().passed, "{s}");
            assert!(casimir_g_verdict(&ctx, &s, n).unwrap().passed, "{s}");
        }
    }
}

#[test]
fn vacuum_gamma_is_positive_and_not_null() {
    let s = SectorLabel::vacuum(FieldKind::Complex, 2);
    let r = verify_gamma_identity(&FockContext::complex(2, 1, 2), &s, 1).unwrap();
    assert!(r.passed);
    assert_eq!(r.details["null_vector"], serde_json::json!(false));
    assert_eq!(r.details["gamma"], serde_json::json!(4));
}
