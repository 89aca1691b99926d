//! Oracle behavior on honest and tampered certificates.

use bohrcert::engine::{certify, thm_comb_certificate, CertificateInputs, FiniteAction, Representation, Theorem};
use bohrcert::groups::{make_alternating5, make_cyclic_product, make_dihedral, ElementSet, Group};
use bohrcert::instances::{random_points, random_set, rng, unit_vector_with_invariant_mass};
use bohrcert::oracle::{overlap_measure, triple_product, verify_certificate};
use bohrcert::repr::{irreps, IrrepId};
use bohrcert::sweep::{exhaustive_comb, run_all, RowVerdict};

fn all_subsets(g: &Group) -> Vec<ElementSet> {
    (1u32..1 << g.order())
        .map(|mask| ElementSet::from_predicate(g, |x| mask >> x & 1 == 1))
        .collect()
}

#[test]
fn z12_example_has_the_expected_spectrum() {
    let g = make_cyclic_product(&[12]).unwrap();
    let cat = irreps(&g);
    let a = ElementSet::from_indices(&g, [0, 3, 6, 9]).unwrap();
    let b = ElementSet::from_indices(&g, [0, 1]).unwrap();
    let cert = thm_comb_certificate(&cat, &a, &b).unwrap();
    assert!(cert.passed());
    assert_eq!(cert.spectrum, vec![IrrepId("chi(4)".into()), IrrepId("chi(8)".into())]);
}

#[test]
fn full_a_gives_empty_spectrum_and_full_claim() {
    let g = make_cyclic_product(&[12]).unwrap();
    let cat = irreps(&g);
    let a = ElementSet::full(&g);
    let b = ElementSet::from_indices(&g, [0, 1]).unwrap();
    let cert = thm_comb_certificate(&cat, &a, &b).unwrap();
    assert!(cert.spectrum.is_empty());
    assert_eq!(cert.oracle.checked, 12);
    assert!(cert.passed());
}

#[test]
fn exhaustive_small_groups_pass() {
    for g in [make_cyclic_product(&[6]).unwrap(), make_cyclic_product(&[2, 3]).unwrap(), make_dihedral(3).unwrap()] {
        let rows = run_all(&exhaustive_comb(&g).unwrap());
        assert_eq!(rows.len(), 63 * 63);
        assert!(rows.iter().all(|r| r.verdict == RowVerdict::Pass), "{}", g.name());
    }
}

#[test]
fn doubled_eps_stays_clean_on_exhaustive_small_groups() {
    for g in [make_cyclic_product(&[5]).unwrap(), make_cyclic_product(&[2, 3]).unwrap(), make_dihedral(3).unwrap()] {
        let cat = irreps(&g);
        let subsets = all_subsets(&g);
        for a in &subsets {
            for b in &subsets {
                let inputs = CertificateInputs::Comb { a: a.clone(), b: b.clone() };
                let mut cert = certify(&cat, &inputs).unwrap();
                cert.eps *= 2.0;
                let report = verify_certificate(&cert, &cat, &inputs).unwrap();
                assert!(report.violations.is_empty(), "{} A={:?} B={:?}", g.name(), a.to_vec(), b.to_vec());
            }
        }
    }
}

#[test]
fn doubled_eps_stays_clean_on_level_sets() {
    let g = make_dihedral(4).unwrap();
    let cat = irreps(&g);
    let action = FiniteAction::translation(&g);
    let mut r = rng(9);
    for _ in 0..200 {
        let a = random_set(&g, 0.3, &mut r).unwrap();
        let b = random_points(g.order(), 0.4, &mut r).unwrap();
        let threshold = 0.9 * b.measure();
        let inputs = CertificateInputs::Erg { a, action: action.clone(), b, r: threshold };
        let mut cert = certify(&cat, &inputs).unwrap();
        cert.eps *= 2.0;
        assert!(verify_certificate(&cert, &cat, &inputs).unwrap().violations.is_empty());
    }
}

#[test]
fn emptied_spectrum_is_detected() {
    let g = make_cyclic_product(&[60]).unwrap();
    let cat = irreps(&g);
    let mut r = rng(1);
    let a = random_set(&g, 0.1, &mut r).unwrap();
    let b = random_set(&g, 0.08, &mut r).unwrap();
    let target = triple_product(&g, &a, &b).unwrap();
    assert!(!target.is_full());
    let inputs = CertificateInputs::Comb { a, b };
    let mut cert = certify(&cat, &inputs).unwrap();
    assert!(cert.passed());
    cert.spectrum.clear();
    cert.spectrum_size = 0;
    let report = verify_certificate(&cert, &cat, &inputs).unwrap();
    let missing: Vec<usize> = g.elements().filter(|&x| !target.contains(x)).collect();
    assert_eq!(report.counterexamples(), missing);
}

#[test]
fn moved_base_point_is_detected() {
    let g = make_cyclic_product(&[60]).unwrap();
    let cat = irreps(&g);
    let mut r = rng(1);
    let a = random_set(&g, 0.1, &mut r).unwrap();
    let b = random_set(&g, 0.08, &mut r).unwrap();
    let target = triple_product(&g, &a, &b).unwrap();
    let inputs = CertificateInputs::Comb { a, b };
    let mut cert = certify(&cat, &inputs).unwrap();
    let outside = g.elements().find(|&x| !target.contains(x)).unwrap();
    cert.base_point = outside;
    let report = verify_certificate(&cert, &cat, &inputs).unwrap();
    assert!(report.counterexamples().contains(&outside));
    assert!(!report.passed());
}

#[test]
fn mismatched_inputs_are_rejected() {
    let g = make_cyclic_product(&[12]).unwrap();
    let cat = irreps(&g);
    let a = ElementSet::from_indices(&g, [0, 3, 6, 9]).unwrap();
    let b = ElementSet::from_indices(&g, [0, 1]).unwrap();
    let cert = thm_comb_certificate(&cat, &a, &b).unwrap();
    let other = CertificateInputs::Comb { a: a.clone(), b: ElementSet::from_indices(&g, [0, 1, 2]).unwrap() };
    assert!(verify_certificate(&cert, &cat, &other).is_err());
    let mut wrong_bound = cert.clone();
    wrong_bound.bound += 1.0;
    assert!(verify_certificate(&wrong_bound, &cat, &CertificateInputs::Comb { a, b }).is_err());
}

#[test]
fn a5_certificates_pass_for_every_theorem() {
    let g = make_alternating5();
    let cat = irreps(&g);
    let mut r = rng(5);
    for theorem in [Theorem::Comb, Theorem::Erg, Theorem::Uni] {
        for _ in 0..4 {
            let a = random_set(&g, 0.3, &mut r).unwrap();
            let inputs = match theorem {
                Theorem::Comb => CertificateInputs::Comb { a, b: random_set(&g, 0.3, &mut r).unwrap() },
                Theorem::Erg => {
                    let b = random_points(60, 0.3, &mut r).unwrap();
                    let thr = b.measure() / 2.0;
                    CertificateInputs::Erg { a, action: FiniteAction::translation(&g), b, r: thr }
                }
                Theorem::Uni => {
                    let rep = Representation::regular(&g);
                    let u = unit_vector_with_invariant_mass(&rep, 0.4, &mut r).unwrap();
                    CertificateInputs::Uni { a, rep, u, beta: 0.4, r: 0.1 }
                }
            };
            let cert = certify(&cat, &inputs).unwrap();
            assert!(cert.passed());
            assert!(verify_certificate(&cert, &cat, &inputs).unwrap().passed());
        }
    }
}

#[test]
fn overlap_measure_is_exact() {
    let g = make_cyclic_product(&[3]).unwrap();
    let action = FiniteAction::translation(&g);
    let a = ElementSet::from_indices(&g, [0]).unwrap();
    let b = bohrcert::engine::PointSet::from_indices(3, [0, 1]).unwrap();
    let m = overlap_measure(&action, &a, &b, 1).unwrap();
    assert_eq!(m, num_rational::BigRational::new(1.into(), 3.into()));
}
