//! Certificate for A = {0, 3, 6, 9}, B = {0, 1} in Z12, then an independent
//! re-verification from the raw sets.
//!
//! cargo run --example cyclic_certificate

use bohrcert::engine::{thm_comb_certificate, CertificateInputs};
use bohrcert::groups::{make_cyclic_product, ElementSet};
use bohrcert::oracle::{triple_product, verify_certificate};
use bohrcert::repr::irreps;

fn main() -> bohrcert::Result<()> {
    let g = make_cyclic_product(&[12])?;
    let catalog = irreps(&g);
    let a = ElementSet::from_indices(&g, [0, 3, 6, 9])?;
    let b = ElementSet::from_indices(&g, [0, 1])?;

    let cert = thm_comb_certificate(&catalog, &a, &b)?;
    println!("{}", cert.to_json());

    let abb = triple_product(&g, &a, &b)?;
    println!("A B B^-1 = {:?}", abb.to_vec());

    let report = verify_certificate(&cert, &catalog, &CertificateInputs::Comb { a, b })?;
    println!("re-verified: {} elements checked, passed = {}", report.checked, report.passed());
    Ok(())
}
