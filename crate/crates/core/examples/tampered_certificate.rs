//! Tampering with a genuine certificate and letting the oracle re-derive the
//! claim from the edited record.
//!
//! Doubling eps alone is not detectable: the correlation argument behind the
//! certificate still covers |g|_S < beta - r, so the doubled claim is true.
//! Emptying the spectrum (claiming all of G) or moving the base point out of
//! A B B^-1 are caught.
//!
//! cargo run --example tampered_certificate

use bohrcert::engine::{thm_comb_certificate, CertificateInputs};
use bohrcert::groups::make_cyclic_product;
use bohrcert::instances::{random_set, rng};
use bohrcert::oracle::{triple_product, verify_certificate};
use bohrcert::repr::irreps;

fn main() -> bohrcert::Result<()> {
    let g = make_cyclic_product(&[60])?;
    let catalog = irreps(&g);
    let mut r = rng(1);
    let a = random_set(&g, 0.1, &mut r)?;
    let b = random_set(&g, 0.08, &mut r)?;
    let target = triple_product(&g, &a, &b)?;
    let cert = thm_comb_certificate(&catalog, &a, &b)?;
    let inputs = CertificateInputs::Comb { a, b };
    println!("|A B B^-1| = {} of 60, |S| = {}, eps = {}", target.len(), cert.spectrum_size, cert.eps);

    let show = |label: &str, c: &bohrcert::engine::Certificate| -> bohrcert::Result<()> {
        let report = verify_certificate(c, &catalog, &inputs)?;
        println!("{label:28} checked {:2}, violations {:?}", report.checked, report.counterexamples());
        Ok(())
    };
    show("honest", &cert)?;

    let mut doubled = cert.clone();
    doubled.eps *= 2.0;
    show("eps doubled", &doubled)?;

    let mut emptied = cert.clone();
    emptied.spectrum.clear();
    emptied.spectrum_size = 0;
    show("spectrum emptied", &emptied)?;

    let outside = g.elements().find(|&x| !target.contains(x)).expect("A B B^-1 is proper");
    let mut moved = cert.clone();
    moved.base_point = outside;
    show(&format!("base point moved to {outside}"), &moved)?;
    Ok(())
}
