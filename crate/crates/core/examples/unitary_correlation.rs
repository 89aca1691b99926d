//! Correlation certificate for a unit vector u in the regular
//! representation of D8 with ||P u||^2 = 0.3.
//!
//! cargo run --example unitary_correlation

use bohrcert::engine::{base_point, correlation, thm_uni_certificate, uniform_measure_on, Representation};
use bohrcert::groups::make_dihedral;
use bohrcert::instances::{random_set, rng, unit_vector_with_invariant_mass};
use bohrcert::repr::irreps;

fn main() -> bohrcert::Result<()> {
    let g = make_dihedral(8)?;
    let catalog = irreps(&g);
    let rep = Representation::regular(&g);
    let mut r = rng(11);
    let a = random_set(&g, 0.4, &mut r)?;
    let beta = 0.3;
    let u = unit_vector_with_invariant_mass(&rep, beta, &mut r)?;

    let mu = uniform_measure_on(&a)?;
    let base = base_point(&mu, &rep, &u)?;
    println!("base point {} with Re<theta(mu) u, pi(a_o) u> = {:.6} >= ||Pu||^2 = {:.6}", base.element, base.value, base.invariant_mass);

    for thr in [0.0, beta / 4.0, beta / 2.0] {
        let cert = thm_uni_certificate(&catalog, &a, &rep, &u, beta, thr)?;
        println!(
            "r = {thr:.4}: |S| = {}, eps = {:.4}, {} elements checked, min margin {:.4}, verdict {:?}",
            cert.spectrum_size, cert.eps, cert.oracle.checked, cert.oracle.min_margin, cert.verdict
        );
    }
    let worst = g.elements().map(|x| correlation(&mu, &rep, &u, x)).collect::<bohrcert::Result<Vec<_>>>()?;
    println!("correlation over all of D8 ranges in [{:.4}, {:.4}]",
        worst.iter().cloned().fold(f64::INFINITY, f64::min),
        worst.iter().cloned().fold(f64::NEG_INFINITY, f64::max));
    Ok(())
}
