//! The irreducible representations of A5 and the Fourier spectrum of a
//! random set, followed by a certificate whose size bound uses d_min = 3.
//!
//! cargo run --example a5_spectrum

use bohrcert::engine::{choose_constants, large_spectrum, thm_comb_certificate, uniform_measure_on};
use bohrcert::groups::make_alternating5;
use bohrcert::instances::{random_set, rng};
use bohrcert::repr::{irreps, parseval_sum, spectrum_norms};

fn main() -> bohrcert::Result<()> {
    let g = make_alternating5();
    let catalog = irreps(&g);
    for sigma in catalog.items() {
        let chars: Vec<String> = [0, 1, 2, 5, 20].iter().map(|&x| format!("{:.4}", sigma.character(x).re)).collect();
        println!("{:6} dim {}  characters at a few elements: {}", sigma.id(), sigma.dim(), chars.join(" "));
    }
    println!("sum d^2 = {}, d_min = {:?}", catalog.completeness_sum(), catalog.d_min());

    let mut r = rng(7);
    let a = random_set(&g, 0.4, &mut r)?;
    let b = random_set(&g, 0.3, &mut r)?;
    let mu = uniform_measure_on(&a)?;
    for (sigma, norm) in catalog.items().iter().zip(spectrum_norms(&catalog, &mu)?) {
        println!("||{}(mu_A)||_op = {norm:.6}", sigma.id());
    }
    println!("Parseval: {} = |G| sum mu^2 = {}", parseval_sum(&catalog, &mu)?, mu.l2_density_sq());

    let c = choose_constants(b.density(), 0.0)?;
    println!("delta = {}, S_delta = {:?}", c.delta, large_spectrum(&catalog, &mu, c.delta)?);
    let cert = thm_comb_certificate(&catalog, &a, &b)?;
    println!("bound = {} (d_min 3), |S| = {}, verdict {:?}", cert.bound, cert.spectrum_size, cert.verdict);
    Ok(())
}
