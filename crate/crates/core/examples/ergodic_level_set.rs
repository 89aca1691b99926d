//! Level-set certificate for D8 acting on the vertices of an octagon:
//! every g in a_o U_{S, (beta - r)/2} has nu(A B ∩ g B) > beta r.
//!
//! cargo run --example ergodic_level_set

use bohrcert::engine::thm_erg_certificate;
use bohrcert::groups::{make_dihedral, ElementSet};
use bohrcert::instances::polygon_action;
use bohrcert::oracle::overlap_measure;
use bohrcert::repr::irreps;
use bohrcert::bohr::{bohr_set, translate};
use bohrcert::engine::PointSet;

fn main() -> bohrcert::Result<()> {
    let g = make_dihedral(8)?;
    let catalog = irreps(&g);
    let action = polygon_action(&g)?;
    let a = ElementSet::from_indices(&g, [0, 1, 2, 9, 12])?;
    let b = PointSet::from_indices(action.points(), [0, 1, 4])?;
    let r = b.measure() / 4.0;

    let cert = thm_erg_certificate(&catalog, &a, &action, &b, r)?;
    println!(
        "beta = {}, r = {r}, |S| = {}, eps = {}, base point {}, verdict {:?}",
        cert.beta, cert.spectrum_size, cert.eps, cert.base_point, cert.verdict
    );

    let claimed = translate(&g, cert.base_point, &bohr_set(&catalog, &cert.bohr_spec()?)?)?;
    for x in claimed.iter() {
        println!("  g = {x:2}  nu(AB ∩ gB) = {}  (threshold beta r = {})", overlap_measure(&action, &a, &b, x)?, cert.beta * r);
    }
    Ok(())
}
