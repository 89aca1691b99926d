//! Bohr sets U_{S, eps}: symmetry, monotonicity in eps, and the
//! approximate-group law U_{S,eps} U_{S,eps} ⊆ U_{S,2 eps}.
//!
//! cargo run --example bohr_sets

use bohrcert::bohr::{bohr_set, BohrSpec};
use bohrcert::groups::{make_cyclic_product, make_dihedral};
use bohrcert::repr::{irreps, IrrepId};

fn main() -> bohrcert::Result<()> {
    let z12 = make_cyclic_product(&[12])?;
    let cat = irreps(&z12);
    let freqs = vec![IrrepId::from("chi(4)"), IrrepId::from("chi(8)")];
    for eps in [0.25, 1.0, 1.8] {
        let u = bohr_set(&cat, &BohrSpec::new(freqs.clone(), eps)?)?;
        println!("Z12, S = {{chi(4), chi(8)}}, eps = {eps}: {:?}", u.to_vec());
    }

    let d12 = make_dihedral(12)?;
    let cat = irreps(&d12);
    let freqs = vec![IrrepId::from("dih2d:1")];
    let eps = 0.6;
    let u = bohr_set(&cat, &BohrSpec::new(freqs.clone(), eps)?)?;
    let u2 = bohr_set(&cat, &BohrSpec::new(freqs, 2.0 * eps)?)?;
    let symmetric = u.iter().all(|x| u.contains(d12.inv(x)));
    let doubling = u.iter().all(|x| u.iter().all(|y| u2.contains(d12.mul(x, y))));
    println!("D12, S = {{dih2d:1}}, eps = {eps}: |U| = {}, |U_2eps| = {}", u.len(), u2.len());
    println!("symmetric: {symmetric}, U U inside U_2eps: {doubling}");
    Ok(())
}
