//! Seeded instance generators: random and structured sets, finite actions,
//! measures, and unit vectors with prescribed invariant mass.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::action::{norm_sq, FiniteAction, PointSet, Representation};
use crate::error::{Error, Result};
use crate::groups::{ElementSet, Family, Group};
use crate::repr::GroupMeasure;

pub type InstanceRng = ChaCha8Rng;

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent inclusion with probability `density`, redrawn while empty.
pub fn random_set(group: &Group, density: f64, rng: &mut impl Rng) -> Result<ElementSet> {
    random_bits(group.order(), density, rng).map(|bits| {
        ElementSet::from_indices(group, bits).expect("indices in range")
    })
}

/// Random subset of the points `0..points`, redrawn while empty.
pub fn random_points(points: usize, density: f64, rng: &mut impl Rng) -> Result<PointSet> {
    random_bits(points, density, rng).map(|bits| PointSet::from_indices(points, bits).expect("in range"))
}

fn random_bits(n: usize, density: f64, rng: &mut impl Rng) -> Result<Vec<usize>> {
    if !(density > 0.0 && density <= 1.0) {
        return Err(Error::EmptySet("target density must lie in (0, 1]"));
    }
    loop {
        let picked: Vec<usize> = (0..n).filter(|_| rng.gen_bool(density)).collect();
        if !picked.is_empty() {
            return Ok(picked);
        }
    }
}

/// `{ start + k step : 0 <= k < len }` in a cyclic group `Z_n`.
pub fn arithmetic_progression(group: &Group, start: usize, step: usize, len: usize) -> Result<ElementSet> {
    let n = single_modulus(group)?;
    if len == 0 {
        return Err(Error::EmptySet("progression length must be positive"));
    }
    ElementSet::from_indices(group, (0..len).map(|k| (start + k * step) % n))
}

/// Nonzero quadratic residues of `Z_p`.
pub fn quadratic_residues(group: &Group) -> Result<ElementSet> {
    let p = single_modulus(group)?;
    if p < 3 {
        return Err(Error::Domain("quadratic residues need p >= 3".into()));
    }
    ElementSet::from_indices(group, (1..p).map(|x| x * x % p))
}

/// `{0, .., len - 1}` in element-index order.
pub fn interval(group: &Group, len: usize) -> Result<ElementSet> {
    if len == 0 || len > group.order() {
        return Err(Error::Domain(format!("interval length {len} outside 1..={}", group.order())));
    }
    ElementSet::from_indices(group, 0..len)
}

fn single_modulus(group: &Group) -> Result<usize> {
    match group.moduli() {
        Some([n]) => Ok(*n),
        _ => Err(Error::InvalidGroup(format!("{} is not a cyclic group Z_n", group.name()))),
    }
}

/// `D_n` acting on the vertices of the `n`-gon.
pub fn polygon_action(group: &Group) -> Result<FiniteAction> {
    let n = group
        .dihedral_n()
        .ok_or_else(|| Error::InvalidGroup(format!("{} is not dihedral", group.name())))?;
    FiniteAction::from_fn(group, n, |g, y| {
        let (k, flip) = (g % n, g / n);
        if flip == 0 { (k + y) % n } else { (k + n - y) % n }
    })
}

/// `Z_n` acting on `Z_m` (`m | n`) through reduction mod `m`.
pub fn quotient_action(group: &Group, m: usize) -> Result<FiniteAction> {
    let n = single_modulus(group)?;
    if m == 0 || n % m != 0 {
        return Err(Error::Domain(format!("{m} does not divide {n}")));
    }
    FiniteAction::from_fn(group, m, |g, y| (g + y) % m)
}

/// Two copies of the translation action side by side (not transitive).
pub fn doubled_translation(group: &Group) -> Result<FiniteAction> {
    let n = group.order();
    FiniteAction::from_fn(group, 2 * n, |g, y| if y < n { group.mul(g, y) } else { n + group.mul(g, y - n) })
}

/// A measure-preserving action picked at random among those available for
/// the group's family.
pub fn random_action(group: &Group, rng: &mut impl Rng) -> Result<FiniteAction> {
    let choice = rng.gen_range(0..3);
    match (group.family(), choice) {
        (Family::Dihedral, 1) => polygon_action(group),
        (Family::CyclicProduct, 1) if group.moduli().is_some_and(|m| m.len() == 1) => {
            let n = group.order();
            let divisors: Vec<usize> = (2..n).filter(|d| n.is_multiple_of(*d)).collect();
            if divisors.is_empty() {
                Ok(FiniteAction::translation(group))
            } else {
                quotient_action(group, divisors[rng.gen_range(0..divisors.len())])
            }
        }
        (_, 2) if group.order() <= 128 => doubled_translation(group),
        _ => Ok(FiniteAction::translation(group)),
    }
}

/// Random probability measure: uniform weights on a random support, or
/// exponential-like weights on the whole group.
pub fn random_measure(group: &Group, rng: &mut impl Rng) -> Result<GroupMeasure> {
    let weights: Vec<f64> = if rng.gen_bool(0.5) {
        let density = rng.gen_range(0.05..0.9);
        let support = random_set(group, density, rng)?;
        group.elements().map(|g| if support.contains(g) { 1.0 } else { 0.0 }).collect()
    } else {
        group.elements().map(|_| -rng.gen_range(1e-9f64..1.0).ln()).collect()
    };
    GroupMeasure::normalized(group, weights)
}

pub fn random_vector(dim: usize, rng: &mut impl Rng) -> Vec<Complex64> {
    (0..dim).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect()
}

/// Unit vector `u` with `||P u||^2 = mass`, built as
/// `sqrt(mass) p + sqrt(1 - mass) q` from a random invariant unit `p` and a
/// random unit `q` orthogonal to the invariant subspace.
pub fn unit_vector_with_invariant_mass(
    rep: &Representation,
    mass: f64,
    rng: &mut impl Rng,
) -> Result<Vec<Complex64>> {
    if !(0.0..=1.0).contains(&mass) {
        return Err(Error::Domain(format!("invariant mass {mass} outside [0, 1]")));
    }
    let dim = rep.dim();
    for _ in 0..64 {
        let x = random_vector(dim, rng);
        let p = rep.invariant_projection(&x)?;
        let q: Vec<Complex64> = x.iter().zip(&p).map(|(a, b)| a - b).collect();
        let (np, nq) = (norm_sq(&p).sqrt(), norm_sq(&q).sqrt());
        if (mass > 0.0 && np < 1e-6) || (mass < 1.0 && nq < 1e-6) {
            continue;
        }
        let (sp, sq) = (mass.sqrt(), (1.0 - mass).sqrt());
        let u: Vec<Complex64> = p
            .iter()
            .zip(&q)
            .map(|(a, b)| {
                let pa = if np > 0.0 { a / np * sp } else { Complex64::new(0.0, 0.0) };
                let qb = if nq > 0.0 { b / nq * sq } else { Complex64::new(0.0, 0.0) };
                pa + qb
            })
            .collect();
        let n = norm_sq(&u).sqrt();
        return Ok(u.into_iter().map(|z| z / n).collect());
    }
    Err(Error::Domain("representation has no invariant vectors".into()))
}
