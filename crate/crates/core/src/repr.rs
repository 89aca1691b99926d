//! Irreducible unitary representations of the supported groups, Fourier
//! transforms of measures, and the semi-norms `|g|_sigma`, `|g|_S`.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{compose, ElementSet, Group, GroupTable, Law};
use crate::matrix::{hs_norm, op_norm, CMatrix};

/// Stable text identifier of an irrep, e.g. `chi(4)`, `dih2d:1`, `a5:3b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IrrepId(pub String);

impl fmt::Display for IrrepId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for IrrepId {
    fn from(s: &str) -> Self {
        IrrepId(s.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum LineTag {
    Trivial,
    Det,
    Rot,
    RotDet,
}

impl LineTag {
    fn label(self) -> &'static str {
        match self {
            LineTag::Trivial => "trivial",
            LineTag::Det => "det",
            LineTag::Rot => "rot",
            LineTag::RotDet => "rotdet",
        }
    }
}

#[derive(Clone, Debug)]
enum Kind {
    Character { freq: Vec<usize> },
    DihedralLine(LineTag),
    DihedralPlane { h: usize },
    Tabulated(Arc<Vec<CMatrix>>),
}

/// An irreducible unitary representation, evaluated on demand.
#[derive(Clone, Debug)]
pub struct Irrep {
    id: IrrepId,
    dim: usize,
    is_trivial: bool,
    group: Group,
    kind: Kind,
}

impl Irrep {
    /// Representation given by an explicit table of matrices, one per
    /// element in index order. No irreducibility or homomorphism check is
    /// made here; see [`max_homomorphism_defect`].
    pub fn tabulated(id: &str, group: &Group, matrices: Vec<CMatrix>) -> Result<Self> {
        if matrices.len() != group.order() {
            return Err(Error::DimensionMismatch { expected: group.order(), got: matrices.len() });
        }
        let dim = matrices[0].dim();
        if matrices.iter().any(|m| m.dim() != dim) {
            return Err(Error::Invariant(format!("{id}: matrices of mixed dimension")));
        }
        let is_trivial =
            dim == 1 && matrices.iter().all(|m| (m[(0, 0)] - 1.0).norm() < 1e-12);
        Ok(Self {
            id: IrrepId(id.to_string()),
            dim,
            is_trivial,
            group: group.clone(),
            kind: Kind::Tabulated(Arc::new(matrices)),
        })
    }

    pub fn id(&self) -> &IrrepId {
        &self.id
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_trivial(&self) -> bool {
        self.is_trivial
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    /// `sigma(g)`.
    pub fn matrix(&self, g: usize) -> CMatrix {
        match &self.kind {
            Kind::Character { freq } => CMatrix::scalar(self.character_phase(freq, g)),
            Kind::DihedralLine(tag) => {
                let n = self.group.dihedral_n().expect("dihedral irrep on dihedral group");
                let (k, flip) = (g % n, g / n);
                let rot_sign = matches!(tag, LineTag::Rot | LineTag::RotDet) && k % 2 == 1;
                let flip_sign = matches!(tag, LineTag::Det | LineTag::RotDet) && flip == 1;
                let v = if rot_sign ^ flip_sign { -1.0 } else { 1.0 };
                CMatrix::scalar(Complex64::new(v, 0.0))
            }
            Kind::DihedralPlane { h } => {
                let n = self.group.dihedral_n().expect("dihedral irrep on dihedral group");
                let (k, flip) = (g % n, g / n);
                let angle = 2.0 * PI * ((h * k) % n) as f64 / n as f64;
                let (s, c) = angle.sin_cos();
                // R(angle) * diag(1, -1)^flip
                let f = if flip == 1 { -1.0 } else { 1.0 };
                CMatrix::from_real_rows(&[&[c, -s * f], &[s, c * f]])
            }
            Kind::Tabulated(mats) => mats[g],
        }
    }

    fn character_phase(&self, freq: &[usize], g: usize) -> Complex64 {
        let moduli = self.group.moduli().expect("characters live on cyclic products");
        let mut g = g;
        let mut turns = 0.0;
        for (&j, &n) in freq.iter().zip(moduli) {
            let x = g % n;
            g /= n;
            turns += ((j * x) % n) as f64 / n as f64;
        }
        Complex64::from_polar(1.0, 2.0 * PI * turns)
    }

    /// `tr sigma(g)`.
    pub fn character(&self, g: usize) -> Complex64 {
        self.matrix(g).trace()
    }
}

/// One representative of every irrep class of a group.
#[derive(Clone, Debug)]
pub struct IrrepCatalog {
    group: Group,
    items: Vec<Irrep>,
    index: HashMap<IrrepId, usize>,
}

impl IrrepCatalog {
    /// Builds a catalog from explicit items. The caller is responsible for
    /// completeness; [`IrrepCatalog::completeness_sum`] checks it.
    pub fn from_items(group: &Group, items: Vec<Irrep>) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, item) in items.iter().enumerate() {
            if item.group.name() != group.name() {
                return Err(Error::GroupMismatch(item.group.name().into(), group.name().into()));
            }
            if index.insert(item.id.clone(), i).is_some() {
                return Err(Error::Invariant(format!("duplicate irrep id {}", item.id)));
            }
        }
        Ok(Self { group: group.clone(), items, index })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn items(&self) -> &[Irrep] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn get(&self, id: &IrrepId) -> Result<&Irrep> {
        self.index.get(id).map(|&i| &self.items[i]).ok_or_else(|| Error::UnknownIrrep(id.0.clone()))
    }

    pub fn position(&self, id: &IrrepId) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn nontrivial(&self) -> impl Iterator<Item = &Irrep> {
        self.items.iter().filter(|s| !s.is_trivial)
    }

    /// Smallest dimension of a nontrivial irrep; `None` for the trivial group.
    pub fn d_min(&self) -> Option<usize> {
        self.nontrivial().map(Irrep::dim).min()
    }

    /// `sum_sigma dim(sigma)^2`; equals `|G|` for a complete catalog.
    pub fn completeness_sum(&self) -> usize {
        self.items.iter().map(|s| s.dim * s.dim).sum()
    }

    /// Largest deviation of the character inner products from the identity
    /// matrix.
    pub fn max_orthogonality_defect(&self) -> f64 {
        let order = self.group.order();
        let chars: Vec<Vec<Complex64>> = self
            .items
            .iter()
            .map(|s| self.group.elements().map(|g| s.character(g)).collect())
            .collect();
        let mut worst = 0.0f64;
        for (i, ci) in chars.iter().enumerate() {
            for (j, cj) in chars.iter().enumerate().skip(i) {
                let ip: Complex64 =
                    ci.iter().zip(cj).map(|(a, b)| a * b.conj()).sum::<Complex64>() / order as f64;
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((ip - want).norm());
            }
        }
        worst
    }
}

/// Largest entrywise deviation of `sigma(g) sigma(g)*` from the identity.
pub fn max_unitarity_defect(sigma: &Irrep, elements: impl IntoIterator<Item = usize>) -> f64 {
    let id = CMatrix::identity(sigma.dim);
    elements
        .into_iter()
        .map(|g| {
            let m = sigma.matrix(g);
            (m * m.adjoint()).max_abs_diff(&id)
        })
        .fold(0.0, f64::max)
}

/// Largest entrywise deviation of `sigma(g1 g2)` from `sigma(g1) sigma(g2)`.
pub fn max_homomorphism_defect(
    sigma: &Irrep,
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> f64 {
    let g = &sigma.group;
    pairs
        .into_iter()
        .map(|(a, b)| (sigma.matrix(a) * sigma.matrix(b)).max_abs_diff(&sigma.matrix(g.mul(a, b))))
        .fold(0.0, f64::max)
}

fn cyclic_catalog(group: &Group, moduli: &[usize]) -> Vec<Irrep> {
    group
        .elements()
        .map(|j| {
            let freq = group.coordinates(j).expect("cyclic product");
            let label = freq.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(",");
            debug_assert_eq!(freq.len(), moduli.len());
            Irrep {
                id: IrrepId(format!("chi({label})")),
                dim: 1,
                is_trivial: j == 0,
                group: group.clone(),
                kind: Kind::Character { freq },
            }
        })
        .collect()
}

fn dihedral_catalog(group: &Group, n: usize) -> Vec<Irrep> {
    let mut tags = vec![LineTag::Trivial, LineTag::Det];
    if n.is_multiple_of(2) {
        tags.extend([LineTag::Rot, LineTag::RotDet]);
    }
    let mut items: Vec<Irrep> = tags
        .into_iter()
        .map(|tag| Irrep {
            id: IrrepId(format!("dih1d:{}", tag.label())),
            dim: 1,
            is_trivial: tag == LineTag::Trivial,
            group: group.clone(),
            kind: Kind::DihedralLine(tag),
        })
        .collect();
    items.extend((1..).take_while(|h| 2 * h < n).map(|h| Irrep {
        id: IrrepId(format!("dih2d:{h}")),
        dim: 2,
        is_trivial: false,
        group: group.clone(),
        kind: Kind::DihedralPlane { h },
    }));
    items
}

type Mat3 = [[f64; 3]; 3];

fn mat3_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn mat3_close(a: &Mat3, b: &Mat3) -> bool {
    (0..3).all(|i| (0..3).all(|j| (a[i][j] - b[i][j]).abs() < 1e-9))
}

fn mat3_order(a: &Mat3) -> usize {
    let id = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let mut p = *a;
    for k in 1..=10 {
        if mat3_close(&p, &id) {
            return k;
        }
        p = mat3_mul(&p, a);
    }
    usize::MAX
}

/// Rotation by `angle` about the unit vector along `axis` (Rodrigues).
fn axis_rotation(axis: [f64; 3], angle: f64) -> Mat3 {
    let len = axis.iter().map(|x| x * x).sum::<f64>().sqrt();
    let [x, y, z] = axis.map(|v| v / len);
    let (s, c) = angle.sin_cos();
    let t = 1.0 - c;
    [
        [t * x * x + c, t * x * y - s * z, t * x * z + s * y],
        [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
        [t * x * z - s * y, t * y * z + s * x, t * z * z + c],
    ]
}

/// The 60 rotations of the icosahedron with vertices the cyclic
/// permutations of `(0, +-1, +-tau)`.
fn icosahedral_rotations() -> Vec<Mat3> {
    let tau = (1.0 + 5f64.sqrt()) / 2.0;
    let vertex = [0.0, 1.0, tau];
    // face spanned by (0, 1, tau), (0, -1, tau), (tau, 0, 1)
    let face = [tau, 0.0, 2.0 * tau + 1.0];
    let gens = [axis_rotation(vertex, 2.0 * PI / 5.0), axis_rotation(face, 2.0 * PI / 3.0)];
    let mut all: Vec<Mat3> = vec![[[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]];
    let mut frontier = 0;
    while frontier < all.len() {
        let m = all[frontier];
        frontier += 1;
        for g in &gens {
            let p = mat3_mul(&m, g);
            if !all.iter().any(|q| mat3_close(q, &p)) {
                all.push(p);
            }
        }
    }
    all
}

/// Extends `x -> img_x`, `y -> img_y` to a map on all of `group` along the
/// Cayley graph; returns `None` if the assignment is inconsistent.
fn extend_along_generators(
    group: &GroupTable,
    gens: [(usize, Mat3); 2],
) -> Option<Vec<Mat3>> {
    let mut images: Vec<Option<Mat3>> = vec![None; group.order()];
    images[group.identity()] = Some([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);
    let mut queue = vec![group.identity()];
    let mut head = 0;
    while head < queue.len() {
        let g = queue[head];
        head += 1;
        let mg = images[g].expect("queued elements have images");
        for (s, ms) in &gens {
            let h = group.mul(g, *s);
            let mh = mat3_mul(&mg, ms);
            match &images[h] {
                Some(existing) if !mat3_close(existing, &mh) => return None,
                Some(_) => {}
                None => {
                    images[h] = Some(mh);
                    queue.push(h);
                }
            }
        }
    }
    images.into_iter().collect()
}

fn element_order(group: &GroupTable, g: usize) -> usize {
    let mut p = g;
    let mut k = 1;
    while p != group.identity() {
        p = group.mul(p, g);
        k += 1;
    }
    k
}

/// A homomorphism `A5 -> SO(3)` onto the icosahedral rotation group.
fn icosahedral_representation(group: &GroupTable) -> Vec<Mat3> {
    // (2, 3, 5) generating pair
    let x = group.elements().find(|&g| element_order(group, g) == 2).expect("A5 has involutions");
    let y = group
        .elements()
        .find(|&g| element_order(group, g) == 3 && element_order(group, group.mul(x, g)) == 5)
        .expect("A5 is a (2,3,5) triangle quotient");
    let rotations = icosahedral_rotations();
    debug_assert_eq!(rotations.len(), 60);
    for mx in rotations.iter().filter(|m| mat3_order(m) == 2) {
        for my in rotations.iter().filter(|m| mat3_order(m) == 3) {
            if mat3_order(&mat3_mul(mx, my)) != 5 {
                continue;
            }
            if let Some(images) = extend_along_generators(group, [(x, *mx), (y, *my)]) {
                return images;
            }
        }
    }
    unreachable!("the icosahedral rotation group is isomorphic to A5")
}

/// Orthonormal basis of the complement of `(1, .., 1)` in `R^n` (Helmert).
fn helmert_basis(n: usize) -> Vec<Vec<f64>> {
    (1..n)
        .map(|k| {
            let s = 1.0 / ((k * (k + 1)) as f64).sqrt();
            (0..n)
                .map(|i| match i.cmp(&k) {
                    std::cmp::Ordering::Less => s,
                    std::cmp::Ordering::Equal => -(k as f64) * s,
                    std::cmp::Ordering::Greater => 0.0,
                })
                .collect()
        })
        .collect()
}

/// Restricts the permutation representation `e_i -> e_{perm[i]}` to the
/// complement of the all-ones vector.
fn restricted_permutation_matrix(perm: &[usize], basis: &[Vec<f64>]) -> CMatrix {
    let d = basis.len();
    CMatrix::from_fn(d, |a, b| {
        // <q_a, P q_b> = sum_i q_a[perm[i]] q_b[i]
        let v: f64 = perm.iter().enumerate().map(|(i, &pi)| basis[a][pi] * basis[b][i]).sum();
        Complex64::new(v, 0.0)
    })
}

fn alternating5_catalog(group: &Group) -> Vec<Irrep> {
    let rank = |p: [u8; 5]| {
        group.elements().find(|&g| group.permutation(g) == Some(p)).expect("even permutation")
    };
    let to_c = |m: &Mat3| CMatrix::from_fn(3, |i, j| Complex64::new(m[i][j], 0.0));

    let ico = icosahedral_representation(group);
    let three_a: Vec<CMatrix> = ico.iter().map(to_c).collect();
    // conjugating by the odd permutation (0 1) swaps the two 5-cycle classes
    let t = [1u8, 0, 2, 3, 4];
    let three_b: Vec<CMatrix> = group
        .elements()
        .map(|g| {
            let p = group.permutation(g).expect("A5 element");
            three_a[rank(compose(&t, &compose(&p, &t)))]
        })
        .collect();

    let basis5 = helmert_basis(5);
    let four: Vec<CMatrix> = group
        .elements()
        .map(|g| {
            let p = group.permutation(g).expect("A5 element");
            let perm: Vec<usize> = p.iter().map(|&x| x as usize).collect();
            restricted_permutation_matrix(&perm, &basis5)
        })
        .collect();

    // conjugation action on the six Sylow 5-subgroups
    let mut sylows: Vec<Vec<usize>> = Vec::new();
    for c in group.elements().filter(|&g| element_order(group, g) == 5) {
        let mut h: Vec<usize> = std::iter::successors(Some(group.identity()), |&p| {
            let q = group.mul(p, c);
            (q != group.identity()).then_some(q)
        })
        .collect();
        h.sort_unstable();
        if !sylows.contains(&h) {
            sylows.push(h);
        }
    }
    debug_assert_eq!(sylows.len(), 6);
    let basis6 = helmert_basis(6);
    let five: Vec<CMatrix> = group
        .elements()
        .map(|g| {
            let gi = group.inv(g);
            let perm: Vec<usize> = sylows
                .iter()
                .map(|h| {
                    let mut img: Vec<usize> =
                        h.iter().map(|&x| group.mul(group.mul(g, x), gi)).collect();
                    img.sort_unstable();
                    sylows.iter().position(|k| *k == img).expect("conjugate of a Sylow subgroup")
                })
                .collect();
            restricted_permutation_matrix(&perm, &basis6)
        })
        .collect();

    let trivial = vec![CMatrix::identity(1); 60];
    [("a5:1a", trivial), ("a5:3a", three_a), ("a5:3b", three_b), ("a5:4a", four), ("a5:5a", five)]
        .into_iter()
        .map(|(id, mats)| Irrep::tabulated(id, group, mats).expect("60 matrices"))
        .collect()
}

/// Complete catalog of irreducible unitary representations of `group`.
pub fn irreps(group: &Group) -> IrrepCatalog {
    let items = match &group.law {
        Law::Cyclic { moduli } => cyclic_catalog(group, moduli),
        Law::Dihedral { n } => dihedral_catalog(group, *n),
        Law::Alternating5 { .. } => alternating5_catalog(group),
    };
    IrrepCatalog::from_items(group, items).expect("canonical catalogs have distinct ids")
}

/// `|g|_sigma = ||sigma(g) - I||_op`.
pub fn seminorm_gamma(sigma: &Irrep, g: usize) -> f64 {
    let m = sigma.matrix(g);
    if sigma.dim == 1 {
        return (m[(0, 0)] - 1.0).norm();
    }
    op_norm(&(m - CMatrix::identity(sigma.dim)))
}

/// `|g|_S = max_{sigma in S} |g|_sigma`, and `0` for empty `S`.
pub fn seminorm_set<'a>(set: impl IntoIterator<Item = &'a Irrep>, g: usize) -> f64 {
    set.into_iter().map(|s| seminorm_gamma(s, g)).fold(0.0, f64::max)
}

/// A probability measure on a finite group.
#[derive(Clone, Debug)]
pub struct GroupMeasure {
    group: Group,
    weights: Vec<f64>,
}

impl GroupMeasure {
    pub fn new(group: &Group, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != group.order() {
            return Err(Error::DimensionMismatch { expected: group.order(), got: weights.len() });
        }
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidMeasure("weights must be finite and nonnegative".into()));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidMeasure(format!("weights sum to {total}, not 1")));
        }
        Ok(Self { group: group.clone(), weights })
    }

    /// Normalizes nonnegative weights to total mass one.
    pub fn normalized(group: &Group, weights: Vec<f64>) -> Result<Self> {
        let total: f64 = weights.iter().sum();
        if !(total > 0.0) {
            return Err(Error::InvalidMeasure("zero total mass".into()));
        }
        Self::new(group, weights.into_iter().map(|w| w / total).collect())
    }

    /// Weight `1/|A|` on each element of `A`.
    pub fn uniform_on(set: &ElementSet) -> Result<Self> {
        let n = set.len();
        if n == 0 {
            return Err(Error::EmptySet("uniform measure needs a nonempty set"));
        }
        let mut weights = vec![0.0; set.group().order()];
        for g in set.iter() {
            weights[g] = 1.0 / n as f64;
        }
        Ok(Self { group: set.group().clone(), weights })
    }

    pub fn point_mass(group: &Group, g: usize) -> Result<Self> {
        group.check_element(g)?;
        let mut weights = vec![0.0; group.order()];
        weights[g] = 1.0;
        Ok(Self { group: group.clone(), weights })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn weight(&self, g: usize) -> f64 {
        self.weights[g]
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.weights.iter().enumerate().filter(|(_, w)| **w > 0.0).map(|(g, _)| g)
    }

    /// `||d mu / dm||_{L^2}^2 = |G| sum_g mu(g)^2`.
    pub fn l2_density_sq(&self) -> f64 {
        self.group.order() as f64 * self.weights.iter().map(|w| w * w).sum::<f64>()
    }

    /// `||d mu / dm||_inf = |G| max_g mu(g)`.
    pub fn sup_density(&self) -> f64 {
        self.group.order() as f64 * self.weights.iter().copied().fold(0.0, f64::max)
    }
}

/// `sigma(mu) = sum_g mu(g) sigma(g)`.
pub fn fourier_of_measure(sigma: &Irrep, mu: &GroupMeasure) -> Result<CMatrix> {
    if sigma.group.name() != mu.group.name() {
        return Err(Error::GroupMismatch(sigma.group.name().into(), mu.group.name().into()));
    }
    let mut acc = CMatrix::zeros(sigma.dim);
    for g in mu.support() {
        acc += sigma.matrix(g).scale(mu.weights[g]);
    }
    Ok(acc)
}

/// `sum_sigma d_sigma ||sigma(mu)||_HS^2`.
pub fn parseval_sum(catalog: &IrrepCatalog, mu: &GroupMeasure) -> Result<f64> {
    catalog.items.iter().try_fold(0.0, |acc, sigma| {
        let hs = hs_norm(&fourier_of_measure(sigma, mu)?);
        Ok(acc + sigma.dim as f64 * hs * hs)
    })
}

/// `||sigma(mu)||_op` for every irrep, in catalog order.
pub fn spectrum_norms(catalog: &IrrepCatalog, mu: &GroupMeasure) -> Result<Vec<f64>> {
    use rayon::prelude::*;
    catalog
        .items
        .par_iter()
        .map(|sigma| fourier_of_measure(sigma, mu).map(|m| op_norm(&m)))
        .collect()
}
