//! Finite measure-preserving actions and the explicit unitary
//! representations accepted by the certificate pipeline.

use fixedbitset::FixedBitSet;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::groups::{ElementSet, Group};
use crate::repr::{GroupMeasure, Irrep};

#[derive(Clone, Debug)]
enum ActionLaw {
    /// `g . y = g y` on the group itself.
    Translation,
    /// `table[g * points + y] = g . y`.
    Table(Vec<u32>),
}

/// A left action of a finite group on `0..points`, carrying the uniform
/// probability measure.
#[derive(Clone, Debug)]
pub struct FiniteAction {
    group: Group,
    points: usize,
    law: ActionLaw,
}

impl FiniteAction {
    /// Left translation of `group` on itself.
    pub fn translation(group: &Group) -> Self {
        Self { group: group.clone(), points: group.order(), law: ActionLaw::Translation }
    }

    /// Tabulates `act` and checks the action axioms and bijectivity.
    pub fn from_fn(group: &Group, points: usize, act: impl Fn(usize, usize) -> usize) -> Result<Self> {
        if points == 0 {
            return Err(Error::InvalidAction("no points".into()));
        }
        let mut table = Vec::with_capacity(group.order() * points);
        for g in group.elements() {
            let mut hit = FixedBitSet::with_capacity(points);
            for y in 0..points {
                let gy = act(g, y);
                if gy >= points {
                    return Err(Error::InvalidAction(format!("{g} . {y} = {gy} out of range")));
                }
                if hit.put(gy) {
                    return Err(Error::InvalidAction(format!("element {g} is not a bijection")));
                }
                table.push(gy as u32);
            }
        }
        let action = Self { group: group.clone(), points, law: ActionLaw::Table(table) };
        let e = group.identity();
        for y in 0..points {
            if action.act(e, y) != y {
                return Err(Error::InvalidAction(format!("identity moves point {y}")));
            }
        }
        for g in group.elements() {
            for h in group.elements() {
                let gh = group.mul(g, h);
                for y in 0..points {
                    if action.act(gh, y) != action.act(g, action.act(h, y)) {
                        return Err(Error::InvalidAction(format!(
                            "({g} {h}) . {y} differs from {g} . ({h} . {y})"
                        )));
                    }
                }
            }
        }
        Ok(action)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn act(&self, g: usize, y: usize) -> usize {
        match &self.law {
            ActionLaw::Translation => self.group.mul(g, y),
            ActionLaw::Table(t) => t[g * self.points + y] as usize,
        }
    }

    pub fn is_translation(&self) -> bool {
        matches!(self.law, ActionLaw::Translation)
    }
}

/// A subset of the points of a [`FiniteAction`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    members: FixedBitSet,
}

impl PointSet {
    pub fn from_indices(points: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members = FixedBitSet::with_capacity(points);
        for y in indices {
            if y >= points {
                return Err(Error::ElementOutOfRange { index: y, order: points });
            }
            members.insert(y);
        }
        Ok(Self { members })
    }

    pub fn from_element_set(set: &ElementSet) -> Self {
        Self::from_indices(set.group().order(), set.iter()).expect("indices are in range")
    }

    pub fn points(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, y: usize) -> bool {
        self.members.contains(y)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    /// `nu(B) = |B| / |Y|`.
    pub fn measure(&self) -> f64 {
        self.len() as f64 / self.points() as f64
    }

    /// `u_B = 1_B / sqrt|B|`, a unit vector in `C^Y`.
    pub fn normalized_indicator(&self) -> Result<Vec<Complex64>> {
        if self.is_empty() {
            return Err(Error::EmptySet("B must be nonempty"));
        }
        let s = 1.0 / (self.len() as f64).sqrt();
        Ok((0..self.points())
            .map(|y| Complex64::new(if self.contains(y) { s } else { 0.0 }, 0.0))
            .collect())
    }
}

/// A finite-dimensional unitary representation built explicitly enough that
/// its invariant projection is computable by group averaging.
#[derive(Clone, Debug)]
pub enum Representation {
    /// `(pi(g) f)(g . y) = f(y)` on `C^Y`.
    Permutation(FiniteAction),
    /// Block-diagonal direct sum of catalog irreps.
    IrrepSum { group: Group, blocks: Vec<Irrep> },
}

impl Representation {
    /// The left regular representation.
    pub fn regular(group: &Group) -> Self {
        Representation::Permutation(FiniteAction::translation(group))
    }

    pub fn irrep_sum(group: &Group, blocks: Vec<Irrep>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Domain("direct sum needs at least one block".into()));
        }
        for b in &blocks {
            if b.group().name() != group.name() {
                return Err(Error::GroupMismatch(b.group().name().into(), group.name().into()));
            }
        }
        Ok(Representation::IrrepSum { group: group.clone(), blocks })
    }

    pub fn group(&self) -> &Group {
        match self {
            Representation::Permutation(a) => a.group(),
            Representation::IrrepSum { group, .. } => group,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Representation::Permutation(a) => a.points(),
            Representation::IrrepSum { blocks, .. } => blocks.iter().map(Irrep::dim).sum(),
        }
    }

    pub fn check_vector(&self, v: &[Complex64]) -> Result<()> {
        if v.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim(), got: v.len() })
        }
    }

    /// `pi(g) v`.
    pub fn apply(&self, g: usize, v: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); v.len()];
        self.accumulate(g, 1.0, v, &mut out);
        out
    }

    /// `out += weight * pi(g) v`.
    fn accumulate(&self, g: usize, weight: f64, v: &[Complex64], out: &mut [Complex64]) {
        match self {
            Representation::Permutation(a) => {
                for (y, x) in v.iter().enumerate() {
                    out[a.act(g, y)] += x * weight;
                }
            }
            Representation::IrrepSum { blocks, .. } => {
                let mut offset = 0;
                for b in blocks {
                    let d = b.dim();
                    let m = b.matrix(g);
                    for i in 0..d {
                        let row: Complex64 = (0..d).map(|j| m[(i, j)] * v[offset + j]).sum();
                        out[offset + i] += row * weight;
                    }
                    offset += d;
                }
            }
        }
    }

    /// `theta(mu) v = sum_g mu(g) pi(g) v`.
    pub fn apply_measure(&self, mu: &GroupMeasure, v: &[Complex64]) -> Result<Vec<Complex64>> {
        self.check_vector(v)?;
        if mu.group().name() != self.group().name() {
            return Err(Error::GroupMismatch(mu.group().name().into(), self.group().name().into()));
        }
        let mut out = vec![Complex64::new(0.0, 0.0); v.len()];
        for g in mu.support() {
            self.accumulate(g, mu.weight(g), v, &mut out);
        }
        Ok(out)
    }

    /// Projection onto invariant vectors, `|G|^-1 sum_g pi(g) v`.
    pub fn invariant_projection(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        self.check_vector(v)?;
        let group = self.group();
        let w = 1.0 / group.order() as f64;
        let mut out = vec![Complex64::new(0.0, 0.0); v.len()];
        for g in group.elements() {
            self.accumulate(g, w, v, &mut out);
        }
        Ok(out)
    }
}

/// `<x, y> = sum_i x_i conj(y_i)`.
pub fn inner(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter().zip(y).map(|(a, b)| a * b.conj()).sum()
}

pub fn norm_sq(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum()
}
