//! Finite Morse complexes built from signed gradient trajectories, and their
//! stabilization by a bundle `E^+ ⊕ E^-`.
//!
//! Trajectory counts are inputs. Each trajectory from a critical point of
//! index `k` to one of index `k - 1` carries the sign coming from the chosen
//! orientations of unstable manifolds; the differential entry is the sum of
//! those signs. Stabilizing along `E^-` raises every index by its rank and
//! multiplies each trajectory's sign by whether the fiber orientation is
//! transported consistently along it.

use std::collections::{HashMap, HashSet};
use std::ops::Mul;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::homology::{homology, ChainComplex, HomologyProfile};
use crate::matrix::IntegerMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(v: i64) -> Option<Self> {
        match v {
            1 => Some(Self::Plus),
            -1 => Some(Self::Minus),
            _ => None,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Self::Plus => 1,
            Self::Minus => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Self::Plus => Self::Minus,
            Self::Minus => Self::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub label: String,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Trajectory {
    pub label: String,
    pub from: String,
    pub to: String,
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseData {
    generators: Vec<Generator>,
    trajectories: Vec<Trajectory>,
}

impl MorseData {
    /// Validates labels, endpoint indices, and `d ∘ d = 0`.
    pub fn new(generators: Vec<Generator>, trajectories: Vec<Trajectory>) -> Result<Self> {
        let data = Self::unchecked(generators, trajectories)?;
        data.chain_complex().map(|_| data)
    }

    fn unchecked(generators: Vec<Generator>, trajectories: Vec<Trajectory>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidMorse("no critical points".into()));
        }
        let mut index_of = HashMap::new();
        for g in &generators {
            if index_of.insert(g.label.as_str(), g.index).is_some() {
                return Err(Error::InvalidMorse(format!("duplicate generator `{}`", g.label)));
            }
        }
        let mut seen = HashSet::new();
        for t in &trajectories {
            if !seen.insert(t.label.as_str()) {
                return Err(Error::InvalidMorse(format!("duplicate trajectory `{}`", t.label)));
            }
            let lookup = |l: &str| {
                index_of
                    .get(l)
                    .copied()
                    .ok_or_else(|| Error::InvalidMorse(format!("trajectory `{}` names unknown generator `{l}`", t.label)))
            };
            let (from, to) = (lookup(&t.from)?, lookup(&t.to)?);
            if from != to + 1 {
                return Err(Error::InvalidMorse(format!(
                    "trajectory `{}` goes from index {from} to index {to}",
                    t.label
                )));
            }
        }
        Ok(Self { generators, trajectories })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn trajectories(&self) -> &[Trajectory] {
        &self.trajectories
    }

    pub fn top_index(&self) -> usize {
        self.generators.iter().map(|g| g.index).max().unwrap_or(0)
    }

    /// Position of each generator within its index, in input order.
    fn basis_positions(&self) -> (Vec<usize>, HashMap<&str, usize>) {
        let mut ranks = vec![0; self.top_index() + 1];
        let mut pos = HashMap::new();
        for g in &self.generators {
            pos.insert(g.label.as_str(), ranks[g.index]);
            ranks[g.index] += 1;
        }
        (ranks, pos)
    }

    /// Matrices `d_k` for `k = 1..=top_index`, rows indexed by index `k - 1`
    /// generators and columns by index `k` generators.
    pub fn differentials(&self) -> Vec<IntegerMatrix> {
        let (ranks, pos) = self.basis_positions();
        let index_of: HashMap<&str, usize> =
            self.generators.iter().map(|g| (g.label.as_str(), g.index)).collect();
        let mut ds: Vec<IntegerMatrix> =
            ranks.windows(2).map(|w| IntegerMatrix::zeros(w[0], w[1])).collect();
        for t in &self.trajectories {
            let k = index_of[t.from.as_str()];
            let (r, c) = (pos[t.to.as_str()], pos[t.from.as_str()]);
            let d = &mut ds[k - 1];
            let v = d.get(r, c) + BigInt::from(t.sign.as_i64());
            d.set(r, c, v);
        }
        ds
    }

    pub fn chain_complex(&self) -> Result<ChainComplex> {
        let (ranks, _) = self.basis_positions();
        ChainComplex::new(ranks, self.differentials())
    }

    /// Reverses the orientation of one unstable manifold: every trajectory
    /// starting or ending at `label` changes sign.
    pub fn reorient(&self, label: &str) -> Result<Self> {
        if !self.generators.iter().any(|g| g.label == label) {
            return Err(Error::InvalidMorse(format!("unknown generator `{label}`")));
        }
        let trajectories = self
            .trajectories
            .iter()
            .map(|t| {
                let mut t = t.clone();
                if t.from == label {
                    t.sign = t.sign.flip();
                }
                if t.to == label {
                    t.sign = t.sign.flip();
                }
                t
            })
            .collect();
        Ok(Self { generators: self.generators.clone(), trajectories })
    }
}

/// One sign per trajectory, in the trajectory order of the Morse data it
/// applies to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignTwist {
    signs: Vec<Sign>,
}

impl SignTwist {
    pub fn new(signs: Vec<Sign>) -> Self {
        Self { signs }
    }

    pub fn all_plus(m: &MorseData) -> Self {
        Self { signs: vec![Sign::Plus; m.trajectories.len()] }
    }

    /// Minus on the named trajectories, plus elsewhere.
    pub fn flipping(m: &MorseData, labels: &[impl AsRef<str>]) -> Result<Self> {
        let mut signs = vec![Sign::Plus; m.trajectories.len()];
        for l in labels {
            let l = l.as_ref();
            let i = m
                .trajectories
                .iter()
                .position(|t| t.label == l)
                .ok_or_else(|| Error::InvalidMorse(format!("twist names unknown trajectory `{l}`")))?;
            signs[i] = Sign::Minus;
        }
        Ok(Self { signs })
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// Entrywise product.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.signs.len() != other.signs.len() {
            return Err(Error::TwistShape { expected: self.signs.len(), found: other.signs.len() });
        }
        Ok(Self {
            signs: self.signs.iter().zip(&other.signs).map(|(&a, &b)| a * b).collect(),
        })
    }
}

pub fn morse_homology(m: &MorseData) -> Result<HomologyProfile> {
    Ok(homology(&m.chain_complex()?))
}

/// Raises every index by `rank` and multiplies trajectory signs by `twist`.
///
/// Fails with [`Error::InconsistentTwist`] when the twisted differentials no
/// longer square to zero.
pub fn stabilize(m: &MorseData, rank: usize, twist: &SignTwist) -> Result<MorseData> {
    if twist.signs.len() != m.trajectories.len() {
        return Err(Error::TwistShape { expected: m.trajectories.len(), found: twist.signs.len() });
    }
    let generators = m
        .generators
        .iter()
        .map(|g| Generator { label: g.label.clone(), index: g.index + rank })
        .collect();
    let trajectories = m
        .trajectories
        .iter()
        .zip(&twist.signs)
        .map(|(t, &s)| Trajectory { sign: t.sign * s, ..t.clone() })
        .collect();
    let out = MorseData::unchecked(generators, trajectories)?;
    match out.chain_complex() {
        Ok(_) => Ok(out),
        Err(Error::BoundaryNotZero { degree }) => Err(Error::InconsistentTwist { degree }),
        Err(e) => Err(e),
    }
}
