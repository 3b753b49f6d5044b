//! Integer chain complexes, their homology, and the catalog of cellular models.
//!
//! Catalog models are the minimal CW structures: one cell per degree for
//! `RP^n`, two cells for `S^n`, the standard square for the torus. A rank-one
//! local system (the orientation character of a line or vector bundle) only
//! changes the cellular differentials, never the cells.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;
use crate::poly::IntPoly;

/// Graded free abelian groups `C_0 .. C_top` with boundaries `d_k: C_k -> C_{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    boundaries: Vec<IntegerMatrix>,
}

impl ChainComplex {
    /// `boundaries[k - 1]` is `d_k` and must have shape `ranks[k-1] x ranks[k]`.
    /// Rejects shape errors and any nonzero `d_k . d_{k+1}`.
    pub fn new(ranks: Vec<usize>, boundaries: Vec<IntegerMatrix>) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::InvalidSpace("chain complex needs at least degree 0".into()));
        }
        if boundaries.len() != ranks.len() - 1 {
            return Err(Error::InvalidSpace(format!(
                "{} degrees need {} boundary matrices, got {}",
                ranks.len(),
                ranks.len() - 1,
                boundaries.len()
            )));
        }
        for (i, d) in boundaries.iter().enumerate() {
            let k = i + 1;
            if d.shape() != (ranks[k - 1], ranks[k]) {
                return Err(Error::ShapeMismatch {
                    degree: k,
                    rows: ranks[k - 1],
                    cols: ranks[k],
                    found_rows: d.rows(),
                    found_cols: d.cols(),
                });
            }
        }
        for (i, pair) in boundaries.windows(2).enumerate() {
            let composite = pair[0].mul(&pair[1]).expect("shapes checked above");
            if !composite.is_zero() {
                return Err(Error::BoundaryNotZero { degree: i + 1 });
            }
        }
        Ok(Self { ranks, boundaries })
    }

    /// All boundaries zero.
    pub fn free(ranks: Vec<usize>) -> Self {
        let boundaries = ranks.windows(2).map(|w| IntegerMatrix::zeros(w[0], w[1])).collect();
        Self { ranks, boundaries }
    }

    pub fn top_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn boundaries(&self) -> &[IntegerMatrix] {
        &self.boundaries
    }

    /// `d_k` for `1 <= k <= top_degree`.
    pub fn boundary(&self, k: usize) -> Option<&IntegerMatrix> {
        k.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    /// Alternating sum of cell counts.
    pub fn cellular_euler(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(k, &r)| if k % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }

    pub fn homology(&self) -> HomologyProfile {
        homology(self)
    }
}

/// One homology group `Z^free_rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_m` with `t_i | t_{i+1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Group {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl Group {
    pub fn free(rank: usize) -> Self {
        Self { free_rank: rank, torsion: Vec::new() }
    }

    pub fn cyclic(order: u64) -> Self {
        Self { free_rank: 0, torsion: vec![BigInt::from(order)] }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// Homology in degrees `0..len`; every degree past the end is zero.
///
/// Equality is degreewise, so profiles that differ only by trailing zero
/// groups compare equal.
#[derive(Clone, Debug, Default, Eq)]
pub struct HomologyProfile {
    degrees: Vec<Group>,
}

impl PartialEq for HomologyProfile {
    fn eq(&self, other: &Self) -> bool {
        let n = self.degrees.len().max(other.degrees.len());
        (0..n).all(|k| self.group(k) == other.group(k))
    }
}

impl HomologyProfile {
    pub fn new(degrees: Vec<Group>) -> Self {
        Self { degrees }
    }

    pub fn degrees(&self) -> &[Group] {
        &self.degrees
    }

    /// `H_k`, trivial past the stored range.
    pub fn group(&self, k: usize) -> Group {
        self.degrees.get(k).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Moves every group up by `r` degrees.
    pub fn shift(&self, r: usize) -> Self {
        let mut degrees = vec![Group::default(); r];
        degrees.extend(self.degrees.iter().cloned());
        Self { degrees }
    }

    pub fn total_free_rank(&self) -> usize {
        self.degrees.iter().map(|g| g.free_rank).sum()
    }

    pub fn poincare_poly(&self) -> IntPoly {
        IntPoly::from_coeffs(self.degrees.iter().map(|g| g.free_rank as i64))
    }

    /// `sum (-1)^k free_rank(k)`.
    pub fn euler_char(&self) -> i64 {
        self.degrees
            .iter()
            .enumerate()
            .map(|(k, g)| if k % 2 == 0 { g.free_rank as i64 } else { -(g.free_rank as i64) })
            .sum()
    }
}

/// `H_k = ker d_k / im d_{k+1}` from the Smith forms of the boundaries.
pub fn homology(c: &ChainComplex) -> HomologyProfile {
    let forms: Vec<_> = c.boundaries.iter().map(IntegerMatrix::smith_normal_form).collect();
    let rank_of = |k: usize| -> usize {
        if k == 0 || k > forms.len() {
            0
        } else {
            forms[k - 1].rank()
        }
    };
    let degrees = (0..c.ranks.len())
        .map(|k| {
            let free_rank = c.ranks[k] - rank_of(k) - rank_of(k + 1);
            let torsion = forms
                .get(k)
                .map(|f| f.invariant_factors.iter().filter(|x| !x.is_one()).cloned().collect())
                .unwrap_or_default();
            Group { free_rank, torsion }
        })
        .collect();
    HomologyProfile { degrees }
}

pub fn poincare_poly(h: &HomologyProfile) -> IntPoly {
    h.poincare_poly()
}

pub fn euler_char(h: &HomologyProfile) -> i64 {
    h.euler_char()
}

/// Rank-one sign local system: trivial, or the catalog space's canonical
/// nontrivial character (the first Stiefel-Whitney class of a bundle).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum OrientationCharacter {
    #[default]
    Trivial,
    CanonicalNontrivial,
}

impl OrientationCharacter {
    pub fn is_trivial(self) -> bool {
        self == Self::Trivial
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpaceDescriptor {
    Point,
    Sphere(u32),
    RealProjective(u32),
    Torus2,
    Explicit(ChainComplex),
}

impl SpaceDescriptor {
    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Sphere(0) => Err(Error::InvalidSpace("sphere dimension must be at least 1".into())),
            Self::RealProjective(0) => {
                Err(Error::InvalidSpace("projective space dimension must be at least 1".into()))
            }
            _ => Ok(()),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Self::Point => 0,
            Self::Sphere(n) | Self::RealProjective(n) => *n as usize,
            Self::Torus2 => 2,
            Self::Explicit(c) => c.top_degree(),
        }
    }

    /// Catalog spaces are closed manifolds; explicit complexes may model pairs.
    pub fn is_closed_catalog(&self) -> bool {
        !matches!(self, Self::Explicit(_))
    }

    pub fn admits(&self, w: OrientationCharacter) -> bool {
        match w {
            OrientationCharacter::Trivial => true,
            OrientationCharacter::CanonicalNontrivial => matches!(
                self,
                Self::Sphere(1) | Self::RealProjective(_) | Self::Torus2
            ),
        }
    }

    pub fn check_admits(&self, w: OrientationCharacter) -> Result<()> {
        if self.admits(w) {
            Ok(())
        } else {
            Err(Error::InadmissibleCharacter { space: self.to_string() })
        }
    }

    pub fn complex(&self, w: OrientationCharacter) -> Result<ChainComplex> {
        catalog_complex(self, w)
    }

    pub fn homology(&self, w: OrientationCharacter) -> Result<HomologyProfile> {
        Ok(homology(&catalog_complex(self, w)?))
    }
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Point => f.write_str("point"),
            Self::Sphere(n) => write!(f, "sphere:{n}"),
            Self::RealProjective(n) => write!(f, "rp:{n}"),
            Self::Torus2 => f.write_str("torus2"),
            Self::Explicit(c) => write!(f, "explicit{:?}", c.ranks()),
        }
    }
}

/// Parses the catalog tags `point`, `sphere:n`, `rp:n`, `torus2`.
impl FromStr for SpaceDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let dim = |v: &str| {
            v.parse::<u32>()
                .map_err(|_| Error::InvalidSpace(format!("bad dimension in `{s}`")))
        };
        let space = match s.split_once(':') {
            None if s == "point" => Self::Point,
            None if s == "torus2" => Self::Torus2,
            Some(("sphere", n)) => Self::Sphere(dim(n)?),
            Some(("rp", n)) => Self::RealProjective(dim(n)?),
            _ => return Err(Error::InvalidSpace(format!("unknown space `{s}`"))),
        };
        space.validate()?;
        Ok(space)
    }
}

fn cyclic_boundary(v: i64) -> IntegerMatrix {
    IntegerMatrix::new(1, 1, vec![BigInt::from(v)]).expect("1x1")
}

/// Cellular chain complex of a catalog space with coefficients twisted by `w`.
///
/// For `RP^n` the untwisted differentials are `d_k = 1 + (-1)^k` and the
/// twisted ones `d_k = 1 - (-1)^k`.
pub fn catalog_complex(s: &SpaceDescriptor, w: OrientationCharacter) -> Result<ChainComplex> {
    s.validate()?;
    s.check_admits(w)?;
    let twisted = !w.is_trivial();
    let c = match s {
        SpaceDescriptor::Point => ChainComplex::free(vec![1]),
        SpaceDescriptor::Sphere(n) => {
            let n = *n as usize;
            let mut ranks = vec![0; n + 1];
            ranks[0] = 1;
            ranks[n] = 1;
            let mut c = ChainComplex::free(ranks);
            if twisted {
                // only S^1 reaches here: the loop acts by -1, d_1 = 1 - (-1)
                c.boundaries[0] = cyclic_boundary(2);
            }
            c
        }
        SpaceDescriptor::RealProjective(n) => {
            let n = *n as usize;
            let boundaries = (1..=n)
                .map(|k| {
                    let even = k % 2 == 0;
                    cyclic_boundary(if even != twisted { 2 } else { 0 })
                })
                .collect();
            ChainComplex { ranks: vec![1; n + 1], boundaries }
        }
        SpaceDescriptor::Torus2 => {
            let mut c = ChainComplex::free(vec![1, 2, 1]);
            if twisted {
                // character -1 on loop a, +1 on loop b; face glued along a b a^-1 b^-1
                c.boundaries[0] = IntegerMatrix::from_rows(2, [[2, 0]]).expect("1x2");
                c.boundaries[1] = IntegerMatrix::from_rows(1, [[0], [2]]).expect("2x1");
            }
            c
        }
        SpaceDescriptor::Explicit(c) => c.clone(),
    };
    Ok(c)
}
