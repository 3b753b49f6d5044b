//! Morse-Bott data, the Morse-Bott polynomial, the inequality verdict, and
//! the second page of the critical-value filtration spectral sequence.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bundles::{thom_pair_homology, BundleDescriptor};
use crate::error::{Error, Result};
use crate::homology::{HomologyProfile, OrientationCharacter, SpaceDescriptor};
use crate::poly::IntPoly;

/// A connected component of the critical set.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalSubmanifold {
    pub space: SpaceDescriptor,
    /// Rank of the negative normal bundle.
    pub index: usize,
    /// Orientation character of the negative normal bundle.
    pub negative_character: OrientationCharacter,
    /// Critical value, when known.
    pub value: Option<f64>,
}

impl CriticalSubmanifold {
    pub fn new(space: SpaceDescriptor, index: usize, negative_character: OrientationCharacter) -> Self {
        Self { space, index, negative_character, value: None }
    }

    pub fn with_value(mut self, value: f64) -> Self {
        self.value = Some(value);
        self
    }

    pub fn negative_bundle(&self) -> BundleDescriptor {
        BundleDescriptor { base: self.space.clone(), rank: self.index, character: self.negative_character }
    }
}

/// Critical submanifolds listed by increasing critical value.
#[derive(Clone, Debug, PartialEq)]
pub struct MorseBottData {
    ambient: SpaceDescriptor,
    criticals: Vec<CriticalSubmanifold>,
    warnings: Vec<String>,
}

impl MorseBottData {
    pub fn new(ambient: SpaceDescriptor, criticals: Vec<CriticalSubmanifold>) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidMorseBott(msg));
        ambient.validate()?;
        if criticals.is_empty() {
            return invalid("no critical submanifolds".into());
        }
        let closed = ambient.is_closed_catalog();
        let dim = ambient.dim();
        for (i, c) in criticals.iter().enumerate() {
            c.space.validate()?;
            c.space.check_admits(c.negative_character)?;
            if c.index == 0 && !c.negative_character.is_trivial() {
                return Err(Error::InvalidBundle(format!(
                    "critical submanifold {i} has index 0 but a twisted negative bundle"
                )));
            }
            if let SpaceDescriptor::Explicit(_) = c.space {
                let h0 = c.space.homology(OrientationCharacter::Trivial)?.group(0);
                if h0.free_rank != 1 || !h0.torsion.is_empty() {
                    return invalid(format!("critical submanifold {i} is not connected (H_0 = {h0})"));
                }
            }
            if closed && c.index + c.space.dim() > dim {
                return invalid(format!(
                    "critical submanifold {i}: index {} + dimension {} exceeds ambient dimension {dim}",
                    c.index,
                    c.space.dim()
                ));
            }
        }
        let values: Vec<f64> = criticals.iter().filter_map(|c| c.value).collect();
        if values.windows(2).any(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less)) {
            return invalid("critical values must be strictly increasing".into());
        }

        let has_min = criticals.iter().any(|c| c.index == 0);
        let has_max = criticals.iter().any(|c| c.index + c.space.dim() == dim);
        let mut warnings = Vec::new();
        for (ok, what) in [(has_min, "minimum"), (has_max, "maximum")] {
            if ok {
                continue;
            }
            if closed {
                return invalid(format!("a closed manifold needs a {what}"));
            }
            warnings.push(format!("no critical submanifold looks like a {what}"));
        }
        Ok(Self { ambient, criticals, warnings })
    }

    pub fn ambient(&self) -> &SpaceDescriptor {
        &self.ambient
    }

    pub fn criticals(&self) -> &[CriticalSubmanifold] {
        &self.criticals
    }

    /// Non-fatal findings for explicit ambients (missing minimum or maximum).
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn ambient_homology(&self) -> Result<HomologyProfile> {
        self.ambient.homology(OrientationCharacter::Trivial)
    }
}

/// Coefficients used for the homology of each critical submanifold.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CoefficientMode {
    /// Plain integer coefficients.
    Untwisted,
    /// Coefficients twisted by the orientation character of the negative bundle.
    #[default]
    Local,
}

impl CoefficientMode {
    fn character(self, c: &CriticalSubmanifold) -> OrientationCharacter {
        match self {
            Self::Untwisted => OrientationCharacter::Trivial,
            Self::Local => c.negative_character,
        }
    }
}

impl fmt::Display for CoefficientMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Untwisted => "untwisted",
            Self::Local => "local",
        })
    }
}

/// `sum_j P_t(M_j) t^{index_j}`.
pub fn mb_polynomial(d: &MorseBottData, mode: CoefficientMode) -> Result<IntPoly> {
    d.criticals.iter().try_fold(IntPoly::zero(), |acc, c| {
        let p = c.space.homology(mode.character(c))?.poincare_poly();
        Ok(&acc + &p.shift(c.index))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InequalityVerdict {
    /// `MB = P + (1 + t) Q` with `Q` nonnegative.
    Holds { q: IntPoly },
    /// `MB - P` has no factor `1 + t`; `chi_gap` is `(MB - P)(-1)`.
    FailsNotDivisible { chi_gap: BigInt },
    /// The unique quotient has a negative coefficient, lowest at `degree`.
    FailsNegativeCoefficient { degree: usize, q: IntPoly },
}

impl InequalityVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, Self::Holds { .. })
    }

    pub fn quotient(&self) -> Option<&IntPoly> {
        match self {
            Self::Holds { q } | Self::FailsNegativeCoefficient { q, .. } => Some(q),
            Self::FailsNotDivisible { .. } => None,
        }
    }
}

impl fmt::Display for InequalityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Holds { q } => write!(f, "Holds(Q={q})"),
            Self::FailsNotDivisible { chi_gap } => write!(f, "FailsNotDivisible(chi_gap={chi_gap})"),
            Self::FailsNegativeCoefficient { degree, .. } => write!(f, "FailsNegativeCoefficient(k={degree})"),
        }
    }
}

/// Quotient of `d` by `1 + t` through the alternating partial sums
/// `q_k = sum_{i <= k} (-1)^{k-i} d_i`; `None` unless the final sum vanishes.
pub fn alternating_quotient(d: &IntPoly) -> Option<IntPoly> {
    let mut sums = Vec::with_capacity(d.len());
    let mut running = BigInt::zero();
    for c in d.coeffs() {
        running = c - running;
        sums.push(running.clone());
    }
    match sums.pop() {
        None => Some(IntPoly::zero()),
        Some(last) if last.is_zero() => Some(IntPoly::from_coeffs(sums)),
        Some(_) => None,
    }
}

pub fn check_inequalities(mb: &IntPoly, p: &IntPoly) -> InequalityVerdict {
    let gap = mb - p;
    let q = match gap.div_one_plus_t() {
        Ok(q) => q,
        Err(e) => return InequalityVerdict::FailsNotDivisible { chi_gap: e.remainder },
    };
    debug_assert_eq!(alternating_quotient(&gap).as_ref(), Some(&q));
    match q.first_negative() {
        Some(degree) => InequalityVerdict::FailsNegativeCoefficient { degree, q },
        None => InequalityVerdict::Holds { q },
    }
}

/// `E^2_{*,j} = H_*(D N^- M_j, S N^- M_j)` for each critical submanifold, in
/// filtration order. `Untwisted` mode pretends every negative bundle is
/// orientable.
pub fn e2_page_with(d: &MorseBottData, mode: CoefficientMode) -> Result<Vec<HomologyProfile>> {
    d.criticals
        .iter()
        .map(|c| {
            let b = BundleDescriptor { character: mode.character(c), ..c.negative_bundle() };
            thom_pair_homology(&b)
        })
        .collect()
}

pub fn e2_page(d: &MorseBottData) -> Result<Vec<HomologyProfile>> {
    e2_page_with(d, CoefficientMode::Local)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E2Consistency {
    pub total_free_rank: usize,
    pub ambient_rank: usize,
    pub euler_sum: i64,
    pub ambient_euler: i64,
    pub rank_bound_ok: bool,
    pub euler_ok: bool,
}

/// The two consequences of convergence that do not need higher differentials:
/// the page dominates the abutment in rank and has the same Euler characteristic.
pub fn e2_consistency_with(d: &MorseBottData, mode: CoefficientMode) -> Result<E2Consistency> {
    let page = e2_page_with(d, mode)?;
    let ambient = d.ambient_homology()?;
    let total_free_rank = page.iter().map(HomologyProfile::total_free_rank).sum();
    let euler_sum = page.iter().map(HomologyProfile::euler_char).sum();
    let ambient_rank = ambient.total_free_rank();
    let ambient_euler = ambient.euler_char();
    Ok(E2Consistency {
        total_free_rank,
        ambient_rank,
        euler_sum,
        ambient_euler,
        rank_bound_ok: total_free_rank >= ambient_rank,
        euler_ok: euler_sum == ambient_euler,
    })
}

pub fn e2_consistency(d: &MorseBottData) -> Result<E2Consistency> {
    e2_consistency_with(d, CoefficientMode::Local)
}
