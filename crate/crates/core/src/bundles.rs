//! Vector bundles over catalog spaces and the homology of the pair
//! (disc bundle, sphere bundle).
//!
//! `H_i(DE, SE; Z)` is computed as `H_{i - rank}(base; Z_w)` where `w` is the
//! orientation character of `E`. For `w` trivial this is the ordinary Thom
//! isomorphism. For non-orientable bundles of rank at least 2 the same
//! formula is used on the strength of the local-coefficient Thom
//! isomorphism; no independent model is checked for that case.

use crate::error::{Error, Result};
use crate::homology::{HomologyProfile, OrientationCharacter, SpaceDescriptor};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BundleDescriptor {
    pub base: SpaceDescriptor,
    pub rank: usize,
    pub character: OrientationCharacter,
}

impl BundleDescriptor {
    pub fn new(base: SpaceDescriptor, rank: usize, character: OrientationCharacter) -> Result<Self> {
        let b = Self { base, rank, character };
        b.validate()?;
        Ok(b)
    }

    pub fn validate(&self) -> Result<()> {
        self.base.validate()?;
        if self.rank == 0 && !self.character.is_trivial() {
            return Err(Error::InvalidBundle("a rank 0 bundle is orientable".into()));
        }
        self.base.check_admits(self.character)
    }

    pub fn is_orientable(&self) -> bool {
        self.character.is_trivial()
    }
}

pub fn thom_pair_homology(b: &BundleDescriptor) -> Result<HomologyProfile> {
    b.validate()?;
    Ok(b.base.homology(b.character)?.shift(b.rank))
}

/// Both sides of the (untwisted) Thom isomorphism for one bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThomReport {
    pub pair: HomologyProfile,
    pub shifted_base: HomologyProfile,
}

impl ThomReport {
    pub fn holds(&self) -> bool {
        self.pair == self.shifted_base
    }
}

/// Compares `H_*(DE, SE)` with the untwisted base homology shifted by the rank.
pub fn thom_iso_check(b: &BundleDescriptor) -> Result<ThomReport> {
    let pair = thom_pair_homology(b)?;
    let shifted_base = b.base.homology(OrientationCharacter::Trivial)?.shift(b.rank);
    Ok(ThomReport { pair, shifted_base })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{ChainComplex, Group};
    use crate::matrix::IntegerMatrix;
    use OrientationCharacter::*;

    fn bundle(base: SpaceDescriptor, rank: usize, w: OrientationCharacter) -> BundleDescriptor {
        BundleDescriptor::new(base, rank, w).unwrap()
    }

    /// Reduced homology of `RP^n` from its explicit one-cell-per-degree model:
    /// the same groups with `H_0` replaced by zero.
    fn reduced_rp(n: usize) -> HomologyProfile {
        let boundaries = (1..=n)
            .map(|k| IntegerMatrix::from_rows(1, [[if k % 2 == 0 { 2 } else { 0 }]]).unwrap())
            .collect();
        let c = ChainComplex::new(vec![1; n + 1], boundaries).unwrap();
        let h = SpaceDescriptor::Explicit(c).homology(Trivial).unwrap();
        let mut groups = h.degrees().to_vec();
        groups[0].free_rank -= 1;
        HomologyProfile::new(groups)
    }

    #[test]
    fn moebius_pair_is_reduced_rp2() {
        let h = thom_pair_homology(&bundle(SpaceDescriptor::Sphere(1), 1, CanonicalNontrivial)).unwrap();
        assert_eq!(h, HomologyProfile::new(vec![Group::default(), Group::cyclic(2)]));
        assert_eq!(h, reduced_rp(2));
    }

    #[test]
    fn canonical_line_over_rp3_is_reduced_rp4() {
        let h = thom_pair_homology(&bundle(SpaceDescriptor::RealProjective(3), 1, CanonicalNontrivial))
            .unwrap();
        assert_eq!(h.group(1), Group::cyclic(2));
        assert_eq!(h.group(3), Group::cyclic(2));
        assert!([0, 2, 4, 5].iter().all(|&k| h.group(k).is_trivial()));
        assert_eq!(h, reduced_rp(4));
    }

    #[test]
    fn canonical_line_over_rp_n_matches_thom_space() {
        for n in 1..=7 {
            let h = thom_pair_homology(&bundle(SpaceDescriptor::RealProjective(n), 1, CanonicalNontrivial))
                .unwrap();
            assert_eq!(h, reduced_rp(n as usize + 1), "RP^{n}");
        }
    }

    #[test]
    fn point_rank_five() {
        let h = thom_pair_homology(&bundle(SpaceDescriptor::Point, 5, Trivial)).unwrap();
        assert_eq!(h.group(5), Group::free(1));
        assert_eq!(h.total_free_rank(), 1);
        assert!((0..5).all(|k| h.group(k).is_trivial()));
    }

    #[test]
    fn thom_iso_examples() {
        assert!(thom_iso_check(&bundle(SpaceDescriptor::Sphere(1), 1, Trivial)).unwrap().holds());
        let r = thom_iso_check(&bundle(SpaceDescriptor::Sphere(1), 1, CanonicalNontrivial)).unwrap();
        assert!(!r.holds());
        assert_eq!(r.pair.group(1), Group::cyclic(2));
        assert_eq!(r.shifted_base.group(1), Group::free(1));
        assert_eq!(r.shifted_base.group(2), Group::free(1));
        assert!(!thom_iso_check(&bundle(SpaceDescriptor::RealProjective(3), 1, CanonicalNontrivial))
            .unwrap()
            .holds());
    }

    #[test]
    fn invariants_over_catalog() {
        let bases = [
            SpaceDescriptor::Point,
            SpaceDescriptor::Sphere(1),
            SpaceDescriptor::Sphere(3),
            SpaceDescriptor::RealProjective(2),
            SpaceDescriptor::RealProjective(5),
            SpaceDescriptor::Torus2,
        ];
        for base in bases {
            let plain = base.homology(Trivial).unwrap();
            assert_eq!(thom_pair_homology(&bundle(base.clone(), 0, Trivial)).unwrap(), plain);
            for rank in 0..4usize {
                for w in [Trivial, CanonicalNontrivial] {
                    if !base.admits(w) || (rank == 0 && w != Trivial) {
                        continue;
                    }
                    let h = thom_pair_homology(&bundle(base.clone(), rank, w)).unwrap();
                    let sign = if rank % 2 == 0 { 1 } else { -1 };
                    assert_eq!(h.poincare_poly().eval(-1), (sign * plain.euler_char()).into());
                    if w == Trivial {
                        assert_eq!(h, plain.shift(rank));
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_invalid_bundles() {
        assert!(matches!(
            BundleDescriptor::new(SpaceDescriptor::Sphere(1), 0, CanonicalNontrivial),
            Err(Error::InvalidBundle(_))
        ));
        assert!(matches!(
            BundleDescriptor::new(SpaceDescriptor::Sphere(2), 1, CanonicalNontrivial),
            Err(Error::InadmissibleCharacter { .. })
        ));
    }
}
