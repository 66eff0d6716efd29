//! The Σ subshift: bi-infinite 0/1 sequences with at most one maximal run of
//! 1s, represented symbolically so the bi-infinite behavior is exact.
//!
//! The map `tau` turns the 0 immediately left of a run of 1s into a 1:
//! `tau(x)(n) = 1` if `(x(n), x(n+1)) = (0, 1)`, else `x(n)`. It commutes
//! with the shift and is injective, but a sequence with exactly one 1 has no
//! preimage, so `tau` is not surjective.

use serde::Serialize;

use crate::error::{Error, Result};

/// Symbolic element of Σ. The five variants cover the subshift exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SigmaConfig {
    /// All positions 0.
    AllZero,
    /// All positions 1.
    AllOne,
    /// 1 exactly on positions `a..=b`.
    Block { a: i64, b: i64 },
    /// 1 exactly on positions `<= b`.
    LeftRay { b: i64 },
    /// 1 exactly on positions `>= a`.
    RightRay { a: i64 },
}

impl SigmaConfig {
    pub fn block(a: i64, b: i64) -> Result<Self> {
        if a > b {
            return Err(Error::InvalidInput(format!(
                "block requires a <= b, got a = {a}, b = {b}"
            )));
        }
        Ok(SigmaConfig::Block { a, b })
    }

    /// The symbol at position `n` of the represented sequence.
    pub fn value_at(&self, n: i64) -> u8 {
        match *self {
            SigmaConfig::AllZero => 0,
            SigmaConfig::AllOne => 1,
            SigmaConfig::Block { a, b } => u8::from(a <= n && n <= b),
            SigmaConfig::LeftRay { b } => u8::from(n <= b),
            SigmaConfig::RightRay { a } => u8::from(n >= a),
        }
    }

    /// The image under `tau`: the run of 1s grows one step to the left.
    pub fn tau(&self) -> SigmaConfig {
        match *self {
            SigmaConfig::AllZero => SigmaConfig::AllZero,
            SigmaConfig::AllOne => SigmaConfig::AllOne,
            SigmaConfig::Block { a, b } => SigmaConfig::Block { a: a - 1, b },
            SigmaConfig::LeftRay { b } => SigmaConfig::LeftRay { b },
            SigmaConfig::RightRay { a } => SigmaConfig::RightRay { a: a - 1 },
        }
    }

    /// Translate by `k`: position `n` of the image reads position `n - k`.
    pub fn shift(&self, k: i64) -> SigmaConfig {
        match *self {
            SigmaConfig::AllZero => SigmaConfig::AllZero,
            SigmaConfig::AllOne => SigmaConfig::AllOne,
            SigmaConfig::Block { a, b } => SigmaConfig::Block { a: a + k, b: b + k },
            SigmaConfig::LeftRay { b } => SigmaConfig::LeftRay { b: b + k },
            SigmaConfig::RightRay { a } => SigmaConfig::RightRay { a: a + k },
        }
    }

    /// The unique `tau`-preimage, when one exists. A single 1 (a length-one
    /// block) is not in the image of `tau`.
    pub fn tau_preimage(&self) -> Option<SigmaConfig> {
        match *self {
            SigmaConfig::AllZero => Some(SigmaConfig::AllZero),
            SigmaConfig::AllOne => Some(SigmaConfig::AllOne),
            SigmaConfig::Block { a, b } => {
                if a < b {
                    Some(SigmaConfig::Block { a: a + 1, b })
                } else {
                    None
                }
            }
            SigmaConfig::LeftRay { b } => Some(SigmaConfig::LeftRay { b }),
            SigmaConfig::RightRay { a } => Some(SigmaConfig::RightRay { a: a + 1 }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every symbolic family member with parameters in [-bound, bound].
    pub(crate) fn family(bound: i64) -> Vec<SigmaConfig> {
        let mut out = vec![SigmaConfig::AllZero, SigmaConfig::AllOne];
        for a in -bound..=bound {
            for b in a..=bound {
                out.push(SigmaConfig::Block { a, b });
            }
            out.push(SigmaConfig::LeftRay { b: a });
            out.push(SigmaConfig::RightRay { a });
        }
        out
    }

    #[test]
    fn tau_grows_block_left() {
        assert_eq!(
            SigmaConfig::Block { a: 0, b: 0 }.tau(),
            SigmaConfig::Block { a: -1, b: 0 }
        );
    }

    #[test]
    fn tau_fixes_all_zero() {
        assert_eq!(SigmaConfig::AllZero.tau(), SigmaConfig::AllZero);
    }

    #[test]
    fn tau_moves_right_ray() {
        assert_eq!(
            SigmaConfig::RightRay { a: 5 }.tau(),
            SigmaConfig::RightRay { a: 4 }
        );
    }

    #[test]
    fn tau_matches_pointwise_rule() {
        // oracle: tau(x)(n) = 1 if (x(n), x(n+1)) = (0, 1), else x(n)
        for c in family(8) {
            let image = c.tau();
            for n in -20..=20 {
                let expected = if (c.value_at(n), c.value_at(n + 1)) == (0, 1) {
                    1
                } else {
                    c.value_at(n)
                };
                assert_eq!(image.value_at(n), expected, "config {c:?} at {n}");
            }
        }
    }

    #[test]
    fn shift_examples() {
        assert_eq!(
            SigmaConfig::Block { a: 0, b: 2 }.shift(3),
            SigmaConfig::Block { a: 3, b: 5 }
        );
        assert_eq!(SigmaConfig::AllOne.shift(-7), SigmaConfig::AllOne);
        assert_eq!(
            SigmaConfig::LeftRay { b: 0 }.shift(1),
            SigmaConfig::LeftRay { b: 1 }
        );
    }

    #[test]
    fn shift_matches_pointwise_rule() {
        for c in family(6) {
            for k in -5..=5 {
                let shifted = c.shift(k);
                for n in -15..=15 {
                    assert_eq!(shifted.value_at(n), c.value_at(n - k), "{c:?} k={k} n={n}");
                }
            }
        }
    }

    #[test]
    fn preimage_examples() {
        assert_eq!(
            SigmaConfig::Block { a: -1, b: 0 }.tau_preimage(),
            Some(SigmaConfig::Block { a: 0, b: 0 })
        );
        assert_eq!(SigmaConfig::Block { a: 3, b: 3 }.tau_preimage(), None);
        assert_eq!(
            SigmaConfig::AllZero.tau_preimage(),
            Some(SigmaConfig::AllZero)
        );
    }

    #[test]
    fn tau_equivariance() {
        for c in family(50) {
            for k in -10..=10 {
                assert_eq!(c.shift(k).tau(), c.tau().shift(k), "{c:?} k={k}");
            }
        }
    }

    #[test]
    fn tau_is_injective_on_family() {
        use std::collections::BTreeSet;
        let fam = family(50);
        let images: BTreeSet<SigmaConfig> = fam.iter().map(|c| c.tau()).collect();
        assert_eq!(images.len(), fam.len());
    }

    #[test]
    fn single_one_has_no_preimage() {
        for a in -50..=50 {
            assert_eq!(SigmaConfig::Block { a, b: a }.tau_preimage(), None);
        }
    }

    #[test]
    fn preimage_is_two_sided_inverse() {
        for c in family(30) {
            // forward then back
            if let Some(pre) = c.tau().tau_preimage() {
                assert_eq!(pre, c, "preimage(tau({c:?}))");
            } else {
                panic!("tau image of {c:?} must have a preimage");
            }
            // back then forward
            if let Some(pre) = c.tau_preimage() {
                assert_eq!(pre.tau(), c, "tau(preimage({c:?}))");
            }
        }
    }
}
