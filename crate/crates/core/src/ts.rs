//! Two-parameter affine racks on `Z_n` and their compatible affine maps.
//!
//! For parameters `(t, s)` with `t` a unit and `s² ≡ (1-t)·s (mod n)`, the
//! operation `x ▷ y = t·x + s·y` is a rack on `Z_n`; it is a quandle exactly
//! when `s ≡ 1-t`. Affine candidates `f(x) = a·x + b` are compatible with
//! the rack exactly when five congruences hold:
//!
//! 1. `a²·(t+s) ≡ 1`
//! 2. `(a+1)·b ≡ 0`
//! 3. `(1-a)·s ≡ 0`
//! 4. `(1-t)·b ≡ 0`
//! 5. `s·b ≡ 0`
//!
//! [`cross_validate_affine`] confirms that congruence solving and direct
//! axiom checking select the same maps.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::legendrian::check_axioms;
use crate::rack::FiniteRack;

/// Errors for `(t, s)` parameter validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TsError {
    /// The modulus must be at least 1.
    #[error("modulus must be at least 1")]
    ZeroOrder,
    /// `t` must be a unit modulo `n`.
    #[error("t={t} is not a unit modulo {n}")]
    NotUnit {
        /// The multiplier.
        t: usize,
        /// The modulus.
        n: usize,
    },
    /// `s` must satisfy `s² ≡ (1-t)·s (mod n)`.
    #[error("s={s} violates s^2 = (1-t)s modulo {n}: {lhs} != {rhs}")]
    RingRelation {
        /// The modulus.
        n: usize,
        /// The multiplier.
        t: usize,
        /// The offending shift.
        s: usize,
        /// `s² mod n`.
        lhs: usize,
        /// `(1-t)·s mod n`.
        rhs: usize,
    },
}

/// Validated parameters `(n, t, s)` for an affine rack on `Z_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TsRackSpec {
    n: usize,
    t: usize,
    s: usize,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl TsRackSpec {
    /// Validates the parameters; `t` and `s` are reduced modulo `n`.
    pub fn new(n: usize, t: usize, s: usize) -> Result<Self, TsError> {
        if n == 0 {
            return Err(TsError::ZeroOrder);
        }
        let t = t % n;
        let s = s % n;
        if gcd(t, n) != 1 {
            return Err(TsError::NotUnit { t, n });
        }
        let lhs = (s * s) % n;
        let rhs = ((1 + n - t) % n) * s % n;
        if lhs != rhs {
            return Err(TsError::RingRelation { n, t, s, lhs, rhs });
        }
        Ok(TsRackSpec { n, t, s })
    }

    /// The modulus.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The multiplier of the acting element's coefficient.
    pub fn t(&self) -> usize {
        self.t
    }

    /// The shift coefficient.
    pub fn s(&self) -> usize {
        self.s
    }

    /// True exactly when the rack is a quandle (`s ≡ 1-t`).
    pub fn is_quandle(&self) -> bool {
        self.s == (1 + self.n - self.t) % self.n
    }
}

impl fmt::Display for TsRackSpec {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "Z_{} with t={}, s={}", self.n, self.t, self.s)?;
        if self.s != 0 && self.n - self.s <= 2 {
            write!(out, " (s = -{} mod {})", self.n - self.s, self.n)?;
        }
        Ok(())
    }
}

/// Builds the operation table `x ▷ y = t·x + s·y (mod n)`.
pub fn build_ts_rack(spec: &TsRackSpec) -> FiniteRack {
    let TsRackSpec { n, t, s } = *spec;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            table.push((t * x + s * y) % n);
        }
    }
    FiniteRack::from_flat(n, table).expect("validated (t, s) parameters define a rack")
}

/// An affine self-map `x ↦ a·x + b` of `Z_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct AffineMap {
    /// Multiplier (residue).
    pub a: usize,
    /// Shift (residue).
    pub b: usize,
}

impl AffineMap {
    /// The 0-based image list of the map on `Z_n`.
    pub fn images(&self, n: usize) -> Vec<usize> {
        (0..n).map(|x| (self.a * x + self.b) % n).collect()
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (1, 0) => write!(out, "x"),
            (1, b) => write!(out, "x+{b}"),
            (a, 0) => write!(out, "{a}x"),
            (a, b) => write!(out, "{a}x+{b}"),
        }
    }
}

/// How many candidate pairs each congruence rejected during a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AffineSearchStats {
    /// Total candidate pairs examined (`n²`).
    pub candidates: usize,
    /// Rejections per congruence, in the order documented on this module.
    /// A pair failing several congruences is counted under each.
    pub rejected: [usize; 5],
}

/// Solves the five congruences, returning solutions sorted by `(a, b)`.
pub fn affine_legendrian_search(spec: &TsRackSpec) -> Vec<AffineMap> {
    affine_legendrian_search_with_stats(spec).0
}

/// As [`affine_legendrian_search`], also reporting per-congruence rejection
/// counts.
pub fn affine_legendrian_search_with_stats(spec: &TsRackSpec) -> (Vec<AffineMap>, AffineSearchStats) {
    let TsRackSpec { n, t, s } = *spec;
    let mut stats = AffineSearchStats {
        candidates: n * n,
        ..AffineSearchStats::default()
    };
    let mut solutions = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let checks = [
                (a * a % n) * ((t + s) % n) % n == 1 % n,
                (a + 1) * b % n == 0,
                ((1 + n - a) % n) * s % n == 0,
                ((1 + n - t) % n) * b % n == 0,
                s * b % n == 0,
            ];
            let mut ok = true;
            for (i, passed) in checks.iter().enumerate() {
                if !passed {
                    stats.rejected[i] += 1;
                    ok = false;
                }
            }
            if ok {
                solutions.push(AffineMap { a, b });
            }
        }
    }
    (solutions, stats)
}

/// Confirms that congruence solving and direct axiom checking agree on
/// which affine maps are compatible with the rack of `spec`.
pub fn cross_validate_affine(spec: &TsRackSpec) -> bool {
    let rack = build_ts_rack(spec);
    let n = spec.n();
    let by_congruences: BTreeSet<AffineMap> =
        affine_legendrian_search(spec).into_iter().collect();
    let mut by_axioms = BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            let map = AffineMap { a, b };
            let report = check_axioms(&rack, &map.images(n)).expect("images are in range");
            if report.is_ok() {
                by_axioms.insert(map);
            }
        }
    }
    by_congruences == by_axioms
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(spec: &TsRackSpec) -> Vec<(usize, usize)> {
        affine_legendrian_search(spec)
            .iter()
            .map(|m| (m.a, m.b))
            .collect()
    }

    #[test]
    fn parameter_validation() {
        assert!(TsRackSpec::new(8, 3, 6).is_ok());
        assert!(TsRackSpec::new(0, 1, 0).is_err());
        assert_eq!(
            TsRackSpec::new(8, 2, 6),
            Err(TsError::NotUnit { t: 2, n: 8 })
        );
        assert!(matches!(
            TsRackSpec::new(8, 3, 1),
            Err(TsError::RingRelation { .. })
        ));
        // Parameters reduce modulo n.
        assert_eq!(TsRackSpec::new(8, 11, 14).unwrap(), TsRackSpec::new(8, 3, 6).unwrap());
    }

    #[test]
    fn quandle_detection_matches_table() {
        let quandle = TsRackSpec::new(8, 3, 6).unwrap();
        assert!(quandle.is_quandle());
        assert!(build_ts_rack(&quandle).is_quandle());
        let rack_only = TsRackSpec::new(8, 3, 2).unwrap();
        assert!(!rack_only.is_quandle());
        assert!(!build_ts_rack(&rack_only).is_quandle());
    }

    #[test]
    fn table_matches_formula() {
        let spec = TsRackSpec::new(5, 2, 4).unwrap();
        let rack = build_ts_rack(&spec);
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(rack.op(x, y), (2 * x + 4 * y) % 5);
            }
        }
    }

    #[test]
    fn z8_solutions() {
        let spec = TsRackSpec::new(8, 3, 6).unwrap();
        assert_eq!(pairs(&spec), [(1, 0), (1, 4), (5, 0), (5, 4)]);
    }

    #[test]
    fn z10_solutions() {
        // b=0 satisfies every congruence that constrains b, so the shift-free
        // map rides along with the half-shift one.
        let spec = TsRackSpec::new(10, 3, 8).unwrap();
        assert_eq!(pairs(&spec), [(1, 0), (1, 5)]);
    }

    #[test]
    fn z4_solutions() {
        let spec = TsRackSpec::new(4, 3, 2).unwrap();
        assert_eq!(pairs(&spec), [(1, 0), (1, 2), (3, 0), (3, 2)]);
    }

    #[test]
    fn z49_solutions() {
        let spec = TsRackSpec::new(49, 2, 0).unwrap();
        assert_eq!(pairs(&spec), [(5, 0), (44, 0)]);
    }

    #[test]
    fn stats_account_for_all_candidates() {
        let spec = TsRackSpec::new(8, 3, 6).unwrap();
        let (solutions, stats) = affine_legendrian_search_with_stats(&spec);
        assert_eq!(stats.candidates, 64);
        assert_eq!(solutions.len(), 4);
        assert!(stats.rejected.iter().sum::<usize>() >= stats.candidates - solutions.len());
    }

    #[test]
    fn cross_validation_small_moduli() {
        for n in 1..=6 {
            for t in 0..n.max(1) {
                for s in 0..n.max(1) {
                    if let Ok(spec) = TsRackSpec::new(n, t, s) {
                        assert!(
                            cross_validate_affine(&spec),
                            "congruences disagree with axioms for {spec}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(AffineMap { a: 1, b: 0 }.to_string(), "x");
        assert_eq!(AffineMap { a: 1, b: 4 }.to_string(), "x+4");
        assert_eq!(AffineMap { a: 5, b: 0 }.to_string(), "5x");
        assert_eq!(AffineMap { a: 5, b: 4 }.to_string(), "5x+4");
        let spec = TsRackSpec::new(8, 3, 6).unwrap();
        assert_eq!(spec.to_string(), "Z_8 with t=3, s=6 (s = -2 mod 8)");
    }
}
