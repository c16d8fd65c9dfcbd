//! Racks equipped with a compatible unary map.
//!
//! A structure here is a pair `(X, f)` of a finite rack and a map
//! `f : X -> X` subject to three axioms:
//!
//! 1. `f²(x ▷ x) = x` and `f²(x) ▷ x = x` for all `x`;
//! 2. `f(x ▷ y) = f(x) ▷ y` for all `x, y`;
//! 3. `x ▷ f(y) = x ▷ y` for all `x, y`.
//!
//! Axiom 1 forces `f` to be surjective, hence a bijection on a finite set,
//! so compatible maps are always permutations.

use thiserror::Error;

use crate::perm::Perm;
use crate::rack::{enumerate_racks, FiniteRack, RackError};

/// Errors for maps supplied as raw image lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum MapError {
    /// The image list length does not match the rack order.
    #[error("map has {len} images, expected {n}")]
    WrongLength {
        /// Observed length.
        len: usize,
        /// Rack order.
        n: usize,
    },
    /// An image falls outside `0..n`.
    #[error("image {value} at position {pos} is outside 0..{n}")]
    OutOfRange {
        /// 0-based position.
        pos: usize,
        /// Offending image.
        value: usize,
        /// Rack order.
        n: usize,
    },
}

/// Which equation of the first axiom failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomOneSide {
    /// The equation `f²(x ▷ x) = x`.
    MapOfOp,
    /// The equation `f²(x) ▷ x = x`.
    OpOfMap,
}

/// Witness for a first-axiom failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomOneWitness {
    /// The failing equation.
    pub side: AxiomOneSide,
    /// The element `x` (0-based).
    pub x: usize,
    /// The value the left side produced instead of `x`.
    pub got: usize,
}

/// Witness for a two-variable axiom failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairWitness {
    /// First element (0-based).
    pub x: usize,
    /// Second element (0-based).
    pub y: usize,
    /// Left-hand value.
    pub lhs: usize,
    /// Right-hand value.
    pub rhs: usize,
}

/// Per-axiom outcome of checking a candidate map against a rack.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AxiomReport {
    /// First failure of axiom 1, if any.
    pub axiom_one: Option<AxiomOneWitness>,
    /// First failure of axiom 2 (`f(x ▷ y) = f(x) ▷ y`), if any.
    pub axiom_two: Option<PairWitness>,
    /// First failure of axiom 3 (`x ▷ f(y) = x ▷ y`), if any.
    pub axiom_three: Option<PairWitness>,
}

impl AxiomReport {
    /// True when all three axioms hold.
    pub fn is_ok(&self) -> bool {
        self.axiom_one.is_none() && self.axiom_two.is_none() && self.axiom_three.is_none()
    }
}

fn check_images(n: usize, f: &[usize]) -> Result<(), MapError> {
    if f.len() != n {
        return Err(MapError::WrongLength { len: f.len(), n });
    }
    for (pos, &value) in f.iter().enumerate() {
        if value >= n {
            return Err(MapError::OutOfRange { pos, value, n });
        }
    }
    Ok(())
}

/// Checks the three compatibility axioms for `f` given as 0-based images.
///
/// Structural problems with the image list are errors; axiom failures are
/// reported with witnesses. `f` does not need to be a bijection up front.
pub fn check_axioms(rack: &FiniteRack, f: &[usize]) -> Result<AxiomReport, MapError> {
    let n = rack.order();
    check_images(n, f)?;
    let ff = |x: usize| f[f[x]];
    let mut report = AxiomReport::default();
    for x in 0..n {
        let map_of_op = ff(rack.op(x, x));
        if map_of_op != x {
            report.axiom_one = Some(AxiomOneWitness {
                side: AxiomOneSide::MapOfOp,
                x,
                got: map_of_op,
            });
            break;
        }
        let op_of_map = rack.op(ff(x), x);
        if op_of_map != x {
            report.axiom_one = Some(AxiomOneWitness {
                side: AxiomOneSide::OpOfMap,
                x,
                got: op_of_map,
            });
            break;
        }
    }
    'two: for x in 0..n {
        for y in 0..n {
            let lhs = f[rack.op(x, y)];
            let rhs = rack.op(f[x], y);
            if lhs != rhs {
                report.axiom_two = Some(PairWitness { x, y, lhs, rhs });
                break 'two;
            }
        }
    }
    'three: for x in 0..n {
        for y in 0..n {
            let lhs = rack.op(x, f[y]);
            let rhs = rack.op(x, y);
            if lhs != rhs {
                report.axiom_three = Some(PairWitness { x, y, lhs, rhs });
                break 'three;
            }
        }
    }
    Ok(report)
}

/// Threshold up to which enumeration scans all `n^n` self-maps instead of
/// only bijections, exercising the fact that the axioms force bijectivity.
const FULL_SCAN_MAX: usize = 6;

/// Enumerates every compatible map for `rack`, sorted by image list.
pub fn enumerate_legendrian_maps(rack: &FiniteRack) -> Vec<Perm> {
    let n = rack.order();
    let mut out = Vec::new();
    if n <= FULL_SCAN_MAX {
        // Scan all self-maps via an odometer over image lists.
        let mut images = vec![0usize; n];
        loop {
            let report = check_axioms(rack, &images).expect("images are in range");
            if report.is_ok() {
                let perm = Perm::from_images(images.clone())
                    .expect("a map satisfying axiom 1 is surjective, hence bijective");
                out.push(perm);
            }
            let mut pos = n;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                images[pos] += 1;
                if images[pos] < n {
                    break;
                }
                images[pos] = 0;
            }
        }
    } else {
        for perm in Perm::all(n) {
            let report = check_axioms(rack, perm.images()).expect("images are in range");
            if report.is_ok() {
                out.push(perm);
            }
        }
        out
    }
}

/// Errors for assembling a rack-with-map structure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LegendrianError {
    /// The map's degree does not fit the rack.
    #[error(transparent)]
    Map(#[from] MapError),
    /// The map fails a compatibility axiom.
    #[error("map violates a compatibility axiom")]
    Axioms {
        /// The per-axiom witnesses.
        report: AxiomReport,
    },
}

/// A finite rack together with a compatible permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LegendrianRack {
    rack: FiniteRack,
    f: Perm,
}

impl LegendrianRack {
    /// Validates the axioms and assembles the pair.
    pub fn new(rack: FiniteRack, f: Perm) -> Result<Self, LegendrianError> {
        let report = check_axioms(&rack, f.images())?;
        if !report.is_ok() {
            return Err(LegendrianError::Axioms { report });
        }
        Ok(LegendrianRack { rack, f })
    }

    /// The underlying rack.
    pub fn rack(&self) -> &FiniteRack {
        &self.rack
    }

    /// The compatible permutation.
    pub fn map(&self) -> &Perm {
        &self.f
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.rack.order()
    }

    /// Applies `f^k` for a signed exponent `k` (0-based element).
    pub fn map_pow(&self, k: i64, x: usize) -> usize {
        let mut v = x;
        if k >= 0 {
            for _ in 0..k {
                v = self.f.apply(v);
            }
        } else {
            let inv = self.f.inverse();
            for _ in 0..(-k) {
                v = inv.apply(v);
            }
        }
        v
    }
}

/// Checks whether `psi` (0-based images) is a structure homomorphism:
/// `psi(x ▷ y) = psi(x) ▷ psi(y)` and `psi ∘ f = f ∘ psi`.
pub fn is_legendrian_homomorphism(
    src: &LegendrianRack,
    dst: &LegendrianRack,
    psi: &[usize],
) -> Result<bool, MapError> {
    let n = src.order();
    check_images(n, psi)?;
    if let Some(&value) = psi.iter().find(|&&v| v >= dst.order()) {
        let pos = psi.iter().position(|&v| v == value).expect("just found");
        return Err(MapError::OutOfRange {
            pos,
            value,
            n: dst.order(),
        });
    }
    for x in 0..n {
        for y in 0..n {
            if psi[src.rack().op(x, y)] != dst.rack().op(psi[x], psi[y]) {
                return Ok(false);
            }
        }
    }
    for x in 0..n {
        if psi[src.map().apply(x)] != dst.map().apply(psi[x]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The least bijective structure homomorphism from `a` to `b`, if any.
pub fn legendrian_isomorphic(a: &LegendrianRack, b: &LegendrianRack) -> Option<Perm> {
    if a.order() != b.order() {
        return None;
    }
    Perm::all(a.order()).into_iter().find(|psi| {
        is_legendrian_homomorphism(a, b, psi.images()).expect("degrees match")
    })
}

/// One rack of the census with its compatible maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    /// The rack, in canonical form.
    pub rack: FiniteRack,
    /// Whether the rack is a quandle.
    pub quandle: bool,
    /// All compatible maps, sorted by image list.
    pub maps: Vec<Perm>,
}

/// Enumerates all racks of order `n` up to isomorphism and their compatible
/// maps.
pub fn census(n: usize) -> Result<Vec<CensusEntry>, RackError> {
    Ok(enumerate_racks(n)?
        .into_iter()
        .map(|rack| {
            let maps = enumerate_legendrian_maps(&rack);
            let quandle = rack.is_quandle();
            CensusEntry { rack, quandle, maps }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn maps_as_strings(rack: &FiniteRack) -> Vec<String> {
        enumerate_legendrian_maps(rack)
            .iter()
            .map(Perm::to_string)
            .collect()
    }

    #[test]
    fn trivial_quandle_order_3_maps() {
        let rack = FiniteRack::trivial(3).unwrap();
        let mut maps = maps_as_strings(&rack);
        maps.sort();
        assert_eq!(maps, ["()", "(12)", "(13)", "(23)"]);
    }

    #[test]
    fn dihedral_3_admits_only_identity() {
        let rack = FiniteRack::dihedral(3).unwrap();
        assert_eq!(maps_as_strings(&rack), ["()"]);
    }

    #[test]
    fn constant_action_12_34_maps() {
        let sigma = Perm::parse_cycles("(12)(34)", 4).unwrap();
        let rack = FiniteRack::constant_action_rack(&sigma).unwrap();
        let mut maps = maps_as_strings(&rack);
        maps.sort();
        assert_eq!(maps, ["(1324)", "(1423)"]);
    }

    #[test]
    fn constant_action_12_has_no_maps() {
        let sigma = Perm::parse_cycles("(12)", 3).unwrap();
        let rack = FiniteRack::constant_action_rack(&sigma).unwrap();
        assert!(enumerate_legendrian_maps(&rack).is_empty());
    }

    #[test]
    fn trivial_quandle_order_4_has_ten_maps() {
        let rack = FiniteRack::trivial(4).unwrap();
        // Involutions of a 4-element set: identity, six transpositions,
        // three double transpositions.
        assert_eq!(enumerate_legendrian_maps(&rack).len(), 10);
    }

    #[test]
    fn shifted_rack_with_shift_map_fails_axiom_one_only() {
        let shift = Perm::parse_cycles("(1234)", 4).unwrap();
        let rack = FiniteRack::constant_action_rack(&shift).unwrap();
        let report = check_axioms(&rack, shift.images()).unwrap();
        let witness = report.axiom_one.expect("axiom 1 must fail");
        assert_eq!(witness.side, AxiomOneSide::MapOfOp);
        assert_eq!(witness.x, 0);
        assert_eq!(witness.got, 3);
        assert!(report.axiom_two.is_none());
        assert!(report.axiom_three.is_none());
    }

    #[test]
    fn structural_map_errors() {
        let rack = FiniteRack::trivial(3).unwrap();
        assert_eq!(
            check_axioms(&rack, &[0, 1]),
            Err(MapError::WrongLength { len: 2, n: 3 })
        );
        assert_eq!(
            check_axioms(&rack, &[0, 1, 3]),
            Err(MapError::OutOfRange {
                pos: 2,
                value: 3,
                n: 3
            })
        );
    }

    #[test]
    fn order_3_census_map_counts() {
        let entries = census(3).unwrap();
        assert_eq!(entries.len(), 6);
        let mut sizes: Vec<usize> = entries.iter().map(|e| e.maps.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, [0, 0, 1, 1, 2, 4]);
    }

    #[test]
    fn compatible_maps_are_automorphisms() {
        for entry in census(3).unwrap() {
            for f in &entry.maps {
                for x in 0..3 {
                    for y in 0..3 {
                        assert_eq!(
                            f.apply(entry.rack.op(x, y)),
                            entry.rack.op(f.apply(x), f.apply(y))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn quandle_maps_are_involutions() {
        for entry in census(3).unwrap() {
            if entry.quandle {
                for f in &entry.maps {
                    assert!(f.is_involution());
                }
            }
        }
    }

    #[test]
    fn structure_assembly_and_isomorphism() {
        let rack = FiniteRack::trivial(3).unwrap();
        let f12 = Perm::parse_cycles("(12)", 3).unwrap();
        let f13 = Perm::parse_cycles("(13)", 3).unwrap();
        let a = LegendrianRack::new(rack.clone(), f12.clone()).unwrap();
        let b = LegendrianRack::new(rack.clone(), f13).unwrap();
        let psi = legendrian_isomorphic(&a, &b).expect("conjugate maps give isomorphic pairs");
        assert!(is_legendrian_homomorphism(&a, &b, psi.images()).unwrap());

        let id = LegendrianRack::new(rack.clone(), Perm::identity(3)).unwrap();
        assert!(legendrian_isomorphic(&a, &id).is_none());

        let dihedral = FiniteRack::dihedral(3).unwrap();
        assert!(matches!(
            LegendrianRack::new(dihedral, f12),
            Err(LegendrianError::Axioms { .. })
        ));
    }

    #[test]
    fn map_pow_applies_signed_exponents() {
        let rack = FiniteRack::trivial(4).unwrap();
        let f = Perm::parse_cycles("(1234)", 4).unwrap();
        // (1234) on the trivial quandle is not compatible (axiom 1 fails),
        // so build the pair on a rack that accepts it: the constant action
        // rack of (12)(34) accepts (1324).
        assert!(check_axioms(&rack, f.images()).unwrap().axiom_one.is_some());
        let sigma = Perm::parse_cycles("(12)(34)", 4).unwrap();
        let rack = FiniteRack::constant_action_rack(&sigma).unwrap();
        let f = Perm::parse_cycles("(1324)", 4).unwrap();
        let lr = LegendrianRack::new(rack, f).unwrap();
        assert_eq!(lr.map_pow(0, 2), 2);
        assert_eq!(lr.map_pow(1, 0), lr.map().apply(0));
        assert_eq!(lr.map_pow(-1, lr.map().apply(0)), 0);
        assert_eq!(lr.map_pow(2, 0), sigma.apply(0));
        assert_eq!(lr.map_pow(4, 0), 0);
    }
}
