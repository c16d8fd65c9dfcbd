//! Finite racks and quandles as operation tables.
//!
//! A rack is a set with a binary operation `▷` whose right translations
//! `x ↦ x ▷ c` are bijections and which is right self-distributive,
//! `(x ▷ y) ▷ z = (x ▷ z) ▷ (y ▷ z)`. The inverse operation `▷̄` inverts
//! each right translation, so `(x ▷ y) ▷̄ y = x = (x ▷̄ y) ▷ y`. A quandle
//! is a rack with `x ▷ x = x`.
//!
//! Elements are `0..n` in this API; the textual and JSON table formats are
//! 1-based, with row `j`, column `k` holding `j ▷ k`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::group::CayleyTable;
use crate::perm::Perm;

/// Default cap for exhaustive enumeration; override with the
/// `LEGRACK_MAX_ORDER` environment variable.
pub const DEFAULT_MAX_ORDER: usize = 6;

/// The enumeration order cap currently in effect.
pub fn max_enumeration_order() -> usize {
    std::env::var("LEGRACK_MAX_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_ORDER)
}

/// Witness that a column fails to be a bijection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColumnWitness {
    /// The column `c` (0-based).
    pub col: usize,
    /// Two distinct rows with `first ▷ c == second ▷ c`.
    pub first: usize,
    /// Second row of the collision.
    pub second: usize,
    /// The repeated value.
    pub value: usize,
}

/// Witness that self-distributivity fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleWitness {
    /// The triple `(x, y, z)` (0-based).
    pub x: usize,
    /// Second element.
    pub y: usize,
    /// Third element.
    pub z: usize,
    /// Value of `(x ▷ y) ▷ z`.
    pub lhs: usize,
    /// Value of `(x ▷ z) ▷ (y ▷ z)`.
    pub rhs: usize,
}

/// Axiom-level validation outcome for a candidate operation table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RackReport {
    /// First column that is not a bijection, if any.
    pub column_violation: Option<ColumnWitness>,
    /// First self-distributivity failure, if any.
    pub distributivity_violation: Option<TripleWitness>,
}

impl RackReport {
    /// True when both rack axioms hold.
    pub fn is_ok(&self) -> bool {
        self.column_violation.is_none() && self.distributivity_violation.is_none()
    }
}

/// Errors for rack construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RackError {
    /// Racks must have at least one element.
    #[error("rack order must be at least 1")]
    ZeroOrder,
    /// A row has the wrong length.
    #[error("row {row} has length {len}, expected {n}")]
    RowLength {
        /// 0-based row index.
        row: usize,
        /// Observed length.
        len: usize,
        /// Expected length.
        n: usize,
    },
    /// An entry is outside `1..=n` (1-based table text).
    #[error("entry at row {row}, column {col} is {value}, outside 1..={n}")]
    EntryRange {
        /// 0-based row index.
        row: usize,
        /// 0-based column index.
        col: usize,
        /// Offending 1-based value.
        value: usize,
        /// Table order.
        n: usize,
    },
    /// The table is structurally fine but violates a rack axiom.
    #[error("table violates a rack axiom")]
    Axioms {
        /// The per-axiom witnesses.
        report: RackReport,
    },
    /// The multiplier of an affine constructor is not a unit.
    #[error("{t} is not a unit modulo {n}")]
    NotUnit {
        /// The multiplier.
        t: usize,
        /// The modulus.
        n: usize,
    },
    /// The supplied permutation is not a group automorphism.
    #[error("the supplied permutation is not an automorphism of the group")]
    NotAutomorphism,
    /// Requested enumeration order exceeds the configured cap.
    #[error("order {n} exceeds the enumeration cap {bound} (set LEGRACK_MAX_ORDER to raise it)")]
    BoundExceeded {
        /// Requested order.
        n: usize,
        /// Cap in effect.
        bound: usize,
    },
}

/// A finite rack: an `n x n` operation table with its derived inverse table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteRack {
    n: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
}

/// Checks both rack axioms on a flat 0-based table.
fn axiom_report(n: usize, table: &[usize]) -> RackReport {
    let op = |x: usize, y: usize| table[x * n + y];
    let mut report = RackReport::default();
    'cols: for c in 0..n {
        let mut seen_by = vec![None; n];
        for x in 0..n {
            let v = op(x, c);
            if let Some(prev) = seen_by[v] {
                report.column_violation = Some(ColumnWitness {
                    col: c,
                    first: prev,
                    second: x,
                    value: v,
                });
                break 'cols;
            }
            seen_by[v] = Some(x);
        }
    }
    'triples: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = op(op(x, y), z);
                let rhs = op(op(x, z), op(y, z));
                if lhs != rhs {
                    report.distributivity_violation = Some(TripleWitness { x, y, z, lhs, rhs });
                    break 'triples;
                }
            }
        }
    }
    report
}

/// Validates a 1-based operation table.
///
/// Structural problems (shape, out-of-range entries) are errors; axiom
/// failures are reported with witnesses in the returned [`RackReport`].
pub fn validate_rack(rows: &[Vec<usize>]) -> Result<RackReport, RackError> {
    let (n, table) = flat_from_rows(rows)?;
    Ok(axiom_report(n, &table))
}

fn flat_from_rows(rows: &[Vec<usize>]) -> Result<(usize, Vec<usize>), RackError> {
    let n = rows.len();
    if n == 0 {
        return Err(RackError::ZeroOrder);
    }
    let mut table = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(RackError::RowLength {
                row: r,
                len: row.len(),
                n,
            });
        }
        for (c, &v) in row.iter().enumerate() {
            if v == 0 || v > n {
                return Err(RackError::EntryRange {
                    row: r,
                    col: c,
                    value: v,
                    n,
                });
            }
            table.push(v - 1);
        }
    }
    Ok((n, table))
}

impl FiniteRack {
    /// Builds a rack from 1-based table rows, rejecting structural problems
    /// and axiom violations.
    pub fn from_rows_1based(rows: &[Vec<usize>]) -> Result<Self, RackError> {
        let (n, table) = flat_from_rows(rows)?;
        Self::from_flat(n, table)
    }

    /// Builds a rack from a flat 0-based row-major table.
    pub fn from_flat(n: usize, table: Vec<usize>) -> Result<Self, RackError> {
        if n == 0 {
            return Err(RackError::ZeroOrder);
        }
        assert_eq!(table.len(), n * n, "flat table must have n*n entries");
        let report = axiom_report(n, &table);
        if !report.is_ok() {
            return Err(RackError::Axioms { report });
        }
        let mut inv = vec![0; n * n];
        for y in 0..n {
            for x in 0..n {
                let v = table[x * n + y];
                inv[v * n + y] = x;
            }
        }
        Ok(FiniteRack { n, table, inv })
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.n
    }

    /// The operation `x ▷ y` (0-based).
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    /// The inverse operation `x ▷̄ y` (0-based).
    pub fn inverse_op(&self, x: usize, y: usize) -> usize {
        self.inv[x * self.n + y]
    }

    /// The flat 0-based operation table.
    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    /// The inverse table as 1-based rows.
    pub fn inverse_rows_1based(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.inverse_op(x, y) + 1).collect())
            .collect()
    }

    /// The operation table as 1-based rows.
    pub fn rows_1based(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.op(x, y) + 1).collect())
            .collect()
    }

    /// True when the diagonal is the identity (`x ▷ x = x`).
    pub fn is_quandle(&self) -> bool {
        (0..self.n).all(|x| self.op(x, x) == x)
    }

    /// The trivial quandle `x ▷ y = x`.
    pub fn trivial(n: usize) -> Result<Self, RackError> {
        if n == 0 {
            return Err(RackError::ZeroOrder);
        }
        let table = (0..n).flat_map(|x| std::iter::repeat(x).take(n)).collect();
        Self::from_flat(n, table)
    }

    /// The dihedral quandle `x ▷ y = 2y - x (mod n)`.
    pub fn dihedral(n: usize) -> Result<Self, RackError> {
        if n == 0 {
            return Err(RackError::ZeroOrder);
        }
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push((2 * y + n - x % n) % n);
            }
        }
        Self::from_flat(n, table)
    }

    /// The Alexander quandle `x ▷ y = t·x + (1-t)·y (mod n)`, defined when
    /// `t` is a unit modulo `n`.
    pub fn alexander_quandle(n: usize, t: usize) -> Result<Self, RackError> {
        if n == 0 {
            return Err(RackError::ZeroOrder);
        }
        let t = t % n;
        if gcd(t, n) != 1 {
            return Err(RackError::NotUnit { t, n });
        }
        let one_minus_t = (1 + n - t) % n;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push((t * x + one_minus_t * y) % n);
            }
        }
        Self::from_flat(n, table)
    }

    /// The constant action rack `x ▷ y = σ(x)`.
    pub fn constant_action_rack(sigma: &Perm) -> Result<Self, RackError> {
        let n = sigma.degree();
        if n == 0 {
            return Err(RackError::ZeroOrder);
        }
        let table = (0..n)
            .flat_map(|x| std::iter::repeat(sigma.apply(x)).take(n))
            .collect();
        Self::from_flat(n, table)
    }

    /// The conjugation quandle `x ▷ y = y⁻¹ x y` of a group.
    pub fn conjugation_quandle(g: &CayleyTable) -> Self {
        let n = g.order();
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(g.op(g.op(g.inv(y), x), y));
            }
        }
        Self::from_flat(n, table).expect("conjugation satisfies the rack axioms")
    }

    /// The core quandle `x ▷ y = y x⁻¹ y` of a group.
    pub fn core_quandle(g: &CayleyTable) -> Self {
        let n = g.order();
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(g.op(g.op(y, g.inv(x)), y));
            }
        }
        Self::from_flat(n, table).expect("core satisfies the rack axioms")
    }

    /// The generalized Alexander quandle `x ▷ y = σ(x y⁻¹) y` for a group
    /// automorphism `σ`.
    pub fn generalized_alexander(g: &CayleyTable, sigma: &Perm) -> Result<Self, RackError> {
        if !g.is_automorphism(sigma) {
            return Err(RackError::NotAutomorphism);
        }
        let n = g.order();
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(g.op(sigma.apply(g.op(x, g.inv(y))), y));
            }
        }
        Self::from_flat(n, table).map_err(|_| RackError::NotAutomorphism)
    }

    /// Relabels elements by `sigma`: the new table satisfies
    /// `new(σx, σy) = σ(old(x, y))`.
    pub fn relabel(&self, sigma: &Perm) -> Self {
        let n = self.n;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[sigma.apply(x) * n + sigma.apply(y)] = sigma.apply(self.op(x, y));
            }
        }
        Self::from_flat(n, table).expect("relabeling preserves the rack axioms")
    }

    /// The lexicographically least table among all relabelings. Two racks
    /// are isomorphic exactly when their canonical forms are equal.
    pub fn canonical_form(&self) -> Self {
        let n = self.n;
        let mut best: Option<Vec<usize>> = None;
        for sigma in Perm::all(n) {
            let mut cand = vec![0; n * n];
            for x in 0..n {
                for y in 0..n {
                    cand[sigma.apply(x) * n + sigma.apply(y)] = sigma.apply(self.op(x, y));
                }
            }
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        Self::from_flat(n, best.expect("at least the identity relabeling"))
            .expect("relabeling preserves the rack axioms")
    }

    /// The least isomorphism from `self` to `other` (by image list), if any.
    pub fn isomorphism_to(&self, other: &FiniteRack) -> Option<Perm> {
        if self.n != other.n {
            return None;
        }
        Perm::all(self.n)
            .into_iter()
            .find(|sigma| &self.relabel(sigma) == other)
    }

    /// Orbits of the action generated by `x ↦ x ▷ y` over all `y`
    /// (connected components of the translation graph), sorted.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = BTreeSet::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(x) = stack.pop() {
                orbit.insert(x);
                for y in 0..n {
                    for next in [self.op(x, y), self.inverse_op(x, y)] {
                        if !seen[next] {
                            seen[next] = true;
                            stack.push(next);
                        }
                    }
                }
            }
            orbits.push(orbit.into_iter().collect());
        }
        orbits
    }
}

/// Returns whether two racks are related by a relabeling, with the least
/// witness permutation.
pub fn are_isomorphic(r1: &FiniteRack, r2: &FiniteRack) -> Option<Perm> {
    r1.isomorphism_to(r2)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Enumerates all racks of order `n` up to isomorphism, as canonical forms
/// sorted by table.
///
/// Column bijectivity means each column is a permutation `π_y`, and
/// self-distributivity is the conjugation law `π_{π_z(y)} = π_z π_y π_z⁻¹`;
/// the search assigns columns depth-first and closes under that law,
/// pruning contradictions early.
pub fn enumerate_racks(n: usize) -> Result<Vec<FiniteRack>, RackError> {
    if n == 0 {
        return Err(RackError::ZeroOrder);
    }
    let bound = max_enumeration_order();
    if n > bound {
        return Err(RackError::BoundExceeded { n, bound });
    }
    let perms = Perm::all(n);
    let mut canon: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut cols: Vec<Option<Perm>> = vec![None; n];
    search_columns(n, &perms, &mut cols, &mut canon);
    canon
        .into_iter()
        .map(|table| FiniteRack::from_flat(n, table))
        .collect()
}

/// Applies the conjugation closure to a partial column assignment.
/// Returns false on contradiction.
fn close_columns(n: usize, cols: &mut [Option<Perm>]) -> bool {
    loop {
        let mut changed = false;
        for z in 0..n {
            let Some(pi_z) = cols[z].clone() else {
                continue;
            };
            for y in 0..n {
                let Some(pi_y) = cols[y].clone() else {
                    continue;
                };
                let target = pi_z.apply(y);
                let required = pi_z.compose(&pi_y).compose(&pi_z.inverse());
                match &cols[target] {
                    Some(existing) => {
                        if *existing != required {
                            return false;
                        }
                    }
                    None => {
                        cols[target] = Some(required);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

fn search_columns(
    n: usize,
    perms: &[Perm],
    cols: &mut Vec<Option<Perm>>,
    canon: &mut BTreeSet<Vec<usize>>,
) {
    let Some(free) = cols.iter().position(Option::is_none) else {
        let mut table = vec![0; n * n];
        for y in 0..n {
            let pi = cols[y].as_ref().expect("all columns assigned");
            for x in 0..n {
                table[x * n + y] = pi.apply(x);
            }
        }
        let rack = FiniteRack::from_flat(n, table).expect("closure enforces both axioms");
        canon.insert(rack.canonical_form().table);
        return;
    };
    for pi in perms {
        let mut next = cols.clone();
        next[free] = Some(pi.clone());
        if close_columns(n, &mut next) {
            search_columns(n, perms, &mut next, canon);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_accepts_reference_tables() {
        let dihedral3 = vec![vec![1, 3, 2], vec![3, 2, 1], vec![2, 1, 3]];
        assert!(validate_rack(&dihedral3).unwrap().is_ok());
        assert!(validate_rack(&[vec![1]]).unwrap().is_ok());
        let nonquandle = vec![vec![2, 2, 1], vec![1, 1, 2], vec![3, 3, 3]];
        assert!(validate_rack(&nonquandle).unwrap().is_ok());
    }

    #[test]
    fn validate_reports_column_violation() {
        let bad = vec![vec![1, 1], vec![1, 2]];
        let report = validate_rack(&bad).unwrap();
        let witness = report.column_violation.expect("column 0 repeats value 0");
        assert_eq!(witness.col, 0);
        assert!(!report.is_ok());
    }

    #[test]
    fn validate_reports_distributivity_violation() {
        // Columns are permutations but self-distributivity fails.
        let bad = vec![vec![2, 1, 3], vec![1, 3, 2], vec![3, 2, 1]];
        let report = validate_rack(&bad).unwrap();
        assert!(report.column_violation.is_none());
        assert!(report.distributivity_violation.is_some());
    }

    #[test]
    fn structural_errors_are_not_axiom_reports() {
        assert_eq!(validate_rack(&[]), Err(RackError::ZeroOrder));
        assert!(matches!(
            validate_rack(&[vec![1, 2], vec![1]]),
            Err(RackError::RowLength { .. })
        ));
        assert!(matches!(
            validate_rack(&[vec![1, 3], vec![2, 1]]),
            Err(RackError::EntryRange { .. })
        ));
    }

    #[test]
    fn quandle_detection() {
        assert!(FiniteRack::dihedral(3).unwrap().is_quandle());
        assert!(FiniteRack::trivial(5).unwrap().is_quandle());
        let sigma = Perm::parse_cycles("(12)(34)", 4).unwrap();
        assert!(!FiniteRack::constant_action_rack(&sigma).unwrap().is_quandle());
    }

    #[test]
    fn inverse_tables() {
        let trivial = FiniteRack::trivial(3).unwrap();
        assert_eq!(trivial.inverse_rows_1based(), trivial.rows_1based());
        let dihedral = FiniteRack::dihedral(3).unwrap();
        assert_eq!(dihedral.inverse_rows_1based(), dihedral.rows_1based());
        let sigma = Perm::parse_cycles("(123)", 3).unwrap();
        let constant = FiniteRack::constant_action_rack(&sigma).unwrap();
        let sigma_inv = sigma.inverse();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(constant.inverse_op(x, y), sigma_inv.apply(x));
                assert_eq!(constant.inverse_op(constant.op(x, y), y), x);
                assert_eq!(constant.op(constant.inverse_op(x, y), y), x);
            }
        }
    }

    #[test]
    fn conjugation_of_abelian_groups_is_trivial() {
        let z3 = CayleyTable::cyclic(3).unwrap();
        assert_eq!(
            FiniteRack::conjugation_quandle(&z3),
            FiniteRack::trivial(3).unwrap()
        );
        assert_eq!(
            FiniteRack::conjugation_quandle(&CayleyTable::trivial()),
            FiniteRack::trivial(1).unwrap()
        );
    }

    #[test]
    fn conjugation_of_s3_has_three_orbits() {
        let s3 = CayleyTable::symmetric(3);
        let rack = FiniteRack::conjugation_quandle(&s3);
        assert!(rack.is_quandle());
        assert_eq!(rack.orbits().len(), 3);
    }

    #[test]
    fn core_of_z3_matches_dihedral() {
        let z3 = CayleyTable::cyclic(3).unwrap();
        let core = FiniteRack::core_quandle(&z3);
        assert!(are_isomorphic(&core, &FiniteRack::dihedral(3).unwrap()).is_some());
        let z2 = CayleyTable::cyclic(2).unwrap();
        let core2 = FiniteRack::core_quandle(&z2);
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(core2.op(core2.op(x, y), y), x);
            }
        }
    }

    #[test]
    fn alexander_construction() {
        assert!(FiniteRack::alexander_quandle(3, 2).is_ok());
        assert_eq!(
            FiniteRack::alexander_quandle(5, 1).unwrap(),
            FiniteRack::trivial(5).unwrap()
        );
        let inv = FiniteRack::alexander_quandle(4, 3).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(inv.op(inv.op(x, y), y), x);
            }
        }
        assert!(matches!(
            FiniteRack::alexander_quandle(4, 2),
            Err(RackError::NotUnit { .. })
        ));
    }

    #[test]
    fn alexander_3_2_matches_dihedral() {
        assert_eq!(
            FiniteRack::alexander_quandle(3, 2).unwrap(),
            FiniteRack::dihedral(3).unwrap()
        );
    }

    #[test]
    fn generalized_alexander_cases() {
        let z4 = CayleyTable::cyclic(4).unwrap();
        let negation = Perm::from_images(vec![0, 3, 2, 1]).unwrap();
        let ga = FiniteRack::generalized_alexander(&z4, &negation).unwrap();
        assert_eq!(ga, FiniteRack::alexander_quandle(4, 3).unwrap());

        let id = Perm::identity(4);
        assert_eq!(
            FiniteRack::generalized_alexander(&z4, &id).unwrap(),
            FiniteRack::trivial(4).unwrap()
        );

        let s3 = CayleyTable::symmetric(3);
        let transposition_index = Perm::all(3)
            .iter()
            .position(|p| p.to_string() == "(12)")
            .unwrap();
        let inner = s3.inner_automorphism(transposition_index);
        assert!(FiniteRack::generalized_alexander(&s3, &inner).is_ok());

        let not_auto = Perm::parse_cycles("(12)", 4).unwrap();
        assert_eq!(
            FiniteRack::generalized_alexander(&z4, &not_auto),
            Err(RackError::NotAutomorphism)
        );
    }

    #[test]
    fn constant_action_reference_tables() {
        let sigma = Perm::parse_cycles("(123)", 3).unwrap();
        let rack = FiniteRack::constant_action_rack(&sigma).unwrap();
        assert_eq!(
            rack.rows_1based(),
            vec![vec![2, 2, 2], vec![3, 3, 3], vec![1, 1, 1]]
        );
        let id = Perm::identity(3);
        assert_eq!(
            FiniteRack::constant_action_rack(&id).unwrap(),
            FiniteRack::trivial(3).unwrap()
        );
    }

    #[test]
    fn isomorphism_and_canonical_forms() {
        let dihedral = FiniteRack::dihedral(3).unwrap();
        let relabeled = dihedral.relabel(&Perm::parse_cycles("(12)", 3).unwrap());
        assert!(are_isomorphic(&dihedral, &relabeled).is_some());
        assert_eq!(dihedral.canonical_form(), relabeled.canonical_form());

        let trivial = FiniteRack::trivial(3).unwrap();
        let constant = FiniteRack::constant_action_rack(&Perm::parse_cycles("(123)", 3).unwrap()).unwrap();
        assert!(are_isomorphic(&trivial, &constant).is_none());
        assert_ne!(trivial.canonical_form(), constant.canonical_form());

        let canon = dihedral.canonical_form();
        assert_eq!(canon.canonical_form(), canon);
    }

    #[test]
    fn enumerate_small_orders() {
        assert_eq!(enumerate_racks(1).unwrap().len(), 1);
        let order2 = enumerate_racks(2).unwrap();
        assert_eq!(order2.len(), 2);
        let trivial2 = FiniteRack::trivial(2).unwrap().canonical_form();
        let swap = FiniteRack::constant_action_rack(&Perm::parse_cycles("(12)", 2).unwrap())
            .unwrap()
            .canonical_form();
        assert!(order2.contains(&trivial2));
        assert!(order2.contains(&swap));
        assert_eq!(enumerate_racks(3).unwrap().len(), 6);
    }

    #[test]
    fn enumeration_respects_bound() {
        assert!(matches!(
            enumerate_racks(DEFAULT_MAX_ORDER + 1),
            Err(RackError::BoundExceeded { .. })
        ));
        assert_eq!(enumerate_racks(0), Err(RackError::ZeroOrder));
    }
}
