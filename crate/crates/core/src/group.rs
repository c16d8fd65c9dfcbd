//! Finite groups as Cayley tables, the carrier for the group-based rack
//! constructors (conjugation, core, generalized Alexander).

use thiserror::Error;

use crate::perm::Perm;

/// Errors for Cayley-table construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    /// Groups must have at least one element.
    #[error("group order must be at least 1")]
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
        /// Group order.
        n: usize,
    },
    /// No two-sided identity element exists.
    #[error("table has no identity element")]
    NoIdentity,
    /// Associativity fails at a witness triple (0-based).
    #[error("associativity fails at ({a}, {b}, {c})")]
    NotAssociative {
        /// First element.
        a: usize,
        /// Second element.
        b: usize,
        /// Third element.
        c: usize,
    },
    /// An element has no inverse.
    #[error("element {a} has no inverse")]
    NoInverse {
        /// The 0-based element.
        a: usize,
    },
}

/// A finite group given by its multiplication table.
///
/// Elements are `0..n`; `op(a, b)` is the product `a * b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    n: usize,
    table: Vec<usize>,
    identity: usize,
}

impl CayleyTable {
    /// Builds a group from 1-based table rows, checking all group axioms.
    pub fn from_rows_1based(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::ZeroOrder);
        }
        let mut table = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::RowLength {
                    row: r,
                    len: row.len(),
                    n,
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(GroupError::EntryRange {
                        row: r,
                        col: c,
                        value: v,
                        n,
                    });
                }
                table.push(v - 1);
            }
        }
        Self::from_flat(n, table)
    }

    fn from_flat(n: usize, table: Vec<usize>) -> Result<Self, GroupError> {
        let op = |a: usize, b: usize| table[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| op(e, a) == a && op(a, e) == a))
            .ok_or(GroupError::NoIdentity)?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if op(op(a, b), c) != op(a, op(b, c)) {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        for a in 0..n {
            if !(0..n).any(|b| op(a, b) == identity && op(b, a) == identity) {
                return Err(GroupError::NoInverse { a });
            }
        }
        Ok(CayleyTable { n, table, identity })
    }

    /// The cyclic group of order `n` on residues `0..n` under addition.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::ZeroOrder);
        }
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push((a + b) % n);
            }
        }
        Self::from_flat(n, table)
    }

    /// The one-element group.
    pub fn trivial() -> Self {
        Self::cyclic(1).expect("order 1 is valid")
    }

    /// The symmetric group on `degree` points; elements are the
    /// permutations of [`Perm::all`] in that order, and the product `a * b`
    /// is the composite mapping `x` to `a(b(x))`.
    pub fn symmetric(degree: usize) -> Self {
        let elems = Perm::all(degree);
        let n = elems.len();
        let index = |p: &Perm| elems.binary_search(p).expect("closure under composition");
        let mut table = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                table.push(index(&a.compose(b)));
            }
        }
        Self::from_flat(n, table).expect("symmetric group axioms hold")
    }

    /// Group order.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Product of `a` and `b` (0-based).
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    /// The identity element.
    pub fn identity(&self) -> usize {
        self.identity
    }

    /// The inverse of `a`.
    pub fn inv(&self, a: usize) -> usize {
        (0..self.n)
            .find(|&b| self.op(a, b) == self.identity)
            .expect("inverses checked on construction")
    }

    /// True when the group is commutative.
    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// True when `sigma` is a group automorphism.
    pub fn is_automorphism(&self, sigma: &Perm) -> bool {
        sigma.degree() == self.n
            && (0..self.n).all(|a| {
                (0..self.n)
                    .all(|b| sigma.apply(self.op(a, b)) == self.op(sigma.apply(a), sigma.apply(b)))
            })
    }

    /// The inner automorphism `x ↦ g x g⁻¹`.
    pub fn inner_automorphism(&self, g: usize) -> Perm {
        let ginv = self.inv(g);
        let images = (0..self.n).map(|x| self.op(self.op(g, x), ginv)).collect();
        Perm::from_images(images).expect("conjugation is bijective")
    }

    /// The table as 1-based rows.
    pub fn rows_1based(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.op(a, b) + 1).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups_are_abelian() {
        for n in 1..=6 {
            let g = CayleyTable::cyclic(n).unwrap();
            assert!(g.is_abelian());
            assert_eq!(g.identity(), 0);
            for a in 0..n {
                assert_eq!(g.op(a, g.inv(a)), 0);
            }
        }
    }

    #[test]
    fn symmetric_three_is_nonabelian_of_order_six() {
        let s3 = CayleyTable::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
    }

    #[test]
    fn inner_automorphisms_are_automorphisms() {
        let s3 = CayleyTable::symmetric(3);
        for g in 0..s3.order() {
            assert!(s3.is_automorphism(&s3.inner_automorphism(g)));
        }
    }

    #[test]
    fn rejects_broken_tables() {
        assert_eq!(
            CayleyTable::from_rows_1based(&[]),
            Err(GroupError::ZeroOrder)
        );
        // Z3 with one entry corrupted: no longer associative or lacks identity.
        let bad = vec![vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 1]];
        assert!(CayleyTable::from_rows_1based(&bad).is_err());
        let out_of_range = vec![vec![1, 2], vec![2, 3]];
        assert!(matches!(
            CayleyTable::from_rows_1based(&out_of_range),
            Err(GroupError::EntryRange { .. })
        ));
    }

    #[test]
    fn roundtrip_rows() {
        let g = CayleyTable::cyclic(4).unwrap();
        let rows = g.rows_1based();
        let back = CayleyTable::from_rows_1based(&rows).unwrap();
        assert_eq!(g, back);
    }
}
