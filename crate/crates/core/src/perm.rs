//! Permutations of `{0, .., n-1}` with 1-based cycle notation at the text
//! boundary.
//!
//! Cycle notation follows the usual conventions: `()` denotes the identity,
//! fixed points are omitted, and points inside a cycle may be separated by
//! spaces or commas. When the degree is at most 9, a run of digits like
//! `(1324)` is read digit by digit.

use std::fmt;

use thiserror::Error;

/// Errors for permutation construction and cycle-notation parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    /// The image list does not describe a bijection.
    #[error("image list is not a permutation: value {value} is out of range or repeated")]
    NotBijective {
        /// Offending image value (0-based).
        value: usize,
    },
    /// Malformed cycle-notation text.
    #[error("cycle notation error at byte {pos}: {reason}")]
    Parse {
        /// Byte offset of the offending character.
        pos: usize,
        /// Human-readable description.
        reason: String,
    },
    /// A cycle mentions a point outside `1..=n`.
    #[error("point {point} is outside 1..={n}")]
    PointRange {
        /// The 1-based point as written.
        point: usize,
        /// Degree of the permutation being parsed.
        n: usize,
    },
    /// A point occurs in more than one cycle position.
    #[error("point {point} appears more than once")]
    RepeatedPoint {
        /// The 1-based point as written.
        point: usize,
    },
}

/// A permutation of `{0, .., n-1}`, stored as its image list.
///
/// Ordering and equality compare image lists lexicographically, which makes
/// sorted permutation lists reproducible.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// The identity permutation on `n` points.
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its 0-based image list.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(PermError::NotBijective { value: v });
            }
            seen[v] = true;
        }
        Ok(Perm { images })
    }

    /// Number of points.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of point `x` (0-based).
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// The raw image list.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Perm { images: inv }
    }

    /// Composition `self ∘ inner`, the map `x ↦ self(inner(x))`.
    pub fn compose(&self, inner: &Perm) -> Self {
        debug_assert_eq!(self.degree(), inner.degree());
        Perm {
            images: inner.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    /// True when every point is fixed.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// True when the permutation squares to the identity.
    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(x, &y)| self.images[y] == x)
    }

    /// All permutations of `n` points in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if current.len() == n {
                out.push(Perm {
                    images: current.clone(),
                });
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    current.push(v);
                    rec(n, current, used, out);
                    current.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut out);
        out
    }

    /// Nontrivial cycles (length at least 2), 0-based, each starting at its
    /// smallest point, sorted by that smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            if cycle.len() >= 2 {
                out.push(cycle);
            }
        }
        out
    }

    /// Parses 1-based cycle notation for a permutation of `n` points.
    ///
    /// `()` is the identity. Points inside a cycle are separated by spaces
    /// or commas; when `n <= 9` an unseparated digit run like `(1324)` is
    /// read one digit per point.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self, PermError> {
        let bytes = text.as_bytes();
        let mut images: Vec<usize> = (0..n).collect();
        let mut placed = vec![false; n];
        let mut i = 0;
        let mut saw_group = false;
        while i < bytes.len() {
            let c = bytes[i] as char;
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c != '(' {
                return Err(PermError::Parse {
                    pos: i,
                    reason: format!("expected '(' but found {c:?}"),
                });
            }
            let open = i;
            let close = text[i..].find(')').map(|off| i + off).ok_or(PermError::Parse {
                pos: open,
                reason: "unclosed '('".to_string(),
            })?;
            let body = text[i + 1..close].trim();
            i = close + 1;
            saw_group = true;
            if body.is_empty() {
                continue;
            }
            let points = parse_cycle_points(body, n, open + 1)?;
            for &p in &points {
                if p == 0 || p > n {
                    return Err(PermError::PointRange { point: p, n });
                }
                if placed[p - 1] {
                    return Err(PermError::RepeatedPoint { point: p });
                }
                placed[p - 1] = true;
            }
            for k in 0..points.len() {
                let from = points[k] - 1;
                let to = points[(k + 1) % points.len()] - 1;
                images[from] = to;
            }
        }
        if !saw_group {
            return Err(PermError::Parse {
                pos: 0,
                reason: "empty permutation text; write () for the identity".to_string(),
            });
        }
        Perm::from_images(images)
    }
}

/// Splits one cycle body into 1-based points.
fn parse_cycle_points(body: &str, n: usize, pos: usize) -> Result<Vec<usize>, PermError> {
    let mut points = Vec::new();
    if body.contains(|c: char| c.is_whitespace() || c == ',') {
        for piece in body.split(|c: char| c.is_whitespace() || c == ',') {
            if piece.is_empty() {
                continue;
            }
            let p: usize = piece.parse().map_err(|_| PermError::Parse {
                pos,
                reason: format!("invalid point {piece:?}"),
            })?;
            points.push(p);
        }
    } else if body.chars().all(|c| c.is_ascii_digit()) {
        if n <= 9 {
            for c in body.chars() {
                points.push(c.to_digit(10).unwrap() as usize);
            }
        } else {
            let p: usize = body.parse().map_err(|_| PermError::Parse {
                pos,
                reason: format!("invalid point {body:?}"),
            })?;
            points.push(p);
        }
    } else {
        return Err(PermError::Parse {
            pos,
            reason: format!("invalid cycle body {body:?}"),
        });
    }
    Ok(points)
}

impl fmt::Display for Perm {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(out, "()");
        }
        let compact = self.degree() <= 9;
        for cycle in cycles {
            write!(out, "(")?;
            for (k, &p) in cycle.iter().enumerate() {
                if k > 0 && !compact {
                    write!(out, " ")?;
                }
                write!(out, "{}", p + 1)?;
            }
            write!(out, ")")?;
        }
        Ok(())
    }
}
