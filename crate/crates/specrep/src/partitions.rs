//! Partitions, Young and skew diagrams, and cycle-type arithmetic.

use std::fmt;

use num_integer::Integer;

use crate::{Error, Result};

/// A partition of a nonnegative integer: weakly decreasing positive parts.
///
/// Doubles as a Young diagram; rows and columns are 1-indexed when cells
/// are exposed (corners, skew shapes).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    /// Builds a partition, validating weak decrease and positivity.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new(), n: 0 }
    }

    /// Parses a comma-separated part list such as `"4,3,2"`.
    /// The empty string parses to the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at 0-based index `i`, or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// First part, or 0 for the empty partition.
    pub fn first_part(&self) -> usize {
        self.part(0)
    }

    /// The conjugate (transposed diagram) partition.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts, n: self.n }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// True iff `self` fits inside `other` row by row.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= other.part(i))
    }

    /// Removable corner cells as 1-indexed `(row, col)` pairs, ordered by
    /// decreasing row length: the corner in the longest row comes first.
    pub fn corners(&self) -> Result<Vec<(usize, usize)>> {
        if self.parts.is_empty() {
            return Err(Error::NoCorners);
        }
        // A cell ends its row and has no cell below exactly when the next
        // row is strictly shorter. Rows are already sorted by length, so
        // scanning top to bottom yields the first/second/... corner order.
        let mut out = Vec::new();
        for (i, &p) in self.parts.iter().enumerate() {
            if self.part(i + 1) < p {
                out.push((i + 1, p));
            }
        }
        Ok(out)
    }

    /// Removes the corner in row `row` (1-indexed), returning the smaller partition.
    pub fn remove_corner(&self, row: usize) -> Result<Partition> {
        let mut parts = self.parts.clone();
        if row == 0 || row > parts.len() {
            return Err(Error::InvalidPartition(format!("no row {row}")));
        }
        parts[row - 1] -= 1;
        parts.retain(|&p| p > 0);
        Partition::new(parts)
    }

    /// Principal hook lengths `a_i = lambda_i + lambda'_i - 2i + 1` along the
    /// main diagonal; strictly decreasing, summing to the size.
    pub fn diagonal_hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        (0..self.parts.len())
            .take_while(|&i| self.parts[i] > i)
            .map(|i| self.parts[i] + conj.parts[i] - 2 * i - 1)
            .collect()
    }

    /// Hook length of every cell, row-major.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.n);
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p {
                out.push(p - j + conj.parts[j] - i - 1);
            }
        }
        out
    }

    /// Dimension of the irreducible representation indexed by this partition,
    /// by the hook length formula `n! / prod(hooks)`.
    pub fn dimension(&self) -> u64 {
        // Divide incrementally to keep intermediates small.
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for (k, h) in self.hook_lengths().into_iter().enumerate() {
            num *= (k + 1) as u128;
            den *= h as u128;
            let g = num.gcd(&den);
            num /= g;
            den /= g;
        }
        debug_assert_eq!(den, 1);
        num as u64
    }
}

impl fmt::Display for Partition {
    /// Comma-separated part list, e.g. `4,3,2`; empty partition prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s)
    }
}

/// All partitions of `n` in reverse lexicographic order.
///
/// ```
/// let names: Vec<String> = specrep::partitions::partitions_of(4)
///     .iter()
///     .map(|p| p.to_string())
///     .collect();
/// assert_eq!(names, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
/// ```
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    gen_partitions(n, n, &mut prefix, &mut out);
    out
}

fn gen_partitions(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition {
            parts: prefix.clone(),
            n: prefix.iter().sum(),
        });
        return;
    }
    for p in (1..=n.min(max)).rev() {
        prefix.push(p);
        gen_partitions(n - p, p, prefix, out);
        prefix.pop();
    }
}

/// A conjugacy class of `S_n`: the multiset of cycle lengths of a permutation,
/// fixed points included, together with the element order and sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType {
    mu: Partition,
    order: u64,
    sign: i64,
}

impl CycleType {
    pub fn new(mu: Partition) -> Self {
        let order = mu.parts().iter().fold(1u64, |acc, &p| acc.lcm(&(p as u64)));
        let sign = if (mu.size() - mu.len()).is_multiple_of(2) { 1 } else { -1 };
        CycleType { mu, order, sign }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(CycleType::new(Partition::parse(s)?))
    }

    pub fn partition(&self) -> &Partition {
        &self.mu
    }

    pub fn parts(&self) -> &[usize] {
        self.mu.parts()
    }

    pub fn size(&self) -> usize {
        self.mu.size()
    }

    /// Order of any permutation of this cycle type: lcm of the parts.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Sign of any permutation of this cycle type: `(-1)^(n - #cycles)`.
    pub fn sign(&self) -> i64 {
        self.sign
    }

    /// Exponent `s` with `zeta_o^s = sign`: 0 for even classes, `o/2` for odd.
    /// Odd sign forces an even part, hence even order.
    pub fn sign_exponent(&self) -> u64 {
        if self.sign == 1 {
            0
        } else {
            debug_assert_eq!(self.order % 2, 0);
            self.order / 2
        }
    }

    /// Cycle type of the `i`-th power: a cycle of length `r` splits into
    /// `gcd(r, i)` cycles of length `r / gcd(r, i)`.
    pub fn power(&self, i: u64) -> CycleType {
        let mut parts = Vec::new();
        for &r in self.mu.parts() {
            let g = (r as u64).gcd(&i) as usize;
            for _ in 0..g {
                parts.push(r / g);
            }
        }
        CycleType::new(Partition::from_unsorted(parts))
    }

    /// True iff all parts are odd and pairwise distinct, i.e. the `S_n`
    /// class splits into two `A_n` classes.
    pub fn splits_in_alternating(&self) -> bool {
        let parts = self.mu.parts();
        parts.iter().all(|&p| p % 2 == 1) && parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Number of permutations of this cycle type: `n! / (prod r^m_r * m_r!)`.
    pub fn class_size(&self) -> u128 {
        let n = self.size();
        let mut z: u128 = 1;
        let mut mult: std::collections::HashMap<usize, u128> = std::collections::HashMap::new();
        for &r in self.parts() {
            z *= r as u128;
            let m = mult.entry(r).or_insert(0);
            *m += 1;
            z *= *m;
        }
        let fact: u128 = (1..=n as u128).product();
        fact / z
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.mu)
    }
}

impl std::str::FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CycleType::parse(s)
    }
}

/// A skew diagram `[outer / inner]` with `inner` contained in `outer`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
    cells: Vec<(usize, usize)>,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.contained_in(&outer) {
            return Err(Error::InnerNotContained);
        }
        let mut cells = Vec::with_capacity(outer.size() - inner.size());
        for (i, &p) in outer.parts().iter().enumerate() {
            for j in inner.part(i)..p {
                cells.push((i + 1, j + 1));
            }
        }
        Ok(SkewShape { outer, inner, cells })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Cells as 1-indexed `(row, col)` pairs in row-major order.
    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}
