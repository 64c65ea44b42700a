//! Littlewood–Richardson tableaux, coefficients, and skew-shape
//! classification.
//!
//! A filling of a skew shape with positive integers is an LR tableau when
//! rows weakly increase left to right, columns strictly increase top to
//! bottom, and the reverse reading word (each row right to left, rows top to
//! bottom) is a lattice word: every prefix contains at least as many `i`s as
//! `(i+1)`s. The number of LR tableaux of shape `lambda/mu` and content `nu`
//! is the coefficient `c^lambda_(mu,nu)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::partitions::{Partition, SkewShape};
use crate::{Error, Result};

/// An LR tableau: a lattice filling of a skew shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LRTableau {
    shape: SkewShape,
    entries: BTreeMap<(usize, usize), usize>,
    content: Partition,
}

impl LRTableau {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Label of the cell `(row, col)`, 1-indexed.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.entries.get(&(row, col)).copied()
    }

    pub fn content(&self) -> &Partition {
        &self.content
    }

    /// The reverse reading word: rows top to bottom, each right to left.
    pub fn reading_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.entries.len());
        for row in 1..=self.shape.outer().len() {
            let mut cells: Vec<_> = self
                .entries
                .iter()
                .filter(|((r, _), _)| *r == row)
                .collect();
            cells.sort_by_key(|(&(_, col), _)| std::cmp::Reverse(col));
            word.extend(cells.into_iter().map(|(_, &v)| v));
        }
        word
    }
}

impl fmt::Display for LRTableau {
    /// Matrix layout with `.` marking inner cells.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &row_len) in self.shape.outer().parts().iter().enumerate() {
            let row = i + 1;
            let inner = self.shape.inner().part(i);
            let mut line = Vec::with_capacity(row_len);
            for col in 1..=row_len {
                if col <= inner {
                    line.push(".".to_string());
                } else {
                    line.push(self.entries[&(row, col)].to_string());
                }
            }
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Cell traversal in reverse-reading order (each row right to left), which
/// lets every constraint be checked the moment a label is placed: the right
/// neighbour and the cell above are already filled, and the lattice property
/// is a running count comparison.
fn reading_order_cells(shape: &SkewShape) -> Vec<(usize, usize)> {
    let mut cells = shape.cells().to_vec();
    cells.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    cells
}

fn enumerate_fillings(
    shape: &SkewShape,
    content_bound: Option<&Partition>,
    out: &mut Vec<LRTableau>,
) {
    let cells = reading_order_cells(shape);
    if cells.is_empty() {
        out.push(LRTableau {
            shape: shape.clone(),
            entries: BTreeMap::new(),
            content: Partition::empty(),
        });
        return;
    }
    let max_label = match content_bound {
        Some(c) => c.len(),
        None => shape.outer().len(),
    };
    let mut entries: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut counts = vec![0usize; max_label + 1];
    backtrack(shape, &cells, 0, content_bound, &mut entries, &mut counts, out);
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    shape: &SkewShape,
    cells: &[(usize, usize)],
    idx: usize,
    content_bound: Option<&Partition>,
    entries: &mut BTreeMap<(usize, usize), usize>,
    counts: &mut Vec<usize>,
    out: &mut Vec<LRTableau>,
) {
    if idx == cells.len() {
        let mut parts: Vec<usize> = counts[1..].to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        // The lattice property makes the content weakly decreasing.
        let content = Partition::new(parts).expect("lattice word content");
        if let Some(bound) = content_bound {
            if content != *bound {
                return;
            }
        }
        out.push(LRTableau {
            shape: shape.clone(),
            entries: entries.clone(),
            content,
        });
        return;
    }
    let (row, col) = cells[idx];
    // Row bound from the right neighbour, column bound from the cell above.
    let right = entries.get(&(row, col + 1)).copied();
    let above = entries.get(&(row - 1, col)).copied();
    let lo = above.map_or(1, |a| a + 1);
    let hi = right.unwrap_or(counts.len() - 1).min(row);
    for label in lo..=hi {
        if label > 1 && counts[label] >= counts[label - 1] {
            continue; // would break the lattice prefix condition
        }
        if let Some(bound) = content_bound {
            if counts[label] >= bound.part(label - 1) {
                continue;
            }
        }
        counts[label] += 1;
        entries.insert((row, col), label);
        backtrack(shape, cells, idx + 1, content_bound, entries, counts, out);
        entries.remove(&(row, col));
        counts[label] -= 1;
    }
}

/// All LR tableaux of the given shape and content, duplicate-free by
/// construction order.
pub fn lr_tableaux(shape: &SkewShape, content: &Partition) -> Result<Vec<LRTableau>> {
    if content.size() != shape.size() {
        return Err(Error::ContentSizeMismatch {
            cells: shape.size(),
            content: content.size(),
        });
    }
    let mut out = Vec::new();
    enumerate_fillings(shape, Some(content), &mut out);
    Ok(out)
}

/// The Littlewood–Richardson coefficient `c^lambda_(mu,nu)`; zero whenever
/// the sizes are inconsistent or `mu` does not fit in `lambda`.
///
/// ```
/// use specrep::lr::lr_coefficient;
/// use specrep::partitions::Partition;
///
/// let lambda = Partition::parse("4,2")?;
/// let mu = Partition::parse("2,1")?;
/// assert_eq!(lr_coefficient(&lambda, &mu, &mu), 1);
/// # Ok::<(), specrep::Error>(())
/// ```
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> usize {
    if mu.size() + nu.size() != lambda.size() || !mu.contained_in(lambda) {
        return 0;
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone()).expect("containment checked");
    lr_tableaux(&shape, nu).map_or(0, |t| t.len())
}

/// The set of contents `nu` with `c^outer_(inner,nu) != 0`, obtained by
/// enumerating every lattice filling of the shape.
pub fn lr_set(shape: &SkewShape) -> BTreeSet<Partition> {
    let mut out = Vec::new();
    enumerate_fillings(shape, None, &mut out);
    out.into_iter().map(|t| t.content).collect()
}

/// Orientation of a skew shape that is a partition diagram up to translation
/// (`Upright`) or up to 180-degree rotation plus translation (`Rotated`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Upright,
    Rotated,
}

/// Recognizes shapes congruent to a straight diagram `[alpha]` or its
/// rotation; such shapes are exactly the ones with a single LR content.
pub fn shape_classify(shape: &SkewShape) -> Option<(Partition, Orientation)> {
    let cells = shape.cells();
    if cells.is_empty() {
        return Some((Partition::empty(), Orientation::Upright));
    }
    if let Some(alpha) = as_partition_diagram(&normalize(cells.to_vec())) {
        return Some((alpha, Orientation::Upright));
    }
    let max_r = cells.iter().map(|c| c.0).max().unwrap();
    let max_c = cells.iter().map(|c| c.1).max().unwrap();
    let rotated: Vec<(usize, usize)> = cells
        .iter()
        .map(|&(r, c)| (max_r + 1 - r, max_c + 1 - c))
        .collect();
    as_partition_diagram(&normalize(rotated)).map(|alpha| (alpha, Orientation::Rotated))
}

fn normalize(mut cells: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    let min_r = cells.iter().map(|c| c.0).min().unwrap();
    let min_c = cells.iter().map(|c| c.1).min().unwrap();
    for cell in &mut cells {
        cell.0 = cell.0 - min_r + 1;
        cell.1 = cell.1 - min_c + 1;
    }
    cells.sort_unstable();
    cells
}

fn as_partition_diagram(cells: &[(usize, usize)]) -> Option<Partition> {
    let rows = cells.iter().map(|c| c.0).max().unwrap();
    let mut lens = vec![0usize; rows];
    for &(r, c) in cells {
        lens[r - 1] = lens[r - 1].max(c);
    }
    // Every row must be a full prefix 1..len and lengths weakly decreasing.
    let expected: usize = lens.iter().sum();
    if expected != cells.len() {
        return None;
    }
    let mut seen = vec![0usize; rows];
    for &(r, c) in cells {
        if c > lens[r - 1] {
            return None;
        }
        seen[r - 1] += 1;
    }
    for (i, &len) in lens.iter().enumerate() {
        if seen[i] != len || len == 0 {
            return None;
        }
    }
    Partition::new(lens).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::mn_character;
    use crate::partitions::{partitions_of, CycleType};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn skew(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(p(outer), p(inner)).unwrap()
    }

    /// Independent route to `c^lambda_(mu,nu)`: the scalar product
    /// `<chi^lambda restricted to S_m x S_k, chi^mu x chi^nu>` computed from
    /// character values and class sizes.
    fn lr_coefficient_by_characters(lambda: &Partition, mu: &Partition, nu: &Partition) -> i128 {
        let m = mu.size();
        let k = nu.size();
        assert_eq!(m + k, lambda.size());
        let fact = |x: usize| -> i128 { (1..=x as i128).product() };
        let mut total: i128 = 0;
        for alpha in partitions_of(m) {
            for beta in partitions_of(k) {
                let ca = CycleType::new(alpha.clone());
                let cb = CycleType::new(beta.clone());
                let mut combined: Vec<usize> = alpha.parts().to_vec();
                combined.extend_from_slice(beta.parts());
                let joint = Partition::from_unsorted(combined);
                total += ca.class_size() as i128
                    * cb.class_size() as i128
                    * mn_character(lambda, &CycleType::new(joint)).unwrap() as i128
                    * mn_character(mu, &ca).unwrap() as i128
                    * mn_character(nu, &cb).unwrap() as i128;
            }
        }
        let denom = fact(m) * fact(k);
        assert_eq!(total % denom, 0);
        total / denom
    }

    #[test]
    fn paper_tableau_is_found() {
        let shape = skew(&[4, 3, 2], &[2, 1]);
        let tabs = lr_tableaux(&shape, &p(&[4, 1, 1])).unwrap();
        let found = tabs
            .iter()
            .find(|t| t.reading_word() == vec![1, 1, 2, 1, 3, 1])
            .expect("tableau with word 112131");
        assert_eq!(found.entry(1, 3), Some(1));
        assert_eq!(found.entry(1, 4), Some(1));
        assert_eq!(found.entry(2, 2), Some(1));
        assert_eq!(found.entry(2, 3), Some(2));
        assert_eq!(found.entry(3, 1), Some(1));
        assert_eq!(found.entry(3, 2), Some(3));
    }

    #[test]
    fn lattice_words_rejected() {
        // Words 123122 and 112133 from the same shape/content family fail the
        // lattice test, so their fillings must not appear.
        let shape = skew(&[4, 3, 2], &[2, 1]);
        for content in partitions_of(6) {
            for t in lr_tableaux(&shape, &content).unwrap() {
                let w = t.reading_word();
                assert_ne!(w, vec![1, 2, 3, 1, 2, 2]);
                assert_ne!(w, vec![1, 1, 2, 1, 3, 3]);
                // Recheck the lattice condition from scratch.
                let mut counts = [0usize; 10];
                for &x in &w {
                    counts[x] += 1;
                    if x > 1 {
                        assert!(counts[x] <= counts[x - 1]);
                    }
                }
            }
        }
    }

    #[test]
    fn horizontal_strip_has_unique_filling() {
        let shape = skew(&[5], &[2]);
        let tabs = lr_tableaux(&shape, &p(&[3])).unwrap();
        assert_eq!(tabs.len(), 1);
        assert!(tabs[0].entries.values().all(|&v| v == 1));
    }

    #[test]
    fn size_mismatch_is_error() {
        let shape = skew(&[3, 1], &[1]);
        assert!(lr_tableaux(&shape, &p(&[4])).is_err());
    }

    #[test]
    fn row_coefficient_is_one() {
        assert_eq!(lr_coefficient(&p(&[6]), &p(&[2]), &p(&[4])), 1);
    }

    #[test]
    fn symmetry_spot_check() {
        let lam = p(&[4, 3, 2]);
        assert_eq!(
            lr_coefficient(&lam, &p(&[2, 1]), &p(&[3, 2, 1])),
            lr_coefficient(&lam, &p(&[3, 2, 1]), &p(&[2, 1]))
        );
    }

    #[test]
    fn coefficients_match_character_oracle() {
        assert_eq!(
            lr_coefficient(&p(&[3, 3]), &p(&[1]), &p(&[3, 2])) as i128,
            lr_coefficient_by_characters(&p(&[3, 3]), &p(&[1]), &p(&[3, 2]))
        );
        assert_eq!(
            lr_coefficient(&p(&[4, 2]), &p(&[2, 1]), &p(&[2, 1])) as i128,
            lr_coefficient_by_characters(&p(&[4, 2]), &p(&[2, 1]), &p(&[2, 1]))
        );
        // A denser sample at n = 6.
        for lam in partitions_of(6) {
            for mu in partitions_of(2) {
                for nu in partitions_of(4) {
                    assert_eq!(
                        lr_coefficient(&lam, &mu, &nu) as i128,
                        lr_coefficient_by_characters(&lam, &mu, &nu),
                        "lambda={lam} mu={mu} nu={nu}"
                    );
                }
            }
        }
    }

    #[test]
    fn lr_set_examples() {
        let straight = skew(&[4, 2, 1], &[]);
        assert_eq!(
            lr_set(&straight).into_iter().collect::<Vec<_>>(),
            vec![p(&[4, 2, 1])]
        );

        let rotated = skew(&[3, 3], &[1]);
        let set = lr_set(&rotated);
        assert_eq!(set.len(), 1);
        assert!(set.contains(&p(&[3, 2])));

        let disconnected = skew(&[5, 2], &[3]);
        assert!(lr_set(&disconnected).len() >= 2);
    }

    #[test]
    fn shape_classify_examples() {
        assert_eq!(
            shape_classify(&skew(&[4, 3, 2], &[])),
            Some((p(&[4, 3, 2]), Orientation::Upright))
        );
        assert_eq!(
            shape_classify(&skew(&[3, 3], &[1])),
            Some((p(&[3, 2]), Orientation::Rotated))
        );
        assert_eq!(shape_classify(&skew(&[5, 2], &[3])), None);
    }

    #[test]
    fn unique_content_iff_straight_or_rotated_small() {
        // Lemma-style equivalence at |lambda| <= 6; the acceptance suite
        // pushes this to 8.
        for n in 1..=6 {
            for lam in partitions_of(n) {
                for m in 0..=n {
                    for nu in partitions_of(m) {
                        if !nu.contained_in(&lam) {
                            continue;
                        }
                        let shape = SkewShape::new(lam.clone(), nu.clone()).unwrap();
                        let unique = lr_set(&shape).len() == 1;
                        assert_eq!(
                            unique,
                            shape_classify(&shape).is_some(),
                            "shape {shape}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn branching_law_small() {
        for n in 2..=7 {
            for lam in partitions_of(n) {
                let corners = lam.corners().unwrap();
                for nu in partitions_of(n - 1) {
                    let expected = corners
                        .iter()
                        .any(|&(row, _)| lam.remove_corner(row).unwrap() == nu);
                    let c = lr_coefficient(&lam, &nu, &p(&[1]));
                    assert_eq!(c == 1, expected);
                    assert!(c <= 1);
                }
            }
        }
    }

    #[test]
    fn display_layout() {
        let shape = skew(&[4, 3, 2], &[2, 1]);
        let tabs = lr_tableaux(&shape, &p(&[4, 1, 1])).unwrap();
        let t3 = tabs
            .iter()
            .find(|t| t.reading_word() == vec![1, 1, 2, 1, 3, 1])
            .unwrap();
        assert_eq!(format!("{t3}"), ". . 1 1\n. 1 2\n1 3");
    }
}
