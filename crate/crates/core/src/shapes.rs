//! Partitions, rectangles and skew shapes: the ambient universe of Young's lattice.
//!
//! Cells are 1-based `(row, col)` pairs with row 1 on top, matching English
//! notation for Young diagrams.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The ambient `ell x k` rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rectangle {
    ell: usize,
    k: usize,
}

impl Rectangle {
    pub fn new(ell: usize, k: usize) -> Result<Self> {
        if ell == 0 || k == 0 {
            return Err(Error::EmptyRectangle { ell, k });
        }
        Ok(Self { ell, k })
    }

    /// Number of rows.
    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Number of columns.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn area(&self) -> usize {
        self.ell * self.k
    }

    /// The rectangle itself as a partition `(k, k, ..., k)`.
    pub fn full(&self) -> Partition {
        Partition(vec![self.k; self.ell])
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.row <= self.ell && cell.col <= self.k
    }

    /// The 180-degree rotation of a cell inside the rectangle.
    pub fn rotate_cell(&self, cell: Cell) -> Cell {
        Cell::new(self.ell + 1 - cell.row, self.k + 1 - cell.col)
    }

    /// Every partition fitting in the rectangle, ordered by size and then
    /// lexicographically.
    pub fn partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut parts = Vec::with_capacity(self.ell);
        fill_partitions(self.ell, self.k, &mut parts, &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
        out
    }
}

fn fill_partitions(rows: usize, max: usize, parts: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if parts.len() == rows {
        out.push(Partition::from_parts_unchecked(parts.clone()));
        return;
    }
    for p in 0..=max {
        parts.push(p);
        fill_partitions(rows, p, parts, out);
        parts.pop();
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.ell, self.k)
    }
}

impl FromStr for Rectangle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .trim()
            .split_once(['x', 'X'])
            .ok_or_else(|| Error::Parse(format!("expected LxK, got {s:?}")))?;
        let ell = a
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad row count in {s:?}")))?;
        let k = b
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad column count in {s:?}")))?;
        Rectangle::new(ell, k)
    }
}

/// A cell of a Young diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    pub(crate) fn right(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }

    pub(crate) fn below(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }

    pub(crate) fn left(self) -> Option<Cell> {
        (self.col > 1).then(|| Cell::new(self.row, self.col - 1))
    }

    pub(crate) fn above(self) -> Option<Cell> {
        (self.row > 1).then(|| Cell::new(self.row - 1, self.col))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// An integer partition, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts));
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    /// Length of 1-based row `row`; zero past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return usize::MAX;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// `true` iff `inner` is contained in `self` componentwise.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.0.len() <= self.0.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// `true` iff `self` is obtained from `lower` by adding one cell.
    pub fn covers(&self, lower: &Partition) -> bool {
        self.size() == lower.size() + 1 && self.contains(lower)
    }

    pub fn fits(&self, rect: Rectangle) -> bool {
        self.0.len() <= rect.ell && self.0.first().is_none_or(|&p| p <= rect.k)
    }

    /// Cells whose addition yields a partition, top row first.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for row in 1..=self.0.len() + 1 {
            let len = self.row_len(row);
            if row == 1 || self.row_len(row - 1) > len {
                out.push(Cell::new(row, len + 1));
            }
        }
        out
    }

    /// Cells whose removal yields a partition, top row first.
    pub fn removable_cells(&self) -> Vec<Cell> {
        (1..=self.0.len())
            .filter(|&row| self.row_len(row) > self.row_len(row + 1))
            .map(|row| Cell::new(row, self.row_len(row)))
            .collect()
    }

    pub fn is_addable(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col == self.row_len(cell.row) + 1 && self.row_len(cell.row - 1) > self.row_len(cell.row)
    }

    pub fn is_removable(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= 1
            && cell.col == self.row_len(cell.row)
            && self.row_len(cell.row + 1) < cell.col
    }

    pub fn with_cell(&self, cell: Cell) -> Result<Partition> {
        if !self.is_addable(cell) {
            return Err(Error::InvalidTableau(format!("{cell} is not addable to {self}")));
        }
        Ok(self.add_unchecked(cell))
    }

    pub fn without_cell(&self, cell: Cell) -> Result<Partition> {
        if !self.is_removable(cell) {
            return Err(Error::InvalidTableau(format!("{cell} is not removable from {self}")));
        }
        Ok(self.remove_unchecked(cell))
    }

    pub(crate) fn add_unchecked(&self, cell: Cell) -> Partition {
        let mut parts = self.0.clone();
        if cell.row > parts.len() {
            parts.push(1);
        } else {
            parts[cell.row - 1] += 1;
        }
        Partition(parts)
    }

    pub(crate) fn remove_unchecked(&self, cell: Cell) -> Partition {
        let mut parts = self.0.clone();
        parts[cell.row - 1] -= 1;
        Partition::from_parts_unchecked(parts)
    }

    /// The unique cell of `upper / self` when `upper` covers `self`.
    pub fn added_cell(&self, upper: &Partition) -> Option<Cell> {
        if !upper.covers(self) {
            return None;
        }
        (1..=upper.num_rows())
            .find(|&r| upper.row_len(r) != self.row_len(r))
            .map(|r| Cell::new(r, upper.row_len(r)))
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |c| Cell::new(i + 1, c)))
    }

    pub fn union(&self, other: &Partition) -> Partition {
        let n = self.0.len().max(other.0.len());
        Partition::from_parts_unchecked(
            (1..=n).map(|r| self.row_len(r).max(other.row_len(r))).collect(),
        )
    }

    pub fn intersection(&self, other: &Partition) -> Partition {
        let n = self.0.len().min(other.0.len());
        Partition::from_parts_unchecked(
            (1..=n).map(|r| self.row_len(r).min(other.row_len(r))).collect(),
        )
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition::from_parts_unchecked(
            (1..=cols).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect(),
        )
    }

    /// The complement `p∨` of `self` inside `rect`, rotated to a straight shape.
    pub fn complement(&self, rect: Rectangle) -> Result<Partition> {
        self.check_fits(rect)?;
        Ok(Partition::from_parts_unchecked(
            (1..=rect.ell).map(|i| rect.k - self.row_len(rect.ell + 1 - i)).collect(),
        ))
    }

    /// The skew shape `Λ / p∨`: the cells of `self` rotated by 180 degrees inside `rect`.
    pub fn rotate(&self, rect: Rectangle) -> Result<SkewShape> {
        Ok(SkewShape {
            outer: rect.full(),
            inner: self.complement(rect)?,
        })
    }

    /// `Ok` when `self` fits in `rect`, otherwise [`Error::DoesNotFit`].
    pub fn check_fits(&self, rect: Rectangle) -> Result<()> {
        if self.fits(rect) {
            Ok(())
        } else {
            Err(Error::DoesNotFit {
                shape: self.to_string(),
                rect: rect.to_string(),
            })
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Parses `3,2,1`; `0`, `∅` and the empty string denote the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// A skew shape `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        Ok(Self { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        Self {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.outer.cells().filter(|&c| !self.inner.contains_cell(c))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    outer.contains(inner)
}

pub fn fits(p: &Partition, rect: Rectangle) -> bool {
    p.fits(rect)
}

pub fn complement(p: &Partition, rect: Rectangle) -> Result<Partition> {
    p.complement(rect)
}

pub fn rotate_shape(p: &Partition, rect: Rectangle) -> Result<SkewShape> {
    p.rotate(rect)
}

pub fn covers(upper: &Partition, lower: &Partition) -> bool {
    upper.covers(lower)
}

pub fn addable_boxes(p: &Partition) -> Vec<Cell> {
    p.addable_cells()
}

pub fn removable_boxes(p: &Partition) -> Vec<Cell> {
    p.removable_cells()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn r(ell: usize, k: usize) -> Rectangle {
        Rectangle::new(ell, k).unwrap()
    }

    #[test]
    fn containment() {
        assert!(contains(&p(&[2, 1]), &p(&[4, 2, 1])));
        assert!(!contains(&p(&[3]), &p(&[2, 2])));
        for q in r(3, 4).partitions() {
            assert!(contains(&Partition::empty(), &q));
        }
    }

    #[test]
    fn fitting() {
        assert!(fits(&p(&[3, 2]), r(3, 4)));
        assert!(!fits(&p(&[5]), r(3, 4)));
        assert!(!fits(&p(&[1, 1, 1, 1]), r(3, 4)));
    }

    #[test]
    fn complements() {
        assert_eq!(complement(&p(&[3, 2]), r(3, 4)).unwrap(), p(&[4, 2, 1]));
        assert_eq!(complement(&p(&[2, 1]), r(3, 4)).unwrap(), p(&[4, 3, 2]));
        assert_eq!(complement(&Partition::empty(), r(2, 3)).unwrap(), p(&[3, 3]));
        assert!(complement(&p(&[5]), r(3, 4)).is_err());
    }

    #[test]
    fn complement_is_an_involution_on_3x4() {
        let rect = r(3, 4);
        for q in rect.partitions() {
            let c = q.complement(rect).unwrap();
            assert_eq!(c.size() + q.size(), rect.area());
            assert_eq!(c.complement(rect).unwrap(), q);
        }
    }

    #[test]
    fn rotations() {
        let rect = r(3, 4);
        let s = rotate_shape(&p(&[2, 1]), rect).unwrap();
        assert_eq!((s.outer(), s.inner()), (&p(&[4, 4, 4]), &p(&[4, 3, 2])));
        let s = rotate_shape(&p(&[3, 2]), rect).unwrap();
        assert_eq!(s.inner(), &p(&[4, 2, 1]));
        let s = rotate_shape(&p(&[4, 4, 4]), rect).unwrap();
        assert!(s.is_straight());
        assert_eq!(s.outer(), &rect.full());

        // rotating the cells of p lands exactly on the skew shape
        for q in rect.partitions() {
            let mut rotated: Vec<_> = q.cells().map(|c| rect.rotate_cell(c)).collect();
            rotated.sort();
            let skew: Vec<_> = q.rotate(rect).unwrap().cells().collect();
            assert_eq!(rotated, skew);
        }
    }

    #[test]
    fn corners() {
        assert!(covers(&p(&[2, 1]), &p(&[2])));
        assert_eq!(
            addable_boxes(&p(&[2, 1])),
            vec![Cell::new(1, 3), Cell::new(2, 2), Cell::new(3, 1)]
        );
        assert_eq!(
            removable_boxes(&p(&[4, 2, 1])),
            vec![Cell::new(1, 4), Cell::new(2, 2), Cell::new(3, 1)]
        );
        assert_eq!(addable_boxes(&Partition::empty()), vec![Cell::new(1, 1)]);
        assert!(removable_boxes(&Partition::empty()).is_empty());
    }

    #[test]
    fn covers_matches_size_and_containment() {
        let parts = r(3, 3).partitions();
        for a in &parts {
            for b in &parts {
                assert_eq!(covers(b, a), b.size() == a.size() + 1 && contains(a, b));
            }
            for c in a.addable_cells() {
                let up = a.with_cell(c).unwrap();
                assert!(up.covers(a));
                assert_eq!(a.added_cell(&up), Some(c));
                assert!(up.is_removable(c));
            }
        }
    }

    #[test]
    fn parsing_and_normalisation() {
        assert_eq!("3,2,0".parse::<Partition>().unwrap(), p(&[3, 2]));
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!("3x4".parse::<Rectangle>().unwrap(), r(3, 4));
        assert!("0x4".parse::<Rectangle>().is_err());
        assert_eq!(p(&[3, 2, 0, 0]), p(&[3, 2]));
        assert_eq!(p(&[4, 2, 1]).to_string(), "(4,2,1)");
        assert_eq!(Partition::empty().to_string(), "∅");
    }

    #[test]
    fn partitions_in_rectangle() {
        // binomial(ell + k, ell)
        assert_eq!(r(3, 4).partitions().len(), 35);
        assert_eq!(r(2, 2).partitions().len(), 6);
        assert!(r(3, 4).partitions().iter().all(|q| q.fits(r(3, 4))));
    }
}
