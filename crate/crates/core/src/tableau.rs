//! Standard Young tableaux of straight and skew shape, shape chains, and
//! layered tableaux.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition, Rectangle, SkewShape};

/// A standard filling of a skew shape.
///
/// Only filled cells are stored: `cells[i]` is the cell carrying label `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    shape: SkewShape,
    cells: Vec<Cell>,
}

impl StandardTableau {
    /// Builds a tableau from the cell of each label in order (label 1 first).
    pub fn from_cells(shape: SkewShape, cells: Vec<Cell>) -> Result<Self> {
        let t = Self { shape, cells };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_cells_unchecked(shape: SkewShape, cells: Vec<Cell>) -> Self {
        let t = Self { shape, cells };
        debug_assert!(t.validate().is_ok(), "{:?}", t.validate());
        t
    }

    /// Builds a tableau from `(cell, label)` pairs over the given inner shape.
    pub fn from_entries(inner: Partition, entries: impl IntoIterator<Item = (Cell, usize)>) -> Result<Self> {
        let mut entries: Vec<(Cell, usize)> = entries.into_iter().collect();
        entries.sort_by_key(|&(_, l)| l);
        for (i, &(_, l)) in entries.iter().enumerate() {
            if l != i + 1 {
                return Err(Error::InvalidTableau(format!("labels must be 1..={}", entries.len())));
            }
        }
        let mut outer = inner.clone();
        let mut rows: Vec<usize> = outer.parts().to_vec();
        for &(cell, _) in &entries {
            if rows.len() < cell.row {
                rows.resize(cell.row, 0);
            }
            rows[cell.row - 1] = rows[cell.row - 1].max(cell.col);
        }
        outer = Partition::new(rows).map_err(|e| Error::InvalidTableau(e.to_string()))?;
        let shape = SkewShape::new(outer, inner)?;
        Self::from_cells(shape, entries.into_iter().map(|(c, _)| c).collect())
    }

    /// Builds a straight-shape tableau from its rows of labels.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let entries = rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(move |(c, &l)| (Cell::new(r + 1, c + 1), l))
        });
        let t = Self::from_entries(Partition::empty(), entries)?;
        if t.outer().parts() != rows.iter().map(Vec::len).filter(|&l| l > 0).collect::<Vec<_>>() {
            return Err(Error::InvalidTableau("rows do not form a partition".into()));
        }
        Ok(t)
    }

    /// The empty tableau on `p / p`.
    pub fn empty(p: Partition) -> Self {
        Self {
            shape: SkewShape::new(p.clone(), p).expect("p contains p"),
            cells: Vec::new(),
        }
    }

    /// The row superstandard tableau: rows filled left to right, top to bottom.
    /// It is the first tableau of the shape in [`all_syt`] order.
    pub fn superstandard(shape: &SkewShape) -> Self {
        Self::from_cells_unchecked(shape.clone(), shape.cells().collect())
    }

    fn validate(&self) -> Result<()> {
        if self.cells.len() != self.shape.size() {
            return Err(Error::InvalidTableau(format!(
                "{} labels for a shape with {} cells",
                self.cells.len(),
                self.shape.size()
            )));
        }
        let mut seen = HashMap::with_capacity(self.cells.len());
        for (i, &c) in self.cells.iter().enumerate() {
            if !self.shape.contains_cell(c) {
                return Err(Error::InvalidTableau(format!("{c} lies outside {}", self.shape)));
            }
            if seen.insert(c, i + 1).is_some() {
                return Err(Error::InvalidTableau(format!("{c} is labelled twice")));
            }
        }
        for (&c, &l) in &seen {
            for next in [c.right(), c.below()] {
                if let Some(&m) = seen.get(&next) {
                    if m <= l {
                        return Err(Error::InvalidTableau(format!(
                            "label {m} at {next} does not exceed {l} at {c}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn outer(&self) -> &Partition {
        self.shape.outer()
    }

    pub fn inner(&self) -> &Partition {
        self.shape.inner()
    }

    /// Number of labelled cells.
    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn is_straight(&self) -> bool {
        self.shape.is_straight()
    }

    /// Cell of each label, label 1 first.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell_of(&self, label: usize) -> Option<Cell> {
        label.checked_sub(1).and_then(|i| self.cells.get(i)).copied()
    }

    pub fn label_at(&self, cell: Cell) -> Option<usize> {
        self.cells.iter().position(|&c| c == cell).map(|i| i + 1)
    }

    /// `(cell, label)` pairs in label order.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.cells.iter().enumerate().map(|(i, &c)| (c, i + 1))
    }

    pub fn to_chain(&self) -> ShapeChain {
        tableau_to_chain(self)
    }

    /// Rows of labels, with `None` for inner cells; useful for display and tests.
    pub fn rows(&self) -> Vec<Vec<Option<usize>>> {
        let outer = self.outer();
        let mut rows: Vec<Vec<Option<usize>>> =
            (1..=outer.num_rows()).map(|r| vec![None; outer.row_len(r)]).collect();
        for (c, l) in self.entries() {
            rows[c.row - 1][c.col - 1] = Some(l);
        }
        rows
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        if rows.is_empty() {
            return f.write_str("∅");
        }
        for (i, row) in rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                match e {
                    Some(l) => write!(f, "{l}")?,
                    None => f.write_str(".")?,
                }
            }
        }
        Ok(())
    }
}

/// A saturated chain in Young's lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShapeChain(Vec<Partition>);

impl ShapeChain {
    pub fn new(chain: Vec<Partition>) -> Result<Self> {
        if chain.is_empty() {
            return Err(Error::InvalidTableau("a chain needs at least one shape".into()));
        }
        for w in chain.windows(2) {
            if !w[1].covers(&w[0]) {
                return Err(Error::NotCover {
                    lower: w[0].to_string(),
                    upper: w[1].to_string(),
                });
            }
        }
        Ok(Self(chain))
    }

    pub(crate) fn new_unchecked(chain: Vec<Partition>) -> Self {
        debug_assert!(chain.windows(2).all(|w| w[1].covers(&w[0])));
        Self(chain)
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.0
    }

    pub fn start(&self) -> &Partition {
        &self.0[0]
    }

    pub fn end(&self) -> &Partition {
        self.0.last().expect("chains are nonempty")
    }

    /// Number of cover steps.
    pub fn steps(&self) -> usize {
        self.0.len() - 1
    }

    pub fn to_tableau(&self) -> StandardTableau {
        let shape = SkewShape::new(self.end().clone(), self.start().clone()).expect("chain is monotone");
        let cells = self
            .0
            .windows(2)
            .map(|w| w[0].added_cell(&w[1]).expect("chain steps are covers"))
            .collect();
        StandardTableau::from_cells_unchecked(shape, cells)
    }
}

impl fmt::Display for ShapeChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("−")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

pub fn tableau_to_chain(t: &StandardTableau) -> ShapeChain {
    let mut chain = Vec::with_capacity(t.size() + 1);
    let mut cur = t.inner().clone();
    chain.push(cur.clone());
    for &c in t.cells() {
        cur = cur.add_unchecked(c);
        chain.push(cur.clone());
    }
    ShapeChain::new_unchecked(chain)
}

pub fn chain_to_tableau(c: &ShapeChain) -> StandardTableau {
    c.to_tableau()
}

/// Streams every standard tableau of `shape` exactly once, ordered
/// lexicographically by the sequence of cells added (so row superstandard first).
pub fn all_syt(shape: &SkewShape) -> SytIter {
    SytIter::new(shape.clone())
}

pub struct SytIter {
    shape: SkewShape,
    current: Partition,
    path: Vec<Cell>,
    // candidate cells still to try at each depth
    stack: Vec<Vec<Cell>>,
    done: bool,
}

impl SytIter {
    fn new(shape: SkewShape) -> Self {
        let current = shape.inner().clone();
        let mut it = Self {
            shape,
            current,
            path: Vec::new(),
            stack: Vec::new(),
            done: false,
        };
        let first = it.candidates();
        it.stack.push(first);
        it
    }

    fn candidates(&self) -> Vec<Cell> {
        // reversed so that pop() yields the topmost cell first
        let mut c: Vec<Cell> = self
            .current
            .addable_cells()
            .into_iter()
            .filter(|&c| self.shape.outer().contains_cell(c))
            .collect();
        c.reverse();
        c
    }
}

impl Iterator for SytIter {
    type Item = StandardTableau;

    fn next(&mut self) -> Option<StandardTableau> {
        if self.done {
            return None;
        }
        let n = self.shape.size();
        loop {
            if self.path.len() == n {
                let t = StandardTableau::from_cells_unchecked(self.shape.clone(), self.path.clone());
                // backtrack one level so the next call resumes the search
                if let Some(c) = self.path.pop() {
                    self.current = self.current.remove_unchecked(c);
                    self.stack.pop();
                } else {
                    self.done = true;
                }
                return Some(t);
            }
            let top = self.stack.last_mut()?;
            match top.pop() {
                Some(c) => {
                    self.current = self.current.add_unchecked(c);
                    self.path.push(c);
                    let next = self.candidates();
                    self.stack.push(next);
                }
                None => {
                    self.stack.pop();
                    match self.path.pop() {
                        Some(c) => self.current = self.current.remove_unchecked(c),
                        None => {
                            self.done = true;
                            return None;
                        }
                    }
                }
            }
        }
    }
}

/// A layered tableau `A ⋆ B ⋆ C` tiling a rectangle: `A` straight of shape
/// `α`, `B` of shape `γ/α`, `C` of shape `Λ/γ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LayeredTableau {
    rect: Rectangle,
    layers: [StandardTableau; 3],
}

impl LayeredTableau {
    pub fn new(a: StandardTableau, b: StandardTableau, c: StandardTableau, rect: Rectangle) -> Result<Self> {
        if !a.is_straight() {
            return Err(Error::InvalidLayered(format!("first layer has skew shape {}", a.shape())));
        }
        if b.inner() != a.outer() {
            return Err(Error::InvalidLayered(format!(
                "second layer {} does not start at {}",
                b.shape(),
                a.outer()
            )));
        }
        if c.inner() != b.outer() {
            return Err(Error::InvalidLayered(format!(
                "third layer {} does not start at {}",
                c.shape(),
                b.outer()
            )));
        }
        if c.outer() != &rect.full() {
            return Err(Error::InvalidLayered(format!("third layer {} does not fill {rect}", c.shape())));
        }
        Ok(Self { rect, layers: [a, b, c] })
    }

    pub fn rect(&self) -> Rectangle {
        self.rect
    }

    pub fn layers(&self) -> &[StandardTableau; 3] {
        &self.layers
    }

    pub fn into_layers(self) -> [StandardTableau; 3] {
        self.layers
    }

    /// Layer index (0, 1, 2) and label of every cell of the rectangle.
    pub fn layer_at(&self, cell: Cell) -> Option<(usize, usize)> {
        self.layers
            .iter()
            .enumerate()
            .find_map(|(i, t)| t.label_at(cell).map(|l| (i, l)))
    }
}

pub fn concat_layered(
    a: StandardTableau,
    b: StandardTableau,
    c: StandardTableau,
    rect: Rectangle,
) -> Result<LayeredTableau> {
    LayeredTableau::new(a, b, c, rect)
}

/// Renders as rows of `label`, `label*` and `label_` for the three layers.
impl fmt::Display for LayeredTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.rect.ell() {
            if r > 1 {
                f.write_str("/")?;
            }
            for c in 1..=self.rect.k() {
                if c > 1 {
                    f.write_str(",")?;
                }
                match self.layer_at(Cell::new(r, c)) {
                    Some((0, l)) => write!(f, "{l}")?,
                    Some((1, l)) => write!(f, "{l}*")?,
                    Some((_, l)) => write!(f, "{l}_")?,
                    None => f.write_str("?")?,
                }
            }
        }
        Ok(())
    }
}
