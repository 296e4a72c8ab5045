//! Fomin growth diagrams for standard tableaux: the local rules, rectangular
//! and triangular diagrams, infusion, and the layered-tableau operators.
//!
//! A unit square is named
//!
//! ```text
//!   alpha - beta
//!     |       |
//!   gamma - delta
//! ```
//!
//! with `gamma` the smallest and `beta` the largest shape. The rule is
//! symmetric in `alpha` and `delta`.

use std::fmt;

use crate::error::{Error, Result};
use crate::shapes::Partition;
use crate::tableau::{LayeredTableau, ShapeChain, StandardTableau};

fn describe(gamma: &Partition, alpha: &Partition, beta: &Partition) -> String {
    format!("{gamma} ⋖ {alpha} ⋖ {beta}")
}

/// Given `gamma ⋖ alpha ⋖ beta`, the fourth corner `delta` of the square.
///
/// If `alpha` is the only shape between `gamma` and `beta`, `delta = alpha`;
/// otherwise `delta` is the other one.
pub fn local_rule_forward(gamma: &Partition, alpha: &Partition, beta: &Partition) -> Result<Partition> {
    let first = gamma.added_cell(alpha);
    let second = alpha.added_cell(beta);
    match (first, second) {
        (Some(_), Some(b2)) => Ok(if gamma.is_addable(b2) {
            gamma.add_unchecked(b2)
        } else {
            alpha.clone()
        }),
        _ => Err(Error::NotCover {
            lower: gamma.to_string(),
            upper: describe(gamma, alpha, beta),
        }),
    }
}

/// Every `gamma` completing `alpha ⋖ beta ⋗ delta` to a valid square.
pub fn local_rule_inverse_candidates(alpha: &Partition, beta: &Partition, delta: &Partition) -> Vec<Partition> {
    if !beta.covers(alpha) || !beta.covers(delta) {
        return Vec::new();
    }
    if alpha != delta {
        let gamma = alpha.intersection(delta);
        if alpha.covers(&gamma) && delta.covers(&gamma) {
            return vec![gamma];
        }
        return Vec::new();
    }
    alpha
        .removable_cells()
        .into_iter()
        .map(|c| alpha.remove_unchecked(c))
        .filter(|g| local_rule_forward(g, alpha, beta).is_ok_and(|d| &d == delta))
        .collect()
}

/// The `gamma` with `local_rule_forward(gamma, alpha, beta) = delta`.
///
/// When `alpha ≠ delta` this is `alpha ∩ delta`. When `alpha = delta` the
/// two cells of `beta / gamma` must form a domino, and there can be two such
/// `gamma`; that case is reported as [`Error::AmbiguousCompletion`].
pub fn local_rule_inverse(alpha: &Partition, beta: &Partition, delta: &Partition) -> Result<Partition> {
    let mut c = local_rule_inverse_candidates(alpha, beta, delta);
    match c.len() {
        0 => Err(Error::NoCompletion(format!("{alpha}, {delta} ⋖ {beta}"))),
        1 => Ok(c.pop().unwrap()),
        _ => Err(Error::AmbiguousCompletion(format!("{alpha}, {delta} ⋖ {beta}"))),
    }
}

/// Every `beta` completing `gamma ⋖ alpha, delta` to a valid square.
pub fn local_rule_join_candidates(gamma: &Partition, alpha: &Partition, delta: &Partition) -> Vec<Partition> {
    if !alpha.covers(gamma) || !delta.covers(gamma) {
        return Vec::new();
    }
    if alpha != delta {
        return vec![alpha.union(delta)];
    }
    alpha
        .addable_cells()
        .into_iter()
        .map(|c| alpha.add_unchecked(c))
        .filter(|b| local_rule_forward(gamma, alpha, b).is_ok_and(|d| &d == delta))
        .collect()
}

/// A rectangular growth diagram `G[i][j]`, `0 ≤ i ≤ m`, `0 ≤ j ≤ n`.
///
/// `G[0][0]` is the smallest shape. The left column `G[·][0]` and top row
/// `G[m][·]` carry the inputs; the bottom row `G[0][·]` and right column
/// `G[·][n]` are the outputs of infusion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrowthGrid {
    cells: Vec<Vec<Partition>>,
}

impl GrowthGrid {
    /// Wraps an explicit array, checking covers and every unit square.
    pub fn from_rows(cells: Vec<Vec<Partition>>) -> Result<Self> {
        let g = Self { cells };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        let width = self.cells.first().map(Vec::len).unwrap_or(0);
        if width == 0 || self.cells.iter().any(|r| r.len() != width) {
            return Err(Error::ShapeMismatch("growth grid rows must be nonempty and equal length".into()));
        }
        for i in 0..=self.height() {
            for j in 0..=self.width() {
                let here = &self.cells[i][j];
                for next in [self.cells.get(i + 1).map(|r| &r[j]), self.cells[i].get(j + 1)]
                    .into_iter()
                    .flatten()
                {
                    if !next.covers(here) {
                        return Err(Error::NotCover {
                            lower: here.to_string(),
                            upper: next.to_string(),
                        });
                    }
                }
                if i < self.height() && j < self.width() {
                    let delta = local_rule_forward(here, &self.cells[i + 1][j], &self.cells[i + 1][j + 1])?;
                    if delta != self.cells[i][j + 1] {
                        return Err(Error::ShapeMismatch(format!(
                            "square at ({i},{j}) expects {delta}, found {}",
                            self.cells[i][j + 1]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Number of steps along the left column.
    pub fn height(&self) -> usize {
        self.cells.len() - 1
    }

    /// Number of steps along the top row.
    pub fn width(&self) -> usize {
        self.cells[0].len() - 1
    }

    pub fn get(&self, i: usize, j: usize) -> &Partition {
        &self.cells[i][j]
    }

    pub fn rows(&self) -> &[Vec<Partition>] {
        &self.cells
    }

    pub fn left(&self) -> ShapeChain {
        ShapeChain::new_unchecked(self.cells.iter().map(|r| r[0].clone()).collect())
    }

    pub fn top(&self) -> ShapeChain {
        ShapeChain::new_unchecked(self.cells[self.height()].clone())
    }

    pub fn bottom(&self) -> ShapeChain {
        ShapeChain::new_unchecked(self.cells[0].clone())
    }

    pub fn right(&self) -> ShapeChain {
        let n = self.width();
        ShapeChain::new_unchecked(self.cells.iter().map(|r| r[n].clone()).collect())
    }

    pub fn transpose(&self) -> GrowthGrid {
        let (m, n) = (self.height(), self.width());
        GrowthGrid {
            cells: (0..=n).map(|j| (0..=m).map(|i| self.cells[i][j].clone()).collect()).collect(),
        }
    }
}

/// Rows printed top to bottom, so the input chain on top reads first.
impl fmt::Display for GrowthGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.cells.iter().rev() {
            let line: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            writeln!(f, "{}", line.join(" | "))?;
        }
        Ok(())
    }
}

/// Fills the growth diagram whose left column is `left` (bottom to top) and
/// whose top row is `top` (left to right).
pub fn grow_rectangle(left: &ShapeChain, top: &ShapeChain) -> Result<GrowthGrid> {
    if left.end() != top.start() {
        return Err(Error::ShapeMismatch(format!(
            "left chain ends at {} but top chain starts at {}",
            left.end(),
            top.start()
        )));
    }
    let (m, n) = (left.steps(), top.steps());
    let mut cells: Vec<Vec<Partition>> = left.shapes().iter().map(|p| vec![p.clone()]).collect();
    cells[m] = top.shapes().to_vec();
    for i in (0..m).rev() {
        for j in 1..=n {
            let delta = local_rule_forward(&cells[i][j - 1], &cells[i + 1][j - 1], &cells[i + 1][j])?;
            cells[i].push(delta);
        }
    }
    Ok(GrowthGrid { cells })
}

/// `(infusion₁(U, T), infusion₂(U, T))`: the bottom row and right column of
/// the diagram grown from `U` on the left and `T` on top.
pub fn infusion(u: &StandardTableau, t: &StandardTableau) -> Result<(StandardTableau, StandardTableau)> {
    if u.outer() != t.inner() {
        return Err(Error::ShapeMismatch(format!(
            "outer shape {} of the first tableau is not the inner shape {} of the second",
            u.outer(),
            t.inner()
        )));
    }
    let g = grow_rectangle(&u.to_chain(), &t.to_chain())?;
    Ok((g.bottom().to_tableau(), g.right().to_tableau()))
}

/// The staircase of chains `X, Δ(X), Δ²(X), …` used to evacuate `X`.
///
/// `row(i)[j - i]` is the shape after `i` applications of `Δ` restricted to
/// the `j - i` smallest labels, for `i ≤ j ≤ n`; the diagonal `row(i)[0]` is
/// empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularGrowth {
    rows: Vec<Vec<Partition>>,
}

impl TriangularGrowth {
    pub fn rows(&self) -> &[Vec<Partition>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.len() - 1
    }

    /// Shape indexed by `0 ≤ i ≤ j ≤ n`.
    pub fn get(&self, i: usize, j: usize) -> &Partition {
        &self.rows[i][j - i]
    }

    /// The chain `g(n,n) ⊂ g(n-1,n) ⊂ … ⊂ g(0,n)` read along the right side.
    pub fn right_side(&self) -> ShapeChain {
        let n = self.size();
        ShapeChain::new_unchecked((0..=n).rev().map(|i| self.get(i, n).clone()).collect())
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.size();
        for i in 0..=n {
            if !self.get(i, i).is_empty() {
                return Err(Error::ShapeMismatch(format!("diagonal entry ({i},{i}) is not empty")));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let d = local_rule_forward(self.get(i + 1, j), self.get(i, j), self.get(i, j + 1))?;
                if &d != self.get(i + 1, j + 1) {
                    return Err(Error::ShapeMismatch(format!("rhombus at ({i},{j}) breaks the local rule")));
                }
            }
        }
        Ok(())
    }
}

/// Evacuates a straight tableau by growing the triangular diagram from its
/// chain; the right side of the triangle is the chain of `evac(X)`.
pub fn evac_via_triangle(x: &StandardTableau) -> Result<(TriangularGrowth, StandardTableau)> {
    if !x.is_straight() {
        return Err(Error::NotStraight(x.shape().to_string()));
    }
    let n = x.size();
    let mut rows: Vec<Vec<Partition>> = vec![x.to_chain().shapes().to_vec()];
    for i in 0..n {
        let prev = &rows[i];
        let mut row = vec![Partition::empty()];
        for j in i + 1..n {
            // square: g(i+1,j) ⋖ g(i,j), g(i+1,j+1) ⋖ g(i,j+1)
            let next = local_rule_forward(&row[j - i - 1], &prev[j - i], &prev[j - i + 1])?;
            row.push(next);
        }
        rows.push(row);
    }
    let tri = TriangularGrowth { rows };
    debug_assert!(tri.validate().is_ok());
    let evac = tri.right_side().to_tableau();
    Ok((tri, evac))
}

/// `A⋆B⋆C ↦ infusion₁(A,B) ⋆ infusion₂(A,B) ⋆ C`.
#[allow(non_snake_case)]
pub fn I1(l: &LayeredTableau) -> LayeredTableau {
    let [a, b, c] = l.layers();
    let (b1, a1) = infusion(a, b).expect("layers nest");
    LayeredTableau::new(b1, a1, c.clone(), l.rect()).expect("infusion preserves the tiling")
}

/// `A⋆B⋆C ↦ A ⋆ infusion₁(B,C) ⋆ infusion₂(B,C)`.
#[allow(non_snake_case)]
pub fn I2(l: &LayeredTableau) -> LayeredTableau {
    let [a, b, c] = l.layers();
    let (c1, b1) = infusion(b, c).expect("layers nest");
    LayeredTableau::new(a.clone(), c1, b1, l.rect()).expect("infusion preserves the tiling")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jdt;
    use crate::shapes::{Cell, Rectangle};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn chain(parts: &[&[usize]]) -> ShapeChain {
        ShapeChain::new(parts.iter().map(|q| p(q)).collect()).unwrap()
    }

    fn rows(r: &[&[usize]]) -> StandardTableau {
        StandardTableau::from_rows(&r.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn skew(inner: &[usize], entries: &[((usize, usize), usize)]) -> StandardTableau {
        StandardTableau::from_entries(p(inner), entries.iter().map(|&((r, c), l)| (Cell::new(r, c), l))).unwrap()
    }

    #[test]
    fn forward_rule_examples() {
        assert_eq!(local_rule_forward(&p(&[1]), &p(&[2]), &p(&[2, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(local_rule_forward(&p(&[]), &p(&[1]), &p(&[2])).unwrap(), p(&[1]));
        assert_eq!(local_rule_forward(&p(&[2, 1]), &p(&[2, 2]), &p(&[2, 2, 1])).unwrap(), p(&[2, 1, 1]));
        assert!(local_rule_forward(&p(&[]), &p(&[2]), &p(&[2, 1])).is_err());
    }

    #[test]
    fn inverse_rule_examples() {
        assert_eq!(local_rule_inverse(&p(&[2]), &p(&[2, 1]), &p(&[1, 1])).unwrap(), p(&[1]));
        assert_eq!(local_rule_inverse(&p(&[1]), &p(&[2]), &p(&[1])).unwrap(), p(&[]));
        assert_eq!(local_rule_inverse(&p(&[3, 1]), &p(&[3, 2]), &p(&[2, 2])).unwrap(), p(&[2, 1]));
        assert!(matches!(
            local_rule_inverse(&p(&[2, 1]), &p(&[2, 2]), &p(&[2, 1])),
            Err(Error::AmbiguousCompletion(_))
        ));
        assert!(local_rule_inverse(&p(&[2]), &p(&[3, 1]), &p(&[1, 1])).is_err());
    }

    fn table1() -> Vec<Vec<Partition>> {
        // bottom row first
        let t: [[&[usize]; 7]; 5] = [
            [&[], &[1], &[1, 1], &[2, 1], &[2, 1, 1], &[3, 1, 1], &[3, 2, 1]],
            [&[1], &[2], &[2, 1], &[2, 2], &[2, 2, 1], &[3, 2, 1], &[3, 2, 2]],
            [&[2], &[3], &[3, 1], &[3, 2], &[3, 2, 1], &[4, 2, 1], &[4, 2, 2]],
            [&[3], &[4], &[4, 1], &[4, 2], &[4, 2, 1], &[5, 2, 1], &[5, 2, 2]],
            [&[3, 1], &[4, 1], &[4, 2], &[4, 3], &[4, 3, 1], &[5, 3, 1], &[5, 3, 2]],
        ];
        t.iter().map(|r| r.iter().map(|q| p(q)).collect()).collect()
    }

    #[test]
    fn grows_table_1() {
        let u = rows(&[&[1, 2, 3], &[4]]);
        let t = skew(&[3, 1], &[((1, 4), 1), ((2, 2), 2), ((2, 3), 3), ((3, 1), 4), ((1, 5), 5), ((3, 2), 6)]);
        let g = grow_rectangle(&u.to_chain(), &t.to_chain()).unwrap();
        assert_eq!(g.rows(), &table1()[..]);
        assert!(GrowthGrid::from_rows(table1()).is_ok());

        let (i1, i2) = infusion(&u, &t).unwrap();
        assert_eq!(i1, rows(&[&[1, 3, 5], &[2, 6], &[4]]));
        assert_eq!(i2.to_chain(), chain(&[&[3, 2, 1], &[3, 2, 2], &[4, 2, 2], &[5, 2, 2], &[5, 3, 2]]));
        assert_eq!(infusion(&i1, &i2).unwrap(), (u, t));
    }

    #[test]
    fn degenerate_grids() {
        let c = chain(&[&[1], &[2], &[2, 1]]);
        let g = grow_rectangle(&chain(&[&[1]]), &c).unwrap();
        assert_eq!(g.height(), 0);
        assert_eq!(g.bottom(), c);
        let g = grow_rectangle(&c, &chain(&[&[2, 1]])).unwrap();
        assert_eq!(g.width(), 0);
        assert_eq!(g.right(), c);
        assert!(grow_rectangle(&c, &chain(&[&[2]])).is_err());
    }

    #[test]
    fn transposed_boundary_grows_transposed_grid() {
        let u = rows(&[&[1, 2, 3], &[4]]);
        let t = skew(&[3, 1], &[((1, 4), 1), ((2, 2), 2), ((2, 3), 3), ((3, 1), 4), ((1, 5), 5), ((3, 2), 6)]);
        let g = grow_rectangle(&u.to_chain(), &t.to_chain()).unwrap();
        let back = grow_rectangle(&g.bottom(), &g.right()).unwrap();
        assert_eq!(back, g.transpose());
        assert!(back.validate().is_ok());
    }

    #[test]
    fn infusion_rejects_mismatched_shapes() {
        let u = rows(&[&[1, 2]]);
        let t = skew(&[1], &[((1, 2), 1)]);
        assert!(infusion(&u, &t).is_err());
    }

    #[test]
    fn triangle_evacuation() {
        let x = rows(&[&[1, 2, 3, 6], &[4, 7], &[5]]);
        let (tri, e) = evac_via_triangle(&x).unwrap();
        assert!(tri.validate().is_ok());
        assert_eq!(e, rows(&[&[1, 3, 6, 7], &[2, 4], &[5]]));
        // the thick line at height |B'| = 4 carries evac(B')
        let b_prime = rows(&[&[1, 2, 3], &[4]]);
        let thick = ShapeChain::new((0..=4).rev().map(|i| tri.get(i, 4).clone()).collect()).unwrap();
        assert_eq!(thick.to_tableau(), jdt::evacuation(&b_prime).unwrap());

        let (_, e) = evac_via_triangle(&rows(&[&[1]])).unwrap();
        assert_eq!(e, rows(&[&[1]]));
        assert!(evac_via_triangle(&skew(&[1], &[((1, 2), 1)])).is_err());
    }

    #[test]
    fn layered_operators_on_the_braid_example() {
        let rect = Rectangle::new(3, 4).unwrap();
        let a = rows(&[&[1, 2], &[3]]);
        let b = skew(&[2, 1], &[((2, 2), 1), ((1, 3), 2), ((1, 4), 3), ((3, 1), 4)]);
        let c = skew(&[4, 2, 1], &[((3, 2), 1), ((2, 3), 2), ((2, 4), 3), ((3, 3), 4), ((3, 4), 5)]);
        let l = LayeredTableau::new(a, b, c.clone(), rect).unwrap();

        let l1 = I1(&l);
        let [b1, a1, c1] = l1.layers();
        assert_eq!(b1, &rows(&[&[1, 2, 3], &[4]]));
        assert_eq!(a1, &skew(&[3, 1], &[((3, 1), 1), ((1, 4), 2), ((2, 2), 3)]));
        assert_eq!(c1, &c);
        assert_eq!(I1(&l1), l);

        let l2 = I2(&l);
        let [_, c_circ, b_circ] = l2.layers();
        assert_eq!(
            c_circ,
            &skew(&[2, 1], &[((3, 1), 1), ((1, 3), 2), ((1, 4), 3), ((2, 2), 4), ((2, 3), 5)])
        );
        assert_eq!(b_circ, &skew(&[4, 3, 1], &[((3, 2), 1), ((3, 3), 2), ((2, 4), 3), ((3, 4), 4)]));
        assert_eq!(I2(&l2), l);

        let lhs = I1(&I2(&I1(&l)));
        let rhs = I2(&I1(&I2(&l)));
        assert_eq!(lhs, rhs);
        let b_bar = skew(&[3, 2], &[((3, 1), 1), ((3, 2), 2), ((1, 4), 3), ((2, 3), 4)]);
        assert_eq!(&lhs.layers()[1], &b_bar);
    }
}
