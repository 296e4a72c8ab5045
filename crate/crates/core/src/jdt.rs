//! Jeu de taquin: forward and reverse slides, (reverse) rectification,
//! evacuation, the rotated-evacuation construction `tilde`, and a bounded
//! dual-equivalence test.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition, Rectangle, SkewShape};
use crate::tableau::StandardTableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Reverse,
}

/// One slide together with where it started and which cell it vacated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlideRecord {
    pub direction: Direction,
    pub start: Cell,
    pub vacated: Cell,
    pub result: StandardTableau,
}

fn positions(t: &StandardTableau) -> HashMap<Cell, usize> {
    t.entries().collect()
}

/// Slides into the inner corner `x`, moving the smaller of the labels right
/// of / below the hole until the hole reaches the outer boundary. When no
/// label touches `x` the cell simply leaves both shapes.
pub(crate) fn forward_slide(t: &StandardTableau, x: Cell) -> (StandardTableau, Cell) {
    debug_assert!(t.inner().is_removable(x));
    let mut pos = positions(t);
    let mut cells = t.cells().to_vec();
    let mut hole = x;
    loop {
        let right = pos.get(&hole.right()).copied();
        let below = pos.get(&hole.below()).copied();
        let next = match (right, below) {
            (Some(r), Some(b)) if r < b => hole.right(),
            (Some(_), Some(_)) => hole.below(),
            (Some(_), None) => hole.right(),
            (None, Some(_)) => hole.below(),
            (None, None) => break,
        };
        let label = pos.remove(&next).expect("neighbour is filled");
        pos.insert(hole, label);
        cells[label - 1] = hole;
        hole = next;
    }
    let inner = t.inner().remove_unchecked(x);
    let outer = t.outer().remove_unchecked(hole);
    let shape = SkewShape::new(outer, inner).expect("slides preserve containment");
    (StandardTableau::from_cells_unchecked(shape, cells), hole)
}

/// Mirror image of [`forward_slide`]: `x` is an outer addable cell and the
/// larger of the labels left of / above the hole moves in.
pub(crate) fn reverse_slide(t: &StandardTableau, x: Cell) -> (StandardTableau, Cell) {
    debug_assert!(t.outer().is_addable(x));
    let mut pos = positions(t);
    let mut cells = t.cells().to_vec();
    let mut hole = x;
    loop {
        let left = hole.left().and_then(|c| pos.get(&c).map(|&l| (c, l)));
        let above = hole.above().and_then(|c| pos.get(&c).map(|&l| (c, l)));
        let next = match (left, above) {
            (Some((lc, l)), Some((ac, a))) => {
                if l > a {
                    lc
                } else {
                    ac
                }
            }
            (Some((lc, _)), None) => lc,
            (None, Some((ac, _))) => ac,
            (None, None) => break,
        };
        let label = pos.remove(&next).expect("neighbour is filled");
        pos.insert(hole, label);
        cells[label - 1] = hole;
        hole = next;
    }
    let outer = t.outer().add_unchecked(x);
    let inner = t.inner().add_unchecked(hole);
    let shape = SkewShape::new(outer, inner).expect("slides preserve containment");
    (StandardTableau::from_cells_unchecked(shape, cells), hole)
}

fn touches_forward(t: &StandardTableau, x: Cell) -> bool {
    let filled = |c: Cell| t.shape().contains_cell(c);
    filled(x.right()) || filled(x.below())
}

fn touches_reverse(t: &StandardTableau, x: Cell) -> bool {
    let filled = |c: Option<Cell>| c.is_some_and(|c| t.shape().contains_cell(c));
    filled(x.left()) || filled(x.above())
}

pub fn jdt_slide_record(t: &StandardTableau, x: Cell) -> Result<SlideRecord> {
    if !t.inner().is_removable(x) {
        return Err(Error::InvalidSlide(format!(
            "{x} is not a removable corner of the inner shape {}",
            t.inner()
        )));
    }
    if !touches_forward(t, x) {
        return Err(Error::InvalidSlide(format!("no label lies right of or below {x}")));
    }
    let (result, vacated) = forward_slide(t, x);
    Ok(SlideRecord {
        direction: Direction::Forward,
        start: x,
        vacated,
        result,
    })
}

/// The jeu de taquin slide of `t` into the inner corner `x`.
pub fn jdt_slide(t: &StandardTableau, x: Cell) -> Result<StandardTableau> {
    jdt_slide_record(t, x).map(|r| r.result)
}

pub fn rev_jdt_slide_record(t: &StandardTableau, x: Cell, rect: Rectangle) -> Result<SlideRecord> {
    if !rect.contains_cell(x) || !t.outer().is_addable(x) {
        return Err(Error::InvalidSlide(format!(
            "{x} is not an addable cell of {} inside {rect}",
            t.outer()
        )));
    }
    if !touches_reverse(t, x) {
        return Err(Error::InvalidSlide(format!("no label lies left of or above {x}")));
    }
    let (result, vacated) = reverse_slide(t, x);
    Ok(SlideRecord {
        direction: Direction::Reverse,
        start: x,
        vacated,
        result,
    })
}

/// The reverse jeu de taquin slide of `t` into the outer cell `x`.
pub fn rev_jdt_slide(t: &StandardTableau, x: Cell, rect: Rectangle) -> Result<StandardTableau> {
    rev_jdt_slide_record(t, x, rect).map(|r| r.result)
}

/// Rectifies `t` by sliding into the cells of `order` (a standard tableau of
/// the inner shape) from the largest label down.
pub fn rectify_with(t: &StandardTableau, order: &StandardTableau) -> Result<StandardTableau> {
    if !order.is_straight() || order.outer() != t.inner() {
        return Err(Error::ShapeMismatch(format!(
            "slide order {} does not fill the inner shape {}",
            order.shape(),
            t.inner()
        )));
    }
    let mut cur = t.clone();
    for &x in order.cells().iter().rev() {
        cur = forward_slide(&cur, x).0;
    }
    Ok(cur)
}

/// Slides `t` into a straight shape. The inner cells are vacated in the
/// reverse order of the row superstandard tableau of the inner shape.
pub fn rectification(t: &StandardTableau) -> StandardTableau {
    if t.is_straight() {
        return t.clone();
    }
    let order = StandardTableau::superstandard(&SkewShape::straight(t.inner().clone()));
    rectify_with(t, &order).expect("order fills the inner shape")
}

/// Reverse-rectifies `t` inside `rect` by sliding into the cells of `order`
/// (a standard tableau of `rect / outer(t)`) from the smallest label up.
pub fn revrectify_with(t: &StandardTableau, order: &StandardTableau, rect: Rectangle) -> Result<StandardTableau> {
    if order.inner() != t.outer() || order.outer() != &rect.full() {
        return Err(Error::ShapeMismatch(format!(
            "slide order {} does not fill {rect} outside {}",
            order.shape(),
            t.outer()
        )));
    }
    let mut cur = t.clone();
    for &x in order.cells() {
        cur = reverse_slide(&cur, x).0;
    }
    Ok(cur)
}

/// Slides `t` outward until its outer shape is the whole rectangle.
pub fn revrectification(t: &StandardTableau, rect: Rectangle) -> Result<StandardTableau> {
    t.outer().check_fits(rect)?;
    let order = StandardTableau::superstandard(&SkewShape::new(rect.full(), t.outer().clone())?);
    revrectify_with(t, &order, rect)
}

fn require_straight(t: &StandardTableau) -> Result<()> {
    if t.is_straight() {
        Ok(())
    } else {
        Err(Error::NotStraight(t.shape().to_string()))
    }
}

/// Schützenberger's `Δ`: erase the 1 in the corner, decrement, slide into the corner.
pub fn delta(t: &StandardTableau) -> Result<StandardTableau> {
    require_straight(t)?;
    if t.is_empty() {
        return Err(Error::InvalidTableau("Δ needs a nonempty tableau".into()));
    }
    let corner = Cell::new(1, 1);
    let rest = StandardTableau::from_cells_unchecked(
        SkewShape::new(t.outer().clone(), Partition::new(vec![1]).unwrap())?,
        t.cells()[1..].to_vec(),
    );
    Ok(forward_slide(&rest, corner).0)
}

/// Evacuation: the chain `shape(Δⁿ T) ⊂ … ⊂ shape(Δ T) ⊂ shape(T)`.
pub fn evacuation(t: &StandardTableau) -> Result<StandardTableau> {
    require_straight(t)?;
    let n = t.size();
    let mut shapes = Vec::with_capacity(n + 1);
    shapes.push(t.outer().clone());
    let mut cur = t.clone();
    while !cur.is_empty() {
        cur = delta(&cur)?;
        shapes.push(cur.outer().clone());
    }
    shapes.reverse();
    let cells = shapes
        .windows(2)
        .map(|w| w[0].added_cell(&w[1]).expect("Δ removes one cell"))
        .collect();
    Ok(StandardTableau::from_cells_unchecked(t.shape().clone(), cells))
}

/// Rotates `t` by 180 degrees inside `rect` and replaces label `i` by `n + 1 - i`.
fn rotate_complement(t: &StandardTableau, rect: Rectangle) -> Result<StandardTableau> {
    t.outer().check_fits(rect)?;
    let n = t.size();
    // inner/outer swap roles under rotation
    let outer = t.inner().complement(rect)?;
    let inner = t.outer().complement(rect)?;
    let mut cells = vec![Cell::new(0, 0); n];
    for (c, l) in t.entries() {
        cells[n - l] = rect.rotate_cell(c);
    }
    StandardTableau::from_cells(SkewShape::new(outer, inner)?, cells)
}

/// `T̃`: evacuate, complement the labels, rotate by 180 degrees and place at
/// the bottom-right corner of `rect`.
pub fn tilde(t: &StandardTableau, rect: Rectangle) -> Result<StandardTableau> {
    require_straight(t)?;
    t.outer().check_fits(rect)?;
    rotate_complement(&evacuation(t)?, rect)
}

/// Inverse of [`tilde`]: takes a tableau anchored at the bottom-right corner
/// of `rect` back to the straight tableau it came from.
pub fn tilde_inverse(t: &StandardTableau, rect: Rectangle) -> Result<StandardTableau> {
    if t.outer() != &rect.full() {
        return Err(Error::ShapeMismatch(format!("{} is not anchored at {rect}", t.shape())));
    }
    evacuation(&rotate_complement(t, rect)?)
}

/// Evacuation's mirror image for tableaux whose outer shape is the whole
/// rectangle: repeatedly erase the largest label from the bottom-right corner
/// and reverse-slide into it; the inner shapes grow along the output chain.
pub fn reverse_evacuation(t: &StandardTableau, rect: Rectangle) -> Result<StandardTableau> {
    if t.outer() != &rect.full() {
        return Err(Error::ShapeMismatch(format!("{} is not anchored at {rect}", t.shape())));
    }
    let corner = Cell::new(rect.ell(), rect.k());
    let mut inners = vec![t.inner().clone()];
    let mut cur = t.clone();
    while !cur.is_empty() {
        let n = cur.size();
        debug_assert_eq!(cur.cell_of(n), Some(corner));
        let shape = SkewShape::new(cur.outer().remove_unchecked(corner), cur.inner().clone())?;
        let rest = StandardTableau::from_cells_unchecked(shape, cur.cells()[..n - 1].to_vec());
        cur = reverse_slide(&rest, corner).0;
        inners.push(cur.inner().clone());
    }
    let cells = inners
        .windows(2)
        .map(|w| w[0].added_cell(&w[1]).expect("each step adds one inner cell"))
        .collect();
    Ok(StandardTableau::from_cells_unchecked(t.shape().clone(), cells))
}

/// Bounded dual-equivalence test: every sequence of forward slides down to a
/// straight shape, and every sequence of reverse slides out to `rect`, must
/// produce equal shapes at every step for both tableaux.
pub fn dual_equiv_check(t: &StandardTableau, u: &StandardTableau, rect: Rectangle) -> Result<bool> {
    if t.shape() != u.shape() {
        return Err(Error::ShapeMismatch(format!("{} vs {}", t.shape(), u.shape())));
    }
    t.outer().check_fits(rect)?;
    let mut seen = HashSet::new();
    if !explore_forward(t, u, &mut seen) {
        return Ok(false);
    }
    let mut seen = HashSet::new();
    Ok(explore_reverse(t, u, rect, &mut seen))
}

fn explore_forward(
    t: &StandardTableau,
    u: &StandardTableau,
    seen: &mut HashSet<(StandardTableau, StandardTableau)>,
) -> bool {
    for x in t.inner().removable_cells() {
        let (t2, _) = forward_slide(t, x);
        let (u2, _) = forward_slide(u, x);
        if t2.shape() != u2.shape() {
            return false;
        }
        if seen.insert((t2.clone(), u2.clone())) && !explore_forward(&t2, &u2, seen) {
            return false;
        }
    }
    true
}

fn explore_reverse(
    t: &StandardTableau,
    u: &StandardTableau,
    rect: Rectangle,
    seen: &mut HashSet<(StandardTableau, StandardTableau)>,
) -> bool {
    for x in t.outer().addable_cells() {
        if !rect.contains_cell(x) {
            continue;
        }
        let (t2, _) = reverse_slide(t, x);
        let (u2, _) = reverse_slide(u, x);
        if t2.shape() != u2.shape() {
            return false;
        }
        if seen.insert((t2.clone(), u2.clone())) && !explore_reverse(&t2, &u2, rect, seen) {
            return false;
        }
    }
    true
}
