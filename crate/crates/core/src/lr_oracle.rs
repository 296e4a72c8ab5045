//! Littlewood-Richardson coefficients by counting ballot tableaux. Shares no
//! code with the sliding machinery, so it serves as an independent check.

use crate::error::Result;
use crate::jdt::rectification;
use crate::shapes::{Partition, Rectangle, SkewShape};
use crate::tableau::{all_syt, StandardTableau};

/// `c^{outer}_{λ,μ}`: semistandard tableaux of shape `outer/λ` with content
/// `μ` whose reverse reading word is a lattice word.
pub fn lr_ballot_count(lambda: &Partition, mu: &Partition, outer: &Partition) -> u64 {
    if !outer.contains(lambda) || outer.size() != lambda.size() + mu.size() {
        return 0;
    }
    // reverse reading order: top row first, right to left
    let mut cells = Vec::new();
    for (r, &len) in outer.parts().iter().enumerate() {
        let start = lambda.parts().get(r).copied().unwrap_or(0);
        for c in (start..len).rev() {
            cells.push((r, c));
        }
    }
    let rows = outer.num_rows();
    let width = outer.parts().first().copied().unwrap_or(0);
    let mut grid = vec![vec![0usize; width]; rows];
    let mut used = vec![0usize; mu.num_rows() + 1];
    fill(&cells, 0, lambda, mu.parts(), &mut grid, &mut used)
}

fn fill(
    cells: &[(usize, usize)],
    at: usize,
    lambda: &Partition,
    mu: &[usize],
    grid: &mut [Vec<usize>],
    used: &mut [usize],
) -> u64 {
    let Some(&(r, c)) = cells.get(at) else {
        return 1;
    };
    let inner = |row: usize| lambda.parts().get(row).copied().unwrap_or(0);
    // weakly increasing rows: bounded by the right neighbour, already placed
    let hi = if c + 1 < grid[r].len() && grid[r][c + 1] != 0 { grid[r][c + 1] } else { mu.len() };
    // strictly increasing columns
    let lo = if r > 0 && c >= inner(r - 1) { grid[r - 1][c] + 1 } else { 1 };
    let mut total = 0;
    for v in lo..=hi.min(mu.len()) {
        if used[v] == mu[v - 1] || (v > 1 && used[v] + 1 > used[v - 1]) {
            continue;
        }
        used[v] += 1;
        grid[r][c] = v;
        total += fill(cells, at + 1, lambda, mu, grid, used);
        grid[r][c] = 0;
        used[v] -= 1;
    }
    total
}

/// `c^{ν∨}_{λ,μ}` as the number of standard tableaux of shape `ν∨/λ` that
/// rectify to the row superstandard tableau of shape `μ`.
pub fn lr_via_rectification(rect: Rectangle, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let nu_vee = nu.complement(rect)?;
    lambda.check_fits(rect)?;
    mu.check_fits(rect)?;
    let Ok(shape) = SkewShape::new(nu_vee, lambda.clone()) else {
        return Ok(0);
    };
    if shape.size() != mu.size() {
        return Ok(0);
    }
    let target = StandardTableau::superstandard(&SkewShape::straight(mu.clone()));
    Ok(all_syt(&shape).filter(|t| rectification(t) == target).count() as u64)
}

/// `c^{ν∨}_{λ,μ}` via ballot tableaux.
pub fn lr_triple(rect: Rectangle, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let nu_vee = nu.complement(rect)?;
    lambda.check_fits(rect)?;
    mu.check_fits(rect)?;
    Ok(lr_ballot_count(lambda, mu, &nu_vee))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_coefficients() {
        assert_eq!(lr_ballot_count(&p(&[2, 1]), &p(&[3, 1]), &p(&[4, 2, 1])), 2);
        assert_eq!(lr_ballot_count(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_ballot_count(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_ballot_count(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_ballot_count(&p(&[2]), &p(&[2]), &p(&[2, 2])), 1);
        assert_eq!(lr_ballot_count(&p(&[2]), &p(&[1, 1]), &p(&[2, 2])), 0);
        assert_eq!(lr_ballot_count(&p(&[]), &p(&[2, 1]), &p(&[2, 1])), 1);
        assert_eq!(lr_ballot_count(&p(&[]), &p(&[2, 1]), &p(&[3])), 0);
    }

    #[test]
    fn pieri_rule() {
        // multiplying by a single row adds a horizontal strip
        let lam = p(&[2, 1]);
        for outer in [p(&[4, 1]), p(&[3, 2]), p(&[3, 1, 1]), p(&[2, 2, 1])] {
            assert_eq!(lr_ballot_count(&lam, &p(&[2]), &outer), 1, "{outer}");
        }
        assert_eq!(lr_ballot_count(&lam, &p(&[2]), &p(&[2, 1, 1, 1])), 0);
    }

    #[test]
    fn rectification_agrees() {
        let r = Rectangle::new(3, 4).unwrap();
        assert_eq!(lr_via_rectification(r, &p(&[2, 1]), &p(&[3, 1]), &p(&[3, 2])).unwrap(), 2);
        assert_eq!(lr_triple(r, &p(&[2, 1]), &p(&[3, 1]), &p(&[3, 2])).unwrap(), 2);
        let r = Rectangle::new(3, 3).unwrap();
        assert_eq!(lr_via_rectification(r, &p(&[2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap(), 2);
    }
}
