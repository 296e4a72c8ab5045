//! Plain-text tables: columns padded to equal width and joined by ` | `.

use carton_core::growth::GrowthGrid;
use carton_core::{Carton, Corner, Face};

/// Lays out rows of cells; trailing padding is stripped from each line.
pub fn grid(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| rows.iter().filter_map(|r| r.get(j)).map(|c| c.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(j, c)| format!("{c}{}", " ".repeat(widths[j] - c.chars().count())))
            .collect();
        out.push_str(line.join(" | ").trim_end());
        out.push('\n');
    }
    out
}

/// One face: caption line, then the labels with every corner but ∅ marked.
pub fn face(ca: &Carton, face: Face) -> String {
    let g = ca.geometry();
    let rows: Vec<Vec<String>> = g
        .face_vertices(face)
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|v| {
                    let label = ca.label(v).to_string();
                    match g.corner_at(v) {
                        Some(c) if c != Corner::Empty => format!("{label}={}", c.symbol()),
                        _ => label,
                    }
                })
                .collect()
        })
        .collect();
    format!("{}\n{}", face.caption(), grid(&rows))
}

/// All six faces separated by blank lines.
pub fn carton(ca: &Carton) -> String {
    Face::ALL.into_iter().map(|f| face(ca, f)).collect::<Vec<_>>().join("\n")
}

/// The diagram with its top row first.
pub fn growth(g: &GrowthGrid) -> String {
    let rows: Vec<Vec<String>> = g
        .rows()
        .iter()
        .rev()
        .map(|r| r.iter().map(|p| p.to_string()).collect())
        .collect();
    grid(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pads_by_characters_not_bytes() {
        let rows = vec![vec!["∅".to_string(), "(1)".into()], vec!["(2,1)=λ".into(), "(3)".into()]];
        assert_eq!(grid(&rows), "∅       | (1)\n(2,1)=λ | (3)\n");
    }

    #[test]
    fn empty_grid() {
        assert_eq!(grid(&[]), "");
    }
}
