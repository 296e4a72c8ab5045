#![allow(dead_code)]

use std::path::PathBuf;

use carton_core::{Cell, Face, Partition, Rectangle, SkewShape, StandardTableau};

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn rect(ell: usize, k: usize) -> Rectangle {
    Rectangle::new(ell, k).unwrap()
}

pub fn rows(r: &[&[usize]]) -> StandardTableau {
    let v: Vec<Vec<usize>> = r.iter().map(|x| x.to_vec()).collect();
    StandardTableau::from_rows(&v).unwrap()
}

pub fn skew(inner: &[usize], entries: &[((usize, usize), usize)]) -> StandardTableau {
    StandardTableau::from_entries(p(inner), entries.iter().map(|&((r, c), l)| (Cell::new(r, c), l))).unwrap()
}

pub fn superstandard(parts: &[usize]) -> StandardTableau {
    StandardTableau::superstandard(&SkewShape::straight(p(parts)))
}

/// A grid transcribed into `tests/data/<name>.txt`: optional caption line,
/// then rows of `|`-separated partitions, corner annotations after `=`.
pub struct Table {
    pub caption: Option<String>,
    pub rows: Vec<Vec<Partition>>,
    pub text: String,
}

pub fn printed_growth() -> Table {
    table("growth")
}

pub fn printed_face(face: Face) -> Table {
    table(face.name())
}

fn table(name: &str) -> Table {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", &format!("{name}.txt")]
        .iter()
        .collect();
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines().peekable();
    let caption = match lines.peek() {
        Some(l) if !l.contains('|') => Some(lines.next().unwrap().to_string()),
        _ => None,
    };
    let rows = lines
        .map(|l| {
            l.split('|')
                .map(|c| c.trim().split('=').next().unwrap().parse::<Partition>().unwrap())
                .collect()
        })
        .collect();
    Table { caption, rows, text }
}
