//! Shared workloads for the benchmarks.

use carton_core::lr_oracle::lr_triple;
use carton_core::{Partition, Rectangle};

/// Triples with `|λ|+|μ|+|ν| = ℓk` and a nonzero coefficient.
pub fn nonzero_triples(rect: Rectangle) -> Vec<[Partition; 3]> {
    let parts = rect.partitions();
    let mut out = Vec::new();
    for l in &parts {
        for m in &parts {
            for n in &parts {
                if l.size() + m.size() + n.size() == rect.area() && lr_triple(rect, l, m, n).unwrap_or(0) > 0 {
                    out.push([l.clone(), m.clone(), n.clone()]);
                }
            }
        }
    }
    out
}

/// The triple in `rect` with the largest coefficient, ties broken by order.
pub fn heaviest_triple(rect: Rectangle) -> [Partition; 3] {
    nonzero_triples(rect)
        .into_iter()
        .max_by_key(|[l, m, n]| lr_triple(rect, l, m, n).unwrap_or(0))
        .expect("some triple is nonzero")
}
