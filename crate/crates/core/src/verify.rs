//! Exhaustive sweeps and property suites used by the command-line `verify`
//! and `selftest` drivers and by the acceptance tests.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::carton::{
    canonical_tableaux, enumerate_cartons, enumerate_cartons_generic, permute_carton, validate_carton, Carton,
    Permutation,
};
use crate::error::Result;
use crate::growth::{evac_via_triangle, infusion, local_rule_forward, I1, I2};
use crate::jdt::{evacuation, rectification, rectify_with, reverse_evacuation, revrectification, tilde, tilde_inverse};
use crate::lr_oracle::{lr_triple, lr_via_rectification};
use crate::shapes::{Cell, Partition, Rectangle, SkewShape};
use crate::tableau::{all_syt, LayeredTableau, StandardTableau};

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub cases: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        } else if !ok {
            self.failures.push(String::new());
        }
    }

    fn fail(&mut self, what: String) {
        self.cases += 1;
        self.failures.push(what);
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} cases", self.name, self.cases)?;
        if !self.passed() {
            write!(f, ", {} failures", self.failures.len())?;
        }
        f.write_str(")")?;
        for line in self.failures.iter().filter(|l| !l.is_empty()).take(5) {
            write!(f, "\n    {line}")?;
        }
        Ok(())
    }
}

/// Every triple of partitions fitting in `rect`.
pub fn fitting_triples(rect: Rectangle) -> Vec<[Partition; 3]> {
    let parts = rect.partitions();
    let mut out = Vec::with_capacity(parts.len().pow(3));
    for l in &parts {
        for m in &parts {
            for n in &parts {
                out.push([l.clone(), m.clone(), n.clone()]);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SweepOptions {
    /// Compare against the constraint-search enumerator.
    pub generic: bool,
    /// Check invariance and the carton bijection under all six permutations.
    pub symmetry: bool,
    pub parallel: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleResult {
    pub triple: [Partition; 3],
    pub cartons: u64,
    pub ballot: u64,
    pub rectification: u64,
    pub generic_agrees: Option<bool>,
    pub symmetric: Option<bool>,
    pub problems: Vec<String>,
}

impl TripleResult {
    pub fn passed(&self) -> bool {
        self.problems.is_empty()
    }
}

fn cartons_for(rect: Rectangle, triple: &[Partition; 3]) -> Result<Vec<Carton>> {
    let ts = canonical_tableaux(&triple[0], &triple[1], &triple[2]);
    enumerate_cartons(rect, &ts[0], &ts[1], &ts[2])?.collect()
}

/// Carton count, both oracles, and optionally the generic enumerator and the
/// six permuted instances for one triple.
pub fn check_triple(rect: Rectangle, triple: &[Partition; 3], opts: SweepOptions) -> TripleResult {
    let [l, m, n] = triple;
    let mut problems = Vec::new();
    let cartons = cartons_for(rect, triple).unwrap_or_else(|e| {
        problems.push(format!("enumeration failed: {e}"));
        Vec::new()
    });
    for ca in &cartons {
        let report = validate_carton(ca);
        if !report.is_valid() {
            problems.push(format!("invalid carton: {report}"));
        }
    }
    let ballot = lr_triple(rect, l, m, n).unwrap_or(u64::MAX);
    let rectification = lr_via_rectification(rect, l, m, n).unwrap_or(u64::MAX);
    let count = cartons.len() as u64;
    if count != ballot || count != rectification {
        problems.push(format!("cartons {count}, ballot {ballot}, rectification {rectification}"));
    }

    let generic_agrees = opts.generic.then(|| {
        let ts = canonical_tableaux(l, m, n);
        let mut ours = cartons.clone();
        ours.sort();
        let ok = enumerate_cartons_generic(rect, &ts[0], &ts[1], &ts[2]).is_ok_and(|g| g == ours);
        if !ok {
            problems.push("generic enumerator disagrees".into());
        }
        ok
    });

    let symmetric = opts.symmetry.then(|| {
        let mut ok = true;
        let originals: BTreeSet<&Carton> = cartons.iter().collect();
        for sigma in Permutation::all() {
            let permuted = sigma.apply(triple);
            let Ok(theirs) = cartons_for(rect, &permuted) else {
                problems.push(format!("{sigma}: enumeration failed"));
                ok = false;
                continue;
            };
            if lr_triple(rect, &permuted[0], &permuted[1], &permuted[2]).ok() != Some(ballot) {
                problems.push(format!("{sigma}: coefficient not symmetric"));
                ok = false;
            }
            let theirs: BTreeSet<Carton> = theirs.into_iter().collect();
            let mut images = BTreeSet::new();
            for ca in &cartons {
                match permute_carton(ca, sigma) {
                    Ok(img) => {
                        let back = permute_carton(&img, sigma.inverse());
                        if back.as_ref().ok() != Some(ca) || !validate_carton(&img).is_valid() {
                            ok = false;
                        }
                        images.insert(img);
                    }
                    Err(e) => {
                        problems.push(format!("{sigma}: {e}"));
                        ok = false;
                    }
                }
            }
            if images != theirs || images.len() != originals.len() {
                problems.push(format!("{sigma}: permuted cartons are not the permuted instance's cartons"));
                ok = false;
            }
        }
        ok
    });

    TripleResult {
        triple: triple.clone(),
        cartons: count,
        ballot,
        rectification,
        generic_agrees,
        symmetric,
        problems,
    }
}

/// [`check_triple`] over every triple fitting in `rect`, in a fixed order.
pub fn sweep(rect: Rectangle, opts: SweepOptions) -> Vec<TripleResult> {
    let triples = fitting_triples(rect);
    if opts.parallel {
        triples.par_iter().map(|t| check_triple(rect, t, opts)).collect()
    } else {
        triples.iter().map(|t| check_triple(rect, t, opts)).collect()
    }
}

pub fn summarize_sweep(name: impl Into<String>, results: &[TripleResult]) -> SuiteReport {
    let mut report = SuiteReport::new(name);
    for r in results {
        let [l, m, n] = &r.triple;
        report.check(r.passed(), || format!("({l}, {m}, {n}): {}", r.problems.join("; ")));
    }
    report
}

/// Partitions with at most `max_cells` cells.
pub fn partitions_up_to(max_cells: usize) -> Vec<Partition> {
    if max_cells == 0 {
        return vec![Partition::empty()];
    }
    Rectangle::new(max_cells, max_cells)
        .expect("nonzero")
        .partitions()
        .into_iter()
        .filter(|p| p.size() <= max_cells)
        .collect()
}

fn sub_partitions(p: &Partition) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    for (i, &len) in p.parts().iter().enumerate() {
        let mut next = Vec::new();
        for q in &out {
            let cap = if i == 0 { len } else { len.min(q.parts().get(i - 1).copied().unwrap_or(0)) };
            for v in 0..=cap {
                let mut parts = q.parts().to_vec();
                parts.push(v);
                next.push(Partition::new(parts).expect("weakly decreasing"));
            }
        }
        out = next;
    }
    out.sort();
    out.dedup();
    out
}

fn straight_syt(p: &Partition) -> Vec<StandardTableau> {
    all_syt(&SkewShape::straight(p.clone())).collect()
}

/// `infusion` is an involution: infusing the result again returns the input.
pub fn infusion_involution(max_cells: usize) -> SuiteReport {
    let mut report = SuiteReport::new(format!("infusion involution (≤ {max_cells} cells)"));
    for beta in partitions_up_to(max_cells) {
        for alpha in sub_partitions(&beta) {
            let outer_shape = SkewShape::new(beta.clone(), alpha.clone()).expect("contained");
            let skews: Vec<_> = all_syt(&outer_shape).collect();
            for u in straight_syt(&alpha) {
                for t in &skews {
                    let ok = match infusion(&u, t) {
                        Ok((t1, u1)) => t1.is_straight()
                            && u1.outer() == &beta
                            && rectification(t) == t1
                            && infusion(&t1, &u1).ok() == Some((u.clone(), t.clone())),
                        Err(_) => false,
                    };
                    report.check(ok, || format!("U = {u}, T = {t}"));
                }
            }
        }
    }
    report
}

/// `evac ∘ evac = id` on straight tableaux, agreement of the two evacuation
/// algorithms, and `reverse_evacuation ∘ reverse_evacuation = id` on the
/// same tableaux rotated into their bounding rectangle.
pub fn evacuation_involution(max_cells: usize) -> SuiteReport {
    let mut report = SuiteReport::new(format!("evacuation involution (≤ {max_cells} cells)"));
    for shape in partitions_up_to(max_cells) {
        let bbox = Rectangle::new(shape.num_rows().max(1), shape.row_len(1).max(1)).expect("nonzero");
        for t in straight_syt(&shape) {
            let e = evacuation(&t).expect("straight");
            let tri = evac_via_triangle(&t).map(|(_, x)| x).ok();
            let twice = evacuation(&e).ok();
            report.check(twice.as_ref() == Some(&t) && tri.as_ref() == Some(&e), || format!("evac on {t}"));

            let anchored = tilde(&t, bbox).expect("fits");
            let rev = reverse_evacuation(&anchored, bbox).and_then(|r| reverse_evacuation(&r, bbox));
            report.check(rev.as_ref().ok() == Some(&anchored), || format!("reverse evac on {anchored}"));
        }
    }
    report
}

/// `revrectification(T_β) = tilde(T_β)` for every straight tableau in `rect`.
pub fn lemma(rect: Rectangle) -> SuiteReport {
    let mut report = SuiteReport::new(format!("revrectification = tilde on {rect}"));
    for beta in rect.partitions() {
        for t in straight_syt(&beta) {
            let ok = match (revrectification(&t, rect), tilde(&t, rect)) {
                (Ok(a), Ok(b)) => a == b && tilde_inverse(&b, rect).ok() == Some(t.clone()),
                _ => false,
            };
            report.check(ok, || format!("T = {t}"));
        }
    }
    report
}

fn braid_case(l: &LayeredTableau) -> std::result::Result<(), String> {
    let left = I1(&I2(&I1(l)));
    let right = I2(&I1(&I2(l)));
    if left != right {
        return Err(format!("I1I2I1 = {left}, I2I1I2 = {right}"));
    }
    let [a, _, c] = l.layers();
    let [c_new, _, a_new] = left.layers();
    let rect = l.rect();
    if tilde_inverse(c, rect).ok().as_ref() != Some(c_new) || tilde(a, rect).ok().as_ref() != Some(a_new) {
        return Err(format!("outer layers of {left} are not the rotated outer layers of {l}"));
    }
    Ok(())
}

/// Every layered tableau of `rect`.
pub fn layered_tableaux(rect: Rectangle) -> Vec<LayeredTableau> {
    let parts = rect.partitions();
    let full = rect.full();
    let mut out = Vec::new();
    for gamma in &parts {
        let cs: Vec<_> = all_syt(&SkewShape::new(full.clone(), gamma.clone()).expect("fits")).collect();
        for alpha in parts.iter().filter(|a| gamma.contains(a)) {
            let bs: Vec<_> = all_syt(&SkewShape::new(gamma.clone(), alpha.clone()).expect("contained")).collect();
            for a in straight_syt(alpha) {
                for b in &bs {
                    for c in &cs {
                        out.push(LayeredTableau::new(a.clone(), b.clone(), c.clone(), rect).expect("tiles"));
                    }
                }
            }
        }
    }
    out
}

/// `I1∘I2∘I1 = I2∘I1∘I2` on every layered tableau of `rect`, with the outer
/// layers of the result equal to the rotated outer layers of the input.
pub fn braid_exhaustive(rect: Rectangle, parallel: bool) -> SuiteReport {
    let mut report = SuiteReport::new(format!("braid identity, every layered tableau of {rect}"));
    let all = layered_tableaux(rect);
    let outcomes: Vec<_> = if parallel {
        all.par_iter().map(braid_case).collect()
    } else {
        all.iter().map(braid_case).collect()
    };
    for o in outcomes {
        match o {
            Ok(()) => report.cases += 1,
            Err(e) => report.fail(e),
        }
    }
    report
}

/// A standard tableau of `shape` built by adding uniformly chosen addable
/// cells; not uniform over tableaux, but every tableau has positive weight.
fn random_syt(shape: &SkewShape, rng: &mut impl Rng) -> StandardTableau {
    let mut current = shape.inner().clone();
    let mut entries = Vec::with_capacity(shape.size());
    for label in 1..=shape.size() {
        let options: Vec<Cell> = current
            .addable_cells()
            .into_iter()
            .filter(|&c| shape.outer().contains_cell(c))
            .collect();
        let cell = options[rng.gen_range(0..options.len())];
        current = current.with_cell(cell).expect("addable");
        entries.push((cell, label));
    }
    StandardTableau::from_entries(shape.inner().clone(), entries).expect("built by adding cells")
}

pub fn random_layered(rect: Rectangle, rng: &mut impl Rng) -> LayeredTableau {
    let parts = rect.partitions();
    let gamma = parts[rng.gen_range(0..parts.len())].clone();
    let inside: Vec<&Partition> = parts.iter().filter(|a| gamma.contains(a)).collect();
    let alpha = inside[rng.gen_range(0..inside.len())].clone();
    let a = random_syt(&SkewShape::straight(alpha.clone()), rng);
    let b = random_syt(&SkewShape::new(gamma.clone(), alpha).expect("contained"), rng);
    let c = random_syt(&SkewShape::new(rect.full(), gamma).expect("fits"), rng);
    LayeredTableau::new(a, b, c, rect).expect("tiles")
}

/// The braid identity on `cases` seeded random layered tableaux of `rect`.
pub fn braid_random(rect: Rectangle, cases: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new(format!("braid identity, {cases} random layered tableaux of {rect}, seed {seed}"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cases {
        let l = random_layered(rect, &mut rng);
        match braid_case(&l) {
            Ok(()) => report.cases += 1,
            Err(e) => report.fail(e),
        }
    }
    report
}

/// `forward(γ, α, β) = δ ⟺ forward(γ, δ, β) = α` over every chain
/// `γ ⋖ α ⋖ β` in `rect`.
pub fn local_rule_symmetry(rect: Rectangle) -> SuiteReport {
    let mut report = SuiteReport::new(format!("local rule symmetry in {rect}"));
    let full = rect.full();
    for gamma in rect.partitions() {
        for ca in gamma.addable_cells() {
            let alpha = gamma.add_unchecked(ca);
            if !full.contains(&alpha) {
                continue;
            }
            for cb in alpha.addable_cells() {
                let beta = alpha.add_unchecked(cb);
                if !full.contains(&beta) {
                    continue;
                }
                let ok = match local_rule_forward(&gamma, &alpha, &beta) {
                    Ok(delta) => {
                        delta.covers(&gamma)
                            && beta.covers(&delta)
                            && local_rule_forward(&gamma, &delta, &beta).ok() == Some(alpha.clone())
                    }
                    Err(_) => false,
                };
                report.check(ok, || format!("γ = {gamma}, α = {alpha}, β = {beta}"));
            }
        }
    }
    report
}

/// The carton count is the same for every choice of edge tableaux.
pub fn choice_independence(rect: Rectangle) -> SuiteReport {
    let mut report = SuiteReport::new(format!("choice independence in {rect}"));
    for [l, m, n] in fitting_triples(rect) {
        if l.size() + m.size() + n.size() != rect.area() {
            continue;
        }
        let (ls, ms, ns) = (straight_syt(&l), straight_syt(&m), straight_syt(&n));
        let mut seen = BTreeSet::new();
        for tl in &ls {
            for tm in &ms {
                for tn in &ns {
                    let c = enumerate_cartons(rect, tl, tm, tn).map(|it| it.filter(|c| c.is_ok()).count());
                    seen.insert(c.ok());
                }
            }
        }
        report.check(seen.len() == 1 && !seen.contains(&None), || format!("({l}, {m}, {n}): counts {seen:?}"));
    }
    report
}

/// Rectification does not depend on the order of inner-corner slides: every
/// skew tableau of at most `max_cells` cells in `rect`, every order.
pub fn rectification_independence(rect: Rectangle, max_cells: usize) -> SuiteReport {
    let mut report = SuiteReport::new(format!("rectification order independence in {rect} (≤ {max_cells} cells)"));
    let parts = rect.partitions();
    for outer in &parts {
        for inner in parts.iter().filter(|i| outer.contains(i) && outer.size() - i.size() <= max_cells) {
            let orders = straight_syt(inner);
            for t in all_syt(&SkewShape::new(outer.clone(), inner.clone()).expect("contained")) {
                let want = rectification(&t);
                for o in &orders {
                    report.check(rectify_with(&t, o).ok().as_ref() == Some(&want), || format!("T = {t}, order {o}"));
                }
            }
        }
    }
    report
}

#[derive(Clone, Copy, Debug)]
pub struct SelftestOptions {
    pub seed: u64,
    pub max_size: usize,
    pub parallel: bool,
}

impl Default for SelftestOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            max_size: 7,
            parallel: false,
        }
    }
}

/// Sweeps and property suites for one rectangle, as run by `verify`.
pub fn verify_rect(rect: Rectangle, opts: SelftestOptions) -> Vec<SuiteReport> {
    let small = rect.area() <= 6;
    let sweep_opts = SweepOptions {
        generic: small,
        symmetry: true,
        parallel: opts.parallel,
    };
    let results = sweep(rect, sweep_opts);
    let mut out = vec![summarize_sweep(
        format!(
            "cartons = ballot = rectification{}, S3 on every triple in {rect}",
            if small { " = generic search" } else { "" }
        ),
        &results,
    )];
    out.push(infusion_involution(opts.max_size));
    out.push(evacuation_involution(opts.max_size));
    out.push(lemma(rect));
    out.push(local_rule_symmetry(rect));
    out.push(choice_independence(rect));
    if rect.area() <= 9 {
        out.push(braid_exhaustive(rect, opts.parallel));
    } else {
        out.push(braid_random(rect, 1000, opts.seed));
    }
    out
}

/// The full battery: sweeps over 2×2, 2×3, 3×3 and 2×4 and every property
/// suite at its specified range.
pub fn selftest(opts: SelftestOptions) -> Vec<SuiteReport> {
    let r = |l, k| Rectangle::new(l, k).expect("nonzero");
    let mut out = Vec::new();
    for (rect, generic, symmetry) in [(r(2, 2), true, true), (r(2, 3), true, true), (r(3, 3), false, true), (r(2, 4), false, false)] {
        let results = sweep(
            rect,
            SweepOptions {
                generic,
                symmetry,
                parallel: opts.parallel,
            },
        );
        let mut name = format!("cartons = ballot = rectification on every triple in {rect}");
        if generic {
            name.push_str(", generic search agrees");
        }
        if symmetry {
            name.push_str(", S3 bijections");
        }
        out.push(summarize_sweep(name, &results));
    }
    out.push(infusion_involution(opts.max_size));
    out.push(evacuation_involution(opts.max_size));
    for rect in [r(2, 3), r(3, 3), r(3, 4)] {
        out.push(lemma(rect));
    }
    out.push(braid_exhaustive(r(3, 3), opts.parallel));
    out.push(braid_random(r(3, 4), 1000, opts.seed));
    out.push(local_rule_symmetry(r(3, 4)));
    out.push(choice_independence(r(2, 3)));
    out.push(choice_independence(r(3, 3)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sub_partitions_of_21() {
        let subs: Vec<String> = sub_partitions(&Partition::new(vec![2, 1]).unwrap())
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(subs, ["∅", "(1)", "(1,1)", "(2)", "(2,1)"]);
    }

    #[test]
    fn partitions_up_to_counts() {
        // 1 + 1 + 2 + 3 + 5
        assert_eq!(partitions_up_to(4).len(), 12);
        assert_eq!(partitions_up_to(0).len(), 1);
    }

    #[test]
    fn small_suites_pass() {
        let r = Rectangle::new(2, 2).unwrap();
        for s in verify_rect(r, SelftestOptions { max_size: 4, ..Default::default() }) {
            assert!(s.passed(), "{s}");
            assert!(s.cases > 0, "{s}");
        }
    }

    #[test]
    fn random_layered_is_seeded() {
        let r = Rectangle::new(3, 4).unwrap();
        let a = random_layered(r, &mut ChaCha8Rng::seed_from_u64(7));
        let b = random_layered(r, &mut ChaCha8Rng::seed_from_u64(7));
        assert_eq!(a, b);
    }
}
