//! Deliberately naive reference implementations, used only by tests,
//! verification runs and the CLI's `oracle-diff` command.
//!
//! These trade speed for independence from the main code paths: the Bruhat
//! order is decided by subword search over an explicit reduced word, the
//! sortable sets come from filtering a full Cayley-graph enumeration (with
//! descents read off BFS lengths rather than root signs), meets come from
//! exhaustive lower-bound scans, and the γ-sorting greedy is checked
//! against a genuine lexicographically-first subword search.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::coxeter::{column_root_sign, CayleyGraph, CoxeterGroup, GroupElement, Matrix, RootSign};
use crate::lattice::BruhatLattice;
use crate::poset::Poset;
use crate::sortable::{AlphaSet, GammaContext};

/// Every u with u ≤_B v, computed by dynamic programming over the
/// subsequences of one fixed reduced word of v: scanning the word from the
/// right, an element u extends to slot t either unchanged or — when a_t is
/// a left descent of u, so the letter counts toward a reduced subword — as
/// a_t·u.
pub fn bruhat_lower_interval(
    group: &Arc<CoxeterGroup>,
    v: &GroupElement,
) -> HashSet<GroupElement> {
    assert!(v.length() <= 32, "oracle interval limited to desk-scale lengths");
    bruhat_interval_of_word(group, v.word())
}

fn bruhat_interval_of_word(group: &Arc<CoxeterGroup>, word: &[usize]) -> HashSet<GroupElement> {
    let mut reachable: HashSet<GroupElement> = HashSet::new();
    reachable.insert(group.identity());
    for &letter in word.iter().rev() {
        let mut next = reachable.clone();
        for w in &reachable {
            if !group.is_left_descent(w, letter) {
                // ℓ(s·w) = ℓ(w) + 1, so prefixing the letter keeps the
                // subword reduced.
                next.insert(group.left_mul(letter, w));
            }
        }
        reachable = next;
    }
    reachable
}

/// u ≤_B v via the subword property on one fixed reduced word of v.
pub fn naive_bruhat_leq(group: &Arc<CoxeterGroup>, u: &GroupElement, v: &GroupElement) -> bool {
    if u.length() > v.length() {
        return false;
    }
    bruhat_lower_interval(group, v).contains(u)
}

/// All reduced words of an element, by recursion over left descents. Used
/// to sanity-check that the subword test does not depend on the chosen
/// reduced word.
pub fn all_reduced_words(group: &Arc<CoxeterGroup>, w: &GroupElement) -> Vec<Vec<usize>> {
    if w.is_identity() {
        return vec![vec![]];
    }
    let mut out = vec![];
    for i in 0..group.rank() {
        if group.is_left_descent(w, i) {
            let rest = group.left_mul(i, w);
            for mut word in all_reduced_words(group, &rest) {
                word.insert(0, i);
                out.push(word);
            }
        }
    }
    out
}

/// The α-sets of all γ-sortable elements, by filtering the full group.
///
/// The greedy sorting scan here runs on Cayley tables: descents come from
/// BFS lengths, not from root signs, so this route shares no arithmetic
/// with the enumerator it cross-checks.
pub fn naive_sortables(cayley: &CayleyGraph, gamma_word: &[usize]) -> Vec<AlphaSet> {
    assert!(cayley.is_complete(), "oracle sortable filter needs the full group");
    let n = gamma_word.len();
    assert_eq!(n, cayley.rank());
    let mut out = vec![];
    for e in 0..cayley.element_count() as u32 {
        if let Some(alpha) = table_sorting_alpha(cayley, gamma_word, e) {
            out.push(alpha);
        }
    }
    out
}

/// The sorting word positions of element `e` via table descents; `None`
/// when the blocks are not nested.
pub fn table_sorting_alpha(
    cayley: &CayleyGraph,
    gamma_word: &[usize],
    e: u32,
) -> Option<AlphaSet> {
    let n = gamma_word.len();
    let mut positions: Vec<u32> = vec![];
    let mut current = e;
    let mut remaining = cayley.length(e);
    let mut slot = 0usize;
    while remaining > 0 {
        assert!(slot < cayley.length(e) as usize * n, "sorting scan ran away");
        let letter = gamma_word[slot % n];
        if cayley.is_left_descent(current, letter) {
            positions.push(slot as u32 + 1);
            current = cayley.left_mul(current, letter).expect("descent move exists");
            remaining -= 1;
        }
        slot += 1;
    }
    // Nestedness over slot masks per block.
    let mut blocks: Vec<u64> = vec![];
    for &p in &positions {
        let block = (p - 1) as usize / n;
        let slot_in_block = (p - 1) as usize % n;
        while blocks.len() <= block {
            blocks.push(0);
        }
        blocks[block] |= 1 << slot_in_block;
    }
    blocks
        .windows(2)
        .all(|w| w[1] & !w[0] == 0)
        .then(|| AlphaSet::from_positions(&positions))
}

/// The meet as the unique maximal common lower bound, by exhaustive scan.
/// Panics if the maximal lower bound is not unique, which would falsify
/// lattice-ness.
pub fn naive_meet(lattice: &BruhatLattice, u: u32, v: u32) -> u32 {
    let lower: Vec<u32> = (0..lattice.len() as u32)
        .filter(|&z| lattice.leq(z, u) && lattice.leq(z, v))
        .collect();
    let maxima: Vec<u32> = lower
        .iter()
        .copied()
        .filter(|&z| lower.iter().all(|&w| w == z || !lattice.leq(z, w)))
        .collect();
    assert_eq!(
        maxima.len(),
        1,
        "common lower bounds of {} and {} have {} maxima",
        lattice.word_string(u),
        lattice.word_string(v),
        maxima.len()
    );
    maxima[0]
}

/// The lexicographically first reduced subword of γ^∞ for `w`, found by
/// earliest-feasible extraction with full feasibility lookahead — the
/// definitional object the greedy sorting scan claims to compute.
pub fn lex_first_sorting_positions(ctx: &GammaContext, w: &GroupElement) -> Vec<u32> {
    let n = ctx.rank();
    let total_slots = w.length() * n;
    let group = ctx.group().clone();

    // States are remainders, keyed by inverse-action matrix.
    #[derive(Clone)]
    struct Remainder {
        inv: Matrix,
        len: usize,
    }
    let mut memo: HashMap<(usize, Matrix), bool> = HashMap::new();

    fn feasible(
        ctx: &GammaContext,
        group: &Arc<CoxeterGroup>,
        memo: &mut HashMap<(usize, Matrix), bool>,
        slot: usize,
        total_slots: usize,
        u: &Remainder,
    ) -> bool {
        if u.len == 0 {
            return true;
        }
        if slot >= total_slots {
            return false;
        }
        if let Some(&cached) = memo.get(&(slot, u.inv.clone())) {
            return cached;
        }
        let letter = ctx.gamma_word()[slot % ctx.rank()];
        let mut result = feasible(ctx, group, memo, slot + 1, total_slots, u);
        if !result && column_root_sign(&u.inv, letter) == RootSign::Negative {
            let mut stripped = u.clone();
            group.reflect_cols(&mut stripped.inv, letter);
            stripped.len -= 1;
            result = feasible(ctx, group, memo, slot + 1, total_slots, &stripped);
        }
        memo.insert((slot, u.inv.clone()), result);
        result
    }

    let mut u = Remainder {
        inv: w.inv_action().clone(),
        len: w.length(),
    };
    let mut positions = vec![];
    let mut slot = 0usize;
    while u.len > 0 {
        assert!(slot < total_slots, "lex-first search ran out of slots");
        let letter = ctx.gamma_word()[slot % n];
        if column_root_sign(&u.inv, letter) == RootSign::Negative {
            let mut stripped = u.clone();
            group.reflect_cols(&mut stripped.inv, letter);
            stripped.len -= 1;
            if feasible(ctx, &group, &mut memo, slot + 1, total_slots, &stripped) {
                positions.push(slot as u32 + 1);
                u = stripped;
            }
        }
        slot += 1;
    }
    positions
}

/// Crystallographic root poset type.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootPosetKind {
    A,
    B,
}

/// The positive-root poset of A_n or B_n: roots as nonnegative integer
/// vectors in the simple basis, ordered by coordinatewise difference.
pub fn root_poset(kind: RootPosetKind, n: usize) -> Poset {
    let roots = root_coordinates(kind, n);
    Poset::from_leq(roots.len(), |a, b| {
        roots[a].iter().zip(&roots[b]).all(|(x, y)| x <= y)
    })
}

fn root_coordinates(kind: RootPosetKind, n: usize) -> Vec<Vec<u32>> {
    let mut roots: Vec<Vec<u32>> = vec![];
    match kind {
        RootPosetKind::A => {
            assert!(n >= 1);
            // e_i − e_j for i < j: consecutive sums α_i + ⋯ + α_{j−1}.
            for i in 0..n {
                for j in i..n {
                    let mut v = vec![0; n];
                    for c in v.iter_mut().take(j + 1).skip(i) {
                        *c = 1;
                    }
                    roots.push(v);
                }
            }
            assert_eq!(roots.len(), n * (n + 1) / 2);
        }
        RootPosetKind::B => {
            assert!(n >= 2);
            // With α_n the short root (the 4-labeled end of the diagram):
            // e_i − e_j = α_i + ⋯ + α_{j−1},
            // e_i       = α_i + ⋯ + α_n,
            // e_i + e_j = α_i + ⋯ + α_{j−1} + 2(α_j + ⋯ + α_n).
            for i in 0..n {
                for j in (i + 1)..n {
                    let mut v = vec![0; n];
                    for c in v.iter_mut().take(j).skip(i) {
                        *c = 1;
                    }
                    roots.push(v);
                }
            }
            for i in 0..n {
                let mut v = vec![0; n];
                for c in v.iter_mut().skip(i) {
                    *c = 1;
                }
                roots.push(v);
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    let mut v = vec![0; n];
                    for c in v.iter_mut().take(j).skip(i) {
                        *c = 1;
                    }
                    for c in v.iter_mut().skip(j) {
                        *c += 2;
                    }
                    roots.push(v);
                }
            }
            assert_eq!(roots.len(), n * n);
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterDiagram;

    fn group(spec: &str) -> Arc<CoxeterGroup> {
        CoxeterGroup::new(CoxeterDiagram::parse(spec).unwrap())
    }

    #[test]
    fn bruhat_examples() {
        let a2 = group("A2");
        let eps = a2.identity();
        let s1 = a2.simple_reflection(0);
        let s2s1 = a2.reduce_word(&[1, 0]);
        assert!(naive_bruhat_leq(&a2, &eps, &s2s1));
        assert!(naive_bruhat_leq(&a2, &s1, &s2s1));

        let a3 = group("A3");
        let s1s3 = a3.reduce_word(&[0, 2]);
        let s2s3s2 = a3.reduce_word(&[1, 2, 1]);
        assert!(!naive_bruhat_leq(&a3, &s1s3, &s2s3s2));
    }

    #[test]
    fn bruhat_independent_of_reduced_word_on_a3() {
        let a3 = group("A3");
        let cayley = CayleyGraph::generate(&a3, None, 10_000);
        let elements: Vec<GroupElement> = (0..cayley.element_count() as u32)
            .map(|e| cayley.element(&a3, e))
            .collect();
        for v in &elements {
            if v.length() > 4 {
                continue;
            }
            let words = all_reduced_words(&a3, v);
            let intervals: Vec<HashSet<GroupElement>> = words
                .iter()
                .map(|word| bruhat_interval_of_word(&a3, word))
                .collect();
            for window in intervals.windows(2) {
                assert_eq!(window[0], window[1], "interval depends on the word of {v:?}");
            }
        }
    }

    #[test]
    fn reduced_word_counts() {
        let a3 = group("A3");
        let w0 = a3.reduce_word(&[0, 1, 0, 2, 1, 0]);
        assert_eq!(w0.length(), 6);
        // The longest element of A3 has 16 reduced words.
        assert_eq!(all_reduced_words(&a3, &w0).len(), 16);
    }

    #[test]
    fn naive_sortable_counts() {
        for (spec, gamma, count) in [
            ("A3", vec![0usize, 1, 2], 14usize),
            ("B2", vec![0, 1], 6),
            ("H3", vec![0, 1, 2], 32),
            ("I2(5)", vec![0, 1], 7),
        ] {
            let g = group(spec);
            let cayley = CayleyGraph::generate(&g, None, 100_000);
            let sortables = naive_sortables(&cayley, &gamma);
            assert_eq!(sortables.len(), count, "{spec}");
        }
    }

    #[test]
    fn naive_meet_matches_lattice_meet_on_a3() {
        let g = group("A3");
        let ctx = GammaContext::new(g, vec![0, 1, 2]);
        let lattice = BruhatLattice::build(ctx, None).unwrap();
        for u in 0..lattice.len() as u32 {
            for v in 0..lattice.len() as u32 {
                assert_eq!(naive_meet(&lattice, u, v), lattice.meet(u, v));
            }
        }
        assert_eq!(naive_meet(&lattice, 5, 5), 5, "u ∧ u = u");
    }

    #[test]
    fn lex_first_agrees_with_greedy_on_b2() {
        let g = group("B2");
        let ctx = GammaContext::new(g.clone(), vec![0, 1]);
        let cayley = CayleyGraph::generate(&g, None, 100);
        for e in 0..cayley.element_count() as u32 {
            let w = cayley.element(&g, e);
            let greedy = ctx.gamma_sorting_word(&w);
            let lex = lex_first_sorting_positions(&ctx, &w);
            assert_eq!(greedy.positions(), lex.as_slice(), "element {w:?}");
        }
    }

    #[test]
    fn root_posets() {
        // A2: two simple roots below the highest root.
        let a2 = root_poset(RootPosetKind::A, 2);
        assert_eq!(a2.size(), 3);
        assert_eq!(a2.minimal_elements().len(), 2);
        assert_eq!(a2.covers().len(), 2);

        // A3: 6 roots, 14 order ideals.
        let a3 = root_poset(RootPosetKind::A, 3);
        assert_eq!(a3.size(), 6);
        assert_eq!(a3.order_ideals().len(), 14);

        // B2: 4 roots, 6 order ideals (not a chain).
        let b2 = root_poset(RootPosetKind::B, 2);
        assert_eq!(b2.size(), 4);
        assert_eq!(b2.order_ideals().len(), 6);
        assert_eq!(b2.minimal_elements().len(), 2);

        // Ideal counts of A_n root posets are Catalan numbers.
        for (n, catalan) in [(1usize, 2usize), (2, 5), (3, 14), (4, 42)] {
            assert_eq!(
                root_poset(RootPosetKind::A, n).order_ideals().len(),
                catalan
            );
        }
    }
}
