//! Cross-module invariants: the fast paths against their independent
//! reference routes, and structural laws that hold on every constructed
//! lattice.

use std::collections::BTreeSet;
use std::sync::Arc;

use blattice::coxeter::{Bond, CayleyGraph, CoxeterDiagram, CoxeterGroup};
use blattice::lattice::BruhatLattice;
use blattice::oracle;
use blattice::orient::{enumerate_coxeter_elements, find_forbidden, OrientedDiagram, PatternId};
use blattice::sortable::{AlphaSet, GammaContext};

fn group(spec: &str) -> Arc<CoxeterGroup> {
    CoxeterGroup::new(CoxeterDiagram::parse(spec).unwrap())
}

fn linear_gamma(n: usize) -> Vec<usize> {
    (0..n).collect()
}

fn lattice(spec: &str, gamma: &[usize], cap: Option<usize>) -> BruhatLattice {
    BruhatLattice::build(GammaContext::new(group(spec), gamma.to_vec()), cap).unwrap()
}

#[test]
fn greedy_sorting_word_is_lex_first_subword() {
    // The one-pass greedy must agree with a genuine lexicographically-first
    // reduced-subword search over every element of these groups.
    for spec in ["A3", "B2", "B3", "H3"] {
        let g = group(spec);
        let ctx = GammaContext::new(g.clone(), linear_gamma(g.rank()));
        let cayley = CayleyGraph::generate(&g, None, 10_000);
        for e in 0..cayley.element_count() as u32 {
            let w = cayley.element(&g, e);
            let greedy = ctx.gamma_sorting_word(&w);
            let lex = oracle::lex_first_sorting_positions(&ctx, &w);
            assert_eq!(greedy.positions(), lex.as_slice(), "{spec}: element {w:?}");
        }
    }
}

#[test]
fn enumeration_matches_full_group_filter() {
    // Nested-block DFS enumeration against the filter of the full Cayley
    // graph, for every Coxeter element.
    for spec in [
        "A1", "A2", "A3", "B2", "B3", "H3", "D4", "I2(5)", "I2(6)", "I2(7)", "I2(8)",
    ] {
        let diagram = CoxeterDiagram::parse(spec).unwrap();
        let g = CoxeterGroup::new(diagram.clone());
        let cayley = CayleyGraph::generate(&g, None, 100_000);
        for (_, gamma) in enumerate_coxeter_elements(&diagram) {
            let ctx = GammaContext::new(g.clone(), gamma.clone());
            let enumerated: BTreeSet<AlphaSet> = ctx
                .enumerate_sortables(None)
                .unwrap()
                .into_iter()
                .map(|s| s.alpha())
                .collect();
            let filtered: BTreeSet<AlphaSet> =
                oracle::naive_sortables(&cayley, &gamma).into_iter().collect();
            assert_eq!(enumerated, filtered, "{spec} γ = {gamma:?}");
        }
    }
}

#[test]
fn parabolic_restrictions_are_order_ideals() {
    // The α-sets of a restricted context, re-embedded into the parent's
    // slots, must form a downward-closed subset of the parent lattice.
    for spec in ["A3", "B3"] {
        let diagram = CoxeterDiagram::parse(spec).unwrap();
        let g = CoxeterGroup::new(diagram.clone());
        for (_, gamma) in enumerate_coxeter_elements(&diagram) {
            let ctx = GammaContext::new(g.clone(), gamma.clone());
            let parent = BruhatLattice::build(ctx.clone(), None).unwrap();
            let n = g.rank();
            for mask in 1u32..(1 << n) {
                let j: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
                let restriction = ctx.parabolic_restriction(&j).unwrap();
                let embedded: BTreeSet<AlphaSet> = restriction
                    .ctx
                    .enumerate_sortables(None)
                    .unwrap()
                    .iter()
                    .map(|s| restriction.embed_alpha(&s.alpha()))
                    .collect();
                // Each embedded α-set is an element of the parent lattice…
                for alpha in &embedded {
                    assert!(
                        parent.index_of(alpha).is_some(),
                        "{spec} γ={gamma:?} J={j:?}: embedded {alpha:?} missing"
                    );
                }
                // …and the embedded family is downward closed.
                for i in 0..parent.len() as u32 {
                    let alpha = parent.alpha(i);
                    let below_embedded =
                        embedded.iter().any(|big| alpha.is_subset(big));
                    if below_embedded {
                        assert!(
                            embedded.contains(alpha),
                            "{spec} γ={gamma:?} J={j:?}: {alpha:?} below the ideal but not in it"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn join_meet_laws_hold() {
    // Absorption and associativity over all triples of A3 and B3.
    for spec in ["A3", "B3"] {
        let l = lattice(spec, &linear_gamma(3), None);
        let n = l.len() as u32;
        for p in 0..n {
            for q in 0..n {
                let j = l.join(p, q).unwrap();
                let m = l.meet(p, q);
                assert_eq!(l.meet(p, j), p, "absorption p ∧ (p ∨ q)");
                assert_eq!(l.join(p, m).unwrap(), p, "absorption p ∨ (p ∧ q)");
                for r in 0..n {
                    assert_eq!(
                        l.join(l.join(p, q).unwrap(), r).unwrap(),
                        l.join(p, l.join(q, r).unwrap()).unwrap(),
                        "join associativity"
                    );
                    assert_eq!(
                        l.meet(l.meet(p, q), r),
                        l.meet(p, l.meet(q, r)),
                        "meet associativity"
                    );
                }
            }
        }
    }
}

#[test]
fn greedy_meet_matches_exhaustive_meet() {
    for (spec, gamma, cap) in [
        ("A3", vec![0usize, 1, 2], None),
        ("B3", vec![0, 1, 2], None),
        ("H3", vec![0, 1, 2], None),
        ("tC2", vec![0, 2, 1], Some(7)),
    ] {
        let l = lattice(spec, &gamma, cap);
        for u in 0..l.len() as u32 {
            for v in 0..l.len() as u32 {
                assert_eq!(
                    l.meet(u, v),
                    oracle::naive_meet(&l, u, v),
                    "{spec}: meet({}, {})",
                    l.word_string(u),
                    l.word_string(v)
                );
            }
        }
    }
}

#[test]
fn lattices_are_graded_with_unit_covers() {
    for (spec, gamma, cap) in [
        ("A3", vec![0usize, 1, 2], None),
        ("B3", vec![0, 1, 2], None),
        ("H3", vec![0, 1, 2], None),
        ("tC2", vec![0, 2, 1], Some(7)),
    ] {
        let l = lattice(spec, &gamma, cap);
        l.validate_graded();
        for edge in l.hasse() {
            assert_eq!(l.rank_of(edge.upper), l.rank_of(edge.lower) + 1);
            assert_eq!(
                l.alpha(edge.upper).len(),
                l.alpha(edge.lower).len() + 1,
                "covers add exactly one position"
            );
        }
    }
}

/// A hand-written brute-force pattern matcher, kept deliberately separate
/// from the production matcher: per pattern, explicit conditions over every
/// injective assignment of diagram vertices.
fn brute_force_matches(oriented: &OrientedDiagram, pattern: PatternId) -> Vec<Vec<usize>> {
    let d = oriented.diagram();
    let n = d.rank();
    let m = |a: usize, b: usize| d.label(a, b);
    let at_least = |bond: Bond, k: u32| match bond {
        Bond::Finite(v) => v >= k,
        Bond::Infinite => true,
    };
    let non_edge = |a: usize, b: usize| m(a, b) == Bond::Finite(2);
    let arrow = |a: usize, b: usize| oriented.is_directed(a, b);

    let mut found = vec![];
    let verts: Vec<usize> = (0..n).collect();
    let k = match pattern {
        PatternId::I | PatternId::II => 3,
        _ => 4,
    };
    let mut stack: Vec<Vec<usize>> = vec![vec![]];
    while let Some(partial) = stack.pop() {
        if partial.len() == k {
            let w = &partial;
            let ok = match pattern {
                PatternId::I => {
                    arrow(w[1], w[0])
                        && arrow(w[1], w[2])
                        && at_least(m(w[1], w[0]), 3)
                        && at_least(m(w[1], w[2]), 3)
                        && non_edge(w[0], w[2])
                }
                PatternId::II => {
                    arrow(w[1], w[0])
                        && arrow(w[2], w[1])
                        && at_least(m(w[1], w[0]), 3)
                        && at_least(m(w[2], w[1]), 4)
                        && non_edge(w[0], w[2])
                }
                PatternId::III => {
                    arrow(w[0], w[1])
                        && arrow(w[3], w[1])
                        && arrow(w[1], w[2])
                        && at_least(m(w[0], w[1]), 3)
                        && at_least(m(w[3], w[1]), 3)
                        && at_least(m(w[1], w[2]), 3)
                        && non_edge(w[0], w[2])
                        && non_edge(w[0], w[3])
                        && non_edge(w[2], w[3])
                }
                PatternId::IV => {
                    arrow(w[0], w[1])
                        && arrow(w[2], w[1])
                        && arrow(w[3], w[1])
                        && at_least(m(w[0], w[1]), 3)
                        && at_least(m(w[2], w[1]), 3)
                        && at_least(m(w[3], w[1]), 3)
                        && non_edge(w[0], w[2])
                        && non_edge(w[0], w[3])
                        && non_edge(w[2], w[3])
                }
                PatternId::V => {
                    arrow(w[0], w[1])
                        && arrow(w[1], w[2])
                        && arrow(w[3], w[2])
                        && at_least(m(w[0], w[1]), 3)
                        && at_least(m(w[1], w[2]), 4)
                        && at_least(m(w[3], w[2]), 3)
                        && non_edge(w[0], w[2])
                        && non_edge(w[0], w[3])
                        && non_edge(w[1], w[3])
                }
                PatternId::VI => {
                    arrow(w[0], w[1])
                        && arrow(w[1], w[2])
                        && arrow(w[2], w[3])
                        && at_least(m(w[0], w[1]), 3)
                        && at_least(m(w[1], w[2]), 3)
                        && at_least(m(w[2], w[3]), 5)
                        && non_edge(w[0], w[2])
                        && non_edge(w[0], w[3])
                        && non_edge(w[1], w[3])
                }
                PatternId::VII => {
                    arrow(w[0], w[1])
                        && arrow(w[1], w[2])
                        && arrow(w[3], w[2])
                        && at_least(m(w[0], w[1]), 3)
                        && at_least(m(w[1], w[2]), 3)
                        && at_least(m(w[3], w[2]), 5)
                        && non_edge(w[0], w[2])
                        && non_edge(w[0], w[3])
                        && non_edge(w[1], w[3])
                }
            };
            if ok {
                found.push(partial);
            }
            continue;
        }
        for &v in verts.iter().rev() {
            if !partial.contains(&v) {
                let mut next = partial.clone();
                next.push(v);
                stack.push(next);
            }
        }
    }
    found
}

#[test]
fn pattern_matcher_agrees_with_brute_force() {
    for spec in [
        "A2", "A3", "A4", "B2", "B3", "D4", "F4", "H3", "H4", "I2(5)", "I2(6)", "I2(7)", "I2(8)",
    ] {
        let diagram = CoxeterDiagram::parse(spec).unwrap();
        for (oriented, word) in enumerate_coxeter_elements(&diagram) {
            // First-match semantics: lowest pattern id with the
            // lexicographically least witness.
            let expected = PatternId::ALL.iter().find_map(|&p| {
                let mut matches = brute_force_matches(&oriented, p);
                matches.sort();
                matches.first().map(|w| (p, w.clone()))
            });
            let got = find_forbidden(&oriented).map(|m| (m.pattern, m.witness));
            assert_eq!(got, expected, "{spec} γ = {word:?}");
        }
    }
}
