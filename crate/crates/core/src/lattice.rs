//! The lattice B_γ of γ-sortable elements under Bruhat order.
//!
//! The order is α-set inclusion: u ≤ v iff α_γ(u) ⊆ α_γ(v); the join is the
//! element whose α-set is the union. Meets are computed by greedily growing
//! a feasible subset of the intersection, which is correct because the
//! feasible sets form an antimatroid (union-closed, accessible) — a fact
//! this module also verifies exhaustively. Cover edges carry two labels:
//! the position added (λ_γ) and the letter of γ^∞ at that position (b_γ),
//! the latter being the SB-labeling whose axioms `verify_sb` checks.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;
use thiserror::Error;

use crate::poset::Poset;
use crate::sortable::{AlphaSet, GammaContext, SortableElement, SortableError};

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("join needs positions beyond the length cap {cap}")]
    CapExceeded { cap: usize },
    #[error("operation requires an uncapped finite-type lattice")]
    Capped,
    #[error("saturated-chain enumeration exceeded the limit of {limit}")]
    ChainLimit { limit: usize },
    #[error(transparent)]
    Sortable(#[from] SortableError),
}

/// Labels of a cover edge (u, v): the unique position of α(v) ∖ α(u) and the
/// letter of γ^∞ at that position.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct EdgeLabel {
    pub position: u32,
    /// Generator index, 0-based.
    pub letter: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct CoverEdge {
    pub lower: u32,
    pub upper: u32,
    pub label: EdgeLabel,
}

/// B_γ, fully materialized: elements indexed by (length, α) order, the
/// α-set index, and the Hasse diagram.
pub struct BruhatLattice {
    ctx: GammaContext,
    elements: Vec<SortableElement>,
    alphas: Vec<AlphaSet>,
    index: HashMap<AlphaSet, u32>,
    covers: Vec<CoverEdge>,
    up_covers: Vec<Vec<u32>>,
    down_covers: Vec<Vec<u32>>,
    cap: Option<usize>,
}

impl BruhatLattice {
    /// Enumerates the sortable elements (all of them, or up to `cap` for
    /// infinite types) and assembles the lattice.
    pub fn build(ctx: GammaContext, cap: Option<usize>) -> Result<Self, LatticeError> {
        let mut elements = ctx.enumerate_sortables(cap)?;
        elements.sort_by(|a, b| {
            (a.length(), a.alpha()).cmp(&(b.length(), b.alpha()))
        });
        let alphas: Vec<AlphaSet> = elements.iter().map(|e| e.alpha()).collect();
        let mut index = HashMap::new();
        for (i, (e, a)) in elements.iter().zip(&alphas).enumerate() {
            assert_eq!(e.length(), a.len(), "length must equal |α|");
            let prev = index.insert(a.clone(), i as u32);
            assert!(prev.is_none(), "duplicate α-set in enumeration");
        }
        assert!(
            alphas.first().is_some_and(|a| a.is_empty()),
            "ε must be the least element"
        );
        let mut covers = vec![];
        let mut up_covers = vec![vec![]; elements.len()];
        let mut down_covers = vec![vec![]; elements.len()];
        for (v, alpha) in alphas.iter().enumerate() {
            for p in alpha.positions() {
                let mut lower = alpha.clone();
                lower.remove(p);
                if let Some(&u) = index.get(&lower) {
                    let label = EdgeLabel {
                        position: p,
                        letter: ctx.slot_letter(p),
                    };
                    covers.push(CoverEdge {
                        lower: u,
                        upper: v as u32,
                        label,
                    });
                    up_covers[u as usize].push(v as u32);
                    down_covers[v].push(u);
                }
            }
        }
        covers.sort_by_key(|e| (e.lower, e.upper));
        assert!(
            (1..elements.len()).all(|v| !down_covers[v].is_empty()),
            "every nonidentity element must cover something"
        );
        Ok(BruhatLattice {
            ctx,
            elements,
            alphas,
            index,
            covers,
            up_covers,
            down_covers,
            cap,
        })
    }

    pub fn ctx(&self) -> &GammaContext {
        &self.ctx
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn cap(&self) -> Option<usize> {
        self.cap
    }

    pub fn element(&self, i: u32) -> &SortableElement {
        &self.elements[i as usize]
    }

    pub fn alpha(&self, i: u32) -> &AlphaSet {
        &self.alphas[i as usize]
    }

    pub fn rank_of(&self, i: u32) -> usize {
        self.elements[i as usize].length()
    }

    pub fn word_string(&self, i: u32) -> String {
        self.elements[i as usize].sorting.to_string()
    }

    pub fn index_of(&self, alpha: &AlphaSet) -> Option<u32> {
        self.index.get(alpha).copied()
    }

    /// Index of the element whose sorting word has the given blocks (letter
    /// sets, outermost first). Panics if no such sortable element exists.
    pub fn index_of_blocks(&self, blocks: &[&[usize]]) -> u32 {
        let n = self.ctx.rank() as u32;
        let mut alpha = AlphaSet::empty();
        for (i, block) in blocks.iter().enumerate() {
            for &letter in block.iter() {
                alpha.insert(i as u32 * n + self.ctx.slot_of(letter));
            }
        }
        self.index_of(&alpha)
            .unwrap_or_else(|| panic!("blocks {blocks:?} are not a sortable element here"))
    }

    /// Bruhat order on sortables: α-inclusion.
    pub fn leq(&self, u: u32, v: u32) -> bool {
        self.alphas[u as usize].is_subset(&self.alphas[v as usize])
    }

    /// Least upper bound: the element with α = α(u) ∪ α(v).
    pub fn join(&self, u: u32, v: u32) -> Result<u32, LatticeError> {
        let union = self.alphas[u as usize].union(&self.alphas[v as usize]);
        match self.index_of(&union) {
            Some(idx) => Ok(idx),
            None => {
                let cap = self
                    .cap
                    .expect("union of feasible α-sets must be feasible (join theorem)");
                assert!(
                    union.len() > cap,
                    "union of feasible α-sets within the cap must be feasible"
                );
                Err(LatticeError::CapExceeded { cap })
            }
        }
    }

    /// Greatest lower bound, by greedily growing a feasible subset of
    /// α(u) ∩ α(v) until no position can be added. Union-closure of the
    /// feasible family makes the result order-independent; positions are
    /// tried in increasing order for determinism.
    pub fn meet(&self, u: u32, v: u32) -> u32 {
        let inter = self.alphas[u as usize].intersection(&self.alphas[v as usize]);
        let positions = inter.positions();
        let mut current = AlphaSet::empty();
        let mut missing = positions.len();
        loop {
            let mut progressed = false;
            for &p in &positions {
                if current.contains(p) {
                    continue;
                }
                let mut candidate = current.clone();
                candidate.insert(p);
                if self.index.contains_key(&candidate) {
                    current = candidate;
                    progressed = true;
                    missing -= 1;
                }
            }
            if !progressed || missing == 0 {
                break;
            }
        }
        self.index[&current]
    }

    /// All cover edges with their labels, sorted by (lower, upper).
    pub fn hasse(&self) -> &[CoverEdge] {
        &self.covers
    }

    pub fn up_covers(&self, u: u32) -> &[u32] {
        &self.up_covers[u as usize]
    }

    pub fn down_covers(&self, u: u32) -> &[u32] {
        &self.down_covers[u as usize]
    }

    pub fn edge_label(&self, lower: u32, upper: u32) -> Option<EdgeLabel> {
        self.covers
            .iter()
            .find(|e| e.lower == lower && e.upper == upper)
            .map(|e| e.label)
    }

    /// Indices of the closed interval [u, v].
    pub fn interval(&self, u: u32, v: u32) -> Vec<u32> {
        (0..self.len() as u32)
            .filter(|&z| self.leq(u, z) && self.leq(z, v))
            .collect()
    }

    /// Checks that the order is graded by length: any comparable pair with
    /// rank gap ≥ 2 has an element strictly between, so covers add exactly
    /// one position. Quadratic-ish; meant for tests and verification runs.
    pub fn validate_graded(&self) {
        let n = self.len() as u32;
        for u in 0..n {
            for v in 0..n {
                if u != v && self.leq(u, v) && self.rank_of(v) - self.rank_of(u) >= 2 {
                    let between = (0..n)
                        .any(|z| z != u && z != v && self.leq(u, z) && self.leq(z, v));
                    assert!(
                        between,
                        "cover with rank gap ≥ 2: {} ⋖ {}",
                        self.word_string(u),
                        self.word_string(v)
                    );
                }
            }
        }
    }

    /// Möbius values for all pairs u ≤ v, by the standard recursion.
    pub fn mobius_table(&self) -> MobiusTable {
        let n = self.len() as u32;
        let mut values: HashMap<(u32, u32), i64> = HashMap::new();
        for u in 0..n {
            // Elements are sorted by rank, so ascending index order computes
            // every μ(u, z) before it is needed.
            for v in u..n {
                if !self.leq(u, v) {
                    continue;
                }
                if u == v {
                    values.insert((u, u), 1);
                    continue;
                }
                let mut sum = 0i64;
                for z in u..v {
                    if self.leq(u, z) && self.leq(z, v) {
                        sum += values[&(u, z)];
                    }
                }
                values.insert((u, v), -sum);
            }
        }
        MobiusTable { values }
    }

    /// SB-labeling verification for the letter labeling b_γ.
    pub fn verify_sb(&self) -> Result<SbReport, LatticeError> {
        self.verify_sb_with(
            |lower, upper| {
                self.edge_label(lower, upper)
                    .expect("cover edge must carry a label")
                    .letter
            },
            1_000_000,
        )
    }

    /// SB-labeling verification for an arbitrary edge labeling: at every
    /// element p with two distinct upper covers p1, p2, the labels must
    /// differ, and every saturated chain of [p, p1 ∨ p2] must use both
    /// labels at least once and no other label. Joins beyond the cap skip
    /// the interval and flag it in the report.
    pub fn verify_sb_with<L: Eq + Hash + Clone + Debug>(
        &self,
        label: impl Fn(u32, u32) -> L,
        chain_limit: usize,
    ) -> Result<SbReport, LatticeError> {
        let mut report = SbReport::default();
        for p in 0..self.len() as u32 {
            let ups = &self.up_covers[p as usize];
            for (a, &p1) in ups.iter().enumerate() {
                for &p2 in &ups[a + 1..] {
                    report.diamonds_checked += 1;
                    let l1 = label(p, p1);
                    let l2 = label(p, p2);
                    if l1 == l2 {
                        report.violations.push(SbViolation {
                            p: self.word_string(p),
                            p1: self.word_string(p1),
                            p2: self.word_string(p2),
                            kind: SbViolationKind::EqualLabels,
                            chain: None,
                        });
                        continue;
                    }
                    let top = match self.join(p1, p2) {
                        Ok(top) => top,
                        Err(LatticeError::CapExceeded { .. }) => {
                            report.skipped_by_cap.push((
                                self.word_string(p1),
                                self.word_string(p2),
                            ));
                            continue;
                        }
                        Err(e) => return Err(e),
                    };
                    let chains = self.saturated_chains(p, top, chain_limit)?;
                    for chain in &chains {
                        let labels: Vec<L> = chain
                            .windows(2)
                            .map(|w| label(w[0], w[1]))
                            .collect();
                        let missing =
                            !labels.contains(&l1) || !labels.contains(&l2);
                        let foreign = labels.iter().any(|l| *l != l1 && *l != l2);
                        if missing || foreign {
                            report.violations.push(SbViolation {
                                p: self.word_string(p),
                                p1: self.word_string(p1),
                                p2: self.word_string(p2),
                                kind: if missing {
                                    SbViolationKind::MissingLabel
                                } else {
                                    SbViolationKind::ForeignLabel
                                },
                                chain: Some(
                                    chain.iter().map(|&z| self.word_string(z)).collect(),
                                ),
                            });
                        }
                    }
                }
            }
        }
        Ok(report)
    }

    /// All saturated chains from `bottom` to `top` through cover edges.
    fn saturated_chains(
        &self,
        bottom: u32,
        top: u32,
        limit: usize,
    ) -> Result<Vec<Vec<u32>>, LatticeError> {
        let mut out = vec![];
        let mut stack = vec![vec![bottom]];
        while let Some(chain) = stack.pop() {
            let last = *chain.last().unwrap();
            if last == top {
                out.push(chain);
                if out.len() > limit {
                    return Err(LatticeError::ChainLimit { limit });
                }
                continue;
            }
            for &next in &self.up_covers[last as usize] {
                if self.leq(next, top) {
                    let mut longer = chain.clone();
                    longer.push(next);
                    stack.push(longer);
                }
            }
        }
        Ok(out)
    }

    fn require_uncapped(&self) -> Result<(), LatticeError> {
        if self.cap.is_some() {
            return Err(LatticeError::Capped);
        }
        Ok(())
    }

    fn tables(&self) -> (Vec<u32>, Vec<u32>) {
        let n = self.len();
        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        for u in 0..n as u32 {
            for v in u..n as u32 {
                let j = self.join(u, v).expect("uncapped join is total");
                let m = self.meet(u, v);
                join[u as usize * n + v as usize] = j;
                join[v as usize * n + u as usize] = j;
                meet[u as usize * n + v as usize] = m;
                meet[v as usize * n + u as usize] = m;
            }
        }
        (join, meet)
    }

    /// Exhaustive lattice-property checks (uncapped lattices only):
    /// upper semimodularity, meet-semidistributivity, both distributive
    /// laws, and the four-element diamond intervals that join-distributivity
    /// forces.
    pub fn lattice_properties(&self) -> Result<LatticeProperties, LatticeError> {
        self.require_uncapped()?;
        let n = self.len();
        let (join, meet) = self.tables();
        let jn = |a: u32, b: u32| join[a as usize * n + b as usize];
        let mt = |a: u32, b: u32| meet[a as usize * n + b as usize];
        let is_cover = |a: u32, b: u32| {
            self.rank_of(b) == self.rank_of(a) + 1 && self.leq(a, b)
        };

        let mut upper_semimodular = true;
        'usm: for p in 0..n as u32 {
            for q in 0..n as u32 {
                if p == q {
                    continue;
                }
                let m = mt(p, q);
                if is_cover(m, p) && is_cover(m, q) {
                    let j = jn(p, q);
                    if !is_cover(p, j) || !is_cover(q, j) {
                        upper_semimodular = false;
                        break 'usm;
                    }
                }
            }
        }

        let mut meet_semidistributive = true;
        'msd: for p in 0..n as u32 {
            for q in 0..n as u32 {
                for r in 0..n as u32 {
                    if mt(p, q) == mt(p, r) && mt(p, jn(q, r)) != mt(p, q) {
                        meet_semidistributive = false;
                        break 'msd;
                    }
                }
            }
        }

        let mut meet_distributive = true;
        'eq2: for p in 0..n as u32 {
            for q in 0..n as u32 {
                for r in 0..n as u32 {
                    if mt(p, jn(q, r)) != jn(mt(p, q), mt(p, r)) {
                        meet_distributive = false;
                        break 'eq2;
                    }
                }
            }
        }
        let mut join_distributive_law = true;
        'eq3: for p in 0..n as u32 {
            for q in 0..n as u32 {
                for r in 0..n as u32 {
                    if jn(p, mt(q, r)) != mt(jn(p, q), jn(p, r)) {
                        join_distributive_law = false;
                        break 'eq3;
                    }
                }
            }
        }
        assert_eq!(
            meet_distributive, join_distributive_law,
            "the two distributive laws must agree"
        );

        let mut diamond_intervals = true;
        'dia: for p in 0..n as u32 {
            let ups = &self.up_covers[p as usize];
            for (a, &p1) in ups.iter().enumerate() {
                for &p2 in &ups[a + 1..] {
                    let top = jn(p1, p2);
                    if self.interval(p, top).len() != 4 {
                        diamond_intervals = false;
                        break 'dia;
                    }
                }
            }
        }

        Ok(LatticeProperties {
            upper_semimodular,
            meet_semidistributive,
            join_distributive: upper_semimodular && meet_semidistributive,
            distributive: meet_distributive,
            diamond_intervals,
        })
    }

    /// Antimatroid axioms for the family of α-sets: contains ∅, closed
    /// under union, accessible, and satisfies the exchange property.
    pub fn antimatroid_check(&self) -> Result<AntimatroidReport, LatticeError> {
        self.require_uncapped()?;
        let n = self.len();
        let mut report = AntimatroidReport {
            has_empty: self.alphas[0].is_empty(),
            ..Default::default()
        };
        for u in 0..n {
            for v in u + 1..n {
                let union = self.alphas[u].union(&self.alphas[v]);
                if !self.index.contains_key(&union) {
                    report.union_violations.push((
                        self.word_string(u as u32),
                        self.word_string(v as u32),
                    ));
                }
            }
        }
        for u in 1..n {
            let alpha = &self.alphas[u];
            let removable = alpha.positions().iter().any(|&p| {
                let mut smaller = alpha.clone();
                smaller.remove(p);
                self.index.contains_key(&smaller)
            });
            if !removable {
                report
                    .accessibility_violations
                    .push(self.word_string(u as u32));
            }
        }
        // Exchange: feasible X, Y with Y ⊄ X admit x ∈ Y ∖ X with
        // X ∪ {x} feasible.
        for x in 0..n {
            for y in 0..n {
                if self.alphas[y].is_subset(&self.alphas[x]) {
                    continue;
                }
                let found = self.alphas[y].positions().iter().any(|&p| {
                    if self.alphas[x].contains(p) {
                        return false;
                    }
                    let mut bigger = self.alphas[x].clone();
                    bigger.insert(p);
                    self.index.contains_key(&bigger)
                });
                if !found {
                    report.exchange_violations.push((
                        self.word_string(x as u32),
                        self.word_string(y as u32),
                    ));
                }
            }
        }
        Ok(report)
    }

    /// Join-irreducible elements: exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<u32> {
        (0..self.len() as u32)
            .filter(|&u| self.down_covers[u as usize].len() == 1)
            .collect()
    }

    /// The lattice as an abstract poset.
    pub fn as_poset(&self) -> Poset {
        Poset::from_leq(self.len(), |a, b| self.leq(a as u32, b as u32))
    }

    /// The poset of join-irreducibles, plus — for distributive lattices of
    /// reasonable size — a check of Birkhoff's theorem: the lattice is
    /// isomorphic to the lattice of order ideals of that poset.
    pub fn birkhoff_analysis(&self) -> Result<BirkhoffAnalysis, LatticeError> {
        self.require_uncapped()?;
        let ji = self.join_irreducibles();
        let ji_poset = Poset::from_leq(ji.len(), |a, b| self.leq(ji[a], ji[b]));
        let distributive = self.lattice_properties()?.distributive;
        let birkhoff_iso = if distributive && self.len() <= 64 {
            Some(ji_poset.ideal_lattice().is_isomorphic(&self.as_poset()))
        } else {
            None
        };
        Ok(BirkhoffAnalysis {
            join_irreducibles: ji,
            ji_poset,
            distributive,
            birkhoff_iso,
        })
    }

    /// DOT rendering: nodes are sorting words, edges carry b_γ letters,
    /// ranks grow bottom-to-top. Output is deterministic.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph blattice {\n  rankdir=BT;\n  node [shape=none];\n");
        for i in 0..self.len() as u32 {
            out.push_str(&format!("  n{} [label=\"{}\"];\n", i + 1, self.word_string(i)));
        }
        for edge in &self.covers {
            out.push_str(&format!(
                "  n{} -> n{} [label=\"s{}\"];\n",
                edge.lower + 1,
                edge.upper + 1,
                edge.label.letter + 1
            ));
        }
        out.push_str("}\n");
        out
    }

    /// The JSON verification report; suites that need an uncapped lattice
    /// are omitted (`None`) when capped.
    pub fn report(&self, group: &str) -> Result<LatticeReport, LatticeError> {
        let mobius = self.mobius_table();
        let histogram = mobius.histogram();
        let properties = if self.cap.is_none() {
            let props = self.lattice_properties()?;
            let anti = self.antimatroid_check()?;
            Some(PropertiesReport {
                upper_semimodular: props.upper_semimodular,
                meet_semidistributive: props.meet_semidistributive,
                join_distributive: props.join_distributive,
                distributive: props.distributive,
                diamond_intervals: props.diamond_intervals,
                antimatroid: anti.is_antimatroid(),
            })
        } else {
            None
        };
        let sb = self.verify_sb()?;
        Ok(LatticeReport {
            group: group.to_string(),
            gamma_word: self.ctx.gamma_word().iter().map(|&i| i + 1).collect(),
            element_count: self.len(),
            edge_count: self.covers.len(),
            properties,
            mobius_histogram: histogram,
            sb_violations: sb.violations,
            sb_intervals_skipped_by_cap: sb.skipped_by_cap.len(),
            cap: self.cap,
        })
    }
}

/// Möbius values for every ordered pair u ≤ v.
pub struct MobiusTable {
    values: HashMap<(u32, u32), i64>,
}

impl MobiusTable {
    pub fn get(&self, u: u32, v: u32) -> Option<i64> {
        self.values.get(&(u, v)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &i64)> {
        self.values.iter()
    }

    /// Counts of the values −1, 0, +1; panics if any value falls outside.
    pub fn histogram(&self) -> MobiusHistogram {
        let mut histogram = MobiusHistogram::default();
        for (&(u, v), &value) in &self.values {
            match value {
                -1 => histogram.minus_one += 1,
                0 => histogram.zero += 1,
                1 => histogram.plus_one += 1,
                other => panic!("μ({u},{v}) = {other} outside {{−1,0,1}}"),
            }
        }
        histogram
    }

    /// Whether every value lies in {−1, 0, 1}.
    pub fn in_sb_range(&self) -> bool {
        self.values.values().all(|&v| (-1..=1).contains(&v))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MobiusHistogram {
    #[serde(rename = "-1")]
    pub minus_one: usize,
    #[serde(rename = "0")]
    pub zero: usize,
    #[serde(rename = "1")]
    pub plus_one: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeProperties {
    pub upper_semimodular: bool,
    pub meet_semidistributive: bool,
    pub join_distributive: bool,
    pub distributive: bool,
    pub diamond_intervals: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AntimatroidReport {
    pub has_empty: bool,
    pub union_violations: Vec<(String, String)>,
    pub accessibility_violations: Vec<String>,
    pub exchange_violations: Vec<(String, String)>,
}

impl AntimatroidReport {
    pub fn is_antimatroid(&self) -> bool {
        self.has_empty
            && self.union_violations.is_empty()
            && self.accessibility_violations.is_empty()
            && self.exchange_violations.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SbViolationKind {
    EqualLabels,
    MissingLabel,
    ForeignLabel,
}

#[derive(Clone, Debug, Serialize)]
pub struct SbViolation {
    pub p: String,
    pub p1: String,
    pub p2: String,
    pub kind: SbViolationKind,
    pub chain: Option<Vec<String>>,
}

#[derive(Clone, Debug, Default)]
pub struct SbReport {
    pub diamonds_checked: usize,
    pub violations: Vec<SbViolation>,
    /// Pairs of covers whose join exceeded the cap (capped lattices only).
    pub skipped_by_cap: Vec<(String, String)>,
}

impl SbReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub struct BirkhoffAnalysis {
    pub join_irreducibles: Vec<u32>,
    pub ji_poset: Poset,
    pub distributive: bool,
    /// `Some(outcome)` when the lattice is distributive and small enough to
    /// match against the ideal lattice of its join-irreducible poset.
    pub birkhoff_iso: Option<bool>,
}

/// The JSON report schema shared by the CLI's `lattice` and `verify`
/// commands.
#[derive(Clone, Debug, Serialize)]
pub struct LatticeReport {
    pub group: String,
    /// 1-based γ word.
    pub gamma_word: Vec<usize>,
    pub element_count: usize,
    pub edge_count: usize,
    pub properties: Option<PropertiesReport>,
    pub mobius_histogram: MobiusHistogram,
    pub sb_violations: Vec<SbViolation>,
    pub sb_intervals_skipped_by_cap: usize,
    pub cap: Option<usize>,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct PropertiesReport {
    pub upper_semimodular: bool,
    pub meet_semidistributive: bool,
    pub join_distributive: bool,
    pub distributive: bool,
    pub diamond_intervals: bool,
    pub antimatroid: bool,
}

impl LatticeReport {
    /// Whether every theorem-backed check in this report passed.
    pub fn all_passed(&self) -> bool {
        self.sb_violations.is_empty()
            && self
                .properties
                .map_or(true, |p| p.join_distributive && p.diamond_intervals && p.antimatroid)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterDiagram, CoxeterGroup};

    fn lattice(spec: &str, gamma: &[usize], cap: Option<usize>) -> BruhatLattice {
        let group = CoxeterGroup::new(CoxeterDiagram::parse(spec).unwrap());
        BruhatLattice::build(GammaContext::new(group, gamma.to_vec()), cap).unwrap()
    }

    fn a3() -> BruhatLattice {
        lattice("A3", &[0, 1, 2], None)
    }

    #[test]
    fn a3_has_14_elements_21_edges() {
        let l = a3();
        assert_eq!(l.len(), 14);
        assert_eq!(l.hasse().len(), 21);
    }

    #[test]
    fn leq_examples() {
        let l = a3();
        for v in 0..l.len() as u32 {
            assert!(l.leq(0, v), "ε is below everything");
        }
        // s1s2|s1 ≤ s1s2s3|s1: {1,2,4} ⊆ {1,2,3,4}.
        let u = l.index_of_blocks(&[&[0, 1], &[0]]);
        let v = l.index_of_blocks(&[&[0, 1, 2], &[0]]);
        assert!(l.leq(u, v));
        // s1s3 ≤ s2s3|s2 is false: 1 ∉ {2,3,5}.
        let a = l.index_of_blocks(&[&[0, 2]]);
        let b = l.index_of_blocks(&[&[1, 2], &[1]]);
        assert!(!l.leq(a, b));
    }

    #[test]
    fn join_examples() {
        let l = a3();
        let u = l.index_of_blocks(&[&[0, 1], &[0]]);
        assert_eq!(l.join(u, 0).unwrap(), u, "u ∨ ε = u");
        // s1s2|s1 ∨ s2s3|s2 = s1s2s3|s1s2 (n13 is the least node above n8
        // and n10 in the figure).
        let v = l.index_of_blocks(&[&[1, 2], &[1]]);
        let join = l.join(u, v).unwrap();
        assert_eq!(l.word_string(join), "s1s2s3|s1s2");
    }

    #[test]
    fn join_example_case_i_gamma() {
        // With γ = s2 s1 s3: s2s1s3 ∨ s2s3|s2 = s2s1s3|s2.
        let l = lattice("A3", &[1, 0, 2], None);
        let y = l.index_of_blocks(&[&[1, 0, 2]]);
        let z = l.index_of_blocks(&[&[1, 2], &[1]]);
        let join = l.join(y, z).unwrap();
        assert_eq!(l.word_string(join), "s2s1s3|s2");
    }

    #[test]
    fn meet_examples() {
        let l = a3();
        let u = l.index_of_blocks(&[&[0, 1], &[0]]);
        assert_eq!(l.meet(u, 0), 0, "u ∧ ε = ε");
        // s1s2 ∧ s2s3 = s2 (exhaustive check is in the oracle tests).
        let a = l.index_of_blocks(&[&[0, 1]]);
        let b = l.index_of_blocks(&[&[1, 2]]);
        assert_eq!(l.word_string(l.meet(a, b)), "s2");

        // Case-(i) values with γ = s2 s1 s3: (s2s1|s2) ∧ (s2s1s3) = s2s1.
        let l2 = lattice("A3", &[1, 0, 2], None);
        let x = l2.index_of_blocks(&[&[1, 0], &[1]]);
        let y = l2.index_of_blocks(&[&[1, 0, 2]]);
        assert_eq!(l2.word_string(l2.meet(x, y)), "s2s1");
    }

    #[test]
    fn hasse_labels_match_figure() {
        let l = a3();
        // Edge (ε, s3) is labeled s3.
        let s3 = l.index_of_blocks(&[&[2]]);
        assert_eq!(l.edge_label(0, s3).unwrap().letter, 2);
        // Edge s1s2s3|s1s2 → s1s2s3|s1s2|s1: position 7, letter s1.
        let n13 = l.index_of_blocks(&[&[0, 1, 2], &[0, 1]]);
        let n14 = l.index_of_blocks(&[&[0, 1, 2], &[0, 1], &[0]]);
        let label = l.edge_label(n13, n14).unwrap();
        assert_eq!(label.position, 7);
        assert_eq!(label.letter, 0);
    }

    #[test]
    fn mobius_examples() {
        let l = a3();
        let mobius = l.mobius_table();
        for u in 0..l.len() as u32 {
            assert_eq!(mobius.get(u, u), Some(1));
        }
        for edge in l.hasse() {
            assert_eq!(mobius.get(edge.lower, edge.upper), Some(-1));
        }
        // μ(ε, s1s2s3) over the 8-element Boolean interval: computed by the
        // direct recursion μ = −Σ over {ε, s1, s2, s3, s1s2, s1s3, s2s3}:
        // −(1 − 3 + 3) = −1.
        let top = l.index_of_blocks(&[&[0, 1, 2]]);
        assert_eq!(l.interval(0, top).len(), 8);
        assert_eq!(mobius.get(0, top), Some(-1));
        assert!(mobius.in_sb_range());
    }

    #[test]
    fn sb_verification_passes_on_a3() {
        let report = a3().verify_sb().unwrap();
        assert!(report.passed());
        assert!(report.skipped_by_cap.is_empty());
        assert!(report.diamonds_checked > 0);
    }

    #[test]
    fn sb_constant_labeling_fails_axiom_one() {
        let l = a3();
        let report = l.verify_sb_with(|_, _| 0u8, 1_000_000).unwrap();
        assert!(!report.passed());
        // Every diamond violates axiom (i).
        assert_eq!(report.violations.len(), report.diamonds_checked);
        assert!(report
            .violations
            .iter()
            .all(|v| v.kind == SbViolationKind::EqualLabels));
    }

    #[test]
    fn position_labeling_is_also_sb() {
        // λ_γ (the raw position) is the antimatroid labeling; it must pass
        // the same axioms.
        let l = a3();
        let report = l
            .verify_sb_with(
                |lower, upper| l.edge_label(lower, upper).unwrap().position,
                1_000_000,
            )
            .unwrap();
        assert!(report.passed());
    }

    #[test]
    fn a3_properties() {
        let props = a3().lattice_properties().unwrap();
        assert!(props.upper_semimodular);
        assert!(props.meet_semidistributive);
        assert!(props.join_distributive);
        assert!(props.distributive);
        assert!(props.diamond_intervals);
    }

    #[test]
    fn a3_antimatroid() {
        let report = a3().antimatroid_check().unwrap();
        assert!(report.is_antimatroid(), "{report:?}");
    }

    #[test]
    fn graded_by_length() {
        a3().validate_graded();
        lattice("B2", &[0, 1], None).validate_graded();
        lattice("tC2", &[0, 2, 1], Some(7)).validate_graded();
    }

    #[test]
    fn capped_lattice_reports_cap_exceeded() {
        let l = lattice("tC2", &[0, 2, 1], Some(7));
        assert_eq!(l.len(), 20);
        // The two rank-7 elements join above the cap.
        let tops: Vec<u32> = (0..l.len() as u32).filter(|&i| l.rank_of(i) == 7).collect();
        assert_eq!(tops.len(), 2);
        assert!(matches!(
            l.join(tops[0], tops[1]),
            Err(LatticeError::CapExceeded { cap: 7 })
        ));
        // Meets stay total.
        let meet = l.meet(tops[0], tops[1]);
        assert!(l.leq(meet, tops[0]) && l.leq(meet, tops[1]));
        // Properties are refused on capped lattices.
        assert!(matches!(l.lattice_properties(), Err(LatticeError::Capped)));
    }

    #[test]
    fn a3_birkhoff() {
        let analysis = a3().birkhoff_analysis().unwrap();
        assert_eq!(analysis.join_irreducibles.len(), 6);
        assert!(analysis.distributive);
        assert_eq!(analysis.birkhoff_iso, Some(true));
    }

    #[test]
    fn dot_is_deterministic_and_well_formed() {
        let l = a3();
        let dot = l.to_dot();
        assert_eq!(dot, l.to_dot());
        assert!(dot.starts_with("digraph blattice {"));
        assert!(dot.contains("rankdir=BT"));
        assert!(dot.contains("n1 [label=\"ε\"]"));
        assert_eq!(dot.matches("->").count(), 21);
    }

    #[test]
    fn report_schema_fields() {
        let report = a3().report("A3").unwrap();
        assert!(report.all_passed());
        let json = serde_json::to_value(&report).unwrap();
        for field in [
            "group",
            "gamma_word",
            "element_count",
            "edge_count",
            "properties",
            "mobius_histogram",
            "sb_violations",
            "cap",
        ] {
            assert!(json.get(field).is_some(), "missing field {field}");
        }
        assert_eq!(json["element_count"], 14);
        assert_eq!(json["edge_count"], 21);
        assert_eq!(json["gamma_word"], serde_json::json!([1, 2, 3]));
        let hist = &json["mobius_histogram"];
        assert!(hist.get("-1").is_some() && hist.get("0").is_some() && hist.get("1").is_some());
    }
}
