//! γ-sorting words, sortability tests, filled-position sets α_γ, and
//! enumeration of sortable elements.
//!
//! Fix a Coxeter element γ through a reduced word (a permutation of the
//! generators) and consider the half-infinite word γ^∞. The γ-sorting word
//! of `w` is the lexicographically first subword of γ^∞ that is a reduced
//! word for `w`; `w` is γ-sortable when the letter sets of consecutive
//! blocks weakly decrease. The set of slot indices used by the sorting word
//! is α_γ(w), the position (i−1)n + j for the j-th slot of the i-th block;
//! it identifies a sortable element uniquely, which makes joins set unions.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::coxeter::{column_root_sign, CoxeterGroup, GroupElement, RootSign};

#[derive(Debug, Error)]
pub enum SortableError {
    #[error("enumeration of an infinite-type group requires a length cap")]
    MissingCap,
    #[error("parabolic restriction needs a nonempty generator set")]
    EmptyParabolic,
}

/// A set of filled positions of γ^∞ (positions are 1-based), stored as a
/// bitset normalized to have no trailing zero words.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlphaSet {
    words: Vec<u64>,
}

impl AlphaSet {
    pub fn empty() -> Self {
        AlphaSet { words: vec![] }
    }

    pub fn from_positions(positions: &[u32]) -> Self {
        let mut set = AlphaSet::empty();
        for &p in positions {
            set.insert(p);
        }
        set
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, position: u32) {
        assert!(position >= 1, "positions are 1-based");
        let idx = (position - 1) as usize / 64;
        if idx >= self.words.len() {
            self.words.resize(idx + 1, 0);
        }
        self.words[idx] |= 1 << ((position - 1) % 64);
    }

    pub fn remove(&mut self, position: u32) {
        let idx = (position - 1) as usize / 64;
        if idx < self.words.len() {
            self.words[idx] &= !(1 << ((position - 1) % 64));
            self.normalize();
        }
    }

    pub fn contains(&self, position: u32) -> bool {
        let idx = (position - 1) as usize / 64;
        idx < self.words.len() && self.words[idx] & (1 << ((position - 1) % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_subset(&self, other: &AlphaSet) -> bool {
        if self.words.len() > other.words.len() {
            return false;
        }
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &AlphaSet) -> AlphaSet {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (i, w) in short.words.iter().enumerate() {
            words[i] |= w;
        }
        AlphaSet { words }
    }

    pub fn intersection(&self, other: &AlphaSet) -> AlphaSet {
        let mut out = AlphaSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        };
        out.normalize();
        out
    }

    /// Positions in ascending order.
    pub fn positions(&self) -> Vec<u32> {
        let mut out = vec![];
        for (i, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let b = bits.trailing_zeros();
                out.push(i as u32 * 64 + b + 1);
                bits &= bits - 1;
            }
        }
        out
    }
}

impl PartialOrd for AlphaSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlphaSet {
    /// Lexicographic order on the ascending position sequences.
    fn cmp(&self, other: &Self) -> Ordering {
        self.positions().cmp(&other.positions())
    }
}

impl fmt::Debug for AlphaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.positions().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// A γ-sorting word: the blocks (letter lists in slot order) and the filled
/// positions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SortingWord {
    blocks: Vec<Vec<usize>>,
    positions: Vec<u32>,
}

impl SortingWord {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn positions(&self) -> &[u32] {
        &self.positions
    }

    pub fn alpha(&self) -> AlphaSet {
        AlphaSet::from_positions(&self.positions)
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// The letters of the word, in position order.
    pub fn letters(&self) -> Vec<usize> {
        self.blocks.iter().flatten().copied().collect()
    }

    /// Whether the block sets weakly decrease: b_1 ⊇ b_2 ⊇ ⋯.
    pub fn is_nested(&self) -> bool {
        self.blocks.windows(2).all(|pair| {
            pair[1].iter().all(|letter| pair[0].contains(letter))
        })
    }
}

impl fmt::Display for SortingWord {
    /// Renders like the figures: `s1s2s3|s1s2|s1`, or `ε` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "ε");
        }
        for (k, block) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, "|")?;
            }
            for &letter in block {
                write!(f, "s{}", letter + 1)?;
            }
        }
        Ok(())
    }
}

/// A γ-sortable element: the group element together with its canonical
/// sorting word.
#[derive(Clone)]
pub struct SortableElement {
    pub element: GroupElement,
    pub sorting: SortingWord,
}

impl SortableElement {
    pub fn alpha(&self) -> AlphaSet {
        self.sorting.alpha()
    }

    pub fn length(&self) -> usize {
        self.element.length()
    }
}

impl fmt::Debug for SortableElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sorting)
    }
}

/// A Coxeter group with a fixed reduced word for a Coxeter element γ,
/// defining the half-infinite word γ^∞.
#[derive(Clone)]
pub struct GammaContext {
    group: Arc<CoxeterGroup>,
    gamma_word: Vec<usize>,
}

impl fmt::Debug for GammaContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word: Vec<usize> = self.gamma_word.iter().map(|&i| i + 1).collect();
        write!(f, "GammaContext(γ = {word:?})")
    }
}

impl GammaContext {
    pub fn new(group: Arc<CoxeterGroup>, gamma_word: Vec<usize>) -> Self {
        let n = group.rank();
        let mut seen = vec![false; n];
        assert_eq!(gamma_word.len(), n, "γ word must be a permutation of the generators");
        for &i in &gamma_word {
            assert!(i < n && !seen[i], "γ word must be a permutation of the generators");
            seen[i] = true;
        }
        GammaContext { group, gamma_word }
    }

    pub fn group(&self) -> &Arc<CoxeterGroup> {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn gamma_word(&self) -> &[usize] {
        &self.gamma_word
    }

    pub fn coxeter_element(&self) -> GroupElement {
        self.group.coxeter_element(&self.gamma_word)
    }

    /// The letter sitting in slot `position` (1-based) of γ^∞.
    pub fn slot_letter(&self, position: u32) -> usize {
        self.gamma_word[(position as usize - 1) % self.rank()]
    }

    /// The 1-based slot of `letter` within a block of γ^∞.
    pub fn slot_of(&self, letter: usize) -> u32 {
        self.gamma_word
            .iter()
            .position(|&l| l == letter)
            .expect("letter out of range") as u32
            + 1
    }

    fn sorting_word_from_positions(&self, positions: &[u32]) -> SortingWord {
        let n = self.rank() as u32;
        debug_assert!(positions.windows(2).all(|w| w[0] < w[1]));
        let mut blocks: Vec<Vec<usize>> = vec![];
        for &p in positions {
            let block = ((p - 1) / n) as usize;
            while blocks.len() <= block {
                blocks.push(vec![]);
            }
            blocks[block].push(self.slot_letter(p));
        }
        assert!(
            blocks.iter().all(|b| !b.is_empty()),
            "sorting word has an empty block"
        );
        SortingWord {
            blocks,
            positions: positions.to_vec(),
        }
    }

    /// The γ-sorting word of `w`: scan the slots of γ^∞ left to right, and
    /// whenever the slot letter is a left descent of the current remainder,
    /// record the slot and strip the letter.
    ///
    /// The recorded word is reduced and is the lexicographically first
    /// reduced subword of γ^∞ for `w`. The scan is asserted to finish within
    /// ℓ(w)·n slots and to make progress in every block.
    pub fn gamma_sorting_word(&self, w: &GroupElement) -> SortingWord {
        let n = self.rank();
        let mut positions: Vec<u32> = vec![];
        let mut inv = w.inv_action().clone();
        let mut remaining = w.length();
        let mut slot = 0usize;
        let mut hits_in_window = 0usize;
        while remaining > 0 {
            assert!(
                slot < w.length() * n,
                "γ-sorting scan exceeded ℓ(w)·n slots"
            );
            let letter = self.gamma_word[slot % n];
            if column_root_sign(&inv, letter) == RootSign::Negative {
                positions.push(slot as u32 + 1);
                // remainder ← s·remainder, so inv ← inv·S_s.
                self.group.reflect_cols(&mut inv, letter);
                remaining -= 1;
                hits_in_window += 1;
            }
            if slot % n == n - 1 {
                assert!(
                    hits_in_window > 0 || remaining == 0,
                    "γ-sorting scan made no progress in a full block"
                );
                hits_in_window = 0;
            }
            slot += 1;
        }
        self.sorting_word_from_positions(&positions)
    }

    /// Whether `w` is γ-sortable: the blocks of its sorting word are nested.
    pub fn is_sortable(&self, w: &GroupElement) -> bool {
        self.gamma_sorting_word(w).is_nested()
    }

    /// `w` as a [`SortableElement`], if sortable.
    pub fn sortable(&self, w: &GroupElement) -> Option<SortableElement> {
        let sorting = self.gamma_sorting_word(w);
        sorting.is_nested().then(|| SortableElement {
            element: w.clone(),
            sorting,
        })
    }

    /// The filled-position set α_γ(w).
    pub fn alpha(&self, w: &SortableElement) -> AlphaSet {
        w.alpha()
    }

    /// The group element whose reduced word reads off the letters at the
    /// given (strictly increasing, known-feasible) positions.
    pub fn element_from_positions(&self, positions: &[u32]) -> GroupElement {
        let letters: Vec<usize> = positions.iter().map(|&p| self.slot_letter(p)).collect();
        let element = self.group.reduce_word(&letters);
        assert_eq!(
            element.length(),
            letters.len(),
            "positions do not spell a reduced word"
        );
        element
    }

    /// All γ-sortable elements, by depth-first search over nested block
    /// sequences b_1 ⊇ b_2 ⊇ ⋯ whose concatenation stays reduced. Every
    /// candidate is validated by recomputing its sorting word; a mismatch is
    /// a hard failure, never a silent drop. `length_cap` is required for
    /// infinite-type diagrams.
    pub fn enumerate_sortables(
        &self,
        length_cap: Option<usize>,
    ) -> Result<Vec<SortableElement>, SortableError> {
        if length_cap.is_none() && !self.group.diagram().is_finite_type() {
            return Err(SortableError::MissingCap);
        }
        let identity = self.group.identity();
        let empty = self.sorting_word_from_positions(&[]);
        let mut out = vec![SortableElement {
            element: identity.clone(),
            sorting: empty,
        }];
        let all_slots: Vec<usize> = (0..self.rank()).collect();
        let mut action = identity.action().clone();
        let mut inv = identity.inv_action().clone();
        let mut positions: Vec<u32> = vec![];
        self.dfs_block(
            0,
            &all_slots,
            &mut action,
            &mut inv,
            &mut positions,
            length_cap,
            &mut out,
        );
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs_block(
        &self,
        block: usize,
        allowed: &[usize],
        action: &mut crate::coxeter::Matrix,
        inv: &mut crate::coxeter::Matrix,
        positions: &mut Vec<u32>,
        cap: Option<usize>,
        out: &mut Vec<SortableElement>,
    ) {
        let mut chosen: Vec<usize> = vec![];
        self.dfs_slot(block, allowed, 0, &mut chosen, action, inv, positions, cap, out);
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs_slot(
        &self,
        block: usize,
        allowed: &[usize],
        idx: usize,
        chosen: &mut Vec<usize>,
        action: &mut crate::coxeter::Matrix,
        inv: &mut crate::coxeter::Matrix,
        positions: &mut Vec<u32>,
        cap: Option<usize>,
        out: &mut Vec<SortableElement>,
    ) {
        let n = self.rank();
        if idx == allowed.len() {
            if chosen.is_empty() {
                return;
            }
            let letters: Vec<usize> = positions.iter().map(|&p| self.slot_letter(p)).collect();
            let element = GroupElement::from_parts(action.clone(), inv.clone(), letters);
            // Nested reducedness is a search heuristic only: every candidate
            // must be its own γ-sorting word.
            let recomputed = self.gamma_sorting_word(&element);
            assert_eq!(
                recomputed.positions, *positions,
                "nested-block candidate {} is not the sorting word of its product",
                recomputed
            );
            let sorting = self.sorting_word_from_positions(positions);
            debug_assert!(sorting.is_nested());
            out.push(SortableElement {
                element,
                sorting,
            });
            let next_allowed = chosen.clone();
            self.dfs_block(block + 1, &next_allowed, action, inv, positions, cap, out);
            return;
        }
        let slot = allowed[idx];
        // Skip this slot.
        self.dfs_slot(block, allowed, idx + 1, chosen, action, inv, positions, cap, out);
        // Or fill it, when the cap allows and the word stays reduced.
        if cap.is_some_and(|c| positions.len() >= c) {
            return;
        }
        let letter = self.gamma_word[slot];
        if column_root_sign(action, letter) == RootSign::Positive {
            self.group.reflect_cols(action, letter);
            self.group.reflect_rows(inv, letter);
            positions.push((block * n + slot) as u32 + 1);
            chosen.push(slot);
            self.dfs_slot(block, allowed, idx + 1, chosen, action, inv, positions, cap, out);
            chosen.pop();
            positions.pop();
            self.group.reflect_cols(action, letter);
            self.group.reflect_rows(inv, letter);
        }
    }

    /// Restricts to the standard parabolic subgroup on the generator set
    /// `j`: the induced diagram with γ' the subword of the γ word on `j`.
    pub fn parabolic_restriction(&self, j: &[usize]) -> Result<ParabolicRestriction, SortableError> {
        if j.is_empty() {
            return Err(SortableError::EmptyParabolic);
        }
        let mut gens: Vec<usize> = j.to_vec();
        gens.sort_unstable();
        gens.dedup();
        assert!(gens.iter().all(|&g| g < self.rank()), "generator out of range");
        let labels: Vec<Vec<_>> = gens
            .iter()
            .map(|&a| gens.iter().map(|&b| self.group.diagram().label(a, b)).collect())
            .collect();
        let diagram = crate::coxeter::CoxeterDiagram::from_labels(labels)
            .expect("induced diagram of a valid diagram is valid");
        let subgroup = CoxeterGroup::new(diagram);
        let mut parent_slots = vec![];
        let mut sub_word = vec![];
        for (slot, &letter) in self.gamma_word.iter().enumerate() {
            if let Some(new_index) = gens.iter().position(|&g| g == letter) {
                parent_slots.push(slot);
                sub_word.push(new_index);
            }
        }
        Ok(ParabolicRestriction {
            ctx: GammaContext::new(subgroup, sub_word),
            generators: gens,
            parent_slots,
            parent_rank: self.rank(),
        })
    }
}

/// The restriction of a [`GammaContext`] to a standard parabolic subgroup,
/// with the bookkeeping to re-embed α-sets into the parent's slot numbering.
pub struct ParabolicRestriction {
    pub ctx: GammaContext,
    /// Parent generator represented by each restricted generator.
    pub generators: Vec<usize>,
    /// Parent slot (0-based) holding each restricted slot's letter.
    pub parent_slots: Vec<usize>,
    parent_rank: usize,
}

impl ParabolicRestriction {
    /// Maps a restricted α-set into the parent's slot numbering.
    pub fn embed_alpha(&self, alpha: &AlphaSet) -> AlphaSet {
        let k = self.ctx.rank() as u32;
        let n = self.parent_rank as u32;
        let mut out = AlphaSet::empty();
        for p in alpha.positions() {
            let block = (p - 1) / k;
            let slot = (p - 1) % k;
            out.insert(block * n + self.parent_slots[slot as usize] as u32 + 1);
        }
        out
    }
}
