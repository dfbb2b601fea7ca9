//! Breadth-first generation of the (left) Cayley graph.
//!
//! Elements are deduplicated by their exact action matrices during the
//! search; the returned structure keeps only integer tables (reduced words,
//! lengths, left-multiplication moves and descent masks), which is what the
//! oracle-side sortability filters need.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::sync::Arc;

use super::group::{CoxeterGroup, GroupElement, Matrix};

pub const NO_MOVE: u32 = u32::MAX;

/// The Cayley graph of a Coxeter group under left multiplication, truncated
/// at `max_length` when requested.
pub struct CayleyGraph {
    rank: usize,
    words: Vec<Vec<u8>>,
    lengths: Vec<u32>,
    /// left[e * rank + i] = index of s_i · e, or NO_MOVE beyond the cutoff.
    left: Vec<u32>,
    descents: Vec<u32>,
    complete: bool,
}

impl CayleyGraph {
    /// BFS from the identity. `max_length` truncates the search;
    /// `max_elements` guards against infinite or oversized groups.
    ///
    /// # Panics
    ///
    /// Panics when more than `max_elements` elements are discovered.
    pub fn generate(
        group: &Arc<CoxeterGroup>,
        max_length: Option<u32>,
        max_elements: usize,
    ) -> CayleyGraph {
        let rank = group.rank();
        let identity = Matrix::identity(group.field(), rank);
        let mut index: HashMap<Matrix, u32> = HashMap::new();
        index.insert(identity.clone(), 0);
        let mut words: Vec<Vec<u8>> = vec![vec![]];
        let mut lengths: Vec<u32> = vec![0];
        let mut left: Vec<u32> = vec![NO_MOVE; rank];
        let mut queue: VecDeque<(u32, Matrix)> = VecDeque::new();
        queue.push_back((0, identity));
        let mut complete = true;
        while let Some((e, matrix)) = queue.pop_front() {
            let len = lengths[e as usize];
            let at_cap = max_length.is_some_and(|cap| len >= cap);
            for i in 0..rank {
                if left[e as usize * rank + i] != NO_MOVE {
                    continue;
                }
                let mut product = matrix.clone();
                group.reflect_rows(&mut product, i);
                let target = match index.get(&product) {
                    Some(&t) => t,
                    None if at_cap => {
                        // The product would exceed the cutoff.
                        complete = false;
                        continue;
                    }
                    None => {
                        let t = words.len() as u32;
                        assert!(
                            words.len() < max_elements,
                            "Cayley graph exceeds {max_elements} elements; \
                             group is infinite or too large"
                        );
                        let mut word = vec![i as u8];
                        word.extend_from_slice(&words[e as usize]);
                        words.push(word);
                        lengths.push(len + 1);
                        left.extend(std::iter::repeat(NO_MOVE).take(rank));
                        index.insert(product.clone(), t);
                        queue.push_back((t, product));
                        t
                    }
                };
                left[e as usize * rank + i] = target;
                left[target as usize * rank + i] = e;
            }
        }
        let descents = (0..words.len())
            .map(|e| {
                let mut mask = 0u32;
                for i in 0..rank {
                    let t = left[e * rank + i];
                    if t != NO_MOVE && lengths[t as usize] < lengths[e] {
                        mask |= 1 << i;
                    }
                }
                mask
            })
            .collect();
        CayleyGraph {
            rank,
            words,
            lengths,
            left,
            descents,
            complete,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of discovered elements; the group order when `is_complete`.
    pub fn element_count(&self) -> usize {
        self.words.len()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn identity(&self) -> u32 {
        0
    }

    /// The BFS-canonical reduced word of element `e`.
    pub fn word(&self, e: u32) -> &[u8] {
        &self.words[e as usize]
    }

    pub fn length(&self, e: u32) -> u32 {
        self.lengths[e as usize]
    }

    /// Index of s_i · e, if within the truncation.
    pub fn left_mul(&self, e: u32, i: usize) -> Option<u32> {
        let t = self.left[e as usize * self.rank + i];
        (t != NO_MOVE).then_some(t)
    }

    pub fn is_left_descent(&self, e: u32, i: usize) -> bool {
        self.descents[e as usize] & (1 << i) != 0
    }

    pub fn descent_mask(&self, e: u32) -> u32 {
        self.descents[e as usize]
    }

    /// Rebuilds the full group element for index `e`.
    pub fn element(&self, group: &Arc<CoxeterGroup>, e: u32) -> GroupElement {
        let word: Vec<usize> = self.words[e as usize].iter().map(|&i| i as usize).collect();
        let g = group.reduce_word(&word);
        assert_eq!(g.length() as u32, self.lengths[e as usize]);
        g
    }
}
