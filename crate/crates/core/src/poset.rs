//! Small finite posets: covers, order ideals, and isomorphism testing.
//!
//! Sizes here are desk-scale (join-irreducible posets, root posets, ideal
//! lattices of those), so the representation is a dense ≤-matrix and the
//! isomorphism test is a pruned backtracking search.

use std::collections::HashSet;

/// A finite poset on 0..size with a dense order matrix.
#[derive(Clone)]
pub struct Poset {
    size: usize,
    leq: Vec<bool>,
}

impl Poset {
    pub fn from_leq(size: usize, leq_fn: impl Fn(usize, usize) -> bool) -> Self {
        let mut leq = vec![false; size * size];
        for a in 0..size {
            for b in 0..size {
                leq[a * size + b] = leq_fn(a, b);
            }
        }
        let poset = Poset { size, leq };
        poset.check_axioms();
        poset
    }

    fn check_axioms(&self) {
        let n = self.size;
        for a in 0..n {
            assert!(self.leq(a, a), "order must be reflexive");
            for b in 0..n {
                if a != b && self.leq(a, b) {
                    assert!(!self.leq(b, a), "order must be antisymmetric");
                }
                for c in 0..n {
                    if self.leq(a, b) && self.leq(b, c) {
                        assert!(self.leq(a, c), "order must be transitive");
                    }
                }
            }
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size + b]
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for a in 0..self.size {
            for b in 0..self.size {
                if a != b && self.leq(a, b) {
                    let between = (0..self.size)
                        .any(|z| z != a && z != b && self.leq(a, z) && self.leq(z, b));
                    if !between {
                        out.push((a, b));
                    }
                }
            }
        }
        out
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&a| (0..self.size).all(|b| b == a || !self.leq(b, a)))
            .collect()
    }

    /// All order ideals (downward-closed subsets) as bitmasks.
    ///
    /// # Panics
    ///
    /// Panics for posets with more than 64 elements.
    pub fn order_ideals(&self) -> Vec<u64> {
        assert!(self.size <= 64, "ideal enumeration limited to 64 elements");
        let mut seen: HashSet<u64> = HashSet::new();
        let mut stack = vec![0u64];
        seen.insert(0);
        while let Some(ideal) = stack.pop() {
            for x in 0..self.size {
                if ideal & (1 << x) != 0 {
                    continue;
                }
                // x can be added if everything below it is already in.
                let below_ok = (0..self.size)
                    .all(|y| y == x || !self.leq(y, x) || ideal & (1 << y) != 0);
                if below_ok {
                    let next = ideal | (1 << x);
                    if seen.insert(next) {
                        stack.push(next);
                    }
                }
            }
        }
        let mut out: Vec<u64> = seen.into_iter().collect();
        out.sort_unstable_by_key(|m| (m.count_ones(), *m));
        out
    }

    /// The lattice of order ideals, ordered by inclusion.
    pub fn ideal_lattice(&self) -> Poset {
        let ideals = self.order_ideals();
        Poset::from_leq(ideals.len(), |a, b| ideals[a] & !ideals[b] == 0)
    }

    /// The induced subposet on the given elements (in the given order).
    pub fn restrict(&self, elements: &[usize]) -> Poset {
        Poset::from_leq(elements.len(), |a, b| self.leq(elements[a], elements[b]))
    }

    /// Poset isomorphism by backtracking over compatible element profiles.
    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        if self.size != other.size {
            return false;
        }
        let profile = |p: &Poset, a: usize| {
            let down = (0..p.size).filter(|&b| p.leq(b, a)).count();
            let up = (0..p.size).filter(|&b| p.leq(a, b)).count();
            (down, up)
        };
        let mine: Vec<_> = (0..self.size).map(|a| profile(self, a)).collect();
        let theirs: Vec<_> = (0..self.size).map(|a| profile(other, a)).collect();
        {
            let mut a = mine.clone();
            let mut b = theirs.clone();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return false;
            }
        }
        let mut assigned: Vec<Option<usize>> = vec![None; self.size];
        let mut used = vec![false; self.size];
        self.extend_iso(0, &mut assigned, &mut used, other, &mine, &theirs)
    }

    fn extend_iso(
        &self,
        a: usize,
        assigned: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        other: &Poset,
        mine: &[(usize, usize)],
        theirs: &[(usize, usize)],
    ) -> bool {
        if a == self.size {
            return true;
        }
        for b in 0..self.size {
            if used[b] || mine[a] != theirs[b] {
                continue;
            }
            let compatible = (0..a).all(|prev| {
                let pb = assigned[prev].unwrap();
                self.leq(prev, a) == other.leq(pb, b) && self.leq(a, prev) == other.leq(b, pb)
            });
            if compatible {
                assigned[a] = Some(b);
                used[b] = true;
                if self.extend_iso(a + 1, assigned, used, other, mine, theirs) {
                    return true;
                }
                assigned[a] = None;
                used[b] = false;
            }
        }
        false
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset(size {}, covers {:?})", self.size, self.covers())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(k: usize) -> Poset {
        Poset::from_leq(k, |a, b| a <= b)
    }

    fn antichain(k: usize) -> Poset {
        Poset::from_leq(k, |a, b| a == b)
    }

    #[test]
    fn chain_ideals() {
        assert_eq!(chain(0).order_ideals().len(), 1);
        assert_eq!(chain(3).order_ideals().len(), 4);
        assert_eq!(antichain(3).order_ideals().len(), 8);
    }

    #[test]
    fn ideal_lattice_of_antichain_is_boolean() {
        let b2 = antichain(2).ideal_lattice();
        assert_eq!(b2.size(), 4);
        assert_eq!(b2.covers().len(), 4);
    }

    #[test]
    fn isomorphism_detects_shape() {
        assert!(chain(4).is_isomorphic(&chain(4)));
        assert!(!chain(4).is_isomorphic(&antichain(4)));
        // The "V" poset and its dual are not isomorphic.
        let v = Poset::from_leq(3, |a, b| a == b || (a == 0 && b > 0));
        let dual_v = Poset::from_leq(3, |a, b| a == b || (a > 0 && b == 0));
        assert!(!v.is_isomorphic(&dual_v));
        // But relabelings are.
        let v2 = Poset::from_leq(3, |a, b| a == b || (a == 2 && b != 2));
        assert!(v.is_isomorphic(&v2));
    }
}
