//! The geometric representation: simple reflections acting on the
//! simple-root basis, exact word reduction via root tracking, lengths and
//! descent sets.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num::{BigInt, BigRational, One};

use super::diagram::{Bond, CoxeterDiagram};
use crate::exactreal::{FieldElement, RealCycloField};

/// A square matrix over the field, row-major. Columns are images of the
/// simple roots.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn identity(field: &Arc<RealCycloField>, n: usize) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(if i == j { field.one() } else { field.zero() });
            }
        }
        Matrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &FieldElement {
        &self.entries[row * self.n + col]
    }

    fn set(&mut self, row: usize, col: usize, value: FieldElement) {
        self.entries[row * self.n + col] = value;
    }

    pub fn column(&self, col: usize) -> Vec<FieldElement> {
        (0..self.n).map(|row| self.get(row, col).clone()).collect()
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n);
        let field = self.entries[0].field().clone();
        let zero = field.zero();
        let mut out = Matrix {
            n: self.n,
            entries: vec![zero; self.n * self.n],
        };
        for i in 0..self.n {
            for j in 0..self.n {
                let mut acc = field.zero();
                for k in 0..self.n {
                    if self.get(i, k).is_zero() || rhs.get(k, j).is_zero() {
                        continue;
                    }
                    acc = &acc + &(self.get(i, k) * rhs.get(k, j));
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}

impl Hash for Matrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.entries.hash(state);
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix[")?;
        for i in 0..self.n {
            let row: Vec<f64> = (0..self.n).map(|j| self.get(i, j).to_f64()).collect();
            writeln!(f, "  {row:?}")?;
        }
        write!(f, "]")
    }
}

/// Whether a vector in the root orbit is a positive or negative root.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootSign {
    Positive,
    Negative,
}

/// Classifies a root vector by coordinate signs; panics on mixed signs,
/// which would indicate the vector is not a root.
pub fn root_sign(coords: &[FieldElement]) -> RootSign {
    root_sign_iter(coords.iter())
}

fn root_sign_iter<'a>(coords: impl Iterator<Item = &'a FieldElement>) -> RootSign {
    let mut sign = 0i8;
    for c in coords {
        let s = c.signum();
        if s != 0 {
            if sign == 0 {
                sign = s;
            } else {
                assert_eq!(sign, s, "mixed-sign vector is not a root");
            }
        }
    }
    assert_ne!(sign, 0, "zero vector is not a root");
    if sign > 0 {
        RootSign::Positive
    } else {
        RootSign::Negative
    }
}

/// [`root_sign`] of a matrix column, without materializing the column.
pub(crate) fn column_root_sign(m: &Matrix, col: usize) -> RootSign {
    root_sign_iter((0..m.size()).map(|row| m.get(row, col)))
}

/// A Coxeter group in its geometric representation: the bilinear form
/// B_ij = −cos(π/m_ij) and the simple reflections v ↦ v − 2B(α_i, v)α_i,
/// all over a single exact field ℚ(2cos(π/N)) with N = lcm of the finite
/// labels.
pub struct CoxeterGroup {
    diagram: CoxeterDiagram,
    field: Arc<RealCycloField>,
    bilinear: Vec<Vec<FieldElement>>,
    /// Per generator i: (j, −2B_ij) for each j ≠ i with B_ij ≠ 0.
    row_coefs: Vec<Vec<(usize, FieldElement)>>,
}

impl fmt::Debug for CoxeterGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterGroup({:?})", self.diagram)
    }
}

impl CoxeterGroup {
    pub fn new(diagram: CoxeterDiagram) -> Arc<Self> {
        let mut n_lcm: u32 = 2;
        for (_, _, bond) in diagram.edges() {
            if let Bond::Finite(m) = bond {
                n_lcm = lcm(n_lcm, m);
            }
        }
        let field = RealCycloField::new(n_lcm);
        let rank = diagram.rank();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut bilinear = vec![vec![field.zero(); rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                bilinear[i][j] = if i == j {
                    field.one()
                } else {
                    match diagram.label(i, j) {
                        // −cos(π/m) = −2cos(π/m)/2 with 2cos(π/m) = 2cos((N/m)·π/N).
                        Bond::Finite(m) => {
                            let two_cos = field.embed_2cos(n_lcm / m);
                            -&(&two_cos * &field.from_rational(half.clone()))
                        }
                        Bond::Infinite => field.from_int(-1),
                    }
                };
            }
        }
        let mut row_coefs = vec![];
        for i in 0..rank {
            let mut coefs = vec![];
            for j in 0..rank {
                if j != i && !bilinear[i][j].is_zero() {
                    let minus_two_b = -&(&bilinear[i][j] + &bilinear[i][j]);
                    coefs.push((j, minus_two_b));
                }
            }
            row_coefs.push(coefs);
        }
        Arc::new(CoxeterGroup {
            diagram,
            field,
            bilinear,
            row_coefs,
        })
    }

    pub fn diagram(&self) -> &CoxeterDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn field(&self) -> &Arc<RealCycloField> {
        &self.field
    }

    /// The bilinear form entry B_ij.
    pub fn bilinear(&self, i: usize, j: usize) -> &FieldElement {
        &self.bilinear[i][j]
    }

    /// In-place m ← S_i · m (changes row i only).
    pub(crate) fn reflect_rows(&self, m: &mut Matrix, i: usize) {
        let n = m.n;
        for k in 0..n {
            let mut acc = -m.get(i, k);
            for (j, coef) in &self.row_coefs[i] {
                if !m.get(*j, k).is_zero() {
                    acc = &acc + &(coef * m.get(*j, k));
                }
            }
            m.set(i, k, acc);
        }
    }

    /// In-place m ← m · S_i (changes column i and neighbor columns).
    pub(crate) fn reflect_cols(&self, m: &mut Matrix, i: usize) {
        let old_col: Vec<FieldElement> = m.column(i);
        for (k, value) in old_col.iter().enumerate() {
            m.set(k, i, -value);
        }
        for (j, coef) in &self.row_coefs[i] {
            for (k, value) in old_col.iter().enumerate() {
                if !value.is_zero() {
                    let updated = &(coef * value) + m.get(k, *j);
                    m.set(k, *j, updated);
                }
            }
        }
    }

    pub fn identity(self: &Arc<Self>) -> GroupElement {
        let n = self.rank();
        GroupElement {
            action: Matrix::identity(&self.field, n),
            inv_action: Matrix::identity(&self.field, n),
            word: vec![],
        }
    }

    /// The simple reflection s_i as a group element.
    pub fn simple_reflection(self: &Arc<Self>, i: usize) -> GroupElement {
        assert!(i < self.rank(), "generator index {i} out of range");
        self.reduce_word(&[i])
    }

    /// Reduces an arbitrary word to a group element carrying a reduced word
    /// and the exact length.
    ///
    /// Tracks the root sequence r_t = (s_{i_1}⋯s_{i_{t−1}})(α_{i_t}); when
    /// appending s would send α_s to a negative root, the exchange condition
    /// locates the earlier position whose root is the negated image, that
    /// position is deleted, and s is skipped.
    pub fn reduce_word(self: &Arc<Self>, word: &[usize]) -> GroupElement {
        let n = self.rank();
        let mut letters: Vec<usize> = vec![];
        let mut action = Matrix::identity(&self.field, n);
        let mut inv_action = Matrix::identity(&self.field, n);
        let mut roots: Vec<Vec<FieldElement>> = vec![];
        for &s in word {
            assert!(s < n, "generator index {s} out of range");
            let image = action.column(s);
            match root_sign(&image) {
                RootSign::Positive => {
                    roots.push(image);
                    letters.push(s);
                    self.reflect_cols(&mut action, s);
                    self.reflect_rows(&mut inv_action, s);
                }
                RootSign::Negative => {
                    let negated: Vec<FieldElement> = image.iter().map(|c| -c).collect();
                    let t = roots
                        .iter()
                        .position(|r| *r == negated)
                        .expect("exchange condition: matching root must exist");
                    letters.remove(t);
                    // Rebuild the prefix data from the shortened word.
                    action = Matrix::identity(&self.field, n);
                    inv_action = Matrix::identity(&self.field, n);
                    roots.clear();
                    for &l in &letters {
                        roots.push(action.column(l));
                        self.reflect_cols(&mut action, l);
                        self.reflect_rows(&mut inv_action, l);
                    }
                }
            }
        }
        GroupElement {
            action,
            inv_action,
            word: letters,
        }
    }

    /// The Coxeter element for a permutation of the generators.
    pub fn coxeter_element(self: &Arc<Self>, order: &[usize]) -> GroupElement {
        let n = self.rank();
        let mut seen = vec![false; n];
        assert_eq!(order.len(), n, "Coxeter element word must use every generator once");
        for &i in order {
            assert!(i < n && !seen[i], "not a permutation of the generators");
            seen[i] = true;
        }
        let gamma = self.reduce_word(order);
        assert_eq!(gamma.length(), n, "Coxeter elements have length n");
        gamma
    }

    /// s_i · u.
    pub fn left_mul(self: &Arc<Self>, i: usize, u: &GroupElement) -> GroupElement {
        let mut word = vec![i];
        word.extend_from_slice(&u.word);
        self.reduce_word(&word)
    }

    /// u · s_i.
    pub fn right_mul(self: &Arc<Self>, u: &GroupElement, i: usize) -> GroupElement {
        let mut word = u.word.clone();
        word.push(i);
        self.reduce_word(&word)
    }

    pub fn multiply(self: &Arc<Self>, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let mut word = a.word.clone();
        word.extend_from_slice(&b.word);
        self.reduce_word(&word)
    }

    pub fn inverse(&self, u: &GroupElement) -> GroupElement {
        GroupElement {
            action: u.inv_action.clone(),
            inv_action: u.action.clone(),
            word: u.word.iter().rev().copied().collect(),
        }
    }

    /// ℓ(s_i u) < ℓ(u), decided by whether u⁻¹(α_i) is a negative root.
    pub fn is_left_descent(&self, u: &GroupElement, i: usize) -> bool {
        column_root_sign(&u.inv_action, i) == RootSign::Negative
    }

    /// The left descent set { i : ℓ(s_i u) < ℓ(u) }.
    pub fn left_descents(&self, u: &GroupElement) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| self.is_left_descent(u, i))
            .collect()
    }

    /// ℓ(u s_i) > ℓ(u), decided by whether u(α_i) is a positive root.
    pub fn lengthens_on_right(&self, u: &GroupElement, i: usize) -> bool {
        column_root_sign(&u.action, i) == RootSign::Positive
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    let gcd = {
        let (mut x, mut y) = (a, b);
        while y != 0 {
            let t = x % y;
            x = y;
            y = t;
        }
        x
    };
    a / gcd * b
}

/// A group element carrying its action and inverse-action matrices in the
/// geometric representation, plus a cached reduced word. Equality and
/// hashing go through the action matrix; words are not canonical.
#[derive(Clone)]
pub struct GroupElement {
    pub(crate) action: Matrix,
    pub(crate) inv_action: Matrix,
    word: Vec<usize>,
}

impl GroupElement {
    /// Assembles an element from incrementally maintained matrices and a
    /// word already known to be reduced.
    pub(crate) fn from_parts(action: Matrix, inv_action: Matrix, word: Vec<usize>) -> Self {
        GroupElement {
            action,
            inv_action,
            word,
        }
    }

    pub fn action(&self) -> &Matrix {
        &self.action
    }

    pub fn inv_action(&self) -> &Matrix {
        &self.inv_action
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.action.hash(state);
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            write!(f, "ε")
        } else {
            for &i in &self.word {
                write!(f, "s{}", i + 1)?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(spec: &str) -> Arc<CoxeterGroup> {
        CoxeterGroup::new(CoxeterDiagram::parse(spec).unwrap())
    }

    #[test]
    fn bilinear_form_entries() {
        let b2 = group("B2");
        // m = 4: B_01 = −cos(π/4) = −√2/2, so (2·B_01)² = 2.
        let twice = &(b2.bilinear(0, 1) + b2.bilinear(0, 1)) * &b2.field().one();
        assert_eq!(&twice * &twice, b2.field().from_int(2));
        assert!(b2.bilinear(0, 1).is_negative());

        let a2 = group("A2");
        // m = 3: B_01 = −1/2.
        assert_eq!(
            &(a2.bilinear(0, 1) + a2.bilinear(0, 1)) * &a2.field().one(),
            a2.field().from_int(-1)
        );

        let a1a1 = CoxeterGroup::new(CoxeterDiagram::from_edges(2, &[]).unwrap());
        // m = 2: B_01 = 0.
        assert!(a1a1.bilinear(0, 1).is_zero());

        let inf = group("rank=2;1-2:inf");
        assert_eq!(*inf.bilinear(0, 1), inf.field().from_int(-1));
    }

    #[test]
    fn simple_reflection_rank_one() {
        let a1 = group("A1");
        let s = a1.simple_reflection(0);
        assert_eq!(*s.action().get(0, 0), a1.field().from_int(-1));
        assert_eq!(s.length(), 1);
    }

    #[test]
    fn simple_reflection_a2_action() {
        let a2 = group("A2");
        let s1 = a2.simple_reflection(0);
        // α_1 ↦ −α_1
        assert_eq!(*s1.action().get(0, 0), a2.field().from_int(-1));
        assert_eq!(*s1.action().get(1, 0), a2.field().zero());
        // α_2 ↦ α_1 + α_2
        assert_eq!(*s1.action().get(0, 1), a2.field().one());
        assert_eq!(*s1.action().get(1, 1), a2.field().one());
    }

    #[test]
    fn reflections_are_involutions() {
        for spec in ["A3", "B2", "H3", "tC2", "rank=2;1-2:inf"] {
            let g = group(spec);
            for i in 0..g.rank() {
                let s = g.simple_reflection(i);
                let sq = g.multiply(&s, &s);
                assert!(sq.is_identity(), "{spec} s{i}");
            }
        }
    }

    #[test]
    fn reduce_word_examples() {
        let a2 = group("A2");
        assert_eq!(a2.reduce_word(&[0, 0]).length(), 0);
        // s1 s2 s1 s2 = s2 s1 in A2.
        let w = a2.reduce_word(&[0, 1, 0, 1]);
        assert_eq!(w.length(), 2);
        assert_eq!(w.word(), &[1, 0]);

        let b2 = group("B2");
        assert_eq!(b2.reduce_word(&[0, 1, 0, 1]).length(), 4);
        // Brute force: (s1 s2)^4 = ε in B2.
        assert!(b2.reduce_word(&[0, 1, 0, 1, 0, 1, 0, 1]).is_identity());
    }

    #[test]
    fn reduce_word_agrees_with_full_group_scan() {
        // Every element of A2 (6 elements) as unreduced products of length
        // ≤ 5: reduce_word must be constant on equal products.
        let a2 = group("A2");
        let mut words = vec![vec![]];
        for _ in 0..5 {
            let mut next = vec![];
            for w in &words {
                for i in 0..2 {
                    let mut v = w.clone();
                    v.push(i);
                    next.push(v);
                }
            }
            words.extend(next);
        }
        for w in &words {
            let red = a2.reduce_word(w);
            let naive = w
                .iter()
                .fold(a2.identity(), |acc, &i| a2.right_mul(&acc, i));
            assert_eq!(red, naive);
            assert_eq!(red.length(), naive.length());
        }
    }

    #[test]
    fn left_descent_examples() {
        let a2 = group("A2");
        assert!(a2.left_descents(&a2.identity()).is_empty());
        assert_eq!(a2.left_descents(&a2.simple_reflection(0)), vec![0]);
        let u = a2.reduce_word(&[0, 1]);
        assert_eq!(a2.left_descents(&u), vec![0]);
    }

    #[test]
    fn coxeter_element_examples() {
        let a1 = group("A1");
        assert_eq!(a1.coxeter_element(&[0]).length(), 1);
        let a3 = group("A3");
        assert_eq!(a3.coxeter_element(&[0, 1, 2]).length(), 3);
        let tc2 = group("tC2");
        assert_eq!(tc2.coxeter_element(&[0, 2, 1]).length(), 3);
    }

    #[test]
    #[should_panic(expected = "not a permutation")]
    fn coxeter_element_rejects_repeats() {
        let a2 = group("A2");
        a2.coxeter_element(&[0, 0]);
    }

    #[test]
    fn inverse_roundtrip() {
        let b3 = group("B3");
        let u = b3.reduce_word(&[0, 1, 2, 1, 0]);
        let inv = b3.inverse(&u);
        assert!(b3.multiply(&u, &inv).is_identity());
        assert_eq!(u.length(), inv.length());
    }
}
