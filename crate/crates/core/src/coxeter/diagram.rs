//! Coxeter diagrams: the symmetric label matrix m_ij, named finite types,
//! the text grammar used by the CLI, and the classification of finite types.

use std::fmt;

use thiserror::Error;

/// A Coxeter matrix entry m_ij.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Bond {
    Finite(u32),
    Infinite,
}

impl Bond {
    pub fn finite(self) -> Option<u32> {
        match self {
            Bond::Finite(m) => Some(m),
            Bond::Infinite => None,
        }
    }

    /// Whether this bond is an edge of the diagram (m ≥ 3).
    pub fn is_edge(self) -> bool {
        match self {
            Bond::Finite(m) => m >= 3,
            Bond::Infinite => true,
        }
    }
}

impl fmt::Display for Bond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bond::Finite(m) => write!(f, "{m}"),
            Bond::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Error)]
pub enum DiagramError {
    #[error("cannot parse diagram `{0}`")]
    Parse(String),
    #[error("invalid diagram: {0}")]
    Invalid(String),
}

/// A rank-n Coxeter diagram: generators 0..n with labels m_ij.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoxeterDiagram {
    rank: usize,
    labels: Vec<Vec<Bond>>,
}

impl fmt::Debug for CoxeterDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterDiagram({})", self.to_spec_string())
    }
}

impl CoxeterDiagram {
    /// Builds a diagram from a full label matrix, checking symmetry and the
    /// m_ii = 1, m_ij ≥ 2 conventions.
    pub fn from_labels(labels: Vec<Vec<Bond>>) -> Result<Self, DiagramError> {
        let rank = labels.len();
        if rank == 0 {
            return Err(DiagramError::Invalid("rank must be positive".into()));
        }
        for (i, row) in labels.iter().enumerate() {
            if row.len() != rank {
                return Err(DiagramError::Invalid("label matrix is not square".into()));
            }
            if row[i] != Bond::Finite(1) {
                return Err(DiagramError::Invalid(format!("m_{{{i},{i}}} must be 1")));
            }
            for (j, &m) in row.iter().enumerate() {
                if i != j {
                    if labels[j][i] != m {
                        return Err(DiagramError::Invalid("label matrix is not symmetric".into()));
                    }
                    if matches!(m, Bond::Finite(m) if m < 2) {
                        return Err(DiagramError::Invalid(format!(
                            "m_{{{i},{j}}} must be at least 2"
                        )));
                    }
                }
            }
        }
        Ok(CoxeterDiagram { rank, labels })
    }

    /// Builds a diagram of given rank from an edge list (i, j, m) with
    /// 0-based indices; unlisted pairs get m = 2.
    pub fn from_edges(rank: usize, edges: &[(usize, usize, Bond)]) -> Result<Self, DiagramError> {
        if rank == 0 {
            return Err(DiagramError::Invalid("rank must be positive".into()));
        }
        let mut labels = vec![vec![Bond::Finite(2); rank]; rank];
        for (i, row) in labels.iter_mut().enumerate() {
            row[i] = Bond::Finite(1);
        }
        for &(i, j, m) in edges {
            if i >= rank || j >= rank || i == j {
                return Err(DiagramError::Invalid(format!("bad edge {i}-{j}")));
            }
            if labels[i][j] != Bond::Finite(2) {
                return Err(DiagramError::Invalid(format!("duplicate edge {i}-{j}")));
            }
            if matches!(m, Bond::Finite(m) if m < 2) {
                return Err(DiagramError::Invalid(format!("label on {i}-{j} must be ≥ 2")));
            }
            labels[i][j] = m;
            labels[j][i] = m;
        }
        Self::from_labels(labels)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self, i: usize, j: usize) -> Bond {
        self.labels[i][j]
    }

    /// Diagram edges (i < j, m ≥ 3) in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize, Bond)> {
        let mut out = vec![];
        for i in 0..self.rank {
            for j in (i + 1)..self.rank {
                if self.labels[i][j].is_edge() {
                    out.push((i, j, self.labels[i][j]));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.rank)
            .filter(|&j| j != i && self.labels[i][j].is_edge())
            .collect()
    }

    /// Parses the diagram grammar: a named type (`A3`, `B4`, `I2(7)`, `tC2`,
    /// `E6`, `F4`, `H3`, …) or an explicit edge list
    /// `rank=3; 1-2:3; 2-3:5` with 1-based generators and `inf` labels
    /// allowed. Whitespace-insensitive, case-insensitive.
    pub fn parse(input: &str) -> Result<Self, DiagramError> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let lower = compact.to_ascii_lowercase();
        if lower.is_empty() {
            return Err(DiagramError::Parse(input.into()));
        }
        if let Some(rest) = lower.strip_prefix("rank=") {
            return Self::parse_explicit(rest).map_err(|_| DiagramError::Parse(input.into()));
        }
        if lower == "tc2" {
            return Self::affine_c2();
        }
        if let Some(arg) = lower.strip_prefix("i2(").and_then(|s| s.strip_suffix(')')) {
            let k: u32 = arg.parse().map_err(|_| DiagramError::Parse(input.into()))?;
            return Self::type_i2(k);
        }
        let (head, tail) = lower.split_at(1);
        let n: usize = tail.parse().map_err(|_| DiagramError::Parse(input.into()))?;
        match head {
            "a" => Self::type_a(n),
            "b" => Self::type_b(n),
            "d" => Self::type_d(n),
            "e" => Self::type_e(n),
            "f" if n == 4 => Self::type_f4(),
            "h" => Self::type_h(n),
            _ => Err(DiagramError::Parse(input.into())),
        }
    }

    fn parse_explicit(rest: &str) -> Result<Self, DiagramError> {
        let mut parts = rest.split(';');
        let rank: usize = parts
            .next()
            .ok_or_else(|| DiagramError::Parse(rest.into()))?
            .parse()
            .map_err(|_| DiagramError::Parse(rest.into()))?;
        let mut edges = vec![];
        for part in parts {
            if part.is_empty() {
                continue;
            }
            let (pair, label) = part
                .split_once(':')
                .ok_or_else(|| DiagramError::Parse(part.into()))?;
            let (a, b) = pair
                .split_once('-')
                .ok_or_else(|| DiagramError::Parse(part.into()))?;
            let i: usize = a.parse().map_err(|_| DiagramError::Parse(part.into()))?;
            let j: usize = b.parse().map_err(|_| DiagramError::Parse(part.into()))?;
            if i == 0 || j == 0 {
                return Err(DiagramError::Parse(part.into()));
            }
            let m = if label == "inf" {
                Bond::Infinite
            } else {
                Bond::Finite(label.parse().map_err(|_| DiagramError::Parse(part.into()))?)
            };
            edges.push((i - 1, j - 1, m));
        }
        Self::from_edges(rank, &edges)
    }

    fn path(rank: usize, labels: &[u32]) -> Result<Self, DiagramError> {
        let edges: Vec<_> = labels
            .iter()
            .enumerate()
            .map(|(i, &m)| (i, i + 1, Bond::Finite(m)))
            .collect();
        Self::from_edges(rank, &edges)
    }

    pub fn type_a(n: usize) -> Result<Self, DiagramError> {
        if n < 1 {
            return Err(DiagramError::Invalid("A_n needs n ≥ 1".into()));
        }
        Self::path(n, &vec![3; n - 1])
    }

    pub fn type_b(n: usize) -> Result<Self, DiagramError> {
        if n < 2 {
            return Err(DiagramError::Invalid("B_n needs n ≥ 2".into()));
        }
        let mut labels = vec![3; n - 1];
        labels[n - 2] = 4;
        Self::path(n, &labels)
    }

    pub fn type_d(n: usize) -> Result<Self, DiagramError> {
        if n < 4 {
            return Err(DiagramError::Invalid("D_n needs n ≥ 4".into()));
        }
        let mut edges: Vec<_> = (0..n - 3)
            .map(|i| (i, i + 1, Bond::Finite(3)))
            .collect();
        edges.push((n - 3, n - 2, Bond::Finite(3)));
        edges.push((n - 3, n - 1, Bond::Finite(3)));
        Self::from_edges(n, &edges)
    }

    pub fn type_e(n: usize) -> Result<Self, DiagramError> {
        if !(6..=8).contains(&n) {
            return Err(DiagramError::Invalid("E_n needs n ∈ {6,7,8}".into()));
        }
        let mut edges: Vec<_> = (0..n - 2)
            .map(|i| (i, i + 1, Bond::Finite(3)))
            .collect();
        edges.push((2, n - 1, Bond::Finite(3)));
        Self::from_edges(n, &edges)
    }

    pub fn type_f4() -> Result<Self, DiagramError> {
        Self::path(4, &[3, 4, 3])
    }

    pub fn type_h(n: usize) -> Result<Self, DiagramError> {
        match n {
            3 => Self::path(3, &[3, 5]),
            4 => Self::path(4, &[3, 3, 5]),
            _ => Err(DiagramError::Invalid("H_n needs n ∈ {3,4}".into())),
        }
    }

    pub fn type_i2(k: u32) -> Result<Self, DiagramError> {
        if k < 3 {
            return Err(DiagramError::Invalid("I2(k) needs k ≥ 3".into()));
        }
        Self::from_edges(2, &[(0, 1, Bond::Finite(k))])
    }

    /// The affine diagram C̃2: a path with both edges labeled 4.
    pub fn affine_c2() -> Result<Self, DiagramError> {
        Self::path(3, &[4, 4])
    }

    /// Canonical explicit-grammar rendering, with 1-based generators.
    pub fn to_spec_string(&self) -> String {
        let mut s = format!("rank={}", self.rank);
        for (i, j, m) in self.edges() {
            s.push_str(&format!("; {}-{}:{}", i + 1, j + 1, m));
        }
        s
    }

    /// Classification of each connected component as a finite irreducible
    /// type; `None` if any component is not of finite type.
    pub fn classify(&self) -> Option<Vec<FiniteType>> {
        let mut seen = vec![false; self.rank];
        let mut out = vec![];
        for start in 0..self.rank {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            out.push(self.classify_component(&comp)?);
        }
        Some(out)
    }

    fn classify_component(&self, comp: &[usize]) -> Option<FiniteType> {
        let n = comp.len();
        if n == 1 {
            return Some(FiniteType::A(1));
        }
        let mut edges = vec![];
        for (a, &i) in comp.iter().enumerate() {
            for &j in &comp[a + 1..] {
                if self.labels[i][j].is_edge() {
                    edges.push((i, j, self.labels[i][j].finite()?));
                }
            }
        }
        // A connected finite-type diagram is a tree.
        if edges.len() != n - 1 {
            return None;
        }
        if n == 2 {
            return match edges[0].2 {
                3 => Some(FiniteType::A(2)),
                4 => Some(FiniteType::B(2)),
                k if k >= 5 => Some(FiniteType::I2(k)),
                _ => None,
            };
        }
        let degree = |v: usize| {
            edges
                .iter()
                .filter(|&&(i, j, _)| i == v || j == v)
                .count()
        };
        let branch: Vec<usize> = comp.iter().copied().filter(|&v| degree(v) >= 3).collect();
        let labelled: Vec<&(usize, usize, u32)> = edges.iter().filter(|e| e.2 > 3).collect();
        if branch.len() > 1 || comp.iter().any(|&v| degree(v) > 3) {
            return None;
        }
        if branch.is_empty() {
            // A path. Walk it from one end.
            let end = comp.iter().copied().find(|&v| degree(v) == 1)?;
            let path = self.walk_path(end, &edges, n)?;
            let path_labels: Vec<u32> = path
                .windows(2)
                .map(|w| self.labels[w[0]][w[1]].finite().unwrap())
                .collect();
            let rev: Vec<u32> = path_labels.iter().rev().copied().collect();
            let canon = path_labels.clone().min(rev);
            if canon.iter().all(|&m| m == 3) {
                return Some(FiniteType::A(n));
            }
            if labelled.len() != 1 {
                return None;
            }
            let mut body = canon.clone();
            let last = body.pop().unwrap();
            if body.iter().all(|&m| m == 3) {
                match last {
                    4 => return Some(FiniteType::B(n)),
                    5 if n == 3 => return Some(FiniteType::H3),
                    5 if n == 4 => return Some(FiniteType::H4),
                    _ => {}
                }
            }
            if n == 4 && canon == vec![3, 4, 3] {
                return Some(FiniteType::F4);
            }
            return None;
        }
        // One branch vertex: D or E shapes, all labels 3.
        if !labelled.is_empty() {
            return None;
        }
        let center = branch[0];
        let mut arms: Vec<usize> = self
            .neighbors(center)
            .into_iter()
            .map(|first| self.arm_length(center, first, &edges))
            .collect::<Option<Vec<_>>>()?;
        arms.sort_unstable();
        match arms.as_slice() {
            [1, 1, _] => Some(FiniteType::D(n)),
            [1, 2, 2] => Some(FiniteType::E(6)),
            [1, 2, 3] => Some(FiniteType::E(7)),
            [1, 2, 4] => Some(FiniteType::E(8)),
            _ => None,
        }
    }

    fn walk_path(&self, start: usize, edges: &[(usize, usize, u32)], n: usize) -> Option<Vec<usize>> {
        let mut path = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while path.len() < n {
            let next = edges
                .iter()
                .find_map(|&(i, j, _)| {
                    if i == cur && j != prev {
                        Some(j)
                    } else if j == cur && i != prev {
                        Some(i)
                    } else {
                        None
                    }
                })?;
            path.push(next);
            prev = cur;
            cur = next;
        }
        Some(path)
    }

    /// Length of the arm starting at `first`, walking away from `center`.
    fn arm_length(&self, center: usize, first: usize, edges: &[(usize, usize, u32)]) -> Option<usize> {
        let mut len = 1;
        let mut prev = center;
        let mut cur = first;
        loop {
            let next: Vec<usize> = edges
                .iter()
                .filter_map(|&(i, j, _)| {
                    if i == cur && j != prev {
                        Some(j)
                    } else if j == cur && i != prev {
                        Some(i)
                    } else {
                        None
                    }
                })
                .collect();
            match next.as_slice() {
                [] => return Some(len),
                [v] => {
                    prev = cur;
                    cur = *v;
                    len += 1;
                }
                _ => return None,
            }
        }
    }

    /// Whether every component is of finite type.
    pub fn is_finite_type(&self) -> bool {
        self.classify().is_some()
    }

    /// The order of the Coxeter group, if finite.
    pub fn group_order(&self) -> Option<u128> {
        let mut order: u128 = 1;
        for t in self.classify()? {
            order = order.checked_mul(t.order())?;
        }
        Some(order)
    }
}

/// The finite irreducible types.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H3,
    H4,
    I2(u32),
}

impl FiniteType {
    pub fn order(self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match self {
            FiniteType::A(n) => fact(n + 1),
            FiniteType::B(n) => (1u128 << n) * fact(n),
            FiniteType::D(n) => (1u128 << (n - 1)) * fact(n),
            FiniteType::E(6) => 51_840,
            FiniteType::E(7) => 2_903_040,
            FiniteType::E(8) => 696_729_600,
            FiniteType::E(_) => unreachable!(),
            FiniteType::F4 => 1_152,
            FiniteType::H3 => 120,
            FiniteType::H4 => 14_400,
            FiniteType::I2(k) => 2 * k as u128,
        }
    }
}
