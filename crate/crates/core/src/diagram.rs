//! Marked Dynkin sub-diagrams: connected components, type recognition,
//! inscribed-weight module diagrams, and the classification of top-slot
//! module patterns.

use crate::error::{Error, Result};
use crate::roots::{positive_roots_from_cartan, Family, Node, RootSystem};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::collections::{BTreeMap, BTreeSet};

/// A sub-diagram of the ambient Dynkin diagram, with nonnegative integer
/// coefficients inscribed over (some of) its nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleDiagram {
    /// Ambient node labels, sorted.
    pub nodes: Vec<Node>,
    /// Bonds `(i, j, c_ij, c_ji)` with `i < j`.
    pub edges: Vec<(Node, Node, i64, i64)>,
    /// Inscribed coefficient per node; absent means zero.
    pub inscribed: BTreeMap<Node, i64>,
    /// Half squared length per node, restricted from the ambient symmetrizer.
    pub d: BTreeMap<Node, i64>,
}

impl ModuleDiagram {
    /// The sub-diagram spanned by `nodes`, with inscriptions given by `weight`.
    pub fn new(rs: &RootSystem, nodes: &[Node], weight: &BTreeMap<Node, i64>) -> ModuleDiagram {
        let mut nodes: Vec<Node> = nodes.to_vec();
        nodes.sort_unstable();
        nodes.dedup();
        let mut edges = Vec::new();
        for (a, &i) in nodes.iter().enumerate() {
            for &j in &nodes[a + 1..] {
                let (cij, cji) = rs.bond(i, j);
                if cij != 0 {
                    edges.push((i, j, cij, cji));
                }
            }
        }
        let inscribed = weight
            .iter()
            .filter(|(n, _)| nodes.contains(n))
            .map(|(&n, &c)| (n, c))
            .collect();
        let d = nodes.iter().map(|&n| (n, rs.d(n))).collect();
        ModuleDiagram {
            nodes,
            edges,
            inscribed,
            d,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn inscription(&self, n: Node) -> i64 {
        self.inscribed.get(&n).copied().unwrap_or(0)
    }

    pub fn neighbors(&self, n: Node) -> Vec<Node> {
        self.edges
            .iter()
            .filter_map(|&(a, b, _, _)| {
                if a == n {
                    Some(b)
                } else if b == n {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Connected components, each as a ModuleDiagram with inherited data.
    pub fn components(&self) -> Vec<ModuleDiagram> {
        let mut seen: BTreeSet<Node> = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.nodes {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(n) = stack.pop() {
                for m in self.neighbors(n) {
                    if seen.insert(m) {
                        comp.push(m);
                        stack.push(m);
                    }
                }
            }
            comp.sort_unstable();
            let edges = self
                .edges
                .iter()
                .filter(|(a, _, _, _)| comp.contains(a))
                .copied()
                .collect();
            let inscribed = self
                .inscribed
                .iter()
                .filter(|(n, _)| comp.contains(n))
                .map(|(&n, &c)| (n, c))
                .collect();
            let d = self
                .d
                .iter()
                .filter(|(n, _)| comp.contains(n))
                .map(|(&n, &c)| (n, c))
                .collect();
            out.push(ModuleDiagram {
                nodes: comp,
                edges,
                inscribed,
                d,
            });
        }
        out
    }

    /// Keep only the connected components carrying a nonzero coefficient.
    pub fn support(&self) -> Vec<ModuleDiagram> {
        self.components()
            .into_iter()
            .filter(|c| c.inscribed.values().any(|&v| v != 0))
            .collect()
    }

    pub fn has_nonzero(&self) -> bool {
        self.inscribed.values().any(|&v| v != 0)
    }

    /// Recognize the abstract simple type of this connected diagram and
    /// return it with the canonical Bourbaki numbering of its nodes
    /// (`numbering[p]` = ambient node at canonical position p+1).
    ///
    /// A two-node double bond is reported as B2 (alias C2); the canonical
    /// numbering then puts the long node first.
    pub fn classify(&self) -> Option<(Family, usize, Vec<Node>)> {
        let n = self.nodes.len();
        if n == 0 {
            return None;
        }
        if n == 1 {
            return Some((Family::A, 1, self.nodes.clone()));
        }
        let multiplicity = |e: &(Node, Node, i64, i64)| (e.2 * e.3).abs();
        let max_mult = self.edges.iter().map(multiplicity).max().unwrap_or(0);
        let degree = |v: Node| self.neighbors(v).len();
        let forks: Vec<Node> = self.nodes.iter().copied().filter(|&v| degree(v) >= 3).collect();
        if max_mult == 3 {
            // G2: short node first in Bourbaki order
            let (a, b, _, _) = self.edges[0];
            let (short, long) = if self.d[&a] < self.d[&b] { (a, b) } else { (b, a) };
            return Some((Family::G, 2, vec![short, long]));
        }
        if max_mult == 2 {
            if !forks.is_empty() || n < 2 {
                return None;
            }
            let path = self.path_order()?;
            let shorts: Vec<Node> = self
                .nodes
                .iter()
                .copied()
                .filter(|v| self.d[v] < *self.d.values().max().unwrap())
                .collect();
            let longs = n - shorts.len();
            // Orientations: B has a single short node at one end, C a single
            // long node at one end, F4 two and two.
            let ordered = |path: Vec<Node>, last_is: &dyn Fn(Node) -> bool| {
                if last_is(*path.last().unwrap()) {
                    Some(path)
                } else if last_is(path[0]) {
                    Some(path.into_iter().rev().collect())
                } else {
                    None
                }
            };
            if shorts.len() == 1 {
                let s = shorts[0];
                return ordered(path, &|v| v == s).map(|p| (Family::B, n, p));
            }
            if longs == 1 {
                let l = *self
                    .nodes
                    .iter()
                    .find(|v| self.d[v] == *self.d.values().max().unwrap())
                    .unwrap();
                return ordered(path, &|v| v == l).map(|p| (Family::C, n, p));
            }
            if n == 4 && shorts.len() == 2 {
                let p = if self.d[&path[0]] > self.d[&path[3]] {
                    path
                } else {
                    path.into_iter().rev().collect()
                };
                return Some((Family::F, 4, p));
            }
            return None;
        }
        // simply laced
        match forks.len() {
            0 => {
                let path = self.path_order()?;
                // pick the lexicographically smaller of the two orientations
                let rev: Vec<Node> = path.iter().rev().copied().collect();
                Some((Family::A, n, if path <= rev { path } else { rev }))
            }
            1 => {
                let f = forks[0];
                let mut legs: Vec<Vec<Node>> = self
                    .neighbors(f)
                    .into_iter()
                    .map(|start| self.walk_leg(f, start))
                    .collect();
                if legs.len() != 3 {
                    return None;
                }
                legs.sort_by_key(|l| (l.len(), l.clone()));
                let (a, b, c) = (legs[0].len(), legs[1].len(), legs[2].len());
                if a == 1 && b == 1 {
                    // D_n: long leg is 1..n-2 ending at the fork, tips are n-1, n
                    let mut numbering: Vec<Node> =
                        legs[2].iter().rev().copied().collect();
                    numbering.push(f);
                    numbering.push(legs[0][0]);
                    numbering.push(legs[1][0]);
                    Some((Family::D, n, numbering))
                } else if a == 1 && b == 2 && (2..=4).contains(&c) {
                    // E_n: chain 1-3-4-...-n, node 2 on the middle leg
                    let mut numbering = vec![0; n];
                    numbering[0] = legs[1][1];
                    numbering[2] = legs[1][0];
                    numbering[3] = f;
                    numbering[1] = legs[0][0];
                    for (idx, &v) in legs[2].iter().enumerate() {
                        numbering[4 + idx] = v;
                    }
                    Some((Family::E, n, numbering))
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Order the nodes of a path-shaped diagram from one end to the other.
    fn path_order(&self) -> Option<Vec<Node>> {
        if self.nodes.len() == 1 {
            return Some(self.nodes.clone());
        }
        let ends: Vec<Node> = self
            .nodes
            .iter()
            .copied()
            .filter(|&v| self.neighbors(v).len() == 1)
            .collect();
        if ends.len() != 2 {
            return None;
        }
        let start = *ends.iter().min().unwrap();
        let mut order = vec![start];
        let mut prev = start;
        let mut cur = self.neighbors(start)[0];
        loop {
            order.push(cur);
            let next: Vec<Node> = self.neighbors(cur).into_iter().filter(|&v| v != prev).collect();
            match next.as_slice() {
                [] => break,
                [v] => {
                    prev = cur;
                    cur = *v;
                }
                _ => return None,
            }
        }
        if order.len() == self.nodes.len() {
            Some(order)
        } else {
            None
        }
    }

    /// Walk a fork leg outward, starting from the fork's neighbor.
    fn walk_leg(&self, fork: Node, start: Node) -> Vec<Node> {
        let mut leg = vec![start];
        let mut prev = fork;
        let mut cur = start;
        loop {
            let next: Vec<Node> = self.neighbors(cur).into_iter().filter(|&v| v != prev).collect();
            match next.as_slice() {
                [v] => {
                    prev = cur;
                    cur = *v;
                    leg.push(cur);
                }
                _ => break,
            }
        }
        leg
    }

    /// Type label such as "A3" or "B2", for display.
    pub fn type_label(&self) -> String {
        match self.classify() {
            Some((f, r, _)) => format!("{}{}", f.letter(), r),
            None => "?".to_string(),
        }
    }

    /// Dimension of the irreducible representation of this (possibly
    /// disconnected) semisimple diagram with the inscribed dominant weight,
    /// by the Weyl dimension formula over the sub-root-system.
    pub fn dim_irrep(&self) -> BigInt {
        let mut dim = BigRational::one();
        for comp in self.components() {
            dim *= comp.dim_irrep_connected();
        }
        assert!(dim.is_integer(), "Weyl dimension must be an integer");
        dim.to_integer()
    }

    fn dim_irrep_connected(&self) -> BigRational {
        let n = self.nodes.len();
        let index_of: BTreeMap<Node, usize> =
            self.nodes.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut cartan = vec![vec![0i64; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b, cab, cba) in &self.edges {
            cartan[index_of[&a]][index_of[&b]] = cab;
            cartan[index_of[&b]][index_of[&a]] = cba;
        }
        let positives = positive_roots_from_cartan(&cartan);
        let d: Vec<i64> = self.nodes.iter().map(|v| self.d[v]).collect();
        let lam: Vec<i64> = self.nodes.iter().map(|v| self.inscription(*v)).collect();
        // <mu, alpha> for alpha = sum m_j alpha_j equals sum_j m_j d_j <mu, alpha_j_check>
        let eval = |labels: &dyn Fn(usize) -> i64, alpha: &[i64]| -> i64 {
            (0..n).map(|j| alpha[j] * d[j] * labels(j)).sum()
        };
        let mut out = BigRational::one();
        for alpha in &positives {
            let num = eval(&|j| lam[j] + 1, &alpha.0);
            let den = eval(&|_| 1, &alpha.0);
            out *= BigRational::new(BigInt::from(num), BigInt::from(den));
        }
        out
    }

    /// Apply the duality involution componentwise: the nontrivial diagram
    /// automorphism for components of type A (rank >= 2), D with odd rank,
    /// and E6; the identity otherwise.
    pub fn dualized(&self) -> ModuleDiagram {
        let mut out = self.clone();
        out.inscribed.clear();
        for comp in self.components() {
            let map: BTreeMap<Node, Node> = match comp.classify() {
                Some((Family::A, r, numbering)) if r >= 2 => numbering
                    .iter()
                    .zip(numbering.iter().rev())
                    .map(|(&a, &b)| (a, b))
                    .collect(),
                Some((Family::D, r, numbering)) if r % 2 == 1 => {
                    let mut m: BTreeMap<Node, Node> =
                        numbering.iter().map(|&v| (v, v)).collect();
                    m.insert(numbering[r - 2], numbering[r - 1]);
                    m.insert(numbering[r - 1], numbering[r - 2]);
                    m
                }
                Some((Family::E, 6, numbering)) => {
                    // flip 1<->6, 3<->5
                    let mut m: BTreeMap<Node, Node> =
                        numbering.iter().map(|&v| (v, v)).collect();
                    m.insert(numbering[0], numbering[5]);
                    m.insert(numbering[5], numbering[0]);
                    m.insert(numbering[2], numbering[4]);
                    m.insert(numbering[4], numbering[2]);
                    m
                }
                _ => comp.nodes.iter().map(|&v| (v, v)).collect(),
            };
            for (&n, &c) in &comp.inscribed {
                if c != 0 {
                    out.inscribed.insert(map[&n], c);
                }
            }
        }
        out
    }

    /// Render like "(1)–(0)=>(3)" is overkill; we print nodes with
    /// inscriptions, e.g. "A2[1,0]".
    pub fn short_display(&self) -> String {
        let comps = self.components();
        if comps.is_empty() {
            return "empty".to_string();
        }
        comps
            .iter()
            .map(|c| {
                let label = c.type_label();
                match c.classify() {
                    Some((_, _, numbering)) => {
                        let ins: Vec<String> = numbering
                            .iter()
                            .map(|v| c.inscription(*v).to_string())
                            .collect();
                        format!("{label}[{}]", ins.join(","))
                    }
                    None => label,
                }
            })
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

/// The module patterns a top slot can realize; projectivizations carry the
/// listed number of reductive-group orbits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopSlotPattern {
    /// Empty support: the top slot is one-dimensional.
    Trivial,
    /// Full vector representation of A_n: projective space, a single orbit.
    Projective { n: usize },
    /// C^a boxtimes C^b for two type-A factors (Segre).
    Segre { a: usize, b: usize },
    /// Vector representation of B_m (odd quadric).
    QuadricOdd { m: usize },
    /// Vector representation of D_m (even quadric).
    QuadricEven { m: usize },
    /// Symmetric square S^2 C^m (Veronese).
    Veronese { m: usize },
    /// Exterior square Lambda^2 C^m (Grassmannian of planes).
    Grassmannian { m: usize },
    /// 16-dimensional spinor representation of D5.
    Spinor10,
    /// 27-dimensional representation of E6.
    Exceptional27,
}

impl TopSlotPattern {
    /// Number of orbits in the projectivized module.
    pub fn orbits(self) -> usize {
        match self {
            TopSlotPattern::Trivial | TopSlotPattern::Projective { .. } => 1,
            TopSlotPattern::Segre { a, b } => a.min(b),
            TopSlotPattern::QuadricOdd { .. } | TopSlotPattern::QuadricEven { .. } => 2,
            TopSlotPattern::Veronese { m } => m,
            TopSlotPattern::Grassmannian { m } => m / 2,
            TopSlotPattern::Spinor10 => 2,
            TopSlotPattern::Exceptional27 => 3,
        }
    }

    /// Cascade termination: no orthogonal top-slot root remains.
    pub fn is_terminal(self) -> bool {
        self.orbits() == 1
    }

    pub fn name(self) -> String {
        match self {
            TopSlotPattern::Trivial => "trivial".into(),
            TopSlotPattern::Projective { n } => format!("P^{}", n),
            TopSlotPattern::Segre { a, b } => format!("Seg(P^{} x P^{})", a - 1, b - 1),
            TopSlotPattern::QuadricOdd { m } => format!("Q^{}", 2 * m - 1),
            TopSlotPattern::QuadricEven { m } => format!("Q^{}", 2 * m - 2),
            TopSlotPattern::Veronese { m } => format!("v2(P^{})", m - 1),
            TopSlotPattern::Grassmannian { m } => format!("Gr(2,{})", m),
            TopSlotPattern::Spinor10 => "S5".into(),
            TopSlotPattern::Exceptional27 => "OP^2".into(),
        }
    }
}

/// Classify a support diagram (the output of the top-slot recipe) as one of
/// the sub-cominuscule patterns.
pub fn classify_top_slot(support: &[ModuleDiagram]) -> Result<TopSlotPattern> {
    let bad = || Error::InternalMismatch("top slot is not sub-cominuscule".into());
    match support {
        [] => Ok(TopSlotPattern::Trivial),
        [one] => classify_single(one).ok_or_else(bad),
        [x, y] => {
            let a = projective_size(x).ok_or_else(bad)?;
            let b = projective_size(y).ok_or_else(bad)?;
            Ok(TopSlotPattern::Segre { a: a + 1, b: b + 1 })
        }
        _ => Err(bad()),
    }
}

/// For an A-chain with a single 1 inscribed at an end, its projective
/// dimension n; None otherwise.
fn projective_size(c: &ModuleDiagram) -> Option<usize> {
    let (family, rank, numbering) = c.classify()?;
    if family != Family::A {
        return None;
    }
    let labels: Vec<i64> = numbering.iter().map(|v| c.inscription(*v)).collect();
    let mut nonzero = labels.iter().enumerate().filter(|(_, &v)| v != 0);
    let (pos, &val) = nonzero.next()?;
    if nonzero.next().is_some() || val != 1 {
        return None;
    }
    if pos == 0 || pos == rank - 1 {
        Some(rank)
    } else {
        None
    }
}

fn classify_single(c: &ModuleDiagram) -> Option<TopSlotPattern> {
    let (family, rank, numbering) = c.classify()?;
    let labels: Vec<i64> = numbering.iter().map(|v| c.inscription(*v)).collect();
    let mut nz = labels.iter().enumerate().filter(|(_, &v)| v != 0);
    let (pos, &val) = nz.next()?;
    if nz.next().is_some() {
        return None;
    }
    // position from the natural end, 0-based
    match family {
        Family::A => {
            let p = pos.min(rank - 1 - pos);
            match (p, val) {
                (0, 1) => Some(TopSlotPattern::Projective { n: rank }),
                (0, 2) => Some(TopSlotPattern::Veronese { m: rank + 1 }),
                (1, 1) => Some(TopSlotPattern::Grassmannian { m: rank + 1 }),
                _ => None,
            }
        }
        Family::B if pos == 0 && val == 1 => Some(TopSlotPattern::QuadricOdd { m: rank }),
        Family::D => {
            if val != 1 {
                return None;
            }
            if pos == 0 {
                Some(TopSlotPattern::QuadricEven { m: rank })
            } else if rank == 4 && pos >= 2 {
                // triality: every outer node of D4 carries the 8-dimensional module
                Some(TopSlotPattern::QuadricEven { m: 4 })
            } else if rank == 5 && pos >= 3 {
                Some(TopSlotPattern::Spinor10)
            } else {
                None
            }
        }
        Family::E if rank == 6 && val == 1 && (pos == 0 || pos == 5) => {
            Some(TopSlotPattern::Exceptional27)
        }
        _ => None,
    }
}
