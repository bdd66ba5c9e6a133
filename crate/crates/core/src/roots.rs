//! Exact root-system core for the complex simple types in Bourbaki ordering.
//!
//! Roots are stored as integer coefficient vectors in the simple-root basis;
//! general weights carry exact rational coefficients together with a tag
//! naming the basis they are expressed in (simple roots or fundamental
//! weights).  The symmetric pairing is normalized so that short simple roots
//! have squared length 2.  No floating point is used anywhere.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashSet;
use std::fmt;

/// Simple-type family letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }

    /// Supported rank range for this family.
    pub fn rank_range(self) -> std::ops::RangeInclusive<usize> {
        match self {
            Family::A => 1..=usize::MAX,
            Family::B | Family::C => 2..=usize::MAX,
            Family::D => 4..=usize::MAX,
            Family::E => 6..=8,
            Family::F => 4..=4,
            Family::G => 2..=2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// 1-based Dynkin node index, Bourbaki numbering.
pub type Node = usize;

/// A root, as integer coefficients over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(i: Node, rank: usize) -> Root {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Root(v)
    }

    pub fn coeff(&self, i: Node) -> i64 {
        self.0[i - 1]
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Support: nodes with nonzero coefficient.
    pub fn support(&self) -> Vec<Node> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Compact root notation, e.g. "122321"; multi-digit coefficients are
    /// bracketed and negative ones carry their sign.
    pub fn notation(&self) -> String {
        root_notation(&self.0)
    }
}

pub fn root_notation(coeffs: &[i64]) -> String {
    let compact = coeffs.iter().all(|&c| (0..=9).contains(&c));
    if compact {
        coeffs.iter().map(|c| c.to_string()).collect()
    } else {
        let inner: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", inner.join(","))
    }
}

/// Basis tag for weight vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Coefficients over the simple roots.
    Root,
    /// Coefficients over the fundamental weights (coroot pairings).
    Weight,
}

/// Exact rational coefficient vector tagged with its basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    pub coeffs: Vec<BigRational>,
    pub basis: Basis,
}

impl WeightVector {
    pub fn new(coeffs: Vec<BigRational>, basis: Basis) -> WeightVector {
        WeightVector { coeffs, basis }
    }

    pub fn from_ints(coeffs: &[i64], basis: Basis) -> WeightVector {
        WeightVector {
            coeffs: coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
            basis,
        }
    }

    pub fn from_root(root: &Root) -> WeightVector {
        WeightVector::from_ints(&root.0, Basis::Root)
    }

    pub fn zero(rank: usize, basis: Basis) -> WeightVector {
        WeightVector {
            coeffs: vec![BigRational::zero(); rank],
            basis,
        }
    }

    /// Fundamental weight lambda_i.
    pub fn fundamental(i: Node, rank: usize) -> WeightVector {
        let mut coeffs = vec![BigRational::zero(); rank];
        coeffs[i - 1] = BigRational::one();
        WeightVector {
            coeffs,
            basis: Basis::Weight,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, when all are integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        assert_eq!(self.basis, other.basis);
        WeightVector {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
            basis: self.basis,
        }
    }

    pub fn sub(&self, other: &WeightVector) -> WeightVector {
        assert_eq!(self.basis, other.basis);
        WeightVector {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
            basis: self.basis,
        }
    }
}

/// A complex simple root system with exact Cartan data.
///
/// `cartan[i][j]` is `<alpha_i, alpha_j_check>` (0-indexed), matching the
/// convention `c_kj = <alpha_k, alpha_j_check>`.  The symmetrizer entry
/// `d_i = <alpha_i, alpha_i>/2` makes `d_j * c_ij = <alpha_i, alpha_j>`
/// symmetric, with short simple roots of squared length 2.
#[derive(Debug, Clone)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
    positive_set: HashSet<Vec<i64>>,
    highest_root: Root,
    inv_cartan_t: Vec<Vec<BigRational>>,
}

impl RootSystem {
    /// Build the root system for a supported simple type.
    ///
    /// The positive roots are generated from the simple ones by closing
    /// under root strings, in height order; generation is deterministic.
    /// Classical ranks are capped at 16, well beyond every sweep bound.
    pub fn new(family: Family, rank: usize) -> Result<RootSystem> {
        if !family.rank_range().contains(&rank) || rank == 0 || rank > 16 {
            return Err(Error::UnsupportedType {
                family: family.letter(),
                rank,
            });
        }
        let cartan = cartan_matrix(family, rank);
        let symmetrizer = symmetrizer(family, rank);
        let positive_roots = positive_roots_from_cartan(&cartan);
        let positive_set: HashSet<Vec<i64>> =
            positive_roots.iter().map(|r| r.0.clone()).collect();
        let highest_root = positive_roots
            .last()
            .expect("nonempty root system")
            .clone();
        let inv_cartan_t = invert_transpose(&cartan);
        Ok(RootSystem {
            family,
            rank,
            cartan,
            symmetrizer,
            positive_roots,
            positive_set,
            highest_root,
            inv_cartan_t,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }

    pub fn cartan(&self) -> &Vec<Vec<i64>> {
        &self.cartan
    }

    /// Cartan entry `c_ij = <alpha_i, alpha_j_check>`, 1-based.
    pub fn cartan_entry(&self, i: Node, j: Node) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    /// Half squared length `d_i = <alpha_i, alpha_i>/2` of a simple root.
    pub fn d(&self, i: Node) -> i64 {
        self.symmetrizer[i - 1]
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// All roots, negatives first by descending height, then positives.
    pub fn all_roots(&self) -> Vec<Root> {
        let mut out: Vec<Root> = self.positive_roots.iter().rev().map(|r| r.negated()).collect();
        out.extend(self.positive_roots.iter().cloned());
        out
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest_root
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive_roots.len()
    }

    /// Dimension of the Lie algebra: |Delta| + rank.
    pub fn dim(&self) -> usize {
        self.num_roots() + self.rank
    }

    /// Membership in Delta (positive or negative); zero is not a root.
    pub fn is_root(&self, v: &Root) -> bool {
        self.positive_set.contains(&v.0)
            || self.positive_set.contains(&v.negated().0)
    }

    pub fn check_node(&self, i: Node) -> Result<()> {
        if i >= 1 && i <= self.rank {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node: i,
                rank: self.rank,
            })
        }
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len == self.rank {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank,
                got: len,
            })
        }
    }

    /// Bond data between two nodes: `(c_ij, c_ji)`, both zero iff no bond.
    pub fn bond(&self, i: Node, j: Node) -> (i64, i64) {
        (self.cartan[i - 1][j - 1], self.cartan[j - 1][i - 1])
    }

    pub fn adjacent(&self, i: Node, j: Node) -> bool {
        i != j && self.cartan[i - 1][j - 1] != 0
    }

    /// Convert a weight vector to the requested basis.
    ///
    /// ROOT -> WEIGHT is multiplication by the transposed Cartan matrix
    /// (`r_i = sum_j m_j c_ji`); the inverse direction uses its exact
    /// rational inverse, so the round trip is the identity.
    pub fn convert(&self, v: &WeightVector, to: Basis) -> Result<WeightVector> {
        self.check_len(v.coeffs.len())?;
        if v.basis == to {
            return Ok(v.clone());
        }
        let coeffs = match to {
            Basis::Weight => (0..self.rank)
                .map(|i| {
                    (0..self.rank)
                        .map(|j| &v.coeffs[j] * BigRational::from_integer(self.cartan[j][i].into()))
                        .sum()
                })
                .collect(),
            Basis::Root => (0..self.rank)
                .map(|i| {
                    (0..self.rank)
                        .map(|j| &v.coeffs[j] * &self.inv_cartan_t[i][j])
                        .sum()
                })
                .collect(),
        };
        Ok(WeightVector { coeffs, basis: to })
    }

    /// Weight-basis coordinates of a root: all coroot pairings, as integers.
    pub fn root_to_weight_ints(&self, r: &Root) -> Vec<i64> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| r.0[j] * self.cartan[j][i]).sum())
            .collect()
    }

    /// Symmetric bilinear pairing on h*, short simple roots of length^2 = 2.
    pub fn pairing(&self, a: &WeightVector, b: &WeightVector) -> Result<BigRational> {
        self.check_len(a.coeffs.len())?;
        self.check_len(b.coeffs.len())?;
        let ar = self.convert(a, Basis::Root)?;
        let br = self.convert(b, Basis::Root)?;
        let mut acc = BigRational::zero();
        for i in 0..self.rank {
            if ar.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                if self.cartan[i][j] == 0 {
                    continue;
                }
                // <alpha_i, alpha_j> = d_j c_ij
                let g = BigInt::from(self.symmetrizer[j] * self.cartan[i][j]);
                acc += &ar.coeffs[i] * &br.coeffs[j] * BigRational::from_integer(g);
            }
        }
        Ok(acc)
    }

    /// Pairing of two roots, in integer arithmetic.
    pub fn root_pairing(&self, a: &Root, b: &Root) -> i64 {
        let mut acc = 0;
        for i in 0..self.rank {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                acc += a.0[i] * b.0[j] * self.symmetrizer[j] * self.cartan[i][j];
            }
        }
        acc
    }

    /// Squared length of a root.
    pub fn root_len2(&self, r: &Root) -> i64 {
        self.root_pairing(r, r)
    }

    /// Coroot pairing `<mu, alpha_i_check> = 2<mu, alpha_i>/<alpha_i, alpha_i>`;
    /// in the WEIGHT basis this is simply coefficient `i`.
    pub fn coroot_pairing(&self, mu: &WeightVector, i: Node) -> Result<BigRational> {
        self.check_node(i)?;
        self.check_len(mu.coeffs.len())?;
        match mu.basis {
            Basis::Weight => Ok(mu.coeffs[i - 1].clone()),
            Basis::Root => Ok((0..self.rank)
                .map(|j| &mu.coeffs[j] * BigRational::from_integer(self.cartan[j][i - 1].into()))
                .sum()),
        }
    }

    /// Coroot pairing of a root, in integer arithmetic.
    pub fn root_coroot_pairing(&self, r: &Root, i: Node) -> i64 {
        (0..self.rank).map(|j| r.0[j] * self.cartan[j][i - 1]).sum()
    }

    /// Simple reflection `sigma_i(mu) = mu - <mu, alpha_i_check> alpha_i`.
    pub fn reflect(&self, i: Node, mu: &WeightVector) -> Result<WeightVector> {
        self.check_node(i)?;
        let c = self.coroot_pairing(mu, i)?;
        let mut out = mu.clone();
        match mu.basis {
            Basis::Root => {
                out.coeffs[i - 1] -= c;
            }
            Basis::Weight => {
                // alpha_i in the weight basis is the i-th Cartan row.
                for j in 0..self.rank {
                    out.coeffs[j] -= &c * BigRational::from_integer(self.cartan[i - 1][j].into());
                }
            }
        }
        Ok(out)
    }

    /// Apply a juxtaposed reflection word such as (2132).
    ///
    /// The word denotes the composition `sigma_2 . sigma_1 . sigma_3 . sigma_2`
    /// with the rightmost reflection acting first, matching `(jk) = sigma_j . sigma_k`.
    /// This order was validated against the maximal-orthogonal-root words for
    /// every listed type before being frozen here.
    pub fn apply_word(&self, word: &[Node], mu: &WeightVector) -> Result<WeightVector> {
        let mut v = mu.clone();
        for &i in word.iter().rev() {
            v = self.reflect(i, &v)?;
        }
        Ok(v)
    }

    /// Reflect a root in integer arithmetic.
    pub fn reflect_root(&self, i: Node, r: &Root) -> Root {
        let c = self.root_coroot_pairing(r, i);
        let mut out = r.clone();
        out.0[i - 1] -= c;
        out
    }

    /// Depth of the alpha-string through beta: largest p with
    /// `beta - p*alpha` a root (p = 0 when `beta - alpha` is not).
    pub fn string_down(&self, alpha: &Root, beta: &Root) -> i64 {
        let mut p = 0;
        let mut cur = beta.sub(alpha);
        while self.is_root(&cur) {
            p += 1;
            cur = cur.sub(alpha);
        }
        p
    }

    /// Rise of the alpha-string through beta: largest q with
    /// `beta + q*alpha` a root.
    pub fn string_up(&self, alpha: &Root, beta: &Root) -> i64 {
        let mut q = 0;
        let mut cur = beta.add(alpha);
        while self.is_root(&cur) {
            q += 1;
            cur = cur.add(alpha);
        }
        q
    }

    /// rho = sum of fundamental weights.
    pub fn rho(&self) -> WeightVector {
        WeightVector {
            coeffs: vec![BigRational::one(); self.rank],
            basis: Basis::Weight,
        }
    }

    /// Positive roots of the sub-root-system spanned by `nodes`: the ambient
    /// positive roots supported inside the subset.
    pub fn sub_positive_roots(&self, nodes: &[Node]) -> Vec<Root> {
        let inside: HashSet<Node> = nodes.iter().copied().collect();
        self.positive_roots
            .iter()
            .filter(|r| r.support().iter().all(|n| inside.contains(n)))
            .cloned()
            .collect()
    }

    /// Highest root of the (irreducible) sub-root-system spanned by `nodes`.
    ///
    /// Returns `NoOrthogonalRoot` when the subsystem is empty and
    /// `NonUniqueMax` when more than one maximal root exists (the subsystem
    /// was not irreducible).
    pub fn sub_highest_root(&self, nodes: &[Node]) -> Result<Root> {
        let roots = self.sub_positive_roots(nodes);
        if roots.is_empty() {
            return Err(Error::NoOrthogonalRoot);
        }
        let set: HashSet<Vec<i64>> = roots.iter().map(|r| r.0.clone()).collect();
        let maximal: Vec<&Root> = roots
            .iter()
            .filter(|r| {
                nodes.iter().all(|&i| {
                    let mut up = r.0.clone();
                    up[i - 1] += 1;
                    !set.contains(&up)
                })
            })
            .collect();
        match maximal.as_slice() {
            [only] => Ok((*only).clone()),
            _ => Err(Error::NonUniqueMax),
        }
    }
}

/// Bourbaki Cartan matrix, entries `c_ij = <alpha_i, alpha_j_check>`.
fn cartan_matrix(family: Family, rank: usize) -> Vec<Vec<i64>> {
    let n = rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    // single bonds first, then the directed multiple bonds
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match family {
        Family::A | Family::B | Family::C => edges.extend((1..n).map(|i| (i, i + 1))),
        Family::D => {
            edges.extend((1..n - 1).map(|i| (i, i + 1)));
            edges.push((n - 2, n));
        }
        Family::E => {
            // chain 1-3-4-5-...-n with node 2 attached to node 4
            edges.push((1, 3));
            edges.extend((3..n).map(|i| (i, i + 1)));
            edges.push((2, 4));
        }
        Family::F => {
            edges.push((1, 2));
            edges.push((2, 3));
            edges.push((3, 4));
        }
        Family::G => edges.push((1, 2)),
    }
    for (i, j) in edges {
        c[i - 1][j - 1] = -1;
        c[j - 1][i - 1] = -1;
    }
    match family {
        Family::B => {
            c[n - 2][n - 1] = -2;
        }
        Family::C => {
            c[n - 1][n - 2] = -2;
        }
        Family::F => {
            c[1][2] = -2;
        }
        Family::G => {
            c[1][0] = -3;
        }
        _ => {}
    }
    c
}

/// `d_i = <alpha_i, alpha_i>/2` with short simple roots of squared length 2.
fn symmetrizer(family: Family, rank: usize) -> Vec<i64> {
    match family {
        Family::A | Family::D | Family::E => vec![1; rank],
        Family::B => {
            let mut d = vec![2; rank];
            d[rank - 1] = 1;
            d
        }
        Family::C => {
            let mut d = vec![1; rank];
            d[rank - 1] = 2;
            d
        }
        Family::F => vec![2, 2, 1, 1],
        Family::G => vec![1, 3],
    }
}

/// Generate the positive roots of an arbitrary (generalized) Cartan matrix of
/// finite type, by height induction on root strings.  The result is sorted by
/// height then lexicographically, so the highest root comes last.
pub(crate) fn positive_roots_from_cartan(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut by_height: Vec<Vec<Root>> = Vec::new();
    let simples: Vec<Root> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            Root(v)
        })
        .collect();
    for s in &simples {
        known.insert(s.0.clone());
    }
    by_height.push(simples.clone());
    loop {
        let last = by_height.last().unwrap().clone();
        let mut next: Vec<Root> = Vec::new();
        for beta in &last {
            for (i, alpha) in simples.iter().enumerate() {
                let cand = beta.add(alpha);
                if known.contains(&cand.0) {
                    continue;
                }
                // string depth p of beta along alpha_i, then q = p - <beta, alpha_i_check>
                let mut p = 0i64;
                let mut cur = beta.sub(alpha);
                while known.contains(&cur.0) {
                    p += 1;
                    cur = cur.sub(alpha);
                }
                let pairing: i64 = (0..n).map(|j| beta.0[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    known.insert(cand.0.clone());
                    next.push(cand);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort();
        next.dedup();
        by_height.push(next);
    }
    let mut out = Vec::new();
    for level in by_height {
        let mut level = level;
        level.sort();
        out.extend(level);
    }
    out
}

/// Exact inverse of the transposed Cartan matrix, by Gauss-Jordan elimination.
fn invert_transpose(cartan: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = cartan.len();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        BigRational::from_integer(cartan[j][i].into())
                    } else if j - n == i {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &p;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (cell, p) in row.iter_mut().zip(&pivot_row) {
                    *cell -= p * &f;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Classical dimension of the simple Lie algebra of the given type.
pub fn classical_dim(family: Family, rank: usize) -> usize {
    let l = rank;
    match family {
        Family::A => (l + 1) * (l + 1) - 1,
        Family::B | Family::C => l * (2 * l + 1),
        Family::D => l * (2 * l - 1),
        Family::G => 14,
        Family::F => 52,
        Family::E => match l {
            6 => 78,
            7 => 133,
            8 => 248,
            _ => unreachable!(),
        },
    }
}

/// Nontrivial Dynkin diagram automorphisms of the given type, each as a
/// permutation `perm[i-1] = image of node i`.  The identity is included.
pub fn diagram_automorphisms(family: Family, rank: usize) -> Vec<Vec<Node>> {
    let id: Vec<Node> = (1..=rank).collect();
    let mut out = vec![id.clone()];
    match family {
        Family::A if rank >= 2 => {
            out.push((1..=rank).map(|i| rank + 1 - i).collect());
        }
        Family::D if rank == 4 => {
            // S3 on the three outer nodes {1, 3, 4}
            let outer = [1usize, 3, 4];
            let perms3 = [
                [1, 3, 4],
                [1, 4, 3],
                [3, 1, 4],
                [3, 4, 1],
                [4, 1, 3],
                [4, 3, 1],
            ];
            out.clear();
            for p in perms3 {
                let mut perm = id.clone();
                for (a, b) in outer.iter().zip(p.iter()) {
                    perm[a - 1] = *b;
                }
                out.push(perm);
            }
        }
        Family::D if rank >= 5 => {
            let mut perm = id.clone();
            perm.swap(rank - 2, rank - 1);
            out.push(perm);
        }
        Family::E if rank == 6 => {
            out.push(vec![6, 2, 5, 4, 3, 1]);
        }
        _ => {}
    }
    out
}
