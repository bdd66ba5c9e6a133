//! Chevalley structure constants.
//!
//! Root vectors are normalized so that `{e_alpha, h_alpha, e_{-alpha}}` is a
//! standard sl2-triple for every positive root, and `|N_{alpha,beta}| = p+1`
//! with `p` the depth of the alpha-string through beta.  Signs follow the
//! extraspecial-pair convention: for each non-simple positive root the
//! minimal decomposition gets a positive constant, and every other constant
//! is forced from those through the Jacobi identity.  Any consistent sign
//! choice gives an isomorphic algebra; the Jacobi test is the gate.

use crate::error::{Error, Result};
use crate::roots::{Node, Root, RootSystem};
use std::collections::HashMap;

/// Basis element: a root vector or a simple coroot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BasisElement {
    RootVector(Root),
    Cartan(Node),
}

impl BasisElement {
    pub fn display(&self) -> String {
        match self {
            BasisElement::RootVector(r) => format!("e[{}]", r.notation()),
            BasisElement::Cartan(i) => format!("h{}", i),
        }
    }
}

/// Sparse integer vector over the basis.
pub type Sparse = Vec<(usize, i64)>;

/// The full bracket table of a simple Lie algebra in a Chevalley basis.
///
/// Basis order: `e_{-alpha}` for positive `alpha` by descending height, the
/// simple coroots `h_1, ..., h_l`, then `e_alpha` by ascending height.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    basis: Vec<BasisElement>,
    root_index: HashMap<Root, usize>,
    cartan_offset: usize,
    rank: usize,
    /// N_{alpha,beta} for ordered root pairs with alpha + beta a root.
    n_table: HashMap<(Root, Root), i64>,
    /// Coefficients of `h_alpha` over the simple coroots, positive alpha.
    coroots: HashMap<Root, Vec<i64>>,
}

/// Build the structure constants for a root system.
pub fn chevalley_constants(rs: &RootSystem) -> Result<StructureConstants> {
    let pos = rs.positive_roots();
    let prec: HashMap<&Root, usize> = pos.iter().enumerate().map(|(i, r)| (r, i)).collect();

    // Special-pair table: keys (alpha, beta) with alpha before beta in the
    // construction order and alpha + beta a positive root.
    let mut special: HashMap<(Root, Root), i64> = HashMap::new();

    let lookup_pos = |special: &HashMap<(Root, Root), i64>, a: &Root, b: &Root| -> i64 {
        if prec[a] < prec[b] {
            special[&(a.clone(), b.clone())]
        } else {
            -special[&(b.clone(), a.clone())]
        }
    };
    // N_{xi, -eta} for positive xi, eta with xi - eta a root.
    let mixed = |special: &HashMap<(Root, Root), i64>, xi: &Root, eta: &Root| -> Result<i64> {
        let diff = xi.sub(eta);
        let exact = |num: i64, den: i64| -> Result<i64> {
            if num % den != 0 {
                Err(Error::InternalMismatch(
                    "structure constant ratio is not integral".into(),
                ))
            } else {
                Ok(num / den)
            }
        };
        if diff.is_positive() {
            let n = lookup_pos(special, eta, &diff);
            exact(-n * rs.root_len2(&diff), rs.root_len2(xi))
        } else {
            let neg = diff.negated();
            let n = lookup_pos(special, xi, &neg);
            exact(-n * rs.root_len2(&neg), rs.root_len2(eta))
        }
    };

    for gamma in pos.iter().filter(|g| g.height() >= 2) {
        // decompositions gamma = alpha + beta with both positive, ordered by
        // the position of alpha; the first is the extraspecial pair
        let mut pairs: Vec<(Root, Root)> = pos
            .iter()
            .take_while(|a| a.height() < gamma.height())
            .filter_map(|a| {
                let b = gamma.sub(a);
                (b.is_positive() && rs.is_root(&b) && prec[a] < prec[&b])
                    .then(|| (a.clone(), b.clone()))
            })
            .collect();
        pairs.sort_by_key(|(a, _)| prec[a]);
        let (a1, b1) = pairs[0].clone();
        let n1 = rs.string_down(&a1, &b1) + 1;
        special.insert((a1.clone(), b1.clone()), n1);
        for (a, b) in pairs.into_iter().skip(1) {
            // Jacobi on (e_{-a1}, e_a, e_b), all brackets landing on e_{b1}
            let term1 = match a.sub(&a1) {
                d if rs.is_root(&d) => -mixed(&special, &a, &a1)? * lookup_pos(&special, &d, &b),
                _ => 0,
            };
            let term3 = match b.sub(&a1) {
                d if rs.is_root(&d) => mixed(&special, &b, &a1)? * lookup_pos(&special, &d, &a),
                _ => 0,
            };
            let numerator = (term1 + term3) * rs.root_len2(gamma);
            let denominator = n1 * rs.root_len2(&b1);
            if numerator % denominator != 0 {
                return Err(Error::InternalMismatch(format!(
                    "structure constant for {} + {} is not integral",
                    a.notation(),
                    b.notation()
                )));
            }
            let n = numerator / denominator;
            if n.abs() != rs.string_down(&a, &b) + 1 {
                return Err(Error::InternalMismatch(format!(
                    "|N| != p+1 at {} + {}",
                    a.notation(),
                    b.notation()
                )));
            }
            special.insert((a, b), n);
        }
    }

    // expand to the full table over arbitrary sign patterns
    let mut n_table: HashMap<(Root, Root), i64> = HashMap::new();
    let mut insert_pair = |a: Root, b: Root, n: i64| {
        n_table.insert((a.negated(), b.negated()), -n);
        n_table.insert((b.negated(), a.negated()), n);
        n_table.insert((a.clone(), b.clone()), n);
        n_table.insert((b, a), -n);
    };
    for ((a, b), n) in &special {
        insert_pair(a.clone(), b.clone(), *n);
    }
    // mixed pairs: xi positive, -eta negative, xi != eta, xi - eta a root
    for xi in pos {
        for eta in pos {
            if xi == eta || !rs.is_root(&xi.sub(eta)) {
                continue;
            }
            let n = mixed(&special, xi, eta)?;
            n_table.insert((xi.clone(), eta.negated()), n);
            n_table.insert((eta.negated(), xi.clone()), -n);
        }
    }

    // coroot expansions h_alpha = sum_i (m_i d_i / d_alpha) h_i
    let mut coroots = HashMap::new();
    for alpha in pos {
        let d_alpha = rs.root_len2(alpha) / 2;
        let coeffs: Result<Vec<i64>> = (1..=rs.rank())
            .map(|i| {
                let num = alpha.coeff(i) * rs.d(i);
                if num % d_alpha != 0 {
                    Err(Error::InternalMismatch("coroot is not integral".into()))
                } else {
                    Ok(num / d_alpha)
                }
            })
            .collect();
        coroots.insert(alpha.clone(), coeffs?);
    }

    let mut basis: Vec<BasisElement> = pos
        .iter()
        .rev()
        .map(|r| BasisElement::RootVector(r.negated()))
        .collect();
    let cartan_offset = basis.len();
    basis.extend((1..=rs.rank()).map(BasisElement::Cartan));
    basis.extend(pos.iter().map(|r| BasisElement::RootVector(r.clone())));
    let root_index = basis
        .iter()
        .enumerate()
        .filter_map(|(i, b)| match b {
            BasisElement::RootVector(r) => Some((r.clone(), i)),
            BasisElement::Cartan(_) => None,
        })
        .collect();

    Ok(StructureConstants {
        basis,
        root_index,
        cartan_offset,
        rank: rs.rank(),
        n_table,
        coroots,
    })
}

impl StructureConstants {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn root_vector_index(&self, r: &Root) -> usize {
        self.root_index[r]
    }

    pub fn cartan_index(&self, i: Node) -> usize {
        self.cartan_offset + i - 1
    }

    /// N_{alpha,beta}; zero when alpha + beta is not a root.
    pub fn n_constant(&self, a: &Root, b: &Root) -> i64 {
        self.n_table.get(&(a.clone(), b.clone())).copied().unwrap_or(0)
    }

    /// Coefficients of h_alpha over the simple coroots (any root alpha).
    pub fn coroot_coeffs(&self, alpha: &Root) -> Vec<i64> {
        if alpha.is_positive() {
            self.coroots[alpha].clone()
        } else {
            self.coroots[&alpha.negated()].iter().map(|c| -c).collect()
        }
    }

    /// Bracket of two basis elements as a sparse integer vector.
    pub fn bracket_basis(&self, rs: &RootSystem, a: usize, b: usize) -> Sparse {
        match (&self.basis[a], &self.basis[b]) {
            (BasisElement::Cartan(_), BasisElement::Cartan(_)) => Vec::new(),
            (BasisElement::Cartan(i), BasisElement::RootVector(r)) => {
                let c = rs.root_coroot_pairing(r, *i);
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(b, c)]
                }
            }
            (BasisElement::RootVector(r), BasisElement::Cartan(i)) => {
                let c = rs.root_coroot_pairing(r, *i);
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(a, -c)]
                }
            }
            (BasisElement::RootVector(r), BasisElement::RootVector(s)) => {
                let sum = r.add(s);
                if sum.0.iter().all(|&c| c == 0) {
                    self.coroot_coeffs(r)
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| *c != 0)
                        .map(|(i, c)| (self.cartan_index(i + 1), c))
                        .collect()
                } else if let Some(&idx) = self.root_index.get(&sum) {
                    let n = self.n_constant(r, s);
                    debug_assert_ne!(n, 0);
                    vec![(idx, n)]
                } else {
                    Vec::new()
                }
            }
        }
    }

    /// Bracket of two sparse integer vectors.
    pub fn bracket_sparse(&self, rs: &RootSystem, x: &Sparse, y: &Sparse) -> Sparse {
        let mut acc: HashMap<usize, i64> = HashMap::new();
        for &(a, ca) in x {
            for &(b, cb) in y {
                for (t, c) in self.bracket_basis(rs, a, b) {
                    *acc.entry(t).or_insert(0) += ca * cb * c;
                }
            }
        }
        let mut out: Sparse = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        out.sort_unstable();
        out
    }
}
