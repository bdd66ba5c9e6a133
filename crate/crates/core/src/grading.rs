//! Parabolic crossing sets, the induced Z-gradings, and the marked-diagram
//! recipes for the Levi factor, the first layers, and the top slot.

use crate::diagram::{classify_top_slot, ModuleDiagram, TopSlotPattern};
use crate::error::{Error, Result};
use crate::roots::{Node, Root, RootSystem};
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// A parabolic grading of a simple Lie algebra, determined by the set of
/// crossed Dynkin nodes.  The grading element is `Z = sum_{i in crosses} Z_i`,
/// and the Z-degree of a root is the sum of its coefficients over the
/// crossed nodes.
#[derive(Debug, Clone)]
pub struct ParabolicGrading<'a> {
    rs: &'a RootSystem,
    crosses: BTreeSet<Node>,
    depth: i64,
    z_degree: HashMap<Root, i64>,
    layer_dims: BTreeMap<i64, usize>,
}

impl<'a> ParabolicGrading<'a> {
    pub fn new(rs: &'a RootSystem, crosses: &[Node]) -> Result<ParabolicGrading<'a>> {
        if crosses.is_empty() {
            return Err(Error::EmptyCrossSet);
        }
        for &i in crosses {
            rs.check_node(i)?;
        }
        let crosses: BTreeSet<Node> = crosses.iter().copied().collect();
        let mut z_degree = HashMap::new();
        let mut layer_dims: BTreeMap<i64, usize> = BTreeMap::new();
        layer_dims.insert(0, rs.rank());
        for r in rs.positive_roots() {
            let z: i64 = crosses.iter().map(|&i| r.coeff(i)).sum();
            *layer_dims.entry(z).or_insert(0) += 1;
            *layer_dims.entry(-z).or_insert(0) += 1;
            z_degree.insert(r.clone(), z);
            z_degree.insert(r.negated(), -z);
        }
        let depth = z_degree[rs.highest_root()];
        Ok(ParabolicGrading {
            rs,
            crosses,
            depth,
            z_degree,
            layer_dims,
        })
    }

    pub fn rs(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn crosses(&self) -> &BTreeSet<Node> {
        &self.crosses
    }

    pub fn is_crossed(&self, i: Node) -> bool {
        self.crosses.contains(&i)
    }

    /// Depth nu of the grading.
    pub fn depth(&self) -> i64 {
        self.depth
    }

    /// Z-degree of a root.
    pub fn z_degree(&self, r: &Root) -> i64 {
        self.z_degree[r]
    }

    /// Z_S(alpha): sum of the coefficients of alpha over the node subset S.
    pub fn z_partial(r: &Root, s: &BTreeSet<Node>) -> i64 {
        s.iter().map(|&i| r.coeff(i)).sum()
    }

    pub fn layer_dims(&self) -> &BTreeMap<i64, usize> {
        &self.layer_dims
    }

    pub fn layer_dim(&self, k: i64) -> usize {
        self.layer_dims.get(&k).copied().unwrap_or(0)
    }

    /// Roots of the layer g_k (k nonzero), in deterministic order.
    pub fn layer_roots(&self, k: i64) -> Vec<Root> {
        if k == 0 {
            let mut out: Vec<Root> = self
                .rs
                .positive_roots()
                .iter()
                .filter(|r| self.z_degree[*r] == 0)
                .cloned()
                .collect();
            let negs: Vec<Root> = out.iter().map(|r| r.negated()).collect();
            out.extend(negs);
            return out;
        }
        let sign_pos = k > 0;
        self.rs
            .positive_roots()
            .iter()
            .filter(|r| self.z_degree[*r] == k.abs())
            .map(|r| if sign_pos { r.clone() } else { r.negated() })
            .collect()
    }

    /// Roots of positive degree.
    pub fn positive_part(&self) -> Vec<Root> {
        self.rs
            .positive_roots()
            .iter()
            .filter(|r| self.z_degree[*r] > 0)
            .cloned()
            .collect()
    }

    /// dim of the nonpositive part g_{<=0}.
    pub fn dim_nonpositive(&self) -> usize {
        self.layer_dims
            .iter()
            .filter(|(&k, _)| k <= 0)
            .map(|(_, &d)| d)
            .sum()
    }

    /// dim of the parabolic p = g_{>=0}.
    pub fn dim_parabolic(&self) -> usize {
        self.layer_dims
            .iter()
            .filter(|(&k, _)| k >= 0)
            .map(|(_, &d)| d)
            .sum()
    }

    pub fn uncrossed(&self) -> Vec<Node> {
        (1..=self.rs.rank()).filter(|i| !self.crosses.contains(i)).collect()
    }

    /// Levi decomposition: the connected uncrossed sub-diagrams, plus a
    /// center of dimension |crosses|.
    pub fn levi_semisimple(&self) -> LeviDecomposition {
        let empty = BTreeMap::new();
        let sub = ModuleDiagram::new(self.rs, &self.uncrossed(), &empty);
        LeviDecomposition {
            components: sub.components(),
            center_dim: self.crosses.len(),
        }
    }

    /// The g_0^ss-module diagrams of g_{-1}: one per crossed node, inscribed
    /// with the bond multiplicities toward it.
    pub fn module_g_minus1(&self) -> Vec<ModuleDiagram> {
        let uncrossed = self.uncrossed();
        self.crosses
            .iter()
            .map(|&i| {
                let mut weight = BTreeMap::new();
                for &j in &uncrossed {
                    if self.rs.adjacent(i, j) {
                        weight.insert(j, -self.rs.cartan_entry(i, j));
                    }
                }
                ModuleDiagram::new(self.rs, &uncrossed, &weight)
            })
            .collect()
    }

    /// The g_0^ss-module diagrams of g_1: the duals of the g_{-1} ones.
    pub fn module_g1(&self) -> Vec<ModuleDiagram> {
        self.module_g_minus1().iter().map(|d| d.dualized()).collect()
    }

    /// The effective top-slot diagram: remove the crossed nodes from the
    /// diagram inscribed with the highest root, then keep the support.
    /// Empty exactly when the crossing set contains all contact nodes.
    pub fn effective_top_slot(&self) -> Vec<ModuleDiagram> {
        top_slot_support(self.rs, &(1..=self.rs.rank()).collect::<Vec<_>>(), &self.crosses, self.rs.highest_root())
    }

    /// Pattern classification of the effective top slot.
    pub fn top_slot_pattern(&self) -> Result<TopSlotPattern> {
        classify_top_slot(&self.effective_top_slot())
    }
}

/// Levi decomposition data: semisimple components and the center dimension.
#[derive(Debug, Clone)]
pub struct LeviDecomposition {
    pub components: Vec<ModuleDiagram>,
    pub center_dim: usize,
}

impl LeviDecomposition {
    /// Label like "A2 x A1 x A1" ("0" when there is no semisimple part).
    pub fn label(&self) -> String {
        if self.components.is_empty() {
            "0".to_string()
        } else {
            self.components
                .iter()
                .map(|c| c.type_label())
                .collect::<Vec<_>>()
                .join(" x ")
        }
    }
}

/// Support of the top-slot diagram of the sub-root-system spanned by `nodes`
/// with crossing set `crosses`, inscribed with the coroot pairings of
/// `highest` (the subsystem's highest root) over the uncrossed nodes.
pub(crate) fn top_slot_support(
    rs: &RootSystem,
    nodes: &[Node],
    crosses: &BTreeSet<Node>,
    highest: &Root,
) -> Vec<ModuleDiagram> {
    let kept: Vec<Node> = nodes.iter().copied().filter(|n| !crosses.contains(n)).collect();
    let weight: BTreeMap<Node, i64> = kept
        .iter()
        .map(|&n| (n, rs.root_coroot_pairing(highest, n)))
        .collect();
    ModuleDiagram::new(rs, &kept, &weight)
        .support()
        .into_iter()
        .collect()
}
