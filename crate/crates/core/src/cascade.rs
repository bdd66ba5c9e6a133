//! The top-slot orthogonal cascade: contact nodes, the iterated
//! maximal-orthogonal-root construction, its H-sequence, and the orbit count
//! in the projectivized top slot.

use crate::diagram::{classify_top_slot, ModuleDiagram, TopSlotPattern};
use crate::error::{Error, Result};
use crate::grading::{top_slot_support, ParabolicGrading};
use crate::roots::{Node, Root, RootSystem};
use std::collections::{BTreeMap, BTreeSet};

/// Contact nodes: the nodes carrying a nonzero coefficient of the highest
/// root in fundamental-weight coordinates.
pub fn contact_nodes(rs: &RootSystem) -> Vec<Node> {
    let wc = rs.root_to_weight_ints(rs.highest_root());
    (1..=rs.rank()).filter(|&i| wc[i - 1] != 0).collect()
}

/// One recorded step of the cascade construction, for display.
#[derive(Debug, Clone)]
pub struct CascadeStep {
    /// Ambient nodes spanning the sub-root-system at this step.
    pub nodes: Vec<Node>,
    /// Crossed nodes among them.
    pub crosses: Vec<Node>,
    /// Type label of the subsystem with its relative crossing positions,
    /// e.g. "D6/P1".
    pub label: String,
    /// Effective top-slot pattern seen at this step.
    pub pattern: TopSlotPattern,
}

/// The top-slot orthogonal cascade of a parabolic grading.
#[derive(Debug, Clone)]
pub struct Cascade {
    /// beta_1, ..., beta_m in the simple-root basis; beta_1 is the highest root.
    pub betas: Vec<Root>,
    /// The same roots in fundamental-weight coordinates.
    pub betas_weight: Vec<Vec<i64>>,
    /// H_j = sum of t_i Z_i, as sparse nonnegative integer coefficient maps.
    pub h_sequence: Vec<BTreeMap<Node, i64>>,
    /// Number of reductive-group orbits in the projectivized top slot.
    pub orbit_count: usize,
    /// The diagram sequence of the construction.
    pub trace: Vec<CascadeStep>,
}

/// Perform one cascade step on the subsystem spanned by `nodes` whose
/// highest root is `highest`: remove its contact nodes, drop cross-free
/// components, and return the maximal root of the surviving component
/// together with that component's node set.
///
/// Errors with `NoOrthogonalRoot` when the termination condition holds (no
/// top-slot root orthogonal to `highest` remains) and with `NonUniqueMax`
/// when more than one crossed component survives, which the classification
/// of top-slot modules rules out; it is asserted, not branched on.
pub fn max_orthogonal_root(
    rs: &RootSystem,
    nodes: &[Node],
    crosses: &BTreeSet<Node>,
    highest: &Root,
) -> Result<(Root, Vec<Node>)> {
    let support = top_slot_support(rs, nodes, crosses, highest);
    if classify_top_slot(&support)?.is_terminal() {
        return Err(Error::NoOrthogonalRoot);
    }
    max_orthogonal_root_step(rs, nodes, crosses, highest)
}

fn max_orthogonal_root_step(
    rs: &RootSystem,
    nodes: &[Node],
    crosses: &BTreeSet<Node>,
    highest: &Root,
) -> Result<(Root, Vec<Node>)> {
    let keep: Vec<Node> = nodes
        .iter()
        .copied()
        .filter(|&i| rs.root_coroot_pairing(highest, i) == 0)
        .collect();
    let empty = BTreeMap::new();
    let sub = ModuleDiagram::new(rs, &keep, &empty);
    let crossed_components: Vec<ModuleDiagram> = sub
        .components()
        .into_iter()
        .filter(|c| c.nodes.iter().any(|n| crosses.contains(n)))
        .collect();
    match crossed_components.as_slice() {
        [] => Err(Error::NoOrthogonalRoot),
        [only] => {
            let beta = rs.sub_highest_root(&only.nodes)?;
            Ok((beta, only.nodes.clone()))
        }
        _ => Err(Error::NonUniqueMax),
    }
}

/// Compute the full cascade for a grading.
pub fn tsoc(pg: &ParabolicGrading) -> Result<Cascade> {
    let rs = pg.rs();
    let mut nodes: Vec<Node> = (1..=rs.rank()).collect();
    let mut crosses: BTreeSet<Node> = pg.crosses().clone();
    let mut highest = rs.highest_root().clone();
    let mut betas = Vec::new();
    let mut trace = Vec::new();
    loop {
        betas.push(highest.clone());
        let support = top_slot_support(rs, &nodes, &crosses, &highest);
        let pattern = classify_top_slot(&support)?;
        trace.push(CascadeStep {
            nodes: nodes.clone(),
            crosses: crosses.iter().copied().collect(),
            label: subsystem_label(rs, &nodes, &crosses),
            pattern,
        });
        if pattern.is_terminal() {
            break;
        }
        let (beta, surviving) = max_orthogonal_root_step(rs, &nodes, &crosses, &highest)?;
        nodes = surviving;
        crosses = crosses.iter().copied().filter(|n| nodes.contains(n)).collect();
        highest = beta;
    }
    let betas_weight: Vec<Vec<i64>> = betas.iter().map(|b| rs.root_to_weight_ints(b)).collect();
    let h_sequence = h_sequence(rs, &betas, &betas_weight, &trace)?;
    Ok(Cascade {
        orbit_count: betas.len(),
        betas,
        betas_weight,
        h_sequence,
        trace,
    })
}

/// Number of orbits in the projectivized top slot (the cascade length).
pub fn orbit_count(pg: &ParabolicGrading) -> Result<usize> {
    Ok(tsoc(pg)?.orbit_count)
}

/// `h_beta` in the dual basis Z_i: coefficients `t_i = r_i d_i / d_beta`
/// where `r` is the weight-coordinate vector.
fn h_alpha(rs: &RootSystem, weight_coords: &[i64], len2: i64) -> Result<Vec<i64>> {
    let d_beta = len2 / 2;
    (1..=rs.rank())
        .map(|i| {
            let num = weight_coords[i - 1] * rs.d(i);
            if num % d_beta != 0 {
                Err(Error::InternalMismatch(format!(
                    "non-integral coroot coefficient at node {i}"
                )))
            } else {
                Ok(num / d_beta)
            }
        })
        .collect()
}

/// The H-sequence, computed two ways and asserted equal:
/// (a) partial sums of `h_beta_i` over the ambient weight coordinates, and
/// (b) the telescoped highest weight of each step's subsystem.
fn h_sequence(
    rs: &RootSystem,
    betas: &[Root],
    betas_weight: &[Vec<i64>],
    trace: &[CascadeStep],
) -> Result<Vec<BTreeMap<Node, i64>>> {
    let lambda_len2 = rs.root_len2(rs.highest_root());
    let mut out = Vec::new();
    let mut partial = vec![0i64; rs.rank()];
    for (j, beta) in betas.iter().enumerate() {
        let len2 = rs.root_len2(beta);
        if len2 != lambda_len2 {
            return Err(Error::InternalMismatch(format!(
                "cascade root {} has squared length {len2}, expected {lambda_len2}",
                beta.notation()
            )));
        }
        let h = h_alpha(rs, &betas_weight[j], lambda_len2)?;
        for i in 0..rs.rank() {
            partial[i] += h[i];
        }
        // telescoped route: weight coordinates restricted to the current step
        let step_nodes: BTreeSet<Node> = trace[j].nodes.iter().copied().collect();
        let telescoped: Vec<i64> = (1..=rs.rank())
            .map(|i| {
                if step_nodes.contains(&i) {
                    betas_weight[j][i - 1]
                } else {
                    0
                }
            })
            .collect();
        let h_b = h_alpha(rs, &telescoped, lambda_len2)?;
        if h_b != partial {
            return Err(Error::InternalMismatch(format!(
                "H-sequence routes disagree at step {}: {:?} vs {:?}",
                j + 1,
                partial,
                h_b
            )));
        }
        if partial.iter().any(|&t| t < 0) {
            return Err(Error::InternalMismatch(format!(
                "H_{} has a negative coefficient: {:?}",
                j + 1,
                partial
            )));
        }
        out.push(
            partial
                .iter()
                .enumerate()
                .filter(|(_, &t)| t != 0)
                .map(|(i, &t)| (i + 1, t))
                .collect(),
        );
    }
    Ok(out)
}

/// Evaluate a weight given in the simple-root basis on `H = sum t_i Z_i`.
pub fn eval_on_h(mu_root: &[i64], h: &BTreeMap<Node, i64>) -> i64 {
    h.iter().map(|(&i, &t)| t * mu_root[i - 1]).sum()
}

/// Label like "D6/P1" for the subsystem spanned by `nodes` with the given
/// crosses, using the canonical numbering of each component.
pub fn subsystem_label(rs: &RootSystem, nodes: &[Node], crosses: &BTreeSet<Node>) -> String {
    let empty = BTreeMap::new();
    let diagram = ModuleDiagram::new(rs, nodes, &empty);
    let comps = diagram.components();
    let mut parts = Vec::new();
    for comp in comps {
        match comp.classify() {
            Some((family, rank, numbering)) => {
                let mut positions: Vec<usize> = numbering
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| crosses.contains(v))
                    .map(|(p, _)| p + 1)
                    .collect();
                // canonical positions: lexicographically minimal image under
                // the diagram automorphisms
                for auto in crate::roots::diagram_automorphisms(family, rank) {
                    let mut img: Vec<usize> = positions.iter().map(|&p| auto[p - 1]).collect();
                    img.sort_unstable();
                    if img < positions {
                        positions = img;
                    }
                }
                let ps: Vec<String> = positions.iter().map(|p| p.to_string()).collect();
                if ps.is_empty() {
                    parts.push(format!("{}{}", family.letter(), rank));
                } else {
                    parts.push(format!("{}{}/P{}", family.letter(), rank, ps.join(",")));
                }
            }
            None => parts.push("?".into()),
        }
    }
    parts.join(" x ")
}

/// H-sequence display like "Z1+Z6" or "2Z7".
pub fn h_display(h: &BTreeMap<Node, i64>) -> String {
    if h.is_empty() {
        return "0".to_string();
    }
    h.iter()
        .map(|(i, t)| {
            if *t == 1 {
                format!("Z{i}")
            } else {
                format!("{t}Z{i}")
            }
        })
        .collect::<Vec<_>>()
        .join("+")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::Family;

    fn cascade(f: Family, l: usize, crosses: &[Node]) -> Cascade {
        let rs = RootSystem::new(f, l).unwrap();
        let pg = ParabolicGrading::new(&rs, crosses).unwrap();
        tsoc(&pg).unwrap()
    }

    #[test]
    fn contact_nodes_examples() {
        let a5 = RootSystem::new(Family::A, 5).unwrap();
        assert_eq!(contact_nodes(&a5), vec![1, 5]);
        let c4 = RootSystem::new(Family::C, 4).unwrap();
        assert_eq!(contact_nodes(&c4), vec![1]);
        let e8 = RootSystem::new(Family::E, 8).unwrap();
        assert_eq!(contact_nodes(&e8), vec![8]);
    }

    #[test]
    fn e7_p7_cascade() {
        let c = cascade(Family::E, 7, &[7]);
        assert_eq!(c.orbit_count, 3);
        // weight forms: lambda_1, -lambda_1 + lambda_6, -lambda_6 + 2 lambda_7
        assert_eq!(c.betas_weight[0], vec![1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(c.betas_weight[1], vec![-1, 0, 0, 0, 0, 1, 0]);
        assert_eq!(c.betas_weight[2], vec![0, 0, 0, 0, 0, -1, 2]);
        let h: Vec<String> = c.h_sequence.iter().map(h_display).collect();
        assert_eq!(h, vec!["Z1", "Z6", "2Z7"]);
        assert_eq!(c.trace[1].label, "D6/P1");
        assert_eq!(c.trace[2].label, "A1/P1");
    }

    #[test]
    fn cl_pl_minus_1_cascade_roots() {
        let c = cascade(Family::C, 4, &[3]);
        assert_eq!(c.orbit_count, 3);
        let notations: Vec<String> = c.betas.iter().map(|b| b.notation()).collect();
        assert_eq!(notations, vec!["2221", "0221", "0021"]);
    }

    #[test]
    fn al_p1_is_single_orbit() {
        let c = cascade(Family::A, 5, &[1]);
        assert_eq!(c.orbit_count, 1);
        assert_eq!(c.betas.len(), 1);
    }

    #[test]
    fn bl_pl_h_sequence() {
        let c = cascade(Family::B, 5, &[5]);
        assert_eq!(c.orbit_count, 2);
        let h: Vec<String> = c.h_sequence.iter().map(h_display).collect();
        assert_eq!(h, vec!["Z2", "Z4"]);
        let c = cascade(Family::B, 6, &[6]);
        assert_eq!(c.orbit_count, 3);
        let h: Vec<String> = c.h_sequence.iter().map(h_display).collect();
        assert_eq!(h, vec!["Z2", "Z4", "Z6"]);
    }

    #[test]
    fn dl_p1_h_sequence() {
        let c = cascade(Family::D, 5, &[1]);
        assert_eq!(c.orbit_count, 2);
        let h: Vec<String> = c.h_sequence.iter().map(h_display).collect();
        assert_eq!(h, vec!["Z2", "2Z1"]);
    }

    #[test]
    fn contact_crossed_parabolic_has_one_orbit() {
        let c = cascade(Family::C, 3, &[1, 2]);
        assert_eq!(c.orbit_count, 1);
        let c = cascade(Family::G, 2, &[2]);
        assert_eq!(c.orbit_count, 1);
    }

    #[test]
    fn al_pk_orbit_counts() {
        for l in 1..=6usize {
            for k in 1..=l {
                let c = cascade(Family::A, l, &[k]);
                assert_eq!(c.orbit_count, k.min(l + 1 - k), "A{l}/P{k}");
            }
        }
    }

    #[test]
    fn crossed_contact_node_leaves_no_orthogonal_root() {
        let c3 = RootSystem::new(Family::C, 3).unwrap();
        let nodes: Vec<Node> = vec![1, 2, 3];
        let crosses: BTreeSet<Node> = [1].into();
        assert_eq!(
            max_orthogonal_root(&c3, &nodes, &crosses, c3.highest_root()).unwrap_err(),
            crate::error::Error::NoOrthogonalRoot
        );
    }

    #[test]
    fn e6_p6_table2_step() {
        let c = cascade(Family::E, 6, &[6]);
        assert_eq!(c.orbit_count, 2);
        assert_eq!(c.betas[1].notation(), "101111");
        let h: Vec<String> = c.h_sequence.iter().map(h_display).collect();
        assert_eq!(h, vec!["Z2", "Z1+Z6"]);
    }
}
