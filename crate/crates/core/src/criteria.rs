//! Isotropy criteria for top-slot symmetries, centralizer data, Tanaka
//! prolongation profiles, and the classification sweeps over all parabolic
//! geometries up to a rank bound.

use crate::cascade::{eval_on_h, tsoc, Cascade};
use crate::error::{Error, Result};
use crate::grading::ParabolicGrading;
use crate::kostant::{hasse2, Word};
use crate::roots::{diagram_automorphisms, Family, Node, Root, RootSystem};
use std::collections::{BTreeMap, BTreeSet};

/// Report for the sl2-triple criteria at cascade index `j`.
#[derive(Debug, Clone)]
pub struct CriteriaReport {
    pub j: usize,
    /// H_j as a sparse Z-combination.
    pub h: BTreeMap<Node, i64>,
    /// H lies in the Cartan subalgebra, hence in g_0; recorded for the report.
    pub cm1: bool,
    /// Eigenvalue multiset of H_j on g_-, as (eigenvalue, multiplicity).
    pub cm2_spectrum: Vec<(i64, usize)>,
    /// All eigenvalues nonpositive and the kernel matches the centralizer.
    pub cm2_ok: bool,
    /// Negative roots commuting with E_j.
    pub centralizer: Vec<Root>,
    /// mu(H_j) for every component of positive homogeneity.
    pub cm3prime_values: Vec<(Word, i64)>,
    /// All (filtered) values nonnegative.
    pub cm3prime_ok: bool,
}

/// The negative centralizer of E_j = e_{beta_1} + ... + e_{beta_j}:
/// the roots `-alpha` with `alpha` positive-degree and orthogonal to
/// beta_1, ..., beta_j.  Empty means the fixed point is smoothly isolated.
pub fn centralizer_neg(pg: &ParabolicGrading, j: usize) -> Result<Vec<Root>> {
    let cascade = tsoc(pg)?;
    centralizer_neg_from(pg, &cascade, j)
}

fn centralizer_neg_from(pg: &ParabolicGrading, cascade: &Cascade, j: usize) -> Result<Vec<Root>> {
    if j < 1 || j > cascade.orbit_count {
        return Err(Error::CascadeIndexOutOfRange {
            index: j,
            count: cascade.orbit_count,
        });
    }
    let rs = pg.rs();
    Ok(pg
        .positive_part()
        .into_iter()
        .filter(|alpha| cascade.betas[..j].iter().all(|b| rs.root_pairing(alpha, b) == 0))
        .map(|alpha| alpha.negated())
        .collect())
}

/// Evaluate the criteria for cascade index `j`.  `component_filter`, when
/// given, restricts which components count toward `cm3prime_ok` (modeling a
/// harmonic curvature concentrated in the listed components).
pub fn cm_check(
    pg: &ParabolicGrading,
    j: usize,
    component_filter: Option<&[Word]>,
) -> Result<CriteriaReport> {
    let cascade = tsoc(pg)?;
    if j < 1 || j > cascade.orbit_count {
        return Err(Error::CascadeIndexOutOfRange {
            index: j,
            count: cascade.orbit_count,
        });
    }
    let h = cascade.h_sequence[j - 1].clone();
    let centralizer = centralizer_neg_from(pg, &cascade, j)?;
    let centralizer_set: BTreeSet<Root> = centralizer.iter().cloned().collect();

    let mut spectrum: BTreeMap<i64, usize> = BTreeMap::new();
    let mut cm2_ok = true;
    for alpha in pg.positive_part() {
        let ev = -eval_on_h(&alpha.0, &h);
        *spectrum.entry(ev).or_insert(0) += 1;
        let in_centralizer = centralizer_set.contains(&alpha.negated());
        if ev > 0 || (ev == 0) != in_centralizer {
            cm2_ok = false;
        }
    }

    let mut cm3prime_values = Vec::new();
    let mut cm3prime_ok = true;
    for comp in hasse2(pg) {
        if !comp.nonrigid {
            continue;
        }
        let value = eval_on_h(&comp.mu_root, &h);
        let counted = match component_filter {
            Some(filter) => filter.contains(&comp.word),
            None => true,
        };
        if counted && value < 0 {
            cm3prime_ok = false;
        }
        cm3prime_values.push((comp.word, value));
    }

    Ok(CriteriaReport {
        j,
        h,
        cm1: true,
        cm2_spectrum: spectrum.into_iter().collect(),
        cm2_ok,
        centralizer,
        cm3prime_values,
        cm3prime_ok,
    })
}

/// Tanaka prolongation profile of the lowest-weight vector of one component.
#[derive(Debug, Clone)]
pub struct ProlongationProfile {
    pub word: Word,
    /// Crossed nodes on which mu vanishes.
    pub i_w: Vec<Node>,
    /// Uncrossed nodes on which mu does not vanish.
    pub j_w: Vec<Node>,
    /// Positive layers: degree -> annihilator-prolongation roots.
    pub layers: BTreeMap<i64, Vec<Root>>,
    /// Largest degree with a nonempty layer, 0 if none.
    pub height: i64,
    /// Total dimension of the positive layers.
    pub dim_positive: usize,
    /// dim g_{<=0}, so the full prolongation dimension is the sum.
    pub dim_nonpositive: usize,
}

/// Compute the prolongation profile for a component of positive homogeneity.
pub fn tanaka_prolongation(pg: &ParabolicGrading, word: Word) -> Result<ProlongationProfile> {
    let comp = crate::kostant::classify_component(pg, word)?;
    if !comp.nonrigid {
        return Err(Error::RigidComponent {
            word: (word.0, word.1),
        });
    }
    let rank = pg.rs().rank();
    let i_w: BTreeSet<Node> = (1..=rank)
        .filter(|&n| pg.is_crossed(n) && comp.mu_weight[n - 1] == 0)
        .collect();
    let j_w: BTreeSet<Node> = (1..=rank)
        .filter(|&n| !pg.is_crossed(n) && comp.mu_weight[n - 1] != 0)
        .collect();
    let mut layers = BTreeMap::new();
    for r in 1..=pg.depth() {
        let roots: Vec<Root> = pg
            .layer_roots(r)
            .into_iter()
            .filter(|alpha| {
                ParabolicGrading::z_partial(alpha, &i_w) == r
                    && ParabolicGrading::z_partial(alpha, &j_w) == 0
            })
            .collect();
        if !roots.is_empty() {
            layers.insert(r, roots);
        }
    }
    let height = layers.keys().max().copied().unwrap_or(0);
    let dim_positive = layers.values().map(|v| v.len()).sum();
    Ok(ProlongationProfile {
        word,
        i_w: i_w.into_iter().collect(),
        j_w: j_w.into_iter().collect(),
        layers,
        height,
        dim_positive,
        dim_nonpositive: pg.dim_nonpositive(),
    })
}

/// A parabolic geometry label in a sweep.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GeometryKey {
    pub family: Family,
    pub rank: usize,
    pub crosses: Vec<Node>,
}

impl GeometryKey {
    pub fn label(&self) -> String {
        let ps: Vec<String> = self.crosses.iter().map(|c| c.to_string()).collect();
        format!("{}{}/P{}", self.family.letter(), self.rank, ps.join(","))
    }
}

impl std::fmt::Display for GeometryKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// All supported simple types of rank at most `max_rank`.
pub fn enumerate_types(max_rank: usize) -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for l in 1..=max_rank {
        out.push((Family::A, l));
    }
    for l in 2..=max_rank {
        out.push((Family::B, l));
        out.push((Family::C, l));
    }
    for l in 4..=max_rank {
        out.push((Family::D, l));
    }
    if max_rank >= 2 {
        out.push((Family::G, 2));
    }
    if max_rank >= 4 {
        out.push((Family::F, 4));
    }
    for l in 6..=8usize.min(max_rank) {
        out.push((Family::E, l));
    }
    out.sort();
    out
}

fn subsets(rank: usize) -> Vec<Vec<Node>> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << rank) {
        let mut s = Vec::new();
        for i in 1..=rank {
            if mask & (1 << (i - 1)) != 0 {
                s.push(i);
            }
        }
        out.push(s);
    }
    out.sort();
    out
}

/// Map a geometry through the exceptional isomorphism B2 = C2, reporting the
/// B-form as canonical.  Nodes (and word letters) swap under the relabeling.
fn exceptional_canonical(
    key: &GeometryKey,
    words: &[Word],
) -> Option<(GeometryKey, Vec<Word>, String)> {
    if key.family != Family::C || key.rank != 2 {
        return None;
    }
    let swap = |n: Node| 3 - n;
    let mut crosses: Vec<Node> = key.crosses.iter().map(|&n| swap(n)).collect();
    crosses.sort_unstable();
    let words: Vec<Word> = words.iter().map(|w| Word(swap(w.0), swap(w.1))).collect();
    Some((
        GeometryKey {
            family: Family::B,
            rank: 2,
            crosses,
        },
        words,
        key.label(),
    ))
}

/// Lexicographically minimal image of (crosses, word) under the diagram
/// automorphism group; used to recognize mirror geometries and words.
pub fn canonical_pair(
    family: Family,
    rank: usize,
    crosses: &[Node],
    word: Option<Word>,
) -> (Vec<Node>, Option<Word>) {
    let mut best: Option<(Vec<Node>, Option<Word>)> = None;
    for auto in diagram_automorphisms(family, rank) {
        let mut img: Vec<Node> = crosses.iter().map(|&n| auto[n - 1]).collect();
        img.sort_unstable();
        let wimg = word.map(|Word(j, k)| Word(auto[j - 1], auto[k - 1]));
        let cand = (img, wimg);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    best.unwrap()
}

/// One row of the torsion-free classification sweep.
#[derive(Debug, Clone)]
pub struct TorsionFreeEntry {
    pub key: GeometryKey,
    /// Words with positive homogeneity and nonnegative curvature degree.
    pub words: Vec<Word>,
    /// Original label when the row was relabeled through B2 = C2.
    pub alias: Option<String>,
}

/// Every (type, rank <= max_rank, crossing set) carrying at least one
/// torsion-free component of positive homogeneity, with the qualifying words.
pub fn classify_torsion_free(max_rank: usize) -> Vec<TorsionFreeEntry> {
    let mut merged: BTreeMap<GeometryKey, (BTreeSet<Word>, Option<String>)> = BTreeMap::new();
    for (family, rank) in enumerate_types(max_rank) {
        let rs = RootSystem::new(family, rank).unwrap();
        for crosses in subsets(rank) {
            let pg = ParabolicGrading::new(&rs, &crosses).unwrap();
            let words: Vec<Word> = hasse2(&pg)
                .into_iter()
                .filter(|c| c.nonrigid && c.torsion_free)
                .map(|c| c.word)
                .collect();
            if words.is_empty() {
                continue;
            }
            let key = GeometryKey {
                family,
                rank,
                crosses,
            };
            let (key, words, alias) = match exceptional_canonical(&key, &words) {
                Some((k, w, a)) => (k, w, Some(a)),
                None => (key, words, None),
            };
            let entry = merged.entry(key).or_default();
            entry.0.extend(words);
            if entry.1.is_none() {
                entry.1 = alias;
            }
        }
    }
    merged
        .into_iter()
        .map(|(key, (words, alias))| TorsionFreeEntry {
            key,
            words: words.into_iter().collect(),
            alias,
        })
        .collect()
}

/// One row of the non-|1|-graded multi-orbit sweep.
#[derive(Debug, Clone)]
pub struct NyrEntry {
    pub key: GeometryKey,
    pub depth: i64,
    pub orbit_count: usize,
    pub h_sequence: Vec<BTreeMap<Node, i64>>,
    pub alias: Option<String>,
}

/// Yamaguchi-nonrigid geometries of depth at least two whose projectivized
/// top slot carries at least two orbits.
pub fn classify_nyr_multiorbit(max_rank: usize) -> Vec<NyrEntry> {
    let mut out: Vec<NyrEntry> = Vec::new();
    let mut seen: BTreeSet<GeometryKey> = BTreeSet::new();
    for (family, rank) in enumerate_types(max_rank) {
        let rs = RootSystem::new(family, rank).unwrap();
        for crosses in subsets(rank) {
            let pg = ParabolicGrading::new(&rs, &crosses).unwrap();
            if pg.depth() < 2 {
                continue;
            }
            if !hasse2(&pg).iter().any(|c| c.nonrigid) {
                continue;
            }
            let cascade = tsoc(&pg).unwrap();
            if cascade.orbit_count < 2 {
                continue;
            }
            let key = GeometryKey {
                family,
                rank,
                crosses,
            };
            let (key, alias) = match exceptional_canonical(&key, &[]) {
                Some((k, _, a)) => (k, Some(a)),
                None => (key, None),
            };
            if seen.insert(key.clone()) {
                out.push(NyrEntry {
                    key,
                    depth: pg.depth(),
                    orbit_count: cascade.orbit_count,
                    h_sequence: cascade.h_sequence.clone(),
                    alias,
                });
            }
        }
    }
    out.sort_by(|a, b| a.key.cmp(&b.key));
    out
}

/// One failing (geometry, word) pair of the open-orbit criterion.
#[derive(Debug, Clone)]
pub struct TgenException {
    pub key: GeometryKey,
    pub word: Word,
    /// mu(H_m), negative by membership in this list.
    pub value: i64,
    pub orbit_count: usize,
    pub alias: Option<String>,
}

/// The nonrigid (geometry, word) pairs with mu(H_m) < 0, m the orbit count.
pub fn tgen_exceptions(max_rank: usize) -> Vec<TgenException> {
    let mut out: Vec<TgenException> = Vec::new();
    let mut seen: BTreeSet<(GeometryKey, Word)> = BTreeSet::new();
    for (family, rank) in enumerate_types(max_rank) {
        let rs = RootSystem::new(family, rank).unwrap();
        for crosses in subsets(rank) {
            let pg = ParabolicGrading::new(&rs, &crosses).unwrap();
            let components: Vec<_> = hasse2(&pg).into_iter().filter(|c| c.nonrigid).collect();
            if components.is_empty() {
                continue;
            }
            let cascade = tsoc(&pg).unwrap();
            let h_m = cascade.h_sequence.last().unwrap();
            for comp in components {
                let value = eval_on_h(&comp.mu_root, h_m);
                if value >= 0 {
                    continue;
                }
                let key = GeometryKey {
                    family,
                    rank,
                    crosses: crosses.clone(),
                };
                let (key, words, alias) = match exceptional_canonical(&key, &[comp.word]) {
                    Some((k, w, a)) => (k, w, Some(a)),
                    None => (key, vec![comp.word], None),
                };
                let word = words[0];
                if seen.insert((key.clone(), word)) {
                    out.push(TgenException {
                        key,
                        word,
                        value,
                        orbit_count: cascade.orbit_count,
                        alias,
                    });
                }
            }
        }
    }
    out.sort_by(|a, b| (&a.key, a.word).cmp(&(&b.key, b.word)));
    out
}
