//! Structured reports with a stable JSON schema.
//!
//! Schema conventions: rationals are "p/q" strings, roots are integer
//! coefficient arrays tagged `"basis":"root"`, weights carry
//! `"basis":"weight"`, words are two-element arrays, and H-sequence elements
//! are sparse node -> coefficient maps.

use crate::{diagram_ascii, GeometrySpec};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use topslot_core::cascade::{contact_nodes, h_display, tsoc};
use topslot_core::criteria::{canonical_pair, cm_check, tanaka_prolongation};
use topslot_core::flatjets::jet_filtration;
use topslot_core::grading::ParabolicGrading;
use topslot_core::kostant::{hasse2, Word};
use topslot_core::roots::{diagram_automorphisms, root_notation, Basis, Root, WeightVector};
use topslot_core::Result;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootJson {
    pub basis: String,
    pub coeffs: Vec<i64>,
}

impl RootJson {
    pub fn new(r: &Root) -> RootJson {
        RootJson {
            basis: "root".into(),
            coeffs: r.0.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightJson {
    pub basis: String,
    pub coeffs: Vec<String>,
}

impl WeightJson {
    pub fn from_ints(coeffs: &[i64]) -> WeightJson {
        WeightJson {
            basis: "weight".into(),
            coeffs: coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }
}

/// Weight-basis display such as "l1+l6", "2l1", "-l6+2l7".
pub fn weight_label(coeffs: &[i64]) -> String {
    let mut s = String::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c > 0 && !s.is_empty() {
            s.push('+');
        }
        match c {
            1 => {}
            -1 => s.push('-'),
            _ => s.push_str(&c.to_string()),
        }
        s.push_str(&format!("l{}", i + 1));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InfoReport {
    pub algebra: String,
    pub family: String,
    pub rank: usize,
    pub dim: usize,
    pub num_positive_roots: usize,
    pub highest_root: RootJson,
    pub highest_root_notation: String,
    pub highest_root_weight: String,
    pub contact_nodes: Vec<usize>,
    pub diagram: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grading: Option<GradingReport>,
}

pub fn info_report(spec: &GeometrySpec, with_grading: bool) -> Result<InfoReport> {
    let rs = spec.root_system()?;
    let grading = if with_grading {
        Some(grading_report(spec)?)
    } else {
        None
    };
    let wc = rs.root_to_weight_ints(rs.highest_root());
    Ok(InfoReport {
        algebra: format!("{}{}", spec.family.letter(), spec.rank),
        family: spec.family.letter().to_string(),
        rank: spec.rank,
        dim: rs.dim(),
        num_positive_roots: rs.positive_roots().len(),
        highest_root: RootJson::new(rs.highest_root()),
        highest_root_notation: rs.highest_root().notation(),
        highest_root_weight: weight_label(&wc),
        contact_nodes: contact_nodes(&rs),
        diagram: diagram_ascii(spec.family, spec.rank),
        grading,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GradingReport {
    pub algebra: String,
    pub crosses: Vec<usize>,
    pub depth: i64,
    pub layer_dims: BTreeMap<i64, usize>,
    pub levi: String,
    pub center_dim: usize,
    pub top_slot: String,
    pub top_slot_pattern: String,
    pub g_minus1_modules: Vec<String>,
    pub g1_modules: Vec<String>,
}

pub fn grading_report(spec: &GeometrySpec) -> Result<GradingReport> {
    let rs = spec.root_system()?;
    let pg = ParabolicGrading::new(&rs, &spec.crosses)?;
    let levi = pg.levi_semisimple();
    let top = pg.effective_top_slot();
    let top_slot = if top.is_empty() {
        "empty".to_string()
    } else {
        top.iter()
            .map(|d| d.short_display())
            .collect::<Vec<_>>()
            .join(" x ")
    };
    Ok(GradingReport {
        algebra: format!("{}{}", spec.family.letter(), spec.rank),
        crosses: spec.crosses.clone(),
        depth: pg.depth(),
        layer_dims: pg.layer_dims().clone(),
        levi: levi.label(),
        center_dim: levi.center_dim,
        top_slot,
        top_slot_pattern: pg.top_slot_pattern()?.name(),
        g_minus1_modules: pg.module_g_minus1().iter().map(|d| d.short_display()).collect(),
        g1_modules: pg.module_g1().iter().map(|d| d.short_display()).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub word: [usize; 2],
    pub mu_root: Vec<i64>,
    pub mu_root_notation: String,
    pub mu_weight: Vec<i64>,
    pub w_minus_lambda: RootJson,
    pub hom_mu: i64,
    pub hom_wml: i64,
    pub nonrigid: bool,
    pub torsion_free: bool,
    /// Earlier word this one mirrors under a diagram automorphism fixing
    /// the crossing set, when one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mirror_of: Option<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct H2Report {
    pub algebra: String,
    pub crosses: Vec<usize>,
    pub components: Vec<ComponentReport>,
}

pub fn h2_report(spec: &GeometrySpec) -> Result<H2Report> {
    let rs = spec.root_system()?;
    let pg = ParabolicGrading::new(&rs, &spec.crosses)?;
    let autos = diagram_automorphisms(spec.family, spec.rank);
    let stabilizing: Vec<_> = autos
        .into_iter()
        .filter(|a| {
            let mut img: Vec<usize> = spec.crosses.iter().map(|&n| a[n - 1]).collect();
            img.sort_unstable();
            img == spec.crosses
        })
        .collect();
    let comps = hasse2(&pg);
    let mut components = Vec::new();
    for (idx, c) in comps.iter().enumerate() {
        let mirror_of = comps[..idx]
            .iter()
            .find(|earlier| {
                stabilizing.iter().any(|a| {
                    (a[earlier.word.0 - 1], a[earlier.word.1 - 1]) == (c.word.0, c.word.1)
                })
            })
            .map(|earlier| [earlier.word.0, earlier.word.1]);
        components.push(ComponentReport {
            word: [c.word.0, c.word.1],
            mu_root: c.mu_root.clone(),
            mu_root_notation: root_notation(&c.mu_root),
            mu_weight: c.mu_weight.clone(),
            w_minus_lambda: RootJson::new(&c.w_minus_lambda),
            hom_mu: c.hom_mu,
            hom_wml: c.hom_wml,
            nonrigid: c.nonrigid,
            torsion_free: c.torsion_free,
            mirror_of,
        });
    }
    Ok(H2Report {
        algebra: format!("{}{}", spec.family.letter(), spec.rank),
        crosses: spec.crosses.clone(),
        components,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TsocStep {
    pub label: String,
    pub pattern: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TsocReport {
    pub algebra: String,
    pub crosses: Vec<usize>,
    pub orbit_count: usize,
    pub betas: Vec<RootJson>,
    pub betas_notation: Vec<String>,
    pub betas_weight: Vec<String>,
    pub h_sequence: Vec<BTreeMap<usize, i64>>,
    pub h_sequence_display: Vec<String>,
    pub trace: Vec<TsocStep>,
}

pub fn tsoc_report(spec: &GeometrySpec) -> Result<TsocReport> {
    let rs = spec.root_system()?;
    let pg = ParabolicGrading::new(&rs, &spec.crosses)?;
    let c = tsoc(&pg)?;
    Ok(TsocReport {
        algebra: format!("{}{}", spec.family.letter(), spec.rank),
        crosses: spec.crosses.clone(),
        orbit_count: c.orbit_count,
        betas: c.betas.iter().map(RootJson::new).collect(),
        betas_notation: c.betas.iter().map(|b| b.notation()).collect(),
        betas_weight: c.betas_weight.iter().map(|w| weight_label(w)).collect(),
        h_sequence: c
            .h_sequence
            .iter()
            .map(|h| h.iter().map(|(&k, &v)| (k, v)).collect())
            .collect(),
        h_sequence_display: c.h_sequence.iter().map(h_display).collect(),
        trace: c
            .trace
            .iter()
            .map(|s| TsocStep {
                label: s.label.clone(),
                pattern: s.pattern.name(),
            })
            .collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cm3Value {
    pub word: [usize; 2],
    pub value: i64,
    pub counted: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CmReport {
    pub algebra: String,
    pub crosses: Vec<usize>,
    pub j: usize,
    pub orbit_count: usize,
    pub h: BTreeMap<usize, i64>,
    pub h_display: String,
    pub cm1: bool,
    pub cm2_spectrum: Vec<(i64, usize)>,
    pub cm2_ok: bool,
    pub centralizer: Vec<RootJson>,
    pub isolated: bool,
    pub cm3prime: Vec<Cm3Value>,
    pub cm3prime_ok: bool,
}

pub fn cm_report(
    spec: &GeometrySpec,
    j: usize,
    filter: Option<&[(usize, usize)]>,
) -> Result<CmReport> {
    let rs = spec.root_system()?;
    let pg = ParabolicGrading::new(&rs, &spec.crosses)?;
    let cascade = tsoc(&pg)?;
    let words: Option<Vec<Word>> =
        filter.map(|ws| ws.iter().map(|&(a, b)| Word(a, b)).collect());
    let report = cm_check(&pg, j, words.as_deref())?;
    Ok(CmReport {
        algebra: format!("{}{}", spec.family.letter(), spec.rank),
        crosses: spec.crosses.clone(),
        j,
        orbit_count: cascade.orbit_count,
        h: report.h.iter().map(|(&k, &v)| (k, v)).collect(),
        h_display: h_display(&report.h),
        cm1: report.cm1,
        cm2_spectrum: report.cm2_spectrum.clone(),
        cm2_ok: report.cm2_ok,
        isolated: report.centralizer.is_empty(),
        centralizer: report.centralizer.iter().map(RootJson::new).collect(),
        cm3prime: report
            .cm3prime_values
            .iter()
            .map(|(w, v)| Cm3Value {
                word: [w.0, w.1],
                value: *v,
                counted: filter.is_none_or(|f| f.contains(&(w.0, w.1))),
            })
            .collect(),
        cm3prime_ok: report.cm3prime_ok,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProlongReport {
    pub algebra: String,
    pub crosses: Vec<usize>,
    pub word: [usize; 2],
    pub i_w: Vec<usize>,
    pub j_w: Vec<usize>,
    pub layers: BTreeMap<i64, Vec<RootJson>>,
    pub height: i64,
    pub depth: i64,
    pub dim_positive: usize,
    pub dim_nonpositive: usize,
}

pub fn prolong_report(spec: &GeometrySpec, word: (usize, usize)) -> Result<ProlongReport> {
    let rs = spec.root_system()?;
    let pg = ParabolicGrading::new(&rs, &spec.crosses)?;
    let p = tanaka_prolongation(&pg, Word(word.0, word.1))?;
    Ok(ProlongReport {
        algebra: format!("{}{}", spec.family.letter(), spec.rank),
        crosses: spec.crosses.clone(),
        word: [word.0, word.1],
        i_w: p.i_w.clone(),
        j_w: p.j_w.clone(),
        layers: p
            .layers
            .iter()
            .map(|(&r, roots)| (r, roots.iter().map(RootJson::new).collect()))
            .collect(),
        height: p.height,
        depth: pg.depth(),
        dim_positive: p.dim_positive,
        dim_nonpositive: p.dim_nonpositive,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlatJetsReport {
    pub algebra: String,
    pub crosses: Vec<usize>,
    pub order: u32,
    pub sym_dim: usize,
    pub kernel_dims: Vec<usize>,
}

pub fn flatjets_report(spec: &GeometrySpec, order: u32) -> Result<FlatJetsReport> {
    let rs = spec.root_system()?;
    let pg = ParabolicGrading::new(&rs, &spec.crosses)?;
    let jf = jet_filtration(&pg, order)?;
    Ok(FlatJetsReport {
        algebra: format!("{}{}", spec.family.letter(), spec.rank),
        crosses: spec.crosses.clone(),
        order,
        sym_dim: jf.sym_dim,
        kernel_dims: jf.kernel_dims,
    })
}

/// One row of a classification sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyRow {
    pub geometry: String,
    pub family: String,
    pub rank: usize,
    pub crosses: Vec<usize>,
    pub words: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_sequence: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<i64>>,
    /// Canonical (crosses, first word) under diagram automorphisms, as a
    /// display label; differs from `geometry` exactly for mirror images.
    pub canonical: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alias: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub filter: String,
    pub max_rank: usize,
    pub rows: Vec<ClassifyRow>,
}

fn canonical_label(
    family: topslot_core::roots::Family,
    rank: usize,
    crosses: &[usize],
    word: Option<Word>,
) -> String {
    let (cc, cw) = canonical_pair(family, rank, crosses, word);
    let ps: Vec<String> = cc.iter().map(|c| c.to_string()).collect();
    match cw {
        Some(w) => format!("{}{}/P{} ({}{})", family.letter(), rank, ps.join(","), w.0, w.1),
        None => format!("{}{}/P{}", family.letter(), rank, ps.join(",")),
    }
}

pub fn classify_report(filter: &str, max_rank: usize) -> std::result::Result<ClassifyReport, String> {
    let rows = match filter {
        "torsion-free" => topslot_core::criteria::classify_torsion_free(max_rank)
            .into_iter()
            .map(|e| ClassifyRow {
                geometry: e.key.label(),
                family: e.key.family.letter().to_string(),
                rank: e.key.rank,
                crosses: e.key.crosses.clone(),
                words: e.words.iter().map(|w| [w.0, w.1]).collect(),
                depth: None,
                orbit_count: None,
                h_sequence: None,
                values: None,
                canonical: canonical_label(
                    e.key.family,
                    e.key.rank,
                    &e.key.crosses,
                    e.words.first().copied(),
                ),
                alias: e.alias,
            })
            .collect(),
        "nyr-multiorbit" => topslot_core::criteria::classify_nyr_multiorbit(max_rank)
            .into_iter()
            .map(|e| ClassifyRow {
                geometry: e.key.label(),
                family: e.key.family.letter().to_string(),
                rank: e.key.rank,
                crosses: e.key.crosses.clone(),
                words: Vec::new(),
                depth: Some(e.depth),
                orbit_count: Some(e.orbit_count),
                h_sequence: Some(e.h_sequence.iter().map(h_display).collect()),
                values: None,
                canonical: canonical_label(e.key.family, e.key.rank, &e.key.crosses, None),
                alias: e.alias,
            })
            .collect(),
        "tgen-exceptions" => topslot_core::criteria::tgen_exceptions(max_rank)
            .into_iter()
            .map(|e| ClassifyRow {
                geometry: e.key.label(),
                family: e.key.family.letter().to_string(),
                rank: e.key.rank,
                crosses: e.key.crosses.clone(),
                words: vec![[e.word.0, e.word.1]],
                depth: None,
                orbit_count: Some(e.orbit_count),
                h_sequence: None,
                values: Some(vec![e.value]),
                canonical: canonical_label(
                    e.key.family,
                    e.key.rank,
                    &e.key.crosses,
                    Some(e.word),
                ),
                alias: e.alias,
            })
            .collect(),
        other => return Err(format!("unknown classification filter \"{other}\"")),
    };
    Ok(ClassifyReport {
        filter: filter.to_string(),
        max_rank,
        rows,
    })
}

/// Weight label of an integral WeightVector in fundamental coordinates.
pub fn weight_vector_label(
    rs: &topslot_core::roots::RootSystem,
    v: &WeightVector,
) -> Option<String> {
    let w = rs.convert(v, Basis::Weight).ok()?;
    Some(weight_label(&w.to_ints()?))
}
