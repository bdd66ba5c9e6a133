//! Regeneration of the reference tables from first principles.  Nothing here
//! reads stored rows: every cell is recomputed from the root-system engine;
//! the golden copies live only in the regression tests.

use crate::render::TableDoc;
use crate::report::weight_label;
use topslot_core::cascade::{h_display, tsoc};
use topslot_core::grading::ParabolicGrading;
use topslot_core::kostant::{classify_component, hasse2, Word};
use topslot_core::roots::{root_notation, Basis, Family, Node, RootSystem, WeightVector};

pub const TABLE_NAMES: [&str; 6] = ["hw", "sc", "orth-minuscule", "1-graded", "tor-free", "nyr"];

pub fn table(name: &str, max_rank: usize) -> Result<TableDoc, String> {
    match name {
        "hw" => Ok(highest_weights(max_rank)),
        "sc" => Ok(sub_cominuscule(max_rank)),
        "orth-minuscule" => Ok(orth_minuscule(max_rank)),
        "1-graded" => Ok(one_graded(max_rank)),
        "tor-free" => Ok(torsion_free(max_rank)),
        "nyr" => Ok(nyr_multiorbit(max_rank)),
        other => Err(format!(
            "unknown table \"{other}\"; known: {}",
            TABLE_NAMES.join(", ")
        )),
    }
}

/// Highest-root data for one type.
pub fn highest_weight_row(family: Family, rank: usize) -> (String, String) {
    let rs = RootSystem::new(family, rank).unwrap();
    let weight = weight_label(&rs.root_to_weight_ints(rs.highest_root()));
    (weight, rs.highest_root().notation())
}

/// The nine families, instantiated at their largest in-range rank.
fn highest_weights(max_rank: usize) -> TableDoc {
    let mut rows = Vec::new();
    let display_ranks: Vec<(Family, usize)> = vec![
        (Family::A, max_rank.max(1)),
        (Family::B, max_rank.max(3)),
        (Family::C, max_rank.max(2)),
        (Family::D, max_rank.max(4)),
        (Family::G, 2),
        (Family::F, 4),
        (Family::E, 6),
        (Family::E, 7),
        (Family::E, 8),
    ];
    for (f, l) in display_ranks {
        let (weight, root) = highest_weight_row(f, l);
        rows.push(vec![format!("{}{}", f.letter(), l), weight, root]);
    }
    TableDoc {
        name: "hw".into(),
        headers: vec!["type".into(), "lambda (weight)".into(), "lambda (root)".into()],
        rows,
    }
}

/// Instances of the seven minuscule families at ranks up to the bound.
pub fn minuscule_instances(max_rank: usize) -> Vec<(Family, usize, Node)> {
    let mut out = Vec::new();
    for l in 1..=max_rank {
        for k in 1..=l {
            out.push((Family::A, l, k));
        }
    }
    for l in 2..=max_rank {
        out.push((Family::B, l, 1));
        out.push((Family::C, l, l));
    }
    for l in 4..=max_rank {
        out.push((Family::D, l, 1));
        out.push((Family::D, l, l));
    }
    if max_rank >= 6 {
        out.push((Family::E, 6, 6));
    }
    if max_rank >= 7 {
        out.push((Family::E, 7, 7));
    }
    out
}

fn sub_cominuscule(max_rank: usize) -> TableDoc {
    let mut rows = Vec::new();
    for (f, l, k) in minuscule_instances(max_rank) {
        let rs = RootSystem::new(f, l).unwrap();
        let pg = ParabolicGrading::new(&rs, &[k]).unwrap();
        assert_eq!(pg.depth(), 1, "minuscule instances are |1|-graded");
        let cascade = tsoc(&pg).unwrap();
        let pattern = pg.top_slot_pattern().unwrap();
        rows.push(vec![
            format!("{}{}/P{}", f.letter(), l, k),
            pg.levi_semisimple().label(),
            pattern.name(),
            cascade.orbit_count.to_string(),
        ]);
    }
    TableDoc {
        name: "sc".into(),
        headers: vec![
            "G/P".into(),
            "G0^ss".into(),
            "top slot".into(),
            "#orbits".into(),
        ],
        rows,
    }
}

/// The maximal-root rows: (family, rank, crossed node, optional Weyl word).
pub fn orth_instances(max_rank: usize) -> Vec<(Family, usize, Node, Option<Vec<Node>>)> {
    let mut out = Vec::new();
    for l in 3..=max_rank {
        for k in 2..l {
            out.push((Family::A, l, k, Some(vec![1, l])));
        }
    }
    for l in 2..=max_rank {
        out.push((Family::B, l, 1, None));
    }
    for l in 4..=max_rank {
        out.push((Family::D, l, 1, None));
    }
    for l in 3..=max_rank {
        out.push((Family::C, l, l, Some(vec![1])));
    }
    for l in 4..=max_rank {
        out.push((Family::D, l, l, Some(vec![2, 1, 3, 2])));
    }
    if max_rank >= 6 {
        out.push((Family::E, 6, 6, Some(vec![2, 4, 3, 5, 4, 2])));
    }
    if max_rank >= 7 {
        out.push((Family::E, 7, 7, Some(vec![1, 3, 4, 2, 5, 4, 3, 1])));
    }
    out
}

fn orth_minuscule(max_rank: usize) -> TableDoc {
    let mut rows = Vec::new();
    for (f, l, k, word) in orth_instances(max_rank) {
        let rs = RootSystem::new(f, l).unwrap();
        let pg = ParabolicGrading::new(&rs, &[k]).unwrap();
        let cascade = tsoc(&pg).unwrap();
        assert!(cascade.orbit_count >= 2);
        let beta = &cascade.betas[1];
        let word_cell = match &word {
            Some(w) => {
                // the listed word must send lambda to beta
                let lam = WeightVector::from_root(rs.highest_root());
                let image = rs.apply_word(w, &lam).unwrap();
                let image = rs.convert(&image, Basis::Root).unwrap();
                assert_eq!(
                    image.to_ints().unwrap(),
                    beta.0,
                    "{}{}/P{}: word does not reach beta",
                    f.letter(),
                    l,
                    k
                );
                format!("({})", w.iter().map(|n| n.to_string()).collect::<String>())
            }
            None => "-".into(),
        };
        rows.push(vec![
            format!("{}{}/P{}", f.letter(), l, k),
            rs.highest_root().notation(),
            beta.notation(),
            word_cell,
            cascade.trace[1].label.clone(),
        ]);
    }
    TableDoc {
        name: "orth-minuscule".into(),
        headers: vec![
            "G/P".into(),
            "lambda (root)".into(),
            "beta (root)".into(),
            "word".into(),
            "L/P".into(),
        ],
        rows,
    }
}

/// Canonical |1|-graded instances with their curvature words.
pub fn one_graded_instances(max_rank: usize) -> Vec<(Family, usize, Node, Vec<Word>)> {
    let mut out = Vec::new();
    for l in 2..=max_rank {
        out.push((Family::A, l, 1, vec![Word(1, 2)]));
    }
    for l in 3..=max_rank {
        out.push((Family::A, l, 2, vec![Word(2, 1), Word(2, 3)]));
    }
    for l in 3..=max_rank {
        for k in 3..=l.div_ceil(2) {
            out.push((Family::A, l, k, vec![Word(k, k - 1), Word(k, k + 1)]));
        }
    }
    for l in 2..=max_rank {
        out.push((Family::B, l, 1, vec![Word(1, 2)]));
    }
    for l in 4..=max_rank {
        out.push((Family::D, l, 1, vec![Word(1, 2)]));
    }
    for l in 3..=max_rank {
        out.push((Family::C, l, l, vec![Word(l, l - 1)]));
    }
    for l in 5..=max_rank {
        out.push((Family::D, l, l, vec![Word(l, l - 2)]));
    }
    if max_rank >= 6 {
        out.push((Family::E, 6, 6, vec![Word(6, 5)]));
    }
    if max_rank >= 7 {
        out.push((Family::E, 7, 7, vec![Word(7, 6)]));
    }
    out
}

fn one_graded(max_rank: usize) -> TableDoc {
    let mut rows = Vec::new();
    for (f, l, k, words) in one_graded_instances(max_rank) {
        let rs = RootSystem::new(f, l).unwrap();
        let pg = ParabolicGrading::new(&rs, &[k]).unwrap();
        assert_eq!(pg.depth(), 1);
        let cascade = tsoc(&pg).unwrap();
        let all_words: Vec<Word> = hasse2(&pg).iter().map(|c| c.word).collect();
        assert_eq!(all_words, words, "{}{}/P{}", f.letter(), l, k);
        let h_seq = cascade
            .h_sequence
            .iter()
            .map(h_display)
            .collect::<Vec<_>>()
            .join(", ");
        for w in words {
            let comp = classify_component(&pg, w).unwrap();
            rows.push(vec![
                format!("{}{}/P{}", f.letter(), l, k),
                cascade.orbit_count.to_string(),
                h_seq.clone(),
                format!("({}{})", w.0, w.1),
                root_notation(&comp.mu_root),
            ]);
        }
    }
    TableDoc {
        name: "1-graded".into(),
        headers: vec![
            "G/P".into(),
            "#orb".into(),
            "H-sequence".into(),
            "w".into(),
            "mu (root)".into(),
        ],
        rows,
    }
}

fn torsion_free(max_rank: usize) -> TableDoc {
    let mut rows = Vec::new();
    for entry in topslot_core::criteria::classify_torsion_free(max_rank) {
        let rs = RootSystem::new(entry.key.family, entry.key.rank).unwrap();
        let pg = ParabolicGrading::new(&rs, &entry.key.crosses).unwrap();
        if pg.depth() < 2 {
            continue;
        }
        let cascade = tsoc(&pg).unwrap();
        let h_seq = cascade
            .h_sequence
            .iter()
            .map(h_display)
            .collect::<Vec<_>>()
            .join(", ");
        for w in &entry.words {
            let comp = classify_component(&pg, *w).unwrap();
            rows.push(vec![
                entry.key.label(),
                pg.depth().to_string(),
                cascade.orbit_count.to_string(),
                h_seq.clone(),
                format!("({}{})", w.0, w.1),
                root_notation(&comp.mu_root),
                entry.alias.clone().unwrap_or_else(|| "-".into()),
            ]);
        }
    }
    TableDoc {
        name: "tor-free".into(),
        headers: vec![
            "G/P".into(),
            "nu".into(),
            "#orb".into(),
            "H-sequence".into(),
            "w".into(),
            "mu (root)".into(),
            "alias".into(),
        ],
        rows,
    }
}

fn nyr_multiorbit(max_rank: usize) -> TableDoc {
    let rows = topslot_core::criteria::classify_nyr_multiorbit(max_rank)
        .into_iter()
        .map(|e| {
            vec![
                e.key.label(),
                e.depth.to_string(),
                e.orbit_count.to_string(),
                e.h_sequence.iter().map(h_display).collect::<Vec<_>>().join(", "),
            ]
        })
        .collect();
    TableDoc {
        name: "nyr".into(),
        headers: vec![
            "G/P".into(),
            "nu".into(),
            "#orb".into(),
            "H-sequence".into(),
        ],
        rows,
    }
}
