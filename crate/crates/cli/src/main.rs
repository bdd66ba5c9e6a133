use clap::{Parser, Subcommand};
use std::process::ExitCode;
use topslot::report::{
    classify_report, cm_report, flatjets_report, grading_report, h2_report, info_report,
    prolong_report, tsoc_report,
};
use topslot::{parse_word, tables, GeometrySpec};

/// Exact combinatorics of parabolic gradings: curvature components,
/// top-slot cascades, isotropy criteria, prolongations, flat-model jets,
/// classification sweeps, and reference tables.
#[derive(Parser)]
#[command(name = "topslot", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Root-system summary for an algebra, with the numbered Dynkin diagram.
    Info {
        /// Algebra label, e.g. G2 or B5
        algebra: String,
        /// Optional crossing set, e.g. 1,2: adds the grading summary
        #[arg(long)]
        crosses: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Parabolic grading: depth, layer dimensions, Levi factor, top slot.
    Grading {
        algebra: String,
        #[arg(long)]
        crosses: String,
        #[arg(long)]
        json: bool,
    },
    /// Curvature components: length-two words, lowest weights, flags.
    H2 {
        algebra: String,
        #[arg(long)]
        crosses: String,
        #[arg(long)]
        json: bool,
    },
    /// Top-slot orthogonal cascade with its H-sequence and orbit count.
    Tsoc {
        algebra: String,
        #[arg(long)]
        crosses: String,
        #[arg(long)]
        json: bool,
    },
    /// Isotropy criteria for the cascade representatives.
    Cm {
        algebra: String,
        #[arg(long)]
        crosses: String,
        /// Cascade index; all of 1..=m when omitted
        #[arg(long)]
        j: Option<usize>,
        /// Restrict the aggregate verdict to these components, e.g. "21;23"
        #[arg(long)]
        components: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Prolongation profile of one curvature component.
    Prolong {
        algebra: String,
        #[arg(long)]
        crosses: String,
        /// Length-two word, e.g. 21 or (2,1)
        #[arg(long)]
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Flat-model jet filtration: symmetry dimension and jet kernels.
    Flatjets {
        algebra: String,
        #[arg(long)]
        crosses: String,
        /// Jet order K (kernels reported for 0..=K)
        #[arg(long, default_value_t = 2)]
        order: u32,
        #[arg(long)]
        json: bool,
    },
    /// Classification sweeps over all geometries up to a rank bound.
    Classify {
        /// torsion-free | nyr-multiorbit | tgen-exceptions
        #[arg(long)]
        filter: String,
        #[arg(long, default_value_t = 9)]
        max_rank: usize,
        /// text | csv | json | tex
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Reference tables, regenerated from first principles.
    Tables {
        /// hw | sc | orth-minuscule | 1-graded | tor-free | nyr
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        /// text | csv | json | tex
        #[arg(long, default_value = "text")]
        format: String,
    },
}

/// Exit codes: 0 success, 1 internal invariant failure, 2 usage error.
fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

type Failure = (u8, String);

fn usage<T: std::fmt::Display>(e: T) -> Failure {
    (2, e.to_string())
}

fn core_error(e: topslot_core::Error) -> Failure {
    (if e.is_internal() { 1 } else { 2 }, e.to_string())
}

fn emit<T: serde::Serialize>(value: &T, json: bool, text: String) -> Result<(), Failure> {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(value).map_err(|e| (1u8, e.to_string()))?
        );
    } else {
        println!("{text}");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Info {
            algebra,
            crosses,
            json,
        } => {
            let (family, rank) = GeometrySpec::parse_algebra(&algebra).map_err(usage)?;
            let crosses = match crosses {
                Some(c) => GeometrySpec::parse_crosses(&c).map_err(usage)?,
                None => Vec::new(),
            };
            let with_grading = !crosses.is_empty();
            let spec = GeometrySpec {
                family,
                rank,
                crosses,
            };
            let r = info_report(&spec, with_grading).map_err(core_error)?;
            let mut text = format!(
                "{}: dim {}, {} positive roots\nhighest root: {} = {}\ncontact nodes: {:?}\n{}",
                r.algebra,
                r.dim,
                r.num_positive_roots,
                r.highest_root_notation,
                r.highest_root_weight,
                r.contact_nodes,
                r.diagram
            );
            if let Some(g) = &r.grading {
                text.push_str(&format!("\n\n{}", grading_text(g)));
            }
            emit(&r, json, text)
        }
        Cmd::Grading {
            algebra,
            crosses,
            json,
        } => {
            let spec = GeometrySpec::new(&algebra, &crosses).map_err(usage)?;
            let r = grading_report(&spec).map_err(core_error)?;
            emit(&r, json, grading_text(&r))
        }
        Cmd::H2 {
            algebra,
            crosses,
            json,
        } => {
            let spec = GeometrySpec::new(&algebra, &crosses).map_err(usage)?;
            let r = h2_report(&spec).map_err(core_error)?;
            let mut text = format!("{}: {} component(s) of H^2\n", spec.label(), r.components.len());
            for c in &r.components {
                text.push_str(&format!(
                    "  w=({}{})  mu={}  Z(mu)={}  Z(w(-lambda))={}  nonrigid={}  torsion-free={}{}\n",
                    c.word[0],
                    c.word[1],
                    c.mu_root_notation,
                    c.hom_mu,
                    c.hom_wml,
                    c.nonrigid,
                    c.torsion_free,
                    match &c.mirror_of {
                        Some(w) => format!("  [mirror of ({}{})]", w[0], w[1]),
                        None => String::new(),
                    }
                ));
            }
            emit(&r, json, text.trim_end().to_string())
        }
        Cmd::Tsoc {
            algebra,
            crosses,
            json,
        } => {
            let spec = GeometrySpec::new(&algebra, &crosses).map_err(usage)?;
            let r = tsoc_report(&spec).map_err(core_error)?;
            let mut text = format!("{}: {} orbit(s) in P(g_nu)\n", spec.label(), r.orbit_count);
            for i in 0..r.betas.len() {
                text.push_str(&format!(
                    "  beta_{} = {}  ({})   H_{} = {}\n",
                    i + 1,
                    r.betas_notation[i],
                    r.betas_weight[i],
                    i + 1,
                    r.h_sequence_display[i]
                ));
            }
            let labels: Vec<String> = r
                .trace
                .iter()
                .map(|s| format!("{} [{}]", s.label, s.pattern))
                .collect();
            text.push_str(&format!("  trace: {}", labels.join("  ~>  ")));
            emit(&r, json, text)
        }
        Cmd::Cm {
            algebra,
            crosses,
            j,
            components,
            json,
        } => {
            let spec = GeometrySpec::new(&algebra, &crosses).map_err(usage)?;
            let filter: Option<Vec<(usize, usize)>> = match components {
                Some(list) => Some(
                    list.split(';')
                        .map(parse_word)
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(usage)?,
                ),
                None => None,
            };
            let indices: Vec<usize> = match j {
                Some(j) => vec![j],
                None => {
                    let first = cm_report(&spec, 1, filter.as_deref()).map_err(core_error)?;
                    (1..=first.orbit_count).collect()
                }
            };
            let mut reports = Vec::new();
            for idx in indices {
                reports.push(cm_report(&spec, idx, filter.as_deref()).map_err(core_error)?);
            }
            let mut text = String::new();
            for r in &reports {
                let spectrum: Vec<String> = r
                    .cm2_spectrum
                    .iter()
                    .map(|(ev, m)| format!("{ev}^{m}"))
                    .collect();
                text.push_str(&format!(
                    "j={}  H_{}={}\n  CM.1: {}\n  CM.2: ok={} spectrum {{{}}}  centralizer dim {}  isolated={}\n  CM.3': ok={}\n",
                    r.j,
                    r.j,
                    r.h_display,
                    r.cm1,
                    r.cm2_ok,
                    spectrum.join(", "),
                    r.centralizer.len(),
                    r.isolated,
                    r.cm3prime_ok
                ));
                for v in &r.cm3prime {
                    text.push_str(&format!(
                        "    mu(H_{}) = {:3}  at w=({}{}){}\n",
                        r.j,
                        v.value,
                        v.word[0],
                        v.word[1],
                        if v.counted { "" } else { "  [not counted]" }
                    ));
                }
            }
            emit(&reports, json, text.trim_end().to_string())
        }
        Cmd::Prolong {
            algebra,
            crosses,
            word,
            json,
        } => {
            let spec = GeometrySpec::new(&algebra, &crosses).map_err(usage)?;
            let word = parse_word(&word).map_err(usage)?;
            let r = prolong_report(&spec, word).map_err(core_error)?;
            let mut text = format!(
                "{} w=({}{}): I_w={:?} J_w={:?} height {} (depth {}), dim a_+ = {}, dim g_<=0 = {}\n",
                spec.label(),
                word.0,
                word.1,
                r.i_w,
                r.j_w,
                r.height,
                r.depth,
                r.dim_positive,
                r.dim_nonpositive
            );
            for (deg, roots) in &r.layers {
                let names: Vec<String> = roots
                    .iter()
                    .map(|rt| topslot_core::roots::root_notation(&rt.coeffs))
                    .collect();
                text.push_str(&format!("  a_{}: {}\n", deg, names.join(", ")));
            }
            emit(&r, json, text.trim_end().to_string())
        }
        Cmd::Flatjets {
            algebra,
            crosses,
            order,
            json,
        } => {
            if order > 3 {
                return Err(usage("jet order is capped at 3"));
            }
            let spec = GeometrySpec::new(&algebra, &crosses).map_err(usage)?;
            let r = flatjets_report(&spec, order).map_err(core_error)?;
            let text = format!(
                "{}: sym_dim {} kernel dims {:?}",
                spec.label(),
                r.sym_dim,
                r.kernel_dims
            );
            emit(&r, json, text)
        }
        Cmd::Classify {
            filter,
            max_rank,
            format,
        } => {
            if max_rank > 9 {
                return Err(usage("classification sweeps support max-rank up to 9"));
            }
            let r = classify_report(&filter, max_rank).map_err(usage)?;
            if format == "json" {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&r).map_err(|e| (1u8, e.to_string()))?
                );
                return Ok(());
            }
            let doc = classify_doc(&r);
            println!("{}", doc.render(&format).map_err(usage)?);
            Ok(())
        }
        Cmd::Tables {
            name,
            max_rank,
            format,
        } => {
            if max_rank > 9 {
                return Err(usage("tables support max-rank up to 9"));
            }
            let doc = tables::table(&name, max_rank).map_err(usage)?;
            println!("{}", doc.render(&format).map_err(usage)?);
            Ok(())
        }
    }
}

fn grading_text(r: &topslot::report::GradingReport) -> String {
    let dims: Vec<String> = r
        .layer_dims
        .iter()
        .map(|(k, d)| format!("g_{k}: {d}"))
        .collect();
    let crosses: Vec<String> = r.crosses.iter().map(|c| c.to_string()).collect();
    format!(
        "{}/P{}: depth {}\nlayers: {}\nlevi: {} (center dim {})\ntop slot: {} [{}]\ng_-1 modules: {}\ng_+1 modules: {}",
        r.algebra,
        crosses.join(","),
        r.depth,
        dims.join(", "),
        r.levi,
        r.center_dim,
        r.top_slot,
        r.top_slot_pattern,
        r.g_minus1_modules.join(" | "),
        r.g1_modules.join(" | ")
    )
}

fn classify_doc(r: &topslot::report::ClassifyReport) -> topslot::render::TableDoc {
    let mut rows = Vec::new();
    for row in &r.rows {
        let words: Vec<String> = row
            .words
            .iter()
            .map(|w| format!("({}{})", w[0], w[1]))
            .collect();
        rows.push(vec![
            row.geometry.clone(),
            row.depth.map(|d| d.to_string()).unwrap_or_else(|| "-".into()),
            row.orbit_count
                .map(|m| m.to_string())
                .unwrap_or_else(|| "-".into()),
            if words.is_empty() {
                "-".into()
            } else {
                words.join(" ")
            },
            row.h_sequence
                .as_ref()
                .map(|h| h.join(", "))
                .unwrap_or_else(|| "-".into()),
            row.values
                .as_ref()
                .map(|v| {
                    v.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .unwrap_or_else(|| "-".into()),
            row.canonical.clone(),
            row.alias.clone().unwrap_or_else(|| "-".into()),
        ]);
    }
    topslot::render::TableDoc {
        name: format!("classify-{}", r.filter),
        headers: vec![
            "G/P".into(),
            "nu".into(),
            "#orb".into(),
            "words".into(),
            "H-sequence".into(),
            "mu(H_m)".into(),
            "canonical".into(),
            "alias".into(),
        ],
        rows,
    }
}
