//! Command-line front end for the grading engine: geometry-spec parsing,
//! structured reports with a stable JSON schema, table generation, and the
//! renderers shared by the binary and the regression harness.

pub mod render;
pub mod report;
pub mod tables;

use topslot_core::roots::{Family, Node, RootSystem};
use topslot_core::Result;

/// A parsed geometry label: algebra plus crossing set, e.g. "B5" / "1,2".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometrySpec {
    pub family: Family,
    pub rank: usize,
    pub crosses: Vec<Node>,
}

impl GeometrySpec {
    /// Parse an algebra label such as "G2", "B5", "e7".
    pub fn parse_algebra(label: &str) -> std::result::Result<(Family, usize), String> {
        let label = label.trim();
        let mut chars = label.chars();
        let letter = chars
            .next()
            .ok_or_else(|| "empty algebra label".to_string())?;
        let family = Family::from_letter(letter)
            .ok_or_else(|| format!("unknown family letter '{letter}' in \"{label}\""))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| format!("cannot read a rank in \"{label}\""))?;
        Ok((family, rank))
    }

    /// Parse a crossing list such as "1,2" or "3".
    pub fn parse_crosses(text: &str) -> std::result::Result<Vec<Node>, String> {
        let mut out = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let n: usize = part
                .parse()
                .map_err(|_| format!("bad node index \"{part}\" in crossing list"))?;
            out.push(n);
        }
        if out.is_empty() {
            return Err("crossing list is empty".into());
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn new(algebra: &str, crosses: &str) -> std::result::Result<GeometrySpec, String> {
        let (family, rank) = Self::parse_algebra(algebra)?;
        let crosses = Self::parse_crosses(crosses)?;
        Ok(GeometrySpec {
            family,
            rank,
            crosses,
        })
    }

    /// Parse a combined display label such as "B5/P5" or "D6/P1,4".
    pub fn parse_label(label: &str) -> std::result::Result<GeometrySpec, String> {
        let (algebra, rest) = label
            .split_once("/P")
            .ok_or_else(|| format!("expected <algebra>/P<crosses>, got \"{label}\""))?;
        GeometrySpec::new(algebra, rest)
    }

    pub fn root_system(&self) -> Result<RootSystem> {
        RootSystem::new(self.family, self.rank)
    }

    pub fn label(&self) -> String {
        let ps: Vec<String> = self.crosses.iter().map(|c| c.to_string()).collect();
        if ps.is_empty() {
            format!("{}{}", self.family.letter(), self.rank)
        } else {
            format!("{}{}/P{}", self.family.letter(), self.rank, ps.join(","))
        }
    }
}

/// Parse a length-two word given as "21", "2,1" or "(2,1)".
pub fn parse_word(text: &str) -> std::result::Result<(Node, Node), String> {
    let cleaned: String = text
        .chars()
        .filter(|c| !matches!(c, '(' | ')' | ' '))
        .collect();
    let parts: Vec<&str> = if cleaned.contains(',') {
        cleaned.split(',').collect()
    } else if cleaned.len() == 2 {
        return match (
            cleaned[0..1].parse::<usize>(),
            cleaned[1..2].parse::<usize>(),
        ) {
            (Ok(j), Ok(k)) => Ok((j, k)),
            _ => Err(format!("cannot parse word \"{text}\"")),
        };
    } else {
        return Err(format!("cannot parse word \"{text}\""));
    };
    if parts.len() != 2 {
        return Err(format!("a word has exactly two letters, got \"{text}\""));
    }
    let j = parts[0]
        .parse()
        .map_err(|_| format!("bad word letter \"{}\"", parts[0]))?;
    let k = parts[1]
        .parse()
        .map_err(|_| format!("bad word letter \"{}\"", parts[1]))?;
    Ok((j, k))
}

/// ASCII Dynkin diagram with Bourbaki numbering; "=>" points at the shorter
/// of the two roots it joins.
pub fn diagram_ascii(family: Family, rank: usize) -> String {
    let chain = |nodes: &[String], seps: &[&str]| -> String {
        let mut s = String::new();
        for (i, n) in nodes.iter().enumerate() {
            if i > 0 {
                s.push_str(seps[i - 1]);
            }
            s.push_str(n);
        }
        s
    };
    let labels: Vec<String> = (1..=rank).map(|i| i.to_string()).collect();
    match family {
        Family::A => chain(&labels, &vec![" - "; rank.saturating_sub(1)]),
        Family::B => {
            let mut seps = vec![" - "; rank - 1];
            seps[rank - 2] = " => ";
            chain(&labels, &seps)
        }
        Family::C => {
            let mut seps = vec![" - "; rank - 1];
            seps[rank - 2] = " <= ";
            chain(&labels, &seps)
        }
        Family::F => chain(&labels, &[" - ", " => ", " - "]),
        Family::G => "1 <= 2   (triple bond)".to_string(),
        Family::D => {
            let trunk = chain(&labels[..rank - 2], &vec![" - "; rank - 3]);
            let pad = " ".repeat(trunk.len());
            format!(
                "{pad} / {}\n{trunk}\n{pad} \\ {}",
                labels[rank - 2],
                labels[rank - 1]
            )
        }
        Family::E => {
            // node 2 hangs off node 4, the third entry of the trunk
            let top_pad = "1 - 3 - ".len();
            let mut trunk: Vec<String> = vec![labels[0].clone()];
            trunk.extend(labels[2..].iter().cloned());
            let line = chain(&trunk, &vec![" - "; trunk.len() - 1]);
            format!("{}2\n{}|\n{line}", " ".repeat(top_pad), " ".repeat(top_pad))
        }
    }
}
