//! Length-two Hasse words, Kostant lowest weights of the harmonic-curvature
//! components, and their homogeneity flags.

use crate::error::{Error, Result};
use crate::grading::ParabolicGrading;
use crate::roots::{Node, Root};

/// A length-two Hasse word `(j, k)`, denoting `sigma_j . sigma_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Node, pub Node);

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}{})", self.0, self.1)
    }
}

/// One irreducible component of H^2_+(g_-, g), keyed by its Hasse word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseComponent {
    pub word: Word,
    /// Lowest weight mu = -w.lambda in the simple-root basis.
    pub mu_root: Vec<i64>,
    /// The same weight in fundamental-weight coordinates.
    pub mu_weight: Vec<i64>,
    /// The curvature root w(-lambda).
    pub w_minus_lambda: Root,
    /// Z(mu): grading-element eigenvalue on the component.
    pub hom_mu: i64,
    /// Z(w(-lambda)): homogeneity of the curvature root.
    pub hom_wml: i64,
    /// Component contributes to H^2_+ (positive homogeneity).
    pub nonrigid: bool,
    /// Curvature root has nonnegative degree, so curvature lands in p.
    pub torsion_free: bool,
}

/// Is `(j, k)` a valid length-two Hasse word for this crossing set:
/// j crossed, and k distinct from j with k crossed or adjacent to j.
pub fn is_hasse_word(pg: &ParabolicGrading, word: Word) -> bool {
    let Word(j, k) = word;
    let rank = pg.rs().rank();
    j >= 1
        && j <= rank
        && k >= 1
        && k <= rank
        && j != k
        && pg.is_crossed(j)
        && (pg.is_crossed(k) || pg.rs().adjacent(j, k))
}

/// Enumerate all length-two Hasse words, sorted.
pub fn hasse2(pg: &ParabolicGrading) -> Vec<HasseComponent> {
    let rank = pg.rs().rank();
    let mut out = Vec::new();
    for j in 1..=rank {
        for k in 1..=rank {
            let w = Word(j, k);
            if is_hasse_word(pg, w) {
                out.push(classify_component(pg, w).expect("word was validated"));
            }
        }
    }
    out
}

/// Lowest weight mu = -w.lambda of the component for `word`, in the
/// simple-root basis:
/// `mu = -lambda + (r_j + 1) alpha_j + (r_k + 1)(alpha_k - c_kj alpha_j)`.
pub fn lowest_weight(pg: &ParabolicGrading, word: Word) -> Result<Vec<i64>> {
    if !is_hasse_word(pg, word) {
        return Err(Error::InvalidWord {
            word: (word.0, word.1),
        });
    }
    let rs = pg.rs();
    let Word(j, k) = word;
    let lambda = rs.highest_root();
    let r_j = rs.root_coroot_pairing(lambda, j);
    let r_k = rs.root_coroot_pairing(lambda, k);
    let c_kj = rs.cartan_entry(k, j);
    let mut mu: Vec<i64> = lambda.0.iter().map(|c| -c).collect();
    mu[j - 1] += (r_j + 1) + (r_k + 1) * (-c_kj);
    mu[k - 1] += r_k + 1;
    Ok(mu)
}

/// The curvature root `w(-lambda) = -(lambda - (r_j - r_k c_kj) alpha_j - r_k alpha_k)`.
pub fn curvature_root(pg: &ParabolicGrading, word: Word) -> Result<Root> {
    if !is_hasse_word(pg, word) {
        return Err(Error::InvalidWord {
            word: (word.0, word.1),
        });
    }
    let rs = pg.rs();
    let Word(j, k) = word;
    let lambda = rs.highest_root();
    let r_j = rs.root_coroot_pairing(lambda, j);
    let r_k = rs.root_coroot_pairing(lambda, k);
    let c_kj = rs.cartan_entry(k, j);
    let mut w_lambda = lambda.0.clone();
    w_lambda[j - 1] -= r_j - r_k * c_kj;
    w_lambda[k - 1] -= r_k;
    Ok(Root(w_lambda.into_iter().map(|c| -c).collect()))
}

/// Full component data for a word.
pub fn classify_component(pg: &ParabolicGrading, word: Word) -> Result<HasseComponent> {
    let rs = pg.rs();
    let mu_root = lowest_weight(pg, word)?;
    let w_minus_lambda = curvature_root(pg, word)?;
    debug_assert!(rs.is_root(&w_minus_lambda));
    let mu_weight = rs.root_to_weight_ints(&Root(mu_root.clone()));
    let hom_mu: i64 = pg.crosses().iter().map(|&i| mu_root[i - 1]).sum();
    let hom_wml = pg.z_degree(&w_minus_lambda);
    Ok(HasseComponent {
        word,
        mu_root,
        mu_weight,
        w_minus_lambda,
        hom_mu,
        hom_wml,
        nonrigid: hom_mu > 0,
        torsion_free: hom_wml >= 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{Family, RootSystem};

    #[test]
    fn a2_p1_words() {
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        let pg = ParabolicGrading::new(&a2, &[1]).unwrap();
        let comps = hasse2(&pg);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].word, Word(1, 2));
        assert_eq!(comps[0].mu_root, vec![3, 1]);
        assert_eq!(comps[0].hom_wml, 1);
    }

    #[test]
    fn g2_p1_component() {
        let g2 = RootSystem::new(Family::G, 2).unwrap();
        let pg = ParabolicGrading::new(&g2, &[1]).unwrap();
        let comps = hasse2(&pg);
        assert_eq!(comps.len(), 1);
        let c = &comps[0];
        assert_eq!(c.word, Word(1, 2));
        assert_eq!(c.mu_root, vec![4, 0]);
        assert!(c.nonrigid);
        assert!(c.torsion_free);
    }

    #[test]
    fn a3_full_flag_has_six_words() {
        let a3 = RootSystem::new(Family::A, 3).unwrap();
        let pg = ParabolicGrading::new(&a3, &[1, 2, 3]).unwrap();
        assert_eq!(hasse2(&pg).len(), 6);
    }

    #[test]
    fn cl_pl_lowest_weight() {
        let c4 = RootSystem::new(Family::C, 4).unwrap();
        let pg = ParabolicGrading::new(&c4, &[4]).unwrap();
        let mu = lowest_weight(&pg, Word(4, 3)).unwrap();
        assert_eq!(mu, vec![-2, -2, -1, 1]);
    }

    #[test]
    fn b3_p3_lowest_weight() {
        let b3 = RootSystem::new(Family::B, 3).unwrap();
        let pg = ParabolicGrading::new(&b3, &[3]).unwrap();
        let mu = lowest_weight(&pg, Word(3, 2)).unwrap();
        assert_eq!(mu, vec![-1, 0, 3]);
    }

    #[test]
    fn b5_p5_is_not_torsion_free() {
        let b5 = RootSystem::new(Family::B, 5).unwrap();
        let pg = ParabolicGrading::new(&b5, &[5]).unwrap();
        let c = classify_component(&pg, Word(5, 4)).unwrap();
        assert!(!c.torsion_free);
        assert!(c.nonrigid);
    }

    #[test]
    fn invalid_word_is_rejected() {
        let a3 = RootSystem::new(Family::A, 3).unwrap();
        let pg = ParabolicGrading::new(&a3, &[1]).unwrap();
        assert_eq!(
            lowest_weight(&pg, Word(2, 1)).unwrap_err(),
            Error::InvalidWord { word: (2, 1) }
        );
        assert_eq!(
            lowest_weight(&pg, Word(1, 3)).unwrap_err(),
            Error::InvalidWord { word: (1, 3) }
        );
    }
}
