//! Flat-model symmetry vector fields on the negative exponential chart, as
//! truncated formal series, and the jet filtration they induce.
//!
//! For `X` in the algebra, the induced field at chart point
//! `x = sum x_i e_i` (over a basis of the negative part) is computed by
//! pushing `exp(tX) exp(x)` through the Gauss decomposition
//! `exp(y_-) . (parabolic part)` and taking the t-derivative at 0.  At the
//! algebra level this collapses to
//!
//! ```text
//!     v(x) = T_x^{-1} ( pi_- ( exp(-ad_x) X ) ),
//!     T_x  = sum_{k>=0} (-ad_x)^k / (k+1)!   restricted to g_-,
//! ```
//!
//! which is exact because `ad_x` is nilpotent.  All coefficients are exact
//! rationals.  The assignment `X -> field` is an anti-homomorphism:
//! fields satisfy `[field(X), field(Y)] = -field([X, Y])`, which the test
//! suite pins down.

use crate::chevalley::{chevalley_constants, StructureConstants};
use crate::error::{Error, Result};
use crate::grading::ParabolicGrading;
use crate::poly::{monomials_up_to, TruncPoly};
use crate::roots::{Root, RootSystem};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Default bound on the negative chart dimension.
pub const CHART_LIMIT: usize = 20;

/// A truncated polynomial vector field on the negative chart.
#[derive(Debug, Clone)]
pub struct FormalField {
    /// Chart variables: the roots of g_-, first layer first.
    pub vars: Vec<Root>,
    /// One truncated component per variable.
    pub components: Vec<TruncPoly>,
    pub truncation: u32,
}

impl FormalField {
    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    /// Smallest jet order at the origin with nonzero data.
    pub fn min_jet_order(&self) -> Option<u32> {
        self.components.iter().filter_map(|c| c.min_degree()).min()
    }

    /// Smallest weighted jet order: coefficients graded with each chart
    /// variable counting with the depth of its layer.  This is the jet
    /// filtration natural to filtered structures; a weighted order w term
    /// has plain degree between w/nu and w.
    pub fn min_weighted_jet_order(&self, weights: &[u32]) -> Option<u32> {
        let mut best: Option<u32> = None;
        for comp in &self.components {
            for (mono, _) in comp.terms() {
                let w: u32 = mono
                    .iter()
                    .zip(weights)
                    .map(|(&e, &wt)| e as u32 * wt)
                    .sum();
                best = Some(best.map_or(w, |b| b.min(w)));
            }
        }
        best
    }

    /// Lie bracket of vector fields, valid one order below the truncation.
    pub fn bracket(&self, other: &FormalField) -> FormalField {
        let trunc = self.truncation.saturating_sub(1);
        let n = self.vars.len();
        let components = (0..n)
            .map(|i| {
                let mut acc = TruncPoly::zero(n, trunc);
                for j in 0..n {
                    acc.add_assign(
                        &self.components[j]
                            .truncated(trunc)
                            .mul(&other.components[i].derivative(j).truncated(trunc)),
                    );
                    let sub = other.components[j]
                        .truncated(trunc)
                        .mul(&self.components[i].derivative(j).truncated(trunc));
                    acc.add_assign(&sub.neg());
                }
                acc
            })
            .collect();
        FormalField {
            vars: self.vars.clone(),
            components,
            truncation: trunc,
        }
    }
}

/// Kernel dimensions of the jet-evaluation maps at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetFiltration {
    /// Dimension of the symmetry algebra (= dim g).
    pub sym_dim: usize,
    /// `kernel_dims[k]` = dim of the fields with vanishing k-jet, k = 0..=K.
    pub kernel_dims: Vec<usize>,
}

/// Precomputed flat-model data for one grading.
pub struct FlatModel<'a, 'rs> {
    pg: &'a ParabolicGrading<'rs>,
    pub sc: StructureConstants,
    /// Negative roots in variable order (layer -1 first, then deeper).
    neg_roots: Vec<Root>,
    /// Basis index of each chart variable's root vector.
    neg_basis: Vec<usize>,
    /// Reverse lookup: basis index -> variable index.
    var_of_basis: HashMap<usize, usize>,
    nilpotency: usize,
}

impl<'a, 'rs> FlatModel<'a, 'rs> {
    pub fn new(pg: &'a ParabolicGrading<'rs>) -> Result<FlatModel<'a, 'rs>> {
        let rs = pg.rs();
        let dim_neg: usize = (1..=pg.depth()).map(|k| pg.layer_dim(-k)).sum();
        if dim_neg > CHART_LIMIT {
            return Err(Error::ChartTooLarge {
                dim: dim_neg,
                limit: CHART_LIMIT,
            });
        }
        let sc = chevalley_constants(rs)?;
        let mut neg_roots = Vec::new();
        for k in 1..=pg.depth() {
            neg_roots.extend(pg.layer_roots(-k));
        }
        let neg_basis: Vec<usize> = neg_roots.iter().map(|r| sc.root_vector_index(r)).collect();
        let var_of_basis = neg_basis.iter().enumerate().map(|(v, &b)| (b, v)).collect();
        Ok(FlatModel {
            pg,
            sc,
            neg_roots,
            neg_basis,
            var_of_basis,
            nilpotency: 2 * pg.depth() as usize + 1,
        })
    }

    pub fn rs(&self) -> &RootSystem {
        self.pg.rs()
    }

    pub fn chart_dim(&self) -> usize {
        self.neg_roots.len()
    }

    pub fn vars(&self) -> &[Root] {
        &self.neg_roots
    }

    /// Apply `ad_x` with symbolic `x = sum x_i e_i` to a dense algebra-valued
    /// polynomial vector.
    fn ad_x(&self, state: &[TruncPoly]) -> Vec<TruncPoly> {
        let rs = self.pg.rs();
        let n = self.neg_roots.len();
        let trunc = state.iter().map(|p| p.truncation()).max().unwrap_or(0);
        let mut out = vec![TruncPoly::zero(n, trunc); state.len()];
        for (j, sj) in state.iter().enumerate() {
            if sj.is_zero() {
                continue;
            }
            for (i, &bi) in self.neg_basis.iter().enumerate() {
                for (t, c) in self.sc.bracket_basis(rs, bi, j) {
                    let mut term = sj.mul_var(i);
                    term.scale(&BigRational::from_integer(c.into()));
                    out[t].add_assign(&term);
                }
            }
        }
        out
    }

    /// The field of `X` (dense coefficients over the Chevalley basis).
    pub fn field(&self, x: &[BigRational], order: u32) -> Result<FormalField> {
        if order < 1 {
            return Err(Error::TruncationTooLow {
                order: order as usize,
            });
        }
        let dim = self.sc.dim();
        if x.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: x.len(),
            });
        }
        let n = self.neg_roots.len();
        // W = exp(-ad_x) X
        let mut acc: Vec<TruncPoly> = x
            .iter()
            .map(|c| TruncPoly::constant(n, order, c.clone()))
            .collect();
        let mut term = acc.clone();
        for k in 1..=self.nilpotency {
            let mut next = self.ad_x(&term);
            let factor = -BigRational::one() / BigRational::from_integer((k as i64).into());
            for p in next.iter_mut() {
                p.scale(&factor);
            }
            if next.iter().all(|p| p.is_zero()) {
                break;
            }
            for (a, t) in acc.iter_mut().zip(&next) {
                a.add_assign(t);
            }
            term = next;
        }
        // restrict to the negative part
        let w_neg: Vec<TruncPoly> = self
            .neg_basis
            .iter()
            .map(|&b| acc[b].clone())
            .collect();
        // solve T(v) = w_neg by the Neumann series for I - T
        let mut v = w_neg.clone();
        let mut residual = w_neg.clone();
        for _ in 0..=(self.pg.depth() as usize + order as usize + 1) {
            residual = self.remainder(&residual);
            if residual.iter().all(|p| p.is_zero()) {
                break;
            }
            for (a, t) in v.iter_mut().zip(&residual) {
                a.add_assign(t);
            }
        }
        debug_assert!(residual.iter().all(|p| p.is_zero()));
        Ok(FormalField {
            vars: self.neg_roots.clone(),
            components: v,
            truncation: order,
        })
    }

    /// `(I - T)` applied to a chart-valued polynomial vector, where `T` is
    /// the exponential-differential factor restricted to g_-.
    fn remainder(&self, state: &[TruncPoly]) -> Vec<TruncPoly> {
        let n = self.neg_roots.len();
        let trunc = state.iter().map(|p| p.truncation()).max().unwrap_or(0);
        // dense over the full basis so ad_x can be reused
        let dim = self.sc.dim();
        let mut dense = vec![TruncPoly::zero(n, trunc); dim];
        for (v, &b) in self.neg_basis.iter().enumerate() {
            dense[b] = state[v].clone();
        }
        let mut out = vec![TruncPoly::zero(n, trunc); n];
        let mut term = dense;
        let mut factorial = 1i64;
        for k in 1..=self.nilpotency {
            term = self.ad_x(&term);
            if term.iter().all(|p| p.is_zero()) {
                break;
            }
            factorial *= k as i64 + 1;
            let sign = if k % 2 == 0 { -1 } else { 1 };
            let factor = BigRational::new((sign).into(), factorial.into());
            for (vi, &b) in self.neg_basis.iter().enumerate() {
                out[vi].add_scaled(&term[b], &factor);
            }
        }
        out
    }

    /// The field of the `idx`-th Chevalley basis element.
    pub fn basis_field(&self, idx: usize, order: u32) -> Result<FormalField> {
        let mut x = vec![BigRational::zero(); self.sc.dim()];
        x[idx] = BigRational::one();
        self.field(&x, order)
    }

    /// Variable index of a negative root.
    pub fn var_index(&self, r: &Root) -> Option<usize> {
        self.var_of_basis
            .get(&self.sc.root_vector_index(r))
            .copied()
    }

    /// Depth of each chart variable's layer, in variable order.
    pub fn var_weights(&self) -> Vec<u32> {
        self.neg_roots
            .iter()
            .map(|r| (-self.pg.z_degree(r)) as u32)
            .collect()
    }

    /// Kernel dimensions of the jet maps j^0, ..., j^K at the origin.
    ///
    /// Fields are expanded internally one order beyond K so that order-K
    /// coefficients are certified exact.
    pub fn jet_filtration(&self, order: u32) -> Result<JetFiltration> {
        if order < 1 {
            return Err(Error::TruncationTooLow {
                order: order as usize,
            });
        }
        let dim = self.sc.dim();
        let fields: Vec<FormalField> = (0..dim)
            .map(|i| self.basis_field(i, order + 1))
            .collect::<Result<_>>()?;
        let n = self.neg_roots.len();
        let mut kernel_dims = Vec::new();
        for k in 0..=order {
            let monos = monomials_up_to(n, k);
            let mut rows = Vec::new();
            for v in 0..n {
                for m in &monos {
                    let row: Vec<BigRational> =
                        fields.iter().map(|f| f.components[v].coeff(m)).collect();
                    if row.iter().any(|c| !c.is_zero()) {
                        rows.push(row);
                    }
                }
            }
            kernel_dims.push(dim - rank(rows));
        }
        Ok(JetFiltration {
            sym_dim: dim,
            kernel_dims,
        })
    }
}

/// Convenience wrapper building the model for one call.
pub fn flat_field_jet(
    pg: &ParabolicGrading,
    x: &[BigRational],
    order: u32,
) -> Result<FormalField> {
    FlatModel::new(pg)?.field(x, order)
}

/// Jet filtration of the flat model, default order 2.
pub fn jet_filtration(pg: &ParabolicGrading, order: u32) -> Result<JetFiltration> {
    FlatModel::new(pg)?.jet_filtration(order)
}

/// Row rank of an exact rational matrix, by Gaussian elimination.
fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let mut rank = 0;
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = rows[pivot_row][col].recip();
        for c in rows[pivot_row].iter_mut() {
            *c *= &inv;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let f = row[col].clone();
                for (c, p) in row.iter_mut().zip(&pivot) {
                    *c -= &f * p;
                }
            }
        }
        rank += 1;
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::Family;
    use num_traits::ToPrimitive;

    fn field_on_sl2(which: &str) -> FormalField {
        let rs = RootSystem::new(Family::A, 1).unwrap();
        let pg = ParabolicGrading::new(&rs, &[1]).unwrap();
        let fm = FlatModel::new(&pg).unwrap();
        let alpha = Root(vec![1]);
        let idx = match which {
            "e" => fm.sc.root_vector_index(&alpha),
            "f" => fm.sc.root_vector_index(&alpha.negated()),
            _ => fm.sc.cartan_index(1),
        };
        fm.basis_field(idx, 3).unwrap()
    }

    #[test]
    fn sl2_fields_match_line_oracle() {
        // oracle: sl2 acting on the line by {d, x d, x^2 d} up to sign
        let f = field_on_sl2("f");
        assert_eq!(f.components[0].coeff(&[0]).to_i64(), Some(1));
        assert_eq!(f.min_jet_order(), Some(0));

        let h = field_on_sl2("h");
        assert!(h.components[0].coeff(&[0]).is_zero());
        assert_eq!(h.components[0].coeff(&[1]).to_i64(), Some(-2));
        assert_eq!(h.min_jet_order(), Some(1));

        let e = field_on_sl2("e");
        assert!(e.components[0].coeff(&[0]).is_zero());
        assert!(e.components[0].coeff(&[1]).is_zero());
        assert_eq!(e.components[0].coeff(&[2]).to_i64(), Some(-1));
        assert_eq!(e.min_jet_order(), Some(2));
    }

    #[test]
    fn sl2_jet_filtration() {
        let rs = RootSystem::new(Family::A, 1).unwrap();
        let pg = ParabolicGrading::new(&rs, &[1]).unwrap();
        let jf = jet_filtration(&pg, 2).unwrap();
        assert_eq!(jf.sym_dim, 3);
        assert_eq!(jf.kernel_dims, vec![2, 1, 0]);
    }

    #[test]
    fn truncation_below_one_is_rejected() {
        let rs = RootSystem::new(Family::A, 1).unwrap();
        let pg = ParabolicGrading::new(&rs, &[1]).unwrap();
        assert_eq!(
            jet_filtration(&pg, 0).unwrap_err(),
            Error::TruncationTooLow { order: 0 }
        );
    }

    #[test]
    fn chart_limit_is_enforced() {
        let rs = RootSystem::new(Family::A, 8).unwrap();
        let pg = ParabolicGrading::new(&rs, &[4]).unwrap();
        // A8/P4 has a 4 x 5 = 20-dimensional chart, at the limit
        assert!(FlatModel::new(&pg).is_ok());
        let rs9 = RootSystem::new(Family::B, 8).unwrap();
        let pg9 = ParabolicGrading::new(&rs9, &[4]).unwrap();
        assert!(matches!(
            FlatModel::new(&pg9),
            Err(Error::ChartTooLarge { .. })
        ));
    }
}
