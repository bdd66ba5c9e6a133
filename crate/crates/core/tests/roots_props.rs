//! Property suites for the root-system core, checked against independent
//! oracles: Weyl-reflection closure for root generation, the classical
//! dimension table, and the root-string identity.

use num_rational::BigRational;
use proptest::prelude::*;
use std::collections::HashSet;
use topslot_core::roots::{classical_dim, Basis, Family, Root, RootSystem, WeightVector};

fn all_types(max_rank: usize) -> Vec<(Family, usize)> {
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
    for l in 6..=8usize {
        if l <= max_rank {
            out.push((Family::E, l));
        }
    }
    out
}

/// Independent generation oracle: close the simple roots under all simple
/// reflections and count the positive ones.  Uses no root-string logic.
fn reflection_closure_positive(rs: &RootSystem) -> HashSet<Vec<i64>> {
    let rank = rs.rank();
    let mut set: HashSet<Vec<i64>> = (1..=rank).map(|i| Root::simple(i, rank).0).collect();
    loop {
        let mut grew = false;
        let snapshot: Vec<Vec<i64>> = set.iter().cloned().collect();
        for v in snapshot {
            for i in 1..=rank {
                let img = rs.reflect_root(i, &Root(v.clone()));
                if set.insert(img.0) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    set.into_iter().filter(|v| v.iter().all(|&c| c >= 0)).collect()
}

#[test]
fn generation_matches_reflection_closure_and_dimension_table() {
    for (f, l) in all_types(8) {
        let rs = RootSystem::new(f, l).unwrap();
        let oracle = reflection_closure_positive(&rs);
        let generated: HashSet<Vec<i64>> =
            rs.positive_roots().iter().map(|r| r.0.clone()).collect();
        assert_eq!(generated, oracle, "{f}{l}");
        assert_eq!(rs.dim(), classical_dim(f, l), "{f}{l}");
    }
}

#[test]
fn cartan_matrix_shape() {
    for (f, l) in all_types(8) {
        let rs = RootSystem::new(f, l).unwrap();
        for i in 1..=l {
            assert_eq!(rs.cartan_entry(i, i), 2);
            for j in 1..=l {
                if i != j {
                    assert!(rs.cartan_entry(i, j) <= 0);
                    assert_eq!(rs.cartan_entry(i, j) == 0, rs.cartan_entry(j, i) == 0);
                }
            }
        }
    }
}

#[test]
fn root_string_identity_rank_up_to_4() {
    for (f, l) in all_types(4) {
        let rs = RootSystem::new(f, l).unwrap();
        let roots = rs.all_roots();
        for alpha in &roots {
            for beta in &roots {
                if beta == alpha || *beta == alpha.negated() {
                    continue;
                }
                let p = rs.string_down(alpha, beta);
                let q = rs.string_up(alpha, beta);
                // p - q = <beta, alpha_check> = 2<beta,alpha>/<alpha,alpha>
                let rhs = 2 * rs.root_pairing(beta, alpha) / rs.root_len2(alpha);
                assert_eq!(p - q, rhs, "{f}{l}: string through {beta:?} along {alpha:?}");
            }
        }
    }
}

#[test]
fn highest_root_weight_coordinates_match_the_nine_families() {
    let expect = |f: Family, l: usize| -> Vec<i64> {
        let mut v = vec![0i64; l];
        match f {
            Family::A => {
                v[0] += 1;
                v[l - 1] += 1;
            }
            Family::B if l == 2 => v[1] = 2,
            Family::B | Family::D => v[1] = 1,
            Family::C => v[0] = 2,
            Family::G => v[1] = 1,
            Family::F => v[0] = 1,
            Family::E if l == 6 => v[1] = 1,
            Family::E if l == 7 => v[0] = 1,
            Family::E => v[7] = 1,
        }
        v
    };
    for (f, l) in all_types(8) {
        let rs = RootSystem::new(f, l).unwrap();
        assert_eq!(
            rs.root_to_weight_ints(rs.highest_root()),
            expect(f, l),
            "{f}{l}"
        );
    }
}

#[test]
fn pairing_normalization() {
    for (f, l, want) in [
        (Family::F, 4, 4),
        (Family::G, 2, 6),
        (Family::A, 3, 2),
        (Family::B, 3, 4),
        (Family::C, 4, 4),
        (Family::D, 5, 2),
        (Family::E, 7, 2),
    ] {
        let rs = RootSystem::new(f, l).unwrap();
        let lam = WeightVector::from_root(rs.highest_root());
        assert_eq!(
            rs.pairing(&lam, &lam).unwrap(),
            BigRational::from_integer(want.into())
        );
        // <alpha_i, alpha_i_check> = 2 for every node
        for i in 1..=l {
            let a = WeightVector::from_root(&Root::simple(i, l));
            assert_eq!(
                rs.coroot_pairing(&a, i).unwrap(),
                BigRational::from_integer(2.into())
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn conversion_round_trip_is_identity(
        coeffs in proptest::collection::vec(-30i64..30, 8)
    ) {
        // one random integral vector per case, exercised on every type
        for (f, l) in all_types(8) {
            let rs = RootSystem::new(f, l).unwrap();
            let v = WeightVector::from_ints(&coeffs[..l], Basis::Root);
            let there = rs.convert(&v, Basis::Weight).unwrap();
            let back = rs.convert(&there, Basis::Root).unwrap();
            prop_assert_eq!(&back, &v);
            let w = WeightVector::from_ints(&coeffs[..l], Basis::Weight);
            let there2 = rs.convert(&w, Basis::Root).unwrap();
            let back2 = rs.convert(&there2, Basis::Weight).unwrap();
            prop_assert_eq!(&back2, &w);
        }
    }
}
