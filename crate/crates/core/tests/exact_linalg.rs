mod common;

use common::{k3_join_3k1, random_pool, read_graph6_file, rng};
use curvex::construct::DX7_GRAPH6;
use curvex::enumeration::enumerate_connected;
use curvex::graph::parse_graph6;
use curvex::linalg::{
    dot, int, kernel_basis, min_norm_solve, rank, rat, solve, solve_affine_index, Rat, RatMatrix,
};
use curvex::IndexValue;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;

fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = RatMatrix> {
    proptest::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| {
        let rows: Vec<Vec<i64>> = v.chunks(cols).map(|c| c.to_vec()).collect();
        RatMatrix::from_i64_rows(&rows).unwrap()
    })
}

fn augmented(a: &RatMatrix, b: &[Rat]) -> RatMatrix {
    RatMatrix::from_fn(a.rows(), a.cols() + 1, |i, j| {
        if j < a.cols() {
            a.get(i, j).clone()
        } else {
            b[i].clone()
        }
    })
}

proptest! {
    #[test]
    fn solve_is_exact_or_rank_deficient(a in arb_matrix(4, 3), b in proptest::collection::vec(-3i64..=3, 4)) {
        let b: Vec<Rat> = b.into_iter().map(int).collect();
        match solve(&a, &b).unwrap() {
            Some(x) => prop_assert_eq!(a.mul_vec(&x).unwrap(), b),
            None => prop_assert!(rank(&augmented(&a, &b)) > rank(&a)),
        }
    }

    #[test]
    fn kernel_vectors_are_independent_and_annihilated(a in arb_matrix(3, 5)) {
        let k = kernel_basis(&a).unwrap();
        prop_assert_eq!(k.len(), 5 - rank(&a));
        for v in &k {
            prop_assert!(a.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
        if !k.is_empty() {
            let m = RatMatrix::from_rows(k.clone()).unwrap();
            prop_assert_eq!(rank(&m), k.len());
        }
    }

    #[test]
    fn min_norm_is_orthogonal_and_minimal(s in arb_matrix(4, 4), b in proptest::collection::vec(-3i64..=3, 4)) {
        // Symmetrise and make rank deficient by duplicating a row/column.
        let n = 4;
        let a = RatMatrix::from_fn(n, n, |i, j| {
            let (i, j) = (i.min(2), j.min(2));
            s.get(i, j) + s.get(j, i)
        });
        let rhs = a.mul_vec(&b.into_iter().map(int).collect::<Vec<_>>()).unwrap();
        let x = min_norm_solve(&a, &rhs).unwrap().expect("rhs is in the range");
        prop_assert_eq!(a.mul_vec(&x).unwrap(), rhs);
        let norm = dot(&x, &x);
        for k in kernel_basis(&a).unwrap() {
            prop_assert!(dot(&k, &x).is_zero());
            let y: Vec<Rat> = x.iter().zip(&k).map(|(a, b)| a + b).collect();
            prop_assert!(dot(&y, &y) > norm);
        }
    }
}

#[test]
fn identity_and_k3_examples() {
    let i3 = RatMatrix::identity(3);
    let b = vec![int(1), int(2), int(3)];
    assert_eq!(solve(&i3, &b).unwrap().unwrap(), b);
    assert_eq!(min_norm_solve(&i3, &b).unwrap().unwrap(), b);
    let d = RatMatrix::from_i64_rows(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).unwrap();
    let x = solve(&d, &[int(1), int(1), int(1)]).unwrap().unwrap();
    assert_eq!(d.mul_vec(&x).unwrap(), vec![int(1); 3]);
    assert_eq!(x, vec![rat(1, 2); 3]);
}

#[test]
fn dx7_matrix_has_no_curvature_potential() {
    let g = parse_graph6(DX7_GRAPH6).unwrap();
    let d = g.distance_matrix().unwrap().to_rat_matrix();
    assert!(solve(&d, &vec![int(1); 7]).unwrap().is_none());
    let k = kernel_basis(&d).unwrap();
    assert!(k.iter().any(|v| !v.iter().sum::<Rat>().is_zero()));
    let (idx, pot) = solve_affine_index(&d).unwrap();
    assert_eq!(idx, IndexValue::Finite(int(0)));
    let pot = pot.unwrap();
    assert!(pot.sum().is_one());
    assert!(d.mul_vec(pot.x()).unwrap().iter().all(Zero::is_zero));
}

#[test]
fn infinite_index_example() {
    let d = k3_join_3k1().distance_matrix().unwrap().to_rat_matrix();
    assert_eq!(solve_affine_index(&d).unwrap().0, IndexValue::Infinite);
}

#[test]
fn index_is_permutation_invariant() {
    let mut r = rng(21);
    for g in random_pool(22, 30, 2, 9) {
        let d = g.distance_matrix().unwrap().to_rat_matrix();
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut r);
        assert_eq!(
            solve_affine_index(&d).unwrap().0,
            solve_affine_index(&d.permuted(&perm)).unwrap().0
        );
    }
}

#[test]
fn trichotomy_matches_solvability() {
    let mut graphs: Vec<_> = (1..=7).flat_map(|n| enumerate_connected(n).unwrap()).collect();
    graphs.extend(read_graph6_file("conn8.g6"));
    for g in graphs {
        let n = g.n();
        let d = g.distance_matrix().unwrap().to_rat_matrix();
        let (idx, pot) = solve_affine_index(&d).unwrap();
        let solvable = solve(&d, &vec![int(1); n]).unwrap().is_some();
        match idx {
            IndexValue::Finite(c) if c.is_zero() => assert!(!solvable),
            IndexValue::Finite(_) => assert!(solvable && pot.is_some()),
            IndexValue::Infinite => assert!(solvable && pot.is_none()),
        }
    }
}
