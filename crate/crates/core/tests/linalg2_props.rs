use kideal::ffield::BinaryField;
use kideal::linalg2::{Rref, Subspace};
use proptest::prelude::*;

/// Plain Gaussian elimination on bool rows, kept separate from the packed implementation.
fn naive_rank(mut rows: Vec<Vec<bool>>) -> usize {
    let width = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..width {
        if let Some(p) = (rank..rows.len()).find(|&r| rows[r][col]) {
            rows.swap(rank, p);
            for r in 0..rows.len() {
                if r != rank && rows[r][col] {
                    let pivot = rows[rank].clone();
                    for (a, b) in rows[r].iter_mut().zip(pivot) {
                        *a ^= b;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

fn to_u32(v: &[bool]) -> Vec<u32> {
    v.iter().map(|&b| b as u32).collect()
}

fn rows_strategy(n: usize) -> impl Strategy<Value = Vec<Vec<bool>>> {
    prop::collection::vec(prop::collection::vec(any::<bool>(), n), 0..8)
}

proptest! {
    #[test]
    fn dimension_formula_f2(us in rows_strategy(10), vs in rows_strategy(10)) {
        let f = BinaryField::f2();
        let u = Subspace::span(&f, 10, &us.iter().map(|r| to_u32(r)).collect::<Vec<_>>()).unwrap();
        let v = Subspace::span(&f, 10, &vs.iter().map(|r| to_u32(r)).collect::<Vec<_>>()).unwrap();
        let sum = u.sum(&v).unwrap();
        let cap = u.intersect(&v).unwrap();
        prop_assert_eq!(u.dim(), naive_rank(us.clone()));
        let stacked: Vec<Vec<bool>> = us.iter().chain(vs.iter()).cloned().collect();
        prop_assert_eq!(sum.dim(), naive_rank(stacked));
        // count common members by brute force over all 2^10 vectors
        let mut common = 0usize;
        for bits in 0u32..1024 {
            let x: Vec<u32> = (0..10).map(|i| (bits >> i) & 1).collect();
            if u.contains(&x) && v.contains(&x) {
                common += 1;
            }
        }
        prop_assert_eq!(common, 1usize << cap.dim());
        prop_assert_eq!(sum.dim() + cap.dim(), u.dim() + v.dim());
    }

    #[test]
    fn rref_involutive(us in rows_strategy(12)) {
        let f = BinaryField::f2();
        let u = Subspace::span(&f, 12, &us.iter().map(|r| to_u32(r)).collect::<Vec<_>>()).unwrap();
        let again = Rref::from_rows(12, u.f2_rows().iter().cloned());
        prop_assert_eq!(&again, u.rref());
    }

    #[test]
    fn double_complement(m in 1u32..4, seed in prop::collection::vec(0u32..256, 6 * 6 + 6 * 3)) {
        let f = BinaryField::new(m).unwrap();
        let mask = (1u32 << m) - 1;
        let n = 6;
        // random symmetric Gram matrix; degenerate ones are discarded below
        let mut gram = vec![vec![0u32; n]; n];
        for i in 0..n {
            for j in i..n {
                let val = seed[i * n + j] & mask;
                gram[i][j] = val;
                gram[j][i] = val;
            }
        }
        let full = Subspace::full(&f, n);
        prop_assume!(full.orthogonal_complement(&gram).map(|s| s.is_zero()).unwrap_or(false));
        let gens: Vec<Vec<u32>> = (0..3).map(|r| (0..n).map(|c| seed[n * n + r * 6 + c % 6] & mask).collect()).collect();
        let u = Subspace::span(&f, n, &gens).unwrap();
        let perp = u.orthogonal_complement(&gram).unwrap();
        prop_assert_eq!(u.dim() + perp.dim(), n);
        for a in u.basis() {
            for b in perp.basis() {
                let mut s = 0u32;
                for i in 0..n {
                    for j in 0..n {
                        s ^= f.mul(a[i], f.mul(gram[i][j], b[j]));
                    }
                }
                prop_assert_eq!(s, 0);
            }
        }
        prop_assert_eq!(perp.orthogonal_complement(&gram).unwrap(), u);
    }
}
