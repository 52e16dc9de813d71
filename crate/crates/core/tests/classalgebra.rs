use std::sync::Arc;

use kideal::classalgebra::*;
use kideal::commalg::Multiply;
use kideal::ffield::BinaryField;
use kideal::groups::{conjugacy_classes, Group, Pgl2Label};
use kideal::linalg2::{semilinear_kernel_chain, Subspace};
use kideal::Error;
use Pgl2Label::*;

fn center(g: Group) -> CenterAlgebra {
    center_arc(Arc::new(g))
}

fn center_arc(g: Arc<Group>) -> CenterAlgebra {
    let part = Arc::new(conjugacy_classes(&g).unwrap());
    center_of_group_algebra(g, part).unwrap()
}

fn pgl2_center(q: u32) -> CenterAlgebra {
    center(Group::pgl2(q).unwrap())
}

fn sq(z: &CenterAlgebra) -> SquareMap {
    square_map(z.group(), z.partition()).unwrap()
}

fn t_perp(z: &CenterAlgebra, n: u32) -> Subspace {
    kuelshammer_perp_group(&sq(z), n, &BinaryField::f2()).unwrap()
}

fn zbar(z: &CenterAlgebra) -> kideal::commalg::QuotientAlgebra {
    quotient_zbar(z, &t_perp(z, 1)).unwrap()
}

fn idx(z: &CenterAlgebra, l: Pgl2Label) -> usize {
    z.pgl2().unwrap().label_index(l).unwrap()
}

fn fiber_labels(z: &CenterAlgebra, target: Pgl2Label) -> Vec<Pgl2Label> {
    let labels = z.pgl2().unwrap().labels();
    let mut out: Vec<_> = sq(z).fiber(idx(z, target)).into_iter().map(|c| labels[c]).collect();
    out.sort();
    out
}

const ODD_PRIME_POWERS: [u32; 12] = [3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29];

#[test]
fn pgl2_9_dimensions() {
    let z = pgl2_center(9);
    assert_eq!(z.dim(), 11);
    assert_eq!(t_perp(&z, 1).dim(), 6);
    assert_eq!(zbar(&z).dim(), 5);
}

#[test]
fn lemma_dimensions_for_small_q() {
    for q in ODD_PRIME_POWERS {
        let z = pgl2_center(q);
        assert_eq!(z.dim() as u32, q + 2, "q = {q}");
        assert_eq!(t_perp(&z, 1).dim() as u32, (q + 3) / 2, "q = {q}");
        assert_eq!(zbar(&z).dim() as u32, q.div_ceil(2), "q = {q}");
    }
}

#[test]
fn unit_law_and_counts() {
    for g in [Group::pgl2(7).unwrap(), Group::symmetric(4).unwrap(), Group::dihedral(16).unwrap()] {
        let z = center(g);
        let a = z.algebra();
        let r = z.dim();
        for k in 0..r {
            let mut e = vec![0u32; r];
            e[k] = 1;
            assert_eq!(a.mul(a.unit(), &e), e);
        }
        // sum_k c_{ijk} |K_k| = |K_i| |K_j|
        let sizes = z.class_sizes();
        let mut totals = vec![0usize; r * r];
        for &(i, j, k, c) in z.constants() {
            totals[i as usize * r + j as usize] += c as usize * sizes[k as usize];
        }
        for i in 0..r {
            for j in 0..r {
                assert_eq!(totals[i * r + j], sizes[i] * sizes[j]);
            }
        }
        assert_eq!(sizes.iter().sum::<usize>(), z.group().order());
    }
}

#[test]
fn cyclic_four_square_of_involution() {
    let z = center(Group::cyclic(4).unwrap());
    let g2 = z.partition().class_of(2);
    let mut v = vec![0u32; 4];
    v[g2] = 1;
    let s = z.algebra().square(&v);
    assert_eq!(s[z.identity_class()], 1);
}

#[test]
fn square_root_fibers_q17() {
    let z = pgl2_center(17);
    assert_eq!(fiber_labels(&z, A1), vec![A1, A3(8), A4(9)]);
    assert_eq!(fiber_labels(&z, A3(1)), vec![]);
    assert_eq!(fiber_labels(&z, A3(4)), vec![A3(2), A3(6)]);
}

#[test]
fn square_root_fiber_table() {
    for q in [7u32, 9, 13, 17, 23, 25] {
        let z = pgl2_center(q);
        let (h3, h4) = ((q - 1) / 2, q.div_ceil(2));
        let mut a1 = vec![A1, A3(h3), A4(h4)];
        a1.sort();
        assert_eq!(fiber_labels(&z, A1), a1);
        assert_eq!(fiber_labels(&z, A2), vec![A2]);
        for i in 1..=h3 {
            let mut want = if i % 2 == 0 {
                let mut w = vec![A3(i / 2), A3((q - 1 - i) / 2)];
                w.dedup();
                w
            } else {
                vec![]
            };
            want.sort();
            assert_eq!(fiber_labels(&z, A3(i)), want, "q = {q}, A3,{i}");
        }
        for j in 1..=h4 {
            let mut want = if j % 2 == 0 {
                let mut w = vec![A4(j / 2), A4((q + 1 - j) / 2)];
                w.dedup();
                w
            } else {
                vec![]
            };
            want.sort();
            assert_eq!(fiber_labels(&z, A4(j)), want, "q = {q}, A4,{j}");
        }
    }
}

#[test]
fn cyclic_two_groups() {
    for m in 1..=6u32 {
        let z = center(Group::cyclic(1 << m).unwrap());
        for n in 0..=m {
            assert_eq!(t_perp(&z, n).dim(), 1 << (m - n), "m = {m}, n = {n}");
        }
    }
}

#[test]
fn ideal_chain_and_ideal_property() {
    let groups = [
        Group::pgl2(7).unwrap(),
        Group::pgl2(9).unwrap(),
        Group::symmetric(4).unwrap(),
        Group::dihedral(16).unwrap(),
        Group::cyclic(16).unwrap(),
        Group::symmetric(5).unwrap(),
    ];
    for g in groups {
        let z = center(g);
        let a = z.algebra();
        let chain: Vec<_> = (0..=4).map(|n| t_perp(&z, n)).collect();
        assert_eq!(chain[0].dim(), z.dim());
        for n in 0..4 {
            assert!(chain[n + 1].is_subspace_of(&chain[n]));
        }
        for t in &chain {
            for v in t.basis() {
                for k in 0..z.dim() {
                    let e = a.basis_vector(k);
                    assert!(t.contains(&a.mul(&v, &e)));
                }
            }
        }
    }
}

#[test]
fn multiplicative_on_direct_products() {
    let s4 = Arc::new(Group::symmetric(4).unwrap());
    let c2 = Arc::new(Group::cyclic(2).unwrap());
    let c4 = Arc::new(Group::cyclic(4).unwrap());
    let cases = [(s4.clone(), c2.clone()), (c4.clone(), c4.clone())];
    for (a, b) in cases {
        let prod = center(Group::direct_product(a.clone(), b.clone()).unwrap());
        let za = center_arc(a.clone());
        let zb = center_arc(b.clone());
        for n in 0..=3 {
            assert_eq!(t_perp(&prod, n).dim(), t_perp(&za, n).dim() * t_perp(&zb, n).dim(), "n = {n}");
        }
    }
}

fn xor(x: Vec<u32>, y: Vec<u32>) -> Vec<u32> {
    x.iter().zip(&y).map(|(a, b)| a ^ b).collect()
}

/// Sum in `Z/T_1^perp` of the classes of the other torus family listed among the coset
/// representatives.
fn other_family_sum(z: &CenterAlgebra, zb: &kideal::commalg::QuotientAlgebra, q: u32) -> Vec<u32> {
    let labels: Vec<_> = if q % 8 == 1 { (1..=(q - 1) / 4).map(A4).collect() } else { (1..=(q - 3) / 4).map(A3).collect() };
    label_sum_in_zbar(z, zb, &labels).unwrap()
}

#[test]
fn square_identity_q17_examples() {
    let z = pgl2_center(17);
    let zb = zbar(&z);
    let c = |l| zbar_class(&z, &zb, l).unwrap();
    assert_eq!(classsum_square_zbar(&z, &zb, 1).unwrap(), c(A3(2)));
    assert_eq!(classsum_square_zbar(&z, &zb, 4).unwrap(), vec![0; zb.dim()]);
    // The closed form predicts A1 for the involution class; the product carries four more classes.
    let inv_sq = classsum_square_zbar(&z, &zb, 8).unwrap();
    assert_eq!(expected_square_zbar(&z, &zb, 8).unwrap(), c(A1));
    assert_eq!(inv_sq, xor(c(A1), xor(xor(c(A4(1)), c(A4(2))), xor(c(A4(3)), c(A4(4))))));
}

#[test]
fn square_identity_exhaustive() {
    for q in [17u32, 23, 7, 31, 41] {
        let z = pgl2_center(q);
        let zb = zbar(&z);
        let period = if q % 8 == 1 { q as i64 - 1 } else { q as i64 + 1 };
        let extra = other_family_sum(&z, &zb, q);
        for i in 1..period {
            let got = classsum_square_zbar(&z, &zb, i).unwrap();
            let closed = expected_square_zbar(&z, &zb, i).unwrap();
            if i == period / 2 {
                assert_eq!(got, xor(closed, extra.clone()), "q = {q}, involution");
            } else {
                assert_eq!(got, closed, "q = {q}, i = {i}");
            }
        }
    }
}

#[test]
fn product_identity_examples() {
    let z = pgl2_center(17);
    let zb = zbar(&z);
    let c = |l| zbar_class(&z, &zb, l).unwrap();
    let sum = |x: Vec<u32>, y: Vec<u32>| x.iter().zip(&y).map(|(a, b)| a ^ b).collect::<Vec<_>>();
    assert_eq!(classsum_product_zbar(&z, &zb, 1, 2).unwrap(), sum(c(A3(3)), c(A3(1))));
    let s = classsum_square_zbar(&z, &zb, 2).unwrap();
    assert_eq!(s, c(A3(4)));

    let z = pgl2_center(23);
    let zb = zbar(&z);
    let c = |l| zbar_class(&z, &zb, l).unwrap();
    assert_eq!(classsum_product_zbar(&z, &zb, 1, 2).unwrap(), sum(c(A4(3)), c(A4(1))));
}

#[test]
fn product_identity_exhaustive_and_refusal() {
    for q in [17u32, 23] {
        let z = pgl2_center(q);
        let zb = zbar(&z);
        let period = if q % 8 == 1 { q as i64 - 1 } else { q as i64 + 1 };
        let quarter = period / 4;
        let mut checked = 0;
        for i in 1..period {
            for j in 1..period {
                let admissible = [i, j, i + j, i - j].iter().all(|x| x.rem_euclid(quarter) != 0);
                let got = classsum_product_zbar(&z, &zb, i, j);
                if admissible {
                    assert_eq!(got.unwrap(), expected_product_zbar(&z, &zb, i, j).unwrap(), "q={q} ({i},{j})");
                    checked += 1;
                } else {
                    assert!(matches!(got, Err(Error::Precondition(_))));
                }
            }
        }
        assert!(checked > 0);
    }
}

#[test]
fn index_sets_have_stated_sizes() {
    for q in [9u32, 17, 25, 41, 49, 73, 97, 7, 23, 31, 47, 71, 79] {
        let d = DefectData::new(q).unwrap();
        let sets = class_index_sets(q).unwrap();
        assert_eq!(sets.len() as u32, d.q_odd.div_ceil(2));
        assert_eq!(sets[0].members.len(), (1 << (d.n - 3)) - 1, "q = {q}");
        for s in &sets[1..] {
            assert_eq!(s.members.len(), 1 << (d.n - 2), "q = {q}, s = {}", s.s);
        }
        let total: usize = sets.iter().map(|s| s.members.len()).sum();
        assert_eq!(total as u32, d.index_bound());
    }
}

#[test]
fn defect_data_values() {
    let want = [(9, 4, 1), (17, 5, 1), (25, 4, 3), (41, 4, 5), (49, 5, 3), (7, 4, 1), (23, 4, 3), (31, 6, 1), (47, 5, 3)];
    for (q, n, qo) in want {
        let d = DefectData::new(q).unwrap();
        assert_eq!((d.n, d.q_odd), (n, qo), "q = {q}");
    }
    for q in [3, 5, 11, 13] {
        assert!(matches!(DefectData::new(q), Err(Error::Precondition(_))));
    }
    for q in [15, 16, 1] {
        assert!(matches!(DefectData::new(q), Err(Error::InvalidInput(_))));
    }
}

#[test]
fn explicit_basis_sizes() {
    assert_eq!(explicit_radical_basis(17).unwrap().len(), 4);
    assert_eq!(explicit_radical_square_basis(41).unwrap().len(), 4);
    assert_eq!(explicit_radical_basis(7).unwrap().len(), 2);
    assert_eq!(explicit_radical_square_basis(7).unwrap().len(), 0);
    for q in [9u32, 17, 25, 41, 49, 73, 7, 23, 31, 47, 71] {
        let d = DefectData::new(q).unwrap();
        let qo = d.q_odd;
        assert_eq!(explicit_radical_basis(q).unwrap().len() as u32, d.quarter() - (qo - 1) / 2, "q = {q}");
        assert_eq!(explicit_radical_square_basis(q).unwrap().len() as u32, d.quarter() - (qo + 1), "q = {q}");
    }
    assert!(explicit_radical_basis(13).is_err());
}

fn span(dim: usize, vs: &[Vec<u32>]) -> Subspace {
    Subspace::span(&BinaryField::f2(), dim, vs).unwrap()
}

#[test]
fn explicit_bases_against_computed_radical() {
    for q in [9u32, 17, 25, 41, 7, 23, 31] {
        let z = pgl2_center(q);
        let zb = zbar(&z);
        let a = &zb.algebra;
        let d = DefectData::new(q).unwrap();
        let rad = semilinear_kernel_chain(&a.square_map()).unwrap().pop().unwrap();
        let rb = rad.basis();
        let prods: Vec<_> = rb.iter().flat_map(|x| rb.iter().map(|y| a.mul(x, y))).collect();
        let rad2 = span(a.dim(), &prods);
        let vecs = |b: Vec<LabelSum>| -> Vec<Vec<u32>> { b.iter().map(|s| label_sum_in_zbar(&z, &zb, s).unwrap()).collect() };

        let listed = vecs(explicit_radical_basis(q).unwrap());
        assert!(!rad.contains(&listed[0]), "q = {q}: listed first vector is not nilpotent");
        assert!(span(a.dim(), &listed[1..]).is_subspace_of(&rad), "q = {q}");

        let corrected = vecs(corrected_radical_basis(q).unwrap());
        for v in &corrected {
            assert!(a.pow2k(v, d.n).iter().all(|&c| c == 0), "q = {q}");
        }
        assert_eq!(span(a.dim(), &corrected), rad, "q = {q}");
        assert_eq!(corrected.len(), rad.dim());

        let squares = vecs(explicit_radical_square_basis(q).unwrap());
        assert_eq!(span(a.dim(), &squares), rad2, "q = {q}");
        assert_eq!(squares.len(), rad2.dim());
    }
}

/// `K_i^+ K_j^+` multiplied out element by element in `kG`.
fn brute_product(z: &CenterAlgebra, i: usize, j: usize) -> Vec<u32> {
    let g = z.group();
    let mut out = vec![0u32; g.order()];
    for &x in &z.partition().classes[i].elements {
        for &y in &z.partition().classes[j].elements {
            out[g.mul(x, y) as usize] ^= 1;
        }
    }
    out
}

#[test]
fn structure_constants_match_brute_force_products() {
    for g in [Group::pgl2(17).unwrap(), Group::pgl2(9).unwrap(), Group::symmetric(4).unwrap()] {
        let z = center(g);
        let a = z.algebra();
        for i in 0..z.dim() {
            for j in 0..z.dim() {
                let got = z.to_group_algebra(&a.mul(&a.basis_vector(i), &a.basis_vector(j)));
                assert_eq!(got, brute_product(&z, i, j), "({i}, {j})");
            }
        }
    }
}
