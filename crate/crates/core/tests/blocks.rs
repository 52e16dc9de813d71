use std::sync::Arc;

use kideal::blocks::*;
use kideal::classalgebra::*;
use kideal::commalg::{Multiply, QuotientAlgebra};
use kideal::ffield::BinaryField;
use kideal::groups::{conjugacy_classes, Group};
use kideal::symalg::{d2a_table, group_algebra_table, D2APresentation, KuelshammerTower};
use kideal::Error;

struct Setup {
    z: CenterAlgebra,
    t1: kideal::linalg2::Subspace,
}

fn setup(g: Group) -> Setup {
    let g = Arc::new(g);
    let part = Arc::new(conjugacy_classes(&g).unwrap());
    let z = center_of_group_algebra(g.clone(), part.clone()).unwrap();
    let t1 = kuelshammer_perp_group(&square_map(&g, &part).unwrap(), 1, &BinaryField::f2()).unwrap();
    Setup { z, t1 }
}

fn zbar_of(s: &Setup) -> QuotientAlgebra {
    QuotientAlgebra::new(s.z.algebra(), &s.z.algebra().whole(), &s.t1, None).unwrap()
}

#[test]
fn radical_of_zbar_for_pgl2() {
    for (q, j, j2) in [(9, 2, 0), (17, 4, 2), (41, 8, 4), (23, 5, 2)] {
        let s = setup(Group::pgl2(q).unwrap());
        let zb = zbar_of(&s);
        let rad = nilradical(&zb.algebra).unwrap();
        assert_eq!(rad.dim(), j, "q = {q}");
        assert_eq!(radical_power(&zb.algebra, &rad, 2).unwrap().dim(), j2, "q = {q}");
    }
}

#[test]
fn cyclic_ladder() {
    for m in 1..=5u32 {
        let s = setup(Group::cyclic(1 << m).unwrap());
        let chain = RadicalChain::new(&zbar_of(&s).algebra).unwrap();
        let half = 1usize << (m - 1);
        assert_eq!(s.t1.dim(), half);
        assert_eq!(chain.radical_dim(), half - 1);
        assert_eq!(chain.square_dim(), half.saturating_sub(2));
        // Z/T_1^perp of kC_{2^m} is k[x]/x^{2^{m-1}}: the powers drop by one
        let dims = chain.dims();
        assert!(dims.windows(2).all(|w| w[0] == w[1] + 1));
    }
}

#[test]
fn nilradical_rejects_noncommutative() {
    let t = group_algebra_table(&Group::symmetric(3).unwrap()).unwrap();
    assert!(matches!(nilradical(&t), Err(Error::NotCommutative(_, _))));
}

#[test]
fn block_counts_and_principal_blocks() {
    for (q, count, principal_center) in [(9, 3, 7), (17, 5, 11), (41, 13, 7), (7, 2, 7), (23, 7, 7)] {
        let s = setup(Group::pgl2(q).unwrap());
        let d = block_idempotents(&s.z).unwrap();
        assert_eq!(d.idempotents.len(), count, "q = {q}");
        let ledger = block_ledger(&s.z, &d, &s.t1).unwrap();
        assert_eq!(ledger.blocks[ledger.principal].center, principal_center, "q = {q}");
        assert_eq!(ledger.blocks[ledger.principal].radical_quot, 2, "q = {q}");
    }
}

#[test]
fn ledger_rows_q9_q17_q41() {
    let s = setup(Group::pgl2(9).unwrap());
    let d = block_idempotents(&s.z).unwrap();
    let ledger = block_ledger(&s.z, &d, &s.t1).unwrap();
    assert_eq!(ledger.blocks[ledger.principal].zbar, 3);
    assert_eq!((ledger.whole.center, ledger.whole.t1perp, ledger.whole.zbar), (11, 6, 5));

    let s = setup(Group::pgl2(17).unwrap());
    let d = block_idempotents(&s.z).unwrap();
    let ledger = block_ledger(&s.z, &d, &s.t1).unwrap();
    for (i, b) in ledger.blocks.iter().enumerate() {
        if i != ledger.principal {
            assert_eq!((b.center, b.zbar, b.radical, b.radical_sq), (2, 1, 0, 0));
        }
    }

    let s = setup(Group::pgl2(41).unwrap());
    let d = block_idempotents(&s.z).unwrap();
    let ledger = block_ledger(&s.z, &d, &s.t1).unwrap();
    let cyclic8: Vec<_> = ledger.blocks.iter().filter(|b| b.center == 8).collect();
    assert_eq!(cyclic8.len(), 2);
    for b in cyclic8 {
        assert_eq!((b.center, b.zbar, b.radical, b.radical_sq), (8, 4, 3, 2));
    }
}

#[test]
fn small_local_algebras_are_one_block() {
    for g in [Group::cyclic(2).unwrap(), Group::cyclic(4).unwrap(), Group::dihedral(8).unwrap()] {
        let s = setup(g);
        let d = block_idempotents(&s.z).unwrap();
        assert_eq!(d.idempotents.len(), 1);
        assert_eq!(d.idempotents[0], s.z.algebra().unit());
        assert_eq!(principal_block(&s.z, &d).unwrap(), 0);
    }
}

#[test]
fn idempotent_axioms_hold_for_several_groups() {
    for g in [Group::symmetric(4).unwrap(), Group::symmetric(5).unwrap(), Group::cyclic(15).unwrap(), Group::pgl2(25).unwrap()] {
        let s = setup(g);
        let d = block_idempotents(&s.z).unwrap();
        let a = s.z.algebra().extend_scalars(d.field_degree).unwrap();
        let mut total = vec![0u32; a.dim()];
        for (i, e) in d.idempotents.iter().enumerate() {
            assert_eq!(a.square(e), *e);
            for f in &d.idempotents[i + 1..] {
                assert!(a.mul(e, f).iter().all(|&c| c == 0));
            }
            for (t, c) in total.iter_mut().zip(e) {
                *t ^= c;
            }
        }
        assert_eq!(total, a.unit());
        block_ledger(&s.z, &d, &s.t1).unwrap();
    }
}

#[test]
fn cyclic_fifteen_needs_an_extension() {
    // blocks of kC_15 are its 15 characters; their values generate F_16
    let s = setup(Group::cyclic(15).unwrap());
    let d = block_idempotents(&s.z).unwrap();
    assert_eq!(d.idempotents.len(), 15);
    assert_eq!(d.field_degree, 4);
}

#[test]
fn ledger_is_stable_under_field_growth() {
    let s = setup(Group::pgl2(17).unwrap());
    let d = block_idempotents(&s.z).unwrap();
    let base = block_ledger(&s.z, &d, &s.t1).unwrap();
    let bigger = primitive_idempotents_with_min_degree(s.z.algebra(), 2 * d.field_degree).unwrap();
    assert_eq!(bigger.field_degree, 2 * d.field_degree);
    assert_eq!(bigger.idempotents.len(), d.idempotents.len());
    let grown = block_ledger(&s.z, &bigger, &s.t1).unwrap();
    assert_eq!(base.blocks, grown.blocks);
    assert_eq!(base.whole, grown.whole);
}

#[test]
fn presented_dihedral_algebras() {
    // computed values; the expected dichotomy 3 vs 2 is checked (and reported) by the acceptance run
    for (sv, c, want) in [(4, 0, 2), (4, 1, 1), (8, 0, 2), (8, 1, 1)] {
        let (t, _) = d2a_table(D2APresentation::new(sv, c).unwrap()).unwrap();
        let tower = KuelshammerTower::new(&t).unwrap();
        let dims = layer_dims(&t, tower.center(), &tower.tn_perp(1).unwrap()).unwrap();
        assert_eq!(dims.radical_quot, want, "s = {sv}, c = {c}");
    }
}
