use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Group;
use crate::error::{Error, Result};

pub const DEFAULT_SYLOW_SEED: u64 = 0x5170;

/// A Sylow 2-subgroup, grown one normalizing 2-element at a time.
///
/// If `H` is a 2-subgroup that is not Sylow, some 2-element outside `H` normalizes it, and
/// adjoining any such element gives a larger 2-group. Candidates are visited in a seeded
/// shuffle, so the result depends only on the seed.
pub fn sylow2(g: &Arc<Group>, seed: u64) -> Result<Group> {
    let target = 1usize << g.order().trailing_zeros();
    let mut candidates: Vec<u32> = (0..g.order() as u32)
        .filter(|&x| g.element_order(x).is_power_of_two())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    candidates.shuffle(&mut rng);
    let mut gens: Vec<u32> = Vec::new();
    let mut members = vec![g.identity()];
    while members.len() < target {
        let found = candidates.iter().copied().find(|&x| {
            members.binary_search(&x).is_err()
                && gens
                    .iter()
                    .all(|&h| members.binary_search(&g.conjugate(x, h)).is_ok())
        });
        let x = found.ok_or_else(|| {
            Error::SearchFailure(format!("stuck at order {} below {target}", members.len()))
        })?;
        gens.push(x);
        members = g.closure(&gens);
        if !members.len().is_power_of_two() {
            return Err(Error::SearchFailure("closure is not a 2-group".into()));
        }
    }
    Group::subgroup(g.clone(), members, &format!("Syl2({})", g.name()))
}

/// Finds `r` of order `|H|/2` and an involution `s` outside `<r>` with `s r s = r^-1`.
pub fn dihedral_presentation(h: &Group) -> Option<(u32, u32)> {
    let n = h.order();
    if n < 4 || !n.is_power_of_two() {
        return None;
    }
    let r = (0..n as u32).find(|&x| h.element_order(x) == n / 2)?;
    let cyclic = h.closure(&[r]);
    let s = (0..n as u32).find(|&s| {
        cyclic.binary_search(&s).is_err()
            && h.element_order(s) == 2
            && h.mul(h.mul(s, r), s) == h.inv(r)
    })?;
    Some((r, s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pgl2_sylow_is_dihedral() {
        for q in [7u32, 9] {
            let g = Arc::new(Group::pgl2(q).unwrap());
            let p = sylow2(&g, DEFAULT_SYLOW_SEED).unwrap();
            assert_eq!(p.order(), 16);
            assert!(dihedral_presentation(&p).is_some());
        }
    }

    #[test]
    fn abelian_sylow() {
        let g = Arc::new(Group::cyclic(12).unwrap());
        let p = sylow2(&g, 1).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(p.parent_ids().unwrap(), &[0, 3, 6, 9]);
        assert!(dihedral_presentation(&p).is_none());
    }

    #[test]
    fn seeds_agree_on_order() {
        let g = Arc::new(Group::symmetric(4).unwrap());
        for seed in 0..5 {
            let p = sylow2(&g, seed).unwrap();
            assert_eq!(p.order(), 8);
            assert!(dihedral_presentation(&p).is_some());
        }
    }
}
