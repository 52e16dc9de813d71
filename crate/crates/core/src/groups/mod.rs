//! Enumerable finite groups with dense element ids.
//!
//! Every backend numbers its elements `0..order` and exposes multiplication and inversion on
//! ids. Each element also has a canonical byte encoding, equal bytes meaning equal elements.

mod classes;
mod pgl2;
mod sylow;

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use classes::{conjugacy_classes, regular_classes, ClassPartition, ConjClass};
pub use pgl2::{Matrix, Pgl2, Pgl2Label};
pub use sylow::{dihedral_presentation, sylow2, DEFAULT_SYLOW_SEED};

/// Default bound on the number of group elements.
pub const DEFAULT_GROUP_GUARD: usize = 200_000;

/// Hard ceiling for the guard override; covers `PGL_2(127)`.
pub const MAX_GROUP_GUARD: usize = 2_100_000;

#[derive(Debug)]
struct Symmetric {
    degree: usize,
    perms: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, u32>,
}

#[derive(Debug)]
struct Subgroup {
    parent: Arc<Group>,
    elements: Vec<u32>,
    index: HashMap<u32, u32>,
}

#[derive(Debug)]
enum Backend {
    Pgl2(Pgl2),
    Cyclic(usize),
    /// `r^k s^f` has id `k + n f` in the dihedral group of order `2n`.
    Dihedral(usize),
    Symmetric(Symmetric),
    Product(Arc<Group>, Arc<Group>),
    Subgroup(Subgroup),
}

/// Which construction a [`Group`] came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Pgl2,
    Cyclic,
    Dihedral,
    Symmetric,
    Product,
    Subgroup,
}

#[derive(Debug)]
pub struct Group {
    name: String,
    order: usize,
    backend: Backend,
}

fn check_guard(order: usize, guard: usize) -> Result<()> {
    if order > guard {
        return Err(Error::ResourceLimit(format!(
            "group order {order} exceeds guard {guard}"
        )));
    }
    Ok(())
}

impl Group {
    pub fn pgl2(q: u32) -> Result<Group> {
        Self::pgl2_with_guard(q, DEFAULT_GROUP_GUARD)
    }

    pub fn pgl2_with_guard(q: u32, guard: usize) -> Result<Group> {
        if guard > MAX_GROUP_GUARD {
            return Err(Error::InvalidInput(format!(
                "guard {guard} above ceiling {MAX_GROUP_GUARD}"
            )));
        }
        if q.is_multiple_of(2) {
            return Err(Error::InvalidInput(format!("q = {q} is even")));
        }
        if crate::ffield::prime_power(q as u64).is_none() {
            return Err(Error::InvalidInput(format!("{q} is not a prime power")));
        }
        let qq = q as usize;
        check_guard(qq.saturating_mul(qq * qq - 1), guard)?;
        let g = Pgl2::new(q)?;
        Ok(Group {
            name: format!("PGL2({q})"),
            order: g.order(),
            backend: Backend::Pgl2(g),
        })
    }

    pub fn cyclic(n: usize) -> Result<Group> {
        if n == 0 {
            return Err(Error::InvalidInput("cyclic group of order 0".into()));
        }
        check_guard(n, DEFAULT_GROUP_GUARD)?;
        Ok(Group {
            name: format!("C{n}"),
            order: n,
            backend: Backend::Cyclic(n),
        })
    }

    /// Dihedral group of the given (even) order.
    pub fn dihedral(order: usize) -> Result<Group> {
        if order < 4 || !order.is_multiple_of(2) {
            return Err(Error::InvalidInput(format!(
                "no dihedral group of order {order}"
            )));
        }
        check_guard(order, DEFAULT_GROUP_GUARD)?;
        Ok(Group {
            name: format!("D{order}"),
            order,
            backend: Backend::Dihedral(order / 2),
        })
    }

    pub fn symmetric(degree: usize) -> Result<Group> {
        if degree == 0 || degree > 8 {
            return Err(Error::ResourceLimit(format!(
                "symmetric group degree {degree} outside 1..=8"
            )));
        }
        let mut perms = Vec::new();
        let mut p: Vec<u8> = (0..degree as u8).collect();
        loop {
            perms.push(p.clone());
            // next permutation in lexicographic order
            let Some(i) = (0..degree.saturating_sub(1))
                .rev()
                .find(|&i| p[i] < p[i + 1])
            else {
                break;
            };
            let j = (i + 1..degree)
                .rev()
                .find(|&j| p[j] > p[i])
                .expect("successor exists");
            p.swap(i, j);
            p[i + 1..].reverse();
        }
        let index = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        Ok(Group {
            name: format!("S{degree}"),
            order: perms.len(),
            backend: Backend::Symmetric(Symmetric {
                degree,
                perms,
                index,
            }),
        })
    }

    pub fn direct_product(a: Arc<Group>, b: Arc<Group>) -> Result<Group> {
        Self::direct_product_with_guard(a, b, DEFAULT_GROUP_GUARD)
    }

    pub fn direct_product_with_guard(a: Arc<Group>, b: Arc<Group>, guard: usize) -> Result<Group> {
        let order = a
            .order
            .checked_mul(b.order)
            .ok_or_else(|| Error::ResourceLimit("order overflow".into()))?;
        check_guard(order, guard)?;
        Ok(Group {
            name: format!("{}x{}", a.name, b.name),
            order,
            backend: Backend::Product(a, b),
        })
    }

    /// The subgroup with the given element set. The set must be closed under multiplication.
    pub fn subgroup(parent: Arc<Group>, mut elements: Vec<u32>, name: &str) -> Result<Group> {
        elements.sort_unstable();
        elements.dedup();
        let index: HashMap<u32, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i as u32))
            .collect();
        for &x in &elements {
            for &y in &elements {
                if !index.contains_key(&parent.mul(x, y)) {
                    return Err(Error::InvalidInput("element set is not closed".into()));
                }
            }
        }
        if !index.contains_key(&parent.identity()) {
            return Err(Error::InvalidInput("element set lacks the identity".into()));
        }
        Ok(Group {
            name: name.to_string(),
            order: elements.len(),
            backend: Backend::Subgroup(Subgroup {
                parent,
                elements,
                index,
            }),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn kind(&self) -> GroupKind {
        match self.backend {
            Backend::Pgl2(_) => GroupKind::Pgl2,
            Backend::Cyclic(_) => GroupKind::Cyclic,
            Backend::Dihedral(_) => GroupKind::Dihedral,
            Backend::Symmetric(_) => GroupKind::Symmetric,
            Backend::Product(..) => GroupKind::Product,
            Backend::Subgroup(_) => GroupKind::Subgroup,
        }
    }

    pub fn as_pgl2(&self) -> Option<&Pgl2> {
        match &self.backend {
            Backend::Pgl2(g) => Some(g),
            _ => None,
        }
    }

    /// Factors of a direct product.
    pub fn factors(&self) -> Option<(&Arc<Group>, &Arc<Group>)> {
        match &self.backend {
            Backend::Product(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// Parent ids of a subgroup's elements, indexed by subgroup id.
    pub fn parent_ids(&self) -> Option<&[u32]> {
        match &self.backend {
            Backend::Subgroup(s) => Some(&s.elements),
            _ => None,
        }
    }

    pub fn identity(&self) -> u32 {
        match &self.backend {
            Backend::Pgl2(g) => g.identity(),
            Backend::Cyclic(_) | Backend::Dihedral(_) | Backend::Symmetric(_) => 0,
            Backend::Product(a, b) => a.identity() * b.order as u32 + b.identity(),
            Backend::Subgroup(s) => s.index[&s.parent.identity()],
        }
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        match &self.backend {
            Backend::Pgl2(g) => g.mul(x, y),
            Backend::Cyclic(n) => ((x as usize + y as usize) % n) as u32,
            Backend::Dihedral(n) => {
                let n = *n as u32;
                let (a, f) = (x % n, x / n);
                let (b, g) = (y % n, y / n);
                let k = if f == 0 { (a + b) % n } else { (a + n - b) % n };
                k + n * (f ^ g)
            }
            Backend::Symmetric(s) => {
                let p = &s.perms[x as usize];
                let r = &s.perms[y as usize];
                let c: Vec<u8> = (0..s.degree).map(|i| p[r[i] as usize]).collect();
                s.index[&c]
            }
            Backend::Product(a, b) => {
                let nb = b.order as u32;
                a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)
            }
            Backend::Subgroup(s) => {
                s.index[&s.parent.mul(s.elements[x as usize], s.elements[y as usize])]
            }
        }
    }

    #[inline]
    pub fn inv(&self, x: u32) -> u32 {
        match &self.backend {
            Backend::Pgl2(g) => g.inv(x),
            Backend::Cyclic(n) => ((*n - x as usize) % n) as u32,
            Backend::Dihedral(n) => {
                let n = *n as u32;
                if x < n {
                    (n - x) % n
                } else {
                    x
                }
            }
            Backend::Symmetric(s) => {
                let p = &s.perms[x as usize];
                let mut c = vec![0u8; s.degree];
                for (i, &pi) in p.iter().enumerate() {
                    c[pi as usize] = i as u8;
                }
                s.index[&c]
            }
            Backend::Product(a, b) => {
                let nb = b.order as u32;
                a.inv(x / nb) * nb + b.inv(x % nb)
            }
            Backend::Subgroup(s) => s.index[&s.parent.inv(s.elements[x as usize])],
        }
    }

    pub fn pow(&self, x: u32, mut e: u64) -> u32 {
        let mut r = self.identity();
        let mut b = x;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    pub fn conjugate(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, x: u32) -> usize {
        let e = self.identity();
        let mut y = x;
        let mut k = 1;
        while y != e {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// A generating set, used for conjugation orbits and closures.
    pub fn generators(&self) -> Vec<u32> {
        match &self.backend {
            Backend::Pgl2(g) => g.generators(),
            Backend::Cyclic(n) => vec![if *n == 1 { 0 } else { 1 }],
            Backend::Dihedral(n) => vec![1 % *n as u32, *n as u32],
            Backend::Symmetric(s) => {
                if s.degree == 1 {
                    return vec![0];
                }
                let mut swap: Vec<u8> = (0..s.degree as u8).collect();
                swap.swap(0, 1);
                let cycle: Vec<u8> = (0..s.degree as u8)
                    .map(|i| (i + 1) % s.degree as u8)
                    .collect();
                vec![s.index[&swap], s.index[&cycle]]
            }
            Backend::Product(a, b) => {
                let nb = b.order as u32;
                let mut out: Vec<u32> = a
                    .generators()
                    .into_iter()
                    .map(|x| x * nb + b.identity())
                    .collect();
                out.extend(b.generators().into_iter().map(|y| a.identity() * nb + y));
                out
            }
            Backend::Subgroup(s) => (0..s.elements.len() as u32).collect(),
        }
    }

    pub fn encode(&self, x: u32) -> Vec<u8> {
        match &self.backend {
            Backend::Pgl2(g) => g.encode(x),
            Backend::Cyclic(_) | Backend::Dihedral(_) => x.to_le_bytes().to_vec(),
            Backend::Symmetric(s) => s.perms[x as usize].clone(),
            Backend::Product(a, b) => {
                let nb = b.order as u32;
                let mut out = a.encode(x / nb);
                out.extend(b.encode(x % nb));
                out
            }
            Backend::Subgroup(s) => s.parent.encode(s.elements[x as usize]),
        }
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn closure(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.order];
        let e = self.identity();
        seen[e as usize] = true;
        let mut out = vec![e];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(g: &Group) {
        let n = g.order() as u32;
        let e = g.identity();
        let step = (n / 40).max(1);
        for x in (0..n).step_by(step as usize) {
            assert_eq!(g.mul(e, x), x);
            assert_eq!(g.mul(x, g.inv(x)), e);
            for y in (0..n).step_by(step as usize + 1) {
                for z in (0..n).step_by(step as usize + 2) {
                    assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                }
            }
        }
        assert_eq!(g.closure(&g.generators()).len(), g.order());
        let mut enc: Vec<Vec<u8>> = (0..n).map(|x| g.encode(x)).collect();
        enc.sort();
        enc.dedup();
        assert_eq!(enc.len(), g.order());
    }

    #[test]
    fn backends_satisfy_axioms() {
        check_axioms(&Group::cyclic(8).unwrap());
        check_axioms(&Group::dihedral(16).unwrap());
        check_axioms(&Group::symmetric(4).unwrap());
        check_axioms(&Group::pgl2(7).unwrap());
        check_axioms(&Group::pgl2(9).unwrap());
        let p = Group::direct_product(
            Arc::new(Group::symmetric(4).unwrap()),
            Arc::new(Group::cyclic(2).unwrap()),
        )
        .unwrap();
        assert_eq!(p.order(), 48);
        check_axioms(&p);
    }

    #[test]
    fn guards() {
        assert!(matches!(Group::pgl2(8), Err(Error::InvalidInput(_))));
        assert!(matches!(Group::pgl2(15), Err(Error::InvalidInput(_))));
        assert!(matches!(Group::pgl2(81), Err(Error::ResourceLimit(_))));
        assert!(Group::pgl2_with_guard(81, 600_000).is_ok());
        let big = Arc::new(Group::cyclic(1000).unwrap());
        assert!(matches!(
            Group::direct_product(big.clone(), big),
            Err(Error::ResourceLimit(_))
        ));
    }
}
