use rayon::prelude::*;

use super::Group;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub id: usize,
    pub representative: u32,
    pub size: usize,
    /// Sorted element ids.
    pub elements: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPartition {
    pub classes: Vec<ConjClass>,
    /// element id -> class id
    pub class_of: Vec<u32>,
}

impl ClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn class_of(&self, x: u32) -> usize {
        self.class_of[x as usize] as usize
    }

    /// Class of `rep^e` for each class.
    pub fn power_map(&self, g: &Group, e: u64) -> Vec<usize> {
        self.classes
            .iter()
            .map(|c| self.class_of(g.pow(c.representative, e)))
            .collect()
    }

    pub fn inverse_map(&self, g: &Group) -> Vec<usize> {
        self.classes
            .iter()
            .map(|c| self.class_of(g.inv(c.representative)))
            .collect()
    }

    /// Centralizer order of each representative, counted by scanning all elements.
    pub fn centralizer_orders_by_scan(&self, g: &Group) -> Vec<usize> {
        self.classes
            .par_iter()
            .map(|c| {
                let x = c.representative;
                (0..g.order() as u32)
                    .filter(|&y| g.mul(x, y) == g.mul(y, x))
                    .count()
            })
            .collect()
    }
}

fn orbit(g: &Group, gens: &[u32], seed: u32, class_of: &mut [u32], id: u32) -> Vec<u32> {
    class_of[seed as usize] = id;
    let mut out = vec![seed];
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for &s in gens {
            let y = g.conjugate(s, x);
            if class_of[y as usize] == u32::MAX {
                class_of[y as usize] = id;
                out.push(y);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Conjugacy classes by orbit closure under conjugation by generators.
///
/// For `PGL_2(q)` the classes are seeded with the named representatives in label order, so
/// class ids coincide with [`super::Pgl2::label_index`]; a representative falling into an
/// earlier class is an error. Remaining classes are seeded smallest id first.
pub fn conjugacy_classes(g: &Group) -> Result<ClassPartition> {
    let gens = g.generators();
    let mut class_of = vec![u32::MAX; g.order()];
    let mut classes = Vec::new();
    let mut seeds: Vec<u32> = g.as_pgl2().map(|p| p.representatives()).unwrap_or_default();
    if seeds.is_empty() {
        seeds.push(g.identity());
    }
    let named = seeds.len();
    for (k, &s) in seeds.iter().enumerate() {
        if class_of[s as usize] != u32::MAX {
            return Err(Error::Assertion(format!(
                "representative {k} lies in the class of representative {}",
                class_of[s as usize]
            )));
        }
        let id = classes.len();
        let elements = orbit(g, &gens, s, &mut class_of, id as u32);
        classes.push(ConjClass {
            id,
            representative: s,
            size: elements.len(),
            elements,
        });
    }
    for x in 0..g.order() as u32 {
        if class_of[x as usize] == u32::MAX {
            let id = classes.len();
            let elements = orbit(g, &gens, x, &mut class_of, id as u32);
            classes.push(ConjClass {
                id,
                representative: x,
                size: elements.len(),
                elements,
            });
        }
    }
    if let Some(p) = g.as_pgl2() {
        if classes.len() != named {
            return Err(Error::Assertion(format!(
                "PGL2({}) has {} classes, expected {}",
                p.q(),
                classes.len(),
                named
            )));
        }
    }
    let total: usize = classes.iter().map(|c| c.size).sum();
    if total != g.order() {
        return Err(Error::Assertion(
            "class sizes do not sum to the group order".into(),
        ));
    }
    Ok(ClassPartition { classes, class_of })
}

/// Classes whose representatives have odd order.
pub fn regular_classes(g: &Group, part: &ClassPartition) -> Vec<usize> {
    part.classes
        .iter()
        .filter(|c| g.element_order(c.representative) % 2 == 1)
        .map(|c| c.id)
        .collect()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::groups::Pgl2Label;

    #[test]
    fn small_class_counts() {
        assert_eq!(
            conjugacy_classes(&Group::cyclic(8).unwrap()).unwrap().len(),
            8
        );
        assert_eq!(
            conjugacy_classes(&Group::symmetric(4).unwrap())
                .unwrap()
                .len(),
            5
        );
        assert_eq!(
            conjugacy_classes(&Group::dihedral(16).unwrap())
                .unwrap()
                .len(),
            7
        );
        let c2 = Arc::new(Group::cyclic(2).unwrap());
        let s4 = Arc::new(Group::symmetric(4).unwrap());
        let c4 = Arc::new(Group::cyclic(4).unwrap());
        let v4 = Group::direct_product(c2.clone(), c2.clone()).unwrap();
        assert_eq!((v4.order(), conjugacy_classes(&v4).unwrap().len()), (4, 4));
        let s4c2 = Group::direct_product(s4, c2).unwrap();
        assert_eq!(
            (s4c2.order(), conjugacy_classes(&s4c2).unwrap().len()),
            (48, 10)
        );
        let c4c4 = Group::direct_product(c4.clone(), c4).unwrap();
        assert_eq!(conjugacy_classes(&c4c4).unwrap().len(), 16);
    }

    #[test]
    fn pgl2_classes_and_centralizers() {
        for q in [3u32, 5, 7, 9, 11, 13] {
            let g = Group::pgl2(q).unwrap();
            let part = conjugacy_classes(&g).unwrap();
            assert_eq!(part.len(), q as usize + 2);
            let p = g.as_pgl2().unwrap();
            let scanned = part.centralizer_orders_by_scan(&g);
            for (k, l) in p.labels().into_iter().enumerate() {
                assert_eq!(part.classes[k].size * scanned[k], g.order(), "q={q} {l}");
                assert_eq!(scanned[k], p.centralizer_order(l), "q={q} {l}");
            }
            // A3,i ~ A3,-i and A4,j ~ A4,-j
            for i in 1..(q as i64 - 1) {
                let a = p.id_of(p.a3_matrix(i)).unwrap();
                let b = p.id_of(p.a3_matrix(-i)).unwrap();
                assert_eq!(part.class_of(a), part.class_of(b));
                let want = p.label_index(p.normalize_a3(i)).unwrap();
                assert_eq!(part.class_of(a), want);
            }
            for j in 1..(q as i64 + 1) {
                let a = p.id_of(p.a4_matrix(j)).unwrap();
                let b = p.id_of(p.a4_matrix(-j)).unwrap();
                assert_eq!(part.class_of(a), part.class_of(b));
                assert_eq!(
                    part.class_of(a),
                    p.label_index(p.normalize_a4(j).unwrap()).unwrap()
                );
            }
            // the degenerate index 0 formula is unipotent
            let z = p.id_of(p.a4_matrix(0)).unwrap();
            assert_eq!(part.class_of(z), p.label_index(Pgl2Label::A2).unwrap());
        }
    }

    #[test]
    fn regular_class_counts() {
        let g = Group::pgl2(9).unwrap();
        let part = conjugacy_classes(&g).unwrap();
        let p = g.as_pgl2().unwrap();
        let labels: Vec<String> = regular_classes(&g, &part)
            .into_iter()
            .map(|k| p.labels()[k].to_string())
            .collect();
        assert_eq!(labels, vec!["A1", "A2", "A4,2", "A4,4"]);

        let g = Group::pgl2(7).unwrap();
        let part = conjugacy_classes(&g).unwrap();
        assert_eq!(regular_classes(&g, &part).len(), 3);

        let c2 = Group::cyclic(2).unwrap();
        assert_eq!(
            regular_classes(&c2, &conjugacy_classes(&c2).unwrap()),
            vec![0]
        );
    }

    #[test]
    fn a3_class_from_coset_representatives() {
        let g = Group::pgl2(9).unwrap();
        let part = conjugacy_classes(&g).unwrap();
        let p = g.as_pgl2().unwrap();
        let c1 = p.class_elements_a3(1).unwrap();
        assert_eq!(c1.len(), 90);
        assert_eq!(
            c1,
            part.classes[p.label_index(Pgl2Label::A3(1)).unwrap()].elements
        );
        let c3 = p.class_elements_a3(3).unwrap();
        assert_eq!(c3.len(), 90);
        assert!(c3.iter().all(|x| c1.binary_search(x).is_err()));
        assert!(p.class_elements_a3(4).is_err());
        assert!(p.class_elements_a3(0).is_err());

        let g7 = Group::pgl2(7).unwrap();
        assert_eq!(
            g7.as_pgl2().unwrap().class_elements_a3(1).unwrap().len(),
            56
        );
    }
}
