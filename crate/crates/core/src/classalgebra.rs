//! The center of a group algebra in characteristic 2 on the class-sum basis.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::commalg::{CommAlgebra, Multiply, QuotientAlgebra};
use crate::error::{ensure, Error, Result};
use crate::ffield::{prime_power, BinaryField};
use crate::groups::{ClassPartition, Group, Pgl2, Pgl2Label};
use crate::linalg2::Subspace;

/// Largest number of classes for which the dense count table is built.
pub const MAX_CLASSES: usize = 4096;

/// `Z(kG)` with exact integer structure constants
/// `c_{ijk} = #{(x, y) in K_i x K_j : xy = z_k}` for a fixed `z_k in K_k`.
#[derive(Debug)]
pub struct CenterAlgebra {
    group: Arc<Group>,
    partition: Arc<ClassPartition>,
    labels: Vec<String>,
    /// `(i, j, k, count)` with `count > 0`, sorted
    constants: Vec<(u32, u32, u32, u32)>,
    identity_class: usize,
    algebra: CommAlgebra,
}

pub fn center_of_group_algebra(group: Arc<Group>, partition: Arc<ClassPartition>) -> Result<CenterAlgebra> {
    let r = partition.len();
    if r > MAX_CLASSES {
        return Err(Error::ResourceLimit(format!("{r} classes exceeds {MAX_CLASSES}")));
    }
    let g = &*group;
    let per_target: Vec<Vec<(u32, u32, u32, u32)>> = (0..r)
        .into_par_iter()
        .map(|k| {
            let z = partition.classes[k].representative;
            let mut counts = vec![0u32; r * r];
            for x in 0..g.order() as u32 {
                let i = partition.class_of(x);
                let j = partition.class_of(g.mul(g.inv(x), z));
                counts[i * r + j] += 1;
            }
            counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(ij, &c)| ((ij / r) as u32, (ij % r) as u32, k as u32, c))
                .collect()
        })
        .collect();
    let mut constants: Vec<_> = per_target.into_iter().flatten().collect();
    constants.sort_unstable();

    let identity_class = partition.class_of(g.identity());
    let sizes = partition.sizes();
    // sum_j c_{ijk} = |K_i| and c_{ijk} = c_{jik}
    let mut row_sums = vec![0usize; r * r];
    let mut dense = vec![0u32; r * r * r];
    for &(i, j, k, c) in &constants {
        row_sums[i as usize * r + k as usize] += c as usize;
        dense[(i as usize * r + j as usize) * r + k as usize] = c;
    }
    for i in 0..r {
        for k in 0..r {
            ensure!(row_sums[i * r + k] == sizes[i], "class count identity fails at ({i}, {k})");
            for j in 0..r {
                if dense[(i * r + j) * r + k] != dense[(j * r + i) * r + k] {
                    return Err(Error::NotCommutative(i, j));
                }
            }
        }
    }

    let labels: Vec<String> = match g.as_pgl2() {
        Some(p) => p.labels().iter().map(|l| l.to_string()).collect(),
        None => (0..r).map(|k| format!("K{k}")).collect(),
    };
    let mut unit = vec![0u32; r];
    unit[identity_class] = 1;
    let algebra = CommAlgebra::new(
        &BinaryField::f2(),
        labels.clone(),
        |i, j| (0..r).map(|k| dense[(i * r + j) * r + k] & 1).collect(),
        unit,
    )?;
    Ok(CenterAlgebra { group, partition, labels, constants, identity_class, algebra })
}

impl CenterAlgebra {
    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn partition(&self) -> &Arc<ClassPartition> {
        &self.partition
    }

    pub fn dim(&self) -> usize {
        self.partition.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity_class(&self) -> usize {
        self.identity_class
    }

    /// Integer structure constants `(i, j, k, count)`.
    pub fn constants(&self) -> &[(u32, u32, u32, u32)] {
        &self.constants
    }

    /// The mod-2 reduction, over F_2.
    pub fn algebra(&self) -> &CommAlgebra {
        &self.algebra
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.partition.sizes()
    }

    pub fn pgl2(&self) -> Option<&Pgl2> {
        self.group.as_pgl2()
    }

    /// Class sum of a labelled class, as a class-sum coordinate vector.
    pub fn class_sum(&self, label: Pgl2Label) -> Result<Vec<u32>> {
        let p = self.pgl2().ok_or_else(|| Error::InvalidInput("class labels need PGL2".into()))?;
        let k = p
            .label_index(label)
            .ok_or_else(|| Error::InvalidInput(format!("label {label} out of range")))?;
        let mut v = vec![0u32; self.dim()];
        v[k] = 1;
        Ok(v)
    }

    /// Embedding of a class-sum coordinate vector into group-algebra coordinates.
    pub fn to_group_algebra(&self, v: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; self.group.order()];
        for (k, &c) in v.iter().enumerate() {
            if c != 0 {
                for &x in &self.partition.classes[k].elements {
                    out[x as usize] ^= c;
                }
            }
        }
        out
    }

    /// Augmentation `sum_k v_k |K_k|`, valid over any `F_{2^m}`.
    pub fn augmentation(&self, v: &[u32]) -> u32 {
        let sizes = self.class_sizes();
        v.iter().zip(&sizes).filter(|(_, &s)| s % 2 == 1).fold(0, |acc, (&c, _)| acc ^ c)
    }
}

/// The class squaring map `K -> class(x^2)` for `x in K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMap {
    pub image: Vec<usize>,
}

/// Builds the squaring map from representatives and checks that it is well defined: on every
/// element for groups of order up to `10^4`, on 2000 seeded random elements above.
pub fn square_map(g: &Group, part: &ClassPartition) -> Result<SquareMap> {
    let image = part.power_map(g, 2);
    let check = |x: u32| part.class_of(g.mul(x, x)) == image[part.class_of(x)];
    let ok = if g.order() <= 10_000 {
        (0..g.order() as u32).into_par_iter().all(check)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        (0..2000).map(|_| rng.gen_range(0..g.order() as u32)).all(check)
    };
    if !ok {
        return Err(Error::Assertion("squaring is not constant on a conjugacy class".into()));
    }
    Ok(SquareMap { image })
}

impl SquareMap {
    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// `n`-fold composite.
    pub fn iterate(&self, n: u32) -> SquareMap {
        let image = (0..self.image.len())
            .map(|mut c| {
                for _ in 0..n {
                    c = self.image[c];
                }
                c
            })
            .collect();
        SquareMap { image }
    }

    /// Classes mapping to `target`, in increasing order.
    pub fn fiber(&self, target: usize) -> Vec<usize> {
        (0..self.image.len()).filter(|&c| self.image[c] == target).collect()
    }
}

/// `T_n^perp(kG)`: span of the class-level fiber sums of the `n`-fold squaring map.
pub fn kuelshammer_perp_group(sq: &SquareMap, n: u32, field: &BinaryField) -> Result<Subspace> {
    let it = sq.iterate(n);
    let r = sq.len();
    let vectors: Vec<Vec<u32>> = (0..r)
        .map(|c| {
            let mut v = vec![0u32; r];
            for d in it.fiber(c) {
                v[d] = 1;
            }
            v
        })
        .filter(|v| v.iter().any(|&x| x != 0))
        .collect();
    Subspace::span(field, r, &vectors)
}

/// Which family of semisimple classes carries the 2-part of the principal block:
/// `A3` for `q = 1 mod 8` (split torus) and `A4` for `q = -1 mod 8` (nonsplit torus).
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum TorusFamily {
    A3,
    A4,
}

/// Defect data of `PGL_2(q)` for `q = +-1 mod 8`: `q -+ 1 = 2^{n-1} q'` with `q'` odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DefectData {
    pub q: u32,
    pub n: u32,
    pub q_odd: u32,
    pub family: TorusFamily,
}

impl DefectData {
    pub fn new(q: u32) -> Result<Self> {
        match prime_power(q as u64) {
            Some((p, _)) if p != 2 => {}
            _ => return Err(Error::InvalidInput(format!("q = {q} is not an odd prime power"))),
        }
        let family = match q % 8 {
            1 => TorusFamily::A3,
            7 => TorusFamily::A4,
            _ => return Err(Error::Precondition(format!("q = {q} is not +-1 mod 8"))),
        };
        let m = match family {
            TorusFamily::A3 => q - 1,
            TorusFamily::A4 => q + 1,
        };
        let v = m.trailing_zeros();
        Ok(DefectData { q, n: v + 1, q_odd: m >> v, family })
    }

    /// `(q -+ 1)/4`, the period in the class-sum identities.
    pub fn quarter(&self) -> u32 {
        match self.family {
            TorusFamily::A3 => (self.q - 1) / 4,
            TorusFamily::A4 => (self.q + 1) / 4,
        }
    }

    /// Upper end of the index sets: `(q-5)/4` or `(q-3)/4`.
    pub fn index_bound(&self) -> u32 {
        match self.family {
            TorusFamily::A3 => (self.q - 5) / 4,
            TorusFamily::A4 => (self.q - 3) / 4,
        }
    }

    /// Class label of index `i` in the torus family, with index reduction.
    pub fn label(&self, g: &Pgl2, i: i64) -> Result<Pgl2Label> {
        match self.family {
            TorusFamily::A3 => Ok(g.normalize_a3(i)),
            TorusFamily::A4 => g.normalize_a4(i),
        }
    }

    /// The involution class of the torus family: `A3,(q-1)/2` or `A4,(q+1)/2`.
    pub fn involution(&self) -> Pgl2Label {
        match self.family {
            TorusFamily::A3 => Pgl2Label::A3((self.q - 1) / 2),
            TorusFamily::A4 => Pgl2Label::A4(self.q.div_ceil(2)),
        }
    }

    fn family_label(&self, i: u32) -> Pgl2Label {
        match self.family {
            TorusFamily::A3 => Pgl2Label::A3(i),
            TorusFamily::A4 => Pgl2Label::A4(i),
        }
    }
}

/// Coset representatives of `Z/T_1^perp` for `PGL_2(q)`, as class labels.
pub fn zbar_basis_labels(q: u32) -> Vec<Pgl2Label> {
    let mut out = vec![Pgl2Label::A1];
    if q % 4 == 1 {
        out.push(Pgl2Label::A3((q - 1) / 2));
        out.extend((1..=(q - 5) / 4).map(Pgl2Label::A3));
        out.extend((1..=(q - 1) / 4).map(Pgl2Label::A4));
    } else {
        out.push(Pgl2Label::A4(q.div_ceil(2)));
        out.extend((1..=(q - 3) / 4).map(Pgl2Label::A3));
        out.extend((1..=(q - 3) / 4).map(Pgl2Label::A4));
    }
    out
}

/// `Z/T_1^perp` over F_2. For `PGL_2(q)` the coset representatives are the class sums of
/// [`zbar_basis_labels`]; otherwise the reduced echelon cosets.
pub fn quotient_zbar(center: &CenterAlgebra, t1perp: &Subspace) -> Result<QuotientAlgebra> {
    let a = center.algebra();
    let reps = match center.pgl2() {
        Some(p) => {
            let labels = zbar_basis_labels(p.q());
            let vecs = labels.iter().map(|&l| center.class_sum(l)).collect::<Result<Vec<_>>>()?;
            Some((vecs, labels.iter().map(|l| l.to_string()).collect()))
        }
        None => None,
    };
    QuotientAlgebra::new(a, &a.whole(), t1perp, reps)
}

/// Image in `Z/T_1^perp` of a labelled class sum.
pub fn zbar_class(center: &CenterAlgebra, zbar: &QuotientAlgebra, label: Pgl2Label) -> Result<Vec<u32>> {
    zbar.project(&center.class_sum(label)?)
}

fn pgl2_and_data(center: &CenterAlgebra) -> Result<(&Pgl2, DefectData)> {
    let p = center.pgl2().ok_or_else(|| Error::InvalidInput("class-sum identities need PGL2".into()))?;
    Ok((p, DefectData::new(p.q())?))
}

/// Square in `Z/T_1^perp` of the torus class of index `i`, computed from structure constants.
/// Index 0 of the nonsplit family has no class and is rejected.
pub fn classsum_square_zbar(center: &CenterAlgebra, zbar: &QuotientAlgebra, i: i64) -> Result<Vec<u32>> {
    let (p, d) = pgl2_and_data(center)?;
    let x = zbar_class(center, zbar, d.label(p, i)?)?;
    Ok(zbar.algebra.square(&x))
}

/// The closed form for the square: the class of index `2i` when `(q-+1)/4` does not divide
/// `i`; otherwise 0 or `A1` according to the parity of `i / ((q-+1)/4)`.
pub fn expected_square_zbar(center: &CenterAlgebra, zbar: &QuotientAlgebra, i: i64) -> Result<Vec<u32>> {
    let (p, d) = pgl2_and_data(center)?;
    let quarter = d.quarter() as i64;
    if i.rem_euclid(quarter) != 0 {
        return zbar_class(center, zbar, d.label(p, 2 * i)?);
    }
    if (i / quarter) % 2 != 0 {
        Ok(vec![0; zbar.dim()])
    } else {
        zbar_class(center, zbar, Pgl2Label::A1)
    }
}

/// Product in `Z/T_1^perp` of the torus classes of indices `i` and `j`. Refuses unless
/// `(q-+1)/4` divides none of `i`, `j`, `i+j`, `i-j`.
pub fn classsum_product_zbar(center: &CenterAlgebra, zbar: &QuotientAlgebra, i: i64, j: i64) -> Result<Vec<u32>> {
    let (p, d) = pgl2_and_data(center)?;
    let quarter = d.quarter() as i64;
    if [i, j, i + j, i - j].iter().any(|x| x.rem_euclid(quarter) == 0) {
        return Err(Error::Precondition(format!("({q}-+1)/4 divides one of {i}, {j}, i+-j", q = p.q())));
    }
    let x = zbar_class(center, zbar, d.label(p, i)?)?;
    let y = zbar_class(center, zbar, d.label(p, j)?)?;
    Ok(zbar.algebra.mul(&x, &y))
}

/// The two-term closed form `X_{i+j} + X_{i-j}` for the product, same precondition.
pub fn expected_product_zbar(center: &CenterAlgebra, zbar: &QuotientAlgebra, i: i64, j: i64) -> Result<Vec<u32>> {
    let (p, d) = pgl2_and_data(center)?;
    let quarter = d.quarter() as i64;
    if [i, j, i + j, i - j].iter().any(|x| x.rem_euclid(quarter) == 0) {
        return Err(Error::Precondition(format!("({q}-+1)/4 divides one of {i}, {j}, i+-j", q = p.q())));
    }
    let mut v = zbar_class(center, zbar, d.label(p, i + j)?)?;
    let w = zbar_class(center, zbar, d.label(p, i - j)?)?;
    for (a, b) in v.iter_mut().zip(w) {
        *a ^= b;
    }
    Ok(v)
}

/// `{i : 1 <= i <= bound, i = +-s mod q'}` for the torus family of `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassIndexSet {
    pub s: u32,
    pub members: Vec<u32>,
}

impl ClassIndexSet {
    pub fn even(&self) -> Vec<u32> {
        self.members.iter().copied().filter(|i| i % 2 == 0).collect()
    }

    pub fn odd(&self) -> Vec<u32> {
        self.members.iter().copied().filter(|i| i % 2 == 1).collect()
    }
}

/// The sets for `s = 0..=(q'-1)/2`.
pub fn class_index_sets(q: u32) -> Result<Vec<ClassIndexSet>> {
    let d = DefectData::new(q)?;
    let qo = d.q_odd;
    Ok((0..=(qo - 1) / 2)
        .map(|s| {
            let members = (1..=d.index_bound())
                .filter(|&i| {
                    let r = i % qo;
                    r == s || r == (qo - s) % qo
                })
                .collect();
            ClassIndexSet { s, members }
        })
        .collect())
}

/// A sum of class sums, given by its labels.
pub type LabelSum = Vec<Pgl2Label>;

fn require_defect(q: u32) -> Result<DefectData> {
    let d = DefectData::new(q)?;
    if d.n < 4 {
        return Err(Error::Precondition(format!("q = {q} has defect {} < 4", d.n)));
    }
    Ok(d)
}

/// The explicit basis of the radical of `Z/T_1^perp`: the involution class plus `A1`, the
/// classes indexed by the `s = 0` set, and the differences within each `s > 0` set.
pub fn explicit_radical_basis(q: u32) -> Result<Vec<LabelSum>> {
    let d = require_defect(q)?;
    let sets = class_index_sets(q)?;
    let x = |i: u32| d.family_label(i);
    let mut out = vec![vec![Pgl2Label::A1, d.involution()]];
    out.extend(sets[0].members.iter().map(|&i| vec![x(i)]));
    for set in &sets[1..] {
        out.extend(set.members.iter().filter(|&&i| i != set.s).map(|&i| vec![x(i), x(set.s)]));
    }
    Ok(out)
}

/// [`explicit_radical_basis`] with its first vector replaced by `A1` plus the involution class plus
/// the classes `A4,j`, `j <= (q-1)/4` (resp. `A3,i`, `i <= (q-3)/4`). The square of the
/// involution class sum in `Z/T_1^perp` is `A1` plus that sum, not `A1` alone: the cross terms
/// of the squared class sum are commutators but not elements of `T_1^perp`.
pub fn corrected_radical_basis(q: u32) -> Result<Vec<LabelSum>> {
    let d = require_defect(q)?;
    let mut out = explicit_radical_basis(q)?;
    out[0].extend(match d.family {
        TorusFamily::A3 => (1..=(q - 1) / 4).map(Pgl2Label::A4).collect::<Vec<_>>(),
        TorusFamily::A4 => (1..=(q - 3) / 4).map(Pgl2Label::A3).collect(),
    });
    Ok(out)
}

/// The explicit basis of the square of the radical, paired by parity inside each index set.
pub fn explicit_radical_square_basis(q: u32) -> Result<Vec<LabelSum>> {
    let d = require_defect(q)?;
    let sets = class_index_sets(q)?;
    let qo = d.q_odd;
    let x = |i: u32| d.family_label(i);
    let mut out: Vec<LabelSum> = sets[0].even().into_iter().map(|i| vec![x(i)]).collect();
    out.extend(sets[0].odd().into_iter().filter(|&i| i != qo).map(|i| vec![x(qo), x(i)]));
    for set in &sets[1..] {
        let s = set.s;
        let (same_as_s, same_as_shift) = if s % 2 == 1 { (set.odd(), set.even()) } else { (set.even(), set.odd()) };
        out.extend(same_as_s.into_iter().filter(|&i| i != s).map(|i| vec![x(s), x(i)]));
        out.extend(same_as_shift.into_iter().filter(|&i| i != qo + s).map(|i| vec![x(qo + s), x(i)]));
    }
    Ok(out)
}

/// Coordinates in `Z/T_1^perp` of a sum of labelled class sums.
pub fn label_sum_in_zbar(center: &CenterAlgebra, zbar: &QuotientAlgebra, sum: &[Pgl2Label]) -> Result<Vec<u32>> {
    let mut v = vec![0u32; zbar.dim()];
    for &l in sum {
        for (a, b) in v.iter_mut().zip(zbar_class(center, zbar, l)?) {
            *a ^= b;
        }
    }
    Ok(v)
}
