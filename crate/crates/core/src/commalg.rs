//! Structure-constant algebras over `F_{2^m}` and their quotients.

use crate::error::{Error, Result};
use crate::ffield::BinaryField;
use crate::linalg2::{add_into, invert, scale, vec_mul, SemilinearMap, Subspace};

/// Anything with a bilinear product on coordinate vectors.
pub trait Multiply: Sync {
    fn field(&self) -> &BinaryField;
    fn dim(&self) -> usize;
    /// `b_i * b_j` as sparse `(k, coefficient)` pairs.
    fn basis_product(&self, i: usize, j: usize) -> &[(u32, u32)];

    fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field();
        let mut out = vec![0u32; self.dim()];
        let ys: Vec<(usize, u32)> = y
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .collect();
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for &(j, b) in &ys {
                let c = f.mul(a, b);
                for &(k, v) in self.basis_product(i, j) {
                    out[k as usize] ^= f.mul(c, v);
                }
            }
        }
        out
    }

    fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut e = vec![0u32; self.dim()];
        e[i] = 1;
        e
    }
}

/// A commutative algebra with unit, given by structure constants.
#[derive(Clone, Debug)]
pub struct CommAlgebra {
    field: BinaryField,
    dim: usize,
    labels: Vec<String>,
    /// products of basis pairs, indexed `i * dim + j`
    prods: Vec<Vec<(u32, u32)>>,
    unit: Vec<u32>,
}

impl Multiply for CommAlgebra {
    fn field(&self) -> &BinaryField {
        &self.field
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn basis_product(&self, i: usize, j: usize) -> &[(u32, u32)] {
        &self.prods[i * self.dim + j]
    }
}

impl CommAlgebra {
    /// Builds the algebra from a product oracle on basis pairs. Commutativity and the unit
    /// law are checked on all basis pairs.
    pub fn new(
        field: &BinaryField,
        labels: Vec<String>,
        product: impl Fn(usize, usize) -> Vec<u32>,
        unit: Vec<u32>,
    ) -> Result<Self> {
        let dim = labels.len();
        if unit.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: unit.len(),
            });
        }
        let mut prods = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                if v.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: v.len(),
                    });
                }
                prods.push(
                    v.iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(k, &c)| (k as u32, c))
                        .collect(),
                );
            }
        }
        let a = CommAlgebra {
            field: field.clone(),
            dim,
            labels,
            prods,
            unit,
        };
        for i in 0..dim {
            for j in i + 1..dim {
                if a.prods[i * dim + j] != a.prods[j * dim + i] {
                    return Err(Error::NotCommutative(i, j));
                }
            }
        }
        for i in 0..dim {
            let e = a.basis_vector(i);
            if a.mul(&a.unit, &e) != e {
                return Err(Error::Validation(format!(
                    "unit does not fix basis element {i}"
                )));
            }
        }
        Ok(a)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    pub fn square(&self, x: &[u32]) -> Vec<u32> {
        self.mul(x, x)
    }

    /// `x^{2^k}`.
    pub fn pow2k(&self, x: &[u32], k: u32) -> Vec<u32> {
        let mut y = x.to_vec();
        for _ in 0..k {
            y = self.square(&y);
        }
        y
    }

    pub fn pow(&self, x: &[u32], mut e: u64) -> Vec<u32> {
        let mut r = self.unit.clone();
        let mut b = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            b = self.square(&b);
            e >>= 1;
        }
        r
    }

    /// `x -> x^2`, semilinear with Frobenius exponent 1.
    pub fn square_map(&self) -> SemilinearMap {
        let images = (0..self.dim)
            .map(|i| self.square(&self.basis_vector(i)))
            .collect();
        SemilinearMap::new(&self.field, images, 1)
    }

    /// The same structure constants over `F_{2^m}`. Only defined when the current field is
    /// F_2, where every constant is 0 or 1 and embeds unchanged.
    pub fn extend_scalars(&self, m: u32) -> Result<CommAlgebra> {
        if self.field.degree() != 1 {
            return Err(Error::InvalidInput(
                "scalar extension starts from F_2".into(),
            ));
        }
        Ok(CommAlgebra {
            field: BinaryField::new(m)?,
            dim: self.dim,
            labels: self.labels.clone(),
            prods: self.prods.clone(),
            unit: self.unit.clone(),
        })
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(&self.field, self.dim)
    }
}

/// `sub / ideal` for an ideal contained in a multiplicatively closed subspace, with an
/// explicit set of coset representatives.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    pub algebra: CommAlgebra,
    reps: Vec<Vec<u32>>,
    ideal: Subspace,
    sub: Subspace,
    /// span of the reduced representatives
    reduced: Subspace,
    /// rows: `reduced`-coordinates of each reduced representative, inverted
    change: Vec<Vec<u32>>,
}

impl QuotientAlgebra {
    /// `reps` defaults to the reduced echelon basis of `sub` modulo `ideal`.
    ///
    /// Fails with `NotAnIdeal` if `sub * ideal` is not inside `ideal`, and with an assertion
    /// if the representatives are not a basis modulo the ideal.
    pub fn new<A: Multiply>(
        ambient: &A,
        sub: &Subspace,
        ideal: &Subspace,
        reps: Option<(Vec<Vec<u32>>, Vec<String>)>,
    ) -> Result<Self> {
        let f = ambient.field().clone();
        let n = ambient.dim();
        if !ideal.is_subspace_of(sub) {
            return Err(Error::NotAnIdeal(
                "ideal is not contained in the subalgebra".into(),
            ));
        }
        let sub_basis = sub.basis();
        let ideal_basis = ideal.basis();
        for s in &sub_basis {
            for t in &ideal_basis {
                if !ideal.contains(&ambient.mul(s, t)) || !ideal.contains(&ambient.mul(t, s)) {
                    return Err(Error::NotAnIdeal("product leaves the ideal".into()));
                }
            }
        }
        let reduced_sub: Vec<Vec<u32>> = sub_basis.iter().map(|s| ideal.reduce(s)).collect();
        let reduced = Subspace::span(&f, n, &reduced_sub)?;
        let (reps, labels) = match reps {
            Some(r) => r,
            None => {
                let b = reduced.basis();
                let labels = (0..b.len()).map(|i| format!("r{i}")).collect();
                (b, labels)
            }
        };
        if reps.len() != reduced.dim() || labels.len() != reps.len() {
            return Err(Error::DimensionMismatch {
                expected: reduced.dim(),
                found: reps.len(),
            });
        }
        let mut rows = Vec::with_capacity(reps.len());
        for r in &reps {
            if !sub.contains(r) {
                return Err(Error::Assertion(
                    "coset representative outside the subalgebra".into(),
                ));
            }
            rows.push(
                reduced
                    .coordinates(&ideal.reduce(r))
                    .expect("reduced member"),
            );
        }
        let change = invert(&f, &rows).ok_or_else(|| {
            Error::Assertion("coset representatives are dependent modulo the ideal".into())
        })?;
        let mut q = QuotientAlgebra {
            algebra: CommAlgebra {
                field: f.clone(),
                dim: 0,
                labels: Vec::new(),
                prods: Vec::new(),
                unit: Vec::new(),
            },
            reps,
            ideal: ideal.clone(),
            sub: sub.clone(),
            reduced,
            change,
        };
        // the unit of the subalgebra: the element acting as identity on it
        let unit = Self::find_unit(ambient, sub)?;
        let unit_coords = q.project(&unit)?;
        let prod_table: Vec<Vec<Vec<u32>>> = (0..q.reps.len())
            .map(|i| {
                (0..q.reps.len())
                    .map(|j| q.project(&ambient.mul(&q.reps[i], &q.reps[j])))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        q.algebra = CommAlgebra::new(&f, labels, |i, j| prod_table[i][j].clone(), unit_coords)?;
        Ok(q)
    }

    /// Identity element of a unital subalgebra, found by solving `u * s = s` on its basis.
    fn find_unit<A: Multiply>(ambient: &A, sub: &Subspace) -> Result<Vec<u32>> {
        let f = ambient.field();
        let basis = sub.basis();
        let d = basis.len();
        if d == 0 {
            return Ok(vec![0; ambient.dim()]);
        }
        // left multiplication by each basis element, on the basis, in sub-coordinates
        let coords = |v: &[u32]| {
            sub.coordinates(v)
                .ok_or_else(|| Error::Assertion("subspace not closed under multiplication".into()))
        };
        let mut mats = Vec::with_capacity(d);
        for b in &basis {
            let m: Vec<Vec<u32>> = basis
                .iter()
                .map(|s| coords(&ambient.mul(b, s)))
                .collect::<Result<_>>()?;
            mats.push(m);
        }
        // the unit is sum c_b b with sum_b c_b (b * s_j) = s_j for every j: d^2 equations in d unknowns
        let mut eq_rows = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..d {
            for k in 0..d {
                eq_rows.push((0..d).map(|b| mats[b][j][k]).collect::<Vec<u32>>());
                rhs.push((j == k) as u32);
            }
        }
        let c = solve(f, &eq_rows, &rhs)
            .ok_or_else(|| Error::Assertion("subalgebra has no unit".into()))?;
        let mut unit = vec![0u32; ambient.dim()];
        for (b, &cb) in basis.iter().zip(&c) {
            add_into(&mut unit, &scale(f, cb, b));
        }
        Ok(unit)
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[Vec<u32>] {
        &self.reps
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    pub fn sub(&self) -> &Subspace {
        &self.sub
    }

    /// Coordinates of the coset of `v` in the representative basis.
    pub fn project(&self, v: &[u32]) -> Result<Vec<u32>> {
        if !self.sub.contains(v) {
            return Err(Error::Assertion("vector outside the subalgebra".into()));
        }
        let w = self.ideal.reduce(v);
        let c = self
            .reduced
            .coordinates(&w)
            .expect("reduced vectors lie in the reduced span");
        Ok(vec_mul(self.algebra.field(), &c, &self.change))
    }

    /// The combination of representatives with the given coordinates.
    pub fn lift(&self, coords: &[u32]) -> Vec<u32> {
        let f = self.algebra.field();
        let mut out = vec![0u32; self.sub.ambient()];
        for (r, &c) in self.reps.iter().zip(coords) {
            if c != 0 {
                add_into(&mut out, &scale(f, c, r));
            }
        }
        out
    }
}

/// Solves an overdetermined but consistent system `A c = b`; `None` if inconsistent.
fn solve(f: &BinaryField, a: &[Vec<u32>], b: &[u32]) -> Option<Vec<u32>> {
    let cols = a.first().map_or(0, |r| r.len());
    let aug: Vec<Vec<u32>> = a
        .iter()
        .zip(b)
        .map(|(r, &x)| {
            let mut r = r.clone();
            r.push(x);
            r
        })
        .collect();
    let mut m = aug;
    let mut row = 0;
    let mut pivots = Vec::new();
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, p);
        let inv = f.inv(m[row][col]).expect("nonzero pivot");
        for x in m[row].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pr = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r != row && other[col] != 0 {
                let c = other[col];
                for (x, &p) in other.iter_mut().zip(&pr) {
                    *x ^= f.mul(c, p);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if m[row..].iter().any(|r| r[cols] != 0) {
        return None;
    }
    let mut x = vec![0u32; cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// F_2[t]/(t^3): basis 1, t, t^2.
    fn truncated() -> CommAlgebra {
        let f = BinaryField::f2();
        CommAlgebra::new(
            &f,
            vec!["1".into(), "t".into(), "t2".into()],
            |i, j| {
                let mut v = vec![0; 3];
                if i + j < 3 {
                    v[i + j] = 1;
                }
                v
            },
            vec![1, 0, 0],
        )
        .unwrap()
    }

    #[test]
    fn quotient_by_socle() {
        let a = truncated();
        let f = a.field().clone();
        let whole = a.whole();
        let socle = Subspace::span(&f, 3, &[vec![0, 0, 1]]).unwrap();
        let q = QuotientAlgebra::new(&a, &whole, &socle, None).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.algebra.unit(), &[1, 0]);
        let t = q.project(&[0, 1, 0]).unwrap();
        assert_eq!(q.algebra.square(&t), vec![0, 0]);
        assert_eq!(q.lift(&t), vec![0, 1, 0]);
    }

    #[test]
    fn custom_representatives() {
        let a = truncated();
        let f = a.field().clone();
        let socle = Subspace::span(&f, 3, &[vec![0, 0, 1]]).unwrap();
        let reps = vec![vec![1, 0, 1], vec![0, 1, 1]];
        let q = QuotientAlgebra::new(
            &a,
            &a.whole(),
            &socle,
            Some((reps, vec!["u".into(), "v".into()])),
        )
        .unwrap();
        assert_eq!(q.project(&[0, 1, 0]).unwrap(), vec![0, 1]);
        assert_eq!(q.project(&[1, 1, 0]).unwrap(), vec![1, 1]);
        let bad = vec![vec![0, 0, 1], vec![0, 1, 0]];
        assert!(QuotientAlgebra::new(
            &a,
            &a.whole(),
            &socle,
            Some((bad, vec!["a".into(), "b".into()]))
        )
        .is_err());
    }

    #[test]
    fn non_ideal_is_rejected() {
        let a = truncated();
        let f = a.field().clone();
        let not_ideal = Subspace::span(&f, 3, &[vec![0, 1, 0]]).unwrap();
        assert!(matches!(
            QuotientAlgebra::new(&a, &a.whole(), &not_ideal, None),
            Err(Error::NotAnIdeal(_))
        ));
    }

    #[test]
    fn unit_of_a_corner() {
        // F_2 x F_2 with idempotents e, 1-e; the corner spanned by e has unit e
        let f = BinaryField::f2();
        let a = CommAlgebra::new(
            &f,
            vec!["e".into(), "g".into()],
            |i, j| {
                let mut v = vec![0; 2];
                if i == j {
                    v[i] = 1;
                }
                v
            },
            vec![1, 1],
        )
        .unwrap();
        let corner = Subspace::span(&f, 2, &[vec![1, 0]]).unwrap();
        let q = QuotientAlgebra::new(&a, &corner, &Subspace::zero(&f, 2), None).unwrap();
        assert_eq!(q.algebra.unit(), &[1]);
    }
}
