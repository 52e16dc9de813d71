use std::fmt;

use super::bitvec::{BitVec, Rref};
use crate::error::{Error, Result};
use crate::ffield::BinaryField;

/// Packs a coordinate vector over `F_{2^m}` into `n*m` bits, coordinate `i` occupying bits
/// `i*m..(i+1)*m`.
pub fn pack(field: &BinaryField, v: &[u32]) -> BitVec {
    let m = field.degree() as usize;
    let mut out = BitVec::zeros(v.len() * m);
    for (i, &c) in v.iter().enumerate() {
        if c != 0 {
            out.xor_chunk(i * m, m, c);
        }
    }
    out
}

pub fn unpack(field: &BinaryField, bits: &BitVec) -> Vec<u32> {
    let m = field.degree() as usize;
    (0..bits.len() / m)
        .map(|i| bits.get_chunk(i * m, m))
        .collect()
}

pub fn scale(field: &BinaryField, c: u32, v: &[u32]) -> Vec<u32> {
    v.iter().map(|&x| field.mul(c, x)).collect()
}

pub fn add_into(acc: &mut [u32], v: &[u32]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a ^= b;
    }
}

/// An `F_{2^m}`-subspace of `F_{2^m}^n`, stored as the F_2-row-reduced form of its
/// restriction of scalars.
///
/// Because the subspace is `F_{2^m}`-stable, its F_2 pivots come in whole coordinate
/// blocks. The rows whose pivot opens a block form the `F_{2^m}`-reduced echelon basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    field: BinaryField,
    ambient: usize,
    rref: Rref,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subspace")
            .field("m", &self.field.degree())
            .field("ambient", &self.ambient)
            .field("basis", &self.basis())
            .finish()
    }
}

impl Subspace {
    pub fn zero(field: &BinaryField, ambient: usize) -> Self {
        Subspace {
            field: field.clone(),
            ambient,
            rref: Rref::new(ambient * field.degree() as usize),
        }
    }

    pub fn full(field: &BinaryField, ambient: usize) -> Self {
        let mut s = Self::zero(field, ambient);
        for i in 0..ambient {
            let mut e = vec![0u32; ambient];
            e[i] = 1;
            s.add_vector(&e);
        }
        s
    }

    /// Row-reduces the `F_{2^m}`-span of `vectors`.
    pub fn span<V: AsRef<[u32]>>(
        field: &BinaryField,
        ambient: usize,
        vectors: &[V],
    ) -> Result<Self> {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            let v = v.as_ref();
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            s.add_vector(v);
        }
        Ok(s)
    }

    /// Wraps an F_2-spanning set that is claimed to be `F_{2^m}`-stable; the claim is checked.
    pub fn from_f2_stable(field: &BinaryField, ambient: usize, rows: Vec<BitVec>) -> Result<Self> {
        let width = ambient * field.degree() as usize;
        let rref = Rref::from_rows(width, rows);
        let s = Subspace {
            field: field.clone(),
            ambient,
            rref,
        };
        if field.degree() > 1 {
            let x = field.x();
            for row in s.rref.rows() {
                let v = unpack(field, row);
                if !s.rref.contains(&pack(field, &scale(field, x, &v))) {
                    return Err(Error::Assertion(
                        "F_2 subspace is not stable under the field".into(),
                    ));
                }
            }
        }
        Ok(s)
    }

    /// Adds `v` and its multiples by `x^t` for `t < m`.
    pub fn add_vector(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut grew = false;
        let x = self.field.x();
        let mut w = v.to_vec();
        for t in 0..self.field.degree() {
            if t > 0 {
                w = scale(&self.field, x, &w);
            }
            grew |= self.rref.insert(pack(&self.field, &w));
        }
        grew
    }

    pub fn field(&self) -> &BinaryField {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn f2_rank(&self) -> usize {
        self.rref.rank()
    }

    pub fn f2_rows(&self) -> &[BitVec] {
        self.rref.rows()
    }

    pub fn rref(&self) -> &Rref {
        &self.rref
    }

    pub fn dim(&self) -> usize {
        let m = self.field.degree() as usize;
        debug_assert_eq!(self.rref.rank() % m, 0);
        self.rref.rank() / m
    }

    pub fn is_zero(&self) -> bool {
        self.rref.rank() == 0
    }

    /// Reduced echelon basis over `F_{2^m}`, ordered by pivot coordinate.
    pub fn basis(&self) -> Vec<Vec<u32>> {
        let m = self.field.degree() as usize;
        self.rref
            .rows()
            .iter()
            .zip(self.rref.pivots())
            .filter(|(_, &p)| p % m == 0)
            .map(|(row, _)| unpack(&self.field, row))
            .collect()
    }

    /// Pivot coordinates of [`Self::basis`].
    pub fn pivot_coords(&self) -> Vec<usize> {
        let m = self.field.degree() as usize;
        self.rref
            .pivots()
            .iter()
            .filter(|&&p| p % m == 0)
            .map(|&p| p / m)
            .collect()
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        v.len() == self.ambient && self.rref.contains(&pack(&self.field, v))
    }

    /// Normal form of `v` modulo the subspace: zero at every pivot coordinate.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let mut b = pack(&self.field, v);
        self.rref.reduce(&mut b);
        unpack(&self.field, &b)
    }

    /// Coefficients of `v` in [`Self::basis`], or `None` if `v` is not a member.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivot_coords().iter().map(|&c| v[c]).collect())
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        if self.field != other.field {
            return Err(Error::DimensionMismatch {
                expected: self.field.degree() as usize,
                found: other.field.degree() as usize,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for row in other.rref.rows() {
            out.rref.insert(row.clone());
        }
        Ok(out)
    }

    /// Zassenhaus: reduce rows `(u|u)` and `(v|0)`; rows with zero left half span the
    /// intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let w = self.rref.width();
        let mut z = Rref::new(2 * w);
        for u in self.rref.rows() {
            z.insert(u.concat(u));
        }
        for v in other.rref.rows() {
            z.insert(v.concat(&BitVec::zeros(w)));
        }
        let rows: Vec<BitVec> = z
            .rows()
            .iter()
            .zip(z.pivots())
            .filter(|(_, &p)| p >= w)
            .map(|(r, _)| r.slice(w, w))
            .collect();
        Subspace::from_f2_stable(&self.field, self.ambient, rows)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.rref.rows().iter().all(|r| other.rref.contains(r))
    }

    /// Orthogonal complement for the form `(u, y) = sum_j a_j y_j` where `a = pairing(u)`.
    ///
    /// Each scalar equation over `F_{2^m}` is expanded into `m` F_2 equations through the
    /// nondegenerate trace form.
    pub fn orthogonal_complement_by(
        &self,
        pairing: impl Fn(&[u32]) -> Vec<u32>,
    ) -> Result<Subspace> {
        let f = &self.field;
        let m = f.degree() as usize;
        let n = self.ambient;
        let xpow: Vec<u32> = (0..2 * m).map(|s| f.pow(f.x(), s as u64)).collect();
        let mut eqs = Rref::new(n * m);
        for u in self.basis() {
            let a = pairing(&u);
            if a.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: a.len(),
                });
            }
            // tr[j][s] = Tr(a_j x^s)
            let tr: Vec<Vec<u32>> = a
                .iter()
                .map(|&aj| xpow.iter().map(|&xs| f.trace(f.mul(aj, xs))).collect())
                .collect();
            for t in 0..m {
                let mut row = BitVec::zeros(n * m);
                for (j, trj) in tr.iter().enumerate() {
                    if a[j] == 0 {
                        continue;
                    }
                    for b in 0..m {
                        if trj[t + b] == 1 {
                            row.set(j * m + b, true);
                        }
                    }
                }
                eqs.insert(row);
            }
        }
        let perp = Subspace::from_f2_stable(f, n, eqs.null_space())?;
        if perp.dim() + self.dim() != n {
            return Err(Error::DegenerateForm {
                rank: n - perp.dim(),
                dim: self.dim(),
            });
        }
        Ok(perp)
    }

    /// Orthogonal complement for a Gram matrix `G`, the form being `u^T G y`.
    pub fn orthogonal_complement(&self, gram: &[Vec<u32>]) -> Result<Subspace> {
        let n = self.ambient;
        if gram.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: gram.len(),
            });
        }
        let f = self.field.clone();
        self.orthogonal_complement_by(|u| {
            let mut a = vec![0u32; n];
            for (i, &ui) in u.iter().enumerate() {
                if ui != 0 {
                    add_into(&mut a, &scale(&f, ui, &gram[i]));
                }
            }
            a
        })
    }

    /// Image under an additive map, spanned over `F_{2^m}` from the images of the
    /// `F_{2^m}`-basis. Only meaningful for `F_{2^m}`-linear maps.
    pub fn image(&self, map: impl Fn(&[u32]) -> Vec<u32>, target: usize) -> Result<Subspace> {
        let imgs: Vec<Vec<u32>> = self.basis().iter().map(|v| map(v)).collect();
        Subspace::span(&self.field, target, &imgs)
    }

    /// Kernel of an additive map restricted to this subspace. The map only needs to be
    /// F_2-linear; for it to be `F_{2^m}`-stable (which is checked) it must be semilinear.
    pub fn kernel_of(&self, map: impl Fn(&[u32]) -> Vec<u32>) -> Result<Subspace> {
        let rows = self.rref.rows();
        let imgs: Vec<BitVec> = rows
            .iter()
            .map(|r| pack(&self.field, &map(&unpack(&self.field, r))))
            .collect();
        let width = imgs.first().map_or(0, |b| b.len());
        if imgs.iter().any(|b| b.len() != width) {
            return Err(Error::Assertion(
                "map images have inconsistent length".into(),
            ));
        }
        let combos = super::bitvec::kernel_of_images(&imgs, width);
        let kernel_rows = combos
            .into_iter()
            .map(|c| {
                let mut acc = BitVec::zeros(self.rref.width());
                for i in c.iter_ones() {
                    acc.xor_assign(&rows[i]);
                }
                acc
            })
            .collect();
        Subspace::from_f2_stable(&self.field, self.ambient, kernel_rows)
    }
}
