use rayon::prelude::*;

use super::bitvec::{kernel_of_images, BitVec};
use super::subspace::{pack, Subspace};
use crate::error::Result;
use crate::ffield::BinaryField;

/// `v -> sum_i Frob^e(v_i) * images[i]` on `F_{2^m}^n`.
#[derive(Clone, Debug)]
pub struct SemilinearMap {
    field: BinaryField,
    ambient: usize,
    images: Vec<Vec<u32>>,
    frob: u32,
}

impl SemilinearMap {
    pub fn new(field: &BinaryField, images: Vec<Vec<u32>>, frob: u32) -> Self {
        let ambient = images.len();
        assert!(
            images.iter().all(|v| v.len() == ambient),
            "images must be square"
        );
        SemilinearMap {
            field: field.clone(),
            ambient,
            images,
            frob,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; self.ambient];
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let c = self.field.frob(c, self.frob);
            for (o, &a) in out.iter_mut().zip(&self.images[i]) {
                *o ^= self.field.mul(c, a);
            }
        }
        out
    }

    /// Restriction of scalars: the F_2 matrix acting on `n*m` bits.
    pub fn to_f2(&self) -> F2Map {
        let m = self.field.degree() as usize;
        let mut cols = Vec::with_capacity(self.ambient * m);
        for i in 0..self.ambient {
            for b in 0..m {
                let c = self.field.frob(1 << b, self.frob);
                let img: Vec<u32> = self.images[i]
                    .iter()
                    .map(|&a| self.field.mul(c, a))
                    .collect();
                cols.push(pack(&self.field, &img));
            }
        }
        F2Map {
            width: self.ambient * m,
            cols,
        }
    }
}

/// An F_2-linear map `F_2^n -> F_2^width` given by the images of the unit vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Map {
    width: usize,
    cols: Vec<BitVec>,
}

impl F2Map {
    pub fn from_columns(width: usize, cols: Vec<BitVec>) -> Self {
        assert!(cols.iter().all(|c| c.len() == width));
        F2Map { width, cols }
    }

    pub fn identity(n: usize) -> Self {
        F2Map {
            width: n,
            cols: (0..n).map(|i| BitVec::unit(n, i)).collect(),
        }
    }

    pub fn domain(&self) -> usize {
        self.cols.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn columns(&self) -> &[BitVec] {
        &self.cols
    }

    pub fn apply(&self, v: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.width);
        for i in v.iter_ones() {
            out.xor_assign(&self.cols[i]);
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &F2Map) -> F2Map {
        assert_eq!(other.width, self.domain());
        F2Map {
            width: self.width,
            cols: other.cols.par_iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn kernel(&self) -> Vec<BitVec> {
        kernel_of_images(&self.cols, self.width)
    }

    pub fn rank(&self) -> usize {
        self.domain() - self.kernel().len()
    }
}

/// `ker f ⊆ ker f^2 ⊆ ...`, stopping once the chain is stable. The repeated final kernel
/// is not included, so `f = 0` gives `[ambient]` and an injective `f` gives `[0]`.
pub fn semilinear_kernel_chain(f: &SemilinearMap) -> Result<Vec<Subspace>> {
    let base = f.to_f2();
    let n = f.ambient();
    let full_rank = base.domain();
    let mut chain: Vec<Subspace> = Vec::new();
    let mut power = base.clone();
    loop {
        let k = Subspace::from_f2_stable(&f.field, n, power.kernel())?;
        if let Some(last) = chain.last() {
            if last.f2_rank() == k.f2_rank() {
                break;
            }
        }
        let done = k.f2_rank() == full_rank;
        chain.push(k);
        if done {
            break;
        }
        power = base.compose(&power);
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_examples() {
        let f2 = BinaryField::f2();
        let zero = SemilinearMap::new(&f2, vec![vec![0; 3]; 3], 1);
        let c = semilinear_kernel_chain(&zero).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].dim(), 3);

        let id = SemilinearMap::new(&f2, vec![vec![1, 0], vec![0, 1]], 1);
        let c = semilinear_kernel_chain(&id).unwrap();
        assert_eq!(c.iter().map(|s| s.dim()).collect::<Vec<_>>(), vec![0]);

        let jordan = SemilinearMap::new(&f2, vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0]], 1);
        let c = semilinear_kernel_chain(&jordan).unwrap();
        assert_eq!(c.iter().map(|s| s.dim()).collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn frobenius_twist_over_f4() {
        let f4 = BinaryField::new(2).unwrap();
        // e0 -> 0, e1 -> e0 twisted by squaring
        let map = SemilinearMap::new(&f4, vec![vec![0, 0], vec![1, 0]], 1);
        let w = f4.x();
        assert_eq!(map.apply(&[0, w]), vec![f4.square(w), 0]);
        let c = semilinear_kernel_chain(&map).unwrap();
        assert_eq!(c.iter().map(|s| s.dim()).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(
            map.to_f2().apply(&pack(&f4, &[0, w])),
            pack(&f4, &[f4.square(w), 0])
        );
    }
}
