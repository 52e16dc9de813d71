//! Commutator space, center and the ideals `T_n`, `T_n^perp` of a symmetric algebra.

use rayon::prelude::*;

use super::table::AlgebraTable;
use crate::commalg::Multiply;
use crate::error::{ensure, Error, Result};
use crate::linalg2::{pack, semilinear_kernel_chain, Rref, SemilinearMap, Subspace};

/// Span of `[b_i, b_j]` over all basis pairs.
pub fn commutator_space(a: &AlgebraTable) -> Result<Subspace> {
    let d = a.dim();
    let field = a.field();
    let width = d * field.degree() as usize;
    let insert_commutators = |mut acc: Rref, i: usize| {
        for j in 0..i {
            let mut c = vec![0u32; d];
            for &(k, v) in a.basis_product(i, j) {
                c[k as usize] ^= v;
            }
            for &(k, v) in a.basis_product(j, i) {
                c[k as usize] ^= v;
            }
            if c.iter().any(|&x| x != 0) {
                for _ in 0..field.degree() {
                    acc.insert(pack(field, &c));
                    c = c.iter().map(|&x| field.mul(x, field.x())).collect();
                }
            }
        }
        acc
    };
    let total = (0..d)
        .into_par_iter()
        .fold(|| Rref::new(width), insert_commutators)
        .reduce(
            || Rref::new(width),
            |mut x, y| {
                for r in y.rows() {
                    x.insert(r.clone());
                }
                x
            },
        );
    Subspace::from_f2_stable(field, d, total.rows().to_vec())
}

/// `Z(A)` as the common kernel of `x -> [x, b_i]`, one basis element at a time.
pub fn center_by_commutants(a: &AlgebraTable) -> Result<Subspace> {
    let mut v = Subspace::full(a.field(), a.dim());
    for i in 0..a.dim() {
        let e = a.basis_vector(i);
        v = v.kernel_of(|x| {
            let mut c = a.mul(x, &e);
            for (s, t) in c.iter_mut().zip(a.mul(&e, x)) {
                *s ^= t;
            }
            c
        })?;
    }
    Ok(v)
}

/// `K(A)`, `Z(A)` and the `T_n` tower of a table.
#[derive(Clone, Debug)]
pub struct KuelshammerTower {
    commutator: Subspace,
    center: Subspace,
    /// coordinates not pivotal in `K(A)`; they index `A / K(A)`
    quotient_coords: Vec<usize>,
    /// `ker f^n` in quotient coordinates for `n = 1, 2, ...` until stable
    chain: Vec<Subspace>,
    gram: Vec<Vec<(u32, u32)>>,
    dim: usize,
}

impl KuelshammerTower {
    /// Computes `K(A)`, the center two ways (asserting `Z(A) = K(A)^perp`), and the kernel chain
    /// of the induced squaring map on `A / K(A)`.
    pub fn new(a: &AlgebraTable) -> Result<Self> {
        let d = a.dim();
        let field = a.field().clone();
        let commutator = commutator_space(a)?;
        let gram = a.gram_rows();
        let pairing = |u: &[u32]| {
            let mut out = vec![0u32; d];
            for (i, &ui) in u.iter().enumerate() {
                if ui != 0 {
                    for &(j, g) in &gram[i] {
                        out[j as usize] ^= field.mul(ui, g);
                    }
                }
            }
            out
        };
        let center = commutator.orthogonal_complement_by(pairing)?;
        let direct = center_by_commutants(a)?;
        ensure!(direct == center, "center ({}) differs from K(A)^perp ({})", direct.dim(), center.dim());

        let pivots = commutator.pivot_coords();
        let mut is_pivot = vec![false; d];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let quotient_coords: Vec<usize> = (0..d).filter(|&k| !is_pivot[k]).collect();
        let images: Vec<Vec<u32>> = quotient_coords
            .par_iter()
            .map(|&k| {
                let e = a.basis_vector(k);
                let r = commutator.reduce(&a.mul(&e, &e));
                quotient_coords.iter().map(|&t| r[t]).collect()
            })
            .collect();
        let chain = if quotient_coords.is_empty() {
            Vec::new()
        } else {
            semilinear_kernel_chain(&SemilinearMap::new(&field, images, 1))?
        };
        Ok(KuelshammerTower { commutator, center, quotient_coords, chain, gram, dim: d })
    }

    pub fn commutator(&self) -> &Subspace {
        &self.commutator
    }

    pub fn center(&self) -> &Subspace {
        &self.center
    }

    /// Smallest `n` with `T_n = T_{n+1}`.
    pub fn stable_depth(&self) -> usize {
        self.chain.len()
    }

    fn lift(&self, n: u32) -> Result<Subspace> {
        let field = self.commutator.field();
        if n == 0 || self.chain.is_empty() {
            return Ok(Subspace::zero(field, self.dim));
        }
        let kernel = &self.chain[(n as usize).min(self.chain.len()) - 1];
        let lifted: Vec<Vec<u32>> = kernel
            .basis()
            .into_iter()
            .map(|v| {
                let mut out = vec![0u32; self.dim];
                for (&k, c) in self.quotient_coords.iter().zip(v) {
                    out[k] = c;
                }
                out
            })
            .collect();
        Subspace::span(field, self.dim, &lifted)
    }

    /// `T_n(A) = {x : x^{2^n} in K(A)}`.
    pub fn tn(&self, n: u32) -> Result<Subspace> {
        self.commutator.sum(&self.lift(n)?)
    }

    /// `T_n(A)^perp`, computed inside `Z(A) = K(A)^perp` as the annihilator of the lifted
    /// kernel of the `n`-th power of the squaring map.
    pub fn tn_perp(&self, n: u32) -> Result<Subspace> {
        let field = self.commutator.field().clone();
        let lift = self.lift(n)?.basis();
        let zb = self.center.basis();
        let pair = |z: &[u32], l: &[u32]| -> u32 {
            let mut acc = 0;
            for (i, &zi) in z.iter().enumerate() {
                if zi != 0 {
                    for &(j, g) in &self.gram[i] {
                        acc ^= field.mul(zi, field.mul(g, l[j as usize]));
                    }
                }
            }
            acc
        };
        let matrix: Vec<Vec<u32>> = zb.iter().map(|z| lift.iter().map(|l| pair(z, l)).collect()).collect();
        let coeffs = Subspace::full(&field, zb.len()).kernel_of(|c| {
            let mut out = vec![0u32; lift.len()];
            for (row, &ca) in matrix.iter().zip(c) {
                if ca != 0 {
                    for (o, &m) in out.iter_mut().zip(row) {
                        *o ^= field.mul(ca, m);
                    }
                }
            }
            out
        })?;
        let vectors: Vec<Vec<u32>> = coeffs
            .basis()
            .into_iter()
            .map(|c| {
                let mut v = vec![0u32; self.dim];
                for (z, &ca) in zb.iter().zip(&c) {
                    for (o, &x) in v.iter_mut().zip(z) {
                        *o ^= field.mul(ca, x);
                    }
                }
                v
            })
            .collect();
        let perp = Subspace::span(&field, self.dim, &vectors)?;
        let tn_dim = self.commutator.dim() + lift.len();
        if perp.dim() + tn_dim != self.dim {
            return Err(Error::DegenerateForm { rank: self.dim - perp.dim(), dim: tn_dim });
        }
        Ok(perp)
    }
}

/// `T_n(A)`.
pub fn tn_space(a: &AlgebraTable, n: u32) -> Result<Subspace> {
    KuelshammerTower::new(a)?.tn(n)
}

/// `T_n(A)^perp`.
pub fn tn_perp(a: &AlgebraTable, n: u32) -> Result<Subspace> {
    KuelshammerTower::new(a)?.tn_perp(n)
}

/// `Z(A)`, computed as commutant and as `K(A)^perp`; the two must agree.
pub fn center(a: &AlgebraTable) -> Result<Subspace> {
    Ok(KuelshammerTower::new(a)?.center.clone())
}
