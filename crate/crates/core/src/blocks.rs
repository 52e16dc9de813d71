//! Nilradicals, radical powers and the block decomposition of a commutative center.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classalgebra::CenterAlgebra;
use crate::commalg::{CommAlgebra, Multiply, QuotientAlgebra};
use crate::error::{ensure, Error, Result};
use crate::ffield::BinaryField;
use crate::linalg2::{semilinear_kernel_chain, unpack, F2Map, SemilinearMap, Subspace};

/// Largest coefficient field degree tried when splitting.
pub const MAX_SPLITTING_DEGREE: u32 = 32;

fn check_commutative<A: Multiply>(a: &A) -> Result<()> {
    for i in 0..a.dim() {
        for j in 0..i {
            if a.basis_product(i, j) != a.basis_product(j, i) {
                return Err(Error::NotCommutative(i, j));
            }
        }
    }
    Ok(())
}

/// Nilpotent elements of a commutative algebra: the stable kernel of the Frobenius-semilinear
/// squaring map.
pub fn nilradical<A: Multiply>(a: &A) -> Result<Subspace> {
    check_commutative(a)?;
    let field = a.field();
    if a.dim() == 0 {
        return Ok(Subspace::zero(field, 0));
    }
    let images = (0..a.dim()).map(|i| a.mul(&a.basis_vector(i), &a.basis_vector(i))).collect();
    let chain = semilinear_kernel_chain(&SemilinearMap::new(field, images, 1))?;
    Ok(chain.last().cloned().unwrap_or_else(|| Subspace::zero(field, a.dim())))
}

/// `J^k`: span of `k`-fold products of elements of `j`.
pub fn radical_power<A: Multiply>(a: &A, j: &Subspace, k: u32) -> Result<Subspace> {
    let field = a.field();
    if k == 0 {
        return Ok(Subspace::full(field, a.dim()));
    }
    let jb = j.basis();
    let mut current = j.clone();
    for _ in 1..k {
        let cb = current.basis();
        let prods: Vec<Vec<u32>> = cb.par_iter().flat_map_iter(|x| jb.iter().map(|y| a.mul(x, y))).collect();
        current = Subspace::span(field, a.dim(), &prods)?;
    }
    Ok(current)
}

/// `J, J^2, J^3, ...` up to the last nonzero power.
#[derive(Clone, Debug)]
pub struct RadicalChain {
    pub powers: Vec<Subspace>,
}

impl RadicalChain {
    /// Computes the chain and checks that `J` consists of nilpotents and that squaring is
    /// injective on `A / J`.
    pub fn new<A: Multiply>(a: &A) -> Result<Self> {
        let field = a.field();
        let j = nilradical(a)?;
        let d = a.dim();
        let k = usize::BITS - d.leading_zeros();
        for v in j.basis() {
            let mut y = v;
            for _ in 0..k {
                y = a.mul(&y, &y);
            }
            ensure!(y.iter().all(|&c| c == 0), "radical element is not nilpotent");
        }
        let pivots = j.pivot_coords();
        let mut span = j.clone();
        for i in (0..d).filter(|i| !pivots.contains(i)) {
            let e = a.basis_vector(i);
            span.add_vector(&a.mul(&e, &e));
        }
        ensure!(span.dim() == d, "squaring is not injective modulo the radical");

        let mut powers = Vec::new();
        let mut current = j.clone();
        while !current.is_zero() {
            let jb = j.basis();
            let prods: Vec<Vec<u32>> =
                current.basis().iter().flat_map(|x| jb.iter().map(|y| a.mul(x, y))).collect();
            let next = Subspace::span(field, d, &prods)?;
            ensure!(next.dim() < current.dim(), "radical powers do not decrease");
            powers.push(current);
            current = next;
        }
        Ok(RadicalChain { powers })
    }

    pub fn dims(&self) -> Vec<usize> {
        self.powers.iter().map(Subspace::dim).collect()
    }

    pub fn radical_dim(&self) -> usize {
        self.powers.first().map_or(0, Subspace::dim)
    }

    pub fn square_dim(&self) -> usize {
        self.powers.get(1).map_or(0, Subspace::dim)
    }
}

/// The six layer dimensions recorded per block and for the whole center.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantDims {
    pub center: usize,
    pub t1perp: usize,
    pub zbar: usize,
    pub radical: usize,
    pub radical_sq: usize,
    pub radical_quot: usize,
}

impl InvariantDims {
    fn add(self, o: InvariantDims) -> InvariantDims {
        InvariantDims {
            center: self.center + o.center,
            t1perp: self.t1perp + o.t1perp,
            zbar: self.zbar + o.zbar,
            radical: self.radical + o.radical,
            radical_sq: self.radical_sq + o.radical_sq,
            radical_quot: self.radical_quot + o.radical_quot,
        }
    }
}

/// Dims of `Z`, `T`, `Z/T`, `J(Z/T)`, `J^2(Z/T)`, `J/J^2` for a subalgebra `sub` of `a` with ideal
/// `t`.
pub fn layer_dims<A: Multiply>(a: &A, sub: &Subspace, t: &Subspace) -> Result<InvariantDims> {
    let zbar = QuotientAlgebra::new(a, sub, t, None)?;
    let chain = RadicalChain::new(&zbar.algebra)?;
    Ok(InvariantDims {
        center: sub.dim(),
        t1perp: t.dim(),
        zbar: zbar.dim(),
        radical: chain.radical_dim(),
        radical_sq: chain.square_dim(),
        radical_quot: chain.radical_dim() - chain.square_dim(),
    })
}

/// Primitive central idempotents over `F_{2^m}`, in the coordinates of the center.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub field_degree: u32,
    pub idempotents: Vec<Vec<u32>>,
}

/// Atoms of the Boolean algebra of idempotents of a semisimple commutative algebra.
fn idempotent_atoms(a: &CommAlgebra) -> Result<Vec<Vec<u32>>> {
    let field = a.field();
    let sq = a.square_map().to_f2();
    let width = sq.width();
    let cols: Vec<_> = sq
        .columns()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut c = c.clone();
            c.flip(i);
            c
        })
        .collect();
    let fixed: Vec<Vec<u32>> = F2Map::from_columns(width, cols).kernel().iter().map(|b| unpack(field, b)).collect();
    let mut atoms = vec![a.unit().to_vec()];
    for f in &fixed {
        let mut next = Vec::with_capacity(atoms.len() + 1);
        for atom in &atoms {
            let x = a.mul(atom, f);
            let y: Vec<u32> = atom.iter().zip(&x).map(|(p, q)| p ^ q).collect();
            for part in [x, y] {
                if part.iter().any(|&c| c != 0) {
                    next.push(part);
                }
            }
        }
        atoms = next;
    }
    ensure!(atoms.len() == fixed.len(), "{} atoms for {} independent idempotents", atoms.len(), fixed.len());
    Ok(atoms)
}

fn ideal_dim(a: &CommAlgebra, e: &[u32]) -> Result<usize> {
    let prods: Vec<Vec<u32>> = (0..a.dim()).map(|k| a.mul(e, &a.basis_vector(k))).collect();
    Ok(Subspace::span(a.field(), a.dim(), &prods)?.dim())
}

fn lcm(a: u32, b: u32) -> u32 {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

fn lift_subspace(sub: &Subspace, field: &BinaryField) -> Result<Subspace> {
    Subspace::span(field, sub.ambient(), &sub.basis())
}

/// Primitive idempotents of a commutative algebra over F_2. The semisimple quotient `A/J` is
/// split over F_2 into fields `F_{2^d}`; scalars are extended to `F_{2^m}` with `m` the lcm of
/// the `d` (doubled if that does not split), and the split idempotents are lifted through `J` by
/// squaring until stable.
pub fn primitive_idempotents(a: &CommAlgebra) -> Result<BlockDecomposition> {
    primitive_idempotents_with_min_degree(a, 1)
}

/// As [`primitive_idempotents`], but splits over a field of degree divisible by `min_degree`.
pub fn primitive_idempotents_with_min_degree(a: &CommAlgebra, min_degree: u32) -> Result<BlockDecomposition> {
    ensure!(a.field().degree() == 1, "splitting starts over F_2");
    if min_degree == 0 {
        return Err(Error::InvalidInput("field degree must be positive".into()));
    }
    let j = nilradical(a)?;
    let semisimple = QuotientAlgebra::new(a, &a.whole(), &j, None)?;
    let atoms = idempotent_atoms(&semisimple.algebra)?;
    let mut m = min_degree;
    for atom in &atoms {
        m = lcm(m, ideal_dim(&semisimple.algebra, atom)? as u32);
    }
    loop {
        if m > MAX_SPLITTING_DEGREE {
            return Err(Error::SplittingFailure(MAX_SPLITTING_DEGREE));
        }
        let am = a.extend_scalars(m)?;
        let field = am.field().clone();
        let jm = lift_subspace(&j, &field)?;
        let qm = QuotientAlgebra::new(&am, &am.whole(), &jm, None)?;
        let atoms_m = idempotent_atoms(&qm.algebra)?;
        if atoms_m.len() != qm.dim() {
            m *= 2;
            continue;
        }
        let mut idempotents = Vec::with_capacity(atoms_m.len());
        for atom in &atoms_m {
            let mut x = qm.lift(atom);
            let mut steps = 0;
            loop {
                let y = am.square(&x);
                if y == x {
                    break;
                }
                x = y;
                steps += 1;
                ensure!(steps <= am.dim() + 1, "idempotent lift does not stabilize");
            }
            idempotents.push(x);
        }
        idempotents.sort();
        verify_idempotents(&am, &jm, &idempotents)?;
        return Ok(BlockDecomposition { field_degree: m, idempotents });
    }
}

/// `e^2 = e`, `e_i e_j = 0`, `sum e_i = 1`, and `eA / eJ` one-dimensional.
fn verify_idempotents(a: &CommAlgebra, j: &Subspace, es: &[Vec<u32>]) -> Result<()> {
    let mut total = vec![0u32; a.dim()];
    for (i, e) in es.iter().enumerate() {
        ensure!(a.square(e) == *e, "block idempotent {i} is not idempotent");
        for (k, f) in es.iter().enumerate().skip(i + 1) {
            ensure!(a.mul(e, f).iter().all(|&c| c == 0), "idempotents {i} and {k} are not orthogonal");
        }
        for (t, c) in total.iter_mut().zip(e) {
            *t ^= c;
        }
        let ej: Vec<Vec<u32>> = j.basis().iter().map(|v| a.mul(e, v)).collect();
        let ej = Subspace::span(a.field(), a.dim(), &ej)?;
        ensure!(ideal_dim(a, e)? == ej.dim() + 1, "block idempotent {i} is not primitive");
    }
    ensure!(total == a.unit(), "block idempotents do not sum to 1");
    Ok(())
}

/// Block idempotents of `Z(kG)` in class-sum coordinates.
pub fn block_idempotents(z: &CenterAlgebra) -> Result<BlockDecomposition> {
    primitive_idempotents(z.algebra())
}

/// The unique block whose idempotent has augmentation 1.
pub fn principal_block(z: &CenterAlgebra, d: &BlockDecomposition) -> Result<usize> {
    let hits: Vec<usize> = (0..d.idempotents.len()).filter(|&i| z.augmentation(&d.idempotents[i]) == 1).collect();
    match hits.as_slice() {
        [b] => Ok(*b),
        _ => Err(Error::Assertion(format!("{} blocks have augmentation 1", hits.len()))),
    }
}

/// Whole-center layer dims and the same dims block by block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockLedger {
    pub field_degree: u32,
    pub whole: InvariantDims,
    pub blocks: Vec<InvariantDims>,
    pub principal: usize,
}

/// Computes the layer dims inside each block `eZ` with `T(B) = e T`, checks `e T` lies in `T`,
/// and checks that the block rows add up to the whole-center row.
pub fn block_ledger(z: &CenterAlgebra, d: &BlockDecomposition, t1perp: &Subspace) -> Result<BlockLedger> {
    let a = z.algebra();
    let whole = layer_dims(a, &a.whole(), t1perp)?;
    let am = a.extend_scalars(d.field_degree)?;
    let field = am.field().clone();
    let tm = lift_subspace(t1perp, &field)?;
    let tb = tm.basis();
    let blocks: Vec<InvariantDims> = d
        .idempotents
        .par_iter()
        .map(|e| {
            let zb: Vec<Vec<u32>> = (0..am.dim()).map(|k| am.mul(e, &am.basis_vector(k))).collect();
            let zb = Subspace::span(&field, am.dim(), &zb)?;
            let eb: Vec<Vec<u32>> = tb.iter().map(|t| am.mul(e, t)).collect();
            let eb = Subspace::span(&field, am.dim(), &eb)?;
            ensure!(eb.is_subspace_of(&tm), "e T is not inside T");
            layer_dims(&am, &zb, &eb)
        })
        .collect::<Result<_>>()?;
    let total = blocks.iter().fold(InvariantDims::default(), |acc, b| acc.add(*b));
    ensure!(total == whole, "block ledger {total:?} does not add up to {whole:?}");
    let principal = principal_block(z, d)?;
    Ok(BlockLedger { field_degree: d.field_degree, whole, blocks, principal })
}
