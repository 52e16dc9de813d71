//! Structure-constant tables with a symmetrizing functional.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::commalg::Multiply;
use crate::error::{Error, Result};
use crate::ffield::BinaryField;
use crate::linalg2::Subspace;

/// Tables up to this dimension get the full associativity sweep.
pub const EXHAUSTIVE_VALIDATION_DIM: usize = 200;
/// Number of random triples checked above [`EXHAUSTIVE_VALIDATION_DIM`].
pub const SAMPLED_TRIPLES: usize = 100_000;
pub const VALIDATION_SEED: u64 = 0xa55c;

/// A finite-dimensional algebra over `F_{2^m}` with unit and a linear functional `lambda`
/// defining the form `(a, b) = lambda(ab)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraTable {
    field: BinaryField,
    dim: usize,
    labels: Vec<String>,
    unit: Vec<u32>,
    /// `offsets[i * dim + j]..offsets[i * dim + j + 1]` indexes `entries` for `b_i b_j`
    offsets: Vec<u32>,
    entries: Vec<(u32, u32)>,
    form: Vec<u32>,
}

impl Multiply for AlgebraTable {
    fn field(&self) -> &BinaryField {
        &self.field
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn basis_product(&self, i: usize, j: usize) -> &[(u32, u32)] {
        let p = i * self.dim + j;
        &self.entries[self.offsets[p] as usize..self.offsets[p + 1] as usize]
    }
}

/// Outcome of [`AlgebraTable::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub dim: usize,
    pub triples_checked: usize,
    pub exhaustive: bool,
    pub gram_rank: usize,
    /// Basis labels on which the functional is nonzero.
    pub form_support: Vec<String>,
}

fn merge(mut terms: Vec<(u32, u32)>) -> Vec<(u32, u32)> {
    terms.sort_unstable_by_key(|t| t.0);
    let mut out: Vec<(u32, u32)> = Vec::with_capacity(terms.len());
    for (k, c) in terms {
        match out.last_mut() {
            Some(last) if last.0 == k => last.1 ^= c,
            _ => out.push((k, c)),
        }
        if out.last().is_some_and(|t| t.1 == 0) {
            out.pop();
        }
    }
    out
}

impl AlgebraTable {
    /// Builds a table from `(i, j, k, coefficient)` quadruples. Zero coefficients are dropped;
    /// a repeated `(i, j, k)` is rejected.
    pub fn new(
        field: &BinaryField,
        labels: Vec<String>,
        unit: Vec<u32>,
        mut products: Vec<(u32, u32, u32, u32)>,
        form: Vec<u32>,
    ) -> Result<Self> {
        let dim = labels.len();
        if unit.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: unit.len() });
        }
        if form.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: form.len() });
        }
        if dim.checked_mul(dim).is_none_or(|d2| d2 >= u32::MAX as usize) {
            return Err(Error::ResourceLimit(format!("dimension {dim} too large")));
        }
        let order = field.order();
        let in_field = |c: u32| (c as u64) < order;
        if !unit.iter().chain(&form).all(|&c| in_field(c)) {
            return Err(Error::InvalidInput("coefficient outside the field".into()));
        }
        products.retain(|p| p.3 != 0);
        products.sort_unstable();
        for w in products.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 == w[1].1 && w[0].2 == w[1].2 {
                return Err(Error::InvalidInput(format!("repeated product entry ({}, {}, {})", w[0].0, w[0].1, w[0].2)));
            }
        }
        let mut offsets = vec![0u32; dim * dim + 1];
        let mut entries = Vec::with_capacity(products.len());
        for &(i, j, k, c) in &products {
            let (i, j, k) = (i as usize, j as usize, k as usize);
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidInput(format!("product index ({i}, {j}, {k}) out of range")));
            }
            if !in_field(c) {
                return Err(Error::InvalidInput("coefficient outside the field".into()));
            }
            offsets[i * dim + j + 1] += 1;
            entries.push((k as u32, c));
        }
        for p in 0..dim * dim {
            offsets[p + 1] += offsets[p];
        }
        Ok(AlgebraTable { field: field.clone(), dim, labels, unit, offsets, entries, form })
    }

    /// Builds a table from a product oracle on basis pairs.
    pub fn from_fn(
        field: &BinaryField,
        labels: Vec<String>,
        unit: Vec<u32>,
        product: impl Fn(usize, usize) -> Vec<(u32, u32)> + Sync,
        form: Vec<u32>,
    ) -> Result<Self> {
        let dim = labels.len();
        let products: Vec<(u32, u32, u32, u32)> = (0..dim * dim)
            .into_par_iter()
            .flat_map_iter(|p| {
                let (i, j) = (p / dim, p % dim);
                merge(product(i, j)).into_iter().map(move |(k, c)| (i as u32, j as u32, k, c))
            })
            .collect();
        Self::new(field, labels, unit, products, form)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    pub fn form(&self) -> &[u32] {
        &self.form
    }

    /// All nonzero `(i, j, k, coefficient)`, sorted.
    pub fn products(&self) -> Vec<(u32, u32, u32, u32)> {
        let d = self.dim;
        (0..d * d)
            .flat_map(|p| {
                self.basis_product(p / d, p % d).iter().map(move |&(k, c)| ((p / d) as u32, (p % d) as u32, k, c))
            })
            .collect()
    }

    /// `lambda(v)`.
    pub fn lambda(&self, v: &[u32]) -> u32 {
        v.iter().zip(&self.form).fold(0, |acc, (&a, &l)| acc ^ self.field.mul(a, l))
    }

    fn lambda_sparse(&self, v: &[(u32, u32)]) -> u32 {
        v.iter().fold(0, |acc, &(k, c)| acc ^ self.field.mul(c, self.form[k as usize]))
    }

    /// `(sum_l c_l b_l) * b_k` for a sparse left factor.
    fn sparse_mul_right(&self, left: &[(u32, u32)], k: usize) -> Vec<(u32, u32)> {
        let f = &self.field;
        let terms = left
            .iter()
            .flat_map(|&(l, c)| self.basis_product(l as usize, k).iter().map(move |&(t, v)| (t, f.mul(c, v))))
            .collect();
        merge(terms)
    }

    fn sparse_mul_left(&self, i: usize, right: &[(u32, u32)]) -> Vec<(u32, u32)> {
        let f = &self.field;
        let terms = right
            .iter()
            .flat_map(|&(l, c)| self.basis_product(i, l as usize).iter().map(move |&(t, v)| (t, f.mul(c, v))))
            .collect();
        merge(terms)
    }

    /// Gram matrix rows `G_ij = lambda(b_i b_j)`, sparse.
    pub fn gram_rows(&self) -> Vec<Vec<(u32, u32)>> {
        (0..self.dim)
            .into_par_iter()
            .map(|i| {
                (0..self.dim)
                    .filter_map(|j| {
                        let g = self.lambda_sparse(self.basis_product(i, j));
                        (g != 0).then_some((j as u32, g))
                    })
                    .collect()
            })
            .collect()
    }

    /// Dense Gram matrix.
    pub fn gram(&self) -> Vec<Vec<u32>> {
        self.gram_rows()
            .into_iter()
            .map(|row| {
                let mut dense = vec![0u32; self.dim];
                for (j, g) in row {
                    dense[j as usize] = g;
                }
                dense
            })
            .collect()
    }

    fn check_triple(&self, i: usize, j: usize, k: usize) -> Result<()> {
        let left = self.sparse_mul_right(self.basis_product(i, j), k);
        let right = self.sparse_mul_left(i, self.basis_product(j, k));
        if left != right {
            return Err(Error::Validation(format!("associativity fails at ({i}, {j}, {k})")));
        }
        if self.lambda_sparse(&left) != self.lambda_sparse(&right) {
            return Err(Error::Validation(format!("form associativity fails at ({i}, {j}, {k})")));
        }
        Ok(())
    }

    /// Checks associativity (every triple up to dimension 200, seeded random triples above),
    /// the unit law, symmetry and associativity of the form, and nondegeneracy.
    pub fn validate(&self) -> Result<ValidationReport> {
        let d = self.dim;
        let exhaustive = d <= EXHAUSTIVE_VALIDATION_DIM;
        let triples_checked = if exhaustive {
            (0..d * d).into_par_iter().try_for_each(|p| (0..d).try_for_each(|k| self.check_triple(p / d, p % d, k)))?;
            d * d * d
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(VALIDATION_SEED);
            let triples: Vec<(usize, usize, usize)> =
                (0..SAMPLED_TRIPLES).map(|_| (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d))).collect();
            triples.par_iter().try_for_each(|&(i, j, k)| self.check_triple(i, j, k))?;
            SAMPLED_TRIPLES
        };

        for i in 0..d {
            let e = self.basis_vector(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(Error::Validation(format!("unit law fails at basis element {i}")));
            }
        }

        (0..d * d).into_par_iter().try_for_each(|p| {
            let (i, j) = (p / d, p % d);
            if i < j && self.lambda_sparse(self.basis_product(i, j)) != self.lambda_sparse(self.basis_product(j, i)) {
                return Err(Error::Validation(format!("form is not symmetric at ({i}, {j})")));
            }
            Ok(())
        })?;

        let gram = self.gram();
        let gram_rank = Subspace::span(&self.field, d, &gram)?.dim();
        if gram_rank != d {
            return Err(Error::DegenerateForm { rank: gram_rank, dim: d });
        }
        let form_support =
            (0..d).filter(|&k| self.form[k] != 0).map(|k| self.labels[k].clone()).collect();
        Ok(ValidationReport { dim: d, triples_checked, exhaustive, gram_rank, form_support })
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Serializes to the table file format.
    pub fn to_json(&self) -> String {
        let file = TableFile {
            field: FieldSpec { p: 2, m: self.field.degree() },
            dim: self.dim,
            labels: self.labels.clone(),
            unit: self.unit.clone(),
            products: self.products().into_iter().map(|(i, j, k, c)| [i as u64, j as u64, k as u64, c as u64]).collect(),
            form_functional: self.form.clone(),
        };
        serde_json::to_string_pretty(&file).expect("table serializes")
    }

    /// Parses the table file format. The result is not validated.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: TableFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if file.field.p != 2 {
            return Err(Error::Parse(format!("characteristic {} is not 2", file.field.p)));
        }
        if file.field.m == 0 || file.field.m > 32 {
            return Err(Error::Parse(format!("field degree {} out of range", file.field.m)));
        }
        if file.labels.len() != file.dim {
            return Err(Error::Parse(format!("{} labels for dimension {}", file.labels.len(), file.dim)));
        }
        let narrow = |x: u64| u32::try_from(x).map_err(|_| Error::Parse(format!("integer {x} out of range")));
        let products = file
            .products
            .iter()
            .map(|p| Ok((narrow(p[0])?, narrow(p[1])?, narrow(p[2])?, narrow(p[3])?)))
            .collect::<Result<Vec<_>>>()?;
        let field = BinaryField::new(file.field.m)?;
        Self::new(&field, file.labels, file.unit, products, file.form_functional).map_err(|e| match e {
            Error::InvalidInput(msg) => Error::Parse(msg),
            Error::DimensionMismatch { expected, found } => {
                Error::Parse(format!("vector of length {found}, expected {expected}"))
            }
            other => other,
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldSpec {
    p: u32,
    m: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    field: FieldSpec,
    dim: usize,
    labels: Vec<String>,
    unit: Vec<u32>,
    products: Vec<[u64; 4]>,
    form_functional: Vec<u32>,
}
