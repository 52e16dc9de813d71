//! `PGL_2(q)` for odd `q`, elements stored as canonical matrices.

use std::fmt;

use crate::error::{Error, Result};
use crate::ffield::{FieldElement, FiniteField, QuadraticExtension};

/// Row-major 2x2 matrix `[a, b, c, d]`.
pub type Matrix = [FieldElement; 4];

/// Names of the conjugacy classes of `PGL_2(q)`: the identity, the unipotent class, the
/// split semisimple classes `A3,i` and the nonsplit ones `A4,j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pgl2Label {
    A1,
    A2,
    A3(u32),
    A4(u32),
}

impl fmt::Display for Pgl2Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pgl2Label::A1 => write!(f, "A1"),
            Pgl2Label::A2 => write!(f, "A2"),
            Pgl2Label::A3(i) => write!(f, "A3,{i}"),
            Pgl2Label::A4(j) => write!(f, "A4,{j}"),
        }
    }
}

impl std::str::FromStr for Pgl2Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad class label {s:?}"));
        match s {
            "A1" => Ok(Pgl2Label::A1),
            "A2" => Ok(Pgl2Label::A2),
            _ => {
                let (head, idx) = s.split_once(',').ok_or_else(bad)?;
                let idx: u32 = idx.trim().parse().map_err(|_| bad())?;
                match head {
                    "A3" => Ok(Pgl2Label::A3(idx)),
                    "A4" => Ok(Pgl2Label::A4(idx)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

#[derive(Debug)]
pub struct Pgl2 {
    q: u32,
    field: FiniteField,
    quad: QuadraticExtension,
    elements: Vec<Matrix>,
    /// canonical matrix index -> element id, `u32::MAX` for singular matrices
    index: Vec<u32>,
    neg: Vec<FieldElement>,
    inv: Vec<FieldElement>,
}

impl Pgl2 {
    pub fn new(q: u32) -> Result<Self> {
        let (p, k) = crate::ffield::prime_power(q as u64)
            .ok_or_else(|| Error::InvalidInput(format!("{q} is not a prime power")))?;
        if p == 2 {
            return Err(Error::InvalidInput(format!("q = {q} is even")));
        }
        let field = FiniteField::new(p as u32, k)?;
        let quad = QuadraticExtension::new(&field)?;
        let neg: Vec<FieldElement> = field.elements().map(|a| field.neg(a)).collect();
        let inv: Vec<FieldElement> = field
            .elements()
            .map(|a| field.inv(a).unwrap_or(FieldElement::ZERO))
            .collect();
        let qq = q as usize;
        let mut index = vec![u32::MAX; qq * qq * qq + qq * qq];
        let mut elements = Vec::with_capacity(qq * (qq * qq - 1));
        let one = FieldElement::ONE;
        let zero = FieldElement::ZERO;
        // first nonzero entry 1: either a = 1, or a = 0 and b = 1
        for b in field.elements() {
            for c in field.elements() {
                for d in field.elements() {
                    let det = field.sub(d, field.mul(b, c));
                    if det != zero {
                        let m = [one, b, c, d];
                        index[Self::slot(qq, &m)] = elements.len() as u32;
                        elements.push(m);
                    }
                }
            }
        }
        for c in field.elements().skip(1) {
            for d in field.elements() {
                let m = [zero, one, c, d];
                index[Self::slot(qq, &m)] = elements.len() as u32;
                elements.push(m);
            }
        }
        debug_assert_eq!(elements.len(), qq * (qq * qq - 1));
        Ok(Pgl2 {
            q,
            field,
            quad,
            elements,
            index,
            neg,
            inv,
        })
    }

    #[inline]
    fn slot(q: usize, m: &Matrix) -> usize {
        if m[0].0 == 1 {
            (m[1].0 as usize * q + m[2].0 as usize) * q + m[3].0 as usize
        } else {
            q * q * q + m[2].0 as usize * q + m[3].0 as usize
        }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn extension(&self) -> &QuadraticExtension {
        &self.quad
    }

    pub fn matrix(&self, id: u32) -> Matrix {
        self.elements[id as usize]
    }

    /// Canonical representative of the scalar class of a nonsingular matrix.
    pub fn canonical(&self, m: Matrix) -> Result<Matrix> {
        let f = &self.field;
        let det = f.sub(f.mul(m[0], m[3]), f.mul(m[1], m[2]));
        if det == FieldElement::ZERO {
            return Err(Error::InvalidInput("singular matrix".into()));
        }
        let lead = if m[0] != FieldElement::ZERO {
            m[0]
        } else {
            m[1]
        };
        let s = self.inv[lead.0 as usize];
        Ok([
            f.mul(s, m[0]),
            f.mul(s, m[1]),
            f.mul(s, m[2]),
            f.mul(s, m[3]),
        ])
    }

    pub fn id_of(&self, m: Matrix) -> Result<u32> {
        let c = self.canonical(m)?;
        Ok(self.index[Self::slot(self.q as usize, &c)])
    }

    #[inline]
    fn lookup_scaled(&self, m: Matrix) -> u32 {
        let f = &self.field;
        let (s, m) = if m[0] != FieldElement::ZERO {
            (self.inv[m[0].0 as usize], m)
        } else {
            (self.inv[m[1].0 as usize], m)
        };
        let c = if s == FieldElement::ONE {
            m
        } else {
            [
                f.mul(s, m[0]),
                f.mul(s, m[1]),
                f.mul(s, m[2]),
                f.mul(s, m[3]),
            ]
        };
        self.index[Self::slot(self.q as usize, &c)]
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        let f = &self.field;
        let a = &self.elements[x as usize];
        let b = &self.elements[y as usize];
        let m = [
            f.add(f.mul(a[0], b[0]), f.mul(a[1], b[2])),
            f.add(f.mul(a[0], b[1]), f.mul(a[1], b[3])),
            f.add(f.mul(a[2], b[0]), f.mul(a[3], b[2])),
            f.add(f.mul(a[2], b[1]), f.mul(a[3], b[3])),
        ];
        self.lookup_scaled(m)
    }

    #[inline]
    pub fn inv(&self, x: u32) -> u32 {
        let a = &self.elements[x as usize];
        let n = |e: FieldElement| self.neg[e.0 as usize];
        self.lookup_scaled([a[3], n(a[1]), n(a[2]), a[0]])
    }

    pub fn identity(&self) -> u32 {
        let one = FieldElement::ONE;
        self.index[Self::slot(
            self.q as usize,
            &[one, FieldElement::ZERO, FieldElement::ZERO, one],
        )]
    }

    /// `diag(1, tau^i)`, defined for every integer `i`.
    pub fn a3_matrix(&self, i: i64) -> Matrix {
        let f = &self.field;
        let e = i.rem_euclid(self.q as i64 - 1) as u64;
        [
            FieldElement::ONE,
            FieldElement::ZERO,
            FieldElement::ZERO,
            f.pow(self.quad.tau_base, e),
        ]
    }

    /// `[[0, -sigma^{j(q+1)}], [1, sigma^j + sigma^{jq}]]`, defined for every integer `j`.
    pub fn a4_matrix(&self, j: i64) -> Matrix {
        let ext = &self.quad.ext;
        let q = self.q as u64;
        let j = j.rem_euclid(q as i64 * q as i64 - 1) as u64;
        let sj = ext.pow(self.quad.sigma, j);
        let norm = ext.pow(self.quad.sigma, j * (q + 1) % (q * q - 1));
        let trace = ext.add(sj, ext.pow(sj, q));
        let restrict = |e| {
            self.quad
                .restrict(e)
                .expect("norm and trace lie in the base field")
        };
        [
            FieldElement::ZERO,
            self.field.neg(restrict(norm)),
            FieldElement::ONE,
            restrict(trace),
        ]
    }

    pub fn a2_matrix(&self) -> Matrix {
        let one = FieldElement::ONE;
        [one, one, FieldElement::ZERO, one]
    }

    /// Class labels in their canonical order: `A1, A2, A3,1..A3,(q-1)/2, A4,1..A4,(q+1)/2`.
    pub fn labels(&self) -> Vec<Pgl2Label> {
        let mut out = vec![Pgl2Label::A1, Pgl2Label::A2];
        out.extend((1..=(self.q - 1) / 2).map(Pgl2Label::A3));
        out.extend((1..=self.q.div_ceil(2)).map(Pgl2Label::A4));
        out
    }

    /// Representative matrix of each label in [`Self::labels`] order.
    pub fn representatives(&self) -> Vec<u32> {
        self.labels()
            .into_iter()
            .map(|l| {
                let m = match l {
                    Pgl2Label::A1 => return self.identity(),
                    Pgl2Label::A2 => self.a2_matrix(),
                    Pgl2Label::A3(i) => self.a3_matrix(i as i64),
                    Pgl2Label::A4(j) => self.a4_matrix(j as i64),
                };
                self.id_of(m)
                    .expect("class representatives are nonsingular")
            })
            .collect()
    }

    /// Canonical label for an `A3` index taken modulo `q-1` up to sign; index 0 is `A1`.
    pub fn normalize_a3(&self, i: i64) -> Pgl2Label {
        let n = self.q as i64 - 1;
        let r = i.rem_euclid(n);
        let r = r.min(n - r);
        if r == 0 {
            Pgl2Label::A1
        } else {
            Pgl2Label::A3(r as u32)
        }
    }

    /// Canonical label for an `A4` index modulo `q+1` up to sign. Index 0 has no label of its
    /// own (the formula degenerates to a unipotent matrix), so it is rejected.
    pub fn normalize_a4(&self, j: i64) -> Result<Pgl2Label> {
        let n = self.q as i64 + 1;
        let r = j.rem_euclid(n);
        let r = r.min(n - r);
        if r == 0 {
            return Err(Error::InvalidInput(format!("A4 index {j} is 0 modulo q+1")));
        }
        Ok(Pgl2Label::A4(r as u32))
    }

    /// Position of a label in [`Self::labels`], which is also its class id.
    pub fn label_index(&self, l: Pgl2Label) -> Option<usize> {
        let h3 = (self.q - 1) / 2;
        let h4 = self.q.div_ceil(2);
        match l {
            Pgl2Label::A1 => Some(0),
            Pgl2Label::A2 => Some(1),
            Pgl2Label::A3(i) if (1..=h3).contains(&i) => Some(1 + i as usize),
            Pgl2Label::A4(j) if (1..=h4).contains(&j) => Some(1 + h3 as usize + j as usize),
            _ => None,
        }
    }

    /// Expected centralizer order of a class representative.
    pub fn centralizer_order(&self, l: Pgl2Label) -> usize {
        let q = self.q as usize;
        match l {
            Pgl2Label::A1 => q * (q + 1) * (q - 1),
            Pgl2Label::A2 => q,
            Pgl2Label::A3(i) if i as usize == (q - 1) / 2 => 2 * (q - 1),
            Pgl2Label::A3(_) => q - 1,
            Pgl2Label::A4(j) if j as usize == q.div_ceil(2) => 2 * (q + 1),
            Pgl2Label::A4(_) => q + 1,
        }
    }

    /// Generators `diag(tau, 1)`, the unipotent `[[1,1],[0,1]]` and the swap `[[0,1],[1,0]]`.
    pub fn generators(&self) -> Vec<u32> {
        let one = FieldElement::ONE;
        let zero = FieldElement::ZERO;
        [
            [self.quad.tau_base, zero, zero, one],
            [one, one, zero, one],
            [zero, one, one, zero],
        ]
        .into_iter()
        .map(|m| self.id_of(m).expect("generators are nonsingular"))
        .collect()
    }

    /// The conjugacy class of `A3,i` built from the explicit coset representatives
    /// `[[1,0],[a,1]]·[[1,b],[0,1]]` and `[[0,1],[1,0]]·[[1,c],[0,1]]`.
    pub fn class_elements_a3(&self, i: u32) -> Result<Vec<u32>> {
        if i < 1 || i > (self.q - 3) / 2 {
            return Err(Error::InvalidInput(format!(
                "A3 index {i} outside 1..={}",
                (self.q - 3) / 2
            )));
        }
        let f = &self.field;
        let one = FieldElement::ONE;
        let zero = FieldElement::ZERO;
        let rep = self.id_of(self.a3_matrix(i as i64))?;
        let mut coset_reps = Vec::with_capacity((self.q * (self.q + 1)) as usize);
        for alpha in f.elements() {
            for beta in f.elements() {
                let lower = [one, zero, alpha, one];
                let upper = [one, beta, zero, one];
                coset_reps.push(self.mul(self.id_of(lower)?, self.id_of(upper)?));
            }
        }
        let swap = self.id_of([zero, one, one, zero])?;
        for gamma in f.elements() {
            coset_reps.push(self.mul(swap, self.id_of([one, gamma, zero, one])?));
        }
        let mut out: Vec<u32> = coset_reps
            .iter()
            .map(|&g| self.mul(self.mul(g, rep), self.inv(g)))
            .collect();
        let n = out.len();
        out.sort_unstable();
        out.dedup();
        if out.len() != n {
            return Err(Error::Assertion(
                "coset representatives produced repeated conjugates".into(),
            ));
        }
        Ok(out)
    }

    pub fn encode(&self, id: u32) -> Vec<u8> {
        self.elements[id as usize]
            .iter()
            .flat_map(|e| e.0.to_le_bytes())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(Pgl2::new(3).unwrap().order(), 24);
        assert_eq!(Pgl2::new(7).unwrap().order(), 336);
        assert_eq!(Pgl2::new(9).unwrap().order(), 720);
        assert!(matches!(Pgl2::new(8), Err(Error::InvalidInput(_))));
        assert!(matches!(Pgl2::new(12), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn multiplication_is_a_group_law() {
        let g = Pgl2::new(5).unwrap();
        let e = g.identity();
        for x in 0..g.order() as u32 {
            assert_eq!(g.mul(x, e), x);
            assert_eq!(g.mul(x, g.inv(x)), e);
        }
        for x in (0..g.order() as u32).step_by(7) {
            for y in (0..g.order() as u32).step_by(11) {
                for z in (0..g.order() as u32).step_by(13) {
                    assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                }
            }
        }
    }

    #[test]
    fn a4_formula_matches_the_order_two_class() {
        for q in [3u32, 5, 7, 9, 11] {
            let g = Pgl2::new(q).unwrap();
            let tau = g.extension().tau_base;
            let expected = [
                FieldElement::ZERO,
                tau,
                FieldElement::ONE,
                FieldElement::ZERO,
            ];
            assert_eq!(g.a4_matrix((q as i64 + 1) / 2), expected);
        }
    }

    #[test]
    fn labels_round_trip() {
        for s in ["A1", "A2", "A3,4", "A4,1"] {
            assert_eq!(s.parse::<Pgl2Label>().unwrap().to_string(), s);
        }
        assert!("A5,1".parse::<Pgl2Label>().is_err());
        let g = Pgl2::new(9).unwrap();
        assert_eq!(g.normalize_a3(8), Pgl2Label::A1);
        assert_eq!(g.normalize_a3(-3), Pgl2Label::A3(3));
        assert_eq!(g.normalize_a3(7), Pgl2Label::A3(1));
        assert_eq!(g.normalize_a4(11).unwrap(), Pgl2Label::A4(1));
        assert!(g.normalize_a4(10).is_err());
    }
}
