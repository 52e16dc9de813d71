//! Group algebras, the two-vertex dihedral algebras `D(2A)^s(c)`, matrix algebras and direct
//! sums as structure-constant tables.

use super::table::{AlgebraTable, ValidationReport};
use crate::commalg::Multiply;
use crate::error::{Error, Result};
use crate::ffield::BinaryField;
use crate::groups::Group;

/// Largest group order accepted by [`group_algebra_table`].
pub const DEFAULT_TABLE_GUARD: usize = 2000;

/// `F_2 G` with basis the group elements and `lambda` the identity coefficient.
pub fn group_algebra_table(g: &Group) -> Result<AlgebraTable> {
    group_algebra_table_with_guard(g, DEFAULT_TABLE_GUARD)
}

pub fn group_algebra_table_with_guard(g: &Group, guard: usize) -> Result<AlgebraTable> {
    let n = g.order();
    if n > guard {
        return Err(Error::ResourceLimit(format!("group of order {n} exceeds table guard {guard}")));
    }
    let labels = (0..n).map(|x| format!("g{x}")).collect();
    let mut unit = vec![0u32; n];
    unit[g.identity() as usize] = 1;
    AlgebraTable::from_fn(
        &BinaryField::f2(),
        labels,
        unit.clone(),
        |i, j| vec![(g.mul(i as u32, j as u32), 1)],
        unit,
    )
}

/// `M_n(F_2)` with the trace form.
pub fn matrix_algebra_table(n: usize) -> Result<AlgebraTable> {
    if n == 0 {
        return Err(Error::InvalidInput("matrix size 0".into()));
    }
    let labels = (0..n * n).map(|p| format!("E{}{}", p / n, p % n)).collect();
    let diag: Vec<u32> = (0..n * n).map(|p| (p / n == p % n) as u32).collect();
    AlgebraTable::from_fn(
        &BinaryField::f2(),
        labels,
        diag.clone(),
        |x, y| {
            let (a, b, c, d) = (x / n, x % n, y / n, y % n);
            if b == c {
                vec![((a * n + d) as u32, 1)]
            } else {
                vec![]
            }
        },
        diag,
    )
}

/// Block-diagonal sum; the functional is concatenated.
pub fn direct_sum(a: &AlgebraTable, b: &AlgebraTable) -> Result<AlgebraTable> {
    if a.field().degree() != b.field().degree() {
        return Err(Error::InvalidInput(format!(
            "field mismatch: F_2^{} and F_2^{}",
            a.field().degree(),
            b.field().degree()
        )));
    }
    let da = a.dim() as u32;
    let labels = a.labels().iter().cloned().chain(b.labels().iter().map(|l| format!("{l}'"))).collect();
    let unit = a.unit().iter().chain(b.unit()).copied().collect();
    let form = a.form().iter().chain(b.form()).copied().collect();
    let products = a
        .products()
        .into_iter()
        .chain(b.products().into_iter().map(|(i, j, k, c)| (i + da, j + da, k + da, c)))
        .collect();
    AlgebraTable::new(a.field(), labels, unit, products, form)
}

/// The arrows: the loop `alpha` at vertex 0, `beta: 0 -> 1`, `gamma: 1 -> 0`, composed left to
/// right. Every nonzero path is a subword of `alpha beta gamma alpha beta gamma ...`.
const LETTERS: [char; 3] = ['a', 'b', 'g'];
const START: [usize; 3] = [0, 0, 1];
const END: [usize; 3] = [0, 1, 0];
const ALPHA: usize = 0;
const BETA: usize = 1;

/// Parameters `s >= 1`, `c in {0, 1}` of `D(2A)^s(c)`: relations `gamma beta = 0`,
/// `alpha^2 = c (alpha beta gamma)^s`, `(alpha beta gamma)^s = (beta gamma alpha)^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct D2APresentation {
    pub s: u32,
    pub c: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum D2ABasis {
    Vertex(usize),
    /// subword of the periodic word starting at letter `start`, of length `len`
    Path { start: usize, len: u32 },
}

impl D2APresentation {
    pub fn new(s: u32, c: u32) -> Result<Self> {
        if s == 0 || c > 1 || s > 4096 {
            return Err(Error::InvalidInput(format!("D(2A)^s(c) needs 1 <= s <= 4096 and c in {{0, 1}}, got s = {s}, c = {c}")));
        }
        Ok(D2APresentation { s, c })
    }

    /// Whether the parameters are those of a dihedral block of defect at least 4.
    pub fn is_dihedral_block_type(&self) -> bool {
        self.s >= 4 && self.s.is_power_of_two()
    }

    fn basis(&self) -> Vec<D2ABasis> {
        let top = 3 * self.s;
        let mut out = vec![D2ABasis::Vertex(0), D2ABasis::Vertex(1)];
        for start in 0..3 {
            for len in 1..=top {
                if !(start == BETA && len == top) {
                    out.push(D2ABasis::Path { start, len });
                }
            }
        }
        out
    }

    fn label(b: D2ABasis) -> String {
        match b {
            D2ABasis::Vertex(v) => format!("e{v}"),
            D2ABasis::Path { start, len } => (0..len as usize).map(|t| LETTERS[(start + t) % 3]).collect(),
        }
    }

    fn canonical(&self, start: usize, len: u32) -> D2ABasis {
        if start == BETA && len == 3 * self.s {
            D2ABasis::Path { start: ALPHA, len }
        } else {
            D2ABasis::Path { start, len }
        }
    }

    fn product(&self, x: D2ABasis, y: D2ABasis) -> Option<D2ABasis> {
        use D2ABasis::*;
        let top = 3 * self.s;
        match (x, y) {
            (Vertex(u), Vertex(v)) => (u == v).then_some(x),
            (Vertex(u), Path { start, .. }) => (START[start] == u).then_some(y),
            (Path { start, len }, Vertex(v)) => (END[(start + len as usize - 1) % 3] == v).then_some(x),
            (Path { start: s1, len: l1 }, Path { start: s2, len: l2 }) => {
                let last = (s1 + l1 as usize - 1) % 3;
                if END[last] != START[s2] {
                    None
                } else if (last + 1) % 3 == s2 {
                    (l1 + l2 <= top).then(|| self.canonical(s1, l1 + l2))
                } else if last == ALPHA && s2 == ALPHA && l1 == 1 && l2 == 1 && self.c == 1 {
                    Some(Path { start: ALPHA, len: top })
                } else {
                    None
                }
            }
        }
    }
}

/// Dimension of `D(2A)^s(c)` by depth-first enumeration of quiver paths of length at most `3s`
/// avoiding `gamma beta` and `alpha alpha`, plus the two vertices, minus one for the
/// identification of the two socle words at vertex 0.
pub fn d2a_word_count(s: u32) -> usize {
    fn walk(last: usize, len: u32, top: u32) -> usize {
        if len == top {
            return 1;
        }
        let mut n = 1;
        for next in 0..3 {
            let allowed = END[last] == START[next] && !(last == 2 && next == BETA) && !(last == ALPHA && next == ALPHA);
            if allowed {
                n += walk(next, len + 1, top);
            }
        }
        n
    }
    let top = 3 * s;
    2 + (0..3).map(|first| walk(first, 1, top)).sum::<usize>() - 1
}

/// The table of `D(2A)^s(c)` over F_2 with its validation report. The functional is the
/// indicator of the socle words `(alpha beta gamma)^s` and `(gamma alpha beta)^s`; should that
/// fail to be symmetric and nondegenerate, the vertex indicators are added in turn.
pub fn d2a_table(p: D2APresentation) -> Result<(AlgebraTable, ValidationReport)> {
    let basis = p.basis();
    let dim = basis.len();
    let oracle = d2a_word_count(p.s);
    if dim != oracle || dim != 9 * p.s as usize + 1 {
        return Err(Error::Validation(format!("D(2A) basis has {dim} words, enumeration gives {oracle}")));
    }
    let index = |b: D2ABasis| basis.iter().position(|&x| x == b).expect("canonical word in basis");
    let labels: Vec<String> = basis.iter().map(|&b| D2APresentation::label(b)).collect();
    let mut unit = vec![0u32; dim];
    unit[0] = 1;
    unit[1] = 1;
    let top = 3 * p.s;
    let socle0 = index(D2ABasis::Path { start: ALPHA, len: top });
    let socle1 = index(D2ABasis::Path { start: 2, len: top });
    let products: Vec<Vec<(u32, u32)>> = (0..dim * dim)
        .map(|q| p.product(basis[q / dim], basis[q % dim]).map(|b| vec![(index(b) as u32, 1)]).unwrap_or_default())
        .collect();

    let mut last_err = None;
    for extra in [[0, 0], [1, 0], [0, 1], [1, 1]] {
        let mut form = vec![0u32; dim];
        form[socle0] = 1;
        form[socle1] = 1;
        form[0] = extra[0];
        form[1] = extra[1];
        let table = AlgebraTable::from_fn(&BinaryField::f2(), labels.clone(), unit.clone(), |i, j| products[i * dim + j].clone(), form)?;
        match table.validate() {
            Ok(report) => return Ok((table, report)),
            Err(e @ (Error::DegenerateForm { .. } | Error::Validation(_))) if is_form_failure(&e) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last_err.expect("at least one candidate tried"))
}

fn is_form_failure(e: &Error) -> bool {
    match e {
        Error::DegenerateForm { .. } => true,
        Error::Validation(msg) => msg.starts_with("form is not symmetric"),
        _ => false,
    }
}

/// Vertex idempotents `e0`, `e1` of a table from [`d2a_table`].
pub fn d2a_vertex_idempotents(table: &AlgebraTable) -> (Vec<u32>, Vec<u32>) {
    (table.basis_vector(0), table.basis_vector(1))
}
