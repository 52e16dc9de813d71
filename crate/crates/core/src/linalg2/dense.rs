use crate::ffield::BinaryField;

/// Inverse of a square matrix over `F_{2^m}` by Gauss-Jordan elimination; `None` if singular.
pub fn invert(field: &BinaryField, mat: &[Vec<u32>]) -> Option<Vec<Vec<u32>>> {
    let n = mat.len();
    let mut a: Vec<Vec<u32>> = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| (i == j) as u32));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, piv);
        let inv = field.inv(a[col][col])?;
        for x in a[col].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && row[col] != 0 {
                let c = row[col];
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x ^= field.mul(c, p);
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Row vector times matrix.
pub fn vec_mul(field: &BinaryField, v: &[u32], mat: &[Vec<u32>]) -> Vec<u32> {
    let cols = mat.first().map_or(0, |r| r.len());
    let mut out = vec![0u32; cols];
    for (&c, row) in v.iter().zip(mat) {
        if c != 0 {
            for (o, &x) in out.iter_mut().zip(row) {
                *o ^= field.mul(c, x);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_over_f8() {
        let f = BinaryField::new(3).unwrap();
        let m = vec![vec![0, 2, 3], vec![4, 5, 6], vec![0, 0, 7]];
        let inv = invert(&f, &m).unwrap();
        for (i, row) in m.iter().enumerate() {
            let prod = vec_mul(&f, row, &inv);
            for (j, &x) in prod.iter().enumerate() {
                assert_eq!(x, (i == j) as u32);
            }
        }
        assert!(invert(&f, &[vec![1, 1], vec![1, 1]]).is_none());
    }
}
