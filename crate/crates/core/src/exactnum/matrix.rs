use super::GaussianRational;
use crate::error::{Error, Result};

/// Dense row-major matrix over ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<GaussianRational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    /// Builds a matrix from row vectors; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(ExactMatrix { rows: n, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: GaussianRational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_zero)
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, coeffs: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
        if coeffs.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: coeffs.len(),
            });
        }
        let mut out = vec![GaussianRational::zero(); self.cols];
        for (r, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, v) in out.iter_mut().zip(self.row(r)) {
                if !v.is_zero() {
                    *o += &(c * v);
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &GaussianRational) {
        for v in &mut self.entries[r * self.cols..(r + 1) * self.cols] {
            if !v.is_zero() {
                *v = &*v * s;
            }
        }
    }

    /// `row[target] -= factor · row[source]`
    fn sub_row(&mut self, target: usize, source: usize, factor: &GaussianRational) {
        for c in 0..self.cols {
            let s = &self.entries[source * self.cols + c];
            if s.is_zero() {
                continue;
            }
            let delta = factor * s;
            self.entries[target * self.cols + c] -= &delta;
        }
    }
}

/// Result of [`rref`]: `transform · input = matrix`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: ExactMatrix,
    pub pivots: Vec<usize>,
    pub transform: ExactMatrix,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Gauss-Jordan elimination. Pivots are taken column by column, choosing the
/// first row at or below the current pivot row with a nonzero entry.
pub fn rref(m: &ExactMatrix) -> Rref {
    let mut a = m.clone();
    let mut t = ExactMatrix::identity(m.rows);
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..a.cols {
        if prow == a.rows {
            break;
        }
        let Some(found) = (prow..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        a.swap_rows(found, prow);
        t.swap_rows(found, prow);
        let inv = a.get(prow, col).inv().expect("pivot is nonzero");
        a.scale_row(prow, &inv);
        t.scale_row(prow, &inv);
        for r in 0..a.rows {
            if r == prow {
                continue;
            }
            let factor = a.get(r, col).clone();
            if factor.is_zero() {
                continue;
            }
            a.sub_row(r, prow, &factor);
            t.sub_row(r, prow, &factor);
        }
        pivots.push(col);
        prow += 1;
    }
    Rref {
        matrix: a,
        pivots,
        transform: t,
    }
}

/// Finds `c` with `c · basis = target` when the target lies in the row span.
pub fn solve_membership(
    basis: &ExactMatrix,
    target: &[GaussianRational],
) -> Result<Option<Vec<GaussianRational>>> {
    if target.len() != basis.cols {
        return Err(Error::DimensionMismatch {
            expected: basis.cols,
            found: target.len(),
        });
    }
    let red = rref(basis);
    // In RREF the coefficient on pivot row k is the target's entry in pivot column k.
    let weights: Vec<GaussianRational> = red.pivots.iter().map(|&p| target[p].clone()).collect();
    let mut reconstructed = vec![GaussianRational::zero(); basis.cols];
    for (k, w) in weights.iter().enumerate() {
        for (o, v) in reconstructed.iter_mut().zip(red.matrix.row(k)) {
            if !v.is_zero() {
                *o += &(w * v);
            }
        }
    }
    if reconstructed != target {
        return Ok(None);
    }
    let mut coeffs = vec![GaussianRational::zero(); basis.rows];
    for (k, w) in weights.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        for (c, tv) in coeffs.iter_mut().zip(red.transform.row(k)) {
            if !tv.is_zero() {
                *c += &(w * tv);
            }
        }
    }
    Ok(Some(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    fn mat(rows: &[&[GaussianRational]]) -> ExactMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        ExactMatrix::from_rows(cols, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = ExactMatrix::identity(2);
        let red = rref(&id);
        assert_eq!(red.matrix, id);
        assert_eq!(red.pivots, vec![0, 1]);

        let z = ExactMatrix::zeros(2, 2);
        let red = rref(&z);
        assert_eq!(red.matrix, z);
        assert!(red.pivots.is_empty());
    }

    #[test]
    fn rref_dependent_complex_rows() {
        let m = mat(&[&[g(1, 0), g(0, 1)], &[g(0, 1), g(-1, 0)]]);
        let red = rref(&m);
        assert_eq!(red.matrix, mat(&[&[g(1, 0), g(0, 1)], &[g(0, 0), g(0, 0)]]));
        assert_eq!(red.pivots, vec![0]);
        assert_eq!(red.transform.mul(&m).unwrap(), red.matrix);
    }

    #[test]
    fn membership_examples() {
        let b = mat(&[&[g(1, 0), g(0, 0)]]);
        assert_eq!(solve_membership(&b, &[g(2, 0), g(0, 0)]).unwrap(), Some(vec![g(2, 0)]));
        assert_eq!(solve_membership(&b, &[g(0, 0), g(1, 0)]).unwrap(), None);

        let b = mat(&[&[g(1, 0), g(1, 0)], &[g(0, 0), g(1, 0)]]);
        assert_eq!(
            solve_membership(&b, &[g(1, 0), g(0, 0)]).unwrap(),
            Some(vec![g(1, 0), g(-1, 0)])
        );
        assert!(matches!(
            solve_membership(&b, &[g(1, 0)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn shape_checks() {
        assert!(ExactMatrix::from_entries(2, 2, vec![g(1, 0)]).is_err());
        assert!(ExactMatrix::from_rows(2, vec![vec![g(1, 0)]]).is_err());
    }
}
