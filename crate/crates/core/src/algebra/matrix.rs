//! Matrices of polynomials, determinants, minors and pointwise rank.

use super::poly::MultiPoly;
use super::ring::{inv_mod, mul_mod, sub_mod, Fp, PrimeField, Ring};
use super::AlgebraError;

/// A dense rectangular matrix of polynomials over a common ring.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyMatrix<R: Ring> {
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly<R>>,
}

impl<R: Ring> PolyMatrix<R> {
    /// Builds a matrix from rows. All entries must share ring and variable
    /// count.
    pub fn from_rows(rows: Vec<Vec<MultiPoly<R>>>) -> Result<Self, AlgebraError> {
        let nrows = rows.len();
        if nrows == 0 {
            return Err(AlgebraError::DimensionMismatch("matrix has no rows".into()));
        }
        let ncols = rows[0].len();
        if ncols == 0 || rows.iter().any(|r| r.len() != ncols) {
            return Err(AlgebraError::DimensionMismatch(
                "ragged or empty rows".into(),
            ));
        }
        let entries: Vec<MultiPoly<R>> = rows.into_iter().flatten().collect();
        let (ring, n) = (entries[0].ring().clone(), entries[0].nvars());
        if entries.iter().any(|e| *e.ring() != ring || e.nvars() != n) {
            return Err(AlgebraError::IncompatibleRings);
        }
        Ok(PolyMatrix {
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    pub fn identity(ring: R, nvars: usize, size: usize) -> Self {
        let entries = (0..size * size)
            .map(|k| {
                if k / size == k % size {
                    MultiPoly::one(ring.clone(), nvars)
                } else {
                    MultiPoly::zero(ring.clone(), nvars)
                }
            })
            .collect();
        PolyMatrix {
            rows: size,
            cols: size,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ring(&self) -> &R {
        self.entries[0].ring()
    }

    pub fn nvars(&self) -> usize {
        self.entries[0].nvars()
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly<R> {
        &self.entries[i * self.cols + j]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = MultiPoly::zero(self.ring().clone(), self.nvars());
                for k in 0..self.cols {
                    acc = acc.checked_add(&self.get(i, k).checked_mul(other.get(k, j))?)?;
                }
                entries.push(acc);
            }
        }
        Ok(PolyMatrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    /// Exact determinant: cofactor expansion up to size 4, fraction-free
    /// (Bareiss) elimination beyond.
    pub fn determinant(&self) -> Result<MultiPoly<R>, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare(self.rows, self.cols));
        }
        if self.rows <= 4 {
            let cols: Vec<usize> = (0..self.cols).collect();
            Ok(self.cofactor_det(0, &cols))
        } else {
            self.bareiss_det()
        }
    }

    fn cofactor_det(&self, row: usize, cols: &[usize]) -> MultiPoly<R> {
        if cols.len() == 1 {
            return self.get(row, cols[0]).clone();
        }
        let mut acc = MultiPoly::zero(self.ring().clone(), self.nvars());
        for (k, &c) in cols.iter().enumerate() {
            let e = self.get(row, c);
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let t = e * &self.cofactor_det(row + 1, &rest);
            acc = if k % 2 == 0 { &acc + &t } else { &acc - &t };
        }
        acc
    }

    fn bareiss_det(&self) -> Result<MultiPoly<R>, AlgebraError> {
        let n = self.rows;
        let mut a: Vec<Vec<MultiPoly<R>>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut prev = MultiPoly::one(self.ring().clone(), self.nvars());
        let mut negate = false;
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(MultiPoly::zero(self.ring().clone(), self.nvars())),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev)?;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -&d } else { d })
    }

    /// All `r x r` minors, rows-subset major then columns-subset, each subset
    /// in lexicographic order.
    pub fn minors(&self, r: usize) -> Result<Vec<MultiPoly<R>>, AlgebraError> {
        if r == 0 || r > self.rows.min(self.cols) {
            return Err(AlgebraError::MinorSizeOutOfRange {
                size: r,
                rows: self.rows,
                cols: self.cols,
            });
        }
        let row_sets = subsets(self.rows, r);
        let col_sets = subsets(self.cols, r);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rs in &row_sets {
            for cs in &col_sets {
                out.push(self.submatrix(rs, cs).determinant()?);
            }
        }
        Ok(out)
    }

    /// Evaluates every entry at `point`.
    pub fn eval(&self, point: &[R::Elem]) -> Result<Vec<Vec<R::Elem>>, AlgebraError> {
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for j in 0..self.cols {
                row.push(self.get(i, j).eval(point)?);
            }
            out.push(row);
        }
        Ok(out)
    }
}

impl PolyMatrix<PrimeField> {
    /// Rank over `F_p` of the matrix evaluated at `point`.
    pub fn rank_at_point(&self, point: &[Fp]) -> Result<usize, AlgebraError> {
        let p = self.ring().modulus();
        if point.iter().any(|x| x.modulus() != p) {
            return Err(AlgebraError::IncompatibleRings);
        }
        let vals = self.eval(point)?;
        let mut m: Vec<Vec<u32>> = vals
            .into_iter()
            .map(|r| r.into_iter().map(Fp::value).collect())
            .collect();
        Ok(rank_mod_p(&mut m, p))
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Rank of a matrix of residues mod `p` by Gaussian elimination. The matrix
/// is overwritten.
pub fn rank_mod_p(m: &mut [Vec<u32>], p: u32) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = inv_mod(m[rank][c], p);
        for x in m[rank][c..].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for j in c..cols {
                    let t = mul_mod(f, m[rank][j], p);
                    m[r][j] = sub_mod(m[r][j], t, p);
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Basis of the right kernel `{x : m x = 0}` over `F_p`.
pub fn kernel_mod_p(m: &[Vec<u32>], p: u32) -> Vec<Vec<u32>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a: Vec<Vec<u32>> = m.to_vec();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = inv_mod(a[rank][c], p);
        for x in a[rank].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                for j in 0..cols {
                    let t = mul_mod(f, a[rank][j], p);
                    a[r][j] = sub_mod(a[r][j], t, p);
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u32; cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = sub_mod(0, a[r][f], p);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::RationalField;

    fn vars3() -> [MultiPoly<RationalField>; 3] {
        [0, 1, 2].map(|i| MultiPoly::var(RationalField, 3, i))
    }

    #[test]
    fn symmetric_two_by_two_determinant() {
        let [a, b, c] = vars3();
        let m = PolyMatrix::from_rows(vec![vec![a.clone(), b.clone()], vec![b.clone(), c.clone()]])
            .unwrap();
        assert!(m.is_symmetric());
        let det = m.determinant().unwrap();
        assert_eq!(det, &(&a * &c) - &(&b * &b));
        assert_eq!(m.minors(2).unwrap(), vec![det]);
        assert_eq!(m.minors(1).unwrap(), vec![a, b.clone(), b, c]);
    }

    #[test]
    fn identity_determinant_is_one() {
        for n in 1..=6 {
            let m = PolyMatrix::identity(RationalField, 2, n);
            assert_eq!(m.determinant().unwrap(), MultiPoly::one(RationalField, 2));
        }
    }

    #[test]
    fn non_square_and_bad_minor_size_are_errors() {
        let [a, b, _] = vars3();
        let m = PolyMatrix::from_rows(vec![vec![a, b]]).unwrap();
        assert!(matches!(
            m.determinant(),
            Err(AlgebraError::NotSquare(1, 2))
        ));
        assert!(matches!(
            m.minors(2),
            Err(AlgebraError::MinorSizeOutOfRange { .. })
        ));
        assert!(matches!(
            m.minors(0),
            Err(AlgebraError::MinorSizeOutOfRange { .. })
        ));
    }

    #[test]
    fn bareiss_agrees_with_cofactor_on_five_by_five() {
        // entries x_i + (i*j mod 4) - in 3 variables
        let ring = RationalField;
        let rows: Vec<Vec<MultiPoly<RationalField>>> = (0..5)
            .map(|i| {
                (0..5)
                    .map(|j| {
                        let v = MultiPoly::var(ring, 3, (i + 2 * j) % 3);
                        let c = MultiPoly::constant(
                            ring,
                            3,
                            ring.from_i64(((i * j + i) % 5) as i64 - 2),
                        );
                        &v + &c
                    })
                    .collect()
            })
            .collect();
        let m = PolyMatrix::from_rows(rows).unwrap();
        let bareiss = m.determinant().unwrap();
        let cols: Vec<usize> = (0..5).collect();
        assert_eq!(bareiss, m.cofactor_det(0, &cols));
    }

    #[test]
    fn rank_of_outer_product_is_one() {
        let p = 101;
        let f = PrimeField::new(p).unwrap();
        let v = [3i64, 5, 7, 11];
        let rows: Vec<Vec<MultiPoly<PrimeField>>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| MultiPoly::constant(f, 2, f.elem(v[i] * v[j])))
                    .collect()
            })
            .collect();
        let m = PolyMatrix::from_rows(rows).unwrap();
        assert_eq!(m.rank_at_point(&[f.elem(1), f.elem(2)]).unwrap(), 1);
        let id = PolyMatrix::identity(f, 2, 4);
        assert_eq!(id.rank_at_point(&[f.elem(0), f.elem(9)]).unwrap(), 4);
        let zero = PolyMatrix::from_rows(vec![vec![MultiPoly::zero(f, 2); 3]; 3]).unwrap();
        assert_eq!(zero.rank_at_point(&[f.elem(4), f.elem(9)]).unwrap(), 0);
        assert!(m.rank_at_point(&[f.elem(1)]).is_err());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let p = 13;
        let m = vec![vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, 1, 0]];
        let ker = kernel_mod_p(&m, p);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for row in &m {
                let s = row
                    .iter()
                    .zip(v)
                    .fold(0u32, |acc, (a, b)| (acc + mul_mod(*a, *b, p)) % p);
                assert_eq!(s, 0);
            }
        }
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(
            subsets(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(subsets(3, 3).len(), 1);
    }
}
