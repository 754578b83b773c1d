//! Dense matrices over an exact field.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

use crate::field::{Field, FieldError, ScalarText};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("ragged rows: row {} has {found} entries, expected {expected}", row + 1)]
    Ragged { row: usize, found: usize, expected: usize },
    #[error("empty matrix")]
    Empty,
    #[error(transparent)]
    Scalar(#[from] FieldError),
    #[error("malformed matrix JSON: {0}")]
    Json(String),
}

/// Row-major dense matrix. Value semantics throughout.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &F {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<F> Matrix<F> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<G>(&self, f: impl FnMut(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    fn same_shape(&self, other: &Self) -> Result<(), MatrixError> {
        if self.shape() == other.shape() {
            Ok(())
        } else {
            Err(MatrixError::DimensionMismatch { left: self.shape(), right: other.shape() })
        }
    }
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Result<Self, MatrixError> {
        if rows == 0 || cols == 0 {
            return Err(MatrixError::Empty);
        }
        if data.len() != rows * cols {
            return Err(MatrixError::DimensionMismatch { left: (rows, cols), right: (data.len(), 1) });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, MatrixError> {
        let expected = rows.first().map(Vec::len).ok_or(MatrixError::Empty)?;
        for (row, r) in rows.iter().enumerate() {
            if r.len() != expected {
                return Err(MatrixError::Ragged { row, found: r.len(), expected });
            }
        }
        let n = rows.len();
        Self::new(n, expected, rows.into_iter().flatten().collect())
    }

    /// Integer entries, mainly for literals in tests and generators.
    pub fn from_i64_rows<const C: usize>(rows: &[[i64; C]]) -> Self {
        let data = rows.iter().flatten().map(|&x| F::from_i64(x)).collect();
        Self::new(rows.len(), C, data).expect("non-empty literal")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.same_shape(rhs)?;
        Ok(self.zip_with(rhs, |a, b| a.clone() + b.clone()))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.same_shape(rhs)?;
        Ok(self.zip_with(rhs, |a, b| a.clone() - b.clone()))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::DimensionMismatch { left: self.shape(), right: rhs.shape() });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a.clone() * rhs[(k, j)].clone();
                    let cell = &mut out[(i, j)];
                    *cell = cell.clone() + t;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, lambda: &F) -> Self {
        self.map(|x| lambda.clone() * x.clone())
    }

    /// `ab − ba`
    pub fn commutator(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.try_mul(rhs)?.try_sub(&rhs.try_mul(self)?)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Result<F, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare(self.rows, self.cols));
        }
        Ok((0..self.rows).fold(F::zero(), |acc, i| acc + self[(i, i)].clone()))
    }

    pub fn row_sums(&self) -> Vec<F> {
        (0..self.rows).map(|i| self.row(i).iter().cloned().fold(F::zero(), |a, b| a + b)).collect()
    }

    pub fn col_sums(&self) -> Vec<F> {
        (0..self.cols).map(|j| (0..self.rows).fold(F::zero(), |a, i| a + self[(i, j)].clone())).collect()
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&F, &F) -> F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    /// Reduced row echelon form. Returns the reduced matrix and pivot columns.
    ///
    /// The pivot in each column is the first nonzero entry at or below the
    /// current row; no magnitude pivoting.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    let t = factor.clone() * m[(r, j)].clone();
                    m[(i, j)] = m[(i, j)].clone() - t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for k in 0..self.cols {
                self.data.swap(a * self.cols + k, b * self.cols + k);
            }
        }
    }

    pub fn apply(&self, x: &[F]) -> Result<Vec<F>, MatrixError> {
        if x.len() != self.cols {
            return Err(MatrixError::DimensionMismatch { left: self.shape(), right: (x.len(), 1) });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
            .collect())
    }
}

/// Outcome of [`solve_linear`].
#[derive(Clone, Debug, PartialEq)]
pub enum Solution<F> {
    Inconsistent,
    Unique(Vec<F>),
    /// `particular + span(nullspace)`
    Family {
        particular: Vec<F>,
        nullspace: Vec<Vec<F>>,
    },
}

impl<F> Solution<F> {
    pub fn particular(&self) -> Option<&[F]> {
        match self {
            Solution::Inconsistent => None,
            Solution::Unique(x) | Solution::Family { particular: x, .. } => Some(x),
        }
    }
}

/// Solve `a·x = b` exactly by Gauss–Jordan elimination on the augmented matrix.
pub fn solve_linear<F: Field>(a: &Matrix<F>, b: &[F]) -> Result<Solution<F>, MatrixError> {
    if b.len() != a.rows {
        return Err(MatrixError::DimensionMismatch { left: a.shape(), right: (b.len(), 1) });
    }
    let n = a.cols;
    let mut aug = Matrix::zeros(a.rows, n + 1);
    for i in 0..a.rows {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n)] = b[i].clone();
    }
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&n) {
        return Ok(Solution::Inconsistent);
    }
    let mut particular = vec![F::zero(); n];
    for (row, &c) in pivots.iter().enumerate() {
        particular[c] = r[(row, n)].clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        return Ok(Solution::Unique(particular));
    }
    let nullspace = free
        .iter()
        .map(|&fc| {
            let mut v = vec![F::zero(); n];
            v[fc] = F::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[(row, fc)].clone();
            }
            v
        })
        .collect();
    Ok(Solution::Family { particular, nullspace })
}

// Ambient operators. These panic on shape mismatch; use the `try_*` methods
// where shapes are not already known to agree.

impl<'a, F: Field> Add<&'a Matrix<F>> for &'a Matrix<F> {
    type Output = Matrix<F>;
    fn add(self, rhs: &Matrix<F>) -> Matrix<F> {
        self.try_add(rhs).expect("matrix addition")
    }
}

impl<'a, F: Field> Sub<&'a Matrix<F>> for &'a Matrix<F> {
    type Output = Matrix<F>;
    fn sub(self, rhs: &Matrix<F>) -> Matrix<F> {
        self.try_sub(rhs).expect("matrix subtraction")
    }
}

impl<'a, F: Field> Mul<&'a Matrix<F>> for &'a Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        self.try_mul(rhs).expect("matrix product")
    }
}

impl<F: Field> Neg for &Matrix<F> {
    type Output = Matrix<F>;
    fn neg(self) -> Matrix<F> {
        self.map(|x| -x.clone())
    }
}

// ---------------------------------------------------------------------------
// Text and JSON forms
// ---------------------------------------------------------------------------

/// `a,b,c;d,e,f`: rows separated by `;`, entries by `,`.
impl<F: fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ";")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
        }
        Ok(())
    }
}

impl<F: ScalarText> FromStr for Matrix<F> {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<Self, MatrixError> {
        let t = s.trim();
        if t.is_empty() {
            return Err(MatrixError::Empty);
        }
        let rows = t
            .split(';')
            .map(|row| row.split(',').map(|x| x.trim().parse::<F>()).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(rows)
    }
}

impl<F: ScalarText> Matrix<F> {
    /// JSON array of arrays of scalar strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|i| {
                    serde_json::Value::Array(
                        self.row(i).iter().map(|x| serde_json::Value::String(x.to_string())).collect(),
                    )
                })
                .collect(),
        )
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, MatrixError> {
        let rows: Vec<Vec<String>> =
            serde_json::from_value(value.clone()).map_err(|e| MatrixError::Json(e.to_string()))?;
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|x| x.parse::<F>()).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(rows)
    }

    /// Accepts either the text grammar or a JSON array (detected by a leading `[`).
    pub fn parse_any(s: &str) -> Result<Self, MatrixError> {
        if s.trim_start().starts_with('[') {
            let v: serde_json::Value = serde_json::from_str(s).map_err(|e| MatrixError::Json(e.to_string()))?;
            Self::from_json(&v)
        } else {
            s.parse()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Eisenstein, Rational};
    use num_traits::Zero;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type M = Matrix<Rational>;

    fn m(s: &str) -> M {
        s.parse().unwrap()
    }

    fn random_matrix(rng: &mut ChaCha8Rng, r: usize, c: usize) -> M {
        let data = (0..r * c).map(|_| Rational::random(rng, 7)).collect();
        M::new(r, c, data).unwrap()
    }

    #[test]
    fn permutation_product_is_identity() {
        let a00 = m("0,0,1;1,0,0;0,1,0");
        let a01 = m("0,1,0;0,0,1;1,0,0");
        assert_eq!(&a00 * &a01, M::identity(3));
    }

    #[test]
    fn scale_and_add_identities() {
        let x = m("1/2,-3;4,5/7");
        assert!(x.scale(&Rational::zero()).is_zero());
        assert_eq!(&x + &M::zeros(2, 2), x);
        assert_eq!(
            x.try_add(&M::zeros(3, 2)).unwrap_err(),
            MatrixError::DimensionMismatch { left: (2, 2), right: (3, 2) }
        );
        assert!(x.try_mul(&M::zeros(3, 3)).is_err());
    }

    #[test]
    fn trace_and_sums() {
        assert_eq!(M::identity(3).trace().unwrap(), Rational::from(3));
        assert_eq!(M::zeros(2, 3).trace(), Err(MatrixError::NotSquare(2, 3)));
        let one = Rational::from(1);
        assert_eq!(m("0,0,1;1,0,0;0,1,0").row_sums(), vec![one.clone(); 3]);
        assert_eq!(m("1,0,0;-1,0,2;1,1,-1").col_sums(), vec![one; 3]);
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let b: Vec<Rational> = vec![Rational::from(3), Rational::new(-1, 2).unwrap()];
        assert_eq!(solve_linear(&M::identity(2), &b).unwrap(), Solution::Unique(b.clone()));
        assert_eq!(solve_linear(&M::zeros(1, 1), &[Rational::from(1)]).unwrap(), Solution::Inconsistent);
        assert!(solve_linear(&M::identity(2), &b[..1]).is_err());
    }

    #[test]
    fn solve_underdetermined_family() {
        // x + y + z = 1, x - y = 0
        let a = m("1,1,1;1,-1,0");
        let b = vec![Rational::from(1), Rational::from(0)];
        let Solution::Family { particular, nullspace } = solve_linear(&a, &b).unwrap() else {
            panic!("expected a family");
        };
        assert_eq!(a.apply(&particular).unwrap(), b);
        assert_eq!(nullspace.len(), 1);
        assert!(a.apply(&nullspace[0]).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn ranks() {
        assert_eq!(M::identity(4).rank(), 4);
        assert_eq!(M::zeros(3, 3).rank(), 0);
        assert_eq!(m("1,2;2,4").rank(), 1);
    }

    #[test]
    fn text_round_trip_and_errors() {
        let x: Matrix<Eisenstein> = "1/3+2/3w,-w;0,5".parse().unwrap();
        assert_eq!(x.to_string(), "1/3+2/3w,-w;0,5");
        assert_eq!(x.to_string().parse::<Matrix<Eisenstein>>().unwrap(), x);
        assert_eq!("1,2;3".parse::<M>().unwrap_err(), MatrixError::Ragged { row: 1, found: 1, expected: 2 });
        assert!("".parse::<M>().is_err());
        assert!("1,x".parse::<M>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let x = m("0,1/2;-3,4");
        let j = x.to_json();
        assert_eq!(j, serde_json::json!([["0", "1/2"], ["-3", "4"]]));
        assert_eq!(M::from_json(&j).unwrap(), x);
        assert_eq!(M::parse_any(&j.to_string()).unwrap(), x);
        assert!(M::parse_any("[[\"1\"], [\"1\", \"2\"]]").is_err());
    }

    #[test]
    fn float_instance_multiplies() {
        let a = Matrix::<f64>::from_i64_rows(&[[1, 2], [3, 4]]);
        let b = Matrix::<f64>::identity(2);
        assert_eq!(&a * &b, a);
        assert_eq!(a.trace().unwrap(), 5.0);
    }

    #[test]
    fn ring_laws_sampled() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for k in 0..500 {
            let n = 3 + k % 2;
            let (a, b, c) =
                (random_matrix(&mut rng, n, n), random_matrix(&mut rng, n, n), random_matrix(&mut rng, n, n));
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            assert_eq!((&a * &b).trace().unwrap(), (&b * &a).trace().unwrap());
        }
    }

    #[test]
    fn rank_of_transpose_and_back_substitution() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for k in 0..200 {
            let (r, c) = (2 + k % 4, 2 + (k / 4) % 4);
            let mut a = random_matrix(&mut rng, r, c);
            if k % 3 == 0 {
                // force a dependent row
                for j in 0..c {
                    a[(r - 1, j)] = a[(0, j)].clone() + a[(0, j)].clone();
                }
            }
            assert_eq!(a.rank(), a.transpose().rank());
            let x: Vec<Rational> = (0..c).map(|_| Rational::random(&mut rng, 5)).collect();
            let b = a.apply(&x).unwrap();
            let sol = solve_linear(&a, &b).unwrap();
            let p = sol.particular().expect("consistent by construction");
            assert_eq!(a.apply(p).unwrap(), b);
            if let Solution::Family { nullspace, .. } = &sol {
                assert_eq!(nullspace.len(), c - a.rank());
                for v in nullspace {
                    assert!(a.apply(v).unwrap().iter().all(Zero::is_zero));
                }
            }
        }
    }
}
