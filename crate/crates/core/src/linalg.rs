//! Direct solvers for the assembled systems: Thomas elimination for the
//! tridiagonal 1D systems and banded LU with partial pivoting for the 2D
//! five- and nine-point systems in lexicographic ordering.

use crate::error::{Error, Result};

/// Tridiagonal system `sub[i]·x[i-1] + main[i]·x[i] + sup[i]·x[i+1] = rhs[i]`.
/// `sub[0]` and `sup[n-1]` are ignored.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalSystem {
    pub sub: Vec<f64>,
    pub main: Vec<f64>,
    pub sup: Vec<f64>,
    pub rhs: Vec<f64>,
}

impl TridiagonalSystem {
    pub fn zeros(n: usize) -> Self {
        Self {
            sub: vec![0.0; n],
            main: vec![0.0; n],
            sup: vec![0.0; n],
            rhs: vec![0.0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.main.len()
    }

    pub fn is_empty(&self) -> bool {
        self.main.is_empty()
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut acc = self.main[i] * x[i];
                if i > 0 {
                    acc += self.sub[i] * x[i - 1];
                }
                if i + 1 < n {
                    acc += self.sup[i] * x[i + 1];
                }
                acc
            })
            .collect()
    }

    /// `‖Ax - b‖∞ / max(‖b‖∞, ‖A‖∞‖x‖∞)`.
    pub fn relative_residual(&self, x: &[f64]) -> f64 {
        let ax = self.apply(x);
        let r = max_abs_diff(&ax, &self.rhs);
        let a_norm = (0..self.len())
            .map(|i| self.sub[i].abs() + self.main[i].abs() + self.sup[i].abs())
            .fold(0.0, f64::max);
        let scale = max_abs(&self.rhs).max(a_norm * max_abs(x));
        if scale == 0.0 {
            r
        } else {
            r / scale
        }
    }

    fn check(&self) -> Result<()> {
        let n = self.len();
        for (what, v) in [("sub", &self.sub), ("sup", &self.sup), ("rhs", &self.rhs)] {
            if v.len() != n {
                return Err(Error::SizeMismatch {
                    what,
                    got: v.len(),
                    expected: n,
                });
            }
        }
        Ok(())
    }
}

/// Thomas elimination. Fails on a zero or non-finite pivot.
pub fn solve_tridiagonal(sys: &TridiagonalSystem) -> Result<Vec<f64>> {
    sys.check()?;
    let n = sys.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    let mut pivot = sys.main[0];
    for i in 0..n {
        if i > 0 {
            pivot = sys.main[i] - sys.sub[i] * c[i - 1];
        }
        if pivot == 0.0 || !pivot.is_finite() {
            return Err(Error::ZeroPivot { row: i });
        }
        c[i] = if i + 1 < n { sys.sup[i] / pivot } else { 0.0 };
        d[i] = if i > 0 {
            (sys.rhs[i] - sys.sub[i] * d[i - 1]) / pivot
        } else {
            sys.rhs[i] / pivot
        };
    }
    let mut x = d;
    for i in (0..n - 1).rev() {
        x[i] -= c[i] * x[i + 1];
    }
    Ok(x)
}

/// Square band matrix with `kl` sub- and `ku` super-diagonals, stored by
/// rows with room for the `kl` extra super-diagonals pivoting creates.
#[derive(Debug, Clone)]
pub struct BandedMatrix {
    n: usize,
    kl: usize,
    ku: usize,
    width: usize,
    data: Vec<f64>,
}

impl BandedMatrix {
    pub fn zeros(n: usize, kl: usize, ku: usize) -> Self {
        let width = 2 * kl + ku + 1;
        Self {
            n,
            kl,
            ku,
            width,
            data: vec![0.0; n * width],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn offset(&self, row: usize, col: usize) -> usize {
        row * self.width + (col + self.kl - row)
    }

    /// Adds `value` at `(row, col)`; panics outside the declared band.
    pub fn add(&mut self, row: usize, col: usize, value: f64) {
        assert!(
            col + self.kl >= row && col <= row + self.ku,
            "({row}, {col}) outside band kl={} ku={}",
            self.kl,
            self.ku
        );
        let o = self.offset(row, col);
        self.data[o] += value;
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        if col + self.kl < row || col > row + self.ku {
            0.0
        } else {
            self.data[self.offset(row, col)]
        }
    }

    /// Gaussian elimination with partial pivoting; consumes the matrix.
    pub fn solve(mut self, rhs: &[f64]) -> Result<Vec<f64>> {
        let n = self.n;
        if rhs.len() != n {
            return Err(Error::SizeMismatch {
                what: "rhs",
                got: rhs.len(),
                expected: n,
            });
        }
        let (kl, ku, w) = (self.kl, self.ku, self.width);
        let mut b = rhs.to_vec();
        for j in 0..n {
            let last_row = (j + kl).min(n - 1);
            let last_col = (j + kl + ku).min(n - 1);
            let mut p = j;
            let mut best = self.data[self.offset(j, j)].abs();
            for r in j + 1..=last_row {
                let v = self.data[self.offset(r, j)].abs();
                if v > best {
                    best = v;
                    p = r;
                }
            }
            if best == 0.0 || !best.is_finite() {
                return Err(Error::ZeroPivot { row: j });
            }
            let len = last_col - j + 1;
            if p != j {
                let oj = self.offset(j, j);
                let op = self.offset(p, j);
                let (head, tail) = self.data.split_at_mut(op);
                head[oj..oj + len].swap_with_slice(&mut tail[..len]);
                b.swap(j, p);
            }
            let oj = self.offset(j, j);
            let pivot = self.data[oj];
            for r in j + 1..=last_row {
                let or = self.offset(r, j);
                let m = self.data[or] / pivot;
                if m == 0.0 {
                    continue;
                }
                let (head, tail) = self.data.split_at_mut(or);
                let pivot_row = &head[oj..oj + len];
                let row = &mut tail[..len];
                row[0] = 0.0;
                for (x, y) in row[1..].iter_mut().zip(&pivot_row[1..]) {
                    *x -= m * y;
                }
                b[r] -= m * b[j];
            }
        }
        let mut x = vec![0.0; n];
        for j in (0..n).rev() {
            let last_col = (j + kl + ku).min(n - 1);
            let oj = j * w + kl;
            let row = &self.data[oj..oj + (last_col - j + 1)];
            let acc: f64 = row[1..]
                .iter()
                .zip(&x[j + 1..=last_col])
                .map(|(a, v)| a * v)
                .sum();
            x[j] = (b[j] - acc) / row[0];
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                what: "banded solve result",
            });
        }
        Ok(x)
    }
}

pub(crate) fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

pub(crate) fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}
