use std::fmt;

/// Dense matrix over GF(q), or over the Boolean semiring when `q == 0`.
///
/// A morphism `A -> B` is stored with one row per element of `B` and one
/// column per element of `A`, so composition is the matrix product.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat {
    rows: usize,
    cols: usize,
    q: u8,
    data: Vec<u8>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize, q: u8) -> Mat {
        Mat { rows, cols, q, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize, q: u8) -> Mat {
        Mat::from_fn(n, n, q, |i, j| u8::from(i == j))
    }

    pub fn from_fn(rows: usize, cols: usize, q: u8, f: impl Fn(usize, usize) -> u8) -> Mat {
        let mut m = Mat::zeros(rows, cols, q);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 0 for the Boolean semiring.
    pub fn modulus(&self) -> u8 {
        self.q
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        let v = if self.q == 0 { u8::from(v != 0) } else { v % self.q };
        self.data[i * self.cols + j] = v;
    }

    fn add(&self, a: u8, b: u8) -> u8 {
        if self.q == 0 {
            a | b
        } else {
            ((a as u16 + b as u16) % self.q as u16) as u8
        }
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matrix shapes do not compose");
        assert_eq!(self.q, rhs.q, "matrices over different rings");
        let mut out = Mat::zeros(self.rows, rhs.cols, self.q);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                let row = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let dst = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                if self.q == 0 {
                    for (d, &b) in dst.iter_mut().zip(row) {
                        *d |= b;
                    }
                } else {
                    let q = self.q as u16;
                    for (d, &b) in dst.iter_mut().zip(row) {
                        *d = ((*d as u16 + a as u16 * b as u16) % q) as u8;
                    }
                }
            }
        }
        out
    }

    /// Kronecker product, row-major in the left factor.
    pub fn kron(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.q, rhs.q, "matrices over different rings");
        let (r, c) = (self.rows * rhs.rows, self.cols * rhs.cols);
        let mut out = Mat::zeros(r, c, self.q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let v = if self.q == 0 {
                            rhs.get(k, l)
                        } else {
                            ((a as u16 * rhs.get(k, l) as u16) % self.q as u16) as u8
                        };
                        out.data[(i * rhs.rows + k) * c + j * rhs.cols + l] = v;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, self.q, |i, j| self.get(j, i))
    }

    /// `self` above `below`.
    pub fn vstack(&self, below: &Mat) -> Mat {
        assert_eq!(self.cols, below.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        Mat { rows: self.rows + below.rows, cols: self.cols, q: self.q, data }
    }

    /// `self` left of `right`.
    pub fn hstack(&self, right: &Mat) -> Mat {
        assert_eq!(self.rows, right.rows);
        Mat::from_fn(self.rows, self.cols + right.cols, self.q, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                right.get(i, j - self.cols)
            }
        })
    }

    /// Entrywise sum.
    pub fn plus(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (d, &b) in out.data.iter_mut().zip(&rhs.data) {
            *d = self.add(*d, b);
        }
        out
    }

    /// For each column, the row of its single nonzero entry if that entry
    /// is 1 and the column has no other.
    pub fn as_function(&self) -> Option<Vec<usize>> {
        (0..self.cols)
            .map(|j| {
                let hits: Vec<usize> = (0..self.rows).filter(|&i| self.get(i, j) != 0).collect();
                match hits.as_slice() {
                    [i] if self.get(*i, j) == 1 => Some(*i),
                    _ => None,
                }
            })
            .collect()
    }

    /// Two-sided inverse: Gaussian elimination over GF(q), or the transpose
    /// of a permutation matrix over the Booleans.
    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if self.q == 0 {
            let f = self.as_function()?;
            let mut seen = vec![false; n];
            for &i in &f {
                if std::mem::replace(&mut seen[i], true) {
                    return None;
                }
            }
            return Some(self.transpose());
        }
        let q = self.q as u16;
        let inv_of = |a: u8| (1..q).find(|&b| (a as u16 * b) % q == 1).map(|b| b as u8);
        let mut a = self.clone();
        let mut b = Mat::identity(n, self.q);
        for col in 0..n {
            let pivot = (col..n).find(|&r| a.get(r, col) != 0)?;
            for j in 0..n {
                a.data.swap(col * n + j, pivot * n + j);
                b.data.swap(col * n + j, pivot * n + j);
            }
            let s = inv_of(a.get(col, col))?;
            for j in 0..n {
                let (x, y) = (a.get(col, j), b.get(col, j));
                a.set(col, j, ((x as u16 * s as u16) % q) as u8);
                b.set(col, j, ((y as u16 * s as u16) % q) as u8);
            }
            for r in 0..n {
                let factor = a.get(r, col);
                if r == col || factor == 0 {
                    continue;
                }
                for j in 0..n {
                    let sub = |m: &Mat, rr: usize| (q - (factor as u16 * m.get(rr, j) as u16) % q) % q;
                    let va = ((a.get(r, j) as u16 + sub(&a, col)) % q) as u8;
                    let vb = ((b.get(r, j) as u16 + sub(&b, col)) % q) as u8;
                    a.set(r, j, va);
                    b.set(r, j, vb);
                }
            }
        }
        Some(b)
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf3_inverse() {
        let m = Mat::from_fn(2, 2, 3, |i, j| [[1, 2], [0, 1]][i][j]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(2, 3));
        assert!(Mat::zeros(2, 2, 3).inverse().is_none());
    }

    #[test]
    fn boolean_inverse_needs_a_permutation() {
        let p = Mat::from_fn(2, 2, 0, |i, j| u8::from(i != j));
        assert_eq!(p.inverse().unwrap(), p);
        let r = Mat::from_fn(2, 2, 0, |i, j| u8::from(i <= j));
        assert!(r.inverse().is_none());
    }

    #[test]
    fn kron_shape() {
        let a = Mat::identity(2, 2);
        let b = Mat::from_fn(1, 3, 2, |_, j| (j % 2) as u8);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 6));
        assert_eq!(k.get(1, 4), 1);
        assert_eq!(k.get(0, 4), 0);
    }
}
