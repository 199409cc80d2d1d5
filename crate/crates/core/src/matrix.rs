//! Exact matrix kernels: determinants of polynomial matrices and rational
//! nullspaces.
//!
//! Determinants feed the Casoratian constructions, so they must stay exact
//! for entries of moderate degree. Cofactor expansion wins for very small
//! sizes; Bareiss one-step fraction-free elimination keeps intermediate
//! growth polynomial beyond that.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::Poly;
use crate::rat::{integer_primitive, Rat};
use crate::Error;

/// Row-major matrix of polynomials.
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Poly>) -> Self {
        assert_eq!(rows * cols, data.len());
        PolyMatrix { rows, cols, data }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        PolyMatrix::new(n, n, data)
    }

    pub fn at(&self, i: usize, j: usize) -> &Poly {
        &self.data[i * self.cols + j]
    }

    /// Exact determinant. Errors on non-square input.
    pub fn det(&self) -> Result<Poly, Error> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        Ok(match n {
            0 => Poly::one(),
            1..=4 => det_cofactor(&self.data, n),
            _ => det_bareiss(self.data.clone(), n),
        })
    }
}

fn det_cofactor(data: &[Poly], n: usize) -> Poly {
    if n == 1 {
        return data[0].clone();
    }
    let mut acc = Poly::zero();
    for j in 0..n {
        let top = &data[j];
        if top.is_zero() {
            continue;
        }
        let mut minor = Vec::with_capacity((n - 1) * (n - 1));
        for i in 1..n {
            for k in 0..n {
                if k != j {
                    minor.push(data[i * n + k].clone());
                }
            }
        }
        let term = top * &det_cofactor(&minor, n - 1);
        if j % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// One-step Bareiss: every division below is exact by construction.
fn det_bareiss(mut m: Vec<Poly>, n: usize) -> Poly {
    let mut sign = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k * n + k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i * n + k].is_zero());
            match swap {
                Some(i) => {
                    for j in 0..n {
                        m.swap(k * n + j, i * n + j);
                    }
                    sign = !sign;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i * n + j] * &m[k * n + k]) - &(&m[i * n + k] * &m[k * n + j]);
                m[i * n + j] = t.div_exact(&prev);
            }
            m[i * n + k] = Poly::zero();
        }
        prev = m[k * n + k].clone();
    }
    let d = m[(n - 1) * n + (n - 1)].clone();
    if sign {
        -&d
    } else {
        d
    }
}

/// Row-major rational matrix, used for the operator-fitting linear systems.
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(rows * cols, data.len());
        RatMatrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix::new(rows, cols, vec![Rat::zero(); rows * cols])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    /// Basis of the right nullspace, each vector scaled to coprime integers
    /// with positive leading entry. Empty when the kernel is trivial.
    ///
    /// Rows are rescaled to integers up front and pivots chosen by largest
    /// absolute value to limit coefficient growth.
    #[allow(clippy::needless_range_loop)]
    pub fn nullspace(&self) -> Vec<Vec<BigInt>> {
        let rows = self.rows;
        let cols = self.cols;
        let mut m: Vec<Vec<Rat>> = (0..rows)
            .map(|i| {
                let row = &self.data[i * cols..(i + 1) * cols];
                let ints = integer_primitive(row);
                ints.into_iter().map(Rat::from_integer).collect()
            })
            .collect();

        let mut pivot_col_of_row = Vec::new();
        let mut r = 0usize;
        for c in 0..cols {
            if r == rows {
                break;
            }
            // partial pivoting by magnitude
            let mut best: Option<(usize, Rat)> = None;
            for i in r..rows {
                let a = m[i][c].abs();
                if !a.is_zero() && best.as_ref().is_none_or(|(_, b)| a > *b) {
                    best = Some((i, a));
                }
            }
            let Some((pi, _)) = best else { continue };
            m.swap(r, pi);
            let inv = m[r][c].clone().recip();
            for j in c..cols {
                let v = &m[r][j] * &inv;
                m[r][j] = v;
            }
            for i in 0..rows {
                if i == r || m[i][c].is_zero() {
                    continue;
                }
                let f = m[i][c].clone();
                for j in c..cols {
                    let v = &m[i][j] - &(&f * &m[r][j]);
                    m[i][j] = v;
                }
            }
            pivot_col_of_row.push(c);
            r += 1;
        }

        let pivot_cols: Vec<usize> = pivot_col_of_row;
        let is_pivot = {
            let mut v = vec![false; cols];
            for &c in &pivot_cols {
                v[c] = true;
            }
            v
        };

        let mut basis = Vec::new();
        for free in 0..cols {
            if is_pivot[free] {
                continue;
            }
            let mut vec_r = vec![Rat::zero(); cols];
            vec_r[free] = Rat::one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                vec_r[pc] = -m[row][free].clone();
            }
            let mut ints = integer_primitive(&vec_r);
            if let Some(first) = ints.iter().find(|v| !v.is_zero()) {
                if first.is_negative() {
                    for v in &mut ints {
                        *v = -&*v;
                    }
                }
            }
            basis.push(ints);
        }
        basis
    }

    /// `self * v` for a rational vector.
    #[allow(clippy::needless_range_loop)]
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut s = Rat::zero();
                for j in 0..self.cols {
                    let a = self.at(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        s += a * &v[j];
                    }
                }
                s
            })
            .collect()
    }
}

/// Determinant of a square rational matrix via Bareiss on a cleared
/// integer copy.
pub fn rat_det(m: &RatMatrix) -> Result<Rat, Error> {
    if m.rows != m.cols {
        return Err(Error::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(Rat::one());
    }
    // scale each row to integers, remembering the factor
    let mut scale = Rat::one();
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        let row: Vec<Rat> = (0..n).map(|j| m.at(i, j).clone()).collect();
        if row.iter().all(Zero::is_zero) {
            return Ok(Rat::zero());
        }
        let ints = integer_primitive(&row);
        // recover the per-row factor from the first nonzero entry
        let k = row.iter().position(|v| !v.is_zero()).unwrap();
        let f = &row[k] / Rat::from_integer(ints[k].clone());
        scale *= f;
        data.extend(ints.into_iter().map(|v| Poly::constant(Rat::from_integer(v))));
    }
    let d = if n <= 4 {
        det_cofactor(&data, n)
    } else {
        det_bareiss(data, n)
    };
    Ok(d.coeff(0) * scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_pq};

    fn c(v: i64) -> Poly {
        Poly::constant(rat(v))
    }

    #[test]
    fn det_small_sizes() {
        let m = PolyMatrix::new(2, 2, vec![c(1), c(2), c(3), c(4)]);
        assert_eq!(m.det().unwrap(), c(-2));
        let id3 = PolyMatrix::from_fn(3, |i, j| if i == j { c(1) } else { c(0) });
        assert_eq!(id3.det().unwrap(), c(1));
        assert!(PolyMatrix::new(1, 2, vec![c(1), c(2)]).det().is_err());
    }

    #[test]
    fn det_polynomial_entries() {
        // [[x, 1], [1, x]] -> x^2 - 1
        let x = Poly::x();
        let m = PolyMatrix::new(2, 2, vec![x.clone(), c(1), c(1), x.clone()]);
        assert_eq!(m.det().unwrap(), Poly::new(vec![rat(-1), rat(0), rat(1)]));
    }

    #[test]
    fn bareiss_matches_cofactor() {
        // Vandermonde in x+i of size 6 exercises the fraction-free path;
        // compare against the closed product at a sample point.
        let n = 6usize;
        let m = PolyMatrix::from_fn(n, |i, j| Poly::x().shift(&rat(i as i64)).pow(j as u32));
        let d = m.det().unwrap();
        // det is constant: prod_{i<j} (j - i)
        let mut expect = rat(1);
        for i in 0..n as i64 {
            for j in i + 1..n as i64 {
                expect *= rat(j - i);
            }
        }
        assert_eq!(d, Poly::constant(expect));
    }

    #[test]
    fn singular_matrix_det_zero() {
        let x = Poly::x();
        let m = PolyMatrix::new(
            3,
            3,
            vec![
                x.clone(),
                c(1),
                x.clone(),
                c(2),
                c(5),
                c(2),
                &x + &c(7),
                c(0),
                &x + &c(7),
            ],
        );
        assert_eq!(m.det().unwrap(), Poly::zero());
    }

    #[test]
    fn nullspace_simple() {
        // x + y + z = 0, x - z = 0 -> span{(1, -2, 1)}
        let m = RatMatrix::new(
            2,
            3,
            vec![rat(1), rat(1), rat(1), rat(1), rat(0), rat(-1)],
        );
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![1.into(), (-2).into(), 1.into()]);
        // verify membership
        let v: Vec<Rat> = ns[0].iter().map(|b| Rat::from_integer(b.clone())).collect();
        assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
    }

    #[test]
    fn nullspace_trivial_and_full() {
        let id = RatMatrix::new(2, 2, vec![rat(1), rat(0), rat(0), rat(1)]);
        assert!(id.nullspace().is_empty());
        let z = RatMatrix::zero(2, 2);
        assert_eq!(z.nullspace().len(), 2);
    }

    #[test]
    fn rational_determinant() {
        let m = RatMatrix::new(
            2,
            2,
            vec![rat_pq(1, 2), rat_pq(1, 3), rat_pq(1, 4), rat_pq(1, 5)],
        );
        assert_eq!(rat_det(&m).unwrap(), rat_pq(1, 10) - rat_pq(1, 12));
    }
}
