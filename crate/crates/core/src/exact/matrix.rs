use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{ExactPoly, Scalar};
use crate::error::{Error, Result};

/// Square matrix over ℚ(√5), row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    n: usize,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zero(n: usize) -> Self {
        ExactMatrix {
            n,
            data: vec![Scalar::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        ExactMatrix { n, data }
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        ExactMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(cols: &[Vec<Scalar>]) -> Self {
        let n = cols.len();
        Self::from_fn(n, |i, j| cols[j][i].clone())
    }

    pub fn diagonal(d: &[Scalar]) -> Self {
        Self::from_fn(
            d.len(),
            |i, j| if i == j { d[i].clone() } else { Scalar::zero() },
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let v = self.get(i, j);
                if i == j {
                    v.is_one()
                } else {
                    v.is_zero()
                }
            })
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Scalar {
        (0..self.n).fold(Scalar::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        ExactMatrix {
            n: self.n,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.n);
        (0..self.n).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `Mᵀ·M = I`, exactly.
    pub fn is_orthogonal(&self) -> bool {
        (&self.transpose() * self).is_identity()
    }

    /// Determinant by Bareiss elimination.
    pub fn det(&self) -> Scalar {
        let n = self.n;
        if n == 0 {
            return Scalar::one();
        }
        let mut m = self.rows();
        let mut negate = false;
        let mut prev = Scalar::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Scalar::zero();
                };
                m.swap(k, p);
                negate = !negate;
            }
            let prev_inv = prev.recip().expect("Bareiss pivot is nonzero");
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = &v * &prev_inv;
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    pub fn rank(&self) -> usize {
        rank_of(self.rows(), self.n)
    }

    /// Dimension of the kernel.
    pub fn nullity(&self) -> usize {
        self.n - self.rank()
    }

    /// Basis of the kernel `{x : M·x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        nullspace(&self.rows(), self.n)
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut m: Vec<Vec<Scalar>> = self
            .rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut r)| {
                r.extend((0..n).map(|j| {
                    if i == j {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                }));
                r
            })
            .collect();
        for c in 0..n {
            let p = (c..n)
                .find(|&i| !m[i][c].is_zero())
                .ok_or(Error::DivisionByZero)?;
            m.swap(c, p);
            let inv = m[c][c].recip()?;
            for x in m[c].iter_mut() {
                *x = &*x * &inv;
            }
            let pivot_row = m[c].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == c || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &(&f * p);
                }
            }
        }
        Ok(Self::from_rows(
            m.into_iter().map(|r| r[n..].to_vec()).collect(),
        ))
    }

    /// Monic characteristic polynomial `det(t·I − M)`.
    ///
    /// Reduces to upper Hessenberg form by elimination similarity transforms,
    /// then runs the Hessenberg determinant recurrence.
    pub fn char_poly(&self) -> ExactPoly {
        let n = self.n;
        let mut h = self.rows();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
                continue;
            };
            if i != m {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            let inv = h[m][m - 1].recip().expect("pivot is nonzero");
            for i in m + 1..n {
                if h[i][m - 1].is_zero() {
                    continue;
                }
                let u = &h[i][m - 1] * &inv;
                let pivot_row = h[m].clone();
                for (x, p) in h[i].iter_mut().zip(&pivot_row) {
                    *x -= &(&u * p);
                }
                for row in h.iter_mut() {
                    let add = &u * &row[i];
                    row[m] += &add;
                }
            }
        }

        let t = ExactPoly::from_ints(&[0, 1]);
        let mut p: Vec<ExactPoly> = Vec::with_capacity(n + 1);
        p.push(ExactPoly::constant(Scalar::one()));
        for m in 0..n {
            let mut next = &(&t - &ExactPoly::constant(h[m][m].clone())) * &p[m];
            let mut prod = Scalar::one();
            for i in (0..m).rev() {
                prod = &prod * &h[i + 1][i];
                if prod.is_zero() {
                    break;
                }
                let c = &h[i][m] * &prod;
                next = &next - &p[i].scale(&c);
            }
            p.push(next);
        }
        p.pop().expect("at least the constant polynomial")
    }
}

pub(crate) fn dot(x: &[Scalar], y: &[Scalar]) -> Scalar {
    x.iter()
        .zip(y)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
}

/// Row-reduces `rows` in place to reduced echelon form and returns the pivot
/// columns.
fn row_reduce(rows: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a list of row vectors of length `ncols`.
pub fn rank_of(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> usize {
    row_reduce(&mut rows, ncols).len()
}

/// Basis of `{x : rows·x = 0}` for a rectangular system.
pub fn nullspace(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut rows = rows.to_vec();
    let pivots = row_reduce(&mut rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); ncols];
            v[f] = Scalar::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&rows[r][f];
            }
            v
        })
        .collect()
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = ExactMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, rhs.n);
        ExactMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, rhs.n);
        ExactMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix {
            n: self.n,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn diag(d: &[i64]) -> ExactMatrix {
        ExactMatrix::diagonal(&d.iter().map(|&x| Scalar::from_int(x)).collect::<Vec<_>>())
    }

    /// Laplace expansion of det(t·I − M) over polynomial entries.
    fn char_poly_by_cofactors(m: &ExactMatrix) -> ExactPoly {
        fn det(rows: &[Vec<ExactPoly>]) -> ExactPoly {
            if rows.is_empty() {
                return ExactPoly::constant(Scalar::one());
            }
            let mut acc = ExactPoly::zero();
            for j in 0..rows.len() {
                let minor: Vec<Vec<ExactPoly>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &rows[0][j] * &det(&minor);
                acc = if j % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
        let n = m.dim();
        let rows: Vec<Vec<ExactPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let t = if i == j {
                            Scalar::one()
                        } else {
                            Scalar::zero()
                        };
                        ExactPoly::new(vec![-m.get(i, j), t])
                    })
                    .collect()
            })
            .collect();
        det(&rows)
    }

    #[test]
    fn char_poly_examples() {
        let id = ExactMatrix::identity(3);
        // (t-1)^3
        assert_eq!(id.char_poly(), ExactPoly::from_ints(&[-1, 3, -3, 1]));
        // (t+1)^2 (t-1) = t^3 + t^2 - t - 1
        assert_eq!(
            diag(&[-1, -1, 1]).char_poly(),
            ExactPoly::from_ints(&[-1, -1, 1, 1])
        );
        // rotation by 120 degrees: [[0,-1],[1,-1]] has t^2 + t + 1
        let rot = ExactMatrix::from_int_rows(&[&[0, -1], &[1, -1]]);
        assert_eq!(rot.char_poly(), ExactPoly::from_ints(&[1, 1, 1]));
    }

    #[test]
    fn nullity_examples() {
        let id = ExactMatrix::identity(3);
        assert_eq!((&id + &id).nullity(), 0);
        assert_eq!((&(-&id) + &id).nullity(), 3);
        assert_eq!((&diag(&[-1, -1, 1]) + &id).nullity(), 2);
    }

    #[test]
    fn det_examples() {
        assert_eq!(ExactMatrix::identity(4).det(), Scalar::one());
        let swap = ExactMatrix::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(swap.det(), Scalar::from_int(-1));
        let other = ExactMatrix::from_int_rows(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        assert_eq!((&swap * &other).det(), Scalar::one());
        let singular = ExactMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert!(singular.det().is_zero());
    }

    #[test]
    fn kernel_spans_nullspace() {
        let m = ExactMatrix::from_int_rows(&[&[1, 1, 0], &[0, 0, 0], &[2, 2, 0]]);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = ExactMatrix> {
        proptest::collection::vec((-4i64..5, -2i64..3), n * n).prop_map(move |v| {
            let mut it = v.into_iter();
            ExactMatrix::from_fn(n, |_, _| {
                let (a, b) = it.next().unwrap();
                Scalar::quadratic(a, 1, b, 2)
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn char_poly_matches_cofactor_expansion(m in (1usize..5).prop_flat_map(arb_matrix)) {
            prop_assert_eq!(m.char_poly(), char_poly_by_cofactors(&m));
        }

        #[test]
        fn det_is_constant_term_of_char_poly(m in (1usize..5).prop_flat_map(arb_matrix)) {
            let n = m.dim();
            let c0 = m.char_poly().coeff(0);
            let expected = if n % 2 == 0 { c0 } else { -c0 };
            prop_assert_eq!(m.det(), expected);
        }

        #[test]
        fn inverse_is_two_sided(m in (1usize..4).prop_flat_map(arb_matrix)) {
            prop_assume!(!m.det().is_zero());
            let inv = m.inverse().unwrap();
            prop_assert!((&m * &inv).is_identity());
            prop_assert!((&inv * &m).is_identity());
        }
    }
}
