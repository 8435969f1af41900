use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::Scalar;

/// Polynomial in one variable `t` over ℚ(√5), coefficients lowest degree first.
///
/// Trailing zero coefficients are always trimmed; the zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ExactPoly {
    coeffs: Vec<Scalar>,
}

impl ExactPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        ExactPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        ExactPoly::new(coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        ExactPoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        ExactPoly::new(vec![c])
    }

    /// `t − c`
    pub fn linear_root(c: &Scalar) -> Self {
        ExactPoly::new(vec![-c, Scalar::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| &(&acc * t) + c)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        ExactPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `tⁿ·p(1/t)` for `n = deg p`, i.e. the coefficient list reversed.
    ///
    /// Applied to `det(t·I − g)` this yields `det(I − t·g)`.
    pub fn reversed(&self, n: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.resize(n + 1, Scalar::zero());
        c.reverse();
        ExactPoly::new(c)
    }

    /// Quotient and remainder on division by `t − c`.
    pub fn div_linear(&self, c: &Scalar) -> (ExactPoly, Scalar) {
        if self.coeffs.is_empty() {
            return (ExactPoly::zero(), Scalar::zero());
        }
        let mut q = vec![Scalar::zero(); self.coeffs.len() - 1];
        let mut carry = Scalar::zero();
        for i in (0..self.coeffs.len()).rev() {
            let v = &self.coeffs[i] + &(&carry * c);
            if i == 0 {
                return (ExactPoly::new(q), v);
            }
            q[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Multiplicity of `c` as a root; the zero polynomial reports 0.
    pub fn root_multiplicity(&self, c: &Scalar) -> usize {
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() {
            let (q, r) = p.div_linear(c);
            if !r.is_zero() {
                break;
            }
            m += 1;
            p = q;
        }
        m
    }
}

impl Add for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        if self.is_zero() || rhs.is_zero() {
            return ExactPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(x * y);
            }
        }
        ExactPoly::new(out)
    }
}

/// Comma-separated coefficients, lowest degree first; `0` for the zero
/// polynomial.
impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl std::str::FromStr for ExactPoly {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        if s.trim() == "0" {
            return Ok(ExactPoly::zero());
        }
        s.split(',')
            .map(str::parse)
            .collect::<crate::Result<Vec<Scalar>>>()
            .map(ExactPoly::new)
    }
}

impl serde::Serialize for ExactPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for ExactPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
