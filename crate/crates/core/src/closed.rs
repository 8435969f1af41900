//! Closed forms for Q(R): partition counts for the classical series, the
//! dihedral formula and the exceptional constants.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::roots::{CartanType, Family, Label};

/// Partition counts for `0..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTable {
    n_max: usize,
    p_all: Vec<BigUint>,
    p_odd: Vec<BigUint>,
    p_even_evens: Vec<BigUint>,
}

impl PartitionTable {
    pub fn new(n_max: usize) -> PartitionTable {
        let len = n_max + 1;
        let mut p_all = vec![BigUint::one(); 1];
        p_all.resize(len, BigUint::default());
        let mut p_odd = p_all.clone();
        // partitions with an even / odd number of even parts
        let mut ee = p_all.clone();
        let mut oe = vec![BigUint::default(); len];

        for k in 1..len {
            for n in k..len {
                let add = p_all[n - k].clone();
                p_all[n] += add;
                if k % 2 == 1 {
                    let add = p_odd[n - k].clone();
                    p_odd[n] += add;
                    let (a, b) = (ee[n - k].clone(), oe[n - k].clone());
                    ee[n] += a;
                    oe[n] += b;
                } else {
                    // one more even part flips the parity
                    let (a, b) = (oe[n - k].clone(), ee[n - k].clone());
                    ee[n] += a;
                    oe[n] += b;
                }
            }
        }
        PartitionTable {
            n_max,
            p_all,
            p_odd,
            p_even_evens: ee,
        }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn p_all(&self, n: usize) -> &BigUint {
        &self.p_all[n]
    }

    pub fn p_odd(&self, n: usize) -> &BigUint {
        &self.p_odd[n]
    }

    pub fn p_even_evens(&self, n: usize) -> &BigUint {
        &self.p_even_evens[n]
    }
}

fn non_negative(n: i64) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::Negative(n))
}

/// Partitions of `n` into odd parts.
pub fn p_odd(n: i64) -> Result<BigUint> {
    let n = non_negative(n)?;
    Ok(PartitionTable::new(n).p_odd[n].clone())
}

/// Unrestricted partitions of `n`.
pub fn p_all(n: i64) -> Result<BigUint> {
    let n = non_negative(n)?;
    Ok(PartitionTable::new(n).p_all[n].clone())
}

/// Partitions of `n` with an even number of even parts.
pub fn p_even_evens(n: i64) -> Result<BigUint> {
    let n = non_negative(n)?;
    Ok(PartitionTable::new(n).p_even_evens[n].clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DihedralClassKind {
    /// Rotation by `2πk/n`, conjugate to rotation by `−2πk/n`.
    Rotation { k: u64 },
    /// Reflections. `coset` is 0 or 1; the second class exists only for even n.
    Reflections { coset: u8 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DihedralClass {
    pub kind: DihedralClassKind,
    pub size: u64,
    /// Dimension of the −1 eigenspace in the plane.
    pub e_grade: usize,
}

/// Conjugacy classes of the dihedral group of order `2n`, with their
/// sizes and −1 eigenspace dimensions.
pub fn dihedral_classes(n: i64) -> Result<Vec<DihedralClass>> {
    if n < 2 {
        return Err(Error::InvalidRank {
            family: "I2".into(),
            rank: n.clamp(0, u32::MAX as i64) as u32,
        });
    }
    let n = n as u64;
    let mut out = Vec::new();
    for k in 0..=n / 2 {
        let half_turn = 2 * k == n;
        out.push(DihedralClass {
            kind: DihedralClassKind::Rotation { k },
            size: if k == 0 || half_turn { 1 } else { 2 },
            // eigenvalues exp(±2πik/n) are both −1 exactly at the half turn
            e_grade: if half_turn { 2 } else { 0 },
        });
    }
    // s·r^j ~ s·r^(j+2) always; s ~ s·r only when n is odd
    let cosets: u8 = if n.is_multiple_of(2) { 2 } else { 1 };
    for coset in 0..cosets {
        out.push(DihedralClass {
            kind: DihedralClassKind::Reflections { coset },
            size: n / cosets as u64,
            e_grade: 1,
        });
    }
    Ok(out)
}

/// Q for the dihedral group I2(n), counted on the class model.
pub fn q_dihedral(n: i64) -> Result<u64> {
    Ok(dihedral_classes(n)?
        .iter()
        .filter(|c| c.e_grade == 0)
        .count() as u64)
}

/// Q for an irreducible type.
pub fn q_closed(ty: CartanType) -> Result<BigUint> {
    let n = ty.n() as i64;
    Ok(match ty.family() {
        Family::A => p_odd(n + 1)?,
        Family::B | Family::C | Family::BC => p_all(n)?,
        Family::D => p_even_evens(n)?,
        Family::E6 => 9u32.into(),
        Family::E7 => 12u32.into(),
        Family::E8 => 30u32.into(),
        Family::F4 => 9u32.into(),
        Family::G2 => 3u32.into(),
        Family::H3 => 4u32.into(),
        Family::H4 => 20u32.into(),
        Family::I2 => q_dihedral(n)?.into(),
    })
}

/// Q for a direct sum: the product over the components.
pub fn q_closed_label(label: &Label) -> Result<BigUint> {
    match label {
        Label::Cartan(parts) => parts
            .iter()
            .try_fold(BigUint::one(), |acc, &t| Ok(acc * q_closed(t)?)),
        Label::Custom(name) => Err(Error::InvalidType(name.clone())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        n.into()
    }

    /// Every partition of `n` as a non-increasing list of parts.
    fn partitions(n: usize) -> Vec<Vec<usize>> {
        fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if n == 0 {
                out.push(cur.clone());
                return;
            }
            for part in (1..=max.min(n)).rev() {
                cur.push(part);
                go(n - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    fn evens(p: &[usize]) -> usize {
        p.iter().filter(|&&x| x % 2 == 0).count()
    }

    /// Truncated power series product of `1/(1 − s·x^k)` over the given parts,
    /// with signed integer coefficients.
    fn series(parts: impl Iterator<Item = usize>, sign: i128, n_max: usize) -> Vec<i128> {
        let mut acc = vec![0i128; n_max + 1];
        acc[0] = 1;
        for k in parts {
            let mut factor = vec![0i128; n_max + 1];
            let mut j = 0;
            let mut c = 1i128;
            while j * k <= n_max {
                factor[j * k] = c;
                c *= sign;
                j += 1;
            }
            let mut next = vec![0i128; n_max + 1];
            for (a, &x) in acc.iter().enumerate() {
                for (b, &y) in factor.iter().enumerate().take(n_max + 1 - a) {
                    next[a + b] += x * y;
                }
            }
            acc = next;
        }
        acc
    }

    #[test]
    fn examples() {
        assert_eq!(p_odd(3).unwrap(), big(2));
        assert_eq!(p_odd(0).unwrap(), big(1));
        assert_eq!(p_odd(8).unwrap(), big(6));
        assert_eq!(p_all(2).unwrap(), big(2));
        assert_eq!(p_all(5).unwrap(), big(7));
        assert_eq!(p_all(1).unwrap(), big(1));
        assert_eq!(p_even_evens(4).unwrap(), big(3));
        assert_eq!(p_even_evens(2).unwrap(), big(1));
        assert_eq!(p_even_evens(3).unwrap(), big(2));
        assert_eq!(q_dihedral(6).unwrap(), 3);
        assert_eq!(q_dihedral(4).unwrap(), 2);
        assert_eq!(q_dihedral(3).unwrap(), 2);
    }

    #[test]
    fn negative_and_small_arguments_fail() {
        assert!(matches!(p_odd(-1), Err(Error::Negative(-1))));
        assert!(matches!(p_all(-5), Err(Error::Negative(-5))));
        assert!(matches!(p_even_evens(-2), Err(Error::Negative(-2))));
        assert!(q_dihedral(1).is_err());
        assert!(q_dihedral(-3).is_err());
    }

    #[test]
    fn table_values() {
        let c = |s: &str| q_closed(s.parse().unwrap()).unwrap();
        assert_eq!(c("E8"), big(30));
        assert_eq!(c("H4"), big(20));
        assert_eq!(c("A4"), big(3));
        assert_eq!(c("E6"), big(9));
        assert_eq!(c("E7"), big(12));
        assert_eq!(c("F4"), big(9));
        assert_eq!(c("G2"), big(3));
        assert_eq!(c("H3"), big(4));
        assert_eq!(c("BC3"), c("B3"));
        assert_eq!(c("C3"), c("B3"));
        assert_eq!(c("I2(5)"), big(3));
        assert_eq!(q_closed_label(&"A2+B2".parse().unwrap()).unwrap(), big(4));
        assert!(q_closed_label(&Label::Custom("x".into())).is_err());
    }

    #[test]
    fn known_large_values() {
        assert_eq!(p_all(100).unwrap(), big(190_569_292));
        assert_eq!(
            p_all(1000).unwrap().to_string(),
            "24061467864032622473692149727991"
        );
    }

    #[test]
    fn agrees_with_enumeration() {
        let t = PartitionTable::new(22);
        for n in 0..=22 {
            let ps = partitions(n);
            assert_eq!(*t.p_all(n), big(ps.len() as u64), "p_all({n})");
            let odd = ps.iter().filter(|p| p.iter().all(|x| x % 2 == 1)).count();
            assert_eq!(*t.p_odd(n), big(odd as u64), "p_odd({n})");
            let ee = ps.iter().filter(|p| evens(p).is_multiple_of(2)).count();
            assert_eq!(*t.p_even_evens(n), big(ee as u64), "p_even_evens({n})");
        }
    }

    #[test]
    fn generating_functions() {
        let n_max = 90;
        let t = PartitionTable::new(n_max);
        let odd = series((1..=n_max).step_by(2), 1, n_max);
        let all = series(1..=n_max, 1, n_max);
        let even_plus = series((2..=n_max).step_by(2), 1, n_max);
        let even_minus = series((2..=n_max).step_by(2), -1, n_max);
        // ½(Π 1/(1−x^k) ± Π 1/(1+x^k)) over even k splits by parity of the even parts
        let half: Vec<i128> = even_plus
            .iter()
            .zip(&even_minus)
            .map(|(a, b)| (a + b) / 2)
            .collect();
        let other: Vec<i128> = even_plus
            .iter()
            .zip(&even_minus)
            .map(|(a, b)| (a - b) / 2)
            .collect();
        let mul = |x: &[i128], y: &[i128]| -> Vec<i128> {
            (0..=n_max)
                .map(|n| (0..=n).map(|i| x[i] * y[n - i]).sum())
                .collect()
        };
        let ee = mul(&odd, &half);
        let oe = mul(&odd, &other);
        for n in 0..=n_max {
            assert_eq!(t.p_odd(n).to_string(), odd[n].to_string());
            assert_eq!(t.p_all(n).to_string(), all[n].to_string());
            assert_eq!(t.p_even_evens(n).to_string(), ee[n].to_string());
            // complementary count closes up to p_all
            assert_eq!(ee[n] + oe[n], all[n]);
        }
    }

    #[test]
    fn table_invariants() {
        let t = PartitionTable::new(200);
        assert_eq!(*t.p_all(0), big(1));
        assert_eq!(*t.p_odd(0), big(1));
        assert_eq!(*t.p_even_evens(0), big(1));
        for n in 0..=200 {
            assert!(*t.p_odd(n) > big(0));
            assert!(*t.p_even_evens(n) > big(0));
            assert!(t.p_odd(n) <= t.p_all(n));
            assert!(t.p_even_evens(n) <= t.p_all(n));
        }
    }

    #[test]
    fn dihedral_model() {
        for n in 2..=1000i64 {
            let classes = dihedral_classes(n).unwrap();
            assert_eq!(classes.iter().map(|c| c.size).sum::<u64>(), 2 * n as u64);
            let expected_classes = if n % 2 == 0 { n / 2 + 3 } else { (n + 3) / 2 };
            assert_eq!(classes.len() as i64, expected_classes);
            assert_eq!(q_dihedral(n).unwrap() as i64, (n + 1) / 2, "n = {n}");
        }
    }
}
