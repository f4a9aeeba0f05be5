//! Arithmetic in the cyclotomic field `Q[zeta]/Phi_d(zeta)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::CoeffError;

/// Euler totient of `d`.
pub fn euler_phi(d: u32) -> usize {
    let mut n = d;
    let mut result = d;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if n > 1 {
        result = result / n * (n - 1);
    }
    result as usize
}

/// Exact division of integer polynomials, ascending coefficients.
/// The divisor must be monic and the division must be exact.
fn poly_div_exact(num: &[i128], den: &[i128]) -> Vec<i128> {
    debug_assert_eq!(*den.last().unwrap(), 1);
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![0i128; qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (i, dc) in den.iter().enumerate() {
                rem[k + i] -= c * dc;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// Coefficients of the d-th cyclotomic polynomial, ascending, monic.
///
/// Computed by exact division of `x^d - 1` by the cyclotomic polynomials
/// of the proper divisors of `d`.
pub fn cyclotomic_poly(d: u32) -> Vec<i128> {
    assert!(d >= 1, "cyclotomic order must be positive");
    if d == 1 {
        return vec![-1, 1];
    }
    let mut num = vec![0i128; d as usize + 1];
    num[0] = -1;
    num[d as usize] = 1;
    for e in 1..d {
        if d % e == 0 {
            let phi_e = cyclotomic_poly(e);
            num = poly_div_exact(&num, &phi_e);
        }
    }
    num
}

fn r_zero() -> BigRational {
    BigRational::zero()
}

fn r_int(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// An element of the cyclotomic field of order `d`, written in the power
/// basis `1, zeta, ..., zeta^(phi(d)-1)` with rational coordinates.
///
/// Order 1 encodes a plain rational; such values promote automatically
/// when combined with any other order. Two distinct orders larger than 1
/// never mix.
#[derive(Clone, Debug)]
pub struct CycNumber {
    d: u32,
    coords: Vec<BigRational>,
}

impl CycNumber {
    /// The zero of the rationals (order 1).
    pub fn zero() -> Self {
        CycNumber {
            d: 1,
            coords: vec![r_zero()],
        }
    }

    /// The unit of the rationals (order 1).
    pub fn one() -> Self {
        CycNumber {
            d: 1,
            coords: vec![BigRational::one()],
        }
    }

    /// A plain rational, encoded at order 1.
    pub fn rational(r: BigRational) -> Self {
        CycNumber {
            d: 1,
            coords: vec![r],
        }
    }

    /// A rational from an integer.
    pub fn integer(k: i64) -> Self {
        Self::rational(r_int(k))
    }

    /// A rational `p/q`.
    pub fn fraction(p: i64, q: i64) -> Self {
        assert!(q != 0);
        Self::rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// The chosen primitive d-th root of unity.
    pub fn zeta(d: u32) -> Self {
        Self::zeta_pow(d, 1)
    }

    /// `zeta^k` at order `d`, with `k` taken modulo `d`.
    pub fn zeta_pow(d: u32, k: i64) -> Self {
        assert!(d >= 1);
        let k = k.rem_euclid(d as i64) as usize;
        let mut raw = vec![r_zero(); k + 1];
        raw[k] = BigRational::one();
        CycNumber {
            d,
            coords: reduce_mod_phi(d, raw),
        }
    }

    /// The enumerated d-th root of unity `xi_a := zeta^(a-1)`, `1 <= a <= d`.
    pub fn xi(d: u32, a: u32) -> Self {
        assert!((1..=d).contains(&a), "root index {a} out of range 1..={d}");
        Self::zeta_pow(d, a as i64 - 1)
    }

    /// Cyclotomic order carried by this number.
    pub fn order(&self) -> u32 {
        self.d
    }

    /// Power-basis coordinates, length `phi(d)`.
    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, if all higher power-basis coordinates vanish.
    pub fn try_rational(&self) -> Option<BigRational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// Re-encode at order 1 when the value is rational.
    pub fn demote(&self) -> Option<CycNumber> {
        self.try_rational().map(CycNumber::rational)
    }

    /// Embed into order `d`. Only order-1 values can change order.
    pub fn promote_to(&self, d: u32) -> Result<CycNumber, CoeffError> {
        if self.d == d {
            return Ok(self.clone());
        }
        if self.d == 1 {
            let mut coords = vec![r_zero(); euler_phi(d)];
            coords[0] = self.coords[0].clone();
            return Ok(CycNumber { d, coords });
        }
        Err(CoeffError::OrderMismatch {
            left: self.d,
            right: d,
        })
    }

    fn unify(&self, other: &CycNumber) -> Result<(CycNumber, CycNumber), CoeffError> {
        if self.d == other.d {
            Ok((self.clone(), other.clone()))
        } else if self.d == 1 {
            Ok((self.promote_to(other.d)?, other.clone()))
        } else if other.d == 1 {
            Ok((self.clone(), other.promote_to(self.d)?))
        } else {
            Err(CoeffError::OrderMismatch {
                left: self.d,
                right: other.d,
            })
        }
    }

    pub fn checked_add(&self, other: &CycNumber) -> Result<CycNumber, CoeffError> {
        let (mut a, b) = self.unify(other)?;
        for (x, y) in a.coords.iter_mut().zip(b.coords.iter()) {
            *x += y;
        }
        Ok(a)
    }

    pub fn checked_sub(&self, other: &CycNumber) -> Result<CycNumber, CoeffError> {
        let (mut a, b) = self.unify(other)?;
        for (x, y) in a.coords.iter_mut().zip(b.coords.iter()) {
            *x -= y;
        }
        Ok(a)
    }

    pub fn checked_mul(&self, other: &CycNumber) -> Result<CycNumber, CoeffError> {
        let (a, b) = self.unify(other)?;
        let mut raw = vec![r_zero(); a.coords.len() + b.coords.len() - 1];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        Ok(CycNumber {
            d: a.d,
            coords: reduce_mod_phi(a.d, raw),
        })
    }

    pub fn neg(&self) -> CycNumber {
        CycNumber {
            d: self.d,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    ///
    /// Solves the phi(d) by phi(d) linear system whose columns are the
    /// products `self * zeta^j`, by Gaussian elimination over the
    /// rationals. The system is invertible exactly when `self` is nonzero
    /// because the ambient ring is a field.
    pub fn inverse(&self) -> Option<CycNumber> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.try_rational() {
            let mut out = self.clone();
            out.coords[0] = BigRational::one() / r;
            for c in out.coords[1..].iter_mut() {
                *c = r_zero();
            }
            return Some(out);
        }
        let phi = self.coords.len();
        // Columns: coordinates of self * zeta^j.
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(phi);
        let mut cur = self.clone();
        for _ in 0..phi {
            cols.push(cur.coords.clone());
            let mut raw = vec![r_zero(); cur.coords.len() + 1];
            for (i, c) in cur.coords.iter().enumerate() {
                raw[i + 1] = c.clone();
            }
            cur = CycNumber {
                d: self.d,
                coords: reduce_mod_phi(self.d, raw),
            };
        }
        // Augmented system M * v = e_0, M[i][j] = cols[j][i].
        let mut m: Vec<Vec<BigRational>> = (0..phi)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..phi).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { BigRational::one() } else { r_zero() });
                row
            })
            .collect();
        for col in 0..phi {
            let pivot = (col..phi).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, pivot);
            let p = m[col][col].clone();
            for c in col..=phi {
                let val = &m[col][c] / &p;
                m[col][c] = val;
            }
            for r in 0..phi {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..=phi {
                        let val = &m[r][c] - &f * &m[col][c];
                        m[r][c] = val;
                    }
                }
            }
        }
        let coords = (0..phi).map(|i| m[i][phi].clone()).collect();
        Some(CycNumber { d: self.d, coords })
    }

    /// Integer power, with negative exponents through the field inverse.
    pub fn pow(&self, k: i64) -> Option<CycNumber> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = CycNumber::one().promote_to(self.d).ok()?;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&sq).ok()?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.checked_mul(&sq).ok()?;
            }
        }
        Some(acc)
    }
}

/// Remainder of an ascending coefficient vector modulo `Phi_d`, padded to
/// length `phi(d)`.
fn reduce_mod_phi(d: u32, mut raw: Vec<BigRational>) -> Vec<BigRational> {
    let phi = euler_phi(d);
    if raw.len() > phi {
        let modulus = cyclotomic_poly(d);
        for k in (phi..raw.len()).rev() {
            if raw[k].is_zero() {
                continue;
            }
            let c = core::mem::replace(&mut raw[k], r_zero());
            // x^k = x^(k-phi) * (x^phi - Phi_d) mod Phi_d
            for (i, mc) in modulus[..phi].iter().enumerate() {
                if *mc != 0 {
                    let delta = &c * r_int(*mc as i64);
                    raw[k - phi + i] -= delta;
                }
            }
        }
    }
    raw.truncate(phi);
    while raw.len() < phi {
        raw.push(r_zero());
    }
    raw
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.d == other.d {
            return self.coords == other.coords;
        }
        match (self.try_rational(), other.try_rational()) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for CycNumber {}

impl fmt::Display for CycNumber {
    /// Renders as a polynomial in `z` (the fixed primitive root), e.g.
    /// `1 - z + 2*z^3`. Used inside the parenthesized coefficient blocks
    /// of the polynomial printer.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag_is_one = mag.is_one();
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag_is_one {
                    write!(f, "{mag}*")?;
                }
                if k == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totient_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(2), 1);
        assert_eq!(euler_phi(3), 2);
        assert_eq!(euler_phi(4), 2);
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn cyclotomic_coefficients() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn minus_one_squares_to_one_at_order_two() {
        let z = CycNumber::zeta(2);
        assert_eq!(z.checked_mul(&z).unwrap(), CycNumber::one());
    }

    #[test]
    fn zeta_squared_at_order_three() {
        // Phi_3 = z^2 + z + 1, so z * z = -1 - z.
        let z = CycNumber::zeta(3);
        let zz = z.checked_mul(&z).unwrap();
        assert_eq!(zz.coords(), &[r_int(-1), r_int(-1)]);
    }

    #[test]
    fn reduced_product_is_one_at_order_three() {
        // (1 + z) * (1 + z^2) = 1, after reducing z^2 = -1 - z.
        let one = CycNumber::one().promote_to(3).unwrap();
        let a = one.checked_add(&CycNumber::zeta(3)).unwrap();
        let b = one.checked_add(&CycNumber::zeta_pow(3, 2)).unwrap();
        assert_eq!(a.checked_mul(&b).unwrap(), CycNumber::one());
    }

    #[test]
    fn phi_vanishes_on_zeta_up_to_six() {
        for d in 1..=6u32 {
            let phi = cyclotomic_poly(d);
            let mut acc = CycNumber::zero().promote_to(d).unwrap();
            for (k, c) in phi.iter().enumerate() {
                let term = CycNumber::integer(*c as i64)
                    .checked_mul(&CycNumber::zeta_pow(d, k as i64))
                    .unwrap();
                acc = acc.checked_add(&term).unwrap();
            }
            assert!(acc.is_zero(), "Phi_{d} does not vanish on zeta_{d}");
        }
    }

    #[test]
    fn inverse_of_one_plus_zeta() {
        let one = CycNumber::one().promote_to(5).unwrap();
        let a = one.checked_add(&CycNumber::zeta(5)).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.checked_mul(&inv).unwrap(), CycNumber::one());
    }

    #[test]
    fn order_mismatch_is_reported() {
        let a = CycNumber::zeta(3);
        let b = CycNumber::zeta(4);
        assert!(matches!(
            a.checked_mul(&b),
            Err(CoeffError::OrderMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn rational_values_compare_across_orders() {
        let half_at_three = CycNumber::fraction(1, 2).promote_to(3).unwrap();
        assert_eq!(half_at_three, CycNumber::fraction(1, 2));
        assert_eq!(half_at_three.demote().unwrap().order(), 1);
    }

    #[test]
    fn display_power_basis() {
        let one = CycNumber::one().promote_to(4).unwrap();
        let val = one.checked_add(&CycNumber::zeta(4).neg()).unwrap();
        assert_eq!(alloc::format!("{val}"), "1 - z");
        assert_eq!(alloc::format!("{}", CycNumber::zeta(4)), "z");
    }
}
