//! Sparse multivariate Laurent polynomials with cyclotomic coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{CoeffError, CycNumber};

/// A polynomial variable.
///
/// The declaration order fixes the canonical variable order used by the
/// term order and the printer. `XParam { color, winding }` is the symbolic
/// trace parameter `x[color, winding]`; winding 0 is excluded because that
/// parameter is the constant 1 by definition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum VarId {
    /// Quadratic parameter `u`.
    U,
    /// Framing parameter `v`.
    V,
    /// Crossing deformation `gamma`.
    Gamma,
    /// HOMFLYPT variable `q`.
    Q,
    /// HOMFLYPT variable `z`.
    Z,
    /// Specialization variable `lambda` (appears in half powers).
    Lambda,
    /// Shorthand variable for `q - q^-1`.
    W,
    /// Trace parameter `x[color, winding]`, winding nonzero.
    XParam { color: u32, winding: i64 },
}

impl VarId {
    fn check(self) {
        if let VarId::XParam { winding, .. } = self {
            assert!(winding != 0, "trace parameter with winding 0 is the constant 1");
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::U => write!(f, "u"),
            VarId::V => write!(f, "v"),
            VarId::Gamma => write!(f, "gamma"),
            VarId::Q => write!(f, "q"),
            VarId::Z => write!(f, "z"),
            VarId::Lambda => write!(f, "lambda"),
            VarId::W => write!(f, "w"),
            VarId::XParam { color, winding } => write!(f, "x[{color},{winding}]"),
        }
    }
}

/// A Laurent monomial: sorted sparse list of `(variable, doubled exponent)`.
///
/// Exponents are stored doubled so half-integer powers (`lambda^(1/2)`)
/// stay exact. Zero exponents are never stored, so the derived
/// lexicographic `Ord` on the sparse pairs is a total term order with the
/// constant monomial first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial(Vec<(VarId, i32)>);

impl Monomial {
    /// The constant monomial.
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// `var^exp` for an integer exponent.
    pub fn var(v: VarId, exp: i32) -> Self {
        v.check();
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, 2 * exp)])
        }
    }

    /// `var^(half/2)` for an exponent given in half units.
    pub fn var_half(v: VarId, half: i32) -> Self {
        v.check();
        if half == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, half)])
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Sparse `(variable, doubled exponent)` pairs in variable order.
    pub fn factors(&self) -> &[(VarId, i32)] {
        &self.0
    }

    /// Merge two monomials, adding exponents.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                core::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    let e = self.0[i].1 + other.0[j].1;
                    if e != 0 {
                        out.push((self.0[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// The reciprocal monomial.
    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    /// Raise to an integer power.
    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    fn fmt_into(&self, out: &mut String) {
        use core::fmt::Write;
        for (idx, (v, e2)) in self.0.iter().enumerate() {
            if idx > 0 {
                out.push('*');
            }
            let _ = write!(out, "{v}");
            if *e2 == 2 {
                continue;
            }
            if e2 % 2 == 0 {
                let _ = write!(out, "^{}", e2 / 2);
            } else {
                let _ = write!(out, "^({}/2)", e2);
            }
        }
    }
}

/// A sparse Laurent polynomial: a map from monomials to nonzero
/// cyclotomic coefficients, in canonical term order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, CycNumber>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(CycNumber::one())
    }

    pub fn constant(c: CycNumber) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        LaurentPoly { terms }
    }

    pub fn integer(k: i64) -> Self {
        LaurentPoly::constant(CycNumber::integer(k))
    }

    pub fn fraction(p: i64, q: i64) -> Self {
        LaurentPoly::constant(CycNumber::fraction(p, q))
    }

    pub fn var(v: VarId) -> Self {
        LaurentPoly::var_pow(v, 1)
    }

    pub fn var_pow(v: VarId, exp: i32) -> Self {
        LaurentPoly::term(Monomial::var(v, exp), CycNumber::one())
    }

    pub fn term(mono: Monomial, coeff: CycNumber) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// The constant value, if no non-constant monomial appears.
    pub fn try_constant(&self) -> Option<CycNumber> {
        match self.terms.len() {
            0 => Some(CycNumber::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycNumber)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Add `coeff * mono` in place.
    pub fn add_term(&mut self, mono: Monomial, coeff: CycNumber) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&mono) {
            None => {
                self.terms.insert(mono, coeff);
            }
            Some(old) => {
                let sum = old
                    .checked_add(&coeff)
                    .expect("mixed cyclotomic orders in one polynomial");
                if !sum.is_zero() {
                    self.terms.insert(mono, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in self.terms.iter() {
            for (mb, cb) in other.terms.iter() {
                let c = ca
                    .checked_mul(cb)
                    .expect("mixed cyclotomic orders in one polynomial");
                out.add_term(ma.mul(mb), c);
            }
        }
        out
    }

    pub fn scale(&self, c: &CycNumber) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = LaurentPoly::zero();
        for (m, v) in self.terms.iter() {
            out.add_term(
                m.clone(),
                v.checked_mul(c)
                    .expect("mixed cyclotomic orders in one polynomial"),
            );
        }
        out
    }

    pub fn scale_mono(&self, mono: &Monomial) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), c.clone()))
                .collect(),
        }
    }

    /// Integer power. Negative exponents require a single invertible term;
    /// otherwise `None`.
    pub fn pow(&self, k: i64) -> Option<LaurentPoly> {
        if k < 0 {
            let inv = self.try_inverse()?;
            return inv.pow(-k);
        }
        let mut acc = LaurentPoly::one();
        let mut sq = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Some(acc)
    }

    /// Inverse of a single-term polynomial with invertible coefficient.
    pub fn try_inverse(&self) -> Option<LaurentPoly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        Some(LaurentPoly::term(m.inv(), c.inverse()?))
    }

    /// Simultaneous substitution of variables by polynomials. Variables
    /// absent from the map are kept. Fails when a negative power needs a
    /// non-invertible image, or a half power needs an image that is not a
    /// plain monomial with integer exponents.
    pub fn substitute(
        &self,
        map: &BTreeMap<VarId, LaurentPoly>,
    ) -> Result<LaurentPoly, CoeffError> {
        let mut out = LaurentPoly::zero();
        for (mono, coeff) in self.terms.iter() {
            let mut acc = LaurentPoly::constant(coeff.clone());
            for &(v, e2) in mono.factors() {
                let factor = match map.get(&v) {
                    None => LaurentPoly::term(Monomial::var_half(v, e2), CycNumber::one()),
                    Some(img) => {
                        if e2 % 2 == 0 {
                            img.pow(i64::from(e2 / 2))
                                .ok_or(CoeffError::NonInvertibleSubstitution(v))?
                        } else {
                            // Half power: the image must be a coefficient-1
                            // monomial with integer exponents.
                            let (im, ic) = match img.terms.len() {
                                1 => img.terms.iter().next().unwrap(),
                                _ => return Err(CoeffError::FractionalPower(v)),
                            };
                            if !ic.is_one() {
                                return Err(CoeffError::FractionalPower(v));
                            }
                            let mut half = Monomial::one();
                            for &(iv, ie2) in im.factors() {
                                if ie2 % 2 != 0 {
                                    return Err(CoeffError::FractionalPower(v));
                                }
                                half = half.mul(&Monomial::var_half(iv, ie2 / 2));
                            }
                            LaurentPoly::term(half.pow(e2), CycNumber::one())
                        }
                    }
                };
                acc = acc.mul(&factor);
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// Re-encode every coefficient at order 1 when all are rational.
    /// Used to compare polynomials computed at different cyclotomic orders.
    pub fn demote_rational(&self) -> Option<LaurentPoly> {
        let mut terms = BTreeMap::new();
        for (m, c) in self.terms.iter() {
            terms.insert(m.clone(), c.demote()?);
        }
        Some(LaurentPoly { terms })
    }

    /// Largest cyclotomic order appearing among the coefficients.
    pub fn coeff_order(&self) -> u32 {
        self.terms.values().map(|c| c.order()).max().unwrap_or(1)
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical string form. Terms appear in the canonical term order.
    /// Rational coefficients are sign-pulled (`a - b`), magnitude 1 is
    /// omitted next to a variable, and coefficients that genuinely involve
    /// the root of unity are parenthesized blocks in `z`, for example
    /// `(1 - z)*u`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        let mut first = true;
        for (mono, coeff) in self.terms.iter() {
            match coeff.try_rational() {
                Some(r) => {
                    let neg = r.is_negative();
                    let mag = r.abs();
                    if first {
                        if neg {
                            out.push('-');
                        }
                    } else if neg {
                        out.push_str(" - ");
                    } else {
                        out.push_str(" + ");
                    }
                    let show_mag = !mag.is_one() || mono.is_one();
                    if show_mag {
                        out.push_str(&fmt_rational(&mag));
                        if !mono.is_one() {
                            out.push('*');
                        }
                    }
                    mono.fmt_into(&mut out);
                }
                None => {
                    if !first {
                        out.push_str(" + ");
                    }
                    out.push('(');
                    out.push_str(&alloc::format!("{coeff}"));
                    out.push(')');
                    if !mono.is_one() {
                        out.push('*');
                        mono.fmt_into(&mut out);
                    }
                }
            }
            first = false;
        }
        f.write_str(&out)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        alloc::format!("{}", r.numer())
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

impl From<&str> for LaurentPoly {
    /// Convenience for tests: parses at order 1 and panics on error.
    fn from(s: &str) -> Self {
        super::parse_poly(s, 1).expect("invalid polynomial literal")
    }
}

impl core::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::add(self, rhs)
    }
}

impl core::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::sub(self, rhs)
    }
}

impl core::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::mul(self, rhs)
    }
}

impl core::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}
