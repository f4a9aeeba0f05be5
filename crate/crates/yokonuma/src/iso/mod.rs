//! block decomposition: the explicit isomorphism between the affine
//! algebra and a direct sum of matrix algebras whose entries are tensor
//! products of affine Hecke algebras, one tensor factor per color.
//!
//! Rows and columns are indexed by color vectors. The entry at
//! `(chi, chi')` is nonzero only when the two colorings have the same
//! multiplicities, and it is an affine Hecke element (a d = 1 element of
//! the same engine) supported on permutations that preserve the color
//! blocks of the sorted coloring.
//!
//! The forward map sends the basis element `E_chi X^lambda g_{w^{-1}}` to
//!
//! ```text
//! u^(len(w^{-1}) - len(s)) 1_{chi, w(chi)} Xbar^(pi_chi^{-1} lambda) gbar_s,
//! s = pi_chi^{-1} w^{-1} pi_{w(chi)}
//! ```
//!
//! where `pi_chi` is the block-sorting permutation of the coloring. The
//! inverse reads the same formula backwards, so both directions are exact.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{YElement, YKey};
use crate::coeff::{CycNumber, LaurentPoly, VarId};
use crate::combin::{Character, Perm};

/// A sparse matrix over the affine Hecke tensor algebras, with rows and
/// columns indexed by color vectors. Entries with equal color
/// multiplicities only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMatrix {
    d: u32,
    n: usize,
    entries: BTreeMap<(Character, Character), YElement>,
}

impl BlockMatrix {
    pub fn zero(d: u32, n: usize) -> Self {
        BlockMatrix {
            d,
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(d: u32, n: usize) -> Self {
        let mut out = Self::zero(d, n);
        for chi in Character::all(d, n) {
            out.add_entry(chi.clone(), chi, YElement::one(1, n));
        }
        out
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, row: &Character, col: &Character) -> Option<&YElement> {
        self.entries.get(&(row.clone(), col.clone()))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(Character, Character), &YElement)> {
        self.entries.iter()
    }

    pub fn add_entry(&mut self, row: Character, col: Character, el: YElement) {
        assert_eq!(el.d(), 1, "entries are colorless Hecke elements");
        assert_eq!(el.n(), self.n);
        debug_assert_eq!(row.mu(), col.mu(), "entry joins different blocks");
        if el.is_zero() {
            return;
        }
        let key = (row, col);
        match self.entries.remove(&key) {
            None => {
                self.entries.insert(key, el);
            }
            Some(old) => {
                let sum = old.add(&el);
                if !sum.is_zero() {
                    self.entries.insert(key, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &BlockMatrix) -> BlockMatrix {
        assert_eq!((self.d, self.n), (other.d, other.n));
        let mut out = self.clone();
        for ((r, c), el) in other.entries.iter() {
            out.add_entry(r.clone(), c.clone(), el.clone());
        }
        out
    }

    pub fn sub(&self, other: &BlockMatrix) -> BlockMatrix {
        self.add(&other.scale(&LaurentPoly::integer(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> BlockMatrix {
        let mut out = Self::zero(self.d, self.n);
        for ((r, col), el) in self.entries.iter() {
            out.add_entry(r.clone(), col.clone(), el.scale(c));
        }
        out
    }

    pub fn mul(&self, other: &BlockMatrix) -> BlockMatrix {
        assert_eq!((self.d, self.n), (other.d, other.n));
        let mut out = Self::zero(self.d, self.n);
        for ((r, mid), a) in self.entries.iter() {
            for ((mid2, c), b) in other.entries.iter() {
                if mid == mid2 {
                    out.add_entry(r.clone(), c.clone(), a.mul(b));
                }
            }
        }
        out
    }

    /// Diagonal entries, for trace functionals.
    pub fn diagonal(&self) -> impl Iterator<Item = (&Character, &YElement)> {
        self.entries
            .iter()
            .filter(|((r, c), _)| r == c)
            .map(|((r, _), el)| (r, el))
    }

    /// Validate the block support: every entry joins colorings with equal
    /// multiplicities and its permutations preserve the sorted color
    /// blocks; affine exponents stay inside the blocks trivially.
    pub fn block_structure_ok(&self) -> bool {
        self.entries.iter().all(|((r, c), el)| {
            if r.mu() != c.mu() {
                return false;
            }
            let mu = r.mu();
            el.terms().all(|(key, _)| perm_preserves_blocks(&key.w, &mu))
        })
    }
}

fn perm_preserves_blocks(w: &Perm, mu: &crate::combin::Composition) -> bool {
    (1..=mu.d()).all(|a| {
        let lo = mu.block_start(a);
        let hi = lo + mu.part(a);
        (lo..hi).all(|p| (lo..hi).contains(&w.apply(p)))
    })
}

/// Forward direction: expand the torus part over all colorings and apply
/// the basis formula.
pub fn psi_forward(el: &YElement) -> BlockMatrix {
    let d = el.d();
    let n = el.n();
    let mut out = BlockMatrix::zero(d, n);
    let all_chi = Character::all(d, n);
    for (key, coeff) in el.terms() {
        for chi in &all_chi {
            // character value on the torus part t^a
            let mut scalar = CycNumber::one();
            for (j, &a) in key.t.iter().enumerate() {
                if a != 0 {
                    scalar = scalar
                        .checked_mul(&CycNumber::zeta_pow(
                            d,
                            (chi.color(j) as i64 - 1) * a as i64,
                        ))
                        .expect("same order");
                }
            }
            if scalar.is_zero() {
                continue;
            }
            let col = chi.act(&key.w.inverse());
            let pi_row_inv = chi.sort_perm_inv();
            let pi_col = col.sort_perm();
            let inner = pi_row_inv.compose(&key.w).compose(&pi_col);
            let deg = key.w.len() as i32 - inner.len() as i32;
            let nu = pi_row_inv.permute(&key.x);
            let hkey = YKey {
                t: alloc::vec![0; n],
                x: nu,
                w: inner,
            };
            let c = coeff.mul(&LaurentPoly::var_pow(VarId::U, deg)).scale(&scalar);
            out.add_entry(
                chi.clone(),
                col,
                YElement::from_key(1, n, hkey, c),
            );
        }
    }
    out
}

/// Inverse direction: rebuild the torus idempotent and undo the sorting
/// permutations.
pub fn psi_inverse(mat: &BlockMatrix) -> YElement {
    let d = mat.d();
    let n = mat.n();
    let mut out = YElement::zero(d, n);
    let mut idem_cache: BTreeMap<Character, YElement> = BTreeMap::new();
    for ((row, col), entry) in mat.entries() {
        let pi_row = row.sort_perm();
        let pi_col_inv = col.sort_perm().inverse();
        let idem = idem_cache
            .entry(row.clone())
            .or_insert_with(|| YElement::idempotent(row))
            .clone();
        for (hkey, coeff) in entry.terms() {
            let sigma = pi_row.compose(&hkey.w).compose(&pi_col_inv);
            let deg = hkey.w.len() as i32 - sigma.len() as i32;
            let lambda = pi_row.permute(&hkey.x);
            let c = coeff.mul(&LaurentPoly::var_pow(VarId::U, deg));
            for (ik, ic) in idem.terms() {
                out.add_term(
                    YKey {
                        t: ik.t.clone(),
                        x: lambda.clone(),
                        w: sigma.clone(),
                    },
                    ic.mul(&c),
                );
            }
        }
    }
    out
}

/// Check the defining relations through the decomposition: every relation
/// of the presentation, mapped forward, must hold between the images.
/// Returns the name of the first failing relation.
pub fn verify_relations(d: u32, n: usize) -> Result<(), String> {
    let g: Vec<BlockMatrix> = (1..n).map(|i| psi_forward(&YElement::g(d, n, i))).collect();
    let gi: Vec<BlockMatrix> = (1..n)
        .map(|i| psi_forward(&YElement::g_inv(d, n, i)))
        .collect();
    let e: Vec<BlockMatrix> = (1..n).map(|i| psi_forward(&YElement::e(d, n, i))).collect();
    let x1 = psi_forward(&YElement::x(d, n, 1, 1));
    let x1i = psi_forward(&YElement::x(d, n, 1, -1));
    let t: Vec<BlockMatrix> = (1..=n).map(|j| psi_forward(&YElement::t(d, n, j, 1))).collect();
    let id = BlockMatrix::identity(d, n);
    let u2 = LaurentPoly::var_pow(VarId::U, 2);
    let v1 = LaurentPoly::var(VarId::V);

    let check = |name: &str, ok: bool| -> Result<(), String> {
        if ok {
            Ok(())
        } else {
            Err(format!("relation failed through the decomposition: {name}"))
        }
    };

    for i in 0..n - 1 {
        check(
            &format!("g_{} g_{}^-1 = 1", i + 1, i + 1),
            g[i].mul(&gi[i]) == id,
        )?;
        check(
            &format!("g_{}^2 = u^2 + v e g", i + 1),
            g[i].mul(&g[i]) == id.scale(&u2).add(&e[i].mul(&g[i]).scale(&v1)),
        )?;
        for j in 0..n - 1 {
            if i.abs_diff(j) >= 2 {
                check(
                    &format!("g_{} g_{} commute", i + 1, j + 1),
                    g[i].mul(&g[j]) == g[j].mul(&g[i]),
                )?;
            }
        }
        if i + 1 < n - 1 {
            check(
                &format!("braid relation at {}", i + 1),
                g[i].mul(&g[i + 1]).mul(&g[i]) == g[i + 1].mul(&g[i]).mul(&g[i + 1]),
            )?;
        }
    }
    for j in 0..n {
        check(&format!("t_{}^d = 1", j + 1), t[j].pow_check(d) == id)?;
        for k in 0..n {
            check(
                &format!("t_{} t_{} commute", j + 1, k + 1),
                t[j].mul(&t[k]) == t[k].mul(&t[j]),
            )?;
        }
        check(
            &format!("X_1 t_{} commute", j + 1),
            x1.mul(&t[j]) == t[j].mul(&x1),
        )?;
        for i in 0..n - 1 {
            // g_i t_j = t_{s_i(j)} g_i
            let sj = if j == i {
                i + 1
            } else if j == i + 1 {
                i
            } else {
                j
            };
            check(
                &format!("g_{} t_{} = t_{} g_{}", i + 1, j + 1, sj + 1, i + 1),
                g[i].mul(&t[j]) == t[sj].mul(&g[i]),
            )?;
        }
    }
    check("X_1 X_1^-1 = 1", x1.mul(&x1i) == id)?;
    if n >= 2 {
        check(
            "X_1 g_1 X_1 g_1 = g_1 X_1 g_1 X_1",
            x1.mul(&g[0]).mul(&x1).mul(&g[0]) == g[0].mul(&x1).mul(&g[0]).mul(&x1),
        )?;
    }
    for i in 1..n - 1 {
        check(
            &format!("X_1 g_{} commute", i + 1),
            x1.mul(&g[i]) == g[i].mul(&x1),
        )?;
    }
    Ok(())
}

impl BlockMatrix {
    fn pow_check(&self, k: u32) -> BlockMatrix {
        let mut acc = BlockMatrix::identity(self.d, self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn identity_maps_to_identity() {
        for (d, n) in [(2u32, 2usize), (3, 2), (2, 3)] {
            assert_eq!(psi_forward(&YElement::one(d, n)), BlockMatrix::identity(d, n));
        }
    }

    #[test]
    fn images_have_one_entry_per_row() {
        // The image of a basis element has at most one entry in each row,
        // and the column is determined by the permutation acting on colors.
        let el = YElement::g(2, 3, 1).mul(&YElement::g(2, 3, 2));
        let m = psi_forward(&el);
        assert!(m.block_structure_ok());
        for chi in Character::all(2, 3) {
            let rows: Vec<_> = m
                .entries()
                .filter(|((r, _), _)| *r == chi)
                .collect();
            assert_eq!(rows.len(), 1, "row {chi}");
        }
    }

    #[test]
    fn generator_image_shape() {
        // Mixed colors at the crossing give u times a matrix unit; equal
        // colors give the Hecke generator on the sorted slot.
        let m = psi_forward(&YElement::g(2, 2, 1));
        let c11 = Character::new(2, vec![1, 1]);
        let c12 = Character::new(2, vec![1, 2]);
        let c21 = Character::new(2, vec![2, 1]);
        assert_eq!(
            m.entry(&c11, &c11).unwrap(),
            &YElement::g(1, 2, 1)
        );
        assert_eq!(
            m.entry(&c12, &c21).unwrap(),
            &YElement::one(1, 2).scale(&LaurentPoly::var(VarId::U))
        );
        assert_eq!(
            m.entry(&c21, &c12).unwrap(),
            &YElement::one(1, 2).scale(&LaurentPoly::var(VarId::U))
        );
        assert!(m.entry(&c12, &c12).is_none());
    }

    #[test]
    fn torus_image_is_diagonal_scalar() {
        let m = psi_forward(&YElement::t(3, 2, 1, 1));
        for chi in Character::all(3, 2) {
            let want = YElement::one(1, 2)
                .scale(&LaurentPoly::constant(CycNumber::xi(3, chi.color(0))));
            assert_eq!(m.entry(&chi, &chi).unwrap(), &want);
        }
    }

    #[test]
    fn affine_image_lands_on_sorted_slot() {
        let m = psi_forward(&YElement::x(2, 2, 1, 1));
        let c21 = Character::new(2, vec![2, 1]);
        // Position 1 carries color 2, so sorting sends it to the last slot.
        assert_eq!(m.entry(&c21, &c21).unwrap(), &YElement::x(1, 2, 2, 1));
        let c12 = Character::new(2, vec![1, 2]);
        assert_eq!(m.entry(&c12, &c12).unwrap(), &YElement::x(1, 2, 1, 1));
    }

    #[test]
    fn relations_hold_small() {
        verify_relations(2, 2).unwrap();
        verify_relations(3, 2).unwrap();
    }

    #[test]
    fn round_trip_on_generators() {
        for (d, n) in [(2u32, 2usize), (2, 3), (3, 2)] {
            let samples = [
                YElement::one(d, n),
                YElement::g(d, n, 1),
                YElement::x(d, n, 1, 1),
                YElement::x(d, n, 1, -1),
                YElement::t(d, n, 1, 1),
                YElement::g(d, n, 1).mul(&YElement::x(d, n, 1, 1)),
            ];
            for el in samples {
                assert_eq!(psi_inverse(&psi_forward(&el)), el, "d={d} n={n}");
            }
        }
    }

    #[test]
    fn multiplicative_on_a_product() {
        let a = YElement::g(2, 3, 1).mul(&YElement::x(2, 3, 1, 1));
        let b = YElement::g(2, 3, 2).mul(&YElement::t(2, 3, 2, 1));
        let lhs = psi_forward(&a.mul(&b));
        let rhs = psi_forward(&a).mul(&psi_forward(&b));
        assert_eq!(lhs, rhs);
    }
}
