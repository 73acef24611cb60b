//! Families of subsets of `[n]` stored as membership bitsets over the cube.
//!
//! Point masks are little-endian: element `i` belongs to the subset encoded
//! by mask `m` iff bit `i - 1` of `m` is set. Bit `m` of the bitset is set
//! iff the subset with mask `m` is a member. All structural operations
//! (coordinate flips, closures, duals) work a word at a time.

use std::cmp::Ordering;
use std::fmt;

use crate::cube::CubeFunction;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::MAX_DIM;

/// Word masks selecting the points whose bit `c` is clear, for `c < 6`.
const LOW: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: usize,
    words: Vec<u64>,
}

/// Structural flags of a family, each decided exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Predicates {
    pub increasing: bool,
    pub decreasing: bool,
    pub intersecting: bool,
    pub antipodal: bool,
    pub regular: bool,
    pub balanced: bool,
}

impl Predicates {
    /// Maximal intersecting is equivalent to increasing and antipodal.
    pub fn maximal_intersecting(&self) -> bool {
        self.increasing && self.antipodal
    }
}

/// Per-coordinate influences with their total and minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfluenceVector {
    pub entries: Vec<Dyadic>,
    pub total: Dyadic,
    pub minimum: Dyadic,
}

impl InfluenceVector {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Influence of element `k` (1-based).
    pub fn get(&self, k: usize) -> &Dyadic {
        &self.entries[k - 1]
    }
}

fn word_count(n: usize) -> usize {
    if n <= 6 {
        1
    } else {
        1 << (n - 6)
    }
}

fn valid_mask(n: usize) -> u64 {
    if n >= 6 {
        u64::MAX
    } else {
        (1u64 << (1u32 << n)) - 1
    }
}

pub(crate) fn check_dim(n: usize) -> Result<()> {
    if n > MAX_DIM {
        Err(Error::DimensionTooLarge(n))
    } else {
        Ok(())
    }
}

impl SetFamily {
    pub fn empty(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(SetFamily {
            n,
            words: vec![0; word_count(n)],
        })
    }

    /// The whole power set `Ω`.
    pub fn full(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(SetFamily {
            n,
            words: vec![valid_mask(n); word_count(n)],
        })
    }

    pub fn from_fn(n: usize, mut member: impl FnMut(u32) -> bool) -> Result<Self> {
        let mut f = SetFamily::empty(n)?;
        for m in 0..(1u32 << n) {
            if member(m) {
                f.set(m);
            }
        }
        Ok(f)
    }

    /// Builds a family from point masks; masks outside the cube are rejected.
    pub fn from_masks(n: usize, masks: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut f = SetFamily::empty(n)?;
        for m in masks {
            if (m as u64) >> n != 0 {
                return Err(Error::InvalidInput(format!(
                    "mask {m:#b} outside the {n}-cube"
                )));
            }
            f.set(m);
        }
        Ok(f)
    }

    /// Builds a family from subsets given as lists of 1-based elements.
    pub fn from_subsets<S: AsRef<[usize]>>(n: usize, subsets: &[S]) -> Result<Self> {
        let masks = subsets
            .iter()
            .map(|s| subset_mask(n, s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        SetFamily::from_masks(n, masks)
    }

    /// Wraps raw bitset words (`2^n` bits, little-endian words).
    pub fn from_words(n: usize, words: Vec<u64>) -> Result<Self> {
        check_dim(n)?;
        if words.len() != word_count(n) {
            return Err(Error::InvalidInput(format!(
                "expected {} bitset words for n = {n}, got {}",
                word_count(n),
                words.len()
            )));
        }
        if words.iter().any(|w| w & !valid_mask(n) != 0) {
            return Err(Error::InvalidInput(format!(
                "bitset has bits beyond 2^{n} points"
            )));
        }
        Ok(SetFamily { n, words })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_points(&self) -> u64 {
        1u64 << self.n
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn contains(&self, mask: u32) -> bool {
        let m = mask as usize;
        m < (1usize << self.n) && (self.words[m >> 6] >> (m & 63)) & 1 == 1
    }

    pub(crate) fn set(&mut self, mask: u32) {
        let m = mask as usize;
        self.words[m >> 6] |= 1u64 << (m & 63);
    }

    /// Copy with the membership of one point toggled.
    pub fn with_toggled(&self, mask: u32) -> SetFamily {
        let mut f = self.clone();
        let m = mask as usize;
        f.words[m >> 6] ^= 1u64 << (m & 63);
        f
    }

    pub fn count(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Member masks in increasing order.
    pub fn members(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let base = (i as u32) << 6;
            BitIter(w).map(move |b| base | b)
        })
    }

    /// Members as sorted lists of 1-based elements.
    pub fn member_subsets(&self) -> Vec<Vec<usize>> {
        self.members().map(|m| mask_elements(m)).collect()
    }

    fn zip_with(&self, other: &SetFamily, op: impl Fn(u64, u64) -> u64) -> Result<SetFamily> {
        self.same_dim(other)?;
        Ok(SetFamily {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        })
    }

    pub(crate) fn same_dim(&self, other: &SetFamily) -> Result<()> {
        if self.n != other.n {
            Err(Error::DimensionMismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }

    pub fn union(&self, other: &SetFamily) -> Result<SetFamily> {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &SetFamily) -> Result<SetFamily> {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &SetFamily) -> Result<SetFamily> {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn intersection_count(&self, other: &SetFamily) -> Result<u64> {
        self.same_dim(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as u64)
            .sum())
    }

    pub fn is_subset_of(&self, other: &SetFamily) -> bool {
        self.n == other.n && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// `Ω ∖ F`.
    pub fn complement(&self) -> SetFamily {
        let valid = valid_mask(self.n);
        SetFamily {
            n: self.n,
            words: self.words.iter().map(|w| !w & valid).collect(),
        }
    }

    /// Image of the family under `x ↦ x ⊕ e_c` (0-based coordinate).
    fn flipped(&self, c: usize) -> Vec<u64> {
        if c < 6 {
            let s = 1u32 << c;
            let low = LOW[c];
            self.words
                .iter()
                .map(|&w| ((w & low) << s) | ((w >> s) & low))
                .collect()
        } else {
            let stride = 1usize << (c - 6);
            (0..self.words.len()).map(|i| self.words[i ^ stride]).collect()
        }
    }

    /// Word mask of points whose bit `c` equals `high`, for word index `i`.
    fn half_mask(&self, c: usize, high: bool, i: usize) -> u64 {
        let valid = valid_mask(self.n);
        if c < 6 {
            (if high { !LOW[c] } else { LOW[c] }) & valid
        } else if ((i >> (c - 6)) & 1 == 1) == high {
            valid
        } else {
            0
        }
    }

    /// `{A^c : A ∈ F}`.
    pub fn complements(&self) -> SetFamily {
        let mut f = self.clone();
        for c in 0..self.n {
            f.words = f.flipped(c);
        }
        f
    }

    /// The dual family `F' = {B : B^c ∉ F}`.
    pub fn dual(&self) -> SetFamily {
        self.complements().complement()
    }

    /// Smallest increasing family containing `F`.
    pub fn up_closure(&self) -> SetFamily {
        let mut f = self.clone();
        for c in 0..self.n {
            let fl = f.flipped(c);
            for (i, w) in f.words.iter_mut().enumerate() {
                *w |= fl[i] & self.half_mask(c, true, i);
            }
        }
        f
    }

    /// Smallest decreasing family containing `F`.
    pub fn down_closure(&self) -> SetFamily {
        let mut f = self.clone();
        for c in 0..self.n {
            let fl = f.flipped(c);
            for (i, w) in f.words.iter_mut().enumerate() {
                *w |= fl[i] & self.half_mask(c, false, i);
            }
        }
        f
    }

    fn closed_in_direction(&self, upward: bool) -> bool {
        (0..self.n).all(|c| {
            let fl = self.flipped(c);
            // x ∈ F on the source side of coordinate c forces x ⊕ e_c ∈ F.
            self.words
                .iter()
                .enumerate()
                .all(|(i, &w)| w & self.half_mask(c, !upward, i) & !fl[i] == 0)
        })
    }

    pub fn is_increasing(&self) -> bool {
        self.closed_in_direction(true)
    }

    pub fn is_decreasing(&self) -> bool {
        self.closed_in_direction(false)
    }

    /// No two members (possibly equal) are disjoint.
    pub fn is_intersecting(&self) -> bool {
        let shadow = self.complements().down_closure();
        self.words.iter().zip(&shadow.words).all(|(a, b)| a & b == 0)
    }

    /// Exactly one of each complementary pair `{A, A^c}` is a member.
    pub fn is_antipodal(&self) -> bool {
        self.complements() == self.complement()
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.count() == self.num_points()
    }

    pub fn is_regular(&self) -> bool {
        let counts = self.boundary_counts();
        counts.windows(2).all(|w| w[0] == w[1])
    }

    pub fn predicates(&self) -> Predicates {
        Predicates {
            increasing: self.is_increasing(),
            decreasing: self.is_decreasing(),
            intersecting: self.is_intersecting(),
            antipodal: self.is_antipodal(),
            regular: self.is_regular(),
            balanced: self.is_balanced(),
        }
    }

    /// Number of members `x` with `x ⊕ e_k ∉ F` for the 0-based coordinate.
    fn boundary_count0(&self, c: usize) -> u64 {
        let fl = self.flipped(c);
        self.words
            .iter()
            .zip(&fl)
            .map(|(a, b)| (a & !b).count_ones() as u64)
            .sum()
    }

    /// Members that leave the family when element `k` (1-based) is toggled;
    /// equals the number of boundary edges in direction `k`.
    pub fn boundary_count(&self, k: usize) -> Result<u64> {
        self.check_coord(k)?;
        Ok(self.boundary_count0(k - 1))
    }

    pub fn boundary_counts(&self) -> Vec<u64> {
        (0..self.n).map(|c| self.boundary_count0(c)).collect()
    }

    pub(crate) fn check_coord(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.n {
            Err(Error::CoordinateOutOfRange { k, n: self.n })
        } else {
            Ok(())
        }
    }

    /// `μ(F) = |F| / 2^n`.
    pub fn measure(&self) -> Dyadic {
        Dyadic::new(self.count(), self.n as u32)
    }

    /// `I_k(F) = 2 μ({x ∈ F : x ⊕ e_k ∉ F})`.
    pub fn influence(&self, k: usize) -> Result<Dyadic> {
        let b = self.boundary_count(k)?;
        Ok(Dyadic::new(2 * b, self.n as u32))
    }

    pub fn influences(&self) -> InfluenceVector {
        let entries: Vec<Dyadic> = self
            .boundary_counts()
            .into_iter()
            .map(|b| Dyadic::new(2 * b, self.n as u32))
            .collect();
        let total = entries.iter().sum();
        let minimum = entries.iter().min().cloned().unwrap_or_default();
        InfluenceVector {
            entries,
            total,
            minimum,
        }
    }

    /// `Cor(A, B) = μ(A ∩ B) − μ(A) μ(B)`.
    pub fn correlation(&self, other: &SetFamily) -> Result<Dyadic> {
        let both = self.intersection_count(other)? as i128;
        let n = self.n as u32;
        let num = (both << n) - (self.count() as i128) * (other.count() as i128);
        Ok(Dyadic::from_i128(num, 2 * n))
    }

    /// `(F⁺, F⁻) = (F ∩ F', F ∪ F')` for increasing `F`.
    pub fn plus_minus_parts(&self) -> Result<(SetFamily, SetFamily)> {
        if !self.is_increasing() {
            return Err(Error::ClassViolation {
                operand: "F",
                requirement: "increasing",
            });
        }
        let dual = self.dual();
        Ok((self.intersection(&dual)?, self.union(&dual)?))
    }

    /// Sum of the `q` smallest influences, `q = max(1, ⌊γ log₂(1/μ)⌋)`
    /// capped at `n`; ties are broken by coordinate index.
    pub fn s_gamma(&self, gamma: f64) -> Result<Dyadic> {
        let count = self.count();
        if count == 0 || count == self.num_points() {
            return Err(Error::DegenerateMeasure(format!(
                "s_gamma needs 0 < μ < 1, got μ = {}",
                self.measure()
            )));
        }
        if !(gamma > 0.0) {
            return Err(Error::InvalidInput(format!("gamma must be positive, got {gamma}")));
        }
        let log = self.n as f64 - (count as f64).log2();
        let q = ((gamma * log).floor() as usize).max(1).min(self.n);
        let mut infl: Vec<(Dyadic, usize)> = self
            .influences()
            .entries
            .into_iter()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        infl.sort();
        Ok(infl.into_iter().take(q).map(|(v, _)| v).sum())
    }

    /// `χ_F` as an exact cube function.
    pub fn indicator(&self) -> CubeFunction {
        CubeFunction::from_fn(self.n, |m| {
            if self.contains(m) {
                Dyadic::one()
            } else {
                Dyadic::zero()
            }
        })
        .expect("dimension already validated")
    }

    /// Members whose removal keeps an increasing family increasing.
    pub fn minimal_members(&self) -> Vec<u32> {
        self.members()
            .filter(|&m| (0..self.n).all(|c| m >> c & 1 == 0 || !self.contains(m ^ (1 << c))))
            .collect()
    }

    /// Non-members whose addition keeps an increasing family increasing.
    pub fn maximal_non_members(&self) -> Vec<u32> {
        self.complement()
            .members()
            .filter(|&m| (0..self.n).all(|c| m >> c & 1 == 1 || self.contains(m | (1 << c))))
            .collect()
    }

    /// Lowercase hex of the bitset bytes, byte 0 (points 0..8) first.
    pub fn to_hex(&self) -> String {
        let bytes = ((1usize << self.n) / 8).max(1);
        let mut out = String::with_capacity(2 * bytes);
        for j in 0..bytes {
            let byte = (self.words[j / 8] >> ((j % 8) * 8)) & 0xFF;
            out.push_str(&format!("{byte:02x}"));
        }
        out
    }

    pub fn from_hex(n: usize, hex: &str) -> Result<Self> {
        check_dim(n)?;
        let bytes = ((1usize << n) / 8).max(1);
        let hex = hex.trim();
        if hex.len() != 2 * bytes {
            return Err(Error::InvalidInput(format!(
                "tt for n = {n} needs {} hex digits, got {}",
                2 * bytes,
                hex.len()
            )));
        }
        let mut words = vec![0u64; word_count(n)];
        for j in 0..bytes {
            let byte = u8::from_str_radix(&hex[2 * j..2 * j + 2], 16)
                .map_err(|e| Error::InvalidInput(format!("tt hex: {e}")))?;
            words[j / 8] |= (byte as u64) << ((j % 8) * 8);
        }
        SetFamily::from_words(n, words)
    }
}

impl Ord for SetFamily {
    /// Numeric order of the membership bitset, then dimension.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for SetFamily {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 4 {
            let sets: Vec<String> = self
                .member_subsets()
                .into_iter()
                .map(|s| {
                    let inner: Vec<String> = s.iter().map(|e| e.to_string()).collect();
                    format!("{{{}}}", inner.join(","))
                })
                .collect();
            write!(f, "SetFamily(n={}, [{}])", self.n, sets.join(" "))
        } else {
            write!(f, "SetFamily(n={}, tt={})", self.n, self.to_hex())
        }
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = u32;
    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros();
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

/// Mask of a subset given by 1-based elements.
pub fn subset_mask(n: usize, elements: &[usize]) -> Result<u32> {
    elements.iter().try_fold(0u32, |m, &e| {
        if e == 0 || e > n {
            Err(Error::CoordinateOutOfRange { k: e, n })
        } else {
            Ok(m | 1 << (e - 1))
        }
    })
}

/// 1-based elements of a mask, ascending.
pub fn mask_elements(mask: u32) -> Vec<usize> {
    BitIter(mask as u64).map(|b| b as usize + 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dictator(n: usize, i: usize) -> SetFamily {
        SetFamily::from_fn(n, |m| m >> (i - 1) & 1 == 1).unwrap()
    }

    fn majority3() -> SetFamily {
        SetFamily::from_fn(3, |m| m.count_ones() >= 2).unwrap()
    }

    fn tribes22() -> SetFamily {
        SetFamily::from_fn(4, |m| m & 0b0011 == 0b0011 || m & 0b1100 == 0b1100).unwrap()
    }

    fn brute_influence(f: &SetFamily, k: usize) -> Dyadic {
        let c = (0..1u32 << f.n())
            .filter(|&x| f.contains(x) && !f.contains(x ^ (1 << (k - 1))))
            .count();
        Dyadic::new(2 * c as i64, f.n() as u32)
    }

    #[test]
    fn flips_match_pointwise_definition_across_word_boundaries() {
        let f = SetFamily::from_fn(8, |m| (m * 37 + 11) % 7 < 3).unwrap();
        for c in 0..8 {
            let fl = SetFamily::from_words(8, f.flipped(c)).unwrap();
            for m in 0..256u32 {
                assert_eq!(fl.contains(m), f.contains(m ^ (1 << c)));
            }
        }
    }

    #[test]
    fn influences_follow_edge_counts() {
        let maj = majority3();
        assert_eq!(maj.influence(1).unwrap(), Dyadic::new(1, 1));
        let d = dictator(3, 1);
        assert_eq!(d.influence(1).unwrap(), Dyadic::one());
        assert_eq!(d.influence(2).unwrap(), Dyadic::zero());
        assert_eq!(SetFamily::empty(3).unwrap().influence(2).unwrap(), Dyadic::zero());
        let f = SetFamily::from_fn(9, |m| (m * 13) % 5 == 1).unwrap();
        for k in 1..=9 {
            assert_eq!(f.influence(k).unwrap(), brute_influence(&f, k));
        }
        assert!(maj.influence(4).is_err());
    }

    #[test]
    fn correlation_examples() {
        let maj = majority3();
        let d1 = dictator(3, 1);
        assert_eq!(maj.correlation(&d1).unwrap(), Dyadic::new(1, 3));
        assert_eq!(d1.correlation(&d1).unwrap(), Dyadic::new(1, 2));
        assert_eq!(maj.correlation(&SetFamily::full(3).unwrap()).unwrap(), Dyadic::zero());
        assert_eq!(
            maj.complement().correlation(&d1).unwrap(),
            -maj.correlation(&d1).unwrap()
        );
        assert!(maj.correlation(&dictator(4, 1)).is_err());
    }

    #[test]
    fn predicate_examples() {
        let p = dictator(3, 1).predicates();
        assert!(p.increasing && p.intersecting && p.antipodal && p.balanced);
        assert!(!p.regular);
        let p = majority3().predicates();
        assert!(p.increasing && p.intersecting && p.antipodal && p.regular && p.balanced);
        let t = tribes22();
        let p = t.predicates();
        assert!(p.increasing && !p.antipodal && p.regular && !p.balanced);
        assert_eq!(t.measure(), Dyadic::new(7, 4));
    }

    #[test]
    fn intersecting_matches_pairwise_scan() {
        for seed in 0..200u32 {
            let f = SetFamily::from_fn(4, |m| (m.wrapping_mul(2654435761u32 ^ seed) >> 7) % 3 == 0)
                .unwrap();
            let members: Vec<u32> = f.members().collect();
            let brute = members.iter().all(|a| members.iter().all(|b| a & b != 0));
            assert_eq!(f.is_intersecting(), brute, "{f:?}");
        }
    }

    #[test]
    fn dual_examples() {
        let d1 = dictator(3, 1);
        assert_eq!(d1.dual(), d1);
        let expected =
            SetFamily::from_fn(4, |m| m & 0b0011 != 0 && m & 0b1100 != 0).unwrap();
        assert_eq!(tribes22().dual(), expected);
        assert!(SetFamily::full(3).unwrap().dual().is_empty());
        let f = SetFamily::from_fn(7, |m| m % 5 == 2).unwrap();
        assert_eq!(f.dual().dual(), f);
    }

    #[test]
    fn plus_minus_examples() {
        let maj = majority3();
        let (p, m) = maj.plus_minus_parts().unwrap();
        assert_eq!(p, maj);
        assert_eq!(m, maj);
        let full = SetFamily::full(3).unwrap();
        let (p, m) = full.plus_minus_parts().unwrap();
        assert!(p.is_empty());
        assert_eq!(m, full);
        let (p, _) = tribes22().plus_minus_parts().unwrap();
        assert_eq!(p.count(), 5);
        assert!(p.is_increasing() && p.is_intersecting());
        assert!(SetFamily::from_masks(2, [0]).unwrap().plus_minus_parts().is_err());
    }

    #[test]
    fn s_gamma_examples() {
        assert_eq!(majority3().s_gamma(1.0).unwrap(), Dyadic::new(1, 1));
        assert_eq!(dictator(3, 1).s_gamma(2.0).unwrap(), Dyadic::zero());
        assert_eq!(dictator(3, 2).s_gamma(1e-9).unwrap(), Dyadic::zero());
        assert_eq!(majority3().s_gamma(1e-9).unwrap(), Dyadic::new(1, 1));
        assert!(SetFamily::full(3).unwrap().s_gamma(1.0).is_err());
    }

    #[test]
    fn hex_round_trip_and_layout() {
        let d1 = dictator(3, 1);
        // points 1,3,5,7 → bits 0b1010_1010
        assert_eq!(d1.to_hex(), "aa");
        assert_eq!(SetFamily::from_hex(3, "aa").unwrap(), d1);
        let f = SetFamily::from_fn(7, |m| m % 3 == 0).unwrap();
        assert_eq!(SetFamily::from_hex(7, &f.to_hex()).unwrap(), f);
        assert!(SetFamily::from_hex(1, "ff").is_err());
        assert!(SetFamily::from_hex(3, "a").is_err());
    }

    #[test]
    fn closures_and_extremal_elements() {
        let g = SetFamily::from_subsets(3, &[vec![1], vec![2, 3]]).unwrap();
        let up = g.up_closure();
        assert_eq!(up.count(), 5);
        assert!(up.is_increasing());
        assert_eq!(up.minimal_members(), vec![0b001, 0b110]);
        assert!(g.down_closure().is_decreasing());
        for m in up.maximal_non_members() {
            assert!(up.with_toggled(m).is_increasing());
        }
    }
}
