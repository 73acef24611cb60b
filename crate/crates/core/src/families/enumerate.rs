//! Exhaustive enumeration of monotone families for `n ≤ 6`.
//!
//! Up-sets on `n` points are pairs `F0 ⊆ F1` of up-sets on `n − 1` points
//! (the members without and with element `n`), so every table fits in one
//! `u64` truth table. Tables up to `n = 5` are memoized; `n = 6` is streamed
//! pair by pair. Families come out in increasing bitset order (decreasing
//! families in decreasing order of their complements).

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::set_family::SetFamily;

/// Largest dimension accepted by [`enumerate`].
pub const MAX_ENUM_DIM: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyClass {
    Increasing,
    Decreasing,
    IncreasingIntersecting,
    /// Increasing and antipodal.
    MaximalIntersecting,
}

impl FamilyClass {
    pub fn name(self) -> &'static str {
        match self {
            FamilyClass::Increasing => "increasing",
            FamilyClass::Decreasing => "decreasing",
            FamilyClass::IncreasingIntersecting => "increasing-intersecting",
            FamilyClass::MaximalIntersecting => "maximal-intersecting",
        }
    }
}

impl std::str::FromStr for FamilyClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "increasing" => FamilyClass::Increasing,
            "decreasing" => FamilyClass::Decreasing,
            "increasing-intersecting" | "intersecting" => FamilyClass::IncreasingIntersecting,
            "maximal-intersecting" | "maxint" => FamilyClass::MaximalIntersecting,
            _ => return Err(Error::InvalidInput(format!("unknown family class {s:?}"))),
        })
    }
}

fn point_mask(n: usize) -> u64 {
    if n == 6 {
        u64::MAX
    } else {
        (1u64 << (1 << n)) - 1
    }
}

/// `{X^c : X ∈ F}` on a one-word table: point `x` maps to `top − x`.
fn complements_word(n: usize, w: u64) -> u64 {
    w.reverse_bits() >> (64 - (1 << n))
}

fn accepts(n: usize, class: FamilyClass, up: u64) -> bool {
    match class {
        FamilyClass::Increasing | FamilyClass::Decreasing => true,
        // For an up-set, disjoint members A, B force A^c ∈ F.
        FamilyClass::IncreasingIntersecting => up & complements_word(n, up) == 0,
        FamilyClass::MaximalIntersecting => complements_word(n, up) == !up & point_mask(n),
    }
}

/// Sorted truth tables of all increasing families on `n ≤ 5` points.
pub fn increasing_tables(n: usize) -> Result<&'static [u64]> {
    static TABLES: [OnceLock<Vec<u64>>; MAX_ENUM_DIM] = [const { OnceLock::new() }; MAX_ENUM_DIM];
    if n >= MAX_ENUM_DIM {
        return Err(Error::LimitExceeded(format!(
            "in-memory up-set table needs n ≤ {}, got {n}",
            MAX_ENUM_DIM - 1
        )));
    }
    Ok(TABLES[n].get_or_init(|| {
        if n == 0 {
            return vec![0, 1];
        }
        let base = increasing_tables(n - 1).expect("smaller dimension");
        let shift = 1 << (n - 1);
        let mut out = Vec::new();
        for &hi in base {
            for &lo in base {
                if lo & !hi == 0 {
                    out.push(lo | hi << shift);
                }
            }
        }
        out
    }))
}

/// Streaming cursor over one class of families.
pub struct Enumeration {
    n: usize,
    class: FamilyClass,
    base: &'static [u64],
    // position in the (outer, inner) pair grid over `base`
    outer: usize,
    inner: usize,
    done: bool,
}

impl Enumeration {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn class(&self) -> FamilyClass {
        self.class
    }

    fn reversed(&self) -> bool {
        self.class == FamilyClass::Decreasing
    }

    /// Next up-set table in traversal order, before class filtering.
    fn next_up(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            // the two families on one point, read straight off `base`
            let len = self.base.len();
            if self.outer == len {
                self.done = true;
                return None;
            }
            let i = if self.reversed() { len - 1 - self.outer } else { self.outer };
            self.outer += 1;
            return Some(self.base[i]);
        }
        let len = self.base.len();
        let shift = 1 << (self.n - 1);
        while self.outer < len {
            let hi_idx = if self.reversed() { len - 1 - self.outer } else { self.outer };
            let hi = self.base[hi_idx];
            while self.inner < len {
                let lo_idx = if self.reversed() { len - 1 - self.inner } else { self.inner };
                self.inner += 1;
                let lo = self.base[lo_idx];
                if lo & !hi == 0 {
                    return Some(lo | hi << shift);
                }
            }
            self.outer += 1;
            self.inner = 0;
        }
        self.done = true;
        None
    }

    /// Next member of the class as a raw one-word truth table.
    pub fn next_word(&mut self) -> Option<u64> {
        while let Some(up) = self.next_up() {
            if accepts(self.n, self.class, up) {
                return Some(match self.class {
                    FamilyClass::Decreasing => !up & point_mask(self.n),
                    _ => up,
                });
            }
        }
        None
    }
}

impl Iterator for Enumeration {
    type Item = SetFamily;

    fn next(&mut self) -> Option<SetFamily> {
        let w = self.next_word()?;
        Some(SetFamily::from_words(self.n, vec![w]).expect("table fits one word"))
    }
}

/// Every family of `class` on `n ≤ 6` points, each exactly once.
pub fn enumerate(n: usize, class: FamilyClass) -> Result<Enumeration> {
    if n > MAX_ENUM_DIM {
        return Err(Error::LimitExceeded(format!(
            "exhaustive enumeration needs n ≤ {MAX_ENUM_DIM}, got {n}"
        )));
    }
    let base = increasing_tables(n.saturating_sub(1))?;
    Ok(Enumeration { n, class, base, outer: 0, inner: 0, done: false })
}

pub fn count(n: usize, class: FamilyClass) -> Result<u64> {
    let mut e = enumerate(n, class)?;
    let mut c = 0;
    while e.next_word().is_some() {
        c += 1;
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{majority, principal};

    /// Brute force over all `2^(2^n)` families.
    fn brute_count(n: usize, keep: impl Fn(&SetFamily) -> bool) -> u64 {
        let points = 1u32 << n;
        (0..1u64 << points)
            .filter(|&w| keep(&SetFamily::from_words(n, vec![w]).unwrap()))
            .count() as u64
    }

    #[test]
    fn counts_match_brute_force_for_small_n() {
        for n in 0..=4 {
            assert_eq!(count(n, FamilyClass::Increasing).unwrap(), brute_count(n, |f| f.is_increasing()));
            assert_eq!(count(n, FamilyClass::Decreasing).unwrap(), brute_count(n, |f| f.is_decreasing()));
            assert_eq!(
                count(n, FamilyClass::IncreasingIntersecting).unwrap(),
                brute_count(n, |f| f.is_increasing() && f.is_intersecting())
            );
            assert_eq!(
                count(n, FamilyClass::MaximalIntersecting).unwrap(),
                brute_count(n, |f| f.predicates().maximal_intersecting())
            );
        }
    }

    #[test]
    fn dedekind_numbers() {
        let want = [2, 3, 6, 20, 168, 7581];
        for (n, &w) in want.iter().enumerate() {
            assert_eq!(count(n, FamilyClass::Increasing).unwrap(), w);
            assert_eq!(count(n, FamilyClass::Decreasing).unwrap(), w);
        }
        let maxint = [1, 2, 4, 12, 81];
        for (i, &w) in maxint.iter().enumerate() {
            assert_eq!(count(i + 1, FamilyClass::MaximalIntersecting).unwrap(), w);
        }
    }

    #[test]
    fn order_is_strictly_increasing_and_classes_hold() {
        for n in 0..=5 {
            let fams: Vec<SetFamily> = enumerate(n, FamilyClass::Increasing).unwrap().collect();
            assert!(fams.windows(2).all(|w| w[0] < w[1]));
            assert!(fams.iter().all(|f| f.is_increasing()));
            let dec: Vec<SetFamily> = enumerate(n, FamilyClass::Decreasing).unwrap().collect();
            assert!(dec.iter().all(|f| f.is_decreasing()));
            assert!(dec.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn maximal_intersecting_at_three() {
        let got: Vec<SetFamily> = enumerate(3, FamilyClass::MaximalIntersecting).unwrap().collect();
        let mut want = vec![
            principal(3, 1).unwrap(),
            principal(3, 2).unwrap(),
            principal(3, 3).unwrap(),
            majority(3).unwrap(),
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn too_large_is_rejected() {
        assert!(matches!(enumerate(7, FamilyClass::Increasing), Err(Error::LimitExceeded(_))));
    }
}
