//! Exact functions on `{0,1}^n` and their Fourier–Walsh spectra.
//!
//! Characters are `u_S(T) = (-1)^{|S ∩ T|}` and coefficients are
//! `f̂(S) = 2^-n Σ_T f(T) u_S(T)`, so `f = Σ_S f̂(S) u_S`. Set masks `S`
//! use the same little-endian convention as point masks.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::set_family::{check_dim, SetFamily};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubeFunction {
    n: usize,
    values: Vec<Dyadic>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Spectrum {
    n: usize,
    coeffs: Vec<Dyadic>,
}

/// Scaling of the directional difference `f(x) − f(x ⊕ e_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiffConvention {
    /// The literal difference; its coefficient at `S` is `2·[i∈S]·f̂(S)`.
    Full,
    /// Half the difference; its coefficient at `S` is `[i∈S]·f̂(S)`.
    Half,
}

/// `2χ_F − 1`, with a flag recording whether `F` was antipodal (only then
/// is the result an odd function).
#[derive(Clone, Debug)]
pub struct AntipodalLift {
    pub function: CubeFunction,
    pub antipodal: bool,
}

impl CubeFunction {
    pub fn new(n: usize, values: Vec<Dyadic>) -> Result<Self> {
        check_dim(n)?;
        if values.len() != 1usize << n {
            return Err(Error::InvalidInput(format!(
                "expected {} values for n = {n}, got {}",
                1usize << n,
                values.len()
            )));
        }
        Ok(CubeFunction { n, values })
    }

    pub fn from_fn(n: usize, f: impl FnMut(u32) -> Dyadic) -> Result<Self> {
        check_dim(n)?;
        Ok(CubeFunction {
            n,
            values: (0..1u32 << n).map(f).collect(),
        })
    }

    pub fn constant(n: usize, v: Dyadic) -> Result<Self> {
        CubeFunction::from_fn(n, |_| v.clone())
    }

    /// The character `u_S`.
    pub fn character(n: usize, set_mask: u32) -> Result<Self> {
        CubeFunction::from_fn(n, |t| {
            if (t & set_mask).count_ones() % 2 == 0 {
                Dyadic::one()
            } else {
                Dyadic::from_int(-1)
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Dyadic] {
        &self.values
    }

    pub fn value(&self, mask: u32) -> &Dyadic {
        &self.values[mask as usize]
    }

    pub fn sum(&self) -> Dyadic {
        self.values.iter().sum()
    }

    /// `E_μ[f]`.
    pub fn mean(&self) -> Dyadic {
        self.sum().scale_pow2(-(self.n as i32))
    }

    /// `‖f‖₂² = E[f²]`.
    pub fn norm2_squared(&self) -> Dyadic {
        let s: Dyadic = self.values.iter().map(|v| v.square()).sum();
        s.scale_pow2(-(self.n as i32))
    }

    /// `‖f‖₁ = E|f|`.
    pub fn norm1(&self) -> Dyadic {
        let s: Dyadic = self.values.iter().map(|v| v.abs()).sum();
        s.scale_pow2(-(self.n as i32))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|v| !v.is_negative())
    }

    /// `f(A^c) = −f(A)` for every `A`.
    pub fn is_antipodal(&self) -> bool {
        let top = (1u32 << self.n) - 1;
        (0..1u32 << self.n).all(|m| self.values[(m ^ top) as usize] == -&self.values[m as usize])
    }

    /// Nondecreasing under inclusion.
    pub fn is_monotone(&self) -> bool {
        (0..1u32 << self.n).all(|m| {
            (0..self.n).all(|c| {
                m >> c & 1 == 1 || self.values[m as usize] <= self.values[(m | 1 << c) as usize]
            })
        })
    }

    pub fn map(&self, f: impl Fn(&Dyadic) -> Dyadic) -> CubeFunction {
        CubeFunction {
            n: self.n,
            values: self.values.iter().map(f).collect(),
        }
    }

    pub fn zip(&self, other: &CubeFunction, f: impl Fn(&Dyadic, &Dyadic) -> Dyadic) -> Result<CubeFunction> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(CubeFunction {
            n: self.n,
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// `Cor(f, g) = E[fg] − E[f]E[g]`, computed pointwise.
    pub fn correlation(&self, other: &CubeFunction) -> Result<Dyadic> {
        let prod = self.zip(other, |a, b| a * b)?;
        Ok(prod.mean() - self.mean() * other.mean())
    }

    /// `Σ_{A ∈ F} f(A)`.
    pub fn sum_over(&self, family: &SetFamily) -> Result<Dyadic> {
        if family.n() != self.n {
            return Err(Error::DimensionMismatch(self.n, family.n()));
        }
        Ok(family.members().map(|m| &self.values[m as usize]).sum())
    }
}

/// Common-exponent integer numerators of a table of dyadics.
fn integer_table(values: &[Dyadic]) -> (Vec<BigInt>, u32) {
    let exp = values.iter().map(Dyadic::exponent).max().unwrap_or(0);
    (values.iter().map(|v| v.numerator_at(exp)).collect(), exp)
}

/// Unnormalized in-place butterfly: `out[S] = Σ_T v[T] (−1)^{|S∩T|}`.
fn butterfly(values: &[Dyadic], n: usize) -> (Vec<BigInt>, u32) {
    let (ints, exp) = integer_table(values);
    let limit = BigInt::from(1i64) << (62 - n.min(62));
    if ints.iter().all(|v| v.abs() < limit) {
        let mut t: Vec<i64> = ints.iter().map(|v| v.to_i64().unwrap()).collect();
        walsh_i64(&mut t);
        (t.into_iter().map(BigInt::from).collect(), exp)
    } else {
        let mut t = ints;
        let mut h = 1;
        while h < t.len() {
            for block in (0..t.len()).step_by(2 * h) {
                for i in block..block + h {
                    let a = t[i].clone();
                    let b = std::mem::take(&mut t[i + h]);
                    t[i + h] = &a - &b;
                    t[i] = a + b;
                }
            }
            h *= 2;
        }
        (t, exp)
    }
}

/// Integer Walsh–Hadamard butterfly. Callers guarantee `|v| · 2^n < 2^63`.
pub fn walsh_i64(t: &mut [i64]) {
    let mut h = 1;
    while h < t.len() {
        for block in (0..t.len()).step_by(2 * h) {
            for i in block..block + h {
                let (a, b) = (t[i], t[i + h]);
                t[i] = a + b;
                t[i + h] = a - b;
            }
        }
        h *= 2;
    }
}

/// Forward Fourier–Walsh transform, exact, `O(n 2^n)` arithmetic operations.
pub fn wht(f: &CubeFunction) -> Spectrum {
    let (sums, exp) = butterfly(&f.values, f.n);
    let e = exp + f.n as u32;
    Spectrum {
        n: f.n,
        coeffs: sums.into_iter().map(|s| Dyadic::new(s, e)).collect(),
    }
}

/// `f(T) = Σ_S f̂(S) (−1)^{|S∩T|}`.
pub fn inverse_wht(s: &Spectrum) -> CubeFunction {
    let (sums, exp) = butterfly(&s.coeffs, s.n);
    CubeFunction {
        n: s.n,
        values: sums.into_iter().map(|v| Dyadic::new(v, exp)).collect(),
    }
}

impl Spectrum {
    pub fn new(n: usize, coeffs: Vec<Dyadic>) -> Result<Self> {
        check_dim(n)?;
        if coeffs.len() != 1usize << n {
            return Err(Error::InvalidInput(format!(
                "expected {} coefficients for n = {n}, got {}",
                1usize << n,
                coeffs.len()
            )));
        }
        Ok(Spectrum { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Dyadic] {
        &self.coeffs
    }

    pub fn coeff(&self, set_mask: u32) -> &Dyadic {
        &self.coeffs[set_mask as usize]
    }

    /// `Σ_S f̂(S)²`.
    pub fn energy(&self) -> Dyadic {
        self.coeffs.iter().map(|c| c.square()).sum()
    }

    /// `Σ_{|S| = k} f̂(S)²` for `k = 0..=n`.
    pub fn level_weights(&self) -> Vec<Dyadic> {
        let mut levels = vec![Dyadic::zero(); self.n + 1];
        for (s, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let k = (s as u32).count_ones() as usize;
                levels[k] = &levels[k] + &c.square();
            }
        }
        levels
    }

    /// `Σ_{S≠∅} f̂(S) ĝ(S)`.
    pub fn covariance(&self, other: &Spectrum) -> Result<Dyadic> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .skip(1)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .map(|(a, b)| a * b)
            .sum())
    }
}

/// `f(x) − f(x ⊕ e_i)` (full) or half of it.
pub fn directional_difference(f: &CubeFunction, i: usize, convention: DiffConvention) -> Result<CubeFunction> {
    if i == 0 || i > f.n {
        return Err(Error::CoordinateOutOfRange { k: i, n: f.n });
    }
    let bit = 1u32 << (i - 1);
    Ok(CubeFunction::from_fn(f.n, |x| {
        let d = f.value(x) - f.value(x ^ bit);
        match convention {
            DiffConvention::Full => d,
            DiffConvention::Half => d.half(),
        }
    })?)
}

/// `M_α(f) = Σ_{S≠∅} f̂(S)² / |S|^α` for mean-zero `f`.
///
/// Level weights are summed exactly; only the division by `|S|^α` is done
/// in floating point.
pub fn m_alpha(f: &CubeFunction, alpha: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::InvalidInput(format!("alpha must lie in [0,1], got {alpha}")));
    }
    let s = wht(f);
    if !s.coeff(0).is_zero() {
        return Err(Error::NonzeroMean);
    }
    Ok(m_alpha_of_spectrum(&s, alpha))
}

pub(crate) fn m_alpha_of_spectrum(s: &Spectrum, alpha: f64) -> f64 {
    let levels = s.level_weights();
    if alpha == 0.0 {
        let exact: Dyadic = levels.iter().skip(1).sum();
        return exact.to_f64();
    }
    levels
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, w)| !w.is_zero())
        .map(|(k, w)| w.to_f64() / (k as f64).powf(alpha))
        .sum()
}

/// `2χ_F − 1`.
pub fn antipodal_lift(family: &SetFamily) -> AntipodalLift {
    let function = CubeFunction::from_fn(family.n(), |m| {
        Dyadic::from_int(if family.contains(m) { 1 } else { -1 })
    })
    .expect("dimension already validated");
    AntipodalLift {
        function,
        antipodal: family.is_antipodal(),
    }
}

/// `f*(x) = max(f(x), 0)²`.
pub fn f_star(f: &CubeFunction) -> CubeFunction {
    f.map(|v| {
        if v.is_positive() {
            v.square()
        } else {
            Dyadic::zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: i64, e: u32) -> Dyadic {
        Dyadic::new(n, e)
    }

    /// Direct `2^n`-term summation per coefficient.
    fn slow_wht(f: &CubeFunction) -> Vec<Dyadic> {
        let n = f.n();
        (0..1u32 << n)
            .map(|s| {
                let total: Dyadic = (0..1u32 << n)
                    .map(|t| {
                        if (s & t).count_ones() % 2 == 0 {
                            f.value(t).clone()
                        } else {
                            -f.value(t)
                        }
                    })
                    .sum();
                total.scale_pow2(-(n as i32))
            })
            .collect()
    }

    fn majority3() -> SetFamily {
        SetFamily::from_fn(3, |m| m.count_ones() >= 2).unwrap()
    }

    fn dictator(n: usize) -> SetFamily {
        SetFamily::from_fn(n, |m| m & 1 == 1).unwrap()
    }

    #[test]
    fn transform_examples_match_direct_summation() {
        let one = CubeFunction::constant(3, Dyadic::one()).unwrap();
        let s = wht(&one);
        assert_eq!(s.coeff(0), &Dyadic::one());
        assert!(s.coeffs()[1..].iter().all(Dyadic::is_zero));

        let dict = dictator(3).indicator();
        let s = wht(&dict);
        assert_eq!(s.coeffs(), slow_wht(&dict).as_slice());
        assert_eq!(s.coeff(0), &d(1, 1));
        assert_eq!(s.coeff(1), &d(-1, 1));
        assert!(s.coeffs()[2..].iter().all(Dyadic::is_zero));

        let maj = majority3().indicator();
        let s = wht(&maj);
        assert_eq!(s.coeffs(), slow_wht(&maj).as_slice());
        assert_eq!(s.coeff(0), &d(1, 1));
        for single in [1, 2, 4] {
            assert_eq!(s.coeff(single), &d(-1, 2));
        }
        assert_eq!(s.coeff(7), &d(1, 2));
        for pair in [3, 5, 6] {
            assert!(s.coeff(pair).is_zero());
        }
    }

    #[test]
    fn inverse_examples() {
        let maj = majority3().indicator();
        assert_eq!(inverse_wht(&wht(&maj)), maj);
        let mut c = vec![Dyadic::zero(); 8];
        c[0] = Dyadic::one();
        let s = Spectrum::new(3, c).unwrap();
        assert_eq!(inverse_wht(&s), CubeFunction::constant(3, Dyadic::one()).unwrap());
        let s = Spectrum::new(2, vec![d(1, 1), d(-1, 1), Dyadic::zero(), Dyadic::zero()]).unwrap();
        assert_eq!(inverse_wht(&s), dictator(2).indicator());
    }

    #[test]
    fn big_integer_path_round_trips() {
        let f = CubeFunction::from_fn(5, |m| {
            Dyadic::new(BigInt::from(3) << (70 + m as usize), 3 + m)
        })
        .unwrap();
        let s = wht(&f);
        assert_eq!(s.coeffs(), slow_wht(&f).as_slice());
        assert_eq!(inverse_wht(&s), f);
    }

    #[test]
    fn directional_difference_examples() {
        let c = CubeFunction::constant(3, d(5, 1)).unwrap();
        for conv in [DiffConvention::Full, DiffConvention::Half] {
            assert!(directional_difference(&c, 2, conv).unwrap().values().iter().all(Dyadic::is_zero));
        }
        let dict = dictator(3).indicator();
        let full = directional_difference(&dict, 1, DiffConvention::Full).unwrap();
        for x in 0..8u32 {
            let want = if x & 1 == 1 { 1 } else { -1 };
            assert_eq!(full.value(x), &Dyadic::from_int(want));
        }
        let s = wht(&full);
        assert_eq!(s.coeff(1), &Dyadic::from_int(-1));
        assert!(s.coeffs().iter().enumerate().all(|(m, c)| m == 1 || c.is_zero()));

        let maj = majority3().indicator();
        let full = directional_difference(&maj, 1, DiffConvention::Full).unwrap();
        assert_eq!(full.norm2_squared(), d(1, 1));
        assert_eq!(full.norm1(), d(1, 1));
        assert_eq!(majority3().influence(1).unwrap(), d(1, 1));

        let base = wht(&maj);
        let half = wht(&directional_difference(&maj, 2, DiffConvention::Half).unwrap());
        let fullw = wht(&directional_difference(&maj, 2, DiffConvention::Full).unwrap());
        for s in 0..8u32 {
            let want = if s & 2 != 0 { base.coeff(s).clone() } else { Dyadic::zero() };
            assert_eq!(half.coeff(s), &want);
            assert_eq!(fullw.coeff(s), &want.scale_pow2(1));
        }
        assert!(directional_difference(&maj, 4, DiffConvention::Full).is_err());
    }

    #[test]
    fn m_alpha_examples() {
        let u1 = CubeFunction::character(3, 0b001).unwrap();
        for a in [0.0, 0.3, 0.5, 1.0] {
            assert!((m_alpha(&u1, a).unwrap() - 1.0).abs() < 1e-15);
        }
        let u12 = CubeFunction::character(3, 0b011).unwrap();
        assert!((m_alpha(&u12, 0.5).unwrap() - 1.0 / 2f64.sqrt()).abs() < 1e-15);
        let f = antipodal_lift(&majority3()).function;
        assert!((m_alpha(&f, 1.0).unwrap() - 5.0 / 6.0).abs() < 1e-15);
        assert_eq!(m_alpha(&f, 0.0).unwrap(), 1.0);
        let ind = majority3().indicator();
        assert!(matches!(m_alpha(&ind, 0.5), Err(Error::NonzeroMean)));
    }

    #[test]
    fn antipodal_lift_examples() {
        let lift = antipodal_lift(&dictator(3));
        assert!(lift.antipodal);
        let s = wht(&lift.function);
        assert_eq!(s.coeff(1), &Dyadic::from_int(-1));
        assert_eq!(s.energy(), Dyadic::one());

        let lift = antipodal_lift(&majority3());
        assert!(lift.antipodal && lift.function.is_antipodal());
        let s = wht(&lift.function);
        for single in [1, 2, 4] {
            assert_eq!(s.coeff(single), &d(-1, 1));
        }
        assert_eq!(s.coeff(7), &d(1, 1));

        let lift = antipodal_lift(&SetFamily::full(3).unwrap());
        assert!(!lift.antipodal);
        assert_eq!(lift.function, CubeFunction::constant(3, Dyadic::one()).unwrap());
    }

    #[test]
    fn f_star_examples() {
        let maj = majority3();
        assert_eq!(f_star(&antipodal_lift(&maj).function), maj.indicator());
        let neg = CubeFunction::constant(3, Dyadic::from_int(-1)).unwrap();
        assert!(f_star(&neg).values().iter().all(Dyadic::is_zero));

        // {0,±1} antipodal form χ(B) + χ(B') − 1 has f* = χ(B⁺).
        let b = SetFamily::from_fn(4, |m| m & 0b0011 == 0b0011 || m & 0b1100 == 0b1100).unwrap();
        let dual = b.dual();
        let f = b.indicator().zip(&dual.indicator(), |x, y| x + y - Dyadic::one()).unwrap();
        assert!(f.is_antipodal());
        let (plus, _) = b.plus_minus_parts().unwrap();
        assert_eq!(f_star(&f), plus.indicator());
    }
}
