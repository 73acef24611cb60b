//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Solves `max c·x` subject to `A x = b`, `x ≥ 0`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum LpOutcome {
    Optimal { x: Vec<BigRational>, value: BigRational },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    /// Reduced costs `c_j − c_B B⁻¹ A_j`; the last entry is `−c_B x_B`.
    obj: Vec<BigRational>,
    width: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let k = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &k * pv;
                }
            }
        }
        if !self.obj[c].is_zero() {
            let k = self.obj[c].clone();
            for (v, pv) in self.obj.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &k * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    fn set_objective(&mut self, c: &[BigRational]) {
        let mut obj: Vec<BigRational> = (0..=self.width)
            .map(|j| c.get(j).cloned().unwrap_or_else(BigRational::zero))
            .collect();
        obj[self.width] = BigRational::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = c.get(b).cloned().unwrap_or_else(BigRational::zero);
            if cb.is_zero() {
                continue;
            }
            for (v, t) in obj.iter_mut().zip(&self.rows[i]) {
                *v -= &cb * t;
            }
        }
        self.obj = obj;
    }

    /// Runs Bland-rule pivots over columns `< allowed`; `false` if unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        loop {
            let Some(enter) = (0..allowed).find(|&j| self.obj[j].is_positive()) else {
                return true;
            };
            let mut leave: Option<(usize, BigRational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[self.width] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, enter),
                None => return false,
            }
        }
    }
}

pub(crate) fn solve(a: &[Vec<BigRational>], b: &[BigRational], c: &[BigRational]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    let width = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut t: Vec<BigRational> = row
            .iter()
            .map(|v| if flip { -v } else { v.clone() })
            .collect();
        t.resize(n, BigRational::zero());
        for k in 0..m {
            t.push(if k == i { BigRational::one() } else { BigRational::zero() });
        }
        t.push(rhs.abs());
        rows.push(t);
    }
    let mut tab = Tableau { rows, basis: (n..width).collect(), obj: Vec::new(), width };

    // Phase I: maximize −Σ artificials.
    let phase1: Vec<BigRational> = (0..width)
        .map(|j| if j >= n { -BigRational::one() } else { BigRational::zero() })
        .collect();
    tab.set_objective(&phase1);
    tab.optimize(width);
    if tab.obj[width].is_positive() {
        // −(−Σ artificials) > 0
        return LpOutcome::Infeasible;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    let mut i = 0;
    while i < tab.rows.len() {
        if tab.basis[i] >= n {
            match (0..n).find(|&j| !tab.rows[i][j].is_zero()) {
                Some(j) => tab.pivot(i, j),
                None => {
                    tab.rows.remove(i);
                    tab.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    tab.set_objective(c);
    if !tab.optimize(n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &bv) in tab.basis.iter().enumerate() {
        x[bv] = tab.rows[i][width].clone();
    }
    let value = x.iter().zip(c).map(|(xi, ci)| xi * ci).sum();
    LpOutcome::Optimal { x, value }
}
