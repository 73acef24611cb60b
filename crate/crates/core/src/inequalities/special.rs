//! Real-valued helpers: `φ`, `ψ_α`, and logarithms that stay exact when
//! the argument is a power of two.

use crate::dyadic::Dyadic;
use crate::value::Value;

/// `ψ_α(x) = x / ln(e/x)^α` on `[0, e)`, with `ψ_α(0) = 0`.
pub fn psi_alpha(x: f64, alpha: f64) -> Option<f64> {
    if x == 0.0 {
        return Some(0.0);
    }
    if !(0.0..std::f64::consts::E).contains(&x) {
        return None;
    }
    Some(x / (1.0 - x.ln()).powf(alpha))
}

/// `φ(x) = x / ln(e/x)`.
pub fn phi(x: f64) -> Option<f64> {
    psi_alpha(x, 1.0)
}

/// `ψ(x) = x / sqrt(ln(e/x))`.
pub fn psi(x: f64) -> Option<f64> {
    psi_alpha(x, 0.5)
}

/// `log2(1/μ)` for `0 < μ ≤ 1`; exact when `μ` is a power of two.
pub fn log2_inv(mu: &Dyadic) -> Value {
    match mu.log2_exact() {
        Some(k) => Value::int(-k),
        None => Value::Float(-mu.to_f64().log2()),
    }
}

/// `x · log2(1/x)` with the `0 · ∞ = 0` convention at `x = 0`.
pub fn entropy_term(mu: &Dyadic) -> Value {
    if mu.is_zero() {
        return Value::int(0);
    }
    match log2_inv(mu) {
        Value::Exact(l) => Value::Exact(mu.to_rational() * l),
        Value::Float(l) => Value::Float(mu.to_f64() * l),
    }
}

/// `Value × Value` keeping exactness where possible.
pub fn times(a: &Value, b: &Value) -> Value {
    match (a, b) {
        (Value::Exact(x), Value::Exact(y)) => Value::Exact(x * y),
        _ => Value::Float(a.to_f64() * b.to_f64()),
    }
}
