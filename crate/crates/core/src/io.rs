//! JSON family files, digests, and report serialization.
//!
//! A family file holds `n` and exactly one of
//!
//! * `"family"`: a list of member subsets, each a list of 1-based elements;
//! * `"generators"` with `"closure": "up" | "down"`;
//! * `"tt"`: the `2^n`-bit membership table in hex, byte 0 first, bit `m`
//!   of the table being the subset with mask `m` (element `i` = bit `i−1`).
//!
//! Rationals are written as `{"num", "den_pow2", "float"}` when the
//! denominator is a power of two and `{"num", "den", "float"}` otherwise.
//! The float is a rendering only.

use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Map, Value as Json};
use sha2::{Digest, Sha256};

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::families::TribesStats;
use crate::flow::{FlowResult, KahnCheck, KleitmanResult};
use crate::inequalities::{EnsembleReport, InequalityReport};
use crate::search::ExtremalRecord;
use crate::set_family::SetFamily;
use crate::value::{rational_to_f64, Value};

/// How a family is written out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Encoding {
    List,
    /// Minimal members with `"closure": "up"`; only for increasing families.
    UpGenerators,
    /// Maximal members with `"closure": "down"`; only for decreasing families.
    DownGenerators,
    TruthTable,
}

/// SHA-256 over the dimension byte and the membership table.
pub fn family_digest(f: &SetFamily) -> String {
    let mut h = Sha256::new();
    h.update([f.n() as u8]);
    for w in f.words() {
        h.update(w.to_le_bytes());
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn subsets_json(masks: impl IntoIterator<Item = u32>) -> Json {
    Json::Array(
        masks
            .into_iter()
            .map(|m| json!(crate::set_family::mask_elements(m)))
            .collect(),
    )
}

pub fn family_to_json(f: &SetFamily, encoding: Encoding) -> Result<Json> {
    Ok(match encoding {
        Encoding::List => json!({ "n": f.n(), "family": subsets_json(f.members()) }),
        Encoding::UpGenerators => {
            if !f.is_increasing() {
                return Err(Error::InvalidInput("up generators need an increasing family".into()));
            }
            json!({ "n": f.n(), "generators": subsets_json(f.minimal_members()), "closure": "up" })
        }
        Encoding::DownGenerators => {
            if !f.is_decreasing() {
                return Err(Error::InvalidInput("down generators need a decreasing family".into()));
            }
            let c = f.complement();
            json!({ "n": f.n(), "generators": subsets_json(c.maximal_non_members()), "closure": "down" })
        }
        Encoding::TruthTable => json!({ "n": f.n(), "tt": f.to_hex() }),
    })
}

fn parse_subsets(n: usize, v: &Json, what: &str) -> Result<Vec<Vec<usize>>> {
    let arr = v.as_array().ok_or_else(|| Error::InvalidInput(format!("`{what}` must be a list")))?;
    arr.iter()
        .map(|s| {
            let items = s
                .as_array()
                .ok_or_else(|| Error::InvalidInput(format!("`{what}` entries must be lists")))?;
            items
                .iter()
                .map(|e| {
                    let k = e.as_u64().ok_or_else(|| Error::InvalidInput(format!("bad element {e}")))? as usize;
                    if k == 0 || k > n {
                        return Err(Error::CoordinateOutOfRange { k, n });
                    }
                    Ok(k)
                })
                .collect()
        })
        .collect()
}

pub fn family_from_json(v: &Json) -> Result<SetFamily> {
    let obj = v.as_object().ok_or_else(|| Error::InvalidInput("family file must be an object".into()))?;
    let n = obj
        .get("n")
        .and_then(Json::as_u64)
        .ok_or_else(|| Error::InvalidInput("missing integer `n`".into()))? as usize;
    let present: Vec<&str> = ["family", "generators", "tt"].into_iter().filter(|k| obj.contains_key(*k)).collect();
    if present.len() != 1 {
        return Err(Error::InvalidInput(format!(
            "need exactly one of family/generators/tt, found {present:?}"
        )));
    }
    match present[0] {
        "family" => SetFamily::from_subsets(n, &parse_subsets(n, &obj["family"], "family")?),
        "generators" => {
            let g = SetFamily::from_subsets(n, &parse_subsets(n, &obj["generators"], "generators")?)?;
            match obj.get("closure").and_then(Json::as_str) {
                Some("up") => Ok(g.up_closure()),
                Some("down") => Ok(g.down_closure()),
                _ => Err(Error::InvalidInput("`closure` must be \"up\" or \"down\"".into())),
            }
        }
        _ => {
            let hex = obj["tt"].as_str().ok_or_else(|| Error::InvalidInput("`tt` must be a string".into()))?;
            SetFamily::from_hex(n, hex)
        }
    }
}

pub fn read_json(path: &Path) -> Result<Json> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn read_family(path: &Path) -> Result<SetFamily> {
    family_from_json(&read_json(path)?)
}

/// A list of families: either a JSON array of family objects or an object
/// with a `"families"` array.
pub fn read_families(path: &Path) -> Result<Vec<SetFamily>> {
    let v = read_json(path)?;
    let list = match &v {
        Json::Array(a) => a,
        Json::Object(o) => o
            .get("families")
            .and_then(Json::as_array)
            .ok_or_else(|| Error::InvalidInput("expected a `families` array".into()))?,
        _ => return Err(Error::InvalidInput("expected a list of families".into())),
    };
    list.iter().map(family_from_json).collect()
}

pub fn write_json(path: &Path, v: &Json) -> Result<()> {
    fs::write(path, serde_json::to_string_pretty(v)? + "\n")?;
    Ok(())
}

pub fn rational_json(r: &BigRational) -> Json {
    let den = r.denom();
    let float = rational_to_f64(r);
    let pow = den.bits() - 1;
    if den.trailing_zeros() == Some(pow) {
        json!({ "num": r.numer().to_string(), "den_pow2": pow, "float": float })
    } else {
        json!({ "num": r.numer().to_string(), "den": den.to_string(), "float": float })
    }
}

pub fn dyadic_json(d: &Dyadic) -> Json {
    rational_json(&d.to_rational())
}

pub fn value_json(v: &Value) -> Json {
    match v {
        Value::Exact(r) => rational_json(r),
        Value::Float(x) if x.is_finite() => json!({ "float": x }),
        Value::Float(x) => json!({ "float": x.to_string() }),
    }
}

/// Inverse of [`rational_json`]; the float is ignored.
pub fn rational_from_json(v: &Json) -> Result<BigRational> {
    let bad = || Error::InvalidInput(format!("not an exact rational: {v}"));
    let num: BigInt = v.get("num").and_then(Json::as_str).ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let den = if let Some(p) = v.get("den_pow2").and_then(Json::as_u64) {
        BigInt::one() << p as usize
    } else {
        v.get("den").and_then(Json::as_str).ok_or_else(bad)?.parse().map_err(|_| bad())?
    };
    Ok(BigRational::new(num, den))
}

fn opt_value(v: &Option<Value>) -> Json {
    v.as_ref().map(value_json).unwrap_or(Json::Null)
}

pub fn report_json(r: &InequalityReport) -> Json {
    let extras: Map<String, Json> = r.extras.iter().map(|(k, v)| (k.to_string(), value_json(v))).collect();
    json!({
        "checker": r.checker.name(),
        "statement": r.checker.statement(),
        "kind": format!("{:?}", r.kind),
        "lhs": value_json(&r.lhs),
        "rhs": value_json(&r.rhs),
        "margin": value_json(&r.margin),
        "ratio": opt_value(&r.ratio),
        "verdict": r.verdict.as_str(),
        "extras": extras,
        "digest_a": r.digest_a,
        "digest_b": r.digest_b,
        "params": {
            "alpha": r.params.alpha,
            "permutation": format!("{:?}", r.params.permutation),
            "a": r.params.a,
        },
    })
}

pub fn flow_json(f: &FlowResult) -> Json {
    let flow: Vec<Json> = f
        .flow
        .iter()
        .map(|((a, b), v)| {
            json!({
                "from": crate::set_family::mask_elements(*a),
                "to": crate::set_family::mask_elements(*b),
                "amount": rational_json(v),
            })
        })
        .collect();
    json!({
        "feasible": f.feasible,
        "structurally_infeasible": f.structurally_infeasible,
        "value": rational_json(&f.value),
        "flow": flow,
        "certificate": f.certificate.as_ref().map(|c| json!({
            "family": subsets_json(c.members()),
            "digest": family_digest(c),
        })),
    })
}

pub fn kahn_json(k: &KahnCheck) -> Json {
    json!({
        "lambda": k.lambda.iter().map(rational_json).collect::<Vec<_>>(),
        "direct_criterion": k.direct,
        "flow": flow_json(&k.result),
    })
}

pub fn kleitman_json(k: &KleitmanResult) -> Json {
    json!({
        "feasible": k.feasible,
        "lambda": k.lambda.as_ref().map(|l| l.iter().map(rational_json).collect::<Vec<_>>()),
        "best_slack": k.best_slack.as_ref().map(rational_json),
        "active_rows": k.active_rows,
    })
}

pub fn tribes_json(s: &TribesStats) -> Json {
    json!({
        "r": s.params.r,
        "m": s.params.m,
        "n": s.params.n(),
        "source": format!("{:?}", s.source),
        "mu_a": value_json(&s.mu_a),
        "mu_b": value_json(&s.mu_b),
        "cor": value_json(&s.cor),
        "influence": value_json(&s.influence),
        "ratio_chvatal": value_json(&s.ratio_chvatal),
        "ratio_balanced": value_json(&s.ratio_balanced),
    })
}

pub fn ensemble_json(e: &EnsembleReport) -> Json {
    json!({
        "checker": e.checker.name(),
        "size": e.size,
        "measure": e.measure.as_ref().map(dyadic_json),
        "expected_cor": rational_json(&e.expected_cor),
        "lhs": value_json(&e.lhs),
        "rhs": value_json(&e.rhs),
        "margin": value_json(&e.margin),
        "holds": e.holds,
        "gamma": e.gamma,
        "q": e.q,
        "q_integral": e.q_integral,
    })
}

pub fn record_json(r: &ExtremalRecord) -> Json {
    let fam = |f: &Option<SetFamily>| {
        f.as_ref()
            .map(|f| json!({ "n": f.n(), "tt": f.to_hex(), "family": subsets_json(f.members()) }))
    };
    json!({
        "checker": r.checker.name(),
        "objective": r.objective.name(),
        "best": opt_value(&r.best),
        "witness_a": fam(&r.witness_a),
        "witness_b": fam(&r.witness_b),
        "witness_report": r.witness_report.as_ref().map(report_json),
        "examined": r.examined,
        "vacuous": r.vacuous,
        "skipped": r.skipped,
        "failures": r.failures,
        "ratio_min": r.ratio_min,
        "ratio_median": r.ratio_median,
        "trace": r.trace.iter().map(value_json).collect::<Vec<_>>(),
    })
}

/// Wraps a report body with run metadata.
pub fn envelope(command: &[String], seed: Option<u64>, elapsed_ms: u128, body: Json) -> Json {
    json!({
        "tool": "hypercorr",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "seed": seed,
        "elapsed_ms": elapsed_ms.to_u64(),
        "report": body,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{majority, tribes, TribesParams};
    use crate::value::ratio;

    #[test]
    fn encodings_round_trip() {
        let (t, _) = tribes(TribesParams::new(2, 2).unwrap()).unwrap();
        for enc in [Encoding::List, Encoding::UpGenerators, Encoding::TruthTable] {
            let j = family_to_json(&t, enc).unwrap();
            assert_eq!(family_from_json(&j).unwrap(), t, "{enc:?}");
        }
        let low = t.complement();
        let j = family_to_json(&low, Encoding::DownGenerators).unwrap();
        assert_eq!(family_from_json(&j).unwrap(), low);
        assert!(family_to_json(&low, Encoding::UpGenerators).is_err());
    }

    #[test]
    fn parse_examples() {
        let j = json!({ "n": 3, "generators": [[1, 2], [1, 3], [2, 3]], "closure": "up" });
        assert_eq!(family_from_json(&j).unwrap(), majority(3).unwrap());
        // members {1,2},{1,3},{2,3},{1,2,3} are masks 3,5,6,7
        let j = json!({ "n": 3, "tt": "e8" });
        assert_eq!(family_from_json(&j).unwrap(), majority(3).unwrap());
        assert!(family_from_json(&json!({ "n": 3, "family": [[4]] })).is_err());
        assert!(family_from_json(&json!({ "n": 3, "family": [], "tt": "00" })).is_err());
    }

    #[test]
    fn digests_depend_on_content_only() {
        let m = majority(3).unwrap();
        let via_tt = family_from_json(&family_to_json(&m, Encoding::TruthTable).unwrap()).unwrap();
        assert_eq!(family_digest(&m), family_digest(&via_tt));
        assert_ne!(family_digest(&m), family_digest(&m.complement()));
    }

    #[test]
    fn rationals_round_trip() {
        for r in [ratio(17, 256), ratio(136, 189), ratio(-3, 1), ratio(0, 1)] {
            assert_eq!(rational_from_json(&rational_json(&r)).unwrap(), r);
        }
        assert_eq!(rational_json(&ratio(17, 256))["den_pow2"], json!(8));
    }
}
