//! Family descriptions as they appear in spec files.
//!
//! A spec file is a single JSON object tagged by `family`. Rational scalars
//! are written as strings (`"1/2"`, `"-3"`) so no precision is lost in
//! transit; sets are plain integer arrays and must be strictly increasing.

use krall_core::rat::{parse_rat, Rat};
use krall_core::sets::{FiniteSet, SetPair};
use serde::Deserialize;
use serde_json::Value;

/// A rational parameter: either a bare integer or a `"p/q"` string.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    pub fn to_rat(&self) -> Result<Rat, String> {
        match self {
            Scalar::Int(v) => Ok(krall_core::rat::rat(*v)),
            Scalar::Text(s) => {
                parse_rat(s).map_err(|e| format!("bad rational {s:?}: {e}"))
            }
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "family")]
pub enum FamilySpec {
    #[serde(rename = "krall-meixner")]
    KrallMeixner {
        a: Scalar,
        c_hat: i64,
        #[serde(rename = "F1")]
        f1: Vec<i64>,
        #[serde(rename = "F2")]
        f2: Vec<i64>,
    },
    #[serde(rename = "exceptional-meixner")]
    ExceptionalMeixner {
        a: Scalar,
        c_hat: i64,
        #[serde(rename = "F1")]
        f1: Vec<i64>,
        #[serde(rename = "F2")]
        f2: Vec<i64>,
    },
    #[serde(rename = "exceptional-laguerre")]
    ExceptionalLaguerre {
        alpha_hat: i64,
        #[serde(rename = "F1")]
        f1: Vec<i64>,
        #[serde(rename = "F2")]
        f2: Vec<i64>,
    },
    #[serde(rename = "krall-hahn")]
    KrallHahn {
        a_hat: i64,
        b: Scalar,
        #[serde(rename = "N")]
        big_n: i64,
        #[serde(rename = "F1")]
        f1: Vec<i64>,
        #[serde(rename = "F2")]
        f2: Vec<i64>,
        #[serde(rename = "F3")]
        f3: Vec<i64>,
        #[serde(rename = "F4")]
        f4: Vec<i64>,
    },
    #[serde(rename = "hahn-deleted")]
    HahnDeleted {
        c: i64,
        d: Scalar,
        #[serde(rename = "N")]
        big_n: i64,
        #[serde(rename = "A")]
        set_a: Vec<i64>,
        #[serde(rename = "B", default)]
        set_b: Vec<i64>,
    },
}

fn check_set(name: &str, elems: &[i64]) -> Result<FiniteSet, String> {
    for w in elems.windows(2) {
        if w[0] >= w[1] {
            return Err(format!(
                "{name} must be strictly increasing, got {elems:?}"
            ));
        }
    }
    if let Some(&first) = elems.first() {
        if first < 0 {
            return Err(format!("{name} must be nonnegative, got {elems:?}"));
        }
    }
    Ok(FiniteSet::new(elems.to_vec()))
}

impl FamilySpec {
    /// Parse and validate a spec document. Any failure here is a schema
    /// error, distinct from a mathematical degeneracy found later.
    pub fn parse(text: &str) -> Result<FamilySpec, String> {
        let spec: FamilySpec =
            serde_json::from_str(text).map_err(|e| format!("invalid spec: {e}"))?;
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<(), String> {
        match self {
            FamilySpec::KrallMeixner { f1, f2, .. }
            | FamilySpec::ExceptionalMeixner { f1, f2, .. }
            | FamilySpec::ExceptionalLaguerre { f1, f2, .. } => {
                check_set("F1", f1)?;
                check_set("F2", f2)?;
            }
            FamilySpec::KrallHahn { f1, f2, f3, f4, .. } => {
                check_set("F1", f1)?;
                check_set("F2", f2)?;
                check_set("F3", f3)?;
                check_set("F4", f4)?;
            }
            FamilySpec::HahnDeleted { d, set_a, set_b, .. } => {
                check_set("A", set_a)?;
                check_set("B", set_b)?;
                if !set_b.is_empty() {
                    let dv = d.to_rat()?;
                    if !dv.is_integer() {
                        return Err(format!(
                            "two-sided deletion requires an integer d, got {dv}"
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::KrallMeixner { .. } => "krall-meixner",
            FamilySpec::ExceptionalMeixner { .. } => "exceptional-meixner",
            FamilySpec::ExceptionalLaguerre { .. } => "exceptional-laguerre",
            FamilySpec::KrallHahn { .. } => "krall-hahn",
            FamilySpec::HahnDeleted { .. } => "hahn-deleted",
        }
    }

    /// The spec as it will be echoed into reports: the parsed JSON value.
    pub fn echo(text: &str) -> Value {
        serde_json::from_str(text).unwrap_or(Value::Null)
    }
}

pub fn set_pair(f1: &[i64], f2: &[i64]) -> SetPair {
    SetPair::new(FiniteSet::new(f1.to_vec()), FiniteSet::new(f2.to_vec()))
}

/// Specs shipped inside the binary; `verify` accepts these names as well as
/// file paths, and `list-examples` prints them.
pub const BUNDLED: &[(&str, &str)] = &[
    (
        "krall-meixner-11",
        include_str!("../../../specs/krall-meixner-11.json"),
    ),
    (
        "krall-meixner-segment",
        include_str!("../../../specs/krall-meixner-segment.json"),
    ),
    (
        "krall-meixner-origin",
        include_str!("../../../specs/krall-meixner-origin.json"),
    ),
    (
        "krall-meixner-rm4-32",
        include_str!("../../../specs/krall-meixner-rm4-32.json"),
    ),
    (
        "krall-meixner-inadmissible",
        include_str!("../../../specs/krall-meixner-inadmissible.json"),
    ),
    (
        "exceptional-meixner-11",
        include_str!("../../../specs/exceptional-meixner-11.json"),
    ),
    (
        "exceptional-laguerre-example",
        include_str!("../../../specs/exceptional-laguerre-example.json"),
    ),
    (
        "exceptional-laguerre-second",
        include_str!("../../../specs/exceptional-laguerre-second.json"),
    ),
    (
        "exceptional-laguerre-inadmissible",
        include_str!("../../../specs/exceptional-laguerre-inadmissible.json"),
    ),
    (
        "hahn-deleted-18",
        include_str!("../../../specs/hahn-deleted-18.json"),
    ),
    (
        "hahn-deleted-two-sided",
        include_str!("../../../specs/hahn-deleted-two-sided.json"),
    ),
    (
        "hahn-deleted-showcase",
        include_str!("../../../specs/hahn-deleted-showcase.json"),
    ),
    (
        "krall-hahn-theorem",
        include_str!("../../../specs/krall-hahn-theorem.json"),
    ),
    (
        "krall-hahn-two-sided",
        include_str!("../../../specs/krall-hahn-two-sided.json"),
    ),
];

pub fn bundled(name: &str) -> Option<&'static str> {
    BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_specs_all_parse() {
        for (name, text) in BUNDLED {
            let spec = FamilySpec::parse(text)
                .unwrap_or_else(|e| panic!("bundled spec {name}: {e}"));
            assert!(!spec.family_name().is_empty());
        }
    }

    #[test]
    fn unsorted_set_is_a_schema_error() {
        let text = r#"{"family":"krall-meixner","a":"1/2","c_hat":-1,"F1":[2,1],"F2":[1]}"#;
        let err = FamilySpec::parse(text).unwrap_err();
        assert!(err.contains("strictly increasing"), "{err}");
    }

    #[test]
    fn scalar_accepts_integer_and_fraction() {
        let text = r#"{"family":"hahn-deleted","c":1,"d":"3/2","N":8,"A":[0]}"#;
        let spec = FamilySpec::parse(text).unwrap();
        match spec {
            FamilySpec::HahnDeleted { d, set_b, .. } => {
                assert_eq!(d.to_rat().unwrap(), krall_core::rat::rat_pq(3, 2));
                assert!(set_b.is_empty());
            }
            _ => panic!("wrong variant"),
        }
    }

    #[test]
    fn unknown_family_rejected() {
        let text = r#"{"family":"charlier","a":"1/2"}"#;
        assert!(FamilySpec::parse(text).is_err());
    }
}
