//! The three shipped instances: vector spaces over GF(q), relations, and
//! distributive lattices under Birkhoff duality.

mod boolalg;
mod common;
mod finvect;
pub mod lattice;
mod rel;

use std::collections::BTreeMap;

pub use boolalg::{ba_flat, ba_sharp, BoolAlg};
pub use finvect::{bar, fv_counit, fv_forget, fv_free, fv_free_mor, fv_gamma, fv_unit, FinVect};
pub use lattice::{ba_hom_image, ba_joinirr, ba_lower, ba_powerset_algebra};
pub use rel::{powerset, rel_bang, Rel};

use lpc_semantics::{Model, SemError};

pub const MODEL_NAMES: [&str; 3] = ["finvect", "rel", "boolalg"];

/// Instance parameters as `key=value` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(BTreeMap<String, usize>);

impl Params {
    /// Parse `q=3,max_size=2`.
    pub fn parse(text: &str) -> Result<Params, SemError> {
        let mut out = BTreeMap::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item.split_once('=').ok_or_else(|| SemError::Params(format!("expected key=value, got {item:?}")))?;
            let v = v.trim().parse().map_err(|_| SemError::Params(format!("{k} needs a number, got {v:?}")))?;
            out.insert(k.trim().to_string(), v);
        }
        Ok(Params(out))
    }

    pub fn set(mut self, key: &str, value: usize) -> Params {
        self.0.insert(key.to_string(), value);
        self
    }

    fn take(&self, allowed: &[&str]) -> Result<(), SemError> {
        match self.0.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(SemError::Params(format!("unknown parameter {k}; expected one of {}", allowed.join(", ")))),
            None => Ok(()),
        }
    }

    fn get(&self, key: &str, default: usize) -> usize {
        self.0.get(key).copied().unwrap_or(default)
    }
}

/// Build a named instance. `max_size` bounds enumerated objects in every
/// model; the guards bound derived carriers.
pub fn instance_build(name: &str, params: &Params) -> Result<Box<dyn Model>, SemError> {
    match name {
        "finvect" => {
            params.take(&["q", "max_size", "max_vectors"])?;
            let q = u8::try_from(params.get("q", 2)).map_err(|_| SemError::Params("q is too large".into()))?;
            let mut m = FinVect::new(q, params.get("max_size", 2))?;
            m.max_vectors = params.get("max_vectors", m.max_vectors);
            Ok(Box::new(m))
        }
        "rel" => {
            params.take(&["max_size", "max_power"])?;
            let d = Rel::default();
            Ok(Box::new(Rel { max_size: params.get("max_size", d.max_size), max_power: params.get("max_power", d.max_power) }))
        }
        "boolalg" => {
            params.take(&["max_size", "max_lower"])?;
            let d = BoolAlg::default();
            Ok(Box::new(BoolAlg {
                max_poset: params.get("max_size", d.max_poset),
                max_lower: params.get("max_lower", d.max_lower),
            }))
        }
        other => Err(SemError::Params(format!("unknown model {other}; expected one of {}", MODEL_NAMES.join(", ")))),
    }
}
