//! Versioned JSON schemas for verdicts and falsification certificates.
//!
//! Every document carries a top-level `"schema": 1` so fixtures stay
//! comparable across releases, and every document re-parses into the
//! struct that emitted it.

use serde::{Deserialize, Serialize};

use kfk_core::braid::BraidParams;
use kfk_core::brown::{BrownVerdict, WeightHom};
use kfk_core::fibration::{FalsificationReport, FibrationVerdict};
use kfk_core::slope::Slope;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightJson {
    pub wx: i64,
    pub wy: i64,
}

impl From<WeightHom> for WeightJson {
    fn from(w: WeightHom) -> Self {
        WeightJson { wx: w.wx, wy: w.wy }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrownJson {
    pub kernel_fg: bool,
    pub prefix_values: Vec<i64>,
    pub max_value: i64,
    pub max_positions: Vec<usize>,
    pub min_value: i64,
    pub min_positions: Vec<usize>,
}

impl From<&BrownVerdict> for BrownJson {
    fn from(v: &BrownVerdict) -> Self {
        BrownJson {
            kernel_fg: v.kernel_fg,
            prefix_values: v.prefix_values.clone(),
            max_value: v.max_value,
            max_positions: v.max_positions.clone(),
            min_value: v.min_value,
            min_positions: v.min_positions.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberJson {
    pub schema: u32,
    pub fibred: bool,
    pub boundary_components: usize,
    pub weight: WeightJson,
    pub brown: BrownJson,
}

impl From<&FibrationVerdict> for FiberJson {
    fn from(v: &FibrationVerdict) -> Self {
        FiberJson {
            schema: SCHEMA_VERSION,
            fibred: v.fibred,
            boundary_components: v.boundary_components,
            weight: v.weight.into(),
            brown: (&v.brown).into(),
        }
    }
}

/// Certificate emitted when a guaranteed-fibred input fails Brown's
/// criterion, or when a sweep row violates one of the verified
/// inequalities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FalsificationJson {
    pub schema: u32,
    pub event: String,
    pub n: usize,
    pub b: usize,
    pub t: usize,
    pub p: i64,
    pub q: i64,
    pub weight: WeightJson,
    pub brown: BrownJson,
}

impl FalsificationJson {
    pub fn from_report(report: &FalsificationReport) -> Self {
        FalsificationJson {
            schema: SCHEMA_VERSION,
            event: "brown_extremum_not_unique".to_string(),
            n: report.params.n(),
            b: report.params.b(),
            t: report.params.t(),
            p: report.slope.p(),
            q: report.slope.q(),
            weight: report.weight.into(),
            brown: (&report.verdict).into(),
        }
    }

    pub fn new(
        event: &str,
        params: BraidParams,
        slope: Slope,
        weight: WeightHom,
        brown: &BrownVerdict,
    ) -> Self {
        FalsificationJson {
            schema: SCHEMA_VERSION,
            event: event.to_string(),
            n: params.n(),
            b: params.b(),
            t: params.t(),
            p: slope.p(),
            q: slope.q(),
            weight: weight.into(),
            brown: brown.into(),
        }
    }
}
