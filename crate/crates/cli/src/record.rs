use gridperim_core::optimizer::{self, PerimeterResult};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessParams {
    pub a: u64,
    pub c: u64,
    pub k: u64,
    pub last: u64,
}

/// One solved volume, as printed by `solve`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: u64,
    pub p: u64,
    pub lower: u64,
    /// `null` where the upper bound is undefined.
    pub upper: Option<u64>,
    pub certified: bool,
    pub witness_params: WitnessParams,
    pub witness_profile: Vec<u32>,
}

impl From<&PerimeterResult> for OutputRecord {
    fn from(r: &PerimeterResult) -> Self {
        let w = r.witness;
        OutputRecord {
            n: r.n,
            p: r.p,
            lower: optimizer::lower_bound(r.n),
            upper: optimizer::upper_bound(r.n),
            certified: r.certified,
            witness_params: WitnessParams {
                a: w.a(),
                c: w.c(),
                k: w.k(),
                last: w.last(),
            },
            witness_profile: w.expand().heights().to_vec(),
        }
    }
}

pub const CSV_HEADER: &str = "n,p,lower,upper,certified,a,c,k,last";

impl OutputRecord {
    /// A CSV row in [`CSV_HEADER`] order; an undefined upper bound is empty.
    pub fn csv_row(&self) -> String {
        let w = &self.witness_params;
        let upper = self.upper.map(|u| u.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n, self.p, self.lower, upper, self.certified, w.a, w.c, w.k, w.last
        )
    }
}
