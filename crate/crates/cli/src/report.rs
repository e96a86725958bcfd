//! Machine-readable report payloads. Every rational is serialized exactly as
//! a `p/q` string next to a 6-decimal approximation; field order is fixed by
//! the struct definitions so identical inputs give byte-identical output.

use serde::Serialize;

use vug_core::fileformat::GameFile;
use vug_core::scalar::approx;
use vug_core::Scalar;

#[derive(Clone, Debug, Serialize)]
pub struct RatField {
    pub exact: String,
    pub approx: f64,
}

pub fn rat<R: Scalar>(v: &R) -> RatField {
    RatField {
        exact: v.to_string(),
        approx: (approx(v) * 1e6).round() / 1e6,
    }
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub n: usize,
    pub edge_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub tau: usize,
    pub information_groups: Vec<Vec<usize>>,
    pub group_common_in_neighbors: Vec<Vec<usize>>,
    pub reciprocal_edges: Vec<(usize, usize)>,
    pub alpha: usize,
    pub alpha_witness: Vec<usize>,
    pub reciprocal_maximal_cliques: Vec<Vec<usize>>,
    pub alpha_star_reciprocal: RatField,
    pub alpha_star_weights: Vec<RatField>,
    pub k_star_reciprocal: RatField,
    pub k_star_weights: Vec<RatField>,
    pub duality_exact: bool,
    pub thm1_hypothesis_met: bool,
    pub thm1_bound: RatField,
    pub thm2_bound: RatField,
    pub prop3_bound: RatField,
}

#[derive(Debug, Serialize)]
pub struct WorstCaseReport {
    pub construction: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    pub epsilon: RatField,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub groups: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representatives: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group_covers_tiny_box: Option<Vec<bool>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub independent_set: Option<Vec<usize>>,
    pub predicted_ratio: RatField,
    pub designated_equilibrium: Vec<Vec<String>>,
    pub designated_is_equilibrium: bool,
    pub designated_welfare: RatField,
    pub equilibrium_count: usize,
    pub optimum_profile: Vec<Vec<String>>,
    pub optimum_welfare: RatField,
    pub empirical_poa: RatField,
    pub exact_match: bool,
    pub valid_utility: bool,
    pub consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub game_path: Option<String>,
    pub game: GameFile,
}

#[derive(Debug, Serialize)]
pub struct EquilibriumEntry {
    pub actions: Vec<Vec<String>>,
    pub welfare: RatField,
}

#[derive(Debug, Serialize)]
pub struct EquilibriaReport {
    pub agents: usize,
    pub profile_count: u64,
    pub equilibrium_count: usize,
    pub no_pure_equilibrium: bool,
    pub equilibria: Vec<EquilibriumEntry>,
    pub optimum: EquilibriumEntry,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub empirical_poa: Option<RatField>,
    pub valid_utility: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validity_failure: Option<String>,
    pub consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub consistency_witness: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct VerifyViolation {
    pub game_index: u32,
    pub bound: String,
    pub ratio: RatField,
    pub bound_value: RatField,
    pub game: GameFile,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub edge_count: usize,
    pub count: u32,
    pub seed: u64,
    pub tau: usize,
    pub thm1_bound: RatField,
    pub alpha_star_reciprocal: RatField,
    pub thm2_bound: RatField,
    pub games_run: u32,
    pub games_with_equilibria: u32,
    pub total_equilibria: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_ratio: Option<RatField>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_margin_thm1: Option<RatField>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_margin_thm2: Option<RatField>,
    pub violations: Vec<VerifyViolation>,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub tau: usize,
    pub thm1_bound: RatField,
    pub thm2_bound: RatField,
    pub prop3_bound: RatField,
    pub predicted_poa: RatField,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub empirical_poa: Option<RatField>,
    pub empirical_matches: Option<bool>,
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(
        "n,tau,thm1,thm1_approx,thm2,thm2_approx,prop3,prop3_approx,\
         predicted_poa,predicted_poa_approx,empirical_poa,empirical_poa_approx,matches\n",
    );
    for r in rows {
        let (emp_exact, emp_approx) = match &r.empirical_poa {
            Some(f) => (f.exact.clone(), format!("{:.6}", f.approx)),
            None => (String::new(), String::new()),
        };
        let matches = match r.empirical_matches {
            Some(true) => "true",
            Some(false) => "false",
            None => "",
        };
        out.push_str(&format!(
            "{},{},{},{:.6},{},{:.6},{},{:.6},{},{:.6},{},{},{}\n",
            r.n,
            r.tau,
            r.thm1_bound.exact,
            r.thm1_bound.approx,
            r.thm2_bound.exact,
            r.thm2_bound.approx,
            r.prop3_bound.exact,
            r.prop3_bound.approx,
            r.predicted_poa.exact,
            r.predicted_poa.approx,
            emp_exact,
            emp_approx,
            matches,
        ));
    }
    out
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}
