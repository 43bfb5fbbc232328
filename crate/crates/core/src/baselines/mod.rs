//! Reference algorithms: classic MOEA/D and MOEA/D-AD.

mod moead;
mod moead_ad;

pub use moead::{moead_run, moead_run_traced, MoeadConfig, MoeadState};
pub use moead_ad::{ad_acceptance, moead_ad_run, moead_ad_run_traced, AdDecision, AdStep, MoeadAdConfig, MoeadAdState};
