//! Exact-arithmetic verification of Delannoy / Schroeder congruence families
//! modulo odd prime powers.

pub mod checks;
pub mod error;
pub mod harness;
pub mod identities;
pub mod modring;
pub mod oracle;
pub mod quotients;
pub mod report;
pub mod representations;
pub mod sequences;

pub use checks::{evaluate, find_check, registry, CheckRecord, CheckSpec, CheckStatus, Params, PrimeCtx};
pub use error::{Error, Result};
pub use harness::{
    run, sieve_primes, CheckSelection, EngineChoice, OutputFormat, ParamPolicy, RunConfig,
    RunReport, RunSummary,
};
pub use modring::{legendre, PrimePowerModulus, Residue};
pub use quotients::LiftedValue;
pub use representations::{CaseBranch, ConjectureFamily, FormRepresentation};
pub use sequences::{Engine, SequenceKind, SequenceTable};
