//! Report assembly shared by the command-line tool and the browser demo.

pub mod commands;
pub mod dot;
pub mod report;

pub use commands::{analyze, k0, load, reconstruct, CliError, Options, Session};
pub use dot::render_dot;
pub use report::{
    AnalyzeReport, GeneratorRow, IgRow, K0Report, OrbitRow, Payload, ReconstructReport, Report,
    SimpleRow, StructureRow,
};
