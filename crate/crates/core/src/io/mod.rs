//! Text formats, exports and run reports.

mod export;
mod extfile;
mod mpx;
mod report;

pub use export::{export_dot, export_stg_dot, premaniplex_json, stg_json};
pub use extfile::{
    load_coextender, load_extender, load_pre_extender, load_with_base, write_coextender, write_extender, ExtenderFile,
    ExtenderKind,
};
pub use mpx::{load_mpx, parse_mpx, save_mpx, write_mpx};
pub use report::{sha256_hex, RunReport};
