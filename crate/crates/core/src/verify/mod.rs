//! Exhaustive verification: labeled enumeration, soundness reports for
//! every checker, sharpness probes and the reference `q(G)` table.

mod enumerate;
mod soundness;
mod table1;
mod tightness;

pub use enumerate::{
    enumerate_bipartite, enumerate_graphs, fold_bipartite, fold_graphs, Mode, BIPARTITE_MAX_CELLS, GENERAL_MAX,
};
pub use soundness::{screen, select, soundness, soundness_by_id, soundness_with, Caps, SoundnessReport};
pub use table1::{table1_report, Table1Report, Table1Row, TABLE1, TABLE1_TOL};
pub use tightness::{
    listed_exceptions, probe_exception, tightness_search, ExceptionProbe, NearMiss, TightnessReport,
};
