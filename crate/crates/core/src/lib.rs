//! Exact Path Contraction: the largest `t` such that a connected graph can be
//! contracted to the path on `t` vertices.
//!
//! [`solve`] combines four exponential-time searches, each exact on its own
//! family of witness structures, with thresholds chosen so that every
//! structure belongs to at least one family. The [`oracle`] module holds
//! independent exhaustive referees used by the test suites.
//!
//! ```
//! use pathcontract::{solve, Constants, Graph};
//!
//! let g: Graph = "5 4\n0 1\n1 2\n2 3\n3 4\n".parse().unwrap();
//! let report = solve(&g, &Constants::default()).unwrap();
//! assert_eq!(report.t, 5);
//! assert!(report.witness.check(&g).is_ok());
//! ```

pub mod dcs;
pub mod driver;
pub mod enumerate;
pub mod eppc;
pub mod error;
pub mod fraction;
pub mod graph;
pub mod oracle;
pub mod subroutines;

pub use dcs::{
    enumerate_minimal_connectors, is_immovable, make_immovable, p5_contract, p5_witness, solve_2dcs, solve_3dcs,
    solve_small_3dcs, Bipartition, TriPartition,
};
pub use driver::{oracle_equivalent, solve, solve_with_threads, Constants, SolveReport};
pub use enumerate::{
    enumerate_extenders, enumerate_small_connected, enumerate_subsets_at_most, for_each_extender,
    for_each_subset_of_size_at_most, g_of, ExtenderQuery,
};
pub use eppc::{compute_gamma, reconstruct, GammaEntry, GammaTable};
pub use error::{Error, Result};
pub use fraction::Fraction;
pub use graph::{verify_witness, Graph, VertexSet, WitnessStructure, WitnessViolation, MAX_VERTICES};
pub use subroutines::{bpc, nsoepc, soepc, tdcpc, two_bag_witness, Subroutine, SubroutineResult};
