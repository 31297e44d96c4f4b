//! LDPC lattice workbench.
//!
//! Builds lattices from sparse binary codes (Construction A and the leveled
//! Construction D'), decodes them with min-sum and sum-product message
//! passing on the label-code Tanner graph, and measures error rates on the
//! unconstrained AWGN channel with a seeded, worker-count-independent Monte
//! Carlo engine.

pub mod alist;
pub mod chain;
pub mod channel;
pub mod code;
pub mod decode;
pub mod dual;
pub mod exact;
pub mod gf2;
pub mod lattice;
pub mod peg;
pub mod recipe;
pub mod sim;
pub mod sparse;
pub mod tanner;

mod error;

pub use chain::{DegreeProfile, NestedCodeChain};
pub use channel::{analytic_scalar_pe, nep, sigma_from_vnr, vnr_from_sigma, ChannelConfig, TransmitMode, TrialRng};
pub use code::BinaryCode;
pub use decode::{
    hard_decision, init_costs, lift_to_lattice, min_sum_decode, ml_oracle, sum_product_decode,
    Algorithm, CosetCostTable, DecoderConfig, DecoderOutput,
};
pub use error::{Error, Result};
pub use lattice::{construction_a, construction_dprime, Lattice, LeveledParityMatrix};
pub use peg::{epeg_construct, girth, peg_construct, Girth};
pub use recipe::Recipe;
pub use sim::{oracle_compare, run_point, run_sweep, PointResult, SimResult, SweepConfig};
pub use sparse::SparseBinaryMatrix;
pub use tanner::TannerGraph;
