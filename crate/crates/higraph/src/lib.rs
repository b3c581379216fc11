//! Cycle-level model of the HiGraph graph-analytics accelerator.
//!
//! The crate is organized around five subsystems:
//!
//! * [`graph`] — CSR graph storage, edge-list ingestion, RMAT generation and
//!   bank-interleaving arithmetic.
//! * [`vcpm`] — vertex-centric algorithm definitions (BFS, SSSP, SSWP,
//!   PageRank) and a golden sequential executor used as the functional
//!   oracle for the cycle simulator.
//! * [`mdp`] — the MDP-network generator, its cycle-level state machine
//!   built from bounded multi-write FIFOs, and a round-robin crossbar
//!   baseline.
//! * [`accel`] — the full accelerator pipeline: active-vertex fetch,
//!   odd-even offset arbitration, replay engines with length splitting,
//!   dispatchers over interleaved edge banks, and vPEs reducing into
//!   private tProperty banks.
//! * [`bench`] — experiment plans, sweep expansion, CSV reporting and the
//!   text summary used by the `higraph` binary.

pub mod accel;
pub mod bench;
pub mod graph;
pub mod mdp;
pub mod rng;
pub mod vcpm;
