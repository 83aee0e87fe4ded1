//! Exact periodic trajectories on the double pentagon and in the regular pentagon.
//!
//! The crate is organised bottom-up:
//!
//! * [`golden`]: exact arithmetic in ℚ[φ] and ℚ[φ][sin 36°], projective points and Möbius maps.
//! * [`directions`]: the tree of periodic directions in sector 3.
//! * [`periods`]: period pairs through the ℤ[φ] recursion.
//! * [`orbits`]: symbolic orbits as cyclic words and their substitution calculus.
//! * [`tracer`]: the geometric oracle (surface flow, billiard flow, interval exchange).
//! * [`analysis`]: displacement vectors, lengths, the billiard multiplier and the conjecture checkers.
//! * [`calibration`]: the search that fixed the side labels and the orbit recursion conventions.
//! * [`cli`]: the `pentaflow` command line.
//!
//! Each capability has a runnable example:
//!
//! ```text
//! cargo run --example golden_arithmetic
//! cargo run --example direction_tree
//! cargo run --example period_table
//! cargo run --example symbolic_orbits
//! cargo run --example surface_trace
//! cargo run --example billiard_lift
//! cargo run --example interval_exchange
//! cargo run --example displacement_lengths
//! cargo run --example conjectures
//! cargo run --example calibrate_conventions
//! cargo run --example render_svg
//! ```

pub mod analysis;
pub mod calibration;
pub mod cli;
pub mod directions;
pub mod golden;
pub mod orbits;
pub mod periods;
pub mod tracer;
