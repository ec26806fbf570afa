//! Floating-point cross-checks: critical points by multistart Newton, and
//! Euler characteristics on a grid. Independent of the exact pipeline.

mod critical;
mod grid;
mod numpoly;

pub use critical::{find_critical_points, CriticalPoint, CriticalPointReport, OracleOptions};
pub use grid::{grid_euler, GridChi};
pub use numpoly::{NumFunction, NumPoly};
