//! Knot diagrams traced by `(T_i, T_j, z)`: crossing sequences, signed Gauss
//! codes and PD codes.
//!
//! Conventions: the curve is traversed in increasing `t`; a crossing sequence
//! entry `+1` means that strand passes over; a crossing is positive when
//! `det(v_over, v_under) > 0`. The two loose ends of the long knot are joined
//! outside `[-1, 1]^2`, where no node lies.

mod gauss;
mod pd;
mod sequence;

pub use gauss::{build_gauss_code, handedness, handedness_by_intervals, writhe, GaussEntry, SignedGaussCode};
pub use pd::{braid_closure_pd, gauss_to_pd, PdCode};
pub use sequence::{alternating_sequence, torus_sequence, z_crossing_sequence, CrossingSequence, Height};
