//! Writhe of rational space curves: secants, charts and local contributions.

mod curve;
mod local;
mod secant;
mod solve;

pub use curve::{curve_from_wedge, hankel_lambda, hankel_lambda_from_coords, wedge_coords, writhe_deg4, RationalCurve};
pub use local::{local_writhe, local_writhe_in_chart, local_writhe_seeded, select_chart, writhe_local_sum, Chart, LocalWrithe, WritheResult, DEFAULT_SEED};
pub use secant::{check_embedding, point_on_curve, secant_quadratic, secants_through_point, SecantDatum};
pub use solve::{solve_plane_system, ProjSolution};
