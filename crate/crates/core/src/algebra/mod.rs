//! Exact arithmetic in the variable `t = q^{-s}`.

pub mod laurent;
pub mod linalg;
pub mod multivariate;
pub mod rational;
pub mod scalar;
pub mod series;

pub use laurent::LaurentPoly;
pub use linalg::Matrix;
pub use multivariate::MultiLaurent;
pub use rational::{ideal_generator, recognize_rational, series_from_rational, RationalFunction};
pub use scalar::{Field, Scalar};
pub use series::PowerSeries;
