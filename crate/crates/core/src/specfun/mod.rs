//! Special functions: complex gamma, Gauss hypergeometric and Whittaker M.

mod gamma;
mod hyp2f1;
mod whittaker;

pub use gamma::{gamma, gamma_ratio, gamma_ratio_mode, ln_gamma, rgamma, sin_pi, RatioMode, POLE_TOL};
pub use hyp2f1::{hyp2f1, hyp2f1_connection, hyp2f1_series, DEGENERATE_EPS};
pub use whittaker::{whittaker_m, whittaker_m_with_derivative};
