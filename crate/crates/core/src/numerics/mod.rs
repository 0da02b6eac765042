//! Exact rationals, rigorous balls, and enclosures of π, γ and logarithms.

mod ball;
mod consts;
mod policy;
pub mod rational;

pub use ball::{ball_from_rational, cmp_strict, sign_strict, Ball, Dyadic, Mag, StrictOrder};
pub use consts::{bernoulli_even, const_gamma, const_log, const_pi};
pub use policy::PrecisionPolicy;
pub use rational::{factorial, format_decimal, format_sci, int, ratio, Rational};
