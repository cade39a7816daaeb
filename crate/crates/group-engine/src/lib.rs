//! Finite 2-groups generated by involutions `u_1, ..., u_k` whose commutators
//! are words in strictly intermediate generators:
//!
//! `[u_i, u_j] = u_{p_1} ... u_{p_r}` with `i < p_1 < ... < p_r < j`.
//!
//! Commutators follow `[x, y] = x^-1 y^-1 x y`, which for involutions is `xyxy`.
//! Every element has a unique normal form `u_1^{e_1} ... u_k^{e_k}`, stored as
//! a bit set. Contexts only grow through [`PresentationContext::extend`], which
//! checks that the new generator acts as an involutive automorphism, so a
//! context of size `k` always presents a group of order exactly `2^k`.

mod context;
mod error;
mod series;

pub use context::{Condition, GroupElement, PresentationContext, MAX_GENERATORS};
pub use error::GroupError;
pub use series::NilpotencyReport;
