//! Runtime verification for the learning phase of tabular reinforcement-learning
//! agents.
//!
//! The library watches an RL agent through its transition trace `{s, a, r, s'}`
//! and issues three-valued verdicts (unverified / violated / satisfied) for three
//! properties of the learning phase:
//!
//! - **quality of learning** ([`quality`]): relative bias and relative standard
//!   deviation of the value-function estimate stay below thresholds,
//! - **distance to the optimal policy** ([`optimality`]): confidence bounds on the
//!   optimality ratio `eta(s) = V_pi(s) / V_opt(s)` stay above thresholds,
//! - **time to learn** ([`timeliness`]): the predicted number of transitions needed
//!   to evaluate a (new) policy stays below a budget.
//!
//! Supporting machinery:
//!
//! - [`mdp`]: exact finite-MDP mathematics (value solves, policy iteration, the
//!   expected on-policy update operator),
//! - [`estimation`]: streaming reconstruction of `T_hat`/`R_hat` from transitions
//!   plus a parametric-bootstrap estimator for the bias and covariance of the
//!   value estimate,
//! - [`harness`]: ground-truth environments (police-patrol MDP, random MDPs) and
//!   a TD learner for generating traces,
//! - [`trace`]: the JSON-Lines trace file format shared by the simulator, the
//!   monitors, and external systems.
//!
//! Monitors are pure over snapshots: they never mutate the trace or the learner.

pub mod error;
pub mod estimation;
pub mod harness;
pub mod mdp;
pub mod optimality;
pub mod quality;
pub mod timeliness;
pub mod trace;
pub mod verdict;

pub use error::{Error, Result};
pub use verdict::VerdictStatus;
