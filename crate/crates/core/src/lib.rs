//! Deterministic multi-agent herding simulation and solver library.
//!
//! Defenders identify splitting swarms of adversarial attackers with
//! density-based clustering, distribute themselves by solving a
//! connectivity-constrained generalized assignment problem, and herd each
//! swarm into a safe area through four control phases (gathering, seeking,
//! enclosing, herding) behind extendable string barriers.

pub mod assignment;
pub mod clustering;
pub mod dynamics;
pub mod engine;
pub mod formation;
pub mod geom;
pub mod model;

pub use geom::{Disk, Vec2};
pub use model::{AgentState, ScenarioConfig};
