//! Double-integrator-with-drag dynamics under saturated acceleration,
//! integrated by a fixed-step 4-stage Runge–Kutta scheme. The same step
//! applies to attackers and defenders; determinism and the speed bound
//! √(ū/C_D) are the contract.

use crate::geom::Vec2;
use crate::model::AgentState;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DynamicsError {
    #[error("non-finite state encountered during integration")]
    NonFinite,
}

/// Project `u` onto the closed norm ball of radius `bound`, preserving
/// direction.
pub fn saturate(u: Vec2, bound: f64) -> Vec2 {
    debug_assert!(bound > 0.0);
    let n = u.norm();
    if n <= bound {
        u
    } else {
        u * (bound / n)
    }
}

/// Acceleration command with its class bound; saturated on construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ControlInput {
    pub u: Vec2,
    pub bound: f64,
}

impl ControlInput {
    pub fn saturated(raw: Vec2, bound: f64) -> Self {
        ControlInput {
            u: saturate(raw, bound),
            bound,
        }
    }
}

fn accel(v: Vec2, u: Vec2, c_d: f64) -> Vec2 {
    u - v * (c_d * v.norm())
}

/// One fixed step of ṙ = v, v̇ = u − C_D‖v‖v with `u` held constant over
/// the step (zero-order hold on the saturated command).
pub fn step(
    state: &AgentState,
    input: &ControlInput,
    c_d: f64,
    dt: f64,
) -> Result<AgentState, DynamicsError> {
    debug_assert!(dt > 0.0);
    if !state.r.is_finite() || !state.v.is_finite() || !input.u.is_finite() {
        return Err(DynamicsError::NonFinite);
    }
    let u = input.u;

    let k1_r = state.v;
    let k1_v = accel(state.v, u, c_d);

    let v2 = state.v + k1_v * (dt / 2.0);
    let k2_r = v2;
    let k2_v = accel(v2, u, c_d);

    let v3 = state.v + k2_v * (dt / 2.0);
    let k3_r = v3;
    let k3_v = accel(v3, u, c_d);

    let v4 = state.v + k3_v * dt;
    let k4_r = v4;
    let k4_v = accel(v4, u, c_d);

    let r = state.r + (k1_r + k2_r * 2.0 + k3_r * 2.0 + k4_r) * (dt / 6.0);
    let v = state.v + (k1_v + k2_v * 2.0 + k3_v * 2.0 + k4_v) * (dt / 6.0);
    if !r.is_finite() || !v.is_finite() {
        return Err(DynamicsError::NonFinite);
    }
    Ok(AgentState { r, v })
}
