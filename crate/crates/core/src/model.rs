//! Domain types shared by all modules: agents, areas, string-net graphs
//! and the scenario configuration.
//!
//! Everything here is immutable after construction and freely shareable
//! between threads.

use crate::geom::{Disk, Vec2};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("string-net establishment failed between defenders {0} and {1}: {2}")]
    Establishment(usize, usize, String),
    #[error("scenario config rejected:\n{0}")]
    InvalidConfig(String),
}

/// Position/velocity pair of one agent in the plane.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct AgentState {
    /// position (m)
    pub r: Vec2,
    /// velocity (m/s)
    pub v: Vec2,
}

impl AgentState {
    pub fn new(r: Vec2, v: Vec2) -> Self {
        AgentState { r, v }
    }

    pub fn at_rest(r: Vec2) -> Self {
        AgentState { r, v: Vec2::ZERO }
    }
}

/// Speed bound √(ū/C_D) induced by the drag term.
pub fn speed_bound(u_bar: f64, c_d: f64) -> Result<f64, ModelError> {
    if u_bar <= 0.0 || c_d <= 0.0 {
        return Err(ModelError::Domain(format!(
            "speed_bound requires positive inputs, got u_bar={u_bar}, c_d={c_d}"
        )));
    }
    Ok((u_bar / c_d).sqrt())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NetKind {
    Open,
    Closed,
}

/// Path (Open) or cycle (Closed) of defenders connected by string barriers.
///
/// Every edge is checked against the establishment condition
/// (‖Δr‖ ≤ R̲_s, ‖Δv‖ ≤ ε_v) at the moment it is created; established
/// strings may later stretch up to R̄_s.
#[derive(Clone, Debug, PartialEq)]
pub struct StringNetGraph {
    pub kind: NetKind,
    /// defender indices in path/cycle order
    pub members: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl StringNetGraph {
    fn check_edge(
        a: usize,
        b: usize,
        states: &[AgentState],
        r_under_s: f64,
        eps_v: f64,
    ) -> Result<(), ModelError> {
        let dr = states[a].r.dist(states[b].r);
        if dr > r_under_s {
            return Err(ModelError::Establishment(
                a,
                b,
                format!("separation {dr:.4} exceeds establishment length {r_under_s}"),
            ));
        }
        let dv = (states[a].v - states[b].v).norm();
        if dv > eps_v {
            return Err(ModelError::Establishment(
                a,
                b,
                format!("velocity mismatch {dv:.4} exceeds tolerance {eps_v}"),
            ));
        }
        Ok(())
    }

    /// Establish an Open-StringNet (path graph) over `members` in order.
    /// `states` is indexed by global defender index.
    pub fn open(
        members: Vec<usize>,
        states: &[AgentState],
        r_under_s: f64,
        eps_v: f64,
    ) -> Result<Self, ModelError> {
        if members.len() < 2 {
            return Err(ModelError::Domain(
                "an Open-StringNet needs at least 2 members".into(),
            ));
        }
        let mut edges = Vec::with_capacity(members.len() - 1);
        for w in members.windows(2) {
            Self::check_edge(w[0], w[1], states, r_under_s, eps_v)?;
            edges.push((w[0], w[1]));
        }
        Ok(StringNetGraph {
            kind: NetKind::Open,
            members,
            edges,
        })
    }

    /// Close an Open-StringNet into a cycle. Only the new closing edge is
    /// subject to the establishment check; the inherited edges were checked
    /// when they were formed.
    pub fn close(
        open: &StringNetGraph,
        states: &[AgentState],
        r_under_s: f64,
        eps_v: f64,
    ) -> Result<Self, ModelError> {
        if open.kind != NetKind::Open {
            return Err(ModelError::Domain("close() expects an Open net".into()));
        }
        if open.members.len() < 3 {
            return Err(ModelError::Domain(
                "a Closed-StringNet needs at least 3 members".into(),
            ));
        }
        let first = open.members[0];
        let last = *open.members.last().unwrap();
        Self::check_edge(last, first, states, r_under_s, eps_v)?;
        let mut edges = open.edges.clone();
        edges.push((last, first));
        Ok(StringNetGraph {
            kind: NetKind::Closed,
            members: open.members.clone(),
            edges,
        })
    }

    /// Split an open net's member path at `cut` (members[..cut] / members[cut..]),
    /// dropping the string between the two halves.
    pub fn split_open(&self, cut: usize) -> (StringNetGraph, StringNetGraph) {
        assert_eq!(self.kind, NetKind::Open);
        let left: Vec<usize> = self.members[..cut].to_vec();
        let right: Vec<usize> = self.members[cut..].to_vec();
        let edge_of = |m: &[usize]| -> Vec<(usize, usize)> {
            m.windows(2).map(|w| (w[0], w[1])).collect()
        };
        (
            StringNetGraph {
                kind: NetKind::Open,
                members: left.clone(),
                edges: edge_of(&left),
            },
            StringNetGraph {
                kind: NetKind::Open,
                members: right.clone(),
                edges: edge_of(&right),
            },
        )
    }
}

/// Control gains of the substitute tracking controller.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ControlGains {
    /// goal position gain (1/s²)
    pub k_p: f64,
    /// goal velocity gain (1/s)
    pub k_v: f64,
}

impl Default for ControlGains {
    fn default() -> Self {
        ControlGains { k_p: 4.0, k_v: 4.0 }
    }
}

fn default_m_pts() -> usize {
    3
}

fn default_n_ac_min() -> usize {
    4
}

fn default_v_herd_frac() -> f64 {
    0.5
}

fn default_eps_formula() -> EpsFormula {
    EpsFormula::BodyText
}

/// Which ε_nb derivation to use; the paper's body text and its Lemma
/// statement disagree (factors (m_pts−1) vs ⌊m_pts/2⌋).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EpsFormula {
    BodyText,
    LemmaFloor,
}

/// Gathering-center distance ρ_df^g from the protected-area center:
/// either fixed or chosen by the bisection feasibility search.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GatheringRadius {
    Auto(AutoTag),
    Fixed(f64),
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AutoTag {
    Auto,
}

impl GatheringRadius {
    pub fn fixed(&self) -> Option<f64> {
        match self {
            GatheringRadius::Fixed(v) => Some(*v),
            GatheringRadius::Auto(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AttackerPolicyKind {
    Flock,
    SplitOnBlock,
}

/// Scripted subgroup retarget: from `time` on, `members` steer toward
/// protected-center + `goal_offset` and flock only among themselves.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScriptedSplit {
    pub time: f64,
    pub members: Vec<usize>,
    pub goal_offset: Vec2,
}

/// Attacker behavior description. Gains must be non-negative; resulting
/// accelerations are saturated at ū_a by the engine.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AttackerPolicyConfig {
    pub kind: AttackerPolicyKind,
    pub goal_gain: f64,
    pub cohesion_gain: f64,
    pub alignment_gain: f64,
    pub defender_repulsion_gain: f64,
    /// half-angle of the blockage cone for SplitOnBlock (degrees)
    #[serde(default = "default_cone")]
    pub blockage_cone_deg: f64,
    #[serde(default = "default_divergence")]
    pub divergence_gain: f64,
    #[serde(default)]
    pub scripted_splits: Vec<ScriptedSplit>,
}

fn default_cone() -> f64 {
    40.0
}

fn default_divergence() -> f64 {
    1.0
}

/// All physical, geometric and algorithmic parameters plus initial
/// conditions. Units are SI throughout. Configs that violate the standing
/// assumptions are rejected at load, never repaired.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub n_a: usize,
    pub n_d: usize,
    /// drag coefficient (1/m)
    pub c_d: f64,
    /// attacker acceleration bound (m/s²)
    pub u_bar_a: f64,
    /// defender acceleration bound (m/s²)
    pub u_bar_d: f64,
    /// agent body radii (m)
    pub rho_a: f64,
    pub rho_d: f64,
    /// defender sensing radius around the protected area (m)
    pub rho_d_s: f64,
    /// attacker local sensing radius (m)
    pub rho_ai_s: f64,
    pub protected: Disk,
    pub safe_areas: Vec<Disk>,
    /// maximum string length (m)
    pub r_bar_s: f64,
    /// establishment string length (m), < r_bar_s
    pub r_under_s: f64,
    /// velocity-match tolerance for string establishment (m/s)
    pub eps_v: f64,
    /// formation tracking-error radius (m)
    pub b_d: f64,
    /// inter-defender spacing on the gathering line (m); defaults to 0.9·R̲_s
    #[serde(default)]
    pub r_hat_spacing: Option<f64>,
    /// clustering velocity weight, 0 < φ < 1
    pub phi: f64,
    #[serde(default = "default_m_pts")]
    pub m_pts: usize,
    pub rho_df_g: GatheringRadius,
    pub attacker_policy: AttackerPolicyConfig,
    pub attackers: Vec<AgentState>,
    pub defenders: Vec<AgentState>,
    /// integration step (s)
    pub dt: f64,
    pub seed: u64,
    #[serde(default)]
    pub gains: ControlGains,
    #[serde(default = "default_eps_formula")]
    pub eps_formula: EpsFormula,
    /// recursion cutoff N̲_ac of the hierarchical assignment
    #[serde(default = "default_n_ac_min")]
    pub n_ac_min: usize,
    /// re-assign all defenders on a split instead of only the affected group
    #[serde(default)]
    pub global_reassign: bool,
    /// herding virtual-agent speed as a fraction of v̄_a
    #[serde(default = "default_v_herd_frac")]
    pub v_herd_frac: f64,
}

impl ScenarioConfig {
    pub fn v_bar_a(&self) -> f64 {
        (self.u_bar_a / self.c_d).sqrt()
    }

    pub fn v_bar_d(&self) -> f64 {
        (self.u_bar_d / self.c_d).sqrt()
    }

    pub fn spacing(&self) -> f64 {
        self.r_hat_spacing.unwrap_or(0.9 * self.r_under_s)
    }

    pub fn from_json(text: &str) -> Result<Self, ModelError> {
        serde_json::from_str(text).map_err(|e| ModelError::InvalidConfig(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// Reject-on-load helper: error listing every violation, or Ok.
    pub fn validated(self) -> Result<Self, ModelError> {
        let violations = validate_config(&self);
        if violations.is_empty() {
            Ok(self)
        } else {
            let text = violations
                .iter()
                .map(|v| format!("  - {v}"))
                .collect::<Vec<_>>()
                .join("\n");
            Err(ModelError::InvalidConfig(text))
        }
    }
}

/// One violated standing assumption.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigViolation {
    /// short rule identifier, e.g. "speed-ordering"
    pub rule: &'static str,
    pub message: String,
}

impl std::fmt::Display for ConfigViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}] {}", self.rule, self.message)
    }
}

/// Check every standing assumption; empty result means the config is
/// acceptable. Total: never panics on any input combination.
pub fn validate_config(cfg: &ScenarioConfig) -> Vec<ConfigViolation> {
    let mut out = Vec::new();
    let mut push = |rule: &'static str, message: String| {
        out.push(ConfigViolation { rule, message });
    };

    if cfg.n_d < cfg.n_a {
        push(
            "defender-count",
            format!("N_d ≥ N_a required, got N_d={} < N_a={}", cfg.n_d, cfg.n_a),
        );
    }
    if !(cfg.u_bar_a > 0.0) {
        push("accel-positive", format!("ū_a must be > 0, got {}", cfg.u_bar_a));
    }
    if !(cfg.u_bar_d > 0.0) {
        push("accel-positive", format!("ū_d must be > 0, got {}", cfg.u_bar_d));
    }
    if !(cfg.u_bar_a < cfg.u_bar_d) {
        push(
            "speed-ordering",
            format!(
                "defenders must be strictly faster: ū_a < ū_d required, got ū_a={} ū_d={}",
                cfg.u_bar_a, cfg.u_bar_d
            ),
        );
    }
    if !(cfg.c_d > 0.0) {
        push("drag-positive", format!("C_D must be > 0, got {}", cfg.c_d));
    }
    if !(cfg.rho_a > 0.0 && cfg.rho_d > 0.0) {
        push(
            "body-radius",
            format!("body radii must be > 0, got ρ_a={} ρ_d={}", cfg.rho_a, cfg.rho_d),
        );
    }
    if cfg.rho_d > cfg.rho_a {
        push(
            "body-radius-ordering",
            format!("ρ_d ≤ ρ_a required, got ρ_d={} > ρ_a={}", cfg.rho_d, cfg.rho_a),
        );
    }
    if !(cfg.protected.radius > 0.0) {
        push("area-radius", "protected area radius must be > 0".into());
    }
    if cfg.safe_areas.is_empty() {
        push("safe-areas", "at least one safe area is required".into());
    }
    for (m, s) in cfg.safe_areas.iter().enumerate() {
        if !(s.radius > 0.0) {
            push("area-radius", format!("safe area {m} radius must be > 0"));
        }
        if s.intersects(&cfg.protected) {
            push(
                "area-disjointness",
                format!("safe area {m} overlaps the protected area"),
            );
        }
        for (m2, s2) in cfg.safe_areas.iter().enumerate().skip(m + 1) {
            if s.intersects(s2) {
                push(
                    "area-disjointness",
                    format!("safe areas {m} and {m2} overlap"),
                );
            }
        }
    }
    if !(cfg.r_under_s > 0.0 && cfg.r_under_s < cfg.r_bar_s) {
        push(
            "string-lengths",
            format!(
                "0 < R̲_s < R̄_s required, got R̲_s={} R̄_s={}",
                cfg.r_under_s, cfg.r_bar_s
            ),
        );
    }
    if !(cfg.eps_v > 0.0) {
        push("eps-v", format!("ε_v must be > 0, got {}", cfg.eps_v));
    }
    if !(cfg.b_d > 0.0) {
        push("tracking-radius", format!("b_d must be > 0, got {}", cfg.b_d));
    }
    if let Some(s) = cfg.r_hat_spacing {
        if !(s > 0.0) {
            push("spacing", format!("R̂_spacing must be > 0, got {s}"));
        } else if s > cfg.r_under_s {
            push(
                "spacing",
                format!("R̂_spacing={s} exceeds establishment length R̲_s={}", cfg.r_under_s),
            );
        }
    }
    if !(cfg.phi > 0.0 && cfg.phi < 1.0) {
        push(
            "velocity-weight",
            format!("0 < φ < 1 required, got φ={}", cfg.phi),
        );
    }
    if cfg.m_pts < 2 {
        push("m-pts", format!("m_pts ≥ 2 required, got {}", cfg.m_pts));
    }
    if let Some(rho) = cfg.rho_df_g.fixed() {
        if !(rho > cfg.protected.radius) {
            push(
                "gathering-distance",
                format!(
                    "ρ_df^g > ρ_p required, got ρ_df^g={} ρ_p={}",
                    rho, cfg.protected.radius
                ),
            );
        }
    }
    if cfg.attackers.len() != cfg.n_a {
        push(
            "initial-states",
            format!("expected {} attacker states, got {}", cfg.n_a, cfg.attackers.len()),
        );
    }
    if cfg.defenders.len() != cfg.n_d {
        push(
            "initial-states",
            format!("expected {} defender states, got {}", cfg.n_d, cfg.defenders.len()),
        );
    }
    if !(cfg.dt > 0.0) {
        push("time-step", format!("Δt must be > 0, got {}", cfg.dt));
    }
    if cfg.c_d > 0.0 {
        let (va, vd) = ((cfg.u_bar_a / cfg.c_d).sqrt(), (cfg.u_bar_d / cfg.c_d).sqrt());
        for (i, a) in cfg.attackers.iter().enumerate() {
            if !a.r.is_finite() || !a.v.is_finite() {
                push("initial-states", format!("attacker {i} state is not finite"));
            } else if a.v.norm() >= va {
                push(
                    "initial-speed",
                    format!("attacker {i} initial speed {} ≥ v̄_a={va:.4}", a.v.norm()),
                );
            }
        }
        for (j, d) in cfg.defenders.iter().enumerate() {
            if !d.r.is_finite() || !d.v.is_finite() {
                push("initial-states", format!("defender {j} state is not finite"));
            } else if d.v.norm() >= vd {
                push(
                    "initial-speed",
                    format!("defender {j} initial speed {} ≥ v̄_d={vd:.4}", d.v.norm()),
                );
            }
        }
    }
    let p = &cfg.attacker_policy;
    for (name, g) in [
        ("goal_gain", p.goal_gain),
        ("cohesion_gain", p.cohesion_gain),
        ("alignment_gain", p.alignment_gain),
        ("defender_repulsion_gain", p.defender_repulsion_gain),
        ("divergence_gain", p.divergence_gain),
    ] {
        if !(g >= 0.0) {
            push("policy-gains", format!("attacker policy {name} must be ≥ 0, got {g}"));
        }
    }
    for (k, s) in p.scripted_splits.iter().enumerate() {
        if s.members.iter().any(|&i| i >= cfg.n_a) {
            push(
                "policy-script",
                format!("scripted split {k} references an attacker index ≥ N_a"),
            );
        }
    }
    if cfg.n_ac_min < 1 {
        push("n-ac-min", "N̲_ac must be ≥ 1".into());
    }
    if !(cfg.v_herd_frac > 0.0 && cfg.v_herd_frac < 1.0) {
        push(
            "herd-speed",
            format!("v_herd_frac must lie in (0,1), got {}", cfg.v_herd_frac),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Vec2;

    pub(crate) fn base_config() -> ScenarioConfig {
        ScenarioConfig {
            n_a: 18,
            n_d: 18,
            c_d: 0.5,
            u_bar_a: 3.0,
            u_bar_d: 5.0,
            rho_a: 0.4,
            rho_d: 0.3,
            rho_d_s: 200.0,
            rho_ai_s: 15.0,
            protected: Disk::new(Vec2::ZERO, 10.0),
            safe_areas: vec![
                Disk::new(Vec2::new(35.0, 38.0), 12.0),
                Disk::new(Vec2::new(35.0, -38.0), 12.0),
            ],
            r_bar_s: 8.0,
            r_under_s: 7.8,
            eps_v: 0.3,
            b_d: 0.2,
            r_hat_spacing: Some(2.4),
            phi: 0.25,
            m_pts: 3,
            rho_df_g: GatheringRadius::Fixed(40.0),
            attacker_policy: AttackerPolicyConfig {
                kind: AttackerPolicyKind::Flock,
                goal_gain: 1.0,
                cohesion_gain: 0.2,
                alignment_gain: 0.2,
                defender_repulsion_gain: 2.0,
                blockage_cone_deg: 40.0,
                divergence_gain: 1.0,
                scripted_splits: vec![],
            },
            attackers: (0..18)
                .map(|i| AgentState::at_rest(Vec2::new(90.0 + (i % 6) as f64, (i / 6) as f64)))
                .collect(),
            defenders: (0..18)
                .map(|j| AgentState::at_rest(Vec2::new(34.0, -20.0 + 2.4 * j as f64)))
                .collect(),
            dt: 0.01,
            seed: 7,
            gains: ControlGains::default(),
            eps_formula: EpsFormula::BodyText,
            n_ac_min: 4,
            global_reassign: false,
            v_herd_frac: 0.5,
        }
    }

    #[test]
    fn valid_18v18_config_passes() {
        // §-style 18 v 18 with ū_a=3 < ū_d=5 satisfies every assumption
        let cfg = base_config();
        assert!(validate_config(&cfg).is_empty());
    }

    #[test]
    fn equal_accel_bounds_violate_speed_ordering() {
        let mut cfg = base_config();
        cfg.u_bar_a = 5.0;
        cfg.u_bar_d = 5.0;
        let v = validate_config(&cfg);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].rule, "speed-ordering");
    }

    #[test]
    fn overlapping_safe_and_protected_area_flagged() {
        let mut cfg = base_config();
        cfg.safe_areas[0] = Disk::new(Vec2::new(15.0, 0.0), 12.0);
        let v = validate_config(&cfg);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].rule, "area-disjointness");
    }

    #[test]
    fn validation_is_monotone_under_added_violations() {
        // starting from a valid config, each single mutation must be caught
        let mutations: Vec<fn(&mut ScenarioConfig)> = vec![
            |c| c.n_d = c.n_a - 1,
            |c| c.u_bar_d = c.u_bar_a,
            |c| c.phi = 1.0,
            |c| c.phi = 0.0,
            |c| c.rho_df_g = GatheringRadius::Fixed(1.0),
            |c| c.r_under_s = c.r_bar_s,
            |c| c.dt = 0.0,
            |c| c.m_pts = 1,
        ];
        for m in mutations {
            let mut cfg = base_config();
            m(&mut cfg);
            assert!(
                !validate_config(&cfg).is_empty(),
                "mutation left config unflagged"
            );
        }
    }

    #[test]
    fn speed_bound_values() {
        // perfect squares
        assert_eq!(speed_bound(4.0, 1.0).unwrap(), 2.0);
        assert_eq!(speed_bound(1.0, 4.0).unwrap(), 0.5);
        // frozen from an independent high-precision evaluation of √(3/0.7)
        let v = speed_bound(3.0, 0.7).unwrap();
        assert!((v - 2.070196678027062653).abs() < 1e-15);
        assert!(speed_bound(0.0, 1.0).is_err());
        assert!(speed_bound(1.0, -2.0).is_err());
    }

    #[test]
    fn open_net_edge_counts_and_establishment() {
        let states: Vec<AgentState> = (0..5)
            .map(|i| AgentState::at_rest(Vec2::new(i as f64, 0.0)))
            .collect();
        let net = StringNetGraph::open(vec![0, 1, 2, 3, 4], &states, 1.5, 0.1).unwrap();
        assert_eq!(net.edges.len(), 4);
        let closed_err = StringNetGraph::close(&net, &states, 1.5, 0.1);
        // members 4 and 0 are 4 m apart: closing edge infeasible
        assert!(closed_err.is_err());
    }

    #[test]
    fn closed_net_has_n_edges() {
        let n = 6;
        let states: Vec<AgentState> = (0..n)
            .map(|i| {
                let th = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
                AgentState::at_rest(Vec2::unit_from_angle(th))
            })
            .collect();
        let open = StringNetGraph::open((0..n).collect(), &states, 1.5, 0.1).unwrap();
        assert_eq!(open.edges.len(), n - 1);
        let closed = StringNetGraph::close(&open, &states, 1.5, 0.1).unwrap();
        assert_eq!(closed.edges.len(), n);
        assert_eq!(closed.kind, NetKind::Closed);
    }

    #[test]
    fn config_round_trips_through_json() {
        let cfg = base_config();
        let text = cfg.to_json();
        let back = ScenarioConfig::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn unknown_fields_rejected() {
        let mut v: serde_json::Value = serde_json::from_str(&base_config().to_json()).unwrap();
        v["surprise"] = serde_json::json!(1);
        assert!(ScenarioConfig::from_json(&v.to_string()).is_err());
    }
}
