//! Swarm identification: DBSCAN over a weighted position-velocity metric,
//! the ε_nb parameter-selection rule, and the connectivity-violation
//! re-clustering trigger.

use crate::geom::{centroid, hull_centroid, Vec2};
use crate::model::EpsFormula;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ClusterError {
    #[error("ε_nb derivation needs N_d ≥ 3 (no inscribed circle for N_d={0})")]
    DegenerateNet(usize),
    #[error("ε_nb derivation needs N_a ≥ 2, got {0}")]
    TooFewAttackers(usize),
    #[error("m_pts ≥ 2 required, got {0}")]
    BadMinPoints(usize),
}

/// One attacker sample (r_x, r_y, v_x, v_y).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StatePoint {
    pub r: Vec2,
    pub v: Vec2,
}

impl StatePoint {
    pub fn new(r: Vec2, v: Vec2) -> Self {
        StatePoint { r, v }
    }
}

/// Weighted metric d = √(‖Δr‖² + φ‖Δv‖²), i.e. the quadratic form with
/// M = diag(1, 1, φ, φ).
pub fn weighted_distance(a: &StatePoint, b: &StatePoint, phi: f64) -> f64 {
    debug_assert!(phi > 0.0 && phi < 1.0);
    let dr = a.r - b.r;
    let dv = a.v - b.v;
    (dr.norm_sq() + phi * dv.norm_sq()).sqrt()
}

/// Radius of the largest circle inscribed in the largest Closed-StringNet
/// the N_d defenders can form.
pub fn max_enclosable_radius(r_bar_s: f64, n_d: usize) -> f64 {
    0.5 * r_bar_s / (std::f64::consts::PI / n_d as f64).tan()
}

/// Neighborhood radius ε_nb = ρ̄_ac·(m_pts−1)/(N_a−1) from the body-text
/// derivation (the default), or the Lemma-statement variant
/// ρ̄_ac·⌊m_pts/2⌋/(N_a−1); the two genuinely disagree for m_pts = 3.
pub fn dbscan_eps_with(
    formula: EpsFormula,
    r_bar_s: f64,
    n_d: usize,
    n_a: usize,
    m_pts: usize,
) -> Result<f64, ClusterError> {
    if n_d < 3 {
        return Err(ClusterError::DegenerateNet(n_d));
    }
    if n_a < 2 {
        return Err(ClusterError::TooFewAttackers(n_a));
    }
    if m_pts < 2 {
        return Err(ClusterError::BadMinPoints(m_pts));
    }
    let rho_bar = max_enclosable_radius(r_bar_s, n_d);
    let factor = match formula {
        EpsFormula::BodyText => (m_pts - 1) as f64,
        EpsFormula::LemmaFloor => (m_pts / 2) as f64,
    };
    Ok(rho_bar * factor / (n_a - 1) as f64)
}

pub fn dbscan_eps(r_bar_s: f64, n_d: usize, n_a: usize, m_pts: usize) -> Result<f64, ClusterError> {
    dbscan_eps_with(EpsFormula::BodyText, r_bar_s, n_d, n_a, m_pts)
}

/// One identified swarm.
#[derive(Clone, Debug, PartialEq)]
pub struct Swarm {
    /// attacker indices, ascending
    pub members: Vec<usize>,
    /// center of mass r_ac
    pub center_of_mass: Vec2,
    /// r_ĥac: center of mass shifted by the hull-centroid offset
    pub hull_center: Vec2,
    /// ρ_ac: max member distance from `hull_center`
    pub radius: f64,
}

impl Swarm {
    /// Build the swarm summary from member indices and per-attacker positions.
    pub fn from_members(mut members: Vec<usize>, positions: &[Vec2]) -> Self {
        members.sort_unstable();
        let pts: Vec<Vec2> = members.iter().map(|&i| positions[i]).collect();
        let com = centroid(&pts);
        let hull_center = hull_centroid(&pts);
        let radius = pts
            .iter()
            .map(|p| p.dist(hull_center))
            .fold(0.0f64, f64::max);
        Swarm {
            members,
            center_of_mass: com,
            hull_center,
            radius,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Clusters plus noise; together they partition the input index set.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SwarmPartition {
    pub clusters: Vec<Swarm>,
    pub noise: Vec<usize>,
}

/// DBSCAN under `weighted_distance`. A point is core iff its closed
/// ε_nb-neighborhood (itself included) holds at least `m_pts` points.
/// Scan order is ascending input index, which fixes the cluster numbering
/// and assigns shared border points to the first cluster that reaches them.
pub fn dbscan(points: &[StatePoint], eps_nb: f64, m_pts: usize, phi: f64) -> SwarmPartition {
    debug_assert!(eps_nb > 0.0);
    debug_assert!(m_pts >= 2);
    let n = points.len();
    let region_query = |i: usize| -> Vec<usize> {
        (0..n)
            .filter(|&j| weighted_distance(&points[i], &points[j], phi) <= eps_nb)
            .collect()
    };

    const UNDEFINED: usize = usize::MAX;
    const NOISE: usize = usize::MAX - 1;
    let mut label = vec![UNDEFINED; n];
    let mut next_cluster = 0usize;

    for i in 0..n {
        if label[i] != UNDEFINED {
            continue;
        }
        let neighbors = region_query(i);
        if neighbors.len() < m_pts {
            label[i] = NOISE;
            continue;
        }
        let cluster = next_cluster;
        next_cluster += 1;
        label[i] = cluster;
        let mut work = neighbors;
        let mut cursor = 0;
        while cursor < work.len() {
            let q = work[cursor];
            cursor += 1;
            if label[q] == NOISE {
                label[q] = cluster; // border point
            }
            if label[q] != UNDEFINED {
                continue;
            }
            label[q] = cluster;
            let nq = region_query(q);
            if nq.len() >= m_pts {
                work.extend(nq);
            }
        }
    }

    let positions: Vec<Vec2> = points.iter().map(|p| p.r).collect();
    let mut clusters = Vec::with_capacity(next_cluster);
    for c in 0..next_cluster {
        let members: Vec<usize> = (0..n).filter(|&i| label[i] == c).collect();
        clusters.push(Swarm::from_members(members, &positions));
    }
    let noise: Vec<usize> = (0..n).filter(|&i| label[i] == NOISE).collect();
    SwarmPartition { clusters, noise }
}

/// Size-scaled connectivity threshold ρ̄_ac_k for a swarm of `size` members.
pub fn connectivity_threshold(size: usize, r_bar_s: f64, n_d: usize, n_a: usize) -> f64 {
    debug_assert!(n_a >= 2);
    max_enclosable_radius(r_bar_s, n_d) * (size.saturating_sub(1)) as f64 / (n_a - 1) as f64
}

/// True iff the swarm's radius strictly exceeds its size-scaled threshold,
/// which re-runs DBSCAN restricted to the swarm's members.
pub fn recluster_trigger(swarm: &Swarm, r_bar_s: f64, n_d: usize, n_a: usize) -> bool {
    swarm.radius > connectivity_threshold(swarm.len(), r_bar_s, n_d, n_a)
}
