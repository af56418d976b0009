//! Defender-to-swarm assignment.
//!
//! Contiguity (every swarm's defenders form a consecutive run on the
//! Open-StringNet path) plus exact cover force any feasible assignment to
//! be a partition of the path into consecutive blocks of the given
//! capacities, so the feasible set is exactly the N_ac! orderings of
//! swarms along the path. The exact solver is a branch-and-bound over
//! those orderings; the hierarchical solver recursively halves the
//! problem by angle and stitches the sub-solutions.

use crate::formation::gather_goals;
use crate::geom::{centroid, Vec2};
use crate::model::ScenarioConfig;
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AssignError {
    #[error("capacities sum to {got}, expected the defender count {expected}")]
    CapacityMismatch { expected: usize, got: usize },
    #[error("instance needs at least one swarm and one defender")]
    EmptyInstance,
    #[error("every capacity must be ≥ 1")]
    ZeroCapacity,
    #[error("assignment violates the instance contract: {0}")]
    ContractViolation(String),
    #[error("defender and goal counts differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
}

/// One C2GAP instance. Defender order is the Open-StringNet path order.
#[derive(Clone, Debug)]
pub struct C2GapInstance {
    pub defender_positions: Vec<Vec2>,
    /// swarm hull-centers r_ĥac
    pub swarm_centers: Vec<Vec2>,
    /// defenders owed to each swarm; must sum to the defender count
    pub capacities: Vec<usize>,
}

impl C2GapInstance {
    pub fn validate(&self) -> Result<(), AssignError> {
        if self.defender_positions.is_empty() || self.swarm_centers.is_empty() {
            return Err(AssignError::EmptyInstance);
        }
        if self.swarm_centers.len() != self.capacities.len() {
            return Err(AssignError::ContractViolation(format!(
                "{} centers but {} capacities",
                self.swarm_centers.len(),
                self.capacities.len()
            )));
        }
        if self.capacities.iter().any(|&c| c == 0) {
            return Err(AssignError::ZeroCapacity);
        }
        let total: usize = self.capacities.iter().sum();
        if total != self.defender_positions.len() {
            return Err(AssignError::CapacityMismatch {
                expected: self.defender_positions.len(),
                got: total,
            });
        }
        Ok(())
    }

    fn distance_matrix(&self) -> Vec<Vec<f64>> {
        self.defender_positions
            .iter()
            .map(|d| self.swarm_centers.iter().map(|c| d.dist(*c)).collect())
            .collect()
    }
}

/// Binary decision matrix δ_jk plus the per-swarm ordered defender lists
/// (the β_k mappings, as positions on the path).
#[derive(Clone, Debug, PartialEq)]
pub struct AssignmentMatrix {
    /// delta[j][k] — defender j assigned to swarm k
    pub delta: Vec<Vec<bool>>,
    /// block_map[k] — path positions assigned to swarm k, ascending
    pub block_map: Vec<Vec<usize>>,
}

impl AssignmentMatrix {
    /// Build the block partition induced by placing the swarms along the
    /// path in `order`.
    pub fn from_ordering(inst: &C2GapInstance, order: &[usize]) -> Self {
        let n_d = inst.defender_positions.len();
        let n_s = inst.swarm_centers.len();
        let mut delta = vec![vec![false; n_s]; n_d];
        let mut block_map = vec![Vec::new(); n_s];
        let mut slot = 0;
        for &k in order {
            for _ in 0..inst.capacities[k] {
                delta[slot][k] = true;
                block_map[k].push(slot);
                slot += 1;
            }
        }
        AssignmentMatrix { delta, block_map }
    }

    /// Structural feasibility: row sums 1, column sums equal capacities,
    /// every swarm's defenders consecutive in path order, all assigned.
    pub fn check_feasible(&self, inst: &C2GapInstance) -> Result<(), AssignError> {
        inst.validate()?;
        let n_d = inst.defender_positions.len();
        let n_s = inst.swarm_centers.len();
        if self.delta.len() != n_d || self.delta.iter().any(|row| row.len() != n_s) {
            return Err(AssignError::ContractViolation("delta shape mismatch".into()));
        }
        for (j, row) in self.delta.iter().enumerate() {
            let sum = row.iter().filter(|&&b| b).count();
            if sum != 1 {
                return Err(AssignError::ContractViolation(format!(
                    "defender {j} assigned to {sum} swarms"
                )));
            }
        }
        for (k, block) in self.block_map.iter().enumerate() {
            let col: Vec<usize> = (0..n_d).filter(|&j| self.delta[j][k]).collect();
            if col.len() != inst.capacities[k] {
                return Err(AssignError::ContractViolation(format!(
                    "swarm {k} got {} defenders, capacity {}",
                    col.len(),
                    inst.capacities[k]
                )));
            }
            if *block != col {
                return Err(AssignError::ContractViolation(format!(
                    "block_map for swarm {k} disagrees with delta"
                )));
            }
            if col.windows(2).any(|w| w[1] != w[0] + 1) {
                return Err(AssignError::ContractViolation(format!(
                    "swarm {k} defenders are not a consecutive path run"
                )));
            }
        }
        Ok(())
    }
}

/// Eq. (sum of distances) cost of a feasible assignment.
pub fn assignment_cost(inst: &C2GapInstance, a: &AssignmentMatrix) -> Result<f64, AssignError> {
    a.check_feasible(inst)?;
    let mut cost = 0.0;
    for (k, block) in a.block_map.iter().enumerate() {
        for &j in block {
            cost += inst.defender_positions[j].dist(inst.swarm_centers[k]);
        }
    }
    Ok(cost)
}

/// Exact C2GAP solution: branch-and-bound over swarm-to-block orderings.
/// Branches in ascending swarm index, so among exactly cost-tied optima the
/// lexicographically smallest ordering wins.
pub fn solve_exact(inst: &C2GapInstance) -> Result<AssignmentMatrix, AssignError> {
    let order = solve_exact_order(inst)?;
    Ok(AssignmentMatrix::from_ordering(inst, &order))
}

fn solve_exact_order(inst: &C2GapInstance) -> Result<Vec<usize>, AssignError> {
    inst.validate()?;
    let n_s = inst.swarm_centers.len();
    let n_d = inst.defender_positions.len();
    let dist = inst.distance_matrix();

    // prefix[k][j] = Σ_{j' < j} dist[j'][k], so a block cost is O(1)
    let mut prefix = vec![vec![0.0; n_d + 1]; n_s];
    for k in 0..n_s {
        for j in 0..n_d {
            prefix[k][j + 1] = prefix[k][j] + dist[j][k];
        }
    }
    let block_cost =
        |k: usize, start: usize| prefix[k][start + inst.capacities[k]] - prefix[k][start];

    // greedy seed for the incumbent cost (order discarded; the lex-ordered
    // DFS below re-finds the matching optimum and owns tie-breaking)
    let greedy_cost = {
        let mut used = vec![false; n_s];
        let mut slot = 0;
        let mut cost = 0.0;
        for _ in 0..n_s {
            let mut best_k = usize::MAX;
            let mut best_c = f64::INFINITY;
            for k in 0..n_s {
                if !used[k] {
                    let c = block_cost(k, slot);
                    if c < best_c {
                        best_c = c;
                        best_k = k;
                    }
                }
            }
            used[best_k] = true;
            slot += inst.capacities[best_k];
            cost += best_c;
        }
        cost
    };

    struct Search<'a> {
        inst: &'a C2GapInstance,
        dist: &'a [Vec<f64>],
        best_cost: f64,
        best_order: Option<Vec<usize>>,
        order: Vec<usize>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        fn suffix_bound(&self, start_slot: usize) -> f64 {
            // every remaining defender pays at least its cheapest unused swarm
            let mut bound = 0.0;
            for j in start_slot..self.dist.len() {
                let mut m = f64::INFINITY;
                for (k, &u) in self.used.iter().enumerate() {
                    if !u && self.dist[j][k] < m {
                        m = self.dist[j][k];
                    }
                }
                bound += m;
            }
            bound
        }

        fn dfs(&mut self, slot: usize, partial: f64, block_cost: &dyn Fn(usize, usize) -> f64) {
            if slot == self.dist.len() {
                if partial < self.best_cost {
                    self.best_cost = partial;
                    self.best_order = Some(self.order.clone());
                } else if partial == self.best_cost && self.best_order.is_none() {
                    self.best_order = Some(self.order.clone());
                }
                return;
            }
            for k in 0..self.used.len() {
                if self.used[k] {
                    continue;
                }
                let with_k = partial + block_cost(k, slot);
                self.used[k] = true;
                self.order.push(k);
                let next_slot = slot + self.inst.capacities[k];
                // prune strictly so exactly cost-tied optima survive for
                // the lex tie-break
                if with_k + self.suffix_bound(next_slot) <= self.best_cost {
                    self.dfs(next_slot, with_k, block_cost);
                }
                self.order.pop();
                self.used[k] = false;
            }
        }
    }

    // tiny cushion so the optimum is never pruned by a different
    // floating-point summation order than the greedy pass used
    let mut search = Search {
        inst,
        dist: &dist,
        best_cost: greedy_cost * (1.0 + 1e-12) + 1e-12,
        best_order: None,
        order: Vec::with_capacity(n_s),
        used: vec![false; n_s],
    };
    search.dfs(0, 0.0, &block_cost);
    Ok(search.best_order.expect("at least the greedy ordering completes"))
}

/// Algorithm inputs: swarm centers, sizes and the attacker total (the 𝒜
/// structure).
#[derive(Clone, Debug)]
pub struct AttackerSummary {
    pub centers: Vec<Vec2>,
    pub sizes: Vec<usize>,
    pub total: usize,
}

impl AttackerSummary {
    pub fn n_ac(&self) -> usize {
        self.centers.len()
    }
}

/// Defender positions in current Open-StringNet path order plus the global
/// defender indices at each path slot (the β mapping).
#[derive(Clone, Debug)]
pub struct DefenderSummary {
    pub positions: Vec<Vec2>,
    pub order: Vec<usize>,
}

/// Split swarms into two halves of roughly equal attacker count by the
/// angle ψ_k of (center_k − r_dc) against the mean center direction, and
/// split the defender path accordingly. Also returns the original swarm
/// positions of each half.
#[allow(clippy::type_complexity)]
pub fn split_equal(
    a: &AttackerSummary,
    d: &DefenderSummary,
) -> (
    (AttackerSummary, DefenderSummary, Vec<usize>),
    (AttackerSummary, DefenderSummary, Vec<usize>),
) {
    debug_assert!(a.n_ac() >= 2);
    let r_dc = centroid(&d.positions);
    let mut reference = Vec2::ZERO;
    for &c in &a.centers {
        reference += c - r_dc;
    }
    reference = reference * (1.0 / a.n_ac() as f64);
    if reference.norm() < 1e-12 {
        // symmetric centers: fall back to the first swarm's direction
        reference = a.centers[0] - r_dc;
    }
    if reference.norm() < 1e-12 {
        reference = Vec2::new(1.0, 0.0);
    }

    // ψ > 0 for swarms counter-clockwise of the reference direction, which
    // is the side of the path prefix (slot 1 sits at +ô(θ+π/2))
    let psi = |c: Vec2| -> f64 {
        let rel = c - r_dc;
        reference.cross(rel).atan2(reference.dot(rel))
    };
    let mut by_angle: Vec<usize> = (0..a.n_ac()).collect();
    by_angle.sort_by(|&i, &j| {
        psi(a.centers[j])
            .partial_cmp(&psi(a.centers[i]))
            .unwrap()
            .then(i.cmp(&j))
    });

    let half = a.total.div_ceil(2);
    let mut left_pos: Vec<usize> = Vec::new();
    let mut acc = 0;
    for (rank, &k) in by_angle.iter().enumerate() {
        // both halves must stay nonempty for the recursion to shrink
        if acc >= half || rank == a.n_ac() - 1 {
            break;
        }
        left_pos.push(k);
        acc += a.sizes[k];
    }
    if left_pos.is_empty() {
        left_pos.push(by_angle[0]);
    }
    let right_pos: Vec<usize> = by_angle
        .iter()
        .copied()
        .filter(|k| !left_pos.contains(k))
        .collect();

    let summarize = |pos: &[usize]| AttackerSummary {
        centers: pos.iter().map(|&k| a.centers[k]).collect(),
        sizes: pos.iter().map(|&k| a.sizes[k]).collect(),
        total: pos.iter().map(|&k| a.sizes[k]).sum(),
    };
    let a_l = summarize(&left_pos);
    let a_r = summarize(&right_pos);
    let n_l: usize = a_l.total.min(d.positions.len());
    let d_l = DefenderSummary {
        positions: d.positions[..n_l].to_vec(),
        order: d.order[..n_l].to_vec(),
    };
    let d_r = DefenderSummary {
        positions: d.positions[n_l..].to_vec(),
        order: d.order[n_l..].to_vec(),
    };
    ((a_l, d_l, left_pos), (a_r, d_r, right_pos))
}

/// Hierarchical divide-and-conquer assignment: at or below `n_ac_min`
/// swarms delegate to the exact solver, otherwise split and recurse.
/// Always feasible; cost is an upper bound on the exact optimum.
pub fn solve_hierarchical(
    a: &AttackerSummary,
    d: &DefenderSummary,
    n_ac_min: usize,
) -> Result<AssignmentMatrix, AssignError> {
    debug_assert!(n_ac_min >= 1);
    let inst = C2GapInstance {
        defender_positions: d.positions.clone(),
        swarm_centers: a.centers.clone(),
        capacities: a.sizes.clone(),
    };
    inst.validate()?;
    let order = hierarchical_order(a, d, n_ac_min)?;
    Ok(AssignmentMatrix::from_ordering(&inst, &order))
}

fn hierarchical_order(
    a: &AttackerSummary,
    d: &DefenderSummary,
    n_ac_min: usize,
) -> Result<Vec<usize>, AssignError> {
    if a.n_ac() <= n_ac_min || a.n_ac() < 2 {
        let inst = C2GapInstance {
            defender_positions: d.positions.clone(),
            swarm_centers: a.centers.clone(),
            capacities: a.sizes.clone(),
        };
        return solve_exact_order(&inst);
    }
    let ((a_l, d_l, map_l), (a_r, d_r, map_r)) = split_equal(a, d);
    let left = hierarchical_order(&a_l, &d_l, n_ac_min)?;
    let right = hierarchical_order(&a_r, &d_r, n_ac_min)?;
    let mut order: Vec<usize> = left.into_iter().map(|k| map_l[k]).collect();
    order.extend(right.into_iter().map(|k| map_r[k]));
    Ok(order)
}

/// Bottleneck defender-goal assignment: the bijection l → j minimizing the
/// maximum straight-line travel-time estimate dist/v_max, returned with
/// that makespan.
pub fn gather_goal_assignment(
    defenders: &[Vec2],
    goals: &[Vec2],
    v_max: f64,
) -> Result<(Vec<usize>, f64), AssignError> {
    if defenders.len() != goals.len() {
        return Err(AssignError::SizeMismatch(defenders.len(), goals.len()));
    }
    if defenders.is_empty() {
        return Ok((Vec::new(), 0.0));
    }
    debug_assert!(v_max > 0.0);
    let n = defenders.len();
    let dist: Vec<Vec<f64>> = goals
        .iter()
        .map(|g| defenders.iter().map(|d| d.dist(*g)).collect())
        .collect();

    // threshold search over the sorted distinct distances
    let mut thresholds: Vec<f64> = dist.iter().flatten().copied().collect();
    thresholds.sort_by(|x, y| x.partial_cmp(y).unwrap());
    thresholds.dedup();

    // Kuhn's augmenting-path matching restricted to edges ≤ t
    let matches_under = |t: f64| -> Option<Vec<usize>> {
        let mut goal_of_def = vec![usize::MAX; n];
        fn augment(
            l: usize,
            t: f64,
            dist: &[Vec<f64>],
            goal_of_def: &mut [usize],
            seen: &mut [bool],
        ) -> bool {
            for j in 0..dist.len() {
                if dist[l][j] <= t && !seen[j] {
                    seen[j] = true;
                    if goal_of_def[j] == usize::MAX
                        || augment(goal_of_def[j], t, dist, goal_of_def, seen)
                    {
                        goal_of_def[j] = l;
                        return true;
                    }
                }
            }
            false
        }
        for l in 0..n {
            let mut seen = vec![false; n];
            if !augment(l, t, &dist, &mut goal_of_def, &mut seen) {
                return None;
            }
        }
        let mut def_of_goal = vec![usize::MAX; n];
        for (j, &l) in goal_of_def.iter().enumerate() {
            def_of_goal[l] = j;
        }
        Some(def_of_goal)
    };

    let mut lo = 0;
    let mut hi = thresholds.len() - 1;
    // the largest distance always admits a perfect matching
    while lo < hi {
        let mid = (lo + hi) / 2;
        if matches_under(thresholds[mid]).is_some() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let t_star = thresholds[lo];
    let assignment = matches_under(t_star).expect("threshold admits a matching");
    Ok((assignment, t_star / v_max))
}

/// Bisection search for the farthest feasible gathering center along the
/// expected path: candidate r_df^g = r_p + ρ·ô(θ*_acm + π) is feasible iff
/// the defenders' bottleneck arrival beats the attackers' straight-line
/// arrival. Returns the best center and a feasibility flag.
pub fn gathering_center(
    cfg: &ScenarioConfig,
    defenders: &[Vec2],
    attacker_com: Vec2,
    theta_acm: f64,
) -> (Vec2, bool) {
    let theta_df = theta_acm + std::f64::consts::PI;
    let dir = Vec2::unit_from_angle(theta_df);
    let r_p = cfg.protected.center;
    let rho_p = cfg.protected.radius;
    let v_a = cfg.v_bar_a();
    let v_d = cfg.v_bar_d();
    let spacing = cfg.spacing();
    let hi_limit = attacker_com.dist(r_p);
    let tol = 1e-3 * rho_p;

    let center_at = |rho: f64| r_p + dir * rho;
    let feasible = |rho: f64| -> bool {
        let c = center_at(rho);
        let goals = gather_goals(c, theta_df, cfg.n_d, spacing);
        match gather_goal_assignment(defenders, &goals, v_d) {
            Ok((_, makespan)) => makespan < attacker_com.dist(c) / v_a,
            Err(_) => false,
        }
    };

    let mut lo = rho_p + tol;
    let mut hi = (hi_limit - tol).max(lo);
    if !feasible(lo) {
        return (center_at(lo), false);
    }
    if feasible(hi) {
        return (center_at(hi), true);
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if feasible(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (center_at(lo), true)
}

/// Random C2GAP instance family used by the benchmark harness and tests:
/// defenders on a jittered line (path order along it), swarm centers
/// scattered in the half-plane ahead, capacities a random composition.
pub fn random_instance<R: Rng>(rng: &mut R, n_swarms: usize, n_defenders: usize) -> C2GapInstance {
    assert!(n_swarms >= 1 && n_defenders >= n_swarms);
    let defender_positions: Vec<Vec2> = (0..n_defenders)
        .map(|i| Vec2::new(2.0 * i as f64, rng.random_range(-1.0..1.0)))
        .collect();
    let span = 2.0 * n_defenders as f64;
    let swarm_centers: Vec<Vec2> = (0..n_swarms)
        .map(|_| {
            Vec2::new(
                rng.random_range(-0.25 * span..1.25 * span),
                rng.random_range(5.0..0.8 * span + 10.0),
            )
        })
        .collect();
    let mut capacities = vec![1usize; n_swarms];
    for _ in 0..(n_defenders - n_swarms) {
        let k = rng.random_range(0..n_swarms);
        capacities[k] += 1;
    }
    C2GapInstance {
        defender_positions,
        swarm_centers,
        capacities,
    }
}
