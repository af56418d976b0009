//! Desired formation goal positions for every phase: gathering/seeking
//! line, semicircular Open-StringNet, circular Closed-StringNet, and the
//! translating herding circle. Pure geometry.

use crate::geom::{Disk, Vec2};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormationError {
    #[error("formation needs at least {min} members, got {got}")]
    TooFewMembers { min: usize, got: usize },
    #[error("ρ_sn={rho_sn} too small: must exceed swarm clearance {min_radius}")]
    RadiusTooSmall { rho_sn: f64, min_radius: f64 },
    #[error("chord {chord:.4} between adjacent closed goals exceeds R̄_s={r_bar_s}")]
    ChordTooLong { chord: f64, r_bar_s: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormationKind {
    GatherLine,
    SeekLine,
    EncloseOpen,
    EncloseClosed,
    Herd,
}

/// Active formation of one defender group.
#[derive(Clone, Debug)]
pub struct FormationSpec {
    pub kind: FormationKind,
    pub center: Vec2,
    /// orientation θ (radians)
    pub orientation: f64,
    pub count: usize,
    /// line spacing R̂ or circle radius ρ_sn, by kind
    pub parameter: f64,
    /// feed-forward velocity of the whole formation
    pub velocity: Vec2,
}

impl FormationSpec {
    /// Goal positions for the current geometry; Err only for the enclosing
    /// kinds' precondition failures.
    pub fn goals(&self, r_bar_s: f64, min_radius: f64) -> Result<Vec<Vec2>, FormationError> {
        match self.kind {
            FormationKind::GatherLine | FormationKind::SeekLine => Ok(gather_goals(
                self.center,
                self.orientation,
                self.count,
                self.parameter,
            )),
            FormationKind::EncloseOpen => enclose_open_goals(
                self.center,
                self.orientation,
                self.count,
                self.parameter,
                min_radius,
            ),
            FormationKind::EncloseClosed | FormationKind::Herd => enclose_closed_goals(
                self.center,
                self.orientation,
                self.count,
                self.parameter,
                min_radius,
                r_bar_s,
            ),
        }
    }
}

/// Static straight-line goals ξ_l = center + R̂·(n−2l+1)/2 · ô(θ+π/2),
/// l = 1..n. The first goal sits on the +ô(θ+π/2) side.
pub fn gather_goals(center: Vec2, theta: f64, n: usize, spacing: f64) -> Vec<Vec2> {
    debug_assert!(n >= 2);
    debug_assert!(spacing > 0.0);
    let along = Vec2::unit_from_angle(theta + std::f64::consts::FRAC_PI_2);
    (1..=n)
        .map(|l| {
            let offset = spacing * (n as f64 - 2.0 * l as f64 + 1.0) / 2.0;
            center + along * offset
        })
        .collect()
}

/// Semicircle goals at θ_l = θ_e + π/2 + π(l−1)/(n−1) on the circle of
/// radius ρ_sn around `center`; the arc midpoint faces θ_e + π.
pub fn enclose_open_goals(
    center: Vec2,
    theta_e: f64,
    n: usize,
    rho_sn: f64,
    min_radius: f64,
) -> Result<Vec<Vec2>, FormationError> {
    if n < 2 {
        return Err(FormationError::TooFewMembers { min: 2, got: n });
    }
    if rho_sn <= min_radius {
        return Err(FormationError::RadiusTooSmall { rho_sn, min_radius });
    }
    let pi = std::f64::consts::PI;
    Ok((1..=n)
        .map(|l| {
            let theta_l = theta_e + pi / 2.0 + pi * (l as f64 - 1.0) / (n as f64 - 1.0);
            center + Vec2::unit_from_angle(theta_l) * rho_sn
        })
        .collect())
}

/// Full-circle goals at θ_l = θ_e + π(2l−1)/n; adjacent chords must be
/// string-reachable: 2ρ_sn·sin(π/n) ≤ R̄_s.
pub fn enclose_closed_goals(
    center: Vec2,
    theta_e: f64,
    n: usize,
    rho_sn: f64,
    min_radius: f64,
    r_bar_s: f64,
) -> Result<Vec<Vec2>, FormationError> {
    if n < 3 {
        return Err(FormationError::TooFewMembers { min: 3, got: n });
    }
    if rho_sn <= min_radius {
        return Err(FormationError::RadiusTooSmall { rho_sn, min_radius });
    }
    let pi = std::f64::consts::PI;
    let chord = 2.0 * rho_sn * (pi / n as f64).sin();
    if chord > r_bar_s {
        return Err(FormationError::ChordTooLong { chord, r_bar_s });
    }
    Ok((1..=n)
        .map(|l| {
            let theta_l = theta_e + pi * (2.0 * l as f64 - 1.0) / n as f64;
            center + Vec2::unit_from_angle(theta_l) * rho_sn
        })
        .collect())
}

/// Closed-circle goals rigidly translated with the herding virtual agent;
/// every goal inherits the virtual agent's velocity as feed-forward.
pub fn herd_goals(
    virtual_center: Vec2,
    virtual_velocity: Vec2,
    theta_e: f64,
    n: usize,
    rho_sn: f64,
    min_radius: f64,
    r_bar_s: f64,
) -> Result<(Vec<Vec2>, Vec2), FormationError> {
    let goals = enclose_closed_goals(virtual_center, theta_e, n, rho_sn, min_radius, r_bar_s)?;
    Ok((goals, virtual_velocity))
}

/// ς(k): index of the safe area whose center is closest to the virtual
/// agent; ties go to the lowest index. `safe_areas` must be nonempty.
pub fn closest_safe_area(virtual_center: Vec2, safe_areas: &[Disk]) -> usize {
    debug_assert!(!safe_areas.is_empty());
    let mut best = 0;
    let mut best_d = virtual_center.dist(safe_areas[0].center);
    for (m, s) in safe_areas.iter().enumerate().skip(1) {
        let d = virtual_center.dist(s.center);
        if d < best_d {
            best = m;
            best_d = d;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn close(a: Vec2, b: Vec2, eps: f64) -> bool {
        (a - b).norm() < eps
    }

    #[test]
    fn gather_line_two_members() {
        let g = gather_goals(Vec2::new(-5.0, 0.0), PI, 2, 2.0);
        assert!(close(g[0], Vec2::new(-5.0, -1.0), 1e-12));
        assert!(close(g[1], Vec2::new(-5.0, 1.0), 1e-12));
    }

    #[test]
    fn gather_line_three_members() {
        let g = gather_goals(Vec2::new(-5.0, 0.0), PI, 3, 2.0);
        assert!(close(g[0], Vec2::new(-5.0, -2.0), 1e-12));
        assert!(close(g[1], Vec2::new(-5.0, 0.0), 1e-12));
        assert!(close(g[2], Vec2::new(-5.0, 2.0), 1e-12));
    }

    #[test]
    fn gather_line_spacing_and_symmetry() {
        let center = Vec2::new(3.0, -2.0);
        let g = gather_goals(center, 0.7, 10, 1.5);
        for w in g.windows(2) {
            assert!((w[0].dist(w[1]) - 1.5).abs() < 1e-12);
        }
        let mean = crate::geom::centroid(&g);
        assert!(close(mean, center, 1e-12));
    }

    #[test]
    fn open_arc_exact_angles() {
        let g = enclose_open_goals(Vec2::ZERO, 0.0, 3, 1.0, 0.5).unwrap();
        assert!(close(g[0], Vec2::new(0.0, 1.0), 1e-12));
        assert!(close(g[1], Vec2::new(-1.0, 0.0), 1e-12));
        assert!(close(g[2], Vec2::new(0.0, -1.0), 1e-12));
        let g2 = enclose_open_goals(Vec2::ZERO, 0.0, 2, 1.0, 0.5).unwrap();
        assert!(close(g2[0], Vec2::new(0.0, 1.0), 1e-12));
        assert!(close(g2[1], Vec2::new(0.0, -1.0), 1e-12));
    }

    #[test]
    fn open_arc_uniform_gaps() {
        let g = enclose_open_goals(Vec2::ZERO, 1.1, 5, 2.0, 0.5).unwrap();
        for p in &g {
            assert!((p.norm() - 2.0).abs() < 1e-12);
        }
        // 5 goals span π over 4 equal angular gaps of π/4
        let gap = 2.0 * 2.0 * (PI / 8.0).sin();
        for w in g.windows(2) {
            assert!((w[0].dist(w[1]) - gap).abs() < 1e-12);
        }
    }

    #[test]
    fn open_arc_radius_precondition() {
        assert!(matches!(
            enclose_open_goals(Vec2::ZERO, 0.0, 4, 1.0, 1.5),
            Err(FormationError::RadiusTooSmall { .. })
        ));
    }

    #[test]
    fn closed_circle_exact_angles() {
        let g = enclose_closed_goals(Vec2::ZERO, 0.0, 4, 1.0, 0.2, 10.0).unwrap();
        let s = 0.5f64.sqrt();
        assert!(close(g[0], Vec2::new(s, s), 1e-12));
        assert!(close(g[1], Vec2::new(-s, s), 1e-12));
        assert!(close(g[2], Vec2::new(-s, -s), 1e-12));
        assert!(close(g[3], Vec2::new(s, -s), 1e-12));

        let g3 = enclose_closed_goals(Vec2::ZERO, 0.0, 3, 1.0, 0.2, 10.0).unwrap();
        assert!(close(g3[0], Vec2::unit_from_angle(PI / 3.0), 1e-12));
        assert!(close(g3[1], Vec2::unit_from_angle(PI), 1e-12));
        assert!(close(g3[2], Vec2::unit_from_angle(5.0 * PI / 3.0), 1e-12));
    }

    #[test]
    fn closed_circle_chord_boundary_accepted() {
        // chord = 2·sin(30°) = 1 equals R̄_s exactly
        assert!(enclose_closed_goals(Vec2::ZERO, 0.0, 6, 1.0, 0.2, 1.0).is_ok());
        assert!(matches!(
            enclose_closed_goals(Vec2::ZERO, 0.0, 6, 1.01, 0.2, 1.0),
            Err(FormationError::ChordTooLong { .. })
        ));
    }

    #[test]
    fn herd_is_a_rigid_translation() {
        let (base, _) = herd_goals(Vec2::ZERO, Vec2::ZERO, 0.3, 5, 2.0, 0.5, 10.0).unwrap();
        let closed = enclose_closed_goals(Vec2::ZERO, 0.3, 5, 2.0, 0.5, 10.0).unwrap();
        assert_eq!(base, closed);

        let shift = Vec2::new(1.0, 2.0);
        let (moved, ff) = herd_goals(shift, Vec2::new(0.5, 0.0), 0.3, 5, 2.0, 0.5, 10.0).unwrap();
        for (a, b) in moved.iter().zip(base.iter()) {
            assert!(close(*a, *b + shift, 1e-12));
        }
        assert_eq!(ff, Vec2::new(0.5, 0.0));
    }

    #[test]
    fn closest_safe_area_cases() {
        let areas = [
            Disk::new(Vec2::new(1.0, 0.0), 1.0),
            Disk::new(Vec2::new(5.0, 0.0), 1.0),
        ];
        assert_eq!(closest_safe_area(Vec2::ZERO, &areas), 0);
        // equidistant: lowest index wins
        let tie = [
            Disk::new(Vec2::new(-2.0, 0.0), 1.0),
            Disk::new(Vec2::new(2.0, 0.0), 1.0),
        ];
        assert_eq!(closest_safe_area(Vec2::ZERO, &tie), 0);
    }

    #[test]
    fn closest_safe_area_matches_linear_scan() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let areas: Vec<Disk> = (0..5)
                .map(|_| {
                    Disk::new(
                        Vec2::new(rng.random_range(-20.0..20.0), rng.random_range(-20.0..20.0)),
                        1.0,
                    )
                })
                .collect();
            let p = Vec2::new(rng.random_range(-20.0..20.0), rng.random_range(-20.0..20.0));
            let got = closest_safe_area(p, &areas);
            let want = areas
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| {
                    p.dist(a.center).partial_cmp(&p.dist(b.center)).unwrap()
                })
                .unwrap()
                .0;
            assert_eq!(got, want);
        }
    }

    proptest! {
        /// every generator is equivariant under a global rigid motion
        #[test]
        fn rigid_motion_equivariance(
            cx in -10.0..10.0f64, cy in -10.0..10.0f64,
            theta in 0.0..6.28f64,
            rot in 0.0..6.28f64,
            tx in -10.0..10.0f64, ty in -10.0..10.0f64,
            n in 3usize..12,
        ) {
            let center = Vec2::new(cx, cy);
            let shift = Vec2::new(tx, ty);
            let apply = |p: Vec2| {
                Vec2::new(
                    p.x * rot.cos() - p.y * rot.sin(),
                    p.x * rot.sin() + p.y * rot.cos(),
                ) + shift
            };

            let line = gather_goals(center, theta, n, 1.3);
            let line_moved = gather_goals(apply(center), theta + rot, n, 1.3);
            for (a, b) in line.iter().zip(line_moved.iter()) {
                prop_assert!(close(apply(*a), *b, 1e-9));
            }

            let arc = enclose_open_goals(center, theta, n, 3.0, 0.5).unwrap();
            let arc_moved = enclose_open_goals(apply(center), theta + rot, n, 3.0, 0.5).unwrap();
            for (a, b) in arc.iter().zip(arc_moved.iter()) {
                prop_assert!(close(apply(*a), *b, 1e-9));
            }

            let ring = enclose_closed_goals(center, theta, n, 3.0, 0.5, 100.0).unwrap();
            let ring_moved =
                enclose_closed_goals(apply(center), theta + rot, n, 3.0, 0.5, 100.0).unwrap();
            for (a, b) in ring.iter().zip(ring_moved.iter()) {
                prop_assert!(close(apply(*a), *b, 1e-9));
            }
        }

        /// closed goals: equal radius and equal consecutive chords
        #[test]
        fn closed_circle_uniformity(n in 3usize..15, rho in 0.5..5.0f64) {
            let g = enclose_closed_goals(Vec2::ZERO, 0.9, n, rho, 0.0, 1e9).unwrap();
            let chord = 2.0 * rho * (PI / n as f64).sin();
            for p in &g {
                prop_assert!((p.norm() - rho).abs() < 1e-9);
            }
            for i in 0..n {
                let d = g[i].dist(g[(i + 1) % n]);
                prop_assert!((d - chord).abs() < 1e-9);
            }
        }
    }
}
