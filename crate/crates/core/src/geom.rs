//! Planar geometry primitives shared by every module.

use serde::{Deserialize, Serialize};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// 2D vector; meters or meters/second depending on context.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    /// Unit vector at angle `theta` from the x-axis (the paper's ô(θ)).
    pub fn unit_from_angle(theta: f64) -> Self {
        Vec2::new(theta.cos(), theta.sin())
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product.
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn dist(self, other: Vec2) -> f64 {
        (self - other).norm()
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    /// Zero vector stays zero; anything else is scaled to unit norm.
    pub fn normalized(self) -> Vec2 {
        let n = self.norm();
        if n == 0.0 {
            Vec2::ZERO
        } else {
            self * (1.0 / n)
        }
    }

    /// Counter-clockwise perpendicular.
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl AddAssign for Vec2 {
    fn add_assign(&mut self, rhs: Vec2) {
        self.x += rhs.x;
        self.y += rhs.y;
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// Closed disk: protected and safe areas.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Disk {
    pub center: Vec2,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: Vec2, radius: f64) -> Self {
        Disk { center, radius }
    }

    pub fn contains(&self, p: Vec2) -> bool {
        p.dist(self.center) <= self.radius
    }

    pub fn intersects(&self, other: &Disk) -> bool {
        self.center.dist(other.center) <= self.radius + other.radius
    }
}

/// Mean of a point set; zero for an empty slice.
pub fn centroid(points: &[Vec2]) -> Vec2 {
    if points.is_empty() {
        return Vec2::ZERO;
    }
    let mut s = Vec2::ZERO;
    for &p in points {
        s += p;
    }
    s * (1.0 / points.len() as f64)
}

/// Convex hull (monotone chain), counter-clockwise, no repeated endpoint.
/// Collinear input degenerates to the two extreme points.
pub fn convex_hull(points: &[Vec2]) -> Vec<Vec2> {
    let mut pts: Vec<Vec2> = points.to_vec();
    pts.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
    pts.dedup();
    let n = pts.len();
    if n <= 2 {
        return pts;
    }
    let chain = |iter: &mut dyn Iterator<Item = Vec2>| -> Vec<Vec2> {
        let mut out: Vec<Vec2> = Vec::new();
        for p in iter {
            while out.len() >= 2 {
                let a = out[out.len() - 2];
                let b = out[out.len() - 1];
                if (b - a).cross(p - a) <= 0.0 {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(p);
        }
        out.pop();
        out
    };
    let mut lower = chain(&mut pts.iter().copied());
    let upper = chain(&mut pts.iter().rev().copied());
    lower.extend(upper);
    if lower.len() < 2 {
        // fully collinear set: keep the two extremes
        return vec![pts[0], pts[n - 1]];
    }
    lower
}

/// Area centroid of the convex hull of `points`. Degenerate hulls
/// (0, 1 or 2 extreme points, collinear sets) fall back to the midpoint
/// of the extremes.
pub fn hull_centroid(points: &[Vec2]) -> Vec2 {
    let hull = convex_hull(points);
    match hull.len() {
        0 => Vec2::ZERO,
        1 => hull[0],
        2 => (hull[0] + hull[1]) * 0.5,
        _ => {
            // polygon area centroid
            let mut area2 = 0.0;
            let mut cx = 0.0;
            let mut cy = 0.0;
            for i in 0..hull.len() {
                let a = hull[i];
                let b = hull[(i + 1) % hull.len()];
                let w = a.cross(b);
                area2 += w;
                cx += (a.x + b.x) * w;
                cy += (a.y + b.y) * w;
            }
            if area2.abs() < 1e-12 {
                return centroid(&hull);
            }
            Vec2::new(cx / (3.0 * area2), cy / (3.0 * area2))
        }
    }
}

/// Distance from point `p` to segment `ab`, plus the closest point.
pub fn point_segment_distance(p: Vec2, a: Vec2, b: Vec2) -> (f64, Vec2) {
    let ab = b - a;
    let len_sq = ab.norm_sq();
    if len_sq == 0.0 {
        return (p.dist(a), a);
    }
    let t = ((p - a).dot(ab) / len_sq).clamp(0.0, 1.0);
    let q = a + ab * t;
    (p.dist(q), q)
}

/// Proper or touching intersection of segments `p1p2` and `q1q2`.
pub fn segments_intersect(p1: Vec2, p2: Vec2, q1: Vec2, q2: Vec2) -> bool {
    let d1 = (q2 - q1).cross(p1 - q1);
    let d2 = (q2 - q1).cross(p2 - q1);
    let d3 = (p2 - p1).cross(q1 - p1);
    let d4 = (p2 - p1).cross(q2 - p1);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    let on = |d: f64, a: Vec2, b: Vec2, c: Vec2| {
        d == 0.0
            && c.x >= a.x.min(b.x)
            && c.x <= a.x.max(b.x)
            && c.y >= a.y.min(b.y)
            && c.y <= a.y.max(b.y)
    };
    on(d1, q1, q2, p1) || on(d2, q1, q2, p2) || on(d3, p1, p2, q1) || on(d4, p1, p2, q2)
}

/// Ray-cast point-in-polygon test (vertices in order, open ring).
pub fn point_in_polygon(p: Vec2, polygon: &[Vec2]) -> bool {
    let n = polygon.len();
    if n < 3 {
        return false;
    }
    let mut inside = false;
    let mut j = n - 1;
    for i in 0..n {
        let a = polygon[i];
        let b = polygon[j];
        if (a.y > p.y) != (b.y > p.y) {
            let x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if p.x < x_cross {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}
