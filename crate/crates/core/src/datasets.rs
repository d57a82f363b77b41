//! Seeded generators for the two synthetic instance families.
//!
//! Randomness comes from ChaCha20 seeded with the 64-bit seed. Every cost or
//! point has its own stream, selected by its index, so a value depends only on
//! the seed and its index:
//! pair `pq` uses stream `rank(pq)`, triple `pqr` uses `2^32 + rank(pqr)`,
//! point `k` of the geometric family uses stream `k`.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_6, PI};
use std::io::Write;

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::core::{pair_index, pairs, triple_index, triples, CostFunction, Partition};
use crate::error::{Error, Result};

const TRIPLE_STREAM_OFFSET: u64 = 1 << 32;

fn stream(seed: u64, id: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

fn normal(rng: &mut ChaCha20Rng) -> f64 {
    StandardNormal.sample(rng)
}

/// Parameters of the partition family with `8n` elements.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartitionDatasetParams {
    /// Block scale; blocks have sizes `n, 2n, 2n, 3n`.
    pub n: usize,
    pub alpha: f64,
    pub beta: f64,
    pub seed: u64,
}

impl PartitionDatasetParams {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        for (name, v) in [("alpha", self.alpha), ("beta", self.beta)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::InvalidParameter(format!("{name} must lie in [0, 1]")));
            }
        }
        Ok(())
    }

    /// Standard deviation `0.1 + 0.3 α` of every cost before scaling.
    pub fn sigma(&self) -> f64 {
        0.1 + self.alpha * (0.4 - 0.1)
    }
}

/// Planted blocks `{0..n}`, `{n..3n}`, `{3n..5n}`, `{5n..8n}`.
pub fn partition_ground_truth(n: usize) -> Partition {
    let bounds = [0, n, 3 * n, 5 * n, 8 * n];
    let blocks = bounds.windows(2).map(|w| (w[0]..w[1]).collect()).collect();
    Partition::new(8 * n, blocks).expect("planted blocks form a partition")
}

/// Costs drawn around `-1 + α` inside planted blocks and `1 - α` otherwise;
/// pairs scaled by `1 - β`, triples by `β`.
pub fn generate_partition_instance(p: &PartitionDatasetParams) -> Result<CostFunction> {
    p.validate()?;
    let size = 8 * p.n;
    let labels = partition_ground_truth(p.n).labels();
    let sigma = p.sigma();
    let inside = -1.0 + p.alpha;
    let outside = 1.0 - p.alpha;
    let mut c = CostFunction::zeros(size);
    for (a, b) in pairs(size) {
        let mean = if labels[a] == labels[b] { inside } else { outside };
        let z = normal(&mut stream(p.seed, pair_index(a, b) as u64));
        c.set_pair(a, b, (1.0 - p.beta) * (mean + sigma * z));
    }
    for (a, b, d) in triples(size) {
        let same = labels[a] == labels[b] && labels[b] == labels[d];
        let mean = if same { inside } else { outside };
        let z = normal(&mut stream(p.seed, TRIPLE_STREAM_OFFSET + triple_index(a, b, d) as u64));
        c.set_triple(a, b, d, p.beta * (mean + sigma * z));
    }
    Ok(c)
}

/// An equilateral triangle given by its center, circumradius and the angle of
/// its first vertex as seen from the center.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Triangle {
    pub center: (f64, f64),
    pub circumradius: f64,
    pub angle: f64,
}

impl Triangle {
    pub fn vertices(&self) -> [(f64, f64); 3] {
        let (cx, cy) = self.center;
        std::array::from_fn(|k| {
            let t = self.angle + 2.0 * PI * k as f64 / 3.0;
            (cx + self.circumradius * t.cos(), cy + self.circumradius * t.sin())
        })
    }
}

/// Three disjoint unit-side triangles arranged like the sketch of the problem.
/// The closest vertices of different triangles are about `0.43` apart.
pub fn default_layout() -> Vec<Triangle> {
    let r = 1.0 / 3f64.sqrt();
    [((0.0, 1.5), 20f64), ((0.75, 0.825), 80.0), ((2.25, -1.05), 90.0)]
        .into_iter()
        .map(|(center, degrees)| Triangle {
            center,
            circumradius: r,
            angle: degrees.to_radians(),
        })
        .collect()
}

/// Parameters of the geometric family.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeometricDatasetParams {
    pub sigma: f64,
    pub points_per_vertex: usize,
    pub triangles: Vec<Triangle>,
    pub seed: u64,
}

impl GeometricDatasetParams {
    /// Default layout with 5 points per vertex, 45 points in total.
    pub fn new(sigma: f64, seed: u64) -> Self {
        GeometricDatasetParams {
            sigma,
            points_per_vertex: 5,
            triangles: default_layout(),
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.sigma.is_finite() && self.sigma > 0.0) {
            return Err(Error::InvalidParameter("sigma must be positive".into()));
        }
        if self.points_per_vertex == 0 || self.triangles.is_empty() {
            return Err(Error::InvalidParameter(
                "need at least one triangle and one point per vertex".into(),
            ));
        }
        Ok(())
    }
}

/// A sampled point and the index of the vertex it was drawn around.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
    pub vertex_id: usize,
}

/// Interior angles of the triangle `abc`; degenerate triangles take limiting
/// values (collinear points give `0, 0, π`).
fn angles(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> [f64; 3] {
    let d = |p: (f64, f64), q: (f64, f64)| (p.0 - q.0).hypot(p.1 - q.1);
    let (ab, bc, ca) = (d(a, b), d(b, c), d(c, a));
    let at = |adj1: f64, adj2: f64, opp: f64| {
        if adj1 == 0.0 || adj2 == 0.0 {
            return FRAC_PI_3;
        }
        ((adj1 * adj1 + adj2 * adj2 - opp * opp) / (2.0 * adj1 * adj2))
            .clamp(-1.0, 1.0)
            .acos()
    };
    [at(ab, ca, bc), at(ab, bc, ca), at(bc, ca, ab)]
}

/// Cost of three points at distance scale `sigma`.
pub fn geometric_triple_cost(a: (f64, f64), b: (f64, f64), c: (f64, f64), sigma: f64) -> f64 {
    let d = |p: (f64, f64), q: (f64, f64)| (p.0 - q.0).hypot(p.1 - q.1);
    let ds = [d(a, b), d(b, c), d(c, a)];
    let dmax = ds.iter().copied().fold(0.0, f64::max);
    let dmin = ds.iter().copied().fold(f64::INFINITY, f64::min);
    let near = 4.0 * sigma;
    if dmax <= near {
        return -1.0 + dmax / near;
    }
    if dmin <= near {
        return 0.0;
    }
    let delta: f64 = angles(a, b, c).iter().map(|&t| (t - FRAC_PI_3).abs()).sum();
    if delta < FRAC_PI_6 {
        -1.0 + 6.0 * delta / PI
    } else {
        6.0 / 7.0 * (delta - FRAC_PI_6) / PI
    }
}

/// Samples the point cloud, vertex by vertex.
pub fn generate_points(p: &GeometricDatasetParams) -> Result<Vec<Point>> {
    p.validate()?;
    let mut out = Vec::new();
    let vertices: Vec<(f64, f64)> = p.triangles.iter().flat_map(|t| t.vertices()).collect();
    for (v, &(vx, vy)) in vertices.iter().enumerate() {
        for _ in 0..p.points_per_vertex {
            let mut rng = stream(p.seed, out.len() as u64);
            let (zx, zy) = (normal(&mut rng), normal(&mut rng));
            out.push(Point {
                x: vx + p.sigma * zx,
                y: vy + p.sigma * zy,
                vertex_id: v,
            });
        }
    }
    Ok(out)
}

/// Triple costs of the geometric family; pair costs and the constant are 0.
pub fn geometric_costs(points: &[Point], sigma: f64) -> Result<CostFunction> {
    if points.is_empty() {
        return Err(Error::InvalidParameter("empty point cloud".into()));
    }
    let xy: Vec<(f64, f64)> = points.iter().map(|p| (p.x, p.y)).collect();
    let mut c = CostFunction::zeros(points.len());
    for (a, b, d) in triples(points.len()) {
        c.set_triple(a, b, d, geometric_triple_cost(xy[a], xy[b], xy[d], sigma));
    }
    Ok(c)
}

pub fn generate_geometric_instance(p: &GeometricDatasetParams) -> Result<(CostFunction, Vec<Point>)> {
    let points = generate_points(p)?;
    Ok((geometric_costs(&points, p.sigma)?, points))
}

/// Points grouped by triangle: three consecutive vertices form one block.
pub fn geometric_ground_truth(points: &[Point]) -> Partition {
    let labels: Vec<usize> = points.iter().map(|p| p.vertex_id / 3).collect();
    Partition::from_labels(&labels)
}

/// Writes `x,y,vertex_id` rows with a header.
pub fn write_points_csv<W: Write>(points: &[Point], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for p in points {
        w.serialize(p).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    }
    w.flush().map_err(|e| Error::InvalidArgument(e.to_string()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_endpoints() {
        let at = |alpha| PartitionDatasetParams { n: 1, alpha, beta: 0.5, seed: 0 }.sigma();
        assert!((at(0.0) - 0.1).abs() < 1e-15);
        assert!((at(1.0) - 0.4).abs() < 1e-15);
    }

    #[test]
    fn beta_endpoints() {
        let p = PartitionDatasetParams { n: 1, alpha: 0.3, beta: 0.0, seed: 3 };
        let c = generate_partition_instance(&p).unwrap();
        assert!(c.triple_costs().iter().all(|&v| v == 0.0));
        assert!(c.pair_costs().iter().all(|&v| v != 0.0));
        let c = generate_partition_instance(&PartitionDatasetParams { beta: 1.0, ..p }).unwrap();
        assert!(c.pair_costs().iter().all(|&v| v == 0.0));
        assert_eq!(c.constant(), 0.0);
    }

    #[test]
    fn planted_blocks() {
        let g = partition_ground_truth(2);
        let sizes: Vec<usize> = g.blocks().iter().map(|b| b.len()).collect();
        assert_eq!(sizes, vec![2, 4, 4, 6]);
    }

    #[test]
    fn deterministic_and_seed_dependent() {
        let p = PartitionDatasetParams { n: 1, alpha: 0.4, beta: 0.5, seed: 9 };
        let a = generate_partition_instance(&p).unwrap();
        assert_eq!(a, generate_partition_instance(&p).unwrap());
        assert_ne!(a, generate_partition_instance(&PartitionDatasetParams { seed: 10, ..p }).unwrap());
        let g = GeometricDatasetParams::new(0.05, 1);
        assert_eq!(generate_geometric_instance(&g).unwrap(), generate_geometric_instance(&g).unwrap());
    }

    #[test]
    fn invalid_params() {
        let p = PartitionDatasetParams { n: 1, alpha: 1.5, beta: 0.5, seed: 0 };
        assert!(generate_partition_instance(&p).is_err());
        assert!(generate_partition_instance(&PartitionDatasetParams { n: 0, alpha: 0.5, ..p }).is_err());
        assert!(generate_points(&GeometricDatasetParams::new(0.0, 0)).is_err());
    }

    #[test]
    fn layout_is_unit_equilateral_and_separated() {
        let tris = default_layout();
        let d = |p: (f64, f64), q: (f64, f64)| (p.0 - q.0).hypot(p.1 - q.1);
        for t in &tris {
            let v = t.vertices();
            for (a, b) in [(0, 1), (1, 2), (0, 2)] {
                assert!((d(v[a], v[b]) - 1.0).abs() < 1e-12);
            }
        }
        for (i, s) in tris.iter().enumerate() {
            for t in &tris[i + 1..] {
                for a in s.vertices() {
                    for b in t.vertices() {
                        assert!(d(a, b) > 0.4);
                    }
                }
                assert!(separated(&s.vertices(), &t.vertices()));
            }
        }
    }

    /// Separating axis test on the edge normals of both triangles.
    fn separated(p: &[(f64, f64); 3], q: &[(f64, f64); 3]) -> bool {
        let proj = |pts: &[(f64, f64); 3], n: (f64, f64)| {
            let v: Vec<f64> = pts.iter().map(|a| a.0 * n.0 + a.1 * n.1).collect();
            (v.iter().copied().fold(f64::INFINITY, f64::min), v.iter().copied().fold(f64::NEG_INFINITY, f64::max))
        };
        [p, q].iter().any(|tri| {
            (0..3).any(|k| {
                let (a, b) = (tri[k], tri[(k + 1) % 3]);
                let n = (b.1 - a.1, a.0 - b.0);
                let ((lo1, hi1), (lo2, hi2)) = (proj(p, n), proj(q, n));
                hi1 < lo2 || hi2 < lo1
            })
        })
    }

    #[test]
    fn cost_rules() {
        let s = 0.01;
        let r = 1.0 / 3f64.sqrt();
        let tri = Triangle { center: (0.0, 0.0), circumradius: r, angle: 0.3 }.vertices();
        assert!((geometric_triple_cost(tri[0], tri[1], tri[2], s) + 1.0).abs() < 1e-9);
        let o = (0.0, 0.0);
        assert_eq!(geometric_triple_cost(o, o, o, s), -1.0);
        assert_eq!(geometric_triple_cost(o, (0.02, 0.0), (0.0, 0.02), s), -1.0 + 0.02f64.hypot(0.02) / 0.04);
        assert_eq!(geometric_triple_cost(o, (0.01, 0.0), (1.0, 0.0), s), 0.0);
        // Collinear, far apart: δ = 4π/3, the largest possible value.
        let far = geometric_triple_cost(o, (1.0, 0.0), (2.0, 0.0), s);
        assert!((far - 1.0).abs() < 1e-12);
    }

    #[test]
    fn points_and_csv() {
        let g = GeometricDatasetParams::new(0.05, 1);
        let (c, pts) = generate_geometric_instance(&g).unwrap();
        assert_eq!(pts.len(), 45);
        assert_eq!(c.n(), 45);
        assert!(c.pair_costs().iter().all(|&v| v == 0.0));
        assert_eq!(geometric_ground_truth(&pts).len(), 3);
        let mut buf = Vec::new();
        write_points_csv(&pts, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("x,y,vertex_id\n"));
        assert_eq!(text.lines().count(), 46);
    }
}
