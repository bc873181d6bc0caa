//! Weighted geometric-median solvers in R^n.
//!
//! A *hub* of a weighted site collection is a point minimizing the weighted
//! sum of Euclidean distances to the sites. For non-collinear sites the hub
//! is unique and lies in the convex hull; collinear collections reduce to
//! the weighted 1-D median, which may be a whole interval.
//!
//! The general solver is the classic reweighted-average fixed-point
//! iteration; three- and four-site instances additionally have closed-form
//! solvers, and [`monte_carlo_region_hub`] estimates hubs of planar regions
//! by sampling.

use crate::error::{Error, Result};
use crate::geometry::EuclideanPoint;
use crate::plane;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A location with a nonnegative weight (population, demand, ...).
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedSite {
    pub location: EuclideanPoint,
    pub weight: f64,
}

impl WeightedSite {
    pub fn new(location: EuclideanPoint, weight: f64) -> Result<Self> {
        if !weight.is_finite() || weight < 0.0 {
            return Err(Error::InvalidWeight(format!(
                "weight {weight} must be finite and nonnegative"
            )));
        }
        Ok(Self { location, weight })
    }

    pub fn unit(location: EuclideanPoint) -> Self {
        Self {
            location,
            weight: 1.0,
        }
    }
}

/// How a solver terminated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HubStatus {
    /// Stationary point with (sub)gradient below tolerance, away from sites.
    ConvergedInterior,
    /// The hub coincides with one of the input sites.
    ConvergedAtSite,
    /// Best node of an exhaustive grid search.
    GridMinimum,
}

impl HubStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            HubStatus::ConvergedInterior => "converged-interior",
            HubStatus::ConvergedAtSite => "converged-at-site",
            HubStatus::GridMinimum => "grid-minimum",
        }
    }
}

/// Solver output, generic over the location type (Euclidean point or
/// geographic coordinate).
#[derive(Debug, Clone)]
pub struct HubSolution<L> {
    pub location: L,
    /// Weighted total distance at `location` (mean distance for grid
    /// solvers, which normalize by total weight).
    pub objective: f64,
    pub status: HubStatus,
    pub iterations: usize,
    /// Gradient norm at the solution; absent where the objective is not
    /// differentiable (at a site) or was never differentiated (grid search).
    pub gradient_norm: Option<f64>,
}

pub type EuclideanHubSolution = HubSolution<EuclideanPoint>;

#[derive(Debug, Clone, Copy)]
pub struct SolverOptions {
    /// Relative gradient threshold: converged when the gradient norm drops
    /// below `tolerance` times the total weight.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Singular-value ratio below which the sites count as collinear.
    pub collinearity_tolerance: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            tolerance: 1e-10,
            max_iterations: 10_000,
            collinearity_tolerance: 1e-12,
        }
    }
}

impl SolverOptions {
    fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0) || !self.tolerance.is_finite() {
            return Err(Error::InvalidOptions("tolerance must be positive".into()));
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidOptions("max_iterations must be >= 1".into()));
        }
        if !(self.collinearity_tolerance > 0.0) || !self.collinearity_tolerance.is_finite() {
            return Err(Error::InvalidOptions(
                "collinearity_tolerance must be positive".into(),
            ));
        }
        Ok(())
    }
}

fn check_dims(sites: &[WeightedSite], dim: usize) -> Result<()> {
    for s in sites {
        if s.location.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: s.location.dim(),
            });
        }
        if !s.weight.is_finite() || s.weight < 0.0 {
            return Err(Error::InvalidWeight(format!(
                "weight {} must be finite and nonnegative",
                s.weight
            )));
        }
    }
    Ok(())
}

/// Weighted total distance sum_i w_i ||x - x_i||.
pub fn total_distance(sites: &[WeightedSite], x: &EuclideanPoint) -> Result<f64> {
    check_dims(sites, x.dim())?;
    Ok(sites
        .iter()
        .map(|s| s.weight * s.location.distance(x))
        .sum())
}

/// Gradient sum_i w_i (x - x_i)/||x - x_i|| of the total-distance objective.
///
/// Undefined where `x` coincides with a positive-weight site; callers should
/// use [`vertex_optimality`] there. Zero-weight sites are inert.
pub fn distance_gradient(sites: &[WeightedSite], x: &EuclideanPoint) -> Result<EuclideanPoint> {
    check_dims(sites, x.dim())?;
    let mut g = vec![0.0; x.dim()];
    for s in sites {
        if s.weight == 0.0 {
            continue;
        }
        let d = s.location.distance(x);
        if d == 0.0 {
            return Err(Error::GradientAtSite);
        }
        for (gk, (xk, sk)) in g.iter_mut().zip(x.coords().iter().zip(s.location.coords())) {
            *gk += s.weight * (xk - sk) / d;
        }
    }
    EuclideanPoint::new(g)
}

/// Merge exactly-coincident sites (weights summed) and drop zero-weight
/// entries. Result is sorted lexicographically by coordinates.
fn merge_sites(sites: &[WeightedSite]) -> Vec<WeightedSite> {
    let mut idx: Vec<usize> = (0..sites.len()).collect();
    idx.sort_by(|&a, &b| {
        sites[a]
            .location
            .coords()
            .partial_cmp(sites[b].location.coords())
            .expect("finite coordinates")
    });
    let mut merged: Vec<WeightedSite> = Vec::new();
    for &i in &idx {
        match merged.last_mut() {
            Some(last) if last.location == sites[i].location => last.weight += sites[i].weight,
            _ => merged.push(sites[i].clone()),
        }
    }
    merged.retain(|s| s.weight > 0.0);
    merged
}

/// Subgradient optimality test for site `index`: the site is a global hub
/// iff the pull of all other sites does not exceed its own weight,
/// ||sum_{j != i} w_j (x_i - x_j)/||x_i - x_j|| || <= w_i.
///
/// Coincident sites are merged (weights summed) before testing.
pub fn vertex_optimality(sites: &[WeightedSite], index: usize) -> Result<bool> {
    if index >= sites.len() {
        return Err(Error::SiteIndexOutOfRange {
            index,
            len: sites.len(),
        });
    }
    let dim = sites[0].location.dim();
    check_dims(sites, dim)?;
    let target = &sites[index].location;
    let target_weight: f64 = sites
        .iter()
        .filter(|s| &s.location == target)
        .map(|s| s.weight)
        .sum();
    let (rnorm, _) = site_residual(&merge_sites(sites), target);
    Ok(rnorm <= target_weight)
}

/// Norm and direction of sum_j w_j (p - x_j)/||p - x_j|| over sites not at `p`.
fn site_residual(merged: &[WeightedSite], p: &EuclideanPoint) -> (f64, Vec<f64>) {
    let mut r = vec![0.0; p.dim()];
    for s in merged {
        if &s.location == p {
            continue;
        }
        let d = s.location.distance(p);
        for (rk, (pk, sk)) in r.iter_mut().zip(p.coords().iter().zip(s.location.coords())) {
            *rk += s.weight * (pk - sk) / d;
        }
    }
    let n = r.iter().map(|v| v * v).sum::<f64>().sqrt();
    (n, r)
}

/// Closed interval of weighted medians of `values`: every point of the
/// interval minimizes sum_i w_i |x - v_i|. Zero-weight values are ignored.
pub fn solve_hub_1d(values: &[(f64, f64)]) -> Result<(f64, f64)> {
    if values.is_empty() {
        return Err(Error::EmptySites);
    }
    for &(v, w) in values {
        if !v.is_finite() {
            return Err(Error::InvalidPoint(format!("value {v} is not finite")));
        }
        if !w.is_finite() || w < 0.0 {
            return Err(Error::InvalidWeight(format!(
                "weight {w} must be finite and nonnegative"
            )));
        }
    }
    let mut vw: Vec<(f64, f64)> = values.iter().copied().filter(|&(_, w)| w > 0.0).collect();
    if vw.is_empty() {
        return Err(Error::ZeroTotalWeight);
    }
    vw.sort_by(|a, b| a.0.total_cmp(&b.0));
    // merge duplicate values
    let mut grouped: Vec<(f64, f64)> = Vec::with_capacity(vw.len());
    for (v, w) in vw {
        match grouped.last_mut() {
            Some(last) if last.0 == v => last.1 += w,
            _ => grouped.push((v, w)),
        }
    }
    let total: f64 = grouped.iter().map(|&(_, w)| w).sum();
    let half = 0.5 * total;

    let mut cum = 0.0;
    let mut lo = grouped[grouped.len() - 1].0;
    for &(v, w) in &grouped {
        cum += w;
        if cum >= half {
            lo = v;
            break;
        }
    }
    let mut cum_r = 0.0;
    let mut hi = grouped[0].0;
    for &(v, w) in grouped.iter().rev() {
        cum_r += w;
        if cum_r >= half {
            hi = v;
            break;
        }
    }
    debug_assert!(lo <= hi);
    Ok((lo, hi))
}

/// Weighted geometric-median solver: fixed-point reweighted averaging from
/// the weighted centroid, with the subgradient test at sites. Collinear
/// collections are reduced to the weighted 1-D median along their common
/// line (midpoint of the median interval).
pub fn solve_hub_weiszfeld(
    sites: &[WeightedSite],
    opts: &SolverOptions,
) -> Result<EuclideanHubSolution> {
    opts.validate()?;
    if sites.is_empty() {
        return Err(Error::EmptySites);
    }
    let dim = sites[0].location.dim();
    check_dims(sites, dim)?;
    let merged = merge_sites(sites);
    if merged.is_empty() {
        return Err(Error::ZeroTotalWeight);
    }
    if merged.len() == 1 {
        let location = merged[0].location.clone();
        let objective = total_distance(sites, &location)?;
        return Ok(HubSolution {
            location,
            objective,
            status: HubStatus::ConvergedAtSite,
            iterations: 0,
            gradient_norm: None,
        });
    }

    if let Some(axis) = collinear_axis(&merged, opts.collinearity_tolerance) {
        return solve_collinear(sites, &merged, &axis);
    }
    weiszfeld_iterate(sites, &merged, opts)
}

/// Line through the merged sites, if they are collinear: returns the mean
/// point and unit direction. Uses the singular-value ratio of the centered
/// site matrix.
fn collinear_axis(merged: &[WeightedSite], tol: f64) -> Option<(Vec<f64>, Vec<f64>)> {
    let k = merged.len();
    let n = merged[0].location.dim();
    let mean: Vec<f64> = (0..n)
        .map(|j| merged.iter().map(|s| s.location[j]).sum::<f64>() / k as f64)
        .collect();
    if n == 1 {
        return Some((mean, vec![1.0]));
    }
    if k == 2 {
        let d: Vec<f64> = (0..n)
            .map(|j| merged[1].location[j] - merged[0].location[j])
            .collect();
        let norm = d.iter().map(|v| v * v).sum::<f64>().sqrt();
        return Some((mean, d.into_iter().map(|v| v / norm).collect()));
    }
    let centered = nalgebra::DMatrix::from_fn(k, n, |i, j| merged[i].location[j] - mean[j]);
    let svd = centered.svd(false, true);
    let sv = &svd.singular_values;
    if sv[1] > tol * sv[0] {
        return None;
    }
    let vt = svd.v_t.expect("requested right singular vectors");
    Some((mean, vt.row(0).iter().copied().collect()))
}

fn solve_collinear(
    sites: &[WeightedSite],
    merged: &[WeightedSite],
    (mean, dir): &(Vec<f64>, Vec<f64>),
) -> Result<EuclideanHubSolution> {
    let project = |p: &EuclideanPoint| -> f64 {
        p.coords()
            .iter()
            .zip(mean)
            .zip(dir)
            .map(|((x, m), d)| (x - m) * d)
            .sum()
    };
    let line_values: Vec<(f64, f64)> = merged.iter().map(|s| (project(&s.location), s.weight)).collect();
    let (lo, hi) = solve_hub_1d(&line_values)?;
    let t = 0.5 * (lo + hi);

    // Median at a site: return the site coordinates exactly.
    if let Some(i) = line_values.iter().position(|&(v, _)| v == t) {
        let location = merged[i].location.clone();
        let objective = total_distance(sites, &location)?;
        return Ok(HubSolution {
            location,
            objective,
            status: HubStatus::ConvergedAtSite,
            iterations: 0,
            gradient_norm: None,
        });
    }
    let coords: Vec<f64> = mean.iter().zip(dir).map(|(m, d)| m + t * d).collect();
    let location = EuclideanPoint::new(coords)?;
    let objective = total_distance(sites, &location)?;
    let gradient_norm = distance_gradient(merged, &location).map(|g| g.norm()).ok();
    Ok(HubSolution {
        location,
        objective,
        status: HubStatus::ConvergedInterior,
        iterations: 0,
        gradient_norm,
    })
}

fn bbox_diagonal(merged: &[WeightedSite]) -> f64 {
    let n = merged[0].location.dim();
    (0..n)
        .map(|j| {
            let lo = merged.iter().map(|s| s.location[j]).fold(f64::INFINITY, f64::min);
            let hi = merged
                .iter()
                .map(|s| s.location[j])
                .fold(f64::NEG_INFINITY, f64::max);
            (hi - lo) * (hi - lo)
        })
        .sum::<f64>()
        .sqrt()
}

fn weiszfeld_iterate(
    sites: &[WeightedSite],
    merged: &[WeightedSite],
    opts: &SolverOptions,
) -> Result<EuclideanHubSolution> {
    let n = merged[0].location.dim();
    let total_w: f64 = merged.iter().map(|s| s.weight).sum();
    let scale = bbox_diagonal(merged);
    let at_eps = 1e-13 * scale;
    let displacement = opts.tolerance.max(1e-12) * scale;

    // weighted centroid start: inside the hull and cheap
    let mut x: Vec<f64> = (0..n)
        .map(|j| merged.iter().map(|s| s.weight * s.location[j]).sum::<f64>() / total_w)
        .collect();

    let mut iterations = 0;
    while iterations <= opts.max_iterations {
        let xp = EuclideanPoint::new(x.clone())?;

        if let Some(i) = merged
            .iter()
            .position(|s| s.location.distance(&xp) <= at_eps)
        {
            let (rnorm, r) = site_residual(merged, &merged[i].location);
            if rnorm <= merged[i].weight {
                let location = merged[i].location.clone();
                let objective = total_distance(sites, &location)?;
                return Ok(HubSolution {
                    location,
                    objective,
                    status: HubStatus::ConvergedAtSite,
                    iterations,
                    gradient_norm: None,
                });
            }
            // Not optimal: restart displaced along the descent direction.
            x = merged[i]
                .location
                .coords()
                .iter()
                .zip(&r)
                .map(|(c, rk)| c - displacement * rk / rnorm)
                .collect();
            iterations += 1;
            continue;
        }

        let mut grad = vec![0.0; n];
        let mut num = vec![0.0; n];
        let mut den = 0.0;
        for s in merged {
            let d = s.location.distance(&xp);
            let inv = s.weight / d;
            for j in 0..n {
                grad[j] += inv * (x[j] - s.location[j]);
                num[j] += inv * s.location[j];
            }
            den += inv;
        }
        let gnorm = grad.iter().map(|g| g * g).sum::<f64>().sqrt();
        if gnorm <= opts.tolerance * total_w {
            let objective = total_distance(sites, &xp)?;
            return Ok(HubSolution {
                location: xp,
                objective,
                status: HubStatus::ConvergedInterior,
                iterations,
                gradient_norm: Some(gnorm),
            });
        }

        let next: Vec<f64> = num.iter().map(|v| v / den).collect();
        if next == x {
            break; // fixed point at machine precision but gradient still above tolerance
        }
        x = next;
        iterations += 1;
    }

    let location = EuclideanPoint::new(x)?;
    let objective = total_distance(sites, &location)?;
    let gradient_norm = distance_gradient(merged, &location).map(|g| g.norm()).ok();
    Err(Error::DidNotConverge {
        iterations,
        best: Box::new(HubSolution {
            location,
            objective,
            status: HubStatus::ConvergedInterior,
            iterations,
            gradient_norm,
        }),
    })
}

fn require_dim2(points: &[&EuclideanPoint]) -> Result<()> {
    for p in points {
        if p.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: p.dim(),
            });
        }
    }
    Ok(())
}

/// Hub of three unit-weight planar points.
///
/// If every angle of the triangle is below 2π/3 the hub is the interior
/// point seeing all vertices under equal 2π/3 angles; otherwise it is the
/// wide-angle vertex. Collinear triples resolve to the middle point.
pub fn fermat_point_triangle(
    a: &EuclideanPoint,
    b: &EuclideanPoint,
    c: &EuclideanPoint,
) -> Result<EuclideanHubSolution> {
    require_dim2(&[a, b, c])?;
    if a == b || b == c || a == c {
        return Err(Error::DegenerateInput(
            "triangle vertices must be pairwise distinct".into(),
        ));
    }
    let pts = [a, b, c];
    let sites: Vec<WeightedSite> = pts.iter().map(|&p| WeightedSite::unit(p.clone())).collect();

    // cos of the angle at each vertex; a collinear middle point has angle pi
    let mut cosines = [0.0_f64; 3];
    for i in 0..3 {
        let p = pts[i];
        let q = pts[(i + 1) % 3];
        let r = pts[(i + 2) % 3];
        let u = [q[0] - p[0], q[1] - p[1]];
        let v = [r[0] - p[0], r[1] - p[1]];
        let dot = u[0] * v[0] + u[1] * v[1];
        let nu = (u[0] * u[0] + u[1] * u[1]).sqrt();
        let nv = (v[0] * v[0] + v[1] * v[1]).sqrt();
        cosines[i] = dot / (nu * nv);
    }
    if let Some(i) = cosines.iter().position(|&cs| cs <= -0.5) {
        let location = pts[i].clone();
        let objective = total_distance(&sites, &location)?;
        return Ok(HubSolution {
            location,
            objective,
            status: HubStatus::ConvergedAtSite,
            iterations: 0,
            gradient_norm: None,
        });
    }

    // All angles < 2pi/3: isogonic-point barycentric weights
    // side_i / sin(angle_i + pi/3), side_i opposite vertex i.
    let third = std::f64::consts::FRAC_PI_3;
    let mut bary = [0.0_f64; 3];
    for i in 0..3 {
        let q = pts[(i + 1) % 3];
        let r = pts[(i + 2) % 3];
        let side = ((q[0] - r[0]).powi(2) + (q[1] - r[1]).powi(2)).sqrt();
        let angle = cosines[i].clamp(-1.0, 1.0).acos();
        bary[i] = side / (angle + third).sin();
    }
    let wsum: f64 = bary.iter().sum();
    let location = EuclideanPoint::xy(
        (0..3).map(|i| bary[i] * pts[i][0]).sum::<f64>() / wsum,
        (0..3).map(|i| bary[i] * pts[i][1]).sum::<f64>() / wsum,
    );
    let objective = total_distance(&sites, &location)?;
    let gradient_norm = distance_gradient(&sites, &location).map(|g| g.norm()).ok();
    Ok(HubSolution {
        location,
        objective,
        status: HubStatus::ConvergedInterior,
        iterations: 0,
        gradient_norm,
    })
}

/// Hub of four unit-weight planar points: the diagonal intersection when
/// the convex hull is a quadrilateral, else the point inside (or on the
/// boundary of) the hull triangle. Collinear or duplicated inputs fall back
/// to the general solver.
pub fn hub_of_four(
    a: &EuclideanPoint,
    b: &EuclideanPoint,
    c: &EuclideanPoint,
    d: &EuclideanPoint,
) -> Result<EuclideanHubSolution> {
    require_dim2(&[a, b, c, d])?;
    let pts = [a, b, c, d];
    let sites: Vec<WeightedSite> = pts.iter().map(|&p| WeightedSite::unit(p.clone())).collect();

    let distinct = (0..4).all(|i| (i + 1..4).all(|j| pts[i] != pts[j]));
    if !distinct {
        return solve_hub_weiszfeld(&sites, &SolverOptions::default());
    }

    let arr: Vec<[f64; 2]> = pts.iter().map(|p| [p[0], p[1]]).collect();
    let hull = plane::convex_hull(&arr);
    match hull.len() {
        4 => {
            let p = plane::segment_intersection(hull[0], hull[2], hull[1], hull[3])
                .ok_or_else(|| Error::DegenerateInput("diagonals do not intersect".into()))?;
            let location = EuclideanPoint::xy(p[0], p[1]);
            let objective = total_distance(&sites, &location)?;
            let gradient_norm = distance_gradient(&sites, &location).map(|g| g.norm()).ok();
            Ok(HubSolution {
                location,
                objective,
                status: HubStatus::ConvergedInterior,
                iterations: 0,
                gradient_norm,
            })
        }
        3 => {
            let inner = pts
                .iter()
                .find(|p| !hull.iter().any(|h| h[0] == p[0] && h[1] == p[1]))
                .expect("four distinct points with a triangular hull have an inner point");
            let location = (*inner).clone();
            let objective = total_distance(&sites, &location)?;
            Ok(HubSolution {
                location,
                objective,
                status: HubStatus::ConvergedAtSite,
                iterations: 0,
                gradient_norm: None,
            })
        }
        _ => solve_hub_weiszfeld(&sites, &SolverOptions::default()),
    }
}

/// Planar region to sample uniformly.
#[derive(Debug, Clone)]
pub enum Region {
    /// Axis-aligned rectangle; zero width or height is allowed (a segment).
    Rectangle { min: [f64; 2], max: [f64; 2] },
    /// Rhombus with axis-aligned diagonals: vertices center ± (a, 0) and
    /// center ± (0, b).
    Rhombus { center: [f64; 2], semi_diag: [f64; 2] },
    /// Axis-aligned ellipse with semi-axes (a, b).
    Ellipse { center: [f64; 2], semi_axes: [f64; 2] },
    /// Simple polygon with positive area.
    Polygon { vertices: Vec<[f64; 2]> },
}

impl Region {
    fn validate(&self) -> Result<()> {
        let finite2 = |p: &[f64; 2]| p[0].is_finite() && p[1].is_finite();
        match self {
            Region::Rectangle { min, max } => {
                if !finite2(min) || !finite2(max) || min[0] > max[0] || min[1] > max[1] {
                    return Err(Error::InvalidRegion(
                        "rectangle needs finite min <= max".into(),
                    ));
                }
            }
            Region::Rhombus { center, semi_diag } | Region::Ellipse { center, semi_axes: semi_diag } => {
                if !finite2(center) || !finite2(semi_diag) || semi_diag[0] <= 0.0 || semi_diag[1] <= 0.0 {
                    return Err(Error::InvalidRegion(
                        "semi-axes must be positive and finite".into(),
                    ));
                }
            }
            Region::Polygon { vertices } => {
                if vertices.len() < 3 || vertices.iter().any(|v| !finite2(v)) {
                    return Err(Error::InvalidRegion(
                        "polygon needs at least 3 finite vertices".into(),
                    ));
                }
                if polygon_area(vertices) <= 0.0 {
                    return Err(Error::InvalidRegion("polygon area must be positive".into()));
                }
            }
        }
        Ok(())
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Result<[f64; 2]> {
        match self {
            Region::Rectangle { min, max } => {
                let u: f64 = rng.random();
                let v: f64 = rng.random();
                Ok([min[0] + u * (max[0] - min[0]), min[1] + v * (max[1] - min[1])])
            }
            Region::Rhombus { center, semi_diag } => {
                // linear image of the unit square onto the diamond |s|+|t| <= 1
                let u: f64 = rng.random();
                let v: f64 = rng.random();
                let s = u + v - 1.0;
                let t = u - v;
                Ok([center[0] + semi_diag[0] * s, center[1] + semi_diag[1] * t])
            }
            Region::Ellipse { center, semi_axes } => {
                let theta = 2.0 * std::f64::consts::PI * rng.random::<f64>();
                let r = rng.random::<f64>().sqrt();
                Ok([
                    center[0] + semi_axes[0] * r * theta.cos(),
                    center[1] + semi_axes[1] * r * theta.sin(),
                ])
            }
            Region::Polygon { vertices } => {
                let xs = vertices.iter().map(|v| v[0]);
                let ys = vertices.iter().map(|v| v[1]);
                let lo = [xs.clone().fold(f64::INFINITY, f64::min), ys.clone().fold(f64::INFINITY, f64::min)];
                let hi = [xs.fold(f64::NEG_INFINITY, f64::max), ys.fold(f64::NEG_INFINITY, f64::max)];
                for _ in 0..100_000 {
                    let p = [
                        lo[0] + rng.random::<f64>() * (hi[0] - lo[0]),
                        lo[1] + rng.random::<f64>() * (hi[1] - lo[1]),
                    ];
                    if plane::point_in_simple_polygon(p, vertices) {
                        return Ok(p);
                    }
                }
                Err(Error::InvalidRegion(
                    "polygon rejection sampling failed; region too thin".into(),
                ))
            }
        }
    }
}

fn polygon_area(vertices: &[[f64; 2]]) -> f64 {
    let n = vertices.len();
    let mut twice = 0.0;
    for i in 0..n {
        let [x1, y1] = vertices[i];
        let [x2, y2] = vertices[(i + 1) % n];
        twice += x1 * y2 - x2 * y1;
    }
    0.5 * twice.abs()
}

/// Hub of `n` points drawn i.i.d. uniformly from `region`.
///
/// Sampling uses ChaCha8 keyed by `seed` (`seed_from_u64`), drawing a fixed
/// number of `f64`s per point, so runs are reproducible bit-for-bit for a
/// given seed.
pub fn monte_carlo_region_hub(
    region: &Region,
    n: usize,
    seed: u64,
    opts: &SolverOptions,
) -> Result<EuclideanHubSolution> {
    region.validate()?;
    if n == 0 {
        return Err(Error::InvalidRegion("sample count must be >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sites = Vec::with_capacity(n);
    for _ in 0..n {
        let p = region.sample(&mut rng)?;
        sites.push(WeightedSite::unit(EuclideanPoint::xy(p[0], p[1])));
    }
    solve_hub_weiszfeld(&sites, opts)
}
