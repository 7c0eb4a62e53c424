//! Two-dimensional secrecy rate regions: downward-comprehensive convex hulls
//! of rate-pair clouds, their Pareto frontiers, and comparisons between
//! regions.
//!
//! Every region is closed downward (a rate pair dominated componentwise by an
//! achievable pair is achievable) and convexified (time sharing), so a hull is
//! always taken over the input points together with their axis projections and
//! the origin. The raw pre-hull cloud is retained for diagnostics.

use serde::{Deserialize, Serialize};

use crate::tol::{CROSS_TOL, REGION_TOL};
use crate::{Error, Result};

/// A pair of secrecy rates in bits per channel use. Construction clamps
/// negative components to zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatePair {
    pub r1: f64,
    pub r2: f64,
}

impl RatePair {
    pub fn new(r1: f64, r2: f64) -> Self {
        RatePair {
            r1: r1.max(0.0),
            r2: r2.max(0.0),
        }
    }
}

/// Cross product of `(b−a) × (c−a)`; positive when `a→b→c` turns left.
fn cross(a: RatePair, b: RatePair, c: RatePair) -> f64 {
    (b.r1 - a.r1) * (c.r2 - a.r2) - (b.r2 - a.r2) * (c.r1 - a.r1)
}

/// A downward-comprehensive convex rate region.
///
/// `points` is the raw input cloud; `hull` is the counterclockwise vertex
/// list (starting at the origin) of the convex hull of the points, their
/// axis projections, and the origin, with no three vertices collinear within
/// the cross-product tolerance; `frontier` is the Pareto-maximal subset of
/// the hull vertices ordered by increasing `r1`.
#[derive(Debug, Clone, PartialEq)]
pub struct RateRegion {
    points: Vec<RatePair>,
    hull: Vec<RatePair>,
    frontier: Vec<RatePair>,
    /// Upper boundary vertices (max `r2` per hull-vertex `r1`), increasing in
    /// `r1`; piecewise-linear interpolation through these is the region's
    /// upper envelope.
    upper: Vec<RatePair>,
}

/// Convex hull of `points ∪ axis projections ∪ origin` as a downward
/// comprehensive region. Errors on an empty input.
pub fn convex_hull(points: &[RatePair]) -> Result<RateRegion> {
    RateRegion::from_points(points)
}

impl RateRegion {
    /// See [`convex_hull`].
    pub fn from_points(points: &[RatePair]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::validation("convex_hull of empty point set"));
        }
        for p in points {
            if !p.r1.is_finite() || !p.r2.is_finite() {
                return Err(Error::validation(format!(
                    "non-finite rate pair ({}, {})",
                    p.r1, p.r2
                )));
            }
        }

        // Pareto prefilter: a dominated point lies inside the comprehensive
        // rectangle of its dominator, and its axis projections are dominated
        // by the global anchors, so dropping it never changes the hull. This
        // keeps sweep clouds of millions of points cheap to hull.
        let mut sorted: Vec<RatePair> = points.to_vec();
        sorted.sort_by(|a, b| {
            b.r1.partial_cmp(&a.r1)
                .unwrap()
                .then(b.r2.partial_cmp(&a.r2).unwrap())
        });
        let mut staircase: Vec<RatePair> = Vec::new();
        let mut best_r2 = f64::NEG_INFINITY;
        for p in sorted {
            if p.r2 > best_r2 {
                staircase.push(p);
                best_r2 = p.r2;
            }
        }

        let max_r1 = staircase.iter().map(|p| p.r1).fold(0.0, f64::max);
        let max_r2 = staircase.iter().map(|p| p.r2).fold(0.0, f64::max);
        let mut cand = staircase;
        cand.push(RatePair::new(0.0, 0.0));
        cand.push(RatePair::new(max_r1, 0.0));
        cand.push(RatePair::new(0.0, max_r2));

        cand.sort_by(|a, b| {
            a.r1.partial_cmp(&b.r1)
                .unwrap()
                .then(a.r2.partial_cmp(&b.r2).unwrap())
        });
        cand.dedup_by(|a, b| a.r1 == b.r1 && a.r2 == b.r2);

        let hull = monotone_chain(&cand);

        let mut frontier: Vec<RatePair> = hull
            .iter()
            .copied()
            .filter(|v| {
                !hull.iter().any(|w| {
                    (w.r1 > v.r1 && w.r2 >= v.r2) || (w.r1 >= v.r1 && w.r2 > v.r2)
                })
            })
            .collect();
        frontier.sort_by(|a, b| a.r1.partial_cmp(&b.r1).unwrap());

        // Upper envelope: for each distinct vertex abscissa keep the max
        // ordinate; the result is the hull's top chain, nonincreasing in r2.
        let mut upper: Vec<RatePair> = Vec::new();
        let mut by_x: Vec<RatePair> = hull.clone();
        by_x.sort_by(|a, b| {
            a.r1.partial_cmp(&b.r1)
                .unwrap()
                .then(b.r2.partial_cmp(&a.r2).unwrap())
        });
        for v in by_x {
            if upper.last().map_or(true, |u| v.r1 > u.r1) {
                upper.push(v);
            }
        }

        Ok(RateRegion {
            points: points.to_vec(),
            hull,
            frontier,
            upper,
        })
    }

    /// The raw input cloud, as given.
    pub fn points(&self) -> &[RatePair] {
        &self.points
    }

    /// Counterclockwise hull vertices starting at the origin.
    pub fn hull(&self) -> &[RatePair] {
        &self.hull
    }

    /// Pareto-maximal hull vertices, ordered by increasing `r1`.
    pub fn frontier(&self) -> &[RatePair] {
        &self.frontier
    }

    pub fn max_r1(&self) -> f64 {
        self.upper.last().map_or(0.0, |p| p.r1)
    }

    pub fn max_r2(&self) -> f64 {
        self.upper.first().map_or(0.0, |p| p.r2)
    }

    /// Value of the upper envelope at `x ∈ [0, max_r1]`.
    fn upper_at(&self, x: f64) -> f64 {
        let up = &self.upper;
        if up.len() == 1 {
            return up[0].r2;
        }
        if x <= up[0].r1 {
            return up[0].r2;
        }
        for w in up.windows(2) {
            let (a, b) = (w[0], w[1]);
            if x <= b.r1 {
                let t = (x - a.r1) / (b.r1 - a.r1);
                return a.r2 + t * (b.r2 - a.r2);
            }
        }
        up.last().unwrap().r2
    }

    /// Whether `p` lies in the region within `tol` (componentwise slack on
    /// the axes, vertical slack against the upper envelope).
    pub fn contains(&self, p: RatePair, tol: f64) -> bool {
        if p.r1 < -tol || p.r2 < -tol {
            return false;
        }
        if p.r1 > self.max_r1() + tol {
            return false;
        }
        let x = p.r1.clamp(0.0, self.max_r1());
        p.r2 <= self.upper_at(x) + tol
    }

    /// True iff every frontier vertex of `other` lies inside `self`
    /// (tolerance `1e-9`). When false, the second component is a frontier
    /// vertex of `other` outside `self`.
    pub fn dominates(&self, other: &RateRegion) -> (bool, Option<RatePair>) {
        for &v in &other.frontier {
            if !self.contains(v, REGION_TOL) {
                return (false, Some(v));
            }
        }
        (true, None)
    }

    /// Largest `r2` with `(r1, r2)` in the region, by linear interpolation
    /// along the upper envelope; monotone nonincreasing in `r1`. Errors when
    /// `r1` is negative or beyond the region's maximal `r1`.
    pub fn max_r2_at(&self, r1: f64) -> Result<f64> {
        if r1 < -REGION_TOL || r1 > self.max_r1() + REGION_TOL {
            return Err(Error::domain(format!(
                "r1 = {r1} outside region range [0, {}]",
                self.max_r1()
            )));
        }
        Ok(self.upper_at(r1.clamp(0.0, self.max_r1())))
    }
}

/// Monotone-chain hull over deduplicated points sorted by `(r1, r2)`.
/// Near-collinear middle vertices (cross product within `1e-12`) are popped,
/// so no three kept vertices are collinear. Output is counterclockwise
/// starting at the lexicographically smallest point.
fn monotone_chain(pts: &[RatePair]) -> Vec<RatePair> {
    let n = pts.len();
    if n <= 2 {
        return pts.to_vec();
    }
    let mut lower: Vec<RatePair> = Vec::with_capacity(n);
    for &p in pts {
        while lower.len() >= 2
            && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= CROSS_TOL
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<RatePair> = Vec::with_capacity(n);
    for &p in pts.iter().rev() {
        while upper.len() >= 2
            && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= CROSS_TOL
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Row category in the region CSV format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    Raw,
    Hull,
    Frontier,
}

impl PointKind {
    fn as_str(self) -> &'static str {
        match self {
            PointKind::Raw => "raw",
            PointKind::Hull => "hull",
            PointKind::Frontier => "frontier",
        }
    }
}

/// One parsed row of the region CSV format.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionCsvRow {
    pub scheme: String,
    pub r1: f64,
    pub r2: f64,
    pub kind: PointKind,
}

/// Rates are printed with 9 significant digits.
pub fn fmt_rate(x: f64) -> String {
    format!("{x:.8e}")
}

/// Serializes labeled regions as `scheme,r1,r2,kind` rows (kinds `raw`,
/// `hull`, `frontier`). Raw clouds larger than `raw_cap` are omitted to keep
/// sweep outputs tractable; hull and frontier rows are always written.
pub fn region_csv(sections: &[(&str, &RateRegion)], raw_cap: usize) -> String {
    let mut out = String::from("scheme,r1,r2,kind\n");
    for (name, region) in sections {
        if region.points().len() <= raw_cap {
            for p in region.points() {
                push_row(&mut out, name, *p, PointKind::Raw);
            }
        }
        for p in region.hull() {
            push_row(&mut out, name, *p, PointKind::Hull);
        }
        for p in region.frontier() {
            push_row(&mut out, name, *p, PointKind::Frontier);
        }
    }
    out
}

fn push_row(out: &mut String, scheme: &str, p: RatePair, kind: PointKind) {
    out.push_str(scheme);
    out.push(',');
    out.push_str(&fmt_rate(p.r1));
    out.push(',');
    out.push_str(&fmt_rate(p.r2));
    out.push(',');
    out.push_str(kind.as_str());
    out.push('\n');
}

/// Parses the region CSV format back into rows; the inverse of [`region_csv`].
pub fn parse_region_csv(s: &str) -> Result<Vec<RegionCsvRow>> {
    let mut lines = s.lines();
    match lines.next() {
        Some("scheme,r1,r2,kind") => {}
        other => {
            return Err(Error::validation(format!(
                "region CSV header missing or wrong: {other:?}"
            )))
        }
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(Error::validation(format!(
                "region CSV line {}: expected 4 fields, got {}",
                i + 2,
                fields.len()
            )));
        }
        let parse = |s: &str| -> Result<f64> {
            s.parse::<f64>()
                .map_err(|e| Error::validation(format!("region CSV line {}: {e}", i + 2)))
        };
        let kind = match fields[3] {
            "raw" => PointKind::Raw,
            "hull" => PointKind::Hull,
            "frontier" => PointKind::Frontier,
            other => {
                return Err(Error::validation(format!(
                    "region CSV line {}: unknown kind '{other}'",
                    i + 2
                )))
            }
        };
        rows.push(RegionCsvRow {
            scheme: fields[0].to_string(),
            r1: parse(fields[1])?,
            r2: parse(fields[2])?,
            kind,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(v: &[(f64, f64)]) -> Vec<RatePair> {
        v.iter().map(|&(a, b)| RatePair::new(a, b)).collect()
    }

    #[test]
    fn rate_pair_clamps_negatives() {
        let p = RatePair::new(-0.3, 1.0);
        assert_eq!(p.r1, 0.0);
        assert_eq!(p.r2, 1.0);
    }

    #[test]
    fn single_point_hull_is_comprehensive_rectangle() {
        let r = convex_hull(&pairs(&[(1.0, 1.0)])).unwrap();
        assert_eq!(
            r.hull(),
            pairs(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).as_slice()
        );
        assert_eq!(r.frontier(), pairs(&[(1.0, 1.0)]).as_slice());
    }

    #[test]
    fn two_corner_points_give_time_sharing_segment() {
        let r = convex_hull(&pairs(&[(1.0, 0.0), (0.0, 1.0)])).unwrap();
        assert_eq!(r.frontier(), pairs(&[(0.0, 1.0), (1.0, 0.0)]).as_slice());
        // Midpoint of the time-sharing line is on the boundary.
        assert!(r.contains(RatePair::new(0.5, 0.5), 1e-12));
        assert!(!r.contains(RatePair::new(0.5, 0.5 + 1e-6), 1e-9));
    }

    #[test]
    fn empty_input_errors() {
        assert!(convex_hull(&[]).is_err());
    }

    #[test]
    fn hull_orientation_is_counterclockwise() {
        let r = convex_hull(&pairs(&[(2.0, 1.0), (1.0, 2.0)])).unwrap();
        let h = r.hull();
        // Signed area of the polygon must be positive for CCW.
        let mut area2 = 0.0;
        for i in 0..h.len() {
            let a = h[i];
            let b = h[(i + 1) % h.len()];
            area2 += a.r1 * b.r2 - b.r1 * a.r2;
        }
        assert!(area2 > 0.0);
        assert_eq!(h[0], RatePair::new(0.0, 0.0));
    }

    #[test]
    fn no_three_hull_vertices_collinear() {
        // Points deliberately on a line r1 + r2 = 1.
        let r = convex_hull(&pairs(&[(1.0, 0.0), (0.5, 0.5), (0.25, 0.75), (0.0, 1.0)])).unwrap();
        let h = r.hull();
        for i in 0..h.len() {
            let a = h[i];
            let b = h[(i + 1) % h.len()];
            let c = h[(i + 2) % h.len()];
            assert!(cross(a, b, c).abs() > CROSS_TOL, "collinear triple on hull");
        }
        assert_eq!(h.len(), 3); // origin and the two segment endpoints
    }

    #[test]
    fn every_input_point_inside_hull() {
        let pts = pairs(&[(0.3, 0.9), (0.7, 0.4), (0.2, 0.2), (0.9, 0.1)]);
        let r = convex_hull(&pts).unwrap();
        for p in &pts {
            assert!(r.contains(*p, 1e-12), "{p:?} escaped its own hull");
        }
    }

    #[test]
    fn dominates_itself_and_half_square() {
        let unit = convex_hull(&pairs(&[(1.0, 1.0)])).unwrap();
        let half = convex_hull(&pairs(&[(0.5, 0.5)])).unwrap();
        assert_eq!(unit.dominates(&unit), (true, None));
        assert_eq!(unit.dominates(&half), (true, None));
        let (ok, witness) = half.dominates(&unit);
        assert!(!ok);
        assert_eq!(witness, Some(RatePair::new(1.0, 1.0)));
    }

    #[test]
    fn max_r2_at_rectangle_and_endpoints() {
        let r = convex_hull(&pairs(&[(2.0, 1.0)])).unwrap();
        assert_eq!(r.max_r2_at(0.0).unwrap(), 1.0);
        assert_eq!(r.max_r2_at(1.3).unwrap(), 1.0); // rectangle: constant
        assert_eq!(r.max_r2_at(2.0).unwrap(), 1.0);
        assert!(r.max_r2_at(2.5).is_err());
        assert!(r.max_r2_at(-0.1).is_err());

        let tri = convex_hull(&pairs(&[(1.0, 0.0), (0.0, 1.0)])).unwrap();
        assert!((tri.max_r2_at(0.25).unwrap() - 0.75).abs() < 1e-12);
        assert_eq!(tri.max_r2_at(1.0).unwrap(), 0.0);
    }

    #[test]
    fn hull_matches_brute_force_extreme_point_filter() {
        // 200 pseudo-random points from a fixed linear congruential stream,
        // so the test is deterministic without extra dependencies.
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let pts: Vec<RatePair> = (0..200)
            .map(|_| RatePair::new(next(), next()))
            .collect();
        let r = convex_hull(&pts).unwrap();

        // Independent oracle: augment exactly per the definition, drop
        // dominated points (they sit inside a dominator's comprehensive
        // rectangle), then keep points not inside any triangle or segment of
        // other candidates (Carathéodory in the plane).
        let mut aug: Vec<RatePair> = Vec::new();
        for p in &pts {
            aug.push(*p);
            aug.push(RatePair::new(p.r1, 0.0));
            aug.push(RatePair::new(0.0, p.r2));
        }
        aug.push(RatePair::new(0.0, 0.0));
        let undominated: Vec<RatePair> = aug
            .iter()
            .copied()
            .filter(|p| {
                !aug.iter().any(|q| {
                    (q.r1 > p.r1 && q.r2 >= p.r2) || (q.r1 >= p.r1 && q.r2 > p.r2)
                })
            })
            .collect();
        let max1 = pts.iter().map(|p| p.r1).fold(0.0, f64::max);
        let max2 = pts.iter().map(|p| p.r2).fold(0.0, f64::max);
        let mut cand = undominated;
        for anchor in [
            RatePair::new(0.0, 0.0),
            RatePair::new(max1, 0.0),
            RatePair::new(0.0, max2),
        ] {
            if !cand.contains(&anchor) {
                cand.push(anchor);
            }
        }
        let inside_triangle = |p: RatePair, a: RatePair, b: RatePair, c: RatePair| -> bool {
            let d1 = cross(a, b, p);
            let d2 = cross(b, c, p);
            let d3 = cross(c, a, p);
            let has_neg = d1 < -CROSS_TOL || d2 < -CROSS_TOL || d3 < -CROSS_TOL;
            let has_pos = d1 > CROSS_TOL || d2 > CROSS_TOL || d3 > CROSS_TOL;
            !(has_neg && has_pos)
        };
        let on_segment = |p: RatePair, a: RatePair, b: RatePair| -> bool {
            cross(a, b, p).abs() <= CROSS_TOL
                && p.r1 >= a.r1.min(b.r1) - 1e-12
                && p.r1 <= a.r1.max(b.r1) + 1e-12
                && p.r2 >= a.r2.min(b.r2) - 1e-12
                && p.r2 <= a.r2.max(b.r2) + 1e-12
        };
        let mut expected: Vec<RatePair> = Vec::new();
        for (i, &p) in cand.iter().enumerate() {
            let others: Vec<RatePair> = cand
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, q)| *q)
                .collect();
            let mut extreme = true;
            'outer: for x in 0..others.len() {
                for y in x + 1..others.len() {
                    if on_segment(p, others[x], others[y]) {
                        extreme = false;
                        break 'outer;
                    }
                    for z in y + 1..others.len() {
                        if inside_triangle(p, others[x], others[y], others[z]) {
                            extreme = false;
                            break 'outer;
                        }
                    }
                }
            }
            if extreme {
                expected.push(p);
            }
        }

        let mut got: Vec<RatePair> = r.hull().to_vec();
        let key = |p: &RatePair| (p.r1, p.r2);
        got.sort_by(|a, b| key(a).partial_cmp(&key(b)).unwrap());
        expected.sort_by(|a, b| key(a).partial_cmp(&key(b)).unwrap());
        assert_eq!(got.len(), expected.len(), "hull vertex count mismatch");
        for (g, e) in got.iter().zip(&expected) {
            assert!((g.r1 - e.r1).abs() < 1e-12 && (g.r2 - e.r2).abs() < 1e-12);
        }
    }

    #[test]
    fn csv_round_trip() {
        let r = convex_hull(&pairs(&[(1.0, 0.25), (0.5, 0.75)])).unwrap();
        let csv = region_csv(&[("demo", &r)], usize::MAX);
        let rows = parse_region_csv(&csv).unwrap();
        let frontier_rows: Vec<&RegionCsvRow> =
            rows.iter().filter(|x| x.kind == PointKind::Frontier).collect();
        assert_eq!(frontier_rows.len(), r.frontier().len());
        for (row, v) in frontier_rows.iter().zip(r.frontier()) {
            assert!((row.r1 - v.r1).abs() < 1e-8 && (row.r2 - v.r2).abs() < 1e-8);
            assert_eq!(row.scheme, "demo");
        }
        assert!(parse_region_csv("bogus\n1,2,3,raw").is_err());
    }

    #[test]
    fn raw_rows_capped_but_hull_always_written() {
        let pts = pairs(&[(1.0, 0.25), (0.5, 0.75), (0.2, 0.2)]);
        let r = convex_hull(&pts).unwrap();
        let csv = region_csv(&[("demo", &r)], 2);
        let rows = parse_region_csv(&csv).unwrap();
        assert!(rows.iter().all(|x| x.kind != PointKind::Raw));
        assert!(rows.iter().any(|x| x.kind == PointKind::Hull));
    }
}
