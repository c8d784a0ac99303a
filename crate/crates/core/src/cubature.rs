//! Adaptive cubature over axis-aligned boxes.
//!
//! Cells carry a tensor-product Gauss-Kronrod rule; the embedded Gauss rule
//! gives the per-cell error estimate `|K - G|`. The driver works on the whole
//! cell list at once:
//!
//! 1. pre-split the box so no cell is wider than `max_cell_width` (λ/4 by
//!    default) along any axis, which keeps `e^{2iq}` resolved;
//! 2. if a focus point (the emitter) lies closer than `near_field_distance`,
//!    grade the cells toward it by repeated octant splits until their width
//!    is comparable to the focus distance;
//! 3. bisect the worst cells along their longest axis until the summed error
//!    estimate meets `max(abs_tol, rel_tol |total|)`.
//!
//! Cells are evaluated in parallel but every sum is taken in cell-index
//! order, so results are bit-identical for any number of worker threads.
//!
//! [`integrate_interval`] is the one-dimensional counterpart used by the
//! slab and stationary-phase solvers, and [`mc_integrate`] is a seeded
//! Monte-Carlo oracle for cross-checks.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::sync::OnceLock;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::em::Position;
use crate::error::Error;

/// Axis-aligned integration box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Box3 {
    pub lo: Position,
    pub hi: Position,
}

impl Box3 {
    pub fn new(lo: Position, hi: Position) -> Result<Self, CubatureError> {
        let b = Box3 { lo, hi };
        let ok = lo.is_finite()
            && hi.is_finite()
            && (0..3).all(|i| b.lo_axis(i) < b.hi_axis(i));
        if ok {
            Ok(b)
        } else {
            Err(CubatureError::Spec(format!(
                "box needs lo < hi on every axis, got {lo:?} .. {hi:?}"
            )))
        }
    }

    pub fn unit() -> Self {
        Box3 {
            lo: Position::ORIGIN,
            hi: Position::new(1.0, 1.0, 1.0),
        }
    }

    #[inline]
    fn lo_axis(&self, i: usize) -> f64 {
        self.lo.to_array()[i]
    }

    #[inline]
    fn hi_axis(&self, i: usize) -> f64 {
        self.hi.to_array()[i]
    }

    #[inline]
    pub fn widths(&self) -> [f64; 3] {
        [
            self.hi.x - self.lo.x,
            self.hi.y - self.lo.y,
            self.hi.z - self.lo.z,
        ]
    }

    pub fn volume(&self) -> f64 {
        self.widths().iter().product()
    }

    pub fn center(&self) -> Position {
        (self.lo + self.hi) * 0.5
    }

    fn max_width(&self) -> f64 {
        self.widths().into_iter().fold(0.0, f64::max)
    }

    fn longest_axis(&self) -> usize {
        let w = self.widths();
        let mut best = 0;
        for i in 1..3 {
            if w[i] > w[best] {
                best = i;
            }
        }
        best
    }

    /// Euclidean distance from `p` to the closed box (zero inside).
    pub fn distance_to(&self, p: Position) -> f64 {
        let clamp = |v: f64, lo: f64, hi: f64| {
            if v < lo {
                lo - v
            } else if v > hi {
                v - hi
            } else {
                0.0
            }
        };
        let dx = clamp(p.x, self.lo.x, self.hi.x);
        let dy = clamp(p.y, self.lo.y, self.hi.y);
        let dz = clamp(p.z, self.lo.z, self.hi.z);
        (dx * dx + dy * dy + dz * dz).sqrt()
    }

    /// Splits the box in two along `axis` at its midpoint.
    pub fn bisect(&self, axis: usize) -> (Box3, Box3) {
        let mid = 0.5 * (self.lo_axis(axis) + self.hi_axis(axis));
        let mut left_hi = self.hi.to_array();
        let mut right_lo = self.lo.to_array();
        left_hi[axis] = mid;
        right_lo[axis] = mid;
        (
            Box3 {
                lo: self.lo,
                hi: Position::from_array(left_hi),
            },
            Box3 {
                lo: Position::from_array(right_lo),
                hi: self.hi,
            },
        )
    }

    /// Uniform `n[0] × n[1] × n[2]` grid of sub-boxes, x fastest.
    pub fn grid(&self, n: [usize; 3]) -> Vec<Box3> {
        let lo = self.lo.to_array();
        let w = self.widths();
        let edge = |axis: usize, i: usize| {
            if i == n[axis] {
                self.hi_axis(axis)
            } else {
                lo[axis] + w[axis] * (i as f64) / (n[axis] as f64)
            }
        };
        let mut cells = Vec::with_capacity(n[0] * n[1] * n[2]);
        for iz in 0..n[2] {
            for iy in 0..n[1] {
                for ix in 0..n[0] {
                    cells.push(Box3 {
                        lo: Position::new(edge(0, ix), edge(1, iy), edge(2, iz)),
                        hi: Position::new(edge(0, ix + 1), edge(1, iy + 1), edge(2, iz + 1)),
                    });
                }
            }
        }
        cells
    }
}

/// Settings for [`integrate_box`].
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Maximum number of adaptive bisections of a single starting cell.
    pub max_depth: u32,
    /// Number of Kronrod points per axis: 7, 15 or 21. The embedded Gauss
    /// rule has 3, 7 or 10 points respectively.
    pub base_order: u32,
    pub max_evaluations: u64,
    /// Largest starting cell edge, in transition wavelengths.
    pub max_cell_width: f64,
    /// Focus distance below which graded refinement toward the focus kicks in.
    pub near_field_distance: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            rel_tol: 1e-5,
            abs_tol: 1e-9,
            max_depth: 30,
            base_order: 7,
            max_evaluations: 400_000_000,
            max_cell_width: 0.25,
            near_field_distance: 0.1,
        }
    }
}

impl QuadratureSpec {
    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn validate(&self) -> Result<(), CubatureError> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(self.rel_tol) || !positive(self.abs_tol) {
            return Err(CubatureError::Spec(format!(
                "tolerances must be positive (rel {}, abs {})",
                self.rel_tol, self.abs_tol
            )));
        }
        if self.max_depth == 0 || self.max_evaluations == 0 {
            return Err(CubatureError::Spec(
                "max_depth and max_evaluations must be positive".into(),
            ));
        }
        if !positive(self.max_cell_width) || !positive(self.near_field_distance) {
            return Err(CubatureError::Spec(
                "max_cell_width and near_field_distance must be positive".into(),
            ));
        }
        rule(self.base_order)?;
        Ok(())
    }
}

/// Result of a deterministic quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: Complex64,
    pub error_estimate: f64,
    pub evaluations: u64,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CubatureError {
    #[error("invalid quadrature settings: {0}")]
    Spec(String),
    /// Budget or depth limit hit; carries the best estimate reached.
    #[error("quadrature did not converge: {0:?}")]
    NotConverged(Integral),
}

impl From<CubatureError> for Error {
    fn from(e: CubatureError) -> Self {
        match e {
            CubatureError::Spec(msg) => Error::Quadrature(msg),
            CubatureError::NotConverged(best) => Error::Convergence {
                value: best.value.re,
                error_estimate: best.error_estimate,
                evaluations: best.evaluations,
            },
        }
    }
}

/// One-dimensional Gauss-Kronrod pair on [-1, 1], stored as full node lists.
#[derive(Debug)]
pub struct Rule {
    pub nodes: Vec<f64>,
    pub kronrod_weights: Vec<f64>,
    /// Gauss weight per node; zero for Kronrod-only nodes.
    pub gauss_weights: Vec<f64>,
}

impl Rule {
    fn from_half(half: &[(f64, f64, f64)]) -> Rule {
        // `half` lists (node >= 0, kronrod weight, gauss weight), node 0 first
        // when present.
        let mut nodes = Vec::new();
        let mut kw = Vec::new();
        let mut gw = Vec::new();
        for &(x, k, g) in half.iter().rev() {
            if x > 0.0 {
                nodes.push(-x);
                kw.push(k);
                gw.push(g);
            }
        }
        for &(x, k, g) in half {
            nodes.push(x);
            kw.push(k);
            gw.push(g);
        }
        Rule {
            nodes,
            kronrod_weights: kw,
            gauss_weights: gw,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

#[allow(clippy::excessive_precision)]
const GK7: [(f64, f64, f64); 4] = [
    (0.0, 0.450_916_538_658_474_142_35, 0.888_888_888_888_888_888_89),
    (0.434_243_749_346_802_558, 0.401_397_414_775_962_222_91, 0.0),
    (0.774_596_669_241_483_377_04, 0.268_488_089_868_333_440_73, 0.555_555_555_555_555_555_56),
    (0.960_491_268_708_020_283_42, 0.104_656_226_026_467_265_19, 0.0),
];

#[allow(clippy::excessive_precision)]
const GK15: [(f64, f64, f64); 8] = [
    (0.0, 0.209_482_141_084_727_828_01, 0.417_959_183_673_469_387_76),
    (0.207_784_955_007_898_467_6, 0.204_432_940_075_298_892_41, 0.0),
    (0.405_845_151_377_397_166_91, 0.190_350_578_064_785_409_91, 0.381_830_050_505_118_944_95),
    (0.586_087_235_467_691_130_29, 0.169_004_726_639_267_902_83, 0.0),
    (0.741_531_185_599_394_439_86, 0.140_653_259_715_525_918_75, 0.279_705_391_489_276_667_9),
    (0.864_864_423_359_769_072_79, 0.104_790_010_322_250_183_84, 0.0),
    (0.949_107_912_342_758_524_53, 0.063_092_092_629_978_553_291, 0.129_484_966_168_869_693_27),
    (0.991_455_371_120_812_639_21, 0.022_935_322_010_529_224_964, 0.0),
];

#[allow(clippy::excessive_precision)]
const GK21: [(f64, f64, f64); 11] = [
    (0.0, 0.149_445_554_002_916_905_66, 0.0),
    (0.148_874_338_981_631_210_88, 0.147_739_104_901_338_491_37, 0.295_524_224_714_752_870_17),
    (0.294_392_862_701_460_198_13, 0.142_775_938_577_060_080_8, 0.0),
    (0.433_395_394_129_247_190_8, 0.134_709_217_311_473_325_93, 0.269_266_719_309_996_355_09),
    (0.562_757_134_668_604_683_34, 0.123_491_976_262_065_851_08, 0.0),
    (0.679_409_568_299_024_406_23, 0.109_387_158_802_297_641_9, 0.219_086_362_515_982_044),
    (0.780_817_726_586_416_897_06, 0.093_125_454_583_697_605_535, 0.0),
    (0.865_063_366_688_984_510_73, 0.075_039_674_810_919_952_767, 0.149_451_349_150_580_593_15),
    (0.930_157_491_355_708_226, 0.054_755_896_574_351_996_031, 0.0),
    (0.973_906_528_517_171_720_08, 0.032_558_162_307_964_727_479, 0.066_671_344_308_688_137_594),
    (0.995_657_163_025_808_080_74, 0.011_694_638_867_371_874_278, 0.0),
];

/// The Gauss-Kronrod pair with `kronrod_points` nodes.
pub fn rule(kronrod_points: u32) -> Result<&'static Rule, CubatureError> {
    static R7: OnceLock<Rule> = OnceLock::new();
    static R15: OnceLock<Rule> = OnceLock::new();
    static R21: OnceLock<Rule> = OnceLock::new();
    match kronrod_points {
        7 => Ok(R7.get_or_init(|| Rule::from_half(&GK7))),
        15 => Ok(R15.get_or_init(|| Rule::from_half(&GK15))),
        21 => Ok(R21.get_or_init(|| Rule::from_half(&GK21))),
        other => Err(CubatureError::Spec(format!(
            "base_order must be one of 7, 15, 21 (got {other})"
        ))),
    }
}

/// Polynomial degree integrated exactly by the Kronrod rule of a pair.
pub fn kronrod_degree(kronrod_points: u32) -> Option<u32> {
    match kronrod_points {
        7 => Some(11),
        15 => Some(23),
        21 => Some(31),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy)]
struct Cell {
    region: Box3,
    value: Complex64,
    error: f64,
    split_axis: usize,
    depth: u32,
}

struct CellEstimate {
    value: Complex64,
    error: f64,
    split_axis: usize,
}

/// Kronrod value, |Kronrod - Gauss| error, and the axis along which dropping
/// to the Gauss rule changes the result most.
fn eval_cell<F>(f: &F, region: Box3, rule: &Rule) -> CellEstimate
where
    F: Fn(Position) -> Complex64,
{
    let zero = Complex64::new(0.0, 0.0);
    let c = region.center().to_array();
    let h = region.widths().map(|w| 0.5 * w);
    let n = rule.len();
    let (kw, gw) = (&rule.kronrod_weights, &rule.gauss_weights);
    let (mut kron, mut gauss) = (zero, zero);
    let mut axis_err = [zero; 3];
    for iz in 0..n {
        let z = c[2] + h[2] * rule.nodes[iz];
        // Plane sums indexed by (x rule, y rule): Kronrod or Gauss.
        let (mut kk, mut gk, mut kg, mut gg) = (zero, zero, zero, zero);
        for iy in 0..n {
            let y = c[1] + h[1] * rule.nodes[iy];
            let (mut rk, mut rg) = (zero, zero);
            for ix in 0..n {
                let v = f(Position::new(c[0] + h[0] * rule.nodes[ix], y, z));
                rk += v * kw[ix];
                rg += v * gw[ix];
            }
            kk += rk * kw[iy];
            gk += rg * kw[iy];
            kg += rk * gw[iy];
            gg += rg * gw[iy];
        }
        kron += kk * kw[iz];
        gauss += gg * gw[iz];
        axis_err[0] += (kk - gk) * kw[iz];
        axis_err[1] += (kk - kg) * kw[iz];
        axis_err[2] += kk * (kw[iz] - gw[iz]);
    }
    let jac = h[0] * h[1] * h[2];
    let mut split_axis = region.longest_axis();
    let mut worst = 0.0;
    for (i, e) in axis_err.iter().enumerate() {
        if e.norm() > worst {
            worst = e.norm();
            split_axis = i;
        }
    }
    CellEstimate {
        value: kron * jac,
        error: ((kron - gauss) * jac).norm(),
        split_axis,
    }
}

fn initial_cells(region: &Box3, spec: &QuadratureSpec, focus: Option<Position>) -> Vec<(Box3, u32)> {
    let w = region.widths();
    let n = w.map(|wi| ((wi / spec.max_cell_width).ceil() as usize).max(1));
    let base = region.grid(n);
    let Some(p) = focus else {
        return base.into_iter().map(|b| (b, 0)).collect();
    };
    let delta = region.distance_to(p);
    if delta >= spec.near_field_distance {
        return base.into_iter().map(|b| (b, 0)).collect();
    }
    // Graded octant refinement: a cell closer to the focus than its own
    // width is split, halving the width per level, down to about the focus
    // distance.
    let floor = delta.max(1e-9 * region.max_width());
    let mut out = Vec::with_capacity(base.len());
    let mut stack: Vec<Box3> = Vec::new();
    for cell in base {
        stack.push(cell);
        while let Some(b) = stack.pop() {
            let width = b.max_width();
            if width > floor && b.distance_to(p) < width {
                let (l, r) = b.bisect(0);
                for half in [l, r] {
                    let (ll, lr) = half.bisect(1);
                    for quarter in [ll, lr] {
                        let (a, c) = quarter.bisect(2);
                        // Reverse order so cells come out x-fastest.
                        stack.push(c);
                        stack.push(a);
                    }
                }
            } else {
                out.push((b, 0));
            }
        }
    }
    out
}

fn sum_cells(cells: &[Cell]) -> (Complex64, f64) {
    cells.iter().fold((Complex64::new(0.0, 0.0), 0.0), |(v, e), c| {
        (v + c.value, e + c.error)
    })
}

/// Integrates `f` over `region` with the adaptive tensor-product rule.
pub fn integrate_box<F>(f: F, region: &Box3, spec: &QuadratureSpec) -> Result<Integral, CubatureError>
where
    F: Fn(Position) -> Complex64 + Sync,
{
    integrate_box_impl(&f, region, spec, None)
}

/// Like [`integrate_box`], with graded pre-refinement toward `focus`, a point
/// outside the box near which `f` is sharply peaked.
pub fn integrate_box_with_focus<F>(
    f: F,
    region: &Box3,
    spec: &QuadratureSpec,
    focus: Position,
) -> Result<Integral, CubatureError>
where
    F: Fn(Position) -> Complex64 + Sync,
{
    if region.distance_to(focus) <= 0.0 {
        return Err(CubatureError::Spec(format!(
            "focus point {focus:?} lies inside the integration box"
        )));
    }
    integrate_box_impl(&f, region, spec, Some(focus))
}

fn integrate_box_impl<F>(
    f: &F,
    region: &Box3,
    spec: &QuadratureSpec,
    focus: Option<Position>,
) -> Result<Integral, CubatureError>
where
    F: Fn(Position) -> Complex64 + Sync,
{
    spec.validate()?;
    let rule = rule(spec.base_order)?;
    let per_cell = (rule.len() as u64).pow(3);

    let evaluate = |regions: Vec<(Box3, u32)>| -> Vec<Cell> {
        regions
            .into_par_iter()
            .map(|(region, depth)| {
                let e = eval_cell(f, region, rule);
                Cell {
                    region,
                    value: e.value,
                    error: e.error,
                    split_axis: e.split_axis,
                    depth,
                }
            })
            .collect()
    };

    let start = initial_cells(region, spec, focus);
    let mut evaluations = per_cell * start.len() as u64;
    if evaluations > spec.max_evaluations {
        return Err(CubatureError::Spec(format!(
            "initial grid needs {evaluations} evaluations, above the budget of {}",
            spec.max_evaluations
        )));
    }
    let mut cells = evaluate(start);

    loop {
        let (total, error) = sum_cells(&cells);
        let current = Integral {
            value: total,
            error_estimate: error,
            evaluations,
        };
        if !total.re.is_finite() || !total.im.is_finite() {
            return Err(CubatureError::NotConverged(current));
        }
        let target = spec.abs_tol.max(spec.rel_tol * total.norm());
        if error <= target {
            return Ok(current);
        }

        // Worst cells first; index breaks ties so the choice is deterministic.
        let mut order: Vec<usize> = (0..cells.len())
            .filter(|&i| cells[i].depth < spec.max_depth)
            .collect();
        if order.is_empty() {
            return Err(CubatureError::NotConverged(current));
        }
        order.sort_unstable_by(|&a, &b| {
            cells[b]
                .error
                .partial_cmp(&cells[a].error)
                .unwrap_or(Ordering::Equal)
                .then(a.cmp(&b))
        });
        let mut picked = Vec::new();
        let mut covered = 0.0;
        for &i in &order {
            picked.push(i);
            covered += cells[i].error;
            if covered >= 0.5 * error {
                break;
            }
        }
        let cost = 2 * per_cell * picked.len() as u64;
        if evaluations + cost > spec.max_evaluations {
            return Err(CubatureError::NotConverged(current));
        }
        picked.sort_unstable();

        let children: Vec<(Box3, u32)> = picked
            .iter()
            .flat_map(|&i| {
                let c = cells[i];
                let (l, r) = c.region.bisect(c.split_axis);
                [(l, c.depth + 1), (r, c.depth + 1)]
            })
            .collect();
        let fresh = evaluate(children);
        evaluations += cost;
        // First child replaces the parent in place, second goes to the end.
        for (n, &i) in picked.iter().enumerate() {
            cells[i] = fresh[2 * n];
        }
        cells.extend(fresh.into_iter().skip(1).step_by(2));
    }
}

#[derive(Debug, Clone, Copy)]
struct Interval {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
}

impl PartialEq for Interval {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Interval {}

impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Interval {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then(other.a.total_cmp(&self.a))
    }
}

fn gk21_interval<F>(f: &F, a: f64, b: f64) -> Interval
where
    F: Fn(f64) -> Complex64,
{
    let rule = rule(21).expect("GK21 is always available");
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut kron = Complex64::new(0.0, 0.0);
    let mut gauss = Complex64::new(0.0, 0.0);
    for i in 0..rule.len() {
        let v = f(c + h * rule.nodes[i]);
        kron += v * rule.kronrod_weights[i];
        gauss += v * rule.gauss_weights[i];
    }
    Interval {
        a,
        b,
        value: kron * h,
        error: ((kron - gauss) * h).norm(),
    }
}

/// Global adaptive 21-point Gauss-Kronrod quadrature of a complex function
/// of one real variable over `[a, b]`.
pub fn integrate_interval<F>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
    max_intervals: usize,
) -> Result<Integral, CubatureError>
where
    F: Fn(f64) -> Complex64,
{
    if !(a.is_finite() && b.is_finite()) {
        return Err(CubatureError::Spec(format!("non-finite interval [{a}, {b}]")));
    }
    if a == b {
        return Ok(Integral {
            value: Complex64::new(0.0, 0.0),
            error_estimate: 0.0,
            evaluations: 0,
        });
    }
    if b < a {
        return integrate_interval(f, b, a, rel_tol, abs_tol, max_intervals).map(|r| Integral {
            value: -r.value,
            ..r
        });
    }
    let mut heap = BinaryHeap::new();
    let first = gk21_interval(&f, a, b);
    let mut total = first.value;
    let mut error = first.error;
    let mut evaluations = 21u64;
    heap.push(first);
    loop {
        let target = abs_tol.max(rel_tol * total.norm());
        let current = Integral {
            value: total,
            error_estimate: error,
            evaluations,
        };
        if error <= target {
            // Re-sum in position order so the result does not depend on the
            // order in which intervals were refined.
            let mut parts: Vec<Interval> = heap.into_vec();
            parts.sort_by(|x, y| x.a.total_cmp(&y.a));
            let (value, error_estimate) = parts
                .iter()
                .fold((Complex64::new(0.0, 0.0), 0.0), |(v, e), p| (v + p.value, e + p.error));
            return Ok(Integral {
                value,
                error_estimate,
                evaluations,
            });
        }
        if heap.len() >= max_intervals || !total.re.is_finite() || !total.im.is_finite() {
            return Err(CubatureError::NotConverged(current));
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            return Err(CubatureError::NotConverged(current));
        }
        let left = gk21_interval(&f, worst.a, mid);
        let right = gk21_interval(&f, mid, worst.b);
        evaluations += 42;
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
}

/// Settings for [`mc_integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McSpec {
    pub samples: u64,
    pub seed: u64,
}

impl McSpec {
    pub const MIN_SAMPLES: u64 = 1_000;

    pub fn validate(&self) -> Result<(), CubatureError> {
        if self.samples < Self::MIN_SAMPLES {
            return Err(CubatureError::Spec(format!(
                "Monte-Carlo needs at least {} samples, got {}",
                Self::MIN_SAMPLES,
                self.samples
            )));
        }
        Ok(())
    }
}

/// Monte-Carlo estimate with per-component standard errors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub value: Complex64,
    pub std_error_re: f64,
    pub std_error_im: f64,
}

impl McEstimate {
    /// Combined standard error `sqrt(σ_re² + σ_im²)`.
    pub fn std_error(&self) -> f64 {
        self.std_error_re.hypot(self.std_error_im)
    }
}

const MC_CHUNK: u64 = 1 << 16;

#[derive(Debug, Clone, Copy)]
struct Moments {
    n: f64,
    mean: Complex64,
    m2_re: f64,
    m2_im: f64,
}

impl Moments {
    fn empty() -> Self {
        Moments {
            n: 0.0,
            mean: Complex64::new(0.0, 0.0),
            m2_re: 0.0,
            m2_im: 0.0,
        }
    }

    fn push(&mut self, v: Complex64) {
        self.n += 1.0;
        let delta = v - self.mean;
        self.mean += delta / self.n;
        let delta2 = v - self.mean;
        self.m2_re += delta.re * delta2.re;
        self.m2_im += delta.im * delta2.im;
    }

    fn merge(self, o: Moments) -> Moments {
        if o.n == 0.0 {
            return self;
        }
        if self.n == 0.0 {
            return o;
        }
        let n = self.n + o.n;
        let delta = o.mean - self.mean;
        Moments {
            n,
            mean: self.mean + delta * (o.n / n),
            m2_re: self.m2_re + o.m2_re + delta.re * delta.re * self.n * o.n / n,
            m2_im: self.m2_im + o.m2_im + delta.im * delta.im * self.n * o.n / n,
        }
    }
}

/// Plain Monte-Carlo over `region`. Chunk `c` draws from ChaCha8 stream `c`
/// of `seed`, and chunk statistics are merged in chunk order, so the result
/// depends only on `(seed, samples)`.
pub fn mc_integrate<F>(f: F, region: &Box3, spec: &McSpec) -> Result<McEstimate, CubatureError>
where
    F: Fn(Position) -> Complex64 + Sync,
{
    spec.validate()?;
    let lo = region.lo;
    let w = region.widths();
    let chunks = spec.samples.div_ceil(MC_CHUNK);
    let parts: Vec<Moments> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            rng.set_stream(c);
            let count = MC_CHUNK.min(spec.samples - c * MC_CHUNK);
            let mut m = Moments::empty();
            for _ in 0..count {
                let p = Position::new(
                    lo.x + w[0] * rng.gen::<f64>(),
                    lo.y + w[1] * rng.gen::<f64>(),
                    lo.z + w[2] * rng.gen::<f64>(),
                );
                m.push(f(p));
            }
            m
        })
        .collect();
    let m = parts.into_iter().fold(Moments::empty(), Moments::merge);
    let volume = region.volume();
    let n = m.n;
    let se = |m2: f64| volume * (m2.max(0.0) / (n - 1.0) / n).sqrt();
    Ok(McEstimate {
        value: m.mean * volume,
        std_error_re: se(m.m2_re),
        std_error_im: se(m.m2_im),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn one(_: Position) -> Complex64 {
        Complex64::new(1.0, 0.0)
    }

    #[test]
    fn constant_over_unit_cube() {
        let r = integrate_box(one, &Box3::unit(), &QuadratureSpec::default()).unwrap();
        assert!((r.value - 1.0).norm() < 1e-15);
        assert!(r.evaluations > 0);
    }

    #[test]
    fn oscillatory_factor_integrates_to_zero() {
        let k = 2.0 * PI;
        let f = |p: Position| Complex64::cis(2.0 * k * p.z);
        let spec = QuadratureSpec {
            abs_tol: 1e-12,
            ..QuadratureSpec::default()
        };
        let r = integrate_box(f, &Box3::unit(), &spec).unwrap();
        assert!(r.value.norm() < 1e-10, "{:?}", r);
    }

    #[test]
    fn rule_weights_sum_to_two() {
        for n in [7, 15, 21] {
            let r = rule(n).unwrap();
            assert_eq!(r.len(), n as usize);
            let k: f64 = r.kronrod_weights.iter().sum();
            let g: f64 = r.gauss_weights.iter().sum();
            assert!((k - 2.0).abs() < 1e-14);
            assert!((g - 2.0).abs() < 1e-14);
        }
    }

    #[test]
    fn rejects_bad_specs() {
        let bad = [
            QuadratureSpec {
                base_order: 5,
                ..Default::default()
            },
            QuadratureSpec {
                rel_tol: 0.0,
                ..Default::default()
            },
            QuadratureSpec {
                max_depth: 0,
                ..Default::default()
            },
        ];
        for spec in bad {
            assert!(matches!(
                integrate_box(one, &Box3::unit(), &spec),
                Err(CubatureError::Spec(_))
            ));
        }
        assert!(Box3::new(Position::ORIGIN, Position::new(1.0, 0.0, 1.0)).is_err());
    }

    #[test]
    fn budget_exhaustion_reports_best_estimate() {
        let f = |p: Position| Complex64::new((40.0 * p.x).sin() / (p.y + 1e-3), 0.0);
        let spec = QuadratureSpec {
            rel_tol: 1e-14,
            abs_tol: 1e-300,
            max_evaluations: 50_000,
            ..Default::default()
        };
        match integrate_box(f, &Box3::unit(), &spec) {
            Err(CubatureError::NotConverged(best)) => {
                assert!(best.evaluations <= 50_000);
                assert!(best.error_estimate > 0.0);
            }
            other => panic!("expected NotConverged, got {other:?}"),
        }
    }

    #[test]
    fn focus_inside_box_is_rejected() {
        let r = integrate_box_with_focus(one, &Box3::unit(), &QuadratureSpec::default(), Box3::unit().center());
        assert!(matches!(r, Err(CubatureError::Spec(_))));
    }

    #[test]
    fn focus_grading_handles_inverse_power_peak() {
        // ∫ dz / (z + δ)^4 over the cube with the singular point a distance δ
        // above the top face: exact (1/3)(1/δ³ - 1/(1+δ)³) per unit area.
        let delta = 0.01;
        let focus = Position::new(0.5, 0.5, 1.0 + delta);
        let f = move |p: Position| {
            let h = focus.z - p.z;
            Complex64::new(h.powi(-4), 0.0)
        };
        let spec = QuadratureSpec::default().with_rel_tol(1e-8);
        let r = integrate_box_with_focus(f, &Box3::unit(), &spec, focus).unwrap();
        let exact = (delta.powi(-3) - (1.0 + delta).powi(-3)) / 3.0;
        assert!(((r.value.re - exact) / exact).abs() < 1e-8, "{:?} vs {exact}", r);
    }

    #[test]
    fn interval_integration_matches_closed_forms() {
        let r = integrate_interval(|x| Complex64::new(x.cos(), x.sin()), 0.0, 10.0, 1e-12, 1e-15, 1000)
            .unwrap();
        let exact = Complex64::new(10f64.sin(), 1.0 - 10f64.cos());
        assert!((r.value - exact).norm() < 1e-12);
        let rev = integrate_interval(|x| Complex64::new(x * x, 0.0), 1.0, 0.0, 1e-12, 1e-15, 100).unwrap();
        assert!((rev.value.re + 1.0 / 3.0).abs() < 1e-15);
        let sing = integrate_interval(|x| Complex64::new(1.0 / x.sqrt(), 0.0), 0.0, 1.0, 1e-10, 1e-14, 1000)
            .unwrap();
        assert!((sing.value.re - 2.0).abs() < 1e-9);
    }

    #[test]
    fn mc_constant_is_exact() {
        let region = Box3::new(Position::new(-1.0, 0.0, 0.25), Position::new(1.0, 0.5, 0.75)).unwrap();
        let c = Complex64::new(0.3, -1.7);
        let est = mc_integrate(|_| c, &region, &McSpec { samples: 5_000, seed: 3 }).unwrap();
        assert_eq!(est.value, c * region.volume());
        assert_eq!(est.std_error(), 0.0);
    }

    #[test]
    fn mc_is_reproducible() {
        let f = |p: Position| Complex64::new(p.x * p.y, (p.z * 3.0).sin());
        let spec = McSpec {
            samples: 200_000,
            seed: 42,
        };
        let a = mc_integrate(f, &Box3::unit(), &spec).unwrap();
        let b = mc_integrate(f, &Box3::unit(), &spec).unwrap();
        assert_eq!(a, b);
        let c = mc_integrate(f, &Box3::unit(), &McSpec { seed: 43, ..spec }).unwrap();
        assert_ne!(a.value, c.value);
        assert!(mc_integrate(f, &Box3::unit(), &McSpec { samples: 10, seed: 1 }).is_err());
    }

    #[test]
    fn mc_agrees_with_cubature_on_gaussian() {
        let f = |p: Position| {
            let r2 = (p.x - 0.3).powi(2) + (p.y - 0.5).powi(2) + (p.z - 0.6).powi(2);
            Complex64::new((-4.0 * r2).exp(), (-2.0 * r2).exp() * p.x)
        };
        let spec = McSpec {
            samples: 1_000_000,
            seed: 7,
        };
        let mc = mc_integrate(f, &Box3::unit(), &spec).unwrap();
        let det = integrate_box(f, &Box3::unit(), &QuadratureSpec::default().with_rel_tol(1e-10)).unwrap();
        assert!((mc.value.re - det.value.re).abs() < 3.0 * mc.std_error_re);
        assert!((mc.value.im - det.value.im).abs() < 3.0 * mc.std_error_im);
    }

    #[test]
    fn graded_cells_tile_the_box() {
        let region = Box3::new(Position::new(-5.0, -5.0, -0.2), Position::new(5.0, 5.0, 0.0)).unwrap();
        let spec = QuadratureSpec::default();
        let cells = initial_cells(&region, &spec, Some(Position::new(1.3, 0.0, 0.01)));
        let vol: f64 = cells.iter().map(|(b, _)| b.volume()).sum();
        assert!((vol - region.volume()).abs() < 1e-9);
        let finest = cells.iter().map(|(b, _)| b.max_width()).fold(f64::MAX, f64::min);
        assert!((0.005..=0.02).contains(&finest), "finest {finest}");
        assert!(cells.iter().all(|(b, _)| b.max_width() <= 0.25 + 1e-12));
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        fn monomial(p: Position, e: [i32; 3]) -> f64 {
            p.x.powi(e[0]) * p.y.powi(e[1]) * p.z.powi(e[2])
        }

        fn exact(b: &Box3, e: [i32; 3]) -> f64 {
            let lo = b.lo.to_array();
            let hi = b.hi.to_array();
            (0..3)
                .map(|i| (hi[i].powi(e[i] + 1) - lo[i].powi(e[i] + 1)) / f64::from(e[i] + 1))
                .product()
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]
            #[test]
            fn base_rule_is_exact_to_design_degree(
                lo in prop::array::uniform3(-1.0..0.0f64),
                w in prop::array::uniform3(0.05..1.0f64),
                order in prop::sample::select(vec![7u32, 15, 21]),
                pick in prop::array::uniform3(0.0..1.0f64),
            ) {
                let deg = kronrod_degree(order).unwrap() as f64;
                let e = pick.map(|t| (t * (deg + 0.999)).floor() as i32);
                let b = Box3::new(
                    Position::from_array(lo),
                    Position::new(lo[0] + w[0], lo[1] + w[1], lo[2] + w[2]),
                ).unwrap();
                let r = rule(order).unwrap();
                let v = eval_cell(&|p| Complex64::new(monomial(p, e), 0.0), b, r).value;
                let ex = exact(&b, e);
                let scale = ex.abs().max(b.volume());
                prop_assert!((v.re - ex).abs() <= 1e-13 * scale,
                    "order {order} exponents {e:?}: {} vs {ex}", v.re);
            }
        }
    }
}
