#![allow(dead_code)]

pub mod fresnel_table;

/// Verdict for one acceptance criterion.
pub struct Outcome {
    pub id: String,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Outcome {
    pub fn panicked(fn_name: &str, msg: String) -> Self {
        Outcome {
            id: fn_name.split('_').nth(1).unwrap_or("?").trim_start_matches('0').to_string(),
            name: fn_name.to_string(),
            pass: false,
            detail: format!("panicked: {msg}"),
        }
    }
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{tag} criterion {:>2} {}: {}", self.id, self.name, self.detail)
    }
}

pub fn verdict(id: u32, name: &str, pass: bool, detail: &str) -> Outcome {
    Outcome {
        id: id.to_string(),
        name: name.to_string(),
        pass,
        detail: detail.to_string(),
    }
}

/// `n` evenly spaced points from `a` to `b` inclusive.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| if i + 1 == n { b } else { a + (b - a) * i as f64 / (n - 1) as f64 })
        .collect()
}

/// Interior local maxima as (position, value), refined with a parabola
/// through each sampled peak and its neighbours.
pub fn local_maxima(xs: &[f64], ys: &[f64]) -> Vec<(f64, f64)> {
    extrema(xs, ys, |a, b| a > b)
}

pub fn local_minima(xs: &[f64], ys: &[f64]) -> Vec<(f64, f64)> {
    extrema(xs, ys, |a, b| a < b)
}

fn extrema(xs: &[f64], ys: &[f64], beats: impl Fn(f64, f64) -> bool) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for i in 1..ys.len() - 1 {
        if beats(ys[i], ys[i - 1]) && !beats(ys[i + 1], ys[i]) && beats(ys[i], ys[i + 1]) {
            let h = xs[i + 1] - xs[i];
            let (y0, y1, y2) = (ys[i - 1], ys[i], ys[i + 1]);
            let curv = y0 - 2.0 * y1 + y2;
            let t = if curv != 0.0 { 0.5 * (y0 - y2) / curv } else { 0.0 };
            out.push((xs[i] + t * h, y1 - 0.25 * (y0 - y2) * t));
        }
    }
    out
}

/// Number of sign changes in the forward differences of `ys`, ignoring
/// exact zeros.
pub fn derivative_sign_changes(ys: &[f64]) -> usize {
    let signs: Vec<f64> = ys
        .windows(2)
        .map(|w| w[1] - w[0])
        .filter(|d| *d != 0.0)
        .map(f64::signum)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}
