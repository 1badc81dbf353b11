/// `w = a * n^b + c`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct PowerLaw {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum FitError {
    #[error("need at least 4 rows, got {0}")]
    TooFewRows(usize),
    #[error("all node counts are equal")]
    Degenerate,
}

const B_MIN: f64 = 0.30;
const B_MAX: f64 = 0.60;
const B_STEPS: usize = 3000;

/// Least-squares fit over a grid of exponents, solving for `a` and `c` in
/// closed form at each one. Rows are `(w, n)`.
pub fn fit_power_law(table: &[(u32, usize)]) -> Result<PowerLaw, FitError> {
    let pts: Vec<(f64, f64)> = table.iter().map(|&(w, n)| (n as f64, w as f64)).collect();
    fit_power_law_points(&pts)
}

/// Same fit on real-valued `(n, w)` samples.
pub fn fit_power_law_points(pts: &[(f64, f64)]) -> Result<PowerLaw, FitError> {
    if pts.len() < 4 {
        return Err(FitError::TooFewRows(pts.len()));
    }
    if pts.iter().all(|p| p.0 == pts[0].0) {
        return Err(FitError::Degenerate);
    }
    let m = pts.len() as f64;
    let ys: Vec<f64> = pts.iter().map(|p| p.1).collect();
    let my = ys.iter().sum::<f64>() / m;
    let mut best: Option<(f64, PowerLaw)> = None;
    for step in 0..=B_STEPS {
        let b = B_MIN + (B_MAX - B_MIN) * step as f64 / B_STEPS as f64;
        let xs: Vec<f64> = pts.iter().map(|p| p.0.powf(b)).collect();
        let mx = xs.iter().sum::<f64>() / m;
        let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
        let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
        let a = sxy / sxx;
        let c = my - a * mx;
        let sse: f64 = xs.iter().zip(&ys).map(|(x, y)| (a * x + c - y).powi(2)).sum();
        if best.as_ref().is_none_or(|(e, _)| sse < *e) {
            best = Some((sse, PowerLaw { a, b, c }));
        }
    }
    Ok(best.expect("grid is non-empty").1)
}
