use std::fmt;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use super::{construct_unchecked, validate, ConstructionParams, STAR_PERIOD};

/// Outcome of one grid point. Degenerate points carry the first failing
/// check in the fixed order: circle intersection, coincidence, symmetry,
/// isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepStatus {
    Valid,
    NoIntersection,
    Coincident,
    Asymmetric,
    NotGray,
}

impl SweepStatus {
    pub const ALL: [SweepStatus; 5] = [
        SweepStatus::Valid,
        SweepStatus::NoIntersection,
        SweepStatus::Coincident,
        SweepStatus::Asymmetric,
        SweepStatus::NotGray,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SweepStatus::Valid => "valid",
            SweepStatus::NoIntersection => "no_intersection",
            SweepStatus::Coincident => "coincident",
            SweepStatus::Asymmetric => "asymmetric",
            SweepStatus::NotGray => "not_gray",
        }
    }

    pub fn parse(s: &str) -> Option<SweepStatus> {
        Self::ALL.into_iter().find(|st| st.as_str() == s)
    }
}

impl fmt::Display for SweepStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Grid over the parameter plane.
///
/// `h` takes `steps_h` values spanning `h_range` inclusively; `theta` takes
/// `steps_theta` values over the half-open `theta_range` and is reduced
/// modulo 2π/3 before evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub h_range: (f64, f64),
    pub theta_range: (f64, f64),
    pub steps_h: usize,
    pub steps_theta: usize,
    pub tol: f64,
    pub sep_threshold: f64,
}

impl SweepSpec {
    pub fn h_values(&self) -> Vec<f64> {
        let (lo, hi) = self.h_range;
        match self.steps_h {
            0 => Vec::new(),
            1 => vec![lo],
            s => (0..s)
                .map(|i| lo + (hi - lo) * i as f64 / (s - 1) as f64)
                .collect(),
        }
    }

    pub fn theta_values(&self) -> Vec<f64> {
        let (lo, hi) = self.theta_range;
        let s = self.steps_theta;
        (0..s)
            .map(|j| lo + (hi - lo) * j as f64 / s as f64)
            .collect()
    }

    /// Grid points in row-major (h-major) order.
    fn grid(&self) -> Vec<(f64, f64)> {
        let thetas = self.theta_values();
        self.h_values()
            .into_iter()
            .flat_map(|h| thetas.iter().map(move |&t| (h, t)))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub h: f64,
    /// Star rotation reduced into `[0, 2π/3)`.
    pub theta: f64,
    pub status: SweepStatus,
    /// `None` when no drawing could be constructed.
    pub min_separation: Option<f64>,
    pub accidental_pairs: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityMap {
    pub spec: SweepSpec,
    pub points: Vec<SweepPoint>,
}

impl FeasibilityMap {
    pub fn count(&self, status: SweepStatus) -> usize {
        self.points.iter().filter(|p| p.status == status).count()
    }
}

/// Builds and classifies the drawing at one parameter point.
pub fn evaluate_point(h: f64, theta: f64, tol: f64, sep_threshold: f64) -> SweepPoint {
    let reduced = ConstructionParams { h, theta }.reduced_theta();
    let unbuilt = |status| SweepPoint {
        h,
        theta: reduced,
        status,
        min_separation: None,
        accidental_pairs: None,
    };
    let e = match construct_unchecked(ConstructionParams { h, theta: reduced }) {
        Ok(e) => e,
        Err(_) => return unbuilt(SweepStatus::NoIntersection),
    };
    let report = validate(&e, tol, sep_threshold);
    let status = if !report.coincident_pairs.is_empty() {
        SweepStatus::Coincident
    } else if !report.symmetry_order.is_multiple_of(3) {
        SweepStatus::Asymmetric
    } else if !report.isomorphic_to_gray {
        SweepStatus::NotGray
    } else {
        SweepStatus::Valid
    };
    SweepPoint {
        h,
        theta: reduced,
        status,
        min_separation: Some(report.min_vertex_separation),
        accidental_pairs: Some(report.accidental_unit_pairs.len()),
    }
}

/// Single-threaded sweep.
pub fn sweep_sequential(spec: &SweepSpec) -> FeasibilityMap {
    let points = spec
        .grid()
        .into_iter()
        .map(|(h, t)| evaluate_point(h, t, spec.tol, spec.sep_threshold))
        .collect();
    FeasibilityMap {
        spec: *spec,
        points,
    }
}

/// Data-parallel sweep; output order matches [`sweep_sequential`].
#[cfg(feature = "parallel")]
pub fn sweep_parallel(spec: &SweepSpec) -> FeasibilityMap {
    let points = spec
        .grid()
        .into_par_iter()
        .map(|(h, t)| evaluate_point(h, t, spec.tol, spec.sep_threshold))
        .collect();
    FeasibilityMap {
        spec: *spec,
        points,
    }
}

/// Sweep using the parallel backend when the `parallel` feature is on.
pub fn sweep(spec: &SweepSpec) -> FeasibilityMap {
    #[cfg(feature = "parallel")]
    {
        sweep_parallel(spec)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sweep_sequential(spec)
    }
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            h_range: (0.1, 0.95),
            theta_range: (0.0, STAR_PERIOD),
            steps_h: 32,
            steps_theta: 32,
            tol: super::DEFAULT_TOL,
            sep_threshold: super::DEFAULT_SEP_THRESHOLD,
        }
    }
}
