//! Point-line incidence structures, the grid configurations, and their
//! Levi graphs.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Graph, Role};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("flag ({point}, {line}) references an undeclared id")]
    UnknownId { point: usize, line: usize },
    #[error("flag ({point}, {line}) is repeated")]
    RepeatedFlag { point: usize, line: usize },
}

/// Abstract incidence structure on dense point ids `0..points` and line ids
/// `0..lines`. Labels are the structured names the ids were derived from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceConfiguration {
    point_labels: Vec<String>,
    line_labels: Vec<String>,
    flags: BTreeSet<(usize, usize)>,
}

impl IncidenceConfiguration {
    pub fn new<I>(
        point_labels: Vec<String>,
        line_labels: Vec<String>,
        flags: I,
    ) -> Result<Self, ConfigError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (point, line) in flags {
            if point >= point_labels.len() || line >= line_labels.len() {
                return Err(ConfigError::UnknownId { point, line });
            }
            if !set.insert((point, line)) {
                return Err(ConfigError::RepeatedFlag { point, line });
            }
        }
        Ok(IncidenceConfiguration {
            point_labels,
            line_labels,
            flags: set,
        })
    }

    /// Configuration with numeric labels.
    pub fn unlabeled<I>(points: usize, lines: usize, flags: I) -> Result<Self, ConfigError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(
            (0..points).map(|p| format!("p{p}")).collect(),
            (0..lines).map(|l| format!("l{l}")).collect(),
            flags,
        )
    }

    pub fn empty() -> Self {
        IncidenceConfiguration {
            point_labels: Vec::new(),
            line_labels: Vec::new(),
            flags: BTreeSet::new(),
        }
    }

    pub fn point_count(&self) -> usize {
        self.point_labels.len()
    }

    pub fn line_count(&self) -> usize {
        self.line_labels.len()
    }

    pub fn point_label(&self, p: usize) -> &str {
        &self.point_labels[p]
    }

    pub fn line_label(&self, l: usize) -> &str {
        &self.line_labels[l]
    }

    /// Flags as `(point, line)` pairs in lexicographic order.
    pub fn flags(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.flags.iter().copied()
    }

    pub fn flag_count(&self) -> usize {
        self.flags.len()
    }

    pub fn is_incident(&self, point: usize, line: usize) -> bool {
        self.flags.contains(&(point, line))
    }

    pub fn point_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.point_count()];
        for &(p, _) in &self.flags {
            deg[p] += 1;
        }
        deg
    }

    pub fn line_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.line_count()];
        for &(_, l) in &self.flags {
            deg[l] += 1;
        }
        deg
    }

    /// `Some((point_degree, line_degree))` when both are constant.
    pub fn regularity(&self) -> Option<(usize, usize)> {
        let pd = self.point_degrees();
        let ld = self.line_degrees();
        let p = *pd.first()?;
        let l = *ld.first()?;
        (pd.iter().all(|&d| d == p) && ld.iter().all(|&d| d == l)).then_some((p, l))
    }
}

const AXES: [char; 3] = ['x', 'y', 'z'];

/// The `k × k × k` grid: `k³` cells and the `3k²` axis-parallel lines.
///
/// Point `(i, j, l)` has id `(i·k + j)·k + l`. Line `(axis, a, b)` runs along
/// `axis` with the other two coordinates fixed to `(a, b)` in ascending axis
/// order, and has id `(axis·k + a)·k + b`.
pub fn grid3_configuration(k: usize) -> IncidenceConfiguration {
    assert!(k >= 2, "grid side must be at least 2");
    let point_id = |c: [usize; 3]| (c[0] * k + c[1]) * k + c[2];
    let mut point_labels = Vec::with_capacity(k * k * k);
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                point_labels.push(format!("({i},{j},{l})"));
            }
        }
    }
    let mut line_labels = Vec::with_capacity(3 * k * k);
    let mut flags = Vec::with_capacity(3 * k * k * k);
    for axis in 0..3 {
        for a in 0..k {
            for b in 0..k {
                let line = line_labels.len();
                line_labels.push(format!("{}({a},{b})", AXES[axis]));
                for t in 0..k {
                    let mut c = [0; 3];
                    let others: Vec<usize> = (0..3).filter(|&x| x != axis).collect();
                    c[axis] = t;
                    c[others[0]] = a;
                    c[others[1]] = b;
                    flags.push((point_id(c), line));
                }
            }
        }
    }
    IncidenceConfiguration::new(point_labels, line_labels, flags).expect("grid flags are distinct")
}

/// The planar `k × k` grid: `k²` cells, `k` rows then `k` columns.
///
/// Point `(i, j)` has id `i·k + j`; row `i` has line id `i`, column `j` has
/// line id `k + j`.
pub fn grid2_configuration(k: usize) -> IncidenceConfiguration {
    assert!(k >= 2, "grid side must be at least 2");
    let mut point_labels = Vec::with_capacity(k * k);
    let mut flags = Vec::with_capacity(2 * k * k);
    for i in 0..k {
        for j in 0..k {
            point_labels.push(format!("({i},{j})"));
            flags.push((i * k + j, i));
            flags.push((i * k + j, k + j));
        }
    }
    let line_labels = (0..k)
        .map(|i| format!("row{i}"))
        .chain((0..k).map(|j| format!("col{j}")))
        .collect();
    IncidenceConfiguration::new(point_labels, line_labels, flags).expect("grid flags are distinct")
}

/// Point-line incidence graph. Points come first (solid), then lines
/// (hollow, offset by the point count).
pub fn levi_graph(config: &IncidenceConfiguration) -> Graph {
    let p = config.point_count();
    let n = p + config.line_count();
    let g = Graph::new(n, config.flags().map(|(pt, l)| (pt, p + l)))
        .expect("distinct flags give distinct edges");
    let roles = (0..n)
        .map(|v| if v < p { Role::Solid } else { Role::Hollow })
        .collect();
    g.with_roles(roles).expect("flags join points to lines")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bipartition, girth};

    #[test]
    fn grid3_k3_is_27_3() {
        let c = grid3_configuration(3);
        assert_eq!(c.point_count(), 27);
        assert_eq!(c.line_count(), 27);
        assert_eq!(c.flag_count(), 81);
        assert_eq!(c.regularity(), Some((3, 3)));
    }

    #[test]
    fn grid3_k2_is_cube() {
        let c = grid3_configuration(2);
        assert_eq!(
            (c.point_count(), c.line_count(), c.flag_count()),
            (8, 12, 24)
        );
        assert_eq!(c.regularity(), Some((3, 2)));
    }

    #[test]
    fn grid3_center_lines() {
        let c = grid3_configuration(3);
        let center = 13;
        assert_eq!(c.point_label(center), "(1,1,1)");
        let lines: Vec<&str> = (0..27)
            .filter(|&l| c.is_incident(center, l))
            .map(|l| c.line_label(l))
            .collect();
        assert_eq!(lines, vec!["x(1,1)", "y(1,1)", "z(1,1)"]);
    }

    #[test]
    fn grid2_counts() {
        let c = grid2_configuration(3);
        assert_eq!(
            (c.point_count(), c.line_count(), c.flag_count()),
            (9, 6, 18)
        );
        assert_eq!(c.regularity(), Some((2, 3)));
        let c = grid2_configuration(2);
        assert_eq!((c.point_count(), c.line_count(), c.flag_count()), (4, 4, 8));
    }

    #[test]
    fn levi_of_grid2() {
        let g = levi_graph(&grid2_configuration(3));
        assert_eq!((g.vertex_count(), g.edge_count()), (15, 18));
        assert_eq!(girth(&g), Some(8));
        assert!(bipartition(&g).is_some());
    }

    #[test]
    fn levi_degrees_match_flags() {
        let c = grid3_configuration(2);
        let g = levi_graph(&c);
        for (p, d) in c.point_degrees().into_iter().enumerate() {
            assert_eq!(g.degree(p), d);
        }
        for (l, d) in c.line_degrees().into_iter().enumerate() {
            assert_eq!(g.degree(c.point_count() + l), d);
        }
        let total: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * c.flag_count());
    }

    #[test]
    fn levi_of_empty() {
        let g = levi_graph(&IncidenceConfiguration::empty());
        assert_eq!((g.vertex_count(), g.edge_count()), (0, 0));
    }

    #[test]
    fn rejects_bad_flags() {
        assert_eq!(
            IncidenceConfiguration::unlabeled(2, 1, [(2, 0)]),
            Err(ConfigError::UnknownId { point: 2, line: 0 })
        );
        assert_eq!(
            IncidenceConfiguration::unlabeled(2, 1, [(1, 0), (1, 0)]),
            Err(ConfigError::RepeatedFlag { point: 1, line: 0 })
        );
    }
}
