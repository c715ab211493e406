//! LCF-coded cubic Hamiltonian graphs.

use std::fmt;

use thiserror::Error;

use crate::graph::{bipartition, Graph, Role};

/// The chord offsets of the Gray graph, repeated [`GRAY_REPEATS`] times.
pub const GRAY_OFFSETS: [i64; 6] = [7, -7, 13, -13, 25, -25];
pub const GRAY_REPEATS: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LcfError {
    #[error("LCF code is empty")]
    Empty,
    #[error("LCF code on {n} vertices is too small for a cubic graph")]
    TooSmall { n: usize },
    #[error("offset {offset} at position {position} is zero modulo {n}")]
    ZeroOffset {
        position: usize,
        offset: i64,
        n: usize,
    },
    #[error("offset {offset} at position {position} duplicates a Hamilton-cycle edge")]
    CycleChord { position: usize, offset: i64 },
    #[error(
        "chord from position {position} (offset {offset}) lands on {partner}, \
         whose offset {partner_offset} does not point back"
    )]
    Unpaired {
        position: usize,
        offset: i64,
        partner: usize,
        partner_offset: i64,
    },
}

/// An LCF code `[o_0, …, o_{k-1}]^repeats`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcfCode {
    offsets: Vec<i64>,
    repeats: usize,
}

impl LcfCode {
    /// Validates chord pairing eagerly; the first offending position is named.
    pub fn new(offsets: Vec<i64>, repeats: usize) -> Result<Self, LcfError> {
        if offsets.is_empty() || repeats == 0 {
            return Err(LcfError::Empty);
        }
        let code = LcfCode { offsets, repeats };
        let n = code.vertex_count();
        if n < 4 {
            return Err(LcfError::TooSmall { n });
        }
        let ni = n as i64;
        for position in 0..n {
            let offset = code.offset_at(position);
            let r = offset.rem_euclid(ni);
            if r == 0 {
                return Err(LcfError::ZeroOffset {
                    position,
                    offset,
                    n,
                });
            }
            if r == 1 || r == ni - 1 {
                return Err(LcfError::CycleChord { position, offset });
            }
            let partner = code.partner(position);
            let partner_offset = code.offset_at(partner);
            if (partner_offset + offset).rem_euclid(ni) != 0 {
                return Err(LcfError::Unpaired {
                    position,
                    offset,
                    partner,
                    partner_offset,
                });
            }
        }
        Ok(code)
    }

    pub fn gray() -> Self {
        Self::new(GRAY_OFFSETS.to_vec(), GRAY_REPEATS).expect("Gray LCF code is valid")
    }

    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    pub fn repeats(&self) -> usize {
        self.repeats
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() * self.repeats
    }

    /// Offset at `position` under the periodic extension of the code.
    pub fn offset_at(&self, position: usize) -> i64 {
        self.offsets[position % self.offsets.len()]
    }

    fn partner(&self, position: usize) -> usize {
        let n = self.vertex_count() as i64;
        (position as i64 + self.offset_at(position)).rem_euclid(n) as usize
    }
}

impl fmt::Display for LcfCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.offsets.iter().map(i64::to_string).collect();
        write!(f, "[{}]^{}", parts.join(", "), self.repeats)
    }
}

/// Hamilton cycle `0-1-…-(n-1)-0` plus the chord `{i, i + o_i mod n}` at
/// every position.
pub fn lcf_graph(code: &LcfCode) -> Graph {
    let n = code.vertex_count();
    let cycle = (0..n).map(|i| (i, (i + 1) % n));
    let chords = (0..n).map(|i| (i, code.partner(i)));
    Graph::from_edges_dedup(n, cycle.chain(chords))
        .expect("validated LCF code yields a simple graph")
}

/// The Gray graph from its LCF code. The bipartition class containing
/// vertex 0 is labeled hollow, the other solid.
pub fn gray_graph() -> Graph {
    let g = lcf_graph(&LcfCode::gray());
    let (hollow, _) = bipartition(&g).expect("Gray graph is bipartite");
    let mut roles = vec![Role::Solid; g.vertex_count()];
    for v in hollow {
        roles[v] = Role::Hollow;
    }
    g.with_roles(roles)
        .expect("bipartition gives a proper role table")
}
