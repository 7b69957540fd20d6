//! Reduced simplicial homology ranks over the rationals.

use std::collections::HashMap;

use crate::scalar::ExactDomain;

/// Rank of a dense matrix by fraction-free (Bareiss) elimination.
///
/// Over an integral domain every division performed is exact, so the rank
/// equals the rank over the fraction field.
#[allow(clippy::needless_range_loop)]
pub fn rank<R: ExactDomain>(mut m: Vec<Vec<R>>) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut prev = R::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in (r + 1)..nrows {
            let lead = m[i][c].clone();
            for j in (c + 1)..ncols {
                let v = pivot.clone() * m[i][j].clone() - lead.clone() * m[r][j].clone();
                m[i][j] = v / prev.clone();
            }
            m[i][c] = R::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// A finite abstract simplicial complex on at most 64 vertices, each face
/// a bitmask. `faces` empty is the void complex; `{∅}` is the complex whose
/// only face is the empty face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    faces: Vec<u64>,
}

impl SimplicialComplex {
    /// Faces are deduplicated and sorted by dimension; the caller
    /// guarantees downward closure.
    pub fn from_faces(mut faces: Vec<u64>) -> Self {
        faces.sort_by_key(|f| (f.count_ones(), *f));
        faces.dedup();
        SimplicialComplex { faces }
    }

    pub fn void() -> Self {
        SimplicialComplex { faces: Vec::new() }
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[u64] {
        &self.faces
    }

    pub fn is_closed_downward(&self) -> bool {
        self.faces.iter().all(|&f| {
            (0..64)
                .filter(|b| f & (1u64 << b) != 0)
                .all(|b| self.faces.binary_search_by_key(&(f.count_ones() - 1, f & !(1u64 << b)), |g| (g.count_ones(), *g)).is_ok())
        })
    }

    /// Ranks of `H̃_d` for `d = -1, 0, 1, ...`; index `k` holds `H̃_{k-1}`.
    /// The void complex has no homology at all.
    pub fn reduced_betti(&self) -> Vec<usize> {
        if self.faces.is_empty() {
            return Vec::new();
        }
        let top = self.faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
        // by_size[s] holds the faces with s vertices, i.e. dimension s - 1
        let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
        for &f in &self.faces {
            by_size[f.count_ones() as usize].push(f);
        }
        // boundary_rank[s] = rank of ∂ from size-s faces to size-(s-1) faces
        let mut boundary_rank = vec![0usize; top + 2];
        for s in 1..=top {
            boundary_rank[s] = boundary_rank_between(&by_size[s], &by_size[s - 1]);
        }
        (0..=top)
            .map(|s| by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1])
            .collect()
    }
}

fn boundary_rank_between(faces: &[u64], facets_of: &[u64]) -> usize {
    if faces.is_empty() || facets_of.is_empty() {
        return 0;
    }
    let index: HashMap<u64, usize> = facets_of.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let matrix: Vec<Vec<i64>> = faces
        .iter()
        .map(|&f| {
            let mut row = vec![0i64; facets_of.len()];
            let mut sign = 1i64;
            for b in 0..64 {
                if f & (1u64 << b) != 0 {
                    if let Some(&j) = index.get(&(f & !(1u64 << b))) {
                        row[j] = sign;
                    }
                    sign = -sign;
                }
            }
            row
        })
        .collect();
    rank(to_big(matrix))
}

fn to_big(m: Vec<Vec<i64>>) -> Vec<Vec<num_bigint::BigInt>> {
    m.into_iter()
        .map(|row| row.into_iter().map(num_bigint::BigInt::from).collect())
        .collect()
}
