use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::eulerian::eulerian_explicit;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriangleKind {
    Stirling2,
    Eulerian,
    Tangent,
}

/// Append-only row cache for one integer triangle.
///
/// Row `n` holds the entries `k = 0..=n`. Rows are built on demand in order
/// and never evicted; extension happens under the write lock so readers on
/// other threads always observe complete rows.
#[derive(Debug)]
pub struct TriangleTable {
    kind: TriangleKind,
    rows: RwLock<Vec<Vec<BigInt>>>,
}

impl TriangleTable {
    pub const fn new(kind: TriangleKind) -> Self {
        TriangleTable { kind, rows: RwLock::new(Vec::new()) }
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    /// Entry `(n, k)`; zero outside `0 <= k <= n`.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        self.ensure(n);
        self.rows.read().unwrap()[n][k].clone()
    }

    pub fn row(&self, n: usize) -> Vec<BigInt> {
        self.ensure(n);
        self.rows.read().unwrap()[n].clone()
    }

    /// Number of rows currently cached.
    pub fn cached_rows(&self) -> usize {
        self.rows.read().unwrap().len()
    }

    fn ensure(&self, n: usize) {
        if self.rows.read().unwrap().len() > n {
            return;
        }
        let mut rows = self.rows.write().unwrap();
        while rows.len() <= n {
            let next = self.next_row(&rows);
            rows.push(next);
        }
    }

    fn next_row(&self, rows: &[Vec<BigInt>]) -> Vec<BigInt> {
        let n = rows.len();
        let Some(prev) = rows.last() else {
            return vec![BigInt::one()];
        };
        let at = |k: usize| prev.get(k).cloned().unwrap_or_default();
        match self.kind {
            // S(n,k) = k S(n-1,k) + S(n-1,k-1)
            TriangleKind::Stirling2 => (0..=n)
                .map(|k| match k {
                    0 => BigInt::zero(),
                    _ => BigInt::from(k) * at(k) + at(k - 1),
                })
                .collect(),
            TriangleKind::Eulerian => (0..=n).map(|k| eulerian_explicit(n, k)).collect(),
            // T(n,k) = k (T(n-1,k-1) + T(n-1,k+1))
            TriangleKind::Tangent => (0..=n)
                .map(|k| match k {
                    0 => BigInt::zero(),
                    _ => BigInt::from(k) * (at(k - 1) + at(k + 1)),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    #[test]
    fn grows_monotonically() {
        let t = TriangleTable::new(TriangleKind::Stirling2);
        assert_eq!(t.cached_rows(), 0);
        assert_eq!(t.get(3, 5), BigInt::zero());
        assert_eq!(t.cached_rows(), 0);
        assert_eq!(t.get(5, 2), BigInt::from(15));
        assert_eq!(t.cached_rows(), 6);
        t.get(2, 1);
        assert_eq!(t.cached_rows(), 6);
    }

    #[test]
    fn concurrent_readers_agree() {
        let t = Arc::new(TriangleTable::new(TriangleKind::Tangent));
        let handles: Vec<_> = (0..8)
            .map(|i| {
                let t = Arc::clone(&t);
                std::thread::spawn(move || t.row(10 + i))
            })
            .collect();
        let rows: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row, &t.row(10 + i));
        }
    }
}
