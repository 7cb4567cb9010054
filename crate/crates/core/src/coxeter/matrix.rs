use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};

/// A validated Coxeter matrix. Entries are stored row-major with `0`
/// encoding an infinite bond.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<u32>,
}

pub const MAX_RANK: usize = 32;

impl CoxeterMatrix {
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let rank = rows.len();
        if rows.iter().any(|r| r.len() != rank) {
            return Err(Error::MalformedMatrix("matrix is not square".into()));
        }
        Self::from_flat(rank, rows.concat())
    }

    pub fn from_flat(rank: usize, entries: Vec<u32>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::MalformedMatrix("rank must be positive".into()));
        }
        if rank > MAX_RANK {
            return Err(Error::MalformedMatrix(format!("rank {rank} exceeds {MAX_RANK}")));
        }
        if entries.len() != rank * rank {
            return Err(Error::MalformedMatrix(format!(
                "expected {} entries for rank {rank}, found {}",
                rank * rank,
                entries.len()
            )));
        }
        for i in 0..rank {
            for j in 0..rank {
                let m = entries[i * rank + j];
                if i == j {
                    if m != 1 {
                        return Err(Error::MalformedMatrix(format!(
                            "diagonal entry m(s{0},s{0}) = {m}, expected 1",
                            i + 1
                        )));
                    }
                } else {
                    if m != entries[j * rank + i] {
                        return Err(Error::MalformedMatrix(format!(
                            "asymmetric entries at ({}, {})",
                            i + 1,
                            j + 1
                        )));
                    }
                    if m == 1 {
                        return Err(Error::MalformedMatrix(format!(
                            "off-diagonal entry m(s{},s{}) = 1",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        Ok(CoxeterMatrix { rank, entries })
    }

    /// Builds a matrix from a linear diagram: `bonds[i]` is `m(s_i, s_{i+1})`.
    fn linear(bonds: &[u32]) -> Self {
        let rank = bonds.len() + 1;
        let mut entries = vec![2; rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = 1;
        }
        for (i, &m) in bonds.iter().enumerate() {
            entries[i * rank + i + 1] = m;
            entries[(i + 1) * rank + i] = m;
        }
        CoxeterMatrix { rank, entries }
    }

    pub fn type_a(n: usize) -> Self {
        Self::linear(&vec![3; n - 1])
    }

    /// Type B_n with the order-4 bond between the last two generators.
    pub fn type_b(n: usize) -> Self {
        let mut bonds = vec![3; n - 1];
        if let Some(last) = bonds.last_mut() {
            *last = 4;
        }
        Self::linear(&bonds)
    }

    /// Type D_n: a path on the first n-1 generators, with the last generator
    /// attached to generator n-2 (1-based).
    pub fn type_d(n: usize) -> Self {
        let mut m = Self::linear(&vec![3; n - 2]);
        m = m.extended(n);
        if n >= 3 {
            m.set(n - 3, n - 1, 3);
        }
        m
    }

    /// Type E_n (n = 6, 7, 8) in Bourbaki labelling.
    pub fn type_e(n: usize) -> Self {
        let mut m = CoxeterMatrix::linear(&[]).extended(n);
        for (a, b) in [(0, 2), (2, 3), (3, 4), (1, 3)] {
            m.set(a, b, 3);
        }
        for i in 4..n - 1 {
            m.set(i, i + 1, 3);
        }
        m
    }

    pub fn type_f4() -> Self {
        Self::linear(&[3, 4, 3])
    }

    pub fn type_h(n: usize) -> Self {
        let mut bonds = vec![3; n - 1];
        bonds[0] = 5;
        Self::linear(&bonds)
    }

    fn extended(&self, rank: usize) -> Self {
        let mut entries = vec![2; rank * rank];
        for i in 0..rank {
            for j in 0..rank {
                if i == j {
                    entries[i * rank + j] = 1;
                } else if i < self.rank && j < self.rank {
                    entries[i * rank + j] = self.entries[i * self.rank + j];
                }
            }
        }
        CoxeterMatrix { rank, entries }
    }

    fn set(&mut self, i: usize, j: usize, m: u32) {
        self.entries[i * self.rank + j] = m;
        self.entries[j * self.rank + i] = m;
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `m(s,t)`, with `None` for an infinite bond.
    pub fn order(&self, s: usize, t: usize) -> Option<u32> {
        match self.entries[s * self.rank + t] {
            0 => None,
            m => Some(m),
        }
    }

    pub fn raw(&self, s: usize, t: usize) -> u32 {
        self.entries[s * self.rank + t]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.rank).map(<[u32]>::to_vec).collect()
    }

    /// Whether the group is finite, decided by positive definiteness of the
    /// bilinear form `B(s,t) = -cos(pi / m(s,t))`.
    pub fn is_finite_group(&self) -> bool {
        let n = self.rank;
        let mut a = vec![0.0f64; n * n];
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] = match self.order(i, j) {
                    None => -1.0,
                    Some(m) => -(PI / f64::from(m)).cos(),
                };
            }
        }
        // Cholesky; a non-positive pivot means the form is not definite.
        for k in 0..n {
            let mut d = a[k * n + k];
            for p in 0..k {
                d -= a[k * n + p] * a[k * n + p];
            }
            if d <= 1e-9 {
                return false;
            }
            let d = d.sqrt();
            a[k * n + k] = d;
            for i in k + 1..n {
                let mut v = a[i * n + k];
                for p in 0..k {
                    v -= a[i * n + p] * a[k * n + p];
                }
                a[i * n + k] = v / d;
            }
        }
        true
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.rank) {
            let cells: Vec<String> = row
                .iter()
                .map(|&m| if m == 0 { "inf".to_string() } else { m.to_string() })
                .collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}
