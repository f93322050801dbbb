use crate::error::{Error, Result};

/// Row-major flattening of the bipartite index pair `(n, m)` for subsystem
/// dimension `d`: `k = n * d + m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipartiteIndex {
    d: usize,
}

impl BipartiteIndex {
    pub fn new(d: usize) -> Self {
        Self { d }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn total(&self) -> usize {
        self.d * self.d
    }

    pub fn flatten(&self, n: usize, m: usize) -> Result<usize> {
        flatten_index(n, m, self.d)
    }

    pub fn unflatten(&self, k: usize) -> Result<(usize, usize)> {
        unflatten_index(k, self.d)
    }
}

pub fn flatten_index(n: usize, m: usize, d: usize) -> Result<usize> {
    if n >= d || m >= d {
        return Err(Error::IndexOutOfRange { n, m, d });
    }
    Ok(n * d + m)
}

pub fn unflatten_index(k: usize, d: usize) -> Result<(usize, usize)> {
    if k >= d * d {
        return Err(Error::IndexOutOfRange { n: k / d.max(1), m: k % d.max(1), d });
    }
    Ok((k / d, k % d))
}
