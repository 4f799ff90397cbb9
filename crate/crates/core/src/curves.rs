//! Point sequences and the all-pairs distance matrix.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A non-empty sequence of points of a common dimension.
///
/// Coordinates are stored flat, point after point.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    dim: usize,
    coords: Vec<f64>,
}

impl Curve {
    pub fn new<P: AsRef<[f64]>>(points: &[P]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyCurve)?;
        let dim = first.as_ref().len();
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut coords = Vec::with_capacity(dim * points.len());
        for p in points {
            let p = p.as_ref();
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
            coords.extend_from_slice(p);
        }
        Self::from_flat(dim, coords)
    }

    pub fn from_flat(dim: usize, coords: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if coords.is_empty() {
            return Err(Error::EmptyCurve);
        }
        if !coords.len().is_multiple_of(dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: coords.len() % dim,
            });
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Curve { dim, coords })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.coords.chunks_exact(self.dim)
    }

    /// Applies `f` to every coordinate, keeping the shape.
    pub fn map_coords(&self, mut f: impl FnMut(usize, f64) -> f64) -> Result<Self> {
        let dim = self.dim;
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(k, &c)| f(k % dim, c))
            .collect();
        Self::from_flat(dim, coords)
    }
}

/// Euclidean distance between two points of equal dimension.
pub fn distance(p: &[f64], q: &[f64]) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch {
            expected: p.len(),
            found: q.len(),
        });
    }
    Ok(euclid(p, q))
}

#[inline]
fn euclid(p: &[f64], q: &[f64]) -> f64 {
    let sum: f64 = p.iter().zip(q).map(|(a, b)| (a - b) * (a - b)).sum();
    libm::sqrt(sum)
}

/// `rows × cols` matrix of pairwise distances, row `i` for `A[i]`, column
/// `j` for `B[j]` (0-based).
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DistanceMatrix {
    pub fn between(a: &Curve, b: &Curve) -> Result<Self> {
        if a.dim() != b.dim() {
            return Err(Error::DimensionMismatch {
                expected: a.dim(),
                found: b.dim(),
            });
        }
        let mut data = Vec::with_capacity(a.len() * b.len());
        for p in a.points() {
            data.extend(b.points().map(|q| euclid(p, q)));
        }
        Ok(DistanceMatrix {
            rows: a.len(),
            cols: b.len(),
            data,
        })
    }

    /// Wraps precomputed distances, e.g. from a non-Euclidean metric.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        if cols == 0 || rows.iter().any(|r| r.as_ref().len() != cols) {
            return Err(Error::RaggedMatrix);
        }
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            for &d in r.as_ref() {
                if !d.is_finite() {
                    return Err(Error::NonFinite);
                }
                if d < 0.0 {
                    return Err(Error::NegativeDistance);
                }
                data.push(d);
            }
        }
        Ok(DistanceMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    /// All entries in row-major order.
    pub fn values(&self) -> &[f64] {
        &self.data
    }

    pub fn start_distance(&self) -> f64 {
        self.data[0]
    }

    pub fn goal_distance(&self) -> f64 {
        self.data[self.data.len() - 1]
    }

    pub fn max_value(&self) -> f64 {
        self.data.iter().copied().fold(0.0, f64::max)
    }

    /// The matrix of the swapped pair `(B, A)`.
    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            data.extend((0..self.rows).map(|i| self.get(i, j)));
        }
        DistanceMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }
}
