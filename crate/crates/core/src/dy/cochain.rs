use crate::cyclo::CycloNum;
use crate::hopf::{format_terms, HopfAlgebra};
use crate::linalg::{Matrix, SparseVec};

/// A DY cochain of degree `n` with coefficients `(V, W)`: an `H`-linear map
/// `V -> H^{(x) n} (x) W`, stored as a `(d^n m_W) x m_V` matrix whose row
/// `t * m_W + w` pairs tensor index `t` with basis vector `w`. With trivial
/// coefficients this is a single column, an element of `H^{(x) n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    data: Matrix,
    target_dim: usize,
}

impl Cochain {
    pub fn new(degree: usize, target_dim: usize, data: Matrix) -> Self {
        debug_assert_eq!(data.nrows() % target_dim.max(1), 0);
        Cochain { degree, data, target_dim }
    }

    /// Trivial-coefficient cochain from an element of `H^{(x) n}`.
    pub fn from_tensor(h: &HopfAlgebra, degree: usize, x: &SparseVec) -> Self {
        let data = Matrix::from_cols(h.field(), h.tensor_dim(degree), std::slice::from_ref(x));
        Cochain { degree, data, target_dim: 1 }
    }

    /// Inverse of [`Cochain::flatten`].
    pub fn from_flat(h: &HopfAlgebra, degree: usize, source_dim: usize, target_dim: usize, v: &SparseVec) -> Self {
        let rows = h.tensor_dim(degree) * target_dim;
        Cochain { degree, data: Matrix::unflatten(h.field(), rows, source_dim, v), target_dim }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn data(&self) -> &Matrix {
        &self.data
    }

    pub fn source_dim(&self) -> usize {
        self.data.ncols()
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    /// Row-major flattening, the coordinates used for cochain spaces.
    pub fn flatten(&self) -> SparseVec {
        self.data.flatten()
    }

    /// The element of `H^{(x) n} (x) W` that is the image of basis vector `v`.
    pub fn column(&self, v: usize) -> SparseVec {
        self.data.col(v)
    }

    pub fn is_zero(&self) -> bool {
        self.data.is_zero()
    }

    pub fn scale(&self, c: &CycloNum) -> Cochain {
        Cochain { degree: self.degree, data: self.data.scale(c), target_dim: self.target_dim }
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        Cochain { degree: self.degree, data: self.data.add(&other.data), target_dim: self.target_dim }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        Cochain { degree: self.degree, data: self.data.sub(&other.data), target_dim: self.target_dim }
    }

    /// Labelled tensor sum such as `z*E(x)EK^3 - 1(x)1`; with nontrivial
    /// target the last factor is `w<j>`, and with nontrivial source each
    /// column is prefixed by `v<i> ->`.
    pub fn display(&self, h: &HopfAlgebra) -> String {
        let n = self.degree;
        let m = self.target_dim;
        let render = |col: &SparseVec| {
            format_terms(col.iter().map(|(r, c)| {
                let (t, w) = (r / m, r % m);
                let mut parts: Vec<String> = h.split_index(t, n).iter().map(|&k| h.label(k).to_string()).collect();
                if parts.is_empty() {
                    parts.push("1".into());
                }
                if m > 1 {
                    parts.push(format!("w{w}"));
                }
                (parts.join("(x)"), c.clone())
            }))
        };
        if self.source_dim() == 1 {
            return render(&self.column(0));
        }
        (0..self.source_dim()).map(|v| format!("v{v} -> {}", render(&self.column(v)))).collect::<Vec<_>>().join("; ")
    }
}
