//! Small dense linear-algebra helpers over nalgebra.

use nalgebra::{DMatrix, DVector};

/// Matrix whose columns are the given coordinate vectors.
pub(crate) fn columns(vectors: &[&[f64]]) -> DMatrix<f64> {
    let rows = vectors.first().map_or(0, |v| v.len());
    DMatrix::from_fn(rows, vectors.len(), |r, c| vectors[c][r])
}

pub(crate) fn rank(m: &DMatrix<f64>, tol: f64) -> usize {
    if m.ncols() == 0 || m.nrows() == 0 {
        return 0;
    }
    m.clone().svd(false, false).rank(tol)
}

/// Orthonormal basis of the null space, from right singular vectors whose
/// singular value is at most `tol`.
pub(crate) fn kernel(m: &DMatrix<f64>, tol: f64) -> Vec<DVector<f64>> {
    let n = m.ncols();
    // pad to square so V^T is n x n even for wide inputs
    let square = if m.nrows() < n {
        let mut padded = DMatrix::zeros(n, n);
        padded.view_mut((0, 0), (m.nrows(), n)).copy_from(m);
        padded
    } else {
        m.clone()
    };
    let svd = square.svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    (0..v_t.nrows())
        .filter(|&i| svd.singular_values[i] <= tol)
        .map(|i| v_t.row(i).transpose())
        .collect()
}

/// Minimum-norm least-squares solution of `a x = b` and the residual norm.
pub(crate) fn least_squares(a: &DMatrix<f64>, b: &DVector<f64>) -> (DVector<f64>, f64) {
    let svd = a.clone().svd(true, true);
    let max_sv = svd.singular_values.max();
    let eps = (max_sv * 1e-12).max(f64::MIN_POSITIVE);
    let x = svd.solve(b, eps).expect("U and V^T computed");
    let residual = (a * &x - b).norm();
    (x, residual)
}
