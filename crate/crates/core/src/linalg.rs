//! Small dense real linear algebra on top of nalgebra: rank-revealing
//! nullspaces, orthonormal ranges and restricted symmetric eigensolves.

use nalgebra::{DMatrix, DVector, SymmetricEigen};

/// Orthonormal basis (as columns) of the nullspace of `m`, using the SVD.
///
/// A right singular vector belongs to the nullspace when its singular value
/// is below `threshold`. Also returns all singular values, ascending.
pub fn nullspace(m: &DMatrix<f64>, threshold: f64) -> (DMatrix<f64>, Vec<f64>) {
    let svd = m.clone().svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&i, &j| svd.singular_values[i].total_cmp(&svd.singular_values[j]));
    let keep: Vec<usize> = order
        .iter()
        .copied()
        .filter(|&i| svd.singular_values[i] < threshold)
        .collect();
    let mut basis = DMatrix::zeros(m.ncols(), keep.len());
    for (col, &i) in keep.iter().enumerate() {
        basis.set_column(col, &v_t.row(i).transpose());
    }
    let sv = order.iter().map(|&i| svd.singular_values[i]).collect();
    (basis, sv)
}

/// Orthonormal basis of the column space of `m`, keeping directions whose
/// singular value exceeds `threshold`.
pub fn orthonormal_range(m: &DMatrix<f64>, threshold: f64) -> DMatrix<f64> {
    if m.ncols() == 0 {
        return DMatrix::zeros(m.nrows(), 0);
    }
    let svd = m.clone().svd(true, false);
    let u = svd.u.expect("left singular vectors requested");
    let keep: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&i| svd.singular_values[i] > threshold)
        .collect();
    let mut basis = DMatrix::zeros(m.nrows(), keep.len());
    for (col, &i) in keep.iter().enumerate() {
        basis.set_column(col, &u.column(i));
    }
    basis
}

/// Numerical rank: singular values above `rel_tol` times the largest.
pub fn rank(m: &DMatrix<f64>, rel_tol: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = m.singular_values();
    let max = sv.max();
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * max).count()
}

/// Eigen-decomposition of `basisᵀ m basis` for symmetric `m`, ascending.
///
/// Eigenvectors are returned in ambient coordinates.
pub fn restricted_symmetric_eigen(
    m: &DMatrix<f64>,
    basis: &DMatrix<f64>,
) -> Vec<(f64, DVector<f64>)> {
    let reduced = basis.transpose() * m * basis;
    let reduced = (&reduced + reduced.transpose()) * 0.5;
    let eig = SymmetricEigen::new(reduced);
    let mut pairs: Vec<(f64, DVector<f64>)> = (0..eig.eigenvalues.len())
        .map(|i| (eig.eigenvalues[i], basis * eig.eigenvectors.column(i)))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    pairs
}

/// Groups ascending values whose neighbours differ by less than
/// `rel_gap · max(1, |x|)`. Returns (mean, count) per cluster.
pub fn cluster(values: &[f64], rel_gap: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, Vec<f64>)> = Vec::new();
    for &x in values {
        match out.last_mut() {
            Some((_, group)) if (x - group[group.len() - 1]).abs() < rel_gap * x.abs().max(1.0) => {
                group.push(x)
            }
            _ => out.push((x, vec![x])),
        }
    }
    out.into_iter()
        .map(|(_, g)| (g.iter().sum::<f64>() / g.len() as f64, g.len()))
        .collect()
}
