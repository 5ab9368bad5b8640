//! Small dense vector/matrix helpers for dimensions up to four.
//!
//! Points are plain `&[f64]` slices; matrices are row-major `Vec<f64>`.
//! Nothing here is tuned for large dimensions.

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[f64], c: f64) -> Vec<f64> {
    a.iter().map(|x| c * x).collect()
}

pub fn axpy(y: &mut [f64], c: f64, x: &[f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += c * xi;
    }
}

pub fn normalize(a: &[f64]) -> Vec<f64> {
    let n = norm(a);
    assert!(n > 0.0, "cannot normalize a zero vector");
    scale(a, 1.0 / n)
}

/// Orthonormal basis of the complement of the unit vector `u`, computed from
/// the Householder reflection that maps `e_last` to `u`. Deterministic in `u`.
///
/// Returns `d - 1` vectors, each orthogonal to `u` and mutually orthonormal.
pub fn complement_basis(u: &[f64]) -> Vec<Vec<f64>> {
    let d = u.len();
    if d == 1 {
        return Vec::new();
    }
    // Householder vector v = u + sign * e_last, reflection H = I - 2 v v^T / (v·v)
    // maps u to -sign*e_last; the images H e_0, ..., H e_{d-2} are orthonormal
    // and orthogonal to u. v·v = 2(1 + |u_last|) never degenerates.
    let sign = if u[d - 1] >= 0.0 { 1.0 } else { -1.0 };
    let mut v = u.to_vec();
    v[d - 1] += sign;
    let vv = dot(&v, &v);
    let mut basis = Vec::with_capacity(d - 1);
    for k in 0..d - 1 {
        let mut e = vec![0.0; d];
        e[k] = 1.0;
        axpy(&mut e, -2.0 * v[k] / vv, &v);
        basis.push(e);
    }
    basis
}

/// Symmetric d-by-d matrix in row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMat {
    pub d: usize,
    pub data: Vec<f64>,
}

impl SymMat {
    pub fn zeros(d: usize) -> Self {
        SymMat {
            d,
            data: vec![0.0; d * d],
        }
    }

    pub fn from_rows(d: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), d * d);
        SymMat { d, data }
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.d + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.d + j] = v;
    }

    /// x^T M y
    pub fn quad_form(&self, x: &[f64], y: &[f64]) -> f64 {
        let mut s = 0.0;
        for i in 0..self.d {
            for j in 0..self.d {
                s += x[i] * self.get(i, j) * y[j];
            }
        }
        s
    }

    pub fn trace(&self) -> f64 {
        (0..self.d).map(|i| self.get(i, i)).sum()
    }

    pub fn max_asymmetry(&self) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..self.d {
            for j in 0..i {
                m = m.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        m
    }

    /// Averages M and its transpose in place.
    pub fn symmetrize(&mut self) {
        for i in 0..self.d {
            for j in 0..i {
                let v = 0.5 * (self.get(i, j) + self.get(j, i));
                self.set(i, j, v);
                self.set(j, i, v);
            }
        }
    }
}

/// Pairwise summation over `terms` in their given order. The tree shape is a
/// function of the length alone, so equal inputs give bitwise-equal sums.
pub fn pairwise_sum(terms: &[f64]) -> f64 {
    match terms.len() {
        0 => 0.0,
        1 => terms[0],
        2 => terms[0] + terms[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&terms[..mid]) + pairwise_sum(&terms[mid..])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn complement_basis_is_orthonormal() {
        for u in [
            vec![0.0, 1.0],
            vec![1.0, 0.0],
            vec![-1.0, 0.0],
            vec![0.6, -0.8],
            vec![1.0 / 3.0_f64.sqrt(); 3],
            vec![0.5, -0.5, 0.5, -0.5],
        ] {
            let u = normalize(&u);
            let basis = complement_basis(&u);
            assert_eq!(basis.len(), u.len() - 1);
            for (i, e) in basis.iter().enumerate() {
                assert_abs_diff_eq!(norm(e), 1.0, epsilon = 1e-12);
                assert_abs_diff_eq!(dot(e, &u), 0.0, epsilon = 1e-12);
                for f in &basis[..i] {
                    assert_abs_diff_eq!(dot(e, f), 0.0, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn pairwise_sum_matches_naive() {
        let xs: Vec<f64> = (0..101).map(|i| (i as f64).sin()).collect();
        let naive: f64 = xs.iter().sum();
        assert_abs_diff_eq!(pairwise_sum(&xs), naive, epsilon = 1e-12);
        assert_eq!(pairwise_sum(&[]), 0.0);
    }

    #[test]
    fn quad_form_basic() {
        let m = SymMat::from_rows(2, vec![2.0, 1.0, 1.0, 3.0]);
        assert_abs_diff_eq!(m.quad_form(&[1.0, 1.0], &[1.0, 1.0]), 7.0);
        assert_abs_diff_eq!(m.trace(), 5.0);
    }
}
