//! Dense complex linear algebra specialized to tensor products of small
//! local Hilbert spaces.
//!
//! Everything here is plain `Vec<Complex64>` storage in row-major order;
//! dimensions stay below 2^8 so O(D^3) algorithms are used throughout. All
//! functions are pure and safe to call concurrently.

mod bipartition;
mod eigen;
mod pauli;

pub use bipartition::Bipartition;
pub use eigen::hermitian_eigen;
pub use pauli::{pauli_decompose, pauli_string_matrix, Pauli, PauliString};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative tolerance for the Hermiticity check of [`HermitianOperator`].
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Dense complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Complex64::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::ONE);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Projector |u><v| scaled by `scale`.
    pub fn outer(u: &[Complex64], v: &[Complex64], scale: Complex64) -> Self {
        let mut m = Self::zeros(u.len(), v.len());
        for i in 0..u.len() {
            for j in 0..v.len() {
                m.set(i, j, scale * u[i] * v[j].conj());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn add_at(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.cols + j] += v;
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension("matrix addition shape mismatch".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension("matrix subtraction shape mismatch".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "matmul shape mismatch: {}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == Complex64::ZERO {
                    continue;
                }
                let orow = k * other.cols;
                let drow = i * other.cols;
                for j in 0..other.cols {
                    out.data[drow + j] += a * other.data[orow + j];
                }
            }
        }
        Ok(out)
    }

    pub fn dagger(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Complex64::conj).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest |A[i][j] - conj(A[j][i])| over all entries.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    /// Largest |Im A[i][j]| over all entries.
    pub fn max_imag(&self) -> f64 {
        self.data.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }

    /// Matrix-vector product A v.
    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.cols {
            return Err(Error::Dimension("matvec shape mismatch".into()));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, x)| a * x).sum())
            .collect())
    }

    /// <u| A |v>.
    pub fn sandwich(&self, u: &[Complex64], v: &[Complex64]) -> Result<Complex64> {
        let av = self.apply(v)?;
        Ok(inner(u, &av))
    }
}

/// Kronecker product a (x) b.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let av = a.get(i, j);
            if av == Complex64::ZERO {
                continue;
            }
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    out.set(i * b.rows() + k, j * b.cols() + l, av * b.get(k, l));
                }
            }
        }
    }
    out
}

/// <u|v> with the physics convention (conjugate on the left argument).
pub fn inner(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

pub fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn normalize(v: &mut [Complex64]) {
    let n = norm(v);
    if n > 0.0 {
        for z in v {
            *z /= n;
        }
    }
}

/// Tensor product of state vectors, left factor most significant.
pub fn tensor(u: &[Complex64], v: &[Complex64]) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(u.len() * v.len());
    for a in u {
        for b in v {
            out.push(a * b);
        }
    }
    out
}

/// Reorders the tensor factors of an n-qubit state vector.
///
/// `perm[k]` is the source qubit that ends up at position `k` of the output.
pub fn permute_qubits(v: &[Complex64], perm: &[usize]) -> Vec<Complex64> {
    let n = perm.len();
    assert_eq!(v.len(), 1 << n, "state length must be 2^n");
    let mut out = vec![Complex64::ZERO; v.len()];
    for (x, amp) in v.iter().enumerate() {
        let mut y = 0usize;
        for (k, &src) in perm.iter().enumerate() {
            let bit = (x >> (n - 1 - src)) & 1;
            y |= bit << (n - 1 - k);
        }
        out[y] = *amp;
    }
    out
}

/// Hermitian operator on a tensor product of local spaces.
///
/// `dims` lists the local dimensions left to right; subsystem 0 is the
/// leftmost factor, i.e. the most significant digit of a basis index.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianOperator {
    dims: Vec<usize>,
    matrix: ComplexMatrix,
}

impl HermitianOperator {
    pub fn new(dims: Vec<usize>, matrix: ComplexMatrix) -> Result<Self> {
        let d: usize = dims.iter().product();
        if dims.is_empty() || dims.iter().any(|&x| x == 0) {
            return Err(Error::Dimension("empty or zero local dimension".into()));
        }
        if !matrix.is_square() || matrix.rows() != d {
            return Err(Error::Dimension(format!(
                "matrix is {}x{} but product of dims is {}",
                matrix.rows(),
                matrix.cols(),
                d
            )));
        }
        let dev = matrix.hermiticity_deviation();
        if dev > HERMITICITY_TOL * (1.0 + matrix.max_abs()) {
            return Err(Error::NotHermitian { deviation: dev });
        }
        Ok(Self { dims, matrix })
    }

    /// n-qubit constructor.
    pub fn qubits(n: usize, matrix: ComplexMatrix) -> Result<Self> {
        Self::new(vec![2; n], matrix)
    }

    pub fn zero(dims: Vec<usize>) -> Self {
        let d = dims.iter().product();
        Self { dims, matrix: ComplexMatrix::zeros(d, d) }
    }

    pub fn identity(dims: Vec<usize>) -> Self {
        let d = dims.iter().product();
        Self { dims, matrix: ComplexMatrix::identity(d) }
    }

    /// Projector |psi><psi| on n qubits.
    pub fn projector(psi: &[Complex64]) -> Result<Self> {
        let n = psi.len().trailing_zeros() as usize;
        if psi.len() != 1 << n {
            return Err(Error::Dimension("state length must be 2^n".into()));
        }
        Self::qubits(n, ComplexMatrix::outer(psi, psi, Complex64::ONE))
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn n_subsystems(&self) -> usize {
        self.dims.len()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    pub fn max_abs(&self) -> f64 {
        self.matrix.max_abs()
    }

    /// True when every entry is real within `tol`.
    pub fn is_real(&self, tol: f64) -> bool {
        self.matrix.max_imag() <= tol
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_dims(other)?;
        Ok(Self { dims: self.dims.clone(), matrix: self.matrix.add(&other.matrix)? })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_dims(other)?;
        Ok(Self { dims: self.dims.clone(), matrix: self.matrix.sub(&other.matrix)? })
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { dims: self.dims.clone(), matrix: self.matrix.scale_re(s) }
    }

    /// tr(A B), real for Hermitian inputs.
    pub fn hs_inner(&self, other: &Self) -> Result<f64> {
        self.check_same_dims(other)?;
        let mut acc = Complex64::ZERO;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                acc += self.matrix.get(i, j) * other.matrix.get(j, i);
            }
        }
        Ok(acc.re)
    }

    /// <psi| A |psi>.
    pub fn expectation(&self, psi: &[Complex64]) -> Result<f64> {
        Ok(self.matrix.sandwich(psi, psi)?.re)
    }

    fn check_same_dims(&self, other: &Self) -> Result<()> {
        if self.dims != other.dims {
            return Err(Error::Dimension("operator subsystem dimensions differ".into()));
        }
        Ok(())
    }

    /// Digit decomposition of a flat index, subsystem 0 most significant.
    fn digits(&self, mut x: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for (k, &d) in self.dims.iter().enumerate().rev() {
            out[k] = x % d;
            x /= d;
        }
        out
    }

    fn flat(&self, digits: &[usize]) -> usize {
        let mut x = 0;
        for (k, &d) in self.dims.iter().enumerate() {
            x = x * d + digits[k];
        }
        x
    }

    /// Partial transpose over the subsystems in `m`, in the computational
    /// product basis. The output stays Hermitian.
    pub fn partial_transpose(&self, m: &Bipartition) -> Result<Self> {
        if m.n() != self.dims.len() {
            return Err(Error::Dimension(format!(
                "bipartition is over {} subsystems, operator has {}",
                m.n(),
                self.dims.len()
            )));
        }
        self.partial_transpose_set(m.members())
    }

    /// Partial transpose over an explicit subsystem index set.
    pub fn partial_transpose_set(&self, members: &[usize]) -> Result<Self> {
        if members.iter().any(|&q| q >= self.dims.len()) {
            return Err(Error::Dimension("transpose subsystem out of range".into()));
        }
        let d = self.dim();
        let mut out = ComplexMatrix::zeros(d, d);
        if self.dims.iter().all(|&x| x == 2) {
            // Qubit fast path: swap the M bits of row and column index.
            let n = self.dims.len();
            let mut mask = 0usize;
            for &q in members {
                mask |= 1 << (n - 1 - q);
            }
            for r in 0..d {
                for c in 0..d {
                    let rs = (r & !mask) | (c & mask);
                    let cs = (c & !mask) | (r & mask);
                    out.set(r, c, self.matrix.get(rs, cs));
                }
            }
        } else {
            for r in 0..d {
                let rd = self.digits(r);
                for c in 0..d {
                    let cd = self.digits(c);
                    let mut rs = rd.clone();
                    let mut cs = cd.clone();
                    for &q in members {
                        rs[q] = cd[q];
                        cs[q] = rd[q];
                    }
                    out.set(r, c, self.matrix.get(self.flat(&rs), self.flat(&cs)));
                }
            }
        }
        Ok(Self { dims: self.dims.clone(), matrix: out })
    }

    /// Trace over the complement of `keep`; the trace is preserved.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<Self> {
        let n = self.dims.len();
        if keep.iter().any(|&q| q >= n) {
            return Err(Error::Dimension("kept subsystem out of range".into()));
        }
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let drop: Vec<usize> = (0..n).filter(|q| !keep.contains(q)).collect();
        let kd: Vec<usize> = keep.iter().map(|&q| self.dims[q]).collect();
        let dd: Vec<usize> = drop.iter().map(|&q| self.dims[q]).collect();
        let dout: usize = kd.iter().product();
        let denv: usize = dd.iter().product();
        let mut out = ComplexMatrix::zeros(dout, dout);

        let expand = |sub: usize, dims: &[usize]| -> Vec<usize> {
            let mut x = sub;
            let mut out = vec![0; dims.len()];
            for (k, &d) in dims.iter().enumerate().rev() {
                out[k] = x % d;
                x /= d;
            }
            out
        };

        for a in 0..dout {
            let ad = expand(a, &kd);
            for b in 0..dout {
                let bd = expand(b, &kd);
                let mut acc = Complex64::ZERO;
                for e in 0..denv {
                    let ed = expand(e, &dd);
                    let mut rd = vec![0; n];
                    let mut cd = vec![0; n];
                    for (k, &q) in keep.iter().enumerate() {
                        rd[q] = ad[k];
                        cd[q] = bd[k];
                    }
                    for (k, &q) in drop.iter().enumerate() {
                        rd[q] = ed[k];
                        cd[q] = ed[k];
                    }
                    acc += self.matrix.get(self.flat(&rd), self.flat(&cd));
                }
                out.set(a, b, acc);
            }
        }
        Ok(Self { dims: kd, matrix: out })
    }

    /// Eigenvalues ascending with orthonormal eigenvector columns.
    pub fn eigen(&self) -> Result<(Vec<f64>, ComplexMatrix)> {
        hermitian_eigen(self)
    }

    /// Smallest eigenvalue. Real-valued operators take a faster path.
    pub fn min_eigenvalue(&self) -> Result<f64> {
        let scale = self.matrix.max_abs();
        if self.is_real(HERMITICITY_TOL * (1.0 + scale)) {
            let d = self.dim();
            let mut m = crate::sdp::dense::RealMatrix::zeros(d, d);
            for i in 0..d {
                for j in 0..d {
                    m.set(i, j, 0.5 * (self.matrix.get(i, j).re + self.matrix.get(j, i).re));
                }
            }
            let eigs = m.jacobi_eigenvalues();
            Ok(eigs.into_iter().fold(f64::INFINITY, f64::min))
        } else {
            let (eigs, _) = self.eigen()?;
            Ok(eigs[0])
        }
    }
}

/// Schmidt coefficients of a pure n-qubit state across `m`, descending.
///
/// The coefficients are the singular values of the amplitude matrix obtained
/// by grouping the M qubits as row index and the rest as column index; they
/// satisfy sum of squares = 1 and are symmetric under M <-> complement.
pub fn schmidt_coefficients(psi: &[Complex64], m: &Bipartition) -> Result<Vec<f64>> {
    let n = m.n();
    if psi.len() != 1 << n {
        return Err(Error::Dimension("state length must be 2^n".into()));
    }
    let nrm = norm(psi);
    if (nrm - 1.0).abs() > 1e-10 {
        return Err(Error::NotNormalized { norm: nrm });
    }
    let rows_q = m.members();
    let cols_q = m.complement();
    let dr = 1 << rows_q.len();
    let dc = 1 << cols_q.len();
    let mut amp = ComplexMatrix::zeros(dr, dc);
    for (x, a) in psi.iter().enumerate() {
        let mut r = 0usize;
        for (k, &q) in rows_q.iter().enumerate() {
            r |= ((x >> (n - 1 - q)) & 1) << (rows_q.len() - 1 - k);
        }
        let mut c = 0usize;
        for (k, &q) in cols_q.iter().enumerate() {
            c |= ((x >> (n - 1 - q)) & 1) << (cols_q.len() - 1 - k);
        }
        amp.set(r, c, *a);
    }
    // Gram matrix A A^dag is Hermitian PSD with eigenvalues lambda_i^2.
    let small = dr.min(dc);
    let gram = if dr <= dc {
        amp.matmul(&amp.dagger())?
    } else {
        amp.dagger().matmul(&amp)?
    };
    let herm = HermitianOperator::new(vec![gram.rows()], symmetrize(&gram))?;
    let (eigs, _) = herm.eigen()?;
    let mut coeffs: Vec<f64> = eigs.into_iter().rev().take(small).map(|l| l.max(0.0).sqrt()).collect();
    coeffs.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(coeffs)
}

/// (A + A^dag)/2, used to clean numerically Hermitian products.
pub fn symmetrize(a: &ComplexMatrix) -> ComplexMatrix {
    let mut out = a.clone();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let v = (a.get(i, j) + a.get(j, i).conj()) * 0.5;
            out.set(i, j, v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::pauli::pauli_string_matrix;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn bell_phi_plus() -> Vec<Complex64> {
        let s = 1.0 / 2.0f64.sqrt();
        vec![c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0)]
    }

    #[test]
    fn kron_identity_and_diagonal() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(kron(&i2, &i2), ComplexMatrix::identity(4));

        let z = pauli_string_matrix(&PauliString::parse("Z").unwrap()).unwrap();
        let zz = kron(z.matrix(), z.matrix());
        let expect = [1.0, -1.0, -1.0, 1.0];
        for (i, e) in expect.iter().enumerate() {
            assert!((zz.get(i, i) - c(*e, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn kron_xz_matches_hand_expansion() {
        let x = pauli_string_matrix(&PauliString::parse("X").unwrap()).unwrap();
        let z = pauli_string_matrix(&PauliString::parse("Z").unwrap()).unwrap();
        let xz = kron(x.matrix(), z.matrix());
        let via_string = pauli_string_matrix(&PauliString::parse("XZ").unwrap()).unwrap();
        // X (x) Z = [[0, Z], [Z, 0]]
        let mut hand = ComplexMatrix::zeros(4, 4);
        hand.set(0, 2, c(1.0, 0.0));
        hand.set(1, 3, c(-1.0, 0.0));
        hand.set(2, 0, c(1.0, 0.0));
        hand.set(3, 1, c(-1.0, 0.0));
        for i in 0..4 {
            for j in 0..4 {
                assert!((xz.get(i, j) - hand.get(i, j)).norm() < 1e-15);
                assert!((via_string.matrix().get(i, j) - hand.get(i, j)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn partial_transpose_is_involution() {
        let rho = HermitianOperator::projector(&bell_phi_plus()).unwrap();
        let m = Bipartition::new(2, vec![0]).unwrap();
        let back = rho.partial_transpose(&m).unwrap().partial_transpose(&m).unwrap();
        assert!(back.sub(&rho).unwrap().max_abs() < 1e-15);
    }

    #[test]
    fn partial_transpose_fixes_real_product_states() {
        // sigma (x) tau with real factors is invariant under every partial transpose.
        let sigma = ComplexMatrix::from_rows(vec![
            vec![c(0.7, 0.0), c(0.3, 0.0)],
            vec![c(0.3, 0.0), c(0.3, 0.0)],
        ])
        .unwrap();
        let tau = ComplexMatrix::from_rows(vec![
            vec![c(0.5, 0.0), c(0.1, 0.0)],
            vec![c(0.1, 0.0), c(0.5, 0.0)],
        ])
        .unwrap();
        let prod = HermitianOperator::qubits(2, kron(&sigma, &tau)).unwrap();
        for members in [vec![0], vec![1]] {
            let m = Bipartition::new(2, members).unwrap();
            let pt = prod.partial_transpose(&m).unwrap();
            assert!(pt.sub(&prod).unwrap().max_abs() < 1e-15);
        }
    }

    #[test]
    fn partial_transpose_bell_min_eig() {
        // Closed-form spectrum of the partially transposed Bell projector:
        // {1/2, 1/2, 1/2, -1/2}.
        let rho = HermitianOperator::projector(&bell_phi_plus()).unwrap();
        let m = Bipartition::new(2, vec![0]).unwrap();
        let pt = rho.partial_transpose(&m).unwrap();
        let (eigs, _) = pt.eigen().unwrap();
        assert!((eigs[0] + 0.5).abs() < 1e-12);
        for e in &eigs[1..] {
            assert!((e - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn partial_transpose_commutes_on_disjoint_sets() {
        let psi = crate::states::ghz(3).unwrap();
        let rho = HermitianOperator::projector(&psi).unwrap();
        let a = rho.partial_transpose_set(&[0]).unwrap().partial_transpose_set(&[2]).unwrap();
        let b = rho.partial_transpose_set(&[2]).unwrap().partial_transpose_set(&[0]).unwrap();
        assert!(a.sub(&b).unwrap().max_abs() < 1e-15);
    }

    #[test]
    fn partial_transpose_complement_is_full_transpose() {
        let psi = crate::states::w_state(3).unwrap();
        let mut rho = HermitianOperator::projector(&psi).unwrap();
        // Make it complex to exercise the imaginary parts.
        let y = pauli_string_matrix(&PauliString::parse("YII").unwrap()).unwrap();
        rho = HermitianOperator::qubits(
            3,
            symmetrize(&rho.matrix().add(&y.matrix().scale_re(0.1)).unwrap()),
        )
        .unwrap();
        let m = Bipartition::new(3, vec![0, 2]).unwrap();
        let lhs = rho.partial_transpose(&m).unwrap();
        let rhs = HermitianOperator::qubits(
            3,
            rho.partial_transpose_set(&[1]).unwrap().matrix().transpose(),
        )
        .unwrap();
        assert!(lhs.sub(&rhs).unwrap().max_abs() < 1e-13);
    }

    #[test]
    fn partial_trace_product_and_ghz() {
        let rho = ComplexMatrix::from_rows(vec![
            vec![c(0.8, 0.0), c(0.1, 0.1)],
            vec![c(0.1, -0.1), c(0.2, 0.0)],
        ])
        .unwrap();
        let sigma = ComplexMatrix::from_rows(vec![
            vec![c(0.4, 0.0), c(0.0, 0.2)],
            vec![c(0.0, -0.2), c(0.6, 0.0)],
        ])
        .unwrap();
        let prod = HermitianOperator::qubits(2, kron(&rho, &sigma)).unwrap();
        let red = prod.partial_trace(&[0]).unwrap();
        // tr(sigma) = 1 so the reduction returns rho itself.
        for i in 0..2 {
            for j in 0..2 {
                assert!((red.matrix().get(i, j) - rho.get(i, j)).norm() < 1e-14);
            }
        }
        assert!((red.trace() - prod.trace()).abs() < 1e-14);

        let ghz = crate::states::ghz(3).unwrap();
        let g = HermitianOperator::projector(&ghz).unwrap();
        let r0 = g.partial_trace(&[0]).unwrap();
        assert!((r0.matrix().get(0, 0).re - 0.5).abs() < 1e-14);
        assert!((r0.matrix().get(1, 1).re - 0.5).abs() < 1e-14);
        assert!(r0.matrix().get(0, 1).norm() < 1e-14);
    }

    #[test]
    fn spectra_of_pt_share_trace() {
        let psi = crate::states::w_state(3).unwrap();
        let rho = HermitianOperator::projector(&psi).unwrap();
        let m = Bipartition::new(3, vec![0, 1]).unwrap();
        let (e1, _) = rho.eigen().unwrap();
        let (e2, _) = rho.partial_transpose(&m).unwrap().eigen().unwrap();
        let s1: f64 = e1.iter().sum();
        let s2: f64 = e2.iter().sum();
        assert!((s1 - rho.trace()).abs() < 1e-12);
        assert!((s2 - rho.trace()).abs() < 1e-12);
    }

    #[test]
    fn schmidt_bell_product_and_cluster() {
        let m = Bipartition::new(2, vec![0]).unwrap();
        let coeffs = schmidt_coefficients(&bell_phi_plus(), &m).unwrap();
        let s = 1.0 / 2.0f64.sqrt();
        assert!((coeffs[0] - s).abs() < 1e-12 && (coeffs[1] - s).abs() < 1e-12);

        let mut zero3 = vec![Complex64::ZERO; 8];
        zero3[0] = Complex64::ONE;
        for members in [vec![0], vec![0, 1], vec![0, 2]] {
            let m = Bipartition::new(3, members).unwrap();
            let coeffs = schmidt_coefficients(&zero3, &m).unwrap();
            assert!((coeffs[0] - 1.0).abs() < 1e-12);
            for c in &coeffs[1..] {
                assert!(c.abs() < 1e-10);
            }
        }

        // Linear cluster of 4 across {0,1} | {2,3}: four equal coefficients 1/2.
        // Oracle: eigenvalues of the reduced state (independent of the
        // amplitude-matrix reshape path).
        let (cl4, _) = crate::states::linear_cluster(4).unwrap();
        let m = Bipartition::new(4, vec![0, 1]).unwrap();
        let coeffs = schmidt_coefficients(&cl4, &m).unwrap();
        for l in &coeffs {
            assert!((l - 0.5).abs() < 1e-10, "coefficient {l}");
        }
        let red = HermitianOperator::projector(&cl4).unwrap().partial_trace(&[0, 1]).unwrap();
        let (eigs, _) = red.eigen().unwrap();
        let mut oracle: Vec<f64> = eigs.iter().map(|l| l.max(0.0).sqrt()).collect();
        oracle.reverse();
        for (a, b) in coeffs.iter().zip(&oracle) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn schmidt_symmetric_under_complement() {
        let psi = crate::states::dicke(4, 2).unwrap();
        let m = Bipartition::new(4, vec![0, 3]).unwrap();
        let mc = Bipartition::new(4, m.complement()).unwrap();
        let a = schmidt_coefficients(&psi, &m).unwrap();
        let b = schmidt_coefficients(&psi, &mc).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-10);
        }
    }

    #[test]
    fn schmidt_rejects_unnormalized() {
        let v = vec![c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        let m = Bipartition::new(2, vec![0]).unwrap();
        assert!(matches!(schmidt_coefficients(&v, &m), Err(Error::NotNormalized { .. })));
    }

    #[test]
    fn hermitian_constructor_rejects_non_hermitian() {
        let mut m = ComplexMatrix::identity(2);
        m.set(0, 1, c(0.5, 0.0));
        assert!(matches!(HermitianOperator::qubits(1, m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn permute_qubits_roundtrip() {
        let psi = crate::states::w_state(3).unwrap();
        let p = permute_qubits(&psi, &[1, 2, 0]);
        let q = permute_qubits(&p, &[2, 0, 1]);
        for (a, b) in psi.iter().zip(&q) {
            assert!((a - b).norm() < 1e-15);
        }
    }
}
