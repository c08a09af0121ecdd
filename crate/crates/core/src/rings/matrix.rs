use std::fmt;

use super::howell::HowellModule;
use super::ring::{Ring, Scalar};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`Ring`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.ring)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|a| self.ring.format_scalar(a)).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Kernel of a matrix: a subspace over a field, a Howell-form module over `Z/N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kernel {
    Field(Subspace),
    ModN(HowellModule),
}

impl Kernel {
    pub fn contains(&self, v: &[Scalar]) -> bool {
        match self {
            Kernel::Field(s) => s.contains(v),
            Kernel::ModN(m) => m.contains_scalars(v),
        }
    }

    /// Generators as scalar vectors (an echelon basis over a field).
    pub fn generators(&self) -> Vec<Vec<Scalar>> {
        match self {
            Kernel::Field(s) => s.basis().to_vec(),
            Kernel::ModN(m) => m.generator_scalars(),
        }
    }

    /// Dimension over a field; `None` over `Z/N`.
    pub fn dim(&self) -> Option<usize> {
        match self {
            Kernel::Field(s) => Some(s.dim()),
            Kernel::ModN(_) => None,
        }
    }
}

impl Matrix {
    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Matrix {
        Matrix { ring: ring.clone(), rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &Ring, n: usize) -> Matrix {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed for the empty case.
    pub fn from_rows(ring: &Ring, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::Length { expected: cols, got: r.len() });
            }
            ring.check(&r)?;
            data.extend(r);
        }
        Ok(Matrix { ring: ring.clone(), rows: nrows, cols, data })
    }

    pub fn from_i64(ring: &Ring, rows: &[Vec<i64>]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows.iter().flat_map(|r| r.iter().map(|&v| ring.from_i64(v))).collect();
        Matrix { ring: ring.clone(), rows: rows.len(), cols, data }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.ring, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::Length { expected: self.cols, got: v.len() });
        }
        let ring = &self.ring;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(ring.zero(), |acc, (a, b)| ring.add(&acc, &ring.mul(a, b)))
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| self.ring.is_zero(a))
    }

    fn require_field(&self, op: &'static str) -> Result<()> {
        if self.ring.is_field() {
            Ok(())
        } else {
            Err(Error::NotAField { op, ring: self.ring.to_string() })
        }
    }

    /// Reduced row echelon form and pivot columns. Pivots are taken in the
    /// leftmost column with a nonzero entry, using the topmost such row.
    pub fn rref(&self) -> Result<(Matrix, Vec<usize>)> {
        self.require_field("row reduction")?;
        let mut m = self.clone();
        let pivots = rref_in_place(&self.ring, &mut m.data, m.rows, m.cols);
        Ok((m, pivots))
    }

    pub fn rank_field(&self) -> Result<usize> {
        Ok(self.rref()?.1.len())
    }

    /// Right null space over a field, as a subspace with reduced echelon basis.
    pub fn kernel_field(&self) -> Result<Subspace> {
        let (r, pivots) = self.rref()?;
        let ring = &self.ring;
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![ring.zero(); self.cols];
            v[free] = ring.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = ring.neg(r.get(i, free));
            }
            basis.push(v);
        }
        Subspace::from_spanning(ring, self.cols, basis)
    }

    /// Right kernel `{x : Mx = 0}` over `Z/N`, in Howell form.
    pub fn kernel_mod_n(&self) -> Result<HowellModule> {
        let n = self.ring.residue_modulus().ok_or(Error::Unsupported {
            op: "kernel mod N",
            ring: self.ring.to_string(),
        })?;
        let rows: Vec<Vec<u64>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(|a| a.code().unwrap_or(0) as u64).collect())
            .collect();
        Ok(super::howell::kernel_mod_n(&rows, self.cols, n))
    }

    /// Kernel by the appropriate route for the ring.
    pub fn kernel(&self) -> Result<Kernel> {
        match self.ring.spec() {
            super::RingSpec::IntegersMod { .. } if !self.ring.is_field() => {
                Ok(Kernel::ModN(self.kernel_mod_n()?))
            }
            _ => Ok(Kernel::Field(self.kernel_field()?)),
        }
    }
}

/// In-place RREF over a field on a row-major buffer; returns pivot columns.
pub(crate) fn rref_in_place(ring: &Ring, data: &mut [Scalar], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !ring.is_zero(&data[i * cols + c])) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = ring.inv(&data[r * cols + c]).expect("nonzero element of a field");
        for j in c..cols {
            data[r * cols + j] = ring.mul(&data[r * cols + j], &inv);
        }
        for i in 0..rows {
            if i == r || ring.is_zero(&data[i * cols + c]) {
                continue;
            }
            let f = data[i * cols + c].clone();
            for j in c..cols {
                let t = ring.mul(&f, &data[r * cols + j]);
                data[i * cols + j] = ring.sub(&data[i * cols + j], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::make_ring;

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let f = make_ring("F3").unwrap();
        let k = Matrix::zeros(&f, 2, 3).kernel_field().unwrap();
        assert_eq!(k.dim(), 3);
    }

    #[test]
    fn one_by_one_mod_6() {
        // Oracle: solve 2x = 0 mod 6 by trying every x.
        let sols: Vec<i64> = (0..6).filter(|x| (2 * x) % 6 == 0).collect();
        assert_eq!(sols, vec![0, 3]);
        let z6 = make_ring("Z6").unwrap();
        let k = Matrix::from_i64(&z6, &[vec![2]]).kernel_mod_n().unwrap();
        assert_eq!(k.generators(), &[vec![3]]);
    }

    #[test]
    fn zero_matrix_mod_4_is_free() {
        let z4 = make_ring("Z4").unwrap();
        let k = Matrix::zeros(&z4, 1, 2).kernel_mod_n().unwrap();
        assert_eq!(k.size(), 16);
    }

    #[test]
    fn rational_rank() {
        let q = make_ring("Q").unwrap();
        let m = Matrix::from_i64(&q, &[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank_field().unwrap(), 2);
        let k = m.kernel_field().unwrap();
        assert_eq!(k.dim(), 1);
        for v in k.basis() {
            assert!(m.mul_vec(v).unwrap().iter().all(|a| q.is_zero(a)));
        }
    }

    #[test]
    fn rref_refuses_non_fields() {
        let z4 = make_ring("Z4").unwrap();
        assert!(Matrix::zeros(&z4, 1, 1).rref().is_err());
    }
}
