use super::matrix::{rref_in_place, Matrix};
use super::ring::{Ring, Scalar};
use crate::error::{Error, Result};

/// A linear subspace of `F^ambient`, stored as a reduced echelon basis so
/// that equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ring: Ring,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_spanning(ring: &Ring, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Subspace> {
        if !ring.is_field() {
            return Err(Error::NotAField { op: "subspace", ring: ring.to_string() });
        }
        let rows = vectors.len();
        let mut data = Vec::with_capacity(rows * ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::Length { expected: ambient, got: v.len() });
            }
            ring.check(&v)?;
            data.extend(v);
        }
        let pivots = rref_in_place(ring, &mut data, rows, ambient);
        let basis = data.chunks(ambient.max(1)).take(pivots.len()).map(|c| c.to_vec()).collect();
        Ok(Subspace { ring: ring.clone(), ambient, basis, pivots })
    }

    pub fn zero(ring: &Ring, ambient: usize) -> Subspace {
        Subspace { ring: ring.clone(), ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ring: &Ring, ambient: usize) -> Result<Subspace> {
        Subspace::from_spanning(ring, ambient, Matrix::identity(ring, ambient).row_vecs())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if v.len() != self.ambient {
            return None;
        }
        let ring = &self.ring;
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if ring.is_zero(c) {
                continue;
            }
            for (r, x) in rest.iter_mut().zip(b) {
                *r = ring.sub(r, &ring.mul(c, x));
            }
        }
        rest.iter().all(|a| ring.is_zero(a)).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// `sum_i coords[i] * basis[i]`.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let ring = &self.ring;
        let mut v = vec![ring.zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if ring.is_zero(c) {
                continue;
            }
            for (x, y) in v.iter_mut().zip(b) {
                *x = ring.add(x, &ring.mul(c, y));
            }
        }
        v
    }

    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::from_spanning(&self.ring, self.ambient, vs)
    }

    /// `span(v) + self`.
    pub fn join_vector(&self, v: &[Scalar]) -> Result<Subspace> {
        let mut vs = self.basis.clone();
        vs.push(v.to_vec());
        Subspace::from_spanning(&self.ring, self.ambient, vs)
    }

    /// The annihilator `{y : y . x = 0 for all x in self}`.
    pub fn annihilator(&self) -> Result<Subspace> {
        Matrix::from_rows(&self.ring, self.ambient, self.basis.clone())?.kernel_field()
    }

    pub fn meet(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        let mut eqs = self.annihilator()?.basis;
        eqs.extend(other.annihilator()?.basis);
        Matrix::from_rows(&self.ring, self.ambient, eqs)?.kernel_field()
    }

    fn same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Length { expected: self.ambient, got: other.ambient });
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch { ring: self.ring.to_string() });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::make_ring;

    fn v(r: &Ring, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| r.from_i64(x)).collect()
    }

    #[test]
    fn meet_and_join_dimensions() {
        let f = make_ring("F5").unwrap();
        let a = Subspace::from_spanning(&f, 4, vec![v(&f, &[1, 0, 0, 0]), v(&f, &[0, 1, 0, 0])]).unwrap();
        let b = Subspace::from_spanning(&f, 4, vec![v(&f, &[0, 1, 0, 0]), v(&f, &[0, 0, 1, 0])]).unwrap();
        assert_eq!(a.join(&b).unwrap().dim(), 3);
        let m = a.meet(&b).unwrap();
        assert_eq!(m.dim(), 1);
        assert!(m.contains(&v(&f, &[0, 3, 0, 0])));
    }

    #[test]
    fn join_with_member_is_noop() {
        let f = make_ring("F2").unwrap();
        let a = Subspace::from_spanning(&f, 3, vec![v(&f, &[1, 1, 0])]).unwrap();
        assert_eq!(a.join_vector(&v(&f, &[1, 1, 0])).unwrap(), a);
    }

    #[test]
    fn coordinates_roundtrip() {
        let f = make_ring("F7").unwrap();
        let a = Subspace::from_spanning(&f, 3, vec![v(&f, &[1, 2, 3]), v(&f, &[0, 1, 4])]).unwrap();
        let x = a.combine(&v(&f, &[2, 1]));
        assert_eq!(x, v(&f, &[2, 1, 1]));
        assert_eq!(a.coordinates(&x).unwrap(), v(&f, &[2, 1]));
        assert!(!a.contains(&v(&f, &[0, 0, 1])));
    }
}
