//! Submodules of `(Z/N)^m` in Howell form, and kernels of matrices mod `N`
//! by diagonalization.

use num_integer::Integer;

use super::ring::{xgcd, Scalar};

/// A submodule of `(Z/N)^m` held in Howell form: rows in echelon order, each
/// pivot a divisor of `N`, entries above a pivot reduced modulo it, and the
/// rows with zeros in the first `c` columns spanning every module element
/// with that property. Two modules are equal iff their forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HowellModule {
    modulus: u64,
    ambient: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl HowellModule {
    pub fn from_generators(modulus: u64, ambient: usize, gens: &[Vec<u64>]) -> HowellModule {
        let rows: Vec<Vec<u64>> = gens.iter().map(|g| g.iter().map(|&x| x % modulus).collect()).collect();
        let (rows, pivots) = howell_form(rows, ambient, modulus);
        HowellModule { modulus, ambient, rows, pivots }
    }

    pub fn zero(modulus: u64, ambient: usize) -> HowellModule {
        HowellModule { modulus, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(modulus: u64, ambient: usize) -> HowellModule {
        let gens: Vec<Vec<u64>> =
            (0..ambient).map(|i| (0..ambient).map(|j| u64::from(i == j)).collect()).collect();
        HowellModule::from_generators(modulus, ambient, &gens)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// The Howell-form rows.
    pub fn generators(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn generator_scalars(&self) -> Vec<Vec<Scalar>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::Residue(x as u32)).collect())
            .collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Additive orders `N / pivot` of the generators' pivot entries.
    fn radices(&self) -> Vec<u64> {
        self.rows.iter().zip(&self.pivots).map(|(r, &p)| self.modulus / r[p]).collect()
    }

    /// Number of elements of the module.
    pub fn size(&self) -> u128 {
        self.radices().iter().map(|&r| r as u128).product()
    }

    /// True iff the module is free with a basis of `rank` elements, i.e. it
    /// has `rank` generators whose pivots are units.
    pub fn is_free_of_rank(&self, rank: usize) -> bool {
        self.rows.len() == rank && self.rows.iter().zip(&self.pivots).all(|(r, &p)| r[p] == 1)
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let n = self.modulus;
        let mut rest: Vec<u64> = v.iter().map(|&x| x % n).collect();
        let mut p_iter = self.rows.iter().zip(&self.pivots).peekable();
        for c in 0..self.ambient {
            if rest[c] == 0 {
                continue;
            }
            while p_iter.peek().is_some_and(|(_, &p)| p < c) {
                p_iter.next();
            }
            let Some((row, &p)) = p_iter.peek() else {
                return false;
            };
            if p != c || rest[c] % row[c] != 0 {
                return false;
            }
            let f = rest[c] / row[c];
            for j in c..self.ambient {
                rest[j] = (rest[j] + n - (f * row[j]) % n) % n;
            }
        }
        true
    }

    pub fn contains_scalars(&self, v: &[Scalar]) -> bool {
        let codes: Option<Vec<u64>> = v.iter().map(|a| a.code().map(|c| c as u64)).collect();
        codes.is_some_and(|c| self.contains(&c))
    }

    pub fn contains_module(&self, other: &HowellModule) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Enumerates every element exactly once, as `sum c_i g_i` with
    /// `0 <= c_i < N / pivot_i`.
    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        let radices = self.radices();
        let total = self.size();
        let n = self.modulus;
        (0..total).map(move |mut idx| {
            let mut v = vec![0u64; self.ambient];
            for (row, &r) in self.rows.iter().zip(&radices) {
                let c = (idx % r as u128) as u64;
                idx /= r as u128;
                if c != 0 {
                    for (x, &g) in v.iter_mut().zip(row) {
                        *x = (*x + c * g) % n;
                    }
                }
            }
            v
        })
    }

    pub fn sum(&self, other: &HowellModule) -> HowellModule {
        let mut gens = self.rows.clone();
        gens.extend(other.rows.iter().cloned());
        HowellModule::from_generators(self.modulus, self.ambient, &gens)
    }
}

fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// `(s*x + t*y) mod n` for signed coefficients.
fn lin(s: i128, x: u64, t: i128, y: u64, n: u64) -> u64 {
    let n = n as i128;
    ((s.rem_euclid(n) * x as i128 + t.rem_euclid(n) * y as i128) % n) as u64
}

/// A unit `u` mod `n` with `u * a = gcd(a, n)` mod `n`.
pub(crate) fn normalizing_unit(a: u64, n: u64) -> u64 {
    let g = a.gcd(&n);
    if g == n {
        return 1;
    }
    let m = n / g;
    let (_, inv, _) = xgcd((a / g) as i128, m as i128);
    let mut u = inv.rem_euclid(m as i128) as u64;
    while u.gcd(&n) != 1 {
        u += m;
    }
    u
}

/// Howell form of the row span; returns nonzero rows and their pivot columns.
pub(crate) fn howell_form(mut rows: Vec<Vec<u64>>, cols: usize, n: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows.len() {
            break;
        }
        // Gather the gcd of column c into row r.
        for i in r + 1..rows.len() {
            let b = rows[i][c];
            if b == 0 {
                continue;
            }
            let a = rows[r][c];
            let (g, s, t) = xgcd(a as i128, b as i128);
            let (x, y) = (a as i128 / g, b as i128 / g);
            for j in c..cols {
                let (u, v) = (rows[r][j], rows[i][j]);
                rows[r][j] = lin(s, u, t, v, n);
                rows[i][j] = lin(y, u, -x, v, n);
            }
        }
        let a = rows[r][c];
        if a == 0 {
            continue;
        }
        let unit = normalizing_unit(a, n);
        for j in c..cols {
            rows[r][j] = mulmod(rows[r][j], unit, n);
        }
        let d = rows[r][c];
        if d != 1 {
            let k = n / d;
            let sat: Vec<u64> = rows[r].iter().map(|&x| mulmod(x, k, n)).collect();
            if sat.iter().any(|&x| x != 0) {
                rows.push(sat);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    for (i, &p) in pivots.iter().enumerate() {
        let d = rows[i][p];
        for j in 0..i {
            let f = rows[j][p] / d;
            if f == 0 {
                continue;
            }
            for col in p..cols {
                let t = mulmod(f, rows[i][col], n);
                rows[j][col] = (rows[j][col] + n - t) % n;
            }
        }
    }
    (rows, pivots)
}

/// Right kernel of `m` (entries already reduced mod `n`): diagonalize
/// `U M V = D` by unimodular row and column operations, read the kernel of
/// `D` off its diagonal, map it back through `V`, and take the Howell form.
pub fn kernel_mod_n(m: &[Vec<u64>], cols: usize, n: u64) -> HowellModule {
    let (diag, v) = diagonalize(m, cols, n);
    let mut gens = Vec::with_capacity(cols);
    for t in 0..cols {
        let scale = match diag.get(t) {
            Some(&d) => n / d,
            None => 1,
        };
        let g: Vec<u64> = (0..cols).map(|i| mulmod(v[i][t], scale, n)).collect();
        gens.push(g);
    }
    HowellModule::from_generators(n, cols, &gens)
}

/// Diagonal entries (each a divisor of `n`, all nonzero) and the column
/// transform `V` with `U M V` diagonal.
pub(crate) fn diagonalize(m: &[Vec<u64>], cols: usize, n: u64) -> (Vec<u64>, Vec<Vec<u64>>) {
    let mut a: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|&x| x % n).collect()).collect();
    let rows = a.len();
    let mut v: Vec<Vec<u64>> = (0..cols).map(|i| (0..cols).map(|j| u64::from(i == j)).collect()).collect();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // Pivot: the entry generating the largest ideal, first in scan order.
        let mut best: Option<(u64, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 {
                    let g = x.gcd(&n);
                    if best.map_or(true, |(bg, _, _)| g < bg) {
                        best = Some((g, i, j));
                    }
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        for row in v.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let unit = normalizing_unit(a[t][t], n);
            for x in a[t].iter_mut() {
                *x = mulmod(*x, unit, n);
            }
            let mut changed = false;
            for i in t + 1..rows {
                let b = a[i][t];
                if b == 0 {
                    continue;
                }
                let d = a[t][t];
                if b % d == 0 {
                    let f = b / d;
                    for j in t..cols {
                        let s = mulmod(f, a[t][j], n);
                        a[i][j] = (a[i][j] + n - s) % n;
                    }
                } else {
                    let (g, s, tt) = xgcd(d as i128, b as i128);
                    let (x, y) = (d as i128 / g, b as i128 / g);
                    for j in t..cols {
                        let (u, w) = (a[t][j], a[i][j]);
                        a[t][j] = lin(s, u, tt, w, n);
                        a[i][j] = lin(y, u, -x, w, n);
                    }
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            for j in t + 1..cols {
                let b = a[t][j];
                if b == 0 {
                    continue;
                }
                let d = a[t][t];
                if b % d == 0 {
                    let f = b / d;
                    for i in t..rows {
                        let s = mulmod(f, a[i][t], n);
                        a[i][j] = (a[i][j] + n - s) % n;
                    }
                    for row in v.iter_mut() {
                        let s = mulmod(f, row[t], n);
                        row[j] = (row[j] + n - s) % n;
                    }
                } else {
                    let (g, s, tt) = xgcd(d as i128, b as i128);
                    let (x, y) = (d as i128 / g, b as i128 / g);
                    for i in t..rows {
                        let (u, w) = (a[i][t], a[i][j]);
                        a[i][t] = lin(s, u, tt, w, n);
                        a[i][j] = lin(y, u, -x, w, n);
                    }
                    for row in v.iter_mut() {
                        let (u, w) = (row[t], row[j]);
                        row[t] = lin(s, u, tt, w, n);
                        row[j] = lin(y, u, -x, w, n);
                    }
                    changed = true;
                }
            }
            if !changed && (t + 1..rows).all(|i| a[i][t] == 0) {
                break;
            }
        }
        // Column normalization of the pivot to a divisor of n keeps V exact.
        let d = a[t][t];
        debug_assert!(d != 0 && n % d == 0);
        diag.push(d);
    }
    (diag, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_kernel(m: &[Vec<u64>], cols: usize, n: u64) -> Vec<Vec<u64>> {
        let total = n.pow(cols as u32);
        (0..total)
            .map(|mut idx| {
                (0..cols)
                    .map(|_| {
                        let x = idx % n;
                        idx /= n;
                        x
                    })
                    .collect::<Vec<u64>>()
            })
            .filter(|x| m.iter().all(|r| r.iter().zip(x).map(|(a, b)| a * b).sum::<u64>() % n == 0))
            .collect()
    }

    #[test]
    fn kernel_matches_brute_force() {
        let cases: Vec<(Vec<Vec<u64>>, usize, u64)> = vec![
            (vec![vec![2]], 1, 6),
            (vec![vec![2, 3], vec![4, 0]], 2, 12),
            (vec![vec![1, 1, 2], vec![0, 2, 2]], 3, 4),
            (vec![vec![3, 6, 9]], 3, 12),
            (vec![vec![0, 0]], 2, 4),
            (vec![vec![5, 10, 4], vec![2, 2, 2]], 3, 20),
        ];
        for (m, cols, n) in cases {
            let k = kernel_mod_n(&m, cols, n);
            let brute = brute_kernel(&m, cols, n);
            assert_eq!(k.size(), brute.len() as u128, "{m:?} mod {n}");
            for x in &brute {
                assert!(k.contains(x));
            }
            let mut elems: Vec<Vec<u64>> = k.elements().collect();
            elems.sort();
            elems.dedup();
            assert_eq!(elems.len(), brute.len());
        }
    }

    #[test]
    fn howell_form_is_idempotent_and_canonical() {
        let a = HowellModule::from_generators(4, 3, &[vec![2, 0, 2], vec![0, 2, 2]]);
        let b = HowellModule::from_generators(4, 3, &[vec![2, 2, 0], vec![0, 2, 2], vec![2, 0, 2]]);
        assert_eq!(a, b);
        let again = HowellModule::from_generators(4, 3, a.generators());
        assert_eq!(a, again);
    }

    #[test]
    fn saturation_row_appears() {
        // Span of (2, 1) mod 4 contains (0, 2) = 2*(2,1), which needs its own row.
        let m = HowellModule::from_generators(4, 2, &[vec![2, 1]]);
        assert_eq!(m.generators(), &[vec![2, 1], vec![0, 2]]);
        assert!(m.contains(&[0, 2]));
        assert_eq!(m.size(), 4);
    }

    #[test]
    fn unit_normalization() {
        for n in 2..40u64 {
            for a in 1..n {
                let u = normalizing_unit(a, n);
                assert_eq!(u.gcd(&n), 1);
                assert_eq!(a * u % n, a.gcd(&n) % n);
            }
        }
    }
}
