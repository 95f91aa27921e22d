//! Dense matrices of polynomials: determinants, minors, and symbolic rank.
//!
//! Rank is certified in two directions: a witness minor found by modular
//! evaluation is recomputed symbolically, and the vanishing of all larger
//! minors is proved either by exhaustive symbolic expansion or by exact
//! evaluation on an interpolation-sufficient grid.

use itertools::Itertools;
use num::{BigRational, Zero};

use super::{mulmod, PolyError, Polynomial};

/// Prime used for randomized evaluation; small enough that products fit
/// comfortably in u128.
const EVAL_PRIME: u64 = 2147483647;

/// Minor-count threshold between symbolic and grid-evaluation proofs of
/// the rank upper bound.
const SYMBOLIC_MINOR_LIMIT: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self, PolyError> {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        let nvars = entries
            .first()
            .map(Polynomial::nvars)
            .unwrap_or(0);
        for e in &entries {
            if e.nvars() != nvars {
                return Err(PolyError::DimensionMismatch(nvars, e.nvars()));
            }
        }
        Ok(PolyMatrix { rows, cols, nvars, entries })
    }

    pub fn zero(rows: usize, cols: usize, nvars: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            nvars,
            entries: vec![Polynomial::zero(nvars); rows * cols],
        }
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        let mut m = PolyMatrix::zero(n, n, nvars);
        for i in 0..n {
            *m.entry_mut(i, i) = Polynomial::one(nvars);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row * self.cols + col]
    }

    pub fn entry_mut(&mut self, row: usize, col: usize) -> &mut Polynomial {
        &mut self.entries[row * self.cols + col]
    }

    pub fn entries(&self) -> impl Iterator<Item = &Polynomial> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        if self.cols != other.rows {
            return Err(PolyError::SizeMismatch(self.cols, other.rows));
        }
        if self.nvars != other.nvars {
            return Err(PolyError::DimensionMismatch(self.nvars, other.nvars));
        }
        let mut out = PolyMatrix::zero(self.rows, other.cols, self.nvars);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(self.nvars);
                for k in 0..self.cols {
                    let a = self.entry(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = other.entry(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b)?)?;
                }
                *out.entry_mut(i, j) = acc;
            }
        }
        Ok(out)
    }

    /// Exact determinant by cofactor expansion along the sparsest row or
    /// column (entries in this toolkit are monomials or binomials, so the
    /// expansion stays small).
    pub fn determinant(&self) -> Result<Polynomial, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let all_rows: Vec<usize> = (0..self.rows).collect();
        let all_cols: Vec<usize> = (0..self.cols).collect();
        Ok(self.det_recursive(&all_rows, &all_cols))
    }

    fn det_recursive(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        let n = rows.len();
        if n == 0 {
            return Polynomial::one(self.nvars);
        }
        if n == 1 {
            return self.entry(rows[0], cols[0]).clone();
        }
        if n == 2 {
            let a = self.entry(rows[0], cols[0]).mul(self.entry(rows[1], cols[1])).unwrap();
            let b = self.entry(rows[0], cols[1]).mul(self.entry(rows[1], cols[0])).unwrap();
            return a.sub(&b).unwrap();
        }
        // pick the row or column with the most zero entries
        let mut best_is_row = true;
        let mut best_index = 0;
        let mut best_zeros = 0;
        for (ri, &r) in rows.iter().enumerate() {
            let zeros = cols.iter().filter(|&&c| self.entry(r, c).is_zero()).count();
            if zeros > best_zeros {
                best_zeros = zeros;
                best_index = ri;
                best_is_row = true;
            }
        }
        for (ci, &c) in cols.iter().enumerate() {
            let zeros = rows.iter().filter(|&&r| self.entry(r, c).is_zero()).count();
            if zeros > best_zeros {
                best_zeros = zeros;
                best_index = ci;
                best_is_row = false;
            }
        }
        let mut acc = Polynomial::zero(self.nvars);
        if best_is_row {
            let r = rows[best_index];
            let sub_rows: Vec<usize> = rows
                .iter()
                .copied()
                .filter(|&x| x != r)
                .collect();
            for (ci, &c) in cols.iter().enumerate() {
                let e = self.entry(r, c);
                if e.is_zero() {
                    continue;
                }
                let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let cof = self.det_recursive(&sub_rows, &sub_cols);
                let signed = if (best_index + ci) % 2 == 0 { cof } else { cof.neg() };
                acc = acc.add(&e.mul(&signed).unwrap()).unwrap();
            }
        } else {
            let c = cols[best_index];
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            for (ri, &r) in rows.iter().enumerate() {
                let e = self.entry(r, c);
                if e.is_zero() {
                    continue;
                }
                let sub_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
                let cof = self.det_recursive(&sub_rows, &sub_cols);
                let signed = if (ri + best_index) % 2 == 0 { cof } else { cof.neg() };
                acc = acc.add(&e.mul(&signed).unwrap()).unwrap();
            }
        }
        acc
    }

    /// Minor on 1-based row/column index sets (the convention of written
    /// mathematics). Indices are taken in increasing order; the empty
    /// minor is 1.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Polynomial, PolyError> {
        if rows.len() != cols.len() {
            return Err(PolyError::SizeMismatch(rows.len(), cols.len()));
        }
        let mut r0: Vec<usize> = Vec::with_capacity(rows.len());
        for &r in rows {
            if r == 0 || r > self.rows {
                return Err(PolyError::IndexOutOfRange { index: r, dim: self.rows });
            }
            r0.push(r - 1);
        }
        let mut c0: Vec<usize> = Vec::with_capacity(cols.len());
        for &c in cols {
            if c == 0 || c > self.cols {
                return Err(PolyError::IndexOutOfRange { index: c, dim: self.cols });
            }
            c0.push(c - 1);
        }
        r0.sort_unstable();
        c0.sort_unstable();
        Ok(self.det_recursive(&r0, &c0))
    }

    fn minor0(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        self.det_recursive(rows, cols)
    }

    /// Largest entry degree per row summed up: a total-degree bound for
    /// any minor of the matrix.
    fn minor_degree_bound(&self) -> u32 {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .filter_map(|c| self.entry(r, c).total_degree())
                    .max()
                    .unwrap_or(0)
            })
            .sum()
    }

    fn eval_mod_p(&self, point: &[u64], p: u64) -> Option<Vec<Vec<u64>>> {
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for c in 0..self.cols {
                row.push(self.entry(r, c).evaluate_mod_p(point, p)?);
            }
            out.push(row);
        }
        Some(out)
    }

    fn eval_rational(&self, point: &[BigRational]) -> Vec<Vec<BigRational>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.entry(r, c).evaluate(point)).collect())
            .collect()
    }

    /// Symbolic rank: the size of the largest nonzero minor.
    ///
    /// A candidate rank and witness index sets come from Gaussian
    /// elimination modulo a prime at pseudo-random points; the witness
    /// minor is recomputed exactly, and all larger minors are proved zero
    /// (symbolically when few, otherwise on a degree-sufficient grid).
    pub fn rank(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        let max_rank = self.rows.min(self.cols);
        let (mut candidate, mut witness) = self.modular_rank_candidate();
        loop {
            // confirm the witness minor symbolically
            if candidate > 0 {
                let (wr, wc) = &witness;
                let det = self.minor0(wr, wc);
                assert!(
                    !det.is_zero(),
                    "witness minor vanished symbolically; modular evaluation was inconsistent"
                );
            }
            if candidate == max_rank {
                return candidate;
            }
            match self.prove_minors_vanish(candidate + 1) {
                None => return candidate,
                Some((rows, cols)) => {
                    candidate += 1;
                    witness = (rows, cols);
                }
            }
        }
    }

    /// Candidate rank plus pivot row/column sets (0-based) found modulo a
    /// prime at a few deterministic pseudo-random points.
    fn modular_rank_candidate(&self) -> (usize, (Vec<usize>, Vec<usize>)) {
        let p = EVAL_PRIME;
        let mut best = (0usize, (Vec::new(), Vec::new()));
        let mut seed = 0x9e3779b97f4a7c15u64;
        for _ in 0..4 {
            let point: Vec<u64> = (0..self.nvars)
                .map(|_| {
                    seed = splitmix64(seed);
                    1 + seed % (p - 1)
                })
                .collect();
            let Some(matrix) = self.eval_mod_p(&point, p) else {
                continue;
            };
            let (rank, pivot_rows, pivot_cols) = gauss_rank_mod_p(matrix, p);
            if rank > best.0 {
                best = (rank, (pivot_rows, pivot_cols));
            }
        }
        best
    }

    /// Prove every `size`-minor vanishes. Returns `None` on success, or a
    /// witness index pair for some nonzero minor.
    fn prove_minors_vanish(&self, size: usize) -> Option<(Vec<usize>, Vec<usize>)> {
        if size > self.rows.min(self.cols) {
            return None;
        }
        let count = binomial(self.rows, size) * binomial(self.cols, size);
        if count <= SYMBOLIC_MINOR_LIMIT {
            for rows in (0..self.rows).combinations(size) {
                for cols in (0..self.cols).combinations(size) {
                    if !self.minor0(&rows, &cols).is_zero() {
                        return Some((rows, cols));
                    }
                }
            }
            return None;
        }
        // Evaluation proof: every size-minor is a polynomial whose degree
        // in each variable is at most the global minor degree bound, so
        // vanishing on the full grid {0..bound}^nvars forces it to be zero.
        let bound = self.minor_degree_bound() as u64;
        let mut grid_point = vec![0u64; self.nvars];
        loop {
            let point: Vec<BigRational> = grid_point
                .iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect();
            let matrix = self.eval_rational(&point);
            let (rank, pivot_rows, pivot_cols) = gauss_rank_rational(matrix);
            if rank >= size {
                // an evaluation of rank >= size pinpoints a nonzero minor
                let rows = pivot_rows[..size].to_vec();
                let cols = pivot_cols[..size].to_vec();
                let mut rows_sorted = rows.clone();
                let mut cols_sorted = cols.clone();
                rows_sorted.sort_unstable();
                cols_sorted.sort_unstable();
                if !self.minor0(&rows_sorted, &cols_sorted).is_zero() {
                    return Some((rows_sorted, cols_sorted));
                }
                // pivot set evaluated nonzero, so this cannot happen
                unreachable!("rational evaluation rank exceeded symbolic rank");
            }
            // advance odometer
            let mut i = 0;
            loop {
                if i == self.nvars {
                    return None;
                }
                grid_point[i] += 1;
                if grid_point[i] <= bound {
                    break;
                }
                grid_point[i] = 0;
                i += 1;
            }
        }
    }

    /// All `r x r` minors where `r` must equal the rank; identically zero
    /// minors are omitted. Output order is by sorted index sets.
    pub fn maximal_minors(&self, r: usize) -> Result<Vec<Polynomial>, PolyError> {
        let actual = self.rank();
        if r != actual {
            return Err(PolyError::RankMismatch { claimed: r, actual });
        }
        let mut out = Vec::new();
        if r == 0 {
            return Ok(out);
        }
        for rows in (0..self.rows).combinations(r) {
            for cols in (0..self.cols).combinations(r) {
                let det = self.minor0(&rows, &cols);
                if !det.is_zero() {
                    out.push(det);
                }
            }
        }
        Ok(out)
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Gaussian elimination with full pivoting; returns (rank, pivot rows,
/// pivot columns) with 0-based indices.
#[allow(clippy::needless_range_loop)]
fn gauss_rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> (usize, Vec<usize>, Vec<usize>) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut used_rows = vec![false; rows];
    let mut used_cols = vec![false; cols];
    let mut pivot_rows = Vec::new();
    let mut pivot_cols = Vec::new();
    loop {
        let mut pivot = None;
        'search: for r in 0..rows {
            if used_rows[r] {
                continue;
            }
            for c in 0..cols {
                if !used_cols[c] && !m[r][c].is_multiple_of(p) {
                    pivot = Some((r, c));
                    break 'search;
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        used_rows[pr] = true;
        used_cols[pc] = true;
        pivot_rows.push(pr);
        pivot_cols.push(pc);
        let inv = super::modinv(m[pr][pc] % p, p);
        for r in 0..rows {
            if used_rows[r] || m[r][pc].is_multiple_of(p) {
                continue;
            }
            let factor = mulmod(m[r][pc] % p, inv, p);
            for c in 0..cols {
                let delta = mulmod(factor, m[pr][c] % p, p);
                m[r][c] = (m[r][c] + p - delta) % p;
            }
        }
    }
    pivot_rows.sort_unstable();
    pivot_cols.sort_unstable();
    (pivot_rows.len(), pivot_rows, pivot_cols)
}

#[allow(clippy::needless_range_loop)]
fn gauss_rank_rational(mut m: Vec<Vec<BigRational>>) -> (usize, Vec<usize>, Vec<usize>) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut used_rows = vec![false; rows];
    let mut used_cols = vec![false; cols];
    let mut pivot_rows = Vec::new();
    let mut pivot_cols = Vec::new();
    loop {
        let mut pivot = None;
        'search: for r in 0..rows {
            if used_rows[r] {
                continue;
            }
            for c in 0..cols {
                if !used_cols[c] && !m[r][c].is_zero() {
                    pivot = Some((r, c));
                    break 'search;
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        used_rows[pr] = true;
        used_cols[pc] = true;
        pivot_rows.push(pr);
        pivot_cols.push(pc);
        let pivot_value = m[pr][pc].clone();
        for r in 0..rows {
            if used_rows[r] || m[r][pc].is_zero() {
                continue;
            }
            let factor = &m[r][pc] / &pivot_value;
            for c in 0..cols {
                let delta = &factor * &m[pr][c];
                m[r][c] = &m[r][c] - delta;
            }
        }
    }
    (pivot_rows.len(), pivot_rows, pivot_cols)
}

/// Exact rank of a dense rational matrix (rows of coefficient vectors).
pub fn rational_matrix_rank(m: Vec<Vec<BigRational>>) -> usize {
    gauss_rank_rational(m).0
}

/// Leibniz-formula determinant, used only as an independent test oracle.
pub fn determinant_leibniz(m: &PolyMatrix) -> Result<Polynomial, PolyError> {
    if m.rows() != m.cols() {
        return Err(PolyError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let mut acc = Polynomial::zero(m.nvars());
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut product = Polynomial::one(m.nvars());
        let mut zero = false;
        for (r, &c) in perm.iter().enumerate() {
            let e = m.entry(r, c);
            if e.is_zero() {
                zero = true;
                break;
            }
            product = product.mul(e)?;
        }
        if !zero {
            if permutation_sign(&perm) < 0 {
                product = product.neg();
            }
            acc = acc.add(&product)?;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(acc)
}

fn permutation_sign(perm: &[usize]) -> i32 {
    let mut sign = 1;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                sign = -sign;
            }
        }
    }
    sign
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Monomial shorthand used by matrix constructors and tests.
pub fn mono(nvars: usize, powers: &[(usize, u32)]) -> Polynomial {
    Polynomial::monomial(nvars, powers)
}

/// Negated monomial shorthand.
pub fn neg_mono(nvars: usize, powers: &[(usize, u32)]) -> Polynomial {
    Polynomial::monomial(nvars, powers).neg()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_of_identity_and_diagonal() {
        let id = PolyMatrix::identity(3, 3);
        assert_eq!(id.determinant().unwrap(), Polynomial::one(3));

        let mut d = PolyMatrix::zero(3, 3, 3);
        for i in 0..3 {
            *d.entry_mut(i, i) = Polynomial::var(3, i);
        }
        assert_eq!(
            d.determinant().unwrap(),
            mono(3, &[(0, 1), (1, 1), (2, 1)])
        );
    }

    #[test]
    fn empty_minor_is_one() {
        let m = PolyMatrix::zero(2, 3, 2);
        assert_eq!(m.minor(&[], &[]).unwrap(), Polynomial::one(2));
    }

    #[test]
    fn minor_index_errors() {
        let m = PolyMatrix::zero(2, 3, 2);
        assert!(matches!(
            m.minor(&[1, 2], &[1]),
            Err(PolyError::SizeMismatch(2, 1))
        ));
        assert!(matches!(
            m.minor(&[3], &[1]),
            Err(PolyError::IndexOutOfRange { index: 3, dim: 2 })
        ));
        assert!(matches!(
            m.minor(&[0], &[1]),
            Err(PolyError::IndexOutOfRange { index: 0, dim: 2 })
        ));
    }

    #[test]
    fn rank_of_zero_and_diagonal() {
        assert_eq!(PolyMatrix::zero(4, 5, 3).rank(), 0);
        let mut d = PolyMatrix::zero(2, 2, 2);
        *d.entry_mut(0, 0) = Polynomial::var(2, 0);
        *d.entry_mut(1, 1) = Polynomial::var(2, 1);
        assert_eq!(d.rank(), 2);
        assert_eq!(
            d.maximal_minors(2).unwrap(),
            vec![mono(2, &[(0, 1), (1, 1)])]
        );
        assert!(matches!(
            d.maximal_minors(1),
            Err(PolyError::RankMismatch { claimed: 1, actual: 2 })
        ));
    }

    #[test]
    fn rank_detects_dependent_rows() {
        // second row is x1 times the first: rank 1
        let n = 2;
        let m = PolyMatrix::new(
            2,
            2,
            vec![
                mono(n, &[(0, 1)]),
                mono(n, &[(1, 1)]),
                mono(n, &[(0, 2)]),
                mono(n, &[(0, 1), (1, 1)]),
            ],
        )
        .unwrap();
        assert_eq!(m.rank(), 1);
        // entries themselves are the maximal minors of a 1 x n matrix
        let row = PolyMatrix::new(1, 2, vec![mono(n, &[(0, 1)]), mono(n, &[(1, 1)])]).unwrap();
        assert_eq!(row.rank(), 1);
        assert_eq!(row.maximal_minors(1).unwrap().len(), 2);
    }

    #[test]
    fn determinant_matches_leibniz_oracle() {
        // deterministic small matrices with monomial entries
        let n = 3;
        let mut seed = 12345u64;
        for _ in 0..20 {
            let mut entries = Vec::new();
            for _ in 0..9 {
                seed = super::splitmix64(seed);
                let choice = seed % 5;
                let e = match choice {
                    0 => Polynomial::zero(n),
                    1 => Polynomial::one(n),
                    2 => mono(n, &[(0, (seed >> 8) as u32 % 3)]),
                    3 => neg_mono(n, &[(1, 1), (2, (seed >> 8) as u32 % 2)]),
                    _ => mono(n, &[(2, 1)]).sub(&mono(n, &[(0, 1)])).unwrap(),
                };
                entries.push(e);
            }
            let m = PolyMatrix::new(3, 3, entries).unwrap();
            assert_eq!(m.determinant().unwrap(), determinant_leibniz(&m).unwrap());
        }
    }

    #[test]
    fn binomial_counts() {
        assert_eq!(binomial(9, 6), 84);
        assert_eq!(binomial(6, 5), 6);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }
}
