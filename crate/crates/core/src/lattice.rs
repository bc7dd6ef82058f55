//! Exact integer linear algebra.
//!
//! Everything here works over `i64` with checked arithmetic: an operation that
//! would leave the machine range fails with [`Error::Overflow`] instead of
//! wrapping. The matrices that occur in practice are tiny, so no attempt is
//! made to be clever about growth.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{self, Error, Result};

/// Dense, row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    /// Builds a matrix from its rows. Every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != cols {
                return Err(Error::Ragged {
                    row,
                    expected: cols,
                    found: entries.len(),
                });
            }
            data.extend_from_slice(entries);
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
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

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    /// First off-diagonal position where `self[(i, j)] != self[(j, i)]`.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return None;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self[(i, j)] != self[(j, i)] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && self.asymmetry().is_none()
    }

    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = 0i64;
                for k in 0..self.cols {
                    let term = error::mul(self[(i, k)], rhs[(k, j)], "matrix product")?;
                    acc = error::add(acc, term, "matrix product")?;
                }
                out[(i, j)] = acc;
            }
        }
        Ok(out)
    }

    pub fn checked_mul_vec(&self, v: &[i64]) -> Result<Vec<i64>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).try_fold(0i64, |acc, (&a, &b)| {
                    error::add(
                        acc,
                        error::mul(a, b, "matrix-vector product")?,
                        "matrix-vector product",
                    )
                })
            })
            .collect()
    }

    pub fn checked_neg(&self) -> Result<IntMatrix> {
        let data = self
            .data
            .iter()
            .map(|&x| error::neg(x, "negation"))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { data, ..*self })
    }

    /// `vᵀ · self · v` for a square matrix.
    pub fn quadratic_value(&self, v: &[i64]) -> Result<i64> {
        let mv = self.checked_mul_vec(v)?;
        v.iter().zip(&mv).try_fold(0i64, |acc, (&a, &b)| {
            error::add(acc, error::mul(a, b, "quadratic form")?, "quadratic form")
        })
    }

    /// Block-diagonal matrix with the given square blocks in order.
    pub fn block_diagonal(blocks: &[&IntMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)];
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Sub-matrix on rows `r0..r0+rows` and columns `c0..c0+cols`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut out = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out[(i, j)] = self[(r0 + i, c0 + j)];
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<i64> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(1);
        }
        let mut a: Vec<i128> = self.data.iter().map(|&x| x as i128).collect();
        let at = |i: usize, j: usize| i * n + j;
        let mut sign = 1i128;
        let mut prev = 1i128;
        let overflow = || Error::Overflow("determinant");
        for k in 0..n - 1 {
            if a[at(k, k)] == 0 {
                let Some(swap) = (k + 1..n).find(|&i| a[at(i, k)] != 0) else {
                    return Ok(0);
                };
                for j in 0..n {
                    a.swap(at(k, j), at(swap, j));
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let lhs = a[at(i, j)].checked_mul(a[at(k, k)]).ok_or_else(overflow)?;
                    let rhs = a[at(i, k)].checked_mul(a[at(k, j)]).ok_or_else(overflow)?;
                    a[at(i, j)] = lhs.checked_sub(rhs).ok_or_else(overflow)? / prev;
                }
            }
            prev = a[at(k, k)];
        }
        i64::try_from(sign * a[at(n - 1, n - 1)]).map_err(|_| overflow())
    }

    /// `|det| = 1`, decided exactly even when the entries are too large for
    /// fraction-free elimination: the determinant is reduced modulo enough
    /// primes that their product exceeds twice the Hadamard bound, and
    /// `det ≡ ±1` modulo every one of them pins it to `±1`.
    pub fn is_unimodular(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.rows;
        if n == 0 {
            return true;
        }
        // log2 of the Hadamard bound, padded for rounding.
        let log_bound: f64 = (0..n)
            .map(|i| {
                let norm2: f64 = self.row(i).iter().map(|&x| (x as f64) * (x as f64)).sum();
                0.5 * norm2.max(1.0).log2()
            })
            .sum::<f64>()
            + 2.0;
        let mut covered = 0.0;
        let mut residue_sign: Option<bool> = None;
        for &p in word_primes() {
            let det = self.determinant_mod(p);
            let plus = match det {
                1 => true,
                d if d == p - 1 => false,
                _ => return false,
            };
            if *residue_sign.get_or_insert(plus) != plus {
                return false;
            }
            covered += (p as f64).log2();
            if covered > log_bound {
                return true;
            }
        }
        false
    }

    fn determinant_mod(&self, p: u64) -> u64 {
        let n = self.rows;
        let mut a: Vec<u64> = self
            .data
            .iter()
            .map(|&x| x.rem_euclid(p as i64) as u64)
            .collect();
        let mut det = 1u64;
        for k in 0..n {
            let Some(piv) = (k..n).find(|&i| a[i * n + k] != 0) else {
                return 0;
            };
            if piv != k {
                for j in 0..n {
                    a.swap(k * n + j, piv * n + j);
                }
                det = p - det;
            }
            let pivot = a[k * n + k];
            det = det * pivot % p;
            let inv = pow_mod(pivot, p - 2, p);
            for i in k + 1..n {
                let f = a[i * n + k] * inv % p;
                if f == 0 {
                    continue;
                }
                for j in k..n {
                    let sub = f * a[k * n + j] % p;
                    a[i * n + j] = (a[i * n + j] + p - sub) % p;
                }
            }
        }
        det % p
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: i64) -> Result<()> {
        for j in 0..self.cols {
            let t = error::mul(factor, self[(src, j)], "row operation")?;
            self[(dst, j)] = error::add(self[(dst, j)], t, "row operation")?;
        }
        Ok(())
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: i64) -> Result<()> {
        for i in 0..self.rows {
            let t = error::mul(factor, self[(i, src)], "column operation")?;
            self[(i, dst)] = error::add(self[(i, dst)], t, "column operation")?;
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) -> Result<()> {
        for j in 0..self.cols {
            self[(i, j)] = error::neg(self[(i, j)], "row negation")?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl TryFrom<Vec<Vec<i64>>> for IntMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        Self::from_rows(rows)
    }
}

impl From<IntMatrix> for Vec<Vec<i64>> {
    fn from(m: IntMatrix) -> Self {
        m.to_rows()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Certificate `u · source · v = diagonal` with `u`, `v` unimodular.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub source_dims: (usize, usize),
}

impl SmithDecomposition {
    /// Diagonal entries `d₁ | d₂ | …`, zeros last.
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)])
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|&&x| x != 0).count()
    }

    /// Checks every invariant of the decomposition against `source`.
    pub fn verify(&self, source: &IntMatrix) -> bool {
        let Some((uav, _, _)) =
            wide_mul(&widen(&self.u), source).and_then(|ua| wide_mul(&ua, &self.v))
        else {
            return false;
        };
        let matches = uav.len() == self.d.data.len()
            && uav.iter().zip(&self.d.data).all(|(&x, &y)| x == y as i128);
        if !matches || !self.u.is_unimodular() || !self.v.is_unimodular() {
            return false;
        }
        for i in 0..self.d.rows() {
            for j in 0..self.d.cols() {
                if i != j && self.d[(i, j)] != 0 {
                    return false;
                }
            }
        }
        let diag = self.diagonal();
        if diag.iter().any(|&x| x < 0) {
            return false;
        }
        diag.windows(2).all(|w| match (w[0], w[1]) {
            (0, b) => b == 0,
            (a, b) => b % a == 0,
        })
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Descending primes below 2³¹, so products of residues fit in a `u64`.
fn word_primes() -> &'static [u64] {
    static PRIMES: std::sync::OnceLock<Vec<u64>> = std::sync::OnceLock::new();
    PRIMES.get_or_init(|| {
        let is_prime = |n: u64| {
            (2..)
                .take_while(|d| d * d <= n)
                .all(|d| !n.is_multiple_of(d))
        };
        (1u64 << 20..1u64 << 31)
            .rev()
            .filter(|&n| n % 2 == 1 && is_prime(n))
            .take(64)
            .collect()
    })
}

/// `a / b` rounded to the nearest integer, so the remainder is at most `|b|/2`.
fn nearest_quotient(a: i64, b: i64) -> i64 {
    let (q, r) = (a / b, a % b);
    if r != 0 && 2 * r.unsigned_abs() > b.unsigned_abs() {
        if (r < 0) == (b < 0) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// `i128` matrix, row-major, with its shape.
type WideMatrix = (Vec<i128>, usize, usize);

fn widen(a: &IntMatrix) -> WideMatrix {
    (a.data.iter().map(|&x| x as i128).collect(), a.rows, a.cols)
}

/// `a · b` in `i128`; `None` on overflow or shape mismatch.
fn wide_mul((a, rows, cols): &WideMatrix, b: &IntMatrix) -> Option<WideMatrix> {
    let (rows, cols) = (*rows, *cols);
    if cols != b.rows {
        return None;
    }
    let mut out = vec![0i128; rows * b.cols];
    for i in 0..rows {
        for j in 0..b.cols {
            let mut acc = 0i128;
            for k in 0..cols {
                acc = acc.checked_add(a[i * cols + k].checked_mul(b[(k, j)] as i128)?)?;
            }
            out[i * b.cols + j] = acc;
        }
    }
    Some((out, rows, b.cols))
}

fn min_nonzero(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(u64, usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = d[(i, j)].unsigned_abs();
            if x != 0 && best.is_none_or(|(b, _, _)| x < b) {
                best = Some((x, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Smith normal form by unimodular row and column elimination.
///
/// The pivot is always a nonzero entry of least absolute value in the
/// remaining block, ties going to the lowest `(row, col)`, so the output is
/// a deterministic function of the input.
pub fn smith_normal_form(a: &IntMatrix) -> Result<SmithDecomposition> {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    'outer: for t in 0..m.min(n) {
        loop {
            let Some((pr, pc)) = min_nonzero(&d, t) else {
                break 'outer;
            };
            d.swap_rows(t, pr);
            u.swap_rows(t, pr);
            d.swap_cols(t, pc);
            v.swap_cols(t, pc);

            let p = d[(t, t)];
            let mut clean = true;
            for i in t + 1..m {
                let q = nearest_quotient(d[(i, t)], p);
                if q != 0 {
                    d.add_row_multiple(i, t, -q)?;
                    u.add_row_multiple(i, t, -q)?;
                }
                clean &= d[(i, t)] == 0;
            }
            for j in t + 1..n {
                let q = nearest_quotient(d[(t, j)], p);
                if q != 0 {
                    d.add_col_multiple(j, t, -q)?;
                    v.add_col_multiple(j, t, -q)?;
                }
                clean &= d[(t, j)] == 0;
            }
            if !clean {
                continue;
            }

            // Pivot must divide the rest of the block; otherwise fold the
            // offending row into row t and reduce again.
            let offending = (t + 1..m).find(|&i| (t + 1..n).any(|j| d[(i, j)] % p != 0));
            match offending {
                Some(i) => {
                    d.add_row_multiple(t, i, 1)?;
                    u.add_row_multiple(t, i, 1)?;
                }
                None => break,
            }
        }
        if d[(t, t)] < 0 {
            d.negate_row(t)?;
            u.negate_row(t)?;
        }
    }

    Ok(SmithDecomposition {
        u,
        d,
        v,
        source_dims: (m, n),
    })
}

/// Finitely generated abelian group `Z^free_rank ⊕ Z/t₁ ⊕ … ⊕ Z/t_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroupInvariants {
    pub torsion: Vec<i64>,
    pub free_rank: usize,
}

impl AbelianGroupInvariants {
    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroupInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// Invariants of `Zⁿ / A·Zⁿ` for a square matrix `A`.
pub fn cokernel_invariants(a: &IntMatrix) -> Result<AbelianGroupInvariants> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let snf = smith_normal_form(a)?;
    let diag = snf.diagonal();
    Ok(AbelianGroupInvariants {
        torsion: diag.iter().copied().filter(|&x| x >= 2).collect(),
        free_rank: diag.iter().filter(|&&x| x == 0).count(),
    })
}

/// An integral class in the first homology of a closed genus-g surface,
/// written in a symplectic basis `(a₁, b₁, a₂, b₂, …)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct HomologyClass {
    coords: Vec<i64>,
}

impl HomologyClass {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() || !coords.len().is_multiple_of(2) {
            return Err(Error::OddDimension(coords.len()));
        }
        Ok(Self { coords })
    }

    pub fn genus1(m: i64, n: i64) -> Self {
        Self { coords: vec![m, n] }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn genus(&self) -> usize {
        self.coords.len() / 2
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&x| x == 0)
    }

    /// Largest absolute coordinate.
    pub fn sup_norm(&self) -> u64 {
        self.coords
            .iter()
            .map(|x| x.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    pub fn checked_neg(&self) -> Result<Self> {
        let coords = self
            .coords
            .iter()
            .map(|&x| error::neg(x, "class negation"))
            .collect::<Result<_>>()?;
        Ok(Self { coords })
    }

    /// Representative of `±self` whose first nonzero coordinate is positive.
    pub fn normalized(&self) -> Result<Self> {
        match self.coords.iter().find(|&&x| x != 0) {
            Some(&x) if x < 0 => self.checked_neg(),
            _ => Ok(self.clone()),
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.coords.iter().find(|&&x| x != 0).is_none_or(|&x| x > 0)
    }
}

impl TryFrom<Vec<i64>> for HomologyClass {
    type Error = Error;

    fn try_from(coords: Vec<i64>) -> Result<Self> {
        Self::new(coords)
    }
}

impl From<HomologyClass> for Vec<i64> {
    fn from(c: HomologyClass) -> Self {
        c.coords
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The standard intersection form `J` on `Z^{2g}`: on each genus-one block
/// `aᵢ · bᵢ = 1`, i.e. the block is `[[0, 1], [-1, 0]]`.
pub fn standard_symplectic(genus: usize) -> IntMatrix {
    let mut j = IntMatrix::zeros(2 * genus, 2 * genus);
    for k in 0..genus {
        j[(2 * k, 2 * k + 1)] = 1;
        j[(2 * k + 1, 2 * k)] = -1;
    }
    j
}

fn check_even(dim: usize) -> Result<()> {
    if dim == 0 || !dim.is_multiple_of(2) {
        Err(Error::OddDimension(dim))
    } else {
        Ok(())
    }
}

/// Algebraic intersection number `xᵀ J y`.
pub fn symplectic_pairing(x: &HomologyClass, y: &HomologyClass) -> Result<i64> {
    pairing_raw(x.coords(), y.coords())
}

pub(crate) fn pairing_raw(x: &[i64], y: &[i64]) -> Result<i64> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            expected: x.len(),
            found: y.len(),
        });
    }
    check_even(x.len())?;
    let mut acc = 0i64;
    for k in (0..x.len()).step_by(2) {
        let plus = error::mul(x[k], y[k + 1], "pairing")?;
        let minus = error::mul(x[k + 1], y[k], "pairing")?;
        acc = error::add(acc, error::sub(plus, minus, "pairing")?, "pairing")?;
    }
    Ok(acc)
}

/// `Mᵀ J M == J`.
pub fn is_symplectic(m: &IntMatrix) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    check_even(m.rows())?;
    let j = standard_symplectic(m.rows() / 2);
    let mtjm = m.transpose().checked_mul(&j)?.checked_mul(m)?;
    Ok(mtjm == j)
}

/// Inverse of a symplectic matrix, `J⁻¹ Mᵀ J = -J Mᵀ J`.
pub fn symplectic_inverse(m: &IntMatrix) -> Result<IntMatrix> {
    if !is_symplectic(m)? {
        return Err(Error::NotSymplectic);
    }
    let j = standard_symplectic(m.rows() / 2);
    j.checked_neg()?
        .checked_mul(&m.transpose())?
        .checked_mul(&j)
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn coords_gcd(coords: &[i64]) -> u64 {
    coords.iter().fold(0, |g, &x| gcd(g, x.unsigned_abs()))
}

/// True iff the coordinates are coprime. The zero class is not primitive.
pub fn is_primitive(x: &HomologyClass) -> bool {
    coords_gcd(x.coords()) == 1
}
