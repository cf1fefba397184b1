//! Arbitrary-precision integer matrices, Smith normal form and finitely
//! generated abelian groups.
//!
//! Everything downstream (homology, K-theory, the Gysin solver) reduces to
//! kernels and cokernels of integer matrices, which this module computes
//! exactly via unimodular reduction to Smith normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A dense rectangular matrix over the integers, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut m = Self::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(e));
            }
        }
        m
    }

    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    if !add.is_zero() {
                        let cur = out.get(i, j) + add;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut m = Self::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let add = q * self.get(src, j);
            if !add.is_zero() {
                let cur = self.get(dst, j) + add;
                self.set(dst, j, cur);
            }
        }
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let add = q * self.get(i, src);
            if !add.is_zero() {
                let cur = self.get(i, dst) + add;
                self.set(i, dst, cur);
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j).clone();
            self.set(r, j, v);
        }
    }
}

impl std::fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Smith normal form `U * A * V = S` with `U`, `V` unimodular and `S`
/// diagonal with a positive divisibility chain.
#[derive(Debug, Clone)]
pub struct SNFResult {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SNFResult {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        let n = self.s.rows().min(self.s.cols());
        (0..n).filter(|&i| !self.s.get(i, i).is_zero()).count()
    }

    /// Diagonal entries `d_1 | d_2 | ...` up to the rank.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n)
            .map(|i| self.s.get(i, i).clone())
            .filter(|d| !d.is_zero())
            .collect()
    }
}

/// Locate the entry of smallest nonzero absolute value in the trailing block
/// starting at `(k, k)`, ties broken by lowest `(row, col)`.
fn pivot_position(m: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), &num_bigint::BigUint)> = None;
    for i in k..m.rows() {
        for j in k..m.cols() {
            let v = m.get(i, j);
            if v.is_zero() {
                continue;
            }
            let a = v.magnitude();
            match &best {
                Some((_, b)) if *b <= a => {}
                _ => best = Some(((i, j), a)),
            }
        }
    }
    best.map(|(pos, _)| pos)
}

/// Quotient minimising the absolute remainder `|a - q*d|` (at most `|d|/2`),
/// which keeps the Euclidean elimination from inflating entries.
fn div_rounded(a: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(d);
    if r.magnitude() * 2u32 > *d.magnitude() {
        if (r.is_negative()) == (d.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Compute the Smith normal form of `a`.
///
/// Pivoting is deterministic (smallest absolute value, then lowest
/// position), so the result is reproducible across platforms. The matrix is
/// first diagonalised by Euclidean row/column elimination with
/// minimal-remainder quotients; the divisibility chain is then enforced by
/// local 2x2 repairs on the diagonal, which keeps intermediate entries from
/// the blow-up a trailing-block scan would cause. The transforms are built
/// from elementary operations only, hence unimodular by construction; the
/// identity `U*A*V = S` can be re-checked with [`verify_snf`].
pub fn smith_normal_form(a: &IntMatrix) -> SNFResult {
    let rows = a.rows();
    let cols = a.cols();
    let mut s = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let mut k = 0;
    while k < rows.min(cols) {
        let Some((pi, pj)) = pivot_position(&s, k) else { break };
        s.swap_rows(k, pi);
        u.swap_rows(k, pi);
        s.swap_cols(k, pj);
        v.swap_cols(k, pj);

        loop {
            // Euclidean elimination below the pivot.
            let mut i = k + 1;
            while i < rows {
                if s.get(i, k).is_zero() {
                    i += 1;
                    continue;
                }
                let q = -div_rounded(s.get(i, k), s.get(k, k));
                s.add_row_multiple(i, k, &q);
                u.add_row_multiple(i, k, &q);
                if !s.get(i, k).is_zero() {
                    // remainder is smaller than the pivot; promote it
                    s.swap_rows(i, k);
                    u.swap_rows(i, k);
                } else {
                    i += 1;
                }
            }
            // Same for the pivot row; a column swap here can dirty the
            // column again.
            let mut j = k + 1;
            while j < cols {
                if s.get(k, j).is_zero() {
                    j += 1;
                    continue;
                }
                let q = -div_rounded(s.get(k, j), s.get(k, k));
                s.add_col_multiple(j, k, &q);
                v.add_col_multiple(j, k, &q);
                if !s.get(k, j).is_zero() {
                    s.swap_cols(j, k);
                    v.swap_cols(j, k);
                } else {
                    j += 1;
                }
            }
            if (k + 1..rows).all(|i| s.get(i, k).is_zero()) {
                break;
            }
        }
        k += 1;
    }
    let rank = k;

    // enforce d_1 | d_2 | ... by bubbling local gcd/lcm repairs along the
    // diagonal; each repair only touches the two rows/columns involved
    loop {
        let mut changed = false;
        for i in 0..rank.saturating_sub(1) {
            let di = s.get(i, i);
            if (s.get(i + 1, i + 1) % di).is_zero() {
                continue;
            }
            fix_divisibility_pair(&mut s, &mut u, &mut v, i, i + 1);
            changed = true;
        }
        if !changed {
            break;
        }
    }

    for i in 0..rank {
        if s.get(i, i).is_negative() {
            s.negate_row(i);
            u.negate_row(i);
        }
    }

    let result = SNFResult { u, s, v };
    debug_assert!(verify_snf(a, &result), "SNF postcondition violated");
    result
}

/// Replace the diagonal block `diag(d_i, d_j)` by `diag(gcd, ±lcm)` via
/// elementary operations confined to rows/columns `i` and `j`.
fn fix_divisibility_pair(
    s: &mut IntMatrix,
    u: &mut IntMatrix,
    v: &mut IntMatrix,
    i: usize,
    j: usize,
) {
    let one = BigInt::one();
    s.add_row_multiple(i, j, &one);
    u.add_row_multiple(i, j, &one);
    loop {
        if !s.get(i, j).is_zero() {
            let q = -div_rounded(s.get(i, j), s.get(i, i));
            s.add_col_multiple(j, i, &q);
            v.add_col_multiple(j, i, &q);
            if !s.get(i, j).is_zero() {
                s.swap_cols(i, j);
                v.swap_cols(i, j);
            }
        }
        if !s.get(j, i).is_zero() {
            let q = -div_rounded(s.get(j, i), s.get(i, i));
            s.add_row_multiple(j, i, &q);
            u.add_row_multiple(j, i, &q);
            if !s.get(j, i).is_zero() {
                s.swap_rows(i, j);
                u.swap_rows(i, j);
            }
        }
        if s.get(i, j).is_zero() && s.get(j, i).is_zero() {
            break;
        }
    }
}

/// Re-check the defining identity `U*A*V = S` plus the diagonal shape and
/// divisibility chain. Used by tests and by the certificate machinery.
pub fn verify_snf(a: &IntMatrix, r: &SNFResult) -> bool {
    if r.u.mul(a).mul(&r.v) != r.s {
        return false;
    }
    let n = r.s.rows().min(r.s.cols());
    for i in 0..r.s.rows() {
        for j in 0..r.s.cols() {
            if i != j && !r.s.get(i, j).is_zero() {
                return false;
            }
        }
    }
    let mut seen_zero = false;
    for i in 0..n {
        let d = r.s.get(i, i);
        if d.is_zero() {
            seen_zero = true;
        } else {
            if seen_zero || d.is_negative() {
                return false;
            }
            if i + 1 < n {
                let next = r.s.get(i + 1, i + 1);
                if !next.is_zero() && !(next % d).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// Absolute value of the determinant of a square matrix, via the product of
/// invariant factors (zero when rank-deficient).
pub fn abs_det(a: &IntMatrix) -> BigInt {
    assert_eq!(a.rows(), a.cols(), "determinant of a non-square matrix");
    let snf = smith_normal_form(a);
    if snf.rank() < a.rows() {
        return BigInt::zero();
    }
    snf.invariant_factors().iter().product()
}

/// Basis of the integer kernel lattice of `a`, as vectors in `Z^cols`.
///
/// These are the columns of `V` beyond the rank; since `V` is unimodular
/// they generate the full (saturated) kernel.
pub fn kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    (rank..a.cols()).map(|j| snf.v.column(j)).collect()
}

/// Solve `A x = b` over the integers. Returns `None` when no integer
/// solution exists.
pub fn solve(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len());
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    let c = snf.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        if i < rank {
            let d = snf.s.get(i, i);
            let (q, r) = ci.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(snf.v.mul_vec(&y))
}

/// Does `v` lie in the lattice spanned by the columns of `m`?
pub fn in_column_lattice(m: &IntMatrix, v: &[BigInt]) -> bool {
    solve(m, v).is_some()
}

/// A finitely generated abelian group in invariant-factor form:
/// `Z^rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_t` with `d_1 | d_2 | ...` and every `d_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FGAbelianGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl FGAbelianGroup {
    pub fn trivial() -> Self {
        FGAbelianGroup { rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        FGAbelianGroup { rank, torsion: Vec::new() }
    }

    /// Construct from data already in invariant-factor form.
    pub fn new(rank: usize, torsion: Vec<BigInt>) -> Result<Self> {
        for (i, d) in torsion.iter().enumerate() {
            if *d < BigInt::from(2) {
                return Err(Error::Validation(format!("invariant factor {d} is < 2")));
            }
            if i + 1 < torsion.len() && !(&torsion[i + 1] % d).is_zero() {
                return Err(Error::Validation(format!(
                    "invariant factors violate divisibility: {} does not divide {}",
                    d,
                    torsion[i + 1]
                )));
            }
        }
        Ok(FGAbelianGroup { rank, torsion })
    }

    /// Construct from an arbitrary list of cyclic orders, renormalising into
    /// the invariant-factor chain (e.g. orders `[2, 3]` become `Z/6`).
    pub fn from_orders(rank: usize, orders: &[BigInt]) -> Self {
        let mut diag = IntMatrix::zero(orders.len(), orders.len());
        for (i, d) in orders.iter().enumerate() {
            diag.set(i, i, d.clone());
        }
        let snf = smith_normal_form(&diag);
        let torsion: Vec<BigInt> = snf
            .invariant_factors()
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        let extra_rank = orders.iter().filter(|d| d.is_zero()).count();
        FGAbelianGroup { rank: rank + extra_rank, torsion }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let orders: Vec<BigInt> = self
            .torsion
            .iter()
            .chain(other.torsion.iter())
            .cloned()
            .collect();
        FGAbelianGroup::from_orders(self.rank + other.rank, &orders)
    }

    /// Number of generators in the canonical presentation.
    pub fn generator_count(&self) -> usize {
        self.rank + self.torsion.len()
    }

    /// Canonical presentation: `generator_count()` generators, one relation
    /// column `d_i * e_{rank+i}` per invariant factor.
    pub fn presentation(&self) -> IntMatrix {
        let gens = self.generator_count();
        let mut rel = IntMatrix::zero(gens, self.torsion.len());
        for (i, d) in self.torsion.iter().enumerate() {
            rel.set(self.rank + i, i, d.clone());
        }
        rel
    }
}

impl std::fmt::Display for FGAbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Cokernel and kernel of `a : Z^cols -> Z^rows` as abelian groups.
///
/// The cokernel is `Z^rows / im(a)`; the kernel is free of rank
/// `cols - rank(a)`.
pub fn coker_and_ker(a: &IntMatrix) -> (FGAbelianGroup, FGAbelianGroup) {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    let torsion: Vec<BigInt> = snf
        .invariant_factors()
        .into_iter()
        .filter(|d| !d.is_one())
        .collect();
    let coker = FGAbelianGroup { rank: a.rows() - rank, torsion };
    let ker = FGAbelianGroup::free(a.cols() - rank);
    (coker, ker)
}

/// The group `Z^generators` modulo the row span of `relations`.
pub fn group_from_presentation(generators: usize, relations: &IntMatrix) -> Result<FGAbelianGroup> {
    if relations.cols() != generators {
        return Err(Error::MalformedInput(format!(
            "relation matrix has {} columns but there are {} generators",
            relations.cols(),
            generators
        )));
    }
    Ok(coker_and_ker(&relations.transpose()).0)
}

/// Order of the class of `v` in `Z^gens / column span of rel`; `None` means
/// infinite order.
pub fn element_order(gens: usize, rel: &IntMatrix, v: &[BigInt]) -> Option<BigInt> {
    assert_eq!(rel.rows(), gens);
    assert_eq!(v.len(), gens);
    // k*v ∈ col(rel) for some k > 0  iff  the system [rel | -v] (k in last
    // slot) has a solution with the last coordinate positive. Compute by
    // projecting the kernel of [rel | v] onto the last coordinate: the image
    // is a subgroup c*Z of Z; the order is |c| when c != 0.
    let mut m = IntMatrix::zero(gens, rel.cols() + 1);
    for (i, vi) in v.iter().enumerate() {
        for j in 0..rel.cols() {
            m.set(i, j, rel.get(i, j).clone());
        }
        m.set(i, rel.cols(), vi.clone());
    }
    let basis = kernel_basis(&m);
    let mut g = BigInt::zero();
    for b in &basis {
        g = g.gcd(&b[rel.cols()]);
    }
    if g.is_zero() {
        None
    } else {
        Some(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf_diag(a: &IntMatrix) -> Vec<i64> {
        let r = smith_normal_form(a);
        assert!(verify_snf(a, &r), "snf postcondition failed for\n{a}");
        let n = a.rows().min(a.cols());
        (0..n)
            .map(|i| {
                let d = r.s.get(i, i);
                i64::try_from(d).expect("test diag fits i64")
            })
            .collect()
    }

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(3);
        assert_eq!(snf_diag(&a), vec![1, 1, 1]);
    }

    #[test]
    fn snf_zero() {
        let a = IntMatrix::zero(2, 3);
        assert_eq!(snf_diag(&a), vec![0, 0]);
    }

    #[test]
    fn snf_2x2_example() {
        // determinant-divisor oracle: d1 = gcd of entries = 2, d1*d2 = |det| = 8
        let a = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        assert_eq!(snf_diag(&a), vec![2, 4]);
    }

    #[test]
    fn snf_rectangular() {
        let a = IntMatrix::from_rows(&[vec![2, 0, 0], vec![0, 0, 6]]);
        assert_eq!(snf_diag(&a), vec![2, 6]);
    }

    #[test]
    fn snf_transpose_same_diagonal() {
        let a = IntMatrix::from_rows(&[vec![4, -2, 7], vec![0, 3, 1], vec![5, 5, 5]]);
        let d1 = smith_normal_form(&a).invariant_factors();
        let d2 = smith_normal_form(&a.transpose()).invariant_factors();
        assert_eq!(d1, d2);
    }

    #[test]
    fn coker_ker_single_entry() {
        let a = IntMatrix::from_rows(&[vec![2]]);
        let (coker, ker) = coker_and_ker(&a);
        assert_eq!(coker, FGAbelianGroup::new(0, vec![BigInt::from(2)]).unwrap());
        assert!(ker.is_trivial());
    }

    #[test]
    fn coker_ker_zero_matrix() {
        let a = IntMatrix::zero(3, 2);
        let (coker, ker) = coker_and_ker(&a);
        assert_eq!(coker, FGAbelianGroup::free(3));
        assert_eq!(ker, FGAbelianGroup::free(2));
    }

    #[test]
    fn presentation_rank_four() {
        // one relation (1,1,-1,-1,-1) on five generators
        let rel = IntMatrix::from_rows(&[vec![1, 1, -1, -1, -1]]);
        let g = group_from_presentation(5, &rel).unwrap();
        assert_eq!(g, FGAbelianGroup::free(4));
    }

    #[test]
    fn presentation_crt() {
        let rel = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let g = group_from_presentation(2, &rel).unwrap();
        assert_eq!(g, FGAbelianGroup::new(0, vec![BigInt::from(6)]).unwrap());
    }

    #[test]
    fn presentation_no_relations() {
        let rel = IntMatrix::zero(0, 4);
        let g = group_from_presentation(4, &rel).unwrap();
        assert_eq!(g, FGAbelianGroup::free(4));
    }

    #[test]
    fn direct_sum_normalises() {
        let a = FGAbelianGroup::new(1, vec![BigInt::from(2)]).unwrap();
        let b = FGAbelianGroup::new(0, vec![BigInt::from(3)]).unwrap();
        let s = a.direct_sum(&b);
        assert_eq!(s, FGAbelianGroup::new(1, vec![BigInt::from(6)]).unwrap());
    }

    #[test]
    fn display_forms() {
        assert_eq!(FGAbelianGroup::trivial().to_string(), "0");
        assert_eq!(FGAbelianGroup::free(1).to_string(), "Z");
        let g = FGAbelianGroup::new(3, vec![BigInt::from(2), BigInt::from(4)]).unwrap();
        assert_eq!(g.to_string(), "Z^3 + Z/2 + Z/4");
    }

    #[test]
    fn solve_and_kernel() {
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let sol = solve(&a, &[BigInt::from(4), BigInt::from(9)]).unwrap();
        assert_eq!(sol, vec![BigInt::from(2), BigInt::from(3)]);
        assert!(solve(&a, &[BigInt::from(1), BigInt::from(0)]).is_none());

        let b = IntMatrix::from_rows(&[vec![1, 1, -1]]);
        let basis = kernel_basis(&b);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(b.mul_vec(v).iter().all(|e| e.is_zero()));
        }
    }

    #[test]
    fn element_order_examples() {
        // Z/6 presented on one generator
        let rel = IntMatrix::from_rows(&[vec![6]]).transpose();
        assert_eq!(
            element_order(1, &rel, &[BigInt::from(1)]),
            Some(BigInt::from(6))
        );
        assert_eq!(
            element_order(1, &rel, &[BigInt::from(2)]),
            Some(BigInt::from(3))
        );
        // Z: infinite order
        let none = IntMatrix::zero(1, 0);
        assert_eq!(element_order(1, &none, &[BigInt::from(5)]), None);
        // zero element has order 1
        assert_eq!(element_order(1, &none, &[BigInt::zero()]), Some(BigInt::one()));
    }

    #[test]
    fn abs_det_examples() {
        let a = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        assert_eq!(abs_det(&a), BigInt::from(8));
        let b = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(abs_det(&b), BigInt::zero());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_matrix() -> impl Strategy<Value = IntMatrix> {
            (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
                proptest::collection::vec(-3i64..=3, r * c).prop_map(move |data| {
                    let rows: Vec<Vec<i64>> =
                        data.chunks(c).map(|chunk| chunk.to_vec()).collect();
                    IntMatrix::from_rows(&rows)
                })
            })
        }

        /// Determinant of a small matrix by cofactor expansion; the
        /// independent oracle for the determinant-divisor theorem.
        fn det_cofactor(a: &IntMatrix) -> BigInt {
            let n = a.rows();
            assert_eq!(n, a.cols());
            if n == 0 {
                return BigInt::one();
            }
            if n == 1 {
                return a.get(0, 0).clone();
            }
            let mut acc = BigInt::zero();
            for j in 0..n {
                if a.get(0, j).is_zero() {
                    continue;
                }
                let mut minor = IntMatrix::zero(n - 1, n - 1);
                for i in 1..n {
                    let mut cj = 0;
                    for jj in 0..n {
                        if jj == j {
                            continue;
                        }
                        minor.set(i - 1, cj, a.get(i, jj).clone());
                        cj += 1;
                    }
                }
                let term = a.get(0, j) * det_cofactor(&minor);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }

        /// gcd of all k×k minors, via brute-force enumeration.
        fn minor_gcd(a: &IntMatrix, k: usize) -> BigInt {
            use itertools::Itertools;
            let mut g = BigInt::zero();
            for rows in (0..a.rows()).combinations(k) {
                for cols in (0..a.cols()).combinations(k) {
                    let mut m = IntMatrix::zero(k, k);
                    for (i, &ri) in rows.iter().enumerate() {
                        for (j, &cj) in cols.iter().enumerate() {
                            m.set(i, j, a.get(ri, cj).clone());
                        }
                    }
                    g = g.gcd(&det_cofactor(&m));
                }
            }
            g
        }

        proptest! {
            #[test]
            fn snf_postconditions(a in small_matrix()) {
                let r = smith_normal_form(&a);
                prop_assert!(verify_snf(&a, &r));
            }

            #[test]
            fn rank_bookkeeping(a in small_matrix()) {
                let r = smith_normal_form(&a);
                let (coker, ker) = coker_and_ker(&a);
                prop_assert_eq!(coker.rank() + r.rank(), a.rows());
                prop_assert_eq!(ker.rank() + r.rank(), a.cols());
            }

            #[test]
            fn determinant_divisor_theorem(a in small_matrix()) {
                let r = smith_normal_form(&a);
                let factors = r.invariant_factors();
                let mut prod = BigInt::one();
                for k in 1..=r.rank() {
                    prod *= &factors[k - 1];
                    prop_assert_eq!(prod.clone(), minor_gcd(&a, k));
                }
                // one past the rank every minor vanishes
                if r.rank() < a.rows().min(a.cols()) {
                    prop_assert!(minor_gcd(&a, r.rank() + 1).is_zero());
                }
            }

            #[test]
            fn transpose_invariant_factors(a in small_matrix()) {
                let d1 = smith_normal_form(&a).invariant_factors();
                let d2 = smith_normal_form(&a.transpose()).invariant_factors();
                prop_assert_eq!(d1, d2);
            }
        }
    }
}
