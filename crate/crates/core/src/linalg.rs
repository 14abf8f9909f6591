//! Exact integer linear algebra: fraction-free elimination, determinants,
//! ranks, and integer kernel bases.
//!
//! Everything here is exact. The hot paths run over `i128` with overflow
//! detection and fall back to `BigInt` when a product would not fit, so
//! results are identical either way.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Marker for an `i128` overflow; callers retry with `BigInt`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overflow;

/// Ring element usable by the fraction-free routines.
///
/// `i128` reports `Overflow` from checked operations; `BigInt` never fails.
pub(crate) trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg_in_place(&mut self);
    fn mul(&self, rhs: &Self) -> Result<Self, Overflow>;
    fn sub(&self, rhs: &Self) -> Result<Self, Overflow>;
    /// Division known to be exact (Bareiss one-step division).
    fn exact_div(&self, rhs: &Self) -> Self;
    fn gcd(&self, rhs: &Self) -> Self;
    fn to_i64(&self) -> Option<i64>;
    fn to_bigint(&self) -> BigInt;
}

impl Scalar for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg_in_place(&mut self) {
        *self = -*self;
    }
    fn mul(&self, rhs: &Self) -> Result<Self, Overflow> {
        self.checked_mul(*rhs).ok_or(Overflow)
    }
    fn sub(&self, rhs: &Self) -> Result<Self, Overflow> {
        self.checked_sub(*rhs).ok_or(Overflow)
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        debug_assert!(*rhs != 0 && self % rhs == 0);
        self / rhs
    }
    fn gcd(&self, rhs: &Self) -> Self {
        Integer::gcd(self, rhs)
    }
    fn to_i64(&self) -> Option<i64> {
        i64::try_from(*self).ok()
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        BigInt::zero()
    }
    fn one() -> Self {
        BigInt::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg_in_place(&mut self) {
        *self = -std::mem::take(self);
    }
    fn mul(&self, rhs: &Self) -> Result<Self, Overflow> {
        Ok(self * rhs)
    }
    fn sub(&self, rhs: &Self) -> Result<Self, Overflow> {
        Ok(self - rhs)
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        debug_assert!(!Zero::is_zero(rhs) && Zero::is_zero(&(self % rhs)));
        self / rhs
    }
    fn gcd(&self, rhs: &Self) -> Self {
        Integer::gcd(self, rhs)
    }
    fn to_i64(&self) -> Option<i64> {
        i64::try_from(self.clone()).ok()
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Bareiss fraction-free determinant of an `n`x`n` matrix, row-major.
/// The intermediate entries are exact minors of the input.
fn bareiss_det<T: Scalar>(mut m: Vec<T>, n: usize) -> Result<T, Overflow> {
    if n == 0 {
        return Ok(T::one());
    }
    let mut negated = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        // pivot: first row with a nonzero entry in column k
        let pivot_row = match (k..n).find(|&r| !m[r * n + k].is_zero()) {
            Some(r) => r,
            None => return Ok(T::zero()),
        };
        if pivot_row != k {
            for j in 0..n {
                m.swap(pivot_row * n + j, k * n + j);
            }
            negated = !negated;
        }
        for i in k + 1..n {
            let head = m[i * n + k].clone();
            for j in k + 1..n {
                let a = m[k * n + k].mul(&m[i * n + j])?;
                let b = head.mul(&m[k * n + j])?;
                m[i * n + j] = a.sub(&b)?.exact_div(&prev);
            }
            m[i * n + k] = T::zero();
        }
        prev = m[k * n + k].clone();
    }
    let mut det = m[(n - 1) * n + (n - 1)].clone();
    if negated {
        det.neg_in_place();
    }
    Ok(det)
}

/// Exact determinant of an `n`x`n` integer matrix given by a lookup closure.
/// Runs over `i128` first and falls back to `BigInt` on overflow.
pub fn det_exact(n: usize, entry: impl Fn(usize, usize) -> i64) -> BigInt {
    let fast: Vec<i128> = (0..n * n).map(|t| entry(t / n, t % n) as i128).collect();
    match bareiss_det(fast, n) {
        Ok(d) => BigInt::from(d),
        Err(Overflow) => {
            let slow: Vec<BigInt> = (0..n * n)
                .map(|t| BigInt::from(entry(t / n, t % n)))
                .collect();
            bareiss_det(slow, n).expect("BigInt elimination cannot overflow")
        }
    }
}

/// Rank of a rows x cols integer matrix by exact rational elimination.
pub fn rank_exact(rows: usize, cols: usize, entry: impl Fn(usize, usize) -> i64) -> usize {
    let mut m: Vec<BigRational> = (0..rows * cols)
        .map(|t| BigRational::from(BigInt::from(entry(t / cols, t % cols))))
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let pivot_row = match (rank..rows).find(|&r| !m[r * cols + col].is_zero()) {
            Some(r) => r,
            None => continue,
        };
        for j in 0..cols {
            m.swap(pivot_row * cols + j, rank * cols + j);
        }
        let pivot = m[rank * cols + col].clone();
        for i in rank + 1..rows {
            if m[i * cols + col].is_zero() {
                continue;
            }
            let factor = &m[i * cols + col] / &pivot;
            for j in col..cols {
                let delta = &factor * &m[rank * cols + j];
                m[i * cols + j] -= delta;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Primitive integer basis of the right kernel of a rows x cols integer
/// matrix: each returned vector v satisfies M v = 0, has gcd 1 and a
/// positive leading coefficient. The vectors span ker(M) over the rationals.
pub fn kernel_basis(rows: usize, cols: usize, entry: impl Fn(usize, usize) -> i64) -> Vec<Vec<BigInt>> {
    let mut m: Vec<BigRational> = (0..rows * cols)
        .map(|t| BigRational::from(BigInt::from(entry(t / cols, t % cols))))
        .collect();
    // Gauss-Jordan to reduced row echelon form.
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut rank = 0;
    for col in 0..cols {
        let pivot_row = match (rank..rows).find(|&r| !m[r * cols + col].is_zero()) {
            Some(r) => r,
            None => continue,
        };
        for j in 0..cols {
            m.swap(pivot_row * cols + j, rank * cols + j);
        }
        let pivot = m[rank * cols + col].clone();
        for j in 0..cols {
            m[rank * cols + j] /= pivot.clone();
        }
        for r in 0..rows {
            if r != rank && !m[r * cols + col].is_zero() {
                let factor = m[r * cols + col].clone();
                for j in 0..cols {
                    let delta = &factor * &m[rank * cols + j];
                    m[r * cols + j] -= delta;
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
        if rank == rows {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::with_capacity(cols - rank);
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for &(r, c) in &pivots {
            v[c] = -m[r * cols + free].clone();
        }
        basis.push(clear_denominators(&v));
    }
    basis
}

/// A primitive nonzero kernel vector of a rows x cols integer matrix, or
/// `None` when the kernel is trivial. When the nullity is one this is the
/// kernel generator.
pub fn kernel_vector(rows: usize, cols: usize, entry: impl Fn(usize, usize) -> i64) -> Option<Vec<BigInt>> {
    kernel_basis(rows, cols, entry).into_iter().next()
}

fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        if !x.is_zero() {
            lcm = lcm.lcm(x.denom());
        }
    }
    let mut out: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from(lcm.clone())).to_integer()).collect();
    primitivize(&mut out);
    out
}

/// Divide by the gcd of the entries and make the first nonzero entry
/// positive. A zero vector is left unchanged.
pub fn primitivize(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return;
    }
    let negate = v.iter().find(|x| !x.is_zero()).map(|x| x.is_negative()).unwrap_or(false);
    for x in v.iter_mut() {
        *x = &*x / &g;
        if negate {
            *x = -std::mem::take(x);
        }
    }
}

/// Exact binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 1..=k {
        // c * (n - k + i) is divisible by i at every step
        match c.checked_mul((n - k + i) as u128) {
            Some(t) => c = t / i as u128,
            None => return u128::MAX,
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_det(m: &[i64], n: usize) -> i64 {
        // cofactor expansion; independent oracle for small n
        if n == 0 {
            return 1;
        }
        if n == 1 {
            return m[0];
        }
        let mut det = 0i64;
        for j in 0..n {
            let minor: Vec<i64> = (1..n)
                .flat_map(|r| (0..n).filter(|&c| c != j).map(move |c| (r, c)))
                .map(|(r, c)| m[r * n + c])
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            det += sign * m[j] * naive_det(&minor, n - 1);
        }
        det
    }

    #[test]
    fn det_matches_cofactor_oracle() {
        let m = [2, -1, 0, 3, 5, 1, 0, -2, 4];
        assert_eq!(det_exact(3, |r, c| m[r * 3 + c]), BigInt::from(naive_det(&m, 3)));
        let id = [1, 0, 0, 0, 1, 0, 0, 0, 1];
        assert_eq!(det_exact(3, |r, c| id[r * 3 + c]), BigInt::from(1));
        let sing = [1, 2, 2, 4];
        assert_eq!(det_exact(2, |r, c| sing[r * 2 + c]), BigInt::from(0));
    }

    #[test]
    fn det_zero_size_is_one() {
        assert_eq!(det_exact(0, |_, _| 0), BigInt::from(1));
    }

    #[test]
    fn rank_of_rectangular() {
        // rows 0 and 1 dependent
        let m = [1, 2, 3, 2, 4, 6, 0, 1, 1];
        assert_eq!(rank_exact(3, 3, |r, c| m[r * 3 + c]), 2);
        assert_eq!(rank_exact(2, 3, |r, c| [[1, 0, 0], [0, 1, 0]][r][c]), 2);
        assert_eq!(rank_exact(2, 2, |_, _| 0), 0);
    }

    #[test]
    fn kernel_basis_spans_kernel() {
        // A = (1 1): kernel generated by (1, -1)
        let b = kernel_basis(1, 2, |_, c| [1, 1][c]);
        assert_eq!(b, vec![vec![BigInt::from(1), BigInt::from(-1)]]);

        let a = [1, 1, 1, 1, 0, 1, 1, 2, 1]; // 3x3, rank 2
        let basis = kernel_basis(3, 3, |r, c| a[r * 3 + c]);
        assert_eq!(basis.len(), 1);
        for v in &basis {
            for r in 0..3 {
                let s: BigInt = (0..3).map(|c| BigInt::from(a[r * 3 + c]) * &v[c]).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn kernel_vector_none_for_full_rank() {
        assert!(kernel_vector(2, 2, |r, c| [[1, 0], [0, 1]][r][c]).is_none());
    }

    #[test]
    fn primitivize_scales_and_signs() {
        let mut v = vec![BigInt::from(-4), BigInt::from(6), BigInt::from(-2)];
        primitivize(&mut v);
        assert_eq!(v, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(1)]);
        let mut z = vec![BigInt::zero(), BigInt::zero()];
        primitivize(&mut z);
        assert!(z.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(16, 11), 4368);
        assert_eq!(binomial(36, 24), 1_251_677_700);
        assert_eq!(binomial(32, 7), 3_365_856);
        assert_eq!(binomial(5, 9), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn bigint_and_i128_agree() {
        let m = [3, 1, -2, 7, 0, 5, -1, 4, 2, 2, 2, 2, 9, -3, 1, 6];
        let fast = bareiss_det(m.iter().map(|&x| x as i128).collect(), 4).unwrap();
        let slow = bareiss_det(m.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>(), 4).unwrap();
        assert_eq!(BigInt::from(fast), slow);
    }
}
