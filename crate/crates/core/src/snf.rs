//! Invariant factors of integer matrices (diagonal of the Smith normal form).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer arithmetic the elimination needs; `None` signals overflow.
trait SnfInt: Clone + Ord + std::fmt::Debug {
    fn is_zero(&self) -> bool;
    fn abs_val(&self) -> Self;
    fn div_floor_by(&self, d: &Self) -> Self;
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
}

impl SnfInt for i128 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn abs_val(&self) -> Self {
        self.abs()
    }
    fn div_floor_by(&self, d: &Self) -> Self {
        self.div_euclid(*d)
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*b)?)
    }
}

impl SnfInt for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs_val(&self) -> Self {
        self.abs()
    }
    fn div_floor_by(&self, d: &Self) -> Self {
        self.div_floor(d)
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
}

fn diagonalize<T: SnfInt>(mut a: Vec<Vec<T>>) -> Option<Vec<T>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| a[i][j].abs_val() < a[bi][bj].abs_val())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor_by(&a[t][t]);
                #[allow(clippy::needless_range_loop)]
                for j in t..cols {
                    let v = a[i][j].sub_mul(&q, &a[t][j])?;
                    a[i][j] = v;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor_by(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = row[j].sub_mul(&q, &row[t])?;
                    row[j] = v;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // Move the smallest remaining entry of row/column t onto the diagonal.
            let mut best = (t, t);
            for i in t + 1..rows {
                if !a[i][t].is_zero() && a[i][t].abs_val() < a[best.0][best.1].abs_val() {
                    best = (i, t);
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() && a[t][j].abs_val() < a[best.0][best.1].abs_val() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                a.swap(t, best.0);
            } else if best.1 != t {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        diag.push(a[t][t].abs_val());
    }
    Some(diag)
}

/// Non-zero invariant factors `d_1 | d_2 | ... | d_r` of an integer matrix,
/// where `r` is its rank.
pub fn invariant_factors(matrix: &[Vec<i64>]) -> Vec<BigInt> {
    let small: Vec<Vec<i128>> = matrix.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let diag: Vec<BigInt> = match diagonalize(small) {
        Some(d) => d.into_iter().map(BigInt::from).collect(),
        None => {
            let big = matrix.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            diagonalize(big).expect("bigint elimination cannot overflow")
        }
    };
    normalize_chain(diag)
}

/// Turns a diagonal into a divisibility chain via pairwise `(gcd, lcm)` replacement.
fn normalize_chain(mut d: Vec<BigInt>) -> Vec<BigInt> {
    if d.iter().all(|x| x.is_one()) {
        return d;
    }
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}
