//! Dense exact linear algebra over a [`Field`].

use crate::field::Field;

/// Row-major dense matrix.
pub type Dense<E> = Vec<Vec<E>>;

/// Rank by Gaussian elimination.
pub fn rank<F: Field>(f: &F, mut rows: Dense<F::Elem>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(&rows[r][c]);
        let pivot_row: Vec<F::Elem> = rows[r].iter().map(|x| f.mul(x, &inv)).collect();
        for row in rows.iter_mut().skip(r + 1) {
            if f.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x = f.sub_mul(x, &factor, y);
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(f: &F, rows: &mut Dense<F::Elem>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(&rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || f.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x = f.sub_mul(x, &factor, y);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A basis of `{x : A x = 0}` for an `nrows × ncols` matrix `A`.
pub fn kernel_basis<F: Field>(f: &F, mut rows: Dense<F::Elem>, ncols: usize) -> Vec<Vec<F::Elem>> {
    let pivots = rref(f, &mut rows);
    let mut is_pivot = vec![None; ncols];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    (0..ncols)
        .filter(|&c| is_pivot[c].is_none())
        .map(|free| {
            let mut v = vec![f.zero(); ncols];
            v[free] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&rows[r][free]);
            }
            v
        })
        .collect()
}

/// `A x` for a row-major `A`.
pub fn apply<F: Field>(f: &F, rows: &Dense<F::Elem>, x: &[F::Elem]) -> Vec<F::Elem> {
    rows.iter()
        .map(|row| {
            row.iter().zip(x).fold(f.zero(), |acc, (a, b)| {
                if f.is_zero(a) || f.is_zero(b) {
                    acc
                } else {
                    f.add(&acc, &f.mul(a, b))
                }
            })
        })
        .collect()
}

pub fn is_zero_vec<F: Field>(f: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|x| f.is_zero(x))
}

type Row<E> = (usize, Vec<E>, Vec<E>);

/// An incrementally built echelon basis whose rows carry coordinate tags.
///
/// Every stored row `s` satisfies `s = Σ tag_i · g_i` modulo the span of
/// rows inserted with a zero tag, where `g_i` is whatever the caller
/// associated with tag index `i`. Reducing a vector against the basis
/// therefore yields its coordinates in the tagged generators modulo the
/// untagged subspace.
#[derive(Clone, Debug)]
pub struct Reducer<F: Field> {
    field: F,
    dim: usize,
    tag_len: usize,
    /// `(pivot, row, tag)`
    rows: Vec<Row<F::Elem>>,
}

impl<F: Field> Reducer<F> {
    pub fn new(field: F, dim: usize, tag_len: usize) -> Self {
        Reducer { field, dim, tag_len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Returns `(residual, tag)` with `v = residual + Σ c_k s_k` and `tag = Σ c_k tag(s_k)`.
    pub fn reduce(&self, v: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
        let f = &self.field;
        let mut v = v.to_vec();
        let mut tag = vec![f.zero(); self.tag_len];
        for (pivot, row, rtag) in &self.rows {
            if f.is_zero(&v[*pivot]) {
                continue;
            }
            let c = v[*pivot].clone();
            for (x, y) in v.iter_mut().zip(row).skip(*pivot) {
                if !f.is_zero(y) {
                    *x = f.sub_mul(x, &c, y);
                }
            }
            for (x, y) in tag.iter_mut().zip(rtag) {
                if !f.is_zero(y) {
                    *x = f.add(x, &f.mul(&c, y));
                }
            }
        }
        (v, tag)
    }

    /// Inserts `v` carrying `tag`; returns false (and stores nothing) if `v`
    /// already lies in the span.
    pub fn insert(&mut self, v: &[F::Elem], tag: &[F::Elem]) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        debug_assert_eq!(tag.len(), self.tag_len);
        let f = self.field.clone();
        let (res, acc) = self.reduce(v);
        let Some(pivot) = res.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&res[pivot]);
        let row: Vec<F::Elem> = res.iter().map(|x| f.mul(x, &inv)).collect();
        let rtag: Vec<F::Elem> = tag.iter().zip(&acc).map(|(t, a)| f.mul(&f.sub(t, a), &inv)).collect();
        self.rows.push((pivot, row, rtag));
        true
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        is_zero_vec(&self.field, &self.reduce(v).0)
    }
}
