use num_traits::{One, Zero};

use super::rat::{bit_height, primitive_integer_vector, Rat};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds a matrix from equal-length rows; `cols` is needed for the
    /// zero-row case.
    pub fn from_rows(rows: Vec<Vec<Rat>>, cols: usize) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            entries.extend(r);
        }
        RatMatrix {
            rows: n,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| dot(self.row(r), x))
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.rows);
        (0..self.cols)
            .map(|c| {
                let mut acc = Rat::zero();
                for (r, xr) in x.iter().enumerate() {
                    if !xr.is_zero() {
                        acc += xr * self.get(r, c);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(l, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Rank by incremental row insertion (an elimination order independent of
    /// the one used in [`nullspace`]).
    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for r in 0..self.rows {
            e.insert(self.row(r).to_vec());
        }
        e.rank()
    }
}

pub(crate) fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Exact basis of `{x : M x = 0}`.
///
/// Gauss-Jordan elimination over the rationals; in each column the pivot is
/// the candidate entry of smallest bit height. One basis vector per free
/// column, scaled to coprime integers with positive first nonzero entry.
pub fn nullspace(m: &RatMatrix) -> Vec<Vec<Rat>> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<Rat>> = (0..rows).map(|r| m.row(r).to_vec()).collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut next = 0;
    for c in 0..cols {
        if next == rows {
            break;
        }
        let Some(p) = (next..rows)
            .filter(|&r| !a[r][c].is_zero())
            .min_by_key(|&r| bit_height(&a[r][c]))
        else {
            continue;
        };
        a.swap(next, p);
        let inv = Rat::one() / &a[next][c];
        for x in a[next].iter_mut().skip(c) {
            *x *= &inv;
        }
        let pivot_row = a[next].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == next || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        next += 1;
    }
    basis_from_rref(&a, &pivots, cols)
}

fn basis_from_rref(rref: &[Vec<Rat>], pivots: &[usize], cols: usize) -> Vec<Vec<Rat>> {
    let mut is_pivot = vec![false; cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![Rat::zero(); cols];
            x[f] = Rat::one();
            for (i, &pc) in pivots.iter().enumerate() {
                x[pc] = -rref[i][f].clone();
            }
            primitive_integer_vector(&x)
        })
        .collect()
}

/// Reduced row-echelon form maintained one row at a time.
///
/// Suited to tall ansatz systems: rows can be streamed in and the caller can
/// stop as soon as the rank reaches the column count.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    // (pivot column, row with 1 at the pivot and 0 at every other pivot)
    rows: Vec<(usize, Vec<Rat>)>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Remainder of `row` after elimination against the current pivots.
    pub fn reduce(&self, mut row: Vec<Rat>) -> Vec<Rat> {
        assert_eq!(row.len(), self.cols);
        for (c, p) in &self.rows {
            if row[*c].is_zero() {
                continue;
            }
            let f = row[*c].clone();
            for (x, y) in row.iter_mut().zip(p) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        row
    }

    /// Adds a row; returns true when it increased the rank.
    pub fn insert(&mut self, row: Vec<Rat>) -> bool {
        let mut row = self.reduce(row);
        let Some(c) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Rat::one() / &row[c];
        for x in row.iter_mut() {
            *x *= &inv;
        }
        for (_, p) in self.rows.iter_mut() {
            if p[c].is_zero() {
                continue;
            }
            let f = p[c].clone();
            for (x, y) in p.iter_mut().zip(&row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.rows.partition_point(|(pc, _)| *pc < c);
        self.rows.insert(at, (c, row));
        true
    }

    pub fn contains(&self, row: &[Rat]) -> bool {
        self.reduce(row.to_vec()).iter().all(Zero::is_zero)
    }

    /// Basis of the right nullspace of the inserted rows, in the same
    /// normal form as [`nullspace`].
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let pivots: Vec<usize> = self.rows.iter().map(|(c, _)| *c).collect();
        let rref: Vec<Vec<Rat>> = self.rows.iter().map(|(_, r)| r.clone()).collect();
        basis_from_rref(&rref, &pivots, self.cols)
    }

    /// The reduced rows, ordered by pivot column.
    pub fn basis_rows(&self) -> impl Iterator<Item = &[Rat]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
            cols,
        )
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(nullspace(&m(&[&[1, -1]])), vec![vec![rat(1), rat(1)]]);
        assert!(nullspace(&RatMatrix::identity(3)).is_empty());
        let ns = nullspace(&m(&[&[1, 2], &[2, 4]]));
        assert_eq!(ns, vec![vec![rat(2), rat(-1)]]);
    }

    #[test]
    fn empty_and_zero_matrices() {
        let z = RatMatrix::zeros(0, 2);
        assert_eq!(nullspace(&z).len(), 2);
        let z = RatMatrix::zeros(3, 2);
        assert_eq!(nullspace(&z).len(), 2);
        assert_eq!(z.rank(), 0);
    }

    #[test]
    fn echelon_matches_dense() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let mut e = Echelon::new(4);
        for r in 0..3 {
            e.insert(a.row(r).to_vec());
        }
        assert_eq!(e.rank(), 2);
        assert_eq!(e.nullspace().len(), 2);
        for x in e.nullspace() {
            assert!(a.mul_vec(&x).iter().all(Zero::is_zero));
        }
    }

    proptest! {
        #[test]
        fn nullspace_is_exact(rows in 1usize..6, cols in 1usize..7, seed in prop::collection::vec(-3i64..=3, 42)) {
            let data: Vec<Vec<Rat>> = (0..rows)
                .map(|r| (0..cols).map(|c| rat(seed[r * cols + c])).collect())
                .collect();
            let a = RatMatrix::from_rows(data, cols);
            let ns = nullspace(&a);
            for x in &ns {
                prop_assert!(a.mul_vec(x).iter().all(Zero::is_zero));
            }
            // dimension = cols - rank, with the rank from the other elimination order
            prop_assert_eq!(ns.len(), cols - a.rank());
            // basis vectors independent
            let mut e = Echelon::new(cols);
            for x in &ns {
                prop_assert!(e.insert(x.clone()));
            }
        }
    }
}
