//! Sparse exact linear algebra: reduced row-echelon forms, complements,
//! intersections and linear solves.
//!
//! Vectors are sorted lists of `(column, value)` pairs. Smaller column
//! indices have higher priority: the pivot of a row is its first entry.

use std::collections::{BTreeMap, HashMap};

use crate::scalar::{Field, Scalar};

pub type SparseVec = Vec<(usize, Scalar)>;

pub fn dot(a: &SparseVec, b: &SparseVec, field: Field) -> Scalar {
    let mut acc = field.zero();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += &(&a[i].1 * &b[j].1);
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// `a + c * b`.
pub fn axpy(a: &SparseVec, c: &Scalar, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let v = c * &b[j].1;
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(a: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(i, v)| (*i, v * c)).collect()
}

/// Normalizes a list of entries: sorts, merges duplicates, drops zeros.
pub fn normalize(mut v: Vec<(usize, Scalar)>) -> SparseVec {
    v.sort_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some((j, d)) if *j == i => *d += &c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

/// A subspace of `K^ncols` in reduced row-echelon form.
///
/// Every row has leading coefficient one at its pivot, and pivot columns
/// of one row vanish in all other rows. The form is unique for a given
/// subspace and column order.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    rows: Vec<SparseVec>,
    pivots: BTreeMap<usize, usize>,
}

impl PartialEq for Echelon {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.sorted_rows() == other.sorted_rows()
    }
}

impl Eq for Echelon {}

impl Echelon {
    pub fn new(field: Field) -> Self {
        Echelon {
            field,
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }

    pub fn from_rows(field: Field, rows: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut e = Echelon::new(field);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Rows ordered by pivot column.
    pub fn sorted_rows(&self) -> Vec<&SparseVec> {
        self.pivots.values().map(|&r| &self.rows[r]).collect()
    }

    pub fn into_sorted_rows(self) -> Vec<SparseVec> {
        let mut rows: Vec<Option<SparseVec>> = self.rows.into_iter().map(Some).collect();
        self.pivots
            .values()
            .map(|&r| rows[r].take().expect("each row once"))
            .collect()
    }

    pub fn row_with_pivot(&self, col: usize) -> Option<&SparseVec> {
        self.pivots.get(&col).map(|&r| &self.rows[r])
    }

    /// The unique representative of `v` modulo the row space having zero
    /// entries in every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc: Option<BTreeMap<usize, Scalar>> = None;
        for (c, val) in v {
            if let Some(&r) = self.pivots.get(c) {
                let map = acc.get_or_insert_with(|| v.iter().cloned().collect());
                let f = -val;
                for (k, x) in &self.rows[r] {
                    let t = &f * x;
                    match map.entry(*k) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert(t);
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            *e.get_mut() += &t;
                        }
                    }
                }
            }
        }
        match acc {
            None => v.clone(),
            Some(map) => map.into_iter().filter(|(_, x)| !x.is_zero()).collect(),
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(&v);
        if r.is_empty() {
            return false;
        }
        let inv = r[0].1.inv();
        let r = scale(&r, &inv);
        let p = r[0].0;
        for row in &mut self.rows {
            if let Ok(k) = row.binary_search_by_key(&p, |e| e.0) {
                let c = -&row[k].1;
                *row = axpy(row, &c, &r);
            }
        }
        self.pivots.insert(p, self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn extend(&mut self, vs: impl IntoIterator<Item = SparseVec>) {
        for v in vs {
            self.insert(v);
        }
    }

    /// Basis of the orthogonal complement in `K^ncols` under the standard
    /// bilinear pairing; one vector per non-pivot column, in column order.
    pub fn complement(&self, ncols: usize) -> Vec<SparseVec> {
        let mut by_col: HashMap<usize, Vec<(usize, Scalar)>> = HashMap::new();
        for row in &self.rows {
            let p = row[0].0;
            for (c, v) in &row[1..] {
                by_col.entry(*c).or_default().push((p, -v));
            }
        }
        (0..ncols)
            .filter(|c| !self.pivots.contains_key(c))
            .map(|c| {
                let mut v = by_col.remove(&c).unwrap_or_default();
                v.push((c, self.field.one()));
                v.sort_by_key(|e| e.0);
                v
            })
            .collect()
    }

    /// Subspace sum.
    pub fn sum(&self, other: &Echelon) -> Echelon {
        let mut e = self.clone();
        e.extend(other.rows.iter().cloned());
        e
    }

    /// Subspace intersection (Zassenhaus). Columns must be below `ncols`.
    pub fn intersect(&self, other: &Echelon, ncols: usize) -> Echelon {
        let mut z = Echelon::new(self.field);
        for u in &self.rows {
            let mut v = u.clone();
            v.extend(u.iter().map(|(c, x)| (c + ncols, x.clone())));
            z.insert(v);
        }
        for u in &other.rows {
            z.insert(u.clone());
        }
        let rows = z
            .rows
            .into_iter()
            .filter(|r| r[0].0 >= ncols)
            .map(|r| r.into_iter().map(|(c, x)| (c - ncols, x)).collect());
        Echelon::from_rows(self.field, rows)
    }

    pub fn is_subspace_of(&self, other: &Echelon) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}

/// Result of solving `Σ c_j images_j = target`.
#[derive(Clone, Debug)]
pub struct Solution {
    pub particular: Vec<Scalar>,
    pub kernel: Vec<Vec<Scalar>>,
}

/// Solves for coefficients `c` with `Σ c_j images[j] = target`; returns one
/// particular solution together with a basis of the kernel, or `None` if the
/// system is inconsistent. Image columns must be below `ncols`.
pub fn solve(
    field: Field,
    images: &[SparseVec],
    target: &SparseVec,
    ncols: usize,
) -> Option<Solution> {
    let k = images.len();
    let mut e = Echelon::new(field);
    for (j, img) in images.iter().enumerate() {
        let mut v = img.clone();
        v.push((ncols + j, field.one()));
        e.insert(v);
    }
    let r = e.reduce(target);
    if r.iter().any(|(c, _)| *c < ncols) {
        return None;
    }
    let mut particular = vec![field.zero(); k];
    for (c, v) in r {
        particular[c - ncols] = -v;
    }
    let kernel = e
        .sorted_rows()
        .into_iter()
        .filter(|row| row[0].0 >= ncols)
        .map(|row| {
            let mut v = vec![field.zero(); k];
            for (c, x) in row {
                v[c - ncols] = x.clone();
            }
            v
        })
        .collect();
    Some(Solution { particular, kernel })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        normalize(entries.iter().map(|&(c, x)| (c, Q.from_int(x))).collect())
    }

    #[test]
    fn rref_is_canonical() {
        let a = Echelon::from_rows(Q, [v(&[(0, 1), (1, 1)]), v(&[(1, 1), (2, 1)])]);
        let b = Echelon::from_rows(Q, [v(&[(0, 1), (2, -1)]), v(&[(0, 2), (1, 2)])]);
        assert_eq!(a, b);
        assert_eq!(a.rank(), 2);
        assert!(a.contains(&v(&[(0, 1), (1, 2), (2, 1)])));
        assert!(!a.contains(&v(&[(2, 1)])));
    }

    #[test]
    fn complement_is_orthogonal() {
        let a = Echelon::from_rows(Q, [v(&[(0, 1), (1, 1)]), v(&[(1, 1), (2, 1)])]);
        let c = a.complement(4);
        assert_eq!(c.len(), 2);
        for x in &c {
            for r in a.sorted_rows() {
                assert!(dot(x, r, Q).is_zero());
            }
        }
    }

    #[test]
    fn intersection_of_planes() {
        let a = Echelon::from_rows(Q, [v(&[(0, 1)]), v(&[(1, 1)])]);
        let b = Echelon::from_rows(Q, [v(&[(1, 1)]), v(&[(2, 1)])]);
        let i = a.intersect(&b, 3);
        assert_eq!(i, Echelon::from_rows(Q, [v(&[(1, 1)])]));
    }

    #[test]
    fn solve_with_kernel() {
        let imgs = [v(&[(0, 1)]), v(&[(0, 1)]), v(&[(1, 1)])];
        let s = solve(Q, &imgs, &v(&[(0, 2), (1, 3)]), 2).unwrap();
        let mut combo = SparseVec::new();
        for (j, c) in s.particular.iter().enumerate() {
            combo = axpy(&combo, c, &imgs[j]);
        }
        assert_eq!(combo, v(&[(0, 2), (1, 3)]));
        assert_eq!(s.kernel.len(), 1);
        assert!(solve(Q, &imgs, &v(&[(2, 1)]), 3).is_none());
    }
}
