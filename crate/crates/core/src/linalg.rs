//! Exact sparse and dense linear algebra over a [`Field`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::scalar::{Field, Rational};

/// A sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SVec<F: Field = Rational> {
    entries: Vec<(usize, F)>,
}

impl<F: Field> Default for SVec<F> {
    fn default() -> Self {
        Self { entries: Vec::new() }
    }
}

impl<F: Field + serde::Serialize> serde::Serialize for SVec<F> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

impl<'de, F: Field + serde::Deserialize<'de>> serde::Deserialize<'de> for SVec<F> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: Vec<(usize, F)> = Vec::deserialize(d)?;
        Ok(Self::from_unsorted(raw))
    }
}

impl<F: Field> fmt::Debug for SVec<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter().map(|(i, v)| (i, v))).finish()
    }
}

impl<F: Field> SVec<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        Self { entries: vec![(i, F::one())] }
    }

    pub fn single(i: usize, v: F) -> Self {
        if v.is_zero() {
            Self::new()
        } else {
            Self { entries: vec![(i, v)] }
        }
    }

    /// Sorts and merges duplicate indices.
    pub fn from_unsorted(mut raw: Vec<(usize, F)>) -> Self {
        raw.sort_by_key(|e| e.0);
        let mut entries: Vec<(usize, F)> = Vec::with_capacity(raw.len());
        for (i, v) in raw {
            match entries.last_mut() {
                Some((j, w)) if *j == i => w.add_assign_ref(&v),
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|(_, v)| !v.is_zero());
        Self { entries }
    }

    pub fn from_dense(d: &[F]) -> Self {
        Self {
            entries: d
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<F> {
        let mut d = vec![F::zero(); len];
        for (i, v) in &self.entries {
            d[*i] = v.clone();
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &F)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn entries(&self) -> &[(usize, F)] {
        &self.entries
    }

    pub fn leading(&self) -> Option<(usize, &F)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn get(&self, i: usize) -> F {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        Self { entries: self.entries.iter().map(|(i, v)| (*i, v.times(c))).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { entries: self.entries.iter().map(|(i, v)| (*i, v.negate())).collect() }
    }

    /// `self + c·other`.
    pub fn axpy(&self, c: &F, other: &Self) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y.times(c)));
                        b.next();
                    } else {
                        let s = x.plus(&y.times(c));
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y.times(c)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Self { entries: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.axpy(&F::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.axpy(&F::one().negate(), other)
    }

    pub fn dot(&self, other: &Self) -> F {
        let mut acc = F::zero();
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if j < i {
                b.next();
            } else {
                acc.add_assign_ref(&x.times(y));
                a.next();
                b.next();
            }
        }
        acc
    }

    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> Self {
        Self::from_unsorted(self.entries.iter().map(|(i, v)| (f(*i), v.clone())).collect())
    }
}

/// Accumulates `(index, value)` contributions before building an [`SVec`].
#[derive(Clone)]
pub struct Accum<F: Field = Rational> {
    map: HashMap<usize, F>,
}

impl<F: Field> Default for Accum<F> {
    fn default() -> Self {
        Self { map: HashMap::new() }
    }
}

impl<F: Field> Accum<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: usize, v: &F) {
        if v.is_zero() {
            return;
        }
        match self.map.get_mut(&i) {
            Some(w) => w.add_assign_ref(v),
            None => {
                self.map.insert(i, v.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, c: &F, v: &SVec<F>) {
        if c.is_zero() {
            return;
        }
        for (i, x) in v.iter() {
            self.add(i, &x.times(c));
        }
    }

    pub fn finish(self) -> SVec<F> {
        let mut entries: Vec<(usize, F)> =
            self.map.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        entries.sort_by_key(|e| e.0);
        SVec { entries }
    }
}

/// Incremental row echelon form. Each stored row has leading entry `1` at
/// its key column and no two rows share a leading column.
#[derive(Clone)]
pub struct Echelon<F: Field = Rational> {
    ncols: usize,
    pivots: BTreeMap<usize, SVec<F>>,
}

impl<F: Field> fmt::Debug for Echelon<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Echelon(rank {} of {})", self.rank(), self.ncols)
    }
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, pivots: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` by leading terms until it is zero or has a fresh leading column.
    pub fn reduce(&self, mut row: SVec<F>) -> SVec<F> {
        while let Some((c, lead)) = row.leading() {
            match self.pivots.get(&c) {
                Some(p) => {
                    let lead = lead.negate();
                    row = row.axpy(&lead, p);
                }
                None => break,
            }
        }
        row
    }

    /// Inserts a row; returns `true` when it increased the rank.
    pub fn insert(&mut self, row: SVec<F>) -> bool {
        debug_assert!(row.max_index().map_or(true, |m| m < self.ncols));
        let r = self.reduce(row);
        match r.leading() {
            None => false,
            Some((c, lead)) => {
                let inv = lead.inv().expect("nonzero leading entry");
                let r = r.scale(&inv);
                self.pivots.insert(c, r);
                true
            }
        }
    }

    pub fn contains(&self, row: &SVec<F>) -> bool {
        self.reduce(row.clone()).is_zero()
    }

    /// Stored pivot rows, each with leading entry 1.
    pub fn rows(&self) -> impl Iterator<Item = &SVec<F>> {
        self.pivots.values()
    }

    /// Basis of `{x : row·x = 0 for every inserted row}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<SVec<F>> {
        // back-substitute from the right so every row mentions only its pivot and free columns
        let mut reduced: BTreeMap<usize, SVec<F>> = BTreeMap::new();
        for (&c, row) in self.pivots.iter().rev() {
            let mut acc = Accum::new();
            for (j, v) in row.iter() {
                if j == c || !self.pivots.contains_key(&j) {
                    acc.add(j, v);
                } else {
                    let rj = &reduced[&j];
                    let neg = v.negate();
                    for (k, w) in rj.iter() {
                        if k != j {
                            acc.add(k, &w.times(&neg));
                        }
                    }
                }
            }
            reduced.insert(c, acc.finish());
        }
        let mut cols: BTreeMap<usize, Vec<(usize, F)>> = BTreeMap::new();
        for f in 0..self.ncols {
            if !self.pivots.contains_key(&f) {
                cols.insert(f, vec![(f, F::one())]);
            }
        }
        for (&c, row) in &reduced {
            for (j, v) in row.iter() {
                if j != c {
                    cols.get_mut(&j).expect("free column").push((c, v.negate()));
                }
            }
        }
        cols.into_values().map(SVec::from_unsorted).collect()
    }
}

pub fn rank<F: Field>(ncols: usize, rows: impl IntoIterator<Item = SVec<F>>) -> usize {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Nullspace of the system whose constraint rows are given.
pub fn nullspace<F: Field>(ncols: usize, rows: impl IntoIterator<Item = SVec<F>>) -> Vec<SVec<F>> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.nullspace()
}

/// A dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<F: Field = Rational> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "]")
    }
}

impl<F: Field> std::ops::Index<(usize, usize)> for Mat<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F: Field> std::ops::IndexMut<(usize, usize)> for Mat<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> Mat<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Matrix unit `E_{ij}`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = F::one();
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn diag(d: Vec<F>) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, v) in d.into_iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut m = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        let t = a.times(b);
                        m[(i, j)].add_assign_ref(&t);
                    }
                }
            }
        }
        m
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&F::one().negate()))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.times(c)).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn trace(&self) -> F {
        let mut t = F::zero();
        for i in 0..self.rows.min(self.cols) {
            t.add_assign_ref(&self[(i, i)]);
        }
        t
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if p != col {
                for j in 0..n {
                    a.data.swap(p * n + j, col * n + j);
                    inv.data.swap(p * n + j, col * n + j);
                }
            }
            let pinv = a[(col, col)].inv()?;
            for j in 0..n {
                a[(col, j)] = a[(col, j)].times(&pinv);
                inv[(col, j)] = inv[(col, j)].times(&pinv);
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].negate();
                for j in 0..n {
                    let x = a[(col, j)].times(&f);
                    a[(r, j)].add_assign_ref(&x);
                    let y = inv[(col, j)].times(&f);
                    inv[(r, j)].add_assign_ref(&y);
                }
            }
        }
        Some(inv)
    }

    /// Matrix-vector product on a dense column.
    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() && !self[(i, j)].is_zero() {
                        acc.add_assign_ref(&self[(i, j)].times(x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Mat<G> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &F)> {
        let c = self.cols;
        self.data.iter().enumerate().map(move |(k, v)| ((k / c, k % c), v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn sv(e: &[(usize, i64)]) -> SVec {
        SVec::from_unsorted(e.iter().map(|&(i, v)| (i, q(v))).collect())
    }

    #[test]
    fn nullspace_of_small_system() {
        // x0 + x1 = 0, x1 - x2 = 0 over 4 unknowns
        let ns = nullspace(4, vec![sv(&[(0, 1), (1, 1)]), sv(&[(1, 1), (2, -1)])]);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(sv(&[(0, 1), (1, 1)]).dot(v).is_zero());
            assert!(sv(&[(1, 1), (2, -1)]).dot(v).is_zero());
        }
        assert_eq!(rank(4, ns), 2);
    }

    #[test]
    fn echelon_membership() {
        let mut e = Echelon::new(3);
        assert!(e.insert(sv(&[(0, 2), (2, 4)])));
        assert!(e.insert(sv(&[(1, 1)])));
        assert!(!e.insert(sv(&[(0, 1), (1, 3), (2, 2)])));
        assert!(e.contains(&sv(&[(0, 1), (2, 2)])));
        assert!(!e.contains(&sv(&[(2, 1)])));
    }

    #[test]
    fn dense_inverse() {
        let m = Mat::from_rows(vec![vec![q(2), q(1)], vec![q(1), q(1)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(2));
        assert!(Mat::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]).inverse().is_none());
    }
}
