//! Partitions, standard Young tableaux and Young's natural representation.
//!
//! For each partition the irreducible matrices are built on the standard
//! polytabloid basis, ordered by last letter: the action of each adjacent
//! transposition on the tabloid module is restricted to the span of standard
//! polytabloids by exact linear solving, which yields the integer matrices of
//! the natural representation. Matrices for arbitrary permutations are
//! products over an adjacent-transposition factorization and are cached per
//! degree.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::linalg::{IMat, Mat};
use crate::perm::Permutation;

/// A partition of `N`: weakly decreasing positive parts.
///
/// The derived ordering is lexicographic on the parts; iterating a
/// `BTreeMap<Partition, _>` in reverse therefore lists partitions the way the
/// structure tables print them (`[4]`, `[3,1]`, `[2,2]`, ...).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of rows of the shape.
    pub fn rows(&self) -> usize {
        self.0.len()
    }

    /// Hook length product formula for the number of standard tableaux.
    pub fn dimension(&self) -> usize {
        let n = self.sum();
        let rows = &self.0;
        let mut hooks = 1u128;
        for (i, &row_len) in rows.iter().enumerate() {
            for j in 0..row_len {
                let arm = row_len - j - 1;
                let leg = rows[i + 1..].iter().filter(|&&r| r > j).count();
                hooks *= (arm + leg + 1) as u128;
            }
        }
        let fact: u128 = (1..=n as u128).product();
        (fact / hooks) as usize
    }

    /// Two-row shape `(N-m, m)`; `m = 0` gives the single-row shape.
    pub fn two_row(n: usize, m: usize) -> Result<Self> {
        if m == 0 {
            Partition::new(vec![n])
        } else {
            Partition::new(vec![n - m, m])
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// A standard Young tableau, stored as rows of 1-based letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTableau {
    pub rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Row index (0-based) of each letter `1..=n`, as `row_of[letter-1]`.
    fn row_of_letter(&self, n: usize) -> Vec<u8> {
        let mut out = vec![0u8; n];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                out[v - 1] = r as u8;
            }
        }
        out
    }
}

/// Enumerates the standard tableaux of `shape`, sorted in last-letter order:
/// tableaux compare by the row of the largest letter in which they differ.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    let n = shape.sum();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.rows()];
    fn rec(
        letter: usize,
        n: usize,
        shape: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if letter > n {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len >= shape[r] {
                continue;
            }
            // Column strictness: the row above must already be longer.
            if r > 0 && rows[r - 1].len() <= len {
                continue;
            }
            rows[r].push(letter);
            rec(letter + 1, n, shape, rows, out);
            rows[r].pop();
        }
    }
    rec(1, n, shape.parts(), &mut rows, &mut out);
    out.sort_by_key(|t| {
        let mut key = t.row_of_letter(n);
        key.reverse();
        key
    });
    out
}

/// The irreducible matrices of one partition.
pub struct Irrep {
    pub partition: Partition,
    pub dim: usize,
    /// Matrices of the adjacent transpositions `s_1..s_{N-1}`.
    pub generators: Vec<IMat>,
}

impl Irrep {
    /// Matrix of an arbitrary permutation as a generator product.
    pub fn matrix(&self, p: &Permutation) -> IMat {
        let mut acc = IMat::identity(self.dim);
        for k in p.adjacent_factorization() {
            acc = acc.mul(&self.generators[k]);
        }
        acc
    }
}

/// Natural-representation tables for one degree, with a per-permutation cache.
pub struct RepTable {
    pub n: usize,
    pub irreps: Vec<Irrep>,
    cache: RwLock<HashMap<Permutation, Arc<Vec<IMat>>>>,
    cache_enabled: bool,
}

impl RepTable {
    fn build(n: usize) -> Self {
        let irreps = partitions_of(n)
            .into_iter()
            .map(|p| build_irrep(&p))
            .collect();
        RepTable {
            n,
            irreps,
            cache: RwLock::new(HashMap::new()),
            // A full cache at degree 7+ would hold N!·Σ n_λ² entries.
            cache_enabled: n <= 6,
        }
    }

    pub fn partitions(&self) -> Vec<Partition> {
        self.irreps.iter().map(|ir| ir.partition.clone()).collect()
    }

    pub fn index_of(&self, partition: &Partition) -> Option<usize> {
        self.irreps.iter().position(|ir| &ir.partition == partition)
    }

    /// Matrices of `p` in every irreducible, in table order.
    pub fn matrices(&self, p: &Permutation) -> Arc<Vec<IMat>> {
        assert_eq!(p.degree(), self.n);
        if self.cache_enabled {
            if let Some(hit) = self.cache.read().unwrap().get(p) {
                return hit.clone();
            }
        }
        let factors = p.adjacent_factorization();
        let mut mats: Vec<IMat> = self
            .irreps
            .iter()
            .map(|ir| IMat::identity(ir.dim))
            .collect();
        for k in &factors {
            for (m, ir) in mats.iter_mut().zip(&self.irreps) {
                *m = m.mul(&ir.generators[*k]);
            }
        }
        let mats = Arc::new(mats);
        if self.cache_enabled {
            self.cache.write().unwrap().insert(p.clone(), mats.clone());
        }
        mats
    }
}

/// Shared per-degree representation tables.
pub fn rep_table(n: usize) -> Arc<RepTable> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<RepTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = tables.lock().unwrap();
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(RepTable::build(n)))
        .clone()
}

/// Builds one irreducible: the action of each adjacent transposition on the
/// standard polytabloid basis inside the tabloid permutation module.
fn build_irrep(shape: &Partition) -> Irrep {
    let n = shape.sum();
    let tableaux = standard_tableaux(shape);
    let dim = tableaux.len();
    debug_assert_eq!(dim, shape.dimension());

    // Index all tabloids (row content as sets) by their row-of-letter vector.
    let tabloids = enumerate_tabloids(n, shape.parts());
    let index: HashMap<Vec<u8>, usize> = tabloids
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    let t_count = tabloids.len();

    // B[tabloid][tableau] holds the polytabloid coordinates (entries ±1).
    let mut basis = Mat::zero(t_count, dim);
    for (col, t) in tableaux.iter().enumerate() {
        expand_polytabloid(t, n, &index, |row, sign| {
            *basis.at_mut(row, col) = basis.at(row, col) + &crate::scalar::Scalar::from_int(sign);
        });
    }

    let mut generators = Vec::with_capacity(n.saturating_sub(1));
    for k in 0..n.saturating_sub(1) {
        // Action of s_k on tabloids: swap letters k+1 and k+2.
        let acted = Mat::from_fn(t_count, dim, |i, j| {
            let mut key = tabloids[i].clone();
            key.swap(k, k + 1);
            basis.at(index[&key], j).clone()
        });
        let x = basis
            .solve_full_col_rank(&acted)
            .expect("standard polytabloids span an invariant subspace");
        let mut gen = IMat::zero(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                let r = x
                    .at(i, j)
                    .as_real_rational()
                    .expect("natural representation is rational");
                assert!(
                    r.denom() == &num_bigint::BigInt::from(1),
                    "natural representation is integral"
                );
                let v: i64 =
                    num_traits::ToPrimitive::to_i64(r.numer()).expect("rep entry fits in i64");
                gen.set(i, j, v);
            }
        }
        debug_assert_eq!(gen.mul(&gen), IMat::identity(dim));
        generators.push(gen);
    }
    Irrep {
        partition: shape.clone(),
        dim,
        generators,
    }
}

fn enumerate_tabloids(n: usize, shape: &[usize]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current = vec![0u8; n];
    let mut remaining: Vec<usize> = shape.to_vec();
    fn rec(
        letter: usize,
        n: usize,
        remaining: &mut Vec<usize>,
        current: &mut Vec<u8>,
        out: &mut Vec<Vec<u8>>,
    ) {
        if letter == n {
            out.push(current.clone());
            return;
        }
        for r in 0..remaining.len() {
            if remaining[r] == 0 {
                continue;
            }
            remaining[r] -= 1;
            current[letter] = r as u8;
            rec(letter + 1, n, remaining, current, out);
            remaining[r] += 1;
        }
    }
    rec(0, n, &mut remaining, &mut current, &mut out);
    out
}

/// Expands the signed column-group orbit of a tableau over tabloids.
fn expand_polytabloid(
    t: &StandardTableau,
    n: usize,
    index: &HashMap<Vec<u8>, usize>,
    mut emit: impl FnMut(usize, i64),
) {
    // Columns of the tableau: letters per column, top to bottom.
    let width = t.rows[0].len();
    let mut columns: Vec<Vec<usize>> = vec![Vec::new(); width];
    for row in &t.rows {
        for (j, &v) in row.iter().enumerate() {
            columns[j].push(v);
        }
    }
    // Per-column signed permutations of the column letters.
    let col_perms: Vec<Vec<(Vec<usize>, i64)>> =
        columns.iter().map(|c| signed_permutations(c)).collect();
    let base_row = t.row_of_letter(n);
    let mut choice = vec![0usize; width];
    loop {
        let mut row_of = base_row.clone();
        let mut sign = 1i64;
        for (j, col) in columns.iter().enumerate() {
            let (ref arrangement, s) = col_perms[j][choice[j]];
            sign *= s;
            for (i, &letter) in arrangement.iter().enumerate() {
                // letter now occupies the cell in row i of column j.
                let _ = col;
                row_of[letter - 1] = i as u8;
            }
        }
        emit(index[&row_of], sign);
        // Odometer increment.
        let mut j = 0;
        loop {
            if j == width {
                return;
            }
            choice[j] += 1;
            if choice[j] < col_perms[j].len() {
                break;
            }
            choice[j] = 0;
            j += 1;
        }
    }
}

fn signed_permutations(items: &[usize]) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut arr: Vec<usize> = items.to_vec();
    fn rec(arr: &mut Vec<usize>, k: usize, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == arr.len() {
            out.push((arr.clone(), sign));
            return;
        }
        for i in k..arr.len() {
            arr.swap(k, i);
            let s = if i == k { sign } else { -sign };
            rec(arr, k + 1, s, out);
            arr.swap(k, i);
        }
    }
    rec(&mut arr, 0, 1, &mut out);
    out
}
