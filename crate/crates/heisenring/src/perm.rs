//! Permutations of `{1..N}`, explicit finite subgroups, Young subgroups and
//! lexicographic coset transversals.
//!
//! Permutations are stored in one-line image form. The external (JSON,
//! display) convention is 1-based, matching the `( 4 1 2 3 )` notation used
//! for ring translations; internally images are 0-based.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1..N}` in one-line image form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    /// 0-based images: `images[i]` is the 0-based image of site `i`.
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// Builds a permutation from 1-based images, validating bijectivity.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut imgs = Vec::with_capacity(n);
        for &v in images {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(images.to_vec()));
            }
            seen[v - 1] = true;
            imgs.push((v - 1) as u8);
        }
        Ok(Permutation { images: imgs })
    }

    /// 1-based image array.
    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based application.
    #[inline]
    pub fn apply0(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// 1-based application `p(i)`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i)
    }

    /// `(p ∘ q)(i) = p(q(i))`.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation> {
        if self.degree() != q.degree() {
            return Err(Error::DegreeMismatch(self.degree(), q.degree()));
        }
        Ok(Permutation {
            images: q.images.iter().map(|&j| self.images[j as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// Parity of the permutation: `+1` or `-1`.
    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.images.len()];
        let mut sign = 1i64;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Lehmer rank in `0..n!`, used as a dense table index.
    pub fn rank(&self) -> usize {
        let n = self.images.len();
        let mut rank = 0usize;
        for i in 0..n {
            let mut smaller = 0;
            for j in i + 1..n {
                if self.images[j] < self.images[i] {
                    smaller += 1;
                }
            }
            rank = rank * (n - i) + smaller;
        }
        rank
    }

    /// Writes `self` as a product of adjacent transpositions
    /// `s_{k_1} ∘ s_{k_2} ∘ … ∘ s_{k_m}` and returns the 0-based positions
    /// `k_1..k_m` (each `s_k` swaps `k+1` and `k+2` in 1-based terms).
    pub fn adjacent_factorization(&self) -> Vec<usize> {
        // Bubble-sort the one-line form; each swap of positions (j, j+1)
        // multiplies on the right by s_j, so p·s_{j1}·…·s_{jm} = id and
        // p = s_{jm} ∘ … ∘ s_{j1}.
        let mut w = self.images.clone();
        let mut swaps = Vec::new();
        let n = w.len();
        loop {
            let mut done = true;
            for j in 0..n.saturating_sub(1) {
                if w[j] > w[j + 1] {
                    w.swap(j, j + 1);
                    swaps.push(j);
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        swaps.reverse();
        swaps
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.one_based().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_based(&images).map_err(D::Error::custom)
    }
}

/// A finite permutation group stored by its full, lexicographically sorted
/// element list. Intended for degrees up to 8.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl Serialize for PermGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements.serialize(s)
    }
}

impl PermGroup {
    pub fn trivial(n: usize) -> Self {
        PermGroup {
            degree: n,
            elements: vec![Permutation::identity(n)],
        }
    }

    /// The full symmetric group of degree `n`.
    pub fn symmetric(n: usize) -> Self {
        let mut elements: Vec<Permutation> = all_permutations(n);
        elements.sort();
        PermGroup {
            degree: n,
            elements,
        }
    }

    /// Closure of a generating set under composition.
    pub fn closure(n: usize, generators: &[Permutation]) -> Result<Self> {
        for g in generators {
            if g.degree() != n {
                return Err(Error::DegreeMismatch(g.degree(), n));
            }
        }
        let mut set: BTreeSet<Permutation> = BTreeSet::new();
        set.insert(Permutation::identity(n));
        let mut frontier: Vec<Permutation> = vec![Permutation::identity(n)];
        while let Some(p) = frontier.pop() {
            for g in generators {
                let q = g.compose(&p)?;
                if set.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        Ok(PermGroup {
            degree: n,
            elements: set.into_iter().collect(),
        })
    }

    /// Builds a group from an explicit element set, verifying the group axioms.
    pub fn from_elements(n: usize, elements: Vec<Permutation>) -> Result<Self> {
        let mut set: BTreeSet<Permutation> = BTreeSet::new();
        for p in elements {
            if p.degree() != n {
                return Err(Error::DegreeMismatch(p.degree(), n));
            }
            set.insert(p);
        }
        let group = PermGroup {
            degree: n,
            elements: set.into_iter().collect(),
        };
        group.verify()?;
        Ok(group)
    }

    /// Checks closure, identity and inverses.
    pub fn verify(&self) -> Result<()> {
        if !self.contains(&Permutation::identity(self.degree)) {
            return Err(Error::NotAGroup("missing identity".into()));
        }
        for p in &self.elements {
            if !self.contains(&p.inverse()) {
                return Err(Error::NotAGroup(format!("missing inverse of {p}")));
            }
            for q in &self.elements {
                if !self.contains(&p.compose(q)?) {
                    return Err(Error::NotAGroup(format!("not closed at {p}*{q}")));
                }
            }
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }
}

impl fmt::Display for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// All permutations of degree `n` in no particular order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<u8> = (0..n as u8).collect();
    heap_permutations(&mut current, n, &mut out);
    out
}

fn heap_permutations(items: &mut Vec<u8>, k: usize, out: &mut Vec<Permutation>) {
    if k <= 1 {
        out.push(Permutation {
            images: items.clone(),
        });
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// The Young subgroup fixing `{1..r1}` and `{r1+1..N}` setwise.
pub fn young_subgroup(r1: usize, r2: usize) -> Result<PermGroup> {
    let n = r1 + r2;
    let mut elements = Vec::with_capacity(factorial(r1) * factorial(r2));
    let firsts = if r1 == 0 {
        vec![vec![]]
    } else {
        block_perms(0, r1)
    };
    let seconds = if r2 == 0 {
        vec![vec![]]
    } else {
        block_perms(r1, n)
    };
    for a in &firsts {
        for b in &seconds {
            let mut images = a.clone();
            images.extend_from_slice(b);
            elements.push(Permutation { images });
        }
    }
    elements.sort();
    Ok(PermGroup {
        degree: n,
        elements,
    })
}

fn block_perms(lo: usize, hi: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current: Vec<u8> = (lo as u8..hi as u8).collect();
    let k = hi - lo;
    let mut tmp = Vec::new();
    heap_permutations(&mut current, k, &mut tmp);
    for p in tmp {
        out.push(p.images);
    }
    out
}

/// Lexicographically least representatives of the left cosets `p·S_{r1,r2}`,
/// sorted by image tuple. Contains the identity.
pub fn coset_transversal(r1: usize, r2: usize) -> Result<Vec<Permutation>> {
    let n = r1 + r2;
    let mut reps = Vec::new();
    // A coset is determined by the image set T = p({r1+1..N}); the least
    // representative sorts the complement onto the first block and T onto
    // the second, both ascending.
    for mask in subsets_of_size(n, r2) {
        let mut first = Vec::new();
        let mut second = Vec::new();
        for v in 0..n as u8 {
            if mask & (1u32 << v) != 0 {
                second.push(v);
            } else {
                first.push(v);
            }
        }
        let mut images = first;
        images.extend_from_slice(&second);
        reps.push(Permutation { images });
    }
    reps.sort();
    Ok(reps)
}

/// All bitmasks over `n` bits with exactly `k` bits set, ascending.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<u32> {
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize == k {
            out.push(mask);
        }
    }
    out
}

/// The cyclic group generated by the ring translation `t = [N,1,2,…,N−1]`.
pub fn cyclic_group(n: usize) -> PermGroup {
    let t = translation(n);
    PermGroup::closure(n, &[t]).expect("translation closure")
}

/// The one-step ring translation `t(1) = N, t(i) = i − 1`.
pub fn translation(n: usize) -> Permutation {
    let mut images = Vec::with_capacity(n);
    images.push((n - 1) as u8);
    images.extend(0..(n - 1) as u8);
    Permutation { images }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Steinhaus–Johnson–Trotter walk: visits every permutation of degree `n`
/// exactly once, starting at the identity. For each step after the first the
/// callback receives the current permutation together with the 0-based
/// position `j` that was swapped with `j+1` relative to the previous
/// permutation (so `current = previous ∘ s_j`).
pub fn sjt_walk<F: FnMut(&Permutation, Option<usize>)>(n: usize, mut f: F) {
    const LEFT: i8 = -1;
    let mut perm: Vec<u8> = (0..n as u8).collect();
    let mut dir = vec![LEFT; n];
    f(
        &Permutation {
            images: perm.clone(),
        },
        None,
    );
    loop {
        // Largest mobile element: moves in its direction toward a smaller one.
        let mut mobile: Option<usize> = None;
        for i in 0..n {
            let j = i as i64 + dir[perm[i] as usize] as i64;
            if j < 0 || j >= n as i64 {
                continue;
            }
            if perm[j as usize] < perm[i] {
                match mobile {
                    Some(m) if perm[m] >= perm[i] => {}
                    _ => mobile = Some(i),
                }
            }
        }
        let Some(i) = mobile else { break };
        let j = (i as i64 + dir[perm[i] as usize] as i64) as usize;
        let moved = perm[i];
        perm.swap(i, j);
        let swapped_pos = i.min(j);
        for d in dir.iter_mut().skip(moved as usize + 1) {
            *d = -*d;
        }
        f(
            &Permutation {
                images: perm.clone(),
            },
            Some(swapped_pos),
        );
    }
}
