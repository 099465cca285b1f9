//! The Hilbert space of ring spin configurations: the symmetric-group action,
//! symmetry-operator application, weight sectors, coset coordinates and
//! symmetry-class membership.
//!
//! A configuration assigns `1` (down) or `2` (up) to each of the `N` sites.
//! Configurations are keyed by a bitmask with bit `k` set iff site `k+1`
//! carries a `2`, which fixes a canonical ordering.

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::groupring::{is_idempotent, uniform_idempotent, GroupRingElement};
use crate::perm::{binomial, coset_transversal, subsets_of_size, young_subgroup, Permutation};
use crate::scalar::Scalar;

/// A spin configuration over `N` sites.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SpinConfig {
    n: u8,
    mask: u32,
}

impl SpinConfig {
    pub fn from_mask(n: usize, mask: u32) -> Self {
        debug_assert!(n <= 12 && mask < (1 << n));
        SpinConfig { n: n as u8, mask }
    }

    /// Parses a digit string such as `"1122"`.
    pub fn parse(s: &str) -> Result<Self> {
        let n = s.len();
        if n == 0 || n > 12 {
            return Err(Error::InvalidConfig(s.to_string()));
        }
        let mut mask = 0u32;
        for (k, ch) in s.chars().enumerate() {
            match ch {
                '1' => {}
                '2' => mask |= 1 << k,
                _ => return Err(Error::InvalidConfig(s.to_string())),
            }
        }
        Ok(SpinConfig { n: n as u8, mask })
    }

    pub fn sites(&self) -> usize {
        self.n as usize
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    /// Value at 1-based site `i`: `1` or `2`.
    #[inline]
    pub fn value(&self, i: usize) -> u8 {
        if self.mask & (1 << (i - 1)) != 0 {
            2
        } else {
            1
        }
    }

    /// The relabeled configuration `σ ∘ p⁻¹` (site `i` reads old site `p⁻¹(i)`).
    pub fn permuted(&self, p: &Permutation) -> SpinConfig {
        let mut mask = 0u32;
        for i in 0..self.n as usize {
            // New site (p(j)) carries the old value at j.
            if self.mask & (1 << i) != 0 {
                mask |= 1 << p.apply0(i);
            }
        }
        SpinConfig { n: self.n, mask }
    }

    /// Swaps the values at 1-based sites `i` and `j`.
    pub fn swapped(&self, i: usize, j: usize) -> SpinConfig {
        let bi = (self.mask >> (i - 1)) & 1;
        let bj = (self.mask >> (j - 1)) & 1;
        if bi == bj {
            return *self;
        }
        SpinConfig {
            n: self.n,
            mask: self.mask ^ (1 << (i - 1)) ^ (1 << (j - 1)),
        }
    }

    pub fn digits(&self) -> String {
        (1..=self.n as usize)
            .map(|i| if self.value(i) == 2 { '2' } else { '1' })
            .collect()
    }

    pub fn weight(&self) -> Weight {
        let r2 = self.mask.count_ones() as usize;
        Weight {
            r1: self.n as usize - r2,
            r2,
        }
    }
}

impl fmt::Display for SpinConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|")?;
        for i in 1..=self.n as usize {
            if i > 1 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.value(i))?;
        }
        write!(f, "⟩")
    }
}

/// A weight `(r1, r2)`: the number of down and up spins.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Weight {
    pub r1: usize,
    pub r2: usize,
}

impl Weight {
    pub fn new(r1: usize, r2: usize) -> Self {
        Weight { r1, r2 }
    }

    pub fn sites(&self) -> usize {
        self.r1 + self.r2
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if self.sites() != n {
            return Err(Error::InvalidWeight {
                r1: self.r1,
                r2: self.r2,
                expected: n,
            });
        }
        Ok(())
    }

    /// The reference configuration `|1..1 2..2⟩` with `r1` ones first.
    pub fn tau0(&self) -> SpinConfig {
        let mask = if self.r2 == 0 {
            0
        } else {
            ((1u32 << self.r2) - 1) << self.r1
        };
        SpinConfig::from_mask(self.sites(), mask)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r1, self.r2)
    }
}

pub fn weight_of(config: &SpinConfig) -> Weight {
    config.weight()
}

/// All configurations of a weight, ordered by bitmask ascending.
pub fn sector_basis(n: usize, wt: Weight) -> Result<Vec<SpinConfig>> {
    wt.check(n)?;
    Ok(subsets_of_size(n, wt.r2)
        .into_iter()
        .map(|m| SpinConfig::from_mask(n, m))
        .collect())
}

/// A sparse vector in the Hilbert space.
#[derive(Clone, Debug)]
pub struct StateVector {
    n: usize,
    amps: BTreeMap<SpinConfig, Scalar>,
}

impl StateVector {
    pub fn zero(n: usize) -> Self {
        StateVector {
            n,
            amps: BTreeMap::new(),
        }
    }

    pub fn basis_state(config: SpinConfig) -> Self {
        let mut amps = BTreeMap::new();
        let n = config.sites();
        amps.insert(config, Scalar::one());
        StateVector { n, amps }
    }

    pub fn from_amplitudes<I: IntoIterator<Item = (SpinConfig, Scalar)>>(
        n: usize,
        iter: I,
    ) -> Result<Self> {
        let mut out = StateVector::zero(n);
        for (c, a) in iter {
            if c.sites() != n {
                return Err(Error::DegreeMismatch(c.sites(), n));
            }
            out.add_amp(c, a);
        }
        Ok(out)
    }

    /// Convenience constructor from `(digit string, integer amplitude)` pairs.
    pub fn from_int_terms(n: usize, terms: &[(&str, i64)]) -> Result<Self> {
        StateVector::from_amplitudes(
            n,
            terms
                .iter()
                .map(|&(s, a)| Ok((SpinConfig::parse(s)?, Scalar::from_int(a))))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn sites(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> impl Iterator<Item = (&SpinConfig, &Scalar)> {
        self.amps.iter()
    }

    pub fn amplitude(&self, c: &SpinConfig) -> Scalar {
        self.amps.get(c).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn support_len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.amps.is_empty()
    }

    fn add_amp(&mut self, c: SpinConfig, a: Scalar) {
        if a.is_zero() {
            return;
        }
        match self.amps.entry(c) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(a);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &a;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &StateVector) -> Result<StateVector> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (c, a) in &other.amps {
            out.add_amp(*c, a.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &StateVector) -> Result<StateVector> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> StateVector {
        if c.is_zero() {
            return StateVector::zero(self.n);
        }
        let mut out = StateVector::zero(self.n);
        for (cfg, a) in &self.amps {
            out.add_amp(*cfg, a * c);
        }
        out
    }

    pub fn approx_eq(&self, other: &StateVector) -> bool {
        if self.n != other.n {
            return false;
        }
        let keys: std::collections::BTreeSet<&SpinConfig> =
            self.amps.keys().chain(other.amps.keys()).collect();
        keys.into_iter()
            .all(|c| self.amplitude(c) == other.amplitude(c))
    }

    /// The common weight of all supported configurations.
    pub fn homogeneous_weight(&self) -> Result<Weight> {
        let mut it = self.amps.keys();
        let Some(first) = it.next() else {
            return Err(Error::ZeroVector);
        };
        let w = first.weight();
        if it.any(|c| c.weight() != w) {
            return Err(Error::MixedWeight);
        }
        Ok(w)
    }

    pub fn to_float(&self) -> StateVector {
        let mut out = StateVector::zero(self.n);
        for (c, a) in &self.amps {
            out.add_amp(*c, a.to_float());
        }
        out
    }

    /// Dense coordinates over an ordered sector basis.
    pub fn coords(&self, basis: &[SpinConfig]) -> Vec<Scalar> {
        basis.iter().map(|c| self.amplitude(c)).collect()
    }
}

impl PartialEq for StateVector {
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(other)
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.amps.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, a)) in self.amps.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}{}", a.short_string(), c)?;
        }
        Ok(())
    }
}

impl Serialize for StateVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            config: String,
            re: String,
            im: String,
        }
        let mut st = s.serialize_struct("StateVector", 2)?;
        st.serialize_field("n", &self.n)?;
        let terms: Vec<Term> = self
            .amps
            .iter()
            .map(|(c, a)| {
                let (re, im) = a.amp_strings();
                Term {
                    config: c.digits(),
                    re,
                    im,
                }
            })
            .collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for StateVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Term {
            config: String,
            re: String,
            im: String,
        }
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            terms: Vec<Term>,
        }
        let raw = Raw::deserialize(d)?;
        let mut out = StateVector::zero(raw.n);
        for t in raw.terms {
            let c = SpinConfig::parse(&t.config).map_err(D::Error::custom)?;
            if c.sites() != raw.n {
                return Err(D::Error::custom("config length differs from n"));
            }
            let re = Scalar::parse_real(&t.re).map_err(D::Error::custom)?;
            let im = Scalar::parse_real(&t.im).map_err(D::Error::custom)?;
            out.add_amp(c, &re + &(&im * &Scalar::i()));
        }
        Ok(out)
    }
}

/// The permutation action `p|σ⟩ = |σ ∘ p⁻¹⟩` extended linearly.
pub fn act_perm(p: &Permutation, w: &StateVector) -> Result<StateVector> {
    if p.degree() != w.sites() {
        return Err(Error::DegreeMismatch(p.degree(), w.sites()));
    }
    let mut out = StateVector::zero(w.sites());
    for (c, a) in &w.amps {
        out.add_amp(c.permuted(p), a.clone());
    }
    Ok(out)
}

/// Applies a symmetry operator: the linear extension of [`act_perm`].
pub fn act_ring(a: &GroupRingElement, w: &StateVector) -> Result<StateVector> {
    if a.degree() != w.sites() {
        return Err(Error::DegreeMismatch(a.degree(), w.sites()));
    }
    let mut out = StateVector::zero(w.sites());
    for (p, coeff) in a.terms() {
        for (c, amp) in &w.amps {
            out.add_amp(c.permuted(p), coeff * amp);
        }
    }
    Ok(out)
}

/// The sesquilinear scalar product `⟨u|v⟩ = Σ_σ u_σ · conj(v_σ)`.
pub fn inner(u: &StateVector, v: &StateVector) -> Result<Scalar> {
    if u.sites() != v.sites() {
        return Err(Error::DegreeMismatch(u.sites(), v.sites()));
    }
    let mut acc = Scalar::zero();
    for (c, a) in &u.amps {
        let b = v.amplitude(c);
        if !b.is_zero() {
            acc = &acc + &(a * &b.conj());
        }
    }
    Ok(acc)
}

/// Per-weight lookup from configurations to their transversal representative.
pub struct CosetFrame {
    pub weight: Weight,
    pub transversal: Vec<Permutation>,
    rep_of_mask: BTreeMap<u32, usize>,
}

impl CosetFrame {
    pub fn new(n: usize, weight: Weight) -> Result<Self> {
        weight.check(n)?;
        let transversal = coset_transversal(weight.r1, weight.r2)?;
        let tau0 = weight.tau0();
        let mut rep_of_mask = BTreeMap::new();
        for (i, r) in transversal.iter().enumerate() {
            let image = tau0.permuted(r);
            rep_of_mask.insert(image.mask(), i);
        }
        debug_assert_eq!(rep_of_mask.len(), binomial(n, weight.r2));
        Ok(CosetFrame {
            weight,
            transversal,
            rep_of_mask,
        })
    }

    /// The transversal element sending `τ0` to `σ`.
    pub fn representative(&self, config: &SpinConfig) -> &Permutation {
        &self.transversal[self.rep_of_mask[&config.mask()]]
    }
}

/// Extracts the unique transversal-supported coordinates `a_w` with
/// `a_w · 1_{S_{r1,r2}} |τ0⟩ = w`. The zero vector yields the zero element.
pub fn coset_coords(w: &StateVector) -> Result<GroupRingElement> {
    if w.is_zero() {
        return Ok(GroupRingElement::zero(w.sites()));
    }
    let weight = w.homogeneous_weight()?;
    let frame = CosetFrame::new(w.sites(), weight)?;
    let mut out = GroupRingElement::zero(w.sites());
    for (c, a) in &w.amps {
        out = out.add(&GroupRingElement::basis(frame.representative(c).clone()).scale(a))?;
    }
    Ok(out)
}

/// The smallest-class generator `a_w · 1_{S_{r1,r2}}` of a homogeneous vector.
pub fn class_generator(w: &StateVector) -> Result<GroupRingElement> {
    let weight = w.homogeneous_weight()?;
    let young = uniform_idempotent(&young_subgroup(weight.r1, weight.r2)?);
    coset_coords(w)?.multiply(&young)
}

/// Membership test for the symmetry class of the right ideal generated by an
/// idempotent: `u` belongs iff `e·u = u`.
pub fn class_membership(e: &GroupRingElement, u: &StateVector) -> Result<bool> {
    if !is_idempotent(e) {
        return Err(Error::NotIdempotent);
    }
    Ok(act_ring(e, u)? == *u)
}
