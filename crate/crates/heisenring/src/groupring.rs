//! Exact arithmetic in the complex group ring of the symmetric group:
//! convolution products, the star involution, conjugation and the canonical
//! idempotents built from subgroups and unit characters.

use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};
use crate::scalar::Scalar;

/// A sparse element of the group ring: permutation terms with Gaussian
/// rational (or float-mode) coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct GroupRingElement {
    degree: usize,
    terms: BTreeMap<Permutation, Scalar>,
}

impl GroupRingElement {
    pub fn zero(degree: usize) -> Self {
        GroupRingElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The ring identity `δ_id`.
    pub fn identity(degree: usize) -> Self {
        GroupRingElement::basis(Permutation::identity(degree))
    }

    /// A single permutation with coefficient one.
    pub fn basis(p: Permutation) -> Self {
        let mut terms = BTreeMap::new();
        let degree = p.degree();
        terms.insert(p, Scalar::one());
        GroupRingElement { degree, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Permutation, Scalar)>>(
        degree: usize,
        iter: I,
    ) -> Result<Self> {
        let mut out = GroupRingElement::zero(degree);
        for (p, c) in iter {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch(p.degree(), degree));
            }
            out.add_term(p, c);
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Scalar)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, p: &Permutation) -> Scalar {
        self.terms.get(p).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, p: Permutation, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), -c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> GroupRingElement {
        if c.is_zero() {
            return GroupRingElement::zero(self.degree);
        }
        let mut out = GroupRingElement::zero(self.degree);
        for (p, a) in &self.terms {
            out.add_term(p.clone(), a * c);
        }
        out
    }

    pub fn neg(&self) -> GroupRingElement {
        self.scale(&-Scalar::one())
    }

    /// Convolution product `a·b = Σ_p Σ_q a_p b_q (p ∘ q)`.
    pub fn multiply(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        self.check_degree(other)?;
        let mut out = GroupRingElement::zero(self.degree);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.compose(q)?, a * b);
            }
        }
        Ok(out)
    }

    /// The star involution `a* = Σ_p a_p p^{-1}` (no coefficient conjugation).
    pub fn star(&self) -> GroupRingElement {
        let mut out = GroupRingElement::zero(self.degree);
        for (p, a) in &self.terms {
            out.add_term(p.inverse(), a.clone());
        }
        out
    }

    /// Coefficientwise complex conjugation.
    pub fn conjugate(&self) -> GroupRingElement {
        let mut out = GroupRingElement::zero(self.degree);
        for (p, a) in &self.terms {
            out.add_term(p.clone(), a.conj());
        }
        out
    }

    /// Mode-aware equality (exact, or within tolerance in float mode).
    pub fn approx_eq(&self, other: &GroupRingElement) -> bool {
        if self.degree != other.degree {
            return false;
        }
        let keys: std::collections::BTreeSet<&Permutation> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter()
            .all(|p| self.coefficient(p) == other.coefficient(p))
    }

    pub fn to_float(&self) -> GroupRingElement {
        let mut out = GroupRingElement::zero(self.degree);
        for (p, a) in &self.terms {
            out.add_term(p.clone(), a.to_float());
        }
        out
    }

    fn check_degree(&self, other: &GroupRingElement) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(())
    }
}

impl PartialEq for GroupRingElement {
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(other)
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}·{}", c.short_string(), p)?;
        }
        Ok(())
    }
}

impl Serialize for GroupRingElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            perm: &'a Permutation,
            re: String,
            im: String,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (p, c) in &self.terms {
            let (re, im) = c.amp_strings();
            seq.serialize_element(&Term { perm: p, re, im })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for GroupRingElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Term {
            perm: Permutation,
            re: String,
            im: String,
        }
        let raw = Vec::<Term>::deserialize(d)?;
        if raw.is_empty() {
            return Err(D::Error::custom("cannot infer degree of an empty element"));
        }
        let degree = raw[0].perm.degree();
        let mut out = GroupRingElement::zero(degree);
        for t in raw {
            if t.perm.degree() != degree {
                return Err(D::Error::custom("mixed degrees"));
            }
            let re = Scalar::parse_real(&t.re).map_err(D::Error::custom)?;
            let im = Scalar::parse_real(&t.im).map_err(D::Error::custom)?;
            let coeff = &re + &(&im * &Scalar::i());
            out.add_term(t.perm, coeff);
        }
        Ok(out)
    }
}

/// The averaging idempotent `1_G = (1/|G|) Σ_{p∈G} p` of a subgroup.
pub fn uniform_idempotent(group: &PermGroup) -> GroupRingElement {
    let order = group.order() as i64;
    let coeff = Scalar::from_ratio(1, order);
    let mut out = GroupRingElement::zero(group.degree());
    for p in group.elements() {
        out.add_term(p.clone(), coeff.clone());
    }
    out
}

/// The signed average `(1/N!) Σ_p sign(p) p` over the full symmetric group.
pub fn antisymmetrizer(n: usize) -> GroupRingElement {
    let group = PermGroup::symmetric(n);
    let order = group.order() as i64;
    let mut out = GroupRingElement::zero(n);
    for p in group.elements() {
        let c = Scalar::from_ratio(p.sign(), order);
        out.add_term(p.clone(), c);
    }
    out
}

/// The idempotent `(1/|C|) Σ_c ε(c) c` of a commutation symmetry `(C, ε)`.
///
/// `eps` must assign a unit-modulus scalar to every element of `C` and be a
/// group homomorphism; both conditions are verified.
pub fn commutation_idempotent(
    group: &PermGroup,
    eps: &BTreeMap<Permutation, Scalar>,
) -> Result<GroupRingElement> {
    let one = Scalar::one();
    for p in group.elements() {
        let Some(v) = eps.get(p) else {
            return Err(Error::NotAHomomorphism(format!("missing value at {p}")));
        };
        if v.abs_sq() != one {
            return Err(Error::NotAHomomorphism(format!("|ε({p})| ≠ 1")));
        }
    }
    for p in group.elements() {
        for q in group.elements() {
            let pq = p.compose(q)?;
            let lhs = eps.get(&pq).cloned().unwrap_or_else(Scalar::zero);
            let rhs = &eps[p] * &eps[q];
            if lhs != rhs {
                return Err(Error::NotAHomomorphism(format!(
                    "ε({p}∘{q}) ≠ ε({p})·ε({q})"
                )));
            }
        }
    }
    let inv_order = Scalar::from_ratio(1, group.order() as i64);
    let mut out = GroupRingElement::zero(group.degree());
    for p in group.elements() {
        out.add_term(p.clone(), &eps[p] * &inv_order);
    }
    Ok(out)
}

/// The trivial character on a group, for building `(G, 1)` symmetries.
pub fn trivial_character(group: &PermGroup) -> BTreeMap<Permutation, Scalar> {
    group
        .elements()
        .iter()
        .map(|p| (p.clone(), Scalar::one()))
        .collect()
}

pub fn is_idempotent(a: &GroupRingElement) -> bool {
    match a.multiply(a) {
        Ok(sq) => sq.approx_eq(a),
        Err(_) => false,
    }
}
