//! Young's natural representation as a discrete Fourier transform of the
//! symmetric group, and the right-ideal machinery built on top of it: sector
//! idempotents, ideal structure reports, generating idempotents for sums of
//! right ideals, primitive decompositions and the annihilator split.
//!
//! A right ideal `g·C[S_N]` corresponds blockwise to the column spaces of the
//! Fourier blocks `D_λ(g)`; sums of ideals are sums of column spaces, and a
//! generating idempotent is the inverse transform of per-block projectors
//! onto those column spaces.

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::groupring::{is_idempotent, uniform_idempotent, GroupRingElement};
use crate::hilbert::{act_ring, SpinConfig, StateVector};
use crate::linalg::Mat;
use crate::perm::{factorial, sjt_walk, young_subgroup};
use crate::scalar::Scalar;
use crate::tableau::{partitions_of, rep_table, Partition};

/// Number of standard tableaux of a shape (hook length formula).
pub fn irrep_dimension(shape: &Partition) -> usize {
    shape.dimension()
}

/// The image of a group-ring element under the discrete Fourier transform:
/// one square block per partition, in descending lexicographic order.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierBlocks {
    n: usize,
    partitions: Vec<Partition>,
    blocks: Vec<Mat>,
}

impl FourierBlocks {
    /// All-zero blocks for every partition of `n`.
    pub fn zero(n: usize) -> Self {
        let partitions = partitions_of(n);
        let blocks = partitions
            .iter()
            .map(|p| Mat::zero(p.dimension(), p.dimension()))
            .collect();
        FourierBlocks {
            n,
            partitions,
            blocks,
        }
    }

    /// Builds from an explicit block map; every partition of `n` must be
    /// present with the correct side.
    pub fn from_blocks(n: usize, mut map: BTreeMap<Partition, Mat>) -> Result<Self> {
        let partitions = partitions_of(n);
        let mut blocks = Vec::with_capacity(partitions.len());
        for p in &partitions {
            let Some(m) = map.remove(p) else {
                return Err(Error::MissingBlock(p.to_string()));
            };
            let want = p.dimension();
            if m.rows != want || m.cols != want {
                return Err(Error::BlockShape {
                    partition: p.to_string(),
                    got: m.rows,
                    want,
                });
            }
            blocks.push(m);
        }
        Ok(FourierBlocks {
            n,
            partitions,
            blocks,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn block(&self, shape: &Partition) -> Option<&Mat> {
        self.partitions
            .iter()
            .position(|p| p == shape)
            .map(|i| &self.blocks[i])
    }

    pub fn block_mut(&mut self, shape: &Partition) -> Option<&mut Mat> {
        self.partitions
            .iter()
            .position(|p| p == shape)
            .map(|i| &mut self.blocks[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Mat)> {
        self.partitions.iter().zip(self.blocks.iter())
    }

    /// Blockwise product.
    pub fn mul(&self, other: &FourierBlocks) -> FourierBlocks {
        assert_eq!(self.n, other.n);
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.mul(b))
            .collect();
        FourierBlocks {
            n: self.n,
            partitions: self.partitions.clone(),
            blocks,
        }
    }

    pub fn add(&self, other: &FourierBlocks) -> FourierBlocks {
        assert_eq!(self.n, other.n);
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.add(b))
            .collect();
        FourierBlocks {
            n: self.n,
            partitions: self.partitions.clone(),
            blocks,
        }
    }
}

/// The discrete Fourier transform `D_λ(a) = Σ_p a_p D_λ(p)` over all `λ ⊢ N`.
pub fn dft(a: &GroupRingElement) -> FourierBlocks {
    let table = rep_table(a.degree());
    let mut out = FourierBlocks::zero(a.degree());
    for (p, coeff) in a.terms() {
        let mats = table.matrices(p);
        for (idx, m) in mats.iter().enumerate() {
            let block = &mut out.blocks[idx];
            for i in 0..m.rows {
                for j in 0..m.cols {
                    let k = m.at(i, j);
                    if k != 0 {
                        *block.at_mut(i, j) = block.at(i, j) + &coeff.mul_i64(k);
                    }
                }
            }
        }
    }
    out
}

/// A single Fourier block `D_λ(a)` without computing the others.
pub fn dft_block(a: &GroupRingElement, shape: &Partition) -> Mat {
    let table = rep_table(a.degree());
    let idx = table
        .index_of(shape)
        .expect("partition of the right degree");
    let dim = table.irreps[idx].dim;
    let mut block = Mat::zero(dim, dim);
    for (p, coeff) in a.terms() {
        let m = &table.matrices(p)[idx];
        for i in 0..dim {
            for j in 0..dim {
                let k = m.at(i, j);
                if k != 0 {
                    *block.at_mut(i, j) = block.at(i, j) + &coeff.mul_i64(k);
                }
            }
        }
    }
    block
}

/// The inverse transform: the unique element with the given Fourier blocks,
/// recovered via `a_q = (1/N!) Σ_λ n_λ tr(D_λ(q⁻¹) F_λ)`.
pub fn idft(f: &FourierBlocks) -> GroupRingElement {
    let n = f.n;
    let table = rep_table(n);
    // Only blocks that are nonzero contribute to the traces.
    let active: Vec<usize> = (0..f.blocks.len())
        .filter(|&i| !f.blocks[i].is_zero())
        .collect();
    if active.is_empty() {
        return GroupRingElement::zero(n);
    }
    let group_order = Scalar::from_ratio(1, factorial(n) as i64);
    let mut terms: Vec<(crate::perm::Permutation, Scalar)> = Vec::new();
    // Walk all permutations with one adjacent swap per step so that the
    // running representation matrices update with a single product each.
    let mut running: Vec<crate::linalg::IMat> = active
        .iter()
        .map(|&i| crate::linalg::IMat::identity(table.irreps[i].dim))
        .collect();
    sjt_walk(n, |q, swap| {
        if let Some(k) = swap {
            for (slot, &i) in active.iter().enumerate() {
                running[slot] = running[slot].mul(&table.irreps[i].generators[k]);
            }
        }
        let mut acc = Scalar::zero();
        for (slot, &i) in active.iter().enumerate() {
            let contribution = running[slot].trace_product(&f.blocks[i]);
            acc = &acc + &contribution.mul_i64(table.irreps[i].dim as i64);
        }
        let coeff = &acc * &group_order;
        if !coeff.is_zero() {
            terms.push((q.inverse(), coeff));
        }
    });
    GroupRingElement::from_terms(n, terms).expect("degrees agree")
}

/// Decomposition structure of an ideal: partition -> multiplicity.
pub type Structure = BTreeMap<Partition, usize>;

/// Renders a structure the way the tables print it: `[4] + 2 [3,1] + ...`,
/// partitions in descending lexicographic order.
pub fn structure_string(s: &Structure) -> String {
    if s.is_empty() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (p, &m) in s.iter().rev() {
        if m == 0 {
            continue;
        }
        if m == 1 {
            parts.push(p.to_string());
        } else {
            parts.push(format!("{m} {p}"));
        }
    }
    parts.join(" + ")
}

fn serialize_structure<S: Serializer>(
    s: &Structure,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        partition: &'a Partition,
        multiplicity: usize,
    }
    let entries: Vec<Entry> = s
        .iter()
        .rev()
        .filter(|(_, &m)| m > 0)
        .map(|(partition, &multiplicity)| Entry {
            partition,
            multiplicity,
        })
        .collect();
    entries.serialize(ser)
}

#[derive(Deserialize)]
struct StructureEntry {
    partition: Partition,
    multiplicity: usize,
}

fn deserialize_structure<'de, D: serde::Deserializer<'de>>(
    d: D,
) -> std::result::Result<Structure, D::Error> {
    let entries = Vec::<StructureEntry>::deserialize(d)?;
    Ok(entries
        .into_iter()
        .map(|e| (e.partition, e.multiplicity))
        .collect())
}

/// Description of a right ideal: its irreducible multiplicities, dimension,
/// and a generating idempotent.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassReport {
    pub structure: Structure,
    pub ideal_dimension: usize,
    pub generator: GroupRingElement,
}

impl Serialize for ClassReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ClassReport", 3)?;
        st.serialize_field("structure", &StructureField(&self.structure))?;
        st.serialize_field("ideal_dimension", &self.ideal_dimension)?;
        st.serialize_field("generator", &self.generator)?;
        st.end()
    }
}

struct StructureField<'a>(&'a Structure);

impl Serialize for StructureField<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_structure(self.0, s)
    }
}

impl<'de> Deserialize<'de> for ClassReport {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(deserialize_with = "deserialize_structure")]
            structure: Structure,
            ideal_dimension: usize,
            generator: GroupRingElement,
        }
        let raw = Raw::deserialize(d)?;
        Ok(ClassReport {
            structure: raw.structure,
            ideal_dimension: raw.ideal_dimension,
            generator: raw.generator,
        })
    }
}

impl ClassReport {
    pub fn structure_string(&self) -> String {
        structure_string(&self.structure)
    }
}

/// Per-partition multiplicities of the right ideal generated by a family:
/// the rank of the horizontally stacked Fourier blocks of the generators.
pub fn ideal_multiplicities(generators: &[GroupRingElement]) -> Result<Structure> {
    let Some(first) = generators.first() else {
        return Err(Error::EmptyGenerators);
    };
    let n = first.degree();
    for g in generators {
        if g.degree() != n {
            return Err(Error::DegreeMismatch(g.degree(), n));
        }
    }
    let mut structure = Structure::new();
    for shape in partitions_of(n) {
        let mut stacked: Option<Mat> = None;
        for g in generators {
            let block = dft_block(&scale_to_integers(g), &shape);
            stacked = Some(match stacked {
                None => block,
                Some(acc) => acc.hcat(&block),
            });
        }
        let rank = stacked.expect("nonempty generators").rank();
        if rank > 0 {
            structure.insert(shape, rank);
        }
    }
    Ok(structure)
}

/// Clears denominators of an exact element; ranks are scale invariant and
/// integer blocks keep the elimination cheap. Float elements pass through.
fn scale_to_integers(g: &GroupRingElement) -> GroupRingElement {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::One;
    let mut lcm = BigInt::one();
    for (_, c) in g.terms() {
        match c {
            Scalar::Exact { re, im } => {
                lcm = lcm.lcm(re.denom());
                lcm = lcm.lcm(im.denom());
            }
            Scalar::Float { .. } => return g.clone(),
        }
    }
    if lcm.is_one() {
        return g.clone();
    }
    g.scale(&Scalar::from_rational(
        num_rational::BigRational::from_integer(lcm),
    ))
}

/// Full ideal description of `Σ_i g_i·C[S_N]`.
pub fn ideal_structure(generators: &[GroupRingElement]) -> Result<ClassReport> {
    let structure = ideal_multiplicities(generators)?;
    let generator = sum_ideal_idempotent(generators)?;
    let ideal_dimension = structure.iter().map(|(p, m)| p.dimension() * m).sum();
    Ok(ClassReport {
        structure,
        ideal_dimension,
        generator,
    })
}

/// A generating idempotent `e` for the (non-direct) sum of the right ideals
/// `g_i·C[S_N]`: per partition, a projector onto the combined column space of
/// the generator blocks, transformed back to the group ring. Satisfies
/// `e·g_i = g_i` and `rank D_λ(e) = dim Σ_i colspace D_λ(g_i)`.
pub fn sum_ideal_idempotent(generators: &[GroupRingElement]) -> Result<GroupRingElement> {
    let Some(first) = generators.first() else {
        return Err(Error::EmptyGenerators);
    };
    let n = first.degree();
    let mut blocks = BTreeMap::new();
    for shape in partitions_of(n) {
        let mut stacked: Option<Mat> = None;
        for g in generators {
            let block = dft_block(g, &shape);
            stacked = Some(match stacked {
                None => block,
                Some(acc) => acc.hcat(&block),
            });
        }
        blocks.insert(
            shape,
            stacked
                .expect("nonempty generators")
                .column_space_projector(),
        );
    }
    Ok(idft(&FourierBlocks::from_blocks(n, blocks)?))
}

/// The sector idempotents `e_(N), e_(N-1,1), …, e_(N-m̂,m̂)` with
/// `m̂ = min(r1,r2)`, splitting the Young-subgroup average `1_{S_{r1,r2}}`
/// into pairwise orthogonal primitive idempotents.
pub fn sector_idempotents(r1: usize, r2: usize) -> Result<Vec<GroupRingElement>> {
    let n = r1 + r2;
    let young = uniform_idempotent(&young_subgroup(r1, r2)?);
    let f = dft(&young);
    let mut out = Vec::new();
    for m in 0..=r1.min(r2) {
        let shape = Partition::two_row(n, m)?;
        let mut single = FourierBlocks::zero(n);
        *single.block_mut(&shape).expect("two-row shape exists") =
            f.block(&shape).expect("block exists").clone();
        out.push(idft(&single));
    }
    Ok(out)
}

/// Splits an idempotent into pairwise orthogonal primitive idempotents, one
/// rank-one projector per unit of block rank. The split inside a block of
/// rank two or more is not unique; any valid refinement is returned.
pub fn decompose_idempotent(e: &GroupRingElement) -> Result<Vec<GroupRingElement>> {
    if !is_idempotent(e) {
        return Err(Error::NotIdempotent);
    }
    let n = e.degree();
    let f = dft(e);
    let mut out = Vec::new();
    for (shape, block) in f.iter() {
        if block.is_zero() {
            continue;
        }
        let dim = block.rows;
        // Invertible S = [image basis | kernel basis] conjugates the
        // projector to diag(I_r, 0); the columns split it into rank-1 pieces.
        let image = block.column_space_basis();
        let rank = image.cols;
        let kernel_vecs = block.nullspace();
        let mut s = image;
        for v in kernel_vecs {
            let col = Mat::from_fn(dim, 1, |i, _| v[i].clone());
            s = s.hcat(&col);
        }
        let s_inv = s.inverse().expect("image and kernel of a projector span");
        for i in 0..rank {
            let piece = Mat::from_fn(dim, dim, |r, c| s.at(r, i) * s_inv.at(i, c));
            let mut single = FourierBlocks::zero(n);
            *single.block_mut(shape).expect("partition exists") = piece;
            out.push(idft(&single));
        }
    }
    Ok(out)
}

/// Splits the ring identity into `f + f_0` where `f_0` generates the
/// two-sided ideal of operators that annihilate the whole Hilbert space and
/// `f` generates its complement. Structurally, the surviving partitions are
/// those with at most two rows; the result is verified by applying `f_0` to
/// every basis configuration.
pub fn annihilator_split(n: usize) -> Result<(GroupRingElement, GroupRingElement)> {
    let mut blocks = BTreeMap::new();
    for shape in partitions_of(n) {
        let dim = shape.dimension();
        if shape.rows() <= 2 {
            blocks.insert(shape, Mat::identity(dim));
        } else {
            blocks.insert(shape, Mat::zero(dim, dim));
        }
    }
    let f = idft(&FourierBlocks::from_blocks(n, blocks)?);
    let f0 = GroupRingElement::identity(n).sub(&f)?;
    for mask in 0..(1u32 << n) {
        let basis = StateVector::basis_state(SpinConfig::from_mask(n, mask));
        if !act_ring(&f0, &basis)?.is_zero() {
            return Err(Error::VerificationFailed(format!(
                "annihilator part fails to annihilate {basis}"
            )));
        }
    }
    Ok((f0, f))
}
