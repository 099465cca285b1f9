//! Stability subgroups, commutation symmetries of eigenvectors, smallest
//! symmetry classes of vectors and subspaces, and the jump analysis over
//! eigenspaces.

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::groupring::{commutation_idempotent, GroupRingElement};
use crate::hilbert::{
    act_perm, class_generator, class_membership, coset_coords, sector_basis, StateVector,
};
use crate::linalg::Mat;
use crate::perm::{PermGroup, Permutation};
use crate::scalar::Scalar;
use crate::symrep::{dft_block, ideal_structure, ClassReport, Structure};
use crate::tableau::Partition;

/// Stability data of a single vector: the stabilizer of the vector, the
/// stabilizer of its line, and the unit character on the latter.
#[derive(Clone, Debug)]
pub struct StabilityReport {
    pub vector_group: PermGroup,
    pub line_group: PermGroup,
    pub eps: BTreeMap<Permutation, Scalar>,
}

impl Serialize for StabilityReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct EpsEntry<'a> {
            perm: &'a Permutation,
            value: String,
        }
        let mut st = s.serialize_struct("StabilityReport", 3)?;
        st.serialize_field("a_v", &self.vector_group)?;
        st.serialize_field("a_line", &self.line_group)?;
        let eps: Vec<EpsEntry> = self
            .eps
            .iter()
            .map(|(p, v)| EpsEntry {
                perm: p,
                value: v.short_string(),
            })
            .collect();
        st.serialize_field("eps", &eps)?;
        st.end()
    }
}

/// The full stabilizer `{p : p·v = v}` of a nonzero vector.
pub fn stability_vector(v: &StateVector) -> Result<PermGroup> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let n = v.sites();
    let mut elements = Vec::new();
    search_stabilizer(v, false, &mut |p, _| elements.push(p.clone()));
    PermGroup::from_elements(n, elements)
}

/// Stabilizer of the line through `v`, together with the character
/// `ε(p) = c_p` from `p·v = c_p·v`. The kernel of `ε` is the vector
/// stabilizer.
pub fn stability_line(v: &StateVector) -> Result<StabilityReport> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let n = v.sites();
    let mut elements = Vec::new();
    let mut eps = BTreeMap::new();
    search_stabilizer(v, true, &mut |p, c| {
        elements.push(p.clone());
        eps.insert(p.clone(), c);
    });
    let line_group = PermGroup::from_elements(n, elements)?;
    let vector_elements: Vec<Permutation> = line_group
        .elements()
        .iter()
        .filter(|p| eps[*p] == Scalar::one())
        .cloned()
        .collect();
    let vector_group = PermGroup::from_elements(n, vector_elements)?;
    Ok(StabilityReport {
        vector_group,
        line_group,
        eps,
    })
}

/// Depth-first search over images with early rejection: a partial image
/// assignment already pins the first sites of every relabeled configuration,
/// so fiberwise amplitude sums must transform consistently or the whole
/// branch dies. With `allow_scale` the ratio is inferred from the first
/// nonzero fiber and verified everywhere.
fn search_stabilizer(
    v: &StateVector,
    allow_scale: bool,
    emit: &mut impl FnMut(&Permutation, Scalar),
) {
    let n = v.sites();
    let support: Vec<(u32, Scalar)> = v.amplitudes().map(|(c, a)| (c.mask(), a.clone())).collect();
    let mut images = vec![0usize; n];
    let mut used = vec![false; n];
    dfs(0, &mut images, &mut used, n, &support, allow_scale, emit, v);
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    depth: usize,
    images: &mut Vec<usize>,
    used: &mut Vec<bool>,
    n: usize,
    support: &[(u32, Scalar)],
    allow_scale: bool,
    emit: &mut impl FnMut(&Permutation, Scalar),
    v: &StateVector,
) {
    if depth == n {
        let p = Permutation::from_one_based(&images.iter().map(|&i| i + 1).collect::<Vec<_>>())
            .expect("bijective by construction");
        if let Some(c) = full_check(&p, v, allow_scale) {
            emit(&p, c);
        }
        return;
    }
    for img in 0..n {
        if used[img] {
            continue;
        }
        images[depth] = img;
        used[img] = true;
        if prefix_consistent(images, depth + 1, support, allow_scale) {
            dfs(depth + 1, images, used, n, support, allow_scale, emit, v);
        }
        used[img] = false;
    }
}

/// Fiberwise necessary condition on a partial assignment `p(0..k)`.
///
/// `p·v = c·v` means `v_{τ∘p} = c·v_τ` for every configuration `τ`. Summing
/// over the fiber of configurations whose values at the assigned images form
/// a fixed pattern `π` (equivalently, whose relabeled image has prefix `π`)
/// gives, per pattern,
///
/// `Σ_{σ: σ|first k sites = π} v_σ  =  c · Σ_{τ: τ(p(0..k)) = π} v_τ`,
///
/// which only reads the assigned part of `p`. A branch dies as soon as no
/// single `c` fits all patterns.
fn prefix_consistent(
    images: &[usize],
    k: usize,
    support: &[(u32, Scalar)],
    allow_scale: bool,
) -> bool {
    let mut own: BTreeMap<u32, Scalar> = BTreeMap::new();
    let mut moved: BTreeMap<u32, Scalar> = BTreeMap::new();
    for (mask, amp) in support {
        let own_key = mask & ((1u32 << k) - 1);
        let mut img_key = 0u32;
        for (site, &img) in images.iter().enumerate().take(k) {
            if mask & (1 << img) != 0 {
                img_key |= 1 << site;
            }
        }
        let entry = own.entry(own_key).or_insert_with(Scalar::zero);
        *entry = &*entry + amp;
        let entry = moved.entry(img_key).or_insert_with(Scalar::zero);
        *entry = &*entry + amp;
    }
    let keys: std::collections::BTreeSet<u32> = own.keys().chain(moved.keys()).copied().collect();
    let mut ratio: Option<Scalar> = if allow_scale {
        None
    } else {
        Some(Scalar::one())
    };
    for key in keys {
        let o = own.get(&key).cloned().unwrap_or_else(Scalar::zero);
        let m = moved.get(&key).cloned().unwrap_or_else(Scalar::zero);
        match (m.is_zero(), o.is_zero()) {
            (true, true) => {}
            // A finite or a zero ratio is impossible: prune.
            (true, false) | (false, true) => return false,
            (false, false) => {
                let c = &o / &m;
                match &ratio {
                    None => ratio = Some(c),
                    Some(existing) => {
                        if existing != &c {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Verifies `p·v = c·v` exactly, inferring `c` from the first nonzero
/// amplitude in canonical order when scaling is allowed.
fn full_check(p: &Permutation, v: &StateVector, allow_scale: bool) -> Option<Scalar> {
    let moved = act_perm(p, v).expect("degrees agree");
    if !allow_scale {
        return (moved == *v).then(Scalar::one);
    }
    let (first_config, first_amp) = v.amplitudes().next().expect("nonzero vector");
    let c = &moved.amplitude(first_config) / first_amp;
    if c.is_zero() {
        return None;
    }
    (moved == v.scale(&c)).then_some(c)
}

/// The stabilizer `{p : p·span(U) ⊆ span(U)}` of a subspace given by a basis.
pub fn stability_subspace(basis: &[StateVector]) -> Result<PermGroup> {
    let (n, coords) = subspace_coords(basis)?;
    let sector = sector_basis(n, basis[0].homogeneous_weight()?)?;
    let rank = coords.rank();
    let mut elements = Vec::new();
    for p in crate::perm::all_permutations(n) {
        let mut ok = true;
        for v in basis {
            let moved = act_perm(&p, v)?;
            let row = Mat::from_fn(1, sector.len(), |_, j| moved.amplitude(&sector[j]));
            if coords.vcat(&row).rank() != rank {
                ok = false;
                break;
            }
        }
        if ok {
            elements.push(p);
        }
    }
    PermGroup::from_elements(n, elements)
}

/// Coordinate matrix of a basis over its common sector; errors on dependent
/// or mixed-weight input.
fn subspace_coords(basis: &[StateVector]) -> Result<(usize, Mat)> {
    let Some(first) = basis.first() else {
        return Err(Error::ZeroVector);
    };
    let n = first.sites();
    let wt = first.homogeneous_weight()?;
    for v in basis {
        if v.sites() != n {
            return Err(Error::DegreeMismatch(v.sites(), n));
        }
        if v.homogeneous_weight()? != wt {
            return Err(Error::MixedWeight);
        }
    }
    let sector = sector_basis(n, wt)?;
    let coords = Mat::from_fn(basis.len(), sector.len(), |i, j| {
        basis[i].amplitude(&sector[j])
    });
    if coords.rank() != basis.len() {
        return Err(Error::DependentVectors);
    }
    Ok((n, coords))
}

/// The smallest symmetry class containing a single vector: the right ideal
/// generated by `a_v · 1_{S_{r1,r2}}`.
pub fn smallest_class_vector(v: &StateVector) -> Result<ClassReport> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let generator = class_generator(v)?;
    ideal_structure(&[generator])
}

/// The smallest symmetry class containing a subspace: the non-direct sum of
/// the per-vector ideals, independent of the chosen basis.
pub fn smallest_class_subspace(basis: &[StateVector]) -> Result<ClassReport> {
    subspace_coords(basis)?;
    let generators: Vec<GroupRingElement> =
        basis.iter().map(class_generator).collect::<Result<_>>()?;
    ideal_structure(&generators)
}

/// Checks a commutation symmetry `(C, ε)` on a vector through the idempotent
/// criterion `ε*·v = v`.
pub fn commutation_check(
    v: &StateVector,
    group: &PermGroup,
    eps: &BTreeMap<Permutation, Scalar>,
) -> Result<bool> {
    let idem = commutation_idempotent(group, eps)?;
    class_membership(&idem.star(), v)
}

/// One symmetry jump: the family coefficients that kill the listed sector
/// summands, with the reduced ideal structure on that locus.
#[derive(Clone, Debug)]
pub struct Jump {
    pub vanishing_m: Vec<usize>,
    /// Reduced-echelon basis of the solution subspace, in the coordinate
    /// frame of the input family.
    pub solution_basis: Vec<Vec<Scalar>>,
    pub structure: Structure,
}

/// Jump analysis of a family of independent eigenvectors of one eigenvalue
/// and weight.
#[derive(Clone, Debug)]
pub struct JumpReport {
    pub generic: Structure,
    pub jumps: Vec<Jump>,
}

impl Serialize for JumpReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct JumpOut<'a> {
            vanishing_m: &'a [usize],
            solution_basis: Vec<Vec<String>>,
            structure: StructureOut<'a>,
        }
        struct StructureOut<'a>(&'a Structure);
        impl Serialize for StructureOut<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                #[derive(Serialize)]
                struct Entry<'a> {
                    partition: &'a Partition,
                    multiplicity: usize,
                }
                let entries: Vec<Entry> = self
                    .0
                    .iter()
                    .rev()
                    .filter(|(_, &m)| m > 0)
                    .map(|(partition, &multiplicity)| Entry {
                        partition,
                        multiplicity,
                    })
                    .collect();
                entries.serialize(s)
            }
        }
        let mut st = s.serialize_struct("JumpReport", 2)?;
        st.serialize_field("generic", &StructureOut(&self.generic))?;
        let jumps: Vec<JumpOut> = self
            .jumps
            .iter()
            .map(|j| JumpOut {
                vanishing_m: &j.vanishing_m,
                solution_basis: j
                    .solution_basis
                    .iter()
                    .map(|row| row.iter().map(Scalar::short_string).collect())
                    .collect(),
                structure: StructureOut(&j.structure),
            })
            .collect();
        st.serialize_field("jumps", &jumps)?;
        st.end()
    }
}

/// Raw mirror of the JSON layout for round-tripping.
#[derive(Deserialize)]
pub struct JumpReportJson {
    pub generic: Vec<StructureEntryJson>,
    pub jumps: Vec<JumpJson>,
}

#[derive(Deserialize)]
pub struct JumpJson {
    pub vanishing_m: Vec<usize>,
    pub solution_basis: Vec<Vec<String>>,
    pub structure: Vec<StructureEntryJson>,
}

#[derive(Deserialize)]
pub struct StructureEntryJson {
    pub partition: Vec<usize>,
    pub multiplicity: usize,
}

/// Finds the loci inside `span(U)` where smallest-class sector summands
/// vanish. For each `m` the condition `Σ_l x_l a_{v_l} e_{(N-m,m)} = 0`
/// reduces to the Fourier block of the two-row partition, a system of
/// `n_λ²` equations; maximal subsets of sectors with a common nonzero
/// solution space are reported with reduced-echelon solution bases.
pub fn jump_analysis(family: &[StateVector]) -> Result<JumpReport> {
    let (n, _) = subspace_coords(family)?;
    let wt = family[0].homogeneous_weight()?;
    let k = family.len();
    let coords: Vec<GroupRingElement> = family.iter().map(coset_coords).collect::<Result<_>>()?;
    let young = crate::groupring::uniform_idempotent(&crate::perm::young_subgroup(wt.r1, wt.r2)?);

    let mut generic = Structure::new();
    // Nullspace of each sector system, as k-column matrices (columns = basis).
    let mut sector_nullspaces: Vec<(usize, Partition, Vec<Vec<Scalar>>)> = Vec::new();
    for m in 0..=wt.r1.min(wt.r2) {
        let shape = Partition::two_row(n, m)?;
        let dim = shape.dimension();
        let young_block = dft_block(&young, &shape);
        // Column l of the system: vec(D_λ(a_{v_l}) · D_λ(1_S)).
        let mut system = Mat::zero(dim * dim, k);
        for (l, a) in coords.iter().enumerate() {
            let block = dft_block(a, &shape).mul(&young_block);
            for i in 0..dim {
                for j in 0..dim {
                    *system.at_mut(i * dim + j, l) = block.at(i, j).clone();
                }
            }
        }
        let nullspace = system.nullspace();
        if nullspace.len() == k {
            // Sector vanishes identically; it never contributes.
            continue;
        }
        generic.insert(shape.clone(), 1);
        if !nullspace.is_empty() {
            sector_nullspaces.push((m, shape, nullspace));
        }
    }

    // Lattice walk over subsets of jump-capable sectors, by increasing size,
    // keeping maximal subsets whose combined system still has solutions.
    let capable: Vec<usize> = sector_nullspaces.iter().map(|(m, _, _)| *m).collect();
    let mut alive: Vec<(Vec<usize>, Vec<Vec<Scalar>>)> = Vec::new();
    for (m, _, ns) in &sector_nullspaces {
        alive.push((vec![*m], ns.clone()));
    }
    let mut maximal: Vec<(Vec<usize>, Vec<Vec<Scalar>>)> = Vec::new();
    while !alive.is_empty() {
        let mut next: Vec<(Vec<usize>, Vec<Vec<Scalar>>)> = Vec::new();
        for (subset, space) in &alive {
            let mut extended = false;
            for &m in capable
                .iter()
                .filter(|&&m| m > *subset.last().expect("nonempty"))
            {
                let other = &sector_nullspaces
                    .iter()
                    .find(|(mm, _, _)| *mm == m)
                    .expect("capable sector")
                    .2;
                let joint = intersect_spaces(space, other, k);
                if !joint.is_empty() {
                    let mut s = subset.clone();
                    s.push(m);
                    extended = true;
                    next.push((s, joint));
                }
            }
            if !extended {
                maximal.push((subset.clone(), space.clone()));
            }
        }
        alive = next;
    }
    // A subset survives only if no strict superset anywhere is alive.
    maximal.sort_by(|a, b| a.0.cmp(&b.0));
    maximal.dedup_by(|a, b| a.0 == b.0);
    let maximal: Vec<(Vec<usize>, Vec<Vec<Scalar>>)> = maximal
        .iter()
        .filter(|(subset, _)| {
            !maximal.iter().any(|(other, _)| {
                other.len() > subset.len() && subset.iter().all(|m| other.contains(m))
            })
        })
        .cloned()
        .collect();

    let mut jumps = Vec::new();
    for (subset, space) in maximal {
        let mut structure = generic.clone();
        for &m in &subset {
            structure.remove(&Partition::two_row(n, m)?);
        }
        jumps.push(Jump {
            vanishing_m: subset,
            solution_basis: echelonize(&space, k),
            structure,
        });
    }
    jumps.sort_by(|a, b| a.vanishing_m.cmp(&b.vanishing_m));
    Ok(JumpReport { generic, jumps })
}

/// Intersection of two solution spaces given by bases of k-vectors: the
/// joint nullspace of the stacked annihilator conditions. Computed by
/// solving for coefficients of the first basis that also lie in the second
/// space.
fn intersect_spaces(a: &[Vec<Scalar>], b: &[Vec<Scalar>], k: usize) -> Vec<Vec<Scalar>> {
    // x ∈ span(a) ∩ span(b)  ⟺  x = A·s and the stacked matrix [A | -B]
    // has a nullvector (s, t).
    let a_mat = Mat::from_fn(k, a.len(), |i, j| a[j][i].clone());
    let b_mat = Mat::from_fn(k, b.len(), |i, j| b[j][i].clone());
    let stacked = a_mat.hcat(&b_mat.scale(&-Scalar::one()));
    let mut out = Vec::new();
    for sol in stacked.nullspace() {
        let mut x = vec![Scalar::zero(); k];
        for (j, col) in a.iter().enumerate() {
            for i in 0..k {
                x[i] = &x[i] + &(&sol[j] * &col[i]);
            }
        }
        if x.iter().any(|c| !c.is_zero()) {
            out.push(x);
        }
    }
    // Canonical basis of the intersection.
    echelonize(&out, k)
}

/// Reduced-echelon canonical basis of the span of the given k-vectors.
fn echelonize(vectors: &[Vec<Scalar>], k: usize) -> Vec<Vec<Scalar>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Mat::from_fn(vectors.len(), k, |i, j| vectors[i][j].clone());
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Convenience: subspace equality of two families of coefficient vectors.
pub fn same_span(a: &[Vec<Scalar>], b: &[Vec<Scalar>], k: usize) -> bool {
    echelonize(a, k) == echelonize(b, k)
}

/// Subspace equality of two families of state vectors of a common weight.
pub fn same_subspace(a: &[StateVector], b: &[StateVector]) -> Result<bool> {
    if a.is_empty() || b.is_empty() {
        return Ok(a.is_empty() && b.is_empty());
    }
    let n = a[0].sites();
    let wt = a[0].homogeneous_weight()?;
    let sector = sector_basis(n, wt)?;
    let mat = |vs: &[StateVector]| {
        Mat::from_fn(vs.len(), sector.len(), |i, j| vs[i].amplitude(&sector[j]))
    };
    let ma = mat(a);
    let mb = mat(b);
    let ra = ma.rank();
    let rb = mb.rank();
    Ok(ra == rb && ma.vcat(&mb).rank() == ra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupring::{trivial_character, uniform_idempotent};
    use crate::hilbert::act_ring;
    use crate::perm::{cyclic_group, translation};
    use crate::symrep::structure_string;

    fn sv(n: usize, terms: &[(&str, i64)]) -> StateVector {
        StateVector::from_int_terms(n, terms).unwrap()
    }

    fn v7() -> StateVector {
        sv(4, &[("1122", -1), ("2211", 1)])
    }

    fn v8() -> StateVector {
        sv(4, &[("1122", -1), ("2112", 1)])
    }

    fn v10() -> StateVector {
        sv(4, &[("1122", -1), ("1221", 1)])
    }

    #[test]
    fn stability_of_constant_configuration() {
        let v12 = sv(4, &[("2222", 1)]);
        assert_eq!(stability_vector(&v12).unwrap().order(), 24);
        let rep = stability_line(&v12).unwrap();
        assert_eq!(rep.line_group.order(), 24);
        assert_eq!(rep.vector_group.order(), 24);
    }

    #[test]
    fn stability_of_generic_vectors() {
        assert_eq!(stability_vector(&v8()).unwrap().order(), 1);
        assert_eq!(stability_vector(&v10()).unwrap().order(), 1);
        let v1 = sv(
            4,
            &[
                ("1122", 1),
                ("1212", -2),
                ("1221", 1),
                ("2112", 1),
                ("2121", -2),
                ("2211", 1),
            ],
        );
        assert_eq!(stability_vector(&v1).unwrap().order(), 8);
    }

    #[test]
    fn line_stabilizers_match_reference_sets() {
        let rep = stability_line(&v7()).unwrap();
        let expected = PermGroup::from_elements(
            4,
            [
                [1, 2, 3, 4],
                [1, 2, 4, 3],
                [2, 1, 3, 4],
                [3, 4, 1, 2],
                [2, 1, 4, 3],
                [4, 3, 1, 2],
                [3, 4, 2, 1],
                [4, 3, 2, 1],
            ]
            .iter()
            .map(|im| Permutation::from_one_based(im).unwrap())
            .collect(),
        )
        .unwrap();
        assert_eq!(rep.line_group, expected);
        assert_eq!(rep.vector_group.order(), 4);

        let rep8 = stability_line(&v8()).unwrap();
        assert_eq!(rep8.line_group.order(), 2);
        assert!(rep8
            .line_group
            .contains(&Permutation::from_one_based(&[3, 2, 1, 4]).unwrap()));

        let rep10 = stability_line(&v10()).unwrap();
        assert_eq!(rep10.line_group.order(), 2);
        assert!(rep10
            .line_group
            .contains(&Permutation::from_one_based(&[1, 4, 3, 2]).unwrap()));
    }

    #[test]
    fn eps_is_a_character_with_vector_kernel() {
        let v2 = sv(4, &[("1222", -1), ("2122", 1), ("2212", -1), ("2221", 1)]);
        let rep = stability_line(&v2).unwrap();
        assert_eq!(rep.line_group.order(), 8);
        assert_eq!(rep.vector_group.order(), 4);
        let t = translation(4);
        assert_eq!(rep.eps[&t], -Scalar::one());
        for p in rep.line_group.elements() {
            for q in rep.line_group.elements() {
                let pq = p.compose(q).unwrap();
                assert_eq!(rep.eps[&pq], &rep.eps[p] * &rep.eps[q]);
            }
        }
        for p in rep.vector_group.elements() {
            assert_eq!(rep.eps[p], Scalar::one());
        }
    }

    #[test]
    fn subspace_stabilizer_of_zero_eigenspace() {
        let group = stability_subspace(&[v7(), v8(), v10()]).unwrap();
        let expected = PermGroup::from_elements(
            4,
            [
                [1, 2, 3, 4],
                [1, 4, 3, 2],
                [2, 1, 4, 3],
                [4, 1, 2, 3],
                [2, 3, 4, 1],
                [4, 3, 2, 1],
                [3, 2, 1, 4],
                [3, 4, 1, 2],
            ]
            .iter()
            .map(|im| Permutation::from_one_based(im).unwrap())
            .collect(),
        )
        .unwrap();
        assert_eq!(group, expected);
        assert!(cyclic_group(4).is_subgroup_of(&group));
    }

    #[test]
    fn full_sector_basis_is_stabilized_by_everything() {
        let basis: Vec<StateVector> = sector_basis(4, crate::hilbert::Weight::new(2, 2))
            .unwrap()
            .into_iter()
            .map(StateVector::basis_state)
            .collect();
        let group = stability_subspace(&basis).unwrap();
        assert_eq!(group.order(), 24);
    }

    #[test]
    fn smallest_classes_of_reference_vectors() {
        let v1 = sv(
            4,
            &[
                ("1122", 1),
                ("1212", -2),
                ("1221", 1),
                ("2112", 1),
                ("2121", -2),
                ("2211", 1),
            ],
        );
        assert_eq!(
            smallest_class_vector(&v1).unwrap().structure_string(),
            "[2,2]"
        );

        let v14 = sv(
            4,
            &[
                ("1122", 1),
                ("1212", 1),
                ("1221", 1),
                ("2112", 1),
                ("2121", 1),
                ("2211", 1),
            ],
        );
        assert_eq!(
            smallest_class_vector(&v14).unwrap().structure_string(),
            "[4]"
        );

        let r = smallest_class_vector(&v10()).unwrap();
        assert_eq!(r.structure_string(), "[3,1] + [2,2]");
        assert!(class_membership(&r.generator, &v10()).unwrap());
    }

    #[test]
    fn subspace_class_is_basis_independent() {
        let family = [v7(), v8(), v10()];
        let report = smallest_class_subspace(&family).unwrap();
        assert_eq!(report.structure_string(), "2 [3,1] + [2,2]");
        // Change of basis leaves the ideal unchanged.
        let alt = [v7().add(&v8()).unwrap(), v8(), v10()];
        let report2 = smallest_class_subspace(&alt).unwrap();
        assert_eq!(report2.structure, report.structure);
        assert_eq!(report2.ideal_dimension, report.ideal_dimension);
        // Single vector reduces to the vector case.
        let single = smallest_class_subspace(&[v1_clone()]).unwrap();
        assert_eq!(single.structure_string(), "[2,2]");

        let dependent = [v7(), v7()];
        assert!(matches!(
            smallest_class_subspace(&dependent),
            Err(Error::DependentVectors)
        ));
    }

    fn v1_clone() -> StateVector {
        sv(
            4,
            &[
                ("1122", 1),
                ("1212", -2),
                ("1221", 1),
                ("2112", 1),
                ("2121", -2),
                ("2211", 1),
            ],
        )
    }

    #[test]
    fn commutation_checks() {
        let v1 = v1_clone();
        let group = stability_vector(&v1).unwrap();
        assert!(commutation_check(&v1, &group, &trivial_character(&group)).unwrap());

        let v2 = sv(4, &[("1222", -1), ("2122", 1), ("2212", -1), ("2221", 1)]);
        let c4 = cyclic_group(4);
        let t = translation(4);
        let mut eps = BTreeMap::new();
        let mut power = Permutation::identity(4);
        let mut val = Scalar::one();
        for _ in 0..4 {
            eps.insert(power.clone(), val.clone());
            power = t.compose(&power).unwrap();
            val = -&val;
        }
        assert!(commutation_check(&v2, &c4, &eps).unwrap());
        assert!(!commutation_check(&v8(), &c4, &trivial_character(&c4)).unwrap());
        // Idempotent route agrees with the direct elementwise check.
        for p in c4.elements() {
            let direct = act_perm(p, &v2).unwrap() == v2.scale(&eps[p]);
            assert!(direct);
        }
    }

    #[test]
    fn minimality_of_vector_class() {
        // Any idempotent fixing v absorbs the smallest-class generator.
        let vectors = [v1_clone(), v7(), v8()];
        for v in &vectors {
            let gen = crate::hilbert::class_generator(v).unwrap();
            let mut pool: Vec<GroupRingElement> = crate::symrep::sector_idempotents(2, 2).unwrap();
            let rep = stability_line(v).unwrap();
            pool.push(uniform_idempotent(&rep.vector_group));
            pool.push(
                commutation_idempotent(&rep.line_group, &rep.eps)
                    .unwrap()
                    .star(),
            );
            pool.push(smallest_class_vector(v).unwrap().generator);
            for f in &pool {
                if act_ring(f, v).unwrap() == *v {
                    assert_eq!(f.multiply(&gen).unwrap(), gen);
                }
            }
        }
    }

    #[test]
    fn jump_analysis_of_zero_eigenspace() {
        let report = jump_analysis(&[v7(), v8(), v10()]).unwrap();
        assert_eq!(structure_string(&report.generic), "[3,1] + [2,2]");
        assert_eq!(report.jumps.len(), 2);

        let j1 = &report.jumps[0];
        assert_eq!(j1.vanishing_m, vec![1]);
        assert_eq!(structure_string(&j1.structure), "[2,2]");
        let expected = vec![vec![
            Scalar::one(),
            Scalar::from_int(-1),
            Scalar::from_int(-1),
        ]];
        assert!(same_span(&j1.solution_basis, &expected, 3));

        let j2 = &report.jumps[1];
        assert_eq!(j2.vanishing_m, vec![2]);
        assert_eq!(structure_string(&j2.structure), "[3,1]");
        let expected = vec![
            vec![Scalar::one(), Scalar::zero(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::one(), Scalar::from_int(-1)],
        ];
        assert!(same_span(&j2.solution_basis, &expected, 3));
    }

    #[test]
    fn jump_solutions_kill_their_sectors() {
        let family = [v7(), v8(), v10()];
        let coords: Vec<GroupRingElement> =
            family.iter().map(|v| coset_coords(v).unwrap()).collect();
        let es = crate::symrep::sector_idempotents(2, 2).unwrap();
        let report = jump_analysis(&family).unwrap();
        for jump in &report.jumps {
            for x in &jump.solution_basis {
                for &m in &jump.vanishing_m {
                    let mut acc = GroupRingElement::zero(4);
                    for (l, a) in coords.iter().enumerate() {
                        acc = acc.add(&a.scale(&x[l])).unwrap();
                    }
                    let product = acc.multiply(&es[m]).unwrap();
                    assert!(product.is_zero());
                }
            }
        }
    }

    #[test]
    fn generic_points_have_generic_structure() {
        use rand::{Rng, SeedableRng};
        let family = [v7(), v8(), v10()];
        let report = jump_analysis(&family).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut tested = 0;
        while tested < 100 {
            let x: Vec<i64> = (0..3).map(|_| rng.random_range(-4..=4)).collect();
            if x.iter().all(|&c| c == 0) {
                continue;
            }
            // Skip draws inside a jump subspace.
            let xs: Vec<Scalar> = x.iter().map(|&c| Scalar::from_int(c)).collect();
            let in_jump = report.jumps.iter().any(|j| {
                let mut with = j.solution_basis.clone();
                with.push(xs.clone());
                echelonize(&with, 3).len() == j.solution_basis.len()
            });
            if in_jump {
                continue;
            }
            let mut v = StateVector::zero(4);
            for (l, &c) in x.iter().enumerate() {
                v = v.add(&family[l].scale(&Scalar::from_int(c))).unwrap();
            }
            let structure = smallest_class_vector(&v).unwrap().structure;
            assert_eq!(structure, report.generic);
            tested += 1;
        }
    }

    #[test]
    fn jump_report_serialization() {
        let report = jump_analysis(&[v7(), v8(), v10()]).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["jumps"][0]["vanishing_m"], serde_json::json!([1]));
        assert_eq!(
            json["jumps"][0]["solution_basis"],
            serde_json::json!([["1", "-1", "-1"]])
        );
        let text = serde_json::to_string(&report).unwrap();
        let back: JumpReportJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.jumps.len(), 2);
    }
}
