//! Cross-module invariants: ring axioms, the star anti-automorphism, an
//! independent character-theoretic oracle for ideal structures, eigenspace
//! commutation, and translation invariance at five and six sites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use heisenring::groupring::{uniform_idempotent, GroupRingElement};
use heisenring::heisenberg::{all_sectors, apply_hamiltonian, Model};
use heisenring::hilbert::{act_perm, act_ring, class_generator, sector_basis, StateVector, Weight};
use heisenring::linalg::Mat;
use heisenring::perm::{all_permutations, translation, Permutation};
use heisenring::reference::reference_data;
use heisenring::scalar::Scalar;
use heisenring::symanalysis::{smallest_class_subspace, stability_line};
use heisenring::symrep::{dft, ideal_multiplicities, sector_idempotents};
use heisenring::tableau::Partition;

fn rand_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        images.swap(i, j);
    }
    Permutation::from_one_based(&images).unwrap()
}

fn rand_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let re = Scalar::from_ratio(rng.random_range(-3..=3), rng.random_range(1..=3));
    if rng.random_bool(0.3) {
        &re + &(&Scalar::from_int(rng.random_range(-2..=2)) * &Scalar::i())
    } else {
        re
    }
}

fn rand_element(rng: &mut ChaCha8Rng, n: usize, max_terms: usize) -> GroupRingElement {
    GroupRingElement::from_terms(
        n,
        (0..rng.random_range(1..=max_terms)).map(|_| (rand_perm(rng, n), rand_scalar(rng))),
    )
    .unwrap()
}

#[test]
fn ring_axioms_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..200 {
        let n = 2 + i % 4;
        let a = rand_element(&mut rng, n, 4);
        let b = rand_element(&mut rng, n, 4);
        let c = rand_element(&mut rng, n, 4);
        let assoc_l = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let assoc_r = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        assert!(assoc_l == assoc_r, "associativity sample {i}");
        let dist_l = a.multiply(&b.add(&c).unwrap()).unwrap();
        let dist_r = a
            .multiply(&b)
            .unwrap()
            .add(&a.multiply(&c).unwrap())
            .unwrap();
        assert!(dist_l == dist_r, "distributivity sample {i}");
    }
}

#[test]
fn star_is_an_anti_automorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..200 {
        let n = 2 + i % 4;
        let a = rand_element(&mut rng, n, 4);
        let b = rand_element(&mut rng, n, 4);
        let lhs = a.multiply(&b).unwrap().star();
        let rhs = b.star().multiply(&a.star()).unwrap();
        assert!(lhs == rhs, "anti-automorphism sample {i}");
        assert!(a.star().star() == a, "involution sample {i}");
    }
}

/// Independent oracle: central idempotents from the degree-four character
/// table split any right ideal into its isotypic parts; multiplicities are
/// column-space dimensions divided by the irreducible dimension.
#[test]
fn ideal_multiplicities_match_character_oracle() {
    let cycle_type = |p: &Permutation| {
        let mut seen = [false; 4];
        let mut lens = Vec::new();
        for start in 0..4 {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = p.apply0(i);
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable();
        lens
    };
    // (cycle type, character values per partition in [4],[3,1],[2,2],[2,1,1],[1^4] order)
    let character = |p: &Permutation| -> [i64; 5] {
        match cycle_type(p).as_slice() {
            [1, 1, 1, 1] => [1, 3, 2, 3, 1],
            [1, 1, 2] => [1, 1, 0, -1, -1],
            [2, 2] => [1, -1, 2, -1, 1],
            [1, 3] => [1, 0, -1, 0, 1],
            [1, 4] | [4] => [1, -1, 0, 1, -1],
            other => panic!("impossible cycle type {other:?}"),
        }
    };
    let partitions = [
        Partition::new(vec![4]).unwrap(),
        Partition::new(vec![3, 1]).unwrap(),
        Partition::new(vec![2, 2]).unwrap(),
        Partition::new(vec![2, 1, 1]).unwrap(),
        Partition::new(vec![1, 1, 1, 1]).unwrap(),
    ];
    let perms = all_permutations(4);
    // Central idempotents z_λ = (n_λ/24) Σ_p χ_λ(p⁻¹) p.
    let centrals: Vec<GroupRingElement> = (0..5)
        .map(|k| {
            let dim = partitions[k].dimension() as i64;
            GroupRingElement::from_terms(
                4,
                perms.iter().map(|p| {
                    let chi = character(&p.inverse())[k];
                    (p.clone(), Scalar::from_ratio(dim * chi, 24))
                }),
            )
            .unwrap()
        })
        .collect();

    let data = reference_data().unwrap();
    let mut generators: Vec<GroupRingElement> = ["v1", "v8", "v14"]
        .iter()
        .map(|n| class_generator(&data.fixture(n).unwrap().vector).unwrap())
        .collect();
    generators.push(GroupRingElement::identity(4));
    generators.push(uniform_idempotent(
        &heisenring::symanalysis::stability_vector(&data.fixture("v3").unwrap().vector).unwrap(),
    ));

    let sorted = {
        let mut ps = perms.clone();
        ps.sort();
        ps
    };
    for g in &generators {
        let structure = ideal_multiplicities(std::slice::from_ref(g)).unwrap();
        for (k, shape) in partitions.iter().enumerate() {
            // Span of {z_λ · g · δ_p} over all p, as coefficient columns.
            let zg = centrals[k].multiply(g).unwrap();
            let span = Mat::from_fn(24, 24, |i, j| {
                zg.multiply(&GroupRingElement::basis(sorted[j].clone()))
                    .unwrap()
                    .coefficient(&sorted[i])
            });
            let isotypic_dim = span.rank();
            assert_eq!(isotypic_dim % shape.dimension(), 0);
            let expected = isotypic_dim / shape.dimension();
            assert_eq!(
                structure.get(shape).copied().unwrap_or(0),
                expected,
                "multiplicity of {shape}"
            );
        }
    }
}

/// Every vector of the subspace lies in the symmetry class of the summed
/// ideal, not only the basis.
#[test]
fn summed_ideal_contains_every_combination() {
    let data = reference_data().unwrap();
    let family: Vec<StateVector> = ["v7", "v8", "v10"]
        .iter()
        .map(|n| data.fixture(n).unwrap().vector.clone())
        .collect();
    let report = smallest_class_subspace(&family).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..25 {
        let mut u = StateVector::zero(4);
        for v in &family {
            u = u
                .add(&v.scale(&Scalar::from_int(rng.random_range(-3..=3))))
                .unwrap();
        }
        if u.is_zero() {
            continue;
        }
        assert!(heisenring::hilbert::class_membership(&report.generator, &u).unwrap());
    }
}

/// Sector terms of a smallest class live in distinct two-sided blocks, so
/// their ideals intersect trivially and ranks add.
#[test]
fn sector_terms_are_block_disjoint() {
    let data = reference_data().unwrap();
    for f in &data.fixtures {
        let wt = f.weight;
        let coords = heisenring::hilbert::coset_coords(&f.vector).unwrap();
        let es = sector_idempotents(wt.r1, wt.r2).unwrap();
        let mut support_total = heisenring::symrep::Structure::new();
        for (m, e) in es.iter().enumerate() {
            let g = coords.multiply(e).unwrap();
            if g.is_zero() {
                continue;
            }
            let shape = Partition::two_row(4, m).unwrap();
            let blocks = dft(&g);
            for (other, block) in blocks.iter() {
                if other == &shape {
                    assert_eq!(block.rank(), 1, "{}: sector m={m}", f.name);
                } else {
                    assert!(block.is_zero(), "{}: stray block {other}", f.name);
                }
            }
            *support_total.entry(shape).or_insert(0) += 1;
        }
        // Rank additivity: the combined class is the sum of its sector terms.
        let full = ideal_multiplicities(std::slice::from_ref(&class_generator(&f.vector).unwrap()))
            .unwrap();
        assert_eq!(full, support_total, "{}", f.name);
    }
}

/// The generating idempotent of an eigenspace class commutes with the
/// Hamiltonian on that eigenspace: both orders give the eigenvalue action.
#[test]
fn eigenspace_idempotent_commutes_with_hamiltonian() {
    let data = reference_data().unwrap();
    let mut cells: std::collections::BTreeMap<(i64, usize), Vec<StateVector>> =
        std::collections::BTreeMap::new();
    for f in &data.fixtures {
        cells
            .entry((f.eigenvalue, f.weight.r1))
            .or_default()
            .push(f.vector.clone());
    }
    for ((mu, _), space) in &cells {
        let report = smallest_class_subspace(space).unwrap();
        let e = &report.generator;
        let mu = Scalar::from_int(*mu);
        for u in space {
            let hu = apply_hamiltonian(&Model::Dimensionless, u).unwrap();
            let left = act_ring(e, &hu).unwrap();
            let right = apply_hamiltonian(&Model::Dimensionless, &act_ring(e, u).unwrap()).unwrap();
            let expected = u.scale(&mu);
            assert!(left == expected);
            assert!(right == expected);
        }
    }
}

/// A_v is the kernel of the line character on every reference vector.
#[test]
fn line_character_kernels() {
    let data = reference_data().unwrap();
    for f in &data.fixtures {
        let report = stability_line(&f.vector).unwrap();
        assert!(
            report.vector_group.is_subgroup_of(&report.line_group),
            "{}",
            f.name
        );
        for p in report.line_group.elements() {
            let fixes = act_perm(p, &f.vector).unwrap() == f.vector;
            assert_eq!(
                fixes,
                report.eps[p] == Scalar::one(),
                "{}: kernel at {p}",
                f.name
            );
        }
    }
}

/// Ring translations map every eigenspace into itself at five and six sites.
#[test]
fn translations_stabilize_eigenspaces_beyond_four_sites() {
    for n in [5usize, 6] {
        let t = translation(n);
        for sys in all_sectors(n, &Model::Dimensionless).unwrap() {
            let sector = sector_basis(n, sys.weight).unwrap();
            for (value, _) in sys.spectrum() {
                let space = sys.eigenvectors_for(&value);
                let coords = Mat::from_fn(space.len(), sector.len(), |i, j| {
                    space[i].amplitude(&sector[j])
                });
                let base_rank = coords.rank();
                for v in &space {
                    let moved = act_perm(&t, v).unwrap();
                    let row = Mat::from_fn(1, sector.len(), |_, j| moved.amplitude(&sector[j]));
                    assert_eq!(
                        coords.vcat(&row).rank(),
                        base_rank,
                        "n={n} weight={} value={}",
                        sys.weight,
                        value
                    );
                }
            }
        }
    }
}

/// Weight sectors are invariant under the whole symmetric-group action.
#[test]
fn action_preserves_weight_sectors() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..100 {
        let n = 2 + rng.random_range(0..4usize);
        let r2 = rng.random_range(0..=n);
        let wt = Weight::new(n - r2, r2);
        let basis = sector_basis(n, wt).unwrap();
        let pick = basis[rng.random_range(0..basis.len())];
        let p = rand_perm(&mut rng, n);
        let moved = act_perm(&p, &StateVector::basis_state(pick)).unwrap();
        assert_eq!(moved.homogeneous_weight().unwrap(), wt);
    }
}
