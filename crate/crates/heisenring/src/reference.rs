//! Built-in reference dataset for the four-site ring: the sixteen named
//! eigenvectors of the dimensionless Hamiltonian with their eigenvalues,
//! weights, stability-group orders, line-stabilizer element sets, ideal
//! structures and the jump table of the half-filled zero eigenspace.
//!
//! Loading verifies that every vector is an eigenvector of its stated
//! eigenvalue, so corrupted data cannot propagate silently.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::heisenberg::{apply_hamiltonian, Model};
use crate::hilbert::{StateVector, Weight};
use crate::perm::{PermGroup, Permutation};
use crate::scalar::Scalar;
use crate::symrep::Structure;
use crate::tableau::Partition;

/// One named reference eigenvector with its table row.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub eigenvalue: i64,
    pub weight: Weight,
    pub vector: StateVector,
    pub vector_order: usize,
    pub line_order: usize,
}

/// The whole reference dataset.
#[derive(Clone, Debug)]
pub struct ReferenceData {
    pub fixtures: Vec<Fixture>,
    /// Expected line-stabilizer element sets for v1, v7, v8, v10.
    pub line_groups: BTreeMap<&'static str, PermGroup>,
    /// Expected smallest-class structures per vector name.
    pub smallest_class: BTreeMap<&'static str, Structure>,
    /// Expected structures of the commutation-class ideal `1_{A_v}·C[S_4]`.
    pub commutation_class: BTreeMap<&'static str, Structure>,
    /// Expected structure of the summed ideal of the zero eigenspace.
    pub zero_space_structure: Structure,
    /// Expected stabilizer of the half-filled zero eigenspace.
    pub zero_space_group: PermGroup,
    /// Expected jump rows: vanishing sectors, solution span in the
    /// (v7, v8, v10) frame, and reduced structure.
    pub jump_rows: Vec<JumpRow>,
}

#[derive(Clone, Debug)]
pub struct JumpRow {
    pub vanishing_m: Vec<usize>,
    pub solution_span: Vec<Vec<i64>>,
    pub structure: Structure,
}

fn vec4(terms: &[(&str, i64)]) -> StateVector {
    StateVector::from_int_terms(4, terms).expect("valid reference vector")
}

fn group4(images: &[[usize; 4]]) -> PermGroup {
    PermGroup::from_elements(
        4,
        images
            .iter()
            .map(|im| Permutation::from_one_based(im).expect("valid"))
            .collect(),
    )
    .expect("reference set is a group")
}

fn structure(entries: &[(&[usize], usize)]) -> Structure {
    entries
        .iter()
        .map(|&(parts, m)| (Partition::new(parts.to_vec()).expect("valid partition"), m))
        .collect()
}

/// Loads and verifies the reference dataset.
pub fn reference_data() -> Result<ReferenceData> {
    type Row = (
        &'static str,
        i64,
        (usize, usize),
        Vec<(&'static str, i64)>,
        usize,
        usize,
    );
    let rows: Vec<Row> = vec![
        (
            "v1",
            -2,
            (2, 2),
            vec![
                ("1122", 1),
                ("1212", -2),
                ("1221", 1),
                ("2112", 1),
                ("2121", -2),
                ("2211", 1),
            ],
            8,
            8,
        ),
        (
            "v2",
            -1,
            (1, 3),
            vec![("1222", -1), ("2122", 1), ("2212", -1), ("2221", 1)],
            4,
            8,
        ),
        ("v3", -1, (2, 2), vec![("1212", -1), ("2121", 1)], 4, 8),
        (
            "v4",
            -1,
            (3, 1),
            vec![("1112", -1), ("1121", 1), ("1211", -1), ("2111", 1)],
            4,
            8,
        ),
        ("v5", 0, (1, 3), vec![("2122", -1), ("2221", 1)], 2, 4),
        ("v6", 0, (1, 3), vec![("1222", -1), ("2212", 1)], 2, 4),
        ("v7", 0, (2, 2), vec![("1122", -1), ("2211", 1)], 4, 8),
        ("v8", 0, (2, 2), vec![("1122", -1), ("2112", 1)], 1, 2),
        ("v9", 0, (3, 1), vec![("1121", -1), ("2111", 1)], 2, 4),
        ("v10", 0, (2, 2), vec![("1122", -1), ("1221", 1)], 1, 2),
        ("v11", 0, (3, 1), vec![("1112", -1), ("1211", 1)], 2, 4),
        ("v12", 1, (0, 4), vec![("2222", 1)], 24, 24),
        (
            "v13",
            1,
            (1, 3),
            vec![("1222", 1), ("2122", 1), ("2212", 1), ("2221", 1)],
            24,
            24,
        ),
        (
            "v14",
            1,
            (2, 2),
            vec![
                ("1122", 1),
                ("1212", 1),
                ("1221", 1),
                ("2112", 1),
                ("2121", 1),
                ("2211", 1),
            ],
            24,
            24,
        ),
        (
            "v15",
            1,
            (3, 1),
            vec![("1112", 1), ("1121", 1), ("1211", 1), ("2111", 1)],
            24,
            24,
        ),
        ("v16", 1, (4, 0), vec![("1111", 1)], 24, 24),
    ];

    let mut fixtures = Vec::with_capacity(rows.len());
    for (name, eigenvalue, (r1, r2), terms, vector_order, line_order) in rows {
        let vector = vec4(&terms);
        let weight = Weight::new(r1, r2);
        // Verified at load: each vector is an eigenvector of its eigenvalue.
        let image = apply_hamiltonian(&Model::Dimensionless, &vector)?;
        if image != vector.scale(&Scalar::from_int(eigenvalue)) {
            return Err(Error::VerificationFailed(format!(
                "{name} is not an eigenvector of {eigenvalue}"
            )));
        }
        if vector.homogeneous_weight()? != weight {
            return Err(Error::VerificationFailed(format!(
                "{name} has the wrong weight"
            )));
        }
        fixtures.push(Fixture {
            name,
            eigenvalue,
            weight,
            vector,
            vector_order,
            line_order,
        });
    }

    let mut line_groups = BTreeMap::new();
    line_groups.insert(
        "v1",
        group4(&[
            [1, 2, 3, 4],
            [1, 4, 3, 2],
            [2, 1, 4, 3],
            [4, 1, 2, 3],
            [2, 3, 4, 1],
            [4, 3, 2, 1],
            [3, 2, 1, 4],
            [3, 4, 1, 2],
        ]),
    );
    line_groups.insert(
        "v7",
        group4(&[
            [1, 2, 3, 4],
            [1, 2, 4, 3],
            [2, 1, 3, 4],
            [3, 4, 1, 2],
            [2, 1, 4, 3],
            [4, 3, 1, 2],
            [3, 4, 2, 1],
            [4, 3, 2, 1],
        ]),
    );
    line_groups.insert("v8", group4(&[[1, 2, 3, 4], [3, 2, 1, 4]]));
    line_groups.insert("v10", group4(&[[1, 2, 3, 4], [1, 4, 3, 2]]));

    let mut smallest_class = BTreeMap::new();
    smallest_class.insert("v1", structure(&[(&[2, 2], 1)]));
    smallest_class.insert("v3", structure(&[(&[3, 1], 1)]));
    smallest_class.insert("v7", structure(&[(&[3, 1], 1)]));
    smallest_class.insert("v8", structure(&[(&[3, 1], 1), (&[2, 2], 1)]));
    smallest_class.insert("v10", structure(&[(&[3, 1], 1), (&[2, 2], 1)]));
    smallest_class.insert("v14", structure(&[(&[4], 1)]));

    let full_ring = structure(&[
        (&[4], 1),
        (&[3, 1], 3),
        (&[2, 2], 2),
        (&[2, 1, 1], 3),
        (&[1, 1, 1, 1], 1),
    ]);
    let mut commutation_class = BTreeMap::new();
    commutation_class.insert("v1", structure(&[(&[4], 1), (&[2, 2], 1)]));
    commutation_class.insert("v3", structure(&[(&[4], 1), (&[3, 1], 1), (&[2, 2], 1)]));
    commutation_class.insert("v7", structure(&[(&[4], 1), (&[3, 1], 1), (&[2, 2], 1)]));
    commutation_class.insert("v8", full_ring.clone());
    commutation_class.insert("v10", full_ring);
    commutation_class.insert("v14", structure(&[(&[4], 1)]));

    let zero_space_structure = structure(&[(&[3, 1], 2), (&[2, 2], 1)]);
    let zero_space_group = group4(&[
        [1, 2, 3, 4],
        [1, 4, 3, 2],
        [2, 1, 4, 3],
        [4, 1, 2, 3],
        [2, 3, 4, 1],
        [4, 3, 2, 1],
        [3, 2, 1, 4],
        [3, 4, 1, 2],
    ]);

    let jump_rows = vec![
        JumpRow {
            vanishing_m: vec![1],
            solution_span: vec![vec![1, -1, -1]],
            structure: structure(&[(&[2, 2], 1)]),
        },
        JumpRow {
            vanishing_m: vec![2],
            solution_span: vec![vec![1, 0, 0], vec![0, 1, -1]],
            structure: structure(&[(&[3, 1], 1)]),
        },
    ];

    Ok(ReferenceData {
        fixtures,
        line_groups,
        smallest_class,
        commutation_class,
        zero_space_structure,
        zero_space_group,
        jump_rows,
    })
}

impl ReferenceData {
    pub fn fixture(&self, name: &str) -> Option<&Fixture> {
        self.fixtures.iter().find(|f| f.name == name)
    }

    /// Fixtures of one eigenvalue/weight cell, in table order.
    pub fn cell(&self, eigenvalue: i64, weight: Weight) -> Vec<&Fixture> {
        self.fixtures
            .iter()
            .filter(|f| f.eigenvalue == eigenvalue && f.weight == weight)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_and_verifies() {
        let data = reference_data().unwrap();
        assert_eq!(data.fixtures.len(), 16);
        assert_eq!(data.fixture("v8").unwrap().vector_order, 1);
        assert_eq!(data.cell(0, Weight::new(2, 2)).len(), 3);
        assert_eq!(data.line_groups["v7"].order(), 8);
    }

    #[test]
    fn eigenvalue_one_vectors_are_full_orbit_sums() {
        let data = reference_data().unwrap();
        for f in &data.fixtures {
            if f.eigenvalue == 1 {
                assert_eq!(f.vector_order, 24);
            }
        }
    }
}
