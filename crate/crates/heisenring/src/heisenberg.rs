//! The ring Hamiltonian on weight sectors: matrix construction, numeric
//! diagonalization with exact rational reconstruction, and eigenspaces.
//!
//! The dimensionless form is the default: off-diagonal entries 1/2 between
//! configurations differing by one antialigned adjacent (cyclic) swap, and a
//! diagonal of (aligned − antialigned)/4 bonds. The ferromagnet is `-J` times
//! that matrix and the antiferromagnet `+J` times it.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};
use crate::hilbert::{sector_basis, SpinConfig, StateVector, Weight};
use crate::linalg::Mat;
use crate::scalar::{rational_candidates, rational_str, Scalar, FLOAT_TOL};

/// Which Hamiltonian to build. The coupling constant only scales the
/// dimensionless matrix: ferromagnet `-J`, antiferromagnet `+J`.
#[derive(Clone, Debug, PartialEq)]
pub enum Model {
    Ferromagnet { coupling: BigRational },
    Antiferromagnet { coupling: BigRational },
    Dimensionless,
}

impl Model {
    pub fn ferromagnet() -> Self {
        Model::Ferromagnet {
            coupling: BigRational::one(),
        }
    }

    pub fn antiferromagnet() -> Self {
        Model::Antiferromagnet {
            coupling: BigRational::one(),
        }
    }

    /// Overall factor relative to the dimensionless matrix.
    fn scale(&self) -> BigRational {
        match self {
            Model::Ferromagnet { coupling } => -coupling.clone(),
            Model::Antiferromagnet { coupling } => coupling.clone(),
            Model::Dimensionless => BigRational::one(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Model::Ferromagnet { .. } => "HF",
            Model::Antiferromagnet { .. } => "HA",
            Model::Dimensionless => "Htilde",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// The Hamiltonian restricted to one weight sector, as an exact symmetric
/// rational matrix over the sector basis (bitmask ascending).
#[derive(Clone, Debug)]
pub struct SectorMatrix {
    pub n: usize,
    pub weight: Weight,
    pub model: Model,
    pub basis: Vec<SpinConfig>,
    entries: Vec<BigRational>,
}

impl SectorMatrix {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn at(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.basis.len() + j]
    }

    pub fn trace(&self) -> BigRational {
        (0..self.dim()).map(|i| self.at(i, i).clone()).sum()
    }

    /// Applies the sector matrix to a coordinate vector.
    pub fn apply_coords(&self, x: &[BigRational]) -> Vec<BigRational> {
        let d = self.dim();
        let mut out = vec![BigRational::zero(); d];
        for (i, slot) in out.iter_mut().enumerate() {
            for (j, xj) in x.iter().enumerate().take(d) {
                let m = self.at(i, j);
                if !m.is_zero() {
                    *slot += m * xj;
                }
            }
        }
        out
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        let d = self.dim();
        DMatrix::from_fn(d, d, |i, j| self.at(i, j).to_f64().expect("entry fits f64"))
    }
}

/// Builds the sector matrix for the chosen model.
pub fn sector_matrix(n: usize, wt: Weight, model: &Model) -> Result<SectorMatrix> {
    if n < 2 {
        return Err(Error::SitesOutOfRange(format!(
            "need at least 2 sites, got {n}"
        )));
    }
    wt.check(n)?;
    let basis = sector_basis(n, wt)?;
    let index = |c: &SpinConfig| basis.binary_search(c).expect("config is in its sector");
    let d = basis.len();
    let quarter = BigRational::new(BigInt::from(1), BigInt::from(4));
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let scale = model.scale();
    let mut entries = vec![BigRational::zero(); d * d];
    for (j, config) in basis.iter().enumerate() {
        let mut diagonal = BigRational::zero();
        for k in 1..=n {
            let next = if k == n { 1 } else { k + 1 };
            if config.value(k) == config.value(next) {
                diagonal += &quarter;
            } else {
                diagonal -= &quarter;
                let flipped = config.swapped(k, next);
                let i = index(&flipped);
                entries[i * d + j] += &half * &scale;
            }
        }
        entries[j * d + j] += diagonal * &scale;
    }
    Ok(SectorMatrix {
        n,
        weight: wt,
        model: model.clone(),
        basis,
        entries,
    })
}

/// Applies the full-space Hamiltonian rule bond by bond; useful as an oracle
/// against the sector matrices and for commutation checks.
pub fn apply_hamiltonian(model: &Model, v: &StateVector) -> Result<StateVector> {
    let n = v.sites();
    if n < 2 {
        return Err(Error::SitesOutOfRange(format!(
            "need at least 2 sites, got {n}"
        )));
    }
    let quarter = Scalar::from_ratio(1, 4);
    let half = Scalar::from_ratio(1, 2);
    let mut out = StateVector::zero(n);
    for (config, amp) in v.amplitudes() {
        for k in 1..=n {
            let next = if k == n { 1 } else { k + 1 };
            if config.value(k) == config.value(next) {
                out = out.add(&StateVector::basis_state(*config).scale(&(amp * &quarter)))?;
            } else {
                out = out.add(&StateVector::basis_state(*config).scale(&-(amp * &quarter)))?;
                out = out.add(
                    &StateVector::basis_state(config.swapped(k, next)).scale(&(amp * &half)),
                )?;
            }
        }
    }
    let scale = Scalar::from_rational(model.scale());
    Ok(out.scale(&scale))
}

/// One eigenpair: exact pairs carry a rational eigenvalue and an
/// integer-scaled eigenvector with zero residual; numeric pairs carry floats
/// with residual at most 1e-9.
#[derive(Clone, Debug)]
pub struct EigenPair {
    pub value: Scalar,
    pub vector: StateVector,
    pub exact: bool,
}

/// Full eigensystem of one sector.
#[derive(Clone, Debug)]
pub struct EigenSystem {
    pub n: usize,
    pub weight: Weight,
    pub model: Model,
    pub pairs: Vec<EigenPair>,
}

impl EigenSystem {
    /// Distinct eigenvalues in ascending order with multiplicities.
    pub fn spectrum(&self) -> Vec<(Scalar, usize)> {
        let mut out: Vec<(Scalar, usize)> = Vec::new();
        for p in &self.pairs {
            match out.last_mut() {
                Some((v, m)) if *v == p.value => *m += 1,
                _ => out.push((p.value.clone(), 1)),
            }
        }
        out
    }

    pub fn eigenvectors_for(&self, value: &Scalar) -> Vec<StateVector> {
        self.pairs
            .iter()
            .filter(|p| &p.value == value)
            .map(|p| p.vector.clone())
            .collect()
    }
}

impl Serialize for EigenSystem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct PairOut<'a> {
            value: String,
            exact: bool,
            vector: &'a StateVector,
        }
        let mut st = s.serialize_struct("EigenSystem", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("weight", &[self.weight.r1, self.weight.r2])?;
        st.serialize_field("model", self.model.name())?;
        let pairs: Vec<PairOut> = self
            .pairs
            .iter()
            .map(|p| PairOut {
                value: p.value.amp_strings().0,
                exact: p.exact,
                vector: &p.vector,
            })
            .collect();
        st.serialize_field("pairs", &pairs)?;
        st.end()
    }
}

/// Raw mirror of the JSON layout, for parsing command output back in.
#[derive(Deserialize)]
pub struct EigenSystemJson {
    pub n: usize,
    pub weight: [usize; 2],
    pub model: String,
    pub pairs: Vec<EigenPairJson>,
}

#[derive(Deserialize)]
pub struct EigenPairJson {
    pub value: String,
    pub exact: bool,
    pub vector: StateVector,
}

const RECONSTRUCTION_DEN_BOUND: u64 = 1_000_000;

/// Diagonalizes a sector matrix. Numeric eigenvalues come from a dense
/// symmetric solver; each candidate eigenvalue is passed through
/// continued-fraction reconstruction and accepted as exact only if the exact
/// nullspace of `M − μI` matches the numeric multiplicity, in which case the
/// eigenvectors are the canonical integer-scaled nullspace basis. Clusters
/// that fail reconstruction stay numeric with residuals at most 1e-9.
pub fn diagonalize(m: &SectorMatrix) -> Result<EigenSystem> {
    let d = m.dim();
    let numeric = nalgebra::SymmetricEigen::new(m.to_f64());
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&a, &b| {
        numeric.eigenvalues[a]
            .partial_cmp(&numeric.eigenvalues[b])
            .expect("finite eigenvalues")
    });

    // Cluster numerically equal eigenvalues.
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for &idx in &order {
        match clusters.last_mut() {
            Some(cluster)
                if (numeric.eigenvalues[idx]
                    - numeric.eigenvalues[*cluster.last().expect("nonempty")])
                .abs()
                    < 1e-8 =>
            {
                cluster.push(idx);
            }
            _ => clusters.push(vec![idx]),
        }
    }

    let mut pairs = Vec::with_capacity(d);
    for cluster in &clusters {
        let mean: f64 =
            cluster.iter().map(|&i| numeric.eigenvalues[i]).sum::<f64>() / cluster.len() as f64;
        let mut exact_done = false;
        for candidate in rational_candidates(mean, RECONSTRUCTION_DEN_BOUND, FLOAT_TOL) {
            let vectors = exact_eigenvectors(m, &candidate)?;
            if vectors.is_empty() {
                continue;
            }
            if vectors.len() != cluster.len() {
                return Err(Error::Reconstruction(format!(
                    "eigenvalue {} has exact multiplicity {} but numeric cluster size {}",
                    rational_str(&candidate),
                    vectors.len(),
                    cluster.len()
                )));
            }
            let value = Scalar::from_rational(candidate);
            for vector in vectors {
                // Exact pairs must have an exactly zero residual.
                let residual_ok = check_exact_residual(m, &value, &vector)?;
                if !residual_ok {
                    return Err(Error::Reconstruction(format!(
                        "nonzero residual for claimed exact eigenvalue {}",
                        value
                    )));
                }
                pairs.push(EigenPair {
                    value: value.clone(),
                    vector,
                    exact: true,
                });
            }
            exact_done = true;
            break;
        }
        if exact_done {
            continue;
        }
        // Numeric fallback: keep solver vectors, check their residuals.
        for &idx in cluster {
            let value = numeric.eigenvalues[idx];
            let column = numeric.eigenvectors.column(idx);
            let mut coords: Vec<f64> = column.iter().copied().collect();
            normalize_float_sign(&mut coords);
            let residual = float_residual(m, value, &coords);
            if residual > FLOAT_TOL {
                return Err(Error::Reconstruction(format!(
                    "numeric eigenpair at {value} has residual {residual:.3e}"
                )));
            }
            let vector = StateVector::from_amplitudes(
                m.n,
                m.basis
                    .iter()
                    .zip(&coords)
                    .map(|(c, &x)| (*c, Scalar::from_float(x, 0.0))),
            )?;
            pairs.push(EigenPair {
                value: Scalar::from_float(value, 0.0),
                vector,
                exact: false,
            });
        }
    }
    debug_assert_eq!(pairs.len(), d);
    Ok(EigenSystem {
        n: m.n,
        weight: m.weight,
        model: m.model.clone(),
        pairs,
    })
}

/// Exact eigenvectors for a candidate rational eigenvalue: the canonical
/// nullspace basis of `M − μI`, integer-scaled with positive leading entry.
fn exact_eigenvectors(m: &SectorMatrix, mu: &BigRational) -> Result<Vec<StateVector>> {
    let d = m.dim();
    let shifted = Mat::from_fn(d, d, |i, j| {
        let mut v = m.at(i, j).clone();
        if i == j {
            v -= mu;
        }
        Scalar::from_rational(v)
    });
    let mut out = Vec::new();
    for coords in shifted.nullspace() {
        let ints = integerize(&coords)?;
        let vector = StateVector::from_amplitudes(
            m.n,
            m.basis
                .iter()
                .zip(ints)
                .map(|(c, x)| (*c, Scalar::from_rational(x))),
        )?;
        out.push(vector);
    }
    Ok(out)
}

/// Scales exact rational coordinates to integers with gcd one and a positive
/// first nonzero entry.
fn integerize(coords: &[Scalar]) -> Result<Vec<BigRational>> {
    use num_integer::Integer;
    let mut rationals = Vec::with_capacity(coords.len());
    for c in coords {
        let Some(r) = c.as_real_rational() else {
            return Err(Error::Reconstruction(
                "complex entry in a real nullspace".into(),
            ));
        };
        rationals.push(r.clone());
    }
    let mut lcm = BigInt::one();
    for r in &rationals {
        lcm = lcm.lcm(r.denom());
    }
    let mut ints: Vec<BigInt> = rationals
        .iter()
        .map(|r| (r * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut gcd = BigInt::zero();
    for v in &ints {
        gcd = gcd.gcd(v);
    }
    if !gcd.is_zero() && !gcd.is_one() {
        for v in &mut ints {
            *v /= &gcd;
        }
    }
    if let Some(first) = ints.iter().find(|v| !v.is_zero()) {
        if first.is_negative() {
            for v in &mut ints {
                *v = -v.clone();
            }
        }
    }
    Ok(ints.into_iter().map(BigRational::from_integer).collect())
}

fn check_exact_residual(m: &SectorMatrix, value: &Scalar, vector: &StateVector) -> Result<bool> {
    let mu = value.as_real_rational().expect("exact eigenvalue").clone();
    let coords: Vec<BigRational> = m
        .basis
        .iter()
        .map(|c| {
            vector
                .amplitude(c)
                .as_real_rational()
                .cloned()
                .unwrap_or_else(BigRational::zero)
        })
        .collect();
    let image = m.apply_coords(&coords);
    Ok(image.iter().zip(&coords).all(|(got, x)| got == &(&mu * x)))
}

fn float_residual(m: &SectorMatrix, value: f64, coords: &[f64]) -> f64 {
    let d = m.dim();
    let mut worst = 0.0f64;
    for i in 0..d {
        let mut acc = 0.0;
        for (j, xj) in coords.iter().enumerate().take(d) {
            let entry = m.at(i, j).to_f64().expect("entry fits f64");
            acc += entry * xj;
        }
        worst = worst.max((acc - value * coords[i]).abs());
    }
    worst
}

fn normalize_float_sign(coords: &mut [f64]) {
    if let Some(first) = coords.iter().find(|x| x.abs() > FLOAT_TOL) {
        if *first < 0.0 {
            for x in coords.iter_mut() {
                *x = -*x;
            }
        }
    }
}

/// Basis of the eigenspace of `μ` inside one weight sector. For an exact `μ`
/// this is the canonical exact nullspace basis; float values select numeric
/// pairs within tolerance.
pub fn eigenspace(n: usize, mu: &Scalar, wt: Weight, model: &Model) -> Result<Vec<StateVector>> {
    let m = sector_matrix(n, wt, model)?;
    match mu.as_real_rational() {
        Some(r) => {
            let vectors = exact_eigenvectors(&m, r)?;
            if vectors.is_empty() {
                return Err(Error::NotAnEigenvalue(rational_str(r)));
            }
            Ok(vectors)
        }
        None => {
            let system = diagonalize(&m)?;
            let vectors = system.eigenvectors_for(mu);
            if vectors.is_empty() {
                return Err(Error::NotAnEigenvalue(mu.short_string()));
            }
            Ok(vectors)
        }
    }
}

/// Eigensystems for every weight sector of the ring, ascending in `r1`.
pub fn all_sectors(n: usize, model: &Model) -> Result<Vec<EigenSystem>> {
    (0..=n)
        .map(|r1| {
            let wt = Weight::new(r1, n - r1);
            diagonalize(&sector_matrix(n, wt, model)?)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(n: usize, terms: &[(&str, i64)]) -> StateVector {
        StateVector::from_int_terms(n, terms).unwrap()
    }

    #[test]
    fn single_config_sector_has_unit_eigenvalue() {
        let m = sector_matrix(4, Weight::new(0, 4), &Model::Dimensionless).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.at(0, 0), &BigRational::one());
        let sys = diagonalize(&m).unwrap();
        assert_eq!(sys.pairs.len(), 1);
        assert!(sys.pairs[0].exact);
        assert_eq!(sys.pairs[0].value, Scalar::from_int(1));
    }

    #[test]
    fn alternating_config_diagonal() {
        let m = sector_matrix(4, Weight::new(2, 2), &Model::Dimensionless).unwrap();
        let idx = m.basis.iter().position(|c| c.digits() == "1212").unwrap();
        assert_eq!(m.at(idx, idx), &BigRational::from_integer((-1).into()));
    }

    #[test]
    fn sector_matrices_are_symmetric() {
        for n in 2..=8 {
            for r1 in 0..=n {
                let wt = Weight::new(r1, n - r1);
                let m = sector_matrix(n, wt, &Model::Dimensionless).unwrap();
                for i in 0..m.dim() {
                    for j in 0..m.dim() {
                        assert_eq!(m.at(i, j), m.at(j, i));
                    }
                }
            }
        }
    }

    #[test]
    fn sector_matrix_matches_full_space_rule() {
        for n in 2..=6 {
            for r1 in 0..=n {
                let wt = Weight::new(r1, n - r1);
                let m = sector_matrix(n, wt, &Model::Dimensionless).unwrap();
                for (j, config) in m.basis.iter().enumerate() {
                    let image = apply_hamiltonian(
                        &Model::Dimensionless,
                        &StateVector::basis_state(*config),
                    )
                    .unwrap();
                    // Image stays in the sector.
                    assert_eq!(image.homogeneous_weight().unwrap(), wt);
                    for (i, other) in m.basis.iter().enumerate() {
                        assert_eq!(
                            image.amplitude(other),
                            Scalar::from_rational(m.at(i, j).clone()),
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn models_are_scaled_copies() {
        let base = sector_matrix(4, Weight::new(2, 2), &Model::Dimensionless).unwrap();
        let ferro = sector_matrix(4, Weight::new(2, 2), &Model::ferromagnet()).unwrap();
        let anti = sector_matrix(4, Weight::new(2, 2), &Model::antiferromagnet()).unwrap();
        for i in 0..base.dim() {
            for j in 0..base.dim() {
                assert_eq!(&-base.at(i, j).clone(), ferro.at(i, j));
                assert_eq!(base.at(i, j), anti.at(i, j));
            }
        }
    }

    #[test]
    fn four_site_half_filled_spectrum() {
        let m = sector_matrix(4, Weight::new(2, 2), &Model::Dimensionless).unwrap();
        let sys = diagonalize(&m).unwrap();
        let spectrum: Vec<(String, usize)> = sys
            .spectrum()
            .iter()
            .map(|(v, m)| (v.short_string(), *m))
            .collect();
        assert_eq!(
            spectrum,
            vec![
                ("-2".to_string(), 1),
                ("-1".to_string(), 1),
                ("0".to_string(), 3),
                ("1".to_string(), 1)
            ]
        );
        assert!(sys.pairs.iter().all(|p| p.exact));
    }

    #[test]
    fn eigenvalue_one_has_total_multiplicity_five() {
        let sectors = all_sectors(4, &Model::Dimensionless).unwrap();
        let total: usize = sectors
            .iter()
            .flat_map(|s| s.spectrum())
            .filter(|(v, _)| v == &Scalar::from_int(1))
            .map(|(_, m)| m)
            .sum();
        assert_eq!(total, 5);
        let count: usize = sectors.iter().map(|s| s.pairs.len()).sum();
        assert_eq!(count, 16);
    }

    #[test]
    fn alternating_vector_is_eigenvector() {
        let v3 = sv(4, &[("1212", -1), ("2121", 1)]);
        let image = apply_hamiltonian(&Model::Dimensionless, &v3).unwrap();
        assert_eq!(image, v3.scale(&Scalar::from_int(-1)));
    }

    #[test]
    fn trace_equals_eigenvalue_sum() {
        for n in 2..=6 {
            for r1 in 0..=n {
                let m = sector_matrix(n, Weight::new(r1, n - r1), &Model::Dimensionless).unwrap();
                let sys = diagonalize(&m).unwrap();
                let sum = sys
                    .pairs
                    .iter()
                    .fold(Scalar::zero(), |acc, p| &acc + &p.value);
                assert_eq!(sum, Scalar::from_rational(m.trace()), "n={n} r1={r1}");
            }
        }
    }

    #[test]
    fn five_site_has_numeric_pairs_with_small_residual() {
        // Golden-ratio-type eigenvalues are irrational; the numeric path must
        // carry them with tight residuals.
        let m = sector_matrix(5, Weight::new(4, 1), &Model::Dimensionless).unwrap();
        let sys = diagonalize(&m).unwrap();
        assert_eq!(sys.pairs.len(), 5);
        assert!(sys.pairs.iter().any(|p| !p.exact));
        for p in &sys.pairs {
            if !p.exact {
                let image = apply_hamiltonian(&Model::Dimensionless, &p.vector).unwrap();
                let scaled = p.vector.scale(&p.value);
                assert!(image == scaled);
            }
        }
    }

    #[test]
    fn eigenspace_examples() {
        let zero = Scalar::zero();
        let space = eigenspace(4, &zero, Weight::new(2, 2), &Model::Dimensionless).unwrap();
        assert_eq!(space.len(), 3);
        // The span is model-invariant: H maps each basis vector into it.
        let basis_mat = |vs: &[StateVector]| {
            let sector = sector_basis(4, Weight::new(2, 2)).unwrap();
            Mat::from_fn(vs.len(), sector.len(), |i, j| vs[i].amplitude(&sector[j]))
        };
        let mat = basis_mat(&space);
        for v in &space {
            let image = apply_hamiltonian(&Model::Dimensionless, v).unwrap();
            let stacked = mat.vcat(&basis_mat(&[image]));
            assert_eq!(stacked.rank(), mat.rank());
        }

        let minus2 = Scalar::from_int(-2);
        let space = eigenspace(4, &minus2, Weight::new(2, 2), &Model::Dimensionless).unwrap();
        assert_eq!(space.len(), 1);
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
        assert_eq!(space[0], v1);

        let one = Scalar::from_int(1);
        let space = eigenspace(4, &one, Weight::new(4, 0), &Model::Dimensionless).unwrap();
        assert_eq!(space.len(), 1);
        assert_eq!(
            space[0],
            StateVector::basis_state(SpinConfig::parse("1111").unwrap())
        );

        assert!(matches!(
            eigenspace(
                4,
                &Scalar::from_int(7),
                Weight::new(2, 2),
                &Model::Dimensionless
            ),
            Err(Error::NotAnEigenvalue(_))
        ));
    }

    #[test]
    fn two_site_ring_is_self_consistent() {
        let m = sector_matrix(2, Weight::new(1, 1), &Model::Dimensionless).unwrap();
        let sys = diagonalize(&m).unwrap();
        assert_eq!(sys.pairs.len(), 2);
        let sum = sys
            .pairs
            .iter()
            .fold(Scalar::zero(), |acc, p| &acc + &p.value);
        assert_eq!(sum, Scalar::from_rational(m.trace()));
    }

    #[test]
    fn exact_vectors_are_integer_normalized() {
        let m = sector_matrix(4, Weight::new(2, 2), &Model::Dimensionless).unwrap();
        let sys = diagonalize(&m).unwrap();
        for p in &sys.pairs {
            let first = p
                .vector
                .amplitudes()
                .next()
                .map(|(_, a)| a.clone())
                .unwrap();
            // First (canonical-order) nonzero amplitude is a positive integer.
            let r = first.as_real_rational().unwrap();
            assert!(r.is_integer() && r.is_positive());
        }
    }

    #[test]
    fn serde_layout() {
        let m = sector_matrix(4, Weight::new(0, 4), &Model::Dimensionless).unwrap();
        let sys = diagonalize(&m).unwrap();
        let json = serde_json::to_value(&sys).unwrap();
        assert_eq!(json["model"], "Htilde");
        assert_eq!(json["weight"], serde_json::json!([0, 4]));
        assert_eq!(json["pairs"][0]["value"], "1/1");
        assert_eq!(json["pairs"][0]["exact"], true);
        let back: EigenSystemJson = serde_json::from_value(json).unwrap();
        assert_eq!(back.pairs.len(), 1);
    }
}
