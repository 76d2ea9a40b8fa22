//! Input file formats and loading.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use tracelab_core::artinian::{ArtinianAlgebra, PresentedModule, RMatrix};
use tracelab_core::field::PrimeField;
use tracelab_core::ideal::{ModuleSum, ValueIdeal};
use tracelab_core::semigroup::{NumericalSemigroup, SemigroupSpec};

use crate::error::CliError;
use crate::poly::{parse_monomial, parse_poly};

pub type Algebra = Arc<ArtinianAlgebra<PrimeField>>;

/// `{"semigroup": {...}, "values": [0, 1]}`: the closure of `values + S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub semigroup: SemigroupSpec,
    pub values: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleFile {
    pub summands: Vec<IdealFile>,
}

/// Either a single ideal or a direct sum of ideals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SemigroupModuleFile {
    Sum(ModuleFile),
    Ideal(IdealFile),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub p: u64,
    pub vars: Vec<String>,
    pub monomial_relations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ArtModuleFile {
    ResidueField,
    /// Submodule of the regular representation.
    Ideal { generators: Vec<String> },
    /// Cokernel of the matrix.
    Presentation { matrix: Vec<Vec<String>> },
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json {
        path: path.display().to_string(),
        source,
    })
}

pub fn semigroup(spec: &SemigroupSpec) -> Result<Arc<NumericalSemigroup>, CliError> {
    Ok(Arc::new(NumericalSemigroup::from_generators(&spec.generators)?))
}

pub fn ideal(file: &IdealFile) -> Result<ValueIdeal, CliError> {
    Ok(ValueIdeal::from_values(&semigroup(&file.semigroup)?, &file.values)?)
}

/// Builds the module; summands written over the same generators share one
/// semigroup.
pub fn module_sum(file: &SemigroupModuleFile) -> Result<ModuleSum, CliError> {
    let files = match file {
        SemigroupModuleFile::Sum(m) => m.summands.clone(),
        SemigroupModuleFile::Ideal(i) => vec![i.clone()],
    };
    let first = files.first().ok_or_else(|| CliError::Usage("module has no summands".into()))?;
    let s = semigroup(&first.semigroup)?;
    let summands = files
        .iter()
        .map(|f| {
            let t = semigroup(&f.semigroup)?;
            if t != s {
                return Err(CliError::Core(tracelab_core::Error::SemigroupMismatch));
            }
            Ok(ValueIdeal::from_values(&s, &f.values)?)
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(ModuleSum::new(summands)?)
}

pub fn algebra(file: &AlgebraFile) -> Result<Algebra, CliError> {
    let field = PrimeField::new(file.p)
        .ok_or_else(|| CliError::Usage(format!("p = {} is not a prime below 2^31", file.p)))?;
    let relations = file
        .monomial_relations
        .iter()
        .map(|r| parse_monomial(r, &file.vars))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Arc::new(ArtinianAlgebra::monomial_quotient(
        field,
        file.vars.clone(),
        relations,
    )?))
}

pub fn art_module(file: &ArtModuleFile, alg: &Algebra) -> Result<PresentedModule<PrimeField>, CliError> {
    Ok(match file {
        ArtModuleFile::ResidueField => PresentedModule::residue_field(alg),
        ArtModuleFile::Ideal { generators } => {
            let gens = generators
                .iter()
                .map(|g| parse_poly(g, alg))
                .collect::<Result<Vec<_>, _>>()?;
            PresentedModule::ideal(alg, gens)
        }
        ArtModuleFile::Presentation { matrix } => PresentedModule::cokernel(&parse_matrix(matrix, alg)?),
    })
}

pub fn parse_matrix(rows: &[Vec<String>], alg: &Algebra) -> Result<RMatrix<PrimeField>, CliError> {
    let entries = rows
        .iter()
        .map(|row| row.iter().map(|e| parse_poly(e, alg)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RMatrix::from_entries(alg, entries)?)
}
