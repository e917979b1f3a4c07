//! Finite dictionaries of unit-norm atoms: construction, validation, the
//! minimum-l1-mass semi-norm, and plain-text load/save.

use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::DictionaryError;
use crate::linprog::min_l1_representation;
use crate::matrix::Matrix;
use crate::vector::{dot, Vector};

/// How tightly atom norms must match 1.
pub const UNIT_NORM_TOL: f64 = 1e-12;

const RANDOM_RETRY_CAP: usize = 16;

/// Construction flavor; `Custom` is the only kind that may skip spanning.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DictionaryKind {
    CanonicalBasis,
    UnionOfBases,
    RandomUnit,
    Custom,
}

impl DictionaryKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            DictionaryKind::CanonicalBasis => "canonical_basis",
            DictionaryKind::UnionOfBases => "union_of_bases",
            DictionaryKind::RandomUnit => "random_unit",
            DictionaryKind::Custom => "custom",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "canonical_basis" => Some(DictionaryKind::CanonicalBasis),
            "union_of_bases" => Some(DictionaryKind::UnionOfBases),
            "random_unit" => Some(DictionaryKind::RandomUnit),
            "custom" => Some(DictionaryKind::Custom),
            _ => None,
        }
    }
}

/// Indexed finite collection of unit-norm atoms.
#[derive(Debug, Clone, PartialEq)]
pub struct Dictionary {
    atoms: Vec<Vector>,
    kind: DictionaryKind,
}

impl Dictionary {
    /// The canonical basis e_1 .. e_n of R^n.
    pub fn canonical_basis(n: usize) -> Result<Self, DictionaryError> {
        if n == 0 {
            return Err(DictionaryError::ZeroDimension);
        }
        let atoms = (0..n).map(|i| Vector::basis(n, i)).collect();
        Ok(Self {
            atoms,
            kind: DictionaryKind::CanonicalBasis,
        })
    }

    /// Concatenates the atom lists of several dictionaries; duplicates are
    /// retained.
    pub fn union_of_bases(bases: &[Dictionary]) -> Result<Self, DictionaryError> {
        assert!(!bases.is_empty(), "union needs at least one dictionary");
        let dim = bases[0].dimension();
        let mut atoms = Vec::new();
        for b in bases {
            if b.dimension() != dim {
                return Err(DictionaryError::DimensionMismatch {
                    left: dim,
                    right: b.dimension(),
                });
            }
            atoms.extend(b.atoms.iter().cloned());
        }
        let dict = Self {
            atoms,
            kind: DictionaryKind::UnionOfBases,
        };
        dict.check_unit_norms()?;
        dict.check_spanning()?;
        Ok(dict)
    }

    /// `count` random unit atoms in R^n, deterministic for a fixed seed.
    /// Resamples a fresh batch when the spanning check fails, up to a retry
    /// cap.
    pub fn random_unit(n: usize, count: usize, seed: u64) -> Result<Self, DictionaryError> {
        if n == 0 {
            return Err(DictionaryError::ZeroDimension);
        }
        if count < n {
            return Err(DictionaryError::TooFewAtoms { dim: n, count });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..RANDOM_RETRY_CAP {
            let mut atoms = Vec::with_capacity(count);
            for _ in 0..count {
                loop {
                    let raw: Vec<f64> = (0..n)
                        .map(|_| StandardNormal.sample(&mut rng))
                        .collect();
                    let v = Vector::new(raw).expect("normal samples are finite");
                    let norm = v.norm();
                    if norm > 1e-8 {
                        atoms.push(v.scale(1.0 / norm));
                        break;
                    }
                }
            }
            let dict = Self {
                atoms,
                kind: DictionaryKind::RandomUnit,
            };
            if dict.check_spanning().is_ok() {
                return Ok(dict);
            }
        }
        Err(DictionaryError::RetriesExhausted {
            attempts: RANDOM_RETRY_CAP,
        })
    }

    /// Wraps explicit atoms without a spanning requirement. Norms are still
    /// validated.
    pub fn custom(atoms: Vec<Vector>) -> Result<Self, DictionaryError> {
        assert!(!atoms.is_empty(), "dictionary needs at least one atom");
        let dim = atoms[0].dim();
        for a in &atoms {
            if a.dim() != dim {
                return Err(DictionaryError::DimensionMismatch {
                    left: dim,
                    right: a.dim(),
                });
            }
        }
        let dict = Self {
            atoms,
            kind: DictionaryKind::Custom,
        };
        dict.check_unit_norms()?;
        Ok(dict)
    }

    pub fn dimension(&self) -> usize {
        self.atoms[0].dim()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn kind(&self) -> DictionaryKind {
        self.kind
    }

    pub fn atom(&self, i: usize) -> &Vector {
        &self.atoms[i]
    }

    pub fn atoms(&self) -> &[Vector] {
        &self.atoms
    }

    fn check_unit_norms(&self) -> Result<(), DictionaryError> {
        for (index, a) in self.atoms.iter().enumerate() {
            let norm = a.norm();
            if (norm - 1.0).abs() > UNIT_NORM_TOL {
                return Err(DictionaryError::NonUnitAtom { index, norm });
            }
        }
        Ok(())
    }

    fn check_spanning(&self) -> Result<(), DictionaryError> {
        let dim = self.dimension();
        let rows: Vec<Vec<f64>> = self.atoms.iter().map(|a| a.as_slice().to_vec()).collect();
        let rank = Matrix::from_rows(rows)
            .expect("atoms share a dimension")
            .rank();
        if rank < dim {
            return Err(DictionaryError::RankDeficient { rank, dim });
        }
        Ok(())
    }

    /// Smallest total coefficient mass `sum |c_phi|` over representations
    /// `x = sum c_phi phi`.
    ///
    /// For the canonical basis the representation is unique and the value is
    /// the exact coordinate l1 norm. Other kinds go through an exact
    /// linear-program search over all finite representations, so the result
    /// is exact at desk scale and in any case an upper bound for the
    /// infimum over representations.
    pub fn l1_seminorm_upper_bound(&self, x: &Vector) -> Result<f64, DictionaryError> {
        if x.dim() != self.dimension() {
            return Err(DictionaryError::DimensionMismatch {
                left: self.dimension(),
                right: x.dim(),
            });
        }
        if x.is_zero() {
            return Ok(0.0);
        }
        if self.kind == DictionaryKind::CanonicalBasis {
            return Ok(x.iter().map(|v| v.abs()).sum());
        }
        let columns: Vec<&[f64]> = self.atoms.iter().map(|a| a.as_slice()).collect();
        min_l1_representation(&columns, x.as_slice()).ok_or(DictionaryError::NotInSpan)
    }

    /// Writes `n count kind` then one atom per line.
    pub fn save(&self, path: &Path) -> Result<(), DictionaryError> {
        let mut out = String::new();
        out.push_str(&format!(
            "{} {} {}\n",
            self.dimension(),
            self.len(),
            self.kind.as_str()
        ));
        for a in &self.atoms {
            let line: Vec<String> = a.iter().map(|v| format!("{v}")).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        let mut f = std::fs::File::create(path)?;
        f.write_all(out.as_bytes())?;
        Ok(())
    }

    /// Reads the format written by [`Dictionary::save`], re-validating unit
    /// norms and (for non-custom kinds) spanning.
    pub fn load(path: &Path) -> Result<Self, DictionaryError> {
        let reader = BufReader::new(std::fs::File::open(path)?);
        let mut lines = reader.lines();
        let header = lines
            .next()
            .ok_or_else(|| DictionaryError::Parse {
                line: 1,
                message: "empty file".into(),
            })??;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(DictionaryError::Parse {
                line: 1,
                message: format!("expected 'n count kind', got '{header}'"),
            });
        }
        let n: usize = parts[0].parse().map_err(|_| DictionaryError::Parse {
            line: 1,
            message: format!("bad dimension '{}'", parts[0]),
        })?;
        let count: usize = parts[1].parse().map_err(|_| DictionaryError::Parse {
            line: 1,
            message: format!("bad count '{}'", parts[1]),
        })?;
        let kind = DictionaryKind::parse(parts[2]).ok_or_else(|| DictionaryError::Parse {
            line: 1,
            message: format!("unknown kind '{}'", parts[2]),
        })?;
        let mut atoms = Vec::with_capacity(count);
        for (i, line) in lines.enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let entries: Result<Vec<f64>, _> =
                line.split_whitespace().map(|t| t.parse::<f64>()).collect();
            let entries = entries.map_err(|e| DictionaryError::Parse {
                line: i + 2,
                message: format!("bad number: {e}"),
            })?;
            if entries.len() != n {
                return Err(DictionaryError::Parse {
                    line: i + 2,
                    message: format!("expected {n} entries, got {}", entries.len()),
                });
            }
            atoms.push(Vector::new(entries)?);
        }
        if atoms.len() != count {
            return Err(DictionaryError::Parse {
                line: 1,
                message: format!("header announced {count} atoms, found {}", atoms.len()),
            });
        }
        let dict = Self { atoms, kind };
        dict.check_unit_norms()?;
        if kind != DictionaryKind::Custom {
            dict.check_spanning()?;
        }
        Ok(dict)
    }
}
