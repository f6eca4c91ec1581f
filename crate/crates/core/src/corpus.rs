//! Bundled example structures and brute-force oracles.

use std::path::Path;
use std::sync::Arc;

use num_traits::One;
use thiserror::Error;

use crate::bialgebra::{grouplike_forcing, Congruence, ForcingCheck, MonoidAlgebraElement};
use crate::exactlin::{rat, ratio, Rational};
use crate::graded::{GradedError, GradedFDAlgebra};
use crate::semilattice::{sort_characters, Character, FiniteSemilattice, SemilatticeError};

/// Largest semilattice the bit-vector oracle accepts.
pub const BRUTE_CHARACTER_LIMIT: usize = 16;
/// Largest quotient dimension the grid oracle accepts.
pub const GRID_DIMENSION_LIMIT: usize = 6;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("size {size} exceeds the oracle limit {limit}")]
    SizeLimit { size: usize, limit: usize },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{name}: {source}")]
    Semilattice { name: String, source: SemilatticeError },
    #[error("{name}: {source}")]
    Graded { name: String, source: GradedError },
}

/// The chain `n1 < … < nm` under max.
pub fn chain(m: usize) -> FiniteSemilattice {
    let labels = (1..=m).map(|i| format!("n{i}")).collect();
    let table = (0..m).map(|i| (0..m).map(|j| i.max(j)).collect()).collect();
    FiniteSemilattice::from_table(labels, table, 0).expect("chains are semilattices")
}

/// Subsets of `{1, …, k}` under union, labelled like `{}`, `{1}`, `{1,2}`.
pub fn boolean(k: usize) -> FiniteSemilattice {
    let n = 1usize << k;
    let labels = (0..n)
        .map(|mask| {
            let members: Vec<String> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| (b + 1).to_string()).collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    let table = (0..n).map(|a| (0..n).map(|b| a | b).collect()).collect();
    FiniteSemilattice::from_table(labels, table, 0).expect("boolean lattices are semilattices")
}

/// Divisors of `n` under lcm, identity 1.
pub fn divisors(n: u64) -> FiniteSemilattice {
    let divs: Vec<u64> = (1..=n).filter(|&d| n.is_multiple_of(d)).collect();
    let gcd = |mut a: u64, mut b: u64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let table = divs
        .iter()
        .map(|&a| divs.iter().map(|&b| divs.iter().position(|&d| d == a / gcd(a, b) * b).unwrap()).collect())
        .collect();
    FiniteSemilattice::from_table(divs.iter().map(u64::to_string).collect(), table, 0)
        .expect("divisor lattices are semilattices")
}

const SEMILATTICE_FILES: &[(&str, &str)] = &[
    ("chain1", include_str!("../corpus/chain1.slat")),
    ("chain2", include_str!("../corpus/chain2.slat")),
    ("chain3", include_str!("../corpus/chain3.slat")),
    ("chain4", include_str!("../corpus/chain4.slat")),
    ("chain5", include_str!("../corpus/chain5.slat")),
    ("chain6", include_str!("../corpus/chain6.slat")),
    ("chain7", include_str!("../corpus/chain7.slat")),
    ("chain8", include_str!("../corpus/chain8.slat")),
    ("boolean1", include_str!("../corpus/boolean1.slat")),
    ("boolean2", include_str!("../corpus/boolean2.slat")),
    ("boolean3", include_str!("../corpus/boolean3.slat")),
    ("div12", include_str!("../corpus/div12.slat")),
    ("div30", include_str!("../corpus/div30.slat")),
    ("div36", include_str!("../corpus/div36.slat")),
];

const GRADED_FILES: &[(&str, &str)] = &[
    ("ut1", include_str!("../corpus/ut1.galg")),
    ("ut2", include_str!("../corpus/ut2.galg")),
    ("ut3", include_str!("../corpus/ut3.galg")),
    ("ut4", include_str!("../corpus/ut4.galg")),
    ("ut5", include_str!("../corpus/ut5.galg")),
];

/// Directory holding the corpus text files in the source tree.
pub fn corpus_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/corpus"))
}

/// Named semilattices and graded algebras.
#[derive(Debug, Clone)]
pub struct ExampleSet {
    pub semilattices: Vec<(String, FiniteSemilattice)>,
    pub graded: Vec<(String, Arc<GradedFDAlgebra>)>,
}

impl ExampleSet {
    /// The corpus compiled into the library.
    pub fn bundled() -> Result<Self, CorpusError> {
        let semilattices = SEMILATTICE_FILES
            .iter()
            .map(|(name, text)| {
                FiniteSemilattice::parse(text)
                    .map(|s| (name.to_string(), s))
                    .map_err(|source| CorpusError::Semilattice { name: name.to_string(), source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let resolve = |path: &str| {
            let stem = path.trim_end_matches(".slat");
            semilattices
                .iter()
                .find(|(n, _)| n == stem)
                .map(|(_, s)| s.clone())
                .ok_or_else(|| GradedError::Semilattice(SemilatticeError::UnknownLabel(path.to_string())))
        };
        let graded = GRADED_FILES
            .iter()
            .map(|(name, text)| {
                GradedFDAlgebra::parse(text, resolve)
                    .map(|a| (name.to_string(), Arc::new(a)))
                    .map_err(|source| CorpusError::Graded { name: name.to_string(), source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ExampleSet { semilattices, graded })
    }

    /// Loads every `.slat` and `.galg` file in `dir`, sorted by file name.
    pub fn load_dir(dir: &Path) -> Result<Self, CorpusError> {
        let io = |path: &Path, source| CorpusError::Io { path: path.display().to_string(), source };
        let mut entries: Vec<_> =
            std::fs::read_dir(dir).map_err(|e| io(dir, e))?.filter_map(Result::ok).map(|e| e.path()).collect();
        entries.sort();
        let mut set = ExampleSet { semilattices: Vec::new(), graded: Vec::new() };
        for path in &entries {
            let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or_default().to_string();
            match path.extension().and_then(|e| e.to_str()) {
                Some("slat") => set.semilattices.push((name, load_semilattice(path)?)),
                Some("galg") => set.graded.push((name, Arc::new(load_graded(path)?))),
                _ => {}
            }
        }
        Ok(set)
    }

    pub fn semilattice(&self, name: &str) -> Option<&FiniteSemilattice> {
        self.semilattices.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }
}

pub fn load_semilattice(path: &Path) -> Result<FiniteSemilattice, CorpusError> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io { path: name.clone(), source })?;
    FiniteSemilattice::parse(&text).map_err(|source| CorpusError::Semilattice { name, source })
}

/// Loads a graded algebra; its `semilattice:` path is resolved relative to
/// the file's directory.
pub fn load_graded(path: &Path) -> Result<GradedFDAlgebra, CorpusError> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io { path: name.clone(), source })?;
    let base = path.parent().unwrap_or(Path::new("."));
    GradedFDAlgebra::parse(&text, |rel| {
        let target = base.join(rel);
        let body = std::fs::read_to_string(&target).map_err(|e| {
            GradedError::Semilattice(SemilatticeError::UnknownLabel(format!("{}: {e}", target.display())))
        })?;
        Ok(FiniteSemilattice::parse(&body)?)
    })
    .map_err(|source| CorpusError::Graded { name, source })
}

/// Tests every bit vector against the character equations directly.
pub fn brute_characters(s: &FiniteSemilattice) -> Result<Vec<Character>, CorpusError> {
    let n = s.len();
    if n > BRUTE_CHARACTER_LIMIT {
        return Err(CorpusError::SizeLimit { size: n, limit: BRUTE_CHARACTER_LIMIT });
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        let values: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        let ok = values[s.identity()] && (0..n).all(|a| (0..n).all(|b| values[s.op(a, b)] == (values[a] && values[b])));
        if ok {
            out.push(Character { values });
        }
    }
    sort_characters(&mut out);
    Ok(out)
}

/// Outcome of the grid search for group-likes in k(S/~).
#[derive(Debug, Clone)]
pub struct GridOracle {
    /// Coefficient vectors on the grid that are group-like.
    pub found: Vec<Vec<Rational>>,
    /// The complete symbolic argument; the grid alone is only a sample of ℚ.
    pub forcing: ForcingCheck,
    pub dimension: usize,
}

impl GridOracle {
    /// Every vector found is a standard basis vector, every standard basis
    /// vector is found, and the symbolic check passes.
    pub fn agrees_with_basis(&self) -> bool {
        let basis: Vec<Vec<Rational>> =
            (0..self.dimension).map(|i| (0..self.dimension).map(|j| rat((i == j) as i64)).collect()).collect();
        let mut found = self.found.clone();
        found.sort();
        let mut expected = basis;
        expected.sort();
        found == expected && self.forcing.passed(self.dimension)
    }
}

/// Enumerates coefficient vectors over `{−1, 0, 1/2, 1, 2}` in the quotient
/// monoid algebra and records the group-like ones, then runs the symbolic
/// forcing check.
pub fn brute_grouplikes_smallfield(c: &Congruence) -> Result<GridOracle, CorpusError> {
    let quotient = Arc::new(c.quotient());
    let d = quotient.len();
    if d > GRID_DIMENSION_LIMIT {
        return Err(CorpusError::SizeLimit { size: d, limit: GRID_DIMENSION_LIMIT });
    }
    let grid = [rat(-1), rat(0), ratio(1, 2), Rational::one(), rat(2)];
    let mut found = Vec::new();
    let total = grid.len().pow(d as u32);
    for mut code in 0..total {
        let coords: Vec<Rational> = (0..d)
            .map(|_| {
                let v = grid[code % grid.len()].clone();
                code /= grid.len();
                v
            })
            .collect();
        let a = MonoidAlgebraElement::from_terms(&quotient, coords.iter().cloned().enumerate());
        if a.is_grouplike() {
            found.push(coords);
        }
    }
    Ok(GridOracle { found, forcing: grouplike_forcing(&quotient), dimension: d })
}
