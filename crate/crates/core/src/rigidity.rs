//! Embeddings, rigidity matrices and generic rank estimation.
//!
//! Genericity is realized by sampling integer coordinates uniformly from a
//! wide box and taking the maximum rank over several independent trials,
//! each with its own embedding and its own random 63-bit prime. Every trial
//! rank is a lower bound on the generic rank.

use std::collections::HashSet;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::{banana_bunch, Family};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::linalg::{random_prime, rank_exact, ModpEchelon, ScalarMatrix};
use crate::{binom2, trivial_motions};

pub const DEFAULT_RANGE: i64 = 1 << 20;
pub const DEFAULT_TRIALS: usize = 3;
pub const DEFAULT_SEED: u64 = 42;

/// Integer coordinates for every vertex, stored as `n` blocks of `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    d: usize,
    coords: Vec<i64>,
}

impl Embedding {
    /// Builds an embedding from explicit points, which must be distinct and
    /// all of length `d`.
    pub fn new(d: usize, points: &[Vec<i64>]) -> Result<Self> {
        let mut coords = Vec::with_capacity(points.len() * d);
        for p in points {
            if p.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: p.len(),
                });
            }
            coords.extend_from_slice(p);
        }
        let e = Embedding { d, coords };
        let distinct: HashSet<&[i64]> = e.points().collect();
        if distinct.len() != points.len() {
            return Err(Error::CoincidentPoints);
        }
        Ok(e)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.coords.len().checked_div(self.d).unwrap_or(0)
    }

    pub fn point(&self, v: usize) -> &[i64] {
        &self.coords[v * self.d..(v + 1) * self.d]
    }

    pub fn points(&self) -> impl Iterator<Item = &[i64]> {
        (0..self.n()).map(move |v| self.point(v))
    }

    pub fn translated(&self, shift: &[i64]) -> Result<Embedding> {
        if shift.len() != self.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                got: shift.len(),
            });
        }
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(i, &c)| c + shift[i % self.d])
            .collect();
        Ok(Embedding { d: self.d, coords })
    }

    pub fn scaled(&self, factor: i64) -> Result<Embedding> {
        if factor == 0 {
            return Err(Error::TooSmall {
                what: "scale factor magnitude",
                min: 1,
                got: 0,
            });
        }
        Ok(Embedding {
            d: self.d,
            coords: self.coords.iter().map(|&c| c * factor).collect(),
        })
    }

    /// Moves vertex `i` to label `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Embedding {
        let mut coords = vec![0; self.coords.len()];
        for (v, &to) in perm.iter().enumerate() {
            coords[to * self.d..(to + 1) * self.d].copy_from_slice(self.point(v));
        }
        Embedding { d: self.d, coords }
    }
}

/// Random embedding with coordinates uniform in `[-range, range]`;
/// coincident points are resampled.
pub fn random_embedding(g: &Graph, d: usize, seed: u64, range: i64) -> Result<Embedding> {
    random_points(g.n(), d, &mut ChaCha8Rng::seed_from_u64(seed), range)
}

fn random_points<R: Rng>(n: usize, d: usize, rng: &mut R, range: i64) -> Result<Embedding> {
    if d == 0 {
        return Err(Error::TooSmall {
            what: "dimension",
            min: 1,
            got: 0,
        });
    }
    let side = u128::try_from(range).unwrap_or(0) * 2 + 1;
    let capacity = (0..d).try_fold(1u128, |acc, _| acc.checked_mul(side));
    if range < 1 || capacity.is_some_and(|c| c < n as u128) {
        return Err(Error::RangeTooSmall { n, d, range });
    }
    let mut seen = HashSet::with_capacity(n);
    let mut coords = Vec::with_capacity(n * d);
    while seen.len() < n {
        let p: Vec<i64> = (0..d).map(|_| rng.gen_range(-range..=range)).collect();
        if seen.insert(p.clone()) {
            coords.extend(p);
        }
    }
    Ok(Embedding { d, coords })
}

/// Row of the rigidity matrix for the pair `(u, v)`.
pub fn edge_row(emb: &Embedding, u: usize, v: usize) -> Vec<i64> {
    let d = emb.d;
    let mut row = vec![0i64; emb.n() * d];
    for k in 0..d {
        let diff = emb.point(u)[k] - emb.point(v)[k];
        row[u * d + k] = diff;
        row[v * d + k] = -diff;
    }
    row
}

fn check_embedding(g: &Graph, emb: &Embedding) -> Result<()> {
    if emb.n() != g.n() {
        return Err(Error::PointCountMismatch {
            expected: g.n(),
            got: emb.n(),
        });
    }
    Ok(())
}

/// The `m × dn` rigidity matrix: rows in canonical edge order, column
/// blocks by vertex label.
pub fn rigidity_matrix(g: &Graph, emb: &Embedding) -> Result<ScalarMatrix> {
    check_embedding(g, emb)?;
    let cols = g.n() * emb.d;
    let mut entries = Vec::with_capacity(g.m() * cols);
    for (u, v) in g.edges() {
        entries.extend(edge_row(emb, u, v));
    }
    ScalarMatrix::integer(g.m(), cols, entries)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankMode {
    /// Modular rank on every trial.
    #[default]
    Modp,
    /// Modular rank on every trial plus the exact rank of the first embedding.
    Exact,
    /// Modular and exact rank on every trial.
    Both,
}

impl RankMode {
    fn exact_on(self, trial: usize) -> bool {
        match self {
            RankMode::Modp => false,
            RankMode::Exact => trial == 0,
            RankMode::Both => true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankOptions {
    pub trials: usize,
    pub seed: u64,
    pub range: i64,
    pub mode: RankMode,
}

impl Default for RankOptions {
    fn default() -> Self {
        RankOptions {
            trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
            range: DEFAULT_RANGE,
            mode: RankMode::Modp,
        }
    }
}

impl RankOptions {
    pub fn with_seed(seed: u64) -> Self {
        RankOptions {
            seed,
            ..Self::default()
        }
    }

    pub fn mode(mut self, mode: RankMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }
}

/// Seeds and primes for each trial, drawn in order from the master seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialPlan {
    pub trial: usize,
    pub embedding_seed: u64,
    pub prime: u64,
}

pub fn plan_trials(opts: &RankOptions) -> Vec<TrialPlan> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    (0..opts.trials.max(1))
        .map(|trial| {
            let embedding_seed = rng.next_u64();
            let prime = random_prime(&mut rng);
            TrialPlan {
                trial,
                embedding_seed,
                prime,
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialRecord {
    #[serde(flatten)]
    pub plan: TrialPlan,
    pub rank_mod_p: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank_exact: Option<usize>,
}

/// Generic rank estimate with the per-trial log that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericRank {
    pub rank: usize,
    pub trials: Vec<TrialRecord>,
    /// Whether every exact rank matched the modular rank of the same
    /// embedding; `None` when no exact rank was computed.
    pub exact_agrees: Option<bool>,
}

impl GenericRank {
    /// Highest exact rank over the trials, if any were computed.
    pub fn exact_rank(&self) -> Option<usize> {
        self.trials.iter().filter_map(|t| t.rank_exact).max()
    }
}

/// Maximum rank over independent random embeddings.
pub fn generic_rank(g: &Graph, d: usize, opts: &RankOptions) -> Result<GenericRank> {
    let trials = plan_trials(opts)
        .into_par_iter()
        .map(|plan| {
            let emb = random_embedding(g, d, plan.embedding_seed, opts.range)?;
            let m = rigidity_matrix(g, &emb)?;
            let rank_mod_p = m.reduce_mod(plan.prime)?.rank();
            let rank_exact = if opts.mode.exact_on(plan.trial) {
                Some(rank_exact(&m)?)
            } else {
                None
            };
            Ok(TrialRecord {
                plan,
                rank_mod_p,
                rank_exact,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let rank = trials
        .iter()
        .map(|t| t.rank_mod_p.max(t.rank_exact.unwrap_or(0)))
        .max()
        .unwrap_or(0);
    let checked: Vec<bool> = trials
        .iter()
        .filter_map(|t| t.rank_exact.map(|e| e == t.rank_mod_p))
        .collect();
    let exact_agrees = (!checked.is_empty()).then(|| checked.iter().all(|&ok| ok));
    Ok(GenericRank {
        rank,
        trials,
        exact_agrees,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    MinimallyRigid,
    RigidOverconstrained,
    FlexibleIndependent,
    FlexibleDependent,
}

impl Classification {
    pub fn from_counts(dof: usize, independent: bool) -> Self {
        match (dof == 0, independent) {
            (true, true) => Classification::MinimallyRigid,
            (true, false) => Classification::RigidOverconstrained,
            (false, true) => Classification::FlexibleIndependent,
            (false, false) => Classification::FlexibleDependent,
        }
    }

    pub fn is_rigid(self) -> bool {
        matches!(
            self,
            Classification::MinimallyRigid | Classification::RigidOverconstrained
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Classification::MinimallyRigid => "minimally-rigid",
            Classification::RigidOverconstrained => "rigid-overconstrained",
            Classification::FlexibleIndependent => "flexible-independent",
            Classification::FlexibleDependent => "flexible-dependent",
        }
    }
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Classification {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        [
            Classification::MinimallyRigid,
            Classification::RigidOverconstrained,
            Classification::FlexibleIndependent,
            Classification::FlexibleDependent,
        ]
        .into_iter()
        .find(|c| c.as_str() == s)
        .ok_or_else(|| format!("unknown classification `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityVerdict {
    pub d: usize,
    pub n: usize,
    pub m: usize,
    pub rank: usize,
    pub nullity: usize,
    pub dof: usize,
    pub independent: bool,
    pub classification: Classification,
    /// The rank matched a proven value for the graph's family.
    pub certified: bool,
}

/// Verdict from an already computed generic rank.
pub fn verdict_from_rank(g: &Graph, d: usize, rank: usize) -> Result<RigidityVerdict> {
    if g.n() < d {
        return Err(Error::BelowDimension { n: g.n(), d });
    }
    let nullity = d * g.n() - rank;
    let trivial = trivial_motions(d);
    if nullity < trivial {
        return Err(Error::TrivialMotionBound { nullity, trivial });
    }
    let dof = nullity - trivial;
    let independent = rank == g.m();
    Ok(RigidityVerdict {
        d,
        n: g.n(),
        m: g.m(),
        rank,
        nullity,
        dof,
        independent,
        classification: Classification::from_counts(dof, independent),
        certified: false,
    })
}

/// Classifies `g` in dimension `d`. Graphs on fewer than `d` vertices are
/// refused.
pub fn classify(g: &Graph, d: usize, opts: &RankOptions) -> Result<RigidityVerdict> {
    if g.n() < d {
        return Err(Error::BelowDimension { n: g.n(), d });
    }
    let gr = generic_rank(g, d, opts)?;
    verdict_from_rank(g, d, gr.rank)
}

/// Like [`classify`], marking the verdict certified when the rank equals the
/// proven rank of `family`.
pub fn classify_family(
    g: &Graph,
    d: usize,
    family: &Family,
    opts: &RankOptions,
) -> Result<RigidityVerdict> {
    let mut v = classify(g, d, opts)?;
    v.certified = family.proven_rank(d) == Some(v.rank);
    Ok(v)
}

fn check_candidates(g: &Graph, candidates: &[Edge]) -> Result<()> {
    for &(u, v) in candidates {
        for x in [u, v] {
            if x >= g.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: g.n(),
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if g.has_edge(u, v) {
            return Err(Error::CandidateIsEdge(u.min(v), u.max(v)));
        }
    }
    Ok(())
}

/// Non-edges whose rigidity row lies in the row space of the rigidity
/// matrix for every trial embedding.
///
/// Defaults to all non-edges. Each trial tests the base and augmented
/// matrices on the same embedding; exact modes additionally confirm with
/// rational ranks on the trials they cover.
pub fn implied_edges(
    g: &Graph,
    d: usize,
    candidates: Option<&[Edge]>,
    opts: &RankOptions,
) -> Result<Vec<Edge>> {
    let all;
    let candidates = match candidates {
        Some(c) => c,
        None => {
            all = g.non_edges();
            &all
        }
    };
    check_candidates(g, candidates)?;
    let per_trial = plan_trials(opts)
        .into_par_iter()
        .map(|plan| -> Result<Vec<bool>> {
            let emb = random_embedding(g, d, plan.embedding_seed, opts.range)?;
            let m = rigidity_matrix(g, &emb)?;
            let mut ech = ModpEchelon::new(plan.prime, m.cols())?;
            for row in m.row_iter() {
                ech.insert(row);
            }
            let base_exact = if opts.mode.exact_on(plan.trial) {
                Some(rank_exact(&m)?)
            } else {
                None
            };
            candidates
                .iter()
                .map(|&(u, v)| {
                    let row = edge_row(&emb, u, v);
                    let mut implied = ech.contains(&row);
                    if let (true, Some(base)) = (implied, base_exact) {
                        implied = rank_exact(&m.augment_row(&row)?)? == base;
                    }
                    Ok(implied)
                })
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(candidates
        .iter()
        .enumerate()
        .filter(|(i, _)| per_trial.iter().all(|t| t[*i]))
        .map(|(_, &(u, v))| (u.min(v), u.max(v)))
        .collect())
}

/// Whether every banana-vertex pair of `B_{d,b}` is implied by the bunch.
pub fn check_row_space_dependence(d: usize, b: usize, opts: &RankOptions) -> Result<bool> {
    if b < 2 {
        return Err(Error::TooSmall {
            what: "banana vertex count for a pair",
            min: 2,
            got: b,
        });
    }
    let (g, labels) = banana_bunch(d, b)?;
    let pairs: Vec<Edge> = labels
        .bananas
        .iter()
        .enumerate()
        .flat_map(|(i, &x)| labels.bananas[i + 1..].iter().map(move |&y| (x, y)))
        .collect();
    let implied = implied_edges(&g, d, Some(&pairs), opts)?;
    Ok(implied.len() == binom2(b))
}
