//! Analysis reports and the nullity table for hyperbanana families.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::constructions::Family;
use crate::error::{Error, Result};
use crate::graph::Edge;
use crate::graphfile::GraphFile;
use crate::maxwell::{check_maxwell, EnumOptions, MaxwellReport};
use crate::rigidity::{
    generic_rank, implied_edges, verdict_from_rank, Classification, GenericRank, RankMode,
    RankOptions, RigidityVerdict,
};
use crate::{binom2, trivial_motions};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// What to run on a graph file.
#[derive(Clone, Debug, Default)]
pub struct AnalysisRequest {
    pub maxwell: bool,
    pub classify: bool,
    pub implied: bool,
    pub implied_candidates: Option<Vec<Edge>>,
    pub rank: RankOptions,
    pub enumeration: EnumOptions,
    pub expect: Expectations,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expectations {
    pub maxwell: Option<bool>,
    pub classification: Option<Classification>,
    pub rank: Option<usize>,
    pub nullity: Option<usize>,
    pub dof: Option<usize>,
    pub implied_count: Option<usize>,
}

impl Expectations {
    fn needs_rank(&self) -> bool {
        self.classification.is_some()
            || self.rank.is_some()
            || self.nullity.is_some()
            || self.dof.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectationOutcome {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphMeta {
    pub d: usize,
    pub n: usize,
    pub m: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub tool_version: String,
    pub graph: GraphMeta,
    pub family: Option<Family>,
    pub options: RankOptions,
    pub maxwell: Option<MaxwellReport>,
    pub rigidity: Option<RigidityVerdict>,
    pub rank_evidence: Option<GenericRank>,
    pub implied_edges: Option<Vec<Edge>>,
    pub expectations: Vec<ExpectationOutcome>,
}

impl AnalysisReport {
    /// All stated expectations held.
    pub fn expectations_met(&self) -> bool {
        self.expectations.iter().all(|e| e.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let g = &self.graph;
        let _ = write!(out, "graph: d={} n={} m={}", g.d, g.n, g.m);
        if let Some(f) = &self.family {
            let _ = write!(out, " ({f})");
        }
        out.push('\n');
        if let Some(mx) = &self.maxwell {
            let c1 = &mx.condition1;
            let _ = writeln!(
                out,
                "maxwell: {}\n  condition 1: |E|={} vs d|V|-C(d+1,2)={}  {}",
                pass_word(mx.pass),
                c1.actual,
                c1.expected,
                pass_word(c1.pass)
            );
            match &mx.condition2 {
                None => out.push_str("  condition 2: not run\n"),
                Some(c2) => {
                    let _ = writeln!(
                        out,
                        "  condition 2: {} ({} subsets of size >= {}, {:.2?})",
                        pass_word(c2.pass),
                        c2.subsets_checked,
                        mx.d,
                        mx.elapsed
                    );
                    if let Some(w) = &c2.witness {
                        let _ = writeln!(
                            out,
                            "  witness: {:?} induces {} > {}",
                            w.members.members(),
                            w.induced_edges,
                            w.bound
                        );
                    }
                }
            }
        }
        if let Some(v) = &self.rigidity {
            let _ = writeln!(
                out,
                "rigidity: {}\n  rank={} nullity={} dof={} independent={} certified={}",
                v.classification, v.rank, v.nullity, v.dof, v.independent, v.certified
            );
        }
        if let Some(ev) = &self.rank_evidence {
            for t in &ev.trials {
                let _ = write!(
                    out,
                    "  trial {}: seed={} p={} rank_mod_p={}",
                    t.plan.trial, t.plan.embedding_seed, t.plan.prime, t.rank_mod_p
                );
                if let Some(e) = t.rank_exact {
                    let _ = write!(out, " rank_exact={e}");
                }
                out.push('\n');
            }
        }
        if let Some(edges) = &self.implied_edges {
            let _ = writeln!(out, "implied edges ({}): {:?}", edges.len(), edges);
        }
        for e in &self.expectations {
            let _ = writeln!(
                out,
                "expect {}: expected {} got {}  {}",
                e.name,
                e.expected,
                e.actual,
                pass_word(e.pass)
            );
        }
        out
    }
}

fn pass_word(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn outcome<T: PartialEq + ToString>(name: &str, expected: T, actual: T) -> ExpectationOutcome {
    ExpectationOutcome {
        name: name.to_string(),
        pass: expected == actual,
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

/// Runs the requested analyses. Stated expectations switch on the analyses
/// they need.
pub fn analyze(file: &GraphFile, req: &AnalysisRequest) -> Result<AnalysisReport> {
    let g = &file.graph;
    let d = file.d;
    let ex = &req.expect;
    let run_maxwell = req.maxwell || ex.maxwell.is_some();
    let run_classify = req.classify || ex.needs_rank();
    let run_implied = req.implied || ex.implied_count.is_some();

    let maxwell = run_maxwell
        .then(|| check_maxwell(g, d, &req.enumeration))
        .transpose()?;
    let (rigidity, rank_evidence) = if run_classify {
        if g.n() < d {
            return Err(Error::BelowDimension { n: g.n(), d });
        }
        let ev = generic_rank(g, d, &req.rank)?;
        let mut v = verdict_from_rank(g, d, ev.rank)?;
        v.certified = file.family.and_then(|f| f.proven_rank(d)) == Some(v.rank);
        (Some(v), Some(ev))
    } else {
        (None, None)
    };
    let implied = run_implied
        .then(|| implied_edges(g, d, req.implied_candidates.as_deref(), &req.rank))
        .transpose()?;

    let mut expectations = Vec::new();
    if let (Some(want), Some(mx)) = (ex.maxwell, &maxwell) {
        expectations.push(outcome("maxwell", want, mx.pass));
    }
    if let Some(v) = &rigidity {
        if let Some(want) = ex.classification {
            expectations.push(outcome("classification", want, v.classification));
        }
        if let Some(want) = ex.rank {
            expectations.push(outcome("rank", want, v.rank));
        }
        if let Some(want) = ex.nullity {
            expectations.push(outcome("nullity", want, v.nullity));
        }
        if let Some(want) = ex.dof {
            expectations.push(outcome("dof", want, v.dof));
        }
    }
    if let (Some(want), Some(found)) = (ex.implied_count, &implied) {
        expectations.push(outcome("implied-count", want, found.len()));
    }

    Ok(AnalysisReport {
        schema: SCHEMA_VERSION,
        tool_version: TOOL_VERSION.to_string(),
        graph: GraphMeta {
            d,
            n: g.n(),
            m: g.m(),
        },
        family: file.family,
        options: req.rank,
        maxwell,
        rigidity,
        rank_evidence,
        implied_edges: implied,
        expectations,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableFamily {
    /// `H_{2b-1,b}`.
    Odd,
    /// `H+_{2b,b}`.
    Even,
}

impl TableFamily {
    pub fn family(self, b: usize) -> Family {
        match self {
            TableFamily::Odd => Family::Hyperbanana { d: 2 * b - 1, b },
            TableFamily::Even => Family::EvenHyperbanana { d: 2 * b, b },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub b: usize,
    pub d: usize,
    pub n: usize,
    pub m: usize,
    /// `None` when the Maxwell check was skipped.
    pub maxwell: Option<bool>,
    pub nullity: usize,
    pub predicted_nullity: usize,
    pub matches: bool,
    /// Nullity from exact rational elimination, when requested.
    pub exact_nullity: Option<usize>,
    /// `THEOREM` for odd rows, `CONJECTURE` for even rows.
    pub status: String,
}

impl TableRow {
    /// Short verdict: `CERTIFIED`, `CONJECTURE-CONSISTENT`, or a mismatch tag.
    pub fn verdict(&self) -> &'static str {
        match (self.status.as_str(), self.matches) {
            ("THEOREM", true) => "CERTIFIED",
            ("THEOREM", false) => "MISMATCH",
            (_, true) => "CONJECTURE-CONSISTENT",
            (_, false) => "CONJECTURE-MISMATCH",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct TableOptions {
    pub rank: RankOptions,
    pub enumeration: EnumOptions,
    pub maxwell: bool,
    pub exact: bool,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            rank: RankOptions::default(),
            enumeration: EnumOptions::default(),
            maxwell: true,
            exact: false,
        }
    }
}

/// One row per `b`: counts, Maxwell status, computed nullity and the
/// predicted `C(d+1,2) + C(b,2)`.
pub fn nullity_table(
    kind: TableFamily,
    bs: RangeInclusive<usize>,
    opts: &TableOptions,
) -> Result<Vec<TableRow>> {
    if *bs.start() < 2 {
        return Err(Error::TooSmall {
            what: "table b",
            min: 2,
            got: *bs.start(),
        });
    }
    // refuse the whole range up front rather than halfway through
    if opts.maxwell {
        let last = kind.family(*bs.end()).build()?;
        let cap = opts.enumeration.cap.min(crate::maxwell::HARD_ENUM_LIMIT);
        if last.n() > cap {
            return Err(Error::EnumerationCap { n: last.n(), cap });
        }
    }
    bs.map(|b| {
        let family = kind.family(b);
        let file = GraphFile::from_family(family)?;
        let (g, d) = (&file.graph, file.d);
        let maxwell = opts
            .maxwell
            .then(|| check_maxwell(g, d, &opts.enumeration).map(|r| r.pass))
            .transpose()?;
        let mode = if opts.exact {
            RankMode::Exact
        } else {
            RankMode::Modp
        };
        let ev = generic_rank(g, d, &opts.rank.mode(mode))?;
        let nullity = d * g.n() - ev.rank;
        let predicted_nullity = trivial_motions(d) + binom2(b);
        Ok(TableRow {
            b,
            d,
            n: g.n(),
            m: g.m(),
            maxwell,
            nullity,
            predicted_nullity,
            matches: nullity == predicted_nullity,
            exact_nullity: ev.exact_rank().map(|r| d * g.n() - r),
            status: match kind {
                TableFamily::Odd => "THEOREM",
                TableFamily::Even => "CONJECTURE",
            }
            .to_string(),
        })
    })
    .collect()
}

pub fn render_table(rows: &[TableRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>3} {:>3} {:>4} {:>5} {:>8} {:>8} {:>9} {:>6}  status",
        "b", "d", "n", "m", "maxwell", "nullity", "predicted", "exact"
    );
    for r in rows {
        let maxwell = match r.maxwell {
            Some(true) => "pass",
            Some(false) => "FAIL",
            None => "-",
        };
        let exact = r.exact_nullity.map_or("-".to_string(), |e| e.to_string());
        let _ = writeln!(
            out,
            "{:>3} {:>3} {:>4} {:>5} {:>8} {:>8} {:>9} {:>6}  {}",
            r.b,
            r.d,
            r.n,
            r.m,
            maxwell,
            r.nullity,
            r.predicted_nullity,
            exact,
            r.verdict()
        );
    }
    out
}
