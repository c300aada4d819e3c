//! Henneberg 0-extensions, banana bunches and (even) hyperbananas.
//!
//! Label layouts are fixed so that generated files and reports reproduce:
//!
//! * `banana_bunch(d, b)`: base `K_d` on `0..d`, banana vertices `d..d+b`.
//! * `hyperbanana(d, b)`: `v1 = 0..d`, `v2 = d..2d`, `u = 2d..2d+b`.
//! * `even_hyperbanana(d, b)`: as above plus `e_plus = {(i, d+i) : i < d/2}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{complete_graph, Edge, Graph};
use crate::{binom2, trivial_motions};

/// Adds vertex `n` joined to the `d` distinct vertices in `attach`.
pub fn henneberg0(g: &Graph, d: usize, attach: &[usize]) -> Result<Graph> {
    if d > g.n() {
        return Err(Error::TooSmall {
            what: "graph order for a Henneberg 0-extension",
            min: d,
            got: g.n(),
        });
    }
    if attach.len() != d {
        return Err(Error::AttachCount {
            d,
            got: attach.len(),
        });
    }
    let mut seen = vec![false; g.n()];
    for &a in attach {
        if a >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: a,
                n: g.n(),
            });
        }
        if std::mem::replace(&mut seen[a], true) {
            return Err(Error::RepeatedAttach(a));
        }
    }
    let mut out = g.clone();
    let fresh = out.add_vertex();
    for &a in attach {
        out.add_edge(fresh, a)?;
    }
    Ok(out)
}

/// Vertex roles in a banana bunch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BunchLabels {
    pub base: Vec<usize>,
    pub bananas: Vec<usize>,
}

fn check_params(d: usize, b: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::TooSmall {
            what: "dimension",
            min: 1,
            got: 0,
        });
    }
    if b == 0 {
        return Err(Error::TooSmall {
            what: "banana vertex count",
            min: 1,
            got: 0,
        });
    }
    Ok(())
}

/// `K_d` followed by `b` Henneberg 0-extensions onto the base vertices.
pub fn banana_bunch(d: usize, b: usize) -> Result<(Graph, BunchLabels)> {
    check_params(d, b)?;
    let base: Vec<usize> = (0..d).collect();
    let mut g = complete_graph(d)?;
    for _ in 0..b {
        g = henneberg0(&g, d, &base)?;
    }
    let labels = BunchLabels {
        bananas: (d..d + b).collect(),
        base,
    };
    Ok((g, labels))
}

/// Vertex roles in a hyperbanana.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperbananaLabels {
    pub d: usize,
    pub b: usize,
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    pub u: Vec<usize>,
    /// Extra edges between the two complete graphs; empty for odd hyperbananas.
    pub e_plus: Vec<Edge>,
}

impl HyperbananaLabels {
    /// All pairs inside the banana-vertex set.
    pub fn banana_pairs(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for (i, &a) in self.u.iter().enumerate() {
            for &c in &self.u[i + 1..] {
                out.push((a, c));
            }
        }
        out
    }
}

/// Two banana bunches glued along their banana vertices.
///
/// The i-th banana vertex of the first bunch is identified with the i-th
/// banana vertex of the second.
pub fn hyperbanana(d: usize, b: usize) -> Result<(Graph, HyperbananaLabels)> {
    let (bunch, bl) = banana_bunch(d, b)?;
    // second copy: base -> d..2d, bananas -> the shared 2d..2d+b
    let shift_u = |v: usize| if v < d { v } else { v + d };
    let first = Graph::empty(0)
        .union_with_relabeling(&bunch, &(0..d + b).map(shift_u).collect::<Vec<_>>())?;
    let second_map: Vec<usize> = (0..d + b).map(|v| v + d).collect();
    let g = first.union_with_relabeling(&bunch, &second_map)?;
    let labels = HyperbananaLabels {
        d,
        b,
        v1: bl.base.clone(),
        v2: bl.base.iter().map(|v| v + d).collect(),
        u: (2 * d..2 * d + b).collect(),
        e_plus: Vec::new(),
    };
    Ok((g, labels))
}

/// How the `d/2` extra edges of an even hyperbanana are placed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtraEdgeLayout {
    /// `(i, d+i)` for `i < d/2`; all `d` endpoints distinct.
    #[default]
    Matching,
    /// `(0, d+i)` for `i < d/2`; every extra edge shares the endpoint `0`.
    Star,
}

/// Even hyperbanana with the default matching layout.
pub fn even_hyperbanana(d: usize, b: usize) -> Result<(Graph, HyperbananaLabels)> {
    even_hyperbanana_with(d, b, ExtraEdgeLayout::Matching)
}

pub fn even_hyperbanana_with(
    d: usize,
    b: usize,
    layout: ExtraEdgeLayout,
) -> Result<(Graph, HyperbananaLabels)> {
    if d % 2 == 1 {
        return Err(Error::OddDimension(d));
    }
    if d < 2 {
        return Err(Error::TooSmall {
            what: "even hyperbanana dimension",
            min: 2,
            got: d,
        });
    }
    let (mut g, mut labels) = hyperbanana(d, b)?;
    for i in 0..d / 2 {
        let e = match layout {
            ExtraEdgeLayout::Matching => (i, d + i),
            ExtraEdgeLayout::Star => (0, d + i),
        };
        g.add_edge(e.0, e.1)?;
        labels.e_plus.push(e);
    }
    Ok((g, labels))
}

/// A generated graph family with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    Complete { k: usize },
    Banana { d: usize, b: usize },
    Hyperbanana { d: usize, b: usize },
    EvenHyperbanana { d: usize, b: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Complete { .. } => "complete",
            Family::Banana { .. } => "banana",
            Family::Hyperbanana { .. } => "hyperbanana",
            Family::EvenHyperbanana { .. } => "even-hyperbanana",
        }
    }

    /// Parameters in file order: `[k]` or `[d, b]`.
    pub fn params(&self) -> Vec<usize> {
        match *self {
            Family::Complete { k } => vec![k],
            Family::Banana { d, b }
            | Family::Hyperbanana { d, b }
            | Family::EvenHyperbanana { d, b } => vec![d, b],
        }
    }

    pub fn from_parts(name: &str, params: &[usize]) -> Option<Family> {
        Some(match (name, params) {
            ("complete", &[k]) => Family::Complete { k },
            ("banana", &[d, b]) => Family::Banana { d, b },
            ("hyperbanana", &[d, b]) => Family::Hyperbanana { d, b },
            ("even-hyperbanana", &[d, b]) => Family::EvenHyperbanana { d, b },
            _ => return None,
        })
    }

    pub fn build(&self) -> Result<Graph> {
        Ok(match *self {
            Family::Complete { k } => complete_graph(k)?,
            Family::Banana { d, b } => banana_bunch(d, b)?.0,
            Family::Hyperbanana { d, b } => hyperbanana(d, b)?.0,
            Family::EvenHyperbanana { d, b } => even_hyperbanana(d, b)?.0,
        })
    }

    /// Hyperbanana labels, when the family has them.
    pub fn labels(&self) -> Result<Option<HyperbananaLabels>> {
        Ok(match *self {
            Family::Hyperbanana { d, b } => Some(hyperbanana(d, b)?.1),
            Family::EvenHyperbanana { d, b } => Some(even_hyperbanana(d, b)?.1),
            _ => None,
        })
    }

    /// Whether the parameters fall in the Maxwell regime: `d = 2b-1` for
    /// hyperbananas, `d = 2b` for even hyperbananas. Banana bunches are
    /// minimally rigid and hence always Maxwell.
    pub fn is_maxwell_family(&self) -> bool {
        match *self {
            Family::Complete { .. } => false,
            Family::Banana { .. } => true,
            Family::Hyperbanana { d, b } => d + 1 == 2 * b,
            Family::EvenHyperbanana { d, b } => d == 2 * b,
        }
    }

    /// Generic rank in dimension `dim` when it is a proven value.
    ///
    /// Banana bunches are minimally rigid (rank `m`); odd Maxwell hyperbananas
    /// have rank `m - C(b,2)`.
    pub fn proven_rank(&self, dim: usize) -> Option<usize> {
        match *self {
            Family::Banana { d, b } if dim == d => Some(binom2(d) + d * b),
            Family::Hyperbanana { d, b } if dim == d && d + 1 == 2 * b => {
                Some(2 * d * d - binom2(b))
            }
            _ => None,
        }
    }

    /// Conjectured nullity for even Maxwell hyperbananas (`d = 2b`, `b >= 2`).
    pub fn conjectured_nullity(&self, dim: usize) -> Option<usize> {
        match *self {
            Family::EvenHyperbanana { d, b } if dim == d && d == 2 * b && b >= 2 => {
                Some(trivial_motions(d) + binom2(b))
            }
            _ => None,
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Family::Complete { k } => write!(f, "K_{k}"),
            Family::Banana { d, b } => write!(f, "B_{{{d},{b}}}"),
            Family::Hyperbanana { d, b } => write!(f, "H_{{{d},{b}}}"),
            Family::EvenHyperbanana { d, b } => write!(f, "H+_{{{d},{b}}}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSubset;

    #[test]
    fn henneberg_on_triangle() {
        let t = complete_graph(3).unwrap();
        let k4 = henneberg0(&t, 3, &[0, 1, 2]).unwrap();
        assert_eq!(k4, complete_graph(4).unwrap());

        let banana = henneberg0(&k4, 3, &[0, 1, 2]).unwrap();
        assert_eq!((banana.n(), banana.m()), (5, 9));
        assert_eq!(banana, banana_bunch(3, 2).unwrap().0);
    }

    #[test]
    fn henneberg_three_times_on_k5_is_bunch() {
        let mut g = complete_graph(5).unwrap();
        for _ in 0..3 {
            g = henneberg0(&g, 5, &[0, 1, 2, 3, 4]).unwrap();
        }
        assert_eq!((g.n(), g.m()), (8, 25));
        assert_eq!(g, banana_bunch(5, 3).unwrap().0);
    }

    #[test]
    fn henneberg_errors() {
        let t = complete_graph(3).unwrap();
        assert_eq!(henneberg0(&t, 3, &[0, 1, 1]), Err(Error::RepeatedAttach(1)));
        assert!(matches!(
            henneberg0(&t, 3, &[0, 1, 3]),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
        assert!(matches!(
            henneberg0(&t, 3, &[0, 1]),
            Err(Error::AttachCount { d: 3, got: 2 })
        ));
        assert!(matches!(
            henneberg0(&t, 4, &[0, 1, 2, 3]),
            Err(Error::TooSmall { .. })
        ));
    }

    #[test]
    fn bunch_counts_and_degrees() {
        for (d, b, n, m) in [(3, 2, 5, 9), (5, 3, 8, 25), (7, 4, 11, 49)] {
            let (g, labels) = banana_bunch(d, b).unwrap();
            assert_eq!((g.n(), g.m()), (n, m), "B_{d},{b}");
            for &v in &labels.bananas {
                assert_eq!(g.degree(v), d);
            }
            for &v in &labels.base {
                assert_eq!(g.degree(v), d - 1 + b);
            }
        }
        assert!(banana_bunch(0, 2).is_err());
        assert!(banana_bunch(3, 0).is_err());
    }

    #[test]
    fn hyperbanana_counts() {
        for (d, b, n, m) in [(3, 2, 8, 18), (5, 3, 13, 50), (9, 5, 23, 162)] {
            let (g, l) = hyperbanana(d, b).unwrap();
            assert_eq!((g.n(), g.m()), (n, m), "H_{d},{b}");
            assert_eq!(m, d * (d - 1) + 2 * d * b);
            assert!(l
                .v1
                .iter()
                .all(|&a| l.v2.iter().all(|&c| !g.has_edge(a, c))));
            assert!(l.banana_pairs().iter().all(|&(a, c)| !g.has_edge(a, c)));
        }
        assert!(hyperbanana(0, 1).is_err());
    }

    #[test]
    fn hyperbanana_labels_partition() {
        let (g, l) = hyperbanana(5, 3).unwrap();
        let mut all: Vec<usize> = l.v1.iter().chain(&l.v2).chain(&l.u).copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..g.n()).collect::<Vec<_>>());
        assert_eq!((l.v1.len(), l.v2.len(), l.u.len()), (5, 5, 3));
    }

    #[test]
    fn each_side_of_hyperbanana_is_a_bunch() {
        for (d, b) in [(3, 2), (4, 3), (5, 3)] {
            let (g, l) = hyperbanana(d, b).unwrap();
            let (bunch, _) = banana_bunch(d, b).unwrap();
            for side in [&l.v1, &l.v2] {
                // map side ∪ u onto the bunch layout: base 0..d, bananas d..d+b
                let order: Vec<usize> = side.iter().chain(&l.u).copied().collect();
                let mut induced = Graph::empty(d + b);
                for (i, &x) in order.iter().enumerate() {
                    for (j, &y) in order.iter().enumerate().skip(i + 1) {
                        if g.has_edge(x, y) {
                            induced.add_edge(i, j).unwrap();
                        }
                    }
                }
                assert_eq!(induced, bunch);
                let s: VertexSubset = order.iter().copied().collect();
                assert_eq!(g.induced_edge_count(&s).unwrap(), bunch.m());
            }
        }
    }

    #[test]
    fn odd_family_meets_total_count() {
        for b in 1..=12 {
            let d = 2 * b - 1;
            let (g, _) = hyperbanana(d, b).unwrap();
            assert_eq!(g.m(), d * g.n() - trivial_motions(d), "b={b}");
            assert_eq!(g.m(), 2 * d * d);
        }
    }

    #[test]
    fn even_counts() {
        for (d, b, n, m) in [(4, 2, 10, 30), (6, 3, 15, 69), (8, 4, 20, 124)] {
            let (g, l) = even_hyperbanana(d, b).unwrap();
            assert_eq!((g.n(), g.m()), (n, m), "H+_{d},{b}");
            assert_eq!(l.e_plus.len(), d / 2);
            let mut ends: Vec<usize> = l.e_plus.iter().flat_map(|&(a, c)| [a, c]).collect();
            ends.sort_unstable();
            ends.dedup();
            assert_eq!(ends.len(), d);
            assert!(l
                .e_plus
                .iter()
                .all(|&(a, c)| l.v1.contains(&a) && l.v2.contains(&c)));
        }
        for b in 1..=12 {
            let d = 2 * b;
            let (g, _) = even_hyperbanana(d, b).unwrap();
            assert_eq!(g.m(), d * g.n() - trivial_motions(d), "b={b}");
        }
        assert_eq!(even_hyperbanana(5, 2), Err(Error::OddDimension(5)));
        assert!(even_hyperbanana(0, 2).is_err());
    }

    #[test]
    fn star_layout_shares_an_endpoint() {
        let (g, l) = even_hyperbanana_with(6, 3, ExtraEdgeLayout::Star).unwrap();
        assert_eq!(g.m(), 69);
        assert_eq!(l.e_plus, vec![(0, 6), (0, 7), (0, 8)]);
    }

    #[test]
    fn family_round_trip_and_values() {
        let f = Family::Hyperbanana { d: 5, b: 3 };
        assert_eq!(Family::from_parts(f.name(), &f.params()), Some(f));
        assert_eq!(f.proven_rank(5), Some(47));
        assert_eq!(Family::Hyperbanana { d: 3, b: 2 }.proven_rank(3), Some(17));
        assert_eq!(Family::Hyperbanana { d: 4, b: 3 }.proven_rank(4), None);
        assert_eq!(Family::Banana { d: 5, b: 3 }.proven_rank(5), Some(25));
        assert_eq!(
            Family::EvenHyperbanana { d: 4, b: 2 }.conjectured_nullity(4),
            Some(11)
        );
        assert_eq!(
            Family::EvenHyperbanana { d: 6, b: 3 }.conjectured_nullity(6),
            Some(24)
        );
        assert!(Family::from_parts("complete", &[3, 4]).is_none());
    }
}
