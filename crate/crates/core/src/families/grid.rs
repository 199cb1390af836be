use serde::{Deserialize, Serialize};

use super::{
    f45_construction, f_family_sigma, join_with_clique, pointcover_complement, FamilyError, PointCoverParams,
};
use crate::graph::Graph;
use crate::poly::IntPoly;

/// A single value or an inclusive `[lo, hi]` range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Span {
    One(usize),
    Range([usize; 2]),
}

impl Default for Span {
    fn default() -> Self {
        Span::One(0)
    }
}

impl Span {
    pub fn values(&self) -> std::ops::RangeInclusive<usize> {
        match *self {
            Span::One(v) => v..=v,
            Span::Range([lo, hi]) => lo..=hi,
        }
    }
}

/// A parameter grid over one family, as read from JSON such as
/// `{"family": "f45", "variant": [4, 5], "m": [0, 10]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// Complements of the point-cover graphs, joined with `K_t`.
    Pointcover {
        m1: Span,
        m2: Span,
        m3: Span,
        r: Span,
        j: Span,
        k: Span,
        #[serde(default)]
        t: Span,
    },
    F45 {
        variant: Vec<u8>,
        m: Span,
    },
    /// Closed-form σ-polynomials of variants 2 and 3; no graph is built.
    FClosed {
        variant: Vec<u8>,
        m: Span,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyMember {
    Graph { label: String, graph: Graph },
    ClosedForm { label: String, sigma: IntPoly },
}

impl FamilyMember {
    pub fn label(&self) -> &str {
        match self {
            FamilyMember::Graph { label, .. } | FamilyMember::ClosedForm { label, .. } => label,
        }
    }
}

impl FamilySpec {
    /// Every member of the grid, in row-major parameter order.
    pub fn members(&self) -> Result<Vec<FamilyMember>, FamilyError> {
        let mut out = Vec::new();
        match self {
            FamilySpec::Pointcover {
                m1,
                m2,
                m3,
                r,
                j,
                k,
                t,
            } => {
                for m1 in m1.values() {
                    for m2 in m2.values() {
                        for m3 in m3.values() {
                            for r in r.values() {
                                for j in j.values() {
                                    for k in k.values() {
                                        let p = PointCoverParams { m1, m2, m3, r, j, k };
                                        let base = pointcover_complement(&p)?.complement();
                                        for t in t.values() {
                                            out.push(FamilyMember::Graph {
                                                label: format!(
                                                    "pointcover(m1={m1},m2={m2},m3={m3},r={r},j={j},k={k},t={t})"
                                                ),
                                                graph: join_with_clique(&base, t)?,
                                            });
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            FamilySpec::F45 { variant, m } => {
                for &v in variant {
                    for m in m.values() {
                        let graph = f45_construction(v, m)?;
                        out.push(FamilyMember::Graph {
                            label: format!("F({v},{m})"),
                            graph,
                        });
                    }
                }
            }
            FamilySpec::FClosed { variant, m } => {
                for &v in variant {
                    for m in m.values() {
                        let sigma = f_family_sigma(v, m)?;
                        out.push(FamilyMember::ClosedForm {
                            label: format!("F({v},{m})"),
                            sigma,
                        });
                    }
                }
            }
        }
        Ok(out)
    }

    /// The grids swept for the `χ = n − 3` check: point-cover parameters up
    /// to 4 with `j, k ≥ 1` joined with `K_t` for `t ≤ 3`, variants 4 and 5
    /// with `m ≤ 10`, and the closed forms of variants 2 and 3 with `m ≤ 100`.
    pub fn standard_grids() -> Vec<FamilySpec> {
        let upto = |hi| Span::Range([0, hi]);
        vec![
            FamilySpec::Pointcover {
                m1: upto(4),
                m2: upto(4),
                m3: upto(4),
                r: upto(4),
                j: Span::Range([1, 4]),
                k: Span::Range([1, 4]),
                t: upto(3),
            },
            FamilySpec::F45 {
                variant: vec![4, 5],
                m: upto(10),
            },
            FamilySpec::FClosed {
                variant: vec![2, 3],
                m: upto(100),
            },
        ]
    }
}
