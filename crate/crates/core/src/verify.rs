//! Named verification suites with machine-readable reports.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cluster::{ar_triangle_mesh_check, verify_theorem2};
use crate::error::{Error, Result};
use crate::geometry::{enumerate_tagged_edges, TaggedEdge};
use crate::mesh::{hom_dim_closed_form, MeshEngine};
use crate::triangulation::enumerate_triangulations_bounded;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Theorem2,
    Prop22Agreement,
    Lemma2Duality,
    Lemma3Sizes,
    ArTriangles,
    TauPeriod,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Theorem2,
        Suite::Prop22Agreement,
        Suite::Lemma2Duality,
        Suite::Lemma3Sizes,
        Suite::ArTriangles,
        Suite::TauPeriod,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem2 => "theorem2",
            Suite::Prop22Agreement => "prop22-agreement",
            Suite::Lemma2Duality => "lemma2-duality",
            Suite::Lemma3Sizes => "lemma3-sizes",
            Suite::ArTriangles => "ar-triangles",
            Suite::TauPeriod => "tau-period",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        let s = s.trim();
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s || x.name().split('-').next() == Some(s))
            .ok_or_else(|| Error::Invalid(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n: usize,
    pub checked: usize,
    pub failures: Vec<String>,
    pub summary: String,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn run_suite(suite: Suite, n: usize, max_enum: usize) -> Result<SuiteReport> {
    let edges = enumerate_tagged_edges(n)?;
    let (checked, failures, summary) = match suite {
        Suite::Theorem2 => {
            let r = verify_theorem2(n)?;
            let failures = r
                .failures
                .iter()
                .map(|f| format!("({}, {}): ext1 = {}, crossing = {}", f.m, f.n, f.ext1, f.crossing))
                .collect();
            (r.pairs_checked, failures, format!("{} pairs", r.pairs_checked))
        }
        Suite::Prop22Agreement => {
            let engine = MeshEngine::new(n)?;
            let mut failures = Vec::new();
            for m in &edges {
                for x in &edges {
                    let a = engine.hom_dim_cluster(m, x)?;
                    let b = hom_dim_closed_form(m, x)? as usize;
                    if a != b {
                        failures.push(format!("({m}, {x}): mesh {a}, closed form {b}"));
                    }
                }
            }
            let k = edges.len() * edges.len();
            (k, failures, format!("{k} pairs"))
        }
        Suite::Lemma2Duality => {
            let mut failures = Vec::new();
            for m in &edges {
                let out = m.elementary_moves();
                for x in &edges {
                    let forward = out.contains(x);
                    let back = x.tau().elementary_moves().contains(m);
                    if forward != back {
                        failures.push(format!("{m} -> {x}: {forward}, τ{x} -> {m}: {back}"));
                    }
                }
            }
            let k = edges.len() * edges.len();
            (k, failures, format!("{k} move pairs"))
        }
        Suite::Lemma3Sizes => {
            let all = enumerate_triangulations_bounded(n, max_enum)?;
            let failures = all
                .iter()
                .filter(|t| t.len() != n)
                .map(|t| format!("{t}: size {}", t.len()))
                .collect();
            (all.len(), failures, format!("{} maximal sets, all of size {n}", all.len()))
        }
        Suite::ArTriangles => {
            let failures = edges.iter().flat_map(ar_triangle_mesh_check).collect();
            (edges.len(), failures, format!("{} triangles", edges.len()))
        }
        Suite::TauPeriod => {
            let failures = edges.iter().flat_map(tau_period_issues).collect();
            let summary = if n.is_multiple_of(2) {
                format!("tau^{n} = id")
            } else {
                format!("tau^{n} negates central tags, tau^{} = id", 2 * n)
            };
            (edges.len(), failures, summary)
        }
    };
    Ok(SuiteReport {
        suite,
        n,
        checked,
        failures,
        summary,
    })
}

fn tau_period_issues(m: &TaggedEdge) -> Vec<String> {
    let n = m.n();
    let mut x = *m;
    for _ in 0..n {
        x = x.tau();
    }
    let mut out = Vec::new();
    let expected = if n % 2 == 1 && m.is_central() {
        TaggedEdge::raw(n, m.start(), m.end(), m.tag().flipped())
    } else {
        *m
    };
    if x != expected {
        out.push(format!("tau^{n}({m}) = {x}, expected {expected}"));
    }
    for _ in 0..n {
        x = x.tau();
    }
    if x != *m {
        out.push(format!("tau^{}({m}) = {x}", 2 * n));
    }
    out
}
