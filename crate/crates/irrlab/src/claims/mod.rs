//! The claim registry: every bound, identity, and extremal statement under
//! test, as data plus exact-arithmetic evaluators.
//!
//! Claims carry explicit applicability guards; a failed guard yields
//! NOT_APPLICABLE with the reason recorded, never a silent skip. Verdicts
//! are decided in exact arithmetic (see [`crate::value`]), so HOLDS/FAILS
//! never depends on rounding. MARGINAL is reserved for float-evaluated
//! comparisons within 1e-9 relative of equality; no registered claim
//! currently needs the float path, so exact verdicts are the norm.

mod class_extremal;
mod identity;
mod per_graph;

pub use class_extremal::{evaluate_on_class, BoundMode};
pub use identity::evaluate_identity;
pub use per_graph::{evaluate_per_graph, SubjectCtx};

use crate::graph::Graph;
use crate::value::Value;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;

/// How a claim quantifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClaimKind {
    PerGraph,
    ClassExtremal,
    IffCharacterization,
    Identity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "HOLDS")]
    Holds,
    #[serde(rename = "FAILS")]
    Fails,
    #[serde(rename = "NOT_APPLICABLE")]
    NotApplicable,
    #[serde(rename = "MARGINAL")]
    Marginal,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Holds => "HOLDS",
            Verdict::Fails => "FAILS",
            Verdict::NotApplicable => "NOT_APPLICABLE",
            Verdict::Marginal => "MARGINAL",
        };
        write!(f, "{s}")
    }
}

/// Integer exponents a claim ranges over, when it has any.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ClaimParams {
    pub alpha: Option<u32>,
    pub p: Option<u32>,
}

impl fmt::Display for ClaimParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.alpha, self.p) {
            (None, None) => write!(f, "-"),
            (Some(a), None) => write!(f, "alpha={a}"),
            (Some(a), Some(p)) => write!(f, "alpha={a},p={p}"),
            (None, Some(p)) => write!(f, "p={p}"),
        }
    }
}

/// Which parameter grid a claim uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamRule {
    None,
    /// 1 <= alpha <= maxdeg - 3
    AlphaOnly,
    /// 1 <= p <= alpha <= maxdeg - 3
    AlphaAndP,
}

/// Registry entry: identity and metadata of one claim.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimInfo {
    pub id: &'static str,
    pub kind: ClaimKind,
    /// ASCII rendering of the statement under test.
    pub statement: &'static str,
    /// Plain-language applicability guard.
    pub guard: &'static str,
    pub params: ParamRule,
}

/// One evaluation result. `witness` entries are graph6 strings and replay:
/// parsing one and re-evaluating the claim reproduces the verdict.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimOutcome {
    pub claim: String,
    pub subject: String,
    pub params: ClaimParams,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    pub verdict: Verdict,
    pub witness: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ClaimOutcome {
    pub(crate) fn new(claim: &str, subject: String, params: ClaimParams) -> ClaimOutcome {
        ClaimOutcome {
            claim: claim.to_string(),
            subject,
            params,
            lhs: None,
            rhs: None,
            verdict: Verdict::NotApplicable,
            witness: Vec::new(),
            note: None,
        }
    }

    pub(crate) fn not_applicable(mut self, why: &str) -> ClaimOutcome {
        self.verdict = Verdict::NotApplicable;
        self.note = Some(why.to_string());
        self
    }

    /// Fills lhs/rhs and decides via the comparison `lhs OP rhs`.
    pub(crate) fn decide(mut self, lhs: Value, op: Cmp, rhs: Value) -> ClaimOutcome {
        let ord = lhs.cmp_exact(&rhs);
        let ok = match op {
            Cmp::Le => ord != Ordering::Greater,
            Cmp::Ge => ord != Ordering::Less,
            Cmp::Gt => ord == Ordering::Greater,
            Cmp::Eq => ord == Ordering::Equal,
        };
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        self.verdict = if ok { Verdict::Holds } else { Verdict::Fails };
        self
    }

    pub(crate) fn with_witness(mut self, g6: String) -> ClaimOutcome {
        self.witness.push(g6);
        self
    }

    pub(crate) fn with_note(mut self, note: String) -> ClaimOutcome {
        self.note = Some(note);
        self
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum Cmp {
    Le,
    Ge,
    Gt,
    Eq,
}

/// Vertex sets acting as V1/V2 for a bipartite subject.
pub(crate) struct SubjectParts {
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
}

/// Stable catalogue of all claims, C1 through C27.
pub fn registry() -> Vec<ClaimInfo> {
    use ClaimKind::*;
    use ParamRule::*;
    vec![
        ClaimInfo { id: "C1", kind: ClassExtremal, params: None,
            statement: "over trees of order n: max irr = (n-1)(n-2), attained only by the star",
            guard: "class = trees(n), n >= 2" },
        ClaimInfo { id: "C2", kind: Identity, params: None,
            statement: "caterpillar closed form equals definitional irr of the realized caterpillar",
            guard: "valid spine: ends >= 1, interior >= 2" },
        ClaimInfo { id: "C3", kind: ClassExtremal, params: None,
            statement: "over trees of order n: max irr_t = (n-1)(n-2) and min irr_t = 2(n-2)",
            guard: "class = trees(n), n >= 4" },
        ClaimInfo { id: "C4", kind: PerGraph, params: None,
            statement: "irr <= sqrt(m*M1 - 4m^2)",
            guard: "m*M1 >= 4m^2" },
        ClaimInfo { id: "C5", kind: ClassExtremal, params: None,
            statement: "sigma-max attainers satisfy sigma > d(D-d)^3*n/(D+1) and sigma > (D-1)^3*n/(D+1)",
            guard: "class = connected(n)" },
        ClaimInfo { id: "C6", kind: ClassExtremal, params: None,
            statement: "over trees: max sigma = (n-1)(n-2) for n >= 3; min sigma = 0 at n = 2",
            guard: "class = trees(n), n >= 2" },
        ClaimInfo { id: "C7", kind: PerGraph, params: None,
            statement: "sigma2 >= 2 for hamiltonian graphs",
            guard: "hamiltonian, n >= 3, not complete" },
        ClaimInfo { id: "C8", kind: IffCharacterization, params: None,
            statement: "2(d-1)(2d-1) > 0 iff the graph attains max irr in its (n, min-degree) class",
            guard: "connected, n >= 4, class context available; interpreted reading" },
        ClaimInfo { id: "C9", kind: ClassExtremal, params: AlphaOnly,
            statement: "irr_min >= 2^a*(2^(n-D) + ceil(n*D^2/2))/((D-d)! + (D-1)!)",
            guard: "class = trees(n, maxdeg D), D >= 4" },
        ClaimInfo { id: "C10", kind: ClassExtremal, params: AlphaAndP,
            statement: "irr_min >= 2^a/(D-p)^2 and irr_min >= D^2(D-1)*2^a/(D-p)^2",
            guard: "class = trees(n, maxdeg D), D >= 4" },
        ClaimInfo { id: "C11", kind: ClassExtremal, params: AlphaAndP,
            statement: "lambda*irr_max >= irr_min - D^2(D-1)*2^a/(D-p)^2, lambda = sqrt(2n(D^2+3m))/(2(D+1))",
            guard: "class = trees(n, maxdeg D), D >= 4" },
        ClaimInfo { id: "C12", kind: IffCharacterization, params: None,
            statement: "min irr over the tree class equals irr(P_n) and is attained exactly by the path",
            guard: "tree class, n >= 2" },
        ClaimInfo { id: "C13", kind: PerGraph, params: None,
            statement: "irr >= deg_ave - 2m/n",
            guard: "tree" },
        ClaimInfo { id: "C14", kind: PerGraph, params: None,
            statement: "irr >= (3D*m^2 + 2d*m)/(n(D-3))",
            guard: "tree, D >= 4" },
        ClaimInfo { id: "C15", kind: ClassExtremal, params: AlphaOnly,
            statement: "sigma_min >= 2^a*(2^(n-D) + ceil(n*D^3/2))/(D*(D-2)!)",
            guard: "class = trees(n, maxdeg D), D >= 4" },
        ClaimInfo { id: "C16", kind: ClassExtremal, params: AlphaAndP,
            statement: "sigma_min >= D^2(D-1)*(3^a + D^p)/((n-3D)! + (D-p)^2)",
            guard: "class = trees(n, maxdeg D), D >= 4, n >= 3D" },
        ClaimInfo { id: "C17", kind: ClassExtremal, params: AlphaAndP,
            statement: "sigma_min >= n*D^2(D-1)*3^a/(2D-3p)^2",
            guard: "class = trees(n, maxdeg D), D >= 4, 2D != 3p" },
        ClaimInfo { id: "C18", kind: IffCharacterization, params: None,
            statement: "min sigma over the tree class equals sigma(P_n) and is attained exactly by the path",
            guard: "tree class, n >= 2" },
        ClaimInfo { id: "C19", kind: PerGraph, params: None,
            statement: "sigma >= irr + deg_ave^2 - 2m^2/n",
            guard: "tree" },
        ClaimInfo { id: "C20", kind: PerGraph, params: None,
            statement: "irr <= u1*u2*(n1-n2) + u1*(n2-u2)(n2-u1) + u2*(n1-u1)(n1-u2), piecewise u1, u2",
            guard: "bipartite; parts ordered n1 >= n2" },
        ClaimInfo { id: "C21", kind: ClassExtremal, params: None,
            statement: "class irr extrema equal the printed cubic/root formulas in n1, n2",
            guard: "bipartite class, n1 <= 2*n2, 28n1^2 - 24n1n2 >= 0" },
        ClaimInfo { id: "C22", kind: PerGraph, params: None,
            statement: "irr <= 2n1n2 + n2*d/m; sigma <= 4n1n2 + sqrt(2n1)*n2*d/m; floor variants when m > 3D",
            guard: "bipartite, m >= 1 (floor variants: m > 3D)" },
        ClaimInfo { id: "C23", kind: PerGraph, params: None,
            statement: "irr <= sum_V1 (deg-1)^2 + sum_V2 (deg-2) + 2*n1*D",
            guard: "bipartite, D >= 3" },
        ClaimInfo { id: "C24", kind: PerGraph, params: None,
            statement: "sigma <= 2*M1 + (n1-1)*irr + (n2-2)*irr",
            guard: "bipartite" },
        ClaimInfo { id: "C25", kind: PerGraph, params: None,
            statement: "irr <= 2n1^2 + (D^2(D-1)+4n2)/(n1n2+5d); sigma <= 2n1^3 + (D^3(D-1)+4n2^2)/(n1n2+3d^2)",
            guard: "bipartite, d >= 2" },
        ClaimInfo { id: "C26", kind: PerGraph, params: None,
            statement: "sqrt(sigma) <= irr <= sqrt(m*sigma), compared in squared form",
            guard: "none" },
        ClaimInfo { id: "C27", kind: Identity, params: None,
            statement: "irr(K_{s,t}) = s*t*|s-t| and sigma(K_{s,t}) = s*t*(s-t)^2",
            guard: "1 <= s, t <= 12" },
    ]
}

/// Looks up one claim by id.
pub fn claim_info(id: &str) -> Option<ClaimInfo> {
    registry().into_iter().find(|c| c.id == id)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    UnknownClaim(String),
    /// Subject shape does not match the claim kind.
    KindMismatch { claim: String, expected: ClaimKind },
    /// Requested parameter point is outside the admissible grid.
    InadmissibleParams { claim: String, params: ClaimParams },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::UnknownClaim(id) => write!(f, "unknown claim id: {id}"),
            EvalError::KindMismatch { claim, expected } => {
                write!(f, "{claim} expects a {expected:?} subject")
            }
            EvalError::InadmissibleParams { claim, params } => {
                write!(f, "{claim}: inadmissible parameters {params}")
            }
        }
    }
}

impl std::error::Error for EvalError {}

/// What a claim is evaluated against.
pub enum Subject<'a> {
    /// One graph, with its evaluation context.
    Graph(&'a Graph, &'a SubjectCtx<'a>),
    /// A materialized class.
    Class(&'a crate::enumeration::GraphClass, &'a [Graph]),
}

/// Uniform evaluation entry point: checks the claim id, the subject kind,
/// and (when supplied) that the parameter point lies in the admissible
/// grid, then dispatches. `params = None` evaluates the whole grid.
pub fn evaluate(
    id: &str,
    subject: Subject<'_>,
    params: Option<ClaimParams>,
    mode: BoundMode,
) -> Result<Vec<ClaimOutcome>, EvalError> {
    let info = claim_info(id).ok_or_else(|| EvalError::UnknownClaim(id.to_string()))?;
    let outcomes = match (&subject, info.kind) {
        (Subject::Graph(g, ctx), ClaimKind::PerGraph) => evaluate_per_graph(id, g, ctx),
        (Subject::Graph(g, ctx), ClaimKind::IffCharacterization) if id == "C8" => {
            evaluate_per_graph(id, g, ctx)
        }
        (Subject::Class(class, graphs), ClaimKind::ClassExtremal) => {
            evaluate_on_class(id, class, graphs, mode)
        }
        (Subject::Class(class, graphs), ClaimKind::IffCharacterization) if id != "C8" => {
            evaluate_on_class(id, class, graphs, mode)
        }
        (_, ClaimKind::Identity) => evaluate_identity(id),
        (_, expected) => {
            return Err(EvalError::KindMismatch { claim: id.to_string(), expected })
        }
    };
    match params {
        None => Ok(outcomes),
        Some(point) => {
            let filtered: Vec<ClaimOutcome> = outcomes
                .into_iter()
                .filter(|o| o.params == point)
                .collect();
            if filtered.is_empty() {
                Err(EvalError::InadmissibleParams { claim: id.to_string(), params: point })
            } else {
                Ok(filtered)
            }
        }
    }
}

/// Re-evaluates a witness graph against a claim, for replay checks and
/// shrinking. Per-graph claims replay through their ordinary evaluator;
/// class-extremal claims with a per-graph violation reading (the tree
/// extrema statements) replay as bound checks on the single graph. Claims
/// with no per-graph reading return None.
pub fn replay_witness(
    id: &str,
    g: &Graph,
    declared_parts: Option<(usize, usize)>,
) -> Option<Vec<ClaimOutcome>> {
    let info = claim_info(id)?;
    let is_tree = g.is_connected() && g.m() == g.n() - 1;
    let label = format!("replay:{}", g6(g));
    match (info.kind, id) {
        (ClaimKind::PerGraph, _) | (_, "C8") => {
            let ctx = per_graph::SubjectCtx {
                label,
                declared_parts,
                class_graphs: None,
            };
            Some(evaluate_per_graph(id, g, &ctx))
        }
        (_, "C1") => {
            let out = ClaimOutcome::new(id, label, ClaimParams::default());
            if !is_tree {
                return Some(vec![out.not_applicable("witness is not a tree")]);
            }
            let n = g.n() as u64;
            Some(vec![out
                .decide(
                    Value::from_u64(crate::invariants::albertson(g)),
                    Cmp::Le,
                    Value::from_u64((n - 1) * (n - 2)),
                )
                .with_witness(g6(g))])
        }
        (_, "C3") => {
            if !is_tree || g.n() < 4 {
                return Some(vec![ClaimOutcome::new(id, label, ClaimParams::default())
                    .not_applicable("witness is not a tree of order >= 4")]);
            }
            let n = g.n() as u64;
            let irr_t = crate::invariants::total_irregularity_pairwise(g);
            Some(vec![
                ClaimOutcome::new(id, format!("{label}#irr_t-max"), ClaimParams::default())
                    .decide(
                        Value::from_u64(irr_t),
                        Cmp::Le,
                        Value::from_u64((n - 1) * (n - 2)),
                    )
                    .with_witness(g6(g)),
                ClaimOutcome::new(id, format!("{label}#irr_t-min"), ClaimParams::default())
                    .decide(Value::from_u64(irr_t), Cmp::Ge, Value::from_u64(2 * (n - 2)))
                    .with_witness(g6(g)),
            ])
        }
        (_, "C6") => {
            let out = ClaimOutcome::new(id, label, ClaimParams::default());
            if !is_tree || g.n() < 3 {
                return Some(vec![out.not_applicable("witness is not a tree of order >= 3")]);
            }
            let n = g.n() as u64;
            Some(vec![out
                .decide(
                    Value::from_u64(crate::invariants::sigma(g)),
                    Cmp::Le,
                    Value::from_u64((n - 1) * (n - 2)),
                )
                .with_witness(g6(g))])
        }
        _ => None,
    }
}

/// The admissible exponent grid for a claim at maximum degree `max_deg`,
/// in (alpha, p) lexicographic order. Empty when max_deg < 4.
pub fn admissible_params(rule: ParamRule, max_deg: u32) -> Vec<ClaimParams> {
    let top = max_deg.saturating_sub(3);
    match rule {
        ParamRule::None => vec![ClaimParams::default()],
        ParamRule::AlphaOnly => (1..=top)
            .map(|alpha| ClaimParams { alpha: Some(alpha), p: None })
            .collect(),
        ParamRule::AlphaAndP => {
            let mut out = Vec::new();
            for alpha in 1..=top {
                for p in 1..=alpha {
                    out.push(ClaimParams { alpha: Some(alpha), p: Some(p) });
                }
            }
            out
        }
    }
}

// --- shared arithmetic helpers ---

pub(crate) fn big(v: impl Into<BigInt>) -> BigInt {
    v.into()
}

pub(crate) fn rat_int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

pub(crate) fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub(crate) fn factorial(k: u64) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 2..=k {
        acc *= i;
    }
    acc
}

pub(crate) fn pow_int(base: u64, exp: u32) -> BigInt {
    BigInt::from(base).pow(exp)
}

pub(crate) fn ceil_half(x: BigInt) -> BigInt {
    (x + 1) / 2
}

/// Graph6 of a graph, for witness fields.
pub(crate) fn g6(g: &Graph) -> String {
    crate::graph6::write_graph6(g)
}
