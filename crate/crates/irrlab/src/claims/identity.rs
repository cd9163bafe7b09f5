//! Identity claims carry their own deterministic grids instead of running
//! over a corpus.

use super::{g6, ClaimOutcome, ClaimParams, Cmp};
use crate::generators::{generate_caterpillar, generate_complete_bipartite};
use crate::invariants::{albertson, caterpillar_irr_closed_form, sigma};
use crate::value::Value;

/// Evaluates an identity claim over its built-in grid.
pub fn evaluate_identity(id: &str) -> Vec<ClaimOutcome> {
    match id {
        "C2" => c2_caterpillar_grid(),
        "C27" => c27_complete_bipartite_grid(),
        other => panic!("{other} is not an identity claim"),
    }
}

/// Exhaustive spines of length 2..=5 with end degrees 1..=4 and interior
/// degrees 2..=4 (640 spines).
pub fn spine_grid() -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for len in 2..=5usize {
        let mut spine = vec![0u32; len];
        fill(&mut spine, 0, &mut out);
    }
    fn fill(spine: &mut Vec<u32>, i: usize, out: &mut Vec<Vec<u32>>) {
        if i == spine.len() {
            out.push(spine.clone());
            return;
        }
        let range = if i == 0 || i == spine.len() - 1 { 1..=4 } else { 2..=4 };
        for d in range {
            spine[i] = d;
            fill(spine, i + 1, out);
        }
    }
    out
}

fn c2_caterpillar_grid() -> Vec<ClaimOutcome> {
    spine_grid()
        .into_iter()
        .map(|spine| {
            let subject = format!(
                "spine=[{}]",
                spine.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
            );
            let out = ClaimOutcome::new("C2", subject, ClaimParams::default());
            let closed = caterpillar_irr_closed_form(&spine).expect("grid spines are valid");
            let g = generate_caterpillar(&spine).expect("grid spines are valid");
            out.decide(
                Value::from_u64(closed),
                Cmp::Eq,
                Value::from_u64(albertson(&g)),
            )
            .with_witness(g6(&g))
        })
        .collect()
}

fn c27_complete_bipartite_grid() -> Vec<ClaimOutcome> {
    let mut out = Vec::new();
    for s in 1..=12usize {
        for t in 1..=12usize {
            let g = generate_complete_bipartite(s, t);
            let (s64, t64) = (s as u64, t as u64);
            let diff = s64.abs_diff(t64);
            out.push(
                ClaimOutcome::new("C27", format!("K({s},{t})#irr"), ClaimParams::default())
                    .decide(
                        Value::from_u64(albertson(&g)),
                        Cmp::Eq,
                        Value::from_u64(s64 * t64 * diff),
                    )
                    .with_witness(g6(&g)),
            );
            out.push(
                ClaimOutcome::new("C27", format!("K({s},{t})#sigma"), ClaimParams::default())
                    .decide(
                        Value::from_u64(sigma(&g)),
                        Cmp::Eq,
                        Value::from_u64(s64 * t64 * diff * diff),
                    )
                    .with_witness(g6(&g)),
            );
        }
    }
    out
}
