//! Corpus flag parsing shared by enum, verify, and extremal.

use clap::Args;
use irrlab::enumeration::GraphClass;
use irrlab::generators::RandomSpec;

#[derive(Args)]
pub struct CorpusFlags {
    /// Tree orders: a single n or an inclusive range a..b (repeatable).
    #[arg(long = "trees")]
    pub trees: Vec<String>,

    /// Trees with fixed maximum degree, as n,maxdeg (repeatable).
    #[arg(long = "trees-maxdeg")]
    pub trees_maxdeg: Vec<String>,

    /// Bipartite classes, as n1,n2 or n1,n2,connected (repeatable).
    #[arg(long = "bipartite")]
    pub bipartite: Vec<String>,

    /// Connected classes of order n (repeatable).
    #[arg(long = "connected")]
    pub connected: Vec<usize>,

    /// Seeded random corpora, as kind,count,seed with kind = tree:N or
    /// bipartite:N1xN2xPROB (repeatable).
    #[arg(long = "random")]
    pub random: Vec<String>,
}

impl CorpusFlags {
    /// Expands the flags into classes, in flag-group order.
    pub fn classes(&self) -> Result<Vec<GraphClass>, String> {
        let mut out = Vec::new();
        for spec in &self.trees {
            let (a, b) = parse_range(spec)?;
            for n in a..=b {
                out.push(GraphClass::Trees { n });
            }
        }
        for spec in &self.trees_maxdeg {
            let parts = split_fixed(spec, 2, "expected n,maxdeg")?;
            out.push(GraphClass::TreesMaxDeg {
                n: parse_num(&parts[0])?,
                max_deg: parse_num(&parts[1])?,
            });
        }
        for spec in &self.bipartite {
            let parts: Vec<&str> = spec.split(',').collect();
            if parts.len() < 2 || parts.len() > 3 {
                return Err(format!("--bipartite {spec:?}: expected n1,n2[,connected]"));
            }
            let connected_only = match parts.get(2) {
                None => false,
                Some(&"connected") => true,
                Some(other) => {
                    return Err(format!("--bipartite {spec:?}: unknown modifier {other:?}"))
                }
            };
            out.push(GraphClass::Bipartite {
                n1: parse_num(parts[0])?,
                n2: parse_num(parts[1])?,
                connected_only,
            });
        }
        for &n in &self.connected {
            out.push(GraphClass::Connected { n });
        }
        for spec in &self.random {
            let parts = split_fixed(spec, 3, "expected kind,count,seed")?;
            out.push(GraphClass::Random {
                spec: parse_random_kind(&parts[0])?,
                count: parse_num(&parts[1])?,
                seed: parse_num(&parts[2])?,
            });
        }
        Ok(out)
    }
}

fn parse_range(spec: &str) -> Result<(usize, usize), String> {
    if let Some((a, b)) = spec.split_once("..") {
        let a = parse_num(a)?;
        let b = parse_num(b)?;
        if a > b {
            return Err(format!("empty range {spec:?}"));
        }
        Ok((a, b))
    } else {
        let n = parse_num(spec)?;
        Ok((n, n))
    }
}

fn split_fixed(spec: &str, want: usize, hint: &str) -> Result<Vec<String>, String> {
    let parts: Vec<String> = spec.split(',').map(str::to_string).collect();
    if parts.len() != want {
        return Err(format!("{spec:?}: {hint}"));
    }
    Ok(parts)
}

fn parse_num<T: std::str::FromStr>(s: &str) -> Result<T, String> {
    s.trim().parse().map_err(|_| format!("not a number: {s:?}"))
}

fn parse_random_kind(kind: &str) -> Result<RandomSpec, String> {
    if let Some(n) = kind.strip_prefix("tree:") {
        return Ok(RandomSpec::Tree { n: parse_num(n)? });
    }
    if let Some(rest) = kind.strip_prefix("bipartite:") {
        let parts: Vec<&str> = rest.split('x').collect();
        if parts.len() != 3 {
            return Err(format!("{kind:?}: expected bipartite:N1xN2xPROB"));
        }
        return Ok(RandomSpec::Bipartite {
            n1: parse_num(parts[0])?,
            n2: parse_num(parts[1])?,
            edge_prob: parse_num(parts[2])?,
        });
    }
    Err(format!("unknown random kind {kind:?} (tree:N or bipartite:N1xN2xPROB)"))
}
