//! Text format for sigma-unbranched data.
//!
//! ```text
//! nodes: s1 s2 s3
//! edges: s1-s2 s2>s3
//! sigma: (s1 s3)
//! j: s1 s2
//! l: s1 s2
//! ```
//!
//! `a-b` is a single bond, `a>b` a double bond with the arrow pointing from
//! the long root to the short root. `sigma` is a product of cycles on node
//! names; omitted or empty means the identity.

use crate::diagram::{DynkinDiagram, Edge, SigmaDatum};
use crate::{CoxeterError, Result};

pub fn parse_datum(text: &str) -> Result<SigmaDatum> {
    let mut nodes: Vec<String> = vec![];
    let mut edges_raw: Vec<(String, String, bool)> = vec![];
    let mut sigma_cycles: Vec<Vec<String>> = vec![];
    let mut j_names: Vec<String> = vec![];
    let mut l_names: Vec<String> = vec![];
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, rest)) = line.split_once(':') else {
            return Err(CoxeterError::DerivedCheck(format!(
                "expected `key: ...` in line {line:?}"
            )));
        };
        let rest = rest.trim();
        match key.trim().to_lowercase().as_str() {
            "nodes" => nodes = rest.split_whitespace().map(|s| s.to_string()).collect(),
            "edges" => {
                for tok in rest.split_whitespace() {
                    if let Some((a, b)) = tok.split_once('>') {
                        edges_raw.push((a.to_string(), b.to_string(), true));
                    } else if let Some((a, b)) = tok.split_once('-') {
                        edges_raw.push((a.to_string(), b.to_string(), false));
                    } else {
                        return Err(CoxeterError::DerivedCheck(format!(
                            "bad edge token {tok:?}"
                        )));
                    }
                }
            }
            "sigma" => {
                for cyc in rest.split(')') {
                    let cyc = cyc.trim().trim_start_matches('(').trim();
                    if cyc.is_empty() {
                        continue;
                    }
                    sigma_cycles
                        .push(cyc.split_whitespace().map(|s| s.to_string()).collect());
                }
            }
            "j" => j_names = rest.split_whitespace().map(|s| s.to_string()).collect(),
            "l" => l_names = rest.split_whitespace().map(|s| s.to_string()).collect(),
            other => {
                return Err(CoxeterError::DerivedCheck(format!(
                    "unknown key {other:?}"
                )))
            }
        }
    }
    if nodes.is_empty() {
        return Err(CoxeterError::DerivedCheck("no nodes".into()));
    }
    let index = |name: &str| -> Result<usize> {
        nodes
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| CoxeterError::DerivedCheck(format!("unknown node {name:?}")))
    };
    let mut edges = vec![];
    for (a, b, double) in &edges_raw {
        let (ia, ib) = (index(a)?, index(b)?);
        edges.push(if *double {
            Edge::double(ia, ib)
        } else {
            Edge::single(ia, ib)
        });
    }
    let diagram = DynkinDiagram::new(nodes.clone(), edges);
    let mut sigma: Vec<usize> = (0..nodes.len()).collect();
    for cyc in &sigma_cycles {
        let idx: Vec<usize> = cyc
            .iter()
            .map(|n| index(n))
            .collect::<Result<Vec<_>>>()?;
        for w in 0..idx.len() {
            sigma[idx[w]] = idx[(w + 1) % idx.len()];
        }
    }
    let j = j_names
        .iter()
        .map(|n| index(n))
        .collect::<Result<std::collections::BTreeSet<_>>>()?;
    let l_nodes = l_names
        .iter()
        .map(|n| index(n))
        .collect::<Result<Vec<_>>>()?;
    Ok(SigmaDatum {
        diagram,
        sigma,
        j,
        l_nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_unitary_rank_one() {
        let text = "nodes: s1 s2\nedges: s1-s2\nsigma: (s1 s2)\nj: s2\nl: s1\n";
        let datum = parse_datum(text).unwrap();
        let derived = datum.validate_unbranched().unwrap();
        assert_eq!(derived.i_max, 2);
        assert_eq!(derived.w_words, vec![vec![0], vec![]]);
    }

    #[test]
    fn parse_double_bond() {
        let text = "nodes: s1 s2\nedges: s1>s2\nj: s1\nl: s1 s2\n";
        let datum = parse_datum(text).unwrap();
        assert_eq!(datum.diagram.cartan(), vec![2, -1, -2, 2]);
        assert!(datum.validate_unbranched().is_ok());
    }
}
