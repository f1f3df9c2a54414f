use num_integer::Integer;
use serde::Serialize;

use super::{cheb_eval_angle, AngleCos};
use crate::error::{Error, Result};

/// A double point of `t -> (T_i(t), T_j(t))` with its two preimages.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NodeData {
    pub lambda: u64,
    pub mu: u64,
    pub x: AngleCos,
    pub y: AngleCos,
    pub t_low: AngleCos,
    pub t_high: AngleCos,
}

fn require_pair(i: u64, j: u64) -> Result<()> {
    if i == 0 || j == 0 || i.gcd(&j) != 1 {
        return Err(Error::NotCoprime(i, j));
    }
    if !(2 <= i && i < j) {
        return Err(Error::InvalidArgument(format!("need 2 <= i < j, got ({i}, {j})")));
    }
    Ok(())
}

/// `(u, v)` with `iu + jv = 1` and `|v|` minimal.
fn bezout_min_v(i: u64, j: u64) -> (i64, i64) {
    let (i, j) = (i as i64, j as i64);
    let (_, _, v0) = crate::algebra::ext_gcd(i, j);
    let mut v = v0.rem_euclid(i);
    if 2 * v > i {
        v -= i;
    }
    ((1 - j * v) / i, v)
}

/// All `(i-1)(j-1)/2` nodes, ordered by `(lambda, mu)`.
pub fn nodes(i: u64, j: u64) -> Result<Vec<NodeData>> {
    require_pair(i, j)?;
    let (u, v) = bezout_min_v(i, j);
    let n = i * j;
    let mut out = Vec::with_capacity(((i - 1) * (j - 1) / 2) as usize);
    for lambda in 1..j {
        for mu in (1..i).filter(|mu| (mu + lambda) % 2 == 0) {
            let a = lambda as i64 * i as i64 * u;
            let b = mu as i64 * j as i64 * v;
            let (p, q) = (AngleCos::new(a + b, n), AngleCos::new(a - b, n));
            out.push(NodeData {
                lambda,
                mu,
                x: AngleCos::new(lambda as i64, j),
                y: AngleCos::new(mu as i64, i),
                t_low: p.min(q),
                t_high: p.max(q),
            });
        }
    }
    Ok(out)
}

/// `cos(k pi / ij)` for `1 <= k < ij` with `i, j` not dividing `k`, ascending
/// in value.
pub fn preimage_parameters(i: u64, j: u64) -> Result<Vec<AngleCos>> {
    require_pair(i, j)?;
    let n = i * j;
    Ok((1..n).rev().filter(|k| k % i != 0 && k % j != 0).map(|k| AngleCos::new(k as i64, n)).collect())
}

/// The nodal curve `(T_i, T_j)` with its preimage pairing, in ascending-t order.
#[derive(Debug, Clone, Serialize)]
pub struct NodalCurve {
    pub i: u64,
    pub j: u64,
    pub params: Vec<AngleCos>,
    pub nodes: Vec<NodeData>,
    /// Position of the other preimage of the same node.
    pub partner: Vec<usize>,
    /// Index into `nodes` for each position.
    pub node_of: Vec<usize>,
}

impl NodalCurve {
    pub fn new(i: u64, j: u64) -> Result<Self> {
        let params = preimage_parameters(i, j)?;
        let nodes = nodes(i, j)?;
        let n = i * j;
        let mut pos_of_k = vec![usize::MAX; n as usize + 1];
        for (pos, t) in params.iter().enumerate() {
            pos_of_k[t.k() as usize] = pos;
        }
        let mut partner = vec![usize::MAX; params.len()];
        let mut node_of = vec![usize::MAX; params.len()];
        for (idx, nd) in nodes.iter().enumerate() {
            let (a, b) = (pos_of_k[nd.t_low.k() as usize], pos_of_k[nd.t_high.k() as usize]);
            if a == usize::MAX || b == usize::MAX || node_of[a] != usize::MAX || node_of[b] != usize::MAX {
                return Err(Error::Internal(format!("node {idx} of ({i},{j}) has a bad preimage")));
            }
            partner[a] = b;
            partner[b] = a;
            node_of[a] = idx;
            node_of[b] = idx;
        }
        if node_of.contains(&usize::MAX) {
            return Err(Error::Internal(format!("unpaired preimage parameter on ({i},{j})")));
        }
        Ok(NodalCurve { i, j, params, nodes, partner, node_of })
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Pairs of positions `(a, b)`, `a < b`, one per node, in node order.
    pub fn position_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = vec![(0, 0); self.nodes.len()];
        for (pos, &other) in self.partner.iter().enumerate() {
            if pos < other {
                pairs[self.node_of[pos]] = (pos, other);
            }
        }
        pairs
    }

    /// Exact check that both preimages of every node map to its coordinates.
    pub fn verify_nodes(&self) -> bool {
        self.nodes.iter().all(|nd| {
            [nd.t_low, nd.t_high]
                .iter()
                .all(|&t| cheb_eval_angle(self.i, t) == nd.x && cheb_eval_angle(self.j, t) == nd.y)
        })
    }
}

/// Paired preimages sit at positions of opposite parity.
pub fn check_parity(i: u64, j: u64) -> Result<bool> {
    let curve = NodalCurve::new(i, j)?;
    Ok(curve.partner.iter().enumerate().all(|(a, &b)| (a + b) % 2 == 1))
}
