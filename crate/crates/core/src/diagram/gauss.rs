use serde::{Deserialize, Serialize};

use super::CrossingSequence;
use crate::error::{Error, Result};
use crate::geometry::{interval, sin_multiple_sign, NodalCurve};
use crate::poly::cheb_u;

/// One visit to a crossing along the traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussEntry {
    pub label: usize,
    pub over: bool,
    pub sign: i8,
}

/// A signed Gauss code: crossing visits in traversal order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignedGaussCode {
    pub entries: Vec<GaussEntry>,
}

impl SignedGaussCode {
    pub fn new(entries: Vec<GaussEntry>) -> Self {
        SignedGaussCode { entries }
    }

    /// Compact form like `O1+ U2+ O3+ U1+ ...`.
    pub fn to_compact(&self) -> String {
        self.entries
            .iter()
            .map(|e| format!("{}{}{}", if e.over { 'O' } else { 'U' }, e.label, if e.sign > 0 { '+' } else { '-' }))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn crossing_count(&self) -> usize {
        self.entries.len() / 2
    }

    /// Flips every crossing; handedness flips with it.
    pub fn mirror(&self) -> Self {
        SignedGaussCode {
            entries: self.entries.iter().map(|e| GaussEntry { over: !e.over, sign: -e.sign, ..*e }).collect(),
        }
    }

    pub fn is_alternating(&self) -> bool {
        let n = self.entries.len();
        (0..n).all(|p| self.entries[p].over != self.entries[(p + 1) % n].over)
    }

    /// Each label twice, once over and once under, with one sign.
    pub fn check(&self) -> Result<()> {
        let n = self.crossing_count();
        if !self.entries.len().is_multiple_of(2) {
            return Err(Error::UnrealizableCode("odd number of visits".into()));
        }
        let mut seen: Vec<[Option<i8>; 2]> = vec![[None, None]; n + 1];
        for e in &self.entries {
            if e.label == 0 || e.label > n {
                return Err(Error::UnrealizableCode(format!("label {} outside 1..={n}", e.label)));
            }
            if e.sign.abs() != 1 {
                return Err(Error::UnrealizableCode(format!("crossing {} has sign {}", e.label, e.sign)));
            }
            let slot = &mut seen[e.label][e.over as usize];
            if slot.is_some() {
                return Err(Error::UnrealizableCode(format!("crossing {} visited twice on one strand", e.label)));
            }
            *slot = Some(e.sign);
        }
        for (label, s) in seen.iter().enumerate().skip(1) {
            match s {
                [Some(a), Some(b)] if a == b => {}
                [Some(_), Some(_)] => {
                    return Err(Error::UnrealizableCode(format!("crossing {label} has inconsistent signs")))
                }
                _ => return Err(Error::UnrealizableCode(format!("crossing {label} is not visited over and under"))),
            }
        }
        Ok(())
    }
}

pub fn writhe(g: &SignedGaussCode) -> i64 {
    g.entries.iter().filter(|e| e.over).map(|e| e.sign as i64).sum()
}

/// Sign of `det(v_over, v_under)` for tangents `(i U_{i-1}(t), j U_{j-1}(t))`.
///
/// At a node `|sin(i theta)|` and `|sin(j theta)|` agree between the two
/// preimages, so the determinant has the sign of
/// `s_i(o) s_j(u) - s_j(o) s_i(u)` where `s_n` is the sign of `sin(n theta)`.
pub fn handedness(curve: &NodalCurve, over_pos: usize, under_pos: usize) -> Result<i8> {
    let sig = |n: u64, pos: usize| sin_multiple_sign(n, curve.params[pos]);
    let d = sig(curve.i, over_pos)? * sig(curve.j, under_pos)? - sig(curve.j, over_pos)? * sig(curve.i, under_pos)?;
    match d.signum() {
        0 => Err(Error::Internal(format!("tangents at positions {over_pos} and {under_pos} are parallel"))),
        s => Ok(s),
    }
}

/// The same sign from certified interval evaluation of the tangent vectors.
pub fn handedness_by_intervals(curve: &NodalCurve, over_pos: usize, under_pos: usize) -> Option<i8> {
    let ui = cheb_u(curve.i as i64 - 1).scale_int(curve.i as i64);
    let uj = cheb_u(curve.j as i64 - 1).scale_int(curve.j as i64);
    let (to, tu) = (curve.params[over_pos], curve.params[under_pos]);
    let mut prec = interval::START_PRECISION;
    while prec <= interval::MAX_PRECISION {
        let ev = |p, t| interval::eval_numerator_at(p, t, prec);
        let det = ev(&ui, to).mul(&ev(&uj, tu)).sub(&ev(&uj, to).mul(&ev(&ui, tu)));
        match det.sign() {
            Some(0) => return None,
            Some(s) => return Some(s),
            None => prec *= 2,
        }
    }
    None
}

/// Traverses the curve in ascending `t`, labelling crossings by first visit.
pub fn build_gauss_code(curve: &NodalCurve, seq: &CrossingSequence) -> Result<SignedGaussCode> {
    seq.validate(curve)?;
    let n = curve.params.len();
    let mut label_of_node = vec![0usize; curve.node_count()];
    let mut next = 1;
    let mut entries = Vec::with_capacity(n);
    for pos in 0..n {
        let node = curve.node_of[pos];
        if label_of_node[node] == 0 {
            label_of_node[node] = next;
            next += 1;
        }
        let over = seq.values()[pos] > 0;
        let (o, u) = if over { (pos, curve.partner[pos]) } else { (curve.partner[pos], pos) };
        entries.push(GaussEntry { label: label_of_node[node], over, sign: handedness(curve, o, u)? });
    }
    let g = SignedGaussCode { entries };
    g.check()?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{alternating_sequence, z_crossing_sequence, Height};

    #[test]
    fn trefoil_code() {
        let c = NodalCurve::new(3, 4).unwrap();
        let g = build_gauss_code(&c, &alternating_sequence(3)).unwrap();
        assert_eq!(g.crossing_count(), 3);
        assert!(g.is_alternating());
        assert_eq!(writhe(&g).abs(), 3);
        assert_eq!(writhe(&g.mirror()), -writhe(&g));
    }

    #[test]
    fn four_crossing_alternating_code() {
        let c = NodalCurve::new(3, 5).unwrap();
        let g = build_gauss_code(&c, &alternating_sequence(4)).unwrap();
        assert_eq!(g.crossing_count(), 4);
        assert!(g.is_alternating());
    }

    #[test]
    fn exact_handedness_matches_intervals() {
        for (i, j) in [(3, 4), (3, 8), (4, 7), (5, 6)] {
            let c = NodalCurve::new(i, j).unwrap();
            for (a, b) in c.position_pairs() {
                assert_eq!(Some(handedness(&c, a, b).unwrap()), handedness_by_intervals(&c, a, b), "({i},{j})");
            }
        }
    }

    #[test]
    fn chebyshev_height_code_is_consistent() {
        let c = NodalCurve::new(3, 5).unwrap();
        let s = z_crossing_sequence(&c, &Height::Chebyshev(7)).unwrap();
        build_gauss_code(&c, &s).unwrap().check().unwrap();
    }

    #[test]
    fn check_rejects_bad_codes() {
        let e = |label, over, sign| GaussEntry { label, over, sign };
        assert!(SignedGaussCode::new(vec![e(1, true, 1), e(1, true, 1)]).check().is_err());
        assert!(SignedGaussCode::new(vec![e(1, true, 1), e(1, false, -1)]).check().is_err());
        assert!(SignedGaussCode::new(vec![e(1, true, 1), e(2, false, 1)]).check().is_err());
        SignedGaussCode::new(vec![e(1, true, 1), e(1, false, 1)]).check().unwrap();
    }
}
