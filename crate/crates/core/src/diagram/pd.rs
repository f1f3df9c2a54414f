use serde::{Deserialize, Serialize};

use super::SignedGaussCode;
use crate::error::{Error, Result};

/// Planar diagram code: per crossing, four arc labels counterclockwise from
/// the incoming under-arc.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PdCode {
    pub crossings: Vec<[u32; 4]>,
}

impl PdCode {
    /// Checks that the labels are `1..=2N`, each used exactly twice.
    pub fn new(crossings: Vec<[u32; 4]>) -> Result<Self> {
        let arcs = 2 * crossings.len();
        let mut uses = vec![0u8; arcs + 1];
        for x in &crossings {
            for &a in x {
                if a == 0 || a as usize > arcs {
                    return Err(Error::UnrealizableCode(format!("arc {a} outside 1..={arcs}")));
                }
                uses[a as usize] += 1;
            }
        }
        if let Some(a) = uses.iter().skip(1).position(|&u| u != 2) {
            return Err(Error::UnrealizableCode(format!("arc {} is not used exactly twice", a + 1)));
        }
        Ok(PdCode { crossings })
    }

    pub fn unknot() -> Self {
        PdCode::default()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len()
    }

    fn slot_partner(&self) -> Vec<usize> {
        let mut first = vec![usize::MAX; self.arc_count() + 1];
        let mut partner = vec![usize::MAX; 4 * self.crossings.len()];
        for (slot, &a) in self.crossings.iter().flatten().enumerate() {
            let a = a as usize;
            if first[a] == usize::MAX {
                first[a] = slot;
            } else {
                partner[slot] = first[a];
                partner[first[a]] = slot;
            }
        }
        partner
    }

    /// Number of complementary regions: cycles of "follow the arc, then turn
    /// to the next slot counterclockwise".
    pub fn face_count(&self) -> usize {
        let partner = self.slot_partner();
        let mut seen = vec![false; partner.len()];
        let mut faces = 0;
        for start in 0..partner.len() {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut s = start;
            while !seen[s] {
                seen[s] = true;
                let o = partner[s];
                s = o - o % 4 + (o % 4 + 1) % 4;
            }
        }
        faces
    }

    /// Euler characteristic of the sphere: a connected diagram with `N`
    /// crossings has `N + 2` faces.
    pub fn is_planar(&self) -> bool {
        self.crossings.is_empty() || self.face_count() == self.crossing_count() + 2
    }

    /// Number of link components traced by following arcs straight through.
    pub fn component_count(&self) -> usize {
        let partner = self.slot_partner();
        let mut seen = vec![false; partner.len()];
        let mut comps = 0;
        for start in 0..partner.len() {
            if seen[start] {
                continue;
            }
            comps += 1;
            let mut s = start;
            while !seen[s] {
                seen[s] = true;
                let o = partner[s];
                seen[o] = true;
                s = o - o % 4 + (o % 4 + 2) % 4;
            }
        }
        comps
    }

    /// Writhe for a knot whose arcs are numbered consecutively along the
    /// orientation: `[a, b, c, d]` is positive when `b = d + 1`, negative when
    /// `d = b + 1` (mod `2N`).
    pub fn writhe_by_orientation(&self) -> Result<i64> {
        let m = self.arc_count() as u32;
        if m <= 2 && m > 0 {
            return Err(Error::InvalidArgument("orientation is ambiguous with two arcs".into()));
        }
        let succ = |a: u32| a % m + 1;
        self.crossings
            .iter()
            .map(|&[_, b, _, d]| {
                if b == succ(d) {
                    Ok(1)
                } else if d == succ(b) {
                    Ok(-1)
                } else {
                    Err(Error::InvalidArgument(format!("over-strand arcs {b}, {d} are not consecutive")))
                }
            })
            .sum()
    }

    /// Reflection in a line of the plane: reverses the cyclic order.
    pub fn mirror(&self) -> Self {
        PdCode { crossings: self.crossings.iter().map(|&[a, b, c, d]| [a, d, c, b]).collect() }
    }
}

/// Arcs numbered `1..2N` along the traversal; arc `p + 1` leaves visit `p`.
/// The closing arc `2N` runs outside the square, adding no crossings.
pub fn gauss_to_pd(g: &SignedGaussCode) -> Result<PdCode> {
    g.check()?;
    let n = g.entries.len();
    if n == 0 {
        return Ok(PdCode::unknot());
    }
    let arc_in = |p: usize| if p == 0 { n as u32 } else { p as u32 };
    let arc_out = |p: usize| p as u32 + 1;
    let mut over_at = vec![usize::MAX; g.crossing_count() + 1];
    let mut under_at = vec![usize::MAX; g.crossing_count() + 1];
    for (p, e) in g.entries.iter().enumerate() {
        if e.over {
            over_at[e.label] = p;
        } else {
            under_at[e.label] = p;
        }
    }
    let mut crossings = Vec::with_capacity(g.crossing_count());
    for label in 1..=g.crossing_count() {
        let (o, u) = (over_at[label], under_at[label]);
        let sign = g.entries[o].sign;
        crossings.push(if sign > 0 {
            [arc_in(u), arc_out(o), arc_out(u), arc_in(o)]
        } else {
            [arc_in(u), arc_in(o), arc_out(u), arc_out(o)]
        });
    }
    let pd = PdCode::new(crossings)?;
    if !pd.is_planar() {
        return Err(Error::UnrealizableCode(format!(
            "{} faces for {} crossings; the code is not planar",
            pd.face_count(),
            pd.crossing_count()
        )));
    }
    Ok(pd)
}

/// Closure of a braid word on `strands` strands. Generator `s > 0` crosses
/// strands `s` and `s + 1` with the left strand over (a positive crossing);
/// `-s` is its inverse. Every strand must take part in some crossing.
pub fn braid_closure_pd(strands: usize, word: &[i32]) -> Result<PdCode> {
    if word.is_empty() {
        return Err(Error::InvalidArgument("empty braid word".into()));
    }
    let mut touched = vec![false; strands];
    for &g in word {
        let s = g.unsigned_abs() as usize;
        if g == 0 || s >= strands {
            return Err(Error::InvalidArgument(format!("generator {g} on {strands} strands")));
        }
        touched[s - 1] = true;
        touched[s] = true;
    }
    if touched.contains(&false) {
        return Err(Error::InvalidArgument("a strand takes part in no crossing".into()));
    }
    let mut next = strands as u32;
    let bottom: Vec<u32> = (1..=strands as u32).collect();
    let mut cur = bottom.clone();
    let mut raw = Vec::with_capacity(word.len());
    for &g in word {
        let s = g.unsigned_abs() as usize - 1;
        let (sw, se) = (cur[s], cur[s + 1]);
        let (nw, ne) = (next + 1, next + 2);
        next += 2;
        raw.push(if g > 0 { [se, ne, nw, sw] } else { [sw, se, ne, nw] });
        cur[s] = nw;
        cur[s + 1] = ne;
    }
    // Close up: the top arc at each position is the bottom arc there.
    let mut alias: Vec<u32> = (0..=next).collect();
    for p in 0..strands {
        alias[cur[p] as usize] = bottom[p];
    }
    let mut fresh = vec![0u32; next as usize + 1];
    let mut count = 0;
    let crossings = raw
        .into_iter()
        .map(|x| {
            x.map(|a| {
                let a = alias[a as usize] as usize;
                if fresh[a] == 0 {
                    count += 1;
                    fresh[a] = count;
                }
                fresh[a]
            })
        })
        .collect();
    PdCode::new(crossings)
}
