//! Report builders behind the `chebknot` command line. Each command returns
//! a serializable report with a versioned `schema` key and a plain-text
//! rendering carrying the same numbers.

mod svg;

pub use svg::{render_svg, SvgReport};

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::algebra::{
    chebyshev_parametrization, embedding_witness, witness_unchecked, MAX_WITNESS_DEGREE, is_embedding, pgcd, rectify_trivial, reduce_triple, remnant,
    Involution, Slot, TraceEntry, Triple,
};
use crate::diagram::{
    build_gauss_code, gauss_to_pd, writhe, z_crossing_sequence, CrossingSequence, Height, PdCode, SignedGaussCode,
};
use crate::error::{Error, Result};
use crate::geometry::{alternating_z, NodalCurve};
use crate::invariants::{identify, jones_from_bracket, kauffman_bracket, Identification, LaurentPoly};
use crate::poly::{cheb_t, ExactPoly};

pub trait Report: Serialize {
    fn text(&self) -> String;

    fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

fn parse_triple(i: u64, j: u64, k: u64) -> Result<Triple> {
    Triple::try_new(i, j, k).ok_or_else(|| Error::InvalidArgument(format!("degrees must be positive, got ({i},{j},{k})")))
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub odd_slot: Slot,
    /// `(I, J, K)` in the identity `t = 2 T_a(T_J) T_b(T_K) - T_c(T_I)`.
    pub roles: [u64; 3],
    pub identity: String,
    pub degree: u64,
    pub verified: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EmbedReport {
    pub schema: &'static str,
    pub triple: Triple,
    pub pgcd: u64,
    pub embedding: bool,
    pub unit_component: bool,
    pub witness: Option<WitnessReport>,
    /// For a triple containing 1: involutions carrying it to `(t, 0, 0)`.
    pub rectification: Option<Vec<Involution>>,
}

pub fn cmd_embed(i: u64, j: u64, k: u64) -> Result<EmbedReport> {
    let t = parse_triple(i, j, k)?;
    let g = pgcd(t);
    let witness = if g == 1 {
        let (w, verified) = match embedding_witness(t) {
            Ok(w) => (w, true),
            Err(Error::WitnessTooLarge { .. }) => (witness_unchecked(t)?, false),
            Err(e) => return Err(e),
        };
        let (ri, rj, rk) = w.roles(t);
        Some(WitnessReport {
            a: w.a,
            b: w.b,
            c: w.c,
            odd_slot: w.odd_slot,
            roles: [ri, rj, rk],
            identity: format!("t = 2 T_{}(T_{}) T_{}(T_{}) - T_{}(T_{})", w.a, rj, w.b, rk, w.c, ri),
            degree: w.degree(t),
            verified,
        })
    } else {
        None
    };
    let rectification = if t.contains_one() { Some(rectify_trivial(t)?) } else { None };
    Ok(EmbedReport {
        schema: "chebknot.embed/1",
        triple: t,
        pgcd: g,
        embedding: is_embedding(t),
        unit_component: t.contains_one(),
        witness,
        rectification,
    })
}

impl Report for EmbedReport {
    fn text(&self) -> String {
        let mut s = format!("triple: {}\npgcd: {}\nembedding: {}\n", self.triple, self.pgcd, self.embedding);
        if self.unit_component {
            s.push_str("unit component: true\n");
        }
        if let Some(w) = &self.witness {
            s.push_str(&format!(
                "witness: a={} b={} c={} (I,J,K)=({},{},{})\nidentity: {}\ndegree: {}\nverified: {}\n",
                w.a,
                w.b,
                w.c,
                w.roles[0],
                w.roles[1],
                w.roles[2],
                w.identity,
                w.degree,
                if w.verified { "true".to_string() } else { format!("no, degree exceeds the expansion cap {MAX_WITNESS_DEGREE}") }
            ));
        }
        if let Some(r) = &self.rectification {
            s.push_str("rectification to (t,0,0):\n");
            for m in r {
                s.push_str(&format!("  {m}\n"));
            }
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReduceReport {
    pub schema: &'static str,
    pub start: Triple,
    pub steps: Vec<TraceEntry>,
    pub end: Triple,
    pub shear_count: usize,
    pub trivial: bool,
    pub replay_verified: bool,
}

pub fn cmd_reduce(i: u64, j: u64, k: u64) -> Result<ReduceReport> {
    let t = parse_triple(i, j, k)?;
    let trace = reduce_triple(t)?;
    let replay_verified = trace.replay() == chebyshev_parametrization(trace.start);
    Ok(ReduceReport {
        schema: "chebknot.reduce/1",
        start: trace.start,
        shear_count: trace.shear_count(),
        trivial: trace.is_trivial(),
        end: trace.end,
        steps: trace.steps,
        replay_verified,
    })
}

impl Report for ReduceReport {
    fn text(&self) -> String {
        let mut s = format!("start: {}\n", self.start);
        for (n, e) in self.steps.iter().enumerate() {
            s.push_str(&format!("{:>3}. {:<22} -> {}\n", n + 1, e.involution.to_string(), e.triple));
        }
        s.push_str(&format!(
            "end: {}\nshears: {}\ntrivial: {}\nreplay verified: {}\n",
            self.end, self.shear_count, self.trivial, self.replay_verified
        ));
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RemnantRow {
    pub i: u64,
    pub j: u64,
    pub nodes: u64,
    pub remnant: Vec<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Table1Report {
    pub schema: &'static str,
    pub max_nodes: u64,
    pub rows: Vec<RemnantRow>,
}

/// Coprime pairs `3 <= i < j` with `(i-1)(j-1)/2 <= max_nodes`, ordered by
/// node count and then by `i`.
pub fn cmd_table1(max_nodes: u64) -> Result<Table1Report> {
    if max_nodes < 1 {
        return Err(Error::InvalidArgument("max_nodes must be at least 1".into()));
    }
    let mut rows = Vec::new();
    for i in 3.. {
        if (i - 1) * i / 2 > max_nodes {
            break;
        }
        for j in i + 1.. {
            let nodes = (i - 1) * (j - 1) / 2;
            if nodes > max_nodes {
                break;
            }
            if num_integer::gcd(i, j) == 1 {
                rows.push(RemnantRow { i, j, nodes, remnant: remnant(i, j)? });
            }
        }
    }
    rows.sort_by_key(|r| (r.nodes, r.i));
    Ok(Table1Report { schema: "chebknot.table1/1", max_nodes, rows })
}

impl Report for Table1Report {
    fn text(&self) -> String {
        let mut s = format!("{:<10} {:>5}  remnant\n", "(i,j)", "nodes");
        for r in &self.rows {
            let rem: Vec<String> = r.remnant.iter().map(u64::to_string).collect();
            s.push_str(&format!("{:<10} {:>5}  {{{}}}\n", format!("({},{})", r.i, r.j), r.nodes, rem.join(", ")));
        }
        s
    }
}

/// A knot diagram over `(T_i, T_j)` with its invariants when affordable.
#[derive(Debug, Clone, Serialize)]
pub struct KnotReport {
    pub schema: &'static str,
    pub i: u64,
    pub j: u64,
    pub k: Option<u64>,
    pub alternating: bool,
    pub nodes: usize,
    pub crossing_sequence: CrossingSequence,
    pub gauss_code: SignedGaussCode,
    pub pd_code: PdCode,
    pub writhe: i64,
    pub jones: Option<LaurentPoly>,
    /// The Jones polynomial written in `t` when all exponents allow it.
    pub jones_t: Option<String>,
    pub identification: Option<Identification>,
    pub cap: usize,
    pub cap_exceeded: bool,
}

/// A diagram with its Jones polynomial, or `None` for the invariant when the
/// crossing count exceeds `cap`.
pub struct KnotData {
    pub curve: NodalCurve,
    pub sequence: CrossingSequence,
    pub gauss: SignedGaussCode,
    pub pd: PdCode,
    pub jones: Option<LaurentPoly>,
}

pub fn knot_data(i: u64, j: u64, height: &Height, cap: usize) -> Result<KnotData> {
    let curve = NodalCurve::new(i, j)?;
    let sequence = z_crossing_sequence(&curve, height)?;
    let gauss = build_gauss_code(&curve, &sequence)?;
    let pd = gauss_to_pd(&gauss)?;
    let jones = match kauffman_bracket(&pd, cap) {
        Ok(b) => Some(jones_from_bracket(&b, writhe(&gauss))),
        Err(Error::TooManyCrossings { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(KnotData { curve, sequence, gauss, pd, jones })
}

pub fn cmd_knot(i: u64, j: u64, k: Option<u64>, cap: usize) -> Result<KnotReport> {
    let height = match k {
        Some(k) => {
            let t = parse_triple(i, j, k)?;
            if !is_embedding(t) {
                return Err(Error::NotAnEmbedding { triple: t, reason: "pgcd > 1 and no component is 1" });
            }
            Height::Chebyshev(k)
        }
        None => Height::Alternating,
    };
    let d = knot_data(i, j, &height, cap)?;
    let jones_t = d.jones.as_ref().and_then(|v| v.compress(4)).map(|v| v.display_in("t"));
    Ok(KnotReport {
        schema: "chebknot.knot/1",
        i,
        j,
        k,
        alternating: k.is_none(),
        nodes: d.curve.node_count(),
        writhe: writhe(&d.gauss),
        identification: d.jones.as_ref().and_then(identify),
        cap_exceeded: d.jones.is_none(),
        jones: d.jones,
        jones_t,
        crossing_sequence: d.sequence,
        gauss_code: d.gauss,
        pd_code: d.pd,
        cap,
    })
}

impl Report for KnotReport {
    fn text(&self) -> String {
        let what = match self.k {
            Some(k) => format!("(T_{}, T_{}, T_{})", self.i, self.j, k),
            None => format!("alternating ({},{})-knot", self.i, self.j),
        };
        let mut s = format!(
            "curve: {what}\nnodes: {}\ncrossing sequence: {}\ngauss code: {}\npd code: {}\nwrithe: {}\n",
            self.nodes,
            self.crossing_sequence,
            self.gauss_code.to_compact(),
            serde_json::to_string(&self.pd_code).expect("pd serializes"),
            self.writhe
        );
        match (&self.jones, &self.jones_t) {
            (_, Some(t)) => s.push_str(&format!("jones: {t}\n")),
            (Some(v), None) => s.push_str(&format!("jones (x = t^1/4): {v}\n")),
            (None, _) => s.push_str(&format!(
                "jones: skipped, {} crossings exceed the cap of {}\n",
                self.gauss_code.crossing_count(),
                self.cap
            )),
        }
        match &self.identification {
            Some(id) => s.push_str(&format!(
                "knot type: {}{}\n",
                id.name,
                if id.mirror_matched { " (mirror image)" } else { "" }
            )),
            None if self.jones.is_some() => s.push_str("knot type: not in table\n"),
            None => {}
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ParamReport {
    pub schema: &'static str,
    pub i: u64,
    pub j: u64,
    pub x: ExactPoly,
    pub y: ExactPoly,
    pub z: ExactPoly,
    /// Positive content of `z`; `z = content * z_primitive`.
    pub z_content: String,
    pub z_primitive: ExactPoly,
}

pub fn cmd_param(i: u64, j: u64) -> Result<ParamReport> {
    let z = alternating_z(i, j)?;
    let content = z.content();
    let primitive = z.scale(&(BigRational::one() / &content));
    Ok(ParamReport {
        schema: "chebknot.param/1",
        i,
        j,
        x: cheb_t(i as usize),
        y: cheb_t(j as usize),
        z,
        z_content: content.to_string(),
        z_primitive: primitive,
    })
}

impl Report for ParamReport {
    fn text(&self) -> String {
        format!(
            "x = T_{} = {}\ny = T_{} = {}\nz = {}\n  = {} * ({})\n",
            self.i, self.x, self.j, self.y, self.z, self.z_content, self.z_primitive
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Conjecture2Entry {
    pub k: u64,
    pub crossings: usize,
    pub jones: Option<LaurentPoly>,
    pub identification: Option<Identification>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Conjecture2Report {
    pub schema: &'static str,
    pub note: &'static str,
    pub i: u64,
    pub j: u64,
    pub entries: Vec<Conjecture2Entry>,
    /// Pairs `(k1, k2)` whose Jones polynomials agree up to mirror.
    pub coincidences: Vec<(u64, u64)>,
    /// True when every entry has a Jones polynomial.
    pub complete: bool,
    /// Whether all computed Jones polynomials are pairwise distinct up to mirror.
    pub pairwise_distinct: bool,
}

pub fn cmd_conjecture2(i: u64, j: u64, cap: usize) -> Result<Conjecture2Report> {
    let ks = remnant(i, j)?;
    let (i, j) = (i.min(j), i.max(j));
    let mut entries = Vec::with_capacity(ks.len());
    for &k in &ks {
        let d = knot_data(i, j, &Height::Chebyshev(k), cap)?;
        entries.push(Conjecture2Entry {
            k,
            crossings: d.pd.crossing_count(),
            identification: d.jones.as_ref().and_then(identify),
            jones: d.jones,
        });
    }
    let mut coincidences = Vec::new();
    for (a, ea) in entries.iter().enumerate() {
        for eb in &entries[a + 1..] {
            if let (Some(va), Some(vb)) = (&ea.jones, &eb.jones) {
                if va == vb || *va == vb.mirror() {
                    coincidences.push((ea.k, eb.k));
                }
            }
        }
    }
    Ok(Conjecture2Report {
        schema: "chebknot.conjecture2/1",
        note: "empirical evidence only: distinct Jones polynomials prove distinct knots, equal ones prove nothing",
        i,
        j,
        complete: entries.iter().all(|e| e.jones.is_some()),
        pairwise_distinct: coincidences.is_empty(),
        entries,
        coincidences,
    })
}

impl Report for Conjecture2Report {
    fn text(&self) -> String {
        let mut s = format!("remnant knots over (T_{}, T_{})\n{}\n", self.i, self.j, self.note);
        for e in &self.entries {
            let jones = match &e.jones {
                Some(v) => v.compress(4).map(|v| v.display_in("t")).unwrap_or_else(|| v.to_string()),
                None => "skipped (cap)".into(),
            };
            let name = e.identification.as_ref().map(|id| id.name).unwrap_or("?");
            s.push_str(&format!("k={:<4} crossings={:<4} type={:<8} jones: {}\n", e.k, e.crossings, name, jones));
        }
        s.push_str(&format!("complete: {}\npairwise distinct: {}\n", self.complete, self.pairwise_distinct));
        if !self.coincidences.is_empty() {
            let c: Vec<String> = self.coincidences.iter().map(|(a, b)| format!("({a},{b})")).collect();
            s.push_str(&format!("coincidences: {}\n", c.join(" ")));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn embed_examples() {
        let r = cmd_embed(3, 4, 5).unwrap();
        assert!(r.embedding && r.witness.as_ref().unwrap().verified);
        assert!(!cmd_embed(2, 4, 6).unwrap().embedding);
        let r = cmd_embed(1, 9, 12).unwrap();
        assert!(r.embedding && r.unit_component && r.witness.is_none());
    }

    #[test]
    fn reduce_examples() {
        let r = cmd_reduce(3, 4, 7).unwrap();
        assert!(r.trivial && r.replay_verified);
        assert_eq!(cmd_reduce(3, 4, 5).unwrap().steps.len(), 0);
        assert!(cmd_reduce(2, 5, 9).unwrap().trivial);
        assert!(cmd_reduce(2, 4, 6).is_err());
    }

    #[test]
    fn table1_small() {
        let r = cmd_table1(3).unwrap();
        assert_eq!(r.rows, vec![RemnantRow { i: 3, j: 4, nodes: 3, remnant: vec![5] }]);
    }

    #[test]
    fn param_scaling() {
        let r = cmd_param(3, 11).unwrap();
        assert_eq!(r.z_content, "64");
        assert_eq!(r.z_primitive.coeff(19), BigRational::from_integer(BigInt::from(327680)));
        assert_eq!(cmd_param(3, 4).unwrap().z.degree().finite(), Some(5));
        assert!(matches!(cmd_param(4, 6), Err(Error::NotCoprime(4, 6))));
    }

    #[test]
    fn conjecture2_trefoil_pair() {
        let r = cmd_conjecture2(3, 4, 24).unwrap();
        assert_eq!(r.entries.len(), 1);
        assert!(r.pairwise_distinct);
    }
}
