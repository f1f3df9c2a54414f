use chebknot::diagram::{
    alternating_sequence, build_gauss_code, gauss_to_pd, handedness, handedness_by_intervals, torus_sequence, writhe,
    z_crossing_sequence, CrossingSequence, GaussEntry, Height, PdCode, SignedGaussCode,
};
use chebknot::geometry::{alternating_z, NodalCurve};
use chebknot::poly::cheb_t;
use chebknot::Error;

fn coprime_pairs(max: u64) -> impl Iterator<Item = (u64, u64)> {
    (2..=max).flat_map(move |i| (i + 1..=max).map(move |j| (i, j))).filter(|&(i, j)| num_integer::gcd(i, j) == 1)
}

fn signs(s: &str) -> Vec<i8> {
    s.chars().map(|c| if c == '+' { 1 } else { -1 }).collect()
}

/// The torus rule written out with 1-based indices.
fn torus_rule(n: usize) -> Vec<i8> {
    let mut a = vec![0i8; 6 * n + 1];
    for (m, v) in [(1, 1), (2, -1), (3, -1)] {
        if m <= 2 * n {
            a[m] = v;
        }
    }
    for m in 4..=2 * n {
        a[m] = a[m - 1] * a[m - 2] * a[m - 3];
    }
    let flip = if (n + 1).is_multiple_of(2) { 1 } else { -1 };
    for m in 1..=2 * n {
        a[m + 2 * n] = flip * a[m];
        a[m + 4 * n] = a[m];
    }
    a[1..].to_vec()
}

#[test]
fn alternating_sequences_are_valid() {
    for (i, j) in coprime_pairs(13) {
        let c = NodalCurve::new(i, j).unwrap();
        let seq = alternating_sequence(c.node_count());
        seq.validate(&c).unwrap();
        let g = build_gauss_code(&c, &seq).unwrap();
        assert!(g.is_alternating(), "({i},{j})");
    }
    assert_eq!(alternating_sequence(3).values(), signs("-+-+-+").as_slice());
    assert_eq!(alternating_sequence(1).values(), signs("-+").as_slice());
}

#[test]
fn alternating_height_matches_intervals() {
    for (i, j) in coprime_pairs(7).filter(|&(i, _)| i >= 3) {
        let c = NodalCurve::new(i, j).unwrap();
        let mechanical = z_crossing_sequence(&c, &Height::Alternating).unwrap();
        let evaluated = z_crossing_sequence(&c, &Height::Poly(alternating_z(i, j).unwrap())).unwrap();
        assert_eq!(mechanical, evaluated, "({i},{j})");
        assert_eq!(mechanical, alternating_sequence(c.node_count()));
    }
}

#[test]
fn chebyshev_height_matches_intervals() {
    for (i, j, k) in [(3, 4, 5), (3, 5, 7), (3, 7, 11), (4, 5, 11), (3, 8, 13), (4, 7, 17), (5, 7, 9), (5, 8, 17)] {
        let c = NodalCurve::new(i, j).unwrap();
        let exact = z_crossing_sequence(&c, &Height::Chebyshev(k)).unwrap();
        let evaluated = z_crossing_sequence(&c, &Height::Poly(cheb_t(k as usize))).unwrap();
        assert_eq!(exact, evaluated, "({i},{j},{k})");
    }
}

#[test]
fn non_separating_height() {
    let c = NodalCurve::new(3, 4).unwrap();
    assert!(matches!(z_crossing_sequence(&c, &Height::Chebyshev(6)), Err(Error::ZFailsToSeparate { .. })));
}

#[test]
fn handedness_routes_agree() {
    for (i, j) in coprime_pairs(9) {
        let c = NodalCurve::new(i, j).unwrap();
        for (a, b) in c.position_pairs() {
            let exact = handedness(&c, a, b).unwrap();
            assert_eq!(Some(exact), handedness_by_intervals(&c, a, b), "({i},{j})");
            assert_eq!(handedness(&c, b, a).unwrap(), -exact);
        }
    }
}

#[test]
fn torus_sequences() {
    for n in 1..=6 {
        let s = torus_sequence(n);
        assert_eq!(s.values(), torus_rule(n).as_slice(), "n={n}");
        s.validate(&NodalCurve::new(3, 3 * n as u64 + 1).unwrap()).unwrap();
    }
    assert_eq!(torus_sequence(2).values(), signs("+--+-++-+--+").as_slice());
    assert!(signs("+--++--").starts_with(&torus_sequence(4).values()[..7]));
}

#[test]
fn invalid_sequences_are_rejected() {
    let c = NodalCurve::new(3, 4).unwrap();
    assert!(CrossingSequence::new(vec![1, 1, 1, 1, 1, 1]).unwrap().validate(&c).is_err());
    assert!(CrossingSequence::new(vec![1, -1]).unwrap().validate(&c).is_err());
    assert!(CrossingSequence::new(vec![1, 0, -1]).is_err());
}

#[test]
fn gauss_and_pd_shapes() {
    for (i, j) in coprime_pairs(8) {
        let c = NodalCurve::new(i, j).unwrap();
        let g = build_gauss_code(&c, &alternating_sequence(c.node_count())).unwrap();
        let pd = gauss_to_pd(&g).unwrap();
        let n = c.node_count();
        assert_eq!(pd.crossing_count(), n);
        assert_eq!(pd.arc_count(), 2 * n);
        assert_eq!(pd.component_count(), 1);
        assert!(pd.is_planar());
        assert_eq!(pd.writhe_by_orientation().unwrap_or(writhe(&g)), writhe(&g));
        assert_eq!(writhe(&g.mirror()), -writhe(&g));
    }
}

#[test]
fn trefoil_pipeline() {
    let c = NodalCurve::new(3, 4).unwrap();
    let g = build_gauss_code(&c, &alternating_sequence(3)).unwrap();
    assert_eq!(writhe(&g).abs(), 3);
    let pd = gauss_to_pd(&g).unwrap();
    assert_eq!(pd.arc_count(), 6);
    assert_eq!(gauss_to_pd(&SignedGaussCode::default()).unwrap(), PdCode::unknot());
}

#[test]
fn nonplanar_code_is_rejected() {
    // The virtual trefoil: O1 U2 U1 O2 with equal signs.
    let e = |label, over| GaussEntry { label, over, sign: 1 };
    let g = SignedGaussCode::new(vec![e(1, true), e(2, false), e(1, false), e(2, true)]);
    assert!(matches!(gauss_to_pd(&g), Err(Error::UnrealizableCode(_))));
}
