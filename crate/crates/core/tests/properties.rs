use proptest::prelude::*;

use vogan::exact::HalfInt;
use vogan::infinitesimal::{build_vogan_variety, InfinitesimalParameter};
use vogan::lie::{FormKind, GroupType};
use vogan::orbits::{
    closure_leq, enumerate_orbits, mw_involution, pyasetskii_dual, rank_invariants, triangle_to_multisegment,
    Multisegment, Segment,
};
use vogan::params::{
    arthur_to_point, is_arthur_type, is_tempered, jordan_type, parameter_to_point, permuted_jordan_point,
    phi_of_psi, ArthurParameterData, Ladder, StructuredParameter, Summand,
};
use vogan::verify::gl_family;

fn gl_vv(twice: &[i64]) -> vogan::infinitesimal::VoganVariety {
    let raw: Vec<HalfInt> = twice.iter().map(|&t| HalfInt::from_twice(t)).collect();
    build_vogan_variety(&InfinitesimalParameter::new(GroupType::gl(raw.len()), &raw).unwrap())
}

#[test]
fn closure_order_is_a_partial_order() {
    for twice in gl_family(4, 3) {
        let vv = gl_vv(&twice);
        let orbits = enumerate_orbits(&vv).unwrap();
        let leq = |a: usize, b: usize| closure_leq(&orbits[a].triangle, &orbits[b].triangle).unwrap();
        let n = orbits.len();
        for a in 0..n {
            assert!(leq(a, a));
            for b in 0..n {
                if a != b && leq(a, b) {
                    assert!(!leq(b, a), "{twice:?}: antisymmetry");
                    assert!(orbits[a].dimension < orbits[b].dimension, "{twice:?}: dimension");
                }
                for c in 0..n {
                    if leq(a, b) && leq(b, c) {
                        assert!(leq(a, c), "{twice:?}: transitivity");
                    }
                }
            }
        }
    }
}

/// Duality does not reverse the closure order: over λ = (2, 1, 1, 0) the orbit
/// {[0,1],[1,2]} is self-dual of dimension 3 and lies above {[0],[1],[1,2]},
/// whose dual {[0,1],[1],[2]} has dimension 2. Geometry and MW agree on this.
#[test]
fn duality_does_not_reverse_closure_order() {
    let vv = gl_vv(&[4, 2, 2, 0]);
    let orbits = enumerate_orbits(&vv).unwrap();
    let find = |name: &str| orbits.iter().find(|o| o.multisegment.as_ref().unwrap().to_string() == name).unwrap();
    let low = find("{[0], [1], [1,2]}");
    let high = find("{[0,1], [1,2]}");
    assert!(closure_leq(&low.triangle, &high.triangle).unwrap());
    let low_dual = pyasetskii_dual(&vv, &low.point, 0).unwrap();
    let high_dual = pyasetskii_dual(&vv, &high.point, 0).unwrap();
    assert_eq!(high_dual.multisegment.as_ref().unwrap().to_string(), "{[0,1], [1,2]}");
    assert_eq!(low_dual.multisegment.as_ref().unwrap().to_string(), "{[0,1], [1], [2]}");
    assert_eq!(low_dual.multisegment, Some(mw_involution(low.multisegment.as_ref().unwrap())));
    assert!(!closure_leq(&high_dual.triangle, &low_dual.triangle).unwrap());
}

#[test]
fn sampler_is_deterministic_per_seed() {
    let vv = gl_vv(&[4, 2, 2, 0, 0]);
    for o in enumerate_orbits(&vv).unwrap() {
        let a = pyasetskii_dual(&vv, &o.point, 5).unwrap();
        let b = pyasetskii_dual(&vv, &o.point, 5).unwrap();
        assert_eq!(a.point, b.point);
    }
}

fn half(twice: i64) -> HalfInt {
    HalfInt::from_twice(twice)
}

/// Segments of a GL parameter of size at most 6.
fn gl_summands() -> impl Strategy<Value = Vec<Summand>> {
    prop::collection::vec((-4i64..=4, 1usize..=3), 1..=3)
        .prop_map(|v| v.into_iter().map(|(c, l)| Summand::new(half(c), l)).collect())
}

/// Bounded Arthur ladders for GL.
fn gl_ladders() -> impl Strategy<Value = Vec<Ladder>> {
    prop::collection::vec((1usize..=3, 1usize..=3), 1..=3)
        .prop_map(|v| v.into_iter().map(|(a, b)| Ladder::new(HalfInt::ZERO, a, b)).collect())
}

/// Tempered classical parameters: a form and a multiset of lengths, with
/// wrong-parity lengths doubled so the parameter embeds.
fn classical_tempered() -> impl Strategy<Value = StructuredParameter> {
    (any::<bool>(), prop::collection::vec(1usize..=5, 1..=3)).prop_filter_map("group exists", |(alt, lens)| {
        let form = if alt { FormKind::Alternating } else { FormKind::Symmetric };
        let mut all = Vec::new();
        for l in lens {
            let wrong = (l % 2 == 1) == (form == FormKind::Alternating);
            all.push(l);
            if wrong {
                all.push(l);
            }
        }
        let size: usize = all.iter().sum();
        let group = GroupType::from_dual(form, size).ok()?;
        StructuredParameter::new(group, all.into_iter().map(|l| Summand::new(HalfInt::ZERO, l)).collect()).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gl_point_has_summand_jordan_type(summands in gl_summands()) {
        let n = summands.iter().map(|s| s.length).sum();
        let p = StructuredParameter::new(GroupType::gl(n), summands.clone()).unwrap();
        let pt = parameter_to_point(&p).unwrap();
        let mut lens: Vec<usize> = summands.iter().map(|s| s.length).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(jordan_type(&pt.n), lens);
        // the orbit's multisegment is the summands' segments
        let vv = build_vogan_variety(&pt.lambda);
        let m = triangle_to_multisegment(&rank_invariants(&vv, &pt.n).unwrap()).unwrap();
        let expected = Multisegment::new(summands.iter().map(|s| {
            let e = s.exponents();
            Segment::new(*e.last().unwrap(), e[0]).unwrap()
        }).collect());
        prop_assert_eq!(m, expected);
    }

    #[test]
    fn classical_point_lies_in_the_right_gl_orbit(p in classical_tempered()) {
        let pt = parameter_to_point(&p).unwrap();
        let vv = build_vogan_variety(&pt.lambda);
        prop_assert!(vv.contains_v(&pt.n));
        let mut lens: Vec<usize> = p.summands().iter().map(|s| s.length).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(jordan_type(&pt.n), lens);
        // compare with the plain Jordan form inside the GL variety on the same exponents
        let gl_vv = build_vogan_variety(
            &InfinitesimalParameter::new(GroupType::gl(pt.lambda.exponents().len()), pt.lambda.exponents()).unwrap(),
        );
        let gl_level = permuted_jordan_point(&p).unwrap();
        prop_assert_eq!(rank_invariants(&gl_vv, &pt.n).unwrap(), rank_invariants(&gl_vv, &gl_level).unwrap());
    }

    #[test]
    fn arthur_type_round_trip(ladders in gl_ladders()) {
        let n = ladders.iter().map(|l| l.a * l.b).sum();
        let psi = ArthurParameterData::new(GroupType::gl(n), ladders).unwrap();
        let phi = phi_of_psi(&psi);
        let found = is_arthur_type(&phi).expect("φ_ψ is of Arthur type");
        prop_assert_eq!(phi_of_psi(&found).canonical_summands(), phi.canonical_summands());
        let pt = arthur_to_point(&psi).unwrap();
        let y = pt.y.unwrap();
        prop_assert!(vogan::lie::bracket(&pt.n, &y).unwrap().is_zero());
        if psi.is_tempered() {
            prop_assert!(y.is_zero());
        }
    }

    #[test]
    fn tempered_means_trivial_arthur_sl2(lens in prop::collection::vec(1usize..=4, 1..=3)) {
        let n = lens.iter().sum();
        let p = StructuredParameter::new(
            GroupType::gl(n),
            lens.iter().map(|&l| Summand::new(HalfInt::ZERO, l)).collect(),
        ).unwrap();
        prop_assert!(is_tempered(&p));
        let psi = is_arthur_type(&p).unwrap();
        prop_assert!(psi.ladders().iter().all(|l| l.b == 1));
    }

    #[test]
    fn mw_is_an_involution(segs in prop::collection::vec((-3i64..=3, 0i64..=3), 0..=5)) {
        let m = Multisegment::new(segs.into_iter().map(|(s, len)| {
            Segment::new(HalfInt::from_int(s), HalfInt::from_int(s + len)).unwrap()
        }).collect());
        let d = mw_involution(&m);
        prop_assert_eq!(d.exponent_multiplicities(), m.exponent_multiplicities());
        prop_assert_eq!(mw_involution(&d), m);
    }
}
