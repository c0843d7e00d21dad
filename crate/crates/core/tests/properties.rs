use gl2_tensor::{
    enumerate_irreps, is_multiplicity_free, parse_label, tensor_decompose, CycloValue, FieldParams,
    IrrepLabel, ModularEvaluator, MultChar, RawLabel, TorusChar,
};
use proptest::prelude::*;

const FIELDS: [u64; 8] = [3, 5, 7, 9, 11, 13, 25, 27];

fn field() -> impl Strategy<Value = FieldParams> {
    prop::sample::select(FIELDS.to_vec()).prop_map(|q| FieldParams::from_q(q).unwrap())
}

fn irrep_pair() -> impl Strategy<Value = (IrrepLabel, IrrepLabel)> {
    field().prop_flat_map(|p| {
        let irreps = enumerate_irreps(&p);
        (
            prop::sample::select(irreps.clone()),
            prop::sample::select(irreps),
        )
    })
}

fn cyclo(n: u32) -> impl Strategy<Value = CycloValue> {
    prop::collection::vec((0..i64::from(n), -20i64..=20), 0..12)
        .prop_map(move |t| CycloValue::from_terms(n, t))
}

proptest! {
    #[test]
    fn mult_chars_form_a_group(p in field(), a in -500i64..500, b in -500i64..500) {
        let (x, y) = (MultChar::new(&p, a), MultChar::new(&p, b));
        prop_assert_eq!(x * y, y * x);
        prop_assert_eq!(x * x.inverse(), MultChar::trivial(&p));
        prop_assert_eq!(x.pow(p.m1().into()), MultChar::trivial(&p));
        prop_assert_eq!((x * y).compose_det(), x.compose_det() * y.compose_det());
        prop_assert_eq!(x.is_square(), !x.sqrts().is_empty());
        for r in x.sqrts() {
            prop_assert_eq!(r * r, x);
        }
    }

    #[test]
    fn torus_chars_respect_frobenius(p in field(), k in 0i64..20_000, t in 0i64..1000) {
        let l = TorusChar::new(&p, k);
        let theta = MultChar::new(&p, t);
        prop_assert_eq!(l.frobenius().frobenius(), l);
        prop_assert_eq!(l.frobenius().bar(), l.bar());
        prop_assert_eq!(l.twist(theta).unwrap().bar(), l.bar() * theta * theta);
        prop_assert_eq!(l.is_decomposable(), l.frobenius() == l);
        if let Some(b) = l.decompose() {
            prop_assert_eq!(b.compose_det(), l);
        }
    }

    #[test]
    fn labels_round_trip(p in field(), a in -200i64..200, b in -200i64..200, k in -2000i64..2000) {
        let raws = [
            RawLabel::OneDim(a),
            RawLabel::Steinberg(a),
            RawLabel::PrincipalSeries(a, b),
            RawLabel::Cuspidal(k),
        ];
        for raw in raws {
            if let Ok(label) = raw.canonicalize(&p) {
                let text = label.to_string();
                prop_assert_eq!(parse_label(&p, &text).unwrap(), label);
                prop_assert_eq!(RawLabel::from(label).canonicalize(&p).unwrap(), label);
                prop_assert_eq!(label.dual().dual(), label);
            }
        }
    }

    #[test]
    fn tensor_products_are_symmetric_and_sized((r1, r2) in irrep_pair()) {
        let d = tensor_decompose(&r1, &r2).unwrap();
        prop_assert_eq!(&d, &tensor_decompose(&r2, &r1).unwrap());
        prop_assert_eq!(d.total_dimension() as u64, r1.dimension() * r2.dimension());
        let z = r1.central_character() * r2.central_character();
        for (l, _) in d.iter() {
            prop_assert_eq!(l.central_character(), z);
        }
        prop_assert!(d.max_multiplicity() <= 2);
        prop_assert_eq!(is_multiplicity_free(&r1, &r2).unwrap().free, d.is_multiplicity_free());
    }

    #[test]
    fn duals_commute_with_products((r1, r2) in irrep_pair()) {
        let d = tensor_decompose(&r1, &r2).unwrap();
        let dual = tensor_decompose(&r1.dual(), &r2.dual()).unwrap();
        prop_assert_eq!(d.len(), dual.len());
        for (l, m) in d.iter() {
            prop_assert_eq!(dual.multiplicity(&l.dual()), *m);
        }
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(x in cyclo(24), y in cyclo(24), seed in any::<u64>()) {
        let ev = ModularEvaluator::new(24, 1 << 20, seed);
        let [px, py, psum, pprod] = [&x, &y, &(&x + &y), &(&x * &y)].map(|v| ev.eval(v).unwrap());
        for t in 0..2 {
            let p = ev.targets()[t].prime();
            prop_assert_eq!(psum[t], (px[t] + py[t]) % p);
            prop_assert_eq!(pprod[t], (u128::from(px[t]) * u128::from(py[t]) % u128::from(p)) as u64);
        }
    }

    #[test]
    fn integers_extract_exactly(c in -10_000i64..10_000, d in 1u64..50) {
        let ev = ModularEvaluator::new(24, 1 << 30, 7);
        let v = CycloValue::integer(24, c * d as i64);
        prop_assert_eq!(ev.extract_integer(&v, d, 10_000).unwrap(), c);
    }
}
