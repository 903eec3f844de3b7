use cullis_core::{parse_scalar, Domain, Error, ExactRational, Scalar};
use proptest::prelude::*;

proptest! {
    #[test]
    fn integer_text_round_trips(v in any::<i64>()) {
        let s = parse_scalar(&v.to_string(), Domain::Int).unwrap();
        prop_assert_eq!(s.to_string(), v.to_string());
    }

    #[test]
    fn rational_text_normalizes(p in -1000i64..1000, q in 1i64..1000) {
        let s = parse_scalar(&format!("{p}/{q}"), Domain::Rational).unwrap();
        prop_assert_eq!(s.to_string(), ExactRational::new(p, q).unwrap().to_string());
    }

    #[test]
    fn float_text_parses(v in -1e12f64..1e12) {
        let s = parse_scalar(&format!("{v:e}"), Domain::Float).unwrap();
        match s {
            Scalar::Float(f) => prop_assert_eq!(f.0, v),
            other => prop_assert!(false, "wrong variant {:?}", other),
        }
    }
}

#[test]
fn grammar_rejections() {
    for (text, domain) in [
        ("1/2", Domain::Int),
        ("1.5", Domain::Int),
        ("1/0", Domain::Rational),
        ("1/-2", Domain::Rational),
        ("1/02", Domain::Rational),
        ("inf", Domain::Float),
        ("NaN", Domain::Float),
        ("", Domain::Int),
        ("+-1", Domain::Int),
    ] {
        assert!(
            matches!(parse_scalar(text, domain), Err(Error::Parse { .. })),
            "{text:?} under {domain}"
        );
    }
}
