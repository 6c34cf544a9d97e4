use circle_topo::expr::{
    decode_base4, decode_binary, encode_base4, encode_binary, flip, parse, validate, Node,
};
use circle_topo::FamilyId;
use proptest::prelude::*;

/// Random forests written with an arbitrary factor order.
fn forest() -> impl Strategy<Value = String> {
    let leaf = Just(String::new());
    leaf.prop_recursive(4, 24, 4, |inner| {
        prop::collection::vec(inner.prop_map(|s| format!("({s})")), 0..4).prop_map(|v| v.concat())
    })
}

/// A forest with one marked circle somewhere inside it.
fn marked() -> impl Strategy<Value = String> {
    (forest(), forest(), forest()).prop_map(|(a, b, c)| format!("{a}[{b}]{c}"))
}

proptest! {
    #[test]
    fn serialization_round_trips(s in forest()) {
        let e = parse(FamilyId::C, &s).unwrap();
        let again = parse(FamilyId::C, &e.to_string()).unwrap();
        prop_assert_eq!(&again, &e);
        prop_assert_eq!(e.circle_count() * 2, s.len());
        prop_assert!(validate(&s));
    }

    #[test]
    fn factor_order_does_not_matter(a in forest(), b in forest()) {
        let ab = parse(FamilyId::C, &format!("{a}{b}")).unwrap();
        let ba = parse(FamilyId::C, &format!("{b}{a}")).unwrap();
        prop_assert_eq!(ab.to_string(), ba.to_string());
    }

    #[test]
    fn binary_code_round_trips(s in forest()) {
        let e = parse(FamilyId::C, &s).unwrap();
        let code = encode_binary(&e).unwrap();
        prop_assert_eq!(code.digits.len(), s.len());
        prop_assert_eq!(decode_binary(&code.digits).unwrap(), e);
    }

    #[test]
    fn base4_code_round_trips(s in marked()) {
        let e = parse(FamilyId::M, &s).unwrap();
        let back = decode_base4(&encode_base4(&e).unwrap()).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn flip_is_undone_by_flipping_back(s in forest(), pick in any::<prop::sample::Index>()) {
        let e = parse(FamilyId::C, &s).unwrap();
        prop_assume!(!e.is_empty());
        let i = pick.index(e.factor_count());
        let f = flip(&e, i).unwrap();
        prop_assert_eq!(f.circle_count(), e.circle_count());
        let mut rest = e.factors().to_vec();
        rest.remove(i);
        let back_at = f
            .factors()
            .iter()
            .position(|n| matches!(n, Node::Circle(c) if c.factors() == rest.as_slice()))
            .unwrap();
        prop_assert_eq!(flip(&f, back_at).unwrap(), e);
    }

    #[test]
    fn unbalanced_strings_are_rejected(s in forest(), cut in any::<prop::sample::Index>()) {
        prop_assume!(!s.is_empty());
        let i = cut.index(s.len());
        let broken = format!("{}{}", &s[..i], &s[i + 1..]);
        prop_assert!(!validate(&broken));
        prop_assert!(parse(FamilyId::C, &broken).is_err());
    }
}
