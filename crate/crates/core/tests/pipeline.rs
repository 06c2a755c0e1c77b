use arcseries::arc_ideals::*;
use arcseries::groebner::{buchberger_truncated, s_polynomial, MonomialIdeal};
use arcseries::poly::*;
use arcseries::qseries::{partition_series, TruncatedSeries};

fn p(s: &str) -> Polynomial {
    parse_polynomial(s).unwrap()
}

fn s(c: &[i64]) -> TruncatedSeries {
    TruncatedSeries::from_i64s(c)
}

#[test]
fn twelve_s_of_f1_f2_is_a_multiple_of_f0() {
    let f = big_f_sequence(4, 2);
    let lhs = s_polynomial(&f[1], &f[2])
        .unwrap()
        .scale(&Rational::from_integer(12.into()));
    assert_eq!(lhs, &p("-4*y2") * &f[0]);
}

#[test]
fn double_point_basis_is_the_f_sequence() {
    let gens = f_sequence(2, 2, 12);
    let basis = buchberger_truncated(&gens, 12, MonomialOrder::WeightRevLex).unwrap();
    let mut expected = Vec::new();
    for q in 1..=6u32 {
        expected.push(Monomial::pow(VarId::y(q), 2));
        if q + q < 12 {
            expected.push(Monomial::var(VarId::y(q)).mul(&Monomial::var(VarId::y(q + 1))));
        }
    }
    assert_eq!(basis.leading_ideal(), MonomialIdeal::new(expected));
    assert_eq!(basis.len(), gens.len());
}

#[test]
fn series_of_simple_specs() {
    assert_eq!(
        hp_focussed(&IdealSpec::affine(1, 6), 6).unwrap(),
        s(&[1, 1, 2, 3, 5, 7, 11])
    );
    assert_eq!(
        hp_focussed(&IdealSpec::nfold(2, 9), 9).unwrap(),
        s(&[1, 1, 1, 1, 2, 2, 3, 3, 4, 5])
    );
    let nc = IdealSpec::new(3, vec![p("x1_0*x2_0*x3_0")], true, 6).unwrap();
    let want = closed_form_hp(ClosedFormKind::NormalCrossings { d: 2, e: 3 }, 6).unwrap();
    assert_eq!(hp_focussed(&nc, 6).unwrap(), want);
}

#[test]
fn inert_coordinate_multiplies_by_the_partition_series() {
    let line = hp_focussed(&IdealSpec::nfold(2, 8), 8).unwrap();
    let plane = IdealSpec::new(2, vec![p("x1_0^2")], true, 8).unwrap();
    assert_eq!(
        product_hp(&line, &partition_series(8)).unwrap(),
        hp_focussed(&plane, 8).unwrap()
    );
}

#[test]
fn multiplicity_from_the_series() {
    let double = hp_focussed(&IdealSpec::nfold(2, 6), 6).unwrap();
    let r = multiplicity_probe(&double, 1);
    assert_eq!((r.multiplicity, r.signature), (Some(2), true));
    let cusp = IdealSpec::new(2, vec![p("x1_0^3 + x2_0^4")], true, 5).unwrap();
    assert_eq!(
        multiplicity_probe(&hp_focussed(&cusp, 5).unwrap(), 2).multiplicity,
        Some(3)
    );
    let smooth = closed_form_hp(ClosedFormKind::Smooth(2), 8).unwrap();
    assert_eq!(multiplicity_probe(&smooth, 2).multiplicity, None);
}

#[test]
fn spec_json_and_cache_key() {
    let spec =
        IdealSpec::from_json(r#"{"coords":3,"generators":["x1_0*x2_0 - x3_0^2"],"focussed":true,"weightBound":8}"#)
            .unwrap();
    assert_eq!(IdealSpec::from_json(&spec.to_json()).unwrap(), spec);
    let key = spec.cache_key(8, MonomialOrder::WeightRevLex);
    assert_eq!(key.len(), 64);
    assert_ne!(key, spec.cache_key(8, MonomialOrder::WeightLex));
    assert_ne!(key, spec.cache_key(7, MonomialOrder::WeightRevLex));
}
