//! Jet equations, the n-fold point family and the Hilbert–Poincaré pipeline.

mod bell;

pub use bell::{
    bell, big_f_closed_form, big_f_generator, big_f_sequence, f_generator, f_sequence, leading_term_closed_form,
};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::SpecError;
use crate::groebner::{buchberger_truncated, TruncatedBasis};
use crate::partitions::standard_monomial_series;
use crate::poly::{parse_polynomial, Monomial, MonomialOrder, Polynomial, VarId};
use crate::qseries::{nfold_product, TruncatedSeries};

/// An affine scheme given by equations in level-0 variables `x_j^{(0)}`,
/// `1 ≤ j ≤ coords`, together with the weight bound up to which its jet
/// equations are generated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSpec {
    coords: u32,
    generators: Vec<Polynomial>,
    focussed: bool,
    weight_bound: usize,
}

#[derive(Serialize, Deserialize)]
struct SpecJson {
    coords: u32,
    generators: Vec<String>,
    focussed: bool,
    #[serde(rename = "weightBound")]
    weight_bound: usize,
}

impl IdealSpec {
    pub fn new(
        coords: u32,
        generators: Vec<Polynomial>,
        focussed: bool,
        weight_bound: usize,
    ) -> Result<Self, SpecError> {
        let invalid = |m: String| Err(SpecError::Invalid(m));
        if coords == 0 {
            return invalid("coords must be at least 1".into());
        }
        if weight_bound == 0 {
            return invalid("weightBound must be at least 1".into());
        }
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.is_zero() {
                return invalid("generators must be nonzero".into());
            }
            if let Some(v) = g.variables().into_iter().find(|v| v.level() != 0 || v.coord() > coords) {
                return invalid(format!("variable {v} in `{g}` is not one of x1_0..x{coords}_0"));
            }
            if focussed && !num_traits::Zero::is_zero(&g.constant_term()) {
                return Err(SpecError::NotThroughOrigin(g.to_string()));
            }
            gens.push(g.with_order(MonomialOrder::WeightRevLex));
        }
        Ok(IdealSpec {
            coords,
            generators: gens,
            focussed,
            weight_bound,
        })
    }

    /// `y^n = 0` in the affine line, focussed at the origin.
    pub fn nfold(n: u32, weight_bound: usize) -> Self {
        let g = Polynomial::term(
            num_traits::One::one(),
            Monomial::pow(VarId::y(0), n),
            MonomialOrder::WeightRevLex,
        );
        IdealSpec::new(1, vec![g], true, weight_bound).expect("valid by construction")
    }

    /// Affine `d`-space with no equations, focussed at the origin.
    pub fn affine(d: u32, weight_bound: usize) -> Self {
        IdealSpec::new(d, Vec::new(), true, weight_bound).expect("valid by construction")
    }

    pub fn from_json(text: &str) -> Result<Self, SpecError> {
        let raw: SpecJson = serde_json::from_str(text).map_err(|e| SpecError::Invalid(e.to_string()))?;
        let gens = raw
            .generators
            .iter()
            .map(|s| parse_polynomial(s))
            .collect::<Result<Vec<_>, _>>()?;
        IdealSpec::new(raw.coords, gens, raw.focussed, raw.weight_bound)
    }

    /// Canonical JSON: generators printed canonically, fields in fixed order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&SpecJson {
            coords: self.coords,
            generators: self.generators.iter().map(ToString::to_string).collect(),
            focussed: self.focussed,
            weight_bound: self.weight_bound,
        })
        .expect("spec serializes")
    }

    /// Hex SHA-256 of the canonical spec, the basis bound and the order tag.
    pub fn cache_key(&self, basis_bound: usize, order: MonomialOrder) -> String {
        let mut h = Sha256::new();
        h.update(self.to_json());
        h.update(format!("\n{basis_bound}\n{}", order.tag()));
        hex::encode(h.finalize())
    }

    pub fn coords(&self) -> u32 {
        self.coords
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn focussed(&self) -> bool {
        self.focussed
    }

    pub fn weight_bound(&self) -> usize {
        self.weight_bound
    }

    pub fn with_weight_bound(&self, weight_bound: usize) -> Self {
        IdealSpec {
            weight_bound,
            ..self.clone()
        }
    }
}

/// All `D^j(g)` of weight at most the spec's bound, one per base generator
/// and `j`. Under focussing, level-0 variables are set to zero and vanishing
/// results are dropped. Sorted by leading monomial (weight first).
pub fn jet_generators(spec: &IdealSpec) -> Vec<Polynomial> {
    let order = MonomialOrder::WeightRevLex;
    let mut out = Vec::new();
    for g in &spec.generators {
        let mut d = g.clone();
        for j in 0..=spec.weight_bound {
            if j > 0 {
                d = d.derive();
            }
            let p = if spec.focussed {
                d.substitute_level_zero()
            } else {
                d.clone()
            };
            if !p.is_zero() {
                out.push(p);
            }
        }
    }
    out.sort_by(|a, b| {
        order
            .compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
            .then_with(|| a.to_string().cmp(&b.to_string()))
    });
    out
}

fn check_focussed(spec: &IdealSpec, n: usize) -> Result<(), SpecError> {
    if !spec.focussed {
        return Err(SpecError::Invalid("the series pipeline needs a focussed spec".into()));
    }
    if n > spec.weight_bound {
        return Err(SpecError::BoundExceeded {
            requested: n,
            bound: spec.weight_bound,
        });
    }
    Ok(())
}

/// Truncated Gröbner basis of the focussed jet ideal with bound `n`.
pub fn focussed_basis(spec: &IdealSpec, n: usize, order: MonomialOrder) -> Result<TruncatedBasis, SpecError> {
    check_focussed(spec, n)?;
    let gens = jet_generators(&spec.with_weight_bound(n));
    Ok(buchberger_truncated(&gens, n, order)?)
}

/// `c_0..c_n` of the series from a basis: standard monomials of its
/// leading ideal over `x_j^{(i)}`, `1 ≤ j ≤ coords`, `1 ≤ i ≤ n`.
pub fn hp_from_basis(basis: &TruncatedBasis, coords: u32, n: usize) -> Result<TruncatedSeries, SpecError> {
    let mut weights = BTreeMap::new();
    for level in 1..=n as u32 {
        for c in 1..=coords {
            weights.insert(VarId::new(c, level), u64::from(level));
        }
    }
    Ok(standard_monomial_series(&basis.leading_ideal(), &weights, n)?)
}

/// The Hilbert–Poincaré series of the focussed arc algebra through `t^n`,
/// under the default order.
pub fn hp_focussed(spec: &IdealSpec, n: usize) -> Result<TruncatedSeries, SpecError> {
    hp_focussed_with_order(spec, n, MonomialOrder::WeightRevLex)
}

pub fn hp_focussed_with_order(spec: &IdealSpec, n: usize, order: MonomialOrder) -> Result<TruncatedSeries, SpecError> {
    let basis = focussed_basis(spec, n, order)?;
    hp_from_basis(&basis, spec.coords, n)
}

/// Reference series with known product formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormKind {
    /// `𝐇^d` for a smooth point on a `d`-dimensional scheme.
    Smooth(u32),
    /// Parts not congruent to `0, n, n+1` modulo `2n+1`.
    NFold(u32),
    /// `(1/(1−t))^3·(∏_{i≥2} 1/(1−t^i))^2`.
    RationalDoublePoint,
    /// A point on exactly `e` components of `y_1⋯y_{d+1} = 0`.
    NormalCrossings { d: u32, e: u32 },
    /// A canonical hypersurface singularity of multiplicity `n−1` in `A^n`.
    CanonicalMaxMult(u32),
}

impl ClosedFormKind {
    pub fn validate(self) -> Result<(), SpecError> {
        let bad = |m: &str| Err(SpecError::InvalidKind(m.to_string()));
        match self {
            ClosedFormKind::Smooth(d) if d < 1 => bad("Smooth needs d ≥ 1"),
            ClosedFormKind::NFold(n) if n < 2 => bad("NFold needs n ≥ 2"),
            ClosedFormKind::CanonicalMaxMult(n) if n < 2 => bad("CanonicalMaxMult needs n ≥ 2"),
            ClosedFormKind::NormalCrossings { d, e } if d < 1 || e < 1 || e > d + 1 => {
                bad("NormalCrossings needs d ≥ 1 and 1 ≤ e ≤ d+1")
            }
            _ => Ok(()),
        }
    }
}

/// `∏_{i ≤ n} (1/(1−t^i))^{mult(i)}`.
fn graded_product(mult: impl Fn(usize) -> u32, n: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(n);
    for i in 1..=n {
        for _ in 0..mult(i) {
            s = s.mul_geometric(i).expect("i ≥ 1");
        }
    }
    s
}

/// Exact truncation of the product formula for `kind`.
pub fn closed_form_hp(kind: ClosedFormKind, n: usize) -> Result<TruncatedSeries, SpecError> {
    kind.validate()?;
    Ok(match kind {
        ClosedFormKind::Smooth(d) => graded_product(|_| d, n),
        ClosedFormKind::NFold(k) => nfold_product(k as usize, n),
        ClosedFormKind::RationalDoublePoint => graded_product(|i| if i == 1 { 3 } else { 2 }, n),
        ClosedFormKind::NormalCrossings { d, e } => graded_product(|i| if i < e as usize { d + 1 } else { d }, n),
        ClosedFormKind::CanonicalMaxMult(k) => graded_product(|i| if i + 2 <= k as usize { k } else { k - 1 }, n),
    })
}

/// What [`multiplicity_probe`] read off a series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplicityReport {
    /// The largest `r` with `τ_{≤r−1}(s) = τ_{≤r−1}(𝐇^dim)`, or `None` when
    /// `s` agrees with `𝐇^dim` through its whole truncation.
    pub multiplicity: Option<usize>,
    /// Whether `τ_{≤r}(s) = τ_{≤r}(𝐇^dim) − t^r`.
    pub signature: bool,
}

/// Reads the multiplicity of a hypersurface point from its series.
pub fn multiplicity_probe(s: &TruncatedSeries, ambient_dim: u32) -> MultiplicityReport {
    let h = graded_product(|_| ambient_dim, s.truncation());
    match (0..=s.truncation()).find(|&i| s.coeff(i) != h.coeff(i)) {
        None => MultiplicityReport {
            multiplicity: None,
            signature: false,
        },
        Some(r) => MultiplicityReport {
            multiplicity: Some(r),
            signature: h.coeff(r) - s.coeff(r) == 1.into(),
        },
    }
}

/// Series of a product of schemes: the product of the series.
pub fn product_hp(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries, SpecError> {
    Ok(a.checked_mul(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::qseries::partition_series;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    fn s(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_i64s(c)
    }

    #[test]
    fn jet_generator_examples() {
        let spec = IdealSpec::new(2, vec![p("x1_0*x2_0")], true, 2).unwrap();
        assert_eq!(jet_generators(&spec), vec![p("2*x1_1*x2_1")]);
        let spec = IdealSpec::nfold(2, 4);
        assert_eq!(
            jet_generators(&spec),
            vec![p("2*y1^2"), p("6*y1*y2"), p("6*y2^2 + 8*y1*y3")]
        );
        let spec = IdealSpec::new(1, vec![p("x1_0")], true, 3).unwrap();
        assert_eq!(jet_generators(&spec), vec![p("y1"), p("y2"), p("y3")]);
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(
            IdealSpec::new(1, vec![p("y0 + 1")], true, 3),
            Err(SpecError::NotThroughOrigin(_))
        ));
        assert!(IdealSpec::new(1, vec![p("y0 + 1")], false, 3).is_ok());
        assert!(IdealSpec::new(1, vec![p("x2_0")], true, 3).is_err());
        assert!(IdealSpec::new(1, vec![p("y1")], true, 3).is_err());
        assert!(IdealSpec::new(0, vec![], true, 3).is_err());
        assert!(IdealSpec::from_json(r#"{"coords":1,"generators":["y0^"],"focussed":true,"weightBound":3}"#).is_err());
    }

    #[test]
    fn spec_json_and_key_are_canonical() {
        let a = IdealSpec::from_json(r#"{"coords":2,"generators":["x2_0 * x1_0"],"focussed":true,"weightBound":5}"#)
            .unwrap();
        let b =
            IdealSpec::from_json(r#"{"weightBound":5,"focussed":true,"generators":["x1_0*x2_0"],"coords":2}"#).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(
            a.cache_key(5, MonomialOrder::WeightRevLex),
            b.cache_key(5, MonomialOrder::WeightRevLex)
        );
        assert_ne!(
            a.cache_key(5, MonomialOrder::WeightRevLex),
            a.cache_key(5, MonomialOrder::WeightLex)
        );
        assert_ne!(
            a.cache_key(5, MonomialOrder::WeightRevLex),
            a.cache_key(4, MonomialOrder::WeightRevLex)
        );
        assert_eq!(a.cache_key(5, MonomialOrder::WeightRevLex).len(), 64);
    }

    #[test]
    fn pipeline_examples() {
        assert_eq!(
            hp_focussed(&IdealSpec::affine(1, 6), 6).unwrap(),
            s(&[1, 1, 2, 3, 5, 7, 11])
        );
        assert_eq!(
            hp_focussed(&IdealSpec::nfold(2, 9), 9).unwrap(),
            s(&[1, 1, 1, 1, 2, 2, 3, 3, 4, 5])
        );
        let nc = IdealSpec::new(3, vec![p("x1_0*x2_0*x3_0")], true, 6).unwrap();
        assert_eq!(
            hp_focussed(&nc, 6).unwrap(),
            closed_form_hp(ClosedFormKind::NormalCrossings { d: 2, e: 3 }, 6).unwrap()
        );
        assert!(matches!(
            hp_focussed(&IdealSpec::nfold(2, 5), 6),
            Err(SpecError::BoundExceeded { .. })
        ));
        let unfocussed = IdealSpec::new(1, vec![p("y0^2")], false, 4).unwrap();
        assert!(hp_focussed(&unfocussed, 3).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            closed_form_hp(ClosedFormKind::Smooth(1), 5).unwrap(),
            s(&[1, 1, 2, 3, 5, 7])
        );
        assert_eq!(
            closed_form_hp(ClosedFormKind::NFold(2), 9).unwrap(),
            s(&[1, 1, 1, 1, 2, 2, 3, 3, 4, 5])
        );
        assert_eq!(closed_form_hp(ClosedFormKind::RationalDoublePoint, 0).unwrap(), s(&[1]));
        assert_eq!(
            closed_form_hp(ClosedFormKind::RationalDoublePoint, 12).unwrap(),
            closed_form_hp(ClosedFormKind::CanonicalMaxMult(3), 12).unwrap()
        );
        assert_eq!(
            closed_form_hp(ClosedFormKind::NormalCrossings { d: 2, e: 1 }, 12).unwrap(),
            closed_form_hp(ClosedFormKind::Smooth(2), 12).unwrap()
        );
        assert!(closed_form_hp(ClosedFormKind::NormalCrossings { d: 1, e: 3 }, 4).is_err());
        assert!(closed_form_hp(ClosedFormKind::NFold(1), 4).is_err());
        assert!(closed_form_hp(ClosedFormKind::Smooth(0), 4).is_err());
    }

    #[test]
    fn probe_examples() {
        let s2 = hp_focussed(&IdealSpec::nfold(2, 6), 6).unwrap();
        assert_eq!(
            multiplicity_probe(&s2, 1),
            MultiplicityReport {
                multiplicity: Some(2),
                signature: true
            }
        );
        let h2 = closed_form_hp(ClosedFormKind::Smooth(2), 8).unwrap();
        assert_eq!(multiplicity_probe(&h2, 2).multiplicity, None);
        let cusp = IdealSpec::new(2, vec![p("x1_0^3 + x2_0^4")], true, 5).unwrap();
        let r = multiplicity_probe(&hp_focussed(&cusp, 5).unwrap(), 2);
        assert_eq!(
            r,
            MultiplicityReport {
                multiplicity: Some(3),
                signature: true
            }
        );
    }

    #[test]
    fn products_of_schemes() {
        let h = partition_series(10);
        assert_eq!(
            product_hp(&h, &h).unwrap(),
            closed_form_hp(ClosedFormKind::Smooth(2), 10).unwrap()
        );
        let dp = hp_focussed(&IdealSpec::nfold(2, 8), 8).unwrap();
        let with_line = IdealSpec::new(2, vec![p("x1_0^2")], true, 8).unwrap();
        assert_eq!(
            product_hp(&dp, &partition_series(8)).unwrap(),
            hp_focussed(&with_line, 8).unwrap()
        );
        assert_eq!(product_hp(&dp, &TruncatedSeries::one(8)).unwrap(), dp);
        assert!(product_hp(&dp, &TruncatedSeries::one(3)).is_err());
    }
}
