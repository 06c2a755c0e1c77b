//! Executable identity checks, grouped into named suites.
//!
//! Each suite returns one [`CriterionReport`] per numbered criterion. A
//! report passes when every exact check held and every budgeted timing
//! stayed within its budget. The CLI `verify` command and the acceptance
//! test target both run these.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arc_ideals::{
    big_f_closed_form, closed_form_hp, f_generator, hp_focussed, hp_focussed_with_order, leading_term_closed_form,
    multiplicity_probe, ClosedFormKind, IdealSpec,
};
use crate::groebner::{buchberger_truncated, divide, s_polynomial, MonomialIdeal, TruncatedBasis};
use crate::partitions::{
    count_by_enumeration, count_gordon, count_residues, gordon_check, standard_monomial_series, PartitionConstraint,
};
use crate::poly::{parse_polynomial, Monomial, MonomialOrder, Polynomial, Rational, VarId};
use crate::qseries::{
    andrews_baxter, double_point_tail_ideal, h_series, nfold_product, restricted_product, rr_sum_side, TruncatedSeries,
};

/// Randomized cases per property in the `properties` suite.
pub const PROPERTY_CASES: usize = 200;

const PROPERTY_SEED: u64 = 0x5eed_2024;
const MAX_RECORDED_FAILURES: usize = 20;

/// A named group of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    NFold,
    Gordon,
    RogersRamanujan,
    AndrewsBaxter,
    Recursion,
    Bell,
    LeadingTerms,
    Geometry,
    Order,
    Properties,
    All,
}

impl Suite {
    /// Every individual suite, in criterion order.
    pub const EACH: [Suite; 10] = [
        Suite::NFold,
        Suite::Gordon,
        Suite::RogersRamanujan,
        Suite::AndrewsBaxter,
        Suite::Recursion,
        Suite::Bell,
        Suite::LeadingTerms,
        Suite::Geometry,
        Suite::Order,
        Suite::Properties,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::NFold => "nfold",
            Suite::Gordon => "gordon",
            Suite::RogersRamanujan => "rogers-ramanujan",
            Suite::AndrewsBaxter => "andrews-baxter",
            Suite::Recursion => "recursion",
            Suite::Bell => "bell",
            Suite::LeadingTerms => "leading-terms",
            Suite::Geometry => "geometry",
            Suite::Order => "order",
            Suite::Properties => "properties",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::EACH.iter().map(|s| s.name()).collect();
                format!("unknown suite `{s}` (expected one of {}, all)", names.join(", "))
            })
    }
}

/// Wall-clock time of one labelled step, with its budget if it has one.
#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub label: String,
    #[serde(rename = "elapsedMs")]
    pub elapsed_ms: f64,
    #[serde(rename = "budgetMs")]
    pub budget_ms: Option<f64>,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub budget: Option<Duration>,
}

impl Timing {
    pub fn within_budget(&self) -> bool {
        self.budget.is_none_or(|b| self.elapsed < b)
    }
}

/// Outcome of one numbered criterion.
#[derive(Debug, Clone, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub suite: &'static str,
    pub passed: bool,
    pub checks: usize,
    #[serde(rename = "failureCount")]
    pub failure_count: usize,
    /// The first few failures, as human-readable lines.
    pub failures: Vec<String>,
    pub timings: Vec<Timing>,
    #[serde(rename = "elapsedMs")]
    pub elapsed_ms: f64,
}

impl CriterionReport {
    /// The timing recorded under `label`.
    pub fn timing(&self, label: &str) -> Option<&Timing> {
        self.timings.iter().find(|t| t.label == label)
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] criterion {:>2} {:<17} {} checks, {:.1} ms",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.suite,
            self.checks,
            self.elapsed_ms
        )?;
        for t in self.timings.iter().filter(|t| !t.within_budget()) {
            write!(f, "\n    over budget: {} took {:.1} ms", t.label, t.elapsed_ms)?;
        }
        for line in &self.failures {
            write!(f, "\n    {line}")?;
        }
        if self.failure_count > self.failures.len() {
            write!(f, "\n    ... {} more", self.failure_count - self.failures.len())?;
        }
        Ok(())
    }
}

struct Run {
    id: u8,
    suite: Suite,
    start: Instant,
    checks: usize,
    failure_count: usize,
    failures: Vec<String>,
    timings: Vec<Timing>,
}

impl Run {
    fn new(suite: Suite) -> Self {
        let id = Suite::EACH.iter().position(|&s| s == suite).expect("individual suite") as u8 + 1;
        Run {
            id,
            suite,
            start: Instant::now(),
            checks: 0,
            failure_count: 0,
            failures: Vec::new(),
            timings: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, what: impl fmt::Display, got: &T, want: &T) {
        self.check(got == want, || format!("{what}: got {got}, expected {want}"));
    }

    fn timed<T>(&mut self, label: impl Into<String>, budget: Option<Duration>, f: impl FnOnce(&mut Self) -> T) -> T {
        let t = Instant::now();
        let out = f(self);
        let elapsed = t.elapsed();
        self.timings.push(Timing {
            label: label.into(),
            elapsed_ms: elapsed.as_secs_f64() * 1e3,
            budget_ms: budget.map(|b| b.as_secs_f64() * 1e3),
            elapsed,
            budget,
        });
        out
    }

    fn finish(self) -> CriterionReport {
        let within = self.timings.iter().all(Timing::within_budget);
        CriterionReport {
            id: self.id,
            suite: self.suite.name(),
            passed: self.failure_count == 0 && within,
            checks: self.checks,
            failure_count: self.failure_count,
            failures: self.failures,
            timings: self.timings,
            elapsed_ms: self.start.elapsed().as_secs_f64() * 1e3,
        }
    }
}

/// Runs one suite, or all of them for [`Suite::All`].
pub fn run_suite(suite: Suite) -> Vec<CriterionReport> {
    match suite {
        Suite::All => Suite::EACH.into_iter().map(run_criterion).collect(),
        s => vec![run_criterion(s)],
    }
}

fn run_criterion(suite: Suite) -> CriterionReport {
    match suite {
        Suite::NFold => nfold(),
        Suite::Gordon => gordon(),
        Suite::RogersRamanujan => rogers_ramanujan(),
        Suite::AndrewsBaxter => andrews_baxter_suite(),
        Suite::Recursion => recursion(),
        Suite::Bell => bell_duality(),
        Suite::LeadingTerms => leading_terms(),
        Suite::Geometry => geometry(),
        Suite::Order => order_independence(),
        Suite::Properties => properties(),
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn series_line(s: &TruncatedSeries) -> String {
    s.to_string()
}

/// The leading ideal `(lt(f_i) : n ≤ i ≤ top)` predicted by the closed form.
pub fn nfold_leading_ideal(n: u32, top: u32) -> MonomialIdeal {
    MonomialIdeal::new((n..=top).map(|i| leading_term_closed_form(n, i).monomial))
}

fn y_weights(top: u32) -> BTreeMap<VarId, u64> {
    (1..=top).map(|i| (VarId::y(i), u64::from(i))).collect()
}

fn nfold() -> CriterionReport {
    let mut run = Run::new(Suite::NFold);
    const N_GROEBNER: usize = 12;
    const N_COMBINATORIAL: usize = 300;
    for n in 2..=6u32 {
        run.timed(format!("groebner n={n}"), secs(60), |run| {
            let want = closed_form_hp(ClosedFormKind::NFold(n), N_GROEBNER).expect("n ≥ 2");
            match hp_focussed(&IdealSpec::nfold(n, N_GROEBNER), N_GROEBNER) {
                Ok(got) => run.check(got == want, || {
                    format!("groebner n={n}: {} != {}", series_line(&got), series_line(&want))
                }),
                Err(e) => run.check(false, || format!("groebner n={n}: {e}")),
            }
        });
    }
    run.timed("combinatorial", secs(5), |run| {
        let weights = y_weights(N_COMBINATORIAL as u32);
        for n in 2..=6u32 {
            let ideal = nfold_leading_ideal(n, N_COMBINATORIAL as u32);
            let want = nfold_product(n as usize, N_COMBINATORIAL);
            match standard_monomial_series(&ideal, &weights, N_COMBINATORIAL) {
                Ok(got) => run.check(got == want, || {
                    let m = (0..=N_COMBINATORIAL)
                        .find(|&m| got.coeff(m) != want.coeff(m))
                        .unwrap_or(0);
                    format!("combinatorial n={n}: first difference at t^{m}")
                }),
                Err(e) => run.check(false, || format!("combinatorial n={n}: {e}")),
            }
        }
    });
    run.finish()
}

fn gordon() -> CriterionReport {
    let mut run = Run::new(Suite::Gordon);
    run.timed("gordon_check k=2..8 M=500", secs(10), |run| {
        for k in 2..=8 {
            let r = gordon_check(k, 500);
            run.check(r.ok, || {
                format!("gordon k={k}: first failure at m={:?}", r.first_failure)
            });
        }
    });
    run.timed("brute force m<=60", None, |run| {
        for k in 2..=8u32 {
            let gap = PartitionConstraint::GordonGap(k);
            let window = PartitionConstraint::MultiplicityWindow(k);
            let residues = PartitionConstraint::gordon_residues(k);
            let excluded: BTreeSet<u32> = [0, k, k + 1].into();
            for m in 0..=60 {
                let by_gap = BigInt::from(count_by_enumeration(m, &gap).expect("m ≤ 60"));
                let by_window = BigInt::from(count_by_enumeration(m, &window).expect("m ≤ 60"));
                let by_residue = BigInt::from(count_by_enumeration(m, &residues).expect("m ≤ 60"));
                run.eq(
                    format_args!("gap enumeration vs DP k={k} m={m}"),
                    &by_gap,
                    &count_gordon(m, k),
                );
                run.eq(
                    format_args!("window vs gap enumeration k={k} m={m}"),
                    &by_window,
                    &by_gap,
                );
                run.eq(
                    format_args!("residue enumeration vs product k={k} m={m}"),
                    &by_residue,
                    &count_residues(m, 2 * k + 1, &excluded),
                );
            }
        }
    });
    run.finish()
}

fn rr_residues(i: usize) -> bool {
    i % 5 == 1 || i % 5 == 4
}

fn rogers_ramanujan() -> CriterionReport {
    let mut run = Run::new(Suite::RogersRamanujan);
    run.timed("sum side vs product N=500", None, |run| {
        let got = rr_sum_side(500);
        let want = restricted_product(rr_residues, 500);
        run.check(got == want, || {
            "rr_sum_side(500) differs from the 1,4 mod 5 product".into()
        });
    });
    run.finish()
}

fn andrews_baxter_suite() -> CriterionReport {
    let mut run = Run::new(Suite::AndrewsBaxter);
    const D_MAX: usize = 60;
    const N: usize = 50;
    let ab = match andrews_baxter(D_MAX, N) {
        Ok(ab) => ab,
        Err(e) => {
            run.check(false, || format!("andrews_baxter({D_MAX}, {N}): {e}"));
            return run.finish();
        }
    };
    run.check(ab.converged, || format!("not converged at d_max={D_MAX}, N={N}"));
    let product = restricted_product(rr_residues, N);
    run.check(ab.limit.as_ref() == Some(&product), || {
        "limit differs from the 1,4 mod 5 product".into()
    });
    for d in 2..=D_MAX {
        let ok = ab.b(d).order().is_none_or(|o| o + 2 >= d);
        run.check(ok, || format!("ord(B_{d}) = {:?} < {}", ab.b(d).order(), d - 2));
    }
    run.check(ab.order_bound_holds, || "order_bound_holds is false".into());
    let poly = |c: &[i64]| {
        let mut v = vec![0i64; N + 1];
        v[..c.len()].copy_from_slice(c);
        TruncatedSeries::from_i64s(&v)
    };
    run.eq("A_3", ab.a(3), &poly(&[1, 1]));
    run.eq("A_4", ab.a(4), &poly(&[1, 1, 1]));
    run.finish()
}

fn recursion() -> CriterionReport {
    let mut run = Run::new(Suite::Recursion);
    const N: usize = 100;
    let h: Vec<TruncatedSeries> = run.timed("h(d) d=1..22 N=100", None, |_| {
        (1..=22u32).map(|d| h_series(d, N)).collect()
    });
    let h = |d: usize| &h[d - 1];
    for d in 1..=20usize {
        let rhs = h(d + 1) + &h(d + 2).shift(d);
        run.check(h(d) == &rhs, || format!("h({d}) != h({}) + t^{d}·h({})", d + 1, d + 2));
    }

    let ab = andrews_baxter(16, N).expect("d_max ≥ 2");
    for d in 2..=15usize {
        let rhs = &(ab.a(d) * h(d)) + &(ab.b(d + 1) * h(d + 1));
        run.check(h(1) == &rhs, || {
            format!("h(1) != A_{d}·h({d}) + B_{}·h({})", d + 1, d + 1)
        });
    }

    const TOP: u32 = 30;
    let y = |i: u32| Monomial::var(VarId::y(i));
    for d in 1..=10u32 {
        let i_d = double_point_tail_ideal(d, TOP);
        let lhs = i_d.sum(&y(d));
        let rhs = double_point_tail_ideal(d + 1, TOP).sum(&y(d));
        run.eq(format_args!("(I_{d}, y_{d})"), &lhs, &rhs);
        let lhs = i_d.colon(&y(d));
        let rhs = double_point_tail_ideal(d + 2, TOP).sum(&y(d)).sum(&y(d + 1));
        run.eq(format_args!("(I_{d} : y_{d})"), &lhs, &rhs);
    }
    run.finish()
}

/// The `n = 4` list `F_0..F_7`, transcribed term by term.
pub const PRINTED_F_N4: [&str; 8] = [
    "y0^4",
    "4*y0^3*y1",
    "12*y0^2*y1^2 + 4*y0^3*y2",
    "24*y0*y1^3 + 36*y0^2*y1*y2 + 4*y0^3*y3",
    "24*y1^4 + 144*y0*y1^2*y2 + 36*y0^2*y2^2 + 48*y0^2*y1*y3 + 4*y0^3*y4",
    "240*y1^3*y2 + 360*y0*y1*y2^2 + 240*y0*y1^2*y3 + 120*y0^2*y2*y3 + 60*y0^2*y1*y4 + 4*y0^3*y5",
    "1080*y1^2*y2^2 + 360*y0*y2^3 + 480*y1^3*y3 + 1440*y0*y1*y2*y3 + 120*y0^2*y3^2 \
     + 360*y0*y1^2*y4 + 180*y0^2*y2*y4 + 72*y0^2*y1*y5 + 4*y0^3*y6",
    "2520*y1*y2^3 + 5040*y1^2*y2*y3 + 2520*y0*y2^2*y3 + 1680*y0*y1*y3^2 + 840*y1^3*y4 \
     + 2520*y0*y1*y2*y4 + 420*y0^2*y3*y4 + 504*y0*y1^2*y5 + 252*y0^2*y2*y5 + 84*y0^2*y1*y6 + 4*y0^3*y7",
];

/// `F_0, …, F_upto` by iterating the derivation, with no cross-check.
fn derived_f(n: u32, upto: u32) -> Vec<Polynomial> {
    let mut f = Polynomial::term(
        Rational::one(),
        Monomial::pow(VarId::y(0), n),
        MonomialOrder::WeightRevLex,
    );
    let mut out = vec![f.clone()];
    for _ in 0..upto {
        f = f.derive();
        out.push(f.clone());
    }
    out
}

fn bell_duality() -> CriterionReport {
    let mut run = Run::new(Suite::Bell);
    for n in 1..=6u32 {
        for (i, f) in derived_f(n, 20).into_iter().enumerate() {
            run.eq(format_args!("F_{i} n={n}"), &f, &big_f_closed_form(n, i as u32));
        }
        for i in 0..n {
            let f = f_generator(n, i);
            run.check(f.is_zero(), || format!("f_{i} = {f} for n={n}"));
        }
    }
    let computed = derived_f(4, 7);
    for (i, text) in PRINTED_F_N4.iter().enumerate() {
        match parse_polynomial(text) {
            Ok(printed) => {
                run.eq(format_args!("F_{i} n=4"), &computed[i], &printed);
                run.eq(
                    format_args!("F_{i} n=4 canonical"),
                    &computed[i].to_string(),
                    &printed.to_string(),
                );
            }
            Err(e) => run.check(false, || format!("F_{i} transcription: {e}")),
        }
    }
    run.finish()
}

/// The leading monomial of `S(f_{qn+r}, f_{qn+r+1})` for `q ≥ 1`, or `None`
/// when the S-polynomial vanishes (`q = 1, r = 0`).
pub fn consecutive_lm(n: u32, q: u32, r: u32) -> Option<Monomial> {
    let m = |parts: &[(u32, u32)]| {
        Monomial::from_exponents(parts.iter().filter(|p| p.1 > 0).map(|&(i, e)| (VarId::y(i), e)))
    };
    match (q >= 2, r == n - 1) {
        (true, false) => Some(m(&[(q - 1, 1), (q, n - r - 2), (q + 1, r + 2)])),
        (true, true) => Some(m(&[(q, 2), (q + 1, n - 2), (q + 2, 1)])),
        (false, _) if r != 0 => Some(m(&[(1, n - r + 1), (2, r - 1), (3, 1)])),
        (false, _) => None,
    }
}

/// The leading monomial of `S(f_{qn+r}, f_{(q+1)n+n−r})`, `q ≥ 1`, `1 ≤ r < n`.
pub fn difficult_lm(n: u32, q: u32, r: u32) -> Monomial {
    let m = |parts: &[(u32, u32)]| {
        Monomial::from_exponents(parts.iter().filter(|p| p.1 > 0).map(|&(i, e)| (VarId::y(i), e)))
    };
    match (q >= 2, r == n - 1) {
        (true, false) => m(&[(q - 1, 1), (q, n - r - 2), (q + 1, r + 1), (q + 2, n - r)]),
        (true, true) => m(&[(q - 1, 1), (q + 1, n - 2), (q + 2, 2)]),
        (false, false) => m(&[(1, n - r), (2, r + 1), (3, n - r - 2), (4, 1)]),
        (false, true) => m(&[(1, 2), (2, n - 2), (4, 1)]),
    }
}

fn leading_terms() -> CriterionReport {
    let mut run = Run::new(Suite::LeadingTerms);
    for n in 1..=6u32 {
        for (i, big) in derived_f(n, 40).into_iter().enumerate() {
            let i = i as u32;
            let want = leading_term_closed_form(n, i);
            let got = big.leading_term().ok().cloned();
            run.check(got.as_ref() == Some(&want), || {
                format!("lt(F_{i}) n={n}: got {got:?}, expected {want:?}")
            });
            if i >= n {
                let f = f_generator(n, i);
                let got = f.leading_term().ok().cloned();
                run.check(got.as_ref() == Some(&want), || {
                    format!("lt(f_{i}) n={n}: got {got:?}, expected {want:?}")
                });
            }
        }
    }
    let s_lm = |a: u32, b: u32, n: u32| {
        s_polynomial(&f_generator(n, a), &f_generator(n, b)).map(|s| s.leading_monomial().cloned())
    };
    for n in 2..=5u32 {
        for q in 1..=3u32 {
            for r in 0..n {
                let got = s_lm(q * n + r, q * n + r + 1, n);
                let want = consecutive_lm(n, q, r);
                run.check(got.as_ref().ok() == Some(&want), || {
                    format!(
                        "lm S(f_{}, f_{}) n={n}: got {got:?}, expected {want:?}",
                        q * n + r,
                        q * n + r + 1
                    )
                });
            }
            for r in 1..n {
                let (a, b) = (q * n + r, (q + 1) * n + n - r);
                let got = s_lm(a, b, n);
                let want = Some(difficult_lm(n, q, r));
                run.check(got.as_ref().ok() == Some(&want), || {
                    format!("lm S(f_{a}, f_{b}) n={n}: got {got:?}, expected {want:?}")
                });
            }
        }
    }
    run.finish()
}

fn geometry() -> CriterionReport {
    let mut run = Run::new(Suite::Geometry);
    const N: usize = 8;
    let compare = |run: &mut Run, label: &str, coords: u32, gens: &[&str], kind: ClosedFormKind| {
        run.timed(label, secs(120), |run| {
            let gens: Vec<Polynomial> = gens.iter().map(|g| parse_polynomial(g).expect("fixed input")).collect();
            let got = IdealSpec::new(coords, gens, true, N).and_then(|s| hp_focussed(&s, N));
            let want = closed_form_hp(kind, N).expect("valid kind");
            match got {
                Ok(got) => run.check(got == want, || {
                    format!("{label}: {} != {}", series_line(&got), series_line(&want))
                }),
                Err(e) => run.check(false, || format!("{label}: {e}")),
            }
        });
    };
    compare(
        &mut run,
        "rational double point",
        3,
        &["x1_0*x2_0 - x3_0^2"],
        ClosedFormKind::RationalDoublePoint,
    );
    compare(
        &mut run,
        "normal crossings",
        3,
        &["x1_0*x2_0*x3_0"],
        ClosedFormKind::NormalCrossings { d: 2, e: 3 },
    );
    for d in 1..=3u32 {
        compare(&mut run, &format!("smooth A^{d}"), d, &[], ClosedFormKind::Smooth(d));
    }
    run.timed("multiplicity x^3 + y^4", secs(120), |run| {
        let g = parse_polynomial("x1_0^3 + x2_0^4").expect("fixed input");
        match IdealSpec::new(2, vec![g], true, N).and_then(|s| hp_focussed(&s, N)) {
            Ok(s) => {
                let report = multiplicity_probe(&s, 2);
                run.eq(
                    "multiplicity",
                    &format!("{:?}", report.multiplicity),
                    &format!("{:?}", Some(3)),
                );
                run.check(report.signature, || "missing −t^3 signature".into());
            }
            Err(e) => run.check(false, || format!("multiplicity probe: {e}")),
        }
    });
    run.finish()
}

fn order_independence() -> CriterionReport {
    let mut run = Run::new(Suite::Order);
    const N: usize = 10;
    let spec = IdealSpec::nfold(2, N);
    let a = hp_focussed_with_order(&spec, N, MonomialOrder::WeightRevLex);
    let b = hp_focussed_with_order(&spec, N, MonomialOrder::WeightLex);
    match (a, b) {
        (Ok(a), Ok(b)) => run.eq("n=2 series under WeightRevLex vs WeightLex", &a, &b),
        (a, b) => run.check(false, || format!("series failed: {:?} / {:?}", a.err(), b.err())),
    }
    // The two orders must genuinely differ: y1·y4 and y2·y3 share weight 5.
    let p = |s: &str| {
        parse_polynomial(s)
            .expect("fixed input")
            .leading_monomial()
            .cloned()
            .unwrap()
    };
    let (u, v) = (p("y1*y4"), p("y2*y3"));
    let differs = MonomialOrder::WeightRevLex.compare(&u, &v) != MonomialOrder::WeightLex.compare(&u, &v);
    run.check(differs, || "the two orders agree on y1*y4 vs y2*y3".into());
    run.finish()
}

fn random_monomial(rng: &mut ChaCha8Rng, weight: u32) -> Monomial {
    let mut exps = Vec::new();
    let mut w = 0;
    for _ in 0..rng.gen_range(1..5) {
        let (c, l) = (rng.gen_range(1..=2), rng.gen_range(1..=4));
        if w + l <= weight {
            exps.push((VarId::new(c, l), 1));
            w += l;
        }
    }
    if w < weight {
        exps.push((VarId::new(1, 1), weight - w));
    }
    Monomial::from_exponents(exps)
}

/// A weight-homogeneous polynomial with small integer coefficients over
/// `x1`, `x2` at levels `1..=4`.
fn random_homogeneous(rng: &mut ChaCha8Rng, weight: u32) -> Polynomial {
    let terms: Vec<(Rational, Monomial)> = (0..rng.gen_range(1..5))
        .map(|_| {
            (
                Rational::from_integer(rng.gen_range(-4i64..=4).into()),
                random_monomial(rng, weight),
            )
        })
        .collect();
    Polynomial::from_terms(MonomialOrder::WeightRevLex, terms)
}

/// An arbitrary polynomial with rational coefficients, level-0 variables
/// included.
fn random_polynomial(rng: &mut ChaCha8Rng) -> Polynomial {
    let terms: Vec<(Rational, Monomial)> = (0..rng.gen_range(0..6))
        .map(|_| {
            let c = Rational::new(rng.gen_range(-20i64..=20).into(), rng.gen_range(1i64..=6).into());
            let m = Monomial::from_exponents((0..rng.gen_range(0..4)).map(|_| {
                (
                    VarId::new(rng.gen_range(1..=3), rng.gen_range(0..=4)),
                    rng.gen_range(1..=3),
                )
            }));
            (c, m)
        })
        .collect();
    Polynomial::from_terms(MonomialOrder::WeightRevLex, terms)
}

/// Checks `f = Σ q_i·g_i + r`, `lm(q_i·g_i) ≤ lm(f)` and that no term of
/// `r` is divisible by a leading monomial.
pub fn division_contract_holds(f: &Polynomial, divisors: &[Polynomial]) -> Result<(), String> {
    let (q, r) = divide(f, divisors).map_err(|e| e.to_string())?;
    let mut total = r.clone();
    for (qi, gi) in q.iter().zip(divisors) {
        let prod = qi * gi;
        if let (Some(a), Some(b)) = (prod.leading_monomial(), f.leading_monomial()) {
            if f.order().compare(a, b).is_gt() {
                return Err(format!("lm({qi} · {gi}) exceeds lm({f})"));
            }
        }
        total = &total + &prod;
    }
    if total != *f {
        return Err(format!("quotients and remainder reassemble to {total}, not {f}"));
    }
    if let Some(t) = r.terms().iter().find(|t| {
        divisors
            .iter()
            .any(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&t.monomial)))
    }) {
        return Err(format!(
            "remainder term {} is divisible by a leading monomial",
            t.monomial
        ));
    }
    Ok(())
}

/// Checks that every input of weight within the bound reduces to zero and
/// that every S-polynomial with lcm weight within the bound does too.
pub fn buchberger_criterion_holds(basis: &TruncatedBasis, inputs: &[Polynomial]) -> Result<(), String> {
    let g = basis.elements();
    let bound = basis.weight_bound() as u64;
    for p in inputs
        .iter()
        .filter(|p| p.homogeneous_weight().is_some_and(|w| w <= bound))
    {
        let (_, r) = divide(p, g).map_err(|e| e.to_string())?;
        if !r.is_zero() {
            return Err(format!("input {p} leaves remainder {r}"));
        }
    }
    for (i, a) in g.iter().enumerate() {
        for b in &g[i + 1..] {
            let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
            if la.lcm(lb).weight() > bound {
                continue;
            }
            let s = s_polynomial(a, b).map_err(|e| e.to_string())?;
            let (_, r) = divide(&s, g).map_err(|e| e.to_string())?;
            if !r.is_zero() {
                return Err(format!("S({a}, {b}) leaves remainder {r}"));
            }
        }
    }
    Ok(())
}

fn properties() -> CriterionReport {
    let mut run = Run::new(Suite::Properties);
    let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED);

    run.timed("division reassembly", None, |run| {
        for case in 0..PROPERTY_CASES {
            let f = random_homogeneous(&mut rng, 6);
            let divisors: Vec<Polynomial> = (0..rng.gen_range(1..4))
                .map(|_| {
                    let w = rng.gen_range(2..=4);
                    random_homogeneous(&mut rng, w)
                })
                .collect();
            let outcome = division_contract_holds(&f, &divisors);
            run.check(outcome.is_ok(), || {
                format!("division case {case}: {}", outcome.unwrap_err())
            });
        }
    });

    run.timed("buchberger criterion", None, |run| {
        for case in 0..PROPERTY_CASES {
            let gens: Vec<Polynomial> = (0..rng.gen_range(1..4))
                .map(|_| {
                    let w = rng.gen_range(2..=5);
                    random_homogeneous(&mut rng, w)
                })
                .collect();
            let outcome = buchberger_truncated(&gens, 7, MonomialOrder::WeightRevLex)
                .map_err(|e| e.to_string())
                .and_then(|b| buchberger_criterion_holds(&b, &gens));
            run.check(outcome.is_ok(), || {
                format!("buchberger case {case}: {}", outcome.unwrap_err())
            });
        }
    });

    run.timed("leibniz", None, |run| {
        for case in 0..PROPERTY_CASES {
            let (a, b) = (random_polynomial(&mut rng), random_polynomial(&mut rng));
            let lhs = (&a * &b).derive();
            let rhs = &(&a.derive() * &b) + &(&a * &b.derive());
            run.check(lhs == rhs, || format!("leibniz case {case}: D(({a})·({b}))"));
        }
    });

    run.timed("parse round trip", None, |run| {
        for case in 0..PROPERTY_CASES {
            let p = random_polynomial(&mut rng);
            let printed = p.to_string();
            let ok = parse_polynomial(&printed).is_ok_and(|back| back == p && back.to_string() == printed);
            run.check(ok, || format!("round trip case {case}: {printed}"));
        }
    });
    run.finish()
}
