use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use arcseries::arc_ideals::{bell, focussed_basis, hp_from_basis, ClosedFormKind, IdealSpec};
use arcseries::groebner::TruncatedBasis;
use arcseries::partitions::{gordon_check, standard_monomial_series};
use arcseries::poly::{MonomialOrder, VarId};
use arcseries::qseries::{andrews_baxter, nfold_product, restricted_product, TruncatedSeries};
use arcseries::verify::{nfold_leading_ideal, run_suite, Suite};
use serde_json::json;

use crate::render;
use crate::{Cli, Command, Failure, Format, Method};

pub fn run(cli: &Cli) -> Result<String, Failure> {
    let cache = cli.cache_dir.as_deref();
    let format = cli.format;
    match &cli.command {
        Command::Nfold {
            n,
            trunc,
            method,
            verify,
        } => nfold(*n, *trunc, *method, *verify, cache, format),
        Command::Hp {
            spec,
            trunc,
            weight_bound,
            order,
        } => {
            let spec = load_spec(spec, *weight_bound)?;
            let n = trunc.unwrap_or(spec.weight_bound());
            if n > spec.weight_bound() {
                return Err(Failure::Usage(format!(
                    "--trunc {n} exceeds the weight bound {}",
                    spec.weight_bound()
                )));
            }
            let basis = cached_basis(&spec, n, (*order).into(), cache)?;
            let s = hp_from_basis(&basis, spec.coords(), n).map_err(Failure::usage)?;
            Ok(render::series(&s, format))
        }
        Command::Gordon { k, trunc } => gordon(*k, *trunc, format),
        Command::Recursion { d_max, trunc, verify } => recursion(*d_max, *trunc, *verify, format),
        Command::Bell { i, j } => {
            let p = bell(*i, *j).to_string();
            Ok(match format {
                Format::Text => format!("{p}\n"),
                Format::Json => render::json(&json!({ "i": i, "j": j, "polynomial": p })),
                Format::Csv => render::csv(&["i", "j", "polynomial"], &[vec![i.to_string(), j.to_string(), p]]),
            })
        }
        Command::Groebner {
            spec,
            weight_bound,
            order,
        } => {
            let spec = load_spec(spec, *weight_bound)?;
            let order: MonomialOrder = (*order).into();
            let bound = spec.weight_bound();
            let basis = cached_basis(&spec, bound, order, cache)?;
            let elements: Vec<String> = basis.elements().iter().map(ToString::to_string).collect();
            Ok(match format {
                Format::Text => elements.iter().map(|e| format!("{e}\n")).collect(),
                Format::Json => format!("{}\n", basis.to_cache_json(&basis_key(&spec, bound, order))),
                Format::Csv => render::csv(
                    &["index", "element"],
                    &elements
                        .into_iter()
                        .enumerate()
                        .map(|(i, e)| vec![i.to_string(), e])
                        .collect::<Vec<_>>(),
                ),
            })
        }
        Command::Verify { suite } => verify(suite, format),
    }
}

fn load_spec(path: &Path, weight_bound: Option<usize>) -> Result<IdealSpec, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let spec = IdealSpec::from_json(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    match weight_bound {
        Some(0) => Err(Failure::Usage("--weight-bound must be at least 1".into())),
        Some(b) => Ok(spec.with_weight_bound(b)),
        None => Ok(spec),
    }
}

/// The cache key of the basis with bound `bound`, independent of the bound
/// stored in the spec file.
fn basis_key(spec: &IdealSpec, bound: usize, order: MonomialOrder) -> String {
    spec.with_weight_bound(bound).cache_key(bound, order)
}

/// The truncated basis, read from `cache` when present and written there
/// after a fresh computation.
fn cached_basis(
    spec: &IdealSpec,
    bound: usize,
    order: MonomialOrder,
    cache: Option<&Path>,
) -> Result<TruncatedBasis, Failure> {
    let Some(dir) = cache else {
        return focussed_basis(spec, bound, order).map_err(Failure::usage);
    };
    let key = basis_key(spec, bound, order);
    let path = dir.join(format!("{key}.json"));
    if path.exists() {
        let text = fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let (hash, basis) =
            TruncatedBasis::from_cache_json(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        if hash != key || basis.weight_bound() != bound || basis.order() != order {
            return Err(Failure::Usage(format!(
                "{}: cache entry does not match its key",
                path.display()
            )));
        }
        return Ok(basis);
    }
    let basis = focussed_basis(spec, bound, order).map_err(Failure::usage)?;
    fs::create_dir_all(dir).map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?;
    fs::write(&path, basis.to_cache_json(&key)).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(basis)
}

fn nfold_route(n: u32, trunc: usize, method: Method, cache: Option<&Path>) -> Result<TruncatedSeries, Failure> {
    match method {
        Method::Product => Ok(nfold_product(n as usize, trunc)),
        Method::Combinatorial => {
            let weights: BTreeMap<VarId, u64> = (1..=trunc as u32).map(|i| (VarId::y(i), u64::from(i))).collect();
            let ideal = nfold_leading_ideal(n, (trunc as u32).max(n));
            standard_monomial_series(&ideal, &weights, trunc).map_err(Failure::usage)
        }
        Method::Groebner => {
            // A spec needs a positive bound; N = 0 is answered by truncating.
            let bound = trunc.max(1);
            let spec = IdealSpec::nfold(n, bound);
            let basis = cached_basis(&spec, bound, MonomialOrder::WeightRevLex, cache)?;
            let s = hp_from_basis(&basis, 1, bound).map_err(Failure::usage)?;
            Ok(s.truncate(trunc))
        }
    }
}

fn nfold(
    n: u32,
    trunc: usize,
    method: Method,
    verify: bool,
    cache: Option<&Path>,
    format: Format,
) -> Result<String, Failure> {
    ClosedFormKind::NFold(n).validate().map_err(Failure::usage)?;
    if !verify {
        return Ok(render::series(&nfold_route(n, trunc, method, cache)?, format));
    }
    let routes = [Method::Groebner, Method::Combinatorial, Method::Product];
    let results = routes
        .iter()
        .map(|&m| nfold_route(n, trunc, m, cache))
        .collect::<Result<Vec<_>, _>>()?;
    let reference = &results[routes.iter().position(|&m| m == method).expect("listed")];
    if results.iter().all(|s| s == reference) {
        return Ok(render::series(reference, format));
    }
    let first = (0..=trunc)
        .find(|&i| results.iter().any(|s| s.coeff(i) != reference.coeff(i)))
        .expect("some coefficient differs");
    let mut out = format!("routes disagree for n={n}, first at t^{first}\n");
    for (m, s) in routes.iter().zip(&results) {
        out.push_str(&format!("{:<14} {s}\n", format!("{m:?}").to_lowercase()));
    }
    Err(Failure::Verification(out))
}

fn gordon(k: u32, max_n: usize, format: Format) -> Result<String, Failure> {
    if k < 2 {
        return Err(Failure::Usage(format!("k = {k} must be at least 2")));
    }
    let report = gordon_check(k, max_n);
    let out = match format {
        Format::Text => match report.first_failure {
            None => format!("k={k} maxN={max_n} ok\n"),
            Some(m) => format!("k={k} maxN={max_n} failed at m={m}\n"),
        },
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&report).expect("report serializes")
        ),
        Format::Csv => render::csv(
            &["k", "maxN", "ok", "firstFailure"],
            &[vec![
                k.to_string(),
                max_n.to_string(),
                report.ok.to_string(),
                report.first_failure.map(|m| m.to_string()).unwrap_or_default(),
            ]],
        ),
    };
    if report.ok {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn recursion(d_max: usize, trunc: usize, verify: bool, format: Format) -> Result<String, Failure> {
    let ab = andrews_baxter(d_max, trunc).map_err(Failure::usage)?;
    let product = restricted_product(|i| i % 5 == 1 || i % 5 == 4, trunc);
    let matches = ab.limit.as_ref() == Some(&product);
    let last = ab.a(d_max);
    let out = match format {
        Format::Text => {
            let label = if ab.converged {
                "limit".to_string()
            } else {
                format!("A_{d_max}")
            };
            format!(
                "dMax {d_max}, truncation {trunc}\nconverged: {}\nord(B_d) >= d-2: {}\nlimit equals 1,4 mod 5 product: {}\n{label}:\n{}",
                render::yes_no(ab.converged),
                render::yes_no(ab.order_bound_holds),
                render::yes_no(matches),
                render::series_table(last),
            )
        }
        Format::Json => render::json(&json!({
            "dMax": d_max,
            "truncation": trunc,
            "converged": ab.converged,
            "orderBoundHolds": ab.order_bound_holds,
            "matchesProduct": matches,
            "limit": ab.limit.as_ref().map(|s| serde_json::to_value(s).expect("series serializes")),
        })),
        Format::Csv => last.to_csv(),
    };
    if verify && !(ab.converged && ab.order_bound_holds && matches) {
        Err(Failure::Verification(out))
    } else {
        Ok(out)
    }
}

fn verify(suite: &str, format: Format) -> Result<String, Failure> {
    let suite: Suite = suite.parse().map_err(Failure::Usage)?;
    let reports = run_suite(suite);
    let out = match format {
        Format::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        ),
        Format::Csv => render::csv(
            &["id", "suite", "passed", "checks", "failures", "elapsedMs"],
            &reports
                .iter()
                .map(|r| {
                    vec![
                        r.id.to_string(),
                        r.suite.to_string(),
                        r.passed.to_string(),
                        r.checks.to_string(),
                        r.failure_count.to_string(),
                        format!("{:.1}", r.elapsed_ms),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
    };
    if reports.iter().all(|r| r.passed) {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}
