use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::SeriesError;
use crate::groebner::MonomialIdeal;
use crate::poly::VarId;
use crate::qseries::{geometric_in_place, mul_truncated, TruncatedSeries};

/// Counts standard monomials of `I` by weight: `c_w` is the number of
/// monomials of weight `w` in the variables of `weights` that no generator
/// divides.
///
/// Uses `HP(R/I) = HP(R/(I, x)) + t^{w(x)}·HP(R/(I : x))` for a pivot
/// variable `x`, chosen as the lowest variable occurring in a generator, so
/// chains such as `y_q^a·y_{q+1}^b` are consumed from one end. Variables absent from all generators contribute
/// `1/(1−t^w)` factors, generators sharing no variables are split into
/// independent factors, and results are memoized by generator set. Every
/// sub-problem is solved at the full truncation `n`. The unit ideal yields
/// the zero series.
///
/// Generators mentioning a variable outside `weights` are ignored.
pub fn standard_monomial_series(
    ideal: &MonomialIdeal,
    weights: &BTreeMap<VarId, u64>,
    n: usize,
) -> Result<TruncatedSeries, SeriesError> {
    if let Some((&v, _)) = weights.iter().find(|(_, &w)| w == 0) {
        return Err(SeriesError::WeightZeroVariable(v));
    }
    let index: HashMap<VarId, u32> = weights.keys().enumerate().map(|(i, &v)| (v, i as u32)).collect();
    let mut gens: Vec<Mono> = Vec::new();
    'gens: for g in ideal.generators() {
        let mut m = Vec::new();
        for &(v, e) in g.exponents() {
            match index.get(&v) {
                Some(&i) => m.push((i, e)),
                None => continue 'gens,
            }
        }
        m.sort_unstable();
        gens.push(m);
    }
    let mut ctx = Ctx {
        w: weights.values().copied().collect(),
        memo: HashMap::new(),
    };
    let all: Vec<u32> = (0..ctx.w.len() as u32).collect();
    let gens = minimalize(gens);
    Ok(TruncatedSeries::from_coefficients(ctx.over(gens, &all, n)))
}

/// Sparse exponent vector over variable indices, sorted by index.
type Mono = Vec<(u32, u32)>;

struct Ctx {
    w: Vec<u64>,
    memo: HashMap<Vec<Mono>, Vec<BigInt>>,
}

fn divides(a: &Mono, b: &Mono) -> bool {
    let mut j = 0;
    for &(v, e) in a {
        while j < b.len() && b[j].0 < v {
            j += 1;
        }
        match b.get(j) {
            Some(&(u, f)) if u == v && f >= e => j += 1,
            _ => return false,
        }
    }
    true
}

fn degree(m: &Mono) -> u32 {
    m.iter().map(|&(_, e)| e).sum()
}

fn minimalize(mut gens: Vec<Mono>) -> Vec<Mono> {
    gens.sort_by(|a, b| degree(a).cmp(&degree(b)).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Mono> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| divides(k, &g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

impl Ctx {
    fn weight(&self, m: &Mono) -> u64 {
        m.iter().map(|&(v, e)| self.w[v as usize] * u64::from(e)).sum()
    }

    /// Series of `k[vars]/(gens)` truncated at `n`. `gens` must be minimal
    /// and sorted, and only mention `vars`.
    fn over(&mut self, gens: Vec<Mono>, vars: &[u32], n: usize) -> Vec<BigInt> {
        let gens: Vec<Mono> = gens.into_iter().filter(|g| self.weight(g) <= n as u64).collect();
        if gens.iter().any(Vec::is_empty) {
            return vec![BigInt::zero(); n + 1];
        }
        let mut used = vec![false; self.w.len()];
        for g in &gens {
            for &(v, _) in g {
                used[v as usize] = true;
            }
        }
        let mut s = self.core(gens, n);
        for &v in vars {
            let w = self.w[v as usize] as usize;
            if !used[v as usize] && w <= n {
                geometric_in_place(&mut s, w);
            }
        }
        s
    }

    /// Series over exactly the variables occurring in `gens`.
    fn core(&mut self, gens: Vec<Mono>, n: usize) -> Vec<BigInt> {
        if gens.is_empty() {
            let mut one = vec![BigInt::zero(); n + 1];
            one[0] = BigInt::one();
            return one;
        }
        if let Some(s) = self.memo.get(&gens) {
            return s.clone();
        }
        let s = self.compute(&gens, n);
        self.memo.insert(gens, s.clone());
        s
    }

    fn compute(&mut self, gens: &[Mono], n: usize) -> Vec<BigInt> {
        if gens.len() == 1 {
            let g = &gens[0];
            let mut s = vec![BigInt::zero(); n + 1];
            s[0] = BigInt::one();
            let wg = self.weight(g) as usize;
            if wg <= n {
                s[wg] = -BigInt::one();
            }
            for &(v, _) in g {
                geometric_in_place(&mut s, self.w[v as usize] as usize);
            }
            return s;
        }
        let comps = components(gens);
        if comps.len() > 1 {
            let mut acc: Option<Vec<BigInt>> = None;
            for c in comps {
                let s = self.core(c, n);
                acc = Some(match acc {
                    None => s,
                    Some(a) => mul_truncated(&a, &s),
                });
            }
            return acc.expect("at least two components");
        }

        let mut vars: Vec<u32> = gens.iter().flat_map(|g| g.iter().map(|&(v, _)| v)).collect();
        vars.sort_unstable();
        vars.dedup();
        let pivot = vars[0];
        let wx = self.w[pivot as usize] as usize;

        // (I, x): drop generators containing x and the variable x itself.
        let left: Vec<Mono> = gens
            .iter()
            .filter(|g| !g.iter().any(|&(v, _)| v == pivot))
            .cloned()
            .collect();
        let left_vars: Vec<u32> = vars.iter().copied().filter(|&v| v != pivot).collect();
        let mut s = self.over(left, &left_vars, n);

        // (I : x): lower the exponent of x by one.
        if wx <= n {
            let right = colon_by_variable(gens, pivot);
            // Computed at full precision so the memo is keyed on generators
            // alone; a shrinking precision would multiply the distinct states.
            let r = self.over(right, &vars, n);
            for (i, c) in r.into_iter().take(n + 1 - wx).enumerate() {
                s[i + wx] += c;
            }
        }
        s
    }
}

/// `(I : x)` for a minimal sorted generating set. Only generators containing
/// `x` change, so minimality is restored by comparing against those alone.
fn colon_by_variable(gens: &[Mono], x: u32) -> Vec<Mono> {
    let (touched, kept): (Vec<&Mono>, Vec<&Mono>) = gens.iter().partition(|g| g.iter().any(|&(v, _)| v == x));
    let lowered: Vec<Mono> = touched
        .into_iter()
        .map(|g| {
            g.iter()
                .filter_map(|&(v, e)| match (v == x, e) {
                    (true, 1) => None,
                    (true, e) => Some((v, e - 1)),
                    _ => Some((v, e)),
                })
                .collect()
        })
        .collect();
    let lowered: Vec<Mono> = minimalize(lowered)
        .into_iter()
        .filter(|l| !kept.iter().any(|k| divides(k, l)))
        .collect();
    let mut out: Vec<Mono> = kept
        .into_iter()
        .filter(|k| !lowered.iter().any(|l| divides(l, k)))
        .cloned()
        .collect();
    out.extend(lowered);
    out.sort();
    out
}

/// Splits generators into classes that share variables.
fn components(gens: &[Mono]) -> Vec<Vec<Mono>> {
    let mut owner: HashMap<u32, usize> = HashMap::new();
    let mut parent: Vec<usize> = (0..gens.len()).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for (i, g) in gens.iter().enumerate() {
        for &(v, _) in g {
            match owner.get(&v) {
                Some(&j) => {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a.max(b)] = a.min(b);
                }
                None => {
                    owner.insert(v, i);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Mono>> = BTreeMap::new();
    for (i, g) in gens.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(g.clone());
    }
    groups.into_values().collect()
}
