//! Named verification suites, each a sweep of independent checks.

use rayon::prelude::*;

use crate::combinat::{partitions_of, partitions_up_to, Partition};
use crate::error::{Error, Result};
use crate::hecke::{
    absorption_check, all_perms, elambda_check, idempotent_check, orthogonality_check, parity_check,
    ppb_product_check, sandwich_braid_check, sandwich_check, Perm,
};
use crate::invariants::{
    verify_meridian_distinct, verify_strong_integrality, verify_symmetries, verify_torus_swap, FramedKnot, Knot,
    TorusKnot,
};
use crate::lmov::{check_prime_special, unknot_gtilde_check, LmovPipeline, SeriesFlavor, SpecialSeries};
use crate::special::{
    alexander, alpha_check, alpha_p_tau, alpha_recursion_check, colored_alexander, gtilde_a1_check,
    hook_conjecture_check, special_composite_check, special_poly_check, sumchi_sweep,
};
use crate::verdict::Verdict;

/// Registered suite names, in the order `all` runs them.
pub const SUITES: [&str; 9] =
    ["hecke", "integrality", "symmetry", "lmov", "special-lmov", "alexander", "alpha", "sumchi", "special-poly"];

/// Optional overrides; `None` means the default desk scale.
#[derive(Clone, Debug, Default)]
pub struct SuiteParams {
    /// Restricts knot sweeps to one framed knot.
    pub knot: Option<FramedKnot>,
    /// Color weight cap, truncation `D`, hook size or `|B|` cap, depending on the suite.
    pub max_weight: Option<u32>,
    /// Strand cap for the Hecke suite.
    pub n: Option<usize>,
    pub p: Option<u32>,
    pub tau: Option<i64>,
    /// Adds the literal sandwich statement to the Hecke suite.
    pub literal_sandwich: bool,
}

fn torus(r: u32, s: u32) -> TorusKnot {
    TorusKnot::new(r, s).expect("coprime literal")
}

fn torus_sweep() -> Vec<FramedKnot> {
    [(2, 3), (2, 5), (3, 4)].into_iter().map(|(r, s)| FramedKnot::diagram(Knot::Torus(torus(r, s)))).collect()
}

fn trefoil() -> FramedKnot {
    FramedKnot::diagram(Knot::Torus(torus(2, 3)))
}

fn nonempty_up_to(n: u32) -> Vec<Partition> {
    partitions_up_to(n).into_iter().skip(1).collect()
}

/// `(λ, μ)` pairs with `1 ≤ |λ| + |μ| ≤ n`.
fn color_pairs(n: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for total in 1..=n {
        for lw in 0..=total {
            for l in partitions_of(lw) {
                for m in partitions_of(total - lw) {
                    out.push((l.clone(), m));
                }
            }
        }
    }
    out
}

/// `(knot, λ, μ)` cells for the integrality, symmetry and special-polynomial sweeps.
fn knot_color_cells(params: &SuiteParams) -> Vec<(FramedKnot, Partition, Partition)> {
    let mut cells = Vec::new();
    match params.knot {
        Some(k) if k.knot == Knot::Unknot => {
            for (l, m) in color_pairs(params.max_weight.unwrap_or(4)) {
                cells.push((k, l, m));
            }
        }
        Some(k) => {
            for l in nonempty_up_to(params.max_weight.unwrap_or(3)) {
                cells.push((k, l, Partition::empty()));
            }
        }
        None => {
            for k in torus_sweep() {
                for l in nonempty_up_to(params.max_weight.unwrap_or(3)) {
                    cells.push((k, l, Partition::empty()));
                }
            }
            for tau in [-1, 0, 1] {
                for (l, m) in color_pairs(4) {
                    cells.push((FramedKnot::unknot(tau), l, m));
                }
            }
        }
    }
    cells
}

fn lift(v: Result<Verdict>, check: &str, inst: String) -> Verdict {
    v.unwrap_or_else(|e| Verdict::from_error(check, inst, &e))
}

fn hecke(params: &SuiteParams) -> Vec<Verdict> {
    let n = params.n.unwrap_or(4);
    let mut out: Vec<Verdict> = (1..=n + 1).map(absorption_check).collect();
    let shapes: Vec<Partition> = (1..=n as u32).flat_map(partitions_of).collect();
    let per_shape: Vec<Vec<Verdict>> = shapes
        .par_iter()
        .map(|l| {
            let mut v = vec![
                lift(idempotent_check(l), "idempotent", format!("λ={l}")),
                ppb_product_check(l),
            ];
            for m in partitions_of(l.weight()) {
                v.push(lift(elambda_check(l, &m), "elambda", format!("λ={l}, μ={m}")));
                if &m != l {
                    v.push(lift(orthogonality_check(l, &m), "orthogonality", format!("λ={l}, μ={m}")));
                }
            }
            let perms: Vec<Perm> = all_perms(l.weight() as usize);
            for pi in &perms {
                v.push(lift(sandwich_braid_check(l, pi), "sandwich-braid", format!("λ={l}, π={pi}")));
                if params.literal_sandwich {
                    v.push(lift(sandwich_check(l, pi), "sandwich", format!("λ={l}, π={pi}")));
                }
            }
            v
        })
        .collect();
    out.extend(per_shape.into_iter().flatten());
    out.extend((1..=n + 3).map(parity_check));
    out
}

fn integrality(params: &SuiteParams) -> Vec<Verdict> {
    knot_color_cells(params).par_iter().map(|(k, l, m)| verify_strong_integrality(k, l, m)).collect()
}

fn symmetry(params: &SuiteParams) -> Vec<Verdict> {
    let mut out: Vec<Verdict> =
        knot_color_cells(params).par_iter().map(|(k, l, m)| verify_symmetries(k, l, m)).collect();
    if params.knot.is_none() {
        let swaps: Vec<(TorusKnot, Partition)> = [(2, 3), (2, 5)]
            .into_iter()
            .flat_map(|(r, s)| [torus(r, s), torus(s, r)])
            .flat_map(|t| nonempty_up_to(2).into_iter().map(move |l| (t, l)))
            .collect();
        out.extend(swaps.par_iter().map(|(t, l)| verify_torus_swap(*t, l)).collect::<Vec<_>>());
        out.push(verify_meridian_distinct(6));
    }
    out
}

fn lmov_knots(params: &SuiteParams) -> Vec<(FramedKnot, u32)> {
    match params.knot {
        Some(k) => vec![(k, params.max_weight.unwrap_or(4))],
        None => vec![(FramedKnot::unknot(1), 4), (trefoil(), 4)],
    }
}

fn lmov(params: &SuiteParams) -> Vec<Verdict> {
    let mut out = Vec::new();
    if params.knot.is_none() {
        out.push(unknot_gtilde_check(6));
    }
    for (k, d) in lmov_knots(params) {
        match LmovPipeline::new(k, d, SeriesFlavor::Colored) {
            Ok(p) => {
                out.push(p.log_oracle_check());
                let per_mu: Vec<Vec<Verdict>> = nonempty_up_to(d)
                    .par_iter()
                    .map(|mu| vec![p.refined(mu), p.g_routes_check(mu), p.g_tilde_symmetry_check(mu)])
                    .collect();
                out.extend(per_mu.into_iter().flatten());
            }
            Err(e) => out.push(Verdict::from_error("refined-lmov", format!("{k}, D={d}"), &e)),
        }
    }
    out
}

fn special_lmov(params: &SuiteParams) -> Vec<Verdict> {
    let knots = match params.knot {
        Some(k) => vec![k],
        None => vec![FramedKnot::unknot(0), FramedKnot::unknot(1), trefoil()],
    };
    let d = params.max_weight.unwrap_or(4);
    let primes: Vec<u32> = match params.p {
        Some(p) => vec![p],
        None => vec![2, 3],
    };
    let mut out = Vec::new();
    for k in knots {
        match SpecialSeries::new(k, d) {
            Ok(s) => out.extend((1..=d).map(|n| s.check(n))),
            Err(e) => out.push(Verdict::from_error("special-lmov", format!("{k}, D={d}"), &e)),
        }
        out.extend(primes.par_iter().map(|&p| check_prime_special(&k, p)).collect::<Vec<_>>());
    }
    out
}

/// `A_{(2,2)}(T_{2,3}) ≠ A(T_{2,3}; q^4)`: the hook restriction is necessary.
pub fn alexander_negative_control() -> Verdict {
    let inst = "torus:2,3, λ=(2,2)";
    let run = || -> Result<bool> {
        let t = Knot::Torus(torus(2, 3));
        let lhs = colored_alexander(t, &Partition::new(vec![2, 2])?)?;
        Ok(lhs != alexander(t)?.adams(4))
    };
    match run() {
        Ok(ok) => Verdict::from_bool("alexander-non-hook", inst, ok, "non-hook color reproduced A(q^4)"),
        Err(e) => Verdict::from_error("alexander-non-hook", inst, &e),
    }
}

fn alexander_suite(params: &SuiteParams) -> Vec<Verdict> {
    let d = params.max_weight.unwrap_or(4);
    let knots: Vec<TorusKnot> = match params.knot.map(|k| k.knot) {
        Some(Knot::Torus(t)) => vec![t],
        Some(Knot::Unknot) => vec![],
        None => vec![torus(2, 3), torus(2, 5), torus(3, 4)],
    };
    let cells: Vec<(TorusKnot, u32)> = knots.iter().flat_map(|&t| (1..=d).map(move |e| (t, e))).collect();
    let mut out: Vec<Verdict> = cells.par_iter().map(|(t, e)| hook_conjecture_check(*t, *e)).collect();
    let gknots = match params.knot {
        Some(k) => vec![k],
        None => {
            out.push(alexander_negative_control());
            vec![FramedKnot::unknot(0), FramedKnot::unknot(1), trefoil()]
        }
    };
    let primes: Vec<u32> = match params.p {
        Some(p) => vec![p],
        None => vec![2, 3],
    };
    let gcells: Vec<(FramedKnot, u32)> = gknots.iter().flat_map(|&k| primes.iter().map(move |&p| (k, p))).collect();
    out.extend(gcells.par_iter().map(|(k, p)| gtilde_a1_check(k, *p)).collect::<Vec<_>>());
    out
}

/// `α_2^1 = 1`.
pub fn alpha_base_check() -> Verdict {
    match alpha_p_tau(2, 1) {
        Ok(a) => Verdict::from_bool("alpha-base", "p=2, τ=1", a.is_one(), format!("α_2^1 = {a}")),
        Err(e) => Verdict::from_error("alpha-base", "p=2, τ=1", &e),
    }
}

fn alpha(params: &SuiteParams) -> Vec<Verdict> {
    let primes: Vec<u32> = match params.p {
        Some(p) => vec![p],
        None => vec![2, 3, 5, 7],
    };
    let taus: Vec<i64> = match params.tau {
        Some(t) => vec![t],
        None => (-5..=5).collect(),
    };
    let mut out: Vec<Verdict> =
        primes.iter().flat_map(|&p| taus.iter().map(move |&t| alpha_check(p, t))).collect();
    if params.p.is_none() && params.tau.is_none() {
        out.push(alpha_base_check());
        out.push(alpha_recursion_check(5));
    }
    out
}

fn special_poly(params: &SuiteParams) -> Vec<Verdict> {
    let mut out: Vec<Verdict> =
        knot_color_cells(params).par_iter().map(|(k, l, m)| special_poly_check(k, l, m)).collect();
    let composite_knots = match params.knot {
        Some(k) if k.knot == Knot::Unknot => vec![k],
        Some(_) => vec![],
        None => vec![FramedKnot::unknot(0), FramedKnot::unknot(1)],
    };
    for k in composite_knots {
        out.extend(nonempty_up_to(3).par_iter().map(|nu| special_composite_check(&k, nu)).collect::<Vec<_>>());
    }
    out
}

/// Runs one named suite, or every suite for `all`.
pub fn run_suite(name: &str, params: &SuiteParams) -> Result<Vec<Verdict>> {
    Ok(match name {
        "hecke" => hecke(params),
        "integrality" => integrality(params),
        "symmetry" => symmetry(params),
        "lmov" => lmov(params),
        "special-lmov" => special_lmov(params),
        "alexander" => alexander_suite(params),
        "alpha" => alpha(params),
        "sumchi" => vec![sumchi_sweep(params.max_weight.unwrap_or(8))],
        "special-poly" => special_poly(params),
        "all" => {
            let mut out = Vec::new();
            for s in SUITES {
                out.extend(run_suite(s, params)?);
            }
            out
        }
        other => return Err(Error::UnknownSuite(other.to_string())),
    })
}
