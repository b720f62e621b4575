//! Acceptance run: one line per criterion, exact comparisons throughout.
//!
//! Criteria listed in `EXPECTED_RED` are known to be false as stated; they
//! still run and print FAIL, and the run fails if one of them starts passing
//! so the analysis gets revisited.

use std::time::{Duration, Instant};

use homfly_core::combinat::{
    character, character_oracle, lr_coeff, partitions_of, partitions_up_to, schur_product_expansion, Partition,
};
use homfly_core::exactalg::LaurentQA;
use homfly_core::hecke::{all_perms, sandwich_check};
use homfly_core::invariants::{verify_meridian_distinct, FramedKnot, Knot};
use homfly_core::lmov::{check_prime_special, unknot_gtilde_check};
use homfly_core::special::{
    alexander, colored_alexander, gtilde_a1_check, hook_conjecture_check, sumchi_sweep,
};
use homfly_core::suites::{alexander_negative_control, run_suite, SuiteParams};
use homfly_core::Verdict;

/// Criteria whose literal statement is false; see the decisions ledger.
const EXPECTED_RED: [u32; 1] = [3];

type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

struct Outcome {
    pass: bool,
    summary: String,
}

fn tally(verdicts: &[Verdict]) -> Outcome {
    let failed: Vec<&Verdict> = verdicts.iter().filter(|v| !v.pass).collect();
    let summary = match failed.first() {
        None => format!("{} checks", verdicts.len()),
        Some(v) => format!(
            "{}/{} checks failed; first: {} [{}] {}",
            failed.len(),
            verdicts.len(),
            v.check,
            v.instance,
            v.detail
        ),
    };
    Outcome { pass: failed.is_empty(), summary }
}

fn suite(name: &str, params: SuiteParams) -> Vec<Verdict> {
    run_suite(name, &params).expect("registered suite")
}

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn c1_characters() -> Outcome {
    let mut verdicts = Vec::new();
    for n in 0..=6 {
        let parts = partitions_of(n);
        for l in &parts {
            for m in &parts {
                let ok = character_oracle(l, m).map(|o| o == character(l, m)).unwrap_or(false);
                verdicts.push(Verdict::from_bool("character", format!("λ={l}, μ={m}"), ok, "oracle disagrees"));
            }
        }
        for m in &parts {
            for nu in &parts {
                let s: i64 = parts.iter().map(|l| character(l, m) * character(l, nu)).sum();
                let expect = if m == nu { m.zmu() as i64 } else { 0 };
                verdicts.push(Verdict::from_bool(
                    "orthogonality",
                    format!("μ={m}, ν={nu}"),
                    s == expect,
                    format!("{s} ≠ {expect}"),
                ));
            }
        }
    }
    tally(&verdicts)
}

fn c2_littlewood_richardson() -> Outcome {
    let mut verdicts = Vec::new();
    for l in partitions_up_to(8) {
        for m in partitions_up_to(8 - l.weight()) {
            let oracle = schur_product_expansion(&l, &m);
            let mut ok = true;
            for nu in partitions_of(l.weight() + m.weight()) {
                let expect = oracle.get(&nu).copied().unwrap_or(0);
                if lr_coeff(&l, &m, &nu) as i64 != expect {
                    ok = false;
                }
            }
            verdicts.push(Verdict::from_bool("lr", format!("λ={l}, μ={m}"), ok, "oracle disagrees"));
        }
    }
    tally(&verdicts)
}

fn c3_hecke() -> Outcome {
    let others = suite("hecke", SuiteParams { n: Some(4), ..Default::default() });
    let mut literal = Vec::new();
    for n in 1..=4 {
        for l in partitions_of(n) {
            for pi in all_perms(n as usize) {
                literal.push(sandwich_check(&l, &pi).unwrap_or_else(|e| Verdict::from_error("sandwich", "", &e)));
            }
        }
    }
    let rest = tally(&others);
    let lit = tally(&literal);
    Outcome {
        pass: rest.pass && lit.pass,
        summary: format!("absorption/idempotents/braid sandwich/parity: {}; literal sandwich: {}", rest.summary, lit.summary),
    }
}

fn c4_meridian() -> Outcome {
    tally(&[verify_meridian_distinct(6)])
}

fn c5_integrality() -> Outcome {
    tally(&suite("integrality", SuiteParams::default()))
}

fn c6_symmetries() -> Outcome {
    tally(&suite("symmetry", SuiteParams::default()))
}

fn c7_special_polynomial() -> Outcome {
    tally(&suite("special-poly", SuiteParams::default()))
}

fn c8_alexander() -> Outcome {
    let mut verdicts = Vec::new();
    for (r, s) in [(2, 3), (2, 5), (3, 4)] {
        let t = homfly_core::invariants::TorusKnot::new(r, s).unwrap();
        for d in 1..=4 {
            verdicts.push(hook_conjecture_check(t, d));
        }
    }
    let t23 = Knot::torus(2, 3).unwrap();
    let trefoil = LaurentQA::q_pow(2) - LaurentQA::one() + LaurentQA::q_pow(-2);
    let a1 = colored_alexander(t23, &p(&[1])).map(|a| a.value() == &trefoil).unwrap_or(false);
    verdicts.push(Verdict::from_bool("trefoil-alexander", "λ=(1)", a1, "A_(1)(T_2,3) ≠ q²-1+q⁻²"));
    let closed = alexander(t23).map(|a| a.value() == &trefoil).unwrap_or(false);
    verdicts.push(Verdict::from_bool("trefoil-alexander", "closed form", closed, "closed form mismatch"));
    verdicts.push(alexander_negative_control());
    tally(&verdicts)
}

fn c9_lmov() -> Outcome {
    let mut verdicts = vec![unknot_gtilde_check(6)];
    verdicts.extend(suite("lmov", SuiteParams::default()));
    tally(&verdicts)
}

fn c10_prime_special() -> Outcome {
    let knots = [FramedKnot::unknot(0), FramedKnot::unknot(1), FramedKnot::diagram(Knot::torus(2, 3).unwrap())];
    let mut verdicts = Vec::new();
    for k in &knots {
        for prime in [2, 3] {
            verdicts.push(check_prime_special(k, prime));
            verdicts.push(gtilde_a1_check(k, prime));
        }
    }
    tally(&verdicts)
}

fn c11_alpha() -> Outcome {
    tally(&suite("alpha", SuiteParams::default()))
}

fn c12_sumchi() -> Outcome {
    tally(&[sumchi_sweep(8)])
}

fn main() {
    let criteria: [Criterion; 12] = [
        (1, "character oracle equivalence", Duration::from_secs(10), c1_characters),
        (2, "LR oracle equivalence", Duration::from_secs(30), c2_littlewood_richardson),
        (3, "Hecke suite", Duration::from_secs(120), c3_hecke),
        (4, "meridian eigenvalues distinct", Duration::from_secs(5), c4_meridian),
        (5, "strong integrality", Duration::from_secs(120), c5_integrality),
        (6, "symmetries", Duration::from_secs(60), c6_symmetries),
        (7, "special polynomial", Duration::from_secs(30), c7_special_polynomial),
        (8, "colored Alexander", Duration::from_secs(60), c8_alexander),
        (9, "refined LMOV", Duration::from_secs(300), c9_lmov),
        (10, "prime special case", Duration::from_secs(120), c10_prime_special),
        (11, "alpha lemma", Duration::from_secs(5), c11_alpha),
        (12, "sumchi lemma", Duration::from_secs(10), c12_sumchi),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut unexpected = Vec::new();
    for (id, name, budget, run) in criteria {
        let tag = format!("criterion {id:>2}");
        if !filter.is_empty() && !filter.iter().any(|f| tag.contains(f.as_str()) || name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let red = EXPECTED_RED.contains(&id);
        let status = match (out.pass, red) {
            (true, false) => "PASS",
            (false, false) => "FAIL",
            (false, true) => "FAIL (known, see decisions ledger)",
            (true, true) => "PASS (unexpected: listed as known-red)",
        };
        let slow = if took > budget { format!(" over budget {budget:?}") } else { String::new() };
        println!("{tag} {name}: {status} in {:.2?}{slow} :: {}", took, out.summary);
        if out.pass == red {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected acceptance outcomes for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
