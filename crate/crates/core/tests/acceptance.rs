//! One line per acceptance criterion: status, wall time and budget.
//! Each criterion gets a fresh workspace so memoized classes are not shared.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hyperschubert::fga::FglMode;
use hyperschubert::roots::Family::*;
use hyperschubert::verify::{self, small_systems, spec, Report, Workspace};

type Suite = Box<dyn Fn(&Workspace) -> Vec<Report>>;

fn criteria() -> Vec<(&'static str, u64, Suite)> {
    vec![
        ("FGL axioms in generic mode", 1, Box::new(|_| vec![verify::fgl(FglMode::GenericHyperbolic)])),
        ("formal group algebra identities and κ_i = μ1", 1, Box::new(|ws| vec![verify::lemma0(ws)])),
        (
            "quadratic and braid relations of Y_i",
            30,
            Box::new(|ws| {
                let mut out: Vec<Report> = small_systems()
                    .into_iter()
                    .map(|s| verify::relations(ws, s, FglMode::GenericHyperbolic))
                    .collect();
                out.push(verify::relations(ws, spec(G2, 2), FglMode::Hecke));
                out
            }),
        ),
        ("Bott-Samelson tables in A2, C2 and 𝔖_{s1s0s1}", 60, Box::new(|ws| vec![verify::examples(ws)])),
        ("Lorentz Bott-Samelson values in A3", 120, Box::new(|ws| vec![verify::example_bsa3(ws)])),
        (
            "Hecke algebra and KL polynomials",
            60,
            Box::new(|ws| {
                [spec(A, 2), spec(A, 3), spec(B, 2), spec(C, 2), spec(G2, 2)]
                    .into_iter()
                    .map(|s| verify::hecke(ws, s))
                    .collect()
            }),
        ),
        (
            "Y-basis expansion of normalized KL elements",
            60,
            Box::new(|ws| [spec(A, 2), spec(B, 2), spec(C, 2), spec(G2, 2)].into_iter().map(|s| verify::combin(ws, s)).collect()),
        ),
        (
            "𝔖_{w0} = 1 and 𝔖_{w_m^-1} = ρ in A1, A2, A3, C2, C3",
            600,
            Box::new(|ws| {
                [spec(A, 1), spec(A, 2), spec(A, 3), spec(C, 2), spec(C, 3)]
                    .into_iter()
                    .map(|s| verify::mainthm(ws, s))
                    .collect()
            }),
        ),
        (
            "𝔖_w = smooth_class(w) for products of distinct simple reflections",
            300,
            Box::new(|ws| small_systems().into_iter().map(|s| verify::distinct_products(ws, s)).collect()),
        ),
        (
            "K-theory limit equals every multiplicative Bott-Samelson class",
            600,
            Box::new(|ws| [spec(A, 2), spec(C, 2), spec(A, 3)].into_iter().map(|s| verify::ktheory_limit(ws, s)).collect()),
        ),
        (
            "ρ recursions under Y_k and τ_k",
            300,
            Box::new(|ws| [spec(A, 2), spec(A, 3), spec(C, 2), spec(C, 3)].into_iter().map(|s| verify::lemmas(ws, s)).collect()),
        ),
        (
            "transition matrix to Bott-Samelson classes",
            60,
            Box::new(|ws| [spec(A, 2), spec(C, 2)].into_iter().map(|s| verify::triangularity(ws, s)).collect()),
        ),
        ("positivity certificate and malformed fixtures", 10, Box::new(|ws| vec![verify::positivity(ws)])),
        (
            "𝔖_w = smooth_class(w) for smooth w in S4, W(C2); G2 reported",
            900,
            Box::new(|ws| [spec(A, 3), spec(C, 2), spec(G2, 2)].into_iter().map(|s| verify::mainconj(ws, s)).collect()),
        ),
    ]
}

fn main() -> ExitCode {
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    let mut total = 0;
    for (n, (title, budget, suite)) in criteria().into_iter().enumerate() {
        let n = n + 1;
        if !filter.is_empty() && !filter.iter().any(|f| f == &n.to_string()) {
            continue;
        }
        total += 1;
        let ws = Workspace::new(None);
        let start = Instant::now();
        let reports = suite(&ws);
        let took = start.elapsed();
        let ok = reports.iter().all(|r| r.passed());
        let in_budget = took <= Duration::from_secs(budget);
        let pass = ok && in_budget;
        if !pass {
            failed += 1;
        }
        let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
        println!(
            "{} [{n:2}] {title}: {checks} checks in {:.2} s (budget {budget} s{})",
            if pass { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            if in_budget { "" } else { ", exceeded" }
        );
        for r in &reports {
            for c in &r.checks {
                if c.status != verify::Status::Pass {
                    println!("       {:?} {}: {}: {}", c.status, r.suite, c.name, c.detail);
                }
            }
        }
    }
    println!("{} of {total} criteria passed", total - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
