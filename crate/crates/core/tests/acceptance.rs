//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines always print in order; exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use aperylab::arith::Engine;
use aperylab::arith::{
    binomial, is_prime, primes_between, rat, residue, valuation, BigRational, ExactField, Field, PadicField, Valuation,
};
use aperylab::bernoulli::{bernoulli_exact, bernoulli_mod_p};
use aperylab::congruences::{lookup, select, verify_range, CongruenceResult, Status, Sweep};
use aperylab::identities::{identity_sweep, series_limit, Family, SeriesId};
use aperylab::sums::{mhs, mhs_bruteforce, odd_mhs, MhsIndex, SumKind};

/// Series limits must match within this absolute error.
const SERIES_TOLERANCE: f64 = 1e-12;
const SERIES_TERMS: usize = 60;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn criterion_1() -> Outcome {
    let rows = identity_sweep(&Family::ALL, 60, &[]).map_err(|e| e.to_string())?;
    let bad: Vec<_> = rows.iter().filter(|r| !r.holds).collect();
    if bad.is_empty() {
        Ok(format!("{} identity instances hold exactly for n <= 60", rows.len()))
    } else {
        Err(format!("{} failures, first {:?}", bad.len(), bad[0]))
    }
}

/// `C(2k,k)/16^k` by its own recurrence.
fn central(k: u64) -> BigRational {
    BigRational::new(BigInt::from(binomial(2 * k, k)), BigInt::from(16).pow(k as u32))
}

fn odd_pow(k: u64, e: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2 * k + 1).pow(e))
}

fn harmonic(n: u64) -> BigRational {
    (1..=n)
        .map(|k| rat(1, k as i64))
        .fold(BigRational::zero(), |a, b| a + b)
}

fn registry_difference(id: &str, p: u64) -> Result<BigRational, String> {
    let stmt = lookup(id, &[]).map_err(|e| e.to_string())?;
    let (l, r) = aperylab::congruences::exact_sides(stmt, p).map_err(|e| e.to_string())?;
    Ok(l - r)
}

fn criterion_2() -> Outcome {
    let p = 7u64;
    let n = 3u64;
    let b2 = bernoulli_exact(2).map_err(|e| e.to_string())?;
    let h = harmonic(p - 1);
    let pp = |e: u32| BigRational::from_integer(BigInt::from(p).pow(e));

    // Direct recomputation of mc1, independent of the registry.
    let lhs: BigRational = (0..n).map(|k| central(k) * odd_pow(k, 1)).sum();
    let rhs = -(&h / BigInt::from(12) + rat(3, 160) * pp(4) * &b2);
    let direct = lhs - rhs;
    let expected = rat(16807, 1920);
    if direct != expected {
        return Err(format!("direct mc1 difference {direct}"));
    }
    let mut notes = Vec::new();
    let checks: [(&str, BigRational, i64); 5] = [
        ("mc1", expected.clone(), 5),
        ("mc2", rat(-7i64.pow(4) * 229, 28800), 4),
        ("morley6", rat(5 * 7i64.pow(6), 15360), 6),
        ("mc21_h2", rat(7i64.pow(3) * 19, 25920), 3),
        ("mc21_cube", rat(7i64.pow(3) * 1567, 432000), 3),
    ];
    if registry_difference("mc1", p)? != expected {
        return Err("registry mc1 difference differs from the direct value".into());
    }
    for (id, value, v) in checks {
        let d = registry_difference(id, p)?;
        if d.abs() != value.abs() {
            return Err(format!("{id}: difference {d}, expected magnitude {}", value.abs()));
        }
        if valuation(&d, p) != Valuation::Finite(v) {
            return Err(format!("{id}: valuation {}", valuation(&d, p)));
        }
        notes.push(format!("{id}={v}"));
    }
    let c = registry_difference("claim_5_864", p)?;
    if !valuation(&c, p).reaches(1) {
        return Err("claim_5_864 fails mod 7".into());
    }
    Ok(format!("p=7 valuations {} and claim_5_864 passes", notes.join(" ")))
}

fn criterion_3() -> Outcome {
    let statements = select("proven").map_err(|e| e.to_string())?;
    let primes = primes_between(7, 499);
    let start = Instant::now();
    let sweep = verify_range(&statements, &primes, &[Engine::Padic], jobs()).map_err(|e| e.to_string())?;
    let failing: BTreeSet<String> = sweep.results.iter().filter(|r| !r.pass).map(|r| r.label()).collect();
    let fails = sweep.results.iter().filter(|r| !r.pass).count();
    let summary = format!("{} cells in {:.1}s", sweep.results.len(), start.elapsed().as_secs_f64());
    if fails == 0 {
        Ok(summary)
    } else {
        Err(format!("{summary}, {fails} failures in {:?}", failing))
    }
}

fn criterion_4() -> Outcome {
    let statements = select("all").map_err(|e| e.to_string())?;
    let primes = primes_between(7, 199);
    let sweep =
        verify_range(&statements, &primes, &[Engine::Exact, Engine::Padic], jobs()).map_err(|e| e.to_string())?;
    let exact = sweep.results.iter().filter(|r| r.engine == Engine::Exact).count();
    let padic = sweep.results.iter().filter(|r| r.engine == Engine::Padic).count();
    if exact != padic {
        return Err(format!("row counts differ: exact {exact}, padic {padic}"));
    }
    if let Some(r) = sweep.results.iter().find(|r| r.error.is_some()) {
        return Err(format!(
            "{} p={} {}: {}",
            r.label(),
            r.prime,
            r.engine,
            r.error.as_deref().unwrap_or("")
        ));
    }
    match sweep.mismatches.first() {
        None => Ok(format!("{exact} cells agree on residues and verdicts")),
        Some(m) => Err(format!(
            "{} mismatches, first {} p={}: {}",
            sweep.mismatches.len(),
            m.statement,
            m.prime,
            m.detail
        )),
    }
}

fn compositions(w: u32) -> Vec<Vec<u32>> {
    if w == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=w {
        for mut rest in compositions(w - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn exact_checks() -> Result<usize, String> {
    let f = ExactField;
    let mut count = 0;
    for w in 1..=6 {
        for c in compositions(w) {
            let idx = MhsIndex::new(c).unwrap();
            for n in 0..=12 {
                if mhs(&f, n, &idx) != mhs_bruteforce(&f, n, &idx, SumKind::Standard)
                    || odd_mhs(&f, n, &idx) != mhs_bruteforce(&f, n, &idx, SumKind::Odd)
                {
                    return Err(format!("oracle mismatch at n={n} idx={idx}"));
                }
                count += 2;
            }
        }
    }
    let i = |v: &[u32]| MhsIndex::new(v.to_vec()).unwrap();
    for r in 1..=4u32 {
        for s in 1..=4u32 {
            for n in 0..=50 {
                for kind in [SumKind::Standard, SumKind::Odd] {
                    let h = |ix: &MhsIndex| match kind {
                        SumKind::Standard => mhs(&f, n, ix),
                        SumKind::Odd => odd_mhs(&f, n, ix),
                    };
                    if h(&i(&[r])) * h(&i(&[s])) != h(&i(&[r, s])) + h(&i(&[s, r])) + h(&i(&[r + s])) {
                        return Err(format!("stuffle fails at n={n} r={r} s={s}"));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

fn criterion_5() -> Outcome {
    let exact = exact_checks()?;
    // p = 103 exceeds every denominator up to 2*50+1.
    let padic = PadicField::new(103, 6).map_err(|e| e.to_string())?;
    let padic_count = padic_checks(&padic)?;
    Ok(format!("{exact} exact and {padic_count} p-adic comparisons agree"))
}

fn padic_checks(f: &PadicField) -> Result<usize, String> {
    let mut count = 0;
    for w in 1..=6 {
        for c in compositions(w) {
            let idx = MhsIndex::new(c).unwrap();
            for n in 0..=12 {
                for kind in [SumKind::Standard, SumKind::Odd] {
                    let fast = match kind {
                        SumKind::Standard => mhs(f, n, &idx),
                        SumKind::Odd => odd_mhs(f, n, &idx),
                    };
                    let slow = mhs_bruteforce(f, n, &idx, kind);
                    if !f.sub(&fast, &slow).valuation().reaches(6) {
                        return Err(format!("p-adic oracle mismatch at n={n} idx={idx}"));
                    }
                    count += 1;
                }
            }
        }
    }
    let i = |v: &[u32]| MhsIndex::new(v.to_vec()).unwrap();
    for r in 1..=4u32 {
        for s in 1..=4u32 {
            for n in 0..=50 {
                for kind in [SumKind::Standard, SumKind::Odd] {
                    let h = |ix: &MhsIndex| match kind {
                        SumKind::Standard => mhs(f, n, ix),
                        SumKind::Odd => odd_mhs(f, n, ix),
                    };
                    let lhs = f.mul(&h(&i(&[r])), &h(&i(&[s])));
                    let rhs = f.add(&f.add(&h(&i(&[r, s])), &h(&i(&[s, r]))), &h(&i(&[r + s])));
                    if !f.sub(&lhs, &rhs).valuation().reaches(6) {
                        return Err(format!("p-adic stuffle fails at n={n} r={r} s={s}"));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

fn criterion_6() -> Outcome {
    let mut pairs = 0;
    for m in (0..=60usize).step_by(2) {
        let b = bernoulli_exact(m).map_err(|e| e.to_string())?;
        for p in primes_between(m as u64 + 2, 199) {
            let want = residue(&b, p, 1).map_err(|e| e.to_string())?;
            let got = bernoulli_mod_p(m, p).map_err(|e| e.to_string())?;
            if want != got.into() {
                return Err(format!("B_{m} mod {p}: exact {want}, triangle {got}"));
            }
            pairs += 1;
        }
    }
    for k in 1..=30u64 {
        let b = bernoulli_exact(2 * k as usize).map_err(|e| e.to_string())?;
        let expected: BigInt = (2..=2 * k + 1)
            .filter(|&q| is_prime(q) && (2 * k) % (q - 1) == 0)
            .map(BigInt::from)
            .product();
        if b.denom() != &expected {
            return Err(format!(
                "denominator of B_{} is {}, expected {expected}",
                2 * k,
                b.denom()
            ));
        }
    }
    Ok(format!(
        "{pairs} (m, p) pairs agree; von Staudt-Clausen holds for 2k <= 60"
    ))
}

fn criterion_7() -> Outcome {
    let primes = primes_between(7, 499);
    for &p in &primes {
        let h = harmonic(p - 1);
        if !valuation(&h, p).reaches(2) {
            return Err(format!("val_{p}(H_(p-1)(1)) = {}", valuation(&h, p)));
        }
        // Numerator divisibility, checked without the valuation helper.
        if !h.numer().is_multiple_of(&BigInt::from(p * p)) {
            return Err(format!("p^2 does not divide the numerator at p = {p}"));
        }
    }
    Ok(format!("{} primes", primes.len()))
}

fn criterion_8() -> Outcome {
    let mut worst: f64 = 0.0;
    for id in SeriesId::ALL {
        let s = series_limit(id, SERIES_TERMS).map_err(|e| e.to_string())?;
        if s.abs_error.is_nan() || s.abs_error >= SERIES_TOLERANCE {
            return Err(format!("{}: error {:.3e}", id.name(), s.abs_error));
        }
        worst = worst.max(s.abs_error);
    }
    Ok(format!("worst error {worst:.2e} < {SERIES_TOLERANCE:e}"))
}

fn rows_of(jobs: &str) -> Result<(serde_json::Value, i32), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_aperylab"))
        .args([
            "verify",
            "--statements",
            "all",
            "--primes",
            "7..199",
            "--format",
            "json",
            "--jobs",
            jobs,
        ])
        .output()
        .map_err(|e| e.to_string())?;
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    Ok((v["rows"].clone(), out.status.code().unwrap_or(-1)))
}

fn criterion_9() -> Outcome {
    let (a, code_a) = rows_of("1")?;
    let (b, code_b) = rows_of("8")?;
    let bytes_a = serde_json::to_vec(&a).unwrap();
    let bytes_b = serde_json::to_vec(&b).unwrap();
    if bytes_a == bytes_b && code_a == code_b {
        Ok(format!(
            "{} rows, {} bytes identical",
            a.as_array().map_or(0, Vec::len),
            bytes_a.len()
        ))
    } else {
        Err("rows differ between --jobs 1 and --jobs 8".into())
    }
}

fn criterion_10() -> Outcome {
    let drafts = select("draft").map_err(|e| e.to_string())?;
    let ids: Vec<&str> = drafts.iter().map(|s| s.id).collect();
    if ids != ["s4_sum3", "s4_inner", "mc3e21", "claim_5_864", "mc21_h2", "mc21_cube"] {
        return Err(format!("draft set {ids:?}"));
    }
    let primes = primes_between(7, 199);
    let sweep = verify_range(&drafts, &primes, &[Engine::Exact, Engine::Padic], jobs()).map_err(|e| e.to_string())?;
    if sweep.results.len() != drafts.len() * primes.len() * 2 {
        return Err(format!("{} draft rows", sweep.results.len()));
    }
    let verdicts: Vec<String> = sweep
        .summary
        .iter()
        .map(|(k, t)| format!("{k} {}/{}", t.pass, t.pass + t.fail))
        .collect();

    // A failing draft row must not count in default mode, and must in strict mode.
    let mut probe = sweep.clone();
    let mut failing: CongruenceResult = probe.results[0].clone();
    failing.pass = false;
    probe.results = vec![failing];
    if probe.required_failures(false).count() != 0 || probe.required_failures(true).count() != 1 {
        return Err("draft failures leak into the default exit code".into());
    }
    let exit = Command::new(env!("CARGO_BIN_EXE_aperylab"))
        .args([
            "verify",
            "--statements",
            "draft",
            "--primes",
            "7..199",
            "--format",
            "csv",
        ])
        .output()
        .map_err(|e| e.to_string())?;
    let csv_rows = String::from_utf8_lossy(&exit.stdout).lines().count().saturating_sub(1);
    let required: usize = Sweep::required_failures(&sweep, false)
        .filter(|r| r.status != Status::Draft)
        .count();
    if exit.status.code() != Some(0) || required != 0 || csv_rows != sweep.results.len() {
        return Err(format!("exit {:?}, csv rows {csv_rows}", exit.status.code()));
    }
    Ok(verdicts.join(", "))
}

fn jobs() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("identity suite", criterion_1),
        ("anchor values at p = 7", criterion_2),
        ("proven sweep 7..499 (p-adic)", criterion_3),
        ("engine agreement 7..199", criterion_4),
        ("MHS oracle and stuffle", criterion_5),
        ("Bernoulli dual path", criterion_6),
        ("Wolstenholme guard", criterion_7),
        ("series limits", criterion_8),
        ("determinism across --jobs", criterion_9),
        ("draft-statement report", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
