//! Acceptance gate: one line per criterion with its runtime budget.
//!
//! Runs without the libtest harness so the report is never captured. Exits
//! non-zero if any criterion fails, except the one listed in `KNOWN_RED`,
//! which must still fail and is reported as FAIL.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use dyckperm::bijections::{kappa, kappa_factored, phi, phi_inv};
use dyckperm::dyck::{enumerate_dyck, DyckPath};
use dyckperm::permutations::{all_permutations, contains_naive, enumerate_avoiders, Pattern, Permutation};
use dyckperm::polynomials::{
    a_poly, cat_qt, kd_search, macmahon_by_division, macmahon_q_catalan, specialize, tristat_gf, verify_gf_identity,
    verify_gf_identity_with, GfDenominator, Monomial, MultiPoly, Orientation, Specialization,
};
use dyckperm::verify::{run, Suite};
use dyckperm::{binom2, catalan};

/// Criteria that are reported red on purpose; see the gf-identity entry.
const KNOWN_RED: &[&str] = &["gf-identity"];

type Outcome = Result<String, String>;

/// Name, runtime budget in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn path(s: &str) -> DyckPath {
    s.parse().unwrap()
}

fn poly(s: &str) -> MultiPoly {
    s.parse().unwrap()
}

fn avoiders(n: usize, pattern: Pattern) -> Vec<Permutation> {
    enumerate_avoiders(n, &pattern.as_permutation()).unwrap().collect()
}

/// Class members by brute-force subsequence search, independent of the
/// enumerator.
fn avoiders_naive(n: usize, pattern: Pattern) -> Vec<Permutation> {
    let tau = pattern.as_permutation();
    all_permutations(n).filter(|s| !contains_naive(s, &tau)).collect()
}

fn word_descents(w: &[usize]) -> BTreeSet<usize> {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

fn word_inverse(w: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; w.len()];
    for (i, &v) in w.iter().enumerate() {
        inv[v - 1] = i + 1;
    }
    inv
}

fn suite_passes(suite: Suite, n_max: usize) -> Outcome {
    let report = run(suite, n_max).map_err(|e| e.to_string())?;
    let first_failure = report.failures().next().map(|c| format!("{}: {}", c.name, c.detail));
    match first_failure {
        None => Ok(format!("{} checks", report.checks.len())),
        Some(f) => Err(f),
    }
}

fn golden_examples() -> Outcome {
    let sigma = perm("[6,2,1,5,4,3]");
    let d = phi(&sigma).map_err(|e| e.to_string())?;
    ensure(d == path("010010110101"), || format!("phi gave {d}"))?;
    ensure((sigma.maj(), sigma.imaj(), d.maj()) == (12, 13, 25), || {
        "maj/imaj/maj(D) differ".into()
    })?;
    let k = kappa(&perm("[3,4,5,1,2,6]")).map_err(|e| e.to_string())?;
    ensure(k == path("000011100111"), || format!("kappa gave {k}"))?;
    let table = [
        ("[1,2,3,4]", "00001111"),
        ("[4,1,2,3]", "00010111"),
        ("[1,4,2,3]", "00011011"),
        ("[1,2,4,3]", "00011101"),
        ("[3,1,2,4]", "00100111"),
        ("[4,3,1,2]", "00101011"),
        ("[4,1,3,2]", "00101101"),
        ("[1,3,2,4]", "00110011"),
        ("[1,4,3,2]", "00110101"),
        ("[2,1,3,4]", "01000111"),
        ("[4,2,1,3]", "01001011"),
        ("[2,1,4,3]", "01001101"),
        ("[3,2,1,4]", "01010011"),
        ("[4,3,2,1]", "01010101"),
    ];
    for (s, p) in table {
        let got = phi(&perm(s)).map_err(|e| e.to_string())?;
        ensure(got == path(p), || format!("phi({s}) = {got}, expected {p}"))?;
    }
    Ok("3 examples, 14 table pairs".into())
}

fn bijectivity() -> Outcome {
    let counts = [1, 2, 5, 14, 42, 132, 429, 1430, 4862];
    for (n, &expected) in (1..=9).zip(&counts) {
        let class = avoiders(n, Pattern::P231);
        ensure(class.len() == expected, || format!("|S_{n}(231)| = {}", class.len()))?;
        let mut images = BTreeSet::new();
        for s in &class {
            let d = phi(s).map_err(|e| e.to_string())?;
            ensure(&phi_inv(&d) == s, || format!("phi_inv(phi({s})) != {s}"))?;
            images.insert(d);
        }
        let paths: BTreeSet<DyckPath> = enumerate_dyck(n).unwrap().collect();
        ensure(paths.len() == expected, || format!("|D_{n}| = {}", paths.len()))?;
        ensure(images == paths, || format!("image of phi is not D_{n}"))?;
        for d in &paths {
            ensure(&phi(&phi_inv(d)).unwrap() == d, || format!("phi(phi_inv({d})) != {d}"))?;
        }
    }
    Ok("n = 1..9, counts 1..4862".into())
}

fn statistic_transport() -> Outcome {
    let mut cases = 0;
    for n in 1..=9 {
        for s in avoiders(n, Pattern::P231) {
            let d = phi(&s).map_err(|e| e.to_string())?;
            let st = d.stats();
            ensure(
                st.maj == s.maj() + s.imaj() && st.maj1 == s.maj() && st.maj0 == s.imaj(),
                || format!("{s} -> {d}: maj={} maj1={} maj0={}", st.maj, st.maj1, st.maj0),
            )?;
            cases += 1;
        }
    }
    Ok(format!("{cases} permutations"))
}

fn lemma_suite() -> Outcome {
    let w = perm("[2,4,1,3]");
    ensure(
        !contains_naive(&w, &Pattern::P123.as_permutation())
            && word_descents(w.word()).len() == 1
            && word_descents(&word_inverse(w.word())).len() == 2,
        || "witness [2,4,1,3] does not separate des and ides".into(),
    )?;
    // equal descent counts against the naive class oracle
    for n in 1..=8 {
        for pattern in [Pattern::P132, Pattern::P231, Pattern::P312, Pattern::P213] {
            let class = avoiders_naive(n, pattern);
            ensure(class.len() as u64 == catalan(n), || {
                format!("|S_{n}({pattern})| = {}", class.len())
            })?;
            for s in class {
                let (d, i) = (
                    word_descents(s.word()).len(),
                    word_descents(&word_inverse(s.word())).len(),
                );
                ensure(d == i, || format!("{s} avoids {pattern} with des={d} ides={i}"))?;
            }
        }
    }
    suite_passes(Suite::Lemmas, 8)
}

fn polynomials() -> Outcome {
    let printed = [
        "1",
        "q+t",
        "q^3+q^2t+qt^2+t^3+qt",
        "q^6+q^5t+q^4t^2+2q^3t^3+q^2t^4+qt^5+t^6+q^4t+q^3t^2+q^2t^3+qt^4+q^3t+qt^3",
    ];
    for (n, expected) in (1..=4).zip(printed) {
        let a = a_poly(n).unwrap();
        ensure(a == poly(expected), || format!("A_{n} = {a}"))?;
    }
    let cat4 = cat_qt(4).unwrap();
    let printed_cat4 = "q^6+q^5t+q^4t^2+q^3t^3+q^2t^4+qt^5+t^6+q^4t+q^3t^2+q^2t^3+qt^4+q^3t+q^2t^2+qt^3";
    ensure(cat4 == poly(printed_cat4), || format!("Cat_4 = {cat4}"))?;
    let diff = &a_poly(4).unwrap() - &cat4;
    ensure(diff == poly("q^3t^3 - q^2t^2"), || format!("A_4 - Cat_4 = {diff}"))?;
    Ok("A_1..A_4, Cat_4, A_4 - Cat_4".into())
}

fn symmetry() -> Outcome {
    for n in 1..=8 {
        let a = a_poly(n).unwrap();
        ensure(a.swap_qt() == a, || format!("A_{n} not symmetric"))?;
        let c = cat_qt(n).unwrap();
        ensure(c.swap_qt() == c, || format!("Cat_{n} not symmetric"))?;
    }
    Ok("A_n and Cat_n, n = 1..8".into())
}

fn specializations() -> Outcome {
    for n in 1..=8 {
        let shift = Specialization::TToQInverseShifted(n);
        let a = specialize(&a_poly(n).unwrap(), shift).unwrap();
        let maj_sum = macmahon_q_catalan(n).unwrap();
        let quotient = macmahon_by_division(n).unwrap();
        let c = specialize(&cat_qt(n).unwrap(), shift).unwrap();
        // Σ q^maj(D) from the raw step words
        let mut oracle = MultiPoly::zero();
        for d in enumerate_dyck(n).unwrap() {
            let w = d.to_string().into_bytes();
            let maj: usize = (1..w.len()).filter(|&i| w[i - 1] == b'1' && w[i] == b'0').sum();
            oracle = &oracle + &MultiPoly::term(Monomial::qt(maj as u32, 0), 1);
        }
        ensure(
            a == oracle && maj_sum == oracle && quotient == oracle && c == oracle,
            || format!("n={n}: A {a}, maj {maj_sum}, division {quotient}, Cat {c}, oracle {oracle}"),
        )?;
    }
    Ok("four routes agree, n = 1..8".into())
}

fn gf_identity() -> Outcome {
    let printed = verify_gf_identity(6).map_err(|e| e.to_string())?;
    let shifted = verify_gf_identity_with(6, GfDenominator::Shifted).map_err(|e| e.to_string())?;
    let shifted_note = if shifted.iter().all(MultiPoly::is_zero) {
        "shifted denominator (1+z)(1+qz)..(1+q^n z)(1+tz)..(1+t^n z) vanishes through z^6"
    } else {
        "shifted denominator also fails"
    };
    match printed.iter().position(|r| !r.is_zero()) {
        None => Ok("residuals zero through z^6".into()),
        Some(k) => Err(format!(
            "printed denominator leaves residual {} at z^{k}; {shifted_note}",
            printed[k]
        )),
    }
}

fn factorization() -> Outcome {
    for n in 1..=8 {
        for s in avoiders(n, Pattern::P132) {
            let k = kappa(&s).map_err(|e| e.to_string())?;
            ensure(kappa_factored(&s).unwrap() == k, || {
                format!("kappa({s}) != psi(phi(rho({s})))")
            })?;
            let v = k.valleys();
            let ides: BTreeSet<usize> = word_descents(&word_inverse(s.word()));
            let reversed: BTreeSet<usize> = ides.iter().map(|&j| n - j).collect();
            ensure(v.x_set() == word_descents(s.word()) && v.y_set() == reversed, || {
                format!("valleys of kappa({s})")
            })?;
            let w = s.word();
            let heights: Vec<usize> = (0..n)
                .map(|i| w[i + 1..].iter().filter(|&&x| x > w[i]).count())
                .collect();
            let from_heights: BTreeSet<usize> = word_descents(w).iter().map(|&i| n - i - heights[i - 1]).collect();
            ensure(from_heights == ides, || format!("iDes({s}) from heights"))?;
        }
    }
    Ok("S_n(132), n = 1..8".into())
}

fn inv_area() -> Outcome {
    let mut cases = 0;
    for n in 1..=8 {
        for s in avoiders(n, Pattern::P231) {
            let w = s.word();
            let inv = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| w[i] > w[j])
                .count();
            // area as full cells between the path and the diagonal, row by row
            let d = phi(&s).unwrap().psi_complement();
            let steps = d.to_string().into_bytes();
            let (mut north, mut east, mut area) = (0usize, 0usize, 0usize);
            for &c in &steps {
                if c == b'0' {
                    north += 1;
                } else {
                    area += north - east - 1;
                    east += 1;
                }
            }
            ensure(inv == area && d.area() == area, || {
                format!("{s}: inv={inv} area={area}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} permutations"))
}

fn tristat_oracle(n: usize, pattern: Pattern, complemented: bool) -> MultiPoly {
    let c = binom2(n) as u32;
    let mut total = MultiPoly::zero();
    for s in avoiders_naive(n, pattern) {
        let des = word_descents(s.word());
        let ides = word_descents(&word_inverse(s.word()));
        let (d, m, i) = (
            des.len() as u32,
            des.iter().sum::<usize>() as u32,
            ides.iter().sum::<usize>() as u32,
        );
        let m = if complemented {
            Monomial::new(n as u32 - 1 - d, c - m, c - i)
        } else {
            Monomial::new(d, m, i)
        };
        total = &total + &MultiPoly::term(m, 1);
    }
    total
}

fn tristat() -> Outcome {
    let at_a_one = |p: &MultiPoly| p.map_monomials(|m| Monomial::qt(m.q, m.t));
    for n in 1..=7 {
        for (lhs, rhs) in [
            (Pattern::P231, Pattern::P312),
            (Pattern::P132, Pattern::P213),
            (Pattern::P321, Pattern::P123),
        ] {
            let plain = tristat_gf(n, lhs, Orientation::Plain).unwrap();
            let comp = tristat_gf(n, rhs, Orientation::Complemented).unwrap();
            ensure(plain == tristat_oracle(n, lhs, false), || {
                format!("tristat({n},{lhs}) != oracle")
            })?;
            ensure(comp == tristat_oracle(n, rhs, true), || {
                format!("tristat({n},{rhs},compl) != oracle")
            })?;
            ensure(plain == comp, || format!("n={n}: {lhs} plain != {rhs} complemented"))?;
            ensure(at_a_one(&plain) == at_a_one(&comp), || {
                format!("n={n}: a=1 specialization differs")
            })?;
        }
    }
    Ok("231/312, 132/213, 321/123 and a=1, n = 1..7".into())
}

fn tableaux() -> Outcome {
    suite_passes(Suite::RskJ, 7)
}

fn kd() -> Outcome {
    let four = kd_search(4).map_err(|e| e.to_string())?;
    let found: BTreeSet<String> = four.assignments.iter().map(|a| a.to_json().to_string()).collect();
    let expected: BTreeSet<String> = [r#"{"01010011":1}"#, r#"{"00011101":1}"#]
        .into_iter()
        .map(String::from)
        .collect();
    ensure(four.exhaustive && found == expected, || {
        format!("n=4 assignments {found:?}")
    })?;
    for n in 1..=8 {
        let search = kd_search(n).map_err(|e| e.to_string())?;
        let target = cat_qt(n).unwrap();
        ensure(!search.assignments.is_empty(), || format!("n={n}: none found"))?;
        for a in &search.assignments {
            ensure(a.shifted_polynomial(n).unwrap() == target, || {
                format!("n={n}: shifted sum != Cat_n")
            })?;
        }
    }
    Ok("n=4 exactly two; assignment found for n = 1..8".into())
}

fn psi_swap() -> Outcome {
    let (a, b) = (path("01010011"), path("00011101"));
    ensure(a.psi_complement() == b && b.psi_complement() == a, || {
        format!("Psi(01010011) = {}", a.psi_complement())
    })?;
    Ok("01010011 <-> 00011101".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        ("golden-examples", 1, golden_examples),
        ("phi-bijectivity", 10, bijectivity),
        ("statistic-transport", 10, statistic_transport),
        ("lemma-suite", 10, lemma_suite),
        ("polynomials", 1, polynomials),
        ("symmetry", 30, symmetry),
        ("specializations", 30, specializations),
        ("gf-identity", 5, gf_identity),
        ("kappa-factorization", 10, factorization),
        ("inv-area", 10, inv_area),
        ("tristat-identities", 30, tristat),
        ("tableaux", 30, tableaux),
        ("kd-assignments", 60, kd),
        ("psi-swap", 1, psi_swap),
    ];
    let mut unexpected = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(budget) => Err(format!("{detail}; over budget")),
            other => other,
        };
        let known_red = KNOWN_RED.contains(&name);
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d.clone()),
            Err(d) => ("FAIL", d.clone()),
        };
        let tag = if known_red { " [known red]" } else { "" };
        println!(
            "{status}  {name:<20} {:>7.2}s / {budget}s  {detail}{tag}",
            elapsed.as_secs_f64()
        );
        if outcome.is_ok() == known_red {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        println!("acceptance: all criteria as expected");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {unexpected} unexpected outcome(s)");
        ExitCode::FAILURE
    }
}
