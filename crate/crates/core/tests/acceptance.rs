//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always print; exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use gzcz::ccc::{gcp_to_ccc, kronecker_ccc, seed, transpose_ccc, verify_ccc, SEED_NAMES};
use gzcz::correlation::{accf, pacf, pccf, value_add, value_mul, CorrelationProfile};
use gzcz::golay::{build_zcz_pair, golay_mate, GolayPair, SignQuadruple};
use gzcz::search::{canonicalize, search_ccc, SearchConfig};
use gzcz::zczset::{build_zcz_set, optimality_factor, verify_golay_zcz, Alphabet};
use gzcz::{CompleteComplementaryCode, ComplexValue, PhaseSequence};
use num_rational::Ratio;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bin(s: &[i8]) -> PhaseSequence {
    PhaseSequence::from_signs(s).unwrap()
}

fn binary10() -> GolayPair {
    GolayPair::new(
        bin(&[1, 1, -1, 1, 1, 1, 1, 1, -1, -1]),
        bin(&[1, 1, -1, 1, -1, 1, -1, -1, 1, 1]),
    )
    .unwrap()
}

fn quad5() -> GolayPair {
    // a = (1, i, -i, -1, i), b = (1, 1, 1, i, -i)
    let q = |e: &[u32]| PhaseSequence::new(4, e.to_vec()).unwrap();
    GolayPair::new(q(&[0, 1, 3, 2, 1]), q(&[0, 0, 0, 1, 3])).unwrap()
}

fn signs(x1: i8, x2: i8, x3: i8, x4: i8) -> SignQuadruple {
    SignQuadruple::new(x1, x2, x3, x4).unwrap()
}

fn binary_pair_reproduction() -> Check {
    let pair = binary10();
    let mate = golay_mate(&pair).map_err(|e| e.to_string())?;
    let (p, q) = build_zcz_pair(&pair, &mate, signs(1, 1, 1, -1)).map_err(|e| e.to_string())?;
    let mut rp = vec![40];
    rp.extend([0; 10]);
    rp.extend([
        -4, -8, 4, 8, -4, 0, 4, 0, 12, 0, 12, 0, 4, 0, -4, 8, 4, -8, -4,
    ]);
    rp.extend([0; 10]);
    let mut rq = vec![40];
    rq.extend([0; 10]);
    rq.extend([
        4, 8, -4, -8, 4, 0, -4, 0, -12, 0, -12, 0, -4, 0, 4, -8, -4, 8, 4,
    ]);
    rq.extend([0; 10]);
    let mut rpq = vec![0; 11];
    rpq.extend([
        -4, -8, 4, 16, 4, 0, 4, -8, -4, 0, 4, -8, 12, 0, 12, 0, -4, 8, 4,
    ]);
    rpq.extend([0; 10]);
    let got = (
        pacf(&p).real_integers(),
        pacf(&q).real_integers(),
        pccf(&p, &q).unwrap().real_integers(),
    );
    ensure(got == (Some(rp), Some(rq), Some(rpq)), || {
        format!("profiles differ from the printed vectors: {got:?}")
    })
}

fn quadriphase_pair_reproduction() -> Check {
    let pair = quad5();
    let mate = golay_mate(&pair).map_err(|e| e.to_string())?;
    let (p, q) = build_zcz_pair(&pair, &mate, signs(1, 1, 1, -1)).map_err(|e| e.to_string())?;
    ensure(p.modulus() == 4 && pacf(&p).is_exact(), || {
        "not on the exact Gaussian path".into()
    })?;
    let r = verify_golay_zcz(&[p, q], 5).map_err(|e| e.to_string())?;
    ensure(r.pass && r.length == 20 && r.set_size == 2, || {
        format!("{r:?}")
    })
}

fn length4_code_set_reproduction() -> Check {
    let code = seed("example3-N4").map_err(|e| e.to_string())?;
    let set = build_zcz_set(&code).map_err(|e| e.to_string())?;
    let r = verify_golay_zcz(&set, 12).map_err(|e| e.to_string())?;
    let c = optimality_factor(&r, Alphabet::Polyphase);
    ensure(
        r.pass && r.z_min == 12 && r.complementary && c == Some(Ratio::new(3, 4)),
        || format!("{r:?}, C = {c:?}"),
    )
}

fn searched_codes_verification() -> Check {
    for n in [3, 5, 7, 11, 13] {
        let code = seed(&format!("table3-N{n}")).map_err(|e| e.to_string())?;
        ensure(code.len() == n && verify_ccc(&code), || {
            format!("N = {n} fails")
        })?;
    }
    Ok(())
}

fn kronecker_codes() -> Check {
    let get = |name: &str| seed(name).map_err(|e| e.to_string());
    let a = kronecker_ccc(&get("table3-N3")?, &get("table3-N5")?).map_err(|e| e.to_string())?;
    ensure(a.set_size() == 4 && a.len() == 60 && verify_ccc(&a), || {
        "table3-N3 x table3-N5 is not a (4,4,60) CCC".into()
    })?;
    let b = kronecker_ccc(&get("example3-N4")?, &get("table3-N3")?).map_err(|e| e.to_string())?;
    ensure(b.set_size() == 4 && b.len() == 48 && verify_ccc(&b), || {
        "example3-N4 x table3-N3 is not a (4,4,48) CCC".into()
    })
}

fn random_seq(rng: &mut StdRng, q: u32, n: usize) -> PhaseSequence {
    PhaseSequence::new(q, (0..n).map(|_| rng.gen_range(0..q)).collect()).unwrap()
}

fn kronecker_rhs(
    cx: &CorrelationProfile,
    cy: &CorrelationProfile,
    n2: isize,
    tau: isize,
) -> ComplexValue {
    let k1 = tau.div_euclid(n2);
    let k2 = tau.rem_euclid(n2);
    value_add(
        value_mul(cx.at(k1), cy.at(k2)),
        value_mul(cx.at(k1 + 1), cy.at(k2 - n2)),
    )
}

fn kronecker_identity() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for trial in 0..1000 {
        let q = [2, 4, 8][trial % 3];
        let (n1, n2) = (rng.gen_range(1..=12), rng.gen_range(1..=12));
        let x1 = random_seq(&mut rng, q, n1);
        let x2 = random_seq(&mut rng, q, n1);
        let y1 = random_seq(&mut rng, q, n2);
        let y2 = random_seq(&mut rng, q, n2);
        let lhs = accf(&x1.kronecker(&y1), &x2.kronecker(&y2)).unwrap();
        let cx = accf(&x1, &x2).unwrap();
        let cy = accf(&y1, &y2).unwrap();
        let exact = q != 8;
        ensure(lhs.is_exact() == exact, || {
            format!("trial {trial}: wrong arithmetic path")
        })?;
        let eps = lhs.epsilon();
        let big = (n1 * n2) as isize;
        for tau in 1 - big..big {
            let l = lhs.at(tau);
            let r = kronecker_rhs(&cx, &cy, n2 as isize, tau);
            let ok = if exact {
                l == r
            } else {
                (l.to_complex64() - r.to_complex64()).norm() <= eps
            };
            ensure(ok, || {
                format!(
                    "trial {trial} (q={q}, N1={n1}, N2={n2}) fails at tau={tau}: {l:?} vs {r:?}"
                )
            })?;
        }
    }
    Ok(())
}

fn pair_construction_suite() -> Check {
    let mut pairs = GolayPair::unit()
        .doubling_family(4)
        .map_err(|e| e.to_string())?;
    pairs.remove(0);
    pairs.extend(binary10().doubling_family(1).map_err(|e| e.to_string())?);
    let lengths: BTreeSet<usize> = pairs.iter().map(GolayPair::len).collect();
    ensure(lengths == BTreeSet::from([2, 4, 8, 10, 16, 20]), || {
        format!("unexpected lengths {lengths:?}")
    })?;
    for pair in &pairs {
        let n = pair.len();
        let mate = golay_mate(pair).map_err(|e| e.to_string())?;
        for s in SignQuadruple::all() {
            let (p, q) = build_zcz_pair(pair, &mate, s).map_err(|e| e.to_string())?;
            let r = verify_golay_zcz(&[p, q], n).map_err(|e| e.to_string())?;
            let c = optimality_factor(&r, Alphabet::Binary);
            ensure(
                r.pass && r.z_min == n && c == Some(Ratio::from_integer(1)),
                || format!("N = {n}, signs {:?}: {r:?}, C = {c:?}", s.signs()),
            )?;
        }
    }
    Ok(())
}

fn search_suite() -> Check {
    let mut cfg = SearchConfig::new(3);
    cfg.timeout = Duration::from_secs(60);
    let found = search_ccc(&cfg).map_err(|e| e.to_string())?;
    ensure(
        !found.codes.is_empty() && found.codes.iter().all(verify_ccc),
        || format!("N = 3 search found {} codes", found.codes.len()),
    )?;

    let canonical = |pruning: bool| -> Result<BTreeSet<Vec<Vec<u32>>>, String> {
        let mut cfg = SearchConfig::new(1);
        cfg.max_solutions = usize::MAX;
        cfg.symmetry_reduction = false;
        cfg.pruning = pruning;
        let out = search_ccc(&cfg).map_err(|e| e.to_string())?;
        out.codes
            .iter()
            .map(|c| {
                let c = canonicalize(c).map_err(|e| e.to_string())?;
                Ok(c.sets()
                    .iter()
                    .flat_map(|s| s.rows())
                    .map(|r| r.exponents().unwrap().to_vec())
                    .collect())
            })
            .collect()
    };
    let (pruned, full) = (canonical(true)?, canonical(false)?);
    ensure(!pruned.is_empty() && pruned == full, || {
        format!(
            "N = 1: {} pruned vs {} unpruned canonical forms",
            pruned.len(),
            full.len()
        )
    })
}

fn bound_suite() -> Check {
    let mut sets: Vec<(String, Vec<PhaseSequence>)> = Vec::new();
    let mut pairs = GolayPair::unit()
        .doubling_family(4)
        .map_err(|e| e.to_string())?;
    pairs.extend(binary10().doubling_family(1).map_err(|e| e.to_string())?);
    pairs.push(quad5());
    for pair in &pairs {
        let mate = golay_mate(pair).map_err(|e| e.to_string())?;
        for s in SignQuadruple::all() {
            let (p, q) = build_zcz_pair(pair, &mate, s).map_err(|e| e.to_string())?;
            sets.push((format!("pair N={}", pair.len()), vec![p, q]));
        }
    }

    let mut codes: Vec<(String, CompleteComplementaryCode, usize)> = Vec::new();
    for pair in &pairs {
        let mate = golay_mate(pair).map_err(|e| e.to_string())?;
        let code = gcp_to_ccc(pair, &mate).map_err(|e| e.to_string())?;
        codes.push((format!("gcp N={}", pair.len()), code, 2));
    }
    for name in SEED_NAMES {
        let code = seed(name).map_err(|e| e.to_string())?;
        codes.push((format!("{name} transposed"), transpose_ccc(&code), 4));
        codes.push((name.to_string(), code, 4));
    }
    for (name, code, m) in &codes {
        let set = build_zcz_set(code).map_err(|e| e.to_string())?;
        let r = verify_golay_zcz(&set, (m - 1) * code.len()).map_err(|e| e.to_string())?;
        let c = optimality_factor(&r, Alphabet::Polyphase);
        let want = Ratio::new(*m as u64 - 1, *m as u64);
        ensure(r.pass && c == Some(want), || {
            format!("{name}: C = {c:?}, expected {want}; {r:?}")
        })?;
        sets.push((name.clone(), set));
    }

    for (name, set) in &sets {
        let r = verify_golay_zcz(set, 0).map_err(|e| e.to_string())?;
        ensure(!r.exceeds_polyphase_bound(), || {
            format!(
                "{name}: Z_min {} > floor(L/M) = {}",
                r.z_min,
                r.length / r.set_size
            )
        })?;
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "1 length-40 binary pair profiles exact",
            binary_pair_reproduction,
            Duration::from_secs(1),
        ),
        (
            "2 length-20 quadriphase pair, Z = 5, exact q = 4",
            quadriphase_pair_reproduction,
            Duration::from_secs(1),
        ),
        (
            "3 set from the (4,4,4) code, Z = 12, C = 3/4",
            length4_code_set_reproduction,
            Duration::from_secs(1),
        ),
        (
            "4 searched (4,4,N) codes verify",
            searched_codes_verification,
            Duration::from_secs(1),
        ),
        (
            "5 Kronecker codes (4,4,60) and (4,4,48)",
            kronecker_codes,
            Duration::from_secs(10),
        ),
        (
            "6 Kronecker correlation identity, 1000 pairs",
            kronecker_identity,
            Duration::from_secs(30),
        ),
        (
            "7 pair construction over doubling families",
            pair_construction_suite,
            Duration::from_secs(30),
        ),
        (
            "8 search N = 3 and N = 1 pruning agreement",
            search_suite,
            Duration::from_secs(60),
        ),
        (
            "9 bound sanity and C = (M-1)/M",
            bound_suite,
            Duration::from_secs(60),
        ),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            ensure(elapsed < limit, || {
                format!("took {elapsed:?}, limit {limit:?}")
            })
        });
        match result {
            Ok(()) => println!("PASS  {name}  ({elapsed:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name}  ({elapsed:.2?}): {msg}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
