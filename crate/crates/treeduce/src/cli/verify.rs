//! The `verify` subcommand: named, depth-scalable checks over every part
//! of the engine, one report line per check.
//!
//! Randomized checks use a fixed-seed generator, so a given depth always
//! examines the same cases and the report is byte-stable.

use std::collections::HashSet;
use std::fmt::Write as _;

use super::{CommandResult, Parsed};
use crate::automata::{
    catalog, morphisms_equal, pair_state, product, PartialRun, StateId, Transducer, TransducerClass,
};
use crate::hanoi::{self, graph, gray, Parity, Recognition};
use crate::semigroup::{self, GeneratorWord};
use crate::sequences;
use crate::words::{to_digits_lsd, Word};

const SUITES: [&str; 5] = ["sequences", "gray", "hanoi", "semigroup", "engine"];
const ENGINE_CASES: u64 = 10_000;

type CheckFn = fn(usize) -> Result<Option<String>, String>;

struct Check {
    suite: &'static str,
    name: &'static str,
    run: CheckFn,
}

pub(super) fn verify_command(parsed: &Parsed) -> CommandResult {
    let suite = parsed
        .positionals
        .first()
        .map(String::as_str)
        .unwrap_or("all");
    if suite != "all" && !SUITES.contains(&suite) {
        return CommandResult::usage(format!("unknown suite {suite:?}"));
    }
    let depth = match parsed.flag_usize("depth") {
        Ok(d) => d.unwrap_or(6),
        Err(msg) => return CommandResult::usage(msg),
    };
    if depth == 0 || depth > 14 {
        return CommandResult::usage("--depth must be between 1 and 14");
    }
    let mut stdout = String::new();
    let mut failures = 0usize;
    let mut total = 0usize;
    for check in checks() {
        if suite != "all" && suite != check.suite {
            continue;
        }
        total += 1;
        match (check.run)(depth) {
            Ok(None) => writeln!(stdout, "ok {}/{}", check.suite, check.name).unwrap(),
            Ok(Some(note)) => {
                writeln!(stdout, "ok {}/{} ({note})", check.suite, check.name).unwrap()
            }
            Err(msg) => {
                failures += 1;
                writeln!(stdout, "FAIL {}/{}: {msg}", check.suite, check.name).unwrap();
            }
        }
    }
    writeln!(
        stdout,
        "{} checks, {} failed (depth {})",
        total, failures, depth
    )
    .unwrap();
    if failures == 0 {
        CommandResult::ok(stdout)
    } else {
        CommandResult::failed(stdout, String::new())
    }
}

fn checks() -> Vec<Check> {
    vec![
        Check {
            suite: "sequences",
            name: "at-terms",
            run: check_at_terms,
        },
        Check {
            suite: "sequences",
            name: "w-agreement",
            run: check_w_agreement,
        },
        Check {
            suite: "sequences",
            name: "w-cube-free",
            run: check_cube_free,
        },
        Check {
            suite: "sequences",
            name: "l-agreement",
            run: check_l_agreement,
        },
        Check {
            suite: "gray",
            name: "code-property",
            run: check_gray_codes,
        },
        Check {
            suite: "gray",
            name: "alternation",
            run: check_alternation,
        },
        Check {
            suite: "gray",
            name: "lamplighter",
            run: check_lamplighter,
        },
        Check {
            suite: "hanoi",
            name: "b-direction",
            run: check_b_direction,
        },
        Check {
            suite: "hanoi",
            name: "b-index",
            run: check_b_index,
        },
        Check {
            suite: "hanoi",
            name: "optimal-configs",
            run: check_optimal_configs,
        },
        Check {
            suite: "hanoi",
            name: "recognition",
            run: check_recognition,
        },
        Check {
            suite: "hanoi",
            name: "parity-readouts",
            run: check_parity_readouts,
        },
        Check {
            suite: "semigroup",
            name: "relations",
            run: check_relations,
        },
        Check {
            suite: "semigroup",
            name: "powers",
            run: check_powers,
        },
        Check {
            suite: "semigroup",
            name: "growth",
            run: check_growth,
        },
        Check {
            suite: "semigroup",
            name: "orders",
            run: check_orders,
        },
        Check {
            suite: "semigroup",
            name: "transitivity",
            run: check_transitivity,
        },
        Check {
            suite: "engine",
            name: "length-prefix",
            run: check_length_prefix,
        },
        Check {
            suite: "engine",
            name: "composition",
            run: check_composition,
        },
        Check {
            suite: "engine",
            name: "bisim-brute",
            run: check_bisim_brute,
        },
        Check {
            suite: "engine",
            name: "inverse-roundtrip",
            run: check_inverse_roundtrip,
        },
    ]
}

fn fail(msg: impl Into<String>) -> Result<Option<String>, String> {
    Err(msg.into())
}

fn pow(base: u64, exp: usize) -> u64 {
    base.pow(exp as u32)
}

const AT_TERMS: [u64; 27] = [
    1, 3, 1, 1, 9, 1, 1, 3, 1, 1, 3, 1, 1, 27, 1, 1, 3, 1, 1, 3, 1, 1, 9, 1, 1, 3, 1,
];

fn check_at_terms(_depth: usize) -> Result<Option<String>, String> {
    let (t, q) = sequences::at_machine();
    let got = sequences::transducer_sequence(&t, q, 0, 27).map_err(|e| e.to_string())?;
    if got != AT_TERMS {
        return fail(format!("expected {AT_TERMS:?}, got {got:?}"));
    }
    Ok(None)
}

fn check_w_agreement(depth: usize) -> Result<Option<String>, String> {
    let count = pow(3, depth.min(9));
    let machine = sequences::automatic_sequence(&catalog::a02(), 0, count);
    let morphic = sequences::w_system()
        .limit(count as usize)
        .map_err(|e| e.to_string())?;
    let blocks = sequences::block_sequence(sequences::BlockKind::W, depth.min(9) as u32)
        .map_err(|e| e.to_string())?;
    for i in 0..count as usize {
        let a = machine[i].value();
        let b = morphic[i];
        let c = blocks[i];
        let d = sequences::sign_by_ternary_digits(i as u64).value();
        if !(a == b && b == c && c == d) {
            return fail(format!(
                "index {i}: machine {a}, substitution {b}, blocks {c}, digits {d}"
            ));
        }
    }
    let first: Vec<i64> = machine.iter().take(9).map(|s| s.value()).collect();
    if first != [1, 1, -1, 1, 1, -1, 1, -1, -1] {
        return fail(format!("first nine terms wrong: {first:?}"));
    }
    Ok(None)
}

fn check_cube_free(depth: usize) -> Result<Option<String>, String> {
    let len = pow(3, depth.min(7)) as usize;
    let prefix = sequences::w_system()
        .limit(len)
        .map_err(|e| e.to_string())?;
    match sequences::find_cube(&prefix) {
        None => Ok(None),
        Some(cube) => fail(format!(
            "cube of period {} at position {} in the first {len} terms",
            cube.period, cube.position
        )),
    }
}

fn check_l_agreement(depth: usize) -> Result<Option<String>, String> {
    let count = pow(3, depth.min(8));
    let (t, q) = sequences::l_machine();
    let machine = sequences::transducer_sequence(&t, q, 0, count).map_err(|e| e.to_string())?;
    let morphic = sequences::l_system()
        .limit(count as usize)
        .map_err(|e| e.to_string())?;
    let sums = sequences::weighted_partial_sum_prefix(count).map_err(|e| e.to_string())?;
    if machine[0] != 0 {
        return fail("first term is not 0");
    }
    for i in 0..count as usize {
        let a = machine[i];
        let b = sequences::l_decomposition(i as u64)
            .map_err(|e| e.to_string())?
            .ell;
        let c = sums[i];
        let d = morphic[i];
        if !(a == b && c == a as i64 && d == a as i64) {
            return fail(format!(
                "index {i}: machine {a}, decomposition {b}, partial sums {c}, substitution {d}"
            ));
        }
    }
    Ok(None)
}

fn gray_code_property(base: u8, n: usize) -> Result<(), String> {
    let count = pow(u64::from(base), n);
    let mut seen = HashSet::with_capacity(count as usize);
    let mut prev: Option<Word> = None;
    for i in 0..count {
        let row = gray::gray_row(base, i, n).map_err(|e| e.to_string())?;
        if !seen.insert(row.clone()) {
            return Err(format!("base {base} length {n}: row {i} repeats"));
        }
        if let Some(p) = &prev {
            let diff = p
                .letters()
                .iter()
                .zip(row.letters())
                .filter(|(a, b)| a != b)
                .count();
            if diff != 1 {
                return Err(format!(
                    "base {base} length {n}: rows {} and {i} differ in {diff} places",
                    i - 1
                ));
            }
        }
        prev = Some(row);
    }
    if seen.len() as u64 != count {
        return Err(format!(
            "base {base} length {n}: {} of {count} rows",
            seen.len()
        ));
    }
    Ok(())
}

const K3_READOUT: [u64; 18] = [0, 1, 2, 5, 4, 3, 6, 7, 8, 17, 16, 15, 12, 13, 14, 11, 10, 9];

fn check_gray_codes(depth: usize) -> Result<Option<String>, String> {
    for n in 1..=depth.min(9) {
        gray_code_property(3, n)?;
    }
    for n in 1..=(depth + 5).min(14) {
        gray_code_property(2, n)?;
    }
    for (i, &v) in K3_READOUT.iter().enumerate() {
        let got = gray::gray_readout(3, i as u64).map_err(|e| e.to_string())?;
        if got != v {
            return fail(format!("ternary readout at {i}: expected {v}, got {got}"));
        }
    }
    Ok(None)
}

fn check_alternation(depth: usize) -> Result<Option<String>, String> {
    let ah = catalog::ah();
    let a = ah.state("a").expect("catalog state");
    let c = ah.state("c").expect("catalog state");
    let n3 = depth.min(7);
    let mut walk = Word::empty(3).unwrap().padded_to(n3).unwrap();
    for i in 0..pow(3, n3) {
        if i > 0 {
            let gen = if i % 2 == 1 { a } else { c };
            walk = ah.apply(gen, &walk).map_err(|e| e.to_string())?;
        }
        if walk != gray::gray_row(3, i, n3).map_err(|e| e.to_string())? {
            return fail(format!("ternary walk diverges at step {i}"));
        }
        if i % 97 == 0
            && gray::alternation_row(&ah, a, c, i, n3).map_err(|e| e.to_string())? != walk
        {
            return fail(format!(
                "ternary alternation row {i} disagrees with the walk"
            ));
        }
    }

    let ad = catalog::ad();
    let f = ad.state("f").expect("catalog state");
    let g = ad.state("g").expect("catalog state");
    let n2 = (depth + 4).min(10);
    let mut walk = Word::empty(2).unwrap().padded_to(n2).unwrap();
    for i in 0..pow(2, n2) {
        if i > 0 {
            let gen = if i % 2 == 1 { f } else { g };
            walk = ad.apply(gen, &walk).map_err(|e| e.to_string())?;
        }
        if walk != gray::gray_row(2, i, n2).map_err(|e| e.to_string())? {
            return fail(format!("binary walk diverges at step {i}"));
        }
        if i % 97 == 0
            && gray::alternation_row(&ad, f, g, i, n2).map_err(|e| e.to_string())? != walk
        {
            return fail(format!(
                "binary alternation row {i} disagrees with the walk"
            ));
        }
    }
    Ok(None)
}

fn check_lamplighter(depth: usize) -> Result<Option<String>, String> {
    let t = catalog::al2();
    let l0 = t.state("l0").expect("catalog state");
    let first: Vec<u64> = (0..8)
        .map(|i| sequences::sf_transducer_sequence(&t, l0, i, 3))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    if first != [0, 1, 3, 2, 6, 7, 5, 4] {
        return fail(format!("first eight terms wrong: {first:?}"));
    }
    let n = (depth + 4).min(10);
    for i in 0..pow(2, n) {
        let sf = sequences::sf_transducer_sequence(&t, l0, i, n).map_err(|e| e.to_string())?;
        let readout = gray::gray_readout(2, i).map_err(|e| e.to_string())?;
        if sf != readout {
            return fail(format!("index {i}: SF value {sf}, code readout {readout}"));
        }
        let row = gray::gray_row(2, i, n).map_err(|e| e.to_string())?;
        let via_machine = t
            .apply(l0, &to_digits_lsd(i, 2).padded_to(n).unwrap().reversed())
            .unwrap()
            .reversed();
        if via_machine != row {
            return fail(format!(
                "index {i}: machine row {via_machine} differs from {row}"
            ));
        }
    }
    Ok(None)
}

fn check_b_direction(depth: usize) -> Result<Option<String>, String> {
    let count = pow(3, depth.min(7));
    let signs = sequences::automatic_sequence(&catalog::a02(), 0, count);
    for i in 0..count {
        let step = gray::b_step(i).map_err(|e| e.to_string())?;
        if step.direction != signs[i as usize] {
            return fail(format!(
                "index {i}: direction {} vs sign {}",
                step.direction, signs[i as usize]
            ));
        }
    }
    Ok(None)
}

fn check_b_index(depth: usize) -> Result<Option<String>, String> {
    let count = pow(3, depth.min(7));
    let (t, q) = sequences::at_machine();
    let powers = sequences::transducer_sequence(&t, q, 0, count).map_err(|e| e.to_string())?;
    for i in 0..count {
        let step = gray::b_step(i).map_err(|e| e.to_string())?;
        if step.index_distance != 2 * powers[i as usize] {
            return fail(format!(
                "index {i}: distance {} vs 2*{}",
                step.index_distance, powers[i as usize]
            ));
        }
    }
    Ok(Some(format!(
        "measured index distance is exactly twice the power-of-3 term for all i < {count}"
    )))
}

const PEG_PAIRS: [(u8, u8); 6] = [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)];

fn check_optimal_configs(depth: usize) -> Result<Option<String>, String> {
    if hanoi::optimal_config(0, 1, 5, 22)
        .map_err(|e| e.to_string())?
        .to_string()
        != "20021"
    {
        return fail("distance-22 configuration is not 20021");
    }
    for n in 1..=depth.min(7) {
        let g = graph::schreier_graph(n).map_err(|e| e.to_string())?;
        for &(x, y) in &PEG_PAIRS {
            let src = g
                .vertex_id(hanoi::Configuration::uniform(x, n).unwrap().word())
                .unwrap();
            let dst = g
                .vertex_id(hanoi::Configuration::uniform(y, n).unwrap().word())
                .unwrap();
            let from_src = g.bfs_distances(src);
            let from_dst = g.bfs_distances(dst);
            let geodesic_len = pow(2, n) - 1;
            for i in 0..pow(2, n) {
                let cfg = hanoi::optimal_config(x, y, n, i).map_err(|e| e.to_string())?;
                if cfg != hanoi::optimal_config_gray(x, y, n, i).map_err(|e| e.to_string())? {
                    return fail(format!("generators disagree at ({x},{y}), n={n}, i={i}"));
                }
                let v = g.vertex_id(cfg.word()).unwrap();
                if u64::from(from_src[v]) != i {
                    return fail(format!(
                        "({x},{y}) n={n} i={i}: configuration {cfg} at distance {}",
                        from_src[v]
                    ));
                }
                if u64::from(from_src[v]) + u64::from(from_dst[v]) != geodesic_len {
                    return fail(format!("({x},{y}) n={n} i={i}: {cfg} is off the geodesic"));
                }
            }
        }
    }
    Ok(None)
}

fn check_recognition(depth: usize) -> Result<Option<String>, String> {
    let pinned = [
        ("20021", 0u8, 1u8, Recognition::OnGeodesic { distance: 22 }),
        ("20021", 1, 0, Recognition::OnGeodesic { distance: 9 }),
        ("10021", 0, 1, Recognition::Rejected { consumed: 4 }),
    ];
    for (text, x, y, expected) in pinned {
        let got = hanoi::recognize_optimal(&hanoi::Configuration::parse(text).unwrap(), x, y)
            .map_err(|e| e.to_string())?;
        if got != expected {
            return fail(format!("{text} from {x} to {y}: {got:?}"));
        }
    }
    for n in 1..=depth.min(7) {
        for &(x, y) in &PEG_PAIRS {
            let mut on_geodesic = vec![None; pow(3, n) as usize];
            for i in 0..pow(2, n) {
                let cfg = hanoi::optimal_config(x, y, n, i).map_err(|e| e.to_string())?;
                let id = crate::words::from_digits_lsd(&cfg.word().reversed()).unwrap() as usize;
                on_geodesic[id] = Some(i);
            }
            for v in 0..pow(3, n) {
                let word = to_digits_lsd(v, 3).padded_to(n).unwrap().reversed();
                let cfg = hanoi::Configuration::new(word).unwrap();
                let got = hanoi::recognize_optimal(&cfg, x, y).map_err(|e| e.to_string())?;
                let id = crate::words::from_digits_lsd(&cfg.word().reversed()).unwrap() as usize;
                match (on_geodesic[id], got) {
                    (Some(i), Recognition::OnGeodesic { distance }) if distance == i => {}
                    (None, Recognition::Rejected { .. }) => {}
                    (expected, got) => {
                        return fail(format!(
                            "({x},{y}) n={n}: {cfg} expected {expected:?}, got {got:?}"
                        ))
                    }
                }
            }
        }
    }
    Ok(None)
}

fn check_parity_readouts(_depth: usize) -> Result<Option<String>, String> {
    let odd = hanoi::geodesic_integer_sequence(Parity::Odd, 8).map_err(|e| e.to_string())?;
    if odd != [0, 1, 7, 8, 17, 15, 12, 13] {
        return fail(format!("odd readout: {odd:?}"));
    }
    let even = hanoi::geodesic_integer_sequence(Parity::Even, 8).map_err(|e| e.to_string())?;
    if even != [0, 2, 5, 4, 22, 21, 24, 26] {
        return fail(format!("even readout: {even:?}"));
    }
    Ok(None)
}

fn check_relations(_depth: usize) -> Result<Option<String>, String> {
    let al = catalog::al();
    let rel = |lhs: &str, rhs: &str| -> Result<bool, String> {
        semigroup::verify_relation(
            &al,
            &GeneratorWord::parse(lhs).unwrap(),
            &GeneratorWord::parse(rhs).unwrap(),
        )
        .map_err(|e| e.to_string())
    };
    if !rel("alpha·alpha", "alpha")? {
        return fail("alpha is not idempotent");
    }
    if !rel("alpha·beta", "beta")? {
        return fail("alpha is not a left identity for beta");
    }
    if rel("beta·alpha", "beta")? {
        return fail("beta·alpha collapsed to beta");
    }
    Ok(None)
}

fn check_powers(_depth: usize) -> Result<Option<String>, String> {
    let al = catalog::al();
    let beta = al.state("beta").expect("catalog state");
    if !semigroup::distinct_powers(&al, beta, 12).map_err(|e| e.to_string())? {
        return fail("powers of beta collide within 12");
    }
    Ok(None)
}

fn check_growth(depth: usize) -> Result<Option<String>, String> {
    let al = catalog::al();
    let gens = [al.state("alpha").unwrap(), al.state("beta").unwrap()];
    let max_len = (depth + 2).min(8);
    let counts = semigroup::growth_counts(&al, &gens, max_len).map_err(|e| e.to_string())?;
    let expected: Vec<u64> = (1..=max_len as u64).map(|l| 2 * l).collect();
    if counts != expected {
        return fail(format!("expected {expected:?}, got {counts:?}"));
    }
    Ok(None)
}

fn check_orders(_depth: usize) -> Result<Option<String>, String> {
    let ah = catalog::ah();
    for name in ["a", "b", "c"] {
        let order = semigroup::element_order(&ah, &GeneratorWord::parse(name).unwrap(), 10)
            .map_err(|e| e.to_string())?;
        if order != Some(2) {
            return fail(format!("{name} has order {order:?}"));
        }
    }
    let ca = semigroup::element_order(&ah, &GeneratorWord::parse("c·a").unwrap(), 100)
        .map_err(|e| e.to_string())?;
    if ca.is_some() {
        return fail(format!("c·a has finite order {ca:?} within 100"));
    }
    Ok(None)
}

fn check_transitivity(depth: usize) -> Result<Option<String>, String> {
    let ah = catalog::ah();
    let n = depth.min(6);
    let all = ["a", "b", "c"].map(|s| ah.state(s).unwrap());
    if !semigroup::level_transitive(&ah, &all, n).map_err(|e| e.to_string())? {
        return fail(format!("three generators are not transitive on level {n}"));
    }
    let ac = ["a", "c"].map(|s| ah.state(s).unwrap());
    if !semigroup::level_transitive(&ah, &ac, n).map_err(|e| e.to_string())? {
        return fail(format!("the a,c pair is not transitive on level {n}"));
    }
    Ok(None)
}

/// Fixed-seed splitmix64.
struct Rng(u64);

impl Rng {
    fn new(seed: u64) -> Rng {
        Rng(seed)
    }

    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }

    fn word(&mut self, k: u8, max_len: usize) -> Word {
        let len = self.below(max_len as u64 + 1) as usize;
        let letters = (0..len).map(|_| self.below(u64::from(k)) as u8).collect();
        Word::new(letters, k).expect("letters drawn below k")
    }
}

fn builtin_transducers() -> Vec<Transducer> {
    vec![
        catalog::ah(),
        catalog::al(),
        catalog::at(),
        catalog::ad(),
        catalog::al2(),
        catalog::oh(),
        catalog::ohprime(),
    ]
}

fn check_length_prefix(_depth: usize) -> Result<Option<String>, String> {
    let machines = builtin_transducers();
    let mut rng = Rng::new(0x5eed_0001);
    for case in 0..ENGINE_CASES {
        let t = &machines[rng.below(machines.len() as u64) as usize];
        let q = StateId(rng.below(t.state_count() as u64) as usize);
        let u = rng.word(t.k_in(), 20);
        let v = rng.word(t.k_in(), 20);
        let uv = u.concat(&v).unwrap();
        let out_u = t.apply(q, &u).map_err(|e| e.to_string())?;
        let out_uv = t.apply(q, &uv).map_err(|e| e.to_string())?;
        if out_u.len() != u.len() || out_uv.len() != uv.len() {
            return fail(format!(
                "case {case}: output length differs from input length"
            ));
        }
        if !out_u.is_prefix_of(&out_uv) {
            return fail(format!("case {case}: prefix not preserved"));
        }
    }
    Ok(None)
}

fn check_composition(_depth: usize) -> Result<Option<String>, String> {
    let machines = builtin_transducers();
    let mut pairs = Vec::new();
    for outer in &machines {
        for inner in &machines {
            if inner.k_out() == outer.k_in() {
                pairs.push((outer.clone(), inner.clone(), product(outer, inner).unwrap()));
            }
        }
    }
    let mut rng = Rng::new(0x5eed_0002);
    for case in 0..ENGINE_CASES {
        let (outer, inner, prod) = &pairs[rng.below(pairs.len() as u64) as usize];
        let p = StateId(rng.below(outer.state_count() as u64) as usize);
        let q = StateId(rng.below(inner.state_count() as u64) as usize);
        let w = rng.word(inner.k_in(), 12);
        let direct = prod
            .apply(pair_state(outer, inner, p, q), &w)
            .map_err(|e| e.to_string())?;
        let composed = outer
            .apply(p, &inner.apply(q, &w).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        if direct != composed {
            return fail(format!("case {case}: product disagrees with composition"));
        }
    }
    Ok(None)
}

fn random_machine(rng: &mut Rng) -> Transducer {
    let k_in = 2 + rng.below(2) as u8;
    let k_out = 2 + rng.below(2) as u8;
    let states = 2 + rng.below(5) as usize;
    let mut b = Transducer::builder(k_in, k_out);
    let name = |i: usize| format!("s{i}");
    for i in 0..states {
        b.state(&name(i));
    }
    for i in 0..states {
        for x in 0..k_in {
            let to = rng.below(states as u64) as usize;
            let out = rng.below(u64::from(k_out)) as u8;
            b.transition(&name(i), x, &name(to), out)
                .expect("fresh slot");
        }
    }
    b.build().expect("table is total")
}

/// Ground truth by word enumeration: the two states agree on every word of
/// length up to `maxlen`. For machines of `n` states, length `n` already
/// decides equivalence.
fn brute_equivalent(t: &Transducer, p: StateId, q: StateId, maxlen: usize) -> bool {
    fn enumerate(t: &Transducer, p: StateId, q: StateId, remaining: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        for x in 0..t.k_in() {
            let (p2, yp) = t.step(p, x).expect("valid letter");
            let (q2, yq) = t.step(q, x).expect("valid letter");
            if yp != yq {
                return false;
            }
            if !enumerate(t, p2, q2, remaining - 1) {
                return false;
            }
        }
        true
    }
    enumerate(t, p, q, maxlen)
}

fn check_bisim_brute(_depth: usize) -> Result<Option<String>, String> {
    let mut rng = Rng::new(0x5eed_0003);
    for case in 0..ENGINE_CASES {
        let t = random_machine(&mut rng);
        let p = StateId(rng.below(t.state_count() as u64) as usize);
        let q = StateId(rng.below(t.state_count() as u64) as usize);
        let exact = t.states_equivalent(p, q);
        let brute = brute_equivalent(&t, p, q, t.state_count());
        if exact != brute {
            return fail(format!(
                "case {case}: bisimulation says {exact}, word enumeration says {brute}"
            ));
        }
    }
    Ok(None)
}

fn random_injective_machine(rng: &mut Rng) -> Transducer {
    let k_in = 2 + rng.below(2) as u8;
    let k_out = k_in + rng.below(u64::from(4 - k_in)) as u8;
    let states = 2 + rng.below(5) as usize;
    let mut b = Transducer::builder(k_in, k_out);
    let name = |i: usize| format!("s{i}");
    for i in 0..states {
        b.state(&name(i));
    }
    for i in 0..states {
        // Draw an injective output row: a random start offset and distinct
        // increments.
        let mut letters: Vec<u8> = (0..k_out).collect();
        for j in (1..letters.len()).rev() {
            letters.swap(j, rng.below(j as u64 + 1) as usize);
        }
        for x in 0..k_in {
            let to = rng.below(states as u64) as usize;
            b.transition(&name(i), x, &name(to), letters[usize::from(x)])
                .expect("fresh slot");
        }
    }
    b.build().expect("table is total")
}

fn check_inverse_roundtrip(_depth: usize) -> Result<Option<String>, String> {
    let fixed: Vec<Transducer> = vec![
        catalog::ah(),
        catalog::ad(),
        catalog::al2(),
        catalog::oh(),
        catalog::ohprime(),
    ];
    let mut rng = Rng::new(0x5eed_0004);
    for case in 0..ENGINE_CASES {
        let machine;
        let t = if case % 2 == 0 {
            machine = random_injective_machine(&mut rng);
            &machine
        } else {
            &fixed[rng.below(fixed.len() as u64) as usize]
        };
        debug_assert_ne!(t.classify(), TransducerClass::General);
        let q = StateId(rng.below(t.state_count() as u64) as usize);
        let w = rng.word(t.k_in(), 10);
        let image = t.apply(q, &w).map_err(|e| e.to_string())?;
        let inv = t.invert().map_err(|e| e.to_string())?;
        let q_inv = inv
            .state(t.state_name(q))
            .expect("inverse keeps state names");
        match inv.run(q_inv, &image).map_err(|e| e.to_string())? {
            PartialRun::Accepted(back) if back == w => {}
            other => return fail(format!("case {case}: round trip produced {other:?}")),
        }
    }
    let ah = catalog::ah();
    if !morphisms_equal(&ah, ah.state("a").unwrap(), &ah, ah.state("a").unwrap()).unwrap() {
        return fail("reflexivity of morphism equality");
    }
    Ok(None)
}
