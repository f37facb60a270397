//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits non-zero if any fails.

// `x - x` is the point of several checks.
#![allow(clippy::eq_op)]

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use grossone::sequences::{cardinality, NumeralSystem, ObservableSequence, SetFamily};
use grossone::simulate::{bfs_simulate, build_tree, nondet_degree, observability, simulation_cost};
use grossone::turing::{recode_length, MachineSpec, Move, Transition};
use grossone::{GrossNumber, Rational};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn gn(s: &str) -> GrossNumber {
    s.parse().unwrap_or_else(|e| panic!("{s:?}: {e}"))
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ensure_eq<T: PartialEq + std::fmt::Debug>(got: T, want: T, what: &str) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let took = start.elapsed();
    ensure!(took < limit, "took {took:?}, limit {limit:?}");
    Ok(format!("{took:.2?}"))
}

fn identities() -> Check {
    let start = Instant::now();
    let g = GrossNumber::grossone();
    let (zero, one) = (GrossNumber::zero(), GrossNumber::one());
    ensure_eq(&zero * &g, zero.clone(), "0*g")?;
    ensure_eq(&g * &zero, zero.clone(), "g*0")?;
    ensure_eq(&g - &g, zero.clone(), "g-g")?;
    ensure_eq(g.checked_div(&g), Ok(one.clone()), "g/g")?;
    ensure_eq(g.pow(&zero), Ok(one.clone()), "g^0")?;
    ensure_eq(one.pow(&g), Ok(one.clone()), "1^g")?;
    ensure_eq(zero.pow(&g), Ok(zero.clone()), "0^g")?;
    for (text, value) in [
        ("0*g", "0"),
        ("g*0", "0"),
        ("g-g", "0"),
        ("g/g", "1"),
        ("g^0", "1"),
        ("1^g", "1"),
        ("0^g", "0"),
    ] {
        ensure_eq(gn(text).to_string(), value.to_string(), text)?;
    }
    within(start, Duration::from_secs(1))
}

fn random_term(rng: &mut StdRng) -> GrossNumber {
    let c = loop {
        let c = rng.gen_range(-9i64..=9);
        if c != 0 {
            break c;
        }
    };
    let den = rng.gen_range(1i64..=4);
    let power = Rational::new(rng.gen_range(-4i64..=6).into(), [1i64, 2][rng.gen_range(0..2)].into());
    let mut t = &GrossNumber::ratio(c, den) * &GrossNumber::grossone_power(power);
    if rng.gen_bool(0.2) {
        let base = GrossNumber::from([2u32, 3, 6][rng.gen_range(0..3)]);
        let exp = &GrossNumber::grossone() * &GrossNumber::from(rng.gen_range(1u32..=2));
        t = &t * &base.pow(&exp).expect("integer base, grossone exponent");
    }
    t
}

fn random_gross(rng: &mut StdRng) -> GrossNumber {
    (0..rng.gen_range(0..=4)).fold(GrossNumber::zero(), |acc, _| &acc + &random_term(rng))
}

fn algebraic_fuzz() -> Check {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x9e0f);
    let (zero, one) = (GrossNumber::zero(), GrossNumber::one());
    let triples = 10_000;
    for i in 0..triples {
        let (a, b, c) = (random_gross(&mut rng), random_gross(&mut rng), random_gross(&mut rng));
        let law = |ok: bool, name: &str| {
            if ok {
                Ok(())
            } else {
                Err(format!("triple {i}: {name} fails for {a}, {b}, {c}"))
            }
        };
        law(&(&a + &b) + &c == &a + &(&b + &c), "additive associativity")?;
        law(&(&a * &b) * &c == &a * &(&b * &c), "multiplicative associativity")?;
        law(&a + &b == &b + &a, "additive commutativity")?;
        law(&a * &b == &b * &a, "multiplicative commutativity")?;
        law(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "distributivity")?;
        law(&a + &zero == a && &a * &one == a, "identities")?;
        law((&a - &a).is_zero(), "additive inverse")?;

        let tri = [a < b, a == b, a > b].into_iter().filter(|x| *x).count();
        law(tri == 1, "trichotomy")?;
        law(a.cmp(&b) == (&a - &b).signum(), "order agrees with sign of difference")?;
        let mut sorted = [&a, &b, &c];
        sorted.sort();
        law(sorted[0] <= sorted[2], "transitivity")?;
        if a <= b && b <= c {
            law(a <= c, "transitivity")?;
        }
        if a >= b && b >= c {
            law(a >= c, "transitivity")?;
        }
    }
    within(start, Duration::from_secs(30)).map(|t| format!("{triples} triples, {t}"))
}

fn counting_table() -> Check {
    let cases = [
        (SetFamily::Evens, "g/2"),
        (SetFamily::Odds, "g/2"),
        (SetFamily::Naturals, "g"),
        (SetFamily::Integers, "2*g + 1"),
        (SetFamily::NaturalsMinus(2), "g - 2"),
        (SetFamily::NaturalsPlus(1), "g + 1"),
        (SetFamily::Tuples(3), "g^3"),
    ];
    for (family, want) in cases {
        ensure_eq(
            cardinality(family).map_err(|e| e.to_string())?,
            gn(want),
            &format!("{family:?}"),
        )?;
    }
    for b in 2..=16u64 {
        let b_g = &format!("{b}^g");
        ensure_eq(cardinality(SetFamily::FractionalNumerals(b)).unwrap(), gn(b_g), "[0,1)")?;
        ensure_eq(
            cardinality(SetFamily::OpenUnitInterval(b)).unwrap(),
            gn(&format!("{b_g} - 1")),
            "(0,1)",
        )?;
    }
    Ok("7 families + radices 2..=16".into())
}

fn sequence_algebra() -> Check {
    let g = GrossNumber::grossone();
    let naturals = |len: &str| ObservableSequence::arithmetic(1.into(), 1.into(), gn(len)).unwrap();
    let (merged, rest) = ObservableSequence::concat(&naturals("2*g/5"), &naturals("4*g/5"));
    ensure_eq(merged.len().clone(), g.clone(), "joined length")?;
    let rest = rest.ok_or("no remainder")?;
    ensure_eq(rest.len().clone(), gn("g/5"), "remainder length")?;
    ensure_eq(rest.first_element(), gn("3*g/5 + 1"), "first leftover element")?;

    for (first, step, last) in [(1, 1, "g"), (3, 1, "g + 2"), (1, 2, "2*g - 1")] {
        let s = ObservableSequence::arithmetic(first.into(), step.into(), g.clone()).unwrap();
        ensure_eq(
            s.last_element(),
            gn(last),
            &format!("last of first={first}, step={step}"),
        )?;
    }
    Ok("lengths (g, g/5); last elements g, g+2, 2g-1".into())
}

fn numeral_fixture() -> Check {
    let text = std::fs::read_to_string(format!("{FIXTURES}/numerals/p_hat.ns")).map_err(|e| e.to_string())?;
    let system: NumeralSystem = text
        .parse()
        .map_err(|e: grossone::sequences::NumeralFileError| e.to_string())?;
    ensure_eq(&system, &NumeralSystem::p_hat(), "fixture vs built-in")?;
    let want: Vec<GrossNumber> = ["1", "2", "g/2-2", "g/2-1", "g/2", "g/2+1", "g/2+2", "g-2", "g-1", "g"]
        .iter()
        .map(|s| gn(s))
        .collect();
    let seen = ObservableSequence::naturals().observable_elements(&system);
    let values: Vec<GrossNumber> = seen.iter().map(|(_, v)| v.clone()).collect();
    ensure_eq(values, want.clone(), "observed values")?;
    let indices: Vec<GrossNumber> = seen.into_iter().map(|(i, _)| i).collect();
    ensure_eq(indices, want, "observed indices")?;
    Ok("10 values in order".into())
}

fn recoding() -> Check {
    let r = recode_length(&GrossNumber::grossone(), 3, 2).map_err(|e| e.to_string())?;
    ensure_eq((r.length, r.observable), (gn("2*g"), false), "recode(g, 3 -> 2)")?;
    Ok("2*g, not observable".into())
}

fn direct_sum(d: u64, k: u64) -> BigInt {
    (1..=k).map(|j| BigInt::from(j) * BigInt::from(d).pow(j as u32)).sum()
}

fn load_machine(name: &str) -> MachineSpec {
    std::fs::read_to_string(format!("{FIXTURES}/machines/{name}"))
        .unwrap()
        .parse()
        .unwrap()
}

fn cost_grid() -> Check {
    let start = Instant::now();
    let mut cases = 0;
    // the 2..=6 x 1..=12 grid, plus the degenerate degree 1
    for d in 1..=6u64 {
        for k in 1..=12u64 {
            let c = simulation_cost(d, &GrossNumber::from(k)).map_err(|e| e.to_string())?;
            ensure_eq(c.as_integer(), Some(direct_sum(d, k)), &format!("d={d}, k={k}"))?;
            cases += u32::from(d >= 2);
        }
    }
    let spec = load_machine("branching_degree3.tm");
    ensure_eq(nondet_degree(&spec), 3, "degree")?;
    let tree = build_tree(&spec, &[], 3).map_err(|e| e.to_string())?;
    ensure_eq(tree.leaf_count(), 27, "leaves")?;
    ensure_eq(tree.level_size(2), 9, "level-2 paths")?;
    ensure_eq(tree.level_size(1), 3, "level-1 paths")?;
    ensure_eq(simulation_cost(3, &3.into()).unwrap(), gn("102"), "K")?;
    within(start, Duration::from_secs(5)).map(|t| format!("{cases} grid cases + 12 at d=1, {t}"))
}

const SYMBOLS: [&str; 3] = ["_", "a", "b"];
const MOVES: [Move; 3] = [Move::Left, Move::Right, Move::Stay];

fn random_machine(rng: &mut StdRng) -> (MachineSpec, Vec<String>) {
    let n_states = rng.gen_range(1..=4);
    let n_symbols = rng.gen_range(1..=3);
    let states: Vec<String> = (0..n_states).map(|i| format!("q{i}")).collect();
    let tape: Vec<String> = SYMBOLS[..n_symbols].iter().map(|s| s.to_string()).collect();
    let finals: BTreeSet<String> = (n_states > 1 && rng.gen_bool(0.5))
        .then(|| states[n_states - 1].clone())
        .into_iter()
        .collect();
    let mut transitions: BTreeMap<String, BTreeMap<String, Vec<Transition>>> = BTreeMap::new();
    for q in states.iter().filter(|q| !finals.contains(*q)) {
        for sym in &tape {
            let mut branches = Vec::new();
            for _ in 0..rng.gen_range(0..=3) {
                let t = Transition {
                    write: tape[rng.gen_range(0..n_symbols)].clone(),
                    movement: MOVES[rng.gen_range(0..3)],
                    next: states[rng.gen_range(0..n_states)].clone(),
                };
                if !branches.contains(&t) {
                    branches.push(t);
                }
            }
            if !branches.is_empty() {
                transitions.entry(q.clone()).or_default().insert(sym.clone(), branches);
            }
        }
    }
    let io = tape[1..].to_vec();
    let input = if io.is_empty() {
        Vec::new()
    } else {
        (0..rng.gen_range(0..=3))
            .map(|_| io[rng.gen_range(0..io.len())].clone())
            .collect()
    };
    let spec = MachineSpec {
        states,
        tape_alphabet: tape,
        blank: "_".into(),
        io_alphabet: io,
        initial: "q0".into(),
        finals,
        transitions,
    };
    (spec, input)
}

fn executed_simulation() -> Check {
    let start = Instant::now();
    let spec = load_machine("branching_degree3.tm");
    let report = bfs_simulate(&spec, &[], 3).map_err(|e| e.to_string())?;
    ensure_eq(report.measured_steps, Some(102), "measured steps")?;
    let tree = build_tree(&spec, &[], 3).unwrap();
    ensure_eq(
        &report.final_configurations,
        &tree.halting_configurations(),
        "fixture final sets",
    )?;

    let mut rng = StdRng::seed_from_u64(0x5eed);
    let machines = 200;
    let mut nonempty = 0;
    for i in 0..machines {
        let (spec, input) = random_machine(&mut rng);
        let k = rng.gen_range(1..=6);
        let bfs = bfs_simulate(&spec, &input, k).map_err(|e| format!("machine {i}: {e}"))?;
        let tree = build_tree(&spec, &input, k).map_err(|e| format!("machine {i}: {e}"))?;
        ensure_eq(
            &bfs.final_configurations,
            &tree.halting_configurations(),
            &format!("machine {i}:\n{spec}"),
        )?;
        nonempty += usize::from(!bfs.final_configurations.is_empty());
    }
    ensure!(
        nonempty >= machines / 4,
        "only {nonempty} machines reached a halting configuration"
    );
    within(start, Duration::from_secs(60)).map(|t| format!("{machines} random machines ({nonempty} halting), {t}"))
}

fn infinite_depth() -> Check {
    for k in 1..=12u64 {
        let pattern = BigInt::from(2 * k - 2) * BigInt::from(2).pow(k as u32) + 2;
        ensure_eq(pattern, direct_sum(2, k), &format!("pattern at k={k}"))?;
    }
    let g = GrossNumber::grossone();
    let two = GrossNumber::from(2);
    let want = &(&(&(&two * &g) - &two) * &two.pow(&g).unwrap()) + &two;
    ensure_eq(simulation_cost(2, &g).map_err(|e| e.to_string())?, want, "K(2, g)")?;
    let v = observability(2, &g).map_err(|e| e.to_string())?;
    ensure_eq((v.depth_ok, v.steps_ok, v.leaves_ok), (true, false, false), "verdicts")?;
    Ok("(2g-2)*2^g + 2".into())
}

fn cli_contract() -> Check {
    let cases: [(&[&str], &str); 3] = [
        (&["eval", "g - g"], "0\n"),
        (&["cost", "--degree", "3", "--depth", "3"], "102\n"),
        (
            &["check", "--degree", "2", "--depth", "g"],
            "depth_ok=true\nsteps_ok=false\nleaves_ok=false\nnodes_ok=false\n",
        ),
    ];
    let bin = env!("CARGO_BIN_EXE_grossone");
    for (args, want) in cases {
        let out = grossone_cli::dispatch(std::iter::once("grossone").chain(args.iter().copied()));
        ensure_eq(
            (out.code, out.stdout.as_str()),
            (0, want),
            &format!("dispatch {args:?}"),
        )?;
        let proc = std::process::Command::new(bin)
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        ensure_eq(
            (proc.status.code(), String::from_utf8_lossy(&proc.stdout).into_owned()),
            (Some(0), want.to_string()),
            &format!("binary {args:?}"),
        )?;
    }
    Ok("3 commands, byte-exact".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("identity suite", identities),
        ("algebraic fuzz", algebraic_fuzz),
        ("counting table", counting_table),
        ("sequence algebra", sequence_algebra),
        ("numeral-system fixture", numeral_fixture),
        ("recoding", recoding),
        ("cost oracle grid", cost_grid),
        ("executed simulation", executed_simulation),
        ("infinite-depth observability", infinite_depth),
        ("CLI contract", cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match std::panic::catch_unwind(check) {
            Ok(Ok(detail)) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Ok(Err(why)) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
            Err(_) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: panicked", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
