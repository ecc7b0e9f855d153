//! The `treeduce` command line.
//!
//! [`run`] takes an argument vector and returns exit code plus captured
//! stdout/stderr text, so the whole surface is testable without spawning a
//! process. Exit codes: 0 success, 1 failed verification or rejected
//! recognition, 2 usage errors.
//!
//! The environment variable `TREEDUCE_MAX_LEVEL` overrides the default cap
//! on graph levels.

use std::fmt::Write as _;

use crate::automata::{
    catalog, parse_machine, Builtin, BuiltinName, FinalStateAutomaton, Machine, StateId, Transducer,
};
use crate::error::{Error, Result};
use crate::hanoi::{self, graph, gray, Parity, Recognition};
use crate::semigroup::{self, GeneratorWord};
use crate::sequences;
use crate::words::{to_digits_lsd, Word};

mod verify;

/// Outcome of one CLI invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        CommandResult {
            exit_code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        stderr.push_str(USAGE);
        CommandResult {
            exit_code: 2,
            stdout: String::new(),
            stderr,
        }
    }

    fn failed(stdout: String, stderr: String) -> Self {
        CommandResult {
            exit_code: 1,
            stdout,
            stderr,
        }
    }
}

const USAGE: &str = "\
usage: treeduce <command> [options]

commands:
  seq <id>            print a sequence; ids: at, l, walpha, gray2, kgray3,
                      bdir, bstep, a055661-odd, a055661-even
                      options: --from N --to N | --length N,
                               --pad odd|even|exact:N (gray2 only),
                               --format plain|bfile, --origin N
  apply               run a machine state over a word
                      options: --automaton <path|builtin:NAME>, --state NAME
  recognize           test a configuration against a corner geodesic
                      options: --from-peg P --to-peg P --config WORD
  graph schreier      emit a level graph
                      options: --level N, --format dot
  semigroup verify    check <lhs> = <rhs> as tree morphisms
  semigroup order     least power equal to the identity, or none
                      options: --bound N
  semigroup growth    distinct elements per word length
                      options: --generators A,B --max-len N
                      (all semigroup commands take --automaton)
  verify <suite>      run checks; suites: all, sequences, gray, hanoi,
                      semigroup, engine; options: --depth N
";

/// Parses and executes one invocation.
pub fn run<I, S>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let args: Vec<String> = argv.into_iter().map(|s| s.as_ref().to_string()).collect();
    let Some((command, rest)) = args.split_first() else {
        return CommandResult::usage("missing command");
    };
    let parsed = match Parsed::from_tokens(rest) {
        Ok(parsed) => parsed,
        Err(msg) => return CommandResult::usage(msg),
    };
    match command.as_str() {
        "seq" => seq_command(&parsed),
        "apply" => apply_command(&parsed),
        "recognize" => recognize_command(&parsed),
        "graph" => graph_command(&parsed),
        "semigroup" => semigroup_command(&parsed),
        "verify" => verify::verify_command(&parsed),
        "help" | "--help" | "-h" => CommandResult::ok(USAGE.to_string()),
        other => CommandResult::usage(format!("unknown command {other:?}")),
    }
}

/// Flag/positional split of the argument vector. Every flag takes a value.
pub(crate) struct Parsed {
    positionals: Vec<String>,
    flags: Vec<(String, String)>,
}

impl Parsed {
    fn from_tokens(tokens: &[String]) -> std::result::Result<Parsed, String> {
        let mut positionals = Vec::new();
        let mut flags = Vec::new();
        let mut iter = tokens.iter();
        while let Some(tok) = iter.next() {
            if let Some(name) = tok.strip_prefix("--") {
                let value = iter
                    .next()
                    .ok_or_else(|| format!("flag --{name} expects a value"))?;
                flags.push((name.to_string(), value.clone()));
            } else {
                positionals.push(tok.clone());
            }
        }
        Ok(Parsed { positionals, flags })
    }

    fn flag(&self, name: &str) -> Option<&str> {
        self.flags
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_str())
    }

    fn flag_u64(&self, name: &str) -> std::result::Result<Option<u64>, String> {
        match self.flag(name) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| format!("flag --{name} expects a non-negative integer, got {v:?}")),
        }
    }

    fn flag_usize(&self, name: &str) -> std::result::Result<Option<usize>, String> {
        Ok(self.flag_u64(name)?.map(|v| v as usize))
    }
}

fn max_level() -> usize {
    std::env::var("TREEDUCE_MAX_LEVEL")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(graph::DEFAULT_MAX_LEVEL)
}

/// Either machine kind plus the default start state when one is known.
enum Loaded {
    Transducer {
        machine: Transducer,
        initial: Option<StateId>,
    },
    FinalState(FinalStateAutomaton),
}

fn load_machine(spec: &str) -> std::result::Result<Loaded, String> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        let name = BuiltinName::parse(name).map_err(|e| e.to_string())?;
        return Ok(match catalog::builtin(name) {
            Builtin::Transducer { machine, initial } => Loaded::Transducer {
                machine,
                initial: Some(initial),
            },
            Builtin::FinalState(machine) => Loaded::FinalState(machine),
        });
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| format!("cannot read machine file {spec:?}: {e}"))?;
    match parse_machine(&text).map_err(|e| e.to_string())? {
        Machine::Transducer(machine) => Ok(Loaded::Transducer {
            machine,
            initial: None,
        }),
        Machine::FinalState(machine) => Ok(Loaded::FinalState(machine)),
    }
}

fn load_transducer(parsed: &Parsed) -> std::result::Result<(Transducer, Option<StateId>), String> {
    let spec = parsed.flag("automaton").ok_or("missing --automaton")?;
    match load_machine(spec)? {
        Loaded::Transducer { machine, initial } => Ok((machine, initial)),
        Loaded::FinalState(_) => Err(format!("{spec} is a final-state machine, not a transducer")),
    }
}

/// Joins values with single spaces and a trailing newline.
fn plain_line<T: std::fmt::Display>(values: &[T]) -> String {
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{v}").unwrap();
    }
    out.push('\n');
    out
}

fn render_values<T: std::fmt::Display>(parsed: &Parsed, from: u64, values: &[T]) -> CommandResult {
    match parsed.flag("format").unwrap_or("plain") {
        "plain" => CommandResult::ok(plain_line(values)),
        "bfile" => {
            let origin = match parsed.flag("origin") {
                None => 0i64,
                Some(v) => match v.parse() {
                    Ok(o) => o,
                    Err(_) => return CommandResult::usage(format!("bad --origin {v:?}")),
                },
            };
            CommandResult::ok(sequences::bfile(values, origin + from as i64))
        }
        other => CommandResult::usage(format!("unknown format {other:?} for sequences")),
    }
}

fn index_range(parsed: &Parsed) -> std::result::Result<(u64, u64), String> {
    let from = parsed.flag_u64("from")?.unwrap_or(0);
    let to = match (parsed.flag_u64("to")?, parsed.flag_u64("length")?) {
        (Some(to), None) => to,
        (None, Some(len)) => from + len,
        (None, None) => return Err("need --to or --length".to_string()),
        (Some(_), Some(_)) => return Err("give either --to or --length, not both".to_string()),
    };
    if to < from {
        return Err(format!("empty range: --from {from} --to {to}"));
    }
    Ok((from, to))
}

/// Input length for one SF term under the `--pad` policy.
fn sf_length(i: u64, pad: &str) -> std::result::Result<usize, String> {
    let min_len = to_digits_lsd(i, 2).len();
    match pad {
        "odd" => Ok(if min_len.is_multiple_of(2) {
            min_len + 1
        } else {
            min_len
        }),
        "even" => Ok(if min_len.is_multiple_of(2) {
            min_len
        } else {
            min_len + 1
        }),
        other => match other.strip_prefix("exact:") {
            Some(n) => n.parse().map_err(|_| format!("bad --pad {other:?}")),
            None => Err(format!("bad --pad {other:?}")),
        },
    }
}

fn seq_command(parsed: &Parsed) -> CommandResult {
    let Some(id) = parsed.positionals.first() else {
        return CommandResult::usage("seq expects a sequence id");
    };
    let (from, to) = match index_range(parsed) {
        Ok(r) => r,
        Err(msg) => return CommandResult::usage(msg),
    };
    if parsed.flag("pad").is_some() && id != "gray2" {
        return CommandResult::usage("--pad applies only to seq gray2");
    }
    let values: Result<Vec<String>> = match id.as_str() {
        "at" => {
            let (t, q) = sequences::at_machine();
            sequences::transducer_sequence(&t, q, from, to)
                .map(|v| v.iter().map(u64::to_string).collect())
        }
        "l" => {
            let (t, q) = sequences::l_machine();
            sequences::transducer_sequence(&t, q, from, to)
                .map(|v| v.iter().map(u64::to_string).collect())
        }
        "walpha" => Ok(sequences::automatic_sequence(&catalog::a02(), from, to)
            .iter()
            .map(|s| s.to_string())
            .collect()),
        "gray2" => {
            let t = catalog::al2();
            let l0 = t.state("l0").expect("catalog state");
            // Padding is cosmetic for this machine (leading zeros loop on
            // the start state), so every --pad choice yields the same
            // values; the default is the minimal length.
            (from..to)
                .map(|i| {
                    let n = match parsed.flag("pad") {
                        None => to_digits_lsd(i, 2).len(),
                        Some(pad) => {
                            sf_length(i, pad).map_err(|msg| Error::SyntaxError { line: 0, msg })?
                        }
                    };
                    sequences::sf_transducer_sequence(&t, l0, i, n).map(|v| v.to_string())
                })
                .collect()
        }
        "kgray3" => (from..to)
            .map(|i| gray::gray_readout(3, i).map(|v| v.to_string()))
            .collect(),
        "bdir" => (from..to)
            .map(|i| gray::b_step(i).map(|s| s.direction.to_string()))
            .collect(),
        "bstep" => (from..to)
            .map(|i| gray::b_step(i).map(|s| s.index_distance.to_string()))
            .collect(),
        "a055661-odd" => hanoi::geodesic_integer_sequence(Parity::Odd, to)
            .map(|v| v[from as usize..].iter().map(u64::to_string).collect()),
        "a055661-even" => hanoi::geodesic_integer_sequence(Parity::Even, to)
            .map(|v| v[from as usize..].iter().map(u64::to_string).collect()),
        other => return CommandResult::usage(format!("unknown sequence id {other:?}")),
    };
    match values {
        Ok(values) => render_values(parsed, from, &values),
        Err(e) => CommandResult::usage(e.to_string()),
    }
}

fn apply_command(parsed: &Parsed) -> CommandResult {
    let Some(word_text) = parsed.positionals.first() else {
        return CommandResult::usage("apply expects a word argument");
    };
    let spec = match parsed.flag("automaton") {
        Some(s) => s,
        None => return CommandResult::usage("missing --automaton"),
    };
    match load_machine(spec) {
        Err(msg) => CommandResult::usage(msg),
        Ok(Loaded::Transducer { machine, initial }) => {
            let state = match parsed.flag("state") {
                Some(name) => match machine.state(name) {
                    Some(q) => q,
                    None => return CommandResult::usage(format!("unknown state {name:?}")),
                },
                None => match initial {
                    Some(q) => q,
                    None => return CommandResult::usage("machine files need --state"),
                },
            };
            let word = match Word::parse(word_text, machine.k_in()) {
                Ok(w) => w,
                Err(e) => return CommandResult::usage(e.to_string()),
            };
            match machine.apply(state, &word) {
                Ok(out) => CommandResult::ok(format!("{out}\n")),
                Err(e) => CommandResult::usage(e.to_string()),
            }
        }
        Ok(Loaded::FinalState(machine)) => {
            if parsed.flag("state").is_some() {
                return CommandResult::usage("final-state machines run from their initial state");
            }
            let word = match Word::parse(word_text, machine.alphabet_size()) {
                Ok(w) => w,
                Err(e) => return CommandResult::usage(e.to_string()),
            };
            match machine.run(&word) {
                Ok(sign) => CommandResult::ok(format!("{sign}\n")),
                Err(e) => CommandResult::usage(e.to_string()),
            }
        }
    }
}

fn parse_peg(parsed: &Parsed, name: &str) -> std::result::Result<u8, String> {
    let v = parsed
        .flag(name)
        .ok_or_else(|| format!("missing --{name}"))?;
    match v.parse::<u8>() {
        Ok(p) if p <= 2 => Ok(p),
        _ => Err(format!("--{name} expects a peg 0, 1 or 2, got {v:?}")),
    }
}

fn recognize_command(parsed: &Parsed) -> CommandResult {
    let from_peg = match parse_peg(parsed, "from-peg") {
        Ok(p) => p,
        Err(msg) => return CommandResult::usage(msg),
    };
    let to_peg = match parse_peg(parsed, "to-peg") {
        Ok(p) => p,
        Err(msg) => return CommandResult::usage(msg),
    };
    let Some(config_text) = parsed.flag("config") else {
        return CommandResult::usage("missing --config");
    };
    let config = match hanoi::Configuration::parse(config_text) {
        Ok(c) => c,
        Err(e) => return CommandResult::usage(e.to_string()),
    };
    match hanoi::recognize_optimal(&config, from_peg, to_peg) {
        Ok(Recognition::OnGeodesic { distance }) => CommandResult::ok(format!("{distance}\n")),
        Ok(Recognition::Rejected { consumed }) => CommandResult::failed(
            String::new(),
            format!("rejected after {consumed} symbols\n"),
        ),
        Err(e) => CommandResult::usage(e.to_string()),
    }
}

fn graph_command(parsed: &Parsed) -> CommandResult {
    match parsed.positionals.first().map(String::as_str) {
        Some("schreier") => {}
        _ => return CommandResult::usage("graph expects the subcommand `schreier`"),
    }
    let level = match parsed.flag_usize("level") {
        Ok(Some(level)) => level,
        Ok(None) => return CommandResult::usage("missing --level"),
        Err(msg) => return CommandResult::usage(msg),
    };
    match parsed.flag("format").unwrap_or("dot") {
        "dot" => {}
        other => {
            return CommandResult::usage(format!("graphs only support --format dot, got {other:?}"))
        }
    }
    match graph::schreier_graph_with_limit(level, max_level()) {
        Ok(g) => CommandResult::ok(g.to_dot()),
        Err(e) => CommandResult::usage(e.to_string()),
    }
}

fn semigroup_command(parsed: &Parsed) -> CommandResult {
    let Some(sub) = parsed.positionals.first().map(String::as_str) else {
        return CommandResult::usage("semigroup expects verify, order, or growth");
    };
    let (machine, _) = match load_transducer(parsed) {
        Ok(m) => m,
        Err(msg) => return CommandResult::usage(msg),
    };
    match sub {
        "verify" => {
            let [lhs, rhs] = match &parsed.positionals[1..] {
                [l, r] => [l, r],
                _ => return CommandResult::usage("semigroup verify expects <lhs> <rhs>"),
            };
            let relation = (|| -> Result<bool> {
                semigroup::verify_relation(
                    &machine,
                    &GeneratorWord::parse(lhs)?,
                    &GeneratorWord::parse(rhs)?,
                )
            })();
            match relation {
                Ok(true) => CommandResult::ok("true\n".to_string()),
                Ok(false) => CommandResult::failed("false\n".to_string(), String::new()),
                Err(e) => CommandResult::usage(e.to_string()),
            }
        }
        "order" => {
            let Some(word_text) = parsed.positionals.get(1) else {
                return CommandResult::usage("semigroup order expects a generator word");
            };
            let bound = match parsed.flag_u64("bound") {
                Ok(b) => b.unwrap_or(100),
                Err(msg) => return CommandResult::usage(msg),
            };
            let order = (|| -> Result<Option<u64>> {
                semigroup::element_order(&machine, &GeneratorWord::parse(word_text)?, bound)
            })();
            match order {
                Ok(Some(m)) => CommandResult::ok(format!("{m}\n")),
                Ok(None) => CommandResult::ok("none\n".to_string()),
                Err(e) => CommandResult::usage(e.to_string()),
            }
        }
        "growth" => {
            let generators: Vec<StateId> = match parsed.flag("generators") {
                None => machine.state_ids().collect(),
                Some(names) => {
                    let mut gens = Vec::new();
                    for name in names.split(',').filter(|s| !s.is_empty()) {
                        match machine.state(name) {
                            Some(q) => gens.push(q),
                            None => return CommandResult::usage(format!("unknown state {name:?}")),
                        }
                    }
                    gens
                }
            };
            let max_len = match parsed.flag_usize("max-len") {
                Ok(l) => l.unwrap_or(8),
                Err(msg) => return CommandResult::usage(msg),
            };
            match semigroup::growth_counts(&machine, &generators, max_len) {
                Ok(counts) => CommandResult::ok(plain_line(&counts)),
                Err(e) => CommandResult::usage(e.to_string()),
            }
        }
        other => CommandResult::usage(format!("unknown semigroup subcommand {other:?}")),
    }
}
