//! Line-oriented text format for machines.
//!
//! Transducers:
//!
//! ```text
//! transducer <k_in> <k_out>
//! state <name>            # one per state
//! <name> <in> -> <name'> <out>
//! ```
//!
//! Final-state machines:
//!
//! ```text
//! automaton <k>
//! initial <name>
//! state <name> <+1|-1>
//! <name> <in> -> <name'>
//! ```
//!
//! `#` starts a comment; blank lines are ignored. Serialization is
//! canonical: states sorted by name, transitions sorted by state name and
//! input letter, so `parse . serialize` is the identity on tables.

use std::fmt::Write as _;

use super::final_state::{FinalStateAutomaton, FinalStateBuilder};
use super::{Transducer, TransducerBuilder};
use crate::error::{Error, Result};
use crate::words::Sign;

/// Either kind of machine the format can carry.
#[derive(Debug, Clone)]
pub enum Machine {
    Transducer(Transducer),
    FinalState(FinalStateAutomaton),
}

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::SyntaxError {
        line,
        msg: msg.into(),
    }
}

fn parse_alphabet(token: &str, line: usize) -> Result<u8> {
    let k: u8 = token
        .parse()
        .map_err(|_| syntax(line, format!("bad alphabet size {token:?}")))?;
    if !(2..=10).contains(&k) {
        return Err(syntax(line, format!("alphabet size {k} outside 2..=10")));
    }
    Ok(k)
}

fn parse_letter(token: &str, k: u8, line: usize) -> Result<u8> {
    let l: u8 = token
        .parse()
        .map_err(|_| syntax(line, format!("bad letter {token:?}")))?;
    if l >= k {
        return Err(syntax(
            line,
            format!("letter {l} outside alphabet of size {k}"),
        ));
    }
    Ok(l)
}

/// Numbered, comment-stripped, non-blank lines.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

/// Parses a transducer from its text form.
pub fn parse_transducer(text: &str) -> Result<Transducer> {
    match parse_machine(text)? {
        Machine::Transducer(t) => Ok(t),
        Machine::FinalState(_) => Err(syntax(1, "expected a transducer header")),
    }
}

/// Parses a final-state machine from its text form.
pub fn parse_final_state_automaton(text: &str) -> Result<FinalStateAutomaton> {
    match parse_machine(text)? {
        Machine::FinalState(a) => Ok(a),
        Machine::Transducer(_) => Err(syntax(1, "expected an automaton header")),
    }
}

/// Parses either machine kind, dispatching on the header keyword.
pub fn parse_machine(text: &str) -> Result<Machine> {
    let mut lines = content_lines(text);
    let (header_no, header) = lines.next().ok_or_else(|| syntax(1, "empty description"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    match tokens.as_slice() {
        ["transducer", k_in, k_out] => {
            let k_in = parse_alphabet(k_in, header_no)?;
            let k_out = parse_alphabet(k_out, header_no)?;
            parse_transducer_body(k_in, k_out, lines).map(Machine::Transducer)
        }
        ["automaton", k] => {
            let k = parse_alphabet(k, header_no)?;
            parse_automaton_body(k, lines).map(Machine::FinalState)
        }
        _ => Err(syntax(
            header_no,
            "expected `transducer <k_in> <k_out>` or `automaton <k>`",
        )),
    }
}

fn parse_transducer_body<'a>(
    k_in: u8,
    k_out: u8,
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<Transducer> {
    let mut builder = TransducerBuilder::new(k_in, k_out);
    let mut declared: Vec<String> = Vec::new();
    for (no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["state", name] => {
                builder.state(name);
                declared.push((*name).to_string());
            }
            [from, input, "->", to, output] => {
                if !declared.iter().any(|n| n == from) {
                    return Err(Error::UnknownState {
                        name: (*from).to_string(),
                    });
                }
                if !declared.iter().any(|n| n == to) {
                    return Err(Error::UnknownState {
                        name: (*to).to_string(),
                    });
                }
                let input = parse_letter(input, k_in, no)?;
                let output = parse_letter(output, k_out, no)?;
                builder
                    .transition(from, input, to, output)
                    .map_err(|e| match e {
                        Error::SyntaxError { msg, .. } => syntax(no, msg),
                        other => other,
                    })?;
            }
            _ => return Err(syntax(no, format!("unrecognized line {line:?}"))),
        }
    }
    builder.build()
}

fn parse_automaton_body<'a>(
    k: u8,
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<FinalStateAutomaton> {
    let mut builder = FinalStateBuilder::new(k);
    let mut initial: Option<(usize, String)> = None;
    let mut declared: Vec<String> = Vec::new();
    for (no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["initial", name] => {
                if initial.is_some() {
                    return Err(syntax(no, "duplicate initial declaration"));
                }
                initial = Some((no, (*name).to_string()));
            }
            ["state", name, out] => {
                let sign = match *out {
                    "+1" | "1" => Sign::Plus,
                    "-1" => Sign::Minus,
                    other => return Err(syntax(no, format!("bad output symbol {other:?}"))),
                };
                builder.state(name, sign);
                declared.push((*name).to_string());
            }
            [from, input, "->", to] => {
                if !declared.iter().any(|n| n == from) {
                    return Err(Error::UnknownState {
                        name: (*from).to_string(),
                    });
                }
                if !declared.iter().any(|n| n == to) {
                    return Err(Error::UnknownState {
                        name: (*to).to_string(),
                    });
                }
                let input = parse_letter(input, k, no)?;
                builder.transition(from, input, to).map_err(|e| match e {
                    Error::SyntaxError { msg, .. } => syntax(no, msg),
                    other => other,
                })?;
            }
            _ => return Err(syntax(no, format!("unrecognized line {line:?}"))),
        }
    }
    let (_, initial) = initial.ok_or_else(|| syntax(1, "missing initial declaration"))?;
    builder.build(&initial)
}

/// Canonical text form of a transducer.
pub fn serialize_transducer(t: &Transducer) -> String {
    let mut order: Vec<usize> = (0..t.state_count()).collect();
    order.sort_by(|&a, &b| t.state_names()[a].cmp(&t.state_names()[b]));
    let mut out = String::new();
    writeln!(out, "transducer {} {}", t.k_in(), t.k_out()).unwrap();
    for &q in &order {
        writeln!(out, "state {}", t.state_names()[q]).unwrap();
    }
    for &q in &order {
        for x in 0..usize::from(t.k_in()) {
            writeln!(
                out,
                "{} {} -> {} {}",
                t.state_names()[q],
                x,
                t.state_names()[t.tau_row(q)[x]],
                t.pi_row(q)[x]
            )
            .unwrap();
        }
    }
    out
}

/// Canonical text form of a final-state machine.
pub fn serialize_final_state_automaton(a: &FinalStateAutomaton) -> String {
    let mut order: Vec<usize> = (0..a.state_count()).collect();
    order.sort_by(|&p, &q| a.state_names()[p].cmp(&a.state_names()[q]));
    let mut out = String::new();
    writeln!(out, "automaton {}", a.alphabet_size()).unwrap();
    writeln!(out, "initial {}", a.state_names()[a.initial_index()]).unwrap();
    for &q in &order {
        let sign = match a.output_row()[q] {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        };
        writeln!(out, "state {} {}", a.state_names()[q], sign).unwrap();
    }
    for &q in &order {
        for x in 0..usize::from(a.alphabet_size()) {
            writeln!(
                out,
                "{} {} -> {}",
                a.state_names()[q],
                x,
                a.state_names()[a.tau_row(q)[x]]
            )
            .unwrap();
        }
    }
    out
}
