//! The bundled machine catalog.
//!
//! Eight machines cover everything the rest of the crate generates or
//! verifies: the move machine `AH` acting on disk configurations, the
//! carry machine `AL`, the final-state sign machine `A02`, the power-of-3
//! machine `AT`, the binary Gray-walk machine `AD`, the bit-flip carry
//! machine `AL2`, and the two geodesic generators `OH` and `OHprime`.
//! Each is stored in the text format of [`super::format`] and parsed on
//! demand.

use super::final_state::FinalStateAutomaton;
use super::format::{parse_final_state_automaton, parse_transducer};
use super::{StateId, Transducer, TransducerBuilder};
use crate::error::{Error, Result};

/// Names accepted by [`builtin`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinName {
    Ah,
    Al,
    A02,
    At,
    Ad,
    Al2,
    Oh,
    OhPrime,
}

impl BuiltinName {
    pub const ALL: [BuiltinName; 8] = [
        BuiltinName::Ah,
        BuiltinName::Al,
        BuiltinName::A02,
        BuiltinName::At,
        BuiltinName::Ad,
        BuiltinName::Al2,
        BuiltinName::Oh,
        BuiltinName::OhPrime,
    ];

    pub fn parse(name: &str) -> Result<BuiltinName> {
        match name.to_ascii_uppercase().as_str() {
            "AH" => Ok(BuiltinName::Ah),
            "AL" => Ok(BuiltinName::Al),
            "A02" => Ok(BuiltinName::A02),
            "AT" => Ok(BuiltinName::At),
            "AD" => Ok(BuiltinName::Ad),
            "AL2" => Ok(BuiltinName::Al2),
            "OH" => Ok(BuiltinName::Oh),
            "OHPRIME" => Ok(BuiltinName::OhPrime),
            _ => Err(Error::UnknownName {
                name: name.to_string(),
            }),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BuiltinName::Ah => "AH",
            BuiltinName::Al => "AL",
            BuiltinName::A02 => "A02",
            BuiltinName::At => "AT",
            BuiltinName::Ad => "AD",
            BuiltinName::Al2 => "AL2",
            BuiltinName::Oh => "OH",
            BuiltinName::OhPrime => "OHprime",
        }
    }
}

/// A catalog machine together with its default initial state.
#[derive(Debug, Clone)]
pub enum Builtin {
    Transducer {
        machine: Transducer,
        initial: StateId,
    },
    FinalState(FinalStateAutomaton),
}

/// Ternary move machine: state `a` swaps the first occurrence of 0 or 1,
/// `b` of 0 or 2, `c` of 1 or 2; `id` copies.
const AH: &str = "\
transducer 3 3
state id
state a
state b
state c
id 0 -> id 0
id 1 -> id 1
id 2 -> id 2
a 0 -> id 1
a 1 -> id 0
a 2 -> a 2
b 0 -> id 2
b 1 -> b 1
b 2 -> id 0
c 0 -> c 0
c 1 -> id 2
c 2 -> id 1
";

/// 3-to-2 carry machine; `beta` is the carry state.
const AL: &str = "\
transducer 3 2
state alpha
state beta
alpha 0 -> alpha 0
alpha 1 -> alpha 1
alpha 2 -> beta 1
beta 0 -> alpha 1
beta 1 -> beta 1
beta 2 -> beta 0
";

/// Ternary sign machine: emits -1 exactly when the lowest non-1 digit of
/// the input numeral is a 2.
const A02: &str = "\
automaton 3
initial a1
state a0 +1
state a1 +1
state a2 -1
a0 0 -> a0
a0 1 -> a0
a0 2 -> a0
a1 0 -> a0
a1 1 -> a1
a1 2 -> a2
a2 0 -> a2
a2 1 -> a2
a2 2 -> a2
";

/// Ternary machine whose integer sequence lists powers of 3; `s0` rewrites
/// every digit to 0.
const AT: &str = "\
transducer 3 3
state s1
state s0
s1 0 -> s0 1
s1 1 -> s1 0
s1 2 -> s0 1
s0 0 -> s0 0
s0 1 -> s0 0
s0 2 -> s0 0
";

/// Binary walk machine: `f` flips the first letter, `g` defers the flip
/// past the leading zeros.
const AD: &str = "\
transducer 2 2
state id
state f
state g
id 0 -> id 0
id 1 -> id 1
f 0 -> id 1
f 1 -> id 0
g 0 -> g 0
g 1 -> f 1
";

/// Binary carry-flip machine; reading most significant digit first it turns
/// a numeral into its reflected Gray code word.
const AL2: &str = "\
transducer 2 2
state l0
state l1
l0 0 -> l0 0
l0 1 -> l1 1
l1 0 -> l0 1
l1 1 -> l1 0
";

/// 2-to-3 geodesic generator in Gray-code order: state `tXY` maps 0 to X
/// and 1 to Y, descending to `tXZ` and `tYZ`.
const OH: &str = "\
transducer 2 3
state t01
state t02
state t10
state t12
state t20
state t21
t01 0 -> t02 0
t01 1 -> t12 1
t02 0 -> t01 0
t02 1 -> t21 2
t10 0 -> t12 1
t10 1 -> t02 0
t12 0 -> t10 1
t12 1 -> t20 2
t20 0 -> t21 2
t20 1 -> t01 0
t21 0 -> t20 2
t21 1 -> t10 1
";

/// 2-to-3 geodesic generator in natural order: state `qXY` maps 0 to X and
/// 1 to Y, descending to `qXZ` and `qZY`.
const OHPRIME: &str = "\
transducer 2 3
state q01
state q02
state q10
state q12
state q20
state q21
q01 0 -> q02 0
q01 1 -> q21 1
q02 0 -> q01 0
q02 1 -> q12 2
q10 0 -> q12 1
q10 1 -> q20 0
q12 0 -> q10 1
q12 1 -> q02 2
q20 0 -> q21 2
q20 1 -> q10 0
q21 0 -> q20 2
q21 1 -> q01 1
";

fn table(name: BuiltinName) -> &'static str {
    match name {
        BuiltinName::Ah => AH,
        BuiltinName::Al => AL,
        BuiltinName::A02 => A02,
        BuiltinName::At => AT,
        BuiltinName::Ad => AD,
        BuiltinName::Al2 => AL2,
        BuiltinName::Oh => OH,
        BuiltinName::OhPrime => OHPRIME,
    }
}

fn default_initial(name: BuiltinName) -> &'static str {
    match name {
        BuiltinName::Ah => "a",
        BuiltinName::Al => "alpha",
        BuiltinName::A02 => "a1",
        BuiltinName::At => "s1",
        BuiltinName::Ad => "f",
        BuiltinName::Al2 => "l0",
        BuiltinName::Oh => "t01",
        BuiltinName::OhPrime => "q01",
    }
}

/// Returns the named catalog machine and its default initial state.
pub fn builtin(name: BuiltinName) -> Builtin {
    match name {
        BuiltinName::A02 => {
            let machine =
                parse_final_state_automaton(table(name)).expect("catalog table is well-formed");
            Builtin::FinalState(machine)
        }
        _ => {
            let machine = parse_transducer(table(name)).expect("catalog table is well-formed");
            let initial = machine
                .state(default_initial(name))
                .expect("catalog default state exists");
            Builtin::Transducer { machine, initial }
        }
    }
}

fn transducer(name: BuiltinName) -> Transducer {
    match builtin(name) {
        Builtin::Transducer { machine, .. } => machine,
        Builtin::FinalState(_) => unreachable!("{} is a transducer", name.as_str()),
    }
}

pub fn ah() -> Transducer {
    transducer(BuiltinName::Ah)
}

pub fn al() -> Transducer {
    transducer(BuiltinName::Al)
}

pub fn at() -> Transducer {
    transducer(BuiltinName::At)
}

pub fn ad() -> Transducer {
    transducer(BuiltinName::Ad)
}

pub fn al2() -> Transducer {
    transducer(BuiltinName::Al2)
}

pub fn oh() -> Transducer {
    transducer(BuiltinName::Oh)
}

pub fn ohprime() -> Transducer {
    transducer(BuiltinName::OhPrime)
}

pub fn a02() -> FinalStateAutomaton {
    match builtin(BuiltinName::A02) {
        Builtin::FinalState(machine) => machine,
        Builtin::Transducer { .. } => unreachable!("A02 is a final-state machine"),
    }
}

/// The one-state identity endomorphism of the `k`-ary tree.
pub fn identity_transducer(k: u8) -> Transducer {
    let mut b = TransducerBuilder::new(k, k);
    for x in 0..k {
        b.transition("id", x, "id", x)
            .expect("identity table is valid");
    }
    b.build().expect("identity table is total")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Word;

    #[test]
    fn catalog_parses_and_names_resolve() {
        for name in BuiltinName::ALL {
            match builtin(name) {
                Builtin::Transducer { machine, initial } => {
                    assert!(machine.state_count() >= 1);
                    assert!(initial.index() < machine.state_count());
                }
                Builtin::FinalState(machine) => {
                    assert_eq!(machine.alphabet_size(), 3);
                }
            }
        }
        assert!(BuiltinName::parse("ohprime").is_ok());
        assert!(matches!(
            BuiltinName::parse("nope"),
            Err(Error::UnknownName { .. })
        ));
    }

    #[test]
    fn at_sink_rewrites_to_zero() {
        let at = at();
        let s0 = at.state("s0").unwrap();
        let w = Word::parse("2101201", 3).unwrap();
        assert_eq!(at.apply(s0, &w).unwrap().to_string(), "0000000");
    }

    #[test]
    fn ohprime_first_step() {
        let m = ohprime();
        let q01 = m.state("q01").unwrap();
        let (next, out) = m.step(q01, 0).unwrap();
        assert_eq!(m.state_name(next), "q02");
        assert_eq!(out, 0);
    }

    #[test]
    fn identity_machine_copies() {
        let t = identity_transducer(3);
        let id = t.state("id").unwrap();
        let w = Word::parse("2101", 3).unwrap();
        assert_eq!(t.apply(id, &w).unwrap(), w);
    }
}
