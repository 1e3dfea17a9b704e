//! Seeded random programs and formulas for the property checks.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::syntax::{Atom, Formula, ImplKind, Literal, Program, Rule};
use crate::truth::TruthValue;

const MAX_GENERATED_ATOMS: usize = 63;

/// The program class a generator targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProgramClass {
    /// Atom heads; bodies `⊤`, `⊥` or conjunctions of literals.
    WcNormal,
    /// Literal heads; implication-free bodies, possibly non-regular.
    NormalNested,
    /// Literal heads; bodies over `∧ ∨ ∼` and constants.
    Basic,
    /// Regular implication-free heads and bodies.
    Regular,
}

impl ProgramClass {
    pub const ALL: [ProgramClass; 4] = [
        ProgramClass::WcNormal,
        ProgramClass::NormalNested,
        ProgramClass::Basic,
        ProgramClass::Regular,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProgramClass::WcNormal => "wc_normal",
            ProgramClass::NormalNested => "normal_nested",
            ProgramClass::Basic => "basic",
            ProgramClass::Regular => "regular",
        }
    }
}

impl fmt::Display for ProgramClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProgramClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProgramClass::ALL
            .into_iter()
            .find(|c| c.name() == s || c.name().replace('_', "-") == s)
            .ok_or_else(|| Error::UnsatisfiableGenerator(format!("unknown program class `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub atoms: usize,
    pub rules: usize,
    pub class: ProgramClass,
    pub seed: u64,
    /// Never define both `A` and `∼A`.
    pub one_sign_per_atom: bool,
}

impl GenSpec {
    pub fn new(atoms: usize, rules: usize, class: ProgramClass, seed: u64) -> Self {
        GenSpec {
            atoms,
            rules,
            class,
            seed,
            one_sign_per_atom: false,
        }
    }
}

pub fn atom_names(n: usize) -> Vec<Atom> {
    (0..n)
        .map(|i| {
            let name = if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("x{i}")
            };
            Atom::new(&name).expect("generated names are valid")
        })
        .collect()
}

/// A pseudo-random program of the requested class over exactly
/// `spec.atoms` declared atoms. Equal specs give equal programs.
pub fn generate_program(spec: GenSpec) -> Result<Program> {
    if spec.atoms > MAX_GENERATED_ATOMS {
        return Err(Error::UnsatisfiableGenerator(format!(
            "{} atoms exceeds the maximum of {MAX_GENERATED_ATOMS}",
            spec.atoms
        )));
    }
    if spec.atoms == 0 && spec.rules > 0 {
        return Err(Error::UnsatisfiableGenerator(format!(
            "{} rules of class {} need at least one atom",
            spec.rules, spec.class
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let atoms = atom_names(spec.atoms);
    let signs: Vec<bool> = atoms.iter().map(|_| rng.gen_bool(0.5)).collect();
    let gen = FormulaGen { atoms: &atoms };
    let mut program =
        Program::with_declared(Vec::new(), atoms.iter().cloned().collect::<BTreeSet<_>>());
    for _ in 0..spec.rules {
        let head_literal = |rng: &mut ChaCha8Rng| {
            let i = rng.gen_range(0..atoms.len());
            let neg = if spec.one_sign_per_atom {
                signs[i]
            } else {
                rng.gen_bool(0.5)
            };
            Literal {
                atom: atoms[i].clone(),
                strongly_negated: neg,
            }
            .to_formula()
        };
        let (head, body) = match spec.class {
            ProgramClass::WcNormal => {
                let head = Formula::Atom(atoms.choose(&mut rng).unwrap().clone());
                let body = match rng.gen_range(0..10) {
                    0 => Formula::top(),
                    1 | 2 => Formula::bottom(),
                    _ => {
                        let n = rng.gen_range(1..=3);
                        Formula::conjunction((0..n).map(|_| gen.literal(&mut rng)))
                    }
                };
                (head, body)
            }
            ProgramClass::NormalNested => (
                head_literal(&mut rng),
                gen.formula(&mut rng, 2, Connectives::ALL),
            ),
            ProgramClass::Basic => (
                head_literal(&mut rng),
                gen.formula(&mut rng, 2, Connectives::BASIC),
            ),
            ProgramClass::Regular => {
                let head = if rng.gen_bool(0.7) {
                    gen.literal(&mut rng)
                } else {
                    gen.formula(&mut rng, 1, Connectives::REGULAR)
                };
                (head, gen.formula(&mut rng, 2, Connectives::REGULAR))
            }
        };
        program.push(Rule::new(head, body)?);
    }
    Ok(program)
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Connectives {
    weak_neg: bool,
    compound_strong_neg: bool,
}

impl Connectives {
    pub const ALL: Connectives = Connectives {
        weak_neg: true,
        compound_strong_neg: true,
    };
    pub const BASIC: Connectives = Connectives {
        weak_neg: false,
        compound_strong_neg: true,
    };
    pub const REGULAR: Connectives = Connectives {
        weak_neg: true,
        compound_strong_neg: false,
    };
}

pub(crate) struct FormulaGen<'a> {
    pub atoms: &'a [Atom],
}

impl FormulaGen<'_> {
    pub fn literal(&self, rng: &mut impl Rng) -> Formula {
        let atom = Formula::Atom(self.atoms.choose(rng).unwrap().clone());
        if rng.gen_bool(0.5) {
            Formula::strong_neg(atom)
        } else {
            atom
        }
    }

    fn constant(rng: &mut impl Rng) -> Formula {
        Formula::Const(*TruthValue::ALL.choose(rng).unwrap())
    }

    /// An implication-free formula of depth at most `depth`.
    pub fn formula(&self, rng: &mut impl Rng, depth: usize, c: Connectives) -> Formula {
        if depth == 0 || rng.gen_bool(0.3) {
            return if rng.gen_bool(0.1) {
                Self::constant(rng)
            } else {
                self.literal(rng)
            };
        }
        loop {
            match rng.gen_range(0..5) {
                0 => {
                    return Formula::and(
                        self.formula(rng, depth - 1, c),
                        self.formula(rng, depth - 1, c),
                    )
                }
                1 => {
                    return Formula::or(
                        self.formula(rng, depth - 1, c),
                        self.formula(rng, depth - 1, c),
                    )
                }
                2 if c.weak_neg => return Formula::weak_neg(self.formula(rng, depth - 1, c)),
                3 if c.compound_strong_neg => {
                    return Formula::strong_neg(self.formula(rng, depth - 1, c))
                }
                4 => return self.literal(rng),
                _ => continue,
            }
        }
    }

    /// A Łukasiewicz formula (`∼ ∧ ∨ ←Ł`, constants) of depth at most
    /// `depth`.
    pub fn lukasiewicz(&self, rng: &mut impl Rng, depth: usize) -> Formula {
        if depth == 0 || rng.gen_bool(0.2) {
            return if rng.gen_bool(0.15) {
                Self::constant(rng)
            } else {
                Formula::Atom(self.atoms.choose(rng).unwrap().clone())
            };
        }
        let d = depth - 1;
        match rng.gen_range(0..5) {
            0 => Formula::strong_neg(self.lukasiewicz(rng, d)),
            1 => Formula::and(self.lukasiewicz(rng, d), self.lukasiewicz(rng, d)),
            2 => Formula::or(self.lukasiewicz(rng, d), self.lukasiewicz(rng, d)),
            _ => Formula::implies(
                ImplKind::Lukasiewicz,
                self.lukasiewicz(rng, d),
                self.lukasiewicz(rng, d),
            ),
        }
    }
}

/// A random Łukasiewicz formula over the first `atoms` generated atom names.
pub fn generate_lukasiewicz_formula(atoms: usize, depth: usize, seed: u64) -> Result<Formula> {
    if atoms == 0 || atoms > MAX_GENERATED_ATOMS {
        return Err(Error::UnsatisfiableGenerator(format!(
            "cannot draw formulas over {atoms} atoms"
        )));
    }
    let names = atom_names(atoms);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(FormulaGen { atoms: &names }.lukasiewicz(&mut rng, depth))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let spec = GenSpec::new(3, 4, ProgramClass::WcNormal, 1);
        let p = generate_program(spec).unwrap();
        assert_eq!(p, generate_program(spec).unwrap());
        assert!(p.classify().wc_normal);
        assert_eq!(p.rules().len(), 4);
        assert_eq!(p.atoms().len(), 3);
    }

    #[test]
    fn zero_rules() {
        for class in ProgramClass::ALL {
            assert!(generate_program(GenSpec::new(2, 0, class, 9))
                .unwrap()
                .is_empty());
        }
    }

    #[test]
    fn seeds_differ() {
        let programs: BTreeSet<String> = (0..100)
            .map(|s| {
                generate_program(GenSpec::new(4, 5, ProgramClass::NormalNested, s))
                    .unwrap()
                    .to_string()
            })
            .collect();
        assert!(
            programs.len() > 95,
            "only {} distinct programs",
            programs.len()
        );
    }

    #[test]
    fn classes_hold() {
        for seed in 0..200 {
            let c = |class| {
                generate_program(GenSpec::new(4, 6, class, seed))
                    .unwrap()
                    .classify()
            };
            assert!(c(ProgramClass::WcNormal).wc_normal);
            assert!(c(ProgramClass::NormalNested).normal_nested);
            let basic = c(ProgramClass::Basic);
            assert!(basic.basic && basic.normal_nested);
            assert!(c(ProgramClass::Regular).regular);
        }
    }

    #[test]
    fn one_sign_per_atom() {
        for seed in 0..100 {
            let spec = GenSpec {
                one_sign_per_atom: true,
                ..GenSpec::new(3, 8, ProgramClass::Basic, seed)
            };
            let heads = generate_program(spec).unwrap().head_literals();
            assert!(heads.iter().all(|l| !heads.contains(&l.complement())));
        }
    }

    #[test]
    fn unsatisfiable_specs() {
        assert!(generate_program(GenSpec::new(0, 1, ProgramClass::Basic, 0)).is_err());
        assert!(generate_program(GenSpec::new(64, 1, ProgramClass::Basic, 0)).is_err());
        assert!("bogus".parse::<ProgramClass>().is_err());
        assert_eq!(
            "wc-normal".parse::<ProgramClass>().unwrap(),
            ProgramClass::WcNormal
        );
    }

    #[test]
    fn lukasiewicz_formulas_are_admissible() {
        for seed in 0..100 {
            let f = generate_lukasiewicz_formula(4, 5, seed).unwrap();
            assert!(crate::semantics::Logic::Lukasiewicz
                .check_admissible(&f)
                .is_ok());
        }
    }
}
