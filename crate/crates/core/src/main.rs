use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;

use stingray::classify::{classify_element, construct_stingray};
use stingray::cyclo::{solve_multiplicities, CyclotomicInt};
use stingray::error::Error;
use stingray::ffield::FieldSpec;
use stingray::fpoly::DEFAULT_FACTOR_SEED;
use stingray::groups::{
    deleted_perm_module, group_order, is_irreducible, sl2_module, Action, Irreducibility,
    MatrixGroup, Sl2Spec, DEFAULT_MEATAXE_ROUNDS,
};
use stingray::harness::{
    parse_mgrp, sample_stingray, signature_suite, verify_suite, write_mgrp, SignatureSpec, Suite,
};
use stingray::ppd::primitive_prime_divisors;

const EXIT_FAIL: u8 = 1;
const EXIT_INTERNAL: u8 = 2;
const EXIT_EMPTY: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "stingray",
    version,
    about = "Stingray and ppd elements of finite linear groups"
)]
struct Cli {
    /// Overrides STINGRAY_SEED and the built-in default.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Primitive prime divisors of q^e - 1.
    Ppd {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        e: u32,
    },
    /// Classify one generator of an MGRP file.
    Classify {
        #[arg(long)]
        file: PathBuf,
        /// 1-based generator index.
        #[arg(long, default_value_t = 1)]
        gen: usize,
        #[arg(long)]
        e: usize,
    },
    /// Build a stingray element or a test group and write it as MGRP.
    #[command(subcommand)]
    Construct(Construct),
    /// Exact group order by Schreier-Sims.
    Order {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        projective: bool,
    },
    /// Randomized irreducibility test.
    Irreducible {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MEATAXE_ROUNDS)]
        rounds: usize,
    },
    /// Eigenvalue multiplicities from a character value in Z[z_r].
    SolveMult {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: usize,
        /// Comma-separated coefficients b0,b1,...,b_{r-1}.
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
    },
    /// Random search for stingray elements of order r.
    SampleStingray {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        e: usize,
        #[arg(long)]
        trials: usize,
    },
    /// Run a verification suite. SIGNATURE checks a user-supplied group
    /// given by --file against --r and the optional expectations.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        order: Option<String>,
        /// Whether stingray elements of order r should exist.
        #[arg(long)]
        stingray: Option<bool>,
        #[arg(long, default_value_t = 2000)]
        trials: usize,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// diag(C, I) with C a companion block of order r.
    Stingray {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        det_one: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// A_n on the fully deleted permutation module.
    Delperm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// SL_2(q) on the natural, symmetric cube or twisted tensor module.
    Sl2 {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        module: String,
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_)
            | Error::BadTwist { .. }
            | Error::CharTooSmallForSymcube(_)
            | Error::DegreeTooSmall(_)
            | Error::CompositeQ(_) => Failure::Usage(e.to_string()),
            e => Failure::Lib(e),
        }
    }
}

fn default_seed() -> u64 {
    std::env::var("STINGRAY_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_FACTOR_SEED)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let seed = cli.seed.unwrap_or_else(default_seed);
    match cli.cmd {
        Cmd::Ppd { q, e } => {
            let res = primitive_prime_divisors(q, e)?;
            if res.primes.is_empty() {
                println!("none");
                return Ok(EXIT_EMPTY);
            }
            for r in &res.primes {
                println!("{r}");
            }
            if !res.proven {
                eprintln!("note: some primes certified probabilistically");
            }
        }
        Cmd::Classify { file, gen, e } => {
            let grp = parse_mgrp(&file)?;
            let g = gen
                .checked_sub(1)
                .and_then(|i| grp.generators().get(i))
                .ok_or_else(|| Failure::Usage(format!("no generator {gen}")))?;
            println!("{}", classify_element(g, e)?);
        }
        Cmd::Construct(c) => construct(c)?,
        Cmd::Order { file, projective } => {
            let grp = parse_mgrp(&file)?;
            let action = if projective {
                Action::Projective
            } else {
                Action::Vectors
            };
            println!("{}", group_order(&grp, action, seed)?);
        }
        Cmd::Irreducible { file, rounds } => {
            let grp = parse_mgrp(&file)?;
            match is_irreducible(&grp, seed, rounds) {
                Irreducibility::Yes => println!("YES"),
                Irreducibility::No(w) => {
                    println!("NO dim {}", w.dim());
                    for v in w.basis() {
                        let s: Vec<String> = v.iter().map(u64::to_string).collect();
                        println!("{}", s.join(" "));
                    }
                }
                Irreducibility::Inconclusive => println!("INCONCLUSIVE"),
            }
        }
        Cmd::SolveMult { r, d, chi } => {
            let chi = CyclotomicInt::parse(r, &chi)?;
            match solve_multiplicities(&chi, d, r) {
                Ok(sol) => println!("{sol}"),
                Err(Error::NoSolution) => println!("NO SOLUTION"),
                Err(e) => return Err(e.into()),
            }
        }
        Cmd::SampleStingray { file, r, e, trials } => {
            if trials == 0 {
                return Err(Failure::Usage("--trials must be at least 1".into()));
            }
            let grp = parse_mgrp(&file)?;
            println!("{}", sample_stingray(&grp, r, e, trials, seed)?);
        }
        Cmd::Verify {
            suite,
            file,
            r,
            order,
            stingray,
            trials,
        } => {
            let report = if suite.eq_ignore_ascii_case("SIGNATURE") {
                let (Some(file), Some(r)) = (file, r) else {
                    return Err(Failure::Usage("SIGNATURE needs --file and --r".into()));
                };
                let order = order
                    .map(|o| o.parse::<BigUint>())
                    .transpose()
                    .map_err(|_| Failure::Usage("bad --order".into()))?;
                if trials == 0 {
                    return Err(Failure::Usage("--trials must be at least 1".into()));
                }
                let grp = parse_mgrp(&file)?;
                let spec = SignatureSpec {
                    order,
                    r,
                    stingray,
                    trials,
                    seed,
                };
                signature_suite(&grp, &spec)?
            } else {
                let suite: Suite = suite.parse()?;
                verify_suite(suite)?
            };
            println!("{report}");
            if !report.pass() {
                return Ok(EXIT_FAIL);
            }
        }
    }
    Ok(0)
}

fn construct(c: Construct) -> Result<(), Failure> {
    let (grp, out) = match c {
        Construct::Stingray {
            q,
            d,
            r,
            det_one,
            out,
        } => {
            let g = construct_stingray(q, d, r, det_one)?;
            let field = FieldSpec::of_order(q)?;
            let label = format!("stingray d={d} q={q}");
            (MatrixGroup::new(&field, d, vec![g], &label)?, out)
        }
        Construct::Delperm { n, p, out } => {
            let m = deleted_perm_module(n, p)?;
            (
                m.group()
                    .with_label(&format!("A{n} deleted permutation module mod {p}")),
                out,
            )
        }
        Construct::Sl2 { q, module, out } => {
            let spec: Sl2Spec = module.parse()?;
            let m = sl2_module(q, spec)?;
            (m.group().with_label(&format!("SL2({q}) {spec}")), out)
        }
    };
    write_mgrp(&grp, &out)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}
