use std::io::{self, Write};
use std::process::ExitCode;

use bsgrowth::analysis::{
    cor31_witness_with_limit, euler_local_coeffs, euler_product_check, is_multiplicative_prefix,
    DEFAULT_SCAN_LIMIT,
};
use bsgrowth::bsgroups::{count_all, count_normal, sequence, BsParams, Kind};
use bsgrowth::oracle::{oracle_count, COUNT_CAP};
use bsgrowth::quotients::{
    center_meets_a_trivially, enumerate_quotients, nonnilpotent_witness, quotient_table,
    RealizedQuotient, DEFAULT_REALIZATION_BOUND,
};
use bsgrowth::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const SCHEMA: u64 = 1;

#[derive(Parser)]
#[command(name = "bsgrowth", version, about = "Subgroup growth of Baumslag-Solitar groups BS(p,q), p and q coprime")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Group {
    #[arg(long, allow_hyphen_values = true)]
    p: i64,
    #[arg(long, allow_hyphen_values = true)]
    q: i64,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Normal,
    All,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Normal => Kind::Normal,
            KindArg::All => Kind::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Counts a_1..a_N from the closed-form formulas.
    Count {
        #[command(flatten)]
        group: Group,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        max_n: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// List the index-n normal subgroups as metacyclic quotients.
    Quotients {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        n: u64,
        /// Also realize each quotient as a multiplication table.
        #[arg(long)]
        tables: bool,
    },
    /// Brute-force count from permutation actions (n <= 8).
    Oracle {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Compare formula, oracle and quotient enumeration for n = 1..N.
    Verify {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        max_n: u64,
    },
    /// Multiplicativity of a_1..a_N.
    Mult {
        #[command(flatten)]
        group: Group,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        max_n: u64,
    },
    /// Euler product check, or local coefficients at one prime.
    Euler {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        max_n: u64,
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long, requires = "prime")]
        terms: Option<u32>,
    },
    /// An index where the normal-subgroup counts of two groups differ.
    Distinguish {
        #[arg(long, allow_hyphen_values = true)]
        p1: i64,
        #[arg(long, allow_hyphen_values = true)]
        q1: i64,
        #[arg(long, allow_hyphen_values = true)]
        p2: i64,
        #[arg(long, allow_hyphen_values = true)]
        q2: i64,
        #[arg(long, default_value_t = DEFAULT_SCAN_LIMIT)]
        scan_max: u64,
    },
    /// A non-nilpotent finite quotient C_l x| C_k.
    WitnessNonnilpotent {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        prime: u64,
    },
}

/// Failure of a command: an error from the library, or a `verify` disagreement.
enum Failure {
    Lib(Error),
    Disagreement(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ZeroParameter { .. }
        | Error::NonCoprimeParameters { .. }
        | Error::ZeroIndex
        | Error::BadPrime { .. }
        | Error::BoundExceeded { .. } => 2,
        Error::Indistinguishable(..) => 3,
        Error::CapExceeded { .. } => 4,
        Error::Overflow(_) => 5,
        _ => 1,
    }
}

fn params(g: Group) -> Result<BsParams, Error> {
    BsParams::new(g.p, g.q)
}

fn header(b: &BsParams, kind: &str) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("p".into(), json!(b.p()));
    m.insert("q".into(), json!(b.q()));
    m.insert("kind".into(), json!(kind));
    m
}

fn table_summary(rq: &RealizedQuotient) -> Value {
    let g = &rq.table;
    json!({
        "order": g.order(),
        "image_a": rq.image_a,
        "image_t": rq.image_t,
        "order_a": g.element_order(rq.image_a),
        "order_t": g.element_order(rq.image_t),
        "abelian": g.is_abelian(),
        "dedekind": g.is_dedekind(),
        "center_order": g.center().len(),
        "rows": g.rows().collect::<Vec<_>>(),
    })
}

fn run(cmd: Command, out: &mut String) -> Result<(), Failure> {
    let json_out = |out: &mut String, v: Value| {
        out.push_str(&serde_json::to_string_pretty(&v).unwrap());
        out.push('\n');
    };
    match cmd {
        Command::Count { group, kind, max_n, format } => {
            let b = params(group)?;
            let seq = sequence(kind.into(), &b, max_n)?;
            match format {
                Format::Csv => {
                    out.push_str("n,count\n");
                    for (i, c) in seq.counts().iter().enumerate() {
                        out.push_str(&format!("{},{}\n", i + 1, c));
                    }
                }
                Format::Json => {
                    let mut m = header(&b, &seq.kind.to_string());
                    m.insert("source".into(), json!(seq.source));
                    m.insert("max_n".into(), json!(max_n));
                    m.insert("counts".into(), json!(seq.counts()));
                    json_out(out, Value::Object(m));
                }
            }
        }
        Command::Quotients { group, n, tables } => {
            let b = params(group)?;
            let quots = enumerate_quotients(&b, n)?;
            let mut list = Vec::new();
            for x in &quots {
                let mut v = serde_json::to_value(x).unwrap();
                if tables {
                    let rq = quotient_table(&b, x)?;
                    v["table"] = table_summary(&rq);
                }
                list.push(v);
            }
            let mut m = header(&b, "quotients");
            m.insert("n".into(), json!(n));
            m.insert("count".into(), json!(quots.len()));
            m.insert("quotients".into(), Value::Array(list));
            json_out(out, Value::Object(m));
        }
        Command::Oracle { group, n, kind } => {
            let b = params(group)?;
            let kind: Kind = kind.into();
            let count = oracle_count(kind, &b, n)?;
            let mut m = header(&b, &kind.to_string());
            m.insert("source".into(), json!("oracle"));
            m.insert("n".into(), json!(n));
            m.insert("count".into(), json!(count));
            m.insert("counts".into(), json!([count]));
            json_out(out, Value::Object(m));
        }
        Command::Verify { group, max_n } => {
            let b = params(group)?;
            if max_n == 0 {
                return Err(Error::ZeroIndex.into());
            }
            let mut rows = Vec::new();
            let mut agree = true;
            for n in 1..=max_n {
                let normal = count_normal(&b, n)?;
                let all = count_all(&b, n)?;
                let quots = enumerate_quotients(&b, n)?.len() as u64;
                let (oracle_normal, oracle_all) = if n <= COUNT_CAP {
                    (Some(oracle_count(Kind::Normal, &b, n)?), Some(oracle_count(Kind::All, &b, n)?))
                } else {
                    (None, None)
                };
                let ok = quots == normal
                    && oracle_normal.map_or(true, |o| o == normal)
                    && oracle_all.map_or(true, |o| o == all);
                agree &= ok;
                rows.push(json!({
                    "n": n,
                    "normal": normal,
                    "all": all,
                    "quotients": quots,
                    "oracle_normal": oracle_normal,
                    "oracle_all": oracle_all,
                    "agree": ok,
                }));
            }
            let mut m = header(&b, "verify");
            m.insert("max_n".into(), json!(max_n));
            m.insert("oracle_cap".into(), json!(COUNT_CAP));
            m.insert("agree".into(), json!(agree));
            m.insert("rows".into(), Value::Array(rows));
            let v = Value::Object(m);
            if !agree {
                return Err(Failure::Disagreement(v));
            }
            json_out(out, v);
        }
        Command::Mult { group, kind, max_n } => {
            let b = params(group)?;
            let seq = sequence(kind.into(), &b, max_n)?;
            let rep = is_multiplicative_prefix(&seq, max_n);
            let mut m = header(&b, &seq.kind.to_string());
            m.insert("max_n".into(), json!(max_n));
            m.insert("multiplicative".into(), json!(rep.holds()));
            m.insert("report".into(), json!(rep));
            m.insert("counts".into(), json!(seq.counts()));
            json_out(out, Value::Object(m));
        }
        Command::Euler { group, max_n, prime, terms } => {
            let b = params(group)?;
            let holds = euler_product_check(&b, max_n)?;
            let mut m = header(&b, "all");
            m.insert("max_n".into(), json!(max_n));
            m.insert("euler_product".into(), json!(holds));
            if let Some(l) = prime {
                let coeffs = euler_local_coeffs(&b, l, terms.unwrap_or(4))?;
                m.insert("prime".into(), json!(l));
                m.insert("counts".into(), json!(coeffs));
            }
            json_out(out, Value::Object(m));
        }
        Command::Distinguish { p1, q1, p2, q2, scan_max } => {
            let a = BsParams::new(p1, q1)?;
            let b = BsParams::new(p2, q2)?;
            let cert = cor31_witness_with_limit(&a, &b, scan_max)?;
            json_out(
                out,
                json!({
                    "schema": SCHEMA,
                    "kind": "distinguish",
                    "p": [a.p(), b.p()],
                    "q": [a.q(), b.q()],
                    "canonical": [a.canonical(), b.canonical()],
                    "certificate": cert,
                }),
            );
        }
        Command::WitnessNonnilpotent { group, prime } => {
            let b = params(group)?;
            let w = nonnilpotent_witness(&b, prime)?;
            let mut m = header(&b, "witness_nonnilpotent");
            m.insert("prime".into(), json!(prime));
            m.insert("quotient".into(), json!(w));
            if w.n <= DEFAULT_REALIZATION_BOUND {
                let rq = quotient_table(&b, &w)?;
                let mut summary = table_summary(&rq);
                summary["center_meets_a_trivially"] = json!(center_meets_a_trivially(&rq));
                m.insert("table".into(), summary);
            } else {
                m.insert("table".into(), Value::Null);
            }
            json_out(out, Value::Object(m));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    let code = match result {
        Ok(()) => 0,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
        Err(Failure::Disagreement(v)) => {
            out = serde_json::to_string_pretty(&v).unwrap() + "\n";
            eprintln!("error: formula, oracle and quotient counts disagree");
            1
        }
    };
    if io::stdout().write_all(out.as_bytes()).is_err() {
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
