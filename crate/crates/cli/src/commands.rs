use crate::output::{emit_rows, print_json, resolve, Format};
use crate::{Command, FetchModeArg, OeisCheck, VerifyWhat};
use natmat_core::bits::{is_dyck, is_dyck_oracle};
use natmat_core::forest::{tree_prefix, verify_tree_partition};
use natmat_core::matrix::{pack, progression_term, unpack, verify_progression_partition, Coord};
use natmat_core::primes::{
    census_range, linnik_check, LinnikReport, PrimalityPolicy, PrimeLabError,
    DEFAULT_CENSUS_CEILING,
};
use natmat_core::segments::{segment, segment_max, segment_terms, SegmentError};
use natmat_core::Nat;
use natmat_oeis::{
    check_chain_rows, dyck_crosscheck, prime_dyck_crosscheck, FetchMode, OeisClient, OeisError,
    SequenceId,
};
use serde_json::json;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Verification(String),
    Resource(String),
    Network(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Network(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m)
            | CliError::Verification(m)
            | CliError::Resource(m)
            | CliError::Network(m) => f.write_str(m),
        }
    }
}

impl From<SegmentError> for CliError {
    fn from(e: SegmentError) -> Self {
        CliError::Resource(e.to_string())
    }
}

impl From<PrimeLabError> for CliError {
    fn from(e: PrimeLabError) -> Self {
        CliError::Resource(e.to_string())
    }
}

impl From<OeisError> for CliError {
    fn from(e: OeisError) -> Self {
        match e {
            OeisError::InvalidId { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Network(e.to_string()),
        }
    }
}

pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Tree { k, count, format } => {
            require(count >= 1, "count must be at least 1")?;
            let terms = tree_prefix(&k, count);
            // The even root is never flagged; the split into member and
            // non-member terms concerns the odd nodes.
            flagged_terms(resolve(format), terms, true)
        }
        Command::Progression { n, count, format } => {
            require(count >= 1, "count must be at least 1")?;
            let terms: Vec<Nat> = (0..count as u64)
                .map(|k| progression_term(n, &Nat::from(k)))
                .collect();
            flagged_terms(resolve(format), terms, false)
        }
        Command::Pack { x, y, format } => {
            let value = pack(&Coord { x: x.clone(), y });
            match resolve(format) {
                Format::Table => println!("{value}"),
                Format::Csv => {
                    println!("x,y,value");
                    println!("{x},{y},{value}");
                }
                Format::Json => print_json(&json!({
                    "x": x.to_string(), "y": y, "value": value.to_string(),
                })),
            }
            Ok(())
        }
        Command::Unpack { n, format } => {
            let c = unpack(&n);
            match resolve(format) {
                Format::Table => println!("x={} y={}", c.x, c.y),
                Format::Csv => {
                    println!("x,y");
                    println!("{},{}", c.x, c.y);
                }
                Format::Json => print_json(&json!({
                    "x": c.x.to_string(), "y": c.y,
                })),
            }
            Ok(())
        }
        Command::Segment { y, limit, format } => {
            let terms = segment_terms(y, limit)?;
            let d = segment(y);
            let max = segment_max(y);
            match resolve(format) {
                Format::Table => {
                    println!(
                        "S_{y}: first={} diff={} length={} max={}",
                        d.first, d.diff, d.length, max
                    );
                    println!("{}", join_spaced(&terms));
                }
                Format::Csv => {
                    println!("k,term");
                    for (k, t) in terms.iter().enumerate() {
                        println!("{k},{t}");
                    }
                }
                Format::Json => print_json(&json!({
                    "y": y,
                    "first": d.first.to_string(),
                    "diff": d.diff.to_string(),
                    "length": d.length.to_string(),
                    "max": max.to_string(),
                    "terms": terms.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                })),
            }
            Ok(())
        }
        Command::Ap { k, format } => {
            require(k >= 1, "progression length must be at least 1")?;
            let terms = natmat_core::segments::ap_of_length(k);
            match resolve(format) {
                Format::Table => println!("{}", join_spaced(&terms)),
                Format::Csv => {
                    println!("k,term");
                    for (k, t) in terms.iter().enumerate() {
                        println!("{k},{t}");
                    }
                }
                Format::Json => print_json(&json!({
                    "length": k,
                    "terms": terms.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                })),
            }
            Ok(())
        }
        Command::Census {
            from,
            to,
            rounds,
            seed,
            format,
        } => {
            require(from <= to, "--from must not exceed --to")?;
            let policy = PrimalityPolicy { rounds, seed };
            let rows = census_range(from, to, &policy, census_ceiling()?)?;
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.y.to_string(),
                        r.prime_count.to_string(),
                        r.segment_size.to_string(),
                        r.percent.clone(),
                    ]
                })
                .collect();
            let json_rows = rows
                .iter()
                .map(|r| {
                    json!({
                        "y": r.y, "primes": r.prime_count,
                        "size": r.segment_size, "percent": r.percent,
                    })
                })
                .collect();
            emit_rows(
                resolve(format),
                &["y", "primes", "size", "percent"],
                &table,
                json_rows,
            );
            Ok(())
        }
        Command::LeastPrime {
            from,
            to,
            rounds,
            seed,
            format,
        } => {
            require(from >= 1, "--from must be at least 1")?;
            require(from <= to, "--from must not exceed --to")?;
            let policy = PrimalityPolicy { rounds, seed };
            let reports = collect_linnik(from, to, &policy)?;
            let table: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.least.y.to_string(),
                        r.least.x_position.to_string(),
                        r.least.prime_value.to_string(),
                        r.least.certainty.to_string(),
                        format!("{:e}", r.ratio),
                    ]
                })
                .collect();
            let json_rows = reports
                .iter()
                .map(|r| {
                    json!({
                        "y": r.least.y, "x": r.least.x_position,
                        "prime": r.least.prime_value.to_string(),
                        "certainty": r.least.certainty.to_string(),
                        "ratio": r.ratio,
                    })
                })
                .collect();
            emit_rows(
                resolve(format),
                &["y", "x", "prime", "certainty", "ratio"],
                &table,
                json_rows,
            );
            Ok(())
        }
        Command::Linnik {
            from,
            to,
            rounds,
            seed,
            format,
        } => {
            require(from >= 1, "--from must be at least 1")?;
            require(from <= to, "--from must not exceed --to")?;
            let policy = PrimalityPolicy { rounds, seed };
            let reports = collect_linnik(from, to, &policy)?;
            let table: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.least.y.to_string(),
                        r.least.x_position.to_string(),
                        r.least.prime_value.to_string(),
                        r.bound.to_string(),
                        format!("{:e}", r.ratio),
                        r.holds.to_string(),
                        format!("{:e}", r.relative_position),
                    ]
                })
                .collect();
            let json_rows = reports
                .iter()
                .map(|r| {
                    json!({
                        "y": r.least.y, "x": r.least.x_position,
                        "prime": r.least.prime_value.to_string(),
                        "bound": r.bound.to_string(),
                        "ratio": r.ratio,
                        "holds": r.holds,
                        "relative_position": r.relative_position,
                    })
                })
                .collect();
            emit_rows(
                resolve(format),
                &["y", "x", "prime", "bound", "ratio", "holds", "rel_pos"],
                &table,
                json_rows,
            );
            if let Some(r) = reports.iter().find(|r| !r.holds) {
                return Err(CliError::Verification(format!(
                    "bound violated at y = {}: p = {} ≥ {}",
                    r.least.y, r.least.prime_value, r.bound
                )));
            }
            Ok(())
        }
        Command::Verify { what, bound } => {
            require(bound >= 1, "--bound must be at least 1")?;
            verify(what, bound)
        }
        Command::Oeis {
            check,
            mode,
            bound,
            terms,
        } => {
            let client = OeisClient::from_env();
            let mode = match mode {
                FetchModeArg::CacheOnly => FetchMode::CacheOnly,
                FetchModeArg::Fetch => FetchMode::FetchIfMissing,
            };
            oeis(check, &client, mode, bound, terms)
        }
    }
}

fn require(condition: bool, message: &str) -> Result<(), CliError> {
    if condition {
        Ok(())
    } else {
        Err(CliError::Usage(message.to_string()))
    }
}

fn census_ceiling() -> Result<u32, CliError> {
    match std::env::var("NATMAT_CENSUS_CEILING") {
        Ok(v) => v.parse().map_err(|_| {
            CliError::Usage(format!("NATMAT_CENSUS_CEILING must be an integer, got {v:?}"))
        }),
        Err(_) => Ok(DEFAULT_CENSUS_CEILING),
    }
}

fn join_spaced(terms: &[Nat]) -> String {
    terms
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// tree/progression rendering: non-Dyck terms carry a `*` flag in table
/// mode (position 0 exempt when it is a chain root); CSV/JSON report the
/// predicate verbatim.
fn flagged_terms(format: Format, terms: Vec<Nat>, root_first: bool) -> Result<(), CliError> {
    match format {
        Format::Table => {
            let line = terms
                .iter()
                .enumerate()
                .map(|(n, t)| {
                    if (root_first && n == 0) || is_dyck(t) {
                        t.to_string()
                    } else {
                        format!("{t}*")
                    }
                })
                .collect::<Vec<_>>()
                .join(", ");
            println!("{line}");
        }
        Format::Csv => {
            println!("n,value,dyck");
            for (n, t) in terms.iter().enumerate() {
                println!("{n},{t},{}", is_dyck(t));
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = terms
                .iter()
                .enumerate()
                .map(|(n, t)| json!({"n": n, "value": t.to_string(), "dyck": is_dyck(t)}))
                .collect();
            print_json(&serde_json::Value::Array(rows));
        }
    }
    Ok(())
}

fn collect_linnik(
    from: u32,
    to: u32,
    policy: &PrimalityPolicy,
) -> Result<Vec<LinnikReport>, CliError> {
    (from..=to)
        .map(|y| linnik_check(y, policy).map_err(CliError::from))
        .collect()
}

fn verify(what: VerifyWhat, bound: u64) -> Result<(), CliError> {
    match what {
        VerifyWhat::Trees => {
            let report = verify_tree_partition(bound);
            println!("{report}");
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::Verification(format!(
                    "chain partition failed: {report}"
                )))
            }
        }
        VerifyWhat::Progressions => {
            let report = verify_progression_partition(bound);
            println!("{report}");
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::Verification(format!(
                    "progression partition failed: {report}"
                )))
            }
        }
        VerifyWhat::Bijection => {
            for n in 0..bound {
                let n = Nat::from(n);
                if pack(&unpack(&n)) != n {
                    return Err(CliError::Verification(format!(
                        "pack(unpack({n})) diverged"
                    )));
                }
            }
            for x in 0u64..512 {
                for y in 0..10u32 {
                    let c = Coord {
                        x: Nat::from(x),
                        y,
                    };
                    if unpack(&pack(&c)) != c {
                        return Err(CliError::Verification(format!(
                            "unpack(pack(({x}, {y}))) diverged"
                        )));
                    }
                }
            }
            println!("bound={bound} ok: round trip holds (plus 512x10 grid)");
            Ok(())
        }
        VerifyWhat::Dyck => {
            for n in 0..bound {
                let n = Nat::from(n);
                if is_dyck(&n) != is_dyck_oracle(&n) {
                    return Err(CliError::Verification(format!(
                        "predicate disagrees with oracle at {n}"
                    )));
                }
            }
            println!("bound={bound} ok: streaming predicate equals suffix oracle");
            Ok(())
        }
    }
}

fn oeis(
    check: OeisCheck,
    client: &OeisClient,
    mode: FetchMode,
    bound: u64,
    terms: u32,
) -> Result<(), CliError> {
    match check {
        OeisCheck::Table1 => {
            let reports = check_chain_rows(client, mode, terms)?;
            let mut clean = true;
            for (id, report) in &reports {
                println!("{id}  {report}");
                clean &= report.is_clean();
            }
            if clean {
                println!("{} rows matched", reports.len());
                Ok(())
            } else {
                Err(CliError::Verification(
                    "chain identification mismatch".to_string(),
                ))
            }
        }
        OeisCheck::Dyck => {
            let id = SequenceId::parse("A036991")?;
            let seq = client.fetch_sequence(&id, mode)?;
            let report = dyck_crosscheck(bound, &seq)?;
            println!("{id}  {report}");
            if report.is_clean() {
                Ok(())
            } else {
                Err(CliError::Verification(format!("{id} mismatch: {report}")))
            }
        }
        OeisCheck::Primes => {
            let id = SequenceId::parse("A350577")?;
            let seq = client.fetch_sequence(&id, mode)?;
            let report = prime_dyck_crosscheck(bound, &seq, &PrimalityPolicy::default())?;
            println!("{id}  {report}");
            if report.is_clean() {
                Ok(())
            } else {
                Err(CliError::Verification(format!("{id} mismatch: {report}")))
            }
        }
    }
}
