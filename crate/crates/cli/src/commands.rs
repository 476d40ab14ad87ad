//! Command execution and report rendering.

use std::path::Path;

use nonstoch_core::region::confusability::ConfusabilityGraph;
use nonstoch_core::{
    capacity_region, conditional_info, nc_info, nonstochastic_info, oracle_region, overlap_partition,
    single_user_capacity, synthesize_code, verify_zero_error, Channel, Info, MessageSpec, MuTriple, Strategy, World,
};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::files::{read, tokens, ChannelFile, CodeFile, StructureFile, Triple, WorldFile};
use crate::{CliError, Command, Format};

fn decimal(x: f64) -> Box<RawValue> {
    RawValue::from_string(format!("{x:.6}")).expect("a decimal is valid JSON")
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn load_world(path: &Path) -> Result<World, CliError> {
    read::<WorldFile>(path)?.into_world()
}

fn load_channel(path: &Path) -> Result<Channel, CliError> {
    read::<ChannelFile>(path)?.into_channel()
}

fn groups(spec: &str, expected: usize) -> Result<Vec<Vec<String>>, CliError> {
    let groups: Vec<Vec<String>> = spec
        .split(',')
        .map(|g| g.split('+').map(|v| v.trim().to_string()).collect())
        .collect();
    if groups.len() != expected || groups.iter().flatten().any(String::is_empty) {
        return Err(CliError::Usage(format!(
            "--vars `{spec}` must name {expected} comma-separated groups"
        )));
    }
    Ok(groups)
}

fn refs(g: &[String]) -> Vec<&str> {
    g.iter().map(String::as_str).collect()
}

fn positive_n(n: usize) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be positive".into()));
    }
    Ok(())
}

fn only_json(format: Format, command: &str) -> Result<(), CliError> {
    if format == Format::Csv {
        return Err(CliError::Usage(format!(
            "{command} has no comma-separated form; use --format json"
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct InfoReport {
    cells: usize,
    bits: Box<RawValue>,
}

impl From<Info> for InfoReport {
    fn from(i: Info) -> InfoReport {
        InfoReport {
            cells: i.cells,
            bits: decimal(i.bits()),
        }
    }
}

#[derive(Serialize)]
struct CertificateReport {
    messages: Triple,
    noise: Vec<String>,
    y: Vec<String>,
    decoded: Option<Triple>,
}

#[derive(Serialize)]
struct VerifyReport {
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateReport>,
}

#[derive(Serialize)]
struct SynthesisReport {
    #[serde(flatten)]
    code: CodeFile,
    representatives: Vec<String>,
}

#[derive(Serialize)]
struct Row {
    mu0: usize,
    mu1: usize,
    mu2: usize,
    achievable: bool,
    witness: Option<usize>,
}

#[derive(Serialize)]
struct Corner {
    mu0: usize,
    mu1: usize,
    mu2: usize,
    rates: [Box<RawValue>; 3],
    witness: usize,
}

#[derive(Serialize)]
struct RegionReport {
    n: usize,
    strategy: &'static str,
    maximal: Vec<Corner>,
    points: Vec<Row>,
    witnesses: Vec<StructureFile>,
}

#[derive(Serialize)]
struct OracleReport {
    n: usize,
    maximal: Vec<Corner>,
    points: Vec<Row>,
    codes: Vec<CodeFile>,
}

#[derive(Serialize)]
struct SingleUserReport {
    n: usize,
    cells: usize,
    bits: Box<RawValue>,
    rate: Box<RawValue>,
    independence_number: usize,
    codebook: Vec<Vec<String>>,
}

fn corner(n: usize, mu: MuTriple, witness: usize) -> Result<Corner, CliError> {
    let [r0, r1, r2] = MessageSpec::new(n, mu)?.rates();
    Ok(Corner {
        mu0: mu.mu0,
        mu1: mu.mu1,
        mu2: mu.mu2,
        rates: [decimal(r0), decimal(r1), decimal(r2)],
        witness,
    })
}

fn csv(rows: &[Row]) -> String {
    let mut out = String::from("mu0,mu1,mu2,achievable,witness\n");
    for r in rows {
        let witness = r.witness.map(|w| w.to_string()).unwrap_or_default();
        out.push_str(&format!("{},{},{},{},{}\n", r.mu0, r.mu1, r.mu2, r.achievable, witness));
    }
    out
}

fn strategy_name(s: Strategy) -> &'static str {
    match s {
        Strategy::Auto => "auto",
        Strategy::Exhaustive => "exhaustive",
        Strategy::Packing => "packing",
    }
}

pub fn execute(command: &Command, format: Format) -> Result<String, CliError> {
    match command {
        Command::Info(args) => {
            only_json(format, "info")?;
            let w = load_world(&args.world)?;
            let g = groups(&args.vars, 2)?;
            Ok(json(&InfoReport::from(nonstochastic_info(
                &w,
                &refs(&g[0]),
                &refs(&g[1]),
            )?)))
        }
        Command::CondInfo { world, given } => {
            only_json(format, "cond-info")?;
            let w = load_world(&world.world)?;
            let g = groups(&world.vars, 2)?;
            let c = groups(given, 1)?;
            Ok(json(&InfoReport::from(conditional_info(
                &w,
                &refs(&g[0]),
                &refs(&g[1]),
                &refs(&c[0]),
            )?)))
        }
        Command::Partition(args) => {
            only_json(format, "partition")?;
            let w = load_world(&args.world)?;
            let g = groups(&args.vars, 2)?;
            let p = overlap_partition(&w, &refs(&g[0]), &refs(&g[1]))?;
            let cells: Vec<Vec<Vec<String>>> = p
                .cells()
                .iter()
                .map(|c| c.iter().map(|t| tokens(t)).collect())
                .collect();
            Ok(json(&cells))
        }
        Command::NcInfo(args) => {
            only_json(format, "nc-info")?;
            let w = load_world(&args.world)?;
            let g = groups(&args.vars, 3)?;
            Ok(json(&InfoReport::from(nc_info(
                &w,
                &refs(&g[0]),
                &refs(&g[1]),
                &refs(&g[2]),
            )?)))
        }
        Command::Synthesize {
            channel,
            structure,
            world_cap,
        } => {
            only_json(format, "synthesize")?;
            let ch = load_channel(channel)?;
            let s = read::<StructureFile>(structure)?.into_structure()?;
            let result = synthesize_code(&ch, &s, *world_cap)?;
            Ok(json(&SynthesisReport {
                code: CodeFile::from_code(&result.code),
                representatives: result.representatives,
            }))
        }
        Command::Verify {
            channel,
            code,
            world_cap,
        } => {
            only_json(format, "verify")?;
            let ch = load_channel(channel)?;
            let code = read::<CodeFile>(code)?.into_code()?;
            let v = verify_zero_error(&ch, &code, *world_cap)?;
            Ok(json(&VerifyReport {
                ok: v.ok,
                certificate: v.certificate.map(|c| CertificateReport {
                    messages: c.messages.into(),
                    noise: tokens(&c.noise),
                    y: tokens(&c.y),
                    decoded: c.decoded.map(Triple::from),
                }),
            }))
        }
        Command::Region { search, strategy, .. } => {
            positive_n(search.n)?;
            let ch = load_channel(&search.channel)?;
            let bounds = command.bounds().expect("region has bounds");
            let r = capacity_region(&ch, search.n, &bounds, (*strategy).into())?;
            let top = r.region.bounding_box();
            let rows: Vec<Row> = top
                .below()
                .map(|mu| {
                    let witness = r.witness_for(&mu).map(|(i, _)| i);
                    Row {
                        mu0: mu.mu0,
                        mu1: mu.mu1,
                        mu2: mu.mu2,
                        achievable: r.region.contains(&mu),
                        witness,
                    }
                })
                .collect();
            if format == Format::Csv {
                return Ok(csv(&rows));
            }
            let maximal = r
                .witnesses
                .iter()
                .enumerate()
                .map(|(i, (mu, _))| corner(search.n, *mu, i))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(json(&RegionReport {
                n: search.n,
                strategy: strategy_name(r.strategy),
                maximal,
                points: rows,
                witnesses: r
                    .witnesses
                    .iter()
                    .map(|(_, s)| StructureFile::from_structure(s))
                    .collect(),
            }))
        }
        Command::OracleRegion { search, mu_bound } => {
            positive_n(search.n)?;
            let ch = load_channel(&search.channel)?;
            let r = oracle_region(&ch, search.n, *mu_bound, search.budget)?;
            let mut codes = Vec::new();
            let mut rows = Vec::new();
            let mut index = std::collections::BTreeMap::new();
            for (mu, code) in &r.tested {
                let witness = code.as_ref().map(|c| {
                    codes.push(CodeFile::from_code(c));
                    index.insert(*mu, codes.len() - 1);
                    codes.len() - 1
                });
                rows.push(Row {
                    mu0: mu.mu0,
                    mu1: mu.mu1,
                    mu2: mu.mu2,
                    achievable: code.is_some(),
                    witness,
                });
            }
            if format == Format::Csv {
                return Ok(csv(&rows));
            }
            let maximal = r
                .region
                .maximal_points()
                .into_iter()
                .map(|mu| corner(search.n, mu, index[&mu]))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(json(&OracleReport {
                n: search.n,
                maximal,
                points: rows,
                codes,
            }))
        }
        Command::SingleUser { search } => {
            only_json(format, "single-user")?;
            positive_n(search.n)?;
            let ch = load_channel(&search.channel)?;
            let c = single_user_capacity(&ch, search.n, search.budget)?;
            let alpha = ConfusabilityGraph::of_channel(&ch, search.n)?.independence_number();
            if alpha != c.cells {
                return Err(nonstoch_core::Error::Internal(format!(
                    "codebook search found {} codewords but the confusability graph has independence number {alpha}",
                    c.cells
                ))
                .into());
            }
            Ok(json(&SingleUserReport {
                n: c.n,
                cells: c.cells,
                bits: decimal(c.bits()),
                rate: decimal(c.rate()),
                independence_number: alpha,
                codebook: c.codebook.iter().map(|s| tokens(s)).collect(),
            }))
        }
    }
}
