use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bpchi_core::algebra::peck_bound;
use bpchi_core::clis::{build_h, canonical_instance, characteristic_vectors, chi_lower_bound_check, gamma_from_partition, yannakakis_protocol, AmbiguousEdge};
use bpchi_core::config::RunConfig;
use bpchi_core::counterexample::{build_g, cover_g_power, partition_g};
use bpchi_core::graph::verify_biclique_system;
use bpchi_core::io;
use bpchi_core::oracles::{chromatic_number, independence_number, min_biclique_partition};
use bpchi_core::report::{demo, suite};
use bpchi_core::{Certificate, Error};

#[derive(Parser)]
#[command(name = "bpchi", version, about = "Biclique partitions vs. chromatic number: constructions and exact checks")]
struct Cli {
    /// Largest n^7 accepted when building G(n).
    #[arg(long, global = true, default_value_t = RunConfig::default().vertex_limit)]
    vertex_limit: u64,
    /// Largest n^(7t) accepted for OR powers.
    #[arg(long, global = true, default_value_t = RunConfig::default().product_vertex_limit)]
    product_vertex_limit: u64,
    /// Largest number of (clique, independent set) pairs in build-h.
    #[arg(long, global = true, default_value_t = RunConfig::default().pair_limit)]
    pair_limit: usize,
    /// Search-node budget for each oracle call.
    #[arg(long, global = true, default_value_t = RunConfig::default().node_budget)]
    node_budget: u64,
    /// How to resolve pairs of bicliques that share neither a 0 nor a 1.
    #[arg(long, global = true, value_enum, default_value_t = Ambiguous::Nonedge)]
    ambiguous_edge: Ambiguous,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Ambiguous {
    Edge,
    Nonedge,
}

#[derive(Subcommand)]
enum Command {
    /// Build G(n), partition it, compute alpha and report.
    Demo {
        #[arg(long)]
        n: usize,
    },
    /// Run a named check suite: cube, partition, peck or clis.
    Suite {
        #[arg(long = "suite", value_name = "NAME")]
        name: String,
    },
    /// Write G(n) as DIMACS.
    BuildG {
        #[arg(long)]
        n: usize,
    },
    /// Write the biclique partition of G(n).
    Partition {
        #[arg(long)]
        n: usize,
    },
    /// Write the t-cover of the OR power G(n)^t.
    CoverPower {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
    /// Check a biclique system against a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        /// Override the multiplicity bound stored in the system file.
        #[arg(long)]
        t: Option<usize>,
    },
    /// Exact independence number.
    Alpha {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Exact chromatic number.
    Chi {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Exact minimum biclique t-cover (t = 1: partition).
    Bp {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        t: usize,
    },
    /// 1 + sum_{s<=t} 2^(s-1) C(d, s).
    Peck {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        t: u64,
    },
    /// Characteristic vectors of a partition.
    Vectors {
        #[arg(long)]
        partition: PathBuf,
    },
    /// The graph on the bicliques of a partition, as DIMACS.
    Gamma {
        #[arg(long)]
        partition: PathBuf,
    },
    /// The clique/independent-set instance of a partition, as JSON.
    Instance {
        #[arg(long)]
        partition: PathBuf,
    },
    /// Compare the zero-cover number of the instance with chi of the graph.
    ChiBound {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        partition: PathBuf,
    },
    /// Run the deterministic protocol on one input pair of an instance.
    Protocol {
        #[arg(long)]
        instance: PathBuf,
        /// Index of Alice's clique (0-based, as listed in the instance).
        #[arg(long)]
        clique: usize,
        /// Index of Bob's independent set.
        #[arg(long)]
        independent: usize,
    },
    /// Build H from a graph and verify its 2-cover; writes the system.
    BuildH {
        #[arg(long)]
        graph: PathBuf,
    },
}

enum Outcome {
    Pass,
    Fail,
}

fn read(path: &Path) -> Result<String, Error> {
    Ok(std::fs::read_to_string(path)?)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn certificate_outcome(out: &Option<PathBuf>, c: &Certificate) -> Result<Outcome, Error> {
    emit(out, &io::write_certificate(c))?;
    Ok(if c.passed() { Outcome::Pass } else { Outcome::Fail })
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let cfg = RunConfig {
        vertex_limit: cli.vertex_limit,
        product_vertex_limit: cli.product_vertex_limit,
        pair_limit: cli.pair_limit,
        node_budget: cli.node_budget,
        ambiguous_edge: match cli.ambiguous_edge {
            Ambiguous::Edge => AmbiguousEdge::Edge,
            Ambiguous::Nonedge => AmbiguousEdge::Nonedge,
        },
    };
    cfg.validate()?;
    let out = &cli.out;
    match cli.command {
        Command::Demo { n } => {
            let report = demo(n, &cfg)?;
            emit(out, &report.to_text())?;
            Ok(if report.passed() { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Suite { name } => {
            let certs = suite(&name, &cfg)?;
            let mut text = String::new();
            for c in &certs {
                text.push_str(&format!("{c}\n"));
            }
            for c in &certs {
                text.push_str(&io::write_certificate(c));
            }
            emit(out, &text)?;
            Ok(if certs.iter().all(Certificate::passed) { Outcome::Pass } else { Outcome::Fail })
        }
        Command::BuildG { n } => {
            emit(out, &io::write_dimacs(&build_g(n, cfg.vertex_limit)?))?;
            Ok(Outcome::Pass)
        }
        Command::Partition { n } => {
            emit(out, &io::write_system(&partition_g(n, cfg.vertex_limit)?))?;
            Ok(Outcome::Pass)
        }
        Command::CoverPower { n, t } => {
            let (_, cover) = cover_g_power(n, t, cfg.vertex_limit, cfg.product_vertex_limit)?;
            emit(out, &io::write_system(&cover))?;
            Ok(Outcome::Pass)
        }
        Command::Verify { graph, partition, t } => {
            let g = io::read_dimacs(&read(&graph)?)?;
            let mut sys = io::read_system(&read(&partition)?)?;
            if let Some(t) = t {
                sys = sys.with_bound(t)?;
            }
            certificate_outcome(out, &verify_biclique_system(&g, &sys)?)
        }
        Command::Alpha { graph } => {
            let g = io::read_dimacs(&read(&graph)?)?;
            let limits = bpchi_core::oracles::SearchLimits::new(
                bpchi_core::oracles::SearchLimits::INDEPENDENCE.max_order,
                cfg.node_budget,
            );
            let r = independence_number(&g, &limits)?;
            let set: Vec<usize> = r.set.iter().map(|v| v + 1).collect();
            emit(out, &format!("alpha: {}\nset: {set:?}\n", r.size))?;
            Ok(Outcome::Pass)
        }
        Command::Chi { graph } => {
            let g = io::read_dimacs(&read(&graph)?)?;
            let c = chromatic_number(&g, &cfg.chromatic_limits())?;
            let classes: Vec<Vec<usize>> = c.classes().iter().map(|cl| cl.iter().map(|v| v + 1).collect()).collect();
            emit(out, &format!("chi: {}\nclasses: {classes:?}\n", c.colors))?;
            Ok(Outcome::Pass)
        }
        Command::Bp { graph, t } => {
            let g = io::read_dimacs(&read(&graph)?)?;
            let r = min_biclique_partition(&g, t, &cfg.biclique_limits())?;
            emit(out, &format!("c minimum size {}\n{}", r.size, io::write_system(&r.system)))?;
            Ok(Outcome::Pass)
        }
        Command::Peck { d, t } => {
            emit(out, &format!("{}\n", peck_bound(d, t)))?;
            Ok(Outcome::Pass)
        }
        Command::Vectors { partition } => {
            let sys = io::read_system(&read(&partition)?)?;
            emit(out, &io::write_vectors(&characteristic_vectors(&sys)?))?;
            Ok(Outcome::Pass)
        }
        Command::Gamma { partition } => {
            let sys = io::read_system(&read(&partition)?)?;
            emit(out, &io::write_dimacs(&gamma_from_partition(&sys, cfg.ambiguous_edge)?))?;
            Ok(Outcome::Pass)
        }
        Command::Instance { partition } => {
            let sys = io::read_system(&read(&partition)?)?;
            emit(out, &io::write_instance(&canonical_instance(&sys, cfg.ambiguous_edge)?))?;
            Ok(Outcome::Pass)
        }
        Command::ChiBound { graph, partition } => {
            let g = io::read_dimacs(&read(&graph)?)?;
            let sys = io::read_system(&read(&partition)?)?;
            certificate_outcome(out, &chi_lower_bound_check(&g, &sys, &cfg.rectangle_limits(), &cfg.chromatic_limits())?)
        }
        Command::Protocol {
            instance,
            clique,
            independent,
        } => {
            let inst = io::read_instance(&read(&instance)?)?;
            let t = yannakakis_protocol(&inst, clique, independent)?;
            let ok = t.answer == inst.matrix().get(clique, independent);
            emit(out, &io::write_transcript(&t))?;
            Ok(if ok { Outcome::Pass } else { Outcome::Fail })
        }
        Command::BuildH { graph } => {
            let gamma = io::read_dimacs(&read(&graph)?)?;
            let h = build_h(&gamma, cfg.pair_limit)?;
            let cert = h.verify()?;
            eprintln!("{cert}");
            emit(out, &io::write_system(&h.system))?;
            Ok(if cert.passed() { Outcome::Pass } else { Outcome::Fail })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::WellDefinedness { .. } => 1,
                Error::ResourceLimit { .. } => 3,
                Error::InvalidInput(_) | Error::Parse { .. } | Error::Io(_) => 2,
            })
        }
    }
}
