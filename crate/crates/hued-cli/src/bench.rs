//! Bound-comparison benchmark producing the fixed CSV schema
//! `instance,n,delta,r,greedy,thm4_bound,thm2_bound,exact,ms_greedy,ms_exact`.
//!
//! Rows appear in deterministic instance order; with a fixed seed every
//! column except the two wall-clock ms columns is byte-identical across
//! runs. The exact column stays empty above the --exact-max-n cutoff.

use std::path::PathBuf;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hued::{
    affine_plane, bose_triple_system, exact_chi_r, gnp_seeded, greedy_palette_bound,
    greedy_r_hued, levi_graph, pairs_system, projective_plane, skolem_triple_system,
    ExactOptions, Graph, GreedyOptions,
};

use crate::util::{emit, info, Failure};

pub const CSV_HEADER: &str =
    "instance,n,delta,r,greedy,thm4_bound,thm2_bound,exact,ms_greedy,ms_exact";

pub struct BenchConfig {
    pub family: String,
    pub n_values: Vec<usize>,
    pub p_values: Vec<f64>,
    pub r_values: Vec<usize>,
    pub systems: Vec<(String, usize)>,
    pub trials: usize,
    pub seed: u64,
    pub exact_max_n: usize,
    pub timeout_ms: Option<u64>,
    pub out: Option<PathBuf>,
}

struct BenchRecord {
    instance: String,
    n: usize,
    delta: usize,
    r: usize,
    greedy_colors: usize,
    bound_thm4: usize,
    bound_thm2: usize,
    exact: Option<usize>,
    ms_greedy: u128,
    ms_exact: Option<u128>,
}

impl BenchRecord {
    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.instance,
            self.n,
            self.delta,
            self.r,
            self.greedy_colors,
            self.bound_thm4,
            self.bound_thm2,
            self.exact.map_or(String::new(), |v| v.to_string()),
            self.ms_greedy,
            self.ms_exact.map_or(String::new(), |v| v.to_string()),
        )
    }
}

pub fn run(config: &BenchConfig) -> Result<(), Failure> {
    let records = match config.family.as_str() {
        "gnp" => bench_gnp(config)?,
        "levi" => bench_levi(config)?,
        other => return Err(Failure::input(format!("unknown bench family {other:?}"))),
    };
    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    for record in &records {
        csv.push_str(&record.csv_row());
        csv.push('\n');
    }
    emit(config.out.as_ref(), csv.as_bytes())?;
    info(format!("bench: {} instances", records.len()));
    Ok(())
}

fn measure(g: &Graph, r: usize, config: &BenchConfig, instance: String) -> Result<BenchRecord, Failure> {
    let delta = g.max_degree();
    let started = Instant::now();
    let run = greedy_r_hued(g, r, &GreedyOptions::default())?;
    let ms_greedy = started.elapsed().as_millis();
    let greedy_colors = run.coloring.colors_used();

    let bound_thm4 = greedy_palette_bound(r, delta);
    let bound_thm2 = r * delta + 1;
    if greedy_colors > bound_thm4 {
        return Err(Failure::from(hued::Error::Internal(format!(
            "{instance}: greedy used {greedy_colors} colors, above the bound {bound_thm4}"
        ))));
    }

    let (exact, ms_exact) = if g.vertex_count() <= config.exact_max_n {
        let opts = ExactOptions {
            timeout: config.timeout_ms.map(std::time::Duration::from_millis),
            ..ExactOptions::default()
        };
        let started = Instant::now();
        let result = exact_chi_r(g, r, &opts)?;
        let elapsed = started.elapsed().as_millis();
        if result.chi_r > greedy_colors {
            return Err(Failure::from(hued::Error::Internal(format!(
                "{instance}: exact {} above greedy {greedy_colors}",
                result.chi_r
            ))));
        }
        (Some(result.chi_r), Some(elapsed))
    } else {
        (None, None)
    };

    Ok(BenchRecord {
        instance,
        n: g.vertex_count(),
        delta,
        r,
        greedy_colors,
        bound_thm4,
        bound_thm2,
        exact,
        ms_greedy,
        ms_exact,
    })
}

fn bench_gnp(config: &BenchConfig) -> Result<Vec<BenchRecord>, Failure> {
    if config.n_values.is_empty() || config.p_values.is_empty() || config.r_values.is_empty() {
        return Err(Failure::input(
            "gnp bench needs --n, --p and --r value lists",
        ));
    }
    let mut seeds = ChaCha8Rng::seed_from_u64(config.seed);
    let mut records = Vec::new();
    for &n in &config.n_values {
        for &p in &config.p_values {
            for &r in &config.r_values {
                for trial in 0..config.trials {
                    let graph_seed: u64 = seeds.gen();
                    let g = gnp_seeded(n, p, graph_seed);
                    let instance = format!("gnp-n{n}-p{p}-r{r}-t{trial}");
                    records.push(measure(&g, r, config, instance)?);
                }
            }
        }
    }
    Ok(records)
}

fn bench_levi(config: &BenchConfig) -> Result<Vec<BenchRecord>, Failure> {
    if config.systems.is_empty() {
        return Err(Failure::input(
            "levi bench needs --systems kind:param[,kind:param...]",
        ));
    }
    let mut records = Vec::new();
    for (kind, param) in &config.systems {
        let system = match kind.as_str() {
            "pairs" => pairs_system(*param)?,
            "bose" => bose_triple_system(*param)?,
            "skolem" => skolem_triple_system(*param)?,
            "projective" => projective_plane(*param)?,
            "affine" => affine_plane(*param)?,
            other => {
                return Err(Failure::input(format!(
                    "unknown system kind {other:?} in --systems"
                )))
            }
        };
        let lg = levi_graph(&system)?;
        let r = system.block_size();
        let instance = format!("levi-{kind}-{param}");
        records.push(measure(lg.graph(), r, config, instance)?);
    }
    Ok(records)
}
