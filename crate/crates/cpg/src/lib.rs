//! Command pipelines behind the `cpg` binary: generation with slicing,
//! deduplication and snark filtering, graph6 filtering and classification,
//! Klee constructions and the reference generator.

pub mod error;

use std::collections::BTreeSet;
use std::io::{BufRead, Write};

use cpg_core::{canon, ccpm, filter, graph6, klee, oracle, orderly, props};
use cpg_core::{Constraints, Graph, Split};

pub use error::{CliError, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Algorithm {
    #[default]
    Ccpm,
    Orderly,
}

/// A fully validated `gen` invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenRequest {
    pub order: usize,
    pub constraints: Constraints,
    pub snarks_only: bool,
    pub algorithm: Algorithm,
    pub dedup: bool,
    pub count_only: bool,
    pub residue: u64,
    pub modulus: u64,
    /// Split depth; the generator's default when absent.
    pub split_depth: Option<usize>,
    pub jobs: usize,
    pub lookaheads: bool,
}

impl GenRequest {
    pub fn new(order: usize) -> Self {
        GenRequest {
            order,
            constraints: Constraints::default(),
            snarks_only: false,
            algorithm: Algorithm::Ccpm,
            dedup: false,
            count_only: false,
            residue: 0,
            modulus: 1,
            split_depth: None,
            jobs: 1,
            lookaheads: true,
        }
    }

    /// Constraints handed to the generator; snark searches only need the
    /// non-hamiltonian graphs.
    pub fn effective_constraints(&self) -> Constraints {
        let mut c = self.constraints;
        c.non_hamiltonian |= self.snarks_only;
        c
    }

    /// Text for the constraint column of the summary.
    pub fn label(&self) -> String {
        constraint_label(self.effective_constraints(), self.snarks_only)
    }
}

pub fn constraint_label(c: Constraints, snarks: bool) -> String {
    let mut parts = Vec::new();
    if c.min_girth > 0 {
        parts.push(format!("girth>={}", c.min_girth));
    }
    if snarks {
        parts.push("snark".to_string());
    } else if c.non_hamiltonian {
        parts.push("non-hamiltonian".to_string());
    }
    if parts.is_empty() {
        "all".to_string()
    } else {
        parts.join(",")
    }
}

/// Lines of the form `order<TAB>constraint<TAB>count`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub lines: Vec<(usize, String, u64)>,
}

impl Summary {
    pub fn push(&mut self, order: usize, label: impl Into<String>, count: u64) {
        self.lines.push((order, label.into(), count));
    }

    pub fn count(&self, label: &str) -> Option<u64> {
        self.lines.iter().find(|l| l.1 == label).map(|l| l.2)
    }

    pub fn write_to(&self, w: &mut impl Write) -> std::io::Result<()> {
        for (n, label, count) in &self.lines {
            writeln!(w, "{n}\t{label}\t{count}")?;
        }
        Ok(())
    }
}

fn write_graph(out: &mut dyn Write, g: &Graph) -> std::io::Result<()> {
    out.write_all(&graph6::encode(g))?;
    out.write_all(b"\n")
}

/// Receives generator output in a fixed order, applying the snark filter
/// and deduplication before writing.
struct Emitter<'a> {
    out: &'a mut dyn Write,
    count_only: bool,
    seen: Option<BTreeSet<Vec<u8>>>,
    raw: u64,
    kept: u64,
    error: Option<std::io::Error>,
}

impl Emitter<'_> {
    fn take(&mut self, g: &Graph) {
        self.raw += 1;
        if let Some(seen) = &mut self.seen {
            if !seen.insert(canon::certificate(g)) {
                return;
            }
        }
        self.kept += 1;
        if !self.count_only && self.error.is_none() {
            if let Err(e) = write_graph(self.out, g) {
                self.error = Some(e);
            }
        }
    }
}

/// Runs one slice of the search, passing graphs that survive the snark
/// filter to `sink`.
fn run_slice(req: &GenRequest, split: Split, sink: &mut dyn FnMut(&Graph)) -> Result<()> {
    let c = req.effective_constraints();
    let mut keep = |g: &Graph| {
        if !req.snarks_only || !props::is_three_edge_colorable(g) {
            sink(g);
        }
    };
    match req.algorithm {
        Algorithm::Ccpm => {
            ccpm::generate(req.order, c, split, &mut keep)?;
        }
        Algorithm::Orderly => {
            let options = orderly::Options { constraints: c, split, lookaheads: req.lookaheads };
            orderly::generate(req.order, options, &mut |g: &Graph, _: &orderly::PartialPermutation| keep(g))?;
        }
    }
    Ok(())
}

/// The sub-slices handled by the workers: `--jobs j` refines the requested
/// slice `r mod m` into `r + t m mod j m` for `t < j`, whose union is the
/// requested slice.
fn slices(req: &GenRequest) -> Result<Vec<Split>> {
    if req.modulus == 0 || req.residue >= req.modulus {
        return Err(CliError::Usage(format!(
            "--res {} must be smaller than --mod {}",
            req.residue, req.modulus
        )));
    }
    let jobs = req.jobs.max(1) as u64;
    let modulus = req.modulus * jobs;
    if modulus == 1 {
        return Ok(vec![Split::NONE]);
    }
    let c = req.effective_constraints();
    let depth = match req.split_depth {
        Some(d) => d,
        None => match req.algorithm {
            Algorithm::Ccpm => ccpm::default_split_depth(req.order, c, modulus)?,
            Algorithm::Orderly => orderly::default_split_depth(req.order, c, modulus)?,
        },
    };
    (0..jobs).map(|t| Ok(Split::new(req.residue + t * req.modulus, modulus, depth)?)).collect()
}

/// Runs `gen`, writing graph6 lines to `out` unless counting only.
pub fn generate(req: &GenRequest, out: &mut dyn Write) -> Result<Summary> {
    if req.order % 2 != 0 || req.order < 6 {
        return Err(CliError::Usage(format!("order {} must be even and at least 6", req.order)));
    }
    let slices = slices(req)?;
    let mut em = Emitter {
        out,
        count_only: req.count_only,
        seen: req.dedup.then(BTreeSet::new),
        raw: 0,
        kept: 0,
        error: None,
    };
    if slices.len() == 1 {
        run_slice(req, slices[0], &mut |g| em.take(g))?;
    } else {
        let results: Vec<Result<Vec<Graph>>> = std::thread::scope(|s| {
            let handles: Vec<_> = slices
                .iter()
                .map(|&split| {
                    s.spawn(move || {
                        let mut found = Vec::new();
                        run_slice(req, split, &mut |g| found.push(g.clone())).map(|_| found)
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        for r in results {
            for g in r? {
                em.take(&g);
            }
        }
    }
    if let Some(e) = em.error {
        return Err(e.into());
    }
    em.out.flush()?;
    let mut summary = Summary::default();
    let label = req.label();
    if req.dedup && req.algorithm == Algorithm::Orderly {
        summary.push(req.order, format!("{label},raw"), em.raw);
    }
    summary.push(req.order, label, em.kept);
    Ok(summary)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FilterMode {
    /// Keep the cycle permutation graphs.
    #[default]
    Recognize,
    /// Print each graph with its permutation 2-factors.
    EnumerateFactors,
    /// Print each cubic graph with girth, hamiltonicity, colourability and
    /// cyclic 5-edge-connectivity.
    Classify,
}

fn parse_line(line: &str, number: usize) -> Result<Option<Graph>> {
    let t = line.trim_end_matches(['\n', '\r']);
    if t.is_empty() {
        return Ok(None);
    }
    graph6::decode(t.as_bytes()).map(Some).map_err(|source| CliError::Input { line: number, source })
}

fn vertex_list(mask: u128) -> String {
    cpg_core::bits::iter(mask).map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// Per-order tallies of the filter, printed in order of first appearance.
#[derive(Default)]
struct Tally {
    orders: Vec<usize>,
    counts: Vec<Vec<(&'static str, u64)>>,
}

impl Tally {
    fn add(&mut self, n: usize, label: &'static str, by: u64) {
        let i = match self.orders.iter().position(|&m| m == n) {
            Some(i) => i,
            None => {
                self.orders.push(n);
                self.counts.push(Vec::new());
                self.orders.len() - 1
            }
        };
        match self.counts[i].iter_mut().find(|c| c.0 == label) {
            Some(c) => c.1 += by,
            None => self.counts[i].push((label, by)),
        }
    }

    fn summary(self) -> Summary {
        let mut s = Summary::default();
        for (n, counts) in self.orders.into_iter().zip(self.counts) {
            for (label, c) in counts {
                s.push(n, label, c);
            }
        }
        s
    }
}

/// Reads graph6 lines from `input` and writes the selected report to `out`.
pub fn filter(input: &mut dyn BufRead, out: &mut dyn Write, mode: FilterMode) -> Result<Summary> {
    let mut tally = Tally::default();
    let mut buf = String::new();
    let mut number = 0;
    loop {
        buf.clear();
        if input.read_line(&mut buf)? == 0 {
            break;
        }
        number += 1;
        let Some(g) = parse_line(&buf, number)? else { continue };
        let code = graph6::encode_string(&g);
        let n = g.order();
        match mode {
            FilterMode::Recognize => {
                tally.add(n, "input", 1);
                if filter::has_permutation_two_factor(&g) {
                    tally.add(n, "cpg", 1);
                    writeln!(out, "{code}")?;
                } else {
                    tally.add(n, "cpg", 0);
                }
            }
            FilterMode::EnumerateFactors => {
                let factors = filter::permutation_two_factors(&g);
                tally.add(n, "input", 1);
                tally.add(n, "permutation-2-factors", factors.len() as u64);
                write!(out, "{code}\t{}", factors.len())?;
                for f in &factors {
                    write!(out, "\t{}|{}", vertex_list(f.cyc[0]), vertex_list(f.cyc[1]))?;
                }
                writeln!(out)?;
            }
            FilterMode::Classify => {
                if !g.is_cubic() {
                    return Err(CliError::NotCubic { line: number });
                }
                let c = props::classify(&g);
                let girth = c.girth.map_or("inf".to_string(), |x| x.to_string());
                writeln!(
                    out,
                    "{code}\tgirth={girth}\thamiltonian={}\tcolorable={}\tcyclically-5-edge-connected={}",
                    c.hamiltonian as u8, c.colorable as u8, c.lambda_c_ge_5 as u8
                )?;
                tally.add(n, "graphs", 1);
                tally.add(n, "non-hamiltonian", !c.hamiltonian as u64);
                tally.add(n, "snark", !c.colorable as u64);
                tally.add(n, "lambda_c>=5", c.lambda_c_ge_5 as u64);
                tally.add(n, "snark,lambda_c>=5", (!c.colorable && c.lambda_c_ge_5) as u64);
            }
        }
    }
    out.flush()?;
    Ok(tally.summary())
}

/// Writes Klee's non-hamiltonian construction of order `n`.
pub fn construct(n: usize, out: &mut dyn Write) -> Result<Summary> {
    if n % 2 != 0 || n < 6 {
        return Err(CliError::Usage(format!("order {n} must be even and at least 6")));
    }
    let g = klee::construct_nonhamiltonian(n)?;
    write_graph(out, &g)?;
    out.flush()?;
    let mut s = Summary::default();
    s.push(n, "non-hamiltonian", 1);
    Ok(s)
}

/// Writes the reference generator's output for order `n`.
pub fn run_oracle(n: usize, constraints: Constraints, limit: usize, out: &mut dyn Write, count_only: bool) -> Result<Summary> {
    let graphs = oracle::generate_by_lists_with_limit(n, constraints, limit)?;
    if !count_only {
        for g in &graphs {
            write_graph(out, g)?;
        }
    }
    out.flush()?;
    let mut s = Summary::default();
    s.push(n, constraint_label(constraints, false), graphs.len() as u64);
    Ok(s)
}
