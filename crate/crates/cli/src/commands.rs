use std::fmt;
use std::path::Path;
use std::time::{Duration, Instant};

use zassenhaus_core::brute_force::{self, load_or_build, BruteForceError, BruteForceGroup};
use zassenhaus_core::closed_form::valid_q_in_range;
use zassenhaus_core::{
    build_divgraph, check_class_equation, class_table, classify_shape, ClassSizeTable, Family,
    GroupError, GroupSpec,
};

use crate::{Check, GraphFormat, TableFormat};

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or unsupported parameters; exit status 2.
    Usage(String),
    /// Something broke while computing; exit status 1.
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Failed(msg) => f.write_str(msg),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<BruteForceError> for CliError {
    fn from(e: BruteForceError) -> Self {
        match e {
            BruteForceError::Unsupported { .. }
            | BruteForceError::LargeGroupNotEnabled
            | BruteForceError::Group(_) => CliError::Usage(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

/// Output of one command: stdout lines, per-phase timings and pass/fail state.
#[derive(Debug, Default)]
pub struct Report {
    lines: Vec<String>,
    timings: Vec<(String, Duration)>,
    failed: bool,
}

impl Report {
    fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    fn check(&mut self, passed: bool, text: impl fmt::Display) {
        self.failed |= !passed;
        self.line(format!("{} {text}", if passed { "PASS" } else { "FAIL" }));
    }

    fn timed<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings.push((phase.to_string(), start.elapsed()));
        out
    }

    pub fn status(&self) -> u8 {
        u8::from(self.failed)
    }

    /// Results go to stdout; timings to stderr so stdout stays deterministic.
    pub fn emit(&self) {
        for line in &self.lines {
            println!("{line}");
        }
        for (phase, elapsed) in &self.timings {
            eprintln!("[time] {phase}: {elapsed:.2?}");
        }
    }
}

fn render_table(table: &ClassSizeTable) -> Vec<String> {
    let spec = GroupSpec::new(table.family, table.q).expect("table built from a valid spec");
    let width = table
        .entries
        .iter()
        .map(|e| e.size.to_string().len())
        .max()
        .unwrap_or(0)
        .max("size".len());
    let mut lines = vec![
        format!("{spec}  |G| = {}", table.order),
        format!("{:>width$} | multiplicity | origin", "size"),
    ];
    for e in &table.entries {
        lines.push(format!("{:>width$} | {:>12} | {}", e.size, e.mult, e.origin));
    }
    lines
}

pub fn classes(family: Family, q: u64, format: TableFormat) -> Result<Report, CliError> {
    let mut report = Report::default();
    let table = report.timed("table", || class_table(family, q))?;
    match format {
        TableFormat::Json => report.line(table.to_json()),
        TableFormat::Table => render_table(&table).into_iter().for_each(|l| report.line(l)),
    }
    Ok(report)
}

pub enum GraphSource {
    Group(Family, u64),
    Sizes(Vec<u128>),
}

pub fn divgraph(source: GraphSource, format: GraphFormat) -> Result<Report, CliError> {
    let mut report = Report::default();
    let sizes = match source {
        GraphSource::Group(family, q) => class_table(family, q)?.size_multiset(),
        GraphSource::Sizes(sizes) => sizes,
    };
    let graph = report.timed("graph", || build_divgraph(sizes));
    match format {
        GraphFormat::Shape => report.line(classify_shape(&graph).to_string()),
        GraphFormat::Json => report.line(graph.to_json()),
        GraphFormat::Dot => graph.to_dot().lines().for_each(|l| report.line(l)),
    }
    Ok(report)
}

fn brute_force_supported(spec: &GroupSpec, allow_large: bool) -> bool {
    match spec.family {
        Family::Psl2 => spec.q <= brute_force::PSL2_BRUTE_FORCE_MAX_Q,
        Family::Sz => spec.q == 8 || (spec.q == 32 && allow_large),
    }
}

fn build_group(
    spec: &GroupSpec,
    cache: Option<&Path>,
    allow_large: bool,
) -> Result<BruteForceGroup, BruteForceError> {
    match (cache, spec.family) {
        (Some(dir), family) => load_or_build(family, spec.q, dir, allow_large),
        (None, Family::Psl2) => brute_force::enumerate_psl2(spec.q),
        (None, Family::Sz) => brute_force::generate_sz(spec.q, allow_large),
    }
}

fn format_sizes(sizes: &[u128]) -> String {
    let parts: Vec<String> = sizes.iter().map(u128::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

/// The TI subgroups examined for each family, by name.
fn ti_subgroups(g: &BruteForceGroup) -> Result<Vec<(&'static str, Vec<usize>)>, BruteForceError> {
    let spec = g.spec();
    Ok(match spec.family {
        Family::Psl2 => vec![
            ("H", g.find_cyclic_subgroup(spec.e as usize)?),
            ("K", g.psl2_unipotent()),
            ("L", g.find_cyclic_subgroup(spec.l_order.expect("PSL2") as usize)?),
        ],
        Family::Sz => vec![
            ("A0", g.find_cyclic_subgroup(spec.e as usize)?),
            ("A1", g.find_cyclic_subgroup(spec.a1_order.expect("Sz") as usize)?),
            ("A2", g.find_cyclic_subgroup(spec.a2_order.expect("Sz") as usize)?),
            ("K", g.sz_kernel()?),
        ],
    })
}

fn verify_ti(report: &mut Report, g: &BruteForceGroup) -> Result<(), BruteForceError> {
    for (name, sub) in ti_subgroups(g)? {
        match g.verify_ti_lemma(&sub) {
            Ok(r) => {
                let bad = r
                    .rows
                    .iter()
                    .find(|row| row.conjugates_in_subgroup * row.centralizer_order != r.normalizer_order);
                let detail = match bad {
                    None => format!("|N| = |h^G ∩ {name}|·|C(h)| for all {} h != 1", r.rows.len()),
                    Some(row) => format!(
                        "element {}: {}·{} != {}",
                        row.element, row.conjugates_in_subgroup, row.centralizer_order, r.normalizer_order
                    ),
                };
                report.check(
                    r.holds(),
                    format!(
                        "ti-lemma {name}: |{name}| = {}, |N| = {}, [N:{name}] = {}; {detail}",
                        r.subgroup_order,
                        r.normalizer_order,
                        r.normalizer_index()
                    ),
                );
            }
            Err(e @ (BruteForceError::NotTi { .. } | BruteForceError::NotSubgroup)) => {
                report.check(false, format!("ti-lemma {name}: {e}"));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

fn verify_centralizers(report: &mut Report, g: &BruteForceGroup) -> Result<(), BruteForceError> {
    let order = g.order();
    // every element for PSL(2,q); one representative per class for Sz(q)
    let targets: Vec<usize> = match g.spec().family {
        Family::Psl2 => (0..order).collect(),
        Family::Sz => g.classes().iter().map(|c| c[0]).collect(),
    };
    let bad = targets
        .iter()
        .copied()
        .find(|&x| g.centralizer_order(x) * g.class_size(x) != order);
    report.check(
        bad.is_none(),
        format!(
            "centralizers: |C(x)|·|x^G| = |G| = {order} on {} elements{}",
            targets.len(),
            bad.map_or(String::new(), |x| format!(" (fails at element {x})"))
        ),
    );
    if g.spec().family == Family::Sz {
        let q = g.spec().q;
        let betas: Vec<u64> = if q == 8 { (0..q).collect() } else { vec![0] };
        let mut checked = 0;
        let mut failure = None;
        for alpha in 1..q {
            for &beta in &betas {
                let x = g.sz_unipotent_index(alpha, beta)?;
                let c = g.centralizer_order(x);
                checked += 1;
                if c as u64 != 2 * q && failure.is_none() {
                    failure = Some(format!(" (({alpha},{beta}) has |C| = {c})"));
                }
            }
        }
        report.check(
            failure.is_none(),
            format!(
                "centralizers: |C((α,β))| = 2q = {} for {checked} elements with α != 0{}",
                2 * q,
                failure.unwrap_or_default()
            ),
        );
    }
    Ok(())
}

pub fn verify(
    family: Family,
    q: u64,
    checks: &[Check],
    cache: Option<&Path>,
    allow_large: bool,
) -> Result<Report, CliError> {
    let spec = GroupSpec::new(family, q)?;
    let supported = brute_force_supported(&spec, allow_large);
    let mut checks: Vec<Check> = if checks.is_empty() {
        let mut all = vec![Check::ClassEquation];
        if supported {
            all.extend([Check::BruteForce, Check::TiLemma, Check::Centralizers]);
        }
        all
    } else {
        checks.to_vec()
    };
    checks.sort();
    checks.dedup();
    let needs_group = checks.iter().any(|c| *c != Check::ClassEquation);
    if needs_group && !supported {
        if family == Family::Sz && q == 32 {
            return Err(BruteForceError::LargeGroupNotEnabled.into());
        }
        return Err(BruteForceError::Unsupported { q }.into());
    }

    let mut report = Report::default();
    report.line(format!("verify {spec}"));
    let table = report.timed("table", || class_table(family, q))?;
    let group = if needs_group {
        Some(report.timed("enumerate", || build_group(&spec, cache, allow_large))?)
    } else {
        None
    };

    for check in checks {
        match check {
            Check::ClassEquation => {
                let total = table.total().map_err(|e| CliError::Failed(e.to_string()))?;
                let ok = check_class_equation(&table).map_err(|e| CliError::Failed(e.to_string()))?;
                report.check(ok, format!("class-equation: sum = {total}, |G| = {}", table.order));
            }
            Check::BruteForce => {
                let g = group.as_ref().expect("group built");
                let brute = report.timed("brute-force", || g.class_sizes());
                let closed = table.size_multiset();
                report.check(
                    brute == closed,
                    format!("brute-force: {} classes", brute.len()),
                );
                report.line(format!("  closed form: {}", format_sizes(&closed)));
                report.line(format!("  brute force: {}", format_sizes(&brute)));
            }
            Check::TiLemma => {
                let g = group.as_ref().expect("group built");
                let start = Instant::now();
                verify_ti(&mut report, g)?;
                report.timings.push(("ti-lemma".into(), start.elapsed()));
            }
            Check::Centralizers => {
                let g = group.as_ref().expect("group built");
                let start = Instant::now();
                verify_centralizers(&mut report, g)?;
                report.timings.push(("centralizers".into(), start.elapsed()));
            }
        }
    }
    Ok(report)
}

pub fn sweep(family: Family, q_min: u64, q_max: u64) -> Report {
    let mut report = Report::default();
    let qs = valid_q_in_range(family, q_min, q_max);
    report.line("q | e | |G| | distinct sizes | shape");
    let mut shapes: Vec<(String, Vec<u64>)> = Vec::new();
    let rows = report.timed("sweep", || {
        qs.iter()
            .map(|&q| {
                let table = class_table(family, q).expect("q filtered as valid");
                let spec = GroupSpec::new(family, q).expect("q filtered as valid");
                let graph = build_divgraph(table.size_multiset());
                (q, spec.e, table.order, graph.vertices().len(), classify_shape(&graph).to_string())
            })
            .collect::<Vec<_>>()
    });
    for (q, e, order, distinct, shape) in rows {
        report.line(format!("{q} | {e} | {order} | {distinct} | {shape}"));
        match shapes.iter_mut().find(|(s, _)| *s == shape) {
            Some((_, list)) => list.push(q),
            None => shapes.push((shape, vec![q])),
        }
    }
    if shapes.is_empty() {
        report.line("summary: no valid q");
    } else {
        let parts: Vec<String> = shapes
            .iter()
            .map(|(shape, list)| {
                let qs: Vec<String> = list.iter().map(u64::to_string).collect();
                format!("{shape} (q={})", qs.join(","))
            })
            .collect();
        report.line(format!("summary: shapes {}", parts.join(", ")));
    }
    report
}
