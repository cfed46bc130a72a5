//! `hyperell` — command-line front end for the rigid hyperelliptic fourfold
//! classification.
//!
//! Subcommands run each pipeline stage (screening, kernel enumeration,
//! free-action enumeration, special cohomology classes, classification,
//! Hodge numbers) and `verify` runs the full acceptance suite. Every command
//! emits a report (text, JSON or CSV) with embedded expected-value checks.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.

mod report;

use clap::{Parser, Subcommand, ValueEnum};
use hyperell::actions::{
    distinct_map_count, enumerate_free_heis, enumerate_free_z32, HeisMode, StandardAction,
};
use hyperell::characters::{hodge_numbers, screen, HolonomyTag};
use hyperell::cohomology::{
    classification_kernels, classify, heis_lattices, heis_representatives, n_aut0_z32,
    special_classes, z32_representatives, Equivalence,
};
use hyperell::groups::make_catalog;
use hyperell::lattice::{enumerate_kernels, heis_invariant_kernels, kernel_orbits, Kernel};
use hyperell::verify::all_criteria;
use rayon::prelude::*;
use report::{
    fixvec_list, render, torsion_pretty, torsion_raw, torus, Format, PointFmt, Report, Table,
};
use std::path::PathBuf;

const FREE_COUNTS_Z32: [usize; 12] = [16, 72, 108, 72, 108, 162, 108, 108, 324, 162, 162, 486];
const SPECIAL_COUNTS_Z32: [usize; 12] = [16, 8, 12, 8, 12, 18, 4, 4, 4, 2, 2, 6];
const FREE_COUNTS_HEIS: [usize; 2] = [108, 324];
const SPECIAL_COUNTS_HEIS: [usize; 2] = [4, 4];

#[derive(Parser)]
#[command(
    name = "hyperell",
    version,
    about = "Exact classification of rigid hyperelliptic fourfolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Write the report to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Number of worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Screen holonomy-group candidates against the four representation conditions
    Screen {
        /// Restrict to one catalog group (e.g. z3z3, heis3, d4, z2xz2, z7)
        #[arg(long)]
        group: Option<String>,
    },
    /// Enumerate admissible kernels and their normalizer orbits
    Kernels {
        #[arg(long, value_enum, default_value_t = GroupArg::Z3z3)]
        group: GroupArg,
    },
    /// Enumerate free holonomy actions on one kernel
    Actions {
        #[arg(long, value_enum)]
        group: GroupArg,
        /// Kernel id: 1..12 or exc (z3z3); 1 or 2 (heis3 lattices)
        #[arg(long, default_value = "1")]
        kernel: String,
        /// Enumeration mode (heis3 only; z3z3 enumeration is always exhaustive)
        #[arg(long, value_enum, default_value_t = ModeArg::Normalized)]
        mode: ModeArg,
    },
    /// Count special cohomology classes per kernel
    Classes {
        #[arg(long, value_enum)]
        group: GroupArg,
        /// Also list the class representatives of one kernel
        #[arg(long)]
        kernel: Option<String>,
    },
    /// Classify up to biholomorphism or diffeomorphism
    Classify {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long, value_enum, default_value_t = EquivArg::Bihol)]
        equivalence: EquivArg,
    },
    /// Hodge diamonds of the classified fourfolds
    Hodge {
        /// Restrict to one holonomy group (default: both)
        #[arg(long, value_enum)]
        group: Option<GroupArg>,
    },
    /// Run the full acceptance suite
    Verify,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum GroupArg {
    Z3z3,
    Heis3,
}

impl GroupArg {
    fn tag(self) -> HolonomyTag {
        match self {
            GroupArg::Z3z3 => HolonomyTag::Z3Z3,
            GroupArg::Heis3 => HolonomyTag::Heis3,
        }
    }

    fn name(self) -> &'static str {
        match self {
            GroupArg::Z3z3 => "z3z3",
            GroupArg::Heis3 => "heis3",
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum ModeArg {
    Normalized,
    Exhaustive,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum EquivArg {
    Bihol,
    Diffeo,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

impl FormatArg {
    fn format(self) -> Format {
        match self {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }

    fn point_fmt(self) -> PointFmt {
        // The text report pretty-prints the recurring aliases (t, 1/3, ...);
        // machine formats keep the canonical "x/27+y/27*w" serialization.
        match self {
            FormatArg::Text => torsion_pretty,
            _ => torsion_raw,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            std::process::exit(2);
        }
        // Ignore the error if a global pool already exists (tests).
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let pf = cli.format.point_fmt();
    let report = match &cli.command {
        Command::Screen { group } => cmd_screen(group.as_deref()),
        Command::Kernels { group } => Ok(cmd_kernels(*group)),
        Command::Actions { group, kernel, mode } => cmd_actions(*group, kernel, *mode, pf),
        Command::Classes { group, kernel } => cmd_classes(*group, kernel.as_deref(), pf),
        Command::Classify { group, equivalence } => Ok(cmd_classify(*group, *equivalence, pf)),
        Command::Hodge { group } => Ok(cmd_hodge(*group)),
        Command::Verify => Ok(cmd_verify()),
    };
    let report = match report {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    };
    let rendered = render(&report, cli.format.format());
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, rendered.as_bytes()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            std::process::exit(2);
        }
    } else {
        print!("{rendered}");
    }
    std::process::exit(if report.all_pass() { 0 } else { 1 });
}

// ---------------------------------------------------------------------------
// Kernel selectors
// ---------------------------------------------------------------------------

fn z32_kernel(selector: &str) -> Result<(String, Kernel), String> {
    let (kernels, exceptional) = classification_kernels();
    let s = selector.trim_start_matches(['K', 'k']);
    if s.eq_ignore_ascii_case("exc") {
        return Ok(("K_exc".to_string(), exceptional));
    }
    match s.parse::<usize>() {
        Ok(n) if (1..=12).contains(&n) => Ok((format!("K{n}"), kernels[n - 1].clone())),
        _ => Err(format!("unknown z3z3 kernel '{selector}' (expected 1..12 or exc)")),
    }
}

fn heis_kernel(selector: &str) -> Result<(String, Kernel), String> {
    let lattices = heis_lattices();
    let s = selector.trim_start_matches(['L', 'l']);
    match s.parse::<usize>() {
        Ok(n) if n == 1 || n == 2 => Ok((format!("L{n}"), lattices[n - 1].clone())),
        _ => Err(format!("unknown heis3 kernel '{selector}' (expected 1 or 2)")),
    }
}

fn pick_kernel(group: GroupArg, selector: &str) -> Result<(String, Kernel), String> {
    match group {
        GroupArg::Z3z3 => z32_kernel(selector),
        GroupArg::Heis3 => heis_kernel(selector),
    }
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

fn normalized_name(s: &str) -> String {
    let stripped: String =
        s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase();
    // Accept the CLI group tag for the abelian holonomy group.
    if stripped == "z3z3" {
        "z3xz3".to_string()
    } else {
        stripped
    }
}

fn cmd_screen(group: Option<&str>) -> Result<Report, String> {
    let catalog = make_catalog();
    let selected: Vec<_> = match group {
        None => catalog,
        Some(name) => {
            let wanted = normalized_name(name);
            let found: Vec<_> =
                catalog.into_iter().filter(|g| normalized_name(&g.name) == wanted).collect();
            if found.is_empty() {
                return Err(format!("group '{name}' is not in the screening catalog"));
            }
            found
        }
    };
    let mut report = Report::new("screen");
    report.input("group", group.unwrap_or("all"));
    let results: Vec<_> = selected
        .par_iter()
        .map(|g| screen(g).expect("catalog group supported"))
        .collect();
    let mut table = Table::new(
        "screening",
        &["group", "order", "verdict", "candidates", "failures by condition", "passing candidates"],
    );
    for (g, r) in selected.iter().zip(&results) {
        table.push(vec![
            g.name.clone(),
            g.order().to_string(),
            if r.pass { "pass" } else { "fail" }.to_string(),
            r.candidates.to_string(),
            format!("{:?}", r.failures),
            r.passing.len().to_string(),
        ]);
    }
    report.tables.push(table);
    for r in &results {
        let expected = if r.group == "Z3xZ3" || r.group == "Heis(3)" { "pass" } else { "fail" };
        report.check(
            &format!("screening/{}/verdict", r.group),
            expected,
            if r.pass { "pass" } else { "fail" },
        );
    }
    if group.is_none() {
        let passing: Vec<&str> =
            results.iter().filter(|r| r.pass).map(|r| r.group.as_str()).collect();
        report.check("screening/passing-groups", "Z3xZ3, Heis(3)", passing.join(", "));
    }
    Ok(report)
}

fn cmd_kernels(group: GroupArg) -> Report {
    let mut report = Report::new("kernels");
    report.input("group", group.name());
    let all = enumerate_kernels();
    let stable = heis_invariant_kernels();
    match group {
        GroupArg::Z3z3 => {
            let orbits = kernel_orbits(&all, &n_aut0_z32().maps);
            let orbit_size = |k: &Kernel| -> usize {
                let idx = all.iter().position(|c| c.same_subgroup(k)).expect("kernel listed");
                orbits.iter().find(|o| o.contains(&idx)).expect("kernel in an orbit").len()
            };
            let (published, exceptional) = classification_kernels();
            let mut table = Table::new(
                "kernels",
                &["kernel", "generators", "order", "mu-signature", "orbit size", "heis3-stable"],
            );
            let mut orbit_ids = Vec::new();
            for (label, k) in published
                .iter()
                .enumerate()
                .map(|(i, k)| (format!("K{}", i + 1), k))
                .chain(std::iter::once(("K_exc".to_string(), &exceptional)))
            {
                let idx = all.iter().position(|c| c.same_subgroup(k)).expect("kernel listed");
                orbit_ids.push(orbits.iter().position(|o| o.contains(&idx)).unwrap());
                table.push(vec![
                    label,
                    fixvec_list(&k.gens),
                    k.order().to_string(),
                    format!("{:?}", k.mu_signature()),
                    orbit_size(k).to_string(),
                    if stable.iter().any(|s| s.same_subgroup(k)) { "yes" } else { "no" }
                        .to_string(),
                ]);
            }
            report.tables.push(table);
            report.check("kernels/count", 129, all.len());
            report.check("kernels/orbit-count", 13, orbits.len());
            orbit_ids.sort_unstable();
            orbit_ids.dedup();
            report.check("kernels/published-orbits-distinct", 13, orbit_ids.len());
        }
        GroupArg::Heis3 => {
            let lattices = heis_lattices();
            let counts: Vec<usize> = stable
                .par_iter()
                .map(|k| enumerate_free_heis(k, HeisMode::Normalized).len())
                .collect();
            let mut table = Table::new(
                "heis3-stable-kernels",
                &["kernel", "generators", "order", "free actions (normalized)"],
            );
            let mut admitting = Vec::new();
            for (i, (k, &count)) in stable.iter().zip(&counts).enumerate() {
                let label = match lattices.iter().position(|l| l.same_subgroup(k)) {
                    Some(j) => format!("L{}", j + 1),
                    None => format!("S{}", i + 1),
                };
                if count > 0 {
                    admitting.push(label.clone());
                }
                table.push(vec![
                    label,
                    fixvec_list(&k.gens),
                    k.order().to_string(),
                    count.to_string(),
                ]);
            }
            report.tables.push(table);
            report.check("kernels/heis3-stable-count", 9, stable.len());
            admitting.sort();
            report.check("kernels/heis3-admitting", "L1, L2", admitting.join(", "));
        }
    }
    report
}

fn action_row(act: &StandardAction, heis: bool, pf: PointFmt) -> Vec<String> {
    let mut row = vec![pf(act.c1), pf(act.b[0]), pf(act.b[1]), pf(act.b[2])];
    if heis {
        row.extend(act.a.iter().map(|&a| pf(a)));
    }
    row
}

fn cmd_actions(
    group: GroupArg,
    kernel: &str,
    mode: ModeArg,
    pf: PointFmt,
) -> Result<Report, String> {
    let (label, k) = pick_kernel(group, kernel)?;
    let mut report = Report::new("actions");
    report.input("group", group.name());
    report.input("kernel", &label);
    let heis = group == GroupArg::Heis3;
    let actions = match group {
        GroupArg::Z3z3 => enumerate_free_z32(&k),
        GroupArg::Heis3 => {
            report.input(
                "mode",
                match mode {
                    ModeArg::Normalized => "normalized",
                    ModeArg::Exhaustive => "exhaustive",
                },
            );
            enumerate_free_heis(
                &k,
                match mode {
                    ModeArg::Normalized => HeisMode::Normalized,
                    ModeArg::Exhaustive => HeisMode::Exhaustive,
                },
            )
        }
    };
    let mut summary = Table::new("summary", &["free actions", "distinct affine maps"]);
    summary.push(vec![actions.len().to_string(), distinct_map_count(&actions).to_string()]);
    report.tables.push(summary);
    let columns: &[&str] = if heis {
        &["c1", "b2", "b3", "b4", "a1", "a2", "a3", "a4"]
    } else {
        &["c1", "b2", "b3", "b4"]
    };
    let mut table = Table::new("free-actions", columns);
    for act in &actions {
        table.push(action_row(act, heis, pf));
    }
    report.tables.push(table);
    match group {
        GroupArg::Z3z3 => {
            let expected = match label.as_str() {
                "K_exc" => 0,
                _ => FREE_COUNTS_Z32[label[1..].parse::<usize>().unwrap() - 1],
            };
            report.check(&format!("free-actions/z3z3/{label}"), expected, actions.len());
        }
        GroupArg::Heis3 => {
            if mode == ModeArg::Normalized {
                let expected = FREE_COUNTS_HEIS[label[1..].parse::<usize>().unwrap() - 1];
                report.check(&format!("free-actions/heis3/{label}"), expected, actions.len());
            }
        }
    }
    Ok(report)
}

fn cmd_classes(group: GroupArg, kernel: Option<&str>, pf: PointFmt) -> Result<Report, String> {
    let mut report = Report::new("classes");
    report.input("group", group.name());
    let tag = group.tag();
    let labeled: Vec<(String, Kernel)> = match group {
        GroupArg::Z3z3 => {
            let (kernels, exceptional) = classification_kernels();
            kernels
                .into_iter()
                .enumerate()
                .map(|(i, k)| (format!("K{}", i + 1), k))
                .chain(std::iter::once(("K_exc".to_string(), exceptional)))
                .collect()
        }
        GroupArg::Heis3 => heis_lattices()
            .into_iter()
            .enumerate()
            .map(|(i, k)| (format!("L{}", i + 1), k))
            .collect(),
    };
    let classes: Vec<Vec<StandardAction>> =
        labeled.par_iter().map(|(_, k)| special_classes(tag, k)).collect();
    let mut table = Table::new("special-classes", &["kernel", "classes"]);
    for ((label, _), cls) in labeled.iter().zip(&classes) {
        table.push(vec![label.clone(), cls.len().to_string()]);
    }
    report.tables.push(table);
    for (i, ((label, _), cls)) in labeled.iter().zip(&classes).enumerate() {
        let expected = match group {
            GroupArg::Z3z3 => {
                if label == "K_exc" {
                    0
                } else {
                    SPECIAL_COUNTS_Z32[i]
                }
            }
            GroupArg::Heis3 => SPECIAL_COUNTS_HEIS[i],
        };
        report.check(
            &format!("special-classes/{}/{label}", group.name()),
            expected,
            cls.len(),
        );
    }
    if let Some(selector) = kernel {
        let (label, k) = pick_kernel(group, selector)?;
        let idx = labeled.iter().position(|(_, c)| c.same_subgroup(&k)).expect("kernel listed");
        report.input("kernel", &label);
        let heis = group == GroupArg::Heis3;
        let columns: &[&str] = if heis {
            &["class", "c1", "b2", "b3", "b4", "a1", "a2", "a3", "a4"]
        } else {
            &["class", "c1", "b2", "b3", "b4"]
        };
        let mut reps = Table::new("class-representatives", columns);
        for (c, act) in classes[idx].iter().enumerate() {
            let mut row = vec![(c + 1).to_string()];
            row.extend(action_row(act, heis, pf));
            reps.push(row);
        }
        report.tables.push(reps);
    }
    Ok(report)
}

fn cmd_classify(group: GroupArg, equivalence: EquivArg, pf: PointFmt) -> Report {
    let mut report = Report::new("classify");
    report.input("group", group.name());
    report.input(
        "equivalence",
        match equivalence {
            EquivArg::Bihol => "bihol",
            EquivArg::Diffeo => "diffeo",
        },
    );
    let tag = group.tag();
    let equiv = match equivalence {
        EquivArg::Bihol => Equivalence::Bihol,
        EquivArg::Diffeo => Equivalence::Diffeo,
    };
    let outcome = classify(tag, equiv);
    let kernel_label = |i: usize| -> String {
        match group {
            GroupArg::Z3z3 => {
                if i == 12 {
                    "K_exc".to_string()
                } else {
                    format!("K{}", i + 1)
                }
            }
            GroupArg::Heis3 => format!("L{}", i + 1),
        }
    };
    let published: Vec<StandardAction> = match group {
        GroupArg::Z3z3 => z32_representatives(),
        GroupArg::Heis3 => {
            let lattices = heis_lattices();
            lattices.iter().flat_map(|l| heis_representatives(l)).collect()
        }
    };
    let heis = group == GroupArg::Heis3;
    let columns: &[&str] = if heis {
        &["class", "kernels", "tau(g)", "tau(h)", "tau(k)"]
    } else {
        &["class", "kernels", "tau(h)", "tau(k)"]
    };
    let mut table = Table::new("classes", columns);
    for (ci, members) in outcome.classes.iter().enumerate() {
        let mut kernels: Vec<String> =
            members.iter().map(|&(ki, _)| kernel_label(ki)).collect();
        kernels.sort();
        kernels.dedup();
        // Show the published representative of the class when one matched;
        // otherwise the computed class representative.
        let rep = outcome
            .matched
            .iter()
            .position(|&m| m == ci)
            .map(|r| published[r].clone())
            .unwrap_or_else(|| {
                let (ki, c) = members[0];
                outcome.special[ki][c].clone()
            });
        let mut row = vec![(ci + 1).to_string(), kernels.join(", ")];
        if heis {
            row.push(torus(&rep.tau_g(), pf));
        }
        row.push(torus(&rep.tau_h(), pf));
        row.push(torus(&rep.tau_k(), pf));
        table.push(row);
    }
    report.tables.push(table);
    if !outcome.transporters.is_empty() {
        let mut tr = Table::new("transporters", &["from", "to", "det +1", "det -1"]);
        // Transporter entries carry 1-based kernel numbers already.
        for t in &outcome.transporters {
            tr.push(vec![
                format!("K{}", t.i),
                format!("K{}", t.j),
                t.plus.to_string(),
                t.minus.to_string(),
            ]);
        }
        report.tables.push(tr);
    }
    let expected_count = match (group, equivalence) {
        (GroupArg::Z3z3, EquivArg::Bihol) => 12,
        (GroupArg::Z3z3, EquivArg::Diffeo) => 8,
        (GroupArg::Heis3, _) => 4,
    };
    report.check(
        &format!("classify/{}/{}/class-count", group.name(), report.inputs["equivalence"]),
        expected_count,
        outcome.class_count(),
    );
    let mut matched = outcome.matched.clone();
    matched.sort_unstable();
    matched.dedup();
    report.check(
        &format!(
            "classify/{}/{}/classes-with-published-representative",
            group.name(),
            report.inputs["equivalence"]
        ),
        expected_count,
        matched.len(),
    );
    report
}

fn cmd_hodge(group: Option<GroupArg>) -> Report {
    let mut report = Report::new("hodge");
    report.input("group", group.map_or("all", GroupArg::name));
    let selected: Vec<GroupArg> = match group {
        Some(g) => vec![g],
        None => vec![GroupArg::Z3z3, GroupArg::Heis3],
    };
    for g in selected {
        let hd = hodge_numbers(g.tag());
        let mut table = Table::new(
            &format!("hodge-{}", g.name()),
            &["p\\q", "0", "1", "2", "3", "4"],
        );
        for p in 0..5 {
            let mut row = vec![p.to_string()];
            row.extend((0..5).map(|q| hd.h[p][q].to_string()));
            table.push(row);
        }
        report.tables.push(table);
        let (h11, h21, h22) = match g {
            GroupArg::Z3z3 => (4, 3, 6),
            GroupArg::Heis3 => (2, 1, 2),
        };
        let name = g.name();
        report.check(&format!("hodge/{name}/h11-h21-h22"), format!("({h11}, {h21}, {h22})"),
            format!("({}, {}, {})", hd.h[1][1], hd.h[2][1], hd.h[2][2]));
        report.check(
            &format!("hodge/{name}/h10-h20-h30-h40"),
            "(0, 0, 1, 0)",
            format!("({}, {}, {}, {})", hd.h[1][0], hd.h[2][0], hd.h[3][0], hd.h[4][0]),
        );
    }
    report
}

fn cmd_verify() -> Report {
    let mut report = Report::new("verify");
    let criteria = all_criteria();
    let mut table = Table::new("criteria", &["criterion", "checks", "failures"]);
    for (name, checks) in &criteria {
        let failures = checks.iter().filter(|c| !c.pass).count();
        table.push(vec![name.to_string(), checks.len().to_string(), failures.to_string()]);
    }
    report.tables.push(table);
    for (_, checks) in criteria {
        report.checks.extend(checks.into_iter().map(Into::into));
    }
    report
}
