//! Built-in verification: closed forms against BFS on explicit graphs, and
//! table renderings against reference CSV files.

use std::fmt;
use std::fs;
use std::path::Path;

use crate::metrics::{
    diameter_all_pairs, diameter_closed, link_count_closed, DiameterConvention, ALL_PAIRS_CAP,
};
use crate::routing::{bfs_levels, distance_closed, route};
use crate::spec::NetworkSpec;
use crate::tables::{render_comparison_csv, table1_rows, table2_rows, table3_grid};
use crate::topology::build_graph;

pub const REFERENCE_TABLE1: &str = include_str!("../golden/table1.csv");
pub const REFERENCE_TABLE2: &str = include_str!("../golden/table2.csv");
pub const REFERENCE_TABLE3: &str = include_str!("../golden/table3.csv");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for GroupResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub groups: Vec<GroupResult>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.groups.iter().all(|g| g.passed)
    }
}

/// Reference tables, either the embedded copies or files from a directory.
#[derive(Debug, Clone)]
pub struct References {
    pub table1: String,
    pub table2: String,
    pub table3: String,
}

impl Default for References {
    fn default() -> Self {
        References {
            table1: REFERENCE_TABLE1.to_string(),
            table2: REFERENCE_TABLE2.to_string(),
            table3: REFERENCE_TABLE3.to_string(),
        }
    }
}

impl References {
    /// Reads `table1.csv`, `table2.csv` and `table3.csv` from `dir`.
    pub fn from_dir(dir: &Path) -> std::io::Result<Self> {
        Ok(References {
            table1: fs::read_to_string(dir.join("table1.csv"))?,
            table2: fs::read_to_string(dir.join("table2.csv"))?,
            table3: fs::read_to_string(dir.join("table3.csv"))?,
        })
    }
}

fn grid_specs(sides: &[usize], cubes: &[usize], max_nodes: usize) -> Vec<NetworkSpec> {
    let mut out = Vec::new();
    for &l in sides {
        for &m in sides {
            for &n in cubes {
                let spec = NetworkSpec::teh(l, m, n).expect("grid specs are valid");
                if spec.node_count() <= max_nodes {
                    out.push(spec);
                }
            }
        }
    }
    out
}

fn group(name: &'static str, failures: Vec<String>, checked: String) -> GroupResult {
    if failures.is_empty() {
        GroupResult {
            name,
            passed: true,
            detail: checked,
        }
    } else {
        GroupResult {
            name,
            passed: false,
            detail: failures.join("; "),
        }
    }
}

pub fn check_links(max_nodes: usize) -> GroupResult {
    let specs = grid_specs(&[3, 4, 5], &[1, 2, 4, 8], max_nodes);
    let failures = specs
        .iter()
        .filter_map(|spec| {
            let built = build_graph(spec).ok()?.edge_count() as u64;
            let closed = link_count_closed(spec);
            (built != closed).then(|| format!("{spec}: graph {built} vs closed {closed}"))
        })
        .collect();
    group(
        "links-oracle",
        failures,
        format!("{} networks", specs.len()),
    )
}

pub fn check_diameter(max_nodes: usize) -> GroupResult {
    let cap = max_nodes.min(ALL_PAIRS_CAP);
    let specs = grid_specs(&[3, 4, 5, 6], &[1, 2, 4, 8], cap);
    let failures = specs
        .iter()
        .filter_map(|spec| {
            let t = build_graph(spec).ok()?;
            let bfs = diameter_all_pairs(&t, cap);
            let closed = diameter_closed(spec);
            (bfs != Ok(closed)).then(|| format!("{spec}: bfs {bfs:?} vs closed {closed}"))
        })
        .collect();
    group(
        "diameter-oracle",
        failures,
        format!("{} networks, all pairs", specs.len()),
    )
}

pub fn check_routing(max_nodes: usize) -> GroupResult {
    let specs: Vec<NetworkSpec> = [(3, 3, 4), (4, 4, 2), (2, 2, 8), (4, 4, 8)]
        .iter()
        .map(|&(l, m, n)| NetworkSpec::teh(l, m, n).expect("valid"))
        .filter(|s| s.node_count() <= max_nodes)
        .collect();
    let mut failures = Vec::new();
    let mut pairs = 0usize;
    for spec in &specs {
        let Ok(t) = build_graph(spec) else { continue };
        for (si, src) in spec.addresses().enumerate() {
            let levels = bfs_levels(&t, si);
            for (di, dst) in spec.addresses().enumerate() {
                pairs += 1;
                let path = route(spec, src, dst);
                let closed = distance_closed(spec, src, dst);
                let ok = match (&path, closed, levels[di]) {
                    (Ok(p), Ok(c), Some(b)) => p.is_valid() && p.len() == c && c == b,
                    _ => false,
                };
                if !ok && failures.len() < 5 {
                    failures.push(format!("{spec}: {src} -> {dst}"));
                }
            }
        }
    }
    group("routing-oracle", failures, format!("{pairs} ordered pairs"))
}

pub fn check_transitivity(max_nodes: usize) -> GroupResult {
    let specs = grid_specs(&[2, 3, 4, 5], &[1, 2, 4, 8], max_nodes);
    let failures = specs
        .iter()
        .filter_map(|spec| {
            let t = build_graph(spec).ok()?;
            (!t.translations_are_automorphisms()).then(|| spec.to_string())
        })
        .collect();
    group(
        "vertex-transitivity",
        failures,
        format!("{} networks", specs.len()),
    )
}

/// Cell-by-cell comparison of two CSV documents with a shared header.
fn compare_csv(name: &'static str, computed: &str, reference: &str) -> GroupResult {
    let parse = |doc: &str| -> Vec<Vec<String>> {
        doc.lines()
            .filter(|l| !l.trim().is_empty())
            .map(split_csv_line)
            .collect()
    };
    let (got, want) = (parse(computed), parse(reference));
    if got.len() != want.len() || got.first() != want.first() {
        return group(
            name,
            vec!["reference layout differs".to_string()],
            String::new(),
        );
    }
    let header = &want[0];
    let mut failures = Vec::new();
    let mut cells = 0;
    for (g, w) in got.iter().zip(&want).skip(1) {
        if g.len() != w.len() {
            failures.push(format!(
                "row {} has {} cells, reference {}",
                w[0],
                g.len(),
                w.len()
            ));
            continue;
        }
        for c in 1..w.len() {
            cells += 1;
            if g[c] != w[c] {
                failures.push(format!(
                    "{}={} {}: reference {} computed {}",
                    header[0], w[0], header[c], w[c], g[c]
                ));
            }
        }
    }
    let total = cells;
    if !failures.is_empty() {
        failures.insert(0, format!("{} of {total} cells differ", failures.len()));
    }
    group(name, failures, format!("{total} cells"))
}

fn split_csv_line(line: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut field = String::new();
    let mut quoted = false;
    for ch in line.chars() {
        match ch {
            '"' => quoted = !quoted,
            ',' if !quoted => out.push(std::mem::take(&mut field)),
            _ => field.push(ch),
        }
    }
    out.push(field);
    out
}

pub fn check_tables(references: &References) -> Vec<GroupResult> {
    vec![
        compare_csv(
            "table-1",
            &render_comparison_csv(&table1_rows()),
            &references.table1,
        ),
        compare_csv(
            "table-2",
            &render_comparison_csv(&table2_rows(DiameterConvention::PaperSquareApprox)),
            &references.table2,
        ),
        compare_csv("table-3", &table3_grid().render_csv(), &references.table3),
    ]
}

pub fn self_check(max_nodes: usize, references: &References) -> CheckReport {
    let mut groups = vec![
        check_links(max_nodes),
        check_diameter(max_nodes),
        check_routing(max_nodes),
        check_transitivity(max_nodes),
    ];
    groups.extend(check_tables(references));
    CheckReport { groups }
}
