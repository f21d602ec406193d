//! Exhaustive experiments over S_n: classify permutations by occurrence-graph
//! property, count avoidance classes, mine minimal forbidden patterns and
//! check the closed-form identities empirically.
//!
//! Every sweep partitions S_n into contiguous lexicographic rank blocks, one
//! per worker; block results merge in block order, so reports are identical
//! for any worker count.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::OccurrenceGraph;
use crate::mesh::MeshPattern;
use crate::oeis::{self, OeisMatch};
use crate::perm::{factorial, iterate_permutations, lex_range, Permutation};
use crate::props::{count_cliques_of_size, count_triangles, is_connected, is_tree, GraphProperty};
use crate::series::connected_class_gf;

/// Lengths from this value up require [`ExplorerConfig::allow_large`];
/// sweeps beyond S_8 stop being instant and grow factorially.
pub const LARGE_LENGTH: usize = 9;

/// Knobs shared by the exhaustive operations.
#[derive(Clone, Debug)]
pub struct ExplorerConfig {
    /// Number of parallel workers; results are identical for any value.
    pub workers: usize,
    /// Permit sweeps of length [`LARGE_LENGTH`] and beyond.
    pub allow_large: bool,
    /// Consult the OEIS search endpoint for annotations.
    pub network: bool,
}

impl Default for ExplorerConfig {
    fn default() -> Self {
        Self {
            workers: 1,
            allow_large: false,
            network: false,
        }
    }
}

impl ExplorerConfig {
    pub fn with_workers(workers: usize) -> Self {
        Self {
            workers,
            ..Self::default()
        }
    }

    fn check_length(&self, max_len: usize) -> Result<()> {
        if max_len == 0 {
            return Err(Error::InvalidInput("max_len must be at least 1".into()));
        }
        if max_len >= LARGE_LENGTH && !self.allow_large {
            return Err(Error::ResourceLimit(format!(
                "sweeps of length >= {LARGE_LENGTH} need the large-run override"
            )));
        }
        Ok(())
    }
}

/// Runs `work` over contiguous lexicographic blocks of S_n and returns the
/// per-block results in block order.
fn run_blocks<T, F>(n: usize, workers: usize, work: F) -> Vec<T>
where
    T: Send,
    F: Fn(crate::perm::LexPermutations) -> T + Sync,
{
    let total = factorial(n);
    let blocks = workers.max(1) as u64;
    if blocks == 1 {
        return vec![work(lex_range(n, 0, total))];
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..blocks)
            .map(|b| {
                let start = total * b / blocks;
                let end = total * (b + 1) / blocks;
                let work = &work;
                scope.spawn(move || work(lex_range(n, start, end)))
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    })
}

/// Counts permutations of length `n` satisfying `pred`; optionally collects
/// the members in lexicographic order.
fn sweep_count<F>(n: usize, workers: usize, collect: bool, pred: F) -> (u64, Vec<Permutation>)
where
    F: Fn(&Permutation) -> bool + Sync,
{
    let parts = run_blocks(n, workers, |range| {
        let mut count = 0u64;
        let mut members = Vec::new();
        for pi in range {
            if pred(&pi) {
                count += 1;
                if collect {
                    members.push(pi);
                }
            }
        }
        (count, members)
    });
    let mut count = 0;
    let mut members = Vec::new();
    for (c, m) in parts {
        count += c;
        members.extend(m);
    }
    (count, members)
}

/// Evaluates two predicates over S_n, returning both counts and the first
/// permutation (in lexicographic order) on which they disagree.
fn sweep_agreement<F>(n: usize, workers: usize, pred: F) -> (u64, u64, Option<Permutation>)
where
    F: Fn(&Permutation) -> (bool, bool) + Sync,
{
    let parts = run_blocks(n, workers, |range| {
        let mut lhs = 0u64;
        let mut rhs = 0u64;
        let mut first = None;
        for pi in range {
            let (a, b) = pred(&pi);
            lhs += a as u64;
            rhs += b as u64;
            if a != b && first.is_none() {
                first = Some(pi);
            }
        }
        (lhs, rhs, first)
    });
    let mut lhs = 0;
    let mut rhs = 0;
    let mut first = None;
    for (a, b, f) in parts {
        lhs += a;
        rhs += b;
        if first.is_none() {
            first = f;
        }
    }
    (lhs, rhs, first)
}

/// What a classification run counted.
#[derive(Clone, Debug)]
pub enum ClassifySubject {
    /// Permutations whose occurrence graph for `pattern` has `property`.
    PatternProperty {
        pattern: Permutation,
        property: GraphProperty,
    },
    /// Permutations avoiding every pattern of the basis.
    Avoidance { basis: Vec<Permutation> },
    /// Permutations avoiding the mesh pattern.
    MeshAvoidance { mesh: MeshPattern },
}

impl ClassifySubject {
    pub fn pattern_text(&self) -> String {
        match self {
            ClassifySubject::PatternProperty { pattern, .. } => pattern.to_string(),
            ClassifySubject::Avoidance { basis } => basis
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(","),
            ClassifySubject::MeshAvoidance { mesh } => mesh.to_string(),
        }
    }

    pub fn property_text(&self) -> String {
        match self {
            ClassifySubject::PatternProperty { property, .. } => property.name().to_string(),
            ClassifySubject::Avoidance { .. } => "avoidance".to_string(),
            ClassifySubject::MeshAvoidance { .. } => "mesh-avoidance".to_string(),
        }
    }
}

/// Per-length member counts for lengths 1..=max_len.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub subject: ClassifySubject,
    pub max_len: usize,
    pub counts: Vec<u64>,
    pub members: Option<Vec<Vec<Permutation>>>,
    pub oeis: Option<OeisMatch>,
}

#[derive(Serialize)]
struct ReportJson {
    pattern: String,
    property: String,
    max_len: usize,
    counts: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oeis: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    members: Option<Vec<Vec<String>>>,
}

impl ClassificationReport {
    /// Count for a single length (1-based).
    pub fn count_for(&self, n: usize) -> u64 {
        self.counts[n - 1]
    }

    pub fn to_json(&self) -> String {
        let dto = ReportJson {
            pattern: self.subject.pattern_text(),
            property: self.subject.property_text(),
            max_len: self.max_len,
            counts: self.counts.clone(),
            oeis: self.oeis.as_ref().map(|m| m.to_string()),
            members: self.members.as_ref().map(|per_len| {
                per_len
                    .iter()
                    .map(|ms| ms.iter().map(|p| p.to_string()).collect())
                    .collect()
            }),
        };
        serde_json::to_string(&dto).expect("report serialization cannot fail")
    }

    /// One row per length.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("length,count\n");
        for (i, c) in self.counts.iter().enumerate() {
            out.push_str(&format!("{},{}\n", i + 1, c));
        }
        out
    }
}

fn classify_with<F>(
    subject: ClassifySubject,
    max_len: usize,
    cfg: &ExplorerConfig,
    members: bool,
    pred: F,
) -> Result<ClassificationReport>
where
    F: Fn(&Permutation) -> bool + Sync,
{
    cfg.check_length(max_len)?;
    let mut counts = Vec::with_capacity(max_len);
    let mut member_lists = Vec::with_capacity(max_len);
    for n in 1..=max_len {
        let (count, ms) = sweep_count(n, cfg.workers, members, &pred);
        counts.push(count);
        if members {
            member_lists.push(ms);
        }
    }
    let oeis = oeis::annotate(&counts, cfg.network);
    Ok(ClassificationReport {
        subject,
        max_len,
        counts,
        members: members.then_some(member_lists),
        oeis,
    })
}

/// Counts, per length 1..=max_len, the permutations whose occurrence graph
/// for `p` satisfies `property`.
pub fn classify(
    p: &Permutation,
    property: GraphProperty,
    max_len: usize,
    cfg: &ExplorerConfig,
) -> Result<ClassificationReport> {
    classify_members(p, property, max_len, cfg, false)
}

/// Same as [`classify`], optionally collecting the members per length.
pub fn classify_members(
    p: &Permutation,
    property: GraphProperty,
    max_len: usize,
    cfg: &ExplorerConfig,
    members: bool,
) -> Result<ClassificationReport> {
    let subject = ClassifySubject::PatternProperty {
        pattern: p.clone(),
        property,
    };
    classify_with(subject, max_len, cfg, members, |pi| {
        property.holds(OccurrenceGraph::build(p, pi).graph())
    })
}

/// Counts, per length, the permutations avoiding every pattern of `basis`.
pub fn classify_avoidance(
    basis: &[Permutation],
    max_len: usize,
    cfg: &ExplorerConfig,
) -> Result<ClassificationReport> {
    let subject = ClassifySubject::Avoidance {
        basis: basis.to_vec(),
    };
    classify_with(subject, max_len, cfg, false, |pi| pi.avoids_all(basis))
}

/// Counts, per length, the permutations avoiding the mesh pattern `m`.
pub fn classify_mesh_avoidance(
    m: &MeshPattern,
    max_len: usize,
    cfg: &ExplorerConfig,
) -> Result<ClassificationReport> {
    let subject = ClassifySubject::MeshAvoidance { mesh: m.clone() };
    classify_with(subject, max_len, cfg, false, |pi| !pi.contains_mesh(m))
}

/// A member whose one-point deletion leaves the member set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureViolation {
    pub member: Permutation,
    pub missing_pattern: Permutation,
}

/// Pattern-containment-minimal non-members of a property class, with the
/// closure check that tells whether they determine the class.
#[derive(Clone, Debug)]
pub struct BasisReport {
    pub pattern: Permutation,
    pub property: GraphProperty,
    pub complete_to: usize,
    pub member_counts: Vec<u64>,
    pub minimal_non_members: Vec<Permutation>,
    pub closure_violations: Vec<ClosureViolation>,
}

#[derive(Serialize)]
struct BasisJson {
    pattern: String,
    property: String,
    max_len: usize,
    counts: Vec<u64>,
    basis: Vec<String>,
    closure_violations: Vec<[String; 2]>,
}

impl BasisReport {
    /// True when the member set is closed under pattern containment up to
    /// `complete_to`; only then do the minimal non-members define it.
    pub fn is_downward_closed(&self) -> bool {
        self.closure_violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        let dto = BasisJson {
            pattern: self.pattern.to_string(),
            property: self.property.name().to_string(),
            max_len: self.complete_to,
            counts: self.member_counts.clone(),
            basis: self
                .minimal_non_members
                .iter()
                .map(|p| p.to_string())
                .collect(),
            closure_violations: self
                .closure_violations
                .iter()
                .map(|v| [v.member.to_string(), v.missing_pattern.to_string()])
                .collect(),
        };
        serde_json::to_string(&dto).expect("report serialization cannot fail")
    }
}

/// Computes the members of the property class up to `max_len` and mines the
/// minimal non-members plus any downward-closure violations.
pub fn mine_basis(
    p: &Permutation,
    property: GraphProperty,
    max_len: usize,
    cfg: &ExplorerConfig,
) -> Result<BasisReport> {
    cfg.check_length(max_len)?;
    let mut minimal: Vec<Permutation> = Vec::new();
    let mut violations: Vec<ClosureViolation> = Vec::new();
    let mut member_counts = Vec::with_capacity(max_len);
    let mut prev_members: HashSet<Permutation> = HashSet::new();
    for n in 1..=max_len {
        let (count, members) = sweep_count(n, cfg.workers, true, |pi| {
            property.holds(OccurrenceGraph::build(p, pi).graph())
        });
        member_counts.push(count);
        let member_set: HashSet<Permutation> = members.iter().cloned().collect();
        for pi in iterate_permutations(n) {
            if member_set.contains(&pi) {
                if n >= 2 {
                    let mut missing: Vec<Permutation> = pi
                        .one_point_deletions()
                        .into_iter()
                        .filter(|d| !prev_members.contains(d))
                        .collect();
                    missing.sort();
                    missing.dedup();
                    for d in missing {
                        violations.push(ClosureViolation {
                            member: pi.clone(),
                            missing_pattern: d,
                        });
                    }
                }
            } else if pi.avoids_all(&minimal) {
                // A non-member containing no smaller non-member is minimal.
                minimal.push(pi);
            }
        }
        prev_members = member_set;
    }
    Ok(BasisReport {
        pattern: p.clone(),
        property,
        complete_to: max_len,
        member_counts,
        minimal_non_members: minimal,
        closure_violations: violations,
    })
}

/// Result of comparing a property class against an avoidance class.
#[derive(Clone, Debug)]
pub struct EqualityOutcome {
    pub lhs_counts: Vec<u64>,
    pub rhs_counts: Vec<u64>,
    pub first_counterexample: Option<Permutation>,
}

impl EqualityOutcome {
    pub fn holds(&self) -> bool {
        self.first_counterexample.is_none()
    }
}

/// Checks, for every length up to `max_len`, that the occurrence graph of
/// `p` has `property` exactly when the permutation avoids `basis`.
pub fn verify_class_equality(
    p: &Permutation,
    property: GraphProperty,
    basis: &[Permutation],
    max_len: usize,
    cfg: &ExplorerConfig,
) -> Result<EqualityOutcome> {
    cfg.check_length(max_len)?;
    let mut lhs_counts = Vec::with_capacity(max_len);
    let mut rhs_counts = Vec::with_capacity(max_len);
    let mut first = None;
    for n in 1..=max_len {
        let (lhs, rhs, cex) = sweep_agreement(n, cfg.workers, |pi| {
            (
                property.holds(OccurrenceGraph::build(p, pi).graph()),
                pi.avoids_all(basis),
            )
        });
        lhs_counts.push(lhs);
        rhs_counts.push(rhs);
        if first.is_none() {
            first = cex;
        }
    }
    Ok(EqualityOutcome {
        lhs_counts,
        rhs_counts,
        first_counterexample: first,
    })
}

/// The classical basis of the forest class for the pattern 12.
pub fn forest_basis() -> Vec<Permutation> {
    ["123", "1432", "2143", "3214"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

/// The classical basis of the bipartite class for the pattern 12.
pub fn bipartite_basis() -> Vec<Permutation> {
    ["123", "1432", "3214"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

/// The conjectured classical bases for the bipartite and forest classes of
/// the patterns 123 and 132, as suggested by exhaustive search up to
/// length 8. Unlike [`bipartite_basis`] and [`forest_basis`] these are not
/// proven; mismatches against them rank as findings, not failures.
pub fn conjectured_bases() -> Vec<(Permutation, GraphProperty, Vec<Permutation>)> {
    let parse =
        |list: &[&str]| -> Vec<Permutation> { list.iter().map(|s| s.parse().unwrap()).collect() };
    vec![
        (
            "123".parse().unwrap(),
            GraphProperty::Bipartite,
            parse(&["1234", "12543", "14325", "32145"]),
        ),
        (
            "132".parse().unwrap(),
            GraphProperty::Bipartite,
            parse(&[
                "1432", "12354", "13254", "13452", "15234", "21354", "23154", "31254", "32154",
            ]),
        ),
        (
            "123".parse().unwrap(),
            GraphProperty::Forest,
            parse(&["1234", "12543", "13254", "14325", "21354", "21435", "32145"]),
        ),
        (
            "132".parse().unwrap(),
            GraphProperty::Forest,
            parse(&[
                "1432", "12354", "12453", "12534", "13254", "13452", "14523", "15234", "21354",
                "21453", "21534", "23154", "31254", "32154",
            ]),
        ),
    ]
}

/// Outcome of the tree-class characterisation check.
#[derive(Clone, Debug)]
pub struct TreeClassOutcome {
    pub counts: Vec<u64>,
    pub first_counterexample: Option<Permutation>,
    /// First length whose count differs from (n-1)^2, if any.
    pub first_count_mismatch: Option<usize>,
}

impl TreeClassOutcome {
    pub fn holds(&self) -> bool {
        self.first_counterexample.is_none() && self.first_count_mismatch.is_none()
    }
}

/// Checks that the occurrence graph of 12 is a tree exactly for the
/// permutations that avoid 123, 1432, 2143, 3214 and the connectivity mesh
/// pattern while containing 12, and that there are (n-1)^2 of them.
pub fn verify_tree_corollary(max_len: usize, cfg: &ExplorerConfig) -> Result<TreeClassOutcome> {
    cfg.check_length(max_len)?;
    let p12: Permutation = "12".parse().unwrap();
    let basis = forest_basis();
    let mesh = MeshPattern::connectivity_classifier();
    let mut counts = Vec::with_capacity(max_len);
    let mut first = None;
    let mut first_count_mismatch = None;
    for n in 1..=max_len {
        let (lhs, _, cex) = sweep_agreement(n, cfg.workers, |pi| {
            let tree = is_tree(OccurrenceGraph::build(&p12, pi).graph());
            let class = pi.avoids_all(&basis) && !pi.contains_mesh(&mesh) && pi.contains(&p12);
            (tree, class)
        });
        counts.push(lhs);
        if first.is_none() {
            first = cex;
        }
        let expected = (n as u64 - 1).pow(2);
        if lhs != expected && first_count_mismatch.is_none() {
            first_count_mismatch = Some(n);
        }
    }
    Ok(TreeClassOutcome {
        counts,
        first_counterexample: first,
        first_count_mismatch,
    })
}

/// One closed-form identity evaluated on a concrete graph.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub n: usize,
    pub quantity: String,
    pub expected: u64,
    pub actual: u64,
}

impl IdentityCheck {
    pub fn ok(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, Debug, Default)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(IdentityCheck::ok)
    }

    pub fn failures(&self) -> Vec<&IdentityCheck> {
        self.checks.iter().filter(|c| !c.ok()).collect()
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result = 1u64;
    for i in 0..k {
        result = result * (n - i) / (i + 1);
    }
    result
}

/// Evaluates the vertex/edge/degree/triangle/clique formulas for the
/// occurrence graph of 12 in the identity permutation, for n up to `max_n`
/// and clique sizes 4..=max_k.
pub fn verify_identity_formulas(max_n: usize, max_k: usize) -> Result<IdentityReport> {
    if max_n < 3 {
        return Err(Error::InvalidInput("max_n must be at least 3".into()));
    }
    let p12: Permutation = "12".parse().unwrap();
    let mut report = IdentityReport::default();
    for n in 1..=max_n {
        let g = OccurrenceGraph::build(&p12, &Permutation::identity(n));
        let nn = n as u64;
        report.checks.push(IdentityCheck {
            n,
            quantity: "vertices".into(),
            expected: binomial(nn, 2),
            actual: g.vertex_count() as u64,
        });
        report.checks.push(IdentityCheck {
            n,
            quantity: "edges".into(),
            expected: 3 * binomial(nn, 3),
            actual: g.edge_count() as u64,
        });
        let degrees_ok = (0..g.vertex_count()).all(|u| g.graph().degree(u) == 2 * (n - 2));
        report.checks.push(IdentityCheck {
            n,
            quantity: "degree 2(n-2) everywhere".into(),
            expected: 1,
            actual: (n < 2 || degrees_ok) as u64,
        });
        report.checks.push(IdentityCheck {
            n,
            quantity: "triangles".into(),
            expected: nn.saturating_sub(2) * binomial(nn, 3),
            actual: count_triangles(g.graph()),
        });
        for k in 4..=max_k {
            report.checks.push(IdentityCheck {
                n,
                quantity: format!("cliques of size {k}"),
                expected: nn * binomial(nn - 1, k as u64),
                actual: count_cliques_of_size(g.graph(), k),
            });
        }
    }
    Ok(report)
}

/// Outcome of the skew-decomposition structure check.
#[derive(Clone, Debug)]
pub struct SkewStructureOutcome {
    pub first_counterexample: Option<Permutation>,
}

impl SkewStructureOutcome {
    pub fn holds(&self) -> bool {
        self.first_counterexample.is_none()
    }
}

/// Checks that the occurrence graph of 12 is connected exactly when at most
/// one skew component has size greater than one.
pub fn verify_skew_structure(max_len: usize, cfg: &ExplorerConfig) -> Result<SkewStructureOutcome> {
    cfg.check_length(max_len)?;
    let p12: Permutation = "12".parse().unwrap();
    let mut first = None;
    for n in 1..=max_len {
        let (_, _, cex) = sweep_agreement(n, cfg.workers, |pi| {
            let connected = is_connected(OccurrenceGraph::build(&p12, pi).graph());
            let big_components = pi.skew_decompose().iter().filter(|c| c.len() > 1).count();
            (connected, big_components <= 1)
        });
        if first.is_none() {
            first = cex;
            if first.is_some() {
                break;
            }
        }
    }
    Ok(SkewStructureOutcome {
        first_counterexample: first,
    })
}

/// Convenience: the connected-class counts predicted by the generating
/// function, for lengths 1..=max_len.
pub fn connected_counts_from_gf(max_len: usize) -> Vec<u64> {
    let gf = connected_class_gf(max_len);
    (1..=max_len)
        .map(|n| u64::try_from(gf.coeff(n)).expect("connected counts fit u64"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn cfg() -> ExplorerConfig {
        ExplorerConfig::default()
    }

    #[test]
    fn classify_bipartite_prefix() {
        let report = classify(&p("12"), GraphProperty::Bipartite, 5, &cfg()).unwrap();
        assert_eq!(report.counts, vec![1, 2, 5, 12, 26]);
    }

    #[test]
    fn classify_matches_avoidance_prefix() {
        let report = classify_avoidance(&bipartite_basis(), 5, &cfg()).unwrap();
        assert_eq!(report.counts, vec![1, 2, 5, 12, 26]);
    }

    #[test]
    fn classify_mesh_prefix() {
        let mesh = MeshPattern::connectivity_classifier();
        let report = classify_mesh_avoidance(&mesh, 5, &cfg()).unwrap();
        assert_eq!(report.counts, vec![1, 2, 6, 23, 111]);
    }

    #[test]
    fn classify_members_are_listed() {
        let report = classify_members(&p("12"), GraphProperty::Tree, 3, &cfg(), true).unwrap();
        let members = report.members.as_ref().unwrap();
        assert_eq!(members[0], vec![]);
        assert_eq!(members[1], vec![p("12")]);
        assert_eq!(members[2], vec![p("132"), p("213"), p("231"), p("312")]);
    }

    #[test]
    fn trivial_avoidance_class() {
        let report = classify_avoidance(&[p("1")], 5, &cfg()).unwrap();
        assert_eq!(report.counts, vec![0, 0, 0, 0, 0]);
    }

    #[test]
    fn large_lengths_need_the_override() {
        let err = classify(&p("12"), GraphProperty::Tree, 9, &cfg());
        assert!(matches!(err, Err(Error::ResourceLimit(_))));
        let err = mine_basis(&p("12"), GraphProperty::Tree, 9, &cfg());
        assert!(matches!(err, Err(Error::ResourceLimit(_))));
        assert!(matches!(
            classify(&p("12"), GraphProperty::Tree, 0, &cfg()),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn basis_mining_bipartite() {
        let report = mine_basis(&p("12"), GraphProperty::Bipartite, 5, &cfg()).unwrap();
        assert_eq!(
            report.minimal_non_members,
            vec![p("123"), p("1432"), p("3214")]
        );
        assert!(report.is_downward_closed());
        assert_eq!(report.member_counts, vec![1, 2, 5, 12, 26]);
    }

    #[test]
    fn basis_mining_tree_flags_closure_violations() {
        let report = mine_basis(&p("12"), GraphProperty::Tree, 3, &cfg()).unwrap();
        assert_eq!(report.minimal_non_members, vec![p("1")]);
        assert!(!report.is_downward_closed());
        assert!(report.closure_violations.contains(&ClosureViolation {
            member: p("12"),
            missing_pattern: p("1"),
        }));
    }

    #[test]
    fn equality_check_reports_the_smallest_counterexample() {
        let outcome =
            verify_class_equality(&p("12"), GraphProperty::Forest, &[p("123")], 4, &cfg()).unwrap();
        assert!(!outcome.holds());
        assert_eq!(outcome.first_counterexample, Some(p("1432")));
    }

    #[test]
    fn equality_check_bipartite_small() {
        let outcome = verify_class_equality(
            &p("12"),
            GraphProperty::Bipartite,
            &bipartite_basis(),
            6,
            &cfg(),
        )
        .unwrap();
        assert!(outcome.holds());
        assert_eq!(outcome.lhs_counts, outcome.rhs_counts);
    }

    #[test]
    fn tree_corollary_small() {
        let outcome = verify_tree_corollary(6, &cfg()).unwrap();
        assert!(outcome.holds());
        assert_eq!(outcome.counts, vec![0, 1, 4, 9, 16, 25]);
    }

    #[test]
    fn identity_formulas_at_example_size() {
        let report = verify_identity_formulas(5, 4).unwrap();
        assert!(report.all_ok());
        let at5: Vec<&IdentityCheck> = report.checks.iter().filter(|c| c.n == 5).collect();
        let by_name = |name: &str| at5.iter().find(|c| c.quantity == name).unwrap().actual;
        assert_eq!(by_name("vertices"), 10);
        assert_eq!(by_name("edges"), 30);
        assert_eq!(by_name("triangles"), 30);
        assert_eq!(by_name("cliques of size 4"), 5);
        assert!(verify_identity_formulas(2, 4).is_err());
    }

    #[test]
    fn skew_structure_small() {
        let outcome = verify_skew_structure(6, &cfg()).unwrap();
        assert!(outcome.holds());
    }

    #[test]
    fn gf_counts_match_classify() {
        let from_gf = connected_counts_from_gf(6);
        let report = classify(&p("12"), GraphProperty::Connected, 6, &cfg()).unwrap();
        assert_eq!(from_gf, report.counts);
    }

    #[test]
    fn worker_counts_do_not_change_reports() {
        let base = classify(&p("12"), GraphProperty::Chordal, 6, &cfg()).unwrap();
        for workers in [2, 3, 8] {
            let cfg = ExplorerConfig::with_workers(workers);
            let report = classify(&p("12"), GraphProperty::Chordal, 6, &cfg).unwrap();
            assert_eq!(report.to_json(), base.to_json());
        }
    }

    #[test]
    fn report_serialisation_shapes() {
        let report = classify(&p("12"), GraphProperty::Tree, 4, &cfg()).unwrap();
        let json = report.to_json();
        assert!(json.starts_with(
            "{\"pattern\":\"12\",\"property\":\"tree\",\"max_len\":4,\"counts\":[0,1,4,9]"
        ));
        assert_eq!(report.to_csv(), "length,count\n1,0\n2,1\n3,4\n4,9\n");
    }
}
