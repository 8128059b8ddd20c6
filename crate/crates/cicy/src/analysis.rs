//! End-to-end analysis of configuration records: validation, Euler
//! characteristic, Hodge numbers, involution enumeration, and the Betti
//! numbers of the resulting quotient seven-manifolds, plus batch execution
//! and report rendering.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::config::{ConfigurationMatrix, ValidationReport};
use crate::dataset::ConfigRecord;
use crate::involutions::{
    enumerate_b_combinations, enumerate_c_combinations, CCombination, InvolutionAssignment, RowRole,
};
use crate::topology::{
    barely_betti, euler_characteristic, hodge_from_euler, BettiNumbers, HodgePair, TopologyError,
};

/// Knobs for [`analyze`].
#[derive(Debug, Clone)]
pub struct AnalysisOptions {
    /// When no Hodge data is supplied, take `h11` to be the number of
    /// projective factors (the favourable case, where every ambient
    /// hyperplane class survives to the intersection).
    pub assume_favourable: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            assume_favourable: true,
        }
    }
}

/// Where the Hodge numbers in an [`AnalysisResult`] came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HodgeSource {
    /// Taken from the record (and cross-checked against the Euler
    /// characteristic).
    Supplied,
    /// Derived from the Euler characteristic with `h11` set to the number
    /// of factors.
    AssumedFavourable,
    /// Not determined; the payload says why.
    Unavailable(String),
}

/// Everything computed for one record.
#[derive(Debug, Clone)]
pub struct AnalysisResult {
    pub name: String,
    pub matrix: ConfigurationMatrix,
    pub validation: ValidationReport,
    /// `None` when the configuration is invalid or the computation
    /// faulted.
    pub euler: Option<BigInt>,
    pub hodge: Option<HodgePair>,
    pub hodge_source: HodgeSource,
    /// Admissible simultaneous row-swap sets (including the empty one).
    pub c_combinations: Vec<CCombination>,
    /// Free involution assignments, i.e. every admissible combination of
    /// swaps with a nonempty admissible free-conjugation row set.
    pub assignments: Vec<InvolutionAssignment>,
    /// Distinct `(b2, b3)` outcomes over the free assignments, ascending.
    pub betti_pairs: Vec<BettiNumbers>,
    /// Why `betti_pairs` is empty despite free assignments, if so.
    pub betti_note: Option<String>,
    /// Supplied data contradicting the computation (bad input, not a bug).
    pub data_error: Option<String>,
    /// An arithmetic invariant the implementation relies on failed; this
    /// is a defect in the program, never in the input.
    pub fault: Option<String>,
}

impl AnalysisResult {
    pub fn is_valid(&self) -> bool {
        self.validation.is_ok()
    }

    /// Quotient Betti numbers for one assignment, when the Hodge numbers
    /// are known and the configuration is favourable.
    pub fn betti_for(&self, assignment: &InvolutionAssignment) -> Option<BettiNumbers> {
        let hodge = self.hodge?;
        if u32::try_from(self.matrix.factor_count()) != Ok(hodge.h11) {
            return None;
        }
        let n_c = u32::try_from(assignment.n_c()).ok()?;
        Some(barely_betti(&hodge, n_c))
    }
}

/// Runs the full pipeline on one record.
///
/// Invalid configurations stop after validation; everything downstream
/// stays empty. For valid ones the Euler characteristic always gets
/// computed, involutions are always enumerated, and Betti numbers are
/// produced when the Hodge numbers are known and the configuration is
/// favourable (`h11` equals the factor count), which makes every swap
/// count admissible for the quotient formula.
pub fn analyze(record: &ConfigRecord, options: &AnalysisOptions) -> AnalysisResult {
    let matrix = record.matrix.clone();
    let validation = matrix.validate();
    let mut result = AnalysisResult {
        name: record.name.clone(),
        matrix: matrix.clone(),
        validation,
        euler: None,
        hodge: None,
        hodge_source: HodgeSource::Unavailable("configuration is invalid".into()),
        c_combinations: Vec::new(),
        assignments: Vec::new(),
        betti_pairs: Vec::new(),
        betti_note: None,
        data_error: None,
        fault: None,
    };
    if !result.validation.is_ok() {
        return result;
    }

    let euler = match euler_characteristic(&matrix) {
        Ok(chi) => chi,
        Err(err) => {
            result.fault = Some(err.to_string());
            result.hodge_source = HodgeSource::Unavailable("Euler computation faulted".into());
            return result;
        }
    };
    result.euler = Some(euler.clone());

    match record.hodge {
        Some(pair) => {
            let expected = BigInt::from(2) * (BigInt::from(pair.h11) - BigInt::from(pair.h21));
            if expected == euler {
                result.hodge = Some(pair);
                result.hodge_source = HodgeSource::Supplied;
            } else {
                result.data_error = Some(format!(
                    "Hodge/Euler mismatch: supplied (h11, h21) = ({}, {}) implies \
                     Euler characteristic {}, computed {}",
                    pair.h11, pair.h21, expected, euler
                ));
                result.hodge_source =
                    HodgeSource::Unavailable("supplied Hodge numbers inconsistent".into());
            }
        }
        None if options.assume_favourable => {
            let h11 = u32::try_from(matrix.factor_count()).expect("factor count fits u32");
            match hodge_from_euler(&euler, h11) {
                Ok(pair) => {
                    result.hodge = Some(pair);
                    result.hodge_source = HodgeSource::AssumedFavourable;
                }
                Err(err @ TopologyError::OddEuler(_)) => {
                    // chi = 2 (h11 - h21) can never be odd; this is ours.
                    result.fault = Some(err.to_string());
                    return result;
                }
                Err(err) => {
                    result.hodge_source =
                        HodgeSource::Unavailable(format!("favourable assumption untenable: {err}"));
                }
            }
        }
        None => {
            result.hodge_source = HodgeSource::Unavailable(
                "h11 not supplied and the favourable assumption is disabled".into(),
            );
        }
    }

    result.c_combinations = enumerate_c_combinations(&matrix);
    for c in &result.c_combinations {
        for b in enumerate_b_combinations(&matrix, c) {
            result
                .assignments
                .push(InvolutionAssignment { c: c.clone(), b });
        }
    }

    match result.hodge {
        Some(hodge) if !result.assignments.is_empty() => {
            if u32::try_from(matrix.factor_count()) == Ok(hodge.h11) {
                let mut counts: Vec<u32> = result
                    .assignments
                    .iter()
                    .map(|a| u32::try_from(a.n_c()).expect("pair count fits u32"))
                    .collect();
                counts.sort_unstable();
                counts.dedup();
                result.betti_pairs = counts
                    .into_iter()
                    .map(|n_c| barely_betti(&hodge, n_c))
                    .collect();
            } else {
                result.betti_note = Some(format!(
                    "not favourable: h11 = {} differs from the factor count {}",
                    hodge.h11,
                    matrix.factor_count()
                ));
            }
        }
        Some(_) => {}
        None => {
            if !result.assignments.is_empty() {
                result.betti_note =
                    Some("Hodge numbers unknown; Betti numbers not computed".into());
            }
        }
    }
    result
}

/// Results for a whole dataset, in input order.
#[derive(Debug, Clone)]
pub struct Report {
    pub results: Vec<AnalysisResult>,
}

/// Analyzes every record. Work is distributed over the current rayon
/// thread pool; results keep the input order, so the report is identical
/// whatever the thread count.
pub fn run_batch(records: &[ConfigRecord], options: &AnalysisOptions) -> Report {
    let results = records
        .par_iter()
        .map(|record| analyze(record, options))
        .collect();
    Report { results }
}

impl Report {
    /// First internal fault across the batch, if any.
    pub fn first_fault(&self) -> Option<&str> {
        self.results.iter().find_map(|r| r.fault.as_deref())
    }

    /// First supplied-data contradiction across the batch, if any.
    pub fn first_data_error(&self) -> Option<&str> {
        self.results.iter().find_map(|r| r.data_error.as_deref())
    }

    /// True when every configuration passed validation.
    pub fn all_valid(&self) -> bool {
        self.results.iter().all(AnalysisResult::is_valid)
    }

    /// Tab-separated summary, one row per record, header first. Cells that
    /// do not apply hold `-`. `n_c_options` counts admissible swap sets,
    /// `b_combinations` counts free involution assignments, and
    /// `betti_pairs` lists distinct `b2,b3` outcomes separated by `;`.
    pub fn to_tsv(&self) -> String {
        let mut out =
            String::from("name\tvalid\tchi\th11\th21\tn_c_options\tb_combinations\tbetti_pairs\n");
        for r in &self.results {
            let chi = r
                .euler
                .as_ref()
                .map_or_else(|| "-".to_string(), BigInt::to_string);
            let (h11, h21) = match r.hodge {
                Some(pair) => (pair.h11.to_string(), pair.h21.to_string()),
                None => ("-".to_string(), "-".to_string()),
            };
            let (n_c, b_count) = if r.is_valid() {
                (
                    r.c_combinations.len().to_string(),
                    r.assignments.len().to_string(),
                )
            } else {
                ("-".to_string(), "-".to_string())
            };
            let pairs = if r.betti_pairs.is_empty() {
                "-".to_string()
            } else {
                r.betti_pairs
                    .iter()
                    .map(|b| format!("{},{}", b.b2, b.b3))
                    .collect::<Vec<_>>()
                    .join(";")
            };
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                r.name,
                r.is_valid(),
                chi,
                h11,
                h21,
                n_c,
                b_count,
                pairs
            ));
        }
        out
    }

    /// Human-oriented multi-line summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            if !out.is_empty() {
                out.push('\n');
            }
            out.push_str(&render_result_text(r));
        }
        out
    }
}

fn render_result_text(r: &AnalysisResult) -> String {
    let mut out = String::new();
    if r.is_valid() {
        out.push_str(&format!("{}: valid\n", r.name));
    } else {
        out.push_str(&format!("{}: INVALID\n", r.name));
        for message in &r.validation.messages {
            out.push_str(&format!("  - {message}\n"));
        }
        return out;
    }
    if let Some(fault) = &r.fault {
        out.push_str(&format!("  internal fault: {fault}\n"));
        return out;
    }
    if let Some(chi) = &r.euler {
        out.push_str(&format!("  Euler characteristic: {chi}\n"));
    }
    match (&r.hodge, &r.hodge_source) {
        (Some(pair), HodgeSource::Supplied) => {
            out.push_str(&format!(
                "  Hodge numbers: h11 = {}, h21 = {} (supplied)\n",
                pair.h11, pair.h21
            ));
        }
        (Some(pair), HodgeSource::AssumedFavourable) => {
            out.push_str(&format!(
                "  Hodge numbers: h11 = {}, h21 = {} (favourable assumption)\n",
                pair.h11, pair.h21
            ));
        }
        (_, HodgeSource::Unavailable(reason)) => {
            out.push_str(&format!("  Hodge numbers: unknown ({reason})\n"));
        }
        _ => {}
    }
    if let Some(error) = &r.data_error {
        out.push_str(&format!("  data error: {error}\n"));
    }
    out.push_str(&format!(
        "  swap sets: {}; free involution assignments: {}\n",
        r.c_combinations.len(),
        r.assignments.len()
    ));
    if r.betti_pairs.is_empty() {
        let note = r.betti_note.as_deref().unwrap_or("none");
        out.push_str(&format!("  Betti pairs (b2, b3): {note}\n"));
    } else {
        let pairs = r
            .betti_pairs
            .iter()
            .map(|b| format!("({}, {})", b.b2, b.b3))
            .collect::<Vec<_>>()
            .join(", ");
        out.push_str(&format!("  Betti pairs (b2, b3): {pairs}\n"));
    }
    out
}

/// Renders a configuration with each row labelled by its role under the
/// assignment (`A` for plain conjugation, `B` for the free one, `Cn` for
/// the n-th swapped pair) and, when given, the quotient Betti numbers as a
/// superscript on the closing bracket.
pub fn render_decorated(
    cfg: &ConfigurationMatrix,
    assignment: &InvolutionAssignment,
    betti: Option<&BettiNumbers>,
) -> String {
    let labels: Vec<String> = (0..cfg.factor_count())
        .map(|r| match assignment.role_of(r) {
            RowRole::A => "A:".to_string(),
            RowRole::B => "B:".to_string(),
            RowRole::C(index) => format!("C{index}:"),
        })
        .collect();
    let label_width = labels.iter().map(String::len).max().unwrap_or(0);
    let entry_width = (0..cfg.factor_count())
        .flat_map(|r| cfg.row(r).iter().map(|q| q.to_string().len()))
        .max()
        .unwrap_or(1);
    let dim_width = cfg
        .dims()
        .iter()
        .map(|n| n.to_string().len())
        .max()
        .unwrap_or(1);

    let mut out = String::new();
    for (r, label) in labels.iter().enumerate() {
        out.push_str(&format!(
            "{label:<label_width$} [{:>dim_width$} |",
            cfg.dim(r)
        ));
        for a in 0..cfg.polynomial_count() {
            out.push_str(&format!(" {:>entry_width$}", cfg.degree(r, a)));
        }
        out.push(']');
        if r + 1 == cfg.factor_count() {
            if let Some(b) = betti {
                out.push_str(&format!("^{{{},{}}}", b.b2, b.b3));
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::involutions::BCombination;

    fn record(name: &str, matrix: ConfigurationMatrix) -> ConfigRecord {
        ConfigRecord {
            name: name.into(),
            matrix,
            hodge: None,
        }
    }

    fn corpus() -> Vec<ConfigRecord> {
        let mut records: Vec<ConfigRecord> = catalog::named()
            .into_iter()
            .map(|(name, matrix)| record(name, matrix))
            .collect();
        records[0].hodge = Some(HodgePair { h11: 1, h21: 101 });
        records
    }

    #[test]
    fn analyze_five_factor_end_to_end() {
        let result = analyze(
            &record("five-factor", catalog::five_factor_example()),
            &AnalysisOptions::default(),
        );
        assert!(result.is_valid());
        assert_eq!(result.euler, Some(BigInt::from(-56)));
        assert_eq!(result.hodge, Some(HodgePair { h11: 5, h21: 33 }));
        assert_eq!(result.hodge_source, HodgeSource::AssumedFavourable);
        assert_eq!(result.c_combinations.len(), 2);
        assert_eq!(result.assignments.len(), 4);
        assert_eq!(
            result.betti_pairs,
            vec![
                BettiNumbers {
                    b1: 0,
                    b2: 0,
                    b3: 39
                },
                BettiNumbers {
                    b1: 0,
                    b2: 1,
                    b3: 38
                }
            ]
        );
        assert!(result.fault.is_none());
        assert!(result.data_error.is_none());
    }

    #[test]
    fn supplied_hodge_numbers_win_when_consistent() {
        let mut rec = record("quintic", catalog::quintic());
        rec.hodge = Some(HodgePair { h11: 1, h21: 101 });
        let result = analyze(&rec, &AnalysisOptions::default());
        assert_eq!(result.hodge_source, HodgeSource::Supplied);
        assert_eq!(result.hodge, Some(HodgePair { h11: 1, h21: 101 }));
        assert!(result.assignments.is_empty(), "no odd-dimensional factor");
        assert!(result.betti_pairs.is_empty());
    }

    #[test]
    fn inconsistent_supplied_hodge_numbers_are_a_data_error() {
        let mut rec = record("quintic", catalog::quintic());
        rec.hodge = Some(HodgePair { h11: 1, h21: 100 });
        let result = analyze(&rec, &AnalysisOptions::default());
        assert!(result.data_error.as_deref().unwrap().contains("mismatch"));
        assert_eq!(result.hodge, None);
        assert!(result.fault.is_none(), "bad data is not a fault");
    }

    #[test]
    fn favourable_assumption_can_be_disabled() {
        let result = analyze(
            &record("five-factor", catalog::five_factor_example()),
            &AnalysisOptions {
                assume_favourable: false,
            },
        );
        assert_eq!(result.hodge, None);
        assert!(matches!(result.hodge_source, HodgeSource::Unavailable(_)));
        assert_eq!(
            result.assignments.len(),
            4,
            "involutions do not need Hodge data"
        );
        assert!(result.betti_pairs.is_empty());
        assert!(result.betti_note.as_deref().unwrap().contains("unknown"));
    }

    #[test]
    fn invalid_configuration_stops_after_validation() {
        let bad = ConfigurationMatrix::new(vec![1], vec![vec![3]]).unwrap();
        let result = analyze(&record("curve", bad), &AnalysisOptions::default());
        assert!(!result.is_valid());
        assert_eq!(result.euler, None);
        assert!(result.c_combinations.is_empty());
        assert!(result.assignments.is_empty());
        assert!(result.betti_pairs.is_empty());
    }

    #[test]
    fn batch_report_matches_per_record_analysis() {
        let records = corpus();
        let options = AnalysisOptions::default();
        let report = run_batch(&records, &options);
        assert_eq!(report.results.len(), records.len());
        for (record, result) in records.iter().zip(&report.results) {
            let single = analyze(record, &options);
            assert_eq!(result.name, single.name);
            assert_eq!(result.euler, single.euler);
            assert_eq!(result.betti_pairs, single.betti_pairs);
        }
        assert!(report.all_valid());
        assert!(report.first_fault().is_none());
        assert!(report.first_data_error().is_none());
    }

    #[test]
    fn tsv_report_for_the_corpus_is_stable() {
        let report = run_batch(&corpus(), &AnalysisOptions::default());
        let expected = "\
name\tvalid\tchi\th11\th21\tn_c_options\tb_combinations\tbetti_pairs
quintic\ttrue\t-200\t1\t101\t1\t0\t-
bicubic\ttrue\t-162\t2\t83\t2\t0\t-
tetraquadric\ttrue\t-128\t4\t68\t10\t33\t0,73;1,72
five-factor\ttrue\t-56\t5\t33\t2\t4\t0,39;1,38
";
        assert_eq!(report.to_tsv(), expected);
    }

    #[test]
    fn decorated_rendering_labels_roles_and_betti() {
        let cfg = catalog::five_factor_example();
        let assignment = InvolutionAssignment {
            c: CCombination::new(vec![(1, 2)]),
            b: BCombination::new(vec![0]),
        };
        let betti = BettiNumbers {
            b1: 0,
            b2: 1,
            b3: 38,
        };
        let rendered = render_decorated(&cfg, &assignment, Some(&betti));
        let expected = "\
B:  [1 | 0 0 0 0 2]
C1: [1 | 0 0 1 1 0]
C1: [1 | 0 0 1 1 0]
A:  [2 | 1 1 1 0 0]
A:  [3 | 1 1 0 1 1]^{1,38}
";
        assert_eq!(rendered, expected);
    }

    #[test]
    fn text_report_mentions_key_facts() {
        let report = run_batch(&corpus(), &AnalysisOptions::default());
        let text = report.to_text();
        assert!(text.contains("five-factor: valid"));
        assert!(text.contains("Euler characteristic: -56"));
        assert!(text.contains("(0, 39), (1, 38)"));
        assert!(text.contains("h11 = 1, h21 = 101 (supplied)"));
    }
}
