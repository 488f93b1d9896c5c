//! Parsing and merging of citation edge lists and journal metadata.
//!
//! Input files are UTF-8 comma-separated text with LF line endings and an
//! optional header. Edge lists carry `citing,cited,count` records; metadata
//! files carry `journal,total_cited,total_citing,impact_factor,source_index`
//! with the last two columns optional. Quoted fields are supported for names
//! that contain commas.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// A journal identified by its abbreviated source title, e.g. "Environ Plann B".
///
/// Comparison is case-sensitive; surrounding whitespace is trimmed on
/// construction and the trimmed name must be non-empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JournalId(String);

impl JournalId {
    pub fn new(name: &str) -> Result<Self, IngestError> {
        let trimmed = name.trim();
        if trimmed.is_empty() {
            return Err(IngestError::EmptyJournalName);
        }
        Ok(JournalId(trimmed.to_string()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for JournalId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Which citation index a journal record came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceIndex {
    Ssci,
    Sci,
    Other,
}

impl SourceIndex {
    fn parse(token: &str) -> Option<Self> {
        match token.to_ascii_uppercase().as_str() {
            "SSCI" => Some(SourceIndex::Ssci),
            "SCI" => Some(SourceIndex::Sci),
            "OTHER" => Some(SourceIndex::Other),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            SourceIndex::Ssci => "SSCI",
            SourceIndex::Sci => "SCI",
            SourceIndex::Other => "OTHER",
        }
    }
}

/// Global indicators for one journal.
///
/// `total_cited` and `total_citing` are the journal's index-wide totals, not
/// sums over any particular graph; a value of 0 means unknown and makes
/// threshold computations fall back to in-graph sums.
#[derive(Debug, Clone, PartialEq)]
pub struct JournalMeta {
    pub journal: JournalId,
    pub total_cited: u64,
    pub total_citing: u64,
    pub impact_factor: Option<f64>,
    pub source_index: SourceIndex,
}

impl JournalMeta {
    fn unknown(journal: JournalId) -> Self {
        JournalMeta {
            journal,
            total_cited: 0,
            total_citing: 0,
            impact_factor: None,
            source_index: SourceIndex::Other,
        }
    }
}

/// A directed weighted journal-journal citation graph.
///
/// Edge (citing, cited) holds the number of citation relations from the
/// citing journal's articles to the cited journal; self-loops represent
/// within-journal citations. Metadata is kept only where it was declared;
/// [`CitationGraph::meta`] synthesizes an unknown-totals entry for journals
/// that appear solely as edge endpoints.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CitationGraph {
    edges: BTreeMap<(JournalId, JournalId), u64>,
    meta: BTreeMap<JournalId, JournalMeta>,
}

impl CitationGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert_edge(&mut self, citing: JournalId, cited: JournalId, count: u64) {
        self.edges.insert((citing, cited), count);
    }

    pub fn weight(&self, citing: &JournalId, cited: &JournalId) -> u64 {
        self.edges
            .get(&(citing.clone(), cited.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn edges(&self) -> impl Iterator<Item = (&JournalId, &JournalId, u64)> {
        self.edges.iter().map(|((a, b), w)| (a, b, *w))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All journals: edge endpoints plus journals that only have metadata.
    pub fn journals(&self) -> Vec<JournalId> {
        let mut set: std::collections::BTreeSet<JournalId> = self.meta.keys().cloned().collect();
        for (citing, cited) in self.edges.keys() {
            set.insert(citing.clone());
            set.insert(cited.clone());
        }
        set.into_iter().collect()
    }

    pub fn contains(&self, journal: &JournalId) -> bool {
        self.meta.contains_key(journal)
            || self
                .edges
                .keys()
                .any(|(a, b)| a == journal || b == journal)
    }

    pub fn explicit_meta(&self, journal: &JournalId) -> Option<&JournalMeta> {
        self.meta.get(journal)
    }

    /// Metadata for a journal, falling back to an unknown-totals entry.
    pub fn meta(&self, journal: &JournalId) -> JournalMeta {
        self.meta
            .get(journal)
            .cloned()
            .unwrap_or_else(|| JournalMeta::unknown(journal.clone()))
    }

    /// Total citations received within this graph (column sum, diagonal included).
    pub fn in_sum(&self, journal: &JournalId) -> u64 {
        self.edges
            .iter()
            .filter(|((_, cited), _)| cited == journal)
            .map(|(_, w)| *w)
            .sum()
    }

    /// Total citations given within this graph (row sum, diagonal included).
    pub fn out_sum(&self, journal: &JournalId) -> u64 {
        self.edges
            .iter()
            .filter(|((citing, _), _)| citing == journal)
            .map(|(_, w)| *w)
            .sum()
    }

    /// Attach declared metadata, resolving conflicts with already-attached
    /// records field-wise: equal values are kept, unequal values keep the
    /// maximum with a warning, and the first-attached source index wins.
    pub fn attach_metadata(
        &mut self,
        records: BTreeMap<JournalId, JournalMeta>,
    ) -> Vec<MergeWarning> {
        let mut warnings = Vec::new();
        for (journal, incoming) in records {
            match self.meta.get_mut(&journal) {
                Some(existing) => merge_meta_into(existing, &incoming, &mut warnings),
                None => {
                    self.meta.insert(journal, incoming);
                }
            }
        }
        warnings
    }

    /// Check declared totals against in-graph sums. A declared (nonzero)
    /// total below the corresponding in-graph sum cannot be a real global
    /// figure and is rejected.
    pub fn validate_totals(&self) -> Result<(), IngestError> {
        for (journal, meta) in &self.meta {
            let in_graph = self.in_sum(journal);
            if meta.total_cited > 0 && meta.total_cited < in_graph {
                return Err(IngestError::TotalBelowGraphSum {
                    journal: journal.clone(),
                    field: "total_cited",
                    declared: meta.total_cited,
                    in_graph,
                });
            }
            let out_graph = self.out_sum(journal);
            if meta.total_citing > 0 && meta.total_citing < out_graph {
                return Err(IngestError::TotalBelowGraphSum {
                    journal: journal.clone(),
                    field: "total_citing",
                    declared: meta.total_citing,
                    in_graph: out_graph,
                });
            }
        }
        Ok(())
    }
}

/// Non-fatal conflict seen while merging graphs or metadata.
#[derive(Debug, Clone, PartialEq)]
pub enum MergeWarning {
    EdgeConflict {
        citing: JournalId,
        cited: JournalId,
        kept: u64,
        dropped: u64,
    },
    TotalConflict {
        journal: JournalId,
        field: &'static str,
        kept: u64,
        dropped: u64,
    },
    ImpactFactorConflict {
        journal: JournalId,
        kept: f64,
        dropped: f64,
    },
}

impl fmt::Display for MergeWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MergeWarning::EdgeConflict {
                citing,
                cited,
                kept,
                dropped,
            } => write!(
                f,
                "edge {citing} -> {cited} has conflicting counts; keeping {kept}, dropping {dropped}"
            ),
            MergeWarning::TotalConflict {
                journal,
                field,
                kept,
                dropped,
            } => write!(
                f,
                "{field} for {journal} has conflicting values; keeping {kept}, dropping {dropped}"
            ),
            MergeWarning::ImpactFactorConflict {
                journal,
                kept,
                dropped,
            } => write!(
                f,
                "impact factor for {journal} has conflicting values; keeping {kept}, dropping {dropped}"
            ),
        }
    }
}

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("journal name is empty")]
    EmptyJournalName,
    #[error("line {line}: empty journal name")]
    EmptyName { line: u64 },
    #[error("line {line}: expected {expected} fields, found {found}")]
    FieldCount {
        line: u64,
        expected: &'static str,
        found: usize,
    },
    #[error("line {line}: invalid citation count {value:?} (counts are nonnegative integers)")]
    InvalidCount { line: u64, value: String },
    #[error("line {line}: duplicate edge {citing} -> {cited}")]
    DuplicateEdge {
        line: u64,
        citing: JournalId,
        cited: JournalId,
    },
    #[error("line {line}: invalid {field} {value:?}")]
    InvalidTotal {
        line: u64,
        field: &'static str,
        value: String,
    },
    #[error("line {line}: invalid impact factor {value:?}")]
    InvalidImpactFactor { line: u64, value: String },
    #[error("line {line}: unknown source index {value:?} (expected SSCI, SCI, or OTHER)")]
    UnknownSourceIndex { line: u64, value: String },
    #[error("line {line}: duplicate journal {journal}")]
    DuplicateJournal { line: u64, journal: JournalId },
    #[error("declared {field} for {journal} is {declared}, below the in-graph sum {in_graph}")]
    TotalBelowGraphSum {
        journal: JournalId,
        field: &'static str,
        declared: u64,
        in_graph: u64,
    },
    #[error("malformed delimited input: {0}")]
    Csv(#[from] csv::Error),
}

fn reader(input: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(input.as_bytes())
}

fn record_line(record: &csv::StringRecord) -> u64 {
    record.position().map(|p| p.line()).unwrap_or(0)
}

/// Parse a `citing,cited,count` edge list. The first line is skipped as a
/// header when its third field is non-numeric.
pub fn parse_edge_list(input: &str) -> Result<CitationGraph, IngestError> {
    let mut graph = CitationGraph::new();
    let mut first = true;
    for result in reader(input).records() {
        let record = result?;
        let line = record_line(&record);
        if first {
            first = false;
            let third = record.get(2);
            if third.is_none() || third.unwrap().parse::<f64>().is_err() {
                continue;
            }
        }
        if record.len() != 3 {
            return Err(IngestError::FieldCount {
                line,
                expected: "3",
                found: record.len(),
            });
        }
        let citing = JournalId::new(&record[0]).map_err(|_| IngestError::EmptyName { line })?;
        let cited = JournalId::new(&record[1]).map_err(|_| IngestError::EmptyName { line })?;
        let count: u64 = record[2].parse().map_err(|_| IngestError::InvalidCount {
            line,
            value: record[2].to_string(),
        })?;
        if graph.edges.contains_key(&(citing.clone(), cited.clone())) {
            return Err(IngestError::DuplicateEdge {
                line,
                citing,
                cited,
            });
        }
        graph.insert_edge(citing, cited, count);
    }
    Ok(graph)
}

/// Serialize the edge list back to the input format (header included,
/// edges in key order).
pub fn write_edge_list(graph: &CitationGraph) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["citing", "cited", "count"]).unwrap();
    for (citing, cited, count) in graph.edges() {
        writer
            .write_record([citing.as_str(), cited.as_str(), &count.to_string()])
            .unwrap();
    }
    String::from_utf8(writer.into_inner().unwrap()).unwrap()
}

fn parse_total(
    record: &csv::StringRecord,
    idx: usize,
    field: &'static str,
    line: u64,
) -> Result<u64, IngestError> {
    record[idx].parse().map_err(|_| IngestError::InvalidTotal {
        line,
        field,
        value: record[idx].to_string(),
    })
}

/// Parse `journal,total_cited,total_citing,impact_factor,source_index`
/// metadata records; the last two fields may be empty or omitted.
pub fn parse_metadata(input: &str) -> Result<BTreeMap<JournalId, JournalMeta>, IngestError> {
    let mut map = BTreeMap::new();
    let mut first = true;
    for result in reader(input).records() {
        let record = result?;
        let line = record_line(&record);
        if first {
            first = false;
            let second = record.get(1);
            if second.is_none() || second.unwrap().parse::<f64>().is_err() {
                continue;
            }
        }
        if !(3..=5).contains(&record.len()) {
            return Err(IngestError::FieldCount {
                line,
                expected: "3 to 5",
                found: record.len(),
            });
        }
        let journal = JournalId::new(&record[0]).map_err(|_| IngestError::EmptyName { line })?;
        let total_cited = parse_total(&record, 1, "total_cited", line)?;
        let total_citing = parse_total(&record, 2, "total_citing", line)?;
        let impact_factor = match record.get(3) {
            None | Some("") => None,
            Some(raw) => {
                let value: f64 = raw.parse().map_err(|_| IngestError::InvalidImpactFactor {
                    line,
                    value: raw.to_string(),
                })?;
                if !value.is_finite() || value < 0.0 {
                    return Err(IngestError::InvalidImpactFactor {
                        line,
                        value: raw.to_string(),
                    });
                }
                Some(value)
            }
        };
        let source_index = match record.get(4) {
            None | Some("") => SourceIndex::Ssci,
            Some(raw) => {
                SourceIndex::parse(raw).ok_or_else(|| IngestError::UnknownSourceIndex {
                    line,
                    value: raw.to_string(),
                })?
            }
        };
        if map.contains_key(&journal) {
            return Err(IngestError::DuplicateJournal { line, journal });
        }
        map.insert(
            journal.clone(),
            JournalMeta {
                journal,
                total_cited,
                total_citing,
                impact_factor,
                source_index,
            },
        );
    }
    Ok(map)
}

fn merge_meta_into(
    existing: &mut JournalMeta,
    incoming: &JournalMeta,
    warnings: &mut Vec<MergeWarning>,
) {
    for (field, kept, dropped) in [
        ("total_cited", existing.total_cited, incoming.total_cited),
        ("total_citing", existing.total_citing, incoming.total_citing),
    ] {
        if kept != dropped && kept > 0 && dropped > 0 {
            warnings.push(MergeWarning::TotalConflict {
                journal: existing.journal.clone(),
                field,
                kept: kept.max(dropped),
                dropped: kept.min(dropped),
            });
        }
    }
    existing.total_cited = existing.total_cited.max(incoming.total_cited);
    existing.total_citing = existing.total_citing.max(incoming.total_citing);
    existing.impact_factor = match (existing.impact_factor, incoming.impact_factor) {
        (Some(a), Some(b)) if a != b => {
            warnings.push(MergeWarning::ImpactFactorConflict {
                journal: existing.journal.clone(),
                kept: a.max(b),
                dropped: a.min(b),
            });
            Some(a.max(b))
        }
        (Some(a), _) => Some(a),
        (None, other) => other,
    };
    // source index of the first argument is kept as-is
}

/// Merge two citation graphs into their union. Edges present in both with
/// equal counts collapse to one copy; unequal counts keep the maximum and
/// produce a warning. Metadata merges field-wise the same way, with the
/// source index of `a` winning for journals declared in both.
pub fn merge_graphs(a: &CitationGraph, b: &CitationGraph) -> (CitationGraph, Vec<MergeWarning>) {
    let mut warnings = Vec::new();
    let mut merged = a.clone();
    for (citing, cited, count) in b.edges() {
        let key = (citing.clone(), cited.clone());
        match merged.edges.get(&key) {
            Some(&existing) if existing == count => {}
            Some(&existing) => {
                warnings.push(MergeWarning::EdgeConflict {
                    citing: citing.clone(),
                    cited: cited.clone(),
                    kept: existing.max(count),
                    dropped: existing.min(count),
                });
                merged.edges.insert(key, existing.max(count));
            }
            None => {
                merged.edges.insert(key, count);
            }
        }
    }
    warnings.extend(merged.attach_metadata(b.meta.clone()));
    (merged, warnings)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j(name: &str) -> JournalId {
        JournalId::new(name).unwrap()
    }

    #[test]
    fn parses_self_loop_edge() {
        let graph = parse_edge_list("Environ Plann B,Environ Plann B,102\n").unwrap();
        let epb = j("Environ Plann B");
        assert_eq!(graph.weight(&epb, &epb), 102);
        assert_eq!(graph.journals(), vec![epb]);
    }

    #[test]
    fn header_only_stream_is_empty() {
        let graph = parse_edge_list("citing,cited,count\n").unwrap();
        assert_eq!(graph.edge_count(), 0);
        assert!(graph.journals().is_empty());
    }

    #[test]
    fn table1_row_reads_back() {
        let graph = parse_edge_list(crate::fixtures::TABLE1_EDGES).unwrap();
        let epb = j("Environ Plann B");
        let order = [
            "Cities",
            "Environ Plann A",
            "Environ Plann B",
            "Int J Geogr Inf Sci",
            "J Am Plann Assoc",
            "J Archit Plan Res",
            "J Urban Plan D-Asce",
            "Prof Geogr",
            "Prog Plann",
            "Urban Stud",
        ];
        let row: Vec<u64> = order.iter().map(|n| graph.weight(&epb, &j(n))).collect();
        assert_eq!(row, vec![2, 25, 102, 34, 24, 0, 0, 3, 0, 22]);
    }

    #[test]
    fn table1_margins() {
        let graph = parse_edge_list(crate::fixtures::TABLE1_EDGES).unwrap();
        let order = [
            "Cities",
            "Environ Plann A",
            "Environ Plann B",
            "Int J Geogr Inf Sci",
            "J Am Plann Assoc",
            "J Archit Plan Res",
            "J Urban Plan D-Asce",
            "Prof Geogr",
            "Prog Plann",
            "Urban Stud",
        ];
        let col_sums: Vec<u64> = order.iter().map(|n| graph.in_sum(&j(n))).collect();
        let row_sums: Vec<u64> = order.iter().map(|n| graph.out_sum(&j(n))).collect();
        assert_eq!(col_sums, vec![94, 419, 189, 163, 205, 14, 3, 101, 21, 481]);
        assert_eq!(row_sums, vec![101, 423, 212, 111, 101, 22, 45, 133, 131, 411]);
    }

    #[test]
    fn duplicate_edge_is_rejected() {
        let err = parse_edge_list("A,B,3\nA,B,3\n").unwrap_err();
        assert!(matches!(err, IngestError::DuplicateEdge { line: 2, .. }), "{err}");
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let err = parse_edge_list("A,B,3\nA,B\n").unwrap_err();
        assert!(matches!(err, IngestError::FieldCount { line: 2, .. }), "{err}");
    }

    #[test]
    fn negative_and_fractional_counts_are_value_errors() {
        assert!(matches!(
            parse_edge_list("A,B,-3\n").unwrap_err(),
            IngestError::InvalidCount { line: 1, .. }
        ));
        assert!(matches!(
            parse_edge_list("A,B,3.5\n").unwrap_err(),
            IngestError::InvalidCount { line: 1, .. }
        ));
    }

    #[test]
    fn quoted_names_with_commas_round_trip() {
        let graph = parse_edge_list("\"Annals, Series A\",Cities,4\n").unwrap();
        assert_eq!(graph.weight(&j("Annals, Series A"), &j("Cities")), 4);
        let text = write_edge_list(&graph);
        let reparsed = parse_edge_list(&text).unwrap();
        assert_eq!(reparsed, graph);
    }

    #[test]
    fn edge_list_round_trip_is_identity() {
        let graph = parse_edge_list(crate::fixtures::TABLE1_EDGES).unwrap();
        let reparsed = parse_edge_list(&write_edge_list(&graph)).unwrap();
        assert_eq!(reparsed, graph);
    }

    #[test]
    fn parses_metadata_record() {
        let map = parse_metadata("Environ Plann B,506,1763,0.495,SSCI\n").unwrap();
        let meta = &map[&j("Environ Plann B")];
        assert_eq!(meta.total_cited, 506);
        assert_eq!(meta.total_citing, 1763);
        assert_eq!(meta.impact_factor, Some(0.495));
        assert_eq!(meta.source_index, SourceIndex::Ssci);
    }

    #[test]
    fn impact_factor_is_optional() {
        let map = parse_metadata("J Res,10,20\nOther J,5,6,,SCI\n").unwrap();
        assert_eq!(map[&j("J Res")].impact_factor, None);
        assert_eq!(map[&j("J Res")].source_index, SourceIndex::Ssci);
        assert_eq!(map[&j("Other J")].impact_factor, None);
        assert_eq!(map[&j("Other J")].source_index, SourceIndex::Sci);
    }

    #[test]
    fn table4_impact_factors_parse() {
        let map = parse_metadata(crate::fixtures::TABLE4_META).unwrap();
        assert_eq!(map[&j("Urban Stud")].impact_factor, Some(1.127));
        assert_eq!(map[&j("Urban Stud")].total_cited, 1681);
        assert_eq!(map.len(), 10);
    }

    #[test]
    fn unknown_source_index_is_rejected() {
        let err = parse_metadata("J Res,10,20,0.5,AHCI\n").unwrap_err();
        assert!(matches!(err, IngestError::UnknownSourceIndex { line: 1, .. }));
    }

    #[test]
    fn duplicate_journal_is_rejected() {
        let err = parse_metadata("J Res,10,20\nJ Res,10,20\n").unwrap_err();
        assert!(matches!(err, IngestError::DuplicateJournal { line: 2, .. }));
    }

    #[test]
    fn negative_totals_are_value_errors() {
        let err = parse_metadata("J Res,-1,20\n").unwrap_err();
        assert!(matches!(err, IngestError::InvalidTotal { line: 1, .. }));
    }

    #[test]
    fn merge_with_empty_is_identity() {
        let graph = parse_edge_list(crate::fixtures::TABLE1_EDGES).unwrap();
        let (merged, warnings) = merge_graphs(&graph, &CitationGraph::new());
        assert_eq!(merged, graph);
        assert!(warnings.is_empty());
    }

    #[test]
    fn merge_is_idempotent() {
        let mut graph = parse_edge_list(crate::fixtures::TABLE1_EDGES).unwrap();
        graph.attach_metadata(parse_metadata(crate::fixtures::TABLE4_META).unwrap());
        let (merged, warnings) = merge_graphs(&graph, &graph);
        assert_eq!(merged, graph);
        assert!(warnings.is_empty());
    }

    #[test]
    fn merge_of_disjoint_graphs_is_union() {
        let a = parse_edge_list("A,B,1\n").unwrap();
        let b = parse_edge_list("C,D,2\nD,C,3\n").unwrap();
        let (merged, warnings) = merge_graphs(&a, &b);
        assert_eq!(merged.edge_count(), 3);
        assert!(warnings.is_empty());
    }

    #[test]
    fn merge_keeps_single_copy_of_equal_edge() {
        // dedup oracle: concatenating the edge lists and grouping by pair
        // yields one distinct count, so the merge must keep exactly that
        let a = parse_edge_list("A,B,13\n").unwrap();
        let b = parse_edge_list("A,B,13\n").unwrap();
        let (merged, warnings) = merge_graphs(&a, &b);
        assert_eq!(merged.weight(&j("A"), &j("B")), 13);
        assert_eq!(merged.edge_count(), 1);
        assert!(warnings.is_empty());
    }

    #[test]
    fn merge_conflict_keeps_max_and_warns() {
        let a = parse_edge_list("A,B,13\n").unwrap();
        let b = parse_edge_list("A,B,20\n").unwrap();
        let (merged, warnings) = merge_graphs(&a, &b);
        assert_eq!(merged.weight(&j("A"), &j("B")), 20);
        assert_eq!(warnings.len(), 1);
        assert!(matches!(
            warnings[0],
            MergeWarning::EdgeConflict { kept: 20, dropped: 13, .. }
        ));
    }

    #[test]
    fn merge_meta_source_index_prefers_first_argument() {
        let mut a = CitationGraph::new();
        a.attach_metadata(parse_metadata("J Res,10,20,0.5,SSCI\n").unwrap());
        let mut b = CitationGraph::new();
        b.attach_metadata(parse_metadata("J Res,10,20,0.5,SCI\n").unwrap());
        let (merged, warnings) = merge_graphs(&a, &b);
        assert_eq!(merged.meta(&j("J Res")).source_index, SourceIndex::Ssci);
        assert!(warnings.is_empty());
    }

    #[test]
    fn declared_total_below_graph_sum_is_invalid() {
        let mut graph = parse_edge_list("A,B,10\n").unwrap();
        graph.attach_metadata(parse_metadata("B,3,0\n").unwrap());
        let err = graph.validate_totals().unwrap_err();
        assert!(matches!(
            err,
            IngestError::TotalBelowGraphSum { field: "total_cited", declared: 3, in_graph: 10, .. }
        ));
    }

    #[test]
    fn zero_totals_mean_unknown_and_pass_validation() {
        let mut graph = parse_edge_list("A,B,10\n").unwrap();
        graph.attach_metadata(parse_metadata("B,0,0\n").unwrap());
        graph.validate_totals().unwrap();
    }
}
