//! Solver output in the JSON and CSV shapes the binary prints.

use mlbp_core::{Mode, SolverResult};
use serde::Serialize;

/// Struct field order is the JSON key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResultRecord {
    pub mode: &'static str,
    pub status: &'static str,
    pub labels: Vec<usize>,
    pub size: usize,
    pub nodes_explored: u64,
    pub time_ms: u64,
}

pub const RESULT_CSV_HEADER: &str = "mode,status,objective,labels,time_ms,nodes";

impl ResultRecord {
    pub fn new(mode: Mode, result: &SolverResult) -> Self {
        ResultRecord {
            mode: mode.as_str(),
            status: result.status.as_str(),
            labels: result.labels.iter().collect(),
            size: result.objective,
            nodes_explored: result.nodes_explored,
            time_ms: result.elapsed.as_millis() as u64,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    /// One row matching RESULT_CSV_HEADER; labels are ';'-joined so the
    /// row stays a single CSV field.
    pub fn to_csv_row(&self) -> String {
        let labels = self
            .labels
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(";");
        format!(
            "{},{},{},{},{},{}",
            self.mode, self.status, self.size, labels, self.time_ms, self.nodes_explored
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record() -> ResultRecord {
        ResultRecord {
            mode: "edge",
            status: "optimal",
            labels: vec![0, 2],
            size: 2,
            nodes_explored: 5,
            time_ms: 0,
        }
    }

    #[test]
    fn json_keys_come_out_in_declaration_order() {
        assert_eq!(
            record().to_json(),
            r#"{"mode":"edge","status":"optimal","labels":[0,2],"size":2,"nodes_explored":5,"time_ms":0}"#
        );
    }

    #[test]
    fn csv_row_matches_header() {
        assert_eq!(record().to_csv_row(), "edge,optimal,2,0;2,0,5");
        assert_eq!(RESULT_CSV_HEADER.split(',').count(), 6);
        assert_eq!(record().to_csv_row().split(',').count(), 6);
    }
}
