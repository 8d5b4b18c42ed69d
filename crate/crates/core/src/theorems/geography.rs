//! Which (crossing number, signature) pairs occur, for non-split links and
//! for split sums.

use super::identify::{crossing_number_3braid, link_report, CrossingStatus};
use super::TheoremError;
use crate::twobridge::{alternating_crossing_number, geography_realizer, Realization, Witness};

/// Cells `(c, d)` with `d ≤ 0` and `|d| < c` that no non-split link realizes.
pub const EXCEPTIONS: [(i64, i64); 6] = [(1, 0), (2, 0), (3, 0), (3, -1), (3, 1), (5, 0)];

pub const MAX_GEOGRAPHY_CROSSINGS: i64 = 12;

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct GeographyRow {
    pub c: i64,
    pub d: i64,
    pub realizable: bool,
    pub witness: Option<String>,
    /// The witness's crossing number and signature were recomputed and match.
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct GeographyTable {
    pub max_c: i64,
    /// Non-split links, `|d| ≤ c − 1`.
    pub rows: Vec<GeographyRow>,
    /// Arbitrary links, `|d| ≤ c`, allowing split sums and trivial components.
    pub split_sums: Vec<GeographyRow>,
}

impl GeographyTable {
    pub fn row(&self, c: i64, d: i64) -> Option<&GeographyRow> {
        self.rows.iter().find(|r| r.c == c && r.d == d)
    }
}

fn recompute(r: &Realization) -> Result<(i64, bool), TheoremError> {
    let (cr, exact) = match &r.witness {
        Witness::TwoBridge { diagram } => {
            let cr = alternating_crossing_number(diagram).map_err(|e| TheoremError::InvalidParameter(e.to_string()))?;
            (cr, true)
        }
        Witness::Braid { word } if word.strands() == 3 => {
            let t = crossing_number_3braid(word)?;
            (t.crossing_number.value, t.crossing_number.status == CrossingStatus::Exact)
        }
        Witness::Braid { word } => {
            let cr = link_report(word)?.crossing_number.expect("2-braids have a crossing number");
            (cr.value, cr.status == CrossingStatus::Exact)
        }
    };
    Ok((cr, exact))
}

fn nonsplit_row(c: i64, d: i64) -> Result<GeographyRow, TheoremError> {
    let Some(r) = geography_realizer(c, d) else {
        return Ok(GeographyRow { c, d, realizable: false, witness: None, verified: true });
    };
    let (cr, exact) = recompute(&r)?;
    let sigma = r.signature().map_err(TheoremError::InvalidParameter)?;
    Ok(GeographyRow { c, d, realizable: true, witness: Some(r.name), verified: exact && cr == c && sigma == d })
}

/// Ways to write `(c, d)` as a sum of at least two non-split cells, each
/// with crossing number at least 2, listed in non-decreasing order.
pub fn split_sum_fillers(c: i64, d: i64) -> Vec<Vec<(i64, i64)>> {
    fn extend(c: i64, d: i64, min: (i64, i64), parts: &mut Vec<(i64, i64)>, out: &mut Vec<Vec<(i64, i64)>>) {
        if c == 0 {
            if d == 0 && parts.len() >= 2 {
                out.push(parts.clone());
            }
            return;
        }
        for c1 in min.0.max(2)..=c {
            let lo = if c1 == min.0 { min.1 } else { 1 - c1 };
            for d1 in lo..c1 {
                if geography_realizer(c1, d1).is_none() {
                    continue;
                }
                parts.push((c1, d1));
                extend(c - c1, d - d1, (c1, d1), parts, out);
                parts.pop();
            }
        }
    }
    let mut out = Vec::new();
    if c >= 0 {
        extend(c, d, (2, 1 - 2), &mut Vec::new(), &mut out);
    }
    out
}

fn split_row(c: i64, d: i64, nonsplit: Option<&GeographyRow>) -> GeographyRow {
    if c == 0 && d == 0 {
        return GeographyRow { c, d, realizable: true, witness: Some("U_n".into()), verified: true };
    }
    if let Some(row) = nonsplit.filter(|r| r.realizable) {
        return row.clone();
    }
    match split_sum_fillers(c, d).first() {
        Some(parts) => {
            let names: Vec<String> = parts
                .iter()
                .map(|&(c1, d1)| geography_realizer(c1, d1).expect("fillers are realizable").name)
                .collect();
            GeographyRow { c, d, realizable: true, witness: Some(names.join(" ⊔ ")), verified: true }
        }
        None => GeographyRow { c, d, realizable: false, witness: None, verified: true },
    }
}

/// Every cell with `1 ≤ c ≤ max_c`, its witness and whether the witness was
/// re-verified; plus the same cone for split links.
pub fn geography_table(max_c: i64) -> Result<GeographyTable, TheoremError> {
    if !(0..=MAX_GEOGRAPHY_CROSSINGS).contains(&max_c) {
        return Err(TheoremError::InvalidParameter(format!(
            "geography table goes up to c = {MAX_GEOGRAPHY_CROSSINGS}, got {max_c}"
        )));
    }
    let mut rows = Vec::new();
    for c in 1..=max_c {
        for d in 1 - c..=c - 1 {
            rows.push(nonsplit_row(c, d)?);
        }
    }
    let mut split_sums = Vec::new();
    for c in 0..=max_c {
        for d in -c..=c {
            let nonsplit = rows.iter().find(|r| r.c == c && r.d == d);
            split_sums.push(split_row(c, d, nonsplit));
        }
    }
    Ok(GeographyTable { max_c, rows, split_sums })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// `c,d,realizable,witness` for the non-split rows.
pub fn geography_csv(table: &GeographyTable) -> String {
    let mut out = String::from("c,d,realizable,witness\n");
    for r in &table.rows {
        let witness = r.witness.as_deref().map(csv_field).unwrap_or_default();
        out.push_str(&format!("{},{},{},{}\n", r.c, r.d, r.realizable, witness));
    }
    out
}
