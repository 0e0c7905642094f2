//! Published sums of Schubert cells generating `H^*(Fl_D(R^N); Q)`, and a
//! validator for them.
//!
//! Rows list cells without signs; a row passes if some sign pattern makes it
//! a cocycle of the stated degree with nonzero rational class. Rows of equal
//! degree must be independent and their number must equal the Betti number.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{classes_independent, rational_class_nonzero};
use crate::osp::{DimVector, OrderedSetPartition};
use crate::poincare::rational_poincare;
use crate::vassiliev::{GradedComplex, SchubertElement};

/// Rows with more cells than this are not sign-searched.
const MAX_SEARCH_CELLS: usize = 16;

const FL3: &[(usize, &str)] = &[(0, "321"), (3, "123")];

const FL4: &[(usize, &str)] = &[(0, "4321"), (3, "2341+4123"), (3, "3214"), (6, "1234")];

// the printed table has "1234" in degree 10; the top cell of Fl(R^5) is 12345
const FL5: &[(usize, &str)] = &[
    (0, "54321"),
    (3, "34521+52341+54123"),
    (7, "14325"),
    (10, "12345"),
];

const FL6: &[(usize, &str)] = &[
    (0, "654321"),
    (3, "456321+634521+652341+654123"),
    (5, "365214"),
    (7, "432561+632145"),
    (8, "345216+523416+541236"),
    (10, "234561+236145+412563+612345"),
    (12, "125436"),
    (15, "123456"),
];

const FL7: &[(usize, &str)] = &[
    (0, "7654321"),
    (3, "5674321+7456321+7634521+7652341+7654123"),
    (7, "5436721+7432561+7632145"),
    (
        10,
        "3456721+3472561+3672145+5236741+5416723+5436127+5632147+7234561+7236145+7412563+7612345",
    ),
    (11, "1476325"),
    (14, "1456327+3416527+5216347+5412367"),
    (18, "1236547"),
    (21, "1234567"),
];

// printed with the opposite reference flag, see `Table::opposite_flag`
const FL333: &[(usize, &str)] = &[
    (0, "789,456,123"),
    (4, "789,236,145"),
    (4, "569,478,123"),
    (8, "349,678,125+369,458,127+389,256,147+589,234,167"),
    (8, "569,238,147+589,234,167"),
    (12, "349,258,167"),
    (15, "167,258,349"),
    (19, "167,234,589"),
    (19, "145,278,369+147,256,389"),
    (23, "123,478,569"),
    (23, "145,236,789"),
    (27, "123,456,789"),
];

const FL234: &[(usize, &str)] = &[
    (0, "89,567,1234"),
    (4, "89,347,1256"),
    (4, "67,589,1234"),
    (8, "89,127,3456"),
    (8, "45,789,1236"),
    (8, "47,569,1238+67,349,1258"),
    (12, "45,369,1278"),
    (12, "23,789,1456"),
    (12, "27,369,1458+67,129,3458"),
    (16, "23,569,1478"),
    (16, "25,349,1678+45,129,3678"),
    (20, "23,149,5678"),
];

// 10 and 11 are written as separate tokens after a space
const FL335: &[(usize, &str)] = &[
    (0, "9 10 11,678,12345"),
    (4, "9 10 11,458,12367"),
    (4, "78 11, 69 10,12345"),
    (8, "9 10 11, 238, 14567"),
    (8, "56 11,89 10,12347"),
    (8, "58 11,67 10,12349+78 11,45 10,12369"),
    (12, "56 11,47 10,12389"),
    (12, "34 11,89 10,12567"),
    (12, "38 11,47 10,12569+78 11,23 10,14569"),
    (16, "34 11,67 10,12589"),
    (16, "36 11,45 10,12789+56 11,23 10,14789"),
    (19, "189,27 10,3456 11"),
    (20, "34 11,25 10,16789"),
    (23, "127,89 10,3456 11+167,29 10,3458 11"),
    (23, "169,25 10,3478 11+189,256,347 10 11"),
    (27, "167,258,349 10 11"),
    (27, "125,69 10,3478 11+145,29 10,3678 11"),
    (27, "149,23 10,5678 11+189,234,567 10 11"),
    (31, "125,678,349 10 11+145,278,369 10 11"),
    (31, "123,49 10,5678 11"),
    (31, "147,238,569 10 11+167,234,589 10 11"),
    (35, "145,236,789 10 11"),
    (35, "123,478,569 10 11"),
    (39, "123,456,789 10 11"),
];

/// Names accepted by [`table`].
pub const TABLE_NAMES: &[&str] = &["fl3", "fl4", "fl5", "fl6", "fl7", "fl333", "fl234", "fl335"];

/// One generator: an unsigned sum of cells in a given degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub degree: usize,
    pub cells: Vec<OrderedSetPartition>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub name: String,
    #[serde(rename = "D")]
    pub dims: DimVector,
    /// The printed cells refer to the opposite reference flag: printed `I`
    /// in degree `k` is the cell `I^∨` in degree `dim - k`. `rows` already
    /// holds the converted cells.
    pub opposite_flag: bool,
    pub rows: Vec<TableRow>,
}

/// Parses a cell in table notation: a bare word for complete flags, or
/// comma-separated blocks where the first token of a block is read digit by
/// digit and later tokens are whole numbers.
pub fn parse_table_cell(s: &str, dims: &DimVector) -> Result<OrderedSetPartition> {
    let s = s.trim();
    if !s.contains(',') {
        return OrderedSetPartition::parse_with(s, dims);
    }
    let blocks = s
        .split(',')
        .map(|b| {
            let mut out = Vec::new();
            for (i, tok) in b.split_whitespace().enumerate() {
                if i == 0 {
                    for ch in tok.chars() {
                        let d = ch
                            .to_digit(10)
                            .ok_or_else(|| Error::Parse(format!("bad entry {:?} in {:?}", tok, s)))?;
                        out.push(d as usize);
                    }
                } else {
                    out.push(
                        tok.parse()
                            .map_err(|_| Error::Parse(format!("bad entry {:?} in {:?}", tok, s)))?,
                    );
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let p = OrderedSetPartition::from_blocks(&blocks)?;
    if p.dims() != *dims {
        return Err(Error::DimensionMismatch(format!("{} is not in OSP({})", s, dims)));
    }
    Ok(p)
}

/// The named table, in the labelling of [`GradedComplex`].
pub fn table(name: &str) -> Result<Table> {
    let t = table_as_printed(name)?;
    if !t.opposite_flag {
        return Ok(t);
    }
    let dim = t.dims.dim();
    let rows = t
        .rows
        .into_iter()
        .map(|r| TableRow {
            degree: dim - r.degree,
            cells: r.cells.iter().map(|p| p.dual()).collect(),
        })
        .collect();
    Ok(Table { rows, ..t })
}

/// The named table with cells read literally, ignoring `opposite_flag`.
pub fn table_as_printed(name: &str) -> Result<Table> {
    let (dims, raw, opposite_flag) = match name {
        "fl3" => (DimVector::complete(3), FL3, false),
        "fl4" => (DimVector::complete(4), FL4, false),
        "fl5" => (DimVector::complete(5), FL5, false),
        "fl6" => (DimVector::complete(6), FL6, false),
        "fl7" => (DimVector::complete(7), FL7, false),
        "fl333" => (DimVector::new(vec![3, 3, 3])?, FL333, true),
        "fl234" => (DimVector::new(vec![2, 3, 4])?, FL234, false),
        "fl335" => (DimVector::new(vec![3, 3, 5])?, FL335, false),
        _ => return Err(Error::UnknownTable(name.to_string())),
    };
    let rows = raw
        .iter()
        .map(|&(degree, sum)| {
            let cells = sum
                .split('+')
                .map(|c| parse_table_cell(c, &dims))
                .collect::<Result<Vec<_>>>()?;
            Ok(TableRow { degree, cells })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Table {
        name: name.to_string(),
        dims,
        opposite_flag,
        rows,
    })
}

/// Outcome for a single row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowReport {
    pub degree: usize,
    pub cells: Vec<String>,
    /// Every cell has codimension `degree`.
    pub degree_ok: bool,
    /// Sign patterns (first sign `+`) making the sum a cocycle.
    pub cocycle_patterns: usize,
    /// The signs used for the class checks.
    pub signs: Option<Vec<i64>>,
    pub nonzero_class: bool,
}

impl RowReport {
    pub fn passed(&self) -> bool {
        self.degree_ok && self.cocycle_patterns > 0 && self.nonzero_class
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub degree: usize,
    pub rows: usize,
    pub betti: usize,
    pub independent: bool,
}

impl DegreeReport {
    pub fn passed(&self) -> bool {
        self.independent && self.rows == self.betti
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub name: String,
    #[serde(rename = "D")]
    pub dims: DimVector,
    pub opposite_flag: bool,
    pub rows: Vec<RowReport>,
    pub degrees: Vec<DegreeReport>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed()) && self.degrees.iter().all(|d| d.passed())
    }

    pub fn render(&self) -> String {
        let mut out = format!("table {} (D = {})\n", self.name, self.dims);
        if self.opposite_flag {
            out.push_str("  cells read against the opposite flag (I -> I^v, k -> dim - k)\n");
        }
        for r in &self.rows {
            let signed = match &r.signs {
                Some(s) => r
                    .cells
                    .iter()
                    .zip(s)
                    .enumerate()
                    .map(|(i, (c, &e))| match (i, e > 0) {
                        (0, true) => c.clone(),
                        (0, false) => format!("-{}", c),
                        (_, true) => format!(" + {}", c),
                        (_, false) => format!(" - {}", c),
                    })
                    .collect::<String>(),
                None => r.cells.join(" + "),
            };
            out.push_str(&format!(
                "  {} deg {:>2}: {}\n",
                if r.passed() { "PASS" } else { "FAIL" },
                r.degree,
                signed
            ));
        }
        for d in &self.degrees {
            out.push_str(&format!(
                "  {} deg {:>2}: {} rows, Betti {}, independent {}\n",
                if d.passed() { "PASS" } else { "FAIL" },
                d.degree,
                d.rows,
                d.betti,
                d.independent
            ));
        }
        out
    }
}

fn signed_sum(cells: &[OrderedSetPartition], signs: &[i64]) -> SchubertElement {
    SchubertElement::from_terms(cells.iter().cloned().zip(signs.iter().copied()))
}

/// All sign patterns with first sign `+` for which the sum is a cocycle.
pub fn cocycle_sign_patterns(c: &GradedComplex, cells: &[OrderedSetPartition]) -> Result<Vec<Vec<i64>>> {
    let t = cells.len();
    if t == 0 || t > MAX_SEARCH_CELLS {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << (t - 1)) {
        let signs: Vec<i64> = (0..t)
            .map(|i| if i > 0 && mask >> (i - 1) & 1 == 1 { -1 } else { 1 })
            .collect();
        if c.apply_d(&signed_sum(cells, &signs))?.is_zero() {
            out.push(signs);
        }
    }
    Ok(out)
}

/// Validates every row of `t` against the complex `c` of the same `D`.
pub fn validate(t: &Table, c: &GradedComplex) -> Result<TableReport> {
    if c.dims() != &t.dims {
        return Err(Error::DimensionMismatch(format!("{} vs {}", c.dims(), t.dims)));
    }
    let dim = t.dims.dim();
    let mut rows = Vec::new();
    let mut classes: BTreeMap<usize, Vec<SchubertElement>> = BTreeMap::new();
    for row in &t.rows {
        let degree_ok = row
            .cells
            .iter()
            .all(|p| dim - p.inversions() == row.degree);
        let patterns = if degree_ok {
            cocycle_sign_patterns(c, &row.cells)?
        } else {
            Vec::new()
        };
        let mut signs = None;
        let mut nonzero = false;
        for p in &patterns {
            if rational_class_nonzero(c, &signed_sum(&row.cells, p))? {
                signs = Some(p.clone());
                nonzero = true;
                break;
            }
        }
        if let Some(s) = &signs {
            classes
                .entry(row.degree)
                .or_default()
                .push(signed_sum(&row.cells, s));
        }
        rows.push(RowReport {
            degree: row.degree,
            cells: row.cells.iter().map(|p| cell_text(p)).collect(),
            degree_ok,
            cocycle_patterns: patterns.len(),
            signs,
            nonzero_class: nonzero,
        });
    }
    let betti = rational_poincare(&t.dims);
    let mut degrees = Vec::new();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for r in &t.rows {
        *counts.entry(r.degree).or_default() += 1;
    }
    for k in 0..=dim {
        let b = betti.coeff(k).max(0) as usize;
        let n = counts.get(&k).copied().unwrap_or(0);
        if b == 0 && n == 0 {
            continue;
        }
        let found = classes.get(&k).map_or(&[][..], |v| v.as_slice());
        let independent = found.len() == n && (n <= 1 || classes_independent(c, found, k)?);
        degrees.push(DegreeReport {
            degree: k,
            rows: n,
            betti: b,
            independent,
        });
    }
    Ok(TableReport {
        name: t.name.clone(),
        dims: t.dims.clone(),
        opposite_flag: t.opposite_flag,
        rows,
        degrees,
    })
}

fn cell_text(p: &OrderedSetPartition) -> String {
    if p.dims().is_complete() && p.n() <= 9 {
        p.compact()
    } else {
        p.to_string()
    }
}

/// Builds the complex and validates the named table.
pub fn validate_named(name: &str) -> Result<TableReport> {
    let t = table(name)?;
    let c = GradedComplex::build_unchecked(&t.dims);
    validate(&t, &c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_cells_with_two_digit_entries() {
        let d = DimVector::new(vec![3, 3, 5]).unwrap();
        let p = parse_table_cell("78 11, 69 10,12345", &d).unwrap();
        assert_eq!(p.blocks(), vec![vec![7, 8, 11], vec![6, 9, 10], vec![1, 2, 3, 4, 5]]);
    }

    #[test]
    fn all_tables_parse() {
        for name in TABLE_NAMES {
            let t = table(name).unwrap();
            assert!(!t.rows.is_empty());
        }
        assert!(table("fl9").is_err());
    }

    #[test]
    fn fl333_literal_reading_has_three_bad_rows() {
        let t = table_as_printed("fl333").unwrap();
        let c = GradedComplex::build_unchecked(&t.dims);
        let r = validate(&t, &c).unwrap();
        let bad: Vec<usize> = r.rows.iter().filter(|x| !x.passed()).map(|x| x.degree).collect();
        assert_eq!(bad, vec![8, 19, 19]);
        assert!(validate(&table("fl333").unwrap(), &c).unwrap().passed());
    }

    #[test]
    fn fl4_table_passes() {
        let r = validate_named("fl4").unwrap();
        assert!(r.passed(), "{}", r.render());
    }
}
