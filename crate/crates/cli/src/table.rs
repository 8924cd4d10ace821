//! Tabular results rendered as CSV with significant-digit float formatting.

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Empty,
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<i64> for Cell {
    fn from(x: i64) -> Self {
        Cell::Int(x)
    }
}

impl From<&str> for Cell {
    fn from(x: &str) -> Self {
        Cell::Text(x.to_string())
    }
}

impl From<String> for Cell {
    fn from(x: String) -> Self {
        Cell::Text(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Empty, Cell::Num)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.header.len(), "row width must match header");
        self.rows.push(row);
    }

    pub fn header(&self) -> &[String] {
        &self.header
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Column index by header name.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }

    pub fn render(&self, precision: usize) -> Result<String, CliError> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.header).map_err(csv_error)?;
        for row in &self.rows {
            let cells = row
                .iter()
                .map(|c| render_cell(c, precision))
                .collect::<Result<Vec<_>, _>>()?;
            w.write_record(&cells).map_err(csv_error)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Numeric(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
    }
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::Numeric(format!("csv: {e}"))
}

fn render_cell(c: &Cell, precision: usize) -> Result<String, CliError> {
    Ok(match c {
        Cell::Num(x) => format_float(*x, precision)?,
        Cell::Int(n) => n.to_string(),
        Cell::Text(s) => s.clone(),
        Cell::Empty => String::new(),
    })
}

/// Rounds to `precision` significant digits and prints the shortest decimal
/// that reads back to the rounded value.
pub fn format_float(x: f64, precision: usize) -> Result<String, CliError> {
    if !x.is_finite() {
        return Err(CliError::Numeric(format!("non-finite value {x} in output")));
    }
    let rounded: f64 = format!("{:.*e}", precision.saturating_sub(1), x)
        .parse()
        .expect("scientific notation parses");
    let rounded = if rounded == 0.0 { 0.0 } else { rounded };
    Ok(format!("{rounded:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format() {
        assert_eq!(format_float(std::f64::consts::PI, 6).unwrap(), "3.14159");
        assert_eq!(format_float(-0.0, 12).unwrap(), "0.0");
        assert_eq!(format_float(1.0, 12).unwrap(), "1.0");
        assert_eq!(format_float(1.0e-20 / 3.0, 6).unwrap(), "3.33333e-21");
        assert_eq!(format_float(0.1 + 0.2, 17).unwrap(), "0.30000000000000004");
        assert_eq!(format_float(0.1 + 0.2, 12).unwrap(), "0.3");
        assert!(format_float(f64::NAN, 12).is_err());
    }

    #[test]
    fn render_rows() {
        let mut t = Table::new(&["a", "b", "c"]);
        t.push(vec![1.5.into(), Cell::Int(-2), Cell::Empty]);
        t.push(vec!["x".into(), 2.0f64.sqrt().into(), None.into()]);
        assert_eq!(t.render(6).unwrap(), "a,b,c\n1.5,-2,\nx,1.41421,\n");
        assert_eq!(t.column("b"), Some(1));
    }
}
