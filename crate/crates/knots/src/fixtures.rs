//! Named small-knot fixtures shipped with the crate, plus optional ingestion
//! of external DT-code tables for larger knots.

use crate::codes::{parse_diagram, Format, Presentation};
use crate::error::KnotError;
use crate::planar::PlanarDiagram;

const FIXTURE_TEXT: &str = include_str!("../fixtures/knots.txt");

pub struct Fixture {
    pub name: String,
    pub presentation: Presentation,
}

/// All shipped fixtures, in file order.
pub fn fixtures() -> Vec<Fixture> {
    parse_table(FIXTURE_TEXT).expect("shipped fixture file is valid")
}

fn parse_table(text: &str) -> Result<Vec<Fixture>, KnotError> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.splitn(3, char::is_whitespace);
        let name = parts.next().unwrap().to_string();
        let format: Format = parts
            .next()
            .ok_or_else(|| KnotError::invalid(format!("fixture '{name}': missing format")))?
            .parse()?;
        let body = parts
            .next()
            .ok_or_else(|| KnotError::invalid(format!("fixture '{name}': missing presentation")))?;
        out.push(Fixture { name, presentation: parse_diagram(format, body)? });
    }
    Ok(out)
}

/// Diagram of a named fixture; a leading `!` mirrors it.
pub fn diagram(name: &str) -> Result<PlanarDiagram, KnotError> {
    let (mirror, base) = match name.strip_prefix('!') {
        Some(rest) => (true, rest),
        None => (false, name),
    };
    let fx = fixtures();
    let f = fx
        .iter()
        .find(|f| f.name == base)
        .ok_or_else(|| KnotError::invalid(format!("unknown fixture '{base}'")))?;
    let d = f.presentation.diagram()?;
    Ok(if mirror { d.mirror() } else { d })
}

/// Parse an external DT table: `name: dt values` per line, `#` comments.
/// Used for knots whose codes are not shipped with the crate.
pub fn parse_dt_table(text: &str) -> Result<Vec<(String, PlanarDiagram)>, KnotError> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (name, rest) = line
            .split_once(':')
            .ok_or_else(|| KnotError::invalid("DT table line must be 'name: values'"))?;
        let p = parse_diagram(Format::Dt, rest)?;
        out.push((name.trim().to_string(), p.diagram()?));
    }
    Ok(out)
}

/// Load the optional DT table from disk, looking upward from the current
/// directory for `tables/dt-codes.txt`. Returns `None` when absent.
pub fn load_dt_table() -> Option<Vec<(String, PlanarDiagram)>> {
    let mut dir = std::env::current_dir().ok()?;
    loop {
        let candidate = dir.join("tables/dt-codes.txt");
        if candidate.is_file() {
            let text = std::fs::read_to_string(candidate).ok()?;
            return parse_dt_table(&text).ok();
        }
        if !dir.pop() {
            return None;
        }
    }
}

/// Diagram of a table knot by name; `!` prefix mirrors. `None` when no table
/// file is present or the name is missing from it.
pub fn table_diagram(name: &str) -> Option<PlanarDiagram> {
    let (mirror, base) = match name.strip_prefix('!') {
        Some(rest) => (true, rest),
        None => (false, name),
    };
    let table = load_dt_table()?;
    let d = table.iter().find(|(n, _)| n == base)?.1.clone();
    Some(if mirror { d.mirror() } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::bracket::jones;
    use crate::vassiliev::{v2_gauss, v3_gauss};
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{Signed, ToPrimitive};

    fn invariants(name: &str) -> (usize, i64, i64, i64) {
        let d = diagram(name).unwrap();
        let g = d.to_gauss().unwrap();
        let v = jones(&d).unwrap();
        let det = v
            .eval(&BigRational::from(BigInt::from(-1)))
            .abs()
            .to_integer()
            .to_i64()
            .unwrap();
        (d.crossing_count(), v2_gauss(&g).unwrap(), v3_gauss(&g).unwrap(), det)
    }

    #[test]
    fn fixture_inventory() {
        let fx = fixtures();
        assert!(fx.len() >= 20);
        for f in &fx {
            let d = f.presentation.diagram().unwrap();
            assert!(d.crossing_count() <= 8, "{} too large", f.name);
            assert_eq!(d.component_count(), 1, "{} is not a knot", f.name);
        }
    }

    #[test]
    fn table_values() {
        // (name, v2, v3, determinant) with v2 the Conway z^2 coefficient
        let expected: &[(&str, i64, i64, i64)] = &[
            ("3_1", 1, 4, 3),
            ("4_1", -1, 0, 5),
            ("5_1", 3, 20, 5),
            ("5_2", 2, -12, 7),
            ("6_1", -2, 4, 9),
            ("6_2", -1, 4, 11),
            ("6_3", 1, 0, 13),
            ("7_1", 6, 56, 7),
            ("7_2", 3, -24, 11),
            ("7_3", 5, -44, 13),
            ("7_4", 4, -32, 15),
            ("7_5", 4, 32, 17),
            ("7_6", 1, 8, 19),
            ("7_7", -1, 4, 21),
            ("8_1", -3, 12, 13),
            ("8_3", -4, 0, 17),
            ("8_4", -3, -4, 19),
            ("8_19", 5, 40, 3),
            ("8_20", 2, -8, 9),
            ("granny", 2, 8, 9),
            ("square", 2, 0, 9),
        ];
        for &(name, v2, v3, det) in expected {
            let (_, got_v2, got_v3, got_det) = invariants(name);
            assert_eq!((got_v2, got_v3, got_det), (v2, v3, det), "{name}");
        }
    }

    #[test]
    fn mirror_prefix() {
        let (_, v2, v3, det) = invariants("!5_2");
        assert_eq!((v2, v3, det), (2, 12, 7));
        let d = diagram("!5_2").unwrap();
        let v = jones(&d).unwrap();
        assert_eq!(v.min_deg().unwrap(), BigRational::from(BigInt::from(1)));
    }

    #[test]
    fn dt_table_parsing() {
        let table = parse_dt_table("# comment\nk4: 4 6 8 2\n").unwrap();
        assert_eq!(table.len(), 1);
        assert_eq!(table[0].0, "k4");
        assert_eq!(table[0].1.crossing_count(), 4);
    }
}
