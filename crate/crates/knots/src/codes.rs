//! Text formats for knot presentations: PD, DT, Gauss code, braid words and
//! Conway twist vectors. One presentation per line; `#` starts a comment.

use crate::build::rational_closure;
use crate::error::KnotError;
use crate::gauss::{Arrow, GaussDiagram};
use crate::planar::{braid_closure, Crossing, PlanarDiagram};

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct BraidWord {
    pub n: usize,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self, KnotError> {
        if n == 0 {
            return Err(KnotError::invalid("braid needs at least one strand"));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= n {
                return Err(KnotError::invalid(format!("braid letter {l} out of range for n={n}")));
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    pub fn closure(&self) -> Result<PlanarDiagram, KnotError> {
        braid_closure(self.n, &self.letters)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConwayTangle(pub Vec<i64>);

impl ConwayTangle {
    pub fn closure(&self) -> Result<PlanarDiagram, KnotError> {
        rational_closure(&self.0)
    }
}

#[derive(Clone, Debug)]
pub enum Presentation {
    Planar(PlanarDiagram),
    Gauss(GaussDiagram),
    Braid(BraidWord),
    Conway(ConwayTangle),
}

impl Presentation {
    /// A planar diagram for any presentation (Gauss codes must be realizable).
    pub fn diagram(&self) -> Result<PlanarDiagram, KnotError> {
        match self {
            Presentation::Planar(d) => Ok(d.clone()),
            Presentation::Gauss(g) => PlanarDiagram::from_gauss(g),
            Presentation::Braid(b) => b.closure(),
            Presentation::Conway(t) => t.closure(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Pd,
    Dt,
    Gauss,
    Braid,
    Conway,
}

impl std::str::FromStr for Format {
    type Err = KnotError;
    fn from_str(s: &str) -> Result<Self, KnotError> {
        match s.to_ascii_lowercase().as_str() {
            "pd" => Ok(Format::Pd),
            "dt" => Ok(Format::Dt),
            "gauss" => Ok(Format::Gauss),
            "braid" => Ok(Format::Braid),
            "conway" => Ok(Format::Conway),
            other => Err(KnotError::invalid(format!("unknown format '{other}'"))),
        }
    }
}

fn strip_comments(text: &str) -> String {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn parse_diagram(format: Format, text: &str) -> Result<Presentation, KnotError> {
    let clean = strip_comments(text);
    let tokens: Vec<&str> = clean.split_whitespace().collect();
    match format {
        Format::Pd => parse_pd(&tokens).map(Presentation::Planar),
        Format::Dt => parse_dt(&tokens).map(Presentation::Planar),
        Format::Gauss => parse_gauss(&tokens).map(Presentation::Gauss),
        Format::Braid => parse_braid(&tokens).map(Presentation::Braid),
        Format::Conway => parse_conway(&tokens).map(Presentation::Conway),
    }
}

fn int_token<T: std::str::FromStr>(tok: &str, pos: usize) -> Result<T, KnotError> {
    tok.parse()
        .map_err(|_| KnotError::parse(pos, format!("expected an integer, found '{tok}'")))
}

fn parse_pd(tokens: &[&str]) -> Result<PlanarDiagram, KnotError> {
    if tokens.is_empty() {
        return Err(KnotError::parse(0, "empty PD input"));
    }
    let mut raw: Vec<[usize; 4]> = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        if !tokens[i].eq_ignore_ascii_case("x") {
            return Err(KnotError::parse(i, format!("expected 'X', found '{}'", tokens[i])));
        }
        if i + 4 >= tokens.len() {
            return Err(KnotError::parse(i, "crossing needs four arc labels"));
        }
        let mut arcs = [0usize; 4];
        for k in 0..4 {
            let v: usize = int_token(tokens[i + 1 + k], i + 1 + k)?;
            if v == 0 {
                return Err(KnotError::parse(i + 1 + k, "arc labels are 1-based"));
            }
            arcs[k] = v - 1;
        }
        raw.push(arcs);
        i += 5;
    }
    let n_arcs = 2 * raw.len();
    for x in &raw {
        for &a in x {
            if a >= n_arcs {
                return Err(KnotError::invalid(format!(
                    "arc label {} exceeds 2x crossing count",
                    a + 1
                )));
            }
        }
    }
    let mut count = vec![0usize; n_arcs];
    for x in &raw {
        for &a in x {
            count[a] += 1;
        }
    }
    if count.iter().any(|&c| c != 2) {
        return Err(KnotError::invalid("every arc label must appear exactly twice"));
    }
    // Slots 0 and 2 are under-in/under-out; the over strand direction per
    // crossing (slot 3 in, or slot 1 in) is found by backtracking so that
    // every arc is once incoming and once outgoing.
    let mut in_used = vec![false; n_arcs];
    let mut out_used = vec![false; n_arcs];
    for x in &raw {
        if in_used[x[0]] || out_used[x[2]] {
            return Err(KnotError::invalid("under-strand orientations conflict"));
        }
        in_used[x[0]] = true;
        out_used[x[2]] = true;
    }
    let mut signs = vec![0i8; raw.len()];
    if !assign_over(&raw, 0, &mut in_used, &mut out_used, &mut signs) {
        return Err(KnotError::invalid("no consistent over-strand orientation exists"));
    }
    let crossings = raw
        .iter()
        .zip(&signs)
        .map(|(x, &s)| Crossing { sign: s, arcs: *x })
        .collect();
    PlanarDiagram::new(crossings, 0)
}

fn assign_over(
    raw: &[[usize; 4]],
    ci: usize,
    in_used: &mut [bool],
    out_used: &mut [bool],
    signs: &mut [i8],
) -> bool {
    if ci == raw.len() {
        return true;
    }
    let x = &raw[ci];
    // sign +1: over-in at slot 3; sign -1: over-in at slot 1
    for (sign, oin, oout) in [(1i8, x[3], x[1]), (-1, x[1], x[3])] {
        if !in_used[oin] && !out_used[oout] {
            in_used[oin] = true;
            out_used[oout] = true;
            signs[ci] = sign;
            if assign_over(raw, ci + 1, in_used, out_used, signs) {
                return true;
            }
            in_used[oin] = false;
            out_used[oout] = false;
        }
    }
    false
}

fn parse_dt(tokens: &[&str]) -> Result<PlanarDiagram, KnotError> {
    if tokens.is_empty() {
        return Err(KnotError::parse(0, "empty DT input"));
    }
    let mut evens: Vec<i64> = Vec::with_capacity(tokens.len());
    for (i, t) in tokens.iter().enumerate() {
        evens.push(int_token(t, i)?);
    }
    let c = evens.len();
    let mut seen = vec![false; c];
    for &e in &evens {
        let a = e.unsigned_abs();
        if e == 0 || a % 2 != 0 || a > 2 * c as u64 {
            return Err(KnotError::invalid(
                "DT entries must be nonzero even integers up to twice the crossing number",
            ));
        }
        let idx = (a / 2 - 1) as usize;
        if seen[idx] {
            return Err(KnotError::invalid("DT entries must be distinct in absolute value"));
        }
        seen[idx] = true;
    }
    // crossing i is visited at 1-based positions (2i+1, |e_i|); positive
    // entry: the odd visit goes under.
    let arrows_for = |signs: &[i8]| -> Vec<Arrow> {
        evens
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                let odd = 2 * i; // 0-based
                let even = e.unsigned_abs() as usize - 1;
                let (under, over) = if e > 0 { (odd, even) } else { (even, odd) };
                Arrow { under, over, writhe: signs[i] }
            })
            .collect()
    };
    // The projection determines crossing signs only up to mirror image;
    // search sign assignments and keep the lexicographically first (+1 < -1)
    // realizable one.
    let mut signs = vec![1i8; c];
    loop {
        let g = GaussDiagram::new(arrows_for(&signs))?;
        if g.is_realizable() {
            return PlanarDiagram::from_gauss(&g);
        }
        // next assignment
        let mut k = c;
        while k > 0 && signs[k - 1] == -1 {
            signs[k - 1] = 1;
            k -= 1;
        }
        if k == 0 {
            return Err(KnotError::invalid("DT code is not realizable"));
        }
        signs[k - 1] = -1;
    }
}

fn parse_gauss(tokens: &[&str]) -> Result<GaussDiagram, KnotError> {
    if tokens.is_empty() {
        return Err(KnotError::parse(0, "empty Gauss code"));
    }
    struct Passage {
        over: bool,
        label: usize,
        sign: i8,
    }
    let mut passes = Vec::with_capacity(tokens.len());
    for (i, t) in tokens.iter().enumerate() {
        let bytes = t.as_bytes();
        if bytes.len() < 3 {
            return Err(KnotError::parse(i, format!("malformed Gauss token '{t}'")));
        }
        let over = match bytes[0].to_ascii_uppercase() {
            b'O' => true,
            b'U' => false,
            _ => return Err(KnotError::parse(i, format!("token must start with O or U: '{t}'"))),
        };
        let sign = match bytes[bytes.len() - 1] {
            b'+' => 1i8,
            b'-' => -1,
            _ => return Err(KnotError::parse(i, format!("token must end with + or -: '{t}'"))),
        };
        let label: usize = int_token(&t[1..t.len() - 1], i)?;
        passes.push(Passage { over, label, sign });
    }
    if passes.len() % 2 != 0 {
        return Err(KnotError::invalid("Gauss code must have an even number of tokens"));
    }
    let c = passes.len() / 2;
    let mut under = vec![usize::MAX; c + 1];
    let mut over = vec![usize::MAX; c + 1];
    let mut sign = vec![0i8; c + 1];
    for (pos, p) in passes.iter().enumerate() {
        if p.label == 0 || p.label > c {
            return Err(KnotError::invalid(format!(
                "crossing label {} out of range 1..{c}",
                p.label
            )));
        }
        let slot = if p.over { &mut over } else { &mut under };
        if slot[p.label] != usize::MAX {
            return Err(KnotError::invalid(format!("crossing {} repeated", p.label)));
        }
        slot[p.label] = pos;
        if sign[p.label] == 0 {
            sign[p.label] = p.sign;
        } else if sign[p.label] != p.sign {
            return Err(KnotError::invalid(format!(
                "crossing {} has inconsistent signs",
                p.label
            )));
        }
    }
    let arrows = (1..=c)
        .map(|i| {
            if under[i] == usize::MAX || over[i] == usize::MAX {
                return Err(KnotError::invalid(format!(
                    "crossing {i} needs exactly one O and one U token"
                )));
            }
            Ok(Arrow { under: under[i], over: over[i], writhe: sign[i] })
        })
        .collect::<Result<Vec<_>, _>>()?;
    GaussDiagram::new(arrows)
}

fn parse_braid(tokens: &[&str]) -> Result<BraidWord, KnotError> {
    if tokens.is_empty() {
        return Err(KnotError::parse(0, "empty braid input"));
    }
    let head = tokens[0]
        .strip_suffix(':')
        .ok_or_else(|| KnotError::parse(0, "braid input must start with 'n:'"))?;
    let n: usize = int_token(head, 0)?;
    let letters = tokens[1..]
        .iter()
        .enumerate()
        .map(|(i, t)| int_token::<i32>(t, i + 1))
        .collect::<Result<Vec<_>, _>>()?;
    BraidWord::new(n, letters)
}

fn parse_conway(tokens: &[&str]) -> Result<ConwayTangle, KnotError> {
    if tokens.is_empty() {
        return Err(KnotError::parse(0, "empty Conway input"));
    }
    let rest = if tokens[0].eq_ignore_ascii_case("c:") { &tokens[1..] } else { tokens };
    let entries = rest
        .iter()
        .enumerate()
        .map(|(i, t)| int_token::<i64>(t, i))
        .collect::<Result<Vec<_>, _>>()?;
    if entries.is_empty() {
        return Err(KnotError::invalid("Conway twist vector must be nonempty"));
    }
    Ok(ConwayTangle(entries))
}

/// Arc labels 1..2c along the orientation, component by component.
fn orientation_labels(d: &PlanarDiagram) -> Vec<usize> {
    let mut label = vec![0usize; d.arc_count()];
    let mut next = 1;
    for comp in d.components() {
        for &a in &comp {
            label[a] = next;
            next += 1;
        }
    }
    label
}

pub fn to_pd_text(d: &PlanarDiagram) -> Result<String, KnotError> {
    if d.extra_circles > 0 {
        return Err(KnotError::precondition("PD text cannot encode crossing-free circles"));
    }
    if d.crossing_count() == 0 {
        return Err(KnotError::precondition("PD text needs at least one crossing"));
    }
    let label = orientation_labels(d);
    let parts: Vec<String> = d
        .crossings()
        .iter()
        .map(|x| {
            format!(
                "X {} {} {} {}",
                label[x.arcs[0]],
                label[x.arcs[1]],
                label[x.arcs[2]],
                label[x.arcs[3]]
            )
        })
        .collect();
    Ok(parts.join(" "))
}

pub fn to_dt_text(d: &PlanarDiagram) -> Result<String, KnotError> {
    let g = d.to_gauss()?;
    to_dt_text_gauss(&g)
}

pub fn to_dt_text_gauss(g: &GaussDiagram) -> Result<String, KnotError> {
    if g.is_empty() {
        return Err(KnotError::precondition("DT text needs at least one crossing"));
    }
    let n = 2 * g.len();
    // position -> (crossing, is_over); crossings have one odd and one even
    // position (1-based) for knot diagrams
    let mut at = vec![(usize::MAX, false); n];
    for (i, a) in g.arrows().iter().enumerate() {
        at[a.under] = (i, false);
        at[a.over] = (i, true);
    }
    let mut out = Vec::with_capacity(g.len());
    for pos in (0..n).step_by(2) {
        let (ci, over_here) = at[pos];
        let a = &g.arrows()[ci];
        let partner = if over_here { a.under } else { a.over };
        if partner % 2 == 0 {
            return Err(KnotError::invalid(
                "diagram does not split crossings into odd/even visits (not a knot)",
            ));
        }
        let value = (partner + 1) as i64;
        out.push(if over_here { -value } else { value }.to_string());
    }
    Ok(out.join(" "))
}

pub fn to_gauss_text(g: &GaussDiagram) -> Result<String, KnotError> {
    if g.is_empty() {
        return Err(KnotError::precondition("Gauss text needs at least one crossing"));
    }
    let n = 2 * g.len();
    let mut toks = vec![String::new(); n];
    for (i, a) in g.arrows().iter().enumerate() {
        let s = if a.writhe > 0 { '+' } else { '-' };
        toks[a.over] = format!("O{}{}", i + 1, s);
        toks[a.under] = format!("U{}{}", i + 1, s);
    }
    Ok(toks.join(" "))
}

pub fn to_braid_text(b: &BraidWord) -> String {
    let mut s = format!("{}:", b.n);
    for l in &b.letters {
        s.push(' ');
        s.push_str(&l.to_string());
    }
    s
}

pub fn to_conway_text(t: &ConwayTangle) -> String {
    let mut s = "C:".to_string();
    for a in &t.0 {
        s.push(' ');
        s.push_str(&a.to_string());
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::bracket::jones;
    use crate::vassiliev::{v2_gauss, v3_gauss};

    #[test]
    fn braid_parse_roundtrip() {
        let p = parse_diagram(Format::Braid, "3: 1 -2 1 -2").unwrap();
        let Presentation::Braid(b) = &p else { panic!() };
        assert_eq!(b.n, 3);
        assert_eq!(b.letters, vec![1, -2, 1, -2]);
        assert_eq!(to_braid_text(b), "3: 1 -2 1 -2");
        assert!(parse_diagram(Format::Braid, "3: 1 3").is_err());
    }

    #[test]
    fn dt_figure_eight() {
        let p = parse_diagram(Format::Dt, "4 6 8 2").unwrap();
        let d = p.diagram().unwrap();
        assert_eq!(d.crossing_count(), 4);
        assert_eq!(d.component_count(), 1);
        let v = jones(&d).unwrap();
        assert!(v.is_self_conjugate());
        let braid = braid_closure(3, &[1, -2, 1, -2]).unwrap();
        let vb = jones(&braid).unwrap();
        assert!(v == vb || v == vb.conjugate());
    }

    #[test]
    fn dt_trefoil() {
        let d = parse_diagram(Format::Dt, "4 6 2").unwrap().diagram().unwrap();
        let g = d.to_gauss().unwrap();
        assert_eq!(v2_gauss(&g).unwrap(), 1);
        assert_eq!(v3_gauss(&g).unwrap().abs(), 4);
    }

    #[test]
    fn dt_rejects_garbage() {
        assert!(parse_diagram(Format::Dt, "3 5").is_err());
        assert!(parse_diagram(Format::Dt, "4 4 2").is_err());
        assert!(parse_diagram(Format::Dt, "0").is_err());
    }

    #[test]
    fn pd_roundtrip_trefoil() {
        let d = braid_closure(2, &[1, 1, 1]).unwrap();
        let text = to_pd_text(&d).unwrap();
        let d2 = parse_diagram(Format::Pd, &text).unwrap().diagram().unwrap();
        assert_eq!(jones(&d).unwrap(), jones(&d2).unwrap());
        assert_eq!(d2.writhe(), 3);
    }

    #[test]
    fn pd_roundtrip_mixed_link() {
        // a 2-component link with mixed signs
        let d = braid_closure(3, &[1, 1, -2]).unwrap();
        let text = to_pd_text(&d).unwrap();
        let d2 = parse_diagram(Format::Pd, &text).unwrap().diagram().unwrap();
        assert_eq!(jones(&d).unwrap(), jones(&d2).unwrap());
    }

    #[test]
    fn gauss_text_roundtrip() {
        let d = braid_closure(3, &[1, -2, 1, -2]).unwrap();
        let g = d.to_gauss().unwrap();
        let text = to_gauss_text(&g).unwrap();
        let p = parse_diagram(Format::Gauss, &text).unwrap();
        let Presentation::Gauss(g2) = p else { panic!() };
        assert_eq!(g.arrows(), g2.arrows());
    }

    #[test]
    fn dt_roundtrip() {
        let d = braid_closure(2, &[1, 1, 1, 1, 1]).unwrap();
        let text = to_dt_text(&d).unwrap();
        let d2 = parse_diagram(Format::Dt, &text).unwrap().diagram().unwrap();
        let (ja, jb) = (jones(&d).unwrap(), jones(&d2).unwrap());
        assert!(ja == jb || ja == jb.conjugate());
    }

    #[test]
    fn conway_parse() {
        let p = parse_diagram(Format::Conway, "C: 2 2").unwrap();
        let Presentation::Conway(t) = &p else { panic!() };
        assert_eq!(t.0, vec![2, 2]);
        let d = p.diagram().unwrap();
        assert_eq!(d.crossing_count(), 4);
        assert!(jones(&d).unwrap().is_self_conjugate());
    }

    #[test]
    fn comments_ignored() {
        let p = parse_diagram(Format::Braid, "# trefoil\n2: 1 1 1 # positive").unwrap();
        let Presentation::Braid(b) = p else { panic!() };
        assert_eq!(b.letters.len(), 3);
    }
}
