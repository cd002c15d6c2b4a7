//! Text tables and TikZ pictures. Pictures are display-only and never parsed back.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::canonical::CanonicalBasis;
use crate::diagram::{positive_lift, Generator, Matching, ObjectWord, Orientation, Sign, SlicedDiagram};
use crate::morphism::scalar_to_json;
use crate::{QLaurent, Scalar};

/// `c name`, with a unit coefficient omitted and sums parenthesized; an empty
/// `name` stands for the unit.
pub(crate) fn coeff_text(c: &QLaurent, name: &str) -> String {
    if c.is_one() {
        return if name.is_empty() { "1".into() } else { name.into() };
    }
    let c = if c.terms().count() == 1 { c.to_string() } else { format!("({c})") };
    if name.is_empty() {
        c
    } else {
        format!("{c} {name}")
    }
}

fn hom_text(a: &ObjectWord, b: &ObjectWord) -> String {
    let arrows = |w: &ObjectWord| if w.is_empty() { "∅".to_string() } else { w.arrows() };
    format!("Hom({}, {})", arrows(a), arrows(b))
}

/// One row per matching: index, length and strands.
pub fn basis_table(a: &ObjectWord, b: &ObjectWord, basis: &[Matching]) -> String {
    let mut s = format!("{}: {} matchings\n", hom_text(a, b), basis.len());
    if basis.is_empty() {
        return s;
    }
    s.push_str("  #  ℓ  matching\n");
    for (i, m) in basis.iter().enumerate() {
        let _ = writeln!(s, "{i:>3} {:>2}  {m}", m.crossing_number());
    }
    s
}

pub fn basis_json(a: &ObjectWord, b: &ObjectWord, basis: &[Matching]) -> Value {
    let rows: Vec<Value> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| json!({ "index": i, "length": m.crossing_number(), "pairs": m.signed_pairs(), "text": m.to_string() }))
        .collect();
    json!({ "source": a.to_string(), "target": b.to_string(), "dimension": basis.len(), "basis": rows })
}

fn name(i: usize) -> String {
    format!("T{i}")
}

/// `C_Tj = Σ c_ij Ti`, longest terms first.
pub fn element_text(cb: &CanonicalBasis, j: usize) -> String {
    let n = cb.dimension();
    let mut rows: Vec<usize> = (0..n).filter(|&i| !cb.transition[i][j].is_zero()).collect();
    rows.sort_by_key(|&i| (std::cmp::Reverse(cb.order[i].crossing_number()), i));
    let terms: Vec<String> = rows.iter().map(|&i| coeff_text(&cb.transition[i][j], &name(i))).collect();
    format!("C_{} = {}", name(j), terms.join(" + "))
}

pub fn canonical_text(cb: &CanonicalBasis) -> String {
    let n = cb.dimension();
    let mut s = format!("canonical basis of {}: {} elements\n", hom_text(&cb.source, &cb.target), n);
    s.push_str("standard basis\n");
    for (i, m) in cb.order.iter().enumerate() {
        let _ = writeln!(s, "  {:<4} ℓ={}  {m}", name(i), m.crossing_number());
    }
    s.push_str("transition matrix (column j holds C_Tj)\n");
    let cells: Vec<Vec<String>> = (0..n).map(|i| (0..n).map(|j| cb.transition[i][j].to_string()).collect()).collect();
    let width = cells.iter().flatten().map(|c| c.chars().count()).chain((0..n).map(|j| name(j).len())).max().unwrap_or(1);
    let _ = write!(s, "  {:<5}", "");
    for j in 0..n {
        let _ = write!(s, " {:>width$}", name(j));
    }
    s.push('\n');
    for (i, row) in cells.iter().enumerate() {
        let _ = write!(s, "  {:<5}", name(i));
        for c in row {
            let _ = write!(s, " {c:>width$}");
        }
        s.push('\n');
    }
    s.push_str("elements\n");
    for j in 0..n {
        let _ = writeln!(s, "  {}", element_text(cb, j));
    }
    s
}

pub fn canonical_json(cb: &CanonicalBasis) -> Value {
    let n = cb.dimension();
    let transition: Vec<Vec<Value>> =
        (0..n).map(|i| (0..n).map(|j| scalar_to_json(&Scalar::from_qpoly(&cb.transition[i][j]))).collect()).collect();
    let elements: Vec<Value> = (0..n)
        .map(|j| json!({ "label": name(j), "text": element_text(cb, j), "morphism": cb.elements[j].to_json() }))
        .collect();
    let mut v = basis_json(&cb.source, &cb.target, &cb.order);
    v["transition"] = json!(transition);
    v["elements"] = json!(elements);
    v["positive"] = json!(cb.is_positive());
    v
}

/// A `tikzpicture` of a sliced diagram, one unit of height per layer.
pub fn tikz_diagram(d: &SlicedDiagram) -> String {
    let words = d.interfaces();
    let mut s = String::from("\\begin{tikzpicture}[x=0.8cm, y=0.8cm, thick]\n");
    let height = d.layers().len().max(1);
    if d.layers().is_empty() {
        for i in 0..d.bottom().len() {
            let _ = writeln!(s, "  \\draw ({i},0) -- ({i},1);");
        }
    }
    for (y, l) in d.layers().iter().enumerate() {
        let w = &words[y];
        let (y0, y1) = (y as f64, y as f64 + 1.0);
        let o = l.offset;
        let (shift_from, shift): (usize, isize) = match l.gen {
            Generator::Cap(..) => (o + 2, -2),
            Generator::Cup(..) => (o, 2),
            Generator::Cross(..) => (o + 2, 0),
        };
        for i in 0..w.len() {
            if i >= o && i < shift_from && !matches!(l.gen, Generator::Cup(..)) {
                continue;
            }
            let j = if i >= shift_from { (i as isize + shift) as usize } else { i };
            let _ = writeln!(s, "  \\draw ({i},{y0}) .. controls ({i},{}) and ({j},{}) .. ({j},{y1});", y0 + 0.5, y0 + 0.5);
        }
        let (a, b) = (o as f64, o as f64 + 1.0);
        match l.gen {
            Generator::Cap(..) => {
                let _ = writeln!(s, "  \\draw ({a},{y0}) .. controls ({a},{}) and ({b},{}) .. ({b},{y0});", y0 + 0.7, y0 + 0.7);
            }
            Generator::Cup(..) => {
                let _ = writeln!(s, "  \\draw ({a},{y1}) .. controls ({a},{}) and ({b},{}) .. ({b},{y1});", y1 - 0.7, y1 - 0.7);
            }
            Generator::Cross(sign, ol, or) => {
                let rising = format!("({a},{y0}) .. controls ({a},{}) and ({b},{}) .. ({b},{y1})", y0 + 0.5, y0 + 0.5);
                let falling = format!("({b},{y0}) .. controls ({b},{}) and ({a},{}) .. ({a},{y1})", y0 + 0.5, y0 + 0.5);
                let rising_over = (sign == Sign::Pos) == (ol == or);
                let (over, under) = if rising_over { (rising, falling) } else { (falling, rising) };
                let _ = writeln!(s, "  \\draw {under};");
                let _ = writeln!(s, "  \\draw[white, line width=5pt] {over};");
                let _ = writeln!(s, "  \\draw {over};");
            }
        }
    }
    let arrow = |o: Orientation| if o == Orientation::Up { "\\uparrow" } else { "\\downarrow" };
    for (i, o) in d.bottom().iter().enumerate() {
        let _ = writeln!(s, "  \\node[below] at ({i},0) {{${}$}};", arrow(o));
    }
    for (i, o) in d.top().iter().enumerate() {
        let _ = writeln!(s, "  \\node[above] at ({i},{height}) {{${}$}};", arrow(o));
    }
    s.push_str("\\end{tikzpicture}\n");
    s
}

/// Positive lifts of the standard basis next to the canonical elements.
pub fn canonical_tikz(cb: &CanonicalBasis) -> String {
    let mut s = format!("% canonical basis of {}\n", hom_text(&cb.source, &cb.target));
    for (i, m) in cb.order.iter().enumerate() {
        let _ = writeln!(s, "% {} = {m}", name(i));
        let _ = writeln!(s, "$T_{{{i}}} = $");
        s.push_str(&tikz_diagram(&positive_lift(m)));
        s.push('\n');
    }
    for j in 0..cb.dimension() {
        let text = latex_exponents(&element_text(cb, j).replace('T', "T_"));
        let _ = writeln!(s, "${text}$\n");
    }
    s
}

/// `q^-12` becomes `q^{-12}`.
fn latex_exponents(s: &str) -> String {
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == '^' {
            out.push('{');
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() || (d == '-' && out.ends_with('{')) {
                    out.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            out.push('}');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Engine;

    fn w(s: &str) -> ObjectWord {
        s.parse().unwrap()
    }

    #[test]
    fn coefficients() {
        assert_eq!(coeff_text(&QLaurent::one(), "T0"), "T0");
        assert_eq!(coeff_text(&QLaurent::one(), ""), "1");
        assert_eq!(coeff_text(&"q^-1".parse().unwrap(), "T0"), "q^-1 T0");
        assert_eq!(coeff_text(&"q^-1 + q^-3".parse().unwrap(), "T0").chars().next(), Some('('));
    }

    #[test]
    fn rank_two_text() {
        let mut e = Engine::new();
        let cb = e.canonical_basis(&w("uu"), &w("uu")).unwrap();
        let text = canonical_text(&cb);
        assert!(text.starts_with("canonical basis of Hom(↑↑, ↑↑): 2 elements\n"), "{text}");
        assert!(text.contains("C_T1 = T1 + q^-1 T0\n"), "{text}");
        let v = canonical_json(&cb);
        assert_eq!(v["dimension"], 2);
        assert_eq!(v["elements"][1]["text"], "C_T1 = T1 + q^-1 T0");
    }

    #[test]
    fn exponents_are_braced() {
        assert_eq!(latex_exponents("q^-12 T_0 + q^2"), "q^{-12} T_0 + q^{2}");
    }

    #[test]
    fn empty_listing() {
        assert_eq!(basis_table(&w("u"), &w("d"), &[]), "Hom(↑, ↓): 0 matchings\n");
    }

    #[test]
    fn tikz_has_one_gap_per_crossing() {
        let d: SlicedDiagram = "bottom: uud\n0 x+:uu\n1 cap:ud\ntop: u\n".parse().unwrap();
        let pic = tikz_diagram(&d);
        assert_eq!(pic.matches("white").count(), 1);
        assert_eq!(pic.matches("\\uparrow").count(), 3);
        assert!(pic.starts_with("\\begin{tikzpicture}") && pic.ends_with("\\end{tikzpicture}\n"));
    }
}
