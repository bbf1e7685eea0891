use super::KatalanTriple;

/// Text grid of a triple: γ on the diagonal, `#` for roots of Ψ, `.` for
/// other cells above the diagonal, and dots in the top m(a) cells of column
/// a drawn as `*` (on a root) or `o` (off Ψ). When some m(a) ≥ a the counts
/// are listed under the grid as well.
pub fn render_diagram(t: &KatalanTriple) -> String {
    let ell = t.ell();
    let width = t.gamma().iter().map(|g| g.to_string().len()).max().unwrap_or(1).max(1);
    let mut lines = Vec::with_capacity(ell + 1);
    for r in 1..=ell {
        let cells: Vec<String> = (1..=ell)
            .map(|a| {
                let glyph = if a < r {
                    " ".to_string()
                } else if a == r {
                    t.g(r).to_string()
                } else {
                    let dotted = r <= t.m(a);
                    match (t.psi().contains(r, a), dotted) {
                        (true, true) => "*",
                        (true, false) => "#",
                        (false, true) => "o",
                        (false, false) => ".",
                    }
                    .to_string()
                };
                format!("{glyph:>width$}")
            })
            .collect();
        lines.push(cells.join(" ").trim_end().to_string());
    }
    if (1..=ell).any(|a| t.m(a) >= a) {
        let counts: Vec<String> =
            (1..=ell).filter(|&a| t.m(a) > 0).map(|a| format!("{a}:{}", t.m(a))).collect();
        lines.push(format!("m = {}", counts.join(" ")));
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::katalan::RootIdeal;

    #[test]
    fn one_cell() {
        let t = KatalanTriple::new(RootIdeal::empty(1), vec![0], vec![3]).unwrap();
        assert_eq!(render_diagram(&t), "3\n");
    }

    #[test]
    fn seven_roots() {
        let psi = RootIdeal::new(5, vec![2, 4, 5, 6, 6]).unwrap();
        let t = KatalanTriple::new(psi, vec![0, 0, 1, 1, 2], vec![1, 0, 2, 0, 1]).unwrap();
        let want = "1 # * * *\n  0 . # *\n    2 . #\n      0 .\n        1\n";
        assert_eq!(render_diagram(&t), want);
        assert_eq!(render_diagram(&t), render_diagram(&t.clone()));
    }

    #[test]
    fn overflowing_dots_listed() {
        let t = KatalanTriple::new(RootIdeal::empty(2), vec![1, 0], vec![0, 0]).unwrap();
        assert_eq!(render_diagram(&t), "0 .\n  0\nm = 1:1\n");
    }
}
