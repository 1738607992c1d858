use omlkit::Oml;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Nodes in index order, then cover edges in index order. The pair
/// `{p, p^⊥}` shares one color from the `set312` scheme.
pub fn render(l: &Oml) -> String {
    let mut pair_of = vec![usize::MAX; l.len()];
    let mut next = 0;
    for p in l.elements() {
        if pair_of[p.0] == usize::MAX {
            pair_of[p.0] = next;
            pair_of[l.ortho(p).0] = next;
            next += 1;
        }
    }
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n  node [shape=box, style=filled, colorscheme=set312];\n", quote(l.name()));
    for p in l.elements() {
        out.push_str(&format!(
            "  n{} [label={}, fillcolor={}, ortho=n{}];\n",
            p.0,
            quote(l.label(p)),
            pair_of[p.0] % 12 + 1,
            l.ortho(p).0
        ));
    }
    for (a, b) in l.covers() {
        out.push_str(&format!("  n{} -> n{};\n", a.0, b.0));
    }
    out.push_str("}\n");
    out
}
