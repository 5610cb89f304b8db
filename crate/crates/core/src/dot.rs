//! Minimal Graphviz DOT writer. Nodes and edges are emitted in insertion
//! order, so identical input gives identical text.

use std::fmt::Write;

pub(crate) struct DotGraph {
    name: String,
    nodes: Vec<(String, String)>,
    edges: Vec<(String, String, Option<String>)>,
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

impl DotGraph {
    pub(crate) fn new(name: &str) -> Self {
        DotGraph { name: name.to_string(), nodes: Vec::new(), edges: Vec::new() }
    }

    pub(crate) fn node(&mut self, id: &str, label: &str) {
        self.nodes.push((id.to_string(), label.to_string()));
    }

    pub(crate) fn edge(&mut self, from: &str, to: &str, label: Option<&str>) {
        self.edges.push((from.to_string(), to.to_string(), label.map(str::to_string)));
    }

    pub(crate) fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph {} {{", quote(&self.name));
        let _ = writeln!(s, "  rankdir=BT;");
        for (id, label) in &self.nodes {
            let _ = writeln!(s, "  {} [label={}];", quote(id), quote(label));
        }
        for (from, to, label) in &self.edges {
            match label {
                Some(l) => {
                    let _ = writeln!(s, "  {} -> {} [label={}];", quote(from), quote(to), quote(l));
                }
                None => {
                    let _ = writeln!(s, "  {} -> {};", quote(from), quote(to));
                }
            }
        }
        s.push_str("}\n");
        s
    }
}
