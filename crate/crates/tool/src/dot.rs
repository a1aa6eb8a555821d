//! Graphviz export of Hasse diagrams.

use std::fmt::Write;

use kunz_core::IdealPoset;

use crate::json::{hasse_edges, Order};
use crate::{ToolError, ToolResult};

#[derive(Clone, Copy, Debug, Default)]
pub struct DotOptions {
    pub order: Order,
    /// Pin each node at its Kunz coordinates `(x₁, x₂)`; multiplicity 3
    /// only.
    pub positions: bool,
}

pub fn to_dot(poset: &IdealPoset, options: DotOptions) -> ToolResult<String> {
    let m = poset.ambient().multiplicity();
    if options.positions && m != 3 {
        return Err(ToolError::UnsupportedMultiplicityForLayout(m));
    }
    let mut out = String::new();
    let _ = writeln!(out, "digraph ideals {{");
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  label=\"{}\";", poset.ambient());
    let _ = writeln!(out, "  node [shape=box];");
    for (i, ideal) in poset.ideals().iter().enumerate() {
        let entries = ideal.kunz().entries();
        let label = if entries.is_empty() {
            "()".to_string()
        } else {
            entries.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        };
        let mut attrs = format!("label=\"{label}\"");
        if poset.is_idempotent(i) {
            attrs.push_str(", style=filled, fillcolor=gray");
        }
        if options.positions {
            let _ = write!(attrs, ", pos=\"{},{}!\"", entries[0], entries[1]);
        }
        let _ = writeln!(out, "  n{i} [{attrs}];");
    }
    for (lo, hi) in hasse_edges(poset, options.order) {
        let _ = writeln!(out, "  n{lo} -> n{hi};");
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use kunz_core::NumericalSemigroup;

    fn poset(gens: &[u64]) -> IdealPoset {
        IdealPoset::new(NumericalSemigroup::from_generators(gens).unwrap())
    }

    #[test]
    fn naturals_is_a_single_node() {
        let dot = to_dot(&poset(&[1]), DotOptions::default()).unwrap();
        assert!(dot.contains("n0 [label=\"()\", style=filled, fillcolor=gray];"));
        assert!(!dot.contains("->"));
    }

    #[test]
    fn square_for_3_4_5() {
        let dot = to_dot(&poset(&[3, 4, 5]), DotOptions::default()).unwrap();
        assert!(dot.starts_with("digraph ideals {\n  rankdir=BT;\n"));
        assert_eq!(dot.matches("->").count(), 4);
        assert!(dot.contains("n0 [label=\"1,1\", style=filled, fillcolor=gray];"));
        assert!(dot.contains("n0 -> n1;"));
    }

    #[test]
    fn non_idempotents_are_unfilled() {
        let dot = to_dot(&poset(&[3, 13, 17]), DotOptions::default()).unwrap();
        assert_eq!(dot.matches("->").count(), 47);
        assert!(dot.contains("[label=\"4,0\"];"));
    }

    #[test]
    fn positions_need_multiplicity_three() {
        let with = DotOptions { positions: true, ..Default::default() };
        let dot = to_dot(&poset(&[3, 13, 17]), with).unwrap();
        assert!(dot.contains("pos=\"4,5!\""));
        let err = to_dot(&poset(&[4, 5, 6, 7]), with).unwrap_err();
        assert_eq!(err.name(), "UnsupportedMultiplicityForLayout");
        // The graph itself is available for any multiplicity.
        assert!(to_dot(&poset(&[4, 5, 6, 7]), DotOptions::default()).is_ok());
    }
}
