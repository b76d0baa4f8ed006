//! The correspondence between vertex labelings and edge labelings of a
//! rooted tree: every non-root vertex hands its label to the edge towards
//! its parent.

use crate::error::{Error, Result};
use crate::labeling::{EdgeLabeling, Label, VertexLabeling};
use crate::rooted::{labeled_codes, RootedLabeling, RootedTree};

/// Edge co-labeling of `f` with respect to the root of `r`.
pub fn to_colabel(r: &RootedTree, f: &VertexLabeling) -> Result<EdgeLabeling> {
    f.check_rooted_domain(r)?;
    EdgeLabeling::new(r.parent_edges().map(|(c, p)| ((c, p), f.get(c))), f.k())
}

/// Writes the inverse co-labeling into `out` (indexed by vertex); only the
/// vertices of `r` are touched.
pub(crate) fn write_from_colabel(
    r: &RootedTree,
    g: &EdgeLabeling,
    root_label: Label,
    out: &mut [Label],
) -> Result<()> {
    g.check_rooted_domain(r)?;
    out[r.root()] = root_label;
    for (c, p) in r.parent_edges() {
        out[c] = g.get(c, p).expect("domain checked");
    }
    Ok(())
}

/// Inverse of [`to_colabel`]. The root gets `root_label`; every other vertex
/// gets the label of the edge to its parent. Vertices of the ambient graph
/// outside `r` also receive `root_label`.
pub fn from_colabel(r: &RootedTree, g: &EdgeLabeling, root_label: Label) -> Result<VertexLabeling> {
    if root_label == 0 {
        return Err(Error::InvalidLabeling("root label must be at least 1".into()));
    }
    let mut labels = vec![root_label; r.graph_order()];
    write_from_colabel(r, g, root_label, &mut labels)?;
    VertexLabeling::new(labels, g.k().max(root_label))
}

/// True iff no non-identity root-fixing automorphism of `r` preserves `l`,
/// i.e. at every vertex the labeled child subtrees are pairwise distinct.
pub fn is_rooted_distinguishing<L: RootedLabeling + ?Sized>(r: &RootedTree, l: &L) -> Result<bool> {
    Ok(labeled_codes(r, l)?.1)
}
