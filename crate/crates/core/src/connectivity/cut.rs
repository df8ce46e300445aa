use serde::{Deserialize, Serialize};

use super::theorem_g_max;
use crate::error::{invalid, Error, Result};
use crate::graph::{ComponentProfile, CubeTopology, EdgeCut, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuiltCut {
    pub n: u32,
    pub g: u64,
    pub cut: EdgeCut,
    pub profile: ComponentProfile,
}

/// Cuts every edge touching `{0, ..., g-1}` in `FQ_n`, both the edges inside
/// the set and its boundary, leaving `g` isolated vertices and the rest.
///
/// The component count is measured after the removal; anything other than
/// `g + 1` is reported as [`Error::ConstructionFailure`].
pub fn build_cut(n: u32, g: u64) -> Result<BuiltCut> {
    let topo = CubeTopology::folded_hypercube(n)?;
    if n < 3 {
        return Err(invalid("cut construction needs n >= 3"));
    }
    if g == 0 || g > theorem_g_max(n) {
        return Err(invalid(format!(
            "g = {g} outside [1, {}] for n = {n}",
            theorem_g_max(n)
        )));
    }
    let set = topo.vertex_set(0..g as Vertex)?;
    let inside: EdgeCut = topo.induced_edges(&set)?.into_iter().collect();
    let cut = inside.union(&topo.boundary(&set)?);
    let profile = topo.components_after_removal(&cut);
    let expected = g as usize + 1;
    if profile.count != expected {
        return Err(Error::ConstructionFailure {
            expected,
            found: profile.count,
        });
    }
    Ok(BuiltCut { n, g, cut, profile })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cuts() {
        let c = build_cut(5, 1).unwrap();
        assert_eq!(c.cut.len(), 6);
        assert_eq!(c.profile.sizes, vec![31, 1]);
        let c = build_cut(5, 2).unwrap();
        assert_eq!(c.cut.len(), 11);
        assert_eq!(c.profile.sizes, vec![30, 1, 1]);
        let c = build_cut(5, 4).unwrap();
        assert_eq!(c.cut.len(), 20);
        assert_eq!(c.profile.sizes, vec![28, 1, 1, 1, 1]);
        assert_eq!(c.profile.isolated_count, 4);
        assert_eq!(build_cut(6, 8).unwrap().cut.len(), 44);
    }

    #[test]
    fn five_three_gives_four_components() {
        let c = build_cut(5, 3).unwrap();
        assert_eq!(c.profile.count, 4);
        assert_eq!(c.profile.isolated_count, 3);
    }

    #[test]
    fn small_n_and_bad_g() {
        let c = build_cut(3, 4).unwrap();
        assert_eq!(c.profile.sizes, vec![4, 1, 1, 1, 1]);
        assert!(build_cut(2, 1).is_err());
        assert!(build_cut(5, 0).is_err());
        assert!(build_cut(5, 9).is_err());
    }
}
