//! Covering maps: surjective, locally bijective graph homomorphisms.

use super::{cartesian_product, cycle, Graph};
use crate::error::{Error, Result};

/// A map from the vertices of `source` onto the vertices of `target` that is
/// surjective and restricts to a bijection on every neighborhood.
#[derive(Debug, Clone)]
pub struct CoveringMap {
    pub source: Graph,
    pub target: Graph,
    /// image[v] for each source vertex v
    pub image: Vec<usize>,
}

/// First invariant violation found, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoveringViolation {
    ImageLength,
    ImageOutOfRange { vertex: usize },
    NotSurjective { missed: usize },
    NotLocallyBijective { vertex: usize, detail: String },
}

impl std::fmt::Display for CoveringViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoveringViolation::ImageLength => write!(f, "image length != source vertex count"),
            CoveringViolation::ImageOutOfRange { vertex } => {
                write!(f, "image of {vertex} out of range")
            }
            CoveringViolation::NotSurjective { missed } => {
                write!(f, "target vertex {missed} has no preimage")
            }
            CoveringViolation::NotLocallyBijective { vertex, detail } => {
                write!(f, "neighborhood of {vertex} does not map bijectively: {detail}")
            }
        }
    }
}

/// Checks both covering invariants, reporting the first violating vertex.
pub fn validate_covering(map: &CoveringMap) -> std::result::Result<(), CoveringViolation> {
    let ns = map.source.vertex_count();
    let nt = map.target.vertex_count();
    if map.image.len() != ns {
        return Err(CoveringViolation::ImageLength);
    }
    for (v, &img) in map.image.iter().enumerate() {
        if img >= nt {
            return Err(CoveringViolation::ImageOutOfRange { vertex: v });
        }
    }
    let mut hit = vec![false; nt];
    for &img in &map.image {
        hit[img] = true;
    }
    if let Some(missed) = hit.iter().position(|&h| !h) {
        return Err(CoveringViolation::NotSurjective { missed });
    }
    for v in map.source.vertices() {
        let image_of_v = map.image[v];
        let mut mapped: Vec<usize> = map.source.neighbors(v).iter().map(|&w| map.image[w]).collect();
        mapped.sort_unstable();
        let expected = map.target.neighbors(image_of_v);
        if mapped.windows(2).any(|w| w[0] == w[1]) {
            return Err(CoveringViolation::NotLocallyBijective {
                vertex: v,
                detail: "two neighbors share an image".into(),
            });
        }
        if mapped != expected {
            return Err(CoveringViolation::NotLocallyBijective {
                vertex: v,
                detail: format!(
                    "neighbors map to {mapped:?}, neighborhood of image is {expected:?}"
                ),
            });
        }
    }
    Ok(())
}

impl CoveringMap {
    pub fn identity(g: &Graph) -> CoveringMap {
        CoveringMap {
            source: g.clone(),
            target: g.clone(),
            image: g.vertices().collect(),
        }
    }

    pub fn image_of(&self, v: usize) -> usize {
        self.image[v]
    }

    /// Lifts a step of the target-graph walk `from_image -> to` through the
    /// local bijection at source vertex `from`. Errors if the map is not a
    /// covering at `from`.
    pub fn lift_step(&self, from: usize, to: usize) -> Result<usize> {
        debug_assert!(self.target.has_edge(self.image[from], to) || self.image[from] == to);
        let mut found = None;
        for &w in self.source.neighbors(from) {
            if self.image[w] == to {
                if found.is_some() {
                    return Err(Error::InvalidCovering(format!(
                        "two lifts of step to {to} at source vertex {from}"
                    )));
                }
                found = Some(w);
            }
        }
        found.ok_or_else(|| {
            Error::InvalidCovering(format!("no lift of step to {to} at source vertex {from}"))
        })
    }

    /// Lowest-id preimage of a target vertex.
    pub fn any_preimage(&self, target_vertex: usize) -> Result<usize> {
        self.image
            .iter()
            .position(|&img| img == target_vertex)
            .ok_or_else(|| Error::InvalidCovering(format!("vertex {target_vertex} has no preimage")))
    }
}

/// The covering of a product of cycles by the product of doubled cycles:
/// source is the product of `C_{2n_i}`, target the product of `C_{n_i}`, and
/// each coordinate maps by reduction modulo `n_i`.
pub fn doubled_cycle_cover(sizes: &[usize]) -> Result<CoveringMap> {
    if sizes.is_empty() {
        return Err(Error::parameter("doubled cycle cover needs at least one cycle"));
    }
    for &n in sizes {
        if n < 3 {
            return Err(Error::parameter("cycle sizes must be >= 3"));
        }
    }
    let doubled: Vec<Graph> = sizes.iter().map(|&n| cycle(2 * n)).collect::<Result<_>>()?;
    let halved: Vec<Graph> = sizes.iter().map(|&n| cycle(n)).collect::<Result<_>>()?;
    let source = cartesian_product(&doubled)?;
    let target = cartesian_product(&halved)?;
    let image: Vec<usize> = source
        .graph()
        .vertices()
        .map(|v| {
            let coords = source.coords(v);
            let reduced: Vec<usize> = coords
                .iter()
                .zip(sizes)
                .map(|(&c, &n)| c % n)
                .collect();
            target.index(&reduced)
        })
        .collect();
    let map = CoveringMap {
        source: source.into_graph(),
        target: target.into_graph(),
        image,
    };
    debug_assert!(validate_covering(&map).is_ok());
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_map_is_a_covering() {
        let g = cycle(4).unwrap();
        validate_covering(&CoveringMap::identity(&g)).unwrap();
    }

    #[test]
    fn constant_map_rejected() {
        let g = cycle(4).unwrap();
        let map = CoveringMap {
            source: g.clone(),
            target: g,
            image: vec![0; 4],
        };
        assert!(matches!(
            validate_covering(&map),
            Err(CoveringViolation::NotSurjective { .. })
        ));
    }

    #[test]
    fn doubled_single_cycle_reduces_mod_n() {
        let map = doubled_cycle_cover(&[3]).unwrap();
        assert_eq!(map.source.vertex_count(), 6);
        assert_eq!(map.target.vertex_count(), 3);
        for x in 0..6 {
            assert_eq!(map.image_of(x), x % 3);
        }
        validate_covering(&map).unwrap();
    }

    #[test]
    fn doubled_product_cover_validates_by_enumeration() {
        let map = doubled_cycle_cover(&[3, 4]).unwrap();
        assert_eq!(map.source.vertex_count(), 6 * 8);
        assert_eq!(map.target.vertex_count(), 12);
        validate_covering(&map).unwrap();
        // local bijectivity, checked directly: image neighborhoods match
        for v in map.source.vertices() {
            let mut imgs: Vec<usize> = map
                .source
                .neighbors(v)
                .iter()
                .map(|&w| map.image_of(w))
                .collect();
            imgs.sort_unstable();
            assert_eq!(imgs, map.target.neighbors(map.image_of(v)));
        }
    }

    #[test]
    fn surjective_but_not_local_bijection_rejected() {
        // map C6 onto C3 by a non-homomorphism: swap two images
        let mut map = doubled_cycle_cover(&[3]).unwrap();
        map.image.swap(0, 1);
        assert!(validate_covering(&map).is_err());
    }

    #[test]
    fn lift_step_is_unique() {
        let map = doubled_cycle_cover(&[3]).unwrap();
        // at source vertex 0 (image 0), target step 0 -> 1 lifts to 1
        assert_eq!(map.lift_step(0, 1).unwrap(), 1);
        // target step 0 -> 2 lifts to 5 (neighbor of 0 in C6 with image 2)
        assert_eq!(map.lift_step(0, 2).unwrap(), 5);
    }
}
