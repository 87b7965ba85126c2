//! Triple intersection numbers `d_{αβγ} = E_α · E_β · E_γ` of exceptional divisors.

use std::collections::BTreeMap;

use crate::resolve::Resolution;

use super::surfaces::exceptional_surfaces;

/// Symmetric tensor indexed by exceptional divisor positions `0..size`
/// (ordered by their last coordinate).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionTensor {
    size: usize,
    entries: BTreeMap<[usize; 3], i64>,
}

impl IntersectionTensor {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> i64 {
        let mut key = [a, b, c];
        key.sort();
        self.entries.get(&key).copied().unwrap_or(0)
    }

    /// Nonzero entries with sorted indices.
    pub fn nonzero(&self) -> impl Iterator<Item = ([usize; 3], i64)> + '_ {
        self.entries.iter().filter(|(_, v)| **v != 0).map(|(k, v)| (*k, *v))
    }

    /// The dense `size × size × size` array.
    pub fn dense(&self) -> Vec<Vec<Vec<i64>>> {
        (0..self.size)
            .map(|a| (0..self.size).map(|b| (0..self.size).map(|c| self.get(a, b, c)).collect()).collect())
            .collect()
    }
}

/// Computes the tensor from the exceptional surfaces:
/// distinct indices count common cones, `d_{αββ}` is the self-intersection of
/// `E_α ∩ E_β` inside `E_α`, and `d_{ααα} = K²` of `E_α`.
pub fn triple_intersections(r: &Resolution) -> IntersectionTensor {
    let interior = r.interior_ray_indices();
    let size = interior.len();
    let surfaces = exceptional_surfaces(r);
    let cones = r.fan().cones();
    let mut entries = BTreeMap::new();
    for a in 0..size {
        for b in a..size {
            for c in b..size {
                let v = if a == b && b == c {
                    let s = &surfaces[a];
                    s.self_intersections().iter().sum::<i64>() + 2 * s.euler_number() as i64
                } else if a == b || b == c {
                    // {x, x, y}: E_y · E_x · E_x is C² inside E_y.
                    let (x, y) = if a == b { (a, c) } else { (c, a) };
                    surfaces[y].curve_self_intersection(interior[x]).unwrap_or(0)
                } else {
                    let (ra, rb, rc) = (interior[a], interior[b], interior[c]);
                    cones.iter().filter(|cone| cone.contains(&ra) && cone.contains(&rb) && cone.contains(&rc)).count()
                        as i64
                };
                entries.insert([a, b, c], v);
            }
        }
    }
    IntersectionTensor { size, entries }
}

#[cfg(test)]
mod tests {
    use super::super::compact_wall_relations;
    use super::*;
    use crate::classify::canonical_form;
    use crate::resolve::enumerate_crepant_resolutions;

    /// Every entry from three-dimensional wall relations alone, using
    /// `Σ_ρ D_ρ ~ 0` to trade a repeated factor for its neighbours.
    fn brute(r: &Resolution) -> Vec<Vec<Vec<i64>>> {
        let interior = r.interior_ray_indices();
        let rels = compact_wall_relations(r);
        let curve = |x: usize, y: usize| rels.iter().find(|w| w.generators == [x.min(y), x.max(y)]);
        let pair = |alpha: usize, x: usize, y: usize| curve(x, y).map_or(0, |w| w.pairing(alpha));
        let neighbours = |x: usize| {
            let mut out: Vec<usize> = r
                .fan()
                .cones()
                .iter()
                .filter(|c| c.contains(&x))
                .flat_map(|c| c.iter().copied())
                .filter(|&y| y != x)
                .collect();
            out.sort();
            out.dedup();
            out
        };
        let m = interior.len();
        let mut d = vec![vec![vec![0; m]; m]; m];
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    let (ra, rb, rc) = (interior[a], interior[b], interior[c]);
                    d[a][b][c] = if rb != rc {
                        pair(ra, rb, rc)
                    } else {
                        -neighbours(rb).iter().map(|&rho| pair(ra, rb, rho)).sum::<i64>()
                    };
                }
            }
        }
        d
    }

    #[test]
    fn c31_numbers() {
        let rs = enumerate_crepant_resolutions(&canonical_form(3, 1).unwrap(), 6).unwrap();
        let t = triple_intersections(&rs[0]);
        assert_eq!(t.get(0, 0, 0), 8);
        assert_eq!(t.get(1, 1, 1), 8);
        assert_eq!(t.get(0, 0, 1) + t.get(0, 1, 1), -2);
        let t = triple_intersections(&rs[1]);
        assert_eq!(t.dense(), vec![vec![vec![9, 0], vec![0, 0]], vec![vec![0, 0], vec![0, 9]]]);
    }

    #[test]
    fn agrees_with_wall_relations() {
        for n in 2..=9i64 {
            for k in 1..n {
                let Ok(c) = canonical_form(n, k) else { continue };
                for r in enumerate_crepant_resolutions(&c, 9).unwrap() {
                    let t = triple_intersections(&r);
                    assert_eq!(t.dense(), brute(&r), "C_{{{n},{k}}}");
                    for a in 0..t.size() {
                        let links = exceptional_surfaces(&r)[a].euler_number() as i64;
                        assert_eq!(t.get(a, a, a), 12 - links);
                    }
                }
            }
        }
    }

    #[test]
    fn symmetric() {
        let r = &enumerate_crepant_resolutions(&canonical_form(5, 2).unwrap(), 6).unwrap()[0];
        let t = triple_intersections(r);
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    assert_eq!(t.get(a, b, c), t.get(c, a, b));
                    assert_eq!(t.get(a, b, c), t.get(b, a, c));
                }
            }
        }
    }
}
