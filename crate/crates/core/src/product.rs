//! Cartesian products of bicolored digraphs with the induced coloring,
//! bikernel composition, and the product characterizations for directed
//! paths and directed cycles.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::families::{cycle_bikernel, path_bikernel, FamilyError, FamilyShape};
use crate::graph::{BicoloredDigraph, Color, VertexSet};
use crate::solve::{no_bikernel_certificate, BikernelVerdict};
use crate::verify::{is_bikernel, BikernelCheck, Violation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProductError {
    #[error("factor {index} is empty")]
    EmptyFactor { index: usize },
    #[error("no factors given")]
    NoFactors,
    #[error("factor {index} is not a directed path")]
    NotAPath { index: usize },
    #[error("factor {index} is not a directed cycle")]
    NotACycle { index: usize },
    #[error("the set given for factor {index} is not a bikernel: {violation:?}")]
    InvalidFactorBikernel { index: usize, violation: Violation },
    #[error("product vertex name {name:?} collides")]
    NameCollision { name: String },
    #[error("internal: {context} produced a set that failed verification")]
    SelfCheckFailed { context: &'static str },
}

fn joined(left: &str, right: &str) -> String {
    format!("{left},{right}")
}

/// The cartesian product with the induced coloring: copies of `h` inherit
/// `h`'s arc colors, copies of `g` inherit `g`'s. Product vertices are named
/// `left,right`.
pub fn cartesian_product(
    g: &BicoloredDigraph,
    h: &BicoloredDigraph,
) -> Result<BicoloredDigraph, ProductError> {
    if g.vertex_count() == 0 {
        return Err(ProductError::EmptyFactor { index: 0 });
    }
    if h.vertex_count() == 0 {
        return Err(ProductError::EmptyFactor { index: 1 });
    }

    let mut names = Vec::with_capacity(g.vertex_count() * h.vertex_count());
    let mut distinct = BTreeSet::new();
    for u in g.names() {
        for v in h.names() {
            let name = joined(u, v);
            if !distinct.insert(name.clone()) {
                return Err(ProductError::NameCollision { name });
            }
            names.push(name);
        }
    }

    let mut arcs: Vec<(String, String, Color)> = Vec::new();
    for u in g.names() {
        for arc in h.arcs() {
            arcs.push((
                joined(u, h.name(arc.tail)),
                joined(u, h.name(arc.head)),
                arc.color,
            ));
        }
    }
    for arc in g.arcs() {
        for v in h.names() {
            arcs.push((
                joined(g.name(arc.tail), v),
                joined(g.name(arc.head), v),
                arc.color,
            ));
        }
    }

    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let arc_refs: Vec<(&str, &str, Color)> = arcs
        .iter()
        .map(|(t, h, c)| (t.as_str(), h.as_str(), *c))
        .collect();
    let product = BicoloredDigraph::from_arcs(&name_refs, &arc_refs)
        .expect("product of valid factors is valid");
    debug_assert_eq!(
        product.arc_count(),
        g.vertex_count() * h.arc_count() + h.vertex_count() * g.arc_count()
    );
    Ok(product)
}

/// Crosses two factor bikernels into a bikernel of the product. Both inputs
/// are verified, and so is the result.
pub fn compose_bikernels(
    g: &BicoloredDigraph,
    h: &BicoloredDigraph,
    bg: &VertexSet,
    bh: &VertexSet,
) -> Result<VertexSet, ProductError> {
    for (index, (graph, set)) in [(g, bg), (h, bh)].into_iter().enumerate() {
        if let BikernelCheck::No(violation) = is_bikernel(graph, set) {
            return Err(ProductError::InvalidFactorBikernel { index, violation });
        }
    }
    let product = cartesian_product(g, h)?;
    let mut members = Vec::new();
    for u in bg.iter() {
        for v in bh.iter() {
            members.push(joined(g.name(u), h.name(v)));
        }
    }
    let set = product
        .vertex_set(members.iter().map(String::as_str))
        .expect("cross product members are product vertices");
    match is_bikernel(&product, &set) {
        BikernelCheck::Yes => Ok(set),
        BikernelCheck::No(_) => Err(ProductError::SelfCheckFailed {
            context: "compose_bikernels",
        }),
    }
}

fn fold_product(factors: &[BicoloredDigraph]) -> Result<BicoloredDigraph, ProductError> {
    let mut iter = factors.iter();
    let first = iter.next().ok_or(ProductError::NoFactors)?.clone();
    iter.try_fold(first, |acc, f| cartesian_product(&acc, f))
}

fn verified_product_bikernel(
    product: &BicoloredDigraph,
    mut members: Vec<String>,
    context: &'static str,
) -> Result<BikernelVerdict, ProductError> {
    members.sort();
    let set = product
        .vertex_set(members.iter().map(String::as_str))
        .map_err(|_| ProductError::SelfCheckFailed { context })?;
    match is_bikernel(product, &set) {
        BikernelCheck::Yes => Ok(BikernelVerdict::Found(members)),
        BikernelCheck::No(_) => Err(ProductError::SelfCheckFailed { context }),
    }
}

/// A product of directed paths has a bikernel iff every factor has one; the
/// bikernel is the cross product of the factor bikernels.
pub fn path_product_bikernel(
    factors: &[BicoloredDigraph],
) -> Result<BikernelVerdict, ProductError> {
    if factors.is_empty() {
        return Err(ProductError::NoFactors);
    }
    let mut factor_bikernels = Vec::with_capacity(factors.len());
    let mut first_failure = None;
    for (index, factor) in factors.iter().enumerate() {
        match path_bikernel(factor) {
            Ok(BikernelVerdict::Found(b)) => factor_bikernels.push(b),
            Ok(BikernelVerdict::None(_)) => {
                first_failure.get_or_insert(index);
            }
            Err(FamilyError::NotAPath) => return Err(ProductError::NotAPath { index }),
            Err(_) => {
                return Err(ProductError::SelfCheckFailed {
                    context: "path_product_bikernel",
                })
            }
        }
    }

    let product = fold_product(factors)?;
    if first_failure.is_some() {
        return Ok(BikernelVerdict::None(no_bikernel_certificate(&product)));
    }

    let mut members = vec![String::new()];
    for (level, b) in factor_bikernels.iter().enumerate() {
        members = members
            .iter()
            .flat_map(|prefix| {
                b.iter().map(move |name| {
                    if level == 0 {
                        name.clone()
                    } else {
                        joined(prefix, name)
                    }
                })
            })
            .collect();
    }
    verified_product_bikernel(&product, members, "path_product_bikernel")
}

/// A product of two directed cycles has a bikernel iff both factors have
/// one (cross product), or both are monochromatic of the same length in
/// opposite colors (a cyclic diagonal).
pub fn cycle_product_bikernel(
    c1: &BicoloredDigraph,
    c2: &BicoloredDigraph,
) -> Result<BikernelVerdict, ProductError> {
    let order1 = match crate::families::detect_shape(c1) {
        FamilyShape::DirectedCycle { order } => order,
        _ => return Err(ProductError::NotACycle { index: 0 }),
    };
    let order2 = match crate::families::detect_shape(c2) {
        FamilyShape::DirectedCycle { order } => order,
        _ => return Err(ProductError::NotACycle { index: 1 }),
    };

    let v1 = cycle_bikernel(c1).map_err(|_| ProductError::SelfCheckFailed {
        context: "cycle_product_bikernel",
    })?;
    let v2 = cycle_bikernel(c2).map_err(|_| ProductError::SelfCheckFailed {
        context: "cycle_product_bikernel",
    })?;

    if let (BikernelVerdict::Found(b1), BikernelVerdict::Found(b2)) = (&v1, &v2) {
        let bg = c1
            .vertex_set(b1.iter().map(String::as_str))
            .expect("factor bikernel members are vertices");
        let bh = c2
            .vertex_set(b2.iter().map(String::as_str))
            .expect("factor bikernel members are vertices");
        let set = compose_bikernels(c1, c2, &bg, &bh)?;
        let product = cartesian_product(c1, c2)?;
        return Ok(BikernelVerdict::Found(product.set_names(&set)));
    }

    let mono = |g: &BicoloredDigraph| -> Option<Color> {
        let mut colors = g.arcs().iter().map(|a| a.color);
        let first = colors.next()?;
        colors.all(|c| c == first).then_some(first)
    };

    let product = cartesian_product(c1, c2)?;
    let n = order1.len();
    if let (Some(col1), Some(col2)) = (mono(c1), mono(c2)) {
        if col1 != col2 && n == order2.len() {
            // No shift is canonical; try cyclic diagonals in order and keep
            // the first that verifies.
            for shift in 0..n {
                let members: Vec<String> = (0..n)
                    .map(|i| joined(c1.name(order1[i]), c2.name(order2[(i + shift) % n])))
                    .collect();
                if let Ok(verdict) =
                    verified_product_bikernel(&product, members, "cycle_product_bikernel")
                {
                    return Ok(verdict);
                }
            }
            return Err(ProductError::SelfCheckFailed {
                context: "cycle_product_bikernel",
            });
        }
    }

    Ok(BikernelVerdict::None(no_bikernel_certificate(&product)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::gen::SplitMix64;
    use crate::solve::{solve_brute, solve_classes};
    use Color::{One, Two};

    fn graph(arcs: &[(&str, &str, Color)]) -> BicoloredDigraph {
        BicoloredDigraph::from_arcs(&[], arcs).unwrap()
    }

    fn mono_cycle(names: &[&str], color: Color) -> BicoloredDigraph {
        let arcs: Vec<(&str, &str, Color)> = (0..names.len())
            .map(|i| (names[i], names[(i + 1) % names.len()], color))
            .collect();
        BicoloredDigraph::from_arcs(names, &arcs).unwrap()
    }

    #[test]
    fn product_definition_unrolled() {
        let g = graph(&[("a", "b", One)]);
        let h = graph(&[("c", "d", Two)]);
        let p = cartesian_product(&g, &h).unwrap();
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.arc_count(), 4);
        for (t, h_, c) in [
            ("a,c", "b,c", One),
            ("a,d", "b,d", One),
            ("a,c", "a,d", Two),
            ("b,c", "b,d", Two),
        ] {
            assert!(p.has_arc(p.vertex(t).unwrap(), p.vertex(h_).unwrap(), c));
        }
    }

    #[test]
    fn product_counts() {
        let c4a = mono_cycle(&["w", "x", "y", "z"], One);
        let c4b = mono_cycle(&["p", "q", "r", "s"], Two);
        let p = cartesian_product(&c4a, &c4b).unwrap();
        assert_eq!(p.vertex_count(), 16);
        assert_eq!(p.arc_count(), 32);
    }

    #[test]
    fn compose_on_alternating_c4_squared() {
        let c4 = graph(&[
            ("x1", "x2", One),
            ("x2", "x3", Two),
            ("x3", "x4", One),
            ("x4", "x1", Two),
        ]);
        let b = c4.vertex_set(["x2", "x4"]).unwrap();
        let set = compose_bikernels(&c4, &c4, &b, &b).unwrap();
        assert_eq!(set.len(), 4);
        let p = cartesian_product(&c4, &c4).unwrap();
        assert!(is_bikernel(&p, &set).is_yes());
    }

    #[test]
    fn compose_rejects_non_bikernel_factors() {
        let c4 = graph(&[
            ("x1", "x2", One),
            ("x2", "x3", Two),
            ("x3", "x4", One),
            ("x4", "x1", Two),
        ]);
        let good = c4.vertex_set(["x2", "x4"]).unwrap();
        let bad = c4.vertex_set(["x1", "x3"]).unwrap();
        assert!(matches!(
            compose_bikernels(&c4, &c4, &bad, &good),
            Err(ProductError::InvalidFactorBikernel { index: 0, .. })
        ));
    }

    #[test]
    fn compose_single_vertex_factors() {
        let g = BicoloredDigraph::from_arcs(&["u"], &[]).unwrap();
        let b = g.vertex_set(["u"]).unwrap();
        let set = compose_bikernels(&g, &g, &b, &b).unwrap();
        assert_eq!(set.len(), 1);
    }

    #[test]
    fn alternating_p5_squared_has_nine_member_bikernel() {
        let p5 = gen::path_with_colors(&[Two, One, Two, One]);
        let b = path_bikernel(&p5).unwrap();
        let names = b.found().unwrap();
        let set = p5.vertex_set(names.iter().map(String::as_str)).unwrap();
        let composed = compose_bikernels(&p5, &p5, &set, &set).unwrap();
        assert_eq!(composed.len(), 9);
    }

    #[test]
    fn path_products() {
        // Two alternating P3s with sink arcs colored 1.
        let p3 = gen::path_with_colors(&[Two, One]);
        let verdict = path_product_bikernel(&[p3.clone(), p3.clone()]).unwrap();
        assert_eq!(verdict.found().map(<[String]>::len), Some(4));

        // One P4 factor spoils the product.
        let p4 = gen::path_with_colors(&[One, Two, One]);
        let verdict = path_product_bikernel(&[p3.clone(), p4]).unwrap();
        assert!(!verdict.exists());

        // A single factor reduces to the path characterization.
        let verdict = path_product_bikernel(std::slice::from_ref(&p3)).unwrap();
        assert_eq!(verdict, path_bikernel(&p3).unwrap());

        let c3 = mono_cycle(&["a", "b", "c"], One);
        assert_eq!(
            path_product_bikernel(&[c3]),
            Err(ProductError::NotAPath { index: 0 })
        );
    }

    #[test]
    fn monochromatic_cycle_products() {
        // C4(1) x C4(2): a size-4 diagonal.
        let a = mono_cycle(&["w", "x", "y", "z"], One);
        let b = mono_cycle(&["p", "q", "r", "s"], Two);
        let verdict = cycle_product_bikernel(&a, &b).unwrap();
        assert_eq!(verdict.found().map(<[String]>::len), Some(4));

        // Different lengths.
        let c3 = mono_cycle(&["a", "b", "c"], One);
        let verdict = cycle_product_bikernel(&c3, &b).unwrap();
        assert!(!verdict.exists());

        // Same color.
        let c3x = mono_cycle(&["d", "e", "f"], One);
        let verdict = cycle_product_bikernel(&c3, &c3x).unwrap();
        assert!(!verdict.exists());
    }

    #[test]
    fn product_arc_identity_on_random_factors() {
        let mut rng = SplitMix64::new(31);
        for _ in 0..50 {
            let n1 = 1 + rng.below(4) as usize;
            let n2 = 1 + rng.below(4) as usize;
            let arcs1 = rng.below((2 * n1 * n1) as u64) as usize;
            let g = gen::random_bicolored(&mut rng, n1, arcs1);
            let arcs2 = rng.below((2 * n2 * n2) as u64) as usize;
            let h = gen::random_bicolored(&mut rng, n2, arcs2);
            let p = cartesian_product(&g, &h).unwrap();
            assert_eq!(p.vertex_count(), n1 * n2);
            assert_eq!(
                p.arc_count(),
                g.vertex_count() * h.arc_count() + h.vertex_count() * g.arc_count()
            );
        }
    }

    /// Small-scale version of the product acceptance sweep.
    #[test]
    fn cycle_products_agree_with_brute_on_c3_pairs() {
        for mask in 0u32..64 {
            let colors1: Vec<Color> = (0..3)
                .map(|i| if mask >> i & 1 == 1 { One } else { Two })
                .collect();
            let colors2: Vec<Color> = (3..6)
                .map(|i| if mask >> i & 1 == 1 { One } else { Two })
                .collect();
            let c1 = gen::cycle_with_colors(&colors1);
            let c2 = gen::cycle_with_colors(&colors2);
            let fast = cycle_product_bikernel(&c1, &c2).unwrap();
            let product = cartesian_product(&c1, &c2).unwrap();
            let brute = solve_brute(&product).unwrap();
            assert_eq!(fast.exists(), brute.exists(), "mask {mask}");
            let classes = solve_classes(&product).unwrap();
            assert_eq!(classes.exists(), brute.exists(), "mask {mask}");
        }
    }
}
