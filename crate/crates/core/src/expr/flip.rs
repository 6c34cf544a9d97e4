//! The flip move `A (B) -> (A) B`: on the sphere the outermost region of a
//! plane arrangement is not special, so pushing one factor's rim across
//! the back turns its inside out.
use std::collections::HashMap;

use super::{enumerate_family, Expr, Node};
use crate::error::{Error, Result};
use crate::family::FamilyId;

/// Flips the factor at `index` (in canonical order), which must be a plain
/// circle: the other factors move inside a new circle and the chosen
/// circle's children become top-level factors.
pub fn flip(e: &Expr, index: usize) -> Result<Expr> {
    let factors = e.factors();
    let Some(chosen) = factors.get(index) else {
        return Err(Error::InvalidFactorIndex {
            index,
            factors: factors.len(),
        });
    };
    let Node::Circle(inner) = chosen else {
        return Err(Error::UnsupportedNode {
            found: chosen.kind_name(),
            allowed: "circle",
        });
    };
    let rest: Vec<Node> = factors
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != index)
        .map(|(_, n)| n.clone())
        .collect();
    let mut out = inner.factors().to_vec();
    out.push(Node::Circle(Expr::from_canonical(rest)));
    Ok(Expr::from_canonical(out))
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Groups all nested-circle expressions with `n` circles into classes
/// connected by flips. Clusters are listed by their smallest member and
/// each is sorted.
pub fn flip_clusters(n: usize) -> Result<Vec<Vec<Expr>>> {
    let exprs = enumerate_family(FamilyId::C, n)?.exprs;
    let index: HashMap<&Expr, usize> = exprs.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut parent: Vec<usize> = (0..exprs.len()).collect();
    for (i, e) in exprs.iter().enumerate() {
        for f in 0..e.factor_count() {
            let j = index[&flip(e, f)?];
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: Vec<Vec<Expr>> = vec![Vec::new(); exprs.len()];
    for (i, e) in exprs.iter().enumerate() {
        groups[find(&mut parent, i)].push(e.clone());
    }
    Ok(groups.into_iter().filter(|g| !g.is_empty()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn c(s: &str) -> Expr {
        parse(FamilyId::C, s).unwrap()
    }

    fn index_of(e: &Expr, factor: &str) -> usize {
        e.factors()
            .iter()
            .position(|n| n.to_string() == factor)
            .unwrap()
    }

    #[test]
    fn examples() {
        let e = c("()()()");
        assert_eq!(flip(&e, 2).unwrap(), c("(()())"));
        let e = c("(())()");
        assert_eq!(flip(&e, index_of(&e, "()")).unwrap(), c("((()))"));
        assert_eq!(flip(&e, index_of(&e, "(())")).unwrap(), e);
    }

    #[test]
    fn flipping_back_restores() {
        for e in enumerate_family(FamilyId::C, 6).unwrap().exprs {
            for f in 0..e.factor_count() {
                let img = flip(&e, f).unwrap();
                // the new circle wraps the other factors of `e`
                let mut others = e.factors().to_vec();
                others.remove(f);
                let wrapper = Node::Circle(Expr::from_canonical(others));
                let back = flip(&img, index_of(&img, &wrapper.to_string())).unwrap();
                assert_eq!(back, e);
            }
        }
    }

    #[test]
    fn bad_index() {
        assert!(matches!(
            flip(&c("()"), 1),
            Err(Error::InvalidFactorIndex {
                index: 1,
                factors: 1
            })
        ));
        assert!(flip(&Expr::empty(), 0).is_err());
    }

    #[test]
    fn cluster_counts() {
        let counts: Vec<usize> = (0..=7).map(|n| flip_clusters(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23]);
    }

    #[test]
    fn cluster_sizes_bounded_by_outgoing_flips() {
        for cl in flip_clusters(6).unwrap() {
            let flips: usize = cl.iter().map(Expr::factor_count).sum();
            assert!(cl.len() <= flips.max(1));
        }
    }
}
