//! Group algebras from Cayley tables, with the delta-at-identity form.

use std::sync::Arc;

use super::BuilderError;
use crate::algebra::{multiply, Algebra, Element};
use crate::frobenius::FrobeniusStructure;
use crate::scalar::{FieldSpec, Scalar};

/// A finite group as a validated Cayley table. Index 0 is the identity by
/// convention of the stock constructors; arbitrary tables may place it
/// anywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
    labels: Vec<String>,
}

impl GroupTable {
    /// Validates closure, associativity, identity and inverses (O(n^3)).
    pub fn new(labels: Vec<String>, mul: Vec<Vec<usize>>) -> Result<Self, BuilderError> {
        let n = labels.len();
        let bad = |msg: String| BuilderError::BadGroupTable(msg);
        if n == 0 {
            return Err(bad("empty group".into()));
        }
        if mul.len() != n || mul.iter().any(|row| row.len() != n) {
            return Err(bad("table is not n x n".into()));
        }
        if mul.iter().flatten().any(|&x| x >= n) {
            return Err(bad("table entry out of range".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(bad(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul[e][g] == g && mul[g][e] == g))
            .ok_or_else(|| bad("no identity element".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for g in 0..n {
            inverse[g] = (0..n)
                .find(|&h| mul[g][h] == identity && mul[h][g] == identity)
                .ok_or_else(|| bad(format!("element {g} has no inverse")))?;
        }
        Ok(GroupTable {
            order: n,
            mul,
            inverse,
            identity,
            labels,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

fn perm_compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    // (p q)(x) = p(q(x))
    q.iter().map(|&x| p[x]).collect()
}

/// S_3 with basis order e, r, s, t, rs, sr where r = (12), s = (23),
/// t = r s r = (13), and rs, sr are the two 3-cycles.
pub fn s3() -> GroupTable {
    let e = vec![0, 1, 2];
    let r = vec![1, 0, 2];
    let s = vec![0, 2, 1];
    let t = vec![2, 1, 0];
    let rs = perm_compose(&r, &s);
    let sr = perm_compose(&s, &r);
    let elements = [e, r, s, t, rs, sr];
    let labels = ["e", "r", "s", "t", "rs", "sr"];
    let mut mul = vec![vec![0; 6]; 6];
    for (a, pa) in elements.iter().enumerate() {
        for (b, pb) in elements.iter().enumerate() {
            let prod = perm_compose(pa, pb);
            mul[a][b] = elements
                .iter()
                .position(|p| *p == prod)
                .expect("S3 is closed");
        }
    }
    GroupTable::new(labels.iter().map(|s| s.to_string()).collect(), mul)
        .expect("S3 table is a group")
}

/// Cycle-notation aliases for the S_3 basis labels.
pub fn s3_cycle_alias(cycle: &str) -> Option<&'static str> {
    match cycle {
        "(12)" => Some("r"),
        "(23)" => Some("s"),
        "(13)" => Some("t"),
        "(123)" => Some("rs"),
        "(132)" => Some("sr"),
        "e" | "()" => Some("e"),
        _ => None,
    }
}

/// The cyclic group of order n with labels e, g, g^2, ...
pub fn cyclic(n: usize) -> Result<GroupTable, BuilderError> {
    if n == 0 {
        return Err(BuilderError::BadGroupTable("cyclic group of order 0".into()));
    }
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    let mul = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    GroupTable::new(labels, mul)
}

/// The group algebra K G with basis the group elements in table order.
pub fn group_algebra(field: FieldSpec, g: &GroupTable) -> Result<Arc<Algebra>, BuilderError> {
    let n = g.order();
    let structure: Vec<(usize, usize, usize, Scalar)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| (a, b, g.mul(a, b), Scalar::one(field)))
        .collect();
    let mut unit = vec![Scalar::zero(field); n];
    unit[g.identity()] = Scalar::one(field);
    // The table is a validated group, which already proves associativity.
    Ok(Algebra::new_trusted(
        field,
        g.labels().to_vec(),
        &structure,
        unit,
    )?)
}

/// The standard Frobenius form on K G: the characteristic function of the
/// identity.
pub fn group_standard_form(
    field: FieldSpec,
    g: &GroupTable,
) -> Result<FrobeniusStructure, BuilderError> {
    let algebra = group_algebra(field, g)?;
    let mut eps = vec![Scalar::zero(field); g.order()];
    eps[g.identity()] = Scalar::one(field);
    Ok(FrobeniusStructure::new(algebra, eps)?)
}

/// Orbit partition of the group under conjugation.
pub fn conjugacy_classes(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut class = Vec::new();
        for h in 0..n {
            let y = g.mul(g.mul(h, x), g.inverse(h));
            if !seen[y] {
                seen[y] = true;
                class.push(y);
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

/// sum_h h a h^{-1} computed straight off the Cayley table. For a = u^{-1}
/// this is the twisted lollipop of the delta-at-identity form, so it serves
/// as an independent cross-check of the generic metric computation.
pub fn conjugation_sum(
    algebra: &Arc<Algebra>,
    g: &GroupTable,
    a: &Element,
) -> Result<Element, BuilderError> {
    let mut acc = algebra.zero_element();
    for h in 0..g.order() {
        let h_el = algebra.basis_element(h);
        let h_inv = algebra.basis_element(g.inverse(h));
        let conj = multiply(&multiply(&h_el, a)?, &h_inv)?;
        acc = &acc + &conj;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::center;

    fn qi(n: i64) -> Scalar {
        Scalar::from_int(FieldSpec::Rational, n)
    }

    #[test]
    fn s3_table_is_the_expected_group() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.identity(), 0);
        // r s = rs and s r = sr by label
        let (r, s) = (1, 2);
        assert_eq!(g.labels()[g.mul(r, s)], "rs");
        assert_eq!(g.labels()[g.mul(s, r)], "sr");
        // t = r s r
        assert_eq!(g.mul(g.mul(r, s), r), 3);
        // transpositions are involutions
        for x in [1, 2, 3] {
            assert_eq!(g.inverse(x), x);
        }
        // the two 3-cycles invert each other
        assert_eq!(g.inverse(4), 5);
    }

    #[test]
    fn conjugacy_classes_of_s3_and_cyclic() {
        let g = s3();
        let classes = conjugacy_classes(&g);
        let mut sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        let c4 = cyclic(4).unwrap();
        assert_eq!(conjugacy_classes(&c4).len(), 4);
    }

    #[test]
    fn class_sums_are_central() {
        let g = s3();
        let alg = group_algebra(FieldSpec::Rational, &g).unwrap();
        let z = center(&alg);
        assert_eq!(z.len(), 3);
        for class in conjugacy_classes(&g) {
            let mut sum = alg.zero_element();
            for i in class {
                sum = &sum + &alg.basis_element(i);
            }
            // central: commutes with every basis element
            for i in 0..alg.dim() {
                let e = alg.basis_element(i);
                assert_eq!(multiply(&sum, &e).unwrap(), multiply(&e, &sum).unwrap());
            }
        }
    }

    #[test]
    fn bad_tables_rejected() {
        // 2x2 "table" that is not associative / has no identity
        let t = vec![vec![1, 1], vec![1, 1]];
        assert!(GroupTable::new(vec!["a".into(), "b".into()], t).is_err());
    }

    #[test]
    fn standard_form_lollipop_matches_conjugation_sum() {
        let g = s3();
        let form = group_standard_form(FieldSpec::Rational, &g).unwrap();
        let alg = form.algebra();
        // twist by u = r: B = sum_h h r^{-1} h^{-1} = 2(r + s + t)
        let u = alg.basis_element(1);
        let twisted = form.twist(&u).unwrap();
        let u_inv = alg.basis_element(g.inverse(1));
        let oracle = conjugation_sum(alg, &g, &u_inv).unwrap();
        assert_eq!(twisted.lollipop(), &oracle);
        let expected = alg
            .element(vec![qi(0), qi(2), qi(2), qi(2), qi(0), qi(0)])
            .unwrap();
        assert_eq!(oracle, expected);
    }
}
