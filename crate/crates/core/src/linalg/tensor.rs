//! Sparse tensors with N-dimensional legs and index-wise generator application.

use std::collections::BTreeMap;

use crate::linalg::LinalgError;
use crate::scalar::{FieldSpec, Scalar};

/// Sparse tensor with `legs` indices each ranging over 0..dim.
/// No explicit zero entries are stored; `legs == 0` holds a single scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    field: FieldSpec,
    dim: usize,
    legs: usize,
    entries: BTreeMap<Vec<u32>, Scalar>,
}

impl Tensor {
    pub fn zero(field: FieldSpec, dim: usize, legs: usize) -> Self {
        Tensor {
            field,
            dim,
            legs,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_scalar(field: FieldSpec, dim: usize, value: Scalar) -> Self {
        let mut t = Tensor::zero(field, dim, 0);
        t.insert_add(Vec::new(), value);
        t
    }

    /// Identity on `wires` legs: the 2*wires-leg tensor delta_{i1 j1} ... .
    pub fn identity(field: FieldSpec, dim: usize, wires: usize) -> Self {
        let mut t = Tensor::zero(field, dim, 2 * wires);
        let mut idx = vec![0u32; wires];
        loop {
            let mut key = Vec::with_capacity(2 * wires);
            key.extend_from_slice(&idx);
            key.extend_from_slice(&idx);
            t.insert_add(key, Scalar::one(field));
            // Odometer over the wires indices.
            let mut pos = wires;
            loop {
                if pos == 0 {
                    return t;
                }
                pos -= 1;
                idx[pos] += 1;
                if (idx[pos] as usize) < dim {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.entries.iter()
    }

    pub fn get(&self, idx: &[u32]) -> Scalar {
        self.entries
            .get(idx)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    /// The value of a 0-leg tensor.
    pub fn scalar_value(&self) -> Scalar {
        assert_eq!(self.legs, 0, "scalar_value on a tensor with legs");
        self.get(&[])
    }

    pub fn insert_add(&mut self, idx: Vec<u32>, value: Scalar) {
        debug_assert_eq!(idx.len(), self.legs);
        if value.is_zero() {
            return;
        }
        match self.entries.entry(idx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &value;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scale(&self, factor: &Scalar) -> Tensor {
        let mut out = Tensor::zero(self.field, self.dim, self.legs);
        for (idx, v) in &self.entries {
            out.insert_add(idx.clone(), v * factor);
        }
        out
    }

    pub fn add(&self, rhs: &Tensor) -> Tensor {
        assert_eq!(self.legs, rhs.legs, "tensor add legs mismatch");
        let mut out = self.clone();
        for (idx, v) in &rhs.entries {
            out.insert_add(idx.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Tensor) -> Tensor {
        self.add(&rhs.scale(&Scalar::from_int(self.field, -1)))
    }

    /// Tensor with legs permuted: out index at position p comes from
    /// input position perm[p].
    pub fn permute_legs(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.legs);
        let mut out = Tensor::zero(self.field, self.dim, self.legs);
        for (idx, v) in &self.entries {
            let new: Vec<u32> = perm.iter().map(|&p| idx[p]).collect();
            out.insert_add(new, v.clone());
        }
        out
    }

    /// Swap of a 2-leg tensor (g -> g_21).
    pub fn swap2(&self) -> Tensor {
        assert_eq!(self.legs, 2);
        self.permute_legs(&[1, 0])
    }
}

impl std::fmt::Display for Tensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(idx, v)| {
                let key = idx
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                format!("[{key}] = {v}")
            })
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// A small map tensor for one generator: `in_arity` legs in, `out_arity` out.
/// Stored as input-index -> list of (output-index, coefficient).
#[derive(Debug, Clone)]
pub struct GenMap {
    pub in_arity: usize,
    pub out_arity: usize,
    table: BTreeMap<Vec<u32>, Vec<(Vec<u32>, Scalar)>>,
}

impl GenMap {
    pub fn new(in_arity: usize, out_arity: usize) -> Self {
        GenMap {
            in_arity,
            out_arity,
            table: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, input: Vec<u32>, output: Vec<u32>, coeff: Scalar) {
        debug_assert_eq!(input.len(), self.in_arity);
        debug_assert_eq!(output.len(), self.out_arity);
        if coeff.is_zero() {
            return;
        }
        self.table.entry(input).or_default().push((output, coeff));
    }

    pub fn rows(&self, input: &[u32]) -> Option<&[(Vec<u32>, Scalar)]> {
        self.table.get(input).map(Vec::as_slice)
    }
}

/// Contracts `gen` into the legs of `t` starting at `position`, index-wise.
/// The consumed legs are replaced by the generator's output legs in place.
pub fn apply_generator(t: &Tensor, position: usize, gen: &GenMap) -> Result<Tensor, LinalgError> {
    if position + gen.in_arity > t.legs() {
        return Err(LinalgError::ShapeMismatch(format!(
            "generator consumes legs {}..{} of a {}-leg tensor",
            position,
            position + gen.in_arity,
            t.legs()
        )));
    }
    let new_legs = t.legs() - gen.in_arity + gen.out_arity;
    let mut out = Tensor::zero(t.field(), t.dim(), new_legs);
    for (idx, v) in t.iter() {
        let key = &idx[position..position + gen.in_arity];
        let Some(rows) = gen.rows(key) else { continue };
        for (out_idx, w) in rows {
            let mut new_idx = Vec::with_capacity(new_legs);
            new_idx.extend_from_slice(&idx[..position]);
            new_idx.extend_from_slice(out_idx);
            new_idx.extend_from_slice(&idx[position + gen.in_arity..]);
            out.insert_add(new_idx, v * w);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    fn qi(n: i64) -> Scalar {
        Scalar::from_int(FieldSpec::Rational, n)
    }

    #[test]
    fn identity_generator_is_noop() {
        let f = FieldSpec::Rational;
        let mut t = Tensor::zero(f, 3, 2);
        t.insert_add(vec![0, 2], qi(5));
        t.insert_add(vec![1, 1], qi(-1));
        let mut id = GenMap::new(1, 1);
        for i in 0..3u32 {
            id.push(vec![i], vec![i], qi(1));
        }
        assert_eq!(apply_generator(&t, 0, &id).unwrap(), t);
        assert_eq!(apply_generator(&t, 1, &id).unwrap(), t);
    }

    #[test]
    fn counit_on_basis_vector() {
        // Applying a 1->0 map to the basis vector e_i yields the i-th value.
        let f = FieldSpec::Rational;
        let mut e1 = Tensor::zero(f, 3, 1);
        e1.insert_add(vec![1], qi(1));
        let mut eps = GenMap::new(1, 0);
        eps.push(vec![0], vec![], qi(7));
        eps.push(vec![1], vec![], qi(9));
        let out = apply_generator(&e1, 0, &eps).unwrap();
        assert_eq!(out.scalar_value(), qi(9));
    }

    #[test]
    fn cancellation_removes_entries() {
        let f = FieldSpec::Rational;
        let mut t = Tensor::zero(f, 2, 1);
        t.insert_add(vec![0], qi(3));
        t.insert_add(vec![0], qi(-3));
        assert!(t.is_zero());
        assert_eq!(t.nnz(), 0);
    }

    #[test]
    fn swap_two_legs() {
        let f = FieldSpec::Rational;
        let mut t = Tensor::zero(f, 2, 2);
        t.insert_add(vec![0, 1], qi(2));
        let s = t.swap2();
        assert_eq!(s.get(&[1, 0]), qi(2));
        assert!(s.get(&[0, 1]).is_zero());
    }
}
