use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Non-negative integer weight per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexWeights(Vec<u32>);

impl VertexWeights {
    pub fn ones(n: usize) -> Self {
        VertexWeights(vec![1; n])
    }

    pub fn zeros(n: usize) -> Self {
        VertexWeights(vec![0; n])
    }

    /// Indicator weights of `s` on `n` vertices.
    pub fn indicator(n: usize, s: VertexSet) -> Self {
        VertexWeights((0..n).map(|u| s.contains(u) as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `q(S)`.
    pub fn weight_of(&self, s: VertexSet) -> u32 {
        s.iter().map(|u| self.0[u]).sum()
    }

    /// Vertices with weight at least one.
    pub fn support(&self) -> VertexSet {
        self.0.iter().enumerate().filter(|(_, &w)| w > 0).map(|(u, _)| u).collect()
    }

    /// Copy with every weight outside `s` set to zero.
    pub fn restricted_to(&self, s: VertexSet) -> Self {
        VertexWeights(
            self.0.iter().enumerate().map(|(u, &w)| if s.contains(u) { w } else { 0 }).collect(),
        )
    }

    /// Weights of the members of `s`, in ascending vertex order.
    pub fn project(&self, s: VertexSet) -> Self {
        VertexWeights(s.iter().map(|u| self.0[u]).collect())
    }

    pub fn with(&self, u: usize, w: u32) -> Self {
        let mut v = self.0.clone();
        v[u] = w;
        VertexWeights(v)
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &VertexWeights) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn max(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Errors unless the vector has one entry per vertex of an `n`-vertex graph.
    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::WeightLength { expected: n, got: self.0.len() });
        }
        Ok(())
    }

    /// Parses `"a,b,c"`.
    pub fn parse_csv(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(VertexWeights(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::InvalidArgument(format!("bad weight {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(VertexWeights)
    }
}

impl From<Vec<u32>> for VertexWeights {
    fn from(v: Vec<u32>) -> Self {
        VertexWeights(v)
    }
}

impl Index<usize> for VertexWeights {
    type Output = u32;
    fn index(&self, u: usize) -> &u32 {
        &self.0[u]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn support_and_totals() {
        let q = VertexWeights::from(vec![2, 0, 1, 0, 3]);
        assert_eq!(q.support(), VertexSet::from_vertices([0, 2, 4]));
        assert_eq!(q.total(), 6);
        assert_eq!(q.weight_of(VertexSet::from_vertices([0, 1, 2])), 3);
        assert_eq!(q.restricted_to(VertexSet::from_vertices([4])).as_slice(), &[0, 0, 0, 0, 3]);
        assert_eq!(q.project(VertexSet::from_vertices([2, 4])).as_slice(), &[1, 3]);
        assert!(VertexWeights::from(vec![1, 0, 1, 0, 0]).le(&q));
        assert!(!VertexWeights::ones(5).le(&q));
    }

    #[test]
    fn csv_parsing() {
        assert_eq!(VertexWeights::parse_csv("2, 2,2").unwrap().as_slice(), &[2, 2, 2]);
        assert!(VertexWeights::parse_csv("1,x").is_err());
        assert!(VertexWeights::parse_csv("").unwrap().is_empty());
    }
}
