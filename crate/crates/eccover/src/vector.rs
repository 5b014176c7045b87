//! Small helpers for exact edge vectors.

use crate::ratio::{zero, Rat};

pub fn uniform(m: usize, value: &Rat) -> Vec<Rat> {
    vec![value.clone(); m]
}

pub fn indicator(mults: &[u32]) -> Vec<Rat> {
    mults.iter().map(|&k| Rat::from_integer(k.into())).collect()
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[Rat], by: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * by).collect()
}

/// Componentwise `a <= b`.
pub fn leq(a: &[Rat], b: &[Rat]) -> bool {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn zeros(m: usize) -> Vec<Rat> {
    vec![zero(); m]
}
