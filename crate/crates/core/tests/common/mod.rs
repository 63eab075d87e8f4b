#![allow(dead_code)]

use treepath::generate::{generate, GenConfig, Generated, PriorityMode, Shape};

pub const SHAPES: [Shape; 4] = [Shape::Chain, Shape::Star, Shape::Random, Shape::Caterpillar];

pub fn shape(i: usize) -> Shape {
    SHAPES[i % SHAPES.len()]
}

/// Deterministic small instances cycling through shapes and sizes.
pub fn corpus(count: u64, max_n: usize, max_p: usize, priority: PriorityMode) -> impl Iterator<Item = (u64, Generated)> {
    (0..count).map(move |seed| {
        let s = seed as usize;
        let n = 2 + (s / 4) % (max_n - 1);
        let p = (s * 7 + 3) % (max_p + 1);
        let extend = [0.5, 0.7, 0.85][s % 3];
        (seed, generate(&GenConfig::new(seed, n, p, shape(s)).priority(priority).extend(extend)))
    })
}
