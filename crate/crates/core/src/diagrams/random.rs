//! Seeded random connected planar diagrams for fuzzing.

use rand::prelude::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{connectivity, Diagram, DiagramError, Generator};

const MAX_ATTEMPTS: usize = 1000;

/// Sampling weights: multiplication and comultiplication carry 60% between
/// them so widths stay alive; the rest is spread over the other generators.
fn weighted_pick(rng: &mut ChaCha8Rng, candidates: &[(Generator, u32)]) -> Generator {
    let total: u32 = candidates.iter().map(|(_, w)| w).sum();
    let mut roll = rng.random_range(0..total);
    for (g, w) in candidates {
        if roll < *w {
            return *g;
        }
        roll -= w;
    }
    candidates.last().expect("nonempty").0
}

fn weight(g: Generator) -> u32 {
    match g {
        Generator::Mul | Generator::Comul => 30,
        Generator::Id => 16,
        Generator::Cup | Generator::Cap => 8,
        Generator::Unit | Generator::Counit => 4,
    }
}

/// One slice consuming `width` wires, staying within `max_width` outputs.
fn random_slice(rng: &mut ChaCha8Rng, width: usize, max_width: usize) -> Vec<Generator> {
    loop {
        let mut slice = Vec::new();
        let mut remaining = width;
        let mut out = 0usize;
        let mut zero_arity_budget = 2usize;
        while remaining > 0 || slice.is_empty() {
            let mut candidates: Vec<(Generator, u32)> = Vec::new();
            for g in [
                Generator::Id,
                Generator::Mul,
                Generator::Comul,
                Generator::Unit,
                Generator::Counit,
                Generator::Cup,
                Generator::Cap,
            ] {
                if g.in_arity() > remaining {
                    continue;
                }
                if g.in_arity() == 0 {
                    if zero_arity_budget == 0 {
                        continue;
                    }
                    // a zero-input generator is only forced on an empty width
                    if remaining > 0 && rng.random_range(0..10) < 8 {
                        continue;
                    }
                }
                // leave room for the wires still to be consumed
                let floor_rest = remaining.saturating_sub(g.in_arity()).div_ceil(2);
                if out + g.out_arity() + floor_rest > max_width {
                    continue;
                }
                candidates.push((g, weight(g)));
            }
            if candidates.is_empty() {
                break;
            }
            let g = weighted_pick(rng, &candidates);
            if g.in_arity() == 0 {
                zero_arity_budget -= 1;
            }
            remaining -= g.in_arity();
            out += g.out_arity();
            slice.push(g);
            if remaining == 0 && width == 0 {
                break;
            }
        }
        if remaining == 0 && !slice.is_empty() && out <= max_width {
            return slice;
        }
    }
}

/// Deterministic-for-a-seed connected diagram with at most `max_gens`
/// generator occurrences and every interface width at most `max_width`.
/// Disconnected candidates are rejected and retried; after
/// [`MAX_ATTEMPTS`] rejections the generator gives up.
pub fn random_connected_diagram(
    seed: u64,
    max_gens: usize,
    max_width: usize,
) -> Result<Diagram, DiagramError> {
    assert!(max_width >= 2, "need width for at least one binary generator");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _attempt in 0..MAX_ATTEMPTS {
        let width_choices: Vec<usize> = [0usize, 1, 1, 2, 2, 3]
            .into_iter()
            .filter(|&w| w <= max_width)
            .collect();
        let m = *width_choices.choose(&mut rng).expect("width choices");
        let target: usize = rng.random_range(1..=max_gens);
        let mut slices: Vec<Vec<Generator>> = Vec::new();
        let mut width = m;
        let mut used = 0usize;
        while used < target {
            if width == 0 && !slices.is_empty() {
                break;
            }
            let slice = random_slice(&mut rng, width, max_width);
            used += slice.len();
            width = slice.iter().map(Generator::out_arity).sum();
            slices.push(slice);
        }
        if slices.is_empty() {
            continue;
        }
        let Ok(d) = Diagram::new(slices) else { continue };
        if !d.has_non_identity() {
            continue;
        }
        if d.generator_count() > max_gens {
            continue;
        }
        if connectivity(&d) == 1 {
            return Ok(d);
        }
    }
    Err(DiagramError::GiveUp(MAX_ATTEMPTS))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let a = random_connected_diagram(7, 8, 4).unwrap();
        let b = random_connected_diagram(7, 8, 4).unwrap();
        assert_eq!(a, b);
        let c = random_connected_diagram(8, 8, 4).unwrap();
        // different seeds usually differ; just make sure both are valid
        assert_eq!(connectivity(&c), 1);
    }

    #[test]
    fn outputs_are_connected_and_bounded() {
        for seed in 0..200 {
            let d = random_connected_diagram(seed, 8, 4).unwrap();
            assert_eq!(connectivity(&d), 1, "seed {seed}: {d}");
            assert!(d.has_non_identity());
            assert!(d.generator_count() <= 8);
            assert!(d.widths().into_iter().all(|w| w <= 4), "seed {seed}: {d}");
        }
    }
}
