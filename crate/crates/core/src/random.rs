//! Seeded generation of random valid skew-gentle triples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::triple::{validate_triple, RawArrow, RawPresentation, SkewGentleTriple};

struct Draft {
    source: usize,
    target: usize,
    degree: i64,
    special: bool,
}

/// Generates a random raw presentation with between 2 and `max_vertices`
/// vertices which always satisfies the skew-gentle axioms.  The same seed
/// always yields the same presentation.
pub fn random_raw(seed: u64, max_vertices: usize, characteristic: u64) -> RawPresentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_vertices.max(2));
    let mut outdeg = vec![0usize; n];
    let mut indeg = vec![0usize; n];
    let mut drafts: Vec<Draft> = Vec::new();
    let push = |drafts: &mut Vec<Draft>, s: usize, t: usize, special: bool, outdeg: &mut [usize], indeg: &mut [usize]| {
        outdeg[s] += 1;
        indeg[t] += 1;
        drafts.push(Draft {
            source: s,
            target: t,
            degree: 0,
            special,
        });
    };

    // A randomly oriented spanning path keeps the quiver connected.
    for i in 1..n {
        if rng.gen_bool(0.5) {
            push(&mut drafts, i - 1, i, false, &mut outdeg, &mut indeg);
        } else {
            push(&mut drafts, i, i - 1, false, &mut outdeg, &mut indeg);
        }
    }
    let extra = rng.gen_range(0..=n);
    for _ in 0..extra {
        let s = rng.gen_range(0..n);
        let t = if rng.gen_bool(0.15) { s } else { rng.gen_range(0..n) };
        if outdeg[s] < 2 && indeg[t] < 2 {
            push(&mut drafts, s, t, false, &mut outdeg, &mut indeg);
        }
    }
    for v in 0..n {
        if outdeg[v] < 2 && indeg[v] < 2 && rng.gen_bool(0.35) {
            push(&mut drafts, v, v, true, &mut outdeg, &mut indeg);
        }
    }
    for d in drafts.iter_mut() {
        if !d.special {
            d.degree = rng.gen_range(-2..=2);
        }
    }

    // Relations: at every vertex the pairs in S and the pairs outside S must
    // both be partial matchings between incoming and outgoing arrows.
    let mut relations: Vec<(usize, usize)> = Vec::new();
    for v in 0..n {
        let ins: Vec<usize> = (0..drafts.len()).filter(|&i| drafts[i].target == v).collect();
        let outs: Vec<usize> = (0..drafts.len()).filter(|&i| drafts[i].source == v).collect();
        let special = ins.iter().copied().find(|&i| drafts[i].special);
        if let Some(eps) = special {
            let x = ins.iter().copied().find(|&i| i != eps);
            let y = outs.iter().copied().find(|&i| i != eps);
            if let (Some(x), Some(y)) = (x, y) {
                relations.push((x, y));
            }
            continue;
        }
        let pairs: Vec<(usize, usize)> = ins
            .iter()
            .flat_map(|&x| outs.iter().map(move |&y| (x, y)))
            .collect();
        let is_matching = |set: &[(usize, usize)]| {
            set.iter().enumerate().all(|(i, p)| {
                set.iter()
                    .skip(i + 1)
                    .all(|q| p.0 != q.0 && p.1 != q.1)
            })
        };
        let mut options = Vec::new();
        for mask in 0u32..(1 << pairs.len()) {
            let chosen: Vec<(usize, usize)> = (0..pairs.len())
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| pairs[i])
                .collect();
            let rest: Vec<(usize, usize)> = (0..pairs.len())
                .filter(|&i| mask & (1 << i) == 0)
                .map(|i| pairs[i])
                .collect();
            if is_matching(&chosen) && is_matching(&rest) {
                options.push(chosen);
            }
        }
        let pick = rng.gen_range(0..options.len());
        relations.extend(options[pick].iter().copied());
    }

    let mut letters = (b'a'..=b'z').map(|c| (c as char).to_string());
    let names: Vec<String> = drafts
        .iter()
        .map(|d| {
            if d.special {
                format!("e{}", d.source + 1)
            } else {
                letters.next().expect("fewer than 27 ordinary arrows")
            }
        })
        .collect();
    RawPresentation {
        characteristic,
        vertices: (1..=n).map(|i| i.to_string()).collect(),
        arrows: drafts
            .iter()
            .zip(&names)
            .map(|(d, id)| RawArrow {
                id: id.clone(),
                source: (d.source + 1).to_string(),
                target: (d.target + 1).to_string(),
                degree: d.degree,
            })
            .collect(),
        relations: relations
            .iter()
            .map(|&(first, second)| vec![names[second].clone(), names[first].clone()])
            .collect(),
        special: drafts
            .iter()
            .zip(&names)
            .filter(|(d, _)| d.special)
            .map(|(_, id)| id.clone())
            .collect(),
    }
}

/// Validated form of [`random_raw`].
pub fn random_triple(seed: u64, max_vertices: usize, characteristic: u64) -> SkewGentleTriple {
    validate_triple(&random_raw(seed, max_vertices, characteristic))
        .expect("random generator produces valid triples")
}
