//! Reference computations that share no code with the library.
//!
//! Roots come from root strings over a doubled inner-product matrix built from
//! the Dynkin edge list and root lengths, not from the Cartan matrix or from
//! reflections. Everything works on plain integer vectors.

#![allow(dead_code)]

use std::collections::HashSet;

pub type Vector = Vec<i32>;

/// Every (family, rank) the classification tests sweep.
pub fn algebras_up_to(max_rank: usize) -> Vec<(char, usize)> {
    let mut out = Vec::new();
    for r in 1..=max_rank {
        out.push(('A', r));
    }
    for r in 2..=max_rank {
        out.push(('B', r));
    }
    for r in 3..=max_rank {
        out.push(('C', r));
    }
    for r in 4..=max_rank {
        out.push(('D', r));
    }
    for r in 6..=max_rank.min(8) {
        out.push(('E', r));
    }
    if max_rank >= 4 {
        out.push(('F', 4));
    }
    if max_rank >= 2 {
        out.push(('G', 2));
    }
    out
}

pub fn name(family: char, rank: usize) -> String {
    format!("{family}{rank}")
}

/// Edges of the Dynkin diagram, 1-based.
pub fn dynkin_edges(family: char, rank: usize) -> Vec<(usize, usize)> {
    let chain = |n: usize| (1..n).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match family {
        'A' | 'B' | 'C' | 'F' | 'G' => chain(rank),
        'D' => {
            let mut e = chain(rank - 1);
            e.push((rank - 2, rank));
            e
        }
        'E' => {
            let mut e = vec![(1, 3), (2, 4)];
            e.extend((3..rank).map(|i| (i, i + 1)));
            e
        }
        _ => panic!("unknown family {family}"),
    }
}

/// Twice the squared length of each simple root.
fn lengths(family: char, rank: usize) -> Vec<i32> {
    (1..=rank)
        .map(|i| match (family, i) {
            ('B', i) if i == rank => 2,
            ('C', i) if i < rank => 2,
            ('F', 3) | ('F', 4) => 2,
            ('G', 1) => 2,
            ('G', 2) => 6,
            _ => 4,
        })
        .collect()
}

/// Doubled Gram matrix of the simple roots.
pub fn gram(family: char, rank: usize) -> Vec<Vec<i32>> {
    let len = lengths(family, rank);
    let mut g = vec![vec![0; rank]; rank];
    for i in 0..rank {
        g[i][i] = len[i];
    }
    for (a, b) in dynkin_edges(family, rank) {
        let (la, lb) = (len[a - 1], len[b - 1]);
        let v = match (la == lb, family) {
            (true, _) => -la / 2,
            (false, 'G') => -3,
            (false, _) => -la.min(lb),
        };
        g[a - 1][b - 1] = v;
        g[b - 1][a - 1] = v;
    }
    g
}

fn pair(g: &[Vec<i32>], x: &[i32], i: usize) -> i32 {
    x.iter().zip(&g[i]).map(|(a, b)| a * b).sum()
}

/// Positive roots by root strings, height by height.
pub fn positive_roots(family: char, rank: usize) -> Vec<Vector> {
    let g = gram(family, rank);
    let mut known: HashSet<Vector> = HashSet::new();
    let mut layer: Vec<Vector> = (0..rank)
        .map(|i| {
            let mut v = vec![0; rank];
            v[i] = 1;
            v
        })
        .collect();
    let mut all = Vec::new();
    while !layer.is_empty() {
        for r in &layer {
            known.insert(r.clone());
        }
        all.extend(layer.iter().cloned());
        let mut next = HashSet::new();
        for beta in &layer {
            for i in 0..rank {
                // p: how far the string extends downwards
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let cartan = 2 * pair(&g, beta, i) / g[i][i];
                let q = p - cartan;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        let mut next: Vec<_> = next.into_iter().collect();
        next.sort();
        layer = next;
    }
    all.sort();
    all
}

pub fn all_roots(family: char, rank: usize) -> Vec<Vector> {
    let pos = positive_roots(family, rank);
    let mut out: Vec<Vector> = pos
        .iter()
        .map(|r| r.iter().map(|c| -c).collect())
        .chain(pos.iter().cloned())
        .collect();
    out.sort();
    out
}

pub fn dim_g(family: char, rank: usize) -> usize {
    let l = rank;
    match family {
        'A' => l * (l + 2),
        'B' | 'C' => l * (2 * l + 1),
        'D' => l * (2 * l - 1),
        'E' => match l {
            6 => 78,
            7 => 133,
            8 => 248,
            _ => panic!("no E{l}"),
        },
        'F' => 52,
        'G' => 14,
        _ => panic!("unknown family {family}"),
    }
}

pub fn highest_root(family: char, rank: usize) -> Vector {
    positive_roots(family, rank)
        .into_iter()
        .max_by_key(|r| r.iter().sum::<i32>())
        .unwrap()
}

pub fn degree(root: &[i32], pi1: &[usize]) -> i32 {
    pi1.iter().map(|&v| root[v - 1]).sum()
}

pub fn depth(roots: &[Vector], pi1: &[usize]) -> i32 {
    roots
        .iter()
        .map(|r| degree(r, pi1).abs())
        .max()
        .unwrap_or(0)
}

pub fn subsets(rank: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..(1 << rank)).map(move |m| (1..=rank).filter(|v| m & (1 << (v - 1)) != 0).collect())
}

/// Degree-one roots whose label-one content is exactly `gamma`.
pub fn r_gamma(roots: &[Vector], pi1: &[usize], gamma: usize) -> Vec<Vector> {
    roots
        .iter()
        .filter(|r| pi1.iter().all(|&v| r[v - 1] == i32::from(v == gamma)))
        .cloned()
        .collect()
}

fn add(a: &[i32], b: &[i32]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn bracket_closes(roots: &HashSet<Vector>, carrier: &[Vector]) -> bool {
    carrier
        .iter()
        .any(|a| carrier.iter().any(|b| roots.contains(&add(a, b))))
}

/// Admissibility read off brackets: at least two vertices, and no
/// `[g(gamma), g(gamma)]` is nonzero.
pub fn admissible_by_brackets(roots: &[Vector], pi1: &[usize]) -> bool {
    let set: HashSet<Vector> = roots.iter().cloned().collect();
    pi1.len() >= 2
        && pi1
            .iter()
            .all(|&g| !bracket_closes(&set, &r_gamma(roots, pi1, g)))
}

/// The sum of the modules `R(gamma)`, `gamma` in `part`, is commutative.
pub fn abelian_by_brackets(roots: &[Vector], pi1: &[usize], part: &[usize]) -> bool {
    let set: HashSet<Vector> = roots.iter().cloned().collect();
    let carrier: Vec<Vector> = part.iter().flat_map(|&g| r_gamma(roots, pi1, g)).collect();
    !bracket_closes(&set, &carrier)
}

fn path(edges: &[(usize, usize)], from: usize, to: usize) -> Vec<usize> {
    // depth-first search in a tree
    fn go(edges: &[(usize, usize)], at: usize, to: usize, seen: &mut Vec<usize>) -> bool {
        seen.push(at);
        if at == to {
            return true;
        }
        for &(a, b) in edges {
            let next = if a == at {
                b
            } else if b == at {
                a
            } else {
                continue;
            };
            if !seen.contains(&next) && go(edges, next, to, seen) {
                return true;
            }
        }
        seen.pop();
        false
    }
    let mut seen = Vec::new();
    assert!(go(edges, from, to, &mut seen));
    seen
}

/// Dynkin diagrams are trees: a split alternates exactly when the path
/// between any two vertices of one part meets the other part.
pub fn alternate_by_paths(edges: &[(usize, usize)], plus: &[usize], minus: &[usize]) -> bool {
    let separated = |same: &[usize], other: &[usize]| {
        same.iter().enumerate().all(|(i, &a)| {
            same[i + 1..]
                .iter()
                .all(|&b| path(edges, a, b).iter().any(|v| other.contains(v)))
        })
    };
    separated(plus, minus) && separated(minus, plus)
}

/// Unordered splits of `pi1` into two nonempty parts, `pi1[0]` in plus.
pub fn splits(pi1: &[usize]) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = pi1.len();
    if n < 2 {
        return Vec::new();
    }
    (0..(1u32 << (n - 1)) - 1)
        .map(|m| {
            let mut plus = vec![pi1[0]];
            let mut minus = Vec::new();
            for (i, &v) in pi1[1..].iter().enumerate() {
                if m & (1 << i) != 0 {
                    plus.push(v);
                } else {
                    minus.push(v);
                }
            }
            (plus, minus)
        })
        .collect()
}
