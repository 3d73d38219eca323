use super::{Embedding, PatternKind};
use crate::error::DecideError;
use crate::graph::LabeledGraph;

fn emb(g: &LabeledGraph, roles: &[&str], idx: &[usize]) -> Embedding {
    Embedding(roles.iter().zip(idx).map(|(r, &i)| (r.to_string(), g.vertices()[i].clone())).collect())
}

/// A vertex with a missing edge on one side and a strictly even edge on the
/// other, or failing that a vertex missing edges to both ends of an edge.
fn non_complete(g: &LabeledGraph) -> Option<(PatternKind, Embedding)> {
    let n = g.len();
    for x in 0..n {
        for y in 0..n {
            if y == x || g.label_at(x, y).is_some() {
                continue;
            }
            for z in 0..n {
                if z != x && z != y && g.label_at(x, z).is_some_and(|l| l >= 4) {
                    let k = PatternKind::NonCompleteStrictlyEven;
                    return Some((k.clone(), emb(g, k.roles(), &[x, y, z])));
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in y + 1..n {
                if x != y && x != z && g.label_at(y, z).is_some() && g.label_at(x, y).is_none() && g.label_at(x, z).is_none()
                {
                    let k = PatternKind::RightAngledNonJoin;
                    return Some((k.clone(), emb(g, k.roles(), &[x, y, z])));
                }
            }
        }
    }
    None
}

fn tri1(g: &LabeledGraph) -> Option<(PatternKind, Embedding)> {
    let n = g.len();
    for x in 0..n {
        for y in 0..n {
            for z in y + 1..n {
                if x == y || x == z {
                    continue;
                }
                let (Some(a), Some(b), Some(c)) = (g.label_at(x, y), g.label_at(x, z), g.label_at(y, z)) else {
                    continue;
                };
                if !((a >= 6 && b >= 4) || (b >= 6 && a >= 4)) {
                    continue;
                }
                // order the three edges by label, ties by position
                let mut edges = [(a, x, y), (b, x, z), (c, y, z)];
                edges.sort_by(|p, q| q.0.cmp(&p.0));
                let (e1, e2, e3) = (edges[0], edges[1], edges[2]);
                let u = if e1.1 == e2.1 || e1.1 == e2.2 { e1.1 } else { e1.2 };
                let v = if e1.1 == u { e1.2 } else { e1.1 };
                let w = if e2.1 == u { e2.2 } else { e2.1 };
                let k = PatternKind::Tri1 { r: e1.0 / 2, k: e2.0 / 2, l: e3.0 / 2 };
                return Some((k.clone(), emb(g, k.roles(), &[u, v, w])));
            }
        }
    }
    None
}

fn tri2(g: &LabeledGraph) -> Option<(PatternKind, Embedding)> {
    let n = g.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.label_at(a, b) == Some(4) && g.label_at(a, c) == Some(4) && g.label_at(b, c) == Some(4) {
                    let k = PatternKind::Tri2T444;
                    return Some((k.clone(), emb(g, k.roles(), &[a, b, c])));
                }
            }
        }
    }
    None
}

fn quad(g: &LabeledGraph) -> Option<(PatternKind, Embedding)> {
    let n = g.len();
    let l = |a: usize, b: usize| g.label_at(a, b);
    let mut found: [Option<Vec<usize>>; 3] = [None, None, None];
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let s = [a, b, c, d];
                    let complete = (0..4).all(|i| (i + 1..4).all(|j| l(s[i], s[j]).is_some_and(|x| x <= 4)));
                    if !complete {
                        continue;
                    }
                    let deg4 = |x: usize| s.iter().filter(|&&y| y != x && l(x, y) == Some(4)).count();
                    let nfour = s.iter().map(|&x| deg4(x)).sum::<usize>() / 2;
                    // star: one centre with three 4-edges, nothing else
                    if found[0].is_none() && nfour == 3 {
                        if let Some(&u) = s.iter().find(|&&x| deg4(x) == 3) {
                            let mut rest: Vec<usize> = s.iter().copied().filter(|&x| x != u).collect();
                            rest.sort_unstable();
                            found[0] = Some(vec![u, rest[0], rest[1], rest[2]]);
                        }
                    }
                    // path w2 - u - w1 - v of 4-edges
                    if found[1].is_none() && nfour == 3 && s.iter().all(|&x| (1..=2).contains(&deg4(x))) {
                        let u = *s.iter().find(|&&x| deg4(x) == 2).expect("path has an interior vertex");
                        let w1 = *s.iter().find(|&&x| x != u && deg4(x) == 2 && l(u, x) == Some(4)).unwrap();
                        let w2 = *s.iter().find(|&&x| x != w1 && l(u, x) == Some(4)).unwrap();
                        let v = *s.iter().find(|&&x| x != u && l(w1, x) == Some(4)).unwrap();
                        found[1] = Some(vec![u, v, w1, w2]);
                    }
                    // 4-cycle u - w1 - v - w2 with label-2 diagonals
                    if found[2].is_none() && nfour == 4 && s.iter().all(|&x| deg4(x) == 2) {
                        let u = a;
                        let v = *s.iter().find(|&&x| x != u && l(u, x) == Some(2)).unwrap();
                        let mut ws: Vec<usize> = s.iter().copied().filter(|&x| x != u && x != v).collect();
                        ws.sort_unstable();
                        found[2] = Some(vec![u, v, ws[0], ws[1]]);
                    }
                }
            }
        }
    }
    let kinds = [PatternKind::QuadA, PatternKind::QuadB, PatternKind::QuadC];
    for (k, f) in kinds.into_iter().zip(found) {
        if let Some(idx) = f {
            return Some((k.clone(), emb(g, k.roles(), &idx)));
        }
    }
    None
}

/// Finds a forbidden pattern inside a factor that is not one of the allowed
/// building blocks. Checks run in a fixed order: missing edges, a vertex with
/// labels at least 6 and 4, `T(4,4,4)`, then the three 4-vertex graphs.
pub fn forbidden_pattern_scan(g: &LabeledGraph) -> Result<(PatternKind, Embedding), DecideError> {
    non_complete(g)
        .or_else(|| tri1(g))
        .or_else(|| tri2(g))
        .or_else(|| quad(g))
        .ok_or_else(|| DecideError::NoPattern(g.to_string().replace('\n', "; ")))
}
