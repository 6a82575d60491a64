//! Homomorphisms between finite algebras of the same signature.

use crate::elemset::Elem;
use crate::signature::Signature;

/// Why `map` fails to be a homomorphism, or `None` if it is one.
pub fn hom_failure(src: &Signature<'_>, dst: &Signature<'_>, map: &[Elem]) -> Option<String> {
    if !src.same_shape(dst) {
        return Some("signatures differ".into());
    }
    if map.len() != src.size() {
        return Some(format!("map has {} entries for {} elements", map.len(), src.size()));
    }
    if let Some(&x) = map.iter().find(|&&x| x >= dst.size()) {
        return Some(format!("map value {x} outside the codomain"));
    }
    let (n, m) = (src.size(), dst.size());
    for ((name, c), (_, d)) in src.constants.iter().zip(&dst.constants) {
        if map[*c] != *d {
            return Some(format!("constant {name} is not preserved"));
        }
    }
    for ((name, s), (_, t)) in src.unary.iter().zip(&dst.unary) {
        for x in 0..n {
            if map[s[x]] != t[map[x]] {
                return Some(format!("{name} is not preserved at {}", src.names[x]));
            }
        }
    }
    for ((name, s), (_, t)) in src.binary.iter().zip(&dst.binary) {
        for x in 0..n {
            for y in 0..n {
                if map[s[x * n + y]] != t[map[x] * m + map[y]] {
                    return Some(format!(
                        "{name} is not preserved at ({}, {})",
                        src.names[x], src.names[y]
                    ));
                }
            }
        }
    }
    None
}

pub fn is_homomorphism(src: &Signature<'_>, dst: &Signature<'_>, map: &[Elem]) -> bool {
    hom_failure(src, dst, map).is_none()
}

struct Search<'s, 'a> {
    src: &'s Signature<'a>,
    dst: &'s Signature<'a>,
    injective: bool,
    limit: usize,
    found: Vec<Vec<Elem>>,
}

impl Search<'_, '_> {
    /// Sets `f(x) = y` and everything it forces. Returns false on conflict.
    fn assign(&self, f: &mut [Option<Elem>], used: &mut [bool], x: Elem, y: Elem) -> bool {
        let (n, m) = (self.src.size(), self.dst.size());
        let mut pending = vec![(x, y)];
        while let Some((x, y)) = pending.pop() {
            match f[x] {
                Some(z) if z == y => continue,
                Some(_) => return false,
                None => {}
            }
            if self.injective {
                if used[y] {
                    return false;
                }
                used[y] = true;
            }
            f[x] = Some(y);
            for ((_, s), (_, t)) in self.src.unary.iter().zip(&self.dst.unary) {
                pending.push((s[x], t[y]));
            }
            for u in 0..n {
                let Some(v) = f[u] else { continue };
                for ((_, s), (_, t)) in self.src.binary.iter().zip(&self.dst.binary) {
                    pending.push((s[x * n + u], t[y * m + v]));
                    pending.push((s[u * n + x], t[v * m + y]));
                }
            }
        }
        true
    }

    fn run(&mut self, f: Vec<Option<Elem>>, used: Vec<bool>) {
        if self.found.len() >= self.limit {
            return;
        }
        let Some(x) = f.iter().position(Option::is_none) else {
            self.found.push(f.into_iter().map(|v| v.expect("total")).collect());
            return;
        };
        for y in 0..self.dst.size() {
            let (mut g, mut u) = (f.clone(), used.clone());
            if self.assign(&mut g, &mut u, x, y) {
                self.run(g, u);
            }
        }
    }
}

fn search(src: &Signature<'_>, dst: &Signature<'_>, injective: bool, limit: usize) -> Vec<Vec<Elem>> {
    if !src.same_shape(dst) || (injective && src.size() > dst.size()) {
        return Vec::new();
    }
    let mut s = Search {
        src,
        dst,
        injective,
        limit,
        found: Vec::new(),
    };
    let mut f = vec![None; src.size()];
    let mut used = vec![false; dst.size()];
    for ((_, c), (_, d)) in src.constants.iter().zip(&dst.constants) {
        if !s.assign(&mut f, &mut used, *c, *d) {
            return Vec::new();
        }
    }
    s.run(f, used);
    s.found
}

/// Every homomorphism `src -> dst`, in lexicographic order of image vectors.
pub fn homomorphisms(src: &Signature<'_>, dst: &Signature<'_>) -> Vec<Vec<Elem>> {
    search(src, dst, false, usize::MAX)
}

/// Every injective homomorphism `src -> dst`.
pub fn embeddings(src: &Signature<'_>, dst: &Signature<'_>) -> Vec<Vec<Elem>> {
    search(src, dst, true, usize::MAX)
}

pub fn find_isomorphism(src: &Signature<'_>, dst: &Signature<'_>) -> Option<Vec<Elem>> {
    if src.size() != dst.size() {
        return None;
    }
    search(src, dst, true, 1).pop()
}

pub fn is_isomorphic(src: &Signature<'_>, dst: &Signature<'_>) -> bool {
    find_isomorphism(src, dst).is_some()
}

/// `g ∘ f`.
pub fn compose(f: &[Elem], g: &[Elem]) -> Vec<Elem> {
    f.iter().map(|&x| g[x]).collect()
}

pub fn is_injective(map: &[Elem]) -> bool {
    let mut seen = std::collections::HashSet::new();
    map.iter().all(|x| seen.insert(*x))
}
