//! Isomorphism testing and canonical codes.
//!
//! Orders up to [`LEX_SEARCH_MAX`] use a plain backtracking search that
//! assigns images to `0, 1, 2, ...` in increasing order, so the first witness
//! found is the lexicographically least one. Larger orders (up to
//! [`MAX_EXACT_ORDER`]) use individualization and colour refinement run
//! jointly on both graphs.

use serde::{Deserialize, Serialize};

use super::graph::{Graph, Permutation};
use super::vertex_set::VertexSet;
use crate::error::{Error, Result};

pub const LEX_SEARCH_MAX: usize = 8;
pub const MAX_EXACT_ORDER: usize = 32;
/// Largest order for which the literal minimum-over-permutations code is computed.
pub const MIN_CODE_MAX: usize = 8;

fn check_pair(g: &Graph, h: &Graph) -> Result<()> {
    g.same_order(h)?;
    if g.order() > MAX_EXACT_ORDER {
        return Err(Error::OrderTooLarge {
            n: g.order(),
            max: MAX_EXACT_ORDER,
        });
    }
    Ok(())
}

fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable();
    d
}

/// A permutation `p` with `g.permuted(p) == h`, if one exists.
pub fn isomorphic(g: &Graph, h: &Graph) -> Result<Option<Permutation>> {
    check_pair(g, h)?;
    if g.edge_count() != h.edge_count() || sorted_degrees(g) != sorted_degrees(h) {
        return Ok(None);
    }
    let found = if g.order() <= LEX_SEARCH_MAX {
        lex_search(g, h)
    } else {
        RefinedSearch::new(g, h).run(None)
    };
    debug_assert!(found.as_ref().is_none_or(|p| p.is_isomorphism(g, h)));
    Ok(found)
}

/// An isomorphism from `g` onto `h` sending `from` to `to`, if one exists.
pub fn isomorphism_mapping(g: &Graph, h: &Graph, from: usize, to: usize) -> Result<Option<Permutation>> {
    check_pair(g, h)?;
    if g.degree(from) != h.degree(to) || sorted_degrees(g) != sorted_degrees(h) {
        return Ok(None);
    }
    Ok(RefinedSearch::new(g, h).run(Some((from, to))))
}

fn lex_search(g: &Graph, h: &Graph) -> Option<Permutation> {
    let n = g.order();
    let mut images = vec![usize::MAX; n];
    fn go(g: &Graph, h: &Graph, i: usize, used: u64, images: &mut [usize]) -> bool {
        let n = g.order();
        if i == n {
            return true;
        }
        // images of the already-placed neighbours of i
        let mut want = 0u64;
        for j in VertexSet(g.row(i) & ((1u64 << i) - 1)) {
            want |= 1 << images[j];
        }
        let deg = g.degree(i);
        for c in 0..n {
            if used >> c & 1 == 1 || h.degree(c) != deg || h.row(c) & used != want {
                continue;
            }
            images[i] = c;
            if go(g, h, i + 1, used | 1 << c, images) {
                return true;
            }
        }
        false
    }
    go(g, h, 0, 0, &mut images).then(|| Permutation::from_images(images).expect("bijection"))
}

/// Joint colour refinement over two graphs of the same order.
struct RefinedSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
}

type Colours = Vec<u32>;

impl<'a> RefinedSearch<'a> {
    fn new(g: &'a Graph, h: &'a Graph) -> Self {
        RefinedSearch { g, h }
    }

    fn run(&self, seed: Option<(usize, usize)>) -> Option<Permutation> {
        let n = self.g.order();
        let mut cg = vec![0u32; n];
        let mut ch = vec![0u32; n];
        if let Some((x, y)) = seed {
            cg[x] = 1;
            ch[y] = 1;
        }
        if !refine_pair(self.g, self.h, &mut cg, &mut ch) {
            return None;
        }
        self.descend(cg, ch)
    }

    fn descend(&self, cg: Colours, ch: Colours) -> Option<Permutation> {
        let n = self.g.order();
        let Some(target) = first_nonsingleton(&cg) else {
            let mut images = vec![0usize; n];
            let mut pos_h = vec![0usize; n];
            for (y, &c) in ch.iter().enumerate() {
                pos_h[c as usize] = y;
            }
            for (x, &c) in cg.iter().enumerate() {
                images[x] = pos_h[c as usize];
            }
            let p = Permutation::from_images(images).ok()?;
            return p.is_isomorphism(self.g, self.h).then_some(p);
        };
        let x = (0..n).find(|&v| cg[v] == target).expect("cell is nonempty");
        for y in (0..n).filter(|&v| ch[v] == target) {
            let mut cg2 = individualize(&cg, x);
            let mut ch2 = individualize(&ch, y);
            if refine_pair(self.g, self.h, &mut cg2, &mut ch2) {
                if let Some(p) = self.descend(cg2, ch2) {
                    return Some(p);
                }
            }
        }
        None
    }
}

fn first_nonsingleton(colours: &[u32]) -> Option<u32> {
    let mut count = vec![0u32; colours.len()];
    for &c in colours {
        count[c as usize] += 1;
    }
    count.iter().position(|&c| c > 1).map(|c| c as u32)
}

fn individualize(colours: &[u32], x: usize) -> Colours {
    colours
        .iter()
        .enumerate()
        .map(|(v, &c)| 2 * c + u32::from(v != x))
        .collect()
}

/// Refines both colourings to the coarsest equitable partition, naming cells
/// by the sorted order of their signatures across both graphs. Returns false
/// as soon as the cell sizes disagree.
fn refine_pair(g: &Graph, h: &Graph, cg: &mut Colours, ch: &mut Colours) -> bool {
    let n = g.order();
    loop {
        let before = distinct(cg);
        let sig_g = signatures(g, cg);
        let sig_h = signatures(h, ch);
        let mut all: Vec<&Vec<u32>> = sig_g.iter().chain(sig_h.iter()).collect();
        all.sort();
        all.dedup();
        if all.len() > n {
            return false;
        }
        let name = |s: &Vec<u32>| all.binary_search(&s).expect("present") as u32;
        let new_g: Colours = sig_g.iter().map(name).collect();
        let new_h: Colours = sig_h.iter().map(name).collect();
        let mut count = vec![0i32; all.len()];
        for &c in &new_g {
            count[c as usize] += 1;
        }
        for &c in &new_h {
            count[c as usize] -= 1;
        }
        if count.iter().any(|&c| c != 0) {
            return false;
        }
        *cg = new_g;
        *ch = new_h;
        if distinct(cg) == before {
            return true;
        }
    }
}

fn distinct(colours: &[u32]) -> usize {
    let mut seen: Vec<u32> = colours.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// `[own colour, neighbour count in cell 0, in cell 1, ...]`
fn signatures(g: &Graph, colours: &[u32]) -> Vec<Vec<u32>> {
    let cells = colours.iter().copied().max().map_or(0, |m| m as usize + 1);
    (0..g.order())
        .map(|x| {
            let mut s = vec![0u32; cells + 1];
            s[0] = colours[x];
            for y in g.neighbors(x) {
                s[colours[y] as usize + 1] += 1;
            }
            s
        })
        .collect()
}

/// Refinement of a single graph's colouring with iso-invariant cell names.
fn refine_single(g: &Graph, colours: &mut Colours) {
    loop {
        let before = distinct(colours);
        let sig = signatures(g, colours);
        let mut all: Vec<&Vec<u32>> = sig.iter().collect();
        all.sort();
        all.dedup();
        *colours = sig
            .iter()
            .map(|s| all.binary_search(&s).expect("present") as u32)
            .collect();
        if distinct(colours) == before {
            return;
        }
    }
}

/// Canonical relabelling by exhaustive individualization-refinement: the
/// returned permutation maps `g` onto the least leaf certificate.
pub fn canonical_labeling(g: &Graph) -> Result<(Permutation, Graph)> {
    if g.order() > MAX_EXACT_ORDER {
        return Err(Error::OrderTooLarge {
            n: g.order(),
            max: MAX_EXACT_ORDER,
        });
    }
    let mut colours = vec![0u32; g.order()];
    refine_single(g, &mut colours);
    let mut best: Option<(Graph, Permutation)> = None;
    canon_descend(g, colours, &mut best);
    let (graph, perm) = best.expect("at least one leaf");
    Ok((perm, graph))
}

fn canon_descend(g: &Graph, colours: Colours, best: &mut Option<(Graph, Permutation)>) {
    match first_nonsingleton(&colours) {
        None => {
            let perm = Permutation::from_images(colours.iter().map(|&c| c as usize).collect())
                .expect("discrete colouring is a bijection");
            let image = g.permuted(&perm);
            if best.as_ref().is_none_or(|(b, _)| image.rows() < b.rows()) {
                *best = Some((image, perm));
            }
        }
        Some(target) => {
            for x in (0..g.order()).filter(|&v| colours[v] == target) {
                let mut c2 = individualize(&colours, x);
                refine_single(g, &mut c2);
                canon_descend(g, c2, best);
            }
        }
    }
}

/// Minimum, over all relabellings, of the upper-triangle bit string read in
/// graph6 column order with `x(0,1)` as the most significant bit.
pub fn min_code(g: &Graph) -> Result<u64> {
    let n = g.order();
    if n > MIN_CODE_MAX {
        return Err(Error::OrderTooLarge {
            n,
            max: MIN_CODE_MAX,
        });
    }
    let mut search = MinCode {
        g,
        placed: Vec::with_capacity(n),
        prefix: Vec::with_capacity(n),
        best: None,
    };
    search.descend();
    let best = search.best.expect("some leaf is reached");
    Ok(best
        .iter()
        .enumerate()
        .fold(0u64, |code, (j, &col)| code << j | u64::from(col)))
}

/// Places vertices at positions `0, 1, ...`; the bits of column `j` are the
/// adjacencies of position `j` to positions `0..j`, so the code compares
/// column by column.
struct MinCode<'a> {
    g: &'a Graph,
    placed: Vec<usize>,
    prefix: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl MinCode<'_> {
    fn column(&self, v: usize) -> u32 {
        self.placed
            .iter()
            .fold(0u32, |acc, &p| acc << 1 | self.g.has_edge(p, v) as u32)
    }

    fn descend(&mut self) {
        let n = self.g.order();
        let j = self.placed.len();
        if j == n {
            if self.best.as_ref().is_none_or(|b| self.prefix < *b) {
                self.best = Some(self.prefix.clone());
            }
            return;
        }
        let used: u64 = self.placed.iter().fold(0, |m, &v| m | 1 << v);
        let free: Vec<usize> = (0..n).filter(|&v| used >> v & 1 == 0).collect();
        let cols: Vec<u32> = free.iter().map(|&v| self.column(v)).collect();
        let min_col = *cols.iter().min().expect("free vertex");
        for (&v, &c) in free.iter().zip(&cols) {
            if c != min_col {
                continue;
            }
            if let Some(b) = &self.best {
                // prefix + [c] against the best code's first j+1 columns
                let ord = self.prefix.as_slice().cmp(&b[..j]).then(c.cmp(&b[j]));
                if ord == std::cmp::Ordering::Greater {
                    return;
                }
            }
            self.placed.push(v);
            self.prefix.push(c);
            self.descend();
            self.prefix.pop();
            self.placed.pop();
        }
    }
}

/// Canonical code up to complementation: the smaller of the minimum codes of
/// `g` and of its complement, tagged with the order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct UtcCode {
    pub n: usize,
    pub code: u64,
}

pub fn canonical_form_utc(g: &Graph) -> Result<UtcCode> {
    let code = min_code(g)?.min(min_code(&g.complement())?);
    Ok(UtcCode { n: g.order(), code })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UtcKind {
    Iso,
    IsoToComplement,
    Both,
    Neither,
}

/// Result of comparing two graphs up to complementation, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UtcVerdict {
    pub kind: UtcKind,
    /// maps `g` onto `h`
    pub to_graph: Option<Permutation>,
    /// maps `g` onto the complement of `h`
    pub to_complement: Option<Permutation>,
}

impl UtcVerdict {
    pub fn holds(&self) -> bool {
        self.kind != UtcKind::Neither
    }
}

pub fn isomorphic_up_to_complementation(g: &Graph, h: &Graph) -> Result<UtcVerdict> {
    let to_graph = isomorphic(g, h)?;
    let to_complement = isomorphic(g, &h.complement())?;
    let kind = match (to_graph.is_some(), to_complement.is_some()) {
        (true, true) => UtcKind::Both,
        (true, false) => UtcKind::Iso,
        (false, true) => UtcKind::IsoToComplement,
        (false, false) => UtcKind::Neither,
    };
    Ok(UtcVerdict {
        kind,
        to_graph,
        to_complement,
    })
}

pub fn is_self_complementary(g: &Graph) -> Result<bool> {
    Ok(isomorphic(g, &g.complement())?.is_some())
}

/// Orbit of `x` under the automorphism group.
pub fn orbit(g: &Graph, x: usize) -> Result<VertexSet> {
    let mut orbit = VertexSet::singleton(x);
    for y in 0..g.order() {
        if orbit.contains(y) {
            continue;
        }
        if let Some(p) = isomorphism_mapping(g, g, x, y)? {
            // the orbit is closed under p, so take the whole cycle of x
            let mut z = p.apply(x);
            while z != x {
                orbit.insert(z);
                z = p.apply(z);
            }
            orbit.insert(y);
        }
    }
    Ok(orbit)
}

pub fn is_vertex_transitive(g: &Graph) -> Result<bool> {
    if g.order() > MAX_EXACT_ORDER {
        return Err(Error::OrderTooLarge {
            n: g.order(),
            max: MAX_EXACT_ORDER,
        });
    }
    if !g.is_regular() {
        return Ok(false);
    }
    Ok(orbit(g, 0)?.len() == g.order())
}
