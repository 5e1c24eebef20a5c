//! Seifert pictures, height, reducing moves and the Yamada–Vogel reduction of a
//! diagram to a closed braid.
//!
//! Faces of the diagram are exactly the regions of its Seifert picture: at a
//! smoothed crossing the signed arc separates the two corners that the smoothing
//! merges. Two circles `C, C'` are coherent iff exactly one of them has the other
//! on its left. A split diagram is handled one connected piece at a time, with
//! the pieces nested coherently; this is always an allowed placement.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{EdgeEnds, Faces, LinkDiagram, Side};
use crate::error::{Error, Result};
use crate::word::BraidWord;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedArc {
    pub crossing: usize,
    pub circles: (usize, usize),
    pub sign: i8,
}

#[derive(Clone, Debug)]
pub struct SeifertPicture {
    /// Edge labels of each circle in orientation order.
    pub circles: Vec<Vec<u32>>,
    pub arcs: Vec<SignedArc>,
    /// Circles exposed in each region.
    pub regions: Vec<BTreeSet<usize>>,
    /// Connected piece each circle belongs to; crossingless loops get their own.
    pub piece: Vec<usize>,
    circle_of: BTreeMap<u32, usize>,
    left_of: Vec<Vec<bool>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducingArc {
    pub region: usize,
    pub circles: (usize, usize),
    pub edges: ((u32, Side), (u32, Side)),
}

fn circle_edges(d: &LinkDiagram, edges: &BTreeMap<u32, EdgeEnds>) -> Vec<Vec<u32>> {
    let mut done = BTreeSet::new();
    let mut out = Vec::new();
    for &start in edges.keys() {
        if done.contains(&start) {
            continue;
        }
        let mut circ = Vec::new();
        let mut e = start;
        loop {
            done.insert(e);
            circ.push(e);
            let (c, p) = edges[&e].head;
            let x = &d.crossings()[c];
            e = x.ports[x.smoothing_exit(p)];
            if e == start {
                break;
            }
        }
        out.push(circ);
    }
    for &l in d.free_loops() {
        out.push(vec![l]);
    }
    out
}

/// Faces adjacent across a signed arc: the two corners between the smoothed strands.
fn arc_corners(sign: i8) -> (usize, usize) {
    if sign > 0 {
        (1, 3)
    } else {
        (0, 2)
    }
}

pub fn seifert_smooth(d: &LinkDiagram) -> SeifertPicture {
    let edges = d.edges();
    let faces: Faces = d.faces();
    let circles = circle_edges(d, &edges);
    let mut circle_of = BTreeMap::new();
    for (i, c) in circles.iter().enumerate() {
        for &l in c {
            circle_of.insert(l, i);
        }
    }
    let mut arcs = Vec::new();
    for (ci, x) in d.crossings().iter().enumerate() {
        let a = circle_of[&x.ports[0]];
        let b = circle_of[&x.ports[x.smoothing_exit(0) ^ 2]];
        arcs.push(SignedArc { crossing: ci, circles: (a.min(b), a.max(b)), sign: x.sign });
    }
    let mut regions = vec![BTreeSet::new(); faces.count];
    // region adjacency: across an edge (labelled by its circle) or across a signed arc
    let mut links: Vec<Vec<(usize, Option<usize>)>> = vec![Vec::new(); faces.count];
    for (l, e) in &edges {
        let (lf, rf) = (d.edge_face(&faces, e, Side::Left), d.edge_face(&faces, e, Side::Right));
        let c = circle_of[l];
        regions[lf].insert(c);
        regions[rf].insert(c);
        links[lf].push((rf, Some(c)));
        links[rf].push((lf, Some(c)));
    }
    for (ci, x) in d.crossings().iter().enumerate() {
        let (p, q) = arc_corners(x.sign);
        let (f, g) = (faces.corner_face[ci][p], faces.corner_face[ci][q]);
        links[f].push((g, None));
        links[g].push((f, None));
    }
    let comps = d.connected_components();
    let mut piece_of_crossing = vec![0; d.crossing_count()];
    for (k, comp) in comps.iter().enumerate() {
        for &c in comp {
            piece_of_crossing[c] = k;
        }
    }
    let mut piece = Vec::with_capacity(circles.len());
    let mut extra = comps.len();
    for circ in &circles {
        match edges.get(&circ[0]) {
            Some(e) => piece.push(piece_of_crossing[e.tail.0]),
            None => {
                piece.push(extra);
                extra += 1;
            }
        }
    }
    let k = circles.len();
    let mut left_of = vec![vec![false; k]; k];
    for (i, circ) in circles.iter().enumerate() {
        let Some(e) = edges.get(&circ[0]) else { continue };
        let start = d.edge_face(&faces, e, Side::Left);
        let mut seen = vec![false; faces.count];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            for &(g, lab) in &links[f] {
                if lab != Some(i) && !seen[g] {
                    seen[g] = true;
                    queue.push_back(g);
                }
            }
        }
        for (j, other) in circles.iter().enumerate() {
            if j == i || piece[j] != piece[i] {
                continue;
            }
            let f = d.edge_face(&faces, &edges[&other[0]], Side::Left);
            left_of[i][j] = seen[f];
        }
    }
    SeifertPicture { circles, arcs, regions, piece, circle_of, left_of }
}

impl SeifertPicture {
    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn circle_of_edge(&self, l: u32) -> Option<usize> {
        self.circle_of.get(&l).copied()
    }

    /// Whether circle `j` lies on the left of circle `i`.
    pub fn is_left_of(&self, i: usize, j: usize) -> bool {
        self.left_of[i][j]
    }

    pub fn coherent(&self, i: usize, j: usize) -> bool {
        if self.piece[i] != self.piece[j] {
            return true;
        }
        self.left_of[i][j] != self.left_of[j][i]
    }

    pub fn incoherent_pairs(&self) -> Vec<(usize, usize)> {
        let k = self.circles.len();
        let mut out = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                if !self.coherent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn height(&self) -> usize {
        self.incoherent_pairs().len()
    }
}

pub fn height(d: &LinkDiagram) -> usize {
    seifert_smooth(d).height()
}

/// Smallest `(circle pair, region)` among regions exposing an incoherent pair.
pub fn find_reducing_arc(d: &LinkDiagram, s: &SeifertPicture) -> Option<ReducingArc> {
    let bounds = d.face_boundaries();
    let mut best: Option<ReducingArc> = None;
    for (r, exposed) in s.regions.iter().enumerate() {
        let ex: Vec<usize> = exposed.iter().copied().collect();
        for (x, &i) in ex.iter().enumerate() {
            for &j in &ex[x + 1..] {
                if s.coherent(i, j) {
                    continue;
                }
                let pick = |c: usize| bounds[r].iter().filter(|(l, _)| s.circle_of[l] == c).min_by_key(|(l, _)| *l).copied();
                let (Some(a), Some(b)) = (pick(i), pick(j)) else { continue };
                let cand = ReducingArc { region: r, circles: (i, j), edges: (a, b) };
                let better = match &best {
                    None => true,
                    Some(bst) => (cand.circles, cand.region) < (bst.circles, bst.region),
                };
                if better {
                    best = Some(cand);
                }
            }
        }
    }
    best
}

/// Slides the first circle over the second along the arc.
pub fn reduce_once(d: &LinkDiagram, arc: &ReducingArc) -> Result<LinkDiagram> {
    let ((a, sa), (b, sb)) = arc.edges;
    d.finger_move(a, sa, b, sb, true)
}

#[derive(Clone, Debug)]
pub struct YamadaVogel {
    pub braid: BraidWord,
    pub circles: usize,
    pub initial_height: usize,
    pub moves: usize,
    pub heights: Vec<usize>,
    pub diagram: LinkDiagram,
}

/// Reducing moves until height 0, then reads the closed braid.
pub fn yamada_vogel(d: &LinkDiagram) -> Result<YamadaVogel> {
    let mut cur = d.clone();
    let mut pic = seifert_smooth(&cur);
    let circles = pic.circle_count();
    let initial_height = pic.height();
    let mut heights = vec![initial_height];
    let mut moves = 0;
    while pic.height() > 0 {
        let arc = find_reducing_arc(&cur, &pic).ok_or_else(|| Error::InvalidDiagram("positive height without a defect region".into()))?;
        cur = reduce_once(&cur, &arc)?;
        pic = seifert_smooth(&cur);
        heights.push(pic.height());
        moves += 1;
        if moves > initial_height {
            return Err(Error::InvalidDiagram("reducing moves failed to lower the height".into()));
        }
    }
    let braid = read_braid(&cur, &pic)?;
    Ok(YamadaVogel { braid, circles, initial_height, moves, heights, diagram: cur })
}

pub fn to_closed_braid(d: &LinkDiagram) -> Result<BraidWord> {
    Ok(yamada_vogel(d)?.braid)
}

/// Reads a height-0 diagram as a closed braid. Circles are numbered from the one
/// with no circle on its left outward; crossings are merged in angular order from
/// a chain of cut edges, one per circle, each bounding the next region outward.
pub fn read_braid(d: &LinkDiagram, s: &SeifertPicture) -> Result<BraidWord> {
    let edges = d.edges();
    let faces = d.faces();
    let pieces: BTreeSet<usize> = s.piece.iter().copied().collect();
    let mut letters: Vec<i32> = Vec::new();
    let mut offset = 0usize;
    for pc in pieces {
        let members: Vec<usize> = (0..s.circles.len()).filter(|&c| s.piece[c] == pc).collect();
        let k = members.len();
        if k == 1 {
            offset += 1;
            continue;
        }
        let inner: Vec<usize> = members.iter().copied().filter(|&c| members.iter().all(|&o| o == c || !s.left_of[c][o])).collect();
        if inner.len() != 1 {
            return Err(Error::InvalidDiagram("circles are not nested around a common axis".into()));
        }
        let mut order = vec![inner[0]];
        let mut pos = BTreeMap::from([(inner[0], 0usize)]);
        while order.len() < k {
            let last = *order.last().expect("nonempty");
            let nexts: BTreeSet<usize> = s
                .arcs
                .iter()
                .filter_map(|a| match a.circles {
                    (x, y) if x == last && !pos.contains_key(&y) => Some(y),
                    (x, y) if y == last && !pos.contains_key(&x) => Some(x),
                    _ => None,
                })
                .collect();
            if nexts.len() != 1 {
                return Err(Error::InvalidDiagram("Seifert circles do not form a nested chain".into()));
            }
            let nx = *nexts.iter().next().expect("one");
            pos.insert(nx, order.len());
            order.push(nx);
        }
        // cut edges
        let mut cuts = Vec::with_capacity(k);
        cuts.push(*s.circles[order[0]].iter().min().expect("nonempty"));
        for p in 1..k {
            let region = d.edge_face(&faces, &edges[&cuts[p - 1]], Side::Right);
            let e = s.circles[order[p]]
                .iter()
                .copied()
                .filter(|l| d.edge_face(&faces, &edges[l], Side::Left) == region)
                .min()
                .ok_or_else(|| Error::InvalidDiagram("no aligned cut between adjacent circles".into()))?;
            cuts.push(e);
        }
        let lists: Vec<Vec<usize>> = (0..k)
            .map(|p| {
                let circ = &s.circles[order[p]];
                let at = circ.iter().position(|&l| l == cuts[p]).expect("cut lies on its circle");
                (0..circ.len()).map(|i| edges[&circ[(at + i) % circ.len()]].head.0).collect()
            })
            .collect();
        let mut ptr = vec![0usize; k];
        let total = s.arcs.iter().filter(|a| s.piece[a.circles.0] == pc).count();
        for _ in 0..total {
            let p = (0..k - 1)
                .find(|&p| ptr[p] < lists[p].len() && ptr[p + 1] < lists[p + 1].len() && lists[p][ptr[p]] == lists[p + 1][ptr[p + 1]])
                .ok_or_else(|| Error::InvalidDiagram("crossings cannot be ordered around the axis".into()))?;
            let c = lists[p][ptr[p]];
            letters.push(d.crossings()[c].sign as i32 * (offset + p + 1) as i32);
            ptr[p] += 1;
            ptr[p + 1] += 1;
        }
        offset += k;
    }
    BraidWord::new(offset.max(1), letters)
}
