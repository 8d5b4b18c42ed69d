//! Oriented link diagrams as crossing/edge incidence, with checkerboard
//! faces and the Goeritz form.
//!
//! Every crossing has four slots in counterclockwise order. The under strand
//! occupies slots 0 and 2, the over strand slots 1 and 3. Corner `s` of a
//! crossing is the region between slots `s` and `s + 1`.

use thiserror::Error;

use crate::symform::SymBilinearForm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("plat closure needs an even number of strands, got {0}")]
    OddPlat(usize),
    #[error("letter {letter} does not fit on {strands} strands")]
    BadLetter { letter: i32, strands: usize },
    #[error("diagram is split or has unknotted circles off the crossings")]
    NotConnected,
    #[error("orientation list has {given} entries for {components} components")]
    OrientationCount { given: usize, components: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Port {
    pub crossing: usize,
    pub slot: u8,
}

/// How the ends of a braid are joined up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Closure {
    /// Top end `i` to bottom end `i`.
    Trace,
    /// Caps joining ends `2k, 2k+1` at the top and at the bottom.
    Plat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    /// Edge id at each slot of each crossing.
    slots: Vec<[usize; 4]>,
    edges: Vec<[Port; 2]>,
    /// Circles that meet no crossing.
    free_loops: usize,
    /// Entering slot of the under strand (0 or 2) and of the over strand (1 or 3).
    entering: Vec<(u8, u8)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Node {
    Port(Port),
    Top(usize),
    Bottom(usize),
}

impl Diagram {
    /// Diagram of a braid word closed up as requested, oriented downward
    /// along the braid. Plat closures are then re-oriented with
    /// [`Diagram::orient`] since downward is not a consistent orientation there.
    pub fn from_braid(strands: usize, letters: &[i32], closure: Closure) -> Result<Diagram, DiagramError> {
        if closure == Closure::Plat && strands % 2 == 1 {
            return Err(DiagramError::OddPlat(strands));
        }
        let mut links: Vec<(Node, Node)> = Vec::new();
        let mut dangling: Vec<Node> = (0..strands).map(Node::Top).collect();
        let mut entering = Vec::with_capacity(letters.len());
        for (c, &letter) in letters.iter().enumerate() {
            let i = letter.unsigned_abs() as usize;
            if letter == 0 || i >= strands {
                return Err(DiagramError::BadLetter { letter, strands });
            }
            let i = i - 1;
            // slots of the NW, NE, SW, SE ends
            let (nw, ne, sw, se) = if letter > 0 { (0, 3, 1, 2) } else { (1, 0, 2, 3) };
            let port = |slot| Node::Port(Port { crossing: c, slot });
            links.push((dangling[i], port(nw)));
            links.push((dangling[i + 1], port(ne)));
            dangling[i] = port(sw);
            dangling[i + 1] = port(se);
            entering.push((0, if letter > 0 { 3 } else { 1 }));
        }
        for (i, &d) in dangling.iter().enumerate() {
            links.push((d, Node::Bottom(i)));
        }
        match closure {
            Closure::Trace => links.extend((0..strands).map(|i| (Node::Top(i), Node::Bottom(i)))),
            Closure::Plat => {
                for k in (0..strands).step_by(2) {
                    links.push((Node::Top(k), Node::Top(k + 1)));
                    links.push((Node::Bottom(k), Node::Bottom(k + 1)));
                }
            }
        }

        let n = letters.len();
        let index = |node: Node| match node {
            Node::Port(p) => p.crossing * 4 + p.slot as usize,
            Node::Top(i) => 4 * n + i,
            Node::Bottom(i) => 4 * n + strands + i,
        };
        let total = 4 * n + 2 * strands;
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
        for &(a, b) in &links {
            adj[index(a)].push(index(b));
            adj[index(b)].push(index(a));
        }
        let mut visited = vec![false; total];
        let mut slots = vec![[usize::MAX; 4]; n];
        let mut edges = Vec::new();
        for start in 0..4 * n {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            let (mut prev, mut cur) = (start, adj[start][0]);
            while cur >= 4 * n {
                visited[cur] = true;
                let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                prev = cur;
                cur = next;
            }
            visited[cur] = true;
            let e = edges.len();
            let port = |k: usize| Port { crossing: k / 4, slot: (k % 4) as u8 };
            edges.push([port(start), port(cur)]);
            slots[start / 4][start % 4] = e;
            slots[cur / 4][cur % 4] = e;
        }
        let mut free_loops = 0;
        for start in 4 * n..total {
            if visited[start] {
                continue;
            }
            free_loops += 1;
            let mut stack = vec![start];
            while let Some(k) = stack.pop() {
                if !visited[k] {
                    visited[k] = true;
                    stack.extend(adj[k].iter().copied());
                }
            }
        }
        let mut d = Diagram { slots, edges, free_loops, entering };
        if closure == Closure::Plat {
            let components = d.components().len();
            d.orient(&vec![false; components])?;
        }
        Ok(d)
    }

    pub fn crossing_count(&self) -> usize {
        self.slots.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    fn other_end(&self, p: Port) -> Port {
        let [a, b] = self.edges[self.slots[p.crossing][p.slot as usize]];
        if a == p {
            b
        } else {
            a
        }
    }

    /// Strand components, each as the list of ports it enters, in traversal
    /// order. Component `k` is started at the lowest crossing it meets, on the
    /// under strand if possible, entering at the slot the current orientation
    /// says.
    pub fn components(&self) -> Vec<Vec<Port>> {
        let mut seen = vec![[false; 2]; self.crossing_count()];
        let mut out = Vec::new();
        for c in 0..self.crossing_count() {
            for strand in 0..2 {
                if seen[c][strand] {
                    continue;
                }
                let slot = if strand == 0 { self.entering[c].0 } else { self.entering[c].1 };
                let mut ports = Vec::new();
                let mut p = Port { crossing: c, slot };
                loop {
                    let s = (p.slot % 2) as usize;
                    if seen[p.crossing][s] {
                        break;
                    }
                    seen[p.crossing][s] = true;
                    ports.push(p);
                    let exit = Port { crossing: p.crossing, slot: (p.slot + 2) % 4 };
                    p = self.other_end(exit);
                }
                out.push(ports);
            }
        }
        out
    }

    /// Re-orients every component: component `k` (as numbered by
    /// [`Diagram::components`] under the current orientation) keeps its
    /// direction unless `reverse[k]`.
    pub fn orient(&mut self, reverse: &[bool]) -> Result<(), DiagramError> {
        let components = self.components();
        if components.len() != reverse.len() {
            return Err(DiagramError::OrientationCount { given: reverse.len(), components: components.len() });
        }
        for (ports, &rev) in components.iter().zip(reverse) {
            for p in ports {
                let slot = if rev { (p.slot + 2) % 4 } else { p.slot };
                if slot % 2 == 0 {
                    self.entering[p.crossing].0 = slot;
                } else {
                    self.entering[p.crossing].1 = slot;
                }
            }
        }
        Ok(())
    }

    pub fn component_count(&self) -> usize {
        self.components().len() + self.free_loops
    }

    /// +1 for a right-handed crossing.
    pub fn sign(&self, c: usize) -> i64 {
        match self.entering[c] {
            (0, 3) | (2, 1) => 1,
            _ => -1,
        }
    }

    pub fn writhe(&self) -> i64 {
        (0..self.crossing_count()).map(|c| self.sign(c)).sum()
    }

    /// Switches every crossing.
    pub fn mirror(&self) -> Diagram {
        let rot = |s: u8| (s + 1) % 4;
        Diagram {
            slots: self.slots.iter().map(|s| [s[3], s[0], s[1], s[2]]).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| e.map(|p| Port { crossing: p.crossing, slot: rot(p.slot) }))
                .collect(),
            free_loops: self.free_loops,
            entering: self.entering.iter().map(|&(u, o)| (rot(o), rot(u))).collect(),
        }
    }

    /// Every edge runs from an over slot to an under slot.
    pub fn is_alternating(&self) -> bool {
        self.edges.iter().all(|[a, b]| a.slot % 2 != b.slot % 2)
    }

    /// Face id of each corner, and the number of faces.
    fn faces(&self) -> (Vec<[usize; 4]>, usize) {
        let n = self.crossing_count();
        let mut face = vec![[usize::MAX; 4]; n];
        let mut count = 0;
        for c in 0..n {
            for s in 0..4u8 {
                if face[c][s as usize] != usize::MAX {
                    continue;
                }
                let mut p = Port { crossing: c, slot: s };
                while face[p.crossing][p.slot as usize] == usize::MAX {
                    face[p.crossing][p.slot as usize] = count;
                    p = self.other_end(Port { crossing: p.crossing, slot: (p.slot + 1) % 4 });
                }
                count += 1;
            }
        }
        (face, count)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.crossing_count();
        if n == 0 {
            return self.free_loops <= 1;
        }
        self.free_loops == 0 && self.faces().1 == n + 2
    }

    /// Crossings whose two opposite corners lie in one face.
    pub fn nugatory_crossings(&self) -> Vec<usize> {
        let (face, _) = self.faces();
        (0..self.crossing_count()).filter(|&c| face[c][0] == face[c][2] || face[c][1] == face[c][3]).collect()
    }

    /// Goeritz form and correction term `μ` for the checkerboard surface made
    /// of the faces colored like corner 0 of crossing 0 (`shade_first`) or the
    /// other color.
    pub fn goeritz(&self, shade_first: bool) -> Result<(SymBilinearForm, i64), DiagramError> {
        if !self.is_connected() {
            return Err(DiagramError::NotConnected);
        }
        let n = self.crossing_count();
        if n == 0 {
            return Ok((SymBilinearForm::new(Vec::new()).expect("empty form"), 0));
        }
        let (face, count) = self.faces();
        let mut color = vec![None; count];
        color[face[0][0]] = Some(true);
        let mut changed = true;
        while changed {
            changed = false;
            for c in 0..n {
                for s in 0..4 {
                    let (a, b) = (face[c][s], face[c][(s + 1) % 4]);
                    if let (Some(x), None) = (color[a], color[b]) {
                        color[b] = Some(!x);
                        changed = true;
                    } else if let (None, Some(y)) = (color[a], color[b]) {
                        color[a] = Some(!y);
                        changed = true;
                    }
                }
            }
        }
        let shaded: Vec<usize> = (0..count).filter(|&f| color[f] == Some(shade_first)).collect();
        let position = |f: usize| shaded.iter().position(|&g| g == f).expect("shaded face");
        let k = shaded.len();
        let mut g = vec![vec![0i64; k]; k];
        let mut mu = 0;
        for c in 0..n {
            let first = if color[face[c][0]] == Some(shade_first) { 0 } else { 1 };
            let eta = if first == 0 { 1 } else { -1 };
            let (a, b) = (position(face[c][first]), position(face[c][first + 2]));
            if a != b {
                g[a][b] -= eta;
                g[b][a] -= eta;
                g[a][a] += eta;
                g[b][b] += eta;
            }
            // the oriented smoothing joins corners 1, 3 at a positive crossing
            let joined = if self.sign(c) > 0 { 1 } else { 0 };
            if joined != first {
                mu += eta;
            }
        }
        let reduced: Vec<Vec<i64>> = g[1..].iter().map(|row| row[1..].to_vec()).collect();
        Ok((SymBilinearForm::new(reduced).expect("Goeritz matrix is symmetric"), mu))
    }

    /// `(σ, n)` by Gordon–Litherland: `σ = sign(G) − μ`.
    pub fn signature_nullity(&self) -> Result<(i64, i64), DiagramError> {
        let (g, mu) = self.goeritz(true)?;
        let (s, n) = g.signature_nullity();
        Ok((s - mu, n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{closure_stats, BraidWord};
    use crate::seifert::signature_nullity_of_closure;
    use proptest::prelude::*;

    fn trace(strands: usize, letters: &[i32]) -> Diagram {
        Diagram::from_braid(strands, letters, Closure::Trace).unwrap()
    }

    #[test]
    fn small_diagrams() {
        let trefoil = trace(2, &[1, 1, 1]);
        assert_eq!(trefoil.component_count(), 1);
        assert_eq!(trefoil.writhe(), 3);
        assert!(trefoil.is_alternating());
        assert!(trefoil.is_connected());
        assert!(trefoil.nugatory_crossings().is_empty());
        assert_eq!(trefoil.signature_nullity().unwrap(), (-2, 0));
        assert_eq!(trefoil.mirror().signature_nullity().unwrap(), (2, 0));

        let hopf = trace(2, &[1, 1]);
        assert_eq!(hopf.component_count(), 2);
        assert_eq!(hopf.signature_nullity().unwrap(), (-1, 0));

        let kink = trace(2, &[1]);
        assert_eq!(kink.nugatory_crossings(), vec![0]);
        assert_eq!(kink.signature_nullity().unwrap(), (0, 0));

        let fig8 = trace(3, &[1, -2, 1, -2]);
        assert!(fig8.is_alternating());
        assert_eq!(fig8.signature_nullity().unwrap(), (0, 0));

        let split = trace(3, &[1, 1]);
        assert_eq!(split.free_loops(), 1);
        assert!(!split.is_connected());
        assert_eq!(split.signature_nullity(), Err(DiagramError::NotConnected));
    }

    #[test]
    fn plat_closures() {
        // σ₂³ with caps is the trefoil, σ₂² the Hopf link
        let d = Diagram::from_braid(4, &[2, 2, 2], Closure::Plat).unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.signature_nullity().unwrap().0.abs(), 2);
        let mut d = Diagram::from_braid(4, &[2, 2], Closure::Plat).unwrap();
        assert_eq!(d.component_count(), 2);
        let s = d.signature_nullity().unwrap().0;
        d.orient(&[false, true]).unwrap();
        assert_eq!(d.signature_nullity().unwrap().0, -s);
        assert_eq!(Diagram::from_braid(3, &[1], Closure::Plat), Err(DiagramError::OddPlat(3)));
        assert!(d.orient(&[true]).is_err());
    }

    fn connected_word() -> impl Strategy<Value = BraidWord> {
        (2usize..=4)
            .prop_flat_map(|n| {
                let gens = (1..n as i32).flat_map(|i| [i, -i]).collect::<Vec<_>>();
                (Just(n), proptest::collection::vec(proptest::sample::select(gens), 0..=10))
            })
            .prop_map(|(n, mut letters)| {
                for i in 1..n as i32 {
                    if !letters.iter().any(|l| l.abs() == i) {
                        letters.push(i);
                    }
                }
                BraidWord::new(n, letters).unwrap()
            })
    }

    proptest! {
        #[test]
        fn agrees_with_seifert_on_braid_closures(x in connected_word()) {
            let d = trace(x.strands(), x.letters());
            prop_assert_eq!(d.component_count(), closure_stats(&x).components);
            prop_assert!(d.is_connected());
            let expected = signature_nullity_of_closure(&x).unwrap();
            prop_assert_eq!(d.signature_nullity().unwrap(), expected);
            // either checkerboard surface gives the same answer
            let (g, mu) = d.goeritz(false).unwrap();
            let (s, n) = g.signature_nullity();
            prop_assert_eq!((s - mu, n), expected);
            prop_assert_eq!(d.mirror().signature_nullity().unwrap(), (-expected.0, expected.1));
        }
    }
}
