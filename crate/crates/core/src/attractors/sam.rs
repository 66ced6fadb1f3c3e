//! Suffix automaton over letter slices.
//!
//! Each state is a class of factors sharing their set of end positions; the
//! class holds the lengths `len(link) + 1 ..= len`. States created while
//! reading position `e` (not clones) own `e` in their end-position set, and
//! the full set of a state is the union over its suffix-link subtree.

use crate::words::Letter;

const ROOT: usize = 0;

pub(crate) struct SuffixAutomaton {
    pub len: Vec<usize>,
    pub link: Vec<usize>,
    next: Vec<Vec<(Letter, usize)>>,
    /// End position read when the state was created, `None` for clones.
    pub end: Vec<Option<usize>>,
}

impl SuffixAutomaton {
    pub fn new(w: &[Letter]) -> Self {
        let cap = 2 * w.len() + 1;
        let mut sam = Self {
            len: Vec::with_capacity(cap),
            link: Vec::with_capacity(cap),
            next: Vec::with_capacity(cap),
            end: Vec::with_capacity(cap),
        };
        sam.push_state(0, usize::MAX, None, Vec::new());
        let mut last = ROOT;
        for (pos, &a) in w.iter().enumerate() {
            let cur = sam.push_state(sam.len[last] + 1, ROOT, Some(pos), Vec::new());
            let mut p = Some(last);
            while let Some(q) = p {
                if sam.step(q, a).is_some() {
                    break;
                }
                sam.next[q].push((a, cur));
                p = sam.parent(q);
            }
            if let Some(p) = p {
                let q = sam.step(p, a).unwrap();
                if sam.len[p] + 1 == sam.len[q] {
                    sam.link[cur] = q;
                } else {
                    let clone =
                        sam.push_state(sam.len[p] + 1, sam.link[q], None, sam.next[q].clone());
                    let mut r = Some(p);
                    while let Some(s) = r {
                        match sam.next[s].iter_mut().find(|(b, _)| *b == a) {
                            Some(edge) if edge.1 == q => edge.1 = clone,
                            _ => break,
                        }
                        r = sam.parent(s);
                    }
                    sam.link[q] = clone;
                    sam.link[cur] = clone;
                }
            }
            last = cur;
        }
        sam
    }

    fn push_state(
        &mut self,
        len: usize,
        link: usize,
        end: Option<usize>,
        next: Vec<(Letter, usize)>,
    ) -> usize {
        self.len.push(len);
        self.link.push(link);
        self.end.push(end);
        self.next.push(next);
        self.len.len() - 1
    }

    fn parent(&self, s: usize) -> Option<usize> {
        (s != ROOT).then(|| self.link[s])
    }

    fn step(&self, s: usize, a: Letter) -> Option<usize> {
        self.next[s].iter().find(|(b, _)| *b == a).map(|&(_, t)| t)
    }

    pub fn state_count(&self) -> usize {
        self.len.len()
    }

    /// Non-root states by decreasing `len`: children before their suffix link.
    pub fn by_decreasing_len(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (1..self.state_count()).collect();
        order.sort_unstable_by(|&a, &b| self.len[b].cmp(&self.len[a]));
        order
    }

    /// Shortest length in the class of `s`.
    pub fn min_len(&self, s: usize) -> usize {
        self.len[self.link[s]] + 1
    }

    /// Number of distinct non-empty factors.
    #[cfg(test)]
    pub fn distinct_factors(&self) -> usize {
        (1..self.state_count())
            .map(|s| self.len[s] - self.len[self.link[s]])
            .sum()
    }
}
