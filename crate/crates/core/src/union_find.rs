/// Disjoint-set forest with union by size and path compression.
#[derive(Clone, Debug)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns `true` if the two sets were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    /// Labels every element with a 1-based set id, numbering sets by their
    /// smallest element. Returns the labels and the number of sets.
    pub fn labels(&mut self) -> (Vec<u32>, usize) {
        let n = self.len();
        let mut id_of_root = vec![0u32; n];
        let mut labels = Vec::with_capacity(n);
        let mut next = 0u32;
        for x in 0..n {
            let r = self.find(x);
            if id_of_root[r] == 0 {
                next += 1;
                id_of_root[r] = next;
            }
            labels.push(id_of_root[r]);
        }
        (labels, next as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_and_find() {
        let mut ds = DisjointSets::new(5);
        assert!(ds.union(0, 1));
        assert!(ds.union(3, 4));
        assert!(!ds.union(1, 0));
        assert_eq!(ds.find(0), ds.find(1));
        assert_ne!(ds.find(1), ds.find(3));
        assert!(ds.union(1, 4));
        assert_eq!(ds.find(0), ds.find(3));
    }

    #[test]
    fn labels_follow_smallest_member() {
        let mut ds = DisjointSets::new(6);
        ds.union(4, 1);
        ds.union(5, 2);
        ds.union(2, 0);
        let (labels, count) = ds.labels();
        assert_eq!(count, 3);
        assert_eq!(labels, vec![1, 2, 1, 3, 2, 1]);
    }

    #[test]
    fn long_chain_compresses() {
        let n = 10_000;
        let mut ds = DisjointSets::new(n);
        for i in 1..n {
            ds.union(i - 1, i);
        }
        let r = ds.find(0);
        assert!((0..n).all(|i| ds.find(i) == r));
        assert_eq!(ds.labels().1, 1);
    }
}
