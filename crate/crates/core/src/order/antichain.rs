use super::PartialOrder;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AntichainMode {
    /// Keeps maximal elements; represents a downward-closed set.
    Max,
    /// Keeps minimal elements; represents an upward-closed set.
    Min,
}

/// Pairwise incomparable elements stored as a flat list.
///
/// Closure queries scan linearly. Iteration follows insertion order, which
/// makes "pick the first dominating element" deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Antichain<V> {
    mode: AntichainMode,
    elems: Vec<V>,
}

impl<V: Clone + PartialEq> Antichain<V> {
    pub fn new(mode: AntichainMode) -> Self {
        Antichain { mode, elems: Vec::new() }
    }

    pub fn new_max() -> Self {
        Self::new(AntichainMode::Max)
    }

    pub fn new_min() -> Self {
        Self::new(AntichainMode::Min)
    }

    pub fn mode(&self) -> AntichainMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, V> {
        self.elems.iter()
    }

    pub fn elements(&self) -> &[V] {
        &self.elems
    }

    pub fn contains(&self, v: &V) -> bool {
        self.elems.contains(v)
    }

    /// `v ∈ ↓self`.
    pub fn in_down_closure<O: PartialOrder<V> + ?Sized>(&self, v: &V, o: &O) -> bool {
        debug_assert_eq!(self.mode, AntichainMode::Max);
        self.elems.iter().any(|m| o.ge(m, v))
    }

    /// `v ∈ ↑self`.
    pub fn in_up_closure<O: PartialOrder<V> + ?Sized>(&self, v: &V, o: &O) -> bool {
        debug_assert_eq!(self.mode, AntichainMode::Min);
        self.elems.iter().any(|m| o.ge(v, m))
    }

    /// First element (in insertion order) that covers `v`: `m ⊵ v` for max
    /// antichains, `v ⊵ m` for min antichains.
    pub fn first_covering<O: PartialOrder<V> + ?Sized>(&self, v: &V, o: &O) -> Option<&V> {
        match self.mode {
            AntichainMode::Max => self.elems.iter().find(|m| o.ge(m, v)),
            AntichainMode::Min => self.elems.iter().find(|m| o.ge(v, m)),
        }
    }

    /// Inserts `v` unless it is already covered, dropping every element `v`
    /// now covers. Returns whether the antichain changed.
    pub fn insert<O: PartialOrder<V> + ?Sized>(&mut self, v: V, o: &O) -> bool {
        if self.first_covering(&v, o).is_some() {
            return false;
        }
        match self.mode {
            AntichainMode::Max => self.elems.retain(|m| !o.ge(&v, m)),
            AntichainMode::Min => self.elems.retain(|m| !o.ge(m, &v)),
        }
        self.elems.push(v);
        debug_assert!(self.is_antichain(o));
        true
    }

    pub fn is_antichain<O: PartialOrder<V> + ?Sized>(&self, o: &O) -> bool {
        self.elems.iter().enumerate().all(|(i, a)| {
            self.elems
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !o.ge(a, b))
        })
    }

    pub fn clear(&mut self) {
        self.elems.clear();
    }
}

impl<V> IntoIterator for Antichain<V> {
    type Item = V;
    type IntoIter = std::vec::IntoIter<V>;
    fn into_iter(self) -> Self::IntoIter {
        self.elems.into_iter()
    }
}

impl<'a, V> IntoIterator for &'a Antichain<V> {
    type Item = &'a V;
    type IntoIter = std::slice::Iter<'a, V>;
    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter()
    }
}

/// `⌈S⌉`, the unique maximal antichain of `s`.
pub fn max_antichain<V, O>(s: impl IntoIterator<Item = V>, o: &O) -> Antichain<V>
where
    V: Clone + PartialEq,
    O: PartialOrder<V> + ?Sized,
{
    let mut a = Antichain::new_max();
    for v in s {
        a.insert(v, o);
    }
    a
}

/// `⌊S⌋`, the unique minimal antichain of `s`.
pub fn min_antichain<V, O>(s: impl IntoIterator<Item = V>, o: &O) -> Antichain<V>
where
    V: Clone + PartialEq,
    O: PartialOrder<V> + ?Sized,
{
    let mut a = Antichain::new_min();
    for v in s {
        a.insert(v, o);
    }
    a
}
