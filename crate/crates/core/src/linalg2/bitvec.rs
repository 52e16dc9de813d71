use std::fmt;

/// Packed vector over F_2, 64 entries per word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_ones(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.flip(i);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        Self::from_ones(
            bits.len(),
            bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i),
        )
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i & 63);
        if value {
            self.words[i >> 6] |= mask;
        } else {
            self.words[i >> 6] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] ^= 1u64 << (i & 63);
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// XOR of `other` into `self`, touching only words from `from_bit` on.
    #[inline]
    fn xor_from(&mut self, other: &BitVec, from_bit: usize) {
        let start = from_bit >> 6;
        for (a, b) in self.words[start..].iter_mut().zip(&other.words[start..]) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.first_one_from(0)
    }

    pub fn first_one_from(&self, from: usize) -> Option<usize> {
        if from >= self.len {
            return None;
        }
        let mut wi = from >> 6;
        let mut w = self.words[wi] & (!0u64 << (from & 63));
        loop {
            if w != 0 {
                return Some((wi << 6) + w.trailing_zeros() as usize);
            }
            wi += 1;
            if wi >= self.words.len() {
                return None;
            }
            w = self.words[wi];
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some((wi << 6) + t)
            })
        })
    }

    /// Parity of the bitwise AND.
    pub fn dot(&self, other: &BitVec) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            & 1
            == 1
    }

    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.iter_ones() {
            out.set(i, true);
        }
        for i in other.iter_ones() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Bits `start..start+len` as a new vector.
    pub fn slice(&self, start: usize, len: usize) -> BitVec {
        let mut out = BitVec::zeros(len);
        let mut i = self.first_one_from(start);
        while let Some(b) = i {
            if b >= start + len {
                break;
            }
            out.set(b - start, true);
            i = self.first_one_from(b + 1);
        }
        out
    }

    /// Reads `width <= 32` bits starting at `start`.
    #[inline]
    pub fn get_chunk(&self, start: usize, width: usize) -> u32 {
        debug_assert!(width <= 32 && start + width <= self.len);
        let wi = start >> 6;
        let off = start & 63;
        let mut v = self.words[wi] >> off;
        if off + width > 64 {
            v |= self.words[wi + 1] << (64 - off);
        }
        (v & ((1u64 << width) - 1)) as u32
    }

    /// XORs a `width <= 32` bit chunk in at `start`.
    #[inline]
    pub fn xor_chunk(&mut self, start: usize, width: usize, value: u32) {
        debug_assert!(width <= 32 && start + width <= self.len);
        let value = value as u64 & ((1u64 << width) - 1);
        let wi = start >> 6;
        let off = start & 63;
        self.words[wi] ^= value << off;
        if off + width > 64 {
            self.words[wi + 1] ^= value >> (64 - off);
        }
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        write!(f, "BitVec({s})")
    }
}

/// Reduced row-echelon form over F_2.
///
/// Rows are kept fully reduced and sorted by pivot, where the pivot of a row is its lowest
/// set bit. Every row is zero at the pivots of all other rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    width: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
    /// column -> index into `rows`, `u32::MAX` for non-pivot columns
    row_of: Vec<u32>,
}

impl Rref {
    pub fn new(width: usize) -> Self {
        Rref {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
            row_of: vec![u32::MAX; width],
        }
    }

    pub fn from_rows<I: IntoIterator<Item = BitVec>>(width: usize, rows: I) -> Self {
        let mut r = Self::new(width);
        for row in rows {
            r.insert(row);
        }
        r
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` in place to its normal form modulo the row space.
    ///
    /// Rows vanish at each other's pivots, so the pivot bits of `v` are only cleared, never
    /// set, by the row operations; collecting them up front is enough.
    pub fn reduce(&self, v: &mut BitVec) {
        debug_assert_eq!(v.len(), self.width);
        let hits: Vec<usize> = v
            .iter_ones()
            .filter(|&c| self.row_of[c] != u32::MAX)
            .collect();
        for p in hits {
            v.xor_from(&self.rows[self.row_of[p] as usize], p);
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, mut v: BitVec) -> bool {
        assert_eq!(v.len(), self.width, "row width mismatch");
        self.reduce(&mut v);
        let p = match v.first_one() {
            Some(p) => p,
            None => return false,
        };
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_from(&v, p);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, v);
        self.pivots.insert(at, p);
        for (i, &q) in self.pivots.iter().enumerate().skip(at) {
            self.row_of[q] = i as u32;
        }
        true
    }

    /// Basis of `{x : row . x = 0 for every row}`, one vector per free column in
    /// increasing order.
    pub fn null_space(&self) -> Vec<BitVec> {
        let mut is_pivot = vec![false; self.width];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.width)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = BitVec::unit(self.width, f);
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if row.get(f) {
                        x.set(p, true);
                    }
                }
                x
            })
            .collect()
    }
}

/// Kernel of the F_2-linear map sending unit vector `i` to `images[i]`, all images of
/// width `target_width`. Returns a basis of the kernel inside `F_2^{images.len()}`.
pub fn kernel_of_images(images: &[BitVec], target_width: usize) -> Vec<BitVec> {
    let n = images.len();
    let mut r = Rref::new(target_width + n);
    for (i, img) in images.iter().enumerate() {
        assert_eq!(img.len(), target_width, "image width mismatch");
        r.insert(img.concat(&BitVec::unit(n, i)));
    }
    r.rows()
        .iter()
        .zip(r.pivots())
        .filter(|(_, &p)| p >= target_width)
        .map(|(row, _)| row.slice(target_width, n))
        .collect()
}
