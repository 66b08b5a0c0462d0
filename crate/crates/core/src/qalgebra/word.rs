use std::fmt;

use serde::{Deserialize, Serialize};

/// Letter names used for `n = 3`, row-major.
pub const LETTERS3: [char; 9] = ['a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'k'];

/// The generator `x_{row,col}` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub row: usize,
    pub col: usize,
}

impl Generator {
    pub fn new(row: usize, col: usize) -> Self {
        Generator { row, col }
    }

    /// Row-major code used inside words.
    pub fn code(&self, n: usize) -> u8 {
        ((self.row - 1) * n + (self.col - 1)) as u8
    }

    pub fn from_code(code: u8, n: usize) -> Self {
        let c = code as usize;
        Generator { row: c / n + 1, col: c % n + 1 }
    }

    /// The `n = 3` alias letter `a..k`.
    pub fn from_letter(ch: char) -> Option<Self> {
        LETTERS3.iter().position(|&c| c == ch).map(|p| Generator::from_code(p as u8, 3))
    }

    pub fn name(&self, n: usize) -> String {
        if n == 3 {
            LETTERS3[self.code(3) as usize].to_string()
        } else {
            format!("x[{},{}]", self.row, self.col)
        }
    }
}

/// A monomial `x_{w1} ... x_{wp} det_q^{-det_power}`; letters are row-major generator codes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    pub factors: Vec<u8>,
    pub det_power: u32,
}

impl Word {
    pub fn new(factors: Vec<u8>, det_power: u32) -> Self {
        Word { factors, det_power }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn from_generators(n: usize, gens: &[Generator], det_power: u32) -> Self {
        Word { factors: gens.iter().map(|g| g.code(n)).collect(), det_power }
    }

    pub fn generators(&self, n: usize) -> Vec<Generator> {
        self.factors.iter().map(|&c| Generator::from_code(c, n)).collect()
    }

    /// Row-lexicographically sorted.
    pub fn is_canonical(&self) -> bool {
        self.factors.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn counting_matrix(&self, n: usize) -> CountingMatrix {
        CountingMatrix::of_letters(n, &self.factors)
    }

    pub fn display(&self, n: usize) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.factors.len() {
            let c = self.factors[i];
            let mut j = i;
            while j < self.factors.len() && self.factors[j] == c {
                j += 1;
            }
            let name = Generator::from_code(c, n).name(n);
            if j - i > 1 {
                parts.push(format!("{}^{}", name, j - i));
            } else {
                parts.push(name);
            }
            i = j;
        }
        if self.det_power > 0 {
            parts.push(format!("det^-{}", self.det_power));
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Multiplicity matrix of the generators in a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CountingMatrix {
    pub n: usize,
    pub entries: Vec<u32>,
}

impl CountingMatrix {
    pub fn zeros(n: usize) -> Self {
        CountingMatrix { n, entries: vec![0; n * n] }
    }

    pub fn of_letters(n: usize, letters: &[u8]) -> Self {
        let mut m = Self::zeros(n);
        for &c in letters {
            m.entries[c as usize] += 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Self {
        let n = rows.len();
        CountingMatrix { n, entries: rows.iter().flat_map(|r| r.iter().copied()).collect() }
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn row_sums(&self) -> Vec<u32> {
        (0..self.n).map(|i| self.entries[i * self.n..(i + 1) * self.n].iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u32> {
        (0..self.n).map(|j| (0..self.n).map(|i| self.entries[i * self.n + j]).sum()).collect()
    }

    /// `Some(m)` if every row and column sums to `m`.
    pub fn order(&self) -> Option<u32> {
        let rs = self.row_sums();
        let cs = self.col_sums();
        let m = *rs.first().unwrap_or(&0);
        if rs.iter().all(|&x| x == m) && cs.iter().all(|&x| x == m) {
            Some(m)
        } else {
            None
        }
    }

    /// The row-lexicographic canonical word with this counting matrix.
    pub fn canonical_word(&self, det_power: u32) -> Word {
        let mut f = Vec::new();
        for (c, &k) in self.entries.iter().enumerate() {
            f.extend(std::iter::repeat_n(c as u8, k as usize));
        }
        Word::new(f, det_power)
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }
}

impl fmt::Display for CountingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}
