//! Braid words and the torus / twisted torus constructions.
//!
//! A letter `i > 0` is the generator σ_i, in which the strand at position
//! `i` crosses over the strand at position `i + 1` while strands run upward
//! in the order the word is read. A letter `-i` is σ_i⁻¹. Strand positions
//! are 1-based in letters and 0-based in the Rust API (permutations, PD
//! bookkeeping).

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 1 {
            return Err(Error::InvalidParams("braid needs at least one strand".into()));
        }
        if let Some(&bad) = letters
            .iter()
            .find(|l| **l == 0 || l.unsigned_abs() as usize >= strands)
        {
            return Err(Error::BadLetter {
                letter: bad,
                strands,
            });
        }
        Ok(Self { strands, letters })
    }

    /// The trivial braid on `strands` strands.
    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent sum of the word.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().map(|l| -l).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Concatenation `self · other` on the larger strand count.
    pub fn then(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self {
            strands: self.strands.max(other.strands),
            letters,
        }
    }

    /// Markov stabilization: adds a strand and appends σ_n^{±1}.
    pub fn stabilize(&self, positive: bool) -> Self {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        Self {
            strands: self.strands + 1,
            letters,
        }
    }

    /// `perm[i]` is the final position of the strand that starts at
    /// position `i` (0-based); crossing signs are ignored.
    pub fn permutation(&self) -> Vec<usize> {
        // track which starting strand currently sits at each position
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &start) in at.iter().enumerate() {
            perm[start] = pos;
        }
        perm
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for s in 0..perm.len() {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        cycles
    }

    pub fn is_knot_closure(&self) -> bool {
        self.closure_components() == 1
    }

    pub(crate) fn require_knot(&self) -> Result<()> {
        match self.closure_components() {
            1 => Ok(()),
            components => Err(Error::NotAKnot { components }),
        }
    }

    /// Braid whose closure is the connected sum of the two closures: `other`
    /// is shifted up so that it shares the last strand of `self`.
    pub fn connected_sum(&self, other: &Self) -> Result<Self> {
        self.require_knot()?;
        other.require_knot()?;
        let shift = self.strands as i32 - 1;
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().map(|l| l + l.signum() * shift));
        Ok(Self {
            strands: self.strands + other.strands - 1,
            letters,
        })
    }

    /// Planar-diagram code of the closure.
    ///
    /// Edges are labelled by walking each component along its orientation,
    /// so labels are contiguous per component and `1..=2·len` overall.
    /// Each crossing is `X[a, b, c, d]` with `a` the incoming under-edge and
    /// `b, c, d` following counterclockwise; for a positive crossing the
    /// over-strand runs `d → b`, for a negative one `b → d`. Components
    /// without crossings are not represented.
    pub fn closure_pd_code(&self) -> Result<PdCode> {
        if self.letters.is_empty() {
            return Err(Error::EmptyDiagram);
        }
        let n = self.strands;
        let len = self.letters.len();
        // segment ids: 0..n are the bottom segments, n + 2k and n + 2k + 1
        // are the left and right outgoing segments of crossing k.
        let mut seg_at: Vec<usize> = (0..n).collect();
        let mut incoming = Vec::with_capacity(len);
        // continuation of each segment through the crossing it enters
        let mut next = vec![usize::MAX; n + 2 * len];
        for (k, l) in self.letters.iter().enumerate() {
            let i = l.unsigned_abs() as usize - 1;
            let (in_l, in_r) = (seg_at[i], seg_at[i + 1]);
            let (out_l, out_r) = (n + 2 * k, n + 2 * k + 1);
            incoming.push((in_l, in_r));
            next[in_l] = out_r;
            next[in_r] = out_l;
            seg_at[i] = out_l;
            seg_at[i + 1] = out_r;
        }
        // closing arcs identify each bottom segment with the top segment
        // at the same position
        for j in 0..n {
            if seg_at[j] != j {
                next[seg_at[j]] = next[j];
            }
        }
        let resolve = |s: usize| if s < n { seg_at[s] } else { s };

        let mut label = vec![0usize; n + 2 * len];
        let mut next_label = 1;
        for start in n..n + 2 * len {
            if label[start] != 0 {
                continue;
            }
            let mut e = start;
            while label[e] == 0 {
                label[e] = next_label;
                next_label += 1;
                e = next[e];
            }
        }
        let lab = |s: usize| label[resolve(s)];

        let crossings = self
            .letters
            .iter()
            .enumerate()
            .map(|(k, l)| {
                let (in_l, in_r) = incoming[k];
                let (sw, se) = (lab(in_l), lab(in_r));
                let (nw, ne) = (label[n + 2 * k], label[n + 2 * k + 1]);
                if *l > 0 {
                    [se, ne, nw, sw]
                } else {
                    [sw, se, ne, nw]
                }
            })
            .collect();
        Ok(PdCode(crossings))
    }
}

/// Sequence of `X[a,b,c,d]` crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdCode(pub Vec<[usize; 4]>);

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, [a, b, c, d]) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "X[{a},{b},{c},{d}]")?;
        }
        Ok(())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.strands)?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Parses `"n;l1,l2,...,lk"`; the letter list may be empty.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |pos: usize, msg: &str| Error::Parse {
            pos,
            msg: msg.to_string(),
        };
        let (n, rest) = s.split_once(';').ok_or_else(|| bad(0, "expected 'n;letters'"))?;
        let strands: usize = n.trim().parse().map_err(|_| bad(0, "bad strand count"))?;
        let mut letters = Vec::new();
        let mut pos = n.len() + 1;
        if !rest.trim().is_empty() {
            for tok in rest.split(',') {
                letters.push(tok.trim().parse().map_err(|_| bad(pos, "bad letter"))?);
                pos += tok.len() + 1;
            }
        }
        BraidWord::new(strands, letters)
    }
}

/// `(σ_1 σ_2 … σ_{p−1})^q` on `p` strands; negative `q` repeats the
/// mirrored block `|q|` times.
pub fn torus_braid(p: i64, q: i64) -> Result<BraidWord> {
    if p < 1 {
        return Err(Error::InvalidParams(format!("torus braid needs p >= 1, got {p}")));
    }
    let sign = q.signum() as i32;
    let block: Vec<i32> = (1..p as i32).map(|i| i * sign).collect();
    let letters = block.repeat(q.unsigned_abs() as usize);
    BraidWord::new(p as usize, letters)
}

/// Parameters of T(p, q; r, s): `s` full twists added on `r` adjacent
/// strands of T(p, q).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwistedTorusParams {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub s: i64,
}

impl TwistedTorusParams {
    pub fn new(p: i64, q: i64, r: i64, s: i64) -> Result<Self> {
        let params = Self { p, q, r, s };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        let Self { p, q, r, .. } = *self;
        if p <= r {
            return Err(Error::InvalidParams(format!("p > r violated: p = {p}, r = {r}")));
        }
        if r <= 1 {
            return Err(Error::InvalidParams(format!("r > 1 violated: r = {r}")));
        }
        if q <= 0 {
            return Err(Error::InvalidParams(format!("q > 0 violated: q = {q}")));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidParams(format!("gcd(p, q) = 1 violated: gcd({p}, {q}) = {}", p.gcd(&q))));
        }
        Ok(())
    }
}

/// `(σ_1 … σ_{r−1})^r`, the positive full twist on strands `1..=r`.
pub fn full_twist(r: usize) -> Vec<i32> {
    (1..r as i32).collect::<Vec<_>>().repeat(r)
}

/// Torus block followed by `s` full twists on strands `1..=r`.
pub fn twisted_torus_braid(params: &TwistedTorusParams) -> Result<BraidWord> {
    params.validate()?;
    let torus = torus_braid(params.p, params.q)?;
    let twist = full_twist(params.r as usize);
    let mut letters = torus.letters;
    let reps = params.s.unsigned_abs() as usize;
    if params.s >= 0 {
        letters.extend(twist.repeat(reps));
    } else {
        let inv: Vec<i32> = twist.iter().rev().map(|l| -l).collect();
        letters.extend(inv.repeat(reps));
    }
    BraidWord::new(params.p as usize, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt(p: i64, q: i64, r: i64, s: i64) -> BraidWord {
        twisted_torus_braid(&TwistedTorusParams::new(p, q, r, s).unwrap()).unwrap()
    }

    #[test]
    fn torus_braid_examples() {
        let t = torus_braid(2, 3).unwrap();
        assert_eq!((t.strands(), t.letters()), (2, &[1, 1, 1][..]));
        let t = torus_braid(3, -2).unwrap();
        assert_eq!((t.strands(), t.letters()), (3, &[-1, -2, -1, -2][..]));
        let t = torus_braid(5, 3).unwrap();
        assert_eq!(t.letters(), [1, 2, 3, 4].repeat(3).as_slice());
        assert!(torus_braid(1, 7).unwrap().is_empty());
        assert!(torus_braid(4, 0).unwrap().is_empty());
        assert!(torus_braid(0, 3).is_err());
    }

    #[test]
    fn twisted_torus_examples() {
        let b = tt(5, 3, 2, 1);
        let mut expect = [1, 2, 3, 4].repeat(3);
        expect.extend([1, 1]);
        assert_eq!((b.strands(), b.letters()), (5, expect.as_slice()));

        let b = tt(9, 5, 7, -1);
        assert_eq!((b.strands(), b.len()), (9, 82));
        let b = tt(19, 13, 15, -1);
        assert_eq!((b.strands(), b.len()), (19, 444));
    }

    #[test]
    fn twisted_torus_rejects_bad_params() {
        let msg = |r: Result<TwistedTorusParams>| r.unwrap_err().to_string();
        assert!(msg(TwistedTorusParams::new(5, 3, 5, 1)).contains("p > r"));
        assert!(msg(TwistedTorusParams::new(5, 3, 1, 1)).contains("r > 1"));
        assert!(msg(TwistedTorusParams::new(5, 0, 2, 1)).contains("q > 0"));
        assert!(msg(TwistedTorusParams::new(6, 4, 2, 1)).contains("gcd"));
    }

    #[test]
    fn negative_twist_is_inverse_of_positive() {
        let pos = tt(9, 5, 7, 1);
        let neg = tt(9, 5, 7, -1);
        let torus_len = 40;
        let twist_pos = &pos.letters()[torus_len..];
        let twist_neg = &neg.letters()[torus_len..];
        let inv: Vec<i32> = twist_pos.iter().rev().map(|l| -l).collect();
        assert_eq!(twist_neg, inv.as_slice());
    }

    #[test]
    fn permutations() {
        // strand 0 -> 1 -> 2 -> 0
        assert_eq!(torus_braid(3, 2).unwrap().permutation(), vec![1, 2, 0]);
        assert_eq!(BraidWord::identity(4).unwrap().permutation(), vec![0, 1, 2, 3]);
        let twist = BraidWord::new(5, full_twist(5)).unwrap();
        assert_eq!(twist.permutation(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn knot_detection() {
        assert!(torus_braid(2, 3).unwrap().is_knot_closure());
        assert!(!torus_braid(2, 2).unwrap().is_knot_closure());
        assert_eq!(torus_braid(2, 2).unwrap().closure_components(), 2);
        assert!(tt(9, 5, 7, -1).is_knot_closure());
    }

    #[test]
    fn writhe_and_mirror() {
        assert_eq!(torus_braid(2, 3).unwrap().writhe(), 3);
        assert_eq!(tt(9, 5, 7, -1).writhe(), -2);
        let b = BraidWord::new(4, vec![1, -3, 2, 2, -1]).unwrap();
        assert_eq!(b.mirror().writhe(), -b.writhe());
        assert_eq!(b.mirror().mirror(), b);
        assert_eq!(b.mirror().letters(), [-1, 3, -2, -2, 1]);
        assert!(BraidWord::identity(3).unwrap().mirror().is_empty());
    }

    #[test]
    fn connected_sums() {
        let trefoil = torus_braid(2, 3).unwrap();
        let unknot = BraidWord::identity(1).unwrap();
        let s = trefoil.connected_sum(&unknot).unwrap();
        assert_eq!((s.strands(), s.letters()), (2, &[1, 1, 1][..]));

        let s = trefoil.connected_sum(&torus_braid(2, -5).unwrap()).unwrap();
        assert_eq!((s.strands(), s.letters()), (3, &[1, 1, 1, -2, -2, -2, -2, -2][..]));
        assert!(s.is_knot_closure());

        let link = torus_braid(2, 2).unwrap();
        assert_eq!(
            trefoil.connected_sum(&link),
            Err(Error::NotAKnot { components: 2 })
        );
    }

    #[test]
    fn text_format() {
        let b: BraidWord = "3;1,1,1,-2,-2".parse().unwrap();
        assert_eq!(b.to_string(), "3;1,1,1,-2,-2");
        let e: BraidWord = "1;".parse().unwrap();
        assert!(e.is_empty());
        assert!("2;1,2".parse::<BraidWord>().is_err());
        assert!("2;1,0".parse::<BraidWord>().is_err());
        assert!("x;1".parse::<BraidWord>().is_err());
    }

    #[test]
    fn pd_code_structure() {
        let pd = BraidWord::new(2, vec![1, 1, 1]).unwrap().closure_pd_code().unwrap();
        assert_eq!(pd.0.len(), 3);
        let mut count = [0usize; 7];
        for x in &pd.0 {
            for &e in x {
                count[e] += 1;
            }
        }
        assert_eq!(&count[1..], &[2; 6]);
        assert_eq!(
            BraidWord::identity(3).unwrap().closure_pd_code(),
            Err(Error::EmptyDiagram)
        );
    }

    #[test]
    fn pd_code_of_right_trefoil() {
        let pd = torus_braid(2, 3).unwrap().closure_pd_code().unwrap();
        assert_eq!(pd.to_string(), "X[6,4,1,3] X[4,2,5,1] X[2,6,3,5]");
    }
}
