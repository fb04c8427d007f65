//! Finite phase spaces: facts, formula valuation, per-variant constraint
//! validation, soundness checking and countermodel search.
//!
//! A phase space is a carrier with three binary operations and a relation
//! `bot` satisfying symmetry and the two residuation biconditionals;
//! variants add the constraints of their structural rules. Subsets are
//! bitmasks, facts are the `bot`-biorthogonally closed subsets, and
//! formulas denote facts. A model refuting the soundness inclusion of a
//! presentation certifies its unprovability.

use crate::polar::{
    decorate_presentation, pol_interp_minus, pol_interp_plus, NegFormula, PolPresentation,
    PosFormula,
};
use crate::structure::Presentation;
use crate::unfocused::LogicVariant;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

/// Hard cap on carrier size so subsets fit comfortably in a bitmask and
/// user queries stay tractable.
pub const MAX_CARRIER: usize = 6;

/// Subset of the carrier as a bitmask.
pub type PhaseSet = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseSpace {
    pub n: usize,
    pub tensor: Vec<Vec<usize>>,
    pub oslash: Vec<Vec<usize>>,
    pub obslash: Vec<Vec<usize>>,
    pub bot: Vec<Vec<bool>>,
    pub variant: LogicVariant,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaceViolation {
    #[error("carrier size {0} out of range 1..={MAX_CARRIER}")]
    CarrierSize(usize),
    #[error("operation table has wrong shape or out-of-range entry")]
    TableShape,
    #[error("bot not symmetric at ({0}, {1})")]
    Symmetry(usize, usize),
    #[error("residuation failed at x={0} y={1} z={2}: (x.y, z) vs (x, y\\>z)")]
    ResiduationObslash(usize, usize, usize),
    #[error("residuation failed at x={0} y={1} z={2}: (x, y.z) vs (x</y, z)")]
    ResiduationOslash(usize, usize, usize),
    #[error("distributivity constraint {group} failed at x={x} y={y} u={u} v={v}")]
    Grishin { group: u8, x: usize, y: usize, u: usize, v: usize },
    #[error("CNL collapse constraint failed at x={0} y={1} z={2}")]
    Collapse(usize, usize, usize),
}

impl PhaseSpace {
    pub fn full(&self) -> PhaseSet {
        ((1u64 << self.n) - 1) as PhaseSet
    }

    pub fn bot_rel(&self, x: usize, y: usize) -> bool {
        self.bot[x][y]
    }

    /// `A^ = { x | forall y in A, (x, y) in bot }`.
    pub fn bot_set(&self, a: PhaseSet) -> PhaseSet {
        let mut out = 0;
        for x in 0..self.n {
            let mut all = true;
            for y in 0..self.n {
                if a & (1 << y) != 0 && !self.bot[x][y] {
                    all = false;
                    break;
                }
            }
            if all {
                out |= 1 << x;
            }
        }
        out
    }

    pub fn closure(&self, a: PhaseSet) -> PhaseSet {
        self.bot_set(self.bot_set(a))
    }

    pub fn is_fact(&self, a: PhaseSet) -> bool {
        self.closure(a) == a
    }

    /// All facts of the space, ascending as bitmasks.
    pub fn facts(&self) -> Vec<PhaseSet> {
        let mut out = Vec::new();
        for a in 0..=self.full() {
            if self.is_fact(a) {
                out.push(a);
            }
        }
        out
    }

    fn lift(&self, op: &[Vec<usize>], a: PhaseSet, b: PhaseSet) -> PhaseSet {
        // { x op y | x in A^, y in B^ }^
        let da = self.bot_set(a);
        let db = self.bot_set(b);
        let mut image = 0;
        for x in 0..self.n {
            if da & (1 << x) == 0 {
                continue;
            }
            for y in 0..self.n {
                if db & (1 << y) != 0 {
                    image |= 1 << op[x][y];
                }
            }
        }
        self.bot_set(image)
    }

    /// Fact product interpreting tensor/par.
    pub fn times(&self, a: PhaseSet, b: PhaseSet) -> PhaseSet {
        self.lift(&self.tensor, a, b)
    }

    /// Fact operation over `</`.
    pub fn larrow(&self, a: PhaseSet, b: PhaseSet) -> PhaseSet {
        self.lift(&self.oslash, a, b)
    }

    /// Fact operation over `\>`.
    pub fn rarrow(&self, a: PhaseSet, b: PhaseSet) -> PhaseSet {
        self.lift(&self.obslash, a, b)
    }

    /// Check all invariants, including the variant constraints. Returns
    /// the first violation found.
    pub fn validate(&self) -> Result<(), SpaceViolation> {
        let n = self.n;
        if n == 0 || n > MAX_CARRIER {
            return Err(SpaceViolation::CarrierSize(n));
        }
        for table in [&self.tensor, &self.oslash, &self.obslash] {
            if table.len() != n || table.iter().any(|row| row.len() != n) {
                return Err(SpaceViolation::TableShape);
            }
            if table.iter().flatten().any(|&e| e >= n) {
                return Err(SpaceViolation::TableShape);
            }
        }
        if self.bot.len() != n || self.bot.iter().any(|row| row.len() != n) {
            return Err(SpaceViolation::TableShape);
        }
        for x in 0..n {
            for y in 0..n {
                if self.bot[x][y] && !self.bot[y][x] {
                    return Err(SpaceViolation::Symmetry(x, y));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.bot[self.tensor[x][y]][z] != self.bot[x][self.obslash[y][z]] {
                        return Err(SpaceViolation::ResiduationObslash(x, y, z));
                    }
                    if self.bot[x][self.tensor[y][z]] != self.bot[self.oslash[x][y]][z] {
                        return Err(SpaceViolation::ResiduationOslash(x, y, z));
                    }
                }
            }
        }
        match self.variant {
            LogicVariant::Lg0 => {}
            LogicVariant::Lgi => {
                for x in 0..n {
                    for y in 0..n {
                        for u in 0..n {
                            for v in 0..n {
                                let c = self.bot[self.tensor[x][y]][self.tensor[u][v]];
                                // ⟨y</u, v</x⟩ in bot => ⟨x.y, u.v⟩ in bot
                                if self.bot[self.oslash[y][u]][self.oslash[v][x]] && !c {
                                    return Err(SpaceViolation::Grishin { group: 1, x, y, u, v });
                                }
                                // ⟨v\>x, y\>u⟩ in bot => ⟨x.y, u.v⟩ in bot
                                if self.bot[self.obslash[v][x]][self.obslash[y][u]] && !c {
                                    return Err(SpaceViolation::Grishin { group: 2, x, y, u, v });
                                }
                                // ⟨u</x, v\>y⟩ in bot => ⟨x.y, u.v⟩ in bot
                                if self.bot[self.oslash[u][x]][self.obslash[v][y]] && !c {
                                    return Err(SpaceViolation::Grishin { group: 3, x, y, u, v });
                                }
                            }
                        }
                    }
                }
            }
            LogicVariant::Cnl | LogicVariant::CnlCompact => {
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            let t = self.bot[self.tensor[x][y]][z];
                            if self.bot[self.oslash[x][y]][z] != t
                                || self.bot[self.obslash[x][y]][z] != t
                            {
                                return Err(SpaceViolation::Collapse(x, y, z));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The parsimonious CNL form: a single operation and relation, with
    /// the other two operations identified with it.
    pub fn from_cnl_triple(n: usize, tensor: Vec<Vec<usize>>, bot: Vec<Vec<bool>>) -> PhaseSpace {
        PhaseSpace {
            n,
            oslash: tensor.clone(),
            obslash: tensor.clone(),
            tensor,
            bot,
            variant: LogicVariant::Cnl,
        }
    }
}

/// A phase space plus a fact valuation of the positive atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    pub space: PhaseSpace,
    pub valuation: BTreeMap<String, PhaseSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error(transparent)]
    Space(#[from] SpaceViolation),
    #[error("valuation of `{0}` is not a fact")]
    NotAFact(String),
    #[error("no valuation for atom `{0}`")]
    MissingAtom(String),
}

impl Model {
    pub fn validate(&self) -> Result<(), ModelError> {
        self.space.validate()?;
        for (p, &a) in &self.valuation {
            if a & !self.space.full() != 0 || !self.space.is_fact(a) {
                return Err(ModelError::NotAFact(p.clone()));
            }
        }
        Ok(())
    }

    fn atom(&self, p: &str) -> Result<PhaseSet, ModelError> {
        self.valuation
            .get(p)
            .copied()
            .ok_or_else(|| ModelError::MissingAtom(p.to_string()))
    }

    /// `[[P]]+`, a fact.
    pub fn eval_pos(&self, p: &PosFormula) -> Result<PhaseSet, ModelError> {
        use PosFormula::*;
        Ok(match p {
            Atom(a) => self.atom(a)?,
            Tensor(l, r) => self.space.times(self.eval_pos(l)?, self.eval_pos(r)?),
            // [[P </ N]]+ = [[P]]+ <- [[N]]-
            CoRDiv(l, r) => self.space.larrow(self.eval_pos(l)?, self.eval_neg(r)?),
            // [[N \> P]]+ = [[N]]- -> [[P]]+
            CoLDiv(l, r) => self.space.rarrow(self.eval_neg(l)?, self.eval_pos(r)?),
            Or(l, r) => self.eval_pos(l)? & self.eval_pos(r)?,
            Down(n) => self.space.bot_set(self.eval_neg(n)?),
        })
    }

    /// `[[N]]-`, a fact.
    pub fn eval_neg(&self, n: &NegFormula) -> Result<PhaseSet, ModelError> {
        use NegFormula::*;
        Ok(match n {
            Atom(a) => self.atom(a)?,
            // [[M + N]]- = [[N]]- x [[M]]-
            Par(l, r) => self.space.times(self.eval_neg(r)?, self.eval_neg(l)?),
            // [[M / Q]]- = [[Q]]+ -> [[M]]-
            RDiv(m, q) => self.space.rarrow(self.eval_pos(q)?, self.eval_neg(m)?),
            // [[Q \ M]]- = [[M]]- <- [[Q]]+; forced by duality with `</`
            LDiv(q, m) => self.space.larrow(self.eval_neg(m)?, self.eval_pos(q)?),
            And(l, r) => self.eval_neg(l)? & self.eval_neg(r)?,
            Up(p) => self.space.bot_set(self.eval_pos(p)?),
        })
    }

    /// The soundness inclusion `[[_Γ-]] ⊆ [[Δ+]]` for a decorated
    /// presentation. All four equivalent inclusions are computed and
    /// asserted to agree.
    pub fn soundness_check(&self, w: &PolPresentation) -> Result<bool, ModelError> {
        let gp = self.eval_pos(&pol_interp_plus(&w.left))?;
        let gm = self.eval_neg(&pol_interp_minus(&w.left))?;
        let dp = self.eval_pos(&pol_interp_plus(&w.right))?;
        let dm = self.eval_neg(&pol_interp_minus(&w.right))?;
        let subset = |a: PhaseSet, b: PhaseSet| a & !b == 0;
        let stated = subset(self.space.bot_set(gm), dp);
        let others = [
            subset(self.space.bot_set(dm), gp),
            subset(self.space.bot_set(gp), dm),
            subset(self.space.bot_set(dp), gm),
        ];
        assert!(
            others.iter().all(|&o| o == stated),
            "four-way equivalence violated; the space is not a phase space"
        );
        Ok(stated)
    }
}

// --- model file format ---------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelFile {
    pub n: usize,
    pub tensor: Vec<Vec<usize>>,
    pub oslash: Vec<Vec<usize>>,
    pub obslash: Vec<Vec<usize>>,
    pub bot: Vec<Vec<bool>>,
    #[serde(default)]
    pub valuation: BTreeMap<String, Vec<usize>>,
}

impl ModelFile {
    pub fn into_model(self, variant: LogicVariant) -> Model {
        let space = PhaseSpace {
            n: self.n,
            tensor: self.tensor,
            oslash: self.oslash,
            obslash: self.obslash,
            bot: self.bot,
            variant,
        };
        let valuation = self
            .valuation
            .into_iter()
            .map(|(k, xs)| (k, xs.into_iter().fold(0, |m, x| m | (1 << x))))
            .collect();
        Model { space, valuation }
    }

    pub fn from_model(m: &Model) -> ModelFile {
        ModelFile {
            n: m.space.n,
            tensor: m.space.tensor.clone(),
            oslash: m.space.oslash.clone(),
            obslash: m.space.obslash.clone(),
            bot: m.space.bot.clone(),
            valuation: m
                .valuation
                .iter()
                .map(|(k, &mask)| {
                    (k.clone(), (0..m.space.n).filter(|x| mask & (1 << x) != 0).collect())
                })
                .collect(),
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let file = ModelFile::from_model(self);
        write!(f, "{}", serde_json::to_string_pretty(&file).map_err(|_| fmt::Error)?)
    }
}

// --- space enumeration and sampling ---------------------------------------

/// Exhaustively enumerate the valid spaces of carrier size `n` for a
/// variant. Feasible for `n <= 2` only.
pub fn enumerate_spaces(n: usize, variant: LogicVariant) -> Vec<PhaseSpace> {
    assert!(n >= 1 && n <= 2, "exhaustive enumeration is for n <= 2");
    let cells = n * n;
    let mut out = Vec::new();
    let table_of = |code: usize| -> Vec<Vec<usize>> {
        let mut t = vec![vec![0; n]; n];
        let mut c = code;
        for row in t.iter_mut() {
            for cell in row.iter_mut() {
                *cell = c % n;
                c /= n;
            }
        }
        t
    };
    let bot_of = |code: usize| -> Vec<Vec<bool>> {
        let mut t = vec![vec![false; n]; n];
        let mut c = code;
        for row in t.iter_mut() {
            for cell in row.iter_mut() {
                *cell = c % 2 == 1;
                c /= 2;
            }
        }
        t
    };
    let op_count = n.pow(cells as u32);
    for t_code in 0..op_count {
        let tensor = table_of(t_code);
        for o_code in 0..op_count {
            let oslash = table_of(o_code);
            for b_code in 0..op_count {
                let obslash = table_of(b_code);
                for bot_code in 0..(1usize << cells) {
                    let space = PhaseSpace {
                        n,
                        tensor: tensor.clone(),
                        oslash: oslash.clone(),
                        obslash: obslash.clone(),
                        bot: bot_of(bot_code),
                        variant,
                    };
                    if space.validate().is_ok() {
                        out.push(space);
                    }
                }
            }
        }
    }
    out
}

/// Additive group space on `Z_n` with membership set `s`: all three
/// operations are addition mod `n` and `bot(x, y)` iff `x + y ∈ s`. These
/// satisfy every variant's constraints.
pub fn group_space(n: usize, s: PhaseSet, variant: LogicVariant) -> PhaseSpace {
    let add: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect();
    let bot = (0..n)
        .map(|x| (0..n).map(|y| s & (1 << ((x + y) % n)) != 0).collect())
        .collect();
    PhaseSpace {
        n,
        tensor: add.clone(),
        oslash: add.clone(),
        obslash: add,
        bot,
        variant,
    }
}

/// Space from a Latin-square tensor and the ideal `bot(x, y)` iff
/// `x + y = s`. The residuals are solved for cell by cell; they exist
/// uniquely because the translations of a Latin square are bijections,
/// and they generally differ from the tensor, so these spaces can refute
/// structural laws (validation still filters them per variant).
pub fn latin_space(
    n: usize,
    tensor: Vec<Vec<usize>>,
    s: usize,
    variant: LogicVariant,
) -> Option<PhaseSpace> {
    let bot: Vec<Vec<bool>> =
        (0..n).map(|x| (0..n).map(|y| (x + y) % n == s).collect()).collect();
    // oslash[x][y] = e with bot(e, z) iff bot(x, tensor(y, z)): e = s - z0
    // where z0 solves tensor(y, z0) = s - x
    let mut oslash = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            let target = (s + n - x % n) % n;
            let z0 = (0..n).find(|&z| tensor[y][z] == target)?;
            oslash[x][y] = (s + n - z0) % n;
        }
    }
    // obslash[y][z] = e with bot(x, e) iff bot(tensor(x, y), z)
    let mut obslash = vec![vec![0; n]; n];
    for y in 0..n {
        for z in 0..n {
            let target = (s + n - z % n) % n;
            let x0 = (0..n).find(|&x| tensor[x][y] == target)?;
            obslash[y][z] = (s + n - x0) % n;
        }
    }
    let space = PhaseSpace { n, tensor, oslash, obslash, bot, variant };
    space.validate().ok()?;
    Some(space)
}

fn random_permutation(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

/// Sample a candidate space at carrier size `n`: either a group space
/// with a random ideal or a Latin-square space from a randomly isotoped
/// addition table. Rejected when the variant constraints fail.
pub fn sample_space(n: usize, variant: LogicVariant, rng: &mut impl Rng) -> Option<PhaseSpace> {
    if rng.gen_bool(0.5) {
        let s = rng.gen_range(0..(1u32 << n));
        let space = group_space(n, s, variant);
        space.validate().ok()?;
        Some(space)
    } else {
        let rows = random_permutation(n, rng);
        let relabel = random_permutation(n, rng);
        let tensor: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).map(|y| relabel[(rows[x] + y) % n]).collect())
            .collect();
        latin_space(n, tensor, rng.gen_range(0..n), variant)
    }
}

/// All Latin squares of order `n`; meant for `n <= 3`.
pub fn latin_squares(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        fn go(n: usize, acc: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if acc.len() == n {
                out.push(acc.clone());
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    acc.push(v);
                    go(n, acc, used, out);
                    acc.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(n, &mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }
    let rows = perms(n);
    let mut out = Vec::new();
    let mut picked: Vec<usize> = Vec::new();
    fn build(
        rows: &[Vec<usize>],
        n: usize,
        picked: &mut Vec<usize>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if picked.len() == n {
            out.push(picked.iter().map(|&i| rows[i].clone()).collect());
            return;
        }
        'rows: for (i, cand) in rows.iter().enumerate() {
            for &j in picked.iter() {
                let prev = &rows[j];
                for c in 0..n {
                    if prev[c] == cand[c] {
                        continue 'rows;
                    }
                }
            }
            picked.push(i);
            build(rows, n, picked, out);
            picked.pop();
        }
    }
    build(&rows, n, &mut picked, &mut out);
    out
}

/// Deterministic stream of valid spaces for a variant: the exhaustive 1-
/// and 2-point spaces, group and Latin-square spaces up to `max_n`, then
/// seeded samples until `count` is reached.
pub fn valid_spaces(variant: LogicVariant, count: usize, max_n: usize, seed: u64) -> Vec<PhaseSpace> {
    use rand::SeedableRng;
    let mut out: Vec<PhaseSpace> = Vec::new();
    let push = |space: PhaseSpace, out: &mut Vec<PhaseSpace>| {
        if !out.contains(&space) {
            out.push(space);
        }
    };
    for n in 1..=max_n {
        for s in 0..(1u32 << n) {
            push(group_space(n, s, variant), &mut out);
        }
        if n <= 3 {
            for sq in latin_squares(n) {
                for s in 0..n {
                    if let Some(space) = latin_space(n, sq.clone(), s, variant) {
                        push(space, &mut out);
                    }
                }
            }
        }
    }
    for n in 1..=max_n.min(2) {
        if out.len() >= count {
            break;
        }
        for space in enumerate_spaces(n, variant) {
            push(space, &mut out);
            if out.len() >= count {
                break;
            }
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0;
    while out.len() < count && attempts < 100_000 {
        attempts += 1;
        let n = rng.gen_range(1..=max_n);
        if let Some(space) = sample_space(n, variant, &mut rng) {
            push(space, &mut out);
        }
    }
    out.truncate(count);
    out
}

// --- countermodel search ----------------------------------------------------

/// Search for a finite phase model refuting the soundness inclusion of
/// `w` under variant `v`: a found model certifies unprovability. Sizes
/// 1 and 2 are searched exhaustively, larger sizes by seeded sampling;
/// absence of a countermodel at these sizes proves nothing.
pub fn countermodel_search(
    w: &Presentation,
    v: LogicVariant,
    max_n: usize,
    seed: u64,
) -> Option<Model> {
    use rand::SeedableRng;
    let dw = decorate_presentation(w);
    let atoms = presentation_atoms(w);
    for n in 1..=max_n.min(2) {
        for space in enumerate_spaces(n, v) {
            if let Some(m) = refuting_valuation(&space, &atoms, &dw) {
                return Some(m);
            }
        }
    }
    if max_n >= 3 {
        // structured 3-point families first, deterministically
        for s in 0..(1u32 << 3) {
            let space = group_space(3, s, v);
            if space.validate().is_ok() {
                if let Some(m) = refuting_valuation(&space, &atoms, &dw) {
                    return Some(m);
                }
            }
        }
        for sq in latin_squares(3) {
            for s in 0..3 {
                if let Some(space) = latin_space(3, sq.clone(), s, v) {
                    if let Some(m) = refuting_valuation(&space, &atoms, &dw) {
                        return Some(m);
                    }
                }
            }
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut found = 0;
        let mut attempts = 0;
        while found < 2_000 && attempts < 20_000 {
            attempts += 1;
            let n = rng.gen_range(3..=max_n);
            if let Some(space) = sample_space(n, v, &mut rng) {
                found += 1;
                if let Some(m) = refuting_valuation(&space, &atoms, &dw) {
                    return Some(m);
                }
            }
        }
    }
    None
}

fn presentation_atoms(w: &Presentation) -> BTreeSet<String> {
    fn collect(f: &crate::formula::Formula, out: &mut BTreeSet<String>) {
        use crate::formula::Formula::*;
        match f {
            PosAtom(a) | NegAtom(a) => {
                out.insert(a.clone());
            }
            Tensor(l, r) | Par(l, r) | RDiv(l, r) | LDiv(l, r) | CoRDiv(l, r) | CoLDiv(l, r)
            | And(l, r) | Or(l, r) => {
                collect(l, out);
                collect(r, out);
            }
        }
    }
    let mut out = BTreeSet::new();
    for f in w.leaves() {
        collect(f, &mut out);
    }
    out
}

/// Try every fact-valued valuation of `atoms` in `space`, returning a
/// model violating the soundness inclusion if one exists.
fn refuting_valuation(
    space: &PhaseSpace,
    atoms: &BTreeSet<String>,
    dw: &PolPresentation,
) -> Option<Model> {
    let facts = space.facts();
    let names: Vec<&String> = atoms.iter().collect();
    let k = names.len();
    let mut index = vec![0usize; k];
    loop {
        let valuation: BTreeMap<String, PhaseSet> = names
            .iter()
            .zip(&index)
            .map(|(name, &i)| ((*name).clone(), facts[i]))
            .collect();
        let model = Model { space: space.clone(), valuation };
        if let Ok(false) = model.soundness_check(dw) {
            return Some(model);
        }
        // next valuation
        let mut i = 0;
        loop {
            if i == k {
                return None;
            }
            index[i] += 1;
            if index[i] < facts.len() {
                break;
            }
            index[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_sequent;
    use crate::polar::decorate_presentation;
    use crate::unfocused::LogicVariant;

    fn one_point(with_bot: bool) -> PhaseSpace {
        PhaseSpace {
            n: 1,
            tensor: vec![vec![0]],
            oslash: vec![vec![0]],
            obslash: vec![vec![0]],
            bot: vec![vec![with_bot]],
            variant: LogicVariant::Lg0,
        }
    }

    #[test]
    fn one_point_space_valid_for_all_variants() {
        for v in [
            LogicVariant::Lg0,
            LogicVariant::Lgi,
            LogicVariant::Cnl,
            LogicVariant::CnlCompact,
        ] {
            for with_bot in [false, true] {
                let mut s = one_point(with_bot);
                s.variant = v;
                s.validate().unwrap();
            }
        }
    }

    #[test]
    fn symmetry_violation_diagnosed() {
        let s = PhaseSpace {
            n: 2,
            tensor: vec![vec![0, 0], vec![0, 0]],
            oslash: vec![vec![0, 0], vec![0, 0]],
            obslash: vec![vec![0, 0], vec![0, 0]],
            bot: vec![vec![false, true], vec![false, false]],
            variant: LogicVariant::Lg0,
        };
        assert!(matches!(s.validate(), Err(SpaceViolation::Symmetry(0, 1))));
    }

    #[test]
    fn bot_set_basics() {
        let s = one_point(true);
        assert_eq!(s.bot_set(0), 1); // empty set maps to the full carrier
        assert_eq!(s.facts(), vec![0b1]); // only {e} is a fact here
        let s0 = one_point(false);
        // with empty bot: closure(∅) = bot(full) = ∅, so both subsets are facts
        assert_eq!(s0.facts(), vec![0b0, 0b1]);
        assert_eq!(s.times(1, 1), 1);
    }

    #[test]
    fn galois_laws_on_enumerated_spaces() {
        for space in enumerate_spaces(2, LogicVariant::Lg0).into_iter().take(200) {
            let full = space.full();
            for a in 0..=full {
                assert_eq!(space.bot_set(space.bot_set(space.bot_set(a))), space.bot_set(a));
                assert!(a & !space.closure(a) == 0, "A ⊆ A^^");
                for b in 0..=full {
                    let lhs = a & !space.bot_set(b) == 0;
                    let rhs = b & !space.bot_set(a) == 0;
                    assert_eq!(lhs, rhs, "galois at {a} {b}");
                    if a & !b == 0 {
                        assert!(space.bot_set(b) & !space.bot_set(a) == 0, "antitone");
                    }
                }
            }
        }
    }

    #[test]
    fn fact_operations_are_facts_and_meet_closed() {
        for space in enumerate_spaces(2, LogicVariant::Lg0).into_iter().take(120) {
            let facts = space.facts();
            for &a in &facts {
                for &b in &facts {
                    assert!(space.is_fact(space.times(a, b)));
                    assert!(space.is_fact(space.larrow(a, b)));
                    assert!(space.is_fact(space.rarrow(a, b)));
                    assert!(space.is_fact(a & b), "intersection of facts");
                }
            }
        }
    }

    #[test]
    fn eval_examples() {
        let space = group_space(2, 0b01, LogicVariant::Lg0);
        space.validate().unwrap();
        let facts = space.facts();
        let model = Model {
            space: space.clone(),
            valuation: [("p".to_string(), facts[facts.len() - 1])].into_iter().collect(),
        };
        use crate::polar::{NegFormula, PosFormula};
        let p = PosFormula::Atom("p".into());
        let pb = NegFormula::Atom("p".into());
        assert_eq!(model.eval_pos(&p).unwrap(), model.eval_neg(&pb).unwrap());
        // [[P]]+ = [[^P]]-^ and [[P]]+ = [[P^]]- on a few shapes
        let shapes = ["p", "p * p", "p </ ~p", "_~p", "p | p"];
        for s in shapes {
            let f = crate::parse::parse_pol_formula(s).unwrap();
            if let crate::polar::PolFormula::Pos(pf) = f {
                let up = NegFormula::Up(Box::new(pf.clone()));
                assert_eq!(
                    model.eval_pos(&pf).unwrap(),
                    model.space.bot_set(model.eval_neg(&up).unwrap()),
                    "shift law on {s}"
                );
                assert_eq!(
                    model.eval_pos(&pf).unwrap(),
                    model.eval_neg(&crate::polar::negate_pos(&pf)).unwrap(),
                    "duality on {s}"
                );
            }
        }
    }

    #[test]
    fn soundness_on_axiom() {
        let w = parse_sequent("p ; ~p").unwrap();
        let dw = decorate_presentation(&w);
        for space in valid_spaces(LogicVariant::Lg0, 30, 3, 7) {
            let facts = space.facts();
            for &v in facts.iter().take(4) {
                let model =
                    Model { space: space.clone(), valuation: [("p".into(), v)].into_iter().collect() };
                assert!(model.soundness_check(&dw).unwrap(), "axiom sound in every model");
            }
        }
    }

    #[test]
    fn countermodel_for_atom_mismatch() {
        let w = parse_sequent("p ; q").unwrap();
        let m = countermodel_search(&w, LogicVariant::Lg0, 2, 1).expect("refutable at n<=2");
        m.validate().unwrap();
        assert!(!m.soundness_check(&decorate_presentation(&w)).unwrap());
        // a provable sequent has no countermodel
        let w = parse_sequent("p ; ~p").unwrap();
        assert!(countermodel_search(&w, LogicVariant::Lg0, 2, 1).is_none());
    }

    #[test]
    fn model_file_roundtrip() {
        let space = group_space(3, 0b011, LogicVariant::Lgi);
        space.validate().unwrap();
        let model = Model {
            space,
            valuation: [("p".into(), 0b101u32), ("q".into(), 0b010u32)]
                .into_iter()
                .collect(),
        };
        let file = ModelFile::from_model(&model);
        let json = serde_json::to_string(&file).unwrap();
        let back: ModelFile = serde_json::from_str(&json).unwrap();
        let model2 = back.into_model(LogicVariant::Lgi);
        assert_eq!(model, model2);
    }

    #[test]
    fn cnl_triple_expansion() {
        let space = PhaseSpace::from_cnl_triple(
            2,
            vec![vec![0, 1], vec![1, 0]],
            vec![vec![true, false], vec![false, true]],
        );
        space.validate().unwrap();
        assert_eq!(space.oslash, space.tensor);
        assert_eq!(space.obslash, space.tensor);
    }

    #[test]
    fn valid_space_streams_have_requested_size() {
        for v in [LogicVariant::Lg0, LogicVariant::Lgi, LogicVariant::Cnl] {
            let spaces = valid_spaces(v, 50, 3, 42);
            assert_eq!(spaces.len(), 50);
            for s in &spaces {
                s.validate().unwrap();
                assert!(s.n <= 3);
            }
        }
    }

    #[test]
    fn latin_spaces_exist_and_differ_from_their_residual_tables() {
        let squares = latin_squares(3);
        assert_eq!(squares.len(), 12);
        let mut noncollapsed = 0;
        for sq in squares {
            for s in 0..3 {
                if let Some(space) = latin_space(3, sq.clone(), s, LogicVariant::Lg0) {
                    if space.oslash != space.tensor || space.obslash != space.tensor {
                        noncollapsed += 1;
                    }
                }
            }
        }
        assert!(noncollapsed > 0, "some spaces distinguish the operations");
    }
}
