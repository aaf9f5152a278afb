//! Depth-first search for binary `(4, 4, N)` complete complementary codes.
//!
//! Rows are chosen whole, set by set, in increasing exponent order. Each row
//! is a `u32` whose bit `N-1-n` holds the exponent of entry `n`, so integer
//! order is lexicographic order of the exponent string. After every row the
//! partial autocorrelation sums of the current set, and the partial
//! cross-correlation sums against each completed set, are compared against
//! the largest magnitude the remaining rows could still contribute
//! (`r·(N-|τ|)` for `r` rows left). Branches that cannot reach zero are cut.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::ccc::verify_ccc;
use crate::error::{Error, Result};
use crate::seqcore::{CompleteComplementaryCode, PhaseSequence};

const SET_SIZE: usize = 4;
const MAX_LENGTH: usize = 31;
const CLOCK_INTERVAL: u64 = 1 << 12;

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    /// Number of sets, and rows per set. Only 4 is supported.
    pub set_size: usize,
    pub length: usize,
    pub timeout: Duration,
    pub max_solutions: usize,
    /// Restrict to one representative per orbit of the sign symmetries: the
    /// first entry of every row of set 0 and of row 0 of every set is `+1`,
    /// and so is the second entry of `c^0_0`.
    pub symmetry_reduction: bool,
    /// Bound-based pruning after every row. When off, only complete codes
    /// are checked.
    pub pruning: bool,
    /// Worker threads; 1 is the deterministic single-threaded mode.
    pub threads: usize,
}

impl SearchConfig {
    pub fn new(length: usize) -> Self {
        Self {
            set_size: SET_SIZE,
            length,
            timeout: Duration::from_secs(60),
            max_solutions: 1,
            symmetry_reduction: true,
            pruning: true,
            threads: 1,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.set_size != SET_SIZE || self.length == 0 || self.length > MAX_LENGTH {
            return Err(Error::UnsupportedSearch);
        }
        if self.timeout.is_zero() {
            return Err(Error::InvalidConfig("timeout must be positive".into()));
        }
        if self.max_solutions == 0 {
            return Err(Error::InvalidConfig(
                "max solutions must be positive".into(),
            ));
        }
        if self.threads == 0 {
            return Err(Error::InvalidConfig("thread count must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
    pub solutions: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.prunes += other.prunes;
        self.solutions += other.solutions;
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub codes: Vec<CompleteComplementaryCode>,
    pub timed_out: bool,
    pub stats: SearchStats,
}

type Rows = [[u32; SET_SIZE]; SET_SIZE];

/// Precomputed `±1` expansions of every row value.
struct Table {
    n: usize,
    signs: Vec<Vec<i32>>,
}

impl Table {
    fn new(n: usize) -> Self {
        let signs = (0..1u32 << n)
            .map(|v| {
                (0..n)
                    .map(|i| if v >> (n - 1 - i) & 1 == 0 { 1 } else { -1 })
                    .collect()
            })
            .collect();
        Self { n, signs }
    }

    /// Adds `sign · C_{x,y}(τ)` for `τ = -(N-1)..=N-1` into `acc` (index `τ + N - 1`).
    fn add_cross(&self, x: u32, y: u32, sign: i32, acc: &mut [i32]) {
        let (a, b) = (&self.signs[x as usize], &self.signs[y as usize]);
        let n = self.n;
        for t in 0..n {
            let mut pos = 0;
            let mut neg = 0;
            for k in 0..n - t {
                pos += a[k] * b[k + t];
                neg += a[k + t] * b[k];
            }
            acc[n - 1 + t] += sign * pos;
            if t > 0 {
                acc[n - 1 - t] += sign * neg;
            }
        }
    }
}

/// Partial sums for the search frontier.
struct State<'a> {
    table: &'a Table,
    rows: Rows,
    /// `auto[s][τ + N - 1]`: sum of the filled rows' aacf in set `s`.
    auto: Vec<Vec<i32>>,
    /// `cross[t][s][τ + N - 1]` for `t < s`.
    cross: Vec<Vec<Vec<i32>>>,
}

impl<'a> State<'a> {
    fn new(table: &'a Table) -> Self {
        let w = 2 * table.n - 1;
        Self {
            table,
            rows: [[0; SET_SIZE]; SET_SIZE],
            auto: vec![vec![0; w]; SET_SIZE],
            cross: vec![vec![vec![0; w]; SET_SIZE]; SET_SIZE],
        }
    }

    fn apply(&mut self, set: usize, row: usize, value: u32, sign: i32) {
        self.rows[set][row] = value;
        self.table
            .add_cross(value, value, sign, &mut self.auto[set]);
        for t in 0..set {
            let other = self.rows[t][row];
            self.table
                .add_cross(other, value, sign, &mut self.cross[t][set]);
        }
    }

    /// Can rows `row+1..M` of `set` still bring every sum to its target?
    fn feasible(&self, set: usize, row: usize) -> bool {
        let n = self.table.n as i32;
        let left = (SET_SIZE - 1 - row) as i32;
        let ok = |v: &[i32], skip_zero: bool| {
            v.iter().enumerate().all(|(i, &x)| {
                let tau = i as i32 - (n - 1);
                (skip_zero && tau == 0) || x.abs() <= left * (n - tau.abs())
            })
        };
        ok(&self.auto[set], true) && (0..set).all(|t| ok(&self.cross[t][set], false))
    }

    /// Exact CCC conditions on every completed set pair.
    fn complete_ok(&self, upto: usize) -> bool {
        let n = self.table.n;
        (0..upto).all(|s| {
            self.auto[s]
                .iter()
                .enumerate()
                .all(|(i, &x)| i == n - 1 || x == 0)
                && (0..s).all(|t| self.cross[t][s].iter().all(|&x| x == 0))
        })
    }
}

struct Shared {
    deadline: Instant,
    timed_out: AtomicBool,
}

struct Walker<'a> {
    config: &'a SearchConfig,
    shared: &'a Shared,
    state: State<'a>,
    stats: SearchStats,
    found: Vec<Rows>,
    limit: usize,
}

impl<'a> Walker<'a> {
    fn out_of_time(&mut self) -> bool {
        if self.shared.timed_out.load(Ordering::Relaxed) {
            return true;
        }
        if self.stats.nodes.is_multiple_of(CLOCK_INTERVAL) && Instant::now() >= self.shared.deadline
        {
            self.shared.timed_out.store(true, Ordering::Relaxed);
            return true;
        }
        false
    }

    /// Row values tried at `depth`, in increasing order.
    ///
    /// The reduction uses three sign symmetries of a CCC: negating row `m` of
    /// every set, negating one whole set, and multiplying entry `n` of every
    /// row by `(-1)^n`. Together they can make the leading entries fixed here
    /// equal to `+1` without touching any other constraint.
    fn candidates(&self, depth: usize) -> std::ops::Range<u32> {
        let n = self.config.length as u32;
        if !self.config.symmetry_reduction {
            return 0..1 << n;
        }
        let (set, row) = (depth / SET_SIZE, depth % SET_SIZE);
        match (set, row) {
            (0, 0) if n >= 2 => 0..1 << (n - 2),
            (0, _) | (_, 0) => 0..1 << (n - 1),
            _ => 0..1 << n,
        }
    }

    /// Explores every extension of the first `depth` rows. Returns false to stop.
    fn descend(&mut self, depth: usize) -> bool {
        if depth == SET_SIZE * SET_SIZE {
            if self.config.pruning || self.state.complete_ok(SET_SIZE) {
                self.stats.solutions += 1;
                self.found.push(self.state.rows);
            }
            return self.found.len() < self.limit;
        }
        let (set, row) = (depth / SET_SIZE, depth % SET_SIZE);
        for value in self.candidates(depth) {
            self.stats.nodes += 1;
            if self.out_of_time() {
                return false;
            }
            self.state.apply(set, row, value, 1);
            let keep = !self.config.pruning || self.state.feasible(set, row);
            let go_on = if keep {
                self.descend(depth + 1)
            } else {
                self.stats.prunes += 1;
                true
            };
            self.state.apply(set, row, value, -1);
            if !go_on {
                return false;
            }
        }
        true
    }

    /// Collects the feasible row prefixes of length `depth` in search order.
    fn prefixes(
        &mut self,
        depth: usize,
        target: usize,
        out: &mut Vec<Vec<u32>>,
        path: &mut Vec<u32>,
    ) {
        if depth == target {
            out.push(path.clone());
            return;
        }
        let (set, row) = (depth / SET_SIZE, depth % SET_SIZE);
        for value in self.candidates(depth) {
            self.state.apply(set, row, value, 1);
            if !self.config.pruning || self.state.feasible(set, row) {
                path.push(value);
                self.prefixes(depth + 1, target, out, path);
                path.pop();
            }
            self.state.apply(set, row, value, -1);
        }
    }

    fn run_prefix(&mut self, prefix: &[u32]) -> bool {
        for (d, &v) in prefix.iter().enumerate() {
            self.state.apply(d / SET_SIZE, d % SET_SIZE, v, 1);
        }
        let go_on = self.descend(prefix.len());
        for (d, &v) in prefix.iter().enumerate().rev() {
            self.state.apply(d / SET_SIZE, d % SET_SIZE, v, -1);
        }
        go_on
    }
}

fn to_code(rows: &Rows, n: usize) -> CompleteComplementaryCode {
    let sets = rows
        .iter()
        .map(|set| {
            set.iter()
                .map(|&v| {
                    let exps = (0..n).map(|i| v >> (n - 1 - i) & 1).collect();
                    PhaseSequence::new(2, exps).expect("binary exponents")
                })
                .collect()
        })
        .collect();
    CompleteComplementaryCode::from_rows(sets).expect("square by construction")
}

/// Searches for binary `(4, 4, N)` codes in lexicographic row order.
///
/// On timeout the codes found so far are returned with `timed_out` set.
/// With several threads, the top two rows are split across workers and the
/// results are merged in search order, so the output matches the
/// single-threaded run whenever neither run times out.
pub fn search_ccc(config: &SearchConfig) -> Result<SearchOutcome> {
    config.validate()?;
    let table = Table::new(config.length);
    let shared = Shared {
        deadline: Instant::now() + config.timeout,
        timed_out: AtomicBool::new(false),
    };
    let walker = |limit| Walker {
        config,
        shared: &shared,
        state: State::new(&table),
        stats: SearchStats::default(),
        found: Vec::new(),
        limit,
    };

    let (found, stats) = if config.threads == 1 {
        let mut w = walker(config.max_solutions);
        w.descend(0);
        (w.found, w.stats)
    } else {
        let mut prefixes = Vec::new();
        walker(config.max_solutions).prefixes(0, 2, &mut prefixes, &mut Vec::new());
        search_parallel(config, &prefixes, &walker)
    };

    let n = config.length;
    let codes = found
        .iter()
        .map(|r| to_code(r, n))
        .inspect(|c| debug_assert!(verify_ccc(c)))
        .filter(verify_ccc)
        .collect();
    Ok(SearchOutcome {
        codes,
        timed_out: shared.timed_out.load(Ordering::Relaxed),
        stats,
    })
}

fn search_parallel<'a, F>(
    config: &SearchConfig,
    prefixes: &[Vec<u32>],
    make: &F,
) -> (Vec<Rows>, SearchStats)
where
    F: Fn(usize) -> Walker<'a> + Sync,
{
    struct Progress {
        next: usize,
        results: Vec<Option<Vec<Rows>>>,
        stats: SearchStats,
    }
    let progress = Mutex::new(Progress {
        next: 0,
        results: vec![None; prefixes.len()],
        stats: SearchStats::default(),
    });
    // Enough solutions in a completed leading run of prefixes: later ones cannot
    // contribute to the truncated output.
    let saturated = |p: &Progress| {
        let mut total = 0;
        for r in &p.results {
            match r {
                Some(v) => total += v.len(),
                None => return false,
            }
            if total >= config.max_solutions {
                return true;
            }
        }
        false
    };
    std::thread::scope(|scope| {
        for _ in 0..config.threads {
            scope.spawn(|| loop {
                let index = {
                    let mut p = progress.lock().expect("no poisoned workers");
                    if p.next >= prefixes.len() || saturated(&p) {
                        return;
                    }
                    p.next += 1;
                    p.next - 1
                };
                let mut w = make(config.max_solutions);
                w.run_prefix(&prefixes[index]);
                let mut p = progress.lock().expect("no poisoned workers");
                p.stats.absorb(&w.stats);
                p.results[index] = Some(w.found);
            });
        }
    });
    let p = progress.into_inner().expect("no poisoned workers");
    let mut found: Vec<Rows> = p.results.into_iter().flatten().flatten().collect();
    found.truncate(config.max_solutions);
    (found, p.stats)
}

/// Lexicographically least image of a binary code under global negation and
/// simultaneous reversal of every row.
pub fn canonicalize(code: &CompleteComplementaryCode) -> Result<CompleteComplementaryCode> {
    if code.modulus() != 2 {
        return Err(Error::Shape(
            "canonical form is defined for binary codes".into(),
        ));
    }
    let map = |f: &dyn Fn(&PhaseSequence) -> PhaseSequence| {
        let rows = code
            .sets()
            .iter()
            .map(|s| s.rows().iter().map(f).collect())
            .collect();
        CompleteComplementaryCode::from_rows(rows).expect("same shape")
    };
    let key = |c: &CompleteComplementaryCode| -> Vec<u32> {
        c.sets()
            .iter()
            .flat_map(|s| s.rows())
            .flat_map(|r| r.exponents().expect("binary").to_vec())
            .collect()
    };
    let negate = |r: &PhaseSequence| r.negate().expect("even modulus");
    let images = [
        code.clone(),
        map(&negate),
        map(&|r| r.reverse()),
        map(&|r| negate(&r.reverse())),
    ];
    Ok(images
        .into_iter()
        .min_by_key(|c| key(c))
        .expect("four images"))
}
