use std::io::{BufRead, Write};
use std::marker::PhantomData;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use clap::Args;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{emit_json, read_json, CliError, Config, Format, EXIT_FALSIFIED, EXIT_INPUT, EXIT_OK};
use crate::finite_topology::{FiniteSpace, PointSet};
use crate::games::{
    check_certificate, constraint, evaluate, validate_alpha, validate_beta, AlphaStrategy, Arena, BetaMove,
    BetaStrategy, BoxAlpha, BoxBeta, Certificate, GameError, GameKind, Play, Referee, Response, Role, Round,
    ScriptedAlpha, ScriptedBeta, StrategyError, StrategyInfo, Verdict, WinRule,
};
use crate::presets::{catalog_space, finite_alpha, finite_beta, sorgenfrey_alpha, sorgenfrey_beta};
use crate::sorgenfrey::{parse_rat, SInterval, SorgenfreyArena};

#[derive(Debug, Clone, Args)]
pub struct PlayArgs {
    /// Script file; overrides the other play options.
    #[arg(long)]
    pub script: Option<PathBuf>,
    /// Catalog space name, a space JSON file, or `sorgenfrey`.
    #[arg(long, default_value = "sierpinski")]
    pub backend: String,
    #[arg(long, default_value = "OD")]
    pub kind: GameKind,
    #[arg(long, default_value = "i")]
    pub rule: WinRule,
    /// copy, random, random:N, separating, human.
    #[arg(long, default_value = "random")]
    pub beta: String,
    /// copy, random, random:N, lemma, human.
    #[arg(long, default_value = "copy")]
    pub alpha: String,
    /// Write the transcript JSON here.
    #[arg(long)]
    pub transcript: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScriptBackend {
    Named(String),
    Space(FiniteSpace),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScriptStrategy {
    Named(String),
    Moves { moves: Vec<Value> },
}

/// `game play --script` input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GameScript {
    #[serde(default = "one")]
    pub format: u32,
    pub backend: ScriptBackend,
    /// Sorgenfrey root interval, `[0, 1)` when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<SInterval>,
    pub kind: GameKind,
    pub rule: WinRule,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub horizon: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub beta: ScriptStrategy,
    pub alpha: ScriptStrategy,
}

fn one() -> u32 {
    1
}

/// `"0,2"`, `"{0,2}"` or `"[0, 2]"`.
pub fn parse_point_set(s: &str) -> Result<PointSet, String> {
    let t = s.trim().trim_start_matches(['{', '[']).trim_end_matches(['}', ']']);
    let mut set = PointSet::EMPTY;
    for part in t.split([',', ' ']).filter(|p| !p.is_empty()) {
        let x: usize = part.parse().map_err(|_| format!("bad point {part:?}"))?;
        if x >= crate::finite_topology::MAX_POINTS {
            return Err(format!("point {x} out of range"));
        }
        set.insert(x);
    }
    Ok(set)
}

/// `"a,b"`, `"a b"` or `"[a, b)"`.
pub fn parse_interval(s: &str) -> Result<SInterval, String> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(')');
    let parts: Vec<&str> = t.split([',', ' ']).filter(|p| !p.is_empty()).collect();
    let [a, b] = parts.as_slice() else {
        return Err(format!("expected two endpoints in {s:?}"));
    };
    SInterval::new(parse_rat(a).map_err(|e| e.to_string())?, parse_rat(b).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())
}

/// Text syntax for moves typed at the terminal.
pub trait TextSet: Arena {
    fn parse_set(&self, s: &str) -> Result<Self::Set, String>;
    const SYNTAX: &'static str;
}

impl TextSet for FiniteSpace {
    fn parse_set(&self, s: &str) -> Result<PointSet, String> {
        parse_point_set(s)
    }
    const SYNTAX: &'static str = "points like 0,1";
}

impl TextSet for SorgenfreyArena {
    fn parse_set(&self, s: &str) -> Result<SInterval, String> {
        parse_interval(s)
    }
    const SYNTAX: &'static str = "endpoints like 0,1/2";
}

type SharedInput = Arc<Mutex<Box<dyn BufRead + Send>>>;

fn read_line(input: &SharedInput, prompt: &str) -> Result<String, StrategyError> {
    eprint!("{prompt}");
    let mut line = String::new();
    let n = input
        .lock()
        .expect("input lock")
        .read_line(&mut line)
        .map_err(|e| StrategyError::Input(e.to_string()))?;
    if n == 0 {
        return Err(StrategyError::Input("end of input".into()));
    }
    Ok(line.trim().to_string())
}

/// β moves typed at the terminal; OD moves are `V ; W`.
pub struct HumanBeta<A> {
    input: SharedInput,
    kind: GameKind,
    _arena: PhantomData<fn() -> A>,
}

pub struct HumanAlpha<A> {
    input: SharedInput,
    kind: GameKind,
    _arena: PhantomData<fn() -> A>,
}

impl<A: TextSet> BetaStrategy<A> for HumanBeta<A> {
    fn info(&self) -> StrategyInfo {
        StrategyInfo::new("human", Role::Beta, self.kind)
    }

    fn respond(&self, arena: &A, history: &[Round<A::Set>]) -> Result<Response<BetaMove<A::Set>>, StrategyError> {
        let u = constraint(arena, history);
        let shape = if self.kind == GameKind::OD { "V ; W" } else { "V" };
        loop {
            let line = read_line(
                &self.input,
                &format!("round {} beta, inside {u}, enter {shape} ({}): ", history.len(), A::SYNTAX),
            )?;
            let parsed = match self.kind {
                GameKind::BM => arena.parse_set(&line).map(BetaMove::bm),
                GameKind::OD => match line.split_once(';') {
                    Some((v, w)) => arena
                        .parse_set(v)
                        .and_then(|v| arena.parse_set(w).map(|w| BetaMove::od(v, w))),
                    None => Err("expected V ; W".into()),
                },
            };
            match parsed.and_then(|mv| validate_beta(arena, self.kind, history, &mv).map(|_| mv)) {
                Ok(mv) => return Ok(Response::plain(mv)),
                Err(e) => eprintln!("rejected: {e}"),
            }
        }
    }
}

impl<A: TextSet> AlphaStrategy<A> for HumanAlpha<A> {
    fn info(&self) -> StrategyInfo {
        StrategyInfo::new("human", Role::Alpha, self.kind)
    }

    fn respond(
        &self,
        arena: &A,
        history: &[Round<A::Set>],
        beta: &BetaMove<A::Set>,
    ) -> Result<Response<A::Set>, StrategyError> {
        loop {
            let line = read_line(
                &self.input,
                &format!("round {} alpha, inside V = {}, enter U ({}): ", history.len(), beta.v, A::SYNTAX),
            )?;
            match arena
                .parse_set(&line)
                .and_then(|u| validate_alpha(arena, beta, &u).map(|_| u))
            {
                Ok(u) => return Ok(Response::plain(u)),
                Err(e) => eprintln!("rejected: {e}"),
            }
        }
    }
}

struct Setup<A: Arena> {
    beta: BoxBeta<A>,
    alpha: BoxAlpha<A>,
    human: bool,
}

fn decode_moves<T: serde::de::DeserializeOwned>(moves: &[Value]) -> Result<Vec<T>, CliError> {
    moves
        .iter()
        .enumerate()
        .map(|(i, m)| serde_json::from_value(m.clone()).map_err(|e| CliError::input(format!("move {i}: {e}"))))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn setup<A: TextSet + 'static>(
    arena: &A,
    kind: GameKind,
    beta: &ScriptStrategy,
    alpha: &ScriptStrategy,
    input: &SharedInput,
    named_beta: impl Fn(&str) -> Result<BoxBeta<A>, String>,
    named_alpha: impl Fn(&str) -> Result<BoxAlpha<A>, String>,
) -> Result<Setup<A>, CliError> {
    let _ = arena;
    let mut human = false;
    let beta: BoxBeta<A> = match beta {
        ScriptStrategy::Named(n) if n == "human" => {
            human = true;
            Box::new(HumanBeta::<A> {
                input: input.clone(),
                kind,
                _arena: PhantomData,
            })
        }
        ScriptStrategy::Named(n) => named_beta(n).map_err(CliError::input)?,
        ScriptStrategy::Moves { moves } => Box::new(ScriptedBeta {
            moves: decode_moves::<BetaMove<A::Set>>(moves)?,
            kind,
        }),
    };
    let alpha: BoxAlpha<A> = match alpha {
        ScriptStrategy::Named(n) if n == "human" => {
            human = true;
            Box::new(HumanAlpha::<A> {
                input: input.clone(),
                kind,
                _arena: PhantomData,
            })
        }
        ScriptStrategy::Named(n) => named_alpha(n).map_err(CliError::input)?,
        ScriptStrategy::Moves { moves } => Box::new(ScriptedAlpha {
            moves: decode_moves::<A::Set>(moves)?,
            kind,
        }),
    };
    Ok(Setup { beta, alpha, human })
}

pub(crate) fn describe_verdict<A: Arena>(v: &Verdict<A>) -> String {
    let cert = |c: &Certificate<A>| match c {
        Certificate::Stabilized { point } => format!("every U_n contains {point}"),
        Certificate::Accumulation { point, recurring, rounds } => {
            format!("{point} lies in W = {recurring}, recurring at rounds {rounds:?}")
        }
        Certificate::CompactMeets { compact } => {
            let pts: Vec<String> = compact.iter().map(|p| p.to_string()).collect();
            format!("the finite set {{{}}} meets every W_n", pts.join(","))
        }
        Certificate::Separation { .. } => "V_n x W_n misses P and closure(V_n) lies in U_(n-1) every round".into(),
    };
    match v {
        Verdict::AlphaWins { certificate } => format!("alpha wins: {}", cert(certificate)),
        Verdict::BetaWins { certificate } => format!("beta wins: {}", cert(certificate)),
        Verdict::Undetermined { reason } => format!("undetermined: {reason}"),
    }
}

pub(crate) fn print_transcript<A: Arena>(out: &mut dyn Write, play: &Play<A>) -> std::io::Result<()> {
    writeln!(out, "{} play: beta = {}, alpha = {}", play.kind, play.beta.name, play.alpha.name)?;
    for (n, r) in play.rounds.iter().enumerate() {
        match &r.w {
            Some(w) => writeln!(out, "round {n}: V = {}  W = {w}  U = {}", r.v, r.u)?,
            None => writeln!(out, "round {n}: V = {}  U = {}", r.v, r.u)?,
        }
        if let Some(notes) = play.notes.get(n) {
            for note in notes.all() {
                writeln!(out, "    [{}] {}", if note.holds { "ok" } else { "FAIL" }, note.check)?;
            }
        }
    }
    Ok(())
}

/// Plays, evaluates and re-checks the certificate.
pub(crate) fn finish_play<A: Arena>(
    cfg: &Config,
    arena: &A,
    play: Play<A>,
    rule: WinRule,
    backend: Value,
    out: &mut dyn Write,
    transcript: Option<&PathBuf>,
    extra: Option<Value>,
) -> Result<i32, CliError> {
    let verdict = evaluate(arena, &play, rule).map_err(|e| CliError::input(e.to_string()))?;
    let accepted = match verdict.certificate() {
        Some(c) => Some(check_certificate(arena, &play, rule, c).map_err(|e| CliError::input(e.to_string()))?),
        None => None,
    };
    let failed = play.failed_notes();
    let mut doc = json!({
        "format": 1,
        "backend": backend,
        "rule": rule,
        "play": play,
        "verdict": verdict,
        "certificate_accepted": accepted,
        "failed_notes": failed,
    });
    if let Some(extra) = extra {
        doc["extra"] = extra;
    }
    if let Some(path) = transcript {
        let text = serde_json::to_string_pretty(&doc).expect("transcripts serialize");
        std::fs::write(path, text + "\n").map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    }
    match cfg.format {
        Format::Json => emit_json(out, &doc)?,
        Format::Text => {
            print_transcript(out, &play)?;
            writeln!(out, "rule {rule}: {}", describe_verdict(&verdict))?;
            if let Some(ok) = accepted {
                writeln!(out, "certificate check: {}", if ok { "accepted" } else { "REJECTED" })?;
            }
        }
    }
    Ok(if failed.is_empty() && accepted != Some(false) {
        EXIT_OK
    } else {
        EXIT_FALSIFIED
    })
}

fn game_error_code(e: &GameError) -> i32 {
    match e {
        GameError::IllegalMove { .. } | GameError::RuleMismatch { .. } | GameError::ZeroHorizon => EXIT_INPUT,
        GameError::Strategy {
            source: StrategyError::Input(_),
            ..
        } => EXIT_INPUT,
        _ => EXIT_FALSIFIED,
    }
}

#[allow(clippy::too_many_arguments)]
fn play_on<A: TextSet + 'static>(
    cfg: &Config,
    arena: &A,
    kind: GameKind,
    rule: WinRule,
    horizon: usize,
    s: Setup<A>,
    backend: Value,
    out: &mut dyn Write,
    transcript: Option<&PathBuf>,
) -> Result<i32, CliError> {
    if rule.needs_side_sets() && kind == GameKind::BM {
        return Err(CliError::input(GameError::RuleMismatch { rule, kind }.to_string()));
    }
    let referee = Referee {
        check_determinism: !s.human,
    };
    let play = referee
        .run(arena, kind, s.beta.as_ref(), s.alpha.as_ref(), horizon)
        .map_err(|e| CliError {
            code: game_error_code(&e),
            message: e.to_string(),
        })?;
    finish_play(cfg, arena, play, rule, backend, out, transcript, None)
}

pub(super) fn cmd_play(
    cfg: &Config,
    args: &PlayArgs,
    out: &mut dyn Write,
    _err: &mut dyn Write,
    input: Box<dyn BufRead + Send>,
) -> Result<i32, CliError> {
    let script: GameScript = match &args.script {
        Some(path) => read_json(path)?,
        None => {
            let backend = if args.backend.ends_with(".json") {
                ScriptBackend::Space(read_json(&PathBuf::from(&args.backend))?)
            } else {
                ScriptBackend::Named(args.backend.clone())
            };
            GameScript {
                format: 1,
                backend,
                root: None,
                kind: args.kind,
                rule: args.rule,
                horizon: None,
                seed: None,
                beta: ScriptStrategy::Named(args.beta.clone()),
                alpha: ScriptStrategy::Named(args.alpha.clone()),
            }
        }
    };
    if script.format != 1 {
        return Err(CliError::input(format!("unsupported script format {}", script.format)));
    }
    let horizon = script.horizon.unwrap_or(cfg.horizon);
    let seed = script.seed.unwrap_or(cfg.seed);
    let kind = script.kind;
    let input: SharedInput = Arc::new(Mutex::new(input));
    let transcript = args.transcript.as_ref();

    let space = match &script.backend {
        ScriptBackend::Named(n) if n == "sorgenfrey" => {
            let arena = SorgenfreyArena::new(script.root.clone().unwrap_or_else(crate::sorgenfrey::unit_interval));
            let s = setup(
                &arena,
                kind,
                &script.beta,
                &script.alpha,
                &input,
                |n| sorgenfrey_beta(n, &arena, kind, seed),
                |n| sorgenfrey_alpha(n, kind, seed),
            )?;
            let backend = json!({"sorgenfrey": arena.root});
            return play_on(cfg, &arena, kind, script.rule, horizon, s, backend, out, transcript);
        }
        ScriptBackend::Named(n) => {
            catalog_space(n).ok_or_else(|| CliError::input(format!("no space named {n:?}")))?
        }
        ScriptBackend::Space(s) => s.clone(),
    };
    if space.is_empty() {
        return Err(CliError::input("games need a nonempty space"));
    }
    let s = setup(
        &space,
        kind,
        &script.beta,
        &script.alpha,
        &input,
        |n| finite_beta(n, &space, kind, seed),
        |n| finite_alpha(n, &space, kind, seed),
    )?;
    let backend = serde_json::to_value(&script.backend).expect("backends serialize");
    play_on(cfg, &space, kind, script.rule, horizon, s, backend, out, transcript)
}
