//! Local JSON session API for interactive human-vs-engine play.
//!
//! Routes:
//! - `POST /api/session` `{backend, kind, rule, human_role, engine_strategy, seed?}`
//! - `POST /api/session/{id}/move` `{move}`
//! - `GET /api/session/{id}`
//! - `GET /api/catalog/spaces`
//! - `POST /api/check/delta-baire` `{space}`
//!
//! Finite moves name open sets by id (index into the space's nonempty opens,
//! ascending) or by point list; Sorgenfrey moves are `{"a": "p/q", "b": "r/s"}`.

use std::collections::HashMap;
use std::net::SocketAddr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, RwLock};

use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::diagonal::{delta_baire_witness, is_baire, is_delta_baire, minimal_semi_nbhd};
use crate::finite_topology::{FiniteSpace, PointSet};
use crate::games::{
    constraint, evaluate, AlphaStrategy, Arena, BetaMove, BetaStrategy, BoxAlpha, BoxBeta, GameError, GameKind, Match,
    Note, Play, Role, StrategyInfo, WinRule,
};
use crate::presets::{catalog_space, finite_alpha, finite_beta, sorgenfrey_alpha, sorgenfrey_beta, space_catalog};
use crate::sorgenfrey::{SInterval, SorgenfreyArena};

#[derive(Debug, Clone)]
pub struct ApiError {
    status: StatusCode,
    code: &'static str,
    reason: String,
}

impl ApiError {
    fn new(status: StatusCode, code: &'static str, reason: impl Into<String>) -> Self {
        ApiError {
            status,
            code,
            reason: reason.into(),
        }
    }

    fn bad(reason: impl Into<String>) -> Self {
        ApiError::new(StatusCode::BAD_REQUEST, "bad_request", reason)
    }
}

impl From<GameError> for ApiError {
    fn from(e: GameError) -> Self {
        let code = match &e {
            GameError::IllegalMove { .. } => "illegal_move",
            GameError::OutOfTurn(_) => "out_of_turn",
            GameError::RuleMismatch { .. } => "rule_mismatch",
            GameError::Strategy { .. } | GameError::Nondeterministic { .. } => "strategy_error",
            _ => "game_error",
        };
        let status = match code {
            "strategy_error" => StatusCode::CONFLICT,
            _ => StatusCode::UNPROCESSABLE_ENTITY,
        };
        let reason = match e {
            GameError::IllegalMove { reason, .. } => reason,
            other => other.to_string(),
        };
        ApiError::new(status, code, reason)
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(json!({"code": self.code, "reason": self.reason}))).into_response()
    }
}

/// How a backend's sets travel over the wire.
trait Codec: Arena {
    fn encode(&self, s: &Self::Set) -> Value;
    fn decode(&self, v: &Value) -> Result<Self::Set, String>;
    /// Legal moves inside `within`, for backends that can list them.
    fn palette(&self, within: &Self::Set) -> Option<Value>;
}

fn nonempty_opens(space: &FiniteSpace) -> Vec<PointSet> {
    space.opens().into_iter().filter(|o| !o.is_empty()).collect()
}

fn encode_open(space: &FiniteSpace, s: PointSet) -> Value {
    let id = nonempty_opens(space).iter().position(|&o| o == s);
    json!({"id": id, "points": s.to_vec()})
}

impl Codec for FiniteSpace {
    fn encode(&self, s: &PointSet) -> Value {
        encode_open(self, *s)
    }

    fn decode(&self, v: &Value) -> Result<PointSet, String> {
        let by_id = |id: u64| {
            nonempty_opens(self)
                .get(id as usize)
                .copied()
                .ok_or_else(|| format!("no open set with id {id}"))
        };
        let by_points = |pts: &Vec<Value>| -> Result<PointSet, String> {
            let mut s = PointSet::EMPTY;
            for p in pts {
                let x = p.as_u64().ok_or("points must be integers")? as usize;
                if x >= self.len() {
                    return Err(format!("point {x} is not in the space"));
                }
                s.insert(x);
            }
            Ok(s)
        };
        match v {
            Value::Number(n) => by_id(n.as_u64().ok_or("id must be a nonnegative integer")?),
            Value::Array(pts) => by_points(pts),
            Value::Object(o) => match (o.get("id"), o.get("points")) {
                (Some(Value::Number(n)), _) => by_id(n.as_u64().ok_or("id must be a nonnegative integer")?),
                (_, Some(Value::Array(pts))) => by_points(pts),
                _ => Err("expected {\"id\": n} or {\"points\": [..]}".into()),
            },
            _ => Err("expected an open-set id or a point list".into()),
        }
    }

    fn palette(&self, within: &PointSet) -> Option<Value> {
        let opens = nonempty_opens(self);
        Some(Value::Array(
            opens
                .iter()
                .enumerate()
                .filter(|(_, o)| o.is_subset(*within))
                .map(|(id, o)| json!({"id": id, "points": o.to_vec()}))
                .collect(),
        ))
    }
}

impl Codec for SorgenfreyArena {
    fn encode(&self, s: &SInterval) -> Value {
        serde_json::to_value(s).expect("intervals serialize")
    }

    fn decode(&self, v: &Value) -> Result<SInterval, String> {
        serde_json::from_value(v.clone()).map_err(|e| e.to_string())
    }

    fn palette(&self, _within: &SInterval) -> Option<Value> {
        None
    }
}

enum Engine<A: Arena> {
    Beta(BoxBeta<A>),
    Alpha(BoxAlpha<A>),
}

impl<A: Arena> Engine<A> {
    fn info(&self) -> StrategyInfo {
        match self {
            Engine::Beta(b) => b.info(),
            Engine::Alpha(a) => a.info(),
        }
    }
}

struct Session<A: Codec> {
    id: u64,
    backend: String,
    arena: A,
    rule: WinRule,
    human: Role,
    engine: Engine<A>,
    game: Match<A::Set>,
}

trait GameSession: Send + Sync {
    fn state(&self) -> Value;
    fn play_move(&mut self, mv: &Value) -> Result<Value, ApiError>;
}

impl<A: Codec> Session<A> {
    fn human_info(&self) -> StrategyInfo {
        StrategyInfo::new("human", self.human, self.game.kind())
    }

    fn play(&self) -> Play<A> {
        let (beta, alpha, beta_claim) = match &self.engine {
            Engine::Beta(b) => (b.info(), self.human_info(), b.claim()),
            Engine::Alpha(a) => (self.human_info(), a.info(), None),
        };
        Play {
            kind: self.game.kind(),
            beta,
            alpha,
            rounds: self.game.rounds().to_vec(),
            notes: self.game.notes().to_vec(),
            beta_claim,
        }
    }

    fn engine_turn(&mut self) -> Result<(), ApiError> {
        let round = self.game.rounds().len();
        let wrap = |player, source| ApiError::from(GameError::Strategy { player, round, source });
        match &self.engine {
            Engine::Beta(b) if self.game.to_move() == Role::Beta => {
                let r = b.respond(&self.arena, self.game.rounds()).map_err(|e| wrap(Role::Beta, e))?;
                self.game.submit_beta(&self.arena, r.mv, r.notes)?;
            }
            Engine::Alpha(a) if self.game.to_move() == Role::Alpha => {
                let pending = self.game.pending().expect("alpha to move").clone();
                let r = a
                    .respond(&self.arena, self.game.rounds(), &pending)
                    .map_err(|e| wrap(Role::Alpha, e))?;
                self.game.submit_alpha(&self.arena, r.mv, r.notes)?;
            }
            _ => {}
        }
        Ok(())
    }

    fn encode_beta(&self, mv: &BetaMove<A::Set>) -> Value {
        let mut o = json!({"v": self.arena.encode(&mv.v)});
        if let Some(w) = &mv.w {
            o["w"] = self.arena.encode(w);
        }
        o
    }

    fn verdict(&self) -> Value {
        if self.game.rounds().is_empty() {
            return Value::Null;
        }
        match evaluate(&self.arena, &self.play(), self.rule) {
            Ok(v) => serde_json::to_value(v).expect("verdicts serialize"),
            Err(e) => json!({"error": e.to_string()}),
        }
    }

    /// Notes of the last completed round.
    fn annotations(&self) -> Vec<Note> {
        self.game
            .notes()
            .last()
            .map(|n| n.all().cloned().collect())
            .unwrap_or_default()
    }
}

impl<A: Codec> GameSession for Session<A> {
    fn state(&self) -> Value {
        let rounds: Vec<Value> = self
            .game
            .rounds()
            .iter()
            .map(|r| {
                let mut o = self.encode_beta(&r.beta_move());
                o["u"] = self.arena.encode(&r.u);
                o
            })
            .collect();
        let notes: Vec<Value> = self
            .game
            .notes()
            .iter()
            .map(|n| serde_json::to_value(n).expect("notes serialize"))
            .collect();
        let within = match self.game.pending() {
            Some(mv) => mv.v.clone(),
            None => constraint(&self.arena, self.game.rounds()),
        };
        json!({
            "session_id": self.id.to_string(),
            "backend": self.backend,
            "kind": self.game.kind(),
            "rule": self.rule,
            "human_role": self.human,
            "engine": self.engine.info(),
            "to_move": self.game.to_move(),
            "constraint": self.arena.encode(&within),
            "pending": self.game.pending().map(|mv| self.encode_beta(mv)),
            "rounds": rounds,
            "notes": notes,
            "palette": self.arena.palette(&within),
            "verdict": self.verdict(),
        })
    }

    fn play_move(&mut self, mv: &Value) -> Result<Value, ApiError> {
        if self.game.to_move() != self.human {
            return Err(ApiError::new(
                StatusCode::CONFLICT,
                "out_of_turn",
                format!("it is {}'s turn", self.game.to_move()),
            ));
        }
        let field = |name: &str| -> Result<Option<A::Set>, ApiError> {
            match mv.get(name) {
                None | Some(Value::Null) => Ok(None),
                Some(v) => self
                    .arena
                    .decode(v)
                    .map(Some)
                    .map_err(|e| ApiError::new(StatusCode::UNPROCESSABLE_ENTITY, "illegal_move", format!("{name}: {e}"))),
            }
        };
        match self.human {
            Role::Beta => {
                let v = field("v")?.ok_or_else(|| ApiError::bad("beta moves need \"v\""))?;
                let w = field("w")?;
                self.game.submit_beta(&self.arena, BetaMove { v, w }, Vec::new())?;
            }
            Role::Alpha => {
                let u = field("u")?.ok_or_else(|| ApiError::bad("alpha moves need \"u\""))?;
                self.game.submit_alpha(&self.arena, u, Vec::new())?;
            }
        }
        // engine answers, then opens the next round when it is β
        self.engine_turn()?;
        self.engine_turn()?;
        Ok(json!({
            "state": self.state(),
            "annotations": self.annotations(),
            "verdict": self.verdict(),
        }))
    }
}

#[derive(Debug, Deserialize)]
struct CreateRequest {
    backend: String,
    kind: GameKind,
    rule: WinRule,
    human_role: Role,
    engine_strategy: String,
    #[serde(default)]
    seed: u64,
    /// Sorgenfrey root interval; defaults to `[0, 1)`.
    #[serde(default)]
    root: Option<SInterval>,
}

fn build_session(id: u64, req: CreateRequest) -> Result<Box<dyn GameSession>, ApiError> {
    if req.rule.needs_side_sets() && req.kind == GameKind::BM {
        return Err(ApiError::from(GameError::RuleMismatch {
            rule: req.rule,
            kind: req.kind,
        }));
    }
    let unknown = |e: String| ApiError::bad(e);
    if req.backend == "sorgenfrey" {
        let arena = SorgenfreyArena::new(req.root.unwrap_or_else(crate::sorgenfrey::unit_interval));
        let engine = match req.human_role {
            Role::Alpha => Engine::Beta(sorgenfrey_beta(&req.engine_strategy, &arena, req.kind, req.seed).map_err(unknown)?),
            Role::Beta => Engine::Alpha(sorgenfrey_alpha(&req.engine_strategy, req.kind, req.seed).map_err(unknown)?),
        };
        return start(Session {
            id,
            backend: req.backend,
            arena,
            rule: req.rule,
            human: req.human_role,
            engine,
            game: Match::new(req.kind),
        });
    }
    let space = catalog_space(&req.backend)
        .ok_or_else(|| ApiError::new(StatusCode::NOT_FOUND, "unknown_backend", format!("no space named {:?}", req.backend)))?;
    let engine = match req.human_role {
        Role::Alpha => Engine::Beta(finite_beta(&req.engine_strategy, &space, req.kind, req.seed).map_err(unknown)?),
        Role::Beta => Engine::Alpha(finite_alpha(&req.engine_strategy, &space, req.kind, req.seed).map_err(unknown)?),
    };
    start(Session {
        id,
        backend: req.backend,
        arena: space,
        rule: req.rule,
        human: req.human_role,
        engine,
        game: Match::new(req.kind),
    })
}

fn start<A: Codec + 'static>(mut s: Session<A>) -> Result<Box<dyn GameSession>, ApiError> {
    s.engine_turn()?;
    Ok(Box::new(s))
}

type SessionHandle = Arc<Mutex<Box<dyn GameSession>>>;

#[derive(Clone, Default)]
pub struct AppState {
    sessions: Arc<RwLock<HashMap<u64, SessionHandle>>>,
    next_id: Arc<AtomicU64>,
}

impl AppState {
    fn get(&self, id: &str) -> Result<SessionHandle, ApiError> {
        let not_found = || ApiError::new(StatusCode::NOT_FOUND, "not_found", format!("no session {id}"));
        let id: u64 = id.parse().map_err(|_| not_found())?;
        self.sessions
            .read()
            .expect("session map lock")
            .get(&id)
            .cloned()
            .ok_or_else(not_found)
    }
}

async fn create_session(State(st): State<AppState>, body: Json<Value>) -> Result<Json<Value>, ApiError> {
    let req: CreateRequest = serde_json::from_value(body.0).map_err(|e| ApiError::bad(e.to_string()))?;
    let id = st.next_id.fetch_add(1, Ordering::Relaxed) + 1;
    let session = build_session(id, req)?;
    let state = session.state();
    st.sessions
        .write()
        .expect("session map lock")
        .insert(id, Arc::new(Mutex::new(session)));
    Ok(Json(json!({"session_id": id.to_string(), "state": state})))
}

async fn post_move(
    State(st): State<AppState>,
    Path(id): Path<String>,
    body: Json<Value>,
) -> Result<Json<Value>, ApiError> {
    let handle = st.get(&id)?;
    let mv = body.0.get("move").cloned().ok_or_else(|| ApiError::bad("body needs \"move\""))?;
    let mut session = handle.lock().expect("session lock");
    session.play_move(&mv).map(Json)
}

async fn get_session(State(st): State<AppState>, Path(id): Path<String>) -> Result<Json<Value>, ApiError> {
    let handle = st.get(&id)?;
    let session = handle.lock().expect("session lock");
    Ok(Json(session.state()))
}

fn space_summary(name: &str, space: &FiniteSpace) -> Value {
    json!({
        "id": name,
        "points": space.len(),
        "min_nbhds": space.min_nbhds().iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
        "opens": nonempty_opens(space).iter().enumerate()
            .map(|(id, o)| json!({"id": id, "points": o.to_vec()}))
            .collect::<Vec<_>>(),
    })
}

async fn catalog_spaces() -> Json<Value> {
    let spaces: Vec<Value> = space_catalog().iter().map(|(n, s)| space_summary(n, s)).collect();
    Json(json!({"format": 1, "spaces": spaces}))
}

async fn check_delta_baire(body: Json<Value>) -> Result<Json<Value>, ApiError> {
    let space = match body.0.get("space") {
        Some(Value::String(name)) => catalog_space(name)
            .ok_or_else(|| ApiError::new(StatusCode::NOT_FOUND, "unknown_backend", format!("no space named {name:?}")))?,
        Some(v) => serde_json::from_value::<FiniteSpace>(v.clone()).map_err(|e| ApiError::bad(e.to_string()))?,
        None => return Err(ApiError::bad("body needs \"space\"")),
    };
    Ok(Json(space_report(&space)))
}

/// The checks `space check` prints, as JSON.
pub fn space_report(space: &FiniteSpace) -> Value {
    let witness = (!space.is_empty())
        .then(|| delta_baire_witness(&minimal_semi_nbhd(space)))
        .flatten();
    json!({
        "format": 1,
        "points": space.len(),
        "regular": space.is_regular(),
        "baire": is_baire(space),
        "delta_baire": is_delta_baire(space),
        "witness": witness,
    })
}

pub fn router() -> Router {
    Router::new()
        .route("/api/session", post(create_session))
        .route("/api/session/{id}", get(get_session))
        .route("/api/session/{id}/move", post(post_move))
        .route("/api/catalog/spaces", get(catalog_spaces))
        .route("/api/check/delta-baire", post(check_delta_baire))
        .with_state(AppState::default())
}

pub async fn serve(port: u16) -> std::io::Result<()> {
    let addr = SocketAddr::from(([127, 0, 0, 1], port));
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{addr}");
    axum::serve(listener, router()).await
}
