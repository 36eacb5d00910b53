//! Drives the session API in-process: create a session, move, read it back.
//!
//! `baire-lab serve --port 8080` serves the same router over TCP.

use axum::body::Body;
use axum::http::Request;
use baire_lab::service::router;
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

async fn call(app: &axum::Router, method: &str, uri: &str, body: Value) -> Value {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(Body::from(body.to_string()))
        .unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    serde_json::from_slice(&bytes).unwrap()
}

fn main() {
    tokio::runtime::Runtime::new().unwrap().block_on(async {
        let app = router();
        let created = call(
            &app,
            "POST",
            "/api/session",
            json!({"backend": "sierpinski", "kind": "BM", "rule": "i", "human_role": "alpha", "engine_strategy": "copy"}),
        )
        .await;
        let id = created["session_id"].as_str().unwrap().to_string();
        println!("pending: {}", created["state"]["pending"]);

        let moved = call(&app, "POST", &format!("/api/session/{id}/move"), json!({"move": {"u": [0]}})).await;
        println!("verdict: {}", moved["verdict"]);
        let err = call(&app, "POST", &format!("/api/session/{id}/move"), json!({"move": {"u": [1]}})).await;
        println!("error: {err}");
        let report = call(&app, "POST", "/api/check/delta-baire", json!({"space": "chain-3"})).await;
        println!("chain-3: {report}");
    });
}
