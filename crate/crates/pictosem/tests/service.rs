mod common;

use std::sync::Arc;

use axum::body::Body;
use axum::http::{Method, Request, StatusCode};
use http_body_util::BodyExt;
use pictosem::service::router;
use serde_json::Value;
use tower::ServiceExt;

async fn call(method: Method, uri: &str, body: &str) -> (StatusCode, Value) {
    let app = router(Arc::new(common::resources()));
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(Body::from(body.to_string()))
        .unwrap();
    let resp = app.oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    (status, serde_json::from_slice(&bytes).unwrap_or(Value::Null))
}

#[tokio::test]
async fn health() {
    let (status, body) = call(Method::GET, "/health", "").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body, serde_json::json!({"status": "ok"}));
}

#[tokio::test]
async fn symbols_project_the_lexicon() {
    let (status, body) = call(Method::GET, "/symbols", "").await;
    assert_eq!(status, StatusCode::OK);
    let list = body.as_array().unwrap();
    assert_eq!(list.len(), common::resources().lexicon.symbols().len());
    let eat = list.iter().find(|s| s["id"] == "eat").unwrap();
    assert_eq!(eat["taxeme"], "INGESTION");
    assert_eq!(eat["domain"], "ACTIONS");
    assert_eq!(eat["predicative"], true);
    assert_eq!(eat["gloss"], "eat");
    assert_eq!(eat["icon"], "icons/eat.svg");
    let meat = list.iter().find(|s| s["id"] == "meat").unwrap();
    assert_eq!(meat["predicative"], false);
}

#[tokio::test]
async fn analyze_returns_network_and_sentence() {
    let (status, body) = call(Method::POST, "/analyze", r#"{"sequence":["i","eat","meat"]}"#).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["network"]["arcs"].as_array().unwrap().len(), 2);
    assert_eq!(body["sentence"], "Je mange la viande");
    assert_eq!(body["unattached"], serde_json::json!([]));
    let rejected = body["rejected_candidates"].as_array().unwrap();
    assert!(rejected.iter().any(|r| r["case"] == "instrument"));
    assert!(rejected.iter().all(|r| r["value"].as_f64().unwrap() <= 0.25));
}

#[tokio::test]
async fn overrides_apply() {
    let (_, body) =
        call(Method::POST, "/analyze", r#"{"sequence":["i","eat","meat"],"threshold":1.0}"#).await;
    assert_eq!(body["network"]["arcs"], serde_json::json!([]));
    assert_eq!(body["sentence"], Value::Null);
    assert_eq!(body["unattached"], serde_json::json!([0, 1, 2]));
    let (_, body) = call(Method::POST, "/analyze", r#"{"sequence":["i","eat","meat"],"locality":1.0}"#).await;
    assert_eq!(body["network"]["arcs"][0]["value"], 1.0);
}

#[tokio::test]
async fn transfer_returns_sentence() {
    let (status, body) = call(Method::POST, "/transfer", r#"{"sequence":["fork","i","eat"]}"#).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body, serde_json::json!({"sentence": "Je mange avec la fourchette"}));
    let (status, body) = call(Method::POST, "/transfer", r#"{"sequence":["doll","sleep"]}"#).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert!(body["error"].is_string());
}

#[tokio::test]
async fn bad_requests() {
    for body in [
        r#"{"sequence":[]}"#,
        r#"{"sequence":["i","unicorn"]}"#,
        r#"{"sequence":["i"],"locality":0}"#,
        r#"{"sequence":["i"],"locality":1.5}"#,
        r#"{"seq":["i"]}"#,
        "not json",
    ] {
        for route in ["/analyze", "/transfer"] {
            let (status, reply) = call(Method::POST, route, body).await;
            assert_eq!(status, StatusCode::BAD_REQUEST, "{route} {body}");
            assert!(reply["error"].is_string(), "{route} {body}");
        }
    }
}
