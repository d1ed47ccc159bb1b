//! HTTP API.
//!
//! | route            | body                                   | reply                         |
//! |------------------|----------------------------------------|-------------------------------|
//! | `GET /symbols`   |                                        | symbol list                   |
//! | `POST /analyze`  | `{"sequence": [...], "threshold"?, "locality"?}` | network, sentence, rejected candidates, unattached positions |
//! | `POST /transfer` | same                                   | `{"sentence": "..."}`         |
//! | `GET /health`    |                                        | `{"status": "ok"}`            |
//!
//! Malformed requests get status 400 and `{"error": "..."}`. A network that
//! cannot be realized makes `/transfer` answer 422.

use std::net::SocketAddr;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::State;
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use pictosem_core::{analyze_detailed, realize, AnalysisError, AnalyzerConfig, Utterance};
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::network_io::network_json;
use crate::resources::{analyzer_config, Resources};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalyzeRequest {
    pub sequence: Vec<String>,
    #[serde(default)]
    pub threshold: Option<f64>,
    #[serde(default)]
    pub locality: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct RejectedCandidate {
    pub head: usize,
    pub case: String,
    pub dep: usize,
    pub value: f64,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeResponse {
    pub network: Box<RawValue>,
    pub sentence: Option<String>,
    pub rejected_candidates: Vec<RejectedCandidate>,
    pub unattached: Vec<usize>,
}

#[derive(Serialize)]
struct SymbolInfo<'a> {
    id: &'a str,
    gloss: &'a str,
    taxeme: &'a str,
    domain: &'a str,
    predicative: bool,
    icon: Option<&'a str>,
}

fn json(status: StatusCode, body: String) -> Response {
    (status, [(header::CONTENT_TYPE, "application/json")], body).into_response()
}

fn error(status: StatusCode, message: impl std::fmt::Display) -> Response {
    json(status, serde_json::json!({ "error": message.to_string() }).to_string())
}

fn parse_request(body: &[u8]) -> Result<(Utterance, AnalyzerConfig), Box<Response>> {
    let req: AnalyzeRequest =
        serde_json::from_slice(body).map_err(|e| Box::new(error(StatusCode::BAD_REQUEST, e)))?;
    if req.sequence.is_empty() {
        return Err(Box::new(error(StatusCode::BAD_REQUEST, AnalysisError::EmptyUtterance)));
    }
    let config = analyzer_config(req.threshold, req.locality)
        .map_err(|e| Box::new(error(StatusCode::BAD_REQUEST, e)))?;
    Ok((Utterance::new(req.sequence), config))
}

/// Build the `/analyze` reply. `Err` carries the message for a 400.
pub fn analyze_response(
    resources: &Resources,
    utterance: &Utterance,
    config: &AnalyzerConfig,
) -> Result<AnalyzeResponse, AnalysisError> {
    let analysis = analyze_detailed(&resources.lexicon, utterance, config)?;
    let net = &analysis.network;
    let sentence = realize(net, &resources.dictionary, &resources.templates).ok().map(|s| s.text);
    let rejected_candidates = analysis
        .rejected()
        .map(|c| RejectedCandidate {
            head: c.predicate_pos,
            case: c.case_label.clone(),
            dep: c.filler_pos,
            value: c.damped_value,
        })
        .collect();
    let unattached = net.unattached_vertices().iter().map(|v| v.pos).collect();
    let network = RawValue::from_string(network_json(net)).expect("canonical JSON is valid");
    Ok(AnalyzeResponse { network, sentence, rejected_candidates, unattached })
}

async fn symbols(State(res): State<Arc<Resources>>) -> Response {
    let list: Vec<_> = res
        .lexicon
        .symbols()
        .iter()
        .map(|s| {
            let (taxeme, domain) = res.lexicon.lineage(&s.id).expect("resolved at load");
            SymbolInfo {
                id: &s.id,
                gloss: &s.gloss,
                taxeme: &taxeme.name,
                domain: &domain.name,
                predicative: s.is_predicative(),
                icon: s.icon.as_deref(),
            }
        })
        .collect();
    json(StatusCode::OK, serde_json::to_string(&list).expect("symbol lists serialize"))
}

async fn analyze(State(res): State<Arc<Resources>>, body: Bytes) -> Response {
    let (utterance, config) = match parse_request(&body) {
        Ok(r) => r,
        Err(resp) => return *resp,
    };
    match analyze_response(&res, &utterance, &config) {
        Ok(reply) => json(StatusCode::OK, serde_json::to_string(&reply).expect("replies serialize")),
        Err(e) => error(StatusCode::BAD_REQUEST, e),
    }
}

async fn transfer(State(res): State<Arc<Resources>>, body: Bytes) -> Response {
    let (utterance, config) = match parse_request(&body) {
        Ok(r) => r,
        Err(resp) => return *resp,
    };
    let network = match pictosem_core::analyze(&res.lexicon, &utterance, &config) {
        Ok(n) => n,
        Err(e) => return error(StatusCode::BAD_REQUEST, e),
    };
    match realize(&network, &res.dictionary, &res.templates) {
        Ok(s) => json(StatusCode::OK, serde_json::json!({ "sentence": s.text }).to_string()),
        Err(e) => error(StatusCode::UNPROCESSABLE_ENTITY, e),
    }
}

async fn health() -> Response {
    json(StatusCode::OK, r#"{"status":"ok"}"#.into())
}

pub fn router(resources: Arc<Resources>) -> Router {
    Router::new()
        .route("/symbols", get(symbols))
        .route("/analyze", post(analyze))
        .route("/transfer", post(transfer))
        .route("/health", get(health))
        .with_state(resources)
}

pub async fn serve(resources: Arc<Resources>, addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(resources)).await
}
