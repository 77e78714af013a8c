use std::io::Write;

use ksf_api::{router, router_with_assets, AppState};
use ksf_core::store::{load_snapshot, save_snapshot, PropertyGraph};

use crate::{CliConfig, Failure};

pub fn run(config: CliConfig) -> Result<u8, Failure> {
    let parent = match config.data_file.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => std::path::PathBuf::from("."),
    };
    if !parent.is_dir() {
        return Err(Failure::new(3, format!("directory {} does not exist", parent.display())));
    }
    let graph = if config.data_file.exists() {
        load_snapshot(&config.data_file)?
    } else {
        tracing::info!(path = %config.data_file.display(), "no snapshot yet, starting empty");
        PropertyGraph::new()
    };

    let runtime = tokio::runtime::Runtime::new().map_err(|e| Failure::new(3, e.to_string()))?;
    let state = AppState::new(graph, config.cap);
    let app = match config.assets.clone() {
        Some(dir) => router_with_assets(state.clone(), dir),
        None => router(state.clone()),
    };
    runtime.block_on(async {
        let listener = tokio::net::TcpListener::bind(config.listen)
            .await
            .map_err(|e| Failure::new(3, format!("cannot bind {}: {e}", config.listen)))?;
        let local = listener.local_addr().map_err(|e| Failure::new(3, e.to_string()))?;
        println!("listening on {local}");
        let _ = std::io::stdout().flush();
        tracing::info!(%local, level = %config.log_level, "serving");
        axum::serve(listener, app)
            .with_graceful_shutdown(shutdown_signal())
            .await
            .map_err(|e| Failure::new(3, e.to_string()))
    })?;

    save_snapshot(&state.snapshot(), &config.data_file)?;
    tracing::info!(path = %config.data_file.display(), "snapshot saved");
    Ok(0)
}

async fn shutdown_signal() {
    let interrupt = async {
        let _ = tokio::signal::ctrl_c().await;
    };
    #[cfg(unix)]
    let terminate = async {
        match tokio::signal::unix::signal(tokio::signal::unix::SignalKind::terminate()) {
            Ok(mut s) => {
                s.recv().await;
            }
            Err(_) => std::future::pending::<()>().await,
        }
    };
    #[cfg(not(unix))]
    let terminate = std::future::pending::<()>();
    tokio::select! {
        _ = interrupt => {},
        _ = terminate => {},
    }
}
